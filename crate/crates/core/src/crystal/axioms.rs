//! Axiom checks for finite gl(n)- and q(n)-crystals.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{epsilon, phi, Crystal, FiniteCrystal, Label, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    /// Short axiom tag such as `gl(1)` or `q(5i)`.
    pub axiom: &'static str,
    pub vertex: String,
    pub label: Label,
    pub detail: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] at {} label {}: {}", self.axiom, self.vertex, self.label, self.detail)
    }
}

struct Sink<'a, E: fmt::Display> {
    vertex: &'a E,
    out: Vec<AxiomViolation>,
}

impl<E: fmt::Display> Sink<'_, E> {
    fn check(&mut self, ok: bool, axiom: &'static str, label: Label, detail: impl FnOnce() -> String) {
        if !ok {
            self.out.push(AxiomViolation {
                axiom,
                vertex: self.vertex.to_string(),
                label,
                detail: detail(),
            });
        }
    }
}

fn shift(c: &impl Crystal, b_wt: &Weight, i: usize, sign: i64) -> Weight {
    let a = Weight::alpha(c.rank(), i);
    if sign > 0 {
        b_wt.plus(&a)
    } else {
        b_wt.minus(&a)
    }
}

fn gl_at<C: Crystal>(c: &C, b: &C::Elem, sink: &mut Sink<'_, C::Elem>) {
    let wt = c.weight(b);
    for i in 1..c.rank() {
        let l = Label::Even(i);
        let (eps, ph) = (epsilon(c, b, l) as i64, phi(c, b, l) as i64);
        sink.check(ph == eps + wt.h(i), "gl(1)", l, || {
            format!("phi={ph} but eps+<wt,h>={}", eps + wt.h(i))
        });
        if let Some(x) = c.e(b, l) {
            let (xe, xp) = (epsilon(c, &x, l) as i64, phi(c, &x, l) as i64);
            let xw = c.weight(&x);
            sink.check(xw == shift(c, &wt, i, 1), "gl(2)", l, || format!("wt(e b)={xw}"));
            sink.check(xe == eps - 1 && xp == ph + 1, "gl(2)", l, || {
                format!("eps/phi of e b are {xe}/{xp}, expected {}/{}", eps - 1, ph + 1)
            });
            sink.check(c.f(&x, l).as_ref() == Some(b), "gl(4)", l, || format!("f(e b) != b, e b = {x}"));
        }
        if let Some(x) = c.f(b, l) {
            let (xe, xp) = (epsilon(c, &x, l) as i64, phi(c, &x, l) as i64);
            let xw = c.weight(&x);
            sink.check(xw == shift(c, &wt, i, -1), "gl(3)", l, || format!("wt(f b)={xw}"));
            sink.check(xe == eps + 1 && xp == ph - 1, "gl(3)", l, || {
                format!("eps/phi of f b are {xe}/{xp}, expected {}/{}", eps + 1, ph - 1)
            });
            sink.check(c.e(&x, l).as_ref() == Some(b), "gl(4)", l, || format!("e(f b) != b, f b = {x}"));
        }
    }
}

fn q_at<C: Crystal>(c: &C, b: &C::Elem, sink: &mut Sink<'_, C::Elem>) {
    let n = c.rank();
    let wt = c.weight(b);
    let odd = Label::Odd;
    sink.check(wt.0.iter().all(|&x| x >= 0), "q(2)", odd, || format!("weight {wt} has a negative entry"));
    if let Some(x) = c.e(b, odd) {
        let xw = c.weight(&x);
        sink.check(xw == shift(c, &wt, 1, 1), "q(3)", odd, || format!("wt(e b)={xw}"));
        sink.check(c.f(&x, odd).as_ref() == Some(b), "q(4)", odd, || format!("f(e b) != b, e b = {x}"));
    }
    if let Some(x) = c.f(b, odd) {
        let xw = c.weight(&x);
        sink.check(xw == shift(c, &wt, 1, -1), "q(3)", odd, || format!("wt(f b)={xw}"));
        sink.check(c.e(&x, odd).as_ref() == Some(b), "q(4)", odd, || format!("e(f b) != b, f b = {x}"));
    }
    for i in 3..n {
        let l = Label::Even(i);
        type Op<'c, E> = Box<dyn Fn(&E) -> Option<E> + 'c>;
        let odd_ops: [(&str, Op<'_, C::Elem>); 2] =
            [("e~1", Box::new(|x| c.e(x, odd))), ("f~1", Box::new(|x| c.f(x, odd)))];
        let even_ops: [(&str, Op<'_, C::Elem>); 2] =
            [("e", Box::new(|x| c.e(x, l))), ("f", Box::new(|x| c.f(x, l)))];
        for (on, o) in &odd_ops {
            for (en, e) in &even_ops {
                let a = e(b).and_then(|x| o(&x));
                let z = o(b).and_then(|x| e(&x));
                sink.check(a == z, "q(5i)", l, || {
                    let show = |v: &Option<C::Elem>| v.as_ref().map_or("0".to_string(), |v| v.to_string());
                    format!("{on}({en}_{i} b)={} but {en}_{i}({on} b)={}", show(&a), show(&z))
                });
            }
        }
        if let Some(x) = c.e(b, odd) {
            let before = (epsilon(c, b, l), phi(c, b, l));
            let after = (epsilon(c, &x, l), phi(c, &x, l));
            sink.check(before == after, "q(5ii)", l, || {
                format!("eps/phi change from {before:?} to {after:?} under e~1")
            });
        }
    }
}

fn sweep<C, F>(c: &C, at: F) -> Vec<AxiomViolation>
where
    C: FiniteCrystal + Sync,
    C::Elem: Send + Sync,
    F: Fn(&C, &C::Elem, &mut Sink<'_, C::Elem>) + Sync,
{
    let elems = c.elements();
    let mut out: Vec<AxiomViolation> = elems
        .par_iter()
        .flat_map_iter(|b| {
            let mut sink = Sink { vertex: b, out: Vec::new() };
            at(c, b, &mut sink);
            sink.out
        })
        .collect();
    out.sort_by(|a, b| (&a.vertex, a.label, a.axiom).cmp(&(&b.vertex, b.label, b.axiom)));
    out
}

/// Checks the four gl(n)-crystal axioms at every element. Empty means pass.
pub fn verify_gl_axioms<C>(c: &C) -> Vec<AxiomViolation>
where
    C: FiniteCrystal + Sync,
    C::Elem: Send + Sync,
{
    sweep(c, gl_at)
}

/// The gl(n) axioms plus the odd conditions: nonnegative weights, odd weight
/// shift by `α_1`, odd adjunction, and for `3 <= i <= n-1` commutation of the
/// odd operators with `e_i, f_i` and preservation of `ε_i, φ_i`.
pub fn verify_q_axioms<C>(c: &C) -> Vec<AxiomViolation>
where
    C: FiniteCrystal + Sync,
    C::Elem: Send + Sync,
{
    sweep(c, |c, b, sink| {
        gl_at(c, b, sink);
        q_at(c, b, sink);
    })
}
