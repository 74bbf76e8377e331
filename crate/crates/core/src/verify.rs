//! Exhaustive invariant sweeps shared by the CLI and the test suites.
//!
//! Each sweep returns a [`Check`]: a name, how many instances were examined,
//! and a description of every failure.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{
    derived_odd, e_odd_pt, f_odd_pt, highest_weight_vectors, s_action, s_word, verify_gl_axioms,
    verify_q_axioms, Crystal, CrystalGraph, Direction, FactorizationCrystal, Label, Variant, Weight,
};
use crate::fpf::{enumerate_factorizations, enumerate_words, word_to_involution, FpfInvolution};
use crate::insertion::{
    insert_factorization_sp, insert_word_sp, reverse_factorization_sp, reverse_insert_sp, InsertionPair,
};
use crate::orthogonal::{enumerate_factorizations_o, insert_factorization_o, word_to_involution_o, Involution};
use crate::relations::ck_neighbors;
use crate::tableau::{IncreasingShiftedTableau, PrimedTableau};
use crate::word::Factorization;

// Keep failure lists readable when something is badly broken.
const MAX_REPORTED: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), checked: 0, failures: Vec::new(), failure_count: 0 }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg.into());
        }
    }

    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    pub fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(f);
            }
        }
    }

    /// Merge per-instance checks that share this name.
    pub fn merged(name: impl Into<String>, parts: impl IntoIterator<Item = Check>) -> Self {
        let mut c = Check::new(name);
        for p in parts {
            c.merge(p);
        }
        c
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked, {} failures)", self.name, self.checked, self.failure_count)?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

/// Insertion then reverse insertion is the identity on every word for `z`,
/// and distinct words give distinct pairs.
pub fn check_word_bijection(z: &FpfInvolution) -> Check {
    let mut c = Check::new(format!("word bijection [{z}]"));
    let mut seen: HashMap<InsertionPair, String> = HashMap::new();
    for w in enumerate_words(z) {
        match insert_word_sp(&w) {
            Ok(pair) => {
                let back = reverse_insert_sp(&pair.insertion, &pair.recording);
                c.expect(back.as_ref() == Ok(&w), || format!("{w}: reverse gave {back:?}"));
                if let Some(prev) = seen.insert(pair, w.to_string()) {
                    c.fail(format!("{w} and {prev} share (P,Q)"));
                }
            }
            Err(e) => {
                c.checked += 1;
                c.fail(format!("{w}: {e}"));
            }
        }
    }
    c
}

/// Round trip on `RF^m_FPF(z)`, plus the image: for every insertion tableau
/// `P` that occurs, the recording tableaux are exactly the primed tableaux of
/// its shape with entries at most `m`.
pub fn check_factorization_bijection(z: &FpfInvolution, m: usize) -> Check {
    let mut c = Check::new(format!("factorization bijection [{z} m={m}]"));
    let mut by_p: BTreeMap<IncreasingShiftedTableau, BTreeSet<PrimedTableau>> = BTreeMap::new();
    for f in enumerate_factorizations(z, m) {
        match insert_factorization_sp(&f) {
            Ok(pair) => {
                c.expect(pair.recording.validate().is_ok(), || format!("{f}: Q is not a primed tableau"));
                let back = reverse_factorization_sp(&pair.insertion, &pair.recording, m);
                c.expect(back.as_ref() == Ok(&f), || format!("{f}: reverse gave {back:?}"));
                if !by_p.entry(pair.insertion).or_default().insert(pair.recording) {
                    c.fail(format!("{f}: (P,Q) repeated"));
                }
            }
            Err(e) => {
                c.checked += 1;
                c.fail(format!("{f}: {e}"));
            }
        }
    }
    for (p, qs) in by_p {
        let all: BTreeSet<PrimedTableau> = PrimedTableau::enumerate(&p.shape(), m as u32).into_iter().collect();
        c.expect(all == qs, || {
            format!("P={:?}: image has {} recording tableaux, PT_m(shape) has {}", p.rows(), qs.len(), all.len())
        });
    }
    c
}

/// Coxeter-Knuth moves preserve the insertion tableau and the involution.
pub fn check_ck_invariance(z: &FpfInvolution, max_len: usize) -> Check {
    let mut c = Check::new(format!("CK invariance [{z}]"));
    for w in enumerate_words(z) {
        if w.len() > max_len {
            continue;
        }
        let p = insert_word_sp(&w).map(|pair| pair.insertion);
        for v in ck_neighbors(&w) {
            let same_z = word_to_involution(&v).is_ok_and(|y| &y == z);
            c.expect(same_z, || format!("CK neighbour {v} of {w} is not a word for z"));
            let q = insert_word_sp(&v).map(|pair| pair.insertion);
            c.expect(p.is_ok() && p == q, || format!("P({w}) != P({v})"));
        }
    }
    c
}

fn insertion_of(variant: Variant, f: &Factorization) -> Option<InsertionPair> {
    match variant {
        Variant::Sp => insert_factorization_sp(f).ok(),
        Variant::O => insert_factorization_o(f).ok(),
    }
}

/// Which crystal-level checks to run on a graph.
#[derive(Debug, Clone, Copy)]
pub struct CrystalChecks {
    pub odd_tableau_commutation: bool,
    pub weyl_group: bool,
}

/// Every crystal-level invariant for one graph. `fault` deletes one edge
/// first, which the adjunction axioms must notice.
pub fn check_crystal_graph(
    g: &CrystalGraph<Factorization>,
    variant: Variant,
    checks: CrystalChecks,
    tag: &str,
) -> Vec<Check> {
    let m = g.rank();
    let mut out = Vec::new();

    let mut gl = Check::new(format!("gl axioms [{tag}]"));
    gl.checked = g.len();
    verify_gl_axioms(g).into_iter().for_each(|v| gl.fail(v.to_string()));
    out.push(gl);

    let mut q = Check::new(format!("q axioms [{tag}]"));
    q.checked = g.len();
    verify_q_axioms(g).into_iter().for_each(|v| q.fail(v.to_string()));
    out.push(q);

    let mut closure = Check::new(format!("operator closure [{tag}]"));
    closure.checked = g.len();
    for (s, l, t) in g.escapes() {
        closure.fail(format!("{s} -{l}-> {t} leaves the vertex set"));
    }
    out.push(closure);

    let pairs: HashMap<Factorization, Option<InsertionPair>> =
        g.vertices().par_iter().map(|v| (v.clone(), insertion_of(variant, v))).collect();
    let p_of = |v: &Factorization| pairs[v].as_ref().map(|p| p.insertion.clone());
    for (kind, comps) in [("gl", g.gl_components()), ("q", g.q_components())] {
        let mut c = Check::new(format!("constant P on {kind}-components [{tag}]"));
        for comp in &comps {
            let p0 = p_of(&comp[0]);
            c.expect(p0.is_some() && comp.iter().all(|v| p_of(v) == p0), || {
                format!("component of {} has several insertion tableaux", comp[0])
            });
        }
        out.push(c);
    }

    let mut hw = Check::new(format!("one highest weight per q-component [{tag}]"));
    match highest_weight_vectors(g) {
        Ok(high) => {
            let high: BTreeSet<Factorization> = high.into_iter().collect();
            for comp in g.q_components() {
                let n = comp.iter().filter(|v| high.contains(v)).count();
                hw.expect(n == 1, || format!("component of {} has {n} highest weight vectors", comp[0]));
            }
        }
        Err(e) => hw.fail(e.to_string()),
    }
    out.push(hw);

    let mut injective = Check::new(format!("insertion injective [{tag}]"));
    let mut seen: HashMap<&InsertionPair, &Factorization> = HashMap::new();
    for v in g.vertices() {
        match &pairs[v] {
            Some(p) => injective.expect(seen.insert(p, v).is_none(), || format!("{v} repeats a pair")),
            None => injective.fail(format!("{v}: insertion failed")),
        }
    }
    out.push(injective);

    if checks.odd_tableau_commutation {
        let mut c = Check::new(format!("odd operators commute with insertion [{tag}]"));
        for v in g.vertices() {
            let Some(pair) = &pairs[v] else { continue };
            let q = &pair.recording;
            let rec = |x: Option<Factorization>| x.map(|x| pairs.get(&x).cloned().flatten().map(|p| p.recording));
            let f_side = rec(g.f(v, Label::Odd));
            c.expect(f_side == f_odd_pt(q).map(Some), || format!("f~1 at {v}"));
            let e_side = rec(g.e(v, Label::Odd));
            c.expect(e_side == e_odd_pt(q).map(Some), || format!("e~1 at {v}"));
            if let Some(x) = g.f(v, Label::Odd) {
                c.expect(x.word().first().is_some_and(|&a| a % 2 == 0), || format!("f~1 {v} = {x} starts odd"));
            }
        }
        out.push(c);
    }

    if checks.weyl_group {
        let mut c = Check::new(format!("Weyl group action [{tag}]"));
        for v in g.vertices() {
            for i in 1..m {
                let twice = s_action(g, v, i).and_then(|x| s_action(g, &x, i));
                c.expect(twice.as_ref() == Ok(v), || format!("S_{i}^2 {v} = {twice:?}"));
            }
            for i in 1..m.saturating_sub(1) {
                let a = s_word(g, v, &[i, i + 1, i]);
                let b = s_word(g, v, &[i + 1, i, i + 1]);
                c.expect(a.is_ok() && a == b, || format!("braid relation fails at {v} for i={i}"));
            }
            let wt = g.weight(v);
            for i in 2..m {
                for (dir, sign) in [(Direction::Raise, 1), (Direction::Lower, -1)] {
                    match derived_odd(g, v, i, dir) {
                        Ok(Some(x)) => {
                            let a = Weight::alpha(m, i);
                            let want = if sign > 0 { wt.plus(&a) } else { wt.minus(&a) };
                            c.expect(g.weight(&x) == want, || format!("derived odd {i} {dir:?} at {v}"));
                        }
                        Ok(None) => {}
                        Err(e) => c.fail(format!("{v}: {e}")),
                    }
                }
            }
        }
        out.push(c);
    }
    out
}

/// All crystal checks on `RF^m_FPF(z)`.
pub fn check_crystal_sp(z: &FpfInvolution, m: usize, fault: bool) -> Vec<Check> {
    let mut g = crate::crystal::build_graph(z, m);
    inject(&mut g, fault);
    let checks = CrystalChecks { odd_tableau_commutation: true, weyl_group: true };
    check_crystal_graph(&g, Variant::Sp, checks, &format!("{z} m={m}"))
}

/// All crystal checks on `RF^m(z)`.
pub fn check_crystal_o(z: &Involution, m: usize, fault: bool) -> Vec<Check> {
    let mut g = CrystalGraph::from_crystal(&FactorizationCrystal::o(z, m));
    inject(&mut g, fault);
    let checks = CrystalChecks { odd_tableau_commutation: false, weyl_group: true };
    let mut out = check_crystal_graph(&g, Variant::O, checks, &format!("{z} m={m}"));
    let mut valid = Check::new(format!("orthogonal recording tableaux are primed tableaux [{z} m={m}]"));
    let mut reading = Check::new(format!("orthogonal insertion tableau reads as a word for z [{z} m={m}]"));
    for f in enumerate_factorizations_o(z, m) {
        let pair = insert_factorization_o(&f);
        let ok = pair.as_ref().is_ok_and(|p| p.recording.validate().is_ok());
        valid.expect(ok, || format!("{f}"));
        let same = pair.is_ok_and(|p| word_to_involution_o(&p.insertion.row_reading_word()).is_ok_and(|y| &y == z));
        reading.expect(same, || format!("{f}"));
    }
    out.push(valid);
    out.push(reading);
    out
}

// Delete the first edge, so the remaining e-edge is orphaned.
fn inject(g: &mut CrystalGraph<Factorization>, fault: bool) {
    if !fault {
        return;
    }
    if let Some((s, l, _)) = g.edges().into_iter().next() {
        g.remove_f_edge(&s, l);
    }
}

/// Merge checks that differ only in their `[instance]` tag, keeping
/// first-seen order.
pub fn summarize(checks: Vec<Check>) -> Vec<Check> {
    let stem_of = |name: &str| name.split(" [").next().unwrap_or(name).to_string();
    let mut order: Vec<String> = Vec::new();
    let mut by: HashMap<String, Check> = HashMap::new();
    for c in checks {
        let stem = stem_of(&c.name);
        match by.get_mut(&stem) {
            Some(acc) => acc.merge(c),
            None => {
                order.push(stem.clone());
                let mut acc = Check::new(stem.clone());
                acc.merge(c);
                by.insert(stem, acc);
            }
        }
    }
    order.into_iter().map(|s| by.remove(&s).unwrap()).collect()
}
