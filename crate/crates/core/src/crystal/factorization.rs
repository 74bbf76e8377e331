//! Crystal operators on increasing factorizations.

use std::collections::BTreeSet;

use super::{Crystal, CrystalGraph, FiniteCrystal, Label, Weight};
use crate::fpf::{enumerate_factorizations, FpfInvolution};
use crate::orthogonal::{self, Involution};
use crate::word::{Factorization, Letter, Word};

/// Symplectic (FPF) or orthogonal setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Sp,
    O,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sp" => Ok(Variant::Sp),
            "o" => Ok(Variant::O),
            _ => Err(format!("unknown variant `{s}` (expected sp or o)")),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Sp => "sp",
            Variant::O => "o",
        })
    }
}

/// `wt(w^1 ... w^m) = Σ |w^i| ε_i`.
pub fn weight(f: &Factorization) -> Weight {
    Weight(f.blocks().iter().map(|b| b.len() as i64).collect())
}

/// Pair each `b` of `right`, largest first, with the smallest unpaired `a > b`
/// of `left`. Returns the unpaired letters `(L, R)` of each side.
pub fn pairing(left: &[Letter], right: &[Letter]) -> (Vec<Letter>, Vec<Letter>) {
    let mut free: BTreeSet<Letter> = left.iter().copied().collect();
    let mut unpaired_right = Vec::new();
    for &b in right.iter().rev() {
        match free.range(b + 1..).next().copied() {
            Some(a) => {
                free.remove(&a);
            }
            None => unpaired_right.push(b),
        }
    }
    unpaired_right.reverse();
    (free.into_iter().collect(), unpaired_right)
}

fn replace_pair(f: &Factorization, i: usize, left: BTreeSet<Letter>, right: BTreeSet<Letter>) -> Factorization {
    let mut blocks = f.blocks().to_vec();
    blocks[i - 1] = Word::from_unchecked(left.into_iter().collect());
    blocks[i] = Word::from_unchecked(right.into_iter().collect());
    Factorization::from_blocks_unchecked(blocks)
}

fn block_sets(f: &Factorization, i: usize) -> Option<(BTreeSet<Letter>, BTreeSet<Letter>)> {
    if i == 0 || i >= f.num_blocks() {
        return None;
    }
    let b = f.blocks();
    Some((b[i - 1].iter().copied().collect(), b[i].iter().copied().collect()))
}

/// Even lowering operator on blocks `i, i+1`.
pub fn f_even(f: &Factorization, i: usize) -> Option<Factorization> {
    let (mut left, mut right) = block_sets(f, i)?;
    let (l, _) = pairing(&f.blocks()[i - 1], &f.blocks()[i]);
    let c = *l.last()?;
    let s = (0..).find(|j| !left.contains(&(c + j + 1))).unwrap();
    left.remove(&c);
    if !right.insert(c + s) {
        return None;
    }
    Some(replace_pair(f, i, left, right))
}

/// Even raising operator on blocks `i, i+1`.
pub fn e_even(f: &Factorization, i: usize) -> Option<Factorization> {
    let (mut left, mut right) = block_sets(f, i)?;
    let (_, r) = pairing(&f.blocks()[i - 1], &f.blocks()[i]);
    let c = *r.first()?;
    let t = (0..c).find(|j| !right.contains(&(c - j - 1))).unwrap();
    right.remove(&c);
    let new = c.checked_sub(t).filter(|&x| x >= 1)?;
    if !left.insert(new) {
        return None;
    }
    Some(replace_pair(f, i, left, right))
}

/// Odd lowering operator; only the first two blocks change.
pub fn f_odd(f: &Factorization) -> Option<Factorization> {
    let (mut left, mut right) = block_sets(f, 1)?;
    let u: Vec<Letter> = left.iter().copied().collect();
    let u1 = *u.first()?;
    if right.first().is_some_and(|&v1| u1 >= v1) {
        return None;
    }
    match u.get(1) {
        Some(&u2) if u2 == u1 + 1 => {
            left.remove(&u2);
            right.insert(u1.checked_sub(1).filter(|&x| x >= 1)?);
        }
        _ => {
            left.remove(&u1);
            right.insert(u1);
        }
    }
    Some(replace_pair(f, 1, left, right))
}

/// Odd raising operator; only the first two blocks change.
pub fn e_odd(f: &Factorization) -> Option<Factorization> {
    let (mut left, mut right) = block_sets(f, 1)?;
    let v1 = *right.first()?;
    match left.first().copied() {
        None => {
            right.remove(&v1);
            left.insert(v1);
        }
        Some(u1) if u1 > v1 + 1 => {
            right.remove(&v1);
            left.insert(v1);
        }
        Some(u1) if u1 == v1 + 1 => {
            left.insert(u1 + 1);
            right.remove(&v1);
        }
        _ => return None,
    }
    Some(replace_pair(f, 1, left, right))
}

/// `RF^m(z)` with its q(m)-crystal operators.
#[derive(Debug, Clone)]
pub struct FactorizationCrystal {
    m: usize,
    variant: Variant,
    elements: Vec<Factorization>,
}

impl FactorizationCrystal {
    pub fn sp(z: &FpfInvolution, m: usize) -> Self {
        FactorizationCrystal { m, variant: Variant::Sp, elements: enumerate_factorizations(z, m) }
    }

    pub fn o(z: &Involution, m: usize) -> Self {
        FactorizationCrystal { m, variant: Variant::O, elements: orthogonal::enumerate_factorizations_o(z, m) }
    }

    /// Operators only, over an explicit element set.
    pub fn with_elements(m: usize, variant: Variant, elements: Vec<Factorization>) -> Self {
        FactorizationCrystal { m, variant, elements }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }
}

impl Crystal for FactorizationCrystal {
    type Elem = Factorization;

    fn rank(&self) -> usize {
        self.m
    }

    fn weight(&self, b: &Factorization) -> Weight {
        weight(b)
    }

    fn f(&self, b: &Factorization, label: Label) -> Option<Factorization> {
        match (label, self.variant) {
            (Label::Even(i), _) => f_even(b, i),
            (Label::Odd, Variant::Sp) => f_odd(b),
            (Label::Odd, Variant::O) => orthogonal::f_odd_o(b),
        }
    }

    fn e(&self, b: &Factorization, label: Label) -> Option<Factorization> {
        match (label, self.variant) {
            (Label::Even(i), _) => e_even(b, i),
            (Label::Odd, Variant::Sp) => e_odd(b),
            (Label::Odd, Variant::O) => orthogonal::e_odd_o(b),
        }
    }
}

impl FiniteCrystal for FactorizationCrystal {
    fn elements(&self) -> Vec<Factorization> {
        self.elements.clone()
    }
}

/// The crystal graph on `RF^m_FPF(z)`.
pub fn build_graph(z: &FpfInvolution, m: usize) -> CrystalGraph<Factorization> {
    CrystalGraph::from_crystal(&FactorizationCrystal::sp(z, m))
}
