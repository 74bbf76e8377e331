//! gl(n)- and q(n)-crystals.
//!
//! A crystal is anything implementing [`Crystal`]: a weight map and partial
//! Kashiwara operators for the even labels `1..n-1` and the odd label `~1`.
//! Finite crystals can be frozen into a [`CrystalGraph`], on which the axioms
//! are checked.

mod axioms;
mod emit;
mod factorization;
mod letters;
mod primed;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use axioms::{verify_gl_axioms, verify_q_axioms, AxiomViolation};
pub use emit::{GraphJson, JsonEdge};
pub use factorization::{
    build_graph, e_even, e_odd, f_even, f_odd, pairing, weight, FactorizationCrystal, Variant,
};
pub use letters::{standard_crystal, StandardCrystal, Tensor, TensorElem};
pub use primed::{e_odd_pt, f_odd_pt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("S_{label} ran into 0 at {element}; the crystal is not seminormal")]
    NotSeminormal { label: usize, element: String },
    #[error("label {0} is out of range")]
    BadLabel(String),
    #[error("derived odd operator index {index} needs 2 <= index <= {max}")]
    BadOddIndex { index: usize, max: usize },
}

/// Operator label: an even index `1..n-1` or the odd label `~1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Even(usize),
    Odd,
}

impl Label {
    /// `1, ..., n-1, ~1`.
    pub fn all(n: usize) -> Vec<Label> {
        let mut out: Vec<Label> = (1..n).map(Label::Even).collect();
        out.push(Label::Odd);
        out
    }

    pub fn evens(n: usize) -> Vec<Label> {
        (1..n).map(Label::Even).collect()
    }

    pub fn is_odd(self) -> bool {
        self == Label::Odd
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Even(i) => write!(f, "{i}"),
            Label::Odd => f.write_str("~1"),
        }
    }
}

impl FromStr for Label {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "~1" => Ok(Label::Odd),
            _ => match s.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(Label::Even(i)),
                _ => Err(CrystalError::BadLabel(s.to_string())),
            },
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Coefficients of `ε_1, ..., ε_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `α_i = ε_i - ε_{i+1}`.
    pub fn alpha(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.0[i - 1] = 1;
        w.0[i] = -1;
        w
    }

    /// `<wt, h_i> = wt_i - wt_{i+1}`.
    pub fn h(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }

    /// `<wt, k_i> = wt_i`.
    pub fn k(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Action of the simple reflection `s_i`.
    pub fn reflect(&self, i: usize) -> Weight {
        let mut w = self.clone();
        w.0.swap(i - 1, i);
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + fmt::Display;

    /// `n` for a gl(n)- or q(n)-crystal.
    fn rank(&self) -> usize;
    fn weight(&self, b: &Self::Elem) -> Weight;
    fn f(&self, b: &Self::Elem, label: Label) -> Option<Self::Elem>;
    fn e(&self, b: &Self::Elem, label: Label) -> Option<Self::Elem>;
}

/// A crystal with an explicit finite element set.
pub trait FiniteCrystal: Crystal {
    fn elements(&self) -> Vec<Self::Elem>;
}

// Chains longer than this can only come from a cycle.
const CHAIN_LIMIT: usize = 1 << 20;

/// `ε_i(b) = max{k : e_i^k b != 0}`.
pub fn epsilon<C: Crystal + ?Sized>(c: &C, b: &C::Elem, label: Label) -> usize {
    let mut k = 0;
    let mut cur = c.e(b, label);
    while let Some(x) = cur {
        k += 1;
        assert!(k < CHAIN_LIMIT, "e_{label} chain from {b} does not terminate");
        cur = c.e(&x, label);
    }
    k
}

/// `φ_i(b) = max{k : f_i^k b != 0}`.
pub fn phi<C: Crystal + ?Sized>(c: &C, b: &C::Elem, label: Label) -> usize {
    let mut k = 0;
    let mut cur = c.f(b, label);
    while let Some(x) = cur {
        k += 1;
        assert!(k < CHAIN_LIMIT, "f_{label} chain from {b} does not terminate");
        cur = c.f(&x, label);
    }
    k
}

/// The Weyl group action `S_i`.
pub fn s_action<C: Crystal + ?Sized>(c: &C, b: &C::Elem, i: usize) -> Result<C::Elem, CrystalError> {
    let h = c.weight(b).h(i);
    let label = Label::Even(i);
    let mut cur = b.clone();
    for _ in 0..h.unsigned_abs() {
        let next = if h >= 0 { c.f(&cur, label) } else { c.e(&cur, label) };
        cur = next.ok_or_else(|| CrystalError::NotSeminormal { label: i, element: b.to_string() })?;
    }
    Ok(cur)
}

/// `S_w` for `w = s_{j_1} s_{j_2} ... s_{j_k}`; the rightmost factor acts first.
pub fn s_word<C: Crystal + ?Sized>(c: &C, b: &C::Elem, word: &[usize]) -> Result<C::Elem, CrystalError> {
    word.iter().rev().try_fold(b.clone(), |x, &i| s_action(c, &x, i))
}

/// `w_i = s_2 ... s_i s_1 ... s_{i-1}`, the shortest element taking `α_i` to `α_1`.
pub fn w_word(i: usize) -> Vec<usize> {
    (2..=i).chain(1..i).collect()
}

/// Reduced word of the longest element of `S_n`.
pub fn w0_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Raise,
    Lower,
}

/// `e_ī = S_{w_i^{-1}} e_1̄ S_{w_i}` (resp. `f_ī`) for `2 <= i <= n-1`; `i = 1`
/// gives the odd operator itself.
pub fn derived_odd<C: Crystal + ?Sized>(
    c: &C,
    b: &C::Elem,
    i: usize,
    dir: Direction,
) -> Result<Option<C::Elem>, CrystalError> {
    let n = c.rank();
    if i == 0 || i >= n.max(2) {
        return Err(CrystalError::BadOddIndex { index: i, max: n.saturating_sub(1) });
    }
    let w = w_word(i);
    let w_inv: Vec<usize> = w.iter().rev().copied().collect();
    let x = s_word(c, b, &w)?;
    let y = match dir {
        Direction::Raise => c.e(&x, Label::Odd),
        Direction::Lower => c.f(&x, Label::Odd),
    };
    y.map(|y| s_word(c, &y, &w_inv)).transpose()
}

/// Frozen finite crystal. `f`-edges and `e`-edges are stored separately, so
/// the adjunction axiom is a real check on the operators that built them.
#[derive(Debug, Clone)]
pub struct CrystalGraph<V> {
    rank: usize,
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    weights: Vec<Weight>,
    f_edges: BTreeMap<(usize, Label), usize>,
    e_edges: BTreeMap<(usize, Label), usize>,
    escapes: Vec<(V, Label, V)>,
}

impl<V: Clone + Eq + Hash + Ord + fmt::Display> CrystalGraph<V> {
    /// Evaluates every operator on every element. Images outside the element
    /// set are recorded in [`CrystalGraph::escapes`] and dropped.
    pub fn from_crystal<C>(c: &C) -> Self
    where
        C: FiniteCrystal<Elem = V> + Sync,
        V: Send + Sync,
    {
        let mut vertices = c.elements();
        vertices.sort();
        vertices.dedup();
        let index: HashMap<V, usize> =
            vertices.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let labels = Label::all(c.rank());
        type Row<V> = (Weight, Vec<(Label, Option<V>, Option<V>)>);
        let rows: Vec<Row<V>> = vertices
            .par_iter()
            .map(|v| {
                let ops = labels.iter().map(|&l| (l, c.f(v, l), c.e(v, l))).collect();
                (c.weight(v), ops)
            })
            .collect();
        let mut g = CrystalGraph {
            rank: c.rank(),
            index,
            weights: Vec::with_capacity(vertices.len()),
            f_edges: BTreeMap::new(),
            e_edges: BTreeMap::new(),
            escapes: Vec::new(),
            vertices,
        };
        for (k, (wt, ops)) in rows.into_iter().enumerate() {
            g.weights.push(wt);
            for (l, f, e) in ops {
                for (img, edges) in [(f, &mut g.f_edges), (e, &mut g.e_edges)] {
                    let Some(img) = img else { continue };
                    match g.index.get(&img) {
                        Some(&t) => {
                            edges.insert((k, l), t);
                        }
                        None => g.escapes.push((g.vertices[k].clone(), l, img)),
                    }
                }
            }
        }
        g
    }

    /// Builds a graph from explicit data; `e`-edges are the reversed `f`-edges.
    pub fn from_edges(rank: usize, vertices: Vec<(V, Weight)>, edges: &[(V, Label, V)]) -> Self {
        let mut vertices = vertices;
        vertices.sort();
        let index: HashMap<V, usize> =
            vertices.iter().enumerate().map(|(k, (v, _))| (v.clone(), k)).collect();
        let mut f_edges = BTreeMap::new();
        let mut e_edges = BTreeMap::new();
        for (s, l, t) in edges {
            let (s, t) = (index[s], index[t]);
            f_edges.insert((s, *l), t);
            e_edges.insert((t, *l), s);
        }
        let (vertices, weights) = vertices.into_iter().unzip();
        CrystalGraph { rank, vertices, index, weights, f_edges, e_edges, escapes: Vec::new() }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &V) -> bool {
        self.index.contains_key(v)
    }

    /// Operator images that fell outside the vertex set.
    pub fn escapes(&self) -> &[(V, Label, V)] {
        &self.escapes
    }

    /// `f`-edges `(source, label, target)`, sorted by the serialized form.
    pub fn edges(&self) -> Vec<(V, Label, V)> {
        let mut out: Vec<(V, Label, V)> = self
            .f_edges
            .iter()
            .map(|(&(s, l), &t)| (self.vertices[s].clone(), l, self.vertices[t].clone()))
            .collect();
        out.sort_by_cached_key(|(s, l, t)| (s.to_string(), l.to_string(), t.to_string()));
        out
    }

    pub fn remove_f_edge(&mut self, v: &V, label: Label) -> bool {
        match self.index.get(v) {
            Some(&k) => self.f_edges.remove(&(k, label)).is_some(),
            None => false,
        }
    }

    fn components_by(&self, keep: impl Fn(Label) -> bool) -> Vec<Vec<V>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (&(s, l), &t) in self.f_edges.iter().chain(self.e_edges.iter()) {
            if keep(l) {
                let (a, b) = (find(&mut parent, s), find(&mut parent, t));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<V>> = BTreeMap::new();
        for k in 0..n {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(self.vertices[k].clone());
        }
        groups.into_values().collect()
    }

    /// Connected components under all labels.
    pub fn q_components(&self) -> Vec<Vec<V>> {
        self.components_by(|_| true)
    }

    /// Connected components under even labels only.
    pub fn gl_components(&self) -> Vec<Vec<V>> {
        self.components_by(|l| !l.is_odd())
    }
}

impl<V: Clone + Eq + Hash + Ord + fmt::Display> Crystal for CrystalGraph<V> {
    type Elem = V;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, b: &V) -> Weight {
        self.weights[self.index[b]].clone()
    }

    fn f(&self, b: &V, label: Label) -> Option<V> {
        let k = *self.index.get(b)?;
        self.f_edges.get(&(k, label)).map(|&t| self.vertices[t].clone())
    }

    fn e(&self, b: &V, label: Label) -> Option<V> {
        let k = *self.index.get(b)?;
        self.e_edges.get(&(k, label)).map(|&t| self.vertices[t].clone())
    }
}

impl<V: Clone + Eq + Hash + Ord + fmt::Display> FiniteCrystal for CrystalGraph<V> {
    fn elements(&self) -> Vec<V> {
        self.vertices.clone()
    }
}

/// Elements killed by every `e_i` and every odd `e_ī`, derived ones included.
pub fn highest_weight_vectors<C: FiniteCrystal + ?Sized>(c: &C) -> Result<Vec<C::Elem>, CrystalError> {
    let n = c.rank();
    let mut out = Vec::new();
    for b in c.elements() {
        if Label::all(n).into_iter().any(|l| c.e(&b, l).is_some()) {
            continue;
        }
        let mut killed = true;
        for i in 2..n {
            if derived_odd(c, &b, i, Direction::Raise)?.is_some() {
                killed = false;
                break;
            }
        }
        if killed {
            out.push(b);
        }
    }
    out.sort();
    Ok(out)
}

/// Elements `b` with `S_{w_0} b` a highest weight vector.
pub fn lowest_weight_vectors<C: FiniteCrystal + ?Sized>(c: &C) -> Result<Vec<C::Elem>, CrystalError> {
    let high = highest_weight_vectors(c)?;
    let w0 = w0_word(c.rank());
    let mut out = Vec::new();
    for b in c.elements() {
        if high.binary_search(&s_word(c, &b, &w0)?).is_ok() {
            out.push(b);
        }
    }
    out.sort();
    Ok(out)
}
