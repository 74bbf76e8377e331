//! Local moves on words and the equivalence relations they generate.
//!
//! * Coxeter-Knuth: `(a+1)a(a+1) ~ a(a+1)a`, `bac ~ bca`, `acb ~ cab` for `a < b < c`.
//! * Sp: commutations `ab ~ ba` (`|a-b| > 1`), braids `a(a+1)a ~ (a+1)a(a+1)`,
//!   and the initial flip `i(i-1)... ~ i(i+1)...` for `i >= 2`.
//! * O: commutations, braids, and swapping the first two letters.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Mutex;

use crate::word::Word;

fn push_replaced(out: &mut BTreeSet<Word>, w: &Word, at: usize, seg: &[u32]) {
    let mut v = w.letters().to_vec();
    v[at..at + seg.len()].copy_from_slice(seg);
    out.insert(Word::from_unchecked(v));
}

/// One Coxeter-Knuth move at any position.
pub fn ck_neighbors(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for (i, t) in w.windows(3).enumerate() {
        let (x, y, z) = (t[0], t[1], t[2]);
        // braid
        if x == z && (y == x + 1 || x == y + 1) {
            push_replaced(&mut out, w, i, &[y, x, y]);
        }
        // bac <-> bca
        if y < x && x < z {
            push_replaced(&mut out, w, i, &[x, z, y]);
        }
        if z < x && x < y {
            push_replaced(&mut out, w, i, &[x, z, y]);
        }
        // acb <-> cab
        if x < z && z < y {
            push_replaced(&mut out, w, i, &[y, x, z]);
        }
        if y < z && z < x {
            push_replaced(&mut out, w, i, &[y, x, z]);
        }
    }
    out.remove(w);
    out
}

fn coxeter_moves(w: &Word, out: &mut BTreeSet<Word>) {
    for (i, p) in w.windows(2).enumerate() {
        if p[0].abs_diff(p[1]) > 1 {
            push_replaced(out, w, i, &[p[1], p[0]]);
        }
    }
    for (i, t) in w.windows(3).enumerate() {
        if t[0] == t[2] && t[0].abs_diff(t[1]) == 1 {
            push_replaced(out, w, i, &[t[1], t[0], t[1]]);
        }
    }
}

/// One Sp move: a commutation or braid anywhere, or the flip of the second
/// letter `i-1 <-> i+1` behind a first letter `i >= 2`.
pub fn sp_neighbors(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    coxeter_moves(w, &mut out);
    if w.len() >= 2 {
        let (i, j) = (w[0], w[1]);
        if i >= 2 && j == i - 1 {
            push_replaced(&mut out, w, 1, &[i + 1]);
        }
        if i >= 2 && j == i + 1 {
            push_replaced(&mut out, w, 1, &[i - 1]);
        }
    }
    out.remove(w);
    out
}

/// One O move: a commutation or braid anywhere, or swapping the first two letters.
pub fn o_neighbors(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    coxeter_moves(w, &mut out);
    if w.len() >= 2 {
        push_replaced(&mut out, w, 0, &[w[1], w[0]]);
    }
    out.remove(w);
    out
}

/// Which relation generates the equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    CoxeterKnuth,
    Symplectic,
    Orthogonal,
}

impl Relation {
    pub fn neighbors(self, w: &Word) -> BTreeSet<Word> {
        match self {
            Relation::CoxeterKnuth => ck_neighbors(w),
            Relation::Symplectic => sp_neighbors(w),
            Relation::Orthogonal => o_neighbors(w),
        }
    }
}

/// The full equivalence class of `w`, sorted.
pub fn equivalence_class(relation: Relation, w: &Word) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for y in relation.neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Memoized equivalence closures. Each class is explored once; every member is
/// then mapped to the lexicographically least word of its class.
#[derive(Debug)]
pub struct Closure {
    relation: Relation,
    canon: Mutex<HashMap<Word, Word>>,
}

impl Closure {
    pub fn new(relation: Relation) -> Self {
        Closure {
            relation,
            canon: Mutex::new(HashMap::new()),
        }
    }

    pub fn canonical(&self, w: &Word) -> Word {
        if let Some(c) = self.canon.lock().unwrap().get(w) {
            return c.clone();
        }
        let class = equivalence_class(self.relation, w);
        let rep = class[0].clone();
        let mut canon = self.canon.lock().unwrap();
        for x in class {
            canon.insert(x, rep.clone());
        }
        rep
    }

    pub fn equivalent(&self, a: &Word, b: &Word) -> bool {
        a.len() == b.len() && (a == b || self.canonical(a) == self.canonical(b))
    }
}

pub fn sp_equivalent(a: &Word, b: &Word) -> bool {
    a.len() == b.len() && (a == b || equivalence_class(Relation::Symplectic, a).binary_search(b).is_ok())
}

pub fn ck_equivalent(a: &Word, b: &Word) -> bool {
    a.len() == b.len()
        && (a == b || equivalence_class(Relation::CoxeterKnuth, a).binary_search(b).is_ok())
}

pub fn o_equivalent(a: &Word, b: &Word) -> bool {
    a.len() == b.len() && (a == b || equivalence_class(Relation::Orthogonal, a).binary_search(b).is_ok())
}
