//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use qcrystal::{FpfInvolution, Involution, Word};

/// Plain permutations in one-line notation on a fixed window.
type Perm = Vec<u32>;

fn conjugate(z: &Perm, u: u32) -> Perm {
    let (i, j) = (u as usize - 1, u as usize);
    let mut out = z.clone();
    out.swap(i, j);
    for v in out.iter_mut() {
        if *v == u {
            *v = u + 1;
        } else if *v == u + 1 {
            *v = u;
        }
    }
    out
}

fn inversions(p: &Perm) -> usize {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

/// Minimal words found by breadth-first search over plain conjugation
/// `z -> s_u z s_u` from `Θ`, with letters `1..=letters`, up to `max_len`.
/// Every prefix of a minimal word is minimal, so the search only extends
/// words that are minimal so far.
pub struct FpfOracle {
    pub min_len: HashMap<Perm, usize>,
    pub words: HashMap<Perm, Vec<Word>>,
    pub window: usize,
}

impl FpfOracle {
    pub fn new(letters: u32, max_len: usize) -> Self {
        let window = letters as usize + 1 + (letters as usize + 1) % 2;
        let theta: Perm = (1..=window as u32).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
        let mut min_len = HashMap::from([(theta.clone(), 0)]);
        let mut words: HashMap<Perm, Vec<Word>> = HashMap::from([(theta.clone(), vec![Word::empty()])]);
        let mut layer: Vec<(Perm, Word)> = vec![(theta, Word::empty())];
        for k in 1..=max_len {
            let mut next = Vec::new();
            for (z, w) in &layer {
                for u in 1..=letters {
                    let y = conjugate(z, u);
                    let d = *min_len.entry(y.clone()).or_insert(k);
                    if d == k {
                        let mut v = w.clone();
                        v.push(u);
                        words.entry(y.clone()).or_default().push(v.clone());
                        next.push((y, v));
                    }
                }
            }
            layer = next;
        }
        for ws in words.values_mut() {
            ws.sort();
            ws.dedup();
        }
        FpfOracle { min_len, words, window }
    }

    pub fn key(&self, z: &FpfInvolution) -> Perm {
        z.extended(self.window).oneline().to_vec()
    }

    /// Is `w` a minimal word for the element it conjugates `Θ` to?
    pub fn is_minimal(&self, w: &Word) -> bool {
        let mut z: Perm = (1..=self.window as u32).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
        for &u in w.iter() {
            z = conjugate(&z, u);
        }
        self.min_len.get(&z) == Some(&w.len())
    }
}

/// Demazure product of a word, letter by letter: `x -> x s` when that is
/// longer, else `x`.
fn demazure(word: &[u32], window: usize) -> Perm {
    let mut x: Perm = (1..=window as u32).collect();
    for &u in word {
        let mut y = x.clone();
        y.swap(u as usize - 1, u as usize);
        if inversions(&y) > inversions(&x) {
            x = y;
        }
    }
    x
}

/// Involution words: minimal-length `w` with a given Demazure product of
/// `rev(w) w`. Exhaustive over all words with letters `1..=letters`.
pub struct InvolutionOracle {
    pub min_len: HashMap<Perm, usize>,
    pub words: HashMap<Perm, Vec<Word>>,
    pub window: usize,
}

impl InvolutionOracle {
    pub fn new(letters: u32, max_len: usize) -> Self {
        let window = letters as usize + 1;
        let mut all: Vec<(Perm, Word)> = Vec::new();
        let mut frontier: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let mut full: Vec<u32> = w.iter().rev().copied().collect();
                full.extend(w);
                all.push((demazure(&full, window), Word::new(w.clone()).unwrap()));
                for u in 1..=letters {
                    let mut v = w.clone();
                    v.push(u);
                    next.push(v);
                }
            }
            frontier = next;
        }
        let mut min_len: HashMap<Perm, usize> = HashMap::new();
        for (z, w) in &all {
            let e = min_len.entry(z.clone()).or_insert(w.len());
            *e = (*e).min(w.len());
        }
        let mut words: HashMap<Perm, Vec<Word>> = HashMap::new();
        for (z, w) in all {
            if min_len[&z] == w.len() {
                words.entry(z).or_default().push(w);
            }
        }
        for ws in words.values_mut() {
            ws.sort();
        }
        InvolutionOracle { min_len, words, window }
    }

    pub fn key(&self, z: &Involution) -> Perm {
        z.extended(self.window).oneline().to_vec()
    }

    pub fn is_minimal(&self, w: &Word) -> bool {
        let mut full: Vec<u32> = w.iter().rev().copied().collect();
        full.extend(w.iter());
        self.min_len.get(&demazure(&full, self.window)) == Some(&w.len())
    }
}

/// Every word over `1..=letters` of length at most `max_len`.
pub fn all_words(letters: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for u in 1..=letters {
                let mut v = w.clone();
                v.push(u);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Printed single-box tables: the tableau `[p] ← xyz` for the two sides of
/// a Coxeter-Knuth move, by case. `None` means the word is claimed not to
/// be an FPF-involution word.
pub type Rows = Vec<Vec<u32>>;

/// `[p] ← bac = [p] ← bca` for `a < b < c`.
pub fn table_bac(p: u32, a: u32, b: u32, c: u32) -> Option<Rows> {
    let same = |x: u32, y: u32| x % 2 == y % 2;
    if p < a {
        Some(vec![vec![p, a, c], vec![b]])
    } else if a < p && p < b {
        if p == a + 1 {
            Some(vec![vec![a + 1, a + 2, b, c]])
        } else if same(p, a) {
            Some(vec![vec![a, p, b, c]])
        } else {
            None
        }
    } else if b < p && p < c {
        if b == a + 1 && p == a + 2 {
            Some(vec![vec![a + 1, a + 2, a + 3, c]])
        } else if b == a + 1 && p > a + 2 {
            Some(vec![vec![a + 1, a + 2, p, c]])
        } else if same(a, b) {
            Some(vec![vec![a, b, p, c]])
        } else {
            None
        }
    } else if c < p {
        // printed in the order a+1, a+2, p, c and a, b, p, c
        if b == a + 1 {
            Some(vec![vec![a + 1, a + 2, p, c]])
        } else if same(a, b) {
            Some(vec![vec![a, b, p, c]])
        } else {
            None
        }
    } else {
        None
    }
}

/// `[p] ← acb = [p] ← cab` for `a < b < c`.
pub fn table_acb(p: u32, a: u32, b: u32, c: u32) -> Option<Rows> {
    let same = |x: u32, y: u32| x % 2 == y % 2;
    if p < a {
        Some(vec![vec![p, a, b], vec![c]])
    } else if a < p && p < b {
        if p == a + 1 {
            Some(vec![vec![a + 1, a + 2, b], vec![c]])
        } else if same(p, a) {
            Some(vec![vec![a, p, b], vec![c]])
        } else {
            None
        }
    } else if b < p && p < c {
        Some(vec![vec![a, b, c], vec![p]])
    } else if c < p {
        if p == c + 1 {
            Some(vec![vec![a, b, c + 2], vec![c + 1]])
        } else if same(p, c) {
            Some(vec![vec![a, b, p], vec![c]])
        } else {
            None
        }
    } else {
        None
    }
}

/// `[p] ← a(a+1)a = [p] ← (a+1)a(a+1)`.
pub fn table_braid(p: u32, a: u32) -> Option<Rows> {
    if p + 1 == a {
        Some(vec![vec![a - 1, a, a + 1], vec![a + 1]])
    } else if p == a + 2 {
        Some(vec![vec![a, a + 1, a + 3], vec![a + 2]])
    } else {
        None
    }
}

/// Row contents as sorted sets; tolerant of a row printed out of order.
pub fn as_sets(rows: &Rows) -> Vec<BTreeSet<u32>> {
    rows.iter().map(|r| r.iter().copied().collect()).collect()
}

#[derive(serde::Deserialize)]
pub struct Fixture {
    pub involution: Vec<u32>,
    pub m: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<qcrystal::crystal::JsonEdge>,
}

pub fn fixture_546213() -> Fixture {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/graph_546213_m3.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Counts keyed by a label, for short summaries.
pub fn tally<K: Ord>(items: impl IntoIterator<Item = K>) -> BTreeMap<K, usize> {
    let mut out = BTreeMap::new();
    for k in items {
        *out.entry(k).or_insert(0) += 1;
    }
    out
}
