//! Involutions, involution words and the orthogonal insertion.
//!
//! An element of `I_inf` is stored on a window `1..=N` and is the identity
//! outside it. A letter `u` extends an involution word for `z` iff
//! `z(u) < z(u+1)`; the new element is `s_u z s_u`, or `z s_u` when `s_u`
//! commutes with `z`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::crystal::{CrystalGraph, FactorizationCrystal};
use crate::fpf::{check_permutation, InvolutionError};
use crate::insertion::{insert_with, insert_word_with, relabel, InsertionError, InsertionOutcome, InsertionPair, Rules};
use crate::tableau::IncreasingShiftedTableau;
use crate::word::{Factorization, Letter, Word};

#[derive(Debug, Clone)]
pub struct Involution {
    map: Vec<u32>,
}

impl Involution {
    pub fn identity(window: usize) -> Self {
        Involution { map: (1..=window as u32).collect() }
    }

    pub fn from_oneline(seq: &[u32]) -> Result<Self, InvolutionError> {
        check_permutation(seq)?;
        for (i, &v) in seq.iter().enumerate() {
            if seq[v as usize - 1] as usize != i + 1 {
                return Err(InvolutionError::NotInvolutive(i + 1));
            }
        }
        Ok(Involution { map: seq.to_vec() })
    }

    pub fn window(&self) -> usize {
        self.map.len()
    }

    pub fn oneline(&self) -> &[u32] {
        &self.map
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.map.get(i as usize - 1).copied().unwrap_or(i)
    }

    pub fn extended(&self, window: usize) -> Self {
        let mut map = self.map.clone();
        map.extend(map.len() as u32 + 1..=window as u32);
        Involution { map }
    }

    fn normalized(&self) -> &[u32] {
        let mut n = self.map.len();
        while n > 0 && self.map[n - 1] == n as u32 {
            n -= 1;
        }
        &self.map[..n]
    }

    pub fn is_identity(&self) -> bool {
        self.normalized().is_empty()
    }

    /// Involution length `(inv(z) + κ(z)) / 2`, with `κ` the number of
    /// 2-cycles.
    pub fn involution_length(&self) -> usize {
        let cycles = self.map.iter().enumerate().filter(|&(i, &v)| v as usize > i + 1).count();
        (crate::fpf::inversions(&self.map) + cycles) / 2
    }

    pub fn apply_letter(&self, u: Letter) -> Result<Self, InvolutionError> {
        self.apply_letter_at(u, 1)
    }

    fn apply_letter_at(&self, u: Letter, position: usize) -> Result<Self, InvolutionError> {
        assert!(u >= 1, "letters are positive");
        let z = if (u as usize) < self.window() { self.clone() } else { self.extended(u as usize + 1) };
        let (a, b) = (z.apply(u), z.apply(u + 1));
        if a > b {
            return Err(InvolutionError::Descent { letter: u, next: u + 1, position });
        }
        Ok(z.step(u))
    }

    /// `s_u z s_u` if that differs from `z`, else `z s_u`; its own inverse.
    fn step(&self, u: Letter) -> Self {
        let mut map = self.map.clone();
        let (i, j) = (u as usize - 1, u as usize);
        let commutes = (map[i] == u && map[j] == u + 1) || map[i] == u + 1;
        map.swap(i, j);
        if !commutes {
            for v in map.iter_mut() {
                if *v == u {
                    *v = u + 1;
                } else if *v == u + 1 {
                    *v = u;
                }
            }
        }
        Involution { map }
    }

    /// Every involution of `1..=window`, sorted.
    pub fn all(window: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut map = vec![0u32; window];
        all_rec(&mut map, &mut out);
        out.sort();
        out
    }
}

fn all_rec(map: &mut [u32], out: &mut Vec<Involution>) {
    let Some(i) = map.iter().position(|&v| v == 0) else {
        out.push(Involution { map: map.to_vec() });
        return;
    };
    map[i] = i as u32 + 1;
    all_rec(map, out);
    for j in i + 1..map.len() {
        if map[j] == 0 {
            map[i] = j as u32 + 1;
            map[j] = i as u32 + 1;
            all_rec(map, out);
            map[j] = 0;
        }
    }
    map[i] = 0;
}

impl PartialEq for Involution {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for Involution {}

impl Hash for Involution {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl Ord for Involution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normalized().cmp(other.normalized())
    }
}

impl PartialOrd for Involution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn apply_letter_o(z: &Involution, u: Letter) -> Result<Involution, InvolutionError> {
    z.apply_letter(u)
}

/// Fold `w` from the identity.
pub fn word_to_involution_o(w: &Word) -> Result<Involution, InvolutionError> {
    let mut z = Involution::identity(1);
    for (k, &u) in w.iter().enumerate() {
        z = z.apply_letter_at(u, k + 1)?;
    }
    Ok(z)
}

pub fn is_involution_word(w: &Word) -> bool {
    word_to_involution_o(w).is_ok()
}

/// All involution words for `z`, sorted.
pub fn enumerate_words_o(z: &Involution) -> Vec<Word> {
    let mut memo = HashMap::new();
    let mut out = words_rec(z, &mut memo);
    out.sort();
    out
}

// A word for z ends in u exactly when u is a descent of z.
fn words_rec(z: &Involution, memo: &mut HashMap<Involution, Vec<Word>>) -> Vec<Word> {
    if z.is_identity() {
        return vec![Word::empty()];
    }
    if let Some(ws) = memo.get(z) {
        return ws.clone();
    }
    let mut out = Vec::new();
    for u in 1..z.window() as u32 {
        if z.apply(u) > z.apply(u + 1) {
            for mut w in words_rec(&z.step(u), memo) {
                w.push(u);
                out.push(w);
            }
        }
    }
    memo.insert(z.clone(), out.clone());
    out
}

/// `RF^m(z)`, sorted.
pub fn enumerate_factorizations_o(z: &Involution, m: usize) -> Vec<Factorization> {
    let mut out: Vec<Factorization> = enumerate_words_o(z)
        .iter()
        .flat_map(|w| Factorization::all_of(w, m))
        .collect();
    out.sort();
    out
}

/// `T ← a` with the two orthogonal rules.
pub fn insert_letter_o(t: &IncreasingShiftedTableau, a: Letter) -> Result<InsertionOutcome, InsertionError> {
    insert_with(t, a, Rules::Orthogonal)
}

pub fn insert_word_o(w: &Word) -> Result<InsertionPair, InsertionError> {
    word_to_involution_o(w)?;
    insert_word_with(w, Rules::Orthogonal)
}

pub fn insert_factorization_o(f: &Factorization) -> Result<InsertionPair, InsertionError> {
    let pair = insert_word_o(&f.word())?;
    Ok(InsertionPair {
        recording: relabel(&pair.recording, &f.block_indices()),
        insertion: pair.insertion,
    })
}

/// Move `min w^1` into `w^2` when it is below `min w^2`.
pub fn f_odd_o(f: &Factorization) -> Option<Factorization> {
    let b = f.blocks();
    if b.len() < 2 {
        return None;
    }
    let u1 = *b[0].first()?;
    if b[1].first().is_some_and(|&v1| v1 <= u1) {
        return None;
    }
    Some(move_first(f, 0, 1))
}

/// Move `min w^2` into `w^1` when it is below `min w^1`.
pub fn e_odd_o(f: &Factorization) -> Option<Factorization> {
    let b = f.blocks();
    if b.len() < 2 {
        return None;
    }
    let v1 = *b[1].first()?;
    if b[0].first().is_some_and(|&u1| u1 <= v1) {
        return None;
    }
    Some(move_first(f, 1, 0))
}

fn move_first(f: &Factorization, from: usize, to: usize) -> Factorization {
    let mut blocks: Vec<Vec<Letter>> = f.blocks().iter().map(|w| w.letters().to_vec()).collect();
    let x = blocks[from].remove(0);
    blocks[to].insert(0, x);
    Factorization::from_blocks_unchecked(blocks.into_iter().map(Word::from_unchecked).collect())
}

/// The crystal graph on `RF^m(z)`.
pub fn build_graph_o(z: &Involution, m: usize) -> CrystalGraph<Factorization> {
    CrystalGraph::from_crystal(&FactorizationCrystal::o(z, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::ShiftedTableau;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn inc(rows: &[&[u32]]) -> IncreasingShiftedTableau {
        ShiftedTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn letters() {
        let id = Involution::identity(3);
        assert_eq!(id.apply_letter(1).unwrap().oneline(), &[2, 1, 3]);
        let t = id.apply_letter(1).unwrap();
        assert!(t.apply_letter(1).is_err());
        assert_eq!(word_to_involution_o(&w("121")).unwrap_err(), InvolutionError::Descent { letter: 1, next: 2, position: 3 });
        assert_eq!(word_to_involution_o(&w("12")).unwrap().oneline(), &[3, 2, 1]);
        assert_eq!(Involution::identity(2), Involution::identity(5));
    }

    #[test]
    fn counts() {
        assert_eq!(Involution::all(4).len(), 10);
        assert_eq!(Involution::all(5).len(), 26);
        let w0 = Involution::from_oneline(&[3, 2, 1]).unwrap();
        assert_eq!(enumerate_words_o(&w0), vec![w("12"), w("21")]);
        assert_eq!(w0.involution_length(), 2);
        assert_eq!(enumerate_words_o(&Involution::identity(3)), vec![Word::empty()]);
    }

    #[test]
    fn insertion() {
        let one = insert_letter_o(&IncreasingShiftedTableau::empty(), 1).unwrap();
        assert_eq!(one.tableau, inc(&[&[1]]));
        let two = insert_letter_o(&one.tableau, 2).unwrap();
        assert_eq!(two.tableau, inc(&[&[1, 2]]));
        assert!(insert_word_o(&Word::empty()).unwrap().insertion.is_empty());
        // 3 would land under the 3 in row 1, so the diagonal 4 stays
        assert_eq!(insert_word_o(&w("2432")).unwrap().insertion, inc(&[&[2, 3, 4], &[4]]));
    }

    #[test]
    fn odd_operators() {
        let f: Factorization = "(13)(2)()".parse().unwrap();
        assert_eq!(f_odd_o(&f), Some("(3)(12)()".parse().unwrap()));
        assert_eq!(e_odd_o(&"(3)(12)()".parse().unwrap()), Some(f.clone()));
        assert_eq!(f_odd_o(&"()(2)()".parse().unwrap()), None);
        assert_eq!(e_odd_o(&"(1)()".parse().unwrap()), None);
    }
}
