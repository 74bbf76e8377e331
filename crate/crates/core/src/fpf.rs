//! Fixed-point-free involutions and FPF-involution words.
//!
//! An element of `F_inf` is stored on a finite even window `1..=N`; outside the
//! window it agrees with `Θ = (1 2)(3 4)(5 6)...`. A word `u_1 ... u_l` is an
//! FPF-involution word for `z` when folding `z ↦ s_u z s_u` from `Θ` reaches `z`
//! and every step is length-increasing, i.e. `z(u) < z(u+1)` before the step.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::word::{Factorization, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("window {0} must be a positive even integer")]
    BadWindow(usize),
    #[error("one-line word is not a permutation of 1..{0}")]
    NotPermutation(usize),
    #[error("{0} is a fixed point")]
    FixedPoint(usize),
    #[error("not an involution: z(z({0})) != {0}")]
    NotInvolutive(usize),
    #[error("letter {letter} at position {position} is a descent (z({letter}) > z({next})); the word is not reduced")]
    Descent {
        letter: Letter,
        next: Letter,
        position: usize,
    },
}

/// An element of `F_inf`, stored on an even window that is closed under `z`.
#[derive(Debug, Clone)]
pub struct FpfInvolution {
    map: Vec<u32>,
}

impl FpfInvolution {
    pub fn theta(window: usize) -> Result<Self, InvolutionError> {
        if window == 0 || window % 2 == 1 {
            return Err(InvolutionError::BadWindow(window));
        }
        Ok(FpfInvolution {
            map: (1..=window as u32).map(theta_of).collect(),
        })
    }

    pub fn from_oneline(seq: &[u32]) -> Result<Self, InvolutionError> {
        let n = seq.len();
        if n == 0 || n % 2 == 1 {
            return Err(InvolutionError::BadWindow(n));
        }
        check_permutation(seq)?;
        for (i, &v) in seq.iter().enumerate() {
            let i = i + 1;
            if v as usize == i {
                return Err(InvolutionError::FixedPoint(i));
            }
            if seq[v as usize - 1] as usize != i {
                return Err(InvolutionError::NotInvolutive(i));
            }
        }
        Ok(FpfInvolution { map: seq.to_vec() })
    }

    pub fn window(&self) -> usize {
        self.map.len()
    }

    pub fn oneline(&self) -> &[u32] {
        &self.map
    }

    /// `z(i)` for any `i >= 1`.
    pub fn apply(&self, i: u32) -> u32 {
        assert!(i >= 1);
        self.map.get(i as usize - 1).copied().unwrap_or_else(|| theta_of(i))
    }

    /// The same involution on a window of at least `window` points.
    pub fn extended(&self, window: usize) -> Self {
        let window = window + window % 2;
        let mut map = self.map.clone();
        map.extend((map.len() as u32 + 1..=window as u32).map(theta_of));
        FpfInvolution { map }
    }

    /// Smallest window representing the same element.
    fn normalized(&self) -> &[u32] {
        let mut n = self.map.len();
        while n > 2 && self.map[n - 1] == n as u32 - 1 && self.map[n - 2] == n as u32 {
            n -= 2;
        }
        &self.map[..n]
    }

    pub fn is_theta(&self) -> bool {
        self.normalized() == [2, 1]
    }

    /// Number of inversions of `z` viewed on its window.
    pub fn inversions(&self) -> usize {
        inversions(&self.map)
    }

    /// Common length of every FPF-involution word for `z`.
    pub fn fpf_length(&self) -> usize {
        (self.inversions() - self.window() / 2) / 2
    }

    /// `s_u z s_u`, the involution reached by appending the letter `u`.
    /// Grows the window by two when `u + 1` falls outside it.
    pub fn apply_letter(&self, u: Letter) -> Result<Self, InvolutionError> {
        self.apply_letter_at(u, 1)
    }

    fn apply_letter_at(&self, u: Letter, position: usize) -> Result<Self, InvolutionError> {
        assert!(u >= 1);
        let z = if u as usize + 1 > self.window() {
            self.extended(u as usize + 1)
        } else {
            self.clone()
        };
        if z.apply(u) >= z.apply(u + 1) {
            return Err(InvolutionError::Descent {
                letter: u,
                next: u + 1,
                position,
            });
        }
        Ok(z.conjugate(u))
    }

    /// `s_u z s_u` without any validity check. The window must contain `u + 1`.
    pub(crate) fn conjugate(&self, u: Letter) -> Self {
        let s = |i: u32| {
            if i == u {
                u + 1
            } else if i == u + 1 {
                u
            } else {
                i
            }
        };
        let map = (1..=self.window() as u32)
            .map(|i| s(self.map[s(i) as usize - 1]))
            .collect();
        FpfInvolution { map }
    }

    /// All FPF involutions on the window `1..=window`, including those that
    /// agree with `Θ` near the end of the window.
    pub fn all(window: usize) -> Result<Vec<Self>, InvolutionError> {
        if window == 0 || window % 2 == 1 {
            return Err(InvolutionError::BadWindow(window));
        }
        let mut out = Vec::new();
        let mut map = vec![0u32; window];
        matchings(&mut map, &mut out);
        out.sort();
        Ok(out)
    }
}

fn matchings(map: &mut Vec<u32>, out: &mut Vec<FpfInvolution>) {
    let Some(first) = map.iter().position(|&v| v == 0) else {
        out.push(FpfInvolution { map: map.clone() });
        return;
    };
    for j in first + 1..map.len() {
        if map[j] == 0 {
            map[first] = j as u32 + 1;
            map[j] = first as u32 + 1;
            matchings(map, out);
            map[first] = 0;
            map[j] = 0;
        }
    }
}

pub(crate) fn theta_of(i: u32) -> u32 {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

pub(crate) fn check_permutation(seq: &[u32]) -> Result<(), InvolutionError> {
    let n = seq.len();
    let mut seen = vec![false; n];
    for &v in seq {
        let v = v as usize;
        if v == 0 || v > n || seen[v - 1] {
            return Err(InvolutionError::NotPermutation(n));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

pub(crate) fn inversions(map: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] > map[j] {
                count += 1;
            }
        }
    }
    count
}

impl PartialEq for FpfInvolution {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for FpfInvolution {}

impl Hash for FpfInvolution {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl Ord for FpfInvolution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normalized().cmp(other.normalized())
    }
}

impl PartialOrd for FpfInvolution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Fold `w` from `Θ`. Fails at the first letter that is not length-increasing;
/// the reported position is 1-based.
pub fn word_to_involution(w: &Word) -> Result<FpfInvolution, InvolutionError> {
    let mut z = FpfInvolution::theta(2).expect("2 is even");
    for (k, &u) in w.iter().enumerate() {
        z = z.apply_letter_at(u, k + 1)?;
    }
    Ok(z)
}

pub fn is_fpf_involution_word(w: &Word) -> bool {
    word_to_involution(w).is_ok()
}

/// All FPF-involution words for `z`, sorted.
pub fn enumerate_words(z: &FpfInvolution) -> Vec<Word> {
    let mut memo = HashMap::new();
    let mut words = words_rec(z, &mut memo);
    words.sort();
    words
}

// A word for z ends in u exactly when u is a descent of z that is not a
// 2-cycle (u u+1); its prefix is then a word for s_u z s_u.
fn words_rec(
    z: &FpfInvolution,
    memo: &mut HashMap<FpfInvolution, Vec<Word>>,
) -> Vec<Word> {
    if z.is_theta() {
        return vec![Word::empty()];
    }
    if let Some(ws) = memo.get(z) {
        return ws.clone();
    }
    let mut out = Vec::new();
    for u in 1..z.window() as u32 {
        let (a, b) = (z.apply(u), z.apply(u + 1));
        if a > b && a != u + 1 {
            let prev = z.conjugate(u);
            for mut w in words_rec(&prev, memo) {
                w.push(u);
                out.push(w);
            }
        }
    }
    memo.insert(z.clone(), out.clone());
    out
}

/// `RF^m_FPF(z)`: every increasing `m`-block factorization of every
/// FPF-involution word for `z`, sorted.
pub fn enumerate_factorizations(z: &FpfInvolution, m: usize) -> Vec<Factorization> {
    let mut out: Vec<Factorization> = enumerate_words(z)
        .iter()
        .flat_map(|w| Factorization::all_of(w, m))
        .collect();
    out.sort();
    out
}
