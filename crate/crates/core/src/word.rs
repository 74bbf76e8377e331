//! Words in the simple transpositions and their increasing factorizations.
//!
//! A letter `i >= 1` stands for the simple transposition `s_i`. Words print as
//! space-separated integers; factorizations print as parenthesized blocks such
//! as `(24)(13)()`. Blocks use compact digit form when every letter is a single
//! digit and fall back to space-separated letters otherwise.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Letter = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("letter `{0}` is not a positive integer")]
    BadLetter(String),
    #[error("malformed factorization `{0}`: expected blocks like `(24)(13)()`")]
    BadFactorization(String),
    #[error("block {block} of factorization is not strictly increasing")]
    NotIncreasing { block: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self, ParseError> {
        if let Some(bad) = letters.iter().find(|&&l| l == 0) {
            return Err(ParseError::BadLetter(bad.to_string()));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(letter >= 1, "letters are positive");
        self.0.push(letter);
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1])
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    /// Compact digit form (`6241`) when every letter is below ten.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&l| l < 10) {
            self.0.iter().map(|l| l.to_string()).collect()
        } else {
            self.to_string()
        }
    }

    pub(crate) fn from_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word(letters)
    }
}

impl std::ops::Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

fn parse_letters(s: &str) -> Result<Vec<Letter>, ParseError> {
    let s = s.trim();
    let tokens: Vec<&str> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect()
    } else {
        // compact form: one digit per letter
        s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).collect()
    };
    tokens
        .into_iter()
        .map(|t| match t.parse::<Letter>() {
            Ok(l) if l >= 1 => Ok(l),
            _ => Err(ParseError::BadLetter(t.to_string())),
        })
        .collect()
}

/// Accepts `6 2 4 1`, `6,2,4,1` or the compact `6241`.
impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Word(parse_letters(s)?))
    }
}

impl From<Word> for Vec<Letter> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An `m`-block factorization `w^1 w^2 ... w^m` with strictly increasing
/// (possibly empty) blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    blocks: Vec<Word>,
}

impl Factorization {
    pub fn new(blocks: Vec<Word>) -> Result<Self, ParseError> {
        if blocks.is_empty() {
            return Err(ParseError::BadFactorization(String::new()));
        }
        for (i, b) in blocks.iter().enumerate() {
            if !b.is_strictly_increasing() {
                return Err(ParseError::NotIncreasing { block: i + 1 });
            }
        }
        Ok(Factorization { blocks })
    }

    /// `m` empty blocks.
    pub fn empty(m: usize) -> Self {
        assert!(m >= 1);
        Factorization {
            blocks: vec![Word::empty(); m],
        }
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Word>) -> Self {
        debug_assert!(blocks.iter().all(Word::is_strictly_increasing));
        Factorization { blocks }
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// Number of blocks `m`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The underlying word obtained by forgetting the grouping.
    pub fn word(&self) -> Word {
        Word(self.blocks.iter().flat_map(|b| b.iter().copied()).collect())
    }

    /// Block index (1-based) of every letter of [`Factorization::word`].
    pub fn block_indices(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| std::iter::repeat_n(i + 1, b.len()))
            .collect()
    }

    /// Cut `word` into blocks of the given sizes. Fails if a block would not be
    /// strictly increasing or the sizes do not add up.
    pub fn cut(word: &Word, sizes: &[usize]) -> Result<Self, ParseError> {
        if sizes.iter().sum::<usize>() != word.len() {
            return Err(ParseError::BadFactorization(word.to_string()));
        }
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut at = 0;
        for &n in sizes {
            blocks.push(Word(word[at..at + n].to_vec()));
            at += n;
        }
        Factorization::new(blocks)
    }

    /// Every way to cut `word` into `m` consecutive strictly increasing blocks.
    pub fn all_of(word: &Word, m: usize) -> Vec<Factorization> {
        assert!(m >= 1);
        let mut out = Vec::new();
        let mut cuts = Vec::with_capacity(m + 1);
        cuts.push(0);
        cut_rec(word, m, &mut cuts, &mut out);
        out
    }
}

fn cut_rec(word: &Word, m: usize, cuts: &mut Vec<usize>, out: &mut Vec<Factorization>) {
    let start = *cuts.last().unwrap();
    if cuts.len() == m {
        if word[start..].windows(2).all(|p| p[0] < p[1]) {
            let mut blocks: Vec<Word> = cuts
                .windows(2)
                .map(|c| Word(word[c[0]..c[1]].to_vec()))
                .collect();
            blocks.push(Word(word[start..].to_vec()));
            out.push(Factorization { blocks });
        }
        return;
    }
    let mut end = start;
    loop {
        cuts.push(end);
        cut_rec(word, m, cuts, out);
        cuts.pop();
        if end == word.len() || (end > start && word[end - 1] >= word[end]) {
            break;
        }
        end += 1;
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "({})", b.compact())?;
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::BadFactorization(s.to_string());
        let mut rest = s.trim();
        let mut blocks = Vec::new();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            blocks.push(Word(parse_letters(&rest[..close])?));
            rest = rest[close + 1..].trim_start();
        }
        Factorization::new(blocks).map_err(|e| match e {
            ParseError::BadFactorization(_) => bad(),
            other => other,
        })
    }
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
