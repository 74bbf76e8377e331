//! Shifted shapes, increasing shifted tableaux and primed tableaux.
//!
//! Cells are addressed 1-based as `(row, column)`; row `i` of a shifted shape
//! occupies columns `i ..= λ_i + i - 1`. Both tableau kinds share the dense
//! row-major storage of [`ShiftedTableau`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row lengths {0:?} do not form a strict partition")]
    NotStrict(Vec<usize>),
    #[error("entry `{0}` is not a valid tableau letter")]
    BadEntry(String),
    #[error("shape {shape:?} does not match row lengths {rows:?}")]
    ShapeMismatch { shape: Vec<usize>, rows: Vec<usize> },
    #[error("{0}")]
    Invalid(Violation),
    #[error("tableau is not standard")]
    NotStandard,
}

/// Why a filling fails to be an increasing or primed tableau.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("row lengths {0:?} are not strictly decreasing")]
    Shape(Vec<usize>),
    #[error("row {row} is not {kind} at column {col}")]
    Row { row: usize, col: usize, kind: &'static str },
    #[error("column {col} is not {kind} at row {row}")]
    Column { row: usize, col: usize, kind: &'static str },
    #[error("row {row} holds more than one {value}'")]
    RepeatedPrimeInRow { row: usize, value: u32 },
    #[error("column {col} holds more than one unprimed {value}")]
    RepeatedInColumn { col: usize, value: u32 },
    #[error("primed entry on the main diagonal at ({0},{0})")]
    PrimedDiagonal(usize),
    #[error("entry at ({row},{col}) is zero")]
    Zero { row: usize, col: usize },
}

/// `λ_1 > λ_2 > ... > λ_l > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) || parts.windows(2).any(|p| p[0] <= p[1]) {
            return Err(TableauError::NotStrict(parts));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// The shifted diagram `S(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ShiftedShape(StrictPartition);

impl ShiftedShape {
    pub fn new(partition: StrictPartition) -> Self {
        ShiftedShape(partition)
    }

    pub fn partition(&self) -> &StrictPartition {
        &self.0
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
             .0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (r + 1..r + 1 + len).map(move |c| (r + 1, c)))
    }

    pub fn contains(&self, (row, col): (usize, usize)) -> bool {
        row >= 1 && row <= self.0.length() && col >= row && col < row + self.0 .0[row - 1]
    }
}

/// A filling of a shifted shape stored row by row. Row `i` (1-based) starts in
/// column `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ShiftedTableau<T> {
    rows: Vec<Vec<T>>,
}

pub type IncreasingShiftedTableau = ShiftedTableau<u32>;
pub type PrimedTableau = ShiftedTableau<PrimedEntry>;

impl<T: Copy> ShiftedTableau<T> {
    /// Builds a filling from its rows; empty trailing rows are dropped. Only the
    /// shape is checked here, use `validate` for the entry conditions.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, TableauError> {
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let t = ShiftedTableau { rows };
        StrictPartition::new(t.row_lengths())?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<T>>) -> Self {
        ShiftedTableau { rows }
    }

    pub fn empty() -> Self {
        ShiftedTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn shape(&self) -> ShiftedShape {
        ShiftedShape(StrictPartition(self.row_lengths()))
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, (row, col): (usize, usize)) -> Option<T> {
        let r = self.rows.get(row.checked_sub(1)?)?;
        r.get(col.checked_sub(row)?).copied()
    }

    pub(crate) fn set(&mut self, (row, col): (usize, usize), value: T) {
        self.rows[row - 1][col - row] = value;
    }

    /// Entries of column `col` from the top, with their row indices.
    pub fn column(&self, col: usize) -> Vec<(usize, T)> {
        (1..=self.rows.len().min(col))
            .map_while(|r| self.get((r, col)).map(|v| (r, v)))
            .collect()
    }

    /// Entries with their cells, row-major.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), T)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, &v)| ((r + 1, r + 1 + k), v))
        })
    }

    /// Same filling with each entry mapped through `f`.
    pub fn map<U>(&self, mut f: impl FnMut(T) -> U) -> ShiftedTableau<U> {
        ShiftedTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| f(v)).collect())
                .collect(),
        }
    }

    fn check_shape(&self) -> Result<(), Violation> {
        let lens = self.row_lengths();
        if lens.contains(&0) || lens.windows(2).any(|p| p[0] <= p[1]) {
            return Err(Violation::Shape(lens));
        }
        Ok(())
    }
}

impl IncreasingShiftedTableau {
    /// Checks strict increase along rows and columns.
    pub fn validate(&self) -> Result<(), Violation> {
        self.check_shape()?;
        for ((r, c), v) in self.entries() {
            if v == 0 {
                return Err(Violation::Zero { row: r, col: c });
            }
            if c > r && self.get((r, c - 1)).is_some_and(|left| left >= v) {
                return Err(Violation::Row { row: r, col: c, kind: "strictly increasing" });
            }
            if r > 1 && self.get((r - 1, c)).is_some_and(|up| up >= v) {
                return Err(Violation::Column { row: r, col: c, kind: "strictly increasing" });
            }
        }
        Ok(())
    }

    /// Rows read bottom to top, each left to right.
    pub fn row_reading_word(&self) -> Word {
        Word::from_unchecked(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn diagonal(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r[0]).collect()
    }
}

/// A letter of `1' < 1 < 2' < 2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimedEntry {
    pub value: u32,
    pub primed: bool,
}

impl PrimedEntry {
    pub fn unprimed(value: u32) -> Self {
        PrimedEntry { value, primed: false }
    }

    pub fn primed(value: u32) -> Self {
        PrimedEntry { value, primed: true }
    }

    fn key(self) -> (u32, bool) {
        (self.value, !self.primed)
    }
}

impl Ord for PrimedEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PrimedEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.primed {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for PrimedEntry {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TableauError::BadEntry(s.to_string());
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u32 = digits.parse().map_err(|_| bad())?;
        if value == 0 {
            return Err(bad());
        }
        Ok(PrimedEntry { value, primed })
    }
}

impl PrimedTableau {
    /// Checks the four primed-tableau conditions: weak increase along rows and
    /// columns, at most one `i'` per row, at most one `i` per column, and no
    /// primes on the main diagonal.
    pub fn validate(&self) -> Result<(), Violation> {
        self.check_shape()?;
        for ((r, c), v) in self.entries() {
            if v.value == 0 {
                return Err(Violation::Zero { row: r, col: c });
            }
            if r == c && v.primed {
                return Err(Violation::PrimedDiagonal(r));
            }
            if c > r {
                let left = self.get((r, c - 1)).unwrap();
                if left > v {
                    return Err(Violation::Row { row: r, col: c, kind: "weakly increasing" });
                }
                if left == v && v.primed {
                    return Err(Violation::RepeatedPrimeInRow { row: r, value: v.value });
                }
            }
            if r > 1 {
                if let Some(up) = self.get((r - 1, c)) {
                    if up > v {
                        return Err(Violation::Column { row: r, col: c, kind: "weakly increasing" });
                    }
                    if up == v && !v.primed {
                        return Err(Violation::RepeatedInColumn { col: c, value: v.value });
                    }
                }
            }
        }
        Ok(())
    }

    /// True when the entries are `1..=n`, each exactly once, primed or not.
    pub fn is_standard(&self) -> bool {
        let mut values: Vec<u32> = self.entries().map(|(_, v)| v.value).collect();
        values.sort_unstable();
        values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn max_value(&self) -> u32 {
        self.entries().map(|(_, v)| v.value).max().unwrap_or(0)
    }

    /// Relabels to a standard primed tableau. For each value `k` in turn, the
    /// `k'` entries are numbered top to bottom, then the `k` entries left to
    /// right.
    pub fn standardize(&self) -> Result<PrimedTableau, TableauError> {
        self.validate().map_err(TableauError::Invalid)?;
        let order = self.standardization_order();
        let mut out = self.clone();
        for (k, (cell, primed)) in order.into_iter().enumerate() {
            out.set(cell, PrimedEntry { value: k as u32 + 1, primed });
        }
        Ok(out)
    }

    /// Cells in standardization order, with their prime flags.
    pub(crate) fn standardization_order(&self) -> Vec<((usize, usize), bool)> {
        let mut cells: Vec<((usize, usize), PrimedEntry)> = self.entries().collect();
        // equal primed values share no row, equal unprimed values share no column
        cells.sort_by_key(|&((r, c), v)| (v, if v.primed { r } else { c }));
        cells.into_iter().map(|(cell, v)| (cell, v.primed)).collect()
    }

    /// Every primed tableau of the given shape with entries at most `max`.
    pub fn enumerate(shape: &ShiftedShape, max: u32) -> Vec<PrimedTableau> {
        let mut alphabet = Vec::with_capacity(2 * max as usize);
        for v in 1..=max {
            alphabet.push(PrimedEntry::primed(v));
            alphabet.push(PrimedEntry::unprimed(v));
        }
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let mut t = ShiftedTableau {
            rows: shape
                .partition()
                .parts()
                .iter()
                .map(|&n| vec![PrimedEntry::unprimed(1); n])
                .collect(),
        };
        let mut out = Vec::new();
        fill_primed(&mut t, &cells, 0, &alphabet, &mut out);
        out
    }
}

fn fill_primed(
    t: &mut PrimedTableau,
    cells: &[(usize, usize)],
    at: usize,
    alphabet: &[PrimedEntry],
    out: &mut Vec<PrimedTableau>,
) {
    let Some(&(r, c)) = cells.get(at) else {
        out.push(t.clone());
        return;
    };
    for &v in alphabet {
        if r == c && v.primed {
            continue;
        }
        if c > r {
            let left = t.get((r, c - 1)).unwrap();
            if left > v || (left == v && v.primed) {
                continue;
            }
        }
        if r > 1 {
            let up = t.get((r - 1, c)).unwrap();
            if up > v || (up == v && !v.primed) {
                continue;
            }
        }
        t.set((r, c), v);
        fill_primed(t, cells, at + 1, alphabet, out);
    }
}

/// Number of cells in a shifted shape with the given row lengths.
pub fn cell_count(parts: &[usize]) -> usize {
    parts.iter().sum()
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<String>>,
}

impl<T: Copy + fmt::Display> Serialize for ShiftedTableau<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.row_lengths(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T> Deserialize<'de> for ShiftedTableau<T>
where
    T: Copy + FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let json = TableauJson::deserialize(d)?;
        let rows = json
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<T>().map_err(D::Error::custom)).collect())
            .collect::<Result<Vec<Vec<T>>, _>>()?;
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != json.shape {
            return Err(D::Error::custom(TableauError::ShapeMismatch {
                shape: json.shape,
                rows: lens,
            }));
        }
        ShiftedTableau::from_rows(rows).map_err(D::Error::custom)
    }
}

impl<T: Copy + fmt::Display> fmt::Display for ShiftedTableau<T> {
    /// One line per row, indented by one column per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", " ".repeat(r * (width + 1)))?;
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
