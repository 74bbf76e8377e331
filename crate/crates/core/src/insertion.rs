//! FPF-involution Coxeter-Knuth insertion and its inverse.
//!
//! Insertion starts in row mode at row 1 and may switch to column mode; once
//! in column mode it stays there. A step that creates a new box at the end of
//! a row is row-terminal, one that creates it at the bottom of a column is
//! column-terminal. The recording tableau marks column-terminal steps with a
//! prime.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpf::{word_to_involution, InvolutionError};
use crate::tableau::{
    IncreasingShiftedTableau, PrimedEntry, PrimedTableau, ShiftedTableau, TableauError, Violation,
};
use crate::word::{Factorization, Letter, ParseError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("not a reduced word: {0}")]
    NotReduced(#[from] InvolutionError),
    #[error("column insertion of {letter} ran off column {col}")]
    ColumnOverflow { letter: Letter, col: usize },
    #[error("insertion produced an invalid tableau: {0}")]
    InvalidResult(Violation),
    #[error("P has shape {p:?} but Q has shape {q:?}")]
    ShapeMismatch { p: Vec<usize>, q: Vec<usize> },
    #[error("recording tableau is not standard")]
    NotStandard,
    #[error("recording tableau: {0}")]
    Tableau(#[from] TableauError),
    #[error("recording tableau has an entry {value} larger than the block count {m}")]
    TooManyBlocks { value: u32, m: usize },
    #[error("reverse insertion got stuck at step {step}")]
    Stuck { step: usize },
    #[error("the pair is not the image of any word")]
    NotInImage,
    #[error("{0}")]
    Factorization(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TerminalKind {
    Row,
    Column,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionOutcome {
    pub tableau: IncreasingShiftedTableau,
    pub terminal_cell: (usize, usize),
    pub terminal_kind: TerminalKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertionPair {
    pub insertion: IncreasingShiftedTableau,
    pub recording: PrimedTableau,
}

/// Which insertion rules apply. The orthogonal rules lack the parity rule on
/// the main diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rules {
    Symplectic,
    Orthogonal,
}

#[derive(Clone, Copy)]
enum Mode {
    Row(usize),
    Col(usize),
}

/// Cell count of column `col`; column cells are always rows `1..=k`.
fn column_height(rows: &[Vec<u32>], col: usize) -> usize {
    (1..=rows.len().min(col))
        .take_while(|&r| col - r < rows[r - 1].len())
        .count()
}

pub(crate) fn insert_with(
    t: &IncreasingShiftedTableau,
    letter: Letter,
    rules: Rules,
) -> Result<InsertionOutcome, InsertionError> {
    let mut rows = t.rows().to_vec();
    let mut a = letter;
    let mut mode = Mode::Row(1);
    let (cell, kind) = loop {
        match mode {
            Mode::Row(r) => {
                if r > rows.len() {
                    rows.push(vec![a]);
                    break ((r, r), TerminalKind::Row);
                }
                let row = &mut rows[r - 1];
                let Some(k) = row.iter().position(|&x| x >= a) else {
                    row.push(a);
                    break ((r, r + row.len() - 1), TerminalKind::Row);
                };
                let b = row[k];
                if a == b {
                    a += 1;
                    mode = Mode::Row(r + 1);
                } else if rules == Rules::Symplectic && k == 0 && a % 2 != b % 2 {
                    a += 2;
                    mode = Mode::Col(r + 1);
                } else {
                    // Orthogonal: as in Hecke insertion, skip a replacement
                    // that would sit under an entry at least as large.
                    let above = r.checked_sub(2).and_then(|up| rows[up].get(k + 1)).copied();
                    let row = &mut rows[r - 1];
                    if rules == Rules::Symplectic || above.is_none_or(|x| x < a) {
                        row[k] = a;
                    }
                    a = b;
                    mode = if k == 0 { Mode::Col(r + 1) } else { Mode::Row(r + 1) };
                }
            }
            Mode::Col(c) => {
                let height = column_height(&rows, c);
                let found = (1..=height).find(|&r| rows[r - 1][c - r] >= a);
                let Some(r) = found else {
                    let below = height + 1;
                    if below <= rows.len() && rows[below - 1].len() + below == c {
                        rows[below - 1].push(a);
                    } else if below == rows.len() + 1 && below == c {
                        rows.push(vec![a]);
                    } else {
                        return Err(InsertionError::ColumnOverflow { letter: a, col: c });
                    }
                    break ((below, c), TerminalKind::Column);
                };
                let b = rows[r - 1][c - r];
                let left = (c > r).then(|| rows[r - 1][c - r - 1]);
                if a != b && (rules == Rules::Symplectic || left.is_none_or(|x| x < a)) {
                    rows[r - 1][c - r] = a;
                }
                a = if a == b { a + 1 } else { b };
                mode = Mode::Col(c + 1);
            }
        }
    };
    let tableau = ShiftedTableau::from_rows_unchecked(rows);
    tableau.validate().map_err(InsertionError::InvalidResult)?;
    Ok(InsertionOutcome { tableau, terminal_cell: cell, terminal_kind: kind })
}

/// `T ← a`. The result is checked after the fact; an invalid result or a
/// column overflow means `row(T)·a` was not an FPF-involution word.
pub fn insert_letter_sp(
    t: &IncreasingShiftedTableau,
    a: Letter,
) -> Result<InsertionOutcome, InsertionError> {
    insert_with(t, a, Rules::Symplectic)
}

pub(crate) fn insert_word_with(w: &Word, rules: Rules) -> Result<InsertionPair, InsertionError> {
    let mut p = IncreasingShiftedTableau::empty();
    let mut q_rows: Vec<Vec<PrimedEntry>> = Vec::new();
    for (k, &a) in w.iter().enumerate() {
        let out = insert_with(&p, a, rules)?;
        let (r, c) = out.terminal_cell;
        let entry = PrimedEntry {
            value: k as u32 + 1,
            primed: out.terminal_kind == TerminalKind::Column,
        };
        if r > q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[r - 1].len() + r, c);
        q_rows[r - 1].push(entry);
        p = out.tableau;
    }
    Ok(InsertionPair {
        insertion: p,
        recording: ShiftedTableau::from_rows_unchecked(q_rows),
    })
}

/// `(P_Sp(w), Q_Sp(w))`. Fails with the offending position when `w` is not
/// an FPF-involution word.
pub fn insert_word_sp(w: &Word) -> Result<InsertionPair, InsertionError> {
    word_to_involution(w)?;
    insert_word_with(w, Rules::Symplectic)
}

/// Replace step `k` of a standard recording tableau by the block index of the
/// `k`-th letter.
pub(crate) fn relabel(q: &PrimedTableau, blocks: &[usize]) -> PrimedTableau {
    q.map(|e| PrimedEntry {
        value: blocks[e.value as usize - 1] as u32,
        primed: e.primed,
    })
}

pub fn insert_factorization_sp(f: &Factorization) -> Result<InsertionPair, InsertionError> {
    let pair = insert_word_sp(&f.word())?;
    Ok(InsertionPair {
        recording: relabel(&pair.recording, &f.block_indices()),
        insertion: pair.insertion,
    })
}

fn check_shapes(p: &IncreasingShiftedTableau, q: &PrimedTableau) -> Result<(), InsertionError> {
    if p.row_lengths() != q.row_lengths() {
        return Err(InsertionError::ShapeMismatch { p: p.row_lengths(), q: q.row_lengths() });
    }
    p.validate().map_err(InsertionError::InvalidResult)?;
    q.validate().map_err(|v| InsertionError::Tableau(TableauError::Invalid(v)))?;
    Ok(())
}

/// Undo one insertion: `y` was bumped out of the removed box and reverse
/// insertion resumes in `mode`.
fn reverse_step(rows: &mut [Vec<u32>], mut y: Letter, mut mode: Mode, step: usize) -> Result<Letter, InsertionError> {
    let stuck = || InsertionError::Stuck { step };
    loop {
        match mode {
            Mode::Row(0) => return Ok(y),
            Mode::Row(r) => {
                let row = &mut rows[r - 1];
                let k = row.iter().rposition(|&x| x < y).ok_or_else(stuck)?;
                let x = row[k];
                if !(x + 1 == y && row.get(k + 1) == Some(&y)) {
                    row[k] = y;
                }
                y = x;
                mode = Mode::Row(r - 1);
            }
            Mode::Col(0) => return Err(stuck()),
            Mode::Col(c) => {
                let height = column_height(rows, c);
                let r = (1..=height).rev().find(|&r| rows[r - 1][c - r] < y).ok_or_else(stuck)?;
                let x = rows[r - 1][c - r];
                let diagonal = r == c;
                let y_below = r < height && rows[r][c - r - 1] == y;
                if diagonal && x % 2 != y % 2 {
                    y = y.checked_sub(2).filter(|&v| v >= 1).ok_or_else(stuck)?;
                    mode = Mode::Row(c - 1);
                } else if x + 1 == y && y_below {
                    y = x;
                    mode = Mode::Col(c - 1);
                } else {
                    rows[r - 1][c - r] = y;
                    y = x;
                    mode = if diagonal { Mode::Row(c - 1) } else { Mode::Col(c - 1) };
                }
            }
        }
    }
}

/// Recover `w` from `(P_Sp(w), Q_Sp(w))` with `Q` standard.
pub fn reverse_insert_sp(
    p: &IncreasingShiftedTableau,
    q: &PrimedTableau,
) -> Result<Word, InsertionError> {
    check_shapes(p, q)?;
    if !q.is_standard() {
        return Err(InsertionError::NotStandard);
    }
    let n = p.len();
    let mut rows = p.rows().to_vec();
    let mut cells: Vec<((usize, usize), bool)> = vec![((0, 0), false); n];
    for (cell, e) in q.entries() {
        cells[e.value as usize - 1] = (cell, e.primed);
    }
    let mut letters = vec![0; n];
    for k in (1..=n).rev() {
        let ((i, j), primed) = cells[k - 1];
        let last = rows[i - 1].len() + i - 1;
        if j != last || (i < rows.len() && rows[i].len() + i >= j) {
            return Err(InsertionError::NotInImage);
        }
        let y = rows[i - 1].pop().unwrap();
        if rows[i - 1].is_empty() {
            rows.pop();
        }
        let mode = if primed { Mode::Col(j - 1) } else { Mode::Row(i - 1) };
        letters[k - 1] = reverse_step(&mut rows, y, mode, k)?;
    }
    let w = Word::new(letters).map_err(|_| InsertionError::NotInImage)?;
    match insert_word_sp(&w) {
        Ok(pair) if &pair.insertion == p && &pair.recording == q => Ok(w),
        _ => Err(InsertionError::NotInImage),
    }
}

/// Inverse of [`insert_factorization_sp`] for `m`-block factorizations.
pub fn reverse_factorization_sp(
    p: &IncreasingShiftedTableau,
    q: &PrimedTableau,
    m: usize,
) -> Result<Factorization, InsertionError> {
    check_shapes(p, q)?;
    let mut sizes = vec![0usize; m];
    for (_, e) in q.entries() {
        let slot = sizes
            .get_mut(e.value as usize - 1)
            .ok_or(InsertionError::TooManyBlocks { value: e.value, m })?;
        *slot += 1;
    }
    let w = reverse_insert_sp(p, &q.standardize()?)?;
    let f = Factorization::cut(&w, &sizes).map_err(|_| InsertionError::NotInImage)?;
    match insert_factorization_sp(&f) {
        Ok(pair) if &pair.insertion == p && &pair.recording == q => Ok(f),
        _ => Err(InsertionError::NotInImage),
    }
}
