//! Odd operators on primed tableaux. Only the first row is involved.

use crate::tableau::{PrimedEntry, PrimedTableau};

pub fn e_odd_pt(t: &PrimedTableau) -> Option<PrimedTableau> {
    let row = t.rows().first()?;
    let at = if row[0] == PrimedEntry::unprimed(2) {
        0
    } else {
        row.iter().skip(1).position(|&x| x == PrimedEntry::primed(2))? + 1
    };
    let mut rows = t.rows().to_vec();
    rows[0][at] = PrimedEntry::unprimed(1);
    Some(PrimedTableau::from_rows_unchecked(rows))
}

pub fn f_odd_pt(t: &PrimedTableau) -> Option<PrimedTableau> {
    let row = t.rows().first()?;
    let at = row.iter().rposition(|&x| x == PrimedEntry::unprimed(1))?;
    if row.get(at + 1) == Some(&PrimedEntry::primed(2)) {
        return None;
    }
    let mut rows = t.rows().to_vec();
    rows[0][at] = if at == 0 { PrimedEntry::unprimed(2) } else { PrimedEntry::primed(2) };
    Some(PrimedTableau::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::ShiftedTableau;

    fn pt(rows: &[&[&str]]) -> PrimedTableau {
        ShiftedTableau::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn lowering() {
        assert_eq!(f_odd_pt(&pt(&[&["1", "1"]])), Some(pt(&[&["1", "2'"]])));
        assert_eq!(f_odd_pt(&pt(&[&["1", "2'"]])), None);
        assert_eq!(f_odd_pt(&pt(&[&["1"]])), Some(pt(&[&["2"]])));
        assert_eq!(f_odd_pt(&pt(&[&["2"]])), None);
        assert_eq!(f_odd_pt(&PrimedTableau::empty()), None);
    }

    #[test]
    fn raising() {
        assert_eq!(e_odd_pt(&pt(&[&["2"]])), Some(pt(&[&["1"]])));
        assert_eq!(e_odd_pt(&pt(&[&["1", "2'"]])), Some(pt(&[&["1", "1"]])));
        assert_eq!(e_odd_pt(&pt(&[&["1", "2"]])), None);
    }
}
