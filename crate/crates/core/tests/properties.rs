use proptest::prelude::*;

use qcrystal::fpf::word_to_involution;
use qcrystal::orthogonal::{insert_word_o, word_to_involution_o, Involution};
use qcrystal::relations::{sp_equivalent, Closure, Relation};
use qcrystal::{
    enumerate_words, insert_factorization_sp, insert_letter_sp, insert_word_sp, reverse_factorization_sp,
    reverse_insert_sp, Factorization, FpfInvolution, IncreasingShiftedTableau, Word,
};

const WINDOW: u32 = 8;

// Walk from Θ, at each step taking the choice-th applicable letter.
fn fpf_word(choices: &[usize]) -> Word {
    let mut z = FpfInvolution::theta(WINDOW as usize).unwrap();
    let mut w = Word::empty();
    for &k in choices {
        let ok: Vec<u32> = (1..WINDOW).filter(|&u| z.apply(u) < z.apply(u + 1)).collect();
        if ok.is_empty() {
            break;
        }
        let u = ok[k % ok.len()];
        z = z.apply_letter(u).unwrap();
        w.push(u);
    }
    w
}

fn involution_word(choices: &[usize]) -> Word {
    let mut z = Involution::identity(WINDOW as usize);
    let mut w = Word::empty();
    for &k in choices {
        let ok: Vec<u32> = (1..WINDOW).filter(|&u| z.apply(u) < z.apply(u + 1)).collect();
        if ok.is_empty() {
            break;
        }
        let u = ok[k % ok.len()];
        z = z.apply_letter(u).unwrap();
        w.push(u);
    }
    w
}

fn words() -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..64, 0..9).prop_map(|c| fpf_word(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reading_word_is_an_equivalent_word(w in words()) {
        let p = insert_word_sp(&w).unwrap().insertion;
        let row = p.row_reading_word();
        prop_assert_eq!(word_to_involution(&row).unwrap(), word_to_involution(&w).unwrap());
        prop_assert!(sp_equivalent(&row, &w));
    }

    #[test]
    fn round_trip_and_valid_recording(w in words()) {
        let pair = insert_word_sp(&w).unwrap();
        prop_assert!(pair.insertion.validate().is_ok());
        prop_assert!(pair.recording.validate().is_ok());
        prop_assert!(pair.recording.is_standard());
        prop_assert_eq!(pair.insertion.shape(), pair.recording.shape());
        prop_assert_eq!(reverse_insert_sp(&pair.insertion, &pair.recording).unwrap(), w);
    }

    #[test]
    fn one_box_per_letter(w in words()) {
        let mut t = IncreasingShiftedTableau::empty();
        for (k, &a) in w.iter().enumerate() {
            let out = insert_letter_sp(&t, a).unwrap();
            prop_assert_eq!(out.tableau.len(), k + 1);
            t = out.tableau;
        }
    }

    #[test]
    fn diagonal_entries_are_even(w in words()) {
        let p = insert_word_sp(&w).unwrap().insertion;
        prop_assert!(p.diagonal().iter().all(|d| d % 2 == 0), "{:?}", p);
    }

    #[test]
    fn words_start_even_and_share_length(w in words()) {
        prop_assume!(!w.is_empty());
        prop_assert_eq!(w.letters()[0] % 2, 0);
        let z = word_to_involution(&w).unwrap();
        prop_assert!(enumerate_words(&z).iter().all(|v| v.len() == w.len()));
        prop_assert_eq!(z.fpf_length(), w.len());
    }

    #[test]
    fn equal_insertion_tableaux_are_equivalent(a in words(), b in words()) {
        let (pa, pb) = (insert_word_sp(&a).unwrap().insertion, insert_word_sp(&b).unwrap().insertion);
        if pa == pb {
            prop_assert!(Closure::new(Relation::Symplectic).equivalent(&a, &b));
        }
    }

    #[test]
    fn factorizations_round_trip(w in words(), m in 1usize..5, seed in any::<u64>()) {
        let all = Factorization::all_of(&w, m);
        prop_assume!(!all.is_empty());
        let f = &all[seed as usize % all.len()];
        let pair = insert_factorization_sp(f).unwrap();
        prop_assert!(pair.recording.validate().is_ok());
        let st = pair.recording.standardize().unwrap();
        prop_assert!(st.is_standard());
        prop_assert_eq!(&st, &insert_word_sp(&w).unwrap().recording);
        prop_assert_eq!(&reverse_factorization_sp(&pair.insertion, &pair.recording, m).unwrap(), f);
    }

    #[test]
    fn standardization_is_injective(w in words(), m in 2usize..5) {
        let all = Factorization::all_of(&w, m);
        let qs: Vec<_> = all.iter().map(|f| insert_factorization_sp(f).unwrap().recording).collect();
        let distinct: std::collections::BTreeSet<_> = qs.iter().collect();
        prop_assert_eq!(distinct.len(), qs.len());
    }

    #[test]
    fn orthogonal_insertion_is_consistent(c in prop::collection::vec(0usize..64, 0..9)) {
        let w = involution_word(&c);
        let pair = insert_word_o(&w).unwrap();
        prop_assert!(pair.recording.validate().is_ok());
        prop_assert_eq!(pair.insertion.len(), w.len());
        let z = word_to_involution_o(&w).unwrap();
        prop_assert_eq!(word_to_involution_o(&pair.insertion.row_reading_word()).unwrap(), z);
    }
}
