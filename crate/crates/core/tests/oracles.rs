mod common;

use common::{all_words, FpfOracle, InvolutionOracle};
use qcrystal::fpf::is_fpf_involution_word;
use qcrystal::orthogonal::{enumerate_words_o, is_involution_word};
use qcrystal::{enumerate_words, FpfInvolution, Involution};

#[test]
fn fpf_words_match_brute_force_search() {
    let oracle = FpfOracle::new(5, 6);
    for z in FpfInvolution::all(6).unwrap() {
        let want = oracle.words.get(&oracle.key(&z)).cloned().unwrap_or_default();
        assert_eq!(enumerate_words(&z), want, "{z}");
        assert!(want.iter().all(|w| w.len() == z.fpf_length()));
    }
}

#[test]
fn fpf_validity_matches_minimality() {
    let oracle = FpfOracle::new(7, 5);
    for w in all_words(7, 5) {
        assert_eq!(is_fpf_involution_word(&w), oracle.is_minimal(&w), "{w}");
    }
}

#[test]
fn eight_words_for_546213_by_search() {
    let oracle = FpfOracle::new(5, 4);
    let z = FpfInvolution::from_oneline(&[5, 4, 6, 2, 1, 3]).unwrap();
    assert_eq!(oracle.words[&oracle.key(&z)].len(), 8);
}

#[test]
fn involution_words_match_brute_force_search() {
    let oracle = InvolutionOracle::new(4, 6);
    for z in Involution::all(5) {
        let want = oracle.words.get(&oracle.key(&z)).cloned().unwrap_or_default();
        assert_eq!(enumerate_words_o(&z), want, "{z}");
        assert!(want.iter().all(|w| w.len() == z.involution_length()));
    }
}

#[test]
fn involution_validity_matches_minimality() {
    let oracle = InvolutionOracle::new(4, 6);
    for w in all_words(4, 6) {
        assert_eq!(is_involution_word(&w), oracle.is_minimal(&w), "{w}");
    }
}
