//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use qcrystal::crystal::build_graph;
use qcrystal::fpf::{is_fpf_involution_word, word_to_involution};
use qcrystal::orthogonal::{enumerate_words_o, is_involution_word};
use qcrystal::relations::sp_equivalent;
use qcrystal::verify::{
    check_ck_invariance, check_crystal_o, check_crystal_sp, check_factorization_bijection,
    check_word_bijection, summarize, Check,
};
use qcrystal::{
    enumerate_words, insert_factorization_sp, insert_word_sp, Factorization, FpfInvolution,
    IncreasingShiftedTableau, Involution, PrimedTableau, Word,
};

use common::{as_sets, table_acb, table_bac, table_braid, FpfOracle, InvolutionOracle, Rows};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn json<T: serde::Serialize>(t: &T) -> String {
    serde_json::to_string(t).unwrap()
}

fn fixtures() -> Check {
    let mut c = Check::new("fixtures");
    let pair = insert_word_sp(&w("6241")).unwrap();
    let p = json(&pair.insertion);
    let q = json(&pair.recording);
    c.expect(p == r#"{"shape":[3,1],"rows":[["2","3","4"],["6"]]}"#, || format!("P(6241) = {p}"));
    c.expect(q == r#"{"shape":[3,1],"rows":[["1","2'","4'"],["3"]]}"#, || format!("Q(6241) = {q}"));

    let f: Factorization = "(6)(24)(1)".parse().unwrap();
    let q = json(&insert_factorization_sp(&f).unwrap().recording);
    c.expect(q == r#"{"shape":[3,1],"rows":[["1","2'","3'"],["2"]]}"#, || format!("Q((6)(24)(1)) = {q}"));

    let t: PrimedTableau = serde_json::from_str(
        r#"{"shape":[5,3,1],"rows":[["1","1","2'","3'","4'"],["2","3'","4"],["4"]]}"#,
    )
    .unwrap();
    let st = json(&t.standardize().unwrap());
    c.expect(
        st == r#"{"shape":[5,3,1],"rows":[["1","2","3'","5'","7'"],["4","6'","9"],["8"]]}"#,
        || format!("standardized = {st}"),
    );

    let a = json(&insert_word_sp(&w("26434")).unwrap().insertion);
    let b = json(&insert_word_sp(&w("42346")).unwrap().insertion);
    c.expect(a == r#"{"shape":[3,2],"rows":[["2","3","4"],["4","6"]]}"#, || format!("P(26434) = {a}"));
    c.expect(b == r#"{"shape":[4,1],"rows":[["2","3","4","6"],["4"]]}"#, || format!("P(42346) = {b}"));
    c.expect(a != b, || "the two insertion tableaux agree".into());
    c.expect(sp_equivalent(&w("26434"), &w("42346")), || "26434 and 42346 not Sp-equivalent".into());
    c
}

fn fixture_graph() -> Check {
    let mut c = Check::new("graph of 546213, m=3");
    let fixture = common::fixture_546213();
    let z = FpfInvolution::from_oneline(&fixture.involution).unwrap();
    let got = build_graph(&z, fixture.m).to_json();
    c.expect(got.vertices == fixture.vertices, || format!("vertices {:?}", got.vertices));
    let have: BTreeSet<String> = got.edges.iter().map(json).collect();
    let want: BTreeSet<String> = fixture.edges.iter().map(json).collect();
    for e in have.difference(&want) {
        c.fail(format!("extra edge {e}"));
    }
    for e in want.difference(&have) {
        c.fail(format!("missing edge {e}"));
    }
    c.checked += want.len();
    c
}

fn enumeration() -> Check {
    let mut c = Check::new("words of 546213");
    let z = FpfInvolution::from_oneline(&[5, 4, 6, 2, 1, 3]).unwrap();
    let got: Vec<String> = enumerate_words(&z).iter().map(|w| w.compact()).collect();
    let want = ["2143", "2343", "2413", "2431", "2434", "4213", "4231", "4234"];
    c.expect(got == want, || format!("got {got:?}"));
    c
}

fn round_trips() -> Check {
    let zs = FpfInvolution::all(6).unwrap();
    let mut parts: Vec<Check> = zs.par_iter().map(check_word_bijection).collect();
    for m in 2..=4 {
        parts.extend(zs.par_iter().map(|z| check_factorization_bijection(z, m)).collect::<Vec<_>>());
    }
    Check::merged("round trips", parts)
}

fn rows_of(t: &IncreasingShiftedTableau) -> Rows {
    t.rows().to_vec()
}

// Both sides of a move from a one-box tableau give the same insertion
// tableau, and it has the printed rows. A printed tableau that is not
// increasing, or whose reading word is not a word for the same involution,
// cannot be an insertion tableau; such mismatches are tallied separately.
fn single_box(c: &mut Check, kinds: &mut Vec<&'static str>, p: u32, left: [u32; 3], right: [u32; 3], table: Option<Rows>) {
    let lw = Word::new([&[p][..], &left].concat()).unwrap();
    let rw = Word::new([&[p][..], &right].concat()).unwrap();
    if !is_fpf_involution_word(&lw) {
        return;
    }
    let (pl, pr) = (insert_word_sp(&lw).unwrap().insertion, insert_word_sp(&rw).map(|x| x.insertion));
    c.expect(pr.as_ref() == Ok(&pl), || format!("P({lw}) = {pl:?}, P({rw}) = {pr:?}"));
    let Some(rows) = table else {
        kinds.push("no printed case");
        c.expect(false, || format!("{lw} is a word but no printed case applies"));
        return;
    };
    if as_sets(&rows_of(&pl)) == as_sets(&rows) {
        c.checked += 1;
        return;
    }
    let printed = IncreasingShiftedTableau::from_rows(rows.clone()).ok().filter(|t| t.validate().is_ok());
    let kind = match printed {
        None => "printed tableau not increasing",
        Some(t) if word_to_involution(&t.row_reading_word()).ok() != word_to_involution(&lw).ok() => {
            "printed reading word has another involution"
        }
        Some(_) => "genuine disagreement",
    };
    kinds.push(kind);
    c.expect(false, || format!("P({lw}) = {:?}, printed {rows:?} ({kind})", rows_of(&pl)));
}

fn single_box_tables() -> Check {
    let mut c = Check::new("single-box tables");
    let mut kinds = Vec::new();
    const N: u32 = 12;
    for p in 1..=N {
        for a in 1..=N {
            if a < N {
                single_box(&mut c, &mut kinds, p, [a, a + 1, a], [a + 1, a, a + 1], table_braid(p, a));
            }
            for b in a + 1..=N {
                for cc in b + 1..=N {
                    single_box(&mut c, &mut kinds, p, [b, a, cc], [b, cc, a], table_bac(p, a, b, cc));
                    single_box(&mut c, &mut kinds, p, [a, cc, b], [cc, a, b], table_acb(p, a, b, cc));
                }
            }
        }
    }
    for (k, (kind, n)) in common::tally(kinds).into_iter().enumerate() {
        c.failures.insert(k, format!("{n} mismatches: {kind}"));
    }
    c
}

fn ck_invariance() -> Vec<Check> {
    let zs: Vec<FpfInvolution> =
        FpfInvolution::all(8).unwrap().into_iter().filter(|z| z.fpf_length() <= 8).collect();
    let parts: Vec<Check> = zs.par_iter().map(|z| check_ck_invariance(z, 8)).collect();
    vec![Check::merged("CK invariance", parts), single_box_tables()]
}

fn crystals_sp() -> Vec<Check> {
    let zs = FpfInvolution::all(6).unwrap();
    let jobs: Vec<(FpfInvolution, usize)> =
        zs.iter().flat_map(|z| (2..=5).map(move |m| (z.clone(), m))).collect();
    summarize(jobs.par_iter().flat_map(|(z, m)| check_crystal_sp(z, *m, false)).collect())
}

fn crystals_o() -> Vec<Check> {
    let jobs: Vec<(Involution, usize)> =
        Involution::all(5).into_iter().flat_map(|z| (2..=3).map(move |m| (z.clone(), m))).collect();
    summarize(jobs.par_iter().flat_map(|(z, m)| check_crystal_o(z, *m, false)).collect())
}

fn oracles() -> Check {
    let mut c = Check::new("oracles");
    let sp = FpfOracle::new(5, 6);
    for z in FpfInvolution::all(6).unwrap() {
        let want = sp.words.get(&sp.key(&z)).cloned().unwrap_or_default();
        let got = enumerate_words(&z);
        c.expect(got == want, || format!("sp {z}: {} words, oracle {}", got.len(), want.len()));
    }
    for v in common::all_words(5, 6) {
        c.expect(is_fpf_involution_word(&v) == sp.is_minimal(&v), || format!("sp validity of {v}"));
    }
    let o = InvolutionOracle::new(4, 6);
    for z in Involution::all(5) {
        let want = o.words.get(&o.key(&z)).cloned().unwrap_or_default();
        let got = enumerate_words_o(&z);
        c.expect(got == want, || format!("o {z}: {} words, oracle {}", got.len(), want.len()));
    }
    for v in common::all_words(4, 6) {
        c.expect(is_involution_word(&v) == o.is_minimal(&v), || format!("o validity of {v}"));
    }
    c
}

type Criterion = Box<dyn Fn() -> Vec<Check>>;

fn main() {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("fixture exactness", Box::new(|| vec![fixtures()])),
        ("crystal graph fixture", Box::new(|| vec![fixture_graph()])),
        ("enumeration", Box::new(|| vec![enumeration()])),
        ("bijection round trips", Box::new(|| vec![round_trips()])),
        ("CK invariance and single-box tables", Box::new(ck_invariance)),
        ("symplectic crystal axioms", Box::new(crystals_sp)),
        ("orthogonal crystal", Box::new(crystals_o)),
        ("oracle cross-validation", Box::new(|| vec![oracles()])),
    ];
    let mut all_ok = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let checks = run();
        let ok = checks.iter().all(Check::passed);
        all_ok &= ok;
        let checked: usize = checks.iter().map(|c| c.checked).sum();
        println!(
            "{} criterion {}: {name} ({checked} checked, {:.1?})",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            start.elapsed()
        );
        for c in checks.iter().filter(|c| !c.passed()) {
            println!("  {c}");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
