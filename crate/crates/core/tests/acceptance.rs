//! Acceptance criteria, one test per criterion. Each test prints a single
//! pass/fail line (visible with `--nocapture`) and fails the target on a
//! violated criterion.

use folding::constructions::{alternating_covering, fig9_covering, positive_covering};
use folding::covering::{li_patch_check, order4_fingerprint};
use folding::verify::{run_check, Params};

fn criterion(n: u32, label: &str, pass: bool) {
    println!(
        "criterion {n} ({label}): {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} ({label}) failed");
}

fn check(id: &str) -> bool {
    let report = run_check(id, &Params::new()).expect("registered check");
    if let Some(w) = &report.counterexample {
        println!("  {id}: {w}");
    }
    report.pass
}

#[test]
fn criterion_01_factor_complexity() {
    criterion(1, "factor complexity 2,4,8,12,18,23 then 4t", check("thm1.8-complexity"));
}

#[test]
fn criterion_02_recurrence() {
    criterion(2, "factors of length 2^r recur in 10*2^r-2 windows", check("thm1.10-recurrence"));
}

#[test]
fn criterion_03_enumeration() {
    let pass = check("prop3-enumeration") && check("cor2.2-selfavoiding");
    criterion(3, "2^n folding words; curves self-avoiding", pass);
}

#[test]
fn criterion_04_derivation_calculus() {
    criterion(4, "derivative/antiderivative round trip", check("prop2.1-derivation"));
}

#[test]
fn criterion_05_diamond_coverage() {
    criterion(5, "7-/9-folding curves cover radius-2/3 diamonds", check("thm3.1-diamond-coverage"));
}

#[test]
fn criterion_06_diameter_bounds() {
    let pass = check("lemma3.16.1-diameter") && check("lemma3.16.2-segments");
    criterion(6, "diameter and segment-count bounds", pass);
}

#[test]
fn criterion_07_parallel_recurrence() {
    criterion(7, "parallel/opposite copies within 88n", check("prop2.6-parallel-88n"));
}

#[test]
fn criterion_08_constructions_validate() {
    // Counts 1, 2, 6, 8 at the pinned window sizes, plus derive stability
    // with unchanged counts for the locally isomorphic constructions (the
    // derivation statement presupposes local isomorphism, which the
    // eight-curve covering lacks by design).
    let pass = check("constructions-validate")
        && check("prop3.3-derive-validity")
        && check("prop3.3-count-stability");
    criterion(8, "constructions validate; derived coverings stay valid", pass);
}

#[test]
fn criterion_09_local_isomorphism() {
    // The recurrence radius of these coverings is about 32, so the window
    // must be at least that wide for the patch search to report it.
    let pos = positive_covering(32).expect("positive covering");
    let alt = alternating_covering(32).expect("alternating covering");
    let fig9 = fig9_covering(16).expect("eight-curve covering");
    let mut pass = true;
    for k in [4, 6] {
        pass &= li_patch_check(&pos, k).verdict;
        pass &= li_patch_check(&alt, k).verdict;
    }
    pass &= !li_patch_check(&fig9, 8).verdict;
    // The eight curves split 4/4 into a fingerprint class and its exact
    // letterwise negation.
    let fps: Vec<_> = fig9
        .curves
        .iter()
        .map(|cc| order4_fingerprint(&cc.curve.turns))
        .collect();
    let mut neg0: Vec<Vec<i8>> = fps[0]
        .iter()
        .map(|w| w.iter().map(|&t| -t).collect())
        .collect();
    neg0.sort();
    pass &= !fps[0].is_empty();
    pass &= fps.iter().filter(|f| **f == fps[0]).count() == 4;
    pass &= fps.iter().filter(|f| **f == neg0).count() == 4;
    criterion(9, "li verdicts and the 4/4 fingerprint split", pass);
}

#[test]
fn criterion_10_sigma_periodicity() {
    criterion(10, "sigma has period 4 off the third derived vertex set", check("lemma3.4-sigma-periodicity"));
}

#[test]
fn criterion_11_exterior_infinitude() {
    criterion(11, "exterior components reach the window boundary", check("lemma2.4.1-exterior"));
}
