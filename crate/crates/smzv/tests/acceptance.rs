//! Full acceptance battery.
//!
//! Each test covers one numbered criterion, prints a single summary line, and
//! fails loudly with the offending report if anything regresses. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines on success.

use std::time::{Duration, Instant};

use smzv::verify::{
    pow10_tolerance, verify_antipode, verify_astsh, verify_conjectures, verify_duality,
    verify_index_lemmas, verify_intro_t2, verify_numeric, verify_regshwd, verify_series_target,
    verify_summary, verify_theorem, verify_word_lemmas, Report,
};

const DIGITS: u32 = 60;

fn tol40() -> smzv::numeric::BigFloat {
    pow10_tolerance(40, DIGITS)
}

fn gate(criterion: u32, label: &str, passed: bool, elapsed: Duration, report: &Report) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {verdict} — {label} ({} items, {:.2?})",
        report.items.len(),
        elapsed
    );
    assert!(
        passed,
        "criterion {criterion} failed: {label}\n{}",
        report.render_text()
    );
}

#[test]
fn criterion_01_word_lemmas_exact_to_n_ten() {
    let start = Instant::now();
    let report = verify_word_lemmas(None, Some(10)).expect("battery runs");
    let elapsed = start.elapsed();
    let passed = report.passed() && elapsed <= Duration::from_secs(60);
    gate(1, "word lemmas hold exactly for n <= 10 in under 60 s", passed, elapsed, &report);
}

#[test]
fn criterion_02_index_lemmas_exact() {
    let start = Instant::now();
    let report = verify_index_lemmas(None, None, 0).expect("battery runs");
    gate(
        2,
        "alternating-sum, I0, I1, and sigma-derivation identities hold exactly",
        report.passed(),
        start.elapsed(),
        &report,
    );
}

#[test]
fn criterion_03_regularization_paths_agree() {
    let start = Instant::now();
    let report = verify_regshwd().expect("battery runs");
    // each item name records how many indices it covered; the criterion asks
    // for at least 200 cases in total
    let cases: u32 = report
        .items
        .iter()
        .map(|item| {
            item.name
                .split_whitespace()
                .find_map(|tok| tok.parse::<u32>().ok())
                .expect("item names carry a case count")
        })
        .sum();
    let passed = report.passed() && cases >= 200;
    gate(
        3,
        "both regularization paths agree exactly for m <= 4, weight <= 8",
        passed,
        start.elapsed(),
        &report,
    );
}

#[test]
fn criterion_04_numeric_kernel_closed_forms_and_consistency() {
    let start = Instant::now();
    let closed = verify_numeric(DIGITS, &tol40(), 0).expect("battery runs");
    let duality = verify_duality(DIGITS, &tol40(), 0).expect("battery runs");
    let elapsed = start.elapsed();
    gate(
        4,
        "closed forms to 1e-55 plus shuffle/stuffle consistency to 1e-40",
        closed.passed(),
        elapsed,
        &closed,
    );
    assert!(
        duality.passed(),
        "criterion 4 failed on the duality half:\n{}",
        duality.render_text()
    );
}

fn theorem_gate(criterion: u32, id: &str, label: &str) {
    let start = Instant::now();
    let report = verify_theorem(Some(id), Some(3), DIGITS, &tol40()).expect("battery runs");
    let elapsed = start.elapsed();
    let passed = report.passed() && elapsed <= Duration::from_secs(600);
    gate(criterion, label, passed, elapsed, &report);
}

#[test]
fn criterion_05_theorem_main1() {
    theorem_gate(5, "main1", "split series of (3,1)^n matches its closed form mod t^3");
}

#[test]
fn criterion_06_theorem_main2() {
    theorem_gate(6, "main2", "split series of (1,3)^n,1 matches its closed form mod t^3");
}

#[test]
fn criterion_07_theorem_main0() {
    theorem_gate(7, "main0", "split series of (1,3)^n matches its closed form mod t^2");
}

#[test]
fn criterion_08_summary_identities() {
    let start = Instant::now();
    let report = verify_summary(None, DIGITS, &tol40()).expect("battery runs");
    // the stated identities must pass; the t^3 rows are informational extras
    let has_informational_t3 = report
        .items
        .iter()
        .any(|item| item.informational && item.name.contains("t^3"));
    gate(
        8,
        "vanishing, single-index, and depth-two summary identities to 1e-40",
        report.passed() && has_informational_t3,
        start.elapsed(),
        &report,
    );
}

#[test]
fn criterion_09_weight_ten_coefficient() {
    let start = Instant::now();
    let report = verify_intro_t2(DIGITS, &tol40()).expect("battery runs");
    gate(
        9,
        "t^2 coefficient of the split series of (1,3,1,3) matches its six-term value",
        report.passed(),
        start.elapsed(),
        &report,
    );
}

#[test]
fn criterion_10_generating_series_lemmas() {
    let start = Instant::now();
    let report = verify_series_target(None, 14, DIGITS, &tol40()).expect("battery runs");
    let elapsed = start.elapsed();
    let passed =
        report.passed() && report.items.len() >= 12 && elapsed <= Duration::from_secs(900);
    gate(
        10,
        "all generating-series identities at order 14 to 1e-40 in under 15 min",
        passed,
        elapsed,
        &report,
    );
}

#[test]
fn criterion_11_flavors_agree_numerically() {
    let start = Instant::now();
    let report = verify_astsh(DIGITS, &tol40(), 0).expect("battery runs");
    gate(
        11,
        "shuffle and harmonic split series agree on no-adjacent-ones indices, weight <= 8",
        report.passed(),
        start.elapsed(),
        &report,
    );
}

#[test]
fn criterion_12_antipode_formula() {
    let start = Instant::now();
    let report = verify_antipode(DIGITS, &tol40()).expect("battery runs");
    gate(
        12,
        "alternating prefix/starred-suffix sums vanish for parts >= 2, weight <= 10",
        report.passed(),
        start.elapsed(),
        &report,
    );
}

#[test]
fn mod_pi2_statements_are_flagged_not_verified() {
    // documented behavior: statements that only hold modulo pi^2 are emitted
    // as informational items and never affect a verdict
    let report = verify_conjectures().expect("battery runs");
    assert!(report.passed());
    assert!(!report.items.is_empty());
    assert!(report.items.iter().all(|item| item.informational));
    println!(
        "flagged statements: {} informational items emitted, none enforced",
        report.items.len()
    );
}
