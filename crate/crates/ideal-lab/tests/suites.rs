//! The named verification suites at small bounds.

use ideal_lab::suite;
use lts_core::catalog;

#[test]
fn commutator_power_rule_small() {
    let report = suite::commutator_power_rule(5);
    assert!(report.passed(), "{}", report.render_text());
    assert_eq!(report.checks.len(), 5);
}

#[test]
fn so3_determinant_small() {
    let report = suite::so3_determinant_suite(4);
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn bol_hopf_and_division_small() {
    assert!(suite::bol_hopf_suite(3).passed());
    assert!(suite::kloop_division_suite(3).passed());
}

#[test]
fn delta_suite_small() {
    assert!(suite::delta_bracket_suite().passed());
}

#[test]
fn centralizer_suite_small() {
    let report = suite::centralizer_conjecture_suite(2, false);
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn partial_derivative_suite_small() {
    let report = suite::partial_derivative_suite(3);
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn lemma_suite_aggregates() {
    let report = suite::lemma_suite("S2", catalog::s2(), 4);
    assert!(report.passed(), "{}", report.render_text());
    assert!(report
        .checks
        .iter()
        .any(|c| c.name.starts_with("commutator-power")));
    let report = suite::lemma_suite("so3", catalog::so3(), 3);
    assert!(report.passed(), "{}", report.render_text());
    assert!(!report
        .checks
        .iter()
        .any(|c| c.name.starts_with("commutator-power")));
}

#[test]
fn reports_render_deterministically() {
    let a = suite::commutator_power_rule(3);
    let b = suite::commutator_power_rule(3);
    assert_eq!(a.render_text(), b.render_text());
    assert_eq!(a.to_json().to_string(), b.to_json().to_string());
}
