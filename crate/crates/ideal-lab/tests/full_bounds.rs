//! The centralizer suite at the full degree bound. Slow; run explicitly
//! with `cargo test -p ideal-lab --test full_bounds -- --ignored`.

use ideal_lab::suite;

#[test]
#[ignore]
fn centralizer_suite_full_bound() {
    let report = suite::centralizer_conjecture_suite(5, true);
    assert!(report.passed(), "{}", report.render_text());
}
