//! Centralizer computations: worked dimensions, the reduced / unreduced
//! system agreement, and the leading-term examples.

use exact_linalg::{int, vecops};
use lts_core::catalog;
use star_uea::EnvelopeSession;

use ideal_lab::centralizer::{
    element_coordinates, monomial_keys, truncated_centralizer, truncated_centralizer_unreduced,
};
use ideal_lab::leading::{leading_commutator_prediction, prediction_element};

#[test]
fn abelian_line_centralizer_is_everything() {
    let s = EnvelopeSession::new(catalog::abelian(1)).unwrap();
    let report = truncated_centralizer(&s, "abelian:1", 3, false);
    // The whole truncated algebra commutes: dimensions 1 + 1 + 1 + 1.
    assert_eq!(report.dim(), 4);
    assert!(!report.verdict);
}

#[test]
fn s2_centralizer_is_trivial_at_low_degree() {
    let s = EnvelopeSession::new(catalog::s2()).unwrap();
    let report = truncated_centralizer(&s, "S2", 3, false);
    assert_eq!(report.dim(), 3);
    assert!(report.verdict);
    // Basis elements have degree at most one.
    for u in &report.basis {
        assert!(u.degree().map_or(true, |d| d <= 1));
    }
}

#[test]
fn so3_centralizer_at_degree_four() {
    let s = EnvelopeSession::new(catalog::so3()).unwrap();
    let report = truncated_centralizer(&s, "so3", 4, false);
    assert_eq!(report.dim(), 4);
    assert!(report.verdict);
}

#[test]
fn reduced_rows_agree_with_the_unreduced_system() {
    for (name, t) in [
        ("S2", catalog::s2()),
        ("so3", catalog::so3()),
        ("abelian:2", catalog::abelian(2)),
    ] {
        let s = EnvelopeSession::new(t).unwrap();
        for bound in 1..=3usize {
            let reduced = truncated_centralizer(&s, name, bound, false);
            let unreduced = truncated_centralizer_unreduced(&s, bound);
            let columns = monomial_keys(s.dim_v(), bound);
            let a: Vec<_> = reduced
                .basis
                .iter()
                .map(|u| element_coordinates(u, &columns))
                .collect();
            let b: Vec<_> = unreduced
                .iter()
                .map(|u| element_coordinates(u, &columns))
                .collect();
            assert_eq!(a, b, "system {name} at bound {bound}");
        }
    }
}

#[test]
fn centralizer_report_json_shape() {
    let s = EnvelopeSession::new(catalog::s2()).unwrap();
    let report = truncated_centralizer(&s, "S2", 2, false);
    let value = report.to_json();
    assert_eq!(value["system"], "S2");
    assert_eq!(value["degree_bound"], 2);
    assert_eq!(value["dim"], 3);
    assert_eq!(value["verdict"], true);
    assert_eq!(value["evidence"], "bounded-degree, not a proof");
    assert!(value.get("timing_ms").is_none());
    let with_timing = truncated_centralizer(&s, "S2", 2, true);
    assert!(with_timing.to_json().get("timing_ms").is_some());
}

#[test]
fn leading_term_prediction_on_the_power_monomial() {
    // a = f, m = e^2: the prediction for am - ma is [f,e,e] = -2e, and the
    // commutator rule gives [e^2, f] = 2e.
    let t = catalog::s2();
    let prediction = leading_commutator_prediction(&t, &vecops::unit(2, 1), &[0, 0]);
    assert_eq!(prediction.len(), 1);
    assert_eq!(prediction.get(&vec![0]), Some(&int(-2)));

    let s = EnvelopeSession::new(catalog::s2()).unwrap();
    let f = s.uv_generator(1);
    let e2 = s.uv_monomial(&[0, 0]);
    let commutator = e2.mul(&f).sub(&f.mul(&e2));
    assert_eq!(commutator, s.uv_generator(0).scale(&int(2)));
}

#[test]
fn leading_term_prediction_degree_one_vanishes() {
    let t = catalog::so3();
    for i in 0..3 {
        for a in 0..3 {
            let p = leading_commutator_prediction(&t, &vecops::unit(3, a), &[i]);
            assert!(p.is_empty(), "no second derivatives in degree one");
        }
    }
}

#[test]
fn leading_term_prediction_so3_mixed_monomial() {
    // a = z, m = the (x z) monomial: prediction for am - ma is
    // [z,x,z]/2 + [z,z,x]/2 = x/2, so the reversed commutator carries -x/2.
    let s = EnvelopeSession::new(catalog::so3()).unwrap();
    let key = vec![0, 2];
    let a = 2;
    let predicted = prediction_element(&s, &vecops::unit(3, a), &key);
    assert_eq!(
        predicted,
        s.uv_generator(0).scale(&exact_linalg::ratio(1, 2))
    );
    let m = s.uv_monomial(&key);
    let z = s.uv_generator(a);
    let actual = z.mul(&m).sub(&m.mul(&z));
    let diff = actual.sub(&predicted);
    assert!(diff.degree().map_or(true, |d| d == 0));
    // The reversed orientation matches the quoted value -x/2.
    let reversed = m.mul(&z).sub(&z.mul(&m));
    let top = reversed.homogeneous_part(1);
    assert_eq!(top, s.uv_generator(0).scale(&exact_linalg::ratio(-1, 2)));
}
