//! Named verification suites. Each suite runs one family of identities
//! and returns a report with one check per instance; the command line
//! exposes them under the `verify` subcommand.

use std::sync::Arc;

use exact_linalg::{int, ratio, vecops};
use lts_core::{catalog, TernarySystem};
use star_uea::EnvelopeSession;

use crate::centralizer::truncated_centralizer;
use crate::leading::prediction_element;
use crate::report::{Check, Report};
use crate::sampling::DetRng;
use crate::so3det::so3_condition_det;

fn session_of(t: TernarySystem) -> Arc<EnvelopeSession> {
    EnvelopeSession::new(t).expect("catalog systems satisfy the axioms")
}

/// `[e^n, f] = n(n-1) e^{n-1}` in the enveloping algebra of the
/// two-generator simple system.
pub fn commutator_power_rule(max_n: usize) -> Report {
    let mut report = Report::new("commutator-s2", Some("S2".to_string()));
    let s = session_of(catalog::s2());
    let f = s.uv_generator(1);
    for n in 1..=max_n {
        let en = s.uv_monomial(&vec![0; n]);
        let lhs = en.mul(&f).sub(&f.mul(&en));
        let coefficient = int((n * (n - 1)) as i64);
        let rhs = s.uv_monomial(&vec![0; n - 1]).scale(&coefficient);
        report.checks.push(Check::from_condition(
            format!("commutator-power n={n}"),
            lhs == rhs,
            format!("got {lhs}, expected {rhs}"),
        ));
    }
    report
}

/// `L_{a^n} L_{a^m} = L_{a^{n+m}}` over the standard catalog.
pub fn left_multiplication_suite(max_total: usize) -> Report {
    let mut report = Report::new("leftmult", None);
    let mut rng = DetRng::new(0x1eaf);
    for (name, t) in catalog::standard_systems() {
        let s = session_of(t);
        for g in 0..s.dim_v() {
            for n in 0..=max_total {
                for m in 0..=(max_total - n) {
                    let x = rng.uv_element(&s, 3, 2);
                    let an = s.uv_monomial(&vec![g; n]);
                    let am = s.uv_monomial(&vec![g; m]);
                    let anm = s.uv_monomial(&vec![g; n + m]);
                    let ok = an.mul(&am.mul(&x)) == anm.mul(&x);
                    report.checks.push(Check::from_condition(
                        format!("leftmult {name} a={g} n={n} m={m}"),
                        ok,
                        format!("argument {x}"),
                    ));
                }
            }
        }
    }
    report
}

/// The enveloping identity of the left Bol law and left-alternativity,
/// for primitive first arguments and random elements.
pub fn bol_hopf_suite(pairs: usize) -> Report {
    let mut report = Report::new("bol-hopf", None);
    let mut rng = DetRng::new(0xb01);
    for (name, t) in [("S2", catalog::s2()), ("so3", catalog::so3())] {
        let s = session_of(t);
        for _ in 0..pairs {
            let y = rng.uv_element(&s, 3, 2);
            let z = rng.uv_element(&s, 3, 2);
            for g in 0..s.dim_v() {
                let a = s.uv_generator(g);
                let lhs = a.mul(&y.mul(&z)).add(&y.mul(&a.mul(&z)));
                let rhs = a.mul(&y).mul(&z).add(&y.mul(&a).mul(&z));
                report.checks.push(Check::from_condition(
                    format!("bol-identity {name} a={g}"),
                    lhs == rhs,
                    format!("y={y}, z={z}"),
                ));
                let alt = a.associator(&y, &z) == y.associator(&a, &z).neg();
                report.checks.push(Check::from_condition(
                    format!("left-alternative {name} a={g}"),
                    alt,
                    format!("y={y}, z={z}"),
                ));
            }
        }
    }
    report
}

/// The division laws `x \ 1 = S(x) = 1 / x` and
/// `sum x_(1) \ (x_(2) y) = counit(x) y`.
pub fn kloop_division_suite(samples: usize) -> Report {
    let mut report = Report::new("kloop-division", None);
    let mut rng = DetRng::new(0x410);
    for (name, t) in [("S2", catalog::s2()), ("so3", catalog::so3())] {
        let s = session_of(t);
        for i in 0..samples {
            let x = rng.uv_element(&s, 3, 2);
            let y = rng.uv_element(&s, 3, 2);
            let unit_division = x.left_divide(&s.uv_one()) == x.s_automorphism()
                && x.right_unit_divide() == x.s_automorphism();
            report.checks.push(Check::from_condition(
                format!("unit-division {name} sample={i}"),
                unit_division,
                format!("x={x}"),
            ));
            let mut total = s.uv_zero();
            for ((k1, k2), c) in x.coproduct().terms() {
                let x1 = s.uv_monomial(k1);
                let x2 = s.uv_monomial(k2);
                total = total.add(&x1.left_divide(&x2.mul(&y)).scale(c));
            }
            report.checks.push(Check::from_condition(
                format!("left-division-law {name} sample={i}"),
                total == y.scale(&x.counit()),
                format!("x={x}, y={y}"),
            ));
        }
    }
    report
}

/// The precession maps: half the bracket on generators, minus the
/// associator in general, and the reassembly of the product.
pub fn delta_bracket_suite() -> Report {
    let mut report = Report::new("delta-bracket", None);
    let mut rng = DetRng::new(0xde17a);
    let half = ratio(1, 2);
    for (name, t) in [
        ("S2", catalog::s2()),
        ("so3", catalog::so3()),
        ("R2", catalog::r2()),
    ] {
        let s = session_of(t);
        let n = s.dim_v();
        for i in 0..n {
            for j in 0..n {
                let a = s.uv_generator(i);
                let b = s.uv_generator(j);
                for k in 0..n {
                    let c = s.uv_generator(k);
                    let expected = s
                        .bracket_as_element(
                            &vecops::unit(n, i),
                            &vecops::unit(n, j),
                            &vecops::unit(n, k),
                        )
                        .scale(&half);
                    report.checks.push(Check::from_condition(
                        format!("delta-on-generators {name} ({i},{j},{k})"),
                        s.delta_map(&a, &b, &c) == expected,
                        format!("expected {expected}"),
                    ));
                }
                let x = rng.uv_element(&s, 3, 2);
                report.checks.push(Check::from_condition(
                    format!("delta-is-negative-associator {name} ({i},{j})"),
                    s.delta_map(&a, &b, &x) == a.associator(&b, &x).neg(),
                    format!("x={x}"),
                ));
            }
        }
        // Reassembly on random degree <= 2 arguments.
        for sample in 0..3 {
            let x = rng.uv_element(&s, 2, 2);
            let y = rng.uv_element(&s, 2, 2);
            let z = rng.uv_element(&s, 2, 2);
            let mut total = s.uv_zero();
            for ((x1, x2), cx) in x.coproduct().terms() {
                let x1 = s.uv_monomial(x1);
                let x2 = s.uv_monomial(x2);
                for ((y1, y2), cy) in y.coproduct().terms() {
                    let y1 = s.uv_monomial(y1);
                    let y2 = s.uv_monomial(y2);
                    let term = x1.mul(&y1).mul(&s.delta_map(&x2, &y2, &z));
                    total = total.add(&term.scale(&(cx * cy)));
                }
            }
            report.checks.push(Check::from_condition(
                format!("delta-reassembles-product {name} sample={sample}"),
                total == x.mul(&y.mul(&z)),
                format!("x={x}, y={y}, z={z}"),
            ));
        }
    }
    report
}

/// The determinant of the three-condition matrix against its closed form.
pub fn so3_determinant_suite(max_total: u64) -> Report {
    let mut report = Report::new("so3-determinant", Some("so3".to_string()));
    for n in 0..=max_total {
        for p in 0..=(max_total - n) {
            for q in 0..=(max_total - n - p) {
                let d = so3_condition_det(n, p, q);
                report.checks.push(Check::from_condition(
                    format!("so3-det n={n} p={p} q={q}"),
                    d.agrees(),
                    format!("det {} vs closed form {}", d.det, d.closed_form),
                ));
            }
        }
    }
    report
}

/// Truncated centralizers equal `span(1) + V` on the simple systems.
pub fn centralizer_conjecture_suite(max_bound: usize, with_timing: bool) -> Report {
    let mut report = Report::new("centralizer-conjecture", None);
    let systems: Vec<(String, TernarySystem)> = vec![
        ("so3".into(), catalog::so3()),
        ("S2tilde".into(), catalog::s2_tilde()),
        ("S2".into(), catalog::s2()),
        ("bilinear:2".into(), catalog::bilinear_identity(2)),
        ("bilinear:3".into(), catalog::bilinear_identity(3)),
        ("bilinear:4".into(), catalog::bilinear_identity(4)),
    ];
    for (name, t) in systems {
        let s = session_of(t);
        for bound in 2..=max_bound {
            let result = truncated_centralizer(&s, &name, bound, with_timing);
            report.checks.push(Check::from_condition(
                format!("centralizer {name} N={bound}"),
                result.verdict && result.dim() == result.conjectured_dim,
                format!(
                    "dim {} (conjectured {}), verdict {}",
                    result.dim(),
                    result.conjectured_dim,
                    result.verdict
                ),
            ));
        }
    }
    report
}

/// The leading-term prediction matches the commutator above the two top
/// degrees, for every monomial up to the bound.
pub fn partial_derivative_suite(max_deg: usize) -> Report {
    let mut report = Report::new("partial-derivative-leading", None);
    for (name, t) in [("S2", catalog::s2()), ("so3", catalog::so3())] {
        let s = session_of(t);
        let n = s.dim_v();
        for key in crate::centralizer::monomial_keys(n, max_deg) {
            if key.is_empty() {
                continue;
            }
            let m = s.uv_monomial(&key);
            for g in 0..n {
                let a = s.uv_generator(g);
                let actual = a.mul(&m).sub(&m.mul(&a));
                let predicted = prediction_element(&s, &vecops::unit(n, g), &key);
                let diff = actual.sub(&predicted);
                let ok = diff.degree().map_or(true, |d| d + 2 <= key.len());
                report.checks.push(Check::from_condition(
                    format!("leading-term {name} a={g} m={key:?}"),
                    ok,
                    format!("difference {diff} too high for degree {}", key.len()),
                ));
            }
        }
    }
    report
}

/// Run every identity suite that applies to one system, at one bound.
pub fn lemma_suite(name: &str, system: TernarySystem, bound: usize) -> Report {
    let mut report = Report::new("lemma-suite", Some(name.to_string()));
    let is_s2 = system == catalog::s2();
    let s = session_of(system);
    let mut rng = DetRng::new(0x5111e);

    if is_s2 {
        let f = s.uv_generator(1);
        for n in 1..=bound {
            let en = s.uv_monomial(&vec![0; n]);
            let lhs = en.mul(&f).sub(&f.mul(&en));
            let rhs = s
                .uv_monomial(&vec![0; n - 1])
                .scale(&int((n * (n - 1)) as i64));
            report.checks.push(Check::from_condition(
                format!("commutator-power n={n}"),
                lhs == rhs,
                format!("got {lhs}"),
            ));
        }
    }

    for g in 0..s.dim_v() {
        for n in 0..=bound.min(4) {
            for m in 0..=(bound.min(4) - n) {
                let x = rng.uv_element(&s, 2, 2);
                let ok = s
                    .uv_monomial(&vec![g; n])
                    .mul(&s.uv_monomial(&vec![g; m]).mul(&x))
                    == s.uv_monomial(&vec![g; n + m]).mul(&x);
                report.checks.push(Check::from_condition(
                    format!("leftmult a={g} n={n} m={m}"),
                    ok,
                    "power rule violated".to_string(),
                ));
            }
        }
    }

    for g in 0..s.dim_v() {
        let a = s.uv_generator(g);
        let y = rng.uv_element(&s, 3, 2);
        let z = rng.uv_element(&s, 3, 2);
        let lhs = a.mul(&y.mul(&z)).add(&y.mul(&a.mul(&z)));
        let rhs = a.mul(&y).mul(&z).add(&y.mul(&a).mul(&z));
        report.checks.push(Check::from_condition(
            format!("bol-identity a={g}"),
            lhs == rhs,
            format!("y={y}, z={z}"),
        ));
    }

    for sample in 0..3 {
        let x = rng.uv_element(&s, 3, 2);
        let y = rng.uv_element(&s, 3, 2);
        let mut total = s.uv_zero();
        for ((k1, k2), c) in x.coproduct().terms() {
            let x1 = s.uv_monomial(k1);
            let x2 = s.uv_monomial(k2);
            total = total.add(&x1.left_divide(&x2.mul(&y)).scale(c));
        }
        report.checks.push(Check::from_condition(
            format!("left-division-law sample={sample}"),
            total == y.scale(&x.counit()),
            format!("x={x}, y={y}"),
        ));
    }

    let half = ratio(1, 2);
    let n = s.dim_v();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let expected = s
                    .bracket_as_element(
                        &vecops::unit(n, i),
                        &vecops::unit(n, j),
                        &vecops::unit(n, k),
                    )
                    .scale(&half);
                let got = s.delta_map(&s.uv_generator(i), &s.uv_generator(j), &s.uv_generator(k));
                report.checks.push(Check::from_condition(
                    format!("delta-on-generators ({i},{j},{k})"),
                    got == expected,
                    format!("got {got}, expected {expected}"),
                ));
            }
        }
    }

    report
}
