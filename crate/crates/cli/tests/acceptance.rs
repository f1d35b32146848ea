//! Acceptance suite: every release criterion at its stated bound, exact
//! arithmetic throughout, one pass/fail line per criterion.
//!
//! Run with `cargo test -p lts-cli --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::sync::Arc;
use std::time::Instant;

use exact_linalg::{int, ratio, vecops};
use ideal_lab::centralizer::monomial_keys;
use ideal_lab::{prediction_element, so3_condition_det, truncated_centralizer, DetRng};
use lie_uea::AssocElement;
use lts_core::{catalog, check_axioms, AxiomMode, SubspaceBasis};
use nucleus_lab::{jc_element, ln_alt, nuclei, tables, theorem_decompose};
use proptest::prelude::*;
use star_uea::{EnvelopeSession, UVElement};

fn session(t: lts_core::TernarySystem) -> Arc<EnvelopeSession> {
    EnvelopeSession::new(t).unwrap()
}

fn sessions_s2_so3() -> Vec<(&'static str, Arc<EnvelopeSession>)> {
    vec![
        ("S2", session(catalog::s2())),
        ("so3", session(catalog::so3())),
    ]
}

fn all_sessions() -> Vec<(String, Arc<EnvelopeSession>)> {
    catalog::standard_systems()
        .into_iter()
        .map(|(name, t)| (name, session(t)))
        .collect()
}

fn pass(criterion: &str) {
    println!("acceptance {criterion}: PASS");
}

/// Criterion 1: the commutator power rule `[e^n, f] = n(n-1) e^{n-1}`
/// for n = 1..8, exact, within ten seconds.
#[test]
fn acceptance_01_commutator_power_rule() {
    let started = Instant::now();
    let s = session(catalog::s2());
    let f = s.uv_generator(1);
    for n in 1..=8usize {
        let en = s.uv_monomial(&vec![0; n]);
        let lhs = en.mul(&f).sub(&f.mul(&en));
        let rhs = s
            .uv_monomial(&vec![0; n - 1])
            .scale(&int((n * (n - 1)) as i64));
        assert_eq!(lhs, rhs, "n = {n}");
    }
    assert!(started.elapsed().as_secs() < 10, "budget exceeded");
    pass("01 commutator-power-rule");
}

/// Criterion 2: `L_{a^n} L_{a^m}(x) = L_{a^{n+m}}(x)` for all catalog
/// systems, all basis generators, random x of degree <= 3, n+m <= 6.
#[test]
fn acceptance_02_left_multiplication_powers() {
    let mut rng = DetRng::new(0xacc2);
    for (name, s) in all_sessions() {
        for g in 0..s.dim_v() {
            for n in 0..=6usize {
                for m in 0..=(6 - n) {
                    let x = rng.uv_element(&s, 3, 2);
                    let lhs = s
                        .uv_monomial(&vec![g; n])
                        .mul(&s.uv_monomial(&vec![g; m]).mul(&x));
                    let rhs = s.uv_monomial(&vec![g; n + m]).mul(&x);
                    assert_eq!(lhs, rhs, "system {name}, a = {g}, n = {n}, m = {m}");
                }
            }
        }
    }
    pass("02 left-multiplication-powers");
}

/// Criterion 3: the enveloping Bol law and left-alternativity for every
/// generator and 50 random pairs of degree <= 3, over S2 and so3.
#[test]
fn acceptance_03_bol_law_and_left_alternativity() {
    let mut rng = DetRng::new(0xacc3);
    for (name, s) in sessions_s2_so3() {
        for _ in 0..50 {
            let y = rng.uv_element(&s, 3, 2);
            let z = rng.uv_element(&s, 3, 2);
            for g in 0..s.dim_v() {
                let a = s.uv_generator(g);
                let lhs = a.mul(&y.mul(&z)).add(&y.mul(&a.mul(&z)));
                let rhs = a.mul(&y).mul(&z).add(&y.mul(&a).mul(&z));
                assert_eq!(lhs, rhs, "bol law over {name}, a = {g}");
                assert_eq!(
                    a.associator(&y, &z),
                    y.associator(&a, &z).neg(),
                    "left alternativity over {name}, a = {g}"
                );
            }
        }
    }
    pass("03 bol-law-and-left-alternativity");
}

/// Criterion 4: the division laws `x \ 1 = S(x) = 1 / x` and
/// `sum x_(1) \ (x_(2) y) = counit(x) y` on 50 random pairs.
#[test]
fn acceptance_04_division_laws() {
    let mut rng = DetRng::new(0xacc4);
    for (name, s) in sessions_s2_so3() {
        for i in 0..50 {
            let x = rng.uv_element(&s, 3, 2);
            let y = rng.uv_element(&s, 3, 2);
            assert_eq!(
                x.left_divide(&s.uv_one()),
                x.s_automorphism(),
                "{name} #{i}"
            );
            assert_eq!(x.right_unit_divide(), x.s_automorphism(), "{name} #{i}");
            let mut total = s.uv_zero();
            for ((k1, k2), c) in x.coproduct().terms() {
                let x1 = s.uv_monomial(k1);
                let x2 = s.uv_monomial(k2);
                total = total.add(&x1.left_divide(&x2.mul(&y)).scale(c));
            }
            assert_eq!(total, y.scale(&x.counit()), "{name} #{i}");
        }
    }
    pass("04 division-laws");
}

/// Criterion 5: the precession maps are half the bracket on generators,
/// minus the associator in general, and reassemble the product.
#[test]
fn acceptance_05_precession_maps() {
    let mut rng = DetRng::new(0xacc5);
    let half = ratio(1, 2);
    for (name, s) in all_sessions() {
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
                    assert_eq!(s.delta_map(&a, &b, &c), expected, "{name} ({i},{j},{k})");
                }
            }
        }
    }
    for (name, s) in [
        ("S2", session(catalog::s2())),
        ("so3", session(catalog::so3())),
        ("R2", session(catalog::r2())),
    ] {
        let n = s.dim_v();
        for i in 0..n {
            for j in 0..n {
                let a = s.uv_generator(i);
                let b = s.uv_generator(j);
                for _ in 0..4 {
                    let x = rng.uv_element(&s, 3, 2);
                    assert_eq!(
                        s.delta_map(&a, &b, &x),
                        a.associator(&b, &x).neg(),
                        "{name} ({i},{j})"
                    );
                }
            }
        }
        for _ in 0..4 {
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
            assert_eq!(total, x.mul(&y.mul(&z)), "reassembly over {name}");
        }
    }
    pass("05 precession-maps");
}

/// Criterion 6: the three star-product laws in the ambient algebra for
/// random degree <= 2 elements, plus bracket recovery on all basis
/// triples of every catalog system.
#[test]
fn acceptance_06_star_laws_and_bracket_recovery() {
    let mut rng = DetRng::new(0xacc6);
    let quarter = ratio(1, 4);
    for (name, s) in sessions_s2_so3() {
        let alg = s.ambient();
        let dim = s.envelope().table.dim();
        let mut random_assoc = |max_deg: usize| {
            let mut out = AssocElement::zero(alg);
            for _ in 0..2 {
                let len = rng.below(max_deg + 1);
                let mut key: Vec<usize> = (0..len).map(|_| rng.below(dim)).collect();
                key.sort_unstable();
                out = out.add(&AssocElement::monomial(alg, &key).scale(&rng.coefficient()));
            }
            out
        };
        // (i) the exchange law on random elements.
        for _ in 0..6 {
            let x = random_assoc(2);
            let y = random_assoc(2);
            let z = random_assoc(2);
            let mut lhs = AssocElement::zero(alg);
            let mut rhs = AssocElement::zero(alg);
            for ((k1, k2), c) in x.coproduct().terms() {
                let x1 = AssocElement::monomial(alg, k1);
                let x2 = AssocElement::monomial(alg, k2);
                lhs = lhs.add(&s.star(&x1, &s.star(&y, &s.star(&x2, &z))).scale(c));
                rhs = rhs.add(&s.star(&s.star(&x1, &s.star(&y, &x2)), &z).scale(c));
            }
            assert_eq!(lhs, rhs, "exchange law over {name}");
        }
        // (ii) and (iii) on all Lie-algebra basis pairs and triples.
        for i in 0..dim {
            for j in 0..dim {
                let a = AssocElement::generator(alg, i);
                let b = AssocElement::generator(alg, j);
                assert_eq!(s.star(&a, &b), s.star(&b, &a), "{name} star commutativity");
                for k in 0..dim {
                    let c = AssocElement::generator(alg, k);
                    let lhs = s
                        .star(&a, &s.star(&b, &c))
                        .sub(&s.star(&b, &s.star(&a, &c)));
                    let bracket = s.envelope().table.bracket_eval(
                        &s.envelope().table.bracket_basis(i, j),
                        &vecops::unit(dim, k),
                    );
                    let mut rhs = AssocElement::zero(alg);
                    for (l, coef) in bracket.iter().enumerate() {
                        if !num_traits::Zero::is_zero(coef) {
                            rhs = rhs.add(&AssocElement::generator(alg, l).scale(coef));
                        }
                    }
                    assert_eq!(lhs, rhs.scale(&quarter), "{name} quarter-bracket");
                }
            }
        }
    }
    for (name, s) in all_sessions() {
        let n = s.dim_v();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = s.uv_generator(i);
                    let b = s.uv_generator(j);
                    let c = s.uv_generator(k);
                    let lhs = a.mul(&b.mul(&c)).sub(&b.mul(&a.mul(&c)));
                    let expected = s.bracket_as_element(
                        &vecops::unit(n, i),
                        &vecops::unit(n, j),
                        &vecops::unit(n, k),
                    );
                    assert_eq!(lhs, expected, "bracket recovery over {name}");
                }
            }
        }
    }
    pass("06 star-laws-and-bracket-recovery");
}

/// Criterion 7: the closed determinant formula for all n+p+q <= 8,
/// within one second.
#[test]
fn acceptance_07_determinant_identity() {
    let started = Instant::now();
    for n in 0..=8u64 {
        for p in 0..=(8 - n) {
            for q in 0..=(8 - n - p) {
                let d = so3_condition_det(n, p, q);
                assert_eq!(d.det, d.closed_form, "n={n}, p={p}, q={q}");
            }
        }
    }
    assert!(started.elapsed().as_secs() < 1, "budget exceeded");
    pass("07 determinant-identity");
}

/// Criterion 8: the truncated centralizer equals span(1) + V for the
/// simple systems at every bound N = 2..5; dimensions are 1 + dim V.
#[test]
fn acceptance_08_centralizer_scarcity_evidence() {
    let started = Instant::now();
    let systems = vec![
        ("so3", catalog::so3()),
        ("S2tilde", catalog::s2_tilde()),
        ("S2", catalog::s2()),
        ("bilinear:2", catalog::bilinear_identity(2)),
        ("bilinear:3", catalog::bilinear_identity(3)),
        ("bilinear:4", catalog::bilinear_identity(4)),
    ];
    for (name, t) in systems {
        let s = session(t);
        for bound in 2..=5usize {
            let report = truncated_centralizer(&s, name, bound, false);
            assert!(report.verdict, "{name} at N={bound}");
            assert_eq!(report.dim(), 1 + s.dim_v(), "{name} at N={bound}");
        }
    }
    assert!(started.elapsed().as_secs() < 300, "budget exceeded");
    pass("08 centralizer-scarcity-evidence");
}

/// Criterion 9: the leading-term prediction matches the commutator with
/// a generator above the two top degrees, for all monomials of degree
/// <= 5 over S2 and so3.
#[test]
fn acceptance_09_leading_term_formula() {
    for (name, s) in sessions_s2_so3() {
        let n = s.dim_v();
        for key in monomial_keys(n, 5) {
            if key.is_empty() {
                continue;
            }
            let m = s.uv_monomial(&key);
            for g in 0..n {
                let a = s.uv_generator(g);
                let actual = a.mul(&m).sub(&m.mul(&a));
                let predicted = prediction_element(&s, &vecops::unit(n, g), &key);
                let diff = actual.sub(&predicted);
                assert!(
                    diff.degree().map_or(true, |d| d + 2 <= key.len()),
                    "{name}: residual degree too high for a = {g}, m = {key:?}"
                );
            }
        }
    }
    pass("09 leading-term-formula");
}

/// Criterion 10: graded dimensions of the enveloping algebra match the
/// polynomial algebra on V for n <= 5, on all catalog systems.
#[test]
fn acceptance_10_graded_dimensions() {
    fn binomial(n: usize, k: usize) -> usize {
        let mut out = 1usize;
        for i in 0..k {
            out = out * (n - i) / (i + 1);
        }
        out
    }
    for (name, s) in all_sessions() {
        let n = s.dim_v();
        let keys = monomial_keys(n, 5);
        // Degree-d counts follow the stars-and-bars formula.
        for d in 0..=5usize {
            let count = keys.iter().filter(|k| k.len() == d).count();
            assert_eq!(count, binomial(n + d - 1, d.max(0)), "{name} degree {d}");
        }
        // The embedded monomials are linearly independent, so those counts
        // are honest dimensions of the graded pieces.
        let mut column_index = std::collections::BTreeMap::new();
        let embedded: Vec<_> = keys.iter().map(|k| s.embed_monomial(k)).collect();
        for e in &embedded {
            for word in e.terms().keys() {
                let next = column_index.len();
                column_index.entry(word.clone()).or_insert(next);
            }
        }
        let mut rows = Vec::new();
        for e in &embedded {
            let mut row = vecops::zeros(column_index.len());
            for (word, c) in e.terms() {
                row[column_index[word]] = c.clone();
            }
            rows.push(row);
        }
        let rank = exact_linalg::rref(&mut rows).len();
        assert_eq!(rank, keys.len(), "{name}: embedded monomials dependent");
    }
    pass("10 graded-dimensions");
}

/// Criterion 11: element splittings, the enlarged subsystem, nilpotent
/// generation, and the decomposition verdicts on the three worked tables.
#[test]
fn acceptance_11_worked_tables_decomposition() {
    let worked: Vec<(&str, nucleus_lab::FinAlgebra, SubspaceBasis)> = vec![
        (
            "truncated-cubic",
            tables::truncated_poly(3),
            SubspaceBasis::from_spanning(3, vec![vecops::unit(3, 1)]),
        ),
        (
            "split-pair",
            tables::f_times_f(),
            SubspaceBasis::from_spanning(2, vec![vec![int(1), int(-1)]]),
        ),
        (
            "idempotent-line",
            tables::fx_mod_x2_minus_x(),
            SubspaceBasis::from_spanning(2, vec![vecops::unit(2, 1)]),
        ),
    ];
    for (name, a, v) in &worked {
        // Splitting postconditions for every element of the nucleus basis.
        let (lnalt_space, _) = ln_alt(a).unwrap();
        for vec in lnalt_space.vectors() {
            let (s, n) = jc_element(a, vec).unwrap();
            assert_eq!(vecops::add(&s, &n), *vec, "{name}");
            assert_eq!(a.mul(&s, &n), a.mul(&n, &s), "{name}");
            assert_eq!(
                a.left_mult(&s).add(&a.left_mult(&n)),
                a.left_mult(vec),
                "{name}"
            );
        }
        // Enlarged subsystem: contains V, semisimple parts central,
        // nilpotent parts an ideal of the induced system.
        let report = theorem_decompose(a, v).unwrap();
        for vec in v.vectors() {
            assert!(report.v_hat.contains(vec), "{name}");
        }
        let center = nuclei(a).center;
        let mut n_parts = Vec::new();
        for vec in report.v_hat.vectors() {
            let (s, n) = jc_element(a, vec).unwrap();
            assert!(center.contains(&s), "{name}: semisimple part not central");
            if !vecops::is_zero(&n) {
                n_parts.push(n);
            }
        }
        let n_span = SubspaceBasis::from_spanning(a.dim(), n_parts);
        for x in report.v_hat.vectors() {
            for y in report.v_hat.vectors() {
                for z in n_span.vectors() {
                    for w in [
                        bracket_in(a, z, x, y),
                        bracket_in(a, x, z, y),
                        bracket_in(a, x, y, z),
                    ] {
                        assert!(n_span.contains(&w), "{name}: nilpotent parts not an ideal");
                    }
                }
            }
        }
        // Nilpotent commuting generators span a nilpotent subalgebra.
        if report.r.dim() > 0 {
            let generated = a.subalgebra_closure(n_span.vectors(), false);
            assert!(a.is_nilpotent_span(&generated), "{name}");
        }
        // The decomposition verdict itself.
        assert!(report.all_pass(), "{name}: {report:?}");
    }
    pass("11 worked-tables-decomposition");
}

fn bracket_in(
    a: &nucleus_lab::FinAlgebra,
    x: &[exact_linalg::Scalar],
    y: &[exact_linalg::Scalar],
    z: &[exact_linalg::Scalar],
) -> Vec<exact_linalg::Scalar> {
    let mut out = a.mul(x, &a.mul(y, z));
    let t2 = a.mul(y, &a.mul(x, z));
    let t3 = a.mul(z, &a.mul(x, y));
    let t4 = a.mul(z, &a.mul(y, x));
    for l in 0..a.dim() {
        out[l] = &out[l] - &t2[l] - &t3[l] + &t4[l];
    }
    out
}

/// Criterion 12: the randomized property suite, 200 cases per property.
#[test]
fn acceptance_12_property_suite() {
    use std::sync::OnceLock;
    static SO3: OnceLock<Arc<EnvelopeSession>> = OnceLock::new();
    let so3 = || SO3.get_or_init(|| session(catalog::so3())).clone();

    let config = ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    };

    // Axioms of random non-degenerate symmetric bilinear systems.
    let mut runner = proptest::test_runner::TestRunner::new(config.clone());
    runner
        .run(
            &(2usize..=4, proptest::collection::vec(-3i64..=3, 16)),
            |(dim, entries)| {
                let mut g = exact_linalg::Matrix::zero(dim, dim);
                let mut idx = 0;
                for i in 0..dim {
                    for j in i..dim {
                        g.set(i, j, int(entries[idx]));
                        if i != j {
                            g.set(j, i, int(entries[idx]));
                        }
                        idx += 1;
                    }
                }
                prop_assume!(exact_linalg::nullspace(&g).is_empty());
                let t = catalog::bilinear(&g).unwrap();
                prop_assert!(check_axioms(&t, AxiomMode::Lts).unwrap().passed());
                Ok(())
            },
        )
        .unwrap();

    // Coassociativity and the counit law over the so3 envelope.
    let seed_strategy = proptest::collection::vec((0usize..1000, -3i64..=3), 1..=3);
    let element = |seed: &[(usize, i64)]| -> AssocElement {
        let s = so3();
        let alg = s.ambient();
        let dim = s.envelope().table.dim();
        let mut out = AssocElement::zero(alg);
        for &(raw, coef) in seed {
            let len = raw % 4;
            let mut word: Vec<usize> = (0..len).map(|i| (raw >> (2 * i)) % dim).collect();
            word.sort_unstable();
            out = out.add(&AssocElement::monomial(alg, &word).scale(&int(coef)));
        }
        out
    };

    let mut runner = proptest::test_runner::TestRunner::new(config.clone());
    runner
        .run(&seed_strategy, |seed| {
            let s = so3();
            let alg = s.ambient();
            let x = element(&seed);
            let d = x.coproduct();
            let mut left = std::collections::BTreeMap::new();
            let mut right = std::collections::BTreeMap::new();
            for ((a, b), c) in d.terms() {
                for ((u, v), e) in AssocElement::monomial(alg, a).coproduct().terms() {
                    *left
                        .entry((u.clone(), v.clone(), b.clone()))
                        .or_insert_with(exact_linalg::Scalar::default) += c * e;
                }
                for ((u, v), e) in AssocElement::monomial(alg, b).coproduct().terms() {
                    *right
                        .entry((a.clone(), u.clone(), v.clone()))
                        .or_insert_with(exact_linalg::Scalar::default) += c * e;
                }
            }
            left.retain(|_, v| !num_traits::Zero::is_zero(v));
            right.retain(|_, v| !num_traits::Zero::is_zero(v));
            prop_assert_eq!(left, right);
            Ok(())
        })
        .unwrap();

    let mut runner = proptest::test_runner::TestRunner::new(config.clone());
    runner
        .run(&seed_strategy, |seed| {
            let s = so3();
            let alg = s.ambient();
            let x = element(&seed);
            let d = x.coproduct();
            let mut left = AssocElement::zero(alg);
            let mut right = AssocElement::zero(alg);
            for ((a, b), c) in d.terms() {
                let ma = AssocElement::monomial(alg, a);
                let mb = AssocElement::monomial(alg, b);
                left = left.add(&mb.scale(&(c * ma.counit())));
                right = right.add(&ma.scale(&(c * mb.counit())));
            }
            prop_assert_eq!(&left, &x);
            prop_assert_eq!(&right, &x);
            Ok(())
        })
        .unwrap();

    // The sign automorphism is a multiplicative involution.
    let uv_seed = proptest::collection::vec((0usize..1000, -3i64..=3), 1..=3);
    let uv_element = |seed: &[(usize, i64)]| -> UVElement {
        let s = so3();
        let n = s.dim_v();
        let mut out = s.uv_zero();
        for &(raw, coef) in seed {
            let len = raw % 4;
            let mut key: Vec<usize> = (0..len).map(|i| (raw >> (2 * i)) % n).collect();
            key.sort_unstable();
            out = out.add(&s.uv_monomial(&key).scale(&int(coef)));
        }
        out
    };
    let mut runner = proptest::test_runner::TestRunner::new(config.clone());
    runner
        .run(&(uv_seed.clone(), uv_seed.clone()), |(sx, sy)| {
            let x = uv_element(&sx);
            let y = uv_element(&sy);
            prop_assert_eq!(x.s_automorphism().s_automorphism(), x.clone());
            prop_assert_eq!(
                x.mul(&y).s_automorphism(),
                x.s_automorphism().mul(&y.s_automorphism())
            );
            Ok(())
        })
        .unwrap();

    // Associativity of the ordered-monomial product.
    let mut runner = proptest::test_runner::TestRunner::new(config);
    runner
        .run(
            &(seed_strategy.clone(), seed_strategy.clone(), seed_strategy),
            |(sx, sy, sz)| {
                let x = element(&sx);
                let y = element(&sy);
                let z = element(&sz);
                prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
                Ok(())
            },
        )
        .unwrap();

    pass("12 property-suite");
}
