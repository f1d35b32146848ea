//! A small catalog of standard triple systems used throughout the tests
//! and the command line tool.

use exact_linalg::{int, nullspace, vecops, Matrix, Scalar};
use num_traits::Zero;

use crate::system::TernarySystem;
use crate::LtsError;

/// The two-dimensional simple system on `e, f` with `[e,f,e] = 2e` and
/// `[e,f,f] = -2f`.
pub fn s2() -> TernarySystem {
    let mut t = TernarySystem::new(2).with_names(vec!["e", "f"]);
    t.set_ternary_skew(0, 1, 0, &[int(2), int(0)]).unwrap();
    t.set_ternary_skew(0, 1, 1, &[int(0), int(-2)]).unwrap();
    t
}

/// The two-dimensional subsystem of so(3) spanned by `x, y`, with
/// `[x,y,x] = y` and `[x,y,y] = -x`. Isomorphic to `s2` only after a
/// quadratic field extension, so it is kept as a separate rational model.
pub fn s2_tilde() -> TernarySystem {
    let mut t = TernarySystem::new(2).with_names(vec!["x", "y"]);
    t.set_ternary_skew(0, 1, 0, &[int(0), int(1)]).unwrap();
    t.set_ternary_skew(0, 1, 1, &[int(-1), int(0)]).unwrap();
    t
}

/// The solvable non-nilpotent system on `a, b` with `[a,b,a] = -b` and
/// `[a,b,b] = 0`.
pub fn r2() -> TernarySystem {
    let mut t = TernarySystem::new(2).with_names(vec!["a", "b"]);
    t.set_ternary_skew(0, 1, 0, &[int(0), int(-1)]).unwrap();
    t
}

/// The rotation Lie algebra with `[x,y] = z`, `[y,z] = x`, `[z,x] = y`,
/// as a binary-only ternary system (for the Malcev/Bol conversions).
pub fn so3_lie() -> TernarySystem {
    let mut t = TernarySystem::new(3).with_names(vec!["x", "y", "z"]);
    t.set_binary_skew(0, 1, &[int(0), int(0), int(1)]).unwrap();
    t.set_binary_skew(1, 2, &[int(1), int(0), int(0)]).unwrap();
    t.set_binary_skew(2, 0, &[int(0), int(1), int(0)]).unwrap();
    t
}

/// so(3) viewed as a Lie triple system via `[a,b,c] = [[a,b],c]`.
pub fn so3() -> TernarySystem {
    let lie = so3_lie();
    let n = lie.dim();
    let mut t = TernarySystem::new(n).with_names(vec!["x", "y", "z"]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = lie.binary_eval(&lie.binary_basis(i, j), &vecops::unit(n, k));
                t.set_ternary(i, j, k, &v).unwrap();
            }
        }
    }
    t
}

/// The simple system `[a,b,c] = (a,c)b - (b,c)a` of a non-degenerate
/// symmetric bilinear form `g` in dimension at least 2.
pub fn bilinear(g: &Matrix) -> Result<TernarySystem, LtsError> {
    assert!(g.is_square(), "bilinear form must be square");
    let n = g.rows();
    if g != &g.transpose() {
        return Err(LtsError::FormNotSymmetric);
    }
    if !nullspace(g).is_empty() {
        return Err(LtsError::FormDegenerate);
    }
    let mut t = TernarySystem::new(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut v = vecops::zeros(n);
                v[j] = &v[j] + &g.entry(i, k);
                v[i] = &v[i] - &g.entry(j, k);
                t.set_ternary(i, j, k, &v).unwrap();
            }
        }
    }
    Ok(t)
}

/// Shorthand for the bilinear system of the identity form.
pub fn bilinear_identity(n: usize) -> TernarySystem {
    bilinear(&Matrix::identity(n)).expect("identity form is symmetric and non-degenerate")
}

/// The abelian system: all brackets zero.
pub fn abelian(n: usize) -> TernarySystem {
    TernarySystem::new(n)
}

/// Block direct sum of two systems.
pub fn direct_sum(a: &TernarySystem, b: &TernarySystem) -> TernarySystem {
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut names = Vec::with_capacity(n);
    for i in 0..na {
        names.push(a.name(i));
    }
    for i in 0..nb {
        names.push(b.name(i));
    }
    let mut t = TernarySystem::new(n).with_names(names.iter().map(String::as_str).collect());
    let pad = |v: &[Scalar], offset: usize| {
        let mut out = vecops::zeros(n);
        for (l, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[offset + l] = c.clone();
            }
        }
        out
    };
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                let v = a.ternary_basis(i, j, k);
                if !vecops::is_zero(&v) {
                    t.set_ternary(i, j, k, &pad(&v, 0)).unwrap();
                }
            }
            let v = a.binary_basis(i, j);
            if !vecops::is_zero(&v) {
                t.set_binary(i, j, &pad(&v, 0)).unwrap();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                let v = b.ternary_basis(i, j, k);
                if !vecops::is_zero(&v) {
                    t.set_ternary(na + i, na + j, na + k, &pad(&v, na)).unwrap();
                }
            }
            let v = b.binary_basis(i, j);
            if !vecops::is_zero(&v) {
                t.set_binary(na + i, na + j, &pad(&v, na)).unwrap();
            }
        }
    }
    t
}

/// Resolve a catalog name as used by the command line tool:
/// `S2`, `S2tilde`, `R2`, `so3`, `abelian:N`, `bilinear:N` (identity form).
pub fn by_name(name: &str) -> Result<TernarySystem, LtsError> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "s2" => return Ok(s2()),
        "s2tilde" => return Ok(s2_tilde()),
        "r2" => return Ok(r2()),
        "so3" => return Ok(so3()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("abelian:") {
        let n: usize = rest
            .parse()
            .map_err(|_| LtsError::UnknownCatalogName(name.to_string()))?;
        return Ok(abelian(n));
    }
    if let Some(rest) = lower.strip_prefix("bilinear:") {
        let n: usize = rest
            .parse()
            .map_err(|_| LtsError::UnknownCatalogName(name.to_string()))?;
        if n < 2 {
            return Err(LtsError::UnknownCatalogName(name.to_string()));
        }
        return Ok(bilinear_identity(n));
    }
    Err(LtsError::UnknownCatalogName(name.to_string()))
}

/// Names accepted by `by_name`, for help text.
pub const NAME_SUMMARY: &str = "S2, S2tilde, R2, so3, abelian:N, bilinear:N";

/// The standard family used by the verification suites: every catalog
/// entry at small dimension, including a direct sum with an abelian line.
pub fn standard_systems() -> Vec<(String, TernarySystem)> {
    vec![
        ("S2".to_string(), s2()),
        ("S2tilde".to_string(), s2_tilde()),
        ("R2".to_string(), r2()),
        ("so3".to_string(), so3()),
        ("bilinear:2".to_string(), bilinear_identity(2)),
        ("bilinear:3".to_string(), bilinear_identity(3)),
        ("abelian:2".to_string(), abelian(2)),
        ("S2+abelian:1".to_string(), direct_sum(&s2(), &abelian(1))),
    ]
}
