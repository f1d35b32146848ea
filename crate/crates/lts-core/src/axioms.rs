//! Axiom checking for Lie triple systems, Bol algebras and Malcev algebras.
//!
//! Every axiom is multilinear (the Malcev identity after polarization), so
//! checking all basis tuples decides it for the whole space in
//! characteristic zero. Each failed axiom reports the first failing tuple.

use exact_linalg::{vecops, Scalar};

use crate::system::TernarySystem;
use crate::LtsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomMode {
    Lts,
    Bol,
    Malcev,
}

impl AxiomMode {
    pub fn parse(s: &str) -> Option<AxiomMode> {
        match s.to_ascii_lowercase().as_str() {
            "lts" => Some(AxiomMode::Lts),
            "bol" => Some(AxiomMode::Bol),
            "malcev" => Some(AxiomMode::Malcev),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomWitness {
    /// Basis indices of the first failing tuple.
    pub indices: Vec<usize>,
    /// The nonzero discrepancy vector at that tuple.
    pub discrepancy: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub witness: Option<AxiomWitness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub mode: AxiomMode,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }
}

/// Check the axioms of the requested structure on all basis tuples.
pub fn check_axioms(t: &TernarySystem, mode: AxiomMode) -> Result<AxiomReport, LtsError> {
    let checks = match mode {
        AxiomMode::Lts => vec![
            binary_zero(t),
            first_pair_alternating(t),
            ternary_cyclic(t),
            ternary_derivation(t),
        ],
        AxiomMode::Bol => vec![
            binary_skew(t),
            first_pair_alternating(t),
            ternary_cyclic(t),
            ternary_derivation(t),
            binary_ternary_compat(t),
        ],
        AxiomMode::Malcev => {
            if !t.ternary_is_zero() {
                return Err(LtsError::MalcevNeedsBinaryOnly);
            }
            vec![binary_skew(t), malcev_identity(t)]
        }
    };
    Ok(AxiomReport { mode, checks })
}

fn witness(indices: Vec<usize>, discrepancy: Vec<Scalar>) -> Option<AxiomWitness> {
    Some(AxiomWitness {
        indices,
        discrepancy,
    })
}

fn binary_zero(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            let v = t.binary_basis(i, j);
            if !vecops::is_zero(&v) {
                return AxiomCheck {
                    axiom: "binary-zero",
                    witness: witness(vec![i, j], v),
                };
            }
        }
    }
    AxiomCheck {
        axiom: "binary-zero",
        witness: None,
    }
}

fn binary_skew(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for i in 0..n {
        for j in i..n {
            let v = vecops::add(&t.binary_basis(i, j), &t.binary_basis(j, i));
            if !vecops::is_zero(&v) {
                return AxiomCheck {
                    axiom: "binary-skew",
                    witness: witness(vec![i, j], v),
                };
            }
        }
    }
    AxiomCheck {
        axiom: "binary-skew",
        witness: None,
    }
}

/// Polarized form of `[a,a,b] = 0`.
fn first_pair_alternating(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let v = vecops::add(&t.ternary_basis(i, j, k), &t.ternary_basis(j, i, k));
                if !vecops::is_zero(&v) {
                    return AxiomCheck {
                        axiom: "first-pair-alternating",
                        witness: witness(vec![i, j, k], v),
                    };
                }
            }
        }
    }
    AxiomCheck {
        axiom: "first-pair-alternating",
        witness: None,
    }
}

/// `[a,b,c] + [b,c,a] + [c,a,b] = 0`.
fn ternary_cyclic(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut v = t.ternary_basis(i, j, k);
                let t2 = t.ternary_basis(j, k, i);
                let t3 = t.ternary_basis(k, i, j);
                for l in 0..n {
                    v[l] = &v[l] + &t2[l] + &t3[l];
                }
                if !vecops::is_zero(&v) {
                    return AxiomCheck {
                        axiom: "ternary-cyclic",
                        witness: witness(vec![i, j, k], v),
                    };
                }
            }
        }
    }
    AxiomCheck {
        axiom: "ternary-cyclic",
        witness: None,
    }
}

/// `[x,y,.]` acts as a derivation of the ternary bracket.
fn ternary_derivation(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for p in 0..n {
        for q in 0..n {
            let ep = vecops::unit(n, p);
            let eq = vecops::unit(n, q);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let ei = vecops::unit(n, i);
                        let ej = vecops::unit(n, j);
                        let ek = vecops::unit(n, k);
                        let lhs = t.bracket_eval(&ep, &eq, &t.ternary_basis(i, j, k));
                        let r1 = t.bracket_eval(&t.bracket_eval(&ep, &eq, &ei), &ej, &ek);
                        let r2 = t.bracket_eval(&ei, &t.bracket_eval(&ep, &eq, &ej), &ek);
                        let r3 = t.bracket_eval(&ei, &ej, &t.bracket_eval(&ep, &eq, &ek));
                        let mut v = lhs;
                        for l in 0..n {
                            v[l] = &v[l] - &r1[l] - &r2[l] - &r3[l];
                        }
                        if !vecops::is_zero(&v) {
                            return AxiomCheck {
                                axiom: "ternary-derivation",
                                witness: witness(vec![p, q, i, j, k], v),
                            };
                        }
                    }
                }
            }
        }
    }
    AxiomCheck {
        axiom: "ternary-derivation",
        witness: None,
    }
}

/// `[a,b,[x,y]] = [[a,b,x],y] + [x,[a,b,y]] + [x,y,[a,b]] + [[a,b],[x,y]]`.
fn binary_ternary_compat(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for a in 0..n {
        for b in 0..n {
            let ea = vecops::unit(n, a);
            let eb = vecops::unit(n, b);
            let ab = t.binary_basis(a, b);
            for x in 0..n {
                for y in 0..n {
                    let ex = vecops::unit(n, x);
                    let ey = vecops::unit(n, y);
                    let xy = t.binary_basis(x, y);
                    let lhs = t.bracket_eval(&ea, &eb, &xy);
                    let r1 = t.binary_eval(&t.ternary_basis(a, b, x), &ey);
                    let r2 = t.binary_eval(&ex, &t.ternary_basis(a, b, y));
                    let r3 = t.bracket_eval(&ex, &ey, &ab);
                    let r4 = t.binary_eval(&ab, &xy);
                    let mut v = lhs;
                    for l in 0..n {
                        v[l] = &v[l] - &r1[l] - &r2[l] - &r3[l] - &r4[l];
                    }
                    if !vecops::is_zero(&v) {
                        return AxiomCheck {
                            axiom: "binary-ternary-compat",
                            witness: witness(vec![a, b, x, y], v),
                        };
                    }
                }
            }
        }
    }
    AxiomCheck {
        axiom: "binary-ternary-compat",
        witness: None,
    }
}

/// Polarization of `[J(a,b,c),a] = J(a,b,[a,c])` in the repeated variable.
/// Including the diagonal tuples, this is equivalent to the identity in
/// characteristic zero.
fn malcev_identity(t: &TernarySystem) -> AxiomCheck {
    let n = t.dim();
    for a in 0..n {
        for d in a..n {
            let ea = vecops::unit(n, a);
            let ed = vecops::unit(n, d);
            for b in 0..n {
                for c in 0..n {
                    let eb = vecops::unit(n, b);
                    let ec = vecops::unit(n, c);
                    let l1 = t.binary_eval(&t.jacobian(&ea, &eb, &ec), &ed);
                    let l2 = t.binary_eval(&t.jacobian(&ed, &eb, &ec), &ea);
                    let r1 = t.jacobian(&ea, &eb, &t.binary_eval(&ed, &ec));
                    let r2 = t.jacobian(&ed, &eb, &t.binary_eval(&ea, &ec));
                    let mut v = vecops::zeros(n);
                    for l in 0..n {
                        v[l] = &(&l1[l] + &l2[l]) - &(&r1[l] + &r2[l]);
                    }
                    if !vecops::is_zero(&v) {
                        return AxiomCheck {
                            axiom: "malcev-identity",
                            witness: witness(vec![a, d, b, c], v),
                        };
                    }
                }
            }
        }
    }
    AxiomCheck {
        axiom: "malcev-identity",
        witness: None,
    }
}
