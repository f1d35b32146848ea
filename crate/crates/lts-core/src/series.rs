//! Lower central and derived series, ideal closures, and a simplicity
//! probe for ternary systems.

use exact_linalg::vecops;

use crate::subspace::SubspaceBasis;
use crate::system::TernarySystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMode {
    Nilpotency,
    Solvability,
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub mode: SeriesMode,
    /// The chain starting at the first bracket space, up to stabilization.
    pub chain: Vec<SubspaceBasis>,
    /// True iff the chain reaches the zero space.
    pub verdict: bool,
}

/// Span of `[A, B, C]` over basis triples of the three subspaces.
fn bracket_space(
    t: &TernarySystem,
    a: &SubspaceBasis,
    b: &SubspaceBasis,
    c: &SubspaceBasis,
) -> SubspaceBasis {
    let mut spanning = Vec::new();
    for va in a.vectors() {
        for vb in b.vectors() {
            for vc in c.vectors() {
                let w = t.bracket_eval(va, vb, vc);
                if !vecops::is_zero(&w) {
                    spanning.push(w);
                }
            }
        }
    }
    SubspaceBasis::from_spanning(t.dim(), spanning)
}

/// Lower central series `V^1 = [V,V,V]`, `V^{n+1} = [V^n,V,V] + [V,V,V^n]`
/// in nilpotency mode; derived series `V^(1) = [V,V,V]`,
/// `V^(n+1) = [V^(n),V^(n),V]` in solvability mode. The verdict is true
/// iff the chain reaches zero.
pub fn lower_central_series(t: &TernarySystem, mode: SeriesMode) -> SeriesReport {
    let full = SubspaceBasis::full(t.dim());
    let mut chain = Vec::new();
    let mut current = bracket_space(t, &full, &full, &full);
    loop {
        chain.push(current.clone());
        if current.is_zero_space() {
            return SeriesReport {
                mode,
                chain,
                verdict: true,
            };
        }
        let next = match mode {
            SeriesMode::Nilpotency => bracket_space(t, &current, &full, &full)
                .sum(&bracket_space(t, &full, &full, &current)),
            SeriesMode::Solvability => bracket_space(t, &current, &current, &full),
        };
        if next == current {
            return SeriesReport {
                mode,
                chain,
                verdict: false,
            };
        }
        // The chain is descending, so the dimension strictly drops here.
        debug_assert!(next.dim() < current.dim());
        current = next;
    }
}

/// Smallest subspace containing `s` that is closed under bracketing with
/// the whole space in every argument slot.
pub fn ideal_closure(t: &TernarySystem, s: &SubspaceBasis) -> SubspaceBasis {
    let full = SubspaceBasis::full(t.dim());
    let mut current = s.clone();
    loop {
        let next = current
            .sum(&bracket_space(t, &current, &full, &full))
            .sum(&bracket_space(t, &full, &current, &full))
            .sum(&bracket_space(t, &full, &full, &current));
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Simplicity probe: the bracket is not identically zero and the ideal
/// closure of every probe vector (standard basis vectors and their pairwise
/// sums) is the whole space. Sufficient at catalog scale; a semi-decision
/// for arbitrary user tables.
pub fn is_simple(t: &TernarySystem) -> bool {
    let n = t.dim();
    let mut any_nonzero = false;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !vecops::is_zero(&t.ternary_basis(i, j, k)) {
                    any_nonzero = true;
                    break 'outer;
                }
            }
        }
    }
    if !any_nonzero {
        return false;
    }
    let mut probes = Vec::new();
    for i in 0..n {
        probes.push(vecops::unit(n, i));
    }
    for i in 0..n {
        for j in i + 1..n {
            probes.push(vecops::add(&vecops::unit(n, i), &vecops::unit(n, j)));
        }
    }
    probes.into_iter().all(|p| {
        let closure = ideal_closure(t, &SubspaceBasis::from_spanning(n, vec![p]));
        closure.is_full()
    })
}
