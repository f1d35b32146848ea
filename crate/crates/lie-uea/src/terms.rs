//! Sparse term maps keyed by weakly increasing generator words.

use std::collections::BTreeMap;

use exact_linalg::Scalar;
use num_traits::Zero;

pub type TermMap = BTreeMap<Vec<usize>, Scalar>;

/// `dst += factor * src`, dropping cancelled terms.
pub fn add_scaled(dst: &mut TermMap, src: &TermMap, factor: &Scalar) {
    if factor.is_zero() {
        return;
    }
    for (key, c) in src {
        add_term(dst, key.clone(), &(c * factor));
    }
}

pub fn add_term(dst: &mut TermMap, key: Vec<usize>, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match dst.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn scale(src: &TermMap, factor: &Scalar) -> TermMap {
    if factor.is_zero() {
        return TermMap::new();
    }
    src.iter().map(|(k, c)| (k.clone(), c * factor)).collect()
}

pub fn add_tensor(
    dst: &mut BTreeMap<(Vec<usize>, Vec<usize>), Scalar>,
    key: (Vec<usize>, Vec<usize>),
    c: &Scalar,
) {
    if c.is_zero() {
        return;
    }
    match dst.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// All splittings of the multiset of letters of a weakly increasing word
/// into an ordered pair of weakly increasing words, with multiplicities:
/// the coproduct of `prod g_i^{a_i}` picks `b_i` of each letter for the
/// left leg, contributing `prod C(a_i, b_i)`.
pub fn splittings(word: &[usize]) -> Vec<(Vec<usize>, Vec<usize>, Scalar)> {
    let runs = run_lengths(word);
    let mut out = Vec::new();
    let mut choice = vec![0usize; runs.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut mult = Scalar::from_integer(1.into());
        for ((letter, count), &take) in runs.iter().zip(&choice) {
            left.extend(std::iter::repeat(*letter).take(take));
            right.extend(std::iter::repeat(*letter).take(count - take));
            mult *= binomial(*count, take);
        }
        out.push((left, right, mult));
        // Mixed-radix increment over 0..=count per run.
        let mut i = 0;
        loop {
            if i == runs.len() {
                return out;
            }
            if choice[i] < runs[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn run_lengths(word: &[usize]) -> Vec<(usize, usize)> {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &g in word {
        match runs.last_mut() {
            Some((letter, count)) if *letter == g => *count += 1,
            _ => runs.push((g, 1)),
        }
    }
    runs
}

fn binomial(n: usize, k: usize) -> Scalar {
    let mut num = num_bigint::BigInt::from(1);
    for i in 0..k {
        num *= n - i;
    }
    let mut den = num_bigint::BigInt::from(1);
    for i in 1..=k {
        den *= i;
    }
    Scalar::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::int;

    #[test]
    fn splittings_of_a_square() {
        let s = splittings(&[1, 1]);
        assert_eq!(s.len(), 3);
        let middle = s
            .iter()
            .find(|(l, r, _)| l == &vec![1] && r == &vec![1])
            .unwrap();
        assert_eq!(middle.2, int(2));
    }

    #[test]
    fn splittings_count_is_product_of_run_choices() {
        // (2+1)(1+1) splittings for g0^2 g1.
        assert_eq!(splittings(&[0, 0, 1]).len(), 6);
    }
}
