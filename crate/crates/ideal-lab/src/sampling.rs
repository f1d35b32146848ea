//! Deterministic sampling for the identity suites. A fixed seed makes
//! every report byte-reproducible.

use std::sync::Arc;

use exact_linalg::{int, Scalar};
use star_uea::{EnvelopeSession, UVElement};

/// splitmix64; deterministic across platforms.
pub struct DetRng(u64);

impl DetRng {
    pub fn new(seed: u64) -> DetRng {
        DetRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Small nonzero-biased rational coefficient in `[-3, 3]`.
    pub fn coefficient(&mut self) -> Scalar {
        int(self.below(7) as i64 - 3)
    }

    /// A sparse element of filtration degree at most `max_deg`.
    pub fn uv_element(
        &mut self,
        session: &Arc<EnvelopeSession>,
        max_deg: usize,
        terms: usize,
    ) -> UVElement {
        let n = session.dim_v();
        let mut out = session.uv_zero();
        for _ in 0..terms {
            let len = self.below(max_deg + 1);
            let mut key: Vec<usize> = (0..len).map(|_| self.below(n)).collect();
            key.sort_unstable();
            out = out.add(&session.uv_monomial(&key).scale(&self.coefficient()));
        }
        out
    }
}
