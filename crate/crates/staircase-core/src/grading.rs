use alloc::vec::Vec;

use crate::ideal::StaircaseIdeal;

/// The degree-`d` graded piece of an ideal, recorded as the sorted set of
/// x-exponents `a` with `x^a y^{d-a}` in the ideal. Its length is the
/// K-dimension of the piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSlice {
    pub d: u64,
    pub xexps: Vec<u64>,
}

impl GradedSlice {
    pub fn dim(&self) -> u64 {
        self.xexps.len() as u64
    }
}

impl StaircaseIdeal {
    /// Merged x-exponent intervals covered by the staircase in degree `d`:
    /// generator `(a_i, b_i)` contributes `[a_i, d - b_i]` whenever its
    /// degree is at most `d`. Left and right endpoints are both increasing
    /// along the canonical order, so a single sweep merges them.
    fn slice_intervals(&self, d: u64) -> Vec<(u64, u64)> {
        let mut merged: Vec<(u64, u64)> = Vec::new();
        for g in self.gens() {
            if g.degree() > d {
                continue;
            }
            let (lo, hi) = (g.a, d - g.b);
            match merged.last_mut() {
                Some((_, last_hi)) if lo <= *last_hi + 1 => {
                    *last_hi = hi.max(*last_hi);
                }
                _ => merged.push((lo, hi)),
            }
        }
        merged
    }

    /// Number of degree-`d` monomials in the ideal. Equals `d + 1` exactly
    /// when `(x, y)^d` is contained in the ideal.
    pub fn graded_dim(&self, d: u64) -> u64 {
        self.slice_intervals(d)
            .iter()
            .map(|&(lo, hi)| hi - lo + 1)
            .sum()
    }

    /// The exact x-exponent set of the degree-`d` piece.
    pub fn graded_slice(&self, d: u64) -> GradedSlice {
        let mut xexps = Vec::new();
        for (lo, hi) in self.slice_intervals(d) {
            xexps.extend(lo..=hi);
        }
        GradedSlice { d, xexps }
    }
}
