use alloc::vec::Vec;

use crate::error::Error;
use crate::ideal::StaircaseIdeal;
use crate::monomial::Monomial;

/// An equigenerated ideal described by its x-exponents: the ideal generated
/// by `x^{a_1} y^{d - a_1}, ..., x^{a_l} y^{d - a_l}` with
/// `0 <= a_1 < ... < a_l <= d`.
///
/// Such a generator list is already an antichain, so the conversion to
/// [`StaircaseIdeal`] is lossless in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquigeneratedSpec {
    xexps: Vec<u64>,
    d: u64,
}

impl EquigeneratedSpec {
    pub fn new(xexps: Vec<u64>, d: u64) -> Result<Self, Error> {
        if xexps.is_empty() {
            return Err(Error::BadEquigenerated("x-exponent list is empty"));
        }
        if !xexps.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::BadEquigenerated(
                "x-exponents must be strictly increasing",
            ));
        }
        if *xexps.last().unwrap() > d {
            return Err(Error::BadEquigenerated(
                "largest x-exponent exceeds the common degree",
            ));
        }
        Ok(EquigeneratedSpec { xexps, d })
    }

    pub fn xexps(&self) -> &[u64] {
        &self.xexps
    }

    /// The common degree of all generators.
    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn to_ideal(&self) -> StaircaseIdeal {
        let gens = self
            .xexps
            .iter()
            .map(|&a| Monomial::new(a, self.d - a))
            .collect();
        StaircaseIdeal::from_canonical_unchecked(gens)
    }

    /// Recovers the description from a staircase whose generators all share
    /// one degree; `None` otherwise (including the zero ideal).
    pub fn from_ideal(ideal: &StaircaseIdeal) -> Option<Self> {
        let first = ideal.gens().first()?;
        let d = first.degree();
        if ideal.gens().iter().any(|g| g.degree() != d) {
            return None;
        }
        Some(EquigeneratedSpec {
            xexps: ideal.gens().iter().map(|g| g.a).collect(),
            d,
        })
    }
}
