use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::monomial::{Monomial, MAX_EXPONENT};

/// A monomial ideal of `K[x, y]` in canonical staircase form.
///
/// `gens` is the unique minimal monomial generating set, sorted so that
/// x-exponents strictly increase and y-exponents strictly decrease (an
/// antichain under componentwise divisibility). The empty list is the zero
/// ideal; `[(0, 0)]` is the unit ideal. Because the canonical form is
/// unique, derived equality decides ideal equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseIdeal {
    gens: Vec<Monomial>,
}

impl StaircaseIdeal {
    /// The zero ideal.
    pub fn zero() -> Self {
        StaircaseIdeal { gens: Vec::new() }
    }

    /// The unit ideal `(1)`.
    pub fn unit() -> Self {
        StaircaseIdeal {
            gens: alloc::vec![Monomial::ONE],
        }
    }

    /// The ideal generated by an arbitrary list of monomials, reduced to
    /// canonical form. Duplicates and dominated elements are dropped; the
    /// empty list yields the zero ideal.
    ///
    /// Candidates are sorted by `(a, b)` and swept once, keeping a monomial
    /// exactly when its y-exponent drops below the smallest one kept so far.
    pub fn normalize<I>(candidates: I) -> Self
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut v: Vec<Monomial> = candidates.into_iter().collect();
        v.sort_unstable();
        let mut gens: Vec<Monomial> = Vec::new();
        for m in v {
            match gens.last() {
                None => gens.push(m),
                Some(last) => {
                    if m.b < last.b {
                        gens.push(m);
                    }
                }
            }
        }
        StaircaseIdeal { gens }
    }

    /// Wraps a generator list that is already canonical. Callers must
    /// guarantee strictly increasing `a` and strictly decreasing `b`.
    pub(crate) fn from_canonical_unchecked(gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0].a < w[1].a && w[0].b > w[1].b));
        StaircaseIdeal { gens }
    }

    /// `m^d = (x, y)^d` as a staircase with `d + 1` generators.
    pub fn maximal_ideal_power(d: u64) -> Self {
        let gens = (0..=d).map(|a| Monomial::new(a, d - a)).collect();
        StaircaseIdeal::from_canonical_unchecked(gens)
    }

    /// The canonical minimal generating set.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators; 0 for the zero ideal.
    pub fn mu(&self) -> u64 {
        self.gens.len() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial::ONE)
    }

    /// Ideal sum: canonical form of the union of the generating sets.
    /// Commutative, associative, idempotent; the zero ideal is the identity.
    pub fn sum(&self, other: &StaircaseIdeal) -> StaircaseIdeal {
        StaircaseIdeal::normalize(self.gens.iter().chain(other.gens.iter()).copied())
    }

    /// Ideal product. The zero ideal is absorbing.
    pub fn product(&self, other: &StaircaseIdeal) -> Result<StaircaseIdeal, Error> {
        self.product_within(other, MAX_EXPONENT)
    }

    /// Ideal product with an explicit exponent ceiling: every pairwise
    /// exponent sum is checked against `limit`.
    pub fn product_within(
        &self,
        other: &StaircaseIdeal,
        limit: u64,
    ) -> Result<StaircaseIdeal, Error> {
        if self.is_zero() || other.is_zero() {
            return Ok(StaircaseIdeal::zero());
        }
        let mut candidates = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &g in &self.gens {
            for &h in &other.gens {
                let m = g
                    .checked_mul(h, limit)
                    .ok_or(Error::ExponentOverflow { limit })?;
                candidates.push(m);
            }
        }
        Ok(StaircaseIdeal::normalize(candidates))
    }

    /// `k`-th power by iterated product, minimalizing after every step.
    /// `power(I, 0)` is the unit ideal.
    pub fn power(&self, k: u64) -> Result<StaircaseIdeal, Error> {
        self.power_within(k, MAX_EXPONENT)
    }

    /// As [`StaircaseIdeal::power`] with an explicit exponent ceiling.
    pub fn power_within(&self, k: u64, limit: u64) -> Result<StaircaseIdeal, Error> {
        if k == 0 {
            return Ok(StaircaseIdeal::unit());
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product_within(self, limit)?;
        }
        Ok(acc)
    }

    /// Whether the monomial lies in the ideal, i.e. some generator divides
    /// it. Binary search on the sorted staircase, `O(log mu)`.
    pub fn contains(&self, m: Monomial) -> bool {
        // The witness, if any, is the generator with the largest a <= m.a:
        // among those, it has the smallest b.
        let idx = self.gens.partition_point(|g| g.a <= m.a);
        match idx.checked_sub(1) {
            Some(i) => self.gens[i].b <= m.b,
            None => false,
        }
    }

    /// Whether `self` contains `other` as an ideal.
    pub fn contains_ideal(&self, other: &StaircaseIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    /// Smallest degree of a nonzero element; errors on the zero ideal.
    pub fn degree(&self) -> Result<u64, Error> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or(Error::ZeroIdeal)
    }

    /// Ideal intersection, via componentwise lcms of generator pairs.
    pub fn intersection(&self, other: &StaircaseIdeal) -> StaircaseIdeal {
        if self.is_zero() || other.is_zero() {
            return StaircaseIdeal::zero();
        }
        let mut candidates = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &g in &self.gens {
            for &h in &other.gens {
                candidates.push(g.lcm(h));
            }
        }
        StaircaseIdeal::normalize(candidates)
    }
}

impl fmt::Display for StaircaseIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
