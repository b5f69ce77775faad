use alloc::vec::Vec;

use crate::error::Error;
use crate::ideal::StaircaseIdeal;
use crate::monomial::Monomial;

impl StaircaseIdeal {
    /// Whether the ideal contains a pure power of `x` and a pure power of
    /// `y`, i.e. the quotient ring has finite length. On the canonical
    /// staircase this reads off the first and last generator.
    pub fn is_m_primary(&self) -> bool {
        match (self.gens().first(), self.gens().last()) {
            (Some(first), Some(last)) => first.a == 0 && last.b == 0,
            _ => false,
        }
    }

    /// The monomials `u` outside the ideal with both `x*u` and `y*u` inside:
    /// the inner corners `(a_{i+1} - 1, b_i - 1)` of the staircase, sorted.
    ///
    /// These span the socle of the quotient ring, so there are exactly
    /// `mu - 1` of them. Requires a finite-colength ideal; otherwise the
    /// set would be infinite as specified.
    pub fn socle_monomials(&self) -> Result<Vec<Monomial>, Error> {
        if !self.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        Ok(self
            .gens()
            .windows(2)
            .map(|w| Monomial::new(w[1].a - 1, w[0].b - 1))
            .collect())
    }

    /// Cohen-Macaulay type of the quotient ring: the number of socle
    /// monomials.
    pub fn cm_type(&self) -> Result<u64, Error> {
        Ok(self.socle_monomials()?.len() as u64)
    }

    /// The colon ideal by the maximal ideal, `(I : (x, y))`, computed as
    /// `(I : x) ∩ (I : y)` so it stays independent of the corner formula.
    /// Total: the zero ideal maps to itself.
    pub fn colon_by_maximal(&self) -> StaircaseIdeal {
        if self.is_zero() {
            return StaircaseIdeal::zero();
        }
        let shift_a = StaircaseIdeal::normalize(
            self.gens()
                .iter()
                .map(|g| Monomial::new(g.a.saturating_sub(1), g.b)),
        );
        let shift_b = StaircaseIdeal::normalize(
            self.gens()
                .iter()
                .map(|g| Monomial::new(g.a, g.b.saturating_sub(1))),
        );
        shift_a.intersection(&shift_b)
    }
}
