use core::fmt;

/// Largest exponent any operation in this crate will produce or accept.
///
/// Keeping exponents at or below `u64::MAX >> 1` guarantees that the total
/// degree `a + b` of a monomial always fits in a `u64`, so degree arithmetic
/// never wraps. Operations that combine exponents use checked arithmetic
/// against this ceiling (or a caller-supplied lower one) and report
/// [`Error::ExponentOverflow`](crate::Error::ExponentOverflow) instead of
/// producing a wrong answer.
pub const MAX_EXPONENT: u64 = u64::MAX >> 1;

/// An exponent pair `(a, b)` standing for the monomial `x^a y^b`.
///
/// The derived ordering is lexicographic on `(a, b)`, which is the sort
/// order used everywhere for canonicalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Exponent of `x`.
    pub a: u64,
    /// Exponent of `y`.
    pub b: u64,
}

impl Monomial {
    /// The monomial `1 = x^0 y^0`.
    pub const ONE: Monomial = Monomial { a: 0, b: 0 };

    pub const fn new(a: u64, b: u64) -> Self {
        Monomial { a, b }
    }

    /// Total degree `a + b` in the standard grading.
    ///
    /// Exponents are expected to stay at or below [`MAX_EXPONENT`], which
    /// makes the sum exact.
    pub const fn degree(self) -> u64 {
        self.a + self.b
    }

    /// Whether `self` divides `other`, i.e. both exponents are dominated.
    pub const fn divides(self, other: Monomial) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// Componentwise least common multiple (max of exponents).
    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.a.max(other.a), self.b.max(other.b))
    }

    /// Product of two monomials, `None` if either exponent sum exceeds
    /// `limit`.
    pub fn checked_mul(self, other: Monomial, limit: u64) -> Option<Monomial> {
        let a = self.a.checked_add(other.a)?;
        let b = self.b.checked_add(other.b)?;
        if a > limit || b > limit {
            return None;
        }
        Some(Monomial::new(a, b))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write_var(f, 'x', a),
            (0, b) => write_var(f, 'y', b),
            (a, b) => {
                write_var(f, 'x', a)?;
                write!(f, "*")?;
                write_var(f, 'y', b)
            }
        }
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, var: char, exp: u64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{exp}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_divisibility() {
        let m = Monomial::new(3, 4);
        assert_eq!(m.degree(), 7);
        assert!(Monomial::new(1, 1).divides(m));
        assert!(!Monomial::new(4, 0).divides(m));
        assert!(Monomial::ONE.divides(m));
        assert!(m.divides(m));
    }

    #[test]
    fn checked_mul_respects_limit() {
        let m = Monomial::new(10, 3);
        assert_eq!(
            m.checked_mul(Monomial::new(2, 2), 12),
            Some(Monomial::new(12, 5))
        );
        assert_eq!(m.checked_mul(Monomial::new(3, 0), 12), None);
        assert_eq!(
            Monomial::new(MAX_EXPONENT, 0).checked_mul(Monomial::new(MAX_EXPONENT, 0), u64::MAX),
            Some(Monomial::new(u64::MAX - 1, 0))
        );
        assert_eq!(
            Monomial::new(u64::MAX, 0).checked_mul(Monomial::new(1, 0), u64::MAX),
            None
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial::new(2, 0).to_string(), "x^2");
        assert_eq!(Monomial::new(0, 1).to_string(), "y");
        assert_eq!(Monomial::new(1, 5).to_string(), "x*y^5");
    }
}
