//! Brute-force reference implementations and seeded instance generators.
//!
//! These exist to validate the fast staircase operations, so they
//! deliberately share no algorithmic code with them: minimalization is the
//! quadratic all-pairs divisibility filter and products enumerate every
//! exponent sum. Keep it that way.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::ideal::StaircaseIdeal;
use crate::monomial::{Monomial, MAX_EXPONENT};

/// All-pairs `O(n^2)` divisibility filter. The result, as a set, is the
/// minimal generating set of the ideal generated by `candidates`; returned
/// sorted for convenience.
pub fn naive_minimalize(candidates: &[Monomial]) -> Vec<Monomial> {
    let distinct: BTreeSet<Monomial> = candidates.iter().copied().collect();
    distinct
        .iter()
        .filter(|&&m| {
            !distinct
                .iter()
                .any(|&other| other != m && other.a <= m.a && other.b <= m.b)
        })
        .copied()
        .collect()
}

/// Every pairwise exponent sum of the two generator lists, minimalized.
pub fn naive_product(lhs: &[Monomial], rhs: &[Monomial]) -> Result<Vec<Monomial>, Error> {
    let mut sums = Vec::with_capacity(lhs.len() * rhs.len());
    for &g in lhs {
        for &h in rhs {
            let a = g.a.checked_add(h.a).filter(|&v| v <= MAX_EXPONENT);
            let b = g.b.checked_add(h.b).filter(|&v| v <= MAX_EXPONENT);
            match (a, b) {
                (Some(a), Some(b)) => sums.push(Monomial::new(a, b)),
                _ => {
                    return Err(Error::ExponentOverflow {
                        limit: MAX_EXPONENT,
                    })
                }
            }
        }
    }
    Ok(naive_minimalize(&sums))
}

/// Deterministic seeded staircase generator.
///
/// Scheme: a ChaCha8 stream seeded with `seed` supplies raw `u64`s. The
/// generator count is `1 + next() % max_gens` (capped at `max_exp + 1` so
/// distinct exponents exist), then that many distinct x-exponents and
/// distinct y-exponents are drawn as `next() % (max_exp + 1)`. Sorting the
/// x-exponents ascending and pairing them with the y-exponents sorted
/// descending yields a canonical antichain. With `m_primary`, the smallest
/// x-exponent and the smallest y-exponent are forced to zero so the ideal
/// contains pure powers of both variables.
pub fn random_ideal(seed: u64, max_gens: usize, max_exp: u64, m_primary: bool) -> StaircaseIdeal {
    assert!(max_gens >= 1, "max_gens must be at least 1");
    assert!(
        (1..=MAX_EXPONENT).contains(&max_exp),
        "max_exp must be in 1..=MAX_EXPONENT"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut count = 1 + (rng.next_u64() % max_gens as u64);
    count = count.min(max_exp + 1);

    let mut draw_distinct = |n: u64| -> Vec<u64> {
        let mut set = BTreeSet::new();
        while (set.len() as u64) < n {
            set.insert(rng.next_u64() % (max_exp + 1));
        }
        set.into_iter().collect()
    };

    let mut xs = draw_distinct(count);
    let mut ys = draw_distinct(count);
    if m_primary {
        xs[0] = 0;
        ys[0] = 0;
    }
    let gens = xs
        .iter()
        .zip(ys.iter().rev())
        .map(|(&a, &b)| Monomial::new(a, b))
        .collect();
    StaircaseIdeal::from_canonical_unchecked(gens)
}
