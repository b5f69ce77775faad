//! Cross-checks of the fast staircase operations against the brute-force
//! reference implementations in `oracle`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use staircase_core::{oracle, Monomial, StaircaseIdeal};

fn random_monomials(rng: &mut ChaCha8Rng, count: usize, max_exp: u64) -> Vec<Monomial> {
    (0..count)
        .map(|_| {
            Monomial::new(
                rng.next_u64() % (max_exp + 1),
                rng.next_u64() % (max_exp + 1),
            )
        })
        .collect()
}

fn as_sorted(ideal: &StaircaseIdeal) -> Vec<Monomial> {
    ideal.gens().to_vec()
}

#[test]
fn normalize_matches_naive_filter() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let candidates = random_monomials(&mut rng, 500, 50);
        let fast = StaircaseIdeal::normalize(candidates.iter().copied());
        let naive = oracle::naive_minimalize(&candidates);
        assert_eq!(as_sorted(&fast), naive);
    }
}

#[test]
fn product_matches_naive_product() {
    for seed in 0..50u64 {
        let lhs = oracle::random_ideal(seed, 20, 1_000_000, false);
        let rhs = oracle::random_ideal(seed.wrapping_add(1_000), 20, 1_000_000, false);
        let fast = lhs.product(&rhs).unwrap();
        let naive = oracle::naive_product(lhs.gens(), rhs.gens()).unwrap();
        assert_eq!(as_sorted(&fast), naive, "seed {seed}");
    }
}

#[test]
fn cube_matches_iterated_and_naive_route() {
    for seed in 0..20u64 {
        let ideal = oracle::random_ideal(seed, 10, 10_000, false);
        let fast = ideal.power(3).unwrap();
        let two_step = ideal.product(&ideal).unwrap().product(&ideal).unwrap();
        assert_eq!(fast, two_step, "seed {seed}");

        let naive_sq = oracle::naive_product(ideal.gens(), ideal.gens()).unwrap();
        let naive_cu = oracle::naive_product(&naive_sq, ideal.gens()).unwrap();
        assert_eq!(as_sorted(&fast), naive_cu, "seed {seed}");
    }
}

#[test]
fn membership_matches_linear_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..10u64 {
        let ideal = oracle::random_ideal(seed, 25, 500, false);
        for m in random_monomials(&mut rng, 100, 600) {
            let scan = ideal.gens().iter().any(|g| g.divides(m));
            assert_eq!(ideal.contains(m), scan, "seed {seed}, monomial {m}");
        }
    }
}

#[test]
fn normalization_is_idempotent_on_random_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let candidates = random_monomials(&mut rng, 200, 40);
        let once = StaircaseIdeal::normalize(candidates.iter().copied());
        let twice = StaircaseIdeal::normalize(once.gens().iter().copied());
        assert_eq!(once, twice);
    }
}
