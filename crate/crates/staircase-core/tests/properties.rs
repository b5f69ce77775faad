//! Property tests for the staircase algebra: canonical-form invariants,
//! ring laws, graded-piece counting, and socle identities.

use proptest::prelude::*;
use staircase_core::{oracle, EquigeneratedSpec, Monomial, StaircaseIdeal};

fn arb_monomial(max: u64) -> impl Strategy<Value = Monomial> {
    (0..=max, 0..=max).prop_map(|(a, b)| Monomial::new(a, b))
}

fn arb_ideal() -> impl Strategy<Value = StaircaseIdeal> {
    proptest::collection::vec(arb_monomial(60), 1..12).prop_map(StaircaseIdeal::normalize)
}

/// Nonzero ideal containing pure powers of both variables, exponents <= 40.
fn arb_m_primary() -> impl Strategy<Value = StaircaseIdeal> {
    (
        proptest::collection::vec(arb_monomial(40), 0..10),
        0..=40u64,
        0..=40u64,
    )
        .prop_map(|(mut gens, xa, yb)| {
            gens.push(Monomial::new(xa, 0));
            gens.push(Monomial::new(0, yb));
            StaircaseIdeal::normalize(gens)
        })
}

fn arb_spec() -> impl Strategy<Value = EquigeneratedSpec> {
    (proptest::collection::btree_set(0..50u64, 1..8), 0..20u64).prop_map(|(set, pad)| {
        let xexps: Vec<u64> = set.into_iter().collect();
        let d = xexps.last().unwrap() + pad;
        EquigeneratedSpec::new(xexps, d).unwrap()
    })
}

fn is_antichain(i: &StaircaseIdeal) -> bool {
    i.gens().iter().enumerate().all(|(x, g)| {
        i.gens()
            .iter()
            .enumerate()
            .all(|(y, h)| x == y || !g.divides(*h))
    })
}

proptest! {
    #[test]
    fn normalize_is_idempotent(gens in proptest::collection::vec(arb_monomial(80), 0..40)) {
        let once = StaircaseIdeal::normalize(gens.iter().copied());
        let twice = StaircaseIdeal::normalize(once.gens().iter().copied());
        prop_assert_eq!(&once, &twice);
        prop_assert!(is_antichain(&once));
        // Every input monomial is divisible by some kept generator.
        for &m in &gens {
            prop_assert!(once.contains(m));
        }
    }

    #[test]
    fn sum_laws(i in arb_ideal(), j in arb_ideal(), k in arb_ideal()) {
        prop_assert_eq!(i.sum(&j), j.sum(&i));
        prop_assert_eq!(i.sum(&j).sum(&k), i.sum(&j.sum(&k)));
        prop_assert_eq!(i.sum(&i), i.clone());
        prop_assert_eq!(i.sum(&StaircaseIdeal::zero()), i.clone());
        prop_assert!(is_antichain(&i.sum(&j)));
    }

    #[test]
    fn product_laws(i in arb_ideal(), j in arb_ideal(), k in arb_ideal()) {
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        prop_assert_eq!(
            i.product(&j).unwrap().product(&k).unwrap(),
            i.product(&j.product(&k).unwrap()).unwrap()
        );
        // Distributivity over sums.
        prop_assert_eq!(
            i.product(&j.sum(&k)).unwrap(),
            i.product(&j).unwrap().sum(&i.product(&k).unwrap())
        );
        prop_assert!(i.product(&StaircaseIdeal::zero()).unwrap().is_zero());
        prop_assert_eq!(i.product(&StaircaseIdeal::unit()).unwrap(), i.clone());
        prop_assert!(is_antichain(&i.product(&j).unwrap()));
    }

    #[test]
    fn product_agrees_with_oracle(i in arb_ideal(), j in arb_ideal()) {
        let fast = i.product(&j).unwrap();
        let naive = oracle::naive_product(i.gens(), j.gens()).unwrap();
        prop_assert_eq!(fast.gens().to_vec(), naive);
    }

    #[test]
    fn power_is_multiplicative(i in arb_ideal(), a in 1u64..4, b in 1u64..4) {
        prop_assert_eq!(
            i.power(a).unwrap().power(b).unwrap(),
            i.power(a * b).unwrap()
        );
    }

    #[test]
    fn equigenerated_product_law(x in arb_spec(), y in arb_spec()) {
        // The product of equigenerated ideals is equigenerated in the sum
        // degree with x-exponent set {a_i + b_j}; minimalization drops
        // nothing.
        let mut sums: Vec<u64> = x
            .xexps()
            .iter()
            .flat_map(|&a| y.xexps().iter().map(move |&b| a + b))
            .collect();
        sums.sort_unstable();
        sums.dedup();
        let expected = EquigeneratedSpec::new(sums, x.degree() + y.degree())
            .unwrap()
            .to_ideal();
        prop_assert_eq!(x.to_ideal().product(&y.to_ideal()).unwrap(), expected);
    }

    #[test]
    fn power_degree_is_linear_for_equigenerated(x in arb_spec(), k in 1u64..5) {
        let ideal = x.to_ideal();
        prop_assert_eq!(ideal.power(k).unwrap().degree().unwrap(), k * x.degree());
    }

    #[test]
    fn membership_matches_scan(i in arb_ideal(), m in arb_monomial(90)) {
        let scan = i.gens().iter().any(|g| g.divides(m));
        prop_assert_eq!(i.contains(m), scan);
    }

    #[test]
    fn graded_dim_is_subadditive(i in arb_ideal(), j in arb_ideal(), d in 0u64..200) {
        let di = i.graded_dim(d);
        let dj = j.graded_dim(d);
        let dsum = i.sum(&j).graded_dim(d);
        prop_assert!(dsum <= di + dj);
        let slice_i = i.graded_slice(d).xexps;
        let slice_j = j.graded_slice(d).xexps;
        let disjoint = slice_i.iter().all(|a| !slice_j.contains(a));
        prop_assert_eq!(dsum == di + dj, disjoint);
    }

    #[test]
    fn graded_slice_matches_enumeration(i in arb_ideal(), d in 0u64..200) {
        let brute: Vec<u64> = (0..=d)
            .filter(|&a| i.contains(Monomial::new(a, d - a)))
            .collect();
        let slice = i.graded_slice(d);
        prop_assert_eq!(slice.xexps.clone(), brute);
        prop_assert_eq!(slice.dim(), i.graded_dim(d));
    }

    #[test]
    fn socle_identities(i in arb_m_primary()) {
        let socle = i.socle_monomials().unwrap();
        // Corner identity: exactly mu - 1 socle monomials.
        prop_assert_eq!(socle.len() as u64, i.mu() - 1);
        prop_assert_eq!(i.cm_type().unwrap(), i.mu() - 1);

        // Brute force over the bounded exponent box.
        let mut brute = Vec::new();
        for a in 0..=41u64 {
            for b in 0..=41u64 {
                let u = Monomial::new(a, b);
                if !i.contains(u)
                    && i.contains(Monomial::new(a + 1, b))
                    && i.contains(Monomial::new(a, b + 1))
                {
                    brute.push(u);
                }
            }
        }
        prop_assert_eq!(socle.clone(), brute);

        // The colon route gives the same set: generators of (I : m) that
        // escape I.
        let colon = i.colon_by_maximal();
        prop_assert!(colon.contains_ideal(&i));
        let via_colon: Vec<Monomial> = colon
            .gens()
            .iter()
            .copied()
            .filter(|&g| !i.contains(g))
            .collect();
        prop_assert_eq!(socle, via_colon);
    }

    #[test]
    fn colon_contains_original(i in arb_ideal()) {
        prop_assert!(i.colon_by_maximal().contains_ideal(&i));
    }

    #[test]
    fn random_ideal_is_canonical(seed in any::<u64>()) {
        let i = oracle::random_ideal(seed, 30, 1_000_000, false);
        prop_assert!(is_antichain(&i));
        prop_assert_eq!(&i, &oracle::random_ideal(seed, 30, 1_000_000, false));
        let p = oracle::random_ideal(seed, 30, 1_000_000, true);
        prop_assert!(p.is_m_primary());
    }
}
