//! Property tests for the invariants of the exact-arithmetic layer and
//! the local closed forms.

use num_bigint::BigUint;
use proptest::prelude::*;

use congruing_core::exact::{factor_integer, FactoredInteger, FpPolynomial};
use congruing_core::lfunction::{s_transform, EulerFactor, EulerProduct};
use congruing_core::localfield::{
    dvr_quotient_structure, local_ext1, local_hn_valuation, u, u_min, LocalFieldData,
};

const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

#[test]
fn kummer_equals_legendre_on_grid() {
    // The dual-route assertion lives inside nu_p_binomial; running the grid
    // exercises it for the first 5 primes and all n <= 300.
    for p in SMALL_PRIMES {
        for n in 0..=300u64 {
            for k in 0..=n {
                congruing_core::exact::nu_p_binomial(p, n, k).unwrap();
            }
        }
    }
}

proptest! {
    #[test]
    fn factor_then_value_round_trips(x in 1u64..1_000_000_000) {
        let factored = factor_integer(&BigUint::from(x)).unwrap();
        prop_assert_eq!(factored.value(), BigUint::from(x));
    }

    #[test]
    fn value_then_factor_round_trips(
        exps in proptest::collection::vec(0u64..4, 5),
    ) {
        let pairs: Vec<(u64, u64)> = SMALL_PRIMES
            .iter()
            .zip(&exps)
            .filter(|&(_, &k)| k > 0)
            .map(|(&p, &k)| (p, k))
            .collect();
        let canonical = FactoredInteger::from_pairs(pairs).unwrap();
        let refactored = factor_integer(&canonical.value()).unwrap();
        prop_assert_eq!(refactored, canonical);
    }

    #[test]
    fn fp_factorization_reconstructs_and_is_irreducible(
        p_idx in 0usize..4,
        low in proptest::collection::vec(0u64..7, 1..=6),
    ) {
        let p = [2u64, 3, 5, 7][p_idx];
        let mut coeffs: Vec<u64> = low.iter().map(|&c| c % p).collect();
        coeffs.push(1); // monic
        let f = FpPolynomial::new(p, coeffs).unwrap();
        let factors = f.factor().unwrap();
        let product = factors.iter().fold(FpPolynomial::constant(p, 1), |acc, (g, m)| {
            (0..*m).fold(acc, |a, _| a.mul(g))
        });
        prop_assert_eq!(product, f);
        for (g, _) in &factors {
            prop_assert!(g.is_irreducible(), "{g} is reducible");
            prop_assert!(g.is_monic());
        }
        // Deterministic ordering: sorted by degree, then coefficients.
        for w in factors.windows(2) {
            let (a, b) = (&w[0].0, &w[1].0);
            prop_assert!(
                (a.degree(), a.coeffs()) <= (b.degree(), b.coeffs())
            );
        }
    }

    #[test]
    fn u_min_matches_brute_force(
        p_idx in 0usize..4,
        e in 1u64..=10,
        n in 1u64..=200,
    ) {
        let p = [2u64, 3, 5, 7][p_idx];
        let closed = u_min(p, n, e).unwrap();
        let mut best = u64::MAX;
        let mut argmins = Vec::new();
        for k in 1..=n {
            let v = u(p, n, e, k).unwrap();
            if v < best {
                best = v;
                argmins = vec![k];
            } else if v == best {
                argmins.push(k);
            }
        }
        prop_assert_eq!(closed.min_value, best);
        prop_assert_eq!(&closed.argmins, &argmins);
        prop_assert!(closed.argmins.len() <= 2);
    }

    #[test]
    fn local_ext1_order_is_p_to_f_times_valuation(
        p_idx in 0usize..4,
        e in 1u64..=6,
        f in 1u64..=3,
        n in 1u64..=80,
    ) {
        let p = [2u64, 3, 5, 7][p_idx];
        let field = LocalFieldData::new(p, e, f).unwrap();
        let Ok(valuation) = local_hn_valuation(&field, n) else {
            // outside the proven range: nothing to check
            return Ok(());
        };
        let group = local_ext1(&field, n).unwrap();
        prop_assert_eq!(group.order(), FactoredInteger::prime_power(p, f * valuation));
    }

    #[test]
    fn dvr_structure_shape(
        p_idx in 0usize..4,
        e in 1u64..=6,
        f in 1u64..=3,
        i in 0u64..=40,
    ) {
        let p = [2u64, 3, 5, 7][p_idx];
        let field = LocalFieldData::new(p, e, f).unwrap();
        let group = dvr_quotient_structure(&field, i);
        prop_assert_eq!(group.order(), FactoredInteger::prime_power(p, f * i));
        // At most two distinct cyclic orders, differing by a factor of p.
        let orders = group.cyclic_orders_desc();
        let distinct: Vec<&BigUint> = {
            let mut d: Vec<&BigUint> = orders.iter().collect();
            d.dedup();
            d
        };
        prop_assert!(distinct.len() <= 2);
        if distinct.len() == 2 {
            prop_assert_eq!(distinct[1] * BigUint::from(p), distinct[0].clone());
        }
    }

    #[test]
    fn s_transform_multiplicative_over_disjoint_products(
        a1 in 1u64..=3,
        m1 in 1u64..=4,
        a2 in 1u64..=3,
        m2 in 1u64..=4,
        n in 1u64..=150,
    ) {
        let e1 = EulerProduct::from_factors(None, [(3, EulerFactor { a: a1, mult: m1 })]);
        let e2 = EulerProduct::from_factors(None, [(7, EulerFactor { a: a2, mult: m2 })]);
        let combined = EulerProduct::from_factors(
            None,
            [(3, EulerFactor { a: a1, mult: m1 }), (7, EulerFactor { a: a2, mult: m2 })],
        );
        let lhs = s_transform(&combined, n).unwrap();
        let rhs = s_transform(&e1, n).unwrap().mul(&s_transform(&e2, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

/// Cross-module: over Z with 2 inverted, the order of A/J_n at even n is
/// exactly the odd part of the denominator of zeta(1-n).
#[test]
fn congruing_order_is_odd_part_of_zeta_denominator() {
    use congruing_core::bernoulli::zeta_denominator;
    use congruing_core::catalog::FieldCatalog;
    use congruing_core::congruing::{minimal_congruing, IntegerCasePolicy};

    let q = FieldCatalog::builtin().get("q").unwrap();
    let invert2 = FactoredInteger::prime_power(2, 1);
    for n in (2..=120u64).step_by(2) {
        let answer = minimal_congruing(&q, n, &invert2, IntegerCasePolicy::Error).unwrap();
        let denom = zeta_denominator(n).unwrap();
        let odd_part = FactoredInteger::from_pairs(denom.iter().filter(|&(p, _)| p != 2)).unwrap();
        assert_eq!(answer.order, odd_part, "n = {n}");
    }
}

/// Structure detects more than order: equal-order DVR quotients with
/// different (e, f) can have different cyclic decompositions.
#[test]
fn dvr_structure_distinguishes_equal_orders() {
    let narrow = LocalFieldData::new(5, 1, 1).unwrap(); // Z_5, i = 3: Z/125
    let wide = LocalFieldData::new(5, 2, 1).unwrap(); // e = 2, i = 3: Z/25 + Z/5
    let a = dvr_quotient_structure(&narrow, 3);
    let b = dvr_quotient_structure(&wide, 3);
    assert_eq!(a.order(), b.order());
    assert_ne!(a, b);
    assert_eq!(a.cyclic_orders_desc(), vec![BigUint::from(125u32)]);
    assert_eq!(
        b.cyclic_orders_desc(),
        vec![BigUint::from(25u32), BigUint::from(5u32)]
    );
}
