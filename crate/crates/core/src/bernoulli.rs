//! Exact Bernoulli numbers and zeta special values. Convention: B_1 = -1/2,
//! so zeta(1-n) = -B_n / n holds verbatim for all n >= 1.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::primes::primes_up_to;
use crate::exact::{factor_integer, ExactRational, FactoredInteger};

/// Default cap on the recurrence; far past the acceptance grids but enough
/// to stop a runaway request.
pub const DEFAULT_BOUND: u64 = 400;

static CACHE: RwLock<Vec<BigRational>> = RwLock::new(Vec::new());

fn extend_cache_to(n: usize) {
    {
        let cache = CACHE.read().unwrap();
        if cache.len() > n {
            return;
        }
    }
    let mut cache = CACHE.write().unwrap();
    if cache.is_empty() {
        cache.push(BigRational::one()); // B_0
    }
    // Defining recurrence: sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, i.e.
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k.
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = BigRational::zero();
        // C(m+1, k) built incrementally.
        let mut binom = BigInt::one();
        for (k, b_k) in cache.iter().enumerate() {
            if !b_k.is_zero() {
                acc += BigRational::from(binom.clone()) * b_k;
            }
            // C(m+1, k+1) = C(m+1, k) * (m+1-k) / (k+1)
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        let value = -acc / BigRational::from(BigInt::from(m + 1));
        cache.push(value);
    }
}

/// The exact Bernoulli number B_n.
pub fn bernoulli(n: u64) -> Result<ExactRational> {
    if n > DEFAULT_BOUND {
        return Err(Error::ResourceLimit(format!(
            "Bernoulli index {n} exceeds the bound {DEFAULT_BOUND}"
        )));
    }
    extend_cache_to(n as usize);
    let value = CACHE.read().unwrap()[n as usize].clone();
    if n >= 2 && n.is_multiple_of(2) {
        // Denominator cross-check against von Staudt-Clausen.
        let expected = vsc_denominator(n)?.value();
        assert_eq!(
            value.denom().magnitude().clone(),
            expected,
            "von Staudt-Clausen mismatch at B_{n}"
        );
    }
    Ok(ExactRational::from(value))
}

/// von Staudt-Clausen: the denominator of B_n for even n is the squarefree
/// product of the primes p with (p - 1) | n.
pub fn vsc_denominator(n: u64) -> Result<FactoredInteger> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "von Staudt-Clausen requires even n >= 2, got {n}"
        )));
    }
    let mut out = FactoredInteger::one();
    for p in primes_up_to(n + 1) {
        if n.is_multiple_of(p - 1) {
            out.push(p, 1);
        }
    }
    Ok(out)
}

/// zeta(1 - n) = -B_n / n for n >= 1 (0 for odd n >= 3).
pub fn zeta_value(n: u64) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("zeta_value needs n >= 1".into()));
    }
    let b = bernoulli(n)?;
    let minus_n = ExactRational::from_integer(-(n as i64));
    Ok(&b / &minus_n)
}

/// Denominator of zeta(1 - n) as a factored integer. For odd n the value is
/// 0 and the denominator is 2 by convention.
pub fn zeta_denominator(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "zeta_denominator needs n >= 1".into(),
        ));
    }
    if n % 2 == 1 {
        return Ok(FactoredInteger::prime_power(2, 1));
    }
    let value = zeta_value(n)?;
    factor_integer(&value.denominator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rational(num: i64, den: i64) -> ExactRational {
        ExactRational::new(BigInt::from(num), BigInt::from(den)).unwrap()
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli(0).unwrap(), rational(1, 1));
        assert_eq!(bernoulli(1).unwrap(), rational(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), rational(1, 6));
        assert_eq!(bernoulli(7).unwrap(), rational(0, 1));
        assert_eq!(bernoulli(12).unwrap(), rational(-691, 2730));
        assert!(bernoulli(DEFAULT_BOUND + 1).is_err());
    }

    #[test]
    fn vsc_examples() {
        assert_eq!(
            vsc_denominator(12).unwrap(),
            FactoredInteger::from_pairs([(2, 1), (3, 1), (5, 1), (7, 1), (13, 1)]).unwrap()
        );
        assert_eq!(
            vsc_denominator(2).unwrap(),
            FactoredInteger::from_pairs([(2, 1), (3, 1)]).unwrap()
        );
        assert_eq!(
            vsc_denominator(16).unwrap(),
            FactoredInteger::from_pairs([(2, 1), (3, 1), (5, 1), (17, 1)]).unwrap()
        );
        assert!(vsc_denominator(7).is_err());
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_value(2).unwrap(), rational(-1, 12));
        assert_eq!(zeta_value(4).unwrap(), rational(1, 120));
        assert!(zeta_value(3).unwrap().is_zero());
        // zeta(-5) = -1/252
        assert_eq!(zeta_value(6).unwrap(), rational(-1, 252));
    }

    #[test]
    fn zeta_denominators() {
        assert_eq!(
            zeta_denominator(2).unwrap(),
            FactoredInteger::from_pairs([(2, 2), (3, 1)]).unwrap()
        );
        assert_eq!(
            zeta_denominator(12).unwrap(),
            FactoredInteger::from_pairs([(2, 3), (3, 2), (5, 1), (7, 1), (13, 1)]).unwrap()
        );
        assert_eq!(
            zeta_denominator(5).unwrap(),
            FactoredInteger::prime_power(2, 1)
        );
    }

    #[test]
    fn even_bernoulli_denominators_squarefree() {
        for n in (2..=60).step_by(2) {
            let b = bernoulli(n).unwrap();
            let f = factor_integer(&b.denominator()).unwrap();
            assert!(f.is_squarefree(), "B_{n}");
        }
    }

    #[test]
    fn numerator_divisibility_when_p_minus_1_does_not_divide() {
        // nu_p(numerator of B_n) >= nu_p(n) when (p-1) does not divide n.
        use crate::exact::{nu_p, nu_p_u64};
        for n in (2..=60u64).step_by(2) {
            let b = bernoulli(n).unwrap();
            for p in primes_up_to(n + 1) {
                if n % (p - 1) == 0 {
                    continue;
                }
                let num_val = nu_p(p, b.numerator()).unwrap();
                let n_val = nu_p_u64(p, n);
                assert!(
                    num_val >= n_val,
                    "p = {p}, n = {n}: {num_val:?} < {n_val:?}"
                );
            }
        }
    }
}
