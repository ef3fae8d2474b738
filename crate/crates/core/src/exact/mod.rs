//! Arbitrary-precision exact arithmetic: p-adic valuations, factored
//! integers, rationals, primes, and univariate polynomials over prime fields.

pub mod extnat;
pub mod factored;
pub mod fppoly;
pub mod primes;
pub mod rational;

pub use extnat::ExtNat;
pub use factored::FactoredInteger;
pub use fppoly::FpPolynomial;
pub use rational::ExactRational;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use primes::is_prime;

/// p-adic valuation of an arbitrary-precision integer: the largest k with
/// p^k | x, and infinity for x = 0.
pub fn nu_p(p: u64, x: &BigInt) -> Result<ExtNat> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if x.is_zero() {
        return Ok(ExtNat::Infinity);
    }
    let p_big = BigInt::from(p);
    let mut v = 0u64;
    let mut rest = x.clone();
    loop {
        let (q, r) = rest.div_rem(&p_big);
        if !r.is_zero() {
            return Ok(ExtNat::Finite(v));
        }
        v += 1;
        rest = q;
    }
}

/// `nu_p` specialized to machine integers (x = 0 still maps to infinity).
pub fn nu_p_u64(p: u64, x: u64) -> ExtNat {
    debug_assert!(is_prime(p));
    if x == 0 {
        return ExtNat::Infinity;
    }
    let mut v = 0;
    let mut rest = x;
    while rest.is_multiple_of(p) {
        rest /= p;
        v += 1;
    }
    ExtNat::Finite(v)
}

/// Kummer: nu_p(C(n, k)) is the number of carries when adding k and n-k in
/// base p.
fn binomial_valuation_kummer(p: u64, n: u64, k: u64) -> u64 {
    let mut a = k;
    let mut b = n - k;
    let mut carry = 0u64;
    let mut carries = 0u64;
    while a > 0 || b > 0 || carry > 0 {
        let digit = a % p + b % p + carry;
        carry = if digit >= p { 1 } else { 0 };
        carries += carry;
        a /= p;
        b /= p;
    }
    carries
}

/// Legendre: nu_p(m!) = sum_{i >= 1} floor(m / p^i).
fn factorial_valuation(p: u64, m: u64) -> u64 {
    let mut total = 0u64;
    let mut q = m / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// nu_p of the binomial coefficient C(n, k), computed by Kummer carry
/// counting and cross-checked against the Legendre factorial formula.
pub fn nu_p_binomial(p: u64, n: u64, k: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    let kummer = binomial_valuation_kummer(p, n, k);
    let legendre =
        factorial_valuation(p, n) - factorial_valuation(p, k) - factorial_valuation(p, n - k);
    assert_eq!(
        kummer, legendre,
        "Kummer/Legendre disagreement at p={p}, n={n}, k={k}"
    );
    Ok(kummer)
}

fn pollard_rho(n: u64, seed: u64) -> Option<u64> {
    // Brent's cycle variant with a fixed polynomial x^2 + seed.
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let step = |x: u64| (mul(x, x) + seed) % n;
    let mut x = 2u64;
    let mut y = 2u64;
    let mut d = 1u64;
    let mut count = 0u64;
    while d == 1 {
        x = step(x);
        y = step(step(y));
        d = num_integer::gcd(x.abs_diff(y), n);
        count += 1;
        if count > 1 << 22 {
            return None;
        }
    }
    (d != n).then_some(d)
}

fn factor_u64_into(n: u64, out: &mut FactoredInteger) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n) {
        out.push(n, 1);
        return Ok(());
    }
    for seed in 1..64 {
        if let Some(d) = pollard_rho(n, seed) {
            factor_u64_into(d, out)?;
            factor_u64_into(n / d, out)?;
            return Ok(());
        }
    }
    Err(Error::ResourceLimit(format!("could not factor {n}")))
}

/// Factor a positive integer by trial division with a deterministic
/// Pollard-Brent fallback. Intended for desk-scale inputs.
pub fn factor_integer(x: &BigUint) -> Result<FactoredInteger> {
    if x.is_zero() {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut out = FactoredInteger::one();
    let mut rest = x.clone();
    for p in primes_for_trial() {
        if rest <= BigUint::from(1u32) {
            break;
        }
        let p_big = BigUint::from(p);
        loop {
            let (q, r) = rest.div_rem(&p_big);
            if !r.is_zero() {
                break;
            }
            out.push(p, 1);
            rest = q;
        }
    }
    if rest > BigUint::from(1u32) {
        let Some(r) = rest.to_u64() else {
            return Err(Error::ResourceLimit(format!(
                "remaining cofactor {rest} is beyond desk scale"
            )));
        };
        factor_u64_into(r, &mut out)?;
    }
    Ok(out)
}

/// Factor a machine-word integer (trial division plus Pollard-Brent).
pub fn factor_u64(x: u64) -> Result<FactoredInteger> {
    if x == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut out = FactoredInteger::one();
    let mut rest = x;
    for p in [2u64, 3, 5, 7, 11, 13] {
        while rest.is_multiple_of(p) {
            out.push(p, 1);
            rest /= p;
        }
    }
    if rest > 1 {
        factor_u64_into(rest, &mut out)?;
    }
    Ok(out)
}

/// All divisors of x, ascending.
pub fn divisors(x: u64) -> Result<Vec<u64>> {
    let factored = factor_u64(x)?;
    let mut out = vec![1u64];
    for (p, k) in factored.iter() {
        let snapshot = out.clone();
        let mut power = 1u64;
        for _ in 0..k {
            power *= p;
            out.extend(snapshot.iter().map(|d| d * power));
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn primes_for_trial() -> impl Iterator<Item = u64> {
    // 2, 3, then the 6k +/- 1 wheel up to 2^16; Pollard handles the rest.
    std::iter::once(2)
        .chain(std::iter::once(3))
        .chain((1u64..).map(|k| 6 * k - 1).take_while(|&c| c <= 1 << 16))
        .flat_map(|c| {
            if c == 2 || c == 3 {
                vec![c]
            } else {
                vec![c, c + 2]
            }
        })
}
