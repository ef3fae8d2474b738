//! Minimal integer-polynomial helpers: reduction mod p, resultants by
//! fraction-free elimination, discriminants, and a desk-scale rational-root
//! / modular irreducibility certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::primes::primes_up_to;
use crate::exact::FpPolynomial;

/// Coefficients low-to-high, trimmed.
pub fn trim(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

pub fn degree(f: &[BigInt]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn is_monic(f: &[BigInt]) -> bool {
    f.last().is_some_and(|c| c.is_one())
}

pub fn derivative(f: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(f.len().saturating_sub(1));
    for (i, c) in f.iter().enumerate().skip(1) {
        out.push(c * BigInt::from(i));
    }
    trim(out)
}

pub fn reduce_mod_p(f: &[BigInt], p: u64) -> FpPolynomial {
    let p_big = BigInt::from(p);
    let coeffs: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p_big);
            u64::try_from(r).expect("mod_floor result fits u64")
        })
        .collect();
    FpPolynomial::new(p, coeffs).expect("p validated prime by caller")
}

/// Resultant of f and g by Bareiss fraction-free elimination on the
/// Sylvester matrix. Exact over the integers.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (Some(m), Some(n)) = (degree(f), degree(g)) else {
        return BigInt::zero();
    };
    if m == 0 {
        return f[0].pow(n as u32);
    }
    if n == 0 {
        return g[0].pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return BigInt::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = num / &prev;
            }
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    sign * mat[size - 1][size - 1].clone()
}

/// Discriminant of a monic polynomial of degree >= 1.
pub fn discriminant(f: &[BigInt]) -> BigInt {
    let d = degree(f).expect("discriminant of the zero polynomial");
    assert!(is_monic(f), "discriminant helper expects monic input");
    if d == 1 {
        return BigInt::one();
    }
    let sign = if (d * (d - 1) / 2).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    sign * resultant(f, &derivative(f))
}

/// All integer roots of a monic integer polynomial (divisors of the
/// constant term, by the rational root theorem).
pub fn integer_roots(f: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    if f.is_empty() {
        return out;
    }
    if f[0].is_zero() {
        out.push(BigInt::zero());
    }
    let c0 = f[0].abs();
    if c0.is_zero() {
        return out;
    }
    // Desk-scale constant terms only; enumerate divisors by trial.
    let mut d = BigInt::one();
    while &d * &d <= c0 {
        if (&c0 % &d).is_zero() {
            for cand in [d.clone(), &c0 / &d] {
                for signed in [cand.clone(), -cand.clone()] {
                    if eval(f, &signed).is_zero() && !out.contains(&signed) {
                        out.push(signed);
                    }
                }
            }
        }
        d += 1;
    }
    out
}

pub fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Best-effort irreducibility certificate for a monic integer polynomial:
/// decisive through degree 3 via integer roots, and for higher degrees via
/// irreducibility mod some good prime or factor-degree-pattern exclusion.
/// Returns Err only when the polynomial is provably reducible.
pub fn certify_irreducible(f: &[BigInt]) -> Result<()> {
    let d = degree(f).ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    if d == 0 {
        return Err(Error::InvalidArgument("constant polynomial".into()));
    }
    if d == 1 {
        return Ok(());
    }
    if !integer_roots(f).is_empty() {
        return Err(Error::Malformed(format!(
            "polynomial has a rational root, hence is reducible (degree {d})"
        )));
    }
    if d <= 3 {
        return Ok(());
    }
    let disc = discriminant(f);
    if disc.is_zero() {
        return Err(Error::Malformed("polynomial is not squarefree".into()));
    }
    // Proper divisor degrees still compatible with every observed mod-p
    // factor pattern; empty means irreducible.
    let mut possible: Vec<bool> = vec![true; d]; // index = degree 0..d-1, degree 0 unused
    for p in primes_up_to(200) {
        let p_big = BigInt::from(p);
        if (&disc % &p_big).is_zero() {
            continue;
        }
        let fbar = reduce_mod_p(f, p);
        let factors = fbar.factor().expect("monic squarefree reduction");
        if factors.len() == 1 {
            return Ok(());
        }
        let degs: Vec<usize> = factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
        // Subset sums of the factor degrees.
        let mut sums = vec![false; d + 1];
        sums[0] = true;
        for &dd in &degs {
            for s in (0..=d - dd).rev() {
                if sums[s] {
                    sums[s + dd] = true;
                }
            }
        }
        for (deg, slot) in possible.iter_mut().enumerate().skip(1) {
            if !sums[deg] {
                *slot = false;
            }
        }
        if possible.iter().skip(1).all(|&b| !b) {
            return Ok(());
        }
    }
    // Could not certify either way at desk scale; treat as unverified but
    // acceptable, since no reducibility witness was found.
    Ok(())
}
