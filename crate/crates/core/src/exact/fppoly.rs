//! Univariate polynomial arithmetic and factorization over prime fields.
//!
//! Factorization is fully deterministic (squarefree / distinct-degree /
//! equal-degree with enumerated splitting elements) so outputs are
//! reproducible run to run.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::primes::is_prime;

/// A polynomial over F_p, coefficients stored low-to-high, reduced mod p,
/// with a nonzero leading coefficient (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    debug_assert!(!a.is_multiple_of(p));
    crate::exact::primes::pow_mod(a, p - 2, p)
}

impl FpPolynomial {
    pub fn new(p: u64, coeffs: impl Into<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let mut coeffs = coeffs.into();
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(FpPolynomial { p, coeffs })
    }

    pub fn zero(p: u64) -> Self {
        FpPolynomial { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        let c = c % p;
        FpPolynomial {
            p,
            coeffs: if c == 0 { vec![] } else { vec![c] },
        }
    }

    pub fn x(p: u64) -> Self {
        FpPolynomial {
            p,
            coeffs: vec![0, 1],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn trim(mut coeffs: Vec<u64>, p: u64) -> FpPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPolynomial { p, coeffs }
    }

    pub fn add(&self, other: &FpPolynomial) -> FpPolynomial {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + b) % p;
        }
        Self::trim(out, p)
    }

    pub fn sub(&self, other: &FpPolynomial) -> FpPolynomial {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + p - b) % p;
        }
        Self::trim(out, p)
    }

    pub fn mul(&self, other: &FpPolynomial) -> FpPolynomial {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return FpPolynomial::zero(p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::trim(out, p)
    }

    pub fn scale(&self, c: u64) -> FpPolynomial {
        let p = self.p;
        let c = c % p;
        Self::trim(self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect(), p)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &FpPolynomial) -> (FpPolynomial, FpPolynomial) {
        debug_assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (FpPolynomial::zero(p), self.clone());
        }
        let lead_inv = inv_mod(*divisor.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + dd], lead_inv, p);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (i, &dcoef) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = (rem[k + i] + p - mul_mod(c, dcoef, p)) % p;
            }
        }
        (Self::trim(quot, p), Self::trim(rem, p))
    }

    pub fn rem(&self, divisor: &FpPolynomial) -> FpPolynomial {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &FpPolynomial) -> FpPolynomial {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPolynomial) -> FpPolynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> FpPolynomial {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&1) => self.clone(),
            Some(&lead) => self.scale(inv_mod(lead, self.p)),
        }
    }

    pub fn derivative(&self) -> FpPolynomial {
        let p = self.p;
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(mul_mod(c, (i as u64) % p, p));
        }
        Self::trim(out, p)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, p) + c) % p;
        }
        acc
    }

    /// self^exp mod m, with an arbitrary-precision exponent.
    pub fn pow_mod(&self, exp: &BigUint, m: &FpPolynomial) -> FpPolynomial {
        let mut result = FpPolynomial::constant(self.p, 1);
        let mut base = self.rem(m);
        let mut e = exp.clone();
        let two = BigUint::from(2u32);
        while !e.is_zero() {
            if (&e % &two) == BigUint::from(1u32) {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e /= &two;
        }
        result
    }

    /// All distinct roots in F_p, ascending.
    pub fn roots(&self) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Squarefree iff gcd(f, f') = 1.
    pub fn is_squarefree(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Deterministic irreducibility test: f of degree d is irreducible iff
    /// x^(p^d) = x mod f and gcd(x^(p^(d/l)) - x, f) = 1 for primes l | d.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let f = self.monic();
        let x = FpPolynomial::x(self.p);
        let frob_full = frobenius_power(&x, &f, d as u64);
        if frob_full.sub(&x).rem(&f) != FpPolynomial::zero(self.p) {
            return false;
        }
        let mut m = d;
        let mut prime_divisors = Vec::new();
        let mut q = 2;
        while q * q <= m {
            if m % q == 0 {
                prime_divisors.push(q);
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            prime_divisors.push(m);
        }
        for l in prime_divisors {
            let h = frobenius_power(&x, &f, (d / l) as u64);
            if f.gcd(&h.sub(&x)).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Complete factorization of a monic polynomial of degree >= 1 into
    /// monic irreducibles with multiplicities, sorted by degree then by
    /// coefficient sequence.
    pub fn factor(&self) -> Result<Vec<(FpPolynomial, u64)>> {
        if !self.is_monic() {
            return Err(Error::InvalidArgument(
                "polynomial factorization requires a monic input".into(),
            ));
        }
        if self.degree() == Some(0) || self.degree().is_none() {
            return Err(Error::InvalidArgument(
                "polynomial factorization requires degree >= 1".into(),
            ));
        }
        let mut out: Vec<(FpPolynomial, u64)> = Vec::new();
        for (part, mult) in squarefree_decomposition(self) {
            for (poly, degree) in distinct_degree_split(&part) {
                for irr in equal_degree_split(&poly, degree) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.coeffs
                .len()
                .cmp(&b.0.coeffs.len())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        Ok(out)
    }
}

/// x -> x^(p^k) mod f, by iterating the Frobenius.
fn frobenius_power(x: &FpPolynomial, f: &FpPolynomial, k: u64) -> FpPolynomial {
    let p = BigUint::from(f.p);
    let mut acc = x.rem(f);
    for _ in 0..k {
        acc = acc.pow_mod(&p, f);
    }
    acc
}

/// Squarefree decomposition in characteristic p: pairs (g, m) with g monic
/// squarefree, the g pairwise coprime, and f = prod g^m.
fn squarefree_decomposition(f: &FpPolynomial) -> Vec<(FpPolynomial, u64)> {
    let p = f.p;
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p) = (p-th root of f)(x)^p over the prime field.
        let root = pth_root(f);
        return squarefree_decomposition(&root)
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&deriv);
    let mut w = f.div_exact(&c).monic();
    let mut i = 1u64;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree() != Some(0) {
            out.push((z.monic(), i));
        }
        c = c.div_exact(&y).monic();
        w = y;
        i += 1;
    }
    // Whatever remains of c is a p-th power: factors whose multiplicity in f
    // is divisible by p.
    if c.degree().is_some_and(|d| d > 0) {
        for (g, m) in squarefree_decomposition(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Replace the p-divisible polynomial f(x) = g(x^p) by its p-th root; over
/// F_p the coefficients are fixed by Frobenius so the root just reindexes.
fn pth_root(f: &FpPolynomial) -> FpPolynomial {
    let p = f.p as usize;
    let mut coeffs = Vec::new();
    for (i, &c) in f.coeffs.iter().enumerate() {
        if i % p == 0 {
            coeffs.push(c);
        } else {
            debug_assert_eq!(c, 0);
        }
    }
    FpPolynomial::trim(coeffs, f.p)
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
fn distinct_degree_split(f: &FpPolynomial) -> Vec<(FpPolynomial, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = FpPolynomial::x(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.degree().is_some_and(|deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() != Some(0) {
            out.push((g.clone(), d));
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
        }
    }
    if rest.degree().is_some_and(|deg| deg > 0) {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Deterministic enumeration of the polynomials over F_p of degree in
/// [1, bound), ordered by degree then by coefficient sequence; used as
/// splitting candidates in equal-degree factorization. Constants are
/// excluded up front: their powers are constants and can never split.
struct CandidateIter {
    p: u64,
    coeffs: Vec<u64>,
    bound: usize,
}

impl CandidateIter {
    fn new(p: u64, bound: usize) -> Self {
        // Seeded one increment before x, so the first item is x itself.
        CandidateIter {
            p,
            coeffs: vec![p - 1, 0],
            bound,
        }
    }
}

impl Iterator for CandidateIter {
    type Item = FpPolynomial;

    fn next(&mut self) -> Option<FpPolynomial> {
        // Increment the coefficient vector as a base-p counter.
        let mut i = 0;
        loop {
            if i == self.coeffs.len() {
                self.coeffs.push(1);
                break;
            }
            self.coeffs[i] += 1;
            if self.coeffs[i] < self.p {
                break;
            }
            self.coeffs[i] = 0;
            i += 1;
        }
        if self.coeffs.len() > self.bound {
            return None;
        }
        Some(FpPolynomial::trim(self.coeffs.clone(), self.p))
    }
}

/// Split a monic squarefree product of irreducibles, all of degree d, into
/// its irreducible factors. Deterministic: splitting elements are taken from
/// an enumeration rather than drawn at random.
fn equal_degree_split(f: &FpPolynomial, d: usize) -> Vec<FpPolynomial> {
    let deg = f.degree().unwrap();
    if deg == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let g = if p == 2 {
        // gcd with the trace map sum_{i<d} t^(2^i) separates factors.
        let mut found = None;
        for t in CandidateIter::new(2, deg) {
            let mut trace = FpPolynomial::zero(2);
            let mut power = t.rem(f);
            for _ in 0..d {
                trace = trace.add(&power);
                power = power.mul(&power).rem(f);
            }
            let g = f.gcd(&trace);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < deg {
                found = Some(g);
                break;
            }
        }
        found.expect("trace enumeration must split a reducible equal-degree product")
    } else {
        // gcd with t^((p^d - 1)/2) - 1 separates factors for odd p.
        let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        let one = FpPolynomial::constant(p, 1);
        let mut found = None;
        for t in CandidateIter::new(p, deg) {
            let h = t.pow_mod(&exp, f).sub(&one);
            let g = f.gcd(&h);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < deg {
                found = Some(g);
                break;
            }
        }
        found.expect("candidate enumeration must split a reducible equal-degree product")
    };
    let mut left = equal_degree_split(&g, d);
    let right = equal_degree_split(&f.div_exact(&g), d);
    left.extend(right);
    left
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}
