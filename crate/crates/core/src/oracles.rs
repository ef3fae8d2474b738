//! Independent brute-force oracles backing the closed-form tests: valuation
//! search in truncated local rings, direct binomial minimization, and
//! additive-structure enumeration.
//!
//! Rings are modeled as `W[y]/(y^e - p)` where `W = (Z/p^M)[x]/(g(x))` and g is
//! the lexicographically first monic irreducible of degree f mod p. The
//! uniformizer is y (p itself when e = 1), and y^e - p is Eisenstein, so
//! nu(sum c_j y^j) computations by repeated exact division are faithful up
//! to the precision guard.

use crate::error::{Error, Result};
use crate::exact::{nu_p_binomial, FpPolynomial};
use crate::localfield::{FiniteAbelianGroup, LocalFieldData, UMinResult};

/// A truncated model of the ring of integers of a local field.
#[derive(Debug, Clone)]
pub struct TruncatedLocalRing {
    pub field: LocalFieldData,
    /// Coefficients live in Z/p^M.
    pub precision: u32,
    p_m: u64,
    /// Reduction of x^f modulo the chosen g(x), as f coefficients mod p^M.
    /// g is monic of degree f, so x^f = -(g - x^f).
    x_f_reduction: Vec<u64>,
}

/// Elements are e*f coefficients c[j][i] of x^i y^j, each mod p^M.
type Elem = Vec<Vec<u64>>;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Lexicographically first monic irreducible polynomial of degree f over
/// F_p (by low-to-high coefficient sequence).
fn minimal_irreducible(p: u64, f: u64) -> FpPolynomial {
    if f == 1 {
        return FpPolynomial::x(p);
    }
    let mut low = vec![0u64; f as usize];
    loop {
        let mut coeffs = low.clone();
        coeffs.push(1);
        let cand = FpPolynomial::new(p, coeffs).unwrap();
        if cand.is_irreducible() {
            return cand;
        }
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
            assert!(
                (i as u64) < f,
                "no monic irreducible of degree {f} over F_{p}?"
            );
        }
    }
}

impl TruncatedLocalRing {
    pub fn new(field: LocalFieldData, precision: u32) -> Result<Self> {
        if precision < 2 {
            return Err(Error::InvalidArgument("precision must be >= 2".into()));
        }
        let p_m = (field.p as u128)
            .checked_pow(precision)
            .and_then(|v| u64::try_from(v).ok());
        let Some(p_m) = p_m else {
            return Err(Error::ResourceLimit(format!(
                "p^M = {}^{} does not fit in a machine word",
                field.p, precision
            )));
        };
        let g = minimal_irreducible(field.p, field.f);
        // x^f = -(low part of g) mod g
        let mut x_f_reduction = vec![0u64; field.f as usize];
        for (i, &c) in g.coeffs().iter().enumerate().take(field.f as usize) {
            x_f_reduction[i] = (p_m - c % p_m) % p_m;
        }
        Ok(TruncatedLocalRing {
            field,
            precision,
            p_m,
            x_f_reduction,
        })
    }

    pub fn padic(p: u64, precision: u32) -> Result<Self> {
        Self::new(LocalFieldData::new(p, 1, 1)?, precision)
    }

    pub fn unramified(p: u64, f: u64, precision: u32) -> Result<Self> {
        Self::new(LocalFieldData::new(p, 1, f)?, precision)
    }

    pub fn eisenstein(p: u64, e: u64, precision: u32) -> Result<Self> {
        Self::new(LocalFieldData::new(p, e, 1)?, precision)
    }

    /// Valuations are only trusted strictly below this.
    pub fn guard(&self) -> u64 {
        self.field.e * (self.precision as u64) - self.field.e
    }

    pub fn zero(&self) -> Elem {
        vec![vec![0; self.field.f as usize]; self.field.e as usize]
    }

    pub fn one(&self) -> Elem {
        let mut z = self.zero();
        z[0][0] = 1;
        z
    }

    /// The uniformizer: y for e > 1, p for e = 1.
    pub fn uniformizer(&self) -> Elem {
        let mut z = self.zero();
        if self.field.e > 1 {
            z[1][0] = 1;
        } else {
            z[0][0] = self.field.p % self.p_m;
        }
        z
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for j in 0..self.field.e as usize {
            for i in 0..self.field.f as usize {
                out[j][i] = (a[j][i] + b[j][i]) % self.p_m;
            }
        }
        out
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for j in 0..self.field.e as usize {
            for i in 0..self.field.f as usize {
                out[j][i] = (a[j][i] + self.p_m - b[j][i]) % self.p_m;
            }
        }
        out
    }

    /// Product of two coefficient polynomials in W = (Z/p^M)[x]/(g).
    fn w_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field.f as usize;
        let mut conv = vec![0u64; 2 * f - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                conv[i + j] = (conv[i + j] + mul_mod(ai, bj, self.p_m)) % self.p_m;
            }
        }
        // Reduce x^(f+k) using x^f = x_f_reduction, highest degree first.
        for d in (f..2 * f - 1).rev() {
            let c = conv[d];
            if c == 0 {
                continue;
            }
            conv[d] = 0;
            for i in 0..f {
                let t = mul_mod(c, self.x_f_reduction[i], self.p_m);
                conv[d - f + i] = (conv[d - f + i] + t) % self.p_m;
            }
        }
        conv.truncate(f);
        conv
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let e = self.field.e as usize;
        let f = self.field.f as usize;
        let mut conv: Vec<Vec<u64>> = vec![vec![0; f]; 2 * e - 1];
        for (j1, row1) in a.iter().enumerate() {
            if row1.iter().all(|&c| c == 0) {
                continue;
            }
            for (j2, row2) in b.iter().enumerate() {
                let prod = self.w_mul(row1, row2);
                let dst = &mut conv[j1 + j2];
                for i in 0..f {
                    dst[i] = (dst[i] + prod[i]) % self.p_m;
                }
            }
        }
        // y^(e+k) = p * y^k
        let mut out = self.zero();
        for (j, row) in conv.iter().enumerate() {
            let (slot, scale) = if j < e {
                (j, 1u64)
            } else {
                (j - e, self.field.p)
            };
            for i in 0..f {
                let t = mul_mod(row[i], scale % self.p_m, self.p_m);
                out[slot][i] = (out[slot][i] + t) % self.p_m;
            }
        }
        out
    }

    pub fn pow(&self, a: &Elem, mut exp: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|row| row.iter().all(|&c| c == 0))
    }

    /// Divide exactly by the uniformizer, or None if not divisible. For
    /// y-division the constant row must be divisible by p, and (c_0/p)
    /// re-enters at y^(e-1); one level of head precision is consumed.
    fn div_uniformizer(&self, a: &Elem) -> Option<Elem> {
        let e = self.field.e as usize;
        let f = self.field.f as usize;
        if a[0].iter().any(|&c| c % self.field.p != 0) {
            return None;
        }
        let mut out = self.zero();
        if e == 1 {
            for i in 0..f {
                out[0][i] = a[0][i] / self.field.p;
            }
        } else {
            for j in 1..e {
                out[j - 1].clone_from_slice(&a[j]);
            }
            for i in 0..f {
                out[e - 1][i] = a[0][i] / self.field.p;
            }
        }
        Some(out)
    }

    /// pi-adic valuation by repeated exact division, trusted only below the
    /// guard band.
    pub fn valuation(&self, a: &Elem) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::InsufficientPrecision {
                required_m: self.precision as u64 + 4,
            });
        }
        let mut v = 0u64;
        let mut cur = a.clone();
        while let Some(next) = self.div_uniformizer(&cur) {
            v += 1;
            if v >= self.guard() {
                return Err(Error::InsufficientPrecision {
                    required_m: v / self.field.e + 3,
                });
            }
            if self.is_zero(&next) {
                return Err(Error::InsufficientPrecision {
                    required_m: self.precision as u64 + 4,
                });
            }
            cur = next;
        }
        Ok(v)
    }

    /// Whether nu(a) >= bound, by dividing at most `bound` times. A
    /// truncation zero counts as >= bound whenever bound <= e*M, so this
    /// needs far less head room than a full valuation.
    pub fn valuation_at_least(&self, a: &Elem, bound: u64) -> bool {
        debug_assert!(bound <= self.field.e * self.precision as u64);
        let mut cur = a.clone();
        for _ in 0..bound {
            if self.is_zero(&cur) {
                return true;
            }
            match self.div_uniformizer(&cur) {
                Some(next) => cur = next,
                None => return false,
            }
        }
        true
    }

    /// Lifts of all q - 1 nonzero residues, enumerated as coefficient
    /// vectors over F_p in lexicographic order.
    fn nonzero_residue_lifts(&self) -> Vec<Elem> {
        let f = self.field.f as usize;
        let p = self.field.p;
        let total = p.pow(f as u32);
        let mut out = Vec::with_capacity(total as usize - 1);
        for code in 1..total {
            let mut rep = self.zero();
            let mut c = code;
            for slot in rep[0].iter_mut().take(f) {
                *slot = c % p;
                c /= p;
            }
            out.push(rep);
        }
        out
    }

    /// 1 + (residue lift) * pi.
    fn one_plus_unit_pi(&self, unit: &Elem) -> Elem {
        self.add(&self.one(), &self.mul(unit, &self.uniformizer()))
    }
}

/// Fixed-seed xorshift for the confirmation samples.
struct XorShift(u64);

impl XorShift {
    fn new(seed: u64) -> Self {
        XorShift(seed | 1)
    }
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

fn pseudorandom_principal_units(ring: &TruncatedLocalRing, count: u64, seed: u64) -> Vec<Elem> {
    let mut rng = XorShift::new(seed ^ (ring.field.p << 32) ^ (ring.field.e << 16) ^ ring.field.f);
    let e = ring.field.e as usize;
    let f = ring.field.f as usize;
    let mut out = Vec::new();
    for _ in 0..count {
        let mut tail = ring.zero();
        for row in tail.iter_mut().take(e) {
            for slot in row.iter_mut().take(f) {
                *slot = rng.next() % ring.p_m;
            }
        }
        // 1 + pi * tail is a unit congruent to 1 mod pi.
        out.push(ring.add(&ring.one(), &ring.mul(&ring.uniformizer(), &tail)));
    }
    out
}

/// Minimum pi-adic valuation of a^n - 1 over a deterministic set of units
/// congruent to 1 mod pi, plus `samples` seeded pseudorandom ones. By the
/// binomial-minimum lemma the minimum over all such units is attained at
/// 1 + (unit) * pi, so the deterministic set decides and sampling confirms.
pub fn oracle_in_valuation(ring: &TruncatedLocalRing, n: u64, samples: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let pi = ring.uniformizer();
    let one = ring.one();
    let mut candidates: Vec<Elem> = Vec::new();
    candidates.push(ring.add(&one, &pi));
    candidates.push(ring.add(&ring.add(&one, &pi), &ring.mul(&pi, &pi)));
    for unit in ring.nonzero_residue_lifts().into_iter().take(8) {
        candidates.push(ring.one_plus_unit_pi(&unit));
    }
    candidates.extend(pseudorandom_principal_units(ring, samples, 0x517e_c0de));
    let mut best: Option<u64> = None;
    for a in candidates {
        let power = ring.pow(&a, n);
        let diff = ring.sub(&power, &one);
        if ring.is_zero(&diff) {
            // A truncation zero (or a genuinely torsion sample) cannot be
            // the minimum decided by the deterministic candidates.
            continue;
        }
        let v = ring.valuation(&diff)?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or(Error::InsufficientPrecision { required_m: ring.precision as u64 + 4 })
}

/// Minimum pi-adic valuation of a^n - 1 over all units: residue lifts detect
/// the unit-ideal case (some a^n - 1 a unit, valuation 0); otherwise
/// products residue * (1 + unit * pi) attain the minimum.
pub fn oracle_hn_valuation(ring: &TruncatedLocalRing, n: u64, samples: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let one = ring.one();
    let pi = ring.uniformizer();
    let residues = ring.nonzero_residue_lifts();
    let mut best: Option<u64> = None;
    // Teichmueller-like pass: plain residue lifts.
    for r in &residues {
        let diff = ring.sub(&ring.pow(r, n), &one);
        if ring.is_zero(&diff) {
            continue; // exact torsion in the truncated model; other samples decide
        }
        let v = ring.valuation(&diff)?;
        if v == 0 {
            return Ok(0);
        }
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    let mut candidates: Vec<Elem> = Vec::new();
    for r in residues.iter().take(8) {
        candidates.push(ring.mul(r, &ring.add(&one, &pi)));
        candidates.push(ring.mul(r, &ring.add(&ring.add(&one, &pi), &ring.mul(&pi, &pi))));
    }
    for unit in residues.iter().take(4) {
        candidates.push(ring.one_plus_unit_pi(unit));
    }
    for principal in pseudorandom_principal_units(ring, samples, 0x2d0a_7e11) {
        for r in residues.iter().take(3) {
            candidates.push(ring.mul(r, &principal));
        }
    }
    for a in candidates {
        let diff = ring.sub(&ring.pow(&a, n), &one);
        if ring.is_zero(&diff) {
            continue;
        }
        let v = ring.valuation(&diff)?;
        if v == 0 {
            return Ok(0);
        }
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or(Error::InsufficientPrecision {
        required_m: ring.precision as u64 + 4,
    })
}

/// Exhaustive minimization of u_{p,n,e} over k in {1..n}.
pub fn oracle_binomial_min(p: u64, n: u64, e: u64) -> Result<UMinResult> {
    const BOUND: u64 = 2000;
    if n == 0 || e == 0 {
        return Err(Error::InvalidArgument("n and e must be >= 1".into()));
    }
    if n > BOUND {
        return Err(Error::ResourceLimit(format!(
            "n = {n} exceeds oracle bound {BOUND}"
        )));
    }
    let mut min_value = u64::MAX;
    let mut argmins = Vec::new();
    for k in 1..=n {
        let v = e * nu_p_binomial(p, n, k)? + k;
        if v < min_value {
            min_value = v;
            argmins = vec![k];
        } else if v == min_value {
            argmins.push(k);
        }
    }
    Ok(UMinResult { min_value, argmins })
}

/// Canonical decomposition of the additive group of R/pi^i, found by
/// enumerating pi-adic digit expansions and counting the multiplication-by-p
/// filtration. Completely independent of the closed-form DVR lemma.
pub fn oracle_additive_structure(ring: &TruncatedLocalRing, i: u64) -> Result<FiniteAbelianGroup> {
    if i == 0 {
        return Ok(FiniteAbelianGroup::trivial());
    }
    let p = ring.field.p;
    let f = ring.field.f;
    let size = (p as u128)
        .checked_pow(
            u32::try_from(f * i).map_err(|_| Error::ResourceLimit("p^(f*i) overflow".into()))?,
        )
        .ok_or_else(|| Error::ResourceLimit("p^(f*i) overflow".into()))?;
    if size > 1_000_000 {
        return Err(Error::ResourceLimit(format!(
            "|R/pi^{i}| = {size} exceeds the enumeration bound"
        )));
    }
    // The kill test only asks whether nu(p^k x) >= i, so precision M just
    // has to keep digit expansions up to pi^(i-1) faithful.
    let k_max = i.div_ceil(ring.field.e) + 1;
    if i + ring.field.e > ring.field.e * ring.precision as u64 {
        return Err(Error::InsufficientPrecision {
            required_m: i.div_ceil(ring.field.e) + 2,
        });
    }

    // Digits are lifts of residue-field elements; every element of R/pi^i
    // is sum_{t < i} digit_t * pi^t for a unique digit vector.
    let mut digit_reps = vec![ring.zero()];
    digit_reps.extend(ring.nonzero_residue_lifts());
    let q = digit_reps.len() as u128; // p^f
    let mut pi_powers = Vec::with_capacity(i as usize);
    let mut acc = ring.one();
    for _ in 0..i {
        pi_powers.push(acc.clone());
        acc = ring.mul(&acc, &ring.uniformizer());
    }

    // counts[k] = #{x in R/pi^i : p^k x = 0}. Multiplication by p is
    // multiplication by pi^e (p = pi^e exactly in this model), so
    // p^k x = 0 in R/pi^i iff nu(x) >= i - e*k; one capped valuation walk
    // per element feeds a histogram that yields every count.
    let mut counts = vec![0u128; (k_max + 1) as usize];
    let total = q.pow(i as u32);
    let mut histogram = vec![0u128; (i + 1) as usize]; // capped nu(x)
    let mut index = vec![0usize; i as usize];
    // digit value d at position t contributes shifted_digits[t][d]
    let shifted_digits: Vec<Vec<Elem>> = pi_powers
        .iter()
        .map(|pi_t| digit_reps.iter().map(|d| ring.mul(d, pi_t)).collect())
        .collect();
    for _ in 0..total {
        let mut x = ring.zero();
        for (t, &d) in index.iter().enumerate() {
            x = ring.add(&x, &shifted_digits[t][d]);
        }
        let mut capped = 0u64;
        while capped < i {
            if ring.is_zero(&x) {
                capped = i;
                break;
            }
            match ring.div_uniformizer(&x) {
                Some(next) => {
                    x = next;
                    capped += 1;
                }
                None => break,
            }
        }
        histogram[capped as usize] += 1;
        // next digit vector
        for slot in index.iter_mut() {
            *slot += 1;
            if *slot < q as usize {
                break;
            }
            *slot = 0;
        }
    }
    for (k, count) in counts.iter_mut().enumerate() {
        let threshold = i.saturating_sub(ring.field.e * k as u64);
        *count = histogram[threshold as usize..].iter().sum();
    }
    assert_eq!(
        counts[k_max as usize], total,
        "p^k_max must annihilate R/pi^i"
    );

    // log_p counts[k] - log_p counts[k-1] = number of cyclic factors of
    // exponent >= k.
    let log_p = |mut v: u128| -> u64 {
        let mut l = 0;
        while v > 1 {
            assert_eq!(v % p as u128, 0, "filtration count not a power of p");
            v /= p as u128;
            l += 1;
        }
        l
    };
    let mut group = FiniteAbelianGroup::trivial();
    let mut prev = log_p(counts[0]);
    let mut at_least: Vec<u64> = Vec::new();
    for &c in &counts[1..] {
        let cur = log_p(c);
        at_least.push(cur - prev);
        prev = cur;
    }
    // at_least[k-1] = #factors with exponent >= k; successive differences
    // give exact-exponent multiplicities.
    for k in 1..=at_least.len() {
        let here = at_least[k - 1];
        let next = if k < at_least.len() { at_least[k] } else { 0 };
        group.add_cyclic(p, k as u64, here - next);
    }
    Ok(group)
}
