//! Closed-form local computations for a finite extension of Q_p with
//! ramification degree e and residue degree f: the minimizer of
//! u_{p,n,e}(k) = e*nu_p(C(n,k)) + k, the exponents a(n) and b(n), the
//! valuation of the local ideal H_n, and the abelian-group structure of
//! DVR quotients A/pi^i.
//!
//! The a/b/H_n closed forms are proven only when e/(p-1) is not a power of
//! p; inputs in that excluded "integer case" get a typed error instead of a
//! silently unproven value.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{nu_p_binomial, nu_p_u64, primes::is_prime, FactoredInteger};

/// (p, e, f) for a finite extension of Q_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFieldData {
    pub p: u64,
    pub e: u64,
    pub f: u64,
}

/// Least c >= 0 with e <= (p-1) * p^c, i.e. the ceiling of log_p(e/(p-1))
/// computed by exact integer comparison. (e >= 1 forces the true ceiling to
/// be nonnegative, so starting the scan at 0 is not a clamp.)
pub fn ceil_log_p(p: u64, e: u64) -> u64 {
    let mut c = 0u64;
    let mut bound = p - 1;
    while bound < e {
        bound = bound.checked_mul(p).expect("ceil_log_p overflow");
        c += 1;
    }
    c
}

/// True iff e = (p-1) * p^k for some k >= 0, i.e. log_p(e/(p-1)) is an
/// integer. This is the case excluded by the closed-form local theorems.
pub fn integer_case(p: u64, e: u64) -> bool {
    if !e.is_multiple_of(p - 1) {
        return false;
    }
    let mut q = e / (p - 1);
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

impl LocalFieldData {
    pub fn new(p: u64, e: u64, f: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if e == 0 || f == 0 {
            return Err(Error::InvalidArgument("e and f must be >= 1".into()));
        }
        Ok(LocalFieldData { p, e, f })
    }

    /// Residue field size q = p^f, when it fits in 128 bits.
    pub fn residue_field_size(&self) -> Option<u128> {
        (self.p as u128).checked_pow(u32::try_from(self.f).ok()?)
    }

    pub fn integer_case(&self) -> bool {
        integer_case(self.p, self.e)
    }

    /// The closed forms below are unproven exactly when e/(p-1) is a power
    /// of p AND the minimizing k is not unique, i.e. log_p(e/(p-1)) <
    /// nu_p(n). When the ceiling is >= nu_p(n) the minimal cobar monomial is
    /// unique even in the integer case and the same derivation applies, so
    /// only the two-argmin region is rejected.
    fn require_proven(&self, nu: u64) -> Result<()> {
        if self.integer_case() && ceil_log_p(self.p, self.e) < nu {
            Err(Error::OutsideProvenRange {
                p: self.p,
                e: self.e,
            })
        } else {
            Ok(())
        }
    }
}

/// u_{p,n,e}(k) = e * nu_p(C(n,k)) + k.
pub fn u(p: u64, n: u64, e: u64, k: u64) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={n}")));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("e must be >= 1".into()));
    }
    Ok(e * nu_p_binomial(p, n, k)? + k)
}

/// Minimum of u_{p,n,e} over {1..n} together with the full argmin set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UMinResult {
    pub min_value: u64,
    /// Sorted; has two entries exactly in the integer case with
    /// log_p(e/(p-1)) < nu_p(n), one entry otherwise.
    pub argmins: Vec<u64>,
}

/// Closed form for the minimum of u_{p,n,e} over k in {1..n}.
pub fn u_min(p: u64, n: u64, e: u64) -> Result<UMinResult> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if n == 0 || e == 0 {
        return Err(Error::InvalidArgument("n and e must be >= 1".into()));
    }
    let nu = nu_p_u64(p, n).unwrap_finite();
    let c = ceil_log_p(p, e);
    if integer_case(p, e) {
        // Here c = log_p(e/(p-1)) exactly.
        if c < nu {
            let k1 = e / (p - 1); // = p^c
            let k2 = k1 * p;
            Ok(UMinResult {
                min_value: e * (nu - c) + k1,
                argmins: vec![k1, k2],
            })
        } else {
            let k = p.pow(nu as u32);
            Ok(UMinResult {
                min_value: k,
                argmins: vec![k],
            })
        }
    } else if c <= nu {
        let k = p.pow(c as u32);
        Ok(UMinResult {
            min_value: e * (nu - c) + k,
            argmins: vec![k],
        })
    } else {
        let k = p.pow(nu as u32);
        Ok(UMinResult {
            min_value: k,
            argmins: vec![k],
        })
    }
}

/// The pi-adic valuation a(n) of the ideal I_n generated by a^n - 1 over
/// a = 1 mod pi. Defined (and proven) only outside the integer case.
pub fn a_exponent(field: &LocalFieldData, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let nu = nu_p_u64(field.p, n).unwrap_finite();
    field.require_proven(nu)?;
    let c = ceil_log_p(field.p, field.e);
    if c <= nu {
        Ok(field.e * (nu - c) + field.p.pow(c as u32))
    } else {
        Ok(field.p.pow(nu as u32))
    }
}

/// The exponent b(n) of the leading cobar monomial; always an argmin of
/// u_{p,n,e}.
pub fn b_exponent(field: &LocalFieldData, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let nu = nu_p_u64(field.p, n).unwrap_finite();
    field.require_proven(nu)?;
    let c = ceil_log_p(field.p, field.e);
    if c <= nu {
        Ok(field.p.pow(c as u32))
    } else {
        Ok(field.p.pow(nu as u32))
    }
}

/// pi-adic valuation of H_n, the ideal generated by a^n - 1 over all units:
/// 0 unless (p^f - 1) | n, and a(n / (p^f - 1)) otherwise.
pub fn local_hn_valuation(field: &LocalFieldData, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let Some(q) = field.residue_field_size() else {
        // q - 1 > n for any representable n, so H_n contains a unit.
        return Ok(0);
    };
    let q_minus_1 = q - 1;
    if q_minus_1 > n as u128 || !(n as u128).is_multiple_of(q_minus_1) {
        return Ok(0);
    }
    a_exponent(field, n / (q_minus_1 as u64))
}

/// A finite abelian group in canonical form: a multiset of prime-power
/// cyclic orders p^k, k >= 1. The trivial group is the empty multiset.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiniteAbelianGroup {
    // (p, k) -> multiplicity
    cyclic: BTreeMap<(u64, u64), u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.cyclic.is_empty()
    }

    /// Add `count` copies of the cyclic group Z/p^k (no-op for k = 0).
    pub fn add_cyclic(&mut self, p: u64, k: u64, count: u64) {
        if k > 0 && count > 0 {
            *self.cyclic.entry((p, k)).or_insert(0) += count;
        }
    }

    pub fn from_cyclic_orders<I: IntoIterator<Item = (u64, u64)>>(orders: I) -> Self {
        let mut g = FiniteAbelianGroup::trivial();
        for (p, k) in orders {
            g.add_cyclic(p, k, 1);
        }
        g
    }

    pub fn direct_sum(&self, other: &FiniteAbelianGroup) -> FiniteAbelianGroup {
        let mut out = self.clone();
        for (&(p, k), &count) in &other.cyclic {
            out.add_cyclic(p, k, count);
        }
        out
    }

    /// The g-fold direct sum of self.
    pub fn repeated(&self, g: u64) -> FiniteAbelianGroup {
        let mut out = FiniteAbelianGroup::trivial();
        if g == 0 {
            return out;
        }
        for (&(p, k), &count) in &self.cyclic {
            out.add_cyclic(p, k, count * g);
        }
        out
    }

    pub fn order(&self) -> FactoredInteger {
        let mut f = FactoredInteger::one();
        for (&(p, k), &count) in &self.cyclic {
            f.push(p, k * count);
        }
        f
    }

    /// Cyclic orders as plain integers, sorted descending (the canonical
    /// presentation for display and JSON).
    pub fn cyclic_orders_desc(&self) -> Vec<BigUint> {
        let mut orders: Vec<BigUint> = Vec::new();
        for (&(p, k), &count) in &self.cyclic {
            let value = BigUint::from(p).pow(k as u32);
            for _ in 0..count {
                orders.push(value.clone());
            }
        }
        orders.sort_by(|a, b| b.cmp(a));
        orders
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.cyclic.iter().map(|(&pk, &c)| (pk, c))
    }

    /// Number of distinct cyclic-order values.
    pub fn distinct_order_count(&self) -> usize {
        self.cyclic.len()
    }
}

impl Serialize for FiniteAbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let orders = self.cyclic_orders_desc();
        let mut seq = s.serialize_seq(Some(orders.len()))?;
        for o in orders {
            seq.serialize_element(&o.to_string())?;
        }
        seq.end()
    }
}

/// Abelian-group structure of A/pi^i for the ring of integers A of the
/// local field: with i = q*e + r, 0 <= r < e, this is
/// (Z/p^{q+1})^{f*r} + (Z/p^q)^{f*(e-r)}.
pub fn dvr_quotient_structure(field: &LocalFieldData, i: u64) -> FiniteAbelianGroup {
    let q = i / field.e;
    let r = i % field.e;
    let mut g = FiniteAbelianGroup::trivial();
    g.add_cyclic(field.p, q + 1, field.f * r);
    if q > 0 {
        g.add_cyclic(field.p, q, field.f * (field.e - r));
    }
    g
}

/// Ext^{1,2n} over the local pair, i.e. A/H_n, as an abelian group.
pub fn local_ext1(field: &LocalFieldData, n: u64) -> Result<FiniteAbelianGroup> {
    Ok(dvr_quotient_structure(field, local_hn_valuation(field, n)?))
}

/// Ext^1 indexed by the full internal grading t: trivial in odd degrees,
/// A/H_n at t = 2n.
pub fn local_ext1_at_grading(field: &LocalFieldData, t: u64) -> Result<FiniteAbelianGroup> {
    if t % 2 == 1 {
        return Ok(FiniteAbelianGroup::trivial());
    }
    if t == 0 {
        return Ok(FiniteAbelianGroup::trivial());
    }
    local_ext1(field, t / 2)
}

/// Translate between the two grading conventions: the group in internal
/// degree 2m(q-1) of the unit-congruence indexing is the group A/I_m; it
/// appears at second grading 2n with n = m(q-1) in the H_n indexing.
/// Returns m given 2n, i.e. Some(n / (q-1)) when (q-1) | n.
pub fn unit_index_for_grading(field: &LocalFieldData, two_n: u64) -> Option<u64> {
    if !two_n.is_multiple_of(2) {
        return None;
    }
    let n = two_n / 2;
    let q = field.residue_field_size()?;
    let q_minus_1 = q - 1;
    if q_minus_1 == 0 || !(n as u128).is_multiple_of(q_minus_1) {
        return None;
    }
    u64::try_from((n as u128) / q_minus_1).ok()
}
