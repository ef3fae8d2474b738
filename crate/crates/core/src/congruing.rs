//! Minimal n-congruing ideals and global Ext^1 via the local-global
//! splitting: the answer over a Galois field with invert >= the
//! prime-power-ramification discriminant is the direct sum, over rational
//! primes p with (p^f - 1) | n and p not inverted, of g_p copies of the
//! local quotient at any prime over p.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::primes::primes_up_to;
use crate::exact::FactoredInteger;
use crate::localfield::{
    dvr_quotient_structure, local_hn_valuation, FiniteAbelianGroup, LocalFieldData,
};
use crate::numberfield::NumberFieldData;
use crate::oracles::{oracle_hn_valuation, TruncatedLocalRing};

/// What to do at a contributing prime whose local closed form is outside
/// the proven range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntegerCasePolicy {
    /// Raise the typed outside-proven-range error (the default: such
    /// primes must be inverted instead).
    #[default]
    Error,
    /// Fall back to the truncated-ring oracle; the result is labeled, not
    /// asserted by the closed-form theorems.
    Oracle,
}

/// How a per-prime local value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalSource {
    ClosedForm,
    Oracle,
}

/// One rational prime's contribution to A/J_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContributingPrime {
    pub p: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
    /// pi-adic valuation of the local ideal H_n.
    pub valuation: u64,
    /// Structure of one local summand; the prime contributes g copies.
    pub local_group: FiniteAbelianGroup,
    pub source: LocalSource,
}

/// Order and structure of A[invert^-1]/J_n, with the per-prime breakdown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruingAnswer {
    pub order: FactoredInteger,
    pub group: FiniteAbelianGroup,
    pub contributing: Vec<ContributingPrime>,
    /// Primes that would contribute but divide the inverted set.
    pub excluded: Vec<u64>,
}

impl CongruingAnswer {
    pub fn trivial() -> Self {
        CongruingAnswer {
            order: FactoredInteger::one(),
            group: FiniteAbelianGroup::trivial(),
            contributing: Vec::new(),
            excluded: Vec::new(),
        }
    }
}

/// Local H_n valuation at a prime over p, honoring the integer-case policy.
fn hn_valuation_with_policy(
    local: &LocalFieldData,
    n: u64,
    policy: IntegerCasePolicy,
) -> Result<(u64, LocalSource)> {
    match local_hn_valuation(local, n) {
        Ok(v) => Ok((v, LocalSource::ClosedForm)),
        Err(Error::OutsideProvenRange { .. }) if policy == IntegerCasePolicy::Oracle => {
            let v = oracle_hn_for_local(local, n)?;
            Ok((v, LocalSource::Oracle))
        }
        Err(e) => Err(e),
    }
}

/// Oracle evaluation with automatic precision selection.
fn oracle_hn_for_local(local: &LocalFieldData, n: u64) -> Result<u64> {
    let mut precision: u32 = 8;
    loop {
        let ring = TruncatedLocalRing::new(*local, precision)?;
        match oracle_hn_valuation(&ring, n, 8) {
            Ok(v) => return Ok(v),
            Err(Error::InsufficientPrecision { required_m }) => {
                let next = (required_m as u32).max(precision + 4);
                if next > 48 {
                    return Err(Error::InsufficientPrecision { required_m });
                }
                precision = next;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Primes that can possibly contribute to A/J_n: p^f - 1 <= n forces
/// p <= n + 1.
fn candidate_primes(n: u64) -> Vec<u64> {
    primes_up_to(n + 1)
}

/// The minimal n-congruing quotient A[invert^-1]/J_n: order, abelian-group
/// structure, and the per-prime local breakdown.
pub fn minimal_congruing(
    field: &NumberFieldData,
    n: u64,
    invert: &FactoredInteger,
    policy: IntegerCasePolicy,
) -> Result<CongruingAnswer> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if !field.galois {
        return Err(Error::Precondition(format!(
            "field {} is not marked Galois; the Hasse-principle computation requires it",
            field.name
        )));
    }
    let mut answer = CongruingAnswer::trivial();
    for p in candidate_primes(n) {
        let split = field.split_prime(p)?;
        let local = LocalFieldData::new(p, split.e, split.f)?;
        let Some(q) = local.residue_field_size() else {
            continue;
        };
        if (q - 1) > n as u128 || !(n as u128).is_multiple_of(q - 1) {
            continue;
        }
        if invert.exponent_of(p) > 0 {
            answer.excluded.push(p);
            continue;
        }
        let (valuation, source) = hn_valuation_with_policy(&local, n, policy)?;
        if valuation == 0 {
            continue;
        }
        let local_group = dvr_quotient_structure(&local, valuation);
        answer.group = answer.group.direct_sum(&local_group.repeated(split.g));
        answer.order.push(p, split.f * valuation * split.g);
        answer.contributing.push(ContributingPrime {
            p,
            e: split.e,
            f: split.f,
            g: split.g,
            valuation,
            local_group,
            source,
        });
    }
    debug_assert_eq!(answer.order, answer.group.order());
    Ok(answer)
}

/// Valuation data for an ideal of A: (p, index among the g primes over p)
/// -> valuation, with absent primes implicitly 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdealValuationData {
    entries: Vec<((u64, u64), u64)>,
}

impl IdealValuationData {
    pub fn unit_ideal() -> Self {
        IdealValuationData::default()
    }

    pub fn from_entries<I: IntoIterator<Item = ((u64, u64), u64)>>(entries: I) -> Self {
        let mut v: Vec<((u64, u64), u64)> =
            entries.into_iter().filter(|&(_, val)| val > 0).collect();
        v.sort_unstable();
        v.dedup();
        IdealValuationData { entries: v }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.entries.iter().copied()
    }
}

/// Hasse-principle membership test: I is n-congruing iff at every prime not
/// dividing invert, nu_p(I) <= nu_p(H_n) (the minimal ideal's valuation).
pub fn is_n_congruing(
    field: &NumberFieldData,
    ideal: &IdealValuationData,
    n: u64,
    invert: &FactoredInteger,
    policy: IntegerCasePolicy,
) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if !field.galois {
        return Err(Error::Precondition(format!(
            "field {} is not marked Galois",
            field.name
        )));
    }
    for ((p, index), valuation) in ideal.iter() {
        if invert.exponent_of(p) > 0 {
            continue;
        }
        let split = field.split_prime(p)?;
        if index >= split.g {
            return Err(Error::InvalidArgument(format!(
                "prime index {index} out of range: only {} primes over {p}",
                split.g
            )));
        }
        let local = LocalFieldData::new(p, split.e, split.f)?;
        let (bound, _) = hn_valuation_with_policy(&local, n, policy)?;
        if valuation > bound {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ext^{1,2n} of the global pair after inverting `invert`, which must be
/// divisible by the prime-power-ramification discriminant. Trivial for
/// n <= 0.
pub fn global_ext1(
    field: &NumberFieldData,
    n: i64,
    invert: &FactoredInteger,
) -> Result<CongruingAnswer> {
    let ppr = field.ppr_discriminant()?;
    if !ppr.support_divides(invert) {
        return Err(Error::Precondition(format!(
            "invert = {invert} is not divisible by the prime-power-ramification discriminant {ppr}"
        )));
    }
    if n <= 0 {
        return Ok(CongruingAnswer::trivial());
    }
    minimal_congruing(field, n as u64, invert, IntegerCasePolicy::Error)
}

/// Ext^1 indexed by full internal degree: trivial in odd degrees.
pub fn global_ext1_at_grading(
    field: &NumberFieldData,
    t: i64,
    invert: &FactoredInteger,
) -> Result<CongruingAnswer> {
    if t % 2 != 0 {
        return Ok(CongruingAnswer::trivial());
    }
    global_ext1(field, t / 2, invert)
}
