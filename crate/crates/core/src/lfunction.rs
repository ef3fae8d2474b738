//! Euler products of Hecke L-functions of trivial Grossencharakters, the
//! unramified and Galois-Dedekind straightening transforms, and the inverse
//! GD transform.
//!
//! An Euler product is stored as a finite explicit part plus a tail rule;
//! a transform evaluated at n only touches primes p with p^a - 1 <= n,
//! hence p <= n + 1, so evaluation is finite.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::primes::{is_prime, primes_up_to};
use crate::exact::{divisors, nu_p_u64, ExtNat, FactoredInteger};
use crate::numberfield::NumberFieldData;

/// One elementary factor datum: all mult copies of 1/(1 - p^{-as}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerFactor {
    pub a: u64,
    pub mult: u64,
}

/// Rule supplying factors for primes outside the explicit part.
#[derive(Debug, Clone)]
pub enum TailRule {
    /// (a, mult) = (1, 1) at every prime: the Riemann zeta tail.
    Riemann,
    /// Split via the field; primes dividing the conductor are omitted.
    FieldSplit {
        field: Arc<NumberFieldData>,
        conductor: FactoredInteger,
    },
    /// No tail: unlisted primes have no factor.
    None,
}

impl TailRule {
    fn descriptor(&self) -> String {
        match self {
            TailRule::Riemann => "riemann".into(),
            TailRule::FieldSplit { field, .. } => format!("field:{}", field.name),
            TailRule::None => "none".into(),
        }
    }
}

/// An Euler product of elementary factors with at most one exponent a per
/// prime (the Galois axiom holds by construction).
#[derive(Debug, Clone)]
pub struct EulerProduct {
    pub gd_degree: Option<u64>,
    explicit: BTreeMap<u64, EulerFactor>,
    omitted: BTreeSet<u64>,
    tail: TailRule,
    /// Primes exempt from the degree axiom (ramified or dividing the
    /// conductor).
    exceptions: BTreeSet<u64>,
}

/// Interchange document for Euler products.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EulerDocument {
    pub d: Option<u64>,
    pub factors: Vec<EulerFactorEntry>,
    #[serde(default)]
    pub omitted_primes: Vec<u64>,
    pub tail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EulerFactorEntry {
    pub p: u64,
    pub a: u64,
    pub mult: u64,
}

impl EulerProduct {
    /// The Riemann zeta function as an Euler product.
    pub fn riemann_zeta() -> Self {
        EulerProduct {
            gd_degree: Some(1),
            explicit: BTreeMap::new(),
            omitted: BTreeSet::new(),
            tail: TailRule::Riemann,
            exceptions: BTreeSet::new(),
        }
    }

    /// A bare product from explicit factors only (no tail).
    pub fn from_factors<I: IntoIterator<Item = (u64, EulerFactor)>>(
        gd_degree: Option<u64>,
        factors: I,
    ) -> Self {
        EulerProduct {
            gd_degree,
            explicit: factors.into_iter().collect(),
            omitted: BTreeSet::new(),
            tail: TailRule::None,
            exceptions: BTreeSet::new(),
        }
    }

    /// The factor at p: None when p is omitted (conductor) or the tail has
    /// nothing there.
    pub fn factor_at(&self, p: u64) -> Result<Option<EulerFactor>> {
        if self.omitted.contains(&p) {
            return Ok(None);
        }
        if let Some(f) = self.explicit.get(&p) {
            return Ok(Some(*f));
        }
        match &self.tail {
            TailRule::Riemann => Ok(Some(EulerFactor { a: 1, mult: 1 })),
            TailRule::None => Ok(None),
            TailRule::FieldSplit { field, conductor } => {
                if conductor.exponent_of(p) > 0 {
                    return Ok(None);
                }
                let s = field.split_prime(p)?;
                Ok(Some(EulerFactor { a: s.f, mult: s.g }))
            }
        }
    }

    pub fn tail_descriptor(&self) -> String {
        self.tail.descriptor()
    }

    pub fn exceptions(&self) -> &BTreeSet<u64> {
        &self.exceptions
    }

    pub fn explicit_factors(&self) -> impl Iterator<Item = (u64, EulerFactor)> + '_ {
        self.explicit.iter().map(|(&p, &f)| (p, f))
    }

    /// Serialize to the interchange document.
    pub fn to_document(&self) -> EulerDocument {
        EulerDocument {
            d: self.gd_degree,
            factors: self
                .explicit
                .iter()
                .map(|(&p, f)| EulerFactorEntry {
                    p,
                    a: f.a,
                    mult: f.mult,
                })
                .collect(),
            omitted_primes: self.omitted.iter().copied().collect(),
            tail: self.tail.descriptor(),
        }
    }

    /// Load from a document; `resolve_field` maps a field name to its data
    /// for `field:<name>` tails.
    pub fn from_document(
        doc: &EulerDocument,
        resolve_field: impl Fn(&str) -> Result<Arc<NumberFieldData>>,
    ) -> Result<Self> {
        let mut explicit = BTreeMap::new();
        for e in &doc.factors {
            if e.a == 0 || e.mult == 0 {
                return Err(Error::Malformed("factor entries need a, mult >= 1".into()));
            }
            if explicit
                .insert(
                    e.p,
                    EulerFactor {
                        a: e.a,
                        mult: e.mult,
                    },
                )
                .is_some()
            {
                return Err(Error::Malformed(format!(
                    "duplicate factor for p = {}",
                    e.p
                )));
            }
        }
        let omitted: BTreeSet<u64> = doc.omitted_primes.iter().copied().collect();
        let tail = if doc.tail == "riemann" {
            TailRule::Riemann
        } else if doc.tail == "none" {
            TailRule::None
        } else if let Some(name) = doc.tail.strip_prefix("field:") {
            let field = resolve_field(name)?;
            let conductor = FactoredInteger::from_pairs(omitted.iter().map(|&p| (p, 1)))?;
            TailRule::FieldSplit { field, conductor }
        } else {
            return Err(Error::Malformed(format!(
                "unknown tail rule {:?}",
                doc.tail
            )));
        };
        let mut exceptions = omitted.clone();
        if let TailRule::FieldSplit { field, .. } = &tail {
            exceptions.extend(field.ramified_candidates()?);
        }
        Ok(EulerProduct {
            gd_degree: doc.d,
            explicit,
            omitted,
            tail,
            exceptions,
        })
    }
}

/// The Hecke L-function of the trivial Grossencharakter of the given
/// conductor: factor (a = f_p, mult = g_p) at each p not dividing the
/// conductor, no factor at p | conductor, of Galois-Dedekind `[K:Q]`-type.
pub fn hecke_euler(
    field: &Arc<NumberFieldData>,
    conductor: &FactoredInteger,
) -> Result<EulerProduct> {
    if !field.galois {
        return Err(Error::Precondition(format!(
            "field {} is not marked Galois, so its Euler product need not be of Galois-Dedekind type",
            field.name
        )));
    }
    let mut explicit = BTreeMap::new();
    let mut exceptions: BTreeSet<u64> = conductor.primes().collect();
    for p in field.ramified_candidates()? {
        exceptions.insert(p);
        if conductor.exponent_of(p) == 0 {
            let s = field.split_prime(p)?;
            explicit.insert(p, EulerFactor { a: s.f, mult: s.g });
        }
    }
    Ok(EulerProduct {
        gd_degree: Some(field.degree),
        explicit,
        omitted: conductor.primes().collect(),
        tail: TailRule::FieldSplit {
            field: Arc::clone(field),
            conductor: conductor.clone(),
        },
        exceptions,
    })
}

/// Primes that can contribute to a transform at argument n: p^a - 1 | n
/// with a >= 1 forces (p - 1) | n, so the candidates are d + 1 for the
/// divisors d of n. (Evaluation stays cheap even at huge n this way.)
fn contributing_prime_candidates(n: u64) -> Result<Vec<u64>> {
    Ok(divisors(n)?
        .into_iter()
        .filter_map(|d| d.checked_add(1))
        .filter(|&q| is_prime(q))
        .collect())
}

/// The unramified straightening transform: the factor (p, a) contributes
/// p^{(1 + nu_p(n)) a} per copy when p^a - 1 | n, and 1 otherwise.
pub fn s_transform(product: &EulerProduct, n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "transform argument must be >= 1".into(),
        ));
    }
    let mut out = FactoredInteger::one();
    for p in contributing_prime_candidates(n)? {
        let Some(factor) = product.factor_at(p)? else {
            continue;
        };
        if !divides_pa_minus_1(p, factor.a, n) {
            continue;
        }
        let nu = nu_p_u64(p, n).unwrap_finite();
        out.push(p, (1 + nu) * factor.a * factor.mult);
    }
    Ok(out)
}

fn divides_pa_minus_1(p: u64, a: u64, n: u64) -> bool {
    let Ok(exp) = u32::try_from(a) else {
        return false;
    };
    let Some(pa) = (p as u128).checked_pow(exp) else {
        return false;
    };
    pa - 1 <= n as u128 && (n as u128).is_multiple_of(pa - 1)
}

/// Least c >= 0 with d <= a * g * (p-1) * p^c, the exact-integer ceiling of
/// log_p(d / (a g (p-1))).
fn gd_ceiling(p: u64, d: u64, a: u64, g: u64) -> u64 {
    let mut c = 0u64;
    let mut bound = (a as u128) * (g as u128) * ((p - 1) as u128);
    while bound < d as u128 {
        bound *= p as u128;
        c += 1;
    }
    c
}

/// Validate the Galois-Dedekind degree axiom: every prime up to the bound
/// outside the exception set must carry a factor with a * mult = d.
fn validate_gd(product: &EulerProduct, bound: u64) -> Result<u64> {
    let Some(d) = product.gd_degree else {
        return Err(Error::NotGdType("no Galois-Dedekind degree is set".into()));
    };
    for p in primes_up_to(bound) {
        if product.exceptions().contains(&p) {
            continue;
        }
        match product.factor_at(p)? {
            None => {
                return Err(Error::NotGdType(format!(
                    "no Euler factor at p = {p}, which is outside the exception set"
                )))
            }
            Some(f) => {
                if f.a * f.mult != d {
                    return Err(Error::NotGdType(format!(
                        "degree axiom fails at p = {p}: a * mult = {} but d = {d}",
                        f.a * f.mult
                    )));
                }
            }
        }
    }
    Ok(d)
}

/// Default prime bound for the (necessarily finite) degree-axiom check.
pub const GD_VALIDATION_BOUND: u64 = 200;

/// The Galois-Dedekind straightening transform. Per contributing factor
/// (p^a - 1 | n), the value is
///   p^{(d/g)(nu_p(n) - c) + a p^c}  when c <= nu_p(n), and
///   p^{a p^{nu_p(n)}}               otherwise,
/// with c the exact ceiling of log_p(d/(a g (p-1))); the g copies multiply.
pub fn gd_transform(product: &EulerProduct, n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "transform argument must be >= 1".into(),
        ));
    }
    let d = validate_gd(product, GD_VALIDATION_BOUND)?;
    let mut out = FactoredInteger::one();
    for p in contributing_prime_candidates(n)? {
        let Some(factor) = product.factor_at(p)? else {
            continue;
        };
        if !divides_pa_minus_1(p, factor.a, n) {
            continue;
        }
        if d % factor.mult != 0 {
            return Err(Error::NotGdType(format!(
                "multiplicity {} at p = {p} does not divide d = {d}",
                factor.mult
            )));
        }
        let nu = nu_p_u64(p, n).unwrap_finite();
        let c = gd_ceiling(p, d, factor.a, factor.mult);
        let per_copy = if c <= nu {
            (d / factor.mult) * (nu - c) + factor.a * p.pow(c as u32)
        } else {
            factor.a * p.pow(nu as u32)
        };
        out.push(p, per_copy * factor.mult);
    }
    Ok(out)
}

/// An integer-valued function suitable for the inverse GD transform: either
/// a transform of a known Euler product, or a finite table of values.
#[derive(Debug, Clone)]
pub enum DedekindTypeFunction {
    GdTransformOf {
        product: EulerProduct,
        search_bound: u64,
    },
    STransformOf {
        product: EulerProduct,
        search_bound: u64,
    },
    Table {
        values: BTreeMap<u64, FactoredInteger>,
        search_bound: u64,
    },
}

impl DedekindTypeFunction {
    pub fn eval(&self, n: u64) -> Result<FactoredInteger> {
        match self {
            DedekindTypeFunction::GdTransformOf { product, .. } => gd_transform(product, n),
            DedekindTypeFunction::STransformOf { product, .. } => s_transform(product, n),
            DedekindTypeFunction::Table { values, .. } => values
                .get(&n)
                .cloned()
                .ok_or_else(|| Error::InvalidArgument(format!("no tabulated value at n = {n}"))),
        }
    }

    pub fn search_bound(&self) -> u64 {
        match self {
            DedekindTypeFunction::GdTransformOf { search_bound, .. }
            | DedekindTypeFunction::STransformOf { search_bound, .. }
            | DedekindTypeFunction::Table { search_bound, .. } => *search_bound,
        }
    }

    fn underlying_product(&self) -> Option<&EulerProduct> {
        match self {
            DedekindTypeFunction::GdTransformOf { product, .. }
            | DedekindTypeFunction::STransformOf { product, .. } => Some(product),
            DedekindTypeFunction::Table { .. } => None,
        }
    }
}

/// Xi_p(h): the least positive n with nu_p(h(n)) > 0. For transform-derived
/// h this is exactly p^{a_p} - 1 (no search); for tabulated h the search is
/// bounded and Infinity means "none found within the bound", not proven
/// absence.
pub fn xi_p(h: &DedekindTypeFunction, p: u64, search_bound: u64) -> Result<ExtNat> {
    if search_bound == 0 {
        return Err(Error::InvalidArgument("search bound must be >= 1".into()));
    }
    if let Some(product) = h.underlying_product() {
        return Ok(match product.factor_at(p)? {
            None => ExtNat::Infinity,
            Some(f) => {
                let pa = (p as u128).pow(
                    u32::try_from(f.a)
                        .map_err(|_| Error::InvalidArgument("factor exponent too large".into()))?,
                );
                ExtNat::Finite(u64::try_from(pa - 1).map_err(|_| {
                    Error::ResourceLimit("p^a - 1 exceeds the machine range".into())
                })?)
            }
        });
    }
    for n in 1..=search_bound {
        if h.eval(n)?.exponent_of(p) > 0 {
            return Ok(ExtNat::Finite(n));
        }
    }
    Ok(ExtNat::Infinity)
}

/// The inverse Galois-Dedekind straightening transform, evaluated on a set
/// of primes: per prime, f_p = log_p(1 + Xi_p) and g_p = nu_p(h(Xi_p))/f_p,
/// with typed errors naming the prime and the violated Dedekind-type clause.
pub fn gd_inverse(h: &DedekindTypeFunction, primes: &[u64]) -> Result<EulerProduct> {
    let mut factors = BTreeMap::new();
    let bound = h.search_bound();
    for &p in primes {
        match xi_p(h, p, bound)? {
            ExtNat::Infinity => continue,
            ExtNat::Finite(xi) => {
                let f = exact_p_log(p, xi + 1).ok_or(Error::DedekindTypeViolation {
                    p,
                    clause: format!("1 + Xi_p = {} is not a power of {p}", xi + 1),
                })?;
                let v = h.eval(xi)?.exponent_of(p);
                debug_assert!(v > 0);
                if v % f != 0 {
                    return Err(Error::DedekindTypeViolation {
                        p,
                        clause: format!(
                            "log_p(1 + Xi_p) = {f} does not divide nu_p(h(Xi_p)) = {v}"
                        ),
                    });
                }
                factors.insert(p, EulerFactor { a: f, mult: v / f });
            }
        }
    }
    Ok(EulerProduct::from_factors(None, factors))
}

/// Some(k) iff x = p^k with k >= 1.
fn exact_p_log(p: u64, x: u64) -> Option<u64> {
    let mut k = 0;
    let mut rest = x;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && k >= 1).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{FieldDocument, UnramifiedRule};

    fn fi(pairs: &[(u64, u64)]) -> FactoredInteger {
        FactoredInteger::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn gaussian() -> Arc<NumberFieldData> {
        Arc::new(
            NumberFieldData::from_document(&FieldDocument {
                name: "gaussian".into(),
                polynomial: Some(vec![1, 0, 1]),
                degree: 2,
                galois: true,
                splittings: vec![],
                unramified_rule: UnramifiedRule::Polynomial,
            })
            .unwrap(),
        )
    }

    fn rationals() -> Arc<NumberFieldData> {
        Arc::new(
            NumberFieldData::from_document(&FieldDocument {
                name: "q".into(),
                polynomial: Some(vec![0, 1]),
                degree: 1,
                galois: true,
                splittings: vec![],
                unramified_rule: UnramifiedRule::Polynomial,
            })
            .unwrap(),
        )
    }

    #[test]
    fn hecke_euler_examples() {
        let zeta = hecke_euler(&rationals(), &FactoredInteger::one()).unwrap();
        assert_eq!(zeta.gd_degree, Some(1));
        for p in [2u64, 3, 97] {
            assert_eq!(
                zeta.factor_at(p).unwrap(),
                Some(EulerFactor { a: 1, mult: 1 })
            );
        }

        let gauss2 = hecke_euler(&gaussian(), &fi(&[(2, 1)])).unwrap();
        assert_eq!(gauss2.factor_at(2).unwrap(), None);
        assert_eq!(
            gauss2.factor_at(5).unwrap(),
            Some(EulerFactor { a: 1, mult: 2 })
        );
        assert_eq!(
            gauss2.factor_at(3).unwrap(),
            Some(EulerFactor { a: 2, mult: 1 })
        );

        let zeta_cond2 = hecke_euler(&rationals(), &fi(&[(2, 1)])).unwrap();
        assert_eq!(zeta_cond2.factor_at(2).unwrap(), None);
        assert_eq!(
            zeta_cond2.factor_at(7).unwrap(),
            Some(EulerFactor { a: 1, mult: 1 })
        );
    }

    #[test]
    fn s_transform_examples() {
        let zeta = EulerProduct::riemann_zeta();
        assert_eq!(s_transform(&zeta, 2).unwrap(), fi(&[(2, 2), (3, 1)]));
        for odd in [1u64, 3, 5, 7, 9, 99] {
            assert_eq!(s_transform(&zeta, odd).unwrap(), fi(&[(2, 1)]));
        }
        let single = EulerProduct::from_factors(None, [(3, EulerFactor { a: 2, mult: 1 })]);
        assert!(s_transform(&single, 5).unwrap().is_one());
        assert_eq!(s_transform(&single, 8).unwrap(), fi(&[(3, 2)]));
    }

    #[test]
    fn s_transform_valuation_formula() {
        // nu_p(S(zeta)(n)) = 1 + nu_p(n) when (p-1) | n, else 0.
        let zeta = EulerProduct::riemann_zeta();
        for n in 1..=80u64 {
            let s = s_transform(&zeta, n).unwrap();
            for p in primes_up_to(n + 1) {
                let expected = if n % (p - 1) == 0 {
                    1 + nu_p_u64(p, n).unwrap_finite()
                } else {
                    0
                };
                assert_eq!(s.exponent_of(p), expected, "p={p}, n={n}");
            }
        }
    }

    #[test]
    fn gd_equals_s_on_zeta() {
        let zeta = EulerProduct::riemann_zeta();
        for n in 1..=100u64 {
            assert_eq!(
                gd_transform(&zeta, n).unwrap(),
                s_transform(&zeta, n).unwrap()
            );
        }
    }

    #[test]
    fn gd_transform_gaussian_examples() {
        let gauss2 = hecke_euler(&gaussian(), &fi(&[(2, 1)])).unwrap();
        assert_eq!(gd_transform(&gauss2, 8).unwrap(), fi(&[(3, 2), (5, 2)]));
        assert!(gd_transform(&gauss2, 1).unwrap().is_one());
    }

    #[test]
    fn s_transform_multiplicative_over_disjoint_factors() {
        let e1 = EulerProduct::from_factors(None, [(3, EulerFactor { a: 1, mult: 2 })]);
        let e2 = EulerProduct::from_factors(None, [(5, EulerFactor { a: 1, mult: 1 })]);
        let combined = EulerProduct::from_factors(
            None,
            [
                (3, EulerFactor { a: 1, mult: 2 }),
                (5, EulerFactor { a: 1, mult: 1 }),
            ],
        );
        for n in 1..=60u64 {
            assert_eq!(
                s_transform(&combined, n).unwrap(),
                s_transform(&e1, n)
                    .unwrap()
                    .mul(&s_transform(&e2, n).unwrap())
            );
        }
    }

    #[test]
    fn xi_p_examples() {
        let zeta_gd = DedekindTypeFunction::GdTransformOf {
            product: EulerProduct::riemann_zeta(),
            search_bound: 100,
        };
        assert_eq!(xi_p(&zeta_gd, 2, 100).unwrap(), ExtNat::Finite(1));

        let gauss_gd = DedekindTypeFunction::GdTransformOf {
            product: hecke_euler(&gaussian(), &fi(&[(2, 1)])).unwrap(),
            search_bound: 100,
        };
        assert_eq!(xi_p(&gauss_gd, 3, 100).unwrap(), ExtNat::Finite(8));
        assert_eq!(xi_p(&gauss_gd, 5, 100).unwrap(), ExtNat::Finite(4));
        assert_eq!(xi_p(&gauss_gd, 2, 100).unwrap(), ExtNat::Infinity);
    }

    #[test]
    fn xi_p_by_table_search() {
        // Tabulate S_GD of the Gaussian product and search.
        let product = hecke_euler(&gaussian(), &fi(&[(2, 1)])).unwrap();
        let values: BTreeMap<u64, FactoredInteger> = (1..=50)
            .map(|n| (n, gd_transform(&product, n).unwrap()))
            .collect();
        let table = DedekindTypeFunction::Table {
            values,
            search_bound: 50,
        };
        assert_eq!(xi_p(&table, 3, 50).unwrap(), ExtNat::Finite(8));
        assert_eq!(xi_p(&table, 5, 50).unwrap(), ExtNat::Finite(4));
        assert_eq!(xi_p(&table, 7, 50).unwrap(), ExtNat::Finite(48));
        // 11: Xi = 11^1 - 1 = 10? No: 11 splits in Q(i) (11 = 3 mod 4 is
        // inert, f = 2), so Xi = 120 > bound.
        assert_eq!(xi_p(&table, 11, 50).unwrap(), ExtNat::Infinity);
    }

    #[test]
    fn gd_inverse_round_trip_on_zeta() {
        let h = DedekindTypeFunction::GdTransformOf {
            product: EulerProduct::riemann_zeta(),
            search_bound: 200,
        };
        let inv = gd_inverse(&h, &[2, 3, 5]).unwrap();
        for p in [2u64, 3, 5] {
            assert_eq!(
                inv.factor_at(p).unwrap(),
                Some(EulerFactor { a: 1, mult: 1 })
            );
        }
    }

    #[test]
    fn gd_inverse_round_trip_on_gaussian() {
        let product = hecke_euler(&gaussian(), &fi(&[(2, 1)])).unwrap();
        let h = DedekindTypeFunction::GdTransformOf {
            product: product.clone(),
            search_bound: 200,
        };
        let inv = gd_inverse(&h, &[3, 5]).unwrap();
        assert_eq!(
            inv.factor_at(3).unwrap(),
            Some(EulerFactor { a: 2, mult: 1 })
        );
        assert_eq!(
            inv.factor_at(5).unwrap(),
            Some(EulerFactor { a: 1, mult: 2 })
        );
    }

    #[test]
    fn gd_inverse_rejects_non_dedekind_tables() {
        // First 3-divisible value at n = 3: 1 + 3 = 4 is not a 3-power.
        let mut values = BTreeMap::new();
        for n in 1..=10 {
            values.insert(
                n,
                if n == 3 {
                    fi(&[(3, 1)])
                } else {
                    FactoredInteger::one()
                },
            );
        }
        let h = DedekindTypeFunction::Table {
            values,
            search_bound: 10,
        };
        match gd_inverse(&h, &[3]) {
            Err(Error::DedekindTypeViolation { p: 3, clause }) => {
                assert!(clause.contains("not a power"));
            }
            other => panic!("expected DedekindTypeViolation, got {other:?}"),
        }
    }

    #[test]
    fn gd_requires_degree() {
        let product = EulerProduct::from_factors(None, [(3, EulerFactor { a: 2, mult: 1 })]);
        assert!(matches!(
            gd_transform(&product, 8),
            Err(Error::NotGdType(_))
        ));
    }

    #[test]
    fn document_round_trip() {
        let product = hecke_euler(&gaussian(), &fi(&[(2, 1)])).unwrap();
        let doc = product.to_document();
        assert_eq!(doc.tail, "field:gaussian");
        assert_eq!(doc.omitted_primes, vec![2]);
        let back = EulerProduct::from_document(&doc, |name| {
            assert_eq!(name, "gaussian");
            Ok(gaussian())
        })
        .unwrap();
        for p in [2u64, 3, 5, 13] {
            assert_eq!(back.factor_at(p).unwrap(), product.factor_at(p).unwrap());
        }
    }
}
