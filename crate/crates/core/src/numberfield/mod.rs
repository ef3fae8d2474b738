//! Global field input, the prime-splitting engine, Galois-consistency
//! validation, and the prime-power-ramification discriminant.
//!
//! A field is described by a JSON document with an optional monic integer
//! polynomial, explicit per-prime splitting records, and a rule for
//! unlisted primes. Splitting authority order: explicit record, then
//! squarefree-mod-p factorization, then the Dedekind criterion, then a
//! typed error asking for explicit data.

pub mod zpoly;

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::primes::is_prime;
use crate::exact::{factor_integer, FactoredInteger, FpPolynomial};
use crate::localfield::integer_case;

/// Splitting data (e, f, g) of a rational prime in a Galois extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSplitting {
    pub p: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

/// How to split primes without an explicit record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnramifiedRule {
    /// Factor the stored polynomial mod p. When the polynomial degree
    /// equals the field degree this is the usual Dedekind reading; when the
    /// field is the splitting field of the polynomial, the residue degree
    /// is the lcm of the factor degrees (the Frobenius order).
    Polynomial,
    /// Only the listed primes are known.
    #[default]
    None,
}

/// On-disk field description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldDocument {
    pub name: String,
    pub polynomial: Option<Vec<i64>>,
    pub degree: u64,
    pub galois: bool,
    #[serde(default)]
    pub splittings: Vec<PrimeSplitting>,
    #[serde(default)]
    pub unramified_rule: UnramifiedRule,
}

/// One (e, f) pair per prime of A over p.
type SplitPattern = Vec<(u64, u64)>;

/// A validated number field ready for splitting queries.
#[derive(Debug, Clone)]
pub struct NumberFieldData {
    pub name: String,
    pub degree: u64,
    pub galois: bool,
    polynomial: Option<Vec<BigInt>>,
    explicit: BTreeMap<u64, PrimeSplitting>,
    rule: UnramifiedRule,
    /// Memoized split patterns; mod-p factorizations are pure, so clones
    /// may share the cache.
    pattern_cache: Arc<RwLock<BTreeMap<u64, SplitPattern>>>,
}

impl NumberFieldData {
    pub fn from_document(doc: &FieldDocument) -> Result<Self> {
        if doc.degree == 0 {
            return Err(Error::Malformed("field degree must be >= 1".into()));
        }
        let polynomial = match &doc.polynomial {
            None => None,
            Some(cs) => {
                let coeffs = zpoly::trim(cs.iter().map(|&c| BigInt::from(c)).collect());
                let Some(d) = zpoly::degree(&coeffs) else {
                    return Err(Error::Malformed("polynomial must be nonzero".into()));
                };
                if !zpoly::is_monic(&coeffs) {
                    return Err(Error::Malformed("polynomial must be monic".into()));
                }
                if (d as u64) > doc.degree {
                    return Err(Error::Malformed(
                        "polynomial degree exceeds field degree".into(),
                    ));
                }
                if (d as u64) == doc.degree {
                    zpoly::certify_irreducible(&coeffs)?;
                } else if zpoly::discriminant(&coeffs) == BigInt::from(0) {
                    return Err(Error::Malformed(
                        "splitting-field polynomial must be squarefree".into(),
                    ));
                }
                Some(coeffs)
            }
        };
        if doc.unramified_rule == UnramifiedRule::Polynomial && polynomial.is_none() {
            return Err(Error::Malformed(
                "unramified_rule \"polynomial\" requires a polynomial".into(),
            ));
        }
        let mut explicit = BTreeMap::new();
        for s in &doc.splittings {
            if !is_prime(s.p) {
                return Err(Error::Malformed(format!(
                    "splitting prime {} is not prime",
                    s.p
                )));
            }
            if s.e == 0 || s.f == 0 || s.g == 0 {
                return Err(Error::Malformed("e, f, g must be >= 1".into()));
            }
            if doc.galois && s.e * s.f * s.g != doc.degree {
                return Err(Error::ConsistencyViolation {
                    p: s.p,
                    detail: format!(
                        "e*f*g = {} but the field degree is {}",
                        s.e * s.f * s.g,
                        doc.degree
                    ),
                });
            }
            if explicit.insert(s.p, *s).is_some() {
                return Err(Error::Malformed(format!(
                    "duplicate splitting entry for p = {}",
                    s.p
                )));
            }
        }
        Ok(NumberFieldData {
            name: doc.name.clone(),
            degree: doc.degree,
            galois: doc.galois,
            polynomial,
            explicit,
            rule: doc.unramified_rule,
            pattern_cache: Arc::new(RwLock::new(BTreeMap::new())),
        })
    }

    pub fn to_document(&self) -> FieldDocument {
        FieldDocument {
            name: self.name.clone(),
            polynomial: self.polynomial.as_ref().map(|cs| {
                cs.iter()
                    .map(|c| i64::try_from(c).expect("document coefficients fit i64"))
                    .collect()
            }),
            degree: self.degree,
            galois: self.galois,
            splittings: self.explicit.values().copied().collect(),
            unramified_rule: self.rule,
        }
    }

    pub fn polynomial(&self) -> Option<&[BigInt]> {
        self.polynomial.as_deref()
    }

    /// |disc| of the stored polynomial, used as the classical-discriminant
    /// proxy for conductor bounds.
    pub fn polynomial_discriminant(&self) -> Option<BigInt> {
        self.polynomial.as_ref().map(|f| zpoly::discriminant(f))
    }

    /// Raw splitting pattern over p: one (e, f) pair per prime of A over p,
    /// without any Galois-shape requirement.
    pub fn split_pattern(&self, p: u64) -> Result<SplitPattern> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if let Some(cached) = self.pattern_cache.read().unwrap().get(&p) {
            return Ok(cached.clone());
        }
        let pattern = self.split_pattern_uncached(p)?;
        self.pattern_cache
            .write()
            .unwrap()
            .insert(p, pattern.clone());
        Ok(pattern)
    }

    fn split_pattern_uncached(&self, p: u64) -> Result<SplitPattern> {
        if let Some(s) = self.explicit.get(&p) {
            return Ok(vec![(s.e, s.f); s.g as usize]);
        }
        let Some(poly) = &self.polynomial else {
            return Err(Error::InconclusiveSplitting { p });
        };
        if self.rule == UnramifiedRule::None {
            return Err(Error::InconclusiveSplitting { p });
        }
        let fbar = zpoly::reduce_mod_p(poly, p);
        let direct = zpoly::degree(poly).unwrap() as u64 == self.degree;
        let factors = fbar.factor().expect("monic reduction of monic polynomial");
        let squarefree = factors.iter().all(|(_, m)| *m == 1);
        if direct {
            if squarefree {
                return Ok(factors
                    .iter()
                    .map(|(g, _)| (1, g.degree().unwrap() as u64))
                    .collect());
            }
            if dedekind_criterion_passes(poly, p, &factors) {
                return Ok(factors
                    .iter()
                    .map(|(g, m)| (*m, g.degree().unwrap() as u64))
                    .collect());
            }
            return Err(Error::InconclusiveSplitting { p });
        }
        // Splitting-field mode: authoritative only for unramified p.
        if !squarefree {
            return Err(Error::InconclusiveSplitting { p });
        }
        let mut f = 1u64;
        for (g, _) in &factors {
            f = num_integer::lcm(f, g.degree().unwrap() as u64);
        }
        if !self.degree.is_multiple_of(f) {
            return Err(Error::ConsistencyViolation {
                p,
                detail: format!(
                    "Frobenius order {f} does not divide the degree {}",
                    self.degree
                ),
            });
        }
        Ok(vec![(1, f); (self.degree / f) as usize])
    }

    /// Galois-shaped splitting of p. Errors if the pattern mixes (e, f)
    /// values, which cannot happen over a Galois field.
    pub fn split_prime(&self, p: u64) -> Result<PrimeSplitting> {
        let pattern = self.split_pattern(p)?;
        let (e, f) = pattern[0];
        if !pattern.iter().all(|&ef| ef == (e, f)) {
            return Err(Error::ConsistencyViolation {
                p,
                detail: format!("mixed splitting pattern {pattern:?} is not Galois-shaped"),
            });
        }
        let g = pattern.len() as u64;
        if self.galois && e * f * g != self.degree {
            return Err(Error::ConsistencyViolation {
                p,
                detail: format!(
                    "e*f*g = {} but the field degree is {}",
                    e * f * g,
                    self.degree
                ),
            });
        }
        Ok(PrimeSplitting { p, e, f, g })
    }

    /// Candidate ramified primes: explicit entries with e > 1 plus the
    /// primes dividing the polynomial discriminant. A candidate is only
    /// confirmed ramified by an authoritative splitting.
    pub fn ramified_candidates(&self) -> Result<Vec<u64>> {
        let mut out: Vec<u64> = self
            .explicit
            .values()
            .filter(|s| s.e > 1)
            .map(|s| s.p)
            .collect();
        if let Some(poly) = &self.polynomial {
            let disc = zpoly::discriminant(poly);
            let factored = factor_integer(disc.magnitude()).map_err(|e| {
                Error::IncompleteRamification(format!(
                    "cannot factor the polynomial discriminant: {e}"
                ))
            })?;
            for p in factored.primes() {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// The ramification degree over p, from an authoritative source.
    pub fn ramification_degree(&self, p: u64) -> Result<u64> {
        let pattern = self.split_pattern(p).map_err(|e| match e {
            Error::InconclusiveSplitting { p } => Error::IncompleteRamification(format!(
                "no authoritative ramification data at p = {p}"
            )),
            other => other,
        })?;
        let e = pattern[0].0;
        if !pattern.iter().all(|&(ei, _)| ei == e) {
            return Err(Error::ConsistencyViolation {
                p,
                detail: "mixed ramification degrees over a single prime".into(),
            });
        }
        Ok(e)
    }

    /// The prime-power-ramification discriminant: the squarefree product of
    /// the primes p with log_p(e_p / (p-1)) an integer. Unramified primes
    /// only qualify at p = 2 (e = 1 = (2-1)*2^0), so the candidates are
    /// {2} union the ramified primes.
    pub fn ppr_discriminant(&self) -> Result<FactoredInteger> {
        let mut candidates = self.ramified_candidates()?;
        if !candidates.contains(&2) {
            candidates.push(2);
        }
        candidates.sort_unstable();
        let mut out = FactoredInteger::one();
        for p in candidates {
            let e = self.ramification_degree(p)?;
            if integer_case(p, e) {
                out.push(p, 1);
            }
        }
        Ok(out)
    }

    /// Sanity check from the divisibility observation: every prime of the
    /// ppr discriminant divides 2 * (polynomial discriminant).
    pub fn classical_discriminant_check(&self) -> Result<bool> {
        let Some(poly) = &self.polynomial else {
            return Err(Error::NotApplicable(
                "no polynomial, hence no classical discriminant proxy".into(),
            ));
        };
        let disc = zpoly::discriminant(poly);
        let twice = (BigInt::from(2) * disc).abs();
        let factored = factor_integer(twice.magnitude())
            .map_err(|e| Error::NotApplicable(format!("cannot factor 2*disc: {e}")))?;
        let ppr = self.ppr_discriminant()?;
        let covered = ppr.primes().all(|p| factored.exponent_of(p) > 0);
        Ok(covered)
    }
}

/// Dedekind's criterion at p: with fbar = prod gbar_i^{e_i}, lift
/// g = prod g_i and h = fbar / g; then p does not divide the index
/// [O_K : Z[theta]] iff gcd((gh - f)/p, g, h) = 1 in F_p[x]. When it
/// passes, the mod-p factorization is authoritative for (e_i, f_i).
fn dedekind_criterion_passes(f: &[BigInt], p: u64, factors: &[(FpPolynomial, u64)]) -> bool {
    let radical = factors
        .iter()
        .fold(FpPolynomial::constant(p, 1), |acc, (g, _)| acc.mul(g));
    let cofactor = factors
        .iter()
        .fold(FpPolynomial::constant(p, 1), |acc, (g, m)| {
            (1..*m).fold(acc, |a, _| a.mul(g))
        });
    // Lift both factors to Z[x] with coefficients in [0, p), multiply there,
    // subtract f, and divide by p exactly.
    let lift = |poly: &FpPolynomial| -> Vec<BigInt> {
        poly.coeffs().iter().map(|&c| BigInt::from(c)).collect()
    };
    let gl = lift(&radical);
    let hl = lift(&cofactor);
    let mut prod = vec![BigInt::from(0); gl.len() + hl.len() - 1];
    for (i, a) in gl.iter().enumerate() {
        for (j, b) in hl.iter().enumerate() {
            prod[i + j] += a * b;
        }
    }
    let mut diff: Vec<BigInt> = Vec::new();
    for i in 0..prod.len().max(f.len()) {
        let a = prod.get(i).cloned().unwrap_or_default();
        let b = f.get(i).cloned().unwrap_or_default();
        diff.push(a - b);
    }
    let p_big = BigInt::from(p);
    let quotient: Vec<BigInt> = diff
        .into_iter()
        .map(|c| {
            debug_assert!((&c % &p_big).is_zero() || c.is_zero());
            c / &p_big
        })
        .collect();
    let fbar_quot = zpoly::reduce_mod_p(&zpoly::trim(quotient), p);
    let gcd = fbar_quot.gcd(&radical).gcd(&cofactor);
    gcd.degree() == Some(0)
}

/// Verdict of a Galois-shape spot check over a set of primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum GaloisVerdict {
    Ok,
    Violation { p: u64 },
}

/// e*f*g = degree at every tested prime, or the first violating prime.
pub fn galois_consistency(field: &NumberFieldData, primes: &[u64]) -> Result<GaloisVerdict> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    for p in sorted {
        let pattern = field.split_pattern(p)?;
        let (e, f) = pattern[0];
        let uniform = pattern.iter().all(|&ef| ef == (e, f));
        if !uniform || e * f * pattern.len() as u64 != field.degree {
            return Ok(GaloisVerdict::Violation { p });
        }
    }
    Ok(GaloisVerdict::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(doc: FieldDocument) -> NumberFieldData {
        NumberFieldData::from_document(&doc).unwrap()
    }

    fn gaussian() -> NumberFieldData {
        field(FieldDocument {
            name: "gaussian".into(),
            polynomial: Some(vec![1, 0, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        })
    }

    #[test]
    fn gaussian_splittings() {
        let k = gaussian();
        assert_eq!(
            k.split_prime(5).unwrap(),
            PrimeSplitting {
                p: 5,
                e: 1,
                f: 1,
                g: 2
            }
        );
        assert_eq!(
            k.split_prime(3).unwrap(),
            PrimeSplitting {
                p: 3,
                e: 1,
                f: 2,
                g: 1
            }
        );
        // 2 is not squarefree mod 2; the Dedekind criterion certifies it.
        assert_eq!(
            k.split_prime(2).unwrap(),
            PrimeSplitting {
                p: 2,
                e: 2,
                f: 1,
                g: 1
            }
        );
    }

    #[test]
    fn ppr_discriminant_examples() {
        let q = field(FieldDocument {
            name: "q".into(),
            polynomial: Some(vec![0, 1]),
            degree: 1,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        assert_eq!(
            q.ppr_discriminant().unwrap(),
            FactoredInteger::prime_power(2, 1)
        );

        // 3 ramifies in Q(zeta_3): ppr = 6
        let omega = field(FieldDocument {
            name: "omega3".into(),
            polynomial: Some(vec![1, 1, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        assert_eq!(
            omega.ppr_discriminant().unwrap(),
            FactoredInteger::from_pairs([(2, 1), (3, 1)]).unwrap()
        );

        // 3 does not ramify in Q(i): ppr = 2
        assert_eq!(
            gaussian().ppr_discriminant().unwrap(),
            FactoredInteger::prime_power(2, 1)
        );
    }

    #[test]
    fn splitting_field_of_quintic() {
        let k = field(FieldDocument {
            name: "x5px2".into(),
            polynomial: Some(vec![2, 1, 0, 0, 0, 1]),
            degree: 24,
            galois: true,
            splittings: vec![
                PrimeSplitting {
                    p: 2,
                    e: 3,
                    f: 2,
                    g: 4,
                },
                PrimeSplitting {
                    p: 3,
                    e: 1,
                    f: 3,
                    g: 8,
                },
                PrimeSplitting {
                    p: 349,
                    e: 2,
                    f: 2,
                    g: 6,
                },
            ],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        // ppr discriminant is 1: 2 is ramified with e = 3 and 349 with e = 2.
        assert!(k.ppr_discriminant().unwrap().is_one());
        // 7: the quintic is squarefree, so the Frobenius-order route applies.
        let s7 = k.split_prime(7).unwrap();
        assert_eq!(s7.e, 1);
        assert_eq!(s7.f * s7.g, 24);
        assert_eq!(
            k.split_prime(349).unwrap(),
            PrimeSplitting {
                p: 349,
                e: 2,
                f: 2,
                g: 6
            }
        );
        assert!(k.classical_discriminant_check().unwrap());
    }

    #[test]
    fn classical_check_examples() {
        assert!(gaussian().classical_discriminant_check().unwrap());
        let golden = field(FieldDocument {
            name: "golden".into(),
            polynomial: Some(vec![-1, -1, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        assert!(golden.classical_discriminant_check().unwrap());
        assert_eq!(
            golden.ppr_discriminant().unwrap(),
            FactoredInteger::prime_power(2, 1)
        );
    }

    #[test]
    fn non_galois_cubic_detected() {
        let cubic = field(FieldDocument {
            name: "cubic".into(),
            polynomial: Some(vec![-1, -1, 0, 1]),
            degree: 3,
            galois: false,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        // 23 has pattern e=2,f=1 and e=1,f=1: mixed
        assert_eq!(
            galois_consistency(&cubic, &[23]).unwrap(),
            GaloisVerdict::Violation { p: 23 }
        );
        // 5: x^3-x-1 factors as linear * quadratic mod 5? Either way the
        // consistency check reports whether e*f*g = 3.
        let verdict = galois_consistency(&cubic, &[2, 3]).unwrap();
        assert_eq!(verdict, GaloisVerdict::Ok);

        // Flagging it Galois makes split_prime error at 23.
        let flagged = field(FieldDocument {
            name: "cubic-flagged".into(),
            polynomial: Some(vec![-1, -1, 0, 1]),
            degree: 3,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        assert!(matches!(
            flagged.split_prime(23),
            Err(Error::ConsistencyViolation { p: 23, .. })
        ));
        assert!(matches!(
            flagged.classical_discriminant_check(),
            Err(Error::ConsistencyViolation { p: 23, .. })
        ));
    }

    #[test]
    fn galois_consistency_quadratic() {
        let k = gaussian();
        assert_eq!(
            galois_consistency(&k, &[2, 3, 5, 13]).unwrap(),
            GaloisVerdict::Ok
        );
    }

    #[test]
    fn explicit_only_field() {
        let k = field(FieldDocument {
            name: "synthetic".into(),
            polynomial: None,
            degree: 2,
            galois: true,
            splittings: vec![
                PrimeSplitting {
                    p: 2,
                    e: 2,
                    f: 1,
                    g: 1,
                },
                PrimeSplitting {
                    p: 5,
                    e: 1,
                    f: 2,
                    g: 1,
                },
            ],
            unramified_rule: UnramifiedRule::None,
        });
        assert_eq!(k.split_prime(5).unwrap().f, 2);
        assert!(matches!(
            k.split_prime(7),
            Err(Error::InconclusiveSplitting { p: 7 })
        ));
        assert!(matches!(
            k.classical_discriminant_check(),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn squarefree_patterns_sum_to_degree_with_e_1() {
        let k = field(FieldDocument {
            name: "x5px2".into(),
            polynomial: Some(vec![2, 1, 0, 0, 0, 1]),
            degree: 24,
            galois: true,
            splittings: vec![
                PrimeSplitting {
                    p: 2,
                    e: 3,
                    f: 2,
                    g: 4,
                },
                PrimeSplitting {
                    p: 3,
                    e: 1,
                    f: 3,
                    g: 8,
                },
                PrimeSplitting {
                    p: 349,
                    e: 2,
                    f: 2,
                    g: 6,
                },
            ],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        for p in crate::exact::primes::primes_up_to(60) {
            if [2, 3].contains(&p) {
                continue; // explicit entries, not the squarefree route
            }
            let pattern = k.split_pattern(p).unwrap();
            assert!(pattern.iter().all(|&(e, _)| e == 1), "p = {p}");
            assert_eq!(pattern.iter().map(|&(_, f)| f).sum::<u64>(), 24, "p = {p}");
        }
        // Direct mode: quadratic field, sum of residue degrees = 2.
        let g = gaussian();
        for p in crate::exact::primes::primes_up_to(60).into_iter().skip(1) {
            let pattern = g.split_pattern(p).unwrap();
            assert_eq!(pattern.iter().map(|&(_, f)| f).sum::<u64>(), 2, "p = {p}");
        }
    }

    #[test]
    fn index_prime_requires_explicit_data() {
        // Z[sqrt(-3)] is not maximal at 2: the Dedekind criterion fails
        // there, so ramification data must be supplied explicitly.
        let bare = field(FieldDocument {
            name: "sqrt-3".into(),
            polynomial: Some(vec![3, 0, 1]),
            degree: 2,
            galois: true,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        });
        assert!(matches!(
            bare.split_prime(2),
            Err(Error::InconclusiveSplitting { p: 2 })
        ));
        assert!(matches!(
            bare.ppr_discriminant(),
            Err(Error::IncompleteRamification(_))
        ));
    }

    #[test]
    fn ppr_is_squarefree_and_supported_on_2_and_ramified() {
        // The last document carries an explicit entry at its index prime 2
        // (2 is inert in Q(sqrt(-3))), exercising the authority order.
        let quadratics: [(Vec<i64>, Vec<PrimeSplitting>); 5] = [
            (vec![1, 0, 1], vec![]),
            (vec![1, 1, 1], vec![]),
            (vec![-2, 0, 1], vec![]),
            (vec![-1, -1, 1], vec![]),
            (
                vec![3, 0, 1],
                vec![PrimeSplitting {
                    p: 2,
                    e: 1,
                    f: 2,
                    g: 1,
                }],
            ),
        ];
        for (coeffs, splittings) in quadratics {
            let k = field(FieldDocument {
                name: format!("quad-{coeffs:?}"),
                polynomial: Some(coeffs),
                degree: 2,
                galois: true,
                splittings,
                unramified_rule: UnramifiedRule::Polynomial,
            });
            let ppr = k.ppr_discriminant().unwrap();
            assert!(ppr.is_squarefree());
            let mut allowed = k.ramified_candidates().unwrap();
            allowed.push(2);
            assert!(ppr.primes().all(|p| allowed.contains(&p)));
            // Every quadratic field has 2 dividing the ppr discriminant:
            // either 2 is unramified (e = 1) or ramified with e = 2, and
            // both satisfy e = (2-1) * 2^k.
            assert_eq!(ppr.exponent_of(2), 1, "{}", k.name);
        }
    }

    #[test]
    fn document_validation() {
        // Non-monic
        assert!(NumberFieldData::from_document(&FieldDocument {
            name: "bad".into(),
            polynomial: Some(vec![1, 0, 2]),
            degree: 2,
            galois: false,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        })
        .is_err());
        // Reducible (rational root)
        assert!(NumberFieldData::from_document(&FieldDocument {
            name: "bad".into(),
            polynomial: Some(vec![-1, 0, 1]),
            degree: 2,
            galois: false,
            splittings: vec![],
            unramified_rule: UnramifiedRule::Polynomial,
        })
        .is_err());
        // Galois-inconsistent explicit entry
        assert!(NumberFieldData::from_document(&FieldDocument {
            name: "bad".into(),
            polynomial: None,
            degree: 4,
            galois: true,
            splittings: vec![PrimeSplitting {
                p: 3,
                e: 1,
                f: 2,
                g: 1
            }],
            unramified_rule: UnramifiedRule::None,
        })
        .is_err());
    }
}
