use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::primes::is_prime;

/// A positive integer stored as a mapping prime -> exponent.
///
/// The empty mapping is 1. This is the universal currency for group orders
/// and transform values, which grow far past machine integers; the value is
/// only ever expanded to a [`BigUint`] on request.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u64>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger::default()
    }

    /// Build from (prime, exponent) pairs, validating primality and merging
    /// repeated primes.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for (p, k) in pairs {
            if !is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            if k == 0 {
                return Err(Error::InvalidArgument("exponent must be >= 1".into()));
            }
            *factors.entry(p).or_insert(0) += k;
        }
        Ok(FactoredInteger { factors })
    }

    /// A single prime power p^k (k >= 1), or 1 when k = 0.
    pub fn prime_power(p: u64, k: u64) -> Self {
        let mut factors = BTreeMap::new();
        if k > 0 {
            factors.insert(p, k);
        }
        FactoredInteger { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u64 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&p, &k)| (p, k))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.values().all(|&k| k == 1)
    }

    /// Multiply in p^k.
    pub fn push(&mut self, p: u64, k: u64) {
        if k > 0 {
            *self.factors.entry(p).or_insert(0) += k;
        }
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut out = self.clone();
        for (p, k) in other.iter() {
            out.push(p, k);
        }
        out
    }

    /// True when every prime of `self` also divides `other`.
    pub fn support_divides(&self, other: &FactoredInteger) -> bool {
        self.primes().all(|p| other.exponent_of(p) > 0)
    }

    pub fn divides(&self, other: &FactoredInteger) -> bool {
        self.iter().all(|(p, k)| other.exponent_of(p) >= k)
    }

    /// Expand to the plain integer value.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &k) in &self.factors {
            acc *= BigUint::from(p).pow(k as u32);
        }
        acc
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, k) in self.iter() {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

// JSON form: an object with decimal-string prime keys in increasing numeric
// order, e.g. {"2": 3, "3": 2, "13": 1}.
impl Serialize for FactoredInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.factors.len()))?;
        for (p, k) in self.iter() {
            map.serialize_entry(&p.to_string(), &k)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for FactoredInteger {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = FactoredInteger;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map of decimal prime strings to exponents")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut pairs = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, u64>()? {
                    let p: u64 = key
                        .parse()
                        .map_err(|_| serde::de::Error::custom(format!("bad prime key {key:?}")))?;
                    pairs.push((p, value));
                }
                FactoredInteger::from_pairs(pairs)
                    .map_err(|e| serde::de::Error::custom(e.to_string()))
            }
        }
        deserializer.deserialize_map(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_mapping_is_one() {
        let f = FactoredInteger::one();
        assert!(f.is_one());
        assert_eq!(f.value(), BigUint::one());
    }

    #[test]
    fn rejects_composite_keys() {
        assert!(FactoredInteger::from_pairs([(4, 1)]).is_err());
        assert!(FactoredInteger::from_pairs([(2, 0)]).is_err());
    }

    #[test]
    fn value_expands() {
        let f = FactoredInteger::from_pairs([(2, 3), (3, 2), (5, 1), (7, 1), (13, 1)]).unwrap();
        assert_eq!(f.value(), BigUint::from(32760u32));
    }

    #[test]
    fn json_round_trip_keeps_numeric_key_order() {
        let f = FactoredInteger::from_pairs([(13, 1), (2, 3), (3, 2)]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"2":3,"3":2,"13":1}"#);
        let back: FactoredInteger = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn divides_and_support() {
        let a = FactoredInteger::from_pairs([(2, 1), (3, 1)]).unwrap();
        let b = FactoredInteger::from_pairs([(2, 3), (3, 2), (5, 1)]).unwrap();
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert!(a.support_divides(&b));
    }
}
