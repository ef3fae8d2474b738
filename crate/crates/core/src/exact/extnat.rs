use std::fmt;

/// A natural number extended by a single point at infinity.
///
/// `Infinity` absorbs addition and is greater than every finite value, so
/// `nu_p(0) = Infinity` behaves correctly under `min` and `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinity,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    /// The finite value, panicking on infinity.
    pub fn unwrap_finite(self) -> u64 {
        match self {
            ExtNat::Finite(v) => v,
            ExtNat::Infinity => panic!("unwrap_finite on ExtNat::Infinity"),
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinity => None,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl std::ops::Add<u64> for ExtNat {
    type Output = ExtNat;
    fn add(self, rhs: u64) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v + rhs),
            ExtNat::Infinity => ExtNat::Infinity,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinity => write!(f, "infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs_and_dominates() {
        assert_eq!(ExtNat::Infinity + 5, ExtNat::Infinity);
        assert_eq!(ExtNat::Finite(3) + 2, ExtNat::Finite(5));
        assert!(ExtNat::Finite(u64::MAX) < ExtNat::Infinity);
        assert_eq!(ExtNat::Infinity.min(ExtNat::Finite(7)), ExtNat::Finite(7));
    }
}
