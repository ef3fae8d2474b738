//! Exact-arithmetic computation of the first cohomology of moduli of formal
//! modules over number rings: closed-form local formulas, minimal
//! n-congruing ideals via the local-global splitting, straightening
//! transforms of Dedekind/Hecke Euler products, and arithmetic-equivalence
//! decisions, with each closed form backed by independent brute-force
//! oracles.

pub mod bernoulli;
pub mod catalog;
pub mod congruing;
pub mod equivalence;
pub mod error;
pub mod exact;
pub mod lfunction;
pub mod localfield;
pub mod numberfield;
pub mod oracles;
pub mod verify;

pub use error::{Error, Result};
