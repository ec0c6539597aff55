//! Finite local rings, their products, and element-level arithmetic.

pub mod fp_poly;
mod local;
mod product;

use num_bigint::BigUint;

pub use local::{is_local, nilpotency_index, LocalRing, LocalRingSpec};
pub use product::{ProductRing, RingElement};

/// Element-enumeration cap for rings used with element-level operations.
pub const DEFAULT_ELEMENT_CAP: u64 = 20_000;

/// Counts of one local factor, all that the closed forms need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSummary {
    pub order: BigUint,
    pub unit_count: BigUint,
    pub is_field: bool,
}

/// Summaries of every factor, validating each spec without enumeration.
pub fn summarize(specs: &[LocalRingSpec]) -> crate::Result<Vec<FactorSummary>> {
    specs.iter().map(LocalRingSpec::summary).collect()
}
