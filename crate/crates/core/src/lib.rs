//! Weakly zero-divisor graphs of finite commutative rings.
//!
//! A finite commutative ring is described as a product of local rings
//! ([`ring::LocalRingSpec`]). From that description this crate derives the
//! complete multipartite structure of the graph, its Laplacian and
//! adjacency spectra in closed form, and checks every closed form against
//! an exact brute-force oracle ([`oracle`]).
//!
//! Closed-form routes work on counts only (see [`structure::part_structure`])
//! and therefore scale to rings far too large to enumerate. Element-level
//! routes are bounded by an element cap.

pub mod adjacency;
pub mod arith;
pub mod error;
pub mod graph;
pub mod laplacian;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod structure;

pub use error::{Error, Result};
