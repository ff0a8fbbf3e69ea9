//! Ground truth for differential testing: exhaustive decisions, witness
//! verification and seeded instance generation.

pub mod brute;
pub mod generate;
pub mod verify;

pub use brute::{brute_force_decide, OracleError, FLAG_BUDGET};
pub use generate::{random_hypergraph, GenError, GeneratorParams, Structure};
pub use verify::{verify_witness, Violation};
