//! Spanning Euler families and tours in hypergraphs.
//!
//! The crate decides whether a hypergraph admits a spanning Euler family
//! (polynomially, through a parity-factor reduction to perfect matching)
//! or a spanning Euler tour (by exact search), produces witnesses that can
//! be checked independently, and reduces both questions across vertex cuts
//! of size one and two.

pub mod cycles;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod oracle;
pub mod reduce;
pub mod solver;
pub mod trail;

pub use hypergraph::{EdgeId, Flag, Hypergraph, Vertex};
pub use solver::{Decision, Mode, NoReason, Verdict};
pub use trail::{ClosedTrail, EulerFamily};
