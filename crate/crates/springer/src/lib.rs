//! Combinatorics of the ordinary and modular Springer correspondence for
//! classical Weyl groups.
//!
//! The crate models the classical chain
//!
//! ```text
//! character labels  --->  Lusztig symbols  --->  nilpotent orbits
//! (bipartitions)          (two-row arrays)      (partitions)
//! ```
//!
//! for the types B, C and D (with GL_n as a warm-up case), together with the
//! order theory that pins the modular correspondence down: the Dipper-James
//! orders on labels, the d-statistic and its order on symbols, the dominance
//! and closure orders on orbit partitions, and abstract basic-set data for
//! decomposition matrices.
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! single capability end to end. A thin `springer` binary exposes the same
//! functionality as subcommands.

pub mod basic_set;
pub mod bipartition;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod orbit;
pub mod partition;
pub mod symbol;
pub mod verify;

pub use bipartition::{Bipartition, DLabel, Sign, UnorderedBipartition};
pub use error::Error;
pub use orbit::{LieType, OrbitPartition};
pub use partition::Partition;
pub use symbol::{Symbol, SymbolBD, SymbolC};
