//! Exact computation of four norms on finite set systems: an exclusion
//! norm, a subset (witness) norm, a graph-coloring/splitting norm and a
//! Hall-type norm on sets of 0/1 functions. Each norm comes with witness
//! extraction, independent brute-force oracles and named verification
//! suites that re-check the underlying identities and bounds at desk
//! scale.

pub mod axioms;
pub mod bridges;
pub mod coloring;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod exclusion;
pub mod hall;
pub mod propcheck;
pub mod sets;
pub mod subset_norm;

pub use error::{Error, Result};
pub use exact::{BigCount, ExactRatio};
