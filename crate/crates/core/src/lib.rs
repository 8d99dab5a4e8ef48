//! Exact invariants and periodicity obstruction tests for alternating knots.
//!
//! The pipeline: parse a planar diagram code, build the negative definite
//! Goeritz form of its checkerboard coloring, present the first homology of
//! the double branched cover, compute the full table of correction terms by
//! lattice enumeration, and run the homological and correction-term
//! periodicity tests for a candidate odd prime period.

pub mod alexander;
pub mod cache;
pub mod dtable;
pub mod error;
pub mod factor;
pub mod goeritz;
pub mod group;
pub mod knotlist;
pub mod laurent;
pub mod obstruct;
pub mod pd;
pub mod snf;

pub use error::Error;
