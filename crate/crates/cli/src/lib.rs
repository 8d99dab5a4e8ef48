//! Command-line sieve for knot periodicity obstructions: invariant
//! inspection, correction-term tables, single-knot checks, and batch sweeps
//! over knot-list files.

pub mod compute;
pub mod render;
pub mod sieve;
