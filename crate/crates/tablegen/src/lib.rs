//! Table generation for prime reduced alternating knot diagrams.
//!
//! Pipeline: thread curves through the plane to enumerate shadows with their
//! crossing rotations ([`trace`]), emit crossing lists in the under-strand
//! labeling convention ([`emit`]), group diagrams of the same knot by
//! tangle-slide moves ([`flype`]), and assign table names by canonical
//! pairing-code order ([`naming`]).

pub mod dt;
pub mod emit;
pub mod flype;
pub mod naming;
pub mod trace;
