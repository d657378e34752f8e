//! Census of Cayley graphs of small finite groups up to isomorphism
//! classes induced by group automorphisms.
//!
//! For a group `G`, the census polynomial counts generating connection sets
//! by degree, modulo the action of either the full automorphism group
//! (weak equivalence) or the inner automorphisms (equivalence). Three
//! independent routes compute it:
//!
//! * [`burnside`]: orbit averaging with fixed-set counts from the subgroup
//!   lattice's Möbius function,
//! * [`closedform`]: explicit formulas for cyclic, dihedral and square-free
//!   families,
//! * [`oracle`]: exhaustive enumeration of every candidate set and its orbit.

pub mod bitset;
pub mod burnside;
pub mod catalog;
pub mod cli;
pub mod closedform;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod numtheory;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use poly::IntPoly;
