//! Finite-model workbench for Stone-type conditions on bounded lattices,
//! commutator lattices, and finite commutative rings.
//!
//! The crate builds the basic objects (annihilators, Boolean centers,
//! radicals, the radical congruence, quotient frames, ideal lattices,
//! reticulations), decides the annihilator conditions (1)-(5)/(iv) on
//! lattices and their ring analogues (1°)-(5°)/(iv°), and exhaustively
//! verifies the equivalence and transfer theorems over all small instances.

pub mod check;
pub mod commutator;
pub mod conditions;
pub mod enumerate;
pub mod harness;
pub mod json;
pub mod lattice;
pub mod rings;
pub mod set;
pub mod transfer;

pub use check::{Check, Outcome};
pub use commutator::CommutatorLattice;
pub use conditions::{ConditionId, Family, Kappa};
pub use lattice::{FiniteLattice, LatticeCongruence};
pub use rings::FiniteCommRing;
pub use set::ElemSet;
