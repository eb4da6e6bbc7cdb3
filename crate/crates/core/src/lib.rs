//! Finite hemirings and semirings represented by their operation tables.
//!
//! Every algebra in this crate lives on a dense carrier `0..order`; addition
//! and multiplication are table lookups. On top of that representation the
//! crate provides:
//!
//! - axiom validation with concrete counterexamples ([`hemiring`]),
//! - homomorphism, isomorphism and canonical-form search ([`hom`], [`search`]),
//! - finite semilattices, their endomorphism semirings `E_M` and the
//!   subhemiring `F_M` generated additively by the maps `e_{a,b}` ([`lattice`]),
//! - congruences, ideals and the simpleness deciders ([`congruence`], [`ideal`]),
//! - matrix semirings, corner semirings, finite fields and catalogs of small
//!   algebras up to isomorphism ([`constructions`]),
//! - finite semimodules, trace ideals and the double centralizer check
//!   ([`semimodule`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line tool and the verification suites live in the `hemiring-cli` crate.
#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod congruence;
pub mod constructions;
pub mod error;
pub mod hemiring;
pub mod hom;
pub mod ideal;
pub mod lattice;
pub mod search;
pub mod semimodule;
pub mod table;
mod unionfind;

pub use congruence::Congruence;
pub use error::{AlgebraError, Result};
pub use hemiring::{Axiom, AxiomReport, FiniteHemiring};
pub use hom::HomMap;
pub use ideal::{IdealSubset, Side};
pub use lattice::{Endo, EndoSemiring, FiniteLattice, FiniteSemilattice};
pub use semimodule::{FiniteLeftSemimodule, SemimoduleHom};
pub use table::{Element, OpTable, PartialOrder};
