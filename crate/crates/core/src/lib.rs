//! Executable realizability: partial combinatory algebras, discrete
//! combinatory objects, the family fibration, partitioned assemblies and
//! the exact completion, with bounded checkers for their characterizing
//! properties on finite instances.
//!
//! Everything here is `no_std` with `alloc`. File formats, sampling and
//! the command line live in the `realizability` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dco;
pub mod enumerate;
pub mod exlex;
pub mod fam;
pub mod pasm;
pub mod pca;
pub mod poly;
pub mod reduce;
pub mod report;
pub mod term;
pub mod verdict;

pub use pca::{Combinators, NatPca, Pca, SkPca};
pub use poly::Polynomial;
pub use reduce::evaluate;
pub use report::{Record, Report};
pub use term::{Atom, ParseError, Term};
pub use verdict::{kleene_le, Error, Fuel, Result, Search, Status, Verdict};
