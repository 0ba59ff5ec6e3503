//! A symbolic engine for finite Krull-Schmidt fusion data.
//!
//! The crate records finite braided tensor categories at the level of
//! direct-sum decompositions (indecomposable labels with composition
//! series, exact rational twist phases, duals, and a fusion table) and
//! computes with them:
//!
//! - [`category`]: the fusion datum and its object algebra (fusion, the
//!   composition-factor image, hom dimensions, monodromy of invertible
//!   simples);
//! - [`validate`]: per-class invariant checking, exhaustive on small
//!   atlases and seed-controlled samples on large ones;
//! - [`deligne`]: product data with componentwise structure and flat tuple
//!   labels;
//! - [`codes`]: binary linear codes under symmetric difference and the
//!   admissibility conditions for code-indexed extension algebras;
//! - [`extension`]: simple-current extensions (locality, induction, orbit
//!   classification, Frobenius hom dimensions);
//! - [`atlas`]: the shipped W_2 triplet atlas and the even symplectic
//!   fermion pipeline `SF_d^+`;
//! - [`verify`]: clause-level verification reports for the shipped data.
//!
//! All arithmetic is exact; no floating point appears anywhere. The crate
//! is `no_std` (with `alloc`): IO, serialization, and the command-line
//! front end live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod atlas;
pub mod category;
pub mod codes;
pub mod deligne;
mod error;
pub mod extension;
pub mod object;
pub mod phase;
pub mod validate;
pub mod verify;

pub use category::{CategoryData, FusionRule, HomDim, IndecompData};
pub use error::{Error, Result};
pub use object::{Label, ObjectSum};
pub use phase::{Phase, Rational};
