//! Exact spectral analysis of the q-analogue of the hypercube random walk on
//! the subspace lattice of `F_q^n`.
//!
//! The crate builds the operator `M_q(n)` on the lattice of all subspaces,
//! verifies its spectrum by exact characteristic polynomials, constructs a
//! complete π-orthogonal eigenbasis by recursion over the tower of lattices,
//! and counts weighted rooted spanning trees of its Hasse diagram.

pub mod cyclotomic;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod operators;
pub mod eigenbasis;
pub mod par;
pub mod qarith;
pub mod spectra;
pub mod subspaces;
pub mod trees;

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use gf::{FfVector, Field, FieldElem, GfMatrix};
pub use linalg::{IntMatrix, IntPoly};
pub use operators::FormalVector;
pub use par::Exec;
pub use qarith::QParams;
pub use subspaces::{Lattice, Subspace};
