//! Exact-arithmetic kernels for verifying Heisenberg-invariant surface
//! constructions.
//!
//! The crate is organised in five layers, each usable on its own:
//!
//! * [`exactmath`] - exact coefficient fields (rationals, prime fields,
//!   cyclotomic fields) and fraction-free linear algebra over them.
//! * [`poly`] - sparse multivariate polynomials over any of those fields,
//!   with a small text grammar for input and canonical output.
//! * [`elim`] - elimination theory: Sylvester resultants, discriminants,
//!   Buchberger's algorithm, projective emptiness certificates, and a
//!   randomized Jacobian rank probe over prime fields.
//! * [`heis`] - finite Heisenberg groups of type (d1, d2), their
//!   Schroedinger representations, induced actions on spaces of
//!   polynomials, and exact eigenspace computations.
//! * [`surfaces`] - the concrete families of surfaces cut out by
//!   Heisenberg-eigenvector equations, together with every derived object
//!   (discriminants, branch loci, auxiliary vector fields, numeric
//!   invariants) that the verification suite checks.
//!
//! The [`report`] module holds the shared check/report types emitted by the
//! verification suite in the companion CLI crate.

pub mod elim;
pub mod error;
pub mod exactmath;
pub mod heis;
pub mod poly;
pub mod report;
pub mod surfaces;

pub use error::{Error, Result};
