//! Exact coefficient arithmetic and fraction-free linear algebra.
//!
//! Three coefficient fields are provided behind one descriptor interface:
//! the rationals ([`Rationals`]), prime fields GF(p) for p < 2^32
//! ([`PrimeField`]), and cyclotomic fields Q(zeta_n) ([`CyclotomicField`]).
//! Matrices over any [`RingOps`] support fraction-free determinants
//! ([`det_bareiss`]) and minor extraction; matrices over a [`FieldOps`]
//! additionally support rank, kernels, and inverses.

mod cyclotomic;
mod field;
mod matrix;
mod primefield;

pub use cyclotomic::{cyclotomic_polynomial, CycElem, CyclotomicField};
pub use field::{rat, ratio, FieldOps, Rational, Rationals, RingOps, Sign};
pub use matrix::{
    as_scalar_identity, combinations, det_bareiss, det_cofactor, identity, inverse, kernel_basis,
    mat_mul, mat_sub, minors, rank, rref, scalar_mul, Matrix,
};
pub use primefield::{is_prime, rational_mod_p, PrimeField};
