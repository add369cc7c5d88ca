//! Crate-wide error type.
//!
//! Every fallible operation in the crate returns [`Result`]. Conditions that
//! indicate a caller bug (mismatched matrix shapes, mixing polynomials from
//! different rings) panic instead, and are documented per function.

use thiserror::Error;

/// Errors produced by the exact-arithmetic kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// A prime-field or probe construction was given a modulus that is not
    /// a prime below 2^32, or a rational input had a denominator divisible
    /// by the probe prime.
    #[error("bad prime {0}: {1}")]
    BadPrime(u64, String),

    /// Division by zero in a coefficient field.
    #[error("division by zero")]
    DivisionByZero,

    /// Text input for a polynomial did not match the grammar. The offset is
    /// a byte position into the input string.
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },

    /// A variable name appeared in the input that is not declared in the
    /// target ring (or in the `vars:` header of an ideal file).
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },

    /// A root-of-unity literal `zeta(m)` was used with an order that does
    /// not divide the ambient cyclotomic order.
    #[error("zeta({found}) is not available in a cyclotomic field of order {ambient}")]
    BadZetaOrder { found: u32, ambient: u32 },

    /// An exact division had a nonzero remainder. Reaching this from a
    /// discriminant or content computation indicates an internal bug, which
    /// is why it is surfaced loudly instead of being rounded away.
    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),

    /// A bounded algorithm exceeded its configured resource budget, for
    /// example the Buchberger pair queue.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A representation-theoretic construction was asked for a group order
    /// beyond the supported bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// The fiber quartic is undefined at lambda = 0 because the requested
    /// normalization divides by lambda.
    #[error("the fiber quartic is not defined at lambda = 0")]
    LambdaZero,

    /// An input file could not be read or had a malformed layout.
    #[error("file error for `{path}`: {message}")]
    FileError { path: String, message: String },

    /// A polynomial read from a file did not have the required homogeneity
    /// degree.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// A square matrix that must be invertible was singular.
    #[error("matrix is singular")]
    Singular,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
