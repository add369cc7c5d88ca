//! Ring and field descriptors.
//!
//! Arithmetic is organised around small descriptor objects rather than
//! methods on element types: a descriptor like [`PrimeField`] or
//! [`CyclotomicField`] carries the context (the modulus, the order of the
//! root of unity) and exposes operations on borrowed elements. This keeps
//! element types plain data and lets the same generic code run over the
//! rationals, prime fields, cyclotomic fields, and polynomial rings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always stored reduced, with a positive denominator.
pub type Rational = BigRational;

/// Convenience constructor for an integer rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for the fraction `n / d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign attached to a formatted coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A commutative ring with exact division, described by a context object.
///
/// `exact_div` must either return the exact quotient or fail; it never
/// rounds. For fields it is ordinary division.
pub trait RingOps: std::fmt::Debug {
    /// Element representation. Plain data; all context lives in `self`.
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Exact quotient `a / b`; fails with [`Error::ExactDivisionFailed`]
    /// if `b` does not divide `a`, or [`Error::DivisionByZero`] if `b` is 0.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// Canonical text form of an element, suitable for re-parsing.
    fn format(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Splits an element into a display sign and a magnitude part, used by
    /// the polynomial serializer to decide between `+` and `-` term joins.
    /// The default keeps everything on the `+` side.
    fn split_sign(&self, a: &Self::Elem) -> (Sign, Self::Elem) {
        (Sign::Plus, a.clone())
    }

    /// Sums an iterator of elements.
    fn sum<I: IntoIterator<Item = Self::Elem>>(&self, iter: I) -> Self::Elem {
        iter.into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, &x))
    }
}

/// A field: a ring in which every nonzero element has an inverse.
pub trait FieldOps: RingOps {
    /// Multiplicative inverse; fails with [`Error::DivisionByZero`] on 0.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Descriptor for the field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl RingOps for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        BigRational::zero()
    }

    fn one(&self) -> Rational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> Rational {
        rat(n)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn exact_div(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a / b)
    }

    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn split_sign(&self, a: &Rational) -> (Sign, Rational) {
        if a.is_negative() {
            (Sign::Minus, -a)
        } else {
            (Sign::Plus, a.clone())
        }
    }
}

impl FieldOps for Rationals {
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
}
