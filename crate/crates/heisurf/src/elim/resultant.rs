//! Sylvester resultants and discriminants.
//!
//! Resultants are taken with respect to one variable of a multivariate
//! ring; the entries of the Sylvester matrix are polynomials in the
//! remaining variables and the determinant is computed fraction-free.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{det_bareiss, FieldOps, Matrix, RingOps};
use crate::poly::{MultiPoly, PolyRing};

/// The Sylvester matrix of `f` and `g` with respect to `var`.
///
/// With `m = deg_var f` and `n = deg_var g`, the matrix is (m+n) square:
/// the first n rows carry the coefficients of `f` in descending powers,
/// each row shifted one column right from the previous, followed by m rows
/// built the same way from `g`.
///
/// # Panics
///
/// Panics if either polynomial is zero in `var`-degree terms (callers
/// check emptiness first) or if the polynomials live in different rings.
pub fn sylvester_matrix<F: FieldOps + Clone + PartialEq>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    var: usize,
) -> Matrix<MultiPoly<F>> {
    assert!(!f.is_zero() && !g.is_zero(), "sylvester matrix of zero");
    let ring = f.ring().clone();
    let m = f.degree_in(var).unwrap() as usize;
    let n = g.degree_in(var).unwrap() as usize;
    let fc = f.as_univariate(var);
    let gc = g.as_univariate(var);
    let size = m + n;
    Matrix::from_fn(size, size, |i, j| {
        // Rows 0..n shift f, rows n..n+m shift g.
        let (coeffs, deg, shift) = if i < n {
            (&fc, m, i)
        } else {
            (&gc, n, i - n)
        };
        // Row starts at column `shift` with the leading coefficient.
        if j < shift || j > shift + deg {
            ring.zero_poly()
        } else {
            coeffs[deg - (j - shift)].clone()
        }
    })
}

/// Resultant of `f` and `g` with respect to `var`, as a polynomial in the
/// remaining variables.
///
/// Conventions: the resultant involving a zero polynomial is 0, and the
/// resultant of two polynomials of `var`-degree 0 is 1.
pub fn sylvester_resultant<F: FieldOps + Clone + PartialEq>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    var: usize,
) -> Result<MultiPoly<F>> {
    let ring = f.ring().clone();
    if f.is_zero() || g.is_zero() {
        return Ok(ring.zero_poly());
    }
    let m = f.degree_in(var).unwrap_or(0) as usize;
    let n = g.degree_in(var).unwrap_or(0) as usize;
    if m == 0 && n == 0 {
        return Ok(ring.one_poly());
    }
    let s = sylvester_matrix(f, g, var);
    det_bareiss(&ring, &s)
}

/// Discriminant of `p` viewed as univariate in `var`:
/// `(-1)^(n(n-1)/2) * Res(p, dp/dvar) / lc(p)` where n is the degree and
/// lc the leading coefficient with respect to `var`.
///
/// The division by the leading coefficient is exact by construction; a
/// failure there signals an internal bug and is surfaced as
/// [`Error::ExactDivisionFailed`]. A polynomial of `var`-degree 0 is
/// rejected with [`Error::DegreeMismatch`].
pub fn univariate_discriminant<F: FieldOps + Clone + PartialEq>(
    p: &MultiPoly<F>,
    var: usize,
) -> Result<MultiPoly<F>> {
    let ring = p.ring().clone();
    let n = p.degree_in(var).unwrap_or(0) as u64;
    if n == 0 {
        return Err(Error::DegreeMismatch(
            "discriminant requires positive degree in the chosen variable".into(),
        ));
    }
    let dp = p.partial_derivative(var);
    if dp.is_zero() {
        // Inseparable case (characteristic divides every exponent).
        return Ok(ring.zero_poly());
    }
    let res = sylvester_resultant(p, &dp, var)?;
    let lc = p.coefficient_of(var, n as u16);
    let quot = res.exact_div(&lc)?;
    let sign_flips = (n * (n - 1) / 2) % 2 == 1;
    Ok(if sign_flips { quot.neg() } else { quot })
}

/// Discriminant of the cubic form `a*z^3 + b*z^2 + c*z + d` in terms of
/// its coefficients, over any ring:
/// `b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d`.
pub fn cubic_discriminant<R: RingOps>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    d: &R::Elem,
) -> R::Elem {
    let k = |n: i64| ring.from_i64(n);
    let b2c2 = ring.mul(&ring.mul(b, b), &ring.mul(c, c));
    let ac3 = ring.mul(a, &ring.mul(c, &ring.mul(c, c)));
    let b3d = ring.mul(&ring.mul(b, &ring.mul(b, b)), d);
    let a2d2 = ring.mul(&ring.mul(a, a), &ring.mul(d, d));
    let abcd = ring.mul(&ring.mul(a, b), &ring.mul(c, d));
    let mut acc = b2c2;
    acc = ring.add(&acc, &ring.mul(&k(-4), &ac3));
    acc = ring.add(&acc, &ring.mul(&k(-4), &b3d));
    acc = ring.add(&acc, &ring.mul(&k(-27), &a2d2));
    acc = ring.add(&acc, &ring.mul(&k(18), &abcd));
    acc
}

/// Cubic discriminant applied directly to polynomial coefficients, a
/// convenience for branch-locus computations.
pub fn cubic_discriminant_poly<F: FieldOps + Clone + PartialEq>(
    ring: &Arc<PolyRing<F>>,
    a: &MultiPoly<F>,
    b: &MultiPoly<F>,
    c: &MultiPoly<F>,
    d: &MultiPoly<F>,
) -> MultiPoly<F> {
    cubic_discriminant(ring, a, b, c, d)
}
