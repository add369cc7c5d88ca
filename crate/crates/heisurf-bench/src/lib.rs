//! Shared inputs for the criterion benchmarks: representative workloads
//! drawn from the verification kernels so the benches measure the same
//! code paths the suite exercises.

use std::sync::Arc;

use heisurf::exactmath::{Matrix, Rationals};
use heisurf::poly::{qring, MultiPoly, PolyRing};

/// A dense 4x4 matrix of bivariate polynomial entries, the shape that
/// dominates the discriminant computations.
pub fn polynomial_matrix() -> (Arc<PolyRing<Rationals>>, Matrix<MultiPoly<Rationals>>) {
    let ring = qring(&["a", "b"]);
    let e = |s: &str| ring.parse(s).expect("benchmark entry parses");
    let m = Matrix::from_rows(vec![
        vec![e("a + 1"), e("2*b"), e("a*b"), e("3")],
        vec![e("b - 2"), e("a^2"), e("a + b"), e("b^2")],
        vec![e("a - b"), e("5"), e("2*a^2 - b"), e("a")],
        vec![e("b + 4"), e("a*b - 1"), e("b"), e("a^2 + b^2")],
    ]);
    (ring, m)
}

/// The gradient system of the cyclic cubic, the smallest interesting
/// elimination workload.
pub fn cyclic_gradient() -> Vec<MultiPoly<Rationals>> {
    let ring = qring(&["y1", "y2", "y3"]);
    let cubic = ring
        .parse("y1^2*y2 + y2^2*y3 + y3^2*y1")
        .expect("cubic parses");
    (0..3).map(|v| cubic.partial_derivative(v)).collect()
}
