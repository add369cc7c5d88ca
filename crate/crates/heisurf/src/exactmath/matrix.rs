//! Dense matrices over an arbitrary ring descriptor.
//!
//! The element type is generic plain data; all arithmetic goes through a
//! [`RingOps`] or [`FieldOps`] descriptor passed alongside the matrix.
//! Determinants use the fraction-free Bareiss elimination, which stays
//! inside the ring (all divisions are exact), so it applies to polynomial
//! entries as well as field elements.

use std::ops::{Index, IndexMut};

use super::field::{FieldOps, RingOps};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    /// Builds a matrix from nested rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix by evaluating `f(i, j)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row slice accessor.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[[j, i]].clone())
    }

    /// Submatrix selected by row and column index lists (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[[rows[i], cols[j]]].clone()
        })
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<[usize; 2]> for Matrix<T> {
    type Output = T;

    fn index(&self, idx: [usize; 2]) -> &T {
        assert!(idx[0] < self.rows && idx[1] < self.cols, "index out of range");
        &self.data[idx[0] * self.cols + idx[1]]
    }
}

impl<T> IndexMut<[usize; 2]> for Matrix<T> {
    fn index_mut(&mut self, idx: [usize; 2]) -> &mut T {
        assert!(idx[0] < self.rows && idx[1] < self.cols, "index out of range");
        &mut self.data[idx[0] * self.cols + idx[1]]
    }
}

/// Identity matrix of size n.
pub fn identity<R: RingOps>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

/// Matrix product.
///
/// # Panics
///
/// Panics if the inner dimensions disagree.
pub fn mat_mul<R: RingOps>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch in matrix product");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = ring.zero();
        for k in 0..a.cols {
            acc = ring.add(&acc, &ring.mul(&a[[i, k]], &b[[k, j]]));
        }
        acc
    })
}

/// Entrywise difference.
pub fn mat_sub<R: RingOps>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "dimension mismatch");
    Matrix::from_fn(a.rows, a.cols, |i, j| ring.sub(&a[[i, j]], &b[[i, j]]))
}

/// Multiplies every entry by a scalar.
pub fn scalar_mul<R: RingOps>(ring: &R, c: &R::Elem, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.mul(c, x))
}

/// Tests whether a square matrix is a scalar multiple of the identity and
/// returns the scalar if so.
pub fn as_scalar_identity<R: RingOps>(ring: &R, a: &Matrix<R::Elem>) -> Option<R::Elem> {
    if !a.is_square() || a.rows == 0 {
        return None;
    }
    let c = a[[0, 0]].clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            let expect = if i == j { c.clone() } else { ring.zero() };
            if a[[i, j]] != expect {
                return None;
            }
        }
    }
    Some(c)
}

/// Determinant by fraction-free Bareiss elimination. Every intermediate
/// division is exact, so the computation stays inside the coefficient ring
/// (in particular it works for polynomial entries).
///
/// # Panics
///
/// Panics if the matrix is not square.
pub fn det_bareiss<R: RingOps>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    assert!(a.is_square(), "determinant requires a square matrix");
    let n = a.rows;
    if n == 0 {
        return Ok(ring.one());
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[[k, k]]) {
            match (k + 1..n).find(|&r| !ring.is_zero(&m[[r, k]])) {
                Some(r) => {
                    m.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(
                    &ring.mul(&m[[k, k]], &m[[i, j]]),
                    &ring.mul(&m[[i, k]], &m[[k, j]]),
                );
                m[[i, j]] = ring.exact_div(&t, &prev)?;
            }
            m[[i, k]] = ring.zero();
        }
        prev = m[[k, k]].clone();
    }
    let det = m[[n - 1, n - 1]].clone();
    Ok(if negate { ring.neg(&det) } else { det })
}

/// Determinant by cofactor expansion along the first row. Exponential in
/// the size; kept as an independent cross-check for small matrices.
///
/// # Panics
///
/// Panics if the matrix is not square.
pub fn det_cofactor<R: RingOps>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    assert!(a.is_square(), "determinant requires a square matrix");
    let n = a.rows;
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return a[[0, 0]].clone();
    }
    let sub_rows: Vec<usize> = (1..n).collect();
    let mut acc = ring.zero();
    for j in 0..n {
        if ring.is_zero(&a[[0, j]]) {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = det_cofactor(ring, &a.submatrix(&sub_rows, &cols));
        let term = ring.mul(&a[[0, j]], &minor);
        acc = if j % 2 == 0 {
            ring.add(&acc, &term)
        } else {
            ring.sub(&acc, &term)
        };
    }
    acc
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance to the lexicographic successor
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All k x k minors, ordered lexicographically by (row subset, column
/// subset). For an r x c matrix the result has C(r, k) * C(c, k) entries.
pub fn minors<R: RingOps>(ring: &R, a: &Matrix<R::Elem>, k: usize) -> Result<Vec<R::Elem>> {
    let row_sets = combinations(a.rows, k);
    let col_sets = combinations(a.cols, k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(det_bareiss(ring, &a.submatrix(rs, cs))?);
        }
    }
    Ok(out)
}

/// Reduced row echelon form over a field. Returns the echelon matrix and
/// the pivot column indices; the rank is the number of pivots.
pub fn rref<F: FieldOps>(field: &F, a: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !field.is_zero(&m[[i, c]])) else {
            continue;
        };
        m.swap_rows(r, pr);
        let inv = field
            .inv(&m[[r, c]])
            .expect("pivot is nonzero by construction");
        for j in c..m.cols {
            m[[r, j]] = field.mul(&m[[r, j]], &inv);
        }
        for i in 0..m.rows {
            if i != r && !field.is_zero(&m[[i, c]]) {
                let factor = m[[i, c]].clone();
                for j in c..m.cols {
                    let t = field.mul(&factor, &m[[r, j]]);
                    m[[i, j]] = field.sub(&m[[i, j]], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Rank over a field.
pub fn rank<F: FieldOps>(field: &F, a: &Matrix<F::Elem>) -> usize {
    rref(field, a).1.len()
}

/// Basis of the right kernel (solutions of A v = 0) over a field. The
/// basis vectors are canonical: each has a 1 in one free coordinate and 0
/// in the other free coordinates.
pub fn kernel_basis<F: FieldOps>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (m, pivots) = rref(field, a);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; m.cols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let free: Vec<usize> = (0..m.cols).filter(|c| pivot_of_col[*c].is_none()).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![field.zero(); m.cols];
        v[fc] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&m[[r, fc]]);
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix over a field, by Gauss-Jordan elimination.
/// Fails with [`Error::Singular`] if the matrix is not invertible.
///
/// # Panics
///
/// Panics if the matrix is not square.
pub fn inverse<F: FieldOps>(field: &F, a: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    assert!(a.is_square(), "inverse requires a square matrix");
    let n = a.rows;
    // Augment with the identity and reduce.
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a[[i, j]].clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let (m, pivots) = {
        let (m, pivots) = rref(field, &aug);
        aug = m;
        (aug, pivots)
    };
    if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| m[[i, j + n]].clone()))
}
