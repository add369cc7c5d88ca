//! Graded pieces of the symmetric algebra acted on by a Heisenberg group.
//!
//! A [`GradedModule`] of bidegree (d, e) models forms of degree d in the
//! dual variables y1..y{delta} and degree e in the coordinate variables
//! x1..x{delta}. A group element acts by linear substitution: the x row
//! transforms by [`Representation::matrix`] and the y row by
//! [`Representation::dual_matrix`]. Joint eigenspaces of commuting
//! elements are computed exactly as kernels over the cyclotomic field.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{
    kernel_basis, mat_mul, rank, CycElem, CyclotomicField, FieldOps, Matrix, Rational, RingOps,
};
use crate::heis::{HeisElement, Representation};
use crate::poly::{cmp_monomials, Monomial, MonomialOrder, MultiPoly, PolyRing};

/// Binomial coefficient as a usize; small inputs only.
fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// All exponent vectors of the given total degree, sorted descending in
/// the graded reverse lexicographic order.
fn monomials_of_degree(nvars: usize, degree: u16) -> Vec<Monomial> {
    fn rec(nvars: usize, degree: u16, pos: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur[pos] = degree;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for d in 0..=degree {
            cur[pos] = d;
            rec(nvars, degree - d, pos + 1, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    rec(nvars, degree, 0, &mut cur, &mut out);
    out.sort_by(|a, b| cmp_monomials(MonomialOrder::Grevlex, a, b).reverse());
    out
}

/// The space of bihomogeneous forms of degree d in y1..y{delta} and
/// degree e in x1..x{delta}, with a fixed monomial basis.
#[derive(Debug, Clone)]
pub struct GradedModule {
    d: u16,
    e: u16,
    delta: usize,
    ring: Arc<PolyRing<CyclotomicField>>,
    basis: Vec<Monomial>,
    y_vars: Vec<usize>,
    x_vars: Vec<usize>,
}

impl GradedModule {
    /// Builds the bidegree (d, e) module for a representation. The ring
    /// has variables y1..y{delta} then x1..x{delta} over the cyclotomic
    /// field of the representation.
    pub fn new(rep: &Representation, d: u16, e: u16) -> Self {
        let delta = rep.delta();
        let mut names: Vec<String> = Vec::with_capacity(2 * delta);
        for j in 1..=delta {
            names.push(format!("y{}", j));
        }
        for j in 1..=delta {
            names.push(format!("x{}", j));
        }
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::new(rep.field().clone(), &name_refs, MonomialOrder::Grevlex);
        let y_part = monomials_of_degree(delta, d);
        let x_part = monomials_of_degree(delta, e);
        let mut basis = Vec::with_capacity(y_part.len() * x_part.len());
        for a in &y_part {
            for b in &x_part {
                let mut m = Vec::with_capacity(2 * delta);
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                basis.push(m);
            }
        }
        let y_vars = (0..delta).collect();
        let x_vars = (delta..2 * delta).collect();
        GradedModule {
            d,
            e,
            delta,
            ring,
            basis,
            y_vars,
            x_vars,
        }
    }

    pub fn d(&self) -> u16 {
        self.d
    }

    pub fn e(&self) -> u16 {
        self.e
    }

    pub fn ring(&self) -> &Arc<PolyRing<CyclotomicField>> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Indices of the dual variables y1..y{delta} in the ring.
    pub fn y_vars(&self) -> &[usize] {
        &self.y_vars
    }

    /// Indices of the coordinate variables x1..x{delta} in the ring.
    pub fn x_vars(&self) -> &[usize] {
        &self.x_vars
    }

    /// Expected dimension from the two symmetric-power counts.
    pub fn expected_dim(&self) -> u64 {
        let delta = self.delta as u64;
        binomial(self.d as u64 + delta - 1, delta - 1) * binomial(self.e as u64 + delta - 1, delta - 1)
    }

    /// Reassembles a polynomial from coordinates in the fixed basis.
    pub fn poly_from_coords(&self, coords: &[CycElem]) -> MultiPoly<CyclotomicField> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let terms: Vec<(Monomial, CycElem)> = self
            .basis
            .iter()
            .zip(coords.iter())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        self.ring.from_terms(terms)
    }

    /// Coordinates of a polynomial in the fixed basis.
    ///
    /// Fails with [`Error::DegreeMismatch`] when a monomial of the input
    /// is outside the bidegree (d, e) span.
    pub fn coords_of(&self, p: &MultiPoly<CyclotomicField>) -> Result<Vec<CycElem>> {
        let field = self.ring.field();
        let mut coords = vec![field.zero(); self.dim()];
        for (m, c) in p.terms() {
            match self.basis.iter().position(|b| b == m) {
                Some(i) => coords[i] = c.clone(),
                None => {
                    return Err(Error::DegreeMismatch(format!(
                        "monomial outside the bidegree ({}, {}) space",
                        self.d, self.e
                    )))
                }
            }
        }
        Ok(coords)
    }

    /// Applies a group element to a polynomial of this module.
    pub fn apply(
        &self,
        rep: &Representation,
        g: &HeisElement,
        p: &MultiPoly<CyclotomicField>,
    ) -> MultiPoly<CyclotomicField> {
        apply_action(rep, g, p, &self.x_vars, &self.y_vars)
    }

    /// Matrix of a group element in the fixed basis (columns are images
    /// of basis monomials).
    pub fn action_matrix(&self, rep: &Representation, g: &HeisElement) -> Matrix<CycElem> {
        let n = self.dim();
        let field = self.ring.field().clone();
        let mut cols: Vec<Vec<CycElem>> = Vec::with_capacity(n);
        for b in &self.basis {
            let mono = self.ring.monomial(b.clone(), field.one());
            let image = self.apply(rep, g, &mono);
            cols.push(self.coords_of(&image).expect("action preserves the bidegree"));
        }
        Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    /// The scalar by which the center generator acts on this module.
    pub fn center_scalar(&self, rep: &Representation) -> CycElem {
        rep.field().zeta_pow(self.e as i64 - self.d as i64)
    }
}

/// Applies a group element to any polynomial over the cyclotomic field:
/// the variables listed in `vector_vars` transform by the matrix of the
/// element, those in `dual_vars` by the dual matrix, in index order.
/// Other variables are untouched.
///
/// # Panics
///
/// Panics when an index list is nonempty but its length differs from the
/// representation dimension.
pub fn apply_action(
    rep: &Representation,
    g: &HeisElement,
    p: &MultiPoly<CyclotomicField>,
    vector_vars: &[usize],
    dual_vars: &[usize],
) -> MultiPoly<CyclotomicField> {
    let ring = p.ring();
    let delta = rep.delta();
    let mut assignments: Vec<(usize, MultiPoly<CyclotomicField>)> = Vec::new();
    let mut add_block = |vars: &[usize], m: Matrix<CycElem>| {
        if vars.is_empty() {
            return;
        }
        assert_eq!(vars.len(), delta, "variable block has the wrong length");
        for (j, &vj) in vars.iter().enumerate() {
            let mut terms: Vec<(Monomial, CycElem)> = Vec::new();
            for (i, &vi) in vars.iter().enumerate() {
                let mut mono = vec![0u16; ring.num_vars()];
                mono[vi] = 1;
                terms.push((mono, m[[i, j]].clone()));
            }
            assignments.push((vj, ring.from_terms(terms)));
        }
    };
    add_block(vector_vars, rep.matrix(g));
    add_block(dual_vars, rep.dual_matrix(g));
    p.substitute(&assignments)
}

/// A joint eigenvalue constraint: the element must act by the given power
/// of the primitive root of unity.
#[derive(Debug, Clone)]
pub struct EigenConstraint {
    pub element: HeisElement,
    pub zeta_power: i64,
}

/// Basis of the joint eigenspace cut out by the constraints, as
/// polynomials of the module. The result is deterministic: kernel vectors
/// come from the reduced row echelon form of the stacked system.
pub fn eigenspace_basis(
    rep: &Representation,
    module: &GradedModule,
    constraints: &[EigenConstraint],
) -> Vec<MultiPoly<CyclotomicField>> {
    let field = module.ring().field();
    let n = module.dim();
    let mut rows: Vec<Vec<CycElem>> = Vec::new();
    for c in constraints {
        let m = module.action_matrix(rep, &c.element);
        let lambda = field.zeta_pow(c.zeta_power);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut entry = m[[i, j]].clone();
                if i == j {
                    entry = field.sub(&entry, &lambda);
                }
                row.push(entry);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        rows.push(vec![field.zero(); n]);
    }
    let stacked = Matrix::from_rows(rows);
    kernel_basis(field, &stacked)
        .into_iter()
        .map(|v| module.poly_from_coords(&v))
        .collect()
}

/// Smallest positive power k such that the k-th powers of both translation
/// generators commute with both character generators on the module.
/// Useful when the scalar generator acts nontrivially, which obstructs
/// joint eigenvectors for the original generators.
pub fn commuting_translation_power(rep: &Representation, module: &GradedModule) -> u32 {
    let ty = *rep.htype();
    let field = module.ring().field().clone();
    let chars = [
        module.action_matrix(rep, &ty.character_gen(0)),
        module.action_matrix(rep, &ty.character_gen(1)),
    ];
    for k in 1..=ty.exponent() {
        let mut ok = true;
        'outer: for ti in 0..2 {
            let tk = ty.pow(&ty.translation_gen(ti), k as i64);
            let mt = module.action_matrix(rep, &tk);
            for mc in &chars {
                let ab = mat_mul(&field, &mt, mc);
                let ba = mat_mul(&field, mc, &mt);
                for i in 0..module.dim() {
                    for j in 0..module.dim() {
                        if ab[[i, j]] != ba[[i, j]] {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if ok {
            return k;
        }
    }
    ty.exponent()
}

/// Dimension of an isotypic component by group averaging: sums the module
/// matrices of all (translation, character) pairs against the inverse
/// character value and takes the trace of the resulting projector.
///
/// The character of the abelian quotient is specified by its restrictions:
/// `chi_on_translations` pairs with the translation part and
/// `chi_on_characters` with the character part.
///
/// # Panics
///
/// Panics when the scalar generator acts nontrivially on the module (the
/// averaging is then meaningless) or when the trace is not a nonnegative
/// integer.
pub fn character_projection_dim(
    rep: &Representation,
    module: &GradedModule,
    chi_on_translations: (u32, u32),
    chi_on_characters: (u32, u32),
) -> usize {
    let ty = *rep.htype();
    let field = module.ring().field().clone();
    let center = module.center_scalar(rep);
    assert!(
        field.is_one(&center),
        "the scalar generator must act trivially for group averaging"
    );
    let n = module.dim();
    let mut sum = Matrix::from_fn(n, n, |_, _| field.zero());
    let mut count = 0u64;
    for t in ty.group_points() {
        for c in ty.group_points() {
            let g = HeisElement {
                t,
                chi: c,
                scalar: 0,
            };
            let exp = ty.pairing_exponent(chi_on_translations, t) as i64
                + ty.pairing_exponent(chi_on_characters, c) as i64;
            let weight = field.zeta_pow(-exp);
            let m = module.action_matrix(rep, &g);
            for i in 0..n {
                for j in 0..n {
                    let add = field.mul(&weight, &m[[i, j]]);
                    sum[[i, j]] = field.add(&sum[[i, j]], &add);
                }
            }
            count += 1;
        }
    }
    let mut trace = field.zero();
    for i in 0..n {
        trace = field.add(&trace, &sum[[i, i]]);
    }
    let trace_rat = field
        .as_rational(&trace)
        .expect("projector trace must be rational");
    let scaled = trace_rat / Rational::from_integer(count.into());
    assert!(
        scaled.is_integer() && scaled >= Rational::from_integer(0.into()),
        "projector trace must be a nonnegative integer, got {}",
        scaled
    );
    use num_traits::ToPrimitive;
    scaled.to_integer().to_usize().expect("dimension fits usize")
}

/// Whether two lists of polynomials span the same subspace over the
/// coefficient field. All polynomials must share one ring.
pub fn spans_equal<F: FieldOps + Clone + PartialEq>(
    a: &[MultiPoly<F>],
    b: &[MultiPoly<F>],
) -> bool {
    if a.is_empty() && b.is_empty() {
        return true;
    }
    let ring = if let Some(p) = a.first() {
        p.ring().clone()
    } else {
        b.first().unwrap().ring().clone()
    };
    let field = ring.field();
    let mut monomials: BTreeSet<Monomial> = BTreeSet::new();
    for p in a.iter().chain(b.iter()) {
        for (m, _) in p.terms() {
            monomials.insert(m.clone());
        }
    }
    let cols: Vec<Monomial> = monomials.into_iter().collect();
    let to_row = |p: &MultiPoly<F>| -> Vec<F::Elem> {
        let mut row = vec![field.zero(); cols.len()];
        for (m, c) in p.terms() {
            let idx = cols.binary_search(m).expect("monomial present");
            row[idx] = c.clone();
        }
        row
    };
    let rows_a: Vec<Vec<F::Elem>> = a.iter().map(&to_row).collect();
    let rows_b: Vec<Vec<F::Elem>> = b.iter().map(&to_row).collect();
    let mut rows_ab = rows_a.clone();
    rows_ab.extend(rows_b.iter().cloned());
    let width = cols.len();
    let mk = |rows: Vec<Vec<F::Elem>>| {
        if rows.is_empty() {
            Matrix::from_fn(1, width.max(1), |_, _| field.zero())
        } else {
            Matrix::from_rows(rows)
        }
    };
    let ra = rank(field, &mk(rows_a));
    let rb = rank(field, &mk(rows_b));
    let rab = rank(field, &mk(rows_ab));
    ra == rb && rb == rab
}
