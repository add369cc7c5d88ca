//! The degree-3 pencil family over a (1,2)-polarized abelian surface.
//!
//! The single bihomogeneous equation is
//! `x1*(y1^3 + lambda*y1*y2^2) + x2*(y2^3 + lambda*y2*y1^2)`,
//! cubic in (y1, y2) and linear in (x1, x2). The group of type (1,2)
//! acts with x2 -> -x2 under the character generator and with the swap
//! (x1, x2) -> (x2, x1) under the translation generator, and the
//! equation is invariant under both.

use std::sync::Arc;

use super::{FamilyDescriptor, FamilyName, GeneratorAction, GeneratorEffect, ParamValue};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational, Rationals};
use crate::heis::{eigenspace_basis, EigenConstraint, GradedModule, HeisType, Representation};
use crate::poly::{qring, MultiPoly, PolyRing};

fn chpp_generator_actions(ty: HeisType) -> Vec<GeneratorAction> {
    vec![
        GeneratorAction {
            label: "g1",
            element: ty.character_gen(1),
            effect: GeneratorEffect::Scales {
                zeta_powers: vec![0],
            },
        },
        GeneratorAction {
            label: "g2",
            element: ty.translation_gen(1),
            effect: GeneratorEffect::Scales {
                zeta_powers: vec![0],
            },
        },
    ]
}

/// Builds the family, with the parameter left symbolic (`None`) or
/// specialized to a rational value.
pub fn chpp_family(lambda: Option<Rational>) -> FamilyDescriptor {
    let ty = HeisType::new(1, 2);
    let sym = qring(&["lambda", "y1", "y2", "x1", "x2"]);
    let f = sym
        .parse("x1*(y1^3 + lambda*y1*y2^2) + x2*(y2^3 + lambda*y2*y1^2)")
        .expect("fixed equation parses");
    match lambda {
        None => FamilyDescriptor {
            name: FamilyName::Chpp,
            heis_type: ty,
            parameters: vec![("lambda".into(), ParamValue::Symbolic)],
            ring: sym,
            equations: vec![f],
            vector_vars: vec![3, 4],
            dual_vars: vec![1, 2],
            generator_actions: chpp_generator_actions(ty),
        },
        Some(q) => {
            let numeric = qring(&["y1", "y2", "x1", "x2"]);
            let specialized = f
                .substitute(&[(0, sym.constant(q.clone()))])
                .embed_into(&numeric, |c| c.clone());
            FamilyDescriptor {
                name: FamilyName::Chpp,
                heis_type: ty,
                parameters: vec![("lambda".into(), ParamValue::Rational(q))],
                ring: numeric,
                equations: vec![specialized],
                vector_vars: vec![2, 3],
                dual_vars: vec![0, 1],
                generator_actions: chpp_generator_actions(ty),
            }
        }
    }
}

/// The branch divisor of the degree-3 projection, computed two
/// independent ways.
#[derive(Debug, Clone)]
pub struct ChppDiscriminant {
    /// Ring with variables (lambda, x1, x2).
    pub ring: Arc<PolyRing<Rationals>>,
    /// The literal 4x4 matrix as displayed in the source construction.
    pub printed_matrix: Matrix<MultiPoly<Rationals>>,
    /// Determinant of the printed matrix.
    pub determinant: MultiPoly<Rationals>,
    /// Resultant in y1 of the two y-partials of the family equation at
    /// y2 = 1, computed from scratch.
    pub resultant: MultiPoly<Rationals>,
}

impl ChppDiscriminant {
    /// True when the hard-coded matrix route and the derived resultant
    /// route give the same polynomial.
    pub fn routes_agree(&self) -> bool {
        self.determinant == self.resultant
    }

    /// Specializes the discriminant at a numeric parameter value,
    /// returning a binary quartic in (x1, x2).
    pub fn at_lambda(&self, lambda: &Rational) -> MultiPoly<Rationals> {
        let target = qring(&["x1", "x2"]);
        self.determinant
            .substitute(&[(0, self.ring.constant(lambda.clone()))])
            .embed_into(&target, |c| c.clone())
    }
}

/// Computes the branch divisor of the projection from the family
/// hypersurface to the abelian surface, as a binary quartic in (x1, x2)
/// with symbolic parameter.
///
/// Two routes are reported: the determinant of the displayed 4x4 matrix
/// entered literally, and the Sylvester resultant of the two y-partial
/// derivatives of the family equation, derived with no reference to the
/// display. Their agreement is a nontrivial cross-check.
pub fn chpp_discriminant() -> ChppDiscriminant {
    let ring = qring(&["lambda", "x1", "x2"]);
    let e = |s: &str| ring.parse(s).expect("fixed matrix entry parses");
    let printed_matrix = Matrix::from_rows(vec![
        vec![e("3*x1"), e("2*lambda*x2"), e("lambda*x1"), e("0")],
        vec![e("0"), e("3*x1"), e("2*lambda*x2"), e("lambda*x1")],
        vec![e("lambda*x2"), e("2*lambda*x1"), e("3*x2"), e("0")],
        vec![e("0"), e("lambda*x2"), e("2*lambda*x1"), e("3*x2")],
    ]);
    let determinant =
        crate::exactmath::det_bareiss(&ring, &printed_matrix).expect("polynomial determinant");

    let fam = chpp_family(None);
    let f = &fam.equations[0];
    let big = fam.ring.clone();
    let y1 = big.var_index("y1").unwrap();
    let y2 = big.var_index("y2").unwrap();
    let f1 = f
        .partial_derivative(y1)
        .substitute(&[(y2, big.one_poly())]);
    let f2 = f
        .partial_derivative(y2)
        .substitute(&[(y2, big.one_poly())]);
    let res = crate::elim::sylvester_resultant(&f1, &f2, y1).expect("resultant of the partials");
    let resultant = res.embed_into(&ring, |c| c.clone());

    ChppDiscriminant {
        ring,
        printed_matrix,
        determinant,
        resultant,
    }
}

/// The even quartic in z whose roots locate the singular members of the
/// pencil cut by the family on the curve side.
///
/// With the parameter symbolic the denominator-free form
/// `lambda*z^4 + (3 - lambda^2)*z^2 + lambda` is returned in the ring
/// (lambda, z). For a numeric nonzero parameter the monic form
/// `z^4 + ((3 - lambda^2)/lambda)*z^2 + 1` is returned in the ring (z).
/// A numeric zero parameter is rejected.
pub fn chpp_singular_fiber_quartic(lambda: Option<&Rational>) -> Result<MultiPoly<Rationals>> {
    let sym = qring(&["lambda", "z"]);
    // 2x2 determinant of the y-Hessian-like block at y1 = 1, y2 = z:
    // (3 + lambda z^2)(3 z^2 + lambda) - (2 lambda z)^2.
    let det = sym
        .parse("(3 + lambda*z^2)*(3*z^2 + lambda) - 4*lambda^2*z^2")
        .expect("fixed expression parses");
    match lambda {
        None => det.exact_div(&sym.int(3)),
        Some(q) => {
            if q == &Rational::from_integer(0.into()) {
                return Err(Error::LambdaZero);
            }
            let target = qring(&["z"]);
            let specialized = det
                .substitute(&[(0, sym.constant(q.clone()))])
                .embed_into(&target, |c| c.clone());
            let three_lambda = Rational::from_integer(3.into()) * q.clone();
            specialized.exact_div(&target.constant(three_lambda))
        }
    }
}

/// Resultant in y2 of the binary quadric pair
/// `(y1^2 + lambda*y2^2, y2^2 + lambda*y1^2)`, returned in the ring
/// (lambda, y1). It factors as `y1^4*(lambda^2 - 1)^2`, so the pair has
/// a common projective zero exactly when the parameter is 1 or -1.
pub fn chpp_base_point_resultant() -> MultiPoly<Rationals> {
    let ring = qring(&["lambda", "y1", "y2"]);
    let f = ring.parse("y1^2 + lambda*y2^2").unwrap();
    let g = ring.parse("y2^2 + lambda*y1^2").unwrap();
    let y2 = ring.var_index("y2").unwrap();
    let res = crate::elim::sylvester_resultant(&f, &g, y2).expect("resultant of the quadrics");
    let target = qring(&["lambda", "y1"]);
    res.embed_into(&target, |c| c.clone())
}

/// Basis of the space of equations available to the family: the joint
/// trivial eigenspace of the bidegree (3, 1) monomial module under both
/// group generators. For type (1,2) it is two-dimensional.
pub fn chpp_invariant_forms() -> Result<(
    GradedModule,
    Vec<MultiPoly<crate::exactmath::CyclotomicField>>,
)> {
    let rep = Representation::new(HeisType::new(1, 2))?;
    let module = GradedModule::new(&rep, 3, 1);
    let constraints = [
        EigenConstraint {
            element: rep.htype().character_gen(1),
            zeta_power: 0,
        },
        EigenConstraint {
            element: rep.htype().translation_gen(1),
            zeta_power: 0,
        },
    ];
    let basis = eigenspace_basis(&rep, &module, &constraints);
    Ok((module, basis))
}
