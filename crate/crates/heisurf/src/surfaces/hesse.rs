//! The two plane-cubic families over a (1,3)-polarized abelian surface,
//! and the sextic dual to the first one.
//!
//! Both families pair the bilinear invariant `y1*x1 + y2*x2 + y3*x3`
//! with an invariant plane cubic: the pencil member
//! `y1^3 + y2^3 + y3^3 + lambda*y1*y2*y3`, or the fixed cubic
//! `y1^2*y2 + y2^2*y3 + y3^2*y1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use super::{FamilyDescriptor, FamilyName, GeneratorAction, GeneratorEffect, ParamValue};
use crate::elim::{groebner, is_projectively_empty, normal_form, FpPoly};
use crate::error::Result;
use crate::exactmath::{CyclotomicField, PrimeField, Rational, Rationals};
use crate::heis::{
    eigenspace_basis, EigenConstraint, GradedModule, HeisType, Representation,
};
use crate::poly::{qring, MultiPoly, PolyRing};

type QPoly = MultiPoly<Rationals>;
type QRing = Arc<PolyRing<Rationals>>;
type CPoly = MultiPoly<CyclotomicField>;

fn specialize_m(f: &QPoly, sym: &QRing, m: &Rational, target: &QRing) -> QPoly {
    f.substitute(&[(0, sym.constant(m.clone()))])
        .embed_into(target, |c| c.clone())
}

/// The plane cubic `y1^3 + y2^3 + y3^3 + 6*m*y1*y2*y3`, symbolic in the
/// ring (m, y1, y2, y3) or specialized in (y1, y2, y3).
pub fn hesse_cubic(m: Option<&Rational>) -> QPoly {
    let sym = qring(&["m", "y1", "y2", "y3"]);
    let f = sym
        .parse("y1^3 + y2^3 + y3^3 + 6*m*y1*y2*y3")
        .expect("fixed cubic parses");
    match m {
        None => f,
        Some(q) => specialize_m(&f, &sym, q, &qring(&["y1", "y2", "y3"])),
    }
}

/// The three quadrics `q_j = y_j^2 + 2*m*y_{j+1}*y_{j-1}`, each one
/// third of the corresponding partial derivative of the cubic.
pub fn hesse_q(m: Option<&Rational>) -> [QPoly; 3] {
    let sym = qring(&["m", "y1", "y2", "y3"]);
    let parse = |s: &str| sym.parse(s).expect("fixed quadric parses");
    let qs = [
        parse("y1^2 + 2*m*y2*y3"),
        parse("y2^2 + 2*m*y3*y1"),
        parse("y3^2 + 2*m*y1*y2"),
    ];
    match m {
        None => qs,
        Some(v) => {
            let target = qring(&["y1", "y2", "y3"]);
            [
                specialize_m(&qs[0], &sym, v, &target),
                specialize_m(&qs[1], &sym, v, &target),
                specialize_m(&qs[2], &sym, v, &target),
            ]
        }
    }
}

/// Checks `3*q_j = d(cubic)/d(y_j)` symbolically for all three indices.
pub fn hesse_gradient_identity() -> bool {
    let f = hesse_cubic(None);
    let ring = f.ring().clone();
    let three = ring.int(3);
    hesse_q(None).iter().enumerate().all(|(j, q)| {
        let dj = f.partial_derivative(j + 1);
        q.mul(&three) == dj
    })
}

/// Smoothness of the specialized cubic: true when its gradient ideal
/// cuts out the empty set in the projective plane. The singular values
/// are exactly those with `(2m)^3 = -1`.
pub fn hesse_smoothness_verdict(m: &Rational) -> Result<bool> {
    let f = hesse_cubic(Some(m));
    let grads: Vec<QPoly> = (0..3).map(|j| f.partial_derivative(j)).collect();
    Ok(is_projectively_empty(&grads, &[0, 1, 2])?.empty)
}

/// The sextic curve dual to the cubic, in the ring (m, x1, x2, x3).
pub fn hesse_dual_sextic() -> QPoly {
    let ring = qring(&["m", "x1", "x2", "x3"]);
    ring.parse(
        "x1^6 + x2^6 + x3^6 \
         + 2*(-16*m^3 - 1)*(x1^3*x2^3 + x1^3*x3^3 + x2^3*x3^3) \
         - 24*m^2*x1*x2*x3*(x1^3 + x2^3 + x3^3) \
         + 6*m*(-8*m^3 - 4)*x1^2*x2^2*x3^2",
    )
    .expect("fixed sextic parses")
}

/// The sextic composed with the gradient of the cubic, symbolically, in
/// the ring (m, y1, y2, y3).
fn dual_composed_with_gradient() -> QPoly {
    let work = qring(&["m", "y1", "y2", "y3", "x1", "x2", "x3"]);
    let f = hesse_cubic(None).embed_into(&work, |c| c.clone());
    let b = hesse_dual_sextic().embed_into(&work, |c| c.clone());
    let y0 = work.var_index("y1").unwrap();
    let x0 = work.var_index("x1").unwrap();
    let grads: Vec<(usize, QPoly)> = (0..3)
        .map(|j| (x0 + j, f.partial_derivative(y0 + j)))
        .collect();
    let composed = b.substitute(&grads);
    composed.embed_into(&qring(&["m", "y1", "y2", "y3"]), |c| c.clone())
}

/// Duality certificate at one parameter value: the sextic evaluated on
/// the gradient of the cubic reduces to zero modulo the cubic, by
/// division against its reduced basis.
pub fn hesse_duality_membership(m: &Rational) -> Result<bool> {
    let sym = qring(&["m", "y1", "y2", "y3"]);
    let target = qring(&["y1", "y2", "y3"]);
    let f = hesse_cubic(Some(m));
    let composed = specialize_m(&dual_composed_with_gradient(), &sym, m, &target);
    let gb = groebner(&[f])?;
    Ok(normal_form(&composed, &gb).is_zero())
}

/// Duality certificate with the parameter symbolic: the composition is
/// an exact polynomial multiple of the cubic.
pub fn hesse_duality_symbolic() -> Result<bool> {
    let composed = dual_composed_with_gradient();
    let f = hesse_cubic(None);
    Ok(composed.exact_div(&f).is_ok())
}

/// Outcome of sampling the duality certificate over a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualitySample {
    /// Number of curve points found and tested.
    pub points: usize,
    /// Number of tested points where the composed sextic failed to
    /// vanish.
    pub failures: usize,
}

impl DualitySample {
    pub fn passed(&self, requested: usize) -> bool {
        self.points >= requested && self.failures == 0
    }
}

/// Samples random points on random members of the cubic pencil over
/// GF(prime) and evaluates the composed sextic at each: for a random
/// parameter and a random second coordinate, the third coordinate is
/// found by scanning the residue classes for roots of the resulting
/// univariate cubic. Deterministic for a fixed seed.
pub fn hesse_duality_sampled(prime: u64, requested: usize, seed: u64) -> Result<DualitySample> {
    let field = PrimeField::new(prime)?;
    let sym = qring(&["m", "y1", "y2", "y3"]);
    let f = hesse_cubic(None).embed_into(&sym, |c| c.clone());
    let f_p = FpPoly::from_poly(&f, &field)?;
    let composed_p = FpPoly::from_poly(&dual_composed_with_gradient(), &field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = 0usize;
    let mut failures = 0usize;
    let max_trials = 40 * requested.max(1);
    for _ in 0..max_trials {
        if points >= requested {
            break;
        }
        let m = rng.gen_range(0..prime);
        let y2 = rng.gen_range(0..prime);
        for z in 0..prime {
            if f_p.eval(&field, &[m, 1, y2, z]) == 0 {
                points += 1;
                if composed_p.eval(&field, &[m, 1, y2, z]) != 0 {
                    failures += 1;
                }
                if points >= requested {
                    break;
                }
            }
        }
    }
    Ok(DualitySample { points, failures })
}

fn delta3_generator_actions(ty: HeisType, cubic_char_power: i64) -> Vec<GeneratorAction> {
    vec![
        GeneratorAction {
            label: "g1",
            element: ty.translation_gen(1),
            effect: GeneratorEffect::Scales {
                zeta_powers: vec![0, 0],
            },
        },
        GeneratorAction {
            label: "g2",
            element: ty.character_gen(1),
            effect: GeneratorEffect::Scales {
                zeta_powers: vec![0, cubic_char_power],
            },
        },
    ]
}

/// Builds the pencil-cubic family: the bilinear invariant together with
/// `y1^3 + y2^3 + y3^3 + lambda*y1*y2*y3`. Both equations are invariant
/// under both generators.
pub fn hesse3_family(lambda: Option<Rational>) -> FamilyDescriptor {
    let ty = HeisType::new(1, 3);
    let sym = qring(&["lambda", "y1", "y2", "y3", "x1", "x2", "x3"]);
    let bilinear = sym.parse("y1*x1 + y2*x2 + y3*x3").unwrap();
    let cubic = sym
        .parse("y1^3 + y2^3 + y3^3 + lambda*y1*y2*y3")
        .unwrap();
    match lambda {
        None => FamilyDescriptor {
            name: FamilyName::Hesse3,
            heis_type: ty,
            parameters: vec![("lambda".into(), ParamValue::Symbolic)],
            ring: sym,
            equations: vec![bilinear, cubic],
            vector_vars: vec![4, 5, 6],
            dual_vars: vec![1, 2, 3],
            generator_actions: delta3_generator_actions(ty, 0),
        },
        Some(q) => {
            let numeric = qring(&["y1", "y2", "y3", "x1", "x2", "x3"]);
            let equations = vec![
                specialize_m(&bilinear, &sym, &q, &numeric),
                specialize_m(&cubic, &sym, &q, &numeric),
            ];
            FamilyDescriptor {
                name: FamilyName::Hesse3,
                heis_type: ty,
                parameters: vec![("lambda".into(), ParamValue::Rational(q))],
                ring: numeric,
                equations,
                vector_vars: vec![3, 4, 5],
                dual_vars: vec![0, 1, 2],
                generator_actions: delta3_generator_actions(ty, 0),
            }
        }
    }
}

/// Builds the fixed-cubic family: the bilinear invariant together with
/// `y1^2*y2 + y2^2*y3 + y3^2*y1`. The cubic picks up the square of the
/// primitive cube root of unity under the character generator.
pub fn ac3_family() -> FamilyDescriptor {
    let ty = HeisType::new(1, 3);
    let ring = qring(&["y1", "y2", "y3", "x1", "x2", "x3"]);
    let bilinear = ring.parse("y1*x1 + y2*x2 + y3*x3").unwrap();
    let cubic = ring.parse("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap();
    FamilyDescriptor {
        name: FamilyName::Ac3,
        heis_type: ty,
        parameters: Vec::new(),
        ring,
        equations: vec![bilinear, cubic],
        vector_vars: vec![3, 4, 5],
        dual_vars: vec![0, 1, 2],
        generator_actions: delta3_generator_actions(ty, 2),
    }
}

/// Smoothness of the fixed cubic: its gradient ideal is projectively
/// empty.
pub fn ac3_smoothness() -> Result<bool> {
    let ring = qring(&["y1", "y2", "y3"]);
    let cubic = ring.parse("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap();
    let grads: Vec<QPoly> = (0..3).map(|j| cubic.partial_derivative(j)).collect();
    Ok(is_projectively_empty(&grads, &[0, 1, 2])?.empty)
}

/// Checks the parameter dictionary between the two cubic normal forms:
/// the pencil cubic with coefficient 6m equals the cubic used by the
/// dual-sextic computation at parameter m.
pub fn hesse3_lambda_dictionary(m: &Rational) -> bool {
    let six_m = Rational::from_integer(6.into()) * m.clone();
    let fam = hesse3_family(Some(six_m));
    let cubic = hesse_cubic(Some(m)).embed_into(&fam.ring, |c| c.clone());
    fam.equations[1] == cubic
}

/// Basis of the cubics in (y1, y2, y3) fixed by the translation
/// generator of the type (1,3) group: a four-dimensional space.
pub fn translation_invariant_cubics() -> Result<(GradedModule, Vec<CPoly>)> {
    let rep = Representation::new(HeisType::new(1, 3))?;
    let module = GradedModule::new(&rep, 3, 0);
    let constraints = [EigenConstraint {
        element: rep.htype().translation_gen(1),
        zeta_power: 0,
    }];
    let basis = eigenspace_basis(&rep, &module, &constraints);
    Ok((module, basis))
}

/// Splits the translation-invariant cubics by character-generator
/// eigenvalue: returns (zeta power, basis) for powers 0, 1, 2, with
/// dimensions 2, 1, 1.
pub fn invariant_cubic_character_split() -> Result<Vec<(i64, Vec<CPoly>)>> {
    let rep = Representation::new(HeisType::new(1, 3))?;
    let module = GradedModule::new(&rep, 3, 0);
    let mut out = Vec::new();
    for power in 0..3i64 {
        let constraints = [
            EigenConstraint {
                element: rep.htype().translation_gen(1),
                zeta_power: 0,
            },
            EigenConstraint {
                element: rep.htype().character_gen(1),
                zeta_power: power,
            },
        ];
        out.push((power, eigenspace_basis(&rep, &module, &constraints)));
    }
    Ok(out)
}

/// The joint trivial eigenspace of the bidegree (1,1) module for the
/// type (1,3) group: one-dimensional, spanned by `y1*x1 + y2*x2 +
/// y3*x3`.
pub fn bilinear_invariant_space() -> Result<(GradedModule, Vec<CPoly>)> {
    let rep = Representation::new(HeisType::new(1, 3))?;
    let module = GradedModule::new(&rep, 1, 1);
    let constraints = [
        EigenConstraint {
            element: rep.htype().translation_gen(1),
            zeta_power: 0,
        },
        EigenConstraint {
            element: rep.htype().character_gen(1),
            zeta_power: 0,
        },
    ];
    let basis = eigenspace_basis(&rep, &module, &constraints);
    Ok((module, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio, RingOps};
    use crate::heis::spans_equal;

    #[test]
    fn gradient_identity_and_fermat_specialization() {
        assert!(hesse_gradient_identity());
        let fermat = hesse_cubic(Some(&rat(0)));
        assert_eq!(fermat, fermat.ring().parse("y1^3 + y2^3 + y3^3").unwrap());
    }

    #[test]
    fn smoothness_verdicts() {
        assert!(hesse_smoothness_verdict(&rat(0)).unwrap());
        assert!(hesse_smoothness_verdict(&rat(1)).unwrap());
        assert!(!hesse_smoothness_verdict(&ratio(-1, 2)).unwrap());
        // The criterion is (2m)^3 = -1; another root of unity situation
        // does not exist over the rationals, so every other rational
        // value is smooth.
        assert!(hesse_smoothness_verdict(&ratio(1, 2)).unwrap());
    }

    #[test]
    fn dual_sextic_is_cyclically_invariant() {
        let b = hesse_dual_sextic();
        let ring = b.ring().clone();
        let i1 = ring.var_index("x1").unwrap();
        let i2 = ring.var_index("x2").unwrap();
        let i3 = ring.var_index("x3").unwrap();
        let cycled = b.substitute(&[
            (i1, ring.var(i2)),
            (i2, ring.var(i3)),
            (i3, ring.var(i1)),
        ]);
        assert_eq!(cycled, b);
    }

    #[test]
    fn duality_membership_at_specialized_parameters() {
        for m in [rat(0), rat(1), rat(2), rat(-1)] {
            assert!(hesse_duality_membership(&m).unwrap(), "m = {}", m);
        }
    }

    #[test]
    fn duality_symbolic_division() {
        assert!(hesse_duality_symbolic().unwrap());
    }

    #[test]
    fn fermat_duality_direct() {
        // At parameter zero the gradient is 3*(y1^2, y2^2, y3^2);
        // substituting the squares into the sextic must land in the
        // ideal of the Fermat cubic.
        let ring = qring(&["y1", "y2", "y3", "x1", "x2", "x3"]);
        let sym = qring(&["m", "x1", "x2", "x3"]);
        let b0 = specialize_m(&hesse_dual_sextic(), &sym, &rat(0), &ring);
        let y0 = ring.var_index("y1").unwrap();
        let x0 = ring.var_index("x1").unwrap();
        let squares: Vec<(usize, QPoly)> =
            (0..3).map(|j| (x0 + j, ring.var(y0 + j).pow(2))).collect();
        let composed = b0
            .substitute(&squares)
            .embed_into(&qring(&["y1", "y2", "y3"]), |c| c.clone());
        let fermat = hesse_cubic(Some(&rat(0)));
        let gb = groebner(&[fermat]).unwrap();
        assert!(normal_form(&composed, &gb).is_zero());
    }

    #[test]
    fn sampled_duality_over_a_prime_field() {
        let sample = hesse_duality_sampled(10007, 100, 42).unwrap();
        assert!(sample.passed(100), "sample outcome {:?}", sample);
    }

    #[test]
    fn lambda_dictionary() {
        for m in [rat(0), rat(1), ratio(-2, 3)] {
            assert!(hesse3_lambda_dictionary(&m));
        }
    }

    #[test]
    fn ac3_cubic_is_smooth() {
        assert!(ac3_smoothness().unwrap());
    }

    #[test]
    fn translation_invariant_cubics_are_the_four_expected() {
        let (module, basis) = translation_invariant_cubics().unwrap();
        assert_eq!(basis.len(), 4);
        let ring = module.ring().clone();
        let expected = vec![
            ring.parse("y1^3 + y2^3 + y3^3").unwrap(),
            ring.parse("y1*y2*y3").unwrap(),
            ring.parse("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap(),
            ring.parse("y1^2*y3 + y2^2*y1 + y3^2*y2").unwrap(),
        ];
        assert!(spans_equal(&basis, &expected));
    }

    #[test]
    fn character_split_has_dimensions_two_one_one() {
        let split = invariant_cubic_character_split().unwrap();
        let ring = translation_invariant_cubics().unwrap().0.ring().clone();
        for (power, basis) in &split {
            match power {
                0 => {
                    assert_eq!(basis.len(), 2);
                    let expected = vec![
                        ring.parse("y1^3 + y2^3 + y3^3").unwrap(),
                        ring.parse("y1*y2*y3").unwrap(),
                    ];
                    assert!(spans_equal(basis, &expected));
                }
                1 => {
                    assert_eq!(basis.len(), 1);
                    let expected =
                        vec![ring.parse("y1^2*y3 + y2^2*y1 + y3^2*y2").unwrap()];
                    assert!(spans_equal(basis, &expected));
                }
                2 => {
                    assert_eq!(basis.len(), 1);
                    let expected =
                        vec![ring.parse("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap()];
                    assert!(spans_equal(basis, &expected));
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn bilinear_invariant_is_the_identity_tensor() {
        let (module, basis) = bilinear_invariant_space().unwrap();
        assert_eq!(basis.len(), 1);
        let ring = module.ring().clone();
        let expected = vec![ring.parse("y1*x1 + y2*x2 + y3*x3").unwrap()];
        assert!(spans_equal(&basis, &expected));
    }

    #[test]
    fn point_inversion_swaps_the_two_eigencubics() {
        // The basis inversion e_p -> e_{-p} exchanges the second and
        // third coordinates in both blocks; on cubics it must exchange
        // the two one-dimensional character eigenspaces.
        let rep = Representation::new(HeisType::new(1, 3)).unwrap();
        let module = GradedModule::new(&rep, 3, 0);
        let ring = module.ring().clone();
        let iota = rep.inversion_involution();
        let field = ring.field().clone();
        let one = field.one();
        assert_eq!(iota[[0, 0]], one);
        assert_eq!(iota[[1, 2]], one);
        assert_eq!(iota[[2, 1]], one);
        assert!(field.is_zero(&iota[[1, 1]]));
        let y = |j: usize| ring.var_index(&format!("y{}", j)).unwrap();
        let plus = ring.parse("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap();
        let minus = ring.parse("y1^2*y3 + y2^2*y1 + y3^2*y2").unwrap();
        let swapped = plus.substitute(&[(y(2), ring.var(y(3))), (y(3), ring.var(y(2)))]);
        assert_eq!(swapped, minus);
    }
}
