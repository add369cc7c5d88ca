//! The degree-4 determinantal family over a (1,3)-polarized abelian
//! surface.
//!
//! The surface is the rank-one locus of the 2x3 matrix with rows
//! (s1, s3, s2) and (q1, q3, q2), where
//! `q_j = y_j^2 + mu*y_{j+1}*y_{j-1}` (indices mod 3). Its three 2x2
//! minors F1, F2, F3 satisfy `s1*F1 + s2*F2 + s3*F3 = 0`, are cyclically
//! permuted by the translation generator, and are scaled by (1, e^2, e)
//! by the character generator, where e is a primitive cube root of
//! unity.

use std::sync::Arc;

use super::{FamilyDescriptor, FamilyName, GeneratorAction, GeneratorEffect, ParamValue};
use crate::error::Result;
use crate::exactmath::{det_bareiss, minors, ratio, Matrix, Rational, Rationals};
use crate::heis::HeisType;
use crate::poly::{qring, MultiPoly, PolyRing};

type QPoly = MultiPoly<Rationals>;
type QRing = Arc<PolyRing<Rationals>>;

/// The three quadrics `q_j = y_j^2 + mu*y_{j+1}*y_{j-1}` in a ring that
/// contains variables mu, y1, y2, y3.
pub fn pp4_q(ring: &QRing) -> [QPoly; 3] {
    let p = |s: &str| ring.parse(s).expect("fixed quadric parses");
    [
        p("y1^2 + mu*y2*y3"),
        p("y2^2 + mu*y3*y1"),
        p("y3^2 + mu*y1*y2"),
    ]
}

fn pp4_minor_equations(ring: &QRing) -> [QPoly; 3] {
    let [q1, q2, q3] = pp4_q(ring);
    let s1 = ring.var_named("s1");
    let s2 = ring.var_named("s2");
    let s3 = ring.var_named("s3");
    [
        s3.mul(&q2).sub(&s2.mul(&q3)),
        s1.mul(&q3).sub(&s3.mul(&q1)),
        s2.mul(&q1).sub(&s1.mul(&q2)),
    ]
}

fn pp4_generator_actions(ty: HeisType) -> Vec<GeneratorAction> {
    vec![
        GeneratorAction {
            label: "g1",
            element: ty.translation_gen(1),
            effect: GeneratorEffect::Permutes {
                images: vec![2, 0, 1],
                zeta_powers: vec![0, 0, 0],
            },
        },
        GeneratorAction {
            label: "g2",
            element: ty.character_gen(1),
            effect: GeneratorEffect::Scales {
                zeta_powers: vec![0, 2, 1],
            },
        },
    ]
}

/// Builds the family, with the parameter left symbolic (`None`) or
/// specialized to a rational value.
pub fn pp4_family(mu: Option<Rational>) -> FamilyDescriptor {
    let ty = HeisType::new(1, 3);
    let sym = qring(&["mu", "s1", "s2", "s3", "y1", "y2", "y3"]);
    let eqs = pp4_minor_equations(&sym);
    match mu {
        None => FamilyDescriptor {
            name: FamilyName::Pp4,
            heis_type: ty,
            parameters: vec![("mu".into(), ParamValue::Symbolic)],
            ring: sym,
            equations: eqs.to_vec(),
            vector_vars: vec![1, 2, 3],
            dual_vars: vec![4, 5, 6],
            generator_actions: pp4_generator_actions(ty),
        },
        Some(q) => {
            let numeric = qring(&["s1", "s2", "s3", "y1", "y2", "y3"]);
            let equations = eqs
                .iter()
                .map(|f| {
                    f.substitute(&[(0, sym.constant(q.clone()))])
                        .embed_into(&numeric, |c| c.clone())
                })
                .collect();
            FamilyDescriptor {
                name: FamilyName::Pp4,
                heis_type: ty,
                parameters: vec![("mu".into(), ParamValue::Rational(q))],
                ring: numeric,
                equations,
                vector_vars: vec![0, 1, 2],
                dual_vars: vec![3, 4, 5],
                generator_actions: pp4_generator_actions(ty),
            }
        }
    }
}

/// Checks that the lexicographically ordered 2x2 minors of the defining
/// 2x3 matrix are (F2, -F3, F1) for the family's equation list
/// (F1, F2, F3), and that `s1*F1 + s2*F2 + s3*F3 = 0`.
pub fn pp4_minor_dictionary_holds() -> Result<bool> {
    let sym = qring(&["mu", "s1", "s2", "s3", "y1", "y2", "y3"]);
    let [q1, q2, q3] = pp4_q(&sym);
    let m = Matrix::from_rows(vec![
        vec![sym.var_named("s1"), sym.var_named("s3"), sym.var_named("s2")],
        vec![q1, q3, q2],
    ]);
    let mins = minors(&sym, &m, 2)?;
    let [f1, f2, f3] = pp4_minor_equations(&sym);
    let dictionary = mins.len() == 3
        && mins[0] == f2
        && mins[1] == f3.neg()
        && mins[2] == f1;
    let s1 = sym.var_named("s1");
    let s2 = sym.var_named("s2");
    let s3 = sym.var_named("s3");
    let relation = s1.mul(&f1).add(&s2.mul(&f2)).add(&s3.mul(&f3)).is_zero();
    Ok(dictionary && relation)
}

/// Quadratic-form coefficient matrix of a conic in the variables listed
/// in `yvars`: diagonal entries are the square coefficients, off-diagonal
/// entries half the mixed coefficients. The remaining variables of the
/// ring pass through into the entries.
fn conic_matrix(conic: &QPoly, yvars: &[usize; 3]) -> Matrix<QPoly> {
    let half = ratio(1, 2);
    Matrix::from_fn(3, 3, |i, j| {
        let mut c = conic.clone();
        for (k, &v) in yvars.iter().enumerate() {
            let wanted = (k == i) as u16 + (k == j) as u16;
            c = c.coefficient_of(v, wanted);
        }
        if i == j {
            c
        } else {
            c.scale(&half)
        }
    })
}

/// One chart of the conic-pencil analysis of the degree-4 cover.
#[derive(Debug, Clone)]
pub struct Pp4Pencil {
    /// Index (0, 1, or 2) of the s coordinate assumed nonzero.
    pub chart: usize,
    /// Ring with variables (mu, s1, s2, s3, s, t).
    pub ring: QRing,
    /// Symmetric 3x3 coefficient matrix of the conic s*F_i + t*F_j, with
    /// (i, j) the two minors complementary to the chart coordinate.
    pub conic_matrix: Matrix<QPoly>,
    /// Its determinant: a binary cubic in (s, t).
    pub poly: QPoly,
}

/// Builds the pencil of conics on the chosen chart and its determinant
/// cubic. Chart 0 pairs (F2, F3), chart 1 pairs (F3, F1), chart 2 pairs
/// (F1, F2).
pub fn pp4_pencil(chart: usize) -> Result<Pp4Pencil> {
    assert!(chart < 3, "chart index must be 0, 1, or 2");
    let full = qring(&["mu", "s1", "s2", "s3", "s", "t", "y1", "y2", "y3"]);
    let eqs = pp4_minor_equations(&full);
    let s = full.var_named("s");
    let t = full.var_named("t");
    let pencil = s
        .mul(&eqs[(chart + 1) % 3])
        .add(&t.mul(&eqs[(chart + 2) % 3]));
    let yvars = [
        full.var_index("y1").unwrap(),
        full.var_index("y2").unwrap(),
        full.var_index("y3").unwrap(),
    ];
    let big_matrix = conic_matrix(&pencil, &yvars);
    let ring = qring(&["mu", "s1", "s2", "s3", "s", "t"]);
    let matrix = Matrix::from_fn(3, 3, |i, j| {
        big_matrix[[i, j]].embed_into(&ring, |c| c.clone())
    });
    let poly = det_bareiss(&ring, &matrix)?;
    Ok(Pp4Pencil {
        chart,
        ring,
        conic_matrix: matrix,
        poly,
    })
}

/// The determinant cubic of the chart-0 pencil, whose coefficients in
/// (s, t) are compared against the displayed expansion.
pub fn pp4_pencil_poly() -> Result<Pp4Pencil> {
    pp4_pencil(0)
}

impl Pp4Pencil {
    /// Extracts the coefficient of s^i t^(3-i) from the pencil
    /// determinant, landing in the ring (mu, s1, s2, s3).
    pub fn coefficient(&self, s_power: u16) -> QPoly {
        let s = self.ring.var_index("s").unwrap();
        let t = self.ring.var_index("t").unwrap();
        let target = qring(&["mu", "s1", "s2", "s3"]);
        self.poly
            .coefficient_of(s, s_power)
            .coefficient_of(t, 3 - s_power)
            .embed_into(&target, |c| c.clone())
    }
}

/// The branch curve of the degree-4 cover, as a sextic in (s1, s2, s3)
/// with polynomial coefficients in the parameter.
#[derive(Debug, Clone)]
pub struct BranchSextic {
    /// Ring with variables (mu, s1, s2, s3).
    pub ring: QRing,
    /// The sextic, normalized to the integer-coefficient form: the
    /// pencil cubic is scaled by 4 to clear its quarter-integer entries
    /// before the discriminant is taken.
    pub sextic: QPoly,
    /// True when all three charts produce the same polynomial.
    pub charts_agree: bool,
    /// True when the sextic is fixed by the cyclic substitution
    /// s1 -> s2 -> s3 -> s1.
    pub cyclically_invariant: bool,
}

/// The branch sextic computed on one chart: the discriminant of the
/// (scaled) pencil cubic, divided exactly by the sixth power of the
/// chart coordinate.
pub fn pp4_branch_sextic(chart: usize) -> Result<QPoly> {
    let p = pp4_pencil(chart)?;
    let four = p.ring.int(4);
    let scaled = Pp4Pencil {
        poly: p.poly.mul(&four),
        ..p
    };
    let a = scaled.coefficient(3);
    let b = scaled.coefficient(2);
    let c = scaled.coefficient(1);
    let d = scaled.coefficient(0);
    let ring = a.ring().clone();
    let disc = crate::elim::cubic_discriminant_poly(&ring, &a, &b, &c, &d);
    let chart_var = ring.var_named(&format!("s{}", chart + 1));
    disc.exact_div(&chart_var.pow(6))
}

/// Computes the branch sextic on all three charts, checks their
/// agreement and the cyclic symmetry, and returns the chart-0 result.
pub fn pp4_branch_locus() -> Result<BranchSextic> {
    let s0 = pp4_branch_sextic(0)?;
    let s1 = pp4_branch_sextic(1)?;
    let s2 = pp4_branch_sextic(2)?;
    let charts_agree = s0 == s1 && s1 == s2;
    let ring = s0.ring().clone();
    let i1 = ring.var_index("s1").unwrap();
    let i2 = ring.var_index("s2").unwrap();
    let i3 = ring.var_index("s3").unwrap();
    let cycled = s0.substitute(&[
        (i1, ring.var(i2)),
        (i2, ring.var(i3)),
        (i3, ring.var(i1)),
    ]);
    let cyclically_invariant = cycled == s0;
    Ok(BranchSextic {
        ring,
        sextic: s0,
        charts_agree,
        cyclically_invariant,
    })
}

/// Round-trip between the two published normalizations of the branch
/// sextic: negating the parameter and dividing by -27 produces the
/// companion form, and undoing both steps returns the original
/// polynomial exactly.
pub fn pp4_pp_crosscheck() -> Result<bool> {
    let b = pp4_branch_locus()?;
    let ring = b.ring.clone();
    let mu = ring.var_index("mu").unwrap();
    let minus_mu = ring.var(mu).neg();
    let companion = b
        .sextic
        .substitute(&[(mu, minus_mu.clone())])
        .scale(&ratio(-1, 27));
    let back = companion
        .substitute(&[(mu, minus_mu)])
        .scale(&ratio(-27, 1));
    Ok(back == b.sextic && companion != b.sextic)
}

/// The join tensor of the family: fifteen coordinates over the wedge
/// basis of pairs of quadratic monomials in (y1, y2, y3).
#[derive(Debug, Clone)]
pub struct Pp4Gamma {
    /// Ring with variables (lambda, mu, s1, s2, s3).
    pub ring: QRing,
    /// The fifteen wedge coordinates, ordered lexicographically over the
    /// quadratic monomial basis (y1^2, y1y2, y1y3, y2^2, y2y3, y3^2).
    pub components: Vec<QPoly>,
    /// Human-readable labels for the wedge slots, in the same order.
    pub wedge_labels: Vec<(&'static str, &'static str)>,
    /// True when the three pairwise wedges of the generalized minors are
    /// s3, s1, s2 times the common vector, as the sum relation predicts.
    pub proportionality_ok: bool,
}

/// Labels of the quadratic monomial basis used for the wedge slots.
pub const QUADRIC_BASIS: [&str; 6] = ["y1^2", "y1*y2", "y1*y3", "y2^2", "y2*y3", "y3^2"];

impl Pp4Gamma {
    /// The five coefficient values (a, b, c, d, e) read off the fixed
    /// dictionary slots: a from component 1 over s2, b from component 2
    /// over s3, c from component 3 over s3, d is component 4 itself, e
    /// from component 6 over s1.
    pub fn dictionary(&self) -> Result<[QPoly; 5]> {
        let s1 = self.ring.var_named("s1");
        let s2 = self.ring.var_named("s2");
        let s3 = self.ring.var_named("s3");
        Ok([
            self.components[0].exact_div(&s2)?,
            self.components[1].exact_div(&s3)?,
            self.components[2].exact_div(&s3)?,
            self.components[3].clone(),
            self.components[5].exact_div(&s1)?,
        ])
    }

    /// Checks the dictionary values against
    /// (-lambda*mu, lambda*mu, lambda^2, 0, -mu^2).
    pub fn dictionary_holds(&self) -> Result<bool> {
        let d = self.dictionary()?;
        let e = |s: &str| self.ring.parse(s).expect("fixed dictionary value parses");
        Ok(d[0] == e("-lambda*mu")
            && d[1] == e("lambda*mu")
            && d[2] == e("lambda^2")
            && d[3].is_zero()
            && d[4] == e("-mu^2"))
    }
}

/// Computes the join tensor from the two-parameter minors
/// `G_i = s_{i+2}*(lambda*y_{i+1}^2 + mu*...) - s_{i+1}*(...)`: the
/// wedge G2 and G3 divided exactly by s1, with the other two wedges
/// checked for proportionality.
pub fn pp4_gamma() -> Result<Pp4Gamma> {
    let full = qring(&["lambda", "mu", "s1", "s2", "s3", "y1", "y2", "y3"]);
    let p = |s: &str| full.parse(s).expect("fixed quadric parses");
    let q = [
        p("lambda*y1^2 + mu*y2*y3"),
        p("lambda*y2^2 + mu*y3*y1"),
        p("lambda*y3^2 + mu*y1*y2"),
    ];
    let s1 = full.var_named("s1");
    let s2 = full.var_named("s2");
    let s3 = full.var_named("s3");
    let g = [
        s3.mul(&q[1]).sub(&s2.mul(&q[2])),
        s1.mul(&q[2]).sub(&s3.mul(&q[0])),
        s2.mul(&q[0]).sub(&s1.mul(&q[1])),
    ];

    let ring = qring(&["lambda", "mu", "s1", "s2", "s3"]);
    let yvars = [
        full.var_index("y1").unwrap(),
        full.var_index("y2").unwrap(),
        full.var_index("y3").unwrap(),
    ];
    // Exponent patterns of the quadratic basis, same order as
    // QUADRIC_BASIS.
    let patterns: [[u16; 3]; 6] = [
        [2, 0, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 2, 0],
        [0, 1, 1],
        [0, 0, 2],
    ];
    let coords = |f: &QPoly| -> Vec<QPoly> {
        patterns
            .iter()
            .map(|pat| {
                let mut c = f.clone();
                for (k, &v) in yvars.iter().enumerate() {
                    c = c.coefficient_of(v, pat[k]);
                }
                c.embed_into(&ring, |x| x.clone())
            })
            .collect()
    };
    let vecs: Vec<Vec<QPoly>> = g.iter().map(coords).collect();

    let wedge = |u: &[QPoly], v: &[QPoly]| -> Vec<QPoly> {
        let mut out = Vec::with_capacity(15);
        for a in 0..6 {
            for b in (a + 1)..6 {
                out.push(u[a].mul(&v[b]).sub(&u[b].mul(&v[a])));
            }
        }
        out
    };
    let w23 = wedge(&vecs[1], &vecs[2]);
    let w12 = wedge(&vecs[0], &vecs[1]);
    let w31 = wedge(&vecs[2], &vecs[0]);

    let rs1 = ring.var_named("s1");
    let rs2 = ring.var_named("s2");
    let rs3 = ring.var_named("s3");
    let components: Vec<QPoly> = w23
        .iter()
        .map(|c| c.exact_div(&rs1))
        .collect::<Result<_>>()?;
    let proportionality_ok = components
        .iter()
        .zip(w12.iter().zip(&w31))
        .all(|(gc, (a, b))| *a == gc.mul(&rs3) && *b == gc.mul(&rs2));

    let mut wedge_labels = Vec::with_capacity(15);
    for a in 0..6 {
        for b in (a + 1)..6 {
            wedge_labels.push((QUADRIC_BASIS[a], QUADRIC_BASIS[b]));
        }
    }
    Ok(Pp4Gamma {
        ring,
        components,
        wedge_labels,
        proportionality_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn minor_dictionary_and_sum_relation() {
        assert!(pp4_minor_dictionary_holds().unwrap());
    }

    #[test]
    fn family_at_mu_zero_is_monomial_differences() {
        let fam = pp4_family(Some(rat(0)));
        let r = fam.ring.clone();
        assert_eq!(fam.equations[0], r.parse("s3*y2^2 - s2*y3^2").unwrap());
        assert_eq!(fam.equations[1], r.parse("s1*y3^2 - s3*y1^2").unwrap());
        assert_eq!(fam.equations[2], r.parse("s2*y1^2 - s1*y2^2").unwrap());
    }

    #[test]
    fn equations_are_bihomogeneous() {
        let fam = pp4_family(None);
        for f in &fam.equations {
            assert_eq!(f.homogeneous_degree(&[0, 1, 1, 1, 0, 0, 0]), Some(1));
            assert_eq!(f.homogeneous_degree(&[0, 0, 0, 0, 1, 1, 1]), Some(2));
        }
    }

    #[test]
    fn pencil_matrix_matches_the_displayed_one() {
        let p = pp4_pencil_poly().unwrap();
        let e = |s: &str| p.ring.parse(s).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![
                e("s2*t - s3*s"),
                e("1/2*mu*s1*s"),
                e("-1/2*mu*s1*t"),
            ],
            vec![
                e("1/2*mu*s1*s"),
                e("-s1*t"),
                e("1/2*mu*(s2*t - s3*s)"),
            ],
            vec![
                e("-1/2*mu*s1*t"),
                e("1/2*mu*(s2*t - s3*s)"),
                e("s1*s"),
            ],
        ]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.conic_matrix[[i, j]], expected[[i, j]], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn pencil_cubic_has_the_displayed_coefficients() {
        let p = pp4_pencil_poly().unwrap();
        let coeff = |k: u16| p.coefficient(k);
        let target = coeff(3).ring().clone();
        let e = |s: &str| target.parse(s).unwrap();
        assert_eq!(coeff(3), e("1/4*mu^2*(s3^3 - s1^3)"));
        assert_eq!(
            coeff(2),
            e("1/4*mu^3*s1^2*s3 - 3/4*mu^2*s2*s3^2 + s1^2*s3")
        );
        assert_eq!(
            coeff(1),
            e("-1/4*mu^3*s1^2*s2 + 3/4*mu^2*s2^2*s3 - s1^2*s2")
        );
        assert_eq!(coeff(0), e("1/4*mu^2*(s1^3 - s2^3)"));
    }

    #[test]
    fn pencil_cubic_at_mu_zero() {
        let p = pp4_pencil_poly().unwrap();
        let mu = p.ring.var_index("mu").unwrap();
        let at0 = p.poly.substitute(&[(mu, p.ring.zero_poly())]);
        let expected = p.ring.parse("s1^2*s*t*(s3*s - s2*t)").unwrap();
        assert_eq!(at0, expected);
    }

    #[test]
    fn branch_sextic_matches_the_corrected_display() {
        let b = pp4_branch_locus().unwrap();
        assert!(b.charts_agree);
        assert!(b.cyclically_invariant);
        let expected = b
            .ring
            .parse(
                "-27*mu^8*(s1^6 + s2^6 + s3^6) \
                 + mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)\
                   *(s1^3*s2^3 + s1^3*s3^3 + s2^3*s3^3) \
                 + mu^4*(18*mu^6 + 144*mu^3 + 288)*s1*s2*s3*(s1^3 + s2^3 + s3^3) \
                 + (mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256)*s1^2*s2^2*s3^2",
            )
            .unwrap();
        assert_eq!(b.sextic, expected);
    }

    #[test]
    fn branch_sextic_coefficient_extraction() {
        let b = pp4_branch_locus().unwrap();
        let ring = b.ring.clone();
        let idx = |n: &str| ring.var_index(n).unwrap();
        let coeff = |e1: u16, e2: u16, e3: u16| {
            b.sextic
                .coefficient_of(idx("s1"), e1)
                .coefficient_of(idx("s2"), e2)
                .coefficient_of(idx("s3"), e3)
        };
        let e = |s: &str| ring.parse(s).unwrap();
        assert_eq!(coeff(6, 0, 0), e("-27*mu^8"));
        assert_eq!(coeff(0, 6, 0), e("-27*mu^8"));
        assert_eq!(coeff(0, 0, 6), e("-27*mu^8"));
        let mid = e("mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)");
        assert_eq!(coeff(3, 3, 0), mid);
        assert_eq!(coeff(3, 0, 3), mid);
        assert_eq!(coeff(0, 3, 3), mid);
        let tri = e("mu^4*(18*mu^6 + 144*mu^3 + 288)");
        assert_eq!(coeff(4, 1, 1), tri);
        assert_eq!(coeff(1, 4, 1), tri);
        assert_eq!(coeff(1, 1, 4), tri);
        assert_eq!(
            coeff(2, 2, 2),
            e("mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256")
        );
        // The degree-2 monomial that appears in the displayed middle
        // term cannot occur in a sextic; its coefficient is zero.
        assert!(coeff(1, 0, 1).is_zero());
        // Shape: homogeneous of degree 6 in the s block.
        assert_eq!(b.sextic.homogeneous_degree(&[0, 1, 1, 1]), Some(6));
    }

    #[test]
    fn branch_sextic_at_mu_zero() {
        let b = pp4_branch_locus().unwrap();
        let mu = b.ring.var_index("mu").unwrap();
        let at0 = b.sextic.substitute(&[(mu, b.ring.zero_poly())]);
        assert_eq!(at0, b.ring.parse("256*s1^2*s2^2*s3^2").unwrap());
    }

    #[test]
    fn crosscheck_round_trip() {
        assert!(pp4_pp_crosscheck().unwrap());
    }

    #[test]
    fn gamma_matches_the_displayed_components() {
        let g = pp4_gamma().unwrap();
        assert!(g.proportionality_ok);
        assert_eq!(g.components.len(), 15);
        let e = |s: &str| g.ring.parse(s).unwrap();
        let expected = [
            "-lambda*mu*s2",
            "lambda*mu*s3",
            "lambda^2*s3",
            "0",
            "-lambda^2*s2",
            "-mu^2*s1",
            "-lambda*mu*s1",
            "mu^2*s2",
            "0",
            "0",
            "-mu^2*s3",
            "lambda*mu*s1",
            "-lambda*mu*s3",
            "lambda^2*s1",
            "-lambda*mu*s2",
        ];
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(g.components[k], e(want), "wedge slot {}", k + 1);
        }
    }

    #[test]
    fn gamma_dictionary() {
        let g = pp4_gamma().unwrap();
        assert!(g.dictionary_holds().unwrap());
    }

    #[test]
    fn gamma_survivors_at_lambda_one_mu_zero() {
        let g = pp4_gamma().unwrap();
        let lam = g.ring.var_index("lambda").unwrap();
        let mu = g.ring.var_index("mu").unwrap();
        let survivors: Vec<usize> = g
            .components
            .iter()
            .enumerate()
            .filter_map(|(k, c)| {
                let v = c.substitute(&[
                    (lam, g.ring.one_poly()),
                    (mu, g.ring.zero_poly()),
                ]);
                (!v.is_zero()).then_some(k)
            })
            .collect();
        // Only the lambda^2 slots survive (0-based positions 2, 4, 13).
        assert_eq!(survivors, vec![2, 4, 13]);
    }
}
