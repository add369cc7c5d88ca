//! The degree-4 family over a (1,4)-polarized abelian surface, and the
//! randomized Jacobian rank probe for the composed octic system.
//!
//! The family is cut out in the mixed (y, x) space by a bilinear form
//! together with the quadric pair
//! `Q1 = y1^2 + y3^2 + 2*lambda*y2*y4` and
//! `Q2 = y2^2 + y4^2 + 2*lambda*y1*y3`.
//! The translation generator swaps Q1 and Q2 while the character
//! generator fixes Q1 and scales Q2 by zeta^2 = -1.
//!
//! The second half of the module builds the cubic map `beta` attached to
//! the quadric pair, proves its defining identities exactly, and exposes
//! a three-row Jacobian rank probe for an octic form in four variables
//! composed with the gradient and with `beta`: full rank 3 at a single
//! sample point certifies that the three composed conditions are
//! independent for that octic.

use std::path::Path;
use std::sync::Arc;

use super::{FamilyDescriptor, FamilyName, GeneratorAction, GeneratorEffect, ParamValue};
use crate::elim::{
    is_projectively_empty, random_rank_probe, Dual, FpPoly, RankProbeReport, RankProbeSystem,
};
use crate::error::{Error, Result};
use crate::exactmath::{minors, CyclotomicField, Matrix, PrimeField, Rational, Rationals};
use crate::heis::{
    commuting_translation_power, eigenspace_basis, spans_equal, EigenConstraint, GradedModule,
    HeisType, Representation,
};
use crate::poly::{qring, MultiPoly, PolyRing};

type QPoly = MultiPoly<Rationals>;
type QRing = Arc<PolyRing<Rationals>>;
type CPoly = MultiPoly<CyclotomicField>;

fn quartic4_generator_actions(ty: HeisType) -> Vec<GeneratorAction> {
    vec![
        GeneratorAction {
            label: "g1",
            element: ty.translation_gen(1),
            effect: GeneratorEffect::Permutes {
                images: vec![0, 2, 1],
                zeta_powers: vec![0, 0, 0],
            },
        },
        GeneratorAction {
            label: "g2",
            element: ty.character_gen(1),
            effect: GeneratorEffect::Scales {
                zeta_powers: vec![0, 0, 2],
            },
        },
    ]
}

/// The quadric pair in a ring containing lambda, y1, ..., y4.
fn quadric_pair(ring: &QRing) -> [QPoly; 2] {
    let p = |s: &str| ring.parse(s).expect("fixed quadric parses");
    [
        p("y1^2 + y3^2 + 2*lambda*y2*y4"),
        p("y2^2 + y4^2 + 2*lambda*y1*y3"),
    ]
}

/// Builds the family, with the parameter left symbolic (`None`) or
/// specialized to a rational value.
pub fn quartic4_family(lambda: Option<Rational>) -> FamilyDescriptor {
    let ty = HeisType::new(1, 4);
    let sym = qring(&[
        "lambda", "y1", "y2", "y3", "y4", "x1", "x2", "x3", "x4",
    ]);
    let bilinear = sym
        .parse("y1*x1 + y2*x2 + y3*x3 + y4*x4")
        .expect("fixed equation parses");
    let [q1, q2] = quadric_pair(&sym);
    match lambda {
        None => FamilyDescriptor {
            name: FamilyName::Quartic4,
            heis_type: ty,
            parameters: vec![("lambda".into(), ParamValue::Symbolic)],
            ring: sym,
            equations: vec![bilinear, q1, q2],
            vector_vars: vec![5, 6, 7, 8],
            dual_vars: vec![1, 2, 3, 4],
            generator_actions: quartic4_generator_actions(ty),
        },
        Some(q) => {
            let numeric = qring(&["y1", "y2", "y3", "y4", "x1", "x2", "x3", "x4"]);
            let lam = sym.constant(q.clone());
            let specialize = |f: &QPoly| {
                f.substitute(&[(0, lam.clone())])
                    .embed_into(&numeric, |c| c.clone())
            };
            let equations = vec![specialize(&bilinear), specialize(&q1), specialize(&q2)];
            FamilyDescriptor {
                name: FamilyName::Quartic4,
                heis_type: ty,
                parameters: vec![("lambda".into(), ParamValue::Rational(q))],
                ring: numeric,
                equations,
                vector_vars: vec![4, 5, 6, 7],
                dual_vars: vec![0, 1, 2, 3],
                generator_actions: quartic4_generator_actions(ty),
            }
        }
    }
}

/// Decides smoothness of the quadric-pair intersection curve in the
/// projective y-space at a rational parameter value. The ideal of the
/// singular scheme (both quadrics plus all 2x2 minors of their Jacobian)
/// is tested for projective emptiness over the algebraic closure.
pub fn quartic4_smoothness(lambda: &Rational) -> Result<bool> {
    let sym = qring(&["lambda", "y1", "y2", "y3", "y4"]);
    let numeric = qring(&["y1", "y2", "y3", "y4"]);
    let lam = sym.constant(lambda.clone());
    let specialize = |f: &QPoly| {
        f.substitute(&[(0, lam.clone())])
            .embed_into(&numeric, |c| c.clone())
    };
    let pair: Vec<QPoly> = quadric_pair(&sym).iter().map(&specialize).collect();
    let jac = Matrix::from_fn(2, 4, |i, j| pair[i].partial_derivative(j));
    let mut gens = pair.clone();
    gens.extend(minors(&numeric, &jac, 2)?);
    let cert = is_projectively_empty(&gens, &[0, 1, 2, 3])?;
    Ok(cert.empty)
}

/// The two joint eigenspaces of quadratic forms attached to the quadric
/// pair, cut out inside the full 10-dimensional space of quadrics.
#[derive(Debug, Clone)]
pub struct QuadricEigenspaces {
    /// Dimension of the ambient space of quadrics in four variables.
    pub module_dim: usize,
    /// Smallest power of the translation generator that commutes with the
    /// character generator on quadrics.
    pub commuting_power: u32,
    /// Character eigenvalue exponents of the two spaces.
    pub character_powers: (i64, i64),
    /// Joint eigenspace containing the first quadric.
    pub space_plus: Vec<CPoly>,
    /// Joint eigenspace containing the second quadric.
    pub space_minus: Vec<CPoly>,
    /// Whether the translation generator maps each space onto the other.
    pub translation_swaps: bool,
}

impl QuadricEigenspaces {
    /// The cyclotomic polynomial ring the eigenspaces live in.
    pub fn ring(&self) -> &Arc<PolyRing<CyclotomicField>> {
        self.space_plus
            .first()
            .expect("space is nonempty")
            .ring()
    }

    pub fn contains_plus(&self, q: &CPoly) -> bool {
        span_contains(&self.space_plus, q)
    }

    pub fn contains_minus(&self, q: &CPoly) -> bool {
        span_contains(&self.space_minus, q)
    }
}

fn span_contains(space: &[CPoly], q: &CPoly) -> bool {
    let mut extended = space.to_vec();
    extended.push(q.clone());
    spans_equal(space, &extended)
}

/// Computes the eigenspace pair of quadrics for the (1,4) group. The
/// squared translation generator and the character generator commute on
/// quadrics, and their joint eigenspaces for character eigenvalues
/// zeta^0 and zeta^2 are each two-dimensional; the unsquared translation
/// generator swaps them.
pub fn quartic4_eigenspace_pair() -> Result<QuadricEigenspaces> {
    let ty = HeisType::new(1, 4);
    let rep = Representation::new(ty)?;
    let module = GradedModule::new(&rep, 2, 0);
    let commuting_power = commuting_translation_power(&rep, &module);
    let t = ty.translation_gen(1);
    let t_pow = ty.pow(&t, commuting_power as i64);
    let sigma = ty.character_gen(1);
    let space = |chi: i64| {
        eigenspace_basis(
            &rep,
            &module,
            &[
                EigenConstraint {
                    element: t_pow.clone(),
                    zeta_power: 0,
                },
                EigenConstraint {
                    element: sigma.clone(),
                    zeta_power: chi,
                },
            ],
        )
    };
    let space_plus = space(0);
    let space_minus = space(2);
    let image_plus: Vec<CPoly> = space_plus.iter().map(|p| module.apply(&rep, &t, p)).collect();
    let image_minus: Vec<CPoly> = space_minus
        .iter()
        .map(|p| module.apply(&rep, &t, p))
        .collect();
    let translation_swaps = image_plus.iter().all(|p| span_contains(&space_minus, p))
        && image_minus.iter().all(|p| span_contains(&space_plus, p));
    Ok(QuadricEigenspaces {
        module_dim: module.dim(),
        commuting_power,
        character_powers: (0, 2),
        space_plus,
        space_minus,
        translation_swaps,
    })
}

/// The cubic map attached to the quadric pair, with all ingredients in
/// the ring (lambda, y1, y2, y3, y4).
#[derive(Debug, Clone)]
pub struct BetaMap {
    pub ring: QRing,
    /// Constant part of the map (the lambda^0 coefficient).
    pub beta0: [QPoly; 4],
    /// Linear part of the map (the lambda^1 coefficient).
    pub beta1: [QPoly; 4],
    /// The parameter-free correction `2*y2*y4*beta0 - (y1^2+y3^2)*beta1`.
    pub beta_tilde: [QPoly; 4],
    /// The quartic `y1^3*y3 - y2^3*y4 + y1*y3^3 - y2*y4^3`.
    pub quartic: QPoly,
}

impl BetaMap {
    /// The full map `beta0 + lambda*beta1` componentwise.
    pub fn beta(&self) -> [QPoly; 4] {
        let lam = self.ring.var_named("lambda");
        [0, 1, 2, 3].map(|j| self.beta0[j].add(&lam.mul(&self.beta1[j])))
    }
}

/// Builds the cubic map and its companion quartic.
pub fn beta_map() -> BetaMap {
    let ring = qring(&["lambda", "y1", "y2", "y3", "y4"]);
    let p = |s: &str| ring.parse(s).expect("fixed polynomial parses");
    let beta0 = [
        p("y1^2*y3"),
        p("-y2^2*y4"),
        p("y1*y3^2"),
        p("-y2*y4^2"),
    ];
    let beta1 = [
        p("-y2*y3*y4"),
        p("y1*y3*y4"),
        p("-y1*y2*y4"),
        p("y1*y2*y3"),
    ];
    let front = p("2*y2*y4");
    let back = p("y1^2 + y3^2");
    let beta_tilde =
        [0, 1, 2, 3].map(|j| front.mul(&beta0[j]).sub(&back.mul(&beta1[j])));
    let quartic = p("y1^3*y3 - y2^3*y4 + y1*y3^3 - y2*y4^3");
    BetaMap {
        ring,
        beta0,
        beta1,
        beta_tilde,
        quartic,
    }
}

/// Verifies the three exact identities satisfied by the cubic map, all
/// symbolically in the parameter:
///
/// 1. the map contracts against the coordinates to the companion
///    quartic, `sum_j y_j*beta_j = quartic`, with the linear part
///    contracting to zero;
/// 2. `2*y2*y4*beta - beta_tilde = Q1*beta1` componentwise, so the
///    correction agrees with the map up to a multiple of the first
///    quadric;
/// 3. `quartic = y1*y3*Q1 - y2*y4*Q2`, so the quartic lies in the ideal
///    of the quadric pair for every parameter value.
pub fn beta_identities_hold(b: &BetaMap) -> bool {
    let ring = &b.ring;
    let y: Vec<QPoly> = (1..=4).map(|j| ring.var_named(&format!("y{j}"))).collect();
    let [q1, q2] = quadric_pair(ring);
    let beta = b.beta();

    let contract = |parts: &[QPoly; 4]| {
        let mut acc = ring.zero_poly();
        for j in 0..4 {
            acc = acc.add(&y[j].mul(&parts[j]));
        }
        acc
    };
    let first = contract(&b.beta0).sub(&b.quartic).is_zero()
        && contract(&b.beta1).is_zero()
        && contract(&beta).sub(&b.quartic).is_zero();

    let front = ring.parse("2*y2*y4").expect("fixed polynomial parses");
    let second = (0..4).all(|j| {
        front
            .mul(&beta[j])
            .sub(&b.beta_tilde[j])
            .sub(&q1.mul(&b.beta1[j]))
            .is_zero()
    });

    let y1y3 = ring.parse("y1*y3").expect("fixed polynomial parses");
    let y2y4 = ring.parse("y2*y4").expect("fixed polynomial parses");
    let third = y1y3
        .mul(&q1)
        .sub(&y2y4.mul(&q2))
        .sub(&b.quartic)
        .is_zero();

    first && second && third
}

/// Variable header required in an octic input file: four coefficient
/// names followed by four coordinate names.
pub const OCTIC_VARS: [&str; 8] = ["c0", "c1", "c2", "c3", "x1", "x2", "x3", "x4"];

/// An octic form read from text: an 8-variable polynomial over the
/// rationals, homogeneous of degree 8 in the coordinate block.
#[derive(Debug, Clone)]
pub struct OcticInput {
    pub ring: QRing,
    pub poly: QPoly,
}

fn file_error(origin: &str, message: impl Into<String>) -> Error {
    Error::FileError {
        path: origin.to_string(),
        message: message.into(),
    }
}

/// Parses octic input text. The first line must be a `vars:` header
/// listing exactly the eight expected names in order; the remainder of
/// the text is the polynomial. `origin` labels error messages, usually
/// with the source path.
pub fn parse_octic_text(text: &str, origin: &str) -> Result<OcticInput> {
    let mut lines = text.splitn(2, '\n');
    let header = lines.next().unwrap_or("").trim();
    let body = lines.next().unwrap_or("");
    let names = header
        .strip_prefix("vars:")
        .ok_or_else(|| file_error(origin, "first line must start with `vars:`"))?;
    let names: Vec<&str> = names.split_whitespace().collect();
    if names != OCTIC_VARS {
        return Err(file_error(
            origin,
            format!(
                "variable header must list exactly `{}`, found `{}`",
                OCTIC_VARS.join(" "),
                names.join(" ")
            ),
        ));
    }
    if body.trim().is_empty() {
        return Err(file_error(origin, "missing polynomial body after the header"));
    }
    let ring = qring(&OCTIC_VARS);
    let poly = ring
        .parse(body)
        .map_err(|e| file_error(origin, format!("cannot parse polynomial: {e}")))?;
    let x_weights = [0, 0, 0, 0, 1, 1, 1, 1];
    match poly.homogeneous_degree(&x_weights) {
        Some(8) => Ok(OcticInput { ring, poly }),
        other => Err(Error::DegreeMismatch(format!(
            "octic from `{origin}` must be homogeneous of degree 8 in x1..x4, found {}",
            match other {
                Some(d) => format!("degree {d}"),
                None => "an inhomogeneous polynomial".to_string(),
            }
        ))),
    }
}

/// Reads and parses an octic input file. See [`parse_octic_text`] for
/// the format.
pub fn parse_octic_file(path: &Path) -> Result<OcticInput> {
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| file_error(&origin, format!("cannot read file: {e}")))?;
    parse_octic_text(&text, &origin)
}

/// The three composed conditions for an octic form F(c, x), evaluated
/// over a prime field with forward-mode derivatives:
///
/// * row 1: F itself;
/// * row 2: the companion quartic evaluated on the x-gradient of F;
/// * row 3: F evaluated at (c, beta_tilde(gradient of F)).
///
/// Differentiation is with respect to the four coordinates x1..x4, so
/// the Jacobian has three rows and four columns. Rank 3 at any sampled
/// point certifies that the three conditions are independent for the
/// given octic.
#[derive(Debug, Clone)]
pub struct Star3System {
    octic: FpPoly,
    gradient: [FpPoly; 4],
    quartic: FpPoly,
    beta_tilde: [FpPoly; 4],
}

impl RankProbeSystem for Star3System {
    fn ambient_vars(&self) -> usize {
        8
    }

    fn rows(&self) -> usize {
        3
    }

    fn cols(&self) -> usize {
        4
    }

    fn jacobian_at(&self, field: &PrimeField, point: &[u64]) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![0u64; 4]; 3];
        for j in 0..4 {
            // Seed the dual number on coordinate x_{j+1}; the chain rule
            // then propagates d/dx_{j+1} through every composition.
            let dual_point: Vec<Dual> = point
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if i == 4 + j {
                        Dual::seeded(v)
                    } else {
                        Dual::constant(v)
                    }
                })
                .collect();
            rows[0][j] = self.octic.eval_dual(field, &dual_point).eps;
            let grad: Vec<Dual> = self
                .gradient
                .iter()
                .map(|d| d.eval_dual(field, &dual_point))
                .collect();
            rows[1][j] = self.quartic.eval_dual(field, &grad).eps;
            let bt: Vec<Dual> = self
                .beta_tilde
                .iter()
                .map(|b| b.eval_dual(field, &grad))
                .collect();
            let mut composed: Vec<Dual> =
                point[..4].iter().map(|&v| Dual::constant(v)).collect();
            composed.extend(bt);
            rows[2][j] = self.octic.eval_dual(field, &composed).eps;
        }
        rows
    }
}

/// Compiles an octic input into the three-row probe system over a prime
/// field. The gradient is expanded symbolically over the rationals
/// before reduction, so the probe evaluates exact residues.
pub fn star3_system_from_octic(octic: &OcticInput, field: &PrimeField) -> Result<Star3System> {
    let to_fp = |p: &QPoly| FpPoly::from_poly(p, field);
    let grad: Vec<FpPoly> = (4..8)
        .map(|v| to_fp(&octic.poly.partial_derivative(v)))
        .collect::<Result<_>>()?;
    let gradient: [FpPoly; 4] = grad.try_into().expect("four coordinates");

    let b = beta_map();
    let yring = qring(&["y1", "y2", "y3", "y4"]);
    let drop_lambda = |p: &QPoly| p.embed_into(&yring, |c| c.clone());
    let bt: Vec<FpPoly> = b
        .beta_tilde
        .iter()
        .map(|p| to_fp(&drop_lambda(p)))
        .collect::<Result<_>>()?;
    let beta_tilde: [FpPoly; 4] = bt.try_into().expect("four components");

    Ok(Star3System {
        octic: to_fp(&octic.poly)?,
        gradient,
        quartic: to_fp(&drop_lambda(&b.quartic))?,
        beta_tilde,
    })
}

/// Result of the randomized rank probe for an octic file.
#[derive(Debug, Clone)]
pub struct Star3Report {
    pub probe: RankProbeReport,
    /// True when some sampled point attains the full rank 3.
    pub claim_verified: bool,
}

/// Runs the randomized Jacobian rank probe for the octic in `path` over
/// GF(prime), with `samples` points drawn from the seeded generator.
pub fn star3_rank_probe(path: &Path, prime: u64, samples: u64, seed: u64) -> Result<Star3Report> {
    let octic = parse_octic_file(path)?;
    let field = PrimeField::new(prime)?;
    let system = star3_system_from_octic(&octic, &field)?;
    let probe = random_rank_probe(&system, prime, samples, seed)?;
    let claim_verified = probe.max_rank == 3;
    Ok(Star3Report {
        probe,
        claim_verified,
    })
}
