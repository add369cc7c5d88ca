//! Matrix models of Heisenberg group elements.
//!
//! The representation space V has one basis vector per point of
//! H = Z/d1 x Z/d2. A translation by t sends the basis vector at m to the
//! basis vector at m - t, a character chi scales the basis vector at m by
//! chi(m), and the scalar generator acts by the primitive n-th root of
//! unity. The dual space action is the inverse transpose.

use crate::error::Result;
use crate::exactmath::{
    identity, mat_mul, scalar_mul, CycElem, CyclotomicField, Matrix, RingOps,
};
use crate::heis::{check_delta_bound, HeisElement, HeisType};

/// Default cap on the representation dimension delta.
pub const DEFAULT_DELTA_BOUND: u32 = 12;

/// A Heisenberg type together with its cyclotomic coefficient field.
#[derive(Debug, Clone)]
pub struct Representation {
    htype: HeisType,
    field: CyclotomicField,
}

/// One verified relation, by description.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub description: String,
    pub ok: bool,
}

/// Outcome of checking the defining matrix relations of a representation.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

impl Representation {
    /// Builds the representation of a type, refusing dimensions above
    /// [`DEFAULT_DELTA_BOUND`].
    pub fn new(htype: HeisType) -> Result<Self> {
        Self::with_bound(htype, DEFAULT_DELTA_BOUND)
    }

    /// Builds the representation with an explicit dimension cap.
    pub fn with_bound(htype: HeisType, bound: u32) -> Result<Self> {
        check_delta_bound(&htype, bound)?;
        let field = CyclotomicField::new(htype.exponent());
        Ok(Representation { htype, field })
    }

    pub fn htype(&self) -> &HeisType {
        &self.htype
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn delta(&self) -> usize {
        self.htype.delta() as usize
    }

    /// Matrix of a group element on V. The basis is indexed by group
    /// points in the order of [`HeisType::group_points`].
    pub fn matrix(&self, g: &HeisElement) -> Matrix<CycElem> {
        let n = self.delta();
        let ty = &self.htype;
        let f = &self.field;
        let mut m = Matrix::from_fn(n, n, |_, _| f.zero());
        for p in ty.group_points() {
            let col = ty.point_index(p);
            let target = ty.reduce_pair((p.0 as i64 - g.t.0 as i64, p.1 as i64 - g.t.1 as i64));
            let row = ty.point_index(target);
            let exp = g.scalar as i64 + ty.pairing_exponent(g.chi, p) as i64;
            m[[row, col]] = f.zeta_pow(exp);
        }
        m
    }

    /// Matrix of a group element on the dual of V: the inverse transpose
    /// of [`Representation::matrix`].
    pub fn dual_matrix(&self, g: &HeisElement) -> Matrix<CycElem> {
        // The inverse of a monomial matrix is again monomial, so invert
        // group-theoretically rather than by elimination.
        let inv = self.matrix(&self.htype.inverse(g));
        inv.transpose()
    }

    /// The involution sending the basis vector at m to the one at -m.
    pub fn inversion_involution(&self) -> Matrix<CycElem> {
        let n = self.delta();
        let ty = &self.htype;
        let f = &self.field;
        let mut m = Matrix::from_fn(n, n, |_, _| f.zero());
        for p in ty.group_points() {
            let col = ty.point_index(p);
            let neg = ty.reduce_pair((-(p.0 as i64), -(p.1 as i64)));
            m[[ty.point_index(neg), col]] = f.one();
        }
        m
    }

    fn mats_equal(&self, a: &Matrix<CycElem>, b: &Matrix<CycElem>) -> bool {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return false;
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if a[[i, j]] != b[[i, j]] {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the defining relations in matrix form: generator orders,
    /// commutation of translations with each other and characters with
    /// each other, the braiding relation between a translation and a
    /// character, the scalar generator, and compatibility with the
    /// abstract group law on a sample of products.
    pub fn verify_relations(&self) -> RelationReport {
        let ty = self.htype;
        let f = &self.field;
        let mut checks = Vec::new();
        let id = identity(f, self.delta());

        let gens = [
            ("translation 0", ty.translation_gen(0), ty.d1() as i64),
            ("translation 1", ty.translation_gen(1), ty.d2() as i64),
            ("character 0", ty.character_gen(0), ty.d1() as i64),
            ("character 1", ty.character_gen(1), ty.d2() as i64),
        ];
        for (name, g, order) in &gens {
            let mut acc = id.clone();
            let mg = self.matrix(g);
            for _ in 0..*order {
                acc = mat_mul(f, &acc, &mg);
            }
            checks.push(RelationCheck {
                description: format!("{} has order dividing {}", name, order),
                ok: self.mats_equal(&acc, &id),
            });
        }

        // Translations commute among themselves, characters likewise.
        for (a, b, label) in [
            (ty.translation_gen(0), ty.translation_gen(1), "translations"),
            (ty.character_gen(0), ty.character_gen(1), "characters"),
        ] {
            let ma = self.matrix(&a);
            let mb = self.matrix(&b);
            checks.push(RelationCheck {
                description: format!("{} commute", label),
                ok: self.mats_equal(&mat_mul(f, &ma, &mb), &mat_mul(f, &mb, &ma)),
            });
        }

        // Braiding: rho(t) rho(chi) = chi(t) rho(chi) rho(t).
        for ti in 0..2usize {
            for ci in 0..2usize {
                let t = ty.translation_gen(ti);
                let c = ty.character_gen(ci);
                let mt = self.matrix(&t);
                let mc = self.matrix(&c);
                let lhs = mat_mul(f, &mt, &mc);
                let scalar = f.zeta_pow(ty.pairing_exponent(c.chi, t.t) as i64);
                let rhs = scalar_mul(f, &scalar, &mat_mul(f, &mc, &mt));
                checks.push(RelationCheck {
                    description: format!(
                        "translation {} and character {} braid by the pairing value",
                        ti, ci
                    ),
                    ok: self.mats_equal(&lhs, &rhs),
                });
            }
        }

        // Scalar generator acts by the primitive root times the identity.
        let center = scalar_mul(f, &f.zeta_pow(1), &id);
        checks.push(RelationCheck {
            description: "scalar generator acts by the primitive root".to_string(),
            ok: self.mats_equal(&self.matrix(&ty.center_gen()), &center),
        });

        // Homomorphism property on a small sample of products.
        let sample = [
            (ty.translation_gen(1), ty.character_gen(1)),
            (ty.character_gen(1), ty.translation_gen(1)),
            (
                ty.compose(&ty.translation_gen(0), &ty.character_gen(1)),
                ty.compose(&ty.center_gen(), &ty.translation_gen(1)),
            ),
        ];
        for (i, (a, b)) in sample.iter().enumerate() {
            let prod = mat_mul(f, &self.matrix(a), &self.matrix(b));
            let direct = self.matrix(&ty.compose(a, b));
            checks.push(RelationCheck {
                description: format!("matrix product matches group law, sample {}", i),
                ok: self.mats_equal(&prod, &direct),
            });
        }

        // Inversion involution conjugates a translation to its inverse
        // and a character to its inverse.
        let iota = self.inversion_involution();
        for (name, g, ginv) in [
            (
                "translation",
                ty.translation_gen(1),
                ty.inverse(&ty.translation_gen(1)),
            ),
            (
                "character",
                ty.character_gen(1),
                ty.inverse(&ty.character_gen(1)),
            ),
        ] {
            let lhs = mat_mul(f, &mat_mul(f, &iota, &self.matrix(&g)), &iota);
            let rhs = self.matrix(&ginv);
            checks.push(RelationCheck {
                description: format!("inversion conjugates a {} to its inverse", name),
                ok: self.mats_equal(&lhs, &rhs),
            });
        }

        RelationReport { checks }
    }
}
