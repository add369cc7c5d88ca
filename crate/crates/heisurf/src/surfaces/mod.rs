//! Families of bihomogeneous equation systems with Heisenberg symmetry.
//!
//! Each family packages a ring, its defining equations, and the claimed
//! effect of the two group generators on those equations (scaling by a
//! root of unity, or a permutation with scalars). The claims are verified
//! exactly by [`verify_family_equivariance`], which lifts the rational
//! equations to the cyclotomic field and applies the matrix action.

mod chpp;
mod hesse;
mod invariants;
mod pp4;
mod quartic4;

pub use chpp::{
    chpp_base_point_resultant, chpp_discriminant, chpp_family, chpp_invariant_forms,
    chpp_singular_fiber_quartic, ChppDiscriminant,
};
pub use hesse::{
    ac3_family, ac3_smoothness, bilinear_invariant_space, hesse3_family,
    hesse3_lambda_dictionary, hesse_cubic, hesse_dual_sextic, hesse_duality_membership,
    hesse_duality_sampled, hesse_duality_symbolic, hesse_gradient_identity, hesse_q,
    hesse_smoothness_verdict, invariant_cubic_character_split, translation_invariant_cubics,
    DualitySample,
};
pub use invariants::{numeric_invariants, zeuthen_segre_count, NumericInvariants};
pub use pp4::{
    pp4_branch_locus, pp4_branch_sextic, pp4_family, pp4_gamma, pp4_minor_dictionary_holds,
    pp4_pencil, pp4_pencil_poly, pp4_pp_crosscheck, pp4_q, BranchSextic, Pp4Gamma, Pp4Pencil,
    QUADRIC_BASIS,
};
pub use quartic4::{
    beta_identities_hold, beta_map, parse_octic_file, parse_octic_text,
    quartic4_eigenspace_pair, quartic4_family, quartic4_smoothness, star3_rank_probe,
    star3_system_from_octic, BetaMap, OcticInput, QuadricEigenspaces, Star3Report,
    Star3System, OCTIC_VARS,
};

use std::sync::Arc;

use crate::error::Result;
use crate::exactmath::{Rational, Rationals};
use crate::heis::{apply_action, HeisElement, HeisType, Representation};
use crate::poly::{MultiPoly, PolyRing};

/// The five built-in families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Chpp,
    Pp4,
    Hesse3,
    Ac3,
    Quartic4,
}

impl FamilyName {
    pub fn parse(s: &str) -> Option<FamilyName> {
        match s.to_ascii_uppercase().as_str() {
            "CHPP" => Some(FamilyName::Chpp),
            "PP4" => Some(FamilyName::Pp4),
            "HESSE3" => Some(FamilyName::Hesse3),
            "AC3" => Some(FamilyName::Ac3),
            "QUARTIC4" => Some(FamilyName::Quartic4),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Chpp => "CHPP",
            FamilyName::Pp4 => "PP4",
            FamilyName::Hesse3 => "HESSE3",
            FamilyName::Ac3 => "AC3",
            FamilyName::Quartic4 => "QUARTIC4",
        }
    }

    pub fn all() -> [FamilyName; 5] {
        [
            FamilyName::Chpp,
            FamilyName::Pp4,
            FamilyName::Hesse3,
            FamilyName::Ac3,
            FamilyName::Quartic4,
        ]
    }
}

/// A named family parameter, either left symbolic (a ring variable) or
/// specialized to a rational number.
#[derive(Debug, Clone)]
pub enum ParamValue {
    Symbolic,
    Rational(Rational),
}

/// Claimed effect of one generator on the equation list.
#[derive(Debug, Clone)]
pub enum GeneratorEffect {
    /// Equation i maps to zeta^{zeta_powers[i]} times itself.
    Scales { zeta_powers: Vec<i64> },
    /// Equation i maps to zeta^{zeta_powers[i]} times equation images[i].
    Permutes {
        images: Vec<usize>,
        zeta_powers: Vec<i64>,
    },
}

/// One generator of the group together with its family label and its
/// claimed effect on the equations.
#[derive(Debug, Clone)]
pub struct GeneratorAction {
    /// The family's own name for the generator ("g1" or "g2").
    pub label: &'static str,
    pub element: HeisElement,
    pub effect: GeneratorEffect,
}

/// A family of equation systems with Heisenberg symmetry.
#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub name: FamilyName,
    pub heis_type: HeisType,
    pub parameters: Vec<(String, ParamValue)>,
    pub ring: Arc<PolyRing<Rationals>>,
    pub equations: Vec<MultiPoly<Rationals>>,
    /// Ring indices of the variables transforming in the representation
    /// (the x or s block).
    pub vector_vars: Vec<usize>,
    /// Ring indices of the variables transforming in the dual (the y
    /// block).
    pub dual_vars: Vec<usize>,
    pub generator_actions: Vec<GeneratorAction>,
}

impl FamilyDescriptor {
    /// The representation of the family's group type.
    pub fn representation(&self) -> Result<Representation> {
        Representation::new(self.heis_type)
    }
}

/// Checks every claimed generator effect exactly: the rational equations
/// are lifted to the cyclotomic field of the group, each generator is
/// applied by linear substitution, and the image is compared with the
/// claimed scalar multiple or permutation. Returns false on the first
/// mismatch.
pub fn verify_family_equivariance(desc: &FamilyDescriptor) -> Result<bool> {
    let rep = desc.representation()?;
    let field = rep.field().clone();
    let names: Vec<&str> = desc.ring.vars().iter().map(|s| s.as_str()).collect();
    let cring = PolyRing::new(field.clone(), &names, desc.ring.order());
    let lifted: Vec<MultiPoly<_>> = desc
        .equations
        .iter()
        .map(|e| e.embed_into(&cring, |q| field.embed(q)))
        .collect();
    for action in &desc.generator_actions {
        for (i, eq) in lifted.iter().enumerate() {
            let image = apply_action(
                &rep,
                &action.element,
                eq,
                &desc.vector_vars,
                &desc.dual_vars,
            );
            let expected = match &action.effect {
                GeneratorEffect::Scales { zeta_powers } => {
                    eq.scale(&field.zeta_pow(zeta_powers[i]))
                }
                GeneratorEffect::Permutes {
                    images,
                    zeta_powers,
                } => lifted[images[i]].scale(&field.zeta_pow(zeta_powers[i])),
            };
            if image != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in FamilyName::all() {
            assert_eq!(FamilyName::parse(f.as_str()), Some(f));
        }
        assert_eq!(FamilyName::parse("pp4"), Some(FamilyName::Pp4));
        assert_eq!(FamilyName::parse("nope"), None);
    }

    #[test]
    fn all_families_are_equivariant_symbolically() {
        let families = [
            chpp_family(None),
            pp4_family(None),
            hesse3_family(None),
            ac3_family(),
            quartic4_family(None),
        ];
        for fam in &families {
            assert!(
                verify_family_equivariance(fam).unwrap(),
                "family {} failed its equivariance claims",
                fam.name.as_str()
            );
        }
    }

    #[test]
    fn specialized_families_are_equivariant() {
        use crate::exactmath::ratio;
        let families = [
            chpp_family(Some(ratio(1, 1))),
            pp4_family(Some(ratio(-3, 2))),
            hesse3_family(Some(ratio(6, 1))),
            quartic4_family(Some(ratio(2, 1))),
        ];
        for fam in &families {
            assert!(verify_family_equivariance(fam).unwrap());
        }
    }
}
