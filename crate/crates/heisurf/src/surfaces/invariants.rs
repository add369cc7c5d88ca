//! Numeric invariants of the surfaces produced by each family.

use super::FamilyName;

/// Numeric invariants of the quotient surface S and of the covering
/// surface upstairs, for one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumericInvariants {
    /// Degree of the map to the abelian surface.
    pub d: u32,
    /// Order parameter of the group type: the group has delta^2
    /// translation-character pairs.
    pub delta: u32,
    /// Self-intersection of the canonical class of S.
    pub k_squared: u32,
    /// Self-intersection of the canonical class of the covering surface.
    pub k_squared_cover: u32,
    /// Holomorphic Euler characteristic of S.
    pub chi: u32,
    /// Geometric genus of S.
    pub p_g: u32,
    /// Irregularity of S.
    pub q: u32,
    /// Second Chern class of the rank-two kernel sheaf, where the family
    /// records it.
    pub c2_sheaf: Option<u32>,
}

impl NumericInvariants {
    /// The covering surface is an unramified quotient cover of degree
    /// delta^2, so its canonical self-intersection and Euler
    /// characteristic both scale by delta^2.
    pub fn cover_relations_hold(&self) -> bool {
        let order = self.delta * self.delta;
        self.k_squared_cover == order * self.k_squared && self.chi_cover() == order * self.chi
    }

    /// Holomorphic Euler characteristic of the covering surface.
    pub fn chi_cover(&self) -> u32 {
        self.delta * self.delta * self.chi
    }
}

/// Invariant table for the built-in families.
pub fn numeric_invariants(name: FamilyName) -> NumericInvariants {
    match name {
        FamilyName::Chpp => NumericInvariants {
            d: 3,
            delta: 2,
            k_squared: 5,
            k_squared_cover: 20,
            chi: 1,
            p_g: 2,
            q: 2,
            c2_sheaf: None,
        },
        FamilyName::Pp4 => NumericInvariants {
            d: 4,
            delta: 3,
            k_squared: 6,
            k_squared_cover: 54,
            chi: 1,
            p_g: 2,
            q: 2,
            c2_sheaf: Some(18),
        },
        FamilyName::Hesse3 => NumericInvariants {
            d: 3,
            delta: 3,
            k_squared: 6,
            k_squared_cover: 54,
            chi: 1,
            p_g: 3,
            q: 3,
            c2_sheaf: None,
        },
        FamilyName::Ac3 => NumericInvariants {
            d: 3,
            delta: 3,
            k_squared: 6,
            k_squared_cover: 54,
            chi: 1,
            p_g: 2,
            q: 2,
            c2_sheaf: None,
        },
        FamilyName::Quartic4 => NumericInvariants {
            d: 4,
            delta: 4,
            k_squared: 6,
            k_squared_cover: 96,
            chi: 1,
            p_g: 3,
            q: 3,
            c2_sheaf: None,
        },
    }
}

/// Zeuthen-Segre count of singular members of a genus-2 pencil on a
/// blown-up abelian surface: the Euler number of the blow-up equals
/// -2 D^2 + mu, so the number mu of singular fibers counted with
/// multiplicity is euler_blowup + 2 * d_squared.
pub fn zeuthen_segre_count(d_squared: u32, euler_blowup: u32) -> u32 {
    euler_blowup + 2 * d_squared
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_relations_hold_for_all_families() {
        for f in FamilyName::all() {
            let inv = numeric_invariants(f);
            assert!(inv.cover_relations_hold(), "family {}", f.as_str());
            assert_eq!(inv.chi, 1 + inv.p_g - inv.q);
        }
    }

    #[test]
    fn chpp_canonical_numbers() {
        let inv = numeric_invariants(FamilyName::Chpp);
        assert_eq!(
            (inv.d, inv.delta, inv.k_squared, inv.k_squared_cover, inv.chi),
            (3, 2, 5, 20, 1)
        );
        assert_eq!((inv.p_g, inv.q), (2, 2));
        assert_eq!(inv.c2_sheaf, None);
    }

    #[test]
    fn degree_three_families_satisfy_k_squared_delta_plus_three() {
        for f in [
            FamilyName::Chpp,
            FamilyName::Pp4,
            FamilyName::Hesse3,
            FamilyName::Ac3,
        ] {
            let inv = numeric_invariants(f);
            assert_eq!(inv.k_squared, inv.delta + 3, "family {}", f.as_str());
        }
    }

    #[test]
    fn pp4_kernel_sheaf_chern_number() {
        let inv = numeric_invariants(FamilyName::Pp4);
        assert_eq!(inv.c2_sheaf, Some(18));
        assert_eq!(
            inv.c2_sheaf,
            Some(inv.delta * inv.delta * (inv.k_squared - 4))
        );
        assert_eq!((inv.d, inv.delta, inv.k_squared, inv.k_squared_cover), (4, 3, 6, 54));
    }

    #[test]
    fn quartic_family_tables() {
        let inv = numeric_invariants(FamilyName::Quartic4);
        assert_eq!(inv.k_squared_cover, 6 * inv.delta * inv.delta);
        assert_eq!(inv.chi_cover(), inv.delta * inv.delta);
        assert_eq!((inv.p_g, inv.q), (3, 3));
    }

    #[test]
    fn singular_fiber_count_for_the_genus_two_pencil() {
        // Blowing up the four base points of the pencil on an abelian
        // surface gives Euler number 0 + 4 = 4; with D^2 = 4 the count
        // is 4 + 8 = 12.
        assert_eq!(zeuthen_segre_count(4, 4), 12);
        assert_eq!(zeuthen_segre_count(0, 0), 0);
        assert_eq!(zeuthen_segre_count(6, 4), 16);
    }
}
