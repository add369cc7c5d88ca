//! Elimination theory: resultants, discriminants, Groebner bases,
//! projective emptiness certificates, and randomized Jacobian rank probes.

mod files;
mod groebner;
mod probe;
mod resultant;

pub use files::{parse_ideal_text, read_ideal_file, read_ideal_file_with_order, IdealFile};
pub use groebner::{
    groebner, groebner_with_limit, is_projectively_empty, normal_form, pair_limit_from_env,
    s_polynomial, EmptinessCertificate, DEFAULT_PAIR_LIMIT, PAIR_LIMIT_ENV,
};
pub use probe::{
    random_rank_probe, random_rank_probe_polys, Dual, FpPoly, PolySystem, RankProbeReport,
    RankProbeSystem, RankWitness,
};
pub use resultant::{
    cubic_discriminant, cubic_discriminant_poly, sylvester_matrix, sylvester_resultant,
    univariate_discriminant,
};
