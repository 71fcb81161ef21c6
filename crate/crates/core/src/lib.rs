//! Exact invariants of Brieskorn manifolds Σ(a₀, …, aₙ).
//!
//! Everything an exponent tuple determines at the level of classical
//! topology and Reeb dynamics is computed here with exact integer and
//! rational arithmetic:
//!
//! - lattice-point signature counts of the Milnor filling and the filling
//!   signature ([`signature`]),
//! - sphere recognition and the bP-group smooth classification
//!   ([`topology`]),
//! - Robbin–Salamon and Conley–Zehnder index formulas ([`indices`]),
//! - graded rank tables for positive symplectic homology and contact
//!   homology of the Σ(2ℓ, 2, …, 2) and Σ(ℓp, p, 2, 2) families
//!   ([`floer`]),
//! - orbit strata and the mean Euler characteristic ([`mec`]),
//! - almost-contact classes via the signature formula ([`classify`]),
//! - the brute-force search for exotic but homotopically standard contact
//!   spheres and the connected-sum constructions in dimensions 11 and 15
//!   ([`search`]).
//!
//! The only floating point in the crate is the clearly-labeled
//! central-limit signature estimator; every invariant is exact.

pub mod arith;
pub mod classify;
mod error;
pub mod floer;
pub mod indices;
pub mod mec;
pub mod search;
pub mod signature;
pub mod topology;

pub use arith::{
    approx_decimal, bernoulli, format_rational, rational_to_f64, s_m_const, sigma_m_const, Budget,
    ExponentTuple, ParamLinear, Rational,
};
pub use classify::{
    ac_group, almost_contact_class, connected_sum_ac, is_homotopically_standard, AcClass, AcGroup,
    AcGroupShape,
};
pub use error::{Error, Result};
pub use floer::{
    ch_ranks_lp, generator_table, relative_homology_ranks, sc_plus_ranks, sh_plus_dim5,
    sh_plus_high_dim, GeneratorEntry, GradedRankTable, Marker,
};
pub use indices::{
    generator_degree, principal_rs_index, rs_index, ustilovsky_cz, ustilovsky_cz_p, OrbitKind,
    OrbitLabel,
};
pub use mec::{
    chi_m_connected_sum, euler_char_s1, frequency, mean_euler_characteristic, orbit_strata,
    standard_sphere_chi_m, MecResult, OrbitStratum,
};
pub use search::{
    factorizations, find_trivial_ac_combo, scaled_family, search_exotic_spheres,
    search_with_profile, ComboRecipe, ScaledFamily, SearchHit, SearchProfile, DIM7_PROFILE,
};
pub use signature::{
    asymptotic_ratio, family_signature, signature_counts_fast, signature_counts_naive,
    signature_estimate_clt, CltEstimate, FamilySign, FamilySignature, SignatureCount,
};
pub use topology::{
    diffeo_class, middle_betti, sigma_ell_diffeo_type, sphere_criterion, DiffeoClass,
    SigmaEllType, SphereCondition, SphereVerdict,
};

/// Re-exported big-integer types used in public signatures.
pub use num_bigint::{BigInt, BigUint};
