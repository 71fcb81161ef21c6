//! Brute-force search for exotic but homotopically standard contact
//! spheres, scaled-family constructors, and the two-family connected-sum
//! solver for higher dimensions.
//!
//! On S⁷, a Brieskorn link is a standard smooth sphere with standard
//! almost-contact class iff its counts hit σ⁺ = 472s, σ⁻ = 248s (hence
//! μ = 720s) for some positive integer s. The search enumerates, for each
//! s, the factorizations of 720s into five parts bᵢ ≥ 1, forms the
//! candidate exponents aᵢ = bᵢ + 1, filters by the exact counts and then by
//! the sphere criterion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;

use crate::arith::{Budget, ExponentTuple, ParamLinear, Rational};
use crate::classify::{almost_contact_class, connected_sum_ac, AcClass};
use crate::error::{Error, Result};
use crate::mec::{chi_m_connected_sum, mean_euler_characteristic, standard_sphere_chi_m};
use crate::signature::{
    family_signature, signature_counts_fast, FamilySign, FamilySignature, SignatureCount,
};
use crate::topology::{diffeo_class, sphere_criterion};

/// Linear count targets of a search dimension: a hit at scale s must have
/// σ⁺ = `sigma_plus_per_s`·s, σ⁻ = `sigma_minus_per_s`·s, and the tuple has
/// `parts` exponents with μ = `mu_per_s`·s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchProfile {
    pub parts: usize,
    pub mu_per_s: u128,
    pub sigma_plus_per_s: u128,
    pub sigma_minus_per_s: u128,
}

/// The dimension-7 profile: μ = 720s, σ⁺ = 472s, σ⁻ = 248s.
pub const DIM7_PROFILE: SearchProfile = SearchProfile {
    parts: 5,
    mu_per_s: 720,
    sigma_plus_per_s: 472,
    sigma_minus_per_s: 248,
};

/// All non-increasing sequences of the given length with entries ≥ 1 and
/// the given product; exhaustive, no duplicates, largest first part first.
pub fn factorizations(product: u128, parts: u32) -> Vec<Vec<u64>> {
    assert!(product >= 1);
    assert!(parts >= 1);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts as usize);
    fn rec(remaining: u128, parts: u32, max_part: u128, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if remaining <= max_part {
                current.push(remaining as u64);
                out.push(current.clone());
                current.pop();
            }
            return;
        }
        let mut d = remaining.min(max_part);
        while d >= 1 {
            if remaining.is_multiple_of(d) {
                current.push(d as u64);
                rec(remaining / d, parts - 1, d, current, out);
                current.pop();
            }
            d -= 1;
        }
    }
    rec(product, parts, product, &mut current, &mut out);
    out
}

/// A confirmed search hit with its audit verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub s: u64,
    pub tuple: ExponentTuple,
    pub counts: SignatureCount,
    pub sphere: bool,
    pub standard_smooth: bool,
    pub ac_zero: bool,
}

/// Runs the search over s ∈ [s_min, s_max] with the dimension-7 profile.
pub fn search_exotic_spheres(s_min: u64, s_max: u64, budget: Budget) -> Result<Vec<SearchHit>> {
    search_with_profile(&DIM7_PROFILE, s_min, s_max, budget, |_| {})
}

/// Profile-driven search. `on_hit` is called for each hit as soon as its
/// scale s is finished, in canonical order (ascending s, then ascending
/// lexicographic comparison of the descending exponent tuples), so the
/// emission sequence is identical for any worker count.
pub fn search_with_profile(
    profile: &SearchProfile,
    s_min: u64,
    s_max: u64,
    budget: Budget,
    mut on_hit: impl FnMut(&SearchHit),
) -> Result<Vec<SearchHit>> {
    assert!(1 <= s_min && s_min <= s_max);
    let mut hits = Vec::new();
    for s in s_min..=s_max {
        let mu = profile.mu_per_s * s as u128;
        let candidates = factorizations(mu, profile.parts as u32);
        let mut found: Vec<SearchHit> = candidates
            .par_iter()
            .map(|parts| evaluate_candidate(profile, s, parts, budget))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        found.sort_by(|x, y| x.tuple.cmp(&y.tuple));
        for hit in &found {
            on_hit(hit);
        }
        hits.extend(found);
    }
    Ok(hits)
}

fn evaluate_candidate(
    profile: &SearchProfile,
    s: u64,
    parts: &[u64],
    budget: Budget,
) -> Result<Option<SearchHit>> {
    let tuple = ExponentTuple::new(parts.iter().map(|&b| b + 1))?;
    let counts = signature_counts_fast(&tuple, budget)?;
    if counts.sigma_plus != profile.sigma_plus_per_s * s as u128
        || counts.sigma_minus != profile.sigma_minus_per_s * s as u128
    {
        return Ok(None);
    }
    let verdict = sphere_criterion(&tuple)?;
    if !verdict.is_sphere() {
        return Ok(None);
    }
    let class = diffeo_class(&tuple, budget)?;
    let standard_smooth = class.is_standard_smooth == Some(true);
    let ac_zero = standard_smooth
        && almost_contact_class(&tuple, budget)
            .map(|c| c.is_zero())
            .unwrap_or(false);
    Ok(Some(SearchHit {
        s,
        tuple,
        counts,
        sphere: true,
        standard_smooth,
        ac_zero,
    }))
}

/// The family Σ(k·lcm(base) ± 1, base…), scaling linearly in k.
#[derive(Debug, Clone)]
pub struct ScaledFamily {
    family: FamilySignature,
    a0: ParamLinear,
}

/// Builds the family over the least common multiple of the base exponents.
pub fn scaled_family(base: &ExponentTuple, sign: FamilySign, budget: Budget) -> Result<ScaledFamily> {
    let lcm = base.lcm()?;
    let modulus = u64::try_from(lcm).map_err(|_| Error::Overflow("family modulus"))?;
    let family = family_signature(base, modulus, sign, budget)?;
    let a0 = ParamLinear::new(modulus as i64, sign.offset())?;
    Ok(ScaledFamily { family, a0 })
}

impl ScaledFamily {
    pub fn base(&self) -> &ExponentTuple {
        self.family.base()
    }

    pub fn sign(&self) -> FamilySign {
        self.family.sign()
    }

    /// The first exponent as a function of k.
    pub fn a0(&self) -> ParamLinear {
        self.a0
    }

    pub fn member(&self, k: u64) -> Result<ExponentTuple> {
        self.family.member(k)
    }

    /// k = 1 counts; see [`FamilySignature::per_k`].
    pub fn per_k(&self) -> SignatureCount {
        self.family.per_k()
    }

    pub fn predicted_counts(&self, k: u64) -> Option<SignatureCount> {
        self.family.predicted_counts(k)
    }

    pub fn predicted_signature(&self, k: u64) -> i128 {
        self.family.predicted_signature(k)
    }

    pub fn member_mu(&self, k: u64) -> Result<u128> {
        Ok(self.member(k)?.milnor_number())
    }

    /// Almost-contact class of the member, when it is a standard smooth
    /// sphere.
    pub fn member_ac(&self, k: u64, budget: Budget) -> Result<AcClass> {
        almost_contact_class(&self.member(k)?, budget)
    }
}

/// A zero-almost-contact connected-sum recipe built from two sphere
/// families with classes of opposite sign.
#[derive(Debug, Clone, PartialEq)]
pub struct ComboRecipe {
    pub sigma1: ExponentTuple,
    pub sigma2: ExponentTuple,
    pub ac1: BigInt,
    pub ac2: BigInt,
    /// Copies of sigma1: |ac₂|/gcd(ac₁, |ac₂|).
    pub count1: u128,
    /// Copies of sigma2: ac₁/gcd(ac₁, |ac₂|).
    pub count2: u128,
    pub chi_m: Rational,
    pub ac_total: AcClass,
    /// True when χ_m differs from the standard sphere's −1/2.
    pub nontrivial: bool,
}

/// Builds the minimal zero-ac combination count1·Σ₁ # count2·Σ₂ with
/// count1·ac₁ + count2·ac₂ = 0, and computes its mean Euler characteristic.
///
/// Requires both tuples to be standard smooth spheres of the same dimension
/// with ac₁ > 0 > ac₂ in the integer component.
pub fn find_trivial_ac_combo(
    sigma1: &ExponentTuple,
    sigma2: &ExponentTuple,
    budget: Budget,
) -> Result<ComboRecipe> {
    if sigma1.dimension() != sigma2.dimension() {
        return Err(Error::DimensionMismatch(sigma1.dimension(), sigma2.dimension()));
    }
    let class1 = almost_contact_class(sigma1, budget)?;
    let class2 = almost_contact_class(sigma2, budget)?;
    let ac1 = class1.primary.clone();
    let ac2 = class2.primary.clone();
    if !(ac1.is_positive() && ac2.is_negative()) {
        return Err(Error::SignConditionFailed);
    }
    let g = ac1.gcd(&ac2.abs());
    let count1 = u128::try_from(ac2.abs() / &g).map_err(|_| Error::Overflow("copy count"))?;
    let count2 = u128::try_from(&ac1 / &g).map_err(|_| Error::Overflow("copy count"))?;

    let chi1 = mean_euler_characteristic(sigma1, budget)?.value;
    let chi2 = mean_euler_characteristic(sigma2, budget)?.value;
    let n = sigma1.n() as u64;
    let chi_m = chi_m_connected_sum(&[(chi1, count1), (chi2, count2)], n)?;

    let ac_total = connected_sum_ac(&[(class1, count1), (class2, count2)], n)?;
    assert!(ac_total.is_zero(), "combination must cancel by construction");

    let reference = standard_sphere_chi_m(sigma1.dimension())
        .unwrap_or_else(|_| Rational::new(BigInt::from(-1), BigInt::from(2)));
    let nontrivial = chi_m != reference;
    Ok(ComboRecipe {
        sigma1: sigma1.clone(),
        sigma2: sigma2.clone(),
        ac1,
        ac2,
        count1,
        count2,
        chi_m,
        ac_total,
        nontrivial,
    })
}
