//! Robbin–Salamon indices of the periodic critical submanifolds, Morse–Bott
//! generator degrees, and the Conley–Zehnder indices of the perturbed Reeb
//! orbits on Σ(2ℓ, 2, 2, 2) and Σ(ℓp, p, 2, 2).
//!
//! All periods are multiples of π/2; a period is identified by its integer
//! parameter L (period = L·π/2). For the space of L-periodic points,
//!
//!   μ_RS = Σⱼ (⌊L/aⱼ⌋ + ⌈L/aⱼ⌉) − 2L,
//!
//! total over every L — whether a stratum actually exists at L is tracked by
//! the orbit-stratum enumeration, not here.

use crate::arith::ExponentTuple;
use crate::error::{Error, Result};

/// A closed Reeb orbit of the perturbed contact form, with its cover count.
///
/// γ⁺ and γ⁻ live in the split-off coordinate plane; γ^{0,±} (and the p
/// branch orbits γ^{0,k}) live where the first two coordinates are nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitKind {
    GammaPlus,
    GammaMinus,
    GammaZeroPlus,
    GammaZeroMinus,
    /// Branch orbit γ^{0,k} of the Σ(ℓp, p, 2, 2) family, 0 ≤ k < p.
    GammaZeroBranch(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitLabel {
    pub kind: OrbitKind,
    /// Cover multiplicity N ≥ 1.
    pub multiplicity: u64,
}

impl OrbitLabel {
    pub fn new(kind: OrbitKind, multiplicity: u64) -> Self {
        assert!(multiplicity >= 1, "orbit multiplicity must be >= 1");
        OrbitLabel { kind, multiplicity }
    }
}

impl std::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.multiplicity;
        let prefix = if n == 1 {
            String::new()
        } else {
            format!("{n}")
        };
        match self.kind {
            OrbitKind::GammaPlus => write!(f, "{prefix}g+"),
            OrbitKind::GammaMinus => write!(f, "{prefix}g-"),
            OrbitKind::GammaZeroPlus => write!(f, "{prefix}g0+"),
            OrbitKind::GammaZeroMinus => write!(f, "{prefix}g0-"),
            OrbitKind::GammaZeroBranch(k) => write!(f, "{prefix}g0[{k}]"),
        }
    }
}

fn floor_div(a: u128, b: u128) -> u128 {
    a / b
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// Robbin–Salamon index of the L-periodic set: Σⱼ(⌊L/aⱼ⌋+⌈L/aⱼ⌉) − 2L.
pub fn rs_index(a: &ExponentTuple, period: u128) -> i128 {
    assert!(period >= 1);
    let mut total: i128 = 0;
    for &aj in a.exponents() {
        total += (floor_div(period, aj as u128) + ceil_div(period, aj as u128)) as i128;
    }
    total - 2 * period as i128
}

/// Morse–Bott generator degree μ_RS + ind − ½(dim − 1) for a critical
/// manifold of odd dimension `dim_crit`. An even dimension would give a
/// half-integer degree and is rejected.
pub fn generator_degree(mu_rs: i128, morse_index: u64, dim_crit: u64) -> Result<i128> {
    if dim_crit.is_multiple_of(2) {
        return Err(Error::NonIntegerDegree(dim_crit));
    }
    Ok(mu_rs + morse_index as i128 - ((dim_crit - 1) / 2) as i128)
}

/// Index of the principal orbit: rs_index at L = lcm(aᵢ), which equals
/// 2·lcm(aᵢ)·(Σ 1/aⱼ − 1). Always even; may be zero or negative.
pub fn principal_rs_index(a: &ExponentTuple) -> Result<i128> {
    Ok(rs_index(a, a.lcm()?))
}

/// Conley–Zehnder indices of the perturbed orbits on Σ(2ℓ, 2, 2, 2):
///
///   μ_CZ(Nγ^{0,±}) = 2N + 2Nℓ,
///   μ_CZ(Nγ⁺) = 2⌈N/ℓ⌉ + 2N − 2,
///   μ_CZ(Nγ⁻) = 2⌊N/ℓ⌋ + 2N + 2.
///
/// Branch orbits belong to the Σ(ℓp, p, 2, 2) family and are rejected.
pub fn ustilovsky_cz(ell: u64, orbit: OrbitLabel) -> Result<i128> {
    assert!(ell >= 1);
    let n = orbit.multiplicity as u128;
    let l = ell as u128;
    let value = match orbit.kind {
        OrbitKind::GammaZeroPlus | OrbitKind::GammaZeroMinus => 2 * n + 2 * n * l,
        OrbitKind::GammaPlus => 2 * ceil_div(n, l) + 2 * n - 2,
        OrbitKind::GammaMinus => 2 * floor_div(n, l) + 2 * n + 2,
        OrbitKind::GammaZeroBranch(_) => return Err(Error::WrongFamily),
    };
    Ok(value as i128)
}

/// Conley–Zehnder indices of the perturbed orbits on Σ(ℓp, p, 2, 2):
///
///   μ_CZ(Nγ^{0,k}) = 2N + 2Nℓ (independent of the branch k),
///   μ_CZ(Nγ⁺) = 2⌈2N/ℓp⌉ + 2⌈2N/p⌉ − 2,
///   μ_CZ(Nγ⁻) = 2⌊2N/ℓp⌋ + 2⌊2N/p⌋ + 2.
///
/// At p = 2 this specializes to [`ustilovsky_cz`].
pub fn ustilovsky_cz_p(ell: u64, p: u64, orbit: OrbitLabel) -> Result<i128> {
    assert!(ell >= 1);
    assert!(p >= 2);
    let n = orbit.multiplicity as u128;
    let (l, p) = (ell as u128, p as u128);
    let value = match orbit.kind {
        OrbitKind::GammaZeroBranch(k) => {
            if (k as u128) >= p {
                return Err(Error::BranchOutOfRange { k, p: p as u64 });
            }
            2 * n + 2 * n * l
        }
        OrbitKind::GammaPlus => 2 * ceil_div(2 * n, l * p) + 2 * ceil_div(2 * n, p) - 2,
        OrbitKind::GammaMinus => 2 * floor_div(2 * n, l * p) + 2 * floor_div(2 * n, p) + 2,
        OrbitKind::GammaZeroPlus | OrbitKind::GammaZeroMinus => return Err(Error::WrongFamily),
    };
    Ok(value as i128)
}
