//! Reeb orbit strata, S¹-equivariant Euler characteristics, frequencies,
//! and the mean Euler characteristic.
//!
//! The Reeb flow rotates coordinate j with speed 4/aⱼ, so the points that
//! are periodic with period L·π/2 are exactly those supported on the
//! coordinates with aⱼ | L. A subset S of indices therefore carves out a
//! stratum iff it is *saturated*: S = {j : aⱼ | L} for L = lcm(aⱼ : j ∈ S).
//! Subsets with fewer than two indices give an empty locus and are dropped.
//!
//! The mean Euler characteristic is assembled from the strata as
//!
//!   χ_m = Σᵢ (−1)^{μ_RS(Σ_{Tᵢ}) − ½ dim(Σ_{Tᵢ}/S¹)} · φᵢ · χ^{S¹}(Σ_{Tᵢ}) / |μ_P|,
//!
//! with φ the frequency of the stratum's period below the principal period
//! and μ_P the principal Robbin–Salamon index (which must not vanish).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{lcm_all, Budget, ExponentTuple, Rational};
use crate::error::{Error, Result};
use crate::indices::rs_index;

/// One Reeb orbit space: a saturated sub-tuple with period L·π/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStratum {
    /// Indices into the canonical exponent tuple.
    pub subset: Vec<usize>,
    /// The exponents themselves, a smaller Brieskorn tuple.
    pub exponents: Vec<u64>,
    /// Integer period parameter L (the period is L·π/2); the lcm of the
    /// sub-tuple.
    pub period: u128,
    /// Dimension 2|S| − 3 of the stratum (always odd).
    pub dim: u64,
    /// Robbin–Salamon index of the stratum, computed in the ambient tuple.
    pub rs: i128,
    /// S¹-equivariant Euler characteristic of the stratum.
    pub chi_s1: i128,
    /// Frequency φ: multiples of this period below the principal one that
    /// avoid every larger stratum period. The principal stratum has φ = 1.
    pub frequency: u128,
}

/// S¹-equivariant Euler characteristic of the Brieskorn manifold of a
/// sub-tuple:
///
///   χ^{S¹} = Σ_{S, |S| ≥ 2} (−1)^{|S|} · (∏_{j∈S} aⱼ) / lcm_{j∈S}(aⱼ),
///
/// obtained by stratifying the S¹-quotient by vanishing coordinates; each
/// open stratum contributes (−1)^{|S|} times the covering factor ∏/lcm.
/// Every term is an integer since the lcm divides the product.
pub fn euler_char_s1(sub: &[u64]) -> Result<i128> {
    assert!(sub.len() >= 2, "stratum needs at least two coordinates");
    let mut total = BigInt::zero();
    for mask in 1u64..(1 << sub.len()) {
        let size = mask.count_ones();
        if size < 2 {
            continue;
        }
        let mut product = BigInt::one();
        let mut lcm = BigInt::one();
        for (i, &a) in sub.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let a = BigInt::from(a);
                lcm = (&lcm / lcm.gcd(&a)) * &a;
                product *= a;
            }
        }
        let (quotient, remainder) = product.div_rem(&lcm);
        if !remainder.is_zero() {
            return Err(Error::NonIntegerResult);
        }
        if size % 2 == 0 {
            total += quotient;
        } else {
            total -= quotient;
        }
    }
    i128::try_from(&total).map_err(|_| Error::Overflow("equivariant Euler characteristic"))
}

/// Frequency of a stratum period: the number of multiples m·L below the
/// principal period that are not multiples of any strictly larger stratum
/// period. The principal stratum returns 1 by convention.
pub fn frequency(period: u128, principal: u128, larger: &[u128]) -> u128 {
    if period == principal {
        return 1;
    }
    let mut count = 0;
    let mut multiple = period;
    while multiple < principal {
        if larger.iter().all(|&l| !multiple.is_multiple_of(l)) {
            count += 1;
        }
        multiple += period;
    }
    count
}

/// Enumerates all orbit strata, sorted by increasing period. The last entry
/// is the principal stratum (full index set, L = lcm of all exponents).
pub fn orbit_strata(a: &ExponentTuple, budget: Budget) -> Result<Vec<OrbitStratum>> {
    let exps = a.exponents();
    let count = exps.len();
    if count > 32 {
        return Err(Error::Overflow("stratum subset enumeration"));
    }
    budget.check(1u128 << count)?;

    // distinct saturated subsets, keyed by period
    let mut by_period: Vec<(u128, Vec<usize>)> = Vec::new();
    for mask in 0u64..(1 << count) {
        if mask.count_ones() < 2 {
            continue;
        }
        let members: Vec<usize> = (0..count).filter(|&i| mask & (1 << i) != 0).collect();
        let period = lcm_all(members.iter().map(|&i| exps[i] as u128))?;
        let saturated: Vec<usize> = (0..count)
            .filter(|&i| period % exps[i] as u128 == 0)
            .collect();
        if saturated == members && !by_period.iter().any(|(p, _)| *p == period) {
            by_period.push((period, members));
        }
    }
    by_period.sort_by_key(|(p, _)| *p);

    let principal = by_period
        .last()
        .map(|(p, _)| *p)
        .expect("the full index set is always saturated");
    let periods: Vec<u128> = by_period.iter().map(|(p, _)| *p).collect();

    // frequency loops cost principal/L_i iterations each
    let freq_cost: u128 = periods.iter().map(|&p| principal / p).sum();
    budget.check(freq_cost)?;

    let mut strata = Vec::with_capacity(by_period.len());
    for (idx, (period, members)) in by_period.iter().enumerate() {
        let sub: Vec<u64> = members.iter().map(|&i| exps[i]).collect();
        let larger = &periods[idx + 1..];
        strata.push(OrbitStratum {
            subset: members.clone(),
            exponents: sub.clone(),
            period: *period,
            dim: 2 * sub.len() as u64 - 3,
            rs: rs_index(a, *period),
            chi_s1: euler_char_s1(&sub)?,
            frequency: frequency(*period, principal, larger),
        });
    }
    Ok(strata)
}

/// The mean Euler characteristic with its full audit trail.
#[derive(Debug, Clone, PartialEq)]
pub struct MecResult {
    pub value: Rational,
    /// Principal Robbin–Salamon index μ_P (nonzero).
    pub mu_principal: i128,
    pub strata: Vec<OrbitStratum>,
    /// Signed numerator contribution of each stratum, in stratum order.
    pub contributions: Vec<i128>,
}

/// Computes χ_m(Σ(a)) exactly. Fails with [`Error::ZeroPrincipalIndex`]
/// when μ_P = 0 (Σ 1/aⱼ = 1), where the invariant is undefined.
pub fn mean_euler_characteristic(a: &ExponentTuple, budget: Budget) -> Result<MecResult> {
    let mu_principal = rs_index(a, a.lcm()?);
    if mu_principal == 0 {
        return Err(Error::ZeroPrincipalIndex);
    }
    let strata = orbit_strata(a, budget)?;
    let mut contributions = Vec::with_capacity(strata.len());
    let mut total = BigInt::zero();
    for stratum in &strata {
        // half the quotient dimension is |S| − 2
        let exponent = stratum.rs - (stratum.exponents.len() as i128 - 2);
        let sign = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
        let contribution = sign as i128 * stratum.chi_s1 * stratum.frequency as i128;
        contributions.push(contribution);
        total += BigInt::from(contribution);
    }
    let value = Rational::new(total, BigInt::from(mu_principal.unsigned_abs()));
    Ok(MecResult {
        value,
        mu_principal,
        strata,
        contributions,
    })
}

/// χ_m of a connected sum: Σ countᵢ · χᵢ + (Σ countᵢ − 1) · (−1)ⁿ/2.
///
/// `n` is the tuple index (the summands have dimension 2n−1); each part is
/// a mean Euler characteristic with a repetition count.
pub fn chi_m_connected_sum(parts: &[(Rational, u128)], n: u64) -> Result<Rational> {
    let total_count: u128 = parts.iter().map(|(_, c)| c).sum();
    if parts.is_empty() || total_count == 0 {
        return Err(Error::EmptyInput);
    }
    let mut sum = Rational::zero();
    for (chi, count) in parts {
        sum += chi * Rational::from_integer(BigInt::from(*count));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let correction =
        Rational::from_integer(BigInt::from(total_count) - BigInt::one()) * half * BigInt::from(sign);
    Ok(sum + correction)
}

/// χ_m of the standard contact sphere: −1/2 in the dimensions where a
/// reference value is available (7, 11, 15).
pub fn standard_sphere_chi_m(dimension: u64) -> Result<Rational> {
    match dimension {
        7 | 11 | 15 => Ok(Rational::new(BigInt::from(-1), BigInt::from(2))),
        _ => Err(Error::UnsupportedDimension(dimension)),
    }
}
