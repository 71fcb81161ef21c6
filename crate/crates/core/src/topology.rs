//! Sphere recognition and diffeomorphism classification.
//!
//! A Brieskorn link (n ≥ 3) is a topological sphere iff its exponents
//! satisfy one of two coprimality conditions. When it is, and n is even,
//! the smooth structure is read off from the filling signature modulo the
//! Kervaire–Milnor constant: the class in bP_{2n} is σ/8 mod σₘ/8.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{sigma_m_const, Budget, ExponentTuple};
use crate::error::{Error, Result};
use crate::signature::{signature_counts_fast, SignatureCount};

/// Which exponent condition certified the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphereCondition {
    /// Two exponents, each coprime to all the others.
    TwoCoprimeExponents,
    /// One globally coprime exponent plus an odd-size set with pairwise
    /// gcd exactly 2, each member coprime to every exponent outside the set.
    OddEvenSet,
    NotSphere,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereVerdict {
    pub condition: SphereCondition,
    /// Indices (into the canonical tuple) witnessing the condition; empty
    /// for `NotSphere`.
    pub witness: Vec<usize>,
}

impl SphereVerdict {
    pub fn is_sphere(&self) -> bool {
        self.condition != SphereCondition::NotSphere
    }
}

/// The exponent-coprimality sphere test. Requires n ≥ 3 (for n = 2 the link
/// is not simply connected and the criterion does not apply).
pub fn sphere_criterion(a: &ExponentTuple) -> Result<SphereVerdict> {
    if a.n() < 3 {
        return Err(Error::DimensionTooLow(a.n()));
    }
    let exps = a.exponents();
    let globally_coprime: Vec<usize> = (0..exps.len())
        .filter(|&i| {
            (0..exps.len())
                .filter(|&j| j != i)
                .all(|j| exps[i].gcd(&exps[j]) == 1)
        })
        .collect();
    if globally_coprime.len() >= 2 {
        return Ok(SphereVerdict {
            condition: SphereCondition::TwoCoprimeExponents,
            witness: globally_coprime[..2].to_vec(),
        });
    }
    if let Some(&anchor) = globally_coprime.first() {
        // candidates for the even set: pairwise gcd 2 forces even entries
        let evens: Vec<usize> = (0..exps.len())
            .filter(|&i| i != anchor && exps[i].is_multiple_of(2))
            .collect();
        for size in (3..=evens.len()).step_by(2) {
            if let Some(set) = find_even_set(exps, anchor, &evens, size) {
                let mut witness = vec![anchor];
                witness.extend(set);
                return Ok(SphereVerdict {
                    condition: SphereCondition::OddEvenSet,
                    witness,
                });
            }
        }
    }
    Ok(SphereVerdict {
        condition: SphereCondition::NotSphere,
        witness: Vec::new(),
    })
}

/// First subset of `evens` (in lexicographic index order) of the given size
/// with pairwise gcd exactly 2 whose members are coprime to everything
/// outside the set (the anchor is coprime to everything already).
fn find_even_set(exps: &[u64], anchor: usize, evens: &[usize], size: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    fn rec(
        exps: &[u64],
        anchor: usize,
        evens: &[usize],
        size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == size {
            let outside = (0..exps.len())
                .filter(|&j| j != anchor && !chosen.contains(&j))
                .collect::<Vec<_>>();
            return chosen
                .iter()
                .all(|&i| outside.iter().all(|&j| exps[i].gcd(&exps[j]) == 1));
        }
        for (pos, &cand) in evens.iter().enumerate().skip(start) {
            if chosen.iter().all(|&i| exps[i].gcd(&exps[cand]) == 2) {
                chosen.push(cand);
                if rec(exps, anchor, evens, size, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if rec(exps, anchor, evens, size, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Free rank of the middle homology H_{n−1} of the link: the number of
/// lattice tuples with integer coordinate sum (the σ⁰ count). Torsion is
/// not computed.
pub fn middle_betti(a: &ExponentTuple, budget: Budget) -> Result<u128> {
    Ok(signature_counts_fast(a, budget)?.sigma_zero)
}

/// Diffeomorphism data of a candidate sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffeoClass {
    /// Manifold dimension 2n−1.
    pub dimension: u64,
    pub is_topological_sphere: bool,
    pub counts: SignatureCount,
    /// σ/8 mod σₘ/8, in [0, σₘ/8); present only for topological spheres
    /// with n even (dimension 4m−1).
    pub bp_index: Option<BigInt>,
    /// Present exactly when `bp_index` is; true iff the index is 0.
    pub is_standard_smooth: Option<bool>,
}

impl DiffeoClass {
    pub fn sigma(&self) -> i128 {
        self.counts.signature()
    }
}

/// Combines the sphere criterion with the filling signature.
pub fn diffeo_class(a: &ExponentTuple, budget: Budget) -> Result<DiffeoClass> {
    let verdict = sphere_criterion(a)?;
    let counts = signature_counts_fast(a, budget)?;
    let n = a.n() as u64;
    let mut class = DiffeoClass {
        dimension: a.dimension(),
        is_topological_sphere: verdict.is_sphere(),
        counts,
        bp_index: None,
        is_standard_smooth: None,
    };
    if verdict.is_sphere() && n.is_multiple_of(2) {
        let sigma = counts.signature();
        assert!(sigma % 8 == 0, "sphere filling signature must be divisible by 8");
        let modulus = sigma_m_const((n / 2) as u32) / BigInt::from(8);
        let bp = BigInt::from(sigma / 8).mod_floor(&modulus);
        class.is_standard_smooth = Some(bp.is_zero());
        class.bp_index = Some(bp);
    }
    Ok(class)
}

/// Diffeomorphism type of Σ(2ℓ, 2, …, 2) for odd n ≥ 3, by ℓ mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaEllType {
    /// S^{n−1} × S^n
    ProductOfSpheres,
    /// S*S^n, the unit cotangent bundle
    UnitCotangent,
    /// (S^{n−1} × S^n) # K with K the Kervaire sphere
    ProductOfSpheresKervaire,
    /// S*S^n # K
    UnitCotangentKervaire,
}

impl SigmaEllType {
    pub fn label(self, n: u64) -> String {
        match self {
            SigmaEllType::ProductOfSpheres => format!("S{} x S{}", n - 1, n),
            SigmaEllType::UnitCotangent => format!("S*S{n}"),
            SigmaEllType::ProductOfSpheresKervaire => format!("(S{} x S{}) # K", n - 1, n),
            SigmaEllType::UnitCotangentKervaire => format!("S*S{n} # K"),
        }
    }
}

/// Lookup by ℓ mod 4. For n = 3 the Kervaire sphere is standard and
/// S*S³ ≅ S² × S³, so everything collapses to the product.
pub fn sigma_ell_diffeo_type(ell: u64, n: u64) -> Result<SigmaEllType> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadParity(n));
    }
    assert!(ell >= 1);
    let raw = match ell % 4 {
        0 => SigmaEllType::ProductOfSpheres,
        1 => SigmaEllType::UnitCotangent,
        2 => SigmaEllType::ProductOfSpheresKervaire,
        _ => SigmaEllType::UnitCotangentKervaire,
    };
    if n == 3 {
        Ok(SigmaEllType::ProductOfSpheres)
    } else {
        Ok(raw)
    }
}
