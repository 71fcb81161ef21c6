//! Graded rank tables for the positive symplectic homology of Σ_ℓ fillings
//! and the contact homology of Σ(ℓp, p, 2, 2).
//!
//! Nothing here computes a differential. Chain-level tables (the Morse–Bott
//! complex) and homology tables (closed-form theorem statements) are kept
//! separate so that degreewise domination of homology by chains is a
//! checkable fact rather than an assumption.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::indices::{ustilovsky_cz, OrbitKind, OrbitLabel};

/// Map degree → rank, truncated at `max_degree`; absent degrees have rank 0
/// and stored ranks are positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRankTable {
    max_degree: i64,
    ranks: BTreeMap<i64, u64>,
    coefficients: &'static str,
}

impl GradedRankTable {
    fn new(max_degree: i64, coefficients: &'static str) -> Self {
        GradedRankTable {
            max_degree,
            ranks: BTreeMap::new(),
            coefficients,
        }
    }

    fn add(&mut self, degree: i64, rank: u64) {
        if degree <= self.max_degree && rank > 0 {
            *self.ranks.entry(degree).or_insert(0) += rank;
        }
    }

    pub fn rank(&self, degree: i64) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    /// Coefficient tag, e.g. "Z/2" or "Q"; metadata only.
    pub fn coefficients(&self) -> &'static str {
        self.coefficients
    }

    /// (degree, rank) pairs in increasing degree, ranks all positive.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Total rank, counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.ranks.values().sum()
    }
}

impl fmt::Display for GradedRankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, r)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {r}")?;
        }
        write!(f, "}} ({})", self.coefficients)
    }
}

fn require_odd_n(n: u64, min: u64) -> Result<()> {
    if n < min || n.is_multiple_of(2) {
        return Err(if min >= 5 {
            Error::BadDimension(n)
        } else {
            Error::BadParity(n)
        });
    }
    Ok(())
}

/// Morse–Bott chain ranks of SC⁺ for Σ_ℓ = Σ(2ℓ, 2, …, 2), n odd ≥ 3:
/// one generator at degree 2N/ℓ + 2N(n−2) + d, d ∈ {−n+1, 0, 1, n}, for
/// each level N with ℓ | N, and at 2⌊N/ℓ⌋ + 2N(n−2) + d, d ∈ {−n+3, 1, 2, n}
/// for ℓ ∤ N.
pub fn sc_plus_ranks(ell: u64, n: u64, max_degree: i64) -> Result<GradedRankTable> {
    assert!(ell >= 1);
    require_odd_n(n, 3)?;
    let mut table = GradedRankTable::new(max_degree, "Z/2");
    let (ell_i, n_i) = (ell as i64, n as i64);
    for level in 1.. {
        let (base, shifts) = level_degrees(ell_i, n_i, level);
        if base + shifts[0] > max_degree {
            break;
        }
        for d in shifts {
            table.add(base + d, 1);
        }
    }
    Ok(table)
}

/// Base degree and the four Morse shifts of period level N.
fn level_degrees(ell: i64, n: i64, level: i64) -> (i64, [i64; 4]) {
    if level % ell == 0 {
        (2 * level / ell + 2 * level * (n - 2), [-n + 1, 0, 1, n])
    } else {
        (2 * (level / ell) + 2 * level * (n - 2), [-n + 3, 1, 2, n])
    }
}

/// Positive symplectic homology of the Σ_ℓ filling for n ≥ 5 odd: rank one
/// exactly at the eight degree families of the chain complex (the
/// differential vanishes), zero elsewhere.
pub fn sh_plus_high_dim(ell: u64, n: u64, max_degree: i64) -> Result<GradedRankTable> {
    assert!(ell >= 1);
    require_odd_n(n, 5)?;
    let mut table = GradedRankTable::new(max_degree, "Z/2");
    let (ell_i, n_i) = (ell as i64, n as i64);
    for level in 1.. {
        let (base, shifts) = level_degrees(ell_i, n_i, level);
        if base + shifts[0] > max_degree {
            break;
        }
        for d in shifts {
            table.add(base + d, 1);
        }
    }
    Ok(table)
}

/// Positive symplectic homology of the Σ(2ℓ, 2, 2, 2) filling (n = 3) over
/// Z/2. For ℓ ≥ 2: rank 1 at degrees 2, 3 and at (2ℓ+2)N + j with
/// j ∈ {−1, 0, 1, 2}; rank 2 at every other degree ≥ 4; zero below 2.
/// For ℓ = 1: rank 1 at degree 2 and at every degree ≥ 4.
pub fn sh_plus_dim5(ell: u64, max_degree: i64) -> Result<GradedRankTable> {
    assert!(ell >= 1);
    let mut table = GradedRankTable::new(max_degree, "Z/2");
    if ell == 1 {
        table.add(2, 1);
        for k in 4..=max_degree {
            table.add(k, 1);
        }
        return Ok(table);
    }
    let window = 2 * ell as i64 + 2;
    let in_window = |k: i64| {
        let nearest = (k + 1).div_euclid(window);
        nearest >= 1 && (-1..=2).contains(&(k - nearest * window))
    };
    table.add(2, 1);
    table.add(3, 1);
    for k in 4..=max_degree {
        table.add(k, if in_window(k) { 1 } else { 2 });
    }
    Ok(table)
}

/// Minimum or maximum of the Morse function on an orbit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Marker {
    Min,
    Max,
}

/// One generator of the perturbed chain complex: an orbit circle together
/// with the min/max marker. Its degree is μ_CZ + 0 (min) or + 1 (max).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorEntry {
    pub degree: i64,
    pub label: OrbitLabel,
    pub marker: Marker,
}

impl fmt::Display for GeneratorEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self.marker {
            Marker::Min => "min",
            Marker::Max => "max",
        };
        write!(f, "{} {} @{}", self.label, m, self.degree)
    }
}

/// All min/max generators of the perturbed complex on Σ(2ℓ, 2, 2, 2),
/// ℓ ≥ 2, with degree ≤ `max_degree`, sorted by degree then orbit family
/// then multiplicity.
pub fn generator_table(ell: u64, max_degree: i64) -> Result<Vec<GeneratorEntry>> {
    assert!(ell >= 2);
    let mut entries = Vec::new();
    for kind in [
        OrbitKind::GammaPlus,
        OrbitKind::GammaMinus,
        OrbitKind::GammaZeroPlus,
        OrbitKind::GammaZeroMinus,
    ] {
        for multiplicity in 1.. {
            let label = OrbitLabel::new(kind, multiplicity);
            let cz = ustilovsky_cz(ell, label)?;
            if cz > max_degree as i128 {
                break;
            }
            let cz = cz as i64;
            entries.push(GeneratorEntry {
                degree: cz,
                label,
                marker: Marker::Min,
            });
            if cz < max_degree {
                entries.push(GeneratorEntry {
                    degree: cz + 1,
                    label,
                    marker: Marker::Max,
                });
            }
        }
    }
    entries.sort_by_key(|e| (e.degree, e.label.kind, e.label.multiplicity, e.marker));
    Ok(entries)
}

/// Cylindrical contact homology of Σ(ℓp, p, 2, 2) over Q: rank p−1 in
/// degree 2 and rank p in every even degree ≥ 4 — independent of ℓ, which
/// is the point.
pub fn ch_ranks_lp(p: u64, max_degree: i64) -> Result<GradedRankTable> {
    if p < 2 {
        return Err(Error::EntryTooSmall(p as i64));
    }
    let mut table = GradedRankTable::new(max_degree, "Q");
    table.add(2, p - 1);
    let mut k = 4;
    while k <= max_degree {
        table.add(k, p);
        k += 2;
    }
    Ok(table)
}

/// Integral homology of the pair (filling, Σ_ℓ): free of rank 2ℓ−1 in
/// degree n and rank 1 in degree 2n.
pub fn relative_homology_ranks(ell: u64, n: u64) -> Result<GradedRankTable> {
    assert!(ell >= 1);
    require_odd_n(n, 3)?;
    let mut table = GradedRankTable::new(2 * n as i64, "Z");
    table.add(n as i64, 2 * ell - 1);
    table.add(2 * n as i64, 1);
    Ok(table)
}
