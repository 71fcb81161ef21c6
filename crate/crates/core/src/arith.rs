//! Exponent tuples, exact rational arithmetic, Bernoulli numbers and the
//! Kervaire–Milnor constants σₘ and Sₘ.
//!
//! Everything here is exact: integers are arbitrary precision where they can
//! grow, rationals are always stored in lowest terms with positive
//! denominator (guaranteed by [`num_rational::BigRational`]).
//!
//! Bernoulli numbers follow the topologists' convention: `bernoulli(m)` is
//! the absolute value of the usual B_{2m}, so B₁ = 1/6, B₂ = 1/30,
//! B₃ = 1/42, B₄ = 1/30, …

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Upper bound on the number of tuples an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(100_000_000);

    /// Fails with [`Error::BudgetExceeded`] when `needed` is over the limit.
    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// A validated Brieskorn exponent tuple (a₀, …, aₙ), every entry ≥ 2,
/// kept sorted in non-increasing order.
///
/// The associated manifold has dimension 2n−1. All invariants computed from
/// a tuple are independent of the input order; canonical sorting makes that
/// a non-issue internally and puts the largest exponent first, which is the
/// one the fast signature count splits off.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentTuple {
    exponents: Vec<u64>,
}

impl ExponentTuple {
    /// Builds a canonical tuple from raw entries.
    ///
    /// Rejects entries < 2 ([`Error::EntryTooSmall`]) and tuples with fewer
    /// than two entries ([`Error::TooShort`]).
    pub fn new<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut exponents: Vec<u64> = raw.into_iter().collect();
        if exponents.len() < 2 {
            return Err(Error::TooShort(exponents.len()));
        }
        if let Some(&bad) = exponents.iter().find(|&&e| e < 2) {
            return Err(Error::EntryTooSmall(bad as i64));
        }
        exponents.sort_unstable_by(|x, y| y.cmp(x));
        Ok(ExponentTuple { exponents })
    }

    /// Entries in canonical (non-increasing) order.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The index `n`: the tuple is (a₀, …, aₙ).
    pub fn n(&self) -> usize {
        self.exponents.len() - 1
    }

    /// Dimension 2n−1 of the associated manifold.
    pub fn dimension(&self) -> u64 {
        2 * self.n() as u64 - 1
    }

    /// Milnor number μ = ∏ (aᵢ − 1), the middle Betti number of the filling.
    ///
    /// Panics if the product overflows `u128`, which no meaningful input
    /// reaches.
    pub fn milnor_number(&self) -> u128 {
        self.checked_milnor_number()
            .expect("Milnor number overflows u128")
    }

    pub(crate) fn checked_milnor_number(&self) -> Result<u128> {
        self.exponents
            .iter()
            .try_fold(1u128, |acc, &a| acc.checked_mul((a - 1) as u128))
            .ok_or(Error::Overflow("Milnor number"))
    }

    /// Least common multiple of all exponents.
    pub fn lcm(&self) -> Result<u128> {
        lcm_all(self.exponents.iter().map(|&a| a as u128))
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `c·k + r` as a function of a family parameter k ≥ 1.
///
/// Construction requires the value to stay ≥ 2 for every k ≥ 1, i.e.
/// c ≥ 0 and c + r ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamLinear {
    coefficient: u64,
    offset: i64,
}

impl ParamLinear {
    pub fn new(coefficient: i64, offset: i64) -> Result<Self> {
        if coefficient < 0 || coefficient.checked_add(offset).is_none_or(|v| v < 2) {
            return Err(Error::InvalidFamily);
        }
        Ok(ParamLinear {
            coefficient: coefficient as u64,
            offset,
        })
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Evaluates at k ≥ 1; always ≥ 2 by the construction invariant.
    pub fn eval(&self, k: u64) -> Result<u64> {
        assert!(k >= 1, "family parameter must be >= 1");
        let v = (self.coefficient as i128) * (k as i128) + self.offset as i128;
        u64::try_from(v).map_err(|_| Error::Overflow("family member exponent"))
    }
}

impl fmt::Display for ParamLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset >= 0 {
            write!(f, "{}k + {}", self.coefficient, self.offset)
        } else {
            write!(f, "{}k - {}", self.coefficient, -self.offset)
        }
    }
}

pub(crate) fn lcm_all<I>(values: I) -> Result<u128>
where
    I: IntoIterator<Item = u128>,
{
    let mut acc: u128 = 1;
    for v in values {
        let g = acc.gcd(&v);
        acc = (acc / g)
            .checked_mul(v)
            .ok_or(Error::Overflow("least common multiple"))?;
    }
    Ok(acc)
}

fn binomial(n: u32, k: u32) -> BigUint {
    let k = k.min(n - k.min(n));
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Standard Bernoulli numbers B₀, …, B_len−1 (with B₁ = −1/2), via the
/// defining recurrence Σ_{k≤m} C(m+1, k) B_k = 0.
fn bernoulli_standard(len: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(len);
    b.push(Rational::one());
    for m in 1..len {
        let mut sum = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            sum += Rational::from_integer(BigInt::from(binomial(m as u32 + 1, k as u32))) * bk;
        }
        let next = -sum / Rational::from_integer(BigInt::from(m as u32 + 1));
        b.push(next);
    }
    b
}

/// The m-th Bernoulli number in the positive-value convention: |B_{2m}|.
///
/// B₁ = 1/6, B₂ = 1/30, B₃ = 1/42, B₄ = 1/30, B₅ = 5/66, …
pub fn bernoulli(m: u32) -> Rational {
    assert!(m >= 1, "bernoulli is defined for m >= 1");
    let b = bernoulli_standard(2 * m as usize + 1);
    b[2 * m as usize].abs()
}

/// The Kervaire–Milnor constant σₘ = 2^{2m+1} (2^{2m−1} − 1) · numerator(4Bₘ/m).
///
/// The numerator is taken of the fully reduced fraction. σ₂ = 224,
/// σ₃ = 7936, σ₄ = 65024. Homotopy (4m−1)-spheres bounding parallelizable
/// manifolds are classified by the filling signature modulo σₘ.
pub fn sigma_m_const(m: u32) -> BigInt {
    assert!(m >= 2, "sigma_m is defined for m >= 2");
    let frac = bernoulli(m) * Rational::from_integer(BigInt::from(4))
        / Rational::from_integer(BigInt::from(m));
    let pow = BigInt::from(2u8).pow(2 * m + 1);
    let mersenne = BigInt::from(2u8).pow(2 * m - 1) - BigInt::one();
    pow * mersenne * frac.numer()
}

/// The constant Sₘ = 2^{2m} (2^{2m−1} − 1) Bₘ / (2m)! from the almost-contact
/// classification. S₂ = 7/45, S₃ = 62/945, S₄ = 127/4725.
pub fn s_m_const(m: u32) -> Rational {
    assert!(m >= 1, "S_m is defined for m >= 1");
    let pow = BigInt::from(2u8).pow(2 * m);
    let mersenne = BigInt::from(2u8).pow(2 * m - 1) - BigInt::one();
    let mut fact = BigInt::one();
    for i in 2..=(2 * m) {
        fact *= BigInt::from(i);
    }
    Rational::from_integer(pow * mersenne) * bernoulli(m) / Rational::from_integer(fact)
}

/// Renders a rational as `p/q` (or just `p` for integers).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal approximation with six significant digits, for human-readable
/// output next to the exact value.
pub fn approx_decimal(r: &Rational) -> String {
    let x = rational_to_f64(r);
    if x == 0.0 {
        return "0.00000".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-3..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

/// Lossy conversion for display purposes only.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // huge numerator/denominator: scale down first
        let bits = r.numer().bits().max(r.denom().bits());
        let shift = bits.saturating_sub(520);
        let n = r.numer() >> shift;
        let d = r.denom() >> shift;
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}
