//! Almost-contact classification of Brieskorn spheres.
//!
//! On a (2n−1)-sphere, almost contact structures are classified by
//! π_{2n−1}(SO(2n)/U(n)), whose isomorphism type depends on n mod 4. For a
//! Brieskorn manifold carrying the standard smooth structure, the class of
//! the canonical contact structure is an explicit expression in the filling
//! signature σ, the Milnor number μ, and the constant Sₘ:
//!
//!   n ≡ 0 (4):  ( σ/(4Sₘ) − μ/2, 0 )  in  Z ⊕ Z/2
//!   n ≡ 2 (4):  −σ/(4Sₘ) − μ/2       in  Z
//!   n odd:       μ/2                  in  Z/(n−1)!  or  Z/((n−1)!/2)
//!
//! The formula is only valid for standard smooth spheres, so the
//! computation is gated on that verification; since smooth standardness is
//! certified through the bP-index (even n only), odd-n inputs are refused.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{s_m_const, Budget, ExponentTuple, Rational};
use crate::error::{Error, Result};
use crate::topology::diffeo_class;

/// Isomorphism type of π_{2n−1}(SO(2n)/U(n)) by n mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcGroupShape {
    /// Z ⊕ Z/2 (n ≡ 0 mod 4)
    ZPlusZ2,
    /// Z/(n−1)! (n ≡ 1 mod 4)
    ZModFactorial,
    /// Z (n ≡ 2 mod 4)
    Z,
    /// Z/((n−1)!/2) (n ≡ 3 mod 4)
    ZModHalfFactorial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcGroup {
    pub n: u64,
    pub shape: AcGroupShape,
    /// Group order of the cyclic cases; absent for Z and Z ⊕ Z/2.
    pub modulus: Option<BigUint>,
}

impl fmt::Display for AcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            AcGroupShape::ZPlusZ2 => write!(f, "Z + Z/2"),
            AcGroupShape::Z => write!(f, "Z"),
            AcGroupShape::ZModFactorial | AcGroupShape::ZModHalfFactorial => {
                write!(f, "Z/{}", self.modulus.as_ref().unwrap())
            }
        }
    }
}

fn factorial(k: u64) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=k {
        f *= BigUint::from(i);
    }
    f
}

/// The classifying group of almost contact structures on S^{2n−1}, n ≥ 2.
pub fn ac_group(n: u64) -> AcGroup {
    assert!(n >= 2);
    let (shape, modulus) = match n % 4 {
        0 => (AcGroupShape::ZPlusZ2, None),
        1 => (AcGroupShape::ZModFactorial, Some(factorial(n - 1))),
        2 => (AcGroupShape::Z, None),
        _ => (
            AcGroupShape::ZModHalfFactorial,
            Some(factorial(n - 1) / BigUint::from(2u8)),
        ),
    };
    AcGroup { n, shape, modulus }
}

/// An element of the almost-contact group of S^{2n−1}.
///
/// `primary` is the Z (or cyclic) component, reduced to [0, modulus) in the
/// cyclic cases; `secondary` is the Z/2 component and present exactly when
/// n ≡ 0 mod 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcClass {
    pub n: u64,
    pub primary: BigInt,
    pub secondary: Option<bool>,
}

impl AcClass {
    pub fn is_zero(&self) -> bool {
        self.primary.is_zero() && self.secondary != Some(true)
    }
}

impl fmt::Display for AcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.secondary {
            Some(s) => write!(f, "({}, {})", self.primary, u8::from(s)),
            None => write!(f, "{}", self.primary),
        }
    }
}

/// Almost-contact class of the canonical contact structure.
///
/// Requires the tuple to be a verified standard smooth sphere
/// ([`Error::NotStandardSphere`] otherwise, also for odd n where the
/// verification is unavailable).
pub fn almost_contact_class(a: &ExponentTuple, budget: Budget) -> Result<AcClass> {
    let class = diffeo_class(a, budget)?;
    if class.is_standard_smooth != Some(true) {
        return Err(Error::NotStandardSphere);
    }
    let n = a.n() as u64;
    debug_assert!(n.is_multiple_of(2));
    let m = (n / 2) as u32;
    let sigma = class.counts.signature();
    let mu = class.counts.mu;
    assert!(mu % 2 == 0, "standard smooth spheres have even Milnor number");
    let half_mu = BigInt::from(mu / 2);
    // σ/(4Sₘ) is an even integer for signatures divisible by σₘ
    let quarter_s = Rational::from_integer(BigInt::from(4)) * s_m_const(m);
    let term = Rational::from_integer(BigInt::from(sigma)) / quarter_s;
    assert!(term.is_integer(), "sigma/(4 S_m) must be an integer here");
    let term = term.to_integer();
    let primary = if n.is_multiple_of(4) { term - half_mu } else { -term - half_mu };
    let secondary = n.is_multiple_of(4).then_some(false);
    Ok(AcClass { n, primary, secondary })
}

/// True when the canonical contact structure is in the standard formal
/// homotopy class (the zero almost-contact class). For 7-dimensional
/// standard spheres this is the identity 31σ⁺ = 59σ⁻.
pub fn is_homotopically_standard(a: &ExponentTuple, budget: Budget) -> Result<bool> {
    Ok(almost_contact_class(a, budget)?.is_zero())
}

/// Componentwise sum of classes in the same group, reduced in the cyclic
/// cases.
pub fn connected_sum_ac(parts: &[(AcClass, u128)], n: u64) -> Result<AcClass> {
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if parts.iter().any(|(c, _)| c.n != n) {
        return Err(Error::MixedGroups);
    }
    let mut primary = BigInt::zero();
    let mut secondary_sum: u128 = 0;
    for (class, count) in parts {
        primary += &class.primary * BigInt::from(*count);
        if class.secondary == Some(true) {
            secondary_sum += count;
        }
    }
    let group = ac_group(n);
    if let Some(modulus) = &group.modulus {
        primary = primary.mod_floor(&BigInt::from(modulus.clone()));
    }
    let secondary = matches!(group.shape, AcGroupShape::ZPlusZ2).then_some(secondary_sum % 2 == 1);
    Ok(AcClass { n, primary, secondary })
}
