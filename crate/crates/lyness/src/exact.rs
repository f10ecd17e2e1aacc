//! Arbitrary-precision rational arithmetic and bit-exact orbit iteration.
//!
//! Global periodicity claims (5-cycles at `alpha = 1`, 6-cycles at
//! `alpha = 0`, 4-cycles for the normalized infinite-alpha map) are verified
//! here with exact equality rather than floating tolerances. Values are kept
//! reduced to lowest terms with a positive denominator. Non-periodic rational
//! orbits grow without bound, so iteration carries a configurable bit cap.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on numerator/denominator bit length during exact iteration.
pub const DEFAULT_EXACT_BIT_CAP: u64 = 4096;

/// A rational scalar, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// Parse `"7"`, `"-3/4"` or a plain decimal such as `"1.25"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational { input: s.to_string() };
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(ExactRational(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let digits = format!("{int}{frac}");
            let n = BigInt::from_str(&digits).map_err(|_| bad())?;
            let d = BigInt::from(10u32).pow(frac.len() as u32);
            return Ok(ExactRational(BigRational::new(n, d)));
        }
        let n = BigInt::from_str(s).map_err(|_| bad())?;
        Ok(ExactRational(BigRational::from_integer(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRational(self.0.recip()))
    }

    /// Larger of the numerator/denominator bit lengths.
    pub fn bits(&self) -> u64 {
        self.0.numer().bits().max(self.0.denom().bits())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact division check: does `self` divide `other` to an integer ratio?
    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && (other / self).is_integer()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

/// A pair of positive rationals, the exact analogue of `Point2`.
pub type ExactPoint = (ExactRational, ExactRational);

fn require_positive(p: &ExactPoint) -> Result<()> {
    for c in [&p.0, &p.1] {
        if !c.is_positive() {
            return Err(Error::NonpositiveExact { value: c.to_string() });
        }
    }
    Ok(())
}

/// Exact image under `f(x, y) = (y, (alpha + y) / x)`.
pub fn step_exact(p: &ExactPoint, alpha: &ExactRational) -> Result<ExactPoint> {
    require_positive(p)?;
    let next = (alpha + &p.1) / &p.0;
    Ok((p.1.clone(), next))
}

/// Exact inverse: `q = ((alpha + x) / y, x)` with `f(q) = p` exactly.
pub fn inverse_step_exact(p: &ExactPoint, alpha: &ExactRational) -> Result<ExactPoint> {
    require_positive(p)?;
    let prev = (alpha + &p.0) / &p.1;
    Ok((prev, p.0.clone()))
}

/// Exact normalized infinite-alpha map `(x, y) -> (y, 1/x)`.
pub fn normalized_infinite_alpha_step_exact(p: &ExactPoint) -> Result<ExactPoint> {
    require_positive(p)?;
    Ok((p.1.clone(), p.0.recip()?))
}

/// Exact orbit of `n` steps. Errors out if any coordinate ever needs more
/// than `bit_cap` bits (non-periodic rational orbits grow without bound).
pub fn iterate_exact(
    seed: &ExactPoint,
    n: usize,
    alpha: &ExactRational,
    bit_cap: Option<u64>,
) -> Result<Vec<ExactPoint>> {
    let cap = bit_cap.unwrap_or(DEFAULT_EXACT_BIT_CAP);
    require_positive(seed)?;
    let mut orbit = Vec::with_capacity(n + 1);
    orbit.push(seed.clone());
    let mut p = seed.clone();
    for step in 1..=n {
        p = step_exact(&p, alpha)?;
        if p.0.bits() > cap || p.1.bits() > cap {
            return Err(Error::ExactOverflow { step, cap });
        }
        orbit.push(p.clone());
    }
    Ok(orbit)
}

/// Smallest `k` in `1..=max_period` with `f^k(seed) = seed` exactly.
pub fn exact_period(seed: &ExactPoint, alpha: &ExactRational, max_period: usize) -> Result<Option<usize>> {
    let orbit = iterate_exact(seed, max_period, alpha, None)?;
    Ok(orbit.iter().skip(1).position(|p| p == seed).map(|k| k + 1))
}

/// Draw a random positive rational with numerator and denominator in `1..=bound`.
pub fn random_positive_rational<R: rand::Rng>(rng: &mut R, bound: i64) -> ExactRational {
    let n = rng.gen_range(1..=bound);
    let d = rng.gen_range(1..=bound);
    ExactRational::new(n, d).expect("bound >= 1 keeps the denominator nonzero")
}
