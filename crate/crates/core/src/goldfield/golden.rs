use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::rational::{self, rational_sqrt, Rational};
use super::{FieldError, OrderedField, Sign};

/// `(1 + √5) / 2` as an f64, for reporting only.
pub const PHI_F64: f64 = 1.618_033_988_749_895;
const SQRT5_F64: f64 = 2.236_067_977_499_79;

/// An element `a + b·φ` of Q(√5), where `φ² = φ + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GoldenNum {
    a: Rational,
    b: Rational,
}

impl GoldenNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNum { a, b }
    }

    /// `a + b·φ` from small integers.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenNum::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    /// `(an/ad) + (bn/bd)·φ`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        GoldenNum::new(
            Rational::new(an.into(), ad.into()),
            Rational::new(bn.into(), bd.into()),
        )
    }

    pub fn phi() -> Self {
        GoldenNum::from_ints(0, 1)
    }

    /// `1/φ = φ − 1`.
    pub fn phi_inv() -> Self {
        GoldenNum::from_ints(-1, 1)
    }

    /// `√5 = 2φ − 1`.
    pub fn sqrt5() -> Self {
        GoldenNum::from_ints(-1, 2)
    }

    /// `φⁿ` for any integer exponent.
    pub fn phi_pow(n: i32) -> Self {
        let base = if n >= 0 { Self::phi() } else { Self::phi_inv() };
        let mut acc = GoldenNum::from_ints(1, 0);
        for _ in 0..n.unsigned_abs() {
            acc = acc * &base;
        }
        acc
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn phi_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: `φ ↦ 1 − φ`, i.e. `a + bφ ↦ (a + b) − bφ`.
    pub fn conj(&self) -> Self {
        GoldenNum::new(&self.a + &self.b, -self.b.clone())
    }

    /// Field norm `x · conj(x) = a² + ab − b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Field trace `x + conj(x) = 2a + b`.
    pub fn trace(&self) -> Rational {
        &self.a + &self.a + &self.b
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenNum::new(&self.a * r, &self.b * r)
    }

    /// Nonnegative square root inside Q(√5), if one exists.
    ///
    /// If `y² = x` then `N(y)² = N(x)` and, writing `m = N(y)` and
    /// `t = Tr(y)`, `t² = Tr(x) + 2m` and `y = (x + m)/t`. Both `m` and `t`
    /// must therefore be rational square roots, which leaves at most four
    /// candidates to test. The `t = 0` case is `y ∈ Q·√5`.
    pub fn sqrt_in_field(&self) -> Result<Option<GoldenNum>, FieldError> {
        match self.sign() {
            Sign::Negative => return Err(FieldError::NegativeRadicand(self.to_string())),
            Sign::Zero => return Ok(Some(GoldenNum::zero())),
            Sign::Positive => {}
        }
        let Some(root_norm) = rational_sqrt(&self.norm()) else {
            return Ok(None);
        };
        let two = Rational::from_integer(2.into());
        for m in [root_norm.clone(), -root_norm] {
            let t_sq = self.trace() + &two * &m;
            let Some(t) = rational_sqrt(&t_sq) else {
                continue;
            };
            let candidate = if t.is_zero() {
                // y = s·√5 with 5s² = x, so x must be rational.
                if !self.is_rational() {
                    continue;
                }
                match rational_sqrt(&(&self.a / Rational::from_integer(5.into()))) {
                    Some(s) => GoldenNum::sqrt5().scale(&s),
                    None => continue,
                }
            } else {
                let shifted = GoldenNum::new(&self.a + &m, self.b.clone());
                shifted.scale(&t.recip())
            };
            if candidate.square() == *self {
                return Ok(Some(candidate.abs()));
            }
        }
        Ok(None)
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// The embedded real value rendered with `digits` decimal places.
    pub fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*}", digits, self.to_f64())
    }
}

impl OrderedField for GoldenNum {
    fn zero() -> Self {
        GoldenNum::default()
    }

    fn one() -> Self {
        GoldenNum::new(Rational::one(), Rational::zero())
    }

    fn from_rational(r: Rational) -> Self {
        GoldenNum::new(r, Rational::zero())
    }

    /// Sign of `a + b(1 + √5)/2 = ((2a + b) + b√5)/2`: compare `(2a+b)²`
    /// against `5b²` when the two parts disagree in sign.
    fn sign(&self) -> Sign {
        let u = &self.a + &self.a + &self.b;
        let su = rational_sign(&u);
        let sb = rational_sign(&self.b);
        if sb == Sign::Zero {
            return su;
        }
        if su == Sign::Zero || su == sb {
            return sb;
        }
        let five = Rational::from_integer(5.into());
        match (&u * &u).cmp(&(&five * &self.b * &self.b)) {
            Ordering::Greater => su,
            Ordering::Less => sb,
            Ordering::Equal => Sign::Zero,
        }
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    /// Evaluates through `(u + b√5)/2` with `u = 2a + b`; when `u` and `b`
    /// have opposite signs the conjugate form `(u² − 5b²)/(2(u − b√5))` is
    /// used to avoid cancellation.
    fn to_f64(&self) -> f64 {
        let u = &self.a + &self.a + &self.b;
        let uf = rational::to_f64(&u);
        let bf = rational::to_f64(&self.b);
        if uf * bf >= 0.0 {
            return (uf + bf * SQRT5_F64) / 2.0;
        }
        let five = Rational::from_integer(5.into());
        let num = rational::to_f64(&(&u * &u - &five * &self.b * &self.b));
        num / (2.0 * (uf - bf * SQRT5_F64))
    }
}

fn rational_sign(r: &Rational) -> Sign {
    if r.is_positive() {
        Sign::Positive
    } else if r.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

impl PartialOrd for GoldenNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact order of the real embedding.
impl Ord for GoldenNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl<'a> Add<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &'a GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Add<&'a GoldenNum> for GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &'a GoldenNum) -> GoldenNum {
        GoldenNum::new(self.a + &rhs.a, self.b + &rhs.b)
    }
}

impl Add for GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: GoldenNum) -> GoldenNum {
        self + &rhs
    }
}

impl<'a> Sub<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &'a GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Sub<&'a GoldenNum> for GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &'a GoldenNum) -> GoldenNum {
        GoldenNum::new(self.a - &rhs.a, self.b - &rhs.b)
    }
}

impl Sub for GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: GoldenNum) -> GoldenNum {
        self - &rhs
    }
}

/// `(a₁ + b₁φ)(a₂ + b₂φ) = (a₁a₂ + b₁b₂) + (a₁b₂ + a₂b₁ + b₁b₂)φ`.
impl<'a> Mul<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &'a GoldenNum) -> GoldenNum {
        if self.b.is_zero() && rhs.b.is_zero() {
            return GoldenNum::new(&self.a * &rhs.a, Rational::zero());
        }
        let bb = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bb;
        let b = &self.a * &rhs.b + &rhs.a * &self.b + bb;
        GoldenNum::new(a, b)
    }
}

impl<'a> Mul<&'a GoldenNum> for GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &'a GoldenNum) -> GoldenNum {
        &self * rhs
    }
}

impl Mul for GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: GoldenNum) -> GoldenNum {
        &self * &rhs
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-self.a, -self.b)
    }
}

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-self.a.clone(), -self.b.clone())
    }
}

/// Exact rendering `p/q + (r/s)·phi`; either term is dropped when zero.
impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})·phi", self.b),
            (false, false) => write!(f, "{} + ({})·phi", self.a, self.b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse golden number from {0:?}")]
pub struct ParseGoldenError(String);

impl FromStr for GoldenNum {
    type Err = ParseGoldenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGoldenError(s.to_string());
        let s = s.trim();
        let parse_phi = |t: &str| -> Result<Rational, ParseGoldenError> {
            let inner = t
                .strip_suffix("·phi")
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(err)?;
            inner.parse().map_err(|_| err())
        };
        if let Some((a, b)) = s.split_once(" + ") {
            let a: Rational = a.parse().map_err(|_| err())?;
            return Ok(GoldenNum::new(a, parse_phi(b)?));
        }
        if s.ends_with("·phi") {
            return Ok(GoldenNum::new(Rational::zero(), parse_phi(s)?));
        }
        let a: Rational = s.parse().map_err(|_| err())?;
        Ok(GoldenNum::from_rational(a))
    }
}

impl Serialize for GoldenNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
