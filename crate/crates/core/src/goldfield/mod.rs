//! Exact arithmetic over the rationals, the golden field Q(√5) and generic
//! real quadratic extensions.
//!
//! Everything geometric in this crate is computed over an [`OrderedField`]:
//! a field whose elements embed in the reals with an exactly decidable sign.
//! Comparisons, canonical orderings, and orientation predicates all go
//! through [`OrderedField::sign`], so no floating-point value is ever used
//! to decide a combinatorial question.

mod golden;
mod quadratic;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

pub use golden::{GoldenNum, PHI_F64};
pub use quadratic::{ContainsGolden, QuadExt, Radicand, Root, RootPhiPlus2, Sqrt2Num};
pub use rational::{rational_sqrt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative element {0}")]
    NegativeRadicand(String),
}

/// Sign of the real embedding of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A subfield of the reals with exact arithmetic and exact sign.
///
/// Binary operators take an owned left operand and a borrowed right operand,
/// which is the cheapest shape for big-integer backed coefficients.
pub trait OrderedField:
    Sized
    + Clone
    + Eq
    + Hash
    + Ord
    + Debug
    + Display
    + Send
    + Sync
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;

    fn sign(&self) -> Sign;
    fn inverse(&self) -> Result<Self, FieldError>;
    fn to_f64(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n.into(), d.into()))
    }

    fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }

    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * &rhs.inverse()?)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

impl OrderedField for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn sign(&self) -> Sign {
        use num_traits::Signed;
        if self.is_positive() {
            Sign::Positive
        } else if self.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if num_traits::Zero::is_zero(self) {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn to_f64(&self) -> f64 {
        rational::to_f64(self)
    }
}
