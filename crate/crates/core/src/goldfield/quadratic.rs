use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::{FieldError, GoldenNum, OrderedField, Rational, Sign};

/// The positive non-square `d` adjoined by a [`QuadExt`].
pub trait Radicand<F>: 'static + Send + Sync {
    fn value() -> F;
    fn label() -> &'static str;
}

/// `√D` for a positive squarefree integer `D`.
pub struct Root<const D: u64>;

impl<F: OrderedField, const D: u64> Radicand<F> for Root<D> {
    fn value() -> F {
        F::from_i64(D as i64)
    }

    fn label() -> &'static str {
        match D {
            2 => "√2",
            3 => "√3",
            5 => "√5",
            _ => "√d",
        }
    }
}

/// `√(φ + 2)`, the radicand of an icosahedral 5-fold direction `(0, 1, φ)`.
pub struct RootPhiPlus2;

impl<F: ContainsGolden> Radicand<F> for RootPhiPlus2 {
    fn value() -> F {
        F::from_golden(GoldenNum::from_ints(2, 1))
    }

    fn label() -> &'static str {
        "√(phi+2)"
    }
}

/// Fields that contain Q(√5).
pub trait ContainsGolden: OrderedField {
    fn from_golden(g: GoldenNum) -> Self;
}

impl ContainsGolden for GoldenNum {
    fn from_golden(g: GoldenNum) -> Self {
        g
    }
}

impl<F: ContainsGolden, R: Radicand<F>> ContainsGolden for QuadExt<F, R> {
    fn from_golden(g: GoldenNum) -> Self {
        QuadExt::new(F::from_golden(g), F::zero())
    }
}

/// `a + b·√d` over a base field `F`, where `d = R::value()` is a positive
/// non-square in `F`.
pub struct QuadExt<F, R> {
    a: F,
    b: F,
    _radicand: PhantomData<R>,
}

/// Q(√2), the coefficient field of the binary octahedral group.
pub type Sqrt2Num = QuadExt<Rational, Root<2>>;

impl<F: OrderedField, R: Radicand<F>> QuadExt<F, R> {
    pub fn new(a: F, b: F) -> Self {
        QuadExt {
            a,
            b,
            _radicand: PhantomData,
        }
    }

    /// The adjoined root `√d` itself.
    pub fn root() -> Self {
        QuadExt::new(F::zero(), F::one())
    }

    pub fn radicand() -> F {
        R::value()
    }

    pub fn base(a: F) -> Self {
        QuadExt::new(a, F::zero())
    }

    pub fn parts(&self) -> (&F, &F) {
        (&self.a, &self.b)
    }

    pub fn conj(&self) -> Self {
        QuadExt::new(self.a.clone(), -self.b.clone())
    }

    /// `a² − b²d`, an element of the base field.
    pub fn norm(&self) -> F {
        self.a.square() - &(self.b.square() * &R::value())
    }
}

impl<F: OrderedField, R: Radicand<F>> Clone for QuadExt<F, R> {
    fn clone(&self) -> Self {
        QuadExt::new(self.a.clone(), self.b.clone())
    }
}

impl<F: OrderedField, R> PartialEq for QuadExt<F, R> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl<F: OrderedField, R> Eq for QuadExt<F, R> {}

impl<F: OrderedField, R> Hash for QuadExt<F, R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl<F: OrderedField, R> fmt::Debug for QuadExt<F, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadExt")
            .field("a", &self.a)
            .field("b", &self.b)
            .finish()
    }
}

impl<F: OrderedField, R: Radicand<F>> fmt::Display for QuadExt<F, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})·{}", self.b, R::label()),
            (false, false) => write!(f, "{} + ({})·{}", self.a, self.b, R::label()),
        }
    }
}

impl<F: OrderedField, R: Radicand<F>> Serialize for QuadExt<F, R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<F: OrderedField, R: Radicand<F>> PartialOrd for QuadExt<F, R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: OrderedField, R: Radicand<F>> Ord for QuadExt<F, R> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl<'a, F: OrderedField, R: Radicand<F>> Add<&'a QuadExt<F, R>> for QuadExt<F, R> {
    type Output = QuadExt<F, R>;
    fn add(self, rhs: &'a QuadExt<F, R>) -> Self {
        QuadExt::new(self.a + &rhs.a, self.b + &rhs.b)
    }
}

impl<'a, F: OrderedField, R: Radicand<F>> Sub<&'a QuadExt<F, R>> for QuadExt<F, R> {
    type Output = QuadExt<F, R>;
    fn sub(self, rhs: &'a QuadExt<F, R>) -> Self {
        QuadExt::new(self.a - &rhs.a, self.b - &rhs.b)
    }
}

impl<'a, F: OrderedField, R: Radicand<F>> Mul<&'a QuadExt<F, R>> for QuadExt<F, R> {
    type Output = QuadExt<F, R>;
    fn mul(self, rhs: &'a QuadExt<F, R>) -> Self {
        if self.b.is_zero() && rhs.b.is_zero() {
            return QuadExt::new(self.a * &rhs.a, F::zero());
        }
        let a = self.a.clone() * &rhs.a + &(self.b.clone() * &rhs.b * &R::value());
        let b = self.a * &rhs.b + &(self.b * &rhs.a);
        QuadExt::new(a, b)
    }
}

impl<F: OrderedField, R: Radicand<F>> Neg for QuadExt<F, R> {
    type Output = QuadExt<F, R>;
    fn neg(self) -> Self {
        QuadExt::new(-self.a, -self.b)
    }
}

impl<F: OrderedField, R: Radicand<F>> OrderedField for QuadExt<F, R> {
    fn zero() -> Self {
        QuadExt::new(F::zero(), F::zero())
    }

    fn one() -> Self {
        QuadExt::new(F::one(), F::zero())
    }

    fn from_rational(r: Rational) -> Self {
        QuadExt::new(F::from_rational(r), F::zero())
    }

    /// `a + b√d` with `d > 0`: when the parts disagree in sign the larger of
    /// `a²` and `b²d` wins.
    fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        match self.a.square().cmp(&(self.b.square() * &R::value())) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Sign::Zero,
        }
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        let inv = n.inverse()?;
        Ok(QuadExt::new(self.a.clone() * &inv, -(self.b.clone() * &inv)))
    }

    fn to_f64(&self) -> f64 {
        let af = self.a.to_f64();
        let bf = self.b.to_f64();
        let rd = R::value().to_f64().sqrt();
        if af * bf >= 0.0 {
            return af + bf * rd;
        }
        self.norm().to_f64() / (af - bf * rd)
    }
}
