//! Exact 3-vectors over an ordered field.

use std::fmt;

use serde::Serialize;

use crate::goldfield::{OrderedField, Sign};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct Vec3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: OrderedField> Vec3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(F::zero(), F::zero(), F::zero())
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(F::from_i64(x), F::from_i64(y), F::from_i64(z))
    }

    pub fn coords(&self) -> [&F; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Vec3<G> {
        Vec3 {
            x: f(&self.x),
            y: f(&self.y),
            z: f(&self.z),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Vec3::new(
            self.x.clone() + &o.x,
            self.y.clone() + &o.y,
            self.z.clone() + &o.z,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Vec3::new(
            self.x.clone() - &o.x,
            self.y.clone() - &o.y,
            self.z.clone() - &o.z,
        )
    }

    pub fn neg(&self) -> Self {
        Vec3::new(-self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Vec3::new(
            self.x.clone() * s,
            self.y.clone() * s,
            self.z.clone() * s,
        )
    }

    pub fn dot(&self, o: &Self) -> F {
        self.x.clone() * &o.x + &(self.y.clone() * &o.y) + &(self.z.clone() * &o.z)
    }

    pub fn cross(&self, o: &Self) -> Self {
        Vec3::new(
            self.y.clone() * &o.z - &(self.z.clone() * &o.y),
            self.z.clone() * &o.x - &(self.x.clone() * &o.z),
            self.x.clone() * &o.y - &(self.y.clone() * &o.x),
        )
    }

    pub fn norm_sq(&self) -> F {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Exact test that `o` is a positive multiple of `self`: zero cross
    /// product and positive dot product.
    pub fn same_ray(&self, o: &Self) -> bool {
        self.cross(o).is_zero() && self.dot(o).sign() == Sign::Positive
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

/// Sign of `det[b − a, c − a, d − a]`: positive when `d` lies on the side of
/// the plane `abc` that the right-hand normal `(b − a) × (c − a)` points to.
pub fn orient3d<F: OrderedField>(a: &Vec3<F>, b: &Vec3<F>, c: &Vec3<F>, d: &Vec3<F>) -> Sign {
    let n = b.sub(a).cross(&c.sub(a));
    n.dot(&d.sub(a)).sign()
}

impl<F: OrderedField> fmt::Display for Vec3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
