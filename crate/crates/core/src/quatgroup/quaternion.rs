use std::fmt;

use serde::Serialize;

use crate::goldfield::{GoldenNum, OrderedField, Sqrt2Num};
use crate::vec3::Vec3;

/// `w + x·i + y·j + z·k` over an exact field.
///
/// The derived ordering is lexicographic on `(w, x, y, z)` using the exact
/// order of the field, which is the canonical element order for groups.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct Quaternion<F> {
    pub w: F,
    pub x: F,
    pub y: F,
    pub z: F,
}

pub type GoldenQuaternion = Quaternion<GoldenNum>;
pub type Quad2Quaternion = Quaternion<Sqrt2Num>;

impl<F: OrderedField> Quaternion<F> {
    pub fn new(w: F, x: F, y: F, z: F) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn one() -> Self {
        Quaternion::new(F::one(), F::zero(), F::zero(), F::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(F::zero(), F::one(), F::zero(), F::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(F::zero(), F::zero(), F::one(), F::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(F::zero(), F::zero(), F::zero(), F::one())
    }

    pub fn from_parts(w: F, v: Vec3<F>) -> Self {
        Quaternion::new(w, v.x, v.y, v.z)
    }

    pub fn from_array(c: [F; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion::new(w, x, y, z)
    }

    pub fn coords(&self) -> [&F; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn scalar(&self) -> &F {
        &self.w
    }

    pub fn imag(&self) -> Vec3<F> {
        Vec3::new(self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(
            -self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    pub fn norm_sq(&self) -> F {
        self.w.square() + &self.x.square() + &self.y.square() + &self.z.square()
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq() == F::one()
    }

    pub fn scale(&self, s: &F) -> Self {
        Quaternion::new(
            self.w.clone() * s,
            self.x.clone() * s,
            self.y.clone() * s,
            self.z.clone() * s,
        )
    }

    /// Hamilton product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        let m = |p: &F, q: &F| p.clone() * q;
        Quaternion::new(
            m(a1, a2) - &m(b1, b2) - &m(c1, c2) - &m(d1, d2),
            m(a1, b2) + &m(b1, a2) + &m(c1, d2) - &m(d1, c2),
            m(a1, c2) - &m(b1, d2) + &m(c1, a2) + &m(d1, b2),
            m(a1, d2) + &m(b1, c2) - &m(c1, b2) + &m(d1, a2),
        )
    }

    /// `q v q̄` for a unit quaternion `q`, acting on `v` as a pure quaternion.
    pub fn rotate(&self, v: &Vec3<F>) -> Vec3<F> {
        let p = Quaternion::from_parts(F::zero(), v.clone());
        self.mul(&p).mul(&self.conj()).imag()
    }

    /// Rows of the 3×3 matrix of `v ↦ q v q̄`.
    pub fn rotation_matrix(&self) -> [[F; 3]; 3] {
        let cols = [
            self.rotate(&Vec3::new(F::one(), F::zero(), F::zero())),
            self.rotate(&Vec3::new(F::zero(), F::one(), F::zero())),
            self.rotate(&Vec3::new(F::zero(), F::zero(), F::one())),
        ];
        let row = |r: usize| {
            [
                cols[0].coords()[r].clone(),
                cols[1].coords()[r].clone(),
                cols[2].coords()[r].clone(),
            ]
        };
        [row(0), row(1), row(2)]
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        ]
    }
}

impl<F: OrderedField> fmt::Display for Quaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = GoldenQuaternion;

    fn half(c: [i64; 4]) -> Q {
        Q::from_array(c.map(|v| GoldenNum::from_ratios(v, 2, 0, 1)))
    }

    fn v(x: i64, y: i64, z: i64) -> Vec3<GoldenNum> {
        Vec3::from_ints(x, y, z)
    }

    #[test]
    fn units_multiply_like_hamilton() {
        assert_eq!(Q::i().mul(&Q::j()), Q::k());
        assert_eq!(Q::j().mul(&Q::i()), Q::k().neg());
        assert_eq!(Q::k().mul(&Q::k()), Q::one().neg());
        let q = half([1, -1, 1, 1]);
        assert_eq!(q.mul(&Q::one()), q);
    }

    #[test]
    fn half_ones_squared() {
        let q = half([1, 1, 1, 1]);
        assert_eq!(q.mul(&q), half([-1, 1, 1, 1]));
    }

    #[test]
    fn rotations() {
        assert_eq!(Q::one().rotate(&v(1, 0, 0)), v(1, 0, 0));
        assert_eq!(Q::i().rotate(&v(0, 1, 0)), v(0, -1, 0));
        assert_eq!(half([1, 1, 1, 1]).rotate(&v(1, 0, 0)), v(0, 1, 0));
    }

    #[test]
    fn rotation_matrix_matches_rotate() {
        let q = half([1, 1, -1, 1]);
        let m = q.rotation_matrix();
        let u = v(2, -3, 5);
        let by_matrix = Vec3::new(
            m[0][0].clone() * &u.x + &(m[0][1].clone() * &u.y) + &(m[0][2].clone() * &u.z),
            m[1][0].clone() * &u.x + &(m[1][1].clone() * &u.y) + &(m[1][2].clone() * &u.z),
            m[2][0].clone() * &u.x + &(m[2][1].clone() * &u.y) + &(m[2][2].clone() * &u.z),
        );
        assert_eq!(by_matrix, q.rotate(&u));
    }
}
