//! Torus knots on the Clifford torus `x² + y² = z² + w² = ½`, the plane
//! swap relating `T(3,2)` to `T(2,3)`, and their stereographic images on
//! the ring torus `R = √2, r = 1`.
//!
//! Points of S³ here are `(x, y, z, w)` and the projection pole is
//! `N = (0, 0, 0, 1)`.

use std::f64::consts::{PI, SQRT_2, TAU};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::goldfield::{GoldenNum, OrderedField};
use crate::polytopes::VertexType;
use crate::quatgroup::BinaryGroup;

pub const TOLERANCE: f64 = 1e-12;
pub const DEFAULT_SAMPLES: usize = 1024;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KnotError {
    #[error("T({p},{q}) needs coprime p, q ≥ 1")]
    InvalidSpec { p: u32, q: u32 },
    #[error("{samples} samples are too few for T({p},{q}); need at least {needed}")]
    InsufficientSampling { p: u32, q: u32, samples: usize, needed: usize },
    #[error("angle jump {step} exceeds π/2 between consecutive samples")]
    UnwrapStep { step: f64 },
    #[error("curve passes through the projection pole")]
    ThroughPole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusKnotSpec {
    pub p: u32,
    pub q: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TorusKnotSpec {
    pub fn new(p: u32, q: u32) -> Result<Self, KnotError> {
        if p == 0 || q == 0 || gcd(p, q) != 1 {
            return Err(KnotError::InvalidSpec { p, q });
        }
        Ok(TorusKnotSpec { p, q })
    }

    /// `T(3,2)`.
    pub fn mereon() -> Self {
        TorusKnotSpec { p: 3, q: 2 }
    }

    /// `T(2,3)`.
    pub fn standard() -> Self {
        TorusKnotSpec { p: 2, q: 3 }
    }

    /// `8(p + q)`.
    pub fn min_samples(&self) -> usize {
        8 * (self.p + self.q) as usize
    }
}

/// `(cos pt, sin pt, cos qt, sin qt)/√2`.
pub fn torus_knot_point(spec: TorusKnotSpec, t: f64) -> [f64; 4] {
    let (p, q) = (spec.p as f64, spec.q as f64);
    [
        (p * t).cos() / SQRT_2,
        (p * t).sin() / SQRT_2,
        (q * t).cos() / SQRT_2,
        (q * t).sin() / SQRT_2,
    ]
}

/// `t_k = 2πk/n` for `k < n`.
pub fn sample_times(n: usize) -> Vec<f64> {
    (0..n).map(|k| TAU * k as f64 / n as f64).collect()
}

/// Distance of both Clifford-torus plane norms from ½, and of the norm
/// from 1.
pub fn clifford_residual(v: &[f64; 4]) -> f64 {
    let a = v[0] * v[0] + v[1] * v[1];
    let b = v[2] * v[2] + v[3] * v[3];
    (a - 0.5).abs().max((b - 0.5).abs()).max((a + b - 1.0).abs())
}

pub type RotationMatrix4 = [[i64; 4]; 4];

/// `(x, y, z, w) ↦ (z, w, x, y)`.
pub fn clifford_rotation() -> RotationMatrix4 {
    [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
}

pub fn mat_mul(a: &RotationMatrix4, b: &RotationMatrix4) -> RotationMatrix4 {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn transpose(a: &RotationMatrix4) -> RotationMatrix4 {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn identity4() -> RotationMatrix4 {
    let mut out = [[0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = 1;
    }
    out
}

/// Exact determinant by cofactor expansion along the first row.
pub fn det4(a: &RotationMatrix4) -> i64 {
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum()
    }
    det(&a.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

pub fn is_special_orthogonal(a: &RotationMatrix4) -> bool {
    mat_mul(&transpose(a), a) == identity4() && det4(a) == 1
}

pub fn apply4(a: &RotationMatrix4, v: &[f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..4).map(|k| a[i][k] as f64 * v[k]).sum();
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CongruenceReport {
    pub samples: usize,
    pub max_residual: f64,
    pub worst_t: f64,
}

impl CongruenceReport {
    pub fn pass(&self) -> bool {
        self.max_residual <= TOLERANCE
    }
}

/// Largest `|M q_{3,2}(t) − q_{2,3}(t)|` over the sample times.
pub fn congruence_check(samples: usize) -> CongruenceReport {
    let m = clifford_rotation();
    let mut max_residual: f64 = 0.0;
    let mut worst_t = 0.0;
    for t in sample_times(samples.max(3)) {
        let moved = apply4(&m, &torus_knot_point(TorusKnotSpec::mereon(), t));
        let target = torus_knot_point(TorusKnotSpec::standard(), t);
        let r = moved.iter().zip(&target).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
        if r > max_residual {
            max_residual = r;
            worst_t = t;
        }
    }
    CongruenceReport {
        samples: samples.max(3),
        max_residual,
        worst_t,
    }
}

/// `(x, y, z)/(1 − w)`; `None` at the pole.
pub fn stereo_north(v: &[f64; 4]) -> Option<[f64; 3]> {
    let d = 1.0 - v[3];
    if d.abs() <= TOLERANCE {
        return None;
    }
    Some([v[0] / d, v[1] / d, v[2] / d])
}

/// `(√(x² + y²) − √2)² + z² − 1`.
pub fn ring_torus_residual(p: &[f64; 3]) -> f64 {
    let rho = p[0].hypot(p[1]);
    (rho - SQRT_2).powi(2) + p[2] * p[2] - 1.0
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotSample {
    pub t: f64,
    pub point4: [f64; 4],
    pub point3: Option<[f64; 3]>,
}

pub fn sample_knot(spec: TorusKnotSpec, samples: usize) -> Vec<KnotSample> {
    sample_times(samples)
        .into_iter()
        .map(|t| {
            let point4 = torus_knot_point(spec, t);
            KnotSample {
                t,
                point4,
                point3: stereo_north(&point4),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotReport {
    pub spec: TorusKnotSpec,
    pub samples: usize,
    pub max_clifford_residual: f64,
    pub max_ring_residual: f64,
    pub winding: (i64, i64),
}

impl KnotReport {
    pub fn pass(&self) -> bool {
        self.max_clifford_residual <= TOLERANCE
            && self.max_ring_residual <= TOLERANCE
            && self.winding == (self.spec.p as i64, self.spec.q as i64)
    }
}

pub fn knot_report(spec: TorusKnotSpec, samples: usize) -> Result<KnotReport, KnotError> {
    let pts = sample_knot(spec, samples);
    let mut max_clifford_residual: f64 = 0.0;
    let mut max_ring_residual: f64 = 0.0;
    for s in &pts {
        max_clifford_residual = max_clifford_residual.max(clifford_residual(&s.point4));
        let p3 = s.point3.ok_or(KnotError::ThroughPole)?;
        max_ring_residual = max_ring_residual.max(ring_torus_residual(&p3).abs());
    }
    Ok(KnotReport {
        spec,
        samples,
        max_clifford_residual,
        max_ring_residual,
        winding: winding_numbers(spec, samples)?,
    })
}

/// Longitude angle about the z-axis and meridian angle about the core
/// circle `ρ = √2`, oriented so that both increase with the torus angles
/// of the 4-dimensional parametrisation.
pub fn torus_angles(p: &[f64; 3]) -> (f64, f64) {
    let rho = p[0].hypot(p[1]);
    (p[1].atan2(p[0]), (-p[2]).atan2(rho - SQRT_2))
}

/// Net turns of the two torus angles along the closed projected curve.
pub fn winding_numbers(spec: TorusKnotSpec, samples: usize) -> Result<(i64, i64), KnotError> {
    if samples < spec.min_samples() {
        return Err(KnotError::InsufficientSampling {
            p: spec.p,
            q: spec.q,
            samples,
            needed: spec.min_samples(),
        });
    }
    let mut angles = Vec::with_capacity(samples + 1);
    for t in sample_times(samples).into_iter().chain([TAU]) {
        let p3 = stereo_north(&torus_knot_point(spec, t)).ok_or(KnotError::ThroughPole)?;
        angles.push(torus_angles(&p3));
    }
    let mut total = (0.0, 0.0);
    for w in angles.windows(2) {
        let da = wrap(w[1].0 - w[0].0);
        let db = wrap(w[1].1 - w[0].1);
        let step = da.abs().max(db.abs());
        if step > PI / 2.0 {
            return Err(KnotError::UnwrapStep { step });
        }
        total.0 += da;
        total.1 += db;
    }
    Ok(((total.0 / TAU).round() as i64, (total.1 / TAU).round() as i64))
}

fn wrap(a: f64) -> f64 {
    let mut a = a % TAU;
    if a > PI {
        a -= TAU;
    } else if a < -PI {
        a += TAU;
    }
    a
}

/// How many B-type (`w = 0`) elements of 2I sit on the Clifford torus when
/// the quaternion slots `(w, x, y, z)` are split into two coordinate planes
/// in each of the three possible ways.
#[derive(Debug, Clone, Serialize)]
pub struct CliffordBCensus {
    pub b_elements: usize,
    /// `(plane pairing, elements with both plane norms ½)`.
    pub on_torus: Vec<(String, usize)>,
    /// B elements with unit imaginary part; all of them when `w = 0`.
    pub unit_imaginary: usize,
}

impl CliffordBCensus {
    pub fn any_pairing_holds(&self) -> bool {
        self.on_torus.iter().any(|(_, n)| *n == self.b_elements)
    }
}

pub fn clifford_b_census(two_i: &BinaryGroup<GoldenNum>) -> CliffordBCensus {
    let half = GoldenNum::from_ratio(1, 2);
    let names = ["w", "x", "y", "z"];
    let pairings = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    let b: Vec<_> = two_i.elements().iter().filter(|q| q.w.is_zero()).collect();
    let on_torus = pairings
        .iter()
        .map(|p| {
            let label = format!("({},{})|({},{})", names[p[0]], names[p[1]], names[p[2]], names[p[3]]);
            let n = b
                .iter()
                .filter(|q| {
                    let c = q.coords();
                    let a = c[p[0]].square() + &c[p[1]].square();
                    let d = c[p[2]].square() + &c[p[3]].square();
                    a == half && d == half
                })
                .count();
            (label, n)
        })
        .collect();
    let unit_imaginary = b.iter().filter(|q| q.imag().norm_sq() == GoldenNum::one()).count();
    CliffordBCensus {
        b_elements: b.len(),
        on_torus,
        unit_imaginary,
    }
}

/// The exponents `(2, 3, 5)` beside the vertex types with those fold orders.
pub fn exponent_table() -> Vec<(u32, VertexType)> {
    [2, 3, 5]
        .into_iter()
        .map(|e| {
            let t = VertexType::ALL.into_iter().find(|t| t.fold() == e).expect("fold order");
            (e, t)
        })
        .collect()
}

/// Closed polyline OBJ of the projected curve.
pub fn knot_obj(spec: TorusKnotSpec, samples: usize) -> Result<String, KnotError> {
    let pts = sample_knot(spec, samples);
    let mut out = format!("# T({},{}) stereographic image, {} samples\no knot_{}_{}\n", spec.p, spec.q, samples, spec.p, spec.q);
    for s in &pts {
        let p = s.point3.ok_or(KnotError::ThroughPole)?;
        let _ = writeln!(out, "v {:.12} {:.12} {:.12}", p[0], p[1], p[2]);
    }
    out.push('l');
    for i in 1..=pts.len() {
        let _ = write!(out, " {i}");
    }
    out.push_str(" 1\n");
    Ok(out)
}

pub fn knot_csv(spec: TorusKnotSpec, samples: usize) -> Result<String, KnotError> {
    let mut out = String::from("t,x4,y4,z4,w4,x3,y3,z3,ring_residual\n");
    for s in sample_knot(spec, samples) {
        let p = s.point3.ok_or(KnotError::ThroughPole)?;
        let v = s.point4;
        let _ = writeln!(
            out,
            "{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.3e}",
            s.t,
            v[0],
            v[1],
            v[2],
            v[3],
            p[0],
            p[1],
            p[2],
            ring_torus_residual(&p).abs()
        );
    }
    Ok(out)
}
