use serde::Serialize;

use super::ShadowError;
use crate::goldfield::{GoldenNum, OrderedField, Sign};
use crate::polytopes::{Polyhedron, VertexType};
use crate::quatgroup::{BinaryGroup, GoldenQuaternion, Quaternion};
use crate::vec3::Vec3;

/// `2φ²`, the radius of the outermost (B) M120p shell.
pub fn unit_scale() -> GoldenNum {
    GoldenNum::from_i64(2) * &GoldenNum::phi_pow(2)
}

/// `v / (2φ²)`.
pub fn scale_to_unit(v: &Vec3<GoldenNum>) -> Vec3<GoldenNum> {
    v.scale(&unit_scale().inverse().expect("nonzero scale"))
}

/// A vertex latitude: `w = ½` for A, `1/(2φ)` for C, `0` for B.
pub fn type_from_w(w: &GoldenNum) -> Option<VertexType> {
    if *w == GoldenNum::from_ratio(1, 2) {
        Some(VertexType::A)
    } else if *w == GoldenNum::phi_inv() * &GoldenNum::from_ratio(1, 2) {
        Some(VertexType::C)
    } else if w.is_zero() {
        Some(VertexType::B)
    } else {
        None
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftedVertex {
    pub source: usize,
    pub scaled: Vec3<GoldenNum>,
    pub w: GoldenNum,
    pub quaternion: GoldenQuaternion,
    /// Index of the equal element of 2I.
    pub matched: usize,
    pub vertex_type: VertexType,
}

/// Scales vertex `source` to the unit ball, recovers `w = +√(1 − r'²)`
/// inside Q(√5), and finds the resulting quaternion in 2I.
pub fn lift(m: &Polyhedron<GoldenNum>, source: usize, two_i: &BinaryGroup<GoldenNum>) -> Result<LiftedVertex, ShadowError> {
    let scaled = scale_to_unit(m.vertex(source));
    let w_sq = GoldenNum::one() - &scaled.norm_sq();
    if w_sq.sign() == Sign::Negative {
        return Err(ShadowError::OutsideUnitBall { vertex: source });
    }
    let w = match w_sq.sqrt_in_field() {
        Ok(Some(w)) => w,
        _ => {
            return Err(ShadowError::NoRootInField {
                vertex: source,
                value: w_sq.to_string(),
            })
        }
    };
    let quaternion = Quaternion::from_parts(w.clone(), scaled.clone());
    let matched = two_i.index_of(&quaternion).ok_or_else(|| ShadowError::NoMatch {
        vertex: source,
        quaternion: quaternion.to_string(),
    })?;
    let vertex_type = type_from_w(&w).ok_or_else(|| ShadowError::UnknownLatitude {
        vertex: source,
        w: w.to_string(),
    })?;
    Ok(LiftedVertex {
        source,
        scaled,
        w,
        quaternion,
        matched,
        vertex_type,
    })
}

/// The 58 elements of 2I that no M120p vertex lifts to.
#[derive(Debug, Clone, Serialize)]
pub struct RemainderCensus {
    /// `±1`.
    pub poles: Vec<usize>,
    /// `|w| = φ/2`.
    pub golden_latitude: Vec<usize>,
    /// `(−w, v)` for a matched `(w, v)` with `w > 0`.
    pub lower_mirrors: Vec<usize>,
    /// Anything else; empty when the census closes.
    pub other: Vec<usize>,
}

impl RemainderCensus {
    pub fn total(&self) -> usize {
        self.poles.len() + self.golden_latitude.len() + self.lower_mirrors.len() + self.other.len()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchReport {
    pub lifted: Vec<LiftedVertex>,
    /// Lifted-type counts in the order A, C, B.
    pub type_counts: [(VertexType, usize); 3],
    pub remainder: RemainderCensus,
}

impl MatchReport {
    pub fn matched(&self) -> usize {
        self.lifted.len()
    }

    /// Matched elements are the upper-hemisphere ones with w ∈ {0, ½, 1/(2φ)}.
    pub fn matched_set_is_upper_latitudes(&self, two_i: &BinaryGroup<GoldenNum>) -> bool {
        let mut expected: Vec<usize> = (0..two_i.order())
            .filter(|&i| type_from_w(&two_i.element(i).w).is_some())
            .collect();
        let mut got: Vec<usize> = self.lifted.iter().map(|l| l.matched).collect();
        expected.sort_unstable();
        got.sort_unstable();
        expected == got
    }
}

/// Lifts every M120p vertex; fails on the first vertex that does not land
/// exactly on 2I or whose latitude type disagrees with its construction.
pub fn verify_62_match(m: &Polyhedron<GoldenNum>, two_i: &BinaryGroup<GoldenNum>) -> Result<MatchReport, ShadowError> {
    let mut lifted = Vec::with_capacity(m.vertices().len());
    for i in 0..m.vertices().len() {
        let l = lift(m, i, two_i)?;
        if let Some(t) = m.vertex_type(i) {
            if t != l.vertex_type {
                return Err(ShadowError::TypeMismatch {
                    vertex: i,
                    lifted: l.vertex_type.to_string(),
                    built: t.to_string(),
                });
            }
        }
        lifted.push(l);
    }
    let count = |t| lifted.iter().filter(|l| l.vertex_type == t).count();
    let type_counts = [
        (VertexType::A, count(VertexType::A)),
        (VertexType::C, count(VertexType::C)),
        (VertexType::B, count(VertexType::B)),
    ];
    let matched: Vec<usize> = lifted.iter().map(|l| l.matched).collect();
    let mirrors: Vec<GoldenQuaternion> = lifted
        .iter()
        .filter(|l| l.w.sign() == Sign::Positive)
        .map(|l| Quaternion::from_parts(-l.w.clone(), l.scaled.clone()))
        .collect();
    let half_phi = GoldenNum::phi() * &GoldenNum::from_ratio(1, 2);
    let mut remainder = RemainderCensus {
        poles: Vec::new(),
        golden_latitude: Vec::new(),
        lower_mirrors: Vec::new(),
        other: Vec::new(),
    };
    for i in 0..two_i.order() {
        if matched.contains(&i) {
            continue;
        }
        let q = two_i.element(i);
        if q.w.abs() == GoldenNum::one() {
            remainder.poles.push(i);
        } else if q.w.abs() == half_phi {
            remainder.golden_latitude.push(i);
        } else if mirrors.contains(q) {
            remainder.lower_mirrors.push(i);
        } else {
            remainder.other.push(i);
        }
    }
    Ok(MatchReport {
        lifted,
        type_counts,
        remainder,
    })
}
