use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::ShadowError;
use crate::goldfield::{GoldenNum, OrderedField, Sign};
use crate::polytopes::{Polyhedron, VertexType};
use crate::quatgroup::{BinaryGroup, GoldenQuaternion};
use crate::vec3::Vec3;

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Projection {
    Finite(Vec3<GoldenNum>),
    Infinity,
}

impl Projection {
    pub fn finite(&self) -> Option<&Vec3<GoldenNum>> {
        match self {
            Projection::Finite(v) => Some(v),
            Projection::Infinity => None,
        }
    }
}

/// `(x, y, z) / (1 + w)`, from the pole `−1`.
pub fn stereo_project(q: &GoldenQuaternion) -> Projection {
    let d = GoldenNum::one() + &q.w;
    match d.inverse() {
        Ok(inv) => Projection::Finite(q.imag().scale(&inv)),
        Err(_) => Projection::Infinity,
    }
}

/// `|π(q)|² = (1 − w)/(1 + w)` for a unit quaternion; `None` at `w = −1`.
pub fn radius_sq_of_w(w: &GoldenNum) -> Option<GoldenNum> {
    let d = GoldenNum::one() + w;
    let inv = d.inverse().ok()?;
    Some((GoldenNum::one() - w) * &inv)
}

/// Closed-form squared radii of shells 1 through 7.
pub fn closed_form_radius_sq(index: u8) -> Option<GoldenNum> {
    let inner = |k: u8| match k {
        1 => GoldenNum::from_ints(3, 4).inverse().ok(),
        2 => Some(GoldenNum::from_ratio(1, 3)),
        3 => GoldenNum::from_ints(-1, 2).div(&GoldenNum::from_ints(1, 2)).ok(),
        4 => Some(GoldenNum::one()),
        _ => None,
    };
    match index {
        1..=4 => inner(index),
        5..=7 => inner(8 - index)?.inverse().ok(),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ShellLabel {
    Index(u8),
    Infinity,
}

impl fmt::Display for ShellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShellLabel::Index(i) => write!(f, "{i}"),
            ShellLabel::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ShellLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Shell {
    pub label: ShellLabel,
    pub w: GoldenNum,
    /// `None` for the shell at infinity.
    pub radius_sq: Option<GoldenNum>,
    pub vertex_type: Option<VertexType>,
    pub members: Vec<usize>,
}

impl Shell {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn radius_f64(&self) -> f64 {
        match &self.radius_sq {
            Some(r) => r.to_f64().sqrt(),
            None => f64::INFINITY,
        }
    }
}

fn direction_index(m: &Polyhedron<GoldenNum>, v: &Vec3<GoldenNum>) -> Option<usize> {
    m.vertices().iter().position(|u| u.same_ray(v))
}

/// Groups 2I by scalar part, in decreasing `w`, and types each shell by the
/// M120p vertex its members point along.
pub fn shell_decompose(two_i: &BinaryGroup<GoldenNum>, m: &Polyhedron<GoldenNum>) -> Result<Vec<Shell>, ShadowError> {
    let mut by_w: BTreeMap<GoldenNum, Vec<usize>> = BTreeMap::new();
    for (i, q) in two_i.elements().iter().enumerate() {
        by_w.entry(q.w.clone()).or_default().push(i);
    }
    let mut shells = Vec::with_capacity(by_w.len());
    for (k, (w, members)) in by_w.into_iter().rev().enumerate() {
        let radius_sq = radius_sq_of_w(&w);
        let label = if radius_sq.is_none() {
            ShellLabel::Infinity
        } else {
            ShellLabel::Index(k as u8)
        };
        let mut types = Vec::new();
        for &e in &members {
            let p = stereo_project(two_i.element(e));
            let Some(v) = p.finite() else { continue };
            if let Some(r) = &radius_sq {
                if v.norm_sq() != *r {
                    return Err(ShadowError::MixedShell { w: w.to_string() });
                }
            }
            if v.is_zero() {
                continue;
            }
            let d = direction_index(m, v).ok_or(ShadowError::Misaligned { element: e })?;
            let t = m.vertex_type(d);
            if !types.contains(&t) {
                types.push(t);
            }
        }
        if types.len() > 1 {
            return Err(ShadowError::MixedShell { w: w.to_string() });
        }
        shells.push(Shell {
            label,
            w,
            radius_sq,
            vertex_type: types.pop().flatten(),
            members,
        });
    }
    Ok(shells)
}

#[derive(Debug, Clone, Serialize)]
pub struct ReciprocalReport {
    pub pairs_checked: usize,
    pub failures: Vec<usize>,
}

impl ReciprocalReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `|π(q)|² · |π(−q)|² = 1` for every `q ≠ ±1`.
pub fn reciprocal_pair_check(two_i: &BinaryGroup<GoldenNum>) -> ReciprocalReport {
    let mut pairs_checked = 0;
    let mut failures = Vec::new();
    for (i, q) in two_i.elements().iter().enumerate() {
        let a = stereo_project(q);
        let b = stereo_project(two_i.element(two_i.negation(i)));
        let (Some(a), Some(b)) = (a.finite(), b.finite()) else { continue };
        if a.is_zero() || b.is_zero() {
            continue;
        }
        pairs_checked += 1;
        if a.norm_sq() * &b.norm_sq() != GoldenNum::one() {
            failures.push(i);
        }
    }
    ReciprocalReport { pairs_checked, failures }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlignmentReport {
    pub total: usize,
    pub aligned: usize,
    /// For each element, the M120p vertex its projection points along.
    pub direction_of: Vec<Option<usize>>,
    /// Elements pointing along each M120p vertex.
    pub multiplicity: Vec<usize>,
    pub misaligned: Vec<usize>,
}

impl AlignmentReport {
    pub fn pass(&self) -> bool {
        self.misaligned.is_empty() && self.aligned == self.total && self.multiplicity.iter().all(|&c| c > 0)
    }

    /// Distinct multiplicities seen on the vertices of each type.
    pub fn multiplicity_by_type(&self, m: &Polyhedron<GoldenNum>) -> BTreeMap<VertexType, Vec<usize>> {
        let mut out: BTreeMap<VertexType, Vec<usize>> = BTreeMap::new();
        for (i, &c) in self.multiplicity.iter().enumerate() {
            if let Some(t) = m.vertex_type(i) {
                let e = out.entry(t).or_default();
                if !e.contains(&c) {
                    e.push(c);
                }
            }
        }
        out
    }
}

pub fn angular_alignment_check(two_i: &BinaryGroup<GoldenNum>, m: &Polyhedron<GoldenNum>) -> AlignmentReport {
    let mut direction_of = vec![None; two_i.order()];
    let mut multiplicity = vec![0; m.vertices().len()];
    let mut misaligned = Vec::new();
    let mut total = 0;
    for (e, q) in two_i.elements().iter().enumerate() {
        let p = stereo_project(q);
        let Some(v) = p.finite() else { continue };
        if v.is_zero() {
            continue;
        }
        total += 1;
        match direction_index(m, v) {
            Some(d) => {
                direction_of[e] = Some(d);
                multiplicity[d] += 1;
            }
            None => misaligned.push(e),
        }
    }
    AlignmentReport {
        total,
        aligned: total - misaligned.len(),
        direction_of,
        multiplicity,
        misaligned,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InnerIcosahedronReport {
    /// (shell-1 element, C vertex) pairs along a common ray.
    pub pairs: Vec<(usize, usize)>,
    pub aligned: usize,
    pub one_to_one: bool,
    /// Shell 1 squared radius over shell 3 squared radius.
    pub ratio_sq: GoldenNum,
    pub expected_ratio_sq: GoldenNum,
    /// Every shell-1 projection is a positive multiple of a cyclic
    /// permutation of `(0, ±φ, ±φ²)`, and all 12 of those are hit.
    pub phi_family_directions: bool,
}

impl InnerIcosahedronReport {
    pub fn ratio_matches(&self) -> bool {
        self.ratio_sq == self.expected_ratio_sq
    }
}

fn phi_family() -> Vec<Vec3<GoldenNum>> {
    let mut out = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            let a = GoldenNum::phi() * &GoldenNum::from_i64(s1);
            let b = GoldenNum::phi_pow(2) * &GoldenNum::from_i64(s2);
            let z = GoldenNum::zero();
            out.push(Vec3::new(z.clone(), a.clone(), b.clone()));
            out.push(Vec3::new(b.clone(), z.clone(), a.clone()));
            out.push(Vec3::new(a, b, z));
        }
    }
    out
}

pub fn inner_icosahedron_check(
    two_i: &BinaryGroup<GoldenNum>,
    m: &Polyhedron<GoldenNum>,
    shells: &[Shell],
) -> Result<InnerIcosahedronReport, ShadowError> {
    let shell = |k| shells.iter().find(|s| s.label == ShellLabel::Index(k));
    let (Some(s1), Some(s3)) = (shell(1), shell(3)) else {
        return Err(ShadowError::MixedShell { w: "missing shell".into() });
    };
    let c_vertices = m.indices_of_type(VertexType::C);
    let family = phi_family();
    let mut hit = vec![false; family.len()];
    let mut pairs = Vec::new();
    let mut family_ok = true;
    for &e in &s1.members {
        let p = stereo_project(two_i.element(e));
        let v = p.finite().ok_or(ShadowError::Misaligned { element: e })?;
        let c = c_vertices
            .iter()
            .copied()
            .find(|&c| m.vertex(c).same_ray(v))
            .ok_or(ShadowError::Misaligned { element: e })?;
        pairs.push((e, c));
        match family.iter().position(|f| f.same_ray(v)) {
            Some(k) => hit[k] = true,
            None => family_ok = false,
        }
    }
    let mut cs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    cs.sort_unstable();
    cs.dedup();
    let r1 = s1.radius_sq.clone().unwrap_or_else(GoldenNum::zero);
    let r3 = s3.radius_sq.clone().unwrap_or_else(GoldenNum::one);
    Ok(InnerIcosahedronReport {
        aligned: pairs.len(),
        one_to_one: cs.len() == pairs.len() && cs.len() == c_vertices.len(),
        pairs,
        ratio_sq: r1.div(&r3).unwrap_or_else(|_| GoldenNum::zero()),
        expected_ratio_sq: GoldenNum::phi_pow(-2),
        phi_family_directions: family_ok && hit.iter().all(|&h| h),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderStep {
    pub from: GoldenNum,
    pub to: GoldenNum,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhiLadder {
    pub steps: Vec<LadderStep>,
    /// Upper-hemisphere latitudes φ/2, ½, 1/(2φ), 0.
    pub rungs: Vec<GoldenNum>,
}

impl PhiLadder {
    pub fn pass(&self) -> bool {
        self.steps.iter().all(|s| s.exact)
    }

    pub fn rungs_f64(&self) -> Vec<f64> {
        self.rungs.iter().map(OrderedField::to_f64).collect()
    }
}

/// Each step down the nonzero upper latitudes multiplies `w` by `1/φ`.
pub fn phi_ladder_check() -> PhiLadder {
    let half = GoldenNum::from_ratio(1, 2);
    let rungs = vec![
        GoldenNum::phi() * &half,
        half.clone(),
        GoldenNum::phi_inv() * &half,
        GoldenNum::zero(),
    ];
    let steps = rungs
        .windows(2)
        .take(2)
        .map(|p| LadderStep {
            from: p[0].clone(),
            to: p[1].clone(),
            exact: p[0].clone() * &GoldenNum::phi_inv() == p[1],
        })
        .collect();
    PhiLadder { steps, rungs }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell24Report {
    /// (squared radius, count) from the origin outward; `None` is infinity.
    pub strata: Vec<(Option<GoldenNum>, usize)>,
    pub middle_is_axes: bool,
    pub cube_directions_type_a: bool,
}

impl Cell24Report {
    pub fn counts(&self) -> Vec<usize> {
        self.strata.iter().map(|s| s.1).collect()
    }
}

/// Stereographic strata of 2T, with the cube-vertex directions typed
/// against the M120p.
pub fn cell24_shell_check(two_t: &BinaryGroup<GoldenNum>, m: &Polyhedron<GoldenNum>) -> Result<Cell24Report, ShadowError> {
    let mut by_r: BTreeMap<Option<GoldenNum>, Vec<usize>> = BTreeMap::new();
    for (i, q) in two_t.elements().iter().enumerate() {
        let key = stereo_project(q).finite().map(Vec3::norm_sq);
        by_r.entry(key).or_default().push(i);
    }
    // None sorts first; move infinity to the end.
    let mut strata: Vec<(Option<GoldenNum>, Vec<usize>)> = by_r.into_iter().collect();
    if strata.first().is_some_and(|s| s.0.is_none()) {
        let inf = strata.remove(0);
        strata.push(inf);
    }
    let axes: Vec<Vec3<GoldenNum>> = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        .iter()
        .flat_map(|&(x, y, z)| [Vec3::from_ints(x, y, z), Vec3::from_ints(-x, -y, -z)])
        .collect();
    let one = Some(GoldenNum::one());
    let mut middle_is_axes = false;
    let mut cube_directions_type_a = true;
    for (r, members) in &strata {
        let projections: Vec<Vec3<GoldenNum>> = members
            .iter()
            .filter_map(|&e| stereo_project(two_t.element(e)).finite().cloned())
            .collect();
        if *r == one {
            middle_is_axes = projections.len() == 6 && projections.iter().all(|p| axes.contains(p));
        } else if r.as_ref().is_some_and(|r| r.sign() == Sign::Positive) {
            for p in &projections {
                let t = direction_index(m, p).and_then(|d| m.vertex_type(d));
                cube_directions_type_a &= t == Some(VertexType::A);
            }
        }
    }
    Ok(Cell24Report {
        strata: strata.into_iter().map(|(r, m)| (r, m.len())).collect(),
        middle_is_axes,
        cube_directions_type_a,
    })
}

/// Finite stereographic images of a group as a face-free point set, typed
/// by the M120p direction each one points along.
pub fn projected_points(name: &str, g: &BinaryGroup<GoldenNum>, m: &Polyhedron<GoldenNum>) -> Polyhedron<GoldenNum> {
    let mut vertices = Vec::new();
    let mut types = Vec::new();
    for q in g.elements() {
        if let Projection::Finite(v) = stereo_project(q) {
            types.push(direction_index(m, &v).and_then(|d| m.vertex_type(d)));
            vertices.push(v);
        }
    }
    Polyhedron::new(name, vertices, types, Vec::new())
}

/// The 12 shell-1 projections with the faces of their convex hull.
pub fn inner_icosahedron_mesh(two_i: &BinaryGroup<GoldenNum>) -> Result<Polyhedron<GoldenNum>, ShadowError> {
    let top = GoldenNum::phi() * &GoldenNum::from_ratio(1, 2);
    let vertices: Vec<Vec3<GoldenNum>> = two_i
        .elements()
        .iter()
        .filter(|q| q.w == top)
        .filter_map(|q| stereo_project(q).finite().cloned())
        .collect();
    let hull = crate::polytopes::convex_hull(&vertices).map_err(|e| ShadowError::Orbit(e.to_string()))?;
    let types = vec![Some(VertexType::C); vertices.len()];
    Ok(Polyhedron::new("inner-icosahedron", vertices, types, hull.faces))
}
