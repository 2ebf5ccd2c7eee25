//! The full acceptance suite as one deterministic report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cliffknot::{congruence_check, knot_report, TorusKnotSpec, DEFAULT_SAMPLES, TOLERANCE};
use crate::goldfield::{GoldenNum, OrderedField, Rational, Sqrt2Num};
use crate::mckay::{analyse, identify_diagram, AdeLabel, Diagram, DEFAULT_SEED};
use crate::model::{Model, ModelError};
use crate::polytopes::{
    matches_reference_vertices, convex_hull, mesh_integrity, radius_ratio_report, VertexType,
};
use crate::quatgroup::{closure, family_of, subgroup_obstruction_2o_in_2i, Family, Quaternion};
use crate::shadow::{
    angular_alignment_check, cell24_shell_check, closed_form_radius_sq, face_orbit_bijection,
    inner_icosahedron_check, phi_ladder_check, reciprocal_pair_check, shell_decompose, verify_62_match,
};
use crate::vec3::Vec3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
    /// Decided by exact arithmetic rather than a float tolerance.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(checks: Vec<Check>) -> Self {
        VerifyReport {
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn criterion(&self, n: u8) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.criterion == n)
    }

    pub fn criterion_pass(&self, n: u8) -> bool {
        let mut any = false;
        for c in self.criterion(n) {
            if !c.pass {
                return false;
            }
            any = true;
        }
        any
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {:<28} expected {} | actual {}{}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual,
                if c.exact { "" } else { " (float)" }
            );
        }
        let failed = self.failures().len();
        let _ = writeln!(
            out,
            "{}: {} of {} checks passed",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len() - failed,
            self.checks.len()
        );
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Moves M144p vertex 0 by one unit along x before the checks run.
    CorruptM144pVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            fault: None,
        }
    }
}

/// Criteria 1 to 15 on a freshly built model, then criterion 16: a second
/// build and run must serialise to the same bytes.
pub fn run_verify(options: &VerifyOptions) -> Result<VerifyReport, ModelError> {
    let first = verify_model(&faulted_model(options)?, options);
    let second = verify_model(&faulted_model(options)?, options);
    let (a, b) = (first.to_json(), second.to_json());
    let mut checks = first.checks;
    checks.push(Check {
        criterion: 16,
        name: "16.rerun_identical".into(),
        pass: a == b,
        expected: format!("{} bytes, identical", a.len()),
        actual: format!("{} bytes, {}", b.len(), if a == b { "identical" } else { "different" }),
        exact: true,
    });
    Ok(VerifyReport::new(checks))
}

fn faulted_model(options: &VerifyOptions) -> Result<Model, ModelError> {
    let mut model = Model::build()?;
    if options.fault == Some(Fault::CorruptM144pVertex) {
        let p = &mut model.m144p.polyhedron;
        let v = p.vertex(0).clone();
        p.set_vertex(0, Vec3::new(v.x + &Rational::from_i64(1), v.y, v.z));
    }
    Ok(model)
}

struct Checks {
    criterion: u8,
    out: Vec<Check>,
}

impl Checks {
    fn add(&mut self, name: &str, pass: bool, expected: impl ToString, actual: impl ToString, exact: bool) {
        self.out.push(Check {
            criterion: self.criterion,
            name: format!("{:02}.{}", self.criterion, name),
            pass,
            expected: expected.to_string(),
            actual: actual.to_string(),
            exact,
        });
    }

    fn exact<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, expected: T, actual: T) {
        let pass = expected == actual;
        self.add(name, pass, format!("{expected:?}"), format!("{actual:?}"), true);
    }

    fn within(&mut self, name: &str, expected: f64, actual: f64, tol: f64) {
        let pass = (expected - actual).abs() <= tol;
        self.add(name, pass, format!("{expected} ± {tol:e}"), format!("{actual:.6}"), false);
    }

    fn at_most(&mut self, name: &str, bound: f64, actual: f64) {
        self.add(name, actual <= bound, format!("<= {bound:e}"), format!("{actual:.3e}"), false);
    }
}

fn f6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// Runs criteria 1 through 15 against an already built model.
pub fn verify_model(model: &Model, options: &VerifyOptions) -> VerifyReport {
    let mut c = Checks { criterion: 1, out: Vec::new() };
    groups(&mut c, model);
    c.criterion = 3;
    m144p(&mut c, model);
    c.criterion = 4;
    m120p(&mut c, model);
    shadow(&mut c, model);
    c.criterion = 12;
    let ob = subgroup_obstruction_2o_in_2i(&model.two_o, &model.two_i);
    c.exact("lagrange_remainder", 24, ob.lagrange_remainder);
    c.exact("order8_in_2o", true, ob.order_8_in_2o);
    c.exact("order8_in_2i", false, ob.order_8_in_2i);
    c.exact("excluded", true, ob.excludes_embedding());
    c.criterion = 13;
    mckay(&mut c, model, options.seed);
    c.criterion = 14;
    knots(&mut c, options.samples);
    c.criterion = 15;
    disdyakis(&mut c, model);
    VerifyReport::new(c.out)
}

fn groups(c: &mut Checks, model: &Model) {
    let h = GoldenNum::from_ratio(1, 2);
    let s = Quaternion::new(h.clone(), h.clone(), h.clone(), h.clone());
    let t = closure(&[s.clone(), Quaternion::i()], 1000).map(|v| v.len()).unwrap_or(0);
    let five = Quaternion::new(GoldenNum::phi() * &h, h.clone(), GoldenNum::zero(), GoldenNum::phi_inv() * &h);
    let i = closure(&[s, five], 1000);
    let hs = Sqrt2Num::from_ratio(1, 2);
    let r = Sqrt2Num::new(Rational::from_i64(0), Rational::from_ratio(1, 2));
    let s2 = Quaternion::new(hs.clone(), hs.clone(), hs.clone(), hs);
    let o = closure(&[s2, Quaternion::new(r.clone(), r, Sqrt2Num::zero(), Sqrt2Num::zero())], 1000);
    c.exact("closure_orders", (24, 48, 120), (t, o.as_ref().map_or(0, Vec::len), i.as_ref().map_or(0, Vec::len)));
    c.exact(
        "closure_equals_built",
        (true, true),
        (
            o.map(|v| v == model.two_o.elements()).unwrap_or(false),
            i.map(|v| v == model.two_i.elements()).unwrap_or(false),
        ),
    );
    c.criterion = 2;
    let fam = |f| model.two_i.elements().iter().filter(|q| family_of(q) == f).count();
    c.exact("family_census", (8, 16, 96), (fam(Family::Axis), fam(Family::HalfUnits), fam(Family::Golden)));
    let mut by_abs = std::collections::BTreeMap::new();
    for (w, n) in model.two_i.w_census() {
        *by_abs.entry(w.abs()).or_insert(0) += n;
    }
    let census: Vec<usize> = by_abs.into_values().rev().collect();
    c.exact("w_census", vec![2, 24, 40, 24, 30], census);
}

fn m144p(c: &mut Checks, model: &Model) {
    let p = &model.m144p.polyhedron;
    c.exact("reference_vertices_equal", true, matches_reference_vertices(p));
    let r = mesh_integrity(p);
    c.exact("vef", (74, 216, 144), (r.vertices, r.edges, r.faces));
    c.exact("euler", 2, r.euler);
    let census: Vec<(String, usize)> = p.radius_census().into_iter().map(|(r, n)| (r.to_string(), n)).collect();
    let expected: Vec<(String, usize)> = [("8", 12), ("12", 8), ("14", 48), ("16", 6)]
        .into_iter()
        .map(|(r, n)| (r.to_string(), n))
        .collect();
    c.exact("shell_census", expected, census);
}

fn m120p(c: &mut Checks, model: &Model) {
    let p = model.m120p();
    let r = mesh_integrity(p);
    c.exact("vef", (62, 180, 120), (r.vertices, r.edges, r.faces));
    c.exact("euler", 2, r.euler);
    c.exact("manifold", true, r.is_closed_sphere());
    c.exact("trinity_violations", 0, p.trinity_violations().len());
    let phi4 = GoldenNum::phi_pow(4);
    let expected = [
        (VertexType::A, phi4.clone() * &GoldenNum::from_i64(3), 4.535),
        (VertexType::C, phi4.clone() * &(GoldenNum::one() + &GoldenNum::phi_pow(2)), 4.980),
        (VertexType::B, phi4 * &GoldenNum::from_i64(4), 5.236),
    ];
    for (t, r2, float) in expected {
        let idx = p.indices_of_type(t);
        let all = idx.iter().all(|&i| p.vertex(i).norm_sq() == r2);
        c.add(&format!("r2_{t}"), all, &r2, if all { r2.to_string() } else { "mixed".into() }, true);
        c.within(&format!("radius_{t}"), float, f6(r2.to_f64().sqrt()), 5e-4);
    }
}

fn shadow(c: &mut Checks, model: &Model) {
    let m = model.m120p();
    let g = &model.two_i;
    c.criterion = 5;
    match verify_62_match(m, g) {
        Ok(r) => {
            c.exact("matched", 62, r.matched());
            c.exact("upper_latitudes", true, r.matched_set_is_upper_latitudes(g));
            let counts: Vec<usize> = r.type_counts.iter().map(|t| t.1).collect();
            c.exact("type_counts_acb", vec![20, 12, 30], counts);
            let rem = &r.remainder;
            c.exact(
                "remainder",
                (2, 24, 32, 0),
                (rem.poles.len(), rem.golden_latitude.len(), rem.lower_mirrors.len(), rem.other.len()),
            );
        }
        Err(e) => c.add("matched", false, 62, e, true),
    }
    c.criterion = 6;
    let shells = match shell_decompose(g, m) {
        Ok(s) => s,
        Err(e) => {
            c.add("decompose", false, "9 strata", e, true);
            return;
        }
    };
    let counts: Vec<usize> = shells.iter().map(|s| s.count()).collect();
    c.exact("counts", vec![1, 12, 20, 12, 30, 12, 20, 12, 1], counts);
    let closed = (1..=7u8).all(|k| shells.get(k as usize).and_then(|s| s.radius_sq.clone()) == closed_form_radius_sq(k));
    c.exact("closed_forms", true, closed);
    let floats: Vec<String> = shells[1..shells.len().min(8)].iter().map(|s| format!("{:.4}", s.radius_f64())).collect();
    let expected: Vec<String> = ["0.3249", "0.5774", "0.7265", "1.0000", "1.3764", "1.7321", "3.0777"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let pass = floats == expected;
    c.add("radii_4dp", pass, expected.join(" "), floats.join(" "), false);
    use VertexType::*;
    let types: Vec<Option<VertexType>> = shells.iter().map(|s| s.vertex_type).collect();
    c.exact("types", vec![None, Some(C), Some(A), Some(C), Some(B), Some(C), Some(A), Some(C), None], types);
    let rec = reciprocal_pair_check(g);
    c.exact("reciprocal", (118, 0), (rec.pairs_checked, rec.failures.len()));

    c.criterion = 7;
    let al = angular_alignment_check(g, m);
    c.exact("aligned", (118, 118), (al.aligned, al.total));
    let by = al.multiplicity_by_type(m);
    c.exact(
        "multiplicity_bac",
        (vec![1], vec![2], vec![4]),
        (by.get(&B).cloned().unwrap_or_default(), by.get(&A).cloned().unwrap_or_default(), by.get(&C).cloned().unwrap_or_default()),
    );

    c.criterion = 8;
    match inner_icosahedron_check(g, m, &shells) {
        Ok(r) => {
            c.exact("aligned", (12, true), (r.aligned, r.one_to_one));
            c.exact("phi_directions", true, r.phi_family_directions);
            c.add("ratio_sq", r.ratio_matches(), &r.expected_ratio_sq, &r.ratio_sq, true);
        }
        Err(e) => c.add("aligned", false, 12, e, true),
    }

    c.criterion = 9;
    let l = phi_ladder_check();
    for (k, s) in l.steps.iter().enumerate() {
        c.add(&format!("step{}", k + 1), s.exact, format!("({})/phi = {}", s.from, s.to), if s.exact { "equal" } else { "unequal" }, true);
    }

    c.criterion = 10;
    match face_orbit_bijection(g, m) {
        Ok(f) => {
            c.exact("orbit", (120, 1, true), (f.orbit_size, f.stabilizer_size, f.is_bijection()));
            c.exact("common_radius", true, f.centroid_radius_sq.is_some());
            c.within("radius_float", 4.6950, f6(f.centroid_radius().unwrap_or(f64::NAN)), 1e-4);
        }
        Err(e) => c.add("orbit", false, 120, e, true),
    }

    c.criterion = 11;
    match cell24_shell_check(&model.two_t, m) {
        Ok(r) => {
            c.exact("counts", vec![1, 8, 6, 8, 1], r.counts());
            let radii: Vec<String> = r.strata.iter().map(|s| s.0.as_ref().map_or("inf".into(), |x| x.to_string())).collect();
            c.exact("radii_sq", vec!["0", "1/3", "1", "3", "inf"], radii.iter().map(String::as_str).collect());
            c.exact("middle_axes", true, r.middle_is_axes);
            c.exact("cube_type_a", true, r.cube_directions_type_a);
        }
        Err(e) => c.add("counts", false, "1 8 6 8 1", e, true),
    }
}

fn mckay(c: &mut Checks, model: &Model, seed: u64) {
    let cases = [
        ("2T", analyse(&model.two_t, seed), 7, AdeLabel::AffineE6, Diagram::E(6)),
        ("2O", analyse(&model.two_o, seed), 8, AdeLabel::AffineE7, Diagram::E(7)),
        ("2I", analyse(&model.two_i, seed), 9, AdeLabel::AffineE8, Diagram::E(8)),
    ];
    for (name, res, classes, label, finite) in cases {
        match res {
            Ok((data, _, g)) => {
                c.exact(&format!("{name}_classes"), classes, data.len());
                c.at_most(&format!("{name}_integrality"), 1e-6, g.max_residual);
                c.add(&format!("{name}_label"), g.label == label, label, g.label, true);
                c.exact(&format!("{name}_finite"), Some(finite), identify_diagram(&g.without(0)));
                c.at_most(&format!("{name}_kernel"), 1e-6, g.affine_kernel_residual());
            }
            Err(e) => c.add(&format!("{name}_classes"), false, classes, e, false),
        }
    }
}

fn knots(c: &mut Checks, samples: usize) {
    let r = congruence_check(samples);
    c.at_most("congruence", TOLERANCE, r.max_residual);
    for spec in [TorusKnotSpec::mereon(), TorusKnotSpec::standard()] {
        let tag = format!("T{}{}", spec.p, spec.q);
        match knot_report(spec, samples) {
            Ok(k) => {
                c.at_most(&format!("{tag}_ring"), TOLERANCE, k.max_ring_residual);
                c.exact(&format!("{tag}_winding"), (spec.p as i64, spec.q as i64), k.winding);
            }
            Err(e) => c.add(&format!("{tag}_ring"), false, "sampled curve", e, false),
        }
    }
}

fn disdyakis(c: &mut Checks, model: &Model) {
    let m = model.m120p();
    let r1 = radius_ratio_report(m).ratios;
    let r2 = radius_ratio_report(&model.disdyakis).ratios;
    c.within("m120p_ratio_mid", 1.098, f6(r1[1]), 1e-3);
    c.within("m120p_ratio_max", 1.155, f6(r1[2]), 1e-3);
    c.within("dt_ratio_mid", 1.618, f6(r2[1]), 1e-3);
    c.within("dt_ratio_max", 1.777, f6(r2[2]), 1e-3);
    match convex_hull(m.vertices()) {
        Ok(h) => c.exact("m120p_interior_is_a", m.indices_of_type(VertexType::A), h.interior()),
        Err(e) => c.add("m120p_interior_is_a", false, "20 A vertices", e, true),
    }
    match convex_hull(model.disdyakis.vertices()) {
        Ok(h) => {
            let interior = h.interior();
            c.add("dt_interior_empty", interior.is_empty(), "0 interior", format!("{} interior", interior.len()), true)
        }
        Err(e) => c.add("dt_interior_empty", false, "0 interior", e, true),
    }
}
