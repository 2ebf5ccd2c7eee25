//! One line per acceptance criterion. Each line combines the library's own
//! verification checks with an oracle computed here in plain floats.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{PI, SQRT_2};
use std::process::ExitCode;

use mereon::model::Model;
use mereon::polytopes::VertexType;
use mereon::verify::{run_verify, VerifyOptions, VerifyReport};

const PHI: f64 = 1.618_033_988_749_895;

type Q = [f64; 4];

fn qmul(a: &Q, b: &Q) -> Q {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn key(q: &Q) -> [i64; 4] {
    q.map(|x| (x * 1e8).round() as i64)
}

fn float_closure(gens: &[Q]) -> Vec<Q> {
    let mut seen = BTreeMap::new();
    let mut frontier = vec![[1.0, 0.0, 0.0, 0.0]];
    seen.insert(key(&frontier[0]), frontier[0]);
    while let Some(q) = frontier.pop() {
        for g in gens {
            let p = qmul(&q, g);
            if seen.insert(key(&p), p).is_none() {
                frontier.push(p);
            }
            assert!(seen.len() <= 1000);
        }
    }
    seen.into_values().collect()
}

fn float_2i() -> Vec<Q> {
    float_closure(&[[0.5; 4], [PHI / 2.0, 0.5, 0.0, 0.5 / PHI]])
}

fn norm3(v: [f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn project(q: &Q) -> [f64; 3] {
    let s = 1.0 + q[0];
    [q[1] / s, q[2] / s, q[3] / s]
}

type Oracle = fn(&Ctx) -> (bool, String);

struct Ctx {
    model: Model,
    report: VerifyReport,
}

impl Ctx {
    fn lib(&self, n: u8) -> (bool, String) {
        let failed: Vec<String> = self
            .report
            .criterion(n)
            .filter(|c| !c.pass)
            .map(|c| format!("{} expected {} got {}", c.name, c.expected, c.actual))
            .collect();
        let total = self.report.criterion(n).count();
        let pass = total > 0 && failed.is_empty();
        let detail = if pass {
            format!("{total} checks")
        } else {
            failed.join("; ")
        };
        (pass, detail)
    }
}

fn c01(ctx: &Ctx) -> (bool, String) {
    let t = float_closure(&[[0.5; 4], [0.0, 1.0, 0.0, 0.0]]).len();
    let h = SQRT_2 / 2.0;
    let o = float_closure(&[[0.5; 4], [h, h, 0.0, 0.0]]).len();
    let i = float_2i().len();
    let m = &ctx.model;
    let built = (m.two_t.order(), m.two_o.order(), m.two_i.order());
    ((t, o, i) == (24, 48, 120) && built == (24, 48, 120), format!("float closure {t}/{o}/{i}, built {built:?}"))
}

fn c02(_: &Ctx) -> (bool, String) {
    let g = float_2i();
    let mut fam = [0; 3];
    let mut w = BTreeMap::new();
    for q in &g {
        let zeros = q.iter().filter(|x| x.abs() < 1e-9).count();
        let halves = q.iter().all(|x| (x.abs() - 0.5).abs() < 1e-9);
        fam[if zeros == 3 { 0 } else if halves { 1 } else { 2 }] += 1;
        *w.entry((q[0].abs() * 1e6).round() as i64).or_insert(0) += 1;
    }
    let census: Vec<usize> = w.into_values().rev().collect();
    (fam == [8, 16, 96] && census == [2, 24, 40, 24, 30], format!("families {fam:?}, |w| census {census:?}"))
}

fn c03(ctx: &Ctx) -> (bool, String) {
    let p = &ctx.model.m144p.polyhedron;
    let mut census = BTreeMap::new();
    for v in p.vertices() {
        let r2: f64 = v.to_f64().iter().map(|x| x * x).sum();
        *census.entry(r2.round() as i64).or_insert(0) += 1;
    }
    let euler = p.vertices().len() as i64 - p.edges().len() as i64 + p.faces().len() as i64;
    let oracle = census == BTreeMap::from([(8, 12), (12, 8), (14, 48), (16, 6)]) && euler == 2;
    (oracle, format!("float radius census {census:?}, chi {euler}"))
}

fn c04(ctx: &Ctx) -> (bool, String) {
    let p = ctx.model.m120p();
    let mut radii = BTreeMap::new();
    for (v, t) in p.vertices().iter().zip(p.types()) {
        radii.entry(t.unwrap()).or_insert_with(BTreeSet::new).insert((norm3(v.to_f64()) * 1e6).round() as i64);
    }
    let expect = [
        (VertexType::A, 3f64.sqrt() * PHI * PHI),
        (VertexType::C, (1.0 + PHI * PHI).sqrt() * PHI * PHI),
        (VertexType::B, 2.0 * PHI * PHI),
    ];
    let ok = expect.iter().all(|(t, r)| {
        radii[t].len() == 1 && (*radii[t].iter().next().unwrap() as f64 / 1e6 - r).abs() < 5e-4
    });
    let trinity = p.faces().iter().all(|f| {
        f.iter().map(|&i| p.types()[i]).collect::<BTreeSet<_>>().len() == 3
    });
    (ok && trinity, format!("float radii {:.3} {:.3} {:.3}, trinity {trinity}", expect[0].1, expect[1].1, expect[2].1))
}

fn c05(ctx: &Ctx) -> (bool, String) {
    let g = float_2i();
    let s = 2.0 * PHI * PHI;
    let p = ctx.model.m120p();
    let hits = p
        .vertices()
        .iter()
        .filter(|v| {
            let [x, y, z] = v.to_f64().map(|c| c / s);
            let w = (1.0 - x * x - y * y - z * z).sqrt();
            g.iter().any(|q| key(q) == key(&[w, x, y, z]))
        })
        .count();
    (hits == 62, format!("{hits}/62 float lifts land on 2I"))
}

fn c06(_: &Ctx) -> (bool, String) {
    let g = float_2i();
    let mut shells = BTreeMap::new();
    for q in g.iter().filter(|q| q[0].abs() < 1.0 - 1e-9) {
        let r2 = (1.0 - q[0]) / (1.0 + q[0]);
        *shells.entry((r2 * 1e8).round() as i64).or_insert(0) += 1;
    }
    let counts: Vec<usize> = shells.values().copied().collect();
    let radii: Vec<String> = shells.keys().take(7).map(|k| format!("{:.4}", (*k as f64 / 1e8).sqrt())).collect();
    let ok = counts == [12, 20, 12, 30, 12, 20, 12];
    (ok, format!("float shells {counts:?} radii {}", radii.join(" ")))
}

fn c07(ctx: &Ctx) -> (bool, String) {
    let dirs: Vec<[f64; 3]> = ctx.model.m120p().vertices().iter().map(|v| v.to_f64()).collect();
    let mut mult = vec![0; dirs.len()];
    let mut misses = 0;
    for q in float_2i().iter().filter(|q| q[0].abs() < 1.0 - 1e-9) {
        let p = project(q);
        match dirs.iter().position(|d| norm3(cross(p, *d)) < 1e-9 && p.iter().zip(d).map(|(a, b)| a * b).sum::<f64>() > 0.0) {
            Some(i) => mult[i] += 1,
            None => misses += 1,
        }
    }
    let m = ctx.model.m120p();
    let per: BTreeMap<VertexType, BTreeSet<usize>> = m.types().iter().zip(&mult).fold(BTreeMap::new(), |mut acc, (t, &n)| {
        acc.entry(t.unwrap()).or_insert_with(BTreeSet::new).insert(n);
        acc
    });
    let ok = misses == 0
        && per[&VertexType::B] == BTreeSet::from([1])
        && per[&VertexType::A] == BTreeSet::from([2])
        && per[&VertexType::C] == BTreeSet::from([4]);
    (ok, format!("{misses} unaligned, multiplicities {per:?}"))
}

fn c08(_: &Ctx) -> (bool, String) {
    let g = float_2i();
    let radius_at = |w: f64| ((1.0 - w) / (1.0 + w)).sqrt();
    let r1 = radius_at(PHI / 2.0);
    let r3 = radius_at(0.5 / PHI);
    let ratio = r1 / r3;
    let inner = g.iter().filter(|q| (q[0] - PHI / 2.0).abs() < 1e-9).count();
    (inner == 12 && (ratio - 1.0 / PHI).abs() < 1e-9, format!("12 = {inner}; r1/r3 = {ratio:.6}, 1/phi = {:.6}", 1.0 / PHI))
}

fn c09(_: &Ctx) -> (bool, String) {
    let a = (PHI / 2.0) / PHI;
    let b = 0.5 / PHI;
    ((a - 0.5).abs() < 1e-15 && (b - 1.0 / (2.0 * PHI)).abs() < 1e-15, format!("{a} and {b:.6}"))
}

fn c10(ctx: &Ctx) -> (bool, String) {
    let p = ctx.model.m120p();
    let radii: Vec<f64> = p
        .faces()
        .iter()
        .map(|f| {
            let c = (0..3).map(|k| f.iter().map(|&i| p.vertex(i).to_f64()[k]).sum::<f64>() / 3.0);
            c.map(|x| x * x).sum::<f64>().sqrt()
        })
        .collect();
    let lo = radii.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = radii.iter().cloned().fold(0.0, f64::max);
    ((hi - lo) < 1e-9 && (lo - 4.6950).abs() <= 1e-4, format!("centroid radius {lo:.6} (spread {:.1e}), target 4.6950", hi - lo))
}

fn c11(_: &Ctx) -> (bool, String) {
    let t = float_closure(&[[0.5; 4], [0.0, 1.0, 0.0, 0.0]]);
    let mut strata = BTreeMap::new();
    for q in &t {
        let k = if q[0] < -1.0 + 1e-9 { i64::MAX } else { (((1.0 - q[0]) / (1.0 + q[0])) * 1e6).round() as i64 };
        *strata.entry(k).or_insert(0) += 1;
    }
    let counts: Vec<usize> = strata.values().copied().collect();
    (counts == [1, 8, 6, 8, 1], format!("float strata {counts:?}"))
}

fn c12(_: &Ctx) -> (bool, String) {
    let order = |q: &Q| {
        let mut p = *q;
        (1..=20).find(|_| {
            let one = key(&p) == key(&[1.0, 0.0, 0.0, 0.0]);
            p = qmul(&p, q);
            one
        })
    };
    let h = SQRT_2 / 2.0;
    let o = float_closure(&[[0.5; 4], [h, h, 0.0, 0.0]]);
    let o8 = o.iter().any(|q| order(q) == Some(8));
    let i8 = float_2i().iter().any(|q| order(q) == Some(8));
    (120 % 48 != 0 && o8 && !i8, format!("120 mod 48 = {}, order 8 in 2O {o8}, in 2I {i8}", 120 % 48))
}

fn float_class_count(g: &[Q]) -> usize {
    let mut seen = BTreeSet::new();
    let mut classes = 0;
    for q in g {
        if seen.contains(&key(q)) {
            continue;
        }
        classes += 1;
        for h in g {
            let inv = [h[0], -h[1], -h[2], -h[3]];
            seen.insert(key(&qmul(&qmul(h, q), &inv)));
        }
    }
    classes
}

fn c13(ctx: &Ctx) -> (bool, String) {
    let h = SQRT_2 / 2.0;
    let counts = [
        float_class_count(&float_closure(&[[0.5; 4], [0.0, 1.0, 0.0, 0.0]])),
        float_class_count(&float_closure(&[[0.5; 4], [h, h, 0.0, 0.0]])),
        float_class_count(&float_2i()),
    ];
    let labels: Vec<String> = ctx
        .report
        .criterion(13)
        .filter(|c| c.name.ends_with("_label"))
        .map(|c| c.actual.clone())
        .collect();
    (counts == [7, 8, 9], format!("float class counts {counts:?}, labels {}", labels.join(" ")))
}

fn c14(_: &Ctx) -> (bool, String) {
    let n = 1024;
    let mut worst = 0.0f64;
    let mut ring = 0.0f64;
    for k in 0..n {
        let t = 2.0 * PI * k as f64 / n as f64;
        let h = SQRT_2 / 2.0;
        let mer = [h * (3.0 * t).cos(), h * (3.0 * t).sin(), h * (2.0 * t).cos(), h * (2.0 * t).sin()];
        let std = [h * (2.0 * t).cos(), h * (2.0 * t).sin(), h * (3.0 * t).cos(), h * (3.0 * t).sin()];
        let swapped = [mer[2], mer[3], mer[0], mer[1]];
        worst = worst.max(swapped.iter().zip(&std).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
        for v in [mer, std] {
            let s = 1.0 - v[3];
            let (x, y, z) = (v[0] / s, v[1] / s, v[2] / s);
            let rho = x.hypot(y);
            ring = ring.max(((rho - SQRT_2).powi(2) + z * z - 1.0).abs());
        }
    }
    (worst <= 1e-12 && ring <= 1e-12, format!("congruence {worst:.1e}, ring torus {ring:.1e}"))
}

fn ratio_triple(radii: impl Iterator<Item = f64>) -> [f64; 3] {
    let set: BTreeSet<i64> = radii.map(|r| (r * 1e9).round() as i64).collect();
    let r: Vec<f64> = set.into_iter().map(|k| k as f64 / 1e9).collect();
    [1.0, r[r.len() / 2] / r[0], r[r.len() - 1] / r[0]]
}

fn c15(ctx: &Ctx) -> (bool, String) {
    let m = ratio_triple(ctx.model.m120p().vertices().iter().map(|v| norm3(v.to_f64())));
    let d = ratio_triple(ctx.model.disdyakis.vertices().iter().map(|v| norm3(v.to_f64())));
    let near = [(m[1], 1.098), (m[2], 1.155), (d[1], 1.618), (d[2], 1.777)].iter().all(|(a, e)| (a - e).abs() < 1e-3);
    (near, format!("float ratios (1, {:.3}, {:.3}) and (1, {:.3}, {:.3})", m[1], m[2], d[1], d[2]))
}

fn main() -> ExitCode {
    let options = VerifyOptions::default();
    let model = Model::build().expect("model builds");
    let report = run_verify(&options).expect("verify runs");
    let ctx = Ctx { model, report };
    let oracles: [Oracle; 15] =
        [c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11, c12, c13, c14, c15];
    let mut failed = 0;
    for (k, oracle) in oracles.iter().enumerate() {
        let n = k as u8 + 1;
        let (lib_pass, lib_detail) = ctx.lib(n);
        let (ora_pass, ora_detail) = oracle(&ctx);
        let pass = lib_pass && ora_pass;
        failed += usize::from(!pass);
        println!(
            "criterion {n:02}: {} | library: {lib_detail} | oracle: {ora_detail}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    let again = run_verify(&options).expect("verify runs").to_json();
    let first = ctx.report.to_json();
    let same = first == again && ctx.lib(16).0;
    failed += usize::from(!same);
    println!(
        "criterion 16: {} | two full runs {} ({} bytes)",
        if same { "PASS" } else { "FAIL" },
        if same { "byte-identical" } else { "differ" },
        first.len()
    );
    println!("{} of 16 criteria pass", 16 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
