//! Regenerated reference tables as CSV or Markdown.
//!
//! Floats carry the precision of the published table they mirror; the
//! exact value sits alongside wherever one exists.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::goldfield::{GoldenNum, OrderedField, Rational, Sign};
use crate::mckay::{analyse, DEFAULT_SEED};
use crate::model::Model;
use crate::polytopes::{convex_hull, radius_ratio_report, VertexType};
use crate::shadow::{
    angular_alignment_check, cell24_shell_check, shell_decompose, verify_62_match, ShellLabel,
};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("unknown table {0:?}; expected one of {1}")]
    Unknown(String, String),
    #[error("{0}")]
    Compute(String),
}

fn compute<E: fmt::Display>(e: E) -> TableError {
    TableError::Compute(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    M144pShells,
    M120pTypes,
    Crystal,
    ScaledRadius,
    WValues,
    Distribution,
    Axes,
    Shells,
    Cell24,
    Disdyakis,
    Correspondence,
}

impl TableName {
    pub const ALL: [TableName; 11] = [
        TableName::M144pShells,
        TableName::M120pTypes,
        TableName::Crystal,
        TableName::ScaledRadius,
        TableName::WValues,
        TableName::Distribution,
        TableName::Axes,
        TableName::Shells,
        TableName::Cell24,
        TableName::Disdyakis,
        TableName::Correspondence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::M144pShells => "m144p-shells",
            TableName::M120pTypes => "m120p-types",
            TableName::Crystal => "crystal",
            TableName::ScaledRadius => "scaled-radius",
            TableName::WValues => "w-values",
            TableName::Distribution => "distribution",
            TableName::Axes => "axes",
            TableName::Shells => "shells",
            TableName::Cell24 => "cell24",
            TableName::Disdyakis => "disdyakis",
            TableName::Correspondence => "correspondence",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TableName::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = TableName::ALL.iter().map(|t| t.as_str()).collect();
            TableError::Unknown(s.to_string(), names.join(", "))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: TableName,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(name: TableName, headers: &[&str]) -> Self {
        Table {
            name,
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = format!("| {} |\n", self.headers.iter().map(|h| esc(h)).collect::<Vec<_>>().join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for r in &self.rows {
            out.push_str(&format!("| {} |\n", r.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | ")));
        }
        out
    }

    pub fn column(&self, header: &str) -> Option<Vec<&str>> {
        let i = self.headers.iter().position(|h| h == header)?;
        Some(self.rows.iter().map(|r| r[i].as_str()).collect())
    }
}

fn f4(x: f64) -> String {
    format!("{x:.4}")
}

fn f3(x: f64) -> String {
    format!("{x:.3}")
}

fn degrees_of_w(w: &GoldenNum) -> String {
    format!("{:.0}°", 2.0 * w.to_f64().clamp(-1.0, 1.0).acos().to_degrees())
}

pub fn build_table(name: TableName, model: &Model) -> Result<Table, TableError> {
    match name {
        TableName::M144pShells => m144p_shells(model),
        TableName::M120pTypes => Ok(m120p_types(model)),
        TableName::Crystal => crystal(model),
        TableName::ScaledRadius => scaled_radius(model),
        TableName::WValues => w_values(model),
        TableName::Distribution => Ok(distribution(model)),
        TableName::Axes => axes(model),
        TableName::Shells => shells(model),
        TableName::Cell24 => cell24(model),
        TableName::Disdyakis => disdyakis(model),
        TableName::Correspondence => correspondence(model),
    }
}

fn m144p_shells(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::M144pShells, &["r2", "coordinate type", "count", "note"]);
    let p = &model.m144p.polyhedron;
    let mut patterns: BTreeMap<Rational, BTreeMap<Vec<Rational>, usize>> = BTreeMap::new();
    for v in p.vertices() {
        let mut abs: Vec<Rational> = v.coords().iter().map(|c| num_traits::Signed::abs(*c)).collect();
        abs.sort_by(|a, b| b.cmp(a));
        *patterns.entry(v.norm_sq()).or_default().entry(abs).or_default() += 1;
    }
    for (r2, pats) in patterns {
        if pats.len() != 1 {
            return Err(TableError::Compute(format!("r² = {r2} mixes coordinate patterns")));
        }
        let (pat, count) = pats.into_iter().next().expect("one pattern");
        let zeros = pat.iter().filter(|c| c.sign() == Sign::Zero).count();
        let distinct = {
            let mut d = pat.clone();
            d.dedup();
            d.len()
        };
        let cells: Vec<String> = pat
            .iter()
            .map(|c| if c.sign() == Sign::Zero { "0".into() } else { format!("±{c}") })
            .collect();
        let all_equal = zeros == 0 && distinct == 1;
        let ty = format!("({}){}", cells.join(", "), if all_equal { "" } else { " perms" });
        let note = match (zeros, distinct) {
            (2, _) => "octahedron vertices",
            (1, _) => "edge midpoints",
            (0, 1) => "face centres",
            _ => "hexagon vertices",
        };
        t.push(vec![r2.to_string(), ty, count.to_string(), note.into()]);
    }
    Ok(t)
}

fn m120p_types(model: &Model) -> Table {
    let mut t = Table::new(TableName::M120pTypes, &["type", "geometry", "count", "r2", "radius", "stabiliser", "fold"]);
    let p = model.m120p();
    for ty in [VertexType::A, VertexType::C, VertexType::B] {
        let idx = p.indices_of_type(ty);
        let r2 = p.vertex(idx[0]).norm_sq();
        let geometry = match ty {
            VertexType::A => "dodecahedron",
            VertexType::C => "icosahedron",
            VertexType::B => "icosidodecahedron",
        };
        t.push(vec![
            ty.to_string(),
            geometry.into(),
            idx.len().to_string(),
            r2.to_string(),
            f3(r2.to_f64().sqrt()),
            format!("C{}", ty.fold()),
            ty.fold().to_string(),
        ]);
    }
    t
}

fn crystal(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::Crystal, &["property", "M144p core", "M120p boundary"]);
    let integral = model
        .m144p
        .polyhedron
        .vertices()
        .iter()
        .all(|v| v.coords().iter().all(|c| c.is_integer()));
    let golden = model.m120p().vertices().iter().any(|v| v.coords().iter().any(|c| !c.is_rational()));
    let (_, _, g2o) = analyse(&model.two_o, DEFAULT_SEED).map_err(compute)?;
    let (_, _, g2i) = analyse(&model.two_i, DEFAULT_SEED).map_err(compute)?;
    t.push(vec!["symmetry".into(), "O_h".into(), "I_h".into()]);
    t.push(vec![
        "coordinates".into(),
        if integral { "integers" } else { "rationals" }.into(),
        if golden { "Q(sqrt5)" } else { "Q" }.into(),
    ]);
    t.push(vec![
        "McKay".into(),
        format!("{} (via {})", g2o.label, model.two_o.label()),
        format!("{} (via {})", g2i.label, model.two_i.label()),
    ]);
    Ok(t)
}

fn scaled_radius(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::ScaledRadius, &["type", "scaled r'^2", "scaled r'"]);
    let r = verify_62_match(model.m120p(), &model.two_i).map_err(compute)?;
    for ty in [VertexType::B, VertexType::A, VertexType::C] {
        let l = r.lifted.iter().find(|l| l.vertex_type == ty).expect("each type present");
        let r2 = l.scaled.norm_sq();
        t.push(vec![ty.to_string(), r2.to_string(), f3(r2.to_f64().sqrt())]);
    }
    Ok(t)
}

fn w_values(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::WValues, &["type", "w", "w (float)", "rotation angle"]);
    let r = verify_62_match(model.m120p(), &model.two_i).map_err(compute)?;
    for ty in [VertexType::A, VertexType::C, VertexType::B] {
        let l = r.lifted.iter().find(|l| l.vertex_type == ty).expect("each type present");
        t.push(vec![ty.to_string(), l.w.to_string(), f4(l.w.to_f64()), degrees_of_w(&l.w)]);
    }
    Ok(t)
}

fn distribution(model: &Model) -> Table {
    let mut t = Table::new(TableName::Distribution, &["|w|", "upper", "equator", "lower", "total"]);
    let census = model.two_i.w_census();
    let mut by_abs: BTreeMap<GoldenNum, [usize; 3]> = BTreeMap::new();
    for (w, n) in census {
        let slot = match w.sign() {
            Sign::Positive => 0,
            Sign::Zero => 1,
            Sign::Negative => 2,
        };
        by_abs.entry(w.abs()).or_default()[slot] += n;
    }
    for (w, c) in by_abs.into_iter().rev() {
        let cell = |n: usize| if n == 0 { "-".to_string() } else { n.to_string() };
        t.push(vec![w.to_string(), cell(c[0]), cell(c[1]), cell(c[2]), c.iter().sum::<usize>().to_string()]);
    }
    t
}

fn axes(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::Axes, &["|w|", "rotation angle", "axes", "type"]);
    let m = model.m120p();
    let align = angular_alignment_check(&model.two_i, m);
    let mut seen: BTreeMap<GoldenNum, VertexType> = BTreeMap::new();
    for (e, d) in align.direction_of.iter().enumerate() {
        let q = model.two_i.element(e);
        if q.w.sign() == Sign::Negative {
            continue;
        }
        if let Some(ty) = d.and_then(|d| m.vertex_type(d)) {
            seen.insert(q.w.clone(), ty);
        }
    }
    for (w, ty) in seen.into_iter().rev() {
        let axes = match ty {
            VertexType::A => "dodecahedron vertices",
            VertexType::C => "icosahedron vertices",
            VertexType::B => "edge midpoints",
        };
        t.push(vec![w.to_string(), degrees_of_w(&w), axes.into(), ty.to_string()]);
    }
    Ok(t)
}

fn shells(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::Shells, &["shell", "r", "r2", "w", "type", "count"]);
    for s in shell_decompose(&model.two_i, model.m120p()).map_err(compute)? {
        let (r, r2) = match (&s.label, &s.radius_sq) {
            (ShellLabel::Infinity, _) | (_, None) => ("inf".to_string(), "inf".to_string()),
            (_, Some(r2)) => (f4(s.radius_f64()), r2.to_string()),
        };
        t.push(vec![
            s.label.to_string(),
            r,
            r2,
            s.w.to_string(),
            s.vertex_type.map_or("-".into(), |t| t.to_string()),
            s.count().to_string(),
        ]);
    }
    Ok(t)
}

fn cell24(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::Cell24, &["r", "r2", "count", "directions"]);
    let r = cell24_shell_check(&model.two_t, model.m120p()).map_err(compute)?;
    let one = GoldenNum::one();
    for (r2, count) in &r.strata {
        let row = match r2 {
            None => vec!["inf".into(), "inf".into(), count.to_string(), "q = -1".into()],
            Some(r2) if r2.is_zero() => vec![f3(0.0), "0".into(), count.to_string(), "q = +1".into()],
            Some(r2) => {
                let dir = if *r2 == one && r.middle_is_axes {
                    "coordinate axes (±i, ±j, ±k)"
                } else if r.cube_directions_type_a {
                    "cube vertices (A-type)"
                } else {
                    "cube vertices"
                };
                vec![f3(r2.to_f64().sqrt()), r2.to_string(), count.to_string(), dir.into()]
            }
        };
        t.push(row);
    }
    Ok(t)
}

fn disdyakis(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(TableName::Disdyakis, &["property", "M120p", "Disdyakis triacontahedron"]);
    let h1 = convex_hull(model.m120p().vertices()).map_err(compute)?;
    let h2 = convex_hull(model.disdyakis.vertices()).map_err(compute)?;
    let convexity = |interior: usize| {
        if interior == 0 {
            "convex".to_string()
        } else {
            format!("non-convex ({interior} interior)")
        }
    };
    t.push(vec![
        "convexity".into(),
        convexity(h1.interior().len()),
        convexity(h2.interior().len()),
    ]);
    t.push(vec![
        "hull vertices".into(),
        h1.hull_vertices().len().to_string(),
        h2.hull_vertices().len().to_string(),
    ]);
    let ratio = |r: [f64; 3]| format!("1:{:.3}:{:.3}", r[1], r[2]);
    t.push(vec![
        "radius ratios (normalised)".into(),
        ratio(radius_ratio_report(model.m120p()).ratios),
        ratio(radius_ratio_report(&model.disdyakis).ratios),
    ]);
    Ok(t)
}

fn correspondence(model: &Model) -> Result<Table, TableError> {
    let mut t = Table::new(
        TableName::Correspondence,
        &["vertex", "type", "M120p", "scaled", "w", "lifted", "matched index", "matched 2I", "equal"],
    );
    let r = verify_62_match(model.m120p(), &model.two_i).map_err(compute)?;
    for l in &r.lifted {
        let matched = model.two_i.element(l.matched);
        t.push(vec![
            l.source.to_string(),
            l.vertex_type.to_string(),
            model.m120p().vertex(l.source).to_string(),
            l.scaled.to_string(),
            l.w.to_string(),
            l.quaternion.to_string(),
            l.matched.to_string(),
            matched.to_string(),
            if *matched == l.quaternion { "yes" } else { "no" }.into(),
        ]);
    }
    Ok(t)
}
