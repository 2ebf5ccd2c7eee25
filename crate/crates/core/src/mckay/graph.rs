use std::fmt;

use petgraph::algo::{connected_components, is_isomorphic};
use petgraph::graph::UnGraph;
use serde::{Serialize, Serializer};

use super::{CharacterTable, ClassData, McKayError};
use crate::quatgroup::GroupLabel;

/// Simply-laced Dynkin diagrams, finite and affine. Indices are ranks, so
/// an affine diagram of rank `n` has `n + 1` nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diagram {
    A(usize),
    D(usize),
    E(usize),
    AffineA(usize),
    AffineD(usize),
    AffineE(usize),
}

impl Diagram {
    pub fn nodes(self) -> usize {
        match self {
            Diagram::A(n) | Diagram::D(n) | Diagram::E(n) => n,
            Diagram::AffineA(n) | Diagram::AffineD(n) | Diagram::AffineE(n) => n + 1,
        }
    }

    pub fn edges(self) -> Vec<(usize, usize)> {
        let path = |n: usize| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        // centre 0 with legs of the given lengths
        let star = |legs: &[usize]| {
            let mut e = Vec::new();
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    e.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            e
        };
        match self {
            Diagram::A(n) => path(n),
            Diagram::D(n) => star(&[1, 1, n - 3]),
            Diagram::E(n) => star(&[1, 2, n - 4]),
            Diagram::AffineA(n) => {
                let mut e = path(n + 1);
                e.push((n, 0));
                e
            }
            Diagram::AffineD(n) => {
                // a path of n − 3 nodes with two leaves on each end
                let mut e: Vec<(usize, usize)> = (1..n - 3).map(|i| (i - 1, i)).collect();
                let last = n - 4;
                e.extend([(0, n - 3), (0, n - 2), (last, n - 1), (last, n)]);
                e
            }
            Diagram::AffineE(n) => match n {
                6 => star(&[2, 2, 2]),
                7 => star(&[1, 3, 3]),
                _ => star(&[1, 2, 5]),
            },
        }
    }

    fn graph(self) -> UnGraph<(), ()> {
        UnGraph::from_edges(self.edges().iter().map(|&(a, b)| (a as u32, b as u32)))
    }

    /// Candidates with `nodes` vertices.
    fn candidates(nodes: usize) -> Vec<Diagram> {
        let mut out = vec![Diagram::A(nodes)];
        if nodes >= 4 {
            out.push(Diagram::D(nodes));
        }
        if (6..=8).contains(&nodes) {
            out.push(Diagram::E(nodes));
        }
        if nodes >= 3 {
            out.push(Diagram::AffineA(nodes - 1));
        }
        if nodes >= 5 {
            out.push(Diagram::AffineD(nodes - 1));
        }
        if (7..=9).contains(&nodes) {
            out.push(Diagram::AffineE(nodes - 1));
        }
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(n) => write!(f, "A{n}"),
            Diagram::D(n) => write!(f, "D{n}"),
            Diagram::E(n) => write!(f, "E{n}"),
            Diagram::AffineA(n) => write!(f, "Â{n}"),
            Diagram::AffineD(n) => write!(f, "D̂{n}"),
            Diagram::AffineE(n) => write!(f, "Ê{n}"),
        }
    }
}

/// Label of a McKay graph: one of the affine E diagrams, or anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdeLabel {
    AffineE6,
    AffineE7,
    AffineE8,
    /// Not an affine E diagram; carries the diagram when it is some other
    /// simply-laced Dynkin diagram.
    Other(Option<Diagram>),
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeLabel::AffineE6 => f.write_str("Ê6"),
            AdeLabel::AffineE7 => f.write_str("Ê7"),
            AdeLabel::AffineE8 => f.write_str("Ê8"),
            AdeLabel::Other(Some(d)) => write!(f, "other ({d})"),
            AdeLabel::Other(None) => f.write_str("other"),
        }
    }
}

impl Serialize for AdeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn to_graph(adj: &[Vec<u32>]) -> UnGraph<(), ()> {
    let mut edges = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &a) in row.iter().enumerate().skip(i + 1) {
            for _ in 0..a {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let mut g = UnGraph::from_edges(edges);
    while g.node_count() < adj.len() {
        g.add_node(());
    }
    g
}

/// The Dynkin diagram isomorphic to `adj`, if any. Loops rule a graph out.
pub fn identify_diagram(adj: &[Vec<u32>]) -> Option<Diagram> {
    if adj.iter().enumerate().any(|(i, r)| r[i] != 0) || adj.iter().flatten().any(|&a| a > 1) {
        return None;
    }
    let g = to_graph(adj);
    Diagram::candidates(adj.len())
        .into_iter()
        .find(|d| is_isomorphic(&g, &d.graph()))
}

pub fn ade_classify(adj: &[Vec<u32>]) -> AdeLabel {
    match identify_diagram(adj) {
        Some(Diagram::AffineE(6)) => AdeLabel::AffineE6,
        Some(Diagram::AffineE(7)) => AdeLabel::AffineE7,
        Some(Diagram::AffineE(8)) => AdeLabel::AffineE8,
        other => AdeLabel::Other(other),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct McKayGraph {
    pub group: GroupLabel,
    pub adjacency: Vec<Vec<u32>>,
    pub dims: Vec<u32>,
    pub label: AdeLabel,
    /// Largest distance of an adjacency entry from its rounded value.
    pub max_residual: f64,
}

impl McKayGraph {
    pub fn degrees(&self) -> Vec<u32> {
        self.adjacency.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.adjacency.len();
        (0..n).all(|i| (0..n).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    pub fn is_connected(&self) -> bool {
        connected_components(&to_graph(&self.adjacency)) == 1
    }

    /// Adjacency with node `node` deleted.
    pub fn without(&self, node: usize) -> Vec<Vec<u32>> {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != node)
            .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != node).map(|(_, &a)| a).collect())
            .collect()
    }

    /// `max_i |(2d − A d)_i| / max d`: zero when the dimension vector spans
    /// the kernel of the affine Cartan matrix.
    pub fn affine_kernel_residual(&self) -> f64 {
        let d: Vec<f64> = self.dims.iter().map(|&x| x as f64).collect();
        let scale = d.iter().cloned().fold(0.0, f64::max);
        self.adjacency
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let ad: f64 = row.iter().zip(&d).map(|(&a, x)| a as f64 * x).sum();
                (2.0 * d[i] - ad).abs() / scale
            })
            .fold(0.0, f64::max)
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph mckay_{} {{\n  label=\"{}\";\n", self.group.name(), self.label);
        for (i, d) in self.dims.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{d}\"];\n"));
        }
        for (i, row) in self.adjacency.iter().enumerate() {
            for (j, &a) in row.iter().enumerate().skip(i + 1) {
                for _ in 0..a {
                    out.push_str(&format!("  n{i} -- n{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_csv(&self) -> String {
        let n = self.dims.len();
        let mut out = String::from("node,dim");
        for j in 0..n {
            out.push_str(&format!(",n{j}"));
        }
        out.push('\n');
        for (i, row) in self.adjacency.iter().enumerate() {
            out.push_str(&format!("n{i},{}", self.dims[i]));
            for a in row {
                out.push_str(&format!(",{a}"));
            }
            out.push('\n');
        }
        out
    }
}

/// `A_ij = (1/|G|) Σ_c |C_c| χ_V(c) χ_i(c) conj χ_j(c)` with `χ_V = 2w`.
pub fn mckay_graph(data: &ClassData, table: &CharacterTable) -> Result<McKayGraph, McKayError> {
    let sizes = data.sizes();
    let n = table.entries.len();
    let mut adjacency = vec![vec![0u32; n]; n];
    let mut max_residual: f64 = 0.0;
    for (i, row) in adjacency.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let s: num_complex::Complex64 = (0..sizes.len())
                .map(|c| table.entries[i][c] * table.entries[j][c].conj() * (sizes[c] as f64 * data.defining_trace[c]))
                .sum::<num_complex::Complex64>()
                / data.order as f64;
            let rounded = s.re.round();
            let residual = (s - rounded).norm();
            max_residual = max_residual.max(residual);
            if residual > 1e-6 || rounded < 0.0 {
                return Err(McKayError::NonIntegralEntry { i, j, value: s.re });
            }
            *cell = rounded as u32;
        }
    }
    Ok(McKayGraph {
        group: data.label,
        label: ade_classify(&adjacency),
        adjacency,
        dims: table.dims.clone(),
        max_residual,
    })
}
