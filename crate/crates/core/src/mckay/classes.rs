use serde::Serialize;

use crate::goldfield::OrderedField;
use crate::quatgroup::{BinaryGroup, ConjugacyClass, GroupLabel};

/// Conjugacy classes of a binary group with the exact structure constants
/// of its class algebra.
#[derive(Debug, Clone, Serialize)]
pub struct ClassData {
    pub label: GroupLabel,
    pub order: usize,
    pub classes: Vec<ConjugacyClass>,
    /// `coefficients[i][j][k]`: number of `(x, y) ∈ C_i × C_j` with `xy`
    /// equal to a fixed element of `C_k`.
    pub coefficients: Vec<Vec<Vec<u64>>>,
    /// Position of the identity class.
    pub identity_class: usize,
    /// `2w` of each class representative, the trace of the defining
    /// 2-dimensional representation.
    pub defining_trace: Vec<f64>,
    /// Element order of each class.
    pub element_order: Vec<usize>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    /// Class-sum matrix `M_j` with `(M_j)_{ik} = c_{ji}^k`.
    pub fn class_matrix(&self, j: usize) -> Vec<Vec<u64>> {
        self.coefficients[j].clone()
    }

    /// `Σ_k c_{ij}^k |C_k| = |C_i| |C_j|` for every pair.
    pub fn counting_identity_holds(&self) -> bool {
        let sizes = self.sizes();
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| {
                let s: u64 = (0..self.len()).map(|k| self.coefficients[i][j][k] * sizes[k] as u64).sum();
                s == (sizes[i] * sizes[j]) as u64
            })
        })
    }

    /// Exact pairwise commutation of the class-sum matrices.
    pub fn class_matrices_commute(&self) -> bool {
        let n = self.len();
        let product = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
            (0..n)
                .map(|i| (0..n).map(|k| (0..n).map(|m| a[i][m] * b[m][k]).sum()).collect())
                .collect()
        };
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let (ma, mb) = (self.class_matrix(a), self.class_matrix(b));
                product(&ma, &mb) == product(&mb, &ma)
            })
        })
    }
}

pub fn class_algebra<F: OrderedField>(g: &BinaryGroup<F>) -> ClassData {
    let classes = g.conjugacy_classes();
    let class_of = g.class_of(&classes);
    let r = classes.len();
    let mut coefficients = vec![vec![vec![0u64; r]; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let z = ck.representative();
        for (i, ci) in classes.iter().enumerate() {
            for &x in &ci.members {
                let y = g.mul(g.inverse(x), z);
                coefficients[i][class_of[y]][k] += 1;
            }
        }
    }
    let identity_class = class_of[g.identity()];
    let defining_trace = classes
        .iter()
        .map(|c| 2.0 * g.element(c.representative()).w.to_f64())
        .collect();
    let element_order = classes.iter().map(|c| g.order_of(c.representative())).collect();
    ClassData {
        label: g.label(),
        order: g.order(),
        classes,
        coefficients,
        identity_class,
        defining_trace,
        element_order,
    }
}
