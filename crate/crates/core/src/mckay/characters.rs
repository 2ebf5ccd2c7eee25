use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ClassData, McKayError};

/// Character table with rows ordered by dimension and then by the rounded
/// character values, so reruns with the same seed print identically.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    /// `entries[irrep][class]`.
    #[serde(serialize_with = "serialize_entries")]
    pub entries: Vec<Vec<Complex64>>,
    pub dims: Vec<u32>,
    /// Largest distance of a computed dimension from its rounded value.
    pub dim_residual: f64,
    /// Random combinations tried before the eigenvalues separated.
    pub attempts: u32,
}

fn serialize_entries<S: serde::Serializer>(e: &[Vec<Complex64>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(e.len()))?;
    for row in e {
        let r: Vec<[f64; 2]> = row.iter().map(|c| [round6(c.re), round6(c.im)]).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

/// Rounds to 6 decimals and clears negative zero.
pub fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl CharacterTable {
    pub fn trivial_row(&self) -> usize {
        0
    }

    /// Largest deviation of `Σ_c |C_c| χ_i(c) conj χ_j(c)` from `|G| δ_ij`,
    /// divided by `|G|`.
    pub fn row_orthogonality_error(&self, data: &ClassData) -> f64 {
        let sizes = data.sizes();
        let n = self.entries.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let s: Complex64 = (0..sizes.len())
                    .map(|c| self.entries[i][c] * self.entries[j][c].conj() * sizes[c] as f64)
                    .sum();
                let target = if i == j { data.order as f64 } else { 0.0 };
                worst = worst.max((s - target).norm() / data.order as f64);
            }
        }
        worst
    }

    /// Largest deviation of `Σ_i χ_i(a) conj χ_i(b)` from `δ_ab |G|/|C_a|`,
    /// divided by `|G|`.
    pub fn column_orthogonality_error(&self, data: &ClassData) -> f64 {
        let sizes = data.sizes();
        let r = sizes.len();
        let mut worst: f64 = 0.0;
        for a in 0..r {
            for b in 0..r {
                let s: Complex64 = self.entries.iter().map(|row| row[a] * row[b].conj()).sum();
                let target = if a == b { data.order as f64 / sizes[a] as f64 } else { 0.0 };
                worst = worst.max((s - target).norm() / data.order as f64);
            }
        }
        worst
    }

    pub fn dims_squared_sum(&self) -> u64 {
        self.dims.iter().map(|&d| (d as u64).pow(2)).sum()
    }

    /// CSV with one row per irrep; entries are `re` or `re+imi`.
    pub fn to_csv(&self, data: &ClassData) -> String {
        let mut out = String::from("irrep,dim");
        for (c, size) in data.sizes().iter().enumerate() {
            out.push_str(&format!(",class{c}(size {size} order {})", data.element_order[c]));
        }
        out.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            out.push_str(&format!("chi{},{}", i, self.dims[i]));
            for z in row {
                out.push(',');
                out.push_str(&format_complex(*z));
            }
            out.push('\n');
        }
        out
    }
}

pub fn format_complex(z: Complex64) -> String {
    let (re, im) = (round6(z.re), round6(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if im > 0.0 {
        format!("{re}+{im}i")
    } else {
        format!("{re}{im}i")
    }
}

const MAX_ATTEMPTS: u32 = 16;
const SEPARATION: f64 = 1e-6;

/// Burnside's method: the vectors `ω_χ(C_k) = |C_k| χ(g_k)/χ(1)` are the
/// common eigenvectors of the class-sum matrices. A seeded random real
/// combination of those matrices separates them.
pub fn character_table(data: &ClassData, seed: u64) -> Result<CharacterTable, McKayError> {
    let r = data.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        let mut m = DMatrix::<f64>::zeros(r, r);
        for j in 0..r {
            let t: f64 = rng.gen_range(-1.0..1.0);
            let mj = data.class_matrix(j);
            for i in 0..r {
                for k in 0..r {
                    m[(i, k)] += t * mj[i][k] as f64;
                }
            }
        }
        let eig = m.clone().complex_eigenvalues();
        let lambdas: Vec<Complex64> = eig.iter().copied().collect();
        let separated = (0..r).all(|a| (a + 1..r).all(|b| (lambdas[a] - lambdas[b]).norm() > SEPARATION));
        if !separated {
            continue;
        }
        let mc: DMatrix<Complex64> = m.map(|x| Complex64::new(x, 0.0));
        let mut rows = Vec::with_capacity(r);
        let mut dim_residual: f64 = 0.0;
        for &lambda in &lambdas {
            let omega = null_vector(&mc, lambda, data.identity_class)?;
            let sizes = data.sizes();
            let norm: f64 = (0..r).map(|k| omega[k].norm_sqr() / sizes[k] as f64).sum();
            let d = (data.order as f64 / norm).sqrt();
            let rounded = d.round();
            dim_residual = dim_residual.max((d - rounded).abs());
            let row: Vec<Complex64> = (0..r).map(|k| omega[k] * (d / sizes[k] as f64)).collect();
            rows.push((rounded as u32, row));
        }
        if dim_residual > SEPARATION {
            return Err(McKayError::NonIntegralDimension(dim_residual));
        }
        rows.sort_by(|a, b| {
            a.0.cmp(&b.0).then_with(|| {
                let key = |row: &Vec<Complex64>| -> Vec<(i64, i64)> {
                    row.iter()
                        .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
                        .collect()
                };
                key(&b.1).cmp(&key(&a.1))
            })
        });
        return Ok(CharacterTable {
            dims: rows.iter().map(|r| r.0).collect(),
            entries: rows.into_iter().map(|r| r.1).collect(),
            dim_residual,
            attempts: attempt,
        });
    }
    Err(McKayError::DegenerateEigenspace(MAX_ATTEMPTS))
}

/// Unit null vector of `m − λI` from the smallest singular value, scaled so
/// the identity-class component is 1.
fn null_vector(m: &DMatrix<Complex64>, lambda: Complex64, identity: usize) -> Result<DVector<Complex64>, McKayError> {
    let r = m.nrows();
    let shifted = m - DMatrix::<Complex64>::identity(r, r) * lambda;
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t.ok_or(McKayError::DegenerateEigenspace(0))?;
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .ok_or(McKayError::DegenerateEigenspace(0))?;
    let v: DVector<Complex64> = v_t.row(idx).transpose().map(|z| z.conj());
    let pivot = v[identity];
    if pivot.norm() < 1e-12 {
        return Err(McKayError::DegenerateEigenspace(0));
    }
    Ok(v / pivot)
}
