use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::quaternion::Quaternion;
use super::GroupError;
use crate::goldfield::{GoldenNum, OrderedField, Rational, Sqrt2Num};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupLabel {
    #[serde(rename = "2T")]
    Tetrahedral,
    #[serde(rename = "2O")]
    Octahedral,
    #[serde(rename = "2I")]
    Icosahedral,
}

impl GroupLabel {
    pub fn order(self) -> usize {
        match self {
            GroupLabel::Tetrahedral => 24,
            GroupLabel::Octahedral => 48,
            GroupLabel::Icosahedral => 120,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupLabel::Tetrahedral => "2T",
            GroupLabel::Octahedral => "2O",
            GroupLabel::Icosahedral => "2I",
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GroupLabel {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "2T" => Ok(GroupLabel::Tetrahedral),
            "2O" => Ok(GroupLabel::Octahedral),
            "2I" => Ok(GroupLabel::Icosahedral),
            _ => Err(GroupError::UnknownLabel(s.to_string())),
        }
    }
}

/// A conjugacy class, as sorted indices into the owning group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// The canonically smallest member.
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// A finite group of unit quaternions with its multiplication table.
///
/// Elements are stored in canonical (lexicographic) order, so element
/// indices are stable across runs.
#[derive(Debug, Clone)]
pub struct BinaryGroup<F> {
    label: GroupLabel,
    elements: Vec<Quaternion<F>>,
    index: HashMap<Quaternion<F>, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
}

impl<F: OrderedField> BinaryGroup<F> {
    /// Validates unit norm, the expected order, `±1`, `q ⟺ −q`, and
    /// closure, and records the Cayley table.
    pub fn from_elements(label: GroupLabel, elements: Vec<Quaternion<F>>) -> Result<Self, GroupError> {
        let set: BTreeSet<Quaternion<F>> = elements.into_iter().collect();
        let elements: Vec<Quaternion<F>> = set.into_iter().collect();
        if elements.len() != label.order() {
            return Err(GroupError::WrongOrder {
                label,
                expected: label.order(),
                found: elements.len(),
            });
        }
        if let Some(q) = elements.iter().find(|q| !q.is_unit()) {
            return Err(GroupError::NotUnit(q.to_string()));
        }
        let index: HashMap<Quaternion<F>, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, q)| (q, i))
            .collect();
        for q in &elements {
            if !index.contains_key(&q.neg()) {
                return Err(GroupError::NotSymmetric(q.to_string()));
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let p = a.mul(b);
                match index.get(&p) {
                    Some(&k) => table.push(k as u32),
                    None => return Err(GroupError::NotClosed(format!("{a} * {b} = {p}"))),
                }
            }
        }
        let inverses = elements.iter().map(|q| index[&q.conj()]).collect();
        Ok(BinaryGroup {
            label,
            elements,
            index,
            table,
            inverses,
        })
    }

    pub fn label(&self) -> GroupLabel {
        self.label
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Quaternion<F>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Quaternion<F> {
        &self.elements[i]
    }

    pub fn index_of(&self, q: &Quaternion<F>) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn contains(&self, q: &Quaternion<F>) -> bool {
        self.index.contains_key(q)
    }

    pub fn identity(&self) -> usize {
        self.index[&Quaternion::one()]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn negation(&self, a: usize) -> usize {
        self.index[&self.elements[a].neg()]
    }

    /// Least `n ≥ 1` with `gⁿ = 1`, read off the Cayley table.
    pub fn order_of(&self, a: usize) -> usize {
        let e = self.identity();
        let mut p = a;
        let mut n = 1;
        while p != e {
            p = self.mul(p, a);
            n += 1;
        }
        n
    }

    /// Classes sorted by size, then by canonical representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut members = BTreeSet::new();
            for h in 0..n {
                members.insert(self.mul(self.mul(h, g), self.inverse(h)));
            }
            for &m in &members {
                seen[m] = true;
            }
            classes.push(ConjugacyClass {
                members: members.into_iter().collect(),
            });
        }
        classes.sort_by_key(|c| (c.size(), c.representative()));
        classes
    }

    /// Index of the class containing each element.
    pub fn class_of(&self, classes: &[ConjugacyClass]) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                out[m] = ci;
            }
        }
        out
    }

    /// Multiplicity of each scalar part `w`, in increasing order of `w`.
    pub fn w_census(&self) -> BTreeMap<F, usize> {
        let mut out = BTreeMap::new();
        for q in &self.elements {
            *out.entry(q.w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Element-wise inclusion of another group's elements.
    pub fn contains_all<'a>(&self, others: impl IntoIterator<Item = &'a Quaternion<F>>) -> bool
    where
        F: 'a,
    {
        others.into_iter().all(|q| self.contains(q))
    }

    pub fn export(&self) -> GroupExport {
        let classes = self.conjugacy_classes();
        let class_of = self.class_of(&classes);
        GroupExport {
            label: self.label,
            order: self.order(),
            elements: self
                .elements
                .iter()
                .enumerate()
                .map(|(i, q)| ElementExport {
                    index: i,
                    coords: q.coords().map(|c| c.to_string()),
                    order: self.order_of(i),
                    class: class_of[i],
                })
                .collect(),
            classes: classes
                .iter()
                .map(|c| ClassExport {
                    size: c.size(),
                    representative: c.representative(),
                    element_order: self.order_of(c.representative()),
                    members: c.members.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupExport {
    pub label: GroupLabel,
    pub order: usize,
    pub elements: Vec<ElementExport>,
    pub classes: Vec<ClassExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementExport {
    pub index: usize,
    pub coords: [String; 4],
    pub order: usize,
    pub class: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassExport {
    pub size: usize,
    pub representative: usize,
    pub element_order: usize,
    pub members: Vec<usize>,
}

/// The three families of 2I elements, by coordinate shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// `±1` in one slot.
    Axis,
    /// `½(±1, ±1, ±1, ±1)`.
    HalfUnits,
    /// Even permutations of `½(0, ±1, ±1/φ, ±φ)`.
    Golden,
}

pub fn family_of<F: OrderedField>(q: &Quaternion<F>) -> Family {
    let nonzero = q.coords().iter().filter(|c| !c.is_zero()).count();
    let half = F::from_ratio(1, 2);
    match nonzero {
        1 => Family::Axis,
        4 if q.coords().iter().all(|c| c.square() == half.square()) => Family::HalfUnits,
        _ => Family::Golden,
    }
}

fn sign_variants<F: OrderedField>(base: [F; 4]) -> Vec<Quaternion<F>> {
    let mut out = Vec::new();
    for mask in 0..16u32 {
        let mut c = base.clone();
        let mut skip = false;
        for (slot, v) in c.iter_mut().enumerate() {
            if mask & (1 << slot) != 0 {
                if v.is_zero() {
                    skip = true;
                }
                *v = -v.clone();
            }
        }
        if !skip {
            out.push(Quaternion::from_array(c));
        }
    }
    out
}

/// The 12 even permutations of four slots.
pub fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| p[i] != p[j]));
                    if !distinct {
                        continue;
                    }
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Family `(a)`: `±1, ±i, ±j, ±k`.
fn axis_family<F: OrderedField>() -> Vec<Quaternion<F>> {
    (0..4)
        .flat_map(|slot| {
            let mut c = [F::zero(), F::zero(), F::zero(), F::zero()];
            c[slot] = F::one();
            sign_variants(c)
        })
        .collect()
}

/// Family `(b)`: `½(±1, ±1, ±1, ±1)`.
fn half_unit_family<F: OrderedField>() -> Vec<Quaternion<F>> {
    let h = F::from_ratio(1, 2);
    sign_variants([h.clone(), h.clone(), h.clone(), h])
}

/// Family `(c)`: the sign variants of the even permutations of
/// `½(0, 1, 1/φ, φ)`.
pub fn golden_family() -> Vec<Quaternion<GoldenNum>> {
    let half = GoldenNum::from_ratio(1, 2);
    let base = [
        GoldenNum::zero(),
        half.clone(),
        GoldenNum::phi_inv() * &half,
        GoldenNum::phi() * &half,
    ];
    even_permutations()
        .into_iter()
        .flat_map(|p| sign_variants(p.map(|src| base[src].clone())))
        .collect()
}

/// Binary tetrahedral group over any field: families `(a)` and `(b)`.
pub fn build_2t<F: OrderedField>() -> Result<BinaryGroup<F>, GroupError> {
    let mut els = axis_family();
    els.extend(half_unit_family());
    BinaryGroup::from_elements(GroupLabel::Tetrahedral, els)
}

/// Binary icosahedral group from its three explicit families.
pub fn build_2i() -> Result<BinaryGroup<GoldenNum>, GroupError> {
    let mut els = axis_family();
    els.extend(half_unit_family());
    els.extend(golden_family());
    BinaryGroup::from_elements(GroupLabel::Icosahedral, els)
}

/// Binary octahedral group over Q(√2): 2T together with the 24 elements
/// `(±1 ± e)/√2` built from two distinct unit slots.
pub fn build_2o() -> Result<BinaryGroup<Sqrt2Num>, GroupError> {
    let mut els = axis_family();
    els.extend(half_unit_family());
    // 1/√2 = √2/2
    let r = Sqrt2Num::new(Rational::zero(), Rational::from_ratio(1, 2));
    for a in 0..4 {
        for b in a + 1..4 {
            let mut c = [Sqrt2Num::zero(), Sqrt2Num::zero(), Sqrt2Num::zero(), Sqrt2Num::zero()];
            c[a] = r.clone();
            c[b] = r.clone();
            els.extend(sign_variants(c));
        }
    }
    BinaryGroup::from_elements(GroupLabel::Octahedral, els)
}

/// Smallest set containing `generators` that is closed under products and
/// inverses, in canonical order. Fails once more than `cap` elements appear.
pub fn closure<F: OrderedField>(generators: &[Quaternion<F>], cap: usize) -> Result<Vec<Quaternion<F>>, GroupError> {
    let mut set: BTreeSet<Quaternion<F>> = BTreeSet::new();
    let mut frontier: Vec<Quaternion<F>> = Vec::new();
    let push = |q: Quaternion<F>, set: &mut BTreeSet<Quaternion<F>>, frontier: &mut Vec<Quaternion<F>>| {
        if set.insert(q.clone()) {
            frontier.push(q);
        }
    };
    push(Quaternion::one(), &mut set, &mut frontier);
    for g in generators {
        push(g.clone(), &mut set, &mut frontier);
        push(g.conj(), &mut set, &mut frontier);
    }
    while let Some(q) = frontier.pop() {
        if set.len() > cap {
            return Err(GroupError::CapExceeded(cap));
        }
        for g in generators {
            push(q.mul(g), &mut set, &mut frontier);
            push(g.mul(&q), &mut set, &mut frontier);
        }
    }
    if set.len() > cap {
        return Err(GroupError::CapExceeded(cap));
    }
    Ok(set.into_iter().collect())
}

/// Least `n ≥ 1` with `qⁿ = 1`, searching up to `limit`.
pub fn element_order<F: OrderedField>(q: &Quaternion<F>, limit: usize) -> Result<usize, GroupError> {
    let one = Quaternion::one();
    let mut p = q.clone();
    for n in 1..=limit {
        if p == one {
            return Ok(n);
        }
        p = p.mul(q);
    }
    Err(GroupError::OrderExceeded(limit))
}

/// Why 2O is not a subgroup of 2I.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddingObstruction {
    pub order_2i: usize,
    pub order_2o: usize,
    pub index_ratio: f64,
    pub lagrange_remainder: usize,
    pub max_order_in_2i: usize,
    pub order_8_in_2o: bool,
    pub order_8_in_2i: bool,
}

impl EmbeddingObstruction {
    pub fn excludes_embedding(&self) -> bool {
        self.lagrange_remainder != 0 || (self.order_8_in_2o && !self.order_8_in_2i)
    }
}

pub fn subgroup_obstruction_2o_in_2i(
    two_o: &BinaryGroup<Sqrt2Num>,
    two_i: &BinaryGroup<GoldenNum>,
) -> EmbeddingObstruction {
    let orders_i: Vec<usize> = (0..two_i.order()).map(|i| two_i.order_of(i)).collect();
    EmbeddingObstruction {
        order_2i: two_i.order(),
        order_2o: two_o.order(),
        index_ratio: two_i.order() as f64 / two_o.order() as f64,
        lagrange_remainder: two_i.order() % two_o.order(),
        max_order_in_2i: orders_i.iter().copied().max().unwrap_or(1),
        order_8_in_2o: (0..two_o.order()).any(|i| two_o.order_of(i) == 8),
        order_8_in_2i: orders_i.contains(&8),
    }
}
