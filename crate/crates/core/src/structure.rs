//! The complete multipartite structure of the weakly zero-divisor graph.
//!
//! For `R = R_1 x ... x R_n` with local factors, let `F` be the indices of
//! the factors that are fields. For `k in F`, the part `V_k` holds the
//! vertices with `x_k = 0` and every other coordinate a unit; all remaining
//! vertices form `V_0`. The graph is complete multipartite with parts
//! `V_k` (`k in F`) and one singleton part per vertex of `V_0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::EdgeSet;
use crate::ring::{self, FactorSummary, LocalRingSpec, ProductRing, RingElement};

/// Field indices, part sizes and vertex count of the graph.
///
/// Factor indices are zero-based. Construction refuses the empty graph,
/// so `total >= 1` always holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartStructure {
    factor_count: usize,
    field_indices: Vec<usize>,
    part_sizes: BTreeMap<usize, BigUint>,
    v0_size: BigUint,
    total: BigUint,
}

impl PartStructure {
    pub fn from_specs(specs: &[LocalRingSpec]) -> Result<Self> {
        part_structure(&ring::summarize(specs)?)
    }

    pub fn factor_count(&self) -> usize {
        self.factor_count
    }

    /// The set `F`, ascending.
    pub fn field_indices(&self) -> &[usize] {
        &self.field_indices
    }

    /// `|V_k|` for each `k` in `F`.
    pub fn part_sizes(&self) -> &BTreeMap<usize, BigUint> {
        &self.part_sizes
    }

    pub fn v0_size(&self) -> &BigUint {
        &self.v0_size
    }

    /// `N`, the number of nonzero zero-divisors.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Number of parts, `|F| + |V_0|`.
    pub fn part_count(&self) -> BigUint {
        BigUint::from(self.field_indices.len()) + &self.v0_size
    }

    /// `max({|V_k|} U {1})`.
    pub fn max_field_part(&self) -> BigUint {
        self.part_sizes
            .values()
            .max()
            .cloned()
            .unwrap_or_else(BigUint::one)
            .max(BigUint::one())
    }
}

/// Closed-form part structure from factor counts alone.
pub fn part_structure(factors: &[FactorSummary]) -> Result<PartStructure> {
    if factors.is_empty() {
        return Err(Error::InvalidSpec(
            "a product needs at least one factor".into(),
        ));
    }
    let order: BigUint = factors.iter().map(|f| &f.order).product();
    let units: BigUint = factors.iter().map(|f| &f.unit_count).product();
    let total = order - units - 1u32;
    if total.is_zero() {
        return Err(Error::EmptyGraph);
    }
    let field_indices: Vec<usize> = factors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_field)
        .map(|(i, _)| i)
        .collect();
    let part_sizes: BTreeMap<usize, BigUint> = field_indices
        .iter()
        .map(|&k| {
            let size: BigUint = factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, f)| &f.unit_count)
                .product();
            (k, size)
        })
        .collect();
    let in_fields: BigUint = part_sizes.values().sum();
    let v0_size = &total - in_fields;
    Ok(PartStructure {
        factor_count: factors.len(),
        field_indices,
        part_sizes,
        v0_size,
        total,
    })
}

/// Which part a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartLabel {
    /// Member of `V_k` for the zero-based field index `k`.
    Field(usize),
    /// Member of `V_0`.
    Clique,
}

impl fmt::Display for PartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartLabel::Field(k) => write!(f, "V{}", k + 1),
            PartLabel::Clique => write!(f, "V0"),
        }
    }
}

/// Every vertex with its part label, vertices in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub entries: Vec<(RingElement, PartLabel)>,
}

impl VertexPartition {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Vertex count per label, labels ordered with `Clique` last.
    pub fn counts(&self) -> BTreeMap<PartLabel, usize> {
        let mut out = BTreeMap::new();
        for (_, label) in &self.entries {
            *out.entry(*label).or_insert(0) += 1;
        }
        out
    }
}

/// Labels every vertex of `R` element-wise from the defining conditions.
pub fn classify_vertices(ring: &ProductRing) -> VertexPartition {
    let fields: Vec<usize> = ring
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_field())
        .map(|(i, _)| i)
        .collect();
    let entries = ring
        .zero_divisor_vertices()
        .into_iter()
        .map(|x| {
            let label = fields
                .iter()
                .copied()
                .find(|&k| {
                    x.coords[k] == 0
                        && x.coords
                            .iter()
                            .zip(ring.factors())
                            .enumerate()
                            .all(|(i, (&c, f))| i == k || f.is_unit(c))
                })
                .map_or(PartLabel::Clique, PartLabel::Field);
            (x, label)
        })
        .collect();
    VertexPartition { entries }
}

/// Multiset of part sizes, stored as size -> number of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteShape {
    parts: BTreeMap<BigUint, BigUint>,
}

impl MultipartiteShape {
    pub fn from_sizes(sizes: &[u64]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidArgument(
                "part sizes must be a nonempty list of positive integers".into(),
            ));
        }
        let mut parts = BTreeMap::new();
        for &s in sizes {
            *parts.entry(BigUint::from(s)).or_insert_with(BigUint::zero) += 1u32;
        }
        Ok(MultipartiteShape { parts })
    }

    /// Size -> multiplicity, sizes ascending.
    pub fn parts(&self) -> &BTreeMap<BigUint, BigUint> {
        &self.parts
    }

    /// `N`, the sum of all part sizes.
    pub fn total(&self) -> BigUint {
        self.parts.iter().map(|(s, c)| s * c).sum()
    }

    /// `M`, the number of parts.
    pub fn part_count(&self) -> BigUint {
        self.parts.values().sum()
    }

    /// Every part size listed individually, largest first. Fails beyond
    /// `limit` parts.
    pub fn expand(&self, limit: u64) -> Result<Vec<usize>> {
        let count = self.part_count();
        if count > BigUint::from(limit) {
            return Err(Error::too_large("part list", count, limit));
        }
        let mut out = Vec::new();
        for (size, mult) in self.parts.iter().rev() {
            let size = size
                .to_usize()
                .ok_or_else(|| Error::too_large("part size", size, usize::MAX as u64))?;
            out.extend(std::iter::repeat_n(size, mult.to_usize().unwrap()));
        }
        Ok(out)
    }
}

impl fmt::Display for MultipartiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .rev()
            .map(|(s, c)| {
                if c.is_one() {
                    s.to_string()
                } else {
                    format!("{s}^({c})")
                }
            })
            .collect();
        write!(f, "K({})", parts.join(","))
    }
}

/// The parts `{|V_k|}` together with `|V_0|` singletons.
pub fn multipartite_shape(ps: &PartStructure) -> MultipartiteShape {
    let mut parts: BTreeMap<BigUint, BigUint> = BTreeMap::new();
    for size in ps.part_sizes.values() {
        *parts.entry(size.clone()).or_insert_with(BigUint::zero) += 1u32;
    }
    if !ps.v0_size.is_zero() {
        *parts.entry(BigUint::one()).or_insert_with(BigUint::zero) += &ps.v0_size;
    }
    MultipartiteShape { parts }
}

/// Edges of the complete multipartite graph on the labeled vertices:
/// `u ~ v` iff their labels differ or both are `Clique`.
pub fn structural_edge_set(
    shape: &MultipartiteShape,
    labeling: &VertexPartition,
) -> Result<EdgeSet> {
    let mut observed: BTreeMap<BigUint, BigUint> = BTreeMap::new();
    for (label, count) in labeling.counts() {
        let (size, parts) = match label {
            PartLabel::Field(_) => (count, 1),
            PartLabel::Clique => (1, count),
        };
        *observed
            .entry(BigUint::from(size))
            .or_insert_with(BigUint::zero) += parts as u64;
    }
    if &observed != shape.parts() {
        return Err(Error::LabelingMismatch);
    }
    let labels: Vec<PartLabel> = labeling.entries.iter().map(|(_, l)| *l).collect();
    let n = labels.len();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| labels[i] != labels[j] || labels[i] == PartLabel::Clique);
    EdgeSet::new(n, edges)
}
