//! Mixed hypergraphs, set partitions and the coloring predicates built on them.
//!
//! Vertices are dense indices `0..vertex_count`. Every edge is stored sorted
//! ascending and each edge family is sorted lexicographically without
//! duplicates, so two hypergraphs with the same edge sets compare equal and
//! serialize identically.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Errors raised while building or querying the core model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{family} edge {edge:?}: vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        family: EdgeFamily,
        edge: Vec<usize>,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("{family} edge {edge:?}: vertex {vertex} repeated")]
    RepeatedVertex {
        family: EdgeFamily,
        edge: Vec<usize>,
        vertex: usize,
    },
    #[error("{family} edge {edge:?}: edges need at least 2 vertices")]
    EdgeTooSmall { family: EdgeFamily, edge: Vec<usize> },
    #[error("subset vertex {vertex} out of range for {vertex_count} vertices")]
    SubsetOutOfRange { vertex: usize, vertex_count: usize },
    #[error("partition covers {partition} vertices but the hypergraph has {hypergraph}")]
    DomainMismatch { partition: usize, hypergraph: usize },
    #[error("partition {partition} is not a proper coloring")]
    ImproperColoring { partition: String },
    #[error("unknown class label {label} (partition has {class_count} classes)")]
    UnknownClass { label: usize, class_count: usize },
    #[error("cannot merge class {0} with itself")]
    SameClass(usize),
    #[error("blocks do not partition 0..{vertex_count}: {reason}")]
    InvalidBlocks { vertex_count: usize, reason: String },
    #[error("map is not a bijection: {0}")]
    NotBijective(String),
}

/// Which edge family an edge belongs to; used in diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFamily {
    C,
    D,
}

impl fmt::Display for EdgeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeFamily::C => f.write_str("C"),
            EdgeFamily::D => f.write_str("D"),
        }
    }
}

/// A mixed hypergraph `(X, C, D)` on the vertex set `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MixedHypergraph {
    vertex_count: usize,
    c_edges: Vec<Vec<usize>>,
    d_edges: Vec<Vec<usize>>,
}

fn normalize_family(
    vertex_count: usize,
    family: EdgeFamily,
    edges: impl IntoIterator<Item = Vec<usize>>,
) -> Result<Vec<Vec<usize>>, ModelError> {
    let mut out = BTreeSet::new();
    for edge in edges {
        if edge.len() < 2 {
            return Err(ModelError::EdgeTooSmall { family, edge });
        }
        if let Some(&vertex) = edge.iter().find(|&&x| x >= vertex_count) {
            return Err(ModelError::VertexOutOfRange {
                family,
                edge,
                vertex,
                vertex_count,
            });
        }
        let mut sorted = edge.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            let vertex = w[0];
            return Err(ModelError::RepeatedVertex {
                family,
                edge,
                vertex,
            });
        }
        out.insert(sorted);
    }
    Ok(out.into_iter().collect())
}

impl MixedHypergraph {
    /// Builds a normalized mixed hypergraph. Edges are sorted and deduplicated.
    pub fn new<C, D>(vertex_count: usize, c_edges: C, d_edges: D) -> Result<Self, ModelError>
    where
        C: IntoIterator,
        C::Item: Into<Vec<usize>>,
        D: IntoIterator,
        D::Item: Into<Vec<usize>>,
    {
        let c_edges = normalize_family(
            vertex_count,
            EdgeFamily::C,
            c_edges.into_iter().map(Into::into),
        )?;
        let d_edges = normalize_family(
            vertex_count,
            EdgeFamily::D,
            d_edges.into_iter().map(Into::into),
        )?;
        Ok(Self {
            vertex_count,
            c_edges,
            d_edges,
        })
    }

    /// Builds a bi-hypergraph: every edge is both a C-edge and a D-edge.
    pub fn bi<E>(vertex_count: usize, edges: E) -> Result<Self, ModelError>
    where
        E: IntoIterator,
        E::Item: Into<Vec<usize>>,
    {
        let family = normalize_family(
            vertex_count,
            EdgeFamily::C,
            edges.into_iter().map(Into::into),
        )?;
        Ok(Self {
            vertex_count,
            c_edges: family.clone(),
            d_edges: family,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            c_edges: Vec::new(),
            d_edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn c_edges(&self) -> &[Vec<usize>] {
        &self.c_edges
    }

    pub fn d_edges(&self) -> &[Vec<usize>] {
        &self.d_edges
    }

    /// True iff the C- and D-families coincide.
    pub fn is_bi(&self) -> bool {
        self.c_edges == self.d_edges
    }

    /// True iff every edge (of either family) has exactly three vertices.
    pub fn is_3_uniform(&self) -> bool {
        self.c_edges
            .iter()
            .chain(&self.d_edges)
            .all(|e| e.len() == 3)
    }

    /// The derived sub-hypergraph on `subset`: keeps exactly the edges lying
    /// inside it, reindexed against the sorted subset. The returned vector maps
    /// each new index back to the original vertex.
    pub fn induced(&self, subset: &[usize]) -> Result<(MixedHypergraph, Vec<usize>), ModelError> {
        let mut kept: Vec<usize> = subset.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&vertex) = kept.iter().find(|&&x| x >= self.vertex_count) {
            return Err(ModelError::SubsetOutOfRange {
                vertex,
                vertex_count: self.vertex_count,
            });
        }
        let mut new_index = vec![usize::MAX; self.vertex_count];
        for (i, &x) in kept.iter().enumerate() {
            new_index[x] = i;
        }
        let restrict = |edges: &[Vec<usize>]| -> Vec<Vec<usize>> {
            edges
                .iter()
                .filter(|e| e.iter().all(|&x| new_index[x] != usize::MAX))
                .map(|e| e.iter().map(|&x| new_index[x]).collect())
                .collect()
        };
        // Restriction preserves sortedness because the reindexing is monotone.
        let sub = MixedHypergraph {
            vertex_count: kept.len(),
            c_edges: restrict(&self.c_edges),
            d_edges: restrict(&self.d_edges),
        };
        Ok((sub, kept))
    }

    /// Whether `partition` colors the hypergraph properly: every C-edge has
    /// two vertices sharing a class and every D-edge has two vertices in
    /// different classes.
    pub fn is_proper(&self, partition: &Partition) -> Result<bool, ModelError> {
        self.check_domain(partition)?;
        let labels = partition.labels();
        let has_common = |e: &[usize]| {
            e.iter()
                .enumerate()
                .any(|(i, &x)| e[i + 1..].iter().any(|&y| labels[x] == labels[y]))
        };
        let has_distinct = |e: &[usize]| e.iter().any(|&x| labels[x] != labels[e[0]]);
        Ok(self.c_edges.iter().all(|e| has_common(e)) && self.d_edges.iter().all(|e| has_distinct(e)))
    }

    /// The number of colors of a strict coloring. Improper input is an error.
    pub fn strict_class_count(&self, partition: &Partition) -> Result<usize, ModelError> {
        if !self.is_proper(partition)? {
            return Err(ModelError::ImproperColoring {
                partition: partition.to_string(),
            });
        }
        Ok(partition.class_count())
    }

    fn check_domain(&self, partition: &Partition) -> Result<(), ModelError> {
        if partition.len() != self.vertex_count {
            return Err(ModelError::DomainMismatch {
                partition: partition.len(),
                hypergraph: self.vertex_count,
            });
        }
        Ok(())
    }

    /// Relabels vertices: vertex `x` becomes `perm[x]`.
    pub fn relabeled(&self, perm: &VertexBijection) -> Result<MixedHypergraph, ModelError> {
        if perm.len() != self.vertex_count {
            return Err(ModelError::NotBijective(format!(
                "map has {} entries, hypergraph has {} vertices",
                perm.len(),
                self.vertex_count
            )));
        }
        let image = |edges: &[Vec<usize>]| -> Vec<Vec<usize>> {
            edges.iter().map(|e| perm.image(e)).collect()
        };
        MixedHypergraph::new(self.vertex_count, image(&self.c_edges), image(&self.d_edges))
    }
}

/// A set partition of `0..n` in restricted-growth form: vertex 0 is in class
/// 0 and each new class takes the smallest unused label. Equal partitions have
/// identical encodings, and the derived ordering is lexicographic on them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<Vec<usize>>")]
pub struct Partition {
    labels: Vec<usize>,
    class_count: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary labeling: vertices with equal labels share a class.
    pub fn from_labels<L: AsRef<[usize]>>(labels: L) -> Self {
        let raw = labels.as_ref();
        let mut relabel: Vec<usize> = Vec::new();
        let mut out = Vec::with_capacity(raw.len());
        let mut class_count = 0;
        for &l in raw {
            if l >= relabel.len() {
                relabel.resize(l + 1, usize::MAX);
            }
            if relabel[l] == usize::MAX {
                relabel[l] = class_count;
                class_count += 1;
            }
            out.push(relabel[l]);
        }
        Partition {
            labels: out,
            class_count,
        }
    }

    /// Builds a partition of `0..vertex_count` from explicit blocks.
    pub fn from_blocks<B>(vertex_count: usize, blocks: B) -> Result<Self, ModelError>
    where
        B: IntoIterator,
        B::Item: AsRef<[usize]>,
    {
        let invalid = |reason: String| ModelError::InvalidBlocks {
            vertex_count,
            reason,
        };
        let mut labels = vec![usize::MAX; vertex_count];
        for (b, block) in blocks.into_iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(invalid(format!("block {b} is empty")));
            }
            for &x in block {
                if x >= vertex_count {
                    return Err(invalid(format!("vertex {x} out of range")));
                }
                if labels[x] != usize::MAX {
                    return Err(invalid(format!("vertex {x} appears twice")));
                }
                labels[x] = b;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(invalid(format!("vertex {x} not covered")));
        }
        Ok(Self::from_labels(labels))
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Class label of each vertex, in restricted-growth form.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.labels[vertex]
    }

    /// Classes as sorted vertex lists, ordered by label (equivalently by
    /// smallest member).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.class_count];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks
    }

    /// Sizes of the classes, indexed by label.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    /// Unions classes `a` and `b` and re-canonicalizes.
    pub fn merge_classes(&self, a: usize, b: usize) -> Result<Partition, ModelError> {
        for label in [a, b] {
            if label >= self.class_count {
                return Err(ModelError::UnknownClass {
                    label,
                    class_count: self.class_count,
                });
            }
        }
        if a == b {
            return Err(ModelError::SameClass(a));
        }
        let merged: Vec<usize> = self
            .labels
            .iter()
            .map(|&l| if l == b { a } else { l })
            .collect();
        Ok(Partition::from_labels(merged))
    }

    /// Restriction to the vertices listed in `subset` (new vertex `i` is `subset[i]`).
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        Partition::from_labels(subset.iter().map(|&x| self.labels[x]).collect::<Vec<_>>())
    }
}

impl From<Partition> for Vec<Vec<usize>> {
    fn from(p: Partition) -> Self {
        p.blocks()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            f.write_str("{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// The vector `(r_1, ..., r_χ̄)` of strict-coloring counts per number of colors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ChromaticSpectrum {
    counts: Vec<u64>,
}

impl ChromaticSpectrum {
    /// `counts[k - 1]` is `r_k`. Trailing zeros are trimmed.
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self { counts }
    }

    /// `r_k`; zero outside `1..=upper_chromatic`.
    pub fn r(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.counts.get(k - 1).copied().unwrap_or(0)
    }

    /// The largest number of colors in a strict coloring, or 0 if there is none.
    pub fn upper_chromatic(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `{ k : r_k > 0 }` in ascending order.
    pub fn feasible_set(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Every entry is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.counts.iter().all(|&r| r <= 1)
    }
}

impl fmt::Display for ChromaticSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// A bijection between the vertex sets of two hypergraphs of equal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexBijection {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl VertexBijection {
    pub fn new(forward: Vec<usize>) -> Result<Self, ModelError> {
        let n = forward.len();
        let mut inverse = vec![usize::MAX; n];
        for (x, &y) in forward.iter().enumerate() {
            if y >= n {
                return Err(ModelError::NotBijective(format!(
                    "{x} maps to {y}, outside 0..{n}"
                )));
            }
            if inverse[y] != usize::MAX {
                return Err(ModelError::NotBijective(format!(
                    "{} and {x} both map to {y}",
                    inverse[y]
                )));
            }
            inverse[y] = x;
        }
        Ok(Self { forward, inverse })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            forward: (0..n).collect(),
            inverse: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn apply(&self, x: usize) -> usize {
        self.forward[x]
    }

    pub fn apply_inverse(&self, y: usize) -> usize {
        self.inverse[y]
    }

    pub fn inverse(&self) -> VertexBijection {
        VertexBijection {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// Sorted image of a vertex set.
    pub fn image(&self, edge: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = edge.iter().map(|&x| self.forward[x]).collect();
        out.sort_unstable();
        out
    }
}

/// True iff `map` carries the C-edges of `h1` exactly onto the C-edges of
/// `h2`, and likewise for D-edges.
pub fn check_isomorphism_under_map(
    h1: &MixedHypergraph,
    h2: &MixedHypergraph,
    map: &VertexBijection,
) -> Result<bool, ModelError> {
    if map.len() != h1.vertex_count() || map.len() != h2.vertex_count() {
        return Err(ModelError::NotBijective(format!(
            "map on {} vertices cannot span {} and {} vertices",
            map.len(),
            h1.vertex_count(),
            h2.vertex_count()
        )));
    }
    let family_maps = |from: &[Vec<usize>], to: &[Vec<usize>]| {
        if from.len() != to.len() {
            return false;
        }
        let mut image: Vec<Vec<usize>> = from.iter().map(|e| map.image(e)).collect();
        image.sort();
        image == to
    };
    Ok(family_maps(h1.c_edges(), h2.c_edges()) && family_maps(h1.d_edges(), h2.d_edges()))
}
