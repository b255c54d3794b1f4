//! Tuple-labeled 3-uniform bi-hypergraphs realizing a set `S = {n_1 > ... > n_s}`
//! with one strict coloring per element of `S`.
//!
//! Vertices are `(x_1, ..., x_s, b)` with `b` a flag bit. A triple is a
//! bi-edge when every coordinate (flag included) takes exactly two distinct
//! values on it; one extra bi-edge is added by hand. The reduced variant
//! deletes `(n_2, 1, ..., 1, 0)` and reaches `2 n_1 - 1` vertices, which is
//! optimal when `n_2 = n_1 - 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::{MixedHypergraph, ModelError, Partition, VertexBijection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("a feasible set needs at least two values, got {0:?}")]
    TooFewValues(Vec<usize>),
    #[error("values must be strictly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("value 1 is not allowed: a hypergraph with a 1-coloring has no D-edges, so no bi-hypergraph with edges realizes it")]
    ContainsOne,
    #[error("values must be at least 2, got {0:?}")]
    ValueTooSmall(Vec<usize>),
    #[error("cannot parse set {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("coloring index {index} out of range 1..={s}")]
    ColoringIndex { index: usize, s: usize },
    #[error("reduction needs at least three values, got {0}")]
    ReductionTooShort(usize),
    #[error("vertex labels collide unexpectedly: {0}")]
    UnexpectedOverlap(String),
    #[error("coloring c_{index} is not proper")]
    ImproperCanonicalColoring { index: usize },
    #[error("label {0} not found")]
    MissingLabel(LabeledVertex),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A target set `n_1 > n_2 > ... > n_s >= 2` with `s >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeasibleSpec {
    values: Vec<usize>,
}

impl FeasibleSpec {
    /// Accepts values in strictly decreasing order only.
    pub fn new(values: Vec<usize>) -> Result<Self, ConstructionError> {
        if values.len() < 2 {
            return Err(ConstructionError::TooFewValues(values));
        }
        if values.windows(2).any(|w| w[0] <= w[1]) {
            return Err(ConstructionError::NotDecreasing(values));
        }
        match values.last() {
            Some(1) => Err(ConstructionError::ContainsOne),
            Some(&last) if last < 2 => Err(ConstructionError::ValueTooSmall(values)),
            _ => Ok(Self { values }),
        }
    }

    /// Accepts the values in any order; duplicates are rejected.
    pub fn from_unordered(mut values: Vec<usize>) -> Result<Self, ConstructionError> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `n_i`, 1-based.
    pub fn n(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> usize {
        self.values[0]
    }

    /// `{n_2, ..., n_s}`, if it is still a valid spec.
    pub fn tail(&self) -> Result<FeasibleSpec, ConstructionError> {
        FeasibleSpec::new(self.values[1..].to_vec())
    }

    /// Ascending, as a feasible set.
    pub fn ascending(&self) -> Vec<usize> {
        let mut v = self.values.clone();
        v.reverse();
        v
    }

    /// All valid specs with `n_1 <= max_n1` and length in `lengths`, in a
    /// fixed order.
    pub fn all_up_to(max_n1: usize, lengths: &[usize]) -> Vec<FeasibleSpec> {
        let mut out = Vec::new();
        let candidates: Vec<usize> = (2..=max_n1).rev().collect();
        for mask in 0u64..(1u64 << candidates.len()) {
            let values: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if lengths.contains(&values.len()) {
                out.push(FeasibleSpec { values });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for FeasibleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FeasibleSpec {
    type Err = ConstructionError;

    /// Comma-separated values, e.g. `5,3,2`; any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| ConstructionError::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })?;
        let mut check = values.clone();
        check.sort_unstable();
        if check.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConstructionError::Parse {
                input: s.to_string(),
                reason: "duplicate value".into(),
            });
        }
        Self::from_unordered(values)
    }
}

/// Minimum vertex count of a one-realization: `2 n_1 - floor((n_2 + 1) / n_1)`,
/// i.e. `2 n_1 - 1` when `n_2 = n_1 - 1` and `2 n_1` otherwise.
pub fn min_size(spec: &FeasibleSpec) -> usize {
    let (n1, n2) = (spec.n(1), spec.n(2));
    2 * n1 - (n2 + 1) / n1
}

/// A vertex `(x_1, ..., x_s, flag)`. Ordered lexicographically, flag last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledVertex {
    pub coords: Vec<usize>,
    pub flag: u8,
}

impl LabeledVertex {
    pub fn new(coords: Vec<usize>, flag: u8) -> Self {
        Self { coords, flag }
    }

    /// Entry `j` of the `(s+1)`-tuple, 0-based; `j = s` is the flag.
    pub fn entry(&self, j: usize) -> usize {
        if j < self.coords.len() {
            self.coords[j]
        } else {
            self.flag as usize
        }
    }

    pub fn tuple(&self) -> Vec<usize> {
        let mut t = self.coords.clone();
        t.push(self.flag as usize);
        t
    }
}

impl fmt::Display for LabeledVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for x in &self.coords {
            write!(f, "{x},")?;
        }
        write!(f, "{})", self.flag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `2 n_1` vertices.
    I,
    /// `2 n_1 - 1` vertices: `(n_2, 1, ..., 1, 0)` removed.
    II,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::I => f.write_str("I"),
            Variant::II => f.write_str("II"),
        }
    }
}

/// Variant choice; `Auto` takes II exactly when `n_2 = n_1 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariantChoice {
    I,
    II,
    #[default]
    Auto,
}

impl VariantChoice {
    pub fn resolve(self, spec: &FeasibleSpec) -> Variant {
        match self {
            VariantChoice::I => Variant::I,
            VariantChoice::II => Variant::II,
            VariantChoice::Auto if spec.n(2) + 1 == spec.n(1) => Variant::II,
            VariantChoice::Auto => Variant::I,
        }
    }
}

impl FromStr for VariantChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" | "i" | "1" => Ok(VariantChoice::I),
            "II" | "ii" | "2" => Ok(VariantChoice::II),
            "auto" => Ok(VariantChoice::Auto),
            other => Err(format!("unknown variant {other:?} (expected I, II or auto)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConstructOptions {
    pub variant: VariantChoice,
    /// Omit the hand-added bi-edge (exploratory).
    pub drop_special: bool,
}

/// A constructed hypergraph together with its vertex labels.
///
/// Vertex `i` carries `labels[i]`, and labels are sorted, so index order and
/// label order agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledHypergraph {
    pub hypergraph: MixedHypergraph,
    pub labels: Vec<LabeledVertex>,
    pub spec: FeasibleSpec,
    pub variant: Variant,
    /// Variant II with `n_2 != n_1 - 1`: no realization claim exists.
    pub unproven: bool,
    pub drop_special: bool,
}

impl LabeledHypergraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &LabeledVertex) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn label(&self, index: usize) -> &LabeledVertex {
        &self.labels[index]
    }
}

/// The vertex families `X_t` (t = 1..s) plus the lone top vertex, before
/// duplicate removal, each tagged with its family index (0 for the lone vertex).
fn vertex_pieces(spec: &FeasibleSpec) -> Vec<(usize, LabeledVertex)> {
    let s = spec.len();
    let ns = spec.n(s);
    let mut out = Vec::with_capacity(2 * spec.largest() + 2);
    for j in 1..=ns {
        for flag in [0, 1] {
            out.push((s, LabeledVertex::new(vec![j; s], flag)));
        }
    }
    for i in 2..=s {
        let ni = spec.n(i);
        for k in 0..spec.n(i - 1) - ni {
            let head = vec![ni + k; i - 1];
            let mut low = head.clone();
            low.extend(std::iter::repeat_n(1, s - i + 1));
            let mut high = head;
            high.extend_from_slice(&spec.values()[i - 1..]);
            out.push((i - 1, LabeledVertex::new(low, 0)));
            out.push((i - 1, LabeledVertex::new(high, 1)));
        }
    }
    out.push((0, LabeledVertex::new(spec.values().to_vec(), 1)));
    out
}

/// The unique label expected to occur in two families: `(n_s, ..., n_s, 1)`.
fn expected_overlap(spec: &FeasibleSpec) -> LabeledVertex {
    LabeledVertex::new(vec![spec.n(spec.len()); spec.len()], 1)
}

/// The hand-added bi-edge `{(1,...,1,1,0), (n_s,...,n_s,1,0), (n_s,...,n_s,n_s,0)}`.
pub fn special_edge(spec: &FeasibleSpec) -> [LabeledVertex; 3] {
    let s = spec.len();
    let ns = spec.n(s);
    let mut middle = vec![ns; s];
    middle[s - 1] = 1;
    [
        LabeledVertex::new(vec![1; s], 0),
        LabeledVertex::new(middle, 0),
        LabeledVertex::new(vec![ns; s], 0),
    ]
}

/// The vertex removed by variant II: `(n_2, 1, ..., 1, 0)`.
pub fn deleted_vertex(spec: &FeasibleSpec) -> LabeledVertex {
    let mut coords = vec![1; spec.len()];
    coords[0] = spec.n(2);
    LabeledVertex::new(coords, 0)
}

fn two_valued_everywhere(a: &LabeledVertex, b: &LabeledVertex, c: &LabeledVertex) -> bool {
    (0..=a.coords.len()).all(|j| {
        let (x, y, z) = (a.entry(j), b.entry(j), c.entry(j));
        let distinct = 1 + usize::from(y != x) + usize::from(z != x && z != y);
        distinct == 2
    })
}

fn deduplicated_labels(spec: &FeasibleSpec) -> Result<Vec<LabeledVertex>, ConstructionError> {
    let mut seen = BTreeSet::new();
    let mut collisions = Vec::new();
    for (_, label) in vertex_pieces(spec) {
        if !seen.insert(label.clone()) {
            collisions.push(label);
        }
    }
    if collisions != [expected_overlap(spec)] {
        let shown: Vec<String> = collisions.iter().map(|l| l.to_string()).collect();
        return Err(ConstructionError::UnexpectedOverlap(format!(
            "expected exactly {} to repeat, found [{}]",
            expected_overlap(spec),
            shown.join(", ")
        )));
    }
    Ok(seen.into_iter().collect())
}

/// Builds the labeled hypergraph for `spec`.
pub fn construct(spec: &FeasibleSpec, opts: ConstructOptions) -> Result<LabeledHypergraph, ConstructionError> {
    let variant = opts.variant.resolve(spec);
    let mut labels = deduplicated_labels(spec)?;
    if variant == Variant::II {
        let gone = deleted_vertex(spec);
        labels.retain(|l| *l != gone);
    }

    let v = labels.len();
    let mut edges: Vec<[usize; 3]> = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                if two_valued_everywhere(&labels[a], &labels[b], &labels[c]) {
                    edges.push([a, b, c]);
                }
            }
        }
    }
    if !opts.drop_special {
        let ids: Option<Vec<usize>> = special_edge(spec)
            .iter()
            .map(|l| labels.binary_search(l).ok())
            .collect();
        // Variant II may delete one of its vertices, in which case the
        // derived sub-hypergraph simply lacks this edge.
        if let Some(mut ids) = ids {
            ids.sort_unstable();
            let e = [ids[0], ids[1], ids[2]];
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }

    let hypergraph = MixedHypergraph::bi(v, edges.iter().map(|e| e.to_vec()))?;
    Ok(LabeledHypergraph {
        hypergraph,
        labels,
        spec: spec.clone(),
        variant,
        unproven: variant == Variant::II && spec.n(2) + 1 != spec.n(1),
        drop_special: opts.drop_special,
    })
}

/// The coloring grouping vertices by their `i`-th coordinate (1-based):
/// `n_i` classes, checked proper before it is returned.
pub fn canonical_coloring(l: &LabeledHypergraph, i: usize) -> Result<Partition, ConstructionError> {
    let s = l.spec.len();
    if i == 0 || i > s {
        return Err(ConstructionError::ColoringIndex { index: i, s });
    }
    let p = Partition::from_labels(l.labels.iter().map(|v| v.coords[i - 1]).collect::<Vec<_>>());
    if !l.hypergraph.is_proper(&p)? {
        return Err(ConstructionError::ImproperCanonicalColoring { index: i });
    }
    Ok(p)
}

/// All `s` canonical colorings, `c_1` first.
pub fn canonical_colorings(l: &LabeledHypergraph) -> Result<Vec<Partition>, ConstructionError> {
    (1..=l.spec.len()).map(|i| canonical_coloring(l, i)).collect()
}

/// The sub-hypergraph on the vertices with `x_1 = x_2` (the families
/// `X_2, ..., X_s` plus `(n_2, n_2, n_3, ..., n_s, 1)`) and its
/// coordinate-dropping identification with the construction for the tail set.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// The full variant-I construction for the spec.
    pub source: LabeledHypergraph,
    /// Indices (into `source`) of the reduced vertex subset, ascending.
    pub subset: Vec<usize>,
    /// `source.hypergraph` restricted to `subset`, reindexed by position.
    pub induced: MixedHypergraph,
    /// Variant-I construction for `{n_2, ..., n_s}`.
    pub target: LabeledHypergraph,
    /// Position in `subset` to vertex index in `target`.
    pub map: VertexBijection,
}

pub fn reduction_bijection(spec: &FeasibleSpec) -> Result<Reduction, ConstructionError> {
    if spec.len() < 3 {
        return Err(ConstructionError::ReductionTooShort(spec.len()));
    }
    let source = construct(
        spec,
        ConstructOptions {
            variant: VariantChoice::I,
            drop_special: false,
        },
    )?;
    let tail = spec.tail()?;
    let target = construct(
        &tail,
        ConstructOptions {
            variant: VariantChoice::I,
            drop_special: false,
        },
    )?;

    let mut extra = spec.values().to_vec();
    extra[0] = spec.n(2);
    let extra = LabeledVertex::new(extra, 1);
    let members: BTreeSet<LabeledVertex> = vertex_pieces(spec)
        .into_iter()
        .filter(|(t, _)| *t >= 2)
        .map(|(_, l)| l)
        .chain(std::iter::once(extra))
        .collect();
    let mut subset = Vec::with_capacity(members.len());
    for label in &members {
        subset.push(
            source
                .index_of(label)
                .ok_or_else(|| ConstructionError::MissingLabel(label.clone()))?,
        );
    }
    subset.sort_unstable();
    let (induced, kept) = source.hypergraph.induced(&subset)?;

    let mut forward = Vec::with_capacity(kept.len());
    for &x in &kept {
        let label = source.label(x);
        debug_assert_eq!(label.coords[0], label.coords[1]);
        let image = LabeledVertex::new(label.coords[1..].to_vec(), label.flag);
        forward.push(
            target
                .index_of(&image)
                .ok_or(ConstructionError::MissingLabel(image))?,
        );
    }
    if forward.len() != target.vertex_count() {
        return Err(ModelError::NotBijective(format!(
            "{} reduced vertices against {} target vertices",
            forward.len(),
            target.vertex_count()
        ))
        .into());
    }
    let map = VertexBijection::new(forward)?;
    Ok(Reduction {
        source,
        subset: kept,
        induced,
        target,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::check_isomorphism_under_map;

    fn spec(v: &[usize]) -> FeasibleSpec {
        FeasibleSpec::new(v.to_vec()).unwrap()
    }

    fn lv(t: &[usize]) -> LabeledVertex {
        let (flag, coords) = t.split_last().unwrap();
        LabeledVertex::new(coords.to_vec(), *flag as u8)
    }

    fn build(v: &[usize], variant: VariantChoice) -> LabeledHypergraph {
        construct(
            &spec(v),
            ConstructOptions {
                variant,
                drop_special: false,
            },
        )
        .unwrap()
    }

    #[test]
    fn min_size_values() {
        assert_eq!(min_size(&spec(&[4, 2])), 8);
        assert_eq!(min_size(&spec(&[3, 2])), 5);
        assert_eq!(min_size(&spec(&[5, 4, 2])), 9);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(FeasibleSpec::new(vec![4]), Err(ConstructionError::TooFewValues(_))));
        assert!(matches!(FeasibleSpec::new(vec![2, 4]), Err(ConstructionError::NotDecreasing(_))));
        assert!(matches!(FeasibleSpec::new(vec![4, 4]), Err(ConstructionError::NotDecreasing(_))));
        assert!(matches!(FeasibleSpec::new(vec![4, 1]), Err(ConstructionError::ContainsOne)));
        assert!(matches!(FeasibleSpec::new(vec![4, 0]), Err(ConstructionError::ValueTooSmall(_))));
        assert_eq!("2, 5,3".parse::<FeasibleSpec>().unwrap(), spec(&[5, 3, 2]));
        assert!("3,3,2".parse::<FeasibleSpec>().is_err());
        assert!("3,x".parse::<FeasibleSpec>().is_err());
        assert!(matches!("3,1".parse::<FeasibleSpec>(), Err(ConstructionError::ContainsOne)));
    }

    #[test]
    fn vertices_of_4_2() {
        let l = build(&[4, 2], VariantChoice::I);
        let expected: Vec<LabeledVertex> = [
            [1, 1, 0],
            [1, 1, 1],
            [2, 1, 0],
            [2, 2, 0],
            [2, 2, 1],
            [3, 1, 0],
            [3, 2, 1],
            [4, 2, 1],
        ]
        .iter()
        .map(|t| lv(t))
        .collect();
        assert_eq!(l.labels, expected);
        assert_eq!(l.variant, Variant::I);
        assert!(l.hypergraph.is_bi() && l.hypergraph.is_3_uniform());
    }

    #[test]
    fn special_edge_of_4_2() {
        let s = spec(&[4, 2]);
        let e = special_edge(&s);
        assert_eq!(e, [lv(&[1, 1, 0]), lv(&[2, 1, 0]), lv(&[2, 2, 0])]);
        let l = build(&[4, 2], VariantChoice::I);
        let ids: Vec<usize> = e.iter().map(|x| l.index_of(x).unwrap()).collect();
        assert!(l.hypergraph.c_edges().contains(&ids));
        let without = construct(
            &s,
            ConstructOptions {
                variant: VariantChoice::I,
                drop_special: true,
            },
        )
        .unwrap();
        assert_eq!(without.hypergraph.c_edges().len() + 1, l.hypergraph.c_edges().len());
    }

    #[test]
    fn auto_picks_variant_two_for_3_2() {
        let l = build(&[3, 2], VariantChoice::Auto);
        assert_eq!(l.variant, Variant::II);
        assert_eq!(l.vertex_count(), 5);
        assert!(l.index_of(&lv(&[2, 1, 0])).is_none());
        assert!(!l.unproven);
        let forced = build(&[5, 2], VariantChoice::II);
        assert!(forced.unproven);
        assert_eq!(build(&[5, 2], VariantChoice::Auto).variant, Variant::I);
    }

    #[test]
    fn canonical_colorings_of_4_2() {
        let l = build(&[4, 2], VariantChoice::I);
        let c1 = canonical_coloring(&l, 1).unwrap();
        let block = |ts: &[[usize; 3]]| -> Vec<usize> {
            let mut b: Vec<usize> = ts.iter().map(|t| l.index_of(&lv(t)).unwrap()).collect();
            b.sort_unstable();
            b
        };
        let expected = Partition::from_blocks(
            8,
            [
                block(&[[1, 1, 0], [1, 1, 1]]),
                block(&[[2, 2, 0], [2, 2, 1], [2, 1, 0]]),
                block(&[[3, 1, 0], [3, 2, 1]]),
                block(&[[4, 2, 1]]),
            ],
        )
        .unwrap();
        assert_eq!(c1, expected);
        let c2 = canonical_coloring(&l, 2).unwrap();
        assert_eq!(c2.class_count(), 2);
        assert!(matches!(
            canonical_coloring(&l, 3),
            Err(ConstructionError::ColoringIndex { index: 3, s: 2 })
        ));
        assert!(canonical_coloring(&l, 0).is_err());

        let small = build(&[3, 2], VariantChoice::Auto);
        assert_eq!(canonical_coloring(&small, 1).unwrap().class_count(), 3);
    }

    #[test]
    fn size_law_and_coordinate_rule() {
        for s in FeasibleSpec::all_up_to(8, &[2, 3, 4, 5]) {
            let one = build(s.values(), VariantChoice::I);
            let two = build(s.values(), VariantChoice::II);
            assert_eq!(one.vertex_count(), 2 * s.largest(), "{s}");
            assert_eq!(two.vertex_count(), 2 * s.largest() - 1, "{s}");
            let special: Vec<usize> = {
                let mut ids: Vec<usize> = special_edge(&s).iter().map(|x| one.index_of(x).unwrap()).collect();
                ids.sort_unstable();
                ids
            };
            for e in one.hypergraph.c_edges() {
                let [a, b, c] = [&one.labels[e[0]], &one.labels[e[1]], &one.labels[e[2]]];
                if *e == special {
                    assert!(a.flag == b.flag && b.flag == c.flag);
                } else {
                    assert!(two_valued_everywhere(a, b, c));
                }
            }
            let auto = build(s.values(), VariantChoice::Auto);
            assert_eq!(auto.vertex_count(), min_size(&s));
            for l in [&one, &two] {
                for (i, p) in canonical_colorings(l).unwrap().iter().enumerate() {
                    assert_eq!(p.class_count(), s.n(i + 1));
                }
            }
        }
    }

    #[test]
    fn reduction_for_5_3_2() {
        let r = reduction_bijection(&spec(&[5, 3, 2])).unwrap();
        assert_eq!(r.subset.len(), 6);
        assert_eq!(r.target.vertex_count(), 6);
        assert!(r.subset.iter().all(|&x| {
            let l = r.source.label(x);
            l.coords[0] == l.coords[1]
        }));
        assert!(r.subset.contains(&r.source.index_of(&lv(&[3, 3, 2, 1])).unwrap()));
        assert!(check_isomorphism_under_map(&r.induced, &r.target.hypergraph, &r.map).unwrap());
        assert!(matches!(
            reduction_bijection(&spec(&[4, 2])),
            Err(ConstructionError::ReductionTooShort(2))
        ));
    }
}
