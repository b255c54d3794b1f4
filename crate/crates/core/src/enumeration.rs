//! Exhaustive enumeration of strict colorings.
//!
//! Colorings are generated as restricted-growth strings over a fixed vertex
//! order: each vertex takes one of the classes already in use or the next
//! fresh one, so every set partition is produced exactly once. An edge is
//! checked at the moment its last vertex (in search order) is assigned, and
//! the branch is cut if that edge is not properly colored.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::model::{ChromaticSpectrum, MixedHypergraph, Partition};

/// Depth at which the parallel driver splits the search tree into tasks.
const SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone)]
struct EdgeCheck {
    positions: Vec<usize>,
    needs_common: bool,
    needs_distinct: bool,
}

/// Precomputed search plan for one hypergraph.
#[derive(Debug, Clone)]
pub struct Enumerator {
    order: Vec<usize>,
    /// `closing[d]`: edges whose last vertex in search order sits at depth `d`.
    closing: Vec<Vec<EdgeCheck>>,
}

/// Knobs for [`enumerate_strict_colorings_with`].
#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Cap on the number of colorings collected. Counting is never capped.
    pub limit: Option<usize>,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub threads: usize,
    /// Explicit vertex order, overriding the degree heuristic.
    pub order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    /// Collected colorings in canonical-encoding order.
    pub colorings: Vec<Partition>,
    pub spectrum: ChromaticSpectrum,
    pub feasible: Vec<usize>,
    pub nodes_explored: u64,
}

impl Enumerator {
    /// Plan with vertices ordered by descending edge-degree, ties by index.
    pub fn new(h: &MixedHypergraph) -> Self {
        let mut degree = vec![0usize; h.vertex_count()];
        for e in merged_edges(h) {
            for &x in &e.0 {
                degree[x] += 1;
            }
        }
        let mut order: Vec<usize> = (0..h.vertex_count()).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(degree[x]), x));
        Self::with_order(h, order)
    }

    /// Plan with an explicit vertex order (must be a permutation of the vertices).
    pub fn with_order(h: &MixedHypergraph, order: Vec<usize>) -> Self {
        let n = h.vertex_count();
        assert_eq!(order.len(), n, "vertex order must cover every vertex");
        let mut pos = vec![usize::MAX; n];
        for (d, &x) in order.iter().enumerate() {
            assert!(pos[x] == usize::MAX, "vertex {x} repeated in order");
            pos[x] = d;
        }
        let mut closing = vec![Vec::new(); n];
        for (edge, needs_common, needs_distinct) in merged_edges(h) {
            let positions: Vec<usize> = edge.iter().map(|&x| pos[x]).collect();
            let last = *positions.iter().max().expect("edges are nonempty");
            closing[last].push(EdgeCheck {
                positions,
                needs_common,
                needs_distinct,
            });
        }
        Self { order, closing }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    fn to_partition(&self, labels: &[usize]) -> Partition {
        let mut by_vertex = vec![0; labels.len()];
        for (d, &l) in labels.iter().enumerate() {
            by_vertex[self.order[d]] = l;
        }
        Partition::from_labels(by_vertex)
    }

    /// Walks every strict coloring in search order, calling `visit` with the
    /// partition. Stops early when `visit` breaks. Returns the node count.
    pub fn for_each<F>(&self, mut visit: F) -> u64
    where
        F: FnMut(Partition) -> ControlFlow<()>,
    {
        let mut search = Search::new(self);
        let _ = search.dfs(0, 0, &mut |labels: &[usize]| visit(self.to_partition(labels)));
        search.nodes
    }

    fn collect_from(&self, prefix: &Prefix, limit: Option<usize>) -> Partial {
        let n = self.vertex_count();
        let mut partial = Partial::new(n);
        let mut search = Search::new(self);
        search.labels[..prefix.labels.len()].copy_from_slice(&prefix.labels);
        let _ = search.dfs(prefix.labels.len(), prefix.used, &mut |labels: &[usize]| {
            partial.record(self.to_partition(labels), limit);
            ControlFlow::Continue(())
        });
        partial.nodes = search.nodes;
        partial
    }

    /// Expands the tree down to `depth`, returning the surviving prefixes in
    /// search order plus any colorings completed above that depth.
    fn split(&self, depth: usize, limit: Option<usize>) -> (Vec<Prefix>, Partial) {
        let mut prefixes = Vec::new();
        let mut done = Partial::new(self.vertex_count());
        let mut search = Search::new(self);
        search.cutoff = Some(depth);
        let _ = search.dfs(0, 0, &mut |labels: &[usize]| {
            if labels.len() == self.vertex_count() {
                done.record(self.to_partition(labels), limit);
            }
            ControlFlow::Continue(())
        });
        prefixes.append(&mut search.prefixes);
        done.nodes = search.nodes;
        (prefixes, done)
    }
}

/// Merges identical C- and D-edges into single checks.
fn merged_edges(h: &MixedHypergraph) -> Vec<(Vec<usize>, bool, bool)> {
    let mut out: Vec<(Vec<usize>, bool, bool)> = Vec::new();
    let (c, d) = (h.c_edges(), h.d_edges());
    let (mut i, mut j) = (0, 0);
    // Both families are sorted, so a merge walk pairs up the bi-edges.
    while i < c.len() || j < d.len() {
        match (c.get(i), d.get(j)) {
            (Some(a), Some(b)) if a == b => {
                out.push((a.clone(), true, true));
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push((a.clone(), true, false));
                i += 1;
            }
            (Some(a), None) => {
                out.push((a.clone(), true, false));
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b.clone(), false, true));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Prefix {
    labels: Vec<usize>,
    used: usize,
}

struct Search<'a> {
    plan: &'a Enumerator,
    labels: Vec<usize>,
    nodes: u64,
    cutoff: Option<usize>,
    prefixes: Vec<Prefix>,
}

impl<'a> Search<'a> {
    fn new(plan: &'a Enumerator) -> Self {
        Self {
            plan,
            labels: vec![0; plan.vertex_count()],
            nodes: 0,
            cutoff: None,
            prefixes: Vec::new(),
        }
    }

    fn closes_properly(&self, depth: usize) -> bool {
        let labels = &self.labels;
        self.plan.closing[depth].iter().all(|check| {
            let p = &check.positions;
            let mut distinct = 0;
            for (i, &a) in p.iter().enumerate() {
                if p[..i].iter().all(|&b| labels[b] != labels[a]) {
                    distinct += 1;
                }
            }
            (!check.needs_common || distinct < p.len()) && (!check.needs_distinct || distinct >= 2)
        })
    }

    fn dfs<F>(&mut self, depth: usize, used: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.labels.len();
        if depth == n {
            // The empty vertex set admits no coloring with a positive number of colors.
            if n == 0 {
                return ControlFlow::Continue(());
            }
            return visit(&self.labels);
        }
        if self.cutoff == Some(depth) {
            self.prefixes.push(Prefix {
                labels: self.labels[..depth].to_vec(),
                used,
            });
            return ControlFlow::Continue(());
        }
        for label in 0..=used {
            self.nodes += 1;
            self.labels[depth] = label;
            if self.closes_properly(depth) {
                self.dfs(depth + 1, used.max(label + 1), visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Colorings and counts gathered from one part of the search tree.
#[derive(Debug, Clone)]
struct Partial {
    colorings: Vec<Partition>,
    counts: Vec<u64>,
    nodes: u64,
}

impl Partial {
    fn new(n: usize) -> Self {
        Self {
            colorings: Vec::new(),
            counts: vec![0; n + 1],
            nodes: 0,
        }
    }

    fn record(&mut self, p: Partition, limit: Option<usize>) {
        self.counts[p.class_count()] += 1;
        if limit.is_none_or(|l| self.colorings.len() < l) {
            self.colorings.push(p);
        }
    }

    fn absorb(&mut self, other: Partial, limit: Option<usize>) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.nodes += other.nodes;
        let room = limit.map_or(usize::MAX, |l| l.saturating_sub(self.colorings.len()));
        self.colorings.extend(other.colorings.into_iter().take(room));
    }

    fn into_report(mut self) -> EnumerationReport {
        self.colorings.sort();
        let spectrum = ChromaticSpectrum::from_counts(self.counts[1..].to_vec());
        EnumerationReport {
            feasible: spectrum.feasible_set(),
            spectrum,
            colorings: self.colorings,
            nodes_explored: self.nodes,
        }
    }
}

/// Every strict coloring of `h`, with its spectrum and feasible set.
pub fn enumerate_strict_colorings(h: &MixedHypergraph, limit: Option<usize>) -> EnumerationReport {
    enumerate_strict_colorings_with(
        h,
        &EnumerationOptions {
            limit,
            ..Default::default()
        },
    )
}

/// [`enumerate_strict_colorings`] with an explicit vertex order and/or
/// worker threads. The report does not depend on the thread count; when a
/// limit applies, the kept colorings are the first ones in search order.
pub fn enumerate_strict_colorings_with(
    h: &MixedHypergraph,
    opts: &EnumerationOptions,
) -> EnumerationReport {
    let plan = match &opts.order {
        Some(order) => Enumerator::with_order(h, order.clone()),
        None => Enumerator::new(h),
    };
    let n = plan.vertex_count();
    if opts.threads <= 1 || n <= SPLIT_DEPTH {
        let root = Prefix {
            labels: Vec::new(),
            used: 0,
        };
        return plan.collect_from(&root, opts.limit).into_report();
    }

    let (prefixes, mut total) = plan.split(SPLIT_DEPTH, opts.limit);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .expect("thread pool");
    let parts: Vec<Partial> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| plan.collect_from(prefix, opts.limit))
            .collect()
    });
    for part in parts {
        total.absorb(part, opts.limit);
    }
    total.into_report()
}

pub fn chromatic_spectrum(h: &MixedHypergraph) -> ChromaticSpectrum {
    enumerate_strict_colorings(h, Some(0)).spectrum
}

/// `{ k : r_k > 0 }`, ascending.
pub fn feasible_set(h: &MixedHypergraph) -> Vec<usize> {
    chromatic_spectrum(h).feasible_set()
}

/// Outcome of a one-realization check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// One strict coloring per element of the target set, ascending by class count.
    Witnesses { colorings: Vec<Partition> },
    /// A strict coloring whose class count lies outside the target set.
    UnexpectedClassCount { k: usize, witness: Partition },
    /// Two distinct strict colorings with the same class count.
    Repeated {
        k: usize,
        first: Partition,
        second: Partition,
    },
    /// No strict coloring with `k` classes, though `k` is in the target set.
    Missing { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizationVerdict {
    pub holds: bool,
    pub certificate: Certificate,
    pub nodes_explored: u64,
}

/// Whether `h` has feasible set exactly `target` with every `r_k` in {0, 1}.
///
/// The search stops at the first coloring that refutes the claim, so a
/// failing instance usually costs far less than a full enumeration.
pub fn is_one_realization(h: &MixedHypergraph, target: &[usize]) -> RealizationVerdict {
    let mut wanted: Vec<usize> = target.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let max_k = wanted.last().copied().unwrap_or(0).max(h.vertex_count());
    let mut seen: Vec<Option<Partition>> = vec![None; max_k + 1];
    let mut failure: Option<Certificate> = None;

    let plan = Enumerator::new(h);
    let nodes = plan.for_each(|p| {
        let k = p.class_count();
        if wanted.binary_search(&k).is_err() {
            failure = Some(Certificate::UnexpectedClassCount { k, witness: p });
            return ControlFlow::Break(());
        }
        match seen[k].take() {
            Some(first) => {
                let (first, second) = if first < p { (first, p) } else { (p, first) };
                failure = Some(Certificate::Repeated { k, first, second });
                ControlFlow::Break(())
            }
            None => {
                seen[k] = Some(p);
                ControlFlow::Continue(())
            }
        }
    });

    let certificate = match failure {
        Some(c) => c,
        None => match wanted.iter().find(|&&k| k >= seen.len() || seen[k].is_none()) {
            Some(&k) => Certificate::Missing { k },
            None => Certificate::Witnesses {
                colorings: wanted.iter().map(|&k| seen[k].clone().unwrap()).collect(),
            },
        },
    };
    RealizationVerdict {
        holds: matches!(certificate, Certificate::Witnesses { .. }),
        certificate,
        nodes_explored: nodes,
    }
}
