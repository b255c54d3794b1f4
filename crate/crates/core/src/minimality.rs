//! Exhaustive search over small 3-uniform bi-hypergraphs for one-realizations
//! of a target set, used to certify the lower bound on the vertex count.
//!
//! A bi-hypergraph on `v` vertices is identified with a bitmask over the
//! `C(v,3)` triples in lexicographic order (bit `i` set iff triple `i` is an
//! edge). Isomorphism classes are represented by their numerically smallest
//! mask, found by brute force over all `v!` vertex permutations.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::construction::{min_size, FeasibleSpec};
use crate::enumeration::{is_one_realization, Certificate, RealizationVerdict};
use crate::model::{MixedHypergraph, Partition};

/// Largest vertex count the instance stream will take on by default.
pub const DEFAULT_VERTEX_CAP: usize = 6;
/// Default number of instance checks per run.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "BIHYPER_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimalityError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("{v} vertices means 2^{triples} instances; the cap is {cap} vertices")]
    TooLarge { v: usize, triples: usize, cap: usize },
    #[error("cursor {cursor} lies outside the search range 3..={v_max}")]
    CursorOutOfRange { cursor: Cursor, v_max: usize },
    #[error("cannot parse cursor {0:?}; expected V,INDEX")]
    BadCursor(String),
}

/// All 3-subsets of `0..v` in lexicographic order.
pub fn triples(v: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn triple_count(v: usize) -> usize {
    if v < 3 {
        0
    } else {
        v * (v - 1) * (v - 2) / 6
    }
}

fn triple_index(v: usize) -> Vec<usize> {
    // Dense lookup for (a, b, c) -> lexicographic rank.
    let mut index = vec![usize::MAX; v * v * v];
    for (i, [a, b, c]) in triples(v).into_iter().enumerate() {
        index[(a * v + b) * v + c] = i;
    }
    index
}

/// The bi-hypergraph whose edge set is the set bits of `mask`.
pub fn hypergraph_from_mask(v: usize, mask: u64) -> MixedHypergraph {
    let edges = triples(v)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, t)| t.to_vec());
    MixedHypergraph::bi(v, edges).expect("triples are valid edges")
}

/// Inverse of [`hypergraph_from_mask`] for 3-uniform bi-hypergraphs.
pub fn mask_of(h: &MixedHypergraph) -> Option<u64> {
    let v = h.vertex_count();
    if !h.is_bi() || !h.is_3_uniform() || triple_count(v) > 64 {
        return None;
    }
    let index = triple_index(v);
    Some(
        h.c_edges()
            .iter()
            .map(|e| 1u64 << index[(e[0] * v + e[1]) * v + e[2]])
            .fold(0, |a, b| a | b),
    )
}

fn permutations(v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..v).collect();
    heap_permute(v, &mut current, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

/// Action of every vertex permutation on triple indices.
#[derive(Debug, Clone)]
pub struct TripleAction {
    v: usize,
    tables: Vec<Vec<u8>>,
}

impl TripleAction {
    pub fn new(v: usize) -> Self {
        let ts = triples(v);
        let index = triple_index(v);
        let tables = permutations(v)
            .into_iter()
            .map(|perm| {
                ts.iter()
                    .map(|t| {
                        let mut img = [perm[t[0]], perm[t[1]], perm[t[2]]];
                        img.sort_unstable();
                        index[(img[0] * v + img[1]) * v + img[2]] as u8
                    })
                    .collect()
            })
            .collect();
        Self { v, tables }
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn group_order(&self) -> usize {
        self.tables.len()
    }

    pub fn apply(&self, g: usize, mask: u64) -> u64 {
        let table = &self.tables[g];
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1u64 << table[i];
            m &= m - 1;
        }
        out
    }

    /// Smallest mask in the orbit of `mask`.
    pub fn canonical(&self, mask: u64) -> u64 {
        (0..self.tables.len())
            .map(|g| self.apply(g, mask))
            .min()
            .unwrap_or(mask)
    }
}

/// Smallest edge mask among all relabelings of a 3-uniform bi-hypergraph.
pub fn canonical_mask(h: &MixedHypergraph) -> Option<u64> {
    let mask = mask_of(h)?;
    Some(TripleAction::new(h.vertex_count()).canonical(mask))
}

/// Stream of 3-uniform bi-hypergraphs on `v` vertices as `(mask, hypergraph)`
/// pairs, ascending by mask. With isomorphism reduction, only the smallest
/// mask of each class is yielded.
pub struct BiHypergraphStream {
    v: usize,
    next: u64,
    end: u64,
    iso: Option<IsoState>,
    yielded: u64,
}

struct IsoState {
    action: TripleAction,
    seen: Vec<u64>,
}

impl IsoState {
    fn seen(&self, mask: u64) -> bool {
        self.seen[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    /// Marks the orbit of `mask`; returns false if it was already marked.
    fn visit(&mut self, mask: u64) -> bool {
        if self.seen(mask) {
            return false;
        }
        for g in 0..self.action.group_order() {
            let img = self.action.apply(g, mask);
            self.seen[(img >> 6) as usize] |= 1u64 << (img & 63);
        }
        true
    }
}

impl BiHypergraphStream {
    pub fn new(v: usize, iso_reduce: bool, cap: usize) -> Result<Self, MinimalityError> {
        Self::starting_at(v, iso_reduce, cap, 0)
    }

    /// Resumes at mask `start`. Everything below `start` is skipped; in
    /// isomorphism mode their orbits are still marked so no class repeats.
    pub fn starting_at(v: usize, iso_reduce: bool, cap: usize, start: u64) -> Result<Self, MinimalityError> {
        if v < 3 {
            return Err(MinimalityError::TooFewVertices(v));
        }
        let triples = triple_count(v);
        if v > cap || triples > 32 {
            return Err(MinimalityError::TooLarge { v, triples, cap });
        }
        let end = 1u64 << triples;
        let iso = iso_reduce.then(|| {
            let mut state = IsoState {
                action: TripleAction::new(v),
                seen: vec![0; end.div_ceil(64) as usize],
            };
            for m in 0..start.min(end) {
                state.visit(m);
            }
            state
        });
        Ok(Self {
            v,
            next: start.min(end),
            end,
            iso,
            yielded: 0,
        })
    }

    /// Total number of masks, `2^C(v,3)`.
    pub fn space(&self) -> u64 {
        self.end
    }

    /// Mask the next call to `next` will start from.
    pub fn position(&self) -> u64 {
        self.next
    }

    pub fn yielded(&self) -> u64 {
        self.yielded
    }
}

impl Iterator for BiHypergraphStream {
    type Item = (u64, MixedHypergraph);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let fresh = match &mut self.iso {
                Some(state) => state.visit(mask),
                None => true,
            };
            if fresh {
                self.yielded += 1;
                return Some((mask, hypergraph_from_mask(self.v, mask)));
            }
        }
        None
    }
}

/// Every 3-uniform bi-hypergraph on `v` vertices (one per isomorphism class
/// when `iso_reduce` is set), capped at [`DEFAULT_VERTEX_CAP`] vertices.
pub fn enumerate_bi_hypergraphs(v: usize, iso_reduce: bool) -> Result<BiHypergraphStream, MinimalityError> {
    BiHypergraphStream::new(v, iso_reduce, DEFAULT_VERTEX_CAP)
}

/// Position in the search: vertex count and next mask. Written as `V,INDEX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cursor {
    pub v: usize,
    pub index: u64,
}

impl fmt::Display for Cursor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.v, self.index)
    }
}

impl FromStr for Cursor {
    type Err = MinimalityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MinimalityError::BadCursor(s.to_string());
        let (v, index) = s.split_once(',').ok_or_else(bad)?;
        Ok(Cursor {
            v: v.trim().parse().map_err(|_| bad())?,
            index: index.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub iso_reduce: bool,
    /// Maximum number of instance checks in this run.
    pub budget: u64,
    pub vertex_cap: usize,
    pub threads: usize,
    pub resume: Option<Cursor>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            iso_reduce: false,
            budget: DEFAULT_BUDGET,
            vertex_cap: DEFAULT_VERTEX_CAP,
            threads: 1,
            resume: None,
        }
    }
}

impl SearchConfig {
    /// Defaults, with the budget taken from [`BUDGET_ENV`] when set.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchVerdict {
    CertifiedNone,
    WitnessFound,
    AbortedBudget,
}

impl fmt::Display for SearchVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchVerdict::CertifiedNone => "certified-none",
            SearchVerdict::WitnessFound => "witness-found",
            SearchVerdict::AbortedBudget => "aborted-budget",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex_count: usize,
    pub mask: u64,
    pub hypergraph: MixedHypergraph,
    /// One strict coloring per target value, ascending by class count.
    pub colorings: Vec<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    #[serde(serialize_with = "serialize_spec")]
    pub spec: FeasibleSpec,
    pub vertex_counts_searched: Vec<usize>,
    /// `(v, instances checked at v)`.
    pub instances_examined: Vec<(usize, u64)>,
    pub iso_reduced: bool,
    pub witnesses: Vec<Witness>,
    pub verdict: SearchVerdict,
    /// Where to resume after a budget abort.
    pub cursor: Option<Cursor>,
}

fn serialize_spec<S: serde::Serializer>(spec: &FeasibleSpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(spec.values())
}

impl SearchReport {
    pub fn total_examined(&self) -> u64 {
        self.instances_examined.iter().map(|(_, n)| n).sum()
    }

    /// Witnesses on fewer vertices than the claimed minimum.
    pub fn witnesses_below_bound(&self) -> impl Iterator<Item = &Witness> {
        let bound = min_size(&self.spec);
        self.witnesses.iter().filter(move |w| w.vertex_count < bound)
    }
}

/// Instances checked per parallel batch.
const BATCH: usize = 4096;

/// Checks every 3-uniform bi-hypergraph on `3..=v_max` vertices for being a
/// one-realization of `spec`.
///
/// With `v_max < min_size(spec)` a `CertifiedNone` verdict certifies the
/// lower bound over the searched range; at `v_max = min_size(spec)` the
/// search also hunts witnesses of the optimum.
pub fn certify_lower_bound(spec: &FeasibleSpec, v_max: usize, config: &SearchConfig) -> Result<SearchReport, MinimalityError> {
    if v_max < 3 {
        return Err(MinimalityError::TooFewVertices(v_max));
    }
    let start = config.resume.unwrap_or(Cursor { v: 3, index: 0 });
    if start.v < 3 || start.v > v_max {
        return Err(MinimalityError::CursorOutOfRange { cursor: start, v_max });
    }
    let target = spec.ascending();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .expect("thread pool");

    let mut report = SearchReport {
        spec: spec.clone(),
        vertex_counts_searched: Vec::new(),
        instances_examined: Vec::new(),
        iso_reduced: config.iso_reduce,
        witnesses: Vec::new(),
        verdict: SearchVerdict::CertifiedNone,
        cursor: None,
    };
    let mut budget = config.budget;

    for v in start.v..=v_max {
        let from = if v == start.v { start.index } else { 0 };
        let mut stream = match BiHypergraphStream::starting_at(v, config.iso_reduce, config.vertex_cap, from) {
            Ok(s) => s,
            Err(MinimalityError::TooLarge { .. }) => {
                report.verdict = SearchVerdict::AbortedBudget;
                report.cursor = Some(Cursor { v, index: from });
                return Ok(report);
            }
            Err(e) => return Err(e),
        };
        report.vertex_counts_searched.push(v);
        let mut examined = 0u64;
        loop {
            if budget == 0 {
                // Abort only if something unexamined remains at this v.
                let pos = stream.position();
                if stream.next().is_some() {
                    report.instances_examined.push((v, examined));
                    report.verdict = SearchVerdict::AbortedBudget;
                    report.cursor = Some(Cursor { v, index: pos });
                    return Ok(report);
                }
                break;
            }
            let take = BATCH.min(usize::try_from(budget).unwrap_or(usize::MAX));
            let batch: Vec<(u64, MixedHypergraph)> = stream.by_ref().take(take).collect();
            if batch.is_empty() {
                break;
            }
            examined += batch.len() as u64;
            budget -= batch.len() as u64;
            let verdicts: Vec<RealizationVerdict> = pool.install(|| {
                batch
                    .par_iter()
                    .map(|(_, h)| is_one_realization(h, &target))
                    .collect()
            });
            for ((mask, h), verdict) in batch.into_iter().zip(verdicts) {
                if let Certificate::Witnesses { colorings } = verdict.certificate {
                    report.witnesses.push(Witness {
                        vertex_count: v,
                        mask,
                        hypergraph: h,
                        colorings,
                    });
                }
            }
        }
        report.instances_examined.push((v, examined));
    }
    if !report.witnesses.is_empty() {
        report.verdict = SearchVerdict::WitnessFound;
    }
    Ok(report)
}

/// Checks the singleton-merge property on one 3-uniform bi-hypergraph: for
/// every strict coloring with at least two singleton classes, merging any
/// two singletons yields a strict coloring with one class fewer. Returns the
/// number of merges checked, or the first offending coloring.
pub fn check_singleton_merges(h: &MixedHypergraph) -> Result<u64, (Partition, usize, usize)> {
    let report = crate::enumeration::enumerate_strict_colorings(h, None);
    let mut checked = 0;
    for p in &report.colorings {
        let singles: Vec<usize> = p
            .class_sizes()
            .iter()
            .enumerate()
            .filter(|(_, &n)| n == 1)
            .map(|(l, _)| l)
            .collect();
        for (i, &a) in singles.iter().enumerate() {
            for &b in &singles[i + 1..] {
                let merged = p.merge_classes(a, b).expect("labels exist");
                let ok = merged.class_count() + 1 == p.class_count()
                    && h.is_proper(&merged).expect("same domain");
                if !ok {
                    return Err((p.clone(), a, b));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
