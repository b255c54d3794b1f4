#![allow(dead_code)]

use bihyper::{MixedHypergraph, Partition};
use rand::Rng;

/// Every set partition of `0..n` as a block list, built by inserting each
/// element into an existing block or a new one. Independent of the crate's
/// restricted-growth encoding.
pub fn all_block_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for blocks in &acc {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i].push(x);
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(vec![x]);
            next.push(b);
        }
        acc = next;
    }
    acc
}

/// Independent properness check working on blocks.
pub fn proper_by_blocks(h: &MixedHypergraph, blocks: &[Vec<usize>]) -> bool {
    let mut class = vec![usize::MAX; h.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            class[x] = i;
        }
    }
    let distinct = |e: &[usize]| {
        let mut seen: Vec<usize> = e.iter().map(|&x| class[x]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    h.c_edges().iter().all(|e| distinct(e) < e.len()) && h.d_edges().iter().all(|e| distinct(e) >= 2)
}

/// Brute-force strict colorings: all partitions filtered by properness.
pub fn brute_force_colorings(h: &MixedHypergraph) -> Vec<Partition> {
    let n = h.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<Partition> = all_block_partitions(n)
        .into_iter()
        .filter(|b| proper_by_blocks(h, b))
        .map(|b| Partition::from_blocks(n, b).unwrap())
        .collect();
    out.sort();
    out
}

/// Row `n` of the Stirling numbers of the second kind, `S(n, 1..=n)`.
pub fn stirling_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![0u64; m + 1];
        for k in 1..=m {
            let prev_k = if k < row.len() { row[k] } else { 0 };
            next[k] = k as u64 * prev_k + row[k - 1];
        }
        row = next;
    }
    row[1..].to_vec()
}

/// Random mixed hypergraph with C-, D- and bi-edges of size 2..=4.
pub fn random_mixed<R: Rng>(rng: &mut R, max_v: usize) -> MixedHypergraph {
    let v = rng.gen_range(1..=max_v);
    let mut c = Vec::new();
    let mut d = Vec::new();
    if v >= 2 {
        let edges = rng.gen_range(0..=2 * v);
        for _ in 0..edges {
            let size = rng.gen_range(2..=v.min(4));
            let mut e: Vec<usize> = (0..v).collect();
            for i in 0..size {
                let j = rng.gen_range(i..v);
                e.swap(i, j);
            }
            e.truncate(size);
            match rng.gen_range(0..3) {
                0 => c.push(e),
                1 => d.push(e),
                _ => {
                    c.push(e.clone());
                    d.push(e);
                }
            }
        }
    }
    MixedHypergraph::new(v, c, d).unwrap()
}

/// Random 3-uniform bi-hypergraph on `v` vertices, each triple kept with probability `p`.
pub fn random_bi<R: Rng>(rng: &mut R, v: usize, p: f64) -> MixedHypergraph {
    let mut edges = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                if rng.gen_bool(p) {
                    edges.push(vec![a, b, c]);
                }
            }
        }
    }
    MixedHypergraph::bi(v, edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}
