//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bihyper::construction::canonical_colorings;
use bihyper::enumeration::{enumerate_strict_colorings_with, EnumerationOptions};
use bihyper::io::{self, Document};
use bihyper::minimality::{check_singleton_merges, enumerate_bi_hypergraphs, SearchConfig};
use bihyper::{
    certify_lower_bound, check_isomorphism_under_map, construct, enumerate_strict_colorings, min_size,
    reduction_bijection, ConstructOptions, FeasibleSpec, LabeledHypergraph, SearchVerdict, VariantChoice,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

const AC2_LIMIT: Duration = Duration::from_secs(1);
const AC3_LIMIT: Duration = Duration::from_secs(300);
const AC4_LIMIT: Duration = Duration::from_secs(10);
const AC5_LIMIT: Duration = Duration::from_secs(1);
const AC6_LIMIT: Duration = Duration::from_secs(120);
const AC6_SAMPLES: usize = 200;
const AC6_MAX_V: usize = 8;
const AC6_SEED: u64 = 0x5eed_ac06;
const AC7_THREADS: usize = 4;
/// Constructions small enough for the brute-force cross-check in AC3.
const BRUTE_FORCE_MAX_V: usize = 10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(values: &[usize]) -> FeasibleSpec {
    FeasibleSpec::new(values.to_vec()).unwrap()
}

fn build(s: &FeasibleSpec, variant: VariantChoice) -> LabeledHypergraph {
    construct(
        s,
        ConstructOptions {
            variant,
            drop_special: false,
        },
    )
    .unwrap()
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    if elapsed <= limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn ac1() -> Outcome {
    let cases: [(&[usize], usize); 3] = [(&[4, 2], 8), (&[3, 2], 5), (&[5, 4, 2], 9)];
    for (values, expected) in cases {
        let got = min_size(&spec(values));
        if got != expected {
            return Err(format!("min_size({values:?}) = {got}, expected {expected}"));
        }
    }
    Ok("min_size {4,2}=8, {3,2}=5, {5,4,2}=9".into())
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let specs = FeasibleSpec::all_up_to(8, &[2, 3, 4]);
    for s in &specs {
        let n1 = s.largest();
        let one = build(s, VariantChoice::I);
        let two = build(s, VariantChoice::II);
        if one.vertex_count() != 2 * n1 || two.vertex_count() != 2 * n1 - 1 {
            return Err(format!(
                "S = {s}: variant I has {} vertices, variant II has {}",
                one.vertex_count(),
                two.vertex_count()
            ));
        }
        if !one.hypergraph.is_bi() || !one.hypergraph.is_3_uniform() || !two.hypergraph.is_bi() {
            return Err(format!("S = {s}: not a 3-uniform bi-hypergraph"));
        }
    }
    within(start.elapsed(), AC2_LIMIT, format!("{} sets checked", specs.len()))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let specs = FeasibleSpec::all_up_to(6, &[2, 3, 4, 5]);
    let mut failures = Vec::new();
    for s in &specs {
        let l = build(s, VariantChoice::Auto);
        let report = enumerate_strict_colorings(&l.hypergraph, None);
        let got: BTreeSet<_> = report.colorings.iter().cloned().collect();
        let expected: BTreeSet<_> = canonical_colorings(&l).unwrap().into_iter().collect();
        let counts_ok = report.feasible == s.ascending() && report.spectrum.is_zero_one();
        if got != expected || !counts_ok {
            failures.push(format!("{s} (variant {}, spectrum {})", l.variant, report.spectrum));
            continue;
        }
        if l.vertex_count() <= BRUTE_FORCE_MAX_V {
            let brute: BTreeSet<_> = common::brute_force_colorings(&l.hypergraph).into_iter().collect();
            if brute != got {
                failures.push(format!("{s} (enumerator disagrees with brute force)"));
            }
        }
    }
    let elapsed = start.elapsed();
    if failures.is_empty() {
        within(elapsed, AC3_LIMIT, format!("{} sets, all one-realizations", specs.len()))
    } else {
        Err(format!(
            "{} of {} sets not one-realizations: {}",
            failures.len(),
            specs.len(),
            failures.join("; ")
        ))
    }
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let s = spec(&[3, 2]);
    let plain = certify_lower_bound(&s, 4, &SearchConfig::default()).map_err(|e| e.to_string())?;
    let iso = certify_lower_bound(
        &s,
        4,
        &SearchConfig {
            iso_reduce: true,
            ..SearchConfig::default()
        },
    )
    .map_err(|e| e.to_string())?;
    for r in [&plain, &iso] {
        if r.verdict != SearchVerdict::CertifiedNone || !r.witnesses.is_empty() {
            return Err(format!("search on v = 3,4 reported {}", r.verdict));
        }
    }
    // Every edge subset on 3 and 4 vertices: 2^1 + 2^4 instances, 2 + 5 classes.
    let all_subsets: u64 = (3..=4u32).map(|v| 1u64 << (v * (v - 1) * (v - 2) / 6)).sum();
    if plain.total_examined() != all_subsets || iso.total_examined() != 7 {
        return Err(format!(
            "examined {} instances and {} classes, expected {all_subsets} and 7",
            plain.total_examined(),
            iso.total_examined()
        ));
    }
    let mut merges = 0;
    let mut instances = 0;
    for v in 1..=5 {
        // Below three vertices the only 3-uniform bi-hypergraph is edgeless.
        let stream: Vec<_> = if v < 3 {
            vec![bihyper::MixedHypergraph::edgeless(v)]
        } else {
            enumerate_bi_hypergraphs(v, false).map_err(|e| e.to_string())?.map(|(_, h)| h).collect()
        };
        for h in stream {
            merges += check_singleton_merges(&h)
                .map_err(|(p, a, b)| format!("merging {a} and {b} in {p} fails on v = {v}"))?;
            instances += 1;
        }
    }
    within(
        start.elapsed(),
        AC4_LIMIT,
        format!("{all_subsets} instances / 7 classes certified none; {merges} merges over {instances} instances"),
    )
}

fn ac5() -> Outcome {
    let start = Instant::now();
    for values in [&[5, 3, 2][..], &[4, 3, 2][..]] {
        let r = reduction_bijection(&spec(values)).map_err(|e| e.to_string())?;
        let iso = check_isomorphism_under_map(&r.induced, &r.target.hypergraph, &r.map).map_err(|e| e.to_string())?;
        if !iso {
            return Err(format!("reduction of {values:?} is not an isomorphism"));
        }
    }
    within(start.elapsed(), AC5_LIMIT, "{5,3,2} and {4,3,2}".into())
}

fn ac6() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(AC6_SEED);
    for i in 0..AC6_SAMPLES {
        let h = common::random_mixed(&mut rng, AC6_MAX_V);
        let fast = enumerate_strict_colorings(&h, None).colorings;
        if fast != common::brute_force_colorings(&h) {
            return Err(format!("sample {i} disagrees with brute force"));
        }
    }
    for n in 1..=9 {
        let spectrum = enumerate_strict_colorings(&bihyper::MixedHypergraph::edgeless(n), None).spectrum;
        let expected = common::stirling_row(n);
        if spectrum.counts() != &expected[..] {
            return Err(format!("edgeless {n}: {spectrum}, expected {expected:?}"));
        }
    }
    within(
        start.elapsed(),
        AC6_LIMIT,
        format!("{AC6_SAMPLES} random instances, Stirling rows to 9"),
    )
}

fn ac7() -> Outcome {
    let specs = FeasibleSpec::all_up_to(6, &[2, 3, 4, 5]);
    let mut documents = 0;
    for s in &specs {
        for choice in [VariantChoice::I, VariantChoice::II] {
            let l = build(s, choice);
            let text = io::serialize_labeled(&l);
            let parsed = io::parse(&text).map_err(|e| format!("{s}: {e}"))?;
            if parsed != Document::Labeled(l.clone()) || io::serialize(&parsed) != text {
                return Err(format!("{s} variant {} does not round-trip", l.variant));
            }
            let one = enumerate_strict_colorings_with(&l.hypergraph, &EnumerationOptions::default());
            let many = enumerate_strict_colorings_with(
                &l.hypergraph,
                &EnumerationOptions {
                    threads: AC7_THREADS,
                    ..Default::default()
                },
            );
            if one != many {
                return Err(format!("{s} variant {}: reports differ across threads", l.variant));
            }
            documents += 1;
        }
    }
    Ok(format!("{documents} constructions round-trip; 1 vs {AC7_THREADS} threads identical"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1 minimum-size formula", ac1),
        ("AC2 construction sizes", ac2),
        ("AC3 constructions are one-realizations", ac3),
        ("AC4 small-order search and singleton merges", ac4),
        ("AC5 reduction isomorphism", ac5),
        ("AC6 enumerator against brute force", ac6),
        ("AC7 round-trip and thread determinism", ac7),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail} ({elapsed:.2?})");
            }
        }
    }
    println!("{} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
