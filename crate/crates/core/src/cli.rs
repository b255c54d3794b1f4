//! Command-line front end.
//!
//! Exit codes: 0 the claim holds or the command succeeded, 1 the claim is
//! refuted, 2 usage or input error, 3 the search budget ran out.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::construction::{
    canonical_colorings, construct, min_size, reduction_bijection, ConstructOptions, FeasibleSpec,
    VariantChoice,
};
use crate::enumeration::{enumerate_strict_colorings_with, is_one_realization, Certificate, EnumerationOptions};
use crate::io::{self, Document};
use crate::minimality::{certify_lower_bound, Cursor, SearchConfig, SearchVerdict};
use crate::model::check_isomorphism_under_map;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bihyper", version, about = "Build and verify 3-uniform bi-hypergraph one-realizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the minimum vertex count for the set.
    Formula {
        #[arg(long)]
        set: FeasibleSpec,
    },
    /// Build the labeled construction for the set.
    Construct {
        #[arg(long)]
        set: FeasibleSpec,
        #[arg(long, default_value = "auto")]
        variant: VariantChoice,
        /// Write the document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out the hand-added bi-edge.
        #[arg(long)]
        drop_special: bool,
    },
    /// Enumerate all strict colorings and print the chromatic spectrum.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also list every strict coloring.
        #[arg(long)]
        colorings: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check that the hypergraph is a one-realization of the set.
    Verify {
        file: PathBuf,
        #[arg(long)]
        set: FeasibleSpec,
    },
    /// Search all small 3-uniform bi-hypergraphs for one-realizations.
    MinSearch {
        #[arg(long)]
        set: FeasibleSpec,
        /// Largest vertex count searched (default: one below the minimum size).
        #[arg(long)]
        max_vertices: Option<usize>,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Continue from a cursor printed by an aborted run (V,INDEX).
        #[arg(long)]
        resume: Option<Cursor>,
        /// Instance checks allowed in this run.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check that MAP is an isomorphism from FILE1 to FILE2.
    Isocheck {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Write the reduced sub-hypergraph, the tail construction and the
    /// identifying map into a directory (sets with at least three values).
    Reduce {
        #[arg(long)]
        set: FeasibleSpec,
        #[arg(long)]
        dir: PathBuf,
    },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, String>;

fn read_document(path: &Path) -> Result<Document, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| e.to_string())?
    };
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Formula { set } => {
            say!(out, "{}", min_size(&set));
            Ok(EXIT_OK)
        }
        Command::Construct {
            set,
            variant,
            out: path,
            drop_special,
        } => {
            let l = construct(&set, ConstructOptions { variant, drop_special }).map_err(|e| e.to_string())?;
            // Every canonical coloring must come out proper.
            canonical_colorings(&l).map_err(|e| e.to_string())?;
            let text = io::serialize_labeled(&l);
            write_or_print(path.as_deref(), &text, out)?;
            if let Some(p) = &path {
                say!(
                    out,
                    "wrote {}: S = {}, variant {}, {} vertices, {} bi-edges",
                    p.display(),
                    io::render_set(&l.spec.ascending()),
                    l.variant,
                    l.vertex_count(),
                    l.hypergraph.c_edges().len()
                );
                if l.unproven {
                    say!(out, "note: variant II with n2 != n1 - 1 is an unproven regime");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Spectrum {
            file,
            json,
            colorings,
            threads,
        } => {
            let doc = read_document(&file)?;
            let report = enumerate_strict_colorings_with(
                doc.hypergraph(),
                &EnumerationOptions {
                    threads,
                    ..Default::default()
                },
            );
            if json {
                #[derive(Serialize)]
                struct SpectrumJson<'a> {
                    vertex_count: usize,
                    spectrum: &'a [u64],
                    upper_chromatic: usize,
                    feasible: &'a [usize],
                    colorings: u64,
                    zero_one: bool,
                    nodes_explored: u64,
                }
                let j = SpectrumJson {
                    vertex_count: doc.hypergraph().vertex_count(),
                    spectrum: report.spectrum.counts(),
                    upper_chromatic: report.spectrum.upper_chromatic(),
                    feasible: &report.feasible,
                    colorings: report.spectrum.total(),
                    zero_one: report.spectrum.is_zero_one(),
                    nodes_explored: report.nodes_explored,
                };
                say!(out, "{}", serde_json::to_string(&j).map_err(|e| e.to_string())?);
            } else {
                say!(out, "vertices: {}", doc.hypergraph().vertex_count());
                say!(out, "strict colorings: {}", report.spectrum.total());
                say!(out, "spectrum: {}", report.spectrum);
                write!(out, "{}", io::render_spectrum_table(&report.spectrum)).map_err(|e| e.to_string())?;
                say!(out, "feasible set: {}", io::render_set(&report.feasible));
                say!(out, "upper chromatic number: {}", report.spectrum.upper_chromatic());
                if colorings {
                    for p in &report.colorings {
                        say!(out, "k={}: {}", p.class_count(), io::render_partition(p, doc.labels()));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, set } => {
            let doc = read_document(&file)?;
            let target = set.ascending();
            let verdict = is_one_realization(doc.hypergraph(), &target);
            let labels = doc.labels();
            let shown = io::render_set(&target);
            match &verdict.certificate {
                Certificate::Witnesses { colorings } => {
                    say!(out, "one-realization of {shown}: yes");
                    for p in colorings {
                        say!(out, "k={}: {}", p.class_count(), io::render_partition(p, labels));
                    }
                }
                Certificate::UnexpectedClassCount { k, witness } => {
                    say!(out, "one-realization of {shown}: no");
                    say!(out, "strict {k}-coloring outside the set: {}", io::render_partition(witness, labels));
                }
                Certificate::Repeated { k, first, second } => {
                    say!(out, "one-realization of {shown}: no");
                    say!(out, "r_{k} >= 2, two distinct strict {k}-colorings:");
                    say!(out, "  {}", io::render_partition(first, labels));
                    say!(out, "  {}", io::render_partition(second, labels));
                }
                Certificate::Missing { k } => {
                    say!(out, "one-realization of {shown}: no");
                    say!(out, "no strict {k}-coloring exists");
                }
            }
            Ok(if verdict.holds { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::MinSearch {
            set,
            max_vertices,
            iso,
            resume,
            budget,
            threads,
            json,
        } => {
            let bound = min_size(&set);
            let v_max = max_vertices.unwrap_or(bound - 1);
            let defaults = SearchConfig::from_env();
            let config = SearchConfig {
                iso_reduce: iso,
                budget: budget.unwrap_or(defaults.budget),
                threads,
                resume,
                ..defaults
            };
            let report = certify_lower_bound(&set, v_max, &config).map_err(|e| e.to_string())?;
            let below = report.witnesses_below_bound().count();
            if json {
                say!(out, "{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
            } else {
                say!(out, "S = {}, minimum size {bound}", io::render_set(&set.ascending()));
                for (v, n) in &report.instances_examined {
                    let kind = if iso { "isomorphism classes" } else { "instances" };
                    say!(out, "v = {v}: {n} {kind} examined");
                }
                for w in &report.witnesses {
                    let edges: Vec<String> = w.hypergraph.c_edges().iter().map(|e| io::render_edge(e, None)).collect();
                    say!(out, "witness on {} vertices (mask {}): {}", w.vertex_count, w.mask, edges.join(" "));
                }
                say!(out, "verdict: {}", report.verdict);
                if let Some(c) = report.cursor {
                    say!(out, "resume with --resume {c}");
                }
            }
            Ok(match report.verdict {
                SearchVerdict::AbortedBudget => EXIT_BUDGET,
                _ if below > 0 => EXIT_REFUTED,
                _ => EXIT_OK,
            })
        }
        Command::Isocheck { file1, file2, map } => {
            let h1 = read_document(&file1)?;
            let h2 = read_document(&file2)?;
            let text = fs::read_to_string(&map).map_err(|e| format!("{}: {e}", map.display()))?;
            let bijection = io::parse_map(&text).map_err(|e| format!("{}: {e}", map.display()))?;
            let iso = check_isomorphism_under_map(h1.hypergraph(), h2.hypergraph(), &bijection)
                .map_err(|e| e.to_string())?;
            say!(out, "isomorphism under map: {iso}");
            Ok(if iso { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Reduce { set, dir } => {
            let r = reduction_bijection(&set).map_err(|e| e.to_string())?;
            fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            let provenance = format!("reduced sub-hypergraph of construction for {set}");
            let files = [
                ("reduced.json", io::serialize_hypergraph(&r.induced, Some(&provenance))),
                ("tail.json", io::serialize_labeled(&r.target)),
                ("map.json", io::serialize_map(&r.map)),
            ];
            for (name, text) in files {
                let path = dir.join(name);
                fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                say!(out, "wrote {}", path.display());
            }
            Ok(EXIT_OK)
        }
    }
}
