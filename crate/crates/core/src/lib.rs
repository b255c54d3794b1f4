//! Minimum-size 3-uniform bi-hypergraphs whose feasible set is a prescribed
//! set `S` and whose chromatic spectrum has only 0/1 entries, together with
//! the exhaustive machinery that checks such claims.
//!
//! - [`model`]: mixed hypergraphs, set partitions, coloring predicates.
//! - [`enumeration`]: strict-coloring enumeration, spectra, one-realization checks.
//! - [`construction`]: the tuple-labeled constructions and the minimum-size formula.
//! - [`minimality`]: exhaustive search over small bi-hypergraphs.
//! - [`io`]: the document format and report rendering.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod construction;
pub mod enumeration;
pub mod io;
pub mod minimality;
pub mod model;

pub use construction::{
    canonical_coloring, construct, min_size, reduction_bijection, ConstructOptions, FeasibleSpec,
    LabeledHypergraph, LabeledVertex, Variant, VariantChoice,
};
pub use enumeration::{
    chromatic_spectrum, enumerate_strict_colorings, feasible_set, is_one_realization, Certificate,
    EnumerationReport,
};
pub use minimality::{certify_lower_bound, enumerate_bi_hypergraphs, SearchConfig, SearchReport, SearchVerdict};
pub use model::{check_isomorphism_under_map, ChromaticSpectrum, MixedHypergraph, Partition, VertexBijection};
