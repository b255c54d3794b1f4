//! Versioned JSON document format for hypergraphs and vertex maps, plus the
//! text renderings used in reports.
//!
//! Documents are written by hand in a fixed layout (fixed key order, one
//! label or edge per line) so equal values always produce identical bytes.
//! Reading goes through serde.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construction::{FeasibleSpec, LabeledHypergraph, LabeledVertex, Variant};
use crate::model::{ChromaticSpectrum, MixedHypergraph, ModelError, Partition, VertexBijection};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("field `{field}`: {source}")]
    Model {
        field: &'static str,
        #[source]
        source: ModelError,
    },
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Field {
        field: field.into(),
        message: message.into(),
    }
}

/// A parsed document: either a plain hypergraph or a labeled construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Plain {
        hypergraph: MixedHypergraph,
        provenance: Option<String>,
    },
    Labeled(LabeledHypergraph),
}

impl Document {
    pub fn hypergraph(&self) -> &MixedHypergraph {
        match self {
            Document::Plain { hypergraph, .. } => hypergraph,
            Document::Labeled(l) => &l.hypergraph,
        }
    }

    pub fn labels(&self) -> Option<&[LabeledVertex]> {
        match self {
            Document::Plain { .. } => None,
            Document::Labeled(l) => Some(&l.labels),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format_version: u32,
    vertex_count: usize,
    bi: bool,
    #[serde(default)]
    s: Option<usize>,
    #[serde(default)]
    labels: Option<Vec<Vec<usize>>>,
    c_edges: Vec<Vec<usize>>,
    d_edges: Vec<Vec<usize>>,
    #[serde(default)]
    metadata: RawMetadata,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMetadata {
    spec: Option<String>,
    variant: Option<String>,
    drop_special: Option<bool>,
    unproven: Option<bool>,
    provenance: Option<String>,
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn write_rows(out: &mut String, key: &str, rows: &[Vec<usize>], last: bool) {
    let _ = write!(out, "  \"{key}\": [");
    if rows.is_empty() {
        out.push(']');
    } else {
        out.push('\n');
        for (i, row) in rows.iter().enumerate() {
            let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            let _ = write!(out, "    [{}]", items.join(", "));
            out.push_str(if i + 1 < rows.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]");
    }
    out.push_str(if last { "\n" } else { ",\n" });
}

fn write_document(
    h: &MixedHypergraph,
    s: Option<usize>,
    labels: Option<&[LabeledVertex]>,
    metadata: &[(&str, String)],
) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"format_version\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"vertex_count\": {},", h.vertex_count());
    let _ = writeln!(out, "  \"bi\": {},", h.is_bi());
    if let Some(s) = s {
        let _ = writeln!(out, "  \"s\": {s},");
    }
    if let Some(labels) = labels {
        let rows: Vec<Vec<usize>> = labels.iter().map(|l| l.tuple()).collect();
        write_rows(&mut out, "labels", &rows, false);
    }
    write_rows(&mut out, "c_edges", h.c_edges(), false);
    write_rows(&mut out, "d_edges", h.d_edges(), false);
    if metadata.is_empty() {
        out.push_str("  \"metadata\": {}\n");
    } else {
        out.push_str("  \"metadata\": {\n");
        for (i, (k, v)) in metadata.iter().enumerate() {
            let _ = write!(out, "    \"{k}\": {v}");
            out.push_str(if i + 1 < metadata.len() { ",\n" } else { "\n" });
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// Serializes a plain hypergraph.
pub fn serialize_hypergraph(h: &MixedHypergraph, provenance: Option<&str>) -> String {
    let meta: Vec<(&str, String)> = provenance
        .map(|p| vec![("provenance", json_str(p))])
        .unwrap_or_default();
    write_document(h, None, None, &meta)
}

/// Serializes a construction with its labels and spec.
pub fn serialize_labeled(l: &LabeledHypergraph) -> String {
    let meta = vec![
        ("spec", json_str(&l.spec.to_string())),
        ("variant", json_str(&l.variant.to_string())),
        ("drop_special", l.drop_special.to_string()),
        ("unproven", l.unproven.to_string()),
        ("provenance", json_str("construct")),
    ];
    write_document(&l.hypergraph, Some(l.spec.len()), Some(&l.labels), &meta)
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Plain {
            hypergraph,
            provenance,
        } => serialize_hypergraph(hypergraph, provenance.as_deref()),
        Document::Labeled(l) => serialize_labeled(l),
    }
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<Document, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(DocumentError::Version(raw.format_version));
    }
    let n = raw.vertex_count;
    for (family, edges) in [("c_edges", &raw.c_edges), ("d_edges", &raw.d_edges)] {
        for (i, e) in edges.iter().enumerate() {
            if let Some(&x) = e.iter().find(|&&x| x >= n) {
                return Err(field_error(
                    format!("{family}[{i}]"),
                    format!("edge {e:?} uses vertex {x}, outside 0..{n}"),
                ));
            }
        }
    }
    let hypergraph = MixedHypergraph::new(n, raw.c_edges, raw.d_edges).map_err(|source| DocumentError::Model {
        field: "edges",
        source,
    })?;
    if raw.bi && !hypergraph.is_bi() {
        return Err(field_error("bi", "document claims a bi-hypergraph but c_edges and d_edges differ"));
    }

    let meta = raw.metadata;
    let Some(labels) = raw.labels else {
        if raw.s.is_some() {
            return Err(field_error("s", "`s` given without `labels`"));
        }
        return Ok(Document::Plain {
            hypergraph,
            provenance: meta.provenance,
        });
    };

    let s = raw.s.ok_or_else(|| field_error("s", "labeled documents need `s`"))?;
    if labels.len() != n {
        return Err(field_error(
            "labels",
            format!("{} labels for {n} vertices", labels.len()),
        ));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, t) in labels.iter().enumerate() {
        if t.len() != s + 1 {
            return Err(field_error(
                format!("labels[{i}]"),
                format!("expected {} entries, got {}", s + 1, t.len()),
            ));
        }
        let (&flag, coords) = t.split_last().expect("s + 1 >= 1");
        if flag > 1 {
            return Err(field_error(format!("labels[{i}]"), format!("flag must be 0 or 1, got {flag}")));
        }
        parsed.push(LabeledVertex::new(coords.to_vec(), flag as u8));
    }
    let distinct: BTreeSet<&LabeledVertex> = parsed.iter().collect();
    if distinct.len() != parsed.len() {
        return Err(field_error("labels", "duplicate labels"));
    }
    if parsed.windows(2).any(|w| w[0] > w[1]) {
        return Err(field_error("labels", "labels must be sorted"));
    }

    let spec_text = meta
        .spec
        .ok_or_else(|| field_error("metadata.spec", "labeled documents need a spec"))?;
    let spec: FeasibleSpec = spec_text
        .parse()
        .map_err(|e: crate::construction::ConstructionError| field_error("metadata.spec", e.to_string()))?;
    if spec.len() != s {
        return Err(field_error("s", format!("s = {s} but spec {spec} has {} values", spec.len())));
    }
    let variant = match meta.variant.as_deref() {
        Some("I") => Variant::I,
        Some("II") => Variant::II,
        other => return Err(field_error("metadata.variant", format!("expected \"I\" or \"II\", got {other:?}"))),
    };
    let unproven = variant == Variant::II && spec.n(2) + 1 != spec.n(1);
    if meta.unproven.is_some_and(|u| u != unproven) {
        return Err(field_error("metadata.unproven", "inconsistent with spec and variant"));
    }
    Ok(Document::Labeled(LabeledHypergraph {
        hypergraph,
        labels: parsed,
        spec,
        variant,
        unproven,
        drop_special: meta.drop_special.unwrap_or(false),
    }))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    format_version: u32,
    forward: Vec<usize>,
}

/// `{"format_version": 1, "forward": [...]}`: vertex `i` maps to `forward[i]`.
pub fn serialize_map(map: &VertexBijection) -> String {
    let items: Vec<String> = map.forward().iter().map(|x| x.to_string()).collect();
    format!(
        "{{\n  \"format_version\": {FORMAT_VERSION},\n  \"forward\": [{}]\n}}\n",
        items.join(", ")
    )
}

pub fn parse_map(text: &str) -> Result<VertexBijection, DocumentError> {
    let raw: RawMap = serde_json::from_str(text)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(DocumentError::Version(raw.format_version));
    }
    VertexBijection::new(raw.forward).map_err(|source| DocumentError::Model {
        field: "forward",
        source,
    })
}

/// Classes of a partition, vertices shown by label when available.
pub fn render_partition(p: &Partition, labels: Option<&[LabeledVertex]>) -> String {
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| {
            let members: Vec<String> = b
                .iter()
                .map(|&x| match labels {
                    Some(l) => l[x].to_string(),
                    None => x.to_string(),
                })
                .collect();
            format!("{{{}}}", members.join(", "))
        })
        .collect();
    blocks.join(" ")
}

pub fn render_edge(e: &[usize], labels: Option<&[LabeledVertex]>) -> String {
    let members: Vec<String> = e
        .iter()
        .map(|&x| match labels {
            Some(l) => l[x].to_string(),
            None => x.to_string(),
        })
        .collect();
    format!("{{{}}}", members.join(", "))
}

pub fn render_set(values: &[usize]) -> String {
    let items: Vec<String> = values.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Two-column `k  r_k` table.
pub fn render_spectrum_table(spectrum: &ChromaticSpectrum) -> String {
    let mut out = String::from("   k  r_k\n");
    for k in 1..=spectrum.upper_chromatic() {
        let _ = writeln!(out, "{k:>4}  {}", spectrum.r(k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{construct, ConstructOptions};

    fn labeled(v: &[usize]) -> LabeledHypergraph {
        construct(&FeasibleSpec::new(v.to_vec()).unwrap(), ConstructOptions::default()).unwrap()
    }

    #[test]
    fn labeled_round_trip() {
        for v in [&[4, 2][..], &[5, 3, 2], &[3, 2], &[6, 5, 3, 2]] {
            let l = labeled(v);
            let text = serialize_labeled(&l);
            let back = parse(&text).unwrap();
            assert_eq!(back, Document::Labeled(l));
            assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn layout_of_4_2() {
        let text = serialize_labeled(&labeled(&[4, 2]));
        assert!(text.starts_with("{\n  \"format_version\": 1,\n  \"vertex_count\": 8,\n  \"bi\": true,\n  \"s\": 2,\n  \"labels\": [\n    [1, 1, 0],\n"));
        assert!(text.contains("\"spec\": \"4,2\""));
        assert_eq!(text, serialize_labeled(&labeled(&[4, 2])));
    }

    #[test]
    fn empty_hypergraph_document() {
        let h = MixedHypergraph::edgeless(0);
        let text = serialize_hypergraph(&h, None);
        assert_eq!(
            text,
            "{\n  \"format_version\": 1,\n  \"vertex_count\": 0,\n  \"bi\": true,\n  \"c_edges\": [],\n  \"d_edges\": [],\n  \"metadata\": {}\n}\n"
        );
        assert_eq!(parse(&text).unwrap().hypergraph(), &h);
    }

    #[test]
    fn single_bi_edge_doc() {
        let text = r#"{"format_version": 1, "vertex_count": 3, "bi": true,
                       "c_edges": [[2, 1, 0]], "d_edges": [[0, 1, 2]]}"#;
        let doc = parse(text).unwrap();
        assert_eq!(doc.hypergraph(), &MixedHypergraph::bi(3, [vec![0, 1, 2]]).unwrap());
    }

    #[test]
    fn parse_errors() {
        let bad_index = r#"{"format_version": 1, "vertex_count": 3, "bi": true,
                            "c_edges": [[0, 1, 9]], "d_edges": [[0, 1, 9]]}"#;
        let msg = parse(bad_index).unwrap_err().to_string();
        assert!(msg.contains("c_edges[0]") && msg.contains("[0, 1, 9]"), "{msg}");

        let mismatch = r#"{"format_version": 1, "vertex_count": 3, "bi": true,
                           "c_edges": [[0, 1, 2]], "d_edges": []}"#;
        assert!(parse(mismatch).unwrap_err().to_string().contains("bi"));

        let syntax = "{\n  \"format_version\": 1,\n  \"vertex_count\": oops\n}";
        let msg = parse(syntax).unwrap_err().to_string();
        assert!(msg.contains("line 3"), "{msg}");

        let version = r#"{"format_version": 9, "vertex_count": 0, "bi": true, "c_edges": [], "d_edges": []}"#;
        assert!(matches!(parse(version), Err(DocumentError::Version(9))));

        let mut text = serialize_labeled(&labeled(&[4, 2]));
        text = text.replacen("[1, 1, 1]", "[1, 1, 0]", 1);
        assert!(parse(&text).unwrap_err().to_string().contains("duplicate labels"));
    }

    #[test]
    fn map_round_trip() {
        let m = VertexBijection::new(vec![2, 0, 1]).unwrap();
        assert_eq!(parse_map(&serialize_map(&m)).unwrap(), m);
        assert!(parse_map(r#"{"format_version": 1, "forward": [0, 0]}"#).is_err());
    }

    #[test]
    fn renderings() {
        let l = labeled(&[4, 2]);
        let c2 = crate::construction::canonical_coloring(&l, 2).unwrap();
        assert_eq!(
            render_partition(&c2, Some(&l.labels)),
            "{(1,1,0), (1,1,1), (2,1,0), (3,1,0)} {(2,2,0), (2,2,1), (3,2,1), (4,2,1)}"
        );
        assert_eq!(render_set(&[2, 4]), "{2,4}");
        let table = render_spectrum_table(&ChromaticSpectrum::from_counts(vec![0, 1, 0, 1]));
        assert_eq!(table, "   k  r_k\n   1  0\n   2  1\n   3  0\n   4  1\n");
    }
}
