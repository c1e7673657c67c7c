//! Sparse JSON documents for algebras, maps and candidate sets, plus
//! deterministic report rendering.
//!
//! Rationals travel as strings (`"p"` or `"p/q"`) so no float can leak into
//! a document. Unspecified structure constants are zero; a present-but-empty
//! entry list is an explicit zero table, while an absent key means the
//! operation is absent. Emission is canonical: entries sorted by index
//! tuple, zero coefficients dropped, identity twisting maps omitted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use homly_core::algebra::{Algebra, BinaryTable, TernaryTable};
use homly_core::linalg::{LinearMap, Vector};
use homly_core::morphism::{CandidateSet, Provenance};
use homly_core::rational::Rational;
use homly_core::report::CheckReport;

/// Format version stamped into every emitted document.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),

    #[error("{path}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        path: String,
        index: usize,
        dim: usize,
    },

    #[error("{path}: cannot parse rational {value:?}")]
    BadRational { path: String, value: String },

    #[error("{path}: coefficient key {key:?} is not a basis index")]
    BadCoeffKey { path: String, key: String },

    #[error("{path}: duplicate index group")]
    DuplicateEntry { path: String },

    #[error("basis must list {dim} distinct labels, found {found}")]
    BadBasis { dim: usize, found: usize },

    #[error("{path}: expected a {dim}x{dim} matrix")]
    BadMatrixShape { path: String, dim: usize },

    #[error("unknown provenance {0:?}")]
    BadProvenance(String),

    #[error(transparent)]
    Core(#[from] homly_core::Error),
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    #[serde(default = "default_version")]
    format_version: u32,
    name: String,
    dim: usize,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    binary: Option<Vec<BinaryEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ternary: Option<Vec<TernaryEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct BinaryEntry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct TernaryEntry {
    i: usize,
    j: usize,
    k: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct MapDoc {
    #[serde(default = "default_version")]
    format_version: u32,
    dim: usize,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CandidatesDoc {
    #[serde(default = "default_version")]
    format_version: u32,
    dim: usize,
    #[serde(default = "default_provenance")]
    provenance: String,
    maps: Vec<Vec<Vec<String>>>,
}

fn default_provenance() -> String {
    "user".to_string()
}

fn check_version(v: u32) -> Result<(), DocError> {
    if v != FORMAT_VERSION {
        return Err(DocError::UnsupportedVersion(v));
    }
    Ok(())
}

fn check_index(path: &str, index: usize, dim: usize) -> Result<(), DocError> {
    if index >= dim {
        return Err(DocError::IndexOutOfRange {
            path: path.to_string(),
            index,
            dim,
        });
    }
    Ok(())
}

fn parse_rational(path: &str, value: &str) -> Result<Rational, DocError> {
    value.parse().map_err(|_| DocError::BadRational {
        path: path.to_string(),
        value: value.to_string(),
    })
}

fn parse_coeffs(
    path: &str,
    dim: usize,
    coeffs: &BTreeMap<String, String>,
) -> Result<Vector, DocError> {
    let mut out = vec![Rational::zero(); dim];
    for (key, value) in coeffs {
        let coeff_path = format!("{path}.coeffs.{key}");
        let index: usize = key.parse().map_err(|_| DocError::BadCoeffKey {
            path: path.to_string(),
            key: key.clone(),
        })?;
        check_index(&coeff_path, index, dim)?;
        out[index] = parse_rational(&coeff_path, value)?;
    }
    Ok(Vector::from_coords(out))
}

fn parse_matrix(path: &str, dim: usize, rows: &[Vec<String>]) -> Result<LinearMap, DocError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(DocError::BadMatrixShape {
            path: path.to_string(),
            dim,
        });
    }
    let mut m = LinearMap::zeros(dim);
    for (r, row) in rows.iter().enumerate() {
        for (c, value) in row.iter().enumerate() {
            let cell = parse_rational(&format!("{path}[{r}][{c}]"), value)?;
            m.set_entry(r, c, cell);
        }
    }
    Ok(m)
}

/// Parses an algebra document, building dense tables; see the module docs
/// for the absence-versus-zero convention.
pub fn parse_algebra(text: &str) -> Result<Algebra, DocError> {
    let doc: AlgebraDoc =
        serde_json::from_str(text).map_err(|e| DocError::Malformed(e.to_string()))?;
    check_version(doc.format_version)?;
    let dim = doc.dim;

    if doc.basis.len() != dim {
        return Err(DocError::BadBasis {
            dim,
            found: doc.basis.len(),
        });
    }

    let binary = match &doc.binary {
        None => None,
        Some(entries) => {
            let mut table = BinaryTable::zero(dim);
            let mut seen = std::collections::HashSet::new();
            for (n, entry) in entries.iter().enumerate() {
                let path = format!("binary[{n}]");
                check_index(&path, entry.i, dim)?;
                check_index(&path, entry.j, dim)?;
                if !seen.insert((entry.i, entry.j)) {
                    return Err(DocError::DuplicateEntry { path });
                }
                table.set(entry.i, entry.j, parse_coeffs(&path, dim, &entry.coeffs)?);
            }
            Some(table)
        }
    };

    let ternary = match &doc.ternary {
        None => None,
        Some(entries) => {
            let mut table = TernaryTable::zero(dim);
            let mut seen = std::collections::HashSet::new();
            for (n, entry) in entries.iter().enumerate() {
                let path = format!("ternary[{n}]");
                check_index(&path, entry.i, dim)?;
                check_index(&path, entry.j, dim)?;
                check_index(&path, entry.k, dim)?;
                if !seen.insert((entry.i, entry.j, entry.k)) {
                    return Err(DocError::DuplicateEntry { path });
                }
                table.set(
                    entry.i,
                    entry.j,
                    entry.k,
                    parse_coeffs(&path, dim, &entry.coeffs)?,
                );
            }
            Some(table)
        }
    };

    let mut algebra = Algebra::new(doc.name, dim, binary, ternary)?
        .with_basis(doc.basis)
        .map_err(|_| DocError::BadBasis {
            dim,
            found: dim, // labels matched in length but were not distinct
        })?;
    if let Some(rows) = &doc.alpha {
        algebra = algebra.with_alpha(parse_matrix("alpha", dim, rows)?)?;
    }
    Ok(algebra)
}

fn coeffs_of(v: &Vector) -> BTreeMap<String, String> {
    v.coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.to_string(), c.to_string()))
        .collect()
}

fn matrix_rows(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.entry(r, c).to_string()).collect())
        .collect()
}

/// Canonical emission; `parse_algebra(emit_algebra(a))` reproduces `a`
/// including table presence.
pub fn emit_algebra(a: &Algebra) -> String {
    let binary = a.binary().map(|t| {
        let mut entries = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let coeffs = coeffs_of(t.product(i, j));
                if !coeffs.is_empty() {
                    entries.push(BinaryEntry { i, j, coeffs });
                }
            }
        }
        entries
    });
    let ternary = a.ternary().map(|t| {
        let mut entries = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let coeffs = coeffs_of(t.product(i, j, k));
                    if !coeffs.is_empty() {
                        entries.push(TernaryEntry { i, j, k, coeffs });
                    }
                }
            }
        }
        entries
    });
    let alpha = (!a.alpha().is_identity()).then(|| matrix_rows(a.alpha()));
    let doc = AlgebraDoc {
        format_version: FORMAT_VERSION,
        name: a.name().to_string(),
        dim: a.dim(),
        basis: a.basis().to_vec(),
        binary,
        ternary,
        alpha,
    };
    to_pretty_json(&doc)
}

pub fn parse_map(text: &str) -> Result<LinearMap, DocError> {
    let doc: MapDoc = serde_json::from_str(text).map_err(|e| DocError::Malformed(e.to_string()))?;
    check_version(doc.format_version)?;
    parse_matrix("matrix", doc.dim, &doc.matrix)
}

pub fn emit_map(m: &LinearMap) -> String {
    let doc = MapDoc {
        format_version: FORMAT_VERSION,
        dim: m.dim(),
        matrix: matrix_rows(m),
    };
    to_pretty_json(&doc)
}

pub fn parse_candidates(text: &str) -> Result<CandidateSet, DocError> {
    let doc: CandidatesDoc =
        serde_json::from_str(text).map_err(|e| DocError::Malformed(e.to_string()))?;
    check_version(doc.format_version)?;
    let provenance = Provenance::parse(&doc.provenance)
        .ok_or_else(|| DocError::BadProvenance(doc.provenance.clone()))?;
    let mut maps = Vec::with_capacity(doc.maps.len());
    for (n, rows) in doc.maps.iter().enumerate() {
        maps.push(parse_matrix(&format!("maps[{n}]"), doc.dim, rows)?);
    }
    Ok(CandidateSet::new(doc.dim, maps, provenance)?)
}

pub fn emit_candidates(c: &CandidateSet) -> String {
    let doc = CandidatesDoc {
        format_version: FORMAT_VERSION,
        dim: c.dim(),
        provenance: c.provenance().as_str().to_string(),
        maps: c.maps().iter().map(matrix_rows).collect(),
    };
    to_pretty_json(&doc)
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ReportDoc {
    suite_id: String,
    passed: bool,
    checked_tuples: u64,
    axiom_verdicts: Vec<VerdictDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    info_verdicts: Vec<VerdictDoc>,
}

#[derive(Serialize)]
struct VerdictDoc {
    axiom_id: String,
    passed: bool,
    checked_tuples: u64,
    total_counterexamples: u64,
    counterexamples: Vec<CounterexampleDoc>,
}

#[derive(Serialize)]
struct CounterexampleDoc {
    tuple: Vec<usize>,
    residual: Vec<String>,
}

fn verdict_doc(v: &homly_core::report::AxiomVerdict) -> VerdictDoc {
    VerdictDoc {
        axiom_id: v.axiom_id.clone(),
        passed: v.passed,
        checked_tuples: v.checked_tuples,
        total_counterexamples: v.total_counterexamples,
        counterexamples: v
            .counterexamples
            .iter()
            .map(|c| CounterexampleDoc {
                tuple: c.tuple.clone(),
                residual: c.residual.coords().iter().map(|r| r.to_string()).collect(),
            })
            .collect(),
    }
}

/// Machine-readable rendering; structurally stable and byte-deterministic.
pub fn render_report_json(report: &CheckReport) -> String {
    let doc = ReportDoc {
        suite_id: report.suite_id.clone(),
        passed: report.passed,
        checked_tuples: report.checked_tuples,
        axiom_verdicts: report.axiom_verdicts.iter().map(verdict_doc).collect(),
        info_verdicts: report.info_verdicts.iter().map(verdict_doc).collect(),
    };
    to_pretty_json(&doc)
}

/// Human-readable rendering; one line per axiom ending in PASS or FAIL.
pub fn render_report_text(report: &CheckReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
    writeln!(out, "suite {}: {}", report.suite_id, verdict(report.passed)).unwrap();
    for v in &report.axiom_verdicts {
        writeln!(
            out,
            "  {} [{} tuples]: {}",
            v.axiom_id,
            v.checked_tuples,
            verdict(v.passed)
        )
        .unwrap();
        if !v.passed {
            writeln!(
                out,
                "    counterexamples: {} (showing {})",
                v.total_counterexamples,
                v.counterexamples.len()
            )
            .unwrap();
            for c in &v.counterexamples {
                let tuple = c
                    .tuple
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(out, "    ({tuple}): residual {:?}", c.residual).unwrap();
            }
        }
    }
    for v in &report.info_verdicts {
        writeln!(
            out,
            "  info {} [{} tuples]: {}",
            v.axiom_id,
            v.checked_tuples,
            if v.passed { "satisfied" } else { "violated" }
        )
        .unwrap();
    }
    out
}
