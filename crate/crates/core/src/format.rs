//! The on-disk algebra format: JSON with rational strings.
//!
//! A file carries the dimension, the nonzero basis products, the twist
//! matrix, and optionally a ternary tensor (for Hom-Akivis structures).
//! Basis indices are 1-based and rationals are written `p` or `p/q`, so
//! files stay line-diffable and readable. Serialization is canonical:
//! entries sorted by index, zero entries omitted, pretty-printed with a
//! trailing newline — parsing a canonical file and re-serializing it
//! reproduces the bytes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::akivis::HomAkivisAlgebra;
use crate::algebra::{zero_structure, HomAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Element, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;

pub const FORMAT_VERSION: u32 = 1;

/// Serialized form of an algebra or Hom-Akivis structure.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// Nonzero basis products; omitted pairs are zero. 1-based indices.
    pub products: Vec<ProductEntry>,
    /// Twist matrix rows, rationals as strings.
    pub twist: Vec<Vec<String>>,
    /// Ternary tensor entries for Hom-Akivis structures. 1-based indices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ternary: Option<Vec<TernaryEntry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TernaryEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vec<String>,
}

/// A parsed file: the algebra view, the Akivis view when a ternary block is
/// present, and the multiplicativity verdict of the twist.
#[derive(Debug)]
pub struct Loaded {
    pub algebra: HomAlgebra,
    pub akivis: Option<HomAkivisAlgebra>,
    pub multiplicative: CheckReport,
}

fn fmt_err(path: &str, message: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_string(),
        message: message.into(),
    }
}

fn parse_value(path: &str, dim: usize, what: &str, value: &[String]) -> Result<Element> {
    if value.len() != dim {
        return Err(fmt_err(
            path,
            format!(
                "{what}: coordinate vector has length {}, expected {dim}",
                value.len()
            ),
        ));
    }
    let coords = value
        .iter()
        .map(|s| s.parse::<Scalar>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Element::new(coords))
}

/// Interpret a parsed [`AlgebraFile`], validating shapes and index ranges.
pub fn interpret(file: &AlgebraFile, path: &str, strict: bool) -> Result<Loaded> {
    if file.format_version != FORMAT_VERSION {
        return Err(fmt_err(
            path,
            format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                file.format_version
            ),
        ));
    }
    let dim = file.dim;
    if dim == 0 {
        return Err(fmt_err(path, "dim must be positive"));
    }
    if let Some(basis) = &file.basis {
        if basis.len() != dim {
            return Err(fmt_err(
                path,
                format!("basis lists {} names, expected {dim}", basis.len()),
            ));
        }
    }

    let mut structure = zero_structure(dim);
    let mut seen = std::collections::BTreeSet::new();
    for entry in &file.products {
        if entry.i == 0 || entry.i > dim || entry.j == 0 || entry.j > dim {
            return Err(fmt_err(
                path,
                format!(
                    "product entry ({},{}) out of range 1..={dim}",
                    entry.i, entry.j
                ),
            ));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(fmt_err(
                path,
                format!("duplicate product entry ({},{})", entry.i, entry.j),
            ));
        }
        structure[entry.i - 1][entry.j - 1] = parse_value(
            path,
            dim,
            &format!("product ({},{})", entry.i, entry.j),
            &entry.value,
        )?;
    }

    if file.twist.len() != dim || file.twist.iter().any(|r| r.len() != dim) {
        return Err(fmt_err(path, format!("twist must be a {dim}x{dim} matrix")));
    }
    let rows = file
        .twist
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| s.parse::<Scalar>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let twist = Matrix::from_rows(rows)?;

    let algebra = HomAlgebra::new_unchecked(file.name.clone(), structure.clone(), twist.clone())?;
    let multiplicative = algebra.check_multiplicative();
    if strict {
        if let Some(ix) = multiplicative.basis_witness() {
            return Err(Error::NotMultiplicative { i: ix[0], j: ix[1] });
        }
    }

    let akivis = match &file.ternary {
        None => None,
        Some(entries) => {
            let mut ternary = vec![vec![vec![Element::zero(dim); dim]; dim]; dim];
            let mut seen3 = std::collections::BTreeSet::new();
            for e in entries {
                for ix in [e.i, e.j, e.k] {
                    if ix == 0 || ix > dim {
                        return Err(fmt_err(
                            path,
                            format!(
                                "ternary entry ({},{},{}) out of range 1..={dim}",
                                e.i, e.j, e.k
                            ),
                        ));
                    }
                }
                if !seen3.insert((e.i, e.j, e.k)) {
                    return Err(fmt_err(
                        path,
                        format!("duplicate ternary entry ({},{},{})", e.i, e.j, e.k),
                    ));
                }
                ternary[e.i - 1][e.j - 1][e.k - 1] = parse_value(
                    path,
                    dim,
                    &format!("ternary ({},{},{})", e.i, e.j, e.k),
                    &e.value,
                )?;
            }
            Some(HomAkivisAlgebra::new(
                file.name.clone(),
                structure,
                ternary,
                twist,
            )?)
        }
    };

    Ok(Loaded {
        algebra,
        akivis,
        multiplicative,
    })
}

pub fn load_str(text: &str, path: &str, strict: bool) -> Result<Loaded> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Json {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    interpret(&file, path, strict)
}

pub fn load_path(path: &Path, strict: bool) -> Result<Loaded> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: display.clone(),
        source,
    })?;
    load_str(&text, &display, strict)
}

fn element_strings(e: &Element) -> Vec<String> {
    e.coords().iter().map(|c| c.to_string()).collect()
}

/// Canonical file view of an algebra: sorted nonzero products only.
pub fn algebra_to_file(a: &HomAlgebra) -> AlgebraFile {
    let dim = a.dim();
    let mut products = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let p = a.basis_product(i, j);
            if !p.is_zero() {
                products.push(ProductEntry {
                    i: i + 1,
                    j: j + 1,
                    value: element_strings(p),
                });
            }
        }
    }
    AlgebraFile {
        format_version: FORMAT_VERSION,
        name: a.name().map(|s| s.to_string()),
        dim,
        basis: None,
        products,
        twist: a
            .twist()
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect(),
        ternary: None,
    }
}

/// Canonical file view of a Hom-Akivis structure: bracket as products plus
/// the sorted nonzero ternary entries.
pub fn akivis_to_file(k: &HomAkivisAlgebra) -> AlgebraFile {
    let dim = k.dim();
    let mut products = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let p = k.basis_bracket(i, j);
            if !p.is_zero() {
                products.push(ProductEntry {
                    i: i + 1,
                    j: j + 1,
                    value: element_strings(p),
                });
            }
        }
    }
    let mut ternary = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for m in 0..dim {
                let t = k.ternary_entry(i, j, m);
                if !t.is_zero() {
                    ternary.push(TernaryEntry {
                        i: i + 1,
                        j: j + 1,
                        k: m + 1,
                        value: element_strings(t),
                    });
                }
            }
        }
    }
    AlgebraFile {
        format_version: FORMAT_VERSION,
        name: k.name().map(|s| s.to_string()),
        dim,
        basis: None,
        products,
        twist: k
            .twist()
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect(),
        ternary: Some(ternary),
    }
}

/// Pretty-printed JSON with a trailing newline; byte-stable for a given
/// file value.
pub fn to_canonical_json(file: &AlgebraFile) -> String {
    let mut out = serde_json::to_string_pretty(file).expect("file values always serialize");
    out.push('\n');
    out
}

/// A plain-text square matrix: one row per line, whitespace-separated
/// rational entries, blank lines and `#` comments ignored.
pub fn parse_matrix_text(text: &str, path: &str) -> Result<Matrix> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        rows.push(
            line.split_whitespace()
                .map(|t| t.parse())
                .collect::<Result<Vec<Scalar>>>()?,
        );
    }
    if rows.is_empty() {
        return Err(fmt_err(path, "matrix file contains no rows"));
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(fmt_err(path, format!("matrix must be square ({n} rows)")));
    }
    Matrix::from_rows(rows)
}
