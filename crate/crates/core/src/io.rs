//! JSON interchange: polytopes, lattices and translate multisets with `"p/q"` rationals.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Result, TilingError};
use crate::geometry::{format_rational, parse_rational, Point, Polytope, Vector};
use crate::multiplicity::{Lattice, TranslateSet};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dim: usize,
    vertices: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TranslateEntry {
    v: Vec<String>,
    m: u64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum TranslationFile {
    Lattice { lattice: Vec<Vec<String>> },
    Translates { translates: Vec<TranslateEntry> },
}

/// Either a lattice or an explicit finite multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translations {
    Lattice(Lattice),
    Translates(TranslateSet),
}

fn malformed(e: impl std::fmt::Display) -> TilingError {
    TilingError::Parse(e.to_string())
}

fn parse_coords(raw: &[String], dim: usize) -> Result<Vec<crate::geometry::Rational>> {
    if raw.len() != dim {
        return Err(TilingError::DimensionMismatch {
            expected: dim,
            found: raw.len(),
        });
    }
    raw.iter().map(|s| parse_rational(s)).collect()
}

pub fn coords_json(coords: &[crate::geometry::Rational]) -> Value {
    Value::Array(coords.iter().map(|c| Value::String(format_rational(c))).collect())
}

pub fn point_json(p: &Point) -> Value {
    coords_json(p.coords())
}

pub fn vector_json(v: &Vector) -> Value {
    coords_json(v.coords())
}

pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let file: PolytopeFile = serde_json::from_str(text).map_err(malformed)?;
    if !(2..=3).contains(&file.dim) {
        return Err(TilingError::UnsupportedDimension(file.dim));
    }
    let points = file
        .vertices
        .iter()
        .map(|v| parse_coords(v, file.dim).map(Point::new))
        .collect::<Result<Vec<_>>>()?;
    Polytope::from_points(&points)
}

/// Canonical form: extreme points only, lexicographic order.
pub fn polytope_json(p: &Polytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(point_json).collect::<Vec<_>>(),
    })
}

pub fn parse_translations(text: &str) -> Result<Translations> {
    let file: TranslationFile = serde_json::from_str(text).map_err(malformed)?;
    match file {
        TranslationFile::Lattice { lattice } => {
            let dim = lattice.len();
            let basis = lattice
                .iter()
                .map(|row| parse_coords(row, dim).map(Vector::new))
                .collect::<Result<Vec<_>>>()?;
            Ok(Translations::Lattice(Lattice::new(basis)?))
        }
        TranslationFile::Translates { translates } => {
            let dim = translates
                .first()
                .map(|e| e.v.len())
                .ok_or_else(|| TilingError::Parse("empty translate list".into()))?;
            let entries = translates
                .iter()
                .map(|e| {
                    if e.m == 0 {
                        return Err(TilingError::Parse("multiplicity must be positive".into()));
                    }
                    Ok((Vector::new(parse_coords(&e.v, dim)?), e.m))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Translations::Translates(TranslateSet::new(entries)))
        }
    }
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    match parse_translations(text)? {
        Translations::Lattice(l) => Ok(l),
        Translations::Translates(_) => Err(TilingError::Parse("expected a \"lattice\" object".into())),
    }
}

pub fn parse_translates(text: &str) -> Result<TranslateSet> {
    match parse_translations(text)? {
        Translations::Translates(x) => Ok(x),
        Translations::Lattice(_) => Err(TilingError::Parse("expected a \"translates\" object".into())),
    }
}

/// Basis vectors as rows, in the order supplied.
pub fn lattice_json(l: &Lattice) -> Value {
    json!({ "lattice": l.basis().iter().map(vector_json).collect::<Vec<_>>() })
}

pub fn translates_json(x: &TranslateSet) -> Value {
    json!({
        "translates": x
            .entries()
            .iter()
            .map(|(v, m)| json!({ "v": vector_json(v), "m": m }))
            .collect::<Vec<_>>(),
    })
}
