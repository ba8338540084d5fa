//! The on-disk arrangement document: strict JSON, exact round-trip.
//!
//! Schema: `label`, `surface` (`"P2"` or `"abelian"`), `ordinary`,
//! `components` (list of `{genus, self_intersection, count}`), `spectrum`
//! (map from decimal-string multiplicity to count), and an optional
//! `c_square_override`. Unknown fields are rejected. Malformed syntax or
//! schema violations are [`DocumentError::Parse`]; structurally valid data
//! that breaks an arrangement invariant is [`DocumentError::Validation`].

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};

use harbourne::arrangement::Warning;
use harbourne::{Arrangement, ComponentClass, Spectrum, Surface};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    /// Malformed document; maps to exit code 2.
    Parse(String),
    /// Well-formed document with invalid content; maps to exit code 1.
    Validation(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse(msg) => write!(f, "parse error: {msg}"),
            DocumentError::Validation(msg) => write!(f, "validation error: {msg}"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementDocument {
    label: String,
    surface: SurfaceDoc,
    ordinary: bool,
    components: Vec<ComponentDoc>,
    spectrum: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c_square_override: Option<i64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
enum SurfaceDoc {
    #[serde(rename = "P2")]
    P2,
    #[serde(rename = "abelian")]
    Abelian,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    genus: u32,
    self_intersection: i64,
    count: u64,
}

/// Parses and validates a document, returning the arrangement together
/// with any soft validation warnings.
pub fn parse(text: &str) -> Result<(Arrangement, Vec<Warning>), DocumentError> {
    let doc: ArrangementDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))?;

    let mut counts = Vec::with_capacity(doc.spectrum.len());
    for (key, &t) in &doc.spectrum {
        let k: u64 = key
            .parse()
            .map_err(|_| DocumentError::Parse(format!("spectrum key {key:?} is not an integer")))?;
        if k < 2 {
            return Err(DocumentError::Parse(format!(
                "spectrum multiplicity {k} is below 2"
            )));
        }
        counts.push((k, t));
    }
    let spectrum =
        Spectrum::from_counts(counts).map_err(|e| DocumentError::Parse(e.to_string()))?;

    let mut arr = Arrangement::new(
        doc.label,
        match doc.surface {
            SurfaceDoc::P2 => Surface::ProjectivePlane,
            SurfaceDoc::Abelian => Surface::AbelianSurface,
        },
        doc.ordinary,
        doc.components
            .iter()
            .map(|c| ComponentClass::new(c.genus, c.self_intersection, c.count))
            .collect(),
        spectrum,
    );
    arr.c_square_override = doc.c_square_override.map(BigInt::from);

    let warnings = arr
        .validate()
        .map_err(|e| DocumentError::Validation(e.to_string()))?;
    Ok((arr, warnings))
}

/// Renders an arrangement as a document. Inverse of [`parse`] for every
/// valid arrangement whose override fits the document integer range.
pub fn emit(arr: &Arrangement) -> Result<String, DocumentError> {
    let c_square_override = match &arr.c_square_override {
        None => None,
        Some(c2) => Some(i64::try_from(c2.clone()).map_err(|_| {
            DocumentError::Validation("c_square_override exceeds the document integer range".into())
        })?),
    };
    let doc = ArrangementDocument {
        label: arr.label.clone(),
        surface: match arr.surface {
            Surface::ProjectivePlane => SurfaceDoc::P2,
            Surface::AbelianSurface => SurfaceDoc::Abelian,
        },
        ordinary: arr.ordinary,
        components: arr
            .components
            .iter()
            .map(|c| ComponentDoc {
                genus: c.genus,
                self_intersection: c.self_intersection,
                count: c.count,
            })
            .collect(),
        spectrum: arr
            .spectrum
            .iter()
            .map(|(k, t)| (k.to_string(), t))
            .collect(),
        c_square_override,
    };
    let mut text = serde_json::to_string_pretty(&doc)
        .map_err(|e| DocumentError::Validation(e.to_string()))?;
    text.push('\n');
    Ok(text)
}
