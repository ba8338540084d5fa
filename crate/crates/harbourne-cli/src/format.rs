//! Output rendering: human tables, CSV, and JSON from one row model.
//!
//! Every command reduces to either a record (one arrangement, fixed field
//! order) or a table (fixed column order, one row per step). Exact values
//! are rendered as `p/q` strings in all formats; 4-place decimal
//! approximations appear next to exact values in human mode and as their
//! own columns where a command's schema includes them. Output is
//! deterministic byte-for-byte.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

/// One field of an analyze record.
pub struct Field {
    pub key: &'static str,
    pub exact: String,
    /// Shown after the exact value in human mode only.
    pub decimal: Option<String>,
}

impl Field {
    pub fn plain(key: &'static str, exact: impl Into<String>) -> Self {
        Field {
            key,
            exact: exact.into(),
            decimal: None,
        }
    }

    pub fn with_decimal(key: &'static str, exact: impl Into<String>, decimal: String) -> Self {
        Field {
            key,
            exact: exact.into(),
            decimal: Some(decimal),
        }
    }
}

/// Renders a single record in the requested format.
pub fn record(format: Format, fields: &[Field]) -> String {
    match format {
        Format::Human => {
            let mut out = String::new();
            for f in fields {
                out.push_str(f.key);
                out.push_str(": ");
                out.push_str(&f.exact);
                if let Some(dec) = &f.decimal {
                    out.push_str(&format!(" ({dec})"));
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|f| f.key).collect();
            let row: Vec<String> = fields.iter().map(|f| f.exact.clone()).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Json => {
            let mut map = Map::new();
            for f in fields {
                map.insert(f.key.to_string(), json!(f.exact));
            }
            let mut text = serde_json::to_string_pretty(&Value::Object(map))
                .expect("string map serializes");
            text.push('\n');
            text
        }
    }
}

/// Renders a table in the requested format. Human mode right-aligns every
/// column to its widest cell.
pub fn table(format: Format, headers: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Human => {
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut out = String::new();
            let render = |cells: Vec<&str>, out: &mut String| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
            };
            render(headers.to_vec(), &mut out);
            for row in rows {
                render(row.iter().map(String::as_str).collect(), &mut out);
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&headers.join(","));
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut map = Map::new();
                    for (h, cell) in headers.iter().zip(row) {
                        map.insert(h.to_string(), json!(cell));
                    }
                    Value::Object(map)
                })
                .collect();
            let mut text =
                serde_json::to_string_pretty(&Value::Array(array)).expect("string map serializes");
            text.push('\n');
            text
        }
    }
}
