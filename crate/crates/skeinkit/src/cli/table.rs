//! JSONL knot tables.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::diagram::{Crossing, Diagram, Sign};

use super::CliError;

/// One knot-table row: a named PD code with optional expected values used
/// by verification suites.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct KnotTableEntry {
    pub name: String,
    pub pd: Vec<[usize; 4]>,
    #[serde(default)]
    pub kinds: Option<Vec<String>>,
    #[serde(default)]
    pub unknots: usize,
    #[serde(default)]
    pub expected: BTreeMap<String, serde_json::Value>,
}

impl KnotTableEntry {
    pub fn diagram(&self) -> Result<Diagram, CliError> {
        let mut crossings = Vec::with_capacity(self.pd.len());
        for (i, slots) in self.pd.iter().enumerate() {
            let kind = self
                .kinds
                .as_ref()
                .and_then(|k| k.get(i))
                .map(String::as_str)
                .unwrap_or("X");
            let crossing = match kind {
                "X" => Crossing::classical(*slots),
                "X+" => Crossing::classical_signed(*slots, Sign::Positive),
                "X-" => Crossing::classical_signed(*slots, Sign::Negative),
                "P" => Crossing::virtual_crossing(*slots),
                other => {
                    return Err(CliError::Input(format!(
                        "{}: unknown crossing kind `{other}`",
                        self.name
                    )))
                }
            };
            crossings.push(crossing);
        }
        Diagram::new(crossings, self.unknots)
            .and_then(|d| d.oriented())
            .map_err(|e| CliError::Input(format!("{}: {e}", self.name)))
    }
}

pub fn parse_table(text: &str) -> Result<Vec<KnotTableEntry>, CliError> {
    let mut out: Vec<KnotTableEntry> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry: KnotTableEntry = serde_json::from_str(line).map_err(|e| {
            CliError::Input(format!("table line {}: {e}", lineno + 1))
        })?;
        if out.iter().any(|x| x.name == entry.name) {
            return Err(CliError::Input(format!(
                "table line {}: duplicate name `{}`",
                lineno + 1,
                entry.name
            )));
        }
        out.push(entry);
    }
    Ok(out)
}

pub fn load_table(path: &Path) -> Result<Vec<KnotTableEntry>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}

/// The table bundled with the crate.
pub const BUILTIN_TABLE: &str = include_str!("../../tables/knots.jsonl");

pub fn builtin_table() -> Vec<KnotTableEntry> {
    parse_table(BUILTIN_TABLE).expect("bundled table parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_validates() {
        let entries = builtin_table();
        assert!(entries.len() >= 6);
        for e in &entries {
            let d = e.diagram().unwrap();
            assert!(d.is_oriented() || d.crossings().is_empty(), "{}", e.name);
        }
        for name in ["3_1", "4_1", "5_1", "7_4", "10_132", "hopf"] {
            assert!(entries.iter().any(|e| e.name == name), "missing {name}");
        }
    }

    #[test]
    fn empty_table_is_empty() {
        assert!(parse_table("").unwrap().is_empty());
    }

    #[test]
    fn duplicate_names_rejected() {
        let line = r#"{"name":"k","pd":[[1,2,1,2]],"kinds":["P"]}"#;
        let text = format!("{line}\n{line}");
        assert!(matches!(parse_table(&text), Err(CliError::Input(_))));
    }
}
