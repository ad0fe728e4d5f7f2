//! Reference multiplicity table shipped with the crate.
//!
//! The transcription is validated on load: every dimension must match the
//! dimension formula, statistics must follow `q4` parity, each spin column
//! must reproduce the reference sector counts, and the weighted total must be
//! `2^24`. A typo in the data file trips at least one of these.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pipeline::{
    MultiplicityTable, Statistics, REFERENCE_SECTOR_COUNTS, SPIN_COUNT, TOTAL_STATES,
};
use crate::weyl_b4::DynkinLabel;

/// Environment variable overriding the directory the golden table is read from.
pub const GOLDEN_DIR_ENV: &str = "REPCHAR_GOLDEN_DIR";
pub const TABLE_FILE: &str = "table1.json";
pub const FORMAT_VERSION: u32 = 1;

const EMBEDDED_TABLE: &str = include_str!("../golden/table1.json");

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GoldenRow {
    pub dynkin: DynkinLabel,
    pub dimension: u64,
    pub statistics: Statistics,
    pub multiplicities: [u64; SPIN_COUNT],
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GoldenTable {
    pub version: u32,
    #[serde(default)]
    pub source: String,
    pub rows: Vec<GoldenRow>,
}

impl GoldenTable {
    /// Parses and validates a golden table document.
    pub fn parse(text: &str) -> Result<Self> {
        let table: GoldenTable = serde_json::from_str(text)?;
        table.validate()?;
        Ok(table)
    }

    /// The table from `$REPCHAR_GOLDEN_DIR/table1.json` if the variable is
    /// set, otherwise the copy embedded at build time.
    pub fn load() -> Result<Self> {
        match std::env::var_os(GOLDEN_DIR_ENV) {
            Some(dir) => Self::load_from_dir(Path::new(&dir)),
            None => Self::parse(EMBEDDED_TABLE),
        }
    }

    pub fn load_from_dir(dir: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(dir.join(TABLE_FILE))?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<()> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Golden(format!(
                "unsupported version {}",
                self.version
            )));
        }
        let mut seen = BTreeMap::new();
        let mut columns = [[0u64; SPIN_COUNT]; 2];
        let mut total = 0u64;
        for row in &self.rows {
            let label = row.dynkin;
            if seen.insert(label, ()).is_some() {
                return Err(Error::Golden(format!("duplicate row {label}")));
            }
            if row.dimension != label.dimension() {
                return Err(Error::Golden(format!(
                    "{label}: dimension {} but the dimension formula gives {}",
                    row.dimension,
                    label.dimension()
                )));
            }
            if row.statistics != Statistics::of_label(&label) {
                return Err(Error::Golden(format!(
                    "{label}: statistics disagree with q4 parity"
                )));
            }
            let col = &mut columns[(row.statistics == Statistics::Fermion) as usize];
            for (n, m) in row.multiplicities.iter().enumerate() {
                col[n] += row.dimension * m;
                total += row.dimension * m * (2 * n as u64 + 1);
            }
        }
        for (n, &expected) in REFERENCE_SECTOR_COUNTS.iter().enumerate() {
            for (col, name) in columns.iter().zip(["boson", "fermion"]) {
                if col[n] != expected {
                    return Err(Error::Golden(format!(
                        "spin {n} {name} states sum to {} (expected {expected})",
                        col[n]
                    )));
                }
            }
        }
        if total != TOTAL_STATES {
            return Err(Error::Golden(format!(
                "weighted total {total} (expected {TOTAL_STATES})"
            )));
        }
        Ok(())
    }

    /// Differences between `table` and this golden table, independent of
    /// row order. Empty when they agree exactly.
    pub fn compare(&self, table: &MultiplicityTable) -> Vec<String> {
        let mut diffs = Vec::new();
        for g in &self.rows {
            match table.get(&g.dynkin) {
                None => diffs.push(format!("{} missing from computed table", g.dynkin)),
                Some(r) => {
                    if r.multiplicities != g.multiplicities {
                        diffs.push(format!(
                            "{}: computed {:?}, golden {:?}",
                            g.dynkin, r.multiplicities, g.multiplicities
                        ));
                    }
                    if r.statistics != g.statistics {
                        diffs.push(format!(
                            "{}: statistics {:?} vs {:?}",
                            g.dynkin, r.statistics, g.statistics
                        ));
                    }
                    if r.dimension != g.dimension {
                        diffs.push(format!(
                            "{}: dimension {} vs {}",
                            g.dynkin, r.dimension, g.dimension
                        ));
                    }
                }
            }
        }
        for (label, _) in table.ordered_rows() {
            if !self.rows.iter().any(|g| g.dynkin == label) {
                diffs.push(format!("{label} computed but not in golden table"));
            }
        }
        diffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_table_is_consistent() {
        let t = GoldenTable::parse(EMBEDDED_TABLE).unwrap();
        assert_eq!(t.rows.len(), 72);
        let fermionic = t
            .rows
            .iter()
            .filter(|r| r.statistics == Statistics::Fermion)
            .count();
        assert_eq!(fermionic, 27);
    }

    #[test]
    fn transcription_typos_are_caught() {
        let good = GoldenTable::parse(EMBEDDED_TABLE).unwrap();

        let mut bad = good.clone();
        bad.rows[3].multiplicities[2] += 1;
        assert!(bad.validate().is_err());

        let mut bad = good.clone();
        bad.rows[5].dimension += 1;
        assert!(bad.validate().is_err());

        let mut bad = good.clone();
        bad.rows[0].statistics = Statistics::Fermion;
        assert!(bad.validate().is_err());

        let mut bad = good.clone();
        bad.rows.pop();
        assert!(bad.validate().is_err());

        let mut bad = good;
        bad.version = 2;
        assert!(bad.validate().is_err());
    }
}
