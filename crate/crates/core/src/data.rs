//! Shipped data files: exponential-polynomial tables, closed-form constant
//! bounds and named partitions.
//!
//! Defaults are embedded at build time. They can be replaced by explicit
//! paths or by a directory named in `P1CERT_DATA_DIR` containing
//! `appendix_tables.json` and/or `partitions.json`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::numerics::rational::{parse_rational, Rational};
use crate::polybound::{PartitionError, PartitionPlan, PartitionRecord};

pub const TABLES_FILE: &str = "appendix_tables.json";
pub const PARTITIONS_FILE: &str = "partitions.json";
pub const DATA_DIR_ENV: &str = "P1CERT_DATA_DIR";
pub const SUPPORTED_VERSION: u32 = 1;

const EMBEDDED_TABLES: &str = include_str!("../data/appendix_tables.json");
const EMBEDDED_PARTITIONS: &str = include_str!("../data/partitions.json");

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON in {origin}: {source}")]
    Json { origin: String, source: serde_json::Error },
    #[error("unsupported data version {found} in {origin} (expected {SUPPORTED_VERSION})")]
    Version { origin: String, found: u32 },
    #[error("bad coefficient {value:?} in {origin}")]
    Coefficient { origin: String, value: String },
    #[error("no partition named {0:?}")]
    MissingPlan(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// One coefficient of `S^s_power x^(-j/2) e^(-m x)` in a named table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableEntry {
    pub table: String,
    pub j: i32,
    pub s_power: u32,
    pub m: i32,
    pub coeff: String,
}

/// One term `coeff |S|^s_power rho^(-r_power/2) [sqrt 2]` of a closed form.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClosedFormEntry {
    pub name: String,
    pub r_power: u32,
    pub s_power: u32,
    #[serde(default)]
    pub sqrt2: bool,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TablesFile {
    version: u32,
    #[serde(default)]
    description: String,
    tables: Vec<TableEntry>,
    closed_forms: Vec<ClosedFormEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct PartitionsFile {
    version: u32,
    #[serde(default)]
    description: String,
    plans: Vec<PartitionRecord>,
}

/// Parsed table and closed-form data with its content hash.
#[derive(Clone, Debug)]
pub struct AppendixData {
    pub origin: String,
    pub sha256: String,
    pub tables: Vec<TableEntry>,
    pub closed_forms: Vec<ClosedFormEntry>,
}

/// Parsed partition plans with their content hash.
#[derive(Clone, Debug)]
pub struct PartitionData {
    pub origin: String,
    pub sha256: String,
    pub plans: Vec<PartitionPlan>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn check_rational(origin: &str, s: &str) -> Result<Rational, DataError> {
    parse_rational(s).map_err(|_| DataError::Coefficient { origin: origin.to_string(), value: s.to_string() })
}

impl AppendixData {
    pub fn parse(text: &str, origin: &str) -> Result<Self, DataError> {
        let f: TablesFile =
            serde_json::from_str(text).map_err(|source| DataError::Json { origin: origin.to_string(), source })?;
        if f.version != SUPPORTED_VERSION {
            return Err(DataError::Version { origin: origin.to_string(), found: f.version });
        }
        for e in &f.tables {
            check_rational(origin, &e.coeff)?;
        }
        for e in &f.closed_forms {
            check_rational(origin, &e.coeff)?;
        }
        Ok(AppendixData {
            origin: origin.to_string(),
            sha256: sha256_hex(text.as_bytes()),
            tables: f.tables,
            closed_forms: f.closed_forms,
        })
    }

    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_TABLES, "embedded").expect("embedded tables are valid")
    }

    pub fn from_path(path: &Path) -> Result<Self, DataError> {
        let text = std::fs::read_to_string(path).map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Entries of one table (e.g. `"r"`), in file order.
    pub fn table(&self, name: &str) -> impl Iterator<Item = &TableEntry> {
        let name = name.to_string();
        self.tables.iter().filter(move |e| e.table == name)
    }

    pub fn closed_form(&self, name: &str) -> impl Iterator<Item = &ClosedFormEntry> {
        let name = name.to_string();
        self.closed_forms.iter().filter(move |e| e.name == name)
    }

    pub fn table_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for e in &self.tables {
            if !names.contains(&e.table) {
                names.push(e.table.clone());
            }
        }
        names
    }

    pub fn coeff(e: &TableEntry) -> Rational {
        parse_rational(&e.coeff).expect("validated on load")
    }

    pub fn closed_coeff(e: &ClosedFormEntry) -> Rational {
        parse_rational(&e.coeff).expect("validated on load")
    }
}

impl PartitionData {
    pub fn parse(text: &str, origin: &str) -> Result<Self, DataError> {
        let f: PartitionsFile =
            serde_json::from_str(text).map_err(|source| DataError::Json { origin: origin.to_string(), source })?;
        if f.version != SUPPORTED_VERSION {
            return Err(DataError::Version { origin: origin.to_string(), found: f.version });
        }
        let plans = f.plans.iter().map(PartitionPlan::try_from).collect::<Result<Vec<_>, _>>()?;
        Ok(PartitionData { origin: origin.to_string(), sha256: sha256_hex(text.as_bytes()), plans })
    }

    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_PARTITIONS, "embedded").expect("embedded partitions are valid")
    }

    pub fn from_path(path: &Path) -> Result<Self, DataError> {
        let text = std::fs::read_to_string(path).map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn plan(&self, name: &str) -> Result<&PartitionPlan, DataError> {
        self.plans.iter().find(|p| p.name() == name).ok_or_else(|| DataError::MissingPlan(name.to_string()))
    }
}

/// Both data files.
#[derive(Clone, Debug)]
pub struct DataSet {
    pub appendix: AppendixData,
    pub partitions: PartitionData,
}

impl Default for DataSet {
    fn default() -> Self {
        DataSet { appendix: AppendixData::embedded(), partitions: PartitionData::embedded() }
    }
}

impl DataSet {
    /// Explicit paths win over `P1CERT_DATA_DIR`, which wins over the
    /// embedded defaults.
    pub fn load(tables: Option<&Path>, partitions: Option<&Path>) -> Result<Self, DataError> {
        let dir = std::env::var_os(DATA_DIR_ENV).map(PathBuf::from);
        let pick = |explicit: Option<&Path>, file: &str| -> Option<PathBuf> {
            explicit.map(Path::to_path_buf).or_else(|| dir.as_ref().map(|d| d.join(file)).filter(|p| p.exists()))
        };
        let appendix = match pick(tables, TABLES_FILE) {
            Some(p) => AppendixData::from_path(&p)?,
            None => AppendixData::embedded(),
        };
        let partitions = match pick(partitions, PARTITIONS_FILE) {
            Some(p) => PartitionData::from_path(&p)?,
            None => PartitionData::embedded(),
        };
        Ok(DataSet { appendix, partitions })
    }

    pub fn embedded_tables_text() -> &'static str {
        EMBEDDED_TABLES
    }

    pub fn embedded_partitions_text() -> &'static str {
        EMBEDDED_PARTITIONS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_data_loads() {
        let d = DataSet::default();
        assert!(d.appendix.table("r").count() > 10);
        assert_eq!(d.appendix.sha256.len(), 64);
        assert!(d.partitions.plan("residual").is_ok());
        assert!(matches!(d.partitions.plan("nope"), Err(DataError::MissingPlan(_))));
    }

    #[test]
    fn version_checked() {
        let bad = r#"{"version": 9, "plans": []}"#;
        assert!(matches!(PartitionData::parse(bad, "t"), Err(DataError::Version { .. })));
    }

    #[test]
    fn bad_coefficient_rejected() {
        let bad = r#"{"version": 1, "tables": [{"table":"r","j":5,"s_power":0,"m":0,"coeff":"1/0"}], "closed_forms": []}"#;
        assert!(matches!(AppendixData::parse(bad, "t"), Err(DataError::Coefficient { .. })));
    }

    #[test]
    fn hash_is_content_based() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
