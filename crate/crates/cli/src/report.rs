use std::io::Write;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

/// A table written as CSV; cells are already rendered (fractions as `p/q`).
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config_echo: serde_json::Value,
    pub records: Vec<Record>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &str, config_echo: serde_json::Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config_echo,
            records: Vec::new(),
            table: None,
        }
    }

    pub fn info(&mut self, name: impl Into<String>, actual: impl ToString) {
        self.records.push(Record {
            name: name.into(),
            status: Status::Info,
            expected: String::new(),
            actual: actual.to_string(),
        });
    }

    /// A verification record; passes iff `expected == actual`.
    pub fn check(&mut self, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.records.push(Record {
            name: name.into(),
            status,
            expected,
            actual,
        });
    }

    pub fn has_failure(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn write_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> Result<(), String> {
        let table = self
            .table
            .as_ref()
            .ok_or_else(|| format!("`{}` has no tabular output; use --format json", self.command))?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&table.header).map_err(|e| e.to_string())?;
        for r in &table.rows {
            w.write_record(r).map_err(|e| e.to_string())?;
        }
        w.flush().map_err(|e| e.to_string())
    }
}
