//! Deterministic numeric tables and their CSV serialization.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

/// A rectangular table of f64 values with unit-suffixed column names.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Index of a named column.
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// All values of a named column.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// Render as CSV: header row plus one line per row, 17 significant
    /// digits per value so re-parsing is bit exact and re-running a
    /// scenario reproduces the file byte for byte.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(',');
                }
                out.push_str(&format!("{v:.16e}"));
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

/// Write a table to disk as CSV.
pub fn emit_csv(table: &Table, path: &Path) -> Result<()> {
    let open = |p: &Path| -> std::io::Result<()> {
        let mut f = std::fs::File::create(p)?;
        f.write_all(table.to_csv().as_bytes())?;
        f.flush()
    };
    open(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table_renders_header_only() {
        let t = Table::new(&["theta_deg", "b_nt"]);
        assert_eq!(t.to_csv(), "theta_deg,b_nt\n");
    }

    #[test]
    fn rows_match_header_width() {
        let mut t = Table::new(&["a", "b", "c"]);
        for i in 0..1000 {
            t.push_row(vec![i as f64, 2.0 * i as f64, -0.5 * i as f64]);
        }
        let csv = t.to_csv();
        for line in csv.lines() {
            assert_eq!(line.split(',').count(), 3);
        }
    }

    #[test]
    fn float_formatting_round_trips() {
        let mut t = Table::new(&["v"]);
        for v in [8.456680000003e-8, std::f64::consts::PI, -1.0 / 3.0, 1e308, 5e-324] {
            t.push_row(vec![v]);
        }
        let csv = t.to_csv();
        let parsed: Vec<f64> = csv.lines().skip(1).map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, t.rows().iter().map(|r| r[0]).collect::<Vec<_>>());
    }

    #[test]
    #[should_panic]
    fn mismatched_row_width_panics() {
        let mut t = Table::new(&["a", "b"]);
        t.push_row(vec![1.0]);
    }
}
