//! Tabular output: CSV with a `#`-prefixed header echoing the full run
//! configuration, or the same payload as JSON under {config, columns, rows}.
//!
//! Numbers are written through Rust's shortest round-trip float formatting,
//! so re-parsing a dump recovers every value bit-identically.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};

use crate::args::Format;

pub struct Table {
    config: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(command: &str, config: Vec<(String, String)>, columns: Vec<String>) -> Self {
        let mut full = vec![("command".to_string(), command.to_string())];
        full.extend(config);
        Table {
            config: full,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        for (key, value) in &self.config {
            writeln!(w, "# {key} = {value}")?;
        }
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            writeln!(w, "{}", fields.join(","))?;
        }
        Ok(())
    }

    pub fn write_json(&self, w: &mut impl Write) -> Result<()> {
        let config: serde_json::Map<String, serde_json::Value> = self
            .config
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let payload = serde_json::json!({
            "config": config,
            "columns": self.columns,
            "rows": self.rows,
        });
        serde_json::to_writer_pretty(&mut *w, &payload)?;
        writeln!(w)?;
        Ok(())
    }

    /// Writes to `path` when given, stdout otherwise.
    pub fn write(&self, path: Option<&Path>, format: Format) -> Result<()> {
        let mut sink = open_sink(path)?;
        match format {
            Format::Csv => self.write_csv(&mut sink)?,
            Format::Json => self.write_json(&mut sink)?,
        }
        sink.flush()?;
        Ok(())
    }
}

pub fn open_sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            Ok(Box::new(io::BufWriter::new(f)))
        }
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
    }
}
