use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// A command result: the JSON document plus a flat view for csv and table.
pub struct Rendered {
    pub json: serde_json::Value,
    /// Headline facts shown above the table.
    pub summary: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// False when a verification found a mismatch.
    pub ok: bool,
    /// Items reported on stderr when `ok` is false.
    pub mismatches: Vec<String>,
}

impl Rendered {
    pub fn new<T: Serialize>(doc: &T) -> Result<Rendered> {
        Ok(Rendered {
            json: serde_json::to_value(doc)?,
            summary: vec![],
            header: vec![],
            rows: vec![],
            ok: true,
            mismatches: vec![],
        })
    }

    pub fn summary(mut self, key: &str, value: impl ToString) -> Self {
        self.summary.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|h| h.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn verdict(mut self, ok: bool, mismatches: Vec<String>) -> Self {
        self.ok = ok;
        self.mismatches = mismatches;
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                if self.header.is_empty() {
                    w.write_record(["key", "value"])?;
                    for (k, v) in &self.summary {
                        w.write_record([k, v])?;
                    }
                } else {
                    w.write_record(&self.header)?;
                    for r in &self.rows {
                        w.write_record(r)?;
                    }
                }
                w.flush()?;
            }
            Format::Table => {
                let width = self.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.summary {
                    writeln!(out, "{k:<width$}  {v}")?;
                }
                if !self.header.is_empty() {
                    if !self.summary.is_empty() {
                        writeln!(out)?;
                    }
                    write_columns(out, &self.header, &self.rows)?;
                }
            }
        }
        Ok(())
    }
}

fn write_columns(out: &mut impl Write, header: &[String], rows: &[Vec<String>]) -> Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header))?;
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(out, "{}", line(&rule))?;
    for r in rows {
        writeln!(out, "{}", line(r))?;
    }
    Ok(())
}
