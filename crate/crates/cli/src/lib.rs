//! Command implementations and output formats for the `wallcross` binary.
//!
//! Every command produces a [`Report`]: a JSON document, a flat table for CSV
//! and pretty output, and a flag recording whether a verification failed.

pub mod commands;
pub mod formats;

use std::io::Write;

use anyhow::Result;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// One-line summary shown in pretty output.
    pub summary: String,
    pub failed: bool,
}

impl Report {
    pub fn new(json: Value, header: &[&str]) -> Self {
        Report {
            json,
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            summary: String::new(),
            failed: false,
        }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows
            .push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
            Format::Pretty => self.render_pretty(out)?,
        }
        Ok(())
    }

    fn render_pretty(&self, out: &mut dyn Write) -> Result<()> {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(&self.header))?;
        for r in &self.rows {
            writeln!(out, "{}", line(r))?;
        }
        if !self.summary.is_empty() {
            writeln!(out, "{}", self.summary)?;
        }
        Ok(())
    }
}

/// Joins numbers with commas, e.g. for a diagram cell in a CSV row.
pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new(json!({ "x": 1 }), &["n", "delta"]);
        r.row(["1", "4,2,1"]);
        r.row(["10", ""]);
        r.summary = "2 rows".into();
        r
    }

    #[test]
    fn csv_quotes_and_uses_lf() {
        let mut buf = Vec::new();
        sample().render(Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,delta\n1,\"4,2,1\"\n10,\n"
        );
    }

    #[test]
    fn pretty_aligns_columns() {
        let mut buf = Vec::new();
        sample().render(Format::Pretty, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, " n  delta\n 1  4,2,1\n10       \n2 rows\n");
    }

    #[test]
    fn json_ends_with_newline() {
        let mut buf = Vec::new();
        sample().render(Format::Json, &mut buf).unwrap();
        assert!(buf.ends_with(b"}\n"));
    }
}
