//! CSV, JSON and gnuplot renderings of a [`SweepResult`].
//!
//! CSV: header `series,abscissa,epsilon_eff,mu_eff,handedness`, one record
//! per line, numbers with 17 significant digits, LF line endings, UTF-8.
//! JSON: one object `{spec, records, metadata}` using the same field names.
//! Both formats round-trip every `f64` exactly.

use std::fmt::Write as _;

use crlh_core::{Axis, SweepResult};
use serde_json::Value;

/// Header row of the CSV format.
pub const CSV_HEADER: [&str; 5] = ["series", "abscissa", "epsilon_eff", "mu_eff", "handedness"];

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Comma-separated values.
    Csv,
    /// A single JSON object.
    Json,
    /// Gnuplot script plotting an adjacent CSV file.
    Gnuplot,
}

impl Format {
    /// Guesses the format from a file extension, defaulting to CSV.
    pub fn from_path(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("gp" | "gnuplot" | "plt") => Format::Gnuplot,
            _ => Format::Csv,
        }
    }
}

/// `x` in scientific notation with 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders the CSV table.
pub fn to_csv(result: &SweepResult) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::with_capacity(96 * (result.records.len() + 1)));
    // writing into a Vec cannot fail
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in &result.records {
        w.write_record([
            r.series.as_str(),
            &format_f64(r.abscissa),
            &format_f64(r.epsilon_eff),
            &format_f64(r.mu_eff),
            r.handedness.as_str(),
        ])
        .expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

/// Renders the JSON object. `config`, when given, is stored as
/// `metadata.config`.
pub fn to_json(result: &SweepResult, config: Option<&Value>) -> Vec<u8> {
    let mut value = serde_json::to_value(result).expect("sweep result is always representable");
    if let (Some(cfg), Some(meta)) = (config, value.get_mut("metadata").and_then(Value::as_object_mut)) {
        meta.insert("config".into(), cfg.clone());
    }
    let mut bytes = serde_json::to_vec_pretty(&value).expect("serializing a Value cannot fail");
    bytes.push(b'\n');
    bytes
}

/// Gnuplot script that plots `csv_name`, one curve per series, with `ε` and
/// `μ` in side-by-side panels.
pub fn to_gnuplot(result: &SweepResult, csv_name: &str) -> String {
    let spec = &result.spec;
    let (xlabel, logscale) = match spec.axis {
        Axis::Omega => ("omega (rad/s)", matches!(spec.grid.spacing, crlh_core::Spacing::Log)),
        Axis::Temperature => ("T (K)", matches!(spec.grid.spacing, crlh_core::Spacing::Log)),
    };
    let labels = spec.labels();
    let mut s = String::new();
    let _ = writeln!(s, "# crlh {} ({} convention)", result.metadata.tool_version, spec.model.convention.as_str());
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set key autotitle columnhead");
    let _ = writeln!(s, "set xlabel '{xlabel}'");
    if logscale {
        let _ = writeln!(s, "set logscale x");
    }
    let _ = writeln!(s, "set multiplot layout 1,2");
    for (column, title) in [(3, "epsilon_eff (F)"), (4, "mu_eff (H)")] {
        let _ = writeln!(s, "set ylabel '{title}'");
        let curves: Vec<String> = labels
            .iter()
            .map(|l| format!("'{csv_name}' using 2:(strcol(1) eq '{l}' ? ${column} : 1/0) with lines title '{l}'"))
            .collect();
        let _ = writeln!(s, "plot {}", curves.join(", \\\n     "));
    }
    let _ = writeln!(s, "unset multiplot");
    s
}
