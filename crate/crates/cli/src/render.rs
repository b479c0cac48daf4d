//! Number formatting and the three output formats.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// C's `%.17g`: 17 significant digits, trailing zeros dropped, switching to
/// exponent notation outside `1e-4 ..= 1e17`.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-4..17).contains(&exponent) {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exponent.abs())
    } else {
        let precision = (16 - exponent) as usize;
        trim_zeros(&format!("{x:.precision$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Human-facing number: ½ for one half, otherwise rounded to 12 significant
/// digits so that rounding noise from random bases does not show.
pub fn format_text(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.5 {
        "½".to_string()
    } else {
        rounded.to_string()
    }
}

/// Machine-facing number: shortest string that reads back to the same f64.
pub fn format_machine(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        x.to_string()
    }
}

/// Stable top-level shape of every `--format json` document.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub formula: Option<String>,
    pub semantics: Option<String>,
    pub results: Value,
}

#[derive(Debug, Clone, Default)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Everything a subcommand produced, ready for any output format.
#[derive(Debug, Clone)]
pub struct Report {
    pub record: OutputRecord,
    pub text: String,
    pub csv: CsvTable,
    pub exit_code: u8,
}

impl Report {
    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Text => {
                out.write_all(self.text.as_bytes())?;
                if !self.text.ends_with('\n') {
                    out.write_all(b"\n")?;
                }
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.record)?;
                out.write_all(b"\n")?;
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(&mut *out);
                writer.write_record(&self.csv.header)?;
                for row in &self.csv.rows {
                    writer.write_record(row)?;
                }
                writer.flush()?;
            }
        }
        Ok(())
    }
}
