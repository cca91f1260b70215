use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use harmonic_cert::Verdict;
use serde::Serialize;

use crate::args::{Format, Output};
use crate::Failure;

/// JSON envelope shared by the non-certify commands.
#[derive(Serialize)]
struct Document<'a, T> {
    meta: Meta<'a>,
    rows: &'a [T],
    aggregate: Verdict,
}

#[derive(Serialize)]
struct Meta<'a> {
    command: &'a str,
    parameters: &'a BTreeMap<String, String>,
}

pub fn render_rows<T: Serialize>(
    format: Format,
    command: &str,
    parameters: &BTreeMap<String, String>,
    rows: &[T],
    aggregate: Verdict,
) -> Result<String, Failure> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row).map_err(|e| Failure::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
        }
        Format::Json => {
            let doc = Document { meta: Meta { command, parameters }, rows, aggregate };
            let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

pub fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::Io(format!("stdout: {e}")))
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}
