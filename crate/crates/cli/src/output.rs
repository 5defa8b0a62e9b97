//! CSV and JSON serialization of sampled columns and check reports.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;

/// Named columns of equal length.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<Column>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
}

impl Table {
    pub fn push(&mut self, name: impl Into<String>, values: Vec<f64>) {
        self.columns.push(Column {
            name: name.into(),
            values,
        });
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.values.as_slice())
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.values.len())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            threshold,
            pass: residual.is_finite() && residual < threshold,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub checks: &'a [Check],
    pub config: &'a RunConfig,
}

/// Floats carry 17 significant digits so that a read reproduces them exactly.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv(
    mut w: impl Write,
    provenance: &[(String, String)],
    table: &Table,
) -> std::io::Result<()> {
    for (k, v) in provenance {
        writeln!(w, "# {k}={v}")?;
    }
    let names: Vec<&str> = table.columns.iter().map(|c| c.name.as_str()).collect();
    writeln!(w, "{}", names.join(","))?;
    for r in 0..table.rows() {
        let row: Vec<String> = table
            .columns
            .iter()
            .map(|c| fmt_float(c.values[r]))
            .collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

/// Parses a file written by [`write_csv`] into its comment pairs and table.
pub fn read_csv(r: impl BufRead) -> Result<(Vec<(String, String)>, Table), String> {
    let mut provenance = Vec::new();
    let mut names: Option<Vec<String>> = None;
    let mut data: Vec<Vec<f64>> = Vec::new();
    for (no, line) in r.lines().enumerate() {
        let line = line.map_err(|e| e.to_string())?;
        if let Some(rest) = line.strip_prefix('#') {
            let (k, v) = rest
                .trim_start()
                .split_once('=')
                .ok_or(format!("line {}: bad comment", no + 1))?;
            provenance.push((k.to_string(), v.to_string()));
        } else if names.is_none() {
            let n: Vec<String> = line.split(',').map(str::to_string).collect();
            data = vec![Vec::new(); n.len()];
            names = Some(n);
        } else {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != data.len() {
                return Err(format!("line {}: expected {} fields", no + 1, data.len()));
            }
            for (col, f) in data.iter_mut().zip(fields) {
                col.push(f.parse().map_err(|e| format!("line {}: {e}", no + 1))?);
            }
        }
    }
    let names = names.ok_or("missing header row")?;
    let mut table = Table::default();
    for (n, v) in names.into_iter().zip(data) {
        table.push(n, v);
    }
    Ok((provenance, table))
}

#[derive(Serialize)]
struct JsonData<'a> {
    config: &'a RunConfig,
    columns: &'a [Column],
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn write_to(
    path: Option<&Path>,
    body: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut f = std::io::BufWriter::new(std::fs::File::create(p).map_err(io_err(p))?);
            body(&mut f).and_then(|_| f.flush()).map_err(io_err(p))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            body(&mut lock).map_err(io_err(Path::new("<stdout>")))
        }
    }
}

/// Writes the data table in the configured format.
pub fn write_table(cfg: &RunConfig, command: &str, table: &Table) -> Result<(), CliError> {
    let path = cfg.output_path.as_deref();
    match cfg.format {
        crate::config::Format::Csv => {
            write_to(path, |w| write_csv(w, &cfg.provenance(command), table))
        }
        crate::config::Format::Json => write_to(path, |w| {
            serde_json::to_writer_pretty(
                &mut *w,
                &JsonData {
                    config: cfg,
                    columns: &table.columns,
                },
            )
            .map_err(std::io::Error::other)?;
            writeln!(w)
        }),
    }
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    out.with_extension("checks.json")
}

/// Writes a check report as JSON to `path` or standard output.
pub fn write_report(
    path: Option<&Path>,
    cfg: &RunConfig,
    checks: &[Check],
) -> Result<(), CliError> {
    write_to(path, |w| {
        serde_json::to_writer_pretty(
            &mut *w,
            &Report {
                checks,
                config: cfg,
            },
        )
        .map_err(std::io::Error::other)?;
        writeln!(w)
    })
}
