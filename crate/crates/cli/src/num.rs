//! Number parsing and printing shared by the subcommands, and point CSV input.

use std::path::Path;

use casteljau::exactnum::{format_f64, format_rational};
use casteljau::{parse_rational, Rational, Scalar};

use crate::error::{CliError, CliResult};

/// Scalar that can be read from a flag or CSV field and printed back.
pub trait Num: Scalar {
    fn parse(s: &str) -> casteljau::Result<Self>;
    fn show(&self) -> String;
}

impl Num for f64 {
    fn parse(s: &str) -> casteljau::Result<Self> {
        parse_rational(s).map(|r| r.to_f64())
    }

    fn show(&self) -> String {
        format_f64(*self)
    }
}

impl Num for Rational {
    fn parse(s: &str) -> casteljau::Result<Self> {
        parse_rational(s)
    }

    fn show(&self) -> String {
        format_rational(self)
    }
}

/// Parses one flag value; failures are usage errors.
pub fn flag<N: Num>(name: &str, s: &str) -> CliResult<N> {
    N::parse(s).map_err(|_| CliError::Usage(format!("--{name}: cannot parse {s:?} as a number")))
}

/// Comma-separated flag list.
pub fn flag_list<N: Num>(name: &str, s: &str) -> CliResult<Vec<N>> {
    s.split(',').map(|part| flag(name, part)).collect()
}

/// Comma-separated list with a fixed length.
pub fn flag_array<N: Num, const K: usize>(name: &str, s: &str) -> CliResult<[N; K]> {
    let v = flag_list(name, s)?;
    let got = v.len();
    v.try_into()
        .map_err(|_| CliError::Usage(format!("--{name}: expected {K} comma-separated values, got {got}")))
}

pub fn join<N: Num>(v: &[N]) -> String {
    v.iter().map(Num::show).collect::<Vec<_>>().join(",")
}

/// Points from a headerless CSV file, one row per point. `#` starts a comment line.
pub fn read_points<N: Num>(path: &Path) -> CliResult<Vec<Vec<N>>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut out: Vec<Vec<N>> = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let row = rec
            .iter()
            .map(|f| N::parse(f))
            .collect::<casteljau::Result<Vec<N>>>()
            .map_err(|e| CliError::Input(format!("{} row {}: {e}", path.display(), i + 1)))?;
        if let Some(first) = out.first() {
            if first.len() != row.len() {
                return Err(CliError::Input(format!(
                    "{} row {}: expected {} coordinates, got {}",
                    path.display(),
                    i + 1,
                    first.len(),
                    row.len()
                )));
            }
        }
        out.push(row);
    }
    if out.is_empty() {
        return Err(CliError::Input(format!("{}: no points", path.display())));
    }
    Ok(out)
}

pub fn write_points<N: Num>(points: &[Vec<N>]) -> String {
    points.iter().map(|p| join(p) + "\n").collect()
}
