//! Regenerates the reference tables and compares them with the stored golden files.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::Args;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use casteljau::exactnum::{convergents_with_seeds, euclid_i64, ContinuedFraction, Terminator};
use casteljau::numtheory::meneard;
use casteljau::polygon_golden::{dh_blocks, golden_power};
use casteljau::smoothing::{h_matrix, knot_insertion_chain, smoothing_matrix, Characteristic};
use casteljau::vincent::{backward_table, shift_table, vincent_chain, IntPoly};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Directory holding the golden files
    #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))]
    pub golden: PathBuf,
    /// Write the full report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overwrite the golden files with the regenerated tables
    #[arg(long)]
    pub bless: bool,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn table3() -> casteljau::Result<String> {
    let e = euclid_i64(99, 70)?;
    let mut s = String::from("euclid 99/70\n");
    writeln!(s, "q {}", join(&e.quotients.quotients)).unwrap();
    writeln!(s, "n {}", join(&e.remainders)).unwrap();
    writeln!(s, "gcd {}", e.gcd).unwrap();
    let cf = ContinuedFraction::from_i64(&[1, 2, 2, 2, 2, 2, 2], Terminator::Truncated)?;
    let conv = convergents_with_seeds(&cf);
    let sv: Vec<BigInt> = conv.iter().map(|c| c.s.clone()).collect();
    let dv: Vec<BigInt> = conv.iter().map(|c| c.d.clone()).collect();
    writeln!(s, "\nconvergents {cf}").unwrap();
    writeln!(s, "i {}", join(&conv.iter().map(|c| c.index).collect::<Vec<_>>())).unwrap();
    writeln!(s, "S {}", join(&sv)).unwrap();
    writeln!(s, "D {}", join(&dv)).unwrap();
    let dd: Vec<BigInt> = dv[2..].windows(2).map(|w| &w[0] * &w[1]).collect();
    writeln!(s, "DD {}", join(&dd)).unwrap();
    Ok(s)
}

fn smoothing_533() -> casteljau::Result<String> {
    let ch = Characteristic::new(5, 3, 3)?;
    let mut s = format!("characteristic {ch}\n\nH\n{}", h_matrix(&ch)?);
    for (i, k) in knot_insertion_chain(&ch).iter().enumerate() {
        write!(s, "\nK{}\n{k}", i + 1).unwrap();
    }
    write!(s, "\nC\n{}", smoothing_matrix(&ch)?).unwrap();
    Ok(s)
}

fn coeff_row(p: &IntPoly) -> String {
    p.coeffs().iter().map(|c| format!("{c:>5}")).collect::<Vec<_>>().join("")
}

/// `slope y + constant` in the row variable.
fn linear(var: &str, (a, b): &(BigInt, BigInt)) -> String {
    let mut s = match a {
        a if a.is_zero() => String::new(),
        a if a.is_one() => var.to_string(),
        a if *a == -BigInt::one() => format!("-{var}"),
        a => format!("{a}{var}"),
    };
    if s.is_empty() {
        return b.to_string();
    }
    if !b.is_zero() {
        write!(s, " {} {}", if b.is_negative() { "-" } else { "+" }, b.abs()).unwrap();
    }
    s
}

fn vincent() -> casteljau::Result<String> {
    let mut s = String::new();
    let p = IntPoly::from_i64(&[1, -2, -1, 1]);
    writeln!(s, "p(x) = {p}, columns A B C D").unwrap();
    for (k, (rows, alpha)) in vincent_chain(&p, 3)?.iter().enumerate() {
        writeln!(s, "\ntable {} alpha {alpha}", k + 1).unwrap();
        for (i, row) in rows.iter().enumerate() {
            writeln!(s, "{i:>2} {}", coeff_row(row)).unwrap();
        }
    }
    let q = IntPoly::from_i64(&[1, -5, 6, -1]);
    writeln!(s, "\np(x) = {q}, columns A B C D").unwrap();
    for (i, row) in shift_table(&q).iter().enumerate() {
        writeln!(s, "{i:>2} {}", coeff_row(row)).unwrap();
    }
    writeln!(s, "\nbackward substitution: equation | substitution | P | Q | P + Q").unwrap();
    for row in backward_table(&p, 4, Some(BigInt::from(13)))? {
        let var = if row.index < 0 { "x(-1)".to_string() } else { row.var() };
        let sub = match &row.substitution {
            Some(a) if row.index < 0 => format!("{var} = {a} + 1/x"),
            Some(a) => format!("{var} = {a} + 1/x{}", row.index + 1),
            None => "-".to_string(),
        };
        let [pc, qc, sum] = row.columns();
        writeln!(s, "{} = 0 | {sub} | {} | {} | {}", row.equation.display_in(&var), linear(&var, &pc), linear(&var, &qc), linear(&var, &sum)).unwrap();
    }
    Ok(s)
}

fn golden_m6() -> casteljau::Result<String> {
    let mut s = String::new();
    for k in [1, 2, 6] {
        write!(s, "M^{k}\n{}\n", golden_power(3, k)?).unwrap();
    }
    Ok(s.trim_end().to_string() + "\n")
}

fn dh() -> casteljau::Result<String> {
    let (h, d) = dh_blocks(3);
    let mut s = String::new();
    for k in 0..=3 {
        write!(s, "H_{k}\n{}\nD_{k}\n{}\n", h[k], d[k]).unwrap();
    }
    Ok(s.trim_end().to_string() + "\n")
}

fn meneard_table() -> casteljau::Result<String> {
    let mut s = String::new();
    for n in 1..=3 {
        writeln!(s, "{}", meneard(n)?).unwrap();
    }
    Ok(s)
}

type Section = (&'static str, fn() -> casteljau::Result<String>);

pub const SECTIONS: [Section; 6] = [
    ("table3.txt", table3),
    ("smoothing_533.txt", smoothing_533),
    ("vincent.txt", vincent),
    ("golden_m6.txt", golden_m6),
    ("dh_blocks.txt", dh),
    ("meneard.txt", meneard_table),
];

fn diff(name: &str, want: &str, got: &str) -> Option<String> {
    if want == got {
        return None;
    }
    let mut s = format!("--- golden/{name}\n+++ regenerated\n");
    let (w, g): (Vec<&str>, Vec<&str>) = (want.lines().collect(), got.lines().collect());
    for i in 0..w.len().max(g.len()) {
        match (w.get(i), g.get(i)) {
            (Some(a), Some(b)) if a == b => {}
            (a, b) => {
                if let Some(a) = a {
                    writeln!(s, "-{:>4}: {a}", i + 1).unwrap();
                }
                if let Some(b) = b {
                    writeln!(s, "+{:>4}: {b}", i + 1).unwrap();
                }
            }
        }
    }
    Some(s)
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn run(a: &ReproduceArgs) -> CliResult<String> {
    let mut report = String::new();
    let mut summary = String::new();
    let mut failures = 0;
    for (name, build) in SECTIONS {
        let text = build()?;
        writeln!(report, "== {name}\n{text}").unwrap();
        let path = a.golden.join(name);
        if a.bless {
            std::fs::write(&path, &text).map_err(|e| CliError::io(&path, e))?;
            writeln!(summary, "blessed {name}").unwrap();
            continue;
        }
        match diff(name, &read(&path)?, &text) {
            None => writeln!(summary, "ok {name}").unwrap(),
            Some(d) => {
                failures += 1;
                write!(summary, "FAIL {name}\n{d}").unwrap();
            }
        }
    }
    let out = match &a.out {
        Some(path) => {
            std::fs::write(path, &report).map_err(|e| CliError::io(path, e))?;
            summary
        }
        None => report + &summary,
    };
    if failures > 0 {
        eprint!("{out}");
        return Err(CliError::GoldenMismatch(failures));
    }
    Ok(out)
}
