use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod error;
mod num;
mod reproduce;
mod svg;

use commands::*;
use error::CliResult;

/// Exact curve, smoothing and root-isolation tools.
#[derive(Parser, Debug)]
#[command(name = "casteljau", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a Bezier curve
    Eval(EvalArgs),
    /// Split a Bezier curve at a parameter
    Subdivide(SubdivideArgs),
    /// Evaluate the blossom of a Bezier curve
    Blossom(BlossomArgs),
    /// Smoothing matrices, or a smoothed spline through samples
    Smooth(SmoothArgs),
    /// Machining tolerance report for a cubic arc
    Tol(TolArgs),
    /// Intersect two conics by polar iteration
    Intersect(IntersectArgs),
    /// Isolate real roots of an integer polynomial
    Roots(RootsArgs),
    /// Golden matrix powers and diagonal ratios
    Golden(GoldenArgs),
    /// Euclid's algorithm on two integers, or the generalized algorithm
    Euclid(EuclidArgs),
    /// Matrix quaternions
    #[command(subcommand)]
    Quat(QuatCommand),
    /// Ménéard cube identity
    Meneard(MeneardArgs),
    /// Regenerate the reference tables and diff them against the golden files
    ReproducePaper(reproduce::ReproduceArgs),
}

fn run(cmd: &Command) -> CliResult<String> {
    match cmd {
        Command::Eval(a) => eval(a),
        Command::Subdivide(a) => subdivide(a),
        Command::Blossom(a) => blossom(a),
        Command::Smooth(a) => smooth(a),
        Command::Tol(a) => tol(a),
        Command::Intersect(a) => intersect(a),
        Command::Roots(a) => roots(a),
        Command::Golden(a) => golden(a),
        Command::Euclid(a) => euclid_cmd(a),
        Command::Quat(c) => quat(c),
        Command::Meneard(a) => meneard_cmd(a),
        Command::ReproducePaper(a) => reproduce::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
