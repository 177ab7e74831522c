//! One function per subcommand. Each returns the text to print on stdout.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Subcommand};
use num_bigint::BigInt;

use casteljau::blossom::blossom_eval;
use casteljau::decasteljau::ControlPolygon;
use casteljau::exactnum::{convergents_with_seeds, euclid};
use casteljau::intersect::{intersect_iterate, residual, Conic};
use casteljau::numtheory::meneard;
use casteljau::polygon_golden::{diagonal_ratios, generalized_euclid, golden_power, trig_diagonals};
use casteljau::quaternions::{rotate_vector, rotation, Vec4};
use casteljau::smoothing::{configuration, h_matrix, knot_insertion_chain, smooth_samples, smoothing_matrix, spline_poles, Characteristic};
use casteljau::tolerance::{
    extrapolate_tendencies, geodesic_deviation, groove_width, max_deviation_with, normal_deviation, ToleranceBudget, TendencyPair, Variant,
};
use casteljau::vincent::{isolate_positive_roots, isolate_real_roots, vincent_chain, IntPoly};
use casteljau::{Matrix, Rational, Scalar};

use crate::error::{CliError, CliResult};
use crate::num::{flag, flag_array, flag_list, join, read_points, write_points, Num};
use crate::svg::Plot;

fn write_file(path: &std::path::Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn to_f64_poly<N: Num>(poly: &ControlPolygon<N>) -> ControlPolygon<f64> {
    ControlPolygon {
        points: poly.points.iter().map(|p| p.iter().map(Scalar::to_f64).collect()).collect(),
        t0: poly.t0.to_f64(),
        t1: poly.t1.to_f64(),
    }
}

fn floats<N: Num>(pts: &[Vec<N>]) -> Vec<Vec<f64>> {
    pts.iter().map(|p| p.iter().map(Scalar::to_f64).collect()).collect()
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    /// CSV file of control points
    #[arg(long)]
    pub points: PathBuf,
    /// Expected degree; the point count must be degree + 1
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub t0: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub t1: String,
    /// Exact rational arithmetic
    #[arg(long)]
    pub exact: bool,
    /// Write an SVG plot of the curve
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Flatness tolerance of the SVG cubic pieces
    #[arg(long, default_value_t = 1e-3)]
    pub flatness: f64,
}

impl CurveArgs {
    fn polygon<N: Num>(&self) -> CliResult<ControlPolygon<N>> {
        let pts = read_points::<N>(&self.points)?;
        if let Some(d) = self.degree {
            if pts.len() != d + 1 {
                return Err(casteljau::Error::Arity { expected: d + 1, got: pts.len() }.into());
            }
        }
        Ok(ControlPolygon::new(pts, flag("t0", &self.t0)?, flag("t1", &self.t1)?)?)
    }

    fn plot<N: Num>(&self, polys: &[&ControlPolygon<N>]) -> CliResult<()> {
        if let Some(path) = &self.svg {
            let mut plot = Plot::default();
            for poly in polys {
                let p = to_f64_poly(*poly);
                plot.polyline(&p.points, "gray");
                plot.curve(&p, self.flatness, "black");
            }
            write_file(path, &plot.render())?;
        }
        Ok(())
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Parameter value, decimal or p/q
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
}

pub fn eval(a: &EvalArgs) -> CliResult<String> {
    fn run<N: Num>(a: &EvalArgs) -> CliResult<String> {
        let poly = a.curve.polygon::<N>()?;
        a.curve.plot(&[&poly])?;
        Ok(join(&poly.eval(&flag("t", &a.t)?)) + "\n")
    }
    if a.curve.exact { run::<Rational>(a) } else { run::<f64>(a) }
}

#[derive(Args, Debug)]
pub struct SubdivideArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
}

pub fn subdivide(a: &SubdivideArgs) -> CliResult<String> {
    fn run<N: Num>(a: &SubdivideArgs) -> CliResult<String> {
        let poly = a.curve.polygon::<N>()?;
        let (left, right) = poly.subdivide(&flag("t", &a.t)?)?;
        a.curve.plot(&[&left, &right])?;
        Ok(format!(
            "# left [{}, {}]\n{}# right [{}, {}]\n{}",
            left.t0.show(),
            left.t1.show(),
            write_points(&left.points),
            right.t0.show(),
            right.t1.show(),
            write_points(&right.points)
        ))
    }
    if a.curve.exact { run::<Rational>(a) } else { run::<f64>(a) }
}

#[derive(Args, Debug)]
pub struct BlossomArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Comma-separated blossom arguments, one per degree
    #[arg(long, allow_hyphen_values = true)]
    pub args: String,
}

pub fn blossom(a: &BlossomArgs) -> CliResult<String> {
    fn run<N: Num>(a: &BlossomArgs) -> CliResult<String> {
        let poly = a.curve.polygon::<N>()?;
        let args: Vec<N> = flag_list("args", &a.args)?;
        Ok(join(&blossom_eval(&poly, &args)?) + "\n")
    }
    if a.curve.exact { run::<Rational>(a) } else { run::<f64>(a) }
}

#[derive(Args, Debug)]
pub struct SmoothArgs {
    /// Degree
    #[arg(long)]
    pub n: Option<usize>,
    /// Continuity order
    #[arg(long)]
    pub c: Option<usize>,
    /// Restitution degree
    #[arg(long)]
    pub r: Option<usize>,
    /// Samples per stencil, with --s
    #[arg(long)]
    pub q: Option<usize>,
    /// Distinct stencils, with --q
    #[arg(long)]
    pub s: Option<usize>,
    /// CSV file of samples at consecutive integer nodes; without it the matrices are printed
    #[arg(long)]
    pub samples: Option<PathBuf>,
    #[arg(long)]
    pub exact: bool,
    /// SVG overlay of samples, b-poles, c-poles and curve
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-3)]
    pub flatness: f64,
}

impl SmoothArgs {
    fn characteristic(&self) -> CliResult<Characteristic> {
        match (self.n, self.c, self.r, self.q, self.s) {
            (Some(n), Some(c), Some(r), None, None) => Ok(Characteristic::new(n, c, r)?),
            (None, None, None, Some(q), Some(s)) => Ok(configuration(q, s)?),
            _ => Err(CliError::Usage("smooth needs either --n --c --r or --q --s".into())),
        }
    }
}

pub fn smooth(a: &SmoothArgs) -> CliResult<String> {
    let ch = a.characteristic()?;
    let Some(path) = &a.samples else {
        let mut out = format!("characteristic {ch}\n\nH\n{}", h_matrix(&ch)?);
        for (i, k) in knot_insertion_chain(&ch).iter().enumerate() {
            write!(out, "\nK{}\n{k}", i + 1).unwrap();
        }
        write!(out, "\nC\n{}", smoothing_matrix(&ch)?).unwrap();
        return Ok(out);
    };
    let samples = read_points::<Rational>(path)?;
    let segments = smooth_samples(&ch, &samples)?;
    if segments.is_empty() {
        return Err(casteljau::Error::Domain(format!("need more samples than the stencil width for {ch}")).into());
    }
    // consecutive segments share their end points
    let mut chain: Vec<Vec<Rational>> = segments[0].points.clone();
    for seg in &segments[1..] {
        chain.extend(seg.points[1..].iter().cloned());
    }
    if let Some(svg) = &a.svg {
        let mut plot = Plot::default();
        plot.dots(&floats(&samples), "red");
        let b_poles: Vec<Vec<Rational>> = spline_poles(&ch, &samples)?.into_iter().flat_map(|(_, p)| p).collect();
        plot.polyline(&floats(&b_poles), "blue");
        plot.polyline(&floats(&chain), "gray");
        for seg in &segments {
            plot.curve(&to_f64_poly(seg), a.flatness, "black");
        }
        write_file(svg, &plot.render())?;
    }
    Ok(if a.exact { write_points(&chain) } else { write_points(&floats(&chain)) })
}

#[derive(Args, Debug)]
pub struct TolArgs {
    /// Tendency at the start of the arc
    #[arg(long, allow_hyphen_values = true)]
    pub d0: f64,
    /// Tendency at the end of the arc
    #[arg(long, allow_hyphen_values = true)]
    pub d1: f64,
    /// exact, diff-two-root or sum-root
    #[arg(long, default_value = "exact")]
    pub variant: String,
    /// Stretch factor for extrapolated tendencies
    #[arg(long)]
    pub rho: Option<f64>,
    /// Geodesic tendencies d0,d1
    #[arg(long, allow_hyphen_values = true)]
    pub geodesic: Option<String>,
    /// Cutter radius
    #[arg(long)]
    pub radius: Option<f64>,
    /// Budget t1,t2,t3,total
    #[arg(long)]
    pub budget: Option<String>,
    /// First fundamental form and scallop height e,f,g,h
    #[arg(long, allow_hyphen_values = true)]
    pub groove: Option<String>,
}

pub fn tol(a: &TolArgs) -> CliResult<String> {
    let variant: Variant = a.variant.parse().map_err(|_| CliError::Usage(format!("--variant: unknown {:?}", a.variant)))?;
    let t = TendencyPair::new(a.d0, a.d1);
    let mut rows: Vec<(String, f64)> = vec![
        ("d0".into(), t.d0),
        ("d1".into(), t.d1),
        ("delta".into(), t.delta()),
        ("max deviation".into(), max_deviation_with(&t, variant)),
        ("normal deviation".into(), normal_deviation(&t)),
    ];
    if let Some(rho) = a.rho {
        let e = extrapolate_tendencies(&t, rho);
        rows.extend([
            (format!("d0 at rho {rho}"), e.d0),
            (format!("d1 at rho {rho}"), e.d1),
            (format!("max deviation at rho {rho}"), max_deviation_with(&e, variant)),
        ]);
    }
    let geodesic = a.geodesic.as_deref().map(|s| flag_array::<f64, 2>("geodesic", s)).transpose()?;
    let g = geodesic.map(|[g0, g1]| TendencyPair::new(g0, g1));
    if let Some(g) = &g {
        let radius = a.radius.ok_or_else(|| CliError::Usage("--geodesic needs --radius".into()))?;
        rows.push(("geodesic deviation".into(), geodesic_deviation(g, radius)?));
    }
    if let Some(s) = &a.groove {
        let [e, f, gg, h] = flag_array::<f64, 4>("groove", s)?;
        rows.push(("groove width".into(), groove_width(e, f, gg, h)?));
    }
    let mut verdict = None;
    if let Some(s) = &a.budget {
        let [t1, t2, t3, total] = flag_array::<f64, 4>("budget", s)?;
        let (Some(g), Some(radius)) = (&g, a.radius) else {
            return Err(CliError::Usage("--budget needs --geodesic and --radius".into()));
        };
        let budget = ToleranceBudget::new(t1, t2, t3, radius, total)?;
        verdict = Some(budget.admits(&t, g)?);
    }
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out: String = rows.iter().map(|(k, v)| format!("{k:<w$}  {}\n", v.show())).collect();
    if let Some(ok) = verdict {
        writeln!(out, "{:<w$}  {}", "budget", if ok { "admitted" } else { "exceeded" }).unwrap();
    }
    Ok(out)
}

#[derive(Args, Debug)]
pub struct IntersectArgs {
    /// First conic a,b,c,d,e,f for a x^2 + 2f xy + b y^2 + 2e x + 2d y + c
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Second conic, same layout
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    /// Start point x,y or homogeneous x,y,w
    #[arg(long, allow_hyphen_values = true)]
    pub start: String,
    /// Cycles of two steps each
    #[arg(long, default_value_t = 3)]
    pub cycles: usize,
    /// Stop once the residual is at most this
    #[arg(long, default_value_t = 0.0)]
    pub tol: f64,
    #[arg(long)]
    pub exact: bool,
}

pub fn intersect(a: &IntersectArgs) -> CliResult<String> {
    fn run<N: Num>(a: &IntersectArgs) -> CliResult<String> {
        let conic = |name: &str, s: &str| -> CliResult<Conic<N>> {
            let [ca, cb, cc, cd, ce, cf] = flag_array::<N, 6>(name, s)?;
            Ok(Conic::from_coefficients(ca, cb, cc, cd, ce, cf)?)
        };
        let (f, g) = (conic("f", &a.f)?, conic("g", &a.g)?);
        let mut m: Vec<N> = flag_list("start", &a.start)?;
        match m.len() {
            2 => m.push(N::one()),
            3 => {}
            k => return Err(CliError::Usage(format!("--start: expected 2 or 3 values, got {k}"))),
        }
        let it = intersect_iterate(&f, &g, &m, a.cycles, a.tol)?;
        let mut out = String::from("step,x,y,w,residual\n");
        for (k, p) in it.points.iter().enumerate() {
            writeln!(out, "{k},{},{}", join(p), residual(&f, &g, p).show()).unwrap();
        }
        let last = it.last();
        if !last[2].is_zero() {
            writeln!(out, "# point {},{}", (last[0].clone() / last[2].clone()).show(), (last[1].clone() / last[2].clone()).show()).unwrap();
        }
        Ok(out)
    }
    if a.exact { run::<Rational>(a) } else { run::<f64>(a) }
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    /// Integer coefficients, constant term first
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    /// Continued-fraction quotients per root
    #[arg(long, default_value_t = 12)]
    pub depth: usize,
    /// Include negative roots
    #[arg(long)]
    pub all: bool,
    /// Also print this many shift tables along the largest root
    #[arg(long, default_value_t = 0)]
    pub tables: usize,
}

pub fn roots(a: &RootsArgs) -> CliResult<String> {
    let coeffs: Vec<BigInt> = a
        .coeffs
        .split(',')
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| CliError::Usage(format!("--coeffs: {s:?} is not an integer"))))
        .collect::<CliResult<_>>()?;
    let p = IntPoly::new(coeffs);
    if p.is_zero() {
        return Err(casteljau::Error::Domain("zero polynomial".into()).into());
    }
    let found: Vec<(bool, _)> = if a.all {
        isolate_real_roots(&p, a.depth)?
    } else {
        isolate_positive_roots(&p, a.depth)?.into_iter().map(|r| (false, r)).collect()
    };
    let mut out = format!("p(x) = {p}\n");
    for (i, (neg, r)) in found.iter().enumerate() {
        let (lo, hi) = &r.interval;
        let (sign, lo, hi) = if *neg { ("-", -hi.clone(), -lo.clone()) } else { ("", lo.clone(), hi.clone()) };
        let approx = if *neg { -r.approx() } else { r.approx() };
        writeln!(out, "root {}: interval ({}, {})  cf {sign}{}  approx {}", i + 1, lo, hi, r.cf, approx.show()).unwrap();
    }
    if found.is_empty() {
        out.push_str("no roots\n");
    }
    if a.tables > 0 {
        for (k, (rows, alpha)) in vincent_chain(&p, a.tables)?.iter().enumerate() {
            writeln!(out, "\ntable {} (alpha = {alpha})", k + 1).unwrap();
            for (i, row) in rows.iter().enumerate() {
                writeln!(out, "{i:>3}  {}", row.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

#[derive(Args, Debug)]
pub struct GoldenArgs {
    /// Order of the golden matrix, for the (2n+1)-gon
    #[arg(long)]
    pub n: usize,
    /// Power
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub exact: bool,
}

pub fn golden(a: &GoldenArgs) -> CliResult<String> {
    let m = golden_power(a.n, a.k)?;
    let mut out = format!("M^{}\n{m}\n", a.k);
    let ratios = diagonal_ratios(a.n, a.k)?;
    let trig = trig_diagonals(a.n);
    out.push_str("i,ratio,trig,difference\n");
    for (i, (r, t)) in ratios.iter().zip(&trig).enumerate() {
        let shown = if a.exact { r.show() } else { r.to_f64().show() };
        writeln!(out, "{},{shown},{},{}", i + 1, t.show(), (r.to_f64() - t).show()).unwrap();
    }
    Ok(out)
}

#[derive(Args, Debug)]
pub struct EuclidArgs {
    /// Two or more positive values, decimal or p/q
    #[arg(required = true, num_args = 2..)]
    pub values: Vec<String>,
    /// Step limit for the generalized algorithm
    #[arg(long, default_value_t = 40)]
    pub steps: usize,
    /// Relative tolerance for equality in floating mode
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long)]
    pub exact: bool,
}

pub fn euclid_cmd(a: &EuclidArgs) -> CliResult<String> {
    let ints: Option<Vec<BigInt>> = a.values.iter().map(|s| s.trim().parse::<BigInt>().ok()).collect();
    if let (Some(v), 2) = (&ints, a.values.len()) {
        let e = euclid(&v[0], &v[1])?;
        let show = |xs: &[BigInt]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let conv = convergents_with_seeds(&e.quotients);
        let s: Vec<BigInt> = conv.iter().map(|c| c.s.clone()).collect();
        let d: Vec<BigInt> = conv.iter().map(|c| c.d.clone()).collect();
        return Ok(format!(
            "quotients {}\nremainders {}\ngcd {}\nS {}\nD {}\n",
            e.quotients,
            show(&e.remainders),
            e.gcd,
            show(&s),
            show(&d)
        ));
    }
    fn run<N: Num>(a: &EuclidArgs, tol: f64) -> CliResult<String> {
        let vals: Vec<N> = a.values.iter().map(|s| flag("values", s)).collect::<CliResult<_>>()?;
        let trace = generalized_euclid(&vals, a.steps, tol)?;
        let mut out = String::from("step,op,values\n");
        writeln!(out, "0,,{}", join(&trace.history[0])).unwrap();
        for (k, (step, vals)) in trace.steps.iter().zip(&trace.history[1..]).enumerate() {
            writeln!(out, "{},{}-{}*{},{}", k + 1, step.minuend, step.count, step.subtrahend, join(vals)).unwrap();
        }
        if let Some(p) = &trace.period {
            writeln!(out, "# period from step {} length {} pattern {} scale {}", p.start, p.len, p.label, p.scale.show()).unwrap();
        }
        if let Some(m) = trace.multipliers.last() {
            write!(out, "# multipliers\n{m}").unwrap();
        }
        Ok(out)
    }
    if a.exact { run::<Rational>(a, 0.0) } else { run::<f64>(a, a.tol) }
}

#[derive(Subcommand, Debug)]
pub enum QuatCommand {
    /// Rotate a 3-vector by the quaternion d + a i + b j + c k
    Rotate {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        exact: bool,
    },
    /// Hamilton product of two quaternions
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        exact: bool,
    },
}

fn show_matrix<N: Num>(m: &Matrix<N>) -> String {
    (0..m.rows()).map(|i| join(m.row(i)) + "\n").collect()
}

pub fn quat(cmd: &QuatCommand) -> CliResult<String> {
    fn rotate<N: Num>(q: &str, v: &str) -> CliResult<String> {
        let [d, a, b, c] = flag_array::<N, 4>("q", q)?;
        let v = flag_array::<N, 3>("v", v)?;
        let q = casteljau::quaternions::quat(d, a, b, c);
        let out = rotate_vector(&q, &v)?;
        Ok(format!("vector {}\nmatrix\n{}", join(&out), show_matrix(&rotation(&q)?)))
    }
    fn mul<N: Num>(a: &str, b: &str) -> CliResult<String> {
        let [t, x, y, z] = flag_array::<N, 4>("a", a)?;
        let p = Vec4::new(t, x, y, z);
        let [t, x, y, z] = flag_array::<N, 4>("b", b)?;
        let q = Vec4::new(t, x, y, z);
        let r = p.hamilton(&q);
        Ok(format!("product {}\nnorm {}\n", join(&r.to_vec()), r.norm().show()))
    }
    match cmd {
        QuatCommand::Rotate { q, v, exact: true } => rotate::<Rational>(q, v),
        QuatCommand::Rotate { q, v, exact: false } => rotate::<f64>(q, v),
        QuatCommand::Mul { a, b, exact: true } => mul::<Rational>(a, b),
        QuatCommand::Mul { a, b, exact: false } => mul::<f64>(a, b),
    }
}

#[derive(Args, Debug)]
pub struct MeneardArgs {
    #[arg(long)]
    pub n: u32,
}

pub fn meneard_cmd(a: &MeneardArgs) -> CliResult<String> {
    let id = meneard(a.n)?;
    let cube = |v: &BigInt| v * v * v;
    Ok(format!(
        "{id}\n{} - {} = {}\n{} - 1 = {}\n{} + {} = {}\nholds {}\n",
        cube(&id.l1),
        cube(&id.l2),
        cube(&id.l1) - cube(&id.l2),
        cube(&id.m),
        cube(&id.m) - 1,
        cube(&id.r1),
        cube(&id.r2),
        cube(&id.r1) + cube(&id.r2),
        id.holds()
    ))
}
