//! Real-root isolation for integer polynomials by Vincent's continued-fraction
//! method: sign variations, Taylor shifts, reversal and backward substitution.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ContinuedFraction, Rational, Terminator};

/// Integer polynomial, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// Same polynomial with a positive leading coefficient.
    pub fn with_positive_lead(&self) -> Self {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Divides out a root at zero.
    fn deflate_zero(&self) -> Self {
        Self::new(self.coeffs[1..].to_vec())
    }

    /// Formats with the given variable name, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let coeff = if mag.is_one() && i > 0 { String::new() } else { mag.to_string() };
            match i {
                0 => s.push_str(&mag.to_string()),
                1 => s.push_str(&format!("{coeff}{var}")),
                _ => s.push_str(&format!("{coeff}{var}^{i}")),
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// Sign changes between consecutive nonzero coefficients.
pub fn sign_variations(p: &IntPoly) -> usize {
    let signs: Vec<bool> = p.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `p(x + alpha)` by repeated synthetic division.
pub fn taylor_shift(p: &IntPoly, alpha: &BigInt) -> IntPoly {
    let mut c = p.coeffs.clone();
    if alpha.is_zero() {
        return p.clone();
    }
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * alpha;
            c[j] += t;
        }
    }
    IntPoly::new(c)
}

pub fn taylor_shift_i64(p: &IntPoly, alpha: i64) -> IntPoly {
    taylor_shift(p, &BigInt::from(alpha))
}

/// `x^n p(1/x)`: coefficients reversed.
pub fn reciprocal_transform(p: &IntPoly) -> IntPoly {
    let mut c = p.coeffs.clone();
    c.reverse();
    IntPoly::new(c)
}

fn rational_poly(p: &IntPoly) -> Vec<Rational> {
    p.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / b.last().unwrap();
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &f * bc;
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(Rational::zero());
        }
    }
    r
}

/// Whether `gcd(p, p')` is constant.
pub fn is_squarefree(p: &IntPoly) -> bool {
    if p.degree() == 0 {
        return !p.is_zero();
    }
    let mut a = rational_poly(p);
    let mut b = rational_poly(&p.derivative());
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

/// `x = (a y + b) / (c y + d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mobius {
    pub fn identity() -> Self {
        Self { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one() }
    }

    /// Composes with `y = alpha + 1/z`.
    pub fn substitute(&self, alpha: &BigInt) -> Self {
        Self {
            a: &self.a * alpha + &self.b,
            b: self.a.clone(),
            c: &self.c * alpha + &self.d,
            d: self.c.clone(),
        }
    }

    /// Composes with `y = z + shift`.
    pub fn translate(&self, shift: &BigInt) -> Self {
        Self { a: self.a.clone(), b: &self.a * shift + &self.b, c: self.c.clone(), d: &self.c * shift + &self.d }
    }

    /// Image of `y`; `None` at a pole.
    pub fn at(&self, y: &Rational) -> Option<Rational> {
        let den = Rational::from_integer(self.c.clone()) * y + Rational::from_integer(self.d.clone());
        (!den.is_zero()).then(|| (Rational::from_integer(self.a.clone()) * y + Rational::from_integer(self.b.clone())) / den)
    }

    /// Image of `y -> infinity`.
    pub fn at_infinity(&self) -> Option<Rational> {
        (!self.c.is_zero()).then(|| Rational::new(self.a.clone(), self.c.clone()))
    }

    /// Linear forms `P = (a - c) y + (b - d)` and `Q = c y + d`, with `x = (P + Q) / Q`.
    pub fn p_q(&self) -> ((BigInt, BigInt), (BigInt, BigInt)) {
        ((&self.a - &self.c, &self.b - &self.d), (self.c.clone(), self.d.clone()))
    }

    /// Numerator of `p((a y + b) / (c y + d))` after clearing `(c y + d)^n`.
    pub fn transform(&self, p: &IntPoly) -> IntPoly {
        let n = p.degree();
        let lin = |u: &BigInt, v: &BigInt| IntPoly::new(vec![v.clone(), u.clone()]);
        let (num, den) = (lin(&self.a, &self.b), lin(&self.c, &self.d));
        let mut pow_num = vec![IntPoly::from_i64(&[1])];
        let mut pow_den = vec![IntPoly::from_i64(&[1])];
        for _ in 0..n {
            pow_num.push(pow_num.last().unwrap().mul(&num));
            pow_den.push(pow_den.last().unwrap().mul(&den));
        }
        let mut acc = vec![BigInt::zero(); n + 1];
        for (i, c) in p.coeffs.iter().enumerate() {
            let term = pow_num[i].mul(&pow_den[n - i]);
            for (k, t) in term.coeffs.iter().enumerate() {
                acc[k] += c * t;
            }
        }
        IntPoly::new(acc)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsolatedRoot {
    pub cf: ContinuedFraction,
    /// Open isolating interval, or a single point for an exact root.
    pub interval: (Rational, Rational),
    /// Map from the last expansion variable to `x`.
    pub mobius: Mobius,
}

impl IsolatedRoot {
    pub fn is_exact(&self) -> bool {
        self.cf.terminator == Terminator::Exact
    }

    /// Midpoint of the final Mobius bracket, a float approximation of the root.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.is_exact() {
            return self.interval.0.to_f64().unwrap_or(f64::NAN);
        }
        let lo = self.mobius.at(&Rational::one());
        let hi = self.mobius.at_infinity();
        match (lo, hi) {
            (Some(a), Some(b)) => ((a + b) / Rational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN),
            (Some(a), None) | (None, Some(a)) => a.to_f64().unwrap_or(f64::NAN),
            _ => f64::NAN,
        }
    }
}

/// Largest number of unit steps scanned for one quotient.
const SCAN_LIMIT: u64 = 1 << 20;

struct Isolator {
    depth: usize,
    out: Vec<IsolatedRoot>,
}

fn sort_pair(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Isolator {
    fn exact(&mut self, cf: Vec<BigInt>, value: Rational, mobius: Mobius) -> Result<()> {
        self.out.push(IsolatedRoot {
            cf: ContinuedFraction::new(cf, Terminator::Exact)?,
            interval: (value.clone(), value),
            mobius,
        });
        Ok(())
    }

    /// Branch polynomial `p(y)` with `x_k = y + base`, `x = m(x_k)`. Positive roots of `p`
    /// are exactly the roots of the original polynomial inside the branch.
    fn branch(&mut self, mut p: IntPoly, m: Mobius, cf: Vec<BigInt>, base: &BigInt) -> Result<()> {
        if p.coeffs[0].is_zero() {
            // a root on the branch boundary belongs to the parent scan
            p = p.deflate_zero();
        }
        match sign_variations(&p) {
            0 => Ok(()),
            1 => self.refine(p, m, cf, base, None),
            _ => {
                let mut q = p;
                let mut alpha = BigInt::zero();
                loop {
                    let x_k = base + &alpha;
                    if !alpha.is_zero() && q.coeffs[0].is_zero() {
                        let mut c = cf.clone();
                        c.push(x_k.clone());
                        let v = m.at(&Rational::from_integer(x_k.clone())).expect("finite branch point");
                        self.exact(c, v, m.clone())?;
                        q = q.deflate_zero();
                    }
                    let inner = taylor_shift_i64(&reciprocal_transform(&q), 1);
                    let mut c = cf.clone();
                    c.push(x_k.clone());
                    self.branch(inner, m.substitute(&x_k), c, &BigInt::one())?;
                    q = taylor_shift_i64(&q, 1);
                    alpha += 1;
                    if sign_variations(&q) == 0 && !q.coeffs[0].is_zero() {
                        return Ok(());
                    }
                }
            }
        }
    }

    /// One positive root: scan for its integer part and expand `depth` quotients.
    fn refine(&mut self, mut p: IntPoly, mut m: Mobius, mut cf: Vec<BigInt>, base: &BigInt, mut interval: Option<(Rational, Rational)>) -> Result<()> {
        let mut base = base.clone();
        if interval.is_none() && !m.c.is_zero() {
            let lo = m.at(&Rational::from_integer(base.clone())).expect("finite branch point");
            let hi = m.at_infinity().expect("bounded branch");
            interval = Some(sort_pair(lo, hi));
        }
        loop {
            let mut alpha = 0u64;
            let mut q = p.clone();
            let s0 = q.coeffs[0].is_positive();
            loop {
                let next = taylor_shift_i64(&q, 1);
                if next.coeffs[0].is_zero() {
                    let x_k = &base + BigInt::from(alpha + 1);
                    cf.push(x_k.clone());
                    let v = m.at(&Rational::from_integer(x_k)).expect("finite root");
                    return self.exact(cf, v, m);
                }
                if next.coeffs[0].is_positive() != s0 {
                    break;
                }
                q = next;
                alpha += 1;
                if alpha > SCAN_LIMIT {
                    return Err(Error::Domain("quotient scan limit exceeded".into()));
                }
            }
            let x_k = &base + BigInt::from(alpha);
            if interval.is_none() {
                let lo = m.at(&Rational::from_integer(x_k.clone())).expect("finite bracket");
                let hi = m.at(&Rational::from_integer(&x_k + 1)).expect("finite bracket");
                interval = Some(sort_pair(lo, hi));
            }
            cf.push(x_k.clone());
            m = m.substitute(&x_k);
            if cf.len() >= self.depth {
                self.out.push(IsolatedRoot {
                    cf: ContinuedFraction::new(cf, Terminator::Truncated)?,
                    interval: interval.expect("interval set above"),
                    mobius: m,
                });
                return Ok(());
            }
            p = taylor_shift_i64(&reciprocal_transform(&q), 1);
            base = BigInt::one();
        }
    }
}

/// Positive real roots of a squarefree polynomial, each with its continued fraction
/// expanded to `depth` quotients, ordered by value.
pub fn isolate_positive_roots(p: &IntPoly, depth: usize) -> Result<Vec<IsolatedRoot>> {
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    if !is_squarefree(p) {
        return Err(Error::NotSquarefree);
    }
    let mut iso = Isolator { depth: depth.max(1), out: Vec::new() };
    let mut q = p.clone();
    if q.coeffs[0].is_zero() {
        q = q.deflate_zero();
    }
    iso.branch(q, Mobius::identity(), Vec::new(), &BigInt::zero())?;
    let mut out = iso.out;
    out.sort_by(|a, b| a.interval.0.cmp(&b.interval.0));
    Ok(out)
}

/// All real roots: negative roots through `p(-x)`, zero when `p(0) = 0`, then positive roots.
/// Negative roots carry the expansion of `-x`.
pub fn isolate_real_roots(p: &IntPoly, depth: usize) -> Result<Vec<(bool, IsolatedRoot)>> {
    if !is_squarefree(p) {
        return Err(Error::NotSquarefree);
    }
    let mut out: Vec<(bool, IsolatedRoot)> = isolate_positive_roots(&p.reflect(), depth)?.into_iter().map(|r| (true, r)).collect();
    out.reverse();
    if p.coeffs[0].is_zero() {
        out.push((
            false,
            IsolatedRoot {
                cf: ContinuedFraction::new(vec![BigInt::zero()], Terminator::Exact)?,
                interval: (Rational::zero(), Rational::zero()),
                mobius: Mobius::identity(),
            },
        ));
    }
    out.extend(isolate_positive_roots(p, depth)?.into_iter().map(|r| (false, r)));
    Ok(out)
}

/// Rows `p(x), p(x+1), ...` up to and including the first row without sign variations.
pub fn shift_table(p: &IntPoly) -> Vec<IntPoly> {
    let mut rows = vec![p.clone()];
    while sign_variations(rows.last().unwrap()) > 0 {
        rows.push(taylor_shift_i64(rows.last().unwrap(), 1));
    }
    rows
}

/// Worked-example chain: each table scans to its first variation-free row, the row before
/// it gives the quotient `alpha`, and its reversal starts the next table.
pub fn vincent_chain(p: &IntPoly, tables: usize) -> Result<Vec<(Vec<IntPoly>, usize)>> {
    let mut out = Vec::with_capacity(tables);
    let mut cur = p.clone();
    for _ in 0..tables {
        let rows = shift_table(&cur);
        if rows.len() < 2 {
            return Err(Error::Domain("no positive root left to expand".into()));
        }
        let alpha = rows.len() - 2;
        cur = reciprocal_transform(&rows[alpha]);
        out.push((rows, alpha));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BackwardRow {
    /// Index of the row variable, `-1` for a backward prefix row.
    pub index: i64,
    pub equation: IntPoly,
    /// Quotient of `x_k = alpha + 1/x_{k+1}`; `None` on the final row.
    pub substitution: Option<BigInt>,
    pub mobius: Mobius,
}

impl BackwardRow {
    pub fn var(&self) -> String {
        match self.index {
            0 => "x".to_string(),
            k => format!("x{k}"),
        }
    }

    /// `(P, Q, P + Q)` as linear forms `(slope, constant)` in the row variable.
    pub fn columns(&self) -> [(BigInt, BigInt); 3] {
        let (p, q) = self.mobius.p_q();
        let sum = (&p.0 + &q.0, &p.1 + &q.1);
        [p, q, sum]
    }
}

/// Substitution table along the largest positive root: `depth` substitutions give
/// `depth + 1` rows. With a prefix `beta`, an extra first row expresses `x` through
/// `x_{-1} = beta + 1/x`.
pub fn backward_table(p: &IntPoly, depth: usize, prefix: Option<BigInt>) -> Result<Vec<BackwardRow>> {
    let roots = isolate_positive_roots(p, depth.max(1))?;
    let root = roots.last().ok_or_else(|| Error::Domain("no positive root".into()))?;
    let quotients = &root.cf.quotients;
    let mut rows = Vec::with_capacity(depth + 2);
    if let Some(beta) = prefix {
        // x = 1 / (x_{-1} - beta)
        let m = Mobius { a: BigInt::zero(), b: BigInt::one(), c: BigInt::one(), d: -beta.clone() };
        rows.push(BackwardRow { index: -1, equation: m.transform(p).with_positive_lead(), substitution: Some(beta), mobius: m });
    }
    let mut m = Mobius::identity();
    for k in 0..=depth {
        let sub = (k < depth).then(|| quotients.get(k).cloned()).flatten();
        rows.push(BackwardRow { index: k as i64, equation: m.transform(p).with_positive_lead(), substitution: sub.clone(), mobius: m.clone() });
        match sub {
            Some(q) => m = m.substitute(&q),
            None => break,
        }
    }
    Ok(rows)
}

/// `gcd` of all coefficients.
pub fn content(p: &IntPoly) -> BigInt {
    p.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}
