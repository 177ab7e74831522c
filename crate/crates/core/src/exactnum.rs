//! Exact rationals, Euclid's algorithm, continued fractions and convergents.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n + 1 - i) / BigInt::from(i))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-1.25"` or `"3e-2"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let mut num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    if neg {
        num = -num;
    }
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        Rational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(num, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Text form `p/q`, with `/q` omitted when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Float with 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.*e}", 16, x)
}

/// Common scalar interface for exact and floating computations.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        int(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminator {
    Exact,
    Truncated,
}

/// Quotients `q_1..q_p`; `q_1` may be zero, all later quotients are positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub quotients: Vec<BigInt>,
    pub terminator: Terminator,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<BigInt>, terminator: Terminator) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::Domain("empty continued fraction".into()));
        }
        if quotients[0].is_negative() || quotients[1..].iter().any(|q| !q.is_positive()) {
            return Err(Error::Domain("continued fraction quotients must be positive".into()));
        }
        Ok(Self { quotients, terminator })
    }

    pub fn from_i64(qs: &[i64], terminator: Terminator) -> Result<Self> {
        Self::new(qs.iter().map(|&q| BigInt::from(q)).collect(), terminator)
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }
}

impl std::fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, q) in self.quotients[1..].iter().enumerate() {
            write!(f, "{}{}", if i == 0 { "; " } else { ", " }, q)?;
        }
        if self.terminator == Terminator::Truncated {
            write!(f, ", ...")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentPair {
    pub s: BigInt,
    pub d: BigInt,
    pub index: i64,
}

impl ConvergentPair {
    pub fn value(&self) -> Rational {
        Rational::new(self.s.clone(), self.d.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidResult {
    pub quotients: ContinuedFraction,
    pub gcd: BigInt,
    /// `n_2, n_3, ..., n_{p+1}`; the last entry is always 0.
    pub remainders: Vec<BigInt>,
}

/// Repeated division `n_{i-1} = q_i n_i + n_{i+1}` until the remainder vanishes.
pub fn euclid(n0: &BigInt, n1: &BigInt) -> Result<EuclidResult> {
    if !n1.is_positive() {
        return Err(Error::Domain("euclid: divisor must be positive".into()));
    }
    if n0.is_negative() {
        return Err(Error::Domain("euclid: dividend must be non-negative".into()));
    }
    let (mut a, mut b) = (n0.clone(), n1.clone());
    let mut quotients = Vec::new();
    let mut remainders = Vec::new();
    loop {
        let (q, r) = a.div_rem(&b);
        quotients.push(q);
        remainders.push(r.clone());
        if r.is_zero() {
            break;
        }
        a = b;
        b = r;
    }
    Ok(EuclidResult {
        quotients: ContinuedFraction { quotients, terminator: Terminator::Exact },
        gcd: b,
        remainders,
    })
}

pub fn euclid_i64(n0: i64, n1: i64) -> Result<EuclidResult> {
    euclid(&BigInt::from(n0), &BigInt::from(n1))
}

/// Convergents `S_i/D_i` for `i = 1..p`.
pub fn convergents(cf: &ContinuedFraction) -> Vec<ConvergentPair> {
    convergents_with_seeds(cf).split_off(2)
}

/// Convergents including the seeds `(S_-1, D_-1) = (0, 1)` and `(S_0, D_0) = (1, 0)`.
pub fn convergents_with_seeds(cf: &ContinuedFraction) -> Vec<ConvergentPair> {
    let mut out = vec![
        ConvergentPair { s: BigInt::zero(), d: BigInt::one(), index: -1 },
        ConvergentPair { s: BigInt::one(), d: BigInt::zero(), index: 0 },
    ];
    for (i, q) in cf.quotients.iter().enumerate() {
        let (p2, p1) = (&out[out.len() - 2], &out[out.len() - 1]);
        let s = &p1.s * q + &p2.s;
        let d = &p1.d * q + &p2.d;
        out.push(ConvergentPair { s, d, index: i as i64 + 1 });
    }
    out
}

/// Value of the continued fraction truncated after `depth` quotients.
pub fn cf_value(cf: &ContinuedFraction, depth: usize) -> Result<Rational> {
    if depth == 0 || depth > cf.len() {
        return Err(Error::Domain(format!("depth {depth} outside 1..={}", cf.len())));
    }
    let mut acc = Rational::from_integer(cf.quotients[depth - 1].clone());
    for q in cf.quotients[..depth - 1].iter().rev() {
        acc = Rational::from_integer(q.clone()) + acc.recip();
    }
    Ok(acc)
}

/// Continued fraction of a non-negative rational.
pub fn cf_of_rational(x: &Rational) -> Result<ContinuedFraction> {
    if x.is_negative() {
        return Err(Error::Domain("continued fraction of a negative ratio".into()));
    }
    Ok(euclid(x.numer(), x.denom())?.quotients)
}
