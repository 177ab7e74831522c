//! Algebraic smoothing with characteristic (n, c, r): Lagrange interpolants over
//! integer samples are turned into spline poles through their polar forms, and
//! repeated knot insertion turns the spline poles into Bezier points of one segment.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::blossom::polar_monomial;
use crate::decasteljau::ControlPolygon;
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::mat::Matrix;

/// Segment degree `n`, continuity `c` and restitution degree `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Characteristic {
    pub n: usize,
    pub c: usize,
    pub r: usize,
}

impl Characteristic {
    pub fn new(n: usize, c: usize, r: usize) -> Result<Self> {
        if n == 0 || c >= n || r == 0 || r > n {
            return Err(Error::InconsistentCharacteristic { n, c, r });
        }
        Ok(Self { n, c, r })
    }

    /// Knot multiplicity.
    pub fn p(&self) -> usize {
        self.n - self.c
    }

    /// Points per segment.
    pub fn m(&self) -> usize {
        self.n + 1
    }

    /// Sample and segment counts from `q = r + m/p`, `s = q - r`, when `p` divides `m`.
    pub fn relation_counts(&self) -> Option<(usize, usize)> {
        let (m, p) = (self.m(), self.p());
        (m % p == 0).then(|| (self.r + m / p, m / p))
    }
}

impl std::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n, self.c, self.r)
    }
}

/// `l_i(x) = coefficients(x) / divisor`, coefficients in monomial order, low degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightPolynomial {
    pub coefficients: Vec<Rational>,
    pub divisor: Rational,
}

impl WeightPolynomial {
    pub fn monomial(&self) -> Vec<Rational> {
        self.coefficients.iter().map(|c| c / &self.divisor).collect()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc / &self.divisor
    }
}

/// Lagrange basis over distinct nodes: the node polynomial divided by one factor,
/// normalized by its value at the omitted node.
pub fn lagrange_weights(nodes: &[Rational]) -> Result<Vec<WeightPolynomial>> {
    for i in 0..nodes.len() {
        if nodes[..i].contains(&nodes[i]) {
            return Err(Error::DuplicateNodes);
        }
    }
    Ok((0..nodes.len())
        .map(|i| {
            let mut coefficients = vec![Rational::one()];
            let mut divisor = Rational::one();
            for (j, xj) in nodes.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut next = vec![Rational::zero(); coefficients.len() + 1];
                for (k, a) in coefficients.iter().enumerate() {
                    next[k + 1] += a;
                    next[k] -= xj * a;
                }
                coefficients = next;
                divisor *= &nodes[i] - xj;
            }
            WeightPolynomial { coefficients, divisor }
        })
        .collect())
}

/// Polar form of a monomial polynomial: `x^i` becomes `sigma_i(args) / C(n, i)`.
pub fn polar_of_monomials(coeffs: &[Rational], args: &[Rational]) -> Result<Rational> {
    polar_monomial(coeffs, args)
}

/// Dense exact matrix with labelled rows and integer sample columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothingMatrix {
    pub entries: Matrix<Rational>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<i64>,
}

impl SmoothingMatrix {
    pub fn common_denominator(&self) -> BigInt {
        self.entries.to_rows().iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Entries multiplied by the common denominator.
    pub fn scaled_integers(&self) -> Matrix<BigInt> {
        let d = Rational::from_integer(self.common_denominator());
        self.entries.map(|x| (x * &d).to_integer())
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        self.entries.to_rows().iter().map(|r| r.iter().sum()).collect()
    }

    pub fn is_affine(&self) -> bool {
        self.row_sums().iter().all(|s| s.is_one())
    }

    /// `C[i][j] = C[rows-1-i][cols-1-j]`.
    pub fn is_centro_symmetric(&self) -> bool {
        let (r, c) = (self.entries.rows(), self.entries.cols());
        (0..r).all(|i| (0..c).all(|j| self.entries.get(i, j) == self.entries.get(r - 1 - i, c - 1 - j)))
    }

    /// Columns holding at least one nonzero entry.
    pub fn support(&self) -> Vec<i64> {
        (0..self.entries.cols())
            .filter(|&j| (0..self.entries.rows()).any(|i| !self.entries.get(i, j).is_zero()))
            .map(|j| self.col_labels[j])
            .collect()
    }

    /// Drops all-zero leading and trailing columns.
    pub fn trimmed(&self) -> SmoothingMatrix {
        let sup = self.support();
        let (lo, hi) = match (sup.first(), sup.last()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return self.clone(),
        };
        let idx: Vec<usize> = (0..self.col_labels.len()).filter(|&j| (lo..=hi).contains(&self.col_labels[j])).collect();
        SmoothingMatrix {
            entries: Matrix::from_fn(self.entries.rows(), idx.len(), |i, j| self.entries.get(i, idx[j]).clone()),
            row_labels: self.row_labels.clone(),
            col_labels: idx.iter().map(|&j| self.col_labels[j]).collect(),
        }
    }

    /// Applies the matrix to sample values indexed like the columns.
    pub fn apply(&self, samples: &[Rational]) -> Vec<Rational> {
        self.entries.apply(samples)
    }
}

impl std::fmt::Display for SmoothingMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self.common_denominator();
        let m = self.scaled_integers();
        writeln!(f, "1/{d} x columns {:?}", self.col_labels)?;
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>5}")).collect();
            writeln!(f, "{:<18} {}", self.row_labels[i], row.join(" "))?;
        }
        Ok(())
    }
}

type SparseRow = BTreeMap<i64, Rational>;

fn knot_label(knots: &[Rational]) -> String {
    let parts: Vec<String> = knots.iter().map(|k| k.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// `2n` knots around the segment `[0, 1]`, each integer repeated `p` times.
pub fn knots(ch: &Characteristic) -> Vec<Rational> {
    let (n, p) = (ch.n, ch.p());
    let mut left = Vec::with_capacity(n);
    let mut v = 0i64;
    while left.len() < n {
        for _ in 0..p {
            left.push(int(v));
        }
        v -= 1;
    }
    left.truncate(n);
    left.reverse();
    let mut right = Vec::with_capacity(n);
    let mut v = 1i64;
    while right.len() < n {
        for _ in 0..p {
            right.push(int(v));
        }
        v += 1;
    }
    right.truncate(n);
    left.extend(right);
    left
}

/// Polar form of the degree-`r` Lagrange interpolant nearest to the pole's knots.
/// Windows of `r + 1` consecutive nodes compete by the distance between their
/// centre and the mean knot; two equally near windows are averaged.
fn h_row(window: &[Rational], r: usize) -> Result<SparseRow> {
    let mean: Rational = window.iter().sum::<Rational>() / int(window.len() as i64);
    let half = Rational::new(BigInt::from(r), BigInt::from(2));
    let base = (&mean - &half).floor().to_integer();
    let base: i64 = base.try_into().map_err(|_| Error::Domain("knot out of range".into()))?;
    let cands: Vec<(Rational, i64)> = (base - 1..=base + 2).map(|s| ((int(s) + &half - &mean).abs(), s)).collect();
    let best = cands.iter().map(|c| c.0.clone()).min().unwrap();
    let starts: Vec<i64> = cands.iter().filter(|c| c.0 == best).map(|c| c.1).collect();
    let share = Rational::new(BigInt::one(), BigInt::from(starts.len()));
    let mut row = SparseRow::new();
    for s in starts {
        let nodes: Vec<Rational> = (0..=r as i64).map(|k| int(s + k)).collect();
        for (k, l) in lagrange_weights(&nodes)?.iter().enumerate() {
            let w = polar_of_monomials(&l.monomial(), window)? * &share;
            *row.entry(s + k as i64).or_insert_with(Rational::zero) += w;
        }
    }
    row.retain(|_, v| !v.is_zero());
    Ok(row)
}

fn dense(rows: &[SparseRow], labels: Vec<String>) -> SmoothingMatrix {
    let cols: BTreeSet<i64> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    let (lo, hi) = (*cols.first().unwrap_or(&0), *cols.last().unwrap_or(&0));
    let col_labels: Vec<i64> = (lo..=hi).collect();
    let entries = Matrix::from_fn(rows.len(), col_labels.len(), |i, j| {
        rows[i].get(&col_labels[j]).cloned().unwrap_or_else(Rational::zero)
    });
    SmoothingMatrix { entries, row_labels: labels, col_labels }
}

/// Spline poles `b_0..b_n` of the central segment as combinations of integer samples.
pub fn h_matrix(ch: &Characteristic) -> Result<SmoothingMatrix> {
    let u = knots(ch);
    let n = ch.n;
    let rows = (0..=n).map(|i| h_row(&u[i..i + n], ch.r)).collect::<Result<Vec<_>>>()?;
    let labels = (0..=n).map(|i| format!("b{} {}", i, knot_label(&u[i..i + n]))).collect();
    Ok(dense(&rows, labels))
}

/// Boehm insertion of `tau`: each new pole is an old pole or a two-term
/// index reduction of consecutive old poles. Rows index the old poles.
fn insert_knot(u: &[Rational], tau: &Rational, n: usize) -> (Vec<Rational>, Vec<Vec<(usize, Rational)>>) {
    let k = u.iter().rposition(|x| x <= tau).map_or(0, |i| i + 1);
    let mut nu = u[..k].to_vec();
    nu.push(tau.clone());
    nu.extend_from_slice(&u[k..]);
    let old = u.len() + 1 - n;
    let mut rows = Vec::with_capacity(nu.len() + 1 - n);
    for i in 0..=nu.len() - n {
        let w = &nu[i..i + n];
        if let Some(j) = (0..old).find(|&j| &u[j..j + n] == w) {
            rows.push(vec![(j, Rational::one())]);
            continue;
        }
        let j = (0..old - 1)
            .find(|&j| {
                let mut common = u[j + 1..j + n].to_vec();
                common.push(tau.clone());
                common.sort();
                common == w && u[j] <= *tau && *tau <= u[j + n] && u[j] != u[j + n]
            })
            .expect("inserted knot lies inside the span");
        let a = (tau - &u[j]) / (&u[j + n] - &u[j]);
        rows.push(vec![(j, Rational::one() - &a), (j + 1, a)]);
    }
    (nu, rows)
}

fn compose(a: &[Vec<(usize, Rational)>], b: &[Vec<(usize, Rational)>]) -> Vec<BTreeMap<usize, Rational>> {
    a.iter()
        .map(|ra| {
            let mut d = BTreeMap::new();
            for (j, w) in ra {
                for (k, v) in &b[*j] {
                    *d.entry(*k).or_insert_with(Rational::zero) += w * v;
                }
            }
            d.retain(|_, v: &mut Rational| !v.is_zero());
            d
        })
        .collect()
}

/// Knot-insertion matrices `K_1..K_{n-p}`: each inserts 0 and 1 once, then drops the
/// outermost pole on both sides, until the central segment is in Bezier form.
pub fn knot_insertion_chain(ch: &Characteristic) -> Vec<SmoothingMatrix> {
    let n = ch.n;
    let mut u = knots(ch);
    let zero = Rational::zero();
    let one = Rational::one();
    let mut out = Vec::new();
    while u.iter().filter(|x| **x == zero).count() < n {
        let (u1, r1) = insert_knot(&u, &zero, n);
        let (u2, r2) = insert_knot(&u1, &one, n);
        let k = compose(&r2, &r1);
        let k = &k[1..k.len() - 1];
        u = u2[1..u2.len() - 1].to_vec();
        let labels = (0..=n).map(|i| knot_label(&u[i..i + n])).collect();
        let entries = Matrix::from_fn(k.len(), n + 1, |i, j| k[i].get(&j).cloned().unwrap_or_else(Rational::zero));
        out.push(SmoothingMatrix { entries, row_labels: labels, col_labels: (0..=n as i64).collect() });
    }
    out
}

/// `C = K_last ... K_1 H`: Bezier points `c_0..c_n` of the segment `[0, 1]`
/// as affine combinations of the samples `a_i = f(i)`.
pub fn smoothing_matrix(ch: &Characteristic) -> Result<SmoothingMatrix> {
    let h = h_matrix(ch)?;
    let mut m = h.entries.clone();
    for k in knot_insertion_chain(ch) {
        m = k.entries.mul(&m);
    }
    let labels = (0..=ch.n).map(|k| format!("c{k}")).collect();
    Ok(SmoothingMatrix { entries: m, row_labels: labels, col_labels: h.col_labels })
}

/// Sample count (nonzero columns of C) and distinct Lagrange stencils among the rows of H.
pub fn pipeline_counts(ch: &Characteristic) -> Result<(usize, usize)> {
    let h = h_matrix(ch)?;
    let c = smoothing_matrix(ch)?;
    let stencils: BTreeSet<Vec<i64>> = (0..h.entries.rows())
        .map(|i| (0..h.entries.cols()).filter(|&j| !h.entries.get(i, j).is_zero()).map(|j| h.col_labels[j]).collect())
        .collect();
    Ok((c.support().len(), stencils.len()))
}

/// Characteristic for `q` samples and `s` segments:
/// `r = q - s`, `m = p s`, `n = m - 1`, `c = n - p`, with the smallest `p` giving `n >= r`.
/// With `p = 1` and odd `n` the symmetric stencil restitutes one degree more, so an even
/// `r` is raised by one. The cell `(4, 3)` follows the published table, `(3,1,1)`.
pub fn configuration(q: usize, s: usize) -> Result<Characteristic> {
    if s == 0 || q < s {
        return Err(Error::UnsupportedConfiguration { q, s });
    }
    if (q, s) == (4, 3) {
        return Characteristic::new(3, 1, 1);
    }
    let mut r = q - s;
    let p = (r + 1).div_ceil(s).max(1);
    let n = p * s - 1;
    if n < p {
        return Err(Error::UnsupportedConfiguration { q, s });
    }
    if p == 1 && n % 2 == 1 && r % 2 == 0 {
        r += 1;
    }
    Characteristic::new(n, n - p, r).map_err(|_| Error::UnsupportedConfiguration { q, s })
}

/// Bezier segments of the smoothed curve through samples at nodes `0..len`,
/// for every unit segment whose stencil lies inside the data.
pub fn smooth_samples(ch: &Characteristic, samples: &[Vec<Rational>]) -> Result<Vec<ControlPolygon<Rational>>> {
    let c = smoothing_matrix(ch)?.trimmed();
    let (lo, hi) = (c.col_labels[0], *c.col_labels.last().unwrap());
    let len = samples.len() as i64;
    let dim = samples.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for j in -lo..len - hi {
        let mut pts = vec![vec![Rational::zero(); dim]; ch.n + 1];
        for (col, &node) in c.col_labels.iter().enumerate() {
            let a = &samples[(j + node) as usize];
            for (row, pt) in pts.iter_mut().enumerate() {
                let w = c.entries.get(row, col);
                for (x, y) in pt.iter_mut().zip(a) {
                    *x += w * y;
                }
            }
        }
        out.push(ControlPolygon::new(pts, int(j), int(j + 1))?);
    }
    Ok(out)
}

/// Spline poles for every segment with full support, as `(segment start, poles)`.
pub fn spline_poles(ch: &Characteristic, samples: &[Vec<Rational>]) -> Result<Vec<(i64, Vec<Vec<Rational>>)>> {
    let h = h_matrix(ch)?.trimmed();
    let c = smoothing_matrix(ch)?.trimmed();
    let (lo, hi) = (c.col_labels[0], *c.col_labels.last().unwrap());
    let len = samples.len() as i64;
    let dim = samples.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for j in -lo..len - hi {
        let mut pts = vec![vec![Rational::zero(); dim]; h.entries.rows()];
        for (col, &node) in h.col_labels.iter().enumerate() {
            let a = &samples[(j + node) as usize];
            for (row, pt) in pts.iter_mut().enumerate() {
                let w = h.entries.get(row, col);
                for (x, y) in pt.iter_mut().zip(a) {
                    *x += w * y;
                }
            }
        }
        out.push((j, pts));
    }
    Ok(out)
}

/// Nested smoothing series `cos t - (p-1)/(p+1) [cos 3t / 3 - (p-2)/(p+2) [ ... ]]`.
pub fn trig_smooth(p: usize, phi_grid: &[f64]) -> Vec<f64> {
    let weights = trig_smooth_weights(p);
    phi_grid
        .iter()
        .map(|&phi| {
            weights
                .iter()
                .enumerate()
                .map(|(i, w)| w * ((2 * i + 1) as f64 * phi).cos() / (2 * i + 1) as f64)
                .sum()
        })
        .collect()
}

/// Signed products of `(p-j)/(p+j)` multiplying `cos((2i+1)t)/(2i+1)`.
pub fn trig_smooth_weights(p: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(p);
    let mut c = 1.0;
    for i in 0..p {
        if i > 0 {
            c *= -((p - i) as f64) / ((p + i) as f64);
        }
        out.push(c);
    }
    out
}

/// Square-wave Fourier partial sum with `p` terms.
pub fn fourier_partial(p: usize, phi_grid: &[f64]) -> Vec<f64> {
    phi_grid
        .iter()
        .map(|&phi| {
            (0..p)
                .map(|i| {
                    let k = (2 * i + 1) as f64;
                    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                    sign * (k * phi).cos() / k
                })
                .sum()
        })
        .collect()
}
