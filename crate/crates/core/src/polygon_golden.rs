//! Diagonals of regular odd polygons: Ptolemy ratio chains, the heptagon cubic,
//! golden matrices and their powers, the generalized Euclidean algorithm with its
//! storage table, characteristic polynomials and the DH block recurrences.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational, Scalar};
use crate::mat::{int_matrix, Matrix};
use crate::vincent::IntPoly;

/// Anti-triangular ones matrix of order `n`: entry `(i, j)` is 1 iff `i + j >= n - 1`.
pub fn golden_matrix(n: usize) -> Result<Matrix<BigInt>> {
    if n < 2 {
        return Err(Error::Domain(format!("golden matrix order must be at least 2, got {n}")));
    }
    Ok(Matrix::from_fn(n, n, |i, j| if i + j + 1 >= n { BigInt::one() } else { BigInt::zero() }))
}

/// `M^k` for the order-`n` golden matrix.
pub fn golden_power(n: usize, k: u32) -> Result<Matrix<BigInt>> {
    Ok(golden_matrix(n)?.pow(k))
}

/// Last row of `M^k` divided by its first entry; approximates `d_i / d_1` of the `(2n+1)`-gon.
pub fn diagonal_ratios(n: usize, k: u32) -> Result<Vec<Rational>> {
    if k == 0 {
        return Err(Error::Domain("power must be at least 1".into()));
    }
    let m = golden_power(n, k)?;
    let row = m.row(n - 1);
    Ok(row.iter().map(|x| Rational::new(x.clone(), row[0].clone())).collect())
}

/// `d_k = sin(k pi / N) / sin(pi / N)`, the side being `d_1 = 1`.
pub fn trig_diagonal(sides: usize, k: usize) -> f64 {
    let a = PI / sides as f64;
    (k as f64 * a).sin() / a.sin()
}

/// `d_1..d_n` of the regular `(2n+1)`-gon.
pub fn trig_diagonals(n: usize) -> Vec<f64> {
    (1..=n).map(|k| trig_diagonal(2 * n + 1, k)).collect()
}

/// Ratio chain for `N = 2q + 1` and `p + r = q + 1`:
/// `(d_r - d_{r-1})/d_p = ... = (d_2 - d_1)/d_{q-1} = d_1/d_q = d_r / (d_p + ... + d_q)`,
/// with `d_0 = 0`. Returns the chain evaluated with trig diagonals.
pub fn ptolemy_ratios(sides: usize, p: usize, r: usize) -> Result<Vec<f64>> {
    if sides < 3 || sides % 2 == 0 {
        return Err(Error::Domain(format!("polygon must have an odd number of sides >= 3, got {sides}")));
    }
    let q = (sides - 1) / 2;
    if p == 0 || r == 0 || p + r != q + 1 {
        return Err(Error::Domain(format!("need p, r >= 1 with p + r = {}, got p={p}, r={r}", q + 1)));
    }
    let d = |k: usize| if k == 0 { 0.0 } else { trig_diagonal(sides, k) };
    let mut out = Vec::with_capacity(r + 1);
    for (step, top) in (1..=r).rev().enumerate() {
        let den = p + step;
        if den >= q {
            break;
        }
        out.push((d(top) - d(top - 1)) / d(den));
    }
    out.push(d(1) / d(q));
    let (lo, hi) = (p.min(q), p.max(q));
    out.push(d(r) / (lo..=hi).map(d).sum::<f64>());
    Ok(out)
}

/// Residuals of the chain against its first ratio.
pub fn ptolemy_identities(sides: usize, p: usize, r: usize) -> Result<Vec<f64>> {
    let ratios = ptolemy_ratios(sides, p, r)?;
    Ok(ratios.iter().map(|x| x - ratios[0]).collect())
}

/// Valid `(p, r)` pairs for an odd polygon.
pub fn ptolemy_partitions(sides: usize) -> Vec<(usize, usize)> {
    let q = (sides.saturating_sub(1)) / 2;
    (1..=q).map(|p| (p, q + 1 - p)).collect()
}

/// Heptagon diagonals `(u, d, t)` with unit side.
pub fn heptagon_diagonals() -> (f64, f64, f64) {
    (trig_diagonal(7, 1), trig_diagonal(7, 2), trig_diagonal(7, 3))
}

/// Roots `t/d`, `-u/t`, `-d/u` of `x^3 + x^2 - 2x - 1`.
pub fn heptagon_cubic_roots() -> [f64; 3] {
    let (u, d, t) = heptagon_diagonals();
    [t / d, -u / t, -d / u]
}

/// `det(M - x I)` for an integer square matrix, exact.
pub fn characteristic_poly(m: &Matrix<BigInt>) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::Domain("characteristic polynomial needs a square matrix".into()));
    }
    let n = m.rows();
    let q = m.map(|x| Rational::from_integer(x.clone()));
    // interpolate det(M - xI) through x = 0..=n
    let xs: Vec<Rational> = (0..=n as i64).map(int).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| q.sub(&Matrix::<Rational>::identity(n).scale(x)).det())
        .collect();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (i, xi) in xs.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut den = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= xj * b;
            }
            basis = next;
            den *= xi - xj;
        }
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += &ys[i] * b / &den;
        }
    }
    Ok(IntPoly::new(coeffs.iter().map(|c| c.to_integer()).collect()))
}

/// `M` and `M^{-1}` of the heptagon storage scheme, in `(t, d, u)` order.
pub fn heptagon_storage_pair() -> (Matrix<BigInt>, Matrix<BigInt>) {
    (
        int_matrix(&[&[3, 2, 1], &[2, 2, 1], &[1, 1, 1]]),
        int_matrix(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
    )
}

/// `R_0..R_{k_max+1}` and `V_{1/2}..V_{k_max+1/2}` with `V_{k+1/2} - V_{k-1/2} = R_k`,
/// `R_{k+1} - R_{k-1} = V_{k+1/2}`, seeded so that the block form at `k = 1` is `M`.
pub fn rv_sequences(k_max: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut r = vec![BigInt::zero(), BigInt::one()];
    let mut v = vec![BigInt::zero()];
    for k in 1..=k_max {
        let vk = &v[k - 1] + &r[k];
        r.push(&r[k - 1] + &vk);
        v.push(vk);
    }
    (r, v)
}

/// Heptagon `M^k` assembled from the R/V sequences.
pub fn rv_block(k: usize) -> Result<Matrix<BigInt>> {
    if k == 0 {
        return Err(Error::Domain("block form needs k >= 1".into()));
    }
    let (r, v) = rv_sequences(k);
    let (r0, r1, r2) = (r[k - 1].clone(), r[k].clone(), r[k + 1].clone());
    let (v0, v1) = (v[k - 1].clone(), v[k].clone());
    Ok(Matrix::from_rows(vec![
        vec![r0.clone(), v0.clone(), r1.clone()],
        vec![v0, &r0 + &r1, v1.clone()],
        vec![r1, v1, r2],
    ]))
}

/// `H_0` of the DH scheme.
pub fn dh_seed() -> Matrix<BigInt> {
    int_matrix(&[&[0, 0, 0, 1], &[1, 0, 1, 1], &[-1, 1, 0, 0], &[1, 0, 1, 0]])
}

/// `H_0..H_k` by the column recurrences and `D_0..D_k` by the row recurrences,
/// both started from `H_0` (`D_0 = H_0`).
pub fn dh_blocks(k_max: usize) -> (Vec<Matrix<BigInt>>, Vec<Matrix<BigInt>>) {
    let h0 = dh_seed();
    let mut cols: Vec<Vec<BigInt>> = (0..4).map(|j| h0.col(j)).collect();
    let mut rows: Vec<Vec<BigInt>> = (0..4).map(|i| h0.row(i).to_vec()).collect();
    let add = |a: &[BigInt], b: &[BigInt]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let sub = |a: &[BigInt], b: &[BigInt]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>();
    for n in 0..k_max {
        let b = 4 * n;
        let h4 = add(&cols[b + 2], &cols[b + 3]);
        let h5 = add(&cols[b + 1], &h4);
        let h6 = add(&h4, &h5);
        let h7 = add(&cols[b + 3], &h6);
        cols.extend([h4, h5, h6, h7]);
        let d4 = sub(&rows[b], &rows[b + 3]);
        let d5 = sub(&rows[b + 3], &rows[b + 2]);
        let d6 = sub(&rows[b + 2], &d5);
        let d7 = sub(&d5, &d4);
        rows.extend([d4, d5, d6, d7]);
    }
    let hs = (0..=k_max).map(|k| Matrix::from_fn(4, 4, |i, j| cols[4 * k + j][i].clone())).collect();
    let ds = (0..=k_max).map(|k| Matrix::from_rows(rows[4 * k..4 * k + 4].to_vec())).collect();
    (hs, ds)
}

/// Double-entry storage table: columns are `(t, d, u)` states of the stored variables,
/// rows are linear functionals evaluated on every column.
#[derive(Debug, Clone, PartialEq)]
pub struct StorageTable {
    pub col_labels: Vec<String>,
    pub columns: Vec<[i64; 3]>,
    pub row_labels: Vec<String>,
    pub rows: Vec<Vec<i64>>,
}

/// `c, b, a` identity columns followed by `updates` steps of the cycle
/// `b += c; a += b; b += a; c += b`, and `euclid_rows` rows of the heptagon
/// Euclid cycle `t1 = t - d, d* = d - u, u1 = u - d*, d1 = d* - t1` after `t, d, u`.
pub fn storage_table(updates: usize, euclid_rows: usize) -> StorageTable {
    let mut state = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]]; // c, b, a
    let mut col_labels = vec!["c".to_string(), "b".to_string(), "a".to_string()];
    let mut columns = state.to_vec();
    let cycle = [(1usize, 0usize, "b+c"), (2, 1, "a+b"), (1, 2, "b+a"), (0, 1, "c+b")];
    for step in 0..updates {
        let (dst, src, label) = cycle[step % 4];
        for i in 0..3 {
            state[dst][i] += state[src][i];
        }
        columns.push(state[dst]);
        col_labels.push(label.to_string());
    }
    let mut funcs: Vec<([i64; 3], String)> =
        vec![([1, 0, 0], "t".into()), ([0, 1, 0], "d".into()), ([0, 0, 1], "u".into())];
    let (mut t, mut d, mut u) = ([1i64, 0, 0], [0i64, 1, 0], [0i64, 0, 1]);
    let diff = |a: [i64; 3], b: [i64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let mut level = 1;
    while funcs.len() < 3 + euclid_rows {
        let t1 = diff(t, d);
        let ds = diff(d, u);
        let u1 = diff(u, ds);
        let d1 = diff(ds, t1);
        for (f, name) in [(t1, format!("t{level}")), (ds, format!("d{level}*")), (u1, format!("u{level}")), (d1, format!("d{level}"))] {
            if funcs.len() < 3 + euclid_rows {
                funcs.push((f, name));
            }
        }
        (t, d, u) = (t1, d1, u1);
        level += 1;
    }
    let rows = funcs
        .iter()
        .map(|(f, _)| columns.iter().map(|c| f[0] * c[0] + f[1] * c[1] + f[2] * c[2]).collect())
        .collect();
    StorageTable { col_labels, columns, row_labels: funcs.into_iter().map(|(_, n)| n).collect(), rows }
}

/// One subtraction round: `count` times the value in slot `subtrahend` from slot `minuend`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidStep {
    pub minuend: usize,
    pub subtrahend: usize,
    pub count: BigInt,
}

/// Repetition of the step pattern with a common scale factor between the two states.
#[derive(Debug, Clone, PartialEq)]
pub struct Period {
    pub start: usize,
    pub len: usize,
    /// Minuend letters in order, `A` for the initially largest slot, with counts above 1.
    pub label: String,
    pub scale: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EuclidTrace<S> {
    pub history: Vec<Vec<S>>,
    pub steps: Vec<EuclidStep>,
    /// `original = M_k current_k` after each step; `M_0` is the identity.
    pub multipliers: Vec<Matrix<BigInt>>,
    pub period: Option<Period>,
}

impl<S: Scalar> EuclidTrace<S> {
    pub fn values(&self) -> &[S] {
        self.history.last().expect("trace keeps the start state")
    }

    /// Counts of the steps, in order.
    pub fn quotients(&self) -> Vec<BigInt> {
        self.steps.iter().map(|s| s.count.clone()).collect()
    }

    /// First step whose multiplier matrix has `col` as a column.
    pub fn find_column(&self, col: &[i64]) -> Option<usize> {
        let target: Vec<BigInt> = col.iter().map(|&x| BigInt::from(x)).collect();
        self.multipliers
            .iter()
            .position(|m| (0..m.cols()).any(|j| m.col(j) == target))
    }
}

fn floor_ratio<S: Scalar>(a: &S, b: &S, rel_tol: f64) -> BigInt {
    let mut q = BigInt::from((a.to_f64() / b.to_f64() + rel_tol).floor() as i64).max(BigInt::one());
    if rel_tol == 0.0 {
        let qs = |q: &BigInt| S::from_rational(&Rational::from_integer(q.clone()));
        while qs(&(&q + 1)) * b.clone() <= *a {
            q += 1;
        }
        while q > BigInt::one() && qs(&q) * b.clone() > *a {
            q -= 1;
        }
    }
    q
}

fn letter(i: usize) -> char {
    (b'A' + i as u8) as char
}

/// Generalized Euclid: sort decreasingly, subtract the second largest from the largest
/// as often as it fits, repeat. Values falling below `rel_tol` times the initial maximum
/// count as an exact zero; the run stops when at most one value is nonzero.
pub fn generalized_euclid<S: Scalar>(values: &[S], max_steps: usize, rel_tol: f64) -> Result<EuclidTrace<S>> {
    if values.len() < 2 {
        return Err(Error::Domain("generalized Euclid needs at least two values".into()));
    }
    if values.iter().any(|v| *v <= S::zero()) {
        return Err(Error::Domain("generalized Euclid needs positive values".into()));
    }
    let n = values.len();
    let scale = values.iter().map(Scalar::to_f64).fold(0.0, f64::max);
    let mut initial_rank: Vec<usize> = (0..n).collect();
    initial_rank.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    let mut rank_of = vec![0; n];
    for (r, &slot) in initial_rank.iter().enumerate() {
        rank_of[slot] = r;
    }
    let mut cur = values.to_vec();
    let mut m = Matrix::<BigInt>::identity(n);
    let mut trace = EuclidTrace { history: vec![cur.clone()], steps: Vec::new(), multipliers: vec![m.clone()], period: None };
    for _ in 0..max_steps {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| cur[j].partial_cmp(&cur[i]).unwrap());
        let (a, b) = (order[0], order[1]);
        if cur[b].is_zero() {
            break;
        }
        let q = floor_ratio(&cur[a], &cur[b], rel_tol);
        let qs = S::from_rational(&Rational::from_integer(q.clone()));
        cur[a] = cur[a].clone() - qs * cur[b].clone();
        if cur[a].to_f64().abs() <= rel_tol * scale || cur[a] < S::zero() {
            cur[a] = S::zero();
        }
        for i in 0..n {
            let v = m.get(i, b) + &q * m.get(i, a);
            m.set(i, b, v);
        }
        trace.steps.push(EuclidStep { minuend: a, subtrahend: b, count: q });
        trace.history.push(cur.clone());
        trace.multipliers.push(m.clone());
    }
    trace.period = detect_period(&trace, &rank_of, 1e-10);
    Ok(trace)
}

/// First `(start, len)` with `state[start + len] = lambda state[start]` slotwise within `tol`.
fn detect_period<S: Scalar>(trace: &EuclidTrace<S>, rank_of: &[usize], tol: f64) -> Option<Period> {
    let h: Vec<Vec<f64>> = trace.history.iter().map(|v| v.iter().map(Scalar::to_f64).collect()).collect();
    for start in 0..h.len() {
        if h[start].iter().any(|x| *x == 0.0) {
            return None;
        }
        for end in start + 1..h.len() {
            let lambda = h[end][0] / h[start][0];
            if !(lambda < 1.0 - tol) {
                continue;
            }
            let ok = h[start].iter().zip(&h[end]).all(|(a, b)| (b - lambda * a).abs() <= tol * a.abs());
            if ok {
                let label = trace.steps[start..end]
                    .iter()
                    .map(|s| {
                        let c = letter(rank_of[s.minuend]);
                        if s.count.is_one() {
                            c.to_string()
                        } else {
                            format!("{c}{}", s.count)
                        }
                    })
                    .collect();
                return Some(Period { start, len: end - start, label, scale: lambda });
            }
        }
    }
    None
}

/// Entries as `i64` when they all fit.
pub fn as_i64(m: &Matrix<BigInt>) -> Option<Vec<Vec<i64>>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_i64()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn ints(m: &Matrix<BigInt>) -> Vec<Vec<i64>> {
        as_i64(m).unwrap()
    }

    #[test]
    fn golden_patterns() {
        assert_eq!(ints(&golden_matrix(2).unwrap()), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(ints(&golden_matrix(3).unwrap()), vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        assert_eq!(
            ints(&golden_matrix(4).unwrap()),
            vec![vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 1, 1], vec![1, 1, 1, 1]]
        );
        assert!(golden_matrix(1).is_err());
    }

    #[test]
    fn heptagon_powers() {
        assert_eq!(ints(&golden_power(3, 2).unwrap()), vec![vec![1, 1, 1], vec![1, 2, 2], vec![1, 2, 3]]);
        assert_eq!(ints(&golden_power(3, 6).unwrap()), vec![vec![14, 25, 31], vec![25, 45, 56], vec![31, 56, 70]]);
        assert_eq!(golden_power(3, 0).unwrap(), Matrix::identity(3));
        assert_eq!(diagonal_ratios(3, 6).unwrap(), vec![rat(1, 1), rat(56, 31), rat(70, 31)]);
    }

    #[test]
    fn pentagon_fibonacci() {
        let fib = [1i64, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for k in 1..9u32 {
            let m = ints(&golden_power(2, k).unwrap());
            assert_eq!(m[1], vec![fib[k as usize - 1], fib[k as usize]]);
        }
    }

    #[test]
    fn ptolemy() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let r = ptolemy_ratios(5, 1, 2).unwrap();
        assert!(r.iter().all(|x| (1.0 / x - phi).abs() < 1e-12));
        for (p, r) in ptolemy_partitions(7) {
            assert!(ptolemy_identities(7, p, r).unwrap().iter().all(|e| e.abs() < 1e-12));
        }
        assert_eq!(ptolemy_ratios(7, 1, 3).unwrap().len(), 4);
        assert!(ptolemy_identities(3, 1, 1).unwrap().iter().all(|e| *e == 0.0));
        assert!(ptolemy_ratios(7, 2, 3).is_err());
        assert!(ptolemy_ratios(8, 1, 3).is_err());
    }

    #[test]
    fn cubic_roots() {
        let x = heptagon_cubic_roots();
        assert!((x.iter().sum::<f64>() + 1.0).abs() < 1e-12);
        assert!((x.iter().product::<f64>() - 1.0).abs() < 1e-12);
        for r in x {
            assert!((r * r * r + r * r - 2.0 * r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn char_polys() {
        let (m, inv) = heptagon_storage_pair();
        assert_eq!(characteristic_poly(&m).unwrap(), IntPoly::from_i64(&[1, -5, 6, -1]));
        assert_eq!(characteristic_poly(&inv).unwrap(), IntPoly::from_i64(&[1, -6, 5, -1]));
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(characteristic_poly(&Matrix::identity(2)).unwrap(), IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn rv() {
        let (r, v) = rv_sequences(7);
        let r: Vec<i64> = r.iter().map(|x| x.to_i64().unwrap()).collect();
        let v: Vec<i64> = v.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(r, vec![0, 1, 1, 3, 6, 14, 31, 70, 157]);
        assert_eq!(v, vec![0, 1, 2, 5, 11, 25, 56, 126]);
        for k in 1..10 {
            assert_eq!(rv_block(k).unwrap(), golden_power(3, k as u32).unwrap());
        }
    }

    #[test]
    fn dh() {
        let (h, d) = dh_blocks(3);
        assert_eq!(ints(&h[1]), vec![vec![1, 1, 2, 3], vec![2, 2, 4, 5], vec![0, 1, 1, 1], vec![1, 1, 2, 2]]);
        assert_eq!(ints(&h[2]), vec![vec![5, 6, 11, 14], vec![9, 11, 20, 25], vec![2, 3, 5, 6], vec![4, 5, 9, 11]]);
        assert_eq!(h[3].col(0), vec![25, 45, 11, 20].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(ints(&d[1]), vec![vec![-1, 0, -1, 1], vec![2, -1, 1, 0], vec![-3, 2, -1, 0], vec![3, -1, 2, -1]]);
        assert_eq!(d[0], h[0]);
    }

    #[test]
    fn storage() {
        let t = storage_table(4, 4);
        assert_eq!(t.rows[0], vec![1, 0, 0, 1, 1, 2, 3]);
        assert_eq!(t.rows[1], vec![0, 1, 0, 1, 1, 2, 2]);
        assert_eq!(t.rows[2], vec![0, 0, 1, 0, 1, 1, 1]);
        assert_eq!(t.rows[3], vec![1, -1, 0, 0, 0, 0, 1]);
        assert_eq!(t.rows[4], vec![0, 1, -1, 1, 0, 1, 1]);
        assert_eq!(t.rows[5], vec![0, -1, 2, -1, 1, 0, 0]);
        assert_eq!(t.rows[6], vec![-1, 2, -1, 1, 0, 1, 0]);
        let empty = storage_table(0, 0);
        assert_eq!(empty.columns, vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    }

    #[test]
    fn euclid_two_integers() {
        let v = [int(99), int(70)];
        let tr = generalized_euclid(&v, 50, 0.0).unwrap();
        let q: Vec<i64> = tr.quotients().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(q, vec![1, 2, 2, 2, 2, 2]);
        assert!(generalized_euclid(&[int(1)], 5, 0.0).is_err());
        assert!(generalized_euclid(&[int(1), int(0)], 5, 0.0).is_err());
    }

    #[test]
    fn heptagon_period() {
        let (u, d, t) = heptagon_diagonals();
        let tr = generalized_euclid(&[t, d, u], 12, 1e-12).unwrap();
        let p = tr.period.expect("periodic");
        assert_eq!(p.label, "ABCB");
        assert!((p.scale - (u * u) / (t * t)).abs() < 1e-10);
    }

    #[test]
    fn hermite_logs() {
        let v: Vec<f64> = [2.0f64, 3.0, 5.0, 7.0].iter().map(|x| x.ln()).collect();
        let tr = generalized_euclid(&v, 60, 1e-12).unwrap();
        assert!(tr.find_column(&[171, 271, 397, 480]).is_some());
    }
}
