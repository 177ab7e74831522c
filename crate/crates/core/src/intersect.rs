//! Root ladders for `f(x) = -a0 + a1 x + a2 x^2 + ...` near the origin, and the
//! polar iteration for a common point of two conics.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::mat::Matrix;

/// Ladder approximations `x_1..x_order`. Step `i` truncates after `a_i` and replaces
/// the powers of `x` by earlier rungs: `a0 = (a1 + (a2 + (... + a_i x_1) ...) x_{i-1}) x`.
/// `coeffs[0]` is `a0` with the sign convention above.
pub fn root_ladder<S: Scalar>(coeffs: &[S], order: usize) -> Result<Vec<S>> {
    if coeffs.len() < 2 || coeffs[1].is_zero() {
        return Err(Error::LadderBreakdown(1));
    }
    let a = |k: usize| coeffs.get(k).cloned().unwrap_or_else(S::zero);
    let mut xs: Vec<S> = Vec::with_capacity(order);
    for i in 1..=order {
        let mut inner = a(i);
        for k in (1..i).rev() {
            inner = a(k) + inner * xs[i - k - 1].clone();
        }
        if inner.is_zero() {
            return Err(Error::LadderBreakdown(i));
        }
        xs.push(a(0) / inner);
    }
    Ok(xs)
}

/// Symmetric 3x3 matrix of `a x^2 + 2f xy + b y^2 + 2e xz + 2d yz + c z^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Conic<S> {
    pub matrix: Matrix<S>,
}

impl<S: Scalar> Conic<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != 3 || matrix.cols() != 3 || !matrix.is_symmetric() {
            return Err(Error::Domain("conic matrix must be symmetric 3x3".into()));
        }
        if matrix.to_rows().iter().flatten().all(|x| x.is_zero()) {
            return Err(Error::Domain("zero conic".into()));
        }
        Ok(Self { matrix })
    }

    /// From `a x^2 + 2f xy + b y^2 + 2e x + 2d y + c`, arguments in order `a b c d e f`.
    pub fn from_coefficients(a: S, b: S, c: S, d: S, e: S, f: S) -> Result<Self> {
        Self::new(Matrix::from_rows(vec![
            vec![a, f.clone(), e.clone()],
            vec![f, b, d.clone()],
            vec![e, d, c],
        ]))
    }

    /// `M^t F M`.
    pub fn eval(&self, m: &[S]) -> S {
        dot(m, &self.matrix.apply(m))
    }
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn cross<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Scales a homogeneous vector so that its largest-magnitude coordinate is `+1`.
pub fn normalize<S: Scalar>(v: &[S]) -> Result<Vec<S>> {
    let mut best = S::zero();
    for x in v {
        if x.abs_val() > best.abs_val() {
            best = x.clone();
        }
    }
    if best.is_zero() {
        return Err(Error::Degenerate("zero homogeneous vector".into()));
    }
    Ok(v.iter().map(|x| x.clone() / best.clone()).collect())
}

/// Polar line `F M` of the point `M`.
pub fn polar_line<S: Scalar>(conic: &Conic<S>, m: &[S]) -> Result<Vec<S>> {
    let line = conic.matrix.apply(m);
    if line.iter().all(|x| x.is_zero()) {
        return Err(Error::Degenerate("point lies in the kernel of the conic".into()));
    }
    Ok(line)
}

fn meet<S: Scalar>(a: &[S], b: &[S]) -> Result<Vec<S>> {
    normalize(&cross(a, b)).map_err(|_| Error::Degenerate("coincident polar lines".into()))
}

/// One polar step from `M`: conjugate point `P = FM ^ GM` and the improved point
/// `I = FM ^ GP + FP ^ GM`, each summand normalized before adding.
pub fn intersect_step<S: Scalar>(f: &Conic<S>, g: &Conic<S>, m: &[S]) -> Result<(Vec<S>, Vec<S>)> {
    let (fm, gm) = (polar_line(f, m)?, polar_line(g, m)?);
    let p = meet(&fm, &gm)?;
    let (fp, gp) = (polar_line(f, &p)?, polar_line(g, &p)?);
    let a = meet(&fm, &gp)?;
    let b = meet(&fp, &gm)?;
    let sum: Vec<S> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
    let i = normalize(&sum).map_err(|_| Error::Degenerate("opposite polar intersections".into()))?;
    Ok((p, i))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Iteration<S> {
    /// `M, I, Omega, ...`, one entry per step, normalized.
    pub points: Vec<Vec<S>>,
    pub converged: bool,
}

impl<S: Scalar> Iteration<S> {
    pub fn last(&self) -> &[S] {
        self.points.last().expect("iteration holds the start point")
    }
}

/// `|M^t F M| + |M^t G M|` at the unit-max normalization of `m`.
pub fn residual<S: Scalar>(f: &Conic<S>, g: &Conic<S>, m: &[S]) -> f64 {
    match normalize(m) {
        Ok(m) => f.eval(&m).to_f64().abs() + g.eval(&m).to_f64().abs(),
        Err(_) => f64::INFINITY,
    }
}

/// `cycles` outer cycles of two steps each (`M -> I -> Omega`). Stops early once the
/// residual is below `tol`; the status records whether that happened.
pub fn intersect_iterate<S: Scalar>(f: &Conic<S>, g: &Conic<S>, m0: &[S], cycles: usize, tol: f64) -> Result<Iteration<S>> {
    let mut points = vec![normalize(m0)?];
    if residual(f, g, &points[0]) <= tol {
        return Ok(Iteration { points, converged: true });
    }
    for _ in 0..2 * cycles {
        let (_, next) = intersect_step(f, g, points.last().unwrap())?;
        let done = residual(f, g, &next) <= tol;
        points.push(next);
        if done {
            return Ok(Iteration { points, converged: true });
        }
    }
    Ok(Iteration { points, converged: false })
}

/// Affine image of a homogeneous point.
pub fn dehomogenize(m: &[f64]) -> Result<[f64; 2]> {
    if m[2] == 0.0 {
        return Err(Error::Domain("point at infinity".into()));
    }
    Ok([m[0] / m[2], m[1] / m[2]])
}

/// Sequential sweeps for three quadrics in three unknowns. Quadric `k` is expanded
/// along coordinate `k` at the current point, `q(x + t e_k) = q + 2 (F X)_k t + F_kk t^2`,
/// and its root ladder of the given order updates that coordinate.
pub fn quadric_sweep(quadrics: &[Matrix<f64>; 3], x0: [f64; 3], order: usize, sweeps: usize) -> Result<Vec<[f64; 3]>> {
    for q in quadrics {
        if q.rows() != 4 || q.cols() != 4 || !q.is_symmetric() {
            return Err(Error::Domain("quadric matrix must be symmetric 4x4".into()));
        }
    }
    let mut x = x0;
    let mut out = vec![x];
    for _ in 0..sweeps {
        for (k, q) in quadrics.iter().enumerate() {
            let hx = [x[0], x[1], x[2], 1.0];
            let fx = q.apply(&hx);
            let a0 = -dot(&hx, &fx);
            let series = [a0, 2.0 * fx[k], *q.get(k, k)];
            let step = root_ladder(&series, order)?;
            x[k] += step[order - 1];
        }
        out.push(x);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn ladder_examples() {
        // f = -2 + 3x + x^2
        let xs = root_ladder(&ints(&[2, 3, 1]), 3).unwrap();
        assert_eq!(xs[0], rat(2, 3));
        assert_eq!(xs[1], rat(6, 11));
        let root = (-3.0 + 17f64.sqrt()) / 2.0;
        let e1 = (xs[0].to_f64() - root).abs();
        let e2 = (xs[1].to_f64() - root).abs();
        assert!(e2 < e1);
        let zero = root_ladder(&ints(&[0, 1, 5, 7]), 4).unwrap();
        assert!(zero.iter().all(|x| x == &int(0)));
        let lin = root_ladder(&ints(&[3, 4]), 3).unwrap();
        assert!(lin.iter().all(|x| x == &rat(3, 4)));
        assert!(root_ladder(&ints(&[1, 0, 1]), 2).is_err());
    }

    #[test]
    fn third_rung_nesting() {
        // x3 = a0 / (a1 + (a2 + a3 x1) x2)
        let a = [2.0, 5.0, 1.0, 0.5];
        let xs = root_ladder(&a, 3).unwrap();
        let x1 = 2.0 / 5.0;
        let x2 = 2.0 / (5.0 + 1.0 * x1);
        assert_eq!(xs[2], 2.0 / (5.0 + (1.0 + 0.5 * x1) * x2));
    }

    fn unit_circle() -> Conic<f64> {
        Conic::from_coefficients(1.0, 1.0, -1.0, 0.0, 0.0, 0.0).unwrap()
    }

    fn shifted_circle() -> Conic<f64> {
        // (x-1)^2 + y^2 - 1 = x^2 - 2x + y^2
        Conic::from_coefficients(1.0, 1.0, 0.0, 0.0, -1.0, 0.0).unwrap()
    }

    #[test]
    fn polars() {
        let c = unit_circle();
        assert_eq!(polar_line(&c, &[1.0, 0.0, 1.0]).unwrap(), vec![1.0, 0.0, -1.0]);
        let centre = polar_line(&c, &[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(&centre[..2], &[0.0, 0.0]);
        let degenerate = Conic::from_coefficients(1.0, 0.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        assert!(polar_line(&degenerate, &[0.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn step_improves() {
        let (f, g) = (unit_circle(), shifted_circle());
        let root = [0.5, 3f64.sqrt() / 2.0];
        let m = [0.5, 0.9, 1.0];
        let e0 = (0.9 - root[1]).abs();
        let (_, i) = intersect_step(&f, &g, &m).unwrap();
        let p = dehomogenize(&i).unwrap();
        let e1 = ((p[0] - root[0]).powi(2) + (p[1] - root[1]).powi(2)).sqrt();
        assert!(e1 < e0);
        assert!(e1 < 10.0 * e0 * e0);
    }

    #[test]
    fn root_is_fixed() {
        let f = Conic::from_coefficients(int(1), int(1), int(-25), int(0), int(0), int(0)).unwrap();
        // x^2 + y^2 = 25 and (x-3)^2 + y^2 = 16 meet at (3, 4)
        let g = Conic::from_coefficients(int(1), int(1), int(-7), int(0), int(-3), int(0)).unwrap();
        let m = ints(&[3, 4, 1]);
        assert_eq!(f.eval(&m), int(0));
        assert_eq!(g.eval(&m), int(0));
        let (p, i) = intersect_step(&f, &g, &m).unwrap();
        let n = normalize(&m).unwrap();
        assert_eq!(p, n);
        assert_eq!(i, n);
    }

    #[test]
    fn iterate_unit_circles() {
        let (f, g) = (unit_circle(), shifted_circle());
        let it = intersect_iterate(&f, &g, &[0.4, 0.8, 1.0], 3, 1e-14).unwrap();
        assert!(it.converged);
        let p = dehomogenize(it.last()).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-12);
        assert!((p[1] - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn disjoint_conics_do_not_converge() {
        let f = unit_circle();
        // circle of radius 1 centred at (5, 0)
        let g = Conic::from_coefficients(1.0, 1.0, 24.0, 0.0, -5.0, 0.0).unwrap();
        match intersect_iterate(&f, &g, &[2.5, 0.5, 1.0], 10, 1e-12) {
            Ok(it) => assert!(!it.converged),
            Err(e) => assert!(matches!(e, Error::Degenerate(_))),
        }
    }

    #[test]
    fn quadric_sweep_converges() {
        // x^2 + 4x + yz - 6, y^2 + 4y + xz - 6, z^2 + 4z + xy - 6 share (1, 1, 1)
        let q = |k: usize| {
            let mut m = Matrix::zeros(4, 4);
            m.set(k, k, 1.0);
            m.set(k, 3, 2.0);
            m.set(3, k, 2.0);
            let (a, b) = ((k + 1) % 3, (k + 2) % 3);
            m.set(a, b, 0.5);
            m.set(b, a, 0.5);
            m.set(3, 3, -6.0);
            m
        };
        let xs = quadric_sweep(&[q(0), q(1), q(2)], [0.7, 1.2, 0.9], 2, 12).unwrap();
        let last = xs.last().unwrap();
        assert!(last.iter().all(|v| (v - 1.0).abs() < 1e-10), "{last:?}");
    }
}
