//! Bezier evaluation and subdivision by repeated barycentric combination,
//! finite-difference tabulation, the sine recurrence, and focal splines.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

pub type Point<S> = Vec<S>;

/// Bezier control points over the parameter interval `[t0, t1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlPolygon<S> {
    pub points: Vec<Point<S>>,
    pub t0: S,
    pub t1: S,
}

pub(crate) fn lerp<S: Scalar>(a: &[S], b: &[S], alpha: &S) -> Point<S> {
    let beta = S::one() - alpha.clone();
    a.iter().zip(b).map(|(x, y)| beta.clone() * x.clone() + alpha.clone() * y.clone()).collect()
}

impl<S: Scalar> ControlPolygon<S> {
    pub fn new(points: Vec<Point<S>>, t0: S, t1: S) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Domain("control polygon needs at least one point".into()));
        }
        let d = points[0].len();
        if points.iter().any(|p| p.len() != d) {
            return Err(Error::Domain("control points differ in dimension".into()));
        }
        if !(t0 < t1) {
            return Err(Error::Domain("interval must satisfy t0 < t1".into()));
        }
        Ok(Self { points, t0, t1 })
    }

    /// Polygon on the unit interval.
    pub fn unit(points: Vec<Point<S>>) -> Result<Self> {
        Self::new(points, S::zero(), S::one())
    }

    pub fn degree(&self) -> usize {
        self.points.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn local(&self, t: &S) -> S {
        (t.clone() - self.t0.clone()) / (self.t1.clone() - self.t0.clone())
    }

    /// Full triangular scheme; row `r` holds the points of level `r`.
    pub fn triangle(&self, t: &S) -> Vec<Vec<Point<S>>> {
        let alpha = self.local(t);
        let mut rows = vec![self.points.clone()];
        while rows.last().map_or(0, Vec::len) > 1 {
            let prev = rows.last().unwrap();
            let next = prev.windows(2).map(|w| lerp(&w[0], &w[1], &alpha)).collect();
            rows.push(next);
        }
        rows
    }

    pub fn eval(&self, t: &S) -> Point<S> {
        let alpha = self.local(t);
        let mut pts = self.points.clone();
        for level in (1..pts.len()).rev() {
            for i in 0..level {
                pts[i] = lerp(&pts[i], &pts[i + 1], &alpha);
            }
        }
        pts.swap_remove(0)
    }

    pub fn subdivide(&self, t: &S) -> Result<(Self, Self)> {
        if !(self.t0 < *t && *t < self.t1) {
            return Err(Error::Domain("subdivision parameter must lie strictly inside the interval".into()));
        }
        let tri = self.triangle(t);
        let left = tri.iter().map(|row| row[0].clone()).collect();
        let right = tri.iter().rev().map(|row| row[row.len() - 1].clone()).collect();
        Ok((
            Self { points: left, t0: self.t0.clone(), t1: t.clone() },
            Self { points: right, t0: t.clone(), t1: self.t1.clone() },
        ))
    }

    /// Same curve written with one more control point.
    pub fn elevate(&self) -> Self {
        let n = self.degree();
        let np1 = S::from_i64(n as i64 + 1);
        let mut pts = vec![self.points[0].clone()];
        for i in 1..=n {
            let a = S::from_i64(i as i64) / np1.clone();
            pts.push(lerp(&self.points[i], &self.points[i - 1], &a));
        }
        pts.push(self.points[n].clone());
        Self { points: pts, t0: self.t0.clone(), t1: self.t1.clone() }
    }

    /// Values at `t0 + k*step` for `k = 0..count`, produced by additions only
    /// once the first `n + 1` values have been differenced.
    pub fn forward_difference_table(&self, step: &S, count: usize) -> Vec<Point<S>> {
        let n = self.degree();
        let seed: Vec<Point<S>> = (0..=n)
            .map(|k| self.eval(&(self.t0.clone() + S::from_i64(k as i64) * step.clone())))
            .collect();
        // diffs[j] = j-th forward difference at the current node
        let mut diffs = Vec::with_capacity(n + 1);
        let mut col = seed;
        while !col.is_empty() {
            diffs.push(col[0].clone());
            col = col.windows(2).map(|w| w[1].iter().zip(&w[0]).map(|(a, b)| a.clone() - b.clone()).collect()).collect();
        }
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(diffs[0].clone());
            for j in 0..n {
                let next = diffs[j + 1].clone();
                for (x, y) in diffs[j].iter_mut().zip(next) {
                    *x = x.clone() + y;
                }
            }
        }
        out
    }
}

/// `F_0 .. F_count` from `F_{n+1} = 2F_n - F_{n-1} - k F_n`, `F_0 = 0`, `F_1 = sin(phi)`,
/// with `k = 4 sin^2(phi/2)` supplied by the caller (exact when both are rational).
pub fn trig_table_with<S: Scalar>(sin_phi: S, k: S, count: usize) -> Vec<S> {
    let mut f = vec![S::zero(), sin_phi];
    let two = S::from_i64(2);
    while f.len() <= count {
        let n = f.len() - 1;
        let next = two.clone() * f[n].clone() - f[n - 1].clone() - k.clone() * f[n].clone();
        f.push(next);
    }
    f.truncate(count + 1);
    f
}

pub fn trig_table(phi: f64, count: usize) -> Vec<f64> {
    let h = (phi / 2.0).sin();
    trig_table_with(phi.sin(), 4.0 * h * h, count)
}

/// Focal fan: rays `(radius, angle)` seen from `focus`, angles strictly decreasing or increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalFan {
    pub focus: [f64; 2],
    pub rays: Vec<(f64, f64)>,
}

impl FocalFan {
    pub fn new(focus: [f64; 2], rays: Vec<(f64, f64)>) -> Result<Self> {
        if rays.is_empty() || rays.iter().any(|r| !(r.0 > 0.0)) {
            return Err(Error::Domain("focal fan needs positive radii".into()));
        }
        for w in rays.windows(2) {
            let gap = (w[0].1 - w[1].1).abs();
            if !(gap > 0.0 && gap < std::f64::consts::PI) {
                return Err(Error::DegenerateFan(gap));
            }
        }
        Ok(Self { focus, rays })
    }

    pub fn to_cartesian(&self, ray: (f64, f64)) -> [f64; 2] {
        [self.focus[0] + ray.0 * ray.1.cos(), self.focus[1] + ray.0 * ray.1.sin()]
    }
}

/// One angular step between `(rho0, phi0)` and `(rho1, phi1)`: the new ray lies `tau`
/// away from ray 0 and `sigma` away from ray 1, on the segment joining the two points.
pub fn focal_step(r0: (f64, f64), r1: (f64, f64), sigma: f64, tau: f64) -> Result<(f64, f64)> {
    let total = sigma + tau;
    let s = total.sin();
    if !(total.abs() > 0.0 && total.abs() < std::f64::consts::PI) {
        return Err(Error::DegenerateFan(total));
    }
    let inv = (1.0 / r0.0) * sigma.sin() / s + (1.0 / r1.0) * tau.sin() / s;
    let dir = if r0.1 >= r1.1 { 1.0 } else { -1.0 };
    Ok((1.0 / inv, r0.1 - dir * tau))
}

/// Triangular focal recursion; each level splits every gap with `tau = u*gap`.
/// For `n = 2` and equal gaps the result traces a conic with a focus at the fan focus.
pub fn focal_eval(fan: &FocalFan, u: f64) -> Result<(f64, f64)> {
    let mut rays = fan.rays.clone();
    while rays.len() > 1 {
        rays = rays
            .windows(2)
            .map(|w| {
                let gap = (w[0].1 - w[1].1).abs();
                focal_step(w[0], w[1], (1.0 - u) * gap, u * gap)
            })
            .collect::<Result<_>>()?;
    }
    Ok(rays[0])
}

/// Distance of the control points from the chord, the usual flatness measure.
pub fn flatness(poly: &ControlPolygon<f64>) -> f64 {
    let a = &poly.points[0];
    let b = &poly.points[poly.degree()];
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len = dx.hypot(dy);
    poly.points
        .iter()
        .map(|p| {
            if len == 0.0 {
                (p[0] - a[0]).hypot(p[1] - a[1])
            } else {
                ((p[0] - a[0]) * dy - (p[1] - a[1]) * dx).abs() / len
            }
        })
        .fold(0.0, f64::max)
}

/// Planar curve as a list of cubic pieces, subdividing at midpoints until every
/// piece is flat within `tol`. Degrees up to 3 are represented exactly.
pub fn cubic_segments(poly: &ControlPolygon<f64>, tol: f64) -> Vec<[[f64; 2]; 4]> {
    fn as_cubic(p: &ControlPolygon<f64>) -> [[f64; 2]; 4] {
        let mut q = p.clone();
        while q.degree() < 3 {
            q = q.elevate();
        }
        if q.degree() == 3 {
            let c = |i: usize| [q.points[i][0], q.points[i][1]];
            return [c(0), c(1), c(2), c(3)];
        }
        // Hermite cubic with matching end tangents for higher degrees.
        let n = q.degree() as f64;
        let pts = &q.points;
        let last = pts.len() - 1;
        let d0 = [n * (pts[1][0] - pts[0][0]), n * (pts[1][1] - pts[0][1])];
        let d1 = [n * (pts[last][0] - pts[last - 1][0]), n * (pts[last][1] - pts[last - 1][1])];
        [
            [pts[0][0], pts[0][1]],
            [pts[0][0] + d0[0] / 3.0, pts[0][1] + d0[1] / 3.0],
            [pts[last][0] - d1[0] / 3.0, pts[last][1] - d1[1] / 3.0],
            [pts[last][0], pts[last][1]],
        ]
    }
    fn rec(p: &ControlPolygon<f64>, tol: f64, depth: u32, out: &mut Vec<[[f64; 2]; 4]>) {
        if p.degree() <= 3 || flatness(p) <= tol || depth >= 24 {
            out.push(as_cubic(p));
            return;
        }
        let mid = 0.5 * (p.t0 + p.t1);
        let (l, r) = p.subdivide(&mid).expect("midpoint is interior");
        rec(&l, tol, depth + 1, out);
        rec(&r, tol, depth + 1, out);
    }
    let mut out = Vec::new();
    rec(poly, tol.max(f64::EPSILON), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn ipts(v: &[(i64, i64)]) -> Vec<Point<Rational>> {
        v.iter().map(|&(x, y)| vec![int(x), int(y)]).collect()
    }

    fn cubic() -> ControlPolygon<Rational> {
        ControlPolygon::unit(ipts(&[(0, 0), (1, 3), (3, 3), (4, 0)])).unwrap()
    }

    fn binom(n: u64, k: u64) -> i64 {
        (1..=k).fold(1u64, |acc, i| acc * (n + 1 - i) / i) as i64
    }

    fn bernstein_sum(poly: &ControlPolygon<Rational>, t: &Rational) -> Point<Rational> {
        let n = poly.degree();
        let a = poly.local(t);
        let mut out = vec![int(0); poly.dim()];
        for (i, p) in poly.points.iter().enumerate() {
            let w = int(binom(n as u64, i as u64))
                * num_traits::pow(a.clone(), i)
                * num_traits::pow(int(1) - a.clone(), n - i);
            for (o, x) in out.iter_mut().zip(p) {
                *o += w.clone() * x;
            }
        }
        out
    }

    #[test]
    fn linear_midpoint() {
        let p = ControlPolygon::unit(ipts(&[(0, 0), (2, 4)])).unwrap();
        assert_eq!(p.eval(&rat(1, 2)), vec![int(1), int(2)]);
    }

    #[test]
    fn cubic_half_matches_bernstein() {
        let c = cubic();
        assert_eq!(c.eval(&rat(1, 2)), vec![int(2), rat(9, 4)]);
        for k in -3..=13 {
            let t = rat(k, 10);
            assert_eq!(c.eval(&t), bernstein_sum(&c, &t));
        }
        assert_eq!(c.eval(&int(0)), c.points[0]);
        assert_eq!(c.eval(&int(1)), c.points[3]);
    }

    #[test]
    fn subdivision_matches_parent() {
        let c = cubic();
        let (l, r) = c.subdivide(&rat(1, 2)).unwrap();
        for k in 0..=100 {
            let t = rat(k, 100);
            let child = if t <= rat(1, 2) { &l } else { &r };
            assert_eq!(child.eval(&t), c.eval(&t));
        }
        let line = ControlPolygon::unit(ipts(&[(0, 0), (2, 4)])).unwrap();
        let (l, r) = line.subdivide(&rat(1, 2)).unwrap();
        assert_eq!(l.points, ipts(&[(0, 0), (1, 2)]));
        assert_eq!(r.points, ipts(&[(1, 2), (2, 4)]));
        assert!(c.subdivide(&int(0)).is_err());
        assert!(c.subdivide(&int(2)).is_err());
    }

    #[test]
    fn subdivision_keeps_end_tangents() {
        let c = cubic();
        let (l, r) = c.subdivide(&rat(1, 3)).unwrap();
        let cross = |a: &[Rational], b: &[Rational], c: &[Rational], d: &[Rational]| {
            (b[0].clone() - &a[0]) * (d[1].clone() - &c[1]) - (b[1].clone() - &a[1]) * (d[0].clone() - &c[0])
        };
        assert_eq!(cross(&c.points[0], &c.points[1], &l.points[0], &l.points[1]), int(0));
        assert_eq!(cross(&c.points[2], &c.points[3], &r.points[2], &r.points[3]), int(0));
        // tangents at the split point agree from both sides
        assert_eq!(cross(&l.points[2], &l.points[3], &r.points[0], &r.points[1]), int(0));
    }

    #[test]
    fn forward_differences() {
        let c = cubic();
        let tab = c.forward_difference_table(&rat(1, 10), 11);
        for (k, p) in tab.iter().enumerate() {
            assert_eq!(*p, c.eval(&rat(k as i64, 10)));
        }
        let sq = ControlPolygon::new(vec![vec![int(0)], vec![int(0)], vec![int(1)]], int(0), int(1)).unwrap();
        let tab = sq.forward_difference_table(&int(1), 5);
        assert_eq!(tab, (0..5).map(|k| vec![int(k * k)]).collect::<Vec<_>>());
        let constant = ControlPolygon::unit(vec![vec![int(7)]]).unwrap();
        assert_eq!(constant.forward_difference_table(&int(1), 3), vec![vec![int(7)]; 3]);
    }

    #[test]
    fn elevation_preserves_curve() {
        let c = cubic();
        let e = c.elevate();
        for k in 0..=10 {
            assert_eq!(e.eval(&rat(k, 10)), c.eval(&rat(k, 10)));
        }
    }

    #[test]
    fn trig_recurrence() {
        let f = trig_table(std::f64::consts::PI / 6.0, 3);
        assert_eq!(f[0], 0.0);
        assert!((f[3] - 1.0).abs() < 1e-12);
        let exact = trig_table_with(int(1), int(2), 8);
        assert_eq!(exact, [0, 1, 0, -1, 0, 1, 0, -1, 0].iter().map(|&v| int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn focal_examples() {
        let r = focal_step((2.0, 1.0), (3.0, 0.5), 0.5, 0.0).unwrap();
        assert!((r.0 - 2.0).abs() < 1e-15 && (r.1 - 1.0).abs() < 1e-15);
        let pi6 = std::f64::consts::PI / 6.0;
        let r = focal_step((1.0, 2.0 * pi6), (1.0, 0.0), pi6, pi6).unwrap();
        assert!((r.0 - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((r.1 - pi6).abs() < 1e-15);
        assert!(focal_step((1.0, 0.0), (1.0, -4.0), 2.0, 2.0).is_err());
    }

    #[test]
    fn focal_endpoints_and_two_rays() {
        let fan = FocalFan::new([0.0, 0.0], vec![(1.0, 1.2), (1.5, 0.5), (0.8, -0.2)]).unwrap();
        let a = focal_eval(&fan, 0.0).unwrap();
        let b = focal_eval(&fan, 1.0).unwrap();
        assert!((a.0 - 1.0).abs() < 1e-14 && (a.1 - 1.2).abs() < 1e-14);
        assert!((b.0 - 0.8).abs() < 1e-14 && (b.1 + 0.2).abs() < 1e-14);
        let two = FocalFan::new([0.0, 0.0], vec![(1.0, 1.2), (1.5, 0.5)]).unwrap();
        let u = 0.3;
        let direct = focal_step((1.0, 1.2), (1.5, 0.5), 0.7 * 0.7, 0.3 * 0.7).unwrap();
        assert_eq!(focal_eval(&two, u).unwrap(), direct);
    }

    #[test]
    fn two_ray_step_stays_on_segment() {
        let fan = FocalFan::new([0.5, -0.25], vec![(1.0, 1.2), (1.5, 0.5)]).unwrap();
        let p0 = fan.to_cartesian(fan.rays[0]);
        let p1 = fan.to_cartesian(fan.rays[1]);
        for k in 0..=10 {
            let p = fan.to_cartesian(focal_eval(&fan, k as f64 / 10.0).unwrap());
            let cross = (p[0] - p0[0]) * (p1[1] - p0[1]) - (p[1] - p0[1]) * (p1[0] - p0[0]);
            assert!(cross.abs() < 1e-13);
        }
    }

    #[test]
    fn three_ray_equal_gaps_is_focal_conic() {
        let fan = FocalFan::new([0.0, 0.0], vec![(1.0, 1.2), (1.5, 0.5), (0.8, -0.2)]).unwrap();
        // conic 1/rho = a + b cos + c sin fitted through three curve points
        let pts: Vec<(f64, f64)> = [0.0, 0.5, 1.0].iter().map(|&u| focal_eval(&fan, u).unwrap()).collect();
        let m: Vec<[f64; 4]> = pts.iter().map(|&(r, a)| [1.0, a.cos(), a.sin(), 1.0 / r]).collect();
        let coef = solve3(&m);
        for k in 0..=20 {
            let (r, a) = focal_eval(&fan, k as f64 / 20.0).unwrap();
            let p = coef[0] + coef[1] * a.cos() + coef[2] * a.sin();
            assert!((1.0 / p - r).abs() < 1e-9, "point {k} off the conic");
        }
    }

    fn solve3(m: &[[f64; 4]]) -> [f64; 3] {
        let mut a = m.to_vec();
        for c in 0..3 {
            let p = (c..3).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
            a.swap(c, p);
            for r in 0..3 {
                if r != c {
                    let f = a[r][c] / a[c][c];
                    for k in 0..4 {
                        a[r][k] -= f * a[c][k];
                    }
                }
            }
        }
        [a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]]
    }

    #[test]
    fn cubic_segments_reproduce_cubic() {
        let c = ControlPolygon::unit(vec![vec![0.0, 0.0], vec![1.0, 3.0], vec![3.0, 3.0], vec![4.0, 0.0]]).unwrap();
        let segs = cubic_segments(&c, 0.1);
        assert_eq!(segs.len(), 1);
        let q = ControlPolygon::unit((0..6).map(|i| vec![i as f64, ((i * i) % 5) as f64]).collect()).unwrap();
        let segs = cubic_segments(&q, 0.01);
        assert!(segs.len() > 1);
        assert_eq!(segs[0][0], [0.0, 0.0]);
        assert_eq!(segs.last().unwrap()[3], [5.0, 0.0]);
    }
}
