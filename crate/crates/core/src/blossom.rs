//! Polar forms (blossoms) and the index-reduction algorithms built on them:
//! de Casteljau, de Boor and Aitken-Neville.

use crate::decasteljau::{lerp, ControlPolygon, Point};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, Rational, Scalar};

/// `sigma_1..sigma_n` of the given values, via `s_i^n = s_i^{n-1} + x_n s_{i-1}^{n-1}`.
pub fn elementary_symmetric<S: Scalar>(values: &[S]) -> Vec<S> {
    let mut sig = vec![S::one()];
    for x in values {
        sig.push(S::zero());
        for i in (1..sig.len()).rev() {
            sig[i] = sig[i].clone() + x.clone() * sig[i - 1].clone();
        }
    }
    sig.remove(0);
    sig
}

/// Blossom of a monomial-form polynomial `sum c_k x^k` (low degree first) with `n` arguments:
/// each `x^k` becomes `sigma_k / C(n, k)`.
pub fn polar_monomial(coeffs: &[Rational], args: &[Rational]) -> Result<Rational> {
    let n = args.len();
    let deg = coeffs.iter().rposition(|c| *c != Rational::from_i64(0)).unwrap_or(0);
    if deg > n {
        return Err(Error::Domain(format!("degree {deg} exceeds {n} polar arguments")));
    }
    let sig = elementary_symmetric(args);
    let mut acc = coeffs.first().cloned().unwrap_or_else(|| Rational::from_i64(0));
    for (k, c) in coeffs.iter().enumerate().skip(1) {
        if k > n {
            break;
        }
        acc += c.clone() * sig[k - 1].clone() / Rational::from_integer(binomial(n, k));
    }
    Ok(acc)
}

/// Blossom of a Bezier curve: de Casteljau with a separate parameter per level.
pub fn blossom_eval<S: Scalar>(poly: &ControlPolygon<S>, args: &[S]) -> Result<Point<S>> {
    let n = poly.degree();
    if args.len() != n {
        return Err(Error::Arity { expected: n, got: args.len() });
    }
    let mut pts = poly.points.clone();
    for (level, t) in args.iter().enumerate() {
        let alpha = poly.local(t);
        for i in 0..n - level {
            pts[i] = lerp(&pts[i], &pts[i + 1], &alpha);
        }
    }
    Ok(pts.swap_remove(0))
}

/// Replaces the differing argument of two polar values: `t0` in `left`, `tn` in `right`, by `t`.
pub fn index_reduce<S: Scalar>(left: &[S], right: &[S], t0: &S, tn: &S, t: &S) -> Result<Point<S>> {
    if t0 == tn {
        return Err(Error::CoalescedKnots);
    }
    let alpha = (t.clone() - t0.clone()) / (tn.clone() - t0.clone());
    Ok(lerp(left, right, &alpha))
}

/// One node of a de Boor tableau: the polar value and its argument multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct TableauNode<S> {
    pub value: Point<S>,
    pub args: Vec<S>,
}

/// Full de Boor tableau for poles `b_0..b_n` over knots `u_0..u_{2n-1}`;
/// pole `b_i` is the polar value at `(u_i, .., u_{i+n-1})`.
pub fn de_boor_tableau<S: Scalar>(poles: &[Point<S>], knots: &[S], t: &S) -> Result<Vec<Vec<TableauNode<S>>>> {
    let n = poles.len().checked_sub(1).ok_or_else(|| Error::Domain("no poles".into()))?;
    if knots.len() != 2 * n {
        return Err(Error::Arity { expected: 2 * n, got: knots.len() });
    }
    if knots.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Domain("knots must be non-decreasing".into()));
    }
    if n > 0 && !(knots[n - 1] <= *t && *t <= knots[n]) {
        return Err(Error::Domain("parameter outside the central knot span".into()));
    }
    let mut rows = vec![poles
        .iter()
        .enumerate()
        .map(|(i, b)| TableauNode { value: b.clone(), args: knots[i..i + n].to_vec() })
        .collect::<Vec<_>>()];
    for r in 1..=n {
        let prev = rows.last().unwrap();
        let mut next = Vec::with_capacity(n + 1 - r);
        for i in 0..=n - r {
            let lo = &knots[i + r - 1];
            let hi = &knots[i + n];
            let value = index_reduce(&prev[i].value, &prev[i + 1].value, lo, hi, t)?;
            let mut args = knots[i + r..i + n].to_vec();
            args.extend(std::iter::repeat(t.clone()).take(r));
            next.push(TableauNode { value, args });
        }
        rows.push(next);
    }
    Ok(rows)
}

pub fn de_boor_eval<S: Scalar>(poles: &[Point<S>], knots: &[S], t: &S) -> Result<Point<S>> {
    let rows = de_boor_tableau(poles, knots, t)?;
    Ok(rows.last().unwrap()[0].value.clone())
}

/// Aitken-Neville interpolation through `(nodes[i], points[i])`.
pub fn aitken_eval<S: Scalar>(points: &[Point<S>], nodes: &[S], t: &S) -> Result<Point<S>> {
    if points.len() != nodes.len() || points.is_empty() {
        return Err(Error::Arity { expected: nodes.len(), got: points.len() });
    }
    for i in 0..nodes.len() {
        for j in 0..i {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNodes);
            }
        }
    }
    let mut a = points.to_vec();
    let n = a.len() - 1;
    for r in 1..=n {
        for i in 0..=n - r {
            let alpha = (t.clone() - nodes[i].clone()) / (nodes[i + r].clone() - nodes[i].clone());
            a[i] = lerp(&a[i], &a[i + 1], &alpha);
        }
    }
    Ok(a.swap_remove(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleKind {
    OnCurve,
    Progressive,
    Simple,
    Primitive,
}

/// Classifies a sorted index sequence of a polar value.
pub fn pole_classify<T: PartialEq>(seq: &[T]) -> PoleKind {
    let mut distinct: Vec<&T> = Vec::new();
    for x in seq {
        if !distinct.contains(&x) {
            distinct.push(x);
        }
    }
    match distinct.len() {
        1 => PoleKind::OnCurve,
        d if d == seq.len() => PoleKind::Progressive,
        2 => PoleKind::Simple,
        _ => PoleKind::Primitive,
    }
}
