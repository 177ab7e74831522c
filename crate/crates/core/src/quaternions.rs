//! Matrix quaternions and anti-quaternions, their products, rotations, the
//! tetragonal transformation and the factorisation of its rank-one images.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::mat::Matrix;

/// Four scalars `(t, x, y, z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec4<S> {
    pub t: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Vec4<S> {
    pub fn new(t: S, x: S, y: S, z: S) -> Self {
        Self { t, x, y, z }
    }

    pub fn from_i64(t: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(S::from_i64(t), S::from_i64(x), S::from_i64(y), S::from_i64(z))
    }

    pub fn from_slice(v: &[S]) -> Result<Self> {
        match v {
            [t, x, y, z] => Ok(Self::new(t.clone(), x.clone(), y.clone(), z.clone())),
            _ => Err(Error::Arity { expected: 4, got: v.len() }),
        }
    }

    pub fn to_vec(&self) -> Vec<S> {
        vec![self.t.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// `t^2 + x^2 + y^2 + z^2`.
    pub fn norm(&self) -> S {
        self.to_vec().into_iter().fold(S::zero(), |acc, c| acc + c.clone() * c)
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.t.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Hamilton product `self * other` with `ij = k`.
    pub fn hamilton(&self, o: &Self) -> Self {
        let (a, b) = (self, o);
        let c = |p: &S, q: &S| p.clone() * q.clone();
        Self::new(
            c(&a.t, &b.t) - c(&a.x, &b.x) - c(&a.y, &b.y) - c(&a.z, &b.z),
            c(&a.t, &b.x) + c(&a.x, &b.t) + c(&a.y, &b.z) - c(&a.z, &b.y),
            c(&a.t, &b.y) - c(&a.x, &b.z) + c(&a.y, &b.t) + c(&a.z, &b.x),
            c(&a.t, &b.z) + c(&a.x, &b.y) - c(&a.y, &b.x) + c(&a.z, &b.t),
        )
    }
}

/// Matrix quaternion `Q = [q qi qj qk]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuatMatrix<S> {
    pub q: Vec4<S>,
}

/// Anti-quaternion `Q* = v Q v`, rows `q^t, iq^t, jq^t, kq^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiQuatMatrix<S> {
    pub q: Vec4<S>,
}

pub fn quat<S: Scalar>(t: S, x: S, y: S, z: S) -> QuatMatrix<S> {
    QuatMatrix { q: Vec4::new(t, x, y, z) }
}

pub fn anti<S: Scalar>(t: S, x: S, y: S, z: S) -> AntiQuatMatrix<S> {
    AntiQuatMatrix { q: Vec4::new(t, x, y, z) }
}

impl<S: Scalar> QuatMatrix<S> {
    pub fn matrix(&self) -> Matrix<S> {
        let Vec4 { t, x, y, z } = self.q.clone();
        Matrix::from_rows(vec![
            vec![t.clone(), -x.clone(), -y.clone(), -z.clone()],
            vec![x.clone(), t.clone(), -z.clone(), y.clone()],
            vec![y.clone(), z.clone(), t.clone(), -x.clone()],
            vec![z, -y, x, t],
        ])
    }

    pub fn norm(&self) -> S {
        self.q.norm()
    }

    pub fn anti(&self) -> AntiQuatMatrix<S> {
        AntiQuatMatrix { q: self.q.clone() }
    }

    /// `Q^t`, the conjugate quaternion; not the anti-quaternion.
    pub fn transposed(&self) -> QuatMatrix<S> {
        QuatMatrix { q: self.q.conjugate() }
    }
}

impl<S: Scalar> AntiQuatMatrix<S> {
    pub fn matrix(&self) -> Matrix<S> {
        let Vec4 { t, x, y, z } = self.q.clone();
        Matrix::from_rows(vec![
            vec![t.clone(), x.clone(), y.clone(), z.clone()],
            vec![-x.clone(), t.clone(), -z.clone(), y.clone()],
            vec![-y.clone(), z.clone(), t.clone(), -x.clone()],
            vec![-z, -y, x, t],
        ])
    }

    pub fn norm(&self) -> S {
        self.q.norm()
    }

    pub fn quat(&self) -> QuatMatrix<S> {
        QuatMatrix { q: self.q.clone() }
    }
}

/// `diag(-1, 1, 1, 1)`.
pub fn v_matrix<S: Scalar>() -> Matrix<S> {
    Matrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 0) => -S::one(),
        (i, j) if i == j => S::one(),
        _ => S::zero(),
    })
}

pub fn mul_qq<S: Scalar>(a: &QuatMatrix<S>, b: &QuatMatrix<S>) -> QuatMatrix<S> {
    QuatMatrix { q: a.q.hamilton(&b.q) }
}

/// The first row of `A1 A2` carries `(K, L, M, N)`.
pub fn mul_aa<S: Scalar>(a: &AntiQuatMatrix<S>, b: &AntiQuatMatrix<S>) -> AntiQuatMatrix<S> {
    let p = a.matrix().mul(&b.matrix());
    AntiQuatMatrix { q: Vec4::from_slice(p.row(0)).expect("4x4 product") }
}

/// `Q A`, equal to `A Q`.
pub fn mul_qa<S: Scalar>(q: &QuatMatrix<S>, a: &AntiQuatMatrix<S>) -> Matrix<S> {
    q.matrix().mul(&a.matrix())
}

/// `Q Q* / n`.
pub fn rotation<S: Scalar>(q: &QuatMatrix<S>) -> Result<Matrix<S>> {
    let n = q.norm();
    if n.is_zero() {
        return Err(Error::Domain("zero quaternion has no rotation".into()));
    }
    Ok(mul_qa(q, &q.anti()).map(|e| e.clone() / n.clone()))
}

/// Rotates `v` about the axis `(a, b, c)` of `q = (d, a, b, c)`.
pub fn rotate_vector<S: Scalar>(q: &QuatMatrix<S>, v: &[S; 3]) -> Result<[S; 3]> {
    let r = rotation(q)?;
    let out = r.apply(&[S::zero(), v[0].clone(), v[1].clone(), v[2].clone()]);
    Ok([out[1].clone(), out[2].clone(), out[3].clone()])
}

/// Tetragonal transformation with its factor 1/2; it is an involution, `T(T(A)) = A`.
pub fn tetragonal<S: Scalar>(a: &Matrix<S>) -> Matrix<S> {
    assert!(a.rows() == 4 && a.cols() == 4, "tetragonal needs a 4x4 matrix");
    let e = |i: usize, j: usize| a.get(i, j).clone();
    // each entry is a signed sum of one element from each of four positions
    let table: [[[(usize, usize, i8); 4]; 4]; 4] = [
        [
            [(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)],
            [(0, 1, 1), (1, 0, -1), (2, 3, -1), (3, 2, 1)],
            [(0, 2, 1), (1, 3, 1), (2, 0, -1), (3, 1, -1)],
            [(0, 3, 1), (1, 2, -1), (2, 1, 1), (3, 0, -1)],
        ],
        [
            [(0, 1, -1), (1, 0, 1), (2, 3, -1), (3, 2, 1)],
            [(0, 0, 1), (1, 1, 1), (2, 2, -1), (3, 3, -1)],
            [(0, 3, -1), (1, 2, 1), (2, 1, 1), (3, 0, -1)],
            [(0, 2, 1), (1, 3, 1), (2, 0, 1), (3, 1, 1)],
        ],
        [
            [(0, 2, -1), (1, 3, 1), (2, 0, 1), (3, 1, -1)],
            [(0, 3, 1), (1, 2, 1), (2, 1, 1), (3, 0, 1)],
            [(0, 0, 1), (1, 1, -1), (2, 2, 1), (3, 3, -1)],
            [(0, 1, -1), (1, 0, -1), (2, 3, 1), (3, 2, 1)],
        ],
        [
            [(0, 3, -1), (1, 2, -1), (2, 1, 1), (3, 0, 1)],
            [(0, 2, -1), (1, 3, 1), (2, 0, -1), (3, 1, 1)],
            [(0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, 1)],
            [(0, 0, 1), (1, 1, -1), (2, 2, -1), (3, 3, 1)],
        ],
    ];
    let two = S::from_i64(2);
    Matrix::from_fn(4, 4, |i, j| {
        let sum = table[i][j].iter().fold(S::zero(), |acc, &(r, c, sign)| {
            if sign > 0 {
                acc + e(r, c)
            } else {
                acc - e(r, c)
            }
        });
        sum / two.clone()
    })
}

/// Factors `(q1, q2)` with `A = mul_qa(quat(q2), anti(q1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub q1: Vec4<Rational>,
    pub q2: Vec4<Rational>,
}

fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Integer vector proportional to `v` with coprime entries, first nonzero entry positive.
fn primitive(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * Rational::from(lcm.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    ints.into_iter().map(|c| Rational::from(c / &g)).collect()
}

/// Splits a product of a matrix quaternion and an anti-quaternion into its factors.
pub fn decompose(a: &Matrix<Rational>) -> Result<Decomposition> {
    if a.rows() != 4 || a.cols() != 4 {
        return Err(Error::NotDecomposable);
    }
    let d = tetragonal(a).map(|e| e / Rational::from_i64(2));
    let (mut i0, mut j0) = (0, 0);
    for i in 0..4 {
        for j in 0..4 {
            if d.get(i, j).abs() > d.get(i0, j0).abs() {
                (i0, j0) = (i, j);
            }
        }
    }
    if d.get(i0, j0).is_zero() {
        return Err(Error::NotDecomposable);
    }
    let u = primitive(&d.col(j0));
    let w = primitive(d.row(i0));
    let s = d.get(i0, j0) / (&u[i0] * &w[j0]);
    let outer = Matrix::from_fn(4, 4, |i, j| &s * &u[i] * &w[j]);
    if outer != d {
        return Err(Error::NotDecomposable);
    }
    let nu: Rational = u.iter().map(|c| c * c).sum();
    let nw: Rational = w.iter().map(|c| c * c).sum();
    // balanced split alpha^2 |u|^2 = beta^2 |w|^2 with alpha beta = s
    let balanced = exact_sqrt(&(&nw / &nu))
        .and_then(|ratio| exact_sqrt(&(&s * ratio)))
        .map(|alpha| (&s / &alpha, alpha));
    let (beta, alpha) = balanced.unwrap_or((Rational::one(), s));
    let q2 = Vec4::from_slice(&u.iter().map(|c| c * &alpha).collect::<Vec<_>>())?;
    let q1 = Vec4::from_slice(&w.iter().map(|c| c * &beta).collect::<Vec<_>>())?;
    let back = mul_qa(&QuatMatrix { q: q2.clone() }, &AntiQuatMatrix { q: q1.clone() });
    if back != *a {
        return Err(Error::NotDecomposable);
    }
    Ok(Decomposition { q1, q2 })
}
