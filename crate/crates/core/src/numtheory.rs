//! Ménéard's cube identities, the three-cube relation, Ramanujan's quadratic forms
//! and Euler's two-parameter cube family.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

fn cube(v: &BigInt) -> BigInt {
    v * v * v
}

/// `L1^3 - L2^3 = M^3 - 1 = R1^3 + R2^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeIdentity {
    pub l1: BigInt,
    pub l2: BigInt,
    pub m: BigInt,
    pub r1: BigInt,
    pub r2: BigInt,
}

impl CubeIdentity {
    pub fn holds(&self) -> bool {
        let mid = cube(&self.m) - BigInt::one();
        cube(&self.l1) - cube(&self.l2) == mid && cube(&self.r1) + cube(&self.r2) == mid
    }

    /// Three-cube form `L1^3 = R1^3 + L2^3 + R2^3`.
    pub fn sum_of_three_cubes(&self) -> bool {
        cube(&self.l1) == cube(&self.r1) + cube(&self.l2) + cube(&self.r2)
    }

    /// Common value of the three sides.
    pub fn value(&self) -> BigInt {
        cube(&self.m) - BigInt::one()
    }
}

impl fmt::Display for CubeIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^3 - {}^3 = {}^3 - 1 = {}^3 + {}^3", self.l1, self.l2, self.m, self.r1, self.r2)
    }
}

/// Instance `n >= 1` of the Ménéard family.
pub fn meneard(n: u32) -> Result<CubeIdentity> {
    if n == 0 {
        return Err(Error::Domain("Ménéard index starts at 1".into()));
    }
    let three = BigInt::from(3);
    let m = Pow::pow(&three, 4 * n - 2);
    let a = Pow::pow(&three, n);
    let b = Pow::pow(&three, 3 * n - 1);
    let id = CubeIdentity {
        l1: &m + &a,
        l2: &b + BigInt::one(),
        r1: &m - &a,
        r2: &b - BigInt::one(),
        m,
    };
    if !id.holds() {
        return Err(Error::Domain(format!("identity fails for n = {n}")));
    }
    Ok(id)
}

/// `(Z + Y)^3 = (Z - Y)^3 + (X + 1)^3 + (X - 1)^3`.
pub fn three_cube_check(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    let one = BigInt::one();
    cube(&(z + y)) == cube(&(z - y)) + cube(&(x + &one)) + cube(&(x - &one))
}

/// Rearranged form `X^3 + 3X = Y^3 + 3 Y Z^2`.
pub fn three_cube_reduced(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    cube(x) + 3 * x == cube(y) + 3 * y * z * z
}

/// Euler's `3^3 + 4^3 + 5^3 = 6^3` from the first Ménéard instance with halved entries.
pub fn euler_from_meneard() -> [BigInt; 4] {
    let id = meneard(1).expect("n = 1");
    let two = BigInt::from(2);
    // (12/2)^3 - (10/2)^3 = (6/2)^3 + (8/2)^3
    [&id.r1 / &two, &id.r2 / &two, &id.l2 / &two, &id.l1 / &two]
}

/// Bivariate integer polynomial keyed by exponent pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.push((i, j), BigInt::from(c));
        p
    }

    /// Sum of `c x^i y^j` over the listed triples.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, i, j)| acc.add(&Self::term(c, i, j)))
    }

    fn push(&mut self, key: (u32, u32), c: BigInt) {
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.push(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &o.terms {
                out.push((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn cube(&self) -> Self {
        self.mul(self).mul(self)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms.iter().map(|((i, j), c)| c * Pow::pow(x, *i) * Pow::pow(y, *j)).sum()
    }
}

fn quad(a: i64, b: i64, c: i64) -> Poly2 {
    Poly2::from_terms(&[(a, 2, 0), (b, 1, 1), (c, 0, 2)])
}

/// The two quadratic-form identities, each as `(left terms, right terms)`.
pub fn ramanujan_polys() -> [(Vec<Poly2>, Vec<Poly2>); 2] {
    [
        (vec![quad(3, 5, -5), quad(4, -4, 6), quad(5, -5, -3)], vec![quad(6, -4, 4)]),
        (vec![quad(1, 9, -1), quad(12, -4, 2)], vec![quad(9, -7, -1), quad(10, 0, 2)]),
    ]
}

/// Symbolic difference of cube sums; zero when the identity holds for all `X, Y`.
pub fn ramanujan_residuals() -> [Poly2; 2] {
    ramanujan_polys().map(|(lhs, rhs)| {
        let sum = |ps: &[Poly2]| ps.iter().fold(Poly2::zero(), |acc, p| acc.add(&p.cube()));
        sum(&lhs).sub(&sum(&rhs))
    })
}

/// Evaluates both identities at `(X, Y)`.
pub fn ramanujan_forms(x: &BigInt, y: &BigInt) -> (bool, bool) {
    let check = |(lhs, rhs): &(Vec<Poly2>, Vec<Poly2>)| {
        let sum = |ps: &[Poly2]| ps.iter().map(|p| cube(&p.eval(x, y))).sum::<BigInt>();
        sum(lhs) == sum(rhs)
    };
    let [a, b] = ramanujan_polys();
    (check(&a), check(&b))
}

/// `(X, Y, Z, T)` of Euler's family at `(u, v)`, with `X^3 + Y^3 + Z^3 = T^3`.
pub fn euler_uv(u: &Rational, v: &Rational) -> [Rational; 4] {
    let one = Rational::one();
    let k = |n: i64| Rational::from_integer(BigInt::from(n));
    let (u2, v2) = (u * u, v * v);
    let (u3, v3) = (&u2 * u, &v2 * v);
    let x = k(9) * &v3 - k(3) * &v2 * u + k(3) * &u2 * v - &u3 + &one;
    let y = k(9) * &v3 + k(3) * &v2 * u + k(3) * &u2 * v + &u3 - &one;
    let quartic = &u2 * &u2 + k(6) * &u2 * &v2 + k(9) * &v2 * &v2;
    let z = &quartic - u - k(3) * v;
    let t = &quartic - u + k(3) * v;
    [x, y, z, t]
}

/// True when `(X, Y, Z, T)` is proportional to the family member at `(u, v)`.
pub fn euler_predicate(u: &Rational, v: &Rational, xyzt: &[Rational; 4]) -> bool {
    let p = euler_uv(u, v);
    if p.iter().all(Zero::is_zero) || xyzt.iter().all(Zero::is_zero) {
        return false;
    }
    (0..4).all(|i| (0..4).all(|j| &xyzt[i] * &p[j] == &xyzt[j] * &p[i]))
}
