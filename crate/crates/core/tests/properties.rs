use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use casteljau::blossom::{aitken_eval, blossom_eval, de_boor_eval};
use casteljau::decasteljau::ControlPolygon;
use casteljau::exactnum::{cf_value, euclid};
use casteljau::polygon_golden::golden_power;
use casteljau::quaternions::{decompose, mul_qa, rotation, tetragonal, AntiQuatMatrix, QuatMatrix, Vec4};
use casteljau::smoothing::{smoothing_matrix, Characteristic};
use casteljau::tolerance::{max_deviation, TendencyPair};
use casteljau::vincent::{isolate_positive_roots, is_squarefree, sign_variations, taylor_shift, IntPoly};
use casteljau::{int, rat, Matrix, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn polygon(max_degree: usize) -> impl Strategy<Value = ControlPolygon<Rational>> {
    prop::collection::vec(prop::collection::vec(rational(), 2), 2..=max_degree + 1)
        .prop_map(|pts| ControlPolygon::unit(pts).unwrap())
}

fn vec4() -> impl Strategy<Value = Vec4<Rational>> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(t, x, y, z)| Vec4::from_i64(t, x, y, z))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blossom_symmetric_and_diagonal(poly in polygon(5), args in prop::collection::vec(rational(), 5), t in rational()) {
        let n = poly.degree();
        let args = &args[..n];
        let mut rev = args.to_vec();
        rev.reverse();
        prop_assert_eq!(blossom_eval(&poly, args).unwrap(), blossom_eval(&poly, &rev).unwrap());
        prop_assert_eq!(blossom_eval(&poly, &vec![t.clone(); n]).unwrap(), poly.eval(&t));
    }

    #[test]
    fn blossom_multi_affine(poly in polygon(4), args in prop::collection::vec(rational(), 4), a in rational(), b in rational(), lam in rational()) {
        let n = poly.degree();
        let with = |x: &Rational| {
            let mut v = args[..n].to_vec();
            v[n - 1] = x.clone();
            blossom_eval(&poly, &v).unwrap()
        };
        let mu = Rational::one() - &lam;
        let lhs = with(&(&mu * &a + &lam * &b));
        let rhs: Vec<Rational> = with(&a).iter().zip(with(&b)).map(|(x, y)| &mu * x + &lam * y).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn de_boor_and_aitken_match_de_casteljau(poly in polygon(4), gaps in prop::collection::vec(1i64..=5, 8), u in 0i64..=10) {
        let n = poly.degree();
        let mut knots = vec![rat(-gaps[0], 3)];
        for g in &gaps[1..2 * n] {
            let next = knots.last().unwrap() + rat(*g, 3);
            knots.push(next);
        }
        let t = &knots[n - 1] + (&knots[n] - &knots[n - 1]) * rat(u, 10);
        let poles: Vec<_> = (0..=n).map(|i| blossom_eval(&poly, &knots[i..i + n]).unwrap()).collect();
        prop_assert_eq!(de_boor_eval(&poles, &knots, &t).unwrap(), poly.eval(&t));
        let nodes: Vec<Rational> = (0..=n as i64).map(|i| rat(i, 1)).collect();
        let samples: Vec<_> = nodes.iter().map(|x| poly.eval(x)).collect();
        prop_assert_eq!(aitken_eval(&samples, &nodes, &t).unwrap(), poly.eval(&t));
    }

    #[test]
    fn subdivision_preserves_curve(poly in polygon(5), s in 1i64..=9, u in 0i64..=10) {
        let split = rat(s, 10);
        let (left, right) = poly.subdivide(&split).unwrap();
        let t = rat(u, 10);
        let expect = poly.eval(&t);
        if t <= split {
            prop_assert_eq!(left.eval(&t), expect);
        } else {
            prop_assert_eq!(right.eval(&t), expect);
        }
    }

    #[test]
    fn taylor_shift_composes(c in prop::collection::vec(-20i64..=20, 1..7), a in -5i64..=5, b in -5i64..=5) {
        let p = IntPoly::from_i64(&c);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(taylor_shift(&taylor_shift(&p, &a), &b), taylor_shift(&p, &(&a + &b)));
        let x = rat(3, 7);
        prop_assert_eq!(taylor_shift(&p, &a).eval(&x), p.eval(&(&x + Rational::from(a.clone()))));
    }

    #[test]
    fn isolation_counts_distinct_positive_roots(roots in prop::collection::btree_set(1i64..=40, 1..5), neg in prop::collection::btree_set(1i64..=9, 0..3)) {
        // (2x - r) for each positive root r/2, (x + s) for each negative root
        let mut p = IntPoly::from_i64(&[1]);
        for r in &roots {
            p = p.mul(&IntPoly::from_i64(&[-r, 2]));
        }
        for s in &neg {
            p = p.mul(&IntPoly::from_i64(&[*s, 1]));
        }
        prop_assert!(is_squarefree(&p));
        let found = isolate_positive_roots(&p, 12).unwrap();
        prop_assert_eq!(found.len(), roots.len());
        for (iso, r) in found.iter().zip(&roots) {
            let root = rat(*r, 2);
            let (lo, hi) = &iso.interval;
            prop_assert!(lo <= &root && &root <= hi);
        }
        prop_assert!(sign_variations(&p) >= roots.len());
    }

    #[test]
    fn euclid_round_trip(a in 1i64..100_000, b in 1i64..100_000) {
        let e = euclid(&BigInt::from(a), &BigInt::from(b)).unwrap();
        let cf = &e.quotients;
        prop_assert_eq!(cf_value(cf, cf.len()).unwrap(), rat(a, b));
        prop_assert!(e.remainders.last().unwrap().is_zero());
    }

    #[test]
    fn golden_powers_symmetric_and_multiplicative(n in 2usize..=6, j in 0u32..=6, k in 0u32..=6) {
        let mj = golden_power(n, j).unwrap();
        let mk = golden_power(n, k).unwrap();
        prop_assert!(mj.is_symmetric());
        prop_assert_eq!(mj.mul(&mk), golden_power(n, j + k).unwrap());
    }

    #[test]
    fn smoothing_rows_are_affine(n in 2usize..=6, c in 1usize..=5, r in 1usize..=4) {
        prop_assume!(c < n);
        if let Ok(ch) = Characteristic::new(n, c, r) {
            if let Ok(m) = smoothing_matrix(&ch) {
                prop_assert!(m.is_affine());
                prop_assert!(m.is_centro_symmetric());
            }
        }
    }

    #[test]
    fn quaternion_product_norms(q1 in vec4(), q2 in vec4()) {
        let n1 = q1.norm();
        let n2 = q2.norm();
        prop_assert_eq!(q1.hamilton(&q2).norm(), &n1 * &n2);
        let p = mul_qa(&QuatMatrix { q: q2.clone() }, &AntiQuatMatrix { q: q1.clone() });
        prop_assert_eq!(p.mul(&p.transpose()), Matrix::identity(4).scale(&(&n1 * &n2)));
        prop_assert_eq!(tetragonal(&tetragonal(&p)), p.clone());
        let d = decompose(&p);
        if !(n1.is_zero() || n2.is_zero()) {
            let d = d.unwrap();
            prop_assert_eq!(mul_qa(&QuatMatrix { q: d.q2 }, &AntiQuatMatrix { q: d.q1 }), p);
        }
    }

    #[test]
    fn rotations_are_orthogonal(q in vec4()) {
        prop_assume!(!q.norm().is_zero());
        let r = rotation(&QuatMatrix { q }).unwrap();
        prop_assert_eq!(r.mul(&r.transpose()), Matrix::identity(4));
        prop_assert_eq!(r.det(), int(1));
    }

    #[test]
    fn tolerance_scale_covariant(d0 in -10.0f64..10.0, d1 in -10.0f64..10.0, k in 0.01f64..100.0) {
        let t = TendencyPair::new(d0, d1);
        let m = max_deviation(&t);
        let scaled = max_deviation(&t.scaled(k));
        prop_assert!((scaled - k * m).abs() <= 1e-12 * (1.0 + k * m.abs()));
        prop_assert!(m >= 0.0);
        let sampled = (0..=200).map(|i| t.deviation_at(i as f64 / 200.0).abs()).fold(0.0, f64::max);
        prop_assert!(sampled <= m * (1.0 + 1e-12) + 1e-15);
    }
}
