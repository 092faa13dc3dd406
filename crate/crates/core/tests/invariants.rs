use coorbit_core::arith::{int, rat, Matrix, Rational};
use coorbit_core::invariants::{
    invariant_from_lambdas, no_invariants_certificate, orbit_ideal, pfaffian, pfaffian_invariant, pfaffian_invariant_squared,
    pfaffian_semiinvariant_value, rational_invariant_f, rational_pow, regularity_check, semiinvariant_family,
    trace_semiinvariant_value, OrbitIdeal, SemiinvariantKind,
};
use coorbit_core::orbits::{normal_form, DualPoint};
use coorbit_core::sample::{random_dual_point, random_group_element, random_lambdas, random_matrix, random_symmetric};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn pfaffian_examples() {
    let two = Matrix::from_rows(vec![vec![int(0), int(5)], vec![int(-5), int(0)]]).unwrap();
    assert_eq!(pfaffian(&two).unwrap(), int(5));
    let (a, b, c, d, e, f) = (int(2), int(3), int(5), int(7), int(11), int(13));
    let up = [[None, Some(&a), Some(&b), Some(&c)], [None, None, Some(&d), Some(&e)], [None, None, None, Some(&f)], [None; 4]];
    let m = Matrix::from_fn(4, 4, |i, j| match (up[i][j], up[j][i]) {
        (Some(x), _) => x.clone(),
        (_, Some(x)) => -x.clone(),
        _ => int(0),
    });
    assert_eq!(pfaffian(&m).unwrap(), &a * &f - &b * &e + &c * &d);
    assert_eq!(pfaffian(&Matrix::filled(4, 4, int(0))).unwrap(), int(0));
    assert!(pfaffian(&Matrix::filled(3, 3, int(0))).is_err());
    assert!(pfaffian(&Matrix::identity_like(&int(0), 2)).is_err());
}

fn skew_from(values: &[i64], n: usize) -> Matrix<Rational> {
    let mut m = Matrix::filled(n, n, int(0));
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            m[(i, j)] = rat(values[k], 1 + (k as i64 % 3));
            m[(j, i)] = -m[(i, j)].clone();
            k += 1;
        }
    }
    m
}

proptest! {
    #[test]
    fn pfaffian_squares_to_determinant(values in proptest::collection::vec(-9i64..9, 15), size in prop::sample::select(vec![2usize, 4, 6])) {
        let m = skew_from(&values, size);
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf * &pf, m.det());
    }
}

#[test]
fn invariant_f_examples_and_invariance() {
    let pt = DualPoint::normal_form_point(2, &[int(1)]);
    let m = &pt.a * &pt.a;
    assert_eq!(m.trace(), int(-2));
    assert_eq!(rational_invariant_f(1, &pt).unwrap(), int(-2));
    let sym = DualPoint { c: Matrix::identity_like(&int(0), 3), a: random_symmetric(&mut ChaCha8Rng::seed_from_u64(1), 3, 3, 2) };
    assert!(rational_invariant_f(1, &sym).unwrap().is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for n in 2..=4 {
        for _ in 0..10 {
            let pt = random_dual_point(&mut rng, n);
            let moved = random_group_element(&mut rng, n).coadjoint(&pt).unwrap();
            for i in 1..=(n / 2) as u32 {
                assert_eq!(rational_invariant_f(i, &pt).unwrap(), rational_invariant_f(i, &moved).unwrap());
            }
            if n % 2 == 0 {
                assert_eq!(pfaffian_invariant_squared(&pt).unwrap(), pfaffian_invariant_squared(&moved).unwrap());
            }
        }
    }
}

#[test]
fn invariants_agree_with_normal_form_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    for n in 2..=4 {
        for _ in 0..5 {
            let pt = random_dual_point(&mut rng, n);
            let nf = normal_form(&pt.to_f64()).unwrap();
            for i in 1..=(n / 2) as u32 {
                let exact = coorbit_core::arith::rational_to_f64(&rational_invariant_f(i, &pt).unwrap());
                let from_l = invariant_from_lambdas(i, &nf.lambdas);
                assert!((exact - from_l).abs() < 1e-7 * exact.abs().max(1.0), "{exact} vs {from_l}");
            }
            if n % 2 == 0 {
                let pf = pfaffian_invariant(&pt.to_f64()).unwrap();
                let prod: f64 = nf.lambdas.iter().product();
                assert!((pf - prod).abs() < 1e-7 * pf.abs().max(1.0), "{pf} vs {prod}");
            }
        }
    }
}

#[test]
fn semiinvariants_transform_with_exact_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for n in 2..=3 {
        let fam = semiinvariant_family(n).unwrap();
        assert_eq!(fam.k, n / 2);
        for (j, kind) in fam.kinds.iter().enumerate() {
            match kind {
                SemiinvariantKind::Trace(m) => assert_eq!(fam.weights[j], -4 * *m as i64),
                SemiinvariantKind::Pfaffian => assert_eq!(fam.weights[j], 1 - 2 * fam.k as i64),
            }
        }
        for _ in 0..20 {
            let pt = random_dual_point(&mut rng, n);
            let p = random_group_element(&mut rng, n);
            let moved = p.coadjoint(&pt).unwrap();
            let det = p.g.det();
            for j in 0..fam.generators.len() {
                let before = fam.evaluate(j, &pt);
                let after = fam.evaluate(j, &moved);
                assert_eq!(after, &before * rational_pow(&det, fam.weights[j]));
            }
        }
    }
}

#[test]
fn direct_values_transform_with_exact_weights_beyond_symbolic_range() {
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    for n in [4usize, 5, 6] {
        let k = (n / 2) as i64;
        for _ in 0..3 {
            let pt = random_dual_point(&mut rng, n);
            let p = random_group_element(&mut rng, n);
            let moved = p.coadjoint(&pt).unwrap();
            let det = p.g.det();
            for i in 1..=2u32 {
                let before = trace_semiinvariant_value(i, &pt).unwrap();
                let after = trace_semiinvariant_value(i, &moved).unwrap();
                assert_eq!(after, &before * rational_pow(&det, -4 * i as i64), "n={n} i={i}");
            }
            if n % 2 == 0 {
                let before = pfaffian_semiinvariant_value(&pt).unwrap();
                let after = pfaffian_semiinvariant_value(&moved).unwrap();
                assert_eq!(after, &before * rational_pow(&det, 1 - 2 * k), "n={n}");
            }
        }
    }
}

#[test]
fn generators_match_direct_matrix_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    for n in 2..=3 {
        let fam = semiinvariant_family(n).unwrap();
        for _ in 0..5 {
            let pt = random_dual_point(&mut rng, n);
            for (j, kind) in fam.kinds.iter().enumerate() {
                let direct = match kind {
                    SemiinvariantKind::Trace(m) => trace_semiinvariant_value(*m, &pt).unwrap(),
                    SemiinvariantKind::Pfaffian => pfaffian_semiinvariant_value(&pt).unwrap(),
                };
                assert_eq!(fam.evaluate(j, &pt), direct);
            }
        }
    }
}

#[test]
fn denominator_free_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(204);
    let mut checked = 0;
    while checked < 20 {
        let n = 2 + checked % 3;
        let c = random_symmetric(&mut rng, n, 4, 3);
        let det = c.det();
        if det.is_zero() {
            continue;
        }
        let a = random_matrix(&mut rng, n, 3, 2);
        let adj = c.cofactor_matrix().transpose();
        let ci = c.inverse().unwrap();
        for i in 1..=2u32 {
            let lhs = (&(&(&c * &a) * &adj) - &a.transpose().scale(&det)).pow(2 * i).trace();
            let rhs = (&(&(&c * &a) * &ci) - &a.transpose()).pow(2 * i).trace() * rational_pow(&det, 2 * i as i64);
            assert_eq!(lhs, rhs);
        }
        checked += 1;
    }
}

#[test]
fn orbit_ideal_examples() {
    let fam2 = semiinvariant_family(2).unwrap();
    let ideal = OrbitIdeal::from_lambdas(&fam2, &[int(1)]).unwrap();
    assert_eq!(ideal.generators.len(), 1);
    let p = &fam2.generators[0];
    assert_eq!(ideal.generators[0], p * p - fam2.det_c());
    assert!(ideal.vanishes_at(&DualPoint::normal_form_point(2, &[int(1)])));

    let fam3 = semiinvariant_family(3).unwrap();
    let ideal = OrbitIdeal::from_lambdas(&fam3, &[int(1)]).unwrap();
    let d = fam3.det_c();
    assert_eq!(ideal.alphas, vec![int(-8)]);
    assert_eq!(ideal.generators[0], &fam3.generators[0] + &(&d * &d).scale(&int(8)));
    let h = DualPoint::normal_form_point(3, &[int(1)]);
    assert!(ideal.vanishes_at(&h));
    assert_eq!(ideal.jacobian_at(&h).rank(), 1);
    assert!(regularity_check(&ideal, &[h]).unwrap());

    assert!(OrbitIdeal::from_lambdas(&fam3, &[int(0)]).is_err());
    let off = DualPoint::normal_form_point(3, &[int(2)]);
    assert!(regularity_check(&ideal, &[off]).is_err());
}

#[test]
fn orbit_ideal_vanishes_on_orbits_with_full_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    for n in 2..=3 {
        let fam = semiinvariant_family(n).unwrap();
        let lambdas = random_lambdas(&mut rng, n / 2);
        let ideal = OrbitIdeal::from_lambdas(&fam, &lambdas).unwrap();
        assert_eq!(ideal.generators.len(), n / 2);
        let base = DualPoint::normal_form_point(n, &lambdas);
        let samples: Vec<_> = (0..20)
            .map(|_| random_group_element(&mut rng, n).coadjoint(&base).unwrap())
            .collect();
        for s in &samples {
            assert!(ideal.evaluate(s).iter().all(Zero::is_zero));
            assert_eq!(ideal.jacobian_at(s).rank(), n / 2);
        }
        assert!(regularity_check(&ideal, &samples).unwrap());
        // A point on a different orbit is not on the variety.
        let other: Vec<Rational> = lambdas.iter().map(|l| l + int(1) / int(3)).collect();
        assert!(!ideal.vanishes_at(&DualPoint::normal_form_point(n, &other)));
    }
}

#[test]
fn orbit_ideal_from_float_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(206);
    let base = DualPoint::normal_form_point(3, &[int(2)]);
    let pt = random_group_element(&mut rng, 3).coadjoint(&base).unwrap();
    let nf = normal_form(&pt.to_f64()).unwrap();
    let ideal = orbit_ideal(&nf).unwrap();
    for v in ideal.evaluate_normalized(&pt.to_f64()) {
        assert!(v.abs() < 1e-9, "{v}");
    }
}

/// Trace-type generators of an even orbit: `h_i − α_i det(c)^{2i}` vanishes on
/// the orbit, the variant with `det(c)²` does not once `i ≥ 2`.
#[test]
fn even_case_exponent_variants() {
    let mut rng = ChaCha8Rng::seed_from_u64(207);
    let n = 6;
    let lambdas = random_lambdas(&mut rng, 3);
    let base = DualPoint::normal_form_point(n, &lambdas);
    let mut p = random_group_element(&mut rng, n);
    while p.g.det() == Rational::one() {
        p = random_group_element(&mut rng, n);
    }
    let pt = p.coadjoint(&base).unwrap();
    let det = pt.c.det();
    for i in 1..=2u32 {
        let alpha = trace_semiinvariant_value(i, &base).unwrap();
        let h = trace_semiinvariant_value(i, &pt).unwrap();
        assert_eq!(h, &alpha * rational_pow(&det, 2 * i as i64));
        let printed = &h - &alpha * rational_pow(&det, 2);
        assert_eq!(printed.is_zero(), i == 1);
    }
}

#[test]
fn no_invariant_polynomials_up_to_degree() {
    for (n, d) in [(2usize, 4u32), (3, 2)] {
        let cert = no_invariants_certificate(n, d).unwrap();
        assert_eq!(cert.dimension, 1, "n={n} d={d}: {:?}", cert.per_degree);
        assert!(cert.passed());
    }
    assert_eq!(no_invariants_certificate(2, 0).unwrap().dimension, 1);
    assert_eq!(no_invariants_certificate(2, 1).unwrap().dimension, 1);
}

#[test]
fn symbolic_family_has_a_capacity_guard() {
    assert!(matches!(semiinvariant_family(4), Err(coorbit_core::Error::Capacity(_))));
    assert!(semiinvariant_family(1).is_err());
}
