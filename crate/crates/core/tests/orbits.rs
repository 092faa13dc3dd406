use coorbit_core::arith::{int, rat, Matrix, Rational};
use coorbit_core::lie::{trace_pairing, LieAlgebra};
use coorbit_core::orbits::{
    block_skew, normal_form, orbit_dimension, symplectic_form, AlgebraPoint, DualPoint, GroupElement, NORMAL_FORM_TOLERANCE,
};
use coorbit_core::sample::{random_dual_point, random_group_element, random_matrix, random_symmetric};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap()
}

fn random_algebra_point(rng: &mut ChaCha8Rng, n: usize) -> AlgebraPoint<Rational> {
    AlgebraPoint { b: random_symmetric(rng, n, 3, 2), a: random_matrix(rng, n, 3, 2) }
}

#[test]
fn embedding_is_a_symplectic_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for n in 1..=3 {
        let j = symplectic_form::<Rational>(n);
        for _ in 0..20 {
            let p = random_group_element(&mut rng, n);
            let q = random_group_element(&mut rng, n);
            let ep = p.embed_sp().unwrap();
            assert_eq!(p.multiply(&q).unwrap().embed_sp().unwrap(), &ep * &q.embed_sp().unwrap());
            assert_eq!(&(&ep.transpose() * &j) * &ep, j);
            let inv = p.inverse().unwrap();
            assert_eq!(p.multiply(&inv).unwrap(), GroupElement::identity(n));
            assert_eq!(inv.multiply(&p).unwrap(), GroupElement::identity(n));
        }
    }
}

#[test]
fn group_law_examples() {
    let p = GroupElement::new(m(vec![vec![1]]), m(vec![vec![2]])).unwrap();
    let q = GroupElement::new(m(vec![vec![4]]), m(vec![vec![3]])).unwrap();
    let pq = p.multiply(&q).unwrap();
    assert_eq!((pq.x[(0, 0)].clone(), pq.g[(0, 0)].clone()), (int(17), int(6)));
    let e = GroupElement::new(m(vec![vec![5]]), m(vec![vec![2]])).unwrap().embed_sp().unwrap();
    assert_eq!(e, Matrix::from_rows(vec![vec![int(2), rat(5, 2)], vec![int(0), rat(1, 2)]]).unwrap());
    assert_eq!(GroupElement::<Rational>::identity(2).embed_sp().unwrap(), Matrix::identity_like(&int(0), 4));
}

#[test]
fn adjoint_matches_conjugation_and_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for n in 1..=3 {
        for _ in 0..20 {
            let p = random_group_element(&mut rng, n);
            let q = random_group_element(&mut rng, n);
            let y = random_algebra_point(&mut rng, n);
            let e = p.embed_sp().unwrap();
            let conj = &(&e * &y.to_matrix()) * &e.inverse().unwrap();
            assert_eq!(p.adjoint(&y).unwrap().to_matrix(), conj);
            let lhs = p.multiply(&q).unwrap().adjoint(&y).unwrap();
            let rhs = p.adjoint(&q.adjoint(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn coadjoint_examples() {
    let p = GroupElement::new(m(vec![vec![1]]), m(vec![vec![2]])).unwrap();
    let pt = DualPoint::new(m(vec![vec![4]]), m(vec![vec![3]])).unwrap();
    assert_eq!(p.coadjoint(&pt).unwrap(), DualPoint::new(m(vec![vec![1]]), m(vec![vec![4]])).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let x = random_symmetric(&mut rng, 2, 3, 2);
    let shear = GroupElement { x: x.clone(), g: Matrix::identity_like(&int(0), 2) };
    let pt = random_dual_point(&mut rng, 2);
    let moved = shear.coadjoint(&pt).unwrap();
    assert_eq!(moved.c, pt.c);
    assert_eq!(moved.a, &pt.a + &(&x * &pt.c));
    assert_eq!(GroupElement::identity(2).coadjoint(&pt).unwrap(), pt);
}

#[test]
fn coadjoint_is_functorial_and_dual_to_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for n in 1..=3 {
        for _ in 0..20 {
            let p = random_group_element(&mut rng, n);
            let q = random_group_element(&mut rng, n);
            let xi = random_dual_point(&mut rng, n);
            let lhs = p.multiply(&q).unwrap().coadjoint(&xi).unwrap();
            let rhs = p.coadjoint(&q.coadjoint(&xi).unwrap()).unwrap();
            assert_eq!(lhs, rhs);

            let y = random_algebra_point(&mut rng, n);
            let left = trace_pairing(&p.coadjoint(&xi).unwrap().to_matrix(), &y.to_matrix()).unwrap();
            let right = trace_pairing(&xi.to_matrix(), &p.inverse().unwrap().adjoint(&y).unwrap().to_matrix()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn normal_form_examples() {
    let h0 = DualPoint::normal_form_point(2, &[1.0]);
    let nf = normal_form(&h0).unwrap();
    assert!((nf.lambdas[0] - 1.0).abs() < 1e-12);
    let id = GroupElement::<f64>::identity(2);
    assert!((&nf.witness.g - &id.g).as_slice().iter().all(|x| x.abs() < 1e-12));
    assert!(nf.witness.x.as_slice().iter().all(|x| x.abs() < 1e-12));

    let sheared = DualPoint { c: Matrix::identity_like(&0.0, 2), a: Matrix::from_rows(vec![vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap() };
    let nf = normal_form(&sheared).unwrap();
    assert!((nf.lambdas[0] - 1.0).abs() < 1e-12, "{:?}", nf.lambdas);
    assert!(nf.residual < NORMAL_FORM_TOLERANCE);
}

#[test]
fn normal_form_residual_and_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for n in 2..=4 {
        for _ in 0..20 {
            let pt = random_dual_point(&mut rng, n);
            let p = random_group_element(&mut rng, n);
            let moved = p.coadjoint(&pt).unwrap();
            let a = normal_form(&pt.to_f64()).unwrap();
            let b = normal_form(&moved.to_f64()).unwrap();
            assert!(a.residual < NORMAL_FORM_TOLERANCE, "{}", a.residual);
            assert!(b.residual < NORMAL_FORM_TOLERANCE, "{}", b.residual);
            assert_eq!(a.lambdas.len(), n / 2);
            for (x, y) in a.lambdas.iter().zip(&b.lambdas) {
                assert!((x - y).abs() < 1e-9, "{x} vs {y}");
            }
            assert!(a.lambdas.windows(2).all(|w| w[0] >= w[1]));
            // The witness really lands on (I, H).
            let reached = a.witness.coadjoint(&pt.to_f64()).unwrap();
            let want = DualPoint::normal_form_point(n, &a.lambdas);
            let err = (&reached.a - &want.a).as_slice().iter().chain((&reached.c - &want.c).as_slice()).fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(err < 1e-8, "{err}");
            assert!(a.witness.g.det() > 0.0);
        }
    }
}

#[test]
fn normal_form_rejects_indefinite_c() {
    let pt = DualPoint { c: Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, -1.0]]).unwrap(), a: Matrix::filled(2, 2, 0.0) };
    assert!(normal_form(&pt).is_err());
}

#[test]
fn orbit_dimension_regular_and_constant_along_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for (n, expected) in [(2usize, 6usize), (3, 14)] {
        let alg = LieAlgebra::new(n).unwrap();
        let pt = DualPoint::normal_form_point(n, &[int(1)]);
        let d = orbit_dimension(&alg, &pt).unwrap();
        assert_eq!(d.computed, expected);
        assert_eq!(d.regular_value, expected);
        assert_eq!(d.printed_value, n * n - n / 2);
        for _ in 0..5 {
            let p = random_group_element(&mut rng, n);
            let moved = p.coadjoint(&pt).unwrap();
            assert_eq!(orbit_dimension(&alg, &moved).unwrap().computed, expected);
            let generic = random_dual_point(&mut rng, n);
            let here = orbit_dimension(&alg, &generic).unwrap().computed;
            assert_eq!(here, orbit_dimension(&alg, &p.coadjoint(&generic).unwrap()).unwrap().computed);
        }
    }
    let alg = LieAlgebra::new(3).unwrap();
    let zero = DualPoint { c: Matrix::identity_like(&int(0), 3), a: block_skew(3, &[int(0)]) };
    assert!(orbit_dimension(&alg, &zero).unwrap().computed < 14);
}

#[test]
fn invalid_elements_are_rejected() {
    assert!(GroupElement::new(m(vec![vec![0, 1], vec![0, 0]]), Matrix::identity_like(&int(0), 2)).is_err());
    assert!(GroupElement::new(Matrix::filled(2, 2, int(0)), m(vec![vec![-1, 0], vec![0, 1]])).is_err());
    assert!(DualPoint::new(m(vec![vec![1, 2], vec![0, 1]]), Matrix::filled(2, 2, int(0))).is_err());
}
