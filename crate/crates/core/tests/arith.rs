use std::collections::BTreeMap;

use coorbit_core::arith::{
    format_rational, groebner_basis, int, parse_rational, poly_normal_form, rat, rational_kernel, rational_rank, reduce,
    standard_monomials, Matrix, Monomial, MonomialOrder, MultiPoly, Rational, Vars,
};
use coorbit_core::invariants::{semiinvariant_family, OrbitIdeal};
use coorbit_core::sample::{random_matrix, random_monomial, random_polynomial, random_rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vars(n: usize) -> Vars {
    Vars::new((0..n).map(|i| format!("v{i}")).collect())
}

fn xy() -> (Vars, MultiPoly, MultiPoly) {
    let v = Vars::new(vec!["x".into(), "y".into()]);
    let x = MultiPoly::var(&v, 0);
    let y = MultiPoly::var(&v, 1);
    (v, x, y)
}

type Dense = BTreeMap<Vec<u16>, Rational>;

fn dense(p: &MultiPoly) -> Dense {
    p.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect()
}

fn oracle_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert_with(Rational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn oracle_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u16> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn reduce_examples() {
    let (v, x, y) = xy();
    let ord = MonomialOrder::grevlex();
    let g1 = &(&x * &x) - &y;
    assert!(reduce(&g1, &[g1.clone()], &ord).is_zero());
    let seven = MultiPoly::constant(&v, int(7));
    assert_eq!(reduce(&seven, &[g1.clone()], &ord), seven);
    let p = &(&x * &g1) + &y;
    assert_eq!(reduce(&p, &[g1.clone()], &ord), y);
}

#[test]
fn groebner_examples() {
    let (v, x, y) = xy();
    let ord = MonomialOrder::grevlex();
    let g = &(&x * &x) - &y;
    assert_eq!(groebner_basis(&[g.clone()], &ord).unwrap().len(), 1);

    let gb = groebner_basis(&[x.clone(), y.clone()], &ord).unwrap();
    assert_eq!(gb.len(), 2);
    assert!(poly_normal_form(&(&x * &y), &[x.clone(), y.clone()], &ord).unwrap().is_zero());

    let f1 = &(&x * &x) - &y;
    let f2 = &(&y * &y) - &x;
    let target = &x.pow(4) - &x;
    // Membership certificate: x⁴ − x = (x² + y)(x² − y) + (y² − x).
    let combo = &(&(&(&x * &x) + &y) * &f1) + &f2;
    assert_eq!(combo, target);
    let gb = groebner_basis(&[f1.clone(), f2.clone()], &ord).unwrap();
    assert!(reduce(&target, &gb, &ord).is_zero());
    // Non-members stay nonzero: x itself does not vanish at the common root (1, 1).
    assert!(!reduce(&x, &gb, &ord).is_zero());
    assert_eq!(x.eval(&[int(1), int(1)]), int(1));
    let _ = v;
}

#[test]
fn standard_monomial_examples() {
    let (_, x, _) = xy();
    let ord = MonomialOrder::grevlex();
    let sm = standard_monomials(2, &[x], &ord, 2).unwrap();
    let want: Vec<Monomial> = vec![Monomial(vec![0, 0]), Monomial(vec![0, 1]), Monomial(vec![0, 2])];
    let mut got = sm.clone();
    got.sort();
    let mut w = want.clone();
    w.sort();
    assert_eq!(got, w);
    assert_eq!(standard_monomials(2, &[], &ord, 2).unwrap().len(), 6);
}

#[test]
fn n2_orbit_standard_monomials_by_dimension_count() {
    let fam = semiinvariant_family(2).unwrap();
    let ideal = OrbitIdeal::from_lambdas(&fam, &[int(1)]).unwrap();
    let ord = MonomialOrder::grevlex();
    let p1 = &ideal.generators[0];
    let nvars = 7;
    for d in 0..=4u32 {
        let got = standard_monomials(nvars, &ideal.generators, &ord, d).unwrap().len();
        // Dimension oracle: all monomials up to d minus the image of
        // multiplication by p₁ from degree ≤ d − deg(p₁), computed as a rank.
        let all = coorbit_core::arith::monomials_up_to(nvars, d);
        let deg_p = p1.total_degree().unwrap();
        let image_rank = if d >= deg_p {
            let sources = coorbit_core::arith::monomials_up_to(nvars, d - deg_p);
            let products: Vec<MultiPoly> = sources.iter().map(|s| p1.mul_term(s, &int(1))).collect();
            let m = Matrix::from_fn(sources.len(), all.len(), |r, c| products[r].coefficient(&all[c]));
            rational_rank(&m)
        } else {
            0
        };
        assert_eq!(got, all.len() - image_rank, "degree {d}");
    }
}

#[test]
fn kernel_examples() {
    let id = Matrix::identity_like(&int(0), 3);
    assert!(rational_kernel(&id).is_empty());
    let z = Matrix::filled(2, 3, int(0));
    assert_eq!(rational_kernel(&z).len(), 3);
    let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
    let k = rational_kernel(&m);
    assert_eq!(k.len(), 1);
    assert_eq!(&k[0][0] * int(-1), &k[0][1] * int(2));
    assert!(!k[0][0].is_zero());
}

#[test]
fn groebner_reduction_is_path_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let v = vars(3);
    let ord = MonomialOrder::grevlex();
    for _ in 0..8 {
        let gens: Vec<MultiPoly> = (0..2).map(|_| random_polynomial(&mut rng, &v, 2, 3)).filter(|g| !g.is_zero()).collect();
        let gb = match groebner_basis(&gens, &ord) {
            Ok(gb) => gb,
            Err(_) => continue,
        };
        for _ in 0..4 {
            let p = random_polynomial(&mut rng, &v, 4, 6);
            let base = reduce(&p, &gb, &ord);
            for _ in 0..4 {
                let mut shuffled = gb.clone();
                shuffled.shuffle(&mut rng);
                assert_eq!(reduce(&p, &shuffled, &ord), base);
            }
        }
    }
}

#[test]
fn normal_form_is_compatible_with_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v = vars(3);
    let ord = MonomialOrder::grevlex();
    for _ in 0..6 {
        let gens = vec![random_polynomial(&mut rng, &v, 2, 3), random_polynomial(&mut rng, &v, 2, 3)];
        let gb = groebner_basis(&gens, &ord).unwrap();
        for _ in 0..4 {
            let p = random_polynomial(&mut rng, &v, 3, 4);
            let q = random_polynomial(&mut rng, &v, 3, 4);
            let lhs = reduce(&(&p * &q), &gb, &ord);
            let rhs = reduce(&(&reduce(&p, &gb, &ord) * &q), &gb, &ord);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn kernel_rank_matches_transpose_echelon_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rand::Rng::gen_range(&mut rng, 1..6usize);
        let mut m = random_matrix(&mut rng, n, 2, 2);
        // Force some rank deficiency half the time.
        if rand::Rng::gen_bool(&mut rng, 0.5) && n > 1 {
            for j in 0..n {
                m[(n - 1, j)] = &m[(0, j)] * int(3) - &m[(1 % n, j)];
            }
        }
        let kernel_rank = n - rational_kernel(&m).len();
        assert_eq!(kernel_rank, m.transpose().rank());
        assert_eq!(kernel_rank, coorbit_core::arith::certified_rank(&m));
    }
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((proptest::collection::vec(0u16..3, 3), -6i64..6, 1i64..4), 0..6).prop_map(|terms| {
        let v = vars(3);
        let mut p = MultiPoly::zero(&v);
        for (e, num, den) in terms {
            p.add_term(Monomial(e), rat(num, den));
        }
        p
    })
}

fn small_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u16..4, 3).prop_map(Monomial)
}

proptest! {
    #[test]
    fn rationals_stay_reduced(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let x = rat(a, b);
        let y = rat(c, d);
        let mut results = vec![&x + &y, &x - &y, &x * &y];
        if !y.is_zero() {
            results.push(&x / &y);
        }
        for r in results {
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
    }

    #[test]
    fn rational_strings_round_trip(a in any::<i64>(), b in 1i64..i64::MAX) {
        let r = rat(a, b);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn polynomial_ops_match_term_oracle(p in small_poly(), q in small_poly()) {
        prop_assert_eq!(dense(&(&p + &q)), oracle_add(&dense(&p), &dense(&q)));
        prop_assert_eq!(dense(&(&p * &q)), oracle_mul(&dense(&p), &dense(&q)));
        for (m, c) in (&p * &q).terms() {
            prop_assert!(!c.is_zero());
            prop_assert_eq!(m.nvars(), 3);
        }
    }

    #[test]
    fn monomial_orders_are_total_and_multiplicative(a in small_monomial(), b in small_monomial(), c in small_monomial()) {
        for ord in [MonomialOrder::grevlex(), MonomialOrder::grlex(), MonomialOrder::lex()] {
            let ab = ord.cmp(&a, &b);
            prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            prop_assert_eq!(ab, ord.cmp(&a.mul(&c), &b.mul(&c)));
            if ab.is_le() && ord.cmp(&b, &c).is_le() {
                prop_assert!(ord.cmp(&a, &c).is_le());
            }
            // The constant monomial is the minimum, so no infinite descent below 1.
            prop_assert!(ord.cmp(&Monomial::one(3), &a).is_le());
            if ord.is_graded() && a.degree() < b.degree() {
                prop_assert!(ab.is_lt());
            }
        }
    }
}

#[test]
fn random_rationals_round_trip_in_bulk() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let r = random_rational(&mut rng, 1_000_000, 1_000_000);
        assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        let m = random_monomial(&mut rng, 4, 5);
        assert_eq!(m.degree(), 5);
    }
}
