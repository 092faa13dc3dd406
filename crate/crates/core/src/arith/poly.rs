use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::scalar::Ring;
use crate::{Error, Result};

/// Exponent vector of a commutative monomial. Also used as the key of a
/// PBW-ordered word: `X_0^{e_0} X_1^{e_1} ...` in non-decreasing letter order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The sorted letter sequence this exponent vector stands for.
    pub fn to_word(&self) -> Vec<u16> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(i as u16);
            }
        }
        w
    }

    /// Exponent vector of a word (letter order is forgotten).
    pub fn from_word(nvars: usize, word: &[u16]) -> Self {
        let mut m = Monomial::one(nvars);
        for &l in word {
            m.0[l as usize] += 1;
        }
        m
    }
}

/// All monomials of total degree exactly `d`, in a fixed deterministic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut alloc::vec![0; nvars], &mut out);
    out
}

pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(nvars, k)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
}

/// A monomial order. `priority` lists variables from most to least significant;
/// an empty list means the natural order `x_0 > x_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, priority: Vec::new() }
    }

    pub fn grlex() -> Self {
        MonomialOrder { kind: OrderKind::GrLex, priority: Vec::new() }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: Vec::new() }
    }

    fn var_at(&self, rank: usize) -> usize {
        if self.priority.is_empty() {
            rank
        } else {
            self.priority[rank]
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for r in 0..a.nvars() {
            let v = self.var_at(r);
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::GrLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(a, b)),
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for r in (0..a.nvars()).rev() {
                    let v = self.var_at(r);
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn is_graded(&self) -> bool {
        self.kind != OrderKind::Lex
    }
}

/// Ordered list of variable names shared by polynomials of one ring.
#[derive(Clone, Debug, Eq)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new(names: Vec<String>) -> Self {
        Vars(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        MultiPoly::monomial(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            if m.nvars() != vars.len() {
                return Err(Error::Input(alloc::format!(
                    "exponent vector of length {} for {} variables",
                    m.nvars(),
                    vars.len()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::constant(&self.vars, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "evaluation point has the wrong length");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars(), "evaluation point has the wrong length");
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = super::rational::rational_to_f64(c);
                for (x, &e) in point.iter().zip(&m.0) {
                    if e > 0 {
                        t *= num_traits::Float::powi(*x, i32::from(e));
                    }
                }
                t
            })
            .sum()
    }

    fn zip_with(&self, other: &MultiPoly, neg: bool) -> MultiPoly {
        assert!(self.vars == other.vars, "polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if neg { -c.clone() } else { c.clone() });
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ord = MonomialOrder::grevlex();
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.vars.0[i])?,
                    _ => write!(f, "*{}^{}", self.vars.0[i], e)?,
                }
            }
        }
        Ok(())
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.zip_with(rhs, false)
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.zip_with(rhs, true)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(self.vars == rhs.vars, "polynomials from different rings");
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        assert!(self.vars == rhs.vars, "polynomials from different rings");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        assert!(self.vars == rhs.vars, "polynomials from different rings");
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::constant(&self.vars, Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;
    use alloc::vec;

    fn xy() -> Vars {
        Vars::new(vec!["x".into(), "y".into(), "z".into()])
    }

    #[test]
    fn grevlex_ties() {
        let o = MonomialOrder::grevlex();
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&Monomial(vec![2, 0, 0]), &Monomial(vec![0, 2, 0])), Ordering::Greater);
        let lex = MonomialOrder::lex();
        assert_eq!(lex.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn priority_permutes_variables() {
        let o = MonomialOrder { kind: OrderKind::Lex, priority: vec![2, 1, 0] };
        assert_eq!(o.cmp(&Monomial(vec![5, 0, 0]), &Monomial(vec![0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(7, 2).len(), 28);
        assert_eq!(monomials_up_to(7, 4).len(), 330);
        assert_eq!(monomials_up_to(0, 3).len(), 1);
    }

    #[test]
    fn arithmetic_and_derivative() {
        let v = xy();
        let x = MultiPoly::var(&v, 0);
        let y = MultiPoly::var(&v, 1);
        let p = &(&x * &x) - &(&y * &int(3).into_poly(&v));
        assert_eq!(p.len(), 2);
        assert_eq!(p.partial(0), x.scale(&int(2)));
        assert_eq!(p.eval(&[int(2), int(1), int(0)]), int(1));
        assert!((&p - &p).is_zero());
    }

    trait IntoPoly {
        fn into_poly(self, v: &Vars) -> MultiPoly;
    }
    impl IntoPoly for Rational {
        fn into_poly(self, v: &Vars) -> MultiPoly {
            MultiPoly::constant(v, self)
        }
    }

    #[test]
    fn words_roundtrip() {
        let m = Monomial(vec![2, 0, 1]);
        assert_eq!(m.to_word(), vec![0, 0, 2]);
        assert_eq!(Monomial::from_word(3, &[2, 0, 0]), m);
    }
}
