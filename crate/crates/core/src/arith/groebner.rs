use alloc::format;
use alloc::vec::Vec;

use super::poly::{monomials_up_to, Monomial, MonomialOrder, MultiPoly};
use crate::{Error, Result};

/// Resource guards for Buchberger's algorithm. Exceeding any of them is an
/// error, never a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub max_degree: u32,
    pub max_terms: usize,
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits { max_degree: 40, max_terms: 200_000, max_basis: 500, max_pairs: 100_000 }
    }
}

fn check_ring(polys: &[MultiPoly]) -> Result<()> {
    if let Some(first) = polys.first() {
        for p in polys {
            first.same_ring(p)?;
        }
    }
    Ok(())
}

/// Full multivariate division of `p` by `divisors`: the remainder has no term
/// divisible by a leading monomial of a divisor.
pub fn reduce(p: &MultiPoly, divisors: &[MultiPoly], ord: &MonomialOrder) -> MultiPoly {
    let leads: Vec<(Monomial, num_rational::BigRational)> = divisors
        .iter()
        .filter_map(|g| g.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut rest = p.clone();
    let mut rem = MultiPoly::zero(p.vars());
    while let Some((m, c)) = rest.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().enumerate().find(|(_, (lm, _))| lm.divides(&m));
        match hit {
            Some((k, (lm, lc))) => {
                let q = m.div(lm).expect("checked divisibility");
                let factor = -(c / lc);
                rest = &rest + &divisors[k].mul_term(&q, &factor);
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, ord: &MonomialOrder) -> MultiPoly {
    let (mf, cf) = f.leading_term(ord).expect("nonzero");
    let (mg, cg) = g.leading_term(ord).expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).expect("lcm"), &cf.recip());
    let b = g.mul_term(&l.div(mg).expect("lcm"), &cg.recip());
    &a - &b
}

pub fn groebner_basis(gens: &[MultiPoly], ord: &MonomialOrder) -> Result<Vec<MultiPoly>> {
    groebner_basis_with_limits(gens, ord, &GroebnerLimits::default())
}

/// Reduced, monic Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis_with_limits(
    gens: &[MultiPoly],
    ord: &MonomialOrder,
    limits: &GroebnerLimits,
) -> Result<Vec<MultiPoly>> {
    if gens.is_empty() {
        return Err(Error::Input("groebner_basis needs at least one generator".into()));
    }
    check_ring(gens)?;
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(ord)).collect();
    if basis.is_empty() {
        return Ok(basis);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::Capacity(format!("more than {} critical pairs", limits.max_pairs)));
        }
        // Normal selection strategy: smallest lcm first.
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = basis[a.0].leading_monomial(ord).unwrap().lcm(basis[a.1].leading_monomial(ord).unwrap());
                let lb = basis[b.0].leading_monomial(ord).unwrap().lcm(basis[b.1].leading_monomial(ord).unwrap());
                ord.cmp(&la, &lb)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(idx);
        let li = basis[i].leading_monomial(ord).unwrap();
        let lj = basis[j].leading_monomial(ord).unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = reduce(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let deg = r.total_degree().unwrap_or(0);
        if deg > limits.max_degree {
            return Err(Error::Capacity(format!("intermediate degree {deg} exceeds {}", limits.max_degree)));
        }
        if r.len() > limits.max_terms {
            return Err(Error::Capacity(format!("intermediate polynomial with {} terms", r.len())));
        }
        basis.push(r.monic(ord));
        if basis.len() > limits.max_basis {
            return Err(Error::Capacity(format!("basis grew beyond {} elements", limits.max_basis)));
        }
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    Ok(interreduce(basis, ord))
}

fn interreduce(mut basis: Vec<MultiPoly>, ord: &MonomialOrder) -> Vec<MultiPoly> {
    // Drop elements whose leading monomial is divisible by another's.
    let mut keep: Vec<MultiPoly> = Vec::new();
    basis.sort_by(|a, b| ord.cmp(a.leading_monomial(ord).unwrap(), b.leading_monomial(ord).unwrap()));
    for g in basis {
        let lm = g.leading_monomial(ord).unwrap().clone();
        if keep.iter().any(|k| k.leading_monomial(ord).unwrap().divides(&lm)) {
            continue;
        }
        keep.push(g);
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<MultiPoly> =
            keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = keep[i].leading_term(ord).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = keep[i].clone();
        tail.add_term(lm.clone(), -lc.clone());
        let mut r = reduce(&tail, &others, ord);
        r.add_term(lm, lc);
        out.push(r.monic(ord));
    }
    out
}

/// Normal form of `p` modulo the ideal generated by `gens`. The generating
/// set is completed to a Gröbner basis first, so the result is zero exactly
/// when `p` lies in the ideal.
pub fn poly_normal_form(p: &MultiPoly, gens: &[MultiPoly], ord: &MonomialOrder) -> Result<MultiPoly> {
    if gens.is_empty() {
        return Err(Error::Input("poly_normal_form needs at least one generator".into()));
    }
    for g in gens {
        p.same_ring(g)?;
    }
    let gb = groebner_basis(gens, ord)?;
    Ok(reduce(p, &gb, ord))
}

/// Monomials of degree at most `max_degree` that no leading monomial of `gb`
/// divides. An empty `gb` stands for the zero ideal.
pub fn standard_monomials(
    nvars: usize,
    gb: &[MultiPoly],
    ord: &MonomialOrder,
    max_degree: u32,
) -> Result<Vec<Monomial>> {
    const MAX_MONOMIALS: u128 = 5_000_000;
    let count = binomial(nvars as u128 + max_degree as u128, max_degree as u128);
    if count > MAX_MONOMIALS {
        return Err(Error::Capacity(format!("{count} monomials up to degree {max_degree}")));
    }
    let leads: Vec<&Monomial> = gb.iter().filter_map(|g| g.leading_monomial(ord)).collect();
    if leads.iter().any(|m| m.nvars() != nvars) {
        return Err(Error::VariableMismatch);
    }
    Ok(monomials_up_to(nvars, max_degree)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect())
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}
