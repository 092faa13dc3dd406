use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{Monomial, MonomialOrder, Rational};
use crate::lie::LetterKind;
use crate::{Error, Result};

use super::enveloping::EnvelopingAlgebra;
use super::hpoly::HPoly;
use super::ncpoly::NCPoly;

/// `F(X_e)` with `[X_e, P] = F(X_e) · P` for every basis letter.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable {
    pub values: Vec<HPoly>,
}

impl WeightTable {
    pub fn get(&self, e: usize) -> &HPoly {
        &self.values[e]
    }

    /// `F` vanishes on symmetric letters and off-diagonal linear letters, and is
    /// the same on all diagonal linear letters `A_ii` (it factors through the
    /// trace, the derivative of `det`).
    pub fn is_character_of_det(&self, kinds: &[LetterKind]) -> bool {
        let mut diag: Option<&HPoly> = None;
        for (v, k) in self.values.iter().zip(kinds) {
            match *k {
                LetterKind::Linear { row, col } if row == col => match diag {
                    Some(d) if d != v => return false,
                    _ => diag = Some(v),
                },
                _ => {
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The rational `χ` with `F(A_ii) = χ h`, if `F` has that shape.
    pub fn diagonal_character(&self, kinds: &[LetterKind]) -> Option<Rational> {
        let idx = kinds.iter().position(|k| matches!(*k, LetterKind::Linear { row, col } if row == col))?;
        let v = &self.values[idx];
        if v.is_zero() {
            return Some(Rational::zero());
        }
        v.unshift(1).filter(HPoly::is_constant).map(|c| c.constant_term())
    }
}

/// Leading word (under a graded order) of `p` and its coefficient, which must be
/// a nonzero rational constant.
pub fn constant_leading_term(p: &NCPoly, ord: &MonomialOrder) -> Result<(Monomial, Rational)> {
    let (w, c) = p.leading_term(ord).ok_or_else(|| Error::Construction("zero generator".into()))?;
    if !c.is_constant() {
        return Err(Error::Construction(format!("leading coefficient {c} is not constant in h")));
    }
    Ok((w.clone(), c.constant_term()))
}

/// Computes `F(X_e) = [X_e, P]_{LW} / LC(P)` for every letter and verifies
/// `[X_e, P] = F(X_e) · P` exactly. A commutator that is not a scalar multiple
/// of `P` is a construction error.
pub fn commutator_weight(env: &mut EnvelopingAlgebra, p: &NCPoly, ord: &MonomialOrder) -> Result<WeightTable> {
    let (lw, lc) = constant_leading_term(p, ord)?;
    let mut values = Vec::with_capacity(env.dim());
    for e in 0..env.dim() {
        let x = env.letter(e);
        let comm = env.commutator(&x, p)?;
        let f = comm.coefficient(&lw).scale(&lc.recip());
        let residual = &comm - &p.scale(&f);
        if !residual.is_zero() {
            return Err(Error::Construction(format!(
                "[X_{e}, P] is not a scalar multiple of P ({} stray terms)",
                residual.len()
            )));
        }
        values.push(f);
    }
    Ok(WeightTable { values })
}
