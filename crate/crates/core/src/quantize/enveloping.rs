use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{Monomial, MultiPoly, Rational};
use crate::lie::LieAlgebra;
use crate::{Error, Result};

use super::hpoly::HPoly;
use super::ncpoly::NCPoly;

type Terms = Arc<Vec<(Monomial, HPoly)>>;

/// Largest degree accepted by [`EnvelopingAlgebra::symmetrize`].
pub const SYM_DEGREE_CAP: u32 = 8;

/// `U_h(𝒢) = T(𝒢) / (XY − YX − h[X, Y])` with memoized PBW multiplication.
///
/// The caches only ever grow; all products are exact. Methods take `&mut self`
/// so a context can be cloned per worker.
#[derive(Clone, Debug)]
pub struct EnvelopingAlgebra {
    alg: LieAlgebra,
    letter_cache: BTreeMap<(Monomial, u16), Terms>,
    word_cache: BTreeMap<(Monomial, Monomial), Terms>,
    sym_cache: BTreeMap<Monomial, NCPoly>,
    work_limit: Option<usize>,
    work: usize,
}

fn max_letter(w: &Monomial) -> Option<usize> {
    w.0.iter().rposition(|&e| e > 0)
}

fn min_letter(w: &Monomial) -> Option<usize> {
    w.0.iter().position(|&e| e > 0)
}

fn accumulate(acc: &mut BTreeMap<Monomial, HPoly>, m: &Monomial, c: HPoly) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m.clone()) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl EnvelopingAlgebra {
    pub fn new(alg: LieAlgebra) -> Self {
        EnvelopingAlgebra {
            alg,
            letter_cache: BTreeMap::new(),
            word_cache: BTreeMap::new(),
            sym_cache: BTreeMap::new(),
            work_limit: None,
            work: 0,
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Caps the number of elementary reordering steps; exceeding it is a
    /// capacity error.
    pub fn set_work_limit(&mut self, limit: Option<usize>) {
        self.work_limit = limit;
    }

    pub fn work_done(&self) -> usize {
        self.work
    }

    pub fn clear_caches(&mut self) {
        self.letter_cache.clear();
        self.word_cache.clear();
        self.sym_cache.clear();
    }

    fn tick(&mut self) -> Result<()> {
        self.work += 1;
        match self.work_limit {
            Some(l) if self.work > l => Err(Error::Capacity(format!("PBW work limit of {l} steps exceeded"))),
            _ => Ok(()),
        }
    }

    pub fn letter(&self, i: usize) -> NCPoly {
        NCPoly::letter(self.dim(), i)
    }

    fn check(&self, u: &NCPoly) -> Result<()> {
        if u.dim() != self.dim() {
            return Err(Error::Input(format!("element of an algebra of dimension {}, expected {}", u.dim(), self.dim())));
        }
        Ok(())
    }

    /// Ordered word `w` times the letter `X_x`:
    /// if `w = w'·y` with `y > x`, then `w·x = (w'·x)·y + h Σ_k c_{yx}^k w'·X_k`.
    fn word_letter(&mut self, w: &Monomial, x: usize) -> Result<Terms> {
        let key = (w.clone(), x as u16);
        if let Some(t) = self.letter_cache.get(&key) {
            return Ok(t.clone());
        }
        self.tick()?;
        let result = match max_letter(w) {
            Some(y) if y > x => {
                let mut rest = w.clone();
                rest.0[y] -= 1;
                let mut acc = BTreeMap::new();
                let left = self.word_letter(&rest, x)?;
                for (m, c) in left.iter() {
                    for (m2, c2) in self.word_letter(m, y)?.iter() {
                        accumulate(&mut acc, m2, c * c2);
                    }
                }
                let bracket: Vec<(usize, Rational)> = self.alg.constants.bracket(y, x).to_vec();
                for (k, ck) in bracket {
                    let coeff = HPoly::monomial(1, ck);
                    for (m2, c2) in self.word_letter(&rest, k)?.iter() {
                        accumulate(&mut acc, m2, &coeff * c2);
                    }
                }
                acc.into_iter().collect()
            }
            _ => {
                let mut m = w.clone();
                m.0[x] += 1;
                alloc::vec![(m, HPoly::one())]
            }
        };
        let result = Arc::new(result);
        self.letter_cache.insert(key, result.clone());
        Ok(result)
    }

    /// Product of two ordered words.
    fn word_word(&mut self, a: &Monomial, b: &Monomial) -> Result<Terms> {
        let (Some(z), Some(lo)) = (max_letter(b), min_letter(b)) else {
            return Ok(Arc::new(alloc::vec![(a.clone(), HPoly::one())]));
        };
        if max_letter(a).is_none_or(|top| top <= lo) {
            return Ok(Arc::new(alloc::vec![(a.mul(b), HPoly::one())]));
        }
        let key = (a.clone(), b.clone());
        if let Some(t) = self.word_cache.get(&key) {
            return Ok(t.clone());
        }
        let mut prefix = b.clone();
        prefix.0[z] -= 1;
        let left = self.word_word(a, &prefix)?;
        let mut acc = BTreeMap::new();
        for (m, c) in left.iter() {
            for (m2, c2) in self.word_letter(m, z)?.iter() {
                accumulate(&mut acc, m2, c * c2);
            }
        }
        let result: Terms = Arc::new(acc.into_iter().collect());
        self.word_cache.insert(key, result.clone());
        Ok(result)
    }

    /// `u · X_x`.
    pub fn mul_letter(&mut self, u: &NCPoly, x: usize) -> Result<NCPoly> {
        self.check(u)?;
        if x >= self.dim() {
            return Err(Error::Input(format!("letter {x} out of range")));
        }
        let mut acc = BTreeMap::new();
        for (w, c) in u.terms() {
            for (m, c2) in self.word_letter(w, x)?.iter() {
                accumulate(&mut acc, m, c * c2);
            }
        }
        Ok(from_map(self.dim(), acc))
    }

    pub fn multiply(&mut self, u: &NCPoly, v: &NCPoly) -> Result<NCPoly> {
        self.check(u)?;
        self.check(v)?;
        let mut acc = BTreeMap::new();
        for (wu, cu) in u.terms() {
            for (wv, cv) in v.terms() {
                let c = cu * cv;
                for (m, c2) in self.word_word(wu, wv)?.iter() {
                    accumulate(&mut acc, m, &c * c2);
                }
            }
        }
        Ok(from_map(self.dim(), acc))
    }

    /// `uv − vu`.
    pub fn commutator(&mut self, u: &NCPoly, v: &NCPoly) -> Result<NCPoly> {
        Ok(&self.multiply(u, v)? - &self.multiply(v, u)?)
    }

    /// PBW normal form of `coeff · X_{w_1} ⋯ X_{w_m}` for an arbitrary word.
    pub fn pbw_reduce(&mut self, word: &[usize], coeff: HPoly) -> Result<NCPoly> {
        let mut acc = NCPoly::constant(self.dim(), coeff);
        for &x in word {
            acc = self.mul_letter(&acc, x)?;
        }
        Ok(acc)
    }

    /// Reference rewriting engine: repeatedly replaces an adjacent descent
    /// `X_j X_i` (`j > i`) by `X_i X_j + h[X_j, X_i]`. `choose(k)` picks which of
    /// `k` candidates to rewrite next (first the word, then the position), so
    /// any rewrite schedule can be driven from outside.
    pub fn pbw_rewrite_with_schedule(
        &self,
        word: &[usize],
        coeff: HPoly,
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> Result<NCPoly> {
        let dim = self.dim();
        if word.iter().any(|&l| l >= dim) {
            return Err(Error::Input("letter out of range".into()));
        }
        let mut pending: BTreeMap<Vec<usize>, HPoly> = BTreeMap::new();
        let mut done = NCPoly::zero(dim);
        if !coeff.is_zero() {
            pending.insert(word.to_vec(), coeff);
        }
        while !pending.is_empty() {
            let idx = choose(pending.len()) % pending.len();
            let key = pending.keys().nth(idx).cloned().expect("index in range");
            let c = pending.remove(&key).expect("present");
            let descents: Vec<usize> = (0..key.len().saturating_sub(1)).filter(|&p| key[p] > key[p + 1]).collect();
            if descents.is_empty() {
                let letters: Vec<u16> = key.iter().map(|&l| l as u16).collect();
                done.add_term(Monomial::from_word(dim, &letters), c);
                continue;
            }
            let p = descents[choose(descents.len()) % descents.len()];
            let (y, x) = (key[p], key[p + 1]);
            let mut swapped = key.clone();
            swapped.swap(p, p + 1);
            add_pending(&mut pending, swapped, c.clone());
            for (k, ck) in self.alg.constants.bracket(y, x) {
                let mut w = key[..p].to_vec();
                w.push(*k);
                w.extend_from_slice(&key[p + 2..]);
                add_pending(&mut pending, w, &c * &HPoly::monomial(1, ck.clone()));
            }
        }
        Ok(done)
    }

    /// `Π s_k^{α_k}` for the letter scales `s_k`.
    pub fn word_scale(&self, alpha: &Monomial) -> Rational {
        let mut acc = Rational::one();
        for (k, &e) in alpha.0.iter().enumerate() {
            for _ in 0..e {
                acc *= self.alg.basis.scale(k);
            }
        }
        acc
    }

    /// Symmetrization of the ordered letters `X^α` over all orderings:
    /// `Sym(α) = (1/|α|) Σ_j α_j Sym(α − e_j) X_j`.
    fn sym_letters(&mut self, alpha: &Monomial) -> Result<NCPoly> {
        if let Some(s) = self.sym_cache.get(alpha) {
            return Ok(s.clone());
        }
        let deg = alpha.degree();
        let result = if deg <= 1 {
            NCPoly::term(self.dim(), alpha.clone(), HPoly::one())
        } else {
            let mut acc = NCPoly::zero(self.dim());
            for j in 0..alpha.nvars() {
                let e = alpha.0[j];
                if e == 0 {
                    continue;
                }
                let mut rest = alpha.clone();
                rest.0[j] -= 1;
                let left = self.sym_letters(&rest)?;
                let prod = self.mul_letter(&left, j)?;
                acc.add_scaled(&prod, &HPoly::constant(crate::arith::rat(e as i64, deg as i64)));
            }
            acc
        };
        self.sym_cache.insert(alpha.clone(), result.clone());
        Ok(result)
    }

    /// The symmetrizer `C[𝒢*] → U_h`. The coordinate `v_k` corresponds to
    /// `X_k / s_k` (the letter pairs with `v_k` with weight `s_k`).
    pub fn symmetrize(&mut self, p: &MultiPoly) -> Result<NCPoly> {
        if p.vars() != self.alg.vars() {
            return Err(Error::VariableMismatch);
        }
        if let Some(d) = p.total_degree() {
            if d > SYM_DEGREE_CAP {
                return Err(Error::Capacity(format!("symmetrizing degree {d} exceeds the cap of {SYM_DEGREE_CAP}")));
            }
        }
        let mut acc = NCPoly::zero(self.dim());
        for (m, c) in p.terms() {
            let s = self.sym_letters(m)?;
            acc.add_scaled(&s, &HPoly::constant(c / self.word_scale(m)));
        }
        Ok(acc)
    }

    /// The ordered-word identification `v^α ↦ Π s^{−α} X^α`.
    pub fn phi(&self, p: &MultiPoly) -> Result<NCPoly> {
        if p.vars() != self.alg.vars() {
            return Err(Error::VariableMismatch);
        }
        let mut out = NCPoly::zero(self.dim());
        for (m, c) in p.terms() {
            out.add_term(m.clone(), HPoly::constant(c / self.word_scale(m)));
        }
        Ok(out)
    }

    /// Inverse of [`Self::phi`], extended `Q[h]`-linearly: `(word, coefficient)` pairs
    /// in the commutative variables.
    pub fn phi_inverse(&self, u: &NCPoly) -> Vec<(Monomial, HPoly)> {
        u.terms().map(|(w, c)| (w.clone(), c.scale(&self.word_scale(w)))).collect()
    }

    /// The commutative image `u mod h` under `φ⁻¹`.
    pub fn mod_h(&self, u: &NCPoly) -> MultiPoly {
        let mut p = MultiPoly::zero(self.alg.vars());
        for (w, c) in u.terms() {
            let c0 = c.constant_term();
            if !c0.is_zero() {
                p.add_term(w.clone(), c0 * self.word_scale(w));
            }
        }
        p
    }

    /// `Σ c_k X_k` for a rational coefficient vector.
    pub fn linear(&self, coeffs: &[Rational]) -> NCPoly {
        let mut out = NCPoly::zero(self.dim());
        for (k, c) in coeffs.iter().enumerate() {
            out.add_term(Monomial::var(self.dim(), k), HPoly::constant(c.clone()));
        }
        out
    }

    /// `[X_i, X_j]` as computed in `U_h` divided by `h`, for testing the relation.
    pub fn bracket_letters(&self, i: usize, j: usize) -> NCPoly {
        let mut out = NCPoly::zero(self.dim());
        for (k, c) in self.alg.constants.bracket(i, j) {
            out.add_term(Monomial::var(self.dim(), *k), HPoly::constant(c.clone()));
        }
        out
    }
}

fn add_pending(pending: &mut BTreeMap<Vec<usize>, HPoly>, w: Vec<usize>, c: HPoly) {
    let entry = pending.entry(w.clone()).or_default();
    *entry += &c;
    if entry.is_zero() {
        pending.remove(&w);
    }
}

fn from_map(dim: usize, acc: BTreeMap<Monomial, HPoly>) -> NCPoly {
    let mut out = NCPoly::zero(dim);
    for (m, c) in acc {
        out.add_term(m, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::vec;

    fn env(n: usize) -> EnvelopingAlgebra {
        EnvelopingAlgebra::new(LieAlgebra::new(n).unwrap())
    }

    #[test]
    fn n1_relation() {
        // Letters A = 0, B = 1 with [A, B] = 2B: BA = AB − 2hB.
        let mut e = env(1);
        let ba = e.pbw_reduce(&[1, 0], HPoly::one()).unwrap();
        let expected = NCPoly::from_ordered_words(2, vec![(vec![0, 1], HPoly::one()), (vec![1], HPoly::monomial(1, int(-2)))]).unwrap();
        assert_eq!(ba, expected);
        let sorted = e.pbw_reduce(&[0, 0, 1], HPoly::one()).unwrap();
        assert_eq!(sorted, NCPoly::from_ordered_words(2, vec![(vec![0, 0, 1], HPoly::one())]).unwrap());
    }

    #[test]
    fn defining_relation_all_pairs() {
        let mut e = env(2);
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                let xi = e.letter(i);
                let xj = e.letter(j);
                let comm = e.commutator(&xi, &xj).unwrap();
                assert_eq!(comm, e.bracket_letters(i, j).scale(&HPoly::h()));
            }
        }
    }

    #[test]
    fn sym_n1() {
        // Sym(x_A x_B) = ½(AB + BA) = AB − hB, with x_A = 2 a_11, x_B = c_11.
        let mut e = env(1);
        let alg = e.lie().clone();
        let p = &alg.basis.letter_function(0) * &alg.basis.letter_function(1);
        let s = e.symmetrize(&p).unwrap();
        let expected = NCPoly::from_ordered_words(2, vec![(vec![0, 1], HPoly::one()), (vec![1], HPoly::monomial(1, int(-1)))]).unwrap();
        assert_eq!(s, expected);
        assert_eq!(e.symmetrize(&alg.basis.letter_function(1)).unwrap(), e.letter(1));
        assert_eq!(e.mod_h(&s), p);
    }

    #[test]
    fn schedule_engine_agrees() {
        let e = env(2);
        let word = [6, 3, 5, 0, 2, 4, 1];
        let mut first = |_: usize| 0usize;
        let mut counter = 0usize;
        let mut rotating = |k: usize| {
            counter += 7;
            counter % k
        };
        let a = e.pbw_rewrite_with_schedule(&word, HPoly::one(), &mut first).unwrap();
        let b = e.pbw_rewrite_with_schedule(&word, HPoly::one(), &mut rotating).unwrap();
        let mut e2 = env(2);
        let c = e2.pbw_reduce(&word, HPoly::one()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(c.is_homogeneous(7));
    }

    #[test]
    fn work_limit() {
        let mut e = env(2);
        e.set_work_limit(Some(3));
        assert!(matches!(e.pbw_reduce(&[6, 5, 4, 3, 2, 1, 0], HPoly::one()), Err(Error::Capacity(_))));
    }

    #[test]
    fn sym_degree_cap() {
        let mut e = env(1);
        let x = MultiPoly::var(e.lie().vars(), 0);
        assert!(matches!(e.symmetrize(&x.pow(9)), Err(Error::Capacity(_))));
        let s = e.symmetrize(&x.pow(3).scale(&rat(1, 3))).unwrap();
        assert!(s.len() == 1);
    }
}
