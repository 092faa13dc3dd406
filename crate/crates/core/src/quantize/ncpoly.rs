use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::arith::{Monomial, MonomialOrder, MultiPoly, Rational, Vars};
use crate::{Error, Result};

use super::hpoly::HPoly;

/// Element of `U_h` in PBW normal form: a sum of ordered words
/// `X_{i_1} ⋯ X_{i_k}` (`i_1 ≤ ⋯ ≤ i_k`) with coefficients in `Q[h]`.
///
/// An ordered word is stored as its exponent vector, so every key is a PBW
/// word by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    dim: usize,
    terms: BTreeMap<Monomial, HPoly>,
}

impl NCPoly {
    pub fn zero(dim: usize) -> Self {
        NCPoly { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::term(dim, Monomial::one(dim), HPoly::one())
    }

    pub fn constant(dim: usize, c: HPoly) -> Self {
        Self::term(dim, Monomial::one(dim), c)
    }

    pub fn letter(dim: usize, i: usize) -> Self {
        Self::term(dim, Monomial::var(dim, i), HPoly::one())
    }

    pub fn term(dim: usize, word: Monomial, c: HPoly) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(word, c);
        p
    }

    /// From `(ordered word, coefficient)` pairs. Unordered words are rejected;
    /// use the enveloping algebra to reduce them.
    pub fn from_ordered_words(dim: usize, words: impl IntoIterator<Item = (Vec<usize>, HPoly)>) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (w, c) in words {
            if w.windows(2).any(|x| x[0] > x[1]) {
                return Err(Error::Input("word is not in PBW order".into()));
            }
            if w.iter().any(|&l| l >= dim) {
                return Err(Error::Input("letter out of range".into()));
            }
            let letters: Vec<u16> = w.iter().map(|&l| l as u16).collect();
            p.add_term(Monomial::from_word(dim, &letters), c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &HPoly)> {
        self.terms.iter()
    }

    /// Terms as `(ordered letter list, coefficient)`.
    pub fn words(&self) -> impl Iterator<Item = (Vec<usize>, &HPoly)> {
        self.terms.iter().map(|(m, c)| (m.to_word().into_iter().map(usize::from).collect(), c))
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

    pub fn coefficient(&self, word: &Monomial) -> HPoly {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: Monomial, c: HPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(word.nvars(), self.dim);
        match self.terms.entry(word) {
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

    pub fn add_scaled(&mut self, other: &NCPoly, c: &HPoly) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        let mut out = Self::zero(self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&HPoly::constant(c.clone()))
    }

    /// Largest word length.
    pub fn word_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest value of word length plus `h`-degree over all coefficients.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .flat_map(|(w, c)| {
                c.coeffs().iter().enumerate().filter(|(_, x)| !num_traits::Zero::is_zero(*x)).map(move |(i, _)| w.degree() + i as u32)
            })
            .max()
    }

    /// True when every nonzero `h^i · word` has `i + |word| = d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.iter().all(|(w, c)| {
            c.coeffs().iter().enumerate().all(|(i, x)| num_traits::Zero::is_zero(x) || w.degree() + i as u32 == d)
        })
    }

    /// Leading word under a graded monomial order, with its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &HPoly)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    /// The coefficient of `h^i`, read as a commutative polynomial in the words.
    pub fn h_coefficient(&self, i: usize, vars: &Vars) -> Result<MultiPoly> {
        if vars.len() != self.dim {
            return Err(Error::VariableMismatch);
        }
        MultiPoly::from_terms(vars, self.terms.iter().map(|(w, c)| (w.clone(), c.coeff(i))))
    }

    /// Substitutes a rational value for `h`.
    pub fn eval_h(&self, h: &Rational) -> BTreeMap<Monomial, Rational> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval(h)))
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect()
    }

    /// Maps every coefficient, dropping zeros.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Monomial, &HPoly) -> HPoly) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(w, c));
        }
        out
    }

    pub fn format_with(&self, names: &[String]) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({c})");
            for l in w.to_word() {
                let _ = write!(s, "*{}", names.get(l as usize).map_or("?", String::as_str));
            }
        }
        s
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){:?}", w.to_word())?;
        }
        Ok(())
    }
}

fn same_dim(a: &NCPoly, b: &NCPoly) {
    assert_eq!(a.dim, b.dim, "NCPoly operands from different algebras");
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        same_dim(self, rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        same_dim(self, rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly { dim: self.dim, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}
