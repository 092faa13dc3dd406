use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arith::{certified_rank, monomials_up_to, reduce, Matrix, Monomial, MonomialOrder, MultiPoly, Rational, Vars};
use crate::invariants::OrbitIdeal;
use crate::lie::{lie_poisson_bracket, LieAlgebra};
use crate::{Error, Result};

use super::enveloping::EnvelopingAlgebra;
use super::hpoly::HPoly;
use super::ncpoly::NCPoly;
use super::weights::{commutator_weight, constant_leading_term, WeightTable};

/// Element of `C[𝒢*]/(p) ⊗ Q[h]`, represented on standard monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientElement {
    vars: Vars,
    terms: BTreeMap<Monomial, HPoly>,
}

impl QuotientElement {
    pub fn zero(vars: &Vars) -> Self {
        QuotientElement { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, HPoly)>) -> Self {
        let mut out = Self::zero(vars);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: HPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &HPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest monomial degree in the representative.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of `h^i` as a commutative polynomial.
    pub fn h_coefficient(&self, i: usize) -> MultiPoly {
        MultiPoly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.clone(), c.coeff(i)))).expect("same ring")
    }

    /// `self mod h`.
    pub fn mod_h(&self) -> MultiPoly {
        self.h_coefficient(0)
    }

    pub fn h_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(HPoly::degree).max()
    }

    /// Division by `h^k`, if every coefficient is divisible.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.unshift(k)?);
        }
        Some(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        Self::from_terms(&self.vars, self.terms.iter().map(|(m, d)| (m.clone(), d * c)))
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.vars.names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (k, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", names[k])?,
                    _ => write!(f, "*{}^{e}", names[k])?,
                }
            }
        }
        Ok(())
    }
}

/// The symmetrized generator `P = Sym(p)` and its reduction data.
#[derive(Clone, Debug)]
struct Generator {
    commutative: MultiPoly,
    sym: NCPoly,
    lead: Monomial,
    lead_coeff: Rational,
    weights: WeightTable,
}

/// Which divisible word the ideal reduction eliminates first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStrategy {
    LargestFirst,
    SmallestFirst,
}

/// Exact certificate that ordered words on standard monomials form a
/// `Q[h]`-basis of `U_h/I_h` up to a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCertificate {
    pub degree: u32,
    pub monomials: usize,
    pub standard: usize,
    /// Rows `φ(a)` (`a` standard) and `q·P` have pairwise distinct leading
    /// words covering every monomial of degree `≤ D`, each with a nonzero
    /// constant coefficient: a unitriangular change of basis over `Q[h]`.
    pub triangular: bool,
    /// Rank of the same rows at `h = 1`.
    pub rank_at_one: usize,
}

impl BasisCertificate {
    pub fn passed(&self) -> bool {
        self.triangular && self.rank_at_one == self.monomials
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub checked: usize,
    pub failures: Vec<usize>,
}

impl TorsionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of the deformation axioms on sampled pairs and triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub pairs: usize,
    pub triples: usize,
    /// `f ⋆ g ≡ f g (mod h)`.
    pub reduces_mod_h: bool,
    /// `f ⋆ g − g ⋆ f = h {f, g} (mod h²)`.
    pub bracket_first_order: bool,
    pub associative: bool,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.reduces_mod_h && self.bracket_first_order && self.associative
    }
}

/// `U_h / I_h` for a principal orbit ideal, with the star product on
/// `C[𝒢*]/(p)`.
///
/// `I_h` is generated by `P = Sym(p)`. Since `[X, P] = F(X) P` for every letter,
/// `P X = (X − F(X)) P`, the two-sided ideal equals the left ideal `U_h P`, and
/// reduction is left division by `P` under grevlex.
#[derive(Clone, Debug)]
pub struct QuantizedOrbit {
    env: EnvelopingAlgebra,
    order: MonomialOrder,
    generator: Option<Generator>,
    deg_cap: u32,
    left_multiples: BTreeMap<Monomial, NCPoly>,
}

impl QuantizedOrbit {
    /// Quantization of an orbit with a single generator.
    pub fn new(ideal: &OrbitIdeal, deg_cap: u32) -> Result<Self> {
        Self::from_generators(ideal.alg.clone(), &ideal.generators, deg_cap)
    }

    /// No generators quantizes all of `𝒢*`; one generator is the principal
    /// case. More are not supported.
    pub fn from_generators(alg: LieAlgebra, gens: &[MultiPoly], deg_cap: u32) -> Result<Self> {
        Self::with_work_limit(alg, gens, deg_cap, None)
    }

    pub fn with_work_limit(alg: LieAlgebra, gens: &[MultiPoly], deg_cap: u32, limit: Option<usize>) -> Result<Self> {
        let mut env = EnvelopingAlgebra::new(alg);
        env.set_work_limit(limit);
        let order = MonomialOrder::grevlex();
        let generator = match gens {
            [] => None,
            [p] => {
                if p.vars() != env.lie().vars() {
                    return Err(Error::VariableMismatch);
                }
                let sym = env.symmetrize(p)?;
                let (lead, lead_coeff) = constant_leading_term(&sym, &order)?;
                let weights = commutator_weight(&mut env, &sym, &order)?;
                Some(Generator { commutative: p.clone(), sym, lead, lead_coeff, weights })
            }
            _ => {
                return Err(Error::Capacity(format!(
                    "ideals with {} generators are not supported; only principal ideals",
                    gens.len()
                )))
            }
        };
        Ok(QuantizedOrbit { env, order, generator, deg_cap, left_multiples: BTreeMap::new() })
    }

    pub fn deg_cap(&self) -> u32 {
        self.deg_cap
    }

    pub fn set_deg_cap(&mut self, cap: u32) {
        self.deg_cap = cap;
    }

    pub fn env(&self) -> &EnvelopingAlgebra {
        &self.env
    }

    pub fn env_mut(&mut self) -> &mut EnvelopingAlgebra {
        &mut self.env
    }

    pub fn vars(&self) -> &Vars {
        self.env.lie().vars()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generator(&self) -> Option<&MultiPoly> {
        self.generator.as_ref().map(|g| &g.commutative)
    }

    /// `P = Sym(p)`.
    pub fn sym_generator(&self) -> Option<&NCPoly> {
        self.generator.as_ref().map(|g| &g.sym)
    }

    pub fn weights(&self) -> Option<&WeightTable> {
        self.generator.as_ref().map(|g| &g.weights)
    }

    pub fn leading_word(&self) -> Option<&Monomial> {
        self.generator.as_ref().map(|g| &g.lead)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.generator.as_ref().is_none_or(|g| !g.lead.divides(m))
    }

    pub fn standard_monomials(&self, degree: u32) -> Vec<Monomial> {
        monomials_up_to(self.env.dim(), degree).into_iter().filter(|m| self.is_standard(m)).collect()
    }

    /// Remainder of `p` on division by the generator (its normal form in the
    /// commutative quotient).
    pub fn commutative_normal_form(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.vars() != self.vars() {
            return Err(Error::VariableMismatch);
        }
        Ok(match &self.generator {
            Some(g) => reduce(p, core::slice::from_ref(&g.commutative), &self.order),
            None => p.clone(),
        })
    }

    /// The class of a polynomial, with constant coefficients in `h`.
    pub fn element(&self, p: &MultiPoly) -> Result<QuotientElement> {
        let nf = self.commutative_normal_form(p)?;
        Ok(QuotientElement::from_terms(self.vars(), nf.terms().map(|(m, c)| (m.clone(), HPoly::constant(c.clone())))))
    }

    /// `{f, g}` reduced to the quotient.
    pub fn quotient_bracket(&self, f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
        self.commutative_normal_form(&lie_poisson_bracket(f, g, self.env.lie())?)
    }

    fn left_multiple(&mut self, q: &Monomial) -> Result<NCPoly> {
        if let Some(m) = self.left_multiples.get(q) {
            return Ok(m.clone());
        }
        let sym = self.generator.as_ref().expect("called with a generator").sym.clone();
        let word = NCPoly::term(self.env.dim(), q.clone(), HPoly::one());
        let prod = self.env.multiply(&word, &sym)?;
        self.left_multiples.insert(q.clone(), prod.clone());
        Ok(prod)
    }

    fn check_cap(&self, u: &NCPoly) -> Result<()> {
        match u.word_degree() {
            Some(d) if d > self.deg_cap => {
                Err(Error::Capacity(format!("degree {d} exceeds the working cap {}", self.deg_cap)))
            }
            _ => Ok(()),
        }
    }

    pub fn ideal_reduce(&mut self, u: &NCPoly) -> Result<NCPoly> {
        self.ideal_reduce_with(u, ReductionStrategy::LargestFirst)
    }

    /// Normal form of `u` modulo `I_h`: supported on ordered words of standard
    /// monomials, with `u − result ∈ U_h P`.
    pub fn ideal_reduce_with(&mut self, u: &NCPoly, strategy: ReductionStrategy) -> Result<NCPoly> {
        self.check_cap(u)?;
        let Some(g) = &self.generator else { return Ok(u.clone()) };
        let (lead, lc_inv) = (g.lead.clone(), g.lead_coeff.recip());
        let mut rest = u.clone();
        loop {
            let divisible = rest.terms().filter(|(w, _)| lead.divides(w)).map(|(w, _)| w);
            let pick = match strategy {
                ReductionStrategy::LargestFirst => divisible.max_by(|a, b| self.order.cmp(a, b)),
                ReductionStrategy::SmallestFirst => divisible.min_by(|a, b| self.order.cmp(a, b)),
            };
            let Some(w) = pick.cloned() else { break };
            let c = rest.coefficient(&w).scale(&lc_inv);
            let q = w.div(&lead).expect("divisible");
            let multiple = self.left_multiple(&q)?;
            rest.add_scaled(&multiple, &(-&c));
            debug_assert!(rest.coefficient(&w).is_zero());
        }
        Ok(rest)
    }

    /// Reduces with two different elimination orders and fails hard if they
    /// disagree.
    pub fn ideal_reduce_checked(&mut self, u: &NCPoly) -> Result<NCPoly> {
        let a = self.ideal_reduce_with(u, ReductionStrategy::LargestFirst)?;
        let b = self.ideal_reduce_with(u, ReductionStrategy::SmallestFirst)?;
        if a != b {
            return Err(Error::Construction("ideal reduction is not confluent: elimination orders disagree".into()));
        }
        Ok(a)
    }

    /// `φ`: standard monomial `v^α` to the ordered word `Π s^{−α} X^α`.
    pub fn phi(&self, f: &QuotientElement) -> Result<NCPoly> {
        if f.vars() != self.vars() {
            return Err(Error::VariableMismatch);
        }
        let mut out = NCPoly::zero(self.env.dim());
        for (m, c) in f.terms() {
            out.add_term(m.clone(), c.scale(&self.env.word_scale(m).recip()));
        }
        Ok(out)
    }

    /// `φ⁻¹` on a reduced element; fails if a word outside the basis survives.
    pub fn phi_inverse(&self, u: &NCPoly) -> Result<QuotientElement> {
        if let Some((w, _)) = u.terms().find(|(w, _)| !self.is_standard(w)) {
            return Err(Error::Construction(format!("reduced element has non-standard word {:?}", w.to_word())));
        }
        Ok(QuotientElement::from_terms(self.vars(), self.env.phi_inverse(u)))
    }

    /// `f ⋆ g = φ⁻¹(reduce(φ(f) φ(g)))`.
    pub fn star_product(&mut self, f: &QuotientElement, g: &QuotientElement) -> Result<QuotientElement> {
        let total = f.degree() + g.degree();
        if total > self.deg_cap {
            return Err(Error::Capacity(format!("product degree {total} exceeds the working cap {}", self.deg_cap)));
        }
        let (pf, pg) = (self.phi(f)?, self.phi(g)?);
        let prod = self.env.multiply(&pf, &pg)?;
        let red = self.ideal_reduce(&prod)?;
        self.phi_inverse(&red)
    }

    /// Star product of two polynomials (reduced to the quotient first).
    pub fn star(&mut self, f: &MultiPoly, g: &MultiPoly) -> Result<QuotientElement> {
        let (fe, ge) = (self.element(f)?, self.element(g)?);
        self.star_product(&fe, &ge)
    }

    /// Triangularity of `{φ(a) : a ∈ 𝒜} ∪ {q·P}` up to degree `d`, plus the
    /// exact rank of the same rows at `h = 1`.
    pub fn basis_certificate(&mut self, d: u32) -> Result<BasisCertificate> {
        let monos = monomials_up_to(self.env.dim(), d);
        let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<NCPoly> = Vec::with_capacity(monos.len());
        let mut triangular = true;
        let mut standard = 0;
        for m in &monos {
            let row = if self.is_standard(m) {
                standard += 1;
                NCPoly::term(self.env.dim(), m.clone(), HPoly::constant(self.env.word_scale(m).recip()))
            } else {
                let lead = self.leading_word().expect("non-standard implies a generator").clone();
                self.left_multiple(&m.div(&lead).expect("divisible"))?
            };
            match row.leading_term(&self.order) {
                Some((w, c)) if w == m && c.is_constant() && !c.is_zero() => {}
                _ => triangular = false,
            }
            if row.word_degree().unwrap_or(0) > d {
                triangular = false;
            }
            rows.push(row);
        }
        let one = Rational::from_integer(1.into());
        let mut mat = Matrix::filled(rows.len(), monos.len(), Rational::zero());
        for (r, row) in rows.iter().enumerate() {
            for (w, c) in row.eval_h(&one) {
                match index.get(&w) {
                    Some(&col) => mat[(r, col)] = c,
                    None => triangular = false,
                }
            }
        }
        let rank_at_one = certified_rank(&mat);
        Ok(BasisCertificate { degree: d, monomials: monos.len(), standard, triangular, rank_at_one })
    }

    /// `reduce(h·u) = h·reduce(u)` on each sample.
    pub fn torsion_check(&mut self, samples: &[NCPoly]) -> Result<TorsionReport> {
        let h = HPoly::h();
        let mut failures = Vec::new();
        for (i, u) in samples.iter().enumerate() {
            let lhs = self.ideal_reduce(&u.scale(&h))?;
            let rhs = self.ideal_reduce(u)?.scale(&h);
            if lhs != rhs {
                failures.push(i);
            }
        }
        Ok(TorsionReport { checked: samples.len(), failures })
    }

    /// Checks `f ⋆ g ≡ fg (mod h)`, `f ⋆ g − g ⋆ f ≡ h{f, g} (mod h²)` on
    /// pairs and `(f ⋆ g) ⋆ k = f ⋆ (g ⋆ k)` on triples.
    pub fn check_deformation_axioms(
        &mut self,
        pairs: &[(MultiPoly, MultiPoly)],
        triples: &[(MultiPoly, MultiPoly, MultiPoly)],
    ) -> Result<AxiomReport> {
        let mut report = AxiomReport {
            pairs: pairs.len(),
            triples: triples.len(),
            reduces_mod_h: true,
            bracket_first_order: true,
            associative: true,
            failures: Vec::new(),
        };
        for (i, (f, g)) in pairs.iter().enumerate() {
            let fg = self.star(f, g)?;
            let gf = self.star(g, f)?;
            if fg.mod_h() != self.commutative_normal_form(&(f * g))? {
                report.reduces_mod_h = false;
                report.failures.push(format!("pair {i}: f*g mod h differs from the commutative product"));
            }
            let comm = fg.sub(&gf);
            let bracket = self.quotient_bracket(f, g)?;
            if !comm.mod_h().is_zero() || comm.h_coefficient(1) != bracket {
                report.bracket_first_order = false;
                report.failures.push(format!("pair {i}: first-order commutator differs from the Poisson bracket"));
            }
        }
        for (i, (f, g, k)) in triples.iter().enumerate() {
            let (fe, ge, ke) = (self.element(f)?, self.element(g)?, self.element(k)?);
            let left = {
                let fg = self.star_product(&fe, &ge)?;
                self.star_product(&fg, &ke)?
            };
            let right = {
                let gk = self.star_product(&ge, &ke)?;
                self.star_product(&fe, &gk)?
            };
            if left != right {
                report.associative = false;
                report.failures.push(format!("triple {i}: (f*g)*k differs from f*(g*k)"));
            }
        }
        Ok(report)
    }
}
