//! JSON wire formats.
//!
//! Rationals travel as `"p/q"` strings (the denominator is always written),
//! floats as decimal strings with 17 significant digits. Input rationals may
//! also be plain JSON integers or decimal strings such as `"-0.25"`.

use coorbit_core::arith::{format_rational, parse_rational, Matrix, Monomial, MultiPoly, Rational, Vars};
use coorbit_core::invariants::{InvariantCertificate, OrbitIdeal, SemiinvariantFamily, SemiinvariantKind};
use coorbit_core::lie::{LetterKind, LieAlgebra};
use coorbit_core::orbits::{AlgebraPoint, DualPoint, GroupElement, NormalForm};
use coorbit_core::quantize::{HPoly, NCPoly, QuotientElement};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    pub fn parse(&self) -> Result<Rational, CliError> {
        match self {
            RationalInput::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalInput::Text(s) => Ok(parse_rational(s)?),
        }
    }
}

pub fn rational(r: &Rational) -> String {
    format_rational(r)
}

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn matrix(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(rational).collect()).collect()
}

pub fn float_matrix(m: &Matrix<f64>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| float(*x)).collect()).collect()
}

pub fn parse_matrix(rows: &[Vec<RationalInput>]) -> Result<Matrix<Rational>, CliError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(RationalInput::parse).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed)?)
}

pub fn parse_rationals(v: &[RationalInput]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(RationalInput::parse).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GroupElementJson<T> {
    pub x: Vec<Vec<T>>,
    pub g: Vec<Vec<T>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraPointJson<T> {
    pub b: Vec<Vec<T>>,
    pub a: Vec<Vec<T>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DualPointJson<T> {
    pub c: Vec<Vec<T>>,
    pub a: Vec<Vec<T>>,
}

pub fn group_element(p: &GroupElement<Rational>) -> GroupElementJson<String> {
    GroupElementJson { x: matrix(&p.x), g: matrix(&p.g) }
}

pub fn parse_group_element(p: &GroupElementJson<RationalInput>) -> Result<GroupElement<Rational>, CliError> {
    Ok(GroupElement::new(parse_matrix(&p.x)?, parse_matrix(&p.g)?)?)
}

pub fn algebra_point(y: &AlgebraPoint<Rational>) -> AlgebraPointJson<String> {
    AlgebraPointJson { b: matrix(&y.b), a: matrix(&y.a) }
}

pub fn parse_algebra_point(y: &AlgebraPointJson<RationalInput>) -> Result<AlgebraPoint<Rational>, CliError> {
    Ok(AlgebraPoint::new(parse_matrix(&y.b)?, parse_matrix(&y.a)?)?)
}

pub fn dual_point(pt: &DualPoint<Rational>) -> DualPointJson<String> {
    DualPointJson { c: matrix(&pt.c), a: matrix(&pt.a) }
}

pub fn parse_dual_point(pt: &DualPointJson<RationalInput>) -> Result<DualPoint<Rational>, CliError> {
    Ok(DualPoint::new(parse_matrix(&pt.c)?, parse_matrix(&pt.a)?)?)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolyTerm<T> {
    pub coefficient: T,
    pub exponents: Vec<u16>,
}

/// `{variables, terms: [{coefficient, exponents}]}`. On input `variables` may be
/// omitted, in which case the canonical coordinates are assumed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolyJson<T> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    pub terms: Vec<PolyTerm<T>>,
}

pub fn poly(p: &MultiPoly) -> PolyJson<String> {
    PolyJson {
        variables: Some(p.vars().names().to_vec()),
        terms: p.terms().map(|(m, c)| PolyTerm { coefficient: rational(c), exponents: m.0.clone() }).collect(),
    }
}

pub fn parse_poly(p: &PolyJson<RationalInput>, vars: &Vars) -> Result<MultiPoly, CliError> {
    if let Some(names) = &p.variables {
        if names.as_slice() != vars.names() {
            return Err(CliError::Usage(format!("polynomial variables {names:?} do not match {:?}", vars.names())));
        }
    }
    let terms = p
        .terms
        .iter()
        .map(|t| Ok((Monomial(t.exponents.clone()), t.coefficient.parse()?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(MultiPoly::from_terms(vars, terms)?)
}

pub fn hpoly(c: &HPoly) -> Vec<String> {
    c.coeffs().iter().map(rational).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WordTerm<T> {
    pub word: Vec<usize>,
    /// Coefficients of `h⁰, h¹, …`.
    pub coeff: Vec<T>,
}

/// An element of `U_h`: `{letters, terms: [{word, coeff}]}`. Output words are
/// ordered (PBW normal form); input words may be in any order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct NCPolyJson<T> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub letters: Option<Vec<String>>,
    pub terms: Vec<WordTerm<T>>,
}

pub fn ncpoly(u: &NCPoly, names: &[String]) -> NCPolyJson<String> {
    NCPolyJson {
        letters: Some(names.iter().map(|n| n.to_uppercase()).collect()),
        terms: u.words().map(|(word, c)| WordTerm { word, coeff: hpoly(c) }).collect(),
    }
}

pub fn parse_word_terms(u: &NCPolyJson<RationalInput>) -> Result<Vec<(Vec<usize>, HPoly)>, CliError> {
    u.terms.iter().map(|t| Ok((t.word.clone(), HPoly::from_coeffs(parse_rationals(&t.coeff)?)))).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct QuotientTerm {
    pub exponents: Vec<u16>,
    pub coeff: Vec<String>,
}

/// A class in `C[𝒢*]/(p) ⊗ Q[h]` on standard monomials.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct QuotientJson {
    pub variables: Vec<String>,
    pub terms: Vec<QuotientTerm>,
}

pub fn quotient(e: &QuotientElement) -> QuotientJson {
    QuotientJson {
        variables: e.vars().names().to_vec(),
        terms: e.terms().map(|(m, c)| QuotientTerm { exponents: m.0.clone(), coeff: hpoly(c) }).collect(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LetterJson {
    pub index: usize,
    pub name: String,
    pub kind: &'static str,
    pub row: usize,
    pub col: usize,
    pub scale: String,
    pub matrix: Vec<Vec<String>>,
}

/// Basis of `𝒢` and its sparse structure constants `[X_i, X_j] = Σ c_ij^k X_k`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BasisJson {
    pub n: usize,
    pub dim: usize,
    pub letters: Vec<LetterJson>,
    pub structure_constants: Vec<BracketEntry>,
}

pub fn basis(alg: &LieAlgebra) -> BasisJson {
    let b = &alg.basis;
    let letters = (0..alg.dim())
        .map(|k| {
            let (kind, row, col) = match b.kind(k) {
                LetterKind::Linear { row, col } => ("linear", row, col),
                LetterKind::Symmetric { row, col } => ("symmetric", row, col),
            };
            LetterJson {
                index: k,
                name: b.names()[k].to_uppercase(),
                kind,
                row,
                col,
                scale: rational(b.scale(k)),
                matrix: matrix(b.element(k)),
            }
        })
        .collect();
    let structure_constants = alg
        .constants
        .entries()
        .map(|(i, j, k, v)| BracketEntry { i, j, k, value: rational(v) })
        .collect();
    BasisJson { n: alg.n(), dim: alg.dim(), letters, structure_constants }
}

fn kind_name(k: &SemiinvariantKind) -> String {
    match k {
        SemiinvariantKind::Trace(m) => format!("trace-{m}"),
        SemiinvariantKind::Pfaffian => "pfaffian".into(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct FamilyJson {
    pub n: usize,
    pub k: usize,
    pub kinds: Vec<String>,
    pub weights: Vec<i64>,
    pub generators: Vec<PolyJson<String>>,
}

pub fn family(f: &SemiinvariantFamily) -> FamilyJson {
    FamilyJson {
        n: f.n,
        k: f.k,
        kinds: f.kinds.iter().map(kind_name).collect(),
        weights: f.weights.clone(),
        generators: f.generators.iter().map(poly).collect(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct IdealJson {
    pub n: usize,
    pub k: usize,
    pub lambdas: Vec<String>,
    pub kinds: Vec<String>,
    pub alphas: Vec<String>,
    pub exponents: Vec<u32>,
    pub generators: Vec<PolyJson<String>>,
}

pub fn ideal(i: &OrbitIdeal) -> IdealJson {
    IdealJson {
        n: i.n,
        k: i.k,
        lambdas: i.lambdas.iter().map(rational).collect(),
        kinds: i.kinds.iter().map(kind_name).collect(),
        alphas: i.alphas.iter().map(rational).collect(),
        exponents: i.exponents.clone(),
        generators: i.generators.iter().map(poly).collect(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct NormalFormJson {
    pub lambdas: Vec<String>,
    pub h: Vec<Vec<String>>,
    pub witness: GroupElementJson<String>,
    pub regular: bool,
    pub residual: String,
}

pub fn normal_form(nf: &NormalForm) -> NormalFormJson {
    NormalFormJson {
        lambdas: nf.lambdas.iter().map(|l| float(*l)).collect(),
        h: float_matrix(&nf.h),
        witness: GroupElementJson { x: float_matrix(&nf.witness.x), g: float_matrix(&nf.witness.g) },
        regular: nf.regular,
        residual: float(nf.residual),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CertificateJson {
    pub n: usize,
    pub degree: u32,
    /// Kernel dimension of the invariance system in each homogeneous degree.
    pub per_degree: Vec<usize>,
    pub dimension: usize,
    pub passed: bool,
}

pub fn certificate(c: &InvariantCertificate) -> CertificateJson {
    CertificateJson { n: c.n, degree: c.degree, per_degree: c.per_degree.clone(), dimension: c.dimension, passed: c.passed() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use coorbit_core::arith::{int, rat};

    #[test]
    fn rationals_keep_denominators() {
        assert_eq!(rational(&int(3)), "3/1");
        assert_eq!(RationalInput::Text("-6/4".into()).parse().unwrap(), rat(-3, 2));
        assert_eq!(RationalInput::Int(7).parse().unwrap(), int(7));
    }

    #[test]
    fn floats_carry_17_digits() {
        let s = float(0.1);
        assert_eq!(s, "1.0000000000000001e-1");
        assert_eq!(s.parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn polynomials_round_trip() {
        let alg = LieAlgebra::new(2).unwrap();
        let vars = alg.vars().clone();
        let p = MultiPoly::var(&vars, 0).scale(&rat(2, 3)) * MultiPoly::var(&vars, 5) + MultiPoly::constant(&vars, rat(-1, 7));
        let text = serde_json::to_string(&poly(&p)).unwrap();
        let back: PolyJson<RationalInput> = serde_json::from_str(&text).unwrap();
        assert_eq!(parse_poly(&back, &vars).unwrap(), p);
        let wrong = PolyJson { variables: Some(vec!["q".into()]), terms: vec![] };
        assert!(parse_poly(&wrong, &vars).is_err());
    }
}
