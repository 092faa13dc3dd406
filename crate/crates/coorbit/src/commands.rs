//! One adapter per verb: parse the request, call the library, serialize.

use coorbit_core::arith::{int, MultiPoly, Rational};
use coorbit_core::invariants::{
    no_invariants_certificate, orbit_ideal, pfaffian_semiinvariant_value, rational_invariant_f, semiinvariant_family,
    solve_weight, trace_semiinvariant_value, OrbitIdeal, SemiinvariantKind,
};
use coorbit_core::lie::LieAlgebra;
use coorbit_core::orbits::{normal_form, DualPoint, NORMAL_FORM_TOLERANCE};
use coorbit_core::quantize::{EnvelopingAlgebra, NCPoly, QuantizedOrbit};
use coorbit_core::sample::random_group_element;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_CHECK_FAILED, EXIT_OK};
use crate::format::{self, AlgebraPointJson, DualPointJson, GroupElementJson, NCPolyJson, PolyJson, RationalInput};
use crate::report::VerificationReport;
use crate::verify::{informative_sample, run_verify, Fault, VerifyOptions};

/// Options shared by all verbs.
#[derive(Clone, Debug, Default)]
pub struct Request {
    pub n: Option<usize>,
    pub deg: Option<u32>,
    pub seed: u64,
    /// Parsed `--input` document.
    pub input: Option<Value>,
    pub cap_terms: Option<usize>,
    pub tolerance: Option<f64>,
    pub f: Option<String>,
    pub g: Option<String>,
    pub only: Option<Vec<String>>,
    pub fault: Option<String>,
}

pub enum Response {
    Document { value: Value, exit_code: i32 },
    Report(VerificationReport),
}

impl Response {
    fn ok(value: Value) -> Self {
        Response::Document { value, exit_code: EXIT_OK }
    }

    fn check(value: Value, pass: bool) -> Self {
        Response::Document { value, exit_code: if pass { EXIT_OK } else { EXIT_CHECK_FAILED } }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Response::Document { exit_code, .. } => *exit_code,
            Response::Report(r) => r.exit_code(),
        }
    }
}

/// Size of the problem; defaults to 2.
fn size(req: &Request) -> usize {
    req.n.unwrap_or(2)
}

fn input<T: DeserializeOwned>(req: &Request, verb: &str) -> Result<T, CliError> {
    let v = req.input.clone().ok_or_else(|| CliError::Usage(format!("{verb} requires --input")))?;
    Ok(serde_json::from_value(v)?)
}

fn optional_input<T: DeserializeOwned + Default>(req: &Request) -> Result<T, CliError> {
    match &req.input {
        Some(v) => Ok(serde_json::from_value(v.clone())?),
        None => Ok(T::default()),
    }
}

fn point_size(pt: &DualPoint<Rational>, req: &Request) -> Result<usize, CliError> {
    let n = pt.n();
    match req.n {
        Some(m) if m != n => Err(CliError::Usage(format!("--n {m} does not match a {n}×{n} input"))),
        _ => Ok(n),
    }
}

pub fn basis(req: &Request) -> Result<Response, CliError> {
    let alg = LieAlgebra::new(size(req))?;
    Ok(Response::ok(serde_json::to_value(format::basis(&alg))?))
}

#[derive(Deserialize)]
struct GroupMulParams {
    p: GroupElementJson<RationalInput>,
    q: GroupElementJson<RationalInput>,
}

pub fn group_mul(req: &Request) -> Result<Response, CliError> {
    let params: GroupMulParams = input(req, "group-mul")?;
    let p = format::parse_group_element(&params.p)?;
    let q = format::parse_group_element(&params.q)?;
    Ok(Response::ok(json!({ "product": format::group_element(&p.multiply(&q)?) })))
}

#[derive(Deserialize)]
struct AdjointParams {
    p: GroupElementJson<RationalInput>,
    y: AlgebraPointJson<RationalInput>,
}

pub fn adjoint(req: &Request) -> Result<Response, CliError> {
    let params: AdjointParams = input(req, "adjoint")?;
    let p = format::parse_group_element(&params.p)?;
    let y = format::parse_algebra_point(&params.y)?;
    Ok(Response::ok(json!({ "result": format::algebra_point(&p.adjoint(&y)?) })))
}

#[derive(Deserialize)]
struct CoadjointParams {
    p: GroupElementJson<RationalInput>,
    xi: DualPointJson<RationalInput>,
}

pub fn coadjoint(req: &Request) -> Result<Response, CliError> {
    let params: CoadjointParams = input(req, "coadjoint")?;
    let p = format::parse_group_element(&params.p)?;
    let xi = format::parse_dual_point(&params.xi)?;
    Ok(Response::ok(json!({ "result": format::dual_point(&p.coadjoint(&xi)?) })))
}

/// Exit 1 when the residual is not below the tolerance.
pub fn normal_form_verb(req: &Request) -> Result<Response, CliError> {
    let pt = format::parse_dual_point(&input(req, "normal-form")?)?;
    point_size(&pt, req)?;
    let nf = normal_form(&pt.to_f64())?;
    let pass = nf.residual < req.tolerance.unwrap_or(NORMAL_FORM_TOLERANCE);
    Ok(Response::check(serde_json::to_value(format::normal_form(&nf))?, pass))
}

/// Without input: the polynomial semiinvariants. With a point: exact values of
/// the invariants `f_i` and of the semiinvariants at that point.
pub fn invariants(req: &Request) -> Result<Response, CliError> {
    let Some(v) = &req.input else {
        let fam = semiinvariant_family(size(req))?;
        return Ok(Response::ok(serde_json::to_value(format::family(&fam))?));
    };
    let pt = format::parse_dual_point(&serde_json::from_value(v.clone())?)?;
    let n = point_size(&pt, req)?;
    let k = n / 2;
    let f = (1..=k as u32).map(|i| rational_invariant_f(i, &pt)).collect::<Result<Vec<_>, _>>()?;
    let mut kinds = Vec::new();
    let mut values = Vec::new();
    for i in 1..=k as u32 {
        if n % 2 == 0 && i as usize == k {
            kinds.push("pfaffian".to_string());
            values.push(pfaffian_semiinvariant_value(&pt)?);
        } else {
            kinds.push(format!("trace-{i}"));
            values.push(trace_semiinvariant_value(i, &pt)?);
        }
    }
    let out = json!({
        "n": n,
        "k": k,
        "f": f.iter().map(format::rational).collect::<Vec<_>>(),
        "kinds": kinds,
        "semiinvariants": values.iter().map(format::rational).collect::<Vec<_>>(),
    });
    Ok(Response::ok(out))
}

#[derive(Deserialize, Default)]
struct SemiCheckParams {
    p: Option<GroupElementJson<RationalInput>>,
    xi: Option<DualPointJson<RationalInput>>,
}

/// Measures the weight of every semiinvariant under coadjoint moves, either at
/// the given `(p, xi)` or on 20 seeded samples.
pub fn semi_check(req: &Request) -> Result<Response, CliError> {
    let params: SemiCheckParams = optional_input(req)?;
    let pairs = match (params.p, params.xi) {
        (Some(p), Some(xi)) => {
            let (p, xi) = (format::parse_group_element(&p)?, format::parse_dual_point(&xi)?);
            if p.n() != xi.n() {
                return Err(CliError::Usage("p and xi have different sizes".into()));
            }
            if p.g.det() == int(1) {
                return Err(CliError::Usage("det(g) = 1 does not determine a weight".into()));
            }
            vec![(p, xi)]
        }
        (None, None) => {
            let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
            let fam = semiinvariant_family(size(req))?;
            (0..20).map(|_| informative_sample(&mut rng, fam.n, &fam)).collect::<Result<_, _>>()?
        }
        _ => return Err(CliError::Usage("semi-check needs both p and xi, or neither".into())),
    };
    let fam = semiinvariant_family(pairs[0].1.n())?;
    let n = fam.n;
    let mut rows = Vec::new();
    let mut pass = true;
    for (j, kind) in fam.kinds.iter().enumerate() {
        let measured: Vec<Option<i64>> = pairs
            .iter()
            .map(|(p, xi)| Ok(solve_weight(&fam.evaluate(j, xi), &fam.evaluate(j, &p.coadjoint(xi)?), &p.g.det())))
            .collect::<Result<_, CliError>>()?;
        let ok = measured.iter().all(|w| *w == Some(fam.weights[j]));
        pass &= ok;
        let name = match kind {
            SemiinvariantKind::Trace(m) => format!("trace-{m}"),
            SemiinvariantKind::Pfaffian => "pfaffian".into(),
        };
        rows.push(json!({ "generator": name, "weight": fam.weights[j], "measured": measured, "pass": ok }));
    }
    Ok(Response::check(json!({ "n": n, "samples": pairs.len(), "generators": rows, "pass": pass }), pass))
}

pub fn no_invariants(req: &Request) -> Result<Response, CliError> {
    let n = size(req);
    let d = req.deg.unwrap_or(if n <= 2 { 4 } else { 2 });
    let cert = no_invariants_certificate(n, d)?;
    Ok(Response::check(serde_json::to_value(format::certificate(&cert))?, cert.passed()))
}

/// Orbit given by exact parameters or by a point on it.
#[derive(Deserialize, Default)]
struct OrbitParams {
    lambdas: Option<Vec<RationalInput>>,
    point: Option<DualPointJson<RationalInput>>,
    points: Option<Vec<DualPointJson<RationalInput>>>,
}

/// Parameters `k, k−1, …, 1` when none are given.
fn default_lambdas(n: usize) -> Vec<Rational> {
    (1..=(n / 2) as i64).rev().map(int).collect()
}

fn resolve_ideal(req: &Request, params: &OrbitParams) -> Result<OrbitIdeal, CliError> {
    match (&params.lambdas, &params.point) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either lambdas or point, not both".into())),
        (None, Some(pt)) => {
            let pt = format::parse_dual_point(pt)?;
            point_size(&pt, req)?;
            Ok(orbit_ideal(&normal_form(&pt.to_f64())?)?)
        }
        (lambdas, None) => {
            let n = size(req);
            let lambdas = match lambdas {
                Some(l) => format::parse_rationals(l)?,
                None => default_lambdas(n),
            };
            Ok(OrbitIdeal::from_lambdas(&semiinvariant_family(n)?, &lambdas)?)
        }
    }
}

pub fn orbit_ideal_verb(req: &Request) -> Result<Response, CliError> {
    let params: OrbitParams = optional_input(req)?;
    let ideal = resolve_ideal(req, &params)?;
    Ok(Response::ok(serde_json::to_value(format::ideal(&ideal))?))
}

/// Vanishing and Jacobian rank of the orbit ideal at the given points, or at 20
/// seeded points of the orbit through the normal form.
pub fn regularity(req: &Request) -> Result<Response, CliError> {
    let params: OrbitParams = optional_input(req)?;
    let ideal = resolve_ideal(req, &params)?;
    let pts: Vec<DualPoint<Rational>> = match &params.points {
        Some(list) => list.iter().map(format::parse_dual_point).collect::<Result<_, _>>()?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
            let base = DualPoint::normal_form_point(ideal.n, &ideal.lambdas);
            (0..20).map(|_| random_group_element(&mut rng, ideal.n).coadjoint(&base)).collect::<Result<_, _>>()?
        }
    };
    let mut rows = Vec::new();
    let mut pass = true;
    for pt in &pts {
        let vanishes = ideal.vanishes_at(pt);
        let rank = ideal.jacobian_at(pt).rank();
        pass &= vanishes && rank == ideal.k;
        rows.push(json!({ "vanishes": vanishes, "jacobian_rank": rank }));
    }
    let out = json!({
        "n": ideal.n,
        "k": ideal.k,
        "lambdas": ideal.lambdas.iter().map(format::rational).collect::<Vec<_>>(),
        "points": rows,
        "regular": pass,
    });
    Ok(Response::check(out, pass))
}

fn envelope(req: &Request) -> Result<EnvelopingAlgebra, CliError> {
    let mut env = EnvelopingAlgebra::new(LieAlgebra::new(size(req))?);
    env.set_work_limit(req.cap_terms);
    Ok(env)
}

/// PBW normal form of a sum of words in any order.
pub fn pbw(req: &Request) -> Result<Response, CliError> {
    let params: NCPolyJson<RationalInput> = input(req, "pbw")?;
    let mut env = envelope(req)?;
    let names = env.lie().basis.names().to_vec();
    if let Some(letters) = &params.letters {
        let upper: Vec<String> = names.iter().map(|s| s.to_uppercase()).collect();
        if *letters != upper {
            return Err(CliError::Usage(format!("letters {letters:?} do not match {upper:?}")));
        }
    }
    let mut total = NCPoly::zero(env.dim());
    for (word, c) in format::parse_word_terms(&params)? {
        if let Some(&bad) = word.iter().find(|&&x| x >= env.dim()) {
            return Err(CliError::Usage(format!("letter index {bad} out of range")));
        }
        total.add_scaled(&env.pbw_reduce(&word, c)?, &coorbit_core::quantize::HPoly::one());
    }
    Ok(Response::ok(serde_json::to_value(format::ncpoly(&total, &names))?))
}

/// A polynomial argument: a JSON polynomial document or a bare constant.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PolyArg {
    Constant(RationalInput),
    Poly(PolyJson<RationalInput>),
}

impl PolyArg {
    pub fn parse(&self, alg: &LieAlgebra) -> Result<MultiPoly, CliError> {
        match self {
            PolyArg::Constant(c) => Ok(MultiPoly::constant(alg.vars(), c.parse()?)),
            PolyArg::Poly(p) => format::parse_poly(p, alg.vars()),
        }
    }
}

/// Parses `--f`/`--g` text, which may also be a bare number such as `1`.
fn poly_flag(text: &str) -> Result<PolyArg, CliError> {
    serde_json::from_str(text).or_else(|_| Ok(PolyArg::Constant(RationalInput::Text(text.trim().to_string()))))
}

pub fn sym(req: &Request) -> Result<Response, CliError> {
    let arg: PolyArg = match (&req.input, &req.f) {
        (Some(v), _) => serde_json::from_value(v.clone())?,
        (None, Some(f)) => poly_flag(f)?,
        (None, None) => return Err(CliError::Usage("sym requires --input or --f".into())),
    };
    let mut env = envelope(req)?;
    let p = arg.parse(env.lie())?;
    let names = env.lie().basis.names().to_vec();
    let u = env.symmetrize(&p)?;
    Ok(Response::ok(serde_json::to_value(format::ncpoly(&u, &names))?))
}

#[derive(Deserialize, Default)]
struct StarParams {
    f: Option<PolyArg>,
    g: Option<PolyArg>,
    lambdas: Option<Vec<RationalInput>>,
}

/// `f ⋆ g` on the orbit through `(I, H(λ))`, exact up to `--deg` (default 4).
pub fn star(req: &Request) -> Result<Response, CliError> {
    let params: StarParams = optional_input(req)?;
    let n = size(req);
    let f = match (&req.f, params.f) {
        (Some(t), _) => poly_flag(t)?,
        (None, Some(f)) => f,
        (None, None) => return Err(CliError::Usage("star requires f".into())),
    };
    let g = match (&req.g, params.g) {
        (Some(t), _) => poly_flag(t)?,
        (None, Some(g)) => g,
        (None, None) => return Err(CliError::Usage("star requires g".into())),
    };
    let lambdas = match &params.lambdas {
        Some(l) => format::parse_rationals(l)?,
        None => default_lambdas(n),
    };
    // n = 1 has no orbit parameters: the open orbit is all of the dual.
    let (alg, generators) = if n == 1 && lambdas.is_empty() {
        (LieAlgebra::new(1)?, Vec::new())
    } else {
        let ideal = OrbitIdeal::from_lambdas(&semiinvariant_family(n)?, &lambdas)?;
        (ideal.alg, ideal.generators)
    };
    let deg = req.deg.unwrap_or(4);
    let mut q = QuantizedOrbit::with_work_limit(alg.clone(), &generators, deg, req.cap_terms)?;
    let (f, g) = (f.parse(&alg)?, g.parse(&alg)?);
    let product = q.star(&f, &g)?;
    let out = json!({
        "n": n,
        "deg_cap": deg,
        "lambdas": lambdas.iter().map(format::rational).collect::<Vec<_>>(),
        "product": format::quotient(&product),
    });
    Ok(Response::ok(out))
}

pub fn verify(req: &Request) -> Result<Response, CliError> {
    let opts = VerifyOptions {
        n: size(req),
        deg: req.deg.unwrap_or(4),
        seed: req.seed,
        tolerance: req.tolerance.unwrap_or(NORMAL_FORM_TOLERANCE),
        cap_terms: req.cap_terms,
        fault: req.fault.as_deref().map(str::parse::<Fault>).transpose()?,
    };
    Ok(Response::Report(run_verify(opts, req.only.as_deref())?))
}
