//! Command dispatch and result rendering.

use std::fmt::Write as _;

use ideal_interp_core::conditions::{apply_functional, lex_escaliers, moller_vanishing_gb};
use ideal_interp_core::groebner::{buchberger_reduced, classify_universal, escalier, lex_escalier_family};
use ideal_interp_core::min_degree::{minimal_degree_check, minimal_degree_check_projector};
use ideal_interp_core::order_ideal::{escalier_from_corners, CornerSet};
use ideal_interp_core::projector::{
    certify_good_formula, check_ideal_projector_laws, default_degree_bound, error_decompose, project,
    projector_from_conditions, projector_from_corner_images,
};
use ideal_interp_core::{
    Exponent, GroebnerBasis, IdealProjector, LexFamily, MonomialOrder, OrderIdeal, Polynomial, Rational,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::limits::check_degree;
use crate::parser::{parse_polynomial_capped, render, render_monomial};
use crate::problem::{Payload, ProblemSpec};
use crate::random::random_polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gbasis {
        order: Option<MonomialOrder>,
    },
    Escalier {
        order: Option<MonomialOrder>,
        all_lex: bool,
    },
    Classify,
    Interpolate {
        expr: Option<String>,
    },
    Decompose {
        expr: Option<String>,
    },
    Certify {
        degree_bound: Option<u32>,
    },
    MinimalDegree,
    CheckLaws(LawCheckOptions),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawCheckOptions {
    pub samples: usize,
    pub max_degree: u32,
    pub seed: u64,
}

impl Default for LawCheckOptions {
    fn default() -> Self {
        LawCheckOptions {
            samples: 200,
            max_degree: 6,
            seed: 0x1dea1,
        }
    }
}

/// Outcome of one command: machine output, human output and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultDocument {
    pub json: String,
    pub text: String,
    pub exit_code: i32,
    /// Diagnostic for standard error, if any.
    pub diagnostic: Option<String>,
}

impl ResultDocument {
    fn new<T: Serialize>(value: &T, text: String) -> Self {
        let json = serde_json::to_string_pretty(value).expect("serializable");
        ResultDocument {
            json,
            text,
            exit_code: 0,
            diagnostic: None,
        }
    }

    fn failing(mut self, code: i32, diagnostic: String) -> Self {
        self.exit_code = code;
        self.diagnostic = Some(diagnostic);
        self
    }
}

/// Generators `x^α − image` of a projector problem.
fn corner_generators(images: &[(Exponent, Polynomial)]) -> Vec<Polynomial> {
    images
        .iter()
        .map(|(a, img)| &Polynomial::monomial(a.clone(), Rational::from_integer(1.into())) - img)
        .collect()
}

/// Reduced Gröbner basis of the kernel under `order`.
pub fn kernel_basis(spec: &ProblemSpec, order: MonomialOrder) -> Result<GroebnerBasis> {
    order.validate(spec.dim())?;
    match &spec.payload {
        Payload::Conditions(c) => Ok(moller_vanishing_gb(c, order)?),
        Payload::CornerImages(images) => {
            let corners = CornerSet::new(spec.dim(), images.iter().map(|(a, _)| a.clone()))?;
            escalier_from_corners(&corners)?;
            let gens = corner_generators(images);
            GroebnerBasis::from_generators(MonomialOrder::Lex(1), gens.clone())?;
            Ok(buchberger_reduced(&gens, order)?)
        }
    }
}

/// The ideal projector of a problem.
pub fn build_projector(spec: &ProblemSpec) -> Result<IdealProjector> {
    match &spec.payload {
        Payload::Conditions(c) => Ok(projector_from_conditions(c)?),
        Payload::CornerImages(images) => Ok(projector_from_corner_images(spec.dim(), images.clone())?),
    }
}

fn lex_family(spec: &ProblemSpec) -> Result<LexFamily> {
    match &spec.payload {
        Payload::Conditions(c) => Ok(lex_escaliers(c)?),
        Payload::CornerImages(images) => {
            kernel_basis(spec, MonomialOrder::Lex(1))?;
            Ok(lex_escalier_family(&corner_generators(images))?)
        }
    }
}

fn resolve_order(flag: Option<MonomialOrder>, spec: &ProblemSpec) -> Result<MonomialOrder> {
    let o = flag.or(spec.options.order).unwrap_or_default();
    o.validate(spec.dim())?;
    Ok(o)
}

fn test_inputs(expr: &Option<String>, spec: &ProblemSpec, cap: u32) -> Result<Vec<(String, Polynomial)>> {
    match expr {
        Some(src) => Ok(vec![(src.clone(), parse_polynomial_capped(src, &spec.variables, cap)?)]),
        None if spec.test_functions.is_empty() => Err(CliError::schema(
            "no -f expression given and the problem has no test_functions",
        )),
        None => Ok(spec.test_functions.clone()),
    }
}

fn render_escalier(o: &OrderIdeal, vars: &[String]) -> Vec<String> {
    o.iter().map(|e| render_monomial(e, vars)).collect()
}

fn render_all(ps: &[Polynomial], vars: &[String]) -> Vec<String> {
    ps.iter().map(|p| render(p, vars)).collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

#[derive(Serialize)]
struct GbasisOut {
    command: &'static str,
    order: String,
    basis: Vec<String>,
    escalier: Vec<String>,
}

#[derive(Serialize)]
struct EscalierOut {
    command: &'static str,
    escaliers: Vec<NamedEscalier>,
    all_equal: bool,
}

#[derive(Serialize)]
struct NamedEscalier {
    order: String,
    monomials: Vec<String>,
}

#[derive(Serialize)]
struct ClassifyOut {
    command: &'static str,
    structural: bool,
    lex_family: bool,
    universal: bool,
    basis: Vec<String>,
    lex_escaliers: Vec<NamedEscalier>,
}

#[derive(Serialize)]
struct InterpolateItem {
    f: String,
    projection: String,
    error: String,
}

#[derive(Serialize)]
struct InterpolateOut {
    command: &'static str,
    results: Vec<InterpolateItem>,
}

#[derive(Serialize)]
struct DecomposeItem {
    f: String,
    projection: String,
    coefficients: Vec<String>,
    residual_check: bool,
}

#[derive(Serialize)]
struct DecomposeOut {
    command: &'static str,
    basis: Vec<String>,
    results: Vec<DecomposeItem>,
}

#[derive(Serialize)]
struct CertifyOut {
    command: &'static str,
    basis: Vec<String>,
    duals: Vec<String>,
    kronecker_ok: bool,
    kernel_containment_ok: bool,
    checked_degree_bound: u32,
    certified: bool,
}

#[derive(Serialize)]
struct MinimalDegreeOut {
    command: &'static str,
    escalier: Vec<String>,
    r: u32,
    degree_reducing: bool,
    rank_lower: usize,
    n: usize,
    minimal: bool,
}

#[derive(Serialize)]
struct CheckLawsOut {
    command: &'static str,
    samples: usize,
    max_degree: u32,
    seed: u64,
    law1_failures: usize,
    law2_failures: usize,
    idempotence_failures: usize,
    interpolation_failures: usize,
    passed: bool,
}

/// Run one command with the given degree cap.
pub fn run_command(cmd: &Command, spec: &ProblemSpec, cap: u32) -> Result<ResultDocument> {
    let vars = &spec.variables;
    match cmd {
        Command::Gbasis { order } => {
            let order = resolve_order(*order, spec)?;
            let gb = kernel_basis(spec, order)?;
            let basis = render_all(gb.generators(), vars);
            let esc = render_escalier(&escalier(&gb)?, vars);
            let mut text = format!("order: {order}\nbasis ({} generators):\n", basis.len());
            for g in &basis {
                let _ = writeln!(text, "  {g}");
            }
            let _ = writeln!(text, "escalier: {}", braces(&esc));
            Ok(ResultDocument::new(
                &GbasisOut {
                    command: "gbasis",
                    order: order.to_string(),
                    basis,
                    escalier: esc,
                },
                text,
            ))
        }
        Command::Escalier { order, all_lex } => {
            let escaliers: Vec<(MonomialOrder, OrderIdeal)> = if *all_lex {
                let fam = lex_family(spec)?;
                MonomialOrder::all_lex(spec.dim())
                    .into_iter()
                    .zip(fam.escaliers)
                    .collect()
            } else {
                let order = resolve_order(*order, spec)?;
                vec![(order, escalier(&kernel_basis(spec, order)?)?)]
            };
            let all_equal = escaliers.windows(2).all(|w| w[0].1 == w[1].1);
            let named: Vec<NamedEscalier> = escaliers
                .iter()
                .map(|(o, e)| NamedEscalier {
                    order: o.to_string(),
                    monomials: render_escalier(e, vars),
                })
                .collect();
            let mut text = String::new();
            for n in &named {
                let _ = writeln!(text, "{}: {}", n.order, braces(&n.monomials));
            }
            if *all_lex {
                let _ = writeln!(text, "all equal: {all_equal}");
            }
            Ok(ResultDocument::new(
                &EscalierOut {
                    command: "escalier",
                    escaliers: named,
                    all_equal,
                },
                text,
            ))
        }
        Command::Classify => {
            let gb = kernel_basis(spec, MonomialOrder::Lex(1))?;
            let structural = classify_universal(&gb);
            let fam = lex_family(spec)?;
            let universal = structural && fam.all_equal;
            let out = ClassifyOut {
                command: "classify",
                structural,
                lex_family: fam.all_equal,
                universal,
                basis: render_all(gb.generators(), vars),
                lex_escaliers: MonomialOrder::all_lex(spec.dim())
                    .into_iter()
                    .zip(&fam.escaliers)
                    .map(|(o, e)| NamedEscalier {
                        order: o.to_string(),
                        monomials: render_escalier(e, vars),
                    })
                    .collect(),
            };
            let mut text = format!(
                "structural: {structural}\nlex family: {}\nuniversal: {universal}\n",
                fam.all_equal
            );
            for n in &out.lex_escaliers {
                let _ = writeln!(text, "  {}: {}", n.order, braces(&n.monomials));
            }
            let doc = ResultDocument::new(&out, text);
            if structural != fam.all_equal {
                Ok(doc.failing(1, "internal: classification routes disagree".into()))
            } else if !universal {
                Ok(doc.failing(
                    2,
                    "NotInUniversalClass: the kernel basis depends on the monomial order".into(),
                ))
            } else {
                Ok(doc)
            }
        }
        Command::Interpolate { expr } => {
            let p = build_projector(spec)?;
            let mut results = Vec::new();
            let mut text = String::new();
            for (src, f) in test_inputs(expr, spec, cap)? {
                let pf = project(&p, &f)?;
                let item = InterpolateItem {
                    f: render(&f, vars),
                    projection: render(&pf, vars),
                    error: render(&(&f - &pf), vars),
                };
                let _ = writeln!(
                    text,
                    "f = {src}\n  Pf     = {}\n  f - Pf = {}",
                    item.projection, item.error
                );
                results.push(item);
            }
            Ok(ResultDocument::new(
                &InterpolateOut {
                    command: "interpolate",
                    results,
                },
                text,
            ))
        }
        Command::Decompose { expr } => {
            let p = build_projector(spec)?;
            let basis = render_all(p.generators(), vars);
            let mut results = Vec::new();
            let mut text = String::from("basis:\n");
            for (j, g) in basis.iter().enumerate() {
                let _ = writeln!(text, "  g{} = {g}", j + 1);
            }
            for (src, f) in test_inputs(expr, spec, cap)? {
                let d = error_decompose(&p, &f)?;
                let item = DecomposeItem {
                    f: render(&f, vars),
                    projection: render(&project(&p, &f)?, vars),
                    coefficients: render_all(&d.coefficients, vars),
                    residual_check: d.residual_check,
                };
                let _ = writeln!(text, "f = {src}\n  Pf = {}", item.projection);
                for (j, a) in item.coefficients.iter().enumerate() {
                    let _ = writeln!(text, "  A{}(f) = {a}", j + 1);
                }
                let _ = writeln!(text, "  residual check: {}", item.residual_check);
                results.push(item);
            }
            let ok = results.iter().all(|r| r.residual_check);
            let doc = ResultDocument::new(
                &DecomposeOut {
                    command: "decompose",
                    basis,
                    results,
                },
                text,
            );
            Ok(if ok {
                doc
            } else {
                doc.failing(1, "decomposition residual is nonzero".into())
            })
        }
        Command::Certify { degree_bound } => {
            let p = build_projector(spec)?;
            let bound = degree_bound
                .or(spec.options.degree_bound)
                .unwrap_or_else(|| default_degree_bound(&p));
            check_degree("degree bound", bound, cap)?;
            let cert = certify_good_formula(&p, bound);
            let out = CertifyOut {
                command: "certify",
                basis: render_all(p.generators(), vars),
                duals: render_all(&cert.duals, vars),
                kronecker_ok: cert.kronecker_ok,
                kernel_containment_ok: cert.kernel_containment_ok,
                checked_degree_bound: cert.checked_degree_bound,
                certified: cert.ok(),
            };
            let mut text = String::new();
            for (g, h) in out.basis.iter().zip(&out.duals) {
                let _ = writeln!(text, "  g = {g}    H = {h}");
            }
            let _ = writeln!(
                text,
                "kronecker: {}\nkernel containment (degree <= {}): {}\ncertified: {}",
                out.kronecker_ok, out.checked_degree_bound, out.kernel_containment_ok, out.certified
            );
            let ok = out.certified;
            let doc = ResultDocument::new(&out, text);
            Ok(if ok {
                doc
            } else {
                doc.failing(1, "certificate failed".into())
            })
        }
        Command::MinimalDegree => {
            let p = build_projector(spec)?;
            let report = match &spec.payload {
                Payload::Conditions(c) => minimal_degree_check(c, p.escalier())?,
                Payload::CornerImages(_) => minimal_degree_check_projector(&p),
            };
            let out = MinimalDegreeOut {
                command: "minimal-degree",
                escalier: render_escalier(p.escalier(), vars),
                r: report.r,
                degree_reducing: report.degree_reducing,
                rank_lower: report.rank_lower,
                n: report.n,
                minimal: report.minimal,
            };
            let text = format!(
                "range: {}\nr = {}\ndegree reducing: {}\nrank on degree <= r-1: {} of n = {}\nminimal degree: {}\n",
                braces(&out.escalier),
                out.r,
                out.degree_reducing,
                out.rank_lower,
                out.n,
                out.minimal
            );
            Ok(ResultDocument::new(&out, text))
        }
        Command::CheckLaws(opts) => {
            check_degree("law-check degree", opts.max_degree, cap)?;
            let p = build_projector(spec)?;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let dim = spec.dim();
            let (mut l1, mut l2, mut idem, mut interp) = (0, 0, 0, 0);
            for _ in 0..opts.samples {
                let f = random_polynomial(&mut rng, dim, opts.max_degree, 6);
                let g = random_polynomial(&mut rng, dim, opts.max_degree, 6);
                let r = check_ideal_projector_laws(&p, &f, &g)?;
                l1 += usize::from(!r.law1.is_zero());
                l2 += usize::from(!r.law2.is_zero());
                let pf = project(&p, &f)?;
                idem += usize::from(project(&p, &pf)? != pf);
                if let Some(c) = spec.conditions() {
                    for lam in c.functionals() {
                        if apply_functional(lam, &pf)? != apply_functional(lam, &f)? {
                            interp += 1;
                            break;
                        }
                    }
                }
            }
            let passed = l1 + l2 + idem + interp == 0;
            let out = CheckLawsOut {
                command: "check-laws",
                samples: opts.samples,
                max_degree: opts.max_degree,
                seed: opts.seed,
                law1_failures: l1,
                law2_failures: l2,
                idempotence_failures: idem,
                interpolation_failures: interp,
                passed,
            };
            let text = format!(
                "samples: {} (degree <= {}, seed {})\nP(fg) = P(f Pg) failures: {l1}\nP'(fg) = f P'(g) + P'(f Pg) failures: {l2}\nidempotence failures: {idem}\ninterpolation failures: {interp}\npassed: {passed}\n",
                opts.samples, opts.max_degree, opts.seed
            );
            let doc = ResultDocument::new(&out, text);
            Ok(if passed {
                doc
            } else {
                doc.failing(1, "projector laws violated".into())
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    fn ex1() -> ProblemSpec {
        parse_problem(
            r#"{"variables":["x1","x2"],"kind":"lagrange",
                "points":[["1","0"],["1","1"],["1","2"],["2","0"]],
                "test_functions":["(1-x1)^2+(1-x2)^2+1","x1^3+x2^3"]}"#,
            64,
        )
        .unwrap()
    }

    fn json(doc: &ResultDocument) -> serde_json::Value {
        serde_json::from_str(&doc.json).unwrap()
    }

    #[test]
    fn gbasis_example1() {
        let doc = run_command(&Command::Gbasis { order: None }, &ex1(), 64).unwrap();
        let v = json(&doc);
        assert_eq!(
            v["basis"],
            serde_json::json!(["x1^2 - 3*x1 + 2", "x1*x2 - x2", "x2^3 - 3*x2^2 + 2*x2"])
        );
        assert_eq!(v["escalier"], serde_json::json!(["1", "x2", "x2^2", "x1"]));
    }

    #[test]
    fn decompose_example1() {
        let cmd = Command::Decompose {
            expr: Some("x1^3+x2^3".into()),
        };
        let v = json(&run_command(&cmd, &ex1(), 64).unwrap());
        assert_eq!(v["results"][0]["coefficients"], serde_json::json!(["x1 + 3", "0", "1"]));
    }

    #[test]
    fn classify_two_points_exits_2() {
        let spec = parse_problem(
            r#"{"variables":["x1","x2"],"kind":"lagrange","points":[["0","0"],["1","1"]]}"#,
            64,
        )
        .unwrap();
        let doc = run_command(&Command::Classify, &spec, 64).unwrap();
        assert_eq!(doc.exit_code, 2);
        let v = json(&doc);
        assert_eq!(v["structural"], false);
        assert_eq!(v["lex_family"], false);
        let err = run_command(&Command::Certify { degree_bound: None }, &spec, 64).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn deterministic_output() {
        let cmd = Command::CheckLaws(LawCheckOptions {
            samples: 10,
            ..Default::default()
        });
        let a = run_command(&cmd, &ex1(), 64).unwrap();
        let b = run_command(&cmd, &ex1(), 64).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.exit_code, 0);
    }

    #[test]
    fn degree_bound_capped() {
        let err = run_command(
            &Command::Certify {
                degree_bound: Some(100),
            },
            &ex1(),
            64,
        )
        .unwrap_err();
        assert_eq!(err.kind(), "SchemaError");
    }

    #[test]
    fn escalier_all_lex() {
        let doc = run_command(
            &Command::Escalier {
                order: None,
                all_lex: true,
            },
            &ex1(),
            64,
        )
        .unwrap();
        let v = json(&doc);
        assert_eq!(v["all_equal"], true);
        assert_eq!(v["escaliers"].as_array().unwrap().len(), 2);
    }
}
