//! JSON problem files.
//!
//! ```json
//! {
//!   "variables": ["x1", "x2"],
//!   "kind": "lagrange",
//!   "points": [["1", "0"], ["1", "1"], ["1", "2"], ["2", "0"]],
//!   "test_functions": ["(1-x1)^2+(1-x2)^2+1", "x1^3+x2^3"],
//!   "options": { "degree_bound": 6, "order": "lex1" }
//! }
//! ```
//!
//! `hermite` problems carry `"conditions": [{"point": [...], "derivatives": [[0,0], [1,0]]}]`
//! and `projector` problems carry `"corner_images": [{"corner": [2,1], "image": "0"}]`.
//! Rationals are always strings such as `"3"` or `"-1/2"`.

use std::path::Path;

use ideal_interp_core::{ConditionSet, Exponent, MonomialOrder, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use crate::error::{CliError, Result};
use crate::limits::{check_degree, DEFAULT_MAX_DEGREE};
use crate::parser::parse_polynomial_capped;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Lagrange,
    Hermite,
    Projector,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCondition {
    point: Vec<String>,
    derivatives: Vec<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCornerImage {
    corner: Vec<u32>,
    image: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    degree_bound: Option<u32>,
    order: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    variables: Vec<String>,
    kind: ProblemKind,
    #[serde(default)]
    points: Option<Vec<Vec<String>>>,
    #[serde(default)]
    conditions: Option<Vec<RawCondition>>,
    #[serde(default)]
    corner_images: Option<Vec<RawCornerImage>>,
    #[serde(default)]
    test_functions: Vec<String>,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Debug, Clone)]
pub enum Payload {
    Conditions(ConditionSet),
    CornerImages(Vec<(Exponent, Polynomial)>),
}

#[derive(Debug, Clone, Default)]
pub struct ProblemOptions {
    pub degree_bound: Option<u32>,
    pub order: Option<MonomialOrder>,
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub variables: Vec<String>,
    pub kind: ProblemKind,
    pub payload: Payload,
    /// Source text and parsed value of each test function.
    pub test_functions: Vec<(String, Polynomial)>,
    pub options: ProblemOptions,
}

impl ProblemSpec {
    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn conditions(&self) -> Option<&ConditionSet> {
        match &self.payload {
            Payload::Conditions(c) => Some(c),
            Payload::CornerImages(_) => None,
        }
    }
}

/// Parse an exact rational such as `"-3"` or `"7/4"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || CliError::schema(format!("invalid rational '{s}'"));
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = match d {
        Some(d) if d.trim().starts_with(['-', '+']) => return Err(bad()),
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(CliError::schema(format!("zero denominator in '{s}'")));
    }
    Ok(Rational::new(n, d))
}

/// Parse an order name: `lex1` … `lexd` or `grlex`.
pub fn parse_order(name: &str, dim: usize) -> Result<MonomialOrder> {
    let order = if name == "grlex" {
        MonomialOrder::GradedLex
    } else {
        let i = name
            .strip_prefix("lex")
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| CliError::schema(format!("unknown order '{name}' (expected lex1..lex{dim} or grlex)")))?;
        MonomialOrder::Lex(i)
    };
    order
        .validate(dim)
        .map_err(|_| CliError::schema(format!("order '{name}' is not defined for {dim} variables")))?;
    Ok(order)
}

fn parse_point(raw: &[String], dim: usize, what: &str) -> Result<Vec<Rational>> {
    if raw.len() != dim {
        return Err(CliError::schema(format!(
            "{what} has {} coordinates, expected {dim}",
            raw.len()
        )));
    }
    raw.iter().map(|s| parse_rational(s)).collect()
}

fn parse_exponent(raw: &[u32], dim: usize, cap: u32, what: &str) -> Result<Exponent> {
    if raw.len() != dim {
        return Err(CliError::schema(format!(
            "{what} has {} entries, expected {dim}",
            raw.len()
        )));
    }
    let e = Exponent::new(raw.to_vec());
    check_degree(&format!("{what} degree"), e.degree(), cap)?;
    Ok(e)
}

fn check_variables(vars: &[String]) -> Result<()> {
    if vars.is_empty() {
        return Err(CliError::schema("at least one variable is required"));
    }
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(CliError::schema(format!("invalid variable name '{v}'")));
        }
        if vars[..i].contains(v) {
            return Err(CliError::schema(format!("duplicate variable '{v}'")));
        }
    }
    Ok(())
}

/// Parse and validate a problem from JSON text.
pub fn parse_problem(json: &str, max_degree: u32) -> Result<ProblemSpec> {
    let raw: RawProblem = serde_json::from_str(json).map_err(|e| CliError::schema(e.to_string()))?;
    check_variables(&raw.variables)?;
    let dim = raw.variables.len();
    let present = [
        raw.points.is_some(),
        raw.conditions.is_some(),
        raw.corner_images.is_some(),
    ];
    let expected = match raw.kind {
        ProblemKind::Lagrange => [true, false, false],
        ProblemKind::Hermite => [false, true, false],
        ProblemKind::Projector => [false, false, true],
    };
    if present != expected {
        let field = match raw.kind {
            ProblemKind::Lagrange => "points",
            ProblemKind::Hermite => "conditions",
            ProblemKind::Projector => "corner_images",
        };
        return Err(CliError::schema(format!(
            "kind {:?} requires exactly the '{field}' payload",
            raw.kind
        )));
    }
    let payload = match raw.kind {
        ProblemKind::Lagrange => {
            let pts = raw
                .points
                .unwrap_or_default()
                .iter()
                .enumerate()
                .map(|(i, p)| parse_point(p, dim, &format!("point {i}")))
                .collect::<Result<Vec<_>>>()?;
            let c = ConditionSet::lagrange(dim, pts)?;
            c.check()?;
            Payload::Conditions(c)
        }
        ProblemKind::Hermite => {
            let mut groups = Vec::new();
            for (i, rc) in raw.conditions.unwrap_or_default().iter().enumerate() {
                let point = parse_point(&rc.point, dim, &format!("condition {i} point"))?;
                let ders = rc
                    .derivatives
                    .iter()
                    .map(|d| parse_exponent(d, dim, max_degree, &format!("condition {i} derivative")))
                    .collect::<Result<Vec<_>>>()?;
                groups.push((point, ders));
            }
            let c = ConditionSet::from_groups(dim, groups)?;
            c.check()?;
            Payload::Conditions(c)
        }
        ProblemKind::Projector => {
            let mut images = Vec::new();
            for (i, ci) in raw.corner_images.unwrap_or_default().iter().enumerate() {
                let corner = parse_exponent(&ci.corner, dim, max_degree, &format!("corner {i}"))?;
                let image = parse_polynomial_capped(&ci.image, &raw.variables, max_degree)?;
                images.push((corner, image));
            }
            Payload::CornerImages(images)
        }
    };
    let test_functions = raw
        .test_functions
        .into_iter()
        .map(|s| parse_polynomial_capped(&s, &raw.variables, max_degree).map(|p| (s, p)))
        .collect::<Result<Vec<_>>>()?;
    let order = raw.options.order.as_deref().map(|o| parse_order(o, dim)).transpose()?;
    if let Some(b) = raw.options.degree_bound {
        check_degree("degree_bound", b, max_degree)?;
    }
    Ok(ProblemSpec {
        variables: raw.variables,
        kind: raw.kind,
        payload,
        test_functions,
        options: ProblemOptions {
            degree_bound: raw.options.degree_bound,
            order,
        },
    })
}

/// Read and validate a problem file.
pub fn load_problem(path: impl AsRef<Path>) -> Result<ProblemSpec> {
    load_problem_capped(path, DEFAULT_MAX_DEGREE)
}

pub fn load_problem_capped(path: impl AsRef<Path>, max_degree: u32) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path)?;
    parse_problem(&text, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1: &str = r#"{
        "variables": ["x1", "x2"],
        "kind": "lagrange",
        "points": [["1","0"],["1","1"],["1","2"],["2","0"]],
        "test_functions": ["(1-x1)^2+(1-x2)^2+1", "x1^3+x2^3", "x1^2+x2^2", "x1^2*x2"]
    }"#;

    #[test]
    fn loads_lagrange() {
        let p = parse_problem(EX1, 64).unwrap();
        assert_eq!(p.kind, ProblemKind::Lagrange);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.conditions().unwrap().len(), 4);
        assert_eq!(p.test_functions.len(), 4);
    }

    #[test]
    fn wrong_arity_is_schema_error() {
        let bad = EX1.replace(r#"["2","0"]"#, r#"["2","0","1"]"#);
        assert_eq!(parse_problem(&bad, 64).unwrap_err().kind(), "SchemaError");
    }

    #[test]
    fn payload_must_match_kind() {
        let bad = EX1.replace("lagrange", "hermite");
        assert_eq!(parse_problem(&bad, 64).unwrap_err().kind(), "SchemaError");
        let bad = EX1.replace("\"kind\"", "\"extra\": 1, \"kind\"");
        assert_eq!(parse_problem(&bad, 64).unwrap_err().kind(), "SchemaError");
    }

    #[test]
    fn duplicate_points_are_dependent() {
        let bad = EX1.replace(r#"["2","0"]"#, r#"["1","0"]"#);
        assert_eq!(parse_problem(&bad, 64).unwrap_err().kind(), "DependentConditions");
    }

    #[test]
    fn bad_test_function_is_parse_error() {
        let bad = EX1.replace("x1^2*x2", "x1^2*y");
        assert_eq!(parse_problem(&bad, 64).unwrap_err().kind(), "ParseError");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-1/2").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("4/2").unwrap(), Rational::from_integer(2.into()));
        for s in ["1/0", "1.5", "", "a", "1/-2", "1/2/3"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(parse_order("lex2", 2).unwrap(), MonomialOrder::Lex(2));
        assert_eq!(parse_order("grlex", 2).unwrap(), MonomialOrder::GradedLex);
        assert!(parse_order("lex3", 2).is_err());
        assert!(parse_order("lex0", 2).is_err());
        assert!(parse_order("grevlex", 2).is_err());
    }

    #[test]
    fn hermite_non_lower_set() {
        let src = r#"{"variables":["x","y"],"kind":"hermite",
            "conditions":[{"point":["0","0"],"derivatives":[[0,0],[2,0]]}]}"#;
        assert_eq!(parse_problem(src, 64).unwrap_err().kind(), "NotLowerSet");
    }

    #[test]
    fn degree_cap_applies() {
        let src = r#"{"variables":["x","y"],"kind":"projector",
            "corner_images":[{"corner":[9,0],"image":"0"},{"corner":[0,1],"image":"0"}]}"#;
        assert!(parse_problem(src, 64).is_ok());
        assert_eq!(parse_problem(src, 8).unwrap_err().kind(), "SchemaError");
    }
}
