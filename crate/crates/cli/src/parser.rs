//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expression := term (('+' | '-') term)*
//! term       := unary ('*' unary)*
//! unary      := ('-' | '+') unary | factor
//! factor     := base ('^' integer)?
//! base       := rational | variable | '(' expression ')'
//! rational   := digits ('/' digits)?
//! ```
//!
//! There is no implicit multiplication. The result is fully expanded.

use ideal_interp_core::{Exponent, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt, Option<BigInt>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        position,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let start = i;
        match ch {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = src[start..i].parse().expect("digits");
                let mut den = None;
                if i < bytes.len() && bytes[i] == b'/' {
                    let ds = i + 1;
                    let mut j = ds;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == ds {
                        return Err(err(i, "expected digits after '/'"));
                    }
                    let d: BigInt = src[ds..j].parse().expect("digits");
                    if d.is_zero() {
                        return Err(err(ds, "zero denominator"));
                    }
                    den = Some(d);
                    i = j;
                }
                out.push((start, Tok::Num(num, den)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let c = src[start..].chars().next().unwrap_or('?');
                return Err(err(start, format!("unexpected character '{c}'")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
    max_degree: u32,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn dim(&self) -> usize {
        self.vars.len()
    }

    fn expression(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
            self.check_degree(&acc)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
            self.check_degree(&acc)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.here();
            let k = match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
                Some(Tok::Num(n, None)) => n,
                Some(Tok::Num(_, Some(_))) => return Err(err(at, "fractional exponent")),
                Some(Tok::Minus) => return Err(err(at, "negative exponent")),
                _ => return Err(err(at, "exponent must be a nonnegative integer literal")),
            };
            self.pos += 1;
            let k: u32 = u32::try_from(&k)
                .ok()
                .filter(|&k| k <= self.max_degree)
                .ok_or_else(|| err(at, format!("exponent exceeds the degree cap {}", self.max_degree)))?;
            let out = base
                .pow_checked(k, self.max_degree)
                .ok_or_else(|| err(at, format!("power exceeds the degree cap {}", self.max_degree)))?;
            return Ok(out);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let at = self.here();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(n, d) => {
                let q = match d {
                    Some(d) => Rational::new(n, d),
                    None => Rational::from_integer(n),
                };
                Ok(Polynomial::constant(self.dim(), q))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::var(self.dim(), i)),
                None => Err(err(at, format!("unknown variable '{name}'"))),
            },
            Tok::LParen => {
                let inner = self.expression()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(err(self.here(), "expected ')'")),
                }
            }
            other => Err(err(at, format!("unexpected token {other:?}"))),
        }
    }

    fn check_degree(&self, p: &Polynomial) -> Result<()> {
        if p.total_degree() > i64::from(self.max_degree) {
            return Err(err(self.here(), format!("degree exceeds the cap {}", self.max_degree)));
        }
        Ok(())
    }
}

trait PowChecked {
    fn pow_checked(&self, k: u32, cap: u32) -> Option<Polynomial>;
}

impl PowChecked for Polynomial {
    fn pow_checked(&self, k: u32, cap: u32) -> Option<Polynomial> {
        let d = self.total_degree().max(0) as u64;
        (d * u64::from(k) <= u64::from(cap)).then(|| self.pow(k))
    }
}

/// Parse with an explicit cap on exponents and on the total degree of
/// every intermediate result.
pub fn parse_polynomial_capped(src: &str, variables: &[String], max_degree: u32) -> Result<Polynomial> {
    if variables.is_empty() {
        return Err(CliError::schema("at least one variable is required"));
    }
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        vars: variables,
        max_degree,
    };
    let out = p.expression()?;
    if p.pos != p.toks.len() {
        return Err(err(p.here(), "unexpected trailing input"));
    }
    Ok(out)
}

/// Parse with the default degree cap of 64.
pub fn parse_polynomial(src: &str, variables: &[String]) -> Result<Polynomial> {
    parse_polynomial_capped(src, variables, crate::limits::DEFAULT_MAX_DEGREE)
}

/// `x1, …, xd`.
pub fn default_variables(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("x{i}")).collect()
}

/// Canonical text of `p` with the given variable names.
pub fn render(p: &Polynomial, variables: &[String]) -> String {
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();
    let out = p.display_with(&names).to_string();
    out
}

/// Canonical text of a monomial.
pub fn render_monomial(e: &Exponent, variables: &[String]) -> String {
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();
    let out = e.display_with(&names).to_string();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ideal_interp_core::poly::ratio;

    fn vars2() -> Vec<String> {
        default_variables(2)
    }

    #[test]
    fn expands_f1() {
        let p = parse_polynomial("(1-x1)^2+(1-x2)^2+1", &vars2()).unwrap();
        assert_eq!(p.to_string(), "x1^2 - 2*x1 + x2^2 - 2*x2 + 3");
    }

    #[test]
    fn rational_coefficient() {
        let p = parse_polynomial("3/2*x1^2*x2", &vars2()).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&Exponent::from([2, 1])), ratio(3, 2));
    }

    #[test]
    fn bad_exponents() {
        for src in ["x1^(-1)", "x1^-1", "x1^1/2", "x1^x2"] {
            let e = parse_polynomial(src, &vars2()).unwrap_err();
            assert_eq!(e.kind(), "ParseError", "{src}");
        }
    }

    #[test]
    fn precedence_and_unary_minus() {
        let v = vars2();
        assert_eq!(parse_polynomial("-x1^2", &v).unwrap().to_string(), "-x1^2");
        assert_eq!(
            parse_polynomial("2*x1+3*x2^2", &v).unwrap().to_string(),
            "2*x1 + 3*x2^2"
        );
        assert_eq!(parse_polynomial("--x1", &v).unwrap().to_string(), "x1");
        assert_eq!(parse_polynomial("x1 - -x2", &v).unwrap().to_string(), "x1 + x2");
        assert_eq!(parse_polynomial("(x1+x2)^0", &v).unwrap().to_string(), "1");
    }

    #[test]
    fn errors_carry_positions() {
        let v = vars2();
        match parse_polynomial("x1 + y", &v).unwrap_err() {
            CliError::Parse { position, .. } => assert_eq!(position, 5),
            e => panic!("{e}"),
        }
        match parse_polynomial("x1 x2", &v).unwrap_err() {
            CliError::Parse { position, .. } => assert_eq!(position, 3),
            e => panic!("{e}"),
        }
        assert!(parse_polynomial("(x1", &v).is_err());
        assert!(parse_polynomial("", &v).is_err());
        assert!(parse_polynomial("1/0", &v).is_err());
        assert!(parse_polynomial("x1 # 2", &v).is_err());
    }

    #[test]
    fn degree_cap() {
        let v = vars2();
        assert!(parse_polynomial_capped("x1^10", &v, 9).is_err());
        assert!(parse_polynomial_capped("(x1^5)^2", &v, 9).is_err());
        assert!(parse_polynomial_capped("x1^5*x2^5", &v, 9).is_err());
        assert!(parse_polynomial_capped("x1^9", &v, 9).is_ok());
    }

    #[test]
    fn custom_names() {
        let v = vec!["u".to_string(), "v".to_string()];
        let p = parse_polynomial("u*v - 1/3", &v).unwrap();
        assert_eq!(render(&p, &v), "u*v - 1/3");
    }
}
