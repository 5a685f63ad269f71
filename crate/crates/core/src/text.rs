//! Reading and writing number fields, polynomials and 1-forms as text.
//!
//! ```text
//! field Q(a): a^2 - a + 1 = 0
//! omega = y^2*(6*x^2 + 4*x*y + y^2) dx - (2*a - 1)*x^4 dy
//! ```
//!
//! Products may be written by juxtaposition. `dx`, `dy` (and `dz` for homogeneous
//! three-variable forms) must occur linearly. Lines starting with `#` are ignored.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::foliation::{make_foliation, FoliationError, ProjFoliation, XY, XYZ};
use crate::numeric::{AlgNum, NumberField, NumericError, Rational};
use crate::polynomial::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator '{name}' at line {line}, column {column}")]
    UndeclaredGenerator {
        name: char,
        line: usize,
        column: usize,
    },
    #[error("invalid field: {0}")]
    Field(#[from] NumericError),
    #[error("not a 1-form: {0}")]
    NotAForm(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Diff(char),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Num(s.parse().expect("digits")),
                line,
                column,
            });
        } else if c == 'd' && i + 1 < chars.len() && matches!(chars[i + 1], 'x' | 'y' | 'z') {
            let follows_letter = chars.get(i + 2).is_some_and(|n| n.is_alphanumeric());
            if follows_letter {
                return Err(ParseError::Syntax {
                    line,
                    column,
                    message: "unexpected identifier".into(),
                });
            }
            out.push(Token {
                tok: Tok::Diff(chars[i + 1]),
                line,
                column,
            });
            i += 2;
        } else if c.is_ascii_lowercase() {
            out.push(Token {
                tok: Tok::Ident(c),
                line,
                column,
            });
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Token {
                tok: Tok::Op(c),
                line,
                column,
            });
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

// Internal names for dx, dy, dz inside the parser's ring.
const DIFFS: [char; 3] = ['X', 'Y', 'Z'];

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    field: &'a NumberField,
    vars: &'a [char],
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.column))
            .unwrap_or(self.end)
    }

    fn error(&self, message: &str) -> ParseError {
        let (line, column) = self.here();
        ParseError::Syntax {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn constant(&self, c: AlgNum) -> MPoly {
        MPoly::constant(self.field, self.vars, c)
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Diff(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(ParseError::Syntax {
                            line: at.0,
                            column: at.1,
                            message: "division by a non-constant or zero".into(),
                        });
                    }
                    let inv = d.constant_term().inverse()?;
                    acc = acc.scale(&inv);
                }
                _ if self.starts_atom() => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.error("expected an exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, ParseError> {
        let Some(t) = self.toks.get(self.pos).cloned() else {
            return Err(self.error("unexpected end of input"));
        };
        self.pos += 1;
        match t.tok {
            Tok::Num(n) => Ok(self.constant(self.field.rat(Rational::from_integer(n)))),
            Tok::Op('(') => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.error("expected ')'")),
                }
            }
            Tok::Op('-') => Ok(-&self.factor()?),
            Tok::Ident(c) => {
                if let Some(i) = self.vars.iter().position(|&v| v == c) {
                    Ok(MPoly::var_at(self.field, self.vars, i))
                } else if !self.field.is_rational() && c == self.field.generator_symbol() {
                    Ok(self.constant(self.field.generator()))
                } else {
                    Err(ParseError::UndeclaredGenerator {
                        name: c,
                        line: t.line,
                        column: t.column,
                    })
                }
            }
            Tok::Diff(c) => {
                let k = ['x', 'y', 'z'].iter().position(|&v| v == c).unwrap();
                match self.vars.iter().position(|&v| v == DIFFS[k]) {
                    Some(i) => Ok(MPoly::var_at(self.field, self.vars, i)),
                    None => Err(ParseError::Syntax {
                        line: t.line,
                        column: t.column,
                        message: "differential not allowed here".into(),
                    }),
                }
            }
            Tok::Op(c) => {
                self.pos -= 1;
                Err(self.error(&format!("unexpected '{c}'")))
            }
        }
    }
}

fn parse_expression(
    text: &str,
    field: &NumberField,
    vars: &[char],
    line: usize,
    col0: usize,
) -> Result<MPoly, ParseError> {
    let toks = tokenize(text, line, col0)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        field,
        vars,
        end: (line, col0 + text.chars().count()),
    };
    let e = p.expr()?;
    if p.pos < toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a polynomial in the given variables, with the field generator as a constant.
pub fn parse_polynomial(text: &str, field: &NumberField, vars: &[char]) -> Result<MPoly, ParseError> {
    parse_expression(text, field, vars, 1, 1)
}

/// Parses a constant expression in the field, such as `-3/8 + s/8`.
pub fn parse_scalar(text: &str, field: &NumberField) -> Result<AlgNum, ParseError> {
    let p = parse_expression(text, field, &[], 1, 1)?;
    Ok(p.constant_term())
}

/// Parses `Q`, or a declaration `Q(a): <polynomial in a> = 0` with an optional `field` keyword.
pub fn parse_field(decl: &str) -> Result<NumberField, ParseError> {
    parse_field_at(decl, 1)
}

fn parse_field_at(decl: &str, line: usize) -> Result<NumberField, ParseError> {
    let body = decl.trim();
    let body = body.strip_prefix("field").map(str::trim_start).unwrap_or(body);
    let offset = decl.len() - body.len() + 1;
    let syntax = |column: usize, message: &str| ParseError::Syntax {
        line,
        column,
        message: message.to_string(),
    };
    if body == "Q" {
        return Ok(NumberField::rationals());
    }
    let rest = body
        .strip_prefix("Q(")
        .ok_or_else(|| syntax(offset, "expected Q or Q(<generator>)"))?;
    let mut chars = rest.chars();
    let g = chars
        .next()
        .filter(|c| c.is_ascii_lowercase() && !matches!(c, 'x' | 'y' | 'z' | 'd'))
        .ok_or_else(|| syntax(offset + 2, "expected a generator letter other than x, y, z, d"))?;
    let rest = chars.as_str();
    let rest = rest
        .strip_prefix(')')
        .ok_or_else(|| syntax(offset + 3, "expected ')'"))?
        .trim_start();
    let rest = rest
        .strip_prefix(':')
        .ok_or_else(|| syntax(offset + 4, "expected ':'"))?;
    let (lhs, rhs) = rest
        .split_once('=')
        .ok_or_else(|| syntax(offset + 5, "expected '= 0'"))?;
    if rhs.trim() != "0" {
        return Err(syntax(offset + 5, "the right-hand side must be 0"));
    }
    let col = decl.len() - rest.len() + 1;
    let q = NumberField::rationals();
    let p = parse_expression(lhs, &q, &[g], line, col)?;
    let deg = p.total_degree().unwrap_or(0) as usize;
    let coeffs: Vec<Rational> = (0..=deg)
        .map(|k| {
            p.coefficient(&[k as u32])
                .as_rational()
                .cloned()
                .expect("rational coefficients")
        })
        .collect();
    Ok(NumberField::new(coeffs, g)?)
}

/// A parsed 1-form: affine `A dx + B dy`, or homogeneous `a dx + b dy + c dz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedForm {
    pub field: NumberField,
    pub coefficients: Vec<MPoly>,
}

impl ParsedForm {
    pub fn is_affine(&self) -> bool {
        self.coefficients.len() == 2
    }

    pub fn foliation(&self) -> Result<ProjFoliation, FoliationError> {
        match self.coefficients.as_slice() {
            [a, b] => make_foliation(a, b),
            [a, b, c] => ProjFoliation::new(a.clone(), b.clone(), c.clone()),
            _ => unreachable!("two or three coefficients"),
        }
    }
}

/// Parses an optional field header followed by `omega = ...`.
pub fn parse_form(text: &str) -> Result<ParsedForm, ParseError> {
    parse_form_with(text, None)
}

/// As [`parse_form`]; `default_field` applies when the text has no header.
pub fn parse_form_with(text: &str, default_field: Option<&NumberField>) -> Result<ParsedForm, ParseError> {
    let mut field = default_field.cloned().unwrap_or_else(NumberField::rationals);
    let mut body: Option<(usize, usize, String)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.starts_with("field") {
            if body.is_some() {
                return Err(ParseError::Syntax {
                    line,
                    column: 1,
                    message: "field declaration after the form".into(),
                });
            }
            field = parse_field_at(raw, line)?;
            continue;
        }
        match &mut body {
            None => {
                let lead = raw.len() - raw.trim_start().len();
                let (col, rest) = match trimmed.split_once('=') {
                    Some((name, rest)) if name.trim().chars().all(|c| c.is_alphanumeric() || c == '_') => {
                        (lead + name.len() + 2, rest.to_string())
                    }
                    _ => (lead + 1, trimmed.to_string()),
                };
                body = Some((line, col, rest));
            }
            Some((_, _, s)) => {
                s.push(' ');
                s.push_str(trimmed);
            }
        }
    }
    let (line, col, expr) = body.ok_or(ParseError::Syntax {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing form".into(),
    })?;
    let homogeneous = expr.contains("dz");
    let ring: Vec<char> = if homogeneous {
        XYZ.iter().chain(DIFFS.iter()).copied().collect()
    } else {
        XY.iter().chain(DIFFS[..2].iter()).copied().collect()
    };
    let nbase = ring.len() - if homogeneous { 3 } else { 2 };
    let e = parse_expression(&expr, &field, &ring, line, col)?;
    let base: Vec<char> = ring[..nbase].to_vec();
    let mut coefficients = vec![MPoly::zero(&field, &base); ring.len() - nbase];
    for (m, c) in e.terms() {
        let dpart: u32 = m.0[nbase..].iter().sum();
        if dpart != 1 {
            return Err(ParseError::NotAForm(
                "every term must contain exactly one differential".into(),
            ));
        }
        let k = m.0[nbase..].iter().position(|&x| x == 1).unwrap();
        let mono = MPoly::monomial(&field, &base, c.clone(), m.0[..nbase].to_vec());
        coefficients[k] = &coefficients[k] + &mono;
    }
    if coefficients.iter().all(MPoly::is_zero) {
        return Err(ParseError::NotAForm("the form is zero".into()));
    }
    Ok(ParsedForm {
        field,
        coefficients,
    })
}

fn wrapped(p: &MPoly) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

/// Canonical text of a form with its field header (omitted over the rationals).
pub struct FormText<'a> {
    pub field: &'a NumberField,
    pub coefficients: &'a [MPoly],
}

impl fmt::Display for FormText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.field.is_rational() {
            writeln!(f, "{}", self.field.declaration())?;
        }
        let diffs = ["dx", "dy", "dz"];
        let mut out = String::new();
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = wrapped(c);
            match (out.is_empty(), term.strip_prefix('-')) {
                (true, _) => out.push_str(&term),
                (false, Some(rest)) => out.push_str(&format!(" - {rest}")),
                (false, None) => out.push_str(&format!(" + {term}")),
            }
            out.push_str(&format!(" {}", diffs[k]));
        }
        write!(f, "omega = {out}")
    }
}

/// `format_form(&field, &[A, B])` renders `omega = (A) dx + (B) dy`.
pub fn format_form(field: &NumberField, coefficients: &[MPoly]) -> String {
    FormText {
        field,
        coefficients,
    }
    .to_string()
}
