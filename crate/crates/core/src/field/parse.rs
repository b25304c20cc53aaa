//! Text format for vector fields.
//!
//! ```text
//! # Example: two-species cooperative field
//! dim = 2
//! f1 = -3*w1^1.5 + 2*w1*sqrt(w2)
//! f2 = sqrt(w1)*w2 - 4*pow(w2, 1.5)
//! ```
//!
//! The full grammar is in `docs/field_format.md`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::VectorField;

/// Parse failure, located by 1-based line and column (counted in characters).
#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Expression tree of one field component. Variables are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
}

impl Expr {
    pub fn eval(&self, w: &[f64]) -> f64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Var(i) => w[*i],
            Expr::Neg(a) => -a.eval(w),
            Expr::Add(a, b) => a.eval(w) + b.eval(w),
            Expr::Sub(a, b) => a.eval(w) - b.eval(w),
            Expr::Mul(a, b) => a.eval(w) * b.eval(w),
            Expr::Div(a, b) => a.eval(w) / b.eval(w),
            Expr::Pow(a, b) => {
                let base = a.eval(w);
                match **b {
                    Expr::Const(n) if n == n.trunc() && n.abs() <= 64.0 => base.powi(n as i32),
                    _ => base.powf(b.eval(w)),
                }
            }
            Expr::Sqrt(a) => a.eval(w).sqrt(),
        }
    }
}

/// Fully parenthesized; re-parses to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c:?}"),
            Expr::Var(i) => write!(f, "w{}", i + 1),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, b) => write!(f, "pow({a}, {b})"),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

/// A parsed field file.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSpec {
    pub dim: usize,
    pub components: Vec<Expr>,
}

impl FieldSpec {
    pub fn to_field(&self) -> VectorField {
        let components = self.components.clone();
        VectorField::new(self.dim, move |w, out| {
            for (o, e) in out.iter_mut().zip(&components) {
                *o = e.eval(w);
            }
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim = {}", self.dim)?;
        for (i, e) in self.components.iter().enumerate() {
            writeln!(f, "f{} = {e}", i + 1)?;
        }
        Ok(())
    }
}

impl FromStr for FieldSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_field(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    line: usize,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn lex(line_no: usize, text: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let s: String = chars[start..i].iter().collect();
            let value = s
                .parse::<f64>()
                .map_err(|_| err(line_no, col, format!("malformed number `{s}`")))?;
            toks.push((Tok::Num(value), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^(),=".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(line_no, col, format!("unexpected character `{c}`")));
        }
    }
    toks.push((Tok::End, chars.len() + 1));
    Ok(Lexer {
        line: line_no,
        toks,
        pos: 0,
    })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        err(self.line, self.col(), message)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`, found {}", describe(self.peek()))))
        }
    }

    fn expr(&mut self, dim: usize) -> Result<Expr, ParseError> {
        let mut lhs = self.term(dim)?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term(dim)?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term(dim)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self, dim: usize) -> Result<Expr, ParseError> {
        let mut lhs = self.unary(dim)?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary(dim)?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary(dim)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self, dim: usize) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary(dim)?)))
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary(dim)
            }
            _ => self.power(dim),
        }
    }

    fn power(&mut self, dim: usize) -> Result<Expr, ParseError> {
        let base = self.primary(dim)?;
        if *self.peek() == Tok::Sym('^') {
            self.bump();
            let exponent = self.unary(dim)?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn primary(&mut self, dim: usize) -> Result<Expr, ParseError> {
        let col = self.col();
        match self.bump() {
            Tok::Num(x) => Ok(Expr::Const(x)),
            Tok::Sym('(') => {
                let e = self.expr(dim)?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "sqrt" => {
                    self.expect('(')?;
                    let a = self.expr(dim)?;
                    self.expect(')')?;
                    Ok(Expr::Sqrt(Box::new(a)))
                }
                "pow" => {
                    self.expect('(')?;
                    let a = self.expr(dim)?;
                    self.expect(',')?;
                    let b = self.expr(dim)?;
                    self.expect(')')?;
                    Ok(Expr::Pow(Box::new(a), Box::new(b)))
                }
                "pi" => Ok(Expr::Const(std::f64::consts::PI)),
                _ => match variable_index(&name) {
                    Some(k) if k >= 1 && k <= dim => Ok(Expr::Var(k - 1)),
                    Some(k) => Err(err(
                        self.line,
                        col,
                        format!("variable w{k} outside 1..={dim}"),
                    )),
                    None => Err(err(self.line, col, format!("unknown identifier `{name}`"))),
                },
            },
            other => Err(err(
                self.line,
                col,
                format!("expected an operand, found {}", describe(&other)),
            )),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(x) => format!("number {x}"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of line".into(),
    }
}

/// `w12` → 12; `f3` style names go through `component_index`.
fn variable_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('w')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn component_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('f')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Parses a field file.
pub fn parse_field(source: &str) -> Result<FieldSpec, ParseError> {
    let mut dim: Option<(usize, usize)> = None;
    let mut components: Vec<Option<Expr>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let mut lx = lex(line_no, raw)?;
        if *lx.peek() == Tok::End {
            continue;
        }
        let name_col = lx.col();
        let name = match lx.bump() {
            Tok::Ident(s) => s,
            other => {
                return Err(err(
                    line_no,
                    name_col,
                    format!("expected `dim` or `f<i>`, found {}", describe(&other)),
                ))
            }
        };
        lx.expect('=')?;
        if name == "dim" {
            if dim.is_some() {
                return Err(err(line_no, name_col, "duplicate `dim` declaration"));
            }
            let col = lx.col();
            let d = match lx.bump() {
                Tok::Num(x) if x >= 1.0 && x == x.trunc() && x <= 1e6 => x as usize,
                other => {
                    return Err(err(
                        line_no,
                        col,
                        format!("`dim` needs a positive integer, found {}", describe(&other)),
                    ))
                }
            };
            if *lx.peek() != Tok::End {
                return Err(lx.error("trailing input after `dim`"));
            }
            dim = Some((d, line_no));
            components = vec![None; d];
            continue;
        }
        let Some((d, _)) = dim else {
            return Err(err(line_no, name_col, "component defined before `dim`"));
        };
        let k = match component_index(&name) {
            Some(k) if k >= 1 && k <= d => k,
            Some(k) => {
                return Err(err(line_no, name_col, format!("component f{k} outside 1..={d}")))
            }
            None => {
                return Err(err(
                    line_no,
                    name_col,
                    format!("expected `dim` or `f<i>`, found `{name}`"),
                ))
            }
        };
        if components[k - 1].is_some() {
            return Err(err(line_no, name_col, format!("duplicate definition of f{k}")));
        }
        let e = lx.expr(d)?;
        if *lx.peek() != Tok::End {
            return Err(lx.error(format!("unexpected {}", describe(lx.peek()))));
        }
        components[k - 1] = Some(e);
    }
    let Some((d, dim_line)) = dim else {
        return Err(err(last_line.max(1), 1, "missing `dim` declaration"));
    };
    if let Some(missing) = components.iter().position(Option::is_none) {
        return Err(err(dim_line, 1, format!("component f{} is never defined", missing + 1)));
    }
    Ok(FieldSpec {
        dim: d,
        components: components.into_iter().map(Option::unwrap).collect(),
    })
}
