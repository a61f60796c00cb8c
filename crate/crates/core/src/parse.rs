//! Recursive-descent parser for polynomial expressions as they are usually
//! typed by hand: `X^6Y^2 + X^3(Y+Z)^5 + XY(Y+Z)^6 + Y^8 + Z^8`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' nat)?
//! base   := rational | var | '(' expr ')' | '-' factor
//! ```
//!
//! Identifiers are a single letter optionally followed by digits. Adjacent
//! identifiers multiply, and the longest declared variable name wins.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ParseError, ParseErrorKind};
use crate::linalg::Rational;
use crate::poly::{LinearForm, Polynomial};

/// Ordered variable names. Position `i` is exponent slot `i`, and earlier
/// names are larger in the lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_digit())
}

fn bad_vars(msg: String) -> ParseError {
    ParseError {
        kind: ParseErrorKind::BadVarTable(msg),
        pos: 0,
    }
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, ParseError> {
        let names: Vec<String> = names
            .iter()
            .map(|s| s.as_ref().trim().to_string())
            .collect();
        if names.is_empty() {
            return Err(bad_vars("no variables".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(bad_vars(format!(
                    "`{n}` is not a letter optionally followed by digits"
                )));
            }
            if names[..i].contains(n) {
                return Err(bad_vars(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarTable { names })
    }

    /// Parses a comma-separated list such as `x,y,z`.
    pub fn from_list(list: &str) -> Result<Self, ParseError> {
        let names: Vec<&str> = list.split(',').filter(|s| !s.trim().is_empty()).collect();
        Self::new(&names)
    }

    /// Collects identifiers by first occurrence across `texts`. Names that
    /// differ only in case are merged into the first spelling seen.
    pub fn infer<S: AsRef<str>>(texts: &[S]) -> Result<Self, ParseError> {
        let mut names: Vec<String> = Vec::new();
        for text in texts {
            let bytes = text.as_ref().as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                if bytes[i].is_ascii_alphabetic() {
                    let start = i;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let name = &text.as_ref()[start..i];
                    if !names.iter().any(|n| n.eq_ignore_ascii_case(name)) {
                        names.push(name.to_string());
                    }
                } else {
                    i += 1;
                }
            }
        }
        Self::new(&names)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Exact match first, then a unique case-insensitive match, so that a
    /// linear form written `y` binds to a generator written in `X,Y,Z`.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Some(i);
        }
        let mut hits = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| n.eq_ignore_ascii_case(name));
        match (hits.next(), hits.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational, bool),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(kind: ParseErrorKind, pos: usize) -> ParseError {
    ParseError { kind, pos }
}

fn lex(text: &str, vars: &VarTable) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Tok::Plus, i)),
            b'-' => out.push((Tok::Minus, i)),
            b'*' => out.push((Tok::Star, i)),
            b'^' => out.push((Tok::Caret, i)),
            b'(' => out.push((Tok::LParen, i)),
            b')' => out.push((Tok::RParen, i)),
            b'0'..=b'9' => {
                let (value, integral, end) = lex_number(text, i)?;
                out.push((Tok::Num(value, integral), start));
                i = end;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i + 1;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let run = &text[i..end];
                let hit = (1..=run.len())
                    .rev()
                    .find_map(|len| vars.lookup(&run[..len]).map(|v| (v, len)));
                match hit {
                    Some((v, len)) => {
                        out.push((Tok::Var(v), i));
                        i += len;
                    }
                    None => return Err(err(ParseErrorKind::UnknownIdentifier(run.to_string()), i)),
                }
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(err(ParseErrorKind::Unexpected(ch.to_string()), i));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Reads `123`, `3/4` or `1.25`; returns the value, whether it was written as
/// a plain integer, and the end offset.
fn lex_number(text: &str, start: usize) -> Result<(Rational, bool, usize), ParseError> {
    let bytes = text.as_bytes();
    let digits_end = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    let int_end = digits_end(start);
    let whole: BigInt = text[start..int_end].parse().expect("digits");
    if int_end < bytes.len() && bytes[int_end] == b'/' {
        let den_end = digits_end(int_end + 1);
        if den_end == int_end + 1 {
            return Err(err(ParseErrorKind::Unexpected("/".into()), int_end));
        }
        let den: BigInt = text[int_end + 1..den_end].parse().expect("digits");
        if den.is_zero() {
            return Err(err(ParseErrorKind::ZeroDenominator, int_end + 1));
        }
        return Ok((Rational::new(whole, den), false, den_end));
    }
    if int_end < bytes.len() && bytes[int_end] == b'.' {
        let frac_end = digits_end(int_end + 1);
        let frac = &text[int_end + 1..frac_end];
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_val: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().expect("digits")
        };
        return Ok((
            Rational::new(whole * &scale + frac_val, scale),
            false,
            frac_end,
        ));
    }
    Ok((Rational::from_integer(whole), true, int_end))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
    text_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.text_len, |(_, p)| *p)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            None => err(ParseErrorKind::UnexpectedEnd, self.text_len),
            Some((t, p)) => err(ParseErrorKind::Unexpected(tok_text(t)), *p),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t).expect("shared nvars");
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("shared nvars");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Num(..) | Tok::Var(_) | Tok::LParen) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = acc.mul(&f).expect("shared nvars");
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        match self.toks.get(self.pos) {
            Some((Tok::Num(n, true), _)) => {
                let e = u32::try_from(n.to_integer())
                    .map_err(|_| err(ParseErrorKind::BadExponent, at))?;
                self.pos += 1;
                if self.peek() == Some(&Tok::Caret) {
                    return Err(self.unexpected());
                }
                Ok(base.pow(e))
            }
            Some((Tok::Num(..) | Tok::Minus, _)) => Err(err(ParseErrorKind::BadExponent, at)),
            _ => Err(self.unexpected()),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(self.unexpected());
        };
        match tok {
            Tok::Num(value, _) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.nvars, value))
            }
            Tok::Var(v) => {
                self.pos += 1;
                Ok(Polynomial::var(self.nvars, v))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Minus => {
                self.pos += 1;
                let f = self.factor()?;
                Ok(f.scale(&-Rational::one()))
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Num(v, _) => v.to_string(),
        Tok::Var(i) => format!("variable #{i}"),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Caret => "^".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

/// Parses and fully expands a polynomial expression.
pub fn parse_poly(text: &str, vars: &VarTable) -> Result<Polynomial, ParseError> {
    let toks = lex(text, vars)?;
    if toks.is_empty() {
        return Err(err(ParseErrorKind::Empty, 0));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        nvars: vars.len(),
        text_len: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses a nonzero degree-one expression such as `x + 2y`.
pub fn parse_linear_form(text: &str, vars: &VarTable) -> Result<LinearForm, ParseError> {
    let p = parse_poly(text, vars)?;
    if p.is_zero() {
        return Err(err(ParseErrorKind::ZeroForm, 0));
    }
    let n = vars.len();
    let mut coeffs = vec![Rational::zero(); n];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            return Err(err(ParseErrorKind::NotLinear, 0));
        }
        let i = m
            .exponents()
            .iter()
            .position(|&e| e == 1)
            .expect("degree one");
        coeffs[i] = c.clone();
    }
    Ok(LinearForm::new(coeffs))
}
