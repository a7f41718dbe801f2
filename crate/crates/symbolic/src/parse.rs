//! Text syntax for polynomials, 1-forms and logarithmic presentations.
//!
//! Expressions use `x y i dx dy d( ) + - * / ^` and integer or `p/q`
//! literals. Terms of the form `EXPR*dF/F` produce logarithmic pairs; they
//! are accepted by [`parse`] and, inside files, only on lines tagged `log:`.

use crate::bipoly::BiPoly;
use crate::form::{LogPresentation, OneForm};
use crate::gcd::{exact_div, squarefree_part};
use numtower::{imaginary_unit, TowerElem};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// The result of parsing one expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Poly(BiPoly),
    Form(OneForm),
    Log(LogPresentation),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    X,
    Y,
    I,
    Dx,
    Dy,
    DOpen,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(s: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
    let cs: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut k = 0;
    let err = |k: usize, msg: String| ParseError { line, col: col0 + k, msg };
    while k < cs.len() {
        let c = cs[k];
        let start = k;
        let tok = match c {
            ' ' | '\t' | '\r' => {
                k += 1;
                continue;
            }
            '0'..='9' => {
                while k < cs.len() && cs[k].is_ascii_digit() {
                    k += 1;
                }
                toks.push((Tok::Num(cs[start..k].iter().collect()), col0 + start));
                continue;
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            'i' => Tok::I,
            'd' => match cs.get(k + 1) {
                Some('x') => {
                    k += 1;
                    Tok::Dx
                }
                Some('y') => {
                    k += 1;
                    Tok::Dy
                }
                Some('(') => {
                    k += 1;
                    Tok::DOpen
                }
                _ => return Err(err(k, "expected dx, dy or d(".into())),
            },
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            other => return Err(err(k, format!("unexpected character '{other}'"))),
        };
        k += 1;
        if matches!(tok, Tok::X | Tok::Y | Tok::I | Tok::Dx | Tok::Dy) && cs.get(k).is_some_and(|c| c.is_alphanumeric()) {
            return Err(err(k, "unexpected identifier".into()));
        }
        toks.push((tok, col0 + start));
    }
    toks.push((Tok::End, col0 + cs.len()));
    Ok(Lexer { toks })
}

/// Intermediate value: a function, a form, or a logarithmic expression.
#[derive(Clone)]
enum V {
    P(BiPoly),
    F(OneForm),
    L(Vec<(TowerElem, BiPoly)>, OneForm),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    allow_log: bool,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn err_at(&self, col: usize, msg: &str) -> ParseError {
        ParseError { line: self.line, col, msg: msg.to_string() }
    }

    fn err(&self, msg: &str) -> ParseError {
        self.err_at(self.col(), msg)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<V, ParseError> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.next();
                self.term()?
            }
            Tok::Minus => {
                self.next();
                neg(self.term()?)
            }
            _ => self.term()?,
        };
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    let t = self.term()?;
                    acc = add(acc, t).map_err(|m| self.err_at(col, m))?;
                }
                Tok::Minus => {
                    self.next();
                    let t = self.term()?;
                    acc = add(acc, neg(t)).map_err(|m| self.err_at(col, m))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<V, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Star => {
                    self.next();
                    let f = self.unary()?;
                    acc = mul(acc, f).map_err(|m| self.err_at(col, m))?;
                }
                Tok::Slash => {
                    self.next();
                    let f = self.unary()?;
                    acc = div(acc, f, self.allow_log).map_err(|m| self.err_at(col, m))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<V, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.next();
                Ok(neg(self.unary()?))
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<V, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let col = self.col();
        let n: u32 = match self.next() {
            Tok::Num(s) => s.parse().map_err(|_| self.err_at(col, "exponent too large"))?,
            _ => return Err(self.err_at(col, "expected a nonnegative integer exponent")),
        };
        match base {
            V::P(p) => Ok(V::P(p.pow(n))),
            _ => Err(self.err_at(col, "only functions can be raised to a power")),
        }
    }

    fn atom(&mut self) -> Result<V, ParseError> {
        let col = self.col();
        match self.next() {
            Tok::Num(s) => {
                let q = numtower::parse_rational(&s).ok_or_else(|| self.err_at(col, "bad number"))?;
                Ok(V::P(BiPoly::constant(TowerElem::rational(q))))
            }
            Tok::X => Ok(V::P(BiPoly::x())),
            Tok::Y => Ok(V::P(BiPoly::y())),
            Tok::I => Ok(V::P(BiPoly::constant(imaginary_unit()))),
            Tok::Dx => Ok(V::F(OneForm::new(BiPoly::one(), BiPoly::zero()))),
            Tok::Dy => Ok(V::F(OneForm::new(BiPoly::zero(), BiPoly::one()))),
            Tok::DOpen => {
                let inner = self.expr()?;
                self.expect_close()?;
                match inner {
                    V::P(p) => Ok(V::F(OneForm::exact(&p))),
                    _ => Err(self.err_at(col, "d(...) needs a function")),
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect_close()?;
                Ok(inner)
            }
            Tok::End => Err(self.err_at(col, "unexpected end of input")),
            _ => Err(self.err_at(col, "unexpected token")),
        }
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        if self.next() != Tok::RParen {
            return Err(self.err_at(self.toks[self.pos.saturating_sub(1)].1, "expected ')'"));
        }
        Ok(())
    }
}

fn neg(v: V) -> V {
    match v {
        V::P(p) => V::P(p.neg()),
        V::F(w) => V::F(w.neg()),
        V::L(ps, r) => V::L(ps.into_iter().map(|(l, f)| (-&l, f)).collect(), r.neg()),
    }
}

fn as_log(v: V) -> Result<(Vec<(TowerElem, BiPoly)>, OneForm), &'static str> {
    match v {
        V::P(p) if p.is_zero() => Ok((Vec::new(), OneForm::zero())),
        V::P(_) => Err("cannot add a function to a differential form"),
        V::F(w) => Ok((Vec::new(), w)),
        V::L(ps, r) => Ok((ps, r)),
    }
}

fn add(a: V, b: V) -> Result<V, &'static str> {
    match (a, b) {
        (V::P(p), V::P(q)) => Ok(V::P(p.add(&q))),
        (V::F(w), V::F(u)) => Ok(V::F(w.add(&u))),
        (a, b) => {
            let (mut pa, ra) = as_log(a)?;
            let (pb, rb) = as_log(b)?;
            if pa.is_empty() && pb.is_empty() {
                return Ok(V::F(ra.add(&rb)));
            }
            pa.extend(pb);
            Ok(V::L(pa, ra.add(&rb)))
        }
    }
}

fn mul(a: V, b: V) -> Result<V, &'static str> {
    match (a, b) {
        (V::P(p), V::P(q)) => Ok(V::P(p.mul(&q))),
        (V::P(p), V::F(w)) | (V::F(w), V::P(p)) => Ok(V::F(w.mul_poly(&p))),
        (V::P(p), V::L(ps, r)) | (V::L(ps, r), V::P(p)) => {
            let c = p.as_constant().ok_or("a logarithmic term can only be scaled by a constant")?;
            Ok(V::L(ps.into_iter().map(|(l, f)| (&l * &c, f)).collect(), r.mul_poly(&p)))
        }
        _ => Err("cannot multiply two differential forms"),
    }
}

fn div(a: V, b: V, allow_log: bool) -> Result<V, &'static str> {
    let p = match b {
        V::P(p) => p,
        _ => return Err("can only divide by a function"),
    };
    if p.is_zero() {
        return Err("division by zero");
    }
    if let Some(c) = p.as_constant() {
        let ci = c.inv().map_err(|_| "division by zero")?;
        return mul(a, V::P(BiPoly::constant(ci)));
    }
    match a {
        V::P(q) => exact_div(&q, &p).map(V::P).ok_or("division by a polynomial that does not divide"),
        V::F(w) => {
            let c = w.quotient(&OneForm::exact(&p)).ok_or("a form can only be divided by F in a term EXPR*dF/F")?;
            if let Some(lam) = c.as_constant() {
                if !allow_log {
                    return Err("logarithmic terms are only allowed on log: lines");
                }
                if !p.vanishes_at_origin() {
                    return Err("a logarithmic pole must pass through the origin");
                }
                if squarefree_part(&p) != p.monic() {
                    return Err("a logarithmic pole must be squarefree");
                }
                return Ok(V::L(vec![(lam, p)], OneForm::zero()));
            }
            match exact_div(&c, &p) {
                Some(q) => Ok(V::F(OneForm::exact(&p).mul_poly(&q))),
                None => Err("EXPR*dF/F needs EXPR constant or divisible by F"),
            }
        }
        V::L(..) => Err("cannot divide a logarithmic expression by a function"),
    }
}

fn finish(v: V) -> Parsed {
    match v {
        V::P(p) => Parsed::Poly(p),
        V::F(w) => Parsed::Form(w),
        V::L(ps, r) => Parsed::Log(LogPresentation::new(ps, (!r.is_zero()).then_some(r))),
    }
}

fn parse_line(s: &str, line: usize, col0: usize, allow_log: bool) -> Result<Parsed, ParseError> {
    let lx = lex(s, line, col0)?;
    let mut p = Parser { toks: lx.toks, pos: 0, line, allow_log };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(finish(v))
}

/// Parses a single expression (logarithmic terms allowed).
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    parse_line(text, 1, 1, true)
}

pub fn parse_poly(text: &str) -> Result<BiPoly, ParseError> {
    match parse(text)? {
        Parsed::Poly(p) => Ok(p),
        _ => Err(ParseError { line: 1, col: 1, msg: "expected a polynomial".into() }),
    }
}

/// A form, with logarithmic input converted to its reduced polynomial
/// generator.
pub fn parse_form(text: &str) -> Result<OneForm, ParseError> {
    match parse(text)? {
        Parsed::Form(w) => Ok(w),
        Parsed::Log(l) => Ok(l.to_reduced_form()),
        Parsed::Poly(_) => Err(ParseError { line: 1, col: 1, msg: "expected a differential form".into() }),
    }
}

/// Kind of document announced by the header line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Header {
    Foliation,
    Divisor,
    List,
}

/// One content line of a document: 1-based line number, the column where
/// `text` starts, and the text with comments removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub line: usize,
    pub col: usize,
    pub text: String,
}

/// Splits a document into its header and nonblank, comment-free lines.
/// Text after the header tag counts as the first content line.
pub fn split_document(text: &str) -> Result<(Header, Vec<Line>), ParseError> {
    let mut header = None;
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let col = body.chars().count() - trimmed.chars().count() + 1;
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        if header.is_none() {
            let known = [("foliation:", Header::Foliation), ("divisor:", Header::Divisor), ("list:", Header::List)];
            let Some((tag, h)) = known.iter().find(|(t, _)| trimmed.starts_with(t)) else {
                return Err(ParseError {
                    line: n + 1,
                    col,
                    msg: "expected a header line 'foliation:', 'divisor:' or 'list:'".into(),
                });
            };
            header = Some(*h);
            // Content may follow the header on the same line.
            let rest = &trimmed[tag.len()..];
            let text = rest.trim_start();
            if !text.is_empty() {
                let c = col + tag.chars().count() + (rest.chars().count() - text.chars().count());
                lines.push(Line { line: n + 1, col: c, text: text.to_string() });
            }
            continue;
        }
        lines.push(Line { line: n + 1, col, text: trimmed.to_string() });
    }
    let h = header.ok_or(ParseError { line: 1, col: 1, msg: "empty document".into() })?;
    Ok((h, lines))
}

fn log_tag(l: &Line) -> (bool, usize, &str) {
    match l.text.strip_prefix("log:") {
        Some(rest) => {
            let t = rest.trim_start();
            (true, l.col + 4 + (rest.len() - t.len()), t)
        }
        None => (false, l.col, l.text.as_str()),
    }
}

/// A `foliation:` document holding one form (a `log:` line may carry a
/// logarithmic presentation).
pub fn parse_foliation_document(text: &str) -> Result<Parsed, ParseError> {
    let (h, lines) = split_document(text)?;
    if h != Header::Foliation {
        return Err(ParseError { line: 1, col: 1, msg: "expected a 'foliation:' document".into() });
    }
    match lines.as_slice() {
        [l] => {
            let (log, col, body) = log_tag(l);
            match parse_line(body, l.line, col, log)? {
                Parsed::Poly(_) => Err(ParseError { line: l.line, col, msg: "expected a differential form".into() }),
                other => Ok(other),
            }
        }
        [] => Err(ParseError { line: 1, col: 1, msg: "missing foliation expression".into() }),
        [_, l, ..] => Err(ParseError { line: l.line, col: l.col, msg: "a foliation document holds one expression".into() }),
    }
}

/// A `list:` document: polynomials, comma-separated and/or one per line.
pub fn parse_list_document(text: &str) -> Result<Vec<BiPoly>, ParseError> {
    let (h, lines) = split_document(text)?;
    if h != Header::List {
        return Err(ParseError { line: 1, col: 1, msg: "expected a 'list:' document".into() });
    }
    let mut out = Vec::new();
    for l in &lines {
        let mut col = l.col;
        for piece in l.text.split(',') {
            let t = piece.trim_start();
            let c = col + (piece.chars().count() - t.chars().count());
            if t.trim().is_empty() {
                return Err(ParseError { line: l.line, col: c, msg: "empty list entry".into() });
            }
            match parse_line(t, l.line, c, false)? {
                Parsed::Poly(p) => out.push(p),
                _ => return Err(ParseError { line: l.line, col: c, msg: "list entries must be polynomials".into() }),
            }
            col += piece.chars().count() + 1;
        }
    }
    Ok(out)
}

/// Parses a coefficient: a `p/q` rational or a constant expression (for
/// instance `1 + 2*i`).
pub fn parse_constant(text: &str) -> Result<TowerElem, ParseError> {
    if let Some(q) = numtower::parse_rational(text) {
        return Ok(TowerElem::rational(q));
    }
    match parse(text)? {
        Parsed::Poly(p) => p.as_constant().ok_or(ParseError { line: 1, col: 1, msg: "expected a constant".into() }),
        _ => Err(ParseError { line: 1, col: 1, msg: "expected a constant".into() }),
    }
}
