//! Text input: polynomials, generator lists and module presentations.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! list   := poly ((',' | newline) poly)*
//! poly   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | variable | '(' poly ')'
//! ```
//!
//! Variables are the names of the target ring; in the ambient ring `x`, `y`,
//! `z` are aliases of `x1`, `x2`, `x3`. Adjacent variable names may be
//! written without a separator (`x1x2`, `xyz`). `#` starts a comment.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Newline,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (ln, col) = (li + 1, i + 1);
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' | ';' => Tok::Comma,
                d if d.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    out.push(Spanned {
                        tok: Tok::Num(s.parse().unwrap()),
                        line: ln,
                        column: col,
                    });
                    continue;
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    out.push(Spanned {
                        tok: Tok::Ident(chars[start..i].iter().collect()),
                        line: ln,
                        column: col,
                    });
                    continue;
                }
                other => return Err(err(ln, col, format!("unexpected character `{other}`"))),
            };
            out.push(Spanned {
                tok,
                line: ln,
                column: col,
            });
            i += 1;
        }
        out.push(Spanned {
            tok: Tok::Newline,
            line: li + 1,
            column: chars.len() + 1,
        });
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<PolyRing<F>>,
    names: Vec<(String, usize)>,
    toks: Vec<Spanned>,
    pos: usize,
    /// Depth of open parentheses; newlines inside them are whitespace.
    depth: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(ring: &'a Arc<PolyRing<F>>, text: &str) -> Result<Self> {
        let mut names: Vec<(String, usize)> = ring.var_names().iter().cloned().zip(0..).collect();
        if ring.var_names() == ["x1", "x2", "x3"] {
            names.extend([("x".to_string(), 0), ("y".to_string(), 1), ("z".to_string(), 2)]);
        }
        // longest names first for greedy splitting of `x1x2`
        names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
        Ok(Parser {
            ring,
            names,
            toks: lex(text)?,
            pos: 0,
            depth: 0,
        })
    }

    fn skip_soft_newlines(&mut self) {
        if self.depth > 0 {
            while matches!(self.toks.get(self.pos), Some(Spanned { tok: Tok::Newline, .. })) {
                self.pos += 1;
            }
        }
    }

    fn peek(&mut self) -> Option<&Tok> {
        self.skip_soft_newlines();
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.column),
            None => self.toks.last().map_or((1, 1), |s| (s.line, s.column)),
        }
    }

    fn next(&mut self) -> Option<Spanned> {
        self.skip_soft_newlines();
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(Tok::Comma | Tok::Newline)) {
            self.pos += 1;
        }
    }

    fn poly(&mut self) -> Result<Poly<F>> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
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
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let (line, column) = self.here();
            match self.next() {
                Some(Spanned { tok: Tok::Num(n), .. }) => {
                    let e = n
                        .to_u32()
                        .filter(|&e| e <= crate::poly::MAX_EXPONENT)
                        .ok_or_else(|| err(line, column, format!("exponent {n} is too large")))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(line, column, "expected an exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let (line, column) = self.here();
        let field = self.ring.field();
        match self.next() {
            Some(Spanned { tok: Tok::Num(n), .. }) => {
                let mut den = BigInt::one();
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.pos += 1;
                    let (l2, c2) = self.here();
                    match self.next() {
                        Some(Spanned { tok: Tok::Num(d), .. }) => den = d,
                        _ => return Err(err(l2, c2, "expected a denominator after `/`")),
                    }
                }
                let c = field
                    .from_ratio(&n, &den)
                    .map_err(|e| err(line, column, e.to_string()))?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(Spanned { tok: Tok::Ident(name), .. }) => self.variables(&name, line, column),
            Some(Spanned { tok: Tok::LParen, .. }) => {
                self.depth += 1;
                let inner = self.poly()?;
                let (l2, c2) = self.here();
                match self.next() {
                    Some(Spanned { tok: Tok::RParen, .. }) => {
                        self.depth -= 1;
                        Ok(inner)
                    }
                    _ => Err(err(l2, c2, "expected `)`")),
                }
            }
            Some(s) => Err(err(s.line, s.column, format!("unexpected {}", describe(&s.tok)))),
            None => Err(err(line, column, "unexpected end of input")),
        }
    }

    /// Splits an identifier into a product of variable names.
    fn variables(&self, ident: &str, line: usize, column: usize) -> Result<Poly<F>> {
        let mut exps = vec![0u32; self.ring.arity()];
        let mut rest = ident;
        while !rest.is_empty() {
            let Some((name, idx)) = self.names.iter().find(|(n, _)| rest.starts_with(n.as_str())) else {
                return Err(err(line, column, format!("unknown variable `{ident}`")));
            };
            exps[*idx] += 1;
            rest = &rest[name.len()..];
        }
        Ok(Poly::monomial(self.ring, Monomial::from_exponents(&exps)))
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Newline => "end of line".into(),
    }
}

/// Parses a single polynomial.
pub fn parse_poly<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Result<Poly<F>> {
    let mut p = Parser::new(ring, text)?;
    while matches!(p.peek(), Some(Tok::Newline)) {
        p.pos += 1;
    }
    if p.peek().is_none() {
        return Err(err(1, 1, "empty polynomial"));
    }
    let f = p.poly()?;
    while matches!(p.peek(), Some(Tok::Newline)) {
        p.pos += 1;
    }
    if let Some(s) = p.toks.get(p.pos) {
        return Err(err(s.line, s.column, format!("unexpected {}", describe(&s.tok))));
    }
    Ok(f)
}

/// Parses polynomials separated by commas, semicolons or line breaks.
pub fn parse_poly_list<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Result<Vec<Poly<F>>> {
    let mut p = Parser::new(ring, text)?;
    let mut out = Vec::new();
    p.skip_separators();
    while p.peek().is_some() {
        out.push(p.poly()?);
        match p.peek() {
            None | Some(Tok::Comma | Tok::Newline) => p.skip_separators(),
            Some(t) => {
                let t = t.clone();
                let (line, column) = p.here();
                return Err(err(line, column, format!("expected `,` before {}", describe(&t))));
            }
        }
    }
    Ok(out)
}

/// A parsed module presentation file.
#[derive(Debug, Clone)]
pub struct PresentationInput<F: Field> {
    pub target_shifts: Vec<i32>,
    pub source_shifts: Vec<i32>,
    pub matrix: Vec<Vec<Poly<F>>>,
}

/// Presentation file: the number `n` of target summands, the `n` target
/// shifts, the `n + 2` source shifts, then the `n (n + 2)` entries of the
/// matrix in row-major order. Each of the first three items is on its own
/// line; entries are separated by commas or line breaks.
pub fn parse_presentation<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Result<PresentationInput<F>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let ints = |(no, line): (usize, &str)| -> Result<Vec<i32>> {
        line.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i32>().map_err(|_| err(no, 1, format!("expected an integer, found `{s}`"))))
            .collect()
    };
    let header = lines.next().ok_or_else(|| err(1, 1, "missing header"))?;
    let n = match ints(header)?.as_slice() {
        [n] if *n > 0 => *n as usize,
        _ => return Err(err(header.0, 1, "header must be a single positive integer n")),
    };
    let b_line = lines.next().ok_or_else(|| err(header.0 + 1, 1, "missing target shifts"))?;
    let b = ints(b_line)?;
    if b.len() != n {
        return Err(err(b_line.0, 1, format!("expected {n} target shifts, found {}", b.len())));
    }
    let a_line = lines.next().ok_or_else(|| err(b_line.0 + 1, 1, "missing source shifts"))?;
    let a = ints(a_line)?;
    if a.len() != n + 2 {
        return Err(err(a_line.0, 1, format!("expected {} source shifts, found {}", n + 2, a.len())));
    }
    // reparse the remainder with original line numbers preserved
    let body: String = text
        .lines()
        .enumerate()
        .map(|(i, l)| if i + 1 > a_line.0 { l } else { "" })
        .collect::<Vec<_>>()
        .join("\n");
    let entries = parse_poly_list(ring, &body)?;
    if entries.len() != n * (n + 2) {
        return Err(err(
            a_line.0 + 1,
            1,
            format!("expected {} matrix entries, found {}", n * (n + 2), entries.len()),
        ));
    }
    let matrix = entries.chunks(n + 2).map(|c| c.to_vec()).collect();
    Ok(PresentationInput {
        target_shifts: b,
        source_shifts: a,
        matrix,
    })
}
