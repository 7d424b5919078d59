//! Plain-text system files, polynomial parsing and deterministic rendering.
//!
//! Polynomial grammar (whitespace ignored, no implicit multiplication):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' uint)?
//! base   := integer | variable | '(' expr ')'
//! ```
//!
//! A system file starts with a `vars` line listing variables from smallest to
//! greatest, optionally followed by a `name <text>` line, then one polynomial
//! per line. `#` starts a comment.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::decomp::Component;
#[cfg(test)]
use crate::error::Error;
use crate::error::{ParseError, Result};
use crate::poly::{is_identifier, Coefficient, Polynomial, VarOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub order: VarOrder,
    pub polys: Vec<Polynomial>,
    pub name: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    tokens: Vec<(Token, usize)>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

impl Lexer {
    fn tokenize(text: &str, line: usize, col_offset: usize) -> Result<Self, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = col_offset + i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let tok = match c {
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '^' => Token::Caret,
                '(' => Token::LParen,
                ')' => Token::RParen,
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    tokens.push((Token::Int(digits.parse().unwrap()), col));
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    tokens.push((Token::Ident(chars[start..i].iter().collect()), col));
                    continue;
                }
                other => return Err(err(line, col, format!("unexpected character `{other}`"))),
            };
            tokens.push((tok, col));
            i += 1;
        }
        tokens.push((Token::End, col_offset + chars.len() + 1));
        Ok(Lexer { tokens })
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    line: usize,
    order: &'a VarOrder,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn column(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        err(self.line, self.column(), message)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Token::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Token::Int(k) => {
                let k = k
                    .to_u32()
                    .ok_or_else(|| self.error("exponent is too large"))?;
                self.bump();
                Ok(base.pow(k))
            }
            _ => Err(self.error("exponent must be a non-negative integer")),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Token::Int(v) => {
                self.bump();
                Ok(Polynomial::constant(
                    self.order,
                    Coefficient::from_integer(v),
                ))
            }
            Token::Ident(name) => match self.order.index_of(&name) {
                Some(i) => {
                    self.bump();
                    Ok(Polynomial::var(self.order, i))
                }
                None => Err(self.error(format!("unknown variable `{name}`"))),
            },
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Token::End => Err(self.error("unexpected end of input")),
            other => Err(self.error(format!("unexpected {}", describe(&other)))),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Token::End => Ok(()),
            Token::Int(_) | Token::Ident(_) | Token::LParen => {
                Err(self.error("implicit multiplication is not allowed; use `*`"))
            }
            other => Err(self.error(format!("unexpected {}", describe(other)))),
        }
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::Int(v) => format!("integer `{v}`"),
        Token::Ident(s) => format!("identifier `{s}`"),
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Caret => "`^`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
        Token::End => "end of input".into(),
    }
}

fn parse_line(
    text: &str,
    order: &VarOrder,
    line: usize,
    col_offset: usize,
) -> Result<Polynomial, ParseError> {
    let lexer = Lexer::tokenize(text, line, col_offset)?;
    let mut parser = Parser {
        tokens: lexer.tokens,
        pos: 0,
        line,
        order,
    };
    let p = parser.expr()?;
    parser.finish()?;
    Ok(p)
}

pub fn parse_polynomial(text: &str, order: &VarOrder) -> Result<Polynomial> {
    Ok(parse_line(text, order, 1, 0)?)
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut order: Option<VarOrder> = None;
    let mut name = None;
    let mut polys = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        last_line = line;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let offset = content.chars().count() - trimmed.chars().count();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let Some(ord) = &order else {
            let mut words = trimmed.split_whitespace();
            if words.next() != Some("vars") {
                return Err(err(line, offset + 1, "missing `vars` declaration").into());
            }
            let names: Vec<&str> = words.collect();
            if names.is_empty() {
                return Err(err(line, offset + 1, "`vars` declares no variables").into());
            }
            for (i, n) in names.iter().enumerate() {
                if !is_identifier(n) {
                    return Err(
                        err(line, offset + 1, format!("`{n}` is not a variable name")).into(),
                    );
                }
                if names[..i].contains(n) {
                    return Err(err(line, offset + 1, format!("duplicate variable `{n}`")).into());
                }
            }
            order = Some(VarOrder::new(names)?);
            continue;
        };
        if polys.is_empty() && name.is_none() {
            if let Some(rest) = trimmed.strip_prefix("name") {
                if rest.starts_with(char::is_whitespace) && ord.index_of("name").is_none() {
                    name = Some(rest.trim().to_string());
                    continue;
                }
            }
        }
        polys.push(parse_line(trimmed, ord, line, offset)?);
    }
    let order = order.ok_or_else(|| err(1, 1, "missing `vars` declaration"))?;
    if polys.is_empty() {
        return Err(err(last_line.max(1), 1, "system contains no polynomials").into());
    }
    Ok(SystemFile { order, polys, name })
}

fn write_monomial(out: &mut String, p: &Polynomial, exps: &[u32]) {
    let mut first = true;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(p.order().name(i));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

/// Renders terms from greatest to smallest monomial, greatest variable most
/// significant. Non-integer coefficients render as `n/d` which the parser
/// does not accept; normalized polynomials always round-trip.
pub fn render_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let a = c.abs();
        if m.is_one() {
            let _ = write!(out, "{a}");
            continue;
        }
        if !a.is_one() {
            let _ = write!(out, "{a}*");
        }
        write_monomial(&mut out, p, m.exponents());
    }
    out
}

pub fn render_system(sys: &SystemFile) -> String {
    let mut out = format!("vars {}\n", sys.order.names().join(" "));
    if let Some(name) = &sys.name {
        let _ = writeln!(out, "name {name}");
    }
    for p in &sys.polys {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn render_set(polys: &[Polynomial]) -> String {
    let items: Vec<String> = polys.iter().map(render_polynomial).collect();
    format!("{{{}}}", items.join(", "))
}

#[derive(Serialize)]
struct JsonComponent {
    dimension: i64,
    generators: Vec<String>,
    source_chain: Vec<String>,
    u_set: Vec<String>,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    vars: &'a [String],
    components: Vec<JsonComponent>,
}

/// Sorts components by dimension (descending), generator count, then first
/// generator.
pub fn sort_components(components: &mut [Component]) {
    components.sort_by_cached_key(|c| {
        (
            std::cmp::Reverse(c.dimension),
            c.generators.generators().len(),
            c.generators
                .generators()
                .first()
                .map(render_polynomial)
                .unwrap_or_default(),
            c.generators
                .generators()
                .iter()
                .map(render_polynomial)
                .collect::<Vec<_>>(),
            c.source_chain
                .polys()
                .iter()
                .map(render_polynomial)
                .collect::<Vec<_>>(),
        )
    });
}

pub fn emit_result(order: &VarOrder, components: &[Component], format: OutputFormat) -> String {
    let mut sorted = components.to_vec();
    sort_components(&mut sorted);
    let strings = |ps: &[Polynomial]| ps.iter().map(render_polynomial).collect::<Vec<_>>();
    match format {
        OutputFormat::Json => {
            let doc = JsonResult {
                vars: order.names(),
                components: sorted
                    .iter()
                    .map(|c| JsonComponent {
                        dimension: c.dimension,
                        generators: strings(c.generators.generators()),
                        source_chain: strings(c.source_chain.polys()),
                        u_set: strings(&c.u_set),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string(&doc).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut out = format!("vars {}\n", order.names().join(" "));
            let _ = writeln!(out, "components {}", sorted.len());
            for (i, c) in sorted.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "component {} dim={} method={}",
                    i + 1,
                    c.dimension,
                    c.method
                );
                let _ = writeln!(out, "  u_set: {}", render_set(&c.u_set));
                out.push_str("  source_chain:\n");
                for f in c.source_chain.polys() {
                    let _ = writeln!(out, "    {f}");
                }
                out.push_str("  generators:\n");
                for g in c.generators.generators() {
                    let _ = writeln!(out, "    {g}");
                }
            }
            out
        }
    }
}
