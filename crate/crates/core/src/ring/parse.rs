//! Text grammars: ring descriptors (`Z/12`, `GF(4)`, `GF(2,2)`, `Z/2 x Z/3`,
//! `M(2, Z/2)`), element literals, and sweep families (`Z/2..60`, comma lists).
//!
//! Whitespace is insignificant everywhere.

use std::fmt;

use super::RingDescriptor;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i128),
    Ident(String),
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Times,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: i128 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as i128))
                        .ok_or_else(|| Error::Parse(format!("integer too large in {s:?}")))?;
                    chars.next();
                }
                out.push(Token::Int(v));
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            ',' => {
                chars.next();
                out.push(Token::Comma);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '[' => {
                chars.next();
                out.push(Token::LBracket);
            }
            ']' => {
                chars.next();
                out.push(Token::RBracket);
            }
            '×' | '*' => {
                chars.next();
                out.push(Token::Times);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            'x' | 'Z' | 'M' => {
                chars.next();
                out.push(match c {
                    'x' => Token::Times,
                    _ => Token::Ident(c.to_string()),
                });
            }
            'G' => {
                chars.next();
                if chars.next() != Some('F') {
                    return Err(Error::Parse(format!("expected GF in {s:?}")));
                }
                out.push(Token::Ident("GF".into()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    source: &'a str,
}

impl<'a> Parser<'a> {
    fn new(source: &'a str) -> Result<Self> {
        Ok(Parser { tokens: tokenize(source)?, pos: 0, source })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in {:?}", self.source))
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        if self.next() == Some(t.clone()) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {t:?}")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.next() {
            Some(Token::Int(v)) => u64::try_from(v).map_err(|_| self.error("integer out of range")),
            _ => Err(self.error("expected an integer")),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }

    fn product(&mut self) -> Result<RingDescriptor> {
        let mut parts = vec![self.atom()?];
        while self.peek() == Some(&Token::Times) {
            self.next();
            parts.push(self.atom()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            RingDescriptor::product(parts)
        }
    }

    fn atom(&mut self) -> Result<RingDescriptor> {
        match self.next() {
            Some(Token::Ident(id)) if id == "Z" => {
                self.expect(Token::Slash)?;
                RingDescriptor::zmod(self.int()?)
            }
            Some(Token::Ident(id)) if id == "GF" => {
                self.expect(Token::LParen)?;
                let first = self.int()?;
                let ring = if self.peek() == Some(&Token::Comma) {
                    self.next();
                    let k = u32::try_from(self.int()?).map_err(|_| self.error("degree too large"))?;
                    RingDescriptor::galois_field(first, k)?
                } else {
                    RingDescriptor::galois_field_of_order(first)?
                };
                self.expect(Token::RParen)?;
                Ok(ring)
            }
            Some(Token::Ident(id)) if id == "M" => {
                self.expect(Token::LParen)?;
                let size = usize::try_from(self.int()?).map_err(|_| self.error("size too large"))?;
                self.expect(Token::Comma)?;
                let base = self.product()?;
                self.expect(Token::RParen)?;
                RingDescriptor::matrix_ring(base, size)
            }
            Some(Token::LParen) => {
                let inner = self.product()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            _ => Err(self.error("expected Z/n, GF(q), M(k, R) or a parenthesized ring")),
        }
    }

    fn literal(&mut self) -> Result<Literal> {
        match self.next() {
            Some(Token::Int(v)) => Ok(Literal::Int(v)),
            Some(Token::Minus) => match self.next() {
                Some(Token::Int(v)) => Ok(Literal::Int(-v)),
                _ => Err(self.error("expected an integer after '-'")),
            },
            Some(Token::LParen) => Ok(Literal::Tuple(self.sequence(Token::RParen)?)),
            Some(Token::LBracket) => Ok(Literal::List(self.sequence(Token::RBracket)?)),
            _ => Err(self.error("expected an element literal")),
        }
    }

    fn sequence(&mut self, close: Token) -> Result<Vec<Literal>> {
        let mut items = Vec::new();
        if self.peek() == Some(&close) {
            self.next();
            return Ok(items);
        }
        loop {
            items.push(self.literal()?);
            match self.next() {
                Some(Token::Comma) => continue,
                Some(t) if t == close => return Ok(items),
                _ => return Err(self.error("expected ',' or a closing delimiter")),
            }
        }
    }
}

pub fn parse_descriptor(s: &str) -> Result<RingDescriptor> {
    let mut p = Parser::new(s)?;
    let ring = p.product()?;
    p.finish()?;
    Ok(ring)
}

/// Untyped element literal: integers, `(..)` tuples and `[..]` lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Int(i128),
    Tuple(Vec<Literal>),
    List(Vec<Literal>),
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, items: &[Literal]| -> fmt::Result {
            for (i, it) in items.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{it}")?;
            }
            Ok(())
        };
        match self {
            Literal::Int(v) => write!(f, "{v}"),
            Literal::Tuple(items) => {
                write!(f, "(")?;
                join(f, items)?;
                write!(f, ")")
            }
            Literal::List(items) => {
                write!(f, "[")?;
                join(f, items)?;
                write!(f, "]")
            }
        }
    }
}

pub fn parse_literal(s: &str) -> Result<Literal> {
    let mut p = Parser::new(s)?;
    let lit = p.literal()?;
    p.finish()?;
    Ok(lit)
}

/// Splits `s` on commas that are not nested inside parentheses or brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Expands the first `a..b` range in `item` (inclusive), recursively.
/// Largest family [`parse_family`] will expand.
pub const MAX_FAMILY_SIZE: usize = 1 << 16;

fn expand_ranges(item: &str) -> Result<Vec<String>> {
    let Some(dots) = item.find("..") else {
        return Ok(vec![item.to_string()]);
    };
    let before = &item[..dots];
    let after = &item[dots + 2..];
    let lo_start = before
        .rfind(|c: char| !c.is_ascii_digit())
        .map_or(0, |i| i + 1);
    let hi_len = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
    let lo: u64 = before[lo_start..]
        .parse()
        .map_err(|_| Error::Parse(format!("malformed range in {item:?}")))?;
    let hi: u64 = after[..hi_len]
        .parse()
        .map_err(|_| Error::Parse(format!("malformed range in {item:?}")))?;
    if hi < lo {
        return Err(Error::Parse(format!("empty range {lo}..{hi} in {item:?}")));
    }
    if hi - lo >= MAX_FAMILY_SIZE as u64 {
        return Err(Error::Parse(format!("range {lo}..{hi} has more than {MAX_FAMILY_SIZE} values")));
    }
    let mut out = Vec::new();
    for v in lo..=hi {
        let candidate = format!("{}{v}{}", &before[..lo_start], &after[hi_len..]);
        out.extend(expand_ranges(&candidate)?);
    }
    Ok(out)
}

/// Parses a sweep family: a comma-separated list of descriptors in which any integer
/// may be an inclusive range `a..b`. An empty or blank string is the empty family.
pub fn parse_family(s: &str) -> Result<Vec<RingDescriptor>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    for item in split_top_level(&compact) {
        if item.is_empty() {
            return Err(Error::Parse(format!("empty item in family {s:?}")));
        }
        for expanded in expand_ranges(item)? {
            if out.len() == MAX_FAMILY_SIZE {
                return Err(Error::Parse(format!("family has more than {MAX_FAMILY_SIZE} rings")));
            }
            out.push(parse_descriptor(&expanded)?);
        }
    }
    Ok(out)
}
