//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := sign? term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `x y`) is rejected rather than read as a product.

use super::monomial::MAX_EXPONENT;
use super::{Polynomial, Ring};
use crate::error::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    /// Integer literal, already reduced mod p, plus its exact value when it fits.
    Int {
        reduced: u32,
        exact: Option<u64>,
    },
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int { exact: Some(v), .. } => v.to_string(),
            Token::Int { .. } => "integer".into(),
            Token::Ident(s) => s.clone(),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Caret => "^".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Token::Int { .. } | Token::Ident(_) | Token::LParen)
    }
}

fn tokenize(text: &str, p: u64) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Token::Plus, start)),
            b'-' => out.push((Token::Minus, start)),
            b'*' => out.push((Token::Star, start)),
            b'^' => out.push((Token::Caret, start)),
            b'(' => out.push((Token::LParen, start)),
            b')' => out.push((Token::RParen, start)),
            b'0'..=b'9' => {
                let mut reduced = 0u64;
                let mut exact = Some(0u64);
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    let digit = (bytes[i] - b'0') as u64;
                    reduced = (reduced * 10 + digit) % p;
                    exact = exact.and_then(|v| v.checked_mul(10)).and_then(|v| v.checked_add(digit));
                    i += 1;
                }
                out.push((Token::Int { reduced: reduced as u32, exact }, start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError { position: start, kind: ParseErrorKind::UnexpectedChar(ch) });
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.offset(), kind }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => self.error(ParseErrorKind::UnexpectedEnd),
            Some(t) => self.error(ParseErrorKind::UnexpectedToken(t.describe())),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Plus) => self.pos += 1,
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = acc.try_mul(&f).map_err(|_| self.error(ParseErrorKind::ExponentOverflow))?;
                }
                Some(t) if t.starts_atom() => {
                    return Err(self.error(ParseErrorKind::ImplicitMultiplication));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            let e = match self.peek() {
                Some(Token::Int { exact, .. }) => *exact,
                _ => return Err(self.unexpected()),
            };
            let e = match e {
                Some(e) if e <= MAX_EXPONENT => e,
                _ => return Err(ParseError { position: at, kind: ParseErrorKind::ExponentOverflow }),
            };
            self.pos += 1;
            return base.pow(e).map_err(|_| ParseError { position: at, kind: ParseErrorKind::ExponentOverflow });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Token::Int { reduced, .. }) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, reduced as i64))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i).expect("index from lookup")),
                    None => Err(ParseError { position: offset, kind: ParseErrorKind::UnknownVariable(name) }),
                }
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.unexpected()),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

pub(crate) fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text, ring.characteristic() as u64)?;
    let mut parser = Parser { tokens, pos: 0, end: text.len(), ring };
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let tok = parser.peek().expect("in range");
        if tok.starts_atom() {
            return Err(parser.error(ParseErrorKind::ImplicitMultiplication));
        }
        return Err(parser.unexpected());
    }
    Ok(poly)
}
