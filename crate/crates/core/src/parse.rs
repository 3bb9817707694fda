//! Polynomial text input.
//!
//! Two forms are accepted:
//!
//! * an ascending coefficient list, separated by commas and/or whitespace,
//!   e.g. `1, 0, 1` or `-6 11 -6 1`;
//! * an expression in `x` with integer and rational literals (`a/b`) and the
//!   operators `+ - * ^` plus parentheses, e.g. `x^3-6*x^2+11*x-6`.
//!   Implicit multiplication (`2x`) is rejected.
//!
//! Text containing a comma is a list. Otherwise, text made of two or more
//! whitespace-separated rational literals is a list; anything else is an
//! expression. A single literal such as `5` reads the same either way.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::ParseError;
use crate::poly::Poly;
use crate::rational::{parse_rational, Rational};

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseError::Empty);
    }
    if trimmed.contains(',') {
        return parse_coeff_list(text);
    }
    let words: Vec<&str> = trimmed.split_whitespace().collect();
    if words.len() > 1 && words.iter().all(|w| parse_rational(w).is_some()) {
        return parse_coeff_list(text);
    }
    parse_expression(text)
}

/// Ascending coefficient list, separated by commas or whitespace.
pub fn parse_coeff_list(text: &str) -> Result<Poly, ParseError> {
    let mut coeffs = Vec::new();
    let mut pos = 0;
    for piece in text.split([',', ' ', '\t', '\n', '\r']) {
        let start = pos;
        pos += piece.len() + 1;
        if piece.is_empty() {
            continue;
        }
        let q = parse_rational(piece).ok_or_else(|| ParseError::Syntax {
            pos: start,
            msg: format!("invalid coefficient '{piece}'"),
        })?;
        coeffs.push(q);
    }
    if coeffs.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(Poly::new(coeffs))
}

pub fn parse_expression(text: &str) -> Result<Poly, ParseError> {
    let mut p = ExprParser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(ParseError::Empty);
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax(format!("unexpected '{}'", p.peek_char())));
    }
    Ok(out)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.syntax("implicit multiplication is not supported; use '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := ('+' | '-') unary | power
    fn unary(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    // power := atom ('^' exponent)?
    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let exp_pos = self.pos;
        match self.peek() {
            Some(b'-') => return Err(ParseError::NegativeExponent { pos: exp_pos }),
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let digits = self.digits().to_string();
        if digits.is_empty() {
            return Err(self.syntax("expected exponent"));
        }
        let e: u32 = digits
            .parse::<BigInt>()
            .ok()
            .and_then(|v| v.to_u32())
            .filter(|&v| v <= 10_000)
            .ok_or(ParseError::Syntax {
                pos: exp_pos,
                msg: "exponent too large".into(),
            })?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            return Err(self.syntax("chained '^' is ambiguous; use parentheses"));
        }
        Ok(base.pow(e))
    }

    // atom := integer ('/' integer)? | 'x' | '(' expr ')'
    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().to_string();
                let mut text = num.clone();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.digits().to_string();
                    if den.is_empty() {
                        return Err(self.syntax("expected denominator after '/'"));
                    }
                    text = format!("{num}/{den}");
                }
                let q: Rational = parse_rational(&text).ok_or(ParseError::Syntax {
                    pos: start,
                    msg: format!("invalid number '{text}'"),
                })?;
                if q.is_zero() {
                    return Ok(Poly::zero());
                }
                Ok(Poly::constant(q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let ident = self.ident().to_string();
                if ident == "x" {
                    Ok(Poly::x())
                } else {
                    Err(ParseError::MultipleVariables {
                        pos: start,
                        name: ident.to_string(),
                    })
                }
            }
            Some(_) => Err(self.syntax(format!("unexpected '{}'", self.peek_char()))),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }
}
