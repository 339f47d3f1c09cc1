//! Ring expressions such as `(xi*xi' - eta)*eta^2`.
//!
//! Precedence from loosest to tightest: `+ -`, `*`, unary `-`, `^`.
//! Exponents are non-negative integer literals.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::cohom::{Generator, RingElement, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {offset}: {message}")]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Int(BigInt),
    Symbol(Generator),
    Neg(Box<RingExpr>),
    Add(Box<RingExpr>, Box<RingExpr>),
    Sub(Box<RingExpr>, Box<RingExpr>),
    Mul(Box<RingExpr>, Box<RingExpr>),
    Pow(Box<RingExpr>, u32),
}

impl RingExpr {
    /// Evaluate in `H*(Sym^n X)`.
    pub fn eval(&self, n: u32) -> Result<RingElement, RingError> {
        Ok(match self {
            RingExpr::Int(k) => RingElement::constant(n, k.clone()),
            RingExpr::Symbol(g) => RingElement::generator(n, *g),
            RingExpr::Neg(a) => a.eval(n)?.neg(),
            RingExpr::Add(a, b) => a.eval(n)?.add(&b.eval(n)?)?,
            RingExpr::Sub(a, b) => a.eval(n)?.sub(&b.eval(n)?)?,
            RingExpr::Mul(a, b) => a.eval(n)?.mul(&b.eval(n)?)?,
            RingExpr::Pow(a, k) => a.eval(n)?.pow(*k),
        })
    }
}

fn symbol_name(g: Generator) -> &'static str {
    match g {
        Generator::One => "1",
        Generator::Xi => "xi",
        Generator::XiPrime => "xi'",
        Generator::Eta => "eta",
        Generator::Sigma => "sigma",
    }
}

impl fmt::Display for RingExpr {
    /// Fully parenthesised, so the output re-parses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Int(k) if k.sign() == num_bigint::Sign::Minus => write!(f, "(0 - {})", -k),
            RingExpr::Int(k) => write!(f, "{k}"),
            RingExpr::Symbol(g) => f.write_str(symbol_name(*g)),
            RingExpr::Neg(a) => write!(f, "(-{a})"),
            RingExpr::Add(a, b) => write!(f, "({a} + {b})"),
            RingExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            RingExpr::Mul(a, b) => write!(f, "({a}*{b})"),
            RingExpr::Pow(a, k) if matches!(**a, RingExpr::Pow(..)) => write!(f, "({a})^{k}"),
            RingExpr::Pow(a, k) => write!(f, "{a}^{k}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            offset,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<RingExpr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = RingExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = RingExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<RingExpr, ExprError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = RingExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<RingExpr, ExprError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(RingExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingExpr, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return self.fail(start, "exponent must be a non-negative integer");
        }
        match digits.parse::<u32>() {
            Ok(k) => Ok(RingExpr::Pow(Box::new(base), k)),
            Err(_) => self.fail(start, "exponent too large"),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn atom(&mut self) -> Result<RingExpr, ExprError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.src.get(self.pos).copied() {
            None => self.fail(start, "expected an operand, found end of input"),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.fail(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.digits().parse().expect("ascii digits");
                Ok(RingExpr::Int(k))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                if self.src.get(self.pos) == Some(&b'\'') {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]);
                let g = match name.as_ref() {
                    "xi" => Generator::Xi,
                    "xi'" => Generator::XiPrime,
                    "eta" => Generator::Eta,
                    "sigma" => Generator::Sigma,
                    other => return self.fail(start, format!("unknown symbol '{other}'")),
                };
                Ok(RingExpr::Symbol(g))
            }
            Some(c) => self.fail(start, format!("unexpected character '{}'", c as char)),
        }
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        let at = p.pos;
        return match p.src[at] {
            b')' => p.fail(at, "unbalanced ')'"),
            c => p.fail(at, format!("unexpected character '{}'", c as char)),
        };
    }
    Ok(e)
}
