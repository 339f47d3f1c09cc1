//! Text descriptors for bundles and twists.
//!
//! ```text
//! genus 0 bundle   O(2) + O(0) + O(-1)
//! genus 0 twist    -3
//! indecomposable   ind 3 1 @ 1/2,0
//! polystable       2*st 1 0 @ 0,0 + st 1 0 @ 1/3,0
//! direct sum       ind 2 1 @ 0,0 | ind 1 0 @ 0,0
//! twist            L 1 @ 1/4,1/2
//! ```
//!
//! Whitespace is ignored between tokens. Every printed descriptor parses
//! back to an equal value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::descriptor::{BundleError, EllipticBundle, GZeroBundle, Indecomposable};
use super::pic::{fmt_rational, PicPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("at offset {offset}: {source}")]
    Invalid { offset: usize, source: BundleError },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Invalid { offset, .. } => *offset,
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected '{token}'"))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.error("expected an integer");
        }
        self.pos = end;
        Ok(self.src[start..end].parse().expect("validated digits"))
    }

    fn small<T: TryFrom<BigInt>>(&mut self, what: &str) -> Result<T, ParseError> {
        let start = self.pos;
        let v = self.integer()?;
        T::try_from(v).or_else(|_| {
            Err(ParseError::Syntax {
                offset: start,
                message: format!("{what} out of range"),
            })
        })
    }

    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let num = self.integer()?;
        if self.eat("/") {
            let at = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(ParseError::Syntax {
                    offset: at,
                    message: "zero denominator".into(),
                });
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    /// `x,y` as a degree-0 Picard point.
    fn offset_pair(&mut self) -> Result<PicPoint, ParseError> {
        let x = self.rational()?;
        self.expect(",")?;
        let y = self.rational()?;
        Ok(PicPoint::new(0, x, y))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }
}

fn invalid(offset: usize) -> impl Fn(BundleError) -> ParseError {
    move |source| ParseError::Invalid { offset, source }
}

/// Parse `O(d1) + O(d2) + …`.
pub fn parse_gzero(text: &str) -> Result<GZeroBundle, ParseError> {
    let mut c = Cursor::new(text);
    let mut degrees = Vec::new();
    loop {
        c.expect("O")?;
        c.expect("(")?;
        degrees.push(c.small::<i64>("degree")?);
        c.expect(")")?;
        if !c.eat("+") {
            break;
        }
    }
    c.finish()?;
    GZeroBundle::new(degrees).map_err(invalid(0))
}

/// Parse a genus-0 twist, the integer `t` of `O(t)`.
pub fn parse_p1_twist(text: &str) -> Result<i64, ParseError> {
    let mut c = Cursor::new(text);
    let t = c.small::<i64>("twist degree")?;
    c.finish()?;
    Ok(t)
}

/// Parse `L deg @ x,y`.
pub fn parse_twist(text: &str) -> Result<PicPoint, ParseError> {
    let mut c = Cursor::new(text);
    c.expect("L")?;
    let degree = c.small::<i64>("degree")?;
    c.expect("@")?;
    let offset = c.offset_pair()?;
    c.finish()?;
    Ok(offset.add(&PicPoint::base(degree)))
}

/// `r d @ x,y`, shared by `ind` and `st`.
fn summand(c: &mut Cursor<'_>) -> Result<Indecomposable, ParseError> {
    let at = c.pos;
    let r = c.small::<u32>("rank")?;
    let d = c.small::<i64>("degree")?;
    c.expect("@")?;
    let twist = c.offset_pair()?;
    Indecomposable::new(r, d, twist).map_err(invalid(at))
}

fn part(c: &mut Cursor<'_>) -> Result<EllipticBundle, ParseError> {
    let at = {
        c.skip_ws();
        c.pos
    };
    if c.eat("ind") {
        return Ok(EllipticBundle::Indecomposable(summand(c)?));
    }
    let mut summands = Vec::new();
    loop {
        let count = if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            let n = c.small::<u32>("multiplicity")?;
            if n == 0 {
                return c.error("multiplicity must be positive");
            }
            c.expect("*")?;
            n
        } else {
            1
        };
        c.expect("st")?;
        let s = summand(c)?;
        summands.extend(std::iter::repeat_n(s, count as usize));
        if !c.eat("+") {
            break;
        }
    }
    EllipticBundle::polystable(summands).map_err(invalid(at))
}

/// Parse a genus-1 descriptor.
pub fn parse_elliptic(text: &str) -> Result<EllipticBundle, ParseError> {
    let mut c = Cursor::new(text);
    let mut parts = vec![part(&mut c)?];
    while c.eat("|") {
        parts.push(part(&mut c)?);
    }
    c.finish()?;
    EllipticBundle::direct_sum(parts).map_err(invalid(0))
}

fn write_offset(f: &mut fmt::Formatter<'_>, p: &PicPoint) -> fmt::Result {
    let (x, y) = p.offset();
    write!(f, "{},{}", fmt_rational(x), fmt_rational(y))
}

impl fmt::Display for GZeroBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.degrees().iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "O({d})")?;
        }
        Ok(())
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ind {} {} @ ", self.rank(), self.degree())?;
        write_offset(f, self.twist())
    }
}

impl fmt::Display for EllipticBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticBundle::Indecomposable(e) => write!(f, "{e}"),
            EllipticBundle::Polystable(summands) => {
                // Sorted storage puts equal summands next to each other.
                let mut first = true;
                for group in summands.chunk_by(|a, b| a == b) {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    first = false;
                    if group.len() > 1 {
                        write!(f, "{}*", group.len())?;
                    }
                    let s = &group[0];
                    write!(f, "st {} {} @ ", s.rank(), s.degree())?;
                    write_offset(f, s.twist())?;
                }
                Ok(())
            }
            EllipticBundle::DirectSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero() {
        let e = parse_gzero(" O(0)+O( 2 ) + O(-1)").unwrap();
        assert_eq!(e.degrees(), &[2, 0, -1]);
        assert_eq!(e.to_string(), "O(2) + O(0) + O(-1)");
        assert_eq!(parse_gzero(&e.to_string()).unwrap(), e);
        assert_eq!(parse_p1_twist(" -3 ").unwrap(), -3);
        assert_eq!(parse_gzero("O(1)+").unwrap_err().offset(), 5);
    }

    #[test]
    fn twists() {
        let l = parse_twist("L -1 @ 3/2, -1/3").unwrap();
        assert_eq!(l, PicPoint::from_ratios(-1, (1, 2), (2, 3)));
        assert_eq!(l.to_string(), "L -1 @ 1/2,2/3");
        assert_eq!(parse_twist(&l.to_string()).unwrap(), l);
        assert!(parse_twist("L 1 @ 1/0,0").is_err());
    }

    #[test]
    fn elliptic_descriptors() {
        let e = parse_elliptic("ind 3 0 @ 0,0").unwrap();
        assert_eq!(e, EllipticBundle::indecomposable(3, 0, PicPoint::trivial()).unwrap());

        let p = parse_elliptic("2*st 1 0 @ 0,0 + st 1 0 @ 1/3,0").unwrap();
        assert_eq!(p.indecomposable_parts().len(), 3);
        assert_eq!(p.to_string(), "2*st 1 0 @ 0,0 + st 1 0 @ 1/3,0");

        let s = parse_elliptic("ind 2 1 @ 0,0 | st 1 0 @ 0,1/2 | ind 4 2 @ 1/4,0").unwrap();
        assert_eq!(s.rank(), 7);
        assert_eq!(parse_elliptic(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_elliptic("ind 3 0 0,0").unwrap_err().offset(), 8);
        assert!(matches!(
            parse_elliptic("st 2 2 @ 0,0"),
            Err(ParseError::Invalid {
                source: BundleError::NotCoprime { r: 2, d: 2 },
                ..
            })
        ));
        assert!(matches!(
            parse_elliptic("ind 0 1 @ 0,0"),
            Err(ParseError::Invalid { source: BundleError::ZeroRank, .. })
        ));
        assert_eq!(parse_elliptic("ind 1 0 @ 0,0 extra").unwrap_err().offset(), 14);
    }
}
