//! Recursive-descent parser for rational expressions in q.
//!
//! Accepts the canonical rendering (`q^5 + q^4 - 3q^-1`, `q^(1/4)`,
//! `(num)/(den)`) plus `*`, `/`, parentheses, implicit multiplication and
//! integer powers of parenthesized expressions.

use num_bigint::BigInt;

use super::laurent::Exponent;
use super::scalar::Scalar;
use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

fn err(msg: impl Into<String>, src: &str) -> Error {
    Error::Parse {
        line: 0,
        msg: format!("{} in scalar {:?}", msg.into(), src),
    }
}

pub(crate) fn parse_scalar(src: &str) -> Result<Scalar> {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
    };
    let v = p.expr().map_err(|m| err(m, src))?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(err(format!("trailing input at byte {}", p.pos), src));
    }
    Ok(v)
}

type PResult<T> = std::result::Result<T, String>;

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> PResult<Scalar> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<Scalar> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.div(&d).map_err(|e| e.to_string())?;
                }
                Some(c) if c == b'q' || c == b'(' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> PResult<Scalar> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                let e = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    Exponent::from_integer(1)
                };
                Ok(Scalar::q_pow(e))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err("expected ')'".into());
                }
                if self.eat(b'^') {
                    let e = self.exponent()?;
                    if !e.is_integer() {
                        return Err("fractional power of a compound expression".into());
                    }
                    return v.pow(e.to_integer()).map_err(|e| e.to_string());
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::from(super::LaurentPoly::constant(n)))
            }
            other => Err(format!("unexpected {:?}", other.map(|c| c as char))),
        }
    }

    fn integer(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err("expected integer".into());
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        t.parse().map_err(|_| "bad integer".to_string())
    }

    fn small_int(&mut self) -> PResult<i64> {
        let neg = self.eat(b'-');
        let n: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| "exponent out of range".to_string())?;
        Ok(if neg { -n } else { n })
    }

    fn exponent(&mut self) -> PResult<Exponent> {
        if self.eat(b'(') {
            let n = self.small_int()?;
            let d = if self.eat(b'/') { self.small_int()? } else { 1 };
            if d <= 0 {
                return Err("exponent denominator must be positive".into());
            }
            if !self.eat(b')') {
                return Err("expected ')' in exponent".into());
            }
            Ok(Exponent::new(n, d))
        } else {
            Ok(Exponent::from_integer(self.small_int()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_forms() {
        for t in [
            "q^5 + q^4 + q + 1 + q^-1 + q^-4 + q^-5",
            "-q^3 - q^2 - q - q^-1 - q^-2 - q^-3",
            "-q^(1/2) - q^(-1/2)",
            "(q^2)/(q + 1)",
            "(1)/(2q - 2)",
            "0",
            "3q^2 - 7",
        ] {
            assert_eq!(parse_scalar(t).unwrap().to_string(), t);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("q^").is_err());
        assert!(parse_scalar("1/(q-q)").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("(q+1").is_err());
    }
}
