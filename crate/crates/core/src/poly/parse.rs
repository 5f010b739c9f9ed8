use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::IntLaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad polynomial at byte {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> ParsePolyError {
        ParsePolyError { pos: self.pos, msg: msg.to_string() }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn exponent(&mut self) -> Result<i64, ParsePolyError> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let e = i64::try_from(d).map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }
}

/// Grammar: terms `[coef][*]t[^e]` or `coef`, joined by `+`/`-`.
impl FromStr for IntLaurentPoly {
    type Err = ParsePolyError;

    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer { s: src.as_bytes(), pos: 0 };
        let mut out = IntLaurentPoly::zero();
        let mut first = true;
        loop {
            let sign = match lx.peek() {
                None if first => return Err(lx.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    lx.pos += 1;
                    1
                }
                Some(b'-') => {
                    lx.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return Err(lx.err("expected '+' or '-'")),
            };
            first = false;
            let coef = lx.digits();
            let mut exp = 0;
            let has_star = if lx.peek() == Some(b'*') {
                lx.pos += 1;
                true
            } else {
                false
            };
            if lx.peek() == Some(b't') {
                lx.pos += 1;
                exp = 1;
                if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    exp = lx.exponent()?;
                }
            } else if has_star || coef.is_none() {
                return Err(lx.err("expected 't'"));
            }
            let c = coef.unwrap_or_else(|| BigInt::from(1)) * sign;
            out.add_term(exp, c);
        }
        Ok(out)
    }
}
