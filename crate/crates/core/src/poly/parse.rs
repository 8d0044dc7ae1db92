//! Parser for the polynomial input grammar.
//!
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*'? varpow)* | varpow ('*'? varpow)*
//! varpow := name ('^' uint)?
//! coeff  := int ('/' uint)?
//!
//! Whitespace is insignificant. Variable names are the caller's declared
//! list; anything else is an error with a byte position.

use super::{Monomial, Poly, Vars};
use crate::field::{Rat, Scalar};
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError { pos: start, msg: "expected a number".into() });
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse::<BigInt>().unwrap())
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError { pos: start, msg: "expected a variable name".into() });
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string())
    }
}

pub fn parse_poly<K: Scalar>(text: &str, vars: &Vars) -> Result<Poly<K>, ParseError> {
    let mut lx = Lexer::new(text);
    let mut out = Poly::zero(vars);
    let mut sign = Rat::one();
    if lx.eat(b'-') {
        sign = -sign;
    } else {
        lx.eat(b'+');
    }
    loop {
        let (m, c) = parse_term(&mut lx, vars)?;
        out.add_term(m, K::from_rat(&(c * &sign)));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.bump();
                sign = Rat::one();
            }
            Some(b'-') => {
                lx.bump();
                sign = -Rat::one();
            }
            Some(c) => {
                return Err(ParseError {
                    pos: lx.pos,
                    msg: format!("unexpected character '{}'", c as char),
                })
            }
        }
    }
    Ok(out)
}

fn parse_term(lx: &mut Lexer, vars: &Vars) -> Result<(Monomial, Rat), ParseError> {
    let mut coeff = Rat::one();
    let mut mono = Monomial::constant(vars.len());
    let mut saw_factor = false;

    // optional leading coefficient
    if let Some(c) = lx.peek() {
        if c.is_ascii_digit() {
            let n = lx.uint()?;
            let d = if lx.eat(b'/') { lx.uint()? } else { BigInt::one() };
            if d == BigInt::from(0) {
                return Err(ParseError { pos: lx.pos, msg: "zero denominator".into() });
            }
            coeff = Rat::new(n, d);
            saw_factor = true;
        }
    }

    loop {
        // optional '*' between factors
        let starred = lx.eat(b'*');
        match lx.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let pos = lx.pos;
                let name = lx.ident()?;
                let Some(i) = vars.index(&name) else {
                    return Err(ParseError { pos, msg: format!("unknown variable '{}'", name) });
                };
                let e = if lx.eat(b'^') {
                    let n = lx.uint()?;
                    u32::try_from(&n).map_err(|_| ParseError {
                        pos: lx.pos,
                        msg: "exponent too large".into(),
                    })?
                } else {
                    1
                };
                mono.0[i] += e;
                saw_factor = true;
            }
            Some(c) if c.is_ascii_digit() && starred => {
                // e.g. "x*2" is not in the grammar, but "2*3" never appears;
                // reject to keep the canonical print parseable.
                return Err(ParseError { pos: lx.pos, msg: "coefficient must lead the term".into() });
            }
            _ => {
                if starred {
                    return Err(ParseError { pos: lx.pos, msg: "dangling '*'".into() });
                }
                break;
            }
        }
    }

    if !saw_factor {
        return Err(ParseError { pos: lx.pos, msg: "expected a term".into() });
    }
    Ok((mono, coeff))
}

/// Parse a standalone rational like "-3/4" or "2".
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let mut lx = Lexer::new(text.trim());
    let neg = lx.eat(b'-');
    let n = lx.uint()?;
    let d = if lx.eat(b'/') { lx.uint()? } else { BigInt::one() };
    if d == BigInt::from(0) {
        return Err(ParseError { pos: lx.pos, msg: "zero denominator".into() });
    }
    lx.skip_ws();
    if lx.pos != lx.s.len() {
        return Err(ParseError { pos: lx.pos, msg: "trailing input".into() });
    }
    let r = Rat::new(n, d);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rint;

    #[test]
    fn two_term_sextic() {
        let v = Vars::zzz();
        let f: Poly = parse_poly("z0^6 - z1^2*z2^2*z0^2", &v).unwrap();
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn zero_literal() {
        let v = Vars::zzz();
        let f: Poly = parse_poly("0", &v).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn a2_germ_four_terms() {
        let v = Vars::stxy();
        let f: Poly = parse_poly("y^2 - x^3 - t^2 - s^3", &v).unwrap();
        assert_eq!(f.num_terms(), 4);
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let v = Vars::zzz();
        let e = parse_poly::<crate::field::Rat>("z0 + q", &v).unwrap_err();
        assert!(e.msg.contains("unknown variable"));
    }

    #[test]
    fn syntax_error_has_position() {
        let v = Vars::zzz();
        let e = parse_poly::<crate::field::Rat>("z0 + + z1", &v).unwrap_err();
        assert!(e.pos >= 4);
    }

    #[test]
    fn implicit_star_and_fractions() {
        let v = Vars::zzz();
        let f: Poly = parse_poly("3/2 z0 z1^2 - z2", &v).unwrap();
        let g: Poly = parse_poly("3/2*z0*z1^2 - z2", &v).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_rat("-5/10").unwrap(), crate::field::rat(-1, 2));
        assert_eq!(parse_rat("4").unwrap(), rint(4));
    }
}
