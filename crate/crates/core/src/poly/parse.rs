use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::{Family, LaurentPoly, Monomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

/// Parses the canonical rendering back, and more loosely any sum of
/// `*`-separated products of integers and `var^exp` factors.
impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<LaurentPoly, ParsePolyError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let poly = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParsePolyError {
        ParsePolyError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<LaurentPoly, ParsePolyError> {
        let mut out = LaurentPoly::zero();
        let mut negate = false;
        if let Some(c @ (b'-' | b'+')) = self.peek() {
            negate = c == b'-';
            self.pos += 1;
        }
        loop {
            let (mut c, m) = self.product()?;
            if negate {
                c = -c;
            }
            out.add_term(m, c);
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<(BigInt, Monomial), ParsePolyError> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => coeff *= self.integer()?,
                Some(b) if b.is_ascii_alphabetic() => {
                    let v = self.variable()?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.signed_exponent()?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::power(v, e));
                }
                _ => return Err(self.err("expected a number or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, mono));
            }
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn integer(&mut self) -> Result<BigInt, ParsePolyError> {
        let d = self.digits();
        d.parse().map_err(|_| self.err("bad integer"))
    }

    fn signed_exponent(&mut self) -> Result<i32, ParsePolyError> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let d = self.digits();
        let e: i32 = d.parse().map_err(|_| self.err("bad exponent"))?;
        Ok(if neg { -e } else { e })
    }

    fn variable(&mut self) -> Result<VarId, ParsePolyError> {
        let start = self.pos;
        let sym = (self.src[self.pos] as char).to_string();
        self.pos += 1;
        let family = Family::from_symbol(&sym).ok_or_else(|| ParsePolyError {
            pos: start,
            msg: format!("unknown variable `{sym}`"),
        })?;
        let index = if family.is_indexed() {
            let d = self.digits();
            if d.is_empty() {
                None
            } else {
                Some(d.parse().map_err(|_| self.err("bad variable index"))?)
            }
        } else {
            None
        };
        if self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric())
        {
            return Err(self.err("unexpected character after variable"));
        }
        Ok(VarId::new(family, index).expect("index only parsed for indexed families"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        let f: LaurentPoly = "1 + 2*q^-1*v0".parse().unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "1 + 2*q^-1*v0");
        let g: LaurentPoly = "-1 + x - 12*a*b^3".parse().unwrap();
        assert_eq!(g.to_string(), "-1 + x - 12*a*b^3");
    }

    #[test]
    fn shared_and_indexed_v() {
        let f: LaurentPoly = "v + v10*u".parse().unwrap();
        assert!(f.variables().contains(&VarId::V));
        assert!(f.variables().contains(&VarId::v(10)));
        assert!(f.variables().contains(&VarId::U));
    }

    #[test]
    fn rejects_garbage() {
        assert!("x +".parse::<LaurentPoly>().is_err());
        assert!("z".parse::<LaurentPoly>().is_err());
        assert!("x y".parse::<LaurentPoly>().is_err());
        assert!("xy".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }
}
