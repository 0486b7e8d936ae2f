//! Text syntax for eta-quotients.
//!
//! ```text
//! expr     := term (('*' | '/') term)*
//! term     := atom ('^' exponent)?
//! atom     := 'eta' '(' 'q' ('^' int)? ')'
//!           | ('cbrt' | 'sqrt') '(' expr ')'
//!           | '(' expr ')' | '1' | tuple
//! exponent := int | '-' int | '(' '-'? int ('/' int)? ')'
//! tuple    := '[' int ',' int ',' int ',' int ']' '@' ('6' | '8' | '(' int ',' int ',' int ',' int ')')
//! ```
//!
//! A tuple stands for the cube root of the quotient with those exponents
//! over the given bases, so `[8,-12,22,0]@8` and
//! `cbrt(eta(q)^8*eta(q^4)^22/eta(q^2)^12)` parse to the same value.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::eta::{EtaQuotient, TupleSpec, BASES_6, BASES_8};

/// Parses an eta-quotient expression (or a bare tuple).
pub fn parse_quotient(input: &str) -> Result<EtaQuotient> {
    let mut p = Parser::new(input);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses tuple syntax `[m,n,r,s]@8`, `[m,n,r,s]@6` or `[m,n,r,s]@(a,b,c,d)`.
pub fn parse_tuple(input: &str) -> Result<TupleSpec> {
    let mut p = Parser::new(input);
    let t = p.tuple()?;
    p.finish()?;
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn int(&mut self) -> Result<i64> {
        if self.eat(b'-') {
            Ok(-self.uint()?)
        } else {
            self.uint()
        }
    }

    fn expr(&mut self) -> Result<EtaQuotient> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'*') {
                acc = acc.combine(&self.term()?);
            } else if self.eat(b'/') {
                acc = acc.combine(&self.term()?.inverse());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<EtaQuotient> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.exponent()?;
            Ok(base.scale(k))
        } else {
            Ok(base)
        }
    }

    fn exponent(&mut self) -> Result<Rational64> {
        if self.eat(b'(') {
            let num = self.int()?;
            let den = if self.eat(b'/') { self.uint()? } else { 1 };
            if den == 0 {
                return self.err("zero denominator in exponent");
            }
            self.expect(b')')?;
            Ok(Rational64::new(num, den))
        } else {
            Ok(Rational64::from_integer(self.int()?))
        }
    }

    fn atom(&mut self) -> Result<EtaQuotient> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => Ok(self.tuple()?.to_eta()),
            Some(b'1') => {
                self.pos += 1;
                Ok(EtaQuotient::one())
            }
            _ if self.keyword("eta") => {
                self.expect(b'(')?;
                if !self.keyword("q") {
                    return self.err("expected `q`");
                }
                let delta = if self.eat(b'^') { self.uint()? } else { 1 };
                if delta == 0 {
                    return self.err("eta scale must be positive");
                }
                self.expect(b')')?;
                Ok(EtaQuotient::from_ints(&[(delta as u64, 1)]))
            }
            _ if self.keyword("cbrt") => self.root_call(3),
            _ if self.keyword("sqrt") => self.root_call(2),
            _ => self.err("expected `eta(...)`, `cbrt(...)`, `sqrt(...)`, `(`, `1` or a tuple"),
        }
    }

    fn root_call(&mut self, n: i64) -> Result<EtaQuotient> {
        self.expect(b'(')?;
        let e = self.expr()?;
        self.expect(b')')?;
        Ok(e.scale(Rational64::new(1, n)))
    }

    fn four(&mut self, open: u8, close: u8) -> Result<[i64; 4]> {
        self.expect(open)?;
        let mut out = [0; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(b',')?;
            }
            *slot = self.int()?;
        }
        self.expect(close)?;
        Ok(out)
    }

    fn tuple(&mut self) -> Result<TupleSpec> {
        let exponents = self.four(b'[', b']')?;
        self.expect(b'@')?;
        let bases = if self.peek() == Some(b'(') {
            let b = self.four(b'(', b')')?;
            if b.iter().any(|&x| x <= 0) {
                return self.err("bases must be positive");
            }
            b.map(|x| x as u64)
        } else {
            match self.uint()? {
                6 => BASES_6,
                8 => BASES_8,
                _ => return self.err("base shorthand must be 6 or 8"),
            }
        };
        Ok(TupleSpec {
            bases,
            exponents,
            root: 3,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_two_ways() {
        let a = parse_quotient("cbrt(eta(q)^8*eta(q^4)^22/eta(q^2)^12)").unwrap();
        let b = parse_quotient("[8,-12,22,0]@8").unwrap();
        let c = parse_quotient("eta(q)^(8/3) * eta(q^2)^-4 * eta(q^4)^(22/3)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn nested_denominator() {
        let e = parse_quotient("eta(q^2)^6/(eta(q)^4*eta(q^4)^2)").unwrap();
        assert_eq!(e, EtaQuotient::from_ints(&[(1, -4), (2, 6), (4, -2)]));
        assert_eq!(parse_quotient(" 1 ").unwrap(), EtaQuotient::one());
    }

    #[test]
    fn tuple_forms() {
        assert_eq!(parse_tuple("[-8, 13, 8, 5]@6").unwrap().bases, BASES_6);
        let t = parse_tuple("[1,2,3,12]@(1,3,9,27)").unwrap();
        assert_eq!(t.bases, [1, 3, 9, 27]);
        assert!(parse_tuple("[1,2,3]@8").is_err());
        assert!(parse_tuple("[1,2,3,4]@7").is_err());
    }

    #[test]
    fn error_offsets() {
        match parse_quotient("eta(q)^2 * foo") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_quotient("eta(q)^(1/0)").is_err());
        assert!(parse_quotient("eta(q) eta(q)").is_err());
    }
}
