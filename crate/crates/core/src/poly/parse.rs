//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 't' integer | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Scalar};
use crate::{Error, Result};

pub fn parse(text: &str) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err(&format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: message.to_string() }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                position: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den_pos = self.pos;
                    let den: BigInt = self
                        .digits()
                        .ok_or_else(|| self.err("expected denominator"))?
                        .parse()
                        .unwrap();
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            position: den_pos,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Polynomial::constant(Scalar::new(num, den)))
                } else {
                    self.pos = save;
                    Ok(Polynomial::constant(Scalar::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                let index = name
                    .strip_prefix('t')
                    .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|rest| rest.parse::<usize>().ok())
                    .ok_or(Error::UnknownVariable(name.clone()))?;
                Ok(Polynomial::var(index))
            }
            Some(c) => Err(self.err(&format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, scalar, Monomial};

    #[test]
    fn parses_spec_examples() {
        let p = parse("t0^2*t1 + 2*t0*t1^2").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&Monomial::from_exponents(vec![1, 2])), scalar(2));
        assert_eq!(parse("-(t0+t1)").unwrap(), -(Polynomial::var(0) + Polynomial::var(1)));
        assert_eq!(parse("t1*t1").unwrap(), Polynomial::monomial(Monomial::from_exponents(vec![0, 2])));
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse("3/6").unwrap(), Polynomial::constant(ratio(1, 2)));
        assert_eq!(parse("1/2*t0 - 1/2*t0").unwrap(), Polynomial::zero());
    }

    #[test]
    fn precedence() {
        // ^ binds tighter than unary minus on the atom, * tighter than +
        assert_eq!(parse("-t1^2").unwrap(), -Polynomial::var(1).pow(2));
        assert_eq!(parse("2*t1+t2*3").unwrap(), parse("2*t1 + 3*t2").unwrap());
        assert_eq!(parse("(t0+t1)^2").unwrap(), parse("t0^2 + 2*t0*t1 + t1^2").unwrap());
    }

    #[test]
    fn errors_carry_position() {
        match parse("t1 + * t2") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(parse("x1 + t0"), Err(Error::UnknownVariable("x1".into())));
        assert!(matches!(parse("(t1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("t1 t2"), Err(Error::Syntax { .. })));
    }
}
