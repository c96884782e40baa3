//! Text form of polynomials.
//!
//! Grammar (whitespace insignificant, implicit multiplication forbidden):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := number | variable | '(' expr ')'
//! number := nat ['/' nat]
//! ```
//!
//! Variables are chart coordinates `x[i,j]` (1-based) or plain names, and
//! must belong to the ring being parsed into.

use num_bigint::BigInt;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variable::Variable;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Var(Variable),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn read_nat(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn read_word(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string()
    }

    fn next(&mut self) -> Result<Token> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(Token::End);
        }
        let c = self.src[self.pos];
        match c {
            b'+' => {
                self.pos += 1;
                Ok(Token::Plus)
            }
            b'-' => {
                self.pos += 1;
                Ok(Token::Minus)
            }
            b'*' => {
                self.pos += 1;
                Ok(Token::Star)
            }
            b'^' => {
                self.pos += 1;
                Ok(Token::Caret)
            }
            b'/' => {
                self.pos += 1;
                Ok(Token::Slash)
            }
            b'(' => {
                self.pos += 1;
                Ok(Token::LParen)
            }
            b')' => {
                self.pos += 1;
                Ok(Token::RParen)
            }
            _ if c.is_ascii_digit() => Ok(Token::Num(self.read_nat()?)),
            _ if c.is_ascii_alphabetic() || c == b'_' => {
                let word = self.read_word();
                if self.pos < self.src.len() && self.src[self.pos] == b'[' {
                    self.pos += 1;
                    let row = self.read_nat()?;
                    self.skip_ws();
                    if self.pos >= self.src.len() || self.src[self.pos] != b',' {
                        return Err(self.err("expected ',' in indexed variable"));
                    }
                    self.pos += 1;
                    self.skip_ws();
                    let col = self.read_nat()?;
                    self.skip_ws();
                    if self.pos >= self.src.len() || self.src[self.pos] != b']' {
                        return Err(self.err("expected ']' in indexed variable"));
                    }
                    self.pos += 1;
                    if word != "x" {
                        return Err(self.err(&format!(
                            "indexed variables use the name 'x', got '{word}'"
                        )));
                    }
                    let to_u32 = |v: &BigInt| -> Result<u32> {
                        use num_traits::ToPrimitive;
                        v.to_u32().ok_or(Error::Parse {
                            pos: self.pos,
                            msg: "index too large".into(),
                        })
                    };
                    Ok(Token::Var(Variable::chart(to_u32(&row)?, to_u32(&col)?)))
                } else {
                    Ok(Token::Var(Variable::named(&word)))
                }
            }
            _ => Err(self.err(&format!("unexpected character '{}'", c as char))),
        }
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    lexer: Lexer<'a>,
    current: Token,
    current_pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, src: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let current_pos = lexer.pos;
        let current = lexer.next()?;
        Ok(Parser {
            ring,
            lexer,
            current,
            current_pos,
        })
    }

    fn bump(&mut self) -> Result<()> {
        self.current_pos = self.lexer.pos;
        self.current = self.lexer.next()?;
        Ok(())
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.current_pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.current == Token::Minus {
            negate = true;
            self.bump()?;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg_ref();
        }
        loop {
            match self.current {
                Token::Plus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Token::Minus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.current == Token::Star {
            self.bump()?;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.current == Token::Caret {
            self.bump()?;
            let e = match &self.current {
                Token::Num(v) => {
                    use num_traits::ToPrimitive;
                    v.to_u32().ok_or_else(|| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            };
            self.bump()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.current.clone() {
            Token::Num(n) => {
                self.bump()?;
                if self.current == Token::Slash {
                    self.bump()?;
                    let d = match &self.current {
                        Token::Num(d) => d.clone(),
                        _ => return Err(self.err("expected denominator after '/'")),
                    };
                    self.bump()?;
                    let c: Coeff = self.ring.domain().ratio(&n, &d)?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::constant(
                        self.ring,
                        self.ring.domain().from_bigint(&n),
                    ))
                }
            }
            Token::Var(v) => {
                self.bump()?;
                match self.ring.var_index(&v) {
                    Some(i) => Ok(Polynomial::variable(self.ring, i)),
                    None => Err(Error::UnknownVariable(v.to_string())),
                }
            }
            Token::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.current != Token::RParen {
                    return Err(self.err("expected ')'"));
                }
                self.bump()?;
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable, or '('")),
        }
    }
}

/// Parses the text grammar into a polynomial of `ring`.
pub fn parse_poly(ring: &Ring, src: &str) -> Result<Polynomial> {
    let mut p = Parser::new(ring, src)?;
    let poly = p.expr()?;
    if p.current != Token::End {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;
    use crate::variable::VariableSet;

    fn chart3() -> Ring {
        let vs = VariableSet::new(vec![
            Variable::chart(1, 1),
            Variable::chart(1, 2),
            Variable::chart(2, 1),
        ])
        .unwrap();
        Ring::new(vs, CoeffDomain::Rational, None).unwrap()
    }

    #[test]
    fn parses_chart_terms() {
        let r = chart3();
        let p = parse_poly(&r, "x[1,1]^2*x[2,1] - 3").unwrap();
        assert_eq!(p.to_string(), "x[1,1]^2*x[2,1] - 3");
        let q = parse_poly(&r, "-x[1,2] + x[2,1]").unwrap();
        assert_eq!(q.to_string(), "-x[1,2] + x[2,1]");
    }

    #[test]
    fn parses_rationals_and_parens() {
        let r = chart3();
        let p = parse_poly(&r, "3/4*x[1,1] * (x[1,2] - 2)").unwrap();
        assert_eq!(p.to_string(), "3/4*x[1,1]*x[1,2] - 3/2*x[1,1]");
    }

    #[test]
    fn whitespace_insignificant() {
        let r = chart3();
        let a = parse_poly(&r, "x[1,1]+2*x[2,1]").unwrap();
        let b = parse_poly(&r, "  x[1,1] + 2 * x[2,1]  ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = chart3();
        assert_eq!(
            parse_poly(&r, "x[3,1]"),
            Err(Error::UnknownVariable("x[3,1]".into()))
        );
        assert!(matches!(parse_poly(&r, "y + 1"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn rejects_bad_syntax() {
        let r = chart3();
        assert!(matches!(parse_poly(&r, "x[1,1] x[1,2]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(&r, "x[1,1] +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(&r, "x[1,1] ^ x[1,2]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(&r, "(x[1,1]"), Err(Error::Parse { .. })));
    }

    #[test]
    fn coefficient_domain_enforced() {
        let zr = Ring::named(&["x"], CoeffDomain::Integer).unwrap();
        assert!(matches!(
            parse_poly(&zr, "1/2*x"),
            Err(Error::CoefficientNotInDomain(_))
        ));
        let f3 = Ring::named(&["x"], CoeffDomain::prime(3).unwrap()).unwrap();
        let p = parse_poly(&f3, "1/2*x").unwrap();
        assert_eq!(p.to_string(), "2*x");
        assert!(parse_poly(&f3, "1/3*x").is_err());
    }

    #[test]
    fn roundtrip_with_default_order() {
        let r = chart3();
        for src in [
            "x[1,1]^3*x[1,2] - 5/7*x[2,1]^2 + 1",
            "-x[1,2] + x[2,1]",
            "0",
            "42",
            "-1/2",
        ] {
            let p = parse_poly(&r, src).unwrap();
            let printed = p.to_string();
            let q = parse_poly(&r, &printed).unwrap();
            assert_eq!(p, q, "roundtrip failed for {src}");
        }
    }
}
