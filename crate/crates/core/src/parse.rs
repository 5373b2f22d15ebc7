//! Parser for polynomial expressions: variables, integer literals, `+`,
//! `-`, `*`, `^`, and parentheses.

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::ring::AmbientRing;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            c if c.is_ascii_digit() => {
                let mut n: i64 = 0;
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add((d as u8 - b'0') as i64))
                            .ok_or_else(|| {
                                AlgebraError::Invalid("integer literal overflow".into())
                            })?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(s));
            }
            other => {
                return Err(AlgebraError::Invalid(format!(
                    "unexpected character '{other}' in polynomial expression"
                )));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ambient: &'a AmbientRing,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => {
                    if !(0..=64).contains(&e) {
                        return Err(AlgebraError::Invalid(format!("exponent {e} out of range")));
                    }
                    let mut acc = Polynomial::one(self.ambient);
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                other => Err(AlgebraError::Invalid(format!(
                    "expected integer exponent, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Ident(name)) => match self.ambient.variable_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ambient, i)),
                None => Err(AlgebraError::Invalid(format!("unknown variable '{name}'"))),
            },
            Some(Token::Int(n)) => Ok(Polynomial::from_term(
                self.ambient,
                self.ambient.field().from_i64(n),
                crate::monomial::Monomial::one(self.ambient.nvars()),
            )),
            Some(Token::Minus) => Ok(self.factor()?.neg()),
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(AlgebraError::Invalid("missing closing parenthesis".into())),
                }
            }
            other => Err(AlgebraError::Invalid(format!(
                "unexpected token {other:?} in polynomial expression"
            ))),
        }
    }
}

/// Parse a polynomial expression over the given ambient ring.
pub fn parse_polynomial(ambient: &AmbientRing, input: &str) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Invalid("empty polynomial expression".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        ambient,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(AlgebraError::Invalid(format!(
            "trailing input after polynomial expression at token {}",
            p.pos
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AmbientRing;
    use crate::scalar::FieldSpec;

    fn amb() -> AmbientRing {
        AmbientRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            FieldSpec::Fp(32003),
        )
        .unwrap()
    }

    #[test]
    fn parses_and_normalizes() {
        let a = amb();
        let p = parse_polynomial(&a, "x*y - y*x").unwrap();
        assert!(p.is_zero());
        let q = parse_polynomial(&a, "(x+y)*(x-y)").unwrap();
        assert_eq!(q.to_string(), "x^2 - y^2");
        let r = parse_polynomial(&a, "x^2*z - 3*y").unwrap();
        assert_eq!(r.to_string(), "x^2*z - 3*y");
    }

    #[test]
    fn rejects_garbage() {
        let a = amb();
        assert!(parse_polynomial(&a, "w + 1").is_err());
        assert!(parse_polynomial(&a, "x +").is_err());
        assert!(parse_polynomial(&a, "x ^ y").is_err());
        assert!(parse_polynomial(&a, "(x").is_err());
        assert!(parse_polynomial(&a, "").is_err());
        assert!(parse_polynomial(&a, "x$y").is_err());
    }

    #[test]
    fn unary_minus_and_constants() {
        let a = amb();
        assert_eq!(parse_polynomial(&a, "-x").unwrap().to_string(), "-x");
        assert_eq!(parse_polynomial(&a, "0").unwrap().to_string(), "0");
        assert_eq!(parse_polynomial(&a, "2^3").unwrap().to_string(), "8");
    }
}
