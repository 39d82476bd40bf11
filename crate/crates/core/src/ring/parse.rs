use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::{Coeff, Polynomial};
use crate::error::Error;

/// Recursive-descent parser for polynomial expressions.
///
/// Grammar: signed rational coefficients (`3`, `-1/2`), variable names from
/// the declared list, `+ - * ^` and parentheses. Multiplication is always
/// explicit; whitespace is ignored. `^` expects a bare nonnegative integer.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Polynomial, Error> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, vars };
    let poly = p.expr()?;
    match p.peek() {
        Token::End => Ok(poly),
        _ => Err(p.syntax("end of input")),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, Error> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => { out.push((i, Token::Plus)); i += 1; }
            '-' => { out.push((i, Token::Minus)); i += 1; }
            '*' => { out.push((i, Token::Star)); i += 1; }
            '^' => { out.push((i, Token::Caret)); i += 1; }
            '/' => { out.push((i, Token::Slash)); i += 1; }
            '(' => { out.push((i, Token::LParen)); i += 1; }
            ')' => { out.push((i, Token::RParen)); i += 1; }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(Error::Syntax { pos: i, expected: format!("token, found {c:?}") });
            }
        }
    }
    out.push((bytes.len(), Token::End));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn here(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        self.pos += 1;
        t
    }

    fn syntax(&self, expected: &str) -> Error {
        Error::Syntax { pos: self.here(), expected: expected.to_string() }
    }

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        while *self.peek() == Token::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        match self.peek() {
            Token::Plus => {
                self.bump();
                self.factor()
            }
            Token::Minus => {
                self.bump();
                Ok(-&self.factor()?)
            }
            _ => {
                let base = self.primary()?;
                if *self.peek() == Token::Caret {
                    self.bump();
                    let pos = self.here();
                    match self.bump() {
                        Token::Int(n) => {
                            let e = u32::try_from(&n)
                                .map_err(|_| Error::BadExponent { pos })?;
                            Ok(base.pow(e))
                        }
                        _ => Err(Error::BadExponent { pos }),
                    }
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn primary(&mut self) -> Result<Polynomial, Error> {
        let nvars = self.vars.len();
        let pos = self.here();
        match self.bump() {
            Token::Int(n) => {
                // A '/' directly after an integer continues the rational literal.
                if *self.peek() == Token::Slash {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Token::Int(d) if !d.is_zero() => Ok(Polynomial::constant(
                            nvars,
                            BigRational::new(n, d),
                        )),
                        _ => Err(Error::Syntax {
                            pos: dpos,
                            expected: "nonzero integer denominator".to_string(),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(nvars, BigRational::from_integer(n)))
                }
            }
            Token::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::var(nvars, i)),
                None => Err(Error::UnknownVariable { pos, name }),
            },
            Token::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Token::RParen => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos: self.tokens[self.pos - 1].0,
                        expected: "closing parenthesis".to_string(),
                    }),
                }
            }
            _ => Err(Error::Syntax {
                pos,
                expected: "coefficient, variable or parenthesized expression".to_string(),
            }),
        }
    }
}

/// Render `p` with terms in decreasing `order`; inverse of [`parse_polynomial`]
/// on canonical forms.
pub fn print_polynomial(p: &Polynomial, vars: &[String], order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_sorted_desc(order).into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&render_term(&m, &c.abs(), vars));
    }
    out
}

fn render_term(m: &Monomial, c: &Coeff, vars: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !c.is_one() || m.is_one() {
        if c.denom().is_one() {
            parts.push(c.numer().to_string());
        } else {
            parts.push(format!("{}/{}", c.numer(), c.denom()));
        }
    }
    for i in m.support() {
        let e = m.exp(i);
        if e == 1 {
            parts.push(vars[i].clone());
        } else {
            parts.push(format!("{}^{}", vars[i], e));
        }
    }
    parts.join("*")
}
