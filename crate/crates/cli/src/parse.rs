//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insensitive, no implicit multiplication):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := number | identifier | '(' expr ')'
//! number := integer ['/' integer]
//! ```
//!
//! Every error carries the byte offset it was detected at.

use logdiv::poly::Polynomial;
use logdiv::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Open,
    Close,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            '(' => {
                out.push((Token::Open, i));
                i += 1;
            }
            ')' => {
                out.push((Token::Close, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value: BigInt = digits.parse().expect("digit run parses");
                out.push((Token::Number(value), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
            }
            other => {
                return Err(ParseError {
                    offset: i,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    out.push((Token::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn next(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if *self.peek() == Token::Minus {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Token::Plus => {
                    self.next();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Token::Minus => {
                    self.next();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.next();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                // polynomial division is not an operation; `/` only forms
                // rational constants like 5/6
                Token::Slash => {
                    return self.err("`/` is only allowed inside a rational literal")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Token::Caret {
            self.next();
            let (tok, off) = self.next();
            let Token::Number(e) = tok else {
                return Err(ParseError {
                    offset: off,
                    message: "exponent must be a nonnegative integer".into(),
                });
            };
            let e: u32 = e.try_into().map_err(|_| ParseError {
                offset: off,
                message: "exponent does not fit in 32 bits".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let nvars = self.vars.len();
        match self.peek().clone() {
            Token::Number(n) => {
                self.next();
                let mut value = Rational::from(n);
                if *self.peek() == Token::Slash {
                    self.next();
                    let (tok, off) = self.next();
                    let Token::Number(d) = tok else {
                        return Err(ParseError {
                            offset: off,
                            message: "denominator must be an integer".into(),
                        });
                    };
                    if d.is_zero() {
                        return Err(ParseError {
                            offset: off,
                            message: "denominator is zero".into(),
                        });
                    }
                    value /= Rational::from(d);
                }
                Ok(Polynomial::constant(value, nvars))
            }
            Token::Ident(name) => {
                let off = self.offset();
                self.next();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(i, nvars)),
                    None => Err(ParseError {
                        offset: off,
                        message: format!("unknown identifier `{name}`"),
                    }),
                }
            }
            Token::Open => {
                self.next();
                let inner = self.expr()?;
                if *self.peek() != Token::Close {
                    return self.err("expected `)`");
                }
                self.next();
                Ok(inner)
            }
            Token::Slash => self.err("`/` is only allowed inside a rational literal"),
            _ => self.err("expected a number, variable, or `(`"),
        }
    }
}

/// Parses an expression over the given variables into an exact polynomial.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, vars };
    let poly = p.expr()?;
    if *p.peek() != Token::End {
        return p.err("trailing input after expression");
    }
    Ok(poly)
}

/// Parses `p` or `p/q` into an exact rational; `q = 0` is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let trimmed = text.trim();
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (trimmed, None),
    };
    let parse_int = |s: &str, what: &str| -> Result<BigInt, ParseError> {
        s.parse().map_err(|_| ParseError {
            offset: 0,
            message: format!("{what} `{s}` is not an integer"),
        })
    };
    let num = parse_int(num_text, "numerator")?;
    let Some(den_text) = den_text else {
        return Ok(Rational::from(num));
    };
    let den = parse_int(den_text, "denominator")?;
    if den.is_zero() {
        return Err(ParseError { offset: 0, message: "denominator is zero".into() });
    }
    Ok(Rational::new(num, den))
}
