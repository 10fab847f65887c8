//! Text syntax for algebra elements.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := [rational "*"] gen | rational
//! gen      := "L" "(" int ")" | "I" "(" int ")" | "CL" | "CI" | "CLI"
//! rational := ["-"] digits ["/" digits]
//! int      := ["-"] digits
//! ```
//!
//! Whitespace is ignored. A bare rational term must be zero, since the
//! algebra has no unit; this is what lets `0` round-trip. A `-` directly in
//! front of a generator negates it, so `-I(-1)` is accepted.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::scalar::{rational, Q};

/// Source text together with the element it denotes.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedExpression {
    pub source: String,
    pub value: Element<Q>,
}

impl ParsedExpression {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self {
            source: text.to_owned(),
            value: parse_element(text)?,
        })
    }
}

impl fmt::Display for ParsedExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn parse_element(text: &str) -> Result<Element<Q>> {
    Parser::new(text).expr()
}

pub fn format_element(e: &Element<Q>) -> String {
    e.to_string()
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        // 1-based character columns, whitespace dropped up front.
        let chars: Vec<(usize, char)> = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Self {
            chars,
            pos: 0,
            len: src.chars().count(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        match self.chars.get(self.pos) {
            Some(&(col, _)) => col,
            None => self.len.max(1),
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.err(format!("expected `{c}`, found `{got}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn expr(&mut self) -> Result<Element<Q>> {
        if self.chars.is_empty() {
            return self.err("empty expression");
        }
        let mut acc = Element::zero();
        let (key, c) = self.term()?;
        if let Some(k) = key {
            acc.add_term(k, c);
        }
        loop {
            let sign = match self.peek() {
                Some('+') => Q::one(),
                Some('-') => -Q::one(),
                Some(other) => return self.err(format!("expected `+` or `-`, found `{other}`")),
                None => return Ok(acc),
            };
            self.pos += 1;
            let (key, c) = self.term()?;
            if let Some(k) = key {
                acc.add_term(k, sign * c);
            }
        }
    }

    /// `None` key means a bare (zero) rational.
    fn term(&mut self) -> Result<(Option<BasisIndex>, Q)> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => Ok((Some(self.gen()?), Q::one())),
            Some('-')
                if self
                    .chars
                    .get(self.pos + 1)
                    .is_some_and(|(_, c)| c.is_ascii_alphabetic()) =>
            {
                self.pos += 1;
                Ok((Some(self.gen()?), -Q::one()))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let start = self.column();
                let value = self.rational()?;
                if self.eat('*') {
                    Ok((Some(self.gen()?), value))
                } else if value.is_zero() {
                    Ok((None, value))
                } else {
                    Err(Error::Parse {
                        column: start,
                        message: "a bare scalar term must be 0 (expected `*` and a generator)"
                            .into(),
                    })
                }
            }
            Some(c) => self.err(format!("expected a term, found `{c}`")),
            None => self.err("expected a term, found end of input"),
        }
    }

    fn gen(&mut self) -> Result<BasisIndex> {
        let start = self.pos;
        let mut name = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            name.push(c);
            self.pos += 1;
        }
        match name.as_str() {
            "L" => Ok(BasisIndex::lie_l(self.paren_int()?)),
            "I" => Ok(BasisIndex::lie_i(self.paren_int()?)),
            "CL" => Ok(BasisIndex::CL),
            "CI" => Ok(BasisIndex::CI),
            "CLI" => Ok(BasisIndex::CLI),
            _ => {
                self.pos = start;
                self.err(format!("unknown generator `{name}`"))
            }
        }
    }

    fn paren_int(&mut self) -> Result<i64> {
        self.expect('(')?;
        let start = self.column();
        let neg = self.eat('-');
        let digits = self.digits()?;
        let n: i64 = digits.parse().map_err(|_| Error::Parse {
            column: start,
            message: format!("index `{digits}` out of range"),
        })?;
        self.expect(')')?;
        Ok(if neg { -n } else { n })
    }

    fn digits(&mut self) -> Result<String> {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.pos += 1;
        }
        if out.is_empty() {
            return match self.peek() {
                Some(c) => self.err(format!("expected digits, found `{c}`")),
                None => self.err("expected digits, found end of input"),
            };
        }
        Ok(out)
    }

    fn rational(&mut self) -> Result<Q> {
        let neg = self.eat('-');
        let num: BigInt = self.digits()?.parse().expect("ascii digits");
        let den: BigInt = if self.eat('/') {
            let col = self.column();
            let d: BigInt = self.digits()?.parse().expect("ascii digits");
            if d.is_zero() {
                return Err(Error::Parse {
                    column: col,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::one()
        };
        let value = rational(num, den).expect("denominator checked");
        Ok(if neg { -value } else { value })
    }
}
