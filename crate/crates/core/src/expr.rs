//! Expression language over `x`, `y` and rational literals.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := unary (("." | "*" | <juxtaposition>) unary)*
//! unary    := "-" unary | power
//! power    := atom (("^" | "*^") nat)?
//! atom     := "x" | "y" | rational | "(" expr ")"
//! rational := int ("/" posint)?
//! ```
//!
//! `.` is the associative product and `*` the star product of the ambient
//! `A_1^k`. Juxtaposed factors (`2 y x`) multiply with `.`, which is what
//! [`format`] emits, so printed polynomials parse back to themselves. `^` is the
//! associative power (`p^0 = 1`); `*^` is the left-normed star power and needs an
//! exponent of at least 1.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::AlgebraCtx;
use crate::error::Error as AlgebraError;
use crate::poly::WeylPoly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(Scalar),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// associative product
    Dot(Box<Expr>, Box<Expr>),
    /// star product
    Star(Box<Expr>, Box<Expr>),
    /// associative power
    Pow(Box<Expr>, u32),
    /// left-normed star power
    StarPow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

fn expected_suffix(expected: &[&'static str]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!("; expected one of: {}", expected.join(", "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    X,
    Y,
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Dot,
    Star,
    Caret,
    StarCaret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::X => f.write_str("`x`"),
            Tok::Y => f.write_str("`y`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::StarCaret => f.write_str("`*^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

const ATOM_START: &[&str] = &["x", "y", "integer", "("];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'x' => Tok::X,
            b'y' => Tok::Y,
            b'/' => Tok::Slash,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'.' => Tok::Dot,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'*' => {
                if bytes.get(i + 1) == Some(&b'^') {
                    i += 1;
                    Tok::StarCaret
                } else {
                    Tok::Star
                }
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..=i];
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                let message = if ch.is_alphabetic() {
                    format!("unknown symbol `{ch}` (the algebra has generators x and y only)")
                } else {
                    format!("unexpected character `{ch}`")
                };
                return Err(ParseError { offset: start, message, expected: vec![] });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: format!("unexpected {}", self.peek()),
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Dot => {
                    self.bump();
                    lhs = Expr::Dot(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Star(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::X | Tok::Y | Tok::Int(_) | Tok::LParen => {
                    lhs = Expr::Dot(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        let star = match self.peek() {
            Tok::Caret => false,
            Tok::StarCaret => true,
            _ => return Ok(base),
        };
        self.bump();
        let exp_offset = self.offset();
        let exp = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                n
            }
            Tok::Minus => {
                return Err(ParseError {
                    offset: exp_offset,
                    message: "exponent must be a natural number, not negative".into(),
                    expected: vec!["natural number"],
                })
            }
            _ => return Err(self.error(&["natural number"])),
        };
        if *self.peek() == Tok::Slash {
            return Err(ParseError {
                offset: exp_offset,
                message: "exponent must be a natural number, not a fraction".into(),
                expected: vec!["natural number"],
            });
        }
        let exp: u32 = u32::try_from(exp).map_err(|_| ParseError {
            offset: exp_offset,
            message: "exponent too large".into(),
            expected: vec![],
        })?;
        if star {
            if exp == 0 {
                return Err(ParseError {
                    offset: exp_offset,
                    message: "star powers start at exponent 1".into(),
                    expected: vec!["positive integer"],
                });
            }
            Ok(Expr::StarPow(Box::new(base), exp))
        } else {
            Ok(Expr::Pow(Box::new(base), exp))
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::X => {
                self.bump();
                Ok(Expr::X)
            }
            Tok::Y => {
                self.bump();
                Ok(Expr::Y)
            }
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Const(Scalar::from(num_rational::BigRational::from_integer(n))));
                }
                self.bump();
                match self.peek().clone() {
                    Tok::Int(d) if d != BigInt::from(0) => {
                        self.bump();
                        Ok(Expr::Const(Scalar::from(num_rational::BigRational::new(n, d))))
                    }
                    Tok::Int(_) => Err(ParseError {
                        offset: self.offset(),
                        message: "denominator must be positive".into(),
                        expected: vec!["positive integer"],
                    }),
                    _ => Err(self.error(&["positive integer"])),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&[")", "+", "-", ".", "*"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses a whole expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error(&["+", "-", ".", "*", "^", "*^", "end of input"]));
    }
    Ok(e)
}

/// Evaluates `e` in `A_1^k`.
pub fn eval(ctx: &AlgebraCtx, e: &Expr) -> Result<WeylPoly, AlgebraError> {
    Ok(match e {
        Expr::Const(c) => WeylPoly::constant(c.clone()),
        Expr::X => WeylPoly::x(),
        Expr::Y => WeylPoly::y(),
        Expr::Neg(a) => -eval(ctx, a)?,
        Expr::Add(a, b) => &eval(ctx, a)? + &eval(ctx, b)?,
        Expr::Sub(a, b) => &eval(ctx, a)? - &eval(ctx, b)?,
        Expr::Dot(a, b) => eval(ctx, a)?.assoc_mul(&eval(ctx, b)?),
        Expr::Star(a, b) => ctx.star_mul(&eval(ctx, a)?, &eval(ctx, b)?),
        Expr::Pow(a, n) => eval(ctx, a)?.assoc_pow(*n),
        Expr::StarPow(a, n) => ctx.star_power_left(&eval(ctx, a)?, *n)?,
    })
}

pub fn parse_and_eval(ctx: &AlgebraCtx, text: &str) -> Result<WeylPoly, ExprError> {
    Ok(eval(ctx, &parse(text)?)?)
}

/// Canonical text of a polynomial; see [`WeylPoly`]'s `Display`.
pub fn format(p: &WeylPoly) -> String {
    p.to_string()
}
