//! Expression grammar over the ASCII atom names, and evaluation into forms.
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor (factor | '*' factor | '/' factor)*
//! factor := atom ('^' exponent)*
//! atom   := '1' | 'a' | 'as' | 'g' | 'gs' | 'em' | 'ep' | 'e3' | 'q'
//!         | integer | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, `^` binds tightest, and products associate to
//! the left. An exponent is an optionally signed integer, except that an eta
//! atom after `^` continues the wedge word, so the canonical two-letter and
//! three-letter tokens `em^ep`, `em^e3`, `ep^e3`, `em^ep^e3` read back as the
//! products they denote. Rationals arrive through the `/` operator, so every
//! canonical rendering of an algebra element, coefficient, or form parses
//! back to its own value.

use crate::algebra::AlgElt;
use crate::coeffs::{QRat, Rational};
use crate::forms::{EtaWord, Form};
use num::bigint::BigInt;
use num::One;
use std::fmt;

/// Abstract syntax tree of one input expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    One,
    GenA,
    GenAStar,
    GenG,
    GenGStar,
    EtaMinus,
    EtaPlus,
    Eta3,
    Q,
    Integer(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Syntax error with the byte offset it was detected at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

/// Error from evaluating a well-formed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    DivisionByZero,
    DivisionByNonscalar,
    NegativePowerOfNonscalar,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::DivisionByZero => write!(f, "division by zero"),
            EvalError::DivisionByNonscalar => write!(f, "division by a nonscalar"),
            EvalError::NegativePowerOfNonscalar => {
                write!(f, "negative power of a nonscalar")
            }
        }
    }
}

impl std::error::Error for EvalError {}

/// Either stage of reading an input expression can fail.
#[derive(Clone, Debug, PartialEq)]
pub enum InputError {
    Parse(ParseError),
    Eval(EvalError),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Parse(e) => write!(f, "{e}"),
            InputError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Name(&'static str),
    Integer(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

const NAMES: [&str; 8] = ["a", "as", "g", "gs", "em", "ep", "e3", "q"];

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                tokens.push((start, Token::Plus));
                i += 1;
            }
            b'-' => {
                tokens.push((start, Token::Minus));
                i += 1;
            }
            b'*' => {
                tokens.push((start, Token::Star));
                i += 1;
            }
            b'/' => {
                tokens.push((start, Token::Slash));
                i += 1;
            }
            b'^' => {
                tokens.push((start, Token::Caret));
                i += 1;
            }
            b'(' => {
                tokens.push((start, Token::Open));
                i += 1;
            }
            b')' => {
                tokens.push((start, Token::Close));
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &input[start..i];
                let value: BigInt = digits.parse().expect("digit run parses");
                tokens.push((start, Token::Integer(value)));
            }
            b'a'..=b'z' => {
                while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                let word = &input[start..i];
                match NAMES.iter().find(|n| **n == word) {
                    Some(name) => tokens.push((start, Token::Name(name))),
                    None => {
                        return Err(ParseError {
                            position: start,
                            message: format!("unknown token `{word}`"),
                        })
                    }
                }
            }
            _ => {
                return Err(ParseError {
                    position: start,
                    message: format!("unexpected character `{}`", &input[start..start + 1]),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.here(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if matches!(self.peek(), Some(Token::Minus)) {
            self.advance();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.advance();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.advance();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.advance();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Name(_) | Token::Integer(_) | Token::Open) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Token::Caret)) {
            self.advance();
            let wedge_letter = match self.peek() {
                Some(Token::Name(n)) if matches!(*n, "em" | "ep" | "e3") => Some(atom_expr(n)),
                _ => None,
            };
            if let Some(letter) = wedge_letter {
                self.advance();
                base = Expr::Mul(Box::new(base), Box::new(letter));
            } else {
                let exponent = self.exponent()?;
                base = Expr::Pow(Box::new(base), exponent);
            }
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = if matches!(self.peek(), Some(Token::Minus)) {
            self.advance();
            true
        } else {
            false
        };
        let at = self.here();
        match self.advance() {
            Some(Token::Integer(v)) => {
                let v: i64 = i64::try_from(v.clone()).map_err(|_| ParseError {
                    position: at,
                    message: "exponent out of range".to_string(),
                })?;
                Ok(if negative { -v } else { v })
            }
            _ => Err(ParseError { position: at, message: "expected an integer exponent".into() }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.here();
        match self.advance() {
            Some(Token::Name(name)) => Ok(atom_expr(name)),
            Some(Token::Integer(v)) if v.is_one() => Ok(Expr::One),
            Some(Token::Integer(v)) => Ok(Expr::Integer(v.clone())),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.advance() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(ParseError { position: at, message: "unclosed parenthesis".into() }),
                }
            }
            Some(_) => {
                self.pos -= 1;
                self.fail("expected an atom")
            }
            None => self.fail("unexpected end of input"),
        }
    }
}

fn atom_expr(name: &str) -> Expr {
    match name {
        "a" => Expr::GenA,
        "as" => Expr::GenAStar,
        "g" => Expr::GenG,
        "gs" => Expr::GenGStar,
        "em" => Expr::EtaMinus,
        "ep" => Expr::EtaPlus,
        "e3" => Expr::Eta3,
        "q" => Expr::Q,
        _ => unreachable!("atom names are fixed"),
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens: &tokens, pos: 0, end: input.len() };
    if parser.peek().is_none() {
        return parser.fail("empty input");
    }
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return parser.fail("trailing input");
    }
    Ok(expr)
}

fn scalar_of(form: &Form) -> Option<QRat> {
    if form.is_zero() {
        return Some(QRat::zero());
    }
    let mut parts = form.parts();
    match (parts.next(), parts.next()) {
        (Some((&EtaWord::UNIT, x)), None) => {
            let mut terms = x.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if m.is_unit() => Some(c.clone()),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Evaluates an expression tree to a differential form; plain algebra
/// elements come back concentrated on the empty eta word.
pub fn eval(expr: &Expr) -> Result<Form, EvalError> {
    match expr {
        Expr::One => Ok(Form::one()),
        Expr::GenA => Ok(Form::from_alg(AlgElt::gen_a())),
        Expr::GenAStar => Ok(Form::from_alg(AlgElt::gen_a_star())),
        Expr::GenG => Ok(Form::from_alg(AlgElt::gen_g())),
        Expr::GenGStar => Ok(Form::from_alg(AlgElt::gen_g_star())),
        Expr::EtaMinus => Ok(Form::eta_minus()),
        Expr::EtaPlus => Ok(Form::eta_plus()),
        Expr::Eta3 => Ok(Form::eta_three()),
        Expr::Q => Ok(Form::from_alg(AlgElt::one()).scale(&QRat::q_power(1))),
        Expr::Integer(v) => {
            let c = QRat::from_rational(Rational::from_integer(v.clone()));
            Ok(Form::one().scale(&c))
        }
        Expr::Neg(inner) => Ok(eval(inner)?.neg()),
        Expr::Add(lhs, rhs) => Ok(eval(lhs)?.add(&eval(rhs)?)),
        Expr::Sub(lhs, rhs) => Ok(eval(lhs)?.sub(&eval(rhs)?)),
        Expr::Mul(lhs, rhs) => Ok(eval(lhs)?.wedge(&eval(rhs)?)),
        Expr::Div(lhs, rhs) => {
            let denom = eval(rhs)?;
            let Some(c) = scalar_of(&denom) else {
                return Err(EvalError::DivisionByNonscalar);
            };
            if c.is_zero() {
                return Err(EvalError::DivisionByZero);
            }
            Ok(eval(lhs)?.scale(&c.inv()))
        }
        Expr::Pow(base, exponent) => {
            let value = eval(base)?;
            if *exponent < 0 {
                let Some(c) = scalar_of(&value) else {
                    return Err(EvalError::NegativePowerOfNonscalar);
                };
                if c.is_zero() {
                    return Err(EvalError::DivisionByZero);
                }
                return Ok(Form::one().scale(&c.pow(*exponent)));
            }
            let mut out = Form::one();
            for _ in 0..*exponent {
                out = out.wedge(&value);
            }
            Ok(out)
        }
    }
}

/// Parses and evaluates in one step.
pub fn parse_form(input: &str) -> Result<Form, InputError> {
    let expr = parse(input).map_err(InputError::Parse)?;
    eval(&expr).map_err(InputError::Eval)
}
