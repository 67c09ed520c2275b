//! Tokenizer and recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := sign? term (('+'|'-') term)*
//! term   := coeff? factor ('*' factor)*
//! factor := var | '(' expr ')'
//! var    := 'x' digits
//! coeff  := int ('/' int)? '*'?
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(Sign, Term)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    /// `(numerator, denominator)`; `None` means 1.
    pub coeff: Option<(BigInt, BigInt)>,
    /// Left-associative product chain; empty only for a bare coefficient.
    pub factors: Vec<Factor>,
    pub pos: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Var { index: usize, pos: (usize, usize) },
    Paren(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, (usize, usize))>,
}

impl Lexer {
    fn new(src: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        let at = |i: usize| (line, col0 + i);
        while i < chars.len() {
            let c = chars[i];
            let pos = at(i);
            match c {
                _ if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '+' => toks.push((Tok::Plus, pos)),
                '-' => toks.push((Tok::Minus, pos)),
                '*' => toks.push((Tok::Star, pos)),
                '/' => toks.push((Tok::Slash, pos)),
                '(' => toks.push((Tok::LParen, pos)),
                ')' => toks.push((Tok::RParen, pos)),
                'x' => {
                    let start = i + 1;
                    let mut j = start;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == start {
                        return Err(ParseError::new(pos, ParseErrorKind::Syntax, "expected digits after 'x'"));
                    }
                    let digits: String = chars[start..j].iter().collect();
                    let index = digits.parse::<usize>().map_err(|_| {
                        ParseError::new(pos, ParseErrorKind::UnknownVariable, format!("x{digits}"))
                    })?;
                    toks.push((Tok::Var(index), pos));
                    i = j;
                    continue;
                }
                _ if c.is_ascii_digit() => {
                    let mut j = i;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    let digits: String = chars[i..j].iter().collect();
                    toks.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
                    i = j;
                    continue;
                }
                _ => {
                    return Err(ParseError::new(
                        pos,
                        ParseErrorKind::Syntax,
                        format!("unexpected character '{c}'"),
                    ))
                }
            }
            i += 1;
        }
        toks.push((Tok::End, at(chars.len())));
        Ok(Lexer { toks })
    }
}

struct Parser {
    toks: Vec<(Tok, (usize, usize))>,
    at: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 256;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> (usize, usize) {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, what: &str) -> ParseError {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            t => format!("{t:?}"),
        };
        ParseError::new(self.pos(), ParseErrorKind::Syntax, format!("expected {what}, found {found}"))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.pos(), ParseErrorKind::Syntax, "nesting too deep"));
        }
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Tok::Minus => {
                self.bump();
                Sign::Minus
            }
            Tok::Plus => {
                self.bump();
                Sign::Plus
            }
            _ => Sign::Plus,
        };
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek() {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
        }
        self.depth -= 1;
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let pos = self.pos();
        let mut coeff = None;
        if let Tok::Int(num) = self.peek().clone() {
            self.bump();
            let mut den = BigInt::one();
            if *self.peek() == Tok::Slash {
                self.bump();
                let Tok::Int(d) = self.peek().clone() else {
                    return Err(self.unexpected("denominator"));
                };
                self.bump();
                den = d;
                if den.is_zero() {
                    return Err(ParseError::new(pos, ParseErrorKind::InvalidCoefficient, "zero denominator"));
                }
            }
            coeff = Some((num, den));
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                Tok::Var(_) | Tok::LParen => {}
                _ => {
                    return Ok(Term {
                        coeff,
                        factors: Vec::new(),
                        pos,
                    })
                }
            }
        }
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(Term { coeff, factors, pos })
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Var(index) => {
                self.bump();
                Ok(Factor::Var { index, pos })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(Factor::Paren(Box::new(e)))
            }
            _ => Err(self.unexpected("variable or '('")),
        }
    }
}

/// Parses `src`, reporting positions relative to `(line, column)` of its
/// first character.
pub fn parse_expr_at(src: &str, line: usize, column: usize) -> Result<Expr, ParseError> {
    let lexer = Lexer::new(src, line, column)?;
    let mut p = Parser {
        toks: lexer.toks,
        at: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("'+', '-' or end of input"));
    }
    Ok(e)
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    parse_expr_at(src, 1, 1)
}
