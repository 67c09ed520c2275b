//! Text syntax for elements, endomorphisms and derivations of both algebras.
//!
//! Variables are spelled `x1..xN` in either algebra; `*` is the algebra
//! product and associates to the left. Map files look like
//!
//! ```text
//! # optional comments
//! kind: endomorphism
//! x1 -> x1 + ((x3*x2)*x1)
//! x2 -> x2
//! x3 -> x3
//! ```

mod parser;
mod print;

use std::fmt;

use thiserror::Error;

pub use parser::{parse_expr, Expr, Factor, Sign, Term};
pub use print::{
    print_a_element, print_a_map, print_b_element, print_b_map, print_derivation,
};

use crate::anticomm::{BDerivation, BElement, BEndomorphism};
use crate::field::{Field, Scalar};
use crate::metabelian::{AElement, AEndomorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    Syntax,
    UnknownVariable,
    RankExceeded,
    InvalidCoefficient,
    ConstantTerm,
    MissingRow,
    DuplicateRow,
    KindMismatch,
}

impl ParseErrorKind {
    /// Stable machine-readable code.
    pub fn code(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::UnknownVariable => "unknown_variable",
            ParseErrorKind::RankExceeded => "rank_exceeded",
            ParseErrorKind::InvalidCoefficient => "invalid_coefficient",
            ParseErrorKind::ConstantTerm => "constant_term",
            ParseErrorKind::MissingRow => "missing_row",
            ParseErrorKind::DuplicateRow => "duplicate_row",
            ParseErrorKind::KindMismatch => "kind_mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(pos: (usize, usize), kind: ParseErrorKind, message: impl Into<String>) -> Self {
        ParseError {
            line: pos.0,
            column: pos.1,
            kind,
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Metabelian,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Endomorphism,
    Derivation,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::Endomorphism => write!(f, "endomorphism"),
            MapKind::Derivation => write!(f, "derivation"),
        }
    }
}

/// What the expression evaluator needs from an algebra.
pub trait Evaluate: Sized + Clone {
    fn zero(field: Field, rank: usize) -> Self;
    fn generator(field: Field, i: usize, rank: usize) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;
}

impl Evaluate for AElement {
    fn zero(field: Field, rank: usize) -> Self {
        AElement::zero_unchecked(field, rank)
    }
    fn generator(field: Field, i: usize, rank: usize) -> Self {
        AElement::generator(field, i, rank).expect("index checked by parser")
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

impl Evaluate for BElement {
    fn zero(field: Field, rank: usize) -> Self {
        BElement::zero_unchecked(field, rank)
    }
    fn generator(field: Field, i: usize, rank: usize) -> Self {
        BElement::generator(field, i, rank).expect("index checked by parser")
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

fn eval_expr<T: Evaluate>(e: &Expr, field: Field, rank: usize) -> Result<T, ParseError> {
    let mut acc = T::zero(field, rank);
    for (sign, term) in &e.terms {
        let mut c = match &term.coeff {
            None => field.one(),
            Some((num, den)) => field.ratio(num, den).map_err(|_| {
                ParseError::new(
                    term.pos,
                    ParseErrorKind::InvalidCoefficient,
                    format!("{num}/{den} is not defined in {field}"),
                )
            })?,
        };
        if *sign == Sign::Minus {
            c = -c;
        }
        if term.factors.is_empty() {
            if c.is_zero() {
                continue;
            }
            return Err(ParseError::new(
                term.pos,
                ParseErrorKind::ConstantTerm,
                "nonzero constants are not elements of the algebra",
            ));
        }
        let mut prod: Option<T> = None;
        for f in &term.factors {
            let v = match f {
                Factor::Var { index, pos } => {
                    if *index == 0 {
                        return Err(ParseError::new(*pos, ParseErrorKind::UnknownVariable, "x0"));
                    }
                    if *index > rank {
                        return Err(ParseError::new(
                            *pos,
                            ParseErrorKind::RankExceeded,
                            format!("x{index} exceeds rank {rank}"),
                        ));
                    }
                    T::generator(field, *index, rank)
                }
                Factor::Paren(inner) => eval_expr(inner, field, rank)?,
            };
            prod = Some(match prod {
                None => v,
                Some(p) => p.times(&v),
            });
        }
        acc = acc.plus(&prod.expect("nonempty").scaled(&c));
    }
    Ok(acc)
}

fn parse_at<T: Evaluate>(text: &str, field: Field, rank: usize, line: usize, column: usize) -> Result<T, ParseError> {
    let e = parser::parse_expr_at(text, line, column)?;
    eval_expr(&e, field, rank)
}

pub fn parse_a_element(text: &str, rank: usize, field: Field) -> Result<AElement, ParseError> {
    check_rank(rank)?;
    parse_at(text, field, rank, 1, 1)
}

pub fn parse_b_element(text: &str, rank: usize, field: Field) -> Result<BElement, ParseError> {
    check_rank(rank)?;
    parse_at(text, field, rank, 1, 1)
}

fn check_rank(rank: usize) -> Result<(), ParseError> {
    if rank == 0 {
        return Err(ParseError::new((1, 1), ParseErrorKind::RankExceeded, "rank must be at least 1"));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedElement {
    Metabelian(AElement),
    Free(BElement),
}

impl fmt::Display for ParsedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedElement::Metabelian(a) => write!(f, "{a}"),
            ParsedElement::Free(b) => write!(f, "{b}"),
        }
    }
}

pub fn parse_element(text: &str, rank: usize, algebra: AlgebraKind, field: Field) -> Result<ParsedElement, ParseError> {
    Ok(match algebra {
        AlgebraKind::Metabelian => ParsedElement::Metabelian(parse_a_element(text, rank, field)?),
        AlgebraKind::Free => ParsedElement::Free(parse_b_element(text, rank, field)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedMap {
    MetabelianEndomorphism(AEndomorphism),
    FreeEndomorphism(BEndomorphism),
    FreeDerivation(BDerivation),
}

impl fmt::Display for ParsedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedMap::MetabelianEndomorphism(m) => write!(f, "{m}"),
            ParsedMap::FreeEndomorphism(m) => write!(f, "{m}"),
            ParsedMap::FreeDerivation(d) => write!(f, "{d}"),
        }
    }
}

/// Splits a map file into its header kind and one row per variable.
/// Right-hand side text with the line and column where it starts.
type Row = (String, usize, usize);

fn map_rows(text: &str, rank: usize) -> Result<(MapKind, Vec<Row>), ParseError> {
    let mut kind = None;
    let mut rows: Vec<Option<Row>> = vec![None; rank];
    let mut last_line = 1;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        let Some(k) = kind else {
            let Some(rest) = trimmed.strip_prefix("kind:") else {
                return Err(ParseError::new(
                    (line, indent + 1),
                    ParseErrorKind::Syntax,
                    "expected 'kind: endomorphism' or 'kind: derivation'",
                ));
            };
            kind = Some(match rest.trim() {
                "endomorphism" => MapKind::Endomorphism,
                "derivation" => MapKind::Derivation,
                other => {
                    return Err(ParseError::new(
                        (line, indent + 1),
                        ParseErrorKind::Syntax,
                        format!("unknown kind '{other}'"),
                    ))
                }
            });
            continue;
        };
        let _ = k;
        let Some(arrow) = raw.find("->") else {
            return Err(ParseError::new((line, indent + 1), ParseErrorKind::Syntax, "expected 'xI -> expr'"));
        };
        let lhs = raw[..arrow].trim();
        let lhs_col = raw[..arrow].len() - raw[..arrow].trim_start().len() + 1;
        let index = lhs
            .strip_prefix('x')
            .and_then(|d| if d.chars().all(|c| c.is_ascii_digit()) { d.parse::<usize>().ok() } else { None })
            .ok_or_else(|| {
                ParseError::new((line, lhs_col), ParseErrorKind::Syntax, format!("expected a variable, found '{lhs}'"))
            })?;
        if index == 0 || index > rank {
            return Err(ParseError::new(
                (line, lhs_col),
                ParseErrorKind::RankExceeded,
                format!("x{index} exceeds rank {rank}"),
            ));
        }
        if rows[index - 1].is_some() {
            return Err(ParseError::new(
                (line, lhs_col),
                ParseErrorKind::DuplicateRow,
                format!("duplicate row for x{index}"),
            ));
        }
        let rhs = &raw[arrow + 2..];
        let col = raw[..arrow + 2].chars().count() + 1;
        rows[index - 1] = Some((rhs.to_string(), line, col));
    }
    let kind = kind.ok_or_else(|| ParseError::new((last_line, 1), ParseErrorKind::Syntax, "missing 'kind:' header"))?;
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.ok_or_else(|| {
                ParseError::new((last_line, 1), ParseErrorKind::MissingRow, format!("missing row for x{}", i + 1))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((kind, rows))
}

fn parse_rows<T: Evaluate>(rows: &[Row], field: Field, rank: usize) -> Result<Vec<T>, ParseError> {
    rows.iter()
        .map(|(src, line, col)| parse_at(src, field, rank, *line, *col))
        .collect()
}

/// Parses a map file; `expected`, when given, must match the header kind.
pub fn parse_map(
    text: &str,
    rank: usize,
    algebra: AlgebraKind,
    field: Field,
    expected: Option<MapKind>,
) -> Result<ParsedMap, ParseError> {
    check_rank(rank)?;
    let (kind, rows) = map_rows(text, rank)?;
    if let Some(e) = expected {
        if e != kind {
            return Err(ParseError::new(
                (1, 1),
                ParseErrorKind::KindMismatch,
                format!("expected a {e} file, found {kind}"),
            ));
        }
    }
    Ok(match (algebra, kind) {
        (AlgebraKind::Metabelian, MapKind::Endomorphism) => ParsedMap::MetabelianEndomorphism(
            AEndomorphism::new(parse_rows(&rows, field, rank)?).expect("uniform rank"),
        ),
        (AlgebraKind::Free, MapKind::Endomorphism) => {
            ParsedMap::FreeEndomorphism(BEndomorphism::new(parse_rows(&rows, field, rank)?).expect("uniform rank"))
        }
        (AlgebraKind::Free, MapKind::Derivation) => {
            ParsedMap::FreeDerivation(BDerivation::new(parse_rows(&rows, field, rank)?).expect("uniform rank"))
        }
        (AlgebraKind::Metabelian, MapKind::Derivation) => {
            return Err(ParseError::new(
                (1, 1),
                ParseErrorKind::KindMismatch,
                "derivations are supported only over the free algebra",
            ))
        }
    })
}

pub fn parse_a_endomorphism(text: &str, rank: usize, field: Field) -> Result<AEndomorphism, ParseError> {
    match parse_map(text, rank, AlgebraKind::Metabelian, field, Some(MapKind::Endomorphism))? {
        ParsedMap::MetabelianEndomorphism(m) => Ok(m),
        _ => unreachable!(),
    }
}

pub fn parse_b_endomorphism(text: &str, rank: usize, field: Field) -> Result<BEndomorphism, ParseError> {
    match parse_map(text, rank, AlgebraKind::Free, field, Some(MapKind::Endomorphism))? {
        ParsedMap::FreeEndomorphism(m) => Ok(m),
        _ => unreachable!(),
    }
}

pub fn parse_b_derivation(text: &str, rank: usize, field: Field) -> Result<BDerivation, ParseError> {
    match parse_map(text, rank, AlgebraKind::Free, field, Some(MapKind::Derivation))? {
        ParsedMap::FreeDerivation(d) => Ok(d),
        _ => unreachable!(),
    }
}
