//! The expression language and the space file format.
//!
//! Precedence, tightest first: `~`, `and`, `or`, `|`. Every binary operator
//! is left-associative, so `a | b | c` reads `((a | b) | c)`.

mod lexer;
mod parser;
mod space;

use std::fmt;

use crate::cea::Conditional;
use crate::error::{Error, Result};
use crate::event::SampleSpace;
use crate::schay;

pub use parser::parse_expr;
pub use space::{parse_space, parse_weight, SpaceDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    /// Orthogonal sum.
    Osum,
    /// Sasaki projection of the second argument onto the first.
    Proj,
    /// Schay's conjunction.
    SAnd,
    /// Schay's `(A ∪ C | B ∩ D)`.
    SOr,
    SCap,
    SCup,
}

impl Func {
    pub const ALL: [Func; 6] = [
        Func::Osum,
        Func::Proj,
        Func::SAnd,
        Func::SOr,
        Func::SCap,
        Func::SCup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Osum => "osum",
            Func::Proj => "proj",
            Func::SAnd => "s_and",
            Func::SOr => "s_or",
            Func::SCap => "s_cap",
            Func::SCup => "s_cup",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn apply(self, x: &Conditional, y: &Conditional) -> Result<Conditional> {
        match self {
            Func::Osum => x.osum(y),
            Func::Proj => x.sasaki(y),
            Func::SAnd => schay::and_s(x, y),
            Func::SOr => schay::vee_s(x, y),
            Func::SCap => schay::cap_s(x, y),
            Func::SCup => schay::cup_s(x, y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    EventRef(String),
    SetLiteral(Vec<String>),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Given(Box<Expr>, Box<Expr>),
    Func(Func, Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Fully parenthesized source text that parses back to `self`.
    pub fn to_source(&self) -> String {
        match self {
            Expr::EventRef(n) => n.clone(),
            Expr::SetLiteral(atoms) => format!("{{{}}}", atoms.join(",")),
            Expr::Not(e) => format!("~{}", e.to_source()),
            Expr::And(a, b) => format!("({} and {})", a.to_source(), b.to_source()),
            Expr::Or(a, b) => format!("({} or {})", a.to_source(), b.to_source()),
            Expr::Given(a, b) => format!("({} | {})", a.to_source(), b.to_source()),
            Expr::Func(f, a, b) => {
                format!("{}({}, {})", f.name(), a.to_source(), b.to_source())
            }
        }
    }
}

/// S-expression rendering, used by the `parse` command.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::EventRef(n) => f.write_str(n),
            Expr::SetLiteral(atoms) => write!(f, "{{{}}}", atoms.join(",")),
            Expr::Not(e) => write!(f, "(not {e})"),
            Expr::And(a, b) => write!(f, "(and {a} {b})"),
            Expr::Or(a, b) => write!(f, "(or {a} {b})"),
            Expr::Given(a, b) => write!(f, "(given {a} {b})"),
            Expr::Func(func, a, b) => write!(f, "({} {a} {b})", func.name()),
        }
    }
}

/// Evaluates an expression to a conditional. Leaves become `(e|Ω)`, so
/// `e | f` is iterated conditioning of certain events, which is `(ef|f)`.
pub fn lower(expr: &Expr, doc: &SpaceDoc) -> Result<Conditional> {
    Ok(match expr {
        Expr::EventRef(name) => Conditional::certain(
            doc.event(name)
                .ok_or_else(|| Error::UnknownName(name.clone()))?,
        ),
        Expr::SetLiteral(atoms) => Conditional::certain(doc.space.event(atoms)?),
        Expr::Not(e) => lower(e, doc)?.negate(),
        Expr::And(a, b) => lower(a, doc)?.and(&lower(b, doc)?)?,
        Expr::Or(a, b) => lower(a, doc)?.or(&lower(b, doc)?)?,
        Expr::Given(a, b) => lower(a, doc)?.given(&lower(b, doc)?)?,
        Expr::Func(f, a, b) => f.apply(&lower(a, doc)?, &lower(b, doc)?)?,
    })
}

/// `({a,b}|{a,b,c})` with atoms in declaration order, or `UNDEFINED`.
pub fn format_conditional(c: &Conditional, space: &SampleSpace) -> String {
    if c.is_undefined() {
        return "UNDEFINED".to_string();
    }
    format_set_literal(c, space)
}

/// Set-literal source text for `c` that lowers back to `c`, including
/// `({}|{})` for the undefined conditional.
pub fn format_set_literal(c: &Conditional, space: &SampleSpace) -> String {
    format!(
        "({}|{})",
        space.format_event(&c.consequent()),
        space.format_event(&c.condition())
    )
}
