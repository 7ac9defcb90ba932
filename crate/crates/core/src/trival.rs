//! Three-valued pointwise semantics of conditionals.

use std::fmt;
use std::str::FromStr;

use crate::cea::Conditional;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    True,
    False,
    /// The condition is false: the conditional does not apply.
    Undefined,
}

use TruthValue::{False as F, True as T, Undefined as U};

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [T, F, U];

    pub fn and(self, other: TruthValue) -> TruthValue {
        tt_and(self, other)
    }

    pub fn or(self, other: TruthValue) -> TruthValue {
        tt_or(self, other)
    }

    pub fn given(self, other: TruthValue) -> TruthValue {
        tt_given(self, other)
    }

    fn index(self) -> usize {
        match self {
            T => 0,
            F => 1,
            U => 2,
        }
    }
}

impl std::ops::Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        tt_not(self)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            T => "T",
            F => "F",
            U => "U",
        })
    }
}

impl FromStr for TruthValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<TruthValue> {
        match s {
            "T" => Ok(T),
            "F" => Ok(F),
            "U" => Ok(U),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

// Rows are the first operand, columns the second, both in T, F, U order.
const AND: [[TruthValue; 3]; 3] = [[T, F, T], [F, F, F], [T, F, U]];
const OR: [[TruthValue; 3]; 3] = [[T, T, T], [T, F, F], [T, F, U]];
const GIVEN: [[TruthValue; 3]; 3] = [[T, U, T], [F, U, F], [U, U, U]];

pub fn tt_and(p: TruthValue, q: TruthValue) -> TruthValue {
    AND[p.index()][q.index()]
}

pub fn tt_or(p: TruthValue, q: TruthValue) -> TruthValue {
    OR[p.index()][q.index()]
}

pub fn tt_given(p: TruthValue, q: TruthValue) -> TruthValue {
    GIVEN[p.index()][q.index()]
}

pub fn tt_not(p: TruthValue) -> TruthValue {
    match p {
        T => F,
        F => T,
        U => U,
    }
}

/// Value of `c` at the atom with index `atom`.
pub fn eval_at(c: &Conditional, atom: usize) -> Result<TruthValue> {
    if atom >= c.tag().len() {
        return Err(Error::UnknownAtom(format!("#{atom}")));
    }
    Ok(if c.consequent().contains(atom) {
        T
    } else if c.condition().contains(atom) {
        F
    } else {
        U
    })
}
