//! Deductive relations and quantum-logic predicates on conditionals.
//!
//! Every relation is evaluated through its Boolean characterization on the
//! stored normal forms `(ab, b)` and `(cd, d)`. The undefined conditional
//! gets no special treatment: its normal form `({}|{})` is plugged into the
//! same inequalities.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cea::{Conditional, Operations};
use crate::error::{Error, Result};
use crate::event::Event;

/// Largest space for which [`generated_subalgebra`] will run.
pub const MAX_SUBALGEBRA_ATOMS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Parts {
    ab: u64,
    b: u64,
    cd: u64,
    d: u64,
}

impl Parts {
    fn of(x: &Conditional, y: &Conditional) -> Result<Parts> {
        x.condition().same_space(&y.condition())?;
        Ok(Parts {
            ab: x.consequent().bits(),
            b: x.condition().bits(),
            cd: y.consequent().bits(),
            d: y.condition().bits(),
        })
    }

    fn a_false(&self) -> u64 {
        self.b & !self.ab
    }

    fn c_false(&self) -> u64 {
        self.d & !self.cd
    }
}

fn le(p: u64, q: u64) -> bool {
    p & !q == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Truth implies truth: `ab ≤ cd`.
    Tr,
    /// Non-falsity implies non-falsity: `c'd ≤ a'b`.
    Nf,
    /// Applicability implies applicability: `b ≤ d`.
    Ap,
    /// Probabilistically monotonic: `tr` and `nf`.
    Pm,
    /// `ap` and `tr`.
    Vee,
    /// `x ∧ y = x`, i.e. `d ≤ b` and `c'd ≤ a'b`.
    Wedge,
    /// Boolean deduction under a shared condition: `b = d` and `ab ≤ cd`.
    Bo,
}

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::Tr,
        Relation::Nf,
        Relation::Ap,
        Relation::Pm,
        Relation::Vee,
        Relation::Wedge,
        Relation::Bo,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Relation::Tr => "tr",
            Relation::Nf => "nf",
            Relation::Ap => "ap",
            Relation::Pm => "pm",
            Relation::Vee => "vee",
            Relation::Wedge => "wedge",
            Relation::Bo => "bo",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Relation> {
        Relation::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

pub fn holds(rel: Relation, x: &Conditional, y: &Conditional) -> Result<bool> {
    let p = Parts::of(x, y)?;
    let tr = le(p.ab, p.cd);
    let nf = le(p.c_false(), p.a_false());
    let ap = le(p.b, p.d);
    Ok(match rel {
        Relation::Tr => tr,
        Relation::Nf => nf,
        Relation::Ap => ap,
        Relation::Pm => tr && nf,
        Relation::Vee => ap && tr,
        Relation::Wedge => le(p.d, p.b) && nf,
        Relation::Bo => p.b == p.d && tr,
    })
}

/// `x ∧ y = (0 | b ∨ d)`, characterized as `ab ≤ c'd` and `cd ≤ a'b`.
pub fn orthogonal(x: &Conditional, y: &Conditional) -> Result<bool> {
    let p = Parts::of(x, y)?;
    Ok(le(p.ab, p.c_false()) && le(p.cd, p.a_false()))
}

/// The member `(a'bx | ab ∨ y)` of the family of conditionals orthogonal
/// to `c = (a|b)`.
pub fn ortho_family_member(c: &Conditional, x: &Event, y: &Event) -> Result<Conditional> {
    let falsifier = c.falsifier().meet(x)?;
    let condition = c.consequent().join(y)?;
    Conditional::new(falsifier, condition)
}

/// The truth of either conditional makes the other applicable:
/// `ab ≤ d` and `cd ≤ b`.
pub fn sim_verifiable(x: &Conditional, y: &Conditional) -> Result<bool> {
    let p = Parts::of(x, y)?;
    Ok(le(p.ab, p.d) && le(p.cd, p.b))
}

/// The falsity of either conditional makes the other applicable:
/// `a'b ≤ d` and `c'd ≤ b`.
pub fn sim_falsifiable(x: &Conditional, y: &Conditional) -> Result<bool> {
    let p = Parts::of(x, y)?;
    Ok(le(p.a_false(), p.d) && le(p.c_false(), p.b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Compatibility {
    /// Equal conditions.
    pub compatible: bool,
    /// Equal, nonempty conditions: both live in a common Boolean subalgebra.
    pub in_common_subalgebra: bool,
}

pub fn compatible(x: &Conditional, y: &Conditional) -> Result<Compatibility> {
    let p = Parts::of(x, y)?;
    let compatible = p.b == p.d;
    Ok(Compatibility {
        compatible,
        in_common_subalgebra: compatible && p.b != 0,
    })
}

/// Seven graded forms of simultaneous verifiability for `x = (a₁|a₂)` and
/// `y = (b₁|b₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifiabilityProfile {
    pub flags: [bool; 7],
}

impl VerifiabilityProfile {
    pub const LABELS: [&'static str; 7] = [
        "true-implies-applicable",
        "false-implies-applicable",
        "simultaneously-verifiable",
        "simultaneously-falsifiable",
        "negation-verifiable",
        "applicable-implies-applicable",
        "compatible",
    ];

    /// Flag `i`, numbered from 1.
    pub fn flag(&self, i: usize) -> bool {
        self.flags[i - 1]
    }
}

pub fn profile(x: &Conditional, y: &Conditional) -> Result<VerifiabilityProfile> {
    let p = Parts::of(x, y)?;
    let (a1a2, a2, b1b2, b2) = (p.ab, p.b, p.cd, p.d);
    let a1_false = p.a_false();
    let b1_false = p.c_false();
    Ok(VerifiabilityProfile {
        flags: [
            le(a1a2, b2),
            le(a1_false, b2),
            le(a1a2, b2) && le(b1b2, a2),
            le(b1_false, a2) && le(a1_false, b2),
            le(a1_false, b2) && le(b1b2, a2),
            le(a2, b2),
            a2 == b2,
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    /// The closure of the generators, sorted.
    pub members: Vec<Conditional>,
    pub is_boolean: bool,
}

/// Closes `{x, y}` under conjunction, disjunction and negation and decides
/// whether the result is a Boolean algebra under those operations.
pub fn generated_subalgebra(x: &Conditional, y: &Conditional) -> Result<Subalgebra> {
    generated_subalgebra_with(&Operations::standard(), x, y)
}

pub fn generated_subalgebra_with(
    ops: &Operations,
    x: &Conditional,
    y: &Conditional,
) -> Result<Subalgebra> {
    x.condition().same_space(&y.condition())?;
    let n = x.tag().len();
    if n > MAX_SUBALGEBRA_ATOMS {
        return Err(Error::TooLarge {
            what: "subalgebra generation",
            n,
            max: MAX_SUBALGEBRA_ATOMS,
        });
    }
    let members = closure(ops, &[*x, *y])?;
    let is_boolean = is_boolean(ops, &members)?;
    Ok(Subalgebra {
        members,
        is_boolean,
    })
}

fn closure(ops: &Operations, generators: &[Conditional]) -> Result<Vec<Conditional>> {
    let mut set: BTreeSet<Conditional> = generators.iter().copied().collect();
    loop {
        let current: Vec<Conditional> = set.iter().copied().collect();
        let mut grew = false;
        for (i, p) in current.iter().enumerate() {
            grew |= set.insert((ops.negate)(p));
            for q in &current[i..] {
                grew |= set.insert((ops.and)(p, q)?);
                grew |= set.insert((ops.and)(q, p)?);
                grew |= set.insert((ops.or)(p, q)?);
                grew |= set.insert((ops.or)(q, p)?);
            }
        }
        if !grew {
            return Ok(set.into_iter().collect());
        }
    }
}

fn is_boolean(ops: &Operations, members: &[Conditional]) -> Result<bool> {
    let Some(first) = members.first() else {
        return Ok(false);
    };
    let zero = (ops.and)(first, &(ops.negate)(first))?;
    let unit = (ops.or)(first, &(ops.negate)(first))?;
    if zero == unit {
        return Ok(false);
    }
    let and = ops.and;
    let or = ops.or;
    for m in members {
        let neg = (ops.negate)(m);
        if and(m, &neg)? != zero
            || or(m, &neg)? != unit
            || and(m, &zero)? != zero
            || or(m, &unit)? != unit
            || or(m, &zero)? != *m
            || and(m, &unit)? != *m
        {
            return Ok(false);
        }
    }
    for p in members {
        for q in members {
            if and(p, q)? != and(q, p)?
                || or(p, q)? != or(q, p)?
                || and(p, &or(p, q)?)? != *p
                || or(p, &and(p, q)?)? != *p
            {
                return Ok(false);
            }
            for r in members {
                if and(p, &or(q, r)?)? != or(&and(p, q)?, &and(p, r)?)?
                    || or(p, &and(q, r)?)? != and(&or(p, q)?, &or(p, r)?)?
                    || and(p, &and(q, r)?)? != and(&and(p, q)?, r)?
                    || or(p, &or(q, r)?)? != or(&or(p, q)?, r)?
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
