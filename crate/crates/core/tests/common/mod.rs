//! Fixtures and an independent pointwise oracle shared by the integration
//! tests.

#![allow(dead_code)]

use bfrac::lang::{parse_space, SpaceDoc};
use bfrac::trival::eval_at;
use bfrac::{Conditional, Event, SampleSpace, TruthValue};

pub const DIE_FILE: &str = "space DIE
atoms 1 2 3 4 5 6
event two  = {2}
event even = {2,4,6}
event odd  = {1,3,5}
event lt4  = {1,2,3}
event lt5  = {1,2,3,4}
event five = {5}
measure uniform = 1 1 1 1 1 1
";

pub fn die() -> SpaceDoc {
    parse_space(DIE_FILE).expect("fixture parses")
}

pub fn ev(space: &SampleSpace, atoms: &[&str]) -> Event {
    space.event(atoms.iter().copied()).expect("known atoms")
}

pub fn cond(space: &SampleSpace, a: &[&str], b: &[&str]) -> Conditional {
    Conditional::new(ev(space, a), ev(space, b)).unwrap()
}

/// Rebuilds a conditional from its value at each atom: true atoms form the
/// consequent, true and false atoms together the condition.
pub fn from_values(space: &SampleSpace, values: &[TruthValue]) -> Conditional {
    let names = |keep: &dyn Fn(TruthValue) -> bool| -> Vec<&str> {
        space
            .atoms()
            .iter()
            .zip(values)
            .filter(|(_, v)| keep(**v))
            .map(|(a, _)| a.as_str())
            .collect()
    };
    let truth = names(&|v| v == TruthValue::True);
    let defined = names(&|v| v != TruthValue::Undefined);
    cond(space, &truth, &defined)
}

/// Applies a three-valued connective atom by atom.
pub fn pointwise(
    space: &SampleSpace,
    op: fn(TruthValue, TruthValue) -> TruthValue,
    x: &Conditional,
    y: &Conditional,
) -> Conditional {
    let values: Vec<TruthValue> = (0..space.len())
        .map(|i| op(eval_at(x, i).unwrap(), eval_at(y, i).unwrap()))
        .collect();
    from_values(space, &values)
}
