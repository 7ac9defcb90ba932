//! Schay's alternative operations on conditional events.
//!
//! `cap_s`/`cup_s` and `and_s`/`vee_s` each form a distributive lattice
//! together with negation. `cup_s` and `and_s` coincide with
//! [`Conditional::or`] and [`Conditional::and`]; they are computed here
//! from their own formulas so the coincidence can be checked.

use crate::cea::Conditional;
use crate::error::{Error, Result};
use crate::event::Event;

fn parts(x: &Conditional, y: &Conditional) -> Result<(u64, u64, u64, u64, u64)> {
    x.condition().same_space(&y.condition())?;
    Ok((
        x.consequent().bits(),
        x.condition().bits(),
        y.consequent().bits(),
        y.condition().bits(),
        x.tag().full_mask(),
    ))
}

fn build(like: &Conditional, consequent: u64, condition: u64) -> Conditional {
    Conditional::from_bits(like.tag(), consequent, condition)
}

/// `(A ∩ C | B ∩ D)`.
pub fn cap_s(x: &Conditional, y: &Conditional) -> Result<Conditional> {
    let (a, b, c, d, _) = parts(x, y)?;
    Ok(build(x, a & c, b & d))
}

/// `(AB ∪ CD | B ∪ D)`.
pub fn cup_s(x: &Conditional, y: &Conditional) -> Result<Conditional> {
    let (a, b, c, d, _) = parts(x, y)?;
    Ok(build(x, (a & b) | (c & d), b | d))
}

/// `(ABCD ∪ ABD' ∪ B'CD | B ∪ D)`.
pub fn and_s(x: &Conditional, y: &Conditional) -> Result<Conditional> {
    let (a, b, c, d, m) = parts(x, y)?;
    let cons = (a & b & c & d) | (a & b & !d & m) | (!b & m & c & d);
    Ok(build(x, cons, b | d))
}

/// `(A ∪ C | B ∩ D)`.
pub fn vee_s(x: &Conditional, y: &Conditional) -> Result<Conditional> {
    let (a, b, c, d, _) = parts(x, y)?;
    Ok(build(x, a | c, b & d))
}

/// `~(A|B) = (A'|B)`.
pub fn neg_s(x: &Conditional) -> Conditional {
    let m = x.tag().full_mask();
    build(x, !x.consequent().bits() & m, x.condition().bits())
}

/// Conditions the disjoint pair `(B | A ∪ B)` by `B'`, which lands on
/// `(0|A)`.
pub fn iteration_example(a: Event, b: Event) -> Result<Conditional> {
    if !a.meet(&b)?.is_empty() {
        return Err(Error::NotDisjoint);
    }
    let inner = Conditional::new(b, a.join(&b)?)?;
    let by = Conditional::certain(b.complement());
    inner.given(&by)
}
