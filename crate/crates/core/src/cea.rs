//! Conditional events ("Boolean fractions") and their operations.
//!
//! A conditional `(a|b)` is stored in normal form `(a∧b | b)`, so two
//! conditionals are equal exactly when their conditions agree and their
//! consequents agree inside the condition. The unique conditional with an
//! empty condition is the undefined conditional `U`.

use std::fmt;

use crate::error::Result;
use crate::event::{Event, SampleSpace, SpaceTag};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conditional {
    condition: Event,
    consequent: Event,
}

impl fmt::Debug for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:#b}|{:#b})",
            self.consequent.bits(),
            self.condition.bits()
        )
    }
}

impl Conditional {
    /// `(a|b)` in normal form.
    pub fn new(consequent: Event, condition: Event) -> Result<Conditional> {
        consequent.same_space(&condition)?;
        Ok(Conditional::from_bits(
            condition.tag(),
            consequent.bits(),
            condition.bits(),
        ))
    }

    /// `(e|Ω)`: a plain event seen as a conditional.
    pub fn certain(event: Event) -> Conditional {
        Conditional::from_bits(event.tag(), event.bits(), event.tag().full_mask())
    }

    pub fn undefined(space: &SampleSpace) -> Conditional {
        Conditional::from_bits(space.tag(), 0, 0)
    }

    /// `(0|b)`.
    pub fn zero(condition: Event) -> Conditional {
        Conditional::from_bits(condition.tag(), 0, condition.bits())
    }

    /// `(1|b)`.
    pub fn one(condition: Event) -> Conditional {
        Conditional::from_bits(condition.tag(), condition.bits(), condition.bits())
    }

    pub(crate) fn from_bits(tag: SpaceTag, consequent: u64, condition: u64) -> Conditional {
        Conditional {
            consequent: Event::from_bits(tag, consequent & condition),
            condition: Event::from_bits(tag, condition),
        }
    }

    /// The stored consequent, already intersected with the condition.
    pub fn consequent(&self) -> Event {
        self.consequent
    }

    pub fn condition(&self) -> Event {
        self.condition
    }

    pub fn tag(&self) -> SpaceTag {
        self.condition.tag()
    }

    pub fn is_undefined(&self) -> bool {
        self.condition.is_empty()
    }

    /// Atoms where the conditional is false: `a'b`.
    pub fn falsifier(&self) -> Event {
        Event::from_bits(self.tag(), self.condition.bits() & !self.consequent.bits())
    }

    fn bits(&self) -> (u64, u64) {
        (self.consequent.bits(), self.condition.bits())
    }

    fn pair(&self, other: &Conditional) -> Result<((u64, u64), (u64, u64))> {
        self.condition.same_space(&other.condition)?;
        Ok((self.bits(), other.bits()))
    }

    fn mask(&self) -> u64 {
        self.tag().full_mask()
    }

    /// `(a|b)' = (a'|b)`.
    pub fn negate(&self) -> Conditional {
        let (ab, b) = self.bits();
        Conditional::from_bits(self.tag(), !ab, b)
    }

    /// `(ab ∨ cd | b ∨ d)`.
    pub fn or(&self, other: &Conditional) -> Result<Conditional> {
        let ((ab, b), (cd, d)) = self.pair(other)?;
        Ok(Conditional::from_bits(self.tag(), ab | cd, b | d))
    }

    /// `(abd' ∨ abcd ∨ b'cd | b ∨ d)`.
    pub fn and(&self, other: &Conditional) -> Result<Conditional> {
        let ((ab, b), (cd, d)) = self.pair(other)?;
        let m = self.mask();
        let cons = (ab & !d & m) | (ab & cd) | (!b & m & cd);
        Ok(Conditional::from_bits(self.tag(), cons, b | d))
    }

    /// Iterated conditioning `((a|b) | (c|d)) = (a | b(c ∨ d'))`.
    pub fn given(&self, other: &Conditional) -> Result<Conditional> {
        let ((ab, b), (cd, d)) = self.pair(other)?;
        let m = self.mask();
        Ok(Conditional::from_bits(self.tag(), ab, b & (cd | (!d & m))))
    }

    /// `(abc'd ∨ a'bcd | b ∨ d)`. Total: defined for every pair, orthogonal
    /// or not.
    pub fn osum(&self, other: &Conditional) -> Result<Conditional> {
        let ((ab, b), (cd, d)) = self.pair(other)?;
        let c_false = d & !cd;
        let a_false = b & !ab;
        Ok(Conditional::from_bits(
            self.tag(),
            (ab & c_false) | (a_false & cd),
            b | d,
        ))
    }

    /// Sasaki projection of `target` onto `self`:
    /// `self ∧ (self' ∨ target)`, computed in closed form as
    /// `(a₁a₂(b₂' ∨ b₁) | a₂ ∨ b₂)` where `self = (b₁|b₂)` and
    /// `target = (a₁|a₂)`.
    pub fn sasaki(&self, target: &Conditional) -> Result<Conditional> {
        let ((b1b2, b2), (a1a2, a2)) = self.pair(target)?;
        let m = self.mask();
        Ok(Conditional::from_bits(
            self.tag(),
            a1a2 & ((!b2 & m) | b1b2),
            a2 | b2,
        ))
    }
}

type Binary = fn(&Conditional, &Conditional) -> Result<Conditional>;
type Unary = fn(&Conditional) -> Conditional;

/// The four basic operations as a swappable table. The law checker runs
/// against a table so that a deliberately broken operation can be plugged
/// in to confirm the checks are not vacuous.
#[derive(Clone, Copy)]
pub struct Operations {
    pub and: Binary,
    pub or: Binary,
    pub negate: Unary,
    pub given: Binary,
}

impl Default for Operations {
    fn default() -> Self {
        Operations::standard()
    }
}

impl fmt::Debug for Operations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Operations").finish_non_exhaustive()
    }
}

impl Operations {
    pub fn standard() -> Operations {
        Operations {
            and: Conditional::and,
            or: Conditional::or,
            negate: Conditional::negate,
            given: Conditional::given,
        }
    }

    /// `b ∧ (b' ∨ a)` composed from the table's operations.
    pub fn sasaki_composed(&self, b: &Conditional, a: &Conditional) -> Result<Conditional> {
        (self.and)(b, &(self.or)(&(self.negate)(b), a)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    struct Die {
        s: SampleSpace,
    }

    impl Die {
        fn new() -> Die {
            Die {
                s: SampleSpace::new(["1", "2", "3", "4", "5", "6"]).unwrap(),
            }
        }
        fn ev(&self, atoms: &[&str]) -> Event {
            self.s.event(atoms.iter().copied()).unwrap()
        }
        fn c(&self, a: &[&str], b: &[&str]) -> Conditional {
            Conditional::new(self.ev(a), self.ev(b)).unwrap()
        }
    }

    const EVEN: &[&str] = &["2", "4", "6"];
    const ODD: &[&str] = &["1", "3", "5"];
    const LT4: &[&str] = &["1", "2", "3"];
    const LT5: &[&str] = &["1", "2", "3", "4"];
    const ALL: &[&str] = &["1", "2", "3", "4", "5", "6"];
    const WIN: &[&str] = &["1", "2", "3", "4", "6"];

    #[test]
    fn make_normalizes() {
        let d = Die::new();
        let c = d.c(&["1", "2", "3"], WIN);
        assert_eq!(c.consequent(), d.ev(LT4));
        assert_eq!(c.condition(), d.ev(WIN));
        assert_eq!(d.c(ALL, &[]), Conditional::undefined(&d.s));
        assert!(d.c(ALL, &[]).is_undefined());
        assert_eq!(d.c(LT4, EVEN), d.c(&["2"], EVEN));
        assert_eq!(d.c(LT4, EVEN).consequent(), d.ev(&["2"]));
    }

    #[test]
    fn negation() {
        let d = Die::new();
        let two_even = d.c(&["2"], EVEN);
        assert_eq!(two_even.negate(), d.c(&["4", "6"], EVEN));
        assert_eq!(two_even.negate().negate(), two_even);
        let u = Conditional::undefined(&d.s);
        assert_eq!(u.negate(), u);
    }

    #[test]
    fn disjunction_examples() {
        let d = Die::new();
        let x = d.c(&["2"], EVEN);
        let y = d.c(LT4, LT5);
        assert_eq!(x.or(&y).unwrap(), d.c(LT4, WIN));
        let z = d.c(EVEN, EVEN).or(&d.c(&["5"], ODD)).unwrap();
        assert_eq!(z, d.c(&["2", "4", "5", "6"], ALL));
        let zero = d.c(&[], ALL);
        assert_eq!(x.or(&zero).unwrap(), d.c(&["2"], ALL));
    }

    #[test]
    fn conjunction_examples() {
        let d = Die::new();
        let x = d.c(&["2"], EVEN);
        let y = d.c(LT4, LT5);
        assert_eq!(x.and(&y).unwrap(), d.c(LT4, WIN));
        let zero = d.c(&[], ALL);
        let one = d.c(ALL, ALL);
        assert_eq!(x.and(&zero).unwrap(), zero);
        // a ∨ b' with a = {2}, b = even: {1,2,3,5}
        assert_eq!(x.and(&one).unwrap(), d.c(&["1", "2", "3", "5"], ALL));
    }

    #[test]
    fn undefined_is_neutral_for_and_or() {
        let d = Die::new();
        let u = Conditional::undefined(&d.s);
        let x = d.c(&["2"], EVEN);
        assert_eq!(x.or(&u).unwrap(), x);
        assert_eq!(x.and(&u).unwrap(), x);
        assert_eq!(u.and(&u).unwrap(), u);
    }

    #[test]
    fn iterated_conditioning_examples() {
        let d = Die::new();
        let x = d.c(&["2"], EVEN);
        let y = d.c(LT4, LT5);
        assert_eq!(x.given(&y).unwrap(), d.c(&["2"], &["2", "6"]));
        let e = Conditional::certain(d.ev(LT4));
        let f = Conditional::certain(d.ev(EVEN));
        assert_eq!(e.given(&f).unwrap(), d.c(&["2"], EVEN));
        // Disjoint A={1}, B={2}: ((B | A∨B) | B') = (0|A).
        let inner = d.c(&["2"], &["1", "2"]);
        let cond = Conditional::certain(d.ev(&["2"]).complement());
        assert_eq!(inner.given(&cond).unwrap(), d.c(&[], &["1"]));
    }

    #[test]
    fn orthogonal_sum_examples() {
        let d = Die::new();
        let x = d.c(&["2"], EVEN);
        let y = d.c(LT4, LT5);
        assert_eq!(x.osum(&Conditional::zero(d.ev(EVEN))).unwrap(), x);
        assert_eq!(x.osum(&x).unwrap(), Conditional::zero(d.ev(EVEN)));
        assert_eq!(x.osum(&x.negate()).unwrap(), Conditional::one(d.ev(EVEN)));
        assert_eq!(x.osum(&y).unwrap(), d.c(&[], WIN));
    }

    #[test]
    fn sasaki_examples() {
        let d = Die::new();
        let b = d.c(LT4, LT5);
        let a = d.c(&["2"], EVEN);
        let ops = Operations::standard();
        assert_eq!(b.sasaki(&a).unwrap(), d.c(&["2"], WIN));
        assert_eq!(ops.sasaki_composed(&b, &a).unwrap(), d.c(&["2"], WIN));
        assert_eq!(b.sasaki(&b).unwrap(), b);
        let p = b.sasaki(&a).unwrap();
        assert_eq!(b.sasaki(&p).unwrap(), p);
    }

    #[test]
    fn space_mismatch_is_reported() {
        let d1 = Die::new();
        let d2 = Die::new();
        let x = d1.c(&["2"], EVEN);
        let y = d2.c(&["2"], EVEN);
        assert_eq!(x.or(&y), Err(Error::SpaceMismatch));
        assert_eq!(x.and(&y), Err(Error::SpaceMismatch));
        assert_eq!(x.given(&y), Err(Error::SpaceMismatch));
        assert_eq!(x.osum(&y), Err(Error::SpaceMismatch));
        assert_eq!(x.sasaki(&y), Err(Error::SpaceMismatch));
        assert_eq!(
            Conditional::new(d1.ev(EVEN), d2.ev(EVEN)),
            Err(Error::SpaceMismatch)
        );
    }
}
