//! Randomized invariants over spaces too large to enumerate.

mod common;

use std::sync::OnceLock;

use bfrac::prob::Mode;
use bfrac::rel::{self, Relation};
use bfrac::trival::{tt_and, tt_given, tt_or};
use bfrac::{Conditional, Error, Measure, Operations, SampleSpace};
use common::pointwise;
use num_rational::BigRational;
use proptest::prelude::*;

const N: usize = 10;

/// One space for every generated value: each new space gets its own tag.
fn space() -> SampleSpace {
    static SPACE: OnceLock<SampleSpace> = OnceLock::new();
    SPACE
        .get_or_init(|| SampleSpace::numbered(N).unwrap())
        .clone()
}

fn arb_cond() -> impl Strategy<Value = Conditional> {
    (0u64..1 << N, 0u64..1 << N).prop_map(|(a, b)| {
        let s = space();
        Conditional::new(s.event_from_bits(a).unwrap(), s.event_from_bits(b).unwrap()).unwrap()
    })
}

fn arb_measure() -> impl Strategy<Value = Measure> {
    prop::collection::vec(0u64..4, N)
        .prop_filter("positive total", |w| w.iter().any(|&x| x > 0))
        .prop_map(|w| Measure::from_integers(&space(), &w).unwrap())
}

fn bits(c: &Conditional) -> (u64, u64) {
    (c.consequent().bits(), c.condition().bits())
}

proptest! {
    #[test]
    fn connectives_agree_with_truth_tables(x in arb_cond(), y in arb_cond()) {
        let s = space();
        prop_assert_eq!(x.and(&y).unwrap(), pointwise(&s, tt_and, &x, &y));
        prop_assert_eq!(x.or(&y).unwrap(), pointwise(&s, tt_or, &x, &y));
        prop_assert_eq!(x.given(&y).unwrap(), pointwise(&s, tt_given, &x, &y));
    }

    #[test]
    fn lattice_like_identities(x in arb_cond(), y in arb_cond(), z in arb_cond()) {
        prop_assert_eq!(x.and(&y).unwrap(), y.and(&x).unwrap());
        prop_assert_eq!(x.or(&y).unwrap(), y.or(&x).unwrap());
        prop_assert_eq!(x.and(&y.and(&z).unwrap()).unwrap(), x.and(&y).unwrap().and(&z).unwrap());
        prop_assert_eq!(x.or(&y.or(&z).unwrap()).unwrap(), x.or(&y).unwrap().or(&z).unwrap());
        prop_assert_eq!(x.or(&y).unwrap().negate(), x.negate().and(&y.negate()).unwrap());
        prop_assert_eq!(x.and(&y).unwrap().negate(), x.negate().or(&y.negate()).unwrap());
        prop_assert_eq!(x.negate().negate(), x);
        prop_assert_eq!(x.and(&y).unwrap(), y.and(&x.given(&y).unwrap()).unwrap());
    }

    #[test]
    fn distributivity_side_condition(x in arb_cond(), y in arb_cond(), z in arb_cond()) {
        let (ab, _) = bits(&x);
        let (cd, d) = bits(&y);
        let (ef, f) = bits(&z);
        let le = |p: u64, q: u64| p & !q == 0;
        let lhs = x.and(&y.or(&z).unwrap()).unwrap();
        let rhs = x.and(&y).unwrap().or(&x.and(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs == rhs, le(ab & f & !ef, d) && le(ab & d & !cd, f));
    }

    #[test]
    fn projection_and_sum(b in arb_cond(), a in arb_cond()) {
        prop_assert_eq!(b.sasaki(&a).unwrap(), Operations::standard().sasaki_composed(&b, &a).unwrap());
        prop_assert_eq!(b.sasaki(&b.sasaki(&a).unwrap()).unwrap(), b.sasaki(&a).unwrap());
        prop_assert_eq!(b.osum(&a).unwrap(), a.osum(&b).unwrap());
        let (_, cond) = bits(&b);
        prop_assert_eq!(bits(&b.osum(&b.negate()).unwrap()), (cond, cond));
    }

    #[test]
    fn orthogonality_is_the_zero_conjunction(x in arb_cond(), y in arb_cond()) {
        let zero = Conditional::zero(x.condition().join(&y.condition()).unwrap());
        prop_assert_eq!(rel::orthogonal(&x, &y).unwrap(), x.and(&y).unwrap() == zero);
        prop_assert_eq!(rel::orthogonal(&x, &y).unwrap(), rel::holds(Relation::Pm, &x, &y.negate()).unwrap());
    }

    #[test]
    fn monotonic_order_is_a_partial_order(x in arb_cond(), y in arb_cond(), z in arb_cond()) {
        let pm = |p: &Conditional, q: &Conditional| rel::holds(Relation::Pm, p, q).unwrap();
        prop_assert!(pm(&x, &x));
        if pm(&x, &y) && pm(&y, &x) {
            prop_assert_eq!(x, y);
        }
        if pm(&x, &y) && pm(&y, &z) {
            prop_assert!(pm(&x, &z));
        }
        if pm(&x, &y) {
            prop_assert!(pm(&y.negate(), &x.negate()));
        }
    }

    #[test]
    fn probabilities_are_consistent(m in arb_measure(), x in arb_cond(), y in arb_cond()) {
        let direct_or = m.p_cond(&x.or(&y).unwrap());
        let direct_and = m.p_cond(&x.and(&y).unwrap());
        match (&direct_or, m.p_or_formula(&x, &y)) {
            (Ok(p), Ok(t)) => prop_assert_eq!(p, &t.value),
            (Err(Error::ZeroCondition), Err(Error::ZeroCondition)) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
        if let Ok(p) = &direct_or {
            prop_assert_eq!(p, &m.p_superposition(&x, &y, Mode::Or).unwrap().value);
            prop_assert_eq!(direct_and.as_ref().unwrap(), &m.p_superposition(&x, &y, Mode::And).unwrap().value);
        }
        if let Ok(p) = m.p_cond(&x) {
            let one = BigRational::from_integer(1.into());
            let negated = m.p_cond(&x.negate()).unwrap();
            prop_assert_eq!(negated.value(), &(one - p.value()));
        }
    }
}

#[test]
fn operands_from_different_spaces_are_rejected() {
    let s = space();
    let t = SampleSpace::numbered(N).unwrap();
    let x = Conditional::certain(s.full());
    let y = Conditional::certain(t.full());
    assert_eq!(x.and(&y), Err(Error::SpaceMismatch));
    assert_eq!(x.or(&y), Err(Error::SpaceMismatch));
    assert_eq!(x.given(&y), Err(Error::SpaceMismatch));
    assert_eq!(x.osum(&y), Err(Error::SpaceMismatch));
    assert_eq!(rel::holds(Relation::Tr, &x, &y), Err(Error::SpaceMismatch));
    assert_eq!(Measure::uniform(&t).p_cond(&x), Err(Error::SpaceMismatch));
}
