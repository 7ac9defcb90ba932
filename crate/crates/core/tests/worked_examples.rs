//! The worked examples on the die, checked against literal values and,
//! where a value follows by calculation, against an independent oracle.

mod common;

use bfrac::lang::{format_conditional, lower, parse_expr};
use bfrac::prob::Mode;
use bfrac::rel::{self, Relation};
use bfrac::trival::{eval_at, tt_and, tt_given, tt_not, tt_or, TruthValue};
use bfrac::{schay, Conditional, Error, Measure, Operations, Probability};
use common::{cond, die, ev, pointwise};
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

struct Die {
    doc: bfrac::lang::SpaceDoc,
}

impl Die {
    fn new() -> Die {
        Die { doc: die() }
    }

    fn ev(&self, atoms: &[&str]) -> bfrac::Event {
        ev(&self.doc.space, atoms)
    }

    fn named(&self, name: &str) -> bfrac::Event {
        self.doc.event(name).unwrap()
    }

    fn c(&self, a: &[&str], b: &[&str]) -> Conditional {
        cond(&self.doc.space, a, b)
    }

    fn show(&self, c: &Conditional) -> String {
        format_conditional(c, &self.doc.space)
    }

    fn eval(&self, src: &str) -> Conditional {
        lower(&parse_expr(src).unwrap(), &self.doc).unwrap()
    }

    fn uniform(&self) -> &Measure {
        self.doc.measure("uniform").unwrap()
    }

    /// x = ({2}|even) and y = ({1,2,3}|lt5), the two bets.
    fn bets(&self) -> (Conditional, Conditional) {
        (
            self.c(&["2"], &["2", "4", "6"]),
            self.c(&["1", "2", "3"], &["1", "2", "3", "4"]),
        )
    }
}

#[test]
fn event_lattice() {
    let d = Die::new();
    let s = &d.doc.space;
    let (even, odd, lt4, lt5) = (
        d.named("even"),
        d.named("odd"),
        d.named("lt4"),
        d.named("lt5"),
    );
    assert_eq!(even.meet(&lt4).unwrap(), d.ev(&["2"]));
    assert_eq!(even.meet(&odd).unwrap(), s.empty());
    assert_eq!(even.join(&lt5).unwrap(), d.ev(&["1", "2", "3", "4", "6"]));
    assert_eq!(even.join(&odd).unwrap(), s.full());
    assert_eq!(even.complement(), odd);
    assert_eq!(lt5.complement(), d.ev(&["5", "6"]));
    assert!(d.ev(&["2"]).leq(&even).unwrap());
    assert!(!even.leq(&lt4).unwrap());
    for e in s.enumerate_events().unwrap() {
        assert_eq!(e.meet(&s.full()).unwrap(), e);
        assert_eq!(e.join(&s.empty()).unwrap(), e);
        assert_eq!(e.complement().complement(), e);
        assert!(e.leq(&e).unwrap());
    }
    for (n, count) in [(1, 2), (3, 8), (4, 16)] {
        let space = bfrac::SampleSpace::numbered(n).unwrap();
        assert_eq!(space.enumerate_events().unwrap().count(), count);
    }
}

#[test]
fn normal_forms() {
    let d = Die::new();
    let s = &d.doc.space;
    let bet = d.c(&["1", "2", "3"], &["1", "2", "3", "4", "6"]);
    assert_eq!(d.show(&bet), "({1,2,3}|{1,2,3,4,6})");
    assert_eq!(
        Conditional::new(s.full(), s.empty()).unwrap(),
        Conditional::undefined(s)
    );
    let made = Conditional::new(d.named("lt4"), d.named("even")).unwrap();
    let expected = d.named("lt4").meet(&d.named("even")).unwrap();
    assert_eq!(made.consequent(), expected);
    assert_eq!(d.show(&made), "({2}|{2,4,6})");
}

#[test]
fn negation() {
    let d = Die::new();
    let s = &d.doc.space;
    let x = d.c(&["2"], &["2", "4", "6"]);
    assert_eq!(x.negate(), d.c(&["4", "6"], &["2", "4", "6"]));
    assert_eq!(x.negate().negate(), x);
    assert_eq!(
        Conditional::undefined(s).negate(),
        Conditional::undefined(s)
    );
}

#[test]
fn disjunction_and_conjunction_of_the_bets() {
    let d = Die::new();
    let s = &d.doc.space;
    let (x, y) = d.bets();
    let or = x.or(&y).unwrap();
    assert_eq!(d.show(&or), "({1,2,3}|{1,2,3,4,6})");
    assert_eq!(or, pointwise(s, tt_or, &x, &y));

    let and = x.and(&y).unwrap();
    assert_eq!(and, pointwise(s, tt_and, &x, &y));
    assert_eq!(d.show(&and), "({1,2,3}|{1,2,3,4,6})");
    // ab·c'd = 0 = a'b·cd, so the two connectives agree here.
    assert_eq!(and, or);

    let sure = d.c(&["2", "4", "6"], &["2", "4", "6"]);
    let five = d.c(&["5"], &["1", "3", "5"]);
    let wider = sure.or(&five).unwrap();
    assert_eq!(d.show(&wider), "({2,4,5,6}|{1,2,3,4,5,6})");
    assert_eq!(wider, pointwise(s, tt_or, &sure, &five));
}

#[test]
fn zeros_and_units() {
    let d = Die::new();
    let s = &d.doc.space;
    let (x, _) = d.bets();
    let zero_one = Conditional::zero(s.full());
    let one_one = Conditional::one(s.full());
    assert_eq!(
        x.or(&zero_one).unwrap(),
        Conditional::certain(x.consequent())
    );
    assert_eq!(x.and(&zero_one).unwrap(), zero_one);
    let a_or_not_b = x.consequent().join(&x.condition().complement()).unwrap();
    assert_eq!(x.and(&one_one).unwrap(), Conditional::certain(a_or_not_b));
    assert_eq!(
        d.show(&x.and(&one_one).unwrap()),
        "({1,2,3,5}|{1,2,3,4,5,6})"
    );
}

#[test]
fn conditioning() {
    let d = Die::new();
    let s = &d.doc.space;
    let (x, y) = d.bets();
    let given = x.given(&y).unwrap();
    assert_eq!(given, pointwise(s, tt_given, &x, &y));
    // even ∧ ({1,2,3} ∨ {5,6}) = {2,6}.
    let cond = d
        .named("even")
        .meet(&y.consequent().join(&y.condition().complement()).unwrap())
        .unwrap();
    assert_eq!(given.condition(), cond);
    assert_eq!(d.show(&given), "({2}|{2,6})");
    for e in s.enumerate_events().unwrap().step_by(5) {
        for f in s.enumerate_events().unwrap().step_by(7) {
            let plain = Conditional::certain(e)
                .given(&Conditional::certain(f))
                .unwrap();
            assert_eq!(plain, Conditional::new(e.meet(&f).unwrap(), f).unwrap());
        }
    }
}

#[test]
fn orthogonal_sum_and_projection() {
    let d = Die::new();
    let (x, y) = d.bets();
    assert_eq!(x.osum(&Conditional::zero(x.condition())).unwrap(), x);
    assert_eq!(x.osum(&x).unwrap(), Conditional::zero(x.condition()));
    let sum = x.osum(&y).unwrap();
    assert_eq!(d.show(&sum), "({}|{1,2,3,4,6})");

    let proj = y.sasaki(&x).unwrap();
    assert_eq!(
        proj,
        Operations::standard().sasaki_composed(&y, &x).unwrap()
    );
    assert_eq!(d.show(&proj), "({2}|{1,2,3,4,6})");
    assert_eq!(x.sasaki(&x).unwrap(), x);
    assert_eq!(y.sasaki(&proj).unwrap(), proj);
}

#[test]
fn schay_operations() {
    let d = Die::new();
    let s = &d.doc.space;
    let (x, y) = d.bets();
    let unit = Conditional::one(s.full());
    let cap = schay::cap_s(&x, &y).unwrap();
    assert_eq!(
        cap,
        Conditional::new(
            x.consequent().meet(&y.consequent()).unwrap(),
            x.condition().meet(&y.condition()).unwrap()
        )
        .unwrap()
    );
    assert_eq!(d.show(&cap), "({2}|{2,4})");
    assert_eq!(schay::cap_s(&x, &x).unwrap(), x);
    assert_eq!(schay::cap_s(&x, &unit).unwrap(), x);

    assert_eq!(
        d.show(&schay::cup_s(&x, &y).unwrap()),
        "({1,2,3}|{1,2,3,4,6})"
    );
    assert_eq!(schay::cup_s(&x, &Conditional::undefined(s)).unwrap(), x);
    assert_eq!(schay::and_s(&x, &y).unwrap(), x.and(&y).unwrap());
    assert_eq!(schay::and_s(&x, &x).unwrap(), x);

    let vee = schay::vee_s(&x, &y).unwrap();
    assert_eq!(d.show(&vee), "({2}|{2,4})");
    assert_eq!(schay::vee_s(&x, &x).unwrap(), x);
    assert_eq!(
        schay::vee_s(&x, &unit).unwrap(),
        Conditional::one(x.condition())
    );

    let iterated = schay::iteration_example(d.ev(&["1"]), d.ev(&["2"])).unwrap();
    assert_eq!(d.show(&iterated), "({}|{1})");
    assert_eq!(
        schay::iteration_example(s.empty(), s.full()).unwrap(),
        Conditional::undefined(s)
    );
    let odd = d.named("odd");
    let by_hand = Conditional::new(d.ev(&["2"]), odd.join(&d.ev(&["2"])).unwrap())
        .unwrap()
        .given(&Conditional::certain(d.ev(&["2"]).complement()))
        .unwrap();
    assert_eq!(
        schay::iteration_example(odd, d.ev(&["2"])).unwrap(),
        by_hand
    );
    assert_eq!(d.show(&by_hand), "({}|{1,3,5})");
    assert_eq!(
        schay::iteration_example(odd, d.named("lt4")),
        Err(Error::NotDisjoint)
    );
}

#[test]
fn truth_values() {
    use TruthValue::{False as F, True as T, Undefined as U};
    let d = Die::new();
    let (x, _) = d.bets();
    let at = |atom: &str| eval_at(&x, d.doc.space.atom_index(atom).unwrap()).unwrap();
    assert_eq!((at("2"), at("4"), at("5")), (T, F, U));
    assert_eq!((tt_and(T, U), tt_and(F, U), tt_and(U, U)), (T, F, U));
    assert_eq!((tt_or(F, U), tt_or(U, T), tt_or(U, U)), (F, T, U));
    assert_eq!((tt_given(T, F), tt_given(F, U), tt_given(U, T)), (U, F, U));
    assert_eq!((tt_not(T), tt_not(U)), (F, U));
    for p in TruthValue::ALL {
        assert_eq!(tt_not(tt_not(p)), p);
    }
}

#[test]
fn probabilities_of_the_bets() {
    let d = Die::new();
    let m = d.uniform();
    let s = &d.doc.space;
    let (x, y) = d.bets();
    assert_eq!(
        m.p_event(&d.named("even")).unwrap(),
        Probability::ratio(1, 2)
    );
    assert_eq!(m.p_event(&s.empty()).unwrap(), Probability::zero());
    assert_eq!(m.p_event(&s.full()).unwrap(), Probability::one());
    assert_eq!(m.p_cond(&x).unwrap(), Probability::ratio(1, 3));
    assert_eq!(m.p_cond(&y).unwrap(), Probability::ratio(3, 4));
    assert_eq!(
        m.p_cond(&x.or(&y).unwrap()).unwrap(),
        Probability::ratio(3, 5)
    );
    let wider = d.eval("(even|even) or (five|odd)");
    assert_eq!(m.p_cond(&wider).unwrap(), Probability::ratio(2, 3));
}

#[test]
fn three_term_formula_factors() {
    let d = Die::new();
    let m = d.uniform();
    let (x, y) = d.bets();
    let t = m.p_or_formula(&x, &y).unwrap();
    assert_eq!(t.first.unwrap().value(), &q(1, 3));
    assert_eq!(t.first_weight.value(), &q(3, 5));
    assert_eq!(t.second.unwrap().value(), &q(3, 4));
    assert_eq!(t.second_weight.value(), &q(4, 5));
    assert_eq!(t.overlap.unwrap().value(), &q(1, 2));
    assert_eq!(t.overlap_weight.value(), &q(2, 5));
    assert_eq!(
        q(1, 3) * q(3, 5) + q(3, 4) * q(4, 5) - q(1, 2) * q(2, 5),
        q(3, 5)
    );
    assert_eq!(t.value, Probability::ratio(3, 5));
    let same = m.p_or_formula(&x, &x).unwrap();
    assert_eq!(same.value, m.p_cond(&x).unwrap());
}

#[test]
fn superposition_terms() {
    let d = Die::new();
    let m = d.uniform();
    let (x, y) = d.bets();
    let or = m.p_superposition(&x, &y, Mode::Or).unwrap();
    assert_eq!(or.value, m.p_cond(&x.or(&y).unwrap()).unwrap());
    assert_eq!(or.value, Probability::ratio(3, 5));
    let and = m.p_superposition(&x, &x, Mode::And).unwrap();
    assert_eq!(and.value, m.p_cond(&x).unwrap());
}

#[test]
fn partition_expansion() {
    let d = Die::new();
    let m = d.uniform();
    let s = &d.doc.space;
    let lt4 = d.named("lt4");
    let halves = [d.named("even"), d.named("odd")];
    assert_eq!(
        m.partition_expansion(&lt4, &halves).unwrap().value(),
        &(q(1, 3) * q(1, 2) + q(2, 3) * q(1, 2))
    );
    assert_eq!(
        m.partition_expansion(&lt4, &[s.full()]).unwrap(),
        m.p_event(&lt4).unwrap()
    );
    let u = d.named("lt5");
    assert_eq!(
        m.partition_expansion(&lt4, &[u]).unwrap(),
        m.p_cond(&Conditional::new(lt4, u).unwrap()).unwrap()
    );
}

#[test]
fn additive_law_on_the_die() {
    let d = Die::new();
    let m = d.uniform();
    let (one, two, three) = (d.ev(&["1"]), d.ev(&["2"]), d.ev(&["3"]));
    let (odd, even) = (d.named("odd"), d.named("even"));
    let r = m.additive_law_check(&one, &odd, &two, &even).unwrap();
    assert_eq!(r.lhs.value(), &q(2, 6));
    assert_eq!(r.lhs.value(), &q(1, 3));
    assert_eq!(r.rhs, q(1, 3) + q(1, 3));
    assert!(!r.holds);
    assert!(r.cases.is_empty());

    let r = m.additive_law_check(&one, &odd, &three, &odd).unwrap();
    let direct = m
        .p_cond(&Conditional::new(one.join(&three).unwrap(), odd).unwrap())
        .unwrap();
    assert_eq!(r.lhs, direct);
    assert_eq!(r.lhs.value(), &q(2, 3));
    assert_eq!(r.rhs, q(2, 3));
    assert!(r.holds);
    assert_eq!(r.cases, vec![4]);
}

#[test]
fn relations_on_the_die() {
    let d = Die::new();
    let (x, y) = d.bets();
    assert!(rel::holds(Relation::Tr, &x, &y).unwrap());
    assert!(!rel::holds(Relation::Ap, &x, &y).unwrap());
    assert!(rel::holds(Relation::Pm, &x, &x).unwrap());

    let z = d.c(&["4"], &["2", "4", "5"]);
    // Orthogonal means x ∧ z = (0 | b ∨ d).
    assert!(rel::orthogonal(&x, &z).unwrap());
    assert_eq!(
        x.and(&z).unwrap(),
        Conditional::zero(x.condition().join(&z.condition()).unwrap())
    );
    assert!(rel::orthogonal(&x, &x.negate()).unwrap());
    assert!(!rel::orthogonal(&x, &d.c(&["1", "3"], &["1", "2", "3", "4"])).unwrap());

    let s = &d.doc.space;
    let member = rel::ortho_family_member(&x, &s.full(), &d.ev(&["4", "5"])).unwrap();
    assert_eq!(member, z);
    assert_eq!(
        rel::ortho_family_member(&x, &s.empty(), &s.empty()).unwrap(),
        Conditional::zero(x.consequent())
    );
}

#[test]
fn verifiability_on_the_die() {
    let d = Die::new();
    let s = &d.doc.space;
    let (x, y) = d.bets();
    let even = Conditional::certain(d.named("even"));
    assert!(rel::sim_verifiable(&x, &even).unwrap());
    assert!(!rel::sim_verifiable(&x, &y).unwrap());
    // a'b = {4,6} lies in Ω, but c'd = odd does not lie in even.
    assert!(!rel::sim_falsifiable(&x, &even).unwrap());
    assert!(rel::sim_falsifiable(&x, &x.negate()).unwrap());

    let c = rel::compatible(&x, &x.negate()).unwrap();
    assert!(c.compatible && c.in_common_subalgebra);
    assert!(!rel::compatible(&x, &y).unwrap().compatible);
    let u = Conditional::undefined(s);
    let c = rel::compatible(&u, &u).unwrap();
    assert!(c.compatible && !c.in_common_subalgebra);

    let p = rel::profile(&x, &y).unwrap();
    assert_eq!(p.flags, [true, false, false, false, false, false, false]);
    assert_eq!(rel::profile(&y, &y).unwrap().flags, [true; 7]);
    let same_condition = d.c(&["2", "4", "6"], &["2", "4", "6"]);
    assert_eq!(rel::profile(&x, &same_condition).unwrap().flags, [true; 7]);
}

#[test]
fn expressions_on_the_die() {
    let d = Die::new();
    assert_eq!(d.show(&d.eval("two | even")), "({2}|{2,4,6})");
    assert_eq!(
        d.show(&d.eval("(two|even) or (lt4|lt5)")),
        "({1,2,3}|{1,2,3,4,6})"
    );
    assert_eq!(
        d.show(&d.eval("proj((lt4|lt5), (two|even))")),
        "({2}|{1,2,3,4,6})"
    );
    assert_eq!(d.show(&d.eval("osum(two|even, two|even)")), "({}|{2,4,6})");
    assert_eq!(d.show(&d.eval("({}|even)")), "({}|{2,4,6})");
    assert_eq!(d.show(&Conditional::undefined(&d.doc.space)), "UNDEFINED");
    // Leaves are (e|Ω), so `two | five` is ({}|{5}): defined, probability 0.
    let m = d.uniform();
    assert_eq!(d.show(&d.eval("two | five")), "({}|{5})");
    assert_eq!(
        m.p_cond(&d.eval("two | five")).unwrap(),
        Probability::zero()
    );
    assert_eq!(m.p_cond(&d.eval("two | {}")), Err(Error::ZeroCondition));
}
