//! Probabilistic laws, checked over every weight vector of a small grid.
//!
//! The expected values are recomputed here from integer weights, so they
//! do not share code with the probability module they check.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::prob::{Measure, Mode, Probability};

use super::{parts, Run};

fn weight(w: &[u64], bits: u64) -> u64 {
    w.iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, x)| x)
        .sum()
}

/// `w(num ∧ den) / w(den)` from integer weights.
fn ratio(w: &[u64], num: u64, den: u64) -> Option<BigRational> {
    let d = weight(w, den);
    (d != 0).then(|| BigRational::new(weight(w, num & den).into(), d.into()))
}

fn show_weights(w: &[u64]) -> String {
    w.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn show(p: &Result<Probability>) -> String {
    match p {
        Ok(p) => p.to_string(),
        Err(e) => e.to_string(),
    }
}

pub(super) fn superposition(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    let events = run.events.clone();
    for x in &all {
        for y in &all {
            run.tick();
            let (ab, b) = parts(x);
            let (cd, d) = parts(y);
            let unlinked = ab & d & !cd == 0 && b & !ab & cd == 0;
            let agree = (ops.or)(x, y)? == (ops.and)(x, y)?;
            run.same(
                &[("x", x), ("y", y)],
                unlinked,
                agree,
                "x ∨ y = x ∧ y iff (ab)(c'd) = 0 = (a'b)(cd)",
            );
        }
    }
    for w in run.weight_grid() {
        let measure = Measure::from_integers(run.space, &w)?;
        for x in &all {
            run.tick();
            let (ab, b) = parts(x);
            if let Some(p) = ratio(&w, ab, b) {
                let neg = measure.p_cond(&(ops.negate)(x))?;
                let want = BigRational::from_integer(1.into()) - p;
                if neg.value() != &want && !run.failed() {
                    let mut inputs = run.named(&[("x", x)]);
                    inputs.push(("weights".into(), show_weights(&w)));
                    run.fail(
                        inputs,
                        neg.to_string(),
                        want.to_string(),
                        "P(x') = 1 - P(x)".into(),
                    );
                }
            }
        }
        for x in &all {
            for y in &all {
                run.tick();
                let (ab, b) = parts(x);
                let (cd, d) = parts(y);
                let or = (ops.or)(x, y)?;
                let and = (ops.and)(x, y)?;
                let direct_or = measure.p_cond(&or);
                let direct_and = measure.p_cond(&and);
                let expected_or = ratio(&w, ab | cd, b | d);
                let candidates = [
                    (
                        "three-term disjunction formula",
                        measure.p_or_formula(x, y).map(|t| t.value),
                        &direct_or,
                    ),
                    (
                        "disjunction superposition",
                        measure.p_superposition(x, y, Mode::Or).map(|t| t.value),
                        &direct_or,
                    ),
                    (
                        "conjunction superposition",
                        measure.p_superposition(x, y, Mode::And).map(|t| t.value),
                        &direct_and,
                    ),
                ];
                for (name, formula, direct) in candidates {
                    let ok = match (&formula, direct) {
                        (Ok(f), Ok(d)) => f == d,
                        (Err(Error::ZeroCondition), Err(Error::ZeroCondition)) => true,
                        _ => false,
                    };
                    if !ok && !run.failed() {
                        let mut inputs = run.named(&[("x", x), ("y", y)]);
                        inputs.push(("weights".into(), show_weights(&w)));
                        run.fail(
                            inputs,
                            show(&formula),
                            show(direct),
                            format!("{name} equals the direct value"),
                        );
                    }
                }
                if direct_or.as_ref().ok().map(|p| p.value()) != expected_or.as_ref()
                    && !run.failed()
                {
                    let mut inputs = run.named(&[("x", x), ("y", y)]);
                    inputs.push(("weights".into(), show_weights(&w)));
                    let want = expected_or.map_or("undefined".to_string(), |v| v.to_string());
                    run.fail(
                        inputs,
                        show(&direct_or),
                        want,
                        "P(x ∨ y) = w(ab ∨ cd) / w(b ∨ d)".into(),
                    );
                }
                if run.failed() {
                    return Ok(());
                }
            }
        }
        // Two-block partitions u1, u2 of u = u1 ∨ u2.
        for a in &events {
            for u1 in &events {
                for u2 in &events {
                    if u1.bits() & u2.bits() != 0 {
                        continue;
                    }
                    run.tick();
                    let u = u1.bits() | u2.bits();
                    let got = measure.partition_expansion(a, &[*u1, *u2]);
                    let want = ratio(&w, a.bits(), u);
                    let ok = match (&got, &want) {
                        (Ok(g), Some(v)) => g.value() == v,
                        (Err(Error::ZeroCondition), None) => true,
                        _ => false,
                    };
                    if !ok && !run.failed() {
                        let inputs = vec![
                            ("a".to_string(), run.show_event(a)),
                            ("u1".to_string(), run.show_event(u1)),
                            ("u2".to_string(), run.show_event(u2)),
                            ("weights".to_string(), show_weights(&w)),
                        ];
                        let want = want.map_or("undefined".to_string(), |v| v.to_string());
                        run.fail(inputs, show(&got), want, "P(a|u) = Σ P(a|uᵢ)P(uᵢ|u)".into());
                    }
                }
            }
        }
        if run.failed() {
            return Ok(());
        }
    }
    Ok(())
}

pub(super) fn additive_law(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let events = run.events.clone();
    let m = run.mask;
    for w in run.weight_grid() {
        let measure = Measure::from_integers(run.space, &w)?;
        let null = |bits: u64| weight(&w, bits) == 0;
        for a in &events {
            for c1 in &events {
                if null(c1.bits()) {
                    continue;
                }
                for b in &events {
                    for c2 in &events {
                        if null(c2.bits()) {
                            continue;
                        }
                        run.tick();
                        let (a_, c1_, b_, c2_) = (a.bits(), c1.bits(), b.bits(), c2.bits());
                        let x = run.cond(a_, c1_);
                        let y = run.cond(b_, c2_);
                        let (or_cons, or_cond) = parts(&(ops.or)(&x, &y)?);
                        let lhs = ratio(&w, or_cons, or_cond).expect("w(C1 ∨ C2) > 0");
                        let px = ratio(&w, a_, c1_).expect("w(C1) > 0");
                        let py = ratio(&w, b_, c2_).expect("w(C2) > 0");
                        let holds = lhs == &px + &py;

                        let x_null = null(a_ & c1_);
                        let y_null = null(b_ & c2_);
                        let c1_below = null(c1_ & !c2_ & m);
                        let c2_below = null(c2_ & !c1_ & m);
                        let mut cases = Vec::new();
                        if x_null && y_null {
                            cases.push(1);
                        }
                        if x_null && c1_below {
                            cases.push(2);
                        }
                        if y_null && c2_below {
                            cases.push(3);
                        }
                        if c1_below && c2_below && null(a_ & b_ & c1_) {
                            cases.push(4);
                        }

                        let report = measure.additive_law_check(a, c1, b, c2)?;
                        let inputs = || {
                            vec![
                                ("A".to_string(), run.space.format_event(a)),
                                ("C1".to_string(), run.space.format_event(c1)),
                                ("B".to_string(), run.space.format_event(b)),
                                ("C2".to_string(), run.space.format_event(c2)),
                                ("weights".to_string(), show_weights(&w)),
                            ]
                        };
                        let failure = if holds != !cases.is_empty() {
                            Some((
                                format!("additive: {holds}"),
                                format!("cases {cases:?}"),
                                "the additive law holds iff one of the four cases applies",
                            ))
                        } else if report.holds != holds
                            || report.cases != cases
                            || report.lhs.value() != &lhs
                            || report.rhs != &px + &py
                        {
                            Some((
                                format!("{} {:?}", report.holds, report.cases),
                                format!("{holds} {cases:?}"),
                                "additive law report matches the direct computation",
                            ))
                        } else {
                            None
                        };
                        if let Some((l, r, detail)) = failure {
                            if !run.failed() {
                                let named = inputs();
                                run.fail(named, l, r, detail.into());
                            }
                            return Ok(());
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
