//! Laws about the operations themselves, the truth tables, orthogonality
//! and Schay's operations.

use std::collections::BTreeSet;

use crate::cea::Conditional;
use crate::error::Result;
use crate::rel::{self, Relation};
use crate::schay;
use crate::trival::{eval_at, tt_and, tt_given, tt_not, tt_or, TruthValue};

use super::{le, parts, Run};

type Binary = fn(&Conditional, &Conditional) -> Result<Conditional>;

pub(super) fn basic_properties(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    let m = run.mask;
    let zero_one = run.cond(0, m);
    let one_one = run.cond(m, m);
    let undefined = run.cond(0, 0);
    for x in &all {
        run.tick();
        let (ab, b) = parts(x);
        let xs = [("x", x)];
        let neg = (ops.negate)(x);
        run.equal(&xs, &(ops.and)(x, x)?, x, "x ∧ x = x");
        run.equal(&xs, &(ops.or)(x, x)?, x, "x ∨ x = x");
        run.equal(&xs, &(ops.negate)(&neg), x, "x'' = x");
        run.equal(&xs, &neg, &run.cond(!ab, b), "(a|b)' = (a'|b)");
        run.equal(&xs, &(ops.or)(x, &neg)?, &run.cond(b, b), "x ∨ x' = (1|b)");
        run.equal(&xs, &(ops.and)(x, &neg)?, &run.cond(0, b), "x ∧ x' = (0|b)");
        run.equal(
            &xs,
            &(ops.or)(x, &zero_one)?,
            &run.cond(ab, m),
            "x ∨ (0|1) = (ab|1)",
        );
        run.equal(
            &xs,
            &(ops.and)(x, &zero_one)?,
            &zero_one,
            "x ∧ (0|1) = (0|1)",
        );
        run.equal(&xs, &(ops.or)(x, &one_one)?, &one_one, "x ∨ (1|1) = (1|1)");
        run.equal(
            &xs,
            &(ops.and)(x, &one_one)?,
            &run.cond(ab | !b, m),
            "x ∧ (1|1) = (a ∨ b'|1)",
        );
        run.equal(&xs, &(ops.or)(x, &undefined)?, x, "x ∨ U = x");
        run.equal(&xs, &(ops.and)(x, &undefined)?, x, "x ∧ U = x");
        if run.failed() {
            return Ok(());
        }
    }
    for x in &all {
        for y in &all {
            run.tick();
            let xy = [("x", x), ("y", y)];
            let (nx, ny) = ((ops.negate)(x), (ops.negate)(y));
            run.equal(&xy, &(ops.and)(x, y)?, &(ops.and)(y, x)?, "x ∧ y = y ∧ x");
            run.equal(&xy, &(ops.or)(x, y)?, &(ops.or)(y, x)?, "x ∨ y = y ∨ x");
            run.equal(
                &xy,
                &(ops.negate)(&(ops.or)(x, y)?),
                &(ops.and)(&nx, &ny)?,
                "(x ∨ y)' = x' ∧ y'",
            );
            run.equal(
                &xy,
                &(ops.negate)(&(ops.and)(x, y)?),
                &(ops.or)(&nx, &ny)?,
                "(x ∧ y)' = x' ∨ y'",
            );
            run.equal(
                &xy,
                &(ops.and)(x, y)?,
                &(ops.and)(y, &(ops.given)(x, y)?)?,
                "x ∧ y = y ∧ (x | y)",
            );
            run.equal(
                &xy,
                &x.sasaki(y)?,
                &ops.sasaki_composed(x, y)?,
                "closed-form Sasaki projection = x ∧ (x' ∨ y)",
            );
            if run.failed() {
                return Ok(());
            }
        }
    }
    for x in &all {
        for y in &all {
            for z in &all {
                run.tick();
                let xyz = [("x", x), ("y", y), ("z", z)];
                run.equal(
                    &xyz,
                    &(ops.and)(x, &(ops.and)(y, z)?)?,
                    &(ops.and)(&(ops.and)(x, y)?, z)?,
                    "x ∧ (y ∧ z) = (x ∧ y) ∧ z",
                );
                run.equal(
                    &xyz,
                    &(ops.or)(x, &(ops.or)(y, z)?)?,
                    &(ops.or)(&(ops.or)(x, y)?, z)?,
                    "x ∨ (y ∨ z) = (x ∨ y) ∨ z",
                );
                if run.failed() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Runs `law` over all triples `x=(a|b), y=(c|d), z=(e|f)`. The closure
/// returns `(lhs, rhs, side condition)`.
fn triple_iff(
    run: &mut Run,
    statement: &str,
    law: impl Fn(&Run, [&Conditional; 3], [u64; 6]) -> Result<(Conditional, Conditional, bool)>,
) -> Result<()> {
    let all = run.all.clone();
    for x in &all {
        for y in &all {
            for z in &all {
                run.tick();
                let (ab, b) = parts(x);
                let (cd, d) = parts(y);
                let (ef, f) = parts(z);
                let (lhs, rhs, cond) = law(run, [x, y, z], [ab, b, cd, d, ef, f])?;
                run.iff(&[("x", x), ("y", y), ("z", z)], &lhs, &rhs, cond, statement);
                if run.failed() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

pub(super) fn distributivity(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    triple_iff(
        run,
        "x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)",
        |_, [x, y, z], [ab, b, cd, d, ef, f]| {
            let lhs = (ops.and)(x, &(ops.or)(y, z)?)?;
            let rhs = (ops.or)(&(ops.and)(x, y)?, &(ops.and)(x, z)?)?;
            let e_false = f & !ef;
            let c_false = d & !cd;
            let _ = b;
            Ok((lhs, rhs, le(ab & e_false, d) && le(ab & c_false, f)))
        },
    )
}

pub(super) fn dual_distributivity(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    triple_iff(
        run,
        "x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z)",
        |_, [x, y, z], [ab, b, cd, d, ef, f]| {
            let lhs = (ops.or)(x, &(ops.and)(y, z)?)?;
            let rhs = (ops.and)(&(ops.or)(x, y)?, &(ops.or)(x, z)?)?;
            let a_false = b & !ab;
            Ok((lhs, rhs, le(a_false & ef, d) && le(a_false & cd, f)))
        },
    )
}

pub(super) fn modular_law(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    triple_iff(
        run,
        "x ∨ (y ∧ z) = (x ∨ y) ∧ z",
        |_, [x, y, z], [ab, b, _cd, d, ef, f]| {
            let lhs = (ops.or)(x, &(ops.and)(y, z)?)?;
            let rhs = (ops.and)(&(ops.or)(x, y)?, z)?;
            let a_false = b & !ab;
            let e_false = f & !ef;
            Ok((lhs, rhs, ab & e_false == 0 && le(a_false & ef, d)))
        },
    )
}

pub(super) fn dual_modular_law(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    triple_iff(
        run,
        "x ∧ (y ∨ z) = (x ∧ y) ∨ z",
        |_, [x, y, z], [ab, b, _cd, d, ef, f]| {
            let lhs = (ops.and)(x, &(ops.or)(y, z)?)?;
            let rhs = (ops.or)(&(ops.and)(x, y)?, z)?;
            let a_false = b & !ab;
            let e_false = f & !ef;
            Ok((lhs, rhs, a_false & ef == 0 && le(ab & e_false, d)))
        },
    )
}

fn pair_iff(
    run: &mut Run,
    statement: &str,
    law: impl Fn([&Conditional; 2], [u64; 4]) -> Result<(Conditional, Conditional, bool)>,
) -> Result<()> {
    let all = run.all.clone();
    for x in &all {
        for z in &all {
            run.tick();
            let (ab, b) = parts(x);
            let (ef, f) = parts(z);
            let (lhs, rhs, cond) = law([x, z], [ab, b, ef, f])?;
            run.iff(&[("x", x), ("z", z)], &lhs, &rhs, cond, statement);
            if run.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}

pub(super) fn weak_modularity(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pair_iff(run, "x ∧ (x' ∨ z) = z", |[x, z], [ab, b, ef, f]| {
        let lhs = (ops.and)(x, &(ops.or)(&(ops.negate)(x), z)?)?;
        Ok((lhs, *z, le(b, f) && le(b & !ab, f & !ef)))
    })
}

pub(super) fn weak_dual_modularity(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pair_iff(run, "x ∨ (x' ∧ z) = z", |[x, z], [ab, b, ef, f]| {
        let lhs = (ops.or)(x, &(ops.and)(&(ops.negate)(x), z)?)?;
        Ok((lhs, *z, le(b, f) && le(ab, ef)))
    })
}

pub(super) fn truth_tables(run: &mut Run) -> Result<()> {
    use TruthValue::{False as F, True as T, Undefined as U};
    // Rows: first operand T, F, U; columns: second operand T, F, U.
    let printed: [(
        &str,
        fn(TruthValue, TruthValue) -> TruthValue,
        [[TruthValue; 3]; 3],
    ); 3] = [
        ("AND", tt_and, [[T, F, T], [F, F, F], [T, F, U]]),
        ("OR", tt_or, [[T, T, T], [T, F, F], [T, F, U]]),
        ("GIVEN", tt_given, [[T, U, T], [F, U, F], [U, U, U]]),
    ];
    for (name, op, table) in printed {
        for (i, p) in TruthValue::ALL.into_iter().enumerate() {
            for (j, q) in TruthValue::ALL.into_iter().enumerate() {
                run.tick();
                if op(p, q) != table[i][j] && !run.failed() {
                    run.fail(
                        vec![("p".into(), p.to_string()), ("q".into(), q.to_string())],
                        op(p, q).to_string(),
                        table[i][j].to_string(),
                        format!("{name} table entry"),
                    );
                }
            }
        }
    }
    for (p, want) in [(T, F), (F, T), (U, U)] {
        run.tick();
        if tt_not(p) != want && !run.failed() {
            run.fail(
                vec![("p".into(), p.to_string())],
                tt_not(p).to_string(),
                want.to_string(),
                "NOT table entry".into(),
            );
        }
    }

    let ops = *run.ops;
    let all = run.all.clone();
    let n = run.space.len();
    let binary: [(&str, Binary, fn(TruthValue, TruthValue) -> TruthValue); 3] = [
        ("and", ops.and, tt_and),
        ("or", ops.or, tt_or),
        ("given", ops.given, tt_given),
    ];
    for x in &all {
        for atom in 0..n {
            run.tick();
            let got = eval_at(&(ops.negate)(x), atom)?;
            let want = tt_not(eval_at(x, atom)?);
            pointwise(run, &[("x", x)], atom, "not", got, want);
        }
        for y in &all {
            for atom in 0..n {
                run.tick();
                let (p, q) = (eval_at(x, atom)?, eval_at(y, atom)?);
                for (name, op, table) in binary {
                    let got = eval_at(&op(x, y)?, atom)?;
                    pointwise(run, &[("x", x), ("y", y)], atom, name, got, table(p, q));
                }
            }
            if run.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn pointwise(
    run: &mut Run,
    inputs: &[(&str, &Conditional)],
    atom: usize,
    op: &str,
    got: TruthValue,
    want: TruthValue,
) {
    if got != want && !run.failed() {
        let mut named = run.named(inputs);
        named.push(("atom".into(), run.space.atoms()[atom].clone()));
        run.fail(
            named,
            got.to_string(),
            want.to_string(),
            format!("value of the {op} operation differs from its truth table"),
        );
    }
}

/// Members of `c`'s orthogonal set, decided by the defining equation
/// `c ∧ z = (0 | b ∨ d)`.
fn orthogonal_by_equation(run: &Run, c: &Conditional, z: &Conditional) -> Result<bool> {
    let (_, b) = parts(c);
    let (_, d) = parts(z);
    Ok((run.ops.and)(c, z)? == run.cond(0, b | d))
}

pub(super) fn orthogonal_set(run: &mut Run) -> Result<()> {
    let all = run.all.clone();
    let events = run.events.clone();
    for c in &all {
        let mut by_equation = BTreeSet::new();
        for z in &all {
            run.tick();
            let eq = orthogonal_by_equation(run, c, z)?;
            let inputs = [("c", c), ("z", z)];
            run.same(
                &inputs,
                eq,
                rel::orthogonal(c, z)?,
                "orthogonal iff ab ≤ c'd and cd ≤ a'b",
            );
            run.same(
                &inputs,
                eq,
                rel::holds(Relation::Pm, c, &(run.ops.negate)(z))?,
                "orthogonal iff c ≤pm z'",
            );
            if eq {
                by_equation.insert(*z);
            }
        }
        let mut family = BTreeSet::new();
        for x in &events {
            for y in &events {
                run.tick();
                family.insert(rel::ortho_family_member(c, x, y)?);
            }
        }
        if family != by_equation && !run.failed() {
            let extra = family.symmetric_difference(&by_equation).next().copied();
            let detail = match extra {
                Some(z) if family.contains(&z) => {
                    format!("{} is in the family but not orthogonal", run.show(&z))
                }
                Some(z) => format!("{} is orthogonal but not in the family", run.show(&z)),
                None => unreachable!("unequal sets differ somewhere"),
            };
            let named = run.named(&[("c", c)]);
            run.fail(
                named,
                format!("{} family members", family.len()),
                format!("{} orthogonal conditionals", by_equation.len()),
                detail,
            );
        }
        if run.failed() {
            return Ok(());
        }
    }
    Ok(())
}

pub(super) fn orthogonal_closure(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    for c in &all {
        let mut set = Vec::new();
        for z in &all {
            if orthogonal_by_equation(run, c, z)? {
                set.push(*z);
            }
        }
        for u in &set {
            for v in &set {
                run.tick();
                let inputs = [("c", c), ("u", u), ("v", v)];
                let or_in = orthogonal_by_equation(run, c, &(ops.or)(u, v)?)?;
                run.require(&inputs, or_in, "u ∨ v is orthogonal to c");
                let and_in = orthogonal_by_equation(run, c, &(ops.and)(u, v)?)?;
                run.require(&inputs, and_in, "u ∧ v is orthogonal to c");
                if run.failed() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

pub(super) fn complementation(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    let negations: BTreeSet<Conditional> = all.iter().map(|x| (ops.negate)(x)).collect();
    run.tick();
    if negations.len() != all.len() && !run.failed() {
        run.fail(
            Vec::new(),
            format!("{} distinct negations", negations.len()),
            format!("{} conditionals", all.len()),
            "negation is one-to-one and onto".into(),
        );
    }
    for x in &all {
        run.tick();
        let (_, b) = parts(x);
        let xs = [("x", x)];
        let neg = (ops.negate)(x);
        run.equal(&xs, &(ops.negate)(&neg), x, "x'' = x");
        run.equal(&xs, &(ops.and)(x, &neg)?, &run.cond(0, b), "x ∧ x' = (0|b)");
        run.equal(&xs, &(ops.or)(x, &neg)?, &run.cond(b, b), "x ∨ x' = (1|b)");
        run.require(&xs, rel::holds(Relation::Pm, x, x)?, "x ≤pm x");
    }
    for x in &all {
        for y in &all {
            run.tick();
            let xy = [("x", x), ("y", y)];
            let pm = rel::holds(Relation::Pm, x, y)?;
            let (nx, ny) = ((ops.negate)(x), (ops.negate)(y));
            if pm {
                run.require(
                    &xy,
                    rel::holds(Relation::Pm, &ny, &nx)?,
                    "x ≤pm y implies y' ≤pm x'",
                );
                run.require(
                    &xy,
                    !rel::holds(Relation::Pm, y, x)? || x == y,
                    "≤pm is antisymmetric",
                );
            }
            if x.condition() == y.condition() && rel::holds(Relation::Tr, x, y)? {
                run.require(
                    &xy,
                    rel::holds(Relation::Tr, &ny, &nx)?,
                    "bd ≤ cd implies c'd ≤ b'd",
                );
            }
            if run.failed() {
                return Ok(());
            }
        }
    }
    for x in &all {
        for y in &all {
            if !rel::holds(Relation::Pm, x, y)? {
                continue;
            }
            for z in &all {
                run.tick();
                if rel::holds(Relation::Pm, y, z)? {
                    run.require(
                        &[("x", x), ("y", y), ("z", z)],
                        rel::holds(Relation::Pm, x, z)?,
                        "≤pm is transitive",
                    );
                }
                if run.failed() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

pub(super) fn schay_lattices(run: &mut Run) -> Result<()> {
    let all = run.all.clone();
    let systems: [(&str, &str, Binary, Binary); 2] = [
        ("∩s", "∪s", schay::cap_s, schay::cup_s),
        ("∧s", "∨s", schay::and_s, schay::vee_s),
    ];
    for (meet_name, join_name, meet, join) in systems {
        for x in &all {
            run.tick();
            run.equal(
                &[("x", x)],
                &meet(x, x)?,
                x,
                &format!("x {meet_name} x = x"),
            );
            run.equal(
                &[("x", x)],
                &join(x, x)?,
                x,
                &format!("x {join_name} x = x"),
            );
            run.equal(&[("x", x)], &schay::neg_s(&schay::neg_s(x)), x, "~~x = x");
        }
        for x in &all {
            for y in &all {
                run.tick();
                let xy = [("x", x), ("y", y)];
                run.equal(
                    &xy,
                    &meet(x, y)?,
                    &meet(y, x)?,
                    &format!("{meet_name} is commutative"),
                );
                run.equal(
                    &xy,
                    &join(x, y)?,
                    &join(y, x)?,
                    &format!("{join_name} is commutative"),
                );
                run.equal(
                    &xy,
                    &meet(x, &join(x, y)?)?,
                    x,
                    &format!("x {meet_name} (x {join_name} y) = x"),
                );
                run.equal(
                    &xy,
                    &join(x, &meet(x, y)?)?,
                    x,
                    &format!("x {join_name} (x {meet_name} y) = x"),
                );
            }
            if run.failed() {
                return Ok(());
            }
        }
        for x in &all {
            for y in &all {
                for z in &all {
                    run.tick();
                    let xyz = [("x", x), ("y", y), ("z", z)];
                    run.equal(
                        &xyz,
                        &meet(x, &meet(y, z)?)?,
                        &meet(&meet(x, y)?, z)?,
                        &format!("{meet_name} is associative"),
                    );
                    run.equal(
                        &xyz,
                        &join(x, &join(y, z)?)?,
                        &join(&join(x, y)?, z)?,
                        &format!("{join_name} is associative"),
                    );
                    run.equal(
                        &xyz,
                        &meet(x, &join(y, z)?)?,
                        &join(&meet(x, y)?, &meet(x, z)?)?,
                        &format!("{meet_name} distributes over {join_name}"),
                    );
                    run.equal(
                        &xyz,
                        &join(x, &meet(y, z)?)?,
                        &meet(&join(x, y)?, &join(x, z)?)?,
                        &format!("{join_name} distributes over {meet_name}"),
                    );
                    if run.failed() {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

pub(super) fn schay_coincidence(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    let m = run.mask;
    for x in &all {
        run.tick();
        run.equal(&[("x", x)], &schay::neg_s(x), &(ops.negate)(x), "~x = x'");
        for y in &all {
            run.tick();
            let xy = [("x", x), ("y", y)];
            let cup = schay::cup_s(x, y)?;
            run.equal(&xy, &cup, &(ops.or)(x, y)?, "x ∪s y = x ∨ y");
            run.equal(
                &xy,
                &schay::and_s(x, y)?,
                &(ops.and)(x, y)?,
                "x ∧s y = x ∧ y",
            );
            // The unsimplified union ((A ∪ C)BD ∪ ABD' ∪ B'CD | B ∪ D).
            let (a, b) = parts(x);
            let (c, d) = parts(y);
            let long = run.cond(
                ((a | c) & b & d) | (a & b & !d & m) | (!b & m & c & d),
                b | d,
            );
            run.equal(
                &xy,
                &long,
                &cup,
                "unsimplified ∪s equals the simplified form",
            );
        }
        if run.failed() {
            return Ok(());
        }
    }
    Ok(())
}

pub(super) fn schay_iteration(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let events = run.events.clone();
    for a in &events {
        for b in &events {
            run.tick();
            let result = schay::iteration_example(*a, *b);
            let inputs = vec![
                ("A".to_string(), run.show_event(a)),
                ("B".to_string(), run.show_event(b)),
            ];
            if a.bits() & b.bits() != 0 {
                if result.is_ok() && !run.failed() {
                    run.fail(
                        inputs,
                        "a value".into(),
                        "NotDisjoint".into(),
                        "overlapping A and B are rejected".into(),
                    );
                }
                continue;
            }
            let inner = Conditional::new(*b, a.join(b)?)?;
            let by = Conditional::certain(b.complement());
            let got = (ops.given)(&inner, &by)?;
            let want = Conditional::zero(*a);
            if (got != want || result.as_ref() != Ok(&want)) && !run.failed() {
                run.fail(
                    inputs,
                    run.show(&got),
                    run.show(&want),
                    "((B | A ∨ B) | B') = (0|A)".into(),
                );
            }
            if run.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}
