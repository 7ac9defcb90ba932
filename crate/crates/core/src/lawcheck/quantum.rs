//! Verifiability, Boolean subalgebras, the orthogonal sum and the Sasaki
//! projection.

use crate::cea::Conditional;
use crate::error::Result;
use crate::rel::{self, Relation};

use super::{le, parts, Run};

/// Runs `law` over every pair, stopping at the first failure.
fn pairs(
    run: &mut Run,
    mut law: impl FnMut(&mut Run, &Conditional, &Conditional) -> Result<()>,
) -> Result<()> {
    let all = run.all.clone();
    for x in &all {
        for y in &all {
            run.tick();
            law(run, x, y)?;
            if run.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn triples(
    run: &mut Run,
    mut law: impl FnMut(&mut Run, &Conditional, &Conditional, &Conditional) -> Result<()>,
) -> Result<()> {
    let all = run.all.clone();
    for x in &all {
        for y in &all {
            for z in &all {
                run.tick();
                law(run, x, y, z)?;
                if run.failed() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn orthogonal_by_equation(run: &Run, x: &Conditional, y: &Conditional) -> Result<bool> {
    let (_, b) = parts(x);
    let (_, d) = parts(y);
    Ok((run.ops.and)(x, y)? == run.cond(0, b | d))
}

pub(super) fn simultaneous_verifiability(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    let k = all.len();
    // pieces[i][j]: the α with α ∨ e_j = x_i and α orthogonal to e_j.
    let mut pieces = vec![vec![Vec::new(); k]; k];
    for (j, e) in all.iter().enumerate() {
        for (ia, alpha) in all.iter().enumerate() {
            if !orthogonal_by_equation(run, alpha, e)? {
                continue;
            }
            let joined = (ops.or)(alpha, e)?;
            let i = all
                .binary_search(&joined)
                .expect("enumeration is sorted and complete");
            pieces[i][j].push(ia);
        }
    }
    let mut orth = vec![vec![false; k]; k];
    for (i, u) in all.iter().enumerate() {
        for (j, v) in all.iter().enumerate() {
            orth[i][j] = orthogonal_by_equation(run, u, v)?;
        }
    }
    for (i, x) in all.iter().enumerate() {
        for (j, y) in all.iter().enumerate() {
            run.tick();
            let decomposable = (0..k).any(|e| {
                pieces[i][e]
                    .iter()
                    .any(|&a| pieces[j][e].iter().any(|&c| orth[a][c]))
            });
            run.same(
                &[("x", x), ("y", y)],
                decomposable,
                rel::sim_verifiable(x, y)?,
                "x = α ∨ e and y = χ ∨ e with α, χ, e mutually orthogonal iff ab ≤ d and cd ≤ b",
            );
            if run.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}

pub(super) fn verifiability_equation(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pairs(run, |run, x, y| {
        let (ab, b) = parts(x);
        let (cd, d) = parts(y);
        let lhs = (ops.and)(x, y)?;
        let rhs = run.cond(ab & cd, b | d);
        let cond = rel::sim_verifiable(x, y)?;
        run.iff(
            &[("x", x), ("y", y)],
            &lhs,
            &rhs,
            cond,
            "x ∧ y = (abcd | b ∨ d) iff ab ≤ d and cd ≤ b",
        );
        Ok(())
    })
}

pub(super) fn simultaneous_falsifiability(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pairs(run, |run, x, y| {
        let (ab, b) = parts(x);
        let (cd, d) = parts(y);
        let lhs = (ops.and)(&(ops.negate)(x), &(ops.negate)(y))?;
        let rhs = run.cond(b & !ab & d & !cd, b | d);
        let cond = rel::sim_falsifiable(x, y)?;
        run.iff(
            &[("x", x), ("y", y)],
            &lhs,
            &rhs,
            cond,
            "x' ∧ y' = (a'b·c'd | b ∨ d) iff a'b ≤ d and c'd ≤ b",
        );
        Ok(())
    })
}

pub(super) fn verifiable_and_falsifiable(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pairs(run, |run, x, y| {
        let (ab, b) = parts(x);
        let (cd, d) = parts(y);
        let verify = (ops.and)(x, y)? == run.cond(ab & cd, b | d);
        let falsify =
            (ops.and)(&(ops.negate)(x), &(ops.negate)(y))? == run.cond(b & !ab & d & !cd, b | d);
        run.same(
            &[("x", x), ("y", y)],
            verify && falsify,
            b == d,
            "both verifiability equations hold iff b = d",
        );
        Ok(())
    })
}

pub(super) fn boolean_subalgebra(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pairs(run, |run, x, y| {
        let (_, b) = parts(x);
        let (_, d) = parts(y);
        let sub = rel::generated_subalgebra_with(&ops, x, y)?;
        let inputs = [("x", x), ("y", y)];
        run.same(
            &inputs,
            sub.is_boolean,
            b == d && b != 0,
            "the generated subalgebra is Boolean iff b = d ≠ 0",
        );
        if b == d {
            if let Some(m) = sub.members.iter().find(|m| m.condition().bits() != b) {
                let named = run.named(&inputs);
                let (shown, cond) = (run.show(m), run.show_event(&x.condition()));
                run.fail(
                    named,
                    shown,
                    format!("a member with condition {cond}"),
                    "the subalgebra stays inside (B|b)".into(),
                );
            }
        }
        Ok(())
    })
}

pub(super) fn subalgebra_equivalence(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let mut excluded = 0u64;
    pairs(run, |run, x, y| {
        let both = rel::sim_verifiable(x, y)? && rel::sim_falsifiable(x, y)?;
        let boolean = rel::generated_subalgebra_with(&ops, x, y)?.is_boolean;
        if x.is_undefined() && y.is_undefined() {
            excluded += 1;
            return Ok(());
        }
        run.same(
            &[("x", x), ("y", y)],
            both,
            boolean,
            "verifiable and falsifiable iff in a common Boolean subalgebra",
        );
        Ok(())
    })?;
    if excluded > 0 {
        run.note(format!(
            "skipped {excluded} pair (U, U): it is verifiable and falsifiable but generates the one-element algebra"
        ));
    }
    Ok(())
}

pub(super) fn negation_uniqueness(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pairs(run, |run, x, y| {
        let (_, b) = parts(x);
        let (_, d) = parts(y);
        let equations =
            (ops.and)(x, y)? == run.cond(0, b | d) && (ops.or)(x, y)? == run.cond(b | d, b | d);
        let negation = b == d && *y == (ops.negate)(x);
        run.same(
            &[("x", x), ("y", y)],
            equations,
            negation,
            "x ∧ y = (0|b∨d) and x ∨ y = (1|b∨d) iff b = d and y = x'",
        );
        Ok(())
    })
}

pub(super) fn orthoalgebra(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    for c in &all {
        run.tick();
        let (_, b) = parts(c);
        let cs = [("c", c)];
        run.equal(&cs, &c.osum(&run.cond(0, b))?, c, "c ⊕ (0|b) = c");
        run.equal(
            &cs,
            &c.osum(&(ops.negate)(c))?,
            &run.cond(b, b),
            "c ⊕ c' = (1|b)",
        );
        run.equal(&cs, &c.osum(c)?, &run.cond(0, b), "c ⊕ c = (0|b)");
    }
    pairs(run, |run, c, z| {
        let (_, b) = parts(c);
        let sum = c.osum(z)?;
        let inputs = [("c", c), ("z", z)];
        run.same(
            &inputs,
            sum == run.cond(b, b),
            *z == (ops.negate)(c),
            "c ⊕ z = (1|b) iff z = c'",
        );
        run.equal(&inputs, &sum, &z.osum(c)?, "⊕ is commutative");
        Ok(())
    })?;
    if run.failed() {
        return Ok(());
    }
    let mut non_associative = 0u64;
    let mut first = None;
    for x in &all {
        for y in &all {
            for z in &all {
                let lhs = x.osum(&y.osum(z)?)?;
                let rhs = x.osum(y)?.osum(z)?;
                if lhs != rhs {
                    non_associative += 1;
                    first.get_or_insert((*x, *y, *z));
                }
            }
        }
    }
    if let Some((x, y, z)) = first {
        run.note(format!(
            "the total ⊕ is not associative on {non_associative} triples, e.g. x = {}, y = {}, z = {}",
            run.show(&x),
            run.show(&y),
            run.show(&z)
        ));
    }
    Ok(())
}

pub(super) fn sasaki_projection(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let s = move |b: &Conditional, a: &Conditional| ops.sasaki_composed(b, a);
    pairs(run, |run, b, a| {
        let (b1, b2) = parts(b);
        let (a1, a2) = parts(a);
        let inputs = [("b", b), ("a", a)];
        let proj = s(b, a)?;
        run.iff(
            &inputs,
            &proj,
            a,
            le(b2, a2) && le(b2 & !b1, a2 & !a1),
            "φ_b(a) = a iff b₂ ≤ a₂ and b₁'b₂ ≤ a₁'a₂",
        );
        run.iff(
            &inputs,
            &proj,
            &run.cond(0, a2 | b2),
            le(a1, b2 & !b1),
            "φ_b(a) = (0 | a₂ ∨ b₂) iff a₁a₂ ≤ b₁'b₂",
        );
        run.equal(&inputs, &s(b, &proj)?, &proj, "φ_b(φ_b(a)) = φ_b(a)");
        run.equal(
            &inputs,
            &b.sasaki(a)?,
            &proj,
            "closed form equals b ∧ (b' ∨ a)",
        );
        Ok(())
    })?;
    if run.failed() {
        return Ok(());
    }
    triples(run, |run, a, b, c| {
        let inputs = [("a", a), ("b", b), ("c", c)];
        let twice = s(c, &s(b, a)?)?;
        run.equal(
            &inputs,
            &twice,
            &s(&(ops.and)(b, c)?, a)?,
            "φ_c(φ_b(a)) = φ_{b∧c}(a)",
        );
        run.equal(
            &inputs,
            &twice,
            &s(b, &s(c, a)?)?,
            "φ_c(φ_b(a)) = φ_b(φ_c(a))",
        );
        Ok(())
    })
}

pub(super) fn sasaki_relations(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    pairs(run, |run, b, a| {
        let (_, a2) = parts(a);
        let (_, b2) = parts(b);
        let inputs = [("b", b), ("a", a)];
        let proj = ops.sasaki_composed(b, a)?;
        let fixed = proj == *a;
        run.same(
            &inputs,
            fixed,
            (ops.and)(a, b)? == *a,
            "φ_b(a) = a iff a ∧ b = a",
        );
        run.same(
            &inputs,
            fixed,
            rel::holds(Relation::Wedge, a, b)?,
            "φ_b(a) = a iff a ≤∧ b",
        );
        run.same(
            &inputs,
            proj == run.cond(0, a2 | b2),
            rel::holds(Relation::Tr, a, &(ops.negate)(b))?,
            "φ_b(a) is false iff a ≤tr b'",
        );
        if b == a {
            run.equal(&inputs, &proj, b, "φ_b(b) = b");
        }
        Ok(())
    })
}

pub(super) fn compatibility(run: &mut Run) -> Result<()> {
    let ops = *run.ops;
    let s = move |b: &Conditional, a: &Conditional| ops.sasaki_composed(b, a);
    pairs(run, |run, b, a| {
        let (b1, b2) = parts(b);
        let (_, a2) = parts(a);
        let inputs = [("b", b), ("a", a)];
        let proj = s(b, a)?;
        let nb = (ops.negate)(b);
        run.equal(
            &inputs,
            &(ops.or)(b, a)?,
            &(ops.or)(b, &s(&nb, a)?)?,
            "b ∨ a = b ∨ φ_b'(a)",
        );
        let simver = rel::sim_verifiable(b, a)?;
        run.same(
            &inputs,
            proj == s(a, b)?,
            simver,
            "φ_b(a) = φ_a(b) iff b and a are simultaneously verifiable",
        );
        run.iff(
            &inputs,
            &proj,
            &(ops.and)(b, a)?,
            le(b1, a2),
            "φ_b(a) = b ∧ a iff b₁b₂ ≤ a₂",
        );
        run.same(
            &inputs,
            rel::holds(Relation::Bo, &proj, a)?,
            le(b2, a2),
            "φ_b(a) ≤bo a iff b₂ ≤ a₂",
        );
        let simver_neg = rel::sim_verifiable(&nb, a)?;
        if simver {
            run.same(
                &inputs,
                simver_neg,
                le(b2, a2),
                "with b, a simultaneously verifiable: so are b', a iff b₂ ≤ a₂",
            );
        }
        if le(b2, a2) {
            run.same(
                &inputs,
                simver,
                simver_neg,
                "with b₂ ≤ a₂: b, a simultaneously verifiable iff b', a are",
            );
        }
        Ok(())
    })?;
    if run.failed() {
        return Ok(());
    }
    triples(run, |run, a, b, c| {
        run.equal(
            &[("a", a), ("b", b), ("c", c)],
            &s(c, &(ops.or)(b, a)?)?,
            &(ops.or)(&s(c, b)?, &s(c, a)?)?,
            "φ_c(b ∨ a) = φ_c(b) ∨ φ_c(a)",
        );
        Ok(())
    })?;
    if run.failed() {
        return Ok(());
    }
    closure_under_folds(run, "simultaneously verifiable with c", |c, a| {
        rel::sim_verifiable(c, a)
    })?;
    if run.failed() {
        return Ok(());
    }
    closure_under_folds(run, "compatible with c", |c, a| {
        Ok(rel::compatible(c, a)?.compatible)
    })
}

/// For every `c`, joins and meets of up to three members of
/// `{a : related(c, a)}` stay in the set.
fn closure_under_folds(
    run: &mut Run,
    what: &str,
    related: impl Fn(&Conditional, &Conditional) -> Result<bool>,
) -> Result<()> {
    let ops = *run.ops;
    let all = run.all.clone();
    for c in &all {
        let mut members = Vec::new();
        for a in &all {
            if related(c, a)? {
                members.push(*a);
            }
        }
        let k = members.len();
        for i in 0..k {
            for j in i..k {
                for l in j..=k {
                    run.tick();
                    // l == k stands for a two-element fold.
                    let (u, v) = (&members[i], &members[j]);
                    let mut or = (ops.or)(u, v)?;
                    let mut and = (ops.and)(u, v)?;
                    let mut inputs = vec![("c", c), ("a1", u), ("a2", v)];
                    if l < k {
                        or = (ops.or)(&or, &members[l])?;
                        and = (ops.and)(&and, &members[l])?;
                        inputs.push(("a3", &members[l]));
                    }
                    let ok_or = related(c, &or)?;
                    let ok_and = related(c, &and)?;
                    run.require(&inputs, ok_or, &format!("the disjunction stays {what}"));
                    run.require(&inputs, ok_and, &format!("the conjunction stays {what}"));
                    if run.failed() {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}
