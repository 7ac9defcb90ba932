//! Exhaustive checking of the algebra's laws over small spaces.
//!
//! Every law is checked for every tuple of conditionals (and, for the
//! probabilistic laws, every weight vector of a small grid) over the space
//! with atoms `1..=n`. For an "if and only if" both directions are checked:
//! a tuple fails when the equation and its side condition disagree. The
//! first failing tuple in enumeration order is reported.
//!
//! The operations `and`, `or`, `negate` and `given` are taken from an
//! [`Operations`] table so a broken implementation can be plugged in to make
//! sure the checks actually bite.

mod algebra;
mod probability;
mod quantum;

use std::fmt;
use std::str::FromStr;

use crate::cea::{Conditional, Operations};
use crate::error::{Error, Result};
use crate::event::{Event, SampleSpace};
use crate::lang::format_conditional;

/// Largest space [`enumerate_conditionals`] accepts.
pub const MAX_ENUMERATED_ATOMS: usize = 5;

/// Largest argument to [`check_all`].
pub const MAX_CHECK_ALL_ATOMS: usize = 4;

/// Every conditional of `space` exactly once: `3^n` of them, ordered by
/// condition and then consequent, each as a bit vector.
pub fn enumerate_conditionals(space: &SampleSpace) -> Result<Vec<Conditional>> {
    let n = space.len();
    if n > MAX_ENUMERATED_ATOMS {
        return Err(Error::TooLarge {
            what: "conditional enumeration",
            n,
            max: MAX_ENUMERATED_ATOMS,
        });
    }
    let tag = space.tag();
    let mut out = Vec::with_capacity(3usize.pow(n as u32));
    for b in 0..1u64 << n {
        for a in 0..=b {
            if a & !b == 0 {
                out.push(Conditional::from_bits(tag, a, b));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    BasicProperties,
    Distributivity,
    DualDistributivity,
    ModularLaw,
    DualModularLaw,
    WeakModularity,
    WeakDualModularity,
    TruthTables,
    Superposition,
    AdditiveLaw,
    OrthogonalSet,
    OrthogonalClosure,
    Complementation,
    SimultaneousVerifiability,
    VerifiabilityEquation,
    SimultaneousFalsifiability,
    VerifiableAndFalsifiable,
    BooleanSubalgebra,
    SubalgebraEquivalence,
    NegationUniqueness,
    Orthoalgebra,
    SasakiProjection,
    SasakiRelations,
    Compatibility,
    SchayLattices,
    SchayCoincidence,
    SchayIteration,
}

impl LawId {
    /// The whole catalog in reporting order.
    pub const ALL: [LawId; 27] = [
        LawId::Distributivity,
        LawId::DualDistributivity,
        LawId::ModularLaw,
        LawId::DualModularLaw,
        LawId::WeakModularity,
        LawId::WeakDualModularity,
        LawId::BasicProperties,
        LawId::AdditiveLaw,
        LawId::OrthogonalSet,
        LawId::OrthogonalClosure,
        LawId::Complementation,
        LawId::TruthTables,
        LawId::Superposition,
        LawId::SimultaneousVerifiability,
        LawId::VerifiabilityEquation,
        LawId::SimultaneousFalsifiability,
        LawId::VerifiableAndFalsifiable,
        LawId::BooleanSubalgebra,
        LawId::SubalgebraEquivalence,
        LawId::NegationUniqueness,
        LawId::Orthoalgebra,
        LawId::SasakiProjection,
        LawId::SasakiRelations,
        LawId::Compatibility,
        LawId::SchayLattices,
        LawId::SchayCoincidence,
        LawId::SchayIteration,
    ];

    /// Catalog identifier used on the command line.
    pub fn id(self) -> &'static str {
        match self {
            LawId::Distributivity => "t2.4",
            LawId::DualDistributivity => "c2.5",
            LawId::ModularLaw => "t2.6",
            LawId::DualModularLaw => "c2.7",
            LawId::WeakModularity => "c2.8",
            LawId::WeakDualModularity => "c2.9",
            LawId::BasicProperties => "props2.3",
            LawId::AdditiveLaw => "t2.13",
            LawId::OrthogonalSet => "t2.18",
            LawId::OrthogonalClosure => "t2.19",
            LawId::Complementation => "p2.20",
            LawId::TruthTables => "truth-tables",
            LawId::Superposition => "superposition",
            LawId::SimultaneousVerifiability => "t3.2",
            LawId::VerifiabilityEquation => "c3.3",
            LawId::SimultaneousFalsifiability => "c3.5",
            LawId::VerifiableAndFalsifiable => "c3.6",
            LawId::BooleanSubalgebra => "t3.7",
            LawId::SubalgebraEquivalence => "c3.8",
            LawId::NegationUniqueness => "t3.9",
            LawId::Orthoalgebra => "t3.11",
            LawId::SasakiProjection => "t3.15",
            LawId::SasakiRelations => "c3.16",
            LawId::Compatibility => "t3.17",
            LawId::SchayLattices => "schay-lattice",
            LawId::SchayCoincidence => "schay-coincide",
            LawId::SchayIteration => "schay-2.12",
        }
    }

    /// Largest space the law is checked on.
    pub fn max_atoms(self) -> usize {
        match self {
            LawId::AdditiveLaw
            | LawId::Superposition
            | LawId::SimultaneousVerifiability
            | LawId::BooleanSubalgebra
            | LawId::SubalgebraEquivalence
            | LawId::SchayLattices => 3,
            _ => 4,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            LawId::Distributivity => {
                "conjunction distributes over disjunction iff ab·e'f ≤ d and ab·c'd ≤ f"
            }
            LawId::DualDistributivity => {
                "disjunction distributes over conjunction iff a'b·ef ≤ d and a'b·cd ≤ f"
            }
            LawId::ModularLaw => {
                "disjunction-over-conjunction modular law iff ab·e'f = 0 and a'b·ef ≤ d"
            }
            LawId::DualModularLaw => {
                "conjunction-over-disjunction modular law iff a'b·ef = 0 and ab·e'f ≤ d"
            }
            LawId::WeakModularity => "x ∧ (x' ∨ z) = z iff b ≤ f and a'b ≤ e'f",
            LawId::WeakDualModularity => "x ∨ (x' ∧ z) = z iff b ≤ f and ab ≤ ef",
            LawId::BasicProperties => {
                "associativity, commutativity, idempotence, de Morgan, complements, zeros and units"
            }
            LawId::AdditiveLaw => "P(x ∨ y) = P(x) + P(y) iff one of the four null-set cases holds",
            LawId::OrthogonalSet => {
                "the conditionals orthogonal to (a|b) are exactly (a'bx | ab ∨ y)"
            }
            LawId::OrthogonalClosure => {
                "the orthogonal set is closed under disjunction and conjunction"
            }
            LawId::Complementation => {
                "relative complement properties with the probabilistically monotonic order"
            }
            LawId::TruthTables => {
                "the three-valued truth tables agree pointwise with the operations"
            }
            LawId::Superposition => {
                "decomposition formulas for P(x ∨ y) and P(x ∧ y) equal the direct values"
            }
            LawId::SimultaneousVerifiability => {
                "an orthogonal decomposition exists iff ab ≤ d and cd ≤ b"
            }
            LawId::VerifiabilityEquation => "simultaneously verifiable iff x ∧ y = (abcd | b ∨ d)",
            LawId::SimultaneousFalsifiability => {
                "simultaneously falsifiable iff the negations are simultaneously verifiable"
            }
            LawId::VerifiableAndFalsifiable => {
                "simultaneously verifiable and falsifiable iff b = d"
            }
            LawId::BooleanSubalgebra => "the generated subalgebra is Boolean iff b = d ≠ 0",
            LawId::SubalgebraEquivalence => {
                "verifiable and falsifiable iff in a common Boolean subalgebra"
            }
            LawId::NegationUniqueness => "x ∧ y = (0|b∨d) and x ∨ y = (1|b∨d) iff y = x'",
            LawId::Orthoalgebra => "orthogonal sum laws and uniqueness of the complement",
            LawId::SasakiProjection => {
                "Sasaki projection fixed points, zeros, idempotence and composition"
            }
            LawId::SasakiRelations => {
                "Sasaki projection fixed points and zeros through deductive relations"
            }
            LawId::Compatibility => "Sasaki projection and compatibility",
            LawId::SchayLattices => "Schay's two operation systems are distributive lattices",
            LawId::SchayCoincidence => {
                "Schay's union and conjunction coincide with disjunction and conjunction"
            }
            LawId::SchayIteration => "((B | A ∨ B) | B') = (0|A) for disjoint A and B",
        }
    }

    /// Parses a catalog id, or `all` for the whole catalog.
    pub fn select(s: &str) -> Result<Vec<LawId>> {
        if s == "all" {
            return Ok(LawId::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LawId> {
        LawId::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

/// A failing instance, rendered with the same notation the CLI accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: LawId,
    pub atom_count: usize,
    pub instances_checked: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    /// Informational findings that do not affect `passed`.
    pub notes: Vec<String>,
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} (n={}, {} instances): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.law,
            self.atom_count,
            self.instances_checked,
            self.law.description()
        )?;
        if let Some(cx) = &self.counterexample {
            for (name, value) in &cx.inputs {
                write!(f, "\n  {name} = {value}")?;
            }
            write!(f, "\n  lhs: {}\n  rhs: {}\n  {}", cx.lhs, cx.rhs, cx.detail)?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Runs laws against a table of operations.
#[derive(Debug, Clone, Copy)]
pub struct Checker {
    pub ops: Operations,
    /// Largest per-atom weight in the measure grid; weights range over
    /// `0..=grid_max`.
    pub grid_max: u64,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            ops: Operations::standard(),
            grid_max: 3,
        }
    }
}

impl Checker {
    pub fn with_ops(ops: Operations) -> Checker {
        Checker {
            ops,
            ..Checker::default()
        }
    }

    /// Checks `law` over the space with `n` atoms.
    pub fn check(&self, law: LawId, n: usize) -> Result<LawReport> {
        if n > law.max_atoms() {
            return Err(Error::TooLarge {
                what: law.id(),
                n,
                max: law.max_atoms(),
            });
        }
        let space = SampleSpace::numbered(n)?;
        let mut run = Run::new(&space, &self.ops, self.grid_max)?;
        match law {
            LawId::BasicProperties => algebra::basic_properties(&mut run),
            LawId::Distributivity => algebra::distributivity(&mut run),
            LawId::DualDistributivity => algebra::dual_distributivity(&mut run),
            LawId::ModularLaw => algebra::modular_law(&mut run),
            LawId::DualModularLaw => algebra::dual_modular_law(&mut run),
            LawId::WeakModularity => algebra::weak_modularity(&mut run),
            LawId::WeakDualModularity => algebra::weak_dual_modularity(&mut run),
            LawId::TruthTables => algebra::truth_tables(&mut run),
            LawId::OrthogonalSet => algebra::orthogonal_set(&mut run),
            LawId::OrthogonalClosure => algebra::orthogonal_closure(&mut run),
            LawId::Complementation => algebra::complementation(&mut run),
            LawId::SchayLattices => algebra::schay_lattices(&mut run),
            LawId::SchayCoincidence => algebra::schay_coincidence(&mut run),
            LawId::SchayIteration => algebra::schay_iteration(&mut run),
            LawId::Superposition => probability::superposition(&mut run),
            LawId::AdditiveLaw => probability::additive_law(&mut run),
            LawId::SimultaneousVerifiability => quantum::simultaneous_verifiability(&mut run),
            LawId::VerifiabilityEquation => quantum::verifiability_equation(&mut run),
            LawId::SimultaneousFalsifiability => quantum::simultaneous_falsifiability(&mut run),
            LawId::VerifiableAndFalsifiable => quantum::verifiable_and_falsifiable(&mut run),
            LawId::BooleanSubalgebra => quantum::boolean_subalgebra(&mut run),
            LawId::SubalgebraEquivalence => quantum::subalgebra_equivalence(&mut run),
            LawId::NegationUniqueness => quantum::negation_uniqueness(&mut run),
            LawId::Orthoalgebra => quantum::orthoalgebra(&mut run),
            LawId::SasakiProjection => quantum::sasaki_projection(&mut run),
            LawId::SasakiRelations => quantum::sasaki_relations(&mut run),
            LawId::Compatibility => quantum::compatibility(&mut run),
        }?;
        Ok(run.finish(law))
    }

    /// Runs the whole catalog, each law at `min(n, law.max_atoms())`.
    pub fn check_all(&self, n: usize) -> Result<Vec<LawReport>> {
        if n > MAX_CHECK_ALL_ATOMS {
            return Err(Error::TooLarge {
                what: "the full law catalog",
                n,
                max: MAX_CHECK_ALL_ATOMS,
            });
        }
        LawId::ALL
            .iter()
            .map(|&law| self.check(law, n.min(law.max_atoms())))
            .collect()
    }
}

/// [`Checker::check`] with the standard operations and a weight grid of
/// `0..=grid_max`.
pub fn check(law: LawId, n: usize, grid_max: Option<u64>) -> Result<LawReport> {
    let mut checker = Checker::default();
    if let Some(g) = grid_max {
        checker.grid_max = g;
    }
    checker.check(law, n)
}

pub fn check_all(n: usize) -> Result<Vec<LawReport>> {
    Checker::default().check_all(n)
}

/// Mutable state of one law check.
pub(crate) struct Run<'a> {
    pub space: &'a SampleSpace,
    pub ops: &'a Operations,
    pub grid_max: u64,
    /// Every conditional of the space.
    pub all: Vec<Conditional>,
    /// Every event of the space.
    pub events: Vec<Event>,
    pub mask: u64,
    instances: u64,
    counterexample: Option<Counterexample>,
    notes: Vec<String>,
}

impl<'a> Run<'a> {
    fn new(space: &'a SampleSpace, ops: &'a Operations, grid_max: u64) -> Result<Run<'a>> {
        Ok(Run {
            space,
            ops,
            grid_max,
            all: enumerate_conditionals(space)?,
            events: space.enumerate_events()?.collect(),
            mask: space.tag().full_mask(),
            instances: 0,
            counterexample: None,
            notes: Vec::new(),
        })
    }

    fn finish(self, law: LawId) -> LawReport {
        LawReport {
            law,
            atom_count: self.space.len(),
            instances_checked: self.instances,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
            notes: self.notes,
        }
    }

    pub fn tick(&mut self) {
        self.instances += 1;
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub fn show(&self, c: &Conditional) -> String {
        format_conditional(c, self.space)
    }

    pub fn show_event(&self, e: &Event) -> String {
        self.space.format_event(e)
    }

    /// The conditional `(a|b)` from raw bits.
    pub fn cond(&self, a: u64, b: u64) -> Conditional {
        Conditional::from_bits(self.space.tag(), a, b)
    }

    pub fn named(&self, inputs: &[(&str, &Conditional)]) -> Vec<(String, String)> {
        inputs
            .iter()
            .map(|(n, c)| (n.to_string(), self.show(c)))
            .collect()
    }

    /// Records the first counterexample; later ones are ignored.
    pub fn fail(
        &mut self,
        inputs: Vec<(String, String)>,
        lhs: String,
        rhs: String,
        detail: String,
    ) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                inputs,
                lhs,
                rhs,
                detail,
            });
        }
    }

    /// Requires `lhs = rhs`.
    pub fn equal(
        &mut self,
        inputs: &[(&str, &Conditional)],
        lhs: &Conditional,
        rhs: &Conditional,
        statement: &str,
    ) {
        if lhs != rhs && !self.failed() {
            let named = self.named(inputs);
            self.fail(
                named,
                self.show(lhs),
                self.show(rhs),
                format!("{statement} fails"),
            );
        }
    }

    /// Requires `(lhs = rhs) ⟺ condition`.
    pub fn iff(
        &mut self,
        inputs: &[(&str, &Conditional)],
        lhs: &Conditional,
        rhs: &Conditional,
        condition: bool,
        statement: &str,
    ) {
        let holds = lhs == rhs;
        if holds != condition && !self.failed() {
            let detail = if holds {
                format!("{statement}: the equation holds but the condition fails")
            } else {
                format!("{statement}: the condition holds but the equation fails")
            };
            let named = self.named(inputs);
            self.fail(named, self.show(lhs), self.show(rhs), detail);
        }
    }

    /// Requires `left ⟺ right` for two predicates.
    pub fn same(
        &mut self,
        inputs: &[(&str, &Conditional)],
        left: bool,
        right: bool,
        statement: &str,
    ) {
        if left != right && !self.failed() {
            let named = self.named(inputs);
            self.fail(
                named,
                left.to_string(),
                right.to_string(),
                statement.to_string(),
            );
        }
    }

    /// Requires `ok`.
    pub fn require(&mut self, inputs: &[(&str, &Conditional)], ok: bool, statement: &str) {
        self.same(inputs, ok, true, statement);
    }

    /// Weight vectors with entries in `0..=grid_max` and a positive total,
    /// in lexicographic order.
    pub fn weight_grid(&self) -> Vec<Vec<u64>> {
        let n = self.space.len();
        let base = self.grid_max + 1;
        let count = base.pow(n as u32);
        (1..count)
            .map(|mut k| {
                let mut w = vec![0; n];
                for slot in w.iter_mut().rev() {
                    *slot = k % base;
                    k /= base;
                }
                w
            })
            .collect()
    }
}

pub(crate) fn le(p: u64, q: u64) -> bool {
    p & !q == 0
}

/// `(consequent, condition)` bits of a normalized conditional.
pub(crate) fn parts(c: &Conditional) -> (u64, u64) {
    (c.consequent().bits(), c.condition().bits())
}
