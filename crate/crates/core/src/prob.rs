//! Exact conditional probability over finite sample spaces.
//!
//! All values are exact rationals. A [`Measure`] assigns a nonnegative
//! weight to each atom; conditioning on an event of zero weight is an
//! error rather than a value.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cea::Conditional;
use crate::error::{Error, Result};
use crate::event::{Event, SampleSpace, SpaceTag};

/// A probability in `[0, 1]`, stored as a reduced rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Probability(BigRational);

impl Probability {
    fn new(value: BigRational) -> Probability {
        debug_assert!(!value.is_negative() && value <= BigRational::one());
        Probability(value)
    }

    pub fn zero() -> Probability {
        Probability(BigRational::zero())
    }

    pub fn one() -> Probability {
        Probability(BigRational::one())
    }

    pub fn ratio(numer: i64, denom: i64) -> Probability {
        Probability::new(BigRational::new(numer.into(), denom.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Decimal rendering rounded half-up to `places` digits, computed exactly.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled: BigInt = self.0.numer() * &scale * 2 + self.0.denom();
        let rounded = scaled.div_floor(&(self.0.denom() * BigInt::from(2)));
        let (int, frac) = rounded.div_rem(&scale);
        if places == 0 {
            return int.to_string();
        }
        format!("{int}.{:0>width$}", frac.to_string(), width = places)
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Nonnegative rational weights, one per atom, with a positive total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    tag: SpaceTag,
    weights: Vec<BigRational>,
    total: BigRational,
}

impl Measure {
    pub fn new(space: &SampleSpace, weights: Vec<BigRational>) -> Result<Measure> {
        if weights.len() != space.len() {
            return Err(Error::WeightCount {
                expected: space.len(),
                got: weights.len(),
            });
        }
        if let Some(bad) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::BadWeight(bad.to_string()));
        }
        let total: BigRational = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::ZeroTotalWeight);
        }
        Ok(Measure {
            tag: space.tag(),
            weights,
            total,
        })
    }

    pub fn from_integers(space: &SampleSpace, weights: &[u64]) -> Result<Measure> {
        Measure::new(
            space,
            weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
        )
    }

    pub fn uniform(space: &SampleSpace) -> Measure {
        Measure::from_integers(space, &vec![1; space.len()]).expect("uniform weights are valid")
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn total(&self) -> &BigRational {
        &self.total
    }

    fn check(&self, event: &Event) -> Result<()> {
        if event.tag() == self.tag {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// Total weight of an event.
    pub fn weight(&self, event: &Event) -> Result<BigRational> {
        self.check(event)?;
        Ok(self.weight_bits(event.bits()))
    }

    fn weight_bits(&self, bits: u64) -> BigRational {
        self.weights
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, w)| w)
            .sum()
    }

    /// `w(num ∧ den) / w(den)`, or `None` when `w(den) = 0`.
    fn ratio_bits(&self, num: u64, den: u64) -> Option<Probability> {
        let d = self.weight_bits(den);
        if d.is_zero() {
            return None;
        }
        Some(Probability::new(self.weight_bits(num & den) / d))
    }

    fn require(&self, num: u64, den: u64) -> Result<Probability> {
        self.ratio_bits(num, den).ok_or(Error::ZeroCondition)
    }

    pub fn p_event(&self, a: &Event) -> Result<Probability> {
        self.check(a)?;
        Ok(Probability::new(self.weight_bits(a.bits()) / &self.total))
    }

    pub fn p_cond(&self, c: &Conditional) -> Result<Probability> {
        self.check(&c.condition())?;
        self.require(c.consequent().bits(), c.condition().bits())
    }

    fn pair_bits(&self, x: &Conditional, y: &Conditional) -> Result<(u64, u64, u64, u64)> {
        self.check(&x.condition())?;
        self.check(&y.condition())?;
        Ok((
            x.consequent().bits(),
            x.condition().bits(),
            y.consequent().bits(),
            y.condition().bits(),
        ))
    }

    /// Probability of `x ∨ y` via
    /// `P(a|b)P(b|b∨d) + P(c|d)P(d|b∨d) − P(abcd|bd)P(bd|b∨d)`.
    pub fn p_or_formula(&self, x: &Conditional, y: &Conditional) -> Result<DisjunctionTerms> {
        let (ab, b, cd, d) = self.pair_bits(x, y)?;
        let join = b | d;
        let first_weight = self.require(b, join)?;
        let second_weight = self.require(d, join)?;
        let overlap_weight = self.require(b & d, join)?;
        let first = self.ratio_bits(ab, b);
        let second = self.ratio_bits(cd, d);
        let overlap = self.ratio_bits(ab & cd, b & d);
        let value = product(&first, &first_weight) + product(&second, &second_weight)
            - product(&overlap, &overlap_weight);
        Ok(DisjunctionTerms {
            first,
            first_weight,
            second,
            second_weight,
            overlap,
            overlap_weight,
            value: Probability::new(value),
        })
    }

    /// Probability of `x ∨ y` or `x ∧ y` split over the cells `bd'`, `b'd`
    /// and `bd` of the joint condition `b ∨ d`.
    pub fn p_superposition(
        &self,
        x: &Conditional,
        y: &Conditional,
        mode: Mode,
    ) -> Result<SuperpositionTerms> {
        let (ab, b, cd, d) = self.pair_bits(x, y)?;
        let m = x.tag().full_mask();
        let join = b | d;
        let only_first = b & !d & m;
        let only_second = !b & m & d;
        let both = b & d;
        let first_weight = self.require(only_first, join)?;
        let second_weight = self.require(only_second, join)?;
        let first = self.ratio_bits(ab, only_first);
        let second = self.ratio_bits(cd, only_second);
        let common_event = match mode {
            Mode::Or => (ab | cd) & both,
            Mode::And => ab & cd,
        };
        let common = self.require(common_event, join)?;
        let value =
            product(&first, &first_weight) + product(&second, &second_weight) + common.value();
        Ok(SuperpositionTerms {
            mode,
            first,
            first_weight,
            second,
            second_weight,
            common,
            value: Probability::new(value),
        })
    }

    /// `Σᵢ P(a|uᵢ)P(uᵢ|u)` for pairwise disjoint parts `uᵢ` with join `u`.
    pub fn partition_expansion(&self, a: &Event, parts: &[Event]) -> Result<Probability> {
        self.check(a)?;
        let mut union = 0u64;
        for part in parts {
            self.check(part)?;
            if union & part.bits() != 0 {
                return Err(Error::NotAPartition);
            }
            union |= part.bits();
        }
        let mut sum = BigRational::zero();
        for part in parts {
            let cell = self.require(part.bits(), union)?;
            let given = self.ratio_bits(a.bits(), part.bits());
            sum += product(&given, &cell);
        }
        if parts.is_empty() {
            return Err(Error::ZeroCondition);
        }
        Ok(Probability::new(sum))
    }

    /// When does `P((A|C1) ∨ (B|C2)) = P(A|C1) + P(B|C2)`?
    pub fn additive_law_check(
        &self,
        a: &Event,
        c1: &Event,
        b: &Event,
        c2: &Event,
    ) -> Result<AdditiveReport> {
        for e in [a, c1, b, c2] {
            self.check(e)?;
        }
        let x = Conditional::new(*a, *c1)?;
        let y = Conditional::new(*b, *c2)?;
        let p_x = self.p_cond(&x)?;
        let p_y = self.p_cond(&y)?;
        let lhs = self.p_cond(&x.or(&y)?)?;
        let rhs = p_x.value() + p_y.value();
        let m = a.tag().full_mask();
        let null = |bits: u64| self.weight_bits(bits).is_zero();
        let c1_below_c2 = null(c1.bits() & !c2.bits() & m);
        let c2_below_c1 = null(c2.bits() & !c1.bits() & m);
        let mut cases = Vec::new();
        if p_x.is_zero() && p_y.is_zero() {
            cases.push(1);
        }
        if p_x.is_zero() && c1_below_c2 {
            cases.push(2);
        }
        if p_y.is_zero() && c2_below_c1 {
            cases.push(3);
        }
        if c1_below_c2 && c2_below_c1 && self.require(a.bits() & b.bits(), c1.bits())?.is_zero() {
            cases.push(4);
        }
        let holds = *lhs.value() == rhs;
        Ok(AdditiveReport {
            lhs,
            rhs,
            holds,
            cases,
        })
    }
}

/// `factor · weight`, where an undefined factor only ever meets a zero
/// weight and contributes nothing.
fn product(factor: &Option<Probability>, weight: &Probability) -> BigRational {
    match factor {
        Some(p) => p.value() * weight.value(),
        None => {
            debug_assert!(weight.is_zero());
            BigRational::zero()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Or,
    And,
}

/// Factors of the three-term disjunction formula. A factor is `None` when
/// its own condition has zero weight; its paired weight is then zero too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjunctionTerms {
    /// `P(a|b)`
    pub first: Option<Probability>,
    /// `P(b|b∨d)`
    pub first_weight: Probability,
    /// `P(c|d)`
    pub second: Option<Probability>,
    /// `P(d|b∨d)`
    pub second_weight: Probability,
    /// `P(abcd|bd)`
    pub overlap: Option<Probability>,
    /// `P(bd|b∨d)`
    pub overlap_weight: Probability,
    pub value: Probability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperpositionTerms {
    pub mode: Mode,
    /// `P(a|bd')`
    pub first: Option<Probability>,
    /// `P(bd'|b∨d)`
    pub first_weight: Probability,
    /// `P(c|b'd)`
    pub second: Option<Probability>,
    /// `P(b'd|b∨d)`
    pub second_weight: Probability,
    /// `P((a∨c)bd|b∨d)` or `P((a∧c)bd|b∨d)` depending on the mode.
    pub common: Probability,
    pub value: Probability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveReport {
    pub lhs: Probability,
    /// `P(A|C1) + P(B|C2)`; may exceed 1.
    pub rhs: BigRational,
    pub holds: bool,
    /// Which of the four sufficient cases apply, ascending:
    /// 1. `P(A|C1) = 0 = P(B|C2)`
    /// 2. `P(A|C1) = 0` and `C1 ≤ C2` a.s.
    /// 3. `P(B|C2) = 0` and `C2 ≤ C1` a.s.
    /// 4. `C1 = C2` a.s. and `P(A∧B|C1) = 0`
    pub cases: Vec<u8>,
}
