//! Alternate bases and their digit expansions: the greedy algorithm with
//! exact remainders and cycle detection, the quasi-greedy expansion of 1,
//! evaluation of representations, admissibility, and Parry detection.

use crate::error::{Error, Result};
use crate::numberfield::{FieldElement, NumberField};
use crate::ratio::Rat;
use crate::words::{EvWord, EventuallyPeriodicWord, FiniteWord};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::HashMap;
use std::sync::Arc;

/// Default cap on the number of digits computed before giving up on
/// periodicity; aperiodic expansions exist and must surface as undecided.
pub const DEFAULT_STEP_CAP: usize = 10_000;

/// A tuple beta = (beta_0, ..., beta_{p-1}) of field elements > 1, used
/// cyclically; delta is the cached exact product.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternateBase {
    betas: Vec<FieldElement>,
    delta: FieldElement,
}

impl AlternateBase {
    pub fn new(betas: Vec<FieldElement>) -> Result<Self> {
        if betas.is_empty() {
            return Err(Error::InvalidInput("base needs at least one beta".into()));
        }
        let field = betas[0].field().clone();
        let mut delta = field.one();
        for b in &betas {
            if b.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if (b - &field.one()).sign() != 1 {
                return Err(Error::InvalidInput(
                    "every base entry must exceed 1".into(),
                ));
            }
            delta = &delta * b;
        }
        debug_assert_eq!((&delta - &field.one()).sign(), 1);
        Ok(AlternateBase { betas, delta })
    }

    pub fn p(&self) -> usize {
        self.betas.len()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.betas[0].field()
    }

    pub fn betas(&self) -> &[FieldElement] {
        &self.betas
    }

    /// beta_n with the cyclic convention beta_n = beta_{n mod p}.
    pub fn beta(&self, n: usize) -> &FieldElement {
        &self.betas[n % self.betas.len()]
    }

    pub fn delta(&self) -> &FieldElement {
        &self.delta
    }

    /// The cyclic shift beta^{(i)} = (beta_i, ..., beta_{i+p-1}).
    pub fn shift(&self, i: usize) -> AlternateBase {
        let p = self.p();
        let k = i % p;
        let mut betas = self.betas[k..].to_vec();
        betas.extend_from_slice(&self.betas[..k]);
        AlternateBase {
            betas,
            delta: self.delta.clone(),
        }
    }

    /// Greedy digit alphabet bound at position n: ceil(beta_n) - 1.
    pub fn greedy_digit_bound(&self, n: usize) -> i64 {
        (self.beta(n).ceil() - BigInt::from(1))
            .to_i64()
            .expect("digit bound fits in i64")
    }

    /// Exact value of an eventually periodic representation: the finite
    /// preperiod part plus the periodic tail summed by the geometric
    /// identity in delta.
    pub fn value(&self, w: &EventuallyPeriodicWord) -> FieldElement {
        let p = self.p();
        let field = self.field();
        let inv_betas: Vec<FieldElement> = self
            .betas
            .iter()
            .map(|b| b.inverse().expect("beta > 1"))
            .collect();

        // Extend the preperiod to a multiple of p, and the period to the
        // lcm with p, so the tail starts at phase 0 and repeats blockwise.
        let n0 = w.preperiod().len();
        let n_ext = n0.div_ceil(p) * p;
        let l = num_integer::lcm(w.period().len(), p);
        let k = l / p;

        let mut acc = field.zero();
        let mut weight = field.one(); // becomes 1/(beta_0 ... beta_n)
        for n in 0..n_ext {
            weight = &weight * &inv_betas[n % p];
            let d = field.from_i64(*w.letter(n));
            acc = &acc + &(&d * &weight);
        }
        // One period block starting at phase 0, weighted relative to n_ext.
        let mut block = field.zero();
        let mut bw = field.one();
        for j in 0..l {
            bw = &bw * &inv_betas[j % p];
            let d = field.from_i64(*w.letter(n_ext + j));
            block = &block + &(&d * &bw);
        }
        // Tail = weight * block * delta^k / (delta^k - 1).
        let dk = self.delta.pow(k as u64);
        let tail_factor = dk.try_div(&(&dk - &field.one())).expect("delta > 1");
        &acc + &(&(&weight * &block) * &tail_factor)
    }
}

/// Exact value of a word with field-element letters in the single base
/// delta: the sum of b_n / delta^{n+1}.
pub fn value_in_delta(w: &EvWord<FieldElement>, delta: &FieldElement) -> FieldElement {
    let field = delta.field();
    let inv = delta.inverse().expect("delta > 1");
    let mut acc = field.zero();
    let mut weight = field.one();
    for n in 0..w.preperiod().len() {
        weight = &weight * &inv;
        acc = &acc + &(&weight * w.letter(n));
    }
    let l = w.period().len();
    let mut block = field.zero();
    let mut bw = field.one();
    for j in 0..l {
        bw = &bw * &inv;
        block = &block + &(&bw * w.letter(w.preperiod().len() + j));
    }
    let dl = delta.pow(l as u64);
    let tail = dl.try_div(&(&dl - &field.one())).expect("delta > 1");
    &acc + &(&(&weight * &block) * &tail)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionOutcome {
    /// The expansion is eventually periodic; the word is canonical.
    Periodic(EventuallyPeriodicWord),
    /// No remainder state repeated within the step cap.
    CapExceeded(FiniteWord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub outcome: ExpansionOutcome,
    /// Number of distinct exact remainder states seen.
    pub remainders_seen: usize,
}

impl ExpansionResult {
    pub fn word(&self) -> Option<&EventuallyPeriodicWord> {
        match &self.outcome {
            ExpansionOutcome::Periodic(w) => Some(w),
            ExpansionOutcome::CapExceeded(_) => None,
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<i64> {
        match &self.outcome {
            ExpansionOutcome::Periodic(w) => w.prefix(len),
            ExpansionOutcome::CapExceeded(f) => f.0.iter().take(len).copied().collect(),
        }
    }
}

/// Runs a digit recurrence r_n = beta_n r_{n-1} - digit(beta_n r_{n-1})
/// with exact remainders, detecting cycles on (n mod p, r_{n-1}).
fn run_expansion(
    base: &AlternateBase,
    start: FieldElement,
    step_cap: usize,
    digit_rule: impl Fn(&FieldElement) -> BigInt,
) -> ExpansionResult {
    let p = base.p();
    let mut remainder = start;
    let mut digits: Vec<i64> = Vec::new();
    let mut seen: HashMap<(usize, FieldElement), usize> = HashMap::new();
    for n in 0..step_cap {
        let phase = n % p;
        if let Some(&m) = seen.get(&(phase, remainder.clone())) {
            let pre = digits[..m].to_vec();
            let per = digits[m..].to_vec();
            return ExpansionResult {
                outcome: ExpansionOutcome::Periodic(EvWord::new(pre, per)),
                remainders_seen: seen.len(),
            };
        }
        seen.insert((phase, remainder.clone()), n);
        let scaled = base.beta(n) * &remainder;
        let digit = digit_rule(&scaled);
        remainder = &scaled - &base.field().from_rational(Rat::from_integer(digit.clone()));
        digits.push(digit.to_i64().expect("digit fits in i64"));
    }
    ExpansionResult {
        outcome: ExpansionOutcome::CapExceeded(FiniteWord(digits)),
        remainders_seen: seen.len(),
    }
}

impl AlternateBase {
    /// Greedy expansion of x in [0, 1]: digit floor(beta_n r_{n-1}),
    /// remainders in [0, 1).
    pub fn greedy_expand(&self, x: &FieldElement, step_cap: usize) -> Result<ExpansionResult> {
        if x.sign() < 0 || (x - &self.field().one()).sign() > 0 {
            return Err(Error::InputOutOfRange);
        }
        Ok(run_expansion(self, x.clone(), step_cap, |s| s.floor()))
    }

    /// Exact remainder r_n(x) after n + 1 greedy steps, with the
    /// convention r_{-1}(x) = x.
    pub fn greedy_remainder(&self, x: &FieldElement, n: i64) -> Result<FieldElement> {
        if x.sign() < 0 || (x - &self.field().one()).sign() > 0 {
            return Err(Error::InputOutOfRange);
        }
        let mut r = x.clone();
        for k in 0..=n {
            let scaled = self.beta(k as usize) * &r;
            let digit = scaled.floor();
            r = &scaled - &self.field().from_rational(Rat::from_integer(digit));
        }
        Ok(r)
    }

    /// Quasi-greedy expansion of 1, computed by the modified greedy rule
    /// that keeps remainders in (0, 1]: digit ceil(beta_n r_{n-1}) - 1.
    pub fn quasi_greedy_expand_one(&self, step_cap: usize) -> ExpansionResult {
        let one = BigInt::from(1);
        let result = run_expansion(self, self.field().one(), step_cap, move |s| s.ceil() - &one);
        if let ExpansionOutcome::Periodic(w) = &result.outcome {
            debug_assert!(w.period() != [0], "quasi-greedy word never ends in zeros");
        }
        result
    }

    /// The p quasi-greedy expansions d*_{beta^{(i)}}(1); an error if any of
    /// them fails to become periodic within the cap.
    pub fn quasi_greedy_all(&self, step_cap: usize) -> Result<Vec<EventuallyPeriodicWord>> {
        (0..self.p())
            .map(|i| match self.shift(i).quasi_greedy_expand_one(step_cap).outcome {
                ExpansionOutcome::Periodic(w) => Ok(w),
                ExpansionOutcome::CapExceeded(_) => Err(Error::QuasiGreedyNotPeriodic),
            })
            .collect()
    }

    /// Admissibility: a is the greedy expansion of some x in [0, 1) iff
    /// every shift is lexicographically below the quasi-greedy expansion
    /// of 1 of the correspondingly shifted base. Past the preperiod the
    /// (shifted word, phase) pairs repeat with period lcm(|period|, p), so
    /// only finitely many shifts are checked.
    pub fn is_admissible(&self, a: &EventuallyPeriodicWord, step_cap: usize) -> Result<bool> {
        let dstars = self.quasi_greedy_all(step_cap)?;
        let p = self.p();
        let window = a.preperiod().len() + num_integer::lcm(a.period().len(), p);
        for n in 0..window {
            if !a.shift(n).lex_less(&dstars[n % p]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Runs the greedy expansion of 1 for every cyclic shift. `parry` is
    /// `Some(true)` when all are periodic and `None` when the cap was hit
    /// (aperiodicity is never certified).
    pub fn is_parry(&self, step_cap: usize) -> ParryCheck {
        let expansions: Vec<ExpansionResult> = (0..self.p())
            .map(|i| {
                self.shift(i)
                    .greedy_expand(&self.field().one(), step_cap)
                    .expect("1 is in range")
            })
            .collect();
        let undecided = expansions
            .iter()
            .any(|e| matches!(e.outcome, ExpansionOutcome::CapExceeded(_)));
        ParryCheck {
            parry: if undecided { None } else { Some(true) },
            expansions,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParryCheck {
    /// `Some(true)` when all expansions of 1 are periodic; `None` when
    /// undecided within the cap.
    pub parry: Option<bool>,
    pub expansions: Vec<ExpansionResult>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};
    use crate::testutil::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(pre: &[i64], per: &[i64]) -> EventuallyPeriodicWord {
        EvWord::new(pre.to_vec(), per.to_vec())
    }

    #[test]
    fn base_validation() {
        let f = sqrt13_field();
        assert!(AlternateBase::new(vec![f.one()]).is_err());
        let b = sqrt13_base();
        assert_eq!(b.p(), 2);
        assert_eq!(b.delta(), &f.generator());
    }

    #[test]
    fn shift_rotates() {
        let b = threephiphi_base();
        assert_eq!(b.shift(0), b);
        assert_eq!(b.shift(3), b);
        let s2 = b.shift(2);
        assert_eq!(s2.betas()[0], b.betas()[2]);
        assert_eq!(s2.betas()[1], b.betas()[0]);
        assert_eq!(s2.delta(), b.delta());
    }

    #[test]
    fn value_paper_examples() {
        // val(3 0^omega) = 1 in base (3, phi, phi).
        let b = threephiphi_base();
        assert_eq!(b.value(&w(&[3], &[0])), b.field().one());
        // val(0^omega) = 0 anywhere.
        let s = sqrt13_base();
        assert!(s.value(&w(&[], &[0])).is_zero());
        // val(1 (-1 0)^omega) = 0 in the sqrt13 base.
        assert!(s.value(&w(&[1], &[-1, 0])).is_zero());
        // And the other zero word of that example.
        assert!(s.value(&w(&[], &[0, -1, 2, 1, -2, 1])).is_zero());
    }

    #[test]
    fn greedy_paper_expansions() {
        let b = threephiphi_base();
        let one = b.field().one();
        let d0 = b.greedy_expand(&one, 100).unwrap();
        assert_eq!(d0.word().unwrap(), &w(&[3], &[0]));
        let d1 = b.shift(1).greedy_expand(&one, 100).unwrap();
        assert_eq!(d1.word().unwrap(), &w(&[1, 1], &[0]));
        let d2 = b.shift(2).greedy_expand(&one, 100).unwrap();
        assert_eq!(d2.word().unwrap(), &w(&[1], &[1, 1, 0]));

        let s = sqrt13_base();
        let one = s.field().one();
        assert_eq!(
            s.greedy_expand(&one, 100).unwrap().word().unwrap(),
            &w(&[2, 0, 1], &[0])
        );
        assert_eq!(
            s.shift(1).greedy_expand(&one, 100).unwrap().word().unwrap(),
            &w(&[1, 1], &[0])
        );
        // Greedy of 0 is 0^omega.
        assert_eq!(
            s.greedy_expand(&s.field().zero(), 100)
                .unwrap()
                .word()
                .unwrap(),
            &w(&[], &[0])
        );
        assert!(s.greedy_expand(&s.field().from_i64(2), 100).is_err());
    }

    #[test]
    fn quasi_greedy_paper_examples() {
        let s = sqrt13_base();
        let q0 = s.quasi_greedy_expand_one(100);
        // 200(10)^omega, canonically 2 0 (0 1).
        assert_eq!(q0.word().unwrap(), &w(&[2, 0, 0], &[1, 0]));
        let q1 = s.shift(1).quasi_greedy_expand_one(100);
        assert_eq!(q1.word().unwrap(), &w(&[], &[1, 0]));

        // p = 1, base 2: d*(1) = 1^omega.
        let b2 = base2();
        assert_eq!(b2.quasi_greedy_expand_one(50).word().unwrap(), &w(&[], &[1]));
    }

    #[test]
    fn quasi_greedy_digitwise_limit_oracle() {
        // d*(1) = lim d(x) as x -> 1: for base 2 the greedy expansion of
        // 1 - 2^-k is 1^k 0^omega, whose digitwise limit is 1^omega.
        let b2 = base2();
        let dstar = b2.quasi_greedy_expand_one(50);
        let dstar_prefix = dstar.prefix(19);
        for k in 1..=20u32 {
            let x = b2
                .field()
                .from_rational(Rat::from_integer(1.into()) - crate::ratio::pow2_inv(k));
            let g = b2.greedy_expand(&x, 200).unwrap();
            let stable = (k as usize).saturating_sub(1).min(19);
            assert_eq!(g.prefix(stable), dstar_prefix[..stable].to_vec());
        }
        // Quasi-greedy value is exactly 1.
        assert_eq!(b2.value(dstar.word().unwrap()), b2.field().one());
    }

    #[test]
    fn quasi_greedy_value_is_one_and_never_ends_zero() {
        for b in [sqrt13_base(), threephiphi_base(), x6_alpha_base()] {
            for i in 0..b.p() {
                let shifted = b.shift(i);
                let q = shifted.quasi_greedy_expand_one(2000);
                let word = q.word().expect("periodic for these bases");
                assert_eq!(shifted.value(word), shifted.field().one());
                assert_ne!(word.period(), &[0]);
            }
        }
    }

    #[test]
    fn value_greedy_round_trip_randomized() {
        // Pisot product guarantees periodicity for every x in Q(delta).
        let mut rng = StdRng::seed_from_u64(42);
        let b = sqrt13_base();
        let f = b.field();
        let mut checked = 0;
        while checked < 40 {
            let x = f
                .element(vec![
                    rat(rng.gen_range(-6..7), rng.gen_range(1..9)),
                    rat(rng.gen_range(-6..7), rng.gen_range(1..9)),
                ])
                .unwrap();
            if x.sign() < 0 || (&x - &f.one()).sign() >= 0 {
                continue;
            }
            let e = b.greedy_expand(&x, DEFAULT_STEP_CAP).unwrap();
            let word = e.word().expect("Pisot delta: periodic");
            assert_eq!(b.value(word), x);
            // Digits within greedy bounds, remainders in [0, 1).
            for n in 0..word.preperiod().len() + word.period().len() {
                let d = *word.letter(n);
                assert!(d >= 0);
                assert!(d <= b.beta(n).floor().to_i64().unwrap());
                let r = b.greedy_remainder(&x, n as i64).unwrap();
                assert!(r.sign() >= 0);
                assert_eq!((&r - &f.one()).sign(), -1);
            }
            checked += 1;
        }
    }

    #[test]
    fn greedy_remainder_examples() {
        let b = x6_beta65_base();
        let f = b.field();
        // r_{-1}(1) = 1 by convention.
        assert_eq!(b.greedy_remainder(&f.one(), -1).unwrap(), f.one());
        // r_n(0) = 0.
        assert!(b.greedy_remainder(&f.zero(), 10).unwrap().is_zero());
        // r_83(1) = delta^42 - beta1 (delta^41 + delta^34 + delta^26
        //   + delta^19 + delta^5).
        let d = f.generator();
        let beta1 = &b.betas()[1];
        let sum = &(&(&d.pow(41) + &d.pow(34)) + &(&d.pow(26) + &d.pow(19))) + &d.pow(5);
        let expected = &d.pow(42) - &(beta1 * &sum);
        assert_eq!(b.greedy_remainder(&f.one(), 83).unwrap(), expected);
    }

    #[test]
    fn remainder_identity_blockwise() {
        // r_{lp-1}(x) = delta^l x - sum_n d_n delta^{l-1-n} with grouped
        // digits d_n, checked exactly for random x and l <= 5.
        let mut rng = StdRng::seed_from_u64(9);
        let b = sqrt13_base();
        let f = b.field();
        let p = b.p();
        let mut done = 0;
        while done < 10 {
            let x = f
                .element(vec![
                    rat(rng.gen_range(0..5), rng.gen_range(1..7)),
                    rat(rng.gen_range(-2..3), rng.gen_range(1..7)),
                ])
                .unwrap();
            if x.sign() < 0 || (&x - &f.one()).sign() > 0 {
                continue;
            }
            let l = rng.gen_range(1..=5usize);
            let e = b.greedy_expand(&x, 200).unwrap();
            let digits = e.prefix(l * p);
            if digits.len() < l * p {
                continue;
            }
            let mut rhs = &x * &b.delta().pow(l as u64);
            for (n, chunk) in digits.chunks(p).enumerate() {
                let mut grouped = f.zero();
                for (i, &a) in chunk.iter().enumerate() {
                    let mut term = f.from_i64(a);
                    for j in i + 1..p {
                        term = &term * b.beta(j);
                    }
                    grouped = &grouped + &term;
                }
                rhs = &rhs - &(&grouped * &b.delta().pow((l - 1 - n) as u64));
            }
            let lhs = b.greedy_remainder(&x, (l * p) as i64 - 1).unwrap();
            assert_eq!(lhs, rhs);
            done += 1;
        }
    }

    #[test]
    fn x6_alpha_expansions_match_paper() {
        let a = x6_alpha_base();
        let one = a.field().one();
        let d0 = a.greedy_expand(&one, 500).unwrap();
        let mut pre = vec![1];
        pre.extend(std::iter::repeat(0).take(13));
        pre.push(1);
        assert_eq!(d0.word().unwrap(), &w(&pre, &[0]));

        let d1 = a.shift(1).greedy_expand(&one, 500).unwrap();
        // 1 0^18 1 0^20 (1 0^27)^omega
        let mut pre = vec![1];
        pre.extend(std::iter::repeat(0).take(18));
        pre.push(1);
        pre.extend(std::iter::repeat(0).take(20));
        let mut per = vec![1];
        per.extend(std::iter::repeat(0).take(27));
        assert_eq!(d1.word().unwrap(), &w(&pre, &per));
    }

    #[test]
    fn x6_beta65_prefix_and_cap() {
        let b = x6_beta65_base();
        let one = b.field().one();
        let check = b.is_parry(200);
        assert_eq!(check.parry, None);
        let e = b.greedy_expand(&one, 200).unwrap();
        assert!(matches!(e.outcome, ExpansionOutcome::CapExceeded(_)));
        // Length-84 prefix: 1 0^13 1 0^15 1 0^13 1 0^27 1 0^11.
        let mut expected = Vec::new();
        for zeros in [13usize, 15, 13, 27, 11] {
            expected.push(1);
            expected.extend(std::iter::repeat(0).take(zeros));
        }
        assert_eq!(e.prefix(84), expected);
    }

    #[test]
    fn parry_examples() {
        let b = threephiphi_base();
        let check = b.is_parry(1000);
        assert_eq!(check.parry, Some(true));
        let words: Vec<_> = check
            .expansions
            .iter()
            .map(|e| e.word().unwrap().clone())
            .collect();
        assert_eq!(words[0], w(&[3], &[0]));
        assert_eq!(words[1], w(&[1, 1], &[0]));
        assert_eq!(words[2], w(&[1], &[1, 1, 0]));

        let a = x6_alpha_base();
        assert_eq!(a.is_parry(500).parry, Some(true));
    }

    #[test]
    fn admissibility_examples() {
        let s = sqrt13_base();
        assert!(s.is_admissible(&w(&[], &[0]), 100).unwrap());
        assert!(s.is_admissible(&w(&[1], &[0]), 100).unwrap());
        // The quasi-greedy word itself is not admissible.
        let dstar = s.quasi_greedy_expand_one(100);
        assert!(!s.is_admissible(dstar.word().unwrap(), 100).unwrap());
        assert!(!s.is_admissible(&w(&[2, 0, 0], &[1, 0]), 100).unwrap());
    }

    #[test]
    fn greedy_words_are_admissible() {
        let mut rng = StdRng::seed_from_u64(77);
        let s = sqrt13_base();
        let f = s.field();
        let mut done = 0;
        while done < 20 {
            let x = f
                .element(vec![
                    rat(rng.gen_range(0..4), rng.gen_range(1..9)),
                    rat(rng.gen_range(-1..2), rng.gen_range(1..9)),
                ])
                .unwrap();
            if x.sign() < 0 || (&x - &f.one()).sign() >= 0 {
                continue;
            }
            if let Some(word) = s.greedy_expand(&x, 3000).unwrap().word() {
                assert!(s.is_admissible(word, 100).unwrap());
                done += 1;
            }
        }
    }

    #[test]
    fn dstar_lex_at_most_greedy() {
        // d*(1) <=_lex d(1), equality iff d(1) does not end in 0^omega.
        for (b, ends_zero) in [
            (sqrt13_base(), true),
            (threephiphi_base(), true),
            (x6_alpha_base().shift(1), false),
        ] {
            let d = b
                .greedy_expand(&b.field().one(), 500)
                .unwrap()
                .word()
                .unwrap()
                .clone();
            let dstar = b.quasi_greedy_expand_one(500).word().unwrap().clone();
            if ends_zero {
                assert!(dstar.lex_less(&d));
                assert_eq!(d.period(), &[0]);
            } else {
                assert_eq!(dstar, d);
            }
        }
    }

    #[test]
    fn pisot_base_expansions_always_periodic() {
        // Pisot delta with betas in Q(delta) forces periodicity.
        for b in [sqrt13_base(), base2(), phi_base()] {
            assert!(crate::pisot::is_pisot(b.field()));
            assert_eq!(b.is_parry(DEFAULT_STEP_CAP).parry, Some(true));
        }
    }

    #[test]
    fn value_in_delta_matches_grouped_value() {
        // Grouping digit blocks of a zero word preserves the zero value.
        let b = sqrt13_base();
        let f = b.field();
        let aligned = w(&[], &[0, -1, 2, 1, -2, 1]);
        assert!(b.value(&aligned).is_zero());
        let beta1 = &b.betas()[1];
        let blocks: Vec<FieldElement> = aligned
            .period()
            .chunks(2)
            .map(|c| &(&f.from_i64(c[0]) * beta1) + &f.from_i64(c[1]))
            .collect();
        let grouped = EvWord::new(vec![], blocks);
        assert!(value_in_delta(&grouped, b.delta()).is_zero());
    }

    #[test]
    fn value_of_prefix_plus_remainder_in_x6_field() {
        // Degree-6 arithmetic end to end: x equals the value of the first
        // n digits plus the scaled remainder, without assuming periodicity.
        let b = x6_beta65_base();
        let f = b.field();
        let x = f.from_rational(rat(1, 2));
        let n = 24;
        let e = b.greedy_expand(&x, n).unwrap();
        let digits = e.prefix(n);
        let mut acc = f.zero();
        let mut weight = f.one();
        for (k, &d) in digits.iter().enumerate() {
            weight = weight.try_div(b.beta(k)).unwrap();
            acc = &acc + &f.from_i64(d).try_mul(&weight).unwrap();
        }
        let r = b.greedy_remainder(&x, n as i64 - 1).unwrap();
        assert_eq!(&acc + &(&r * &weight), x);
    }
}
