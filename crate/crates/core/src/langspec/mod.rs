//! Declarative language descriptions and membership.
//!
//! A spec constrains base-b words positionally. Positions are counted from the
//! least significant digit; a block constraint is keyed by the position of the
//! block's least significant letter.

mod automaton;
mod json;
pub mod presets;

pub use automaton::{CountingAutomaton, Schedule};
pub use json::{parse_spec, spec_to_json};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeration::{check_base, format_block, is_evil, DigitWord};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeadingZeroPolicy {
    /// Canonical representations only: a non-empty word may not start with 0.
    #[default]
    Forbidden,
    /// Every digit string.
    Allowed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    #[default]
    Msd,
    Lsd,
}

/// Allowed digit sets: `prefix` for positions 0.., then `period` repeating.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitRestriction {
    pub prefix: Vec<Vec<u8>>,
    pub period: Vec<Vec<u8>>,
}

impl DigitRestriction {
    pub fn allowed_at(&self, i: usize) -> &[u8] {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }
}

/// `forbidden[r]` lists blocks (MSD first) forbidden when their least
/// significant letter sits at a position congruent to `r` mod `period`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicBlocks {
    pub period: usize,
    pub forbidden: Vec<Vec<Vec<u8>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerAvoidance {
    pub letter: u8,
    pub exponent: u32,
}

/// Complete deterministic automaton over the digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DfaSpec {
    pub states: usize,
    pub initial: usize,
    pub accepting: Vec<bool>,
    /// `transitions[q][d]`
    pub transitions: Vec<Vec<usize>>,
    pub direction: Direction,
}

impl DfaSpec {
    fn run(&self, digits: impl Iterator<Item = u8>) -> bool {
        let mut q = self.initial;
        for d in digits {
            q = self.transitions[q][d as usize];
        }
        self.accepting[q]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LanguageKind {
    DigitRestriction(DigitRestriction),
    PeriodicBlocks(PeriodicBlocks),
    PowerAvoidance(PowerAvoidance),
    /// Binary words with no factor `10` whose `0` sits at an evil position.
    EvilFactor,
    Dfa(DfaSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LanguageSpec {
    pub base: u32,
    pub leading_zeros: LeadingZeroPolicy,
    pub kind: LanguageKind,
    pub name: Option<String>,
}

impl LanguageSpec {
    pub fn new(base: u32, leading_zeros: LeadingZeroPolicy, kind: LanguageKind) -> Result<Self> {
        let spec = LanguageSpec { base, leading_zeros, kind, name: None };
        spec.validate()?;
        Ok(spec)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_policy(&self, leading_zeros: LeadingZeroPolicy) -> Self {
        LanguageSpec { leading_zeros, ..self.clone() }
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.describe())
    }

    pub fn describe(&self) -> String {
        let body = match &self.kind {
            LanguageKind::DigitRestriction(d) => {
                format!("digit restriction (prefix {}, period {})", d.prefix.len(), d.period.len())
            }
            LanguageKind::PeriodicBlocks(p) => {
                let parts: Vec<String> = p
                    .forbidden
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.is_empty())
                    .map(|(r, b)| {
                        let blocks: Vec<String> = b.iter().map(|x| format_block(x)).collect();
                        format!("r{r}:{}", blocks.join("|"))
                    })
                    .collect();
                format!("periodic blocks p={} [{}]", p.period, parts.join(", "))
            }
            LanguageKind::PowerAvoidance(p) => format!("avoid {}^{}", p.letter, p.exponent),
            LanguageKind::EvilFactor => "no 10 with the 0 at an evil position".to_string(),
            LanguageKind::Dfa(d) => format!("dfa with {} states", d.states),
        };
        format!("base {} {}", self.base, body)
    }

    pub fn is_regular(&self) -> bool {
        !matches!(self.kind, LanguageKind::EvilFactor)
    }

    pub fn validate(&self) -> Result<()> {
        check_base(self.base)?;
        let b = self.base;
        let check_digit = |d: u8| {
            if u32::from(d) < b {
                Ok(())
            } else {
                Err(Error::InvalidDigit { digit: d.into(), base: b })
            }
        };
        match &self.kind {
            LanguageKind::DigitRestriction(dr) => {
                if dr.period.is_empty() {
                    return Err(Error::InvalidSpec("digit restriction needs a non-empty period".into()));
                }
                for set in dr.prefix.iter().chain(&dr.period) {
                    if set.is_empty() {
                        return Err(Error::InvalidSpec("allowed digit sets must be non-empty".into()));
                    }
                    for &d in set {
                        check_digit(d)?;
                    }
                }
                if dr.prefix.is_empty() && dr.period.len() == 1 && dr.period[0] == [0] {
                    return Err(Error::InvalidSpec("allowed digit set D = {0} is degenerate".into()));
                }
            }
            LanguageKind::PeriodicBlocks(pb) => {
                if pb.period == 0 || pb.forbidden.len() != pb.period {
                    return Err(Error::InvalidSpec("period must be >= 1 with one block list per residue".into()));
                }
                for block in pb.forbidden.iter().flatten() {
                    if block.is_empty() {
                        return Err(Error::InvalidSpec("forbidden blocks must be non-empty".into()));
                    }
                    for &d in block {
                        check_digit(d)?;
                    }
                }
            }
            LanguageKind::PowerAvoidance(pa) => {
                check_digit(pa.letter)?;
                if pa.exponent == 0 {
                    return Err(Error::InvalidSpec("exponent must be >= 1".into()));
                }
            }
            LanguageKind::EvilFactor => {
                if b != 2 {
                    return Err(Error::InvalidSpec("evil-factor languages are binary".into()));
                }
            }
            LanguageKind::Dfa(dfa) => {
                if dfa.states == 0 || dfa.initial >= dfa.states || dfa.accepting.len() != dfa.states {
                    return Err(Error::InvalidSpec("dfa states, initial state and accepting set disagree".into()));
                }
                if dfa.transitions.len() != dfa.states {
                    return Err(Error::InvalidSpec("dfa needs one transition row per state".into()));
                }
                for row in &dfa.transitions {
                    if row.len() != b as usize {
                        return Err(Error::InvalidSpec("dfa transitions must be total on the digits".into()));
                    }
                    if row.iter().any(|&t| t >= dfa.states) {
                        return Err(Error::InvalidSpec("dfa transition target out of range".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Membership of an MSD-first digit word.
    pub fn accepts(&self, word: &DigitWord) -> Result<bool> {
        if word.base() != self.base {
            return Err(Error::InvalidInput(format!(
                "word is in base {} but the language is in base {}",
                word.base(),
                self.base
            )));
        }
        Ok(self.accepts_digits(word.digits()))
    }

    /// Membership of an MSD-first digit slice. Digits are assumed in range.
    pub fn accepts_digits(&self, w: &[u8]) -> bool {
        if self.leading_zeros == LeadingZeroPolicy::Forbidden && w.first() == Some(&0) {
            return false;
        }
        let n = w.len();
        let at = |i: usize| w[n - 1 - i];
        match &self.kind {
            LanguageKind::DigitRestriction(dr) => (0..n).all(|i| dr.allowed_at(i).contains(&at(i))),
            LanguageKind::PeriodicBlocks(pb) => {
                for (r, blocks) in pb.forbidden.iter().enumerate() {
                    for block in blocks {
                        let m = block.len();
                        let mut i = r;
                        while i + m <= n {
                            // block[0] is at position i + m - 1
                            if (0..m).all(|k| at(i + m - 1 - k) == block[k]) {
                                return false;
                            }
                            i += pb.period;
                        }
                    }
                }
                true
            }
            LanguageKind::PowerAvoidance(pa) => {
                let mut run = 0u32;
                for &d in w {
                    run = if d == pa.letter { run + 1 } else { 0 };
                    if run >= pa.exponent {
                        return false;
                    }
                }
                true
            }
            LanguageKind::EvilFactor => {
                (0..n.saturating_sub(1)).all(|i| !(at(i) == 0 && at(i + 1) == 1 && is_evil(i as u64)))
            }
            LanguageKind::Dfa(dfa) => match dfa.direction {
                Direction::Msd => dfa.run(w.iter().copied()),
                Direction::Lsd => dfa.run(w.iter().rev().copied()),
            },
        }
    }

    /// Membership of the canonical representation of `n`.
    pub fn contains(&self, n: u64) -> bool {
        let digits = crate::numeration::to_digits(n, self.base).expect("base validated");
        self.with_policy(LeadingZeroPolicy::Forbidden).accepts_digits(&digits)
    }

    /// Counting automaton for a regular spec.
    pub fn compile(&self) -> Result<CountingAutomaton> {
        if !self.is_regular() {
            return Err(Error::NonRegular(
                "the characteristic sequence of the evil-factor language is not automatic".into(),
            ));
        }
        CountingAutomaton::build(self)
    }

    /// Position automaton, including the Thue–Morse-scheduled one for the
    /// evil-factor language. Counting works for every schedule; regularity
    /// based analyses must use [`LanguageSpec::compile`].
    pub fn position_automaton(&self) -> Result<CountingAutomaton> {
        CountingAutomaton::build(self)
    }

    /// Resolves `preset:NAME` or a path to a JSON spec file.
    pub fn resolve(source: &str) -> Result<Self> {
        if let Some(name) = source.strip_prefix("preset:") {
            return presets::preset(name);
        }
        let text = std::fs::read_to_string(source)?;
        parse_spec(&text)
    }
}

/// Exhaustive count of members of length `n`, by membership testing.
pub fn brute_count(spec: &LanguageSpec, n: usize) -> Result<u64> {
    let b = u64::from(spec.base);
    let total = (n as u32)
        .checked_mul(64 - b.leading_zeros())
        .filter(|&bits| bits <= 40)
        .map(|_| b.pow(n as u32))
        .ok_or_else(|| Error::ResourceLimit(format!("brute force over {}^{} words", b, n)))?;
    let mut word = vec![0u8; n];
    let mut count = 0u64;
    for _ in 0..total {
        if spec.accepts_digits(&word) {
            count += 1;
        }
        for k in (0..n).rev() {
            word[k] += 1;
            if u64::from(word[k]) < b {
                break;
            }
            word[k] = 0;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::parse_block;

    fn w(s: &str) -> Vec<u8> {
        parse_block(s, 10).unwrap()
    }

    #[test]
    fn l1_membership() {
        let l1 = presets::preset("L1").unwrap();
        assert!(!l1.accepts_digits(&w("12")));
        assert!(l1.accepts_digits(&w("123")));
        assert!(!l1.accepts_digits(&w("1289")));
        assert!(l1.accepts_digits(&w("189")));
        assert!(!l1.accepts_digits(&w("0")));
        assert!(l1.accepts_digits(&[]));
        let s: Vec<bool> = (0..13).map(|n| l1.contains(n)).collect();
        assert_eq!(s, [true; 12].iter().copied().chain([false]).collect::<Vec<_>>());
    }

    #[test]
    fn evil_membership() {
        let lj = presets::preset("LJ").unwrap();
        assert!(!lj.accepts_digits(&[1, 0, 1, 1, 1]));
        assert!(lj.accepts_digits(&[0, 1, 0, 1]));
        // 10 at positions 1,0: the 0 is at the evil position 0
        assert!(!lj.accepts_digits(&[1, 0]));
        assert!(lj.accepts_digits(&[1, 0, 1]));
    }

    #[test]
    fn leading_zero_policy() {
        let k = presets::preset("kempner").unwrap();
        assert!(!k.accepts_digits(&w("012")));
        assert!(k.with_policy(LeadingZeroPolicy::Allowed).accepts_digits(&w("012")));
        assert!(!k.accepts_digits(&w("19")));
    }

    #[test]
    fn lsd_dfa_membership() {
        // read LSD first; accept iff the least significant bit is 1
        let dfa = DfaSpec {
            states: 3,
            initial: 0,
            accepting: vec![false, true, false],
            transitions: vec![vec![2, 1], vec![1, 1], vec![2, 2]],
            direction: Direction::Lsd,
        };
        let spec = LanguageSpec::new(2, LeadingZeroPolicy::Forbidden, LanguageKind::Dfa(dfa)).unwrap();
        assert!(spec.contains(5) && !spec.contains(6) && spec.contains(1));
    }

    #[test]
    fn brute_counts() {
        let l1 = presets::preset("L1").unwrap();
        let v: Vec<u64> = (0..5).map(|n| brute_count(&l1, n).unwrap()).collect();
        assert_eq!(v, vec![1, 9, 89, 881, 8721]);
    }

    #[test]
    fn rejects_degenerate() {
        let dr = DigitRestriction { prefix: vec![], period: vec![vec![0]] };
        assert!(LanguageSpec::new(10, LeadingZeroPolicy::Forbidden, LanguageKind::DigitRestriction(dr)).is_err());
        let pa = PowerAvoidance { letter: 10, exponent: 2 };
        assert!(LanguageSpec::new(10, LeadingZeroPolicy::Forbidden, LanguageKind::PowerAvoidance(pa)).is_err());
    }
}
