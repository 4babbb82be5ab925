//! Position-aware counting automata.
//!
//! Words are read MSD first. The transition used at position `i` depends on a
//! class `c(i)`: an ultimately periodic residue for regular specs, or the
//! Thue–Morse bit of `i` for the evil-factor language.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Direction, LanguageKind, LanguageSpec, LeadingZeroPolicy};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numeration::thue_morse;

/// Maximum number of automaton states produced by compilation.
pub const MAX_STATES: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// Classes `0..preperiod` for the first positions, then `period` classes cycling.
    Periodic { preperiod: usize, period: usize },
    /// Class `t_i` at position `i`.
    ThueMorse,
}

impl Schedule {
    pub fn num_classes(&self) -> usize {
        match *self {
            Schedule::Periodic { preperiod, period } => preperiod + period,
            Schedule::ThueMorse => 2,
        }
    }

    pub fn class_of(&self, pos: usize) -> usize {
        match *self {
            Schedule::Periodic { preperiod, period } => {
                if pos < preperiod {
                    pos
                } else {
                    preperiod + (pos - preperiod) % period
                }
            }
            Schedule::ThueMorse => thue_morse(pos as u64) as usize,
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, Schedule::Periodic { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingAutomaton {
    base: u32,
    schedule: Schedule,
    num_states: usize,
    initial: usize,
    accepting: Vec<bool>,
    /// `delta[class][q * base + d]`; `None` rejects.
    delta: Vec<Vec<Option<u32>>>,
    leading_zeros: LeadingZeroPolicy,
}

impl CountingAutomaton {
    pub(crate) fn build(spec: &LanguageSpec) -> Result<Self> {
        spec.validate()?;
        let b = spec.base as usize;
        let mut a = match &spec.kind {
            LanguageKind::DigitRestriction(dr) => {
                let classes: Vec<&Vec<u8>> = dr.prefix.iter().chain(&dr.period).collect();
                let delta = classes
                    .iter()
                    .map(|set| (0..b).map(|d| set.contains(&(d as u8)).then_some(0)).collect())
                    .collect();
                CountingAutomaton {
                    base: spec.base,
                    schedule: Schedule::Periodic { preperiod: dr.prefix.len(), period: dr.period.len() },
                    num_states: 1,
                    initial: 0,
                    accepting: vec![true],
                    delta,
                    leading_zeros: spec.leading_zeros,
                }
            }
            LanguageKind::PeriodicBlocks(pb) => block_automaton(spec.base, pb.period, &pb.forbidden)?,
            LanguageKind::PowerAvoidance(pa) => {
                let k = pa.exponent as usize;
                let a = pa.letter as usize;
                // state = length of the current run of the letter (< k)
                let row: Vec<Option<u32>> = (0..k)
                    .flat_map(|run| {
                        (0..b).map(move |d| {
                            if d == a {
                                (run + 1 < k).then_some((run + 1) as u32)
                            } else {
                                Some(0)
                            }
                        })
                    })
                    .collect();
                CountingAutomaton {
                    base: spec.base,
                    schedule: Schedule::Periodic { preperiod: 0, period: 1 },
                    num_states: k,
                    initial: 0,
                    accepting: vec![true; k],
                    delta: vec![row],
                    leading_zeros: spec.leading_zeros,
                }
            }
            LanguageKind::EvilFactor => {
                // state 1 = last digit read was a 1
                let class = |evil: bool| -> Vec<Option<u32>> {
                    vec![
                        Some(0),
                        Some(1),
                        if evil { None } else { Some(0) },
                        Some(1),
                    ]
                };
                CountingAutomaton {
                    base: 2,
                    schedule: Schedule::ThueMorse,
                    num_states: 2,
                    initial: 0,
                    accepting: vec![true, true],
                    delta: vec![class(true), class(false)],
                    leading_zeros: spec.leading_zeros,
                }
            }
            LanguageKind::Dfa(dfa) => match dfa.direction {
                Direction::Msd => CountingAutomaton {
                    base: spec.base,
                    schedule: Schedule::Periodic { preperiod: 0, period: 1 },
                    num_states: dfa.states,
                    initial: dfa.initial,
                    accepting: dfa.accepting.clone(),
                    delta: vec![dfa
                        .transitions
                        .iter()
                        .flat_map(|row| row.iter().map(|&t| Some(t as u32)))
                        .collect()],
                    leading_zeros: spec.leading_zeros,
                },
                Direction::Lsd => reverse_dfa(spec.base, dfa, spec.leading_zeros)?,
            },
        };
        a.leading_zeros = spec.leading_zeros;
        Ok(a)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn schedule(&self) -> Schedule {
        self.schedule
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_classes(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn leading_zeros(&self) -> LeadingZeroPolicy {
        self.leading_zeros
    }

    pub fn with_policy(&self, leading_zeros: LeadingZeroPolicy) -> Self {
        CountingAutomaton { leading_zeros, ..self.clone() }
    }

    pub fn step(&self, class: usize, q: usize, d: u8) -> Option<usize> {
        self.delta[class][q * self.base as usize + d as usize].map(|t| t as usize)
    }

    fn first_digits(&self) -> std::ops::Range<u8> {
        let lo = u8::from(self.leading_zeros == LeadingZeroPolicy::Forbidden);
        lo..self.base as u8
    }

    /// Runs an MSD-first word.
    pub fn accepts(&self, w: &[u8]) -> bool {
        if self.leading_zeros == LeadingZeroPolicy::Forbidden && w.first() == Some(&0) {
            return false;
        }
        let n = w.len();
        let mut q = self.initial;
        for (k, &d) in w.iter().enumerate() {
            match self.step(self.schedule.class_of(n - 1 - k), q, d) {
                Some(t) => q = t,
                None => return false,
            }
        }
        self.accepting[q]
    }

    /// `T[q'][q]` = number of digits taking `q` to `q'` in the class.
    pub fn transfer_matrix(&self, class: usize) -> IntMatrix {
        self.digit_matrix(class, 0)
    }

    /// Like [`Self::transfer_matrix`] but for the leading digit.
    pub fn first_digit_matrix(&self, class: usize) -> IntMatrix {
        self.digit_matrix(class, self.first_digits().start)
    }

    fn digit_matrix(&self, class: usize, lo: u8) -> IntMatrix {
        let n = self.num_states;
        let mut m = IntMatrix::zeros(n, n);
        for q in 0..n {
            for d in lo..self.base as u8 {
                if let Some(t) = self.step(class, q, d) {
                    m[(t, q)] += BigInt::one();
                }
            }
        }
        m
    }

    /// Number of accepted words of length exactly `n` (forward MSD-first sweep).
    pub fn count(&self, n: usize) -> BigUint {
        let mut v = vec![BigUint::zero(); self.num_states];
        v[self.initial] = BigUint::one();
        for k in 0..n {
            let class = self.schedule.class_of(n - 1 - k);
            let digits = if k == 0 { self.first_digits() } else { 0..self.base as u8 };
            let mut next = vec![BigUint::zero(); self.num_states];
            for (q, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for d in digits.clone() {
                    if let Some(t) = self.step(class, q, d) {
                        next[t] += x;
                    }
                }
            }
            v = next;
        }
        v.iter()
            .zip(&self.accepting)
            .filter(|(_, &acc)| acc)
            .map(|(x, _)| x)
            .sum()
    }

    /// Suffix vectors `r_0..=r_len`: `r_j[q]` is the number of ways to read
    /// positions `j-1, .., 0` from state `q` and accept.
    pub fn suffix_vectors(&self, len: usize) -> Vec<Vec<BigUint>> {
        let mut out = Vec::with_capacity(len + 1);
        let mut r: Vec<BigUint> = self
            .accepting
            .iter()
            .map(|&a| if a { BigUint::one() } else { BigUint::zero() })
            .collect();
        out.push(r.clone());
        for j in 0..len {
            r = self.suffix_step(&r, self.schedule.class_of(j));
            out.push(r.clone());
        }
        out
    }

    fn suffix_step(&self, r: &[BigUint], class: usize) -> Vec<BigUint> {
        (0..self.num_states)
            .map(|q| {
                (0..self.base as u8)
                    .filter_map(|d| self.step(class, q, d))
                    .map(|t| &r[t])
                    .sum()
            })
            .collect()
    }

    /// Count of length `n` words read from `r_{n-1}`.
    fn count_from_suffix(&self, r: &[BigUint], n: usize) -> BigUint {
        let class = self.schedule.class_of(n - 1);
        self.first_digits()
            .filter_map(|d| self.step(class, self.initial, d))
            .map(|t| &r[t])
            .sum()
    }

    /// Counts for lengths `0..=n` in one LSD-anchored sweep.
    pub fn counts_upto(&self, n: usize) -> Vec<BigUint> {
        let mut out = Vec::with_capacity(n + 1);
        let mut r: Vec<BigUint> = self
            .accepting
            .iter()
            .map(|&a| if a { BigUint::one() } else { BigUint::zero() })
            .collect();
        out.push(r[self.initial].clone());
        for len in 1..=n {
            out.push(self.count_from_suffix(&r, len));
            r = self.suffix_step(&r, self.schedule.class_of(len - 1));
        }
        out
    }

    /// Union-graph successors (over all classes and digits).
    pub fn successors(&self, q: usize) -> BTreeSet<usize> {
        (0..self.num_classes())
            .flat_map(|c| (0..self.base as u8).filter_map(move |d| self.step(c, q, d)))
            .collect()
    }

    /// States reachable from the initial state in the union graph.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for t in self.successors(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// States from which an accepting state is reachable in the union graph.
    pub fn coreachable(&self) -> Vec<bool> {
        let mut live = self.accepting.clone();
        loop {
            let mut changed = false;
            for q in 0..self.num_states {
                if !live[q] && self.successors(q).iter().any(|&t| live[t]) {
                    live[q] = true;
                    changed = true;
                }
            }
            if !changed {
                return live;
            }
        }
    }
}

/// Aho–Corasick automaton over the union of blocks, crossed with residues.
fn block_automaton(base: u32, period: usize, forbidden: &[Vec<Vec<u8>>]) -> Result<CountingAutomaton> {
    let b = base as usize;
    // trie
    let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; b]];
    let mut depth = vec![0usize];
    // residues at which the pattern ending at a node is forbidden
    let mut own: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for (r, blocks) in forbidden.iter().enumerate() {
        for block in blocks {
            let mut node = 0;
            for &d in block {
                node = match children[node][d as usize] {
                    Some(c) => c,
                    None => {
                        children.push(vec![None; b]);
                        depth.push(depth[node] + 1);
                        own.push(BTreeSet::new());
                        let c = children.len() - 1;
                        children[node][d as usize] = Some(c);
                        c
                    }
                };
                if children.len() > MAX_STATES {
                    return Err(Error::ResourceLimit("forbidden-block trie too large".into()));
                }
            }
            own[node].insert(r);
        }
    }
    let n = children.len();
    // failure links and goto function in BFS order
    let mut fail = vec![0usize; n];
    let mut goto = vec![vec![0usize; b]; n];
    let mut out: Vec<BTreeSet<usize>> = own.clone();
    let mut queue = VecDeque::new();
    for d in 0..b {
        if let Some(c) = children[0][d] {
            goto[0][d] = c;
            queue.push_back(c);
        }
    }
    while let Some(u) = queue.pop_front() {
        let f = fail[u];
        let inherited: Vec<usize> = out[f].iter().copied().collect();
        out[u].extend(inherited);
        for d in 0..b {
            match children[u][d] {
                Some(c) => {
                    fail[c] = goto[f][d];
                    goto[u][d] = c;
                    queue.push_back(c);
                }
                None => goto[u][d] = goto[f][d],
            }
        }
    }
    let delta = (0..period)
        .map(|r| {
            (0..n)
                .flat_map(|q| {
                    let goto = &goto;
                    let out = &out;
                    (0..b).map(move |d| {
                        let t = goto[q][d];
                        (!out[t].contains(&r)).then_some(t as u32)
                    })
                })
                .collect()
        })
        .collect();
    Ok(CountingAutomaton {
        base,
        schedule: Schedule::Periodic { preperiod: 0, period },
        num_states: n,
        initial: 0,
        accepting: vec![true; n],
        delta,
        leading_zeros: LeadingZeroPolicy::Forbidden,
    })
}

/// MSD-first automaton for an LSD-first DFA by reverse subset construction.
fn reverse_dfa(base: u32, dfa: &super::DfaSpec, policy: LeadingZeroPolicy) -> Result<CountingAutomaton> {
    let b = base as usize;
    let start: Vec<bool> = dfa.accepting.clone();
    let mut index: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut sets = vec![start.clone()];
    index.insert(start, 0);
    let mut delta: Vec<Option<u32>> = Vec::new();
    let mut i = 0;
    while i < sets.len() {
        let s = sets[i].clone();
        for d in 0..b {
            let pre: Vec<bool> = (0..dfa.states).map(|q| s[dfa.transitions[q][d]]).collect();
            let next = match index.get(&pre) {
                Some(&k) => k,
                None => {
                    sets.push(pre.clone());
                    index.insert(pre, sets.len() - 1);
                    if sets.len() > MAX_STATES {
                        return Err(Error::ResourceLimit("reversed dfa too large".into()));
                    }
                    sets.len() - 1
                }
            };
            delta.push(Some(next as u32));
        }
        i += 1;
    }
    let accepting = sets.iter().map(|s| s[dfa.initial]).collect();
    Ok(CountingAutomaton {
        base,
        schedule: Schedule::Periodic { preperiod: 0, period: 1 },
        num_states: sets.len(),
        initial: 0,
        accepting,
        delta: vec![delta],
        leading_zeros: policy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::{brute_count, presets::preset};

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn l1_counts() {
        let a = preset("L1").unwrap().compile().unwrap();
        assert_eq!(a.counts_upto(4), u(&[1, 9, 89, 881, 8721]));
        assert_eq!(a.count(4), BigUint::from(8721u32));
    }

    #[test]
    fn evil_refused_by_compile() {
        let lj = preset("LJ").unwrap();
        assert!(matches!(lj.compile(), Err(Error::NonRegular(_))));
        let a = lj.position_automaton().unwrap();
        assert_eq!(a.counts_upto(8), u(&[1, 2, 3, 6, 12, 18, 36, 54, 72]));
    }

    #[test]
    fn kempner_single_state() {
        let a = preset("kempner").unwrap().compile().unwrap();
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.counts_upto(3), u(&[1, 8, 72, 648]));
    }

    #[test]
    fn fibonacci_words() {
        // binary words avoiding 11, leading zeros allowed: Fibonacci numbers
        let spec = preset("y:2:2").unwrap();
        let a = spec.compile().unwrap();
        assert_eq!(a.counts_upto(7), u(&[1, 2, 3, 5, 8, 13, 21, 34]));
    }

    #[test]
    fn forward_and_sweep_agree_with_brute() {
        for name in ["L1", "L2", "L5", "LJp", "L3:3:1:2", "y:2:3", "thue_morse"] {
            let spec = preset(name).unwrap();
            let a = spec.position_automaton().unwrap();
            let nmax = if spec.base == 2 { 12 } else { 5 };
            let sweep = a.counts_upto(nmax);
            for n in 0..=nmax {
                let brute = BigUint::from(brute_count(&spec, n).unwrap());
                assert_eq!(a.count(n), brute, "{name} n={n}");
                assert_eq!(sweep[n], brute, "{name} n={n}");
            }
        }
    }

    #[test]
    fn transfer_matrix_column_sums() {
        let a = preset("L5").unwrap().compile().unwrap();
        for c in 0..a.num_classes() {
            let t = a.transfer_matrix(c);
            for q in 0..a.num_states() {
                let col: BigInt = (0..a.num_states()).map(|p| t[(p, q)].clone()).sum();
                assert!(col <= BigInt::from(10));
            }
        }
    }
}
