//! Automatic and regular characteristic sequences.
//!
//! The characteristic sequence `s_n = [rep_b(n) in L]` of a regular language
//! is produced by a DFAO reading base-b digits least significant first. The
//! DFAO is built exactly from the counting automaton by a reverse subset
//! construction tracking the position class, then minimized. Linear
//! representations evaluate digits most significant first:
//! `s_n = V M_{w_k} ... M_{w_0} W`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::langspec::{CountingAutomaton, LanguageSpec, LeadingZeroPolicy, Schedule};
use crate::linalg::{coordinates, IntMatrix, RatMatrix};

const MAX_DFAO_STATES: usize = 100_000;

/// Deterministic finite automaton with output, reading LSD first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dfao {
    pub base: u32,
    pub initial: usize,
    /// `transitions[q][d]`
    pub transitions: Vec<Vec<usize>>,
    pub output: Vec<u8>,
    /// Reading extra zeros after the most significant digit never changes the output.
    pub zero_robust: bool,
}

impl Dfao {
    pub fn new(base: u32, initial: usize, transitions: Vec<Vec<usize>>, output: Vec<u8>) -> Result<Self> {
        let n = transitions.len();
        if n == 0 || initial >= n || output.len() != n {
            return Err(Error::InvalidInput("inconsistent DFAO shape".into()));
        }
        if transitions.iter().any(|r| r.len() != base as usize || r.iter().any(|&t| t >= n)) {
            return Err(Error::InvalidInput("DFAO transitions must be total".into()));
        }
        let mut d = Dfao { base, initial, transitions, output, zero_robust: false };
        d.zero_robust = d.check_zero_robust();
        Ok(d)
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    fn check_zero_robust(&self) -> bool {
        self.reachable()
            .iter()
            .enumerate()
            .all(|(q, &r)| !r || self.output[self.transitions[q][0]] == self.output[q])
            && self.zero_closure_consistent()
    }

    // outputs along every zero chain stay constant
    fn zero_closure_consistent(&self) -> bool {
        let reach = self.reachable();
        (0..self.num_states()).filter(|&q| reach[q]).all(|q| {
            let mut p = q;
            for _ in 0..=self.num_states() {
                p = self.transitions[p][0];
                if self.output[p] != self.output[q] {
                    return false;
                }
            }
            true
        })
    }

    pub fn run_from(&self, mut q: usize, lsd_first: impl IntoIterator<Item = u8>) -> usize {
        for d in lsd_first {
            q = self.transitions[q][d as usize];
        }
        q
    }

    /// `s_n`.
    pub fn value(&self, mut n: u64) -> u8 {
        let b = u64::from(self.base);
        let mut q = self.initial;
        while n > 0 {
            q = self.transitions[q][(n % b) as usize];
            n /= b;
        }
        self.output[q]
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for &t in &self.transitions[q] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// States from which some state with nonzero output is reachable.
    pub fn live(&self) -> Vec<bool> {
        let mut live: Vec<bool> = self.output.iter().map(|&o| o != 0).collect();
        loop {
            let mut changed = false;
            for q in 0..self.num_states() {
                if !live[q] && self.transitions[q].iter().any(|&t| live[t]) {
                    live[q] = true;
                    changed = true;
                }
            }
            if !changed {
                return live;
            }
        }
    }

    /// Moore minimization of the reachable part; states renumbered in BFS order.
    pub fn minimize(&self) -> Dfao {
        let reach = self.reachable();
        let states: Vec<usize> = (0..self.num_states()).filter(|&q| reach[q]).collect();
        let mut class: HashMap<usize, usize> = HashMap::new();
        let mut ids: BTreeMap<u8, usize> = BTreeMap::new();
        for &q in &states {
            let next = ids.len();
            class.insert(q, *ids.entry(self.output[q]).or_insert(next));
        }
        let mut count = ids.len();
        loop {
            let mut sig: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next_class = HashMap::new();
            for &q in &states {
                let key = (class[&q], self.transitions[q].iter().map(|t| class[t]).collect::<Vec<_>>());
                let n = sig.len();
                next_class.insert(q, *sig.entry(key).or_insert(n));
            }
            let new_count = sig.len();
            class = next_class;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // renumber in BFS order from the initial class
        let rep: HashMap<usize, usize> = states.iter().map(|&q| (class[&q], q)).collect();
        let mut order: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::from([class[&self.initial]]);
        order.insert(class[&self.initial], 0);
        let mut seq = vec![class[&self.initial]];
        while let Some(c) = queue.pop_front() {
            for &t in &self.transitions[rep[&c]] {
                let tc = class[&t];
                if !order.contains_key(&tc) {
                    order.insert(tc, order.len());
                    seq.push(tc);
                    queue.push_back(tc);
                }
            }
        }
        let transitions = seq
            .iter()
            .map(|c| self.transitions[rep[c]].iter().map(|t| order[&class[t]]).collect())
            .collect();
        let output = seq.iter().map(|c| self.output[rep[c]]).collect();
        Dfao { base: self.base, initial: 0, transitions, output, zero_robust: self.zero_robust }
    }

    /// The same sequence read in base `b^l`, minimized.
    pub fn lift(&self, l: u32) -> Result<Dfao> {
        if l == 0 {
            return Err(Error::InvalidInput("lift exponent must be at least 1".into()));
        }
        let big = u64::from(self.base).pow(l);
        if big > 1 << 16 {
            return Err(Error::ResourceLimit(format!("lifted base {big} is too large")));
        }
        let b = u64::from(self.base);
        let transitions = (0..self.num_states())
            .map(|q| {
                (0..big)
                    .map(|w| {
                        let mut x = w;
                        self.run_from(
                            q,
                            (0..l).map(|_| {
                                let d = (x % b) as u8;
                                x /= b;
                                d
                            }),
                        )
                    })
                    .collect()
            })
            .collect();
        let d = Dfao {
            base: big as u32,
            initial: self.initial,
            transitions,
            output: self.output.clone(),
            zero_robust: self.zero_robust,
        };
        Ok(d.minimize())
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph dfao {\n  rankdir=LR;\n  start [shape=point];\n");
        let _ = writeln!(s, "  start -> q{};", self.initial);
        for q in 0..self.num_states() {
            let _ = writeln!(s, "  q{q} [label=\"q{q}/{}\"];", self.output[q]);
        }
        for q in 0..self.num_states() {
            let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (d, &t) in self.transitions[q].iter().enumerate() {
                by_target.entry(t).or_default().push(d);
            }
            for (t, ds) in by_target {
                let label = compress_digits(&ds);
                let _ = writeln!(s, "  q{q} -> q{t} [label=\"{label}\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}

fn compress_digits(ds: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < ds.len() {
        let mut j = i;
        while j + 1 < ds.len() && ds[j + 1] == ds[j] + 1 {
            j += 1;
        }
        parts.push(if j > i + 1 { format!("{}-{}", ds[i], ds[j]) } else if j == i + 1 {
            format!("{},{}", ds[i], ds[j])
        } else {
            ds[i].to_string()
        });
        i = j + 1;
    }
    parts.join(",")
}

fn next_phase(schedule: Schedule, phase: usize) -> usize {
    match schedule {
        Schedule::Periodic { preperiod, period } => {
            if phase + 1 < preperiod + period {
                phase + 1
            } else {
                preperiod
            }
        }
        Schedule::ThueMorse => unreachable!("regular automata have periodic schedules"),
    }
}

/// Minimal zero-robust DFAO for the characteristic sequence of a regular
/// language (canonical representations; `rep_b(0)` is the empty word).
pub fn dfao_from_spec(spec: &LanguageSpec) -> Result<Dfao> {
    let a = spec.with_policy(LeadingZeroPolicy::Forbidden).compile()?;
    dfao_from_automaton(&a)
}

pub fn dfao_from_automaton(a: &CountingAutomaton) -> Result<Dfao> {
    let schedule = a.schedule();
    if !schedule.is_periodic() {
        return Err(Error::NonRegular("position schedule is not ultimately periodic".into()));
    }
    let n = a.num_states();
    let b = a.base() as usize;
    // (set of states that accept the digits read so far, phase, output)
    type Key = (Vec<bool>, usize, bool);
    let start: Key = (a.accepting().to_vec(), 0, a.accepting()[a.initial()]);
    let mut index: HashMap<Key, usize> = HashMap::new();
    let mut keys = vec![start.clone()];
    index.insert(start, 0);
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < keys.len() {
        let (set, phase, out) = keys[i].clone();
        let class = phase;
        let mut row = Vec::with_capacity(b);
        for d in 0..b as u8 {
            let next: Vec<bool> = (0..n).map(|q| a.step(class, q, d).is_some_and(|t| set[t])).collect();
            let out2 = if d != 0 { next[a.initial()] } else { out };
            let key = (next, next_phase(schedule, phase), out2);
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    if keys.len() >= MAX_DFAO_STATES {
                        return Err(Error::ResourceLimit("DFAO construction exceeded the state budget".into()));
                    }
                    index.insert(key.clone(), keys.len());
                    keys.push(key);
                    keys.len() - 1
                }
            };
            row.push(id);
        }
        transitions.push(row);
        i += 1;
    }
    let output = keys.iter().map(|k| u8::from(k.2)).collect();
    let d = Dfao { base: a.base(), initial: 0, transitions, output, zero_robust: true };
    Ok(d.minimize())
}

/// A kernel element `(s_{b^e n + r})_n` with its first terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelElement {
    pub e: u32,
    pub r: u64,
    pub prefix: Vec<u8>,
}

/// Distinct kernel subsequences found by breadth-first search up to `depth`,
/// compared on their first `terms` values. Heuristic: a short prefix can
/// merge sequences that differ later.
pub fn kernel_sequences(dfao: &Dfao, depth: u32, terms: usize) -> Vec<KernelElement> {
    let b = u64::from(dfao.base);
    let prefix_of = |q: usize| -> Vec<u8> {
        (0..terms as u64)
            .map(|n| {
                let mut m = n;
                let mut p = q;
                while m > 0 {
                    p = dfao.transitions[p][(m % b) as usize];
                    m /= b;
                }
                dfao.output[p]
            })
            .collect()
    };
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut frontier = vec![(0u32, 0u64, dfao.initial)];
    while let Some((e, r, q)) = frontier.first().cloned() {
        frontier.remove(0);
        let prefix = prefix_of(q);
        if seen.contains_key(&prefix) {
            continue;
        }
        seen.insert(prefix.clone(), ());
        out.push(KernelElement { e, r, prefix });
        if e < depth {
            let scale = b.pow(e);
            for d in 0..b {
                frontier.push((e + 1, r + d * scale, dfao.transitions[q][d as usize]));
            }
        }
    }
    out
}

/// `(V, M_0..M_{b-1}, W)` with `s_n = V M_{w_k} ... M_{w_0} W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRepresentation {
    pub base: u32,
    pub v: Vec<BigRational>,
    pub matrices: Vec<RatMatrix>,
    pub w: Vec<BigRational>,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl LinearRepresentation {
    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// Full state-space representation: `V = output`, `M_d = A_d^T`, `W = e_{q0}`.
    pub fn from_dfao(dfao: &Dfao) -> Self {
        let keep: Vec<usize> = (0..dfao.num_states()).collect();
        Self::from_states(dfao, &keep)
    }

    /// Representation on the reachable states that can still produce a nonzero output.
    pub fn trimmed(dfao: &Dfao) -> Self {
        let live = dfao.live();
        let reach = dfao.reachable();
        let keep: Vec<usize> = (0..dfao.num_states()).filter(|&q| live[q] && reach[q]).collect();
        Self::from_states(dfao, &keep)
    }

    fn from_states(dfao: &Dfao, keep: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let k = keep.len();
        let v = keep.iter().map(|&q| q_out(dfao.output[q])).collect();
        let matrices = (0..dfao.base as usize)
            .map(|d| {
                let mut m = RatMatrix::zeros(k, k);
                for (i, &src) in keep.iter().enumerate() {
                    if let Some(&j) = pos.get(&dfao.transitions[src][d]) {
                        m[(j, i)] = BigRational::one();
                    }
                }
                m
            })
            .collect();
        let w = keep.iter().map(|&s| if s == dfao.initial { q(1) } else { q(0) }).collect();
        LinearRepresentation { base: dfao.base, v, matrices, w }
    }

    /// Value on MSD-first digits.
    pub fn evaluate_digits(&self, msd_first: &[u8]) -> BigRational {
        let mut row = self.v.clone();
        for &d in msd_first {
            row = self.matrices[d as usize].vec_mul(&row);
        }
        row.iter().zip(&self.w).map(|(a, b)| a * b).sum()
    }

    pub fn evaluate(&self, n: u64) -> BigRational {
        let digits = crate::numeration::to_digits(n, self.base).unwrap_or_default();
        self.evaluate_digits(&digits)
    }

    /// `sum_i M_i`.
    pub fn sum_matrix(&self) -> RatMatrix {
        let n = self.dim();
        self.matrices.iter().fold(RatMatrix::zeros(n, n), |acc, m| acc.add_mat(m))
    }

    /// Integer sum matrix when every entry is integral.
    pub fn int_sum_matrix(&self) -> Option<IntMatrix> {
        let s = self.sum_matrix();
        s.is_integral().then(|| s.map(|x| x.to_integer()))
    }

    /// Representation over base `b^l`: `M'_w = M_{d_1} ... M_{d_l}` for the
    /// base-b digits `d_1..d_l` of `w`, most significant first.
    pub fn lift_base(&self, l: u32) -> Result<LinearRepresentation> {
        if l == 0 {
            return Err(Error::InvalidInput("lift exponent must be at least 1".into()));
        }
        let b = u64::from(self.base);
        let big = b.pow(l);
        if big > 1 << 16 {
            return Err(Error::ResourceLimit(format!("lifted base {big} is too large")));
        }
        let n = self.dim();
        let matrices = (0..big)
            .map(|w| {
                let mut digits = Vec::with_capacity(l as usize);
                let mut x = w;
                for _ in 0..l {
                    digits.push((x % b) as usize);
                    x /= b;
                }
                digits.reverse();
                digits.iter().fold(RatMatrix::identity(n), |acc, &d| acc.mul_mat(&self.matrices[d]))
            })
            .collect();
        Ok(LinearRepresentation { base: big as u32, v: self.v.clone(), matrices, w: self.w.clone() })
    }

    /// Minimal representation (Schützenberger reduction): restrict to the span
    /// of `{M_u W}`, then quotient by the span of `{V M_u}`.
    pub fn reduce(&self) -> LinearRepresentation {
        let right = closure(&self.w, |x, d| self.matrices[d].mul_vec(x), self.matrices.len());
        if right.is_empty() {
            return LinearRepresentation {
                base: self.base,
                v: vec![],
                matrices: vec![RatMatrix::zeros(0, 0); self.matrices.len()],
                w: vec![],
            };
        }
        // columns of the new matrices are coordinates of M_d b_j in the basis
        let coords = |v: &[BigRational]| coordinates(&right, v).expect("span is closed");
        let k = right.len();
        let m1: Vec<RatMatrix> = self
            .matrices
            .iter()
            .map(|m| {
                let cols: Vec<Vec<BigRational>> = right.iter().map(|bj| coords(&m.mul_vec(bj))).collect();
                RatMatrix::from_rows((0..k).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
            })
            .collect();
        let v1: Vec<BigRational> = right.iter().map(|bj| dot(&self.v, bj)).collect();
        let w1 = coords(&self.w);
        let left = closure(&v1, |x, d| m1[d].vec_mul(x), m1.len());
        if left.is_empty() {
            return LinearRepresentation {
                base: self.base,
                v: vec![],
                matrices: vec![RatMatrix::zeros(0, 0); self.matrices.len()],
                w: vec![],
            };
        }
        let k2 = left.len();
        let coords2 = |v: &[BigRational]| coordinates(&left, v).expect("span is closed");
        let m2 = m1
            .iter()
            .map(|m| RatMatrix::from_rows(left.iter().map(|ci| coords2(&m.vec_mul(ci))).collect()))
            .collect();
        let v2 = coords2(&v1);
        let w2: Vec<BigRational> = left.iter().map(|ci| dot(ci, &w1)).collect();
        debug_assert_eq!(v2.len(), k2);
        LinearRepresentation { base: self.base, v: v2, matrices: m2, w: w2 }
    }
}

fn q_out(o: u8) -> BigRational {
    q(i64::from(o))
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Basis of the smallest subspace containing `start` closed under `apply`.
fn closure(
    start: &[BigRational],
    apply: impl Fn(&[BigRational], usize) -> Vec<BigRational>,
    letters: usize,
) -> Vec<Vec<BigRational>> {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut queue = VecDeque::new();
    if start.iter().any(|x| !x.is_zero()) {
        basis.push(start.to_vec());
        queue.push_back(start.to_vec());
    }
    while let Some(x) = queue.pop_front() {
        for d in 0..letters {
            let y = apply(&x, d);
            if coordinates(&basis, &y).is_none() {
                basis.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    basis
}

#[derive(Serialize)]
struct RepJson {
    base: u32,
    dim: usize,
    v: Vec<String>,
    matrices: Vec<Vec<Vec<String>>>,
    w: Vec<String>,
}

impl Serialize for LinearRepresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        RepJson {
            base: self.base,
            dim: self.dim(),
            v: strs(&self.v),
            matrices: self.matrices.iter().map(|m| m.to_rows().iter().map(|r| strs(r)).collect()).collect(),
            w: strs(&self.w),
        }
        .serialize(s)
    }
}

/// Value of a representation as a small integer, for 0/1 sequences.
pub fn as_u8(x: &BigRational) -> Option<u8> {
    x.is_integer().then(|| x.to_integer().to_u8()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::presets::preset;

    fn thue_morse_dfao() -> Dfao {
        Dfao::new(2, 0, vec![vec![0, 1], vec![1, 0]], vec![0, 1]).unwrap()
    }

    #[test]
    fn l1_outputs_and_size() {
        let d = dfao_from_spec(&preset("L1").unwrap()).unwrap();
        let got: Vec<u8> = (0..13).map(|n| d.value(n)).collect();
        assert_eq!(got, vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0]);
        assert_eq!(d.num_states(), 5);
        assert!(d.zero_robust);
        let lifted = d.lift(2).unwrap();
        assert_eq!(lifted.num_states(), 3);
        for n in 0..20_000 {
            assert_eq!(lifted.value(n), d.value(n));
        }
    }

    #[test]
    fn dfao_matches_membership() {
        for name in ["L1", "L2", "L5", "kempner", "alt9", "powers2", "thue_morse", "L3:3:1:2", "y:2:3"] {
            let spec = preset(name).unwrap();
            let d = dfao_from_spec(&spec).unwrap();
            for n in 0..3000u64 {
                assert_eq!(d.value(n) == 1, spec.contains(n), "{name} n={n}");
            }
        }
    }

    #[test]
    fn zero_padding_is_harmless() {
        let d = dfao_from_spec(&preset("L5").unwrap()).unwrap();
        for n in 0..2000u64 {
            let q = d.run_from(d.initial, crate::numeration::to_digits(n, 10).unwrap().into_iter().rev());
            let padded = d.run_from(q, [0, 0, 0]);
            assert_eq!(d.output[q], d.output[padded]);
        }
    }

    #[test]
    fn letter_avoidance_two_states() {
        for b in 3..=10u32 {
            let d = dfao_from_spec(&preset(&format!("L4:{b}:1")).unwrap()).unwrap();
            assert_eq!(d.num_states(), 2);
        }
        assert!(matches!(dfao_from_spec(&preset("LJp").unwrap()), Err(Error::NonRegular(_))));
    }

    #[test]
    fn kernels() {
        let d = dfao_from_spec(&preset("L1").unwrap()).unwrap();
        let k = kernel_sequences(&d, 4, 300);
        assert_eq!(k.len(), 5);
        assert!(k.iter().any(|e| e.prefix.iter().all(|&x| x == 0)));
        assert_eq!(kernel_sequences(&thue_morse_dfao(), 5, 64).len(), 2);
        let ones = Dfao::new(10, 0, vec![vec![0; 10]], vec![1]).unwrap();
        assert_eq!(kernel_sequences(&ones, 3, 50).len(), 1);
    }

    #[test]
    fn representation_fidelity() {
        for name in ["L1", "L2", "L5", "kempner", "powers2"] {
            let d = dfao_from_spec(&preset(name).unwrap()).unwrap();
            let full = LinearRepresentation::from_dfao(&d);
            let trim = LinearRepresentation::trimmed(&d);
            let red = full.reduce();
            for n in 0..2000u64 {
                let want = BigRational::from_integer(d.value(n).into());
                assert_eq!(full.evaluate(n), want);
                assert_eq!(trim.evaluate(n), want);
                assert_eq!(red.evaluate(n), want, "{name} n={n}");
            }
        }
    }

    #[test]
    fn l1_dimensions() {
        let d = dfao_from_spec(&preset("L1").unwrap()).unwrap();
        assert_eq!(LinearRepresentation::trimmed(&d).dim(), 4);
        assert_eq!(LinearRepresentation::from_dfao(&d).reduce().dim(), 4);
    }

    #[test]
    fn letter_avoidance_collapses() {
        let d = dfao_from_spec(&preset("L4:10:3").unwrap()).unwrap();
        let r = LinearRepresentation::from_dfao(&d).reduce();
        assert_eq!(r.dim(), 1);
        for (c, m) in r.matrices.iter().enumerate() {
            assert_eq!(m[(0, 0)], q(if c == 3 { 0 } else { 1 }));
        }
        assert_eq!(r.sum_matrix()[(0, 0)], q(9));
    }

    #[test]
    fn lift_preserves_values() {
        let rep = LinearRepresentation::from_dfao(&thue_morse_dfao());
        let same = rep.lift_base(1).unwrap();
        assert_eq!(same, rep);
        let l2 = rep.lift_base(2).unwrap();
        assert_eq!(l2.matrices.len(), 4);
        for n in 0..=10_000u64 {
            assert_eq!(l2.evaluate(n), rep.evaluate(n));
            assert_eq!(rep.evaluate(n), q(i64::from(crate::numeration::thue_morse(n))));
        }
    }

    #[test]
    fn zero_language() {
        let d = Dfao::new(2, 0, vec![vec![0, 0]], vec![0]).unwrap();
        let r = LinearRepresentation::from_dfao(&d);
        assert!((0..100).all(|n| r.evaluate(n).is_zero()));
        assert_eq!(r.reduce().dim(), 0);
    }

    #[test]
    fn dot_export() {
        let d = dfao_from_spec(&preset("L4:10:9").unwrap()).unwrap();
        let dot = d.to_dot();
        assert!(dot.contains("q0 -> q0 [label=\"0-8\"]"));
        assert!(dot.contains("q0 -> q1 [label=\"9\"]"));
    }
}
