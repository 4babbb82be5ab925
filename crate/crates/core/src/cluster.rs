//! Goulden–Jackson cluster method for factor-avoiding words.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::solve_polynomial_system;
use crate::poly::IntPolynomial;

/// Reduced set of forbidden factors over the alphabet `0..alphabet`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    alphabet: usize,
    patterns: Vec<Vec<u16>>,
}

fn is_factor(needle: &[u16], hay: &[u16]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

impl PatternSet {
    /// Validates letters and drops patterns containing another pattern.
    pub fn new(alphabet: usize, mut patterns: Vec<Vec<u16>>) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidInput("empty alphabet".into()));
        }
        for p in &patterns {
            if p.is_empty() {
                return Err(Error::InvalidInput("empty pattern".into()));
            }
            if let Some(&c) = p.iter().find(|&&c| c as usize >= alphabet) {
                return Err(Error::InvalidInput(format!("letter {c} outside alphabet of size {alphabet}")));
            }
        }
        patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        patterns.dedup();
        let mut kept: Vec<Vec<u16>> = Vec::new();
        for p in patterns {
            if !kept.iter().any(|q| is_factor(q, &p)) {
                kept.push(p);
            }
        }
        Ok(PatternSet { alphabet, patterns: kept })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn patterns(&self) -> &[Vec<u16>] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn avoids(&self, word: &[u16]) -> bool {
        !self.patterns.iter().any(|p| is_factor(p, word))
    }
}

/// `num / den` with `den(0) > 0`, no common factor and no common content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGF {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

impl RationalGF {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::InvalidInput("denominator must have a nonzero constant term".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        } else {
            (num, den)
        };
        let c = num.content().gcd(&den.content());
        if !c.is_zero() && !c.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPolynomial::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalGF { num, den })
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(num), IntPolynomial::from_i64s(den))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num.to_ascending_string(), self.den.to_ascending_string())
    }
}

/// Generating function of the words avoiding every pattern.
pub fn gj_generating_function(set: &PatternSet) -> Result<RationalGF> {
    let m = set.alphabet;
    let x = |k: usize| IntPolynomial::monomial(BigInt::one(), k);
    // proper prefixes of patterns index the unknowns E_u
    let mut index: HashMap<&[u16], usize> = HashMap::new();
    let mut prefixes: Vec<&[u16]> = Vec::new();
    for p in &set.patterns {
        for h in 1..p.len() {
            let u = &p[..h];
            if !index.contains_key(u) {
                index.insert(u, prefixes.len());
                prefixes.push(u);
            }
        }
    }
    let n = prefixes.len();
    // E_u = sum over patterns q ending with u (|q| > |u|) of C_q, where
    // C_q = -x^|q| - sum_h x^(|q|-h) E_{q[..h]}.
    let mut a = vec![vec![IntPolynomial::zero(); n]; n];
    let mut rhs = vec![IntPolynomial::zero(); n];
    for (i, u) in prefixes.iter().enumerate() {
        a[i][i] = &a[i][i] + &IntPolynomial::one();
        for q in &set.patterns {
            if q.len() <= u.len() || !q.ends_with(u) {
                continue;
            }
            rhs[i] = &rhs[i] - &x(q.len());
            for h in 1..q.len() {
                let j = index[&q[..h]];
                a[i][j] = &a[i][j] + &x(q.len() - h);
            }
        }
    }
    let (d, sol) = solve_polynomial_system(&a, &rhs)
        .ok_or_else(|| Error::InvalidInput("singular cluster system".into()))?;
    // C = numc / d
    let mut numc = IntPolynomial::zero();
    for p in &set.patterns {
        numc = &numc - &(&d * &x(p.len()));
        for h in 1..p.len() {
            numc = &numc - &(&x(p.len() - h) * &sol[index[&p[..h]]]);
        }
    }
    let one_minus_mx = IntPolynomial::new(vec![BigInt::one(), -BigInt::from(m)]);
    let den = &(&d * &one_minus_mx) - &numc;
    RationalGF::new(d, den)
}

/// Power-series coefficients `f_0..=f_n`; fails if they are not integers.
pub fn gf_coefficients(gf: &RationalGF, n: usize) -> Result<Vec<BigInt>> {
    let d0 = gf.den.coeff(0);
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = gf.num.coeff(k);
        for j in 1..=k.min(gf.den.degree().unwrap_or(0)) {
            acc -= gf.den.coeff(j) * &out[k - j];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::Unsupported(format!("coefficient {k} is not an integer")));
        }
        out.push(q);
    }
    Ok(out)
}

/// Pattern set over `2b` letters (`a` is letter `a`, `a'` is letter `b + a`)
/// forcing primed and unprimed letters to alternate, so that blocks can be
/// tied to the parity of their position.
pub fn primed_alphabet_patterns(base: u32, even_blocks: &[Vec<u8>], odd_blocks: &[Vec<u8>]) -> Result<PatternSet> {
    crate::numeration::check_base(base)?;
    let b = base as u16;
    let mut pats = Vec::new();
    for a in 0..b {
        for c in 0..b {
            pats.push(vec![a, c]);
            pats.push(vec![b + a, b + c]);
        }
    }
    for (blocks, primed_first) in [(even_blocks, true), (odd_blocks, false)] {
        for block in blocks {
            if block.len() != 2 {
                return Err(Error::Unsupported("primed-alphabet patterns need blocks of length 2".into()));
            }
            if block.iter().any(|&d| u32::from(d) >= base) {
                return Err(Error::InvalidDigit { digit: block.iter().copied().max().unwrap().into(), base });
            }
            let (u, v) = (u16::from(block[0]), u16::from(block[1]));
            pats.push(if primed_first { vec![b + u, v] } else { vec![u, b + v] });
        }
    }
    PatternSet::new(2 * base as usize, pats)
}

/// Exhaustive count of length-`n` words avoiding the set.
pub fn brute_avoiding(set: &PatternSet, n: usize) -> u64 {
    let m = set.alphabet as u64;
    let total = m.pow(n as u32);
    let mut word = vec![0u16; n];
    let mut count = 0;
    for _ in 0..total {
        if set.avoids(&word) {
            count += 1;
        }
        for k in (0..n).rev() {
            word[k] += 1;
            if u64::from(word[k]) < m {
                break;
            }
            word[k] = 0;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bl(s: &[&str]) -> Vec<Vec<u8>> {
        s.iter().map(|b| crate::numeration::parse_block(b, 10).unwrap()).collect()
    }

    #[test]
    fn empty_set_is_geometric() {
        let s = PatternSet::new(3, vec![]).unwrap();
        let gf = gj_generating_function(&s).unwrap();
        assert_eq!(gf, RationalGF::from_i64s(&[1], &[1, -3]).unwrap());
        assert!(PatternSet::new(0, vec![]).is_err());
    }

    #[test]
    fn fibonacci_from_single_pattern() {
        let s = PatternSet::new(2, vec![vec![1, 1]]).unwrap();
        let gf = gj_generating_function(&s).unwrap();
        assert_eq!(gf, RationalGF::from_i64s(&[1, 1], &[1, -1, -1]).unwrap());
        let c = gf_coefficients(&gf, 6).unwrap();
        assert_eq!(c, [1, 2, 3, 5, 8, 13, 21].map(BigInt::from).to_vec());
    }

    #[test]
    fn l1_primed_gf() {
        let s = primed_alphabet_patterns(10, &bl(&["12"]), &bl(&["89"])).unwrap();
        assert_eq!(s.len(), 202);
        let gf = gj_generating_function(&s).unwrap();
        assert_eq!(gf, RationalGF::from_i64s(&[1, 10, -1], &[1, -10, 1]).unwrap());
        assert_eq!(gf.to_string(), "(1 + 10x - x^2) / (1 - 10x + x^2)");
    }

    #[test]
    fn l2_primed_gf() {
        let s = primed_alphabet_patterns(10, &bl(&["12"]), &bl(&["21"])).unwrap();
        let gf = gj_generating_function(&s).unwrap();
        assert_eq!(gf, RationalGF::from_i64s(&[1, 11, 9], &[1, -9, -9]).unwrap());
    }

    #[test]
    fn alternation_only() {
        let s = primed_alphabet_patterns(10, &[], &[]).unwrap();
        let c = gf_coefficients(&gj_generating_function(&s).unwrap(), 6).unwrap();
        assert_eq!(c[0], BigInt::from(1));
        for n in 1..=6 {
            assert_eq!(c[n], BigInt::from(2) * BigInt::from(10).pow(n as u32));
        }
        for n in 0..=3 {
            assert_eq!(BigInt::from(brute_avoiding(&s, n)), c[n]);
        }
    }

    #[test]
    fn reduction_drops_superwords() {
        let s = PatternSet::new(2, vec![vec![0, 1, 1], vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(s.patterns(), &[vec![1, 1]]);
    }

    #[test]
    fn block_length_checked() {
        assert!(matches!(primed_alphabet_patterns(10, &bl(&["123"]), &[]), Err(Error::Unsupported(_))));
    }

    fn pattern_strategy() -> impl Strategy<Value = (usize, Vec<Vec<u16>>)> {
        (2usize..=3).prop_flat_map(|m| {
            let pat = proptest::collection::vec(0..m as u16, 1..=3);
            (Just(m), proptest::collection::vec(pat, 0..=3))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn gj_matches_brute_force((m, pats) in pattern_strategy()) {
            let s = PatternSet::new(m, pats).unwrap();
            let c = gf_coefficients(&gj_generating_function(&s).unwrap(), 6).unwrap();
            for n in 0..=6 {
                prop_assert_eq!(c[n].clone(), BigInt::from(brute_avoiding(&s, n)));
            }
        }
    }
}
