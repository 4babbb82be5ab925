//! Per-length word counts and exact linear recurrences.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

use crate::error::Result;
use crate::langspec::{CountingAutomaton, LanguageKind, LanguageSpec, LeadingZeroPolicy};
use crate::linalg::solve_unique;
use crate::poly::IntPolynomial;

pub use crate::langspec::brute_count;

/// `values[n]` is the number of members of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountSequence {
    pub spec: String,
    #[serde(serialize_with = "crate::manifest::ser_biguints")]
    pub values: Vec<BigUint>,
}

impl CountSequence {
    pub fn as_bigints(&self) -> Vec<BigInt> {
        self.values.iter().map(|v| BigInt::from(v.clone())).collect()
    }
}

/// Length-`n` count by transfer-matrix sweep.
pub fn auto_count(automaton: &CountingAutomaton, n: usize) -> BigUint {
    automaton.count(n)
}

/// Counts for lengths `0..=n`.
pub fn count_series(spec: &LanguageSpec, n: usize) -> Result<CountSequence> {
    let values = if matches!(spec.kind, LanguageKind::EvilFactor) && spec.leading_zeros == LeadingZeroPolicy::Allowed
    {
        (0..=n as u64).map(crate::evilwords::count_lj).collect()
    } else {
        spec.position_automaton()?.counts_upto(n)
    };
    Ok(CountSequence { spec: spec.label(), values })
}

/// `u(n+k) = c_{k-1} u(n+k-1) + ... + c_0 u(n)` with its initial terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    /// `c_0 .. c_{k-1}`
    pub coefficients: Vec<BigRational>,
    pub initial: Vec<BigInt>,
}

impl LinearRecurrence {
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer())
    }

    /// `x^k - c_{k-1} x^{k-1} - ... - c_0`, scaled to a primitive integer
    /// polynomial (monic whenever the coefficients are integers).
    pub fn char_poly(&self) -> IntPolynomial {
        let k = self.order();
        let den = self
            .coefficients
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let mut v: Vec<BigInt> = self
            .coefficients
            .iter()
            .map(|c| -(c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        v.push(den);
        debug_assert_eq!(v.len(), k + 1);
        IntPolynomial::new(v).primitive_part()
    }

    /// The first `n` terms.
    pub fn terms(&self, n: usize) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = self.initial.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let k = self.order();
        while out.len() < n {
            let m = out.len();
            let next = (0..k).fold(BigRational::zero(), |acc, j| acc + &self.coefficients[j] * &out[m - k + j]);
            out.push(next);
        }
        out.truncate(n);
        out
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.order();
        let idx = |j: usize| if j == 0 { "n".to_string() } else { format!("n+{j}") };
        write!(f, "u({}) =", idx(k))?;
        let mut first = true;
        for j in (0..k).rev() {
            let c = &self.coefficients[j];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                write!(f, " {}", if c.is_negative() { "-" } else { "" })?;
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mag.is_one() {
                write!(f, "u({})", idx(j))?;
            } else {
                write!(f, "{mag} u({})", idx(j))?;
            }
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

/// Minimal-order exact recurrence fitting every supplied term.
///
/// Order `k` is accepted only if the Hankel system has a unique solution and at
/// least one equation beyond the `k` needed to determine it.
pub fn fit_recurrence(values: &[BigInt], max_order: usize) -> Option<LinearRecurrence> {
    if values.is_empty() {
        return None;
    }
    if values.iter().all(|v| v.is_zero()) {
        return Some(LinearRecurrence { coefficients: vec![BigRational::zero()], initial: vec![values[0].clone()] });
    }
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    for k in 1..=max_order {
        let eqs = values.len().saturating_sub(k);
        if eqs < k + 1 {
            break;
        }
        let a: Vec<Vec<BigRational>> = (0..eqs).map(|n| (0..k).map(|j| q(&values[n + j])).collect()).collect();
        let b: Vec<BigRational> = (0..eqs).map(|n| q(&values[n + k])).collect();
        if let Some(c) = solve_unique(&a, &b) {
            return Some(LinearRecurrence { coefficients: c, initial: values[..k].to_vec() });
        }
    }
    None
}

pub fn first_difference(values: &[BigInt]) -> Vec<BigInt> {
    values.windows(2).map(|w| &w[1] - &w[0]).collect()
}

pub fn partial_sum(values: &[BigInt]) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    values
        .iter()
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect()
}

pub fn to_bigints<T: Into<BigInt> + Clone>(v: &[T]) -> Vec<BigInt> {
    v.iter().cloned().map(Into::into).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::presets::preset;
    use proptest::prelude::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// x_{n+2} = a x_{n+1} + b x_n from x0, x1: independent oracle
    fn iterate(x0: i64, x1: i64, a: i64, b: i64, n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(x0), BigInt::from(x1)];
        while v.len() < n {
            let m = v.len();
            let next = &v[m - 1] * a + &v[m - 2] * b;
            v.push(next);
        }
        v
    }

    #[test]
    fn l1_recurrence() {
        let counts = count_series(&preset("L1").unwrap(), 12).unwrap().as_bigints();
        assert_eq!(counts, iterate(1, 9, 10, -1, 13));
        let r = fit_recurrence(&counts, 4).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.to_string(), "u(n+2) = 10 u(n+1) - u(n)");
        assert_eq!(r.char_poly(), IntPolynomial::from_i64s(&[1, -10, 1]));
    }

    #[test]
    fn aa_avoidance_recurrence() {
        let counts = count_series(&preset("y:10:2").unwrap(), 8).unwrap().as_bigints();
        assert_eq!(counts, bi(&[1, 10, 99, 981, 9720, 96309, 954261, 9455130, 93684519]));
        let r = fit_recurrence(&counts, 3).unwrap();
        assert_eq!(r.to_string(), "u(n+2) = 9 u(n+1) + 9 u(n)");
    }

    #[test]
    fn l1_thirty_digits() {
        let a = preset("L1").unwrap().compile().unwrap();
        let v = iterate(1, 9, 10, -1, 31);
        assert_eq!(BigInt::from(auto_count(&a, 30)), v[30]);
    }

    #[test]
    fn trivial_fits() {
        let r = fit_recurrence(&bi(&[1, 1, 1, 1, 1]), 2).unwrap();
        assert_eq!(r.to_string(), "u(n+1) = u(n)");
        assert!(fit_recurrence(&bi(&[1, 2, 4, 8, 16, 33, 64]), 2).is_none());
        assert_eq!(first_difference(&bi(&[3, 3, 3])), bi(&[0, 0]));
    }

    #[test]
    fn prop2_first_difference() {
        // first differences of the x-sequence are the L2 counts, shifted
        let x = bi(&[1, 10, 99, 981, 9720]);
        assert_eq!(first_difference(&x), bi(&[9, 89, 882, 8739]));
        let v = count_series(&preset("L2").unwrap(), 6).unwrap().as_bigints();
        let ps = partial_sum(&v[1..]);
        let xs = iterate(1, 10, 9, 9, 7);
        for n in 1..=6 {
            assert_eq!(&ps[n - 1] + 1, xs[n]);
        }
    }

    #[test]
    fn power_avoidance_matches_y_recurrence() {
        for b in 2u32..=10 {
            for k in 2usize..=4 {
                let spec = preset(&format!("y:{b}:{k}")).unwrap();
                let counts = count_series(&spec, 40).unwrap().as_bigints();
                let mut y: Vec<BigInt> = (0..k).map(|n| BigInt::from(b).pow(n as u32)).collect();
                while y.len() <= 40 {
                    let m = y.len();
                    let s: BigInt = y[m - k..].iter().sum();
                    y.push(s * (b - 1));
                }
                assert_eq!(counts, y, "b={b} k={k}");
                // leading-zero-free counts are first differences
                let forb = count_series(&spec.with_policy(LeadingZeroPolicy::Forbidden), 40).unwrap().as_bigints();
                assert_eq!(&forb[1..], &first_difference(&y)[..], "b={b} k={k}");
            }
        }
    }

    proptest! {
        #[test]
        fn fit_recovers_generated(c0 in -5i64..5, c1 in -5i64..5, x0 in -9i64..9, x1 in -9i64..9) {
            let v = iterate(x0, x1, c1, c0, 12);
            if let Some(r) = fit_recurrence(&v, 3) {
                prop_assert!(r.order() <= 2);
                let t = r.terms(12);
                for (a, b) in t.iter().zip(&v) {
                    prop_assert_eq!(a, &BigRational::from_integer(b.clone()));
                }
            } else {
                prop_assert!(false, "no fit");
            }
        }

        #[test]
        fn partial_sum_inverts_difference(v in proptest::collection::vec(-100i64..100, 1..20)) {
            let v = bi(&v);
            let d = first_difference(&v);
            let s = partial_sum(&d);
            for (i, x) in s.iter().enumerate() {
                prop_assert_eq!(x + &v[0], v[i + 1].clone());
            }
        }
    }
}
