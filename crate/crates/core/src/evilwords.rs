//! The evil-position language: binary words with no factor `10` whose `0`
//! sits at an evil position (positions counted from the least significant end).
//!
//! `u_n` counts such words of length `n`, leading zeros included. The count
//! obeys a three-case recurrence driven by the Thue–Morse word and has a closed
//! form in terms of occurrence counts of `1`, `00` and `10` in `t[0..n-1]`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::dirichlet::{AbscissaReport, Classification, ExactLogRatio, Method};
use crate::error::{Error, Result};
use crate::langspec::presets::preset;
use crate::numeration::thue_morse;
use crate::poly::IntPolynomial;

fn t(n: usize) -> u8 {
    thue_morse(n as u64)
}

/// Which branch of the recurrence produces `u_n` (n >= 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RatioCase {
    /// `t_{n-2} = 1`: `u_n = 2 u_{n-1}`
    Double,
    /// `t_{n-2} = t_{n-3} = 0`: `u_n = u_{n-1} + u_{n-3} = (4/3) u_{n-1}`
    FourThirds,
    /// `t_{n-2} = 0, t_{n-3} = 1`: `u_n = u_{n-1} + u_{n-2} = (3/2) u_{n-1}`
    ThreeHalves,
}

impl RatioCase {
    pub fn of(n: usize) -> Option<Self> {
        if n < 3 {
            return None;
        }
        Some(match (t(n - 2), t(n - 3)) {
            (1, _) => RatioCase::Double,
            (0, 0) => RatioCase::FourThirds,
            _ => RatioCase::ThreeHalves,
        })
    }

    pub fn ratio(self) -> (u32, u32) {
        match self {
            RatioCase::Double => (2, 1),
            RatioCase::FourThirds => (4, 3),
            RatioCase::ThreeHalves => (3, 2),
        }
    }
}

/// Sliding state of the recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvilCountState {
    pub n: usize,
    /// `u_n, u_{n-1}, u_{n-2}`
    pub window: [BigUint; 3],
}

impl EvilCountState {
    /// State at `n = 2`.
    pub fn start() -> Self {
        EvilCountState { n: 2, window: [BigUint::from(3u32), BigUint::from(2u32), BigUint::one()] }
    }

    pub fn advance(&mut self) {
        let n = self.n + 1;
        let [u1, u2, u3] = &self.window;
        let next = match RatioCase::of(n).expect("n >= 3") {
            RatioCase::Double => u1 * 2u32,
            RatioCase::FourThirds => u1 + u3,
            RatioCase::ThreeHalves => u1 + u2,
        };
        self.window = [next, u1.clone(), u2.clone()];
        self.n = n;
    }

    pub fn value(&self) -> &BigUint {
        &self.window[0]
    }
}

/// `u_n` by the recurrence.
pub fn count_lj(n: u64) -> BigUint {
    match n {
        0 => BigUint::one(),
        1 => BigUint::from(2u32),
        _ => {
            let mut s = EvilCountState::start();
            while (s.n as u64) < n {
                s.advance();
            }
            s.window[0].clone()
        }
    }
}

/// `u_0..=u_n` in one sweep.
pub fn count_lj_upto(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one(), BigUint::from(2u32), BigUint::from(3u32)];
    out.truncate(n + 1);
    let mut s = EvilCountState::start();
    while s.n < n {
        s.advance();
        out.push(s.value().clone());
    }
    out
}

/// Overlapping occurrence counts of short patterns in `t[0..n-1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OccurrenceCounters {
    pub n: u64,
    pub e0: u64,
    pub e1: u64,
    pub e00: u64,
    pub e01: u64,
    pub e10: u64,
    pub e11: u64,
}

impl OccurrenceCounters {
    /// Extends the scanned prefix by one letter.
    pub fn push(&mut self) {
        let i = self.n;
        let cur = thue_morse(i);
        if cur == 1 {
            self.e1 += 1;
        } else {
            self.e0 += 1;
        }
        if i > 0 {
            match (thue_morse(i - 1), cur) {
                (0, 0) => self.e00 += 1,
                (0, _) => self.e01 += 1,
                (_, 0) => self.e10 += 1,
                _ => self.e11 += 1,
            }
        }
        self.n += 1;
    }

    /// Exponents `(a, c)` with `u_{n+1} = 2^a 3^c` from the counters at `n`.
    pub fn closed_form_exponents(&self) -> (i64, i64) {
        let (e1, e00, e10) = (self.e1 as i64, self.e00 as i64, self.e10 as i64);
        (e1 + 2 * e00 - e10, 1 + e10 - e00)
    }
}

pub fn occurrence_counters(n: u64) -> OccurrenceCounters {
    let mut c = OccurrenceCounters::default();
    for _ in 0..n {
        c.push();
    }
    c
}

fn pow23(a: i64, c: i64) -> BigRational {
    let p = |base: u32, e: i64| {
        let v = BigRational::from_integer(BigInt::from(base).pow(e.unsigned_abs() as u32));
        if e < 0 {
            v.recip()
        } else {
            v
        }
    };
    p(2, a) * p(3, c)
}

fn to_biguint(r: BigRational) -> Result<BigUint> {
    if !r.is_integer() {
        return Err(Error::InvalidInput("closed form produced a non-integer".into()));
    }
    r.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::InvalidInput("closed form produced a negative value".into()))
}

/// `u_n` by the closed form (n >= 2).
pub fn count_lj_closed(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidInput("closed form holds for n >= 2".into()));
    }
    let (a, c) = occurrence_counters(n - 1).closed_form_exponents();
    to_biguint(pow23(a, c))
}

/// `u_2..=u_n` by the closed form with a single scan.
pub fn count_lj_closed_upto(n: u64) -> Result<Vec<BigUint>> {
    let mut counters = occurrence_counters(1);
    let mut out = Vec::new();
    for _ in 2..=n {
        let (a, c) = counters.closed_form_exponents();
        out.push(to_biguint(pow23(a, c))?);
        counters.push();
    }
    Ok(out)
}

/// `log2 u_n - n log2 alpha` with `alpha = 24^(1/6)` (n >= 2).
pub fn growth_deviation(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidInput("deviation is defined for n >= 2".into()));
    }
    let (a, c) = occurrence_counters(n - 1).closed_form_exponents();
    Ok(a as f64 + c as f64 * 3f64.log2() - n as f64 * sigma())
}

/// Extremes of `deviation(n) / log2 n` over `4 <= n <= n_max`; an empirical
/// envelope, not a proven constant.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GrowthEnvelope {
    pub n_max: u64,
    pub c1: f64,
    pub c2: f64,
}

pub fn growth_envelope(n_max: u64) -> GrowthEnvelope {
    let mut counters = occurrence_counters(3);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for n in 4..=n_max {
        let (a, c) = counters.closed_form_exponents();
        let dev = a as f64 + c as f64 * 3f64.log2() - n as f64 * sigma();
        let r = dev / (n as f64).log2();
        lo = lo.min(r);
        hi = hi.max(r);
        counters.push();
    }
    GrowthEnvelope { n_max, c1: lo, c2: hi }
}

/// `(2^i - 3 - (-1)^i) / 6`
pub fn e00_at_power_of_two(i: u32) -> u64 {
    let p = 1u64 << i;
    let sign: i64 = if i.is_multiple_of(2) { 1 } else { -1 };
    ((p as i64 - 3 - sign) / 6) as u64
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRow {
    pub i: u32,
    /// `3 * 2^i - 1`, binary `1 0 1^i`
    pub n: String,
    pub member: bool,
    pub t_i: u8,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub rows: Vec<WitnessRow>,
    pub all_match: bool,
}

/// Checks `v_{3*2^i - 1} = t_i` for `i <= i_max`, where `v` is the
/// characteristic sequence of the leading-zero-free language. A 2-automatic
/// `v` would make this subsequence ultimately periodic.
pub fn nonregularity_witness(i_max: u32) -> WitnessReport {
    let spec = preset("LJp").expect("built-in preset");
    let rows: Vec<WitnessRow> = (0..=i_max)
        .map(|i| {
            let mut w = vec![1u8, 0];
            w.extend(std::iter::repeat_n(1, i as usize));
            let member = spec.accepts_digits(&w);
            let t_i = thue_morse(u64::from(i));
            let n = (BigUint::from(3u32) << i as usize) - 1u32;
            WitnessRow { i, n: n.to_string(), member, t_i, matches: u8::from(member) == t_i }
        })
        .collect();
    let all_match = rows.iter().all(|r| r.matches);
    WitnessReport { rows, all_match }
}

/// `log2(24) / 6`
pub fn sigma() -> f64 {
    24f64.log2() / 6.0
}

pub fn alpha() -> f64 {
    24f64.powf(1.0 / 6.0)
}

/// Abscissa of the Dirichlet series of the leading-zero-free language.
pub fn abscissa_lj() -> AbscissaReport {
    let s = sigma();
    // alpha is the positive root of x^6 - 24
    let poly = IntPolynomial::from_i64s(&[-24, 0, 0, 0, 0, 0, 1]);
    let lambda = crate::spectral::dominant_root(&poly, 1e-15).expect("x^6 - 24 has a positive root");
    let (lo, hi) = lambda.bounds_f64();
    AbscissaReport {
        classification: Classification::LogRatio,
        base: 2,
        sigma: (lo.ln() / 2f64.ln() - 1e-15, hi.ln() / 2f64.ln() + 1e-15),
        sigma_estimate: s,
        lambda: Some(lambda),
        defining_polynomial: Some(poly),
        period: 1,
        exact: Some(ExactLogRatio::new(24u32, 6, 2)),
        method: Method::EvilClosedForm,
        polylog_degree: None,
        notes: vec!["sigma = log2(24)/6; alpha = 24^(1/6)".into()],
        trace: None,
    }
}

/// Ratio `u_n / u_{n-1}` as a reduced fraction.
pub fn ratio(u: &[BigUint], n: usize) -> Option<(u64, u64)> {
    let r = BigRational::new(u[n].clone().into(), u[n - 1].clone().into());
    Some((r.numer().to_u64()?, r.denom().to_u64()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langspec::brute_count;

    const TABLE: [u64; 21] = [
        1, 2, 3, 6, 12, 18, 36, 54, 72, 144, 288, 432, 576, 1152, 1728, 3456, 6912, 10368, 20736, 31104, 41472,
    ];

    #[test]
    fn table_values() {
        let u = count_lj_upto(20);
        assert_eq!(u, TABLE.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>());
        assert_eq!(count_lj(5), BigUint::from(18u32));
        assert_eq!(count_lj(0), BigUint::one());
    }

    #[test]
    fn brute_force_oracle() {
        let lj = preset("LJ").unwrap();
        for n in 0..=16usize {
            assert_eq!(BigUint::from(brute_count(&lj, n).unwrap()), count_lj(n as u64), "n={n}");
        }
    }

    #[test]
    fn closed_form_small() {
        assert!(count_lj_closed(1).is_err());
        assert_eq!(count_lj_closed(2).unwrap(), BigUint::from(3u32));
        let v = count_lj_closed_upto(20).unwrap();
        for n in 2..=20 {
            assert_eq!(v[n - 2], BigUint::from(TABLE[n]));
        }
    }

    #[test]
    fn counters_basic() {
        let c = occurrence_counters(1);
        assert_eq!((c.e0, c.e1, c.e00, c.e10), (1, 0, 0, 0));
        for i in 2..=16 {
            assert_eq!(occurrence_counters(1 << i).e00, e00_at_power_of_two(i), "i={i}");
        }
    }

    #[test]
    fn witness_small() {
        let w = nonregularity_witness(3);
        assert!(!w.rows[0].member && w.rows[0].t_i == 0);
        assert!(w.rows[1].member && w.rows[1].t_i == 1);
        assert_eq!(w.rows[2].n, "11");
        assert!(w.all_match);
    }

    #[test]
    fn cube_free_consequence() {
        for n in 4..=1_000_000usize {
            if t(n - 2) == 0 && t(n - 3) == 0 {
                assert_eq!(t(n - 4), 1, "n={n}");
            }
        }
    }

    #[test]
    fn e1_is_half() {
        let mut c = OccurrenceCounters::default();
        for _ in 0..1_000_000u64 {
            c.push();
            assert!((2 * c.e1 as i64 - c.n as i64).abs() <= 2);
            assert_eq!(c.e00 + c.e01 + c.e10 + c.e11 + 1, c.n);
        }
    }

    #[test]
    fn alpha_sixth_power() {
        assert!((alpha().powi(6) - 24.0).abs() < 1e-12);
        assert!((sigma() - 0.764_160_4).abs() < 1e-7);
        let r = abscissa_lj();
        assert!(r.sigma.0 <= sigma() && sigma() <= r.sigma.1);
    }
}
