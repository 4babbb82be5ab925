//! Acceptance runner: one check per numbered criterion, shared by the
//! `repro` command and the `acceptance` test target.
//!
//! Tolerances and budgets are constants in this module. A criterion that
//! errors is reported as failed with the error text.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use crate::cluster::{gf_coefficients, gj_generating_function, primed_alphabet_patterns, RationalGF};
use crate::counting::{brute_count, count_series, fit_recurrence, LinearRecurrence};
use crate::dirichlet::{
    big_log2, evaluate, exact_abscissa, nathanson_theta, summatory, Classification, ExactLogRatio,
};
use crate::error::Result;
use crate::evilwords;
use crate::langspec::presets::{preset, FIXED};
use crate::linalg::rat;
use crate::numeration::parse_block;
use crate::oeis::{crosscheck_catalog, FixtureStore};
use crate::poly::IntPolynomial;
use crate::regular::{dfao_from_spec, LinearRepresentation};
use crate::spectral::{dg_applicable, dominant_root, is_pisot, roots_moduli, simple_pole, PisotVerdict};

/// Interval width demanded of the quadratic dominant roots.
pub const ROOT_WIDTH: f64 = 1e-12;
/// Agreement demanded of the L5 growth constant, the lifted spectral radius
/// and the marked simple pole.
pub const CLOSED_FORM_TOL: f64 = 1e-10;
/// Empirical abscissa tolerance.
pub const EMPIRICAL_TOL: f64 = 1e-2;
/// Distance allowed between the zeta(2) bracket and the direct-sum oracle.
pub const ZETA2_TOL: f64 = 1e-4;
/// Upper end of the `(d_{n+1} - d_n)/2 = v_{n+1}` check.
pub const GF_IDENTITY_MAX_N: usize = 30;
/// Upper end of the evil-word checks that run over `n`.
pub const EVIL_MAX_N: usize = 10_000;

pub const FAST_BUDGET: Duration = Duration::from_secs(1);
pub const ORACLE_BUDGET: Duration = Duration::from_secs(300);
pub const EMPIRICAL_BUDGET: Duration = Duration::from_secs(60);

pub const CRITERIA: [(u8, &str); 14] = [
    (1, "counts of L1"),
    (2, "counts of L2"),
    (3, "counts of L5"),
    (4, "recurrence recovery"),
    (5, "Goulden-Jackson generating functions"),
    (6, "dominant roots"),
    (7, "Pisot sweep"),
    (8, "eigenvalue pipeline for L1"),
    (9, "letter avoidance abscissa"),
    (10, "evil-word suite"),
    (11, "brute-force oracle equivalence"),
    (12, "empirical vs exact abscissa"),
    (13, "series brackets"),
    (14, "OEIS catalogue"),
];

#[derive(Clone, Debug, Default)]
pub struct ReproOptions {
    /// Fixture directory; the bundled fixtures are used when absent.
    pub fixtures: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "criterion {:>2} {} [{}]: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub criteria: Vec<CriterionResult>,
    pub all_passed: bool,
}

pub fn run_all(opts: &ReproOptions) -> ReproReport {
    let criteria: Vec<_> = CRITERIA.iter().map(|&(id, _)| run_criterion(id, opts)).collect();
    let all_passed = criteria.iter().all(|c| c.passed);
    ReproReport { criteria, all_passed }
}

/// Runs one criterion; unknown ids fail.
pub fn run_criterion(id: u8, opts: &ReproOptions) -> CriterionResult {
    let title = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1).to_string();
    let start = Instant::now();
    let out = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        13 => c13(),
        14 => c14(opts),
        _ => Ok(Check::fail(format!("no criterion {id}"))),
    };
    let (passed, detail) = match out {
        Ok(c) => (c.failures.is_empty(), c.summary()),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult { id, title, passed, detail, elapsed_ms: start.elapsed().as_millis() }
}

#[derive(Default)]
struct Check {
    notes: Vec<String>,
    failures: Vec<String>,
}

impl Check {
    fn fail(msg: String) -> Self {
        Check { notes: vec![], failures: vec![msg] }
    }

    fn require(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.failures.push(msg.into());
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let t = start.elapsed();
        self.require(t < limit, format!("took {:.3}s, budget {:.0}s", t.as_secs_f64(), limit.as_secs_f64()));
        self.note(format!("{:.3}s", t.as_secs_f64()));
    }

    fn summary(&self) -> String {
        if self.failures.is_empty() {
            self.notes.join("; ")
        } else {
            self.failures.join("; ")
        }
    }
}

fn bu(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn counts_check(name: &str, n: usize, expected: &[u64]) -> Result<Check> {
    let mut c = Check::default();
    let start = Instant::now();
    let got = count_series(&preset(name)?, n)?.values;
    c.budget(start, FAST_BUDGET);
    c.require(got == bu(expected), format!("{name} counts {:?}", got.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
    c.note(format!("{name} counts for n <= {n} exact"));
    Ok(c)
}

fn c1() -> Result<Check> {
    counts_check("L1", 4, &[1, 9, 89, 881, 8721])
}

fn c2() -> Result<Check> {
    counts_check(
        "L2",
        9,
        &[1, 9, 89, 882, 8739, 86589, 857952, 8500869, 84229389, 834572322],
    )
}

fn c3() -> Result<Check> {
    counts_check("L5", 6, &[1, 9, 88, 872, 8534, 84566, 827622])
}

fn recurrence_is(r: &Option<LinearRecurrence>, c0: i64, c1: i64) -> bool {
    r.as_ref().is_some_and(|r| r.coefficients == vec![rat(c0, 1), rat(c1, 1)])
}

fn c4() -> Result<Check> {
    let mut c = Check::default();
    let l1 = count_series(&preset("L1")?, 12)?.as_bigints();
    let r = fit_recurrence(&l1, 4);
    c.require(recurrence_is(&r, -1, 10), format!("L1 fit {:?}", r.as_ref().map(|r| r.to_string())));
    let aa = count_series(&preset("y:10:2")?, 12)?.as_bigints();
    let r2 = fit_recurrence(&aa, 4);
    c.require(recurrence_is(&r2, 9, 9), format!("aa-avoidance fit {:?}", r2.as_ref().map(|r| r.to_string())));
    for r in [r, r2].into_iter().flatten() {
        c.note(r.to_string());
    }
    Ok(c)
}

fn c5() -> Result<Check> {
    let mut c = Check::default();
    let bl = |s: &str| parse_block(s, 10);
    let l1 = gj_generating_function(&primed_alphabet_patterns(10, &[bl("12")?], &[bl("89")?])?)?;
    let l2 = gj_generating_function(&primed_alphabet_patterns(10, &[bl("12")?], &[bl("21")?])?)?;
    c.require(l1 == RationalGF::from_i64s(&[1, 10, -1], &[1, -10, 1])?, format!("L1 GF {l1}"));
    c.require(l2 == RationalGF::from_i64s(&[1, 11, 9], &[1, -9, -9])?, format!("L2 GF {l2}"));
    let d = gf_coefficients(&l2, GF_IDENTITY_MAX_N + 1)?;
    let v = count_series(&preset("L2")?, GF_IDENTITY_MAX_N + 1)?.as_bigints();
    // n = 0 is excluded: d_1 - d_0 = 19 is odd.
    for n in 1..=GF_IDENTITY_MAX_N {
        let diff = &d[n + 1] - &d[n];
        c.require(
            diff == &v[n + 1] * 2,
            format!("(d_{} - d_{})/2 = {}/2 but v_{} = {}", n + 1, n, diff, n + 1, v[n + 1]),
        );
    }
    c.note(format!("L1 GF {l1}; L2 GF {l2}; (d_(n+1) - d_n)/2 = v_(n+1) for 1 <= n <= {GF_IDENTITY_MAX_N}"));
    Ok(c)
}

fn c6() -> Result<Check> {
    let mut c = Check::default();
    let s6 = 6f64.sqrt();
    for (p, x, label) in [
        (IntPolynomial::from_i64s(&[1, -10, 1]), 5.0 + 2.0 * s6, "5+2sqrt6"),
        (IntPolynomial::from_i64s(&[-9, -9, 1]), 1.5 * (3.0 + 13f64.sqrt()), "(3/2)(3+sqrt13)"),
    ] {
        let r = dominant_root(&p, ROOT_WIDTH)?;
        let w = r.width().to_f64().unwrap_or(f64::INFINITY);
        c.require(r.contains_f64(x), format!("root of {p} does not contain {label}"));
        c.require(w <= ROOT_WIDTH, format!("root of {p} has width {w:e}"));
        c.note(format!("{label} in [{:.15}, {:.15}]", r.bounds_f64().0, r.bounds_f64().1));
    }
    // lambda^2 is the larger root of x^2 - 97x + 2
    let closed = ((97.0 + 9401f64.sqrt()) / 2.0).sqrt();
    let quartic = dominant_root(&IntPolynomial::from_i64s(&[2, 0, -97, 0, 1]), ROOT_WIDTH)?;
    let rep = exact_abscissa(&preset("L5")?)?;
    match rep.lambda {
        Some(l) => {
            let (lo, hi) = l.bounds_f64();
            c.require(
                lo - CLOSED_FORM_TOL <= closed && closed <= hi + CLOSED_FORM_TOL,
                format!("L5 lambda [{lo}, {hi}] vs {closed}"),
            );
            c.require(
                (l.midpoint_f64() - quartic.midpoint_f64()).abs() <= CLOSED_FORM_TOL,
                "L5 lambda differs from the quartic root",
            );
            c.note(format!("L5 lambda {:.12}", l.midpoint_f64()));
        }
        None => c.require(false, "no growth constant for L5"),
    }
    Ok(c)
}

fn c7() -> Result<Check> {
    let mut c = Check::default();
    for b in 2i64..=6 {
        for k in 2usize..=4 {
            let mut coeffs = vec![-(b - 1); k];
            coeffs.push(1);
            let p = IntPolynomial::from_i64s(&coeffs);
            c.require(is_pisot(&p) == PisotVerdict::Yes, format!("b={b} k={k}: not Pisot"));
            let r = dominant_root(&p, 1e-12)?;
            let (lo, hi) = r.bounds_f64();
            c.require(lo > 1.0 && hi < b as f64, format!("b={b} k={k}: root [{lo}, {hi}] outside (1, b)"));
            c.require(
                p.eval_int(&BigInt::one()) == BigInt::from(1 - k as i64 * (b - 1)),
                format!("b={b} k={k}: P(1)"),
            );
            c.require(p.eval_int(&BigInt::from(b)).is_one(), format!("b={b} k={k}: P(b)"));
        }
    }
    c.note("15 polynomials Pisot with root in (1, b); P(1), P(b) exact");
    Ok(c)
}

fn c8() -> Result<Check> {
    let mut c = Check::default();
    let lam = 5.0 + 2.0 * 6f64.sqrt();
    let dfao = dfao_from_spec(&preset("L1")?)?;

    let rep = LinearRepresentation::trimmed(&dfao);
    let cp = rep.sum_matrix().char_poly();
    // (x^2 - 10x + 1)(x^2 + 10x + 1)
    let pair = IntPolynomial::from_i64s(&[1, 0, -98, 0, 1]);
    c.require(cp.div_exact(&pair).is_some(), format!("base-10 sum matrix char poly {cp} lacks the +-lambda pair"));
    let mut moduli: Vec<f64> = roots_moduli(&cp, 1e-12).iter().map(|m| m.approx.norm()).collect();
    moduli.sort_by(|a, b| b.total_cmp(a));
    c.require(
        moduli.len() >= 2 && (moduli[0] - lam).abs() < CLOSED_FORM_TOL && (moduli[1] - lam).abs() < CLOSED_FORM_TOL,
        format!("top moduli {moduli:?}"),
    );
    let dg10 = dg_applicable(&rep.matrices, 1e-12);
    c.require(!dg10.applicable, "DG check unexpectedly passes in base 10");
    c.note(format!("base 10: char poly {cp}, DG fails ({})", dg10.failures.join(", ")));

    let lifted = LinearRepresentation::trimmed(&dfao.lift(2)?);
    let sum = lifted.int_sum_matrix();
    let Some(sum) = sum else {
        c.require(false, "lifted sum matrix is not integral");
        return Ok(c);
    };
    let cp100 = sum.char_poly();
    let quad = IntPolynomial::from_i64s(&[1, -98, 1]);
    c.require(cp100.div_exact(&quad).is_some(), format!("base-100 char poly {cp100} lacks x^2 - 98x + 1"));
    let rho = dominant_root(&cp100, 1e-13)?;
    c.require(
        (rho.midpoint_f64() - lam * lam).abs() <= CLOSED_FORM_TOL * lam * lam,
        format!("base-100 spectral radius {}", rho.midpoint_f64()),
    );
    let dg100 = dg_applicable(&lifted.matrices, 1e-12);
    c.require(dg100.applicable, format!("DG check fails in base 100: {}", dg100.failures.join(", ")));
    let target = lam.ln() / 10f64.ln();
    match simple_pole(&sum, 100, 1e-13) {
        Some((lo, hi)) => {
            c.require(
                (lo - target).abs() <= CLOSED_FORM_TOL && (hi - target).abs() <= CLOSED_FORM_TOL,
                format!("simple pole [{lo}, {hi}] vs {target}"),
            );
            c.note(format!("base 100: char poly {cp100}, DG holds, pole {:.12}", (lo + hi) / 2.0));
        }
        None => c.require(false, "no simple pole marked for the base-100 sum matrix"),
    }
    Ok(c)
}

fn c9() -> Result<Check> {
    let mut c = Check::default();
    let mut n = 0;
    for b in 3u32..=10 {
        let want = ExactLogRatio::new(b - 1, 1, b);
        for a in 1..b {
            let spec = preset(&format!("L4:{b}:{a}"))?;
            let r = exact_abscissa(&spec)?;
            c.require(
                r.classification == Classification::LogRatio && r.exact.as_ref().is_some_and(|e| e.same_value(&want)),
                format!("b={b} a={a}: {:?}", r.exact.map(|e| e.to_string())),
            );
            let t = nathanson_theta(&spec)?;
            c.require(t.exact.same_value(&want), format!("b={b} a={a}: Theta_D {}", t.exact));
            n += 1;
        }
    }
    c.note(format!("{n} digit sets: sigma = Theta_D = log(b-1)/log(b) exactly"));
    Ok(c)
}

const PUBLISHED_U: [u64; 21] = [
    1, 2, 3, 6, 12, 18, 36, 54, 72, 144, 288, 432, 576, 1152, 1728, 3456, 6912, 10368, 20736, 31104, 41472,
];

fn c10() -> Result<Check> {
    let mut c = Check::default();
    let u = evilwords::count_lj_upto(EVIL_MAX_N);
    c.require(u[..=20] == bu(&PUBLISHED_U)[..], "count_LJ differs from the published values for n <= 20");
    let closed = evilwords::count_lj_closed_upto(EVIL_MAX_N as u64)?;
    let mism = (2..=EVIL_MAX_N).find(|&n| closed[n - 2] != u[n]);
    c.require(mism.is_none(), format!("closed form differs at n = {mism:?}"));
    let bad_ratio = (3..=EVIL_MAX_N).find(|&n| {
        let want = evilwords::RatioCase::of(n).map(|r| r.ratio());
        let (p, q) = match want {
            Some(r) => (u64::from(r.0), u64::from(r.1)),
            None => return true,
        };
        &u[n] * q != &u[n - 1] * p
    });
    c.require(bad_ratio.is_none(), format!("ratio case law fails at n = {bad_ratio:?}"));
    for i in 2..=16u32 {
        let direct = evilwords::occurrence_counters(1u64 << i).e00;
        c.require(direct == evilwords::e00_at_power_of_two(i), format!("e00(2^{i}) = {direct}"));
    }
    let w = evilwords::nonregularity_witness(20);
    c.require(w.all_match, "non-regularity witness mismatch");
    let ab = evilwords::abscissa_lj();
    c.require(
        ab.exact.as_ref().is_some_and(|e| e.same_value(&ExactLogRatio::new(24u32, 6, 2))),
        "abscissa is not log(24)/(6 log 2)",
    );
    let s = ab.sigma_estimate;
    c.require((2f64.powf(6.0 * s) - 24.0).abs() < 1e-9, format!("2^(6 sigma) = {}", 2f64.powf(6.0 * s)));
    c.note(format!(
        "published u_n for n <= 20, closed form and ratio law n <= {EVIL_MAX_N}, e00 i <= 16, witness i <= 20, sigma = {s:.7}"
    ));
    Ok(c)
}

/// Largest length for exhaustive enumeration in base `b`.
fn oracle_depth(b: u32) -> usize {
    match b {
        2 => 16,
        10 => 6,
        _ => (1_000_000f64.ln() / f64::from(b).ln()).floor() as usize,
    }
}

pub const ORACLE_PARAMETRIC: &[&str] =
    &["L3:10:1:2", "L3:10:0:3", "L3:3:1:2", "L3:2:1:3", "y:2:2", "y:3:3", "y:10:2", "L4:10:0", "L4:5:2"];

fn c11() -> Result<Check> {
    let mut c = Check::default();
    let start = Instant::now();
    let mut words = 0u64;
    for name in FIXED.iter().chain(ORACLE_PARAMETRIC) {
        let spec = preset(name)?;
        let depth = oracle_depth(spec.base);
        let auto = count_series(&spec, depth)?.values;
        for (n, a) in auto.iter().enumerate() {
            let brute = brute_count(&spec, n)?;
            words += u64::from(spec.base).pow(n as u32);
            c.require(*a == BigUint::from(brute), format!("{name} n={n}: automaton {a}, brute force {brute}"));
        }
    }
    c.budget(start, ORACLE_BUDGET);
    c.note(format!("{} presets, {words} words enumerated", FIXED.len() + ORACLE_PARAMETRIC.len()));
    Ok(c)
}

fn c12() -> Result<Check> {
    let mut c = Check::default();
    let start = Instant::now();
    for name in ["L1", "L2", "L5", "kempner", "LJp"] {
        let spec = preset(name)?;
        let (k, exact) = if spec.base == 2 {
            (30u32, evilwords::sigma())
        } else {
            (14u32, exact_abscissa(&spec)?.sigma_estimate)
        };
        let n = num_traits::pow(BigUint::from(spec.base), k as usize);
        let a = summatory(&spec, &n)?;
        let est = big_log2(&a) / (f64::from(k) * f64::from(spec.base).log2());
        let dev = (est - exact).abs();
        c.require(dev <= EMPIRICAL_TOL, format!("{name}: |{est:.6} - {exact:.6}| = {dev:.4} > {EMPIRICAL_TOL}"));
        c.note(format!("{name} k={k} deviation {dev:.4}"));
    }
    c.budget(start, EMPIRICAL_BUDGET);
    Ok(c)
}

/// `sum_{n <= N} 1/n^2` bracketed by the integral test.
pub fn zeta2_oracle(n: u64) -> (f64, f64) {
    let s: f64 = (1..=n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
    let eps = n as f64 * f64::EPSILON;
    (s + 1.0 / (n as f64 + 1.0) - eps, s + 1.0 / n as f64 + eps)
}

pub const KEMPNER_DEPTHS: [usize; 4] = [20, 40, 60, 80];

fn c13() -> Result<Check> {
    let mut c = Check::default();
    let k = preset("kempner")?;
    let mut widths = Vec::new();
    for l in KEMPNER_DEPTHS {
        widths.push(evaluate(&k, 1.0, 4, l, 2)?.width());
    }
    c.require(widths.windows(2).all(|w| w[1] < w[0]), format!("Kempner widths {widths:?}"));
    let b = evaluate(&preset("full")?, 2.0, 5, 30, 3)?;
    let (lo, hi) = zeta2_oracle(1_000_000);
    c.require(b.lower <= hi && lo <= b.upper, format!("bracket [{}, {}] misses oracle [{lo}, {hi}]", b.lower, b.upper));
    c.require(
        b.upper - lo <= ZETA2_TOL && hi - b.lower <= ZETA2_TOL,
        format!("bracket [{}, {}] not within {ZETA2_TOL} of oracle [{lo}, {hi}]", b.lower, b.upper),
    );
    c.note(format!(
        "Kempner widths {}; zeta(2) bracket [{:.9}, {:.9}]",
        widths.iter().map(|w| format!("{w:.3e}")).collect::<Vec<_>>().join(" > "),
        b.lower,
        b.upper
    ));
    Ok(c)
}

fn c14(opts: &ReproOptions) -> Result<Check> {
    let mut c = Check::default();
    let store = match &opts.fixtures {
        Some(dir) => FixtureStore::from_dir(dir)?,
        None => FixtureStore::bundled()?,
    };
    let r1 = crosscheck_catalog(&store)?;
    let r2 = crosscheck_catalog(&store)?;
    let same = serde_json::to_string(&r1).ok() == serde_json::to_string(&r2).ok();
    c.require(same, "catalogue report differs between runs");
    for row in &r1.rows {
        c.require(
            row.status == crate::oeis::CatalogStatus::Ok,
            format!("{} ({}): {:?}", row.a_number, row.label, row.status),
        );
    }
    let reconstructed = r1.rows.iter().filter(|r| r.source.as_deref() == Some("reconstructed")).count();
    c.note(format!("{} rows verified ({reconstructed} against reconstructed fixtures)", r1.rows.len()));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 2, 3, 4, 5, 6, 7, 9, 14] {
            let r = run_criterion(id, &ReproOptions::default());
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(99, &ReproOptions::default()).passed);
    }

    #[test]
    fn zeta2_oracle_brackets() {
        let (lo, hi) = zeta2_oracle(1000);
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!(lo <= z2 && z2 <= hi);
        assert!(hi - lo < 1e-6);
    }

    #[test]
    fn missing_fixture_dir_fails_criterion_14() {
        let dir = std::env::temp_dir().join(format!("digitlang-empty-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let r = run_criterion(14, &ReproOptions { fixtures: Some(dir.clone()) });
        assert!(!r.passed);
        assert!(r.detail.contains("Missing"), "{}", r.detail);
        std::fs::remove_dir_all(dir).ok();
    }
}
