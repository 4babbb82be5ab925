//! Dominant roots, modulus certification, Pisot checks and candidate poles.
//!
//! Real roots are isolated exactly with Sturm sequences. Complex roots come
//! from Aberth iteration in double precision and are then enclosed in
//! inclusion discs of radius `n |W_i|` built from the Weierstrass corrections,
//! with the rounding error of the evaluation added to the residual.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::poly::IntPolynomial;

pub const DEFAULT_TOL: f64 = 1e-12;

fn ser_rat<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rat")]
    pub lo: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub hi: BigRational,
    /// Exactly one root of the squarefree part lies in the interval.
    pub isolating: bool,
}

impl RootInterval {
    pub fn exact(x: BigRational) -> Self {
        RootInterval { lo: x.clone(), hi: x, isolating: true }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn bounds_f64(&self) -> (f64, f64) {
        (round_down(&self.lo), round_up(&self.hi))
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        let (lo, hi) = self.bounds_f64();
        lo <= x && x <= hi
    }
}

fn round_down(x: &BigRational) -> f64 {
    let f = x.to_f64().unwrap_or(f64::NAN);
    match BigRational::from_float(f) {
        Some(r) if &r > x => f.next_down(),
        _ => f,
    }
}

fn round_up(x: &BigRational) -> f64 {
    let f = x.to_f64().unwrap_or(f64::NAN);
    match BigRational::from_float(f) {
        Some(r) if &r < x => f.next_up(),
        _ => f,
    }
}

fn tol_rational(tol: f64) -> BigRational {
    let mut t = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let tol = if tol > 0.0 { tol } else { DEFAULT_TOL };
    while t.to_f64().unwrap_or(0.0) > tol {
        t /= &two;
    }
    t
}

/// Divides by the positive content, keeping signs.
fn positive_primitive(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Sturm sequence of `p` (use a squarefree `p`).
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![positive_primitive(p), positive_primitive(&p.derivative())];
    while !seq.last().unwrap().is_zero() && seq.last().unwrap().degree().unwrap_or(0) > 0 {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        let e = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
        let mut r = -&a.pseudo_rem(b);
        if b.leading().is_negative() && e % 2 == 1 {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        seq.push(positive_primitive(&r));
    }
    if seq.last().is_some_and(|q| q.is_zero()) {
        seq.pop();
    }
    seq
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn variations_at(seq: &[IntPolynomial], x: &BigRational) -> usize {
    variations(seq.iter().map(|q| q.sign_at(x)))
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_roots(seq: &[IntPolynomial], a: &BigRational, b: &BigRational) -> usize {
    variations_at(seq, a).saturating_sub(variations_at(seq, b))
}

/// Cauchy bound: every root has modulus `< bound`.
pub fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::from_integer(BigInt::one() + num_integer::Integer::div_ceil(&m, &lead))
}

/// Isolating intervals for every real root of `p`, in increasing order.
pub fn real_roots(p: &IntPolynomial, tol: f64) -> Vec<RootInterval> {
    let q = p.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(&q);
    let bound = cauchy_bound(&q);
    let tol = tol_rational(tol);
    let mut out = Vec::new();
    isolate(&q, &seq, -&bound, bound, &tol, &mut out);
    out
}

fn isolate(
    q: &IntPolynomial,
    seq: &[IntPolynomial],
    lo: BigRational,
    hi: BigRational,
    tol: &BigRational,
    out: &mut Vec<RootInterval>,
) {
    match count_roots(seq, &lo, &hi) {
        0 => {}
        1 => out.push(refine(q, lo, hi, tol)),
        _ => {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            isolate(q, seq, lo, mid.clone(), tol, out);
            isolate(q, seq, mid, hi, tol, out);
        }
    }
}

/// Shrinks `(lo, hi]`, known to hold exactly one root, by bisection.
fn refine(q: &IntPolynomial, mut lo: BigRational, mut hi: BigRational, tol: &BigRational) -> RootInterval {
    let half = BigRational::new(1.into(), 2.into());
    if q.sign_at(&hi) == 0 {
        return RootInterval::exact(hi);
    }
    let s_hi = q.sign_at(&hi);
    // the root lies in (lo, hi); a sign change brackets it
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) * &half;
        let s = q.sign_at(&mid);
        if s == 0 {
            return RootInterval::exact(mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if let Some(r) = integer_root_in(q, &lo, &hi) {
        return RootInterval::exact(r);
    }
    RootInterval { lo, hi, isolating: true }
}

fn integer_root_in(q: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
    let c = hi.floor();
    (c >= *lo && q.sign_at(&c) == 0).then_some(c)
}

/// The largest real root of `p`, which must be positive and of maximal modulus
/// (a tie with other roots of the same modulus is allowed).
pub fn dominant_root(p: &IntPolynomial, tol: f64) -> Result<RootInterval> {
    let q = p.squarefree_part().strip_zero_roots();
    if q.degree().unwrap_or(0) == 0 {
        return Err(Error::NoDominantRealRoot(format!("{p} has no nonzero roots")));
    }
    let seq = sturm_sequence(&q);
    let bound = cauchy_bound(&q);
    let zero = BigRational::zero();
    if count_roots(&seq, &zero, &bound) == 0 {
        return Err(Error::NoDominantRealRoot(format!("{p} has no positive real root")));
    }
    // narrow (lo, hi] to the largest positive root
    let (mut lo, mut hi) = (zero, bound);
    let half = BigRational::new(1.into(), 2.into());
    while count_roots(&seq, &lo, &hi) > 1 {
        let mid = (&lo + &hi) * &half;
        if count_roots(&seq, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = refine(&q, lo, hi, &tol_rational(tol));
    let (_, lam_hi) = root.bounds_f64();
    let (lam_lo, _) = root.bounds_f64();
    for m in roots_moduli(&q, tol) {
        if m.lo > lam_hi && m.lo > lam_lo * (1.0 + 1e-9) {
            return Err(Error::NoDominantRealRoot(format!(
                "{p} has a root of modulus about {:.6} exceeding the largest real root {:.6}",
                m.approx.norm(),
                root.midpoint_f64()
            )));
        }
    }
    Ok(root)
}

/// A root approximation with a certified modulus enclosure.
#[derive(Clone, Debug, Serialize)]
pub struct ModulusInterval {
    #[serde(serialize_with = "ser_complex")]
    pub approx: Complex64,
    pub lo: f64,
    pub hi: f64,
    /// The inclusion disc is disjoint from the others, so it holds exactly one root.
    pub certified: bool,
}

fn ser_complex<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq([z.re, z.im])
}

fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let a: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in a.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    let radius = a[..n].iter().map(|c| c.abs()).fold(0.0f64, f64::max).powf(1.0 / n as f64).max(1.0);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Enclosures for the moduli of all complex roots of `p` (with multiplicity
/// of the squarefree part, zero roots reported exactly).
pub fn roots_moduli(p: &IntPolynomial, _tol: f64) -> Vec<ModulusInterval> {
    let mut out = Vec::new();
    let q = p.squarefree_part();
    let zeros = q.zero_root_multiplicity();
    for _ in 0..zeros {
        out.push(ModulusInterval { approx: Complex64::new(0.0, 0.0), lo: 0.0, hi: 0.0, certified: true });
    }
    let q = q.strip_zero_roots();
    let n = q.degree().unwrap_or(0);
    if n == 0 {
        return out;
    }
    let c: Vec<f64> = q.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let z = aberth(&c);
    let lead = c[n];
    let radii: Vec<f64> = (0..n)
        .map(|i| {
            let zi = z[i];
            let p = q.eval_complex(zi);
            // running error bound of Horner evaluation
            let absz = zi.norm();
            let mag: f64 = c.iter().rev().fold(0.0, |acc, x| acc * absz + x.abs());
            let resid = p.norm() + 4.0 * (n as f64 + 1.0) * f64::EPSILON * mag;
            let denom: f64 = (0..n).filter(|&j| j != i).map(|j| (zi - z[j]).norm()).product::<f64>() * lead.abs();
            let r = n as f64 * resid / denom;
            if r.is_finite() {
                r * (1.0 + 1e-10)
            } else {
                f64::INFINITY
            }
        })
        .collect();
    // clusters of overlapping discs share an enclosure
    let overlaps = |i: usize, j: usize| (z[i] - z[j]).norm() <= radii[i] + radii[j];
    let mut cluster: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if overlaps(i, j) {
                let (a, b) = (find(&mut cluster, i), find(&mut cluster, j));
                cluster[a] = b;
            }
        }
    }
    for i in 0..n {
        let ci = find(&mut cluster, i);
        let members: Vec<usize> = (0..n).filter(|&j| find(&mut cluster, j) == ci).collect();
        let lo = members.iter().map(|&j| (z[j].norm() - radii[j]).max(0.0)).fold(f64::INFINITY, f64::min);
        let hi = members.iter().map(|&j| z[j].norm() + radii[j]).fold(0.0, f64::max);
        out.push(ModulusInterval { approx: z[i], lo, hi, certified: members.len() == 1 });
    }
    out
}

/// Numerical roots of `p` (squarefree part), zero roots included.
pub fn approximate_roots(p: &IntPolynomial) -> Vec<Complex64> {
    roots_moduli(p, DEFAULT_TOL).into_iter().map(|m| m.approx).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PisotVerdict {
    Yes,
    No,
    Undetermined,
}

/// Whether the largest real root of `p` is a Pisot number, judged over all
/// roots of the squarefree part of `p`.
pub fn is_pisot(p: &IntPolynomial) -> PisotVerdict {
    let q = p.squarefree_part();
    if !q.is_monic() {
        return PisotVerdict::Undetermined;
    }
    let Ok(lam) = dominant_root(&q, DEFAULT_TOL) else {
        return PisotVerdict::No;
    };
    let (lam_lo, lam_hi) = lam.bounds_f64();
    if lam_hi <= 1.0 {
        return PisotVerdict::No;
    }
    // roots on the unit circle: +-1 or roots of unity
    let one = BigInt::one();
    if q.eval_int(&one).is_zero() || q.eval_int(&-one).is_zero() {
        return PisotVerdict::No;
    }
    let deg = q.degree().unwrap_or(0);
    for n in 1..=(2 * deg * deg).max(2) {
        let mut v = vec![BigInt::zero(); n + 1];
        v[0] = -BigInt::one();
        v[n] = BigInt::one();
        if q.gcd(&IntPolynomial::new(v)).degree().unwrap_or(0) > 0 {
            return PisotVerdict::No;
        }
    }
    if lam_lo <= 1.0 {
        return PisotVerdict::Undetermined;
    }
    let moduli = roots_moduli(&q, DEFAULT_TOL);
    let k = closest_to(&moduli, lam.midpoint_f64());
    if !moduli[k].certified {
        return PisotVerdict::Undetermined;
    }
    let mut verdict = PisotVerdict::Yes;
    for (i, m) in moduli.iter().enumerate() {
        if i == k {
            continue;
        }
        if m.lo >= 1.0 {
            return PisotVerdict::No;
        }
        if m.hi >= 1.0 {
            verdict = PisotVerdict::Undetermined;
        }
    }
    verdict
}

fn closest_to(moduli: &[ModulusInterval], x: f64) -> usize {
    let d = |m: &ModulusInterval| (m.approx - Complex64::new(x, 0.0)).norm();
    (0..moduli.len()).min_by(|&i, &j| d(&moduli[i]).total_cmp(&d(&moduli[j]))).unwrap_or(0)
}

/// Separation between the dominant root and the remaining spectrum.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GapClaim {
    /// Every other root has modulus at most `lambda - margin`.
    Certified { margin: f64 },
    /// Another root has modulus within the margin of lambda.
    Tie { modulus: f64 },
    Unverified,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub char_poly: IntPolynomial,
    pub lambda: RootInterval,
    pub gap: GapClaim,
    /// Largest modulus among the other roots.
    pub mu: f64,
    pub pisot: PisotVerdict,
    /// `char_poly(M) = 0`, checked exactly.
    pub annihilates: bool,
    /// Algebraic multiplicity of lambda in the characteristic polynomial.
    pub multiplicity: usize,
}

/// Evaluates `p(M)` exactly.
pub fn eval_at_matrix(p: &IntPolynomial, m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul_mat(m).add_mat(&IntMatrix::identity(n).map(|x| x * c));
    }
    acc
}

fn multiplicity_at(p: &IntPolynomial, root: &RootInterval) -> usize {
    let mut k = 0;
    let mut cur = p.clone();
    loop {
        let g = cur.gcd(&cur.derivative());
        let contains = if root.is_exact() {
            cur.sign_at(&root.lo) == 0
        } else {
            let seq = sturm_sequence(&cur.squarefree_part());
            count_roots(&seq, &root.lo, &root.hi) > 0 || cur.sign_at(&root.lo) == 0
        };
        if !contains {
            return k;
        }
        k += 1;
        if g.degree().unwrap_or(0) == 0 {
            return k;
        }
        cur = g;
    }
}

fn dominance(p: &IntPolynomial, lambda: &RootInterval, tol: f64) -> (GapClaim, f64) {
    let (lam_lo, lam_hi) = lambda.bounds_f64();
    let margin = tol.max(DEFAULT_TOL) * lam_hi.abs();
    let mut mu: f64 = 0.0;
    let mut worst: f64 = 0.0;
    let mut certified = true;
    let moduli = roots_moduli(p, tol);
    let k = closest_to(&moduli, lambda.midpoint_f64());
    for (i, m) in moduli.iter().enumerate() {
        if i == k {
            continue;
        }
        mu = mu.max(m.approx.norm());
        worst = worst.max(m.hi);
        if !m.certified && m.hi >= lam_lo - margin {
            certified = false;
        }
    }
    if worst >= lam_lo - margin {
        if mu >= lam_lo - margin {
            return (GapClaim::Tie { modulus: mu }, mu);
        }
        return (GapClaim::Unverified, mu);
    }
    if !certified {
        return (GapClaim::Unverified, mu);
    }
    (GapClaim::Certified { margin: lam_lo - worst }, mu)
}

pub fn spectral_report(m: &IntMatrix, tol: f64) -> Result<SpectralReport> {
    let char_poly = m.char_poly();
    let lambda = dominant_root(&char_poly, tol)?;
    let annihilates = eval_at_matrix(&char_poly, m).to_rows().iter().flatten().all(|x| x.is_zero());
    let multiplicity = multiplicity_at(&char_poly, &lambda);
    let (gap, mu) = dominance(&char_poly.squarefree_part(), &lambda, tol);
    Ok(SpectralReport { pisot: is_pisot(&char_poly), char_poly, lambda, gap, mu, annihilates, multiplicity })
}

/// Outcome of the norm condition `lambda > max_i ||M_i||`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NormCheck {
    Holds { norm: String, value: f64 },
    NotEstablished { row_sum: f64, column_sum: f64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct DgReport {
    pub char_poly: IntPolynomial,
    pub lambda: Option<RootInterval>,
    pub unique_dominant: bool,
    pub simple: bool,
    pub norm: Option<NormCheck>,
    pub applicable: bool,
    pub failures: Vec<String>,
}

fn abs_f64(x: &BigRational) -> f64 {
    x.abs().to_f64().unwrap_or(f64::INFINITY)
}

/// Checks the hypotheses on the digit matrices needed by the Drmota–Grabner
/// asymptotic: a simple positive eigenvalue `lambda` of `sum(M_i)` strictly
/// dominating the rest of the spectrum, and `lambda > max_i ||M_i||` for the
/// row-sum or column-sum norm.
pub fn dg_applicable(matrices: &[RatMatrix], tol: f64) -> DgReport {
    let n = matrices.first().map_or(0, |m| m.rows());
    let mut sum = RatMatrix::zeros(n, n);
    for m in matrices {
        sum = sum.add_mat(m);
    }
    let char_poly = sum.char_poly();
    let mut failures = Vec::new();
    let lambda = match dominant_root(&char_poly, tol) {
        Ok(l) => l,
        Err(e) => {
            failures.push(e.to_string());
            return DgReport {
                char_poly,
                lambda: None,
                unique_dominant: false,
                simple: false,
                norm: None,
                applicable: false,
                failures,
            };
        }
    };
    let (gap, mu) = dominance(&char_poly.squarefree_part(), &lambda, tol);
    let unique_dominant = matches!(gap, GapClaim::Certified { .. });
    if !unique_dominant {
        failures.push(format!("dominant eigenvalue is not strictly separated (next modulus {mu:.12})"));
    }
    let simple = multiplicity_at(&char_poly, &lambda) == 1;
    if !simple {
        failures.push("dominant eigenvalue is not simple".into());
    }
    let (lam_lo, _) = lambda.bounds_f64();
    let row = matrices
        .iter()
        .map(|m| (0..n).map(|i| m.row(i).iter().map(abs_f64).sum::<f64>()).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    let col = matrices
        .iter()
        .map(|m| (0..n).map(|j| (0..n).map(|i| abs_f64(&m[(i, j)])).sum::<f64>()).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    let norm = if lam_lo > row {
        NormCheck::Holds { norm: "row-sum".into(), value: row }
    } else if lam_lo > col {
        NormCheck::Holds { norm: "column-sum".into(), value: col }
    } else {
        failures.push("norm condition not established for row-sum or column-sum norm".into());
        NormCheck::NotEstablished { row_sum: row, column_sum: col }
    };
    let applicable = unique_dominant && simple && matches!(norm, NormCheck::Holds { .. });
    DgReport { char_poly, lambda: Some(lambda), unique_dominant, simple, norm: Some(norm), applicable, failures }
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidatePole {
    #[serde(serialize_with = "ser_complex")]
    pub gamma: Complex64,
    pub n: i64,
    pub l: i64,
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
}

/// `z = log(gamma)/log(b) - l + 2 pi i n / log(b)` over the grid; zero
/// eigenvalues are skipped.
pub fn candidate_poles(
    eigs: &[Complex64],
    base: u32,
    n_range: std::ops::RangeInclusive<i64>,
    l_range: std::ops::RangeInclusive<i64>,
) -> Vec<CandidatePole> {
    let lb = f64::from(base).ln();
    let mut out = Vec::new();
    for &gamma in eigs {
        if gamma.norm() == 0.0 {
            continue;
        }
        let lg = gamma.ln() / lb;
        for n in n_range.clone() {
            for l in l_range.clone() {
                let z = lg - l as f64 + Complex64::new(0.0, 2.0 * std::f64::consts::PI * n as f64 / lb);
                out.push(CandidatePole { gamma, n, l, z });
            }
        }
    }
    out
}

/// Whether a non-negative square matrix is primitive (some power is positive).
pub fn is_primitive(m: &IntMatrix) -> bool {
    let n = m.rows();
    if n == 0 || !m.is_nonnegative() {
        return false;
    }
    let adj: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| !m[(i, j)].is_zero()).collect()).collect();
    let mut p = adj.clone();
    // Wielandt: exponent at most (n-1)^2 + 1
    for _ in 0..(n - 1) * (n - 1) + 1 {
        if p.iter().all(|r| r.iter().all(|&x| x)) {
            return true;
        }
        p = (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|k| p[i][k] && adj[k][j])).collect())
            .collect();
    }
    p.iter().all(|r| r.iter().all(|&x| x))
}

/// `log(rho)/log(b)` when the sum matrix is a primitive non-negative integer
/// matrix, in which case it is a simple pole of the Dirichlet series.
pub fn simple_pole(sum: &IntMatrix, base: u32, tol: f64) -> Option<(f64, f64)> {
    if !is_primitive(sum) {
        return None;
    }
    let rho = dominant_root(&sum.char_poly(), tol).ok()?;
    let (lo, hi) = rho.bounds_f64();
    let lb = f64::from(base).ln();
    Some((lo.ln() / lb, hi.ln() / lb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(v)
    }

    #[test]
    fn dominant_roots_known() {
        let r = dominant_root(&p(&[1, -10, 1]), 1e-12).unwrap();
        assert!(r.contains_f64(5.0 + 2.0 * 6f64.sqrt()));
        assert!(r.width() <= BigRational::new(1.into(), 1_000_000_000_000i64.into()));
        let r = dominant_root(&p(&[-9, -9, 1]), 1e-12).unwrap();
        assert!(r.contains_f64(1.5 * (3.0 + 13f64.sqrt())));
        let r = dominant_root(&p(&[-7, 1]), 1e-12).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.lo, BigRational::from_integer(7.into()));
    }

    #[test]
    fn no_positive_root() {
        assert!(matches!(dominant_root(&p(&[1, 0, 1]), 1e-12), Err(Error::NoDominantRealRoot(_))));
        assert!(matches!(dominant_root(&p(&[3, 1]), 1e-12), Err(Error::NoDominantRealRoot(_))));
        // -3 dominates 1
        assert!(dominant_root(&p(&[-3, 2, 1]), 1e-12).is_err());
    }

    #[test]
    fn sturm_interval_sign_change() {
        let q = p(&[2, 0, -97, 0, 1]);
        for r in real_roots(&q, 1e-9) {
            if !r.is_exact() {
                assert_ne!(q.sign_at(&r.lo), q.sign_at(&r.hi));
            }
        }
        assert_eq!(real_roots(&q, 1e-9).len(), 4);
    }

    #[test]
    fn quartic_modulus() {
        let want = ((97.0 + 9401f64.sqrt()) / 2.0).sqrt();
        let m = roots_moduli(&p(&[2, 0, -97, 0, 1]), 1e-12);
        let top = m.iter().map(|x| x.hi).fold(0.0, f64::max);
        assert!((top - want).abs() < 1e-9);
        let unit = roots_moduli(&p(&[1, 0, 1]), 1e-12);
        for u in unit {
            assert!(u.lo <= 1.0 && 1.0 <= u.hi && u.hi - u.lo < 1e-9);
        }
    }

    #[test]
    fn squaring_identity() {
        let a = dominant_root(&p(&[1, -10, 1]), 1e-15).unwrap().midpoint_f64();
        let b = dominant_root(&p(&[1, -98, 1]), 1e-12).unwrap();
        assert!((a * a - b.midpoint_f64()).abs() < 1e-10);
    }

    #[test]
    fn pisot_checks() {
        assert_eq!(is_pisot(&p(&[-9, -9, 1])), PisotVerdict::Yes);
        assert_eq!(is_pisot(&p(&[2, -3, 1])), PisotVerdict::No);
        assert_eq!(is_pisot(&p(&[1, -10, 1])), PisotVerdict::Yes);
        assert_eq!(is_pisot(&p(&[-1, -1, 1])), PisotVerdict::Yes);
        // x^2 - 2: conjugate -sqrt 2 has modulus > 1
        assert_eq!(is_pisot(&p(&[-2, 0, 1])), PisotVerdict::No);
    }

    #[test]
    fn char_poly_cayley_hamilton() {
        let m = IntMatrix::from_rows(vec![
            vec![1.into(), 2.into(), 0.into()],
            vec![3.into(), (-1).into(), 4.into()],
            vec![0.into(), 5.into(), 2.into()],
        ]);
        let r = spectral_report(&m, 1e-12).unwrap();
        assert!(r.annihilates);
        let id = IntMatrix::identity(2);
        assert_eq!(id.char_poly(), p(&[1, -2, 1]));
    }

    #[test]
    fn companion_polys() {
        let c = IntMatrix::from_rows(vec![vec![0.into(), 1.into()], vec![(-1).into(), 10.into()]]);
        assert_eq!(c.char_poly(), p(&[1, -10, 1]));
        let c = IntMatrix::from_rows(vec![vec![0.into(), 1.into()], vec![9.into(), 9.into()]]);
        assert_eq!(c.char_poly(), p(&[-9, -9, 1]));
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn poles() {
        let z = candidate_poles(&[Complex64::new(10.0, 0.0)], 10, 0..=0, 1..=1);
        assert!(z[0].z.norm() < 1e-15);
        assert!(candidate_poles(&[Complex64::new(3.0, 0.0)], 10, 1..=0, 0..=1).is_empty());
        assert!(candidate_poles(&[Complex64::new(0.0, 0.0)], 10, 0..=1, 0..=1).is_empty());
    }

    #[test]
    fn primitivity() {
        let m = IntMatrix::from_rows(vec![vec![0.into(), 1.into()], vec![1.into(), 0.into()]]);
        assert!(!is_primitive(&m));
        let m = IntMatrix::from_rows(vec![vec![1.into(), 1.into()], vec![1.into(), 0.into()]]);
        assert!(is_primitive(&m));
    }
}
