//! Dense univariate polynomials with big-integer coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial `c[0] + c[1] x + ...`; the coefficient vector never ends in zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `p(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut v = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// Sign of `p(num/den)` for `den > 0`, computed in integers.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let (num, den) = (x.numer(), x.denom());
        // Horner on num/den scaled by den^deg keeps everything integral.
        let mut acc = BigInt::zero();
        let mut dp = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dp;
            dp *= den;
        }
        sign_of(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * z + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.leading();
        let mut r = self.clone();
        let mut steps = match self.degree() {
            Some(da) if da >= db => da - db + 1,
            _ => return r,
        };
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            let shift = dr - db;
            let mut v: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                v[i + shift] -= c * &lr;
            }
            r = Self::new(v);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&num_traits::pow(lb, steps));
        }
        r
    }

    /// Exact division; `None` when `b` does not divide `self` in Z[x].
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in b.coeffs.iter().enumerate() {
                r[k + i] -= c * &qk;
            }
            q[k] = qk;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides polynomial")
            .primitive_part()
    }

    /// Multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn strip_zero_roots(&self) -> Self {
        Self::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Formats in ascending powers, e.g. `1 + 10x - x^2`.
    pub fn to_ascending_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        out
    }

    /// Coefficients as decimal strings, ascending.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(v: &[String]) -> Option<Self> {
        v.iter()
            .map(|s| s.parse::<BigInt>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPolynomial::new(v)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        IntPolynomial::from_strings(&v).ok_or_else(|| serde::de::Error::custom("bad integer coefficient"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -10, 1]).to_string(), "x^2 - 10x + 1");
        assert_eq!(p(&[-2, 0, 0, 0, 1]).to_string(), "x^4 - 2");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[1, 10, -1]).to_ascending_string(), "1 + 10x - x^2");
        assert_eq!(p(&[0, -1]).to_ascending_string(), "-x");
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let a = p(&[2, -3, 0, 1]);
        assert_eq!(a.squarefree_part(), p(&[-2, 1, 1]));
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-2, 1, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[2, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[0, 0, 4]).div_exact(&p(&[0, 2])), Some(p(&[0, 2])));
    }

    #[test]
    fn sign_at_rational() {
        let q = p(&[-2, 0, 1]);
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(q.sign_at(&r(7, 5)), -1);
        assert_eq!(q.sign_at(&r(3, 2)), 1);
        assert_eq!(p(&[-1, 2]).sign_at(&r(1, 2)), 0);
    }

    proptest! {
        #[test]
        fn product_divides(a in proptest::collection::vec(-20i64..20, 1..6),
                           b in proptest::collection::vec(-20i64..20, 1..6)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
            let r = BigRational::new(3.into(), 7.into());
            prop_assert_eq!(prod.eval_rational(&r), a.eval_rational(&r) * b.eval_rational(&r));
            let v = prod.eval_rational(&r);
            prop_assert_eq!(prod.sign_at(&r), sign_of(v.numer()));
        }
    }
}
