//! Small dense matrices over exact rings, plus the exact linear algebra the
//! other modules need (char polys, rational solves, span bases).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::poly::IntPolynomial;

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add_mat(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    /// `M v` for a column vector.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `v M` for a row vector.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![T::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = o.clone() + x.clone() * self[(i, j)].clone();
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mat(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mat(&base);
            }
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect())
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// Characteristic polynomial `det(xI - A)` by fraction-free elimination over Z[x].
    pub fn char_poly(&self) -> IntPolynomial {
        assert!(self.is_square());
        let n = self.rows;
        let mut m: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = IntPolynomial::constant(-self[(i, j)].clone());
                        if i == j {
                            &a + &IntPolynomial::x()
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        let d = bareiss_det(&mut m);
        if d.leading().is_negative() {
            -&d
        } else {
            d
        }
    }
}

/// Determinant of a polynomial matrix by Bareiss elimination (destroys `m`).
pub fn bareiss_det(m: &mut [Vec<IntPolynomial>]) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut sign = 1i32;
    let mut prev = IntPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return IntPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&d
    } else {
        d
    }
}

/// Solves `A E = b` over Z[x] fraction-free. Returns `(D, N)` with `E = N / D`.
pub fn solve_polynomial_system(
    a: &[Vec<IntPolynomial>],
    b: &[IntPolynomial],
) -> Option<(IntPolynomial, Vec<IntPolynomial>)> {
    let n = a.len();
    if n == 0 {
        return Some((IntPolynomial::one(), Vec::new()));
    }
    // Augmented Bareiss to upper-triangular form.
    let mut m: Vec<Vec<IntPolynomial>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut prev = IntPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let r = (k + 1..n).find(|&r| !m[r][k].is_zero())?;
            m.swap(k, r);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    let mut sol = vec![IntPolynomial::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &d * &m[i][n];
        for j in i + 1..n {
            acc = &acc - &(&m[i][j] * &sol[j]);
        }
        sol[i] = acc.div_exact(&m[i][i])?;
    }
    Some((d, sol))
}

impl RatMatrix {
    /// Integer matrix `d * A` with the least common denominator `d`.
    pub fn clear_denominators(&self) -> (IntMatrix, BigInt) {
        let d = self
            .data
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let m = self.map(|x| (x * BigRational::from_integer(d.clone())).to_integer());
        (m, d)
    }

    /// Primitive integer polynomial with the same roots (with multiplicity)
    /// as the characteristic polynomial.
    pub fn char_poly(&self) -> IntPolynomial {
        let (m, d) = self.clear_denominators();
        let chi = m.char_poly();
        // chi_A(x) = d^{-n} chi_{dA}(d x)
        let mut pw = BigInt::one();
        let mut v = Vec::with_capacity(chi.coeffs().len());
        for c in chi.coeffs() {
            v.push(c * &pw);
            pw *= &d;
        }
        IntPolynomial::new(v).primitive_part()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }
}

/// Coordinates of `v` in the span of the linearly independent `basis`, if it lies there.
pub fn coordinates(basis: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = v.len();
    // Augmented system: columns are basis vectors, rhs v.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=k {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][k].clone();
    }
    Some(x)
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for v in vectors {
        if coordinates(&basis, v).is_none() {
            basis.push(v.clone());
        }
    }
    basis.len()
}

/// Solves the (possibly overdetermined) system `A x = b` over Q. Returns a
/// solution only if one exists and is unique.
pub fn solve_unique(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| m[i][cols].clone()).collect())
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
    }

    #[test]
    fn char_poly_small() {
        // [[9,1],[8,1]] -> x^2 - 10x + 1
        assert_eq!(im(&[&[9, 1], &[8, 1]]).char_poly(), IntPolynomial::from_i64s(&[1, -10, 1]));
        let z = im(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(z.char_poly(), IntPolynomial::from_i64s(&[0, 0, 0, 1]));
        // needs a pivot swap
        let s = im(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.char_poly(), IntPolynomial::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn rational_char_poly_roots_preserved() {
        let m = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(3, 1)]]);
        // roots 1/2, 3 -> (2x - 1)(x - 3)
        assert_eq!(m.char_poly(), IntPolynomial::from_i64s(&[3, -7, 2]));
    }

    #[test]
    fn coordinates_and_rank() {
        let b = vec![vec![rat(1, 1), rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1), rat(1, 1)]];
        let v = vec![rat(2, 1), rat(3, 1), rat(5, 1)];
        assert_eq!(coordinates(&b, &v), Some(vec![rat(2, 1), rat(3, 1)]));
        assert_eq!(coordinates(&b, &[rat(1, 1), rat(1, 1), rat(0, 1)]), None);
        assert_eq!(rank(&[b[0].clone(), b[1].clone(), v]), 2);
    }

    #[test]
    fn polynomial_system() {
        // (1 - x) e = 1 -> e = 1/(1-x)
        let a = vec![vec![IntPolynomial::from_i64s(&[1, -1])]];
        let (d, n) = solve_polynomial_system(&a, &[IntPolynomial::one()]).unwrap();
        assert_eq!(n[0], IntPolynomial::one());
        assert_eq!(d, IntPolynomial::from_i64s(&[1, -1]));
    }

    #[test]
    fn matrix_power() {
        let f = im(&[&[1, 1], &[1, 0]]);
        assert_eq!(f.pow(10)[(0, 1)], BigInt::from(55));
    }
}
