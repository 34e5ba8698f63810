//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: rows are cleared of denominators and the
//! Bareiss recurrence keeps every intermediate entry an integer minor of
//! the input, so no gcd work happens inside the inner loop.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Dense matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Integer rows obtained by clearing each row's denominators, together
    /// with the product of the multipliers used.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = common_denominator(row);
                scale *= &l;
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    /// Exact determinant by Bareiss elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut m, scale) = self.integer_rows();
        let echelon = bareiss_echelon(&mut m, n);
        if echelon.pivots.len() < n {
            return Ok(Rational::zero());
        }
        let mut det = m[n - 1][n - 1].clone();
        if echelon.swaps % 2 == 1 {
            det = -det;
        }
        Ok(Rational::new(det, scale))
    }

    pub fn rank(&self) -> usize {
        let (mut m, _) = self.integer_rows();
        bareiss_echelon(&mut m, self.cols).pivots.len()
    }

    /// One exact solution of `self * x = b`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} entries for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Vec::with_capacity(self.rows);
        for (i, bi) in b.iter().enumerate() {
            let mut row = self.row(i).to_vec();
            row.push(bi.clone());
            let l = common_denominator(&row);
            aug.push(
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect::<Vec<BigInt>>(),
            );
        }
        let echelon = bareiss_echelon(&mut aug, self.cols + 1);
        if echelon.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &pc) in echelon.pivots.iter().enumerate().rev() {
            let mut acc = Rational::from_integer(aug[r][self.cols].clone());
            for j in pc + 1..self.cols {
                if !x[j].is_zero() && !aug[r][j].is_zero() {
                    acc -= Rational::from_integer(aug[r][j].clone()) * &x[j];
                }
            }
            x[pc] = acc / Rational::from_integer(aug[r][pc].clone());
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (mut m, _) = self.integer_rows();
        let echelon = bareiss_echelon(&mut m, self.cols);
        let pivots = &echelon.pivots;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in pc + 1..self.cols {
                    if !x[j].is_zero() && !m[r][j].is_zero() {
                        acc -= Rational::from_integer(m[r][j].clone()) * &x[j];
                    }
                }
                x[pc] = acc / Rational::from_integer(m[r][pc].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Adjugate (transpose of the cofactor matrix).
    pub fn adjugate(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut adj = Self::zeros(n, n);
        if n == 1 {
            adj.set(0, 0, Rational::one());
            return Ok(adj);
        }
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = minor.determinant()?;
                adj.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        Ok(adj)
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_r) {
            for j in (0..self.cols).filter(|&j| j != skip_c) {
                data.push(self.get(i, j).clone());
            }
        }
        RatMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimensions");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(super::rational::format_rational).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

struct Echelon {
    pivots: Vec<usize>,
    swaps: usize,
}

/// In-place fraction-free row echelon form of the first `ncols` columns.
fn bareiss_echelon(m: &mut [Vec<BigInt>], ncols: usize) -> Echelon {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..row.len() {
                let v = &pv * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    Echelon { pivots, swaps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn solve_cases() {
        let id = RatMatrix::identity(2);
        assert_eq!(id.solve(&[rat(3), rat(5)]).unwrap(), Some(vec![rat(3), rat(5)]));
        let a = m(&[&[1], &[1]]);
        assert_eq!(a.solve(&[rat(1), rat(2)]).unwrap(), None);
        let a = m(&[&[2]]);
        assert_eq!(a.solve(&[rat(1)]).unwrap(), Some(vec![ratio(1, 2)]));
        assert!(a.solve(&[rat(1), rat(1)]).is_err());
    }

    #[test]
    fn rank_cases() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(2, 5).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), rat(-1));
        assert_eq!(
            m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant().unwrap(),
            rat(6)
        );
        assert_eq!(
            m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]).determinant().unwrap(),
            rat(0)
        );
        let h = RatMatrix::from_rows(vec![
            vec![rat(1), ratio(1, 2)],
            vec![ratio(1, 2), ratio(1, 3)],
        ])
        .unwrap();
        assert_eq!(h.determinant().unwrap(), ratio(1, 12));
        assert!(RatMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn kernel_and_adjugate() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        let b = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(&b * &b.adjugate().unwrap(), RatMatrix::identity(2));
    }
}
