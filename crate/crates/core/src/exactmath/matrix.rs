//! Matrices of polynomials.

use std::collections::HashMap;

use super::linalg::RatMatrix;
use super::poly::{Poly, Vars};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let vars = entries[0].vars();
        if entries.iter().any(|p| p.vars() != vars) {
            return Err(Error::DimensionMismatch(
                "matrix entries from different rings".into(),
            ));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self::new(rows, cols, entries).expect("well-formed matrix")
    }

    /// The alternating matrix with the given strict upper triangle, listed
    /// row by row: (1,2), (1,3), ..., (n-1,n).
    pub fn alternating_from_upper(n: usize, upper: &[Poly]) -> Result<Self> {
        if upper.len() != n * (n - 1) / 2 {
            return Err(Error::DimensionMismatch(format!(
                "{n}x{n} alternating matrix needs {} upper entries, got {}",
                n * (n - 1) / 2,
                upper.len()
            )));
        }
        let vars = upper
            .first()
            .map(|p| p.vars().clone())
            .ok_or_else(|| Error::DimensionMismatch("empty matrix".into()))?;
        let mut entries = vec![Poly::zero(&vars); n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                entries[j * n + i] = -&upper[k];
                entries[i * n + j] = upper[k].clone();
                k += 1;
            }
        }
        Self::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        self.entries[0].vars()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    pub fn is_alternating(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero()
                    && (i + 1..self.cols).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Strict upper triangle, row by row.
    pub fn upper_triangle(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    /// Matrix with row and column `k` removed.
    pub fn delete_row_col(&self, k: usize) -> Self {
        let idx: Vec<usize> = (0..self.rows).filter(|&i| i != k).collect();
        Self::from_fn(idx.len(), idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// Constant entries as a scalar matrix, if every entry is constant.
    pub fn as_scalar(&self) -> Option<RatMatrix> {
        let data: Option<Vec<Rational>> = self.entries.iter().map(Poly::as_constant).collect();
        RatMatrix::new(self.rows, self.cols, data?).ok()
    }

    /// Exact determinant.
    ///
    /// Scalar matrices go through Bareiss elimination. Otherwise the
    /// Laplace expansion is memoised on the set of columns still available,
    /// which costs `n * 2^n` polynomial products instead of `n!`.
    pub fn determinant(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let vars = self.vars().clone();
        if let Some(m) = self.as_scalar() {
            return Ok(Poly::constant(&vars, m.determinant()?));
        }
        let n = self.rows;
        assert!(n <= 20, "polynomial determinant too large for minor expansion");
        // minors[mask] = det of the bottom |mask| rows restricted to `mask`.
        let mut minors: HashMap<u32, Poly> = HashMap::new();
        minors.insert(0, Poly::one(&vars));
        for size in 1..=n {
            let row = n - size;
            let mut next: HashMap<u32, Poly> = HashMap::new();
            for (&mask, sub) in &minors {
                if sub.is_zero() {
                    continue;
                }
                for j in (0..n).filter(|&j| mask & (1 << j) == 0) {
                    let a = self.get(row, j);
                    if a.is_zero() {
                        continue;
                    }
                    // Sign of column j inside the enlarged column set.
                    let before = (mask & ((1u32 << j) - 1)).count_ones();
                    let term = a * sub;
                    let term = if before.is_multiple_of(2) { term } else { -term };
                    let key = mask | (1 << j);
                    match next.get_mut(&key) {
                        Some(acc) => *acc = &*acc + &term,
                        None => {
                            next.insert(key, term);
                        }
                    }
                }
            }
            minors = next;
        }
        Ok(minors
            .remove(&((1u32 << n) - 1))
            .unwrap_or_else(|| Poly::zero(&vars)))
    }

    /// Adjugate by cofactors.
    pub fn adjugate(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Self::from_fn(1, 1, |_, _| Poly::one(self.vars())));
        }
        let mut cof = vec![Poly::zero(self.vars()); n * n];
        for i in 0..n {
            for j in 0..n {
                let ri: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                let cj: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = Self::from_fn(n - 1, n - 1, |a, b| self.get(ri[a], cj[b]).clone());
                let d = minor.determinant()?;
                cof[j * n + i] = if (i + j) % 2 == 0 { d } else { -d };
            }
        }
        Self::new(n, n, cof)
    }

    /// Pfaffian of a 4x4 alternating matrix,
    /// `m12*m34 - m13*m24 + m14*m23`.
    pub fn pfaffian4(&self) -> Result<Poly> {
        if self.rows != 4 || self.cols != 4 {
            return Err(Error::DimensionMismatch(format!(
                "pfaffian4 needs a 4x4 matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !self.is_alternating() {
            return Err(Error::NotAlternating);
        }
        let g = |i: usize, j: usize| self.get(i, j);
        Ok(&(&(g(0, 1) * g(2, 3)) - &(g(0, 2) * g(1, 3))) + &(g(0, 3) * g(1, 2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    fn ring() -> Vars {
        Vars::new(&["x", "y", "z", "w"])
    }

    #[test]
    fn small_determinants() {
        let v = ring();
        let (x, y, z, w) = (
            Poly::var(&v, 0),
            Poly::var(&v, 1),
            Poly::var(&v, 2),
            Poly::var(&v, 3),
        );
        let one = PolyMatrix::new(1, 1, vec![x.clone()]).unwrap();
        assert_eq!(one.determinant().unwrap(), x);
        let zero = Poly::zero(&v);
        let diag = PolyMatrix::new(2, 2, vec![x.clone(), zero.clone(), zero, y.clone()]).unwrap();
        assert_eq!(diag.determinant().unwrap(), &x * &y);
        let m = PolyMatrix::new(2, 2, vec![x.clone(), y.clone(), z.clone(), w.clone()]).unwrap();
        assert_eq!(m.determinant().unwrap(), &(&x * &w) - &(&y * &z));
        assert!(PolyMatrix::new(1, 2, vec![x.clone(), y])
            .unwrap()
            .determinant()
            .is_err());
    }

    #[test]
    fn pfaffian_labelling() {
        let v = ring();
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        let z = Poly::zero(&v);
        // (a1,a2,a3; b3,b2; b1) = (x,0,0; 0,0; y)
        let m = PolyMatrix::alternating_from_upper(
            4,
            &[x.clone(), z.clone(), z.clone(), z.clone(), z.clone(), y.clone()],
        )
        .unwrap();
        assert_eq!(m.pfaffian4().unwrap(), &x * &y);
        let ones = vec![Poly::one(&v); 6];
        let m = PolyMatrix::alternating_from_upper(4, &ones).unwrap();
        assert_eq!(m.pfaffian4().unwrap(), Poly::one(&v));
        let zeros = vec![z; 6];
        let m = PolyMatrix::alternating_from_upper(4, &zeros).unwrap();
        assert!(m.pfaffian4().unwrap().is_zero());
        let bad = PolyMatrix::from_fn(4, 4, |_, _| Poly::constant(&v, rat(1)));
        assert_eq!(bad.pfaffian4(), Err(Error::NotAlternating));
    }

    #[test]
    fn scalar_route_matches_expansion() {
        let v = ring();
        let x = Poly::var(&v, 0);
        let vals = [3, -1, 4, 1, -5, 9, 2, 6, 5];
        let scalar = PolyMatrix::from_fn(3, 3, |i, j| Poly::constant(&v, rat(vals[i * 3 + j])));
        // Adding x to one entry and setting x = 0 afterwards exercises the
        // polynomial path on the same numbers.
        let poly = PolyMatrix::from_fn(3, 3, |i, j| {
            let c = Poly::constant(&v, rat(vals[i * 3 + j]));
            if i == 0 && j == 0 {
                &c + &x
            } else {
                c
            }
        });
        let at_zero = poly
            .determinant()
            .unwrap()
            .evaluate(&[rat(0), rat(0), rat(0), rat(0)]);
        assert_eq!(scalar.determinant().unwrap().as_constant().unwrap(), at_zero);
    }
}
