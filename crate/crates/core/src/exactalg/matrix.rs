//! Exact linear algebra: fraction-free Bareiss determinants over Z[t] and
//! Gaussian elimination over Q(t).

use super::poly::IntPoly;
use super::ratfunc::RatFunc;
use crate::error::ExactError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows_data: Vec<Vec<T>>) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        assert!(rows_data.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows,
            cols,
            data: rows_data.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }
}

pub type PolyMatrix = Matrix<IntPoly>;
pub type FieldMatrix = Matrix<RatFunc>;

impl PolyMatrix {
    /// Determinant by single-step Bareiss elimination: every intermediate
    /// value is an exact integer polynomial (divisions are exact).
    pub fn det_fraction_free(&self) -> Result<IntPoly, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let mut m: Vec<Vec<IntPoly>> = (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = IntPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(IntPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = x.exact_div(&prev);
                }
                m[i][k] = IntPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -&det } else { det })
    }

    /// Cofactor-expansion determinant; the independent oracle for small sizes.
    pub fn det_cofactor(&self) -> Result<IntPoly, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        fn go(m: &PolyMatrix) -> IntPoly {
            let n = m.rows();
            if n == 0 {
                return IntPoly::one();
            }
            if n == 1 {
                return m.at(0, 0).clone();
            }
            let mut acc = IntPoly::zero();
            for c in 0..n {
                if m.at(0, c).is_zero() {
                    continue;
                }
                let minor = Matrix::from_fn(n - 1, n - 1, |r2, c2| {
                    m.at(r2 + 1, if c2 < c { c2 } else { c2 + 1 }).clone()
                });
                let term = m.at(0, c) * &go(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        Ok(go(self))
    }
}

impl FieldMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| RatFunc::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { RatFunc::one() } else { RatFunc::zero() })
    }

    pub fn matmul(&self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = RatFunc::zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(a * rhs.at(k, c));
            }
            acc
        })
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let a = m.at(p, c).clone();
                    let b = m.at(row, c).clone();
                    m.set(p, c, b);
                    m.set(row, c, a);
                }
            }
            let inv = m.at(row, col).recip().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank and a basis of the right kernel.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<RatFunc>>) {
        let (rref, pivots) = self.rref();
        let rank = pivots.len();
        let mut kernel = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![RatFunc::zero(); self.cols];
            v[free] = RatFunc::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rref.at(r, free).clone();
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    /// One exact solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[RatFunc]) -> Option<Vec<RatFunc>> {
        assert_eq!(self.rows, b.len(), "solve: dimension mismatch");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![RatFunc::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = rref.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant over the field (product of pivots).
    pub fn det(&self) -> Result<RatFunc, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = RatFunc::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(RatFunc::zero());
            };
            if p != col {
                for c in 0..n {
                    let a = m.at(p, c).clone();
                    let b = m.at(col, c).clone();
                    m.set(p, c, b);
                    m.set(col, c, a);
                }
                det = -&det;
            }
            let pivot = m.at(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) * &inv;
                for c in col..n {
                    let v = m.at(r, c) - &(&factor * m.at(col, c));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }
}
