//! Dense rational matrices for lattice plumbing.

use num::{One, Zero};

use crate::exactfield::Rat;

use super::LinalgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<Vec<Rat>>,
    ncols: usize,
}

impl QMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        QMatrix { rows, ncols }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut row = vec![Rat::zero(); n];
                row[i] = Rat::one();
                row
            })
            .collect();
        QMatrix { rows, ncols: n }
    }

    pub fn zero(r: usize, c: usize) -> Self {
        QMatrix { rows: vec![vec![Rat::zero(); c]; r], ncols: c }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.ncols
    }

    pub fn rows_vec(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> QMatrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        QMatrix { rows, ncols: self.rows() }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.ncols, other.rows(), "dimension mismatch");
        let mut out = QMatrix::zero(self.rows(), other.cols());
        for i in 0..self.rows() {
            for (k, a) in self.rows[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols() {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<QMatrix, LinalgError> {
        let n = self.rows();
        if n != self.ncols {
            return Err(LinalgError::DimensionMismatch("inverse needs a square matrix".into()));
        }
        let mut a = self.rows.clone();
        let mut inv = QMatrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !a[i][col].is_zero())
                .ok_or(LinalgError::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in 0..n {
                    let d1 = &f * &a[col][j];
                    a[i][j] = &a[i][j] - &d1;
                    let d2 = &f * &inv[col][j];
                    inv[i][j] = &inv[i][j] - &d2;
                }
            }
        }
        Ok(QMatrix::from_rows(inv))
    }
}
