//! Dense matrices over the tower field with exact LU solves.

use crate::exactfield::{QuadElem, Tower, TowerElems};

use super::LinalgError;

/// Row-major dense matrix of tower scalars.
#[derive(Clone)]
pub struct FieldMatrix {
    tower: Tower,
    nrows: usize,
    ncols: usize,
    data: Vec<QuadElem>,
}

impl FieldMatrix {
    pub fn zero(tower: &Tower, nrows: usize, ncols: usize) -> Self {
        FieldMatrix {
            tower: tower.clone(),
            nrows,
            ncols,
            data: vec![tower.zero(); nrows * ncols],
        }
    }

    pub fn identity(tower: &Tower, n: usize) -> Self {
        let mut m = Self::zero(tower, n, n);
        for i in 0..n {
            m.set(i, i, tower.one());
        }
        m
    }

    pub fn from_rows(tower: &Tower, rows: Vec<Vec<QuadElem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        FieldMatrix { tower: tower.clone(), nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadElem {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QuadElem) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn mul_mat(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = FieldMatrix::zero(&self.tower, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> QuadElem {
        assert_eq!(self.nrows, self.ncols);
        let mut acc = self.tower.zero();
        for i in 0..self.nrows {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    pub fn mul_vec(&self, v: &[QuadElem]) -> Vec<QuadElem> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut acc = self.tower.zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let a = self.get(i, j);
                        if !a.is_zero() {
                            acc = &acc + &(a * x);
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// LU factorization with row pivoting. Fails only on singular input.
    pub fn lu(&self) -> Result<LuFactors, LinalgError> {
        if self.nrows != self.ncols {
            return Err(LinalgError::DimensionMismatch("LU needs a square matrix".into()));
        }
        let n = self.nrows;
        let mut a = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut pivot_inv = Vec::with_capacity(n);
        for k in 0..n {
            let pr = (k..n)
                .find(|&i| !a.get(i, k).is_zero())
                .ok_or(LinalgError::SingularMatrix)?;
            if pr != k {
                for j in 0..n {
                    let x = a.get(k, j).clone();
                    let y = a.get(pr, j).clone();
                    a.set(k, j, y);
                    a.set(pr, j, x);
                }
                perm.swap(k, pr);
            }
            let pinv = a.get(k, k).inv().expect("pivot is nonzero");
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k) * &pinv;
                for j in k + 1..n {
                    let akj = a.get(k, j);
                    if !akj.is_zero() {
                        let v = a.get(i, j) - &(&f * akj);
                        a.set(i, j, v);
                    }
                }
                a.set(i, k, f);
            }
            pivot_inv.push(pinv);
        }
        Ok(LuFactors { lu: a, perm, pivot_inv })
    }

    /// Rank via Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (n, m) = (self.nrows, self.ncols);
        let mut rank = 0usize;
        for col in 0..m {
            let Some(pr) = (rank..n).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            for j in 0..m {
                let x = a.get(rank, j).clone();
                let y = a.get(pr, j).clone();
                a.set(rank, j, y);
                a.set(pr, j, x);
            }
            let pinv = a.get(rank, col).inv().expect("pivot is nonzero");
            for i in rank + 1..n {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col) * &pinv;
                for j in col..m {
                    let v = a.get(rank, j);
                    if !v.is_zero() {
                        let w = a.get(i, j) - &(&f * v);
                        a.set(i, j, w);
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }
}

/// LU factors of a square matrix, reusable across many right-hand sides.
pub struct LuFactors {
    lu: FieldMatrix,
    perm: Vec<usize>,
    pivot_inv: Vec<QuadElem>,
}

impl LuFactors {
    pub fn size(&self) -> usize {
        self.lu.nrows
    }

    /// Solves A·x = b exactly.
    pub fn solve(&self, b: &[QuadElem]) -> Vec<QuadElem> {
        let n = self.lu.nrows;
        assert_eq!(b.len(), n);
        // forward substitution on the permuted rhs
        let mut y: Vec<QuadElem> = self.perm.iter().map(|&i| b[i].clone()).collect();
        for i in 1..n {
            let mut acc = y[i].clone();
            for j in 0..i {
                let l = self.lu.get(i, j);
                if !l.is_zero() && !y[j].is_zero() {
                    acc = &acc - &(l * &y[j]);
                }
            }
            y[i] = acc;
        }
        // back substitution
        for i in (0..n).rev() {
            let mut acc = y[i].clone();
            for j in i + 1..n {
                let u = self.lu.get(i, j);
                if !u.is_zero() && !y[j].is_zero() {
                    acc = &acc - &(u * &y[j]);
                }
            }
            y[i] = &acc * &self.pivot_inv[i];
        }
        y
    }
}

/// Expresses v in the basis given by the columns of B: solves B·x = v and
/// certifies the result by multiplication.
pub fn solve_in_basis(b: &FieldMatrix, v: &[QuadElem]) -> Result<Vec<QuadElem>, LinalgError> {
    let lu = b.lu()?;
    let x = lu.solve(v);
    let check = b.mul_vec(&x);
    assert!(
        check.iter().zip(v).all(|(a, b)| a == b),
        "solve residual was nonzero"
    );
    Ok(x)
}
