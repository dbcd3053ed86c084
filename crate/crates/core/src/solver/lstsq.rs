// Copyright 2026 The laplace-series authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Dense least squares by Householder QR with column pivoting.

use nalgebra::{DMatrix, DVector};

use crate::error::{argument, Result};

/// Relative threshold below which trailing pivots are treated as zero.
pub const RANK_TOLERANCE: f64 = 1e-13;

/// Dense column-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds a matrix from row-major data.
    pub fn from_row_major(rows: usize, cols: usize, data: &[f64]) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data has the wrong length");
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[j * rows + i] = data[i * cols + j];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[j * self.rows + i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[j * self.rows + i] = v;
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    /// Row `i` copied out.
    pub fn row(&self, i: usize) -> Vec<f64> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![0.0; self.rows];
        for (j, &xj) in x.iter().enumerate() {
            if xj != 0.0 {
                for (yi, aij) in y.iter_mut().zip(self.column(j)) {
                    *yi += aij * xj;
                }
            }
        }
        y
    }
}

#[derive(Debug, Clone)]
pub(crate) struct LeastSquares {
    pub x: Vec<f64>,
    pub rank: usize,
}

/// Minimizes `||A x - b||_2`. Pivots smaller than `RANK_TOLERANCE` times the
/// largest one are dropped and the corresponding unknowns set to zero.
pub(crate) fn lstsq(a: Matrix, b: Vec<f64>) -> Result<LeastSquares> {
    let (m, n) = (a.rows, a.cols);
    if m < n {
        return Err(argument(format!("least squares needs rows >= cols, got {m} x {n}")));
    }
    if b.len() != m {
        return Err(argument(format!("right-hand side has {} entries, matrix has {m} rows", b.len())));
    }
    if a.data.iter().chain(&b).any(|v| !v.is_finite()) {
        return Err(argument("least-squares system has non-finite entries"));
    }
    if n == 0 {
        return Ok(LeastSquares { x: vec![], rank: 0 });
    }

    let qr = DMatrix::from_vec(m, n, a.data).col_piv_qr();
    let mut qtb = DVector::from_vec(b);
    qr.q_tr_mul(&mut qtb);
    let r = qr.r();

    // Pivoting keeps |R_kk| non-increasing.
    let tol = RANK_TOLERANCE * r[(0, 0)].abs();
    let rank = (0..n).take_while(|&k| r[(k, k)].abs() > tol && r[(k, k)] != 0.0).count();

    let mut x = DVector::zeros(n);
    for i in (0..rank).rev() {
        let mut s = qtb[i];
        for j in i + 1..rank {
            s -= r[(i, j)] * x[j];
        }
        x[i] = s / r[(i, i)];
    }
    qr.p().inv_permute_rows(&mut x);
    Ok(LeastSquares { x: x.as_slice().to_vec(), rank })
}
