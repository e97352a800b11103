//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;
use core::mem;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank together with the pivot columns of one row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankWitness {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| BigInt::zero()).collect(),
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().into_echelon().rank
    }

    /// Runs fraction-free elimination in place of a copy and returns the
    /// rank with its pivot columns.
    ///
    /// After pivoting on `(r, c)`, every remaining entry equals a minor of
    /// the original matrix, so the division by the previous pivot is exact.
    pub fn into_echelon(mut self) -> RankWitness {
        let mut prev = BigInt::one();
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let pivot = self.get(r, c).clone();
            for i in r + 1..self.rows {
                let factor = mem::take(&mut self.data[i * self.cols + c]);
                for j in c + 1..self.cols {
                    let top = self.get(r, j);
                    let cur = &self.data[i * self.cols + j];
                    if factor.is_zero() && cur.is_zero() {
                        continue;
                    }
                    let mut v = &pivot * cur;
                    if !factor.is_zero() && !top.is_zero() {
                        v -= &factor * top;
                    }
                    self.data[i * self.cols + j] = v / &prev;
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        RankWitness {
            rank: r,
            pivot_columns: pivots,
        }
    }
}
