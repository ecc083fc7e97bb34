//! Dense exact-rational matrices: just enough linear algebra for inverse
//! Cartan matrices, rank certificates and flag canonical forms.

use crate::num::Rat;
use alloc::{vec, vec::Vec};
use num_traits::{One, Zero};

/// Dense matrix over ℚ, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        QMat { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Rat> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &v[j];
                }
                acc
            })
            .collect()
    }

    /// Exact inverse by Gauss–Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j) / &p);
                inv.set(col, j, inv.get(col, j) / &p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let va = a.get(r, j) - &factor * a.get(col, j);
                    a.set(r, j, va);
                    let vi = inv.get(r, j) - &factor * inv.get(col, j);
                    inv.set(r, j, vi);
                }
            }
        }
        Some(inv)
    }

    /// Exact rank by rational Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..a.cols {
            let Some(pivot) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(pivot, row);
            let p = a.get(row, col).clone();
            for r in row + 1..a.rows {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col) / &p;
                for j in col..a.cols {
                    let v = a.get(r, j) - &factor * a.get(row, j);
                    a.set(r, j, v);
                }
            }
            rank += 1;
            row += 1;
            if row == a.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    /// Builds a matrix from a list of columns.
    pub fn from_columns(n: usize, columns: &[Vec<Rat>]) -> QMat {
        let mut m = QMat::zeros(n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n);
            for i in 0..n {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }
}

/// Canonical representative of a full flag under upper-triangular column
/// operations, with pivots chosen topmost. Columns are processed left to
/// right: the pivot of column `j` is its topmost nonzero entry, normalized to
/// 1, and the pivot row is cleared to the right. Returns the reduced matrix
/// together with the pivot rows as a one-line permutation (1-based).
///
/// For an invertible input this identifies the opposite Schubert cell that
/// contains the flag, and the off-pivot entries measure the distance from the
/// corresponding permutation flag.
pub fn opposite_cell_canonical_form(m: &QMat) -> (QMat, Vec<usize>) {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut a = m.clone();
    let mut one_line = vec![0usize; n];
    for j in 0..n {
        let pivot_row = (0..n)
            .find(|&r| !a.get(r, j).is_zero())
            .expect("singular matrix has no flag canonical form");
        one_line[j] = pivot_row + 1;
        let p = a.get(pivot_row, j).clone();
        for r in 0..n {
            a.set(r, j, a.get(r, j) / &p);
        }
        for k in j + 1..n {
            if a.get(pivot_row, k).is_zero() {
                continue;
            }
            let factor = a.get(pivot_row, k).clone();
            for r in 0..n {
                let v = a.get(r, k) - &factor * a.get(r, j);
                a.set(r, k, v);
            }
        }
    }
    (a, one_line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rfrac, rint};

    #[test]
    fn inverse_roundtrip() {
        let m = QMat::from_rows(vec![
            vec![rint(2), rint(-1)],
            vec![rint(-1), rint(2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rfrac(2, 3));
        assert_eq!(inv.get(0, 1), &rfrac(1, 3));
        assert_eq!(m.mul(&inv), QMat::identity(2));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = QMat::from_rows(vec![vec![rint(1), rint(2)], vec![rint(2), rint(4)]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_of_wide_matrix() {
        let m = QMat::from_rows(vec![
            vec![rint(1), rint(0), rint(1), rint(2)],
            vec![rint(0), rint(1), rint(1), rint(3)],
            vec![rint(1), rint(1), rint(2), rint(5)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn canonical_form_of_permutation_matrix_is_itself() {
        // permutation 2143 as columns e2, e1, e4, e3
        let mut m = QMat::zeros(4, 4);
        m.set(1, 0, rint(1));
        m.set(0, 1, rint(1));
        m.set(3, 2, rint(1));
        m.set(2, 3, rint(1));
        let (reduced, one_line) = opposite_cell_canonical_form(&m);
        assert_eq!(reduced, m);
        assert_eq!(one_line, vec![2, 1, 4, 3]);
    }
}
