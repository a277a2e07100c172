//! Small dense matrices over a field: elimination, determinant, inverse,
//! rank, kernel. Sizes here are tiny (≤ a few hundred rows), so classical
//! Gaussian elimination is the right tool.

use crate::domain::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    pub domain: F,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(domain: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            domain,
            rows,
            cols,
            data,
        }
    }

    pub fn zero(domain: F, rows: usize, cols: usize) -> Self {
        let z = domain.zero();
        Matrix {
            domain,
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(domain: F, n: usize) -> Self {
        let mut m = Self::zero(domain, n, n);
        for i in 0..n {
            let one = m.domain.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let d = &self.domain;
        (0..self.rows)
            .map(|r| {
                let mut acc = d.zero();
                for c in 0..self.cols {
                    let t = d.mul(self.at(r, c), &v[c]);
                    acc = d.add(&acc, &t);
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let d = self.domain.clone();
        let mut out = Self::zero(d.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if d.is_zero(self.at(r, k)) {
                    continue;
                }
                for c in 0..other.cols {
                    let t = d.mul(self.at(r, k), other.at(k, c));
                    let v = d.add(out.at(r, c), &t);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Row echelon reduction in place; returns (rank, det-of-leading-block
    /// accumulated sign/product for square input).
    fn echelon(&mut self) -> (usize, F::Elem) {
        let d = self.domain.clone();
        let mut det = d.one();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(sel) =
                (pivot_row..self.rows).find(|r| !d.is_zero(self.at(*r, col)))
            else {
                det = d.zero();
                continue;
            };
            if sel != pivot_row {
                for c in 0..self.cols {
                    self.data
                        .swap(sel * self.cols + c, pivot_row * self.cols + c);
                }
                det = d.neg(&det);
            }
            let pv = self.at(pivot_row, col).clone();
            det = d.mul(&det, &pv);
            let pv_inv = d.inv(&pv).expect("pivot invertible");
            for r in pivot_row + 1..self.rows {
                let factor = d.mul(self.at(r, col), &pv_inv);
                if d.is_zero(&factor) {
                    continue;
                }
                for c in col..self.cols {
                    let t = d.mul(&factor, self.at(pivot_row, c));
                    let v = d.sub(self.at(r, c), &t);
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        (pivot_row, det)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon().0
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let (rank, det) = m.echelon();
        if rank < self.rows {
            self.domain.zero()
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let d = self.domain.clone();
        // Augment with identity and do full Gauss-Jordan.
        let mut aug = Self::zero(d.clone(), n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, d.one());
        }
        for col in 0..n {
            let Some(sel) = (col..n).find(|r| !d.is_zero(aug.at(*r, col))) else {
                return None;
            };
            if sel != col {
                for c in 0..2 * n {
                    aug.data.swap(sel * 2 * n + c, col * 2 * n + c);
                }
            }
            let pv_inv = d.inv(aug.at(col, col)).unwrap();
            for c in 0..2 * n {
                let v = d.mul(aug.at(col, c), &pv_inv);
                aug.set(col, c, v);
            }
            for r in 0..n {
                if r == col || d.is_zero(aug.at(r, col)) {
                    continue;
                }
                let factor = aug.at(r, col).clone();
                for c in 0..2 * n {
                    let t = d.mul(&factor, aug.at(col, c));
                    let v = d.sub(aug.at(r, c), &t);
                    aug.set(r, c, v);
                }
            }
        }
        let mut out = Self::zero(d, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.at(r, n + c).clone());
            }
        }
        Some(out)
    }

    /// Basis of the right kernel (solutions of `M v = 0`).
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let d = self.domain.clone();
        let mut m = self.clone();
        m.echelon();
        // Back-substitution on the echelon form: find pivot columns.
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0;
        for col in 0..m.cols {
            if row < m.rows && !d.is_zero(m.at(row, col)) {
                pivots.push((row, col));
                row += 1;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|(_, c)| *c).collect();
        let free_cols: Vec<usize> =
            (0..m.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free_cols {
            let mut v = vec![d.zero(); m.cols];
            v[fc] = d.one();
            // Solve pivot variables bottom-up.
            for &(pr, pc) in pivots.iter().rev() {
                let mut acc = d.zero();
                for c in pc + 1..m.cols {
                    let t = d.mul(m.at(pr, c), &v[c]);
                    acc = d.add(&acc, &t);
                }
                let pv_inv = d.inv(m.at(pr, pc)).unwrap();
                v[pc] = d.neg(&d.mul(&acc, &pv_inv));
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{PrimeField, Ring};

    fn m7(rows: usize, cols: usize, vals: &[i64]) -> Matrix<PrimeField> {
        let f = PrimeField::new(7).unwrap();
        Matrix::new(
            f,
            rows,
            cols,
            vals.iter().map(|v| f.from_i64(*v)).collect(),
        )
    }

    #[test]
    fn det_and_inverse() {
        let m = m7(2, 2, &[1, 2, 3, 4]);
        // det = -2 = 5 mod 7.
        assert_eq!(m.det(), 5);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), Matrix::identity(m.domain, 2));
    }

    #[test]
    fn singular_matrix() {
        let m = m7(2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.det(), 0);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_solves() {
        let m = m7(2, 4, &[1, 2, 3, 4, 0, 1, 1, 1]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let out = m.mul_vec(&v);
            assert!(out.iter().all(|x| *x == 0));
        }
    }
}
