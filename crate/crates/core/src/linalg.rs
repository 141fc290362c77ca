//! Exact Gaussian elimination over the rationals.

use crate::ncalg::Q;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Dense matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    /// Builds the matrix whose columns are the given sparse vectors; returns it with the row keys.
    pub fn from_columns<K: Ord + Clone>(columns: &[BTreeMap<K, Q>]) -> (Self, Vec<K>) {
        let mut keys: BTreeMap<K, usize> = BTreeMap::new();
        for col in columns {
            for k in col.keys() {
                let next = keys.len();
                keys.entry(k.clone()).or_insert(next);
            }
        }
        let mut ordered: Vec<K> = keys.keys().cloned().collect();
        ordered.sort();
        let index: BTreeMap<K, usize> = ordered.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut m = Matrix::zeros(ordered.len(), columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (k, v) in col {
                m.set(index[k], j, v.clone());
            }
        }
        (m, ordered)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = Q::one() / self.get(row, col);
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let f = self.get(r, col).clone();
                for c in col..self.cols {
                    if self.get(row, c).is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &f * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the null space; free variables set to unit vectors in increasing order.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b` with every free coordinate set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Solves Σ x_j col_j = rhs over sparse columns (zero free coordinates).
pub fn solve_columns<K: Ord + Clone>(columns: &[BTreeMap<K, Q>], rhs: &BTreeMap<K, Q>) -> Option<Vec<Q>> {
    let mut all: Vec<BTreeMap<K, Q>> = columns.to_vec();
    all.push(rhs.clone());
    let (m, keys) = Matrix::from_columns(&all);
    let mut a = Matrix::zeros(keys.len(), columns.len());
    let mut b = vec![Q::zero(); keys.len()];
    for r in 0..keys.len() {
        for c in 0..columns.len() {
            a.set(r, c, m.get(r, c).clone());
        }
        b[r] = m.get(r, columns.len()).clone();
    }
    a.solve(&b)
}

/// Null space of the map sending unit vector j to `columns[j]`.
pub fn kernel_columns<K: Ord + Clone>(columns: &[BTreeMap<K, Q>]) -> Vec<Vec<Q>> {
    let (m, _) = Matrix::from_columns(columns);
    if m.rows() == 0 {
        return (0..columns.len())
            .map(|j| (0..columns.len()).map(|i| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
    }
    m.kernel()
}

pub fn rank_columns<K: Ord + Clone>(columns: &[BTreeMap<K, Q>]) -> usize {
    let (m, _) = Matrix::from_columns(columns);
    if m.rows() == 0 {
        return 0;
    }
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::q;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, q(*v));
            }
        }
        m
    }

    #[test]
    fn solve_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        let x = m.solve(&[q(3), q(6)]).unwrap();
        assert_eq!(x, vec![q(3), q(0), q(0)]);
        assert!(m.solve(&[q(1), q(3)]).is_none());
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(entries in proptest::collection::vec(-3i64..4, 12)) {
            let mut m = Matrix::zeros(3, 4);
            for (i, v) in entries.iter().enumerate() {
                m.set(i / 4, i % 4, q(*v));
            }
            let k = m.kernel();
            prop_assert_eq!(k.len() + m.rank(), 4);
            for v in k {
                for r in 0..3 {
                    let s: Q = (0..4).map(|c| m.get(r, c) * &v[c]).sum();
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
