//! Dense rational and mod-2 elimination on integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;

/// Dense matrix over Q.
#[derive(Debug, Clone, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        let mut out = RatMatrix::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, BigRational::from(m.get(i, j).clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
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
}

/// Rank over Q by fraction-free (Bareiss) elimination on integer data.
pub fn rank_rational(a: &IntMatrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(rank, p);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let num = m.get(rank, col) * m.get(r, c) - m.get(r, col) * m.get(rank, c);
                m.set(r, c, num / &prev);
            }
            m.set(r, col, BigInt::zero());
        }
        prev = m.get(rank, col).clone();
        rank += 1;
    }
    rank
}

/// Rank over Z/2.
pub fn rank_mod2(a: &IntMatrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    // bit-packed rows
    let words = cols.div_ceil(64);
    let mut bits: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..cols {
                if (a.get(i, j) % 2u8).is_zero() {
                    continue;
                }
                row[j / 64] |= 1 << (j % 64);
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| bits[r][col / 64] >> (col % 64) & 1 == 1) else {
            continue;
        };
        bits.swap(rank, p);
        let (head, tail) = bits.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col / 64] >> (col % 64) & 1 == 1 {
                for w in 0..words {
                    row[w] ^= pivot_row[w];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Solves A x = b over Q (dense). Returns None when inconsistent.
pub fn solve_rational_dense(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len());
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(rank, p);
        rhs.swap(rank, p);
        let inv = m.get(rank, col).recip();
        for c in col..cols {
            let v = m.get(rank, c) * &inv;
            m.set(rank, c, v);
        }
        rhs[rank] = &rhs[rank] * &inv;
        for r in 0..rows {
            if r == rank || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in col..cols {
                let v = m.get(r, c) - &factor * m.get(rank, c);
                m.set(r, c, v);
            }
            rhs[r] = &rhs[r] - &factor * &rhs[rank];
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // consistency on zero rows
    for r in rank..rows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &col) in pivot_col_of_row.iter().enumerate() {
        x[col] = rhs[r].clone();
    }
    Some(x)
}

/// Basis of the rational nullspace of A, in reduced echelon form with a fixed
/// pivot order (deterministic).
pub fn nullspace_rational(a: &IntMatrix) -> Vec<Vec<BigRational>> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = RatMatrix::from_int(a);
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(rank, p);
        let inv = m.get(rank, col).recip();
        for c in col..cols {
            let v = m.get(rank, c) * &inv;
            m.set(rank, c, v);
        }
        for r in 0..rows {
            if r == rank || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in col..cols {
                let v = m.get(r, c) - &factor * m.get(rank, c);
                m.set(r, c, v);
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> =
        pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut vec = vec![BigRational::zero(); cols];
        vec[free] = BigRational::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            vec[pc] = -m.get(r, free).clone();
        }
        basis.push(vec);
    }
    basis
}
