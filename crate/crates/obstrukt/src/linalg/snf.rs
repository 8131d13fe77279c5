//! Smith normal form over the integers, with unimodular transforms tracked
//! through elementary operations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., U and V unimodular.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Re-verifies U·A·V = D, the divisibility chain, and that D is diagonal
    /// with nonnegative entries.
    pub fn verify(&self, a: &IntMatrix) -> Result<()> {
        let prod = self.u.mul(a).mul(&self.v);
        if prod != self.d {
            return Err(Error::Internal("SNF: U*A*V != D".into()));
        }
        let k = self.d.rows().min(self.d.cols());
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d.get(i, j).is_zero() {
                    return Err(Error::Internal("SNF: D not diagonal".into()));
                }
            }
        }
        for idx in 0..k {
            if self.d.get(idx, idx).is_negative() {
                return Err(Error::Internal("SNF: negative diagonal entry".into()));
            }
        }
        for idx in 1..k {
            let prev = self.d.get(idx - 1, idx - 1);
            let cur = self.d.get(idx, idx);
            if prev.is_zero() {
                if !cur.is_zero() {
                    return Err(Error::Internal("SNF: zero before nonzero".into()));
                }
            } else if !(cur % prev).is_zero() {
                return Err(Error::Internal("SNF: divisibility chain broken".into()));
            }
        }
        Ok(())
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let k = self.d.rows().min(self.d.cols());
        (0..k).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }
}

/// Computes the Smith normal form by minimal-absolute-value pivoting with a
/// fixed row-major scan order, so results are deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let kmax = m.min(n);
    for k in 0..kmax {
        'stage: loop {
            // minimal |entry| pivot in the trailing block, first hit wins
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    let e = d.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if e.abs() < d.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'stage; // trailing block is zero
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // clear column k below the pivot
            for i in (k + 1)..m {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = -(d.get(i, k) / d.get(k, k));
                d.row_axpy(i, k, &q);
                u.row_axpy(i, k, &q);
            }
            // clear row k right of the pivot
            for j in (k + 1)..n {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = -(d.get(k, j) / d.get(k, k));
                d.col_axpy(j, k, &q);
                v.col_axpy(j, k, &q);
            }
            let col_clear = ((k + 1)..m).all(|i| d.get(i, k).is_zero());
            let row_clear = ((k + 1)..n).all(|j| d.get(k, j).is_zero());
            if !col_clear || !row_clear {
                continue 'stage; // remainders left; re-pick a smaller pivot
            }
            // divisibility fix-up: pull a non-multiple into row k
            for i in (k + 1)..m {
                for j in (k + 1)..n {
                    if !(d.get(i, j) % d.get(k, k)).is_zero() {
                        let one = BigInt::one();
                        d.row_axpy(k, i, &one);
                        u.row_axpy(k, i, &one);
                        continue 'stage;
                    }
                }
            }
            break 'stage;
        }
    }
    for k in 0..kmax {
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SnfDecomposition { u, d, v }
}

/// Solves A x = b exactly over the integers via SNF back-substitution.
/// Returns None when no integral solution exists.
pub fn solve_integer_dense(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b);
    let k = a.rows().min(a.cols());
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        let di = if i < k { snf.d.get(i, i).clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            if !(&ub[i] % &di).is_zero() {
                return None;
            }
            y[i] = &ub[i] / &di;
        }
    }
    Some(snf.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_random_roundtrip_small() {
        // deterministic pseudo-random fill
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 101) as i64 - 50
        };
        for _ in 0..25 {
            let rows = 1 + (next().unsigned_abs() as usize % 8);
            let cols = 1 + (next().unsigned_abs() as usize % 8);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| next()).collect())
                .collect();
            let a = IntMatrix::from_i64_rows(&data);
            let snf = smith_normal_form(&a);
            snf.verify(&a).unwrap();
            assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
            assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
        }
    }

    #[test]
    fn integer_solve_and_unsolvable() {
        let a = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 2]]);
        let b = vec![BigInt::from(4), BigInt::from(-6)];
        let x = solve_integer_dense(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let b_odd = vec![BigInt::from(1), BigInt::from(0)];
        assert!(solve_integer_dense(&a, &b_odd).is_none());
    }
}
