//! Sparse exact linear solving for coboundary systems.
//!
//! Incidence-type matrices (entries ±1, a handful per row) eliminate almost
//! entirely with unit pivots and no fractions; whatever survives is handed to
//! the dense engines. Pivot order is fixed, so witnesses are reproducible.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{solve_integer_dense, solve_rational_dense, Coefficients, IntMatrix, RatMatrix};

/// Row-major sparse integer matrix.
#[derive(Debug, Clone)]
pub struct SparseIntMat {
    rows: usize,
    cols: usize,
    row_data: Vec<BTreeMap<u32, BigInt>>,
}

impl SparseIntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMat {
            rows,
            cols,
            row_data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn from_dense(m: &IntMatrix) -> Self {
        let mut out = SparseIntMat::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.get(i, j).is_zero() {
                    out.add_entry(i, j, m.get(i, j).clone());
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows, self.cols);
        for (i, row) in self.row_data.iter().enumerate() {
            for (&j, v) in row {
                out.set(i, j as usize, v.clone());
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

    pub fn nnz(&self) -> usize {
        self.row_data.iter().map(|r| r.len()).sum()
    }

    pub fn row(&self, i: usize) -> &BTreeMap<u32, BigInt> {
        &self.row_data[i]
    }

    /// Adds `v` to entry (i, j), dropping it when the sum vanishes.
    pub fn add_entry(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            return;
        }
        let cell = self.row_data[i].entry(j as u32).or_insert_with(BigInt::zero);
        *cell += v;
        if cell.is_zero() {
            self.row_data[i].remove(&(j as u32));
        }
    }

    pub fn transpose(&self) -> SparseIntMat {
        let mut out = SparseIntMat::zero(self.cols, self.rows);
        for (i, row) in self.row_data.iter().enumerate() {
            for (&j, v) in row {
                out.row_data[j as usize].insert(i as u32, v.clone());
            }
        }
        out
    }

    pub fn mul_int_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        self.row_data
            .iter()
            .map(|row| row.iter().map(|(&j, a)| a * &v[j as usize]).sum())
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        self.row_data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(&j, a)| BigRational::from(a.clone()) * &v[j as usize])
                    .sum()
            })
            .collect()
    }
}

/// Solves A x = b over the given ring. Returns None when no solution
/// exists. Witness entries are integral for Z, in {0, 1} for Z/2.
pub fn solve_sparse(a: &SparseIntMat, b: &[BigInt], ring: Coefficients) -> Option<Vec<BigRational>> {
    assert_eq!(b.len(), a.rows);
    let two = BigInt::from(2);
    let normalize = |v: BigInt| -> BigInt {
        match ring {
            Coefficients::Mod2 => v.mod_floor(&two),
            _ => v,
        }
    };

    let mut rows: Vec<BTreeMap<u32, BigInt>> = a
        .row_data
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(|(&j, v)| {
                    let nv = normalize(v.clone());
                    (!nv.is_zero()).then_some((j, nv))
                })
                .collect()
        })
        .collect();
    let mut rhs: Vec<BigInt> = b.iter().map(|v| normalize(v.clone())).collect();

    let mut col_rows: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); a.cols];
    let mut unit_count: Vec<usize> = vec![0; a.rows];
    for (i, row) in rows.iter().enumerate() {
        for (&j, v) in row {
            col_rows[j as usize].insert(i as u32);
            if v.abs().is_one() {
                unit_count[i] += 1;
            }
        }
    }
    let mut active = vec![true; a.rows];
    let mut pivots: Vec<(usize, u32)> = Vec::new();

    // phase 1: unit pivots, Markowitz-flavoured choice, no fractions
    loop {
        let mut best: Option<(usize, usize)> = None; // (nnz, row)
        for i in 0..a.rows {
            if !active[i] || unit_count[i] == 0 {
                continue;
            }
            let nnz = rows[i].len();
            match best {
                None => best = Some((nnz, i)),
                Some((bn, _)) if nnz < bn => best = Some((nnz, i)),
                _ => {}
            }
        }
        let Some((_, pi)) = best else { break };
        // among the unit entries of the row, the sparsest column
        let pj = rows[pi]
            .iter()
            .filter(|(_, v)| v.abs().is_one())
            .min_by_key(|(&j, _)| (col_rows[j as usize].len(), j))
            .map(|(&j, _)| j)
            .expect("row has a unit entry");
        let pivot_val = rows[pi][&pj].clone(); // ±1
        let hitting: Vec<u32> = col_rows[pj as usize]
            .iter()
            .copied()
            .filter(|&k| k as usize != pi)
            .collect();
        let pivot_row = rows[pi].clone();
        let pivot_rhs = rhs[pi].clone();
        for k in hitting {
            let k = k as usize;
            // q = entry / pivot; pivot is ±1 so this is exact
            let q = (&rows[k][&pj] * &pivot_val).clone();
            for (&j, v) in &pivot_row {
                let old = rows[k].remove(&j);
                let had_unit = old.as_ref().map_or(false, |o| o.abs().is_one());
                let newv = normalize(old.clone().unwrap_or_else(BigInt::zero) - &q * v);
                if old.is_some() && newv.is_zero() {
                    col_rows[j as usize].remove(&(k as u32));
                } else if old.is_none() && !newv.is_zero() {
                    col_rows[j as usize].insert(k as u32);
                }
                let has_unit = !newv.is_zero() && newv.abs().is_one();
                match (had_unit, has_unit) {
                    (true, false) => unit_count[k] -= 1,
                    (false, true) => unit_count[k] += 1,
                    _ => {}
                }
                if !newv.is_zero() {
                    rows[k].insert(j, newv);
                }
            }
            rhs[k] = normalize(rhs[k].clone() - &q * &pivot_rhs);
        }
        // freeze the pivot row for back-substitution
        active[pi] = false;
        for &j in pivot_row.keys() {
            col_rows[j as usize].remove(&(pi as u32));
        }
        let _ = pivot_rhs;
        pivots.push((pi, pj));
    }

    // phase 2: residual block (empty under Z/2 since every nonzero is a unit)
    let residual_rows: Vec<usize> = (0..a.rows)
        .filter(|&i| active[i] && !rows[i].is_empty())
        .collect();
    for i in 0..a.rows {
        if active[i] && rows[i].is_empty() && !rhs[i].is_zero() {
            return None; // inconsistent empty row
        }
    }
    let mut x = vec![BigRational::zero(); a.cols];
    if !residual_rows.is_empty() {
        debug_assert!(ring != Coefficients::Mod2);
        let residual_cols: Vec<u32> = {
            let mut s = BTreeSet::new();
            for &i in &residual_rows {
                s.extend(rows[i].keys().copied());
            }
            s.into_iter().collect()
        };
        let col_pos: BTreeMap<u32, usize> = residual_cols
            .iter()
            .enumerate()
            .map(|(p, &j)| (j, p))
            .collect();
        let mut sub = IntMatrix::zero(residual_rows.len(), residual_cols.len());
        let mut sub_rhs = Vec::with_capacity(residual_rows.len());
        for (ri, &i) in residual_rows.iter().enumerate() {
            for (&j, v) in &rows[i] {
                sub.set(ri, col_pos[&j], v.clone());
            }
            sub_rhs.push(rhs[i].clone());
        }
        match ring {
            Coefficients::Integer => {
                let sol = solve_integer_dense(&sub, &sub_rhs)?;
                for (p, &j) in residual_cols.iter().enumerate() {
                    x[j as usize] = BigRational::from(sol[p].clone());
                }
            }
            Coefficients::Rational => {
                let sub_rat = RatMatrix::from_int(&sub);
                let rhs_rat: Vec<BigRational> =
                    sub_rhs.iter().map(|v| BigRational::from(v.clone())).collect();
                let sol = solve_rational_dense(&sub_rat, &rhs_rat)?;
                for (p, &j) in residual_cols.iter().enumerate() {
                    x[j as usize] = sol[p].clone();
                }
            }
            Coefficients::Mod2 => unreachable!("mod-2 elimination leaves no residual"),
        }
    }

    // back-substitution through the frozen pivot rows, in reverse order
    for &(i, j) in pivots.iter().rev() {
        let mut acc = BigRational::from(rhs[i].clone());
        for (&c, v) in &rows[i] {
            if c == j {
                continue;
            }
            acc -= BigRational::from(v.clone()) * &x[c as usize];
        }
        let pivot = &rows[i][&j]; // ±1, so division stays exact
        let mut val = acc / BigRational::from(pivot.clone());
        if ring == Coefficients::Mod2 {
            debug_assert!(val.is_integer());
            val = BigRational::from(val.to_integer().mod_floor(&two));
        }
        x[j as usize] = val;
    }
    Some(x)
}
