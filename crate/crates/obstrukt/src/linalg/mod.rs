//! Exact integer and rational linear algebra: Smith normal form,
//! homology/cohomology over Z, Q and Z/2, and coboundary-membership
//! decisions. No floating point anywhere.

mod rational;
mod snf;
mod sparse;

pub use rational::{
    nullspace_rational, rank_mod2, rank_rational, solve_rational_dense, RatMatrix,
};
pub use snf::{smith_normal_form, solve_integer_dense, SnfDecomposition};
pub use sparse::{solve_sparse, SparseIntMat};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .sum::<BigInt>()
            })
            .collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += coeff * row[source]
    pub(crate) fn row_axpy(&mut self, target: usize, source: usize, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = coeff * self.get(source, j);
            if !add.is_zero() {
                let cur = self.get(target, j) + add;
                self.set(target, j, cur);
            }
        }
    }

    /// col[target] += coeff * col[source]
    pub(crate) fn col_axpy(&mut self, target: usize, source: usize, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = coeff * self.get(i, source);
            if !add.is_zero() {
                let cur = self.get(i, target) + add;
                self.set(i, target, cur);
            }
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                let Some(r) = ((k + 1)..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, r);
                sign = -sign;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = m.get(k, k) * m.get(i, j) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }
}

/// Coefficient rings supported by the homology and coboundary deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Integer,
    Rational,
    Mod2,
}

impl Coefficients {
    pub fn label(&self) -> &'static str {
        match self {
            Coefficients::Integer => "Z",
            Coefficients::Rational => "Q",
            Coefficients::Mod2 => "Z/2",
        }
    }
}

/// A homology group: free rank plus torsion (divisibility chain, entries > 1).
/// Over a field the torsion list is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

/// Homology of a simplicial complex in dimension `d` over the given
/// coefficients. betti = dim ker ∂_d − rank ∂_{d+1}; torsion (over Z) from
/// the Smith normal form of ∂_{d+1}.
pub fn homology(
    complex: &SimplicialComplex,
    d: usize,
    coeff: Coefficients,
) -> Result<HomologyGroup> {
    if d > complex.dim() {
        return Err(Error::invalid(format!(
            "homology dimension {} exceeds complex dimension {}",
            d,
            complex.dim()
        )));
    }
    let n_d = complex.simplex_count(d);
    let rank_d = if d == 0 {
        0
    } else {
        let bd = crate::complex::boundary_matrix(complex, d)?;
        rank_over(&bd, coeff)
    };
    let (rank_next, torsion) = if d + 1 > complex.dim() {
        (0, Vec::new())
    } else {
        let bd = crate::complex::boundary_matrix(complex, d + 1)?;
        match coeff {
            Coefficients::Integer => {
                let snf = smith_normal_form(&bd);
                let mut rank = 0;
                let mut torsion = Vec::new();
                for k in 0..bd.rows().min(bd.cols()) {
                    let e = snf.d.get(k, k);
                    if e.is_zero() {
                        break;
                    }
                    rank += 1;
                    if e.abs() > BigInt::one() {
                        torsion.push(e.abs());
                    }
                }
                (rank, torsion)
            }
            _ => (rank_over(&bd, coeff), Vec::new()),
        }
    };
    let kernel = n_d - rank_d;
    if rank_next > kernel {
        return Err(Error::Internal("rank exceeds kernel dimension".into()));
    }
    Ok(HomologyGroup {
        betti: kernel - rank_next,
        torsion,
    })
}

fn rank_over(m: &IntMatrix, coeff: Coefficients) -> usize {
    match coeff {
        Coefficients::Mod2 => rank_mod2(m),
        // integer rank equals rational rank
        _ => rank_rational(m),
    }
}

/// Verdict of a coboundary-membership decision.
#[derive(Debug, Clone)]
pub enum CoboundaryVerdict {
    /// δx = c holds exactly; the witness entries are integral when the ring
    /// is Z or Z/2.
    Witness(Vec<BigRational>),
    /// No solution over the stated ring.
    No,
}

impl CoboundaryVerdict {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, CoboundaryVerdict::Witness(_))
    }
}

/// Decides whether the degree-d cochain `c` is δx for some (d-1)-cochain x,
/// in the cochain complex described by `delta` (C^{d-1} -> C^d) and (when the
/// complex continues upward) `delta_next` (C^d -> C^{d+1}).
///
/// Precondition: `c` is a cocycle; violated input is reported as an error
/// since it signals an upstream bug. A returned witness has been re-verified
/// against `delta` by exact substitution.
pub fn is_coboundary(
    delta: &SparseIntMat,
    delta_next: Option<&SparseIntMat>,
    c: &[BigInt],
    ring: Coefficients,
) -> Result<CoboundaryVerdict> {
    if c.len() != delta.rows() {
        return Err(Error::invalid(format!(
            "cochain length {} does not match delta rows {}",
            c.len(),
            delta.rows()
        )));
    }
    if let Some(up) = delta_next {
        let image = up.mul_int_vec(c);
        let ok = match ring {
            Coefficients::Mod2 => image.iter().all(|x| (x % 2u8).is_zero()),
            _ => image.iter().all(|x| x.is_zero()),
        };
        if !ok {
            return Err(Error::invalid("cochain is not a cocycle"));
        }
    }
    match solve_sparse(delta, c, ring) {
        Some(x) => {
            let residual_ok = verify_solution(delta, &x, c, ring);
            if !residual_ok {
                return Err(Error::Internal("witness failed re-substitution".into()));
            }
            Ok(CoboundaryVerdict::Witness(x))
        }
        None => Ok(CoboundaryVerdict::No),
    }
}

/// Exact re-substitution check: delta * x == c over the given ring.
pub fn verify_solution(
    delta: &SparseIntMat,
    x: &[BigRational],
    c: &[BigInt],
    ring: Coefficients,
) -> bool {
    let prod = delta.mul_rat_vec(x);
    match ring {
        Coefficients::Mod2 => prod.iter().zip(c).all(|(p, ci)| {
            if !p.is_integer() {
                return false;
            }
            let diff = p.to_integer() - ci;
            (diff % 2).is_zero()
        }),
        Coefficients::Integer => prod
            .iter()
            .zip(c)
            .all(|(p, ci)| p.is_integer() && p.to_integer() == *ci),
        Coefficients::Rational => prod
            .iter()
            .zip(c)
            .all(|(p, ci)| p == &BigRational::from(ci.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        snf.verify(&a).unwrap();
        assert_eq!(snf.d.get(0, 0), &BigInt::from(1));
        assert_eq!(snf.d.get(1, 1), &BigInt::from(6));
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zero(3, 2);
        let snf = smith_normal_form(&a);
        snf.verify(&a).unwrap();
        assert!(snf.d.is_zero());
        assert_eq!(snf.u, IntMatrix::identity(3));
        assert_eq!(snf.v, IntMatrix::identity(2));
    }

    #[test]
    fn snf_hollow_tetrahedron_gives_h2_z() {
        let verts = ["a", "b", "c", "d"];
        let mut maximal = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                for k in (j + 1)..4 {
                    maximal.push(names(&[verts[i], verts[j], verts[k]]));
                }
            }
        }
        let k = build_complex("hollow", &maximal).unwrap();
        let d2 = crate::complex::boundary_matrix(&k, 2).unwrap();
        let snf = smith_normal_form(&d2);
        snf.verify(&d2).unwrap();
        let ones = (0..4)
            .filter(|&i| snf.d.get(i, i) == &BigInt::from(1))
            .count();
        assert_eq!(ones, 3);
        let h2 = homology(&k, 2, Coefficients::Integer).unwrap();
        assert_eq!(h2.betti, 1);
        assert!(h2.torsion.is_empty());
    }

    #[test]
    fn sphere_model_homology() {
        let verts = ["a", "b", "c", "d"];
        let mut maximal = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                for k in (j + 1)..4 {
                    maximal.push(names(&[verts[i], verts[j], verts[k]]));
                }
            }
        }
        let k = build_complex("s2", &maximal).unwrap();
        for coeff in [
            Coefficients::Integer,
            Coefficients::Rational,
            Coefficients::Mod2,
        ] {
            assert_eq!(homology(&k, 0, coeff).unwrap().betti, 1);
            assert_eq!(homology(&k, 1, coeff).unwrap().betti, 0);
            assert_eq!(homology(&k, 2, coeff).unwrap().betti, 1);
        }
    }

    #[test]
    fn h2_of_two_skeleton_of_six_simplex() {
        let verts: Vec<String> = (1..=7).map(|i| format!("v{}", i)).collect();
        let mut maximal = Vec::new();
        for i in 0..7 {
            for j in (i + 1)..7 {
                for k in (j + 1)..7 {
                    maximal.push(vec![verts[i].clone(), verts[j].clone(), verts[k].clone()]);
                }
            }
        }
        let k = build_complex("skel", &maximal).unwrap();
        let h2 = homology(&k, 2, Coefficients::Integer).unwrap();
        assert_eq!(h2.betti, 20);
        assert!(h2.torsion.is_empty());
        let h1 = homology(&k, 1, Coefficients::Rational).unwrap();
        assert_eq!(h1.betti, 0);
    }

    #[test]
    fn homology_invalid_dim() {
        let k = build_complex("pt", &[names(&["a"])]).unwrap();
        assert!(homology(&k, 3, Coefficients::Integer).is_err());
    }

    #[test]
    fn coboundary_roundtrip_and_zero() {
        // delta: C^0 -> C^1 of the path a-b-c
        let k = build_complex("path", &[names(&["a", "b"]), names(&["b", "c"])]).unwrap();
        let d1 = crate::complex::boundary_matrix(&k, 1).unwrap();
        let delta = SparseIntMat::from_dense(&d1.transpose());
        // zero cochain
        let c = vec![BigInt::zero(); 2];
        let v = is_coboundary(&delta, None, &c, Coefficients::Integer).unwrap();
        assert!(v.is_coboundary());
        // coboundary of x = (1, 5, -2)
        let x = vec![BigInt::from(1), BigInt::from(5), BigInt::from(-2)];
        let c = delta.mul_int_vec(&x);
        for ring in [
            Coefficients::Integer,
            Coefficients::Rational,
            Coefficients::Mod2,
        ] {
            let v = is_coboundary(&delta, None, &c, ring).unwrap();
            assert!(v.is_coboundary(), "ring {:?}", ring);
        }
    }

    #[test]
    fn determinant_small() {
        let a = IntMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(a.determinant(), BigInt::from(1));
        let b = IntMatrix::from_i64_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(b.determinant(), BigInt::zero());
    }
}
