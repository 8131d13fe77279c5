//! Deleted products, configuration complexes, and the Z/2-equivariant
//! cochain complex of a deleted product.
//!
//! Cells are ordered tuples of pairwise vertex-disjoint simplices of the base
//! complex; the boundary follows the graded Leibniz rule, and any face tuple
//! that lands in the simplicial diagonal is dropped. The factor swap acts on
//! oriented cells with the Koszul sign (-1)^{pq}.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::SparseIntMat;

/// Reference to a simplex of the base complex as (dimension, index).
pub type SimplexRef = (u8, u32);

/// An ordered tuple of simplices of the base complex, pairwise
/// vertex-disjoint. Its dimension is the sum of the factor dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductCell {
    pub factors: Vec<SimplexRef>,
}

impl ProductCell {
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|&(d, _)| d as usize).sum()
    }
}

/// Product-type cell complex on tuples of simplices of a base complex.
#[derive(Debug, Clone)]
pub struct ProductComplex {
    m: usize,
    /// Cells per total dimension, sorted.
    cells: Vec<Vec<ProductCell>>,
    index: Vec<HashMap<ProductCell, usize>>,
    /// faces[d][j]: the (d-1)-faces of cell j with incidence signs.
    faces: Vec<Vec<Vec<(u32, i8)>>>,
    /// boundaries[d]: rows = (d-1)-cells, cols = d-cells, for d >= 1.
    boundaries: Vec<SparseIntMat>,
}

impl ProductComplex {
    pub fn factor_count(&self) -> usize {
        self.m
    }

    /// Largest dimension that carries cells (None when the complex is empty).
    pub fn dim(&self) -> Option<usize> {
        (0..self.cells.len()).rev().find(|&d| !self.cells[d].is_empty())
    }

    pub fn cells(&self, d: usize) -> &[ProductCell] {
        self.cells.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn cell_count(&self, d: usize) -> usize {
        self.cells(d).len()
    }

    pub fn cell_index(&self, cell: &ProductCell) -> Option<usize> {
        self.index.get(cell.dim())?.get(cell).copied()
    }

    /// Signed (d-1)-faces of the given d-cell.
    pub fn faces_of(&self, d: usize, idx: usize) -> &[(u32, i8)] {
        &self.faces[d][idx]
    }

    /// Boundary matrix ∂_d (rows = (d-1)-cells, cols = d-cells).
    pub fn boundary(&self, d: usize) -> Option<&SparseIntMat> {
        if d == 0 || d >= self.boundaries.len() {
            None
        } else {
            Some(&self.boundaries[d])
        }
    }

    /// Total cell count across dimensions.
    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(|v| v.len()).sum()
    }
}

fn vertex_mask(s: &Simplex) -> u128 {
    let mut mask = 0u128;
    for &v in s.vertices() {
        mask |= 1 << v;
    }
    mask
}

/// Builds the complex of ordered m-tuples of simplices satisfying
/// `disjoint_only` (pairwise vertex-disjoint) or all tuples (the full
/// product, used to cross-check the restriction behaviour).
fn product_complex(
    base: &SimplicialComplex,
    m: usize,
    disjoint_only: bool,
) -> Result<ProductComplex> {
    if m < 1 {
        return Err(Error::invalid("product needs at least one factor"));
    }
    if base.vertex_count() > 128 {
        return Err(Error::invalid(
            "product construction supports at most 128 vertices",
        ));
    }
    // all simplices with their vertex masks
    let mut simplex_refs: Vec<(SimplexRef, u128)> = Vec::new();
    for d in 0..=base.dim() {
        for (i, s) in base.simplices(d).iter().enumerate() {
            simplex_refs.push(((d as u8, i as u32), vertex_mask(s)));
        }
    }

    let max_dim = base.dim() * m;
    let mut cells: Vec<Vec<ProductCell>> = vec![Vec::new(); max_dim + 1];
    let mut stack: Vec<(SimplexRef, u128)> = Vec::with_capacity(m);
    fn enumerate(
        simplex_refs: &[(SimplexRef, u128)],
        m: usize,
        disjoint_only: bool,
        stack: &mut Vec<(SimplexRef, u128)>,
        used: u128,
        cells: &mut [Vec<ProductCell>],
    ) {
        if stack.len() == m {
            let cell = ProductCell {
                factors: stack.iter().map(|&(r, _)| r).collect(),
            };
            cells[cell.dim()].push(cell);
            return;
        }
        for &(r, mask) in simplex_refs {
            if disjoint_only && (used & mask) != 0 {
                continue;
            }
            stack.push((r, mask));
            enumerate(simplex_refs, m, disjoint_only, stack, used | mask, cells);
            stack.pop();
        }
    }
    enumerate(&simplex_refs, m, disjoint_only, &mut stack, 0, &mut cells);

    for list in &mut cells {
        list.sort();
    }
    let index: Vec<HashMap<ProductCell, usize>> = cells
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i))
                .collect()
        })
        .collect();

    // Leibniz boundary; faces that leave the complex (diagonal) are dropped
    let mut faces: Vec<Vec<Vec<(u32, i8)>>> = vec![Vec::new(); max_dim + 1];
    faces[0] = vec![Vec::new(); cells[0].len()];
    let mut boundaries: Vec<SparseIntMat> = Vec::with_capacity(max_dim + 1);
    boundaries.push(SparseIntMat::zero(0, 0)); // unused slot for d = 0
    for d in 1..=max_dim {
        let mut bd = SparseIntMat::zero(cells[d - 1].len(), cells[d].len());
        let mut face_lists = Vec::with_capacity(cells[d].len());
        for (j, cell) in cells[d].iter().enumerate() {
            let mut list = Vec::new();
            for (face, sign) in product_cell_faces(base, cell) {
                if let Some(&i) = index[d - 1].get(&face) {
                    bd.add_entry(i, j, BigInt::from(sign));
                    list.push((i as u32, sign as i8));
                }
            }
            face_lists.push(list);
        }
        faces[d] = face_lists;
        boundaries.push(bd);
    }

    Ok(ProductComplex {
        m,
        cells,
        index,
        faces,
        boundaries,
    })
}

/// Codimension-one faces of a product cell with Leibniz signs:
/// ∂(σ_1 x ... x σ_m) = Σ_i (-1)^{d_1+...+d_{i-1}} σ_1 x ... ∂σ_i ... x σ_m.
fn product_cell_faces(
    base: &SimplicialComplex,
    cell: &ProductCell,
) -> Vec<(ProductCell, i32)> {
    let mut out = Vec::new();
    let mut prefix_sign = 1;
    for (pos, &(d, idx)) in cell.factors.iter().enumerate() {
        if d > 0 {
            let simplex = &base.simplices(d as usize)[idx as usize];
            for (face, face_sign) in simplex.faces() {
                let fi = base
                    .simplex_index(&face)
                    .expect("face closure guarantees membership");
                let mut factors = cell.factors.clone();
                factors[pos] = ((d - 1), fi as u32);
                out.push((ProductCell { factors }, prefix_sign * face_sign));
            }
        }
        if d % 2 == 1 {
            prefix_sign = -prefix_sign;
        }
    }
    out
}

/// The deleted product K* = K x K minus the simplicial diagonal: ordered
/// pairs of vertex-disjoint simplices, with the free factor-swap involution.
#[derive(Debug, Clone)]
pub struct DeletedProduct {
    complex: ProductComplex,
}

impl DeletedProduct {
    pub fn cells(&self, d: usize) -> &[ProductCell] {
        self.complex.cells(d)
    }

    pub fn cell_count(&self, d: usize) -> usize {
        self.complex.cell_count(d)
    }

    pub fn cell_index(&self, cell: &ProductCell) -> Option<usize> {
        self.complex.cell_index(cell)
    }

    pub fn boundary(&self, d: usize) -> Option<&SparseIntMat> {
        self.complex.boundary(d)
    }

    pub fn faces_of(&self, d: usize, idx: usize) -> &[(u32, i8)] {
        self.complex.faces_of(d, idx)
    }

    pub fn dim(&self) -> Option<usize> {
        self.complex.dim()
    }

    pub fn total_cells(&self) -> usize {
        self.complex.total_cells()
    }

    /// The swap involution on oriented cells: (σ, τ) maps to (τ, σ) with the
    /// Koszul sign (-1)^{dim σ · dim τ}. Returns (image index, sign).
    pub fn swap(&self, d: usize, cell_idx: usize) -> (usize, i32) {
        let cell = &self.complex.cells(d)[cell_idx];
        let (a, b) = (cell.factors[0], cell.factors[1]);
        let swapped = ProductCell {
            factors: vec![b, a],
        };
        let idx = self
            .complex
            .cell_index(&swapped)
            .expect("swap stays in the deleted product");
        let sign = if (a.0 as usize * b.0 as usize) % 2 == 0 {
            1
        } else {
            -1
        };
        (idx, sign)
    }
}

/// Builds the deleted product of a nonempty complex.
pub fn deleted_product(base: &SimplicialComplex) -> Result<DeletedProduct> {
    Ok(DeletedProduct {
        complex: product_complex(base, 2, true)?,
    })
}

/// The full product K x K (no diagonal removed); used to check that the
/// restriction of its boundary to vertex-disjoint pairs matches the deleted
/// product's boundary.
pub fn full_product(base: &SimplicialComplex) -> Result<ProductComplex> {
    product_complex(base, 2, false)
}

/// The simplicial configuration complex C^m(K): ordered m-tuples of pairwise
/// vertex-disjoint simplices, with the free S_m action.
#[derive(Debug, Clone)]
pub struct ConfigurationComplex {
    m: usize,
    complex: ProductComplex,
}

impl ConfigurationComplex {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cells(&self, d: usize) -> &[ProductCell] {
        self.complex.cells(d)
    }

    pub fn cell_count(&self, d: usize) -> usize {
        self.complex.cell_count(d)
    }

    pub fn boundary(&self, d: usize) -> Option<&SparseIntMat> {
        self.complex.boundary(d)
    }

    pub fn dim(&self) -> Option<usize> {
        self.complex.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.total_cells() == 0
    }

    /// Action of a permutation on an oriented cell, with the Koszul sign of
    /// reordering the graded factors. `perm` sends factor position i to
    /// position perm[i]. Returns (image cell index, sign).
    pub fn act(&self, perm: &[usize], d: usize, cell_idx: usize) -> Result<(usize, i32)> {
        if perm.len() != self.m {
            return Err(Error::invalid("permutation length must equal m"));
        }
        let cell = &self.complex.cells(d)[cell_idx];
        let mut placed: Vec<Option<SimplexRef>> = vec![None; self.m];
        for (i, &f) in cell.factors.iter().enumerate() {
            let target = perm[i];
            if target >= self.m || placed[target].is_some() {
                return Err(Error::invalid("not a permutation"));
            }
            placed[target] = Some(f);
        }
        let factors: Vec<SimplexRef> = placed.into_iter().map(|f| f.unwrap()).collect();
        // Koszul sign: bubble the original sequence into the new order,
        // each adjacent swap of factors of degrees a, b contributing (-1)^{ab}
        let mut order: Vec<(usize, usize)> = cell
            .factors
            .iter()
            .enumerate()
            .map(|(i, &(deg, _))| (perm[i], deg as usize))
            .collect();
        let mut sign = 1;
        for i in 0..order.len() {
            for j in (i + 1)..order.len() {
                if order[i].0 > order[j].0 {
                    if order[i].1 % 2 == 1 && order[j].1 % 2 == 1 {
                        sign = -sign;
                    }
                }
            }
        }
        // sort for clarity (sign already counted over inversions)
        order.sort_by_key(|&(p, _)| p);
        let image = ProductCell { factors };
        let idx = self
            .complex
            .cell_index(&image)
            .expect("permutation preserves disjointness");
        Ok((idx, sign))
    }
}

/// Builds C^m(K). When K has too few vertices the result is the empty
/// complex, which is valid.
pub fn configuration_complex(base: &SimplicialComplex, m: usize) -> Result<ConfigurationComplex> {
    if m < 2 {
        return Err(Error::invalid("configuration complex needs m >= 2"));
    }
    Ok(ConfigurationComplex {
        m,
        complex: product_complex(base, m, true)?,
    })
}

/// The Z/2-equivariant cochain complex of a deleted product: one
/// representative per swap orbit, with coboundaries assembled through the
/// Koszul swap signs. For n even this is the ordinary cochain complex of the
/// quotient; for n odd the same signs realize the twisted coefficients.
#[derive(Debug, Clone)]
pub struct EquivariantComplex {
    pub n: usize,
    /// Per dimension: indices (into the deleted product's cells) of the
    /// lexicographically smallest member of each orbit.
    reps: Vec<Vec<usize>>,
    /// Per dimension, per cell: (representative position, sign s) so that an
    /// equivariant cochain satisfies value(cell) = s * value(rep).
    to_rep: Vec<Vec<(usize, i32)>>,
    /// deltas[k]: coboundary C^k -> C^{k+1} on representatives
    /// (rows = (k+1)-reps, cols = k-reps).
    deltas: Vec<SparseIntMat>,
    top_dim: usize,
}

impl EquivariantComplex {
    pub fn rep_count(&self, d: usize) -> usize {
        self.reps.get(d).map(|v| v.len()).unwrap_or(0)
    }

    /// Cell indices of the chosen representatives in dimension d.
    pub fn reps(&self, d: usize) -> &[usize] {
        self.reps.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// (representative position, sign) for a cell of dimension d.
    pub fn rep_of(&self, d: usize, cell_idx: usize) -> (usize, i32) {
        self.to_rep[d][cell_idx]
    }

    /// Coboundary matrix δ_k: C^k -> C^{k+1} on representatives.
    pub fn delta(&self, k: usize) -> Option<&SparseIntMat> {
        self.deltas.get(k)
    }

    pub fn top_dim(&self) -> usize {
        self.top_dim
    }

    /// Restricts a cochain given on all cells of dimension d to orbit
    /// representatives, after checking it is equivariant.
    pub fn restrict_to_reps(&self, d: usize, values: &[BigInt]) -> Result<Vec<BigInt>> {
        let n_cells = self.to_rep[d].len();
        if values.len() != n_cells {
            return Err(Error::invalid("cochain length mismatch"));
        }
        let mut out = vec![BigInt::from(0); self.reps[d].len()];
        for (pos, &cell) in self.reps[d].iter().enumerate() {
            out[pos] = values[cell].clone();
        }
        for cell in 0..n_cells {
            let (pos, sign) = self.to_rep[d][cell];
            let expect = if sign >= 0 {
                out[pos].clone()
            } else {
                -out[pos].clone()
            };
            if values[cell] != expect {
                return Err(Error::invalid(
                    "cochain is not equivariant under the signed swap",
                ));
            }
        }
        Ok(out)
    }
}

/// Builds the equivariant cochain complex of a deleted product arising from
/// an n-complex.
pub fn equivariant_complex(dp: &DeletedProduct, n: usize) -> Result<EquivariantComplex> {
    let top_dim = dp.dim().unwrap_or(0);
    if top_dim != 2 * n && dp.total_cells() > 0 {
        // deleted products of an n-complex have top cells σ^n x τ^n whenever
        // any disjoint top pair exists; tolerate smaller tops (e.g. sparse K)
        if top_dim > 2 * n {
            return Err(Error::invalid(format!(
                "deleted product has dimension {} but n = {}",
                top_dim, n
            )));
        }
    }
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut to_rep: Vec<Vec<(usize, i32)>> = Vec::new();
    for d in 0..=top_dim {
        let count = dp.cell_count(d);
        let mut rep_list = Vec::new();
        let mut map = vec![(usize::MAX, 0i32); count];
        for idx in 0..count {
            let (other, sign) = dp.swap(d, idx);
            if other == idx {
                return Err(Error::Internal(
                    "swap fixed a cell; the action is not free".into(),
                ));
            }
            if idx < other {
                let pos = rep_list.len();
                rep_list.push(idx);
                map[idx] = (pos, 1);
                // value(other) = sign * value(idx): Koszul-invariance
                map[other] = (pos, sign);
            }
        }
        if map.iter().any(|&(p, _)| p == usize::MAX) {
            return Err(Error::Internal("orbit pairing incomplete".into()));
        }
        reps.push(rep_list);
        to_rep.push(map);
    }

    // assemble coboundaries on representatives
    let mut deltas = Vec::new();
    for k in 0..top_dim {
        let rows = reps[k + 1].len();
        let cols = reps[k].len();
        let mut delta = SparseIntMat::zero(rows, cols);
        if let Some(bd) = dp.boundary(k + 1) {
            for (r, &cell) in reps[k + 1].iter().enumerate() {
                // δx(cell) = x(∂cell)
                // boundary matrix column `cell` lists the faces with signs
                for (face_idx, face_sign) in column_entries(bd, cell) {
                    let (pos, rep_sign) = to_rep[k][face_idx];
                    delta.add_entry(r, pos, face_sign * BigInt::from(rep_sign));
                }
            }
        }
        deltas.push(delta);
    }

    Ok(EquivariantComplex {
        n,
        reps,
        to_rep,
        deltas,
        top_dim,
    })
}

fn column_entries(m: &SparseIntMat, col: usize) -> Vec<(usize, BigInt)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        if let Some(v) = m.row(i).get(&(col as u32)) {
            out.push((i, v.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use num_traits::Zero;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn skel2_of_6simplex() -> SimplicialComplex {
        let verts: Vec<String> = (1..=7).map(|i| format!("v{}", i)).collect();
        let mut maximal = Vec::new();
        for i in 0..7 {
            for j in (i + 1)..7 {
                for k in (j + 1)..7 {
                    maximal.push(vec![verts[i].clone(), verts[j].clone(), verts[k].clone()]);
                }
            }
        }
        build_complex("skel62", &maximal).unwrap()
    }

    fn k5() -> SimplicialComplex {
        let verts: Vec<String> = (1..=5).map(|i| format!("v{}", i)).collect();
        let mut maximal = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                maximal.push(vec![verts[i].clone(), verts[j].clone()]);
            }
        }
        build_complex("k5", &maximal).unwrap()
    }

    #[test]
    fn two_disjoint_edges_top_cells() {
        let k = build_complex("2e", &[names(&["a", "b"]), names(&["c", "d"])]).unwrap();
        let dp = deleted_product(&k).unwrap();
        assert_eq!(dp.cell_count(2), 2);
        assert_eq!(dp.dim(), Some(2));
    }

    #[test]
    fn skeleton_deleted_product_counts() {
        let dp = deleted_product(&skel2_of_6simplex()).unwrap();
        assert_eq!(dp.cell_count(4), 140);
    }

    #[test]
    fn k5_disjoint_edge_pairs() {
        let dp = deleted_product(&k5()).unwrap();
        assert_eq!(dp.cell_count(2), 30);
    }

    #[test]
    fn boundary_squared_zero_on_deleted_products() {
        for k in [skel2_of_6simplex(), k5()] {
            let dp = deleted_product(&k).unwrap();
            let top = dp.dim().unwrap();
            for d in 2..=top {
                let b1 = dp.boundary(d - 1);
                let b2 = dp.boundary(d).unwrap();
                if let Some(b1) = b1 {
                    // (∂∂)v = 0 for each basis vector
                    for j in 0..b2.cols() {
                        let mut v = vec![BigInt::zero(); b2.cols()];
                        v[j] = BigInt::from(1);
                        let bv = b2.mul_int_vec(&v);
                        let bbv = b1.mul_int_vec(&bv);
                        assert!(bbv.iter().all(|x| x.is_zero()), "d = {}", d);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_is_free_signed_involution() {
        let dp = deleted_product(&k5()).unwrap();
        for d in 0..=dp.dim().unwrap() {
            for idx in 0..dp.cell_count(d) {
                let (other, s1) = dp.swap(d, idx);
                assert_ne!(other, idx);
                let (back, s2) = dp.swap(d, other);
                assert_eq!(back, idx);
                assert_eq!(s1 * s2, 1);
            }
            // orbit count is half the cell count
            assert_eq!(dp.cell_count(d) % 2, 0);
        }
    }

    #[test]
    fn equivariant_orbit_counts() {
        let dp = deleted_product(&skel2_of_6simplex()).unwrap();
        let eq = equivariant_complex(&dp, 2).unwrap();
        assert_eq!(eq.rep_count(4), 70);
        let dp5 = deleted_product(&k5()).unwrap();
        let eq5 = equivariant_complex(&dp5, 1).unwrap();
        assert_eq!(eq5.rep_count(2), 15);
    }

    #[test]
    fn equivariant_delta_squared_zero() {
        for (k, n) in [(skel2_of_6simplex(), 2usize), (k5(), 1)] {
            let dp = deleted_product(&k).unwrap();
            let eq = equivariant_complex(&dp, n).unwrap();
            for k_deg in 0..eq.top_dim().saturating_sub(1) {
                let d0 = eq.delta(k_deg).unwrap();
                let d1 = eq.delta(k_deg + 1).unwrap();
                for j in 0..d0.cols() {
                    let mut v = vec![BigInt::zero(); d0.cols()];
                    v[j] = BigInt::from(1);
                    let dv = d0.mul_int_vec(&v);
                    let ddv = d1.mul_int_vec(&dv);
                    assert!(ddv.iter().all(|x| x.is_zero()), "degree {}", k_deg);
                }
            }
        }
    }

    #[test]
    fn restriction_of_full_product_boundary_matches() {
        // boundaries of deleted-product cells agree with full-product
        // boundaries once diagonal faces are dropped
        let k = build_complex(
            "tri_pair",
            &[names(&["a", "b", "c"]), names(&["d", "e", "f"])],
        )
        .unwrap();
        let dp = deleted_product(&k).unwrap();
        let full = full_product(&k).unwrap();
        for d in 1..=dp.dim().unwrap() {
            let bd_del = dp.boundary(d).unwrap();
            let bd_full = full.boundary(d).unwrap();
            for (j, cell) in dp.cells(d).iter().enumerate() {
                let jf = full.cell_index(cell).unwrap();
                for (i, face) in dp.cells(d - 1).iter().enumerate() {
                    let if_ = full.cell_index(face).unwrap();
                    let a = bd_del.row(i).get(&(j as u32)).cloned().unwrap_or_default();
                    let b = bd_full
                        .row(if_)
                        .get(&(jf as u32))
                        .cloned()
                        .unwrap_or_default();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn configuration_complex_matches_deleted_product() {
        let k = skel2_of_6simplex();
        let dp = deleted_product(&k).unwrap();
        let c2 = configuration_complex(&k, 2).unwrap();
        for d in 0..=4 {
            assert_eq!(c2.cell_count(d), dp.cell_count(d), "dim {}", d);
        }
    }

    #[test]
    fn configuration_triple_of_triangle_boundary() {
        let k = build_complex(
            "circle",
            &[names(&["a", "b"]), names(&["b", "c"]), names(&["a", "c"])],
        )
        .unwrap();
        let c3 = configuration_complex(&k, 3).unwrap();
        assert_eq!(c3.cell_count(0), 6);
        assert_eq!(c3.dim(), Some(0));
    }

    #[test]
    fn configuration_triple_skeleton_has_no_top_cells() {
        let c3 = configuration_complex(&skel2_of_6simplex(), 3).unwrap();
        assert_eq!(c3.cell_count(6), 0);
    }

    #[test]
    fn configuration_empty_when_too_few_vertices() {
        let k = build_complex("pt2", &[names(&["a", "b"])]).unwrap();
        let c3 = configuration_complex(&k, 3).unwrap();
        assert!(c3.is_empty());
    }

    #[test]
    fn symmetric_action_is_free_with_koszul_signs() {
        let k = skel2_of_6simplex();
        let c3 = configuration_complex(&k, 3).unwrap();
        let swap01 = [1usize, 0, 2];
        let cyc = [1usize, 2, 0];
        for d in 0..=c3.dim().unwrap_or(0) {
            for idx in 0..c3.cell_count(d).min(200) {
                let (i1, s1) = c3.act(&swap01, d, idx).unwrap();
                assert_ne!(i1, idx, "free action");
                let (i2, s2) = c3.act(&swap01, d, i1).unwrap();
                assert_eq!((i2, s1 * s2), (idx, 1), "involution");
                // 3-cycle has order 3
                let (c1, t1) = c3.act(&cyc, d, idx).unwrap();
                let (c2, t2) = c3.act(&cyc, d, c1).unwrap();
                let (c3i, t3) = c3.act(&cyc, d, c2).unwrap();
                assert_eq!((c3i, t1 * t2 * t3), (idx, 1));
            }
        }
    }

    #[test]
    fn deleted_product_of_single_triangle_is_circle() {
        // K = one filled triangle: K* is the hexagonal circle; its quotient
        // by the swap is again a circle, so the equivariant Betti numbers
        // over Q are (1, 1)
        let k = build_complex("tri", &[names(&["a", "b", "c"])]).unwrap();
        let dp = deleted_product(&k).unwrap();
        assert_eq!(dp.cell_count(0), 6);
        assert_eq!(dp.cell_count(1), 6);
        assert_eq!(dp.dim(), Some(1));
        let eq = equivariant_complex(&dp, 1).unwrap();
        assert_eq!(eq.rep_count(0), 3);
        assert_eq!(eq.rep_count(1), 3);
        // chi of the equivariant complex is half the chi of K*
        let chi_dp = dp.cell_count(0) as i64 - dp.cell_count(1) as i64;
        let chi_eq = eq.rep_count(0) as i64 - eq.rep_count(1) as i64;
        assert_eq!(chi_eq * 2, chi_dp);
        // Betti over Q of the representative complex: b0 = b1 = 1
        let delta0 = eq.delta(0).unwrap().to_dense();
        let rank = crate::linalg::rank_rational(&delta0);
        assert_eq!(eq.rep_count(0) - rank, 1); // H^0
        assert_eq!(eq.rep_count(1) - rank, 1); // H^1 (top)
    }
}
