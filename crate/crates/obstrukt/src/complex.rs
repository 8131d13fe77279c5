//! Abstract simplicial complexes with a global vertex order, oriented chains,
//! boundary operators, and the disk-attachment / wedge constructions.
//!
//! Vertices are strings; simplices are stored with sorted vertex index lists,
//! and all incidence signs derive from that sorted order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Index of a vertex in the complex's sorted vertex table.
pub type VertexId = u32;

/// A simplex, identified by its strictly increasing list of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from vertex ids; sorts them and rejects duplicates.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("simplex must have at least one vertex"));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate vertex inside one simplex"));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The codimension-one faces, each with the incidence sign (-1)^i of the
    /// omitted vertex position.
    pub fn faces(&self) -> Vec<(Simplex, i32)> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|i| {
                let mut v = self.vertices.clone();
                v.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                (Simplex { vertices: v }, sign)
            })
            .collect()
    }

    /// True when the two simplices have no vertex in common.
    pub fn disjoint_from(&self, other: &Simplex) -> bool {
        // both sorted: linear merge scan
        let (a, b) = (&self.vertices, &other.vertices);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn shares_vertex_with(&self, other: &Simplex) -> bool {
        !self.disjoint_from(other)
    }
}

/// A finite abstract simplicial complex, closed under faces, with vertices in
/// a fixed sorted order.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    name: String,
    /// Sorted vertex names; `VertexId` indexes into this table.
    vertex_names: Vec<String>,
    /// Per-dimension sorted simplex lists.
    simplices: Vec<Vec<Simplex>>,
    /// Per-dimension lookup from simplex to its index.
    index: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v as usize]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| i as VertexId)
    }

    /// Dimension of the complex (nonempty by construction).
    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn simplex_count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn simplex_index(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplex_index(s).is_some()
    }

    /// f-vector: simplex counts per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|v| v.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Maximal simplices (not a proper face of any other simplex), as vertex
    /// name lists. Inverse of `build_complex` up to ordering.
    pub fn maximal_simplices(&self) -> Vec<Vec<String>> {
        let mut non_maximal: Vec<BTreeSet<Simplex>> =
            vec![BTreeSet::new(); self.simplices.len()];
        for d in 1..self.simplices.len() {
            for s in &self.simplices[d] {
                for (f, _) in s.faces() {
                    non_maximal[d - 1].insert(f);
                }
            }
        }
        let mut out = Vec::new();
        for d in 0..self.simplices.len() {
            for s in &self.simplices[d] {
                if !non_maximal[d].contains(s) {
                    out.push(
                        s.vertices()
                            .iter()
                            .map(|&v| self.vertex_name(v).to_string())
                            .collect(),
                    );
                }
            }
        }
        out
    }

    /// Checks that every face of every simplex is present.
    pub fn verify_face_closure(&self) -> Result<()> {
        for d in 1..self.simplices.len() {
            for s in &self.simplices[d] {
                for (f, _) in s.faces() {
                    if !self.contains(&f) {
                        return Err(Error::Internal(format!(
                            "face closure violated in {} at dim {}",
                            self.name, d
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (f-vector {:?})", self.name, self.f_vector())
    }
}

/// Builds the face closure of the given maximal simplices (vertex name lists).
/// The vertex order of the complex is the sorted order of all names.
pub fn build_complex(name: &str, maximal: &[Vec<String>]) -> Result<SimplicialComplex> {
    if maximal.is_empty() {
        return Err(Error::invalid("complex must have at least one simplex"));
    }
    let mut names: BTreeSet<String> = BTreeSet::new();
    for simp in maximal {
        if simp.is_empty() {
            return Err(Error::invalid("empty vertex list"));
        }
        let distinct: BTreeSet<&String> = simp.iter().collect();
        if distinct.len() != simp.len() {
            return Err(Error::invalid(format!(
                "duplicate vertex inside one simplex: {:?}",
                simp
            )));
        }
        names.extend(simp.iter().cloned());
    }
    let vertex_names: Vec<String> = names.into_iter().collect();
    let lookup: HashMap<&str, VertexId> = vertex_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i as VertexId))
        .collect();

    let max_dim = maximal.iter().map(|s| s.len() - 1).max().unwrap();
    let mut by_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); max_dim + 1];
    // face closure by downward propagation
    for simp in maximal {
        let ids: Vec<VertexId> = simp.iter().map(|n| lookup[n.as_str()]).collect();
        let s = Simplex::new(ids)?;
        by_dim[s.dim()].insert(s);
    }
    for d in (1..=max_dim).rev() {
        let faces: Vec<Simplex> = by_dim[d]
            .iter()
            .flat_map(|s| s.faces().into_iter().map(|(f, _)| f))
            .collect();
        for f in faces {
            by_dim[d - 1].insert(f);
        }
    }

    let simplices: Vec<Vec<Simplex>> = by_dim
        .into_iter()
        .map(|set| set.into_iter().collect::<Vec<_>>())
        .collect();
    let index = simplices
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect::<HashMap<_, _>>()
        })
        .collect();

    Ok(SimplicialComplex {
        name: name.to_string(),
        vertex_names,
        simplices,
        index,
    })
}

/// The boundary matrix ∂_d: rows are (d-1)-simplices, columns are d-simplices,
/// entries are the incidence signs (-1)^i for omitting the i-th vertex.
pub fn boundary_matrix(complex: &SimplicialComplex, d: usize) -> Result<IntMatrix> {
    if d == 0 || d > complex.dim() {
        return Err(Error::invalid(format!(
            "boundary dimension {} out of range 1..={}",
            d,
            complex.dim()
        )));
    }
    let rows = complex.simplex_count(d - 1);
    let cols = complex.simplex_count(d);
    let mut m = IntMatrix::zero(rows, cols);
    for (j, s) in complex.simplices(d).iter().enumerate() {
        for (face, sign) in s.faces() {
            let i = complex
                .simplex_index(&face)
                .ok_or_else(|| Error::Internal("face missing from complex".into()))?;
            m.set(i, j, BigInt::from(sign));
        }
    }
    Ok(m)
}

/// A chain: finite formal combination of d-simplices with rational
/// coefficients (integral chains are the denominator-one case).
#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    pub dim: usize,
    pub coeffs: BTreeMap<usize, BigRational>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, simplex_index: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(simplex_index)
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&simplex_index);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, simplex_index: usize) -> BigRational {
        self.coeffs
            .get(&simplex_index)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Dense coefficient vector over all d-simplices of the complex.
    pub fn to_vec(&self, complex: &SimplicialComplex) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); complex.simplex_count(self.dim)];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    /// Boundary of the chain in the given complex.
    pub fn boundary(&self, complex: &SimplicialComplex) -> Chain {
        let mut out = Chain::zero(self.dim.saturating_sub(1));
        if self.dim == 0 {
            return out;
        }
        for (&i, c) in &self.coeffs {
            let s = &complex.simplices(self.dim)[i];
            for (face, sign) in s.faces() {
                let fi = complex.simplex_index(&face).expect("face in complex");
                out.add_term(fi, c * BigRational::from(BigInt::from(sign)));
            }
        }
        out
    }
}

/// A closed edge path v_0, ..., v_L with v_L = v_0, consecutive vertices
/// distinct, each consecutive pair spanning an edge of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLoop {
    vertices: Vec<String>,
}

impl EdgeLoop {
    /// `vertices` is the closed itinerary including the repeated basepoint at
    /// the end.
    pub fn new(vertices: Vec<String>) -> Result<Self> {
        if vertices.len() < 2 || vertices.first() != vertices.last() {
            return Err(Error::invalid("edge loop must close up (v_L = v_0)"));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("edge loop has equal consecutive vertices"));
        }
        Ok(EdgeLoop { vertices })
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Checks the loop is valid in the complex: every consecutive pair spans
    /// an edge.
    pub fn validate_in(&self, complex: &SimplicialComplex) -> Result<()> {
        for w in self.vertices.windows(2) {
            let a = complex
                .vertex_id(&w[0])
                .ok_or_else(|| Error::invalid(format!("loop vertex {} not in complex", w[0])))?;
            let b = complex
                .vertex_id(&w[1])
                .ok_or_else(|| Error::invalid(format!("loop vertex {} not in complex", w[1])))?;
            let edge = Simplex::new(vec![a, b])?;
            if !complex.contains(&edge) {
                return Err(Error::invalid(format!(
                    "loop step {}-{} is not an edge of {}",
                    w[0],
                    w[1],
                    complex.name()
                )));
            }
        }
        Ok(())
    }

    /// The loop as a 1-chain (signed edge traversal counts) in the complex.
    pub fn as_chain(&self, complex: &SimplicialComplex) -> Chain {
        let mut chain = Chain::zero(1);
        for w in self.vertices.windows(2) {
            let a = complex.vertex_id(&w[0]).expect("validated");
            let b = complex.vertex_id(&w[1]).expect("validated");
            let edge = Simplex::new(vec![a.min(b), a.max(b)]).expect("distinct");
            let idx = complex.simplex_index(&edge).expect("validated");
            // traversal agrees with sorted orientation iff a < b
            let sign = if a < b { 1 } else { -1 };
            let mut c = Chain::zero(1);
            c.add_term(idx, BigRational::from(BigInt::from(sign)));
            chain.add_term(idx, c.coeff(idx));
        }
        chain
    }
}

/// Result of attaching a triangulated disk to a complex along an edge loop.
pub struct DiskAttachment {
    pub complex: SimplicialComplex,
    /// Fundamental 2-chain of the disk: its boundary is the loop's 1-chain.
    pub disk_chain: Chain,
    /// Names of the fresh ring vertices r_0..r_{L-1}.
    pub ring_vertices: Vec<String>,
    /// Name of the fresh apex vertex.
    pub apex: String,
}

/// Attaches a triangulated disk to `complex` along `loop_`: L fresh ring
/// vertices plus one apex, with triangles (v_i, v_{i+1}, r_i),
/// (v_{i+1}, r_i, r_{i+1}), (r_i, r_{i+1}, apex) per step. Each new triangle
/// contains a fresh ring vertex, so the result stays simplicial even when the
/// loop repeats vertices or edges.
pub fn attach_disk(complex: &SimplicialComplex, loop_: &EdgeLoop) -> Result<SimplicialComplex> {
    Ok(attach_disk_detailed(complex, loop_)?.complex)
}

/// As `attach_disk`, also returning the disk's fundamental 2-chain and the
/// fresh vertex names.
pub fn attach_disk_detailed(
    complex: &SimplicialComplex,
    loop_: &EdgeLoop,
) -> Result<DiskAttachment> {
    if loop_.len() < 3 {
        return Err(Error::invalid("attaching loop must traverse at least 3 edges"));
    }
    loop_.validate_in(complex)?;

    // fresh, collision-free name prefix for the new vertices
    let prefix = {
        let mut j = 0usize;
        loop {
            let p = format!("disk{}_", j);
            if !complex.vertex_names().iter().any(|n| n.starts_with(&p)) {
                break p;
            }
            j += 1;
        }
    };
    let l = loop_.len();
    let ring: Vec<String> = (0..l).map(|i| format!("{}r{:03}", prefix, i)).collect();
    let apex = format!("{}apex", prefix);

    let mut maximal = complex.maximal_simplices();
    let vs = loop_.vertices();
    // oriented triangle tuples; sign vs. sorted order gives the disk chain
    let mut oriented: Vec<[String; 3]> = Vec::with_capacity(3 * l);
    for i in 0..l {
        let (vi, vi1) = (vs[i].clone(), vs[i + 1].clone());
        let (ri, ri1) = (ring[i].clone(), ring[(i + 1) % l].clone());
        oriented.push([vi.clone(), vi1.clone(), ri.clone()]);
        oriented.push([vi1.clone(), ri1.clone(), ri.clone()]);
        oriented.push([ri.clone(), ri1.clone(), apex.clone()]);
    }
    for t in &oriented {
        maximal.push(t.to_vec());
    }
    let new_complex = build_complex(complex.name(), &maximal)?;

    let mut disk_chain = Chain::zero(2);
    for t in &oriented {
        let ids: Vec<VertexId> = t
            .iter()
            .map(|n| new_complex.vertex_id(n).expect("fresh vertex present"))
            .collect();
        let sign = permutation_sign(&ids);
        let simplex = Simplex::new(ids)?;
        let idx = new_complex
            .simplex_index(&simplex)
            .ok_or_else(|| Error::Internal("disk triangle missing".into()))?;
        disk_chain.add_term(idx, BigRational::from(BigInt::from(sign)));
    }

    Ok(DiskAttachment {
        complex: new_complex,
        disk_chain,
        ring_vertices: ring,
        apex,
    })
}

/// Sign of the permutation sorting the given distinct ids ascending.
fn permutation_sign(ids: &[VertexId]) -> i32 {
    let mut sign = 1;
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            if ids[i] > ids[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Wedge: disjoint union of `k1` and `k2` with `v1` and `v2` identified. The
/// identified vertex keeps `v1`'s name; any other `k2` vertex whose name
/// clashes with a `k1` vertex gets primes appended until fresh.
pub fn wedge(
    k1: &SimplicialComplex,
    v1: &str,
    k2: &SimplicialComplex,
    v2: &str,
) -> Result<SimplicialComplex> {
    if k1.vertex_id(v1).is_none() {
        return Err(Error::invalid(format!("vertex {} not in {}", v1, k1.name())));
    }
    if k2.vertex_id(v2).is_none() {
        return Err(Error::invalid(format!("vertex {} not in {}", v2, k2.name())));
    }
    let k1_names: BTreeSet<&str> = k1.vertex_names().iter().map(|s| s.as_str()).collect();
    let mut rename: HashMap<String, String> = HashMap::new();
    for name in k2.vertex_names() {
        if name == v2 {
            rename.insert(name.clone(), v1.to_string());
            continue;
        }
        let mut candidate = name.clone();
        while k1_names.contains(candidate.as_str()) || candidate == v1 {
            candidate.push('\'');
        }
        rename.insert(name.clone(), candidate);
    }
    let mut maximal = k1.maximal_simplices();
    for simp in k2.maximal_simplices() {
        maximal.push(simp.iter().map(|n| rename[n].clone()).collect());
    }
    let name = format!("{}_wedge_{}", k1.name(), k2.name());
    build_complex(&name, &maximal)
}

/// Stellar subdivision of one 2-simplex: replaces the triangle by the cone
/// over its boundary from a fresh center vertex.
pub fn stellar_subdivide_triangle(
    complex: &SimplicialComplex,
    triangle: &[String; 3],
) -> Result<SimplicialComplex> {
    let ids: Vec<VertexId> = triangle
        .iter()
        .map(|n| {
            complex
                .vertex_id(n)
                .ok_or_else(|| Error::invalid(format!("vertex {} not in complex", n)))
        })
        .collect::<Result<_>>()?;
    let simplex = Simplex::new(ids)?;
    if complex.simplex_index(&simplex).is_none() {
        return Err(Error::invalid("triangle not in complex"));
    }
    let mut center = format!("c_{}_{}_{}", triangle[0], triangle[1], triangle[2]);
    while complex.vertex_id(&center).is_some() {
        center.push('\'');
    }
    let mut maximal: Vec<Vec<String>> = Vec::new();
    for simp in complex.maximal_simplices() {
        let mut set: Vec<&String> = simp.iter().collect();
        set.sort();
        let mut tri: Vec<&String> = triangle.iter().collect();
        tri.sort();
        if set == tri {
            continue;
        }
        maximal.push(simp);
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            maximal.push(vec![
                triangle[i].clone(),
                triangle[j].clone(),
                center.clone(),
            ]);
        }
    }
    build_complex(&format!("{}_subdiv", complex.name()), &maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn triangle() -> SimplicialComplex {
        build_complex("tri", &[names(&["a", "b", "c"])]).unwrap()
    }

    #[test]
    fn face_closure_of_triangle() {
        let k = triangle();
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        k.verify_face_closure().unwrap();
    }

    #[test]
    fn single_point() {
        let k = build_complex("pt", &[names(&["a"])]).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.f_vector(), vec![1]);
    }

    #[test]
    fn two_skeleton_of_six_simplex_counts() {
        let mut maximal = Vec::new();
        let verts: Vec<String> = (1..=7).map(|i| format!("v{}", i)).collect();
        for i in 0..7 {
            for j in (i + 1)..7 {
                for k in (j + 1)..7 {
                    maximal.push(vec![verts[i].clone(), verts[j].clone(), verts[k].clone()]);
                }
            }
        }
        let k = build_complex("skel", &maximal).unwrap();
        assert_eq!(k.f_vector(), vec![7, 21, 35]);
        k.verify_face_closure().unwrap();
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let err = build_complex("bad", &[names(&["a", "a", "b"])]);
        assert!(err.is_err());
    }

    #[test]
    fn triangle_boundary_column() {
        let k = triangle();
        let d2 = boundary_matrix(&k, 2).unwrap();
        // edges sorted: ab, ac, bc
        assert_eq!(d2.get(0, 0), &BigInt::from(1));
        assert_eq!(d2.get(1, 0), &BigInt::from(-1));
        assert_eq!(d2.get(2, 0), &BigInt::from(1));
    }

    #[test]
    fn boundary_squared_is_zero() {
        let mut maximal = Vec::new();
        let verts: Vec<String> = (1..=7).map(|i| format!("v{}", i)).collect();
        for i in 0..7 {
            for j in (i + 1)..7 {
                for k in (j + 1)..7 {
                    maximal.push(vec![verts[i].clone(), verts[j].clone(), verts[k].clone()]);
                }
            }
        }
        let k = build_complex("skel", &maximal).unwrap();
        let d1 = boundary_matrix(&k, 1).unwrap();
        let d2 = boundary_matrix(&k, 2).unwrap();
        assert!(d1.mul(&d2).is_zero());
    }

    #[test]
    fn hollow_tetrahedron_boundary_rank() {
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
        let d2 = boundary_matrix(&k, 2).unwrap();
        assert_eq!(linalg::rank_rational(&d2), 3);
    }

    #[test]
    fn boundary_dim_out_of_range() {
        let k = triangle();
        assert!(boundary_matrix(&k, 0).is_err());
        assert!(boundary_matrix(&k, 3).is_err());
    }

    #[test]
    fn attach_disk_to_triangle_boundary() {
        let k = build_complex(
            "circle",
            &[names(&["a", "b"]), names(&["b", "c"]), names(&["a", "c"])],
        )
        .unwrap();
        let loop_ = EdgeLoop::new(names(&["a", "b", "c", "a"])).unwrap();
        let att = attach_disk_detailed(&k, &loop_).unwrap();
        att.complex.verify_face_closure().unwrap();
        // disk chain bounds the loop chain
        let bd = att.disk_chain.boundary(&att.complex);
        let loop_chain = loop_.as_chain(&att.complex);
        assert_eq!(bd, loop_chain);
        // new cells: L+1 vertices, 4L edges, 3L triangles; chi goes up by 1
        assert_eq!(att.complex.f_vector(), vec![3 + 4, 3 + 12, 9]);
        assert_eq!(att.complex.euler_characteristic(), k.euler_characteristic() + 1);
    }

    #[test]
    fn attach_disk_repeated_loop_stays_simplicial() {
        let k = build_complex(
            "circle",
            &[names(&["a", "b"]), names(&["b", "c"]), names(&["a", "c"])],
        )
        .unwrap();
        // the 3-cycle traversed twice: repeats every edge
        let loop_ = EdgeLoop::new(names(&["a", "b", "c", "a", "b", "c", "a"])).unwrap();
        let att = attach_disk_detailed(&k, &loop_).unwrap();
        att.complex.verify_face_closure().unwrap();
        let l = 6;
        assert_eq!(
            att.complex.f_vector(),
            vec![3 + l + 1, 3 + 4 * l, 3 * l]
        );
        assert_eq!(att.complex.euler_characteristic(), 1 + 1);
        // boundary of the disk chain is the doubled loop chain
        let bd = att.disk_chain.boundary(&att.complex);
        let loop_chain = loop_.as_chain(&att.complex);
        assert_eq!(bd, loop_chain);
    }

    #[test]
    fn attach_disk_rejects_stuttering_loop() {
        assert!(EdgeLoop::new(names(&["a", "a", "b", "a"])).is_err());
    }

    #[test]
    fn wedge_of_two_circles_has_betti_one_two() {
        let c1 = build_complex(
            "c1",
            &[names(&["a", "b"]), names(&["b", "w"]), names(&["a", "w"])],
        )
        .unwrap();
        let c2 = build_complex(
            "c2",
            &[names(&["p", "q"]), names(&["q", "u"]), names(&["p", "u"])],
        )
        .unwrap();
        let w = wedge(&c1, "w", &c2, "u").unwrap();
        assert_eq!(w.vertex_count(), 5);
        let h1 = linalg::homology(&w, 1, linalg::Coefficients::Rational).unwrap();
        assert_eq!(h1.betti, 2);
    }

    #[test]
    fn wedge_renames_clashing_vertices() {
        let c1 = triangle();
        let c2 = triangle();
        let w = wedge(&c1, "a", &c2, "a").unwrap();
        assert_eq!(w.vertex_count(), 5);
        assert!(w.vertex_id("b'").is_some());
        assert!(w.vertex_id("c'").is_some());
    }

    #[test]
    fn wedge_missing_vertex_is_invalid() {
        let c1 = triangle();
        let c2 = triangle();
        assert!(wedge(&c1, "zz", &c2, "a").is_err());
    }

    #[test]
    fn loop_chain_of_commutator_cancels() {
        // commutator-style itinerary traverses each edge once forward, once
        // backward, so the 1-chain vanishes
        let k = build_complex(
            "circle",
            &[names(&["a", "b"]), names(&["b", "c"]), names(&["a", "c"])],
        )
        .unwrap();
        let loop_ = EdgeLoop::new(names(&["a", "b", "c", "a", "c", "b", "a"])).unwrap();
        loop_.validate_in(&k).unwrap();
        let chain = loop_.as_chain(&k);
        assert!(chain.is_zero());
    }

    #[test]
    fn stellar_subdivision_keeps_closure() {
        let k = triangle();
        let s = stellar_subdivide_triangle(
            &k,
            &["a".to_string(), "b".to_string(), "c".to_string()],
        )
        .unwrap();
        s.verify_face_closure().unwrap();
        assert_eq!(s.f_vector(), vec![4, 6, 3]);
        assert_eq!(s.euler_characteristic(), k.euler_characteristic());
    }
}
