//! Graded maps between free modules and their degree-l strands.
//!
//! A `PolyMap` is a matrix of normal-form polynomial entries between graded
//! free modules; `strand_*` assembles the exact linear map it induces on a
//! single internal degree, over the monomial bases of the graded pieces.

use crate::error::{Error, Result};
use crate::linalg::{QMat, SparseMat};
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rat;
use crate::ring::HypersurfaceRing;
use num_traits::One;
use std::collections::HashMap;
use std::sync::Arc;

/// Basis bookkeeping for the degree-l piece of a graded free module: one
/// monomial block per generator, concatenated in generator order.
#[derive(Clone, Debug)]
pub struct FreeStrand {
    pub degrees: Vec<i64>,
    pub blocks: Vec<Arc<Vec<Monomial>>>,
    pub offsets: Vec<usize>,
    pub dim: usize,
}

impl FreeStrand {
    pub fn new(ring: &HypersurfaceRing, degrees: &[i64], l: i64) -> Self {
        let mut blocks = Vec::with_capacity(degrees.len());
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut dim = 0usize;
        for &d in degrees {
            let b = ring.degree_basis(l - d);
            offsets.push(dim);
            dim += b.len();
            blocks.push(b);
        }
        FreeStrand {
            degrees: degrees.to_vec(),
            blocks,
            offsets,
            dim,
        }
    }

    /// (generator index, monomial) of a flat coordinate.
    pub fn coordinate(&self, idx: usize) -> (usize, &Monomial) {
        let gen = match self.offsets.binary_search(&idx) {
            Ok(g) => g,
            Err(g) => g - 1,
        };
        (gen, &self.blocks[gen][idx - self.offsets[gen]])
    }

    fn index_maps(&self) -> Vec<HashMap<Monomial, u32>> {
        self.blocks
            .iter()
            .zip(&self.offsets)
            .map(|(b, &off)| {
                b.iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), (off + i) as u32))
                    .collect()
            })
            .collect()
    }
}

/// A graded map between free modules: entry (i, j) is homogeneous of degree
/// col_deg[j] - row_deg[i] (or zero), kept in normal form modulo f.
#[derive(Clone, Debug)]
pub struct PolyMap {
    ring: Arc<HypersurfaceRing>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<Polynomial>, // row-major
}

impl PartialEq for PolyMap {
    fn eq(&self, other: &Self) -> bool {
        self.row_degrees == other.row_degrees
            && self.col_degrees == other.col_degrees
            && self.entries == other.entries
    }
}

impl PolyMap {
    pub fn new(
        ring: Arc<HypersurfaceRing>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        if entries.len() != row_degrees.len() * col_degrees.len() {
            return Err(Error::Dimension(format!(
                "entry table has {} entries for a {}x{} map",
                entries.len(),
                row_degrees.len(),
                col_degrees.len()
            )));
        }
        let entries = entries
            .iter()
            .map(|p| ring.normal_form(p))
            .collect::<Result<Vec<_>>>()?;
        let cols = col_degrees.len();
        for (i, &rd) in row_degrees.iter().enumerate() {
            for (j, &cd) in col_degrees.iter().enumerate() {
                let e = &entries[i * cols + j];
                if e.is_zero() {
                    continue;
                }
                let deg = e.weighted_degree()?;
                if deg != cd - rd {
                    return Err(Error::InvalidPresentation(format!(
                        "entry ({i},{j}) has degree {deg}, expected {}",
                        cd - rd
                    )));
                }
            }
        }
        Ok(PolyMap {
            ring,
            row_degrees,
            col_degrees,
            entries,
        })
    }

    pub fn ring(&self) -> &Arc<HypersurfaceRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.col_degrees.len() + j]
    }

    pub fn is_zero_map(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn twist(&self, s: i64) -> PolyMap {
        PolyMap {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.iter().map(|d| d + s).collect(),
            col_degrees: self.col_degrees.iter().map(|d| d + s).collect(),
            entries: self.entries.clone(),
        }
    }

    /// Entrywise equality after shifting the other map's degrees by s.
    pub fn eq_twisted(&self, other: &PolyMap, s: i64) -> bool {
        self.row_degrees
            .iter()
            .zip(other.row_degrees.iter())
            .all(|(a, b)| *a == b + s)
            && self
                .col_degrees
                .iter()
                .zip(other.col_degrees.iter())
                .all(|(a, b)| *a == b + s)
            && self.row_degrees.len() == other.row_degrees.len()
            && self.col_degrees.len() == other.col_degrees.len()
            && self.entries == other.entries
    }

    /// Matrix product self . other with entries reduced to normal form.
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap> {
        let raw = self.compose_ambient(other)?;
        PolyMap::new(
            self.ring.clone(),
            self.row_degrees.clone(),
            other.col_degrees.clone(),
            raw,
        )
    }

    /// Matrix product over the ambient polynomial ring (no reduction mod f);
    /// used to inspect matrix-factorization identities A.B = f.I.
    pub fn compose_ambient(&self, other: &PolyMap) -> Result<Vec<Polynomial>> {
        if self.col_degrees != other.row_degrees {
            return Err(Error::Dimension(
                "inner degrees do not match in composition".into(),
            ));
        }
        let mut out = Vec::with_capacity(self.nrows() * other.ncols());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                let mut acc = Polynomial::zero(self.ring.grading().clone());
                for k in 0..self.ncols() {
                    let a = self.entry(i, k);
                    let b = other.entry(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                out.push(acc);
            }
        }
        Ok(out)
    }

    /// The induced map d (x) id on F (x) G for a free G with the given
    /// generator degrees; pair (gen of F, gen of G) indexed F-major.
    pub fn tensor_with_free(&self, free_degrees: &[i64]) -> PolyMap {
        let zero = Polynomial::zero(self.ring.grading().clone());
        let tensor_degs = |ds: &[i64]| -> Vec<i64> {
            ds.iter()
                .flat_map(|d| free_degrees.iter().map(move |g| d + g))
                .collect()
        };
        let k = free_degrees.len();
        let rows = self.nrows() * k;
        let cols = self.ncols() * k;
        let mut entries = vec![zero; rows * cols];
        for h in 0..self.nrows() {
            for g in 0..self.ncols() {
                let e = self.entry(h, g);
                if e.is_zero() {
                    continue;
                }
                for b in 0..k {
                    entries[(h * k + b) * cols + (g * k + b)] = e.clone();
                }
            }
        }
        PolyMap {
            ring: self.ring.clone(),
            row_degrees: tensor_degs(&self.row_degrees),
            col_degrees: tensor_degs(&self.col_degrees),
            entries,
        }
    }

    /// The induced map id (x) d on F (x) source/target for a free F with
    /// the given generator degrees; pairs indexed F-major as above.
    pub fn free_tensor_with(&self, free_degrees: &[i64]) -> PolyMap {
        let zero = Polynomial::zero(self.ring.grading().clone());
        let k_rows = self.nrows();
        let k_cols = self.ncols();
        let rows = free_degrees.len() * k_rows;
        let cols = free_degrees.len() * k_cols;
        let mut entries = vec![zero; rows * cols];
        let mut row_degrees = Vec::with_capacity(rows);
        let mut col_degrees = Vec::with_capacity(cols);
        for &fd in free_degrees {
            for &rd in &self.row_degrees {
                row_degrees.push(fd + rd);
            }
        }
        for &fd in free_degrees {
            for &cd in &self.col_degrees {
                col_degrees.push(fd + cd);
            }
        }
        for (fi, _) in free_degrees.iter().enumerate() {
            for b in 0..k_rows {
                for c in 0..k_cols {
                    let e = self.entry(b, c);
                    if !e.is_zero() {
                        entries[(fi * k_rows + b) * cols + (fi * k_cols + c)] = e.clone();
                    }
                }
            }
        }
        PolyMap {
            ring: self.ring.clone(),
            row_degrees,
            col_degrees,
            entries,
        }
    }

    pub fn row_strand(&self, l: i64) -> FreeStrand {
        FreeStrand::new(&self.ring, &self.row_degrees, l)
    }

    pub fn col_strand(&self, l: i64) -> FreeStrand {
        FreeStrand::new(&self.ring, &self.col_degrees, l)
    }

    /// Sparse integer strand of the map in internal degree l (columns are
    /// scaled to integers; suitable for rank computations only).
    pub fn strand_sparse(&self, l: i64) -> SparseMat {
        let rows = self.row_strand(l);
        let row_index = rows.index_maps();
        let mut mat = SparseMat::new(rows.dim);
        let one = Rat::one();
        for (j, &cd) in self.col_degrees.iter().enumerate() {
            for m in self.ring.degree_basis(l - cd).iter() {
                let mut col: Vec<(u32, Rat)> = Vec::new();
                for i in 0..self.nrows() {
                    let e = self.entry(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let p = self
                        .ring
                        .normal_form(&e.mul_term(m, &one))
                        .expect("compatible gradings");
                    for (mm, c) in p.terms() {
                        col.push((row_index[i][mm], c.clone()));
                    }
                }
                mat.push_col_rat(&col);
            }
        }
        mat
    }

    /// Dense rational strand with unscaled columns, for kernel extraction;
    /// the column coordinates match `col_strand(l)`.
    pub fn strand_dense(&self, l: i64) -> QMat {
        let rows = self.row_strand(l);
        let cols = self.col_strand(l);
        let row_index = rows.index_maps();
        let mut mat = QMat::zero(rows.dim, cols.dim);
        let one = Rat::one();
        let mut cidx = 0usize;
        for (j, &cd) in self.col_degrees.iter().enumerate() {
            for m in self.ring.degree_basis(l - cd).iter() {
                for i in 0..self.nrows() {
                    let e = self.entry(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let p = self
                        .ring
                        .normal_form(&e.mul_term(m, &one))
                        .expect("compatible gradings");
                    for (mm, c) in p.terms() {
                        mat[(row_index[i][mm] as usize, cidx)] = c.clone();
                    }
                }
                cidx += 1;
            }
        }
        debug_assert_eq!(cidx, cols.dim);
        mat
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::ring::HypersurfaceRing;

    fn quadric() -> Arc<HypersurfaceRing> {
        HypersurfaceRing::parse(&["x", "y", "u", "v"], vec![1, 1, 1, 1], "x*u + y*v").unwrap()
    }

    fn pmap(ring: &Arc<HypersurfaceRing>, rows: Vec<i64>, cols: Vec<i64>, es: &[&str]) -> PolyMap {
        let entries = es
            .iter()
            .map(|s| parse_polynomial(s, ring.grading(), ring.variables()).unwrap())
            .collect();
        PolyMap::new(ring.clone(), rows, cols, entries).unwrap()
    }

    #[test]
    fn strand_rank_of_maximal_ideal_presentation() {
        let q = quadric();
        let m = pmap(&q, vec![0], vec![1, 1], &["x", "y"]);
        // degree 1: columns are x, y inside R_1 (dim 4): rank 2
        assert_eq!(m.strand_sparse(1).rank(), 2);
        // degree 2: multiples of x and y span dim R_2 - dim Q[u,v]_2 = 9 - 3
        assert_eq!(m.strand_sparse(2).rank(), 6);
        assert_eq!(m.strand_dense(2).rank(), 6);
    }

    #[test]
    fn composition_and_twist() {
        let q = quadric();
        let d1 = pmap(&q, vec![0], vec![1, 1], &["x", "y"]);
        let d2 = pmap(&q, vec![1, 1], vec![2, 2], &["y", "u", "-x", "v"]);
        let comp = d1.compose(&d2).unwrap();
        // x*y - y*x = 0 and x*u + y*v = f = 0 mod f
        assert!(comp.is_zero_map());

        let shifted = d2.twist(3);
        assert!(shifted.eq_twisted(&d2, 3));
        assert_eq!(shifted.row_degrees(), &[4, 4]);
    }

    #[test]
    fn tensoring_with_free_modules() {
        let q = quadric();
        let d1 = pmap(&q, vec![0], vec![1, 1], &["x", "y"]);
        let t = d1.tensor_with_free(&[0, 2]);
        assert_eq!(t.nrows(), 2);
        assert_eq!(t.ncols(), 4);
        assert_eq!(t.row_degrees(), &[0, 2]);
        assert_eq!(t.col_degrees(), &[1, 3, 1, 3]);
        assert_eq!(t.entry(0, 0).to_string_with(&["x".into(), "y".into(), "u".into(), "v".into()]), "x");
        assert!(t.entry(1, 0).is_zero());

        let s = d1.free_tensor_with(&[0, 1]);
        assert_eq!(s.nrows(), 2);
        assert_eq!(s.ncols(), 4);
        assert_eq!(s.row_degrees(), &[0, 1]);
        assert_eq!(s.col_degrees(), &[1, 1, 2, 2]);
    }

    #[test]
    fn ambient_composition_sees_the_equation() {
        let q = quadric();
        let d1 = pmap(&q, vec![0], vec![1, 1], &["x", "y"]);
        let d2 = pmap(&q, vec![1, 1], vec![2, 2], &["y", "u", "-x", "v"]);
        let raw = d1.compose_ambient(&d2).unwrap();
        assert!(raw[0].is_zero()); // x*y - y*x
        assert_eq!(raw[1], q.equation().clone()); // x*u + y*v
    }
}
