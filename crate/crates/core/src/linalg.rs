//! Exact linear algebra over the rationals.
//!
//! Dense matrices carry the graded pieces of maps between free modules.
//! Rank and determinants run fraction-free (Bareiss) on denominator-cleared
//! integer copies; kernels and solving run on a rational reduced echelon
//! form with deterministic first-nonzero pivoting, so bases are reproducible
//! run to run.
//!
//! Large graded strands are extremely sparse (a handful of nonzeros per
//! column), so a sparse integer column-echelon elimination with content
//! stripping is provided for rank computations at scale.

use crate::rational::{denominator_lcm, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        QMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rational::rat(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
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
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact rank via fraction-free Gaussian elimination on an integer copy.
    pub fn rank(&self) -> usize {
        let mut m = self.to_int_rows();
        bareiss_rank(&mut m, self.cols)
    }

    /// Determinant of a square matrix, exact.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return Rat::one();
        }
        // Clear each row to integers, remembering the scaling.
        let mut scale = Rat::one();
        let mut m: Vec<Vec<Int>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row: Vec<&Rat> = (0..self.cols).map(|j| &self[(i, j)]).collect();
            let l = denominator_lcm(row.iter().copied());
            scale *= Rat::new(Int::one(), l.clone());
            m.push(
                row.iter()
                    .map(|x| (*x * Rat::from_integer(l.clone())).to_integer())
                    .collect(),
            );
        }
        let det = bareiss_det(&mut m);
        scale * Rat::from_integer(det)
    }

    fn to_int_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows)
            .map(|i| {
                let row: Vec<&Rat> = (0..self.cols).map(|j| &self[(i, j)]).collect();
                let l = denominator_lcm(row.iter().copied());
                row.iter()
                    .map(|x| (*x * Rat::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    /// Pivots are chosen as the first nonzero entry in column order.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = {
                let piv = m[(row, col)].clone();
                Rat::one() / piv
            };
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let v = &m[(r, j)] - &factor * &m[(row, j)];
                        m[(r, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel in reduced echelon form: one vector per
    /// free column, with a 1 in that coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = Some(prow);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (pcol, prow) in pivot_set.iter().enumerate() {
                if let Some(prow) = prow {
                    vec[pcol] = -r[(*prow, free)].clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Tests v in the column space; on success returns witness x with
    /// self * x = v (free coordinates set to zero).
    pub fn in_column_space(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut aug = QMat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = v[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r[(prow, self.cols)].clone();
        }
        Some(x)
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

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Bareiss fraction-free elimination; returns the rank. `m` is consumed.
fn bareiss_rank(m: &mut [Vec<Int>], cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = Int::one();
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if m[r][col].is_zero() && m[rank][col].is_one() {
                // fast path: nothing to eliminate, row already reduced here
            }
            for c in col + 1..cols {
                let v = (&m[r][c] * &m[rank][col] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = Int::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn bareiss_det(m: &mut Vec<Vec<Int>>) -> Int {
    let n = m.len();
    let mut prev = Int::one();
    let mut sign = 1i32;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let v = (&m[r][c] * &m[k][k] - &m[r][k] * &m[k][c]) / &prev;
                m[r][c] = v;
            }
            m[r][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

// ---------------------------------------------------------------------------
// Sparse exact elimination
// ---------------------------------------------------------------------------

/// Column-major sparse integer matrix. Each column is sorted by row index.
#[derive(Clone, Debug)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<Vec<(u32, Int)>>,
}

impl SparseMat {
    pub fn new(rows: usize) -> Self {
        SparseMat {
            rows,
            cols: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Pushes a column given as (row, rational) entries; denominators are
    /// cleared and the content stripped, neither changes the column space.
    pub fn push_col_rat(&mut self, entries: &[(u32, Rat)]) {
        let l = denominator_lcm(entries.iter().map(|(_, c)| c));
        let mut col: Vec<(u32, Int)> = entries
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| {
                debug_assert!((*r as usize) < self.rows);
                ((*r), (c * Rat::from_integer(l.clone())).to_integer())
            })
            .collect();
        col.sort_by_key(|(r, _)| *r);
        strip_content(&mut col);
        self.cols.push(col);
    }

    pub fn push_col_int(&mut self, mut col: Vec<(u32, Int)>) {
        col.retain(|(_, c)| !c.is_zero());
        col.sort_by_key(|(r, _)| *r);
        strip_content(&mut col);
        self.cols.push(col);
    }

    /// Exact rank over Q by left-looking column echelon elimination with
    /// content stripping after every combination step.
    pub fn rank(&self) -> usize {
        let mut elim = SparseElim::new();
        for col in &self.cols {
            elim.absorb(col.clone());
        }
        elim.rank()
    }

    /// Rank of the horizontal concatenation [self | other].
    pub fn rank_with(&self, other: &SparseMat) -> usize {
        assert_eq!(self.rows, other.rows, "row mismatch in rank_with");
        let mut elim = SparseElim::new();
        for col in self.cols.iter().chain(other.cols.iter()) {
            elim.absorb(col.clone());
        }
        elim.rank()
    }

    pub fn to_dense(&self) -> QMat {
        let mut m = QMat::zero(self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (r, c) in col {
                m[(*r as usize, j)] = Rat::from_integer(c.clone());
            }
        }
        m
    }
}

fn strip_content(col: &mut Vec<(u32, Int)>) {
    if col.is_empty() {
        return;
    }
    let mut g = Int::zero();
    for (_, c) in col.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() && !g.is_zero() {
        for (_, c) in col.iter_mut() {
            *c = &*c / &g;
        }
    }
    // Normalize the sign of the leading entry for determinism.
    if col[0].1.is_negative() {
        for (_, c) in col.iter_mut() {
            *c = -c.clone();
        }
    }
}

/// Incremental sparse echelon: pivot columns indexed by their leading row.
pub struct SparseElim {
    pivots: std::collections::HashMap<u32, Vec<(u32, Int)>>,
}

impl SparseElim {
    pub fn new() -> Self {
        SparseElim {
            pivots: std::collections::HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces the column against the current pivots; if a nonzero residue
    /// remains it becomes a new pivot and the rank grows by one. Returns
    /// true when the column was independent of the current span.
    pub fn absorb(&mut self, mut col: Vec<(u32, Int)>) -> bool {
        loop {
            let Some(&(lead, _)) = col.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    col = combine(&col, pivot);
                }
                None => {
                    strip_content(&mut col);
                    self.pivots.insert(lead, col);
                    return true;
                }
            }
        }
    }
}

impl Default for SparseElim {
    fn default() -> Self {
        Self::new()
    }
}

/// col * pivot_lead - pivot * col_lead, which cancels the shared leading
/// row; the result is content-stripped.
fn combine(col: &[(u32, Int)], pivot: &[(u32, Int)]) -> Vec<(u32, Int)> {
    debug_assert_eq!(col[0].0, pivot[0].0);
    let a = &pivot[0].1; // multiplies col
    let b = &col[0].1; // multiplies pivot
    let mut out = Vec::with_capacity(col.len() + pivot.len());
    let (mut i, mut j) = (1usize, 1usize);
    while i < col.len() && j < pivot.len() {
        match col[i].0.cmp(&pivot[j].0) {
            std::cmp::Ordering::Less => {
                out.push((col[i].0, &col[i].1 * a));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((pivot[j].0, -(&pivot[j].1 * b)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &col[i].1 * a - &pivot[j].1 * b;
                if !v.is_zero() {
                    out.push((col[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for k in i..col.len() {
        out.push((col[k].0, &col[k].1 * a));
    }
    for k in j..pivot.len() {
        out.push((pivot[k].0, -(&pivot[k].1 * b)));
    }
    let mut out = out;
    strip_content(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(QMat::from_i64_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(QMat::zero(3, 5).rank(), 0);
        assert_eq!(
            QMat::from_i64_rows(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]).rank(),
            2
        );
    }

    #[test]
    fn kernel_examples() {
        let k = QMat::from_i64_rows(&[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(-2), rat(1)]]);

        assert!(QMat::identity(4).kernel_basis().is_empty());

        let k = QMat::from_i64_rows(&[&[1, 1, 1]]).kernel_basis();
        assert_eq!(
            k,
            vec![
                vec![rat(-1), rat(1), rat(0)],
                vec![rat(-1), rat(0), rat(1)]
            ]
        );
    }

    #[test]
    fn column_space_examples() {
        let m = QMat::from_i64_rows(&[&[1], &[2]]);
        assert_eq!(m.in_column_space(&[rat(2), rat(4)]), Some(vec![rat(2)]));
        assert_eq!(m.in_column_space(&[rat(1), rat(0)]), None);

        let m = QMat::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            m.in_column_space(&[rat(1), rat(2), rat(3)]),
            Some(vec![rat(1), rat(2)])
        );
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = QMat::from_i64_rows(&[&[2, 3, 5], &[7, 11, 13], &[9, 14, 18]]);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(m.rank() + m.kernel_basis().len(), m.ncols());
    }

    #[test]
    fn determinants() {
        let m = QMat::from_i64_rows(&[&[2, -1], &[-1, 2]]);
        assert_eq!(m.det(), rat(3));
        let m = QMat::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.det(), rat(0));
        let m = QMat::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), rat(-1));
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let mut s = SparseMat::new(3);
        s.push_col_rat(&[(0, rat(1)), (2, rat(1))]);
        s.push_col_rat(&[(1, rat(1)), (2, rat(1))]);
        s.push_col_rat(&[(0, rat(1)), (1, rat(1)), (2, rat(2))]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.to_dense().transpose().rank(), 2);
    }

    #[test]
    fn sparse_rank_with_concatenation() {
        let mut a = SparseMat::new(2);
        a.push_col_rat(&[(0, rat(1))]);
        let mut b = SparseMat::new(2);
        b.push_col_rat(&[(0, rat(3))]);
        b.push_col_rat(&[(1, rat(1))]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.rank_with(&b), 2);
    }
}
