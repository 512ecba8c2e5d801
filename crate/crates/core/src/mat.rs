//! Dense exact matrices over GF(2^k), plus subspace arithmetic.
//!
//! Entries are stored row-major as `u32` field-element masks. Linear maps
//! act on column vectors: an `r x c` matrix maps `K^c -> K^r`. Subspaces of
//! `K^n` are represented by matrices whose rows form a basis; the canonical
//! form (as produced by [`row_space`] and the other subspace helpers) is the
//! reduced row echelon basis, which makes membership tests a pivot sweep.

use crate::error::{Error, Result};
use crate::field::{FieldEmbedding, FieldSpec};
use rand::Rng;

/// Dense matrix with exact field entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows.min(40) {
            let cells: Vec<String> = (0..self.cols)
                .map(|j| format!("{:x}", self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        if self.rows > 40 {
            writeln!(f, "  ...")?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diag(field: FieldSpec, entries: &[u32]) -> Self {
        let mut m = Mat::zero(field, entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Build from explicit rows; all rows must share a length.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<u32>>) -> Self {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            debug_assert!(r.iter().all(|&v| field.contains(v)));
            data.extend_from_slice(r);
        }
        Mat {
            field,
            rows: rows.len(),
            cols: ncols,
            data,
        }
    }

    /// A single row vector as a 1 x n matrix.
    pub fn row_vec(field: FieldSpec, v: &[u32]) -> Self {
        Mat::from_rows(field, vec![v.to_vec()])
    }

    /// A single column vector as an n x 1 matrix.
    pub fn col_vec(field: FieldSpec, v: &[u32]) -> Self {
        let mut m = Mat::zero(field, v.len(), 1);
        for (i, &x) in v.iter().enumerate() {
            m.set(i, 0, x);
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = Mat::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Uniformly random entries from a seeded generator.
    pub fn random(field: FieldSpec, rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        let q = field.order() as u32;
        Mat::from_fn(field, rows, cols, |_, _| rng.gen_range(0..q))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!(self.field.contains(v));
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &Mat) {
        assert_eq!(self.field, other.field, "mixed fields in matrix arithmetic");
    }

    /// Entrywise sum (characteristic 2: also the difference).
    pub fn add(&self, other: &Mat) -> Mat {
        self.check_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a ^ b)
            .collect();
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Alias of [`Mat::add`]; subtraction coincides with addition here.
    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(other)
    }

    pub fn scale(&self, c: u32) -> Mat {
        let data = self.data.iter().map(|&a| self.field.mul(a, c)).collect();
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix product.
    pub fn mul(&self, other: &Mat) -> Mat {
        self.check_field(other);
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b != 0 {
                        let cur = out.at(i, j);
                        out.set(i, j, cur ^ self.field.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let mut out = vec![0u32; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u32;
            for (j, &x) in v.iter().enumerate() {
                if x != 0 {
                    acc ^= self.field.mul(self.at(i, j), x);
                }
            }
            out[i] = acc;
        }
        out
    }

    /// `self^e` for square matrices.
    pub fn pow(&self, e: usize) -> Mat {
        assert!(self.is_square());
        let mut r = Mat::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        self.check_field(other);
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let mut out = Mat::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.at(i, j));
            }
        }
        out
    }

    /// Vertical concatenation `[self ; other]`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        self.check_field(other);
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn vstack_all(field: FieldSpec, cols: usize, parts: &[Mat]) -> Mat {
        let mut out = Mat::zero(field, 0, cols);
        for p in parts {
            out = out.vstack(p);
        }
        out
    }

    pub fn hstack_all(field: FieldSpec, rows: usize, parts: &[Mat]) -> Mat {
        let mut out = Mat::zero(field, rows, 0);
        for p in parts {
            out = out.hstack(p);
        }
        out
    }

    /// Block diagonal sum of square or rectangular blocks.
    pub fn block_diag(field: FieldSpec, parts: &[Mat]) -> Mat {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            assert_eq!(p.field, field);
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out.set(r0 + i, c0 + j, p.at(i, j));
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    /// Kronecker (tensor) product: `(self ⊗ other)[(i*p+r),(j*q+s)] =
    /// self[i,j] * other[r,s]`.
    pub fn kron(&self, other: &Mat) -> Mat {
        self.check_field(other);
        let (p, q) = (other.rows, other.cols);
        let mut out = Mat::zero(self.field, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a == 0 {
                    continue;
                }
                for r in 0..p {
                    for s in 0..q {
                        let b = other.at(r, s);
                        if b != 0 {
                            out.set(i * p + r, j * q + s, self.field.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zero(self.field, idx.len(), self.cols);
        for (k, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(k, j, self.at(i, j));
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zero(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.set(i, k, self.at(i, j));
            }
        }
        out
    }

    pub fn slice_rows(&self, range: std::ops::Range<usize>) -> Mat {
        let idx: Vec<usize> = range.collect();
        self.select_rows(&idx)
    }

    pub fn slice_cols(&self, range: std::ops::Range<usize>) -> Mat {
        let idx: Vec<usize> = range.collect();
        self.select_cols(&idx)
    }

    /// Row-major flattening (used to express matrix equations as vector
    /// equations; see [`Mat::kron`] and `vec_row(A X B) = (A ⊗ Bᵀ) vec_row(X)`).
    pub fn vec_row(&self) -> Vec<u32> {
        self.data.clone()
    }

    /// Inverse of [`Mat::vec_row`].
    pub fn unvec_row(field: FieldSpec, rows: usize, cols: usize, v: &[u32]) -> Mat {
        assert_eq!(v.len(), rows * cols);
        Mat {
            field,
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    /// Apply a field embedding to every entry.
    pub fn base_change(&self, emb: &FieldEmbedding) -> Mat {
        assert_eq!(self.field, emb.src(), "embedding source mismatch");
        Mat {
            field: emb.dst(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| emb.apply(a)).collect(),
        }
    }

    /// Apply the embedding's retraction to every entry (a source-linear
    /// projection; not a ring map).
    pub fn retract_entries(&self, emb: &FieldEmbedding) -> Mat {
        assert_eq!(self.field, emb.dst(), "embedding target mismatch");
        Mat {
            field: emb.src(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| emb.retract(a)).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: u32) {
        for j in 0..self.cols {
            let v = self.at(i, j);
            self.set(i, j, self.field.mul(v, c));
        }
    }

    /// row_i += c * row_src
    fn axpy_row(&mut self, i: usize, src: usize, c: u32) {
        for j in 0..self.cols {
            let s = self.field.mul(self.at(src, j), c);
            let v = self.at(i, j);
            self.set(i, j, v ^ s);
        }
    }

    /// Reduced row echelon form with rank and pivot columns.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut pivot_row = None;
            for i in r..m.rows {
                if m.at(i, c) != 0 {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(r, pr);
            let inv = m.field.inv(m.at(r, c)).unwrap();
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.at(i, c);
                    if f != 0 {
                        m.axpy_row(i, r, f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            mat: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : self · v = 0}`, one vector per
    /// row. The rows carry a unit entry at each free column, so they are
    /// independent but not in reduced echelon order; pass through
    /// [`row_space`] when a canonical subspace is needed.
    pub fn kernel(&self) -> Mat {
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut out = Mat::zero(self.field, free.len(), self.cols);
        for (k, &j) in free.iter().enumerate() {
            out.set(k, j, 1);
            for (i, &p) in e.pivots.iter().enumerate() {
                // char 2: the negation of a coefficient is itself
                out.set(k, p, e.mat.at(i, j));
            }
        }
        out
    }

    /// Basis of the left null space `{x : x · self = 0}` (rows).
    pub fn left_kernel(&self) -> Mat {
        self.transpose().kernel()
    }

    /// Solve `self · X = rhs` for `X`; `None` when inconsistent. Free
    /// variables are set to zero, so the result is one particular solution;
    /// combine with [`Mat::kernel`] for the full affine set.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        self.check_field(rhs);
        assert_eq!(self.rows, rhs.rows, "rhs row count mismatch");
        let aug = self.hstack(rhs).rref();
        let n = self.cols;
        if aug.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Mat::zero(self.field, n, rhs.cols);
        for (i, &p) in aug.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, aug.mat.at(i, n + c));
            }
        }
        Some(x)
    }

    /// Solve `v` as a column: `self · x = v`.
    pub fn solve_vec(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.solve(&Mat::col_vec(self.field, v)).map(|m| m.col(0))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let e = self.rref();
        if e.rank < self.rows {
            return None;
        }
        self.solve(&Mat::identity(self.field, self.rows))
    }

    /// Column space as a row-basis subspace of `K^rows`.
    pub fn image(&self) -> Mat {
        row_space(&self.transpose())
    }

    /// Shape/field compatibility check for parsers and verifiers.
    pub fn expect_shape(&self, rows: usize, cols: usize) -> Result<()> {
        if self.rows != rows || self.cols != cols {
            return Err(Error::ShapeMismatch {
                op: "expect_shape",
                details: format!(
                    "expected {rows}x{cols}, got {}x{}",
                    self.rows, self.cols
                ),
            });
        }
        Ok(())
    }
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Echelon {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// Residual of `v` after reduction by the echelon rows; zero iff `v`
    /// lies in the row space.
    pub fn reduce_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.mat.cols());
        let field = self.mat.field();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                for j in 0..w.len() {
                    w[j] ^= field.mul(self.mat.at(i, j), c);
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[u32]) -> bool {
        self.reduce_vec(v).iter().all(|&x| x == 0)
    }

    /// The nonzero rows as a canonical subspace basis.
    pub fn basis(&self) -> Mat {
        self.mat.slice_rows(0..self.rank)
    }
}

/// Canonical (reduced-echelon) basis of the row space.
pub fn row_space(m: &Mat) -> Mat {
    m.rref().basis()
}

/// Sum of two subspaces given by row bases.
pub fn space_sum(a: &Mat, b: &Mat) -> Mat {
    row_space(&a.vstack(b))
}

/// Intersection of two subspaces given by row bases.
pub fn space_intersect(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.field(), b.field());
    assert_eq!(a.cols(), b.cols(), "ambient dimension mismatch");
    if a.rows() == 0 || b.rows() == 0 {
        return Mat::zero(a.field(), 0, a.cols());
    }
    // rows (u | w) with u·A = w·B sweep out exactly the intersection
    let stacked = a.vstack(b);
    let lk = stacked.left_kernel();
    let u_part = lk.slice_cols(0..a.rows());
    row_space(&u_part.mul(a))
}

/// Membership of a vector in a row-basis subspace (no canonical-form
/// assumption on `space`).
pub fn space_contains_vec(space: &Mat, v: &[u32]) -> bool {
    space.rref().contains_vec(v)
}

/// Containment `sub ⊆ space` of subspaces given by row bases.
pub fn space_contains(space: &Mat, sub: &Mat) -> bool {
    let e = space.rref();
    (0..sub.rows()).all(|i| e.contains_vec(sub.row(i)))
}

pub fn space_eq(a: &Mat, b: &Mat) -> bool {
    row_space(a) == row_space(b)
}

/// Basis of the annihilator `{f : f·z = 0 for all z in the row space}`.
pub fn annihilator(space: &Mat) -> Mat {
    space.kernel()
}

/// `{v : map·v ∈ space}` for a row-basis `space ⊆ K^rows(map)`.
pub fn preimage(map: &Mat, space: &Mat) -> Mat {
    assert_eq!(map.field(), space.field());
    assert_eq!(space.cols(), map.rows(), "space must live in the codomain");
    let ann = annihilator(space);
    row_space(&ann.mul(map).kernel())
}

/// Standard basis vectors at the non-pivot coordinates of `space`: a
/// coordinate complement with `space ⊕ complement = K^n`.
pub fn coordinate_complement(space: &Mat) -> Mat {
    let e = space.rref();
    let mut is_pivot = vec![false; space.cols()];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..space.cols()).filter(|&j| !is_pivot[j]).collect();
    let mut out = Mat::zero(space.field(), free.len(), space.cols());
    for (k, &j) in free.iter().enumerate() {
        out.set(k, j, 1);
    }
    out
}
