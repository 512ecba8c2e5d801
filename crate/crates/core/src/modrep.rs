//! Finite-dimensional modules over the quaternion algebra and their maps.
//!
//! A module is a pair of square matrices (X, Y) acting on column vectors
//! and satisfying the defining relations of the algebra. This module
//! provides validation, the radical and socle series, homomorphism spaces,
//! splitting off free summands, embeddings into free modules (which are
//! also the injective ones, the algebra being self-injective), base change
//! along field embeddings, isomorphism search, and the text formats for
//! modules and maps.

use crate::dade::{self, DIM, WORD_LEN, W_XYXY};
use crate::error::{Error, Result};
use crate::field::{FieldEmbedding, FieldSpec};
use crate::mat::{
    coordinate_complement, preimage, row_space, space_intersect, space_sum, Mat,
};
use crate::textio::{self, LineScanner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A finite-dimensional left module: the two generator actions.
#[derive(Clone, PartialEq, Eq)]
pub struct QMod {
    field: FieldSpec,
    dim: usize,
    x: Mat,
    y: Mat,
}

impl std::fmt::Debug for QMod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QMod(dim {}, field 2^{})", self.dim, self.field.degree())
    }
}

impl QMod {
    /// Build and validate a module from its two action matrices.
    pub fn new(x: Mat, y: Mat) -> Result<Self> {
        let m = QMod::new_unchecked(x, y)?;
        m.validate()?;
        Ok(m)
    }

    /// Build with shape/field checks only (no relation checking).
    pub fn new_unchecked(x: Mat, y: Mat) -> Result<Self> {
        x.field().expect_same(&y.field(), "module actions")?;
        let d = x.rows();
        x.expect_shape(d, d)?;
        y.expect_shape(d, d)?;
        Ok(QMod {
            field: x.field(),
            dim: d,
            x,
            y,
        })
    }

    /// The one-dimensional module with both generators acting as zero.
    pub fn trivial(field: FieldSpec) -> Self {
        QMod {
            field,
            dim: 1,
            x: Mat::zero(field, 1, 1),
            y: Mat::zero(field, 1, 1),
        }
    }

    /// The zero module.
    pub fn zero_module(field: FieldSpec) -> Self {
        QMod {
            field,
            dim: 0,
            x: Mat::zero(field, 0, 0),
            y: Mat::zero(field, 0, 0),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn x(&self) -> &Mat {
        &self.x
    }

    pub fn y(&self) -> &Mat {
        &self.y
    }

    /// Check the defining relations: `X² = YXY`, `Y² = XYX`,
    /// `XY² = Y²X = X²Y = YX² = 0` (these present the algebra exactly, so
    /// every longer identity follows).
    pub fn validate(&self) -> Result<()> {
        let x = &self.x;
        let y = &self.y;
        let x2 = x.mul(x);
        let y2 = y.mul(y);
        let checks: [(&str, bool); 6] = [
            ("X² = YXY", x2 == y.mul(x).mul(y)),
            ("Y² = XYX", y2 == x.mul(y).mul(x)),
            ("XY² = 0", x.mul(&y2).is_zero()),
            ("Y²X = 0", y2.mul(x).is_zero()),
            ("X²Y = 0", x2.mul(y).is_zero()),
            ("YX² = 0", y.mul(&x2).is_zero()),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(Error::InvalidModule(format!("relation {name} violated")));
            }
        }
        Ok(())
    }

    /// Full validation: the defining relations plus an explicit check that
    /// every five-letter word acts as zero (a consequence of the relations,
    /// verified independently here).
    pub fn validate_full(&self) -> Result<()> {
        self.validate()?;
        for bits in 0u32..32 {
            let mut acc = Mat::identity(self.field, self.dim);
            for i in 0..5 {
                acc = if (bits >> i) & 1 == 0 {
                    acc.mul(&self.x)
                } else {
                    acc.mul(&self.y)
                };
            }
            if !acc.is_zero() {
                let word: String = (0..5)
                    .map(|i| if (bits >> i) & 1 == 0 { 'x' } else { 'y' })
                    .collect();
                return Err(Error::InvalidModule(format!(
                    "five-letter word {word} acts nonzero"
                )));
            }
        }
        Ok(())
    }

    /// Action matrix of a basis word of the algebra.
    pub fn word_matrix(&self, w: usize) -> Mat {
        dade::word_action(&self.x, &self.y, w)
    }

    /// Action matrices of all eight basis words.
    pub fn word_matrices(&self) -> Vec<Mat> {
        (0..DIM).map(|w| self.word_matrix(w)).collect()
    }

    /// Row basis of the radical: image(X) + image(Y).
    pub fn rad(&self) -> Mat {
        space_sum(&self.x.image(), &self.y.image())
    }

    /// Row basis of the n-th radical power (n = 0 gives the whole space).
    pub fn rad_n(&self, n: usize) -> Mat {
        let mut layer = Mat::identity(self.field, self.dim);
        for _ in 0..n {
            layer = self.apply_radical(&layer);
        }
        layer
    }

    /// x·S + y·S for a row-basis subspace S.
    fn apply_radical(&self, s: &Mat) -> Mat {
        let xs = self.x.mul(&s.transpose()).transpose();
        let ys = self.y.mul(&s.transpose()).transpose();
        space_sum(&row_space(&xs), &row_space(&ys))
    }

    /// Row basis of the socle: ker(X) ∩ ker(Y).
    pub fn soc(&self) -> Mat {
        space_intersect(&row_space(&self.x.kernel()), &row_space(&self.y.kernel()))
    }

    /// Row basis of the n-th socle: everything killed by n radical layers.
    pub fn soc_n(&self, n: usize) -> Mat {
        let mut s = Mat::zero(self.field, 0, self.dim);
        for _ in 0..n {
            let px = preimage(&self.x, &s);
            let py = preimage(&self.y, &s);
            s = space_intersect(&px, &py);
        }
        s
    }

    /// Dimensions of rad⁰ ⊇ rad¹ ⊇ … ⊇ rad⁵ (six entries).
    pub fn radical_dims(&self) -> Vec<usize> {
        (0..=5).map(|n| self.rad_n(n).rows()).collect()
    }

    /// Dimension of the top M / rad(M): the minimal number of generators.
    pub fn top_dim(&self) -> usize {
        self.dim - self.rad().rows()
    }

    /// A module is projective-free exactly when the socle word acts as zero.
    pub fn is_projective_free(&self) -> bool {
        self.word_matrix(W_XYXY).is_zero()
    }

    /// Number of free direct summands: the rank of the socle word's action.
    pub fn free_rank(&self) -> usize {
        self.word_matrix(W_XYXY).rank()
    }

    pub fn direct_sum(&self, other: &QMod) -> QMod {
        assert_eq!(self.field, other.field, "mixed fields in direct sum");
        QMod {
            field: self.field,
            dim: self.dim + other.dim,
            x: Mat::block_diag(self.field, &[self.x.clone(), other.x.clone()]),
            y: Mat::block_diag(self.field, &[self.y.clone(), other.y.clone()]),
        }
    }

    /// Extend scalars along a field embedding.
    pub fn base_change(&self, emb: &FieldEmbedding) -> QMod {
        QMod {
            field: emb.dst(),
            dim: self.dim,
            x: self.x.base_change(emb),
            y: self.y.base_change(emb),
        }
    }

    /// Smallest action-stable subspace containing the given row vectors.
    pub fn action_closure(&self, seeds: &Mat) -> Mat {
        let mut s = row_space(seeds);
        loop {
            let next = space_sum(&s, &self.apply_radical(&s));
            if next.rows() == s.rows() {
                return s;
            }
            s = next;
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("qmod dim={}\n", self.dim);
        out.push_str(&textio::write_matrix(&self.x));
        out.push_str(&textio::write_matrix(&self.y));
        out
    }

    /// Canonical digest of the serialized module.
    pub fn digest(&self) -> String {
        textio::digest_hex(&self.to_text())
    }
}

/// The free module on `s` generators, realized as the tensor product of
/// the algebra with an s-dimensional space: actions `X_R ⊗ Id`, `Y_R ⊗ Id`.
/// Coordinates are word-major: index `w·s + t` holds word `w`, tensor
/// coordinate `t`, so the radical-power layers are contiguous coordinate
/// blocks.
pub fn free_module(field: FieldSpec, s: usize) -> QMod {
    let id = Mat::identity(field, s);
    let x = dade::regular_x(field).kron(&id);
    let y = dade::regular_y(field).kron(&id);
    QMod::new_unchecked(x, y).expect("square by construction")
}

/// Coordinate index of `word ⊗ unit_t` in `free_module(_, s)`.
pub fn tensor_index(word: usize, t: usize, s: usize) -> usize {
    word * s + t
}

/// Row basis (unit vectors) of the coordinate subspace of
/// `free_module(_, s)` spanned by words of length ≥ `min_len`.
pub fn radical_layer_of_free(field: FieldSpec, s: usize, min_len: usize) -> Mat {
    let idx: Vec<usize> = (0..DIM)
        .filter(|&w| WORD_LEN[w] >= min_len)
        .flat_map(|w| (0..s).map(move |t| tensor_index(w, t, s)))
        .collect();
    let mut m = Mat::zero(field, idx.len(), DIM * s);
    for (r, &j) in idx.iter().enumerate() {
        m.set(r, j, 1);
    }
    m
}

/// A homomorphism of modules, stored with its endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct ModMap {
    source: QMod,
    target: QMod,
    f: Mat,
}

impl std::fmt::Debug for ModMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModMap({} -> {}, rank {})",
            self.source.dim,
            self.target.dim,
            self.f.rank()
        )
    }
}

impl ModMap {
    pub fn new(source: QMod, target: QMod, f: Mat) -> Result<Self> {
        source.field.expect_same(&target.field, "map endpoints")?;
        f.expect_shape(target.dim, source.dim)?;
        if f.mul(&source.x) != target.x.mul(&f) {
            return Err(Error::NotAHomomorphism(
                "matrix does not intertwine the x-actions".into(),
            ));
        }
        if f.mul(&source.y) != target.y.mul(&f) {
            return Err(Error::NotAHomomorphism(
                "matrix does not intertwine the y-actions".into(),
            ));
        }
        Ok(ModMap { source, target, f })
    }

    pub fn zero(source: QMod, target: QMod) -> Self {
        let f = Mat::zero(source.field, target.dim, source.dim);
        ModMap { source, target, f }
    }

    pub fn identity(m: &QMod) -> Self {
        ModMap {
            source: m.clone(),
            target: m.clone(),
            f: Mat::identity(m.field, m.dim),
        }
    }

    pub fn source(&self) -> &QMod {
        &self.source
    }

    pub fn target(&self) -> &QMod {
        &self.target
    }

    pub fn mat(&self) -> &Mat {
        &self.f
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &ModMap) -> Result<ModMap> {
        if self.source != other.target {
            return Err(Error::NotComposable(
                "source of the outer map differs from target of the inner map".into(),
            ));
        }
        Ok(ModMap {
            source: other.source.clone(),
            target: self.target.clone(),
            f: self.f.mul(&other.f),
        })
    }

    pub fn add(&self, other: &ModMap) -> ModMap {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            f: self.f.add(&other.f),
        }
    }

    pub fn scale(&self, c: u32) -> ModMap {
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            f: self.f.scale(c),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.f.rank() == self.source.dim
    }

    pub fn is_surjective(&self) -> bool {
        self.f.rank() == self.target.dim
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim == self.target.dim && self.f.rank() == self.source.dim
    }

    pub fn inverse(&self) -> Option<ModMap> {
        let fi = self.f.inverse()?;
        Some(ModMap {
            source: self.target.clone(),
            target: self.source.clone(),
            f: fi,
        })
    }

    /// Row basis of the kernel (an action-stable subspace of the source).
    pub fn kernel_basis(&self) -> Mat {
        row_space(&self.f.kernel())
    }

    /// Row basis of the image (an action-stable subspace of the target).
    pub fn image_basis(&self) -> Mat {
        self.f.image()
    }

    pub fn base_change(&self, emb: &FieldEmbedding) -> ModMap {
        ModMap {
            source: self.source.base_change(emb),
            target: self.target.base_change(emb),
            f: self.f.base_change(emb),
        }
    }

    pub fn to_text(&self) -> String {
        let src = self.source.to_text();
        let tgt = self.target.to_text();
        let mut out = format!(
            "modmap source_digest={} target_digest={}\n",
            textio::digest_hex(&src),
            textio::digest_hex(&tgt)
        );
        out.push_str(&src);
        out.push_str(&tgt);
        out.push_str(&textio::write_matrix(&self.f));
        out
    }
}

/// Parse a module from a scanner positioned at a `qmod` header.
pub fn read_qmod(sc: &mut LineScanner) -> Result<QMod> {
    let tokens = sc.expect_keyword("qmod")?;
    let d = textio::parse_usize(textio::kv(&tokens, "dim")?, "dimension")?;
    let x = textio::read_matrix(sc)?;
    let y = textio::read_matrix(sc)?;
    if x.rows() != d {
        return Err(sc.err(format!(
            "declared dim={d} but matrix has {} rows",
            x.rows()
        )));
    }
    QMod::new(x, y)
}

pub fn qmod_from_str(text: &str) -> Result<QMod> {
    let mut sc = LineScanner::new(text);
    let m = read_qmod(&mut sc)?;
    if !sc.is_exhausted() {
        return Err(sc.err("trailing content after module"));
    }
    Ok(m)
}

/// Parse a map (with embedded endpoint modules) from a scanner.
pub fn read_modmap(sc: &mut LineScanner) -> Result<ModMap> {
    let tokens = sc.expect_keyword("modmap")?;
    let src_digest = textio::kv(&tokens, "source_digest")?.to_string();
    let tgt_digest = textio::kv(&tokens, "target_digest")?.to_string();
    let source = read_qmod(sc)?;
    let target = read_qmod(sc)?;
    let f = textio::read_matrix(sc)?;
    if source.digest() != src_digest {
        return Err(sc.err("source digest mismatch"));
    }
    if target.digest() != tgt_digest {
        return Err(sc.err("target digest mismatch"));
    }
    ModMap::new(source, target, f)
}

pub fn modmap_from_str(text: &str) -> Result<ModMap> {
    let mut sc = LineScanner::new(text);
    let m = read_modmap(&mut sc)?;
    if !sc.is_exhausted() {
        return Err(sc.err("trailing content after map"));
    }
    Ok(m)
}

/// Linear conditions on `vec_row(F)` forcing `F : M → N` to intertwine the
/// actions: `F·X_M = X_N·F` and likewise for Y.
pub fn intertwiner_conditions(m: &QMod, n: &QMod) -> Result<Mat> {
    m.field.expect_same(&n.field, "hom endpoints")?;
    let field = m.field;
    let idn = Mat::identity(field, n.dim);
    let idm = Mat::identity(field, m.dim);
    // vec_row(F·X_M) = (I ⊗ X_Mᵀ)·vec_row(F); vec_row(X_N·F) = (X_N ⊗ I)·vec_row(F)
    let cond_x = idn.kron(&m.x.transpose()).add(&n.x.kron(&idm));
    let cond_y = idn.kron(&m.y.transpose()).add(&n.y.kron(&idm));
    Ok(cond_x.vstack(&cond_y))
}

/// Rows = flattened matrices of a basis of Hom(M, N).
pub fn hom_space_matrix(m: &QMod, n: &QMod) -> Result<Mat> {
    Ok(intertwiner_conditions(m, n)?.kernel())
}

/// Basis of Hom(M, N) as matrices.
pub fn hom_space(m: &QMod, n: &QMod) -> Result<Vec<Mat>> {
    let k = hom_space_matrix(m, n)?;
    Ok((0..k.rows())
        .map(|i| Mat::unvec_row(m.field, n.dim, m.dim, k.row(i)))
        .collect())
}

/// Is the row space action-stable?
pub fn is_submodule(m: &QMod, basis: &Mat) -> bool {
    let e = basis.rref();
    let xb = m.x.mul(&basis.transpose()).transpose();
    let yb = m.y.mul(&basis.transpose()).transpose();
    (0..xb.rows()).all(|i| e.contains_vec(xb.row(i)))
        && (0..yb.rows()).all(|i| e.contains_vec(yb.row(i)))
}

/// The subspace as a module of its own, with the inclusion map.
pub fn submodule_module(m: &QMod, basis: &Mat) -> Result<(QMod, ModMap)> {
    let b = row_space(basis);
    let bt = b.transpose();
    let xs = bt
        .solve(&m.x.mul(&bt))
        .ok_or_else(|| Error::Incompatible("subspace is not x-stable".into()))?;
    let ys = bt
        .solve(&m.y.mul(&bt))
        .ok_or_else(|| Error::Incompatible("subspace is not y-stable".into()))?;
    let sub = QMod::new(xs, ys)?;
    let incl = ModMap::new(sub.clone(), m.clone(), bt)?;
    Ok((sub, incl))
}

/// The quotient by an action-stable row space, with the projection map.
pub fn quotient_module(m: &QMod, basis: &Mat) -> Result<(QMod, ModMap)> {
    let b = row_space(basis);
    let s = b.rows();
    let comp = coordinate_complement(&b);
    let t = b.vstack(&comp);
    let tt_inv = t
        .transpose()
        .inverse()
        .expect("subspace basis plus coordinate complement spans everything");
    let proj = tt_inv.slice_rows(s..m.dim);
    let xq = proj.mul(&m.x).mul(&comp.transpose());
    let yq = proj.mul(&m.y).mul(&comp.transpose());
    let quot = QMod::new(xq, yq).map_err(|_| {
        Error::Incompatible("subspace is not action-stable, quotient undefined".into())
    })?;
    let pmap = ModMap::new(m.clone(), quot.clone(), proj)
        .map_err(|_| Error::Incompatible("subspace is not action-stable".into()))?;
    Ok((quot, pmap))
}

/// Result of splitting off all free direct summands.
pub struct Stripped {
    /// The projective-free part.
    pub pf: QMod,
    /// Number of free rank-one summands removed.
    pub free_rank: usize,
    /// Isomorphism M → pf ⊕ R^free_rank (free copies appended last).
    pub to_parts: ModMap,
    /// Its inverse.
    pub from_parts: ModMap,
}

/// Split a module as (projective-free) ⊕ (free), with explicit mutually
/// inverse witnesses. The free rank equals the rank of the socle word's
/// action.
pub fn strip_projectives(m: &QMod) -> Stripped {
    let field = m.field;
    let xyxy = m.word_matrix(W_XYXY);
    if xyxy.is_zero() {
        return Stripped {
            pf: m.clone(),
            free_rank: 0,
            to_parts: ModMap::identity(m),
            from_parts: ModMap::identity(m),
        };
    }
    // a vector not killed by the socle word generates a free summand
    let gen_col = (0..m.dim)
        .find(|&j| (0..m.dim).any(|i| xyxy.at(i, j) != 0))
        .expect("nonzero matrix has a nonzero column");
    let mut v = vec![0u32; m.dim];
    v[gen_col] = 1;
    // inclusion of the free cyclic module: column per basis word
    let words = m.word_matrices();
    let mut incl = Mat::zero(field, m.dim, DIM);
    for (w, wm) in words.iter().enumerate() {
        let img = wm.mul_vec(&v);
        for i in 0..m.dim {
            incl.set(i, w, img[i]);
        }
    }
    assert_eq!(incl.rank(), DIM, "cyclic module on the witness is free");
    let reg = dade::regular_module(field);
    ModMap::new(reg.clone(), m.clone(), incl.clone()).expect("word columns intertwine");
    // retraction rho: M -> R with rho∘iota = id, a linear solve over the
    // intertwining conditions (solvable because free modules are injective)
    let idr = Mat::identity(field, DIM);
    let idm = Mat::identity(field, m.dim);
    let cond_x = idr.kron(&m.x.transpose()).add(&reg.x().kron(&idm));
    let cond_y = idr.kron(&m.y.transpose()).add(&reg.y().kron(&idm));
    // vec_row(rho·incl) = (I ⊗ inclᵀ)·vec_row(rho)
    let cond_split = idr.kron(&incl.transpose());
    let zero_rhs = Mat::zero(field, cond_x.rows(), 1);
    let sys = cond_x.vstack(&cond_y).vstack(&cond_split);
    let rhs = zero_rhs
        .vstack(&Mat::zero(field, cond_y.rows(), 1))
        .vstack(&Mat::col_vec(field, &idr.vec_row()));
    let rho_vec = sys
        .solve(&rhs)
        .expect("free modules are injective, so the retraction exists");
    let rho = Mat::unvec_row(field, DIM, m.dim, &rho_vec.col(0));
    debug_assert_eq!(rho.mul(&incl), idr);
    let rho_map = ModMap::new(m.clone(), reg.clone(), rho.clone()).expect("solved intertwiner");
    // complement: kernel of the retraction
    let ker = rho_map.kernel_basis();
    let (rest, rest_incl) = submodule_module(m, &ker).expect("kernels are submodules");
    // coordinates of the idempotent projection onto the complement
    let pi = Mat::identity(field, m.dim).add(&incl.mul(&rho));
    let coords = rest_incl
        .mat()
        .solve(&pi)
        .expect("projection lands in the complement");
    let inner = strip_projectives(&rest);
    // assemble M -> (pf ⊕ R^{r-1}) ⊕ R = pf ⊕ R^r with the new copy last
    let step_to = coords.vstack(&rho);
    let step_from = rest_incl.mat().hstack(&incl);
    let decomposed = inner.pf.clone().direct_sum_free(field, inner.free_rank + 1);
    // reorder: inner.to_parts maps rest -> pf ⊕ R^{r-1}; extend by identity
    let to_mat = Mat::block_diag(field, &[inner.to_parts.mat().clone(), idr.clone()]).mul(&step_to);
    let from_mat =
        step_from.mul(&Mat::block_diag(field, &[inner.from_parts.mat().clone(), idr]));
    let to_parts = ModMap::new(m.clone(), decomposed.clone(), to_mat).expect("composite of intertwiners");
    let from_parts = ModMap::new(decomposed, m.clone(), from_mat).expect("composite of intertwiners");
    debug_assert!(to_parts
        .compose(&from_parts)
        .map(|c| c.mat() == &Mat::identity(field, c.source().dim()))
        .unwrap_or(false));
    Stripped {
        pf: inner.pf,
        free_rank: inner.free_rank + 1,
        to_parts,
        from_parts,
    }
}

impl QMod {
    /// self ⊕ R^r with block-diagonal copies of the regular module.
    fn direct_sum_free(self, field: FieldSpec, r: usize) -> QMod {
        let mut out = self;
        let reg = dade::regular_module(field);
        for _ in 0..r {
            out = out.direct_sum(&reg);
        }
        out
    }
}

/// Embed a projective-free module into the free module on
/// `s = dim soc(M)` generators, prescribing the socle to land on the socle
/// coordinates. Returns `(s, ι)` with `image(ι)` inside the radical.
pub fn injective_embedding(m: &QMod) -> Result<(usize, ModMap)> {
    if !m.is_projective_free() {
        return Err(Error::NotProjectiveFree {
            free_rank: m.free_rank(),
        });
    }
    let field = m.field;
    let soc = m.soc();
    let s = soc.rows();
    let hull = free_module(field, s);
    if s == 0 {
        // only the zero module has an empty socle
        let f = Mat::zero(field, 0, m.dim);
        return Ok((0, ModMap::new(m.clone(), hull, f)?));
    }
    let hd = hull.dim;
    // prescription: the t-th socle basis vector goes to (socle word) ⊗ unit_t
    let mut presc = Mat::zero(field, hd, s);
    for t in 0..s {
        presc.set(tensor_index(W_XYXY, t, s), t, 1);
    }
    let idh = Mat::identity(field, hd);
    let idm = Mat::identity(field, m.dim);
    let cond_x = idh.kron(&m.x.transpose()).add(&hull.x.kron(&idm));
    let cond_y = idh.kron(&m.y.transpose()).add(&hull.y.kron(&idm));
    let cond_soc = idh.kron(&soc.clone());
    let sys = cond_x.vstack(&cond_y).vstack(&cond_soc);
    let rhs = Mat::zero(field, cond_x.rows() + cond_y.rows(), 1)
        .vstack(&Mat::col_vec(field, &presc.vec_row()));
    let sol = sys
        .solve(&rhs)
        .expect("free modules are injective, so the socle prescription extends");
    let f = Mat::unvec_row(field, hd, m.dim, &sol.col(0));
    assert_eq!(f.rank(), m.dim, "map injective on the socle is injective");
    // projective-free modules land inside the radical of the hull
    for t in 0..s {
        for j in 0..m.dim {
            assert_eq!(f.at(t, j), 0, "image must avoid the degree-zero layer");
        }
    }
    Ok((s, ModMap::new(m.clone(), hull, f)?))
}

/// Outcome of the isomorphism search.
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(Box<ModMap>),
    NotIsomorphic,
    Undecided,
}

/// Search Hom(M, N) for an invertible element: random combinations first
/// (64 seeded trials), then exhaustive enumeration when the hom space has
/// dimension at most 3; larger undecided spaces are reported as such.
pub fn iso_search(m: &QMod, n: &QMod, seed: u64) -> IsoOutcome {
    if m.dim != n.dim
        || m.field != n.field
        || m.radical_dims() != n.radical_dims()
        || m.soc().rows() != n.soc().rows()
        || m.free_rank() != n.free_rank()
    {
        return IsoOutcome::NotIsomorphic;
    }
    if m.dim == 0 {
        return IsoOutcome::Isomorphic(Box::new(ModMap::zero(m.clone(), n.clone())));
    }
    let basis = match hom_space(m, n) {
        Ok(b) => b,
        Err(_) => return IsoOutcome::NotIsomorphic,
    };
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic;
    }
    let field = m.field;
    let q = field.order() as u32;
    let combine = |coeffs: &[u32]| {
        let mut f = Mat::zero(field, n.dim, m.dim);
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                f = f.add(&b.scale(*c));
            }
        }
        f
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..q)).collect();
        let f = combine(&coeffs);
        if f.inverse().is_some() {
            let map = ModMap::new(m.clone(), n.clone(), f).expect("combination of intertwiners");
            return IsoOutcome::Isomorphic(Box::new(map));
        }
    }
    if basis.len() <= 3 {
        let total = (q as u64).pow(basis.len() as u32);
        for idx in 1..total {
            let mut coeffs = Vec::with_capacity(basis.len());
            let mut t = idx;
            for _ in 0..basis.len() {
                coeffs.push((t % q as u64) as u32);
                t /= q as u64;
            }
            let f = combine(&coeffs);
            if f.inverse().is_some() {
                let map =
                    ModMap::new(m.clone(), n.clone(), f).expect("combination of intertwiners");
                return IsoOutcome::Isomorphic(Box::new(map));
            }
        }
        return IsoOutcome::NotIsomorphic;
    }
    IsoOutcome::Undecided
}
