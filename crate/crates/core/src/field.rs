//! Arithmetic in the binary fields GF(2^k) for 1 <= k <= 16.
//!
//! An element is a k-bit mask: bit i is the coefficient of X^i in the
//! representative polynomial modulo a fixed irreducible modulus of degree k.
//! Addition is XOR. Multiplication is a carry-less (shift-XOR) product
//! followed by reduction modulo the modulus. The default modulus for each
//! degree is the lexicographically smallest irreducible polynomial over
//! GF(2) with nonzero constant term:
//!
//! | k | modulus  | k  | modulus   |
//! |---|----------|----|-----------|
//! | 1 | 0x3      | 9  | 0x203     |
//! | 2 | 0x7      | 10 | 0x409     |
//! | 3 | 0xB      | 11 | 0x805     |
//! | 4 | 0x13     | 12 | 0x1009    |
//! | 5 | 0x25     | 13 | 0x201B    |
//! | 6 | 0x43     | 14 | 0x4021    |
//! | 7 | 0x83     | 15 | 0x8003    |
//! | 8 | 0x11B    | 16 | 0x1002B   |
//!
//! Embeddings between fields are constructed explicitly: GF(2^k) embeds in
//! GF(2^K) iff k divides K, by sending the generator to the smallest root of
//! the source modulus in the target field.

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

/// Default modulus per degree (index = degree - 1). See the module docs.
pub const DEFAULT_MODULI: [u32; MAX_DEGREE] = [
    0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11B, 0x203, 0x409, 0x805, 0x1009, 0x201B, 0x4021,
    0x8003, 0x1002B,
];

/// Degree of a GF(2) polynomial given as a bitmask (`deg(0)` is meaningless;
/// callers guard against zero).
fn poly_deg(p: u32) -> usize {
    debug_assert!(p != 0);
    31 - p.leading_zeros() as usize
}

/// Carry-less product of two GF(2) polynomials (no reduction).
fn clmul(mut a: u32, mut b: u32) -> u32 {
    let mut r = 0u32;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    r
}

/// Remainder of `a` modulo `m` over GF(2).
fn pmod(mut a: u32, m: u32) -> u32 {
    let dm = poly_deg(m);
    while a != 0 && poly_deg(a) >= dm {
        a ^= m << (poly_deg(a) - dm);
    }
    a
}

/// Irreducibility over GF(2) by trial division (degrees here are <= 16, so
/// divisors range over polynomials of degree <= 8).
fn gf2_poly_irreducible(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let d = poly_deg(p);
    if d == 0 {
        return false;
    }
    if p & 1 == 0 {
        // divisible by X
        return d == 1; // p == X == 0x2, excluded as modulus elsewhere anyway
    }
    for q in 2u32..=(1u32 << (d / 2 + 1)) {
        if q < 2 {
            continue;
        }
        let dq = poly_deg(q);
        if dq >= 1 && dq <= d / 2 && pmod(p, q) == 0 {
            return false;
        }
    }
    true
}

/// A binary field GF(2^k), identified by its degree and modulus.
///
/// Cheap to copy; all arithmetic goes through methods on this type, with
/// elements as raw `u32` masks. Two specs compare equal iff both degree and
/// modulus agree, and all matrix/module operations insist on equal specs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    k: u8,
    modulus: u32,
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF(2^{}; {:#x})", self.k, self.modulus)
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "2^{}", self.k)
    }
}

impl FieldSpec {
    /// Field with an explicit modulus. The modulus must have degree `k` and
    /// be irreducible over GF(2).
    pub fn new(k: usize, modulus: u32) -> Result<Self> {
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(k));
        }
        if modulus == 0 || poly_deg(modulus) != k {
            return Err(Error::WrongModulusDegree { k, modulus });
        }
        if !gf2_poly_irreducible(modulus) || modulus & 1 == 0 {
            return Err(Error::ReducibleModulus { modulus });
        }
        Ok(FieldSpec { k: k as u8, modulus })
    }

    /// Field with the documented default modulus for its degree.
    pub fn with_default_modulus(k: usize) -> Result<Self> {
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(k));
        }
        FieldSpec::new(k, DEFAULT_MODULI[k - 1])
    }

    /// The prime field GF(2).
    pub fn gf2() -> Self {
        FieldSpec::with_default_modulus(1).unwrap()
    }

    /// The four-element field.
    pub fn f4() -> Self {
        FieldSpec::with_default_modulus(2).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.k as usize
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^k.
    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// True when `a` is a valid element mask for this field.
    pub fn contains(&self, a: u32) -> bool {
        (a as u64) < self.order()
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(self.contains(a) && self.contains(b));
        a ^ b
    }

    /// Subtraction coincides with addition in characteristic 2.
    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, b)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(self.contains(a) && self.contains(b));
        if a == 0 || b == 0 {
            return 0;
        }
        pmod(clmul(a, b), self.modulus)
    }

    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// The Frobenius automorphism a -> a^2.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.square(a)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        debug_assert!(self.contains(a));
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // a^(2^k - 2)
        Some(self.pow(a, self.order() - 2))
    }

    /// Divide `a` by `b`; `None` when `b` is zero.
    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// All field elements in ascending mask order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..(self.order() as u32)
    }

    /// Order of `a` in the multiplicative group; `None` for zero.
    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut n = 1u64;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        Some(n)
    }

    /// The smallest element w with w^2 + w + 1 = 0, i.e. a fixed primitive
    /// cube root of unity. Exists iff the degree is even (the field then
    /// contains the four-element field); errors otherwise.
    pub fn omega(&self) -> Result<u32> {
        for a in self.elements() {
            if a > 1 && self.add(self.add(self.square(a), a), 1) == 0 {
                return Ok(a);
            }
        }
        Err(Error::NoOrderThreeElement { k: self.degree() })
    }

    /// The conjugate cube root w + 1 (equal to w^2).
    pub fn omega_bar(&self) -> Result<u32> {
        Ok(self.add(self.omega()?, 1))
    }

    pub(crate) fn expect_same(&self, other: &FieldSpec, _op: &'static str) -> Result<()> {
        if self != other {
            return Err(Error::FieldMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

/// A field element paired with its field, for call sites where carrying the
/// spec separately would be noisy. Arithmetic panics on mixed fields (value
/// types cannot return `Result` from operator traits); bulk code paths use
/// `FieldSpec` methods on raw masks instead.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    bits: u32,
}

impl FieldElement {
    pub fn new(spec: FieldSpec, bits: u32) -> Result<Self> {
        if !spec.contains(bits) {
            return Err(Error::Incompatible(format!(
                "mask {bits:#x} out of range for GF(2^{})",
                spec.degree()
            )));
        }
        Ok(FieldElement { spec, bits })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn inv(&self) -> Option<FieldElement> {
        self.spec.inv(self.bits).map(|b| FieldElement {
            spec: self.spec,
            bits: b,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            spec: self.spec,
            bits: self.spec.pow(self.bits, e),
        }
    }
}

impl std::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#x} in GF(2^{})", self.bits, self.spec.degree())
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.spec, rhs.spec, "mixed fields in element addition");
        FieldElement {
            spec: self.spec,
            bits: self.spec.add(self.bits, rhs.bits),
        }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + rhs
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.spec, rhs.spec, "mixed fields in element multiplication");
        FieldElement {
            spec: self.spec,
            bits: self.spec.mul(self.bits, rhs.bits),
        }
    }
}

/// An explicit field embedding GF(2^k) -> GF(2^K) for k | K.
///
/// Constructed by locating the smallest root `beta` of the source modulus in
/// the target field; the map sends sum(c_i X^i) to sum(c_i beta^i) and is a
/// ring homomorphism because beta satisfies the source modulus.
#[derive(Clone)]
pub struct FieldEmbedding {
    src: FieldSpec,
    dst: FieldSpec,
    beta: u32,
    /// beta^i images of the source power basis, i < k.
    basis_images: Vec<u32>,
    /// GF(2)-linear retraction table: for each target bit position t,
    /// the source element pi(unit_t). See [`FieldEmbedding::retract`].
    retract_table: Vec<u32>,
}

impl FieldEmbedding {
    pub fn src(&self) -> FieldSpec {
        self.src
    }

    pub fn dst(&self) -> FieldSpec {
        self.dst
    }

    /// The chosen root of the source modulus in the target field.
    pub fn generator_image(&self) -> u32 {
        self.beta
    }

    /// Apply the embedding to an element of the source field.
    pub fn apply(&self, a: u32) -> u32 {
        debug_assert!(self.src.contains(a));
        let mut r = 0u32;
        let mut a = a;
        let mut i = 0;
        while a != 0 {
            if a & 1 != 0 {
                r ^= self.basis_images[i];
            }
            a >>= 1;
            i += 1;
        }
        r
    }

    /// The source-linear splitting pi with pi(apply(a)) = a and, crucially,
    /// pi(apply(c) * z) = c * pi(z) for all source c and target z: the
    /// coordinate functional of 1 with respect to a source-basis of the
    /// target field.
    pub fn retract(&self, z: u32) -> u32 {
        debug_assert!(self.dst.contains(z));
        let mut r = 0u32;
        let mut z = z;
        let mut t = 0;
        while z != 0 {
            if z & 1 != 0 {
                r ^= self.retract_table[t];
            }
            z >>= 1;
            t += 1;
        }
        r
    }
}

/// Construct the embedding GF(2^k) -> GF(2^K); errors unless k divides K.
pub fn field_embed(src: FieldSpec, dst: FieldSpec) -> Result<FieldEmbedding> {
    let (k, kk) = (src.degree(), dst.degree());
    if kk % k != 0 {
        return Err(Error::NonDividingDegree { src: k, dst: kk });
    }
    // Find the smallest root of the source modulus in dst.
    let m = src.modulus();
    let mut beta = None;
    'search: for b in dst.elements() {
        // evaluate m (a GF(2) polynomial) at b over dst
        let mut acc = 0u32;
        let mut pw = 1u32;
        for i in 0..=k {
            if (m >> i) & 1 == 1 {
                acc ^= pw;
            }
            if i < k {
                pw = dst.mul(pw, b);
            }
        }
        if acc == 0 {
            beta = Some(b);
            break 'search;
        }
    }
    let beta = beta.expect("source modulus must have a root in a field of divisible degree");
    let mut basis_images = Vec::with_capacity(k);
    let mut pw = 1u32;
    for _ in 0..k {
        basis_images.push(pw);
        pw = dst.mul(pw, beta);
    }

    let mut emb = FieldEmbedding {
        src,
        dst,
        beta,
        basis_images,
        retract_table: Vec::new(),
    };
    emb.retract_table = build_retraction(&emb)?;
    Ok(emb)
}

/// Build the GF(2)-linear table of a source-linear retraction.
///
/// Greedily extends {1} to a basis z_0 = 1, z_1, ... of the target field as
/// a vector space over the embedded source field, then solves for the
/// coordinate of z_0. Everything is GF(2) linear algebra on bitmasks.
fn build_retraction(emb: &FieldEmbedding) -> Result<Vec<u32>> {
    let k = emb.src.degree();
    let kk = emb.dst.degree();
    let e = kk / k;
    // Greedy source-basis of dst: track the GF(2)-span of
    // { apply(X^i) * z_j } as row-reduced masks.
    let mut span_rows: Vec<u32> = Vec::new(); // row-echelon masks
    let mut zs: Vec<u32> = Vec::new();
    let reduce = |rows: &Vec<u32>, mut v: u32| -> u32 {
        for &r in rows {
            let lead = 31 - r.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= r;
            }
        }
        v
    };
    for cand in emb.dst.elements() {
        if zs.len() == e {
            break;
        }
        if cand == 0 {
            continue;
        }
        // candidate contributes k new GF(2)-vectors: apply(X^i)*cand
        let mut new_rows = Vec::with_capacity(k);
        let mut ok = true;
        let mut tmp = span_rows.clone();
        for i in 0..k {
            let v = emb.dst.mul(emb.basis_images[i], cand);
            let v = reduce(&tmp, v);
            if v == 0 {
                ok = false;
                break;
            }
            // insert into echelon set
            tmp.push(v);
            tmp.sort_unstable_by(|a, b| b.cmp(a));
            new_rows.push(v);
        }
        if ok {
            span_rows = tmp;
            zs.push(cand);
        }
    }
    if zs.len() != e {
        return Err(Error::Incompatible(
            "retraction basis construction failed".into(),
        ));
    }
    // Solve, for each unit vector of dst, its coordinates over the basis
    // { apply(X^i) * z_j }; the retraction keeps the j = 0 block as a source
    // element. Build the kk x kk GF(2) matrix with columns apply(X^i)*z_j.
    let n = kk;
    let mut cols: Vec<u32> = Vec::with_capacity(n);
    for &z in &zs {
        for i in 0..k {
            cols.push(emb.dst.mul(emb.basis_images[i], z));
        }
    }
    // Invert by Gauss-Jordan on (matrix | identity), rows as bit masks over
    // 2n bits held in u64.
    let mut rows: Vec<u64> = (0..n)
        .map(|r| {
            let mut m = 0u64;
            for (c, &col) in cols.iter().enumerate() {
                if (col >> r) & 1 == 1 {
                    m |= 1 << c;
                }
            }
            m | (1u64 << (n + r))
        })
        .collect();
    let mut pivot_row_of_col = vec![usize::MAX; n];
    let mut r0 = 0usize;
    for c in 0..n {
        let mut pr = None;
        for (ri, row) in rows.iter().enumerate().skip(r0) {
            if (row >> c) & 1 == 1 {
                pr = Some(ri);
                break;
            }
        }
        let Some(pr) = pr else {
            continue;
        };
        rows.swap(r0, pr);
        let prow = rows[r0];
        for (ri, row) in rows.iter_mut().enumerate() {
            if ri != r0 && (*row >> c) & 1 == 1 {
                *row ^= prow;
            }
        }
        pivot_row_of_col[c] = r0;
        r0 += 1;
    }
    if r0 != n {
        return Err(Error::Incompatible("embedding basis is singular".into()));
    }
    // coordinates of unit_t: column t of the inverse = for each basis index c,
    // bit at rows[pivot_row_of_col[c]] >> (n + t).
    let mut table = vec![0u32; n];
    for (t, entry) in table.iter_mut().enumerate() {
        let mut src_el = 0u32;
        for i in 0..k {
            // coefficient of apply(X^i)*z_0 in unit_t
            let c = i; // j = 0 block
            let row = rows[pivot_row_of_col[c]];
            if (row >> (n + t)) & 1 == 1 {
                src_el |= 1 << i;
            }
        }
        *entry = src_el;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_irreducible_of_right_degree() {
        for k in 1..=MAX_DEGREE {
            let m = DEFAULT_MODULI[k - 1];
            assert_eq!(poly_deg(m), k, "degree of modulus for k={k}");
            assert!(gf2_poly_irreducible(m), "modulus for k={k} reducible");
            assert_eq!(m & 1, 1, "modulus for k={k} lacks constant term");
            FieldSpec::with_default_modulus(k).unwrap();
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(FieldSpec::new(2, 0x6).is_err()); // X^2 + X = X(X+1)
        assert!(FieldSpec::new(2, 0x5).is_err()); // X^2 + 1 = (X+1)^2
        assert!(FieldSpec::new(3, 0x7).is_err()); // wrong degree
        assert!(FieldSpec::new(0, 0x3).is_err());
        assert!(FieldSpec::new(17, 0x3).is_err());
    }

    #[test]
    fn alternative_degree_four_modulus_accepted() {
        // 0x1F = X^4+X^3+X^2+X+1 is the degree-5 cyclotomic polynomial,
        // irreducible over GF(2) (2 has order 4 mod 5), so it is a legal
        // non-default modulus for GF(16).
        assert!(gf2_poly_irreducible(0x1F));
        assert!(FieldSpec::new(4, 0x1F).is_ok());
    }

    // Exhaustive field axioms for small degrees.
    #[test]
    fn field_axioms_exhaustive_small_degrees() {
        for k in 1..=4usize {
            let f = FieldSpec::with_default_modulus(k).unwrap();
            let n = f.order() as u32;
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, a), 0, "char 2");
                if a != 0 {
                    let ai = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, ai), 1, "inverse in GF(2^{k}) of {a:#x}");
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity in GF(2^{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_exhaustive() {
        for k in 1..=4usize {
            let f = FieldSpec::with_default_modulus(k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                }
                // Frobenius iterated k times is the identity
                let mut x = a;
                for _ in 0..k {
                    x = f.frobenius(x);
                }
                assert_eq!(x, a);
            }
        }
    }

    #[test]
    fn f4_omega_arithmetic() {
        let f4 = FieldSpec::f4();
        let w = f4.omega().unwrap();
        let wb = f4.omega_bar().unwrap();
        assert_eq!(w, 0x2);
        assert_eq!(wb, 0x3);
        assert_eq!(f4.mul(w, w), wb, "w^2 = conjugate");
        assert_eq!(f4.mul(w, wb), 1, "w * conjugate = 1");
        assert_eq!(f4.add(w, wb), 1, "w + conjugate = 1");
        assert_eq!(f4.multiplicative_order(w), Some(3));
    }

    #[test]
    fn omega_requires_even_degree() {
        assert!(FieldSpec::gf2().omega().is_err());
        assert!(FieldSpec::with_default_modulus(3).unwrap().omega().is_err());
        assert!(FieldSpec::with_default_modulus(4).unwrap().omega().is_ok());
        assert!(FieldSpec::with_default_modulus(6).unwrap().omega().is_ok());
    }

    #[test]
    fn embed_f4_into_gf16_sends_omega_to_order_three_element() {
        let f4 = FieldSpec::f4();
        let g16 = FieldSpec::with_default_modulus(4).unwrap();
        let emb = field_embed(f4, g16).unwrap();
        let w16 = emb.apply(f4.omega().unwrap());
        // independent brute-force order check over all 15 nonzero elements
        let mut order = 0u32;
        let mut x = 1u32;
        for n in 1..=15u32 {
            x = g16.mul(x, w16);
            if x == 1 {
                order = n;
                break;
            }
        }
        assert_eq!(order, 3);
        assert_eq!(w16, 0x6, "smallest order-3 element in GF(16)/0x13");
    }

    #[test]
    fn embeddings_are_ring_homomorphisms_exhaustive() {
        let cases = [(1usize, 2usize), (1, 4), (2, 4), (1, 3), (2, 6), (3, 6)];
        for (ks, kd) in cases {
            let s = FieldSpec::with_default_modulus(ks).unwrap();
            let d = FieldSpec::with_default_modulus(kd).unwrap();
            let emb = field_embed(s, d).unwrap();
            assert_eq!(emb.apply(0), 0);
            assert_eq!(emb.apply(1), 1);
            for a in s.elements() {
                for b in s.elements() {
                    assert_eq!(emb.apply(s.add(a, b)), d.add(emb.apply(a), emb.apply(b)));
                    assert_eq!(emb.apply(s.mul(a, b)), d.mul(emb.apply(a), emb.apply(b)));
                }
            }
            // injectivity
            let mut seen = std::collections::HashSet::new();
            for a in s.elements() {
                assert!(seen.insert(emb.apply(a)));
            }
        }
    }

    #[test]
    fn embedding_rejected_for_nondividing_degrees() {
        let f4 = FieldSpec::f4();
        let g8 = FieldSpec::with_default_modulus(3).unwrap();
        assert!(matches!(
            field_embed(f4, g8),
            Err(Error::NonDividingDegree { src: 2, dst: 3 })
        ));
    }

    #[test]
    fn retraction_splits_embedding_and_is_source_linear() {
        for (ks, kd) in [(1usize, 2usize), (2, 4), (2, 6), (1, 4), (3, 6)] {
            let s = FieldSpec::with_default_modulus(ks).unwrap();
            let d = FieldSpec::with_default_modulus(kd).unwrap();
            let emb = field_embed(s, d).unwrap();
            for a in s.elements() {
                assert_eq!(emb.retract(emb.apply(a)), a, "pi . phi = id");
            }
            // source-linearity: pi(phi(c) * z) = c * pi(z)
            for c in s.elements() {
                for z in d.elements() {
                    assert_eq!(
                        emb.retract(d.mul(emb.apply(c), z)),
                        s.mul(c, emb.retract(z))
                    );
                }
            }
        }
    }

    #[test]
    fn element_wrapper_ops() {
        let f4 = FieldSpec::f4();
        let w = FieldElement::new(f4, 2).unwrap();
        let wb = FieldElement::new(f4, 3).unwrap();
        assert_eq!((w * wb).bits(), 1);
        assert_eq!((w + wb).bits(), 1);
        assert_eq!((w - wb).bits(), 1);
        assert_eq!(w.pow(3).bits(), 1);
        assert_eq!(w.inv().unwrap().bits(), 3);
        assert!(FieldElement::new(f4, 4).is_err());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = FieldSpec::with_default_modulus(5).unwrap();
        for a in f.elements().take(16) {
            let mut acc = 1u32;
            for e in 0..10u64 {
                assert_eq!(f.pow(a, e), acc);
                acc = f.mul(acc, a);
            }
        }
    }
}
