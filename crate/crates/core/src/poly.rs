//! Dense univariate polynomials over GF(2^k), with exact factorization by
//! trial division.
//!
//! Coefficients are stored low degree first and kept normalized (no trailing
//! zeros; the zero polynomial has an empty coefficient vector). Factorization
//! enumerates monic trial divisors in ascending degree, so it is exact and
//! deterministic; the enumeration is capped, which is ample for the
//! characteristic polynomials this crate factors (small degree over small
//! fields).

use crate::error::{Error, Result};
use crate::field::{FieldEmbedding, FieldSpec};

/// Trial-division enumeration cap (number of candidate divisors).
const FACTOR_BUDGET: u128 = 1 << 26;

/// A polynomial over a fixed binary field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c:#x}")?,
                (1, 1) => write!(f, "X")?,
                (1, _) => write!(f, "{c:#x}*X")?,
                (_, 1) => write!(f, "X^{i}")?,
                (_, _) => write!(f, "{c:#x}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Build from low-first coefficients; trailing zeros are trimmed.
    pub fn new(field: FieldSpec, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field, 1)
    }

    pub fn constant(field: FieldSpec, c: u32) -> Self {
        Poly::new(field, vec![c])
    }

    /// The monomial c * X^d.
    pub fn monomial(field: FieldSpec, c: u32, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Poly::new(field, coeffs)
    }

    /// X itself.
    pub fn x(field: FieldSpec) -> Self {
        Poly::monomial(field, 1, 1)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn check_field(&self, other: &Poly) {
        assert_eq!(
            self.field, other.field,
            "mixed fields in polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.field.add(self.coeff(i), other.coeff(i));
        }
        Poly::new(self.field, out)
    }

    /// Subtraction equals addition in characteristic 2.
    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(other)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(a, b));
            }
        }
        Poly::new(self.field, out)
    }

    pub fn scale(&self, c: u32) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(),
        )
    }

    /// Monic multiple of self (zero stays zero).
    pub fn make_monic(&self) -> Poly {
        match self.field.inv(self.leading_coeff()) {
            Some(li) => self.scale(li),
            None => self.clone(),
        }
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor);
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = divisor.degree().unwrap();
        let dinv = self.field.inv(divisor.leading_coeff()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let lead = rem[i];
            if lead == 0 {
                continue;
            }
            let q = self.field.mul(lead, dinv);
            quot[i - dd] = q;
            for j in 0..=dd {
                let s = self.field.mul(q, divisor.coeff(j));
                rem[i - dd + j] = self.field.add(rem[i - dd + j], s);
            }
        }
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor (Euclid).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let g = self.gcd(other);
        let (q, r) = self.divrem(&g).unwrap();
        debug_assert!(r.is_zero());
        q.mul(other).make_monic()
    }

    pub fn eval(&self, a: u32) -> u32 {
        // Horner
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add(self.field.mul(acc, a), c);
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut r = Poly::one(self.field);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Apply a field embedding to every coefficient.
    pub fn base_change(&self, emb: &FieldEmbedding) -> Poly {
        assert_eq!(self.field, emb.src(), "embedding source mismatch");
        Poly::new(
            emb.dst(),
            self.coeffs.iter().map(|&c| emb.apply(c)).collect(),
        )
    }

    /// All distinct roots in the coefficient field, ascending by mask.
    pub fn roots(&self) -> Vec<u32> {
        if self.is_zero() {
            return vec![];
        }
        self.field.elements().filter(|&a| self.eval(a) == 0).collect()
    }

    /// Irreducibility over the coefficient field (degree >= 1 required).
    pub fn is_irreducible(&self) -> Result<bool> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Ok(false),
            Some(_) => Ok(self.factor()?.single_irreducible()),
        }
    }

    /// Exact factorization into monic irreducibles with multiplicities,
    /// sorted by (degree, coefficient vector). The leading unit is returned
    /// alongside so that `unit * prod(factors^mult) == self`.
    pub fn factor(&self) -> Result<Factored> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = self.leading_coeff();
        let mut p = self.make_monic();
        let deg = p.degree().unwrap();
        let mut factors: Vec<(Poly, usize)> = Vec::new();
        if deg == 0 {
            return Ok(Factored { unit, factors });
        }
        let q = self.field.order() as u128;
        let half = deg / 2;
        // enumeration budget: sum over degrees d of q^d candidates
        let mut budget: u128 = 0;
        for d in 1..=half {
            budget = budget.saturating_add(q.saturating_pow(d as u32));
        }
        if budget > FACTOR_BUDGET {
            return Err(Error::FactorizationTooLarge {
                degree: deg,
                field_degree: self.field.degree(),
            });
        }
        'outer: for d in 1..=half {
            if p.degree() == Some(0) {
                break 'outer;
            }
            // monic candidates X^d + sum_{i<d} c_i X^i, lexicographic in
            // (c_{d-1}, ..., c_0) ascending => ascending as mask vectors
            let count = q.pow(d as u32);
            for t in 0..count {
                let mut coeffs = vec![0u32; d + 1];
                coeffs[d] = 1;
                let mut tt = t;
                for c in coeffs.iter_mut().take(d) {
                    *c = (tt % q) as u32;
                    tt /= q;
                }
                let cand = Poly::new(self.field, coeffs);
                let mut mult = 0usize;
                loop {
                    let (quo, rem) = p.divrem(&cand).unwrap();
                    if rem.is_zero() {
                        p = quo;
                        mult += 1;
                    } else {
                        break;
                    }
                }
                if mult > 0 {
                    factors.push((cand, mult));
                    if p.degree() == Some(0) {
                        break 'outer;
                    }
                    // remaining cofactor may still be divisible by larger
                    // candidates only; smaller ones are exhausted
                    if p.degree().unwrap() / 2 < d {
                        break 'outer;
                    }
                }
            }
        }
        if p.degree().map(|d| d >= 1).unwrap_or(false) {
            factors.push((p, 1));
        }
        factors.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
        });
        Ok(Factored { unit, factors })
    }
}

/// Result of [`Poly::factor`]: `unit * prod(p_i^m_i)` equals the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub unit: u32,
    pub factors: Vec<(Poly, usize)>,
}

impl Factored {
    /// True when the factorization is a single irreducible with
    /// multiplicity 1.
    pub fn single_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// True when there is exactly one irreducible factor (any multiplicity):
    /// the shape required of an indecomposable-automorphism block.
    pub fn primary(&self) -> bool {
        self.factors.len() == 1
    }

    /// Multiply the factorization back out (for verification).
    pub fn expand(&self, field: FieldSpec) -> Poly {
        let mut p = Poly::constant(field, self.unit);
        for (f, m) in &self.factors {
            p = p.mul(&f.pow(*m));
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::gf2()
    }

    fn f4() -> FieldSpec {
        FieldSpec::f4()
    }

    #[test]
    fn square_of_quadratic_over_gf2() {
        // X^4 + X^2 + 1 = (X^2 + X + 1)^2 in characteristic 2
        let p = Poly::new(gf2(), vec![1, 0, 1, 0, 1]);
        let f = p.factor().unwrap();
        assert_eq!(f.unit, 1);
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].0, Poly::new(gf2(), vec![1, 1, 1]));
        assert_eq!(f.factors[0].1, 2);
        assert_eq!(f.expand(gf2()), p);
    }

    #[test]
    fn quadratic_splits_over_f4() {
        // X^2 + X + 1 = (X + w)(X + wbar) over the four-element field
        let p = Poly::new(f4(), vec![1, 1, 1]);
        let f = p.factor().unwrap();
        assert_eq!(f.factors.len(), 2);
        let w = f4().omega().unwrap();
        let wb = f4().omega_bar().unwrap();
        assert_eq!(f.factors[0].0, Poly::new(f4(), vec![w, 1]));
        assert_eq!(f.factors[1].0, Poly::new(f4(), vec![wb, 1]));
        assert_eq!(p.roots(), vec![w, wb]);
        assert!(!p.is_irreducible().unwrap());
    }

    #[test]
    fn default_moduli_irreducible_via_general_machinery() {
        for k in 1..=10usize {
            let m = crate::field::DEFAULT_MODULI[k - 1];
            let coeffs: Vec<u32> = (0..=k).map(|i| (m >> i) & 1).collect();
            let p = Poly::new(gf2(), coeffs);
            assert!(
                p.is_irreducible().unwrap(),
                "modulus for degree {k} not irreducible"
            );
        }
    }

    #[test]
    fn divrem_roundtrip_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for field in [gf2(), f4(), FieldSpec::with_default_modulus(4).unwrap()] {
            let q = field.order() as u32;
            for _ in 0..200 {
                let da = rng.gen_range(0..8);
                let db = rng.gen_range(0..5);
                let a = Poly::new(field, (0..=da).map(|_| rng.gen_range(0..q)).collect());
                let mut bc: Vec<u32> = (0..=db).map(|_| rng.gen_range(0..q)).collect();
                if bc.iter().all(|&c| c == 0) {
                    bc[db] = 1;
                }
                let b = Poly::new(field, bc);
                if b.is_zero() {
                    continue;
                }
                let (quo, rem) = a.divrem(&b).unwrap();
                assert_eq!(quo.mul(&b).add(&rem), a);
                assert!(rem.degree() < b.degree() || rem.is_zero());
            }
        }
    }

    #[test]
    fn gcd_divides_both_and_lcm_consistent() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let field = f4();
        for _ in 0..100 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                Poly::new(field, (0..=d).map(|_| rng.gen_range(0..4)).collect())
            };
            let a = mk(&mut rng, 4);
            let b = mk(&mut rng, 3);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let g = a.gcd(&b);
            assert!(g.divides(&a) && g.divides(&b));
            let l = a.lcm(&b);
            assert!(a.divides(&l) && b.divides(&l));
            assert_eq!(
                g.mul(&l).make_monic(),
                a.mul(&b).make_monic(),
                "gcd * lcm = product up to unit"
            );
        }
    }

    #[test]
    fn eval_respects_products() {
        let field = f4();
        let a = Poly::new(field, vec![2, 1, 3]);
        let b = Poly::new(field, vec![1, 2]);
        let ab = a.mul(&b);
        for x in field.elements() {
            assert_eq!(ab.eval(x), field.mul(a.eval(x), b.eval(x)));
        }
    }

    #[test]
    fn base_change_preserves_factor_structure() {
        let p = Poly::new(gf2(), vec![1, 1, 1]); // irreducible over GF(2)
        assert!(p.is_irreducible().unwrap());
        let emb = crate::field::field_embed(gf2(), f4()).unwrap();
        let p4 = p.base_change(&emb);
        let f = p4.factor().unwrap();
        assert_eq!(f.factors.len(), 2, "splits after extension");
        assert!(f.factors.iter().all(|(q, m)| q.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn factor_of_product_with_unit() {
        let field = f4();
        // 3 * (X+1)^2 * (X^2+X+2)  -- check unit handling and multiplicity
        let a = Poly::new(field, vec![1, 1]);
        let b = Poly::new(field, vec![2, 1, 1]);
        let p = a.mul(&a).mul(&b).scale(3);
        let f = p.factor().unwrap();
        assert_eq!(f.unit, 3);
        assert_eq!(f.expand(field), p);
        let mults: Vec<usize> = f.factors.iter().map(|(_, m)| *m).collect();
        assert!(mults.contains(&2));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(Poly::zero(gf2()).factor().is_err());
        assert!(Poly::zero(gf2()).is_irreducible().is_err());
    }

    #[test]
    fn x16_plus_x_factors_into_all_small_irreducibles() {
        // X^16 + X = product of all monic irreducibles of degree dividing 4
        // over GF(2); a classical identity that exercises multiplicity-free
        // factorization with several factors.
        let mut coeffs = vec![0u32; 17];
        coeffs[1] = 1;
        coeffs[16] = 1;
        let p = Poly::new(gf2(), coeffs);
        let f = p.factor().unwrap();
        let degsum: usize = f
            .factors
            .iter()
            .map(|(q, m)| q.degree().unwrap() * m)
            .sum();
        assert_eq!(degsum, 16);
        assert!(f.factors.iter().all(|(_, m)| *m == 1));
        // 2 linear + 1 quadratic + 2 cubic? no: degrees dividing 4: 1,2,4
        let count_by_deg = |d: usize| f.factors.iter().filter(|(q, _)| q.degree() == Some(d)).count();
        assert_eq!(count_by_deg(1), 2);
        assert_eq!(count_by_deg(2), 1);
        assert_eq!(count_by_deg(4), 3);
        assert_eq!(f.expand(gf2()), p);
    }
}
