//! Finite field extensions `F_q[z] / <mu(z)>` of a chain-ring residue field.
//!
//! The base is a [`ChainRing`] with nilpotency 1 (a field `F_q`); `mu` is a
//! monic irreducible polynomial over it, so the quotient is `F_{q^d}` with
//! `d = deg mu`. Elements are coefficient vectors of length `d`. Degree-1
//! moduli are allowed: they give a relabeled copy of the base field, which is
//! convenient for uniform handling of component residue fields.

use rand_chacha::ChaCha8Rng;

use crate::chain::{ChainElem, ChainRing};
use crate::error::{Error, Result};
use crate::factor::poly_is_irreducible;
use crate::poly::{Poly, PolyRing};
use crate::ring::{FiniteField, Ring};

/// The extension `F_{q^d}` of a residue field `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldExt {
    base: ChainRing,
    modulus: Poly<ChainRing>,
    d: usize,
}

impl FieldExt {
    /// Builds the quotient by a monic irreducible `mu` over a field base.
    pub fn new(base: ChainRing, modulus: Poly<ChainRing>) -> Result<Self> {
        if !base.is_field() {
            return Err(Error::NotAField(base.describe()));
        }
        let px = PolyRing::new(&base);
        let d = modulus.degree().ok_or(Error::DivByZero)?;
        if d == 0 || !px.is_monic(&modulus) {
            return Err(Error::NotMonic(
                "field extension modulus must be monic of positive degree".into(),
            ));
        }
        if !poly_is_irreducible(&base, &modulus) {
            return Err(Error::BadModulus(format!(
                "extension modulus is reducible over {}",
                base.describe()
            )));
        }
        Ok(FieldExt { base, modulus, d })
    }

    pub fn base(&self) -> &ChainRing {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<ChainRing> {
        &self.modulus
    }

    /// Extension degree d over the base field.
    pub fn ext_degree(&self) -> usize {
        self.d
    }

    /// Embedding of the base field as constants.
    pub fn from_base(&self, c: &ChainElem) -> Vec<ChainElem> {
        let mut out = vec![self.base.zero(); self.d];
        out[0] = c.clone();
        out
    }

    /// The class of `z`, a root of the modulus.
    pub fn gen(&self) -> Vec<ChainElem> {
        let mut out = vec![self.base.zero(); self.d];
        if self.d == 1 {
            // z = -mu_0 in the degree-1 quotient.
            out[0] = self.base.neg(&self.modulus.coeffs()[0].clone());
        } else {
            out[1] = self.base.one();
        }
        out
    }

    /// Reduces a polynomial over the base field to an element of the quotient.
    pub fn from_poly(&self, p: &Poly<ChainRing>) -> Result<Vec<ChainElem>> {
        let px = PolyRing::new(&self.base);
        let r = px.rem(p, &self.modulus)?;
        let mut out = vec![self.base.zero(); self.d];
        for (i, c) in r.coeffs().iter().enumerate() {
            out[i] = c.clone();
        }
        Ok(out)
    }

    fn to_poly(&self, a: &[ChainElem]) -> Poly<ChainRing> {
        let px = PolyRing::new(&self.base);
        px.from_coeffs(a.to_vec())
    }
}

impl Ring for FieldExt {
    /// Coefficient vector of length `d` over the base field.
    type Elem = Vec<ChainElem>;

    fn zero(&self) -> Vec<ChainElem> {
        vec![self.base.zero(); self.d]
    }

    fn one(&self) -> Vec<ChainElem> {
        self.from_base(&self.base.one())
    }

    fn from_i64(&self, n: i64) -> Vec<ChainElem> {
        self.from_base(&self.base.from_i64(n))
    }

    fn add(&self, a: &Vec<ChainElem>, b: &Vec<ChainElem>) -> Vec<ChainElem> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Vec<ChainElem>) -> Vec<ChainElem> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<ChainElem>, b: &Vec<ChainElem>) -> Vec<ChainElem> {
        let px = PolyRing::new(&self.base);
        let prod = px.mul(&self.to_poly(a), &self.to_poly(b));
        self.from_poly(&prod).expect("monic modulus division cannot fail")
    }

    fn is_zero(&self, a: &Vec<ChainElem>) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }

    fn is_unit(&self, a: &Vec<ChainElem>) -> bool {
        !self.is_zero(a)
    }

    fn invert(&self, a: &Vec<ChainElem>) -> Result<Vec<ChainElem>> {
        if self.is_zero(a) {
            return Err(Error::NonUnit(format!("zero in {}", self.describe())));
        }
        let px = PolyRing::new(&self.base);
        let (g, u, _) = px.ext_gcd(&self.to_poly(a), &self.modulus)?;
        if g.degree() != Some(0) {
            return Err(Error::Internal(
                "gcd with an irreducible modulus must be constant".into(),
            ));
        }
        self.from_poly(&u)
    }

    fn is_field(&self) -> bool {
        true
    }

    fn describe(&self) -> String {
        format!("F_{}^{}", self.base.size(), self.d)
    }
}

impl FiniteField for FieldExt {
    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn degree_over_prime(&self) -> u32 {
        self.base.t() * self.d as u32
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<ChainElem> {
        (0..self.d).map(|_| self.base.sample(rng)).collect()
    }

    fn elem_by_index(&self, mut c: u64) -> Vec<ChainElem> {
        let q: u64 = self
            .base
            .size()
            .try_into()
            .expect("indexed enumeration needs a small base field");
        let mut out = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            out.push(self.base.elem_by_index(c % q));
            c /= q;
        }
        debug_assert_eq!(c, 0, "element index out of range");
        out
    }
}
