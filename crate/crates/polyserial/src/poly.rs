//! Univariate polynomials over a [`Ring`] handle.
//!
//! `Poly` stores coefficients in ascending order with no trailing zeros, so
//! the zero polynomial has an empty coefficient list and `degree()` is `None`
//! for it. All arithmetic goes through [`PolyRing`], a thin context wrapping
//! the coefficient ring.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Polynomial with ascending coefficients and no trailing zeros.
pub struct Poly<R: Ring> {
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Poly<R> {
    /// Coefficients in ascending order; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }
}

impl<R: Ring> Clone for Poly<R> {
    fn clone(&self) -> Self {
        Poly { coeffs: self.coeffs.clone() }
    }
}

impl<R: Ring> std::fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> Eq for Poly<R> {}

impl<R: Ring> std::hash::Hash for Poly<R> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state)
    }
}

impl<R: Ring> PartialOrd for Poly<R> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then lexicographic on the ascending coefficient list.
/// This is the order factor lists are reported in.
impl<R: Ring> Ord for Poly<R> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Polynomial arithmetic context over a borrowed coefficient ring.
pub struct PolyRing<'a, R: Ring> {
    pub base: &'a R,
}

impl<'a, R: Ring> PolyRing<'a, R> {
    pub fn new(base: &'a R) -> Self {
        PolyRing { base }
    }

    pub fn zero(&self) -> Poly<R> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<R> {
        self.constant(self.base.one())
    }

    /// The monomial `x`.
    pub fn x(&self) -> Poly<R> {
        Poly { coeffs: vec![self.base.zero(), self.base.one()] }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R> {
        if self.base.is_zero(&c) {
            self.zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// Builds a polynomial, trimming trailing zeros to keep the form canonical.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64_coeffs(&self, coeffs: &[i64]) -> Poly<R> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    /// Coefficient of `x^i`, defaulting to zero beyond the stored length.
    pub fn coeff(&self, p: &Poly<R>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_monic(&self, p: &Poly<R>) -> bool {
        p.leading().is_some_and(|c| *c == self.base.one())
    }

    pub fn add(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.base.add(&self.coeff(a, i), &self.coeff(b, i)));
        }
        self.from_coeffs(out)
    }

    pub fn neg(&self, a: &Poly<R>) -> Poly<R> {
        Poly { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }

    pub fn sub(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                let prod = self.base.mul(ca, cb);
                out[i + j] = self.base.add(&out[i + j], &prod);
            }
        }
        self.from_coeffs(out)
    }

    pub fn scale(&self, a: &Poly<R>, c: &R::Elem) -> Poly<R> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, a: &Poly<R>, k: usize) -> Poly<R> {
        if a.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(a.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, p: &Poly<R>, at: &R::Elem) -> R::Elem {
        let mut acc = self.base.zero();
        for c in p.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, at), c);
        }
        acc
    }

    pub fn derivative(&self, p: &Poly<R>) -> Poly<R> {
        if p.coeffs.len() <= 1 {
            return self.zero();
        }
        let out = p
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.base.mul(c, &self.base.from_i64(i as i64)))
            .collect();
        self.from_coeffs(out)
    }

    /// Quotient and remainder; requires a divisor with unit leading coefficient.
    pub fn divmod(&self, a: &Poly<R>, b: &Poly<R>) -> Result<(Poly<R>, Poly<R>)> {
        let db = b.degree().ok_or(Error::DivByZero)?;
        let lc = b.leading().expect("nonzero divisor has a leading coefficient");
        let lcinv = self
            .base
            .invert(lc)
            .map_err(|_| Error::NonUnitLeading(format!("divisor over {}", self.base.describe())))?;
        let da = match a.degree() {
            None => return Ok((self.zero(), self.zero())),
            Some(d) if d < db => return Ok((self.zero(), a.clone())),
            Some(d) => d,
        };
        let mut rem = a.coeffs.clone();
        let mut q = vec![self.base.zero(); da - db + 1];
        for k in (db..=da).rev() {
            let c = rem[k].clone();
            if self.base.is_zero(&c) {
                continue;
            }
            let qc = self.base.mul(&c, &lcinv);
            for i in 0..=db {
                let s = self.base.mul(&qc, &b.coeffs[i]);
                rem[k - db + i] = self.base.sub(&rem[k - db + i], &s);
            }
            q[k - db] = qc;
        }
        Ok((self.from_coeffs(q), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<R>, b: &Poly<R>) -> Result<Poly<R>> {
        Ok(self.divmod(a, b)?.1)
    }

    pub fn mulmod(&self, a: &Poly<R>, b: &Poly<R>, m: &Poly<R>) -> Result<Poly<R>> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<R>, k: &BigUint, m: &Poly<R>) -> Result<Poly<R>> {
        let mut acc = self.rem(&self.one(), m)?;
        let mut base = self.rem(a, m)?;
        let bits = k.bits();
        for i in 0..bits {
            if k.bit(i) {
                acc = self.mulmod(&acc, &base, m)?;
            }
            if i + 1 < bits {
                base = self.mulmod(&base, &base, m)?;
            }
        }
        Ok(acc)
    }

    /// Monic gcd over a field; `NotAField` otherwise.
    pub fn gcd(&self, a: &Poly<R>, b: &Poly<R>) -> Result<Poly<R>> {
        if !self.base.is_field() {
            return Err(Error::NotAField(self.base.describe()));
        }
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            let r2 = self.rem(&r0, &r1)?;
            r0 = r1;
            r1 = r2;
        }
        self.monic(&r0)
    }

    /// Extended gcd over a field: returns monic `g` and `u, v` with `u*a + v*b = g`.
    pub fn ext_gcd(&self, a: &Poly<R>, b: &Poly<R>) -> Result<(Poly<R>, Poly<R>, Poly<R>)> {
        if !self.base.is_field() {
            return Err(Error::NotAField(self.base.describe()));
        }
        let mut r0 = a.clone();
        let mut u0 = self.one();
        let mut v0 = self.zero();
        let mut r1 = b.clone();
        let mut u1 = self.zero();
        let mut v1 = self.one();
        while !r1.is_zero() {
            let (q, r2) = self.divmod(&r0, &r1)?;
            let u2 = self.sub(&u0, &self.mul(&q, &u1));
            let v2 = self.sub(&v0, &self.mul(&q, &v1));
            r0 = std::mem::replace(&mut r1, r2);
            u0 = std::mem::replace(&mut u1, u2);
            v0 = std::mem::replace(&mut v1, v2);
        }
        if r0.is_zero() {
            return Ok((self.zero(), self.zero(), self.zero()));
        }
        let lcinv = self.base.invert(r0.leading().expect("nonzero"))?;
        Ok((
            self.scale(&r0, &lcinv),
            self.scale(&u0, &lcinv),
            self.scale(&v0, &lcinv),
        ))
    }

    /// Scales a nonzero polynomial monic; `NonUnitLeading` if the leading
    /// coefficient is not a unit, `DivByZero` for the zero polynomial.
    pub fn monic(&self, a: &Poly<R>) -> Result<Poly<R>> {
        let lc = a.leading().ok_or(Error::DivByZero)?;
        if *lc == self.base.one() {
            return Ok(a.clone());
        }
        let lcinv = self
            .base
            .invert(lc)
            .map_err(|_| Error::NonUnitLeading(format!("over {}", self.base.describe())))?;
        Ok(self.scale(a, &lcinv))
    }
}
