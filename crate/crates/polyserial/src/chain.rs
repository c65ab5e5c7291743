//! Finite chain rings `GR(p^e, t) = Z_{p^e}[y] / <h(y)>`.
//!
//! `h` is monic of degree `t` and irreducible modulo `p`, so the quotient is a
//! Galois ring: a local ring whose maximal ideal is generated by `gamma = p`
//! with nilpotency index `e`, and whose residue field has order `q = p^t`.
//! Elements are coefficient vectors of length `t` with entries in `[0, p^e)`;
//! `p^e` is capped at `2^31` so products fit in 64-bit intermediates.
//!
//! For `e = 1` the ring is the field `F_q`; residue fields everywhere in this
//! crate are `ChainRing` values with `e = 1`.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::PolyRing;
use crate::ring::{FiniteField, Ring};

/// Element of a [`ChainRing`]: `t` coefficients, each in `[0, p^e)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChainElem(pub(crate) Vec<u64>);

impl ChainElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// The Galois ring `GR(p^e, t)`.
#[derive(Clone, Debug)]
pub struct ChainRing {
    p: u64,
    e: u32,
    t: u32,
    pe: u64,
    /// Monic modulus of degree t, ascending, length t + 1.
    h: Vec<u64>,
    /// Reductions of y^t, ..., y^(2t-2) to the power basis; empty for t = 1.
    ypow: Vec<Vec<u64>>,
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.t == other.t && self.h == other.h
    }
}

impl Eq for ChainRing {}

impl ChainRing {
    /// Builds `GR(p^e, t)`. When `h` is omitted and `t > 1`, the modulus is
    /// the lexicographically smallest monic degree-`t` polynomial whose
    /// residue is irreducible over `F_p` (comparing constant coefficient
    /// first). Requires `p` prime and `p^e <= 2^31`.
    pub fn new(p: u64, e: u32, t: u32, h: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadModulus("nilpotency e must be at least 1".into()));
        }
        if t == 0 {
            return Err(Error::BadModulus("residue degree t must be at least 1".into()));
        }
        let pe = p
            .checked_pow(e)
            .filter(|&v| v <= 1 << 31)
            .ok_or_else(|| Error::BadModulus(format!("p^e = {p}^{e} exceeds 2^31")))?;
        let h = match h {
            Some(h) => {
                if h.len() != t as usize + 1 {
                    return Err(Error::BadModulus(format!(
                        "modulus has {} coefficients, expected degree t = {t}",
                        h.len().saturating_sub(1)
                    )));
                }
                if h[t as usize] != 1 {
                    return Err(Error::NotMonic("chain ring modulus h".into()));
                }
                if h.iter().any(|&c| c >= pe) {
                    return Err(Error::BadModulus(format!(
                        "modulus coefficients must lie in [0, {pe})"
                    )));
                }
                if t > 1 && !residue_irreducible(p, &h) {
                    return Err(Error::BadModulus(
                        "modulus residue is reducible over F_p".into(),
                    ));
                }
                h
            }
            None => default_modulus(p, t),
        };
        Ok(Self::new_trusted(p, e, t, pe, h))
    }

    /// Constructor for internally produced parameters (already validated).
    fn new_trusted(p: u64, e: u32, t: u32, pe: u64, h: Vec<u64>) -> Self {
        let t_us = t as usize;
        let mut ypow: Vec<Vec<u64>> = Vec::new();
        if t_us >= 2 {
            // y^t = -(h - y^t)
            let first: Vec<u64> = (0..t_us).map(|i| (pe - h[i] % pe) % pe).collect();
            ypow.push(first);
            for j in 1..t_us - 1 {
                let prev = &ypow[j - 1];
                let top = prev[t_us - 1];
                let mut nxt = vec![0u64; t_us];
                for i in (1..t_us).rev() {
                    nxt[i] = prev[i - 1];
                }
                if top != 0 {
                    for i in 0..t_us {
                        let v = nxt[i] as u128 + top as u128 * ypow[0][i] as u128;
                        nxt[i] = (v % pe as u128) as u64;
                    }
                }
                ypow.push(nxt);
            }
        }
        ChainRing { p, e, t, pe, h, ypow }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// The modulus characteristic p^e.
    pub fn pe(&self) -> u64 {
        self.pe
    }

    /// Modulus coefficients, ascending, length t + 1.
    pub fn modulus(&self) -> &[u64] {
        &self.h
    }

    /// Residue field order q = p^t.
    pub fn residue_order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.t)
    }

    /// Number of ring elements, p^(e t).
    pub fn size(&self) -> BigUint {
        BigUint::from(self.pe).pow(self.t)
    }

    /// The residue field `F_q` as a chain ring with e = 1.
    pub fn residue_field(&self) -> ChainRing {
        let h: Vec<u64> = self.h.iter().map(|&c| c % self.p).collect();
        Self::new_trusted(self.p, 1, self.t, self.p, h)
    }

    /// Image under the reduction map to the residue field.
    pub fn residue(&self, a: &ChainElem) -> ChainElem {
        ChainElem(a.0.iter().map(|&c| c % self.p).collect())
    }

    /// Coefficient-wise lift from the residue field (coefficients unchanged).
    pub fn lift(&self, a: &ChainElem) -> ChainElem {
        debug_assert!(a.0.iter().all(|&c| c < self.p));
        a.clone()
    }

    /// p-adic valuation of a single coefficient, capped at e.
    fn val_p(&self, mut c: u64) -> u32 {
        if c == 0 {
            return self.e;
        }
        let mut v = 0;
        while c.is_multiple_of(self.p) {
            c /= self.p;
            v += 1;
        }
        v.min(self.e)
    }

    /// gamma-adic valuation: largest v with a in gamma^v R; the zero element
    /// gets the nilpotency index e.
    pub fn gamma_valuation(&self, a: &ChainElem) -> u32 {
        a.0.iter().map(|&c| self.val_p(c)).min().unwrap_or(self.e)
    }

    /// The element gamma^v = p^v (zero for v >= e).
    pub fn gamma_pow(&self, v: u32) -> ChainElem {
        let mut coeffs = vec![0u64; self.t as usize];
        if v < self.e {
            coeffs[0] = self.p.pow(v);
        }
        ChainElem(coeffs)
    }

    /// Exact division by gamma^v; the argument must lie in gamma^v R.
    pub(crate) fn div_exact_gamma(&self, a: &ChainElem, v: u32) -> ChainElem {
        let d = self.p.pow(v);
        debug_assert!(a.0.iter().all(|&c| c % d == 0), "inexact gamma division");
        ChainElem(a.0.iter().map(|&c| c / d).collect())
    }

    /// Coefficient-wise quotient by p^k, discarding the remainder.
    pub(crate) fn div_floor_gamma(&self, a: &ChainElem, k: u32) -> ChainElem {
        let m = self.p.pow(k);
        ChainElem(a.0.iter().map(|&c| c / m).collect())
    }

    /// Writes a = gamma^v * u with u a unit (or zero) and returns u.
    pub(crate) fn unit_part(&self, a: &ChainElem) -> ChainElem {
        let v = self.gamma_valuation(a);
        if v >= self.e {
            return self.zero();
        }
        self.div_exact_gamma(a, v)
    }

    /// Builds an element from up to t signed coefficients, reducing mod p^e.
    pub fn elem_from_i64_coeffs(&self, coeffs: &[i64]) -> Result<ChainElem> {
        if coeffs.len() > self.t as usize {
            return Err(Error::InvalidInput(format!(
                "element has {} coefficients but the ring has residue degree t = {}",
                coeffs.len(),
                self.t
            )));
        }
        let mut out = vec![0u64; self.t as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            out[i] = c.rem_euclid(self.pe as i64) as u64;
        }
        Ok(ChainElem(out))
    }

    /// Renders an element for error messages: bare integer when t = 1.
    pub fn fmt_elem(&self, a: &ChainElem) -> String {
        if self.t == 1 {
            format!("{}", a.0[0])
        } else {
            format!("{:?}", a.0)
        }
    }

    /// Iterates over all p^(e t) elements in lexicographic coefficient order.
    pub fn iter_all(&self) -> AllElems {
        AllElems { pe: self.pe, cur: Some(vec![0; self.t as usize]) }
    }
}

/// Iterator over every element of a chain ring; see [`ChainRing::iter_all`].
pub struct AllElems {
    pe: u64,
    cur: Option<Vec<u64>>,
}

impl Iterator for AllElems {
    type Item = ChainElem;

    fn next(&mut self) -> Option<ChainElem> {
        let cur = self.cur.take()?;
        let out = ChainElem(cur.clone());
        let mut nxt = cur;
        for digit in nxt.iter_mut() {
            *digit += 1;
            if *digit < self.pe {
                self.cur = Some(nxt);
                return Some(out);
            }
            *digit = 0;
        }
        // All digits wrapped: enumeration finished.
        Some(out)
    }
}

impl Ring for ChainRing {
    type Elem = ChainElem;

    fn zero(&self) -> ChainElem {
        ChainElem(vec![0; self.t as usize])
    }

    fn one(&self) -> ChainElem {
        let mut c = vec![0; self.t as usize];
        c[0] = 1;
        ChainElem(c)
    }

    fn from_i64(&self, n: i64) -> ChainElem {
        let mut c = vec![0; self.t as usize];
        c[0] = n.rem_euclid(self.pe as i64) as u64;
        ChainElem(c)
    }

    fn add(&self, a: &ChainElem, b: &ChainElem) -> ChainElem {
        ChainElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= self.pe { s - self.pe } else { s }
                })
                .collect(),
        )
    }

    fn neg(&self, a: &ChainElem) -> ChainElem {
        ChainElem(a.0.iter().map(|&x| if x == 0 { 0 } else { self.pe - x }).collect())
    }

    fn mul(&self, a: &ChainElem, b: &ChainElem) -> ChainElem {
        let t = self.t as usize;
        let pe = self.pe as u128;
        if t == 1 {
            return ChainElem(vec![(a.0[0] as u128 * b.0[0] as u128 % pe) as u64]);
        }
        let mut buf = vec![0u64; 2 * t - 1];
        for (i, &ca) in a.0.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.0.iter().enumerate() {
                let v = ca as u128 * cb as u128 + buf[i + j] as u128;
                buf[i + j] = (v % pe) as u64;
            }
        }
        for j in (t..2 * t - 1).rev() {
            let c = buf[j];
            if c == 0 {
                continue;
            }
            buf[j] = 0;
            let red = &self.ypow[j - t];
            for i in 0..t {
                if red[i] == 0 {
                    continue;
                }
                let v = c as u128 * red[i] as u128 + buf[i] as u128;
                buf[i] = (v % pe) as u64;
            }
        }
        buf.truncate(t);
        ChainElem(buf)
    }

    fn is_zero(&self, a: &ChainElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    /// Units are exactly the elements with nonzero residue.
    fn is_unit(&self, a: &ChainElem) -> bool {
        a.0.iter().any(|&c| c % self.p != 0)
    }

    fn invert(&self, a: &ChainElem) -> Result<ChainElem> {
        if !self.is_unit(a) {
            return Err(Error::NonUnit(format!(
                "{} in {}",
                self.fmt_elem(a),
                self.describe()
            )));
        }
        if self.e == 1 {
            if self.t == 1 {
                let inv = int_inverse_mod(a.0[0] % self.p, self.p);
                return Ok(ChainElem(vec![inv]));
            }
            return self.invert_in_field(a);
        }
        // Lift the residue-field inverse with Newton iteration v <- v(2 - a v).
        let rbar = self.residue_field();
        let v0 = rbar.invert(&self.residue(a))?;
        let mut v = self.lift(&v0);
        let two = self.from_i64(2);
        for _ in 0..64 {
            let av = self.mul(a, &v);
            if av == self.one() {
                return Ok(v);
            }
            v = self.mul(&v, &self.sub(&two, &av));
        }
        Err(Error::Internal("unit inverse iteration did not converge".into()))
    }

    fn is_field(&self) -> bool {
        self.e == 1
    }

    fn describe(&self) -> String {
        if self.t == 1 {
            format!("Z_{}", self.pe)
        } else {
            format!("GR({}^{}, {})", self.p, self.e, self.t)
        }
    }
}

impl ChainRing {
    /// Inverse in F_q (e = 1, t > 1) via extended gcd over F_p[y].
    fn invert_in_field(&self, a: &ChainElem) -> Result<ChainElem> {
        let fp = ChainRing::new_trusted(self.p, 1, 1, self.p, vec![0, 1]);
        let px = PolyRing::new(&fp);
        let to_poly = |coeffs: &[u64]| {
            px.from_coeffs(coeffs.iter().map(|&c| ChainElem(vec![c % self.p])).collect())
        };
        let a_poly = to_poly(&a.0);
        let h_poly = to_poly(&self.h);
        let (g, u, _) = px.ext_gcd(&a_poly, &h_poly)?;
        if g.degree() != Some(0) {
            return Err(Error::Internal(
                "gcd with an irreducible modulus must be constant".into(),
            ));
        }
        // g was normalized monic, so g = 1 and u * a = 1 mod h.
        let u = px.rem(&u, &h_poly)?;
        let mut out = vec![0u64; self.t as usize];
        for (i, c) in u.coeffs().iter().enumerate() {
            out[i] = c.0[0];
        }
        Ok(ChainElem(out))
    }
}

impl FiniteField for ChainRing {
    fn characteristic(&self) -> u64 {
        assert_eq!(self.e, 1, "finite-field operations need e = 1");
        self.p
    }

    fn degree_over_prime(&self) -> u32 {
        assert_eq!(self.e, 1, "finite-field operations need e = 1");
        self.t
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> ChainElem {
        assert_eq!(self.e, 1, "finite-field operations need e = 1");
        ChainElem((0..self.t).map(|_| rng.gen_range(0..self.p)).collect())
    }

    fn elem_by_index(&self, mut c: u64) -> ChainElem {
        assert_eq!(self.e, 1, "finite-field operations need e = 1");
        let mut out = vec![0u64; self.t as usize];
        for digit in out.iter_mut() {
            *digit = c % self.p;
            c /= self.p;
        }
        debug_assert_eq!(c, 0, "element index out of range");
        ChainElem(out)
    }
}

/// Deterministic trial-division primality test; p is capped at 2^31 anyway.
fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Modular inverse of a nonzero residue modulo a prime.
fn int_inverse_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a nonzero mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r2 = r0 - q * r1;
        let s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    debug_assert_eq!(r0, 1, "inverse of a non-unit residue");
    s0.rem_euclid(p as i128) as u64
}

/// Whether the residue of `h` modulo p is irreducible over F_p.
fn residue_irreducible(p: u64, h: &[u64]) -> bool {
    let fp = ChainRing::new(p, 1, 1, None).expect("prime field");
    let px = PolyRing::new(&fp);
    let hbar = px.from_coeffs(h.iter().map(|&c| fp.from_i64((c % p) as i64)).collect());
    crate::factor::poly_is_irreducible(&fp, &hbar)
}

/// Lexicographically smallest monic degree-t modulus with irreducible residue.
/// Irreducibility only depends on the residue, so searching coefficients in
/// [0, p) suffices.
fn default_modulus(p: u64, t: u32) -> Vec<u64> {
    let t = t as usize;
    if t == 1 {
        return vec![0, 1];
    }
    let mut c = vec![0u64; t];
    loop {
        let mut h = c.clone();
        h.push(1);
        if residue_irreducible(p, &h) {
            return h;
        }
        // Advance (c_0, ..., c_{t-1}) in lexicographic order: last digit fastest.
        let mut i = t;
        loop {
            assert!(i > 0, "no irreducible polynomial found, which cannot happen");
            i -= 1;
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
        }
    }
}
