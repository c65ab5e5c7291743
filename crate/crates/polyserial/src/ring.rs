//! Ring abstraction used by the polynomial and linear-algebra layers.
//!
//! Elements are plain data (`Vec<u64>` and friends); all arithmetic goes
//! through a ring handle. This keeps element types cheap to hash, order and
//! serialize, which the canonical-form code relies on.

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

/// A commutative ring with identity, with exact arithmetic on owned elements.
pub trait Ring {
    type Elem: Clone + PartialEq + Eq + PartialOrd + Ord + std::hash::Hash + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the unique map from the integers. Here
    /// `self` is the ring handle, not the value being converted.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Multiplicative inverse; `NonUnit` for non-units.
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Whether every nonzero element is a unit.
    fn is_field(&self) -> bool;

    /// Short human-readable description for error messages.
    fn describe(&self) -> String;

    /// `a^k` by square-and-multiply.
    fn pow_u64(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^k` for arbitrary-precision exponents.
    fn pow_big(&self, a: &Self::Elem, k: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let bits = k.bits();
        for i in 0..bits {
            if k.bit(i) {
                acc = self.mul(&acc, &base);
            }
            if i + 1 < bits {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A finite field, with enough structure for polynomial factorization.
pub trait FiniteField: Ring {
    /// Prime characteristic p.
    fn characteristic(&self) -> u64;
    /// Degree n over the prime field, so the order is p^n.
    fn degree_over_prime(&self) -> u32;
    /// Field order p^n.
    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree_over_prime())
    }
    /// Uniformly random element; used by equal-degree splitting.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    /// The c-th element in a fixed enumeration of the field, c < p^n.
    /// Used by deterministic searches.
    fn elem_by_index(&self, c: u64) -> Self::Elem;
}
