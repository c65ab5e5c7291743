//! Exact computer algebra for polycyclic codes over finite serial rings.
//!
//! The coefficient rings are quotients
//! `S = R[x_1, ..., x_s] / <t_1(x_1), ..., t_s(x_s)>` where `R = GR(p^e, t)`
//! is a Galois ring and each `t_i` is monic and square-free modulo `p`. Such
//! a ring splits as a product of Galois rings through its primitive
//! idempotents, and the crate computes that splitting exactly, then uses it
//! to analyze polycyclic codes: submodules of `S^n` closed under the shift
//! `x * (c_0, ..., c_{n-1})` defined by a monic modulus
//! `f = x^n - f_{n-1} x^{n-1} - ... - f_0`.
//!
//! Everything is integer arithmetic; there is no floating point and no
//! approximation. Randomized steps (equal-degree splitting) draw from a
//! fixed-seed stream, so all outputs are deterministic.
//!
//! # Capabilities
//!
//! - Galois rings `GR(p^e, t)` with canonical elements ([`chain`]).
//! - Polynomial arithmetic, factorization over finite fields, Hensel
//!   lifting, primitive idempotents ([`poly`], [`factor`]).
//! - Field extensions of residue fields ([`field`]).
//! - Howell normal forms, kernels, span arithmetic over chain rings
//!   ([`linalg`]).
//! - Serial rings and their decomposition into Galois-ring components
//!   ([`serial`]).
//! - Polycyclic codes: construction, component splitting, sizes, ranks,
//!   minimum distances ([`code`]).
//! - Euclidean and annihilator duals, duality classification, code counting
//!   ([`duality`]).
//! - Quantum stabilizer parameters via the CSS construction, Gray maps
//!   ([`css`]).
//! - A JSON-config CLI exposing all of the above (`polyserial`, [`cli`]).
//!
//! # Example
//!
//! ```
//! use polyserial::chain::ChainRing;
//! use polyserial::poly::PolyRing;
//! use polyserial::factor::primitive_idempotents;
//!
//! // Z_9[x] / <x^2 - 1> splits into two components; the idempotents are
//! // 5 + 4x and 5 + 5x.
//! let z9 = ChainRing::new(3, 2, 1, None)?;
//! let rx = PolyRing::new(&z9);
//! let t = rx.from_i64_coeffs(&[-1, 0, 1]);
//! let idems = primitive_idempotents(&z9, &t)?;
//! assert_eq!(idems.len(), 2);
//! # Ok::<(), polyserial::Error>(())
//! ```

pub mod chain;
pub mod cli;
pub mod code;
pub mod css;
pub mod duality;
mod error;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod serial;

pub use error::{Error, Result};
pub use ring::{FiniteField, Ring};
