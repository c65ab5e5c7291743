//! Polycyclic codes of length `n` over a serial ring `S`: submodules of
//! `S[x]/<f>` closed under multiplication by `x`, handled through their
//! coefficient expansion over the base chain ring `R`.
//!
//! The ambient module is `S^n` identified with `S[x]/<f>` for a monic
//! `f(x) = x^n - sum_j f_j x^j` (the `f_j` need not be constants). Every
//! code is stored as the Howell form of its flattened generators in
//! `R^(n m)`, where `m` is the R-rank of `S`; the flattening `Psi` sends
//! symbol `j` to coordinate block `j m .. (j+1) m`. Multiplication by `x`
//! is the shift `tau`, with companion map `nu` on the other side of the
//! standard bilinear form.
//!
//! Component codes `eps_i C` (one per chain component of `S`) drive the
//! size, rank, freeness, and minimum-distance computations: every nonzero
//! codeword `c` has some nonzero projection `eps_i c`, which is again a
//! codeword of no larger weight, so the minimum symbol weight of a module
//! code equals the minimum over its component codes.

use num_bigint::BigUint;
use num_traits::One;

use crate::chain::ChainElem;
use crate::error::{Error, Result};
use crate::linalg::{
    enumerate_span, howell, span_member, span_size, HowellForm, Mat,
};
use crate::ring::Ring;
use crate::serial::{SerialElem, SerialRing};

/// A code given by the Howell form of its flattened generators; `n` symbols
/// of `m` base-ring coordinates each.
#[derive(Clone, Debug)]
pub struct LinearCode {
    pub n: usize,
    pub m: usize,
    pub form: HowellForm,
}

/// Size, rank, and freeness data of a module code, per chain component.
#[derive(Clone, Debug)]
pub struct CodeProfile {
    /// Total number of codewords.
    pub size: BigUint,
    /// Number of codewords of each component code, in component order.
    pub component_sizes: Vec<BigUint>,
    /// Minimal generator counts of the component codes over their component
    /// rings.
    pub component_ranks: Vec<usize>,
    /// Whether each component code is free over its component ring.
    pub component_free: Vec<bool>,
    /// Whether the code is free over the serial ring.
    pub free: bool,
    /// Common rank when free.
    pub rank: Option<usize>,
}

/// The ambient quotient `S[x]/<f>` for codes of length `n` over `S`.
pub struct Ambient<'a> {
    ring: &'a SerialRing,
    n: usize,
    /// `f_0, ..., f_(n-1)` with `x^n = sum_j f_j x^j`.
    f: Vec<SerialElem>,
}

impl<'a> Ambient<'a> {
    pub fn new(ring: &'a SerialRing, f: Vec<SerialElem>) -> Result<Ambient<'a>> {
        if f.is_empty() {
            return Err(Error::InvalidInput("code length must be at least 1".into()));
        }
        for (j, c) in f.iter().enumerate() {
            if c.len() != ring.dim() {
                return Err(Error::InvalidInput(format!(
                    "coefficient f_{j} has {} coordinates, ring rank is {}",
                    c.len(),
                    ring.dim()
                )));
            }
        }
        Ok(Ambient { ring, n: f.len(), f })
    }

    pub fn ring(&self) -> &'a SerialRing {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &[SerialElem] {
        &self.f
    }

    /// Flattened coordinate count `n m`.
    pub fn flat_len(&self) -> usize {
        self.n * self.ring.dim()
    }

    /// Number of vectors in the ambient module.
    pub fn ambient_size(&self) -> BigUint {
        self.ring.size().pow(self.n as u32)
    }

    /// Multiplication by `x`: shift in one position and fold the overflow
    /// through `x^n = sum f_j x^j`.
    pub fn tau(&self, b: &[SerialElem]) -> Vec<SerialElem> {
        assert_eq!(b.len(), self.n);
        let ring = self.ring;
        let top = &b[self.n - 1];
        let mut out = Vec::with_capacity(self.n);
        out.push(ring.mul(top, &self.f[0]));
        for j in 1..self.n {
            out.push(ring.add(&b[j - 1], &ring.mul(top, &self.f[j])));
        }
        out
    }

    /// The adjoint shift: `nu(b) = (b_1, ..., b_(n-1), sum_j f_j b_j)`.
    pub fn nu(&self, b: &[SerialElem]) -> Vec<SerialElem> {
        assert_eq!(b.len(), self.n);
        let ring = self.ring;
        let mut out = Vec::with_capacity(self.n);
        out.extend_from_slice(&b[1..]);
        let mut last = ring.zero();
        for (fj, bj) in self.f.iter().zip(b) {
            last = ring.add(&last, &ring.mul(fj, bj));
        }
        out.push(last);
        out
    }

    /// Coefficient expansion `Psi`: symbol `j` occupies coordinates
    /// `j m .. (j+1) m`.
    pub fn flatten(&self, c: &[SerialElem]) -> Vec<ChainElem> {
        assert_eq!(c.len(), self.n);
        let mut out = Vec::with_capacity(self.flat_len());
        for sym in c {
            out.extend(sym.iter().cloned());
        }
        out
    }

    pub fn unflatten(&self, row: &[ChainElem]) -> Vec<SerialElem> {
        let m = self.ring.dim();
        assert_eq!(row.len(), self.n * m);
        row.chunks(m).map(|c| c.to_vec()).collect()
    }

    /// Matrix of multiplication by `x` on flattened coordinates:
    /// `Psi(tau(c)) = Psi(c) * rep_x()`.
    pub fn rep_x(&self) -> Mat {
        let ring = self.ring;
        let base = ring.base();
        let m = ring.dim();
        let len = self.flat_len();
        let mut rows: Vec<Vec<ChainElem>> = Vec::with_capacity(len);
        let f_reps: Vec<Mat> = self.f.iter().map(|fj| ring.rep_matrix(fj)).collect();
        for j in 0..self.n {
            for a in 0..m {
                let mut row = vec![base.zero(); len];
                if j < self.n - 1 {
                    row[(j + 1) * m + a] = base.one();
                } else {
                    for (r, rep) in f_reps.iter().enumerate() {
                        for (k, x) in rep.row(a).iter().enumerate() {
                            row[r * m + k] = x.clone();
                        }
                    }
                }
                rows.push(row);
            }
        }
        Mat::from_rows(base, rows, len)
    }

    /// Reduces a coefficient list of any degree modulo `f`, returning the
    /// length-`n` symbol vector.
    pub fn poly_to_vec(&self, coeffs: &[SerialElem]) -> Vec<SerialElem> {
        let ring = self.ring;
        let mut v: Vec<SerialElem> = coeffs.to_vec();
        while v.len() > self.n {
            let c = v.pop().unwrap();
            if ring.is_zero(&c) {
                continue;
            }
            let k = v.len(); // degree of the popped term
            for j in 0..self.n {
                let add = ring.mul(&c, &self.f[j]);
                let slot = k - self.n + j;
                v[slot] = ring.add(&v[slot], &add);
            }
        }
        v.resize(self.n, ring.zero());
        v
    }

    /// The plain R-span of the given vectors (no closure under `x` or ring
    /// multiplication).
    pub fn span_code(&self, gens: &[Vec<SerialElem>]) -> LinearCode {
        let rows: Vec<Vec<ChainElem>> = gens.iter().map(|g| self.flatten(g)).collect();
        self.code_from_flat_rows(rows)
    }

    /// The code generated by the given vectors as a module over `S[x]/<f>`:
    /// closure rows `x^j (basis monomial) g` for all shifts and monomials.
    pub fn ideal_code(&self, gens: &[Vec<SerialElem>]) -> LinearCode {
        let ring = self.ring;
        let m = ring.dim();
        let mut rows = Vec::with_capacity(gens.len() * self.n * m);
        for g in gens {
            assert_eq!(g.len(), self.n);
            let mut shifted = g.clone();
            for _ in 0..self.n {
                for a in 0..m {
                    let mut mono = ring.zero();
                    mono[a] = ring.base().one();
                    let scaled: Vec<SerialElem> =
                        shifted.iter().map(|sym| ring.mul(sym, &mono)).collect();
                    rows.push(self.flatten(&scaled));
                }
                shifted = self.tau(&shifted);
            }
        }
        let code = self.code_from_flat_rows(rows);
        debug_assert!(self.qsdp_check(&code));
        code
    }

    /// The principal code generated by a polynomial given as a coefficient
    /// list (reduced modulo `f` first).
    pub fn principal_code(&self, g_coeffs: &[SerialElem]) -> LinearCode {
        self.ideal_code(&[self.poly_to_vec(g_coeffs)])
    }

    pub fn code_from_flat_rows(&self, rows: Vec<Vec<ChainElem>>) -> LinearCode {
        let base = self.ring.base();
        let mat = Mat::from_rows(base, rows, self.flat_len());
        LinearCode { n: self.n, m: self.ring.dim(), form: howell(base, &mat) }
    }

    pub fn zero_code(&self) -> LinearCode {
        self.code_from_flat_rows(Vec::new())
    }

    pub fn contains(&self, code: &LinearCode, v: &[SerialElem]) -> bool {
        span_member(self.ring.base(), &code.form, &self.flatten(v))
    }

    pub fn code_size(&self, code: &LinearCode) -> BigUint {
        span_size(self.ring.base(), &code.form)
    }

    /// Whether the span is closed under multiplication by every ring
    /// variable, i.e. is an S-submodule and not merely an R-submodule.
    pub fn is_module_closed(&self, code: &LinearCode) -> bool {
        let ring = self.ring;
        let base = ring.base();
        (0..code.form.mat.rows).all(|i| {
            let c = self.unflatten(code.form.mat.row(i));
            (0..ring.num_vars()).all(|v| {
                let xv = ring.var_gen(v);
                let shifted: Vec<SerialElem> =
                    c.iter().map(|sym| ring.mul(sym, &xv)).collect();
                span_member(base, &code.form, &self.flatten(&shifted))
            })
        })
    }

    /// Full invariance check: closed under ring multiplication and under the
    /// shift `tau`, i.e. an ideal of `S[x]/<f>`.
    pub fn qsdp_check(&self, code: &LinearCode) -> bool {
        if !self.is_module_closed(code) {
            return false;
        }
        let base = self.ring.base();
        (0..code.form.mat.rows).all(|i| {
            let c = self.unflatten(code.form.mat.row(i));
            span_member(base, &code.form, &self.flatten(&self.tau(&c)))
        })
    }

    /// Component codes `eps_i C`, in the ring's component order.
    pub fn decompose_code(&self, code: &LinearCode) -> Vec<LinearCode> {
        let ring = self.ring;
        (0..ring.components().len())
            .map(|ci| {
                let rows: Vec<Vec<ChainElem>> = (0..code.form.mat.rows)
                    .map(|i| {
                        let c = self.unflatten(code.form.mat.row(i));
                        let proj: Vec<SerialElem> =
                            c.iter().map(|sym| ring.comp_project(ci, sym)).collect();
                        self.flatten(&proj)
                    })
                    .collect();
                self.code_from_flat_rows(rows)
            })
            .collect()
    }

    /// Size, rank, and freeness of a module code, with the componentwise
    /// product cross-checked against the whole-code size.
    pub fn code_profile(&self, code: &LinearCode) -> Result<CodeProfile> {
        if !self.is_module_closed(code) {
            return Err(Error::InvalidInput(
                "code is not closed under multiplication by the ring generators; \
                 component profile is undefined"
                    .into(),
            ));
        }
        let ring = self.ring;
        let comps = self.decompose_code(code);
        let mut component_sizes = Vec::with_capacity(comps.len());
        let mut component_ranks = Vec::with_capacity(comps.len());
        let mut component_free = Vec::with_capacity(comps.len());
        let mut product = BigUint::one();
        for (ci, comp_code) in comps.iter().enumerate() {
            let gens = comp_code.form.rank_rows();
            let d = ring.components()[ci].residue_degree;
            if gens % d != 0 {
                return Err(Error::Internal(
                    "component generator count is not a multiple of the residue degree".into(),
                ));
            }
            let rank = gens / d;
            let sz = self.code_size(comp_code);
            let free = sz == ring.component_size(ci).pow(rank as u32);
            product *= &sz;
            component_sizes.push(sz);
            component_ranks.push(rank);
            component_free.push(free);
        }
        let size = self.code_size(code);
        if product != size {
            return Err(Error::Internal(
                "component sizes do not multiply to the code size".into(),
            ));
        }
        let free = component_free.iter().all(|&b| b)
            && component_ranks.windows(2).all(|w| w[0] == w[1]);
        let rank = if free { Some(component_ranks[0]) } else { None };
        Ok(CodeProfile { size, component_sizes, component_ranks, component_free, free, rank })
    }

    /// Minimum number of nonzero symbols over the nonzero codewords.
    ///
    /// Enumerates the whole code when it fits the budget; otherwise falls
    /// back to the component codes, which is exact for module codes. The
    /// routes agree because every nonzero codeword dominates one of its
    /// component projections and the projections are codewords.
    pub fn min_distance(&self, code: &LinearCode, budget: u64) -> Result<usize> {
        let base = self.ring.base();
        let total = self.code_size(code);
        if total.is_one() {
            return Err(Error::ZeroCode("minimum distance of the zero code".into()));
        }
        let budget_big = BigUint::from(budget);
        if total <= budget_big {
            return Ok(min_weight_of_span(self, &code.form).expect("nonzero code"));
        }
        if !self.is_module_closed(code) {
            return Err(Error::BudgetExceeded(format!(
                "code has {total} words, budget is {budget}, and the code is not a \
                 module over the ring, so the componentwise route does not apply"
            )));
        }
        let comps = self.decompose_code(code);
        let sizes: Vec<BigUint> = comps.iter().map(|c| span_size(base, &c.form)).collect();
        let sum: BigUint = sizes.iter().sum();
        if sum > budget_big {
            return Err(Error::BudgetExceeded(format!(
                "component codes have {sum} words in total, budget is {budget}"
            )));
        }
        let mut best: Option<usize> = None;
        for comp_code in &comps {
            if let Some(w) = min_weight_of_span(self, &comp_code.form) {
                if best.is_none_or(|b| w < b) {
                    best = Some(w);
                }
            }
        }
        best.ok_or_else(|| Error::Internal("nonzero code with all components zero".into()))
    }
}

/// Number of nonzero `m`-blocks of a flattened vector.
fn block_weight(ambient: &Ambient, row: &[ChainElem]) -> usize {
    let base = ambient.ring().base();
    row.chunks(ambient.ring().dim())
        .filter(|chunk| chunk.iter().any(|c| !base.is_zero(c)))
        .count()
}

/// Minimum block weight over the nonzero vectors of a span; `None` for the
/// zero span.
fn min_weight_of_span(ambient: &Ambient, form: &HowellForm) -> Option<usize> {
    let base = ambient.ring().base();
    let mut best: Option<usize> = None;
    enumerate_span(base, form, |row| {
        let w = block_weight(ambient, row);
        if w == 0 {
            return true; // the zero vector
        }
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        best != Some(1) // weight 1 cannot be beaten
    });
    best
}
