//! Duals of polycyclic codes and their classification.
//!
//! Three intertwined notions live here, all over the ambient quotient
//! `S[x]/<f>` with `f(x) = x^n - sum f_j x^j`:
//!
//! * the Euclidean dual `C^perp` with respect to the S-valued form
//!   `<u, v> = sum_j u_j v_j`;
//! * the annihilator dual `C° = { v : v c = 0 for all c in C }`, the
//!   annihilator ideal of `C` under polynomial multiplication modulo `f`;
//! * the Gram matrix `A` with `A[i][j] = c_(i+j)`, where `c_k` is the
//!   constant coefficient of `x^k` reduced modulo `f`. It ties the two
//!   duals together: `u A v^T` is the constant coefficient of `u(x) v(x)`
//!   modulo `f`, so for ideal codes and unit `f_0` one has
//!   `C° = (C A)^perp = C^perp A^(-1)`.
//!
//! The annihilator dual is computed from first principles as the kernel of
//! stacked multiplication matrices; the Gram-based routes are provided
//! separately so the identities can be checked rather than assumed, and the
//! divisor route `<g>° = <f/g>` gives a third one for principal codes.
//!
//! Classification (self-dual, self-orthogonal, dual-containing, LCD with
//! respect to the annihilator dual) is likewise double-checked: a set
//! route compares Howell forms directly, and when the code is principal
//! with a unit-leading generator dividing `f`, a component-wise divisor
//! criterion recomputes the same answers from polynomial arithmetic.

use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeSet;

use crate::chain::ChainElem;
use crate::code::{Ambient, LinearCode};
use crate::error::{Error, Result};
use crate::field::FieldExt;
use crate::linalg::{
    howell, howell_with_witness, intersect_spans, kernel, solve_in_span, span_eq, span_size,
    span_subset, Mat,
};
use crate::poly::{Poly, PolyRing};
use crate::ring::Ring;
use crate::serial::{SerialElem, SerialRing};

/// Gram matrix of the ambient quotient: `n x n` over the serial ring.
pub type Gram = Vec<Vec<SerialElem>>;

/// Gram matrix `A[i][j] = c_(i+j)`: `c_0..c_(n-1) = (1, 0, ..., 0)` and
/// `c_k = sum_j f_j c_(k-n+j)` beyond. Symmetric and constant along
/// anti-diagonals by construction.
pub fn gram_matrix(ambient: &Ambient) -> Gram {
    let ring = ambient.ring();
    let n = ambient.n();
    let mut c: Vec<SerialElem> = Vec::with_capacity(2 * n - 1);
    c.push(ring.one());
    for _ in 1..n {
        c.push(ring.zero());
    }
    for k in n..2 * n - 1 {
        let mut acc = ring.zero();
        for (j, fj) in ambient.f().iter().enumerate() {
            let term = ring.mul(fj, &c[k - n + j]);
            acc = ring.add(&acc, &term);
        }
        c.push(acc);
    }
    (0..n)
        .map(|i| (0..n).map(|j| c[i + j].clone()).collect())
        .collect()
}

/// `sum_j u_j v_j`, the S-valued Euclidean pairing.
pub fn euclidean_pairing(ambient: &Ambient, u: &[SerialElem], v: &[SerialElem]) -> SerialElem {
    let ring = ambient.ring();
    let mut acc = ring.zero();
    for (a, b) in u.iter().zip(v) {
        acc = ring.add(&acc, &ring.mul(a, b));
    }
    acc
}

/// `u A v^T`: the constant coefficient of `u(x) v(x) mod f`.
pub fn gram_pairing(
    ambient: &Ambient,
    gram: &Gram,
    u: &[SerialElem],
    v: &[SerialElem],
) -> SerialElem {
    let ring = ambient.ring();
    let mut acc = ring.zero();
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            let term = ring.mul(ui, &ring.mul(&gram[i][j], vj));
            acc = ring.add(&acc, &term);
        }
    }
    acc
}

/// Matrix of multiplication by the vector `c` (as a polynomial) on
/// flattened coordinates: row `(j, a)` is `Psi(x^j basis_a c)`, so
/// `Psi(v c) = Psi(v) * mult_matrix(c)`.
pub fn mult_matrix(ambient: &Ambient, c: &[SerialElem]) -> Mat {
    let ring = ambient.ring();
    let m = ring.dim();
    let mut rows = Vec::with_capacity(ambient.flat_len());
    let mut shifted = c.to_vec();
    for _ in 0..ambient.n() {
        for a in 0..m {
            let mut mono = ring.zero();
            mono[a] = ring.base().one();
            let scaled: Vec<SerialElem> =
                shifted.iter().map(|sym| ring.mul(sym, &mono)).collect();
            rows.push(ambient.flatten(&scaled));
        }
        shifted = ambient.tau(&shifted);
    }
    Mat::from_rows(ring.base(), rows, ambient.flat_len())
}

/// Euclidean dual `C^perp` with respect to the S-valued pairing.
///
/// The pairing is S-bilinear, so the dual of a bare R-span equals the dual
/// of its S-module closure; the size identity `|C| |C^perp| = |S^n|` and
/// the double-dual identity therefore hold exactly for S-submodules.
pub fn euclidean_dual(ambient: &Ambient, code: &LinearCode) -> LinearCode {
    let ring = ambient.ring();
    let base = ring.base();
    let m = ring.dim();
    let nm = ambient.flat_len();
    let gens = code.form.mat.rows;
    // Constraint block per generator u: column block b of Psi(v) * B equals
    // the coefficient vector of <v, u>, via B[(j, a)][b] = rep(u_j)[a][b].
    let mut constraints = Mat::zeros(base, nm, gens * m);
    for gi in 0..gens {
        let u = ambient.unflatten(code.form.mat.row(gi));
        for (j, uj) in u.iter().enumerate() {
            let rep = ring.rep_matrix(uj);
            for a in 0..m {
                for b in 0..m {
                    *constraints.at_mut(j * m + a, gi * m + b) = rep.at(a, b).clone();
                }
            }
        }
    }
    let ker = kernel(base, &constraints.transpose(base));
    let rows = (0..ker.rows).map(|i| ker.row(i).to_vec()).collect();
    ambient.code_from_flat_rows(rows)
}

/// Annihilator dual `C°`, computed as the kernel of the stacked
/// multiplication matrices of the generators. Requires a unit `f_0` so that
/// the annihilator pairs with `C` the way a dual must (`|C| |C°| = |S^n|`).
pub fn annihilator_dual(ambient: &Ambient, code: &LinearCode) -> Result<LinearCode> {
    require_unit_constant(ambient)?;
    let base = ambient.ring().base();
    let nm = ambient.flat_len();
    let gens = code.form.mat.rows;
    let mut constraints = Mat::zeros(base, nm, gens * nm);
    for gi in 0..gens {
        let c = ambient.unflatten(code.form.mat.row(gi));
        let mc = mult_matrix(ambient, &c);
        for i in 0..nm {
            for j in 0..nm {
                *constraints.at_mut(i, gi * nm + j) = mc.at(i, j).clone();
            }
        }
    }
    let ker = kernel(base, &constraints.transpose(base));
    let rows = (0..ker.rows).map(|i| ker.row(i).to_vec()).collect();
    Ok(ambient.code_from_flat_rows(rows))
}

fn require_unit_constant(ambient: &Ambient) -> Result<()> {
    if !ambient.ring().is_unit(&ambient.f()[0]) {
        return Err(Error::NonUnitConstant(
            "the constant coefficient f_0 must be a unit for annihilator duality".into(),
        ));
    }
    Ok(())
}

/// Flattened right-multiplication matrix of the Gram matrix:
/// `Psi(w A) = Psi(w) * gram_flat(A)`.
pub fn gram_flat(ambient: &Ambient, gram: &Gram) -> Mat {
    let ring = ambient.ring();
    let base = ring.base();
    let m = ring.dim();
    let n = ambient.n();
    let mut out = Mat::zeros(base, n * m, n * m);
    for (i, gram_row) in gram.iter().enumerate() {
        for (j, entry) in gram_row.iter().enumerate() {
            let rep = ring.rep_matrix(entry);
            for a in 0..m {
                for b in 0..m {
                    *out.at_mut(i * m + a, j * m + b) = rep.at(a, b).clone();
                }
            }
        }
    }
    out
}

/// Inverse of the flattened Gram matrix; defined exactly when `f_0` is a
/// unit.
pub fn gram_flat_inverse(ambient: &Ambient, gram: &Gram) -> Result<Mat> {
    require_unit_constant(ambient)?;
    let base = ambient.ring().base();
    let big = gram_flat(ambient, gram);
    let form = howell_with_witness(base, &big);
    let nm = big.rows;
    let mut rows = Vec::with_capacity(nm);
    for i in 0..nm {
        let mut unit = vec![base.zero(); nm];
        unit[i] = base.one();
        let x = solve_in_span(base, &form, &unit).ok_or_else(|| {
            Error::Internal("Gram matrix with unit f_0 must be invertible".into())
        })?;
        rows.push(x);
    }
    Ok(Mat::from_rows(base, rows, nm))
}

/// `C A`: the image of the code under right multiplication by the Gram
/// matrix.
/// Image of a single word under the Gram matrix, `w -> wA`.
pub fn gram_apply(ambient: &Ambient, gram: &Gram, word: &[SerialElem]) -> Vec<SerialElem> {
    let ring = ambient.ring();
    let n = ambient.n();
    assert_eq!(word.len(), n);
    (0..n)
        .map(|j| {
            let mut acc = ring.zero();
            for (i, w) in word.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(w, &gram[i][j]));
            }
            acc
        })
        .collect()
}

pub fn code_times_gram(ambient: &Ambient, code: &LinearCode, gram: &Gram) -> LinearCode {
    let base = ambient.ring().base();
    let big = gram_flat(ambient, gram);
    let rows = (0..code.form.mat.rows)
        .map(|i| crate::linalg::row_times_mat(base, code.form.mat.row(i), &big))
        .collect();
    ambient.code_from_flat_rows(rows)
}

/// The Gram route `(C A)^perp` to the annihilator dual; exposed separately
/// so it can be compared against [`annihilator_dual`] instead of replacing
/// it.
pub fn annihilator_dual_via_gram(ambient: &Ambient, code: &LinearCode) -> Result<LinearCode> {
    require_unit_constant(ambient)?;
    let gram = gram_matrix(ambient);
    Ok(euclidean_dual(ambient, &code_times_gram(ambient, code, &gram)))
}

/// The second Gram route `C^perp A^(-1)` to the annihilator dual.
pub fn annihilator_dual_via_inverse(ambient: &Ambient, code: &LinearCode) -> Result<LinearCode> {
    let gram = gram_matrix(ambient);
    let inv = gram_flat_inverse(ambient, &gram)?;
    let base = ambient.ring().base();
    let perp = euclidean_dual(ambient, code);
    let rows = (0..perp.form.mat.rows)
        .map(|i| crate::linalg::row_times_mat(base, perp.form.mat.row(i), &inv))
        .collect();
    Ok(ambient.code_from_flat_rows(rows))
}

/// `<g>° = <f / g>` for a unit-leading divisor `g` of `f`; `NotDivisor`
/// when the division leaves a remainder.
pub fn divisor_dual(ambient: &Ambient, g_coeffs: &[SerialElem]) -> Result<LinearCode> {
    let ring = ambient.ring();
    let px = PolyRing::new(ring);
    let g = px.from_coeffs(g_coeffs.to_vec());
    let f = ambient_poly(ambient);
    match g.degree() {
        None => return Err(Error::NotDivisor("zero generator does not divide f".into())),
        Some(d) => {
            if !ring.is_unit(&px.coeff(&g, d)) {
                return Err(Error::NotDivisor(
                    "generator needs a unit leading coefficient to divide f".into(),
                ));
            }
        }
    }
    let (h, rem) = px.divmod(&f, &g)?;
    if !rem.is_zero() {
        return Err(Error::NotDivisor(
            "generator does not divide f; no divisor dual".into(),
        ));
    }
    Ok(ambient.principal_code(h.coeffs()))
}

/// `f` as a polynomial over the serial ring.
pub fn ambient_poly(ambient: &Ambient) -> Poly<SerialRing> {
    let ring = ambient.ring();
    let mut coeffs: Vec<SerialElem> = ambient.f().iter().map(|c| ring.neg(c)).collect();
    coeffs.push(ring.one());
    PolyRing::new(ring).from_coeffs(coeffs)
}

/// Outcome of the component-wise divisor criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub self_dual: bool,
    pub self_orthogonal: bool,
    pub dual_containing: bool,
    pub lcd: bool,
    /// Per-component verdicts, in the ring's component order.
    pub component_self_dual: Vec<bool>,
    pub component_self_orthogonal: Vec<bool>,
    pub component_dual_containing: Vec<bool>,
    pub component_lcd: Vec<bool>,
}

/// Duality classification of a code against its annihilator dual.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub self_dual: bool,
    pub self_orthogonal: bool,
    pub dual_containing: bool,
    pub lcd: bool,
    /// Sizes of the code and its dual.
    pub code_size: BigUint,
    pub dual_size: BigUint,
    /// Divisor-criterion verdicts, when the code is principal with a
    /// unit-leading generator dividing `f`.
    pub criterion: Option<CriterionReport>,
    /// Whether the criterion (when applicable) agrees with the set route.
    pub route_agreement: bool,
}

/// Classifies a code against its annihilator dual by direct span
/// comparison, and, when a generator with unit leading coefficient dividing
/// `f` is supplied, re-derives the classification from the component-wise
/// divisor criterion.
pub fn classify(
    ambient: &Ambient,
    code: &LinearCode,
    generator: Option<&[SerialElem]>,
) -> Result<DualityReport> {
    let ring = ambient.ring();
    let base = ring.base();
    let dual = annihilator_dual(ambient, code)?;
    let self_dual = span_eq(&code.form, &dual.form);
    let self_orthogonal = span_subset(base, &code.form, &dual.form);
    let dual_containing = span_subset(base, &dual.form, &code.form);
    let inter = intersect_spans(base, &code.form.mat, &dual.form.mat);
    let lcd = span_size(base, &howell(base, &inter)).is_one();

    let mut criterion = None;
    if let Some(g_coeffs) = generator {
        let gen_code = ambient.principal_code(g_coeffs);
        if !span_eq(&gen_code.form, &code.form) {
            return Err(Error::InvalidInput(
                "supplied generator does not generate the code".into(),
            ));
        }
        criterion = divisor_criterion(ambient, g_coeffs)?;
    }
    let route_agreement = match &criterion {
        None => true,
        Some(c) => {
            c.self_dual == self_dual
                && c.self_orthogonal == self_orthogonal
                && c.dual_containing == dual_containing
                && c.lcd == lcd
        }
    };
    Ok(DualityReport {
        self_dual,
        self_orthogonal,
        dual_containing,
        lcd,
        code_size: ambient.code_size(code),
        dual_size: ambient.code_size(&dual),
        criterion,
        route_agreement,
    })
}

/// Component-wise divisor criterion for `C = <g>` with `f = g h`:
/// per component `i`, `C_i` is self-dual iff `f_i = a_i g_i^2` for a unit
/// `a_i`, self-orthogonal iff `h_i | g_i`, dual-containing iff `g_i | h_i`,
/// and LCD iff `gcd` of the residues of `g_i` and `h_i` is 1. Returns
/// `None` when `g` has a non-unit leading coefficient or does not divide
/// `f`.
pub fn divisor_criterion(
    ambient: &Ambient,
    g_coeffs: &[SerialElem],
) -> Result<Option<CriterionReport>> {
    let ring = ambient.ring();
    let px = PolyRing::new(ring);
    let g = px.from_coeffs(g_coeffs.to_vec());
    let f = ambient_poly(ambient);
    let g_deg = match g.degree() {
        None => return Ok(None),
        Some(d) => d,
    };
    if !ring.is_unit(&px.coeff(&g, g_deg)) {
        return Ok(None);
    }
    let (h, rem) = px.divmod(&f, &g)?;
    if !rem.is_zero() {
        return Ok(None);
    }

    let k = ring.components().len();
    let mut report = CriterionReport {
        self_dual: true,
        self_orthogonal: true,
        dual_containing: true,
        lcd: true,
        component_self_dual: Vec::with_capacity(k),
        component_self_orthogonal: Vec::with_capacity(k),
        component_dual_containing: Vec::with_capacity(k),
        component_lcd: Vec::with_capacity(k),
    };
    for ci in 0..k {
        let f_i = comp_poly(ambient, ci, f.coeffs());
        let g_i = comp_poly(ambient, ci, g.coeffs());
        let h_i = comp_poly(ambient, ci, h.coeffs());

        // Self-dual: f_i = a_i g_i^2 with a_i a component unit.
        let sd = {
            let (q1, r1) = comp_divmod(ambient, ci, &f_i, &g_i);
            if !comp_is_zero(ambient, ci, &r1) {
                false
            } else {
                let (q2, r2) = comp_divmod(ambient, ci, &q1, &g_i);
                comp_is_zero(ambient, ci, &r2)
                    && comp_deg(ambient, ci, &q2) == Some(0)
                    && ring.comp_is_unit(ci, &q2[0])
            }
        };
        // Self-orthogonal: h_i divides g_i.
        let so = {
            let (_, r) = comp_divmod(ambient, ci, &g_i, &h_i);
            comp_is_zero(ambient, ci, &r)
        };
        // Dual-containing: g_i divides h_i.
        let dc = {
            let (_, r) = comp_divmod(ambient, ci, &h_i, &g_i);
            comp_is_zero(ambient, ci, &r)
        };
        // LCD: the residues of g_i and h_i are coprime over the component
        // residue field.
        let lc = {
            let field = ring.components()[ci].field();
            let fx = PolyRing::new(field);
            let gbar = comp_residue_poly(ambient, ci, &g_i, field);
            let hbar = comp_residue_poly(ambient, ci, &h_i, field);
            let gcd = fx.gcd(&gbar, &hbar)?;
            gcd.degree() == Some(0)
        };
        report.self_dual &= sd;
        report.self_orthogonal &= so;
        report.dual_containing &= dc;
        report.lcd &= lc;
        report.component_self_dual.push(sd);
        report.component_self_orthogonal.push(so);
        report.component_dual_containing.push(dc);
        report.component_lcd.push(lc);
    }
    Ok(Some(report))
}

/// Projects a coefficient list into a component (no trimming; degree is
/// taken with [`comp_deg`]).
fn comp_poly(ambient: &Ambient, ci: usize, coeffs: &[SerialElem]) -> Vec<SerialElem> {
    coeffs.iter().map(|c| ambient.ring().comp_project(ci, c)).collect()
}

fn comp_is_zero(ambient: &Ambient, ci: usize, p: &[SerialElem]) -> bool {
    comp_deg(ambient, ci, p).is_none()
}

/// Degree within the component: index of the last coefficient whose
/// component projection is nonzero.
fn comp_deg(ambient: &Ambient, ci: usize, p: &[SerialElem]) -> Option<usize> {
    let ring = ambient.ring();
    let mut deg = None;
    for (i, c) in p.iter().enumerate() {
        if !ring.is_zero(&ring.comp_project(ci, c)) {
            deg = Some(i);
        }
    }
    deg
}

/// Long division inside a component; the divisor's leading coefficient must
/// be a component unit (true for projections of unit-leading polynomials).
fn comp_divmod(
    ambient: &Ambient,
    ci: usize,
    num: &[SerialElem],
    den: &[SerialElem],
) -> (Vec<SerialElem>, Vec<SerialElem>) {
    let ring = ambient.ring();
    let dd = comp_deg(ambient, ci, den).expect("component divisor is nonzero");
    let lc_inv = ring
        .comp_invert(ci, &den[dd])
        .expect("component divisor has a unit leading coefficient");
    let mut rem: Vec<SerialElem> = comp_poly(ambient, ci, num);
    let nd = match comp_deg(ambient, ci, &rem) {
        None => return (vec![ring.zero()], rem),
        Some(d) => d,
    };
    if nd < dd {
        return (vec![ring.zero()], rem);
    }
    let mut quot = vec![ring.zero(); nd - dd + 1];
    for shift in (0..=nd - dd).rev() {
        let top = &rem[shift + dd];
        if ring.is_zero(&ring.comp_project(ci, top)) {
            continue;
        }
        let coef = ring.mul(top, &lc_inv);
        quot[shift] = coef.clone();
        for (j, dc) in den.iter().enumerate() {
            let sub = ring.mul(&coef, dc);
            rem[shift + j] = ring.sub(&rem[shift + j], &sub);
        }
    }
    (quot, rem)
}

/// Residue of a component polynomial over the component's abstract field.
fn comp_residue_poly(
    ambient: &Ambient,
    ci: usize,
    p: &[SerialElem],
    field: &FieldExt,
) -> Poly<FieldExt> {
    let fx = PolyRing::new(field);
    fx.from_coeffs(p.iter().map(|c| ambient.ring().comp_to_field(ci, c)).collect())
}

/// Number of polycyclic codes (ideals) in `S[x]/<f>` for a basic
/// irreducible `f` with scalar coefficients: `(e + 1)^k`, where `k` counts
/// the Frobenius orbits of joint root tuples under `nu -> nu^(q^n)`.
pub fn count_codes(ambient: &Ambient) -> Result<CodeCount> {
    let ring = ambient.ring();
    let base = ring.base();
    // Scalar coefficients: f must come from R[x], not just S[x].
    let mut scalar = Vec::with_capacity(ambient.n());
    for (j, c) in ambient.f().iter().enumerate() {
        if c[1..].iter().any(|x| !base.is_zero(x)) {
            return Err(Error::NotBasicIrreducible(format!(
                "coefficient f_{j} is not a scalar; the ideal count formula needs f over the \
                 coefficient ring"
            )));
        }
        scalar.push(c[0].clone());
    }
    // Basic irreducible: the residue of f is irreducible over F_q.
    let rbar = base.residue_field();
    let bx = PolyRing::new(&rbar);
    let mut fbar_coeffs: Vec<ChainElem> =
        scalar.iter().map(|c| rbar.neg(&base.residue(c))).collect();
    fbar_coeffs.push(rbar.one());
    let fbar = bx.from_coeffs(fbar_coeffs);
    if !crate::factor::poly_is_irreducible(&rbar, &fbar) {
        return Err(Error::NotBasicIrreducible(
            "the residue of f is reducible; the ideal count formula does not apply".into(),
        ));
    }
    let orbits = ring.frobenius_orbit_count(ambient.n() as u32)?;
    let count = BigUint::from(base.e() as u64 + 1).pow(orbits.count as u32);
    Ok(CodeCount { count, k: orbits.count })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeCount {
    /// `(e + 1)^k`.
    pub count: BigUint,
    /// Number of chain components of `S[x]/<f>`.
    pub k: usize,
}

/// Counts the ideals of `S[x]/<f>` by exhaustive enumeration: every
/// principal ideal, closed under pairwise sums until a fixpoint. This is
/// the independent, budget-bound route against which [`count_codes`] is
/// validated.
pub fn enumerate_ideal_count(ambient: &Ambient, budget: u64) -> Result<usize> {
    let base = ambient.ring().base();
    let total = ambient.ambient_size();
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded(format!(
            "ambient module has {total} vectors, budget is {budget}"
        )));
    }
    // All vectors of S^n, via the full flat span.
    let full = Mat::identity(base, ambient.flat_len());
    let full_form = howell(base, &full);
    let mut vectors: Vec<Vec<ChainElem>> = Vec::new();
    crate::linalg::enumerate_span(base, &full_form, |row| {
        vectors.push(row.to_vec());
        true
    });
    let mut ideals: BTreeSet<Vec<Vec<ChainElem>>> = BTreeSet::new();
    let mut forms: Vec<Mat> = Vec::new();
    for v in &vectors {
        let code = ambient.ideal_code(&[ambient.unflatten(v)]);
        if ideals.insert(code.form.mat.row_vecs()) {
            forms.push(code.form.mat.clone());
        }
    }
    // Close under sums; nothing new appears when every ideal is principal.
    loop {
        let snapshot = forms.clone();
        let mut grew = false;
        for a in &snapshot {
            for b in &snapshot {
                let sum = howell(base, &Mat::vstack(base, a, b));
                if ideals.insert(sum.mat.row_vecs()) {
                    forms.push(sum.mat.clone());
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(ideals.len());
        }
    }
}

/// All elements of the component subring `e_i R`: the chain-coefficient
/// span of `theta^j e_i` for `j` below the residue degree.
fn component_subring_elements(
    ring: &SerialRing,
    ci: usize,
    cap: u64,
) -> Result<Vec<SerialElem>> {
    let base = ring.base();
    let comp = &ring.components()[ci];
    let mut rows = Vec::with_capacity(comp.residue_degree);
    let mut acc = comp.idempotent.clone();
    for _ in 0..comp.residue_degree {
        rows.push(acc.clone());
        acc = ring.mul(&acc, comp.theta());
    }
    let form = howell(base, &Mat::from_rows(base, rows, ring.dim()));
    let size = span_size(base, &form);
    if size > BigUint::from(cap) {
        return Err(Error::BudgetExceeded(format!(
            "component subring has {size} elements, budget is {cap}"
        )));
    }
    let mut out = Vec::new();
    crate::linalg::enumerate_span(base, &form, |v| {
        out.push(v.to_vec());
        true
    });
    Ok(out)
}

/// Monic divisors of `f` over the whole ring, found per chain component by
/// exhaustive degree-bounded enumeration (every monic candidate over the
/// component subring, tested by component division) and recombined through
/// the idempotents. Divisors come back as ascending coefficient lists; a
/// recombination mixing degrees across components has a zero-divisor
/// leading coefficient, which is fine for generating codes.
///
/// The budget caps both the per-component candidate count and the number
/// of recombinations.
pub fn enumerate_monic_divisors(ambient: &Ambient, budget: u64) -> Result<Vec<Vec<SerialElem>>> {
    let ring = ambient.ring();
    let n = ambient.n();
    let f = ambient_poly(ambient);
    let f_coeffs = f.coeffs();
    let num_comps = ring.components().len();
    let mut per_comp: Vec<Vec<Vec<SerialElem>>> = Vec::with_capacity(num_comps);
    for ci in 0..num_comps {
        let elems = component_subring_elements(ring, ci, budget)?;
        let sz = elems.len() as u128;
        let mut candidates: u128 = 0;
        let mut powd: u128 = 1;
        for _ in 0..=n {
            candidates = candidates.saturating_add(powd);
            powd = powd.saturating_mul(sz);
        }
        if candidates > u128::from(budget) {
            return Err(Error::BudgetExceeded(format!(
                "divisor search would test {candidates} candidates in one component, \
                 budget is {budget}"
            )));
        }
        let f_i = comp_poly(ambient, ci, f_coeffs);
        let ident = ring.components()[ci].idempotent.clone();
        let mut divisors: Vec<Vec<SerialElem>> = Vec::new();
        for d in 0..=n {
            let mut idx = vec![0usize; d];
            'odometer: loop {
                let mut cand: Vec<SerialElem> =
                    idx.iter().map(|&i| elems[i].clone()).collect();
                cand.push(ident.clone());
                let (_, rem) = comp_divmod(ambient, ci, &f_i, &cand);
                if comp_is_zero(ambient, ci, &rem) {
                    divisors.push(cand);
                }
                let mut pos = 0;
                loop {
                    if pos == d {
                        break 'odometer;
                    }
                    idx[pos] += 1;
                    if idx[pos] < elems.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
        per_comp.push(divisors);
    }
    let mut total: u128 = 1;
    for divs in &per_comp {
        total = total.saturating_mul(divs.len() as u128);
    }
    if total > u128::from(budget) {
        return Err(Error::BudgetExceeded(format!(
            "divisor recombination would produce {total} candidates, budget is {budget}"
        )));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; num_comps];
    loop {
        let mut coeffs = vec![ring.zero(); n + 1];
        for (ci, divs) in per_comp.iter().enumerate() {
            for (j, c) in divs[idx[ci]].iter().enumerate() {
                coeffs[j] = ring.add(&coeffs[j], c);
            }
        }
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        out.push(coeffs);
        let mut pos = 0;
        loop {
            if pos == num_comps {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < per_comp[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
