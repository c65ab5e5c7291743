//! Exact linear algebra over chain rings: Howell normal forms, kernels, and
//! span arithmetic.
//!
//! Over `R = GR(p^e, t)` every finitely generated submodule of `R^n` has a
//! canonical generating matrix, its Howell normal form: pivot entries are
//! powers `gamma^v`, pivot columns strictly increase, entries above a pivot
//! are reduced modulo the pivot, and for every column the rows supported on
//! that column onward span every module element supported there. Canonicity
//! makes span equality a plain matrix comparison, and reduction against the
//! form decides membership. The "closure rows" `gamma^(e-v) * pivot row`
//! inserted during elimination are what guarantees the spanning property
//! that plain row echelon forms lack over rings with zero divisors.

use num_bigint::BigUint;
use num_traits::One;

use crate::chain::{ChainElem, ChainRing};
use crate::ring::Ring;

/// Dense row-major matrix over a chain ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<ChainElem>,
}

impl Mat {
    pub fn zeros(ring: &ChainRing, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &ChainRing, n: usize) -> Mat {
        let mut m = Mat::zeros(ring, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ring.one();
        }
        m
    }

    /// Builds a matrix from equal-length rows; `cols` disambiguates the
    /// empty-row-list case.
    pub fn from_rows(ring: &ChainRing, rows: Vec<Vec<ChainElem>>, cols: usize) -> Mat {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        let _ = ring;
        Mat { rows: n, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &ChainElem {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut ChainElem {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ChainElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<ChainElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self, ring: &ChainRing) -> Mat {
        let mut m = Mat::zeros(ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn vstack(ring: &ChainRing, a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.cols, b.cols);
        let _ = ring;
        let mut data = a.data.clone();
        data.extend(b.data.iter().cloned());
        Mat { rows: a.rows + b.rows, cols: a.cols, data }
    }

    pub fn hstack(ring: &ChainRing, a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.rows, b.rows);
        let mut m = Mat::zeros(ring, a.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                *m.at_mut(i, j) = a.at(i, j).clone();
            }
            for j in 0..b.cols {
                *m.at_mut(i, a.cols + j) = b.at(i, j).clone();
            }
        }
        m
    }
}

/// `a * b` over the ring.
pub fn mat_mul(ring: &ChainRing, a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.cols, b.rows);
    let mut out = Mat::zeros(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.at(i, k);
            if ring.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let prod = ring.mul(aik, b.at(k, j));
                let cur = out.at(i, j).clone();
                *out.at_mut(i, j) = ring.add(&cur, &prod);
            }
        }
    }
    out
}

/// `row * m` as a vector.
pub fn row_times_mat(ring: &ChainRing, row: &[ChainElem], m: &Mat) -> Vec<ChainElem> {
    assert_eq!(row.len(), m.rows);
    let mut out = vec![ring.zero(); m.cols];
    for (k, c) in row.iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            let prod = ring.mul(c, m.at(k, j));
            *slot = ring.add(slot, &prod);
        }
    }
    out
}

/// Canonical Howell normal form of a row span.
#[derive(Clone, Debug)]
pub struct HowellForm {
    /// Reduced rows, one per pivot, pivot columns strictly increasing.
    pub mat: Mat,
    /// `(column, gamma-valuation of the pivot)` per row.
    pub pivots: Vec<(usize, u32)>,
    /// When requested: `witness * original = mat` row by row.
    pub witness: Option<Mat>,
}

impl HowellForm {
    pub fn rank_rows(&self) -> usize {
        self.pivots.len()
    }
}

/// Howell normal form of the row span of `m`.
pub fn howell(ring: &ChainRing, m: &Mat) -> HowellForm {
    howell_inner(ring, m, false)
}

/// Howell form that also tracks how each output row combines the input rows.
pub fn howell_with_witness(ring: &ChainRing, m: &Mat) -> HowellForm {
    howell_inner(ring, m, true)
}

fn howell_inner(ring: &ChainRing, m: &Mat, track: bool) -> HowellForm {
    let cols = m.cols;
    let e = ring.e();
    // Working rows paired with their witness over the original rows.
    let mut work: Vec<(Vec<ChainElem>, Vec<ChainElem>)> = (0..m.rows)
        .map(|i| {
            let wit = if track {
                let mut w = vec![ring.zero(); m.rows];
                w[i] = ring.one();
                w
            } else {
                Vec::new()
            };
            (m.row(i).to_vec(), wit)
        })
        .collect();
    let mut active: Vec<usize> = (0..work.len()).collect();
    let mut pivots: Vec<(usize, usize, u32)> = Vec::new(); // (col, work idx, val)

    for col in 0..cols {
        // Minimum-valuation candidate; ties keep the earliest row, so the
        // procedure is deterministic.
        let mut best: Option<(usize, u32)> = None;
        for (pos, &idx) in active.iter().enumerate() {
            let entry = &work[idx].0[col];
            if ring.is_zero(entry) {
                continue;
            }
            let v = ring.gamma_valuation(entry);
            if best.is_none_or(|(_, bv)| v < bv) {
                best = Some((pos, v));
            }
        }
        let Some((pos, v)) = best else { continue };
        let idx = active.remove(pos);
        // Normalize the pivot entry to exactly gamma^v.
        let unit = ring.unit_part(&work[idx].0[col]);
        let uinv = ring.invert(&unit).expect("unit part is a unit");
        scale_row(ring, &mut work[idx], &uinv);
        // Eliminate the column from the remaining active rows; every entry
        // has valuation >= v, so the quotient is exact.
        let pivot_row = work[idx].clone();
        for &other in &active {
            let entry = work[other].0[col].clone();
            if ring.is_zero(&entry) {
                continue;
            }
            let w = ring.div_exact_gamma(&entry, v);
            sub_scaled(ring, &mut work[other], &pivot_row, &w);
            debug_assert!(ring.is_zero(&work[other].0[col]));
        }
        // Closure row: gamma^(e-v) times the pivot row spans the torsion part
        // supported strictly to the right of this column.
        if v > 0 {
            let gpow = ring.gamma_pow(e - v);
            let mut closure = work[idx].clone();
            scale_row(ring, &mut closure, &gpow);
            closure.0[col] = ring.zero(); // gamma^e = 0 exactly
            if closure.0.iter().any(|c| !ring.is_zero(c)) {
                work.push(closure);
                active.push(work.len() - 1);
            }
        }
        pivots.push((col, idx, v));
    }
    debug_assert!(
        active.iter().all(|&i| work[i].0.iter().all(|c| ring.is_zero(c))),
        "leftover active rows must be zero"
    );

    // Reduce entries above each pivot to canonical representatives mod the
    // pivot valuation.
    for j in 0..pivots.len() {
        let (cj, idxj, vj) = pivots[j];
        let pivot_row = work[idxj].clone();
        for &(_, idxi, _) in pivots.iter().take(j) {
            let entry = work[idxi].0[cj].clone();
            if ring.is_zero(&entry) {
                continue;
            }
            let q = ring.div_floor_gamma(&entry, vj);
            if ring.is_zero(&q) {
                continue;
            }
            sub_scaled(ring, &mut work[idxi], &pivot_row, &q);
        }
    }

    let out_rows: Vec<Vec<ChainElem>> = pivots.iter().map(|&(_, idx, _)| work[idx].0.clone()).collect();
    let wit = if track {
        let rows: Vec<Vec<ChainElem>> = pivots.iter().map(|&(_, idx, _)| work[idx].1.clone()).collect();
        Some(Mat::from_rows(ring, rows, m.rows))
    } else {
        None
    };
    HowellForm {
        mat: Mat::from_rows(ring, out_rows, cols),
        pivots: pivots.into_iter().map(|(c, _, v)| (c, v)).collect(),
        witness: wit,
    }
}

fn scale_row(ring: &ChainRing, row: &mut (Vec<ChainElem>, Vec<ChainElem>), c: &ChainElem) {
    for x in row.0.iter_mut() {
        *x = ring.mul(x, c);
    }
    for x in row.1.iter_mut() {
        *x = ring.mul(x, c);
    }
}

fn sub_scaled(
    ring: &ChainRing,
    row: &mut (Vec<ChainElem>, Vec<ChainElem>),
    other: &(Vec<ChainElem>, Vec<ChainElem>),
    c: &ChainElem,
) {
    for (x, y) in row.0.iter_mut().zip(&other.0) {
        *x = ring.sub(x, &ring.mul(c, y));
    }
    for (x, y) in row.1.iter_mut().zip(&other.1) {
        *x = ring.sub(x, &ring.mul(c, y));
    }
}

/// Number of elements of the row span: the product over pivots of
/// `p^(t (e - v))`, since row `j` contributes multiplier classes modulo
/// `gamma^(e - v_j)`.
pub fn span_size(ring: &ChainRing, h: &HowellForm) -> BigUint {
    let mut size = BigUint::one();
    for &(_, v) in &h.pivots {
        size *= BigUint::from(ring.p()).pow(ring.t() * (ring.e() - v));
    }
    size
}

/// Reduces `v` against the form; `Some(reduction coefficients)` (one per form
/// row) when `v` lies in the span, `None` otherwise.
fn reduce_against(ring: &ChainRing, h: &HowellForm, v: &[ChainElem]) -> Option<Vec<ChainElem>> {
    assert_eq!(v.len(), h.mat.cols);
    let mut cur = v.to_vec();
    let mut coeffs = vec![ring.zero(); h.mat.rows];
    for (j, &(col, val)) in h.pivots.iter().enumerate() {
        let entry = cur[col].clone();
        if ring.is_zero(&entry) {
            continue;
        }
        if ring.gamma_valuation(&entry) < val {
            return None;
        }
        let w = ring.div_exact_gamma(&entry, val);
        for (x, y) in cur.iter_mut().zip(h.mat.row(j)) {
            *x = ring.sub(x, &ring.mul(&w, y));
        }
        coeffs[j] = w;
    }
    if cur.iter().all(|c| ring.is_zero(c)) {
        Some(coeffs)
    } else {
        None
    }
}

/// Whether `v` lies in the row span.
pub fn span_member(ring: &ChainRing, h: &HowellForm, v: &[ChainElem]) -> bool {
    reduce_against(ring, h, v).is_some()
}

/// Expresses `v` as a combination of the ORIGINAL rows the form was built
/// from; requires a witness-tracking form. `None` when `v` is outside the span.
pub fn solve_in_span(ring: &ChainRing, h: &HowellForm, v: &[ChainElem]) -> Option<Vec<ChainElem>> {
    let wit = h.witness.as_ref().expect("solve_in_span needs howell_with_witness");
    let coeffs = reduce_against(ring, h, v)?;
    Some(row_times_mat(ring, &coeffs, wit))
}

/// Whether every row of `sub` lies in the span of `sup`.
pub fn span_subset(ring: &ChainRing, sub: &HowellForm, sup: &HowellForm) -> bool {
    (0..sub.mat.rows).all(|i| span_member(ring, sup, sub.mat.row(i)))
}

/// Span equality; Howell forms are canonical so this is a matrix comparison.
pub fn span_eq(a: &HowellForm, b: &HowellForm) -> bool {
    a.mat == b.mat
}

/// Generators of the kernel `{ v : m v^T = 0 }`, i.e. the vectors
/// orthogonal-by-evaluation to all rows of `m`.
///
/// Computed as the rows of `Howell([m^T | I])` whose left block vanished: any
/// reduction of `(0 | y)` against the form only ever uses such rows, so they
/// generate the whole kernel.
pub fn kernel(ring: &ChainRing, m: &Mat) -> Mat {
    let mt = m.transpose(ring);
    let aug = Mat::hstack(ring, &mt, &Mat::identity(ring, m.cols));
    let h = howell(ring, &aug);
    let mut rows = Vec::new();
    for i in 0..h.mat.rows {
        if (0..m.rows).all(|j| ring.is_zero(h.mat.at(i, j))) {
            rows.push(h.mat.row(i)[m.rows..].to_vec());
        }
    }
    Mat::from_rows(ring, rows, m.cols)
}

/// Generators of the intersection of the row spans of `a` and `b`: left-kernel
/// vectors `(x, y)` of the stack `[a; b]` satisfy `x a = -y b`, so the `x a`
/// all lie in both spans, and every common element shows up this way.
pub fn intersect_spans(ring: &ChainRing, a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.cols, b.cols);
    let stacked = Mat::vstack(ring, a, b);
    let left_kernel = kernel(ring, &stacked.transpose(ring));
    let mut rows = Vec::new();
    for i in 0..left_kernel.rows {
        let z = left_kernel.row(i);
        rows.push(row_times_mat(ring, &z[..a.rows], a));
    }
    Mat::from_rows(ring, rows, a.cols)
}

/// Visits every vector of the row span exactly once, the zero vector first.
/// `visit` returns `false` to stop early; the return value reports whether
/// the enumeration ran to completion.
pub fn enumerate_span(
    ring: &ChainRing,
    h: &HowellForm,
    mut visit: impl FnMut(&[ChainElem]) -> bool,
) -> bool {
    let rows = h.mat.rows;
    let cols = h.mat.cols;
    let t = ring.t() as usize;
    // Row j's multiplier ranges over representatives modulo gamma^(e - v_j):
    // t digits, each in [0, p^(e - v_j)).
    let limits: Vec<u64> = h.pivots.iter().map(|&(_, v)| ring.p().pow(ring.e() - v)).collect();
    let mut digits: Vec<Vec<u64>> = vec![vec![0; t]; rows];
    // suffix[j] = sum over i >= j of mult_i * row_i; suffix[rows] = 0.
    let mut suffix: Vec<Vec<ChainElem>> = vec![vec![ring.zero(); cols]; rows + 1];
    loop {
        if !visit(&suffix[0]) {
            return false;
        }
        // Odometer step: row 0 fastest. Incrementing row k only invalidates
        // suffix[0..=k], which we rebuild from suffix[k+1] downward.
        let mut k = 0;
        'carry: loop {
            if k == rows {
                return true; // wrapped around: enumeration complete
            }
            for d in digits[k].iter_mut() {
                *d += 1;
                if *d < limits[k] {
                    break 'carry;
                }
                *d = 0;
            }
            k += 1;
        }
        for j in (0..=k).rev() {
            let mult = ChainElem(digits[j].clone());
            let mut acc = suffix[j + 1].clone();
            if !ring.is_zero(&mult) {
                for (x, y) in acc.iter_mut().zip(h.mat.row(j)) {
                    *x = ring.add(x, &ring.mul(&mult, y));
                }
            }
            suffix[j] = acc;
        }
    }
}
