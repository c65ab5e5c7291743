//! Stabilizer code parameters from pairs of polycyclic codes, plus Gray
//! maps.
//!
//! The annihilator construction takes two free module codes `C_1, C_2` in
//! `S[x]/<f>` with `C_2° subset C_1` and produces an `[[n, k_1 + k_2 - n,
//! d]]` stabilizer code over an alphabet of size `|S|`, where
//!
//! `d = min weight over (C_1 \ C_2°) union (C_2 A \ C_1° A)`
//!
//! and `A` is the Gram matrix. The second set is the Gram twist of
//! `C_2 \ C_1°`: the construction pairs `C_1` with `C_2 A` under the plain
//! Euclidean form, since `C_2° = (C_2 A)^perp` and `C_1^perp = C_1° A`.
//! The Euclidean construction is the same recipe with `C^perp` in place of
//! `C°` and no twist.
//!
//! Distances enumerate the difference sets outright when they fit the
//! budget, and otherwise per chain component, which is exact: a codeword
//! outside a submodule has a component projection outside the corresponding
//! component submodule, of no larger weight, and such projections belong to
//! the difference set themselves.

use num_bigint::BigUint;

use crate::chain::ChainElem;
use crate::code::{Ambient, LinearCode};
use crate::duality::{annihilator_dual, code_times_gram, euclidean_dual, gram_matrix};
use crate::error::{Error, Result};
use crate::linalg::{enumerate_span, span_member, span_size, span_subset};
use crate::ring::Ring;
use crate::serial::{SerialElem, SerialRing};

/// Parameters `[[n, k, d]]` of a constructed stabilizer code, over an
/// alphabet of `q_base` levels per symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Alphabet size per symbol: the number of elements of the serial ring.
    pub q_base: BigUint,
    /// Free ranks of the two ingredient codes.
    pub k1: usize,
    pub k2: usize,
}

/// The annihilator construction; see the module docs. Errors:
/// `NonUnitConstant` when `f_0` is not a unit, `NonFree` when either code
/// is not free, `NotDualContaining` when `C_2°` is not contained in `C_1`,
/// `ZeroCode` when `k = 0` (both difference sets are empty), and
/// `BudgetExceeded` when neither the whole codes nor their components fit
/// the enumeration budget.
pub fn css_construct(
    ambient: &Ambient,
    c1: &LinearCode,
    c2: &LinearCode,
    budget: u64,
) -> Result<CssReport> {
    let (k1, k2) = free_ranks(ambient, c1, c2)?;
    let c2_ann = annihilator_dual(ambient, c2)?;
    let base = ambient.ring().base();
    if !span_subset(base, &c2_ann.form, &c1.form) {
        return Err(Error::NotDualContaining(
            "the annihilator dual of C2 is not contained in C1".into(),
        ));
    }
    let n = ambient.n();
    let k = k1 + k2 - n;
    if k == 0 {
        return Err(Error::ZeroCode(
            "C1 equals the annihilator dual of C2: the stabilizer code has no logical \
             symbols and both difference sets are empty"
                .into(),
        ));
    }
    let gram = gram_matrix(ambient);
    let c1_ann = annihilator_dual(ambient, c1)?;
    let c2_twisted = code_times_gram(ambient, c2, &gram);
    let c1_ann_twisted = code_times_gram(ambient, &c1_ann, &gram);
    let d_x = diff_min_weight(ambient, c1, &c2_ann, budget)?;
    let d_z = diff_min_weight(ambient, &c2_twisted, &c1_ann_twisted, budget)?;
    Ok(CssReport {
        n,
        k,
        d: d_x.min(d_z),
        q_base: ambient.ring().size(),
        k1,
        k2,
    })
}

/// The Euclidean construction: requires `C_2^perp subset C_1`; the distance
/// runs over `(C_1 \ C_2^perp) union (C_2 \ C_1^perp)`.
pub fn euclidean_css(
    ambient: &Ambient,
    c1: &LinearCode,
    c2: &LinearCode,
    budget: u64,
) -> Result<CssReport> {
    let (k1, k2) = free_ranks(ambient, c1, c2)?;
    let base = ambient.ring().base();
    let c2_perp = euclidean_dual(ambient, c2);
    if !span_subset(base, &c2_perp.form, &c1.form) {
        return Err(Error::NotDualContaining(
            "the Euclidean dual of C2 is not contained in C1".into(),
        ));
    }
    let n = ambient.n();
    let k = k1 + k2 - n;
    if k == 0 {
        return Err(Error::ZeroCode(
            "C1 equals the Euclidean dual of C2: the stabilizer code has no logical \
             symbols and both difference sets are empty"
                .into(),
        ));
    }
    let c1_perp = euclidean_dual(ambient, c1);
    let d_x = diff_min_weight(ambient, c1, &c2_perp, budget)?;
    let d_z = diff_min_weight(ambient, c2, &c1_perp, budget)?;
    Ok(CssReport {
        n,
        k,
        d: d_x.min(d_z),
        q_base: ambient.ring().size(),
        k1,
        k2,
    })
}

fn free_ranks(ambient: &Ambient, c1: &LinearCode, c2: &LinearCode) -> Result<(usize, usize)> {
    let p1 = ambient.code_profile(c1)?;
    let p2 = ambient.code_profile(c2)?;
    match (p1.rank, p2.rank) {
        (Some(k1), Some(k2)) => Ok((k1, k2)),
        _ => Err(Error::NonFree(
            "both ingredient codes must be free for well-defined stabilizer parameters".into(),
        )),
    }
}

/// Minimum symbol weight over `big \ small` for `small subset big`,
/// `small != big`, both S-modules. Whole enumeration within budget, else
/// exact componentwise fallback.
fn diff_min_weight(
    ambient: &Ambient,
    big: &LinearCode,
    small: &LinearCode,
    budget: u64,
) -> Result<usize> {
    let ring = ambient.ring();
    let base = ring.base();
    let total = span_size(base, &big.form);
    let budget_big = BigUint::from(budget);
    if total <= budget_big {
        return diff_min_weight_direct(ambient, &big.form, &small.form)
            .ok_or_else(|| Error::Internal("difference set unexpectedly empty".into()));
    }
    if !ambient.is_module_closed(big) || !ambient.is_module_closed(small) {
        return Err(Error::BudgetExceeded(format!(
            "difference set over {total} words exceeds the budget {budget} and the codes \
             are not modules over the ring, so the componentwise route does not apply"
        )));
    }
    let big_comps = ambient.decompose_code(big);
    let small_comps = ambient.decompose_code(small);
    let sum: BigUint = big_comps.iter().map(|c| span_size(base, &c.form)).sum();
    if sum > budget_big {
        return Err(Error::BudgetExceeded(format!(
            "component codes have {sum} words in total, budget is {budget}"
        )));
    }
    let mut best: Option<usize> = None;
    for (bc, sc) in big_comps.iter().zip(&small_comps) {
        if let Some(w) = diff_min_weight_direct(ambient, &bc.form, &sc.form) {
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best.ok_or_else(|| Error::Internal("difference set unexpectedly empty".into()))
}

fn diff_min_weight_direct(
    ambient: &Ambient,
    big: &crate::linalg::HowellForm,
    small: &crate::linalg::HowellForm,
) -> Option<usize> {
    let ring = ambient.ring();
    let base = ring.base();
    let m = ring.dim();
    let mut best: Option<usize> = None;
    enumerate_span(base, big, |row| {
        if span_member(base, small, row) {
            return true;
        }
        let w = row
            .chunks(m)
            .filter(|chunk| chunk.iter().any(|c| !base.is_zero(c)))
            .count();
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        best != Some(1)
    });
    best
}

/// Symbol-level Gray maps into base-ring coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrayMap {
    /// The coefficient expansion itself: a symbol maps to its `m`
    /// coordinates.
    Phi,
    /// The classical length-4 map for two quadratic variables `u, v`:
    /// `1 -> 1111`, `u -> 0101`, `v -> 0011`, `uv -> 0001`.
    Ashraf4,
}

impl GrayMap {
    pub fn parse(s: &str) -> Result<GrayMap> {
        match s {
            "phi" => Ok(GrayMap::Phi),
            "ashraf4" => Ok(GrayMap::Ashraf4),
            other => Err(Error::InvalidInput(format!(
                "unknown Gray map {other:?}; expected \"phi\" or \"ashraf4\""
            ))),
        }
    }

    /// Gray image length of one symbol; checks the ring shape.
    pub fn output_len(&self, ring: &SerialRing) -> Result<usize> {
        match self {
            GrayMap::Phi => Ok(ring.dim()),
            GrayMap::Ashraf4 => {
                let quadratic_pair = ring.num_vars() == 2
                    && ring.moduli().iter().all(|t| t.degree() == Some(2));
                if !quadratic_pair {
                    return Err(Error::MapMismatch(format!(
                        "the ashraf4 map needs two quadratic variable moduli; the ring is {}",
                        ring.describe()
                    )));
                }
                Ok(4)
            }
        }
    }
}

/// Gray image of a single symbol.
pub fn gray_symbol(ring: &SerialRing, map: GrayMap, sym: &[ChainElem]) -> Result<Vec<ChainElem>> {
    map.output_len(ring)?;
    match map {
        GrayMap::Phi => Ok(sym.to_vec()),
        GrayMap::Ashraf4 => {
            let base = ring.base();
            let (a, b, c, d) = (&sym[0], &sym[1], &sym[2], &sym[3]);
            let ab = base.add(a, b);
            let ac = base.add(a, c);
            let abcd = base.add(&base.add(&ab, c), d);
            Ok(vec![a.clone(), ab, ac, abcd])
        }
    }
}

/// Gray image of a word of ring symbols, one block per symbol.
pub fn gray_expand(ring: &SerialRing, map: GrayMap, word: &[SerialElem]) -> Result<Vec<ChainElem>> {
    let mut out = Vec::with_capacity(word.len() * map.output_len(ring)?);
    for sym in word {
        out.extend(gray_symbol(ring, map, sym)?);
    }
    Ok(out)
}

/// Gray image of a flattened codeword, symbol block by symbol block.
pub fn gray_expand_flat(
    ring: &SerialRing,
    map: GrayMap,
    flat: &[ChainElem],
) -> Result<Vec<ChainElem>> {
    let m = ring.dim();
    assert_eq!(flat.len() % m, 0);
    let mut out = Vec::with_capacity(flat.len() / m * map.output_len(ring)?);
    for chunk in flat.chunks(m) {
        out.extend(gray_symbol(ring, map, chunk)?);
    }
    Ok(out)
}

/// Minimum Hamming weight (in base-ring coordinates) of the Gray images of
/// the nonzero codewords.
///
/// Gray weights are not compatible with idempotent projections, so there is
/// no componentwise shortcut here: the whole code must fit the budget.
pub fn gray_min_distance(
    ambient: &Ambient,
    code: &LinearCode,
    map: GrayMap,
    budget: u64,
) -> Result<usize> {
    let ring = ambient.ring();
    let base = ring.base();
    map.output_len(ring)?;
    let total = ambient.code_size(code);
    if total == BigUint::from(1u32) {
        return Err(Error::ZeroCode("Gray distance of the zero code".into()));
    }
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded(format!(
            "Gray distance needs whole-code enumeration: {total} words, budget {budget}"
        )));
    }
    let mut best: Option<usize> = None;
    let mut failure: Option<Error> = None;
    enumerate_span(base, &code.form, |row| {
        if row.iter().all(|c| base.is_zero(c)) {
            return true;
        }
        let image = match gray_expand_flat(ring, map, row) {
            Ok(img) => img,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        let w = image.iter().filter(|c| !base.is_zero(c)).count();
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        best != Some(1)
    });
    if let Some(e) = failure {
        return Err(e);
    }
    best.ok_or_else(|| Error::Internal("nonzero code with no nonzero words".into()))
}
