//! Polynomial factorization over finite fields and Hensel lifting to chain
//! rings.
//!
//! Factorization runs distinct-degree splitting followed by equal-degree
//! (Cantor-Zassenhaus) splitting, with the p = 2 case handled by trace maps.
//! The random choices use a fixed-seed ChaCha stream and the factor list is
//! sorted (degree, then ascending coefficient lex), so results are fully
//! deterministic. Every factorization is verified before it is returned:
//! the factors are re-multiplied and each factor is checked irreducible.
//!
//! Hensel lifting refines a coprime residue factorization of a monic
//! polynomial over `GR(p^e, t)` to an exact factorization over the ring,
//! doubling the gamma-adic precision per round. Primitive idempotents of
//! `R[x]/<t>` for square-free `t` are produced the same way: Bezout
//! idempotents over the residue field, then the refinement
//! `eps <- 3 eps^2 - 2 eps^3` until exactly idempotent.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain::{ChainElem, ChainRing};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{FiniteField, Ring};

/// Seed for the equal-degree splitting stream; fixed so factorizations are
/// reproducible run to run.
const SPLIT_SEED: u64 = 0x0F5E_ED00;

/// Whether a polynomial is irreducible over a finite field.
///
/// Uses the subfield criterion: `u` of degree n has an irreducible factor of
/// degree d <= n/2 exactly when `gcd(x^(q^d) - x, u)` is nonconstant.
pub fn poly_is_irreducible<F: FiniteField>(field: &F, u: &Poly<F>) -> bool {
    let px = PolyRing::new(field);
    let n = match u.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let u = match px.monic(u) {
        Ok(u) => u,
        Err(_) => return false,
    };
    let q = field.order();
    let mut w = px.x();
    for _ in 1..=n / 2 {
        w = px.pow_mod(&w, &q, &u).expect("monic modulus");
        let diff = px.sub(&w, &px.x());
        let g = px.gcd(&diff, &u).expect("field gcd");
        if g.degree().is_some_and(|d| d > 0) {
            return false;
        }
    }
    true
}

/// Whether a monic polynomial over a chain ring is square-free modulo gamma,
/// i.e. its residue has no repeated factor over the residue field.
pub fn is_square_free(ring: &ChainRing, t: &Poly<ChainRing>) -> Result<bool> {
    let rx = PolyRing::new(ring);
    if !rx.is_monic(t) {
        return Err(Error::NotMonic(format!(
            "square-freeness is defined for monic polynomials over {}",
            ring.describe()
        )));
    }
    let rbar = ring.residue_field();
    let tbar = residue_poly(ring, t);
    let bx = PolyRing::new(&rbar);
    let g = bx.gcd(&tbar, &bx.derivative(&tbar))?;
    Ok(g.degree() == Some(0))
}

/// Reduces a polynomial over a chain ring coefficient-wise to the residue field.
pub fn residue_poly(ring: &ChainRing, p: &Poly<ChainRing>) -> Poly<ChainRing> {
    let rbar = ring.residue_field();
    let bx = PolyRing::new(&rbar);
    bx.from_coeffs(p.coeffs().iter().map(|c| ring.residue(c)).collect())
}

/// Lifts a polynomial over the residue field coefficient-wise to the ring.
pub fn lift_poly(ring: &ChainRing, p: &Poly<ChainRing>) -> Poly<ChainRing> {
    let rx = PolyRing::new(ring);
    rx.from_coeffs(p.coeffs().iter().map(|c| ring.lift(c)).collect())
}

/// Factors a square-free polynomial with unit leading coefficient into monic
/// irreducibles over a finite field.
///
/// The list is sorted by degree, then lexicographically on the ascending
/// coefficient vectors, and is verified (product and irreducibility) before
/// being returned. `NotSquareFree` if the input has a repeated factor.
pub fn factor_over_field<F: FiniteField>(field: &F, u: &Poly<F>) -> Result<Vec<Poly<F>>> {
    if !field.is_field() {
        return Err(Error::NotAField(field.describe()));
    }
    let px = PolyRing::new(field);
    let u = px.monic(u)?;
    let n = u.degree().expect("monic polynomial is nonzero");
    if n == 0 {
        return Ok(Vec::new());
    }
    let g = px.gcd(&u, &px.derivative(&u))?;
    if g.degree() != Some(0) {
        return Err(Error::NotSquareFree(format!(
            "polynomial of degree {n} over {}",
            field.describe()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut factors = distinct_degree_split(field, &u, &mut rng)?;
    factors.sort();
    // Verification: factors multiply back to u and are irreducible.
    let mut prod = px.one();
    for f in &factors {
        prod = px.mul(&prod, f);
        if !poly_is_irreducible(field, f) {
            return Err(Error::Internal("reducible factor escaped splitting".into()));
        }
    }
    if prod != u {
        return Err(Error::Internal("factor product does not match input".into()));
    }
    Ok(factors)
}

/// Distinct-degree stage: peels off the product of all irreducible factors of
/// each degree d, then splits it with [`equal_degree_all`].
fn distinct_degree_split<F: FiniteField>(
    field: &F,
    u: &Poly<F>,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Poly<F>>> {
    let px = PolyRing::new(field);
    let q = field.order();
    let mut out = Vec::new();
    let mut rest = u.clone();
    let mut w = px.x();
    let mut d = 0usize;
    while rest.degree().is_some_and(|dr| dr > 0) {
        d += 1;
        let dr = rest.degree().expect("nonconstant");
        if 2 * d > dr {
            // Whatever remains is a single irreducible factor.
            out.push(rest);
            break;
        }
        w = px.pow_mod(&w, &q, &rest)?;
        let diff = px.sub(&w, &px.x());
        let g = px.gcd(&diff, &rest)?;
        if g.degree().is_some_and(|dg| dg > 0) {
            out.extend(equal_degree_all(field, &g, d, rng)?);
            let (quot, rem) = px.divmod(&rest, &g)?;
            debug_assert!(rem.is_zero(), "distinct-degree product must divide");
            rest = quot;
            w = px.rem(&w, &rest)?;
        }
    }
    Ok(out)
}

/// Splits a product of distinct irreducibles of known common degree d.
fn equal_degree_all<F: FiniteField>(
    field: &F,
    g: &Poly<F>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Poly<F>>> {
    let px = PolyRing::new(field);
    let dg = g.degree().expect("nonconstant product");
    if dg == d {
        return Ok(vec![g.clone()]);
    }
    loop {
        if let Some(h) = try_equal_degree_split(field, g, d, rng)? {
            let (other, rem) = px.divmod(g, &h)?;
            debug_assert!(rem.is_zero(), "splitting factor must divide");
            let mut out = equal_degree_all(field, &h, d, rng)?;
            out.extend(equal_degree_all(field, &other, d, rng)?);
            return Ok(out);
        }
    }
}

/// One randomized splitting attempt; `None` when the random element fails to
/// separate the factors (probability at most 1/2 per attempt).
fn try_equal_degree_split<F: FiniteField>(
    field: &F,
    g: &Poly<F>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Poly<F>>> {
    let px = PolyRing::new(field);
    let dg = g.degree().expect("nonconstant");
    let a = px.from_coeffs((0..dg).map(|_| field.sample(rng)).collect());
    if a.degree().is_none_or(|da| da == 0) {
        return Ok(None);
    }
    let shared = px.gcd(&a, g)?;
    if shared.degree().is_some_and(|ds| ds > 0 && ds < dg) {
        return Ok(Some(shared));
    }
    let candidate = if field.characteristic() == 2 {
        // Trace map over F_2: T(a) = sum of a^(2^i) for i < k d, where the
        // field has order 2^k. Its gcd with g separates the factors.
        let k = field.degree_over_prime() as usize;
        let mut acc = px.rem(&a, g)?;
        let mut term = px.rem(&a, g)?;
        for _ in 1..k * d {
            term = px.mulmod(&term, &term, g)?;
            acc = px.add(&acc, &term);
        }
        acc
    } else {
        // a^((q^d - 1)/2) - 1 vanishes on about half the factors.
        let exp = (field.order().pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
        let b = px.pow_mod(&a, &exp, g)?;
        px.sub(&b, &px.one())
    };
    let h = px.gcd(&candidate, g)?;
    match h.degree() {
        Some(dh) if dh > 0 && dh < dg => Ok(Some(h)),
        _ => Ok(None),
    }
}

/// Full factorization over a finite field, repeated factors included:
/// returns `(irreducible, multiplicity)` pairs sorted by factor.
pub fn factor_with_multiplicity<F: FiniteField>(
    field: &F,
    u: &Poly<F>,
) -> Result<Vec<(Poly<F>, u32)>> {
    if !field.is_field() {
        return Err(Error::NotAField(field.describe()));
    }
    let px = PolyRing::new(field);
    let u = px.monic(u)?;
    let mut parts: Vec<(Poly<F>, u32)> = Vec::new();
    squarefree_parts(field, &u, 1, &mut parts)?;
    let mut out = Vec::new();
    for (part, mult) in parts {
        for f in factor_over_field(field, &part)? {
            out.push((f, mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Square-free decomposition over a perfect field of characteristic p.
/// Appends `(square-free part, multiplicity)` pairs; parts are coprime.
fn squarefree_parts<F: FiniteField>(
    field: &F,
    u: &Poly<F>,
    mult_scale: u32,
    out: &mut Vec<(Poly<F>, u32)>,
) -> Result<()> {
    let px = PolyRing::new(field);
    if u.degree().is_none_or(|d| d == 0) {
        return Ok(());
    }
    let der = px.derivative(u);
    if der.is_zero() {
        // u = v(x^p): take the p-th root and scale multiplicities.
        let v = pth_root(field, u);
        return squarefree_parts(field, &v, mult_scale * field.characteristic() as u32, out);
    }
    let mut g = px.gcd(u, &der)?;
    let (mut w, rem) = px.divmod(u, &g)?;
    debug_assert!(rem.is_zero());
    let mut i = 1u32;
    while w.degree().is_some_and(|d| d > 0) {
        let y = px.gcd(&w, &g)?;
        let (z, rem) = px.divmod(&w, &y)?;
        debug_assert!(rem.is_zero());
        if z.degree().is_some_and(|d| d > 0) {
            out.push((z, i * mult_scale));
        }
        let (gq, rem) = px.divmod(&g, &y)?;
        debug_assert!(rem.is_zero());
        w = y;
        g = gq;
        i += 1;
    }
    if g.degree().is_some_and(|d| d > 0) {
        // Leftover factors have multiplicity divisible by p.
        let v = pth_root(field, &g);
        squarefree_parts(field, &v, mult_scale * field.characteristic() as u32, out)?;
    }
    Ok(())
}

/// p-th root of a polynomial with zero derivative: u = sum c_j x^(jp) maps to
/// sum c_j^(q/p) x^j, since c -> c^(q/p) inverts Frobenius on F_q.
fn pth_root<F: FiniteField>(field: &F, u: &Poly<F>) -> Poly<F> {
    let px = PolyRing::new(field);
    let p = field.characteristic() as usize;
    let root_exp = field.order() / BigUint::from(field.characteristic());
    let mut coeffs = Vec::new();
    for (j, c) in u.coeffs().iter().enumerate() {
        if j % p == 0 {
            coeffs.push(field.pow_big(c, &root_exp));
        } else {
            debug_assert!(field.is_zero(c), "derivative-zero polynomial");
        }
    }
    px.from_coeffs(coeffs)
}

/// Lifts a coprime monic residue factorization of a monic `f` over
/// `GR(p^e, t)` to an exact factorization `f = prod(lifted)` over the ring.
///
/// `parts` are monic polynomials over the residue field, pairwise coprime,
/// whose product is the residue of `f`. The lifted factors are returned in
/// the same order, each congruent to its part modulo gamma, and the exact
/// product identity is verified before returning.
pub fn hensel_lift_factors(
    ring: &ChainRing,
    f: &Poly<ChainRing>,
    parts: &[Poly<ChainRing>],
) -> Result<Vec<Poly<ChainRing>>> {
    let rx = PolyRing::new(ring);
    if !rx.is_monic(f) {
        return Err(Error::NotMonic(format!("lifting target over {}", ring.describe())));
    }
    let rbar = ring.residue_field();
    let bx = PolyRing::new(&rbar);
    let mut prod = bx.one();
    for part in parts {
        if !bx.is_monic(part) {
            return Err(Error::NotMonic("residue factor".into()));
        }
        prod = bx.mul(&prod, part);
    }
    if prod != residue_poly(ring, f) {
        return Err(Error::InvalidInput(
            "residue factors do not multiply to the residue of f".into(),
        ));
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let g = bx.gcd(a, b)?;
            if g.degree() != Some(0) {
                return Err(Error::NotSquareFree(
                    "residue factors share a common divisor".into(),
                ));
            }
        }
    }
    if ring.e() == 1 {
        return Ok(parts.iter().map(|p| lift_poly(ring, p)).collect());
    }
    lift_split(ring, f, parts)
}

fn lift_split(
    ring: &ChainRing,
    f: &Poly<ChainRing>,
    parts: &[Poly<ChainRing>],
) -> Result<Vec<Poly<ChainRing>>> {
    if parts.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let rbar = ring.residue_field();
    let bx = PolyRing::new(&rbar);
    let mid = parts.len() / 2;
    let mut gbar = bx.one();
    for p in &parts[..mid] {
        gbar = bx.mul(&gbar, p);
    }
    let mut hbar = bx.one();
    for p in &parts[mid..] {
        hbar = bx.mul(&hbar, p);
    }
    let (g, h) = lift_pair(ring, f, &gbar, &hbar)?;
    let mut out = lift_split(ring, &g, &parts[..mid])?;
    out.extend(lift_split(ring, &h, &parts[mid..])?);
    Ok(out)
}

/// Minimum gamma-adic valuation over the coefficients; `e` for the zero poly.
fn poly_valuation(ring: &ChainRing, p: &Poly<ChainRing>) -> u32 {
    p.coeffs()
        .iter()
        .map(|c| ring.gamma_valuation(c))
        .min()
        .unwrap_or_else(|| ring.e())
}

/// Keeps coefficients up to degree `d` and pins the degree-`d` coefficient
/// to one. The discarded data is divisible by the current error valuation,
/// so the quadratic convergence argument is unaffected; the caller verifies
/// the exact product identity at the end regardless.
fn truncate_monic(
    rx: &PolyRing<ChainRing>,
    p: &Poly<ChainRing>,
    d: usize,
) -> Poly<ChainRing> {
    let mut coeffs: Vec<ChainElem> = (0..=d).map(|i| rx.coeff(p, i)).collect();
    coeffs[d] = rx.base.one();
    rx.from_coeffs(coeffs)
}

/// Quadratic Hensel step, iterated to exactness: given coprime monic residue
/// polynomials with `gbar * hbar = residue(f)`, produces monic `g, h` over the
/// ring with `f = g * h` exactly.
fn lift_pair(
    ring: &ChainRing,
    f: &Poly<ChainRing>,
    gbar: &Poly<ChainRing>,
    hbar: &Poly<ChainRing>,
) -> Result<(Poly<ChainRing>, Poly<ChainRing>)> {
    let rx = PolyRing::new(ring);
    let rbar = ring.residue_field();
    let bx = PolyRing::new(&rbar);
    let (one_bar, sbar, tbar) = bx.ext_gcd(gbar, hbar)?;
    if one_bar.degree() != Some(0) {
        return Err(Error::Internal("coprime residue factors expected".into()));
    }
    let deg_g = gbar.degree().expect("nonzero factor");
    let deg_h = hbar.degree().expect("nonzero factor");
    let mut g = lift_poly(ring, gbar);
    let mut h = lift_poly(ring, hbar);
    let mut s = lift_poly(ring, &sbar);
    let mut t = lift_poly(ring, &tbar);
    let mut last_val = 0u32;
    for round in 0..64 {
        let err = rx.sub(f, &rx.mul(&g, &h));
        if err.is_zero() {
            return Ok((g, h));
        }
        let val = poly_valuation(ring, &err);
        if round > 0 && val <= last_val {
            return Err(Error::Internal("lifting error valuation stalled".into()));
        }
        last_val = val;
        // Factor update: dg = (t err) mod g keeps g monic of fixed degree;
        // the h side gets the complementary correction and is re-truncated.
        let te = rx.mul(&t, &err);
        let (qq, dg) = rx.divmod(&te, &g)?;
        g = rx.add(&g, &dg);
        let dh = rx.add(&rx.mul(&s, &err), &rx.mul(&qq, &h));
        h = truncate_monic(&rx, &rx.add(&h, &dh), deg_h);
        // Bezout update keeps s g + t h = 1 at the doubled precision.
        let berr = rx.sub(&rx.add(&rx.mul(&s, &g), &rx.mul(&t, &h)), &rx.one());
        if !berr.is_zero() {
            let se = rx.mul(&s, &berr);
            let (q2, r2) = rx.divmod(&se, &h)?;
            s = rx.sub(&s, &r2);
            let tfull = rx.sub(&t, &rx.add(&rx.mul(&t, &berr), &rx.mul(&q2, &g)));
            let keep: Vec<ChainElem> = (0..deg_g).map(|i| rx.coeff(&tfull, i)).collect();
            t = rx.from_coeffs(keep);
        }
    }
    Err(Error::Internal("factor lifting did not converge".into()))
}

/// Primitive idempotents of `R[x] / <t>` for monic square-free `t`, one per
/// irreducible residue factor, in factor order.
///
/// Each idempotent is the Bezout idempotent of its factor over the residue
/// field, lifted and refined by `eps <- 3 eps^2 - 2 eps^3` until exactly
/// idempotent. The returned list is verified: idempotent, pairwise
/// orthogonal, and summing to 1 in the quotient.
pub fn primitive_idempotents(
    ring: &ChainRing,
    t: &Poly<ChainRing>,
) -> Result<Vec<Poly<ChainRing>>> {
    let rx = PolyRing::new(ring);
    if !rx.is_monic(t) || t.degree() == Some(0) {
        return Err(Error::NotMonic(format!(
            "idempotent decomposition needs a monic modulus over {}",
            ring.describe()
        )));
    }
    let rbar = ring.residue_field();
    let bx = PolyRing::new(&rbar);
    let tbar = residue_poly(ring, t);
    let factors = factor_over_field(&rbar, &tbar)?;
    if factors.len() == 1 {
        return Ok(vec![rx.one()]);
    }
    let mut idems = Vec::with_capacity(factors.len());
    for gbar in &factors {
        let (cbar, rem) = bx.divmod(&tbar, gbar)?;
        debug_assert!(rem.is_zero());
        let (one_bar, _, v) = bx.ext_gcd(gbar, &cbar)?;
        if one_bar.degree() != Some(0) {
            return Err(Error::Internal("square-free factors must be coprime".into()));
        }
        let ebar = bx.mulmod(&v, &cbar, &tbar)?;
        let mut eps = lift_poly(ring, &ebar);
        // eps <- 3 eps^2 - 2 eps^3 squares the gamma-adic accuracy per round.
        let mut done = false;
        for _ in 0..64 {
            let sq = rx.mulmod(&eps, &eps, t)?;
            if sq == eps {
                done = true;
                break;
            }
            let cube = rx.mulmod(&sq, &eps, t)?;
            let three_sq = rx.scale(&sq, &ring.from_i64(3));
            let two_cube = rx.scale(&cube, &ring.from_i64(2));
            eps = rx.sub(&three_sq, &two_cube);
        }
        if !done {
            return Err(Error::Internal("idempotent refinement did not converge".into()));
        }
        idems.push(eps);
    }
    // Verify the complete orthogonal decomposition of 1.
    let mut sum = rx.zero();
    for (i, a) in idems.iter().enumerate() {
        if a.is_zero() {
            return Err(Error::Internal("zero primitive idempotent".into()));
        }
        sum = rx.add(&sum, a);
        for b in &idems[i + 1..] {
            if !rx.mulmod(a, b, t)?.is_zero() {
                return Err(Error::Internal("idempotents are not orthogonal".into()));
            }
        }
    }
    if sum != rx.one() {
        return Err(Error::Internal("idempotents do not sum to 1".into()));
    }
    Ok(idems)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force factorization oracle for tiny fields: strips the smallest
    /// monic divisor (degree, then lex) repeatedly. Only feasible for
    /// q^deg within a few thousand; used to pin down the fast path.
    fn oracle_factor<F: FiniteField>(field: &F, u: &Poly<F>) -> Vec<(Poly<F>, u32)> {
        let px = PolyRing::new(field);
        let q: u64 = field.order().try_into().expect("tiny field");
        let mut rest = px.monic(u).unwrap();
        let mut out: Vec<(Poly<F>, u32)> = Vec::new();
        'outer: while rest.degree().is_some_and(|d| d > 0) {
            let dr = rest.degree().unwrap();
            for d in 1..=dr {
                // Monic degree-d candidates in lex order of coefficients.
                let count = q.pow(d as u32);
                for idx in 0..count {
                    let mut coeffs = Vec::with_capacity(d + 1);
                    let mut c = idx;
                    for _ in 0..d {
                        coeffs.push(field.elem_by_index(c % q));
                        c /= q;
                    }
                    coeffs.push(field.one());
                    let cand = px.from_coeffs(coeffs);
                    let (quot, rem) = px.divmod(&rest, &cand).unwrap();
                    if rem.is_zero() {
                        match out.iter_mut().find(|(f, _)| *f == cand) {
                            Some((_, m)) => *m += 1,
                            None => out.push((cand, 1)),
                        }
                        rest = quot;
                        continue 'outer;
                    }
                }
            }
            unreachable!("every nonconstant polynomial has an irreducible divisor");
        }
        out.sort();
        out
    }

    fn f3() -> ChainRing {
        ChainRing::new(3, 1, 1, None).unwrap()
    }

    fn all_monic<F: FiniteField>(field: &F, deg: usize) -> Vec<Poly<F>> {
        let px = PolyRing::new(field);
        let q: u64 = field.order().try_into().unwrap();
        let count = q.pow(deg as u32);
        (0..count)
            .map(|idx| {
                let mut coeffs = Vec::with_capacity(deg + 1);
                let mut c = idx;
                for _ in 0..deg {
                    coeffs.push(field.elem_by_index(c % q));
                    c /= q;
                }
                coeffs.push(field.one());
                px.from_coeffs(coeffs)
            })
            .collect()
    }

    #[test]
    fn irreducibility_spot_checks() {
        let f3 = f3();
        let px = PolyRing::new(&f3);
        assert!(poly_is_irreducible(&f3, &px.from_i64_coeffs(&[1, 0, 1]))); // x^2+1
        assert!(!poly_is_irreducible(&f3, &px.from_i64_coeffs(&[-1, 0, 1]))); // x^2-1
        assert!(poly_is_irreducible(&f3, &px.from_i64_coeffs(&[1, 2, 0, 1]))); // x^3+2x+1
        let f5 = ChainRing::new(5, 1, 1, None).unwrap();
        let p5 = PolyRing::new(&f5);
        assert!(!poly_is_irreducible(&f5, &p5.from_i64_coeffs(&[1, 0, 1]))); // (x+2)(x+3)
        let f2 = ChainRing::new(2, 1, 1, None).unwrap();
        let p2 = PolyRing::new(&f2);
        assert!(poly_is_irreducible(&f2, &p2.from_i64_coeffs(&[1, 1, 1])));
        let f4 = ChainRing::new(2, 1, 2, None).unwrap();
        let p4 = PolyRing::new(&f4);
        // x^2 + x + 1 splits over F_4 (its roots are the cube roots of 1).
        assert!(!poly_is_irreducible(&f4, &p4.from_i64_coeffs(&[1, 1, 1])));
    }

    #[test]
    fn factoring_matches_oracle_exhaustively_over_f2_and_f3() {
        for field in [ChainRing::new(2, 1, 1, None).unwrap(), f3()] {
            for deg in 1..=4 {
                for u in all_monic(&field, deg) {
                    let expected = oracle_factor(&field, &u);
                    let got = factor_with_multiplicity(&field, &u).unwrap();
                    assert_eq!(got, expected, "{u:?} over {}", field.describe());
                    let square_free = expected.iter().all(|(_, m)| *m == 1);
                    let fast = factor_over_field(&field, &u);
                    if square_free {
                        let fast = fast.unwrap();
                        let flat: Vec<_> = expected.iter().map(|(f, _)| f.clone()).collect();
                        assert_eq!(fast, flat);
                    } else {
                        assert!(matches!(fast, Err(Error::NotSquareFree(_))));
                    }
                }
            }
        }
    }

    #[test]
    fn factoring_matches_oracle_on_extension_fields() {
        let f4 = ChainRing::new(2, 1, 2, None).unwrap();
        let f9 = ChainRing::new(3, 1, 2, None).unwrap();
        for field in [f4, f9] {
            for deg in 1..=3 {
                for (i, u) in all_monic(&field, deg).into_iter().enumerate() {
                    // Thin the grid to keep the test fast; step is coprime to
                    // the counts so the sample stays spread out.
                    if i % 7 != 0 {
                        continue;
                    }
                    let expected = oracle_factor(&field, &u);
                    let got = factor_with_multiplicity(&field, &u).unwrap();
                    assert_eq!(got, expected, "{u:?} over {}", field.describe());
                }
            }
        }
    }

    #[test]
    fn quartic_power_factorization_over_f3() {
        // x^5 + 2x^3 + x^2 + 2 = (x+1)^4 (x+2) over F_3.
        let f3 = f3();
        let px = PolyRing::new(&f3);
        let u = px.from_i64_coeffs(&[2, 0, 1, 2, 0, 1]);
        let got = factor_with_multiplicity(&f3, &u).unwrap();
        let xp1 = px.from_i64_coeffs(&[1, 1]);
        let xp2 = px.from_i64_coeffs(&[2, 1]);
        assert_eq!(got, vec![(xp1, 4), (xp2, 1)]);
    }

    #[test]
    fn hensel_lift_quadratic_over_z9() {
        // x^2 + 3x + 8 = (x+5)(x+7) over Z_9; residues are x+2 and x+1.
        let z9 = ChainRing::new(3, 2, 1, None).unwrap();
        let rx = PolyRing::new(&z9);
        let f = rx.from_i64_coeffs(&[8, 3, 1]);
        let rbar = z9.residue_field();
        let bx = PolyRing::new(&rbar);
        let parts = vec![bx.from_i64_coeffs(&[1, 1]), bx.from_i64_coeffs(&[2, 1])];
        let lifted = hensel_lift_factors(&z9, &f, &parts).unwrap();
        assert_eq!(lifted[0], rx.from_i64_coeffs(&[7, 1]));
        assert_eq!(lifted[1], rx.from_i64_coeffs(&[5, 1]));
        assert_eq!(rx.mul(&lifted[0], &lifted[1]), f);
    }

    #[test]
    fn hensel_lift_three_factors_over_z9() {
        // x^4 - 1 over Z_9: residue factors (x+1)(x+2)(x^2+1).
        let z9 = ChainRing::new(3, 2, 1, None).unwrap();
        let rx = PolyRing::new(&z9);
        let f = rx.from_i64_coeffs(&[-1, 0, 0, 0, 1]);
        let rbar = z9.residue_field();
        let bx = PolyRing::new(&rbar);
        let parts = vec![
            bx.from_i64_coeffs(&[1, 1]),
            bx.from_i64_coeffs(&[2, 1]),
            bx.from_i64_coeffs(&[1, 0, 1]),
        ];
        let lifted = hensel_lift_factors(&z9, &f, &parts).unwrap();
        let mut prod = rx.one();
        for (g, part) in lifted.iter().zip(&parts) {
            assert_eq!(residue_poly(&z9, g), *part);
            assert!(rx.is_monic(g));
            prod = rx.mul(&prod, g);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn hensel_lift_over_galois_ring() {
        // GR(4, 2): lift the residue split of x^3 - 1 over F_4 into three
        // linears (the cube roots of unity are rational over F_4).
        let gr = ChainRing::new(2, 2, 2, None).unwrap();
        let rx = PolyRing::new(&gr);
        let f = rx.from_i64_coeffs(&[-1, 0, 0, 1]);
        let rbar = gr.residue_field();
        let parts = factor_over_field(&rbar, &residue_poly(&gr, &f)).unwrap();
        assert_eq!(parts.len(), 3);
        let lifted = hensel_lift_factors(&gr, &f, &parts).unwrap();
        let mut prod = rx.one();
        for g in &lifted {
            prod = rx.mul(&prod, g);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn hensel_rejects_non_coprime_parts() {
        let z9 = ChainRing::new(3, 2, 1, None).unwrap();
        let rx = PolyRing::new(&z9);
        // (x+1)^2 (hence parts sharing a factor).
        let f = rx.from_i64_coeffs(&[1, 2, 1]);
        let rbar = z9.residue_field();
        let bx = PolyRing::new(&rbar);
        let parts = vec![bx.from_i64_coeffs(&[1, 1]), bx.from_i64_coeffs(&[1, 1])];
        assert!(matches!(
            hensel_lift_factors(&z9, &f, &parts),
            Err(Error::NotSquareFree(_))
        ));
    }

    #[test]
    fn idempotents_of_x2_minus_1_over_z9() {
        let z9 = ChainRing::new(3, 2, 1, None).unwrap();
        let rx = PolyRing::new(&z9);
        let t = rx.from_i64_coeffs(&[-1, 0, 1]);
        let idems = primitive_idempotents(&z9, &t).unwrap();
        // Factor order is x+1 then x+2; their idempotents are 5+4x and 5+5x.
        assert_eq!(idems[0], rx.from_i64_coeffs(&[5, 4]));
        assert_eq!(idems[1], rx.from_i64_coeffs(&[5, 5]));
    }

    #[test]
    fn idempotent_laws_over_various_rings() {
        let cases: Vec<(ChainRing, Vec<i64>)> = vec![
            (ChainRing::new(3, 2, 1, None).unwrap(), vec![-1, 0, 0, 0, 1]), // x^4-1
            (ChainRing::new(5, 2, 1, None).unwrap(), vec![-1, 0, 1]),       // x^2-1
            (ChainRing::new(3, 2, 2, None).unwrap(), vec![0, -1, 1]),       // x^2-x over GR(9,2)
            (ChainRing::new(2, 3, 1, None).unwrap(), vec![1, 1, 0, 1]),     // x^3+x+1 over Z_8
            (ChainRing::new(3, 3, 1, None).unwrap(), vec![0, -1, 0, 1]),    // x^3-x over Z_27
        ];
        for (ring, coeffs) in cases {
            let rx = PolyRing::new(&ring);
            let t = rx.from_i64_coeffs(&coeffs);
            if !is_square_free(&ring, &t).unwrap() {
                panic!("test modulus should be square-free: {coeffs:?}");
            }
            let idems = primitive_idempotents(&ring, &t).unwrap();
            let rbar = ring.residue_field();
            let n_factors = factor_over_field(&rbar, &residue_poly(&ring, &t)).unwrap().len();
            assert_eq!(idems.len(), n_factors.max(1), "{}", ring.describe());
            let mut sum = rx.zero();
            for (i, a) in idems.iter().enumerate() {
                assert_eq!(rx.mulmod(a, a, &t).unwrap(), *a);
                sum = rx.add(&sum, a);
                for b in &idems[i + 1..] {
                    assert!(rx.mulmod(a, b, &t).unwrap().is_zero());
                }
            }
            assert_eq!(sum, rx.one());
        }
    }

    #[test]
    fn square_free_detection() {
        let z9 = ChainRing::new(3, 2, 1, None).unwrap();
        let rx = PolyRing::new(&z9);
        assert!(is_square_free(&z9, &rx.from_i64_coeffs(&[-1, 0, 1])).unwrap());
        // x^2 + 2x + 1 = (x+1)^2.
        assert!(!is_square_free(&z9, &rx.from_i64_coeffs(&[1, 2, 1])).unwrap());
        // x^3 - 1 = (x-1)(x+2)^2 mod 3 is not square-free over F_3.
        assert!(!is_square_free(&z9, &rx.from_i64_coeffs(&[-1, 0, 0, 1])).unwrap());
        // Non-monic input is rejected.
        assert!(is_square_free(&z9, &rx.from_i64_coeffs(&[1, 2])).is_err());
    }
}
