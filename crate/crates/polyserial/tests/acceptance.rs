//! Release acceptance suite. Each test covers one numbered criterion, runs
//! every sub-check at its stated tolerance (all exact), and prints a single
//! `criterion N: PASS` or `criterion N: FAIL (...)` line before asserting.
//!
//! Randomized suites use fixed ChaCha8 seeds so every run checks the same
//! instances.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use polyserial::chain::{ChainElem, ChainRing};
use polyserial::code::Ambient;
use polyserial::css::css_construct;
use polyserial::duality::{
    annihilator_dual, annihilator_dual_via_gram, annihilator_dual_via_inverse, classify,
    count_codes, enumerate_ideal_count, euclidean_pairing, gram_matrix,
};
use polyserial::factor::factor_with_multiplicity;
use polyserial::linalg::{enumerate_span, span_eq, HowellForm};
use polyserial::poly::PolyRing;
use polyserial::ring::Ring;
use polyserial::serial::{SerialElem, SerialRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(fails: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        fails.push(what.to_string());
    }
}

fn finish(number: u32, fails: Vec<String>) {
    if fails.is_empty() {
        println!("criterion {number}: PASS");
    } else {
        println!("criterion {number}: FAIL ({})", fails.join("; "));
        panic!("criterion {number} failed: {}", fails.join("; "));
    }
}

fn zn(p: u64, e: u32) -> ChainRing {
    ChainRing::new(p, e, 1, None).unwrap()
}

fn scalar_ring(p: u64, e: u32) -> SerialRing {
    SerialRing::new(zn(p, e), vec![]).unwrap()
}

fn ring_with(p: u64, e: u32, moduli: &[&[i64]]) -> SerialRing {
    let base = zn(p, e);
    let ms = {
        let rx = PolyRing::new(&base);
        moduli.iter().map(|c| rx.from_i64_coeffs(c)).collect::<Vec<_>>()
    };
    SerialRing::new(base, ms).unwrap()
}

/// Element from base-ring coordinates in the monomial basis.
fn elem(ring: &SerialRing, coords: &[i64]) -> SerialElem {
    let coeffs = coords.iter().map(|&c| ring.base().from_i64(c)).collect();
    ring.elem_from_coeffs(coeffs).unwrap()
}

fn elems(ring: &SerialRing, rows: &[&[i64]]) -> Vec<SerialElem> {
    rows.iter().map(|r| elem(ring, r)).collect()
}

fn scalars(ring: &SerialRing, cs: &[i64]) -> Vec<SerialElem> {
    cs.iter().map(|&c| ring.elem_from_chain(&ring.base().from_i64(c))).collect()
}

fn random_elem(ring: &SerialRing, rng: &mut ChaCha8Rng) -> SerialElem {
    let base = ring.base();
    let pe = base.pe() as i64;
    let coeffs = (0..ring.dim()).map(|_| base.from_i64(rng.gen_range(0..pe))).collect();
    ring.elem_from_coeffs(coeffs).unwrap()
}

fn random_unit(ring: &SerialRing, rng: &mut ChaCha8Rng) -> SerialElem {
    loop {
        let u = random_elem(ring, rng);
        if ring.is_unit(&u) {
            return u;
        }
    }
}

fn random_word(ring: &SerialRing, n: usize, rng: &mut ChaCha8Rng) -> Vec<SerialElem> {
    (0..n).map(|_| random_elem(ring, rng)).collect()
}

/// Number of nonzero ring symbols in a flattened word.
fn symbol_weight(base: &ChainRing, flat: &[ChainElem], m: usize) -> usize {
    flat.chunks(m).filter(|ch| ch.iter().any(|c| !base.is_zero(c))).count()
}

/// Walks a span, returning its cardinality and minimum nonzero symbol weight.
fn span_walk(base: &ChainRing, h: &HowellForm, m: usize) -> (BigUint, Option<usize>) {
    let mut count = BigUint::from(0u32);
    let mut dmin: Option<usize> = None;
    enumerate_span(base, h, |v| {
        count += 1u32;
        let w = symbol_weight(base, v, m);
        if w > 0 && dmin.is_none_or(|d| w < d) {
            dmin = Some(w);
        }
        true
    });
    (count, dmin)
}

/// Coefficient `j` of a coefficient vector, zero-padded past the end.
fn coeff_at(ring: &SerialRing, coeffs: &[SerialElem], j: usize) -> SerialElem {
    coeffs.get(j).cloned().unwrap_or_else(|| ring.zero())
}

#[test]
fn criterion_01_biquadratic_product_end_to_end() {
    let start = Instant::now();
    let mut fails = Vec::new();

    // x^5 + 2x^3 + x^2 + 2 factors over F_3 as (x+1)^4 (x+2).
    let f3 = zn(3, 1);
    let (factors, expected) = {
        let px = PolyRing::new(&f3);
        let u = px.from_i64_coeffs(&[2, 0, 1, 2, 0, 1]);
        (
            factor_with_multiplicity(&f3, &u).unwrap(),
            vec![(px.from_i64_coeffs(&[1, 1]), 4u32), (px.from_i64_coeffs(&[2, 1]), 1u32)],
        )
    };
    let factors_ok = factors.len() == expected.len()
        && factors
            .iter()
            .zip(&expected)
            .all(|(got, want)| got.0.coeffs() == want.0.coeffs() && got.1 == want.1);
    check(&mut fails, factors_ok, "f factors as (x+1)^4 (x+2) over F_3");

    // F_3[x1,x2]/<x1^2-x1, x2^2-x2>, length 5, x^5 = 1 + 2x^2 + x^3.
    let ring = ring_with(3, 1, &[&[0, -1, 1], &[0, -1, 1]]);
    let f = scalars(&ring, &[1, 0, 2, 1, 0]);
    let ambient = Ambient::new(&ring, f).unwrap();
    let g = scalars(&ring, &[1, 1, 0, 0, 0]);
    let code = ambient.ideal_code(std::slice::from_ref(&g));

    match classify(&ambient, &code, Some(&g)) {
        Ok(report) => check(&mut fails, report.dual_containing, "code is dual-containing"),
        Err(e) => check(&mut fails, false, &format!("classification succeeds ({e})")),
    }

    let profile = ambient.code_profile(&code).unwrap();
    check(&mut fails, profile.size == BigUint::from(3u32).pow(16), "|C| = 3^16");
    check(&mut fails, profile.free && profile.rank == Some(4), "C is free of rank 4");

    let d = ambient.min_distance(&code, 200_000).unwrap();
    check(&mut fails, d == 2, &format!("d(C) = 2 (got {d})"));

    match css_construct(&ambient, &code, &code, 200_000) {
        Ok(css) => {
            let ok = css.n == 5 && css.k == 3 && css.d == 2 && css.q_base == BigUint::from(81u32);
            check(
                &mut fails,
                ok,
                &format!(
                    "stabilizer parameters [[5,3,2]] with q = 81 (got [[{},{},{}]] q = {})",
                    css.n, css.k, css.d, css.q_base
                ),
            );
        }
        Err(e) => check(&mut fails, false, &format!("stabilizer construction succeeds ({e})")),
    }

    check(&mut fails, start.elapsed() <= Duration::from_secs(10), "completes within 10 s");
    finish(1, fails);
}

/// The split three-variable ring Z_9[x1,x2,x3]/<x_i^2 - 1> and its published
/// self-dual cubic example.
fn split_z9_ring() -> SerialRing {
    ring_with(3, 2, &[&[-1, 0, 1], &[-1, 0, 1], &[-1, 0, 1]])
}

#[test]
fn criterion_02_split_three_variable_selfdual_example() {
    let start = Instant::now();
    let mut fails = Vec::new();

    let ring = split_z9_ring();
    let k = ring.components().len();
    check(&mut fails, k == 8, &format!("decomposition has 8 components (got {k})"));

    let eps: Vec<SerialElem> =
        ring.components().iter().map(|c| c.idempotent.clone()).collect();
    let mut sum = ring.zero();
    let mut orthogonal = true;
    let mut idempotent = true;
    for (i, ei) in eps.iter().enumerate() {
        sum = ring.add(&sum, ei);
        if ring.mul(ei, ei) != *ei {
            idempotent = false;
        }
        for ej in &eps[i + 1..] {
            if !ring.is_zero(&ring.mul(ei, ej)) {
                orthogonal = false;
            }
        }
    }
    check(&mut fails, sum == ring.one(), "idempotents sum to 1");
    check(&mut fails, idempotent && orthogonal, "idempotents are pairwise orthogonal");
    check(
        &mut fails,
        ring.warnings().iter().any(|w| w.contains("2^-3")),
        "warning about the sign-pattern scalar 2^-3 mod 9 is emitted",
    );

    // Coordinates in the monomial order 1, x1, x2, x1x2, x3, x1x3, x2x3, x1x2x3.
    let f = elems(
        &ring,
        &[
            &[0, 2, -2, 0, -2, 0, 0, 1],
            &[0, 1, 0, 0, 2, 0, 0, 0],
            &[1, -2, 2, 1, 2, 0, 1, 0],
        ],
    );
    let g = elems(
        &ring,
        &[
            &[0, 1, 0, 1, -2, 0, 0, 0],
            &[0, 0, 0, -2, 0, -2, -2, 0],
            &[1, 1, 1, 1, 1, 1, 1, 1],
        ],
    );
    let ambient = Ambient::new(&ring, f.clone()).unwrap();
    let code = ambient.ideal_code(std::slice::from_ref(&g));

    match classify(&ambient, &code, Some(&g)) {
        Ok(report) => {
            check(
                &mut fails,
                report.self_dual,
                &format!(
                    "code classifies annihilator self-dual (got self_dual={} |C|={} |C°|={})",
                    report.self_dual, report.code_size, report.dual_size
                ),
            );
            match &report.criterion {
                Some(c) => check(
                    &mut fails,
                    c.component_self_dual.iter().all(|&b| b),
                    "divisor criterion reports self-dual on every component",
                ),
                None => {
                    check(&mut fails, false, "divisor criterion applies to the generator")
                }
            }
        }
        Err(e) => check(&mut fails, false, &format!("classification succeeds ({e})")),
    }

    // Component law f_i = a_i g_i^2 with a_i a unit. Both sides are cubic
    // against quartic, so a_i is pinned by the x^3 coefficient of g_i^2.
    let (f_poly, g_sq): (Vec<SerialElem>, Vec<SerialElem>) = {
        let rx = PolyRing::new(&ring);
        let fp = rx.from_coeffs(vec![
            ring.neg(&f[0]),
            ring.neg(&f[1]),
            ring.neg(&f[2]),
            ring.one(),
        ]);
        let gp = rx.from_coeffs(g.clone());
        let sq = rx.mul(&gp, &gp);
        (fp.coeffs().to_vec(), sq.coeffs().to_vec())
    };
    let mut square_law = 0usize;
    for i in 0..k {
        let c3 = coeff_at(&ring, &g_sq, 3);
        if !ring.comp_is_unit(i, &c3) {
            square_law += 1;
            continue;
        }
        let a = ring.comp_invert(i, &c3).unwrap();
        let ok = (0..=4).all(|j| {
            let lhs = ring.comp_project(i, &coeff_at(&ring, &f_poly, j));
            let rhs = ring.mul(&a, &coeff_at(&ring, &g_sq, j));
            lhs == rhs
        });
        if !ok {
            square_law += 1;
        }
    }
    check(
        &mut fails,
        square_law == 0,
        &format!("f_i = a_i g_i^2 with a_i a unit on every component ({square_law} of {k} components fail)"),
    );

    check(&mut fails, start.elapsed() <= Duration::from_secs(30), "completes within 30 s");
    finish(2, fails);
}

#[test]
fn criterion_03_split_three_variable_lcd_example() {
    let mut fails = Vec::new();

    let ring = split_z9_ring();
    let k = ring.components().len();
    let f = elems(
        &ring,
        &[
            &[0, 0, 0, -1, -1, 0, 1, -1],
            &[0, 2, 0, 1, 0, 2, 2, 2],
            &[1, 0, 2, 2, -2, -2, 0, 0],
        ],
    );
    let g = elems(
        &ring,
        &[
            &[0, 2, 2, 0, 1, 1, 1, 0],
            &[2, 1, 2, 2, 1, 2, 0, 0],
            &[2, 1, 2, 1, 1, 1, 1, 1],
        ],
    );
    let ambient = Ambient::new(&ring, f.clone()).unwrap();
    let code = ambient.ideal_code(std::slice::from_ref(&g));

    match classify(&ambient, &code, Some(&g)) {
        Ok(report) => check(
            &mut fails,
            report.lcd,
            &format!("code classifies annihilator LCD (got lcd={})", report.lcd),
        ),
        Err(e) => check(&mut fails, false, &format!("classification succeeds ({e})")),
    }

    // gcd(residue of g_i, x+1) = 1 on every component: g_i(-1) must be a
    // component unit.
    let g_at_minus_one = ring.add(&ring.sub(&g[0], &g[1]), &g[2]);
    let coprime = (0..k).filter(|&i| !ring.comp_is_unit(i, &g_at_minus_one)).count();
    check(
        &mut fails,
        coprime == 0,
        &format!("gcd(g_i, x+1) = 1 on every component ({coprime} of {k} components fail)"),
    );

    // f_i = g_i (x+1) coefficientwise on every component.
    let product = [
        g[0].clone(),
        ring.add(&g[0], &g[1]),
        ring.add(&g[1], &g[2]),
        g[2].clone(),
    ];
    let f_poly = [ring.neg(&f[0]), ring.neg(&f[1]), ring.neg(&f[2]), ring.one()];
    let divides = (0..k)
        .filter(|&i| {
            !(0..4).all(|j| {
                ring.is_zero(&ring.comp_project(i, &ring.sub(&product[j], &f_poly[j])))
            })
        })
        .count();
    check(
        &mut fails,
        divides == 0,
        &format!("f_i = g_i (x+1) on every component ({divides} of {k} components fail)"),
    );

    finish(3, fails);
}

#[test]
fn criterion_04_gram_matrix_suite() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let n = 5usize;
    let mut bad_symmetric = 0usize;
    let mut bad_hankel = 0usize;
    let mut bad_border = 0usize;
    let mut bad_closed = 0usize;
    let mut bad_products = 0usize;
    let mut total = 0usize;

    for ring in [scalar_ring(5, 1), scalar_ring(3, 2)] {
        for _ in 0..50 {
            total += 1;
            let mut f = vec![random_unit(&ring, &mut rng)];
            f.extend((1..n).map(|_| random_elem(&ring, &mut rng)));
            let ambient = Ambient::new(&ring, f.clone()).unwrap();
            let a = gram_matrix(&ambient);

            if !(0..n).all(|i| (0..n).all(|j| a[i][j] == a[j][i])) {
                bad_symmetric += 1;
            }
            if !(1..n).all(|i| (0..n - 1).all(|j| a[i][j] == a[i - 1][j + 1])) {
                bad_hankel += 1;
            }
            let border_ok = (0..n).all(|i| {
                (0..n).all(|j| match i + j {
                    0 => a[i][j] == ring.one(),
                    s if s < n => ring.is_zero(&a[i][j]),
                    _ => true,
                })
            });
            if !border_ok {
                bad_border += 1;
            }

            // Closed forms for the four lower-right antidiagonals.
            let sq = ring.mul(&f[4], &f[4]);
            let cube = ring.mul(&sq, &f[4]);
            let two_f4_f3 = {
                let t = ring.mul(&f[4], &f[3]);
                ring.add(&t, &t)
            };
            let c = [
                f[0].clone(),
                ring.mul(&f[0], &f[4]),
                ring.mul(&f[0], &ring.add(&sq, &f[3])),
                ring.mul(&f[0], &ring.add(&cube, &ring.add(&two_f4_f3, &f[2]))),
            ];
            let closed_ok = (0..n).all(|i| {
                (0..n).all(|j| i + j < n || a[i][j] == c[i + j - n])
            });
            if !closed_ok {
                bad_closed += 1;
            }

            // Independent route: entry (i, j) is the annihilator product of
            // x^i and x^j, the constant coefficient of x^(i+j) reduced mod f.
            let mut powers = Vec::with_capacity(2 * n - 1);
            let mut word = vec![ring.zero(); n];
            word[0] = ring.one();
            powers.push(word.clone());
            for _ in 1..2 * n - 1 {
                word = ambient.tau(&word);
                powers.push(word.clone());
            }
            if !(0..n).all(|i| (0..n).all(|j| a[i][j] == powers[i + j][0])) {
                bad_products += 1;
            }
        }
    }

    check(&mut fails, bad_symmetric == 0, &format!("symmetric ({bad_symmetric}/{total} fail)"));
    check(&mut fails, bad_hankel == 0, &format!("Hankel ({bad_hankel}/{total} fail)"));
    check(
        &mut fails,
        bad_border == 0,
        &format!("identity block above the antidiagonal ({bad_border}/{total} fail)"),
    );
    check(
        &mut fails,
        bad_closed == 0,
        &format!("closed-form border entries ({bad_closed}/{total} fail)"),
    );
    check(
        &mut fails,
        bad_products == 0,
        &format!("matches annihilator products of monomials ({bad_products}/{total} fail)"),
    );
    finish(4, fails);
}

#[test]
fn criterion_05_duality_identity_suite() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let rings = [
        scalar_ring(5, 1),
        scalar_ring(3, 2),
        ring_with(3, 1, &[&[1, 0, 1]]),
        ring_with(3, 2, &[&[-1, 0, 1]]),
        ring_with(3, 1, &[&[0, -1, 1], &[0, -1, 1]]),
    ];
    let mut total = 0usize;
    let mut bad_routes = 0usize;
    let mut bad_double = 0usize;
    let mut bad_adjoint = 0usize;
    let mut bad_components = 0usize;

    for ring in &rings {
        for _ in 0..22 {
            total += 1;
            let n = rng.gen_range(2..=4);
            let mut f = vec![random_unit(ring, &mut rng)];
            f.extend((1..n).map(|_| random_elem(ring, &mut rng)));
            let ambient = Ambient::new(ring, f).unwrap();
            let gens: Vec<Vec<SerialElem>> =
                (0..rng.gen_range(1..=2)).map(|_| random_word(ring, n, &mut rng)).collect();
            let code = ambient.ideal_code(&gens);

            let ann = annihilator_dual(&ambient, &code).unwrap();
            let via_gram = annihilator_dual_via_gram(&ambient, &code).unwrap();
            let via_inverse = annihilator_dual_via_inverse(&ambient, &code).unwrap();
            if !(span_eq(&ann.form, &via_gram.form) && span_eq(&ann.form, &via_inverse.form)) {
                bad_routes += 1;
            }

            let double = annihilator_dual(&ambient, &ann).unwrap();
            if !span_eq(&double.form, &code.form) {
                bad_double += 1;
            }

            let adjoint_ok = (0..3).all(|_| {
                let u = random_word(ring, n, &mut rng);
                let v = random_word(ring, n, &mut rng);
                euclidean_pairing(&ambient, &ambient.tau(&u), &v)
                    == euclidean_pairing(&ambient, &u, &ambient.nu(&v))
            });
            if !adjoint_ok {
                bad_adjoint += 1;
            }

            // The dual decomposes componentwise: the i-th component of C°
            // equals the i-th component of the dual of the i-th component.
            let comps = ambient.decompose_code(&code);
            let ann_comps = ambient.decompose_code(&ann);
            let comp_ok = (0..comps.len()).all(|i| {
                let di = annihilator_dual(&ambient, &comps[i]).unwrap();
                span_eq(&ann_comps[i].form, &ambient.decompose_code(&di)[i].form)
            });
            if !comp_ok {
                bad_components += 1;
            }
        }
    }

    check(
        &mut fails,
        bad_routes == 0,
        &format!("annihilator, Gram, and inverse-Gram routes agree ({bad_routes}/{total} fail)"),
    );
    check(&mut fails, bad_double == 0, &format!("(C°)° = C ({bad_double}/{total} fail)"));
    check(
        &mut fails,
        bad_adjoint == 0,
        &format!("<tau u, v> = <u, nu v> ({bad_adjoint}/{total} fail)"),
    );
    check(
        &mut fails,
        bad_components == 0,
        &format!("dual decomposes componentwise ({bad_components}/{total} fail)"),
    );
    finish(5, fails);
}

#[test]
fn criterion_06_cardinality_law() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let rings = [
        scalar_ring(3, 2),
        ring_with(3, 1, &[&[0, -1, 1]]),
        ring_with(3, 2, &[&[-1, 0, 1]]),
    ];
    let mut total = 0usize;
    let mut bad = 0usize;

    for ring in &rings {
        for _ in 0..17 {
            total += 1;
            // f = g h with unit lc(g) and unit constant terms, h monic.
            let dg = rng.gen_range(1..=2);
            let dh = rng.gen_range(1..=2);
            let (g, f) = {
                let rx = PolyRing::new(ring);
                let mut gc = vec![random_unit(ring, &mut rng)];
                gc.extend((1..dg).map(|_| random_elem(ring, &mut rng)));
                gc.push(random_unit(ring, &mut rng));
                let mut hc = vec![random_unit(ring, &mut rng)];
                hc.extend((1..dh).map(|_| random_elem(ring, &mut rng)));
                hc.push(ring.one());
                let g = rx.from_coeffs(gc);
                let h = rx.from_coeffs(hc);
                let f = rx.mul(&g, &h);
                // Same ideal, monic representative.
                let f = rx.scale(&f, &ring.invert(f.leading().unwrap()).unwrap());
                (g, f)
            };
            let n = f.degree().unwrap();
            let relation: Vec<SerialElem> =
                (0..n).map(|j| ring.neg(&f.coeffs()[j])).collect();
            let ambient = Ambient::new(ring, relation).unwrap();
            let code = ambient.ideal_code(&[ambient.poly_to_vec(g.coeffs())]);
            let ann = annihilator_dual(&ambient, &code).unwrap();
            let law = ambient.code_size(&code) * ambient.code_size(&ann)
                == ring.size().pow(n as u32);
            if !law {
                bad += 1;
            }
        }
    }

    check(&mut fails, bad == 0, &format!("|C| |C°| = |R|^n ({bad}/{total} fail)"));
    finish(6, fails);
}

#[test]
fn criterion_07_code_counting() {
    let mut fails = Vec::new();

    // Z_4, scalar, x^2 + x + 1: three ideals.
    let start = Instant::now();
    let ring = scalar_ring(2, 2);
    let ambient = Ambient::new(&ring, scalars(&ring, &[-1, -1])).unwrap();
    let formula = count_codes(&ambient).unwrap();
    let oracle = enumerate_ideal_count(&ambient, 1_000_000).unwrap();
    check(
        &mut fails,
        formula.count == BigUint::from(3u32) && oracle == 3,
        &format!("Z_4 quadratic: formula 3 = oracle 3 (got {} and {oracle})", formula.count),
    );
    check(&mut fails, start.elapsed() <= Duration::from_secs(5), "Z_4 case within 5 s");

    // Z_9[u]/(u^2 - 1), length 1, x = -3: nine ideals.
    let start = Instant::now();
    let ring = ring_with(3, 2, &[&[-1, 0, 1]]);
    let ambient = Ambient::new(&ring, vec![elem(&ring, &[-3, 0])]).unwrap();
    let formula = count_codes(&ambient).unwrap();
    let oracle = enumerate_ideal_count(&ambient, 1_000_000).unwrap();
    check(
        &mut fails,
        formula.count == BigUint::from(9u32) && oracle == 9,
        &format!("split Z_9 linear: formula 9 = oracle 9 (got {} and {oracle})", formula.count),
    );
    check(&mut fails, start.elapsed() <= Duration::from_secs(5), "Z_9 case within 5 s");

    finish(7, fails);
}

#[test]
fn criterion_08_component_laws() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    let rings = [
        ring_with(3, 2, &[&[-1, 0, 1]]),
        ring_with(3, 1, &[&[0, -1, 1], &[0, -1, 1]]),
        ring_with(5, 1, &[&[0, -1, 0, 1]]),
    ];
    let limit = BigUint::from(100_000u32);

    let mut kept = 0usize;
    let mut bad_size_product = 0usize;
    let mut bad_size_enum = 0usize;
    let mut bad_component_sizes = 0usize;
    let mut bad_rank = 0usize;
    let mut bad_rank_free = 0usize;
    let mut bad_distance = 0usize;
    let mut bad_distance_lib = 0usize;

    for attempt in 0..3000 {
        if kept >= 51 {
            break;
        }
        let ring = &rings[attempt % rings.len()];
        let base = ring.base();
        let m = ring.dim();
        let n = rng.gen_range(2..=3);
        let f = random_word(ring, n, &mut rng);
        let ambient = Ambient::new(ring, f).unwrap();
        let gens: Vec<Vec<SerialElem>> = (0..if rng.gen_range(0..5) == 0 { 2 } else { 1 })
            .map(|_| random_word(ring, n, &mut rng))
            .collect();
        let code = ambient.ideal_code(&gens);
        let profile = ambient.code_profile(&code).unwrap();
        if profile.size <= BigUint::from(1u32) || profile.size > limit {
            continue;
        }
        kept += 1;

        let product: BigUint = profile.component_sizes.iter().product();
        if product != profile.size {
            bad_size_product += 1;
        }

        let (count, d_whole) = span_walk(base, &code.form, m);
        if count != profile.size {
            bad_size_enum += 1;
        }
        let d_whole = d_whole.expect("nonzero code has a nonzero word");

        let comps = ambient.decompose_code(&code);
        let p_elem = base.from_i64(base.p() as i64);
        let mut comp_distances: Vec<Option<usize>> = Vec::with_capacity(comps.len());
        for (i, comp) in comps.iter().enumerate() {
            let (ccount, di) = span_walk(base, &comp.form, m);
            comp_distances.push(di);
            if ccount != profile.component_sizes[i] {
                bad_component_sizes += 1;
            }

            // Nakayama cross-check of the component rank: |C_i| / |p C_i| is
            // the residue field size raised to the minimal generator count.
            let scaled: Vec<Vec<ChainElem>> = (0..comp.form.mat.rows)
                .map(|r| comp.form.mat.row(r).iter().map(|c| base.mul(c, &p_elem)).collect())
                .collect();
            let pc = ambient.code_from_flat_rows(scaled);
            let (pcount, _) = span_walk(base, &pc.form, m);
            let q = BigUint::from(base.p())
                .pow(base.t() * ring.components()[i].residue_degree as u32);
            let quotient = &ccount / &pcount;
            let mut mu = 0u32;
            let mut rest = quotient.clone();
            while rest > BigUint::from(1u32) && (&rest % &q) == BigUint::from(0u32) {
                rest /= &q;
                mu += 1;
            }
            let exact = &ccount % &pcount == BigUint::from(0u32)
                && q.pow(mu) == quotient
                && mu as usize == profile.component_ranks[i];
            if !exact {
                bad_rank += 1;
            }
        }

        if profile.free
            && profile.rank != profile.component_ranks.iter().max().copied()
        {
            bad_rank_free += 1;
        }

        let d_min = comp_distances.iter().flatten().min().copied();
        if d_min != Some(d_whole) {
            bad_distance += 1;
        }
        if ambient.min_distance(&code, 200_000).unwrap() != d_whole {
            bad_distance_lib += 1;
        }
    }

    check(&mut fails, kept >= 51, &format!("collected at least 51 instances (got {kept})"));
    check(
        &mut fails,
        bad_size_product == 0,
        &format!("|C| is the product of component sizes ({bad_size_product}/{kept} fail)"),
    );
    check(
        &mut fails,
        bad_size_enum == 0,
        &format!("|C| matches whole-code enumeration ({bad_size_enum}/{kept} fail)"),
    );
    check(
        &mut fails,
        bad_component_sizes == 0,
        &format!("component sizes match enumeration ({bad_component_sizes} checks fail)"),
    );
    check(
        &mut fails,
        bad_rank == 0,
        &format!("component ranks match the Nakayama quotient ({bad_rank} checks fail)"),
    );
    check(
        &mut fails,
        bad_rank_free == 0,
        &format!("free rank is the maximum component rank ({bad_rank_free}/{kept} fail)"),
    );
    check(
        &mut fails,
        bad_distance == 0,
        &format!("d(C) is the minimum component distance ({bad_distance}/{kept} fail)"),
    );
    check(
        &mut fails,
        bad_distance_lib == 0,
        &format!("library distance matches enumeration ({bad_distance_lib}/{kept} fail)"),
    );
    finish(8, fails);
}

#[test]
fn criterion_09_decomposition_cross_oracle() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    let mut total = 0usize;
    let mut bad = 0usize;

    for (p, e) in [(3, 1), (5, 1), (3, 2)] {
        let mut successes = 0usize;
        for _ in 0..500 {
            if successes == 7 {
                break;
            }
            let base = zn(p, e);
            let pe = base.pe() as i64;
            let s = rng.gen_range(1..=2);
            let moduli: Vec<_> = {
                let rx = PolyRing::new(&base);
                (0..s)
                    .map(|_| {
                        let d = rng.gen_range(2..=3);
                        let mut cs: Vec<i64> =
                            (0..d).map(|_| rng.gen_range(0..pe)).collect();
                        cs.push(1);
                        rx.from_i64_coeffs(&cs)
                    })
                    .collect()
            };
            let Ok(ring) = SerialRing::new(base, moduli) else {
                continue;
            };
            successes += 1;
            total += 1;
            let orbits = ring.frobenius_orbit_count(1).unwrap();
            if ring.components().len() != orbits.count {
                bad += 1;
            }
        }
        check(
            &mut fails,
            successes == 7,
            &format!("drew 7 square-free moduli configurations over GR({p}^{e})"),
        );
    }

    check(&mut fails, total >= 20, &format!("checked at least 20 configurations (got {total})"));
    check(
        &mut fails,
        bad == 0,
        &format!("component count equals Frobenius orbit count ({bad}/{total} fail)"),
    );
    finish(9, fails);
}

/// Kronecker companion-matrix model of multiplication by x for two-variable
/// rings, built independently of the library's basis-action route.
mod tensor {
    use super::*;

    pub type Grid = Vec<Vec<ChainElem>>;

    pub fn identity(base: &ChainRing, d: usize) -> Grid {
        let mut m = vec![vec![base.zero(); d]; d];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = base.one();
        }
        m
    }

    pub fn mul(base: &ChainRing, a: &Grid, b: &Grid) -> Grid {
        let d = a.len();
        let mut out = vec![vec![base.zero(); b[0].len()]; d];
        for i in 0..d {
            for k in 0..b.len() {
                for j in 0..b[0].len() {
                    out[i][j] = base.add(&out[i][j], &base.mul(&a[i][k], &b[k][j]));
                }
            }
        }
        out
    }

    /// Row i holds the coordinates of u * u^i modulo the monic t.
    pub fn companion(base: &ChainRing, t: &polyserial::poly::Poly<ChainRing>) -> Grid {
        let d = t.degree().unwrap();
        let mut m = vec![vec![base.zero(); d]; d];
        for i in 0..d - 1 {
            m[i][i + 1] = base.one();
        }
        for (j, entry) in m[d - 1].iter_mut().enumerate() {
            *entry = base.neg(&t.coeffs()[j]);
        }
        m
    }

    /// Powers C^0 .. C^(d-1) of a companion matrix.
    pub fn powers(base: &ChainRing, c: &Grid, d: usize) -> Vec<Grid> {
        let mut out = vec![identity(base, c.len())];
        for _ in 1..d {
            out.push(mul(base, out.last().unwrap(), c));
        }
        out
    }

    /// Action of the basis monomial with flat index a = i2 m1 + i1, as the
    /// Kronecker product of the per-variable companion powers (variable 1
    /// fastest).
    pub fn monomial(base: &ChainRing, c1p: &[Grid], c2p: &[Grid], a: usize) -> Grid {
        let m1 = c1p[0].len();
        let m2 = c2p[0].len();
        let x1 = &c1p[a % m1];
        let x2 = &c2p[a / m1];
        let m = m1 * m2;
        let mut out = vec![vec![base.zero(); m]; m];
        for a2 in 0..m2 {
            for a1 in 0..m1 {
                for b2 in 0..m2 {
                    for b1 in 0..m1 {
                        out[a2 * m1 + a1][b2 * m1 + b1] = base.mul(&x2[a2][b2], &x1[a1][b1]);
                    }
                }
            }
        }
        out
    }

    /// Multiplication-by-r matrix as a coordinate combination of monomial
    /// actions.
    pub fn rep(base: &ChainRing, monomials: &[Grid], r: &SerialElem) -> Grid {
        let m = monomials.len();
        let mut out = vec![vec![base.zero(); m]; m];
        for (b, c) in r.iter().enumerate() {
            for i in 0..m {
                for j in 0..m {
                    out[i][j] = base.add(&out[i][j], &base.mul(c, &monomials[b][i][j]));
                }
            }
        }
        out
    }
}

#[test]
fn criterion_10_tensor_structure() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let rings = [
        ring_with(3, 1, &[&[0, -1, 1], &[0, -1, 1]]),
        ring_with(3, 2, &[&[-1, 0, 1], &[0, -1, 1]]),
    ];
    let mut total = 0usize;
    let mut bad_tensor = 0usize;
    let mut bad_ideal = 0usize;
    let mut bad_span = 0usize;

    for ring in &rings {
        let base = ring.base();
        let m = ring.dim();
        let c1p = {
            let c = tensor::companion(base, &ring.moduli()[0]);
            tensor::powers(base, &c, ring.moduli()[0].degree().unwrap())
        };
        let c2p = {
            let c = tensor::companion(base, &ring.moduli()[1]);
            tensor::powers(base, &c, ring.moduli()[1].degree().unwrap())
        };
        let monomials: Vec<tensor::Grid> =
            (0..m).map(|a| tensor::monomial(base, &c1p, &c2p, a)).collect();

        for _ in 0..5 {
            total += 1;
            let n = rng.gen_range(2..=3);
            let f = random_word(ring, n, &mut rng);
            let ambient = Ambient::new(ring, f.clone()).unwrap();

            // Expected model: superdiagonal identity blocks plus a bottom
            // row of multiplication matrices for the relation coefficients.
            let rep = ambient.rep_x();
            let blocks: Vec<tensor::Grid> =
                f.iter().map(|fk| tensor::rep(base, &monomials, fk)).collect();
            let ok = (0..n * m).all(|row| {
                let (j, a) = (row / m, row % m);
                (0..n * m).all(|col| {
                    let (k, c) = (col / m, col % m);
                    let want = if j + 1 < n {
                        if k == j + 1 && a == c {
                            base.one()
                        } else {
                            base.zero()
                        }
                    } else {
                        blocks[k][a][c].clone()
                    };
                    rep.row(row)[col] == want
                })
            });
            if !ok {
                bad_tensor += 1;
            }

            let gens: Vec<Vec<SerialElem>> = (0..rng.gen_range(1..=2))
                .map(|_| random_word(ring, n, &mut rng))
                .collect();
            if !ambient.qsdp_check(&ambient.ideal_code(&gens)) {
                bad_ideal += 1;
            }

            // A bare one-word span is not closed under the monomial action.
            let mut word = vec![ring.zero(); n];
            word[0] = ring.one();
            if ambient.qsdp_check(&ambient.span_code(&[word])) {
                bad_span += 1;
            }
        }
    }

    check(
        &mut fails,
        bad_tensor == 0,
        &format!("rep_x matches the Kronecker companion model ({bad_tensor}/{total} fail)"),
    );
    check(
        &mut fails,
        bad_ideal == 0,
        &format!("ideal codes pass the shift-closure check ({bad_ideal}/{total} fail)"),
    );
    check(
        &mut fails,
        bad_span == 0,
        &format!("a non-ideal span fails the shift-closure check ({bad_span}/{total} fail)"),
    );
    finish(10, fails);
}
