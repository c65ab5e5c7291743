//! Stabilizer code parameters from dual-containing polycyclic codes.
//!
//! The annihilator route twists the second difference set by the Gram
//! matrix; the Euclidean route uses the classical transpose dual. Both
//! need free codes and a dual-containing pair.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::css::{css_construct, euclidean_css};
use polyserial::poly::PolyRing;
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    // C = <x + 1> under f = (x + 1)^4 (x + 2) over F3[u,v]/(u^2-u, v^2-v).
    let f3 = ChainRing::new(3, 1, 1, None)?;
    let px = PolyRing::new(&f3);
    let t1 = px.from_i64_coeffs(&[0, -1, 1]);
    let t2 = px.from_i64_coeffs(&[0, -1, 1]);
    let ring = SerialRing::new(f3, vec![t1, t2])?;
    let f: Vec<_> = [1, 0, 2, 1, 0].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;
    let code = ambient.principal_code(&[ring.one(), ring.one()]);

    let report = css_construct(&ambient, &code, &code, 1_000_000)?;
    println!(
        "annihilator route: [[{}, {}, {}]]_{} (k1 = {}, k2 = {})",
        report.n, report.k, report.d, report.q_base, report.k1, report.k2
    );

    // Ternary cyclic pair: C1 = C2 = <x - 1> under x^3 - 1 over F3.
    let f3b = ChainRing::new(3, 1, 1, None)?;
    let scalar = SerialRing::new(f3b, vec![])?;
    let fc: Vec<_> = [1, 0, 0].iter().map(|&c| scalar.from_i64(c)).collect();
    let cyclic = Ambient::new(&scalar, fc)?;
    let rep = cyclic.principal_code(&[scalar.from_i64(-1), scalar.one()]);

    let euclid = euclidean_css(&cyclic, &rep, &rep, 1_000_000)?;
    println!(
        "euclidean route:   [[{}, {}, {}]]_{}",
        euclid.n, euclid.k, euclid.d, euclid.q_base
    );
    let annih = css_construct(&cyclic, &rep, &rep, 1_000_000)?;
    println!(
        "annihilator route: [[{}, {}, {}]]_{} (cyclic f, both routes agree)",
        annih.n, annih.k, annih.d, annih.q_base
    );
    Ok(())
}
