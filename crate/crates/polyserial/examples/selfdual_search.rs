//! Enumerating monic divisors of f and classifying their codes.
//!
//! Over Z9 the square f = (x + 1)^2 has five monic divisors; besides the
//! trivial ones and x + 1 itself there are two non-trivial lifts x + 4
//! and x + 7 whose product with a cofactor lands back on f modulo 9.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::duality::{classify, enumerate_monic_divisors};
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    let z9 = ChainRing::new(3, 2, 1, None)?;
    let ring = SerialRing::new(z9, vec![])?;
    let f: Vec<_> = [8, 7].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;

    let divisors = enumerate_monic_divisors(&ambient, 1_000_000)?;
    println!("{} monic divisors of (x + 1)^2 over Z9", divisors.len());

    for g in &divisors {
        let coeffs: Vec<u64> = g.iter().map(|s| s[0].coeffs()[0]).collect();
        let code = ambient.principal_code(g);
        let report = classify(&ambient, &code, Some(g))?;
        let class = if report.self_dual {
            "self-dual"
        } else if report.self_orthogonal {
            "self-orthogonal"
        } else if report.dual_containing {
            "dual-containing"
        } else if report.lcd {
            "lcd"
        } else {
            "none"
        };
        println!("  g = {coeffs:?}: |C| = {}, {class}", report.code_size);
    }
    Ok(())
}
