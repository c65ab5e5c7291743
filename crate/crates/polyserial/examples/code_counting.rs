//! Counting polycyclic codes: the (e + 1)^k formula against exhaustive
//! ideal enumeration.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::duality::{count_codes, enumerate_ideal_count};
use polyserial::poly::PolyRing;
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    // Z4[x]/(x^2 + x + 1) is the Galois ring GR(4, 2): one component.
    let z4 = ChainRing::new(2, 2, 1, None)?;
    let ring = SerialRing::new(z4, vec![])?;
    let f: Vec<_> = [-1, -1].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;
    let counted = count_codes(&ambient)?;
    let oracle = enumerate_ideal_count(&ambient, 1_000_000)?;
    println!(
        "Z4, f = x^2 + x + 1: k = {}, formula {} = oracle {}",
        counted.k, counted.count, oracle
    );

    // S = Z9[u]/(u^2 - 1), f = x + 3: two components, 3^2 codes.
    let z9 = ChainRing::new(3, 2, 1, None)?;
    let modulus = PolyRing::new(&z9).from_i64_coeffs(&[-1, 0, 1]);
    let ring9 = SerialRing::new(z9, vec![modulus])?;
    let f9 = vec![ring9.from_i64(-3)];
    let amb9 = Ambient::new(&ring9, f9)?;
    let counted9 = count_codes(&amb9)?;
    let oracle9 = enumerate_ideal_count(&amb9, 1_000_000)?;
    println!(
        "Z9[u]/(u^2 - 1), f = x + 3: k = {}, formula {} = oracle {}",
        counted9.k, counted9.count, oracle9
    );
    Ok(())
}
