//! Size, rank, and minimum distance of a polycyclic code.
//!
//! Over F3[u,v]/(u^2 - u, v^2 - v) with the relation
//! x^5 = 1 + 2x^2 + x^3, the code generated by x + 1 is free of rank 4
//! with 3^16 codewords and minimum symbol weight 2.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::poly::PolyRing;
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    let f3 = ChainRing::new(3, 1, 1, None)?;
    let px = PolyRing::new(&f3);
    let t1 = px.from_i64_coeffs(&[0, -1, 1]);
    let t2 = px.from_i64_coeffs(&[0, -1, 1]);
    let ring = SerialRing::new(f3, vec![t1, t2])?;

    let f: Vec<_> = [1, 0, 2, 1, 0].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;
    let g = vec![ring.one(), ring.one()];
    let code = ambient.principal_code(&g);

    let profile = ambient.code_profile(&code)?;
    println!("|C| = {}", profile.size);
    println!("free: {}, rank: {:?}", profile.free, profile.rank);
    println!("component sizes: {:?}", profile.component_sizes);
    println!("component ranks: {:?}", profile.component_ranks);

    let d = ambient.min_distance(&code, 1_000_000)?;
    println!("minimum distance d = {d}");
    println!("qsdp closure: {}", ambient.qsdp_check(&code));
    Ok(())
}
