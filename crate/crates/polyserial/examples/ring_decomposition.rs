//! Chain-component decomposition of a finite serial ring.
//!
//! Builds Z9[u]/(u^2 - 1), lists its primitive idempotents, and checks the
//! component count against the Frobenius orbit count of the variable
//! moduli, which is an independent route to the same number.

use polyserial::chain::ChainRing;
use polyserial::poly::PolyRing;
use polyserial::serial::SerialRing;
use polyserial::Result;

fn main() -> Result<()> {
    let z9 = ChainRing::new(3, 2, 1, None)?;
    let px = PolyRing::new(&z9);
    let modulus = px.from_i64_coeffs(&[-1, 0, 1]);
    let ring = SerialRing::new(z9, vec![modulus])?;

    println!("ring size |S| = {}", ring.size());
    println!("components k = {}", ring.components().len());
    for (i, comp) in ring.components().iter().enumerate() {
        println!(
            "  component {i}: idempotent coords {:?}, residue degree {}, size {}",
            comp.idempotent
                .iter()
                .map(|c| c.coeffs()[0])
                .collect::<Vec<_>>(),
            comp.residue_degree,
            ring.component_size(i)
        );
    }

    let orbits = ring.frobenius_orbit_count(1)?;
    println!(
        "orbit check: {} orbits of sizes {:?} (splitting degree {})",
        orbits.count, orbits.orbit_sizes, orbits.splitting_degree
    );
    assert_eq!(orbits.count, ring.components().len());

    for w in ring.warnings() {
        println!("note: {w}");
    }
    Ok(())
}
