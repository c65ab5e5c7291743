//! The Gram matrix linking the Euclidean and annihilator pairings.
//!
//! A is Hankel and symmetric; the annihilator dual is (CA)^perp. For a
//! constacyclic relation x^n = lambda the matrix is monomial, so the
//! twist by A permutes and scales coordinates without changing weights.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::duality::gram_matrix;
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    let f5 = ChainRing::new(5, 1, 1, None)?;
    let ring = SerialRing::new(f5, vec![])?;

    let f: Vec<_> = [2, 0, 3, 1, 4].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;
    let gram = gram_matrix(&ambient);

    println!("A for x^5 = 2 + 3x^2 + x^3 + 4x^4 over F5:");
    for row in &gram {
        let flat: Vec<u64> = row.iter().map(|s| s[0].coeffs()[0]).collect();
        println!("  {flat:?}");
    }

    // Entry (i, j) is the constant coefficient of x^(i+j) mod f: shift the
    // unit word i + j times and read off coordinate 0.
    let n = ambient.n();
    for (i, gram_row) in gram.iter().enumerate() {
        for (j, entry) in gram_row.iter().enumerate() {
            let mut word = vec![ring.zero(); n];
            word[0] = ring.one();
            for _ in 0..i + j {
                word = ambient.tau(&word);
            }
            assert_eq!(&word[0], entry);
        }
    }
    println!("entrywise check against shifted basis monomials: ok");

    // Constacyclic relation x^3 = 2 over Z9: each row has one nonzero.
    let z9 = ChainRing::new(3, 2, 1, None)?;
    let ring9 = SerialRing::new(z9, vec![])?;
    let f9: Vec<_> = [2, 0, 0].iter().map(|&c| ring9.from_i64(c)).collect();
    let amb9 = Ambient::new(&ring9, f9)?;
    let gram9 = gram_matrix(&amb9);
    println!("monomial A for x^3 = 2 over Z9:");
    for row in &gram9 {
        let flat: Vec<u64> = row.iter().map(|s| s[0].coeffs()[0]).collect();
        println!("  {flat:?}");
    }
    Ok(())
}
