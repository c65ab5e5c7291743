//! Euclidean versus annihilator duals and the cardinality law.
//!
//! For the cyclic length-3 code <x - 1> over Z4 the two duals coincide.
//! Both satisfy |C| * |C°| = |S|^n.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::duality::{annihilator_dual, euclidean_dual};
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    let z4 = ChainRing::new(2, 2, 1, None)?;
    let ring = SerialRing::new(z4, vec![])?;

    let f: Vec<_> = [1, 0, 0].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;
    let g = vec![ring.from_i64(-1), ring.one()];
    let code = ambient.principal_code(&g);

    let euclid = euclidean_dual(&ambient, &code);
    let annih = annihilator_dual(&ambient, &code)?;

    println!("|C| = {}", ambient.code_size(&code));
    println!("|C^perp| = {}", ambient.code_size(&euclid));
    println!("|C°| = {}", ambient.code_size(&annih));

    let total = ambient.code_size(&code) * ambient.code_size(&annih);
    println!("|C| * |C°| = {total} = |S|^n = {}", ambient.ambient_size());
    assert_eq!(total, ambient.ambient_size());

    for i in 0..annih.form.mat.rows {
        let word = ambient.unflatten(annih.form.mat.row(i));
        let coords: Vec<Vec<u64>> = word
            .iter()
            .map(|s| s.iter().map(|c| c.coeffs()[0]).collect())
            .collect();
        println!("annihilator dual generator {i}: {coords:?}");
    }
    Ok(())
}
