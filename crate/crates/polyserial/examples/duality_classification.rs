//! Duality classification of principal codes.
//!
//! Over Z9 with f = (x + 1)^2 the divisor x + 1 generates a self-dual
//! code, while the non-trivial lift x + 4 generates a code that is
//! neither self-orthogonal nor LCD. When the generator divides f with a
//! unit leading coefficient, the report also carries the componentwise
//! divisor criterion, rederived independently of the span comparison.

use polyserial::chain::ChainRing;
use polyserial::code::Ambient;
use polyserial::duality::classify;
use polyserial::serial::SerialRing;
use polyserial::{Result, Ring};

fn main() -> Result<()> {
    let z9 = ChainRing::new(3, 2, 1, None)?;
    let ring = SerialRing::new(z9, vec![])?;

    // x^2 = 8 + 7x, so f = x^2 + 2x + 1 = (x + 1)^2.
    let f: Vec<_> = [8, 7].iter().map(|&c| ring.from_i64(c)).collect();
    let ambient = Ambient::new(&ring, f)?;

    for (label, g) in [
        ("x + 1", vec![ring.one(), ring.one()]),
        ("x + 4", vec![ring.from_i64(4), ring.one()]),
    ] {
        let code = ambient.principal_code(&g);
        let report = classify(&ambient, &code, Some(&g))?;
        println!("generator {label}:");
        println!(
            "  self-dual {}, self-orthogonal {}, dual-containing {}, lcd {}",
            report.self_dual, report.self_orthogonal, report.dual_containing, report.lcd
        );
        println!("  |C| = {}, |C°| = {}", report.code_size, report.dual_size);
        if let Some(criterion) = &report.criterion {
            println!(
                "  divisor criterion per component: self-dual {:?}",
                criterion.component_self_dual
            );
        }
        println!("  span and criterion routes agree: {}", report.route_agreement);
    }
    Ok(())
}
