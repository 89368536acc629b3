//! Fundamental units and decisions for x^2 - d y^2 = N.
//!
//! Usage: `cargo run --example pell_unit -- 61 -3`

use nfkit::pell::{fundamental_unit, solve_norm, solve_norm_bounded, solve_norm_small};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let d: BigInt = args.next().unwrap_or_else(|| "61".into()).parse()?;
    let n: BigInt = args.next().unwrap_or_else(|| "-3".into()).parse()?;

    let u = fundamental_unit(&d)?;
    println!("fundamental unit of Z[sqrt({d})]: {} + {} sqrt({d}), norm {}", u.x, u.y, u.norm);

    let sol = solve_norm(&d, &n)?;
    if sol.is_solvable() {
        println!("x^2 - {d} y^2 = {n}: one solution per class");
        for (x, y) in &sol.solutions {
            println!("  ({x}, {y})");
        }
    } else {
        println!("x^2 - {d} y^2 = {n} has no integer solution");
    }
    assert!(sol.verify());

    if n.magnitude() * n.magnitude() < d.magnitude().clone() {
        let small = solve_norm_small(&d, &n)?;
        let bounded = solve_norm_bounded(&d, &n)?;
        println!(
            "convergent and bounded searches agree: {}",
            small.is_solvable() == bounded.is_solvable()
        );
    }
    Ok(())
}
