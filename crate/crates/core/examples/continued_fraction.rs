//! Periodic expansion of sqrt(d), its convergents and the norms along the
//! first period.
//!
//! Usage: `cargo run --example continued_fraction -- 94`

use nfkit::cfrac::{convergents, period_norm_values, reconstruct_d, sqrt_cf_expand};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: BigInt = std::env::args().nth(1).unwrap_or_else(|| "94".into()).parse()?;
    let e = sqrt_cf_expand(&d)?;
    let period: Vec<String> = e.period.iter().map(|a| a.to_string()).collect();
    println!("sqrt({d}) = [{}; {}]", e.a0, period.join(", "));
    println!("period length {}", e.period_len());

    for c in convergents(&e.a0, &e.period) {
        println!("  h/k = {}/{}", c.h, c.k);
    }
    for v in period_norm_values(&e) {
        println!("  {}^2 - {d} * {}^2 = {}", v.x, v.y, v.n);
    }
    assert_eq!(reconstruct_d(&e.a0, &e.period), Some(d));
    Ok(())
}
