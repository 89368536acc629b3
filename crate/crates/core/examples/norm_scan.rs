//! Scan a family for solutions of x^2 - d(n) y^2 = +-p.
//!
//! Usage: `cargo run --example norm_scan -- 1 13 40`

use nfkit::family::{synthesize, SymmetricWord};
use nfkit::pell::lemma31_scan;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let word: Vec<u64> = args
        .next()
        .unwrap_or_else(|| "1".into())
        .split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    let p: BigInt = args.next().unwrap_or_else(|| "13".into()).parse()?;
    let last: i64 = args.next().unwrap_or_else(|| "40".into()).parse()?;

    let f = synthesize(&SymmetricWord::new(word)?)?;
    let found = lemma31_scan(&f, &p, 1..=last)?;
    if found.is_empty() {
        println!("x^2 - d(n) y^2 = +-{p} is unsolvable for n = 1..={last}");
    }
    for h in found {
        println!("n = {:>3}  d = {:>6}  {}^2 - d * {}^2 = {}{p}", h.n, h.d, h.x, h.y, if h.sign < 0 { "-" } else { "" });
    }
    Ok(())
}
