//! Factorization, primality, totient and Kronecker symbols.
//!
//! Usage: `cargo run --example arithmetic -- 1000000016000000063`

use nfkit::arith::{factorize, is_prime, is_squarefree, kronecker, primality_method, totient};
use num_bigint::{BigInt, BigUint};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: BigUint = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1000000016000000063".into())
        .parse()?;
    let f = factorize(&n);
    let parts: Vec<String> = f.primes().map(|p| p.to_string()).collect();
    println!("{n}: prime factors {}", parts.join(" "));
    println!("squarefree {}, phi = {}", is_squarefree(&n), totient(&n));
    for p in f.primes() {
        println!("  {p} prime ({:?}): {}", primality_method(p), is_prime(p));
    }
    let a = BigInt::from(n);
    for m in [3, 5, 7, 8, 11, 13] {
        println!("  ({a} | {m}) = {}", kronecker(&a, &BigInt::from(m)));
    }
    Ok(())
}
