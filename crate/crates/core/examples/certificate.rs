//! Build a certificate that h(d) > 1, serialize it and check it again.
//!
//! Usage: `cargo run --example certificate -- 35`

use nfkit::quadclass::{nontriviality_certificate, Certificate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: u64 = std::env::args().nth(1).unwrap_or_else(|| "35".into()).parse()?;
    match nontriviality_certificate(d) {
        Ok(cert) => {
            println!(
                "d = {d}: split prime p = {}, h = {}, phi(4d) = {}",
                cert.p, cert.h, cert.phi_gate
            );
            for r in &cert.rejected_primes {
                println!("  skipped p = {}: {}^2 - {d} {}^2 = {}{}", r.p, r.witness.0, r.witness.1, if r.sign < 0 { "-" } else { "" }, r.p);
            }
            let json = serde_json::to_string_pretty(&cert)?;
            println!("{json}");
            let back: Certificate = serde_json::from_str(&json)?;
            back.revalidate()?;
            println!("revalidated");
        }
        Err(e) => println!("d = {d}: no certificate ({e})"),
    }
    Ok(())
}
