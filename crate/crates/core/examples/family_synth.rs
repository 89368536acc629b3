//! Synthesize the family seeded by a symmetric word and list a few members.
//!
//! Usage: `cargo run --example family_synth -- 2,1,1,2`

use nfkit::family::{is_admissible, members, refine_mod4, synthesize, SymmetricWord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,2".into());
    let entries = arg
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<Vec<u64>, _>>()?;
    let word = SymmetricWord::new(entries)?;
    println!("word {arg}: admissible = {}", is_admissible(&word));

    let f = synthesize(&word)?;
    println!(
        "d(n) = {} n^2 + {} n + {}, z(n) = {} n + {}, n >= {}",
        f.alpha, f.beta, f.gamma, f.eta, f.mu, f.n_start
    );
    println!("unit (p(n) + {} sqrt(d)) has norm {}", f.q, f.unit_norm());
    for m in members(&f, 0..=5, false) {
        println!("  n = {:>2}  d = {:>6}  z = {:>4}  p = {}", m.n, m.d, m.z, m.p);
    }

    for target in [2u8, 3] {
        for s in refine_mod4(&f, target)? {
            println!(
                "d = {target} (mod 4) on n = {} k + {}: d(k) = {} k^2 + {} k + {}",
                s.modulus, s.residue, s.family.alpha, s.family.beta, s.family.gamma
            );
        }
    }
    Ok(())
}
