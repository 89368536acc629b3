//! Relative class numbers of cyclotomic fields.
//!
//! Usage: `cargo run --example cyclo_minus -- 3 40`

use nfkit::cyclo::{minus_class_float, minus_class_report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let lo: u64 = args.next().unwrap_or_else(|| "3".into()).parse()?;
    let hi: u64 = args.next().unwrap_or_else(|| "40".into()).parse()?;
    for m in lo..=hi {
        if m % 4 == 2 {
            continue;
        }
        let r = minus_class_report(m, false)?;
        println!(
            "m = {m:>3}  h- = {:<10} float {:.6}  ({} odd characters)",
            r.h_minus,
            minus_class_float(m)?,
            r.odd_character_count
        );
    }
    Ok(())
}
