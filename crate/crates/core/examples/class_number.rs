//! Class numbers of real quadratic fields by reduced forms and by the
//! analytic formula.
//!
//! Usage: `cargo run --example class_number -- 79 229 399`

use nfkit::quadclass::{class_number_with, principal_cycle, ClassMethod};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ds: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    if ds.is_empty() {
        ds = vec![79, 229, 399];
    }
    for d in ds {
        let forms = class_number_with(d, ClassMethod::Forms)?;
        let analytic = class_number_with(d, ClassMethod::Analytic)?;
        println!(
            "d = {d}: D = {}, h = {} (analytic {}), narrow h = {}, unit norm {}",
            forms.disc, forms.h, analytic.h, forms.h_narrow, forms.unit.norm
        );
        let cycle = principal_cycle(forms.disc as i64)?;
        println!("  principal cycle has {} reduced forms", cycle.len());
    }
    Ok(())
}
