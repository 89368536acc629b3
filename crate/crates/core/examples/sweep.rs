//! Run a certifying sweep through the command-line front end and print the
//! summary record.
//!
//! Usage: `cargo run --example sweep -- 1 1..40`

fn main() {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "1".into());
    let range = args.next().unwrap_or_else(|| "1..40".into());
    let mut out = Vec::new();
    let code = nfkit::cli::run(
        ["nfkit", "--json", "--no-meta", "verify", "paper", "--word", &word, "--n", &range],
        &mut out,
        &mut std::io::stderr(),
    );
    let text = String::from_utf8(out).expect("output is UTF-8");
    for line in text.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).expect("records are JSON");
        match rec["type"].as_str() {
            Some("member") => println!(
                "n = {:>3}  d = {:>7}  h = {:>2}  {}",
                rec["n"].as_str().unwrap_or("-"),
                rec["d"].as_str().unwrap_or("-"),
                rec["h"].as_str().unwrap_or("-"),
                rec["status"].as_str().unwrap_or("-")
            ),
            _ => println!("{line}"),
        }
    }
    std::process::exit(code);
}
