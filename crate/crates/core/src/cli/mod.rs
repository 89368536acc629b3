//! The `nfkit` command-line harness.
//!
//! Every command writes one record per line: JSON objects with `--json`, else
//! `key=value` text. Sweeps end with a `summary` record and, unless
//! `--no-meta` is given, a `meta` record that holds the only
//! nondeterministic data (timing and cache statistics).
//!
//! Exit codes: 0 success, 2 bad input or failed precondition, 3 verification
//! finding, 4 internal disagreement between independent methods.

pub mod cache;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::arith::{is_prime_u64, is_squarefree};
use crate::cyclo::minus_class_report;
use crate::family::{FAMILY_SCHEMA, refine_mod4, scan_members, synthesize, MemberEvent, QuadFamily, SkipReason, SymmetricWord};
use crate::pell::{fundamental_unit, lemma31_scan, solve_norm, solve_norm_bounded, solve_norm_small};
use crate::quadclass::{class_number_with, nontriviality_certificate_with_limit, ClassMethod, DEFAULT_SPLIT_PRIME_LIMIT};
use crate::{Error, Result};

use cache::Cache;
use report::Emitter;
use verify::{run_sweep, summarize, MemberJob, SweepParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FINDING: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

/// Inclusive index range written `A..B`, `A..=B` or `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub start: i64,
    pub end: i64,
}

impl IndexRange {
    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.start..=self.end
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad index {t:?} in range {s:?}: {e}"))
        };
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        Ok(IndexRange { start: a, end: b })
    }
}

impl std::fmt::Display for IndexRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Parser)]
#[command(name = "nfkit", version, about = "Quadratic families, norm equations and class number certificates")]
pub struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Append-only JSON-lines result cache.
    #[arg(long, global = true, env = "NFKIT_CACHE", value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true, value_name = "K")]
    pub jobs: Option<usize>,
    /// Recompute a sample of cache hits and fail on any difference.
    #[arg(long, global = true)]
    pub verify_cache: bool,
    /// Fraction of cache hits recomputed under --verify-cache.
    #[arg(long, global = true, default_value_t = 0.25, value_name = "F")]
    pub verify_rate: f64,
    /// Omit the trailing timing record.
    #[arg(long, global = true)]
    pub no_meta: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quadratic families from symmetric words.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Fundamental units and norm equations.
    #[command(subcommand)]
    Pell(PellCmd),
    /// Class numbers of real quadratic fields.
    #[command(subcommand)]
    Class(ClassCmd),
    /// Cyclotomic fields.
    #[command(subcommand)]
    Cyclo(CycloCmd),
    /// Sweeps that check class number statements over families.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Args)]
pub struct WordArg {
    /// Comma-separated palindromic word, e.g. `2,2`.
    #[arg(long)]
    pub word: SymmetricWord,
    /// Restrict to the slice with d = 2 or 3 (mod 4).
    #[arg(long, value_name = "2|3")]
    pub mod4: Option<u8>,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// Print the family of a word.
    Synth {
        #[command(flatten)]
        word: WordArg,
    },
    /// List members over an index range.
    Sweep {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_name = "A..B")]
        n: IndexRange,
        /// Keep members whose d is not squarefree.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum NormMethodArg {
    Auto,
    Convergents,
    Bounded,
}

#[derive(Debug, Subcommand)]
pub enum PellCmd {
    /// Fundamental unit of Z[sqrt d].
    Unit {
        #[arg(long)]
        d: BigInt,
    },
    /// Decide x^2 - d y^2 = N.
    Norm {
        #[arg(long)]
        d: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        norm: BigInt,
        #[arg(long, value_enum, default_value_t = NormMethodArg::Auto)]
        method: NormMethodArg,
    },
    /// Decide x^2 - d(n) y^2 = +-p over a family.
    Scan {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        p: BigInt,
        #[arg(long, value_name = "A..B")]
        n: IndexRange,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClassCmd {
    /// Class number of Q(sqrt d).
    H {
        #[arg(long)]
        d: u64,
        #[arg(long, default_value = "both", value_name = "both|forms|analytic")]
        method: ClassMethod,
    },
    /// Certificate that h(Q(sqrt d)) > 1.
    Cert {
        #[arg(long)]
        d: u64,
        /// Largest split prime tried.
        #[arg(long, default_value_t = DEFAULT_SPLIT_PRIME_LIMIT)]
        split_limit: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CycloCmd {
    /// Relative class number of Q(zeta_m).
    Minus {
        #[arg(long)]
        m: u64,
        /// Confirm the exact value with a floating-point evaluation.
        #[arg(long)]
        float_check: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Certify h > 1 on the d = 3 (mod 4) slice of a family.
    Paper {
        #[arg(long)]
        word: SymmetricWord,
        /// Slice indices; indices below 1 are not part of the statement.
        #[arg(long, value_name = "A..B")]
        n: IndexRange,
        /// Norm equations x^2 - d y^2 = +-p are scanned for primes p = 1 (mod 4) up to this bound.
        #[arg(long, default_value_t = 50)]
        p_limit: u64,
        #[arg(long, default_value_t = DEFAULT_SPLIT_PRIME_LIMIT)]
        split_limit: u64,
    },
    /// Certify h > 1 for one of the four explicit families.
    Theorem11 {
        /// 1: (2np)^2-1, 2: (2np)^2+3, 3: ((2n+1)p)^2+2, 4: ((2n+1)p)^2-2.
        #[arg(long)]
        case: u8,
        #[arg(long)]
        p: u64,
        #[arg(long, value_name = "A..B")]
        n: IndexRange,
        #[arg(long, default_value_t = 0)]
        p_limit: u64,
        #[arg(long, default_value_t = DEFAULT_SPLIT_PRIME_LIMIT)]
        split_limit: u64,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_)
        | Error::PerfectSquare(_)
        | Error::NotAdmissible { .. }
        | Error::NoIntegralProgression { .. }
        | Error::NotFound(_) => EXIT_INPUT,
        Error::CertificateFailure { .. } => EXIT_FINDING,
        Error::MethodDisagreement { .. } | Error::PrecisionExhausted { .. } | Error::NonIntegralResult { .. } => {
            EXIT_DISAGREEMENT
        }
    }
}

struct Output {
    records: Vec<Value>,
    exit: i32,
}

impl Output {
    fn ok(records: Vec<Value>) -> Self {
        Output { records, exit: EXIT_OK }
    }
}

fn tagged(kind: &str, v: impl serde::Serialize) -> Value {
    let mut v = serde_json::to_value(v).expect("records serialize");
    if let Value::Object(o) = &mut v {
        o.insert("type".into(), json!(kind));
    }
    v
}

fn target_family(w: &WordArg) -> Result<(QuadFamily, Option<Value>)> {
    let f = synthesize(&w.word)?;
    match w.mod4 {
        None => Ok((f, None)),
        Some(t) => {
            let slices = refine_mod4(&f, t)?;
            match slices.as_slice() {
                [s] => Ok((
                    s.family.clone(),
                    Some(json!({"residue": s.residue.to_string(), "modulus": s.modulus.to_string(), "target": t})),
                )),
                [] => Err(Error::Domain(format!("word {} has no d = {t} (mod 4) slice", w.word))),
                _ => Err(Error::Domain(format!(
                    "word {} has {} separate d = {t} (mod 4) classes; sweep the family instead",
                    w.word,
                    slices.len()
                ))),
            }
        }
    }
}

fn descriptor(f: &QuadFamily, slice: &Option<Value>) -> Value {
    json!({
        "word": f.word.to_string(),
        "alpha": f.alpha.to_string(),
        "beta": f.beta.to_string(),
        "gamma": f.gamma.to_string(),
        "slice": slice,
    })
}

fn skip_text(r: &SkipReason) -> &'static str {
    match r {
        SkipReason::BelowStart => "below family start",
        SkipReason::PerfectSquare => "perfect square",
        SkipReason::NotSquarefree => "not squarefree",
    }
}

fn family_cmd(cmd: &FamilyCmd) -> Result<Output> {
    match cmd {
        FamilyCmd::Synth { word } => {
            let (f, slice) = target_family(word)?;
            let mut v = tagged("family", &f);
            v["schema"] = json!(FAMILY_SCHEMA);
            if let Some(s) = slice {
                v["slice"] = s;
            }
            Ok(Output::ok(vec![v]))
        }
        FamilyCmd::Sweep { word, n, all } => {
            let (f, slice) = target_family(word)?;
            let mut records = Vec::new();
            for ev in scan_members(&f, n.iter(), !*all) {
                records.push(match ev {
                    MemberEvent::Kept(m) => {
                        let sf = m.d.to_biguint().is_some_and(|u| is_squarefree(&u));
                        json!({"type": "member", "n": m.n.to_string(), "d": m.d.to_string(),
                               "z": m.z.to_string(), "p": m.p.to_string(), "squarefree": sf,
                               "d_mod4": (m.d.to_u64().map(|d| d % 4))})
                    }
                    MemberEvent::Skipped { n, d, reason } => {
                        json!({"type": "skipped", "n": n.to_string(), "d": d.to_string(), "reason": skip_text(&reason)})
                    }
                });
            }
            let kept = records.iter().filter(|r| r["type"] == "member").count();
            records.push(json!({"type": "summary", "family": descriptor(&f, &slice),
                                "n_range": n.to_string(), "members": kept,
                                "skipped": records.len() - kept}));
            Ok(Output::ok(records))
        }
    }
}

fn pell_cmd(cmd: &PellCmd) -> Result<Output> {
    match cmd {
        PellCmd::Unit { d } => Ok(Output::ok(vec![tagged("unit", fundamental_unit(d)?)])),
        PellCmd::Norm { d, norm, method } => {
            let sol = match method {
                NormMethodArg::Auto => solve_norm(d, norm)?,
                NormMethodArg::Convergents => solve_norm_small(d, norm)?,
                NormMethodArg::Bounded => solve_norm_bounded(d, norm)?,
            };
            let mut v = tagged("norm", &sol);
            v["solvable"] = json!(sol.is_solvable());
            Ok(Output::ok(vec![v]))
        }
        PellCmd::Scan { word, p, n } => {
            let (f, slice) = target_family(word)?;
            let findings = lemma31_scan(&f, p, n.iter())?;
            let mut records: Vec<Value> = findings.iter().map(|x| tagged("finding", x)).collect();
            records.push(json!({"type": "summary", "family": descriptor(&f, &slice), "p": p.to_string(),
                                "n_range": n.to_string(), "findings": findings.len(), "exhaustive": true}));
            Ok(Output::ok(records))
        }
    }
}

fn class_cmd(cmd: &ClassCmd) -> Result<Output> {
    match cmd {
        ClassCmd::H { d, method } => Ok(Output::ok(vec![tagged("class", class_number_with(*d, *method)?)])),
        ClassCmd::Cert { d, split_limit } => match nontriviality_certificate_with_limit(*d, *split_limit) {
            Ok(c) => Ok(Output::ok(vec![tagged("certificate", c)])),
            Err(Error::CertificateFailure { d, step, detail }) => Ok(Output {
                records: vec![json!({"type": "certificate_failure", "d": d, "step": step, "detail": detail})],
                exit: EXIT_FINDING,
            }),
            Err(e) => Err(e),
        },
    }
}

fn cyclo_cmd(cmd: &CycloCmd) -> Result<Output> {
    match cmd {
        CycloCmd::Minus { m, float_check } => Ok(Output::ok(vec![tagged("minus", minus_class_report(*m, *float_check)?)])),
    }
}

fn sweep_output(mut records: Vec<Value>, mut summary: Value, cache: &Cache) -> Output {
    let counts = summarize(&records);
    let fail = counts["fail"].as_u64().unwrap_or(0);
    if let (Value::Object(s), Value::Object(c)) = (&mut summary, counts) {
        s.extend(c);
        s.insert("type".into(), json!("summary"));
        s.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    }
    records.push(summary);
    let mismatches = cache.mismatches();
    let exit = if !mismatches.is_empty() {
        records.push(json!({"type": "cache_mismatch", "keys": mismatches}));
        EXIT_DISAGREEMENT
    } else if fail > 0 {
        EXIT_FINDING
    } else {
        EXIT_OK
    };
    Output { records, exit }
}

/// The four explicit families and their conditions on `p` and `n`.
fn theorem11_d(case: u8, p: u64, n: i64) -> Result<(BigInt, Option<&'static str>)> {
    let (p, nb) = (BigInt::from(p), BigInt::from(n));
    Ok(match case {
        1 => (num_traits::pow(2 * &nb * &p, 2) - 1, None),
        2 => (
            num_traits::pow(2 * &nb * &p, 2) + 3,
            (n % 3 != 0).then_some("n is not a multiple of 3"),
        ),
        3 => (num_traits::pow((2 * &nb + 1) * &p, 2) + 2, None),
        4 => (num_traits::pow((2 * &nb + 1) * &p, 2) - 2, None),
        _ => return Err(Error::Domain(format!("case must be 1, 2, 3 or 4, got {case}"))),
    })
}

fn theorem11_check_p(case: u8, p: u64) -> Result<()> {
    if !is_prime_u64(p) {
        return Err(Error::Domain(format!("p = {p} is not prime")));
    }
    let ok = match case {
        1 => p % 4 == 1,
        2 => p % 2 == 1,
        3 => p % 8 == 1 || p % 8 == 7,
        4 => (p % 8 == 1 || p % 8 == 3) && p != 3,
        _ => return Err(Error::Domain(format!("case must be 1, 2, 3 or 4, got {case}"))),
    };
    if !ok {
        let cond = ["p = 1 (mod 4)", "p = +-1 (mod 4)", "p = +-1 (mod 8)", "p = 1, 3 (mod 8), p != 3"][case as usize - 1];
        return Err(Error::Domain(format!("case {case} requires {cond}, got p = {p}")));
    }
    Ok(())
}

fn job_for(n: i64, parent_n: Option<BigInt>, d: BigInt, forced_skip: Option<String>, theorem_prime: Option<u64>) -> MemberJob {
    let skip = forced_skip.or_else(|| {
        let sf = d.to_biguint().is_some_and(|u| u > 1u32.into() && is_squarefree(&u));
        (!sf).then(|| "not squarefree".to_string())
    });
    MemberJob { n, parent_n, d, skip, theorem_prime }
}

fn verify_cmd(cmd: &VerifyCmd, cache: &Cache) -> Result<Output> {
    match cmd {
        VerifyCmd::Paper { word, n, p_limit, split_limit } => {
            let f = synthesize(word)?;
            if f.t % 2 != 0 {
                return Err(Error::Domain(format!("word {word} has odd period length t = {}", f.t)));
            }
            let slices = refine_mod4(&f, 3)?;
            if slices.is_empty() {
                return Err(Error::Domain(format!("word {word} has no d = 3 (mod 4) slice")));
            }
            let mut jobs = Vec::new();
            for k in n.start.max(1)..=n.end {
                for s in &slices {
                    let kb = BigInt::from(k);
                    if kb < s.family.n_start {
                        continue;
                    }
                    jobs.push(job_for(k, Some(s.parent_index(&kb)), s.family.d_at(&kb), None, None));
                }
            }
            jobs.sort_by(|a, b| a.parent_n.cmp(&b.parent_n));
            let params = SweepParams { p_limit: *p_limit, split_limit: *split_limit };
            let records = run_sweep(&jobs, params, cache)?;
            let slice_desc: Vec<Value> = slices
                .iter()
                .map(|s| json!({"residue": s.residue.to_string(), "modulus": s.modulus.to_string()}))
                .collect();
            let mut fam = descriptor(&f, &None);
            fam["slice"] = json!(slice_desc);
            let summary = json!({"command": "verify paper", "family": fam, "n_range": n.to_string(),
                                 "p_limit": p_limit, "split_limit": split_limit});
            Ok(sweep_output(records, summary, cache))
        }
        VerifyCmd::Theorem11 { case, p, n, p_limit, split_limit } => {
            theorem11_check_p(*case, *p)?;
            let mut jobs = Vec::new();
            for k in n.start.max(1)..=n.end {
                let (d, skip) = theorem11_d(*case, *p, k)?;
                jobs.push(job_for(k, None, d, skip.map(str::to_string), Some(*p)));
            }
            let params = SweepParams { p_limit: *p_limit, split_limit: *split_limit };
            let records = run_sweep(&jobs, params, cache)?;
            let summary = json!({"command": "verify theorem11", "case": case, "p": p,
                                 "n_range": n.to_string(), "p_limit": p_limit, "split_limit": split_limit});
            Ok(sweep_output(records, summary, cache))
        }
    }
}

fn dispatch(cli: &Cli, cache: &Cache) -> Result<Output> {
    match &cli.command {
        Command::Family(c) => family_cmd(c),
        Command::Pell(c) => pell_cmd(c),
        Command::Class(c) => class_cmd(c),
        Command::Cyclo(c) => cyclo_cmd(c),
        Command::Verify(c) => verify_cmd(c, cache),
    }
}

/// Parse `args` (including the program name), run the command and return the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            };
        }
    };
    let started = Instant::now();
    let mut cache = match &cli.cache {
        Some(path) => match Cache::open(path, cli.verify_cache.then_some(cli.verify_rate)) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "nfkit: {e}");
                return EXIT_INPUT;
            }
        },
        None => Cache::disabled(),
    };
    let jobs = cli
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "nfkit: cannot start worker pool: {e}");
            return EXIT_INPUT;
        }
    };
    let result = pool.install(|| dispatch(&cli, &cache));
    let flushed = cache.flush();

    let mut emitter = Emitter::new(out, cli.json);
    let code = match result {
        Ok(output) => {
            for r in output.records {
                if emitter.emit(r).is_err() {
                    return EXIT_INPUT;
                }
            }
            output.exit
        }
        Err(e) => {
            let _ = writeln!(err, "nfkit: error: {e}");
            exit_code(&e)
        }
    };
    if let Err(e) = flushed {
        let _ = writeln!(err, "nfkit: {e}");
    }
    if !cli.no_meta && code != EXIT_INPUT {
        let stats = cache.stats();
        let _ = emitter.emit(json!({
            "type": "meta",
            "tool": "nfkit",
            "version": env!("CARGO_PKG_VERSION"),
            "elapsed_ms": started.elapsed().as_millis() as u64,
            "jobs": jobs,
            "cache": cache.is_enabled(),
            "cache_hits": stats.hits,
            "cache_misses": stats.misses,
            "cache_verified": stats.verified,
        }));
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["nfkit", "--json", "--no-meta"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn lines(s: &str) -> Vec<Value> {
        s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
    }

    #[test]
    fn ranges_parse() {
        assert_eq!("1..50".parse::<IndexRange>().unwrap(), IndexRange { start: 1, end: 50 });
        assert_eq!("2..=10".parse::<IndexRange>().unwrap(), IndexRange { start: 2, end: 10 });
        assert_eq!("7".parse::<IndexRange>().unwrap(), IndexRange { start: 7, end: 7 });
        assert!("a..b".parse::<IndexRange>().is_err());
    }

    #[test]
    fn family_synth_examples() {
        let (code, out, _) = run_str(&["family", "synth", "--word", "1"]);
        assert_eq!(code, 0);
        let v = &lines(&out)[0];
        assert_eq!((v["alpha"].as_str(), v["beta"].as_str(), v["gamma"].as_str()), (Some("1"), Some("2"), Some("0")));
        let (code, _, err) = run_str(&["family", "synth", "--word", "1,2,1"]);
        assert_eq!(code, 2);
        assert!(err.contains("q_3 = 4 is even"), "{err}");
        let (code, out, _) = run_str(&["family", "synth", "--word", "2,2"]);
        assert_eq!(code, 0);
        let v = &lines(&out)[0];
        assert_eq!((v["alpha"].as_str(), v["beta"].as_str(), v["gamma"].as_str()), (Some("25"), Some("14"), Some("2")));
    }

    #[test]
    fn class_examples() {
        let (code, out, _) = run_str(&["class", "h", "--d", "79", "--method", "both"]);
        assert_eq!(code, 0);
        assert_eq!(lines(&out)[0]["h"], "3");
        let (code, _, err) = run_str(&["class", "h", "--d", "12"]);
        assert_eq!(code, 2);
        assert!(err.contains("not a squarefree"), "{err}");
        let (code, out, _) = run_str(&["class", "h", "--d", "3", "--method", "forms"]);
        assert_eq!(code, 0);
        assert_eq!(lines(&out)[0]["h"], "1");
    }

    #[test]
    fn cyclo_examples() {
        let (code, out, _) = run_str(&["cyclo", "minus", "--m", "23"]);
        assert_eq!(code, 0);
        assert_eq!(lines(&out)[0]["h_minus"], "3");
        let (code, out, _) = run_str(&["cyclo", "minus", "--m", "4"]);
        assert_eq!(code, 0);
        assert_eq!(lines(&out)[0]["h_minus"], "1");
        let (code, _, _) = run_str(&["cyclo", "minus", "--m", "6"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_paper_small() {
        let (code, out, _) = run_str(&["verify", "paper", "--word", "1", "--n", "1..10", "--p-limit", "50"]);
        assert_eq!(code, 0, "{out}");
        let recs = lines(&out);
        let passed: Vec<&str> = recs
            .iter()
            .filter(|r| r["status"] == "PASS")
            .map(|r| r["d"].as_str().unwrap())
            .collect();
        assert_eq!(passed, ["15", "35", "143", "195", "255", "323", "399", "483"]);
        let (code, _, _) = run_str(&["verify", "paper", "--word", "1,2,1", "--n", "1..5"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_str(&["verify", "paper", "--word", "1", "--n", "0..0"]);
        assert_eq!(code, 0);
        let recs = lines(&out);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0]["members"], "0");
    }

    #[test]
    fn theorem11_examples() {
        let (code, out, _) = run_str(&["verify", "theorem11", "--case", "1", "--p", "5", "--n", "1..2"]);
        assert_eq!(code, 0, "{out}");
        let recs = lines(&out);
        assert_eq!(recs[0]["d"], "99");
        assert_eq!(recs[0]["status"], "SKIP");
        assert_eq!(recs[1]["d"], "399");
        assert_eq!(recs[1]["status"], "PASS");
        let (code, _, _) = run_str(&["verify", "theorem11", "--case", "3", "--p", "6", "--n", "1..2"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["verify", "theorem11", "--case", "1", "--p", "7", "--n", "1..2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn certificate_failure_is_a_finding() {
        let (code, out, _) = run_str(&["class", "cert", "--d", "7"]);
        assert_eq!(code, 3);
        assert_eq!(lines(&out)[0]["step"], "class_number_one");
    }

    #[test]
    fn norm_and_scan() {
        let (code, out, _) = run_str(&["pell", "norm", "--d", "15", "--norm", "-11"]);
        assert_eq!(code, 0);
        let v = &lines(&out)[0];
        assert_eq!(v["solvable"], true);
        let (code, out, _) = run_str(&["pell", "scan", "--word", "1", "--mod4", "3", "--p", "5", "--n", "1..50"]);
        assert_eq!(code, 0);
        let recs = lines(&out);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0]["findings"], "0");
    }
}
