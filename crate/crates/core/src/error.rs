use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The step of a non-triviality certificate that failed to go through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStep {
    Precondition,
    SplitPrimeSearch,
    NormEquationSolvable,
    ClassNumberOne,
    TotientGate,
}

impl std::fmt::Display for CertificateStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CertificateStep::Precondition => "precondition",
            CertificateStep::SplitPrimeSearch => "split_prime_search",
            CertificateStep::NormEquationSolvable => "norm_equation_solvable",
            CertificateStep::ClassNumberOne => "class_number_one",
            CertificateStep::TotientGate => "totient_gate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is a perfect square")]
    PerfectSquare(BigInt),

    #[error("word {word:?} is not admissible: {reason}")]
    NotAdmissible { word: Vec<u64>, reason: String },

    #[error("word {word:?}: congruence {detail} has no integral solution")]
    NoIntegralProgression { word: Vec<u64>, detail: String },

    #[error("class number methods disagree for d={d}: forms give {forms}, analytic gives {analytic}")]
    MethodDisagreement { d: u64, forms: u64, analytic: u64 },

    #[error("analytic class number for d={d} not resolved at {bits} bits (value {value})")]
    PrecisionExhausted { d: u64, bits: usize, value: String },

    #[error("not found: {0}")]
    NotFound(String),

    #[error("certificate for d={d} failed at step {step}: {detail}")]
    CertificateFailure {
        d: u64,
        step: CertificateStep,
        detail: String,
    },

    #[error("relative class number for m={m} is not a positive integer: {value}")]
    NonIntegralResult { m: u64, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
