//! Quadratic families from symmetric continued-fraction words and the
//! machinery to certify that their real quadratic fields have class number
//! greater than one.
//!
//! A palindromic word `a_1, ..., a_{t-1}` determines a family
//! `d(n) = alpha n^2 + beta n + gamma` such that
//! `sqrt(d(n)) = [z(n); a_1, ..., a_{t-1}, 2 z(n)]` for every member. From there the
//! crate provides:
//!
//! - [`arith`]: primality, factorization, totient and the Kronecker symbol;
//! - [`cfrac`]: exact periodic expansions of `sqrt(d)` and convergents;
//! - [`family`]: admissibility, family synthesis and mod-4 slices;
//! - [`pell`]: fundamental units and exact decisions for `x^2 - d y^2 = N`;
//! - [`quadclass`]: class numbers of real quadratic fields by reduced-form
//!   cycles and by the analytic formula, and non-triviality certificates;
//! - [`cyclo`]: relative class numbers of cyclotomic fields from generalized
//!   Bernoulli numbers;
//! - [`cli`]: the `nfkit` command-line harness (sweeps, reports, cache).
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod arith;
pub mod cfrac;
pub mod cli;
pub mod cyclo;
mod error;
pub mod family;
pub mod pell;
pub mod quadclass;

pub use error::{CertificateStep, Error, Result};
