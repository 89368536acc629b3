//! Certificates that `Q(sqrt d)` has class number greater than one.
//!
//! A prime `p` that splits in `Q(sqrt d)` has a prime ideal of norm `p` above
//! it. When neither `x^2 - d y^2 = p` nor `x^2 - d y^2 = -p` has a solution
//! that ideal is not principal, so the class group is nontrivial. For
//! `phi(d) > 4` the class number of `Q(sqrt d)` divides the class number of
//! the maximal real subfield of the `4d`-th cyclotomic field, which is then
//! also greater than one.

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr, PickFirst};

use crate::arith::{is_prime_u64, is_squarefree_u64, kronecker_i64, primality_method, totient_u64, PrimalityMethod};
use crate::pell::{solve_norm, NormSolution};
use crate::{CertificateStep, Error, Result};

use super::{class_number, ClassData};

pub const CERTIFICATE_SCHEMA: &str = "nfkit.certificate/1";
pub const DEFAULT_SPLIT_PRIME_LIMIT: u64 = 100_000;
pub const CONCLUSION: &str = "h>1 and h | h_4d_plus";

/// Least prime `p <= limit` with `p = 1 (mod 4)`, `p` coprime to `4d` and
/// `(d | p) = +1`.
pub fn split_prime_search(d: u64, limit: u64) -> Result<u64> {
    split_primes(d, limit)
        .next()
        .ok_or_else(|| Error::NotFound(format!("no split prime p = 1 (mod 4) up to {limit} for d = {d}")))
}

fn split_primes(d: u64, limit: u64) -> impl Iterator<Item = u64> {
    (5..=limit)
        .step_by(4)
        .filter(move |&p| d % p != 0 && is_prime_u64(p) && kronecker_i64(d as i64, p as i64) == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormCheck {
    pub plus: NormSolution,
    pub minus: NormSolution,
}

/// A split prime that was tried and discarded because one of its norm
/// equations is solvable.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedPrime {
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub p: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub sign: i8,
    pub witness: (String, String),
}

/// Integers accept either JSON numbers or decimal strings on input.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub d: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub p: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub kronecker_value: i8,
    pub norm_check: NormCheck,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub h: u64,
    pub class_data: ClassData,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub phi_gate: u64,
    pub conclusion: String,
    pub rejected_primes: Vec<RejectedPrime>,
    pub primality_method: PrimalityMethod,
}

fn fail(d: u64, step: CertificateStep, detail: impl Into<String>) -> Error {
    Error::CertificateFailure {
        d,
        step,
        detail: detail.into(),
    }
}

fn check_preconditions(d: u64) -> Result<()> {
    if d < 7 || d % 4 != 3 || !is_squarefree_u64(d) {
        return Err(fail(
            d,
            CertificateStep::Precondition,
            "d must be squarefree, at least 7 and congruent to 3 mod 4",
        ));
    }
    Ok(())
}

/// Build a certificate with the default split-prime limit.
pub fn nontriviality_certificate(d: u64) -> Result<Certificate> {
    nontriviality_certificate_with_limit(d, DEFAULT_SPLIT_PRIME_LIMIT)
}

/// Build a certificate, trying split primes in increasing order up to
/// `limit` until one has both norm equations unsolvable.
pub fn nontriviality_certificate_with_limit(d: u64, limit: u64) -> Result<Certificate> {
    check_preconditions(d)?;
    certify_with_class(class_number(d)?, limit)
}

/// Certificate for an already computed class number.
///
/// The class number is checked before the prime search: when `h = 1` every
/// split prime is the norm of a principal ideal and the search cannot succeed.
pub fn certify_with_class(class_data: ClassData, limit: u64) -> Result<Certificate> {
    let d = class_data.d;
    check_preconditions(d)?;
    if class_data.h <= 1 {
        return Err(fail(
            d,
            CertificateStep::ClassNumberOne,
            format!("h({d}) = {}", class_data.h),
        ));
    }
    let phi = totient_u64(d);
    if phi <= 4 {
        return Err(fail(d, CertificateStep::TotientGate, format!("phi({d}) = {phi} <= 4")));
    }

    let db = BigInt::from(d);
    let mut rejected = Vec::new();
    let mut any_split = false;
    for p in split_primes(d, limit) {
        any_split = true;
        let plus = solve_norm(&db, &BigInt::from(p))?;
        let minus = solve_norm(&db, &-BigInt::from(p))?;
        if let Some((sign, sol)) = [(1i8, &plus), (-1, &minus)]
            .into_iter()
            .find(|(_, s)| s.is_solvable())
        {
            let (x, y) = &sol.solutions[0];
            rejected.push(RejectedPrime {
                p,
                sign,
                witness: (x.to_string(), y.to_string()),
            });
            continue;
        }
        return Ok(Certificate {
            schema: CERTIFICATE_SCHEMA.to_string(),
            d,
            p,
            kronecker_value: 1,
            norm_check: NormCheck { plus, minus },
            h: class_data.h,
            class_data,
            phi_gate: phi,
            conclusion: CONCLUSION.to_string(),
            rejected_primes: rejected,
            primality_method: primality_method(&BigUint::from(p)),
        });
    }
    if any_split {
        Err(fail(
            d,
            CertificateStep::NormEquationSolvable,
            format!(
                "all {} split primes up to {limit} are norms of principal ideals",
                rejected.len()
            ),
        ))
    } else {
        Err(fail(
            d,
            CertificateStep::SplitPrimeSearch,
            format!("no split prime p = 1 (mod 4) up to {limit}"),
        ))
    }
}

impl Certificate {
    /// Recheck every claim from the stored fields alone: primality and
    /// splitting of `p`, both norm decisions, the class number and the totient
    /// gate. Returns the first failing step.
    pub fn revalidate(&self) -> Result<()> {
        let d = self.d;
        check_preconditions(d)?;
        if self.schema != CERTIFICATE_SCHEMA {
            return Err(fail(d, CertificateStep::Precondition, format!("unknown schema {}", self.schema)));
        }
        let p = self.p;
        if !is_prime_u64(p) || p % 4 != 1 || d % p == 0 {
            return Err(fail(d, CertificateStep::SplitPrimeSearch, format!("{p} is not a prime = 1 mod 4 coprime to d")));
        }
        let k = kronecker_i64(d as i64, p as i64);
        if k != 1 || self.kronecker_value != 1 {
            return Err(fail(d, CertificateStep::SplitPrimeSearch, format!("(d | p) = {k}")));
        }
        let db = BigInt::from(d);
        for (target, stored) in [(BigInt::from(p), &self.norm_check.plus), (-BigInt::from(p), &self.norm_check.minus)] {
            if stored.d != db || stored.n != target {
                return Err(fail(d, CertificateStep::NormEquationSolvable, "norm record does not match d and p"));
            }
            let fresh = solve_norm(&db, &target)?;
            if fresh.is_solvable() || stored.is_solvable() {
                return Err(fail(d, CertificateStep::NormEquationSolvable, format!("x^2 - {d} y^2 = {target} is solvable")));
            }
        }
        let c = class_number(d)?;
        if c.h != self.h || c.h <= 1 {
            return Err(fail(d, CertificateStep::ClassNumberOne, format!("recomputed h = {}, stored {}", c.h, self.h)));
        }
        let phi = totient_u64(d);
        if phi != self.phi_gate || phi <= 4 {
            return Err(fail(d, CertificateStep::TotientGate, format!("phi({d}) = {phi}, stored {}", self.phi_gate)));
        }
        if self.conclusion != CONCLUSION {
            return Err(fail(d, CertificateStep::Precondition, "unexpected conclusion text"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_criterion(d: u64, p: u64) -> i64 {
        let mut r = 1u64;
        for _ in 0..(p - 1) / 2 {
            r = r * (d % p) % p;
        }
        if r == 1 {
            1
        } else if r == 0 {
            0
        } else {
            -1
        }
    }

    #[test]
    fn split_prime_examples() {
        assert_eq!(split_prime_search(15, 100).unwrap(), 17);
        assert_eq!(split_prime_search(35, 100).unwrap(), 13);
        assert!(matches!(split_prime_search(3, 4), Err(Error::NotFound(_))));
        assert_eq!(euler_criterion(15, 13), -1);
        assert_eq!(euler_criterion(15, 17), 1);
    }

    #[test]
    fn split_prime_agrees_with_euler() {
        for d in (7..400u64).filter(|d| d % 4 == 3 && is_squarefree_u64(*d)) {
            let p = split_prime_search(d, 10_000).unwrap();
            assert_eq!(euler_criterion(d, p), 1);
            for q in (5..p).step_by(4).filter(|&q| is_prime_u64(q) && d % q != 0) {
                assert_eq!(euler_criterion(d, q), -1, "d={d} q={q}");
            }
        }
    }

    #[test]
    fn certificate_examples() {
        let c = nontriviality_certificate(15).unwrap();
        assert_eq!((c.p, c.h, c.phi_gate), (17, 2, 8));
        assert!(c.rejected_primes.is_empty());
        let c = nontriviality_certificate(35).unwrap();
        assert_eq!((c.p, c.h, c.phi_gate), (13, 2, 24));
        c.revalidate().unwrap();
    }

    #[test]
    fn certificate_rejections() {
        assert!(matches!(
            nontriviality_certificate(5),
            Err(Error::CertificateFailure { step: CertificateStep::Precondition, .. })
        ));
        assert!(matches!(
            nontriviality_certificate(7),
            Err(Error::CertificateFailure { step: CertificateStep::ClassNumberOne, .. })
        ));
    }

    #[test]
    fn certificates_round_trip_and_revalidate() {
        for d in [15u64, 35, 39, 51, 55, 87, 143, 195, 399] {
            let c = nontriviality_certificate(d).unwrap();
            let json = serde_json::to_string(&c).unwrap();
            let back: Certificate = serde_json::from_str(&json).unwrap();
            assert_eq!(back, c);
            back.revalidate().unwrap();
        }
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut c = nontriviality_certificate(15).unwrap();
        c.p = 13;
        assert!(c.revalidate().is_err());
        let mut c = nontriviality_certificate(15).unwrap();
        c.h = 4;
        assert!(c.revalidate().is_err());
    }
}
