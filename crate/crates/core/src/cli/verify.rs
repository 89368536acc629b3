//! Per-member evaluation shared by the sweep commands.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{is_prime_u64, is_squarefree};
use crate::pell::{solve_norm, NormSolution};
use crate::quadclass::{certify_with_class, class_number, ClassData};
use crate::{Error, Result};

use super::cache::Cache;

/// One index of a sweep before evaluation.
#[derive(Debug, Clone)]
pub struct MemberJob {
    pub n: i64,
    /// Index in the parent family, when the sweep runs over a slice.
    pub parent_n: Option<BigInt>,
    pub d: BigInt,
    /// Set when the index is passed over without evaluation.
    pub skip: Option<String>,
    /// Prime whose norm equations `x^2 - d y^2 = +-p` must be unsolvable.
    pub theorem_prime: Option<u64>,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepParams {
    pub p_limit: u64,
    pub split_limit: u64,
}

pub fn class_cached(cache: &Cache, d: u64) -> Result<ClassData> {
    let v = cache.get_or_compute(&format!("class:{d}:both"), || {
        Ok(serde_json::to_value(class_number(d)?).expect("class data serializes"))
    })?;
    serde_json::from_value(v).map_err(|e| Error::Domain(format!("cached class data for {d}: {e}")))
}

pub fn norm_cached(cache: &Cache, d: &BigInt, n: &BigInt) -> Result<NormSolution> {
    let v = cache.get_or_compute(&format!("norm:{d}:{n}"), || {
        Ok(serde_json::to_value(solve_norm(d, n)?).expect("norm solutions serialize"))
    })?;
    serde_json::from_value(v).map_err(|e| Error::Domain(format!("cached norm solution: {e}")))
}

/// Certificate outcome as a record; failures of the certificate itself are
/// findings, not errors.
pub fn certificate_cached(cache: &Cache, class: &ClassData, limit: u64) -> Result<Value> {
    cache.get_or_compute(&format!("cert:{}:{limit}", class.d), || {
        match certify_with_class(class.clone(), limit) {
            Ok(c) => Ok(json!({"status": "ok", "certificate": c})),
            Err(Error::CertificateFailure { step, detail, .. }) => {
                Ok(json!({"status": "failed", "step": step, "detail": detail}))
            }
            Err(e) => Err(e),
        }
    })
}

fn findings_for(cache: &Cache, d: &BigInt, p: u64) -> Result<Vec<Value>> {
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let target = BigInt::from(p as i64 * sign);
        for (x, y) in norm_cached(cache, d, &target)?.solutions {
            out.push(json!({"p": p, "sign": sign, "x": x.to_string(), "y": y.to_string()}));
        }
    }
    Ok(out)
}

fn evaluate(job: &MemberJob, params: SweepParams, cache: &Cache) -> Result<Value> {
    let mut rec = json!({
        "type": "member",
        "n": job.n,
        "d": job.d.to_string(),
    });
    if let Some(pn) = &job.parent_n {
        rec["parent_n"] = json!(pn.to_string());
    }
    let d_mod4 = job.d.to_u64().map(|d| d % 4);
    rec["d_mod4"] = json!(d_mod4);
    if let Some(reason) = &job.skip {
        rec["squarefree"] = json!(job.d.to_biguint().is_some_and(|u| !u.is_zero() && is_squarefree(&u)));
        rec["status"] = json!("SKIP");
        rec["reason"] = json!(reason);
        return Ok(rec);
    }
    let Some(d) = job.d.to_u64() else {
        rec["status"] = json!("FAIL");
        rec["reason"] = json!("d exceeds the supported class-number range");
        return Ok(rec);
    };
    rec["squarefree"] = json!(true);
    let class = class_cached(cache, d)?;
    rec["h"] = json!(class.h);
    rec["h_narrow"] = json!(class.h_narrow);
    let cert = certificate_cached(cache, &class, params.split_limit)?;
    let cert_ok = cert["status"] == "ok";
    rec["certificate"] = cert;

    let mut findings = Vec::new();
    for p in (5..=params.p_limit).step_by(4).filter(|&p| is_prime_u64(p)) {
        findings.extend(findings_for(cache, &job.d, p)?);
    }
    rec["lemma_findings"] = json!(findings);

    let mut theorem_ok = true;
    if let Some(p) = job.theorem_prime {
        let f = findings_for(cache, &job.d, p)?;
        theorem_ok = f.is_empty();
        rec["theorem_prime"] = json!(p);
        rec["theorem_prime_solutions"] = json!(f);
    }
    let pass = class.h > 1 && cert_ok && theorem_ok;
    rec["status"] = json!(if pass { "PASS" } else { "FAIL" });
    Ok(rec)
}

/// Evaluate all jobs in parallel, keeping input order.
pub fn run_sweep(jobs: &[MemberJob], params: SweepParams, cache: &Cache) -> Result<Vec<Value>> {
    jobs.par_iter().map(|j| evaluate(j, params, cache)).collect()
}

/// Summary counts over member records.
pub fn summarize(records: &[Value]) -> Value {
    let count = |s: &str| records.iter().filter(|r| r["status"] == s).count();
    let failures: Vec<Value> = records
        .iter()
        .filter(|r| r["status"] == "FAIL")
        .map(|r| json!({"n": r["n"], "d": r["d"]}))
        .collect();
    json!({
        "members": records.len(),
        "pass": count("PASS"),
        "fail": count("FAIL"),
        "skipped": count("SKIP"),
        "failures": failures,
    })
}
