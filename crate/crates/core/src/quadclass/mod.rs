//! Class numbers of real quadratic fields.
//!
//! The narrow class number comes from counting rho-cycles of reduced forms of
//! the field discriminant; the wide class number follows from the norm of the
//! fundamental unit. The analytic class number formula provides an
//! independent value, and [`class_number`] refuses to answer unless both
//! agree.

mod analytic;
mod certificate;
mod forms;

pub use analytic::{
    analytic_class_number, analytic_value, maximal_order_unit, MaximalOrderUnit, INITIAL_BITS,
    TOLERANCE,
};
pub use certificate::{
    certify_with_class, nontriviality_certificate, nontriviality_certificate_with_limit,
    split_prime_search,
    Certificate, NormCheck, RejectedPrime, CERTIFICATE_SCHEMA, DEFAULT_SPLIT_PRIME_LIMIT,
};
pub use forms::{
    narrow_class_number_forms, principal_cycle, reduced_cycles, reduced_forms, QuadForm,
};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr, PickFirst};

use crate::arith::is_squarefree_u64;
use crate::pell::{fundamental_unit, FundamentalUnit};
use crate::{Error, Result};

/// Field discriminant of `Q(sqrt d)`: `d` if `d = 1 (mod 4)`, else `4d`.
pub fn field_discriminant(d: u64) -> Result<u64> {
    if d < 2 || !is_squarefree_u64(d) {
        return Err(Error::Domain(format!("{d} is not a squarefree integer >= 2")));
    }
    if d % 4 == 1 {
        Ok(d)
    } else {
        d.checked_mul(4)
            .ok_or_else(|| Error::Domain(format!("discriminant of {d} overflows")))
    }
}

/// How [`class_number_with`] obtains its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ClassMethod {
    /// Form cycles, confirmed by the analytic formula.
    #[default]
    Both,
    Forms,
    Analytic,
}

impl std::str::FromStr for ClassMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "both" => Ok(ClassMethod::Both),
            "forms" => Ok(ClassMethod::Forms),
            "analytic" => Ok(ClassMethod::Analytic),
            _ => Err(Error::Domain(format!(
                "unknown class number method {s:?} (expected both, forms or analytic)"
            ))),
        }
    }
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub d: u64,
    #[serde(rename = "D")]
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub disc: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub h_narrow: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub h: u64,
    pub unit: FundamentalUnit,
    pub methods_agree: bool,
    pub method: ClassMethod,
}

fn wide_from_narrow(d: u64, h_narrow: u64, norm: i8) -> Result<u64> {
    if norm == -1 {
        Ok(h_narrow)
    } else if h_narrow % 2 == 0 {
        Ok(h_narrow / 2)
    } else {
        Err(Error::Domain(format!(
            "narrow class number {h_narrow} of {d} is odd although the unit has norm +1"
        )))
    }
}

/// Class number of `Q(sqrt d)` by both methods.
///
/// # Errors
///
/// `MethodDisagreement` if the two methods differ, `PrecisionExhausted` if the
/// analytic value does not settle on an integer.
pub fn class_number(d: u64) -> Result<ClassData> {
    class_number_with(d, ClassMethod::Both)
}

pub fn class_number_with(d: u64, method: ClassMethod) -> Result<ClassData> {
    let disc = field_discriminant(d)?;
    let disc_i = i64::try_from(disc)
        .map_err(|_| Error::Domain(format!("discriminant {disc} exceeds i64")))?;
    let unit = fundamental_unit(&BigInt::from(d))?;
    let (h_narrow, h, agree) = match method {
        ClassMethod::Forms | ClassMethod::Both => {
            let h_narrow = narrow_class_number_forms(disc_i)?;
            let h = wide_from_narrow(d, h_narrow, unit.norm)?;
            if method == ClassMethod::Both {
                let analytic = analytic_class_number(d)?;
                if analytic != h {
                    return Err(Error::MethodDisagreement {
                        d,
                        forms: h,
                        analytic,
                    });
                }
            }
            (h_narrow, h, true)
        }
        ClassMethod::Analytic => {
            let h = analytic_class_number(d)?;
            let h_narrow = if unit.norm == -1 { h } else { 2 * h };
            (h_narrow, h, true)
        }
    };
    Ok(ClassData {
        d,
        disc,
        h_narrow,
        h,
        unit,
        methods_agree: agree,
        method,
    })
}
