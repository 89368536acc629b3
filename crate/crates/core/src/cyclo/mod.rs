//! Relative class numbers of cyclotomic fields.
//!
//! `h^-(m) = Q w prod_{chi odd} (-B_{1,chi} / 2)` where `Q` is 1 for prime
//! powers and 2 otherwise, and `w` counts the roots of unity in `Q(zeta_m)`.
//! Each `B_{1,chi}` lives in `Q(zeta_o)` with `o` the order of `chi`. Galois
//! conjugate characters are grouped, and the product over a group is the field
//! norm of one factor, obtained as a resultant with the cyclotomic polynomial.
//! An independent floating-point evaluation is kept as a cross-check.

mod characters;
mod poly;

pub use characters::{character_group, CharacterGroup, DirichletCharacter, Parity};
pub use poly::{cyclotomic_polynomial, resultant, Poly};

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr, PickFirst};

use crate::arith::{factorize_u64, totient_u64};
use crate::{Error, Result};

/// An element of `Q(zeta_o)` in the power basis `1, zeta, ..., zeta^{phi(o)-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloRational {
    pub order: u64,
    pub coeffs: Vec<BigRational>,
}

impl CycloRational {
    /// Reduce `sum c_k zeta^k` (any length) modulo the `o`-th cyclotomic
    /// polynomial.
    pub fn from_exponent_coeffs(order: u64, coeffs: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let reduced = Poly::new(coeffs).rem_monic(&phi);
        let deg = phi.degree().expect("cyclotomic polynomials are nonzero");
        let mut c = reduced.coeffs;
        c.resize(deg, BigRational::zero());
        CycloRational { order, coeffs: c }
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Image under `zeta -> zeta^{-1}`, i.e. complex conjugation.
    pub fn conjugate(&self) -> Self {
        self.galois(self.order - 1)
    }

    /// Image under `zeta -> zeta^k` for `k` coprime to the order.
    pub fn galois(&self, k: u64) -> Self {
        let o = self.order;
        let mut out = vec![BigRational::zero(); o as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = (i as u64 * k % o) as usize;
            out[j] += c;
        }
        CycloRational::from_exponent_coeffs(o, out)
    }

    /// Numerical value with `zeta = exp(2 pi i / o)`.
    pub fn to_complex(&self) -> Complex64 {
        let o = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let angle = std::f64::consts::TAU * k as f64 / o;
                Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    /// Field norm from `Q(zeta_o)` down to `Q`.
    pub fn norm(&self) -> BigRational {
        let phi = cyclotomic_polynomial(self.order);
        resultant(&phi, &Poly::new(self.coeffs.clone()))
    }
}

/// `B_{1,chi}` computed from the primitive character inducing `chi`:
/// `(1/f) sum_{a=1}^{f} chi*(a) a`.
///
/// # Errors
///
/// `Domain` for the principal character.
pub fn bernoulli_b1(group: &CharacterGroup, chi: &DirichletCharacter) -> Result<CycloRational> {
    if chi.is_principal() {
        return Err(Error::Domain("B_1 of the principal character is not used".into()));
    }
    let l = group.exponent();
    let o = chi.order;
    let step = l / o;
    let mut sums = vec![BigInt::zero(); o as usize];
    for (i, v) in group.primitive_values(chi).into_iter().enumerate() {
        if let Some(e) = v {
            sums[(e / step) as usize] += BigInt::from(i as u64 + 1);
        }
    }
    let f = BigInt::from(chi.conductor);
    let coeffs = sums
        .into_iter()
        .map(|s| BigRational::new(s, f.clone()))
        .collect();
    Ok(CycloRational::from_exponent_coeffs(o, coeffs))
}

/// Floating-point `B_{1,chi}` straight from the character values.
pub fn bernoulli_b1_float(group: &CharacterGroup, chi: &DirichletCharacter) -> Complex64 {
    let l = group.exponent() as f64;
    let f = chi.conductor as f64;
    group
        .primitive_values(chi)
        .into_iter()
        .enumerate()
        .filter_map(|(i, v)| {
            v.map(|e| Complex64::from_polar(1.0, std::f64::consts::TAU * e as f64 / l) * (i + 1) as f64)
        })
        .sum::<Complex64>()
        / f
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinusMethod {
    Exact,
    FloatChecked,
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusClassReport {
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub m: u64,
    #[serde(rename = "Q")]
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub q: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub w: u64,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub odd_character_count: u64,
    #[serde_as(as = "DisplayFromStr")]
    pub h_minus: BigUint,
    pub method: MinusMethod,
}

fn check_modulus(m: u64) -> Result<()> {
    if m < 3 {
        return Err(Error::Domain(format!("modulus must be >= 3, got {m}")));
    }
    if m % 4 == 2 {
        return Err(Error::Domain(format!(
            "m = {m} is 2 mod 4; Q(zeta_m) = Q(zeta_{}) so pass that modulus instead",
            m / 2
        )));
    }
    Ok(())
}

fn prefactors(m: u64) -> (u64, u64) {
    let q = if factorize_u64(m).len() == 1 { 1 } else { 2 };
    let w = if m % 2 == 0 { m } else { 2 * m };
    (q, w)
}

/// Odd characters grouped into Galois orbits; returns one representative per
/// orbit, in enumeration order.
fn odd_orbit_representatives(group: &CharacterGroup) -> Vec<DirichletCharacter> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut reps = Vec::new();
    for chi in group.characters.iter().filter(|c| c.parity == Parity::Odd) {
        if seen.contains(&chi.exponents) {
            continue;
        }
        for k in (1..chi.order).filter(|k| k.gcd(&chi.order) == 1) {
            seen.insert(group.power(chi, k).exponents);
        }
        seen.insert(chi.exponents.clone());
        reps.push(chi.clone());
    }
    reps
}

/// `h^-(m)` as an exact rational before the integrality check.
pub fn minus_class_rational(m: u64) -> Result<BigRational> {
    check_modulus(m)?;
    let group = character_group(m)?;
    let (q, w) = prefactors(m);
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let norms: Vec<Result<BigRational>> = odd_orbit_representatives(&group)
        .par_iter()
        .map(|chi| {
            let b1 = bernoulli_b1(&group, chi)?;
            let scaled = CycloRational {
                order: b1.order,
                coeffs: b1.coeffs.iter().map(|c| c * &minus_half).collect(),
            };
            Ok(scaled.norm())
        })
        .collect();
    let mut h = BigRational::from_integer(BigInt::from(q * w));
    for n in norms {
        h *= n?;
    }
    Ok(h)
}

/// Exact relative class number of `Q(zeta_m)`.
///
/// # Errors
///
/// `Domain` for `m < 3` or `m = 2 (mod 4)`; `NonIntegralResult` if the
/// product is not a positive integer.
pub fn minus_class_number(m: u64) -> Result<BigUint> {
    let h = minus_class_rational(m)?;
    if !h.is_integer() || !h.is_positive() {
        return Err(Error::NonIntegralResult {
            m,
            value: h.to_string(),
        });
    }
    Ok(h.to_integer().to_biguint().expect("positive"))
}

/// Relative class number from double-precision character sums, unrounded.
pub fn minus_class_float(m: u64) -> Result<f64> {
    check_modulus(m)?;
    let group = character_group(m)?;
    let (q, w) = prefactors(m);
    let prod = group
        .characters
        .iter()
        .filter(|c| c.parity == Parity::Odd)
        .map(|chi| bernoulli_b1_float(&group, chi) * -0.5)
        .fold(Complex64::one(), |acc, z| acc * z);
    Ok(prod.re * (q * w) as f64)
}

/// Exact value, optionally confirmed by the floating evaluation.
pub fn minus_class_report(m: u64, float_check: bool) -> Result<MinusClassReport> {
    let h = minus_class_number(m)?;
    let (q, w) = prefactors(m);
    let method = if float_check {
        let v = minus_class_float(m)?;
        let exact = h.to_f64().unwrap_or(f64::INFINITY);
        if (v - exact).abs() > 1e-6 * exact.max(1.0) {
            return Err(Error::NonIntegralResult {
                m,
                value: format!("float path gives {v}, exact path {h}"),
            });
        }
        MinusMethod::FloatChecked
    } else {
        MinusMethod::Exact
    };
    Ok(MinusClassReport {
        m,
        q,
        w,
        odd_character_count: totient_u64(m) / 2,
        h_minus: h,
        method,
    })
}
