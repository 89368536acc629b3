//! Class number from the analytic class number formula,
//! `h = sqrt(D) L(1, chi_D) / (2 log eps)`, evaluated in multiple precision.
//!
//! For the even character `chi_D(a) = (D | a)` the value at 1 is the finite
//! sum `L(1, chi) = -(1/sqrt D) sum_{a=1}^{D-1} chi(a) log sin(pi a / D)`.
//! With the symmetry `chi(D - a) = chi(a)` this becomes
//! `h = -(sum_{a < D/2} chi(a) log sin(pi a / D)) / log eps`.

use astro_float_num::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::kronecker_i64;
use crate::pell::fundamental_unit;
use crate::{Error, Result};

use super::field_discriminant;

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 48;
const RESEED_EVERY: u64 = 2048;
pub const INITIAL_BITS: usize = 128;
pub const TOLERANCE: f64 = 1e-6;

/// Fundamental unit of the maximal order, as `(a + b sqrt d) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalOrderUnit {
    pub a: BigInt,
    pub b: BigInt,
    pub norm: i8,
}

/// For `d = 1 (mod 4)` the unit of `Z[sqrt d]` is either the fundamental unit
/// of the maximal order or its cube; detect the cube root exactly.
pub fn maximal_order_unit(d: u64) -> Result<MaximalOrderUnit> {
    let db = BigInt::from(d);
    let u = fundamental_unit(&db)?;
    let whole = MaximalOrderUnit {
        a: 2 * &u.x,
        b: 2 * &u.y,
        norm: u.norm,
    };
    if d % 4 != 1 {
        return Ok(whole);
    }
    // eps0 + eps0' = a with a^3 - 3 nu a = 2x, nu = N(eps0) = N(eps)
    let nu = BigInt::from(u.norm);
    let two_x: BigInt = 2 * &u.x;
    let guess = two_x.cbrt();
    for delta in -1i64..=2 {
        let a = &guess + delta;
        if !a.is_positive() || &a * &a * &a - 3 * &nu * &a != two_x {
            continue;
        }
        let num: BigInt = &a * &a - 4 * &nu;
        if !num.is_multiple_of(&db) {
            continue;
        }
        let b2 = num / &db;
        let b = b2.sqrt();
        if &b * &b != b2 || !b.is_positive() {
            continue;
        }
        // ((a + b sqrt d)/2)^3 must reproduce x + y sqrt d
        let cx = &a * &a * &a + 3 * &a * &b * &b * &db;
        let cy = 3 * &a * &a * &b + &b * &b * &b * &db;
        if cx == 8 * &u.x && cy == 8 * &u.y {
            return Ok(MaximalOrderUnit { a, b, norm: u.norm });
        }
    }
    Ok(whole)
}

fn big(v: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&v.to_string(), Radix::Dec, p, RM, cc)
}

fn to_f64(v: &BigFloat) -> f64 {
    format!("{v}").parse::<f64>().unwrap_or(f64::NAN)
}

/// `log eps` of the maximal-order unit at `p` bits.
fn log_unit(d: u64, unit: &MaximalOrderUnit, p: usize, cc: &mut Consts) -> BigFloat {
    let sqrt_d = BigFloat::from_u64(d, p).sqrt(p, RM);
    let a = big(&unit.a, p, cc);
    let b = big(&unit.b, p, cc);
    let twice = a.add(&b.mul(&sqrt_d, p, RM), p, RM);
    twice
        .ln(p, RM, cc)
        .sub(&BigFloat::from_u64(2, p).ln(p, RM, cc), p, RM)
}

/// The unrounded analytic class number of `Q(sqrt d)` at `bits` of precision.
pub fn analytic_value(d: u64, bits: usize) -> Result<f64> {
    let disc = field_discriminant(d)?;
    let unit = maximal_order_unit(d)?;
    let p = bits + GUARD_BITS;
    let mut cc = Consts::new().map_err(|e| Error::Domain(format!("float context: {e:?}")))?;

    let theta = cc
        .pi(p, RM)
        .div(&BigFloat::from_u64(disc, p), p, RM);
    let (c1, s1) = (theta.cos(p, RM, &mut cc), theta.sin(p, RM, &mut cc));
    let (mut c, mut s) = (c1.clone(), s1.clone());
    let one = BigFloat::from_u64(1, p);
    let mut plus = one.clone();
    let mut minus = one;
    let half = (disc + 1) / 2;
    let disc_i = disc as i64;
    for a in 1..half {
        if a > 1 {
            if a % RESEED_EVERY == 0 {
                let angle = theta.mul(&BigFloat::from_u64(a, p), p, RM);
                c = angle.cos(p, RM, &mut cc);
                s = angle.sin(p, RM, &mut cc);
            } else {
                let nc = c.mul(&c1, p, RM).sub(&s.mul(&s1, p, RM), p, RM);
                let ns = s.mul(&c1, p, RM).add(&c.mul(&s1, p, RM), p, RM);
                c = nc;
                s = ns;
            }
        }
        match kronecker_i64(disc_i, a as i64) {
            1 => plus = plus.mul(&s, p, RM),
            -1 => minus = minus.mul(&s, p, RM),
            _ => {}
        }
    }
    // sum chi(a) log sin = log(plus / minus)
    let ratio = plus.div(&minus, p, RM);
    let log_sum = ratio.ln(p, RM, &mut cc);
    let h = log_sum
        .div(&log_unit(d, &unit, p, &mut cc), p, RM)
        .neg();
    Ok(to_f64(&h))
}

/// Class number of `Q(sqrt d)` by the analytic formula, rounded to the nearest
/// integer only when the value lies within `TOLERANCE` of it. Precision is
/// doubled once before giving up.
pub fn analytic_class_number(d: u64) -> Result<u64> {
    let mut bits = INITIAL_BITS;
    let mut last = f64::NAN;
    for _ in 0..2 {
        let v = analytic_value(d, bits)?;
        let r = v.round();
        if r >= 1.0 && (v - r).abs() < TOLERANCE {
            return Ok(r as u64);
        }
        last = v;
        bits *= 2;
    }
    Err(Error::PrecisionExhausted {
        d,
        bits: bits / 2,
        value: format!("{last}"),
    })
}

#[allow(dead_code)]
fn is_unit(u: &MaximalOrderUnit, d: u64) -> bool {
    let n = &u.a * &u.a - BigInt::from(d) * &u.b * &u.b;
    n == BigInt::from(4 * u.norm as i64) && !u.a.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analytic_examples() {
        assert_eq!(analytic_class_number(10).unwrap(), 2);
        assert_eq!(analytic_class_number(6).unwrap(), 1);
        assert_eq!(analytic_class_number(223).unwrap(), 3);
        assert_eq!(analytic_class_number(5).unwrap(), 1);
        assert_eq!(analytic_class_number(79).unwrap(), 3);
    }

    #[test]
    fn maximal_order_units() {
        // golden ratio: (1 + sqrt 5)/2, cube is 2 + sqrt 5
        let u = maximal_order_unit(5).unwrap();
        assert_eq!((u.a, u.b, u.norm), (BigInt::from(1), BigInt::from(1), -1));
        // Z[sqrt 13]: 18 + 5 sqrt 13 = ((3 + sqrt 13)/2)^3
        let u = maximal_order_unit(13).unwrap();
        assert_eq!((u.a.clone(), u.b.clone()), (BigInt::from(3), BigInt::from(1)));
        assert!(is_unit(&u, 13));
        // 17: 4 + sqrt 17 is already fundamental in the maximal order
        let u = maximal_order_unit(17).unwrap();
        assert_eq!((u.a, u.b), (BigInt::from(8), BigInt::from(2)));
        let u = maximal_order_unit(15).unwrap();
        assert_eq!((u.a, u.b), (BigInt::from(8), BigInt::from(2)));
    }

    #[test]
    fn value_is_near_an_integer() {
        let v = analytic_value(15, 128).unwrap();
        assert!((v - 2.0).abs() < 1e-12, "{v}");
    }
}
