//! Fundamental units of `Z[sqrt(d)]` and exact decisions for the norm
//! equation `x^2 - d y^2 = N`.
//!
//! Two deciders are provided. [`solve_norm_small`] handles `N^2 < d` through
//! the convergent table of one (or two) periods. [`solve_norm_bounded`] works
//! for every `N`: each orbit of solutions under the unit group has a
//! representative in a window whose size depends only on `|N|` and the
//! fundamental unit, so a finite scan over `y` is complete.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr, PickFirst};

use crate::arith;
use crate::cfrac::{period_convergents, sqrt_cf_expand};
use crate::family::QuadFamily;
use crate::{Error, Result};

/// Least unit `x + y sqrt(d) > 1` of `Z[sqrt(d)]`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalUnit {
    #[serde_as(as = "DisplayFromStr")]
    pub d: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub x: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub y: BigInt,
    #[serde_as(as = "PickFirst<(_, DisplayFromStr)>")]
    pub norm: i8,
}

impl FundamentalUnit {
    /// `(x + y sqrt d)^k` as a coordinate pair.
    pub fn pow(&self, k: u32) -> (BigInt, BigInt) {
        let (mut x, mut y) = (BigInt::one(), BigInt::zero());
        for _ in 0..k {
            let nx = &x * &self.x + &self.d * &y * &self.y;
            let ny = &x * &self.y + &y * &self.x;
            x = nx;
            y = ny;
        }
        (x, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormMethod {
    /// Convergent table, `N^2 < d`.
    Convergents,
    /// Unit-orbit window scan.
    BoundedSearch,
}

/// Solutions of `x^2 - d y^2 = N`, one or more per orbit.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormSolution {
    #[serde_as(as = "DisplayFromStr")]
    pub d: BigInt,
    #[serde(rename = "N")]
    #[serde_as(as = "DisplayFromStr")]
    pub n: BigInt,
    #[serde_as(as = "Vec<(DisplayFromStr, DisplayFromStr)>")]
    pub solutions: Vec<(BigInt, BigInt)>,
    pub exhaustive_class: bool,
    pub method: NormMethod,
}

impl NormSolution {
    pub fn is_solvable(&self) -> bool {
        !self.solutions.is_empty()
    }

    /// Every listed pair really solves the equation.
    pub fn verify(&self) -> bool {
        self.solutions
            .iter()
            .all(|(x, y)| x * x - &self.d * y * y == self.n)
    }
}

fn check_radicand(d: &BigInt) -> Result<()> {
    if *d < BigInt::from(2) {
        return Err(Error::Domain(format!("radicand must be >= 2, got {d}")));
    }
    if arith::is_perfect_square(d) {
        return Err(Error::PerfectSquare(d.clone()));
    }
    Ok(())
}

/// Fundamental unit read off the end of the first period of `sqrt(d)`.
pub fn fundamental_unit(d: &BigInt) -> Result<FundamentalUnit> {
    check_radicand(d)?;
    let e = sqrt_cf_expand(d)?;
    let last = period_convergents(&e, 1).pop().expect("period is nonempty");
    let norm = if e.period_len() % 2 == 0 { 1 } else { -1 };
    Ok(FundamentalUnit {
        d: d.clone(),
        x: last.h,
        y: last.k,
        norm,
    })
}

fn push_unique(out: &mut Vec<(BigInt, BigInt)>, x: BigInt, y: BigInt) {
    let pair = (x.abs(), y.abs());
    if !out.contains(&pair) {
        out.push(pair);
    }
}

/// Decide `x^2 - d y^2 = N` for `N^2 < d` from the convergents of one period
/// (two when the period is odd). Imprimitive solutions come from `N / g^2`.
pub fn solve_norm_small(d: &BigInt, n: &BigInt) -> Result<NormSolution> {
    check_radicand(d)?;
    if n.is_zero() || n * n >= *d {
        return Err(Error::Domain(format!(
            "solve_norm_small needs 0 < N^2 < d, got d={d}, N={n}"
        )));
    }
    let e = sqrt_cf_expand(d)?;
    let periods = if e.period_len() % 2 == 0 { 1 } else { 2 };
    let convs = period_convergents(&e, periods);
    let values: Vec<(BigInt, &BigInt, &BigInt)> = convs
        .iter()
        .map(|c| (&c.h * &c.h - d * &c.k * &c.k, &c.h, &c.k))
        .collect();

    let mut solutions = Vec::new();
    let abs_n = n.abs();
    let mut g = BigInt::one();
    while &g * &g <= abs_n {
        let g2 = &g * &g;
        if abs_n.is_multiple_of(&g2) {
            let target = n / &g2;
            for (v, h, k) in &values {
                if *v == target {
                    push_unique(&mut solutions, *h * &g, *k * &g);
                }
            }
        }
        g += 1;
    }
    solutions.sort();
    Ok(NormSolution {
        d: d.clone(),
        n: n.clone(),
        solutions,
        exhaustive_class: true,
        method: NormMethod::Convergents,
    })
}

/// Scan bound `B` with every orbit represented by some `0 <= y <= B`.
///
/// `B >= sqrt(|N| eps) / sqrt(d) + 1`; `eps < 2x + 1` for `eps = x + y sqrt d`
/// of norm +-1, so the bound is computed exactly in integers.
pub fn orbit_scan_bound(d: &BigInt, n: &BigInt, unit: &FundamentalUnit) -> BigInt {
    let num: BigInt = n.abs() * (2 * &unit.x + 1);
    let q = num.div_ceil(d);
    q.sqrt() + 1
}

/// `y` in `0..=bound` with `N + d y^2` a perfect square, returned as `(x, y)`.
fn scan_squares(d: &BigInt, targets: &[BigInt], bound: &BigInt) -> Vec<Vec<(BigInt, BigInt)>> {
    let fits = (|| {
        let d = d.to_u128()?;
        let b = bound.to_u128()?;
        let tmax = targets.iter().map(|t| t.abs().to_u128()).collect::<Option<Vec<_>>>()?;
        let top = d.checked_mul(b.checked_mul(b)?)?;
        let m = tmax.into_iter().max().unwrap_or(0);
        top.checked_add(m)?.checked_mul(4)?;
        Some((d, b))
    })();
    match fits {
        Some((d, b)) => {
            let ts: Vec<i128> = targets.iter().map(|t| t.to_i128().unwrap()).collect();
            scan_squares_u128(d, &ts, b)
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|(x, y)| (BigInt::from(x), BigInt::from(y)))
                        .collect()
                })
                .collect()
        }
        None => scan_squares_big(d, targets, bound),
    }
}

fn scan_squares_u128(d: u128, targets: &[i128], bound: u128) -> Vec<Vec<(u128, u128)>> {
    let mut out = vec![Vec::new(); targets.len()];
    let step = d.isqrt();
    let mut floor_root: u128 = 0; // floor(sqrt(d y^2))
    let mut dy2: u128 = 0;
    let mut y: u128 = 0;
    loop {
        for (slot, &t) in out.iter_mut().zip(targets) {
            let v = dy2 as i128 + t;
            if v < 0 {
                continue;
            }
            let v = v as u128;
            let mut c = floor_root;
            while c * c > v {
                c -= 1;
            }
            while (c + 1) * (c + 1) <= v {
                c += 1;
            }
            if c * c == v {
                slot.push((c, y));
            }
        }
        if y == bound {
            break;
        }
        y += 1;
        dy2 += d * (2 * y - 1);
        floor_root += step;
        if (floor_root + 1) * (floor_root + 1) <= dy2 {
            floor_root += 1;
        }
    }
    out
}

fn scan_squares_big(d: &BigInt, targets: &[BigInt], bound: &BigInt) -> Vec<Vec<(BigInt, BigInt)>> {
    let mut out = vec![Vec::new(); targets.len()];
    let mut y = BigInt::zero();
    while y <= *bound {
        let dy2 = d * &y * &y;
        for (slot, t) in out.iter_mut().zip(targets) {
            let v = &dy2 + t;
            if !v.is_negative() {
                let r = v.sqrt();
                if &r * &r == v {
                    slot.push((r, y.clone()));
                }
            }
        }
        y += 1;
    }
    out
}

/// Decide `x^2 - d y^2 = N` for any nonzero `N` by scanning the unit-orbit
/// window.
///
/// When the fundamental unit has norm -1, orbit representatives of `-N` are
/// scanned as well and carried to `N` by one multiplication with the unit.
pub fn solve_norm_bounded(d: &BigInt, n: &BigInt) -> Result<NormSolution> {
    check_radicand(d)?;
    if n.is_zero() {
        return Err(Error::Domain("norm target must be nonzero".into()));
    }
    let unit = fundamental_unit(d)?;
    let bound = orbit_scan_bound(d, n, &unit);
    let mut solutions = Vec::new();
    if unit.norm == 1 {
        let found = scan_squares(d, std::slice::from_ref(n), &bound);
        for (x, y) in found.into_iter().flatten() {
            push_unique(&mut solutions, x, y);
        }
    } else {
        let targets = [n.clone(), -n];
        let mut found = scan_squares(d, &targets, &bound).into_iter();
        let direct = found.next().unwrap_or_default();
        let flipped = found.next().unwrap_or_default();
        for (x, y) in direct {
            push_unique(&mut solutions, x, y);
        }
        for (u, v) in flipped {
            for v in [v.clone(), -v] {
                let x = &u * &unit.x + d * &v * &unit.y;
                let y = &u * &unit.y + &v * &unit.x;
                push_unique(&mut solutions, x, y);
            }
        }
    }
    solutions.sort();
    Ok(NormSolution {
        d: d.clone(),
        n: n.clone(),
        solutions,
        exhaustive_class: true,
        method: NormMethod::BoundedSearch,
    })
}

/// Dispatch to the convergent table when `N^2 < d`, else the window scan.
pub fn solve_norm(d: &BigInt, n: &BigInt) -> Result<NormSolution> {
    if !n.is_zero() && n * n < *d {
        solve_norm_small(d, n)
    } else {
        solve_norm_bounded(d, n)
    }
}

/// One solution found while scanning a family for `x^2 - d y^2 = +-p`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaFinding {
    #[serde_as(as = "DisplayFromStr")]
    pub n: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub d: BigInt,
    pub sign: i8,
    #[serde_as(as = "DisplayFromStr")]
    pub x: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub y: BigInt,
}

/// For every `n` in range with `d(n) >= 2` nonsquare, decide
/// `x^2 - d(n) y^2 = +p` and `-p` and collect every solution found.
///
/// An empty result certifies unsolvability over the whole range. Indices are
/// evaluated in parallel and reported in ascending `n`.
pub fn lemma31_scan(
    f: &QuadFamily,
    p: &BigInt,
    range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<LemmaFinding>> {
    let p_nat = p
        .to_biguint()
        .ok_or_else(|| Error::Domain(format!("p must be positive, got {p}")))?;
    if !arith::is_prime(&p_nat) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let two = BigInt::from(2);
    let per_n: Vec<Result<Vec<LemmaFinding>>> = range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let n = BigInt::from(n);
            let d = f.d_at(&n);
            if d < two || arith::is_perfect_square(&d) {
                return Ok(Vec::new());
            }
            let mut found = Vec::new();
            for sign in [1i8, -1] {
                let target = p * sign;
                let sol = solve_norm(&d, &target)?;
                for (x, y) in sol.solutions {
                    found.push(LemmaFinding {
                        n: n.clone(),
                        d: d.clone(),
                        sign,
                        x,
                        y,
                    });
                }
            }
            Ok(found)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_n {
        out.extend(r?);
    }
    Ok(out)
}
