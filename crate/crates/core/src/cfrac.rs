//! Periodic continued fractions of `sqrt(d)` and their convergents.
//!
//! Everything here is exact big-integer arithmetic. A surd state
//! `(P + sqrt(D)) / Q` always satisfies `Q | D - P^2`, which is what keeps the
//! recurrence integral.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The quadratic surd `(p + sqrt(d)) / q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurdState {
    pub p: BigInt,
    pub q: BigInt,
    pub d: BigInt,
}

impl SurdState {
    pub fn is_canonical(&self) -> bool {
        !self.q.is_zero() && (&self.d - &self.p * &self.p).is_multiple_of(&self.q)
    }

    /// Partial quotient `floor((p + sqrt(d)) / q)`; `root` is `floor(sqrt(d))`.
    fn floor_with_root(&self, root: &BigInt) -> BigInt {
        // for q > 0, floor((p + sqrt d)/q) = floor((p + floor sqrt d)/q)
        // because sqrt d is irrational
        if self.q.is_positive() {
            (&self.p + root).div_floor(&self.q)
        } else {
            BigInt::div_floor(&(&self.p + root + 1), &self.q)
        }
    }
}

/// Expansion `sqrt(d) = [a0; period...]` with the period repeating forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub d: BigInt,
    pub a0: BigInt,
    /// One minimal period, ending in `2 * a0`.
    pub period: Vec<BigInt>,
    /// `states[i]` is the surd whose partial quotient is `period[i]`.
    pub states: Vec<SurdState>,
    /// `norms[i] = h_i^2 - d k_i^2 = (-1)^(i+1) states[i].q`.
    pub norms: Vec<BigInt>,
}

impl CfExpansion {
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// The inner palindromic block, i.e. the period without its last term.
    pub fn inner(&self) -> &[BigInt] {
        &self.period[..self.period.len() - 1]
    }
}

/// Truncation `h / k` of a continued fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub h: BigInt,
    pub k: BigInt,
    pub index: usize,
}

/// One row of the small-norm table of a period: `x^2 - d y^2 = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormValue {
    pub n: BigInt,
    pub x: BigInt,
    pub y: BigInt,
}

/// Minimal-period expansion of `sqrt(d)`.
///
/// The period is detected as the first repeated `(P, Q)` pair.
pub fn sqrt_cf_expand(d: &BigInt) -> Result<CfExpansion> {
    if *d < BigInt::from(2) {
        return Err(Error::Domain(format!("sqrt_cf_expand needs d >= 2, got {d}")));
    }
    let a0 = d.sqrt();
    if &a0 * &a0 == *d {
        return Err(Error::PerfectSquare(d.clone()));
    }
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut period = Vec::new();
    let mut states = Vec::new();

    // state 0 is sqrt(d)/1 with quotient a0; the periodic part starts at 1
    let mut p = BigInt::zero();
    let mut q = BigInt::one();
    let mut a = a0.clone();
    loop {
        let p_next = &a * &q - &p;
        let q_next = (d - &p_next * &p_next) / &q;
        p = p_next;
        q = q_next;
        if seen.contains_key(&(p.clone(), q.clone())) {
            break;
        }
        seen.insert((p.clone(), q.clone()), states.len());
        let state = SurdState {
            p: p.clone(),
            q: q.clone(),
            d: d.clone(),
        };
        a = state.floor_with_root(&a0);
        debug_assert!(state.is_canonical());
        states.push(state);
        period.push(a.clone());
    }
    let norms = states
        .iter()
        .enumerate()
        .map(|(i, s)| if i % 2 == 0 { -&s.q } else { s.q.clone() })
        .collect();
    Ok(CfExpansion {
        d: d.clone(),
        a0,
        period,
        states,
        norms,
    })
}

/// Convergents of `[a0; word...]` by the two-term recurrence with
/// `k_{-1} = 0`, `k_0 = 1` (and `h_{-1} = 1`, `h_0 = a0`).
///
/// Entry `i` of the result is the convergent of index `i`, so the list has
/// `word.len() + 1` entries.
pub fn convergents(a0: &BigInt, word: &[BigInt]) -> Vec<Convergent> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    out.push(Convergent {
        h: h.clone(),
        k: k.clone(),
        index: 0,
    });
    for (i, a) in word.iter().enumerate() {
        let h_next = a * &h + &h_prev;
        let k_next = a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        out.push(Convergent {
            h: h.clone(),
            k: k.clone(),
            index: i + 1,
        });
    }
    out
}

/// Convergents `0 ..= periods * t - 1` of `sqrt(d)`.
pub(crate) fn period_convergents(e: &CfExpansion, periods: usize) -> Vec<Convergent> {
    let t = e.period.len();
    let word: Vec<BigInt> = e.period.iter().cycle().take(periods * t - 1).cloned().collect();
    convergents(&e.a0, &word)
}

/// `(N, x, y)` with `x / y` the i-th convergent and `x^2 - d y^2 = N`, for
/// each index of one period.
pub fn period_norm_values(e: &CfExpansion) -> Vec<NormValue> {
    period_convergents(e, 1)
        .into_iter()
        .zip(&e.norms)
        .map(|(c, n)| NormValue {
            n: n.clone(),
            x: c.h,
            y: c.k,
        })
        .collect()
}

/// True when `word` equals `minimal` repeated a whole number of times.
pub fn is_period_repetition(minimal: &[BigInt], word: &[BigInt]) -> bool {
    !minimal.is_empty()
        && word.len() % minimal.len() == 0
        && word
            .chunks(minimal.len())
            .all(|chunk| chunk == minimal)
}

/// Recover `d` from `a0` and a period by solving the surd fixed-point
/// equation `x = [a0; period[..t-1], a0 + x]`.
///
/// Returns `None` when the data is not the expansion of a square root.
pub fn reconstruct_d(a0: &BigInt, period: &[BigInt]) -> Option<BigInt> {
    let (last, inner) = period.split_last()?;
    if *last != a0 * 2 {
        return None;
    }
    let (a, b, c, e) = word_matrix(inner);
    if b != c {
        return None;
    }
    // d = a0^2 + (2 b a0 + e) / a, see family synthesis
    let num: BigInt = 2 * &b * a0 + &e;
    if !num.is_multiple_of(&a) {
        return None;
    }
    Some(a0 * a0 + num / a)
}

/// Product of `[[a_i, 1], [1, 0]]` over the word, as `(A, B, C, E)`.
pub(crate) fn word_matrix(word: &[BigInt]) -> (BigInt, BigInt, BigInt, BigInt) {
    let mut m = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for a in word {
        // m * [[a,1],[1,0]]
        m = (a * &m.0 + &m.1, m.0, a * &m.2 + &m.3, m.2);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| b(x)).collect()
    }

    /// Textbook surd recurrence in machine integers, stopping at the first
    /// quotient equal to 2 * a0.
    fn textbook_period(d: i64) -> (i64, Vec<i64>) {
        let a0 = (d as f64).sqrt() as i64;
        let a0 = (a0 - 1..=a0 + 1).filter(|x| x * x <= d).max().unwrap();
        let (mut m, mut q, mut a) = (0i64, 1i64, a0);
        let mut out = Vec::new();
        loop {
            m = a * q - m;
            q = (d - m * m) / q;
            a = (a0 + m) / q;
            out.push(a);
            if a == 2 * a0 {
                return (a0, out);
            }
        }
    }

    #[test]
    fn expand_examples() {
        let e = sqrt_cf_expand(&b(3)).unwrap();
        assert_eq!(textbook_period(3), (1, vec![1, 2]));
        assert_eq!((e.a0.clone(), e.period.clone()), (b(1), bv(&[1, 2])));
        let e = sqrt_cf_expand(&b(6)).unwrap();
        assert_eq!(textbook_period(6), (2, vec![2, 4]));
        assert_eq!((e.a0.clone(), e.period.clone()), (b(2), bv(&[2, 4])));
        assert_eq!(sqrt_cf_expand(&b(4)), Err(Error::PerfectSquare(b(4))));
        assert!(matches!(sqrt_cf_expand(&b(1)), Err(Error::Domain(_))));
        let e = sqrt_cf_expand(&b(41)).unwrap();
        assert_eq!(e.period, bv(&[2, 2, 12]));
    }

    #[test]
    fn matches_textbook_recurrence() {
        for d in 2..3000i64 {
            let r = (d as f64).sqrt() as i64;
            if r * r == d || (r + 1) * (r + 1) == d {
                continue;
            }
            let (a0, period) = textbook_period(d);
            let e = sqrt_cf_expand(&b(d)).unwrap();
            assert_eq!(e.a0, b(a0));
            assert_eq!(e.period, bv(&period), "d={d}");
        }
    }

    #[test]
    fn convergent_examples() {
        let c = convergents(&b(6), &bv(&[2, 2, 12]));
        let ks: Vec<_> = c.iter().map(|c| c.k.clone()).collect();
        let hs: Vec<_> = c.iter().map(|c| c.h.clone()).collect();
        assert_eq!(ks, bv(&[1, 2, 5, 62]));
        assert_eq!(hs, bv(&[6, 13, 32, 397]));

        let c = convergents(&b(1), &bv(&[1]));
        assert_eq!((c[1].h.clone(), c[1].k.clone()), (b(2), b(1)));

        let c = convergents(&b(0), &bv(&[1, 2, 1]));
        let ks: Vec<_> = c.iter().map(|c| c.k.clone()).collect();
        assert_eq!(ks, bv(&[1, 1, 3, 4]));
        for c in &c {
            assert!(c.h.gcd(&c.k).is_one());
        }
    }

    #[test]
    fn norm_value_examples() {
        let has = |d: i64, n: i64, x: i64, y: i64| {
            let e = sqrt_cf_expand(&b(d)).unwrap();
            period_norm_values(&e).contains(&NormValue {
                n: b(n),
                x: b(x),
                y: b(y),
            })
        };
        assert!(has(41, -5, 6, 1));
        assert!(has(41, 5, 13, 2));
        assert!(has(6, -2, 2, 1));
        assert!(has(3, 1, 2, 1));
    }

    #[test]
    fn norm_table_is_complete_for_small_norms() {
        // every coprime x^2 - d y^2 = N with |N| < sqrt d and y <= 60 shows up
        // among the first two periods' norm values (up to the unit orbit)
        for d in 2..300i64 {
            let Ok(e) = sqrt_cf_expand(&b(d)) else { continue };
            let table: Vec<BigInt> = period_norm_values(&e).into_iter().map(|v| v.n).collect();
            let t = e.period_len();
            let signs_flip = t % 2 == 1;
            for y in 1..60i64 {
                for x in 1..(y * 20 + 20) {
                    let n = x * x - d * y * y;
                    if n != 0 && n * n < d && x.gcd(&y) == 1 {
                        let ok = table.contains(&b(n)) || (signs_flip && table.contains(&b(-n)));
                        assert!(ok, "d={d} x={x} y={y} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn repetition_helper() {
        assert!(is_period_repetition(&bv(&[2]), &bv(&[2, 2, 2])));
        assert!(is_period_repetition(&bv(&[1, 2]), &bv(&[1, 2])));
        assert!(!is_period_repetition(&bv(&[1, 2]), &bv(&[1, 2, 1])));
        assert!(!is_period_repetition(&[], &bv(&[1])));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn expansion_invariants(d in 2u64..100_000_000) {
            let d = BigInt::from(d);
            prop_assume!(!crate::arith::is_perfect_square(&d));
            let e = sqrt_cf_expand(&d).unwrap();
            prop_assert_eq!(&e.a0 * &e.a0 <= d, true);
            prop_assert_eq!(e.period.last().unwrap(), &(&e.a0 * 2));
            let inner = e.inner();
            prop_assert!(inner.iter().eq(inner.iter().rev()));
            prop_assert!(e.states.iter().all(|s| s.is_canonical()));
            prop_assert_eq!(reconstruct_d(&e.a0, &e.period), Some(d.clone()));
            for v in period_norm_values(&e) {
                prop_assert_eq!(&v.x * &v.x - &d * &v.y * &v.y, v.n);
            }
        }
    }
}
