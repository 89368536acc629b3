//! Quadratic families of radicands with a prescribed periodic block.
//!
//! A palindromic word `a_1, ..., a_{t-1}` fixes the inner period of
//! `sqrt(d) = [z; a_1, ..., a_{t-1}, 2z]`. Writing the word matrix
//! `prod [[a_i, 1], [1, 0]] = [[A, B], [B, E]]` (it is symmetric because the
//! word is a palindrome) the fixed-point equation of the expansion gives
//!
//! ```text
//! d = z^2 + (2 B z + E) / A,      A = q_{t-1}, B = q_{t-2}
//! ```
//!
//! so every integral `z` in the progression `2 B z + E = 0 (mod A)` yields a
//! member. The unit `(A z + B) + A sqrt(d)` has norm `B^2 - A E = (-1)^t`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::arith;
use crate::cfrac::word_matrix;
use crate::{Error, Result};

pub const FAMILY_SCHEMA: &str = "nfkit.family/1";

/// A nonempty palindrome of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SymmetricWord(Vec<u64>);

impl SymmetricWord {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("word must be nonempty".into()));
        }
        if entries.contains(&0) {
            return Err(Error::Domain(format!(
                "word entries must be positive: {entries:?}"
            )));
        }
        if !entries.iter().eq(entries.iter().rev()) {
            return Err(Error::Domain(format!("word {entries:?} is not a palindrome")));
        }
        Ok(SymmetricWord(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Period length of the expansion the word seeds (`len + 1`).
    pub fn t(&self) -> usize {
        self.0.len() + 1
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.0.iter().map(|&a| BigInt::from(a)).collect()
    }
}

impl TryFrom<Vec<u64>> for SymmetricWord {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        SymmetricWord::new(v)
    }
}

impl From<SymmetricWord> for Vec<u64> {
    fn from(w: SymmetricWord) -> Self {
        w.0
    }
}

impl std::str::FromStr for SymmetricWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Domain(format!("bad word entry {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SymmetricWord::new(entries)
    }
}

impl std::fmt::Display for SymmetricWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `(q_{t-1}, q_{t-2}, q_{t-3})` for the recurrence
/// `q_{i+1} = a_{i+1} q_i + q_{i-1}`, `q_{-1} = 0`, `q_0 = 1`.
pub fn tail_denominators(w: &SymmetricWord) -> (BigInt, BigInt, BigInt) {
    let mut q3 = BigInt::zero(); // q_{i-2}
    let mut q2 = BigInt::zero(); // q_{i-1}
    let mut q1 = BigInt::one(); // q_i
    for &a in w.entries() {
        let next = BigInt::from(a) * &q1 + &q2;
        q3 = std::mem::replace(&mut q2, std::mem::replace(&mut q1, next));
    }
    (q1, q2, q3)
}

/// Parity condition on the tail denominators.
pub fn is_admissible(w: &SymmetricWord) -> bool {
    admissibility_failure(w).is_none()
}

fn admissibility_failure(w: &SymmetricWord) -> Option<String> {
    let (q1, q2, q3) = tail_denominators(w);
    let t = w.t();
    if q1.is_odd() || (&q2 * &q3).is_even() {
        None
    } else {
        Some(format!(
            "q_{} = {q1} is even and q_{} * q_{} = {} is odd",
            t - 1,
            t - 2,
            t - 3,
            &q2 * &q3
        ))
    }
}

/// The family `d(n) = alpha n^2 + beta n + gamma`, `z(n) = eta n + mu` and the
/// unit `p(n) + q sqrt(d(n))` with `p(n) = x1 n + x2`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadFamily {
    pub word: SymmetricWord,
    #[serde_as(as = "DisplayFromStr")]
    pub alpha: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub beta: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub gamma: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub eta: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub mu: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub q: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub x1: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub x2: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub t: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub n_start: BigInt,
    /// `q_{t-2}`; with `e_term` these reproduce `d = z^2 + (2 q_{t-2} z + E) / q`.
    #[serde_as(as = "DisplayFromStr")]
    pub q_tm2: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub e_term: BigInt,
    /// Only norm +1 families (t even) feed the class-number pipeline.
    pub theorem_pipeline: bool,
}

/// One evaluated member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub n: BigInt,
    pub d: BigInt,
    pub z: BigInt,
    pub p: BigInt,
}

impl QuadFamily {
    pub fn d_at(&self, n: &BigInt) -> BigInt {
        &self.alpha * n * n + &self.beta * n + &self.gamma
    }

    pub fn z_at(&self, n: &BigInt) -> BigInt {
        &self.eta * n + &self.mu
    }

    pub fn p_at(&self, n: &BigInt) -> BigInt {
        &self.x1 * n + &self.x2
    }

    /// `(-1)^t`, the norm of the family unit.
    pub fn unit_norm(&self) -> i64 {
        if self.t % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn discriminant(&self) -> BigInt {
        &self.beta * &self.beta - 4 * &self.alpha * &self.gamma
    }

    /// Re-parametrize along `n = modulus * k + residue`.
    fn reindexed(&self, residue: &BigInt, modulus: &BigInt) -> QuadFamily {
        let (m, r) = (modulus, residue);
        let alpha = &self.alpha * m * m;
        let beta = 2 * &self.alpha * m * r + &self.beta * m;
        let gamma = self.d_at(r);
        let eta = &self.eta * m;
        let mu = self.z_at(r);
        let x1 = &self.x1 * m;
        let x2 = self.p_at(r);
        let mut f = QuadFamily {
            word: self.word.clone(),
            alpha,
            beta,
            gamma,
            eta,
            mu,
            q: self.q.clone(),
            x1,
            x2,
            t: self.t,
            n_start: BigInt::zero(),
            q_tm2: self.q_tm2.clone(),
            e_term: self.e_term.clone(),
            theorem_pipeline: self.theorem_pipeline,
        };
        f.n_start = first_valid_index(&f);
        f
    }
}

fn first_valid_index(f: &QuadFamily) -> BigInt {
    let two = BigInt::from(2);
    let mut n = BigInt::zero();
    // z and d grow with n (eta > 0, alpha > 0), so this terminates quickly
    while !(f.z_at(&n) >= BigInt::one() && f.d_at(&n) >= two) {
        n += 1;
    }
    n
}

/// Build the family seeded by an admissible word.
pub fn synthesize(w: &SymmetricWord) -> Result<QuadFamily> {
    if let Some(reason) = admissibility_failure(w) {
        return Err(Error::NotAdmissible {
            word: w.entries().to_vec(),
            reason,
        });
    }
    let (a, b, c, e) = word_matrix(&w.to_bigints());
    debug_assert_eq!(b, c);
    let (q_tm1, q_tm2, _) = tail_denominators(w);
    debug_assert_eq!(a, q_tm1);
    debug_assert_eq!(b, q_tm2);

    // 2 b z + e = 0 (mod a)
    let two_b: BigInt = 2 * &b;
    let g = two_b.gcd(&a);
    if !e.is_multiple_of(&g) {
        return Err(Error::NoIntegralProgression {
            word: w.entries().to_vec(),
            detail: format!("{two_b} z + {e} = 0 (mod {a})"),
        });
    }
    let eta = &a / &g;
    let mu = if eta.is_one() {
        BigInt::zero()
    } else {
        let inv = mod_inverse(&(&two_b / &g), &eta).ok_or_else(|| Error::NoIntegralProgression {
            word: w.entries().to_vec(),
            detail: format!("{two_b} z + {e} = 0 (mod {a})"),
        })?;
        (-(&e / &g) * inv).mod_floor(&eta)
    };
    let alpha = &eta * &eta;
    let beta = 2 * &eta * &mu + &two_b / &g;
    let gamma = &mu * &mu + (&two_b * &mu + &e) / &a;
    let q = a.clone();
    let x1 = &q * &eta;
    let x2 = &q * &mu + &b;
    let t = w.t();
    let mut f = QuadFamily {
        word: w.clone(),
        alpha,
        beta,
        gamma,
        eta,
        mu,
        q,
        x1,
        x2,
        t,
        n_start: BigInt::zero(),
        q_tm2: b,
        e_term: e,
        theorem_pipeline: t % 2 == 0,
    };
    f.n_start = first_valid_index(&f);
    Ok(f)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let eg = a.extended_gcd(m);
    eg.gcd.is_one().then(|| eg.x.mod_floor(m))
}

/// The sub-family `n = modulus * k + residue` of a parent family, with its own
/// coefficients in `k`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySlice {
    pub parent: QuadFamily,
    #[serde_as(as = "DisplayFromStr")]
    pub residue: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub modulus: BigInt,
    pub target: u8,
    /// The slice written as a family in `k`.
    pub family: QuadFamily,
}

impl FamilySlice {
    pub fn parent_index(&self, k: &BigInt) -> BigInt {
        &self.modulus * k + &self.residue
    }
}

/// All residue classes of `n` on which `d(n) = target (mod 4)` holds
/// identically, merged to the coarsest modulus among 1, 2, 4.
pub fn refine_mod4(f: &QuadFamily, target: u8) -> Result<Vec<FamilySlice>> {
    if target != 2 && target != 3 {
        return Err(Error::Domain(format!("mod-4 target must be 2 or 3, got {target}")));
    }
    let four = BigInt::from(4);
    let hits: Vec<bool> = (0..4)
        .map(|r| f.d_at(&BigInt::from(r)).mod_floor(&four) == BigInt::from(target))
        .collect();
    let mut covered = [false; 4];
    let mut out = Vec::new();
    for modulus in [1usize, 2, 4] {
        for residue in 0..modulus {
            let class: Vec<usize> = (residue..4).step_by(modulus).collect();
            if class.iter().all(|&r| hits[r] && !covered[r]) {
                for &r in &class {
                    covered[r] = true;
                }
                let (res, m) = (BigInt::from(residue), BigInt::from(modulus));
                out.push(FamilySlice {
                    parent: f.clone(),
                    family: f.reindexed(&res, &m),
                    residue: res,
                    modulus: m,
                    target,
                });
            }
        }
    }
    Ok(out)
}

/// `(d, z, p(n))` at index `n`; `p^2 - q^2 d = (-1)^t` always holds.
pub fn evaluate(f: &QuadFamily, n: &BigInt) -> Result<Member> {
    if *n < f.n_start {
        return Err(Error::Domain(format!(
            "index {n} is below the family start {}",
            f.n_start
        )));
    }
    Ok(Member {
        n: n.clone(),
        d: f.d_at(n),
        z: f.z_at(n),
        p: f.p_at(n),
    })
}

/// Why an index produced no member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkipReason {
    BelowStart,
    PerfectSquare,
    NotSquarefree,
}

/// A member or the reason its index was passed over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MemberEvent {
    Kept(Member),
    Skipped { n: BigInt, d: BigInt, reason: SkipReason },
}

/// Every index of `range` in ascending order with its outcome.
pub fn scan_members(
    f: &QuadFamily,
    range: std::ops::RangeInclusive<i64>,
    require_squarefree: bool,
) -> impl Iterator<Item = MemberEvent> + '_ {
    range.map(move |n| {
        let n = BigInt::from(n);
        let d = f.d_at(&n);
        if n < f.n_start {
            return MemberEvent::Skipped {
                n,
                d,
                reason: SkipReason::BelowStart,
            };
        }
        if arith::is_perfect_square(&d) {
            return MemberEvent::Skipped {
                n,
                d,
                reason: SkipReason::PerfectSquare,
            };
        }
        if require_squarefree {
            let squarefree = d
                .to_biguint()
                .map(|u: BigUint| arith::is_squarefree(&u))
                .unwrap_or(false);
            if !squarefree {
                return MemberEvent::Skipped {
                    n,
                    d,
                    reason: SkipReason::NotSquarefree,
                };
            }
        }
        let z = f.z_at(&n);
        let p = f.p_at(&n);
        MemberEvent::Kept(Member { n, d, z, p })
    })
}

/// Members `(n, d)` over `range`, optionally restricted to squarefree `d`.
pub fn members(
    f: &QuadFamily,
    range: std::ops::RangeInclusive<i64>,
    require_squarefree: bool,
) -> impl Iterator<Item = Member> + '_ {
    scan_members(f, range, require_squarefree).filter_map(|ev| match ev {
        MemberEvent::Kept(m) => Some(m),
        MemberEvent::Skipped { .. } => None,
    })
}

/// Member as small integers, when they fit.
pub fn member_u64(m: &Member) -> Option<(i64, u64)> {
    Some((m.n.to_i64()?, m.d.to_u64()?))
}

/// Check `(x1 n + x2)^2 - q^2 (alpha n^2 + beta n + gamma) = (-1)^t`
/// coefficient by coefficient.
pub fn unit_identity_holds(f: &QuadFamily) -> bool {
    let q2 = &f.q * &f.q;
    let c2 = &f.x1 * &f.x1 - &q2 * &f.alpha;
    let c1: BigInt = 2 * &f.x1 * &f.x2 - &q2 * &f.beta;
    let c0 = &f.x2 * &f.x2 - &q2 * &f.gamma;
    c2.is_zero() && c1.is_zero() && c0 == BigInt::from(f.unit_norm())
}

pub fn discriminant_in_allowed_set(f: &QuadFamily) -> bool {
    let s = BigInt::from(f.unit_norm());
    let disc = f.discriminant();
    [1, 4, 16].iter().any(|&k| disc == &s * k)
}

pub fn alpha_is_eta_squared(f: &QuadFamily) -> bool {
    !f.alpha.is_zero() && f.alpha == &f.eta * &f.eta && f.eta.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::{is_period_repetition, sqrt_cf_expand};

    fn word(v: &[u64]) -> SymmetricWord {
        SymmetricWord::new(v.to_vec()).unwrap()
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// q-sequence straight from the recurrence, indices -1..=t-1.
    fn q_sequence(a: &[u64]) -> Vec<i64> {
        let mut q = vec![0i64, 1];
        for &x in a {
            let n = q.len();
            q.push(x as i64 * q[n - 1] + q[n - 2]);
        }
        q
    }

    #[test]
    fn word_validation() {
        assert!(SymmetricWord::new(vec![]).is_err());
        assert!(SymmetricWord::new(vec![1, 2]).is_err());
        assert!(SymmetricWord::new(vec![0]).is_err());
        assert_eq!("1, 2,1".parse::<SymmetricWord>().unwrap(), word(&[1, 2, 1]));
        assert!("1,x".parse::<SymmetricWord>().is_err());
    }

    #[test]
    fn tail_denominator_examples() {
        assert_eq!(tail_denominators(&word(&[1])), (b(1), b(1), b(0)));
        let q = q_sequence(&[1, 2, 1]);
        assert_eq!(q[2..], [1, 3, 4]);
        assert_eq!(tail_denominators(&word(&[1, 2, 1])), (b(4), b(3), b(1)));
        assert_eq!(tail_denominators(&word(&[2, 2])), (b(5), b(2), b(1)));
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&word(&[1])));
        assert!(!is_admissible(&word(&[1, 2, 1])));
        assert!(is_admissible(&word(&[2])));
        match synthesize(&word(&[1, 2, 1])) {
            Err(Error::NotAdmissible { reason, .. }) => {
                assert!(reason.contains("q_3 = 4"), "{reason}");
            }
            other => panic!("expected NotAdmissible, got {other:?}"),
        }
    }

    #[test]
    fn synthesize_word_one() {
        let f = synthesize(&word(&[1])).unwrap();
        assert_eq!((f.alpha.clone(), f.beta.clone(), f.gamma.clone()), (b(1), b(2), b(0)));
        assert_eq!((f.eta.clone(), f.mu.clone()), (b(1), b(0)));
        // d = z^2 + 2z = (z+1)^2 - 1
        for n in 1..20 {
            let z = f.z_at(&b(n));
            assert_eq!(f.d_at(&b(n)), (&z + 1) * (&z + 1) - 1);
        }
        assert_eq!(f.n_start, b(1));
        assert!(f.theorem_pipeline);
    }

    #[test]
    fn synthesize_word_two_two() {
        let f = synthesize(&word(&[2, 2])).unwrap();
        assert_eq!((f.alpha.clone(), f.beta.clone(), f.gamma.clone()), (b(25), b(14), b(2)));
        assert_eq!((f.eta.clone(), f.mu.clone()), (b(5), b(1)));
        assert_eq!(f.d_at(&b(1)), b(41));
        let e = sqrt_cf_expand(&b(41)).unwrap();
        assert_eq!(e.period, vec![b(2), b(2), b(12)]);
        assert_eq!(f.discriminant(), b(-4));
        assert!(!f.theorem_pipeline);
    }

    #[test]
    fn synthesize_word_two() {
        let f = synthesize(&word(&[2])).unwrap();
        assert_eq!((f.eta.clone(), f.mu.clone()), (b(1), b(0)));
        assert_eq!((f.alpha.clone(), f.beta.clone(), f.gamma.clone()), (b(1), b(1), b(0)));
        assert_eq!(f.d_at(&b(2)), b(6));
        assert_eq!(sqrt_cf_expand(&b(6)).unwrap().period, vec![b(2), b(4)]);
    }

    #[test]
    fn refine_examples() {
        let f = synthesize(&word(&[1])).unwrap();
        let slices = refine_mod4(&f, 3).unwrap();
        assert_eq!(slices.len(), 1);
        let s = &slices[0];
        assert_eq!((s.residue.clone(), s.modulus.clone()), (b(1), b(2)));
        assert_eq!(
            (s.family.alpha.clone(), s.family.beta.clone(), s.family.gamma.clone()),
            (b(4), b(8), b(3))
        );
        let ds: Vec<BigInt> = (1..=3).map(|k| s.family.d_at(&b(k))).collect();
        assert_eq!(ds, vec![b(15), b(35), b(63)]);

        let f = synthesize(&word(&[2, 2])).unwrap();
        let mods: Vec<i64> = (0..4).map(|n| f.d_at(&b(n)).mod_floor(&b(4)).try_into().unwrap()).collect();
        assert_eq!(mods, vec![2, 1, 2, 1]);
        let slices = refine_mod4(&f, 2).unwrap();
        assert_eq!(slices.len(), 1);
        let s = &slices[0].family;
        assert_eq!((s.alpha.clone(), s.beta.clone(), s.gamma.clone()), (b(100), b(28), b(2)));
        assert!(refine_mod4(&f, 3).unwrap().is_empty());
        assert!(refine_mod4(&f, 1).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let f = synthesize(&word(&[1])).unwrap();
        let s = &refine_mod4(&f, 3).unwrap()[0].family;
        let m = evaluate(s, &b(1)).unwrap();
        assert_eq!((m.d.clone(), m.z.clone(), m.p.clone()), (b(15), b(3), b(4)));
        assert_eq!(&m.p * &m.p - &s.q * &s.q * &m.d, b(1));
        let m = evaluate(s, &b(2)).unwrap();
        assert_eq!((m.d.clone(), m.z.clone(), m.p.clone()), (b(35), b(5), b(6)));

        let f = synthesize(&word(&[2, 2])).unwrap();
        let m = evaluate(&f, &b(1)).unwrap();
        assert_eq!((m.d.clone(), m.z.clone(), m.p.clone()), (b(41), b(6), b(32)));
        assert_eq!(&m.p * &m.p - &f.q * &f.q * &m.d, b(-1));

        let f1 = synthesize(&word(&[1])).unwrap();
        assert!(matches!(evaluate(&f1, &b(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn members_examples() {
        let f = synthesize(&word(&[1])).unwrap();
        let s = &refine_mod4(&f, 3).unwrap()[0].family;
        let got: Vec<(BigInt, BigInt)> = members(s, 1..=5, true).map(|m| (m.n, m.d)).collect();
        assert_eq!(got, vec![(b(1), b(15)), (b(2), b(35)), (b(5), b(143))]);
        assert!(!arith::is_squarefree_u64(63));
        assert_eq!(members(s, 5..=4, true).count(), 0);

        let f = synthesize(&word(&[2, 2])).unwrap();
        let got: Vec<(BigInt, BigInt)> = members(&f, 1..=2, false).map(|m| (m.n, m.d)).collect();
        assert_eq!(got, vec![(b(1), b(41)), (b(2), b(130))]);
        assert_eq!(
            sqrt_cf_expand(&b(130)).unwrap().period,
            vec![b(2), b(2), b(22)]
        );
    }

    #[test]
    fn skip_reasons_are_reported() {
        let f = synthesize(&word(&[1])).unwrap();
        let events: Vec<MemberEvent> = scan_members(&f, 0..=3, true).collect();
        assert!(matches!(events[0], MemberEvent::Skipped { reason: SkipReason::BelowStart, .. }));
        // d(1) = 3, d(2) = 8 = 2^3, d(3) = 15
        assert!(matches!(events[1], MemberEvent::Kept(_)));
        assert!(matches!(events[2], MemberEvent::Skipped { reason: SkipReason::NotSquarefree, .. }));
        assert!(matches!(events[3], MemberEvent::Kept(_)));
    }

    #[test]
    fn round_trip_small_words() {
        for w in [vec![1u64], vec![2], vec![3], vec![1, 1], vec![2, 2], vec![1, 1, 1], vec![1, 3, 1], vec![4, 1, 4]] {
            let w = word(&w);
            let Ok(f) = synthesize(&w) else { continue };
            assert!(alpha_is_eta_squared(&f));
            assert!(discriminant_in_allowed_set(&f));
            assert!(unit_identity_holds(&f));
            for n in 1..=200 {
                let n = b(n);
                if n < f.n_start {
                    continue;
                }
                let d = f.d_at(&n);
                let e = sqrt_cf_expand(&d).unwrap();
                let z = f.z_at(&n);
                assert_eq!(e.a0, z);
                let mut expect = w.to_bigints();
                expect.push(2 * &z);
                assert!(is_period_repetition(&e.period, &expect), "word {w} n={n}");
            }
        }
    }

    #[test]
    fn family_json_shape() {
        let f = synthesize(&word(&[2, 2])).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["alpha"], "25");
        assert_eq!(v["word"], serde_json::json!([2, 2]));
        let back: QuadFamily = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);
    }
}
