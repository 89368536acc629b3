//! Exact integer primitives: primality, factorization, squarefreeness,
//! Euler's totient and the Kronecker symbol.
//!
//! Primality is deterministic below 2^64 (Miller–Rabin with the first twelve
//! prime bases). Above that, Baillie–PSW is used; no counterexample is known
//! but none has been ruled out either, which [`primality_method`] reports.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

const TRIAL_LIMIT: u32 = 1_000_000;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// How [`is_prime`] reached its answer for a given input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimalityMethod {
    /// Exact: deterministic witness set, n < 2^64.
    DeterministicMillerRabin,
    /// Strong probable prime in the Baillie–PSW sense, n >= 2^64.
    BailliePsw,
}

pub fn primality_method(n: &BigUint) -> PrimalityMethod {
    if n.to_u64().is_some() {
        PrimalityMethod::DeterministicMillerRabin
    } else {
        PrimalityMethod::BailliePsw
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter_map(|(k, &p)| p.then_some(k as u32))
            .collect()
    })
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for machine-size integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test on arbitrary-precision integers.
///
/// Exact for `n < 2^64`; Baillie–PSW beyond.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    strong_probable_prime_base2(n) && strong_lucas_probable_prime(n)
}

fn strong_probable_prime_base2(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = BigUint::from(2u32).modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Strong Lucas test with Selfridge's parameter choice (method A).
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let ni = BigInt::from(n.clone());
    let mut d_param: i64 = 5;
    loop {
        let j = kronecker(&BigInt::from(d_param), &ni);
        if j == -1 {
            break;
        }
        if j == 0 && BigInt::from(d_param.abs()) != ni {
            return false;
        }
        d_param = if d_param > 0 { -(d_param + 2) } else { -d_param + 2 };
    }
    let p = BigInt::one();
    let q = BigInt::from((1 - d_param) / 4);
    let dd = BigInt::from(d_param);

    let half = |v: BigInt| -> BigInt {
        let v = v.mod_floor(&ni);
        if v.is_odd() {
            (v + &ni) >> 1
        } else {
            v >> 1
        }
    };

    let n_plus_1: BigInt = &ni + 1;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let k = &n_plus_1 >> s;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(&ni);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(&ni);
        v = BigInt::mod_floor(&(&v * &v - 2 * &qk), &ni);
        qk = (&qk * &qk).mod_floor(&ni);
        if k.bit(i) {
            let u_next = half(&p * &u + &v);
            let v_next = half(&dd * &u + &p * &v);
            u = u_next;
            v = v_next;
            qk = (&qk * &q).mod_floor(&ni);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = BigInt::mod_floor(&(&v * &v - 2 * &qk), &ni);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&ni);
    }
    false
}

/// Prime factorization `n = prod p_i^e_i` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: BigUint,
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho. Seeds run through c = 1, 2, ... so the
/// split found for a given n never changes between runs.
fn pollard_brent_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let m = 128u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn pollard_brent_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let m: u64 = 128;
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (&q * absdiff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = absdiff(&x, &ys).gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
    unreachable!()
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        let mut stack = vec![small];
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                out.push(BigUint::from(m));
            } else {
                let f = pollard_brent_u64(m);
                stack.push(f);
                stack.push(m / f);
            }
        }
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let f = pollard_brent_big(&n);
    let rest = &n / &f;
    split_into(f, out);
    split_into(rest, out);
}

/// Complete prime factorization: trial division up to 10^6, then Pollard rho.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn factorize(n: &BigUint) -> Factorization {
    assert!(!n.is_zero(), "factorize requires n >= 1");
    let mut rest = n.clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&p_big);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p_big, e));
        }
    }
    if !rest.is_one() {
        let mut primes = Vec::new();
        split_into(rest, &mut primes);
        primes.sort();
        for p in primes {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Factorization {
        n: n.clone(),
        factors,
    }
}

/// Machine-size factorization as `(prime, exponent)` pairs.
pub fn factorize_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize requires n >= 1");
    let mut rest = n;
    let mut out: Vec<(u64, u32)> = Vec::new();
    for &p in small_primes() {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if rest > 1 {
        let mut stack = vec![rest];
        let mut primes = Vec::new();
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                primes.push(m);
            } else {
                let f = pollard_brent_u64(m);
                stack.push(f);
                stack.push(m / f);
            }
        }
        primes.sort_unstable();
        for p in primes {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    out
}

pub fn is_squarefree(n: &BigUint) -> bool {
    factorize(n).is_squarefree()
}

pub fn is_squarefree_u64(n: u64) -> bool {
    factorize_u64(n).iter().all(|&(_, e)| e == 1)
}

/// Euler's totient from the factorization product formula.
pub fn totient(n: &BigUint) -> BigUint {
    let f = factorize(n);
    f.factors.iter().fold(BigUint::one(), |acc, (p, e)| {
        acc * p.pow(e - 1) * (p - 1u32)
    })
}

pub fn totient_u64(n: u64) -> u64 {
    factorize_u64(n)
        .iter()
        .fold(1, |acc, &(p, e)| acc * p.pow(e - 1) * (p - 1))
}

/// `(-1)^((a^2 - 1)/8)` for odd `a`, read off `a mod 8`.
#[inline]
fn two_over(a_mod_8: u8) -> i8 {
    match a_mod_8 {
        1 | 7 => 1,
        _ => -1,
    }
}

fn low_byte(n: &BigInt) -> u8 {
    // two's complement view of the low bits, valid for negative n
    n.mod_floor(&BigInt::from(256)).to_u8().unwrap_or(0)
}

/// Kronecker symbol `(a | n)`, extended to even and negative `n`.
///
/// # Panics
///
/// Panics when both arguments are zero.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i8 {
    assert!(
        !(a.is_zero() && n.is_zero()),
        "kronecker symbol undefined for (0 | 0)"
    );
    if n.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    if a.is_even() && n.is_even() {
        return 0;
    }
    let mut a = a.clone();
    let mut b = n.clone();
    let v = b.trailing_zeros().unwrap_or(0);
    b >>= v;
    let mut k: i8 = if v % 2 == 0 {
        1
    } else {
        two_over(low_byte(&a) & 7)
    };
    if b.sign() == Sign::Minus {
        b = -b;
        if a.is_negative() {
            k = -k;
        }
    }
    loop {
        if a.is_zero() {
            return if b.is_one() { k } else { 0 };
        }
        let v = a.trailing_zeros().unwrap_or(0);
        a >>= v;
        if v % 2 == 1 {
            k *= two_over(low_byte(&b) & 7);
        }
        if low_byte(&a) & low_byte(&b) & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b.mod_floor(&r);
        b = r;
    }
}

/// Machine-size Kronecker symbol; same conventions as [`kronecker`].
pub fn kronecker_i64(a: i64, n: i64) -> i8 {
    assert!(!(a == 0 && n == 0), "kronecker symbol undefined for (0 | 0)");
    let (mut a, mut b) = (a as i128, n as i128);
    if b == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let v = b.trailing_zeros();
    b >>= v;
    let mut k: i8 = if v % 2 == 0 {
        1
    } else {
        two_over((a & 7) as u8)
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b == 1 { k } else { 0 };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= two_over((b & 7) as u8);
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b.rem_euclid(r);
        b = r;
    }
}

/// Floor of the square root; `None` for negative input.
pub fn isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        None
    } else {
        Some(n.sqrt())
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    match isqrt(n) {
        Some(r) => &r * &r == *n,
        None => false,
    }
}
