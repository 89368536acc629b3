//! Dirichlet characters modulo `m`, presented through generators of
//! `(Z/mZ)*`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize_u64, totient_u64};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// A character determined by the exponents of its values on the group
/// generators: `chi(g_j) = exp(2 pi i e_j / ord_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletCharacter {
    pub m: u64,
    pub exponents: Vec<u64>,
    pub order: u64,
    pub conductor: u64,
    pub parity: Parity,
}

impl DirichletCharacter {
    pub fn is_principal(&self) -> bool {
        self.order == 1
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharacterGroup {
    pub m: u64,
    /// `(residue, order)` for each generator.
    pub generators: Vec<(u64, u64)>,
    pub characters: Vec<DirichletCharacter>,
    /// Exponent of the group; every character value is a power of `zeta_L`.
    #[serde(skip)]
    exponent: u64,
    /// Discrete logarithms with respect to the generators, indexed by residue.
    #[serde(skip)]
    logs: Vec<Option<Vec<u64>>>,
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Least primitive root modulo the odd prime power `p^k`.
fn primitive_root(p: u64, k: u32) -> u64 {
    let q = p.pow(k);
    let phi = q / p * (p - 1);
    let prime_factors: Vec<u64> = factorize_u64(phi).into_iter().map(|(f, _)| f).collect();
    (2..q)
        .find(|&g| g % p != 0 && prime_factors.iter().all(|&f| pow_mod(g, phi / f, q) != 1))
        .expect("odd prime powers have primitive roots")
}

/// Residue congruent to `r` modulo `q` and to 1 modulo `m / q`.
fn crt_lift(r: u64, q: u64, m: u64) -> u64 {
    let rest = m / q;
    if rest == 1 {
        return r % m;
    }
    // x = 1 + rest * t with rest * t = r - 1 (mod q)
    let inv = (rest as i64).extended_gcd(&(q as i64)).x.rem_euclid(q as i64) as u64;
    let t = ((r + q - 1) % q) as u128 * inv as u128 % q as u128;
    ((1 + rest as u128 * t) % m as u128) as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// The full dual group of `(Z/mZ)*`.
///
/// # Errors
///
/// `Domain` if `m < 3`.
pub fn character_group(m: u64) -> Result<CharacterGroup> {
    if m < 3 {
        return Err(Error::Domain(format!("modulus must be >= 3, got {m}")));
    }
    let mut generators = Vec::new();
    for (p, k) in factorize_u64(m) {
        let q = p.pow(k);
        if p == 2 {
            if k >= 2 {
                generators.push((crt_lift(q - 1, q, m), 2));
            }
            if k >= 3 {
                generators.push((crt_lift(5, q, m), 1 << (k - 2)));
            }
        } else {
            generators.push((crt_lift(primitive_root(p, k), q, m), q / p * (p - 1)));
        }
    }
    let exponent = generators.iter().fold(1u64, |l, &(_, o)| l.lcm(&o));

    let mut logs: Vec<Option<Vec<u64>>> = vec![None; m as usize];
    let mut elems = vec![(1 % m, vec![0u64; generators.len()])];
    for (j, &(g, ord)) in generators.iter().enumerate() {
        let mut next = Vec::with_capacity(elems.len() * ord as usize);
        for (x, v) in &elems {
            let mut y = *x;
            for e in 0..ord {
                let mut w = v.clone();
                w[j] = e;
                next.push((y, w));
                y = (y as u128 * g as u128 % m as u128) as u64;
            }
        }
        elems = next;
    }
    debug_assert_eq!(elems.len() as u64, totient_u64(m));
    for (x, v) in elems {
        logs[x as usize] = Some(v);
    }

    let mut group = CharacterGroup {
        m,
        generators,
        characters: Vec::new(),
        exponent,
        logs,
    };
    let orders: Vec<u64> = group.generators.iter().map(|g| g.1).collect();
    let mut exps = vec![0u64; orders.len()];
    loop {
        group.characters.push(group.make_character(exps.clone()));
        let mut j = 0;
        while j < exps.len() {
            exps[j] += 1;
            if exps[j] < orders[j] {
                break;
            }
            exps[j] = 0;
            j += 1;
        }
        if j == exps.len() {
            break;
        }
    }
    Ok(group)
}

impl CharacterGroup {
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `chi(a)` as an exponent `k` with `chi(a) = zeta_L^k`, `L` the group
    /// exponent; `None` when `gcd(a, m) > 1`.
    pub fn value_exponent(&self, exponents: &[u64], a: u64) -> Option<u64> {
        let log = self.logs[(a % self.m) as usize].as_ref()?;
        let l = self.exponent;
        let mut k = 0u64;
        for ((e, lg), (_, ord)) in exponents.iter().zip(log).zip(&self.generators) {
            k = (k + e * lg % ord * (l / ord)) % l;
        }
        Some(k)
    }

    fn make_character(&self, exponents: Vec<u64>) -> DirichletCharacter {
        let l = self.exponent;
        let g = exponents
            .iter()
            .zip(&self.generators)
            .fold(l, |acc, (e, (_, ord))| gcd(acc, e * (l / ord)));
        let order = l / g;
        let minus_one = self
            .value_exponent(&exponents, self.m - 1)
            .expect("-1 is a unit");
        let parity = if minus_one == 0 { Parity::Even } else { Parity::Odd };
        let mut chi = DirichletCharacter {
            m: self.m,
            exponents,
            order,
            conductor: self.m,
            parity,
        };
        chi.conductor = self.conductor_of(&chi);
        chi
    }

    /// Least `f | m` such that `chi` is trivial on units `= 1 (mod f)`.
    fn conductor_of(&self, chi: &DirichletCharacter) -> u64 {
        let m = self.m;
        let mut divisors: Vec<u64> = (1..=m).filter(|f| m % f == 0).collect();
        divisors.sort_unstable();
        for f in divisors {
            let trivial = (1..m)
                .step_by(f as usize)
                .filter(|&a| gcd(a, m) == 1)
                .all(|a| self.value_exponent(&chi.exponents, a) == Some(0));
            if trivial {
                return f;
            }
        }
        m
    }

    /// `chi^k`.
    pub fn power(&self, chi: &DirichletCharacter, k: u64) -> DirichletCharacter {
        let exps = chi
            .exponents
            .iter()
            .zip(&self.generators)
            .map(|(e, (_, ord))| e * (k % ord) % ord)
            .collect();
        self.make_character(exps)
    }

    /// Values of the primitive character inducing `chi`, for `a = 1..=f`, as
    /// exponents of `zeta_L` (`None` where `gcd(a, f) > 1`).
    pub fn primitive_values(&self, chi: &DirichletCharacter) -> Vec<Option<u64>> {
        let f = chi.conductor;
        (1..=f)
            .map(|a| {
                if gcd(a, f) != 1 {
                    return None;
                }
                // any lift of a mod f that is a unit mod m
                let lift = (0..self.m / f)
                    .map(|t| a % f + t * f)
                    .find(|&x| gcd(x, self.m) == 1)
                    .expect("units mod f lift to units mod m");
                self.value_exponent(&chi.exponents, lift)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_count(g: &CharacterGroup) -> usize {
        g.characters.iter().filter(|c| c.parity == Parity::Odd).count()
    }

    #[test]
    fn group_examples() {
        let g = character_group(4).unwrap();
        assert_eq!((g.characters.len(), odd_count(&g)), (2, 1));
        let g = character_group(23).unwrap();
        assert_eq!((g.characters.len(), odd_count(&g)), (22, 11));
        let g = character_group(8).unwrap();
        assert_eq!((g.characters.len(), odd_count(&g)), (4, 2));
        assert!(character_group(2).is_err());
    }

    #[test]
    fn orders_multiply_to_totient() {
        for m in 3..200u64 {
            let g = character_group(m).unwrap();
            let prod: u64 = g.generators.iter().map(|x| x.1).product();
            assert_eq!(prod, totient_u64(m), "m={m}");
            assert_eq!(g.characters.len() as u64, totient_u64(m));
            if m % 4 != 2 {
                assert_eq!(2 * odd_count(&g) as u64, totient_u64(m), "m={m}");
            }
        }
    }

    #[test]
    fn characters_are_homomorphisms() {
        for m in [15u64, 16, 21, 24, 27, 40] {
            let g = character_group(m).unwrap();
            let l = g.exponent();
            for chi in &g.characters {
                for a in (1..m).filter(|&a| gcd(a, m) == 1) {
                    for b in (1..m).filter(|&b| gcd(b, m) == 1) {
                        let ea = g.value_exponent(&chi.exponents, a).unwrap();
                        let eb = g.value_exponent(&chi.exponents, b).unwrap();
                        let eab = g.value_exponent(&chi.exponents, a * b % m).unwrap();
                        assert_eq!((ea + eb) % l, eab);
                    }
                }
            }
        }
    }

    #[test]
    fn conductors() {
        let g = character_group(12).unwrap();
        let mut c: Vec<u64> = g.characters.iter().map(|c| c.conductor).collect();
        c.sort_unstable();
        assert_eq!(c, vec![1, 3, 4, 12]);
        let g = character_group(9).unwrap();
        let mut c: Vec<u64> = g.characters.iter().map(|c| c.conductor).collect();
        c.sort_unstable();
        assert_eq!(c, vec![1, 3, 9, 9, 9, 9]);
    }
}
