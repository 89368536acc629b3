//! Dense univariate polynomials over `Q`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in increasing degree, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lead(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Remainder on division by `g`.
    ///
    /// # Panics
    ///
    /// Panics if `g` is zero.
    pub fn rem(&self, g: &Poly) -> Poly {
        let dg = g.degree().expect("division by the zero polynomial");
        let inv = BigRational::one() / g.lead();
        let mut r = self.coeffs.clone();
        while r.len() > dg {
            let top = r.len() - 1;
            let factor = &r[top] * &inv;
            if !factor.is_zero() {
                for (i, c) in g.coeffs.iter().enumerate() {
                    r[top - dg + i] -= &factor * c;
                }
            }
            r.pop();
        }
        Poly::new(r)
    }

    /// Remainder on division by a monic `g`.
    pub fn rem_monic(&self, g: &Poly) -> Poly {
        debug_assert!(g.lead().is_one());
        self.rem(g)
    }

    /// Exact quotient by `g`; the remainder must vanish.
    fn div_exact(&self, g: &Poly) -> Poly {
        let dg = g.degree().expect("division by the zero polynomial");
        let Some(df) = self.degree() else {
            return Poly::new(Vec::new());
        };
        if df < dg {
            return Poly::new(Vec::new());
        }
        let inv = BigRational::one() / g.lead();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let factor = &r[k + dg] * &inv;
            for (i, c) in g.coeffs.iter().enumerate() {
                r[k + i] -= &factor * c;
            }
            q[k] = factor;
        }
        debug_assert!(r.iter().all(Zero::is_zero));
        Poly::new(q)
    }
}

/// `Res(f, g) = lc(f)^{deg g} prod_{f(a) = 0} g(a)`, by the Euclidean
/// recurrence.
pub fn resultant(f: &Poly, g: &Poly) -> BigRational {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return BigRational::zero();
    };
    if m == 0 {
        return num_traits::pow(g.coeffs[0].clone(), n);
    }
    if n == 0 {
        return num_traits::pow(f.coeffs[0].clone(), m);
    }
    // Res(f, g) = (-1)^{nm} Res(g, f) and Res(g, f) = lc(g)^{n - deg r} Res(g, r)
    let r = f.rem(g);
    let Some(k) = r.degree() else {
        return BigRational::zero();
    };
    let sign = if (n * m) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    sign * num_traits::pow(g.lead().clone(), n - k) * resultant(g, &r)
}

fn cache() -> &'static Mutex<HashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, from
/// `x^n - 1 = prod_{d | n} Phi_d(x)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u64) -> Poly {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cache().lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    let mut xn1 = vec![BigRational::zero(); n as usize + 1];
    xn1[0] = -BigRational::one();
    xn1[n as usize] = BigRational::one();
    let mut p = Poly::new(xn1);
    for d in (1..n).filter(|d| n % d == 0) {
        p = p.div_exact(&cyclotomic_polynomial(d));
    }
    cache().lock().expect("cache lock").insert(n, p.clone());
    p
}
