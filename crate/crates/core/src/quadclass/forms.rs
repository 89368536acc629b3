//! Reduced indefinite binary quadratic forms and their rho-cycles.

use std::collections::HashMap;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The form `a x^2 + b x y + c y^2` of positive nonsquare discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `|sqrt(D) - 2|a|| < b < sqrt(D)`, decided with `s = floor(sqrt(D))`.
    pub fn is_reduced(&self) -> bool {
        let d = self.discriminant();
        if d <= 0 {
            return false;
        }
        let s = d.sqrt();
        if s * s == d {
            return false;
        }
        let two_a = 2 * self.a.abs();
        // b < sqrt D, sqrt D - b < 2|a|, 2|a| - b < sqrt D
        self.b > 0 && self.b <= s && two_a + self.b > s && two_a - self.b <= s
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// One reduction step `(a, b, c) -> (c, b', (b'^2 - D) / 4c)` with
    /// `b' = -b (mod 2|c|)` chosen in `(sqrt(D) - 2|c|, sqrt(D))`.
    ///
    /// # Panics
    ///
    /// Panics if `c == 0`, which cannot happen for nonsquare discriminants.
    pub fn rho(&self) -> QuadForm {
        let d = self.discriminant();
        let s = d.sqrt();
        let two_c = 2 * self.c.abs();
        assert!(two_c != 0, "rho on a form with c = 0");
        let b_next = if self.c.abs() as i128 * self.c.abs() as i128 > d as i128 {
            // outside the reduced range: smallest absolute residue
            let r = (-self.b).mod_floor(&two_c);
            if r > self.c.abs() {
                r - two_c
            } else {
                r
            }
        } else {
            s - (s + self.b).mod_floor(&two_c)
        };
        let c_next = (b_next * b_next - d) / (4 * self.c);
        QuadForm::new(self.c, b_next, c_next)
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    if d <= 0 || !(d.mod_floor(&4) == 0 || d.mod_floor(&4) == 1) {
        return Err(Error::Domain(format!(
            "{d} is not a positive discriminant (must be 0 or 1 mod 4)"
        )));
    }
    let s = d.sqrt();
    if s * s == d {
        return Err(Error::Domain(format!("discriminant {d} is a perfect square")));
    }
    Ok(())
}

/// All primitive reduced forms of discriminant `d`, sorted.
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let s = d.sqrt();
    let mut out = Vec::new();
    let start = if d % 2 == 0 { 2 } else { 1 };
    for b in (start..=s).step_by(2) {
        let m = (d - b * b) / 4; // = -ac > 0
        // (s + 1 - b) / 2 <= |a| <= (s + b) / 2
        let lo = (s + 1 - b + 1) / 2;
        let hi = (s + b) / 2;
        let mut k = 1;
        while k * k <= m {
            if m % k == 0 {
                let pair = [k, m / k];
                let divs: &[i64] = if pair[0] == pair[1] { &pair[..1] } else { &pair };
                for &a_abs in divs {
                    if a_abs < lo.max(1) || a_abs > hi {
                        continue;
                    }
                    for a in [a_abs, -a_abs] {
                        let f = QuadForm::new(a, b, -m / a);
                        if f.is_reduced() && f.is_primitive() {
                            out.push(f);
                        }
                    }
                }
            }
            k += 1;
        }
    }
    out.sort();
    Ok(out)
}

/// Partition of the reduced forms into rho-cycles. Each cycle starts at its
/// least form, and cycles are ordered by that form.
pub fn reduced_cycles(d: i64) -> Result<Vec<Vec<QuadForm>>> {
    let forms = reduced_forms(d)?;
    let index: HashMap<QuadForm, usize> = forms.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut seen = vec![false; forms.len()];
    let mut cycles = Vec::new();
    for start in 0..forms.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(forms[i]);
            let next = forms[i].rho();
            i = *index
                .get(&next)
                .expect("rho maps reduced forms to reduced forms");
        }
        debug_assert_eq!(i, start, "rho must be a permutation of reduced forms");
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Narrow class number: the number of rho-cycles of reduced forms.
pub fn narrow_class_number_forms(d: i64) -> Result<u64> {
    Ok(reduced_cycles(d)?.len() as u64)
}

/// The cycle containing the principal form of discriminant `d`.
pub fn principal_cycle(d: i64) -> Result<Vec<QuadForm>> {
    let cycles = reduced_cycles(d)?;
    let s = d.sqrt();
    // (1, b, (b^2 - d)/4) with the largest admissible b is reduced
    let b = if (s - d) % 2 == 0 { s } else { s - 1 };
    let principal = QuadForm::new(1, b, (b * b - d) / 4);
    cycles
        .into_iter()
        .find(|c| c.contains(&principal))
        .ok_or_else(|| Error::Domain(format!("no principal cycle for {d}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narrow_examples() {
        assert_eq!(narrow_class_number_forms(60).unwrap(), 4);
        assert_eq!(narrow_class_number_forms(40).unwrap(), 2);
        assert_eq!(narrow_class_number_forms(12).unwrap(), 2);
        assert_eq!(narrow_class_number_forms(5).unwrap(), 1);
        assert!(narrow_class_number_forms(7).is_err());
        assert!(narrow_class_number_forms(16).is_err());
        assert!(narrow_class_number_forms(-4).is_err());
    }

    #[test]
    fn reduced_forms_of_twelve() {
        let f = reduced_forms(12).unwrap();
        assert_eq!(
            f,
            vec![
                QuadForm::new(-2, 2, 1),
                QuadForm::new(-1, 2, 2),
                QuadForm::new(1, 2, -2),
                QuadForm::new(2, 2, -1)
            ]
        );
    }

    #[test]
    fn reduced_forms_match_brute_force() {
        for d in (5..2000i64).filter(|d| d % 4 == 0 || d % 4 == 1) {
            let s = d.sqrt();
            if s * s == d {
                continue;
            }
            let mut brute = Vec::new();
            for a in -d..=d {
                for b in 1..=s {
                    if a == 0 || (b * b - d) % (4 * a) != 0 {
                        continue;
                    }
                    let f = QuadForm::new(a, b, (b * b - d) / (4 * a));
                    if f.is_reduced() && f.is_primitive() {
                        brute.push(f);
                    }
                }
            }
            brute.sort();
            assert_eq!(reduced_forms(d).unwrap(), brute, "D={d}");
        }
    }

    #[test]
    fn rho_cycles_close() {
        for d in [12i64, 40, 60, 85, 316, 1596, 4 * 399] {
            for cycle in reduced_cycles(d).unwrap() {
                let mut f = cycle[0];
                for _ in 0..cycle.len() {
                    assert!(f.is_reduced());
                    assert_eq!(f.discriminant(), d);
                    f = f.rho();
                }
                assert_eq!(f, cycle[0]);
            }
        }
    }

    #[test]
    fn principal_cycle_holds_the_principal_form() {
        let c = principal_cycle(60).unwrap();
        assert!(c.iter().any(|f| f.a == 1));
        assert!(c.iter().all(|f| f.discriminant() == 60));
    }
}
