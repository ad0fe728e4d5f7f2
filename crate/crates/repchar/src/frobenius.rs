//! Characters of antisymmetric powers through the Frobenius formula
//!
//! ```text
//! chi(Alt_n R) = sum_{sum k i_k = n} (-1)^(n + sum i_k) prod_k chi_k^(i_k) / (i_k! k^(i_k))
//! ```
//!
//! where `chi_k = chi(R^k)` is the power-substituted character. The sum is
//! accumulated over the integers as `n! * chi(Alt_n R)` and divided once at
//! the end.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl_b4::{character, DynkinLabel};

/// Dimension of the SO(9) spinor.
pub const SPINOR_DIM: usize = 16;

/// `chi_k = chi(R^k)` for `k = 1..=n_max`.
#[derive(Clone, Debug)]
pub struct PowerSumVector {
    chi: Vec<LaurentPoly>,
}

impl PowerSumVector {
    pub fn new(base: &LaurentPoly, n_max: u32) -> Self {
        PowerSumVector {
            chi: (1..=n_max).map(|k| base.power_substitute(k)).collect(),
        }
    }

    /// Arbitrary values for `chi_1, chi_2, ...`, not necessarily related by
    /// power substitution.
    pub fn from_values(chi: Vec<LaurentPoly>) -> Self {
        PowerSumVector { chi }
    }

    pub fn len(&self) -> usize {
        self.chi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chi.is_empty()
    }

    /// `chi_k`, 1-based.
    pub fn get(&self, k: usize) -> &LaurentPoly {
        &self.chi[k - 1]
    }
}

/// All `{i_k}` with `sum_k k * i_k = n`. Entry `k - 1` of each vector is
/// `i_k`; every vector has length `n`. Partitions come out ordered by their
/// largest part, smallest first.
pub fn partitions_with_multiplicity(n: u32) -> Vec<Vec<u32>> {
    fn walk(remaining: u32, max_part: u32, counts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(counts.clone());
            return;
        }
        for k in 1..=remaining.min(max_part) {
            counts[k as usize - 1] += 1;
            walk(remaining - k, k, counts, out);
            counts[k as usize - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    walk(n, n, &mut vec![0; n as usize], &mut out);
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `n! / prod_k (i_k! k^(i_k))`, the number of permutations with cycle type
/// `{i_k}`.
pub fn class_size(n: u32, counts: &[u32]) -> BigInt {
    let mut den = BigInt::one();
    for (k, &i) in counts.iter().enumerate() {
        den *= factorial(i) * BigInt::from(k + 1).pow(i);
    }
    factorial(n) / den
}

/// `n! * chi(Alt_n)` as an integer combination of products of the `chi_k`.
///
/// With `fermionic_sign` the sign of each term is `(-1)^(sum i_k)` instead of
/// `(-1)^(n + sum i_k)`, for bases whose states are counted with a minus
/// sign.
///
/// The partition sum is grouped by the multiplicity of one part size at a
/// time. Writing `G(m, k)` for the signed sum over partitions of `m` into
/// parts `>= k`, weighted by class sizes in `S_m`,
///
/// ```text
/// G(m, k) = sum_i (-1)^i  m! / ((m - k i)! i! k^i)  chi_k^i  G(m - k i, k + 1)
/// ```
///
/// where the integer coefficient counts the ways to pick `i` disjoint
/// `k`-cycles. Each level is evaluated in Horner form in `chi_k`, so every
/// multiplication has a single power sum as one factor.
///
/// # Panics
///
/// If fewer than `n` power sums are supplied.
pub fn frobenius_numerator(
    power_sums: &PowerSumVector,
    n: u32,
    fermionic_sign: bool,
) -> LaurentPoly {
    assert!(power_sums.len() >= n as usize, "need chi_1..chi_{n}");
    let n_us = n as usize;
    // level[m] = G(m, k + 1) while processing part size k.
    let mut level: Vec<LaurentPoly> = (0..=n_us)
        .map(|m| {
            if m == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
        .collect();
    for k in (1..=n_us).rev() {
        let chi_k = power_sums.get(k);
        // Only G(n, 1) is needed from the last level.
        let targets: Vec<usize> = if k == 1 {
            vec![n_us]
        } else {
            (0..=n_us).collect()
        };
        let mut next = level.clone();
        for m in targets {
            let top = m / k;
            if top == 0 {
                continue;
            }
            let mut acc = LaurentPoly::zero();
            for i in (0..=top).rev() {
                acc = &acc * chi_k;
                let mut c = cycle_choices(m, k, i);
                if i % 2 == 1 {
                    c = -c;
                }
                acc.add_multiple(&level[m - k * i], &c);
            }
            next[m] = acc;
        }
        level = next;
    }
    let total = level.swap_remove(n_us);
    if !fermionic_sign && n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// `m! / ((m - k i)! i! k^i)`: ways to choose `i` disjoint `k`-cycles from
/// `m` points.
fn cycle_choices(m: usize, k: usize, i: usize) -> BigInt {
    let falling: BigInt = ((m - k * i + 1)..=m).map(BigInt::from).product();
    falling / (factorial(i as u32) * BigInt::from(k).pow(i as u32))
}

/// `chi(Alt_n R)` from `chi(R)`.
pub fn alt_character(base: &LaurentPoly, n: u32, fermionic_sign: bool) -> Result<LaurentPoly> {
    let sums = PowerSumVector::new(base, n);
    frobenius_numerator(&sums, n, fermionic_sign)
        .div_exact_integer(&factorial(n))
        .map_err(|_| Error::NotIntegral(n))
}

/// `chi(Alt_n(spinor))` for `n = 0..=16`.
///
/// Entries 0..=8 come from the Frobenius formula; 9..=16 are filled in by
/// the reflection `Alt_(16-n) = Alt_n` of the self-dual spinor.
pub fn alt_spinor_table() -> Vec<LaurentPoly> {
    let spinor = character(DynkinLabel::SPINOR).expect("spinor character");
    let half = SPINOR_DIM as u32 / 2;
    let mut table: Vec<LaurentPoly> = (0..=half)
        .into_par_iter()
        .map(|n| {
            alt_character(&spinor, n, false).expect("Frobenius sum over the spinor is integral")
        })
        .collect();
    for n in half + 1..=SPINOR_DIM as u32 {
        let mirror = table[(SPINOR_DIM as u32 - n) as usize].clone();
        table.push(mirror);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Monomial;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_with_multiplicity(0), vec![Vec::<u32>::new()]);
        assert_eq!(
            partitions_with_multiplicity(3),
            vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        // p(n) for n = 0..=16
        let p = [
            1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231,
        ];
        for (n, &expected) in p.iter().enumerate() {
            let parts = partitions_with_multiplicity(n as u32);
            assert_eq!(parts.len(), expected);
            for c in &parts {
                let s: u32 = c.iter().enumerate().map(|(k, &i)| (k as u32 + 1) * i).sum();
                assert_eq!(s, n as u32);
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=9 {
            let total: BigInt = partitions_with_multiplicity(n)
                .iter()
                .map(|c| class_size(n, c))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn low_degree_examples() {
        let base = &(&LaurentPoly::var(0, 1) + &LaurentPoly::var(0, -1)) + &LaurentPoly::var(1, 2);
        assert_eq!(alt_character(&base, 0, false).unwrap(), LaurentPoly::one());
        assert_eq!(alt_character(&base, 1, false).unwrap(), base);
        let two = (&(&base * &base) - &base.power_substitute(2))
            .div_exact_integer(&BigInt::from(2))
            .unwrap();
        assert_eq!(alt_character(&base, 2, false).unwrap(), two);
        // Alt_3 of a 3-dimensional representation is its determinant.
        let det = LaurentPoly::term(Monomial::z([0, 2, 0, 0]), 1);
        assert_eq!(alt_character(&base, 3, false).unwrap(), det);
        assert!(alt_character(&base, 4, false).unwrap().is_zero());
    }

    #[test]
    fn spinor_dimensions_are_binomials() {
        let spinor = character(DynkinLabel::SPINOR).unwrap();
        assert_eq!(
            alt_character(&spinor, 3, false)
                .unwrap()
                .evaluate_at_identity(),
            560.into()
        );
        let table = alt_spinor_table();
        assert_eq!(table.len(), 17);
        assert_eq!(table[16], LaurentPoly::one());
        for (n, p) in table.iter().enumerate() {
            assert_eq!(p.evaluate_at_identity(), binomial(16, n as u64).into());
        }
        let total: BigInt = table.iter().map(|p| p.evaluate_at_identity()).sum();
        assert_eq!(total, BigInt::from(65536));
    }

    #[test]
    fn fermionic_sign_flips_odd_degrees() {
        let base = &LaurentPoly::var(0, 1) + &LaurentPoly::var(2, -1).scale(&BigInt::from(2));
        for n in 0..=5 {
            let plain = alt_character(&base, n, false).unwrap();
            let fermionic = alt_character(&base, n, true).unwrap();
            if n % 2 == 0 {
                assert_eq!(fermionic, plain);
            } else {
                assert_eq!(fermionic, -plain);
            }
        }
    }

    /// The partition-by-partition sum, term for term.
    fn naive_numerator(sums: &PowerSumVector, n: u32, fermionic_sign: bool) -> LaurentPoly {
        let mut total = LaurentPoly::zero();
        for counts in partitions_with_multiplicity(n) {
            let parts: u32 = counts.iter().sum();
            let odd = if fermionic_sign {
                parts % 2 == 1
            } else {
                (n + parts) % 2 == 1
            };
            let mut term = LaurentPoly::one();
            for (idx, &i) in counts.iter().enumerate() {
                term = &term * &sums.get(idx + 1).pow(i);
            }
            let c = class_size(n, &counts);
            total.add_multiple(&term, &if odd { -c } else { c });
        }
        total
    }

    #[test]
    fn grouped_sum_matches_naive_sum() {
        let values: Vec<LaurentPoly> = (1..=7i64)
            .map(|k| {
                LaurentPoly::from_terms([
                    (Monomial::z([k, 0, 1, 0]), k),
                    (Monomial::z([0, -1, 0, 2]), 1 - k),
                    (Monomial::u(k % 3), 2),
                ])
            })
            .collect();
        let sums = PowerSumVector::from_values(values);
        for n in 0..=7 {
            for sign in [false, true] {
                assert_eq!(
                    frobenius_numerator(&sums, n, sign),
                    naive_numerator(&sums, n, sign),
                    "n = {n}"
                );
            }
        }
    }
}
