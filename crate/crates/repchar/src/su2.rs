//! SU(2) characters in `u = exp(i y)` and the split of a `u`-symmetric
//! polynomial into spin sectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, U_SLOT};

/// An integer spin. Only integer spins arise from the adjoint action.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Spin(pub u32);

impl Spin {
    /// `2n + 1`.
    pub fn dimension(self) -> u64 {
        2 * u64::from(self.0) + 1
    }
}

/// `u^-n + u^(-n+1) + ... + u^n`.
pub fn su2_character(n: Spin) -> LaurentPoly {
    let n = i64::from(n.0);
    LaurentPoly::from_terms((-n..=n).map(|e| (Monomial::u(e), 1)))
}

/// `u^n + u^-n`, which equals `su2_character(n) - su2_character(n - 1)`.
///
/// # Panics
///
/// If `n` is spin 0.
pub fn cosine_pair(n: Spin) -> LaurentPoly {
    assert!(n.0 >= 1, "cosine_pair needs n >= 1");
    let n = i64::from(n.0);
    &LaurentPoly::var(U_SLOT, n) + &LaurentPoly::var(U_SLOT, -n)
}

/// Writes `p = sum_n su2_character(n) * c_n` with `u`-free coefficients
/// `c_n`, peeling from the highest power of `u` downward. Only nonzero
/// coefficients are returned.
pub fn split_by_spin(p: &LaurentPoly) -> Result<BTreeMap<Spin, LaurentPoly>> {
    let flipped = p.map_monomials(|m| {
        let mut e = *m.exponents();
        e[U_SLOT] = -e[U_SLOT];
        Monomial::new(e)
    });
    if flipped != *p {
        return Err(Error::NotUSymmetric);
    }

    // Coefficient polynomial of each nonnegative power of u.
    let mut by_power: BTreeMap<i64, Vec<(Monomial, num_bigint::BigInt)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.u_exponent();
        if e >= 0 {
            let mut z = *m.exponents();
            z[U_SLOT] = 0;
            by_power
                .entry(e)
                .or_default()
                .push((Monomial::new(z), c.clone()));
        }
    }
    let mut coeffs: BTreeMap<i64, LaurentPoly> = by_power
        .into_iter()
        .map(|(e, ts)| (e, LaurentPoly::from_terms(ts)))
        .collect();

    let mut out = BTreeMap::new();
    while let Some((top, c)) = coeffs.pop_last() {
        if c.is_zero() {
            continue;
        }
        // Spin `top` contributes c to every power 0..=top.
        for e in 0..top {
            let entry = coeffs.entry(e).or_default();
            *entry -= &c;
        }
        let spin = u32::try_from(top).expect("nonnegative u power");
        out.insert(Spin(spin), c);
    }
    Ok(out)
}

/// `sum_n su2_character(n) * coeffs[n]`.
pub fn join_spins<'a>(
    coeffs: impl IntoIterator<Item = (&'a Spin, &'a LaurentPoly)>,
) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (n, c) in coeffs {
        acc += &(&su2_character(*n) * c);
    }
    acc
}
