//! Brute-force enumeration used to cross-check the closed-form machinery.
//!
//! Nothing here calls the Weyl character formula or the Frobenius formula:
//! representations are given by explicit weight lists and characters are
//! built by summing one monomial per basis state.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

/// Largest number of creation operators or weights accepted.
pub const MAX_MODES: usize = 24;
/// Largest number of basis states or subsets enumerated.
pub const MAX_ENUMERATION: u64 = 1 << 20;

/// A representation given by the weights of its basis states.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedRep {
    weights: Vec<Monomial>,
}

impl WeightedRep {
    pub fn new(weights: Vec<Monomial>) -> Self {
        WeightedRep { weights }
    }

    /// The sixteen weights `(+-1, +-1, +-1, +-1)` of the SO(9) spinor, in
    /// half-units.
    pub fn so9_spinor() -> Self {
        let weights = (0..16u32)
            .map(|bits| {
                Monomial::z(std::array::from_fn(
                    |i| if bits >> i & 1 == 1 { -1 } else { 1 },
                ))
            })
            .collect();
        WeightedRep { weights }
    }

    pub fn weights(&self) -> &[Monomial] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `sum_w monomial(w)`.
    pub fn character(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.weights.iter().map(|m| (*m, 1)))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Calls `f` with every `n`-element subset of `0..size` as a bitmask, in
/// increasing numeric order.
fn for_each_subset(size: usize, n: usize, mut f: impl FnMut(u32)) {
    if n > size {
        return;
    }
    if n == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << size;
    let mut mask: u64 = (1 << n) - 1;
    while mask < limit {
        f(mask as u32);
        // Gosper's hack: next integer with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

fn product_of(weights: &[Monomial], mask: u32) -> Monomial {
    weights
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(Monomial::ONE, |acc, (_, w)| acc * *w)
}

/// The character of `Alt_n(rep)`: the sum, over all `n`-element subsets of
/// basis states, of the product of their monomials.
pub fn direct_alt_character(rep: &WeightedRep, n: usize) -> Result<LaurentPoly> {
    if rep.len() > MAX_MODES {
        return Err(Error::SizeGuard(format!(
            "{} weights (max {MAX_MODES})",
            rep.len()
        )));
    }
    let subsets = binomial(rep.len() as u64, n as u64);
    if subsets > MAX_ENUMERATION {
        return Err(Error::SizeGuard(format!(
            "{subsets} subsets (max {MAX_ENUMERATION})"
        )));
    }
    let mut terms = Vec::with_capacity(subsets as usize);
    for_each_subset(rep.len(), n, |mask| {
        terms.push((product_of(&rep.weights, mask), 1))
    });
    Ok(LaurentPoly::from_terms(terms))
}

/// One occupation-number basis state.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FockState {
    pub occupation: u32,
    pub weight: Monomial,
}

impl FockState {
    pub fn occupied(&self) -> u32 {
        self.occupation.count_ones()
    }

    /// Fermion parity: occupation count mod 2.
    pub fn is_fermionic(&self) -> bool {
        self.occupied() % 2 == 1
    }
}

/// All `2^m` states obtained by acting with `m` creation operators on a
/// vacuum. Each operator shifts the weight by its own monomial.
#[derive(Clone, Debug)]
pub struct FockBasis {
    states: Vec<FockState>,
    modes: usize,
}

impl FockBasis {
    pub fn new(vacuum: Monomial, creation: &[Monomial]) -> Result<Self> {
        let m = creation.len();
        if m > MAX_MODES || (1u64 << m) > MAX_ENUMERATION {
            return Err(Error::SizeGuard(format!(
                "2^{m} Fock states (max {MAX_ENUMERATION})"
            )));
        }
        let states = (0..1u32 << m)
            .map(|occupation| FockState {
                occupation,
                weight: vacuum * product_of(creation, occupation),
            })
            .collect();
        Ok(FockBasis { states, modes: m })
    }

    pub fn states(&self) -> &[FockState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// The trace of the torus element; with `twisted`, fermionic states
    /// count with a minus sign (the `(-1)^F` insertion).
    pub fn character(&self, twisted: bool) -> LaurentPoly {
        LaurentPoly::from_terms(self.states.iter().map(|s| {
            let sign = if twisted && s.is_fermionic() { -1 } else { 1 };
            (s.weight, sign)
        }))
    }

    /// Characters of the occupation-number sectors `0..=m`.
    pub fn sectors(&self) -> Vec<LaurentPoly> {
        let mut buckets = vec![Vec::new(); self.modes + 1];
        for s in &self.states {
            buckets[s.occupied() as usize].push((s.weight, 1));
        }
        buckets.into_iter().map(LaurentPoly::from_terms).collect()
    }

    /// Number of states in each occupation sector.
    pub fn sector_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0; self.modes + 1];
        for s in &self.states {
            sizes[s.occupied() as usize] += 1;
        }
        sizes
    }
}

/// The `theta^+` Fock space for `rep`: vacuum `u^m_pairs`, and each creation
/// operator carries its weight times `u^-1`. Returns the character of every
/// occupation sector, `u^(m_pairs - n) Alt_n(rep)` for sector `n`.
pub fn direct_sector_trace(m_pairs: i64, rep: &WeightedRep) -> Result<Vec<LaurentPoly>> {
    Ok(charged_fock_basis(m_pairs, rep)?.sectors())
}

/// The Fock basis behind [`direct_sector_trace`].
pub fn charged_fock_basis(m_pairs: i64, rep: &WeightedRep) -> Result<FockBasis> {
    let lower = Monomial::u(-1);
    let creation: Vec<Monomial> = rep.weights.iter().map(|w| *w * lower).collect();
    FockBasis::new(Monomial::u(m_pairs), &creation)
}

/// The 256-state `theta^1` block: eight creation operators with the spinor
/// weights whose first component is positive, on a vacuum of weight
/// `(-2, 0, 0, 0)` (half-units `(-4, 0, 0, 0)`), minus half the sum of the
/// creation weights.
pub fn theta1_fock_basis() -> Result<FockBasis> {
    let creation: Vec<Monomial> = WeightedRep::so9_spinor()
        .weights
        .into_iter()
        .filter(|w| w.exponents()[0] > 0)
        .collect();
    let mut vacuum = Monomial::ONE;
    for w in &creation {
        vacuum = vacuum * *w;
    }
    let half = vacuum.exponents().map(|e| {
        debug_assert!(e % 2 == 0);
        -e / 2
    });
    FockBasis::new(Monomial::new(half), &creation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::U_SLOT;

    #[test]
    fn subset_enumeration_counts() {
        for (size, n) in [(0, 0), (5, 0), (5, 2), (16, 4), (10, 10), (3, 4)] {
            let mut count = 0u64;
            for_each_subset(size, n, |m| {
                assert_eq!(m.count_ones() as usize, n);
                count += 1;
            });
            assert_eq!(count, binomial(size as u64, n as u64));
        }
    }

    #[test]
    fn doublet_alt2_is_singlet() {
        let doublet = WeightedRep::new(vec![Monomial::u(1), Monomial::u(-1)]);
        assert_eq!(
            direct_alt_character(&doublet, 2).unwrap(),
            LaurentPoly::one()
        );
        assert!(direct_alt_character(&doublet, 3).unwrap().is_zero());
    }

    #[test]
    fn spinor_weights() {
        let s = WeightedRep::so9_spinor();
        assert_eq!(s.len(), 16);
        let expected = (0..4).fold(LaurentPoly::one(), |acc, i| {
            &acc * &(&LaurentPoly::var(i, 1) + &LaurentPoly::var(i, -1))
        });
        assert_eq!(direct_alt_character(&s, 1).unwrap(), expected);
        assert_eq!(
            direct_alt_character(&s, 2).unwrap().evaluate_at_identity(),
            120.into()
        );
    }

    #[test]
    fn size_guards() {
        let big = WeightedRep::new(vec![Monomial::ONE; 25]);
        assert!(matches!(
            direct_alt_character(&big, 1),
            Err(Error::SizeGuard(_))
        ));
        let wide = WeightedRep::new(vec![Monomial::ONE; 24]);
        assert!(matches!(
            direct_alt_character(&wide, 12),
            Err(Error::SizeGuard(_))
        ));
        assert!(matches!(
            FockBasis::new(Monomial::ONE, &[Monomial::ONE; 21]),
            Err(Error::SizeGuard(_))
        ));
    }

    #[test]
    fn sector_sizes_are_binomial() {
        let trivial = FockBasis::new(Monomial::ONE, &[Monomial::ONE; 4]).unwrap();
        assert_eq!(trivial.sector_sizes(), vec![1, 4, 6, 4, 1]);
        let theta_pm = charged_fock_basis(8, &WeightedRep::so9_spinor()).unwrap();
        assert_eq!(theta_pm.len(), 65536);
        assert_eq!(theta_pm.sector_sizes()[8], 12870);
        assert_eq!(theta_pm.sector_sizes().iter().sum::<u64>(), 1 << 16);
    }

    #[test]
    fn sectors_match_subset_enumeration() {
        let rep = WeightedRep::new(vec![
            Monomial::z([1, 0, 0, 0]),
            Monomial::z([-1, 0, 0, 0]),
            Monomial::z([0, 2, -1, 0]),
            Monomial::z([0, 0, 0, 3]),
        ]);
        let sectors = direct_sector_trace(2, &rep).unwrap();
        for (n, s) in sectors.iter().enumerate() {
            let alt = direct_alt_character(&rep, n).unwrap();
            assert_eq!(*s, &LaurentPoly::var(U_SLOT, 2 - n as i64) * &alt);
        }
    }

    #[test]
    fn parity_tracks_occupation() {
        let b = FockBasis::new(Monomial::ONE, &[Monomial::z([1, 0, 0, 0]); 3]).unwrap();
        for s in b.states() {
            assert_eq!(s.is_fermionic(), s.occupation.count_ones() % 2 == 1);
        }
        assert_eq!(b.character(true).evaluate_at_identity(), 0.into());
        assert_eq!(b.character(false).evaluate_at_identity(), 8.into());
    }

    #[test]
    fn theta1_block_has_256_states() {
        let b = theta1_fock_basis().unwrap();
        assert_eq!(b.len(), 256);
        assert_eq!(b.states()[0].weight, Monomial::z([-4, 0, 0, 0]));
        assert_eq!(b.character(true).evaluate_at_identity(), 0.into());
    }
}
