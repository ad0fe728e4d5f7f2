//! SO(9) (type B4) representation theory on the maximal torus.
//!
//! Weights are stored in half-units, i.e. as exponents of the half-angle
//! variables `z_i`: the weight `(1/2, 1/2, 1/2, 1/2)` is stored as
//! `[1, 1, 1, 1]` and the vector weight `(1, 0, 0, 0)` as `[2, 0, 0, 0]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

/// Order of the B4 Weyl group, `2^4 * 4!`.
pub const WEYL_GROUP_ORDER: u32 = 384;

/// Fundamental weights in half-units.
pub const FUNDAMENTAL_WEIGHTS: [WeightVector; 4] = [
    WeightVector([2, 0, 0, 0]),
    WeightVector([2, 2, 0, 0]),
    WeightVector([2, 2, 2, 0]),
    WeightVector([1, 1, 1, 1]),
];

/// The Weyl vector `(7/2, 5/2, 3/2, 1/2)` in half-units.
pub const RHO: WeightVector = WeightVector([7, 5, 3, 1]);

/// A B4 weight with components in half-units.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightVector(pub [i64; 4]);

impl WeightVector {
    pub fn is_dominant(&self) -> bool {
        let [a, b, c, d] = self.0;
        a >= b && b >= c && c >= d && d >= 0
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::z(self.0)
    }
}

impl std::ops::Add for WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: WeightVector) -> WeightVector {
        let mut w = self.0;
        for (x, y) in w.iter_mut().zip(rhs.0) {
            *x += y;
        }
        WeightVector(w)
    }
}

/// Dynkin label `[q1, q2, q3, q4]` of an SO(9) irrep.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DynkinLabel(pub [u32; 4]);

impl DynkinLabel {
    pub const TRIVIAL: DynkinLabel = DynkinLabel([0, 0, 0, 0]);
    pub const VECTOR: DynkinLabel = DynkinLabel([1, 0, 0, 0]);
    pub const SPINOR: DynkinLabel = DynkinLabel([0, 0, 0, 1]);

    pub const fn new(q1: u32, q2: u32, q3: u32, q4: u32) -> Self {
        DynkinLabel([q1, q2, q3, q4])
    }

    /// Odd `q4`: a spinor (fermionic) representation.
    pub fn is_spinor(&self) -> bool {
        self.0[3] % 2 == 1
    }

    pub fn highest_weight(&self) -> WeightVector {
        let mut w = [0i64; 4];
        for (q, mu) in self.0.iter().zip(FUNDAMENTAL_WEIGHTS) {
            for (x, m) in w.iter_mut().zip(mu.0) {
                *x += i64::from(*q) * m;
            }
        }
        WeightVector(w)
    }

    /// Inverse of [`highest_weight`](Self::highest_weight). `None` unless the
    /// weight is dominant and integral.
    pub fn from_highest_weight(w: WeightVector) -> Option<Self> {
        if !w.is_dominant() {
            return None;
        }
        let [a, b, c, d] = w.0;
        let steps = [a - b, b - c, c - d];
        if steps.iter().any(|s| s % 2 != 0) {
            return None;
        }
        let q = [steps[0] / 2, steps[1] / 2, steps[2] / 2, d];
        let q = q.map(|x| u32::try_from(x).ok());
        Some(DynkinLabel([q[0]?, q[1]?, q[2]?, q[3]?]))
    }

    /// Dimension from the Weyl dimension formula, written as a product over
    /// the positive roots `e_i`, `e_i + e_j` and `e_i - e_j` of B4.
    pub fn dimension(&self) -> u64 {
        let [q1, q2, q3, q4] = self.0.map(u64::from);
        let q = [q1, q2, q3];
        // tail(i) = q_i + ... + q_3, empty for i = 4.
        let tail = |i: usize| -> u64 { q[i - 1..].iter().sum() };
        let span = |i: usize, j: usize| -> u64 {
            self.0[i - 1..j - 1].iter().map(|&x| u64::from(x)).sum()
        };

        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        let mut factor = |add: u64, base: u64| {
            num *= BigInt::from(base + add);
            den *= BigInt::from(base);
        };
        for i in 1..=4 {
            factor(2 * tail(i) + q4, 9 - 2 * i as u64);
        }
        for i in 1..=4 {
            for j in i + 1..=4 {
                factor(span(i, j) + 2 * tail(j) + q4, 9 - (i + j) as u64);
                factor(span(i, j), (j - i) as u64);
            }
        }
        let (d, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        d.to_u64().expect("dimension fits in u64")
    }
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[{a},{b},{c},{d}]")
    }
}

impl fmt::Debug for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A signed permutation acting on the four SO(9) exponent slots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WeylElement {
    perm: [usize; 4],
    signs: [i64; 4],
}

impl WeylElement {
    /// `(w . v)_i = signs_i * v_{perm(i)}`.
    pub fn apply(&self, v: [i64; 4]) -> [i64; 4] {
        std::array::from_fn(|i| self.signs[i] * v[self.perm[i]])
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Monomial {
        let z = self.apply(m.z_part());
        Monomial::new([z[0], z[1], z[2], z[3], m.u_exponent()])
    }

    /// Determinant of the signed permutation matrix.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let perm_sign = if inversions % 2 == 0 { 1 } else { -1 };
        perm_sign * self.signs.iter().product::<i64>()
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All 384 elements of the B4 Weyl group.
pub fn weyl_group() -> Vec<WeylElement> {
    let mut out = Vec::with_capacity(WEYL_GROUP_ORDER as usize);
    for perm in permutations4() {
        for bits in 0..16u32 {
            let signs = std::array::from_fn(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
            out.push(WeylElement { perm, signs });
        }
    }
    out
}

/// `D_lambda = det[z_i^{l_j} - z_i^{-l_j}]`, the alternating sum of
/// `z^{w . lambda}` over the Weyl group, with `l` the half-unit components.
pub fn alternant(lambda: WeightVector) -> LaurentPoly {
    LaurentPoly::from_terms(
        weyl_group()
            .into_iter()
            .map(|w| (Monomial::z(w.apply(lambda.0)), w.sign())),
    )
}

/// The Weyl denominator `D_rho`.
pub fn weyl_denominator() -> LaurentPoly {
    alternant(RHO)
}

/// The sixteen factors `z^{a/2} - z^{-a/2}`, one per positive root `a`, whose
/// product is `D_rho`.
pub fn positive_root_factors() -> Vec<LaurentPoly> {
    let binomial = |e: [i64; 4]| {
        let m = Monomial::z(e);
        &LaurentPoly::term(m, 1) - &LaurentPoly::term(m.inverse(), 1)
    };
    let unit = |i: usize, s: i64| -> [i64; 4] {
        let mut e = [0; 4];
        e[i] = s;
        e
    };
    let mut out = Vec::with_capacity(16);
    for i in 0..4 {
        out.push(binomial(unit(i, 1)));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut plus = unit(i, 1);
            plus[j] = 1;
            let mut minus = unit(i, 1);
            minus[j] = -1;
            out.push(binomial(plus));
            out.push(binomial(minus));
        }
    }
    out
}

/// Computes `D_{rho+mu} / D_rho` without the cache. The division runs one
/// root factor at a time.
pub fn compute_character(label: DynkinLabel) -> Result<LaurentPoly> {
    let mut q = alternant(label.highest_weight() + RHO);
    for f in positive_root_factors() {
        q = q.exact_divide(&f).map_err(|e| Error::Character {
            label,
            source: Box::new(e),
        })?;
    }
    Ok(q)
}

/// Memoized irreducible characters, safe for concurrent lookup-or-insert.
#[derive(Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<DynkinLabel, Arc<LaurentPoly>>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, label: DynkinLabel) -> Result<Arc<LaurentPoly>> {
        if let Some(p) = self.table.read().expect("cache lock").get(&label) {
            return Ok(Arc::clone(p));
        }
        let p = Arc::new(compute_character(label)?);
        let mut table = self.table.write().expect("cache lock");
        Ok(Arc::clone(table.entry(label).or_insert(p)))
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn global_cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(CharacterCache::new)
}

/// The irreducible character of `label`, from the process-wide cache.
pub fn character(label: DynkinLabel) -> Result<Arc<LaurentPoly>> {
    global_cache().get(label)
}

/// Multiplicities of SO(9) irreps in a character.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct IrrepSum {
    multiplicities: BTreeMap<DynkinLabel, u64>,
}

impl IrrepSum {
    pub fn get(&self, label: &DynkinLabel) -> u64 {
        self.multiplicities.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DynkinLabel, &u64)> {
        self.multiplicities.iter()
    }

    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `sum mult(L) * dim(L)`.
    pub fn total_dimension(&self) -> BigInt {
        self.iter()
            .map(|(l, m)| BigInt::from(l.dimension()) * m)
            .sum()
    }

    /// Reassembles `sum mult(L) * chi_L`.
    pub fn to_polynomial(&self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for (l, m) in self.iter() {
            p.add_multiple(&*character(*l)?, &BigInt::from(*m));
        }
        Ok(p)
    }
}

impl FromIterator<(DynkinLabel, u64)> for IrrepSum {
    fn from_iter<I: IntoIterator<Item = (DynkinLabel, u64)>>(iter: I) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (l, m) in iter {
            if m > 0 {
                *multiplicities.entry(l).or_insert(0) += m;
            }
        }
        IrrepSum { multiplicities }
    }
}

/// Decomposes a Weyl-invariant, `u`-free polynomial into irreducible
/// characters by dominant-weight peeling.
///
/// The lexicographically greatest dominant exponent of the remainder is
/// always the highest weight of a constituent; its coefficient is that
/// constituent's multiplicity. Fails with [`Error::NotACharacter`] on a
/// negative multiplicity, a non-integral leading weight, or a remainder with
/// no dominant term left.
pub fn decompose(p: &LaurentPoly) -> Result<IrrepSum> {
    if let Some((m, _)) = p.terms().find(|(m, _)| m.u_exponent() != 0) {
        return Err(Error::NotACharacter(format!("term {m} depends on u")));
    }
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while !rem.is_zero() {
        let top = rem
            .terms()
            .map(|(m, c)| (WeightVector(m.z_part()), c))
            .filter(|(w, _)| w.is_dominant())
            .max_by_key(|(w, _)| *w);
        let Some((w, c)) = top else {
            return Err(Error::NotACharacter(
                "nonzero remainder without a dominant weight (not Weyl-invariant)".into(),
            ));
        };
        let Some(label) = DynkinLabel::from_highest_weight(w) else {
            return Err(Error::NotACharacter(format!(
                "leading weight {:?} is not integral",
                w.0
            )));
        };
        if c.is_negative() {
            return Err(Error::NotACharacter(format!(
                "negative multiplicity {c} for {label}"
            )));
        }
        let mult = c.clone();
        rem.add_multiple(&*character(label)?, &-&mult);
        let mult = mult
            .to_u64()
            .ok_or_else(|| Error::NotACharacter(format!("multiplicity of {label} overflows")))?;
        out.insert(label, mult);
    }
    Ok(IrrepSum {
        multiplicities: out,
    })
}

/// The orthogonality pairing
/// `constant_term(a * conj(b) * D_rho * conj(D_rho)) / 384`.
///
/// For genuine characters this equals `sum_L mult_a(L) * mult_b(L)`.
pub fn inner_product(a: &LaurentPoly, b: &LaurentPoly) -> Result<BigInt> {
    let d = weyl_denominator();
    let ad = a * &d;
    let bd = b * &d;
    let raw = ad.constant_term_of_product(&bd.conjugate());
    let (q, r) = raw.div_rem(&BigInt::from(WEYL_GROUP_ORDER));
    if !r.is_zero() {
        return Err(Error::NotDivisible(format!(
            "pairing {raw} is not a multiple of the Weyl group order (inputs not Weyl-invariant)"
        )));
    }
    Ok(q)
}
