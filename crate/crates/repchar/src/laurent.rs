//! Exact multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Every character in this crate is a [`LaurentPoly`] in five variables. Slots
//! 0..4 hold the exponents of `z_i = exp(i x_i / 2)` (half-angle torus
//! coordinates of SO(9)), slot 4 holds the exponent of `u = exp(i y)` (the
//! SU(2) torus coordinate). With the half-angle convention every weight that
//! occurs, including spinor weights, has integer exponents.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Number of variables: `z1..z4` and `u`.
pub const NVARS: usize = 5;
/// Slot index of the SU(2) variable `u`.
pub const U_SLOT: usize = 4;

const VAR_NAMES: [&str; NVARS] = ["z1", "z2", "z3", "z4", "u"];

/// An exponent vector `z1^a z2^b z3^c z4^d u^e`.
///
/// Ordered graded-lexicographically: total degree first, then slot by slot
/// starting from `z1`. The order is compatible with multiplication, which is
/// what [`LaurentPoly::exact_divide`] relies on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i64; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exponents: [i64; NVARS]) -> Self {
        Monomial(exponents)
    }

    /// Monomial in the SO(9) variables only.
    pub fn z(exponents: [i64; 4]) -> Self {
        let [a, b, c, d] = exponents;
        Monomial([a, b, c, d, 0])
    }

    pub fn u(exponent: i64) -> Self {
        let mut e = [0; NVARS];
        e[U_SLOT] = exponent;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[i64; NVARS] {
        &self.0
    }

    /// The four SO(9) exponents.
    pub fn z_part(&self) -> [i64; 4] {
        [self.0[0], self.0[1], self.0[2], self.0[3]]
    }

    pub fn u_exponent(&self) -> i64 {
        self.0[U_SLOT]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.map(|e| -e))
    }

    pub fn scale(&self, k: i64) -> Self {
        Monomial(self.0.map(|e| e * k))
    }

    pub fn div(&self, other: &Monomial) -> Self {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x -= y;
        }
        Monomial(e)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    // Multiplying monomials adds exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, &e) in VAR_NAMES.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{name}^{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A Laurent polynomial in canonical form: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// `z_slot^e`, for `slot` in `0..5` (slot 4 is `u`).
    pub fn var(slot: usize, e: i64) -> Self {
        let mut x = [0; NVARS];
        x[slot] = e;
        Self::term(Monomial(x), 1)
    }

    /// Builds a polynomial from possibly repeated monomials, merging like terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Self {
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing unless each division is exact.
    pub fn div_exact_integer(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {c} of {m} by {d}"
                )));
            }
            terms.insert(*m, q);
        }
        Ok(LaurentPoly { terms })
    }

    /// Applies `f` to every monomial and merges like terms.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `chi(R^k)` from `chi(R)`: every exponent vector is multiplied by `k`.
    pub fn power_substitute(&self, k: u32) -> Self {
        assert!(k >= 1, "power substitution needs k >= 1");
        let k = i64::from(k);
        // Scaling is injective, so no terms merge.
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scale(k), c.clone()))
                .collect(),
        }
    }

    /// Negates every exponent (complex conjugation on the torus).
    pub fn conjugate(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.inverse(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients: every variable set to 1.
    pub fn evaluate_at_identity(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient of the all-zero monomial.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::ONE)
    }

    /// `constant_term(self * other)` without forming the product.
    pub fn constant_term_of_product(&self, other: &LaurentPoly) -> BigInt {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(m, c)| large.terms.get(&m.inverse()).map(|d| c * d))
            .sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Per-slot minimum and maximum exponents. `None` for the zero polynomial.
    pub fn exponent_bounds(&self) -> Option<([i64; NVARS], [i64; NVARS])> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.0, first.0);
        for m in it {
            for i in 0..NVARS {
                lo[i] = lo[i].min(m.0[i]);
                hi[i] = hi[i].max(m.0[i]);
            }
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / den` by repeated leading-term elimination.
    ///
    /// Fails with [`Error::NotDivisible`] when a nonzero remainder survives.
    /// Candidate quotient terms are confined to the box of per-slot exponent
    /// bounds that an exact quotient must lie in, so the loop terminates on
    /// non-divisible input as well.
    pub fn exact_divide(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (lead_m, lead_c) = match den.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let Some((num_lo, num_hi)) = self.exponent_bounds() else {
            return Ok(Self::zero());
        };
        let (den_lo, den_hi) = den.exponent_bounds().expect("nonzero divisor");

        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&m, c)) = rem.last_key_value() {
            let qm = m.div(&lead_m);
            let in_box = (0..NVARS)
                .all(|i| qm.0[i] >= num_lo[i] - den_lo[i] && qm.0[i] <= num_hi[i] - den_hi[i]);
            if !in_box {
                return Err(Error::NotDivisible(format!(
                    "remainder term {c} * {m} cannot be eliminated"
                )));
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {c} by leading coefficient {lead_c}"
                )));
            }
            for (dm, dc) in &den.terms {
                let target = qm * *dm;
                let delta = &qc * dc;
                match rem.get_mut(&target) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&target);
                        }
                    }
                    None => {
                        rem.insert(target, -delta);
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(LaurentPoly { terms: quot })
    }

    fn add_scaled(&mut self, other: &LaurentPoly, sign: i8) {
        for (m, c) in &other.terms {
            match self.terms.get_mut(m) {
                Some(v) => {
                    if sign > 0 {
                        *v += c;
                    } else {
                        *v -= c;
                    }
                    if v.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    let c = if sign > 0 { c.clone() } else { -c };
                    self.terms.insert(*m, c);
                }
            }
        }
    }

    fn max_coefficient_bits(&self) -> u64 {
        self.terms.values().map(BigInt::bits).max().unwrap_or(0)
    }

    /// `self += k * other`.
    pub fn add_multiple(&mut self, other: &LaurentPoly, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        if k.is_one() {
            return self.add_scaled(other, 1);
        }
        for (m, c) in &other.terms {
            let delta = c * k;
            match self.terms.get_mut(m) {
                Some(v) => {
                    *v += delta;
                    if v.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(*m, delta);
                }
            }
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, -1);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Every product coefficient is bounded by |a|max * |b|max * min(len);
        // when that fits in i128 we skip BigInt allocation in the inner loop.
        let len_bits = u64::from(usize::BITS - self.len().min(rhs.len()).leading_zeros());
        if self.max_coefficient_bits() + rhs.max_coefficient_bits() + len_bits < 127 {
            return mul_small(self, rhs);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().max(rhs.len()) * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                match acc.get_mut(&(*ma * *mb)) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(*ma * *mb, prod);
                    }
                }
            }
        }
        LaurentPoly::from_map(acc)
    }
}

fn mul_small(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let small = |p: &LaurentPoly| -> Vec<(Monomial, i128)> {
        p.terms
            .iter()
            .map(|(m, c)| (*m, c.to_i128().expect("checked bound")))
            .collect()
    };
    let (a, b) = (small(a), small(b));
    let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(a.len().max(b.len()) * 2);
    for (ma, ca) in &a {
        for (mb, cb) in &b {
            *acc.entry(*ma * *mb).or_insert(0) += ca * cb;
        }
    }
    LaurentPoly {
        terms: acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, BigInt::from(c)))
            .collect(),
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Canonical text form: terms in descending monomial order, each written as
/// `coef * z1^a z2^b z3^c z4^d u^e` with zero exponents omitted. A constant
/// term is written as its coefficient alone and the zero polynomial as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{mag}")?,
                (0, true) => write!(f, "-{mag}")?,
                (_, false) => write!(f, " + {mag}")?,
                (_, true) => write!(f, " - {mag}")?,
            }
            if !m.is_one() {
                write!(f, " * {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn parse_factor(tok: &str) -> Result<(usize, i64)> {
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => {
            let e = e
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            (n, e)
        }
        None => (tok, 1),
    };
    let slot = VAR_NAMES
        .iter()
        .position(|v| *v == name)
        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
    Ok((slot, exp))
}

fn is_variable_token(tok: &str) -> bool {
    tok.starts_with('z') || tok.starts_with('u')
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let mut terms = Vec::new();
        let mut pos = 0;
        let mut sign = BigInt::one();
        loop {
            let tok = *tokens
                .get(pos)
                .ok_or_else(|| Error::Parse("expected a term".into()))?;
            let mut exps = [0i64; NVARS];
            let coef = if is_variable_token(tok) {
                BigInt::one()
            } else {
                pos += 1;
                let c = tok
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{tok}`")))?;
                if tokens.get(pos) == Some(&"*") {
                    pos += 1;
                    if !tokens.get(pos).is_some_and(|t| is_variable_token(t)) {
                        return Err(Error::Parse("expected a variable after `*`".into()));
                    }
                }
                c
            };
            while let Some(t) = tokens.get(pos).filter(|t| is_variable_token(t)) {
                let (slot, e) = parse_factor(t)?;
                exps[slot] += e;
                pos += 1;
            }
            terms.push((Monomial(exps), &sign * coef));
            match tokens.get(pos) {
                None => break,
                Some(&"+") => sign = BigInt::one(),
                Some(&"-") => sign = -BigInt::one(),
                Some(t) => return Err(Error::Parse(format!("unexpected token `{t}`"))),
            }
            pos += 1;
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(i: usize, e: i64) -> LaurentPoly {
        LaurentPoly::var(i, e)
    }

    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::constant(k)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&(&z(0, 1) + &c(1)) + &(&c(1) - &z(0, 1)), c(2));
        let p = &z(0, 3) + &z(3, -2);
        assert_eq!(&p + &LaurentPoly::zero(), p);
        let zu = &z(0, 1) * &z(4, 1);
        assert_eq!(&zu + &zu, zu.scale(&BigInt::from(2)));
        assert_eq!((&zu - &zu).len(), 0);
    }

    #[test]
    fn mul_examples() {
        let s = &z(0, 1) + &z(0, -1);
        let d = &z(0, 1) - &z(0, -1);
        assert_eq!(&s * &s, &(&z(0, 2) + &c(2)) + &z(0, -2));
        assert_eq!(&s * &LaurentPoly::one(), s);
        assert_eq!(&d * &s, &z(0, 2) - &z(0, -2));
    }

    #[test]
    fn power_substitute_examples() {
        let s = &z(0, 1) + &z(0, -1);
        assert_eq!(s.power_substitute(2), &z(0, 2) + &z(0, -2));
        assert_eq!(s.power_substitute(1), s);
    }

    #[test]
    fn exact_divide_examples() {
        let num = &z(0, 2) - &z(0, -2);
        let den = &z(0, 1) - &z(0, -1);
        assert_eq!(num.exact_divide(&den).unwrap(), &z(0, 1) + &z(0, -1));
        let p = &(&z(1, 3) * &z(4, -1)) - &c(7);
        assert_eq!(p.exact_divide(&p).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn exact_divide_rejects_remainders() {
        let num = &z(0, 2) + &c(1);
        let den = &z(0, 1) - &z(0, -1);
        assert!(matches!(
            num.exact_divide(&den),
            Err(Error::NotDivisible(_))
        ));
        assert!(matches!(
            c(3).exact_divide(&c(2)),
            Err(Error::NotDivisible(_))
        ));
        assert!(matches!(
            c(3).exact_divide(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        ));
        // A mixed-sign divisor that would loop forever without the exponent box.
        let den = &z(0, 1) - &z(1, 1);
        assert!(num.exact_divide(&den).is_err());
    }

    #[test]
    fn evaluation_and_constant_terms() {
        assert_eq!(LaurentPoly::one().evaluate_at_identity(), BigInt::from(1));
        let p = &(&z(0, 1) + &c(3)) + &z(4, 1);
        assert_eq!(p.constant_term(), BigInt::from(3));
        assert_eq!((&z(0, 1) * &z(0, -1)).constant_term(), BigInt::from(1));
        assert_eq!(z(0, 1).conjugate(), z(0, -1));
        assert_eq!(
            p.constant_term_of_product(&p.conjugate()),
            (&p * &p.conjugate()).constant_term()
        );
    }

    #[test]
    fn text_format() {
        let p = &(&(&z(0, 2) * &z(4, -1)).scale(&BigInt::from(-3)) + &c(5)) + &z(3, 1);
        let s = p.to_string();
        assert_eq!(s, "-3 * z1^2 u^-1 + 1 * z4^1 + 5");
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!(
            "z1 + z1^-1".parse::<LaurentPoly>().unwrap(),
            &z(0, 1) + &z(0, -1)
        );
        assert!("2 * w1^3".parse::<LaurentPoly>().is_err());
        assert!("2 +".parse::<LaurentPoly>().is_err());
        assert!("2 3".parse::<LaurentPoly>().is_err());
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::array::uniform5(-2i64..=2), -3i64..=3), 0..5)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (Monomial(e), c))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), k in 1u32..4) {
            prop_assert_eq!((&a * &b).evaluate_at_identity(), a.evaluate_at_identity() * b.evaluate_at_identity());
            prop_assert_eq!((&a + &b).evaluate_at_identity(), a.evaluate_at_identity() + b.evaluate_at_identity());
            prop_assert_eq!(a.power_substitute(k).evaluate_at_identity(), a.evaluate_at_identity());
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
            prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        }

        #[test]
        fn text_round_trip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
