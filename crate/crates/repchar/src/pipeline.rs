//! The full SO(9) x SU(2) decomposition of the `2^24` fermionic states.
//!
//! The 48 real fermions split into the `theta^1` block, whose 256 states
//! carry `[2000] + [0010] + [1001]`, and the `theta^+` Fock space, whose
//! occupation-`n` sector carries `Alt_n(spinor)` with `g^1 = 8 - n`. Regrouping
//! the `u` dependence into SU(2) characters gives one SO(9) character per spin
//! `0..=8`, and the `(-1)^F`-twisted trace separates bosons from fermions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::alt_spinor_table;
use crate::laurent::{LaurentPoly, U_SLOT};
use crate::su2::{cosine_pair, su2_character, Spin};
use crate::weyl_b4::{character, decompose, DynkinLabel, IrrepSum};

/// Largest spin that occurs.
pub const MAX_SPIN: u32 = 8;
/// Number of spin columns, `0..=8`.
pub const SPIN_COUNT: usize = MAX_SPIN as usize + 1;
/// Dimension of the full state space.
pub const TOTAL_STATES: u64 = 1 << 24;
/// Boson (equivalently fermion) state counts per spin sector, spins 0..=8.
pub const REFERENCE_SECTOR_COUNTS: [u64; SPIN_COUNT] = [
    183040, 439296, 465920, 326144, 161280, 56320, 13312, 1920, 128,
];

/// `chi_[2000] + chi_[0010] +/- chi_[1001]`: the 256 states of the
/// `theta^1` block, with the vector-spinor counted negatively when `tilde`.
pub fn chi_theta1(tilde: bool) -> Result<LaurentPoly> {
    let sym = character(DynkinLabel::new(2, 0, 0, 0))?;
    let three = character(DynkinLabel::new(0, 0, 1, 0))?;
    let vs = character(DynkinLabel::new(1, 0, 0, 1))?;
    let bosons = &*sym + &*three;
    Ok(if tilde {
        &bosons - &*vs
    } else {
        &bosons + &*vs
    })
}

/// The `theta^+/-` trace written occupation sector by occupation sector:
///
/// `sum_{n<h} (u^(h-n) + u^-(h-n)) s_n Alt_n + Alt_h`
///
/// with `h = (alts.len() - 1) / 2` and `s_n = (-1)^n` when `tilde`, else 1.
/// Uses the reflection `Alt_(2h-n) = Alt_n` to pair sectors `n` and `2h - n`.
pub fn theta_pm_character(alts: &[LaurentPoly], tilde: bool) -> LaurentPoly {
    assert!(alts.len() % 2 == 1, "need Alt_0..Alt_2h");
    let h = (alts.len() - 1) / 2;
    let mut acc = alts[h].clone();
    for (n, alt) in alts.iter().enumerate().take(h) {
        let s = (h - n) as u32;
        let mut term = &cosine_pair(Spin(s)) * alt;
        if tilde && n % 2 == 1 {
            term = -term;
        }
        acc += &term;
    }
    acc
}

/// Boson or fermion states.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    /// Even `q4` labels are bosonic, odd ones fermionic.
    pub fn of_label(label: &DynkinLabel) -> Self {
        if label.is_spinor() {
            Statistics::Fermion
        } else {
            Statistics::Boson
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Statistics::Boson => "boson",
            Statistics::Fermion => "fermion",
        }
    }
}

/// The SO(9) characters of one spin sector.
#[derive(Clone, Debug)]
pub struct Sector {
    pub spin: Spin,
    pub chi: LaurentPoly,
    pub chi_tilde: LaurentPoly,
    pub boson: LaurentPoly,
    pub fermion: LaurentPoly,
}

impl Sector {
    fn new(spin: Spin, chi: LaurentPoly, chi_tilde: LaurentPoly) -> Result<Self> {
        let two = BigInt::from(2);
        let boson = (&chi + &chi_tilde).div_exact_integer(&two)?;
        let fermion = (&chi - &chi_tilde).div_exact_integer(&two)?;
        Ok(Sector {
            spin,
            chi,
            chi_tilde,
            boson,
            fermion,
        })
    }

    pub fn part(&self, stats: Statistics) -> &LaurentPoly {
        match stats {
            Statistics::Boson => &self.boson,
            Statistics::Fermion => &self.fermion,
        }
    }
}

/// Sector characters for spins `0..=8`.
#[derive(Clone, Debug)]
pub struct SectorCharacters {
    sectors: Vec<Sector>,
}

impl SectorCharacters {
    /// Builds all sectors from `chi(Alt_n(spinor))`, `n = 0..=16`:
    ///
    /// `chi_n = chi_theta1 (Alt_(8-n) - Alt_(7-n))`,
    /// `tilde chi_n = (-1)^n tilde chi_theta1 (Alt_(8-n) + Alt_(7-n))` for
    /// `n < 8`, and `chi_theta1`, `tilde chi_theta1` at `n = 8`.
    pub fn from_alt_table(alts: &[LaurentPoly]) -> Result<Self> {
        assert_eq!(alts.len(), 17, "need Alt_0..Alt_16");
        let t1 = chi_theta1(false)?;
        let t1_tilde = chi_theta1(true)?;
        let sectors = (0..=MAX_SPIN)
            .into_par_iter()
            .map(|n| {
                if n == MAX_SPIN {
                    return Sector::new(Spin(n), t1.clone(), t1_tilde.clone());
                }
                let hi = &alts[(8 - n) as usize];
                let lo = &alts[(7 - n) as usize];
                let chi = &t1 * &(hi - lo);
                let mut chi_tilde = &t1_tilde * &(hi + lo);
                if n % 2 == 1 {
                    chi_tilde = -chi_tilde;
                }
                Sector::new(Spin(n), chi, chi_tilde)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SectorCharacters { sectors })
    }

    pub fn sector(&self, n: u32) -> &Sector {
        &self.sectors[n as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Sector> {
        self.sectors.iter()
    }

    /// `sum_n chi^SU(2)_n * chi_n` (or the `tilde` version).
    pub fn reconstruct(&self, tilde: bool) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for s in &self.sectors {
            let p = if tilde { &s.chi_tilde } else { &s.chi };
            acc += &(&su2_character(s.spin) * p);
        }
        acc
    }
}

/// All 9 x 2 sector characters.
pub fn sector_characters() -> Result<SectorCharacters> {
    SectorCharacters::from_alt_table(&alt_spinor_table())
}

/// The total character `chi_theta1 * chi_theta+-` assembled directly from
/// the occupation sectors, without regrouping into SU(2) characters.
pub fn total_character_direct(alts: &[LaurentPoly], tilde: bool) -> Result<LaurentPoly> {
    Ok(&chi_theta1(tilde)? * &theta_pm_character(alts, tilde))
}

/// Irrep content of one boson or fermion part of a spin sector.
#[derive(Clone, Debug)]
pub struct SectorDecomposition {
    pub spin: Spin,
    pub statistics: Statistics,
    pub irreps: IrrepSum,
}

/// Decomposes all 18 boson/fermion sector characters, in parallel.
pub fn decompose_sectors(sectors: &SectorCharacters) -> Result<Vec<SectorDecomposition>> {
    let jobs: Vec<(Spin, Statistics, &LaurentPoly)> = sectors
        .iter()
        .flat_map(|s| [Statistics::Boson, Statistics::Fermion].map(|st| (s.spin, st, s.part(st))))
        .collect();
    jobs.into_par_iter()
        .map(|(spin, statistics, p)| {
            Ok(SectorDecomposition {
                spin,
                statistics,
                irreps: decompose(p)?,
            })
        })
        .collect()
}

/// One row of the multiplicity table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableRow {
    pub dimension: u64,
    pub statistics: Statistics,
    pub multiplicities: [u64; SPIN_COUNT],
}

/// Multiplicity of each SO(9) x SU(2) irrep `(label, spin)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiplicityTable {
    rows: BTreeMap<DynkinLabel, TableRow>,
}

impl MultiplicityTable {
    /// Merges sector decompositions into rows. A label reached from both a
    /// boson and a fermion part is an error.
    pub fn assemble(decomps: &[SectorDecomposition]) -> Result<Self> {
        let mut rows: BTreeMap<DynkinLabel, TableRow> = BTreeMap::new();
        for d in decomps {
            for (label, &m) in d.irreps.iter() {
                let row = rows.entry(*label).or_insert_with(|| TableRow {
                    dimension: label.dimension(),
                    statistics: d.statistics,
                    multiplicities: [0; SPIN_COUNT],
                });
                if row.statistics != d.statistics {
                    return Err(Error::NotACharacter(format!(
                        "{label} occurs among both boson and fermion states"
                    )));
                }
                row.multiplicities[d.spin.0 as usize] += m;
            }
        }
        Ok(MultiplicityTable { rows })
    }

    pub fn get(&self, label: &DynkinLabel) -> Option<&TableRow> {
        self.rows.get(label)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows ordered by `(dimension, label)`.
    pub fn ordered_rows(&self) -> Vec<(DynkinLabel, &TableRow)> {
        let mut rows: Vec<_> = self.rows.iter().map(|(l, r)| (*l, r)).collect();
        rows.sort_by_key(|(l, r)| (r.dimension, *l));
        rows
    }

    /// `sum dim * mult * (2n + 1)`.
    pub fn grand_total(&self) -> u64 {
        self.rows
            .values()
            .map(|r| {
                r.multiplicities
                    .iter()
                    .enumerate()
                    .map(|(n, m)| r.dimension * m * (2 * n as u64 + 1))
                    .sum::<u64>()
            })
            .sum()
    }

    /// States of the given statistics in spin sector `n`, read off the table.
    pub fn sector_count(&self, n: u32, stats: Statistics) -> u64 {
        self.rows
            .values()
            .filter(|r| r.statistics == stats)
            .map(|r| r.dimension * r.multiplicities[n as usize])
            .sum()
    }
}

/// Builds the complete table: sector characters, then 18 decompositions.
pub fn full_table() -> Result<MultiplicityTable> {
    let sectors = sector_characters()?;
    MultiplicityTable::assemble(&decompose_sectors(&sectors)?)
}

/// Boson and fermion state counts of one spin sector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SectorCount {
    pub spin: u32,
    pub boson: u64,
    pub fermion: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SectorReport {
    pub sectors: Vec<SectorCount>,
    pub grand_total: u64,
}

fn count(p: &LaurentPoly) -> u64 {
    p.evaluate_at_identity()
        .to_u64()
        .expect("state counts are nonnegative and fit in u64")
}

/// Per-spin state counts and `sum (boson + fermion)(2n + 1)`.
pub fn sector_report(sectors: &SectorCharacters) -> SectorReport {
    let counts: Vec<SectorCount> = sectors
        .iter()
        .map(|s| SectorCount {
            spin: s.spin.0,
            boson: count(&s.boson),
            fermion: count(&s.fermion),
        })
        .collect();
    let grand_total = counts
        .iter()
        .map(|c| (c.boson + c.fermion) * Spin(c.spin).dimension())
        .sum();
    SectorReport {
        sectors: counts,
        grand_total,
    }
}

/// A named pass/fail check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct VerificationRecord {
    pub checks: Vec<Check>,
}

impl VerificationRecord {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationRecord) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn spins_of(row: Option<&TableRow>) -> BTreeMap<u32, u64> {
    row.map(|r| {
        r.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(n, &m)| (n as u32, m))
            .collect()
    })
    .unwrap_or_default()
}

/// The structural statements about the table: the unique SO(9) x SU(2)
/// singlet, the vector row, the absence of gauge-invariant spinors,
/// boson/fermion balance per sector, and parity purity of every sector.
pub fn verify_claims(
    table: &MultiplicityTable,
    decomps: &[SectorDecomposition],
    report: &SectorReport,
) -> VerificationRecord {
    let mut rec = VerificationRecord::default();

    let singlet = spins_of(table.get(&DynkinLabel::TRIVIAL));
    rec.push(Check::new(
        "singlet-unique",
        singlet.get(&0) == Some(&1),
        format!("[0,0,0,0] spins {singlet:?}"),
    ));
    rec.push(Check::new(
        "singlet-row",
        singlet == BTreeMap::from([(0, 1), (6, 1)]),
        format!("[0,0,0,0] spins {singlet:?}, expected {{0: 1, 6: 1}}"),
    ));

    let vector = spins_of(table.get(&DynkinLabel::VECTOR));
    rec.push(Check::new(
        "vector-row",
        vector == BTreeMap::from([(1, 1), (3, 1), (5, 1), (7, 1)]),
        format!("[1,0,0,0] spins {vector:?}, expected {{1: 1, 3: 1, 5: 1, 7: 1}}"),
    ));

    let spinor0 = table
        .get(&DynkinLabel::SPINOR)
        .map_or(0, |r| r.multiplicities[0]);
    rec.push(Check::new(
        "no-invariant-spinor",
        spinor0 == 0,
        format!("[0,0,0,1] multiplicity at spin 0 = {spinor0}"),
    ));

    for c in &report.sectors {
        rec.push(Check::new(
            format!("boson-fermion-balance-spin-{}", c.spin),
            c.boson == c.fermion,
            format!("{} = {}", c.boson, c.fermion),
        ));
    }

    let impure: Vec<String> = decomps
        .iter()
        .flat_map(|d| {
            d.irreps
                .iter()
                .filter(move |(l, _)| Statistics::of_label(l) != d.statistics)
                .map(move |(l, _)| format!("{l} in {} spin {}", d.statistics.as_str(), d.spin.0))
        })
        .collect();
    rec.push(Check::new(
        "parity-purity",
        impure.is_empty(),
        if impure.is_empty() {
            "boson parts have even q4, fermion parts odd q4".into()
        } else {
            impure.join(", ")
        },
    ));
    rec
}

/// Sector counts and table totals against the reference counts and `2^24`.
pub fn verify_counts(table: &MultiplicityTable, report: &SectorReport) -> VerificationRecord {
    let mut rec = VerificationRecord::default();
    for c in &report.sectors {
        let expected = REFERENCE_SECTOR_COUNTS[c.spin as usize];
        let from_table_b = table.sector_count(c.spin, Statistics::Boson);
        let from_table_f = table.sector_count(c.spin, Statistics::Fermion);
        rec.push(Check::new(
            format!("sector-count-spin-{}", c.spin),
            c.boson == expected
                && c.fermion == expected
                && from_table_b == expected
                && from_table_f == expected,
            format!(
                "characters {} / {}, table {from_table_b} / {from_table_f}, expected {expected}",
                c.boson, c.fermion
            ),
        ));
    }
    rec.push(Check::new(
        "grand-total-sectors",
        report.grand_total == TOTAL_STATES,
        format!("{} (expected {TOTAL_STATES})", report.grand_total),
    ));
    let table_total = table.grand_total();
    rec.push(Check::new(
        "grand-total-table",
        table_total == TOTAL_STATES,
        format!("{table_total} (expected {TOTAL_STATES})"),
    ));
    rec
}

/// Checks the two regroupings of the total trace agree exactly.
pub fn verify_reconstruction(
    alts: &[LaurentPoly],
    sectors: &SectorCharacters,
) -> Result<VerificationRecord> {
    let mut rec = VerificationRecord::default();
    for tilde in [false, true] {
        let direct = total_character_direct(alts, tilde)?;
        let regrouped = sectors.reconstruct(tilde);
        let name = if tilde {
            "reconstruction-tilde"
        } else {
            "reconstruction"
        };
        let u_free = sectors.iter().all(|s| {
            s.chi
                .terms()
                .chain(s.chi_tilde.terms())
                .all(|(m, _)| m.exponents()[U_SLOT] == 0)
        });
        rec.push(Check::new(
            name,
            direct == regrouped && u_free,
            format!(
                "{} terms, sum_n chi^SU(2)_n chi_n vs chi_theta1 * chi_theta+-",
                direct.len()
            ),
        ));
    }
    Ok(rec)
}

/// `sum_n chi^SU(2)_n * chi_n` evaluated at the identity must be `2^24`.
pub fn total_dimension(sectors: &SectorCharacters) -> BigInt {
    sectors.reconstruct(false).evaluate_at_identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta1_characters() {
        let t = chi_theta1(false).unwrap();
        let tt = chi_theta1(true).unwrap();
        assert_eq!(t.evaluate_at_identity(), 256.into());
        assert_eq!(tt.evaluate_at_identity(), 0.into());
        let vs = character(DynkinLabel::new(1, 0, 0, 1)).unwrap();
        assert_eq!(&t - &tt, vs.scale(&BigInt::from(2)));
    }

    #[test]
    fn theta_pm_toy_shape() {
        // Alt_0..Alt_2 of a doublet with weights z1^1, z1^-1.
        let one = LaurentPoly::one();
        let doublet = &LaurentPoly::var(0, 1) + &LaurentPoly::var(0, -1);
        let alts = [one.clone(), doublet.clone(), one];
        let expected = &(&LaurentPoly::var(U_SLOT, 1) + &LaurentPoly::var(U_SLOT, -1)) + &doublet;
        assert_eq!(theta_pm_character(&alts, false), expected);
        assert_eq!(theta_pm_character(&alts, true), expected);
    }

    #[test]
    fn sector_counts_and_reconstruction() {
        let alts = alt_spinor_table();
        let sectors = SectorCharacters::from_alt_table(&alts).unwrap();
        let report = sector_report(&sectors);
        for c in &report.sectors {
            assert_eq!(c.boson, REFERENCE_SECTOR_COUNTS[c.spin as usize]);
            assert_eq!(c.fermion, c.boson);
        }
        assert_eq!(report.grand_total, TOTAL_STATES);
        assert_eq!(total_dimension(&sectors), BigInt::from(TOTAL_STATES));
        assert!(verify_reconstruction(&alts, &sectors).unwrap().all_passed());
    }

    #[test]
    fn top_sectors_decompose() {
        let sectors = sector_characters().unwrap();
        let top = decompose(&sectors.sector(8).chi).unwrap();
        let expected: IrrepSum = [
            (DynkinLabel::new(2, 0, 0, 0), 1),
            (DynkinLabel::new(0, 0, 1, 0), 1),
            (DynkinLabel::new(1, 0, 0, 1), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(top, expected);
        let b8 = decompose(&sectors.sector(8).boson).unwrap();
        assert_eq!(b8.total_dimension(), 128.into());
        assert!(b8.iter().all(|(l, _)| !l.is_spinor()));
    }

    #[test]
    fn assemble_rejects_mixed_statistics() {
        let irreps: IrrepSum = [(DynkinLabel::VECTOR, 1)].into_iter().collect();
        let decomps = [
            SectorDecomposition {
                spin: Spin(0),
                statistics: Statistics::Boson,
                irreps: irreps.clone(),
            },
            SectorDecomposition {
                spin: Spin(1),
                statistics: Statistics::Fermion,
                irreps,
            },
        ];
        assert!(MultiplicityTable::assemble(&decomps).is_err());
    }
}
