//! The end-to-end computation and every consistency check run against it.

use num_bigint::BigInt;

use crate::error::Result;
use crate::frobenius::{alt_character, alt_spinor_table, SPINOR_DIM};
use crate::golden::GoldenTable;
use crate::laurent::LaurentPoly;
use crate::oracle::{charged_fock_basis, direct_alt_character, theta1_fock_basis, WeightedRep};
use crate::pipeline::{
    chi_theta1, decompose_sectors, sector_report, theta_pm_character, verify_claims, verify_counts,
    verify_reconstruction, Check, MultiplicityTable, SectorCharacters, SectorDecomposition,
    SectorReport, VerificationRecord,
};
use crate::weyl_b4::{character, inner_product, DynkinLabel};

/// Dimensions of the named representations (singlet, vector, 2- and 3-forms,
/// spinor, 4-form, vector-spinor).
pub const REFERENCE_DIMENSIONS: [(DynkinLabel, u64); 7] = [
    (DynkinLabel::new(0, 0, 0, 0), 1),
    (DynkinLabel::new(1, 0, 0, 0), 9),
    (DynkinLabel::new(0, 1, 0, 0), 36),
    (DynkinLabel::new(0, 0, 1, 0), 84),
    (DynkinLabel::new(0, 0, 0, 1), 16),
    (DynkinLabel::new(0, 0, 0, 2), 126),
    (DynkinLabel::new(1, 0, 0, 1), 128),
];

/// `(2n + 7)(n + 6)! / (7! n!)`, the dimension of `[n, 0, 0, 0]`.
pub fn symmetric_traceless_dimension(n: u64) -> u64 {
    let rising: u64 = (n + 1..=n + 6).product();
    (2 * n + 7) * rising / 5040
}

/// Everything the table and the checks are derived from.
pub struct Computation {
    pub alts: Vec<LaurentPoly>,
    pub sectors: SectorCharacters,
    pub decompositions: Vec<SectorDecomposition>,
    pub table: MultiplicityTable,
    pub report: SectorReport,
}

impl Computation {
    pub fn run() -> Result<Self> {
        let alts = alt_spinor_table();
        let sectors = SectorCharacters::from_alt_table(&alts)?;
        let decompositions = decompose_sectors(&sectors)?;
        let table = MultiplicityTable::assemble(&decompositions)?;
        let report = sector_report(&sectors);
        Ok(Computation {
            alts,
            sectors,
            decompositions,
            table,
            report,
        })
    }
}

pub fn check_golden(table: &MultiplicityTable) -> Check {
    match GoldenTable::load() {
        Err(e) => Check::new("golden-table", false, e.to_string()),
        Ok(golden) => {
            let diffs = golden.compare(table);
            let detail = if diffs.is_empty() {
                format!("{} rows x 9 spins identical", golden.rows.len())
            } else {
                diffs.join("; ")
            };
            Check::new("golden-table", diffs.is_empty(), detail)
        }
    }
}

pub fn check_dimensions(table: &MultiplicityTable) -> Result<VerificationRecord> {
    let mut rec = VerificationRecord::default();
    let named_ok = REFERENCE_DIMENSIONS
        .iter()
        .all(|(l, d)| l.dimension() == *d)
        && (0..=12).all(|n| {
            DynkinLabel::new(n as u32, 0, 0, 0).dimension() == symmetric_traceless_dimension(n)
        });
    rec.push(Check::new(
        "dimension-named-reps",
        named_ok,
        "singlet, vector, forms, spinor, vector-spinor, [n,0,0,0] for n <= 12",
    ));
    let mut bad = Vec::new();
    for (label, row) in table.ordered_rows() {
        let from_character = character(label)?.evaluate_at_identity();
        if from_character != BigInt::from(row.dimension) {
            bad.push(format!("{label}: {from_character} vs {}", row.dimension));
        }
    }
    rec.push(Check::new(
        "dimension-vs-character",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} labels", table.len())
        } else {
            bad.join(", ")
        },
    ));
    Ok(rec)
}

/// `Alt_(16-n)(spinor) = Alt_n(spinor)`, both sides from the Frobenius formula.
pub fn check_reflection(alts: &[LaurentPoly]) -> Result<Check> {
    let spinor = character(DynkinLabel::SPINOR)?;
    let mut bad = Vec::new();
    for (n, alt) in alts.iter().enumerate().take(SPINOR_DIM / 2 + 1) {
        let mirror = alt_character(&spinor, (SPINOR_DIM - n) as u32, false)?;
        if mirror != *alt {
            bad.push(n.to_string());
        }
    }
    Ok(Check::new(
        "alt-reflection",
        bad.is_empty(),
        if bad.is_empty() {
            "n = 0..8".to_string()
        } else {
            format!("fails at n = {}", bad.join(", "))
        },
    ))
}

/// Brute-force enumeration against the closed forms.
pub fn check_oracles(alts: &[LaurentPoly]) -> Result<VerificationRecord> {
    let mut rec = VerificationRecord::default();
    let spinor = WeightedRep::so9_spinor();

    let mut bad = Vec::new();
    for (n, alt) in alts.iter().enumerate().take(5) {
        if direct_alt_character(&spinor, n)? != *alt {
            bad.push(n);
        }
    }
    rec.push(Check::new(
        "oracle-spinor-alt",
        bad.is_empty(),
        format!("subset enumeration vs Frobenius for n <= 4, failures {bad:?}"),
    ));

    let fock = charged_fock_basis(8, &spinor)?;
    let plain = fock.character(false) == theta_pm_character(alts, false);
    let twisted = fock.character(true) == theta_pm_character(alts, true);
    rec.push(Check::new(
        "oracle-theta-pm",
        plain && twisted,
        format!("65536-state enumeration: plain {plain}, (-1)^F {twisted}"),
    ));

    let block = theta1_fock_basis()?;
    let plain = block.character(false) == chi_theta1(false)?;
    let twisted = block.character(true) == chi_theta1(true)?;
    rec.push(Check::new(
        "oracle-theta1",
        plain && twisted,
        format!("256-state enumeration: plain {plain}, (-1)^F {twisted}"),
    ));
    Ok(rec)
}

/// Peeled multiplicities against the orthogonality pairing for the given
/// spin sectors.
pub fn check_pairing(computation: &Computation, spins: &[u32]) -> Result<Check> {
    let mut compared = 0;
    let mut bad = Vec::new();
    for d in computation
        .decompositions
        .iter()
        .filter(|d| spins.contains(&d.spin.0))
    {
        let p = computation.sectors.sector(d.spin.0).part(d.statistics);
        for (label, &m) in d.irreps.iter() {
            let paired = inner_product(p, &*character(*label)?)?;
            compared += 1;
            if paired != BigInt::from(m) {
                bad.push(format!(
                    "{label} spin {}: peel {m}, pairing {paired}",
                    d.spin.0
                ));
            }
        }
    }
    Ok(Check::new(
        "peeling-vs-pairing",
        bad.is_empty() && compared > 0,
        if bad.is_empty() {
            format!("{compared} multiplicities in spins {spins:?}")
        } else {
            bad.join(", ")
        },
    ))
}

/// Runs the computation and every check.
pub fn run_all() -> Result<(Computation, VerificationRecord)> {
    let c = Computation::run()?;
    let mut rec = VerificationRecord::default();
    rec.extend(verify_claims(&c.table, &c.decompositions, &c.report));
    rec.extend(verify_counts(&c.table, &c.report));
    rec.push(check_golden(&c.table));
    rec.extend(check_dimensions(&c.table)?);
    rec.extend(verify_reconstruction(&c.alts, &c.sectors)?);
    rec.push(check_reflection(&c.alts)?);
    rec.extend(check_oracles(&c.alts)?);
    rec.push(check_pairing(&c, &[7, 8])?);
    Ok((c, rec))
}
