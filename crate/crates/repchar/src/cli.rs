//! Command-line front end: argument parsing and the json/csv/md renderers.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on
//! usage errors (clap's default).

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::Result;
use crate::frobenius::{alt_spinor_table, SPINOR_DIM};
use crate::laurent::{LaurentPoly, NVARS};
use crate::pipeline::{MultiplicityTable, SectorReport, VerificationRecord, SPIN_COUNT};
use crate::verify::{run_all, Computation};
use crate::weyl_b4::{character, DynkinLabel};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

#[derive(Parser, Debug)]
#[command(
    name = "repchar",
    version,
    about = "SO(9) x SU(2) content of the SU(2) matrix-model fermion Fock space"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads for the decomposition stage (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallel: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension of the SO(9) irrep [q1,q2,q3,q4].
    Dim { q1: u32, q2: u32, q3: u32, q4: u32 },
    /// Character of the SO(9) irrep [q1,q2,q3,q4].
    Char { q1: u32, q2: u32, q3: u32, q4: u32 },
    /// Character of the n-th antisymmetric power of the spinor.
    Alt {
        #[arg(value_parser = clap::value_parser!(u32).range(0..=16))]
        n: u32,
    },
    /// The SO(9) x SU(2) multiplicity table.
    Table {
        /// Only the nonzero entries of one spin column.
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=8))]
        spin: Option<u32>,
    },
    /// Boson and fermion state counts per spin sector.
    Sectors,
    /// Run every consistency check; exit status 1 if any fails.
    Verify,
}

/// Rendered output and the exit status to report.
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            exit_code: 0,
        }
    }
}

/// Runs a parsed command, honouring `--parallel`.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match cli.parallel {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(usize::from(n))
                .build()
                .expect("thread pool");
            pool.install(|| dispatch(cli))
        }
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let f = cli.format;
    match cli.command {
        Command::Dim { q1, q2, q3, q4 } => Ok(Outcome::ok(format!(
            "{}\n",
            DynkinLabel::new(q1, q2, q3, q4).dimension()
        ))),
        Command::Char { q1, q2, q3, q4 } => {
            let label = DynkinLabel::new(q1, q2, q3, q4);
            let p = character(label)?;
            let header = json!({ "dynkin": label.0, "dimension": label.dimension() });
            Ok(Outcome::ok(render_poly(
                &format!("chi{label}"),
                header,
                &p,
                f,
            )))
        }
        Command::Alt { n } => {
            let alts = alt_spinor_table();
            debug_assert_eq!(alts.len(), SPINOR_DIM + 1);
            let p = &alts[n as usize];
            let header = json!({ "n": n, "dimension": p.evaluate_at_identity().to_u64() });
            Ok(Outcome::ok(render_poly(
                &format!("chi(Alt_{n}(spinor))"),
                header,
                p,
                f,
            )))
        }
        Command::Table { spin } => {
            let c = Computation::run()?;
            Ok(Outcome::ok(render_table(&c.table, spin, f)))
        }
        Command::Sectors => {
            let c = Computation::run()?;
            Ok(Outcome::ok(render_sectors(&c.report, f)))
        }
        Command::Verify => {
            let (_, rec) = run_all()?;
            let code = if rec.all_passed() { 0 } else { 1 };
            Ok(Outcome {
                output: render_verification(&rec, f),
                exit_code: code,
            })
        }
    }
}

fn pretty(v: &Value) -> String {
    // serde_json maps are BTreeMap-backed here, so keys come out sorted.
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn render_poly(title: &str, header: Value, p: &LaurentPoly, f: Format) -> String {
    match f {
        Format::Json => {
            let mut v = header;
            v["polynomial"] = Value::String(p.to_string());
            v["terms"] = json!(p.len());
            pretty(&v)
        }
        Format::Csv => {
            let mut s = String::from("coefficient,z1,z2,z3,z4,u\n");
            for (m, c) in p.terms().rev() {
                let e = m.exponents();
                let cols: Vec<String> = (0..NVARS).map(|i| e[i].to_string()).collect();
                let _ = writeln!(s, "{c},{}", cols.join(","));
            }
            s
        }
        Format::Md => {
            let mut s = format!("### {title}\n\n");
            if let Some(obj) = header.as_object() {
                for (k, v) in obj {
                    let _ = writeln!(s, "- {k}: {v}");
                }
            }
            let _ = write!(s, "- terms: {}\n\n```text\n{p}\n```\n", p.len());
            s
        }
    }
}

pub fn table_json(table: &MultiplicityTable, spin: Option<u32>) -> Value {
    let rows = table.ordered_rows();
    match spin {
        None => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(l, r)| {
                    json!({
                        "dynkin": l.0,
                        "dimension": r.dimension,
                        "statistics": r.statistics.as_str(),
                        "multiplicities": r.multiplicities,
                    })
                })
                .collect();
            json!({
                "rows": rows,
                "checks": { "grand_total": table.grand_total(), "rows": table.len() },
            })
        }
        Some(n) => {
            let rows: Vec<Value> = rows
                .iter()
                .filter(|(_, r)| r.multiplicities[n as usize] > 0)
                .map(|(l, r)| {
                    json!({
                        "dynkin": l.0,
                        "dimension": r.dimension,
                        "statistics": r.statistics.as_str(),
                        "multiplicity": r.multiplicities[n as usize],
                    })
                })
                .collect();
            json!({ "spin": n, "rows": rows })
        }
    }
}

pub fn render_table(table: &MultiplicityTable, spin: Option<u32>, f: Format) -> String {
    let rows = table.ordered_rows();
    let spins: Vec<usize> = match spin {
        Some(n) => vec![n as usize],
        None => (0..SPIN_COUNT).collect(),
    };
    let keep = |m: &[u64; SPIN_COUNT]| spin.is_none_or(|n| m[n as usize] > 0);
    match f {
        Format::Json => pretty(&table_json(table, spin)),
        Format::Csv => {
            let mut s = String::from("q1,q2,q3,q4,dimension,statistics");
            for n in &spins {
                let _ = write!(s, ",spin{n}");
            }
            s.push('\n');
            for (l, r) in rows.iter().filter(|(_, r)| keep(&r.multiplicities)) {
                let [a, b, c, d] = l.0;
                let _ = write!(
                    s,
                    "{a},{b},{c},{d},{},{}",
                    r.dimension,
                    r.statistics.as_str()
                );
                for &n in &spins {
                    let _ = write!(s, ",{}", r.multiplicities[n]);
                }
                s.push('\n');
            }
            s
        }
        Format::Md => {
            let mut s = String::from("| representation | dimension | statistics |");
            let mut rule = String::from("|---|---:|---|");
            for n in &spins {
                let _ = write!(s, " {n} |");
                rule.push_str("---:|");
            }
            let _ = write!(s, "\n{rule}\n");
            for (l, r) in rows.iter().filter(|(_, r)| keep(&r.multiplicities)) {
                let _ = write!(s, "| {l} | {} | {} |", r.dimension, r.statistics.as_str());
                for &n in &spins {
                    let m = r.multiplicities[n];
                    if m == 0 {
                        s.push_str("  |");
                    } else {
                        let _ = write!(s, " {m} |");
                    }
                }
                s.push('\n');
            }
            if spin.is_none() {
                let _ = write!(
                    s,
                    "\n{} rows, weighted total {}\n",
                    table.len(),
                    table.grand_total()
                );
            }
            s
        }
    }
}

pub fn render_sectors(report: &SectorReport, f: Format) -> String {
    match f {
        Format::Json => pretty(&serde_json::to_value(report).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("spin,boson,fermion\n");
            for c in &report.sectors {
                let _ = writeln!(s, "{},{},{}", c.spin, c.boson, c.fermion);
            }
            s
        }
        Format::Md => {
            let mut s = String::from("| spin | boson | fermion |\n|---:|---:|---:|\n");
            for c in &report.sectors {
                let _ = writeln!(s, "| {} | {} | {} |", c.spin, c.boson, c.fermion);
            }
            let _ = writeln!(s, "\ngrand total: {}", report.grand_total);
            s
        }
    }
}

pub fn render_verification(rec: &VerificationRecord, f: Format) -> String {
    match f {
        Format::Json => {
            let v = json!({ "all_passed": rec.all_passed(), "checks": serde_json::to_value(&rec.checks).expect("serializable") });
            pretty(&v)
        }
        Format::Csv => {
            let mut s = String::from("name,passed,detail\n");
            for c in &rec.checks {
                let _ = writeln!(
                    s,
                    "{},{},\"{}\"",
                    c.name,
                    c.passed,
                    c.detail.replace('"', "\"\"")
                );
            }
            s
        }
        Format::Md => {
            let mut s = String::new();
            for c in &rec.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "- **{mark}** `{}`: {}", c.name, c.detail);
            }
            let _ = writeln!(
                s,
                "\n{}",
                if rec.all_passed() {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
            s
        }
    }
}
