//! The `weyl` command line: argument parsing, dispatch and rendering.
//!
//! Every verb builds a serializable payload and renders it either as text or
//! as pretty JSON. Numbers that may not fit a machine word (Kostka numbers,
//! field elements) are emitted as strings.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use weyl_core::basis_enum::{count_b, cv_basis, lex_basis, revlex_basis, truncated_basis, BasisKind, BasisSet};
use weyl_core::dpalgebra::{DPoly, DividedMonomial, MonomialOrder};
use weyl_core::error::Error;
use weyl_core::partitions::Partition;
use weyl_core::quotient::{QuotientOracle, SliceDim, VerificationReport};
use weyl_core::ring::CoeffRing;
use weyl_core::selftest;
use weyl_core::symfunc::{forgotten_coeff, kostka};
use weyl_core::weyl_ideal::{gm_set, jm_generators, srevlex_set, GeneratorSet, Provenance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "weyl", version, about = "Exact computations in local Weyl modules for sl2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Lex,
    Revlex,
    Cv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenFamily {
    Y,
    Gm,
    Srevlex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List a monomial basis.
    Basis {
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
        /// Keep only monomials free of x_N, ..., x_{m-1}.
        #[arg(long)]
        truncate: Option<u32>,
    },
    /// List generators of the defining ideal.
    Gens {
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = GenFamily::Y)]
        family: GenFamily,
        /// Characteristic: 0 for the rationals, or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Degree bound for the Y family (default m+1).
        #[arg(long)]
        max_degree: Option<u32>,
        /// Weight bound for the Y family (default: no restriction within the degree bound).
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Graded dimensions of the quotient.
    Dim {
        #[arg(short)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Degree bound (default m+2).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Check that a basis is independent and spanning in every slice.
    Verify {
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, required_unless_present = "candidates")]
        order: Option<Order>,
        /// A monomial set in the JSON format written by `basis --format json`.
        #[arg(long, conflicts_with_all = ["order", "truncate"])]
        candidates: Option<PathBuf>,
        #[arg(long)]
        truncate: Option<u32>,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Express a polynomial in a verified basis of the quotient.
    Reduce {
        #[arg(short)]
        m: u32,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Kostka number K_{lambda,mu}.
    Kostka { lambda: Partition, mu: Partition },
    /// Forgotten-basis coefficient D_{lambda,mu}.
    Dcoeff { lambda: Partition, mu: Partition },
    /// Counts B_{m,l} of x_0-free revlex basis monomials of degree l.
    Count {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        l: Option<u32>,
    },
    /// Truncated quotient by x_N, ..., x_{m-1}: dimensions and basis check.
    Truncate {
        #[arg(short)]
        m: u32,
        #[arg(short = 'N')]
        n: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Fast run of the acceptance checks for m <= 4.
    Selftest,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BasisOutput {
    pub m: u32,
    pub order: String,
    pub count: usize,
    pub monomials: Vec<DividedMonomial>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeneratorOutput {
    pub degree: u32,
    pub weight: u32,
    pub provenance: Provenance,
    pub poly: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GensOutput {
    pub m: u32,
    pub characteristic: u64,
    pub family: GenFamily,
    pub degree_bound: Option<u32>,
    pub weight_bound: Option<u32>,
    pub count: usize,
    pub generators: Vec<GeneratorOutput>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DimOutput {
    pub m: u32,
    pub characteristic: u64,
    pub degree_bound: u32,
    pub truncate: Option<u32>,
    pub total: usize,
    pub slices: Vec<SliceDim>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReduceOutput {
    pub m: u32,
    pub characteristic: u64,
    pub basis: String,
    pub input: String,
    /// `(monomial, coefficient)` pairs, coefficients as exact strings.
    pub coordinates: Vec<(DividedMonomial, String)>,
    pub residue: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScalarOutput {
    pub lambda: String,
    pub mu: String,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountOutput {
    pub m: u32,
    /// `(l, B_{m,l})`.
    pub counts: Vec<(u32, u64)>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TruncateOutput {
    pub dims: DimOutput,
    pub basis_size: usize,
    pub report: VerificationReport,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SelftestOutput {
    pub passed: bool,
    pub checks: Vec<selftest::Check>,
}

/// A rendered result and the exit status it implies.
struct Rendered {
    text: String,
    json: serde_json::Value,
    status: i32,
}

fn rendered<T: Serialize>(payload: &T, text: String, status: i32) -> Result<Rendered, Error> {
    let json = serde_json::to_value(payload).map_err(|e| Error::Configuration(e.to_string()))?;
    Ok(Rendered { text, json, status })
}

fn ring_of(characteristic: u64) -> Result<CoeffRing, Error> {
    CoeffRing::from_characteristic(characteristic)
}

fn basis_for(m: u32, order: Order, truncate: Option<u32>) -> Result<BasisSet, Error> {
    if let Some(n) = truncate {
        if order != Order::Revlex {
            return Err(Error::InvalidInput("--truncate applies to the revlex basis only".into()));
        }
        return truncated_basis(m, n);
    }
    Ok(match order {
        Order::Lex => lex_basis(m),
        Order::Revlex => revlex_basis(m),
        Order::Cv => cv_basis(m),
    })
}

/// Reads a candidate set; a `truncated-N` label selects the truncated quotient.
fn read_candidates(m: u32, path: &std::path::Path) -> Result<(BasisSet, Option<u32>), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let parsed: BasisOutput = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    if parsed.m != m {
        return Err(Error::InvalidInput(format!("candidate file is for m = {}, not {m}", parsed.m)));
    }
    let kind: BasisKind = parsed.order.parse()?;
    let truncate = match kind {
        BasisKind::Truncated(n) => Some(n),
        _ => None,
    };
    Ok((BasisSet::new(m, kind, parsed.monomials), truncate))
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "m = {}, characteristic {}, basis {}, degrees <= {}",
        r.m, r.characteristic, r.basis, r.degree_bound
    );
    for sl in &r.slices {
        let mark = if sl.independent && sl.spanning { "ok" } else { "FAIL" };
        let _ = writeln!(
            s,
            "  ({}, {}) size {} quotient {} candidates {} {}",
            sl.degree, sl.weight, sl.slice_dim, sl.quotient_dim, sl.candidate_count, mark
        );
    }
    let _ = writeln!(
        s,
        "{}: {} candidates, quotient dimension {}, {} failing slices",
        if r.passed { "PASS" } else { "FAIL" },
        r.total_candidates,
        r.total_quotient_dim,
        r.failed_slices
    );
    s
}

fn dims_text(d: &DimOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "m = {}, characteristic {}, degrees <= {}", d.m, d.characteristic, d.degree_bound);
    for sl in d.slices.iter().filter(|sl| sl.size > 0) {
        let _ = writeln!(s, "  ({}, {}) size {} quotient {}", sl.degree, sl.weight, sl.size, sl.quotient_dim);
    }
    let _ = writeln!(s, "total {}", d.total);
    s
}

fn dims(m: u32, ring: CoeffRing, bound: u32, truncate: Option<u32>) -> Result<(DimOutput, QuotientOracle), Error> {
    let oracle = QuotientOracle::new(m, ring, bound, truncate)?;
    let out = DimOutput {
        m,
        characteristic: ring.characteristic(),
        degree_bound: bound,
        truncate,
        total: oracle.total_dim(),
        slices: oracle.dims(),
    };
    Ok((out, oracle))
}

fn gens_payload(set: &GeneratorSet) -> GensOutput {
    let mut generators: Vec<GeneratorOutput> = set
        .entries
        .iter()
        .map(|g| GeneratorOutput {
            degree: g.degree,
            weight: g.weight,
            provenance: g.provenance.clone(),
            poly: g.poly.to_string(),
        })
        .collect();
    generators.sort_by(|a, b| (a.degree, a.weight, &a.poly).cmp(&(b.degree, b.weight, &b.poly)));
    GensOutput {
        m: set.m,
        characteristic: set.ring.characteristic(),
        family: match set.family {
            weyl_core::weyl_ideal::Family::Y => GenFamily::Y,
            weyl_core::weyl_ideal::Family::Gm => GenFamily::Gm,
            weyl_core::weyl_ideal::Family::Srevlex => GenFamily::Srevlex,
        },
        degree_bound: set.degree_bound,
        weight_bound: set.weight_bound,
        count: generators.len(),
        generators,
    }
}

fn dispatch(command: Command) -> Result<Rendered, Error> {
    match command {
        Command::Basis { m, order, truncate } => {
            let basis = basis_for(m, order, truncate)?;
            let monomials = basis.canonical();
            let text = monomials.iter().map(|a| format!("{a}\n")).collect();
            let out = BasisOutput { m, order: basis.kind.to_string(), count: monomials.len(), monomials };
            rendered(&out, text, EXIT_OK)
        }
        Command::Gens { m, family, characteristic, max_degree, max_weight } => {
            let ring = ring_of(characteristic)?;
            let set = match family {
                GenFamily::Y => {
                    let d = max_degree.unwrap_or(m + 1);
                    jm_generators(m, ring, d, max_weight.unwrap_or(d * m.saturating_sub(1)))?
                }
                GenFamily::Gm => gm_set(m, ring)?,
                GenFamily::Srevlex => srevlex_set(m, ring)?,
            };
            let out = gens_payload(&set);
            let text = out
                .generators
                .iter()
                .map(|g| format!("({}, {}) {}\n", g.degree, g.weight, g.poly))
                .collect();
            rendered(&out, text, EXIT_OK)
        }
        Command::Dim { m, characteristic, max_degree } => {
            let (out, _) = dims(m, ring_of(characteristic)?, max_degree.unwrap_or(m + 2), None)?;
            rendered(&out, dims_text(&out), EXIT_OK)
        }
        Command::Verify { m, order, candidates, truncate, characteristic, max_degree } => {
            let (basis, truncate) = match (order, candidates) {
                (Some(order), _) => (basis_for(m, order, truncate)?, truncate),
                (None, Some(path)) => read_candidates(m, &path)?,
                (None, None) => return Err(Error::InvalidInput("need --order or --candidates".into())),
            };
            let mut oracle = QuotientOracle::new(m, ring_of(characteristic)?, max_degree.unwrap_or(m + 2), truncate)?;
            let report = oracle.verify(&basis)?;
            let status = if report.passed { EXIT_OK } else { EXIT_FAILED };
            rendered(&report, report_text(&report), status)
        }
        Command::Reduce { m, poly, order, characteristic, max_degree } => {
            let ring = ring_of(characteristic)?;
            let f = DPoly::parse(&poly, ring, m as usize)?;
            let bound = max_degree.unwrap_or_else(|| (m + 2).max(f.terms().map(|(a, _)| a.degree()).max().unwrap_or(0)));
            let basis = basis_for(m, order, None)?;
            let mut oracle = QuotientOracle::new(m, ring, bound, None)?;
            let report = oracle.verify(&basis)?;
            if !report.passed {
                return rendered(&report, report_text(&report), EXIT_FAILED);
            }
            let coords = oracle.reduce_element(&f, &basis)?;
            let mut residue = DPoly::zero(ring, m as usize);
            for (a, c) in &coords {
                residue.add_term(a.clone(), c.clone());
            }
            let residue = residue.to_string_ordered(MonomialOrder::DpLex);
            let out = ReduceOutput {
                m,
                characteristic: ring.characteristic(),
                basis: basis.kind.to_string(),
                input: f.to_string(),
                coordinates: coords.iter().rev().map(|(a, c)| (a.clone(), c.to_string())).collect(),
                residue: residue.clone(),
            };
            rendered(&out, format!("{residue}\n"), EXIT_OK)
        }
        Command::Kostka { lambda, mu } => {
            let v = kostka(&lambda, &mu).to_string();
            let out = ScalarOutput { lambda: lambda.to_string(), mu: mu.to_string(), value: v.clone() };
            rendered(&out, format!("{v}\n"), EXIT_OK)
        }
        Command::Dcoeff { lambda, mu } => {
            let v = forgotten_coeff(&lambda, &mu).to_string();
            let out = ScalarOutput { lambda: lambda.to_string(), mu: mu.to_string(), value: v.clone() };
            rendered(&out, format!("{v}\n"), EXIT_OK)
        }
        Command::Count { m, l } => {
            let ls: Vec<u32> = match l {
                Some(l) => vec![l],
                None => (0..=m / 2).collect(),
            };
            let counts = ls.into_iter().map(|l| Ok((l, count_b(m, l)?))).collect::<Result<Vec<_>, Error>>()?;
            let text = counts.iter().map(|(l, b)| format!("B({m},{l}) = {b}\n")).collect();
            rendered(&CountOutput { m, counts }, text, EXIT_OK)
        }
        Command::Truncate { m, n, characteristic, max_degree } => {
            let ring = ring_of(characteristic)?;
            let basis = truncated_basis(m, n)?;
            let (d, mut oracle) = dims(m, ring, max_degree.unwrap_or(m + 2), Some(n))?;
            let report = oracle.verify(&basis)?;
            let ok = report.passed && d.total == basis.len();
            let text = format!("{}basis size {}\n{}", dims_text(&d), basis.len(), report_text(&report));
            let out = TruncateOutput { dims: d, basis_size: basis.len(), report };
            rendered(&out, text, if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Selftest => {
            let checks = selftest::run()?;
            let passed = checks.iter().all(|c| c.passed);
            let text = checks
                .iter()
                .map(|c| format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name))
                .collect();
            rendered(&SelftestOutput { passed, checks }, text, if passed { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// result to `out` (or the `--output` file) and diagnostics to `err`.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let r = match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let body = match cli.format {
        Format::Text => r.text,
        Format::Json => serde_json::to_string_pretty(&r.json).expect("JSON values serialize") + "\n",
    };
    match cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, body) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.write_all(body.as_bytes());
        }
    }
    r.status
}
