//! Command-line front end: argument parsing, command execution and the exit
//! code contract.
//!
//! | code | meaning |
//! |---|---|
//! | 0 | every check passed or was skipped |
//! | 1 | a mathematical check failed; the witness is printed |
//! | 2 | unreadable or malformed input |
//! | 3 | the field does not split the algebra |
//! | 4 | a size cap was exceeded |

pub mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;

use hopfcenter::format::{parse_hopf, parse_sub, write_hopf, FormatError};
use hopfcenter::hopf::{
    dual, group_algebra, kac_paljutkin, named_group, taft, tensor_product, verify_axioms, CayleyTable, HopfAlgebra,
    HopfError, NamedGroup,
};
use hopfcenter::repn::{irreps, Representation, RepnError};
use hopfcenter::substructures::HopfSub;
use hopfcenter::theorems::{
    check_corollary_central_character, check_fd, check_hbar_chain, check_hn_dimension, check_lemma_com,
    check_lemma_inner_faithful, check_main_theorem, check_schur_specialization, check_vn_irreducible_over_hn,
    verify_quasitriangular, Claim, SizeCaps, TheoremError, TheoremReport, Verdict,
};

use report::InvariantReport;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NON_SPLIT: i32 = 3;
pub const EXIT_SIZE_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hopfcenter", version, about = "Exact Hopf centers, Hopf kernels and divisibility checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check all Hopf algebra axioms.
    Verify { path: PathBuf },
    /// Build a Hopf algebra and write it as a Hopf file.
    Construct {
        #[command(subcommand)]
        kind: Construct,
        /// Output file; standard output when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Print the invariant report.
    Report {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check one claim on a Hopf file.
    Theorem {
        claim: Claim,
        path: PathBuf,
        /// Tensor power for `hn`, largest power for `inner-faithful`.
        #[arg(long)]
        n: Option<usize>,
        /// Hopf subalgebra files for `com` (give one or two).
        #[arg(long = "sub")]
        subs: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Largest dim H^n handled.
        #[arg(long, default_value_t = SizeCaps::default().full)]
        cap_full: usize,
        /// Largest dim H^n whose coideal certificate is checked.
        #[arg(long, default_value_t = SizeCaps::default().coideal)]
        cap_coideal: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// A group algebra, from a named group or a Cayley table file.
    Group {
        #[arg(long, conflicts_with = "cayley", required_unless_present = "cayley")]
        named: Option<String>,
        /// JSON file `{"table": [[...]], "identity": 0}`.
        #[arg(long)]
        cayley: Option<PathBuf>,
        /// Cyclotomic order of the base field.
        #[arg(long, default_value_t = 1)]
        order: u32,
        #[arg(long)]
        name: Option<String>,
    },
    /// The dual Hopf algebra.
    Dual { path: PathBuf },
    /// The tensor product of two Hopf algebras.
    Tensor { left: PathBuf, right: PathBuf },
    /// The Taft algebra of dimension n².
    Taft {
        #[arg(long)]
        n: usize,
    },
    /// The eight-dimensional Kac–Paljutkin algebra.
    KacPaljutkin,
}

/// What a command printed and how it exits.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, message: impl Into<String>) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

/// Failure of a command before any verdict is reached.
#[derive(Debug)]
struct Abort(i32, String);

impl From<FormatError> for Abort {
    fn from(e: FormatError) -> Self {
        Abort(EXIT_INPUT, format!("input error: {e}"))
    }
}

impl From<HopfError> for Abort {
    fn from(e: HopfError) -> Self {
        Abort(EXIT_INPUT, format!("input error: {e}"))
    }
}

impl From<TheoremError> for Abort {
    fn from(e: TheoremError) -> Self {
        match &e {
            TheoremError::SizeCap { .. } => Abort(EXIT_SIZE_CAP, e.to_string()),
            TheoremError::Repn(r) => Abort::from(r.clone()),
            _ => Abort(EXIT_FAIL, e.to_string()),
        }
    }
}

impl From<RepnError> for Abort {
    fn from(e: RepnError) -> Self {
        match &e {
            RepnError::NonSplitField { .. } => Abort(EXIT_NON_SPLIT, e.to_string()),
            _ => Abort(EXIT_FAIL, e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Abort> {
    fs::read_to_string(path).map_err(|e| Abort(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn load_unverified(path: &Path) -> Result<HopfAlgebra, Abort> {
    parse_hopf(&read(path)?).map_err(|e| Abort(EXIT_INPUT, format!("{}: {e}", path.display())))
}

/// Parses and verifies; every command except `verify` starts here.
fn load(path: &Path) -> Result<HopfAlgebra, Abort> {
    let h = load_unverified(path)?;
    let report = verify_axioms(&h);
    match report.first_failure() {
        None => Ok(h),
        Some(c) => Err(Abort(
            EXIT_FAIL,
            format!("{}: axiom `{}` fails at basis indices {:?}", path.display(), c.axiom, c.witness.clone().unwrap_or_default()),
        )),
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Verify { path } => cmd_verify(&path),
        Command::Construct { kind, output } => cmd_construct(kind, output.as_deref()),
        Command::Report { path, json } => cmd_report(&path, json),
        Command::Theorem {
            claim,
            path,
            n,
            subs,
            json,
            cap_full,
            cap_coideal,
        } => cmd_theorem(claim, &path, n, &subs, json, SizeCaps { full: cap_full, coideal: cap_coideal }),
    };
    result.unwrap_or_else(|Abort(code, message)| Outcome::error(code, message))
}

fn cmd_verify(path: &Path) -> Result<Outcome, Abort> {
    let h = load_unverified(path)?;
    let report = verify_axioms(&h);
    let mut out = format!("{} (dim {}, Q(zeta_{}))\n", h.name(), h.dim(), h.order());
    for c in &report.checks {
        match &c.witness {
            None => writeln!(out, "  pass  {}", c.axiom),
            Some(w) => writeln!(out, "  FAIL  {} at basis indices {w:?}", c.axiom),
        }
        .expect("writing to a String");
    }
    let code = if report.all_pass() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CayleyFile {
    table: Vec<Vec<usize>>,
    #[serde(default)]
    identity: usize,
}

fn cmd_construct(kind: Construct, output: Option<&Path>) -> Result<Outcome, Abort> {
    let h = match kind {
        Construct::Group { named, cayley, order, name } => {
            if order == 0 {
                return Err(Abort(EXIT_INPUT, "--order must be positive".into()));
            }
            match (named, cayley) {
                (Some(g), _) => {
                    let g: NamedGroup = g.parse()?;
                    let h = named_group(g, order);
                    match name {
                        Some(n) => h.with_name(n),
                        None => h,
                    }
                }
                (None, Some(path)) => {
                    let file: CayleyFile = serde_json::from_str(&read(&path)?)
                        .map_err(|e| Abort(EXIT_INPUT, format!("{}: {e}", path.display())))?;
                    let table = CayleyTable {
                        table: file.table,
                        identity: file.identity,
                    };
                    group_algebra(name.as_deref().unwrap_or("kG"), &table, order)?
                }
                (None, None) => return Err(Abort(EXIT_INPUT, "give --named or --cayley".into())),
            }
        }
        Construct::Dual { path } => dual(&load(&path)?),
        Construct::Tensor { left, right } => tensor_product(&load(&left)?, &load(&right)?)?,
        Construct::Taft { n } => {
            if n < 2 {
                return Err(Abort(EXIT_INPUT, "--n must be at least 2".into()));
            }
            taft(n)
        }
        Construct::KacPaljutkin => kac_paljutkin(),
    };
    let text = write_hopf(&h);
    match output {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Abort(EXIT_INPUT, format!("cannot write {}: {e}", p.display())))?;
            Ok(Outcome {
                code: EXIT_PASS,
                stdout: format!("wrote {} (dim {}) to {}\n", h.name(), h.dim(), p.display()),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code: EXIT_PASS,
            stdout: text,
            stderr: String::new(),
        }),
    }
}

fn cmd_report(path: &Path, json: bool) -> Result<Outcome, Abort> {
    let h = load(path)?;
    let report = InvariantReport::build(&h)?;
    let stdout = if json {
        serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
    } else {
        report.to_string()
    };
    let code = if report.all_pass() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

/// The group table of `h` when it is a group algebra on its grouplike basis.
fn cayley_of(h: &HopfAlgebra) -> Option<CayleyTable> {
    let n = h.dim();
    if h.grouplikes()?.len() != n {
        return None;
    }
    let basis_index = |v: &hopfcenter::linalg::SparseVec| match v.entries() {
        [(k, c)] if c.is_one() => Some(*k),
        _ => None,
    };
    let table = (0..n)
        .map(|i| (0..n).map(|j| basis_index(h.mult_basis(i, j))).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let identity = basis_index(&h.one())?;
    let t = CayleyTable { table, identity };
    t.validate().ok().map(|_| t)
}

/// Runs `check` on every irrep, naming each report after its irrep.
fn labelled(
    h: &HopfAlgebra,
    check: impl Fn(&Representation) -> Result<TheoremReport, TheoremError>,
) -> Result<Vec<TheoremReport>, Abort> {
    let mut out = Vec::new();
    for (i, v) in irreps(h)?.iter().enumerate() {
        let mut r = check(v)?;
        r.subject = Some(format!("V{i}, d={}", v.degree()));
        out.push(r);
    }
    Ok(out)
}

fn theorem_reports(claim: Claim, h: &HopfAlgebra, n: Option<usize>, subs: &[PathBuf], caps: SizeCaps) -> Result<Vec<TheoremReport>, Abort> {
    let skipped = |reason: &str| vec![TheoremReport::new(h.name(), claim).skipped(reason)];
    Ok(match claim {
        Claim::Fd => vec![check_fd(h)?],
        Claim::Main => check_main_theorem(h)?,
        Claim::Schur => match cayley_of(h) {
            Some(g) => vec![check_schur_specialization(h.name(), &g, h.order())?],
            None => skipped("not a group algebra on its grouplike basis"),
        },
        Claim::Com => {
            let parsed = subs
                .iter()
                .map(|p| parse_sub(&read(p)?, h).map_err(|e| Abort(EXIT_INPUT, format!("{}: {e}", p.display()))))
                .collect::<Result<Vec<HopfSub>, Abort>>()?;
            match parsed.as_slice() {
                [k] => vec![check_lemma_com(h, k, k)],
                [k, l] => vec![check_lemma_com(h, k, l)],
                _ => return Err(Abort(EXIT_INPUT, "com needs one or two --sub files".into())),
            }
        }
        Claim::InnerFaithful => labelled(h, |v| check_lemma_inner_faithful(h, v, n.unwrap_or(3)))?,
        Claim::Hn => {
            let n = n.unwrap_or(2);
            if n == 0 {
                return Err(Abort(EXIT_INPUT, "--n must be at least 1".into()));
            }
            let mut out = vec![check_hn_dimension(h, n, caps)?];
            for (i, v) in irreps(h)?.iter().enumerate() {
                let mut r = check_vn_irreducible_over_hn(h, v, n, caps)?;
                r.subject = Some(format!("V{i}^{n}, d={}", v.degree()));
                out.push(r);
            }
            out
        }
        Claim::Hbar => labelled(h, |v| check_hbar_chain(h, v))?,
        Claim::CentralChar => vec![check_corollary_central_character(h)?],
        Claim::Quasitriangular => match h.r_matrix() {
            Some(r) => vec![verify_quasitriangular(h, r)?],
            None => skipped("the file carries no r_matrix"),
        },
    })
}

fn cmd_theorem(claim: Claim, path: &Path, n: Option<usize>, subs: &[PathBuf], json: bool, caps: SizeCaps) -> Result<Outcome, Abort> {
    let h = load(path)?;
    let mut reports = theorem_reports(claim, &h, n, subs, caps)?;
    reports.sort_by(|a, b| (&a.instance, a.claim).cmp(&(&b.instance, b.claim)));
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    let stdout = if json {
        serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
    } else {
        let mut out = String::new();
        for r in &reports {
            writeln!(out, "{r}").expect("writing to a String");
        }
        out
    };
    Ok(Outcome {
        code: if failed { EXIT_FAIL } else { EXIT_PASS },
        stdout,
        stderr: String::new(),
    })
}
