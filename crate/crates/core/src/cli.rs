//! Command-line front end.
//!
//! Exit status: 0 when every asserted check passes, 1 when one fails, 2 for
//! usage errors, refused parameters and resource limits.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::general_linear::{build_gl_module, verify_gl, GlInstance, GlReport};
use crate::lab::{Bookkeeping, LabError};
use crate::periplectic::{build_pe_module, verify_pe, PeInstance, PeReport};
use crate::report::{write_atomic, Envelope, Timing};
use crate::suite::{Suite, SuiteResult};
use crate::symfunc::{jpw_character, lascoux_character, PairSchurSum, SchurSum};

pub const DEFAULT_CAP: usize = 25_000;

#[derive(Debug, Parser)]
#[command(name = "strand", version, about = "Exact checks of two-sided complexes realizing linear strands")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest tensor ambient (number of words) a build may touch.
    #[arg(long, global = true, env = "STRAND_AMBIENT_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character of the symmetric strand, degree by degree.
    CharJpw {
        #[command(flatten)]
        p: PeArgs,
        #[command(flatten)]
        d: DegreeArgs,
    },
    /// Character of the generic-matrix strand, degree by degree.
    CharLascoux {
        #[command(flatten)]
        p: GlArgs,
        #[command(flatten)]
        d: DegreeArgs,
    },
    /// Build the periplectic subquotient and print its graded character.
    BuildPe(PeArgs),
    /// Build the general linear subquotient and print its graded character.
    BuildGl(GlArgs),
    /// Build and run every periplectic check.
    VerifyPe(PeArgs),
    /// Build and run every general linear check.
    VerifyGl(GlArgs),
    /// Run the full acceptance instance list.
    Suite,
}

#[derive(Debug, Args)]
pub struct PeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Debug, Args)]
pub struct GlArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    /// Defaults to the last degree that can be nonzero.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

/// What a command produced: JSON payload, table text, and whether every
/// asserted check passed.
struct Output {
    command: String,
    passed: bool,
    json: serde_json::Value,
    table: String,
    timing: Timing,
}

#[derive(Serialize)]
struct CharRow<T: Serialize> {
    h: usize,
    dim: i128,
    character: T,
}

fn schur_rows(rows: &[CharRow<SchurSum>]) -> String {
    let mut t = String::from("h    dim  character\n");
    for r in rows {
        let _ = writeln!(t, "{:<4} {:<4} {}", r.h, r.dim, r.character);
    }
    t
}

fn pair_rows(rows: &[CharRow<PairSchurSum>]) -> String {
    let mut t = String::from("h    dim  character (E*;F)\n");
    for r in rows {
        let _ = writeln!(t, "{:<4} {:<4} {}", r.h, r.dim, r.character);
    }
    t
}

fn bookkeeping_table(b: &Bookkeeping) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "S_lambda dims: {:?}", b.schur_dims);
    let _ = writeln!(t, "kernel dims:   {:?}", b.kernel_dims);
    let _ = writeln!(t, "trace dims:    {:?}", b.trace_dims);
    let _ = writeln!(t, "quotient dims: {:?}", b.quotient_dims);
    t
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn pe_table(r: &PeReport) -> String {
    let mut t = format!("instance n={} r={} s={} lambda={}\n", r.instance.n, r.instance.r, r.instance.s, r.instance.lambda);
    t.push_str("h    dim  jpw  contains equal character\n");
    for d in &r.degrees {
        let _ = writeln!(t, "{:<4} {:<4} {:<4} {:<8} {:<5} {}", d.h, d.dim, d.jpw_dim, d.contains, d.equal, d.character);
    }
    let _ = writeln!(t, "axioms: {}", verdict(r.axioms.passed()));
    let _ = writeln!(t, "multiplicity one: {}", verdict(r.lemmas.multiplicity_one));
    let _ = writeln!(t, "surjectivity: {}", verdict(r.lemmas.surj));
    let _ = writeln!(t, "irreducible: {:?}", r.irreducible);
    let _ = writeln!(t, "equality probe: {}", r.conjecture.verdict);
    let _ = writeln!(t, "overall: {}", verdict(r.passed()));
    t
}

fn gl_table(r: &GlReport) -> String {
    let i = &r.instance;
    let mut t = format!("instance n={} m={} r={} s={} lambda={} mu={}\n", i.n, i.m, i.r, i.s, i.lambda, i.mu);
    t.push_str("h    dim  strand contains equal character (E*;F)\n");
    for d in &r.degrees {
        let _ = writeln!(t, "{:<4} {:<4} {:<6} {:<8} {:<5} {}", d.h, d.dim, d.lascoux_dim, d.contains, d.equal, d.character);
    }
    let _ = writeln!(t, "axioms: {}", verdict(r.axioms.passed()));
    let _ = writeln!(t, "trace then evaluation: {}", verdict(!r.glcomplex.condition || r.glcomplex.zero));
    let _ = writeln!(t, "irreducible: {:?}", r.irreducible);
    let _ = writeln!(t, "equality probe: {}", r.conjecture.verdict);
    let _ = writeln!(t, "overall: {}", verdict(r.passed()));
    t
}

fn suite_table(s: &SuiteResult) -> String {
    let mut t = String::new();
    for c in &s.criteria {
        let _ = writeln!(t, "{} criterion {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.name);
    }
    let _ = writeln!(t, "overall: {}", verdict(s.passed));
    t
}

fn to_json<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn degree_range(d: &DegreeArgs, top: usize) -> std::ops::RangeInclusive<usize> {
    d.min_degree..=d.max_degree.unwrap_or(top)
}

fn execute(command: &Command, cap: usize) -> Result<Output, LabError> {
    let start = Instant::now();
    let timing = |start: Instant| Timing { total_seconds: start.elapsed().as_secs_f64(), ..Default::default() };
    Ok(match command {
        Command::CharJpw { p, d } => {
            let inst = PeInstance::new(p.n, p.r, p.s)?;
            let rows = degree_range(d, inst.top_degree())
                .map(|h| {
                    let c = jpw_character(p.r, p.s, h, p.n)?;
                    Ok(CharRow { h, dim: c.dim(p.n), character: c })
                })
                .collect::<Result<Vec<_>, LabError>>()?;
            Output {
                command: "char-jpw".into(),
                passed: true,
                table: schur_rows(&rows),
                json: serde_json::json!({ "parameters": { "n": p.n, "r": p.r, "s": p.s }, "degrees": to_json(&rows) }),
                timing: timing(start),
            }
        }
        Command::CharLascoux { p, d } => {
            let inst = GlInstance::new(p.n, p.m, p.r, p.s)?;
            let rows = degree_range(d, inst.top_degree())
                .map(|h| {
                    let c = lascoux_character(p.r, p.s, h, p.n, p.m)?;
                    Ok(CharRow { h, dim: c.dim(p.n, p.m), character: c })
                })
                .collect::<Result<Vec<_>, LabError>>()?;
            Output {
                command: "char-lascoux".into(),
                passed: true,
                table: pair_rows(&rows),
                json: serde_json::json!({ "parameters": { "n": p.n, "m": p.m, "r": p.r, "s": p.s }, "degrees": to_json(&rows) }),
                timing: timing(start),
            }
        }
        Command::BuildPe(p) => {
            let inst = PeInstance::new(p.n, p.r, p.s)?;
            let b = build_pe_module(&inst, cap)?;
            let dims = b.complex.graded_dims();
            let rows = (0..=inst.top_degree())
                .map(|h| {
                    Ok(CharRow {
                        h,
                        dim: dims.get(&h).copied().unwrap_or(0) as i128,
                        character: b.complex.schur_character(h)?,
                    })
                })
                .collect::<Result<Vec<_>, LabError>>()?;
            Output {
                command: "build-pe".into(),
                passed: true,
                table: schur_rows(&rows) + &bookkeeping_table(&b.bookkeeping),
                json: serde_json::json!({ "instance": to_json(&inst), "degrees": to_json(&rows), "bookkeeping": to_json(&b.bookkeeping) }),
                timing: timing(start),
            }
        }
        Command::BuildGl(p) => {
            let inst = GlInstance::new(p.n, p.m, p.r, p.s)?;
            let b = build_gl_module(&inst, cap)?;
            let dims = b.complex.graded_dims();
            let rows = (0..=inst.top_degree())
                .map(|h| {
                    Ok(CharRow {
                        h,
                        dim: dims.get(&h).copied().unwrap_or(0) as i128,
                        character: b.complex.pair_character(h)?,
                    })
                })
                .collect::<Result<Vec<_>, LabError>>()?;
            Output {
                command: "build-gl".into(),
                passed: true,
                table: pair_rows(&rows) + &bookkeeping_table(&b.bookkeeping),
                json: serde_json::json!({ "instance": to_json(&inst), "degrees": to_json(&rows), "bookkeeping": to_json(&b.bookkeeping) }),
                timing: timing(start),
            }
        }
        Command::VerifyPe(p) => {
            let r = verify_pe(&PeInstance::new(p.n, p.r, p.s)?, cap)?;
            Output { command: "verify-pe".into(), passed: r.passed(), table: pe_table(&r), json: to_json(&r), timing: timing(start) }
        }
        Command::VerifyGl(p) => {
            let r = verify_gl(&GlInstance::new(p.n, p.m, p.r, p.s)?, cap)?;
            Output { command: "verify-gl".into(), passed: r.passed(), table: gl_table(&r), json: to_json(&r), timing: timing(start) }
        }
        Command::Suite => {
            let (r, t) = Suite::new(cap).run();
            Output { command: "suite".into(), passed: r.passed, table: suite_table(&r), json: to_json(&r), timing: t }
        }
    })
}

/// Runs a parsed command line and returns the exit status.
pub fn run(cli: Cli) -> i32 {
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return 2;
        }
    }
    let out = match execute(&cli.command, cli.cap) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return if e.is_usage() { 2 } else { 1 };
        }
    };
    let text = match cli.format {
        Format::Json => Envelope::new(out.command, out.passed, out.json, out.timing).to_json(),
        Format::Table => out.table,
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if out.passed {
        0
    } else {
        1
    }
}

/// Parses `std::env::args` and runs; clap exits with status 2 on usage errors.
pub fn main_exit_code() -> i32 {
    run(Cli::parse())
}
