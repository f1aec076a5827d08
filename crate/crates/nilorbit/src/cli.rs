//! Command-line front end: grading inspection, single-weight multiplicity
//! computation, the model-orbit verification sweep, and per-degree
//! symmetric-power tables.
//!
//! Exit codes are a stable contract: 0 success/verified, 1 verification
//! failure, 2 invalid input.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::grading::{coweight_from_diagram, grade_roots, Grading};
use crate::input::{parse_int_vector, parse_type_label};
use crate::multiplicity::{multiplicity, verify_model};
use crate::report::{ComputeReport, GradingReport, SkTableReport, VerifyReport};
use crate::rootsys::{RootSystem, Weight};
use crate::sym::{levi_irrep_extract, sym_power_multiset, verify_sk_equality};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "nilorbit",
    version,
    about = "Multiplicities of irreducible representations in rings of regular functions on nilpotent orbits"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grade the root system by a weighted Dynkin diagram and audit dimensions
    Grading(GradingArgs),
    /// Multiplicity of one irreducible representation in the function ring
    Compute(ComputeArgs),
    /// Sweep all dominant weights up to a bound through both multiplicity paths
    VerifyModel(VerifyModelArgs),
    /// Per-degree symmetric-power decompositions against the closed form
    SkTable(SkTableArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Simple type label, e.g. G2, or a bare series letter with --rank
    #[arg(long = "type", value_name = "LABEL", default_value = "G2")]
    type_label: String,

    /// Rank, when the type label does not embed one
    #[arg(long, value_name = "N")]
    rank: Option<usize>,

    /// Weighted Dynkin diagram labels, comma separated
    #[arg(long, value_name = "D1,...,DN", default_value = "1,0")]
    diagram: String,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct GradingArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Highest weight in fundamental coordinates, comma separated
    #[arg(long, value_name = "A1,...,AN", allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Args)]
struct VerifyModelArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Upper bound on the coordinate sum of the swept dominant weights
    #[arg(long, default_value_t = 12)]
    bound: u32,
}

#[derive(Args)]
struct SkTableArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Largest symmetric-power degree to tabulate
    #[arg(long = "k-max", default_value_t = 12)]
    k_max: u32,
}

/// Parse arguments from the process environment and run. Returns the exit
/// code; clap itself exits with 2 on usage errors.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID_INPUT
        }
    }
}

fn execute(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Grading(args) => cmd_grading(args),
        Command::Compute(args) => cmd_compute(args),
        Command::VerifyModel(args) => cmd_verify_model(args),
        Command::SkTable(args) => cmd_sk_table(args),
    }
}

struct Context {
    rs: RootSystem,
    grading: Grading,
}

fn context(common: &CommonArgs) -> Result<Context, Error> {
    let (series, label_rank) = parse_type_label(&common.type_label)?;
    let rank = match (label_rank, common.rank) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::InvalidInput(format!(
                "type label rank {a} conflicts with --rank {b}"
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::InvalidInput(
                "rank required: embed it in --type (e.g. G2) or pass --rank".into(),
            ))
        }
    };
    let rs = RootSystem::build(series, rank)?;
    let labels = parse_int_vector(&common.diagram)?;
    let h = coweight_from_diagram(&rs, &labels)?;
    let grading = grade_roots(&rs, &h)?;
    Ok(Context { rs, grading })
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn cmd_grading(args: GradingArgs) -> Result<i32, Error> {
    let ctx = context(&args.common)?;
    let report = GradingReport::build(&ctx.rs, &ctx.grading);
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Text => grading_text(&ctx),
        Format::Csv => {
            return Err(Error::InvalidInput(
                "the grading command has no CSV rendering".into(),
            ))
        }
    };
    emit(&text, &args.common.out)?;
    Ok(EXIT_OK)
}

fn grading_text(ctx: &Context) -> String {
    let g = &ctx.grading;
    let dims = g.dims_report();
    let mut s = String::new();
    let _ = writeln!(s, "type {}  cartan {:?}", ctx.rs.label(), ctx.rs.cartan());
    let _ = writeln!(s, "diagram {:?}", g.labels());
    let _ = writeln!(s, "h (coroot coordinates) = {:?}", g.h().0);
    let _ = writeln!(s, "pieces by degree:");
    for (m, roots) in g.pieces() {
        let names: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        let _ = writeln!(s, "  m = {m:>3}: {}", names.join(", "));
    }
    let o_line: Vec<String> = g
        .o_space()
        .iter()
        .map(|w| {
            format!(
                "(h={}, levi={:?}, fund={})",
                w.h_value, w.levi_coords, w.full
            )
        })
        .collect();
    let _ = writeln!(s, "o weights (degree >= 2): {}", o_line.join(" "));
    let _ = writeln!(
        s,
        "dims: g={}, levi={}, nilradical={}, parabolic={}, flag={}, o={}",
        dims.dim_g,
        dims.dim_levi,
        dims.dim_nilradical,
        dims.dim_parabolic,
        dims.dim_flag,
        dims.dim_o
    );
    let _ = writeln!(s, "dim Z = {}", dims.dim_z);
    s
}

fn cmd_compute(args: ComputeArgs) -> Result<i32, Error> {
    let ctx = context(&args.common)?;
    let lambda = Weight(parse_int_vector(&args.lambda)?);
    let rep = multiplicity(&ctx.rs, &ctx.grading, &lambda)?;
    let report = ComputeReport::build(&ctx.rs, &ctx.grading, &rep);
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "type {}  diagram {:?}  lambda {}",
                ctx.rs.label(),
                ctx.grading.labels(),
                rep.lambda
            );
            let _ = writeln!(
                s,
                "lambda_dual {}  k_bound {}",
                rep.lambda_dual, rep.k_bound
            );
            let _ = writeln!(s, "multiplicity = {}", rep.total);
            for t in &rep.terms {
                let _ = writeln!(
                    s,
                    "  term: w_length={} sign={} mu={} k={} q={}",
                    t.w.length, t.w.sign, t.mu.full, t.degree, t.q
                );
            }
            s
        }
        Format::Csv => {
            return Err(Error::InvalidInput(
                "the compute command has no CSV rendering".into(),
            ))
        }
    };
    emit(&text, &args.common.out)?;
    Ok(EXIT_OK)
}

fn cmd_verify_model(args: VerifyModelArgs) -> Result<i32, Error> {
    let ctx = context(&args.common)?;
    let outcome = verify_model(&ctx.rs, &ctx.grading, args.bound)?;
    let report = VerifyReport::build(&ctx.rs, &ctx.grading, &outcome);
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "model sweep on {} diagram {:?}, bound {}: {} weights",
                ctx.rs.label(),
                ctx.grading.labels(),
                outcome.bound,
                outcome.rows.len()
            );
            for row in &outcome.rows {
                let _ = writeln!(
                    s,
                    "  lambda {}  multiplicity {}  bruteforce {}  agree {}",
                    row.lambda, row.multiplicity, row.bruteforce, row.agree
                );
            }
            let _ = writeln!(s, "{}", if outcome.pass { "PASS" } else { "FAIL" });
            s
        }
    };
    emit(&text, &args.common.out)?;
    Ok(if outcome.pass {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    })
}

fn cmd_sk_table(args: SkTableArgs) -> Result<i32, Error> {
    let ctx = context(&args.common)?;
    if !ctx.grading.is_g2_model() {
        return Err(Error::InvalidInput(
            "the closed-form table requires the G2 diagram 1,0".into(),
        ));
    }
    let g = &ctx.grading;
    let mut rows = Vec::new();
    let mut all_equal = true;
    for k in 0..=args.k_max {
        let multiset = sym_power_multiset(g.o_space(), g.ambient_rank(), k);
        let mut constituents = levi_irrep_extract(&multiset, g.levi())?;
        constituents.sort_by_key(|c| c.mu.h_value);
        let equal = verify_sk_equality(g, k)?;
        all_equal &= equal;
        rows.push(SkTableReport::row(
            k,
            multiset.total(),
            &constituents,
            equal,
        ));
    }
    let report = SkTableReport::build(&ctx.rs, g, args.k_max, rows, all_equal);
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "symmetric powers of the model space, degrees 0..={}",
                args.k_max
            );
            for row in &report.rows {
                let cs: Vec<String> = row
                    .constituents
                    .iter()
                    .map(|c| format!("(k={},q={}) mu={:?} x{}", c.k, c.q, c.mu_fund, c.mult))
                    .collect();
                let _ = writeln!(
                    s,
                    "  k={:>2} size={:>4} equal={}  {}",
                    row.k,
                    row.multiset_size,
                    row.equal,
                    cs.join(" ")
                );
            }
            let _ = writeln!(s, "{}", if report.all_equal { "PASS" } else { "FAIL" });
            s
        }
    };
    emit(&text, &args.common.out)?;
    Ok(if report.all_equal {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    })
}
