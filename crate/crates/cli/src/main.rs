//! `lattkit`: command-line surface over the finite-model workbench.
//! Lattices, congruences, and rings come in as JSON files; verdicts and
//! reports leave as JSON on stdout. `verify-all` runs the exhaustive
//! acceptance matrix and exits nonzero when any asserted suite fails.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use lattkit_core::commutator;
use lattkit_core::conditions::{ConditionContext, ConditionId, Family, Kappa};
use lattkit_core::harness;
use lattkit_core::json::{CongruenceJson, LatticeJson, RingJson};
use lattkit_core::lattice::FiniteLattice;
use lattkit_core::rings::RingConditionContext;
use lattkit_core::transfer::TransferContext;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "lattkit",
    version,
    about = "Finite-model workbench for Stone conditions on lattices, commutator lattices, and finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a condition (1-5 or iv) on a bounded lattice.
    Check(CheckArgs),
    /// Transfer report for a lattice with a congruence.
    Transfer(TransferArgs),
    /// Prime spectrum, radicals, and radical classes of a commutator lattice.
    Spectrum(LatticeArg),
    /// The radical congruence and its quotient frame.
    Equiv(LatticeArg),
    /// The equivalence grid on a commutator lattice, with hypothesis gates.
    Ourdavey(LatticeArg),
    /// Build the commutator induced by a congruence with distributive quotient.
    CommFromCong(TransferArgs),
    /// Ring conditions, reticulation, or the full bridge report.
    Ring(RingArgs),
    /// Run one exhaustive suite and write its summary.
    Enumerate(EnumerateArgs),
    /// Run the full acceptance matrix; exit 0 iff every suite passes.
    VerifyAll(JobsArg),
}

#[derive(Args)]
struct LatticeArg {
    /// Path to a lattice JSON file.
    lattice: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    lattice: PathBuf,
    /// Condition family: 1, 2, 3, 4, 5, or iv.
    #[arg(long)]
    condition: String,
    /// Cardinality bound: one, fin, or all (ignored for iv).
    #[arg(long, default_value = "all")]
    kappa: String,
    /// Check the dual lattice (co-annihilators and generated filters).
    #[arg(long)]
    dual: bool,
}

#[derive(Args)]
struct TransferArgs {
    lattice: PathBuf,
    /// Path to a congruence JSON file ({"blocks": [[labels...], ...]}).
    #[arg(long)]
    congruence: PathBuf,
}

#[derive(Args)]
struct RingArgs {
    ring: PathBuf,
    #[arg(long)]
    condition: Option<String>,
    #[arg(long, default_value = "all")]
    kappa: String,
    /// Compute the reticulation R* instead of a condition.
    #[arg(long)]
    reticulation: bool,
    /// Produce the full bridge report instead of a condition.
    #[arg(long)]
    bridge: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Carrier bound for the lattice-based suites.
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// One of: davey, ourdavey, transfer, commsofcgs, rings.
    #[arg(long)]
    suite: String,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON summary here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct JobsArg {
    #[arg(long)]
    jobs: Option<usize>,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(args) => check(args),
        Command::Transfer(args) => transfer(args),
        Command::Spectrum(args) => spectrum(args),
        Command::Equiv(args) => equiv(args),
        Command::Ourdavey(args) => ourdavey(args),
        Command::CommFromCong(args) => comm_from_cong(args),
        Command::Ring(args) => ring(args),
        Command::Enumerate(args) => enumerate(args),
        Command::VerifyAll(args) => verify_all(args),
    }
}

fn read_lattice_json(path: &Path) -> Result<LatticeJson> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_lattice(path: &Path, dual: bool) -> Result<FiniteLattice> {
    let lat = read_lattice_json(path)?.to_lattice()?;
    Ok(if dual { lat.dual() } else { lat })
}

fn parse_condition(family: &str, kappa: &str) -> Result<ConditionId> {
    let family = match family {
        "1" => Family::C1,
        "2" => Family::C2,
        "3" => Family::C3,
        "4" => Family::C4,
        "5" => Family::C5,
        "iv" => return Ok(ConditionId::iv()),
        other => bail!("unknown condition {other:?}; use 1..5 or iv"),
    };
    let kappa = match kappa {
        "one" | "1" => Kappa::One,
        "fin" | "finite" => Kappa::Finite,
        "all" => Kappa::All,
        other => bail!("unknown kappa {other:?}; use one, fin, or all"),
    };
    Ok(ConditionId::new(family, kappa))
}

fn emit(value: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn check(args: CheckArgs) -> Result<()> {
    let lat = read_lattice(&args.lattice, args.dual)?;
    let cond = parse_condition(&args.condition, &args.kappa)?;
    let start = Instant::now();
    let verdict = ConditionContext::new(&lat).check(cond);
    let elapsed = start.elapsed();
    emit(&json!({
        "condition": cond.describe(),
        "dual": args.dual,
        "holds": verdict.holds,
        "witness": verdict.witness,
        "timings": { "total_ms": elapsed.as_secs_f64() * 1e3 },
    }))
}

fn transfer(args: TransferArgs) -> Result<()> {
    let lat = read_lattice(&args.lattice, false)?;
    let text = std::fs::read_to_string(&args.congruence)?;
    let blocks: CongruenceJson = serde_json::from_str(&text)?;
    let theta = blocks.to_congruence(&lat)?;
    let report = TransferContext::new(&lat, &theta).transfer_report();
    emit(&serde_json::to_value(&report)?)
}

fn spectrum(args: LatticeArg) -> Result<()> {
    let parsed = read_lattice_json(&args.lattice)?;
    let cl = parsed.to_commutator()?;
    let lat = cl.base();
    let s = cl.spectrum();
    let names = |set: lattkit_core::ElemSet| -> Vec<String> {
        set.iter().map(|x| lat.label(x).to_string()).collect()
    };
    emit(&json!({
        "spec": names(s.spec),
        "radical": lat
            .elements()
            .map(|x| (lat.label(x).to_string(), lat.label(s.radical[x]).to_string()))
            .collect::<Vec<_>>(),
        "radical_elements": names(s.radicals),
        "primes_above": lat
            .elements()
            .map(|x| (lat.label(x).to_string(), names(s.primes_above[x])))
            .collect::<Vec<_>>(),
    }))
}

fn equiv(args: LatticeArg) -> Result<()> {
    let parsed = read_lattice_json(&args.lattice)?;
    let cl = parsed.to_commutator()?;
    let e = cl.radical_congruence();
    let (quotient, _) = cl.quotient_mod_equiv();
    emit(&json!({
        "blocks": CongruenceJson::from_congruence(cl.base(), &e.cong).blocks,
        "quotient": LatticeJson::from_lattice(quotient.base()),
        "reticulation": LatticeJson::from_lattice(&cl.reticulation()),
    }))
}

fn ourdavey(args: LatticeArg) -> Result<()> {
    let parsed = read_lattice_json(&args.lattice)?;
    let cl = parsed.to_commutator()?;
    let report = cl.ourdavey_report();
    emit(&json!({
        "hypotheses": {
            "radical_zero": report.rho0,
            "trivial_top_class": report.one_class_trivial,
            "unital": report.unital,
        },
        "verdicts": report
            .verdicts
            .iter()
            .map(|(c, v)| (c.describe(), v))
            .collect::<Vec<_>>(),
        "quotient_verdicts": report
            .quotient_verdicts
            .iter()
            .map(|(c, v)| (c.describe(), v))
            .collect::<Vec<_>>(),
        "checks": report.checks,
    }))
}

fn comm_from_cong(args: TransferArgs) -> Result<()> {
    let lat = read_lattice(&args.lattice, false)?;
    let text = std::fs::read_to_string(&args.congruence)?;
    let blocks: CongruenceJson = serde_json::from_str(&text)?;
    let theta = blocks.to_congruence(&lat)?;
    let (cl, checks) = commutator::commutator_from_congruence_checks(&lat, &theta);
    match cl {
        Some(cl) => emit(&json!({
            "lattice": LatticeJson::from_commutator(&cl),
            "checks": checks,
        })),
        None => bail!("the quotient by the congruence is not distributive"),
    }
}

fn ring(args: RingArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.ring)?;
    let descriptor: RingJson = serde_json::from_str(&text)?;
    let ring = descriptor.to_ring()?;
    let ctx = RingConditionContext::new(&ring);
    if args.reticulation {
        let (retic, checks) = ctx.reticulation();
        return emit(&json!({
            "reticulation": LatticeJson::from_lattice(&retic),
            "checks": checks,
        }));
    }
    if args.bridge {
        let report = ctx.baer_bridge_report();
        return emit(&json!({
            "semiprime": report.semiprime,
            "ring_grid": report
                .ring_grid
                .iter()
                .map(|(c, v)| (c.describe(), v))
                .collect::<Vec<_>>(),
            "ideal_lattice_grid": report
                .id_grid
                .iter()
                .map(|(c, v)| (c.describe(), v))
                .collect::<Vec<_>>(),
            "checks": report.checks,
        }));
    }
    let Some(condition) = args.condition else {
        bail!("pass --condition 1..5|iv, --reticulation, or --bridge");
    };
    let cond = parse_condition(&condition, &args.kappa)?;
    let start = Instant::now();
    let verdict = ctx.check(cond);
    emit(&json!({
        "condition": cond.describe(),
        "holds": verdict.holds,
        "witness": verdict.witness,
        "timings": { "total_ms": start.elapsed().as_secs_f64() * 1e3 },
    }))
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(k) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .ok();
    }
}

fn enumerate(args: EnumerateArgs) -> Result<()> {
    configure_jobs(args.jobs);
    let summary = match args.suite.as_str() {
        "davey" => harness::davey_suite(args.n.min(7)),
        "ourdavey" => harness::commutator_suite(args.n.min(4), 7),
        "transfer" => harness::transfer_suite(args.n.min(6)),
        "commsofcgs" => harness::commutator_from_congruence_suite(args.n.min(6)),
        "rings" => harness::ring_suite(),
        other => bail!("unknown suite {other:?}; use davey, ourdavey, transfer, commsofcgs, or rings"),
    };
    eprintln!("{}", summary.line());
    let value = serde_json::to_value(&summary)?;
    match args.out {
        Some(path) => std::fs::write(&path, serde_json::to_string_pretty(&value)?)?,
        None => emit(&value)?,
    }
    if summary.passed() {
        Ok(())
    } else {
        std::process::exit(1)
    }
}

fn verify_all(args: JobsArg) -> Result<()> {
    configure_jobs(args.jobs);
    let summaries = harness::verify_all();
    let mut all_passed = true;
    for summary in &summaries {
        println!("{}", summary.line());
        for note in &summary.notes {
            println!("  note: {note}");
        }
        all_passed &= summary.passed();
    }
    if all_passed {
        Ok(())
    } else {
        std::process::exit(1)
    }
}
