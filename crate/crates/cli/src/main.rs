use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gradekit::algebra::pair::subalgebra_spanned;
use gradekit::algebra::text::{parse_pair_file, ModuleData};
use gradekit::catalog::{self, check_context_splitting, splitting_context};
use gradekit::grading::{run_instance, verify_pair_shape, InstanceRequest, Outcome, VerificationReport, Which};
use gradekit::groups::{FiniteGroup, GroupSpec, Subgroup};
use gradekit::linalg::{Field, Subspace};
use gradekit::rep::AModule;
use gradekit::{Error, GroupContext};

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! outln {
    () => { emit(format_args!("\n")) };
    ($($t:tt)*) => { emit(format_args!("{}\n", format_args!($($t)*))) };
}

/// Writes to stdout, exiting quietly if the reader has gone away.
fn emit(args: std::fmt::Arguments) {
    let mut o = std::io::stdout().lock();
    if let Err(e) = o.write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

const EXIT_FAIL: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;
const EXIT_UNRESOLVABLE: u8 = 64;
const EXIT_NON_SPLITTING: u8 = 65;

#[derive(Parser)]
#[command(name = "gradekit", version, about = "Radical-series gradings of group algebras over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bundled groups with a normal subgroup.
    Catalog {
        /// Only groups of at most this order.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Verify one instance and write a JSON report.
    Verify(VerifyArgs),
    /// Verify every catalog instance up to an order bound.
    Sweep {
        #[arg(long, default_value_t = 24)]
        bound: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Factorization,
    Factors,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog entry such as S3:A3.
    #[arg(long, conflicts_with_all = ["spec", "algebra"])]
    catalog: Option<String>,
    /// Group-spec file; the first group is used unless --group is given.
    #[arg(long, conflicts_with = "algebra")]
    spec: Option<PathBuf>,
    #[arg(long, requires = "spec")]
    group: Option<String>,
    /// Name of the normal subgroup in the spec file.
    #[arg(long, requires = "spec")]
    subgroup: Option<String>,
    /// Structure-constant pair file; checks the graded shape of the pair.
    #[arg(long)]
    algebra: Option<PathBuf>,
    #[arg(short = 'p', long = "prime")]
    p: Option<u64>,
    /// Extension degree; the least splitting degree when omitted.
    #[arg(short = 'k', long = "degree")]
    k: Option<u32>,
    /// Simple kN-module as DIM:INDEX.
    #[arg(long, value_parser = parse_selector)]
    l: Option<(usize, usize)>,
    /// Simple k[G/N]-module as DIM:INDEX.
    #[arg(long, value_parser = parse_selector)]
    s: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value = "all")]
    which: WhichArg,
    /// Same as --which all.
    #[arg(long)]
    all: bool,
    /// Report path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    timing: bool,
}

fn parse_selector(s: &str) -> Result<(usize, usize), String> {
    let (d, i) = s.split_once(':').ok_or("expected DIM:INDEX")?;
    let d = d.parse().map_err(|_| format!("bad dimension {d:?}"))?;
    let i = i.parse().map_err(|_| format!("bad index {i:?}"))?;
    Ok((d, i))
}

fn seed_of(flag: Option<u64>) -> anyhow::Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("GRADEKIT_SEED") {
        Ok(v) => v.parse().with_context(|| format!("GRADEKIT_SEED={v:?} is not an integer")),
        Err(_) => Ok(0),
    }
}

/// Failure carrying the exit code it maps to.
struct Exit(u8, String);

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Exit {
        Exit(EXIT_UNRESOLVABLE, format!("{e:#}"))
    }
}

fn lib_exit(e: Error) -> Exit {
    match e {
        Error::NonSplitting { suggested_degree } => Exit(
            EXIT_NON_SPLITTING,
            format!("not a splitting field; rerun with -k {suggested_degree}"),
        ),
        Error::Undecided(msg) => Exit(EXIT_UNDECIDED, format!("undecided: {msg}")),
        other => Exit(EXIT_UNRESOLVABLE, other.to_string()),
    }
}

fn outcome_code(outcomes: impl IntoIterator<Item = Outcome>) -> u8 {
    let all: Vec<Outcome> = outcomes.into_iter().collect();
    if all.contains(&Outcome::Fail) {
        EXIT_FAIL
    } else if all.contains(&Outcome::Undecided) {
        EXIT_UNDECIDED
    } else {
        0
    }
}

fn cmd_catalog(max_order: Option<usize>, json: bool) -> Result<u8, Exit> {
    let listing: Vec<_> = catalog::entries()
        .iter()
        .map(|e| e.listing())
        .filter(|l| max_order.is_none_or(|m| l.group_order <= m))
        .collect();
    if json {
        outln!("{}", serde_json::to_string_pretty(&listing).map_err(anyhow::Error::from)?);
    } else {
        outln!("{:<14} {:>4} {:>4}  primes", "instance", "|G|", "|N|");
        for l in &listing {
            let primes: Vec<String> = l.primes.iter().map(|p| p.to_string()).collect();
            outln!("{:<14} {:>4} {:>4}  {}", l.name, l.group_order, l.subgroup_order, primes.join(","));
        }
    }
    Ok(0)
}

fn context_for(g: Arc<FiniteGroup>, n: Subgroup, p: u64, k: Option<u32>, seed: u64) -> Result<GroupContext, Exit> {
    match k {
        Some(k) => {
            let field = Field::new(p, k).map_err(lib_exit)?;
            let ctx = GroupContext::new(g, n, &field, seed).map_err(lib_exit)?;
            check_context_splitting(&ctx).map_err(lib_exit)?;
            Ok(ctx)
        }
        None => splitting_context(&g, &n, p, seed).map_err(lib_exit),
    }
}

fn resolve_group(args: &VerifyArgs) -> Result<(Arc<FiniteGroup>, Subgroup), Exit> {
    if let Some(name) = &args.catalog {
        return catalog::entry(name).and_then(|e| e.build()).map_err(lib_exit);
    }
    let path = args
        .spec
        .as_ref()
        .ok_or_else(|| Exit(EXIT_UNRESOLVABLE, "one of --catalog, --spec or --algebra is required".into()))?;
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let spec = GroupSpec::parse(&src).map_err(lib_exit)?;
    let decl = match &args.group {
        Some(name) => spec.group(name).map_err(lib_exit)?,
        None => spec
            .groups
            .first()
            .ok_or_else(|| Exit(EXIT_UNRESOLVABLE, "spec file declares no group".into()))?,
    };
    let built = spec.group(&decl.name).and_then(|d| d.build()).map_err(lib_exit)?;
    let sub_name = args
        .subgroup
        .as_ref()
        .ok_or_else(|| Exit(EXIT_UNRESOLVABLE, "--subgroup is required with --spec".into()))?;
    let n = built.normal_subgroup(sub_name).map_err(lib_exit)?.clone();
    Ok((Arc::new(built.group), n))
}

fn write_output(out: &Option<PathBuf>, body: &str) -> Result<(), Exit> {
    match out {
        Some(path) => fs::write(path, format!("{body}\n")).with_context(|| format!("writing {}", path.display()))?,
        None => outln!("{body}"),
    }
    Ok(())
}

fn cmd_pair_shape(args: &VerifyArgs, path: &PathBuf, seed: u64) -> Result<u8, Exit> {
    let start = Instant::now();
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let pf = parse_pair_file(&src).map_err(lib_exit)?;
    let b = &pf.algebra;
    let (a, emb) = subalgebra_spanned(b, &pf.subalgebra).map_err(lib_exit)?;
    let q = match &pf.module {
        ModuleData::Regular => AModule::regular(b),
        ModuleData::Matrices(m) => AModule::new(b, m.clone()).map_err(lib_exit)?,
    };
    let v = match &pf.subspace {
        Some(vs) => Subspace::span(b.field(), q.dim(), vs.clone()),
        None => Subspace::full(b.field(), q.dim()),
    };
    let mut report = verify_pair_shape(b, &a, &emb, &q, &v, seed).map_err(lib_exit)?;
    if args.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    write_output(&args.out, &report.to_json())?;
    Ok(outcome_code([report.outcome()]))
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Exit> {
    let seed = seed_of(args.seed)?;
    if let Some(path) = &args.algebra {
        return cmd_pair_shape(args, path, seed);
    }
    let p = args
        .p
        .ok_or_else(|| Exit(EXIT_UNRESOLVABLE, "-p is required".into()))?;
    let (g, n) = resolve_group(args)?;
    let start = Instant::now();
    let ctx = context_for(g, n, p, args.k, seed)?;
    let which = match (args.all, args.which) {
        (true, _) | (_, WhichArg::All) => Which::All,
        (_, WhichArg::Factorization) => Which::Factorization,
        (_, WhichArg::Factors) => Which::Factors,
    };
    let req = InstanceRequest {
        l: args.l,
        s: args.s,
        which,
        seed,
    };
    let mut reports = run_instance(&ctx, &req).map_err(lib_exit)?;
    if args.k.is_none() && ctx.field().degree() > 1 {
        let note = format!("extension degree {} chosen as the least splitting degree", ctx.field().degree());
        reports.iter_mut().for_each(|r| r.notes.push(note.clone()));
    }
    if args.timing {
        let ms = start.elapsed().as_millis() as u64;
        reports.iter_mut().for_each(|r| r.wall_time_ms = Some(ms));
    }
    let body = serde_json::to_string_pretty(&reports).map_err(anyhow::Error::from)?;
    write_output(&args.out, &body)?;
    for r in &reports {
        eprintln!("{}: {:?}", r.kind, r.outcome());
    }
    Ok(outcome_code(reports.iter().map(|r| r.outcome())))
}

#[derive(serde::Serialize)]
struct SweepRow {
    instance: String,
    p: u64,
    k: u32,
    reports: usize,
    pass: usize,
    fail: usize,
    undecided: usize,
    not_applicable: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u64>,
}

fn sweep_row(e: &catalog::CatalogEntry, p: u64, seed: u64, timing: bool) -> SweepRow {
    let start = Instant::now();
    let mut row = SweepRow {
        instance: e.name.to_string(),
        p,
        k: 0,
        reports: 0,
        pass: 0,
        fail: 0,
        undecided: 0,
        not_applicable: 0,
        error: None,
        wall_time_ms: None,
    };
    let run = || -> Result<(u32, Vec<VerificationReport>), Error> {
        let (g, n) = e.build()?;
        let ctx = splitting_context(&g, &n, p, seed)?;
        let req = InstanceRequest {
            l: None,
            s: None,
            which: Which::All,
            seed,
        };
        Ok((ctx.field().degree(), run_instance(&ctx, &req)?))
    };
    match run() {
        Ok((k, reports)) => {
            row.k = k;
            row.reports = reports.len();
            for r in &reports {
                match r.outcome() {
                    Outcome::Pass => row.pass += 1,
                    Outcome::Fail => row.fail += 1,
                    Outcome::Undecided => row.undecided += 1,
                    Outcome::NotApplicable => row.not_applicable += 1,
                }
            }
        }
        Err(Error::Undecided(msg)) => {
            row.undecided = 1;
            row.error = Some(msg);
        }
        Err(err) => {
            row.fail = 1;
            row.error = Some(err.to_string());
        }
    }
    if timing {
        row.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    row
}

fn cmd_sweep(bound: usize, primes: &[u64], seed: Option<u64>, timing: bool, json: bool) -> Result<u8, Exit> {
    let seed = seed_of(seed)?;
    let jobs: Vec<(&catalog::CatalogEntry, u64)> = catalog::entries()
        .iter()
        .filter(|e| e.group_order() <= bound)
        .flat_map(|e| primes.iter().map(move |&p| (e, p)))
        .collect();
    let rows: Vec<SweepRow> = jobs.par_iter().map(|&(e, p)| sweep_row(e, p, seed, timing)).collect();
    if json {
        outln!("{}", serde_json::to_string_pretty(&rows).map_err(anyhow::Error::from)?);
    } else {
        outln!(
            "{:<14} {:>2} {:>2} {:>7} {:>4} {:>4} {:>9} {:>3}",
            "instance", "p", "k", "reports", "pass", "fail", "undecided", "n/a"
        );
        for r in &rows {
            out!(
                "{:<14} {:>2} {:>2} {:>7} {:>4} {:>4} {:>9} {:>3}",
                r.instance, r.p, r.k, r.reports, r.pass, r.fail, r.undecided, r.not_applicable
            );
            if let Some(ms) = r.wall_time_ms {
                out!(" {ms}ms");
            }
            if let Some(err) = &r.error {
                out!(" ({err})");
            }
            outln!();
        }
    }
    let fail: usize = rows.iter().map(|r| r.fail).sum();
    let undecided: usize = rows.iter().map(|r| r.undecided).sum();
    let pass: usize = rows.iter().map(|r| r.pass).sum();
    outln!("total: {} instances, {pass} pass, {fail} fail, {undecided} undecided", rows.len());
    Ok(if fail > 0 {
        EXIT_FAIL
    } else if undecided > 0 {
        EXIT_UNDECIDED
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Catalog { max_order, json } => cmd_catalog(*max_order, *json),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep {
            bound,
            primes,
            seed,
            timing,
            json,
        } => cmd_sweep(*bound, primes, *seed, *timing, *json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("gradekit: {msg}");
            ExitCode::from(code)
        }
    }
}
