use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nccc_cli::figures::{figure, figure_rows, write_figure_csv};
use nccc_cli::record::analyze;
use nccc_cli::report::SquareScanReport;
use nccc_cli::sweep::{default_sweep, run_sweep, sort_key, threads_from_env};
use nccc_core::{FamilySpec, TableSpec};

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "nccc",
    version,
    about = "Spectra and energies of NCCC-graphs of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group with both the closed form and the numeric oracle.
    Analyze(AnalyzeArgs),
    /// Run the formula-vs-oracle sweep, or the perfect-square scan.
    Verify(VerifyArgs),
    /// Emit the data of one energy figure as CSV.
    Figure(FigureArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    D2m,
    T4m,
    Sd8m,
    Umn,
    U6m,
    V8m,
    Heis,
    Table,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    /// Center order; only checked against the constructed group.
    #[arg(long)]
    z: Option<u32>,
    /// Cayley table JSON for `--family table`.
    #[arg(long, value_name = "PATH")]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Flip the sign of one closed-form eigenvalue (self-test).
    #[arg(long)]
    perturb: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict the sweep to one family, or one instance when parameters are given.
    #[command(flatten)]
    group: GroupArgs,
    /// Per-instance deviation CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    perturb: bool,
    /// Scan the perfect-square conditions instead of sweeping groups.
    #[arg(long)]
    lemma_squares: bool,
    #[arg(long, default_value_t = 1_000_000)]
    max: u64,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10))]
    figure: u32,
    /// Output path; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

/// Error carrying the process exit code.
struct Failure(u8, anyhow::Error);

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure(EXIT_USAGE, e)
    }
}

fn require(v: Option<u32>, name: &str, family: &str) -> anyhow::Result<u32> {
    v.with_context(|| format!("--family {family} requires --{name}"))
}

fn family_name(f: Family) -> String {
    f.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn build_spec(args: &GroupArgs) -> anyhow::Result<FamilySpec> {
    let family = args.family.context("--family is required")?;
    let name = family_name(family);
    let m = || require(args.m, "m", &name);
    let spec = match family {
        Family::D2m => FamilySpec::dihedral(m()?)?,
        Family::T4m => FamilySpec::dicyclic(m()?)?,
        Family::Sd8m => FamilySpec::semidihedral(m()?)?,
        Family::Umn => FamilySpec::umn(require(args.n, "n", &name)?, m()?)?,
        Family::U6m => FamilySpec::u6m(m()?)?,
        Family::V8m => FamilySpec::v8m(m()?)?,
        Family::Heis => FamilySpec::heisenberg(require(args.p, "p", &name)?)?,
        Family::Table => {
            let path = args
                .table
                .as_ref()
                .context("--family table requires --table")?;
            FamilySpec::ExplicitTable(
                TableSpec::from_json_file(path)
                    .with_context(|| format!("reading {}", path.display()))?,
            )
        }
    };
    Ok(spec)
}

fn has_params(args: &GroupArgs) -> bool {
    args.m.is_some() || args.n.is_some() || args.p.is_some() || args.table.is_some()
}

fn in_family(spec: &FamilySpec, family: Family) -> bool {
    spec.family_tag() == family_name(family)
}

fn check_center(spec: &FamilySpec, z: Option<u32>) -> anyhow::Result<()> {
    let Some(z) = z else { return Ok(()) };
    let group = nccc_core::build_group(spec)?;
    let actual = nccc_core::center(&group).len();
    if actual != z as usize {
        bail!("{spec} has center of order {actual}, not {z}");
    }
    Ok(())
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn open_output(path: &Path) -> anyhow::Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let spec = build_spec(&args.group)?;
    check_center(&spec, args.group.z)?;
    let record = analyze(&spec, args.tol, args.perturb).map_err(anyhow::Error::from)?;
    if args.json {
        emit(&serde_json::to_string_pretty(&record).map_err(anyhow::Error::from)?)?;
    } else {
        emit(&record.to_string())?;
    }
    match record.agreement {
        Some(a) if !a.all() => Err(Failure(
            EXIT_DISAGREE,
            anyhow::anyhow!("{}: closed form and oracle disagree", record.group),
        )),
        _ => Ok(()),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    if args.lemma_squares {
        let report = SquareScanReport::scan(args.max);
        if args.json {
            emit(&serde_json::to_string(&report).map_err(anyhow::Error::from)?)?;
        } else {
            emit(&report.to_string())?;
        }
        return Ok(());
    }
    let specs = match args.group.family {
        Some(_) if has_params(&args.group) => {
            let spec = build_spec(&args.group)?;
            check_center(&spec, args.group.z)?;
            vec![spec]
        }
        Some(f) => {
            let mut specs: Vec<_> = default_sweep()
                .into_iter()
                .filter(|s| in_family(s, f))
                .collect();
            specs.sort_by_key(sort_key);
            if specs.is_empty() {
                return Err(anyhow::anyhow!(
                    "--family {} needs explicit parameters",
                    family_name(f)
                )
                .into());
            }
            specs
        }
        None => default_sweep(),
    };
    let summary = run_sweep(&specs, args.tol, args.perturb, threads_from_env());
    if let Some(path) = &args.csv {
        let mut out = open_output(path)?;
        summary.write_csv(&mut out).map_err(anyhow::Error::from)?;
        out.flush().map_err(anyhow::Error::from)?;
    }
    if args.json {
        emit(&serde_json::to_string_pretty(&summary).map_err(anyhow::Error::from)?)?;
    } else {
        emit(summary.to_string().trim_end())?;
    }
    if summary.all_agree() {
        Ok(())
    } else {
        let n = summary.disagreements().count();
        Err(Failure(
            EXIT_DISAGREE,
            anyhow::anyhow!("{n} instance(s) disagree"),
        ))
    }
}

fn cmd_figure(args: &FigureArgs) -> Result<(), Failure> {
    let fig = figure(args.figure).map_err(anyhow::Error::from)?;
    let rows = figure_rows(&fig).map_err(anyhow::Error::from)?;
    match &args.csv {
        Some(path) => {
            let mut out = open_output(path)?;
            write_figure_csv(&rows, &mut out).map_err(anyhow::Error::from)?;
            out.flush().map_err(anyhow::Error::from)?;
            log::info!(
                "figure {} ({}) written to {}",
                fig.id,
                fig.caption,
                path.display()
            );
        }
        None => {
            let mut buf = Vec::new();
            write_figure_csv(&rows, &mut buf).map_err(anyhow::Error::from)?;
            emit(String::from_utf8_lossy(&buf).trim_end())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(v) => cmd_verify(v),
        Command::Figure(f) => cmd_figure(f),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
