//! `cwcredit`: co-author weighted credit indicators from the command line.
//!
//! Exit codes: 0 success, 1 a consistency check failed, 2 bad input,
//! 3 a credit universe was empty.

mod render;

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coauthor_credit::decimal::parse_decimal;
use coauthor_credit::indicators::{self, check_fixture_table, nrc_department_stats, IndicatorError, Mode};
use coauthor_credit::ingest::{self, GeneratorConfig};
use coauthor_credit::{Corpus, CountingMethod};
use num_rational::BigRational;

use crate::render::{DepartmentLine, Format};

#[derive(Debug, Parser)]
#[command(name = "cwcredit", version, about = "Co-author weighted credit indicators for publication corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-subfield unweighted vs weighted shares (AP/WAP or CP/WCP) and their ratio.
    Indicators {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Share of the weighted credit space due to one author group (GWAP/GWCP).
    Group {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Group definitions: a JSON object mapping names to author ids.
        #[arg(long, value_name = "PATH")]
        groups: PathBuf,
        /// Name of the group to report on.
        #[arg(long, value_name = "NAME")]
        group: String,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Department totals under total author counting.
    Nrc {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Departments, in the groups file format.
        #[arg(long, value_name = "PATH")]
        groups: PathBuf,
        /// Only report this department.
        #[arg(long, value_name = "NAME")]
        department: Option<String>,
        /// Faculty size for publications per allocated faculty.
        #[arg(long, value_name = "N")]
        faculty_count: Option<u64>,
        /// Number of years to annualize over (default 1).
        #[arg(long, value_name = "Y", requires = "faculty_count")]
        years: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check published indicator tables for ratio and column-sum consistency.
    CheckTables {
        /// Fixture files: `label unweighted weighted ratio` per line.
        #[arg(required = true, value_name = "FIXTURE")]
        fixtures: Vec<PathBuf>,
        /// Allowed |ratio - weighted/unweighted| per row.
        #[arg(long, value_name = "R", default_value = "0.005", value_parser = parse_rational)]
        tol_ratio: BigRational,
        /// Allowed |column sum - 1|.
        #[arg(long, value_name = "R", default_value = "0.003", value_parser = parse_rational)]
        tol_sum: BigRational,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generate a synthetic articles file from a JSON generator config.
    Generate {
        /// Generator configuration (JSON).
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// Overrides the seed in the config.
        #[arg(long, value_name = "N")]
        seed: Option<u64>,
        /// Write the corpus here instead of standard output.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CorpusArgs {
    /// Articles file, one JSON record per line.
    #[arg(long, value_name = "PATH")]
    articles: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Pub,
    Cite,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Pub => Mode::Publication,
            ModeArg::Cite => Mode::Citation,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Total,
    Fractional,
    First,
    Custom,
}

#[derive(Debug, Args)]
struct MethodArgs {
    #[arg(long, value_enum, default_value = "pub")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "total")]
    method: MethodArg,
    /// Position weight table, required with `--method custom`.
    #[arg(long, value_name = "PATH")]
    weights: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Decimal places for rendered proportions.
    #[arg(long, default_value_t = 3, value_name = "N")]
    decimals: usize,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    parse_decimal(s)
        .or_else(|| s.trim().parse().ok())
        .ok_or_else(|| format!("invalid number {s:?}"))
}

/// Failure classes, each with a stable exit code.
#[derive(Debug)]
enum Failure {
    CheckFailed,
    Input(anyhow::Error),
    Degenerate(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::CheckFailed => 1,
            Failure::Input(_) => 2,
            Failure::Degenerate(_) => 3,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<IndicatorError> for Failure {
    fn from(e: IndicatorError) -> Self {
        match e {
            IndicatorError::EmptyUniverse(_) => Failure::Degenerate(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

fn open(path: &Path) -> anyhow::Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(file))
}

fn load_corpus(path: &Path) -> anyhow::Result<Corpus> {
    ingest::read_corpus(open(path)?).with_context(|| format!("{}", path.display()))
}

fn load_groups(path: &Path) -> anyhow::Result<ingest::ParsedGroups> {
    let parsed = ingest::parse_groups(open(path)?).with_context(|| format!("{}", path.display()))?;
    for warning in &parsed.warnings {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(parsed)
}

fn load_method(args: &MethodArgs) -> anyhow::Result<CountingMethod> {
    match (args.method, &args.weights) {
        (MethodArg::Custom, Some(path)) => {
            let table = ingest::parse_weights(open(path)?).with_context(|| format!("{}", path.display()))?;
            Ok(CountingMethod::Custom(table))
        }
        (MethodArg::Custom, None) => Err(anyhow!("--method custom requires --weights")),
        (_, Some(_)) => Err(anyhow!("--weights is only valid with --method custom")),
        (MethodArg::Total, None) => Ok(CountingMethod::Total),
        (MethodArg::Fractional, None) => Ok(CountingMethod::Fractional),
        (MethodArg::First, None) => Ok(CountingMethod::First),
    }
}

/// Writes to `path` atomically (temp file in the same directory, then
/// rename), or to stdout.
fn emit(path: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
            tmp.write_all(bytes)?;
            tmp.as_file().sync_all()?;
            tmp.persist(path)
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(())
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn cmd_indicators(corpus: &CorpusArgs, method: &MethodArgs, output: &OutputArgs) -> Result<(), Failure> {
    let u = load_corpus(&corpus.articles)?;
    let counting = load_method(method)?;
    let report = indicators::report(&u, method.mode.into(), &counting)?;
    let text = render::indicator_report(&report, output.format, output.decimals);
    emit(output.output.as_deref(), text.as_bytes())?;
    Ok(())
}

fn cmd_group(
    corpus: &CorpusArgs,
    groups: &Path,
    name: &str,
    method: &MethodArgs,
    output: &OutputArgs,
) -> Result<(), Failure> {
    let u = load_corpus(&corpus.articles)?;
    let parsed = load_groups(groups)?;
    let group = parsed
        .get(name)
        .ok_or_else(|| anyhow!("unknown group {name:?} in {}", groups.display()))?;
    let counting = load_method(method)?;
    let mode: Mode = method.mode.into();
    let a = u.subset_by_group(group);
    let (plain, weighted, grouped) = mode.labels();
    let values = match mode {
        Mode::Publication => [
            (plain, indicators::ap(&a, &u)?),
            (weighted, indicators::wap(&a, &u, &counting)?),
            (grouped, indicators::gwap(&a, &u, group, &counting)?),
        ],
        Mode::Citation => [
            (plain, indicators::cp(&a, &u)?),
            (weighted, indicators::wcp(&a, &u, &counting)?),
            (grouped, indicators::gwcp(&a, &u, group, &counting)?),
        ],
    };
    let values: Vec<_> = values.into_iter().map(|(k, p)| (k, p.value().clone())).collect();
    let heading = [
        ("group", name.to_string()),
        ("method", counting.name().to_string()),
        ("articles", format!("{} of {}", a.len(), u.len())),
    ];
    let text = render::named_values(&heading, &values, output.format, output.decimals);
    emit(output.output.as_deref(), text.as_bytes())?;
    Ok(())
}

fn cmd_nrc(
    corpus: &CorpusArgs,
    groups: &Path,
    department: Option<&str>,
    faculty: Option<u64>,
    years: Option<u64>,
    output: &OutputArgs,
) -> Result<(), Failure> {
    let u = load_corpus(&corpus.articles)?;
    let parsed = load_groups(groups)?;
    if faculty == Some(0) || years == Some(0) {
        return Err(anyhow!("--faculty-count and --years must be positive").into());
    }
    let selected: Vec<_> = match department {
        Some(name) => vec![parsed
            .get(name)
            .ok_or_else(|| anyhow!("unknown department {name:?} in {}", groups.display()))?],
        None => parsed.groups.iter().collect(),
    };
    let lines: Vec<DepartmentLine<'_>> = selected
        .into_iter()
        .map(|dept| {
            let stats = nrc_department_stats(&u, dept);
            let per_faculty = faculty.and_then(|n| stats.publications_per_faculty(n, years.unwrap_or(1)));
            DepartmentLine {
                name: dept.name(),
                stats,
                per_faculty,
            }
        })
        .collect();
    let text = render::departments(&lines, output.format, output.decimals);
    emit(output.output.as_deref(), text.as_bytes())?;
    Ok(())
}

fn cmd_check_tables(
    fixtures: &[PathBuf],
    tol_ratio: &BigRational,
    tol_sum: &BigRational,
    output: &OutputArgs,
) -> Result<(), Failure> {
    let mut text = String::new();
    let mut all_passed = true;
    for path in fixtures {
        let rows = ingest::parse_fixture(open(path)?).with_context(|| format!("{}", path.display()))?;
        let result = check_fixture_table(&rows, tol_ratio, tol_sum)
            .map_err(|e| Failure::Input(anyhow::Error::from(e).context(path.display().to_string())))?;
        all_passed &= result.passed();
        match output.format {
            Format::Jsonl => text.push_str(&result.render_json_lines(output.decimals)),
            Format::Table | Format::Csv => {
                if fixtures.len() > 1 || output.format == Format::Table {
                    text.push_str(&format!("# {}\n", path.display()));
                }
                text.push_str(&result.render_text(output.decimals));
            }
        }
        for check in result.failures() {
            eprintln!("{}: {} failed", path.display(), check.name);
        }
    }
    emit(output.output.as_deref(), text.as_bytes())?;
    if all_passed {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}

fn cmd_generate(config: &Path, seed: Option<u64>, output: Option<&Path>) -> Result<(), Failure> {
    let mut cfg = GeneratorConfig::from_json(open(config)?).with_context(|| format!("{}", config.display()))?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    let corpus = ingest::generate_corpus(&cfg).with_context(|| format!("{}", config.display()))?;
    let mut bytes = Vec::new();
    ingest::write_articles(&corpus, &mut bytes).map_err(anyhow::Error::from)?;
    emit(output, &bytes)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Indicators { corpus, method, output } => cmd_indicators(corpus, method, output),
        Command::Group {
            corpus,
            groups,
            group,
            method,
            output,
        } => cmd_group(corpus, groups, group, method, output),
        Command::Nrc {
            corpus,
            groups,
            department,
            faculty_count,
            years,
            output,
        } => cmd_nrc(corpus, groups, department.as_deref(), *faculty_count, *years, output),
        Command::CheckTables {
            fixtures,
            tol_ratio,
            tol_sum,
            output,
        } => cmd_check_tables(fixtures, tol_ratio, tol_sum, output),
        Command::Generate { config, seed, output } => cmd_generate(config, *seed, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::CheckFailed => eprintln!("error: consistency check failed"),
                Failure::Input(e) | Failure::Degenerate(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
