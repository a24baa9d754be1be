//! `graygreed`: enumerate constrained binary words, run the greedy Gray code
//! algorithm, discover generator sets, count languages and verify lists.
//!
//! Exit codes: 0 success, 1 a property or agreement check failed, 2 usage
//! or input error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graygreed_core::structure::{DISTINCT, HOMOGENEOUS, TRANSPOSITION};
use graygreed_core::{
    brute_force_gen_set, closed_form_gen_set, count_prefix_formula, count_run_constrained,
    greedy_run, is_homogeneous_gray, is_rt_partitioned, is_suffix_partitioned, is_tail_partitioned,
    tail_partition_direction, BinaryWord, Family, LanguageSpec, MoveOrder, Rational, TailDirection,
};
use serde::Serialize;

const MAX_SWEEP_VAR: &str = "GRAYGREED_MAX_SWEEP";
const DEFAULT_MAX_SWEEP: u64 = 2_000_000;

#[derive(Parser)]
#[command(
    name = "graygreed",
    version,
    about = "Greedy homogeneous Gray codes for constrained binary words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a language in lexicographic order.
    Enumerate {
        #[command(flatten)]
        lang: LangArgs,
        #[arg(long, value_enum, default_value_t = OutputMode::Lines)]
        format: OutputMode,
    },
    /// Run the greedy algorithm from a start word.
    Greedy {
        #[command(flatten)]
        lang: LangArgs,
        #[arg(long)]
        start: String,
        #[arg(long, value_enum, default_value_t = Order::OneFirst)]
        move_order: Order,
        #[arg(long, value_enum, default_value_t = OutputMode::Lines)]
        format: OutputMode,
    },
    /// Generator set of a language: start words whose greedy run is exhaustive.
    Gens {
        #[command(flatten)]
        lang: LangArgs,
        #[arg(long, value_enum, default_value_t = GensMethod::Both)]
        method: GensMethod,
        #[arg(long, value_enum, default_value_t = Order::OneFirst)]
        move_order: Order,
        #[arg(long, value_enum, default_value_t = OutputMode::Lines)]
        format: OutputMode,
    },
    /// Check structural properties of a word list (one word per line).
    Verify {
        /// Comma-separated subset of: gray, homogeneous, suffix, tail, rt.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "gray,homogeneous,suffix,rt"
        )]
        checks: Vec<CheckName>,
        /// Input file; standard input when absent or "-".
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputMode::Lines)]
        format: OutputMode,
    },
    /// Size of a language.
    Count {
        #[command(flatten)]
        lang: LangArgs,
        #[arg(long, value_enum, default_value_t = CountMethod::Both)]
        method: CountMethod,
        #[arg(long, value_enum, default_value_t = OutputMode::Lines)]
        format: OutputMode,
    },
}

#[derive(Args)]
struct LangArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Word length.
    #[arg(long)]
    n: usize,
    /// Number of ones.
    #[arg(long)]
    k: usize,
    /// Run bound (fib, default 2) or prefix ratio ("a" or "a/b", required for prefix).
    #[arg(long)]
    p: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    /// Words with no p consecutive ones.
    #[value(alias = "run")]
    Fib,
    /// Words whose every prefix has at least p times as many zeros as ones.
    Prefix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    OneFirst,
    ZeroFirst,
}

impl From<Order> for MoveOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::OneFirst => MoveOrder::OneFirst,
            Order::ZeroFirst => MoveOrder::ZeroFirst,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GensMethod {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Gray,
    Homogeneous,
    Suffix,
    Tail,
    Rt,
}

/// Failures that map to exit code 2.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(graygreed_core::Error),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<graygreed_core::Error> for CliError {
    fn from(e: graygreed_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<ExitCode, CliError>;

impl LangArgs {
    fn spec(&self) -> Result<LanguageSpec, CliError> {
        let family = match self.family {
            FamilyName::Fib => {
                let p = match &self.p {
                    None => 2,
                    Some(text) => text.parse::<usize>().map_err(|_| {
                        CliError::Usage(format!(
                            "--p for the fib family must be an integer >= 2, got {text:?}"
                        ))
                    })?,
                };
                Family::RunConstrained { p }
            }
            FamilyName::Prefix => {
                let text = self.p.as_deref().ok_or_else(|| {
                    CliError::Usage("--p is required for the prefix family".into())
                })?;
                Family::PrefixConstrained {
                    p: text.parse::<Rational>()?,
                }
            }
        };
        Ok(LanguageSpec::new(family, self.n, self.k)?)
    }
}

fn words_json(words: impl IntoIterator<Item = impl ToString>) -> Vec<String> {
    words.into_iter().map(|w| w.to_string()).collect()
}

fn print_json<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn print_lines<'a>(
    out: &mut impl Write,
    words: impl IntoIterator<Item = &'a BinaryWord>,
) -> io::Result<()> {
    for w in words {
        writeln!(out, "{w}")?;
    }
    Ok(())
}

fn cmd_enumerate(lang: &LangArgs, format: OutputMode, out: &mut impl Write) -> CliResult {
    #[derive(Serialize)]
    struct Doc {
        language: String,
        count: usize,
        words: Vec<String>,
    }
    let spec = lang.spec()?;
    let words = spec.enumerate();
    match format {
        OutputMode::Lines => print_lines(out, &words)?,
        OutputMode::Json => print_json(
            out,
            &Doc {
                language: spec.to_string(),
                count: words.len(),
                words: words_json(&words),
            },
        )?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TraceChecks {
    gray: bool,
    homogeneous: bool,
    suffix_partitioned: bool,
    rt_partitioned: bool,
}

fn cmd_greedy(
    lang: &LangArgs,
    start: &str,
    order: Order,
    format: OutputMode,
    out: &mut impl Write,
) -> CliResult {
    #[derive(Serialize)]
    struct Doc {
        language: String,
        move_order: &'static str,
        start: String,
        words: Vec<String>,
        count: usize,
        exhausted: bool,
        last_word: String,
        checks: TraceChecks,
    }
    let spec = lang.spec()?;
    let start: BinaryWord = start.parse()?;
    let trace = greedy_run(&start, &spec, order.into())?;
    match format {
        OutputMode::Lines => print_lines(out, &trace.words)?,
        OutputMode::Json => {
            let gray = is_homogeneous_gray(&trace.words)?;
            let doc = Doc {
                language: spec.to_string(),
                move_order: match order {
                    Order::OneFirst => "one-first",
                    Order::ZeroFirst => "zero-first",
                },
                start: start.to_string(),
                words: words_json(&trace.words),
                count: trace.len(),
                exhausted: trace.exhausted_language,
                last_word: trace.last().to_string(),
                checks: TraceChecks {
                    gray: gray.get(DISTINCT) == Some(true) && gray.get(TRANSPOSITION) == Some(true),
                    homogeneous: gray.get(DISTINCT) == Some(true)
                        && gray.get(HOMOGENEOUS) == Some(true),
                    suffix_partitioned: is_suffix_partitioned(&trace.words).passed(),
                    rt_partitioned: is_rt_partitioned(&trace.words).passed(),
                },
            };
            print_json(out, &doc)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn max_sweep() -> Result<u64, CliError> {
    match std::env::var(MAX_SWEEP_VAR) {
        Err(_) => Ok(DEFAULT_MAX_SWEEP),
        Ok(v) => v.trim().replace([',', '_'], "").parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_SWEEP_VAR} must be a nonnegative integer, got {v:?}"
            ))
        }),
    }
}

fn cmd_gens(
    lang: &LangArgs,
    method: GensMethod,
    order: Order,
    format: OutputMode,
    out: &mut impl Write,
) -> CliResult {
    #[derive(Serialize)]
    struct Doc {
        language: String,
        words: Vec<String>,
        count: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        brute: Option<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        closed: Option<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        agree: Option<bool>,
    }
    let spec = lang.spec()?;
    let closed = match method {
        GensMethod::Brute => None,
        _ => Some(closed_form_gen_set(&spec)?),
    };
    let brute = match method {
        GensMethod::Closed => None,
        _ => {
            let limit = max_sweep()?;
            let size = spec.cardinality();
            if size > limit.into() {
                return Err(CliError::Usage(format!(
                    "{spec} has {size} words, above the sweep limit {limit} ({MAX_SWEEP_VAR})"
                )));
            }
            Some(brute_force_gen_set(&spec, order.into()))
        }
    };
    let agree = match (&brute, &closed) {
        (Some(b), Some(c)) => Some(b == c),
        _ => None,
    };
    let shown: &BTreeSet<BinaryWord> = brute.as_ref().or(closed.as_ref()).expect("one method ran");
    match format {
        OutputMode::Lines => {
            print_lines(out, shown)?;
            if let Some(agree) = agree {
                eprintln!("agree={agree}");
            }
        }
        OutputMode::Json => print_json(
            out,
            &Doc {
                language: spec.to_string(),
                words: words_json(shown),
                count: shown.len(),
                brute: brute.as_ref().map(words_json),
                closed: closed.as_ref().map(words_json),
                agree,
            },
        )?,
    }
    Ok(if agree == Some(false) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_count(
    lang: &LangArgs,
    method: CountMethod,
    format: OutputMode,
    out: &mut impl Write,
) -> CliResult {
    #[derive(Serialize)]
    struct Doc {
        language: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        formula: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        brute: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        agree: Option<bool>,
    }
    let spec = lang.spec()?;
    let formula = match method {
        CountMethod::Brute => None,
        _ => Some(match spec.family() {
            Family::RunConstrained { p } => count_run_constrained(spec.n(), p, spec.k()),
            Family::PrefixConstrained { p } => {
                let p = p.to_integer().ok_or_else(|| {
                    CliError::Usage(format!("the counting formula needs an integer p, got {p}"))
                })?;
                count_prefix_formula(spec.n(), p, spec.k())?
            }
        }),
    };
    let brute = match method {
        CountMethod::Formula => None,
        _ => Some(spec.enumerate().len().into()),
    };
    let agree = match (&formula, &brute) {
        (Some(f), Some(b)) => Some(f == b),
        _ => None,
    };
    match format {
        OutputMode::Lines => {
            for c in formula.iter().chain(&brute) {
                writeln!(out, "{c}")?;
            }
        }
        OutputMode::Json => print_json(
            out,
            &Doc {
                language: spec.to_string(),
                formula: formula.as_ref().map(ToString::to_string),
                brute: brute.as_ref().map(ToString::to_string),
                agree,
            },
        )?,
    }
    Ok(if agree == Some(false) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn read_words(file: Option<&PathBuf>) -> Result<Vec<BinaryWord>, CliError> {
    let reader: Box<dyn BufRead> = match file {
        Some(path) if path.as_os_str() != "-" => {
            Box::new(io::BufReader::new(std::fs::File::open(path)?))
        }
        _ => Box::new(io::stdin().lock()),
    };
    let mut words = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.is_empty() {
            return Err(CliError::Usage(format!("line {}: blank line", i + 1)));
        }
        let w =
            BinaryWord::parse(line).map_err(|e| CliError::Usage(format!("line {}: {e}", i + 1)))?;
        if let Some(first) = words.first().map(BinaryWord::len) {
            if w.len() != first {
                return Err(CliError::Usage(format!(
                    "line {}: length {} differs from {first}",
                    i + 1,
                    w.len()
                )));
            }
        }
        words.push(w);
    }
    Ok(words)
}

fn cmd_verify(
    checks: &[CheckName],
    file: Option<&PathBuf>,
    format: OutputMode,
    out: &mut impl Write,
) -> CliResult {
    #[derive(Serialize)]
    struct Doc {
        count: usize,
        checks: BTreeMap<&'static str, bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        tail_direction: Option<&'static str>,
        first_violation: Option<usize>,
        passed: bool,
    }
    let words = read_words(file)?;
    let gray = is_homogeneous_gray(&words)?;

    let mut results = BTreeMap::new();
    let mut first_violation: Option<usize> = None;
    for c in checks {
        let (name, sub) = match c {
            CheckName::Gray => ("gray", gray.restrict(&[DISTINCT, TRANSPOSITION])),
            CheckName::Homogeneous => ("homogeneous", gray.restrict(&[DISTINCT, HOMOGENEOUS])),
            CheckName::Suffix => ("suffix", is_suffix_partitioned(&words)),
            CheckName::Tail => ("tail", is_tail_partitioned(&words)),
            CheckName::Rt => ("rt", is_rt_partitioned(&words)),
        };
        results.insert(name, sub.passed());
        if let Some(v) = sub.first_violation {
            first_violation = Some(first_violation.map_or(v, |f| f.min(v)));
        }
    }
    let direction = tail_partition_direction(&words);
    let passed = results.values().all(|&ok| ok);
    let direction_name = checks
        .contains(&CheckName::Tail)
        .then_some(match direction {
            TailDirection::Increasing => "increasing",
            TailDirection::Decreasing => "decreasing",
            TailDirection::Both => "both",
            TailDirection::Neither => "neither",
        });
    match format {
        OutputMode::Lines => {
            for (name, ok) in &results {
                writeln!(out, "{name}: {}", if *ok { "pass" } else { "fail" })?;
            }
            if let Some(d) = direction_name {
                writeln!(out, "tail_direction: {d}")?;
            }
            if let Some(v) = first_violation {
                writeln!(out, "first_violation: {v}")?;
            }
        }
        OutputMode::Json => print_json(
            out,
            &Doc {
                count: words.len(),
                checks: results,
                tail_direction: direction_name,
                first_violation,
                passed,
            },
        )?,
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Enumerate { lang, format } => cmd_enumerate(lang, *format, &mut out),
        Command::Greedy {
            lang,
            start,
            move_order,
            format,
        } => cmd_greedy(lang, start, *move_order, *format, &mut out),
        Command::Gens {
            lang,
            method,
            move_order,
            format,
        } => cmd_gens(lang, *method, *move_order, *format, &mut out),
        Command::Verify {
            checks,
            file,
            format,
        } => cmd_verify(checks, file.as_ref(), *format, &mut out),
        Command::Count {
            lang,
            method,
            format,
        } => cmd_count(lang, *method, *format, &mut out),
    }?;
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
