//! Argument parsing and output formatting for the `unbordered` binary.
//!
//! Exit codes: 0 on success, 2 on usage errors (including invalid letters),
//! 1 on runtime errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use unbordered::combinatorics::{
    bound_table_entry, corollary2_lower_bound, count_unbordered, count_unbordered_brute, count_unbordered_jdiff_brute,
    lemma1_lower_bound,
};
use unbordered::experiments::{
    gap_experiment_with, timing_experiment_with, write_csv, Algorithm, ExperimentConfig, ExperimentRow, Mode,
    DEFAULT_TRIALS,
};
use unbordered::generator::{generate_all, generate_from_seed};
use unbordered::word::parse_word_list;
use unbordered::{border_array, minimal_period, Error, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "unbordered", version, about = "Borders, periods and maximal unbordered factors of strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print `start end length` of a maximal unbordered factor (1-indexed).
    Muf {
        #[command(flatten)]
        words: WordArgs,
        /// brute, basic, early_stop or dispatch.
        #[arg(long, default_value = "dispatch")]
        algorithm: String,
    },
    /// Print the border array, space separated.
    BorderArray {
        #[command(flatten)]
        words: WordArgs,
    },
    /// Print the minimal period.
    Period {
        #[command(flatten)]
        words: WordArgs,
    },
    /// Count unbordered words of a given length.
    Count {
        #[arg(long = "len")]
        len: usize,
        #[arg(long)]
        sigma: u32,
        /// Only count words whose first letter differs from the next J letters.
        #[arg(long)]
        jdiff: Option<usize>,
        /// Count by enumeration instead of the recurrence.
        #[arg(long)]
        brute: bool,
    },
    /// Print the expected-MUF bound coefficients and, with --n, the counting bounds.
    Bounds {
        /// Alphabet size; prints the table for 2..=5 when omitted.
        #[arg(long)]
        sigma: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        /// Restrict the per-j bound to this j.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Print words of length N built from an unbordered seed, one per line.
    Generate {
        #[arg(long, conflicts_with = "seed_len", required_unless_present = "seed_len")]
        seed_word: Option<String>,
        /// Use every unbordered seed of this length (needs --sigma).
        #[arg(long, requires = "sigma")]
        seed_len: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: Option<u8>,
    },
    /// Mean gap n - b(w) per (sigma, n) as CSV.
    Experiment {
        #[command(flatten)]
        common: ExperimentArgs,
    },
    /// Mean running time per word of the selected algorithms as CSV.
    Bench {
        #[command(flatten)]
        common: ExperimentArgs,
        #[arg(long, value_delimiter = ',', default_value = "basic,early_stop")]
        algorithms: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Words over a..z.
    pub words: Vec<String>,
    /// File with one word per line.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Alphabet size; letters must be below it. Inferred per word when omitted.
    #[arg(long)]
    pub sigma: Option<u8>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 100)]
    pub n_max: usize,
    #[arg(long, default_value_t = 1)]
    pub n_step: usize,
    /// Explicit word lengths; overrides --n-min/--n-max/--n-step.
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
    pub sigmas: Vec<u32>,
    /// exhaustive or montecarlo.
    #[arg(long, default_value = "montecarlo")]
    pub mode: String,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidCharacter { .. }
            | Error::InvalidSigma(_)
            | Error::LetterOutOfRange { .. }
            | Error::InvalidParameter(_)
            | Error::BorderedSeed(_)
            | Error::EmptyWord => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RUNTIME
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Muf { words, algorithm } => {
            let alg: Algorithm = algorithm.parse()?;
            for w in collect_words(&words)? {
                let r = alg.run(&w)?;
                writeln!(out, "{} {} {}", r.start, r.end, r.length())?;
            }
        }
        Command::BorderArray { words } => {
            for w in collect_words(&words)? {
                let values: Vec<String> = border_array(&w).as_slice().iter().map(usize::to_string).collect();
                writeln!(out, "{}", values.join(" "))?;
            }
        }
        Command::Period { words } => {
            for w in collect_words(&words)? {
                writeln!(out, "{}", minimal_period(&w)?)?;
            }
        }
        Command::Count { len, sigma, jdiff, brute } => {
            let value = match jdiff {
                Some(j) => count_unbordered_jdiff_brute(len, j, sigma)?,
                None if brute => count_unbordered_brute(len, sigma)?,
                None => count_unbordered(len, sigma)?,
            };
            writeln!(out, "{value}")?;
        }
        Command::Bounds { sigma, n, j } => bounds(sigma, n, j, out)?,
        Command::Generate {
            seed_word,
            seed_len,
            n,
            sigma,
        } => {
            let words = match (seed_word, seed_len) {
                (Some(text), _) => generate_from_seed(&Word::from_ascii(&text, sigma)?, n)?.words,
                (None, Some(i)) => generate_all(i, n, u32::from(sigma.unwrap_or(2)))?,
                (None, None) => return Err(Failure::Usage("--seed-word or --seed-len is required".into())),
            };
            for w in words {
                writeln!(out, "{w}")?;
            }
        }
        Command::Experiment { common } => {
            let cfg = experiment_config(&common)?;
            let rows = gap_experiment_with(&cfg, |row| progress(err, row))?;
            emit_csv(&rows, common.out.as_ref(), out)?;
        }
        Command::Bench { common, algorithms } => {
            let mut cfg = experiment_config(&common)?;
            cfg.algorithms = algorithms
                .iter()
                .map(|a| a.parse())
                .collect::<Result<_, Error>>()?;
            let rows = timing_experiment_with(&cfg, |row| progress(err, row))?;
            emit_csv(&rows, common.out.as_ref(), out)?;
        }
    }
    Ok(())
}

fn collect_words(args: &WordArgs) -> Result<Vec<Word>, Failure> {
    let mut words = args
        .words
        .iter()
        .map(|w| Word::from_ascii(w, args.sigma))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = &args.input {
        let text = fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
        words.extend(parse_word_list(&text, args.sigma)?);
    }
    if words.is_empty() {
        return Err(Failure::Usage("no words given".into()));
    }
    Ok(words)
}

fn bounds(sigma: Option<u32>, n: Option<usize>, j: Option<usize>, out: &mut dyn Write) -> CliResult {
    let Some(sigma) = sigma else {
        writeln!(out, "sigma xi coefficient")?;
        for s in 2..=5 {
            let (xi, coeff) = bound_table_entry(s)?;
            writeln!(out, "{s} {xi} {coeff}")?;
        }
        return Ok(());
    };
    let (xi, coeff) = bound_table_entry(sigma)?;
    writeln!(out, "xi {xi}")?;
    writeln!(out, "coefficient {coeff}")?;
    if let Some(n) = n {
        writeln!(out, "corollary2 {}", corollary2_lower_bound(n, sigma)?)?;
        let js: Vec<usize> = match j {
            Some(j) => vec![j],
            None => (1..n).collect(),
        };
        for j in js {
            writeln!(out, "lemma1 {j} {}", lemma1_lower_bound(n, j, sigma)?)?;
        }
    }
    Ok(())
}

fn experiment_config(args: &ExperimentArgs) -> Result<ExperimentConfig, Failure> {
    if args.n_step == 0 {
        return Err(Failure::Usage("--n-step must be positive".into()));
    }
    let mode: Mode = args.mode.parse()?;
    let mut cfg = ExperimentConfig::new(args.n_min, args.n_max, args.sigmas.clone(), mode);
    cfg.lengths = match &args.lengths {
        Some(lengths) => lengths.clone(),
        None => (args.n_min..=args.n_max).step_by(args.n_step).collect(),
    };
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.validate()?;
    Ok(cfg)
}

fn progress(err: &mut dyn Write, row: &ExperimentRow) {
    let _ = writeln!(err, "sigma={} n={} trials={} done", row.sigma, row.n, row.trials_used);
}

fn emit_csv(rows: &[ExperimentRow], path: Option<&PathBuf>, out: &mut dyn Write) -> CliResult {
    match path {
        Some(path) => unbordered::experiments::write_csv_to_path(rows, path)?,
        None => write_csv(rows, out)?,
    }
    Ok(())
}
