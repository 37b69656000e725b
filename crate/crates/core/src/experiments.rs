//! Experiment harness: the expected gap `n - b(w)` over exhaustive or random
//! word samples, and mean running times of the MUF algorithms.
//!
//! Random words are drawn from ChaCha8 streams keyed by [`trial_seed`], so
//! results do not depend on thread scheduling.

use std::fmt;
use std::fs::File;
use std::hint::black_box;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::{enumeration_size, word_at_index};
use crate::error::{Error, Result};
use crate::muf::{muf, muf_basic, muf_brute, muf_early_stop, MufResult};
use crate::word::Word;

pub const DEFAULT_TRIALS: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Brute,
    Basic,
    EarlyStop,
    Dispatch,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Brute, Algorithm::Basic, Algorithm::EarlyStop, Algorithm::Dispatch];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Basic => "basic",
            Algorithm::EarlyStop => "early_stop",
            Algorithm::Dispatch => "dispatch",
        }
    }

    pub fn run(self, w: &[u8]) -> Result<MufResult> {
        match self {
            Algorithm::Brute => muf_brute(w),
            Algorithm::Basic => muf_basic(w),
            Algorithm::EarlyStop => muf_early_stop(w),
            Algorithm::Dispatch => muf(w),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every word of `A^n`.
    Exhaustive,
    /// `trials` uniformly random words.
    MonteCarlo,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "montecarlo" => Ok(Mode::MonteCarlo),
            _ => Err(Error::InvalidParameter(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    /// Word lengths to run, in increasing order.
    pub lengths: Vec<usize>,
    pub sigmas: Vec<u32>,
    pub mode: Mode,
    pub trials: u64,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
}

impl ExperimentConfig {
    /// Lengths `n_min..=n_max`.
    pub fn new(n_min: usize, n_max: usize, sigmas: Vec<u32>, mode: Mode) -> Self {
        Self {
            lengths: (n_min..=n_max).collect(),
            sigmas,
            mode,
            trials: DEFAULT_TRIALS,
            seed: 0,
            algorithms: vec![Algorithm::Basic, Algorithm::EarlyStop],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lengths.is_empty() || self.lengths.contains(&0) {
            return Err(Error::InvalidParameter("word lengths must be a nonempty set of positive integers".into()));
        }
        if self.sigmas.is_empty() {
            return Err(Error::InvalidParameter("at least one alphabet size is required".into()));
        }
        for &sigma in &self.sigmas {
            if !(2..=255).contains(&sigma) {
                return Err(Error::InvalidSigma(sigma));
            }
        }
        match self.mode {
            Mode::MonteCarlo if self.trials < 1 => {
                Err(Error::InvalidParameter("montecarlo mode needs at least one trial".into()))
            }
            Mode::Exhaustive => {
                for &sigma in &self.sigmas {
                    for &n in &self.lengths {
                        enumeration_size(n, sigma)?;
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn cells(&self) -> Vec<(u32, usize)> {
        let mut sigmas = self.sigmas.clone();
        sigmas.sort_unstable();
        sigmas.dedup();
        let mut lengths = self.lengths.clone();
        lengths.sort_unstable();
        lengths.dedup();
        sigmas
            .into_iter()
            .flat_map(|s| lengths.iter().map(move |&n| (s, n)))
            .collect()
    }
}

/// One `(σ, n)` cell of an experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub sigma: u32,
    pub n: usize,
    pub trials_used: u64,
    /// Mean of `n - b(w)`.
    pub mean_gap: f64,
    /// Mean of `b(w)`; equals `n - mean_gap`.
    pub mean_muf: f64,
    /// Standard error of `mean_gap` (zero for a single sample).
    pub gap_std_err: f64,
    /// Mean seconds per word, per algorithm. Empty for gap experiments.
    pub times: Vec<(Algorithm, f64)>,
}

impl ExperimentRow {
    fn from_sums(sigma: u32, n: usize, count: u64, gap_sum: u64, gap_sq_sum: u64) -> Self {
        let c = count as f64;
        let mean_gap = gap_sum as f64 / c;
        let var = if count > 1 {
            ((gap_sq_sum as f64 - c * mean_gap * mean_gap) / (c - 1.0)).max(0.0)
        } else {
            0.0
        };
        Self {
            sigma,
            n,
            trials_used: count,
            mean_gap,
            mean_muf: n as f64 - mean_gap,
            gap_std_err: (var / c).sqrt(),
            times: Vec::new(),
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of one trial: SplitMix64 folded over
/// `(master_seed, sigma, n, trial_index)`.
pub fn trial_seed(master_seed: u64, sigma: u32, n: usize, trial_index: u64) -> u64 {
    let mut h = splitmix64(master_seed);
    h = splitmix64(h ^ u64::from(sigma));
    h = splitmix64(h ^ n as u64);
    splitmix64(h ^ trial_index)
}

fn fill_random(n: usize, sigma: u32, seed: u64, out: &mut Vec<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.clear();
    out.extend((0..n).map(|_| rng.gen_range(0..sigma) as u8));
}

/// Uniformly random word of `A^n`, determined by `trial_seed`.
pub fn random_word(n: usize, sigma: u32, trial_seed: u64) -> Result<Word> {
    if n < 1 {
        return Err(Error::InvalidParameter("random words need n >= 1".into()));
    }
    if !(2..=255).contains(&sigma) {
        return Err(Error::InvalidSigma(sigma));
    }
    let mut letters = Vec::with_capacity(n);
    fill_random(n, sigma, trial_seed, &mut letters);
    Word::new(letters, sigma as u8)
}

fn gap_of(w: &[u8]) -> u64 {
    (w.len() - muf(w).expect("nonempty word").length()) as u64
}

fn gap_cell(cfg: &ExperimentConfig, sigma: u32, n: usize) -> Result<ExperimentRow> {
    let (count, gap_sum, gap_sq_sum) = match cfg.mode {
        Mode::Exhaustive => {
            let total = enumeration_size(n, sigma)?;
            let (s, sq) = (0..total)
                .into_par_iter()
                .map_init(Vec::new, |buf, index| {
                    word_at_index(index, n, sigma, buf);
                    let g = gap_of(buf);
                    (g, g * g)
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            (total, s, sq)
        }
        Mode::MonteCarlo => {
            let (s, sq) = (0..cfg.trials)
                .into_par_iter()
                .map_init(Vec::new, |buf, t| {
                    fill_random(n, sigma, trial_seed(cfg.seed, sigma, n, t), buf);
                    let g = gap_of(buf);
                    (g, g * g)
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            (cfg.trials, s, sq)
        }
    };
    Ok(ExperimentRow::from_sums(sigma, n, count, gap_sum, gap_sq_sum))
}

/// Mean gap `n - b(w)` for every `(σ, n)` cell, sorted by `(σ, n)`.
pub fn gap_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    gap_experiment_with(cfg, |_| {})
}

/// [`gap_experiment`], calling `on_row` as each cell completes.
pub fn gap_experiment_with(cfg: &ExperimentConfig, mut on_row: impl FnMut(&ExperimentRow)) -> Result<Vec<ExperimentRow>> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for (sigma, n) in cfg.cells() {
        let row = gap_cell(cfg, sigma, n)?;
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

fn sample(cfg: &ExperimentConfig, sigma: u32, n: usize) -> Result<Vec<Vec<u8>>> {
    let mut words = Vec::new();
    match cfg.mode {
        Mode::Exhaustive => {
            for index in 0..enumeration_size(n, sigma)? {
                let mut w = Vec::with_capacity(n);
                word_at_index(index, n, sigma, &mut w);
                words.push(w);
            }
        }
        Mode::MonteCarlo => {
            for t in 0..cfg.trials {
                let mut w = Vec::with_capacity(n);
                fill_random(n, sigma, trial_seed(cfg.seed, sigma, n, t), &mut w);
                words.push(w);
            }
        }
    }
    Ok(words)
}

fn timing_cell(cfg: &ExperimentConfig, sigma: u32, n: usize) -> Result<ExperimentRow> {
    let words = sample(cfg, sigma, n)?;

    // Unmeasured warm-up pass, which also cross-checks the algorithms.
    let reference = cfg.algorithms[0];
    let mut gaps = Vec::with_capacity(words.len());
    for w in &words {
        let expected = reference.run(w)?.length();
        for &alg in &cfg.algorithms[1..] {
            let got = alg.run(w)?.length();
            if got != expected {
                return Err(Error::AlgorithmMismatch {
                    word: Word::new(w.clone(), sigma as u8)?.to_string(),
                    first: reference.name(),
                    first_len: expected,
                    second: alg.name(),
                    second_len: got,
                });
            }
        }
        gaps.push((n - expected) as u64);
    }

    let mut times = Vec::with_capacity(cfg.algorithms.len());
    for &alg in &cfg.algorithms {
        let started = Instant::now();
        for w in &words {
            black_box(alg.run(black_box(w))?);
        }
        times.push((alg, started.elapsed().as_secs_f64() / words.len() as f64));
    }

    let gap_sum = gaps.iter().sum();
    let gap_sq_sum = gaps.iter().map(|g| g * g).sum();
    let mut row = ExperimentRow::from_sums(sigma, n, words.len() as u64, gap_sum, gap_sq_sum);
    row.times = times;
    Ok(row)
}

/// Mean running time per word of each selected algorithm, all run on the
/// same word sample. Measurement is single-threaded. Fails with
/// [`Error::AlgorithmMismatch`] if two algorithms disagree on a MUF length.
pub fn timing_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    timing_experiment_with(cfg, |_| {})
}

pub fn timing_experiment_with(
    cfg: &ExperimentConfig,
    mut on_row: impl FnMut(&ExperimentRow),
) -> Result<Vec<ExperimentRow>> {
    cfg.validate()?;
    let mut algorithms = cfg.algorithms.clone();
    algorithms.sort_unstable();
    algorithms.dedup();
    if algorithms.len() < 2 {
        return Err(Error::InvalidParameter("timing needs at least two distinct algorithms".into()));
    }
    let mut rows = Vec::new();
    for (sigma, n) in cfg.cells() {
        let row = timing_cell(cfg, sigma, n)?;
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

/// Formats `x` in fixed notation with `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 {
            format!("{:.*}", digits.saturating_sub(1), 0.0)
        } else {
            x.to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding may carry into a new leading digit (9.999995 -> 10.00000).
    let rounded: f64 = s.parse().unwrap_or(x);
    if decimals > 0 && rounded.abs() >= 10f64.powi(magnitude as i32 + 1) {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

/// Writes rows as CSV: `sigma,n,trials,mean_gap,mean_muf` followed by one
/// `time_<alg>` column per timed algorithm.
pub fn write_csv<W: Write>(rows: &[ExperimentRow], mut out: W) -> io::Result<()> {
    if rows.is_empty() {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "no rows to write"));
    }
    let columns: Vec<Algorithm> = rows[0].times.iter().map(|(a, _)| *a).collect();
    write!(out, "sigma,n,trials,mean_gap,mean_muf")?;
    for alg in &columns {
        write!(out, ",time_{alg}")?;
    }
    writeln!(out)?;
    for row in rows {
        write!(
            out,
            "{},{},{},{},{}",
            row.sigma,
            row.n,
            row.trials_used,
            format_significant(row.mean_gap, 6),
            format_significant(row.mean_muf, 6)
        )?;
        for alg in &columns {
            let t = row.times.iter().find(|(a, _)| a == alg).map_or(f64::NAN, |(_, t)| *t);
            write!(out, ",{}", format_significant(t, 6))?;
        }
        writeln!(out)?;
    }
    out.flush()
}

pub fn write_csv_to_path(rows: &[ExperimentRow], path: &Path) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_csv(rows, BufWriter::new(file)).map_err(io_err)
}
