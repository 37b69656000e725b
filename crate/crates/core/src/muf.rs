//! Maximal unbordered factor (MUF) algorithms.
//!
//! * [`muf_brute`] checks every factor directly; it is the reference oracle.
//! * [`muf_basic`] builds the border array of every suffix, `Θ(n²)`.
//! * [`muf_early_stop`] builds suffix border arrays from the longest suffix and
//!   stops once the remaining suffixes are no longer than the best factor found.
//!   Its running time is `O((n - b(w)) · n)`, which is small on average since
//!   most words have a very long unbordered factor.
//! * [`muf_fast_path`] answers in linear time when the minimal period is
//!   shorter than half the word: the MUF is then an unbordered conjugate of
//!   the period.
//! * [`muf`] dispatches between the last two.
//!
//! Ties between factors of maximal length go to the smallest start, except
//! on the fast path, which returns the least rotation of the period.

use crate::border::{border_array_into, least_rotation, minimal_period, rightmost_zero};
use crate::error::{Error, Result};
use crate::word::Word;

/// Location of a maximal unbordered factor, 1-indexed and inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MufResult {
    pub start: usize,
    pub end: usize,
}

impl MufResult {
    pub fn new(start: usize, length: usize) -> Self {
        debug_assert!(start >= 1 && length >= 1);
        Self {
            start,
            end: start + length - 1,
        }
    }

    pub fn length(&self) -> usize {
        self.end - self.start + 1
    }
}

fn nonempty<T>(w: &[T]) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

fn has_border<T: PartialEq>(f: &[T]) -> bool {
    let n = f.len();
    (1..n).any(|k| f[..k] == f[n - k..])
}

/// Reference implementation: tries factors by decreasing length, leftmost
/// first, testing every candidate border by direct comparison.
pub fn muf_brute<T: PartialEq>(w: &[T]) -> Result<MufResult> {
    nonempty(w)?;
    let n = w.len();
    for len in (1..=n).rev() {
        for start in 0..=n - len {
            if !has_border(&w[start..start + len]) {
                return Ok(MufResult::new(start + 1, len));
            }
        }
    }
    unreachable!("single letters are unbordered")
}

/// Builds the border array of every suffix and keeps the longest factor
/// whose entry is zero.
pub fn muf_basic<T: PartialEq>(w: &[T]) -> Result<MufResult> {
    nonempty(w)?;
    let mut buf = Vec::with_capacity(w.len());
    let mut best = MufResult::new(1, 1);
    for i in 0..w.len() {
        border_array_into(&w[i..], &mut buf);
        let len = rightmost_zero(&buf).expect("B[1] = 0");
        if len > best.length() {
            best = MufResult::new(i + 1, len);
        }
    }
    Ok(best)
}

/// Work counters reported by [`muf_early_stop_with_stats`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EarlyStopStats {
    /// Number of suffix border arrays built.
    pub arrays_built: usize,
}

/// Like [`muf_basic`], but stops as soon as the next suffix is not longer
/// than the best factor found so far. Returns the same factor as `muf_basic`.
pub fn muf_early_stop<T: PartialEq>(w: &[T]) -> Result<MufResult> {
    muf_early_stop_with_stats(w).map(|(r, _)| r)
}

pub fn muf_early_stop_with_stats<T: PartialEq>(w: &[T]) -> Result<(MufResult, EarlyStopStats)> {
    nonempty(w)?;
    let n = w.len();
    let mut buf = Vec::with_capacity(n);
    let mut stats = EarlyStopStats::default();
    let mut best: Option<MufResult> = None;
    for i in 0..n {
        let best_len = best.map_or(0, |b| b.length());
        if n - i <= best_len {
            break;
        }
        border_array_into(&w[i..], &mut buf);
        stats.arrays_built += 1;
        let len = rightmost_zero(&buf).expect("B[1] = 0");
        if len > best_len {
            best = Some(MufResult::new(i + 1, len));
        }
    }
    Ok((best.expect("first suffix always yields a factor"), stats))
}

/// Linear-time answer for words whose minimal period `p` is below `n / 2`.
///
/// The MUF then has length `p`, and the least rotation of `w[1..=p]` is one.
/// Since `w[1..=2p]` is the period squared, that rotation starts at `r + 1`
/// where `r` is the rotation offset. Returns `None` when `2p >= n`.
pub fn muf_fast_path<T: Ord>(w: &[T]) -> Result<Option<MufResult>> {
    let p = minimal_period(w)?;
    if 2 * p >= w.len() {
        return Ok(None);
    }
    let r = least_rotation(&w[..p])?;
    Ok(Some(MufResult::new(r + 1, p)))
}

/// Fast path when applicable, early-stopping scan otherwise.
pub fn muf<T: Ord>(w: &[T]) -> Result<MufResult> {
    match muf_fast_path(w)? {
        Some(r) => Ok(r),
        None => muf_early_stop(w),
    }
}

/// Counterexample family to the conjecture that `b(w) < n/2` forces `b(w) = π(w)`:
/// `a^m b a^{m+1} b a^m b a^{m+2} b a^m b a^{m+1} b a^m`, length `7m + 10`,
/// with MUF length `3m + 6` and minimal period `4m + 7`.
pub fn assous_pouzet(m: usize) -> Result<Word> {
    if m < 1 {
        return Err(Error::InvalidParameter("assous_pouzet requires m >= 1".into()));
    }
    let runs = [m, m + 1, m, m + 2, m, m + 1, m];
    let mut letters = Vec::with_capacity(7 * m + 10);
    for (k, &run) in runs.iter().enumerate() {
        if k > 0 {
            letters.push(1);
        }
        letters.extend(std::iter::repeat(0).take(run));
    }
    Word::new(letters, 2)
}
