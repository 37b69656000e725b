//! Builds length-`n` words with a long unbordered factor from unbordered seeds.
//!
//! Every word `S P_1 .. P_k` where `S` is unbordered and each `P_t` is a
//! prefix of `S` contains `S` as a factor, so its MUF is at least `|S|`.
//! Different compositions can spell the same word, so the construction only
//! uses compositions whose last part is at least `n - i - j`, where `j` is the
//! number of letters after the first that differ from it. Those spellings are
//! pairwise distinct and there are `2^j` of them.

use std::collections::BTreeSet;

use crate::border::is_unbordered;
use crate::combinatorics::enumerate_unbordered;
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest `j >= 0` such that `w[1] != w[k]` for every `k` in `2..=j + 1`.
pub fn j_value<T: PartialEq>(w: &[T]) -> usize {
    match w.split_first() {
        Some((first, rest)) => rest.iter().take_while(|c| *c != first).count(),
        None => 0,
    }
}

/// Compositions of `m` (sequences of positive integers summing to `m`)
/// whose last part is at least `min_last`.
pub fn compositions(m: usize, min_last: usize) -> Result<Compositions> {
    if m < 1 || min_last < 1 || min_last > m {
        return Err(Error::InvalidParameter(format!(
            "compositions require 1 <= min_last <= m, got m = {m}, min_last = {min_last}"
        )));
    }
    if m > 64 {
        return Err(Error::InvalidParameter(format!("composition size {m} is too large")));
    }
    Ok(Compositions {
        m,
        last: min_last,
        mask: 0,
    })
}

/// Iterator returned by [`compositions`].
///
/// For each admissible last part `L`, the composition of `m - L` preceding it
/// is encoded by a bitmask of cut points.
#[derive(Clone, Debug)]
pub struct Compositions {
    m: usize,
    last: usize,
    mask: u64,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.last > self.m {
            return None;
        }
        let rest = self.m - self.last;
        let mut parts = Vec::new();
        if rest > 0 {
            let mut run = 1;
            for bit in 0..rest - 1 {
                if self.mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
        }
        parts.push(self.last);

        let count = if rest == 0 { 1 } else { 1u64 << (rest - 1) };
        self.mask += 1;
        if self.mask == count {
            self.mask = 0;
            self.last += 1;
        }
        Some(parts)
    }
}

/// Words generated from one seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenBatch {
    pub seed: Word,
    pub n: usize,
    pub words: BTreeSet<Word>,
}

/// Number of letters after the first considered by the construction for a
/// seed of length `i` grown to length `n` (`i <= n - 2`).
pub fn effective_j(seed: &[u8], n: usize) -> usize {
    j_value(seed).min(n - seed.len() - 1)
}

fn check_seed(seed: &Word, n: usize) -> Result<()> {
    let i = seed.len();
    if i == 0 || i > n || 2 * i < n {
        return Err(Error::InvalidParameter(format!(
            "seed length {i} must satisfy ceil(n/2) <= |seed| <= n for n = {n}"
        )));
    }
    if !is_unbordered(seed)? {
        return Err(Error::BorderedSeed(seed.to_string()));
    }
    Ok(())
}

/// The distinct words `seed · P_1 .. P_k` of length `n` produced from `seed`.
pub fn generate_from_seed(seed: &Word, n: usize) -> Result<GenBatch> {
    check_seed(seed, n)?;
    let i = seed.len();
    let mut words = BTreeSet::new();
    if i == n {
        words.insert(seed.clone());
    } else if i == n - 1 {
        let mut letters = seed.letters().to_vec();
        letters.push(seed[0]);
        words.insert(Word::new(letters, seed.sigma())?);
    } else {
        let j = effective_j(seed, n);
        for parts in compositions(n - i, n - i - j)? {
            let mut letters = Vec::with_capacity(n);
            letters.extend_from_slice(seed);
            for part in parts {
                letters.extend_from_slice(&seed[..part]);
            }
            words.insert(Word::new(letters, seed.sigma())?);
        }
    }
    Ok(GenBatch {
        seed: seed.clone(),
        n,
        words,
    })
}

/// Union of [`generate_from_seed`] over every unbordered seed of length `i`.
pub fn generate_all(i: usize, n: usize, sigma: u32) -> Result<BTreeSet<Word>> {
    if i == 0 || i > n || 2 * i < n {
        return Err(Error::InvalidParameter(format!(
            "seed length {i} must satisfy ceil(n/2) <= i <= n for n = {n}"
        )));
    }
    let mut all = BTreeSet::new();
    for seed in enumerate_unbordered(i, sigma)? {
        all.extend(generate_from_seed(&seed, n)?.words);
    }
    Ok(all)
}
