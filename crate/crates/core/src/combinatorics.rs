//! Exact counts of unbordered words and the associated closed-form bounds.
//!
//! `b(i, σ)` is the number of unbordered words of length `i` over `σ` letters;
//! `b_j(i, σ)` counts those whose first letter differs from each of the next
//! `j` letters.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::border::{border_array_into, is_unbordered};
use crate::error::{Error, Result};
use crate::generator::j_value;
use crate::word::Word;

/// Largest number of words any brute-force enumeration will visit.
pub const ENUMERATION_LIMIT: u64 = 1 << 26;

fn check_sigma(sigma: u32) -> Result<()> {
    if !(2..=255).contains(&sigma) {
        return Err(Error::InvalidSigma(sigma));
    }
    Ok(())
}

/// `σ^len` if it does not exceed [`ENUMERATION_LIMIT`].
pub fn enumeration_size(len: usize, sigma: u32) -> Result<u64> {
    check_sigma(sigma)?;
    let exceeded = Error::GuardExceeded {
        sigma,
        len,
        limit: ENUMERATION_LIMIT,
    };
    let Ok(exp) = u32::try_from(len) else {
        return Err(exceeded);
    };
    match u64::from(sigma).checked_pow(exp) {
        Some(total) if total <= ENUMERATION_LIMIT => Ok(total),
        _ => Err(exceeded),
    }
}

/// Writes the `index`-th word of `A^len` in lexicographic order into `out`.
pub fn word_at_index(mut index: u64, len: usize, sigma: u32, out: &mut Vec<u8>) {
    out.clear();
    out.resize(len, 0);
    for slot in out.iter_mut().rev() {
        *slot = (index % u64::from(sigma)) as u8;
        index /= u64::from(sigma);
    }
}

/// Runs `visit` on every word of `A^len` in parallel and sums the results.
pub(crate) fn par_sum_over_words<F>(len: usize, sigma: u32, visit: F) -> Result<u64>
where
    F: Fn(&[u8], &mut Vec<usize>) -> u64 + Sync,
{
    let total = enumeration_size(len, sigma)?;
    Ok((0..total)
        .into_par_iter()
        .map_init(
            || (Vec::with_capacity(len), Vec::with_capacity(len)),
            |(word, scratch), index| {
                word_at_index(index, len, sigma, word);
                visit(word, scratch)
            },
        )
        .sum())
}

fn unbordered_with_scratch(w: &[u8], scratch: &mut Vec<usize>) -> bool {
    border_array_into(w, scratch);
    scratch.last() == Some(&0)
}

/// `b(i, σ)` by testing every word of `A^i`.
pub fn count_unbordered_brute(i: usize, sigma: u32) -> Result<BigUint> {
    if i < 1 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    let count = par_sum_over_words(i, sigma, |w, scratch| u64::from(unbordered_with_scratch(w, scratch)))?;
    Ok(BigUint::from(count))
}

/// `b(i, σ)` by the recurrence
/// `b(1) = σ`, `b(2k + 1) = σ·b(2k)`, `b(2k) = σ·b(2k - 1) - b(k)`.
///
/// The recurrence follows from building unbordered words by inserting
/// letters in the middle. It is cross-checked against
/// [`count_unbordered_brute`] in the tests.
pub fn count_unbordered(i: usize, sigma: u32) -> Result<BigUint> {
    if i < 1 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    check_sigma(sigma)?;
    Ok(unbordered_counts(i, sigma).pop().expect("nonempty"))
}

/// `[b(1, σ), .., b(max_len, σ)]`.
fn unbordered_counts(max_len: usize, sigma: u32) -> Vec<BigUint> {
    let s = BigUint::from(sigma);
    let mut b: Vec<BigUint> = Vec::with_capacity(max_len);
    b.push(s.clone());
    for len in 2..=max_len {
        let next = if len % 2 == 1 {
            &s * &b[len - 2]
        } else {
            &s * &b[len - 2] - &b[len / 2 - 1]
        };
        b.push(next);
    }
    b
}

/// `b_j(i, σ)` by enumeration.
pub fn count_unbordered_jdiff_brute(i: usize, j: usize, sigma: u32) -> Result<BigUint> {
    if j < 1 || i < j + 1 {
        return Err(Error::InvalidParameter(format!(
            "b_j(i, σ) requires j >= 1 and i >= j + 1, got i = {i}, j = {j}"
        )));
    }
    let count = par_sum_over_words(i, sigma, |w, scratch| {
        u64::from(w[1..=j].iter().all(|&c| c != w[0]) && unbordered_with_scratch(w, scratch))
    })?;
    Ok(BigUint::from(count))
}

/// Histogram of `j_value` over the unbordered words of length `i`:
/// entry `j` counts the unbordered words whose `j_value` is exactly `j`.
pub fn j_value_histogram(i: usize, sigma: u32) -> Result<Vec<u64>> {
    let total = enumeration_size(i, sigma)?;
    if i < 1 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    Ok((0..total)
        .into_par_iter()
        .fold(
            || (vec![0u64; i], Vec::new(), Vec::new()),
            |(mut hist, mut word, mut scratch), index| {
                word_at_index(index, i, sigma, &mut word);
                if unbordered_with_scratch(&word, &mut scratch) {
                    hist[j_value(&word)] += 1;
                }
                (hist, word, scratch)
            },
        )
        .map(|(hist, _, _)| hist)
        .reduce(
            || vec![0u64; i],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        ))
}

/// Exact counts for one alphabet.
///
/// `b` comes from the recurrence; `bj` is filled by enumeration, only for the
/// lengths passed to [`CountTable::compute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub sigma: u32,
    pub max_len: usize,
    b: Vec<BigUint>,
    bj: BTreeMap<(usize, usize), BigUint>,
}

impl CountTable {
    /// `b(i, σ)` for `i <= max_len` and `b_j(i, σ)` for `i <= jdiff_max_len`.
    pub fn compute(sigma: u32, max_len: usize, jdiff_max_len: usize) -> Result<Self> {
        check_sigma(sigma)?;
        if max_len < 1 || jdiff_max_len > max_len {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= max_len and jdiff_max_len <= max_len, got {max_len} and {jdiff_max_len}"
            )));
        }
        let b = unbordered_counts(max_len, sigma);
        let mut bj = BTreeMap::new();
        for i in 2..=jdiff_max_len {
            let hist = j_value_histogram(i, sigma)?;
            // b_j counts words with j_value >= j.
            let mut running = 0u64;
            for j in (1..i).rev() {
                running += hist[j];
                bj.insert((i, j), BigUint::from(running));
            }
        }
        Ok(Self { sigma, max_len, b, bj })
    }

    /// `b(i, σ)` for `1 <= i <= max_len`.
    pub fn b(&self, i: usize) -> Option<&BigUint> {
        i.checked_sub(1).and_then(|k| self.b.get(k))
    }

    /// `b_j(i, σ)`, when it was enumerated.
    pub fn bj(&self, i: usize, j: usize) -> Option<&BigUint> {
        self.bj.get(&(i, j))
    }
}

fn pow(sigma: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(sigma), exp)
}

/// `(σ - 1)^{j+1} σ^{i-j-1} - σ^{i-2}`; may be negative, notably for `σ = 2`.
pub fn lemma1_lower_bound(i: usize, j: usize, sigma: u32) -> Result<BigInt> {
    check_sigma(sigma)?;
    if j < 1 || i < j + 1 {
        return Err(Error::InvalidParameter(format!(
            "bound requires j >= 1 and i >= j + 1, got i = {i}, j = {j}"
        )));
    }
    let lead = num_traits::pow(BigInt::from(sigma - 1), j + 1) * pow(sigma, i - j - 1);
    Ok(lead - pow(sigma, i - 2))
}

/// `σ^i - σ^{i-1} - σ^{i-2}`, a lower bound on `b(i, σ)`.
pub fn corollary2_lower_bound(i: usize, sigma: u32) -> Result<BigInt> {
    check_sigma(sigma)?;
    if i < 2 {
        return Err(Error::InvalidParameter("bound requires i >= 2".into()));
    }
    Ok(pow(sigma, i) - pow(sigma, i - 1) - pow(sigma, i - 2))
}

/// `ξ(σ)` from the expected-MUF lower bound: `ξ(2) = 8`, otherwise
/// `(2σ³ - 2σ²) / ((σ - 2)(σ² - 2σ + 2))`.
pub fn xi(sigma: u32) -> Result<BigRational> {
    check_sigma(sigma)?;
    if sigma == 2 {
        return Ok(BigRational::from_integer(8.into()));
    }
    let s = BigInt::from(sigma);
    let num = BigInt::from(2) * &s * &s * &s - BigInt::from(2) * &s * &s;
    let den = (&s - 2) * (&s * &s - BigInt::from(2) * &s + 2);
    Ok(BigRational::new(num, den))
}

/// `1 - ξ(σ)·σ^{-4}`: the expected MUF length is at least this fraction of
/// `n`, up to an additive constant.
pub fn expected_muf_lower_bound_coeff(sigma: u32) -> Result<BigRational> {
    let s4 = BigRational::from_integer(pow(sigma, 4));
    Ok(BigRational::one() - xi(sigma)? / s4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Up,
    Down,
}

/// Renders `value` with exactly `places` decimals, rounding in the given direction.
pub fn format_decimal(value: &BigRational, places: usize, rounding: Rounding) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = value * BigRational::from_integer(scale.clone());
    let int = match rounding {
        Rounding::Up => scaled.ceil().to_integer(),
        Rounding::Down => scaled.floor().to_integer(),
    };
    let sign = if int.is_negative() { "-" } else { "" };
    let (whole, frac) = int.abs().div_rem(&scale);
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = places)
    }
}

/// `ξ(σ)` rounded up and `1 - ξ(σ)σ^{-4}` rounded down, both to three decimals.
pub fn bound_table_entry(sigma: u32) -> Result<(String, String)> {
    Ok((
        format_decimal(&xi(sigma)?, 3, Rounding::Up),
        format_decimal(&expected_muf_lower_bound_coeff(sigma)?, 3, Rounding::Down),
    ))
}

pub fn to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Unbordered words of length `i`, in lexicographic order.
pub fn enumerate_unbordered(i: usize, sigma: u32) -> Result<impl Iterator<Item = Word>> {
    let total = enumeration_size(i, sigma)?;
    if i < 1 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    let sigma8 = sigma as u8;
    Ok((0..total).filter_map(move |index| {
        let mut letters = Vec::with_capacity(i);
        word_at_index(index, i, sigma, &mut letters);
        is_unbordered(&letters)
            .unwrap_or(false)
            .then(|| Word::new(letters, sigma8).expect("letters below sigma"))
    }))
}

impl CountTable {
    /// `b(i, σ) / σ^i`.
    pub fn density(&self, i: usize) -> Option<BigRational> {
        let b = self.b(i)?;
        Some(BigRational::new(BigInt::from(b.clone()), pow(self.sigma, i)))
    }
}
