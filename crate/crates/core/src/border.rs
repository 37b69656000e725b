//! Border arrays, periods and least rotations.
//!
//! A border of `w` is a nonempty proper prefix of `w` that is also a suffix.
//! Positions in the public contracts are 1-indexed.

use crate::error::{Error, Result};

/// Maximal border lengths of every prefix of a word.
///
/// `get(i)` is the length of the longest border of `w[1..=i]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BorderArray {
    values: Vec<usize>,
}

impl BorderArray {
    /// Entry for the prefix of length `i` (1-indexed). Panics if `i` is out of range.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.values
    }

    /// Largest `j` with `get(j) == 0`, i.e. the length of the longest unbordered prefix.
    pub fn rightmost_zero(&self) -> Option<usize> {
        rightmost_zero(&self.values)
    }
}

/// Computes the border array (failure function) in linear time.
pub fn border_array<T: PartialEq>(w: &[T]) -> BorderArray {
    let mut values = Vec::new();
    border_array_into(w, &mut values);
    BorderArray { values }
}

/// Fills `out` with the border array of `w`, reusing its allocation.
/// `out[k]` holds the entry of the prefix of length `k + 1`.
pub fn border_array_into<T: PartialEq>(w: &[T], out: &mut Vec<usize>) {
    out.clear();
    if w.is_empty() {
        return;
    }
    out.reserve(w.len());
    out.push(0);
    let mut b = 0;
    for i in 1..w.len() {
        while b > 0 && w[i] != w[b] {
            b = out[b - 1];
        }
        if w[i] == w[b] {
            b += 1;
        }
        out.push(b);
    }
}

pub(crate) fn rightmost_zero(values: &[usize]) -> Option<usize> {
    values.iter().rposition(|&v| v == 0).map(|k| k + 1)
}

fn nonempty<T>(w: &[T]) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

pub fn maximal_border_length<T: PartialEq>(w: &[T]) -> Result<usize> {
    nonempty(w)?;
    Ok(border_array(w).get(w.len()))
}

/// Smallest `p > 0` with `w[i] == w[i + p]` for every valid `i`; equals `n - B[n]`.
pub fn minimal_period<T: PartialEq>(w: &[T]) -> Result<usize> {
    Ok(w.len() - maximal_border_length(w)?)
}

pub fn is_unbordered<T: PartialEq>(w: &[T]) -> Result<bool> {
    Ok(maximal_border_length(w)? == 0)
}

/// Length of the longest unbordered prefix: the rightmost zero of the border array.
pub fn longest_unbordered_prefix<T: PartialEq>(w: &[T]) -> Result<usize> {
    nonempty(w)?;
    // B[1] = 0, so a zero always exists.
    Ok(border_array(w).rightmost_zero().unwrap_or(1))
}

/// Offset `r` (0-based) such that `w[r..] ++ w[..r]` is the lexicographically
/// least rotation of `w`; the smallest such offset when several tie.
///
/// Linear time. For a primitive word the least rotation is a Lyndon word and
/// therefore unbordered.
pub fn least_rotation<T: Ord>(w: &[T]) -> Result<usize> {
    nonempty(w)?;
    let n = w.len();
    // Two candidate starts `i < j` (in some order) and the length `k` of
    // their common extension. A mismatch at `k` rules out every start in
    // `loser..=loser + k`.
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let a = &w[(i + k) % n];
        let b = &w[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    Ok(i.min(j))
}

/// Rotates `w` left by `r`.
pub fn rotate<T: Clone>(w: &[T], r: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[r..]);
    out.extend_from_slice(&w[..r]);
    out
}
