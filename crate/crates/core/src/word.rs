//! The [`Word`] type: a finite string over the alphabet `{0, 1, .., sigma - 1}`.
//!
//! Human-readable I/O maps the letters `a`, `b`, `c`, .. onto `0`, `1`, `2`, ..

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest alphabet that has an ASCII rendering.
pub const ASCII_SIGMA: u8 = 26;

/// A word over a `sigma`-letter alphabet.
///
/// Derefs to `[u8]`, so every algorithm in this crate that takes a slice
/// also accepts a `&Word`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u8>,
    sigma: u8,
}

impl Word {
    pub fn new(letters: Vec<u8>, sigma: u8) -> Result<Self> {
        if sigma == 0 {
            return Err(Error::InvalidSigma(0));
        }
        if let Some((position, &letter)) = letters.iter().enumerate().find(|(_, &l)| l >= sigma) {
            return Err(Error::LetterOutOfRange {
                letter,
                position: position + 1,
                sigma,
            });
        }
        Ok(Self { letters, sigma })
    }

    /// Parses lowercase ASCII letters. When `sigma` is `None` the alphabet is
    /// the smallest one containing every letter (at least 2).
    pub fn from_ascii(text: &str, sigma: Option<u8>) -> Result<Self> {
        let bound = sigma.unwrap_or(ASCII_SIGMA);
        if bound == 0 || bound > ASCII_SIGMA {
            return Err(Error::InvalidSigma(u32::from(bound)));
        }
        let max = char::from(b'a' + bound - 1);
        let mut letters = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            if !ch.is_ascii_lowercase() || ch > max {
                return Err(Error::InvalidCharacter {
                    ch,
                    position: position + 1,
                    max,
                });
            }
            letters.push(ch as u8 - b'a');
        }
        let sigma = match sigma {
            Some(s) => s,
            None => letters.iter().copied().max().map_or(2, |m| (m + 1).max(2)),
        };
        Ok(Self { letters, sigma })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn sigma(&self) -> u8 {
        self.sigma
    }

    /// ASCII rendering, or `None` when the alphabet is larger than 26.
    pub fn to_ascii(&self) -> Option<String> {
        (self.sigma <= ASCII_SIGMA).then(|| self.letters.iter().map(|&l| char::from(b'a' + l)).collect())
    }

    /// 1-indexed factor `w[start..=end]`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start - 1..end].to_vec(),
            sigma: self.sigma,
        }
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.letters
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_ascii() {
            Some(s) => f.write_str(&s),
            None => {
                for (k, l) in self.letters.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::from_ascii(s, None)
    }
}

/// Parses a word list: one word per line, blank lines and surrounding
/// whitespace ignored.
pub fn parse_word_list(text: &str, sigma: Option<u8>) -> Result<Vec<Word>> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| Word::from_ascii(line, sigma))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_round_trip() {
        let w: Word = "abcacbb".parse().unwrap();
        assert_eq!(w.letters(), &[0, 1, 2, 0, 2, 1, 1]);
        assert_eq!(w.sigma(), 3);
        assert_eq!(w.to_string(), "abcacbb");
    }

    #[test]
    fn inferred_sigma_is_at_least_two() {
        assert_eq!(Word::from_ascii("aaa", None).unwrap().sigma(), 2);
        assert_eq!(Word::from_ascii("", None).unwrap().sigma(), 2);
    }

    #[test]
    fn rejects_letter_outside_alphabet() {
        match Word::from_ascii("abca", Some(2)) {
            Err(Error::InvalidCharacter { ch: 'c', position: 3, max: 'b' }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Word::from_ascii("aB", None),
            Err(Error::InvalidCharacter { ch: 'B', .. })
        ));
        assert!(matches!(
            Word::new(vec![0, 3], 3),
            Err(Error::LetterOutOfRange { letter: 3, position: 2, sigma: 3 })
        ));
    }

    #[test]
    fn large_alphabet_renders_numbers() {
        let w = Word::new(vec![0, 30, 2], 40).unwrap();
        assert_eq!(w.to_ascii(), None);
        assert_eq!(w.to_string(), "0 30 2");
    }

    #[test]
    fn word_list_skips_blank_lines() {
        let words = parse_word_list("ab\n\n  aab \n", None).unwrap();
        assert_eq!(words.len(), 2);
        assert_eq!(words[1].to_string(), "aab");
    }

    #[test]
    fn factor_is_one_indexed() {
        let w: Word = "abcde".parse().unwrap();
        assert_eq!(w.factor(2, 4).to_string(), "bcd");
    }
}
