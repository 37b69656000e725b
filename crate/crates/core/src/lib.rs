//! Borders, periods and maximal unbordered factors of strings.
//!
//! * [`border`]: border arrays, minimal periods, least rotations.
//! * [`muf`]: maximal unbordered factor algorithms.
//! * [`combinatorics`]: exact counts of unbordered words and closed-form bounds.
//! * [`generator`]: words with long unbordered factors built from unbordered seeds.
//! * [`experiments`]: gap and timing experiments with CSV output.

pub mod border;
pub mod combinatorics;
pub mod error;
pub mod experiments;
pub mod generator;
pub mod muf;
pub mod word;

pub use border::{
    border_array, is_unbordered, least_rotation, longest_unbordered_prefix, maximal_border_length, minimal_period,
    BorderArray,
};
pub use error::{Error, Result};
pub use muf::{assous_pouzet, muf, muf_basic, muf_brute, muf_early_stop, muf_fast_path, MufResult};
pub use word::Word;
