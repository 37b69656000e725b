//! Replays the checked-in fuzz corpus seeds on stable.

use std::fs;
use std::path::PathBuf;

use unbordered::word::parse_word_list;
use unbordered::{muf, muf_basic, muf_brute, muf_early_stop, Word};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(dir).unwrap().map(|e| fs::read(e.unwrap().path()).unwrap()).collect();
    assert!(!out.is_empty());
    out.sort();
    out
}

#[test]
fn parse_word_seeds() {
    let mut accepted = 0;
    for data in seeds("parse_word") {
        let (&sigma, rest) = data.split_first().unwrap();
        let text = std::str::from_utf8(rest).unwrap();
        if let Ok(w) = Word::from_ascii(text, (sigma != 0).then_some(sigma)) {
            assert_eq!(Word::from_ascii(&w.to_string(), Some(w.sigma())).unwrap(), w);
            accepted += 1;
        }
    }
    assert_eq!(accepted, 2);
}

#[test]
fn parse_word_list_seeds() {
    let results: Vec<_> = seeds("parse_word_list")
        .iter()
        .map(|d| parse_word_list(std::str::from_utf8(d).unwrap(), None).map(|w| w.len()))
        .collect();
    assert_eq!(results.iter().filter(|r| r.is_err()).count(), 1);
}

#[test]
fn muf_differential_seeds() {
    for data in seeds("muf_differential") {
        let sigma = 2 + data[0] % 4;
        let w: Vec<u8> = data[1..].iter().map(|b| b % sigma).collect();
        let brute = muf_brute(&w).unwrap();
        assert_eq!(muf_basic(&w).unwrap(), brute);
        assert_eq!(muf_early_stop(&w).unwrap(), brute);
        assert_eq!(muf(&w).unwrap().length(), brute.length());
    }
}
