#![no_main]
use libfuzzer_sys::fuzz_target;
use unbordered::Word;

fuzz_target!(|data: &[u8]| {
    let Some((&sigma, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let sigma = (sigma != 0).then_some(sigma);
    if let Ok(w) = Word::from_ascii(text, sigma) {
        assert!(w.letters().iter().all(|&l| l < w.sigma()));
        let rendered = w.to_string();
        assert_eq!(Word::from_ascii(&rendered, Some(w.sigma())).unwrap(), w);
    }
});
