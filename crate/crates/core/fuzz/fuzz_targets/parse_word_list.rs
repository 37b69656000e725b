#![no_main]
use libfuzzer_sys::fuzz_target;
use unbordered::word::parse_word_list;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(words) = parse_word_list(text, None) {
            for w in &words {
                assert!(!w.is_empty());
                let _ = unbordered::muf(w);
            }
        }
    }
});
