#![no_main]
use libfuzzer_sys::fuzz_target;
use unbordered::{muf, muf_basic, muf_brute, muf_early_stop};

// First byte picks the alphabet size, the rest are letters.
fuzz_target!(|data: &[u8]| {
    let Some((&s, rest)) = data.split_first() else {
        return;
    };
    let sigma = 2 + s % 4;
    let w: Vec<u8> = rest.iter().take(64).map(|b| b % sigma).collect();
    if w.is_empty() {
        assert!(muf(&w).is_err());
        return;
    }
    let brute = muf_brute(&w).unwrap();
    assert_eq!(muf_basic(&w).unwrap(), brute);
    assert_eq!(muf_early_stop(&w).unwrap(), brute);
    let fast = muf(&w).unwrap();
    assert_eq!(fast.length(), brute.length());
    assert!(unbordered::is_unbordered(&w[fast.start - 1..fast.end]).unwrap());
});
