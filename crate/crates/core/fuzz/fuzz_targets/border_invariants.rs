#![no_main]
use libfuzzer_sys::fuzz_target;
use unbordered::border::rotate;
use unbordered::{border_array, is_unbordered, least_rotation, minimal_period};

fuzz_target!(|data: &[u8]| {
    let w: Vec<u8> = data.iter().take(256).map(|b| b % 3).collect();
    let ba = border_array(&w);
    for i in 1..=w.len() {
        assert!(ba.get(i) < i);
        if i < w.len() {
            assert!(ba.get(i + 1) <= ba.get(i) + 1);
        }
    }
    if w.is_empty() {
        return;
    }
    let p = minimal_period(&w).unwrap();
    assert!((0..w.len() - p).all(|i| w[i] == w[i + p]));
    let r = least_rotation(&w).unwrap();
    let rotated = rotate(&w, r);
    assert!((0..w.len()).all(|s| rotated <= rotate(&w, s)));
    if p == w.len() {
        assert!(is_unbordered(&rotated).unwrap());
    }
});
