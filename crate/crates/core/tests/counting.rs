use num_bigint::{BigInt, BigUint};
use unbordered::combinatorics::{
    corollary2_lower_bound, count_unbordered, count_unbordered_brute, count_unbordered_jdiff_brute,
    enumerate_unbordered, lemma1_lower_bound, CountTable,
};
use unbordered::is_unbordered;

#[test]
fn recurrence_matches_enumeration() {
    for (sigma, max_len) in [(2, 16), (3, 10), (4, 8)] {
        for i in 1..=max_len {
            assert_eq!(
                count_unbordered(i, sigma).unwrap(),
                count_unbordered_brute(i, sigma).unwrap(),
                "b({i}, {sigma})"
            );
        }
    }
}

#[test]
fn binary_counts() {
    let expected = [2u32, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116, 2232, 4424, 8848, 17622];
    for (k, &b) in expected.iter().enumerate() {
        assert_eq!(count_unbordered(k + 1, 2).unwrap(), BigUint::from(b));
    }
}

#[test]
fn density_is_nonincreasing() {
    for sigma in 2..=5 {
        let t = CountTable::compute(sigma, 60, 0).unwrap();
        for i in 1..t.max_len {
            assert!(t.density(i + 1).unwrap() <= t.density(i).unwrap(), "σ = {sigma}, i = {i}");
        }
    }
}

#[test]
fn corollary2_holds() {
    for sigma in 2..=6 {
        for i in 2..=60 {
            let b = BigInt::from(count_unbordered(i, sigma).unwrap());
            assert!(b >= corollary2_lower_bound(i, sigma).unwrap(), "σ = {sigma}, i = {i}");
        }
    }
}

#[test]
fn lemma1_holds() {
    for (sigma, max_len) in [(2, 14), (3, 9), (4, 7), (5, 6)] {
        let t = CountTable::compute(sigma, max_len, max_len).unwrap();
        for i in 2..=max_len {
            for j in 1..i {
                let bj = BigInt::from(t.bj(i, j).unwrap().clone());
                let bound = lemma1_lower_bound(i, j, sigma).unwrap().max(BigInt::from(0));
                assert!(bj >= bound, "σ = {sigma}, i = {i}, j = {j}");
                assert!(t.bj(i, j).unwrap() <= t.b(i).unwrap());
            }
        }
    }
}

#[test]
fn jdiff_brute_matches_table() {
    let t = CountTable::compute(3, 6, 6).unwrap();
    for i in 2..=6 {
        for j in 1..i {
            assert_eq!(&count_unbordered_jdiff_brute(i, j, 3).unwrap(), t.bj(i, j).unwrap());
        }
    }
}

#[test]
fn enumeration_stream() {
    for (sigma, max_len) in [(2u32, 12), (3, 7)] {
        for i in 1..=max_len {
            let words: Vec<_> = enumerate_unbordered(i, sigma).unwrap().collect();
            assert_eq!(BigUint::from(words.len()), count_unbordered_brute(i, sigma).unwrap());
            assert!(words.windows(2).all(|p| p[0] < p[1]), "lexicographic and distinct");
            assert!(words.iter().all(|w| w.len() == i && is_unbordered(w).unwrap()));
        }
    }
}
