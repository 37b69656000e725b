use std::process::Command;

use unbordered::{muf_brute, Word};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_unbordered"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn muf_border_array_period() {
    assert_eq!(run(&["muf", "ababa"]), (0, "1 2 2\n".into(), String::new()));
    assert_eq!(run(&["border-array", "ababa"]).1, "0 0 1 2 3\n");
    assert_eq!(run(&["period", "abaababaaababaaba"]).1, "11\n");
    assert_eq!(run(&["muf", "--algorithm", "brute", "abaababaaababaaba"]).1, "2 10 9\n");
}

#[test]
fn counts() {
    assert_eq!(run(&["count", "--len", "8", "--sigma", "2"]).1, "74\n");
    assert_eq!(run(&["count", "--len", "8", "--sigma", "2", "--brute"]).1, "74\n");
    assert_eq!(run(&["count", "--len", "2", "--sigma", "2", "--jdiff", "1"]).1, "2\n");
    assert_eq!(run(&["count", "--len", "30", "--sigma", "2", "--brute"]).0, 1);
}

#[test]
fn bounds_output() {
    let (code, out, _) = run(&["bounds", "--sigma", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "xi 3.922\ncoefficient 0.993\n");
    let (_, out, _) = run(&["bounds", "--sigma", "3", "--n", "5", "--j", "2"]);
    assert_eq!(out, "xi 7.200\ncoefficient 0.911\ncorollary2 135\nlemma1 2 45\n");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = run(&["muf", "abz", "--sigma", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("'z'"), "{err}");
    let (code, _, err) = run(&["muf", "aB"]);
    assert_eq!(code, 2);
    assert!(err.contains("'B'"), "{err}");
    assert_eq!(run(&["muf", "--bogus", "ab"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["generate", "--n", "4"]).0, 2);
    assert_eq!(run(&["generate", "--seed-word", "aba", "--n", "4"]).0, 2);
    assert_eq!(run(&["experiment", "--mode", "sideways"]).0, 2);
}

#[test]
fn runtime_errors_exit_1() {
    let (code, _, err) = run(&["muf", "--input", "/nonexistent/words.txt"]);
    assert_eq!(code, 1);
    assert!(err.contains("/nonexistent/words.txt"));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("no/such/dir.csv");
    let (code, _, err) = run(&["experiment", "--n-max", "2", "--sigmas", "2", "--trials", "5", "--out", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("dir.csv"));
}

#[test]
fn batch_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("words.txt");
    std::fs::write(&path, "ababa\n\naaabab\naaaa\n").unwrap();
    let (code, out, _) = run(&["muf", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 2 2\n1 6 6\n1 1 1\n");
}

#[test]
fn generated_words_round_trip_through_muf() {
    let (code, out, _) = run(&["generate", "--seed-word", "abbbb", "--n", "9"]);
    assert_eq!(code, 0);
    let words: Vec<&str> = out.lines().collect();
    assert_eq!(words.len(), 8);
    for w in words {
        let (code, muf_out, _) = run(&["muf", w]);
        assert_eq!(code, 0);
        let len: usize = muf_out.split_whitespace().nth(2).unwrap().parse().unwrap();
        assert!(len >= 5);
        assert_eq!(len, muf_brute(&w.parse::<Word>().unwrap()).unwrap().length());
    }
    let (_, all, _) = run(&["generate", "--seed-len", "4", "--n", "6", "--sigma", "2"]);
    assert_eq!(all.lines().count(), 8);
}

#[test]
fn experiment_and_bench_csv() {
    let (code, out, err) = run(&["experiment", "--n-min", "1", "--n-max", "3", "--sigmas", "3,2", "--trials", "20"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "sigma,n,trials,mean_gap,mean_muf");
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("2,1,20,"));
    assert!(err.contains("sigma=3 n=3"));

    let (code, out, _) = run(&["experiment", "--mode", "exhaustive", "--n-min", "2", "--n-max", "2", "--sigmas", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "sigma,n,trials,mean_gap,mean_muf\n2,2,4,0.500000,1.50000\n");

    let (code, out, _) = run(&["bench", "--lengths", "5,10", "--sigmas", "2", "--trials", "30"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("sigma,n,trials,mean_gap,mean_muf,time_basic,time_early_stop\n"));
    assert_eq!(out.lines().count(), 3);
    assert_eq!(run(&["bench", "--algorithms", "basic", "--lengths", "5", "--sigmas", "2"]).0, 2);
}

#[test]
fn in_process_entry_point() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = unbordered_cli::run(["unbordered", "period", "ababa"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, b"2\n");
    let code = unbordered_cli::run(["unbordered", "--help"], &mut out, &mut err);
    assert_eq!(code, 0);
}
