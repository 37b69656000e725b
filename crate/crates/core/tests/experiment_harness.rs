use unbordered::experiments::{gap_experiment, write_csv, ExperimentConfig, Mode};

#[test]
fn gap_csv_is_deterministic() {
    let mut cfg = ExperimentConfig::new(1, 30, vec![2, 4], Mode::MonteCarlo);
    cfg.trials = 500;
    cfg.seed = 42;
    let mut a = Vec::new();
    let mut b = Vec::new();
    write_csv(&gap_experiment(&cfg).unwrap(), &mut a).unwrap();
    write_csv(&gap_experiment(&cfg).unwrap(), &mut b).unwrap();
    assert_eq!(a, b);
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 61);

    cfg.seed = 43;
    let mut c = Vec::new();
    write_csv(&gap_experiment(&cfg).unwrap(), &mut c).unwrap();
    assert_ne!(b, c);
}

#[test]
fn montecarlo_agrees_with_exhaustive() {
    let exhaustive = gap_experiment(&ExperimentConfig::new(1, 10, vec![2], Mode::Exhaustive)).unwrap();
    let mut cfg = ExperimentConfig::new(1, 10, vec![2], Mode::MonteCarlo);
    cfg.trials = 100_000;
    cfg.seed = 7;
    let sampled = gap_experiment(&cfg).unwrap();
    for (e, s) in exhaustive.iter().zip(&sampled) {
        assert_eq!((e.sigma, e.n), (s.sigma, s.n));
        let tolerance = 3.0 * s.gap_std_err;
        assert!(
            (e.mean_gap - s.mean_gap).abs() <= tolerance,
            "n = {}: exhaustive {} vs sampled {} ± {}",
            e.n,
            e.mean_gap,
            s.mean_gap,
            tolerance
        );
    }
}

#[test]
fn mean_gap_decreases_with_alphabet() {
    let rows = gap_experiment(&ExperimentConfig::new(2, 10, vec![2, 3, 4], Mode::Exhaustive)).unwrap();
    for n in 2..=10 {
        let gaps: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.mean_gap).collect();
        assert_eq!(gaps.len(), 3);
        assert!(gaps[0] >= gaps[1] && gaps[1] >= gaps[2], "n = {n}: {gaps:?}");
    }
}
