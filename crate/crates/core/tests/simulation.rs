use cycle_mixer::sim::{count_j_cycles, run, run_detailed, sample_step, tv_to_poisson, SimConfig};
use cycle_mixer::walk::{steps_nlogn, WalkKind, WalkSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn single_star_steps_on_s4_are_uniform_over_transpositions() {
    let trials = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let id: Vec<u32> = (0..4).collect();
    let mut counts = [0usize; 4];
    for _ in 0..trials {
        let p = sample_step(&id, WalkKind::Star, &mut rng);
        let moved = (1..4).find(|&u| p[u] == 0).expect("symbol 1 moves");
        counts[moved] += 1;
    }
    let p = 1.0 / 3.0;
    let sd = (trials as f64 * p * (1.0 - p)).sqrt();
    for &c in &counts[1..] {
        assert!((c as f64 - trials as f64 * p).abs() <= 3.0 * sd, "{counts:?}");
    }
}

#[test]
fn zero_steps_is_a_point_mass_at_the_identity() {
    let cfg = SimConfig::new(WalkSpec::icycle(3, 12, 0).unwrap(), 50, 1, vec![1, 2]).unwrap();
    let s = run(&cfg).unwrap();
    assert_eq!(s.for_j(1).unwrap().histogram[12], 50);
    assert_eq!(s.for_j(2).unwrap().histogram, vec![50]);
}

#[test]
fn histograms_sum_to_trials() {
    let cfg = SimConfig::new(WalkSpec::star(25, 40).unwrap(), 777, 5, vec![1, 2, 3, 5]).unwrap();
    let s = run(&cfg).unwrap();
    for c in &s.per_j {
        assert_eq!(c.histogram.iter().sum::<u64>(), 777);
    }
    let per_trial = run_detailed(&cfg, Some(2)).unwrap();
    assert_eq!(per_trial.len(), 777);
}

#[test]
fn bad_configs_are_rejected() {
    let spec = WalkSpec::star(10, 3).unwrap();
    assert!(SimConfig::new(spec, 0, 0, vec![1]).is_err());
    assert!(SimConfig::new(spec, 10, 0, vec![]).is_err());
    assert!(SimConfig::new(spec, 10, 0, vec![11]).is_err());
}

#[test]
fn count_j_cycles_examples() {
    // (1 2)(3 4 5) in S_6, zero-based
    let p = [1u32, 0, 3, 4, 2, 5];
    assert_eq!(count_j_cycles(&p, 1), 1);
    assert_eq!(count_j_cycles(&p, 2), 1);
    assert_eq!(count_j_cycles(&p, 3), 1);
}

#[test]
fn long_walks_reach_the_uniform_poisson_limits() {
    let n = 100;
    let k = (3.0 * n as f64 * (n as f64).ln()).ceil() as usize;
    let cfg = SimConfig::new(WalkSpec::star(n, k).unwrap(), 100_000, 2024, vec![1, 2, 3]).unwrap();
    let s = run(&cfg).unwrap();
    for c in &s.per_j {
        let tv = tv_to_poisson(&c.histogram, cfg.trials, 1.0 / c.j as f64);
        assert!(tv <= 0.02, "j={} TV {tv}", c.j);
    }
}

#[test]
fn two_cycles_mix_before_fixed_points() {
    let n = 200;
    let cfg = SimConfig::new(WalkSpec::star(n, n).unwrap(), 20_000, 5, vec![1, 2]).unwrap();
    let s = run(&cfg).unwrap();
    let two = s.for_j(2).unwrap();
    let tv2 = tv_to_poisson(&two.histogram, cfg.trials, (1.0 - (-2.0f64).exp()) / 2.0);
    assert!(tv2 <= 0.05, "2-cycles TV {tv2}");
    let fixed = s.for_j(1).unwrap();
    for c in [0.0f64, 0.25, 0.5, 1.0, 2.0, 4.0] {
        let tv1 = tv_to_poisson(&fixed.histogram, cfg.trials, 1.0 + (-c).exp());
        assert!(tv1 > 0.05, "fixed points already close to Poisson(1+e^-{c}): {tv1}");
    }
}

#[test]
fn nlogn_schedule_matches_step_count() {
    assert_eq!(steps_nlogn(200, 1.0), 1259);
}
