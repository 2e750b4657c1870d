//! Seeded Monte Carlo for both walks.
//!
//! Trial `t` draws from `ChaCha8Rng::seed_from_u64(seed ^ t)`, so each trial
//! is reproducible on its own. Per-trial counts are collected in trial order
//! and reduced sequentially into integer histograms, and every floating point
//! summary is derived from those histograms. The output is therefore
//! bit-identical for any thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::walk::{poisson_moment, reference_rate, Schedule, WalkKind, WalkSpec};
use crate::{Error, Result};

/// A permutation with its inverse, updated in place by left multiplication.
#[derive(Clone, Debug)]
pub struct PermState {
    perm: Vec<u32>,
    inv: Vec<u32>,
    pool: Vec<u32>,
}

impl PermState {
    pub fn identity(n: usize) -> Self {
        let id: Vec<u32> = (0..n as u32).collect();
        PermState { perm: id.clone(), inv: id.clone(), pool: id }
    }

    pub fn reset(&mut self) {
        for (x, (p, q)) in self.perm.iter_mut().zip(self.inv.iter_mut()).enumerate() {
            *p = x as u32;
            *q = x as u32;
        }
    }

    /// One-line form, 0-based.
    pub fn as_slice(&self) -> &[u32] {
        &self.perm
    }

    /// `π ← (a b) π`.
    fn left_transpose(&mut self, a: u32, b: u32) {
        let (pa, pb) = (self.inv[a as usize], self.inv[b as usize]);
        self.perm.swap(pa as usize, pb as usize);
        self.inv.swap(a as usize, b as usize);
    }

    /// `π ← (s_0 s_1 ... s_{i-1}) π`, symbols taken from the front of the pool.
    fn left_cycle(&mut self, len: usize) {
        let positions: Vec<u32> = self.pool[..len].iter().map(|&s| self.inv[s as usize]).collect();
        for m in 0..len {
            let next = self.pool[(m + 1) % len];
            self.perm[positions[m] as usize] = next;
            self.inv[next as usize] = positions[m];
        }
    }

    pub fn step<R: Rng + ?Sized>(&mut self, kind: WalkKind, rng: &mut R) {
        let n = self.perm.len();
        match kind {
            WalkKind::Star => {
                let u = rng.random_range(1..n as u32);
                self.left_transpose(0, u);
            }
            WalkKind::ICycle(i) => {
                // partial Fisher–Yates: a uniform i-subset in uniform order
                for m in 0..i {
                    let pick = rng.random_range(m..n);
                    self.pool.swap(m, pick);
                }
                self.left_cycle(i);
            }
        }
    }
}

/// `state` multiplied on the left by one random step of `kind`.
pub fn sample_step<R: Rng + ?Sized>(state: &[u32], kind: WalkKind, rng: &mut R) -> Vec<u32> {
    let mut s = PermState::identity(state.len());
    s.perm.copy_from_slice(state);
    for (x, &p) in state.iter().enumerate() {
        s.inv[p as usize] = x as u32;
    }
    s.step(kind, rng);
    s.perm
}

/// `hist[l]` = number of cycles of length `l`; `seen` is scratch space.
fn cycle_length_counts(perm: &[u32], seen: &mut Vec<bool>, hist: &mut Vec<usize>) {
    let n = perm.len();
    seen.clear();
    seen.resize(n, false);
    hist.clear();
    hist.resize(n + 1, 0);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        hist[len] += 1;
    }
}

/// Number of cycles of length exactly `j`.
pub fn count_j_cycles(perm: &[u32], j: usize) -> usize {
    let (mut seen, mut hist) = (Vec::new(), Vec::new());
    cycle_length_counts(perm, &mut seen, &mut hist);
    hist.get(j).copied().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    pub spec: WalkSpec,
    /// Schedule that produced `spec.k`; selects the reference Poisson rate.
    pub schedule: Option<Schedule>,
    pub trials: usize,
    pub seed: u64,
    pub tracked_js: Vec<usize>,
}

impl SimConfig {
    pub fn new(spec: WalkSpec, trials: usize, seed: u64, tracked_js: Vec<usize>) -> Result<Self> {
        if trials == 0 {
            return Err(Error::param("trials must be at least 1"));
        }
        if tracked_js.is_empty() {
            return Err(Error::param("at least one cycle length must be tracked"));
        }
        if let Some(&j) = tracked_js.iter().find(|&&j| j == 0 || j > spec.n) {
            return Err(Error::param(format!("tracked cycle length {j} outside 1..={}", spec.n)));
        }
        Ok(SimConfig { spec, schedule: None, trials, seed, tracked_js })
    }

    /// Builds the spec from `schedule` and remembers it for the reference rate.
    pub fn scheduled(
        kind: WalkKind,
        n: usize,
        schedule: Schedule,
        trials: usize,
        seed: u64,
        tracked_js: Vec<usize>,
    ) -> Result<Self> {
        let spec = WalkSpec::new(kind, n, schedule.steps(kind, n))?;
        let mut c = SimConfig::new(spec, trials, seed, tracked_js)?;
        c.schedule = Some(schedule);
        Ok(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "spec": self.spec.to_json(),
            "schedule": self.schedule.map(|s| s.to_json()),
            "trials": self.trials,
            "seed": self.seed,
            "tracked_js": self.tracked_js,
        })
    }
}

/// Statistics of `a_j` over all trials.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleSummary {
    pub j: usize,
    /// `histogram[x]` = trials with exactly `x` cycles of length `j`.
    pub histogram: Vec<u64>,
    /// Empirical `E[a_j^r]`, `r = 1..=4`.
    pub moments: [f64; 4],
    pub reference_rate: Option<f64>,
    /// `(moment_r - poisson_moment(rate, r)) / SE_r`, with the standard error
    /// estimated from the sample itself.
    pub z_scores: Option<[f64; 4]>,
    /// Standard error of the empirical mean.
    pub mean_standard_error: f64,
    pub total_variation: Option<f64>,
}

impl CycleSummary {
    fn from_histogram(j: usize, histogram: Vec<u64>, trials: usize, rate: Option<f64>) -> Self {
        let t = trials as f64;
        // exact integer power sums, then one division each
        let power_sum = |p: u32| -> u128 {
            histogram
                .iter()
                .enumerate()
                .map(|(x, &c)| c as u128 * (x as u128).pow(p))
                .sum()
        };
        let mut moments = [0.0; 4];
        let mut ses = [0.0; 4];
        for r in 1..=4u32 {
            let m = power_sum(r) as f64 / t;
            let m2 = power_sum(2 * r) as f64 / t;
            moments[r as usize - 1] = m;
            let var = (m2 - m * m).max(0.0) * t / (t - 1.0).max(1.0);
            ses[r as usize - 1] = (var / t).sqrt();
        }
        let z_scores = rate.map(|lam| {
            let mut z = [0.0; 4];
            for r in 0..4 {
                let target = poisson_moment(lam, r + 1);
                z[r] = if ses[r] > 0.0 {
                    (moments[r] - target) / ses[r]
                } else if moments[r] == target {
                    0.0
                } else {
                    f64::INFINITY.copysign(moments[r] - target)
                };
            }
            z
        });
        let total_variation = rate.map(|lam| tv_to_poisson(&histogram, trials, lam));
        CycleSummary {
            j,
            histogram,
            moments,
            reference_rate: rate,
            z_scores,
            mean_standard_error: ses[0],
            total_variation,
        }
    }

    pub fn mean(&self) -> f64 {
        self.moments[0]
    }

    /// `|mean - rate| <= k · SE`.
    pub fn mean_within(&self, k: f64) -> Option<bool> {
        self.reference_rate.map(|lam| (self.mean() - lam).abs() <= k * self.mean_standard_error)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "j": self.j,
            "histogram": self.histogram,
            "moments": self.moments,
            "mean_standard_error": self.mean_standard_error,
            "reference_rate": self.reference_rate,
            "reference_moments": self.reference_rate.map(|lam| (1..=4).map(|r| poisson_moment(lam, r)).collect::<Vec<_>>()),
            "z_scores": self.z_scores,
            "total_variation": self.total_variation,
        })
    }
}

/// Poisson(`rate`) pmf on `0..=max`, computed by the usual recurrence.
pub fn poisson_pmf(rate: f64, max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(max + 1);
    let mut p = (-rate).exp();
    for x in 0..=max {
        out.push(p);
        p *= rate / (x + 1) as f64;
    }
    out
}

/// Total variation between the empirical histogram and Poisson(`rate`),
/// truncated at the largest observed count + 10 with the tail lumped.
pub fn tv_to_poisson(histogram: &[u64], trials: usize, rate: f64) -> f64 {
    let max_obs = histogram.iter().rposition(|&c| c > 0).unwrap_or(0);
    let cut = max_obs + 10;
    let pmf = poisson_pmf(rate, cut);
    let mut l1 = 0.0;
    for (x, &p) in pmf.iter().enumerate() {
        let emp = histogram.get(x).copied().unwrap_or(0) as f64 / trials as f64;
        l1 += (emp - p).abs();
    }
    let tail = (1.0 - pmf.iter().sum::<f64>()).max(0.0);
    0.5 * (l1 + tail)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalSummary {
    pub config: SimConfig,
    pub per_j: Vec<CycleSummary>,
}

impl EmpiricalSummary {
    pub fn for_j(&self, j: usize) -> Option<&CycleSummary> {
        self.per_j.iter().find(|s| s.j == j)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "config": self.config.to_json(),
            "statistics": self.per_j.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        })
    }
}

fn run_trial(config: &SimConfig, trial: u64, state: &mut PermState, scratch: &mut (Vec<bool>, Vec<usize>)) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ trial);
    state.reset();
    for _ in 0..config.spec.k {
        state.step(config.spec.kind, &mut rng);
    }
    cycle_length_counts(state.as_slice(), &mut scratch.0, &mut scratch.1);
    config.tracked_js.iter().map(|&j| scratch.1[j]).collect()
}

/// Per-trial counts, `result[t][m]` = `a_{tracked_js[m]}` in trial `t`.
pub fn run_detailed(config: &SimConfig, threads: Option<usize>) -> Result<Vec<Vec<usize>>> {
    let work = || -> Vec<Vec<usize>> {
        (0..config.trials as u64)
            .into_par_iter()
            .map_init(
                || (PermState::identity(config.spec.n), (Vec::new(), Vec::new())),
                |(state, scratch), t| run_trial(config, t, state, scratch),
            )
            .collect()
    };
    match threads {
        None => Ok(work()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::param(format!("thread pool: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

/// Runs every trial and summarizes. `threads = None` uses the global pool.
pub fn run_with_threads(config: &SimConfig, threads: Option<usize>) -> Result<EmpiricalSummary> {
    let per_trial = run_detailed(config, threads)?;
    Ok(summarize(config, &per_trial))
}

pub fn run(config: &SimConfig) -> Result<EmpiricalSummary> {
    run_with_threads(config, None)
}

/// Sequential reduction of per-trial counts, in trial order.
pub fn summarize(config: &SimConfig, per_trial: &[Vec<usize>]) -> EmpiricalSummary {
    let mut hists: Vec<Vec<u64>> = vec![Vec::new(); config.tracked_js.len()];
    for counts in per_trial {
        for (h, &x) in hists.iter_mut().zip(counts) {
            if h.len() <= x {
                h.resize(x + 1, 0);
            }
            h[x] += 1;
        }
    }
    let per_j = config
        .tracked_js
        .iter()
        .zip(hists)
        .map(|(&j, h)| {
            let rate = config.schedule.and_then(|s| reference_rate(config.spec.kind, &s, j));
            CycleSummary::from_histogram(j, h, config.trials, rate)
        })
        .collect();
    EmpiricalSummary { config: config.clone(), per_j }
}

/// CSV dump of per-trial counts: `trial,a_j...`.
pub fn trials_csv(config: &SimConfig, per_trial: &[Vec<usize>]) -> String {
    let mut out = String::from("trial");
    for j in &config.tracked_js {
        out.push_str(&format!(",a_{j}"));
    }
    out.push('\n');
    for (t, counts) in per_trial.iter().enumerate() {
        out.push_str(&t.to_string());
        for c in counts {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
    }
    out
}
