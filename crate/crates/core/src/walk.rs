//! Exact `k`-step moments of cycle counts for the star-transposition and
//! random `i`-cycle walks, plus the limiting formulas they converge to.
//!
//! For a class function `f = Σ c_λ χ^λ`, the expectation after `k` steps from
//! the identity is `Σ c_λ Tr(P̂(S^λ)^k)`. Both walks have closed-form traces:
//!
//! - star: `Σ_i d_{λ^i} ((λ_i - i)/(n-1))^k` over inner corners `λ^i`;
//! - `i`-cycle: `d_λ (χ^λ(i,1^{n-i}) / d_λ)^k`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use crate::bratteli::{ajr_decomposition, power_decomposition};
use crate::characters::{character_value, ClassFunctionDecomposition, CycleType};
use crate::numbers::{factorial, ratio_to_f64, stirling2_table};
use crate::partition::Partition;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WalkKind {
    /// Multiply by `(1 u)`, `u` uniform in `2..=n`.
    Star,
    /// Multiply by a uniform `i`-cycle.
    ICycle(usize),
}

impl WalkKind {
    /// Cycle length of one step: 2 for the star walk.
    pub fn step_length(&self) -> usize {
        match self {
            WalkKind::Star => 2,
            WalkKind::ICycle(i) => *i,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WalkKind::Star => "star",
            WalkKind::ICycle(_) => "icycle",
        }
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkKind::Star => write!(f, "star"),
            WalkKind::ICycle(i) => write!(f, "icycle({i})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WalkSpec {
    pub kind: WalkKind,
    pub n: usize,
    pub k: usize,
}

impl WalkSpec {
    pub fn new(kind: WalkKind, n: usize, k: usize) -> Result<Self> {
        match kind {
            WalkKind::Star if n < 2 => {
                return Err(Error::param(format!("star walk needs n >= 2, got {n}")))
            }
            WalkKind::ICycle(i) if i < 2 || i > n => {
                return Err(Error::param(format!("i-cycle walk needs 2 <= i <= n, got i = {i}, n = {n}")))
            }
            _ => {}
        }
        Ok(WalkSpec { kind, n, k })
    }

    pub fn star(n: usize, k: usize) -> Result<Self> {
        WalkSpec::new(WalkKind::Star, n, k)
    }

    pub fn icycle(i: usize, n: usize, k: usize) -> Result<Self> {
        WalkSpec::new(WalkKind::ICycle(i), n, k)
    }

    pub fn with_steps(self, k: usize) -> Self {
        WalkSpec { k, ..self }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self.kind {
            WalkKind::Star => json!({"walk": "star", "n": self.n, "k": self.k}),
            WalkKind::ICycle(i) => json!({"walk": "icycle", "i": i, "n": self.n, "k": self.k}),
        }
    }
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn int(d: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(d.into())
}

/// `Σ_i d_{λ^i} ((λ_i - i)/(n-1))^k` over the inner corners of `λ`.
pub fn star_trace(lambda: &Partition, k: usize) -> Result<BigRational> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::param(format!("star walk needs n >= 2, got {n}")));
    }
    let mut acc = BigRational::zero();
    for (row, sub) in lambda.inner_corner_removals()? {
        let eig = ratio(lambda.part(row - 1) as i64 - row as i64, n as i64 - 1);
        acc += int(sub.dimension()) * num_traits::pow(eig, k);
    }
    Ok(acc)
}

/// `χ^λ(i,1^{n-i}) / d_λ`.
pub fn icycle_ratio(lambda: &Partition, i: usize) -> Result<BigRational> {
    let n = lambda.size();
    if i < 2 || i > n {
        return Err(Error::param(format!("need 2 <= i <= n, got i = {i}, n = {n}")));
    }
    let chi = character_value(lambda, &CycleType::single_cycle(i, n)?)?;
    Ok(BigRational::new(chi, BigInt::from(lambda.dimension())))
}

/// `d_λ (χ^λ(i,1^{n-i}) / d_λ)^k`.
pub fn icycle_trace(lambda: &Partition, i: usize, k: usize) -> Result<BigRational> {
    let r = icycle_ratio(lambda, i)?;
    Ok(int(lambda.dimension()) * num_traits::pow(r, k))
}

pub fn trace(lambda: &Partition, spec: &WalkSpec) -> Result<BigRational> {
    if lambda.size() != spec.n {
        return Err(Error::SizeMismatch { expected: spec.n, actual: lambda.size() });
    }
    match spec.kind {
        WalkKind::Star => star_trace(lambda, spec.k),
        WalkKind::ICycle(i) => icycle_trace(lambda, i, spec.k),
    }
}

/// `E_{P^{*k}}[f] = Σ c_λ Tr(P̂(S^λ)^k)`.
pub fn exact_moment(decomp: &ClassFunctionDecomposition, spec: &WalkSpec) -> Result<BigRational> {
    if decomp.n != spec.n {
        return Err(Error::SizeMismatch { expected: spec.n, actual: decomp.n });
    }
    let mut acc = BigRational::zero();
    for (lambda, c) in decomp.terms() {
        acc += c * trace(lambda, spec)?;
    }
    Ok(acc)
}

/// Decomposition of `(a_j)^r` on `S_n`: the closed-form range when
/// `n >= 2rj`, path counting otherwise (any `n > j`).
pub fn moment_decomposition(n: usize, j: usize, r: usize) -> Result<ClassFunctionDecomposition> {
    if j == 0 {
        return Err(Error::param("j must be positive"));
    }
    if n >= 2 * r * j {
        ajr_decomposition(n, j, r)
    } else if n > j {
        power_decomposition(n, j, r)
    } else {
        Err(Error::param(format!("moments of a_{j} need n > j, got n = {n}")))
    }
}

/// `E[(a_j)^r]` after `spec.k` steps.
pub fn jcycle_moment(spec: &WalkSpec, j: usize, r: usize) -> Result<BigRational> {
    exact_moment(&moment_decomposition(spec.n, j, r)?, spec)
}

/// `Σ_a S(r,a) rate^a`.
pub fn poisson_moment(rate: f64, r: usize) -> f64 {
    let row = stirling2_table(r).swap_remove(r);
    row.iter()
        .enumerate()
        .map(|(a, s)| big_to_f64(s) * rate.powi(a as i32))
        .sum()
}

fn big_to_f64(x: &num_bigint::BigUint) -> f64 {
    ratio_to_f64(&BigRational::from_integer(BigInt::from(x.clone())))
}

/// `j^{-r} Σ_t (-1)^t e^{-tjc} c^j_{t,r}`, the cluster-by-cluster limit of
/// `E[(a_j)^r]` after `cn` star steps or `cn/i` random `i`-cycles.
pub fn limiting_jcycle_moment(j: usize, r: usize, c: f64) -> f64 {
    let jf = j as f64;
    let mut acc = 0.0;
    for t in 0..=r {
        let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
        let ctr = big_to_f64(&crate::bratteli::cluster_coeff(t, r, j));
        acc += sign * (-(t as f64) * jf * c).exp() * ctr;
    }
    acc / jf.powi(r as i32)
}

/// `Σ_a S(r,a)(1 + e^{-c})^a`: fixed points after `n log n + cn` star steps.
pub fn limiting_fixedpoint_moment(r: usize, c: f64) -> f64 {
    poisson_moment(1.0 + (-c).exp(), r)
}

/// `⌊n ln n + cn⌋`, clamped at 0.
pub fn steps_nlogn(n: usize, c: f64) -> usize {
    let nf = n as f64;
    (nf * nf.ln() + c * nf).floor().max(0.0) as usize
}

/// `⌊cn⌋`, clamped at 0.
pub fn steps_linear(n: usize, c: f64) -> usize {
    (c * n as f64).floor().max(0.0) as usize
}

/// Step-count rules used by the experiments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Schedule {
    Steps(usize),
    /// `⌊n ln n + cn⌋`.
    NLogN { c: f64 },
    /// `⌊cn⌋`.
    Linear { c: f64 },
    /// `⌊cn/i⌋` for `i`-cycles, `⌊cn⌋` for the star walk.
    PerCycleLength { c: f64 },
    /// `⌈m n ln n⌉`: well past mixing.
    Saturated { multiplier: f64 },
}

impl Schedule {
    /// Names accepted on the command line: `steps`, `nlogn`, `linear`,
    /// `per-cycle`, `saturated`.
    pub fn from_name(name: &str, c: f64) -> Result<Schedule> {
        if !c.is_finite() {
            return Err(Error::param(format!("schedule constant must be finite, got {c}")));
        }
        match name {
            "steps" => {
                if c < 0.0 || c.fract() != 0.0 {
                    return Err(Error::param("steps schedule needs a nonnegative integer"));
                }
                Ok(Schedule::Steps(c as usize))
            }
            "nlogn" => Ok(Schedule::NLogN { c }),
            "linear" => Ok(Schedule::Linear { c }),
            "per-cycle" | "percycle" => Ok(Schedule::PerCycleLength { c }),
            "saturated" => {
                if c <= 0.0 {
                    return Err(Error::param("saturated schedule needs a positive multiplier"));
                }
                Ok(Schedule::Saturated { multiplier: c })
            }
            other => Err(Error::param(format!(
                "unknown schedule {other:?} (expected steps, nlogn, linear, per-cycle, saturated)"
            ))),
        }
    }

    pub fn steps(&self, kind: WalkKind, n: usize) -> usize {
        match *self {
            Schedule::Steps(k) => k,
            Schedule::NLogN { c } => steps_nlogn(n, c),
            Schedule::Linear { c } => steps_linear(n, c),
            Schedule::PerCycleLength { c } => match kind {
                WalkKind::Star => steps_linear(n, c),
                WalkKind::ICycle(i) => (c * n as f64 / i as f64).floor().max(0.0) as usize,
            },
            Schedule::Saturated { multiplier } => {
                let nf = n as f64;
                (multiplier * nf * nf.ln()).ceil() as usize
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match *self {
            Schedule::Steps(k) => json!({"schedule": "steps", "k": k}),
            Schedule::NLogN { c } => json!({"schedule": "nlogn", "c": c}),
            Schedule::Linear { c } => json!({"schedule": "linear", "c": c}),
            Schedule::PerCycleLength { c } => json!({"schedule": "per-cycle", "c": c}),
            Schedule::Saturated { multiplier } => json!({"schedule": "saturated", "multiplier": multiplier}),
        }
    }
}

/// Limiting Poisson rate of `a_j` under `kind` run for `schedule`, when one
/// is known.
pub fn reference_rate(kind: WalkKind, schedule: &Schedule, j: usize) -> Option<f64> {
    let jf = j as f64;
    match (kind, *schedule) {
        (_, Schedule::Saturated { .. }) => Some(1.0 / jf),
        (WalkKind::Star, Schedule::NLogN { c }) if j == 1 => Some(1.0 + (-c).exp()),
        (WalkKind::Star, Schedule::Linear { c } | Schedule::PerCycleLength { c }) if j >= 2 => {
            Some((1.0 - (-jf * c).exp()) / jf)
        }
        (WalkKind::ICycle(_), Schedule::PerCycleLength { c }) if j >= 2 => {
            Some((1.0 - (-jf * c).exp()) / jf)
        }
        (WalkKind::ICycle(i), Schedule::Linear { c }) if j >= 2 => {
            Some((1.0 - (-(i as f64) * jf * c).exp()) / jf)
        }
        _ => None,
    }
}

/// Limiting `r`-th moment of `a_j`, via the cluster formulas.
pub fn limit_moment(kind: WalkKind, schedule: &Schedule, j: usize, r: usize) -> Option<f64> {
    match (kind, *schedule) {
        (_, Schedule::Saturated { .. }) => Some(poisson_moment(1.0 / j as f64, r)),
        (WalkKind::Star, Schedule::NLogN { c }) if j == 1 => Some(limiting_fixedpoint_moment(r, c)),
        (WalkKind::Star, Schedule::Linear { c } | Schedule::PerCycleLength { c })
        | (WalkKind::ICycle(_), Schedule::PerCycleLength { c })
            if j >= 2 =>
        {
            Some(limiting_jcycle_moment(j, r, c))
        }
        (WalkKind::ICycle(i), Schedule::Linear { c }) if j >= 2 => {
            Some(limiting_jcycle_moment(j, r, i as f64 * c))
        }
        _ => None,
    }
}

/// One row of the moments table.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentReport {
    pub spec: WalkSpec,
    pub j: usize,
    pub r: usize,
    pub exact_moment: BigRational,
    /// Limit under the schedule that produced `spec.k`, if known.
    pub limit_moment: Option<f64>,
    /// `r`-th moment of Poisson(1/j), the stationary limit.
    pub poisson_reference: f64,
}

impl MomentReport {
    pub fn compute(spec: WalkSpec, j: usize, r: usize, schedule: Option<&Schedule>) -> Result<Self> {
        let exact_moment = jcycle_moment(&spec, j, r)?;
        Ok(MomentReport {
            spec,
            j,
            r,
            exact_moment,
            limit_moment: schedule.and_then(|s| limit_moment(spec.kind, s, j, r)),
            poisson_reference: poisson_moment(1.0 / j as f64, r),
        })
    }

    pub fn exact_f64(&self) -> f64 {
        ratio_to_f64(&self.exact_moment)
    }

    pub const CSV_HEADER: &'static str = "n,j,r,k,exact_moment,limit_moment,poisson_reference";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.spec.n,
            self.j,
            self.r,
            self.spec.k,
            self.exact_moment,
            self.limit_moment.map(|x| x.to_string()).unwrap_or_default(),
            self.poisson_reference
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "spec": self.spec.to_json(),
            "j": self.j,
            "r": self.r,
            "exact_moment": self.exact_moment.to_string(),
            "exact_moment_f64": self.exact_f64(),
            "limit_moment": self.limit_moment,
            "poisson_reference": self.poisson_reference,
        })
    }
}

/// Finite-`n` quantities from the asymptotic lemmas, each paired with its
/// claimed limit. Throughout `λ = (n - t, λ̄)` with `t = |λ̄|`.
#[derive(Clone, Debug, PartialEq)]
pub enum AsymptoticLemma {
    /// `d_{λ^1} / n^t → d_{λ̄}/t!`.
    FirstRowDimension { bar: Partition },
    /// Star trace after `⌊n ln n + cn⌋` steps `→ e^{-tc} d_{λ̄}/t!`.
    StarTraceNLogN { bar: Partition, c: f64 },
    /// Star trace after `⌊cn⌋` steps, divided by `d_{λ^1}`, `→ e^{-tc}`.
    StarTraceLinear { bar: Partition, c: f64 },
    /// `χ^λ(i,1^{n-i})/d_λ` against `1 - it/n`; the gap is `O(1/n²)`.
    CharacterRatio { bar: Partition, i: usize },
    /// `(χ^λ(i,1^{n-i})/d_λ)^{⌊cn/i⌋} → e^{-tc}`.
    ICycleTrace { bar: Partition, i: usize, c: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub finite: f64,
    pub limit: f64,
}

impl ConvergenceRow {
    pub fn gap(&self) -> f64 {
        (self.finite - self.limit).abs()
    }
}

fn limit_dim_over_factorial(bar: &Partition) -> f64 {
    ratio_to_f64(&BigRational::new(
        BigInt::from(bar.dimension()),
        BigInt::from(factorial(bar.size())),
    ))
}

impl AsymptoticLemma {
    fn bar(&self) -> &Partition {
        match self {
            AsymptoticLemma::FirstRowDimension { bar }
            | AsymptoticLemma::StarTraceNLogN { bar, .. }
            | AsymptoticLemma::StarTraceLinear { bar, .. }
            | AsymptoticLemma::CharacterRatio { bar, .. }
            | AsymptoticLemma::ICycleTrace { bar, .. } => bar,
        }
    }

    /// Evaluates the finite quantity at `n`; needs `n - t > t`.
    pub fn evaluate(&self, n: usize) -> Result<ConvergenceRow> {
        let bar = self.bar();
        let t = bar.size();
        if n <= 2 * t || n < 2 {
            return Err(Error::param(format!("need n > 2t (n = {n}, t = {t})")));
        }
        let lambda = Partition::with_ambient(n, bar)?;
        let lambda1 = Partition::with_ambient(n - 1, bar)?;
        let tf = t as f64;
        let row = match self {
            AsymptoticLemma::FirstRowDimension { .. } => {
                let q = BigRational::new(
                    BigInt::from(lambda1.dimension()),
                    BigInt::from(n).pow(t as u32),
                );
                ConvergenceRow { n, finite: ratio_to_f64(&q), limit: limit_dim_over_factorial(bar) }
            }
            AsymptoticLemma::StarTraceNLogN { c, .. } => {
                let tr = star_trace(&lambda, steps_nlogn(n, *c))?;
                ConvergenceRow {
                    n,
                    finite: ratio_to_f64(&tr),
                    limit: (-tf * c).exp() * limit_dim_over_factorial(bar),
                }
            }
            AsymptoticLemma::StarTraceLinear { c, .. } => {
                let tr = star_trace(&lambda, steps_linear(n, *c))? / int(lambda1.dimension());
                ConvergenceRow { n, finite: ratio_to_f64(&tr), limit: (-tf * c).exp() }
            }
            AsymptoticLemma::CharacterRatio { i, .. } => ConvergenceRow {
                n,
                finite: ratio_to_f64(&icycle_ratio(&lambda, *i)?),
                limit: 1.0 - (*i as f64) * tf / n as f64,
            },
            AsymptoticLemma::ICycleTrace { i, c, .. } => {
                let k = Schedule::PerCycleLength { c: *c }.steps(WalkKind::ICycle(*i), n);
                let q = num_traits::pow(icycle_ratio(&lambda, *i)?, k);
                ConvergenceRow { n, finite: ratio_to_f64(&q), limit: (-tf * c).exp() }
            }
        };
        Ok(row)
    }
}

/// Evaluates `lemma` on every grid point (in parallel), rows in grid order.
pub fn asymptotic_checks(lemma: &AsymptoticLemma, n_grid: &[usize]) -> Result<Vec<ConvergenceRow>> {
    if n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param("n grid must be strictly increasing"));
    }
    n_grid.par_iter().map(|&n| lemma.evaluate(n)).collect()
}

/// `a_1(ε)^r = n^r`, and `0` for `j >= 2` with `r >= 1`.
pub fn identity_value(n: usize, j: usize, r: usize) -> BigRational {
    let a = if j == 1 { n } else { 0 };
    num_traits::pow(int(a), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{aj_decomposition, evaluate};
    use crate::p;
    use crate::partition::partitions_of;
    use num_traits::One;

    #[test]
    fn star_trace_examples() {
        for n in 2..=9 {
            for k in 0..5 {
                assert_eq!(star_trace(&Partition::row(n), k).unwrap(), BigRational::one());
            }
        }
        assert_eq!(star_trace(&p![6, 1], 1).unwrap(), int(4));
        for lambda in partitions_of(7) {
            assert_eq!(star_trace(&lambda, 0).unwrap(), int(lambda.dimension()));
        }
        assert!(star_trace(&p![1], 1).is_err());
    }

    #[test]
    fn icycle_trace_examples() {
        for n in 3..=8 {
            assert_eq!(icycle_trace(&Partition::row(n), 3, 4).unwrap(), BigRational::one());
            let std = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(icycle_trace(&std, 2, 1).unwrap(), int(n as i64 - 3));
            assert_eq!(icycle_trace(&std, 2, 0).unwrap(), int(n as i64 - 1));
        }
        assert!(icycle_trace(&p![3, 1], 5, 1).is_err());
        assert!(icycle_trace(&p![3, 1], 1, 1).is_err());
    }

    #[test]
    fn exact_moment_examples() {
        let d = aj_decomposition(5, 2).unwrap();
        assert_eq!(exact_moment(&d, &WalkSpec::star(5, 1).unwrap()).unwrap(), int(1));
        assert_eq!(exact_moment(&d, &WalkSpec::icycle(3, 5, 1).unwrap()).unwrap(), int(0));
        let e = evaluate(&d, &CycleType::identity(5)).unwrap();
        assert_eq!(exact_moment(&d, &WalkSpec::star(5, 0).unwrap()).unwrap(), e);
        assert!(exact_moment(&d, &WalkSpec::star(6, 0).unwrap()).is_err());
    }

    #[test]
    fn identity_normalisation() {
        for n in 3..=8 {
            for j in 1..=2 {
                for r in 1..=3 {
                    if n <= j {
                        continue;
                    }
                    for spec in [WalkSpec::star(n, 0).unwrap(), WalkSpec::icycle(2, n, 0).unwrap()] {
                        assert_eq!(jcycle_moment(&spec, j, r).unwrap(), identity_value(n, j, r));
                    }
                }
            }
        }
    }

    #[test]
    fn star_walk_fixed_point_mean() {
        for n in 3..=8i64 {
            let s1 = WalkSpec::star(n as usize, 1).unwrap();
            assert_eq!(jcycle_moment(&s1, 1, 1).unwrap(), int(n - 2));
            // χ^(n) + χ^(n-1,1), traced by hand
            for k in 0..6 {
                let s = WalkSpec::star(n as usize, k).unwrap();
                let expect = int(1)
                    + int(n - 2) * num_traits::pow(ratio(n - 2, n - 1), k)
                    + num_traits::pow(ratio(-1, n - 1), k);
                assert_eq!(jcycle_moment(&s, 1, 1).unwrap(), expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn poisson_examples() {
        assert_eq!(poisson_moment(0.7, 1), 0.7);
        assert_eq!(poisson_moment(1.0, 2), 2.0);
        assert_eq!(poisson_moment(0.0, 3), 0.0);
        assert_eq!(poisson_moment(0.0, 0), 1.0);
        assert!((poisson_moment(1.0, 4) - 15.0).abs() < 1e-12);
    }

    #[test]
    fn limiting_examples() {
        for j in 2..=4 {
            let c: f64 = 0.8;
            let want = (1.0 - (-(j as f64) * c).exp()) / j as f64;
            assert!((limiting_jcycle_moment(j, 1, c) - want).abs() < 1e-14);
        }
        for r in 1..=5 {
            let a = limiting_jcycle_moment(2, r, 60.0);
            assert!((a - poisson_moment(0.5, r)).abs() < 1e-12);
        }
        let a = limiting_jcycle_moment(2, 3, 1.0);
        let b = poisson_moment((1.0 - (-2.0f64).exp()) / 2.0, 3);
        assert!((a - b).abs() <= 1e-12 * b.abs());
        assert!((limiting_fixedpoint_moment(1, 0.3) - (1.0 + (-0.3f64).exp())).abs() < 1e-15);
        assert_eq!(limiting_fixedpoint_moment(1, 0.0), 2.0);
        assert_eq!(limiting_fixedpoint_moment(2, 0.0), 6.0);
    }

    #[test]
    fn limit_agrees_with_poisson_grid() {
        for j in 2..=4 {
            for r in 0..=5 {
                for c in [0.25, 0.5, 1.0, 2.0] {
                    let a = limiting_jcycle_moment(j, r, c);
                    let b = poisson_moment((1.0 - (-(j as f64) * c).exp()) / j as f64, r);
                    assert!((a - b).abs() <= 1e-12 * b.abs().max(f64::MIN_POSITIVE), "j={j} r={r} c={c}");
                }
            }
        }
    }

    #[test]
    fn star_trace_decay_bound() {
        for n in 3..=9 {
            for lambda in partitions_of(n) {
                let m = lambda
                    .inner_corner_removals()
                    .unwrap()
                    .iter()
                    .map(|(row, _)| (lambda.part(row - 1) as i64 - *row as i64).abs())
                    .max()
                    .unwrap();
                for k in 0..6 {
                    let tr = star_trace(&lambda, k).unwrap();
                    let bound = int(lambda.dimension()) * num_traits::pow(ratio(m, n as i64 - 1), k);
                    let abs = if tr < BigRational::zero() { -tr } else { tr };
                    assert!(abs <= bound, "{lambda} k={k}");
                }
            }
        }
    }

    #[test]
    fn step_counts() {
        assert_eq!(steps_nlogn(200, 1.0), 1259);
        assert_eq!(steps_linear(200, 1.0), 200);
        assert_eq!(Schedule::PerCycleLength { c: 1.0 }.steps(WalkKind::ICycle(3), 200), 66);
        assert_eq!(Schedule::Saturated { multiplier: 3.0 }.steps(WalkKind::Star, 100), 1382);
        assert!(Schedule::from_name("bogus", 1.0).is_err());
        assert_eq!(Schedule::from_name("steps", 12.0).unwrap(), Schedule::Steps(12));
    }

    #[test]
    fn reference_rates() {
        let e = |x: f64| x.exp();
        let lin = Schedule::Linear { c: 1.0 };
        assert_eq!(reference_rate(WalkKind::Star, &lin, 2), Some((1.0 - e(-2.0)) / 2.0));
        assert_eq!(reference_rate(WalkKind::ICycle(3), &lin, 2), Some((1.0 - e(-6.0)) / 2.0));
        assert_eq!(
            reference_rate(WalkKind::ICycle(3), &Schedule::PerCycleLength { c: 1.0 }, 2),
            Some((1.0 - e(-2.0)) / 2.0)
        );
        assert_eq!(
            reference_rate(WalkKind::Star, &Schedule::NLogN { c: 1.0 }, 1),
            Some(1.0 + e(-1.0))
        );
        assert_eq!(reference_rate(WalkKind::Star, &lin, 1), None);
        for r in 1..=4 {
            let s = Schedule::NLogN { c: 0.5 };
            let a = limit_moment(WalkKind::Star, &s, 1, r).unwrap();
            let b = poisson_moment(reference_rate(WalkKind::Star, &s, 1).unwrap(), r);
            assert!((a - b).abs() < 1e-12 * b);
        }
    }

    #[test]
    fn lemma_first_row_dimension() {
        let lemma = AsymptoticLemma::FirstRowDimension { bar: p![1] };
        let rows = asymptotic_checks(&lemma, &[10, 50, 100, 400]).unwrap();
        assert!(rows.windows(2).all(|w| w[1].gap() < w[0].gap()));
        assert!((rows[3].limit - 1.0).abs() < 1e-15);
        let lemma = AsymptoticLemma::FirstRowDimension { bar: p![2, 1] };
        let rows = asymptotic_checks(&lemma, &[20, 80, 320]).unwrap();
        assert!(rows.windows(2).all(|w| w[1].gap() < w[0].gap()));
        assert!((rows[0].limit - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn lemma_traces_converge() {
        let grid = [24, 48, 96, 192];
        for lemma in [
            AsymptoticLemma::StarTraceNLogN { bar: p![1], c: 0.5 },
            AsymptoticLemma::StarTraceNLogN { bar: p![2], c: 1.0 },
            AsymptoticLemma::StarTraceLinear { bar: p![1, 1], c: 1.0 },
            AsymptoticLemma::ICycleTrace { bar: p![1], i: 3, c: 1.0 },
            AsymptoticLemma::ICycleTrace { bar: p![2, 1], i: 2, c: 0.5 },
        ] {
            let rows = asymptotic_checks(&lemma, &grid).unwrap();
            assert!(rows.windows(2).all(|w| w[1].gap() < w[0].gap()), "{lemma:?}: {rows:?}");
            let last = rows.last().unwrap();
            assert!(last.gap() < 0.25 * last.limit.abs().max(0.1), "{lemma:?}: {rows:?}");
        }
    }

    #[test]
    fn lemma_character_ratio() {
        let lemma = AsymptoticLemma::CharacterRatio { bar: p![1], i: 2 };
        let rows = asymptotic_checks(&lemma, &[50, 100, 200]).unwrap();
        for row in &rows {
            let n = row.n as f64;
            // (n-3)/(n-1) = 1 - 2/n - 2/(n(n-1))
            assert!((row.finite - (n - 3.0) / (n - 1.0)).abs() < 1e-14);
            assert!(row.gap() * n * n < 2.1);
        }
        assert!(rows.windows(2).all(|w| w[1].gap() < w[0].gap()));
        let lemma = AsymptoticLemma::ICycleTrace { bar: Partition::empty(), i: 2, c: 1.0 };
        for row in asymptotic_checks(&lemma, &[10, 20]).unwrap() {
            assert_eq!(row.finite, 1.0);
            assert_eq!(row.limit, 1.0);
        }
        assert!(asymptotic_checks(&lemma, &[20, 10]).is_err());
    }

    #[test]
    fn csv_row_format() {
        let spec = WalkSpec::star(5, 1).unwrap();
        let rep = MomentReport::compute(spec, 2, 1, Some(&Schedule::Steps(1))).unwrap();
        assert_eq!(rep.csv_row(), "5,2,1,1,1,,0.5");
        assert_eq!(MomentReport::CSV_HEADER.split(',').count(), 7);
    }
}
