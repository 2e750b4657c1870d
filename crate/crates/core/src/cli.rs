//! The `cycle-mixer` command line.
//!
//! Every subcommand prints data on stdout and diagnostics on stderr. With
//! `--format json` the output is a single JSON document.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abacus::{abacus_sign, core_and_quotient, rim_tableau_count};
use crate::bratteli::{ajr_decomposition, closed_form_multiplicity, tensor_power, tensor_power_levels, to_dot};
use crate::characters::ClassFunctionDecomposition;
use crate::oracle::{brute_moment, brute_multiplicity, walk_distribution};
use crate::partition::partitions_of;
use crate::sim::{run_detailed, summarize, trials_csv, SimConfig};
use crate::walk::{
    jcycle_moment, limiting_fixedpoint_moment, limiting_jcycle_moment, poisson_moment, MomentReport,
    Schedule, WalkKind, WalkSpec,
};
use crate::{Error, Partition, Result};

/// Environment variable capping simulation worker threads.
pub const THREADS_ENV: &str = "CYCLE_MIXER_THREADS";

#[derive(Parser, Debug)]
#[command(name = "cycle-mixer", version, about = "Exact cycle-type statistics for random walks on S_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WalkName {
    Star,
    Icycle,
}

#[derive(Args, Debug, Clone)]
pub struct WalkArgs {
    /// Walk type.
    #[arg(long, value_enum, default_value = "star")]
    pub walk: WalkName,
    /// Cycle length for `--walk icycle`.
    #[arg(long, default_value_t = 3)]
    pub i: usize,
    /// Deck size.
    #[arg(long)]
    pub n: usize,
}

impl WalkArgs {
    fn kind(&self) -> WalkKind {
        match self.walk {
            WalkName::Star => WalkKind::Star,
            WalkName::Icycle => WalkKind::ICycle(self.i),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character decomposition of (a_j)^r on S_n (needs n >= 2rj).
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multiplicity of λ in the r-th tensor power, by closed form and by path count.
    Multiplicity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated parts, e.g. 6,1,1.
        #[arg(long)]
        lambda: Partition,
        /// Read --lambda as λ̄, the part below the first row, inside S_n.
        #[arg(long)]
        bar: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Abacus sign of λ, with the compression permutation σ.
    Sign {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        j: usize,
        /// Treat --lambda as λ̄ and also report λ = (N - |λ̄|, λ̄).
        #[arg(long)]
        ambient_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of standard rim j-hook tableaux of λ.
    Rimcount {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact moments E[a_j^r] after k steps.
    Moments {
        #[command(flatten)]
        walk: WalkArgs,
        /// Step count; alternatively give --schedule and --c.
        #[arg(long, conflicts_with = "schedule")]
        k: Option<usize>,
        /// steps, nlogn, linear, per-cycle or saturated.
        #[arg(long, requires = "c")]
        schedule: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<f64>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        j: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        r: Vec<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Limiting moments of a_j and the Poisson reference.
    Limits {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Monte Carlo simulation of cycle counts.
    Simulate {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        /// steps, nlogn, linear, per-cycle or saturated.
        #[arg(long, default_value = "linear")]
        schedule: String,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        j: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to $CYCLE_MIXER_THREADS, then all cores.
        #[arg(long)]
        threads: Option<usize>,
        /// Write per-trial counts as CSV to this path.
        #[arg(long)]
        dump_trials: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-check exact results against brute force over S_n.
    Verify {
        /// Also run the S_8 multiplicity checks.
        #[arg(long)]
        full: bool,
    },
    /// The signed restriction–induction diagram rooted at (n).
    Diagram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        /// Number of full levels.
        #[arg(long, default_value_t = 2)]
        levels: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
}

fn unsupported(format: Format, cmd: &str) -> Error {
    Error::param(format!("--format {format:?} is not supported by {cmd}").to_lowercase())
}

fn json_int(x: &impl ToString) -> Value {
    // arbitrary_precision keeps big integers exact
    serde_json::from_str(&x.to_string()).expect("integer literal")
}

fn decomposition_text(d: &ClassFunctionDecomposition) -> String {
    let mut s = String::new();
    for (i, (p, c)) in d.terms().enumerate() {
        if i > 0 {
            s.push_str(if c.numer().sign() == num_bigint::Sign::Minus { " - " } else { " + " });
        } else if c.numer().sign() == num_bigint::Sign::Minus {
            s.push('-');
        }
        let abs = if c.numer().sign() == num_bigint::Sign::Minus { -c.clone() } else { c.clone() };
        write!(s, "{abs} χ{p}").unwrap();
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok()).filter(|&t| t > 0)
}

/// Runs one parsed command, writing output to `out`.
pub fn dispatch(command: &Command, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::param(format!("write failed: {e}"));
    match command {
        Command::Decompose { n, j, r, format } => {
            let d = ajr_decomposition(*n, *j, *r)?;
            match format {
                Format::Json => {
                    let mut v = d.to_json();
                    v["j"] = json!(j);
                    v["r"] = json!(r);
                    writeln!(out, "{v}").map_err(io)?;
                }
                Format::Text => writeln!(out, "(a_{j})^{r} on S_{n} = {}", decomposition_text(&d)).map_err(io)?,
                Format::Csv => {
                    writeln!(out, "partition,coefficient").map_err(io)?;
                    for (p, c) in d.terms() {
                        writeln!(out, "\"{}\",{c}", p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                            .map_err(io)?;
                    }
                }
                Format::Dot => return Err(unsupported(*format, "decompose")),
            }
        }
        Command::Multiplicity { n, j, r, lambda, bar, format } => {
            let lambda = if *bar { Partition::with_ambient(*n, lambda)? } else { lambda.clone() };
            if lambda.size() != *n {
                return Err(Error::SizeMismatch { expected: *n, actual: lambda.size() });
            }
            let closed = closed_form_multiplicity(&lambda, *r, *j, *n);
            let paths = tensor_power(*n, *j, *r)?.coefficient(&lambda);
            let closed_val = closed.as_ref().ok();
            match format {
                Format::Json => {
                    let v = json!({
                        "n": n, "j": j, "r": r,
                        "partition": lambda.parts(),
                        "closed_form": closed_val.map(json_int),
                        "closed_form_error": closed.as_ref().err().map(|e| e.to_string()),
                        "path_count": json_int(&paths),
                        "agree": closed_val.map(|c| *c == paths),
                    });
                    writeln!(out, "{v}").map_err(io)?;
                }
                Format::Text => {
                    match &closed {
                        Ok(c) => writeln!(out, "closed form: {c}").map_err(io)?,
                        Err(e) => writeln!(out, "closed form: n/a ({e})").map_err(io)?,
                    }
                    writeln!(out, "path count:  {paths}").map_err(io)?;
                }
                Format::Csv => {
                    writeln!(out, "n,j,r,partition,closed_form,path_count").map_err(io)?;
                    writeln!(
                        out,
                        "{n},{j},{r},\"{}\",{},{paths}",
                        lambda.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                        closed_val.map(|c| c.to_string()).unwrap_or_default()
                    )
                    .map_err(io)?;
                }
                Format::Dot => return Err(unsupported(*format, "multiplicity")),
            }
        }
        Command::Sign { lambda, j, ambient_n, format } => {
            if *j == 0 {
                return Err(Error::param("j must be positive"));
            }
            let full = ambient_n.map(|n| Partition::with_ambient(n, lambda)).transpose()?;
            let s = abacus_sign(lambda, *j)?;
            let qc = core_and_quotient(lambda, *j)?;
            let count = rim_tableau_count(lambda, *j)?;
            let sigma = s.permutation.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            match format {
                Format::Json => {
                    let mut v = json!({
                        "partition": lambda.parts(),
                        "j": j,
                        "core": qc.core.parts(),
                        "quotient": qc.quotient.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                        "R": json_int(&count),
                        "sign": s.sign,
                        "sigma": s.permutation,
                    });
                    if let Some(f) = &full {
                        v["ambient_partition"] = json!(f.parts());
                    }
                    writeln!(out, "{v}").map_err(io)?;
                }
                Format::Text => {
                    if let Some(f) = &full {
                        writeln!(out, "λ = {f}, λ̄ = {lambda}").map_err(io)?;
                    }
                    writeln!(out, "core: {}", qc.core).map_err(io)?;
                    let quot: Vec<String> = qc.quotient.iter().map(|p| p.to_string()).collect();
                    writeln!(out, "quotient: [{}]", quot.join(", ")).map_err(io)?;
                    writeln!(out, "R: {count}").map_err(io)?;
                    writeln!(out, "sigma: {sigma}").map_err(io)?;
                    writeln!(out, "sign: {}", s.sign).map_err(io)?;
                }
                _ => return Err(unsupported(*format, "sign")),
            }
        }
        Command::Rimcount { lambda, j, format } => {
            let count = rim_tableau_count(lambda, *j)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"partition": lambda.parts(), "j": j, "count": json_int(&count)})
                )
                .map_err(io)?,
                Format::Text | Format::Csv => writeln!(out, "{count}").map_err(io)?,
                Format::Dot => return Err(unsupported(*format, "rimcount")),
            }
        }
        Command::Moments { walk, k, schedule, c, j, r, format } => {
            let kind = walk.kind();
            let schedule = match (k, schedule) {
                (Some(k), _) => Schedule::Steps(*k),
                (None, Some(name)) => Schedule::from_name(name, c.unwrap_or(0.0))?,
                (None, None) => return Err(Error::param("give --k, or --schedule with --c")),
            };
            let spec = WalkSpec::new(kind, walk.n, schedule.steps(kind, walk.n))?;
            let mut reports = Vec::new();
            for &jj in j {
                for &rr in r {
                    reports.push(MomentReport::compute(spec, jj, rr, Some(&schedule))?);
                }
            }
            match format {
                Format::Csv => {
                    writeln!(out, "{}", MomentReport::CSV_HEADER).map_err(io)?;
                    for rep in &reports {
                        writeln!(out, "{}", rep.csv_row()).map_err(io)?;
                    }
                }
                Format::Json => {
                    let v: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
                    writeln!(out, "{}", Value::Array(v)).map_err(io)?;
                }
                Format::Text => {
                    for rep in &reports {
                        write!(
                            out,
                            "E[a_{}^{}] after {} {} steps on S_{}: {} ≈ {:.6}",
                            rep.j, rep.r, spec.k, kind, spec.n, rep.exact_moment, rep.exact_f64()
                        )
                        .map_err(io)?;
                        if let Some(l) = rep.limit_moment {
                            write!(out, " (limit {l:.6})").map_err(io)?;
                        }
                        writeln!(out, " (Poisson(1/{}) {:.6})", rep.j, rep.poisson_reference).map_err(io)?;
                    }
                }
                Format::Dot => return Err(unsupported(*format, "moments")),
            }
        }
        Command::Limits { j, r, c, format } => {
            if *j == 0 {
                return Err(Error::param("j must be positive"));
            }
            let (label, limit) = if *j == 1 {
                ("fixed points after n log n + cn star steps", limiting_fixedpoint_moment(*r, *c))
            } else {
                ("j-cycles after cn star steps or cn/i random i-cycles", limiting_jcycle_moment(*j, *r, *c))
            };
            let rate = if *j == 1 { 1.0 + (-c).exp() } else { (1.0 - (-(*j as f64) * c).exp()) / *j as f64 };
            let poisson = poisson_moment(rate, *r);
            let stationary = poisson_moment(1.0 / *j as f64, *r);
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"j": j, "r": r, "c": c, "limit_moment": limit, "rate": rate,
                           "poisson_moment": poisson, "stationary_moment": stationary})
                )
                .map_err(io)?,
                Format::Text => {
                    writeln!(out, "{label}").map_err(io)?;
                    writeln!(out, "limit moment:          {limit}").map_err(io)?;
                    writeln!(out, "Poisson({rate:.6}) moment: {poisson}").map_err(io)?;
                    writeln!(out, "Poisson(1/{j}) moment:  {stationary}").map_err(io)?;
                }
                Format::Csv => {
                    writeln!(out, "j,r,c,limit_moment,rate,poisson_moment,stationary_moment").map_err(io)?;
                    writeln!(out, "{j},{r},{c},{limit},{rate},{poisson},{stationary}").map_err(io)?;
                }
                Format::Dot => return Err(unsupported(*format, "limits")),
            }
        }
        Command::Simulate { walk, c, schedule, j, trials, seed, threads, dump_trials, format } => {
            let schedule = Schedule::from_name(schedule, *c)?;
            let config = SimConfig::scheduled(walk.kind(), walk.n, schedule, *trials, *seed, j.clone())?;
            let threads = threads.or_else(threads_from_env);
            let per_trial = run_detailed(&config, threads)?;
            if let Some(path) = dump_trials {
                std::fs::write(path, trials_csv(&config, &per_trial))
                    .map_err(|e| Error::param(format!("cannot write {}: {e}", path.display())))?;
            }
            let summary = summarize(&config, &per_trial);
            match format {
                Format::Json => writeln!(out, "{}", summary.to_json()).map_err(io)?,
                Format::Text => {
                    writeln!(
                        out,
                        "{} on S_{}, k = {}, {} trials, seed {}",
                        config.spec.kind, config.spec.n, config.spec.k, config.trials, config.seed
                    )
                    .map_err(io)?;
                    for s in &summary.per_j {
                        write!(out, "a_{}: mean {:.5} ± {:.5}", s.j, s.mean(), s.mean_standard_error).map_err(io)?;
                        if let (Some(rate), Some(z), Some(tv)) = (s.reference_rate, s.z_scores, s.total_variation) {
                            write!(out, ", reference {rate:.5}, z {:.2}, TV {tv:.4}", z[0]).map_err(io)?;
                        }
                        writeln!(out).map_err(io)?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "j,mean,se,reference_rate,z,total_variation").map_err(io)?;
                    for s in &summary.per_j {
                        let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            s.j,
                            s.mean(),
                            s.mean_standard_error,
                            opt(s.reference_rate),
                            opt(s.z_scores.map(|z| z[0])),
                            opt(s.total_variation)
                        )
                        .map_err(io)?;
                    }
                }
                Format::Dot => return Err(unsupported(*format, "simulate")),
            }
        }
        Command::Verify { full } => {
            let report = verify_suite(*full, &mut |line| {
                let _ = writeln!(out, "{line}");
            });
            if let Err(counterexample) = report {
                return Err(Error::param(format!("verification failed: {counterexample}")));
            }
        }
        Command::Diagram { n, j, levels, format } => {
            let lv = tensor_power_levels(*n, *j, *levels)?;
            match format {
                Format::Dot => write!(out, "{}", to_dot(&lv, *j)).map_err(io)?,
                Format::Json => {
                    let v: Vec<Value> = lv
                        .iter()
                        .map(|l| json!({"level": l.label(), "decomposition": l.decomposition.to_json()}))
                        .collect();
                    writeln!(out, "{}", json!({"n": n, "j": j, "levels": v})).map_err(io)?;
                }
                Format::Text => {
                    for l in &lv {
                        writeln!(out, "{:>5}: {}", l.label(), l.decomposition).map_err(io)?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "level,partition,coefficient").map_err(io)?;
                    for l in &lv {
                        for (p, c) in l.decomposition.terms() {
                            writeln!(
                                out,
                                "{},\"{}\",{c}",
                                l.label(),
                                p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                            )
                            .map_err(io)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Oracle cross-checks. Calls `log` with one line per group and returns the
/// first counterexample on failure.
pub fn verify_suite(full: bool, log: &mut dyn FnMut(String)) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    let mut groups: Vec<(usize, usize, usize)> = vec![(6, 2, 1), (7, 2, 1), (6, 3, 1), (7, 3, 1)];
    groups.extend([(7, 1, 1), (7, 1, 2), (7, 1, 3)]);
    if full {
        groups.extend([(8, 2, 1), (8, 2, 2), (8, 3, 1)]);
    }
    for (n, j, r) in groups {
        let paths = tensor_power(n, j, r).map_err(err)?;
        for lambda in partitions_of(n) {
            let brute = brute_multiplicity(n, j, r, &lambda).map_err(err)?;
            let want = num_rational::BigRational::from_integer(paths.coefficient(&lambda));
            if brute != want {
                return Err(format!(
                    "multiplicity of {lambda} in (n, j, r) = ({n}, {j}, {r}): oracle {brute}, path count {want}"
                ));
            }
        }
        log(format!("ok  multiplicities n={n} j={j} r={r}"));
    }
    for n in [5, 6] {
        for kind in [WalkKind::Star, WalkKind::ICycle(2), WalkKind::ICycle(3)] {
            for k in 0..=6 {
                let spec = WalkSpec::new(kind, n, k).map_err(err)?;
                let dist = walk_distribution(&spec).map_err(err)?;
                for (j, r) in [(1, 1), (1, 2), (2, 1)] {
                    let exact = jcycle_moment(&spec, j, r).map_err(err)?;
                    let brute = brute_moment(&dist, j, r);
                    if exact != brute {
                        return Err(format!(
                            "E[a_{j}^{r}] after {k} {kind} steps on S_{n}: spectral {exact}, convolution {brute}"
                        ));
                    }
                }
            }
            log(format!("ok  moments n={n} walk={kind} k=0..6"));
        }
    }
    for j in 1..=3usize {
        for r in 0..=2usize {
            let n = (2 * r * j).max(j + 1);
            let paths = tensor_power(n, j, r).map_err(err)?;
            for lambda in partitions_of(n) {
                let closed = closed_form_multiplicity(&lambda, r, j, n).map_err(err)?;
                if closed != paths.coefficient(&lambda) {
                    return Err(format!(
                        "closed form for {lambda}, r={r}, j={j}: {closed} vs path count {}",
                        paths.coefficient(&lambda)
                    ));
                }
            }
        }
    }
    log("ok  closed form = path count".to_string());
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
