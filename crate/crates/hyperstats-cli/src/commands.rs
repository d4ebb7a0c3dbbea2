//! Subcommand implementations.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson, Zipf};
use serde_json::json;

use hyperstats::asymp;
use hyperstats::exact::{
    expected_degenerate, expected_degenerate_directed, expected_multi_pairs,
    expected_multi_pairs_directed, expected_self_loops, expected_weak_self_loops,
    ExpectationReport,
};
use hyperstats::oracle;
use hyperstats::sampler::{
    monte_carlo_directed, monte_carlo_undirected, sample_directed, sample_rng,
    sample_undirected, MonteCarloConfig, SampleEstimate,
};
use hyperstats::{DirectedDegreeSequence, UndirectedDegreeSequence};

use crate::io::{
    load_sequence, CliError, Input, McJson, RationalJson, ResultDocument, SequenceFile,
    StatResult,
};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "HYPERSTATS_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    /// Degenerate hyperedges.
    Dh,
    /// Multi-hyperedge pairs.
    M,
    /// Self-loops (directed only).
    S,
    /// Weak self-loops (directed only).
    Ws,
}

impl Stat {
    fn key(self) -> &'static str {
        match self {
            Stat::Dh => "degenerate",
            Stat::M => "multi_pairs",
            Stat::S => "self_loops",
            Stat::Ws => "weak_self_loops",
        }
    }
}

fn requested_stats(stats: &[Stat], directed: bool) -> Result<Vec<Stat>, CliError> {
    let all = if directed {
        vec![Stat::Dh, Stat::M, Stat::S, Stat::Ws]
    } else {
        vec![Stat::Dh, Stat::M]
    };
    if stats.is_empty() {
        return Ok(all);
    }
    for s in stats {
        if !directed && matches!(s, Stat::S | Stat::Ws) {
            return Err(CliError::validation(
                "StatUnavailable",
                format!("{} requires a directed sequence", s.key()),
            ));
        }
    }
    Ok(stats.to_vec())
}

fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        })
}

// ---------------------------------------------------------------------------
// exact
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct ExactArgs {
    /// Degree sequence JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Statistics to compute (default: all defined for the model).
    #[arg(long, value_delimiter = ',')]
    stats: Vec<Stat>,
}

fn exact_report(input: &Input, stat: Stat) -> Result<ExpectationReport, CliError> {
    Ok(match (input, stat) {
        (Input::Undirected(ds), Stat::Dh) => expected_degenerate(ds)?,
        (Input::Undirected(ds), Stat::M) => expected_multi_pairs(ds)?,
        (Input::Directed(dds), Stat::Dh) => expected_degenerate_directed(dds)?,
        (Input::Directed(dds), Stat::M) => expected_multi_pairs_directed(dds)?,
        (Input::Directed(dds), Stat::S) => expected_self_loops(dds)?,
        (Input::Directed(dds), Stat::Ws) => expected_weak_self_loops(dds)?,
        (Input::Undirected(_), Stat::S | Stat::Ws) => {
            return Err(CliError::validation(
                "StatUnavailable",
                "self-loop statistics require a directed sequence",
            ))
        }
    })
}

pub fn cmd_exact(args: ExactArgs) -> Result<(), CliError> {
    let input = load_sequence(&args.input)?;
    let directed = matches!(input, Input::Directed(_));
    let stats = requested_stats(&args.stats, directed)?;
    let mut doc = ResultDocument::new(
        "exact",
        json!({ "input": args.input.display().to_string() }),
    );
    for stat in stats {
        let report = exact_report(&input, stat)?;
        doc.statistics.insert(
            stat.key().to_string(),
            StatResult {
                exact: Some(RationalJson::from_exact(&report.value)),
                float: Some(report.value.to_f64()),
                ..Default::default()
            },
        );
    }
    doc.print();
    Ok(())
}

// ---------------------------------------------------------------------------
// asymptotic
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct AsymptoticArgs {
    /// Degree sequence JSON file; edge sizes must be uniform.
    #[arg(long)]
    input: PathBuf,
    /// Statistics to compute (default: all defined for the model).
    #[arg(long, value_delimiter = ',')]
    stats: Vec<Stat>,
}

fn uniform(sizes: &[u64]) -> Option<u64> {
    let first = *sizes.first()?;
    sizes.iter().all(|&s| s == first).then_some(first)
}

pub fn cmd_asymptotic(args: AsymptoticArgs) -> Result<(), CliError> {
    let input = load_sequence(&args.input)?;
    let directed = matches!(input, Input::Directed(_));
    let stats = requested_stats(&args.stats, directed)?;
    let mut doc = ResultDocument::new(
        "asymptotic",
        json!({ "input": args.input.display().to_string() }),
    );
    match &input {
        Input::Undirected(ds) => {
            let delta = uniform(ds.edge_degrees()).ok_or_else(|| {
                CliError::validation("NotRegular", "edge sizes are not uniform")
            })?;
            for stat in stats {
                let value = match stat {
                    Stat::Dh => asymp::degenerate_asymptotic(ds.vertex_degrees(), delta),
                    Stat::M => asymp::multi_pairs_asymptotic(ds.vertex_degrees(), delta),
                    _ => unreachable!("filtered by requested_stats"),
                };
                doc.statistics.insert(
                    stat.key().to_string(),
                    StatResult {
                        asymptotic: Some(value),
                        ..Default::default()
                    },
                );
            }
        }
        Input::Directed(dds) => {
            let dt = uniform(dds.tail_degrees()).ok_or_else(|| {
                CliError::validation("NotRegular", "tail sizes are not uniform")
            })?;
            let dh = uniform(dds.head_degrees()).ok_or_else(|| {
                CliError::validation("NotRegular", "head sizes are not uniform")
            })?;
            for stat in stats {
                let value = match stat {
                    Stat::Dh => asymp::degenerate_directed_asymptotic(
                        dds.out_degrees(),
                        dds.in_degrees(),
                        dt,
                        dh,
                    ),
                    Stat::M => asymp::multi_pairs_directed_asymptotic(
                        dds.out_degrees(),
                        dds.in_degrees(),
                        dt,
                        dh,
                    ),
                    Stat::S => {
                        if dt != dh {
                            return Err(CliError::validation(
                                "NotRegular",
                                "self-loop asymptotics require equal tail and head sizes",
                            ));
                        }
                        asymp::self_loops_asymptotic(dds.out_degrees(), dds.in_degrees(), dt)
                    }
                    Stat::Ws => asymp::weak_self_loops_asymptotic(
                        dds.out_degrees(),
                        dds.in_degrees(),
                        dh,
                    ),
                };
                doc.statistics.insert(
                    stat.key().to_string(),
                    StatResult {
                        asymptotic: Some(value),
                        ..Default::default()
                    },
                );
            }
        }
    }
    doc.print();
    Ok(())
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct SampleArgs {
    /// Degree sequence JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Number of Monte Carlo samples (at least 2).
    #[arg(long)]
    samples: u64,
    /// RNG seed; results are identical for any worker count.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: HYPERSTATS_WORKERS or all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Statistics to estimate (default: all defined for the model).
    #[arg(long, value_delimiter = ',')]
    stats: Vec<Stat>,
    /// Optional CSV dump of per-sample counts.
    #[arg(long)]
    dump: Option<PathBuf>,
}

fn stat_entry(est: &SampleEstimate, seed: u64) -> StatResult {
    StatResult {
        mc: Some(McJson {
            mean: est.mean,
            std_error: est.std_error,
            ci95: [est.ci95.0, est.ci95.1],
            samples: est.samples,
            seed,
        }),
        ..Default::default()
    }
}

fn dump_samples(path: &PathBuf, input: &Input, samples: u64, seed: u64) -> Result<(), CliError> {
    let mut file = fs::File::create(path)
        .map_err(|e| CliError::validation("IoError", format!("{}: {e}", path.display())))?;
    let io_err =
        |e: std::io::Error| CliError::validation("IoError", format!("{}: {e}", path.display()));
    match input {
        Input::Undirected(ds) => {
            writeln!(file, "index,degenerate,multi_pairs").map_err(io_err)?;
            for i in 0..samples {
                let mut rng = sample_rng(seed, i);
                let h = sample_undirected(ds, &mut rng);
                writeln!(file, "{i},{},{}", h.count_degenerate(), h.count_multi_pairs())
                    .map_err(io_err)?;
            }
        }
        Input::Directed(dds) => {
            writeln!(file, "index,degenerate,multi_pairs,self_loops,weak_self_loops")
                .map_err(io_err)?;
            for i in 0..samples {
                let mut rng = sample_rng(seed, i);
                let h = sample_directed(dds, &mut rng);
                writeln!(
                    file,
                    "{i},{},{},{},{}",
                    h.count_degenerate(),
                    h.count_multi_pairs(),
                    h.count_self_loops(),
                    h.count_weak_self_loops()
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

pub fn cmd_sample(args: SampleArgs) -> Result<(), CliError> {
    if args.samples < 2 {
        return Err(CliError::validation(
            "InvalidParams",
            "need at least 2 samples to estimate a standard error",
        ));
    }
    let input = load_sequence(&args.input)?;
    let directed = matches!(input, Input::Directed(_));
    let stats = requested_stats(&args.stats, directed)?;
    let workers = args.workers.unwrap_or_else(default_workers);
    let cfg = MonteCarloConfig {
        samples: args.samples,
        seed: args.seed,
        workers,
    };
    let mut doc = ResultDocument::new(
        "sample",
        json!({
            "input": args.input.display().to_string(),
            "samples": args.samples,
            "seed": args.seed,
            "workers": workers,
        }),
    );
    match &input {
        Input::Undirected(ds) => {
            let est = monte_carlo_undirected(ds, &cfg);
            for stat in stats {
                let entry = match stat {
                    Stat::Dh => stat_entry(&est.degenerate, args.seed),
                    Stat::M => stat_entry(&est.multi_pairs, args.seed),
                    _ => unreachable!("filtered by requested_stats"),
                };
                doc.statistics.insert(stat.key().to_string(), entry);
            }
        }
        Input::Directed(dds) => {
            let est = monte_carlo_directed(dds, &cfg);
            for stat in stats {
                let entry = match stat {
                    Stat::Dh => stat_entry(&est.degenerate, args.seed),
                    Stat::M => stat_entry(&est.multi_pairs, args.seed),
                    Stat::S => stat_entry(&est.self_loops, args.seed),
                    Stat::Ws => stat_entry(&est.weak_self_loops, args.seed),
                };
                doc.statistics.insert(stat.key().to_string(), entry);
            }
        }
    }
    if let Some(path) = &args.dump {
        dump_samples(path, &input, args.samples, args.seed)?;
    }
    doc.print();
    Ok(())
}

// ---------------------------------------------------------------------------
// oracle-check
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct OracleCheckArgs {
    /// Single instance to check (must be within oracle caps).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Run the built-in catalog of small instances.
    #[arg(long)]
    catalog: bool,
}

fn check_undirected(label: &str, ds: &UndirectedDegreeSequence) -> Result<bool, CliError> {
    let truth = oracle::brute_force_undirected(ds)?;
    let dh = expected_degenerate(ds)?.value;
    let m = expected_multi_pairs(ds)?.value;
    let ok = truth.degenerate == dh && truth.multi_pairs == m;
    println!(
        "{label}: degenerate oracle={} exact={} | multi_pairs oracle={} exact={} => {}",
        truth.degenerate,
        dh,
        truth.multi_pairs,
        m,
        if ok { "equal" } else { "UNEQUAL" }
    );
    Ok(ok)
}

fn check_directed(label: &str, dds: &DirectedDegreeSequence) -> Result<bool, CliError> {
    let truth = oracle::brute_force_directed(dds)?;
    let dh = expected_degenerate_directed(dds)?.value;
    let m = expected_multi_pairs_directed(dds)?.value;
    let s = expected_self_loops(dds)?.value;
    let ws = expected_weak_self_loops(dds)?.value;
    let ok = truth.degenerate == dh
        && truth.multi_pairs == m
        && truth.self_loops == s
        && truth.weak_self_loops == ws;
    println!(
        "{label}: degenerate {}/{} | multi_pairs {}/{} | self_loops {}/{} | weak_self_loops {}/{} => {}",
        truth.degenerate,
        dh,
        truth.multi_pairs,
        m,
        truth.self_loops,
        s,
        truth.weak_self_loops,
        ws,
        if ok { "equal" } else { "UNEQUAL" }
    );
    Ok(ok)
}

pub fn cmd_oracle_check(args: OracleCheckArgs) -> Result<(), CliError> {
    let mut all_ok = true;
    let mut checked = 0usize;
    if let Some(path) = &args.input {
        match load_sequence(path)? {
            Input::Undirected(ds) => all_ok &= check_undirected("input", &ds)?,
            Input::Directed(dds) => all_ok &= check_directed("input", &dds)?,
        }
        checked += 1;
    }
    if args.catalog {
        for (i, ds) in oracle::undirected_catalog().iter().enumerate() {
            all_ok &= check_undirected(&format!("undirected #{i}"), ds)?;
            checked += 1;
        }
        for (i, dds) in oracle::directed_catalog().iter().enumerate() {
            all_ok &= check_directed(&format!("directed #{i}"), dds)?;
            checked += 1;
        }
    }
    if checked == 0 {
        return Err(CliError::validation(
            "InvalidParams",
            "provide --input and/or --catalog",
        ));
    }
    println!(
        "oracle-check: {checked} instance(s), {}",
        if all_ok { "all equal" } else { "MISMATCH" }
    );
    if all_ok {
        Ok(())
    } else {
        Err(CliError::internal(
            "OracleMismatch",
            "exact theorem disagrees with brute-force enumeration",
        ))
    }
}

// ---------------------------------------------------------------------------
// identity-check
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct IdentityCheckArgs {
    /// Number of randomized trials per identity.
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest tuple length δ drawn in a trial.
    #[arg(long, default_value_t = 4)]
    max_delta: u64,
    /// Largest multiplicity-weight exponent w drawn in a trial.
    #[arg(long, default_value_t = 2)]
    max_w: u64,
}

pub fn cmd_identity_check(args: IdentityCheckArgs) -> Result<(), CliError> {
    if args.max_delta == 0 {
        return Err(CliError::validation("InvalidParams", "--max-delta must be positive"));
    }
    let cor = oracle::run_corollary_trials(args.trials, args.seed, args.max_delta, args.max_w)?;
    println!(
        "corollary identity: {} trials, {} failures",
        cor.trials, cor.failures
    );
    let main =
        oracle::run_main_lemma_trials(args.trials, args.seed + 1, args.max_delta, args.max_w)?;
    println!(
        "main-lemma identity: {} trials, {} failures",
        main.trials, main.failures
    );
    if cor.failures == 0 && main.failures == 0 {
        Ok(())
    } else {
        Err(CliError::internal(
            "IdentityMismatch",
            "at least one identity trial failed",
        ))
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    /// All vertices share one degree, all edges one size.
    Regular,
}

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = Family::Regular)]
    family: Family,
    /// Comma-separated ladder of vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<u64>,
    /// Vertex degree (both sides in the directed families).
    #[arg(long, default_value_t = 3)]
    d: u64,
    /// Edge size (tail and head sizes in the directed families).
    #[arg(long, default_value_t = 3)]
    delta: u64,
    /// Statistic to sweep; dh/m use the undirected family, s/ws directed.
    #[arg(long, value_enum)]
    stat: Stat,
    /// Write the CSV here instead of stdout (a JSON summary then goes to
    /// stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for &n in &args.n_list {
        if (n * args.d) % args.delta != 0 {
            return Err(CliError::validation(
                "DivisibilityError",
                format!("n·d = {} is not divisible by δ = {}", n * args.d, args.delta),
            ));
        }
        let (exact, asymptotic) = match args.stat {
            Stat::Dh => {
                let ds = asymp::regular_undirected(n, args.d, args.delta)?;
                (
                    expected_degenerate(&ds)?.value.to_f64(),
                    asymp::degenerate_asymptotic(ds.vertex_degrees(), args.delta),
                )
            }
            Stat::M => {
                let ds = asymp::regular_undirected(n, args.d, args.delta)?;
                (
                    expected_multi_pairs(&ds)?.value.to_f64(),
                    asymp::multi_pairs_asymptotic(ds.vertex_degrees(), args.delta),
                )
            }
            Stat::S => {
                let dds = asymp::regular_directed(n, args.d, args.d, args.delta, args.delta)?;
                (
                    expected_self_loops(&dds)?.value.to_f64(),
                    asymp::self_loops_asymptotic(
                        dds.out_degrees(),
                        dds.in_degrees(),
                        args.delta,
                    ),
                )
            }
            Stat::Ws => {
                let dds = asymp::regular_directed(n, args.d, args.d, args.delta, args.delta)?;
                (
                    expected_weak_self_loops(&dds)?.value.to_f64(),
                    asymp::weak_self_loops_asymptotic(
                        dds.out_degrees(),
                        dds.in_degrees(),
                        args.delta,
                    ),
                )
            }
        };
        let ratio = asymp::convergence_ratio(exact, asymptotic);
        rows.push((n, exact, asymptotic, ratio));
    }
    let mut csv = String::from("n,exact,asymptotic,ratio\n");
    for (n, exact, asymptotic, ratio) in &rows {
        csv.push_str(&format!("{n},{exact},{asymptotic},{ratio}\n"));
    }
    match &args.out {
        Some(path) => {
            fs::write(path, &csv).map_err(|e| {
                CliError::validation("IoError", format!("{}: {e}", path.display()))
            })?;
            let summary = json!({
                "metadata": {
                    "command": "sweep",
                    "inputs": {
                        "family": "regular",
                        "n_list": args.n_list,
                        "d": args.d,
                        "delta": args.delta,
                        "stat": args.stat.key(),
                    },
                    "version": env!("CARGO_PKG_VERSION"),
                },
                "csv": path.display().to_string(),
                "rows": rows
                    .iter()
                    .map(|(n, e, a, r)| json!({"n": n, "exact": e, "asymptotic": a, "ratio": r}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&summary).expect("serialize"));
        }
        None => print!("{csv}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// gen-degrees
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Model {
    Regular,
    Poisson,
    Zipf,
}

#[derive(Args)]
pub struct GenDegreesArgs {
    #[arg(long, value_enum)]
    model: Model,
    /// Number of vertices.
    #[arg(long)]
    n: u64,
    /// Vertex degree (regular model).
    #[arg(long)]
    d: Option<u64>,
    /// Mean degree (poisson model).
    #[arg(long)]
    lambda: Option<f64>,
    /// Exponent (zipf model); degrees are drawn from 1..=n.
    #[arg(long)]
    alpha: Option<f64>,
    /// Edge size (tail size when --delta-head is given).
    #[arg(long)]
    delta: u64,
    /// Head size; presence switches to the directed model.
    #[arg(long)]
    delta_head: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

const RETRY_BUDGET: u32 = 1000;

/// Draws one degree vector from the chosen model, truncating random draws
/// at `n` so the asymptotic moment hypotheses stay reachable.
fn draw_degrees(
    model: Model,
    args: &GenDegreesArgs,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<u64>, CliError> {
    let n = args.n as usize;
    match model {
        Model::Regular => {
            let d = args.d.ok_or_else(|| {
                CliError::validation("InvalidParams", "--d is required for the regular model")
            })?;
            Ok(vec![d; n])
        }
        Model::Poisson => {
            let lambda = args.lambda.filter(|&l| l > 0.0).ok_or_else(|| {
                CliError::validation(
                    "InvalidParams",
                    "--lambda must be positive for the poisson model",
                )
            })?;
            let dist = Poisson::new(lambda).map_err(|e| {
                CliError::validation("InvalidParams", format!("bad lambda: {e}"))
            })?;
            Ok((0..n)
                .map(|_| (dist.sample(rng) as u64).min(args.n))
                .collect())
        }
        Model::Zipf => {
            let alpha = args.alpha.filter(|&a| a > 0.0).ok_or_else(|| {
                CliError::validation(
                    "InvalidParams",
                    "--alpha must be positive for the zipf model",
                )
            })?;
            let dist = Zipf::new(args.n as f64, alpha).map_err(|e| {
                CliError::validation("InvalidParams", format!("bad alpha: {e}"))
            })?;
            Ok((0..n)
                .map(|_| (dist.sample(rng).round() as u64).clamp(1, args.n))
                .collect())
        }
    }
}

/// Redraws until the stub total is positive and divisible by `delta`.
fn draw_divisible(
    model: Model,
    args: &GenDegreesArgs,
    delta: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<u64>, CliError> {
    for _ in 0..RETRY_BUDGET {
        let degrees = draw_degrees(model, args, rng)?;
        let total: u64 = degrees.iter().sum();
        if total > 0 && total % delta == 0 {
            return Ok(degrees);
        }
        if matches!(model, Model::Regular) {
            return Err(CliError::validation(
                "DivisibilityError",
                format!("n·d = {total} is not divisible by δ = {delta}"),
            ));
        }
    }
    Err(CliError::validation(
        "DivisibilityError",
        format!("no divisible stub total after {RETRY_BUDGET} redraws"),
    ))
}

/// Nudges single degrees up/down (within 0..=n) until the total matches.
fn balance_to_total(
    degrees: &mut [u64],
    target: u64,
    cap: u64,
    rng: &mut ChaCha8Rng,
) -> Result<(), CliError> {
    let mut total: u64 = degrees.iter().sum();
    let mut budget = (target.abs_diff(total) + 1) * 10 + degrees.len() as u64 * 10;
    while total != target {
        if budget == 0 {
            return Err(CliError::validation(
                "DivisibilityError",
                "could not balance the in-degree total to the edge count",
            ));
        }
        budget -= 1;
        let i = rng.random_range(0..degrees.len());
        if total < target && degrees[i] < cap {
            degrees[i] += 1;
            total += 1;
        } else if total > target && degrees[i] > 0 {
            degrees[i] -= 1;
            total -= 1;
        }
    }
    Ok(())
}

pub fn cmd_gen_degrees(args: GenDegreesArgs) -> Result<(), CliError> {
    if args.n == 0 || args.delta == 0 || args.delta_head == Some(0) {
        return Err(CliError::validation(
            "InvalidParams",
            "--n, --delta and --delta-head must be positive",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let file = match args.delta_head {
        None => {
            let degrees = draw_divisible(args.model, &args, args.delta, &mut rng)?;
            let m = degrees.iter().sum::<u64>() / args.delta;
            SequenceFile::Undirected {
                vertex_degrees: degrees,
                edge_degrees: vec![args.delta; m as usize],
            }
        }
        Some(delta_head) => {
            let out_degrees = draw_divisible(args.model, &args, args.delta, &mut rng)?;
            let m = out_degrees.iter().sum::<u64>() / args.delta;
            let target = m * delta_head;
            let mut in_degrees = match args.model {
                // regular in-degrees must split the head slots evenly
                Model::Regular => {
                    if target % args.n != 0 {
                        return Err(CliError::validation(
                            "DivisibilityError",
                            format!(
                                "head slot total {target} is not divisible by n = {}",
                                args.n
                            ),
                        ));
                    }
                    vec![target / args.n; args.n as usize]
                }
                _ => draw_degrees(args.model, &args, &mut rng)?,
            };
            balance_to_total(&mut in_degrees, target, args.n.max(target), &mut rng)?;
            SequenceFile::Directed {
                out_degrees,
                in_degrees,
                tail_degrees: vec![args.delta; m as usize],
                head_degrees: vec![delta_head; m as usize],
            }
        }
    };
    let text = serde_json::to_string_pretty(&file).expect("serialize");
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| {
                CliError::validation("IoError", format!("{}: {e}", path.display()))
            })?;
            println!(
                "{}",
                json!({
                    "written": path.display().to_string(),
                    "model": format!("{:?}", args.model).to_lowercase(),
                    "seed": args.seed,
                    "degrees_truncated_at": args.n,
                })
            );
        }
        None => println!("{text}"),
    }
    Ok(())
}
