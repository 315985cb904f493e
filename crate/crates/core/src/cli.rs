use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use pbmo::bitstring::BitString;
use pbmo::evolve::{hitting_time_experiment, Algorithm, RunConfig, Target};
use pbmo::figures::{figure_dataset, FigureKind};
use pbmo::landscape::{enumerate_landscape, LandscapeConfig, ENUM_CAP_ENV};
use pbmo::oracles::{
    ojzj_threshold_k, ojzr_bound_holds, ratio_ojzj, ratio_ojzr, verify_grid, Claim, Outcome,
    VerificationReport, VerifyConfig, DEFAULT_GRID_N,
};
use pbmo::problems::{family_catalog, Family, ProblemInstance, RawDescriptor};
use pbmo::rational::ExactRational;

/// Exit status when a must-match verification claim fails.
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pbmo", version, about = "Bi-objective pseudo-Boolean benchmarks and exact landscape analysis")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest n analysed exhaustively.
    #[arg(long, global = true, env = ENUM_CAP_ENV, default_value_t = 24)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one bit-string.
    Eval {
        /// `[DESCRIPTOR] X`: optional descriptor, then the bit-string (leftmost bit first).
        #[arg(num_args = 1..=2, required = true, value_name = "ARGS")]
        args: Vec<String>,
        #[command(flatten)]
        flags: InstanceFlags,
    },
    /// Enumerate the landscape and print a summary.
    Landscape {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check closed forms against enumeration on the parameter grid.
    Verify {
        /// A family name, or `all`.
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        /// Write all reports as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Pareto-ratio formulas (ojzj, ojzr).
    Ratio {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Export plot data as CSV.
    Figure {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        kind: FigureKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded SEMO/GSEMO hitting-time experiment.
    Run {
        algorithm: Algorithm,
        #[command(flatten)]
        instance: InstanceArgs,
        /// `a..b` (inclusive) or a comma-separated list.
        #[arg(long, default_value = "1..10")]
        seeds: String,
        /// Evaluations per run, e.g. `1e6`.
        #[arg(long, default_value = "1e6")]
        budget: String,
        /// `full_front`, `front_point(f1,f2)` or `coverage(p)`.
        #[arg(long, default_value = "full_front")]
        target: Target,
        /// Write the per-seed CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the benchmark families.
    Catalog,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Descriptor such as `ojzr:n=12,k=5,l=3`.
    descriptor: Option<String>,
    #[command(flatten)]
    flags: InstanceFlags,
}

#[derive(Debug, Clone, Args)]
struct InstanceFlags {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
}

impl InstanceArgs {
    fn raw(&self) -> Result<RawDescriptor> {
        let f = &self.flags;
        if let Some(d) = &self.descriptor {
            if f.family.is_some() || f.n.is_some() || f.k.is_some() || f.l.is_some() {
                bail!("give either a descriptor or --family/--n/--k/--l, not both");
            }
            return Ok(d.parse()?);
        }
        let family = f.family.ok_or_else(|| anyhow!("missing instance: give a descriptor or --family and --n"))?;
        let n = f.n.ok_or_else(|| anyhow!("missing --n"))?;
        Ok(RawDescriptor { family, n, k: f.k, block_len: f.l })
    }

    fn instance(&self) -> Result<ProblemInstance> {
        Ok(self.raw()?.validate()?)
    }
}

pub fn run(cli: Cli) -> Result<i32> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("configuring threads")?;
    }
    let land_cfg = LandscapeConfig { cap: cli.cap, ..LandscapeConfig::default() };
    match cli.command {
        Command::Eval { mut args, flags } => {
            let literal = args.pop().expect("clap requires one argument");
            let instance = InstanceArgs { descriptor: args.pop(), flags }.instance()?;
            let x: BitString = literal.parse()?;
            println!("{}", instance.evaluate(&x)?);
        }
        Command::Landscape { instance, out } => {
            let report = enumerate_landscape(&instance.instance()?, &land_cfg)?;
            if let Some(path) = out {
                write(&path, &(serde_json::to_string_pretty(&report)? + "\n"))?;
            }
            println!("{}", report.summary());
        }
        Command::Verify { family, n_max, out } => return verify(&family, n_max, cli.cap, out.as_deref()),
        Command::Ratio { instance } => println!("{}", ratio(&instance.raw()?)?),
        Command::Figure { instance, kind, out } => {
            let report = enumerate_landscape(&instance.instance()?, &land_cfg)?;
            let csv = figure_dataset(&report, kind).to_csv();
            match out {
                Some(path) => write(&path, &csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Run { algorithm, instance, seeds, budget, target, out } => {
            let template = RunConfig {
                algorithm,
                instance: instance.instance()?,
                seed: 0,
                budget: parse_budget(&budget)?,
                target,
            };
            let summary = hitting_time_experiment(&template, &parse_seeds(&seeds)?)?;
            match out {
                Some(path) => write(&path, &summary.to_csv())?,
                None => print!("{}", summary.to_csv()),
            }
            println!("# {}", summary.summary_line());
        }
        Command::Catalog => {
            for d in family_catalog() {
                let params = match (d.needs_jump, d.needs_block_len) {
                    (true, true) => "n,k,l",
                    (true, false) => "n,k",
                    (false, true) => "n,l",
                    (false, false) => "n",
                };
                println!(
                    "{:<5} {:<28} {:<6} {}",
                    d.family.short_name(),
                    d.name,
                    params,
                    d.constraints
                );
            }
        }
    }
    Ok(0)
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn verify(scope: &str, n_max: usize, cap: usize, out: Option<&Path>) -> Result<i32> {
    let families: Vec<Family> = if scope.eq_ignore_ascii_case("all") {
        Family::ALL.to_vec()
    } else {
        vec![scope.parse()?]
    };
    let ns: Vec<usize> = DEFAULT_GRID_N.into_iter().filter(|&n| n <= n_max).collect();
    if ns.is_empty() {
        bail!("--n-max {n_max} is below the smallest grid size {}", DEFAULT_GRID_N[0]);
    }
    let reports = verify_grid(&families, &ns, &VerifyConfig { cap, ..VerifyConfig::default() })?;
    let (mut failures, mut informational) = (0, 0);
    for r in &reports {
        println!("{}", verify_line(r));
        for c in r.claims.iter().filter(|c| c.outcome == Outcome::Mismatch) {
            if c.must_match {
                failures += 1;
            } else {
                informational += 1;
            }
            for cx in &c.counterexamples {
                println!("    {}: {}", claim_name(c.claim), serde_json::to_string(cx)?);
            }
        }
    }
    if let Some(path) = out {
        write(path, &(serde_json::to_string_pretty(&reports)? + "\n"))?;
    }
    println!(
        "verified {} instances: {failures} must-match failures, {informational} informational mismatches",
        reports.len()
    );
    Ok(if failures > 0 { EXIT_MISMATCH } else { 0 })
}

fn claim_name(c: Claim) -> &'static str {
    match c {
        Claim::ParetoSet => "pareto_set",
        Claim::LocalOptima => "local_optima",
        Claim::ClaimedFront => "claimed_front",
        Claim::RatioFormula => "ratio_formula",
    }
}

fn verify_line(r: &VerificationReport) -> String {
    let parts: Vec<String> = r
        .claims
        .iter()
        .map(|c| {
            let status = match (c.outcome, c.must_match) {
                (Outcome::Match, _) => "match".to_string(),
                (Outcome::NotApplicable, _) => "n/a".to_string(),
                (Outcome::Mismatch, true) => format!("MISMATCH({})", c.mismatches),
                (Outcome::Mismatch, false) => format!("mismatch({},info)", c.mismatches),
            };
            format!("{}={status}", claim_name(c.claim))
        })
        .collect();
    format!("{} {}", r.instance, parts.join(" "))
}

/// Six significant digits.
fn decimal(r: &ExactRational) -> String {
    let v = r.to_f64();
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let decimals = (5 - v.abs().log10().floor() as i32).max(0) as usize;
    format!("{v:.decimals$}")
}

fn ratio(raw: &RawDescriptor) -> Result<String> {
    let k = raw.k.ok_or_else(|| anyhow!("ratio needs k"))?;
    match raw.family {
        Family::Ojzj => {
            let r = ratio_ojzj(raw.n, k)?;
            let threshold = ojzj_threshold_k(raw.n)?;
            Ok(format!(
                "{r} ({}), threshold_k={threshold}, k<=threshold_k={}, ratio>=1/2={}",
                decimal(&r),
                k <= threshold,
                r >= ExactRational::half()
            ))
        }
        Family::Ojzr => {
            let l = raw.block_len.ok_or_else(|| anyhow!("ratio for ojzr needs l"))?;
            let r = ratio_ojzr(raw.n, k, l)?;
            let holds = ojzr_bound_holds(&r, raw.n, l);
            Ok(format!("{r} ({}), bound_holds={holds}", decimal(&r)))
        }
        other => bail!("no ratio formula for {other}; expected ojzj or ojzr"),
    }
}

/// `a..b` / `a..=b` (both inclusive) or `a,b,c`.
fn parse_seeds(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().with_context(|| format!("bad seed range {s:?}"))?;
        let b: u64 = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad seed range {s:?}"))?;
        if a > b {
            bail!("empty seed range {s:?}");
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|p| p.trim().parse::<u64>().with_context(|| format!("bad seed {p:?}")))
        .collect()
}

/// Integer or integral scientific notation such as `1e6`.
fn parse_budget(s: &str) -> Result<u64> {
    if let Ok(v) = s.trim().parse::<u64>() {
        if v == 0 {
            bail!("budget must be a positive integer, got {s:?}");
        }
        return Ok(v);
    }
    let v: f64 = s.trim().parse().with_context(|| format!("bad budget {s:?}"))?;
    if v >= 1.0 && v.fract() == 0.0 && v <= u64::MAX as f64 {
        Ok(v as u64)
    } else {
        bail!("budget must be a positive integer, got {s:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_budget() {
        assert_eq!(parse_seeds("1..50").unwrap().len(), 50);
        assert_eq!(parse_seeds("3..=5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_seeds("7, 2,9").unwrap(), vec![7, 2, 9]);
        assert!(parse_seeds("5..1").is_err());
        assert_eq!(parse_budget("1e6").unwrap(), 1_000_000);
        assert_eq!(parse_budget("250").unwrap(), 250);
        assert!(parse_budget("0").is_err());
        assert!(parse_budget("1.5").is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&ExactRational::new(15, 16)), "0.937500");
        assert_eq!(decimal(&ExactRational::new(9, 64)), "0.140625");
        assert_eq!(decimal(&ExactRational::new(1, 1)), "1.00000");
    }
}
