//! SEMO and GSEMO with a seeded hitting-time harness.
//!
//! Runs are single-threaded state machines driven by `ChaCha8Rng` seeded from
//! a `u64`, so results are bit-identical across platforms. The archive keeps
//! the incumbent on objective-vector ties.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitstring::BitString;
use crate::dominance::{dominates, nondominated_filter, weakly_dominates};
use crate::landscape::{enumerate_landscape, LandscapeConfig};
use crate::oracles::{is_must_match, oracle_front, OracleError};
use crate::problems::{ObjectiveVector, ProblemInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Semo,
    Gsemo,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Semo => "semo",
            Algorithm::Gsemo => "gsemo",
        })
    }
}

impl FromStr for Algorithm {
    type Err = EvolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "semo" => Ok(Algorithm::Semo),
            "gsemo" => Ok(Algorithm::Gsemo),
            other => Err(EvolveError::UnknownAlgorithm(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// Archive vectors equal the whole Pareto front.
    FullFront,
    /// Archive contains this front vector.
    FrontPoint(ObjectiveVector),
    /// Archive covers at least this fraction of the Pareto front.
    Coverage(f64),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::FullFront => f.write_str("full_front"),
            Target::FrontPoint(v) => write!(f, "front_point({},{})", v.f1, v.f2),
            Target::Coverage(p) => write!(f, "coverage({p})"),
        }
    }
}

impl FromStr for Target {
    type Err = EvolveError;

    /// Accepts `full_front`, `front_point(f1,f2)` and `coverage(p)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EvolveError::BadTarget(s.to_string());
        let t = s.trim().to_ascii_lowercase().replace(' ', "");
        if t == "full_front" {
            return Ok(Target::FullFront);
        }
        let (head, rest) = t.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        match head {
            "front_point" => {
                let (a, b) = args.split_once(',').ok_or_else(bad)?;
                let f1 = a.parse().map_err(|_| bad())?;
                let f2 = b.parse().map_err(|_| bad())?;
                Ok(Target::FrontPoint(ObjectiveVector::new(f1, f2)))
            }
            "coverage" => {
                let p: f64 = args.parse().map_err(|_| bad())?;
                if p > 0.0 && p <= 1.0 {
                    Ok(Target::Coverage(p))
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvolveError {
    #[error("unknown algorithm {0:?}; expected semo or gsemo")]
    UnknownAlgorithm(String),
    #[error("malformed target {0:?}; expected full_front, front_point(f1,f2) or coverage(p)")]
    BadTarget(String),
    #[error("target {target} is not on the Pareto front of {instance}")]
    TargetOffFront { target: Target, instance: ProblemInstance },
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("no seeds given")]
    NoSeeds,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub instance: ProblemInstance,
    pub seed: u64,
    pub budget: u64,
    pub target: Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArchiveEntry {
    pub x: BitString,
    pub value: ObjectiveVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunResult {
    pub evaluations_used: u64,
    pub hit: bool,
    pub hitting_time: Option<u64>,
    pub archive: Vec<ArchiveEntry>,
}

/// Pareto front used for hitting detection: the closed form where it is
/// must-match, enumeration otherwise.
pub fn target_front(inst: &ProblemInstance, cap: usize) -> Result<Vec<ObjectiveVector>, OracleError> {
    if is_must_match(inst.family()) {
        oracle_front(inst, cap)
    } else {
        let land = enumerate_landscape(inst, &LandscapeConfig { cap, ..LandscapeConfig::default() })?;
        Ok(land.front_vectors())
    }
}

/// A target checked against a concrete front.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedTarget {
    target: Target,
    front: BTreeSet<ObjectiveVector>,
}

impl ResolvedTarget {
    pub fn new(inst: &ProblemInstance, target: Target, cap: usize) -> Result<Self, EvolveError> {
        let front: BTreeSet<ObjectiveVector> = target_front(inst, cap)?.into_iter().collect();
        if let Target::FrontPoint(v) = target {
            if !front.contains(&v) {
                return Err(EvolveError::TargetOffFront { target, instance: *inst });
            }
        }
        Ok(Self { target, front })
    }

    fn is_met(&self, archive: &[ArchiveEntry]) -> bool {
        let covered = || archive.iter().filter(|e| self.front.contains(&e.value)).count();
        match self.target {
            Target::FullFront => covered() == self.front.len(),
            Target::FrontPoint(v) => archive.iter().any(|e| e.value == v),
            Target::Coverage(p) => covered() as f64 >= p * self.front.len() as f64,
        }
    }
}

/// Stepwise SEMO/GSEMO state.
#[derive(Debug, Clone)]
pub struct Optimizer {
    algorithm: Algorithm,
    instance: ProblemInstance,
    budget: u64,
    target: ResolvedTarget,
    rng: ChaCha8Rng,
    archive: Vec<ArchiveEntry>,
    evaluations: u64,
    hitting_time: Option<u64>,
}

impl Optimizer {
    pub fn new(cfg: &RunConfig) -> Result<Self, EvolveError> {
        let target = ResolvedTarget::new(&cfg.instance, cfg.target, LandscapeConfig::default().cap)?;
        Self::with_target(cfg, target)
    }

    /// Draws and evaluates the initial solution.
    pub fn with_target(cfg: &RunConfig, target: ResolvedTarget) -> Result<Self, EvolveError> {
        if cfg.budget == 0 {
            return Err(EvolveError::ZeroBudget);
        }
        let n = cfg.instance.n();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let bits: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
        let x = BitString::from_bits(&bits).expect("instance length is valid");
        let value = cfg.instance.evaluate_index(x.index());
        let mut opt = Self {
            algorithm: cfg.algorithm,
            instance: cfg.instance,
            budget: cfg.budget,
            target,
            rng,
            archive: vec![ArchiveEntry { x, value }],
            evaluations: 1,
            hitting_time: None,
        };
        opt.check_target();
        Ok(opt)
    }

    pub fn archive(&self) -> &[ArchiveEntry] {
        &self.archive
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn hitting_time(&self) -> Option<u64> {
        self.hitting_time
    }

    pub fn is_finished(&self) -> bool {
        self.hitting_time.is_some() || self.evaluations >= self.budget
    }

    fn check_target(&mut self) {
        if self.hitting_time.is_none() && self.target.is_met(&self.archive) {
            self.hitting_time = Some(self.evaluations);
        }
    }

    fn mutate(&mut self, parent: BitString) -> BitString {
        let n = parent.len();
        match self.algorithm {
            Algorithm::Semo => parent.flip(self.rng.random_range(0..n as u32) as usize + 1),
            Algorithm::Gsemo => {
                let p = 1.0 / n as f64;
                (1..=n).fold(parent, |y, pos| if self.rng.random_bool(p) { y.flip(pos) } else { y })
            }
        }
    }

    /// Inserts unless some member weakly dominates the newcomer; evicts
    /// members the newcomer dominates. Returns whether it was inserted.
    fn offer(&mut self, entry: ArchiveEntry) -> bool {
        if self.archive.iter().any(|e| weakly_dominates(e.value, entry.value)) {
            return false;
        }
        self.archive.retain(|e| !dominates(entry.value, e.value));
        self.archive.push(entry);
        true
    }

    /// One parent selection, mutation and evaluation. Does nothing once finished.
    pub fn step(&mut self) {
        if self.is_finished() {
            return;
        }
        let parent = self.archive[self.rng.random_range(0..self.archive.len() as u32) as usize].x;
        let x = self.mutate(parent);
        let value = self.instance.evaluate_index(x.index());
        self.evaluations += 1;
        if self.offer(ArchiveEntry { x, value }) {
            self.check_target();
        }
        debug_assert!(archive_is_mutually_nondominated(&self.archive));
    }

    pub fn run(mut self) -> RunResult {
        while !self.is_finished() {
            self.step();
        }
        self.into_result()
    }

    pub fn into_result(self) -> RunResult {
        RunResult {
            evaluations_used: self.evaluations,
            hit: self.hitting_time.is_some(),
            hitting_time: self.hitting_time,
            archive: self.archive,
        }
    }
}

/// No member weakly dominates another (so vectors are also distinct).
pub fn archive_is_mutually_nondominated(archive: &[ArchiveEntry]) -> bool {
    let values: Vec<ObjectiveVector> = archive.iter().map(|e| e.value).collect();
    nondominated_filter(&values).len() == values.len()
}

fn run_checked(cfg: &RunConfig, algorithm: Algorithm) -> Result<RunResult, EvolveError> {
    let cfg = RunConfig { algorithm, ..cfg.clone() };
    Ok(Optimizer::new(&cfg)?.run())
}

pub fn semo_run(cfg: &RunConfig) -> Result<RunResult, EvolveError> {
    run_checked(cfg, Algorithm::Semo)
}

pub fn gsemo_run(cfg: &RunConfig) -> Result<RunResult, EvolveError> {
    run_checked(cfg, Algorithm::Gsemo)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedRow {
    pub seed: u64,
    pub hit: bool,
    pub hitting_time: Option<u64>,
    pub evaluations_used: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub algorithm: Algorithm,
    pub instance: ProblemInstance,
    pub budget: u64,
    pub target: Target,
    pub rows: Vec<SeedRow>,
    pub success_fraction: f64,
    /// Over hitting runs only.
    pub median_hitting_time: Option<f64>,
    pub mean_hitting_time: Option<f64>,
}

impl ExperimentSummary {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("seed,hit,hitting_time,evaluations_used\n");
        for r in &self.rows {
            let t = r.hitting_time.map(|t| t.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{}\n", r.seed, r.hit, t, r.evaluations_used));
        }
        out
    }

    pub fn summary_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.1}")).unwrap_or_else(|| "-".into());
        format!(
            "{} {} target={} budget={} seeds={} success={:.4} median={} mean={}",
            self.algorithm,
            self.instance,
            self.target,
            self.budget,
            self.rows.len(),
            self.success_fraction,
            opt(self.median_hitting_time),
            opt(self.mean_hitting_time)
        )
    }
}

/// Runs `template` once per seed in parallel; rows follow `seeds` order.
pub fn hitting_time_experiment(template: &RunConfig, seeds: &[u64]) -> Result<ExperimentSummary, EvolveError> {
    if seeds.is_empty() {
        return Err(EvolveError::NoSeeds);
    }
    let target = ResolvedTarget::new(&template.instance, template.target, LandscapeConfig::default().cap)?;
    let rows = seeds
        .par_iter()
        .map(|&seed| {
            let cfg = RunConfig { seed, ..template.clone() };
            let r = Optimizer::with_target(&cfg, target.clone())?.run();
            Ok(SeedRow { seed, hit: r.hit, hitting_time: r.hitting_time, evaluations_used: r.evaluations_used })
        })
        .collect::<Result<Vec<_>, EvolveError>>()?;
    let mut times: Vec<u64> = rows.iter().filter_map(|r| r.hitting_time).collect();
    times.sort_unstable();
    let median = match times.len() {
        0 => None,
        m if m % 2 == 1 => Some(times[m / 2] as f64),
        m => Some((times[m / 2 - 1] + times[m / 2]) as f64 / 2.0),
    };
    let mean = (!times.is_empty()).then(|| times.iter().sum::<u64>() as f64 / times.len() as f64);
    Ok(ExperimentSummary {
        algorithm: template.algorithm,
        instance: template.instance,
        budget: template.budget,
        target: template.target,
        success_fraction: times.len() as f64 / rows.len() as f64,
        rows,
        median_hitting_time: median,
        mean_hitting_time: mean,
    })
}
