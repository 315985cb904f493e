//! Exhaustive landscape analysis of an instance.
//!
//! Every solution is evaluated once (in parallel, collected in index order);
//! the remaining characteristics are derived from that table. All reported
//! sets are in ascending integer-index order.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitstring::{low_mask, BitString};
use crate::dominance::{dominates, nondominated_sort};
use crate::problems::{ObjectiveVector, ProblemInstance};
use crate::rational::ExactRational;

pub const DEFAULT_ENUM_CAP: usize = 24;
/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "PBMO_ENUM_CAP";

/// Enumeration cap from the environment, falling back to the default.
pub fn default_cap() -> usize {
    std::env::var(ENUM_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LandscapeError {
    #[error("n={n} exceeds the enumeration cap {cap}")]
    OverCap { n: usize, cap: usize },
}

#[derive(Debug, Clone)]
pub struct LandscapeConfig {
    pub cap: usize,
    /// `low_ratio_witness` holds when `|PS|/2^n <= low_ratio_threshold`.
    pub low_ratio_threshold: ExactRational,
}

impl Default for LandscapeConfig {
    fn default() -> Self {
        Self { cap: default_cap(), low_ratio_threshold: ExactRational::half() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrontPoint {
    pub f1: u32,
    pub f2: u32,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub level: usize,
    pub count: u64,
}

/// Summary of all solutions with a fixed number of ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OnesRow {
    pub ones: usize,
    pub count: u64,
    pub f1_values: Vec<u32>,
    pub f2_values: Vec<u32>,
    pub levels: Vec<LevelCount>,
}

/// Solutions sharing a number of ones and an objective vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OnesVectorCount {
    pub ones: usize,
    pub vector: ObjectiveVector,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LandscapeReport {
    pub instance: ProblemInstance,
    pub n: usize,
    pub space_size: u64,
    pub pareto_set_size: u64,
    pub ratio: ExactRational,
    pub components: usize,
    pub level_count: usize,
    pub level_sizes: Vec<LevelCount>,
    pub pareto_front: Vec<FrontPoint>,
    pub local_optima_count: usize,
    pub local_optima: Vec<BitString>,
    pub ones_table: Vec<OnesRow>,
    #[serde(skip)]
    pub pareto_set: Vec<BitString>,
    #[serde(skip)]
    pub ones_vectors: Vec<OnesVectorCount>,
    #[serde(skip)]
    values: Vec<ObjectiveVector>,
    #[serde(skip)]
    layers: Vec<Vec<ObjectiveVector>>,
    #[serde(skip)]
    level: HashMap<ObjectiveVector, usize>,
}

impl LandscapeReport {
    pub fn value(&self, index: u64) -> ObjectiveVector {
        self.values[index as usize]
    }

    pub fn values(&self) -> &[ObjectiveVector] {
        &self.values
    }

    /// Distinct vectors per non-dominated level (index 0 is level 1).
    pub fn layers(&self) -> &[Vec<ObjectiveVector>] {
        &self.layers
    }

    pub fn level_of_vector(&self, v: ObjectiveVector) -> Option<usize> {
        self.level.get(&v).copied()
    }

    pub fn level_of(&self, x: &BitString) -> usize {
        self.level[&self.values[x.index() as usize]]
    }

    pub fn front_vectors(&self) -> Vec<ObjectiveVector> {
        self.pareto_front.iter().map(|p| ObjectiveVector::new(p.f1, p.f2)).collect()
    }

    pub fn is_pareto(&self, index: u64) -> bool {
        self.level[&self.values[index as usize]] == 1
    }

    pub fn is_disjoint(&self) -> bool {
        self.components > 1
    }

    /// Summary line: `|PS|=.. ratio=p/q components=.. |LO|=..`.
    pub fn summary(&self) -> String {
        format!(
            "|PS|={} ratio={} components={} |LO|={}",
            self.pareto_set_size, self.ratio, self.components, self.local_optima_count
        )
    }
}

fn check_cap(inst: &ProblemInstance, cap: usize) -> Result<(), LandscapeError> {
    if inst.n() > cap {
        Err(LandscapeError::OverCap { n: inst.n(), cap })
    } else {
        Ok(())
    }
}

pub fn enumerate_landscape(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<LandscapeReport, LandscapeError> {
    check_cap(inst, cfg.cap)?;
    let n = inst.n();
    let size = inst.space_size();
    let values: Vec<ObjectiveVector> =
        (0..size).into_par_iter().map(|i| inst.evaluate_index(i)).collect();

    let ones_counts: BTreeMap<(usize, ObjectiveVector), u64> = (0..size)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<(usize, ObjectiveVector), u64>, i| {
            *acc.entry((i.count_ones() as usize, values[i as usize])).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_default() += c;
            }
            a
        })
        .into_iter()
        .collect();

    let mut vector_counts: BTreeMap<ObjectiveVector, u64> = BTreeMap::new();
    for (&(_, v), &c) in &ones_counts {
        *vector_counts.entry(v).or_default() += c;
    }
    let distinct: Vec<ObjectiveVector> = vector_counts.keys().copied().collect();
    let layers = nondominated_sort(&distinct).layers;
    let level: HashMap<ObjectiveVector, usize> = layers
        .iter()
        .enumerate()
        .flat_map(|(i, l)| l.iter().map(move |&v| (v, i + 1)))
        .collect();

    let pareto_idx: Vec<u64> =
        (0..size).into_par_iter().filter(|&i| level[&values[i as usize]] == 1).collect();
    let local_idx: Vec<u64> = (0..size)
        .into_par_iter()
        .filter(|&i| {
            let v = values[i as usize];
            level[&v] != 1 && (0..n).all(|j| !dominates(values[(i ^ (1 << j)) as usize], v))
        })
        .collect();
    let components = count_components(&pareto_idx, n);

    let mut pareto_front: Vec<FrontPoint> = layers[0]
        .iter()
        .map(|v| FrontPoint { f1: v.f1, f2: v.f2, multiplicity: vector_counts[v] })
        .collect();
    pareto_front.sort_by_key(|p| (p.f1, p.f2));

    let mut level_sizes = vec![0u64; layers.len()];
    for (v, &c) in &vector_counts {
        level_sizes[level[v] - 1] += c;
    }

    let ones_table = (0..=n)
        .map(|ones| {
            let rows: Vec<_> = ones_counts
                .range((ones, ObjectiveVector::new(0, 0))..)
                .take_while(|((o, _), _)| *o == ones)
                .collect();
            let mut f1_values: Vec<u32> = rows.iter().map(|((_, v), _)| v.f1).collect();
            let mut f2_values: Vec<u32> = rows.iter().map(|((_, v), _)| v.f2).collect();
            f1_values.sort_unstable();
            f1_values.dedup();
            f2_values.sort_unstable();
            f2_values.dedup();
            let mut levels: BTreeMap<usize, u64> = BTreeMap::new();
            for ((_, v), &c) in &rows {
                *levels.entry(level[v]).or_default() += c;
            }
            OnesRow {
                ones,
                count: rows.iter().map(|(_, &c)| c).sum(),
                f1_values,
                f2_values,
                levels: levels.into_iter().map(|(level, count)| LevelCount { level, count }).collect(),
            }
        })
        .collect();

    let to_bits = |idx: &[u64]| -> Vec<BitString> {
        idx.iter().map(|&i| BitString::from_index_unchecked(i, n)).collect()
    };
    Ok(LandscapeReport {
        instance: *inst,
        n,
        space_size: size,
        pareto_set_size: pareto_idx.len() as u64,
        ratio: ExactRational::over_power_of_two(pareto_idx.len() as u64, n),
        components,
        level_count: layers.len(),
        level_sizes: level_sizes
            .into_iter()
            .enumerate()
            .map(|(i, count)| LevelCount { level: i + 1, count })
            .collect(),
        pareto_front,
        local_optima_count: local_idx.len(),
        local_optima: to_bits(&local_idx),
        ones_table,
        pareto_set: to_bits(&pareto_idx),
        ones_vectors: ones_counts
            .into_iter()
            .map(|((ones, vector), count)| OnesVectorCount { ones, vector, count })
            .collect(),
        values,
        layers,
        level,
    })
}

/// Connected components of the Hamming-1 graph induced on `members`
/// (sorted ascending indices of length-`n` strings).
pub fn count_components(members: &[u64], n: usize) -> usize {
    let mut inside = vec![false; 1usize << n];
    for &i in members {
        inside[i as usize] = true;
    }
    let mut components = 0;
    let mut queue = VecDeque::new();
    for &start in members {
        if !inside[start as usize] {
            continue;
        }
        components += 1;
        inside[start as usize] = false;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for j in 0..n {
                let y = x ^ (1 << j);
                if inside[y as usize] {
                    inside[y as usize] = false;
                    queue.push_back(y);
                }
            }
        }
    }
    components
}

pub fn local_optima(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<Vec<BitString>, LandscapeError> {
    Ok(enumerate_landscape(inst, cfg)?.local_optima)
}

pub fn ratio_pareto(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<ExactRational, LandscapeError> {
    Ok(enumerate_landscape(inst, cfg)?.ratio)
}

/// Every strict improvement in one objective is a strict loss in the other.
pub fn completely_conflicting(report: &LandscapeReport) -> bool {
    let mut distinct: Vec<ObjectiveVector> = report.level.keys().copied().collect();
    distinct.sort_unstable();
    distinct.windows(2).all(|w| w[0].f1 < w[1].f1 && w[0].f2 > w[1].f2)
}

pub fn is_completely_conflicting(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<bool, LandscapeError> {
    Ok(completely_conflicting(&enumerate_landscape(inst, cfg)?))
}

/// `f1(x) = f2(B(R(x)))` and `f2(x) = f1(B(R(x)))` for every `x`.
pub fn symmetric_pair(report: &LandscapeReport) -> bool {
    let n = report.n;
    let mask = low_mask(n);
    (0..report.space_size).into_par_iter().all(|i| {
        let j = (!(i.reverse_bits() >> (64 - n))) & mask;
        let (a, b) = (report.values[i as usize], report.values[j as usize]);
        a.f1 == b.f2 && a.f2 == b.f1
    })
}

pub fn is_symmetric_pair(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<bool, LandscapeError> {
    Ok(symmetric_pair(&enumerate_landscape(inst, cfg)?))
}

/// `(components > 1, components)` of the Pareto-set Hamming graph.
pub fn is_disjoint_pareto(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<(bool, usize), LandscapeError> {
    let r = enumerate_landscape(inst, cfg)?;
    Ok((r.is_disjoint(), r.components))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Objective {
    First,
    Second,
}

impl Objective {
    fn pick(self, v: ObjectiveVector) -> i64 {
        match self {
            Objective::First => v.f1 as i64,
            Objective::Second => v.f2 as i64,
        }
    }
}

/// Two contexts in which flipping `position` from 0 to 1 changes the
/// objective by different amounts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparabilityWitness {
    pub position: usize,
    pub context_a: BitString,
    pub delta_a: i64,
    pub context_b: BitString,
    pub delta_b: i64,
}

/// Contribution `(g_i(0), g_i(1))` of one bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BitContribution {
    pub zero: i64,
    pub one: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparabilityReport {
    pub objective: Objective,
    pub separable: bool,
    /// Per position `1..=n`; present when separable.
    pub contributions: Option<Vec<BitContribution>>,
    pub witness: Option<SeparabilityWitness>,
}

impl SeparabilityReport {
    /// `Σ_i g_i(x_i)`, when separable.
    pub fn reconstruct(&self, x: &BitString) -> Option<i64> {
        self.contributions.as_ref().map(|g| {
            g.iter().zip(x.iter()).map(|(c, b)| if b { c.one } else { c.zero }).sum()
        })
    }
}

pub fn separability(report: &LandscapeReport, objective: Objective) -> SeparabilityReport {
    let n = report.n;
    let f = |i: u64| objective.pick(report.values[i as usize]);
    let mut deltas = Vec::with_capacity(n);
    for position in 1..=n {
        let bit = 1u64 << (n - position);
        let base = f(bit) - f(0);
        let odd = (0..report.space_size)
            .into_par_iter()
            .filter(|i| i & bit == 0)
            .find_first(|&i| f(i | bit) - f(i) != base);
        if let Some(ctx) = odd {
            let witness = SeparabilityWitness {
                position,
                context_a: BitString::from_index_unchecked(0, n),
                delta_a: base,
                context_b: BitString::from_index_unchecked(ctx, n),
                delta_b: f(ctx | bit) - f(ctx),
            };
            return SeparabilityReport { objective, separable: false, contributions: None, witness: Some(witness) };
        }
        deltas.push(base);
    }
    let contributions = deltas
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let zero = if i == 0 { f(0) } else { 0 };
            BitContribution { zero, one: zero + d }
        })
        .collect();
    SeparabilityReport { objective, separable: true, contributions: Some(contributions), witness: None }
}

pub fn is_fully_separable(
    inst: &ProblemInstance,
    objective: Objective,
    cfg: &LandscapeConfig,
) -> Result<SeparabilityReport, LandscapeError> {
    Ok(separability(&enumerate_landscape(inst, cfg)?, objective))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrontShape {
    Linear,
    /// Some point lies strictly below the chord of its neighbours.
    NonlinearConcave,
    /// Not collinear, but no point lies below a neighbouring chord.
    NonlinearConvex,
    /// Fewer than two front points.
    Degenerate,
}

impl FrontShape {
    pub fn is_nonlinear(self) -> bool {
        matches!(self, FrontShape::NonlinearConcave | FrontShape::NonlinearConvex)
    }
}

/// Classifies a mutually non-dominated point set with exact integer geometry.
pub fn classify_front(front: &[ObjectiveVector]) -> FrontShape {
    let mut pts: Vec<(i64, i64)> = front.iter().map(|v| (v.f1 as i64, v.f2 as i64)).collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 2 {
        return FrontShape::Degenerate;
    }
    let cross = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
        (c.0 - a.0) * (b.1 - a.1) - (c.1 - a.1) * (b.0 - a.0)
    };
    let (a, c) = (pts[0], pts[pts.len() - 1]);
    if pts.iter().all(|&b| cross(a, b, c) == 0) {
        return FrontShape::Linear;
    }
    if pts.windows(3).any(|w| cross(w[0], w[1], w[2]) < 0) {
        FrontShape::NonlinearConcave
    } else {
        FrontShape::NonlinearConvex
    }
}

pub fn front_shape(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<FrontShape, LandscapeError> {
    Ok(classify_front(&enumerate_landscape(inst, cfg)?.front_vectors()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharacteristicProfile {
    pub non_symmetric: bool,
    pub non_completely_conflicting: bool,
    pub disjoint_optima: bool,
    pub not_fully_separable: bool,
    pub low_ratio_witness: bool,
    pub nonlinear_front: bool,
    pub has_local_optima: bool,
}

impl CharacteristicProfile {
    pub const COLUMNS: [&'static str; 7] = [
        "non_symmetric",
        "non_completely_conflicting",
        "disjoint_optima",
        "not_fully_separable",
        "low_ratio_witness",
        "nonlinear_front",
        "has_local_optima",
    ];

    pub fn flags(&self) -> [bool; 7] {
        [
            self.non_symmetric,
            self.non_completely_conflicting,
            self.disjoint_optima,
            self.not_fully_separable,
            self.low_ratio_witness,
            self.nonlinear_front,
            self.has_local_optima,
        ]
    }

    pub fn from_flags(f: [bool; 7]) -> Self {
        Self {
            non_symmetric: f[0],
            non_completely_conflicting: f[1],
            disjoint_optima: f[2],
            not_fully_separable: f[3],
            low_ratio_witness: f[4],
            nonlinear_front: f[5],
            has_local_optima: f[6],
        }
    }
}

pub fn profile_of(report: &LandscapeReport, cfg: &LandscapeConfig) -> CharacteristicProfile {
    CharacteristicProfile {
        non_symmetric: !symmetric_pair(report),
        non_completely_conflicting: !completely_conflicting(report),
        disjoint_optima: report.is_disjoint(),
        not_fully_separable: !(separability(report, Objective::First).separable
            && separability(report, Objective::Second).separable),
        low_ratio_witness: report.ratio <= cfg.low_ratio_threshold,
        nonlinear_front: classify_front(&report.front_vectors()).is_nonlinear(),
        has_local_optima: !report.local_optima.is_empty(),
    }
}

pub fn characteristic_profile(
    inst: &ProblemInstance,
    cfg: &LandscapeConfig,
) -> Result<CharacteristicProfile, LandscapeError> {
    Ok(profile_of(&enumerate_landscape(inst, cfg)?, cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(s: &str) -> ProblemInstance {
        s.parse().unwrap()
    }

    fn land(s: &str) -> LandscapeReport {
        enumerate_landscape(&inst(s), &LandscapeConfig::default()).unwrap()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn v(f1: u32, f2: u32) -> ObjectiveVector {
        ObjectiveVector::new(f1, f2)
    }

    /// Quadratic definition of the Pareto set and local optima.
    fn brute(inst: &ProblemInstance) -> (Vec<BitString>, Vec<BitString>) {
        let n = inst.n();
        let xs: Vec<BitString> = (0..inst.space_size()).map(|i| BitString::from_index(i, n).unwrap()).collect();
        let f = |x: &BitString| inst.evaluate(x).unwrap();
        let ps: Vec<BitString> =
            xs.iter().copied().filter(|x| !xs.iter().any(|y| dominates(f(y), f(x)))).collect();
        let lo = xs
            .iter()
            .copied()
            .filter(|x| !ps.contains(x) && !x.neighbors().iter().any(|y| dominates(f(y), f(x))))
            .collect();
        (ps, lo)
    }

    #[test]
    fn matches_quadratic_definitions() {
        for s in ["omm:n=6", "lotz:n=7", "ojzj:n=8,k=3", "cocz:n=8", "orzr:n=8,l=4", "lozr:n=8,l=2", "ojzr:n=8,k=3,l=2", "lozj:n=8,k=3"] {
            let r = land(s);
            let (ps, lo) = brute(&inst(s));
            assert_eq!(r.pareto_set, ps, "{s}");
            assert_eq!(r.local_optima, lo, "{s}");
        }
    }

    #[test]
    fn named_counts() {
        let omm = land("omm:n=8");
        assert_eq!((omm.pareto_set_size, omm.components), (256, 1));
        assert_eq!(omm.ratio, ExactRational::from_integer(1));
        assert_eq!(omm.summary(), "|PS|=256 ratio=1/1 components=1 |LO|=0");
        let lotz = land("lotz:n=8");
        assert_eq!(lotz.pareto_set_size, 9);
        assert_eq!(lotz.front_vectors(), (0..=8).map(|i| v(i, 8 - i)).collect::<Vec<_>>());
        assert_eq!(lotz.ratio, ExactRational::new(9, 256));
        let ojzj = land("ojzj:n=8,k=2");
        assert_eq!(ojzj.pareto_set_size, 240);
        assert_eq!(ojzj.ratio, ExactRational::new(15, 16));
        assert_eq!(land("lozr:n=8,l=2").pareto_set_size, 5);
    }

    #[test]
    fn local_optima_examples() {
        assert!(land("omzr:n=8,l=2").local_optima.is_empty());
        assert!(land("lozj:n=8,k=3").local_optima.contains(&bs("10010010")));
        assert!(land("orzr:n=8,l=4").local_optima.contains(&bs("11000110")));
        for s in ["omm:n=8", "lotz:n=8", "ojzj:n=8,k=2", "cocz:n=8"] {
            assert!(land(s).local_optima.is_empty(), "{s}");
        }
    }

    #[test]
    fn conflict_symmetry_components() {
        assert!(completely_conflicting(&land("omm:n=8")));
        assert!(!completely_conflicting(&land("lotz:n=8")));
        assert!(completely_conflicting(&land("omm:n=1")));
        assert!(symmetric_pair(&land("omm:n=8")));
        assert!(!symmetric_pair(&land("cocz:n=8")));
        assert!(!symmetric_pair(&land("lozj:n=8,k=3")));
        assert_eq!(land("lotz:n=8").components, 1);
        assert_eq!(land("ojzj:n=8,k=2").components, 3);
        assert_eq!(land("orzr:n=8,l=4").components, 4);
    }

    #[test]
    fn separability_examples() {
        let omm = land("omm:n=8");
        for o in [Objective::First, Objective::Second] {
            let s = separability(&omm, o);
            assert!(s.separable);
            for i in 0..256 {
                let x = BitString::from_index(i, 8).unwrap();
                assert_eq!(s.reconstruct(&x), Some(o.pick(omm.value(i))));
            }
        }
        let lotz = land("lotz:n=8");
        let s = separability(&lotz, Objective::First);
        assert!(!s.separable);
        let w = s.witness.unwrap();
        let bit = BitString::from_index(1 << (8 - w.position), 8).unwrap().index();
        let d = |c: &BitString| {
            let f = |i: u64| lotz.value(i).f1 as i64;
            f(c.index() | bit) - f(c.index())
        };
        assert_eq!((d(&w.context_a), d(&w.context_b)), (w.delta_a, w.delta_b));
        assert_ne!(w.delta_a, w.delta_b);
        let cocz = land("cocz:n=8");
        assert!(separability(&cocz, Objective::First).separable);
        assert!(separability(&cocz, Objective::Second).separable);
    }

    #[test]
    fn front_shapes() {
        assert_eq!(classify_front(&land("lotz:n=8").front_vectors()), FrontShape::Linear);
        assert_eq!(classify_front(&land("ojzr:n=12,k=5,l=3").front_vectors()), FrontShape::NonlinearConcave);
        assert_eq!(classify_front(&land("ojzr:n=12,k=6,l=3").front_vectors()), FrontShape::Linear);
        assert_eq!(classify_front(&[v(1, 1)]), FrontShape::Degenerate);
        assert_eq!(classify_front(&[v(0, 10), v(6, 6), v(10, 0)]), FrontShape::NonlinearConvex);
        assert_eq!(classify_front(&[v(0, 10), v(4, 4), v(10, 0)]), FrontShape::NonlinearConcave);
    }

    #[test]
    fn profiles() {
        let cfg = LandscapeConfig::default();
        assert_eq!(profile_of(&land("omm:n=8"), &cfg).flags(), [false; 7]);
        assert_eq!(profile_of(&land("ojzr:n=12,k=5,l=3"), &cfg).flags(), [true; 7]);
        assert!(profile_of(&land("orzr:n=8,l=4"), &cfg).has_local_optima);
        assert!(!profile_of(&land("orzr:n=8,l=2"), &cfg).has_local_optima);
    }

    #[test]
    fn report_invariants() {
        for s in ["ojzr:n=10,k=4,l=2", "lozj:n=10,k=3", "cocz:n=10"] {
            let r = land(s);
            assert_eq!(r.pareto_front.iter().map(|p| p.multiplicity).sum::<u64>(), r.pareto_set_size);
            assert!(r.local_optima.iter().all(|x| !r.pareto_set.contains(x)));
            assert_eq!(r.level_sizes.iter().map(|l| l.count).sum::<u64>(), r.space_size);
            assert_eq!(r.ones_table.iter().map(|o| o.count).sum::<u64>(), r.space_size);
            assert!(r.pareto_set.iter().all(|x| r.level_of(x) == 1));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = LandscapeConfig { cap: 10, ..LandscapeConfig::default() };
        assert_eq!(
            enumerate_landscape(&inst("omm:n=12"), &cfg).unwrap_err(),
            LandscapeError::OverCap { n: 12, cap: 10 }
        );
    }
}
