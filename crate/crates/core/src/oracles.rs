//! Closed-form Pareto sets, local-optima predicates, claimed fronts and ratio
//! formulas, with a harness that checks each claim against enumeration.
//!
//! Enumeration is ground truth. Closed forms are claims under test: a
//! mismatch is data, reported with concrete counterexamples.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitstring::BitString;
use crate::landscape::{enumerate_landscape, LandscapeConfig, LandscapeError, LandscapeReport};
use crate::problems::{validate, Family, ObjectiveVector, ProblemInstance};
use crate::rational::{binomial, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Landscape(#[from] LandscapeError),
    #[error("ratio formula requires {condition}; got n={n}, k={k}{}", .block_len.map(|l| format!(", l={l}")).unwrap_or_default())]
    Precondition { condition: &'static str, n: usize, k: usize, block_len: Option<usize> },
    #[error("threshold needs n >= 4, got {0}")]
    SmallN(usize),
}

fn blocks_of(x: &BitString, l: usize) -> (usize, usize) {
    x.block_iter(l).fold((0, 0), |(ones, zeroes), b| {
        (ones + b.is_ones() as usize, zeroes + b.is_zeroes() as usize)
    })
}

fn leading_ones(x: &BitString) -> usize {
    x.iter().take_while(|&b| b).count()
}

/// `1^i 0^{n-i}` for some `i`.
fn is_ones_then_zeroes(x: &BitString) -> bool {
    leading_ones(x) == x.count_ones()
}

/// Membership in the closed-form Pareto set.
pub fn in_oracle_pareto_set(inst: &ProblemInstance, x: &BitString) -> bool {
    let n = inst.n();
    let k = inst.k().unwrap_or(0);
    let l = inst.block_len().unwrap_or(1);
    let b = n / l;
    let ones = x.count_ones();
    let zeroes = n - ones;
    let block_complete = || {
        let (o, z) = blocks_of(x, l);
        o + z == b
    };
    match inst.family() {
        Family::Omm => true,
        Family::Lotz | Family::Omtz => is_ones_then_zeroes(x),
        Family::Ojzj => ones == 0 || ones == n || (k <= ones && ones <= n - k),
        Family::Cocz => x.iter().take(n / 2).all(|bit| bit),
        Family::Orzr | Family::Omzr => block_complete(),
        Family::Lozj => ones == 0 || (is_ones_then_zeroes(x) && ones >= k),
        Family::Lozr => is_ones_then_zeroes(x) && ones.is_multiple_of(l),
        Family::Omzj => ones == 0 || zeroes <= n - k,
        Family::Ojzr => {
            if ones == n {
                return true;
            }
            if (n - k).is_multiple_of(l) {
                ones <= n - k && block_complete()
            } else if ones < n - k {
                block_complete()
            } else {
                ones == n - k && blocks_of(x, l).1 == k / l
            }
        }
    }
}

/// Membership in the closed-form set of non-global Pareto local optima.
pub fn in_oracle_local_optima(inst: &ProblemInstance, x: &BitString) -> bool {
    let n = inst.n();
    let k = inst.k().unwrap_or(0);
    let l = inst.block_len().unwrap_or(1);
    let b = n / l;
    match inst.family() {
        Family::Omm | Family::Lotz | Family::Ojzj | Family::Cocz => false,
        Family::Omtz | Family::Omzj | Family::Omzr => false,
        Family::Orzr => {
            let blocks: Vec<_> = x.block_iter(l).collect();
            let open: Vec<_> = blocks.iter().filter(|s| !s.is_complete()).collect();
            !open.is_empty() && open.iter().all(|s| s.ones > 1 && s.zeroes > 1)
        }
        Family::Lozj => x.count_zeroes() == n - k && leading_ones(x) < k,
        Family::Lozr => {
            let i = leading_ones(x);
            if !i.is_multiple_of(l) || i > (b - 1) * l {
                return false;
            }
            let blocks: Vec<_> = x.block_iter(l).collect();
            let j = i / l;
            blocks[j].is_zeroes()
                && blocks[j + 1..].iter().all(|s| s.ones != 1)
                && blocks[j + 1..].iter().any(|s| !s.is_zeroes())
        }
        Family::Ojzr => x.count_ones() == n - k && blocks_of(x, l).1 < k / l,
    }
}

fn materialize(
    inst: &ProblemInstance,
    cap: usize,
    pred: impl Fn(&ProblemInstance, &BitString) -> bool + Sync,
) -> Result<Vec<BitString>, OracleError> {
    if inst.n() > cap {
        return Err(LandscapeError::OverCap { n: inst.n(), cap }.into());
    }
    let n = inst.n();
    Ok((0..inst.space_size())
        .into_par_iter()
        .map(|i| BitString::from_index_unchecked(i, n))
        .filter(|x| pred(inst, x))
        .collect())
}

/// Closed-form Pareto set, ascending by index.
pub fn oracle_pareto_set(inst: &ProblemInstance, cap: usize) -> Result<Vec<BitString>, OracleError> {
    materialize(inst, cap, in_oracle_pareto_set)
}

/// Closed-form non-global local optima, ascending by index.
pub fn oracle_local_optima(inst: &ProblemInstance, cap: usize) -> Result<Vec<BitString>, OracleError> {
    materialize(inst, cap, in_oracle_local_optima)
}

/// Image of [`oracle_pareto_set`], deduplicated and sorted by `f1`.
pub fn oracle_front(inst: &ProblemInstance, cap: usize) -> Result<Vec<ObjectiveVector>, OracleError> {
    let set: BTreeSet<ObjectiveVector> = oracle_pareto_set(inst, cap)?
        .iter()
        .map(|x| inst.evaluate_index(x.index()))
        .collect();
    Ok(set.into_iter().collect())
}

/// Front tuples as stated in closed form, sorted by `f1`. Cross-check only.
pub fn claimed_front_tuples(inst: &ProblemInstance) -> Vec<ObjectiveVector> {
    let n = inst.n() as u32;
    let k = inst.k().unwrap_or(0) as u32;
    let l = inst.block_len().unwrap_or(1) as u32;
    let b = n / l;
    let v = ObjectiveVector::new;
    let mut out: Vec<ObjectiveVector> = match inst.family() {
        Family::Omm | Family::Lotz | Family::Omtz => (0..=n).map(|i| v(i, n - i)).collect(),
        Family::Ojzj => {
            let mut pts = vec![v(k, n + k), v(n + k, k)];
            pts.extend((k..=n - k).map(|s| v(k + s, n + k - s)));
            pts
        }
        Family::Cocz => (0..=n / 2).map(|j| v(n / 2 + j, n - j)).collect(),
        Family::Orzr | Family::Omzr | Family::Lozr => (0..=b).map(|i| v(i * l, (b - i) * l)).collect(),
        Family::Lozj | Family::Omzj => {
            let mut pts = vec![v(0, n + k)];
            pts.extend((k..=n).map(|i| v(i, n + k - i)));
            pts
        }
        Family::Ojzr => {
            let mut pts = vec![v(n + k, 0)];
            if !(n - k).is_multiple_of(l) {
                pts.push(v(n - k, (k / l) * l));
            }
            pts.extend((0..=k / l).map(|i| v(i * l + k, n - i * l)));
            pts
        }
    };
    out.sort_unstable();
    out.dedup();
    out
}

/// `R(n,k) = (2^n - 2 Σ_{s=n-k+1}^{n-1} C(n,s)) / 2^n` for OJZJ.
pub fn ratio_ojzj(n: usize, k: usize) -> Result<ExactRational, OracleError> {
    if k < 1 || 2 * k >= n {
        return Err(OracleError::Precondition { condition: "1 <= k < n/2", n, k, block_len: None });
    }
    // C(n, n-j) for j = 1..k-1, built incrementally.
    let mut term = BigUint::from(1u8);
    let mut valley = BigUint::from(0u8);
    for j in 1..k {
        term = term * (n - j + 1) / j;
        valley += &term;
    }
    let count = (BigUint::from(1u8) << n) - valley * 2u8;
    Ok(ExactRational::over_power_of_two(count, n))
}

/// `floor(n/2 - sqrt(n ln4 / 2))`: the largest `k` with `(n-2k)^2 >= 4 n ln2`, `2k <= n`.
pub fn ojzj_threshold_k(n: usize) -> Result<usize, OracleError> {
    if n < 4 {
        return Err(OracleError::SmallN(n));
    }
    let nf = n as f64;
    let ok = |k: i64| {
        let gap = n as i64 - 2 * k;
        gap >= 0 && (gap * gap) as f64 >= 4.0 * nf * std::f64::consts::LN_2
    };
    let mut k = (nf / 2.0 - (nf * 4f64.ln() / 2.0).sqrt()).floor() as i64;
    while ok(k + 1) {
        k += 1;
    }
    while k > 0 && !ok(k) {
        k -= 1;
    }
    Ok(k.max(0) as usize)
}

/// Parity-dependent approximation of `R(n, floor(n/2) - 1)`.
pub fn ojzj_asymptote(n: usize) -> f64 {
    let scale = if n.is_multiple_of(2) { 3.0 } else { 4.0 };
    scale * std::f64::consts::SQRT_2 / (std::f64::consts::PI * n as f64).sqrt()
}

/// The three numerator terms of the OJZR ratio formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OjzrRatioTerms {
    pub all_ones: BigUint,
    pub complete_blocks: BigUint,
    pub concave_point: BigUint,
}

impl OjzrRatioTerms {
    pub fn total(&self) -> BigUint {
        &self.all_ones + &self.complete_blocks + &self.concave_point
    }
}

pub fn ratio_ojzr_terms(n: usize, k: usize, l: usize) -> Result<OjzrRatioTerms, OracleError> {
    let fail = |condition| Err(OracleError::Precondition { condition, n, k, block_len: Some(l) });
    if k <= 1 || k >= n / 2 {
        return fail("1 < k < floor(n/2)");
    }
    if l == 0 || !n.is_multiple_of(l) {
        return fail("n mod l = 0");
    }
    if n / l < 2 {
        return fail("b = n/l > 1");
    }
    if (n - k).is_multiple_of(l) {
        return fail("(n-k) mod l != 0");
    }
    if l >= k {
        return fail("l < k");
    }
    let b = (n / l) as u64;
    let (lo, fl) = (k.div_ceil(l) as u64, (k / l) as u64);
    Ok(OjzrRatioTerms {
        all_ones: BigUint::from(1u8),
        complete_blocks: (lo..=b).map(|i| binomial(b, i)).sum(),
        concave_point: binomial(b, fl) * binomial((n - k / l * l) as u64, (n - k) as u64),
    })
}

/// `(1 + Σ_{i=ceil(k/l)}^{b} C(b,i) + C(b,floor(k/l)) C(n - floor(k/l) l, n-k)) / 2^n`.
pub fn ratio_ojzr(n: usize, k: usize, l: usize) -> Result<ExactRational, OracleError> {
    Ok(ExactRational::over_power_of_two(ratio_ojzr_terms(n, k, l)?.total(), n))
}

/// Exact check of `R <= 2^(-1 + n(1/l - 1/2))`, squared to keep the exponent integral.
pub fn ojzr_bound_holds(ratio: &ExactRational, n: usize, l: usize) -> bool {
    let twice_exp = 2 * (n / l) as i64 - 2 - n as i64;
    let r2 = ratio.clone() * ratio.clone();
    let bound = if twice_exp >= 0 {
        ExactRational::from_integer(num_bigint::BigInt::from(1) << twice_exp as usize)
    } else {
        ExactRational::over_power_of_two(1, (-twice_exp) as usize)
    };
    r2 <= bound
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    ParetoSet,
    LocalOptima,
    ClaimedFront,
    RatioFormula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Match,
    Mismatch,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    Solution { x: BitString, claimed: bool, computed: bool },
    Vector { f1: u32, f2: u32, claimed: bool, computed: bool },
    Ratio { claimed: ExactRational, computed: ExactRational },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: Claim,
    pub outcome: Outcome,
    /// Whether a mismatch counts as a failure (otherwise informational).
    pub must_match: bool,
    pub mismatches: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ClaimResult {
    pub fn failed(&self) -> bool {
        self.must_match && self.outcome == Outcome::Mismatch
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance: ProblemInstance,
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn claim(&self, claim: Claim) -> &ClaimResult {
        self.claims.iter().find(|c| c.claim == claim).expect("every claim is reported")
    }

    pub fn must_match_failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.failed())
    }

    pub fn passed(&self) -> bool {
        self.must_match_failures().next().is_none()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub cap: usize,
    pub max_counterexamples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { cap: LandscapeConfig::default().cap, max_counterexamples: 5 }
    }
}

/// Every OJZR claim is informational; all others must match.
pub fn is_must_match(family: Family) -> bool {
    family != Family::Ojzr
}

fn compare_sets<T: Ord + Copy>(
    claim: Claim,
    must_match: bool,
    claimed: &BTreeSet<T>,
    computed: &BTreeSet<T>,
    limit: usize,
    witness: impl Fn(T, bool, bool) -> Counterexample,
) -> ClaimResult {
    let diff: Vec<Counterexample> = claimed
        .symmetric_difference(computed)
        .map(|&t| witness(t, claimed.contains(&t), computed.contains(&t)))
        .collect();
    ClaimResult {
        claim,
        outcome: if diff.is_empty() { Outcome::Match } else { Outcome::Mismatch },
        must_match,
        mismatches: diff.len(),
        counterexamples: diff.into_iter().take(limit).collect(),
    }
}

/// Closed-form ratio for the instance, where one is stated.
pub fn ratio_claim(inst: &ProblemInstance) -> Option<ExactRational> {
    let k = inst.k()?;
    match inst.family() {
        Family::Ojzj => ratio_ojzj(inst.n(), k).ok(),
        Family::Ojzr => ratio_ojzr(inst.n(), k, inst.block_len()?).ok(),
        _ => None,
    }
}

pub fn verify_against(inst: &ProblemInstance, land: &LandscapeReport, cfg: &VerifyConfig) -> VerificationReport {
    let must = is_must_match(inst.family());
    let limit = cfg.max_counterexamples;
    let sol = |x: BitString, claimed, computed| Counterexample::Solution { x, claimed, computed };
    let vec = |v: ObjectiveVector, claimed, computed| Counterexample::Vector { f1: v.f1, f2: v.f2, claimed, computed };
    let set_of = |pred: fn(&ProblemInstance, &BitString) -> bool| -> BTreeSet<BitString> {
        (0..inst.space_size())
            .map(|i| BitString::from_index_unchecked(i, inst.n()))
            .filter(|x| pred(inst, x))
            .collect()
    };
    let ps_claimed = set_of(in_oracle_pareto_set);
    let ps_computed: BTreeSet<BitString> = land.pareto_set.iter().copied().collect();
    let lo_claimed = set_of(in_oracle_local_optima);
    let lo_computed: BTreeSet<BitString> = land.local_optima.iter().copied().collect();
    let front_claimed: BTreeSet<ObjectiveVector> = claimed_front_tuples(inst).into_iter().collect();
    let front_computed: BTreeSet<ObjectiveVector> =
        ps_claimed.iter().map(|x| inst.evaluate_index(x.index())).collect();

    let ratio = match ratio_claim(inst) {
        None => ClaimResult {
            claim: Claim::RatioFormula,
            outcome: Outcome::NotApplicable,
            must_match: must,
            mismatches: 0,
            counterexamples: vec![],
        },
        Some(claimed) => {
            let ok = claimed == land.ratio;
            ClaimResult {
                claim: Claim::RatioFormula,
                outcome: if ok { Outcome::Match } else { Outcome::Mismatch },
                must_match: must,
                mismatches: (!ok) as usize,
                counterexamples: if ok {
                    vec![]
                } else {
                    vec![Counterexample::Ratio { claimed, computed: land.ratio.clone() }]
                },
            }
        }
    };

    VerificationReport {
        instance: *inst,
        claims: vec![
            compare_sets(Claim::ParetoSet, must, &ps_claimed, &ps_computed, limit, sol),
            compare_sets(Claim::LocalOptima, must, &lo_claimed, &lo_computed, limit, sol),
            compare_sets(Claim::ClaimedFront, must, &front_claimed, &front_computed, limit, vec),
            ratio,
        ],
    }
}

pub fn verify(inst: &ProblemInstance, cfg: &VerifyConfig) -> Result<VerificationReport, OracleError> {
    let land = enumerate_landscape(inst, &LandscapeConfig { cap: cfg.cap, ..LandscapeConfig::default() })?;
    Ok(verify_against(inst, &land, cfg))
}

pub const DEFAULT_GRID_N: [usize; 5] = [6, 8, 10, 12, 14];

/// Every valid instance of `family` at length `n`, over all `k` and all `l`.
pub fn grid_instances(family: Family, n: usize) -> Vec<ProblemInstance> {
    let ks: Vec<Option<usize>> = if family.needs_jump() { (1..=n).map(Some).collect() } else { vec![None] };
    let ls: Vec<Option<usize>> = if family.needs_block_len() { (1..=n).map(Some).collect() } else { vec![None] };
    let mut out = Vec::new();
    for &k in &ks {
        for &l in &ls {
            if let Ok(inst) = validate(family, n, k, l) {
                out.push(inst);
            }
        }
    }
    out
}

/// Verifies every grid instance in parallel; output ordered by instance.
pub fn verify_grid(
    families: &[Family],
    ns: &[usize],
    cfg: &VerifyConfig,
) -> Result<Vec<VerificationReport>, OracleError> {
    let mut instances: Vec<ProblemInstance> = families
        .iter()
        .flat_map(|&f| ns.iter().flat_map(move |&n| grid_instances(f, n)))
        .collect();
    instances.sort();
    instances.par_iter().map(|inst| verify(inst, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(s: &str) -> ProblemInstance {
        s.parse().unwrap()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn v(f1: u32, f2: u32) -> ObjectiveVector {
        ObjectiveVector::new(f1, f2)
    }

    const CAP: usize = 20;

    #[test]
    fn pareto_set_examples() {
        let lozj = oracle_pareto_set(&inst("lozj:n=8,k=3"), CAP).unwrap();
        let mut expected = vec![bs("00000000")];
        expected.extend((3..=8).map(|i| bs(&format!("{}{}", "1".repeat(i), "0".repeat(8 - i)))));
        expected.sort();
        assert_eq!(lozj, expected);
        assert_eq!(
            oracle_pareto_set(&inst("orzr:n=8,l=4"), CAP).unwrap(),
            vec![bs("00000000"), bs("00001111"), bs("11110000"), bs("11111111")]
        );
        assert_eq!(oracle_pareto_set(&inst("ojzr:n=8,k=3,l=2"), CAP).unwrap().len(), 36);
    }

    #[test]
    fn local_optima_examples() {
        assert!(oracle_local_optima(&inst("omzj:n=8,k=3"), CAP).unwrap().is_empty());
        assert!(oracle_local_optima(&inst("lozj:n=8,k=3"), CAP).unwrap().contains(&bs("10010010")));
        assert!(oracle_local_optima(&inst("orzr:n=8,l=2"), CAP).unwrap().is_empty());
    }

    #[test]
    fn front_examples() {
        assert_eq!(
            claimed_front_tuples(&inst("lozj:n=8,k=3")),
            vec![v(0, 11), v(3, 8), v(4, 7), v(5, 6), v(6, 5), v(7, 4), v(8, 3)]
        );
        assert_eq!(claimed_front_tuples(&inst("orzr:n=8,l=4")), vec![v(0, 8), v(4, 4), v(8, 0)]);
        assert_eq!(
            claimed_front_tuples(&inst("ojzr:n=12,k=6,l=3")),
            vec![v(6, 12), v(9, 9), v(12, 6), v(18, 0)]
        );
        assert_eq!(oracle_front(&inst("lotz:n=8"), CAP).unwrap(), (0..=8).map(|i| v(i, 8 - i)).collect::<Vec<_>>());
        let mut omzj = vec![v(0, 11)];
        omzj.extend((3..=8).map(|i| v(i, 11 - i)));
        assert_eq!(oracle_front(&inst("omzj:n=8,k=3"), CAP).unwrap(), omzj);
        assert_eq!(oracle_front(&inst("omm:n=4"), CAP).unwrap(), vec![v(0, 4), v(1, 3), v(2, 2), v(3, 1), v(4, 0)]);
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_ojzj(8, 2).unwrap(), ExactRational::new(15, 16));
        assert_eq!(ratio_ojzj(8, 3).unwrap(), ExactRational::new(23, 32));
        assert!(ratio_ojzj(8, 4).is_err());
        assert!(ratio_ojzj(8, 0).is_err());
        assert_eq!(ratio_ojzr(8, 3, 2).unwrap(), ExactRational::new(9, 64));
        assert_eq!(ratio_ojzr(12, 5, 3).unwrap(), ExactRational::over_power_of_two(156, 12));
        assert!(matches!(ratio_ojzr(12, 6, 3), Err(OracleError::Precondition { .. })));
        assert!(matches!(
            ratio_ojzr(10, 3, 5),
            Err(OracleError::Precondition { condition: "l < k", .. })
        ));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(ojzj_threshold_k(100).unwrap(), 41);
        assert_eq!(ojzj_threshold_k(32).unwrap(), 11);
        assert_eq!(ojzj_threshold_k(8).unwrap(), 1);
        assert!(ojzj_threshold_k(3).is_err());
        assert!(ratio_ojzj(100, 41).unwrap() >= ExactRational::half());
        for n in 4..400usize {
            let t = ojzj_threshold_k(n).unwrap() as f64;
            let exact = n as f64 / 2.0 - (n as f64 * 4f64.ln() / 2.0).sqrt();
            assert!(t <= exact && exact < t + 1.0, "n={n}");
        }
    }

    #[test]
    fn asymptote_values() {
        assert!((ojzj_asymptote(1600) - 0.0598413).abs() < 1e-6);
        assert!(ojzj_asymptote(1601) > ojzj_asymptote(1600));
    }

    #[test]
    fn verify_examples() {
        let cfg = VerifyConfig::default();
        assert!(verify(&inst("lotz:n=10"), &cfg).unwrap().claims.iter().all(|c| c.outcome != Outcome::Mismatch));
        let ojzr = verify(&inst("ojzr:n=12,k=3,l=3"), &cfg).unwrap();
        let front = ojzr.claim(Claim::ClaimedFront);
        assert_eq!(front.outcome, Outcome::Mismatch);
        assert!(!front.must_match && !front.counterexamples.is_empty());
        assert!(ojzr.passed());
        let omzr = verify(&inst("omzr:n=8,l=2"), &cfg).unwrap();
        assert_eq!(omzr.claim(Claim::ParetoSet).outcome, Outcome::Match);
        assert_eq!(omzr.claim(Claim::LocalOptima).outcome, Outcome::Match);
    }

    #[test]
    fn grid_covers_relaxed_ojzr_bound() {
        let g = grid_instances(Family::Ojzr, 12);
        assert!(g.iter().any(|i| i.k() == Some(6) && i.block_len() == Some(3)));
        assert!(g.iter().all(|i| i.k().unwrap() > 1 && i.k().unwrap() <= 6));
        assert_eq!(grid_instances(Family::Orzr, 8).len(), 3);
    }
}
