//! Plot-ready datasets derived from a landscape report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::landscape::LandscapeReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureKind {
    ObjectivesVsOnes,
    ObjectiveSpace,
    LevelsVsOnes,
}

impl FigureKind {
    pub const ALL: [FigureKind; 3] =
        [FigureKind::ObjectivesVsOnes, FigureKind::ObjectiveSpace, FigureKind::LevelsVsOnes];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::ObjectivesVsOnes => "objectives_vs_ones",
            FigureKind::ObjectiveSpace => "objective_space",
            FigureKind::LevelsVsOnes => "levels_vs_ones",
        }
    }

    pub fn header(self) -> &'static str {
        match self {
            FigureKind::ObjectivesVsOnes => "ones,f1,f2,count",
            FigureKind::ObjectiveSpace => "f1,f2,multiplicity,class",
            FigureKind::LevelsVsOnes => "ones,level,class,count",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown figure kind {0:?}; expected objectives_vs_ones, objective_space or levels_vs_ones")]
pub struct UnknownFigureKind(pub String);

impl FromStr for FigureKind {
    type Err = UnknownFigureKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        FigureKind::ALL
            .into_iter()
            .find(|k| k.name() == t)
            .ok_or(UnknownFigureKind(s.to_string()))
    }
}

impl fmt::Display for FigureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Role of a solution in the landscape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionClass {
    Pareto,
    LocalOptimum,
    Other,
}

impl SolutionClass {
    pub fn name(self) -> &'static str {
        match self {
            SolutionClass::Pareto => "pareto",
            SolutionClass::LocalOptimum => "local_optimum",
            SolutionClass::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OnesObjectiveRow {
    pub ones: usize,
    pub f1: u32,
    pub f2: u32,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObjectiveSpaceRow {
    pub f1: u32,
    pub f2: u32,
    pub multiplicity: u64,
    pub class: SolutionClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub ones: usize,
    pub level: usize,
    pub class: SolutionClass,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "rows", rename_all = "snake_case")]
pub enum FigureDataset {
    ObjectivesVsOnes(Vec<OnesObjectiveRow>),
    ObjectiveSpace(Vec<ObjectiveSpaceRow>),
    LevelsVsOnes(Vec<LevelRow>),
}

impl FigureDataset {
    pub fn kind(&self) -> FigureKind {
        match self {
            FigureDataset::ObjectivesVsOnes(_) => FigureKind::ObjectivesVsOnes,
            FigureDataset::ObjectiveSpace(_) => FigureKind::ObjectiveSpace,
            FigureDataset::LevelsVsOnes(_) => FigureKind::LevelsVsOnes,
        }
    }

    /// Number of solutions the rows account for.
    pub fn total(&self) -> u64 {
        match self {
            FigureDataset::ObjectivesVsOnes(r) => r.iter().map(|r| r.count).sum(),
            FigureDataset::ObjectiveSpace(r) => r.iter().map(|r| r.multiplicity).sum(),
            FigureDataset::LevelsVsOnes(r) => r.iter().map(|r| r.count).sum(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", self.kind().header());
        match self {
            FigureDataset::ObjectivesVsOnes(rows) => {
                for r in rows {
                    out.push_str(&format!("{},{},{},{}\n", r.ones, r.f1, r.f2, r.count));
                }
            }
            FigureDataset::ObjectiveSpace(rows) => {
                for r in rows {
                    out.push_str(&format!("{},{},{},{}\n", r.f1, r.f2, r.multiplicity, r.class.name()));
                }
            }
            FigureDataset::LevelsVsOnes(rows) => {
                for r in rows {
                    out.push_str(&format!("{},{},{},{}\n", r.ones, r.level, r.class.name(), r.count));
                }
            }
        }
        out
    }
}

/// Builds a dataset. Rows with objective values are ordered by `f1`, then `f2`;
/// level rows by number of ones, then level.
pub fn figure_dataset(report: &LandscapeReport, kind: FigureKind) -> FigureDataset {
    let mut local: BTreeMap<(usize, crate::problems::ObjectiveVector), u64> = BTreeMap::new();
    for x in &report.local_optima {
        *local.entry((x.count_ones(), report.value(x.index()))).or_default() += 1;
    }
    // (ones, vector, class, count) with every solution counted once.
    let mut cells = Vec::new();
    for e in &report.ones_vectors {
        let level = report.level_of_vector(e.vector).expect("every image vector has a level");
        if level == 1 {
            cells.push((e.ones, e.vector, level, SolutionClass::Pareto, e.count));
            continue;
        }
        let lo = local.get(&(e.ones, e.vector)).copied().unwrap_or(0);
        if lo > 0 {
            cells.push((e.ones, e.vector, level, SolutionClass::LocalOptimum, lo));
        }
        if e.count > lo {
            cells.push((e.ones, e.vector, level, SolutionClass::Other, e.count - lo));
        }
    }
    match kind {
        FigureKind::ObjectivesVsOnes => {
            let mut rows: Vec<OnesObjectiveRow> = report
                .ones_vectors
                .iter()
                .map(|e| OnesObjectiveRow { ones: e.ones, f1: e.vector.f1, f2: e.vector.f2, count: e.count })
                .collect();
            rows.sort_by_key(|r| (r.f1, r.f2, r.ones));
            FigureDataset::ObjectivesVsOnes(rows)
        }
        FigureKind::ObjectiveSpace => {
            let mut acc: BTreeMap<(u32, u32, SolutionClass), u64> = BTreeMap::new();
            for &(_, v, _, class, count) in &cells {
                *acc.entry((v.f1, v.f2, class)).or_default() += count;
            }
            FigureDataset::ObjectiveSpace(
                acc.into_iter()
                    .map(|((f1, f2, class), multiplicity)| ObjectiveSpaceRow { f1, f2, multiplicity, class })
                    .collect(),
            )
        }
        FigureKind::LevelsVsOnes => {
            let mut acc: BTreeMap<(usize, usize, SolutionClass), u64> = BTreeMap::new();
            for &(ones, _, level, class, count) in &cells {
                *acc.entry((ones, level, class)).or_default() += count;
            }
            FigureDataset::LevelsVsOnes(
                acc.into_iter()
                    .map(|((ones, level, class), count)| LevelRow { ones, level, class, count })
                    .collect(),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::landscape::{enumerate_landscape, LandscapeConfig};
    use crate::rational::binomial;

    fn land(s: &str) -> LandscapeReport {
        enumerate_landscape(&s.parse().unwrap(), &LandscapeConfig::default()).unwrap()
    }

    #[test]
    fn omm_objective_space_is_binomial() {
        let d = figure_dataset(&land("omm:n=8"), FigureKind::ObjectiveSpace);
        let FigureDataset::ObjectiveSpace(rows) = &d else { unreachable!() };
        assert_eq!(rows.len(), 9);
        for r in rows {
            assert_eq!(binomial(8, r.f1 as u64), r.multiplicity.into());
            assert_eq!(r.class, SolutionClass::Pareto);
        }
        assert_eq!(d.total(), 256);
        assert!(d.to_csv().contains("\n4,4,70,pareto\n"));
    }

    #[test]
    fn lotz_levels_cover_space() {
        let d = figure_dataset(&land("lotz:n=8"), FigureKind::LevelsVsOnes);
        assert_eq!(d.total(), 256);
        let FigureDataset::LevelsVsOnes(rows) = &d else { unreachable!() };
        assert_eq!(rows.iter().filter(|r| r.level == 1).map(|r| r.count).sum::<u64>(), 9);
    }

    #[test]
    fn local_optima_are_classified() {
        let r = land("orzr:n=8,l=4");
        let d = figure_dataset(&r, FigureKind::ObjectiveSpace);
        let FigureDataset::ObjectiveSpace(rows) = &d else { unreachable!() };
        let lo: u64 = rows.iter().filter(|r| r.class == SolutionClass::LocalOptimum).map(|r| r.multiplicity).sum();
        assert_eq!(lo, r.local_optima.len() as u64);
        assert_eq!(d.total(), 256);
        assert_eq!(figure_dataset(&r, FigureKind::ObjectivesVsOnes).total(), 256);
    }

    #[test]
    fn rows_are_ordered() {
        let d = figure_dataset(&land("ojzr:n=12,k=5,l=3"), FigureKind::ObjectivesVsOnes);
        let FigureDataset::ObjectivesVsOnes(rows) = &d else { unreachable!() };
        assert!(rows.windows(2).all(|w| (w[0].f1, w[0].f2, w[0].ones) < (w[1].f1, w[1].f2, w[1].ones)));
        assert_eq!("LEVELS_VS_ONES".parse::<FigureKind>().unwrap(), FigureKind::LevelsVsOnes);
    }
}
