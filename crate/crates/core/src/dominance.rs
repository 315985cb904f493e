//! Pareto dominance (maximisation) and non-dominated sorting by peeling.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::problems::ObjectiveVector;

#[inline]
pub fn weakly_dominates(u: ObjectiveVector, v: ObjectiveVector) -> bool {
    u.f1 >= v.f1 && u.f2 >= v.f2
}

#[inline]
pub fn dominates(u: ObjectiveVector, v: ObjectiveVector) -> bool {
    weakly_dominates(u, v) && u != v
}

/// Distinct vectors, sorted by `f1` ascending.
fn distinct(points: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    let mut v = points.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Non-dominated subset of the distinct input vectors, ordered by `f1`
/// descending (hence `f2` ascending).
pub fn nondominated_filter(points: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    sweep(&distinct(points))
}

/// Sweep over distinct vectors sorted ascending: scanning from the largest
/// `f1`, a vector survives iff its `f2` beats every `f2` seen so far.
fn sweep(sorted: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
    let mut out = Vec::new();
    let mut best_f2: Option<u32> = None;
    for &p in sorted.iter().rev() {
        if best_f2.is_none_or(|b| p.f2 > b) {
            out.push(p);
            best_f2 = Some(p.f2);
        }
    }
    out
}

/// Level of every input point. Level 1 is the non-dominated set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelAssignment {
    /// `levels[i]` is the level of input point `i`.
    pub levels: Vec<usize>,
    /// Distinct vectors per level (index 0 is level 1), each ordered by
    /// `(f1 desc, f2 desc)`.
    pub layers: Vec<Vec<ObjectiveVector>>,
}

impl LevelAssignment {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn level_of(&self, v: ObjectiveVector) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&v)).map(|i| i + 1)
    }
}

pub fn nondominated_sort(points: &[ObjectiveVector]) -> LevelAssignment {
    let mut remaining = distinct(points);
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let layer = sweep(&remaining);
        remaining.retain(|p| !layer.contains(p));
        layers.push(layer);
    }
    let level: BTreeMap<ObjectiveVector, usize> = layers
        .iter()
        .enumerate()
        .flat_map(|(i, l)| l.iter().map(move |&v| (v, i + 1)))
        .collect();
    LevelAssignment { levels: points.iter().map(|p| level[p]).collect(), layers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(f1: u32, f2: u32) -> ObjectiveVector {
        ObjectiveVector::new(f1, f2)
    }

    #[test]
    fn relation_examples() {
        assert!(weakly_dominates(v(3, 5), v(3, 5)));
        assert!(weakly_dominates(v(3, 5), v(3, 4)));
        assert!(!weakly_dominates(v(3, 5), v(4, 4)));
        assert!(!dominates(v(3, 5), v(3, 5)));
        assert!(dominates(v(3, 5), v(2, 5)));
        assert!(!dominates(v(4, 4), v(3, 5)));
    }

    #[test]
    fn filter_and_sort_examples() {
        assert_eq!(nondominated_filter(&[v(1, 1)]), vec![v(1, 1)]);
        let pts = [v(2, 0), v(0, 2), v(1, 1), v(0, 0)];
        let mut nd = nondominated_filter(&pts);
        nd.sort();
        assert_eq!(nd, vec![v(0, 2), v(1, 1), v(2, 0)]);
        assert_eq!(nondominated_sort(&[v(1, 1)]).levels, vec![1]);
        let s = nondominated_sort(&pts);
        assert_eq!(s.levels, vec![1, 1, 1, 2]);
        assert_eq!(s.layers[0], vec![v(2, 0), v(1, 1), v(0, 2)]);
        let dup = nondominated_sort(&[v(1, 1), v(1, 1), v(0, 0)]);
        assert_eq!(dup.levels, vec![1, 1, 2]);
    }

    #[test]
    fn omm_image_is_one_level() {
        let pts: Vec<_> = (0..256u32).map(|i| v(i.count_ones(), 8 - i.count_ones())).collect();
        assert_eq!(nondominated_filter(&pts).len(), 9);
        assert!(nondominated_sort(&pts).levels.iter().all(|&l| l == 1));
    }

    fn brute_filter(points: &[ObjectiveVector]) -> Vec<ObjectiveVector> {
        let mut out: Vec<_> = points
            .iter()
            .copied()
            .filter(|p| !points.iter().any(|q| dominates(*q, *p)))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn arb_points() -> impl Strategy<Value = Vec<ObjectiveVector>> {
        prop::collection::vec((0u32..12, 0u32..12).prop_map(|(a, b)| v(a, b)), 1..60)
    }

    proptest! {
        #[test]
        fn dominance_is_a_strict_partial_order(a in (0u32..6, 0u32..6), b in (0u32..6, 0u32..6), c in (0u32..6, 0u32..6)) {
            let (a, b, c) = (v(a.0, a.1), v(b.0, b.1), v(c.0, c.1));
            prop_assert!(!dominates(a, a));
            prop_assert!(weakly_dominates(a, a));
            prop_assert!(!(dominates(a, b) && dominates(b, a)));
            if dominates(a, b) && dominates(b, c) { prop_assert!(dominates(a, c)); }
            if weakly_dominates(a, b) && weakly_dominates(b, c) { prop_assert!(weakly_dominates(a, c)); }
        }

        #[test]
        fn filter_matches_quadratic_definition(pts in arb_points()) {
            let mut nd = nondominated_filter(&pts);
            nd.sort();
            prop_assert_eq!(nd, brute_filter(&pts));
        }

        #[test]
        fn levels_partition_and_chain(pts in arb_points()) {
            let s = nondominated_sort(&pts);
            prop_assert_eq!(s.levels.len(), pts.len());
            let mut all: Vec<_> = s.layers.iter().flatten().copied().collect();
            let total = all.len();
            all.sort();
            all.dedup();
            prop_assert_eq!(all.len(), total);
            prop_assert_eq!(all, distinct(&pts));
            let mut first = s.layers[0].clone();
            first.sort();
            prop_assert_eq!(first, brute_filter(&pts));
            for j in 1..s.layers.len() {
                for p in &s.layers[j] {
                    prop_assert!(s.layers[j - 1].iter().any(|q| dominates(*q, *p)));
                }
            }
            for layer in &s.layers {
                for w in layer.windows(2) {
                    prop_assert!(w[0] > w[1]);
                }
            }
        }

        #[test]
        fn peeling_level_one_shifts_the_rest(pts in arb_points()) {
            let s = nondominated_sort(&pts);
            let rest: Vec<_> = pts.iter().copied().filter(|p| !s.layers[0].contains(p)).collect();
            if !rest.is_empty() {
                let t = nondominated_sort(&rest);
                prop_assert_eq!(&t.layers[..], &s.layers[1..]);
            }
        }
    }
}
