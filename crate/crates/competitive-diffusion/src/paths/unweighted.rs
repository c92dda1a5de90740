//! Closed-form admissibility for unweighted paths: the per-count inequality
//! characterization, the per-boundary case table, and the constructive
//! placements that realize any admissible count.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnweightedError {
    #[error("boundary must be a positive integer, got {0}")]
    NonPositiveBoundary(i64),
}

/// Whether an unweighted path of `n` vertices admits `kappa` players with
/// boundary `t >= 1`, by the inequality characterization.
pub fn path_admits(n: usize, kappa: usize, t: usize) -> bool {
    debug_assert!(t >= 1);
    match kappa {
        0 => n <= t,
        1 => t <= n && n <= 2 * t + 1,
        2 => 2 * t <= n && n <= 2 * t + 2,
        3 => t == 1 && (3..=5).contains(&n),
        _ => {
            let upper = (2 * kappa - 4) * t + kappa;
            if kappa.is_multiple_of(2) {
                kappa * t <= n && n <= upper
            } else {
                (kappa + 1) * t >= 1 && (kappa + 1) * t - 1 <= n && n <= upper
            }
        }
    }
}

/// The admissible counts for a fixed boundary: a base interval plus the
/// exceptional counts of the three- and four-vertex paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleCounts {
    pub base: Option<(usize, usize)>,
    pub exceptional: Vec<usize>,
}

impl AdmissibleCounts {
    fn empty() -> Self {
        AdmissibleCounts {
            base: None,
            exceptional: Vec::new(),
        }
    }

    fn interval(lo: usize, hi: usize) -> Self {
        AdmissibleCounts {
            base: Some((lo, hi)),
            exceptional: Vec::new(),
        }
    }

    pub fn contains(&self, kappa: usize) -> bool {
        self.base.is_some_and(|(lo, hi)| lo <= kappa && kappa <= hi)
            || self.exceptional.contains(&kappa)
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_none() && self.exceptional.is_empty()
    }

    /// Smallest and largest admissible counts. The table only produces sets
    /// that are contiguous once base and exceptional points are merged.
    pub fn bounds(&self) -> Option<(usize, usize)> {
        let mut lo = usize::MAX;
        let mut hi = 0;
        if let Some((a, b)) = self.base {
            lo = lo.min(a);
            hi = hi.max(b);
        }
        for &e in &self.exceptional {
            lo = lo.min(e);
            hi = hi.max(e);
        }
        (lo != usize::MAX).then_some((lo, hi))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let (lo, hi) = self.bounds().unwrap_or((1, 0));
        (lo..=hi).filter(move |&k| self.contains(k))
    }
}

/// The per-boundary case table for an unweighted path of `n` vertices.
pub fn admissible_range_unweighted(n: usize, t: i64) -> Result<AdmissibleCounts, UnweightedError> {
    if t < 1 {
        return Err(UnweightedError::NonPositiveBoundary(t));
    }
    let t = t as usize;
    Ok(if n < t {
        AdmissibleCounts::interval(0, 0)
    } else if n == t {
        AdmissibleCounts::interval(0, 1)
    } else if t < n && n < 2 * t {
        AdmissibleCounts::interval(1, 1)
    } else if 2 * t <= n && n <= 2 * t + 1 {
        if n == 3 {
            AdmissibleCounts {
                base: Some((1, 2)),
                exceptional: vec![3],
            }
        } else {
            AdmissibleCounts::interval(1, 2)
        }
    } else if n == 2 * t + 2 {
        if n == 4 {
            AdmissibleCounts {
                base: Some((2, 2)),
                exceptional: vec![3, 4],
            }
        } else {
            AdmissibleCounts::interval(2, 2)
        }
    } else if 2 * t + 3 <= n && n < 4 * t {
        AdmissibleCounts::empty()
    } else {
        // n >= 4t and n >= 5.
        debug_assert!(n >= 4 * t && n >= 5);
        let lower = (n + 4 * t).div_ceil(2 * t + 1);
        let k_odd = {
            let bound = (n + 1 - t) / t;
            if bound % 2 == 1 {
                bound
            } else {
                bound.saturating_sub(1)
            }
        };
        let k_even = {
            let bound = n / t;
            if bound.is_multiple_of(2) {
                bound
            } else {
                bound - 1
            }
        };
        let upper = k_odd.max(k_even);
        if lower <= upper {
            AdmissibleCounts::interval(lower, upper)
        } else {
            AdmissibleCounts::empty()
        }
    })
}

/// Seed positions (0-based, sorted) realizing `kappa` players on an
/// unweighted `n`-path with boundary `t`, or `None` when not admissible.
///
/// For four or more players the profile is described by the gaps between
/// consecutive seeds: the two end gaps range over `{t-1, t}`, players pair up
/// at both ends (zero inner gap), gaps between neighboring pairs range over
/// `[2t-2, 2t]`, and a pair may stretch apart up to `2t` once everything to
/// its left is at maximum. Filling the slack greedily left to right realizes
/// every admissible length.
pub fn place_players(n: usize, kappa: usize, t: usize) -> Option<Vec<usize>> {
    if t < 1 || !path_admits(n, kappa, t) {
        return None;
    }
    match kappa {
        0 => Some(Vec::new()),
        1 => Some(vec![(n - 1) / 2]),
        2 => {
            if n.is_multiple_of(2) {
                Some(vec![n / 2 - 1, n / 2])
            } else {
                Some(vec![n / 2, n / 2 + 1])
            }
        }
        3 => {
            let start = (n - 3) / 2;
            Some(vec![start, start + 1, start + 2])
        }
        _ => {
            let bounds: Vec<(usize, usize)> =
                (0..=kappa).map(|i| gap_bounds(i, kappa, t)).collect();
            let min_total: usize = bounds.iter().map(|&(lo, _)| lo).sum();
            let max_total: usize = bounds.iter().map(|&(_, hi)| hi).sum();
            let mut slack = n.checked_sub(kappa + min_total)?;
            if kappa + max_total < n {
                return None;
            }
            let mut gaps: Vec<usize> = bounds.iter().map(|&(lo, _)| lo).collect();
            for (i, &(lo, hi)) in bounds.iter().enumerate() {
                let add = slack.min(hi - lo);
                gaps[i] = lo + add;
                slack -= add;
            }
            debug_assert_eq!(slack, 0);
            let mut seeds = Vec::with_capacity(kappa);
            let mut pos = 0;
            for gap in gaps.iter().take(kappa) {
                pos += gap;
                seeds.push(pos);
                pos += 1;
            }
            Some(seeds)
        }
    }
}

fn gap_bounds(i: usize, kappa: usize, t: usize) -> (usize, usize) {
    if i == 0 || i == kappa {
        (t - 1, t)
    } else if i == 1 || i == kappa - 1 {
        (0, 0)
    } else if i.is_multiple_of(2) || (kappa % 2 == 1 && i == kappa - 2) {
        // Between-pair gaps; for odd counts the lone solo sits before the
        // final pair, pinning that gap wide as well.
        (2 * t - 2, 2 * t)
    } else {
        (0, 2 * t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{is_nash, simulate, NashVerdict, StrategyProfile};
    use crate::graph::{GameInstance, WeightedGraph};

    #[test]
    fn case_table_matches_paper_examples() {
        let counts = admissible_range_unweighted(5, 2).unwrap();
        assert_eq!(counts.iter().collect::<Vec<_>>(), vec![1, 2]);
        let counts = admissible_range_unweighted(3, 1).unwrap();
        assert_eq!(counts.iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        let counts = admissible_range_unweighted(4, 1).unwrap();
        assert_eq!(counts.iter().collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn case_table_matches_inequalities() {
        for n in 1..=60 {
            for t in 1..=8usize {
                let counts = admissible_range_unweighted(n, t as i64).unwrap();
                for kappa in 0..=(2 * n + 2) {
                    assert_eq!(
                        counts.contains(kappa),
                        path_admits(n, kappa, t),
                        "n = {n}, t = {t}, kappa = {kappa}"
                    );
                }
            }
        }
    }

    #[test]
    fn nonpositive_boundary_is_rejected() {
        assert!(admissible_range_unweighted(5, 0).is_err());
    }

    /// Every constructed placement must be a Nash equilibrium whose extra
    /// potential and utility floor bracket the boundary.
    #[test]
    fn placements_are_certified_equilibria() {
        for n in 1..=24 {
            let game_graph = WeightedGraph::path(vec![1; n]);
            for t in 1..=4usize {
                for kappa in 1..=(n + 2) {
                    let Some(seeds) = place_players(n, kappa, t) else {
                        continue;
                    };
                    assert_eq!(seeds.len(), kappa);
                    let game = GameInstance::new(game_graph.clone(), kappa).unwrap();
                    let profile = StrategyProfile::new(seeds);
                    assert_eq!(
                        is_nash(&game, &profile).unwrap(),
                        NashVerdict::Equilibrium,
                        "n = {n}, t = {t}, kappa = {kappa}, profile {profile:?}"
                    );
                    let outcome = simulate(&game, &profile).unwrap();
                    let mu = *outcome.utilities.iter().min().unwrap();
                    assert!(mu >= t as i64, "floor: n={n} t={t} kappa={kappa}");
                    let extended = GameInstance::new(game_graph.clone(), kappa + 1).unwrap();
                    let nu = (0..n)
                        .map(|v| {
                            let mut choices = profile.choices().to_vec();
                            choices.push(v);
                            simulate(&extended, &StrategyProfile::new(choices))
                                .unwrap()
                                .utilities[kappa]
                        })
                        .max()
                        .unwrap();
                    assert!(nu <= t as i64, "cap: n={n} t={t} kappa={kappa}");
                }
            }
        }
    }

    #[test]
    fn placement_exists_for_every_admissible_count() {
        for n in 1..=40 {
            for t in 1..=6usize {
                for kappa in 0..=(2 * n) {
                    assert_eq!(
                        place_players(n, kappa, t).is_some(),
                        path_admits(n, kappa, t),
                        "n = {n}, t = {t}, kappa = {kappa}"
                    );
                }
            }
        }
    }
}
