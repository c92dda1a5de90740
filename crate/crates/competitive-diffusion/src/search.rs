//! Exhaustive Nash-equilibrium search. This is the ground-truth oracle the
//! specialized solvers are tested against.
//!
//! Player symmetry (permuting a profile permutes utilities the same way)
//! means it suffices to enumerate multisets of seeds, i.e. non-decreasing
//! tuples, in lexicographic order.

use thiserror::Error;

use crate::engine::{is_nash, EngineError, NashVerdict, StrategyProfile};
use crate::graph::GameInstance;

/// Default ceiling on the estimated number of profile simulations.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop at the first equilibrium in enumeration order.
    First,
    /// Collect every equilibrium (up to player permutation).
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    /// First equilibrium found, if any (choices non-decreasing).
    pub found: Option<StrategyProfile>,
    /// Number of candidate profiles whose equilibrium check was started.
    pub profiles_checked: u64,
    /// All equilibria up to player permutation; populated in `All` mode.
    pub equilibria: Option<Vec<StrategyProfile>>,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(
        "search budget exceeded: n = {n}, k = {k} needs about {estimated} \
         profile-simulations, budget is {budget}"
    )]
    BudgetExceeded {
        n: usize,
        k: usize,
        estimated: u128,
        budget: u128,
    },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

fn multiset_count(n: u128, k: u128) -> u128 {
    // C(n + k - 1, k), saturating.
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul(n + i);
        result /= i + 1;
        if result > u128::MAX / (n + k) {
            return u128::MAX;
        }
    }
    result
}

/// Estimated simulations for a full search: one base run plus a k*n deviation
/// scan per candidate profile.
pub fn estimated_cost(n: usize, k: usize) -> u128 {
    let per_profile = 1 + (k as u128) * (n as u128);
    multiset_count(n as u128, k as u128).saturating_mul(per_profile)
}

/// Exhaustive search over all seed multisets.
///
/// Returns the exact answer: an equilibrium exists for the instance iff one
/// exists with non-decreasing choices. A deterministic budget check rejects
/// instances whose estimated cost exceeds `budget` (pass `None` to use
/// [`DEFAULT_BUDGET`]).
pub fn brute_force(
    instance: &GameInstance,
    mode: SearchMode,
    budget: Option<u128>,
) -> Result<SearchReport, SearchError> {
    let n = instance.graph.vertex_count();
    let k = instance.players();
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let estimated = estimated_cost(n, k);
    if estimated > budget {
        return Err(SearchError::BudgetExceeded {
            n,
            k,
            estimated,
            budget,
        });
    }

    let mut report = SearchReport {
        found: None,
        profiles_checked: 0,
        equilibria: if mode == SearchMode::All {
            Some(Vec::new())
        } else {
            None
        },
    };

    let mut choices = vec![0usize; k];
    loop {
        report.profiles_checked += 1;
        let profile = StrategyProfile::new(choices.clone());
        if is_nash(instance, &profile)? == NashVerdict::Equilibrium {
            if report.found.is_none() {
                report.found = Some(profile.clone());
            }
            match &mut report.equilibria {
                Some(all) => all.push(profile),
                None => return Ok(report),
            }
        }
        // Advance to the next non-decreasing tuple.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(report);
            }
            i -= 1;
            if choices[i] + 1 < n {
                let v = choices[i] + 1;
                for c in &mut choices[i..] {
                    *c = v;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;

    #[test]
    fn single_vertex_single_player_is_found() {
        let g = WeightedGraph::from_edges(vec![3], &[]).unwrap();
        let instance = GameInstance::new(g, 1).unwrap();
        let report = brute_force(&instance, SearchMode::First, None).unwrap();
        assert_eq!(report.found, Some(vec![0].into()));
    }

    #[test]
    fn two_path_two_players_is_found() {
        // Multisets: (0,0), (0,1), (1,1). The split (0,1) is the equilibrium.
        let g = WeightedGraph::path(vec![1, 1]);
        let instance = GameInstance::new(g, 2).unwrap();
        let report = brute_force(&instance, SearchMode::All, None).unwrap();
        assert_eq!(report.found, Some(vec![0, 1].into()));
        assert_eq!(report.profiles_checked, 3);
        assert_eq!(report.equilibria.unwrap(), vec![vec![0, 1].into()]);
    }

    #[test]
    fn star_k14_two_players_regression() {
        // K_{1,4}, center 0. Exhaustive check found (0, leaf) equilibria; the
        // first in enumeration order is (0, 1).
        let g = WeightedGraph::unweighted(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let instance = GameInstance::new(g, 2).unwrap();
        let report = brute_force(&instance, SearchMode::All, None).unwrap();
        assert_eq!(report.found, Some(vec![0, 1].into()));
        let all = report.equilibria.unwrap();
        assert_eq!(
            all,
            vec![
                StrategyProfile::from(vec![0, 1]),
                vec![0, 2].into(),
                vec![0, 3].into(),
                vec![0, 4].into()
            ]
        );
        assert_eq!(report.profiles_checked, 15);
    }

    #[test]
    fn budget_guard_names_the_instance() {
        let g = WeightedGraph::unweighted(30, &[]).unwrap();
        let instance = GameInstance::new(g, 12).unwrap();
        match brute_force(&instance, SearchMode::First, Some(1000)) {
            Err(SearchError::BudgetExceeded { n: 30, k: 12, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
