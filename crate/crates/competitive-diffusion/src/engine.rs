//! Deterministic simulation of the diffusion process and Nash-equilibrium
//! verification.
//!
//! The dynamics: at time 1 every player seeds a vertex (a shared seed turns
//! neutral); at each later time step an undecided vertex adjacent to exactly
//! one player's territory joins that player, one adjacent to two or more
//! distinct players' territories turns neutral, and all updates of a step are
//! computed from the previous step's state simultaneously. Neutral vertices
//! never propagate. The process stops at the first step that decides nothing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GameInstance;

/// One seed vertex per player; `choices[i]` is player `i`'s seed. Duplicates
/// are permitted (they produce a neutral seed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrategyProfile {
    choices: Vec<usize>,
}

impl StrategyProfile {
    pub fn new(choices: Vec<usize>) -> Self {
        Self { choices }
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn choices(&self) -> &[usize] {
        &self.choices
    }

    pub fn choice(&self, player: usize) -> usize {
        self.choices[player]
    }

    /// The profile with player `i`'s seed replaced by `v`.
    pub fn with_deviation(&self, player: usize, v: usize) -> Self {
        let mut choices = self.choices.clone();
        choices[player] = v;
        Self { choices }
    }
}

impl From<Vec<usize>> for StrategyProfile {
    fn from(choices: Vec<usize>) -> Self {
        Self::new(choices)
    }
}

/// Final state of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexFate {
    Dominated { player: usize, time: u32 },
    Neutral { time: u32 },
    Undominated,
}

impl VertexFate {
    pub fn owner(&self) -> Option<usize> {
        match self {
            VertexFate::Dominated { player, .. } => Some(*player),
            _ => None,
        }
    }

    pub fn time(&self) -> Option<u32> {
        match self {
            VertexFate::Dominated { time, .. } | VertexFate::Neutral { time } => Some(*time),
            VertexFate::Undominated => None,
        }
    }
}

/// Outcome of one simulated game: per-vertex fates and per-player utilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffusionOutcome {
    pub fates: Vec<VertexFate>,
    pub utilities: Vec<i64>,
}

impl DiffusionOutcome {
    pub fn owner(&self, v: usize) -> Option<usize> {
        self.fates[v].owner()
    }

    pub fn time(&self, v: usize) -> Option<u32> {
        self.fates[v].time()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("profile has {profile} choices but the game has {players} players")]
    ProfileLength { profile: usize, players: usize },
    #[error("player {player} chose vertex {vertex}, out of range for {vertices} vertices")]
    VertexOutOfRange {
        player: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("player index {player} out of range for {players} players")]
    PlayerOutOfRange { player: usize, players: usize },
}

fn check_profile(instance: &GameInstance, profile: &StrategyProfile) -> Result<(), EngineError> {
    if profile.len() != instance.players() {
        return Err(EngineError::ProfileLength {
            profile: profile.len(),
            players: instance.players(),
        });
    }
    let n = instance.graph.vertex_count();
    for (player, &vertex) in profile.choices().iter().enumerate() {
        if vertex >= n {
            return Err(EngineError::VertexOutOfRange {
                player,
                vertex,
                vertices: n,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq)]
enum Cell {
    Free,
    Owned(usize),
    Neutral,
}

/// Runs the diffusion process to its fixpoint and reports fates and utilities.
pub fn simulate(
    instance: &GameInstance,
    profile: &StrategyProfile,
) -> Result<DiffusionOutcome, EngineError> {
    check_profile(instance, profile)?;
    let g = &instance.graph;
    let n = g.vertex_count();

    let mut state = vec![Cell::Free; n];
    let mut fates = vec![VertexFate::Undominated; n];

    // Time 1: seeds; a vertex chosen by two or more players turns neutral.
    let mut seed_count = vec![0usize; n];
    for &v in profile.choices() {
        seed_count[v] += 1;
    }
    let mut frontier: Vec<usize> = Vec::new();
    for (player, &v) in profile.choices().iter().enumerate() {
        match seed_count[v] {
            1 => {
                state[v] = Cell::Owned(player);
                fates[v] = VertexFate::Dominated { player, time: 1 };
                frontier.push(v);
            }
            _ => {
                if state[v] == Cell::Free {
                    state[v] = Cell::Neutral;
                    fates[v] = VertexFate::Neutral { time: 1 };
                }
            }
        }
    }
    frontier.sort_unstable();
    frontier.dedup();

    let mut time = 1u32;
    while !frontier.is_empty() {
        time += 1;
        // Candidates: free vertices adjacent to territory gained last step.
        let mut candidates: Vec<usize> = Vec::new();
        for &v in &frontier {
            for &u in g.neighbors(v) {
                if state[u] == Cell::Free {
                    candidates.push(u);
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();

        // Decide all candidates against the previous step's state, then apply.
        let mut decisions: Vec<(usize, Cell)> = Vec::new();
        for &v in &candidates {
            let mut owner: Option<usize> = None;
            let mut contested = false;
            for &u in g.neighbors(v) {
                if let Cell::Owned(p) = state[u] {
                    match owner {
                        None => owner = Some(p),
                        Some(q) if q != p => {
                            contested = true;
                            break;
                        }
                        Some(_) => {}
                    }
                }
            }
            if contested {
                decisions.push((v, Cell::Neutral));
            } else if let Some(p) = owner {
                decisions.push((v, Cell::Owned(p)));
            }
        }

        frontier.clear();
        for (v, cell) in decisions {
            state[v] = cell;
            match cell {
                Cell::Owned(player) => {
                    fates[v] = VertexFate::Dominated { player, time };
                    frontier.push(v);
                }
                Cell::Neutral => fates[v] = VertexFate::Neutral { time },
                Cell::Free => unreachable!(),
            }
        }
    }

    let mut utilities = vec![0i64; instance.players()];
    for (v, fate) in fates.iter().enumerate() {
        if let VertexFate::Dominated { player, .. } = fate {
            utilities[*player] += g.weight(v);
        }
    }
    Ok(DiffusionOutcome { fates, utilities })
}

/// Utility player `i` would obtain by unilaterally switching to seed `v`.
pub fn utility_of_deviation(
    instance: &GameInstance,
    profile: &StrategyProfile,
    player: usize,
    v: usize,
) -> Result<i64, EngineError> {
    if player >= instance.players() {
        return Err(EngineError::PlayerOutOfRange {
            player,
            players: instance.players(),
        });
    }
    let outcome = simulate(instance, &profile.with_deviation(player, v))?;
    Ok(outcome.utilities[player])
}

/// A strictly improving unilateral deviation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImprovingDeviation {
    pub player: usize,
    pub vertex: usize,
    pub current_utility: i64,
    pub deviation_utility: i64,
}

impl ImprovingDeviation {
    pub fn gain(&self) -> i64 {
        self.deviation_utility - self.current_utility
    }
}

/// Verdict of the equilibrium check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NashVerdict {
    Equilibrium,
    Counterexample(ImprovingDeviation),
}

impl NashVerdict {
    pub fn is_equilibrium(&self) -> bool {
        matches!(self, NashVerdict::Equilibrium)
    }
}

/// Checks whether `profile` is a pure Nash equilibrium by scanning players in
/// index order and deviation vertices in id order; returns the first strictly
/// improving deviation otherwise. Deviations onto occupied vertices are
/// included in the scan (they can never improve, so correctness is
/// unaffected).
pub fn is_nash(
    instance: &GameInstance,
    profile: &StrategyProfile,
) -> Result<NashVerdict, EngineError> {
    let base = simulate(instance, profile)?;
    let n = instance.graph.vertex_count();
    for player in 0..instance.players() {
        let current = base.utilities[player];
        for v in 0..n {
            if v == profile.choice(player) {
                continue;
            }
            let deviated = utility_of_deviation(instance, profile, player, v)?;
            if deviated > current {
                return Ok(NashVerdict::Counterexample(ImprovingDeviation {
                    player,
                    vertex: v,
                    current_utility: current,
                    deviation_utility: deviated,
                }));
            }
        }
    }
    Ok(NashVerdict::Equilibrium)
}

/// Best response of `player` against the rest of `profile`: the seed
/// maximizing the deviation utility, ties broken by smallest vertex id.
pub fn best_response(
    instance: &GameInstance,
    profile: &StrategyProfile,
    player: usize,
) -> Result<(usize, i64), EngineError> {
    if player >= instance.players() {
        return Err(EngineError::PlayerOutOfRange {
            player,
            players: instance.players(),
        });
    }
    let mut best: Option<(usize, i64)> = None;
    for v in 0..instance.graph.vertex_count() {
        let utility = utility_of_deviation(instance, profile, player, v)?;
        match best {
            Some((_, u)) if u >= utility => {}
            _ => best = Some((v, utility)),
        }
    }
    Ok(best.expect("graphs have at least one vertex"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GameInstance, WeightedGraph};

    fn path_game(weights: Vec<i64>, k: usize) -> GameInstance {
        GameInstance::new(WeightedGraph::path(weights), k).unwrap()
    }

    #[test]
    fn symmetric_seeds_neutralize_the_middle() {
        let game = path_game(vec![1, 1, 1], 2);
        let outcome = simulate(&game, &vec![0, 2].into()).unwrap();
        assert_eq!(outcome.fates[1], VertexFate::Neutral { time: 2 });
        assert_eq!(outcome.utilities, vec![1, 1]);
    }

    #[test]
    fn seed_collision_neutralizes_everything_reachable() {
        let game = path_game(vec![1, 1, 1, 1], 2);
        let outcome = simulate(&game, &vec![1, 1].into()).unwrap();
        assert_eq!(outcome.fates[1], VertexFate::Neutral { time: 1 });
        for v in [0, 2, 3] {
            assert_eq!(outcome.fates[v], VertexFate::Undominated);
        }
        assert_eq!(outcome.utilities, vec![0, 0]);
    }

    #[test]
    fn seven_path_split_matches_hand_simulation() {
        // Seeds at v0 and v4: p0 takes {v0, v1}; v2 is reached by both at
        // time 3 and turns neutral; p1 takes {v3, v4, v5, v6}.
        let game = path_game(vec![1; 7], 2);
        let outcome = simulate(&game, &vec![0, 4].into()).unwrap();
        let expect = [
            VertexFate::Dominated { player: 0, time: 1 },
            VertexFate::Dominated { player: 0, time: 2 },
            VertexFate::Neutral { time: 3 },
            VertexFate::Dominated { player: 1, time: 2 },
            VertexFate::Dominated { player: 1, time: 1 },
            VertexFate::Dominated { player: 1, time: 2 },
            VertexFate::Dominated { player: 1, time: 3 },
        ];
        assert_eq!(outcome.fates, expect);
        assert_eq!(outcome.utilities, vec![2, 4]);
    }

    #[test]
    fn neutral_cut_blocks_the_nearer_player() {
        // Two seeds meet at a cut vertex which turns neutral; a third player
        // seeded far down a pendant chain then claims a vertex that is closer
        // to the first players through the cut.
        let g = WeightedGraph::unweighted(7, &[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
            .unwrap();
        let game = GameInstance::new(g, 3).unwrap();
        let outcome = simulate(&game, &vec![0, 1, 6].into()).unwrap();
        assert_eq!(outcome.fates[2], VertexFate::Neutral { time: 2 });
        assert_eq!(
            outcome.fates[3],
            VertexFate::Dominated { player: 2, time: 4 }
        );
        assert_eq!(outcome.utilities, vec![1, 1, 4]);
    }

    #[test]
    fn identity_deviation_keeps_utility() {
        let game = path_game(vec![2, -1, 5], 2);
        let profile: StrategyProfile = vec![0, 2].into();
        let base = simulate(&game, &profile).unwrap();
        for player in 0..2 {
            let same =
                utility_of_deviation(&game, &profile, player, profile.choice(player)).unwrap();
            assert_eq!(same, base.utilities[player]);
        }
    }

    #[test]
    fn deviation_onto_opponent_seed_yields_zero() {
        let game = path_game(vec![1, 1, 1], 2);
        let got = utility_of_deviation(&game, &vec![0, 2].into(), 0, 2).unwrap();
        assert_eq!(got, 0);
    }

    #[test]
    fn singleton_single_player_takes_the_weight() {
        let g = WeightedGraph::from_edges(vec![7], &[]).unwrap();
        let game = GameInstance::new(g, 1).unwrap();
        let got = utility_of_deviation(&game, &vec![0].into(), 0, 0).unwrap();
        assert_eq!(got, 7);
    }

    #[test]
    fn single_player_floods_from_any_seed() {
        // A sole player dominates the whole component regardless of seed, so
        // both the center and an endpoint of a 3-path are equilibria.
        let game = path_game(vec![1, 1, 1], 1);
        for seed in 0..3 {
            let verdict = is_nash(&game, &vec![seed].into()).unwrap();
            assert!(verdict.is_equilibrium(), "seed {seed}");
        }
    }

    #[test]
    fn seven_path_endpoints_are_not_an_equilibrium() {
        let game = path_game(vec![1; 7], 2);
        match is_nash(&game, &vec![0, 6].into()).unwrap() {
            NashVerdict::Counterexample(dev) => {
                assert_eq!(dev.player, 0);
                assert!(dev.gain() > 0);
            }
            NashVerdict::Equilibrium => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn best_response_takes_the_whole_component_when_alone() {
        let game = path_game(vec![1, 1, 1, 1], 1);
        let (_, utility) = best_response(&game, &vec![0].into(), 0).unwrap();
        assert_eq!(utility, 4);
    }

    #[test]
    fn best_response_prefers_the_vacant_vertex() {
        let game = path_game(vec![5, 1], 2);
        let (vertex, utility) = best_response(&game, &vec![1, 0].into(), 0).unwrap();
        assert_eq!((vertex, utility), (1, 1));
    }

    #[test]
    fn best_response_ties_break_to_smaller_id() {
        let game = path_game(vec![1; 7], 2);
        let (vertex, utility) = best_response(&game, &vec![0, 3].into(), 0).unwrap();
        assert_eq!((vertex, utility), (2, 3));
    }

    #[test]
    fn out_of_range_vertex_is_rejected() {
        let game = path_game(vec![1, 1], 2);
        let err = simulate(&game, &vec![0, 5].into()).unwrap_err();
        assert_eq!(
            err,
            EngineError::VertexOutOfRange {
                player: 1,
                vertex: 5,
                vertices: 2
            }
        );
    }
}
