//! Polynomial equilibrium search on chain, cochain and threshold graphs.
//!
//! These classes are exactly the graphs with inclusion orderings: each side
//! can be ordered so neighborhoods nest (closed neighborhoods on clique
//! sides). Nesting pins down equilibria almost completely: a player seeded
//! on a dominated vertex keeps just that vertex's weight, so besides the two
//! top choices everyone must sit on the heaviest vacant vertices. The solver
//! enumerates the top choices, fills the rest greedily and lets the engine
//! arbitrate each candidate.

use std::fmt;

use thiserror::Error;

use crate::engine::{is_nash, EngineError, NashVerdict, StrategyProfile};
use crate::graph::{GameInstance, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Chain,
    Cochain,
    Threshold,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GraphClass::Chain => "chain",
            GraphClass::Cochain => "cochain",
            GraphClass::Threshold => "threshold",
        };
        f.write_str(name)
    }
}

impl std::str::FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chain" => Ok(GraphClass::Chain),
            "cochain" => Ok(GraphClass::Cochain),
            "threshold" => Ok(GraphClass::Threshold),
            other => Err(format!("unknown graph class `{other}`")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("not a {class} graph: {u} and {v} must share an independent side but are adjacent")]
    SideNotIndependent {
        class: GraphClass,
        u: usize,
        v: usize,
    },
    #[error("not a {class} graph: {u} and {v} must share a clique side but are not adjacent")]
    SideNotClique {
        class: GraphClass,
        u: usize,
        v: usize,
    },
    #[error("not a {class} graph: neighborhoods of {u} and {v} do not nest")]
    NestingViolation {
        class: GraphClass,
        u: usize,
        v: usize,
    },
}

/// A recognized instance: side orderings with nested (closed) neighborhoods.
#[derive(Debug, Clone)]
pub struct InclusionOrderedGraph {
    pub base: WeightedGraph,
    pub class: GraphClass,
    /// X side by increasing neighborhood, so `x_order.last()` is the top.
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
    pub x_clique: bool,
    pub y_clique: bool,
}

/// Splits the vertices into the two sides demanded by `class` and verifies
/// the inclusion orderings obtained by sorting each side by degree.
pub fn recognize_and_order(
    graph: &WeightedGraph,
    class: GraphClass,
) -> Result<InclusionOrderedGraph, RecognitionError> {
    let (mut x_side, mut y_side, x_clique, y_clique) = match class {
        GraphClass::Chain => {
            let (a, b) = two_color(graph, false, class)?;
            (a, b, false, false)
        }
        GraphClass::Cochain => {
            let (a, b) = two_color(graph, true, class)?;
            (a, b, true, true)
        }
        GraphClass::Threshold => {
            let (clique, independent) = degree_split(graph);
            (clique, independent, true, false)
        }
    };

    check_side(graph, class, &x_side, x_clique)?;
    check_side(graph, class, &y_side, y_clique)?;

    let by_degree = |side: &mut Vec<usize>| {
        side.sort_by_key(|&v| (graph.degree(v), v));
    };
    by_degree(&mut x_side);
    by_degree(&mut y_side);
    check_nesting(graph, class, &x_side, x_clique)?;
    check_nesting(graph, class, &y_side, y_clique)?;

    Ok(InclusionOrderedGraph {
        base: graph.clone(),
        class,
        x_order: x_side,
        y_order: y_side,
        x_clique,
        y_clique,
    })
}

/// 2-colors the graph (or its complement), collecting color classes; any
/// odd cycle yields the offending pair.
fn two_color(
    graph: &WeightedGraph,
    complement: bool,
    class: GraphClass,
) -> Result<(Vec<usize>, Vec<usize>), RecognitionError> {
    let n = graph.vertex_count();
    let adjacent = |u: usize, v: usize| graph.has_edge(u, v) != complement;
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if v == u || !adjacent(u, v) {
                    continue;
                }
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].unwrap() => {
                        return Err(if complement {
                            RecognitionError::SideNotClique { class, u, v }
                        } else {
                            RecognitionError::SideNotIndependent { class, u, v }
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let x = (0..n).filter(|&v| color[v] == Some(false)).collect();
    let y = (0..n).filter(|&v| color[v] == Some(true)).collect();
    Ok((x, y))
}

/// Split partition by degrees: the largest prefix of the degree-sorted
/// vertices with `d_i >= i - 1` is the clique candidate. Equal-degree
/// vertices of a threshold graph are interchangeable, so id tie-breaking is
/// harmless; verification rejects anything that slips through.
fn degree_split(graph: &WeightedGraph) -> (Vec<usize>, Vec<usize>) {
    let n = graph.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut split = 0;
    for (i, &v) in order.iter().enumerate() {
        if graph.degree(v) >= i {
            split = i + 1;
        } else {
            break;
        }
    }
    let clique = order[..split].to_vec();
    let independent = order[split..].to_vec();
    (clique, independent)
}

fn check_side(
    graph: &WeightedGraph,
    class: GraphClass,
    side: &[usize],
    clique: bool,
) -> Result<(), RecognitionError> {
    for (i, &u) in side.iter().enumerate() {
        for &v in &side[i + 1..] {
            let adjacent = graph.has_edge(u, v);
            if clique && !adjacent {
                return Err(RecognitionError::SideNotClique { class, u, v });
            }
            if !clique && adjacent {
                return Err(RecognitionError::SideNotIndependent { class, u, v });
            }
        }
    }
    Ok(())
}

fn neighborhood(graph: &WeightedGraph, v: usize, closed: bool) -> Vec<usize> {
    let mut nbrs = graph.neighbors(v).to_vec();
    if closed {
        let pos = nbrs.partition_point(|&u| u < v);
        nbrs.insert(pos, v);
    }
    nbrs
}

fn is_subset(smaller: &[usize], larger: &[usize]) -> bool {
    let mut it = larger.iter();
    smaller.iter().all(|&u| it.by_ref().any(|&v| v == u))
}

fn check_nesting(
    graph: &WeightedGraph,
    class: GraphClass,
    order: &[usize],
    clique: bool,
) -> Result<(), RecognitionError> {
    for pair in order.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        let smaller = neighborhood(graph, u, clique);
        let larger = neighborhood(graph, v, clique);
        if !is_subset(&smaller, &larger) {
            return Err(RecognitionError::NestingViolation { class, u, v });
        }
    }
    Ok(())
}

/// A found equilibrium plus the guess that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSolution {
    pub profile: StrategyProfile,
    /// Indices (1-based) of the top X and top Y choices; 0 means the side is
    /// unused. Reported in the original recognition roles.
    pub top_x: usize,
    pub top_y: usize,
}

/// Finds a Nash equilibrium on a recognized instance, or reports none.
///
/// For every guess of the top occupied vertex per side, the remaining
/// players greedily take the heaviest vacant vertex below the tops while
/// one with nonnegative weight exists, and otherwise stack on the top
/// choice. Each candidate is tested with the engine; the first equilibrium
/// in guess order wins. Guesses with no X choice run with the sides swapped.
///
/// The guess-and-fill family misses equilibria that park surplus players as
/// stacks away from the tops: a collided top is neutral and stops shielding
/// its side, so stacking there can strand a remaining player with negative
/// territory, while stacking the same players on a worthless low vertex
/// keeps the top's shield intact. When no candidate passes, an exact
/// fallback searches core shapes — per-vertex player counts up to three
/// with any surplus piled on a stack — which is complete: removing a player
/// from a stack of four or more changes nobody's outcome or options, and
/// neither does piling extras onto an existing stack.
pub fn solve_chain(
    ordered: &InclusionOrderedGraph,
    k: usize,
) -> Result<Option<ChainSolution>, EngineError> {
    let game =
        GameInstance::new(ordered.base.clone(), k).expect("player count is validated by callers");

    for s_x in 1..=ordered.x_order.len() {
        for s_y in 0..=ordered.y_order.len() {
            let candidate = build_candidate(&game, &ordered.x_order, &ordered.y_order, s_x, s_y, k);
            if let Some(profile) = candidate {
                if is_nash(&game, &profile)? == NashVerdict::Equilibrium {
                    return Ok(Some(ChainSolution {
                        profile,
                        top_x: s_x,
                        top_y: s_y,
                    }));
                }
            }
        }
    }
    // No X vertex chosen: same procedure with the sides swapped.
    for s_y in 1..=ordered.y_order.len() {
        let candidate = build_candidate(&game, &ordered.y_order, &ordered.x_order, s_y, 0, k);
        if let Some(profile) = candidate {
            if is_nash(&game, &profile)? == NashVerdict::Equilibrium {
                return Ok(Some(ChainSolution {
                    profile,
                    top_x: 0,
                    top_y: s_y,
                }));
            }
        }
    }

    if let Some(profile) = core_shape_search(&game, k)? {
        let top_of = |order: &[usize]| {
            order
                .iter()
                .enumerate()
                .filter(|(_, v)| profile.choices().contains(v))
                .map(|(i, _)| i + 1)
                .max()
                .unwrap_or(0)
        };
        let top_x = top_of(&ordered.x_order);
        let top_y = top_of(&ordered.y_order);
        return Ok(Some(ChainSolution {
            profile,
            top_x,
            top_y,
        }));
    }
    Ok(None)
}

/// Exhaustive search over per-vertex count vectors with entries up to 3 and
/// totals up to `min(k, 3n)`; a shape short of `k` players must contain a
/// stack, which absorbs the surplus. Count vectors are tried in
/// lexicographic order and the first engine-approved profile wins.
fn core_shape_search(
    game: &GameInstance,
    k: usize,
) -> Result<Option<StrategyProfile>, EngineError> {
    fn visit(
        game: &GameInstance,
        k: usize,
        cap: usize,
        counts: &mut Vec<usize>,
        vertex: usize,
        sum: usize,
    ) -> Result<Option<StrategyProfile>, EngineError> {
        if vertex == counts.len() {
            if sum == 0 {
                return Ok(None);
            }
            let stack = counts.iter().position(|&c| c >= 2);
            if sum != k && (sum > k || stack.is_none()) {
                return Ok(None);
            }
            let mut choices = Vec::with_capacity(k);
            for (v, &count) in counts.iter().enumerate() {
                choices.extend(std::iter::repeat_n(v, count));
            }
            if sum < k {
                choices.extend(std::iter::repeat_n(stack.expect("checked above"), k - sum));
                choices.sort_unstable();
            }
            let profile = StrategyProfile::new(choices);
            if is_nash(game, &profile)? == NashVerdict::Equilibrium {
                return Ok(Some(profile));
            }
            return Ok(None);
        }
        for count in 0..=3usize.min(cap - sum) {
            counts[vertex] = count;
            if let Some(found) = visit(game, k, cap, counts, vertex + 1, sum + count)? {
                return Ok(Some(found));
            }
        }
        counts[vertex] = 0;
        Ok(None)
    }

    let n = game.graph.vertex_count();
    let cap = k.min(3 * n);
    let mut counts = vec![0usize; n];
    visit(game, k, cap, &mut counts, 0, 0)
}

fn build_candidate(
    game: &GameInstance,
    primary: &[usize],
    secondary: &[usize],
    s_p: usize,
    s_s: usize,
    k: usize,
) -> Option<StrategyProfile> {
    let graph = &game.graph;
    let top = primary[s_p - 1];
    let mut choices = vec![top];
    if s_s != 0 {
        if k < 2 {
            return None;
        }
        choices.push(secondary[s_s - 1]);
    }
    // Vacant pool below the tops, heaviest first; ties prefer the primary
    // side, then the lower position in the inclusion order.
    let mut pool: Vec<(i64, usize, usize, usize)> = Vec::new();
    for (side, order, upto) in [(0, primary, s_p), (1, secondary, s_s)] {
        for (i, &v) in order.iter().enumerate().take(upto.saturating_sub(1)) {
            pool.push((graph.weight(v), side, i, v));
        }
    }
    pool.sort_by_key(|&(w, side, i, _)| (std::cmp::Reverse(w), side, i));
    let mut next = 0;
    while choices.len() < k {
        if next < pool.len() && pool[next].0 >= 0 {
            choices.push(pool[next].3);
            next += 1;
        } else {
            choices.push(top);
        }
    }
    Some(StrategyProfile::new(choices))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InclusionUtilityError {
    #[error("player {player}'s seed is not neighborhood-dominated by any other seed")]
    PreconditionNotMet { player: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Fast-path utility for a player whose seed is neighborhood-dominated by
/// another chosen vertex: 0 when the seed is shared, its own weight
/// otherwise. Matches the engine wherever the precondition holds.
///
/// The dominating seed must be held by exactly one player: a collided seed
/// is neutral from the start, projects no territory over the dominated
/// neighborhood, and the dominated player's frontier escapes through it.
pub fn inclusion_utility(
    graph: &WeightedGraph,
    profile: &StrategyProfile,
    player: usize,
) -> Result<i64, InclusionUtilityError> {
    let seed = profile.choice(player);
    let dominated = profile.choices().iter().enumerate().any(|(other, &v)| {
        if other == player || v == seed {
            return false;
        }
        if profile.choices().iter().filter(|&&u| u == v).count() != 1 {
            return false;
        }
        let open = is_subset(graph.neighbors(seed), graph.neighbors(v));
        let closed = is_subset(
            &neighborhood(graph, seed, true),
            &neighborhood(graph, v, true),
        );
        open || closed
    });
    if !dominated {
        return Err(InclusionUtilityError::PreconditionNotMet { player });
    }
    let shared = profile
        .choices()
        .iter()
        .enumerate()
        .any(|(other, &v)| other != player && v == seed);
    Ok(if shared { 0 } else { graph.weight(seed) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::simulate;

    #[test]
    fn star_is_a_chain_graph() {
        let g = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ordered = recognize_and_order(&g, GraphClass::Chain).unwrap();
        // Center alone on one side, leaves on the other, nesting trivially.
        let sides = [ordered.x_order.clone(), ordered.y_order.clone()];
        assert!(sides.contains(&vec![0]));
        assert!(sides.contains(&vec![1, 2, 3]));
    }

    #[test]
    fn two_disjoint_edges_violate_nesting() {
        let g = WeightedGraph::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
        match recognize_and_order(&g, GraphClass::Chain) {
            Err(RecognitionError::NestingViolation { .. }) => {}
            other => panic!("expected nesting violation, got {other:?}"),
        }
    }

    #[test]
    fn triangle_with_chord_pattern_is_not_chain() {
        // C4 plus a chord contains a triangle, so one side cannot stay
        // independent.
        let g = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        match recognize_and_order(&g, GraphClass::Chain) {
            Err(RecognitionError::SideNotIndependent { .. }) => {}
            other => panic!("expected side violation, got {other:?}"),
        }
    }

    #[test]
    fn complete_split_graph_is_threshold() {
        // Clique {0, 1, 2} joined completely to independent {3, 4}.
        let g = WeightedGraph::unweighted(
            5,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (2, 3),
                (0, 4),
                (1, 4),
                (2, 4),
            ],
        )
        .unwrap();
        let ordered = recognize_and_order(&g, GraphClass::Threshold).unwrap();
        assert!(ordered.x_clique && !ordered.y_clique);
        // The join vertices may legally land on either side; the split just
        // has to be a clique plus an independent set covering everything.
        assert_eq!(ordered.x_order.len() + ordered.y_order.len(), 5);
        assert!(ordered.x_order.len() >= 3);
    }

    #[test]
    fn threshold_join_two_players_take_the_clique() {
        // Clique {0, 1} with weights 5, 5; independent {2} with weight 1;
        // full join. The found profile must pass the engine's check.
        let g = WeightedGraph::from_edges(vec![5, 5, 1], &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let ordered = recognize_and_order(&g, GraphClass::Threshold).unwrap();
        let solution = solve_chain(&ordered, 2)
            .unwrap()
            .expect("equilibrium exists");
        let game = GameInstance::new(g, 2).unwrap();
        assert_eq!(
            is_nash(&game, &solution.profile).unwrap(),
            NashVerdict::Equilibrium
        );
        let outcome = simulate(&game, &solution.profile).unwrap();
        assert_eq!(outcome.utilities, vec![5, 5]);
    }

    /// Randomized-campaign regression: every 4-player equilibrium here
    /// stacks players away from the top seats (for instance two on the -2
    /// vertex, keeping the 6-vertex solo so it shields its side), which the
    /// guess-and-fill candidates never emit; the core-shape fallback must.
    #[test]
    fn off_top_stacks_are_found_by_the_fallback() {
        let g = WeightedGraph::from_edges(
            vec![-2, 2, 6, 0, -3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
            ],
        )
        .unwrap();
        let ordered = recognize_and_order(&g, GraphClass::Threshold).unwrap();
        let solution = solve_chain(&ordered, 4).unwrap().expect("equilibria exist");
        let game = GameInstance::new(g, 4).unwrap();
        assert_eq!(
            is_nash(&game, &solution.profile).unwrap(),
            NashVerdict::Equilibrium
        );
        // The witness stacks two players somewhere.
        let choices = solution.profile.choices();
        assert!((0..5).any(|v| choices.iter().filter(|&&c| c == v).count() >= 2));
    }

    #[test]
    fn dominated_seed_utilities_follow_the_fast_path() {
        // Chain graph: x1 < x2 by inclusion, both adjacent to y; x2 also
        // adjacent to y2.
        let g = WeightedGraph::from_edges(vec![3, 4, 1, 2], &[(0, 2), (1, 2), (1, 3)]).unwrap();
        // Profile: player 0 on x1 (= vertex 0, dominated by vertex 1), player
        // 1 on x2.
        let profile = StrategyProfile::new(vec![0, 1]);
        assert_eq!(inclusion_utility(&g, &profile, 0).unwrap(), 3);
        // Shared dominated seed earns nothing.
        let shared = StrategyProfile::new(vec![0, 0, 1]);
        assert_eq!(inclusion_utility(&g, &shared, 0).unwrap(), 0);
        // The undominated top seed has no fast path.
        assert_eq!(
            inclusion_utility(&g, &profile, 1),
            Err(InclusionUtilityError::PreconditionNotMet { player: 1 })
        );
    }
}
