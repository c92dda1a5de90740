//! Exact solvers for forests of paths: the pseudo-polynomial weighted
//! decision procedure and the quadratic unweighted one.
//!
//! A forest equilibrium decomposes into per-path Nash profiles whose extra
//! potential `nu` (best utility a newcomer could grab) and utility floor `mu`
//! (worst resident utility) fit together: no path's `nu` may exceed any
//! *other* path's `mu`. With nonnegative utilities this collapses to the
//! classical common boundary `nu_j <= t <= mu_j`; with negative weights one
//! path may have `nu > mu` on its own (a newcomer colliding on a seed earns
//! 0 while residents earn less), so the solver also sweeps split boundaries
//! where a single pivot path is exempted from its own cap.

mod knapsack;
mod segment;
mod unweighted;
mod weighted;

pub use knapsack::combine_counts;
pub use unweighted::{admissible_range_unweighted, path_admits, place_players, AdmissibleCounts};
pub use weighted::{admissible_counts_weighted, PairAdmissibility, PathAnalysis, PivotAnalysis};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::engine::{is_nash, EngineError, NashVerdict, StrategyProfile};
use crate::graph::{GameInstance, WeightedGraph};

#[derive(Debug, Error)]
pub enum PathSolverError {
    #[error("not a forest of paths: vertex {vertex} has degree {degree}")]
    HighDegree { vertex: usize, degree: usize },
    #[error("not a forest of paths: the component containing vertex {vertex} has a cycle")]
    Cycle { vertex: usize },
    #[error("forest paths must be nonempty")]
    EmptyPath,
    #[error("unweighted solver requires unit weights; path {path} position {position} has weight {weight}")]
    NonUnitWeight {
        path: usize,
        position: usize,
        weight: i64,
    },
    #[error("solver emitted a profile the engine rejects ({context}): {deviation}")]
    SolutionRejected { context: String, deviation: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A forest of weighted paths, each given left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathForest {
    paths: Vec<Vec<i64>>,
}

impl PathForest {
    pub fn new(paths: Vec<Vec<i64>>) -> Result<Self, PathSolverError> {
        if paths.iter().any(Vec::is_empty) {
            return Err(PathSolverError::EmptyPath);
        }
        Ok(PathForest { paths })
    }

    pub fn unit(lengths: &[usize]) -> Result<Self, PathSolverError> {
        Self::new(lengths.iter().map(|&n| vec![1; n]).collect())
    }

    pub fn paths(&self) -> &[Vec<i64>] {
        &self.paths
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    /// Per-path vertex offsets in the concatenated graph.
    pub fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.paths.len());
        let mut acc = 0;
        for p in &self.paths {
            offsets.push(acc);
            acc += p.len();
        }
        offsets
    }

    /// Upper bound on any player's utility: the largest per-path sum of
    /// positive weights.
    pub fn utility_upper_bound(&self) -> i64 {
        self.paths
            .iter()
            .map(|p| p.iter().filter(|&&w| w > 0).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    fn lowest_relevant_boundary(&self) -> i64 {
        self.paths
            .iter()
            .map(|p| p.iter().filter(|&&w| w < 0).sum::<i64>())
            .min()
            .unwrap_or(0)
            .min(0)
    }

    pub fn is_unit_weight(&self) -> Result<(), PathSolverError> {
        for (path, weights) in self.paths.iter().enumerate() {
            for (position, &weight) in weights.iter().enumerate() {
                if weight != 1 {
                    return Err(PathSolverError::NonUnitWeight {
                        path,
                        position,
                        weight,
                    });
                }
            }
        }
        Ok(())
    }

    /// The concatenated forest as a game instance.
    pub fn to_game(&self, k: usize) -> GameInstance {
        let weights: Vec<i64> = self.paths.iter().flatten().copied().collect();
        let mut edges = Vec::new();
        let mut offset = 0;
        for p in &self.paths {
            for i in 1..p.len() {
                edges.push((offset + i - 1, offset + i));
            }
            offset += p.len();
        }
        let graph = WeightedGraph::from_edges(weights, &edges).expect("forest edges are simple");
        GameInstance::new(graph, k).expect("player count checked by callers")
    }
}

/// Maps concatenated forest coordinates back to the original graph's ids.
#[derive(Debug, Clone)]
pub struct ForestLayout {
    /// Original vertex ids of each path, left to right.
    pub order: Vec<Vec<usize>>,
}

impl ForestLayout {
    pub fn to_original(&self, path: usize, position: usize) -> usize {
        self.order[path][position]
    }
}

/// Splits a graph into its path components (components ordered by smallest
/// vertex id, each path read from its smaller-id endpoint).
pub fn decompose_into_paths(
    graph: &WeightedGraph,
) -> Result<(PathForest, ForestLayout), PathSolverError> {
    let n = graph.vertex_count();
    for v in 0..n {
        if graph.degree(v) > 2 {
            return Err(PathSolverError::HighDegree {
                vertex: v,
                degree: graph.degree(v),
            });
        }
    }
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // Walk to an endpoint; a cycle never reaches one.
        let mut endpoint = start;
        let mut prev = usize::MAX;
        let mut steps = 0;
        while graph.degree(endpoint) == 2 {
            let next = *graph
                .neighbors(endpoint)
                .iter()
                .find(|&&u| u != prev)
                .expect("degree-2 vertex has a fresh neighbor");
            prev = endpoint;
            endpoint = next;
            steps += 1;
            if steps > n {
                return Err(PathSolverError::Cycle { vertex: start });
            }
        }
        // Prefer the smaller-id endpoint as the left end.
        let other = far_endpoint(graph, endpoint);
        let left = endpoint.min(other);
        let mut path = vec![left];
        seen[left] = true;
        let mut prev = usize::MAX;
        let mut cur = left;
        while let Some(&next) = graph.neighbors(cur).iter().find(|&&u| u != prev) {
            prev = cur;
            cur = next;
            seen[cur] = true;
            path.push(cur);
        }
        order.push(path);
    }
    order.sort_by_key(|p| *p.iter().min().unwrap());
    let paths = order
        .iter()
        .map(|p| p.iter().map(|&v| graph.weight(v)).collect())
        .collect();
    Ok((PathForest::new(paths)?, ForestLayout { order }))
}

fn far_endpoint(graph: &WeightedGraph, endpoint: usize) -> usize {
    let mut prev = usize::MAX;
    let mut cur = endpoint;
    while let Some(&next) = graph.neighbors(cur).iter().find(|&&u| u != prev) {
        prev = cur;
        cur = next;
    }
    cur
}

/// How the per-path boundaries fit together in a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryCertificate {
    /// Every path satisfies `nu <= t <= mu`.
    Common { t: i64 },
    /// Every path except `pivot` satisfies `nu <= extra_cap` and
    /// `mu >= utility_floor`; the pivot satisfies the swapped, looser pair
    /// `nu <= utility_floor`, `mu >= extra_cap`.
    Split {
        extra_cap: i64,
        utility_floor: i64,
        pivot: usize,
    },
}

/// A solved forest: player counts, per-path profiles and the assembled,
/// engine-verified strategy profile on the concatenated graph.
#[derive(Debug, Clone)]
pub struct ForestSolution {
    pub certificate: BoundaryCertificate,
    pub kappas: Vec<usize>,
    /// Per-path seed positions, path-local and sorted.
    pub path_profiles: Vec<Vec<usize>>,
    pub profile: StrategyProfile,
}

/// Admissible counts of one path under one boundary pair, with witnesses.
struct PathOption {
    counts: BTreeSet<usize>,
    direct: PairAdmissibility,
    extension_base: Option<usize>,
}

impl PathOption {
    /// Counts for thresholds `nu <= lo`, `mu >= hi` (with `lo <= hi`),
    /// bounded by `cap`, extended upward to `k` when a stacked witness
    /// exists and the floor allows zero-utility players. The extension is
    /// sound because piling players on an existing stack changes nothing:
    /// the diffusion outcome, the extras and every deviation value stay put,
    /// and the new players earn 0 with every escape worth at most the
    /// witness's extras, which the thresholds already cap at `lo <= hi <= 0`.
    fn build(analysis: &PathAnalysis, lo: i64, hi: i64, cap: usize, k: usize) -> PathOption {
        let direct = analysis.admissible(lo, hi, cap);
        let mut counts: BTreeSet<usize> = direct.counts().collect();
        let mut extension_base = None;
        if hi <= 0 {
            if let Some(base) = direct.stacked_base() {
                for kappa in base..=k {
                    counts.insert(kappa);
                }
                extension_base = Some(base);
            }
        }
        PathOption {
            counts,
            direct,
            extension_base,
        }
    }

    fn witness(&self, kappa: usize) -> Option<Vec<usize>> {
        if let Some(w) = self.direct.witness(kappa) {
            return Some(w.to_vec());
        }
        let base = self.extension_base?;
        if kappa < base {
            return None;
        }
        self.direct.stacked_witness(kappa)
    }
}

/// Pivot-path counts for a split boundary `(a, b)`, `a < b`: profiles with
/// `nu <= b` and `mu >= a`. Zero players need the whole-path potential at
/// most `b`; a lone player floods the path (always Nash), so it needs total
/// weight at least `a` and some seed keeping the extra potential at most
/// `b`; two or more players go through the decoupled-boundary table, which
/// also covers profiles whose own extras beat their own floor. Surplus
/// players beyond the cap pile on a zero-boundary stacked witness when the
/// floor permits zero-utility players.
struct PivotOption {
    counts: BTreeSet<usize>,
    witnesses: std::collections::BTreeMap<usize, Vec<usize>>,
}

impl PivotOption {
    fn build(
        analysis: &PathAnalysis,
        table: &PivotAnalysis,
        zero_boundary: &PathOption,
        a: i64,
        b: i64,
        k: usize,
    ) -> PivotOption {
        let mut counts = BTreeSet::new();
        let mut witnesses = std::collections::BTreeMap::new();
        if analysis.total_weight() <= b {
            counts.insert(0);
            witnesses.insert(0, Vec::new());
        }
        if analysis.total_weight() >= a {
            let (seed, nu) = analysis.best_single_seed();
            if nu <= b {
                counts.insert(1);
                witnesses.insert(1, vec![seed]);
            }
        }
        for (kappa, witness) in analysis
            .pivot_admissible(table, b, a)
            .into_iter()
            .enumerate()
        {
            if let Some(witness) = witness {
                counts.insert(kappa);
                witnesses.insert(kappa, witness);
            }
        }
        if a <= 0 {
            if let Some(base) = zero_boundary.extension_base {
                for kappa in base..=k {
                    if counts.insert(kappa) {
                        witnesses.insert(
                            kappa,
                            zero_boundary
                                .direct
                                .stacked_witness(kappa)
                                .expect("extension bases carry stacked witnesses"),
                        );
                    }
                }
            }
        }
        PivotOption { counts, witnesses }
    }
}

fn select_and_witness(
    sets: &[BTreeSet<usize>],
    k: usize,
    witness: impl Fn(usize, usize) -> Vec<usize>,
) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let selection = combine_counts(sets, k)?;
    let profiles = selection
        .iter()
        .enumerate()
        .map(|(j, &kappa)| witness(j, kappa))
        .collect();
    Some((selection, profiles))
}

fn assemble(forest: &PathForest, path_profiles: &[Vec<usize>]) -> StrategyProfile {
    let offsets = forest.offsets();
    let mut choices = Vec::new();
    for (j, seeds) in path_profiles.iter().enumerate() {
        choices.extend(seeds.iter().map(|&p| offsets[j] + p));
    }
    StrategyProfile::new(choices)
}

fn verify(
    forest: &PathForest,
    k: usize,
    profile: &StrategyProfile,
    context: &str,
) -> Result<(), PathSolverError> {
    let game = forest.to_game(k);
    match is_nash(&game, profile)? {
        NashVerdict::Equilibrium => Ok(()),
        NashVerdict::Counterexample(dev) => Err(PathSolverError::SolutionRejected {
            context: context.to_owned(),
            deviation: format!("{dev:?}"),
        }),
    }
}

/// Decides whether `(k, F, w)` has a Nash equilibrium for a forest of
/// weighted paths, returning a verified profile and its boundary witness.
///
/// Sweeps common boundaries from the smallest relevant value up to the
/// utility upper bound, then split boundaries for each pivot path. With
/// `k >= 2n` an equilibrium always exists: stack two players on every vertex
/// and the surplus anywhere; everybody earns 0 and every move still earns 0.
pub fn solve_forest_weighted(
    forest: &PathForest,
    k: usize,
) -> Result<Option<ForestSolution>, PathSolverError> {
    let n = forest.vertex_count();
    let m = forest.path_count();

    if k >= 2 * n {
        let mut path_profiles: Vec<Vec<usize>> = forest
            .paths()
            .iter()
            .map(|p| (0..p.len()).flat_map(|v| [v, v]).collect())
            .collect();
        path_profiles[0].extend(std::iter::repeat_n(0, k - 2 * n));
        path_profiles[0].sort_unstable();
        let kappas = path_profiles.iter().map(Vec::len).collect();
        let profile = assemble(forest, &path_profiles);
        verify(forest, k, &profile, "double cover")?;
        return Ok(Some(ForestSolution {
            certificate: BoundaryCertificate::Common { t: 0 },
            kappas,
            path_profiles,
            profile,
        }));
    }

    let analyses: Vec<PathAnalysis> = forest
        .paths()
        .iter()
        .map(|p| PathAnalysis::new(p))
        .collect();
    // Three players per vertex suffice as the table range: removing a
    // player from a stack of four or more changes nobody's outcome or
    // options, so any equilibrium reduces to per-vertex counts of at most 3
    // and the removed surplus piles back onto a stack.
    let caps: Vec<usize> = forest
        .paths()
        .iter()
        .map(|p| (3 * p.len()).min(k))
        .collect();
    let hi_bound = forest.utility_upper_bound();
    let lo_bound = forest.lowest_relevant_boundary();

    // Common tables for every boundary t in [0, W], reused by both sweeps.
    // No common boundary below 0 can admit a player: an extra colliding on
    // an occupied seed earns 0, so nu >= 0 whenever a path holds players.
    let common: Vec<Vec<PathOption>> = analyses
        .iter()
        .enumerate()
        .map(|(j, analysis)| {
            (0..=hi_bound)
                .map(|t| PathOption::build(analysis, t, t, caps[j], k))
                .collect()
        })
        .collect();

    for t in 0..=hi_bound {
        let sets: Vec<BTreeSet<usize>> = (0..m)
            .map(|j| common[j][t as usize].counts.clone())
            .collect();
        let found = select_and_witness(&sets, k, |j, kappa| {
            common[j][t as usize]
                .witness(kappa)
                .expect("selected counts carry witnesses")
        });
        if let Some((kappas, path_profiles)) = found {
            let profile = assemble(forest, &path_profiles);
            verify(forest, k, &profile, &format!("common boundary t = {t}"))?;
            return Ok(Some(ForestSolution {
                certificate: BoundaryCertificate::Common { t },
                kappas,
                path_profiles,
                profile,
            }));
        }
    }

    // Split boundaries: one pivot path is exempt from its own extra cap.
    // All other paths obey (nu <= a, mu >= b); the pivot obeys the swapped
    // pair (nu <= b, mu >= a). Cross-path moves then never pay: a mover into
    // a non-pivot path gains at most a and keeps at least a, one into the
    // pivot gains at most b and keeps at least b.
    let pivot_tables: Vec<PivotAnalysis> = analyses
        .iter()
        .enumerate()
        .map(|(j, analysis)| analysis.pivot_analysis(caps[j]))
        .collect();
    for a in lo_bound..=hi_bound {
        for b in (a + 1).max(0)..=hi_bound {
            let others: Vec<PathOption> = analyses
                .iter()
                .enumerate()
                .map(|(j, analysis)| PathOption::build(analysis, a, b, caps[j], k))
                .collect();
            for pivot in 0..m {
                let pivot_option = PivotOption::build(
                    &analyses[pivot],
                    &pivot_tables[pivot],
                    &common[pivot][0],
                    a,
                    b,
                    k,
                );
                let sets: Vec<BTreeSet<usize>> = (0..m)
                    .map(|j| {
                        if j == pivot {
                            pivot_option.counts.clone()
                        } else {
                            others[j].counts.clone()
                        }
                    })
                    .collect();
                let found = select_and_witness(&sets, k, |j, kappa| {
                    if j == pivot {
                        pivot_option.witnesses[&kappa].clone()
                    } else {
                        others[j]
                            .witness(kappa)
                            .expect("selected counts carry witnesses")
                    }
                });
                if let Some((kappas, path_profiles)) = found {
                    let profile = assemble(forest, &path_profiles);
                    verify(
                        forest,
                        k,
                        &profile,
                        &format!("split boundary ({a}, {b}), pivot {pivot}"),
                    )?;
                    return Ok(Some(ForestSolution {
                        certificate: BoundaryCertificate::Split {
                            extra_cap: a,
                            utility_floor: b,
                            pivot,
                        },
                        kappas,
                        path_profiles,
                        profile,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// A solved unweighted forest. `t = 0` marks the cover-everything shortcut
/// used when `k >= n`.
#[derive(Debug, Clone)]
pub struct UnweightedForestSolution {
    pub t: i64,
    pub kappas: Vec<usize>,
    pub path_profiles: Vec<Vec<usize>>,
    pub profile: StrategyProfile,
}

/// Quadratic decision procedure for forests of unweighted paths: for each
/// boundary the per-path admissible counts form an interval, so feasibility
/// is a sum-of-intervals test.
pub fn solve_forest_unweighted(
    forest: &PathForest,
    k: usize,
) -> Result<Option<UnweightedForestSolution>, PathSolverError> {
    forest.is_unit_weight()?;
    let n = forest.vertex_count();
    let m = forest.path_count();
    let lengths: Vec<usize> = forest.paths().iter().map(Vec::len).collect();

    if k >= n {
        // Cover every vertex and stack the surplus on vertex 0: occupied
        // vertices leave every deviation at zero utility.
        let mut path_profiles: Vec<Vec<usize>> =
            lengths.iter().map(|&len| (0..len).collect()).collect();
        path_profiles[0].splice(0..0, std::iter::repeat_n(0, k - n));
        let kappas = path_profiles.iter().map(Vec::len).collect();
        let profile = assemble(forest, &path_profiles);
        verify(forest, k, &profile, "cover shortcut")?;
        return Ok(Some(UnweightedForestSolution {
            t: 0,
            kappas,
            path_profiles,
            profile,
        }));
    }

    let longest = *lengths.iter().max().expect("forest is nonempty");
    for t in 1..=longest {
        let mut bounds = Vec::with_capacity(m);
        let mut feasible = true;
        for &len in &lengths {
            let counts =
                admissible_range_unweighted(len, t as i64).expect("t >= 1 by construction");
            match counts.bounds() {
                Some(b) => bounds.push(b),
                None => {
                    feasible = false;
                    break;
                }
            }
        }
        if !feasible {
            continue;
        }
        let min_sum: usize = bounds.iter().map(|&(lo, _)| lo).sum();
        let max_sum: usize = bounds.iter().map(|&(_, hi)| hi).sum();
        if k < min_sum || max_sum < k {
            continue;
        }
        let mut kappas: Vec<usize> = bounds.iter().map(|&(lo, _)| lo).collect();
        let mut slack = k - min_sum;
        for (j, &(lo, hi)) in bounds.iter().enumerate() {
            let add = slack.min(hi - lo);
            kappas[j] = lo + add;
            slack -= add;
        }
        debug_assert_eq!(slack, 0);
        let path_profiles: Vec<Vec<usize>> = kappas
            .iter()
            .zip(&lengths)
            .map(|(&kappa, &len)| {
                place_players(len, kappa, t).ok_or(PathSolverError::SolutionRejected {
                    context: format!("placement n = {len}, kappa = {kappa}, t = {t}"),
                    deviation: "no constructive placement".to_owned(),
                })
            })
            .collect::<Result<_, _>>()?;
        let profile = assemble(forest, &path_profiles);
        verify(forest, k, &profile, &format!("unweighted t = {t}"))?;
        return Ok(Some(UnweightedForestSolution {
            t: t as i64,
            kappas,
            path_profiles,
            profile,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_unit_triples_take_one_center_each() {
        let forest = PathForest::unit(&[3, 3]).unwrap();
        let solution = solve_forest_weighted(&forest, 2)
            .unwrap()
            .expect("solvable");
        assert_eq!(solution.kappas, vec![1, 1]);
        let unweighted = solve_forest_unweighted(&forest, 2)
            .unwrap()
            .expect("solvable");
        assert_eq!(unweighted.kappas, vec![1, 1]);
    }

    #[test]
    fn single_vertex_two_players_collide_into_equilibrium() {
        // Both players sit on the lone vertex: all options are occupied, so
        // nobody improves.
        let forest = PathForest::new(vec![vec![1]]).unwrap();
        let solution = solve_forest_weighted(&forest, 2)
            .unwrap()
            .expect("solvable");
        assert_eq!(solution.kappas, vec![2]);
        assert_eq!(solution.profile.choices(), &[0, 0]);
    }

    #[test]
    fn all_negative_single_player_is_found() {
        let forest = PathForest::new(vec![vec![-3, -1, -2]]).unwrap();
        let solution = solve_forest_weighted(&forest, 1)
            .unwrap()
            .expect("solvable");
        assert_eq!(solution.kappas, vec![1]);
    }

    /// Randomized-campaign regression: the only 4-player equilibria of this
    /// path have their extra potential (2, in the middle) strictly above
    /// their utility floor (1, at a seat adjacent to the middle), so no
    /// common boundary brackets them; the decoupled pivot table must.
    #[test]
    fn self_violating_single_path_is_solved() {
        let forest = PathForest::new(vec![vec![5, 4, -3, 1, -1, 0, -1, 3, 4, 5]]).unwrap();
        let solution = solve_forest_weighted(&forest, 4)
            .unwrap()
            .expect("brute force finds (0, 1, 8, 9)");
        assert!(matches!(
            solution.certificate,
            BoundaryCertificate::Split { .. }
        ));
        let game = forest.to_game(4);
        assert_eq!(
            is_nash(&game, &solution.profile).unwrap(),
            NashVerdict::Equilibrium
        );
    }

    /// A pair of single-vertex all-negative paths where no common boundary
    /// exists yet an equilibrium does: the resident earns -5, a newcomer on
    /// its seat would earn 0, and the only escape pays -6.
    #[test]
    fn split_boundary_is_required_for_negative_weights() {
        let forest = PathForest::new(vec![vec![-5], vec![-6]]).unwrap();
        let solution = solve_forest_weighted(&forest, 1)
            .unwrap()
            .expect("solvable");
        assert_eq!(solution.kappas, vec![1, 0]);
        assert!(matches!(
            solution.certificate,
            BoundaryCertificate::Split { .. }
        ));
    }

    #[test]
    fn seven_path_two_players_has_boundary_three() {
        let forest = PathForest::unit(&[7]).unwrap();
        let solution = solve_forest_unweighted(&forest, 2)
            .unwrap()
            .expect("solvable");
        assert_eq!(solution.t, 3);
    }

    #[test]
    fn six_path_three_players_has_no_equilibrium() {
        let forest = PathForest::unit(&[6]).unwrap();
        assert!(solve_forest_unweighted(&forest, 3).unwrap().is_none());
        assert!(solve_forest_weighted(&forest, 3).unwrap().is_none());
    }

    #[test]
    fn non_unit_weights_are_rejected_by_the_unweighted_solver() {
        let forest = PathForest::new(vec![vec![1, 2]]).unwrap();
        match solve_forest_unweighted(&forest, 1) {
            Err(PathSolverError::NonUnitWeight {
                path: 0,
                position: 1,
                weight: 2,
            }) => {}
            other => panic!("expected unit-weight rejection, got {other:?}"),
        }
    }

    #[test]
    fn decompose_orders_paths_and_orients_them() {
        // Two paths: 4-1-2 and 0-3. Components are ordered by smallest id
        // and read from the smaller endpoint.
        let g =
            WeightedGraph::from_edges(vec![10, 20, 30, 40, 50], &[(4, 1), (1, 2), (0, 3)]).unwrap();
        let (forest, layout) = decompose_into_paths(&g).unwrap();
        assert_eq!(layout.order, vec![vec![0, 3], vec![2, 1, 4]]);
        assert_eq!(forest.paths(), &[vec![10, 40], vec![30, 20, 50]]);
    }

    #[test]
    fn cycles_and_high_degree_are_rejected() {
        let cycle = WeightedGraph::unweighted(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            decompose_into_paths(&cycle),
            Err(PathSolverError::Cycle { .. })
        ));
        let star = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            decompose_into_paths(&star),
            Err(PathSolverError::HighDegree {
                vertex: 0,
                degree: 3
            })
        ));
    }
}
