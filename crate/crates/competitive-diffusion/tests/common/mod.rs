//! Shared test support: an independent reference implementation of the
//! diffusion dynamics, exhaustive per-path oracles, and seeded generators.

#![allow(dead_code)]

use std::collections::BTreeSet;

use competitive_diffusion::engine::{is_nash, simulate, NashVerdict, StrategyProfile};
use competitive_diffusion::graph::{GameInstance, WeightedGraph};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Naive reference engine, written directly from the process description and
// kept deliberately simple: full-state snapshots, no frontier bookkeeping.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefState {
    Untouched,
    Neutral(u32),
    Owned(usize, u32),
}

pub fn reference_simulate(graph: &WeightedGraph, choices: &[usize]) -> (Vec<RefState>, Vec<i64>) {
    let n = graph.vertex_count();
    let mut state = vec![RefState::Untouched; n];

    // Time 1: each player seeds; a vertex chosen twice turns neutral.
    for (player, &v) in choices.iter().enumerate() {
        let solo = choices
            .iter()
            .enumerate()
            .all(|(other, &u)| other == player || u != v);
        state[v] = if solo {
            RefState::Owned(player, 1)
        } else {
            RefState::Neutral(1)
        };
    }

    let mut time = 1;
    loop {
        time += 1;
        let snapshot = state.clone();
        let mut changed = false;
        for v in 0..n {
            if snapshot[v] != RefState::Untouched {
                continue;
            }
            let mut owners = BTreeSet::new();
            for &u in graph.neighbors(v) {
                if let RefState::Owned(p, _) = snapshot[u] {
                    owners.insert(p);
                }
            }
            match owners.len() {
                0 => {}
                1 => {
                    state[v] = RefState::Owned(*owners.iter().next().unwrap(), time);
                    changed = true;
                }
                _ => {
                    state[v] = RefState::Neutral(time);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut utilities = vec![0i64; choices.len()];
    for (v, s) in state.iter().enumerate() {
        if let RefState::Owned(p, _) = s {
            utilities[*p] += graph.weight(v);
        }
    }
    (state, utilities)
}

// ---------------------------------------------------------------------------
// Profile enumeration
// ---------------------------------------------------------------------------

/// Visits every non-decreasing tuple of `k` values below `n`.
pub fn for_each_multiset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut choices = vec![0usize; k];
    if n == 0 {
        return;
    }
    loop {
        visit(&choices);
        let mut i = k;
        loop {
            if i == 0 {
                return;
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

// ---------------------------------------------------------------------------
// Path admissibility oracle: enumerate every profile per player count, keep
// the Pareto-minimal (nu, mu) pairs over Nash profiles.
// ---------------------------------------------------------------------------

pub const MU_INFINITY: i64 = i64::MAX / 2;

pub struct PathOracle {
    /// Per player count: achievable (nu, mu) pairs over Nash profiles,
    /// Pareto-reduced (small nu, large mu kept).
    pub pairs: Vec<Vec<(i64, i64)>>,
}

impl PathOracle {
    pub fn admits(&self, kappa: usize, t: i64) -> bool {
        self.pairs
            .get(kappa)
            .is_some_and(|p| p.iter().any(|&(nu, mu)| nu <= t && t <= mu))
    }
}

fn pareto_insert(pairs: &mut Vec<(i64, i64)>, nu: i64, mu: i64) {
    if pairs.iter().any(|&(n0, m0)| n0 <= nu && m0 >= mu) {
        return;
    }
    pairs.retain(|&(n0, m0)| !(nu <= n0 && mu >= m0));
    pairs.push((nu, mu));
}

/// Max utility an extra player could earn against `choices` on `game`'s
/// graph, trying every seed.
pub fn extra_potential(graph: &WeightedGraph, choices: &[usize]) -> i64 {
    let extended_game = GameInstance::new(graph.clone(), choices.len() + 1).unwrap();
    (0..graph.vertex_count())
        .map(|v| {
            let mut extended = choices.to_vec();
            extended.push(v);
            simulate(&extended_game, &StrategyProfile::new(extended))
                .unwrap()
                .utilities[choices.len()]
        })
        .max()
        .expect("graphs have vertices")
}

pub fn path_oracle(weights: &[i64], cap: usize) -> PathOracle {
    let n = weights.len();
    let graph = WeightedGraph::path(weights.to_vec());
    let total: i64 = weights.iter().sum();
    let mut pairs: Vec<Vec<(i64, i64)>> = vec![Vec::new(); cap + 1];
    pairs[0].push((total, MU_INFINITY));
    for (kappa, slot) in pairs.iter_mut().enumerate().skip(1) {
        let game = GameInstance::new(graph.clone(), kappa).unwrap();
        let mut found: Vec<(i64, i64)> = Vec::new();
        for_each_multiset(n, kappa, |choices| {
            let profile = StrategyProfile::new(choices.to_vec());
            if is_nash(&game, &profile).unwrap() != NashVerdict::Equilibrium {
                return;
            }
            let outcome = simulate(&game, &profile).unwrap();
            let mu = *outcome.utilities.iter().min().unwrap();
            let nu = extra_potential(&graph, choices);
            pareto_insert(&mut found, nu, mu);
        });
        *slot = found;
    }
    PathOracle { pairs }
}

/// Exhaustive equilibrium existence via the search module.
pub fn forest_has_equilibrium(game: &GameInstance) -> bool {
    competitive_diffusion::search::brute_force(
        game,
        competitive_diffusion::search::SearchMode::First,
        Some(u128::MAX),
    )
    .unwrap()
    .found
    .is_some()
}

// ---------------------------------------------------------------------------
// Random instance generators (all deterministic via the caller's rng).
// ---------------------------------------------------------------------------

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    WeightedGraph::unweighted(n, &edges).unwrap()
}

/// Uniform random labeled tree on `n` vertices via its code sequence.
pub fn random_tree_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &code {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}

/// A random chain graph as a staircase: side sizes `p`, `q`, with
/// `x_i` adjacent to the first `r_i` vertices of `Y`, `r` non-decreasing.
pub fn random_chain_edges(rng: &mut ChaCha8Rng, p: usize, q: usize) -> Vec<(usize, usize)> {
    // X vertices are 0..p, Y vertices are p..p+q.
    let mut thresholds: Vec<usize> = (0..p).map(|_| rng.gen_range(0..=q)).collect();
    thresholds.sort_unstable();
    let mut edges = Vec::new();
    for (i, &r) in thresholds.iter().enumerate() {
        for j in 0..r {
            edges.push((i, p + j));
        }
    }
    edges
}

pub fn complete_side(edges: &mut Vec<(usize, usize)>, side: std::ops::Range<usize>) {
    let members: Vec<usize> = side.collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.push((u, v));
        }
    }
}
