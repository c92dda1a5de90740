//! Solvers for the competitive diffusion game on weighted graphs.
//!
//! `k` players each seed a vertex of an undirected, integer-weighted graph;
//! opinions spread synchronously along edges, simultaneous claims turn a
//! vertex neutral, and a player's utility is the total weight it dominates.
//! This crate simulates the process, verifies and searches pure Nash
//! equilibria, solves forests of paths and chain-like graphs exactly, and
//! materializes the hardness gadgets that tie equilibrium existence to
//! Independent Set and Partition instances.
//!
//! Entry points:
//! - [`graph`]: the weighted-graph data model and its JSON format.
//! - [`engine`]: diffusion simulation, deviation utilities, Nash checks.
//! - [`search`]: exhaustive equilibrium search (the reference oracle).
//! - [`paths`]: exact solvers for forests of paths.
//! - [`structured`]: polynomial solver for chain, cochain and threshold graphs.
//! - [`reductions`]: hardness gadgets with certificate round-trips.
//!
//! The `examples/` directory has one runnable program per capability; the
//! thin `cdg` binary exposes the same operations for scripting.

pub mod cli;
pub mod engine;
pub mod graph;
pub mod paths;
pub mod reductions;
pub mod search;
pub mod structured;

pub use engine::{
    best_response, is_nash, simulate, utility_of_deviation, DiffusionOutcome, NashVerdict,
    StrategyProfile, VertexFate,
};
pub use graph::{load, save, GameInstance, WeightedGraph};
pub use search::{brute_force, SearchMode, SearchReport};
