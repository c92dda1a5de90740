//! Graph data model shared by every solver: undirected graphs with integer
//! vertex weights (possibly negative), plus validation and JSON round-trips.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A structural invariant violated by a candidate graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("asymmetric adjacency: {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: usize, v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} references out-of-range neighbor {neighbor}")]
    NeighborOutOfRange { v: usize, neighbor: usize },
    #[error("vertex ids are not dense 0..n-1: expected id {expected}, found {found}")]
    IdGap { expected: usize, found: usize },
    #[error("duplicate vertex id {0}")]
    DuplicateId(usize),
    #[error("adjacency has {adjacency} rows but {weights} weights")]
    LengthMismatch { adjacency: usize, weights: usize },
}

/// Errors arising while loading or saving instances.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("parse error at {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error("player count must be at least 1, got {0}")]
    PlayerCount(usize),
    #[error("serialization failed: {0}")]
    Serialize(#[source] serde_json::Error),
}

/// Undirected graph with 64-bit signed vertex weights.
///
/// Vertex ids are dense `0..n`. Adjacency lists are kept sorted, symmetric,
/// loop-free and duplicate-free; immutable after construction so it can be
/// shared read-only across workers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    adjacency: Vec<Vec<usize>>,
    weights: Vec<i64>,
    /// Optional display names from the input file; never consulted by solvers.
    names: BTreeMap<usize, String>,
}

/// Checks the structural invariants of a raw adjacency structure and returns
/// the first violation found, scanning vertices in id order.
pub fn validate(adjacency: &[Vec<usize>]) -> Result<(), Violation> {
    let n = adjacency.len();
    for (v, nbrs) in adjacency.iter().enumerate() {
        let mut prev: Option<usize> = None;
        for &u in nbrs {
            if u >= n {
                return Err(Violation::NeighborOutOfRange { v, neighbor: u });
            }
            if u == v {
                return Err(Violation::SelfLoop(v));
            }
            if prev == Some(u) {
                return Err(Violation::DuplicateEdge { u: v, v: u });
            }
            prev = Some(u);
            if !adjacency[u].contains(&v) {
                return Err(Violation::Asymmetric { u: v, v: u });
            }
        }
    }
    Ok(())
}

impl WeightedGraph {
    /// Builds a graph from an edge list. Edges are listed once as unordered
    /// pairs; weights are given per vertex id.
    pub fn from_edges(weights: Vec<i64>, edges: &[(usize, usize)]) -> Result<Self, Violation> {
        let n = weights.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Violation::NeighborOutOfRange { v, neighbor: u });
            }
            if v >= n {
                return Err(Violation::NeighborOutOfRange { v: u, neighbor: v });
            }
            if u == v {
                return Err(Violation::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Violation::DuplicateEdge { u: key.0, v: key.1 });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            adjacency,
            weights,
            names: BTreeMap::new(),
        })
    }

    /// Builds a graph from explicit adjacency lists, validating every
    /// structural invariant first.
    pub fn from_adjacency(
        adjacency: Vec<Vec<usize>>,
        weights: Vec<i64>,
    ) -> Result<Self, Violation> {
        if adjacency.len() != weights.len() {
            return Err(Violation::LengthMismatch {
                adjacency: adjacency.len(),
                weights: weights.len(),
            });
        }
        let mut adjacency = adjacency;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        validate(&adjacency)?;
        Ok(Self {
            adjacency,
            weights,
            names: BTreeMap::new(),
        })
    }

    /// Unit-weight convenience constructor.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self, Violation> {
        Self::from_edges(vec![1; n], edges)
    }

    /// A path on `weights.len()` vertices, in index order.
    pub fn path(weights: Vec<i64>) -> Self {
        let edges: Vec<_> = (1..weights.len()).map(|i| (i - 1, i)).collect();
        Self::from_edges(weights, &edges).expect("path construction cannot violate invariants")
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as canonical `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.get(&v).map(String::as_str)
    }

    pub fn set_name(&mut self, v: usize, name: String) {
        self.names.insert(v, name);
    }

    /// Re-checks the construction invariants; useful after deserialization.
    pub fn validate(&self) -> Result<(), Violation> {
        if self.adjacency.len() != self.weights.len() {
            return Err(Violation::LengthMismatch {
                adjacency: self.adjacency.len(),
                weights: self.weights.len(),
            });
        }
        validate(&self.adjacency)
    }
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph with {} vertices, {} edges",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// A competitive diffusion game: a weighted graph plus the player count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameInstance {
    pub graph: WeightedGraph,
    k: usize,
}

impl GameInstance {
    pub fn new(graph: WeightedGraph, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::PlayerCount(k));
        }
        Ok(Self { graph, k })
    }

    pub fn players(&self) -> usize {
        self.k
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    weight: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GameJson {
    k: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<(usize, usize)>,
}

/// Parses a game instance from its JSON representation.
///
/// The schema is `{"k": int, "vertices": [{"id", "weight", "name"?}],
/// "edges": [[u, v], ...]}` with each edge listed once as an unordered pair.
pub fn load(text: &str) -> Result<GameInstance, GraphError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: GameJson = serde_path_to_error::deserialize(de).map_err(|e| GraphError::Parse {
        path: e.path().to_string(),
        source: e.into_inner(),
    })?;

    let n = raw.vertices.len();
    let mut weights = vec![0i64; n];
    let mut names = BTreeMap::new();
    let mut seen = vec![false; n];
    let mut sorted: Vec<&VertexJson> = raw.vertices.iter().collect();
    sorted.sort_by_key(|v| v.id);
    for (expected, v) in sorted.iter().enumerate() {
        if v.id >= n {
            return Err(Violation::IdGap {
                expected,
                found: v.id,
            }
            .into());
        }
        if seen[v.id] {
            return Err(Violation::DuplicateId(v.id).into());
        }
        if v.id != expected {
            return Err(Violation::IdGap {
                expected,
                found: v.id,
            }
            .into());
        }
        seen[v.id] = true;
        weights[v.id] = v.weight;
        if let Some(name) = &v.name {
            names.insert(v.id, name.clone());
        }
    }

    let mut graph = WeightedGraph::from_edges(weights, &raw.edges)?;
    graph.names = names;
    GameInstance::new(graph, raw.k)
}

/// Serializes a game instance canonically: vertices in id order, edges as
/// sorted `(min, max)` pairs. The output is deterministic for a given
/// instance, so `load(save(g))` structurally equals `g`.
pub fn save(instance: &GameInstance) -> String {
    let g = &instance.graph;
    let vertices = (0..g.vertex_count())
        .map(|id| VertexJson {
            id,
            weight: g.weight(id),
            name: g.name(id).map(str::to_owned),
        })
        .collect();
    let json = GameJson {
        k: instance.players(),
        vertices,
        edges: g.edges(),
    };
    serde_json::to_string_pretty(&json).expect("game serialization cannot fail")
}
