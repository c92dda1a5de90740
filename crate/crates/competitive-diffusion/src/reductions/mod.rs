//! Hardness gadgets: constructions tying equilibrium existence to
//! Independent Set and Partition instances, with certificate round-trips in
//! both directions.
//!
//! Each builder emits the gadget game together with a role map naming every
//! vertex's function in the construction. Forward, a valid certificate turns
//! into the prescribed strategy profile (always an equilibrium, which the
//! tests confirm with the engine rather than assume). Backward, an
//! engine-verified equilibrium is matched against the rigid standard form
//! the constructions force, and the certificate is read off and re-checked.

mod forest;
mod independent_set;
mod series_parallel;

pub use forest::build_partition_forest_gadget;
pub use independent_set::build_is_gadget;
pub use series_parallel::build_partition_sp_gadget;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{is_nash, EngineError, ImprovingDeviation, NashVerdict, StrategyProfile};
use crate::graph::GameInstance;

/// A multiset of positive integers to be split into two equal-sum halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    values: Vec<i64>,
}

impl PartitionInstance {
    pub fn new(values: Vec<i64>) -> Result<Self, ReductionError> {
        if values.is_empty() {
            return Err(ReductionError::EmptySource);
        }
        if !values.len().is_multiple_of(2) {
            return Err(ReductionError::OddElementCount {
                count: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if value <= 0 {
                return Err(ReductionError::NonPositiveValue { index, value });
            }
        }
        Ok(PartitionInstance { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    /// Half the total, defined only when the total is even.
    pub fn alpha(&self) -> Result<i64, ReductionError> {
        let total = self.total();
        if total % 2 != 0 {
            return Err(ReductionError::OddTotal { total });
        }
        Ok(total / 2)
    }

    pub fn all_even(&self) -> bool {
        self.values.iter().all(|v| v % 2 == 0)
    }

    pub fn doubled(&self) -> Self {
        PartitionInstance {
            values: self.values.iter().map(|v| v * 2).collect(),
        }
    }
}

/// Which construction a gadget came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GadgetKind {
    #[serde(rename = "unweighted-is")]
    UnweightedIs,
    #[serde(rename = "series-parallel-partition")]
    SeriesParallelPartition,
    #[serde(rename = "forest-partition")]
    ForestPartition,
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GadgetKind::UnweightedIs => "unweighted-is",
            GadgetKind::SeriesParallelPartition => "series-parallel-partition",
            GadgetKind::ForestPartition => "forest-partition",
        };
        f.write_str(name)
    }
}

/// The function of one gadget vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    /// Path vertex `a_1..a_4` of the side component (1-based label).
    A(u8),
    /// Pendant leaf on `a_1` (independent-set gadget).
    ALeafLeft(usize),
    /// Pendant leaf on `a_4`.
    ALeafRight(usize),
    /// A vertex of the source graph.
    Original(usize),
    /// Subdivision vertex of source edge `(u, v)`, `u < v`.
    Subdivision(usize, usize),
    /// Degree-filling pendant `i` attached to original vertex `v`.
    Pendant(usize, usize),
    /// The hub adjacent to every original vertex.
    Hub,
    /// Pendant leaf `i` on the hub.
    HubLeaf(usize),
    /// Five-cycle vertex `pos` (1-based) of partition element `j` (0-based).
    Cycle(usize, u8),
    /// Hub adjacent to every `cycle(j, 2)`.
    HubPrime,
    /// Hub adjacent to every `cycle(j, 5)`.
    HubDoublePrime,
    /// Star center of partition element `j`.
    StarCenter(usize),
    /// Star leaf `pos` (1..=3) of partition element `j`.
    StarLeaf(usize, u8),
    /// Spine path vertex `b'_1..b'_5`.
    Spine(u8),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(i) => write!(f, "a{i}"),
            Role::ALeafLeft(i) => write!(f, "a1_leaf{i}"),
            Role::ALeafRight(i) => write!(f, "a4_leaf{i}"),
            Role::Original(v) => write!(f, "v{v}"),
            Role::Subdivision(u, v) => write!(f, "edge{u}_{v}"),
            Role::Pendant(v, i) => write!(f, "pendant{v}_{i}"),
            Role::Hub => write!(f, "hub"),
            Role::HubLeaf(i) => write!(f, "hub_leaf{i}"),
            Role::Cycle(j, pos) => write!(f, "cycle{j}_{pos}"),
            Role::HubPrime => write!(f, "hub_prime"),
            Role::HubDoublePrime => write!(f, "hub_double_prime"),
            Role::StarCenter(j) => write!(f, "star{j}"),
            Role::StarLeaf(j, pos) => write!(f, "star{j}_leaf{pos}"),
            Role::Spine(i) => write!(f, "spine{i}"),
        }
    }
}

impl std::str::FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn tail<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
            s.strip_prefix(prefix)
        }
        fn num<T: std::str::FromStr>(s: &str) -> Result<T, String> {
            s.parse().map_err(|_| format!("bad role index in `{s}`"))
        }
        if s == "hub" {
            return Ok(Role::Hub);
        }
        if s == "hub_prime" {
            return Ok(Role::HubPrime);
        }
        if s == "hub_double_prime" {
            return Ok(Role::HubDoublePrime);
        }
        if let Some(rest) = tail(s, "a1_leaf") {
            return Ok(Role::ALeafLeft(num(rest)?));
        }
        if let Some(rest) = tail(s, "a4_leaf") {
            return Ok(Role::ALeafRight(num(rest)?));
        }
        if let Some(rest) = tail(s, "hub_leaf") {
            return Ok(Role::HubLeaf(num(rest)?));
        }
        if let Some(rest) = tail(s, "pendant") {
            let (v, i) = rest
                .split_once('_')
                .ok_or_else(|| format!("bad role `{s}`"))?;
            return Ok(Role::Pendant(num(v)?, num(i)?));
        }
        if let Some(rest) = tail(s, "edge") {
            let (u, v) = rest
                .split_once('_')
                .ok_or_else(|| format!("bad role `{s}`"))?;
            return Ok(Role::Subdivision(num(u)?, num(v)?));
        }
        if let Some(rest) = tail(s, "cycle") {
            let (j, pos) = rest
                .split_once('_')
                .ok_or_else(|| format!("bad role `{s}`"))?;
            return Ok(Role::Cycle(num(j)?, num(pos)?));
        }
        if let Some(rest) = tail(s, "star") {
            if let Some((j, leaf)) = rest.split_once("_leaf") {
                return Ok(Role::StarLeaf(num(j)?, num(leaf)?));
            }
            return Ok(Role::StarCenter(num(rest)?));
        }
        if let Some(rest) = tail(s, "spine") {
            return Ok(Role::Spine(num(rest)?));
        }
        if let Some(rest) = tail(s, "v") {
            return Ok(Role::Original(num(rest)?));
        }
        if let Some(rest) = tail(s, "a") {
            return Ok(Role::A(num(rest)?));
        }
        Err(format!("unknown role `{s}`"))
    }
}

/// Bijection between gadget vertices and their roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleMap {
    by_vertex: Vec<Role>,
    by_role: BTreeMap<Role, usize>,
}

impl RoleMap {
    pub fn new(by_vertex: Vec<Role>) -> Self {
        let by_role = by_vertex
            .iter()
            .enumerate()
            .map(|(v, &r)| (r, v))
            .collect::<BTreeMap<_, _>>();
        assert_eq!(
            by_role.len(),
            by_vertex.len(),
            "roles must be a bijection onto the vertex set"
        );
        RoleMap { by_vertex, by_role }
    }

    pub fn vertex(&self, role: Role) -> usize {
        self.by_role[&role]
    }

    pub fn get(&self, role: Role) -> Option<usize> {
        self.by_role.get(&role).copied()
    }

    pub fn role(&self, vertex: usize) -> Role {
        self.by_vertex[vertex]
    }

    pub fn len(&self) -> usize {
        self.by_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_vertex.is_empty()
    }

    pub fn roles(&self) -> &[Role] {
        &self.by_vertex
    }
}

/// Where a gadget came from, carried for certificate extraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GadgetSource {
    IndependentSet {
        vertices: usize,
        edges: Vec<(usize, usize)>,
        target: usize,
    },
    Partition {
        original: Vec<i64>,
        values: Vec<i64>,
        doubled: bool,
    },
}

/// A reduction output: the gadget game plus everything needed to move
/// between certificates and profiles.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub game: GameInstance,
    pub kind: GadgetKind,
    pub roles: RoleMap,
    pub source: GadgetSource,
    /// Hub leaf count of the independent-set gadget.
    pub lambda: Option<usize>,
    /// Half-sum of the partition gadgets.
    pub alpha: Option<i64>,
}

/// A solution to the source instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Vertices of an independent set of the source graph.
    IndependentSet(BTreeSet<usize>),
    /// Indices (0-based) of the values forming one half of the partition.
    Partition(BTreeSet<usize>),
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("partition input must be nonempty")]
    EmptySource,
    #[error("partition input needs an even number of values, got {count}")]
    OddElementCount { count: usize },
    #[error("partition values must be positive; value {value} at index {index}")]
    NonPositiveValue { index: usize, value: i64 },
    #[error("partition total {total} is odd, no equal split exists")]
    OddTotal { total: i64 },
    #[error("invalid certificate: {reason}")]
    InvalidCertificate { reason: String },
    #[error("certificate kind does not match gadget kind {kind}")]
    WrongCertificateKind { kind: GadgetKind },
    #[error("profile is not a Nash equilibrium: player {} gains {} by moving to vertex {}",
            .deviation.player, .deviation.gain(), .deviation.vertex)]
    NotNash { deviation: ImprovingDeviation },
    #[error("equilibrium violates standard form {condition}: {detail}")]
    StandardFormViolation {
        condition: &'static str,
        detail: String,
    },
    #[error("standard-form certificate fails validation: {reason}")]
    ExtractionMismatch { reason: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Emits the sufficiency proof's prescribed profile for a valid certificate.
pub fn certificate_to_profile(
    gadget: &GadgetInstance,
    certificate: &Certificate,
) -> Result<StrategyProfile, ReductionError> {
    match (gadget.kind, certificate) {
        (GadgetKind::UnweightedIs, Certificate::IndependentSet(set)) => {
            independent_set::prescribed_profile(gadget, set)
        }
        (GadgetKind::SeriesParallelPartition, Certificate::Partition(set)) => {
            series_parallel::prescribed_profile(gadget, set)
        }
        (GadgetKind::ForestPartition, Certificate::Partition(set)) => {
            forest::prescribed_profile(gadget, set)
        }
        _ => Err(ReductionError::WrongCertificateKind { kind: gadget.kind }),
    }
}

/// Reads a certificate off an engine-verified equilibrium.
///
/// The profile must pass the engine's Nash check; it is then matched against
/// the standard form its construction forces, and the certificate is read
/// off and re-validated. A Nash profile failing either step would contradict
/// the constructions' rigidity and is reported as such.
pub fn profile_to_certificate(
    gadget: &GadgetInstance,
    profile: &StrategyProfile,
) -> Result<Certificate, ReductionError> {
    match is_nash(&gadget.game, profile)? {
        NashVerdict::Equilibrium => {}
        NashVerdict::Counterexample(deviation) => {
            return Err(ReductionError::NotNash { deviation });
        }
    }
    match gadget.kind {
        GadgetKind::UnweightedIs => independent_set::extract(gadget, profile),
        GadgetKind::SeriesParallelPartition => series_parallel::extract(gadget, profile),
        GadgetKind::ForestPartition => forest::extract(gadget, profile),
    }
}

/// Occupancy counts per vertex, shared by the standard-form checks.
pub(crate) fn seats(profile: &StrategyProfile, n: usize) -> Vec<usize> {
    let mut seats = vec![0usize; n];
    for &v in profile.choices() {
        seats[v] += 1;
    }
    seats
}

// ---------------------------------------------------------------------------
// Role-map file format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct RolesJson {
    kind: GadgetKind,
    players: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<i64>,
    source: GadgetSource,
    /// Role of each vertex, indexed by vertex id.
    roles: Vec<String>,
}

/// Serializes the role map and source metadata; the gadget's game itself is
/// saved separately in the ordinary instance format.
pub fn roles_to_json(gadget: &GadgetInstance) -> String {
    let json = RolesJson {
        kind: gadget.kind,
        players: gadget.game.players(),
        lambda: gadget.lambda,
        alpha: gadget.alpha,
        source: gadget.source.clone(),
        roles: gadget.roles.roles().iter().map(Role::to_string).collect(),
    };
    serde_json::to_string_pretty(&json).expect("role maps serialize")
}

/// Rebuilds a gadget from its saved game and role-map JSON.
pub fn gadget_from_parts(
    game: GameInstance,
    roles_json: &str,
) -> Result<GadgetInstance, ReductionError> {
    let parsed: RolesJson =
        serde_json::from_str(roles_json).map_err(|e| ReductionError::InvalidCertificate {
            reason: format!("role map: {e}"),
        })?;
    if parsed.roles.len() != game.graph.vertex_count() {
        return Err(ReductionError::InvalidCertificate {
            reason: format!(
                "role map covers {} vertices, game has {}",
                parsed.roles.len(),
                game.graph.vertex_count()
            ),
        });
    }
    let roles: Vec<Role> = parsed
        .roles
        .iter()
        .map(|s| s.parse::<Role>())
        .collect::<Result<_, _>>()
        .map_err(|reason| ReductionError::InvalidCertificate { reason })?;
    Ok(GadgetInstance {
        game,
        kind: parsed.kind,
        roles: RoleMap::new(roles),
        source: parsed.source,
        lambda: parsed.lambda,
        alpha: parsed.alpha,
    })
}
