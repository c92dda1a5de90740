//! The series-parallel gadget encoding Partition with nonnegative weights
//! and `2n + 4` players.
//!
//! Component A is a 4-path weighted `(2a, 1, 1, 2a)`. Component B holds one
//! 5-cycle per value (weights `(s_j, 0, a, a, 0)` clockwise) plus two hubs
//! of weight `a`: one adjacent to every position-2 vertex, one to every
//! position-5 vertex. Splitting the values routes each cycle's `s_j` to the
//! hub on the matching side.

use std::collections::BTreeSet;

use crate::engine::StrategyProfile;
use crate::graph::{GameInstance, WeightedGraph};

use super::{
    seats, Certificate, GadgetInstance, GadgetKind, GadgetSource, PartitionInstance,
    ReductionError, Role, RoleMap,
};

/// Builds the gadget; the value total must be even.
pub fn build_partition_sp_gadget(
    instance: &PartitionInstance,
) -> Result<GadgetInstance, ReductionError> {
    let alpha = instance.alpha()?;
    let values = instance.values();

    let mut roles: Vec<Role> = Vec::new();
    let mut weights: Vec<i64> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (i, w) in [(1u8, 2 * alpha), (2, 1), (3, 1), (4, 2 * alpha)] {
        roles.push(Role::A(i));
        weights.push(w);
    }
    edges.extend([(0, 1), (1, 2), (2, 3)]);

    for (j, &s) in values.iter().enumerate() {
        let base = roles.len();
        for (pos, w) in [(1u8, s), (2, 0), (3, alpha), (4, alpha), (5, 0)] {
            roles.push(Role::Cycle(j, pos));
            weights.push(w);
        }
        edges.extend([
            (base, base + 1),
            (base + 1, base + 2),
            (base + 2, base + 3),
            (base + 3, base + 4),
            (base + 4, base),
        ]);
    }

    let hub_prime = roles.len();
    roles.push(Role::HubPrime);
    weights.push(alpha);
    let hub_double = roles.len();
    roles.push(Role::HubDoublePrime);
    weights.push(alpha);
    for j in 0..values.len() {
        edges.push((hub_prime, 4 + 5 * j + 1));
        edges.push((hub_double, 4 + 5 * j + 4));
    }

    let graph = WeightedGraph::from_edges(weights, &edges).expect("gadget construction is simple");
    let game = GameInstance::new(graph, values.len() + 4).expect("player count is positive");
    Ok(GadgetInstance {
        game,
        kind: GadgetKind::SeriesParallelPartition,
        roles: RoleMap::new(roles),
        source: GadgetSource::Partition {
            original: values.to_vec(),
            values: values.to_vec(),
            doubled: false,
        },
        lambda: None,
        alpha: Some(alpha),
    })
}

fn values_of(gadget: &GadgetInstance) -> &[i64] {
    match &gadget.source {
        GadgetSource::Partition { values, .. } => values,
        _ => unreachable!("kind and source are built together"),
    }
}

pub(super) fn validate_partition_certificate(
    values: &[i64],
    alpha: i64,
    set: &BTreeSet<usize>,
    required_size: Option<usize>,
) -> Result<(), ReductionError> {
    if let Some(&j) = set.iter().find(|&&j| j >= values.len()) {
        return Err(ReductionError::InvalidCertificate {
            reason: format!("index {j} out of range for {} values", values.len()),
        });
    }
    if let Some(size) = required_size {
        if set.len() != size {
            return Err(ReductionError::InvalidCertificate {
                reason: format!("half has {} indices, expected {size}", set.len()),
            });
        }
    }
    let sum: i64 = set.iter().map(|&j| values[j]).sum();
    if sum != alpha {
        return Err(ReductionError::InvalidCertificate {
            reason: format!("selected values sum to {sum}, expected {alpha}"),
        });
    }
    Ok(())
}

pub(super) fn prescribed_profile(
    gadget: &GadgetInstance,
    set: &BTreeSet<usize>,
) -> Result<StrategyProfile, ReductionError> {
    let values = values_of(gadget);
    let alpha = gadget.alpha.expect("partition gadgets carry alpha");
    validate_partition_certificate(values, alpha, set, None)?;
    // Player j takes position 4 of its cycle when selected, 3 otherwise;
    // then the two hubs, then the two path centers.
    let mut choices: Vec<usize> = (0..values.len())
        .map(|j| {
            let pos = if set.contains(&j) { 4 } else { 3 };
            gadget.roles.vertex(Role::Cycle(j, pos))
        })
        .collect();
    choices.push(gadget.roles.vertex(Role::HubPrime));
    choices.push(gadget.roles.vertex(Role::HubDoublePrime));
    choices.push(gadget.roles.vertex(Role::A(2)));
    choices.push(gadget.roles.vertex(Role::A(3)));
    Ok(StrategyProfile::new(choices))
}

pub(super) fn extract(
    gadget: &GadgetInstance,
    profile: &StrategyProfile,
) -> Result<Certificate, ReductionError> {
    let values = values_of(gadget);
    let alpha = gadget.alpha.expect("partition gadgets carry alpha");
    let seats = seats(profile, gadget.game.graph.vertex_count());

    for (condition, role) in [
        ("B.2", Role::HubPrime),
        ("B.2", Role::HubDoublePrime),
        ("B.3", Role::A(2)),
        ("B.3", Role::A(3)),
    ] {
        let v = gadget.roles.vertex(role);
        if seats[v] != 1 {
            return Err(ReductionError::StandardFormViolation {
                condition: if matches!(role, Role::A(_)) {
                    "B.3"
                } else {
                    "B.2"
                },
                detail: format!("{role} holds {} players, expected 1", seats[v]),
            });
        }
        let _ = condition;
    }

    let mut selected = BTreeSet::new();
    for j in 0..values.len() {
        let occupied = |pos: u8| seats[gadget.roles.vertex(Role::Cycle(j, pos))];
        for pos in [1u8, 2, 5] {
            if occupied(pos) != 0 {
                return Err(ReductionError::StandardFormViolation {
                    condition: "B.1",
                    detail: format!("cycle {j} position {pos} holds a player"),
                });
            }
        }
        match (occupied(3), occupied(4)) {
            (1, 0) => {}
            (0, 1) => {
                selected.insert(j);
            }
            (three, four) => {
                return Err(ReductionError::StandardFormViolation {
                    condition: "B.1",
                    detail: format!(
                        "cycle {j} holds {three} players at position 3 and {four} at position 4, \
                         expected exactly one in total"
                    ),
                });
            }
        }
    }

    let sum: i64 = selected.iter().map(|&j| values[j]).sum();
    if sum != alpha {
        return Err(ReductionError::ExtractionMismatch {
            reason: format!("extracted half sums to {sum}, expected {alpha}"),
        });
    }
    Ok(Certificate::Partition(selected))
}
