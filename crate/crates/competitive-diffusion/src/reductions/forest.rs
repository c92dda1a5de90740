//! The two-tree forest gadget encoding Partition with signed weights and
//! `2n + 4` players; the source values are doubled first if any is odd, and
//! certificates must pick exactly half the indices.
//!
//! Component A is a 4-path weighted `(a, 1, 1, a)`. Component B hangs one
//! star per value off a 5-vertex spine: star centers weigh `s_j - a`, their
//! leaves `(a, a, -a)`, the spine `(a+1, 0, -1, -a, a+1)` with its fourth
//! vertex adjacent to every star center. Selected stars hold two players on
//! their heavy leaves (the center collides into neutral); the spine-end
//! player rules every unselected star.

use std::collections::BTreeSet;

use crate::engine::StrategyProfile;
use crate::graph::{GameInstance, WeightedGraph};

use super::series_parallel::validate_partition_certificate;
use super::{
    seats, Certificate, GadgetInstance, GadgetKind, GadgetSource, PartitionInstance,
    ReductionError, Role, RoleMap,
};

/// Builds the gadget, doubling all values first when any is odd.
pub fn build_partition_forest_gadget(
    instance: &PartitionInstance,
) -> Result<GadgetInstance, ReductionError> {
    let original = instance.values().to_vec();
    let (working, doubled) = if instance.all_even() {
        (instance.clone(), false)
    } else {
        (instance.doubled(), true)
    };
    let alpha = working.alpha()?;
    let values = working.values();

    let mut roles: Vec<Role> = Vec::new();
    let mut weights: Vec<i64> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (i, w) in [(1u8, alpha), (2, 1), (3, 1), (4, alpha)] {
        roles.push(Role::A(i));
        weights.push(w);
    }
    edges.extend([(0, 1), (1, 2), (2, 3)]);

    for (j, &s) in values.iter().enumerate() {
        let center = roles.len();
        roles.push(Role::StarCenter(j));
        weights.push(s - alpha);
        for (pos, w) in [(1u8, alpha), (2, alpha), (3, -alpha)] {
            roles.push(Role::StarLeaf(j, pos));
            weights.push(w);
            edges.push((center, roles.len() - 1));
        }
    }

    let spine_base = roles.len();
    for (i, w) in [
        (1u8, alpha + 1),
        (2, 0),
        (3, -1),
        (4, -alpha),
        (5, alpha + 1),
    ] {
        roles.push(Role::Spine(i));
        weights.push(w);
    }
    for i in 0..4 {
        edges.push((spine_base + i, spine_base + i + 1));
    }
    for j in 0..values.len() {
        edges.push((spine_base + 3, 4 + 4 * j));
    }

    let graph = WeightedGraph::from_edges(weights, &edges).expect("gadget construction is simple");
    let game = GameInstance::new(graph, values.len() + 4).expect("player count is positive");
    Ok(GadgetInstance {
        game,
        kind: GadgetKind::ForestPartition,
        roles: RoleMap::new(roles),
        source: GadgetSource::Partition {
            original,
            values: values.to_vec(),
            doubled,
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

pub(super) fn prescribed_profile(
    gadget: &GadgetInstance,
    set: &BTreeSet<usize>,
) -> Result<StrategyProfile, ReductionError> {
    let values = values_of(gadget);
    let alpha = gadget.alpha.expect("partition gadgets carry alpha");
    validate_partition_certificate(values, alpha, set, Some(values.len() / 2))?;
    let mut choices = Vec::with_capacity(values.len() + 4);
    for &j in set {
        choices.push(gadget.roles.vertex(Role::StarLeaf(j, 1)));
        choices.push(gadget.roles.vertex(Role::StarLeaf(j, 2)));
    }
    choices.push(gadget.roles.vertex(Role::Spine(1)));
    choices.push(gadget.roles.vertex(Role::Spine(5)));
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

    for role in [Role::Spine(1), Role::Spine(5)] {
        let v = gadget.roles.vertex(role);
        if seats[v] != 1 {
            return Err(ReductionError::StandardFormViolation {
                condition: "C.2",
                detail: format!("{role} holds {} players, expected 1", seats[v]),
            });
        }
    }
    for role in [Role::Spine(2), Role::Spine(3), Role::Spine(4)] {
        let v = gadget.roles.vertex(role);
        if seats[v] != 0 {
            return Err(ReductionError::StandardFormViolation {
                condition: "C.2",
                detail: format!("{role} holds a player"),
            });
        }
    }
    for role in [Role::A(2), Role::A(3)] {
        let v = gadget.roles.vertex(role);
        if seats[v] != 1 {
            return Err(ReductionError::StandardFormViolation {
                condition: "C.3",
                detail: format!("{role} holds {} players, expected 1", seats[v]),
            });
        }
    }

    let mut selected = BTreeSet::new();
    for j in 0..values.len() {
        let center = seats[gadget.roles.vertex(Role::StarCenter(j))];
        let leaf = |pos: u8| seats[gadget.roles.vertex(Role::StarLeaf(j, pos))];
        match (center, leaf(1), leaf(2), leaf(3)) {
            (0, 0, 0, 0) => {}
            (0, 1, 1, 0) => {
                selected.insert(j);
            }
            _ => {
                return Err(ReductionError::StandardFormViolation {
                    condition: "C.1",
                    detail: format!(
                        "star {j} occupancy (center, leaves) = \
                         ({center}, {}, {}, {}) matches neither pattern",
                        leaf(1),
                        leaf(2),
                        leaf(3)
                    ),
                });
            }
        }
    }
    if selected.len() != values.len() / 2 {
        return Err(ReductionError::StandardFormViolation {
            condition: "C.1",
            detail: format!(
                "{} stars occupied, expected {}",
                selected.len(),
                values.len() / 2
            ),
        });
    }
    let sum: i64 = selected.iter().map(|&j| values[j]).sum();
    if sum != alpha {
        return Err(ReductionError::ExtractionMismatch {
            reason: format!("extracted half sums to {sum}, expected {alpha}"),
        });
    }
    Ok(Certificate::Partition(selected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{is_nash, simulate, NashVerdict};

    #[test]
    fn gadget_is_a_two_tree_forest_with_paper_weights() {
        let instance = PartitionInstance::new(vec![2, 6, 4, 4]).unwrap();
        let gadget = build_partition_forest_gadget(&instance).unwrap();
        let g = &gadget.game.graph;
        let n = 2;
        assert_eq!(g.vertex_count(), 4 + 8 * n + 5);
        // Forest of exactly two trees: e = v - components.
        assert_eq!(g.edge_count(), g.vertex_count() - 2);
        assert!(
            competitive_diffusion_forest_check(g),
            "gadget must be acyclic"
        );
        let alpha = gadget.alpha.unwrap();
        assert_eq!(alpha, 8);
        assert_eq!(g.weight(gadget.roles.vertex(Role::Spine(4))), -alpha);
        let centers: Vec<i64> = (0..4)
            .map(|j| g.weight(gadget.roles.vertex(Role::StarCenter(j))))
            .collect();
        assert_eq!(centers, vec![-6, -2, -4, -4]);
    }

    // Cycle check via union-find over the edges.
    fn competitive_diffusion_forest_check(g: &WeightedGraph) -> bool {
        let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            if parent[v] != v {
                let root = find(parent, parent[v]);
                parent[v] = root;
            }
            parent[v]
        }
        for (u, v) in g.edges() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    #[test]
    fn odd_values_are_doubled() {
        let instance = PartitionInstance::new(vec![1, 3, 2, 2]).unwrap();
        let gadget = build_partition_forest_gadget(&instance).unwrap();
        match &gadget.source {
            GadgetSource::Partition {
                original,
                values,
                doubled,
            } => {
                assert_eq!(original, &vec![1, 3, 2, 2]);
                assert_eq!(values, &vec![2, 6, 4, 4]);
                assert!(doubled);
            }
            other => panic!("unexpected source {other:?}"),
        }
    }

    #[test]
    fn certificate_round_trips_with_proof_utilities() {
        let instance = PartitionInstance::new(vec![2, 6, 4, 4]).unwrap();
        let gadget = build_partition_forest_gadget(&instance).unwrap();
        // s_0 + s_1 = 8 = alpha and |S'| = n = 2.
        let cert = Certificate::Partition([0, 1].into());
        let profile = super::super::certificate_to_profile(&gadget, &cert).unwrap();
        assert_eq!(
            is_nash(&gadget.game, &profile).unwrap(),
            NashVerdict::Equilibrium
        );
        let outcome = simulate(&gadget.game, &profile).unwrap();
        let alpha = gadget.alpha.unwrap();
        assert_eq!(outcome.utilities[..4], vec![alpha; 4][..]);
        assert_eq!(outcome.utilities[4..], vec![alpha + 1; 4][..]);
        let back = super::super::profile_to_certificate(&gadget, &profile).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn wrong_size_half_is_rejected() {
        let instance = PartitionInstance::new(vec![2, 2, 2, 2, 4, 4]).unwrap();
        let gadget = build_partition_forest_gadget(&instance).unwrap();
        // Sums to alpha = 8 but picks 2 of 6 indices, not 3.
        let cert = Certificate::Partition([4, 5].into());
        assert!(matches!(
            super::super::certificate_to_profile(&gadget, &cert),
            Err(ReductionError::InvalidCertificate { .. })
        ));
    }
}
