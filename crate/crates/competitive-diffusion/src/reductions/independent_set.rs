//! The unweighted gadget encoding Independent Set with `k + 3` players.
//!
//! Component A is a 4-path with `n` pendant leaves on each end. Component B
//! subdivides every source edge, pads every original vertex to degree `n+1`
//! with pendants, and attaches a hub adjacent to all original vertices plus
//! `lambda` leaves of its own. All weights are 1. A size-`k` independent set
//! seeds the originals; the hub and the two path centers absorb the rest.

use std::collections::BTreeSet;

use crate::engine::StrategyProfile;
use crate::graph::{GameInstance, WeightedGraph};

use super::{
    seats, Certificate, GadgetInstance, GadgetKind, GadgetSource, ReductionError, Role, RoleMap,
};

/// Hub leaf count: `Theta(n^3)`, padded so the proof's inequalities
/// `lambda - 2 (n + 2) > n^2 + n - m` and `lambda > n + 1` hold strictly for
/// every n >= 1.
pub fn lambda_for(n: usize, m: usize) -> usize {
    n * n * n + 3 * n + m + 6
}

/// Builds the gadget for "does `source` have an independent set of size
/// `target`", a game with `target + 3` players.
pub fn build_is_gadget(
    source: &WeightedGraph,
    target: usize,
) -> Result<GadgetInstance, ReductionError> {
    let n = source.vertex_count();
    if n == 0 {
        return Err(ReductionError::EmptySource);
    }
    let edges_src = source.edges();
    let m = edges_src.len();
    let lambda = lambda_for(n, m);

    let mut roles: Vec<Role> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for i in 1..=4u8 {
        roles.push(Role::A(i));
    }
    edges.extend([(0, 1), (1, 2), (2, 3)]);
    for i in 0..n {
        roles.push(Role::ALeafLeft(i));
        edges.push((0, roles.len() - 1));
    }
    for i in 0..n {
        roles.push(Role::ALeafRight(i));
        edges.push((3, roles.len() - 1));
    }

    let original_base = roles.len();
    for v in 0..n {
        roles.push(Role::Original(v));
    }
    for &(u, v) in &edges_src {
        roles.push(Role::Subdivision(u, v));
        let b_e = roles.len() - 1;
        edges.push((original_base + u, b_e));
        edges.push((original_base + v, b_e));
    }
    for v in 0..n {
        for i in 0..(n - source.degree(v)) {
            roles.push(Role::Pendant(v, i));
            edges.push((original_base + v, roles.len() - 1));
        }
    }
    roles.push(Role::Hub);
    let hub = roles.len() - 1;
    for v in 0..n {
        edges.push((hub, original_base + v));
    }
    for i in 0..lambda {
        roles.push(Role::HubLeaf(i));
        edges.push((hub, roles.len() - 1));
    }

    let graph = WeightedGraph::from_edges(vec![1; roles.len()], &edges)
        .expect("gadget construction is simple");
    let game = GameInstance::new(graph, target + 3).expect("player count is positive");
    debug_assert!(lambda > n + 1);
    debug_assert!((lambda as i64) - 2 * (n as i64 + 2) > (n * n + n) as i64 - m as i64);
    Ok(GadgetInstance {
        game,
        kind: GadgetKind::UnweightedIs,
        roles: RoleMap::new(roles),
        source: GadgetSource::IndependentSet {
            vertices: n,
            edges: edges_src,
            target,
        },
        lambda: Some(lambda),
        alpha: None,
    })
}

fn source_parts(gadget: &GadgetInstance) -> (usize, &[(usize, usize)], usize) {
    match &gadget.source {
        GadgetSource::IndependentSet {
            vertices,
            edges,
            target,
        } => (*vertices, edges, *target),
        _ => unreachable!("kind and source are built together"),
    }
}

pub(super) fn prescribed_profile(
    gadget: &GadgetInstance,
    set: &BTreeSet<usize>,
) -> Result<StrategyProfile, ReductionError> {
    let (n, edges, target) = source_parts(gadget);
    if set.len() != target {
        return Err(ReductionError::InvalidCertificate {
            reason: format!(
                "independent set has {} vertices, expected {target}",
                set.len()
            ),
        });
    }
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(ReductionError::InvalidCertificate {
            reason: format!("vertex {v} is not a source vertex"),
        });
    }
    if let Some(&(u, v)) = edges
        .iter()
        .find(|(u, v)| set.contains(u) && set.contains(v))
    {
        return Err(ReductionError::InvalidCertificate {
            reason: format!("vertices {u} and {v} are adjacent"),
        });
    }
    let mut choices: Vec<usize> = set
        .iter()
        .map(|&v| gadget.roles.vertex(Role::Original(v)))
        .collect();
    choices.push(gadget.roles.vertex(Role::Hub));
    choices.push(gadget.roles.vertex(Role::A(2)));
    choices.push(gadget.roles.vertex(Role::A(3)));
    Ok(StrategyProfile::new(choices))
}

pub(super) fn extract(
    gadget: &GadgetInstance,
    profile: &StrategyProfile,
) -> Result<Certificate, ReductionError> {
    let (_, edges, target) = source_parts(gadget);
    let seats = seats(profile, gadget.game.graph.vertex_count());

    // A.2: one player on the hub. A.3: one on a_2 and one on a_3.
    for (condition, role) in [("A.2", Role::Hub), ("A.3", Role::A(2)), ("A.3", Role::A(3))] {
        let v = gadget.roles.vertex(role);
        if seats[v] != 1 {
            return Err(ReductionError::StandardFormViolation {
                condition,
                detail: format!("{role} holds {} players, expected 1", seats[v]),
            });
        }
    }
    // A.1: the remaining k players sit on k distinct original vertices.
    let mut chosen = BTreeSet::new();
    for (v, &count) in seats.iter().enumerate() {
        if count == 0 {
            continue;
        }
        match gadget.roles.role(v) {
            Role::Hub | Role::A(2) | Role::A(3) => {}
            Role::Original(orig) => {
                if count != 1 {
                    return Err(ReductionError::StandardFormViolation {
                        condition: "A.1",
                        detail: format!("original vertex {orig} holds {count} players"),
                    });
                }
                chosen.insert(orig);
            }
            other => {
                return Err(ReductionError::StandardFormViolation {
                    condition: "A.1",
                    detail: format!("a player sits on {other}"),
                });
            }
        }
    }
    if chosen.len() != target {
        return Err(ReductionError::StandardFormViolation {
            condition: "A.1",
            detail: format!(
                "{} distinct originals chosen, expected {target}",
                chosen.len()
            ),
        });
    }
    // The propositions force independence; a violation here would contradict
    // the theory.
    if let Some(&(u, v)) = edges
        .iter()
        .find(|(u, v)| chosen.contains(u) && chosen.contains(v))
    {
        return Err(ReductionError::ExtractionMismatch {
            reason: format!("chosen vertices {u} and {v} are adjacent"),
        });
    }
    Ok(Certificate::IndependentSet(chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{is_nash, NashVerdict};

    #[test]
    fn k2_gadget_has_35_vertices() {
        // n = 2, m = 1: 4 + 2n = 8 on side A; 2 + 1 + Sum(n - deg) = 2 + 1 +
        // 2 on side B before the hub; lambda = 8 + 6 + 1 + 6 = 21; total 35.
        let source = WeightedGraph::unweighted(2, &[(0, 1)]).unwrap();
        let gadget = build_is_gadget(&source, 1).unwrap();
        assert_eq!(gadget.lambda, Some(21));
        assert_eq!(gadget.game.graph.vertex_count(), 35);
        assert_eq!(gadget.game.players(), 4);
    }

    #[test]
    fn hub_degree_is_n_plus_lambda_and_subdivisions_have_degree_2() {
        let source =
            WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let gadget = build_is_gadget(&source, 2).unwrap();
        let g = &gadget.game.graph;
        let hub = gadget.roles.vertex(Role::Hub);
        assert_eq!(g.degree(hub), 4 + gadget.lambda.unwrap());
        for (v, &role) in gadget.roles.roles().iter().enumerate() {
            if matches!(role, Role::Subdivision(..)) {
                assert_eq!(g.degree(v), 2, "subdivision {role}");
            }
        }
    }

    #[test]
    fn size_formula_holds() {
        let source = WeightedGraph::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
        let (n, m) = (3usize, 2usize);
        let gadget = build_is_gadget(&source, 2).unwrap();
        let degree_fill: usize = (0..n).map(|v| n - source.degree(v)).sum();
        let expected = 4 + 2 * n + n + m + degree_fill + 1 + gadget.lambda.unwrap();
        assert_eq!(gadget.game.graph.vertex_count(), expected);
    }

    #[test]
    fn two_isolated_vertices_round_trip() {
        // I = both vertices; the prescribed profile is an equilibrium and
        // extraction recovers I.
        let source = WeightedGraph::unweighted(2, &[]).unwrap();
        let gadget = build_is_gadget(&source, 2).unwrap();
        let cert = Certificate::IndependentSet([0, 1].into());
        let profile = super::super::certificate_to_profile(&gadget, &cert).unwrap();
        assert_eq!(
            is_nash(&gadget.game, &profile).unwrap(),
            NashVerdict::Equilibrium
        );
        let back = super::super::profile_to_certificate(&gadget, &profile).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn adjacent_certificate_vertices_are_rejected() {
        let source = WeightedGraph::unweighted(2, &[(0, 1)]).unwrap();
        let gadget = build_is_gadget(&source, 2).unwrap();
        let cert = Certificate::IndependentSet([0, 1].into());
        match super::super::certificate_to_profile(&gadget, &cert) {
            Err(ReductionError::InvalidCertificate { .. }) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
    }
}
