//! Materialize the hardness gadgets and round-trip certificates through
//! them: a Partition solution becomes an equilibrium of the gadget game,
//! and the equilibrium gives the solution back.
//!
//! Run with: `cargo run --example build_hardness_gadget`

use competitive_diffusion::engine::{is_nash, simulate, NashVerdict};
use competitive_diffusion::graph::WeightedGraph;
use competitive_diffusion::reductions::{
    build_is_gadget, build_partition_forest_gadget, build_partition_sp_gadget,
    certificate_to_profile, profile_to_certificate, Certificate, PartitionInstance,
};

fn main() {
    // Partition {8, 2, 6, 4} splits as {8, 2} / {6, 4} with alpha = 10.
    let instance = PartitionInstance::new(vec![8, 2, 6, 4]).expect("positive values");
    let certificate = Certificate::Partition([0, 1].into());

    for (name, gadget) in [
        (
            "series-parallel",
            build_partition_sp_gadget(&instance).expect("even total"),
        ),
        (
            "forest",
            build_partition_forest_gadget(&instance).expect("even total"),
        ),
    ] {
        let profile = certificate_to_profile(&gadget, &certificate).expect("valid certificate");
        let verdict = is_nash(&gadget.game, &profile).expect("valid profile");
        assert_eq!(verdict, NashVerdict::Equilibrium);
        let utilities = simulate(&gadget.game, &profile)
            .expect("valid profile")
            .utilities;
        println!(
            "{name} gadget: {} vertices, {} players, utilities {utilities:?}",
            gadget.game.graph.vertex_count(),
            gadget.game.players(),
        );
        let back = profile_to_certificate(&gadget, &profile).expect("standard equilibrium");
        assert_eq!(back, certificate);
        println!("{name} gadget: certificate round-trips");
    }

    // Independent Set on the 4-cycle: {0, 2} is independent.
    let square = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).expect("cycle");
    let gadget = build_is_gadget(&square, 2).expect("nonempty graph");
    println!(
        "independent-set gadget: {} vertices ({} hub leaves), {} players",
        gadget.game.graph.vertex_count(),
        gadget.lambda.expect("is gadgets carry lambda"),
        gadget.game.players(),
    );
    let certificate = Certificate::IndependentSet([0, 2].into());
    let profile = certificate_to_profile(&gadget, &certificate).expect("independent");
    assert_eq!(
        is_nash(&gadget.game, &profile).expect("valid profile"),
        NashVerdict::Equilibrium
    );
    let back = profile_to_certificate(&gadget, &profile).expect("standard equilibrium");
    assert_eq!(back, certificate);
    println!("independent-set gadget: certificate round-trips");
}
