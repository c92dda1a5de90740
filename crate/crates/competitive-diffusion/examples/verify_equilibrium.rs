//! Check profiles for the Nash property and compute best responses.
//!
//! Run with: `cargo run --example verify_equilibrium`

use competitive_diffusion::engine::{best_response, is_nash, NashVerdict, StrategyProfile};
use competitive_diffusion::graph::{GameInstance, WeightedGraph};

fn main() {
    let game = GameInstance::new(WeightedGraph::path(vec![1; 7]), 2).expect("two players");

    // Both endpoints: player 0 profits by cutting inward.
    let endpoints = StrategyProfile::new(vec![0, 6]);
    match is_nash(&game, &endpoints).expect("valid profile") {
        NashVerdict::Counterexample(dev) => println!(
            "(0, 6) is not an equilibrium: player {} moves to vertex {} for {} (was {})",
            dev.player, dev.vertex, dev.deviation_utility, dev.current_utility
        ),
        NashVerdict::Equilibrium => unreachable!("endpoints are improvable"),
    }

    // Against an opponent at the center, the best response hugs it.
    let against_center = StrategyProfile::new(vec![0, 3]);
    let (vertex, utility) = best_response(&game, &against_center, 0).expect("valid");
    println!("best response to an opponent at 3: vertex {vertex} paying {utility}");
    assert_eq!((vertex, utility), (2, 3));

    // The adjacent pair at the middle is an equilibrium.
    let split = StrategyProfile::new(vec![2, 3]);
    assert_eq!(
        is_nash(&game, &split).expect("valid profile"),
        NashVerdict::Equilibrium
    );
    println!("(2, 3) is an equilibrium");
}
