//! Simulate the diffusion process round by round on a small graph.
//!
//! Three players seed a lollipop-shaped graph; the contested cut vertex
//! turns neutral and blocks the two nearby players, so the far player walks
//! down the tail unopposed.
//!
//! Run with: `cargo run --example simulate_diffusion`

use competitive_diffusion::engine::{simulate, StrategyProfile, VertexFate};
use competitive_diffusion::graph::{GameInstance, WeightedGraph};

fn main() {
    // Vertices 0 and 1 meet at cut vertex 2; a tail 3-4-5-6 hangs off it.
    let graph = WeightedGraph::unweighted(7, &[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
        .expect("simple graph");
    let game = GameInstance::new(graph, 3).expect("three players");
    let profile = StrategyProfile::new(vec![0, 1, 6]);

    let outcome = simulate(&game, &profile).expect("valid profile");

    println!("seeds: {:?}", profile.choices());
    for (v, fate) in outcome.fates.iter().enumerate() {
        match fate {
            VertexFate::Dominated { player, time } => {
                println!("vertex {v}: player {player} at time {time}")
            }
            VertexFate::Neutral { time } => println!("vertex {v}: neutral at time {time}"),
            VertexFate::Undominated => println!("vertex {v}: never reached"),
        }
    }
    println!("utilities: {:?}", outcome.utilities);

    // The cut vertex is contested at time 2, so player 2 claims vertex 3 at
    // time 4 even though players 0 and 1 are nearer through the cut.
    assert_eq!(outcome.fates[2], VertexFate::Neutral { time: 2 });
    assert_eq!(
        outcome.fates[3],
        VertexFate::Dominated { player: 2, time: 4 }
    );
}
