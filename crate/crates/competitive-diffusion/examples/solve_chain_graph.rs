//! Recognize a threshold graph and search it with the inclusion-ordering
//! algorithm.
//!
//! Run with: `cargo run --example solve_chain_graph`

use competitive_diffusion::engine::StrategyProfile;
use competitive_diffusion::graph::WeightedGraph;
use competitive_diffusion::structured::{
    inclusion_utility, recognize_and_order, solve_chain, GraphClass,
};

fn main() {
    // A threshold graph: clique {0, 1} fully joined to the independent
    // vertices {2, 3}, with mixed weights.
    let graph =
        WeightedGraph::from_edges(vec![5, 4, 2, -1], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
            .expect("simple graph");

    let ordered = recognize_and_order(&graph, GraphClass::Threshold).expect("threshold graph");
    println!(
        "recognized: clique side {:?}, independent side {:?}",
        ordered.x_order, ordered.y_order
    );

    for k in 1..=4 {
        match solve_chain(&ordered, k).expect("engine runs") {
            Some(solution) => println!(
                "k={k}: equilibrium {:?} (tops {}, {})",
                solution.profile.choices(),
                solution.top_x,
                solution.top_y
            ),
            None => println!("k={k}: no equilibrium"),
        }
    }

    // The dominated-seed shortcut: a seed whose neighborhood is covered by
    // another solo seed keeps exactly its own weight.
    let profile = StrategyProfile::new(vec![0, 2]);
    let fast = inclusion_utility(&graph, &profile, 1).expect("vertex 2 is dominated by vertex 0");
    println!("dominated seed at vertex 2 keeps {fast}");
    assert_eq!(fast, 2);
}
