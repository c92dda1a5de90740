//! Exhaustive equilibrium search: enumerate all equilibria of a star, then
//! hit the budget guard on purpose.
//!
//! Run with: `cargo run --example search_equilibria`

use competitive_diffusion::graph::{GameInstance, WeightedGraph};
use competitive_diffusion::search::{brute_force, SearchError, SearchMode};

fn main() {
    // K_{1,4}: center 0 with four leaves.
    let star = WeightedGraph::unweighted(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).expect("star");
    let game = GameInstance::new(star, 2).expect("two players");

    let report = brute_force(&game, SearchMode::All, None).expect("within budget");
    println!("checked {} profiles", report.profiles_checked);
    for profile in report.equilibria.as_deref().unwrap_or_default() {
        println!("equilibrium: {:?}", profile.choices());
    }
    // One player holds the center, the other any leaf.
    assert_eq!(report.equilibria.map(|e| e.len()), Some(4));

    // The guard refuses searches that would blow past the simulation budget.
    let big = GameInstance::new(WeightedGraph::unweighted(40, &[]).unwrap(), 10).unwrap();
    match brute_force(&big, SearchMode::First, Some(1_000_000)) {
        Err(SearchError::BudgetExceeded { estimated, .. }) => {
            println!("refused: would need about {estimated} simulations")
        }
        other => panic!("expected the budget guard, got {other:?}"),
    }
}
