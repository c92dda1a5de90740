//! Decide forests of paths exactly: the quadratic unweighted algorithm and
//! the pseudo-polynomial weighted one, both returning verified profiles with
//! their boundary witnesses.
//!
//! Run with: `cargo run --example solve_path_forest`

use competitive_diffusion::paths::{
    admissible_counts_weighted, admissible_range_unweighted, solve_forest_unweighted,
    solve_forest_weighted, PathForest,
};

fn main() {
    // Per-path admissible player counts at a fixed boundary.
    println!(
        "unit 5-path admits {:?} players with boundary 2",
        admissible_range_unweighted(5, 2)
            .expect("positive boundary")
            .iter()
            .collect::<Vec<_>>()
    );
    println!(
        "path (3, -1, 3) admits {:?} players with boundary 3",
        admissible_counts_weighted(&[3, -1, 3], 3)
    );

    // An unweighted forest: paths of lengths 5 and 3 with four players.
    let forest = PathForest::unit(&[5, 3]).expect("nonempty paths");
    match solve_forest_unweighted(&forest, 4).expect("unit weights") {
        Some(solution) => println!(
            "unit forest (5, 3), k=4: boundary t={}, kappas {:?}, profile {:?}",
            solution.t,
            solution.kappas,
            solution.profile.choices()
        ),
        None => println!("unit forest (5, 3), k=4: no equilibrium"),
    }

    // A signed forest where no common boundary exists but an equilibrium
    // does: the resident of the first path earns -5, and its only escape
    // routes pay -6 or collide for 0 against nobody.
    let forest = PathForest::new(vec![vec![-5], vec![-6]]).expect("nonempty paths");
    let solution = solve_forest_weighted(&forest, 1)
        .expect("solver runs")
        .expect("equilibrium exists");
    println!(
        "forest ((-5), (-6)), k=1: certificate {:?}, profile {:?}",
        solution.certificate,
        solution.profile.choices()
    );

    // Three players on a 6-path never settle.
    let forest = PathForest::unit(&[6]).expect("nonempty paths");
    assert!(solve_forest_weighted(&forest, 3)
        .expect("solver runs")
        .is_none());
    println!("unit 6-path, k=3: no equilibrium");
}
