//! Multiple-choice combination of per-path admissible counts: pick one count
//! per class so the total hits the player budget exactly.

use std::collections::BTreeSet;

/// Picks `kappa_j` in `sets[j]` with `sum kappa_j == k`, or `None`.
///
/// Reachable sums are computed per suffix; the forward pass then takes the
/// smallest feasible count for each class in turn, so the returned selection
/// is the lexicographically smallest one.
pub fn combine_counts(sets: &[BTreeSet<usize>], k: usize) -> Option<Vec<usize>> {
    let m = sets.len();
    // reachable[j][s]: some choice over classes j.. sums to s.
    let mut reachable = vec![vec![false; k + 1]; m + 1];
    reachable[m][0] = true;
    for j in (0..m).rev() {
        for s in 0..=k {
            reachable[j][s] = sets[j]
                .iter()
                .take_while(|&&kappa| kappa <= s)
                .any(|&kappa| reachable[j + 1][s - kappa]);
        }
    }
    if !reachable[0][k] {
        return None;
    }
    let mut selection = Vec::with_capacity(m);
    let mut remaining = k;
    for j in 0..m {
        let kappa = *sets[j]
            .iter()
            .find(|&&kappa| kappa <= remaining && reachable[j + 1][remaining - kappa])
            .expect("reachability guarantees a choice");
        selection.push(kappa);
        remaining -= kappa;
    }
    debug_assert_eq!(remaining, 0);
    Some(selection)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(values: &[usize]) -> BTreeSet<usize> {
        values.iter().copied().collect()
    }

    #[test]
    fn picks_the_lexicographically_smallest_selection() {
        let sets = [set(&[0, 2]), set(&[1, 3])];
        assert_eq!(combine_counts(&sets, 3), Some(vec![0, 3]));
    }

    #[test]
    fn reports_impossible_targets() {
        let sets = [set(&[1]), set(&[1])];
        assert_eq!(combine_counts(&sets, 3), None);
    }

    #[test]
    fn agrees_with_cross_product_enumeration() {
        let pools: [&[usize]; 4] = [&[0, 1, 4], &[2, 3], &[0, 5], &[1, 2, 6]];
        let sets: Vec<BTreeSet<usize>> = pools.iter().map(|p| set(p)).collect();
        for k in 0..=20 {
            let mut best: Option<Vec<usize>> = None;
            for &a in pools[0] {
                for &b in pools[1] {
                    for &c in pools[2] {
                        for &d in pools[3] {
                            if a + b + c + d == k {
                                let cand = vec![a, b, c, d];
                                if best.as_ref().is_none_or(|prev| &cand < prev) {
                                    best = Some(cand);
                                }
                            }
                        }
                    }
                }
            }
            assert_eq!(combine_counts(&sets, k), best, "k = {k}");
        }
    }
}
