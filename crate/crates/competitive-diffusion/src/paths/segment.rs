//! Closed-form diffusion utilities on a single path.
//!
//! Seeds are grouped into clusters `(position, count)` sorted by position.
//! A cluster with two or more players is a neutral seed: it blocks
//! propagation and its members earn nothing. A solo seed fights its nearest
//! occupied neighbors; between two solo seeds the gap splits at the midpoint
//! (the exact middle vertex, if any, turns neutral). These formulas are
//! validated against the simulation engine in the test suite.

/// Prefix sums of the path weights: `prefix[i]` is the sum of `w[0..i]`.
pub(crate) fn prefix_sums(weights: &[i64]) -> Vec<i64> {
    let mut prefix = Vec::with_capacity(weights.len() + 1);
    prefix.push(0);
    for &w in weights {
        prefix.push(prefix.last().unwrap() + w);
    }
    prefix
}

#[inline]
fn range_sum(prefix: &[i64], lo: usize, hi: usize) -> i64 {
    // Sum of w[lo..hi]; empty when lo >= hi.
    if lo >= hi {
        0
    } else {
        prefix[hi] - prefix[lo]
    }
}

/// Utility of a solo player at `pos` (0-based) whose nearest occupied
/// positions are `left` and `right` (with their player counts).
fn solo_utility(
    prefix: &[i64],
    pos: usize,
    left: Option<(usize, usize)>,
    right: Option<(usize, usize)>,
) -> i64 {
    let n = prefix.len() - 1;
    let own = range_sum(prefix, pos, pos + 1);
    let left_share = match left {
        None => range_sum(prefix, 0, pos),
        Some((q, cq)) => {
            if cq >= 2 {
                // Neutral blocker: everything strictly between is ours.
                range_sum(prefix, q + 1, pos)
            } else {
                // Split with the solo opponent; midpoint (if integral) is neutral.
                range_sum(prefix, (pos + q) / 2 + 1, pos)
            }
        }
    };
    let right_share = match right {
        None => range_sum(prefix, pos + 1, n),
        Some((r, cr)) => {
            if cr >= 2 {
                range_sum(prefix, pos + 1, r)
            } else {
                range_sum(prefix, pos + 1, (pos + r - 1) / 2 + 1)
            }
        }
    };
    own + left_share + right_share
}

/// Utility of one player in `clusters[idx]`. Clusters must be sorted by
/// position with counts >= 1.
pub(crate) fn member_utility(prefix: &[i64], clusters: &[(usize, usize)], idx: usize) -> i64 {
    let (pos, count) = clusters[idx];
    if count >= 2 {
        return 0;
    }
    let left = idx.checked_sub(1).map(|i| clusters[i]);
    let right = clusters.get(idx + 1).copied();
    solo_utility(prefix, pos, left, right)
}

/// Utility an extra player would earn by seeding at `pos` under `clusters`.
/// Seeding on an occupied position collides and earns zero.
pub(crate) fn extra_utility(prefix: &[i64], clusters: &[(usize, usize)], pos: usize) -> i64 {
    let insert = clusters.partition_point(|&(p, _)| p < pos);
    if clusters.get(insert).is_some_and(|&(p, _)| p == pos) {
        return 0;
    }
    let left = insert.checked_sub(1).map(|i| clusters[i]);
    let right = clusters.get(insert).copied();
    solo_utility(prefix, pos, left, right)
}

/// Utility of a player who leaves `clusters[from]` and reseeds at `to`.
pub(crate) fn deviation_utility(
    prefix: &[i64],
    clusters: &[(usize, usize)],
    from: usize,
    to: usize,
) -> i64 {
    debug_assert!(
        clusters.len() <= 3,
        "DP deviations involve at most 3 clusters"
    );
    let mut rest = [(0usize, 0usize); 3];
    let mut len = 0;
    for (i, &(p, c)) in clusters.iter().enumerate() {
        let c = if i == from { c - 1 } else { c };
        if c > 0 {
            rest[len] = (p, c);
            len += 1;
        }
    }
    extra_utility(prefix, &rest[..len], to)
}
