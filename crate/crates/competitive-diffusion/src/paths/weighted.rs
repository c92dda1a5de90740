//! Pseudo-polynomial dynamic program deciding which player counts a weighted
//! path admits with given boundaries.
//!
//! States are feasible sets `(kappa, (x, a), (y, b))`: `x` is the rightmost
//! seeded vertex (1-based; `a` players there), `y` the second rightmost
//! (`b` players; `y = 0` is the dummy "none"). A table cell is true when the
//! path admits a Nash sub-equilibrium with that shape: the rightmost group's
//! utility is unconstrained, every other player earns at least the utility
//! floor, cannot improve by any move up to `x`, and an extra player seeding
//! at or left of `x` earns at most the extra cap. Cells extend by appending
//! a new rightmost group and checking the four local transition conditions;
//! closed-form segment utilities make each check O(n).
//!
//! The decider is generalized to a boundary pair `(lo, hi)`: it reports the
//! counts admitting a Nash profile with `nu <= lo` and `mu >= hi` (the
//! classical single boundary is `lo == hi == t`). The forest solver needs the
//! split form to compose paths whose own extra potential exceeds their own
//! utility floor, which happens with negative weights.

use super::segment::{deviation_utility, extra_utility, member_utility, prefix_sums};

/// What matters for territory arithmetic is one, two, or at-least-three
/// players on a vertex.
#[inline]
fn class(count: usize) -> usize {
    count.min(3)
}

#[derive(Clone, Copy, Default)]
struct FinNums {
    /// Maximum utility of an extra player seeding in `[x..n]`.
    extra_right: i64,
    /// Utility of a player in the rightmost group.
    top_utility: i64,
    /// No rightmost-group player improves by moving to `[y+1..n]`.
    dev_ok: bool,
}

/// Per-path precomputation: every transition/finalization quantity of the DP
/// depends only on positions and count classes, not on the boundary or on
/// kappa, so boundary sweeps reuse one analysis.
pub struct PathAnalysis {
    n: usize,
    total: i64,
    total_positive: i64,
    /// Max extra-player utility in `[1..x]` against a lone group at `x`.
    init_extra: Vec<i64>,
    fin_init: Vec<FinNums>,
    /// Max extra-player utility in `[y..x]` against groups at `y` and `x`.
    window_extra: Vec<i64>,
    fin_pair: Vec<FinNums>,
    /// Utility of a `y`-group player given groups at `z` (0 = none), `y`, `x`.
    mid_utility: Vec<i64>,
    /// No `y`-group player improves by moving to `[max(z,1)..x]`.
    mid_dev_ok: Vec<bool>,
}

impl PathAnalysis {
    fn init_idx(&self, x: usize, ca: usize) -> usize {
        x * 4 + ca
    }

    fn pair_idx(&self, x: usize, ca: usize, y: usize, cb: usize) -> usize {
        ((x * (self.n + 1) + y) * 4 + ca) * 4 + cb
    }

    fn pred_idx(&self, pair: usize, z: usize, cc: usize) -> usize {
        (pair * (self.n + 1) + z) * 4 + cc
    }

    pub fn new(weights: &[i64]) -> Self {
        let n = weights.len();
        let prefix = prefix_sums(weights);
        let total = prefix[n];
        let mut analysis = PathAnalysis {
            n,
            total,
            total_positive: weights.iter().filter(|&&w| w > 0).sum(),
            init_extra: vec![0; (n + 1) * 4],
            fin_init: vec![FinNums::default(); (n + 1) * 4],
            window_extra: vec![0; (n + 1) * (n + 1) * 16],
            fin_pair: vec![FinNums::default(); (n + 1) * (n + 1) * 16],
            mid_utility: vec![0; (n + 1) * (n + 1) * 16 * (n + 1) * 4],
            mid_dev_ok: vec![false; (n + 1) * (n + 1) * 16 * (n + 1) * 4],
        };

        for x in 1..=n {
            for ca in 1..=3 {
                let top = [(x - 1, ca)];
                let idx = analysis.init_idx(x, ca);
                analysis.init_extra[idx] = (1..=x)
                    .map(|v| extra_utility(&prefix, &top, v - 1))
                    .max()
                    .unwrap();
                let top_utility = member_utility(&prefix, &top, 0);
                analysis.fin_init[idx] = FinNums {
                    extra_right: (x..=n)
                        .map(|v| extra_utility(&prefix, &top, v - 1))
                        .max()
                        .unwrap(),
                    top_utility,
                    dev_ok: (1..=n)
                        .all(|v| deviation_utility(&prefix, &top, 0, v - 1) <= top_utility),
                };

                for y in 1..x {
                    for cb in 1..=3 {
                        let pair = [(y - 1, cb), (x - 1, ca)];
                        let pidx = analysis.pair_idx(x, ca, y, cb);
                        analysis.window_extra[pidx] = (y..=x)
                            .map(|v| extra_utility(&prefix, &pair, v - 1))
                            .max()
                            .unwrap();
                        let top_utility = member_utility(&prefix, &pair, 1);
                        analysis.fin_pair[pidx] = FinNums {
                            extra_right: (x..=n)
                                .map(|v| extra_utility(&prefix, &pair, v - 1))
                                .max()
                                .unwrap(),
                            top_utility,
                            dev_ok: (y + 1..=n).all(|v| {
                                deviation_utility(&prefix, &pair, 1, v - 1) <= top_utility
                            }),
                        };

                        // Predecessor with no third group.
                        let mid = member_utility(&prefix, &pair, 0);
                        let qidx = analysis.pred_idx(pidx, 0, 0);
                        analysis.mid_utility[qidx] = mid;
                        analysis.mid_dev_ok[qidx] =
                            (1..=x).all(|v| deviation_utility(&prefix, &pair, 0, v - 1) <= mid);

                        for z in 1..y {
                            for cc in 1..=3 {
                                let triple = [(z - 1, cc), (y - 1, cb), (x - 1, ca)];
                                let mid = member_utility(&prefix, &triple, 1);
                                let qidx = analysis.pred_idx(pidx, z, cc);
                                analysis.mid_utility[qidx] = mid;
                                analysis.mid_dev_ok[qidx] = (z..=x)
                                    .all(|v| deviation_utility(&prefix, &triple, 1, v - 1) <= mid);
                            }
                        }
                    }
                }
            }
        }
        analysis
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn total_weight(&self) -> i64 {
        self.total
    }

    /// Sum of positive weights: the utility upper bound for this path.
    pub fn utility_upper_bound(&self) -> i64 {
        self.total_positive
    }

    /// Best single seed for a lone player: the seed minimizing the extra
    /// player's best haul, ties to the smallest id. A lone player floods the
    /// whole path from any seed, so every single-seed profile is Nash.
    pub fn best_single_seed(&self) -> (usize, i64) {
        (1..=self.n)
            .map(|v| {
                let idx = self.init_idx(v, 1);
                let nu = self.init_extra[idx].max(self.fin_init[idx].extra_right);
                (v - 1, nu)
            })
            .min_by_key(|&(v, nu)| (nu, v))
            .expect("paths are nonempty")
    }

    /// Counts admitting a Nash profile with `nu <= lo` and `mu >= hi`,
    /// considered up to `cap` players. Witnesses are reconstructed from the
    /// predecessor links and come back as sorted seed positions (0-based).
    ///
    /// Requires `lo <= hi`: the omitted deviation windows are covered by
    /// "escape value is at most the extra cap, which is at most the utility
    /// floor". Profiles with two or more players additionally keep every
    /// utility at least 0, because colliding onto an occupied seat always
    /// pays exactly 0.
    pub fn admissible(&self, lo: i64, hi: i64, cap: usize) -> PairAdmissibility {
        assert!(lo <= hi, "boundary pair must satisfy lo <= hi");
        let n = self.n;
        let dims = Dims::new(n, cap);
        let mut cells: Vec<Cell> = vec![Cell::default(); dims.len()];
        let multi_floor = hi.max(0);

        // All players on one vertex: the only sub-equilibrium condition is
        // the extra cap over the prefix window.
        for kappa in 1..=cap {
            for x in 1..=n {
                if self.init_extra[self.init_idx(x, class(kappa))] <= lo {
                    let cell = &mut cells[dims.idx(kappa, x, kappa, 0, 0)];
                    cell.reach = true;
                    cell.sreach = kappa >= 2;
                }
            }
        }

        for kappa in 2..=cap {
            for x in 2..=n {
                for a in 1..kappa {
                    let rest = kappa - a;
                    for y in 1..x {
                        for b in 1..=rest {
                            let pidx = self.pair_idx(x, class(a), y, class(b));
                            if self.window_extra[pidx] > lo {
                                continue;
                            }
                            let mut reach: Option<(usize, usize)> = None;
                            let mut sreach: Option<(usize, usize)> = None;
                            {
                                let eval = |z: usize, c: usize| -> (bool, bool) {
                                    let qidx = self.pred_idx(pidx, z, class(c));
                                    if self.mid_utility[qidx] < multi_floor
                                        || !self.mid_dev_ok[qidx]
                                    {
                                        return (false, false);
                                    }
                                    let pred = &cells[dims.idx(rest, y, b, z, c)];
                                    (pred.reach, pred.sreach)
                                };
                                if rest == b {
                                    let (r, s) = eval(0, 0);
                                    if r {
                                        reach = Some((0, 0));
                                    }
                                    if s {
                                        sreach = Some((0, 0));
                                    }
                                } else {
                                    'preds: for z in 1..y {
                                        for c in 1..=(rest - b) {
                                            let (r, s) = eval(z, c);
                                            if r && reach.is_none() {
                                                reach = Some((z, c));
                                            }
                                            if s && sreach.is_none() {
                                                sreach = Some((z, c));
                                            }
                                            if reach.is_some() && sreach.is_some() {
                                                break 'preds;
                                            }
                                        }
                                    }
                                }
                            }
                            let cell = &mut cells[dims.idx(kappa, x, a, y, b)];
                            if let Some((z, c)) = reach {
                                cell.reach = true;
                                cell.pred = (z as u16, c as u16);
                                if a >= 2 {
                                    // The stack sits at this level; any chain works.
                                    cell.sreach = true;
                                    cell.spred = (z as u16, c as u16);
                                    cell.schain = false;
                                } else if let Some((z, c)) = sreach {
                                    cell.sreach = true;
                                    cell.spred = (z as u16, c as u16);
                                    cell.schain = true;
                                }
                            }
                        }
                    }
                }
            }
        }

        // Finalization: a cell is a full equilibrium when the extra cap holds
        // to the right of x, the rightmost group meets the utility floor, and
        // no rightmost player escapes right of y.
        let mut result = PairAdmissibility {
            cap,
            counts: vec![None; cap + 1],
            stacked: None,
        };
        if self.total <= lo {
            result.counts[0] = Some(Vec::new());
        }
        for kappa in 1..=cap {
            let floor = if kappa == 1 { hi } else { multi_floor };
            let mut plain: Option<Vec<(usize, usize)>> = None;
            let mut stacked: Option<Vec<(usize, usize)>> = None;
            'scan: for x in 1..=n {
                for a in 1..=kappa {
                    let mut candidates: Vec<(usize, usize)> = Vec::new();
                    if a == kappa {
                        candidates.push((0, 0));
                    }
                    for y in 1..x {
                        for b in 1..=(kappa - a) {
                            candidates.push((y, b));
                        }
                    }
                    for (y, b) in candidates {
                        let cell = &cells[dims.idx(kappa, x, a, y, b)];
                        if !cell.reach {
                            continue;
                        }
                        let fin = if y == 0 {
                            &self.fin_init[self.init_idx(x, class(a))]
                        } else {
                            &self.fin_pair[self.pair_idx(x, class(a), y, class(b))]
                        };
                        if fin.extra_right > lo || fin.top_utility < floor || !fin.dev_ok {
                            continue;
                        }
                        if plain.is_none() {
                            plain = Some(reconstruct(&cells, &dims, (kappa, x, a, y, b), false));
                        }
                        if cell.sreach && stacked.is_none() {
                            stacked = Some(reconstruct(&cells, &dims, (kappa, x, a, y, b), true));
                        }
                        if stacked.is_some() {
                            break 'scan;
                        }
                    }
                }
            }
            if let Some(clusters) = plain {
                result.counts[kappa] = Some(expand(&clusters));
            }
            if result.stacked.is_none() {
                if let Some(clusters) = stacked {
                    result.stacked = Some((kappa, clusters));
                }
            }
        }
        result
    }
}

struct Dims {
    n: usize,
    cap: usize,
}

impl Dims {
    fn new(n: usize, cap: usize) -> Self {
        Dims { n, cap }
    }

    fn len(&self) -> usize {
        (self.cap + 1) * (self.n + 1) * (self.cap + 1) * (self.n + 1) * (self.cap + 1)
    }

    #[inline]
    fn idx(&self, kappa: usize, x: usize, a: usize, y: usize, b: usize) -> usize {
        (((kappa * (self.n + 1) + x) * (self.cap + 1) + a) * (self.n + 1) + y) * (self.cap + 1) + b
    }
}

#[derive(Clone, Copy, Default)]
struct Cell {
    reach: bool,
    pred: (u16, u16),
    /// Reachable through a chain containing a group of two or more players.
    sreach: bool,
    spred: (u16, u16),
    /// Whether the stacked chain continues inside the predecessor.
    schain: bool,
}

fn reconstruct(
    cells: &[Cell],
    dims: &Dims,
    state: (usize, usize, usize, usize, usize),
    want_stacked: bool,
) -> Vec<(usize, usize)> {
    let mut clusters = Vec::new();
    let (mut kappa, mut x, mut a, mut y, mut b) = state;
    let mut stacked = want_stacked;
    loop {
        clusters.push((x - 1, a));
        if y == 0 {
            break;
        }
        let cell = &cells[dims.idx(kappa, x, a, y, b)];
        let (z, c) = if stacked && a < 2 {
            debug_assert!(cell.sreach);
            stacked = cell.schain;
            (cell.spred.0 as usize, cell.spred.1 as usize)
        } else {
            stacked = false;
            (cell.pred.0 as usize, cell.pred.1 as usize)
        };
        kappa -= a;
        x = y;
        a = b;
        y = z;
        b = c;
    }
    clusters.reverse();
    clusters
}

fn expand(clusters: &[(usize, usize)]) -> Vec<usize> {
    let mut seeds = Vec::new();
    for &(pos, count) in clusters {
        seeds.extend(std::iter::repeat_n(pos, count));
    }
    seeds
}

/// Admissible counts for one boundary pair, with witness profiles.
pub struct PairAdmissibility {
    cap: usize,
    counts: Vec<Option<Vec<usize>>>,
    /// Smallest count whose witness stacks two or more players somewhere,
    /// kept as clusters so surplus players can be piled on the stack.
    stacked: Option<(usize, Vec<(usize, usize)>)>,
}

impl PairAdmissibility {
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn contains(&self, kappa: usize) -> bool {
        kappa <= self.cap && self.counts[kappa].is_some()
    }

    pub fn counts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.cap).filter(|&k| self.counts[k].is_some())
    }

    pub fn witness(&self, kappa: usize) -> Option<&[usize]> {
        self.counts.get(kappa)?.as_deref()
    }

    /// Smallest admissible count with a stacked witness. Any larger count is
    /// admissible under a non-positive utility floor and non-positive extra
    /// cap by piling the surplus on the stack.
    pub fn stacked_base(&self) -> Option<usize> {
        self.stacked.as_ref().map(|(k, _)| *k)
    }

    /// Witness for `kappa` players built by piling `kappa - base` extras on
    /// the stacked base witness.
    pub fn stacked_witness(&self, kappa: usize) -> Option<Vec<usize>> {
        let (base, clusters) = self.stacked.as_ref()?;
        if kappa < *base {
            return None;
        }
        let mut clusters = clusters.clone();
        let target = clusters
            .iter_mut()
            .find(|(_, c)| *c >= 2)
            .expect("stacked witness has a stack");
        target.1 += kappa - *base;
        Some(expand(&clusters))
    }
}

// ---------------------------------------------------------------------------
// Decoupled boundaries
// ---------------------------------------------------------------------------

const LEFT_NONE: i64 = i64::MIN / 4;
const FLOOR_NONE: i64 = i64::MAX / 4;

/// One Pareto-optimal realization of a sub-profile shape.
///
/// `left_extra` is the exact best haul of an extra player anywhere up to the
/// second-rightmost seeded vertex (smaller is better: later groups must beat
/// it). `floor_below` is the minimum utility among all groups strictly below
/// the top (larger is better: later windows must stay under it, because a
/// player two or more groups away reaches a window's value exactly). The two
/// objectives conflict, so cells keep an antichain.
#[derive(Clone, Copy)]
struct PivotEntry {
    left_extra: i64,
    floor_below: i64,
    pred: (u16, u16),
    pred_entry: u16,
}

fn pareto_push(entries: &mut Vec<PivotEntry>, candidate: PivotEntry) {
    if entries
        .iter()
        .any(|e| e.left_extra <= candidate.left_extra && e.floor_below >= candidate.floor_below)
    {
        return;
    }
    entries.retain(|e| {
        !(candidate.left_extra <= e.left_extra && candidate.floor_below >= e.floor_below)
    });
    entries.push(candidate);
}

/// Exact per-count admissibility for profiles of **two or more** players
/// under decoupled boundaries: the extra cap and utility floor are supplied
/// at query time and may cross (`nu_cap > mu_floor`), which the coupled
/// table cannot express. Lone players flood the whole path and are decided
/// in closed form by the caller.
///
/// A profile of two or more players is a Nash equilibrium iff every group's
/// two adjacent windows survive the exact local deviation checks, every
/// utility is nonnegative (colliding pays 0), and every window's extra value
/// is at most the utility of every non-adjacent group: a deviation into a
/// window from farther away earns exactly the extra value there. The last
/// family is tracked by `left_extra` (windows below constrain groups above)
/// and `floor_below` (groups below constrain windows above).
pub struct PivotAnalysis {
    dims: Dims,
    cells: Vec<Vec<PivotEntry>>,
}

impl PathAnalysis {
    /// Window extras up to `y` given the two nearest groups `(z, c)`,
    /// `(y, b)`; `z = 0` means no group below `y`.
    fn below_window(&self, y: usize, cb: usize, z: usize, cc: usize) -> i64 {
        if z == 0 {
            self.init_extra[self.init_idx(y, cb)]
        } else {
            self.window_extra[self.pair_idx(y, cb, z, cc)]
        }
    }

    /// Builds the threshold-free Pareto table once; queries then bind the
    /// boundaries.
    pub fn pivot_analysis(&self, cap: usize) -> PivotAnalysis {
        let n = self.n;
        let dims = Dims::new(n, cap);
        let mut cells: Vec<Vec<PivotEntry>> = vec![Vec::new(); dims.len()];

        for kappa in 1..=cap {
            for x in 1..=n {
                cells[dims.idx(kappa, x, kappa, 0, 0)].push(PivotEntry {
                    left_extra: LEFT_NONE,
                    floor_below: FLOOR_NONE,
                    pred: (0, 0),
                    pred_entry: 0,
                });
            }
        }

        for kappa in 2..=cap {
            for x in 2..=n {
                for a in 1..kappa {
                    let rest = kappa - a;
                    for y in 1..x {
                        for b in 1..=rest {
                            let pidx = self.pair_idx(x, class(a), y, class(b));
                            let new_window = self.window_extra[pidx];
                            let mut fresh: Vec<PivotEntry> = Vec::new();
                            let mut consider = |z: usize, c: usize, cells: &[Vec<PivotEntry>]| {
                                let qidx = self.pred_idx(pidx, z, class(c));
                                let u_y = self.mid_utility[qidx];
                                // Structural necessity with >= 2 players:
                                // colliding always pays 0.
                                if u_y < 0 || !self.mid_dev_ok[qidx] {
                                    return;
                                }
                                let below = self.below_window(y, class(b), z, class(c));
                                let preds = &cells[dims.idx(rest, y, b, z, c)];
                                for (index, pred) in preds.iter().enumerate() {
                                    if pred.left_extra > u_y || new_window > pred.floor_below {
                                        continue;
                                    }
                                    pareto_push(
                                        &mut fresh,
                                        PivotEntry {
                                            left_extra: pred.left_extra.max(below),
                                            floor_below: pred.floor_below.min(u_y),
                                            pred: (z as u16, c as u16),
                                            pred_entry: index as u16,
                                        },
                                    );
                                }
                            };
                            if rest == b {
                                consider(0, 0, &cells);
                            } else {
                                for z in 1..y {
                                    for c in 1..=(rest - b) {
                                        consider(z, c, &cells);
                                    }
                                }
                            }
                            cells[dims.idx(kappa, x, a, y, b)] = fresh;
                        }
                    }
                }
            }
        }
        PivotAnalysis { dims, cells }
    }

    /// Counts of two or more players admitting a Nash profile with
    /// `nu <= nu_cap` and `mu >= mu_floor`, with witnesses, up to the
    /// table's cap.
    pub fn pivot_admissible(
        &self,
        pivot: &PivotAnalysis,
        nu_cap: i64,
        mu_floor: i64,
    ) -> Vec<Option<Vec<usize>>> {
        let n = self.n;
        let dims = &pivot.dims;
        let cap = dims.cap;
        let floor = mu_floor.max(0);
        let scan = |kappa: usize| -> Option<Vec<usize>> {
            for x in 1..=n {
                for a in 1..=kappa {
                    let mut candidates: Vec<(usize, usize)> = Vec::new();
                    if a == kappa {
                        candidates.push((0, 0));
                    }
                    for y in 1..x {
                        for b in 1..=(kappa - a) {
                            candidates.push((y, b));
                        }
                    }
                    for (y, b) in candidates {
                        let (fin, nu_inner) = if y == 0 {
                            let idx = self.init_idx(x, class(a));
                            (&self.fin_init[idx], self.init_extra[idx])
                        } else {
                            let idx = self.pair_idx(x, class(a), y, class(b));
                            (&self.fin_pair[idx], self.window_extra[idx])
                        };
                        if fin.top_utility < floor || !fin.dev_ok {
                            continue;
                        }
                        let entries = &pivot.cells[dims.idx(kappa, x, a, y, b)];
                        for (index, entry) in entries.iter().enumerate() {
                            if entry.left_extra > fin.top_utility
                                || fin.extra_right > entry.floor_below
                                || entry.floor_below < mu_floor
                            {
                                continue;
                            }
                            let nu = entry.left_extra.max(nu_inner).max(fin.extra_right);
                            if nu > nu_cap {
                                continue;
                            }
                            let clusters = reconstruct_pivot(pivot, (kappa, x, a, y, b), index);
                            return Some(expand(&clusters));
                        }
                    }
                }
            }
            None
        };
        (0..=cap)
            .map(|kappa| if kappa < 2 { None } else { scan(kappa) })
            .collect()
    }
}

fn reconstruct_pivot(
    pivot: &PivotAnalysis,
    state: (usize, usize, usize, usize, usize),
    entry_index: usize,
) -> Vec<(usize, usize)> {
    let mut clusters = Vec::new();
    let (mut kappa, mut x, mut a, mut y, mut b) = state;
    let mut index = entry_index;
    loop {
        clusters.push((x - 1, a));
        if y == 0 {
            break;
        }
        let entry = pivot.cells[pivot.dims.idx(kappa, x, a, y, b)][index];
        let (z, c) = (entry.pred.0 as usize, entry.pred.1 as usize);
        index = entry.pred_entry as usize;
        kappa -= a;
        x = y;
        a = b;
        y = z;
        b = c;
    }
    clusters.reverse();
    clusters
}

/// The set `K` of player counts a weighted path admits with boundary `t`,
/// considered up to `2n` players.
pub fn admissible_counts_weighted(weights: &[i64], t: i64) -> Vec<usize> {
    assert!(t >= 0, "boundary must be nonnegative");
    let analysis = PathAnalysis::new(weights);
    analysis
        .admissible(t, t, 2 * weights.len())
        .counts()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_weight_seven_boundary_seven() {
        // One player takes exactly 7; zero players leave potential 7 <= t.
        assert_eq!(admissible_counts_weighted(&[7], 7), vec![0, 1]);
        assert_eq!(admissible_counts_weighted(&[7], 6), vec![1]);
    }

    #[test]
    fn unit_path_five_boundary_two() {
        assert_eq!(admissible_counts_weighted(&[1, 1, 1, 1, 1], 2), vec![1, 2]);
    }

    #[test]
    fn witness_profiles_are_reconstructed() {
        let analysis = PathAnalysis::new(&[1, 1, 1, 1, 1]);
        let adm = analysis.admissible(2, 2, 10);
        let w1 = adm.witness(1).expect("kappa = 1 admissible");
        let w2 = adm.witness(2).expect("kappa = 2 admissible");
        assert_eq!(w1.len(), 1);
        assert_eq!(w2.len(), 2);
    }

    #[test]
    fn spiked_path_boundary_three() {
        // Exhaustive enumeration (see the oracle tests) gives K = {1, 2} for
        // the path (3, -1, 3) at t = 3.
        assert_eq!(admissible_counts_weighted(&[3, -1, 3], 3), vec![1, 2]);
    }

    #[test]
    fn stacked_extension_reports_a_base() {
        // All-zero path: two players stacked anywhere form an equilibrium
        // with nu = mu = 0, so a stacked base exists at lo = hi = 0.
        let analysis = PathAnalysis::new(&[0, 0]);
        let adm = analysis.admissible(0, 0, 4);
        let base = adm.stacked_base().expect("stacked witness exists");
        let witness = adm.stacked_witness(base + 3).unwrap();
        assert_eq!(witness.len(), base + 3);
    }
}
