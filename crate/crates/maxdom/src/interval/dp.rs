//! Maximum dominating k-set DP over interval layouts.
//!
//! Both engines fill the same three-way table indexed by (interval, set
//! size): the best coverage when the interval is chosen, when it is merely
//! dominated, and when it is untouched. The direct-scan engine evaluates
//! every predecessor; the range-tree engine answers the same maximizations
//! with range-maximum queries.

use super::preprocess::{preprocess_proper, reduce_general, GeneralTables, ProperTables};
use super::rmq::MaxTree;
use super::IntervalLayout;
use crate::error::{Error, Result};
use crate::graph::{NodeSet, SolveResult};

/// Engine selection for proper layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntervalEngine {
    /// `O(n^2 k)` predecessor scan; the reference implementation.
    DirectScan,
    /// `O(n k log n)` range-maximum-tree engine.
    #[default]
    RangeTree,
}

/// How the best chosen-set at a cell was formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    /// Single-interval base case.
    Single,
    /// Predecessor and everything it dominates end before this interval
    /// starts: the interval opens fresh territory.
    Gap(u32),
    /// Predecessor ends before this interval starts, but an interval it
    /// dominates overlaps this one.
    Reach(u32),
    /// Predecessor itself overlaps this interval.
    Chain(u32),
}

/// Where the best answer for a set size lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Chosen,
    Covered(u32),
    Free(Option<u32>),
}

struct DpState {
    m: usize,
    /// `chosen[i][l]`: best coverage over l-sets drawn from the first `i + 1`
    /// intervals that include interval `i`.
    chosen: Vec<Vec<Option<u32>>>,
    back: Vec<Vec<Option<Step>>>,
    /// Best when the last interval is dominated but not chosen, per set size.
    last_covered: Vec<Option<(u32, u32)>>,
    /// Best when the last interval is untouched, per set size.
    last_free: Vec<Option<(u32, u32)>>,
}

impl DpState {
    fn new(m: usize, k: usize) -> Self {
        DpState {
            m,
            chosen: vec![vec![None; k + 1]; m],
            back: vec![vec![None; k + 1]; m],
            last_covered: vec![None; k + 1],
            last_free: vec![None; k + 1],
        }
    }

    fn set_chosen(&mut self, i: usize, l: usize, value: u32, step: Step) {
        self.chosen[i][l] = Some(value);
        self.back[i][l] = Some(step);
    }

    /// Answer and provenance for a given set size at the final interval.
    fn answer(&self, l: usize) -> Option<(u32, Source)> {
        let mut best: Option<(u32, Source)> = None;
        let mut consider = |v: Option<(u32, Source)>| {
            if let Some((val, _)) = v {
                if best.is_none_or(|(b, _)| val > b) {
                    best = v;
                }
            }
        };
        let last = self.m - 1;
        consider(self.chosen[last][l].map(|v| (v, Source::Chosen)));
        consider(
            self.last_covered[l].map(|(v, j)| (v, Source::Covered(j))),
        );
        if l == 0 {
            consider(Some((0, Source::Free(None))));
        } else {
            consider(self.last_free[l].map(|(v, j)| (v, Source::Free(Some(j)))));
        }
        best
    }

    /// Reconstructs the chosen intervals (layout order) behind `answer(l)`.
    fn witness(&self, l: usize) -> Vec<usize> {
        let Some((_, source)) = self.answer(l) else {
            return Vec::new();
        };
        let (mut i, mut l) = match source {
            Source::Chosen => (self.m - 1, l),
            Source::Covered(j) | Source::Free(Some(j)) => (j as usize, l),
            Source::Free(None) => return Vec::new(),
        };
        let mut out = Vec::with_capacity(l);
        loop {
            out.push(i);
            match self.back[i][l].expect("answer cells have provenance") {
                Step::Single => break,
                Step::Gap(j) | Step::Reach(j) | Step::Chain(j) => {
                    i = j as usize;
                    l -= 1;
                }
            }
        }
        out.reverse();
        out
    }
}

/// Coverage of `{interval}` alone: itself plus every intersecting interval.
fn base_coverage(tabs: &ProperTables, gen: Option<&GeneralTables>, i: usize) -> usize {
    1 + tabs.starts_inside[i]
        + tabs.ends_inside[i]
        + gen.map_or(0, |g| g.deleted_dominated(i))
}

/// After all chosen-cells for size `l` exist, record the best answers where
/// the final interval is dominated-only or untouched.
fn fill_last_rows(st: &mut DpState, layout: &IntervalLayout, l: usize) {
    let ivs = layout.intervals();
    let last = st.m - 1;
    let last_lo = ivs[last].lo_rank;
    #[allow(clippy::needless_range_loop)]
    for j in 0..last {
        let Some(v) = st.chosen[j][l] else { continue };
        let slot = if ivs[j].hi_rank > last_lo {
            &mut st.last_covered[l]
        } else {
            &mut st.last_free[l]
        };
        if slot.is_none_or(|(b, _)| v > b) {
            *slot = Some((v, j as u32));
        }
    }
}

fn scan_engine(
    layout: &IntervalLayout,
    tabs: &ProperTables,
    gen: Option<&GeneralTables>,
    k: usize,
) -> DpState {
    let ivs = layout.intervals();
    let m = ivs.len();
    let mut st = DpState::new(m, k);
    for l in 1..=k {
        for i in 0..m {
            if l == 1 {
                st.set_chosen(i, 1, base_coverage(tabs, gen, i) as u32, Step::Single);
                continue;
            }
            if l > i + 1 {
                continue; // not enough intervals to the left
            }
            let lo_i = ivs[i].lo_rank;
            let absorbed = gen.map_or(0, |g| g.deleted_dominated(i));
            let mut best: Option<(u32, Step)> = None;
            #[allow(clippy::needless_range_loop)]
            for j in 0..i {
                let Some(prev) = st.chosen[j][l - 1] else { continue };
                let shared = gen.map_or(0, |g| g.shared_deleted(i, j));
                let (cand, step) = if ivs[j].hi_rank < lo_i {
                    if tabs.reach_end_rank(layout, j) < lo_i {
                        (
                            prev as usize
                                + 1
                                + tabs.starts_inside[i]
                                + tabs.ends_inside[i]
                                + absorbed
                                - shared,
                            Step::Gap(j as u32),
                        )
                    } else {
                        let lam = tabs.reach[j];
                        // the reach interval starts left of interval i, so it
                        // also ends left of it
                        debug_assert!(lam < i);
                        (
                            prev as usize + 1 + tabs.starts_inside[i] + (i - 1 - lam) + absorbed
                                - shared,
                            Step::Reach(j as u32),
                        )
                    }
                } else {
                    let fresh = (tabs.fresh_prefix[i] - tabs.fresh_prefix[j]) as usize;
                    (
                        prev as usize + fresh + absorbed - shared,
                        Step::Chain(j as u32),
                    )
                };
                if best.is_none_or(|(b, _)| cand as u32 > b) {
                    best = Some((cand as u32, step));
                }
            }
            if let Some((v, s)) = best {
                st.set_chosen(i, l, v, s);
            }
        }
        fill_last_rows(&mut st, layout, l);
    }
    st
}

/// Index structures shared by the range-tree passes: for each interval, how
/// many predecessors end before it starts, and a reach-sorted position order
/// for the query trees.
struct TreeAux {
    lo_idx: Vec<usize>,
    rb_order: Vec<usize>,
    rb_keys: Vec<usize>,
    rb_pos: Vec<usize>,
}

fn tree_aux(layout: &IntervalLayout, tabs: &ProperTables) -> TreeAux {
    let ivs = layout.intervals();
    let m = ivs.len();
    let lo_ranks: Vec<usize> = ivs.iter().map(|iv| iv.lo_rank).collect();
    let hi_ranks: Vec<usize> = ivs.iter().map(|iv| iv.hi_rank).collect();
    let lo_idx: Vec<usize> = (0..m)
        .map(|i| hi_ranks.partition_point(|&h| h < lo_ranks[i]))
        .collect();
    let mut rb_order: Vec<usize> = (0..m).collect();
    rb_order.sort_by_key(|&j| (tabs.reach_end_rank(layout, j), j));
    let rb_keys: Vec<usize> = rb_order
        .iter()
        .map(|&j| tabs.reach_end_rank(layout, j))
        .collect();
    let mut rb_pos = vec![0usize; m];
    for (pos, &j) in rb_order.iter().enumerate() {
        rb_pos[j] = pos;
    }
    TreeAux {
        lo_idx,
        rb_order,
        rb_keys,
        rb_pos,
    }
}

fn tree_engine(layout: &IntervalLayout, tabs: &ProperTables, k: usize) -> DpState {
    let ivs = layout.intervals();
    let m = ivs.len();
    let TreeAux {
        lo_idx,
        rb_order,
        rb_keys,
        rb_pos,
    } = tree_aux(layout, tabs);

    let mut st = DpState::new(m, k);
    for i in 0..m {
        if k >= 1 {
            st.set_chosen(i, 1, base_coverage(tabs, None, i) as u32, Step::Single);
        }
    }
    if k >= 1 {
        fill_last_rows(&mut st, layout, 1);
    }

    let mut pref: Vec<Option<(i64, usize)>> = vec![None; m];
    for l in 2..=k {
        // prefix maxima over reach-sorted positions of the previous column
        let mut run: Option<(i64, usize)> = None;
        for (pos, &j) in rb_order.iter().enumerate() {
            if let Some(v) = st.chosen[j][l - 1] {
                let cand = (v as i64, j);
                if run.is_none_or(|(b, bj)| cand.0 > b || (cand.0 == b && j < bj)) {
                    run = Some(cand);
                }
            }
            pref[pos] = run;
        }
        // overlap-chain values keyed by layout position
        let d3_vals: Vec<Option<(i64, usize)>> = (0..m)
            .map(|j| {
                st.chosen[j][l - 1].map(|v| (v as i64 - tabs.fresh_prefix[j] as i64, j))
            })
            .collect();
        let d3 = MaxTree::from_values(&d3_vals);
        // reach values, inserted once the predecessor ends left of the
        // current interval's start
        let mut d2 = MaxTree::new(m);
        let mut frontier = 0usize;

        for i in 0..m {
            while frontier < lo_idx[i] {
                if let Some(v) = st.chosen[frontier][l - 1] {
                    d2.set(rb_pos[frontier], (v as i64 - tabs.reach[frontier] as i64, frontier));
                }
                frontier += 1;
            }
            if l > i + 1 {
                continue;
            }
            let lo_i = ivs[i].lo_rank;
            let cut = rb_keys.partition_point(|&key| key < lo_i);
            let mut best: Option<(u32, Step)> = None;
            let consider = |cand: Option<(i64, Step)>, best: &mut Option<(u32, Step)>| {
                if let Some((v, s)) = cand {
                    debug_assert!(v >= 0);
                    if best.is_none_or(|(b, _)| v as u32 > b) {
                        *best = Some((v as u32, s));
                    }
                }
            };
            let gap = if cut > 0 { pref[cut - 1] } else { None };
            consider(
                gap.map(|(v, j)| {
                    (
                        v + (1 + tabs.starts_inside[i] + tabs.ends_inside[i]) as i64,
                        Step::Gap(j as u32),
                    )
                }),
                &mut best,
            );
            consider(
                d2.query(cut, m).map(|(v, j)| {
                    (
                        v + (tabs.starts_inside[i] + i) as i64,
                        Step::Reach(j as u32),
                    )
                }),
                &mut best,
            );
            consider(
                d3.query(lo_idx[i], i).map(|(v, j)| {
                    (v + tabs.fresh_prefix[i] as i64, Step::Chain(j as u32))
                }),
                &mut best,
            );
            if let Some((v, s)) = best {
                st.set_chosen(i, l, v, s);
            }
        }
        fill_last_rows(&mut st, layout, l);
    }
    st
}

/// Coverage values per set size at two rolling rows: `O(n)` memory, no
/// witnesses. Used to probe coverage targets before committing to a full
/// table build.
fn tree_values(layout: &IntervalLayout, tabs: &ProperTables, k: usize) -> Vec<usize> {
    let ivs = layout.intervals();
    let m = ivs.len();
    let aux = tree_aux(layout, tabs);
    let mut answers = vec![0usize; k + 1];
    let mut prev: Vec<Option<u32>> = vec![None; m];
    let mut cur: Vec<Option<u32>> = vec![None; m];
    let mut pref: Vec<Option<i64>> = vec![None; m];
    for l in 1..=k {
        if l == 1 {
            for i in 0..m {
                cur[i] = Some(base_coverage(tabs, None, i) as u32);
            }
        } else {
            let mut run: Option<i64> = None;
            for (pos, &j) in aux.rb_order.iter().enumerate() {
                if let Some(v) = prev[j] {
                    run = Some(run.map_or(v as i64, |b| b.max(v as i64)));
                }
                pref[pos] = run;
            }
            let d3_vals: Vec<Option<(i64, usize)>> = (0..m)
                .map(|j| prev[j].map(|v| (v as i64 - tabs.fresh_prefix[j] as i64, j)))
                .collect();
            let d3 = MaxTree::from_values(&d3_vals);
            let mut d2 = MaxTree::new(m);
            let mut frontier = 0usize;
            for i in 0..m {
                while frontier < aux.lo_idx[i] {
                    if let Some(v) = prev[frontier] {
                        d2.set(
                            aux.rb_pos[frontier],
                            (v as i64 - tabs.reach[frontier] as i64, frontier),
                        );
                    }
                    frontier += 1;
                }
                cur[i] = None;
                if l > i + 1 {
                    continue;
                }
                let lo_i = ivs[i].lo_rank;
                let cut = aux.rb_keys.partition_point(|&key| key < lo_i);
                let mut best: Option<i64> = None;
                let mut consider = |cand: Option<i64>| {
                    if let Some(v) = cand {
                        best = Some(best.map_or(v, |b| b.max(v)));
                    }
                };
                let gap = if cut > 0 { pref[cut - 1] } else { None };
                consider(
                    gap.map(|v| v + (1 + tabs.starts_inside[i] + tabs.ends_inside[i]) as i64),
                );
                consider(
                    d2.query(cut, m)
                        .map(|(v, _)| v + (tabs.starts_inside[i] + i) as i64),
                );
                consider(
                    d3.query(aux.lo_idx[i], i)
                        .map(|(v, _)| v + tabs.fresh_prefix[i] as i64),
                );
                cur[i] = best.map(|v| v as u32);
            }
        }
        // any l-set ends at some chosen interval, so the answer is the
        // column maximum
        answers[l] = cur.iter().flatten().copied().max().unwrap_or(0) as usize;
        std::mem::swap(&mut prev, &mut cur);
    }
    answers
}

/// Coverage table for set sizes `0..=k` on a proper layout, without witness
/// reconstruction.
pub fn unit_coverage_table(layout: &IntervalLayout, k: usize) -> Result<Vec<usize>> {
    let n = layout.len();
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds interval count {n}")));
    }
    if n == 0 {
        return Ok(vec![0; k + 1]);
    }
    let tabs = preprocess_proper(layout)?;
    Ok(tree_values(layout, &tabs, k))
}

fn results_from_state(
    st: &DpState,
    layout: &IntervalLayout,
    k: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut per_k = Vec::with_capacity(k + 1);
    for l in 0..=k {
        let (v, _) = st
            .answer(l)
            .ok_or_else(|| Error::contract(format!("no feasible {l}-set; table bug")))?;
        per_k.push(v as usize);
    }
    let witness: Vec<usize> = st
        .witness(k)
        .into_iter()
        .map(|i| layout.intervals()[i].orig)
        .collect();
    Ok((per_k, witness))
}

fn empty_result(k: usize) -> SolveResult {
    SolveResult {
        k,
        chosen: NodeSet::empty(),
        nbd_size: 0,
        per_k: Some(vec![0; k + 1]),
    }
}

/// Maximum dominating k-set for a proper (unit-like) layout.
pub fn solve_unit(layout: &IntervalLayout, k: usize, engine: IntervalEngine) -> Result<SolveResult> {
    let n = layout.len();
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds interval count {n}")));
    }
    if n == 0 {
        return Ok(empty_result(k));
    }
    let tabs = preprocess_proper(layout)?;
    let st = match engine {
        IntervalEngine::DirectScan => scan_engine(layout, &tabs, None, k),
        IntervalEngine::RangeTree => tree_engine(layout, &tabs, k),
    };
    let (per_k, witness) = results_from_state(&st, layout, k)?;
    Ok(SolveResult {
        k,
        chosen: NodeSet::new(witness),
        nbd_size: per_k[k],
        per_k: Some(per_k),
    })
}

/// Maximum dominating k-set for an arbitrary layout. Contained intervals are
/// removed before the DP; if `k` exceeds the kept count, the witness is
/// padded with deleted intervals picked greedily by marginal coverage.
pub fn solve_general(layout: &IntervalLayout, k: usize) -> Result<SolveResult> {
    let n = layout.len();
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds interval count {n}")));
    }
    if n == 0 {
        return Ok(empty_result(k));
    }
    let (kept, gt) = reduce_general(layout);
    let m = kept.len();
    let k_eff = k.min(m);
    let tabs = preprocess_proper(&kept)?;
    let st = scan_engine(&kept, &tabs, Some(&gt), k_eff);
    let (kept_per_k, witness) = results_from_state(&st, &kept, k_eff)?;

    let per_k: Vec<usize> = (0..=k)
        .map(|l| if l <= k_eff { kept_per_k[l] } else { n })
        .collect();
    if k > k_eff {
        debug_assert_eq!(kept_per_k[m], n, "all keepers dominate every interval");
    }

    let mut chosen: Vec<usize> = witness;
    if chosen.len() < k {
        // pad with deleted intervals by marginal gain, then smallest index
        let deleted_orig: Vec<usize> = gt
            .deleted_input_idx
            .iter()
            .map(|&p| layout.intervals()[p].orig)
            .collect();
        let pos_of_orig: Vec<usize> = {
            let mut v = vec![0; n];
            for (pos, iv) in layout.intervals().iter().enumerate() {
                v[iv.orig] = pos;
            }
            v
        };
        let mut covered = vec![false; n];
        for &o in &chosen {
            let p = pos_of_orig[o];
            for q in 0..n {
                if layout.intersects(p, q) {
                    covered[layout.intervals()[q].orig] = true;
                }
            }
        }
        let mut pool: Vec<usize> = deleted_orig;
        pool.sort_unstable();
        while chosen.len() < k {
            let (slot, _) = pool
                .iter()
                .enumerate()
                .filter(|(_, o)| !chosen.contains(o))
                .map(|(slot, &o)| {
                    let p = pos_of_orig[o];
                    let gain = (0..n)
                        .filter(|&q| {
                            layout.intersects(p, q) && !covered[layout.intervals()[q].orig]
                        })
                        .count();
                    (slot, gain)
                })
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .expect("deleted pool large enough to pad");
            let o = pool.remove(slot);
            let p = pos_of_orig[o];
            for q in 0..n {
                if layout.intersects(p, q) {
                    covered[layout.intervals()[q].orig] = true;
                }
            }
            chosen.push(o);
        }
    }
    Ok(SolveResult {
        k,
        chosen: NodeSet::new(chosen),
        nbd_size: per_k[k],
        per_k: Some(per_k),
    })
}

/// Routes to the range-tree engine for proper layouts and the general solver
/// otherwise.
pub fn solve_auto(layout: &IntervalLayout, k: usize) -> Result<SolveResult> {
    if layout.is_proper() {
        solve_unit(layout, k, IntervalEngine::RangeTree)
    } else {
        solve_general(layout, k)
    }
}
