//! Sweep preprocessing for the interval DPs: per-interval endpoint counts for
//! proper layouts, and containment deletion plus absorbed-interval counts for
//! arbitrary layouts.

use super::{Interval, IntervalLayout};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Per-interval counting tables for a proper layout, indexed in right-endpoint
/// order.
#[derive(Debug, Clone)]
pub struct ProperTables {
    /// Number of other intervals whose right endpoint falls strictly inside
    /// this interval.
    pub ends_inside: Vec<usize>,
    /// Number of other intervals whose left endpoint falls strictly inside
    /// this interval.
    pub starts_inside: Vec<usize>,
    /// Number of other intervals starting between the previous right endpoint
    /// and this one (from minus infinity for the first interval).
    pub fresh_starts: Vec<usize>,
    /// Inclusive prefix sums of `fresh_starts`.
    pub fresh_prefix: Vec<u64>,
    /// Index of the interval with the rightmost start at or after this one's
    /// start and before its end; the interval itself when no other start
    /// falls inside. Its right endpoint is how far this interval's
    /// dominated region reaches.
    pub reach: Vec<usize>,
}

impl ProperTables {
    pub fn reach_end_rank(&self, layout: &IntervalLayout, i: usize) -> usize {
        layout.intervals()[self.reach[i]].hi_rank
    }
}

/// Computes the counting tables for a proper layout. Rejects layouts where
/// one interval contains another; those must go through [`reduce_general`].
pub fn preprocess_proper(layout: &IntervalLayout) -> Result<ProperTables> {
    if !layout.is_proper() {
        return Err(Error::invalid(
            "layout has contained intervals; use the general solver",
        ));
    }
    let ivs = layout.intervals();
    let n = ivs.len();
    // proper: both endpoint sequences are increasing in right-endpoint order
    let lo_ranks: Vec<usize> = ivs.iter().map(|iv| iv.lo_rank).collect();
    let hi_ranks: Vec<usize> = ivs.iter().map(|iv| iv.hi_rank).collect();

    let count_in = |ranks: &[usize], lo: usize, hi: usize| {
        ranks.partition_point(|&r| r <= lo)..ranks.partition_point(|&r| r < hi)
    };

    let mut ends_inside = vec![0; n];
    let mut starts_inside = vec![0; n];
    let mut fresh_starts = vec![0; n];
    let mut reach = vec![0; n];
    for i in 0..n {
        let (lo, hi) = (ivs[i].lo_rank, ivs[i].hi_rank);
        ends_inside[i] = count_in(&hi_ranks, lo, hi).len();
        starts_inside[i] = count_in(&lo_ranks, lo, hi).len();
        let window_lo = if i == 0 { None } else { Some(ivs[i - 1].hi_rank) };
        let from = match window_lo {
            Some(w) => lo_ranks.partition_point(|&r| r <= w),
            None => 0,
        };
        let to = lo_ranks.partition_point(|&r| r < hi);
        let mut z = to.saturating_sub(from);
        // the interval's own start never counts toward its window
        if (from..to).contains(&i) {
            z -= 1;
        }
        fresh_starts[i] = z;
        // rightmost start before this interval's end; own start qualifies,
        // so the set is never empty
        reach[i] = lo_ranks.partition_point(|&r| r < hi) - 1;
        debug_assert!(reach[i] >= i);
    }
    let mut fresh_prefix = vec![0u64; n];
    let mut acc = 0u64;
    for i in 0..n {
        acc += fresh_starts[i] as u64;
        fresh_prefix[i] = acc;
    }
    Ok(ProperTables {
        ends_inside,
        starts_inside,
        fresh_starts,
        fresh_prefix,
        reach,
    })
}

/// Deletion preprocessing for arbitrary layouts: intervals contained in
/// another are removed from the DP and accounted for by per-keeper absorption
/// counts.
#[derive(Debug, Clone)]
pub struct GeneralTables {
    /// Positions (in the input layout's right-endpoint order) of the kept
    /// intervals.
    pub kept_input_idx: Vec<usize>,
    /// Positions of the deleted (contained) intervals.
    pub deleted_input_idx: Vec<usize>,
    /// Deleted intervals with only their right endpoint inside kept interval
    /// `i` (kept order).
    pub end_only: Vec<usize>,
    /// Deleted intervals with only their left endpoint inside kept `i`.
    pub start_only: Vec<usize>,
    /// Deleted intervals entirely inside kept `i`.
    pub contained: Vec<usize>,
    /// `shared[min][max]`: deleted intervals intersecting both kept `min` and
    /// kept `max`.
    shared: Vec<Vec<usize>>,
}

impl GeneralTables {
    /// Total deleted intervals dominated by kept interval `i`.
    pub fn deleted_dominated(&self, i: usize) -> usize {
        self.end_only[i] + self.start_only[i] + self.contained[i]
    }

    /// Deleted intervals dominated by both kept `i` and kept `j`.
    pub fn shared_deleted(&self, i: usize, j: usize) -> usize {
        if self.shared.is_empty() {
            return 0;
        }
        self.shared[i.min(j)][i.max(j)]
    }
}

/// Splits a layout into kept and deleted intervals. An interval is deleted
/// iff it is contained in another input interval, detected by one sweep over
/// the endpoint order: when a right endpoint is processed, any still-open
/// earlier start certifies containment.
pub fn reduce_general(layout: &IntervalLayout) -> (IntervalLayout, GeneralTables) {
    let ivs = layout.intervals();
    let n = ivs.len();

    #[derive(Clone, Copy)]
    enum Ev {
        Start(usize),
        End(usize),
    }
    let mut events: Vec<(usize, Ev)> = Vec::with_capacity(2 * n);
    for (i, iv) in ivs.iter().enumerate() {
        events.push((iv.lo_rank, Ev::Start(i)));
        events.push((iv.hi_rank, Ev::End(i)));
    }
    events.sort_by_key(|e| e.0);

    let mut open: BTreeSet<usize> = BTreeSet::new();
    let mut deleted = vec![false; n];
    for (_, ev) in events {
        match ev {
            Ev::Start(i) => {
                open.insert(ivs[i].lo_rank);
            }
            Ev::End(i) => {
                if open.range(..ivs[i].lo_rank).next().is_some() {
                    deleted[i] = true;
                }
                open.remove(&ivs[i].lo_rank);
            }
        }
    }

    let kept_input_idx: Vec<usize> = (0..n).filter(|&i| !deleted[i]).collect();
    let deleted_input_idx: Vec<usize> = (0..n).filter(|&i| deleted[i]).collect();
    let kept_ivs: Vec<Interval> = kept_input_idx.iter().map(|&i| ivs[i]).collect();
    let kept = IntervalLayout::from_sorted(kept_ivs);
    debug_assert!(kept.is_proper());
    let m = kept.len();

    let mut end_only = vec![0; m];
    let mut start_only = vec![0; m];
    let mut contained = vec![0; m];
    let mut rect = vec![vec![0usize; m]; m];
    let kept_lo: Vec<usize> = kept.intervals().iter().map(|iv| iv.lo_rank).collect();
    let kept_hi: Vec<usize> = kept.intervals().iter().map(|iv| iv.hi_rank).collect();
    for &d in &deleted_input_idx {
        let u = &ivs[d];
        // keepers intersecting u form a contiguous run in kept order
        let lo_p = kept_hi.partition_point(|&h| h < u.lo_rank);
        let hi_p = kept_lo.partition_point(|&l| l < u.hi_rank);
        if lo_p >= hi_p {
            continue; // intersects no keeper (single-interval layouts only)
        }
        for p in lo_p..hi_p {
            let (kl, kh) = (kept_lo[p], kept_hi[p]);
            let start_in = kl < u.lo_rank && u.lo_rank < kh;
            let end_in = kl < u.hi_rank && u.hi_rank < kh;
            debug_assert!(start_in || end_in, "deleted interval cannot contain a keeper");
            match (start_in, end_in) {
                (true, true) => contained[p] += 1,
                (true, false) => start_only[p] += 1,
                (false, _) => end_only[p] += 1,
            }
        }
        rect[lo_p][hi_p - 1] += 1;
    }
    // shared[j][i] = deleted intervals whose keeper run covers [j, i]
    let mut shared = rect;
    for j in 0..m {
        for i in (0..m).rev() {
            let up = if j > 0 { shared[j - 1][i] } else { 0 };
            let right = if i + 1 < m { shared[j][i + 1] } else { 0 };
            let diag = if j > 0 && i + 1 < m {
                shared[j - 1][i + 1]
            } else {
                0
            };
            shared[j][i] += up + right - diag;
        }
    }

    (
        kept,
        GeneralTables {
            kept_input_idx,
            deleted_input_idx,
            end_only,
            start_only,
            contained,
            shared,
        },
    )
}
