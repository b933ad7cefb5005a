//! Interval layouts and exact maximum dominating k-set solvers for their
//! intersection graphs: an `O(nk log n)` engine for proper (unit-like)
//! layouts and an `O(n^2 k)` engine for arbitrary layouts with containment.

mod dp;
mod preprocess;
mod rmq;

pub use dp::{solve_auto, solve_general, solve_unit, unit_coverage_table, IntervalEngine};
pub use preprocess::{preprocess_proper, reduce_general, GeneralTables, ProperTables};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One closed interval after normalization. `lo_rank`/`hi_rank` place the two
/// endpoints in the strict total order over all `2n` endpoint keys.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    /// Index of this interval in the caller's original list.
    pub orig: usize,
    pub(crate) lo_rank: usize,
    pub(crate) hi_rank: usize,
}

/// Intervals sorted by right endpoint with strictly ordered symbolic endpoint
/// keys. Intersection is closed: touching intervals intersect.
#[derive(Debug, Clone)]
pub struct IntervalLayout {
    ivs: Vec<Interval>,
    unit: bool,
    proper: bool,
}

/// Sorts intervals by right endpoint and replaces raw coordinates by strict
/// symbolic ranks. Ties at a shared coordinate are broken start-before-end
/// (then by original index), which keeps touching intervals intersecting
/// under the strict order.
pub fn normalize_layout(raw: &[(f64, f64)]) -> Result<IntervalLayout> {
    for (i, &(a, b)) in raw.iter().enumerate() {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::invalid(format!("interval {i} has non-finite endpoints")));
        }
        if a >= b {
            return Err(Error::invalid(format!(
                "interval {i} has start {a} >= end {b}"
            )));
        }
    }
    // key: (coordinate, start-before-end, original index)
    let mut keys: Vec<(f64, u8, usize)> = Vec::with_capacity(2 * raw.len());
    for (i, &(a, b)) in raw.iter().enumerate() {
        keys.push((a, 0, i));
        keys.push((b, 1, i));
    }
    keys.sort_by(|x, y| {
        x.0.partial_cmp(&y.0)
            .expect("finite coordinates")
            .then(x.1.cmp(&y.1))
            .then(x.2.cmp(&y.2))
    });
    let mut lo_rank = vec![usize::MAX; raw.len()];
    let mut hi_rank = vec![usize::MAX; raw.len()];
    for (rank, &(_, kind, i)) in keys.iter().enumerate() {
        if kind == 0 {
            lo_rank[i] = rank;
        } else {
            hi_rank[i] = rank;
        }
    }
    let mut ivs: Vec<Interval> = raw
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| Interval {
            lo: a,
            hi: b,
            orig: i,
            lo_rank: lo_rank[i],
            hi_rank: hi_rank[i],
        })
        .collect();
    ivs.sort_by_key(|iv| iv.hi_rank);
    Ok(IntervalLayout::from_sorted(ivs))
}

impl IntervalLayout {
    pub(crate) fn from_sorted(ivs: Vec<Interval>) -> Self {
        let unit = match ivs.first() {
            Some(first) => {
                let len = first.hi - first.lo;
                ivs.iter().all(|iv| (iv.hi - iv.lo - len).abs() <= 1e-9)
            }
            None => true,
        };
        let proper = ivs.windows(2).all(|w| w[0].lo_rank < w[1].lo_rank);
        IntervalLayout { ivs, unit, proper }
    }

    pub fn len(&self) -> usize {
        self.ivs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ivs.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.ivs
    }

    /// All intervals have equal length (within tolerance).
    pub fn unit_flag(&self) -> bool {
        self.unit
    }

    /// No interval is contained in another; equivalently, sorting by right
    /// endpoint also sorts by left endpoint.
    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// Closed-intersection test on the symbolic endpoint order.
    pub fn intersects(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.ivs[i], &self.ivs[j]);
        a.lo_rank <= b.hi_rank && b.lo_rank <= a.hi_rank
    }

    /// Interval `j` lies strictly inside interval `i` in the symbolic order.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.ivs[i], &self.ivs[j]);
        a.lo_rank < b.lo_rank && b.hi_rank < a.hi_rank
    }

    /// Intersection graph over the caller's original indexing.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.ivs.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.intersects(i, j) {
                    let (u, v) = (self.ivs[i].orig, self.ivs[j].orig);
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("layout indices are in range")
    }
}
