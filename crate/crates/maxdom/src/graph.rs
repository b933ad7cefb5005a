//! Graph representation, domination semantics, and the exhaustive oracle that
//! anchors the correctness of every other solver in this crate.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Simple undirected graph over nodes `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, out-of-range
    /// endpoints and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at node {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge at node {u}")));
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted edge list with `u < v`, suitable for serialization.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Sorted, duplicate-free set of node indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeSet {
    members: Vec<usize>,
}

impl NodeSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        NodeSet { members }
    }

    pub fn empty() -> Self {
        NodeSet {
            members: Vec::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// All members must index into `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        match self.members.iter().find(|&&v| v >= g.node_count()) {
            Some(&v) => Err(Error::invalid(format!(
                "node {v} out of range for n={}",
                g.node_count()
            ))),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        NodeSet::new(iter.into_iter().collect())
    }
}

/// Outcome of a dominating k-set or partial domination query.
///
/// For k-set queries `k` is the requested size; for partial domination `k`
/// holds the computed domination number. `per_k`, when present, lists the best
/// dominated-neighborhood size for every set size `0..=k` and is
/// non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub k: usize,
    pub chosen: NodeSet,
    pub nbd_size: usize,
    pub per_k: Option<Vec<usize>>,
}

/// Node cap for exhaustive enumeration. A knob rather than a constant so test
/// suites can pin a small value while exploratory runs raise it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_nodes: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_nodes: 24 }
    }
}

impl EnumBudget {
    pub fn new(max_nodes: usize) -> Self {
        EnumBudget { max_nodes }
    }
}

/// Largest node count the bitset-based oracle can represent.
pub const ORACLE_HARD_CAP: usize = 128;

/// `S` together with every node adjacent to a member of `S`.
pub fn closed_neighborhood(g: &Graph, s: &NodeSet) -> Result<NodeSet> {
    s.validate_for(g)?;
    let mut mark = vec![false; g.node_count()];
    for &v in s.members() {
        mark[v] = true;
        for &u in g.neighbors(v) {
            mark[u] = true;
        }
    }
    Ok(mark
        .iter()
        .enumerate()
        .filter_map(|(v, &m)| m.then_some(v))
        .collect())
}

/// True iff every node is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: &NodeSet) -> Result<bool> {
    Ok(closed_neighborhood(g, s)?.len() == g.node_count())
}

fn nbhd_masks(g: &Graph) -> Vec<u128> {
    (0..g.node_count())
        .map(|v| {
            let mut m = 1u128 << v;
            for &u in g.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect()
}

fn check_budget(g: &Graph, budget: EnumBudget) -> Result<()> {
    let n = g.node_count();
    if n > budget.max_nodes {
        return Err(Error::budget(format!(
            "oracle enumeration limited to {} nodes, got {n}",
            budget.max_nodes
        )));
    }
    if n > ORACLE_HARD_CAP {
        return Err(Error::budget(format!(
            "oracle bitsets limited to {ORACLE_HARD_CAP} nodes, got {n}"
        )));
    }
    Ok(())
}

/// Exhaustive maximum dominating k-set: enumerates every k-subset in
/// lexicographic order and returns the first one maximizing the dominated
/// neighborhood size. Deterministic: ties go to the lexicographically
/// smallest subset.
pub fn oracle_max_dom_k(g: &Graph, k: usize, budget: EnumBudget) -> Result<SolveResult> {
    let n = g.node_count();
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds node count {n}")));
    }
    check_budget(g, budget)?;
    if k == 0 {
        return Ok(SolveResult {
            k: 0,
            chosen: NodeSet::empty(),
            nbd_size: 0,
            per_k: None,
        });
    }
    let masks = nbhd_masks(g);
    let mut idx: Vec<usize> = (0..k).collect();
    // prefix[d] = union of the closed neighborhoods of idx[0..d]
    let mut prefix: Vec<u128> = vec![0; k + 1];
    for d in 0..k {
        prefix[d + 1] = prefix[d] | masks[idx[d]];
    }
    let mut best = prefix[k].count_ones() as usize;
    let mut best_set = idx.clone();
    loop {
        // advance to the lexicographic successor
        let mut d = k;
        loop {
            if d == 0 {
                return Ok(SolveResult {
                    k,
                    chosen: NodeSet::new(best_set),
                    nbd_size: best,
                    per_k: None,
                });
            }
            d -= 1;
            if idx[d] < n - (k - d) {
                break;
            }
        }
        idx[d] += 1;
        for p in d + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
        for p in d..k {
            prefix[p + 1] = prefix[p] | masks[idx[p]];
        }
        let size = prefix[k].count_ones() as usize;
        if size > best {
            best = size;
            best_set = idx.clone();
        }
    }
}

/// `ceil(x)` guarded against upward float noise: values a hair above an
/// integer round down to it.
pub(crate) fn ceil_tol(x: f64) -> usize {
    (x - 1e-9).ceil().max(0.0) as usize
}

/// `floor(x)` guarded against downward float noise.
pub(crate) fn floor_tol(x: f64) -> usize {
    (x + 1e-9).floor().max(0.0) as usize
}

/// Coverage target of an alpha-partial domination query: the least integer
/// `t` with `t >= alpha * n`.
pub fn partial_target(n: usize, alpha: f64) -> usize {
    ceil_tol(alpha * n as f64).min(n)
}

/// Exhaustive alpha-partial domination: the smallest set whose closed
/// neighborhood covers at least `ceil(alpha * n)` nodes. The returned `k`
/// field holds the partial domination number.
pub fn oracle_partial_dom(g: &Graph, alpha: f64, budget: EnumBudget) -> Result<SolveResult> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::invalid(format!("alpha={alpha} outside (0, 1]")));
    }
    check_budget(g, budget)?;
    let target = partial_target(g.node_count(), alpha);
    for k in 0..=g.node_count() {
        let r = oracle_max_dom_k(g, k, budget)?;
        if r.nbd_size >= target {
            return Ok(SolveResult {
                k,
                chosen: r.chosen,
                nbd_size: r.nbd_size,
                per_k: None,
            });
        }
    }
    Err(Error::contract(
        "no subset reached the coverage target; oracle inconsistency",
    ))
}

/// Number of nodes left undominated by the best set of size `gamma - r`,
/// where `gamma` is the domination number.
pub fn domination_defect(g: &Graph, r: usize, budget: EnumBudget) -> Result<usize> {
    let gamma = oracle_partial_dom(g, 1.0, budget)?.k;
    if r >= gamma {
        return Err(Error::invalid(format!(
            "r={r} must be below the domination number {gamma}"
        )));
    }
    let best = oracle_max_dom_k(g, gamma - r, budget)?;
    Ok(g.node_count() - best.nbd_size)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn ns(v: &[usize]) -> NodeSet {
        NodeSet::new(v.to_vec())
    }

    #[test]
    fn closed_neighborhood_basics() {
        let p3 = path(3);
        assert_eq!(
            closed_neighborhood(&p3, &ns(&[1])).unwrap(),
            ns(&[0, 1, 2])
        );
        assert_eq!(closed_neighborhood(&p3, &NodeSet::empty()).unwrap(), ns(&[]));
        let iso = Graph::empty(3);
        assert_eq!(closed_neighborhood(&iso, &ns(&[0, 2])).unwrap(), ns(&[0, 2]));
        assert!(closed_neighborhood(&p3, &ns(&[7])).is_err());
    }

    #[test]
    fn dominating_predicate() {
        let p3 = path(3);
        assert!(is_dominating(&p3, &ns(&[1])).unwrap());
        assert!(!is_dominating(&p3, &ns(&[0])).unwrap());
        let empty = Graph::empty(0);
        assert!(is_dominating(&empty, &NodeSet::empty()).unwrap());
    }

    #[test]
    fn oracle_on_small_graphs() {
        let p3 = path(3);
        let r = oracle_max_dom_k(&p3, 1, EnumBudget::default()).unwrap();
        assert_eq!(r.chosen, ns(&[1]));
        assert_eq!(r.nbd_size, 3);

        // choosing all nodes always dominates everything
        for n in 0..6 {
            let g = path(n);
            let r = oracle_max_dom_k(&g, n, EnumBudget::default()).unwrap();
            assert_eq!(r.nbd_size, n);
        }

        let k14 = star(4);
        let r = oracle_max_dom_k(&k14, 1, EnumBudget::default()).unwrap();
        assert_eq!(r.chosen, ns(&[0]));
        assert_eq!(r.nbd_size, 5);
    }

    #[test]
    fn oracle_rejects_bad_inputs() {
        let p3 = path(3);
        assert!(matches!(
            oracle_max_dom_k(&p3, 4, EnumBudget::default()),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            oracle_max_dom_k(&path(20), 2, EnumBudget::new(10)),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn partial_domination_examples() {
        let p3 = path(3);
        let r = oracle_partial_dom(&p3, 1.0, EnumBudget::default()).unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.chosen, ns(&[1]));

        let iso4 = Graph::empty(4);
        assert_eq!(
            oracle_partial_dom(&iso4, 0.5, EnumBudget::default())
                .unwrap()
                .k,
            2
        );

        // star on nodes 0..=4 plus one isolated node
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            oracle_partial_dom(&g, 5.0 / 6.0, EnumBudget::default())
                .unwrap()
                .k,
            1
        );
    }

    #[test]
    fn defect_examples() {
        assert_eq!(domination_defect(&path(3), 0, EnumBudget::default()).unwrap(), 0);
        // best single node of a five-path covers three nodes
        assert_eq!(domination_defect(&path(5), 1, EnumBudget::default()).unwrap(), 2);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            domination_defect(&two_triangles, 1, EnumBudget::default()).unwrap(),
            3
        );
        assert!(domination_defect(&path(3), 5, EnumBudget::default()).is_err());
    }

    #[test]
    fn oracle_is_deterministic() {
        let g = Graph::from_edges(7, &[(0, 3), (1, 3), (2, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
        let a = oracle_max_dom_k(&g, 2, EnumBudget::default()).unwrap();
        let b = oracle_max_dom_k(&g, 2, EnumBudget::default()).unwrap();
        assert_eq!(a.chosen, b.chosen);
    }

    #[test]
    fn rounding_guards() {
        assert_eq!(partial_target(6, 5.0 / 6.0), 5);
        assert_eq!(partial_target(3, 1.0 / 3.0), 1);
        assert_eq!(partial_target(4, 0.5), 2);
        assert_eq!(floor_tol(7.5), 7);
        assert_eq!(floor_tol(3.0 / 0.4), 7);
    }
}
