//! Helpers shared by the integration suites.
#![allow(dead_code)]

use maxdom::graph::{closed_neighborhood, Graph, NodeSet, SolveResult};
use maxdom::reductions::Cnf2;

/// Independent subset enumerator used to double-check oracle answers through
/// the public set API instead of the oracle's bitset path.
pub fn brute_best_coverage(g: &Graph, k: usize) -> usize {
    fn rec(g: &Graph, start: usize, left: usize, acc: &mut Vec<usize>, best: &mut usize) {
        if left == 0 {
            let s = NodeSet::new(acc.clone());
            let size = closed_neighborhood(g, &s).unwrap().len();
            *best = (*best).max(size);
            return;
        }
        for v in start..=g.node_count().saturating_sub(left) {
            acc.push(v);
            rec(g, v + 1, left - 1, acc, best);
            acc.pop();
        }
    }
    let mut best = 0;
    rec(g, 0, k, &mut Vec::new(), &mut best);
    best
}

pub fn brute_sat(cnf: &Cnf2) -> bool {
    brute_max2sat(cnf) == cnf.num_clauses()
}

pub fn brute_max2sat(cnf: &Cnf2) -> usize {
    let n = cnf.num_vars();
    (0u32..1 << n)
        .map(|bits| {
            let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            cnf.satisfied_count(&assignment)
        })
        .max()
        .unwrap_or(0)
}

/// The witness must certify the claimed coverage on the given graph.
pub fn assert_certifies(g: &Graph, r: &SolveResult) {
    assert_eq!(r.chosen.len(), r.k, "witness size must equal k");
    let covered = closed_neighborhood(g, &r.chosen).unwrap();
    assert_eq!(
        covered.len(),
        r.nbd_size,
        "witness coverage must match the reported value"
    );
}
