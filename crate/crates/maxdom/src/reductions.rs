//! Constructive transformations between domination problems: isolated-node
//! padding, the two drivers witnessing that maximum dominating k-set and
//! partial domination solve each other, and the 2-CNF gadget graph whose
//! domination number decides satisfiability.

use crate::error::{Error, Result};
use crate::graph::{
    closed_neighborhood, floor_tol, partial_target, Graph, NodeSet, SolveResult,
};

/// Appends isolated nodes so the original node count becomes an `alpha`
/// fraction of the new total: the padded graph has `floor(n / alpha)` nodes,
/// original indices preserved.
pub fn pad_for_partial(g: &Graph, alpha: f64, max_total: usize) -> Result<Graph> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::invalid(format!("alpha={alpha} outside (0, 1]")));
    }
    let n = g.node_count();
    if n == 0 {
        return Err(Error::invalid("cannot pad an empty graph"));
    }
    let total = floor_tol(n as f64 / alpha).max(n);
    if total > max_total {
        return Err(Error::budget(format!(
            "padding to {total} nodes exceeds cap {max_total}"
        )));
    }
    Graph::from_edges(total, &g.edges())
}

fn padding_consistent(g: &Graph, g_padded: &Graph) -> bool {
    let n = g.node_count();
    if g_padded.node_count() < n {
        return false;
    }
    (0..n).all(|u| g_padded.neighbors(u) == g.neighbors(u))
        && (n..g_padded.node_count()).all(|u| g_padded.degree(u) == 0)
}

/// Turns a partial dominating set of the padded graph back into a dominating
/// set of the original graph of no larger size: padding picks are dropped and
/// every node they "paid for" is re-covered by adding the still-undominated
/// originals directly.
pub fn recover_dominating_set(
    g: &Graph,
    g_padded: &Graph,
    s_prime: &NodeSet,
) -> Result<NodeSet> {
    let n = g.node_count();
    if !padding_consistent(g, g_padded) {
        return Err(Error::invalid(
            "padded graph does not extend the original with isolated nodes",
        ));
    }
    s_prime.validate_for(g_padded)?;
    if closed_neighborhood(g_padded, s_prime)?.len() < n {
        return Err(Error::contract(format!(
            "witness covers fewer than {n} nodes of the padded graph"
        )));
    }
    let s1: NodeSet = s_prime.members().iter().copied().filter(|&v| v < n).collect();
    let covered = closed_neighborhood(g, &s1)?;
    let mut out: Vec<usize> = s1.members().to_vec();
    out.extend((0..n).filter(|&v| !covered.contains(v)));
    Ok(NodeSet::new(out))
}

/// Extends `chosen` to exactly `k` members using the smallest unused node
/// indices.
fn pad_witness(chosen: &NodeSet, k: usize, n: usize) -> NodeSet {
    let mut out = chosen.members().to_vec();
    let mut next = 0;
    while out.len() < k {
        while chosen.contains(next) {
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    debug_assert!(out.len() == k && out.iter().all(|&v| v < n));
    NodeSet::new(out)
}

/// Solves the maximum dominating k-set problem through an exact partial
/// domination solver: queries the domination numbers for every coverage
/// target `i/n`, locates the bracket containing `k`, and pads that witness.
pub fn kset_via_partial<F>(mut partial_solver: F, g: &Graph, k: usize) -> Result<SolveResult>
where
    F: FnMut(&Graph, f64) -> Result<SolveResult>,
{
    let n = g.node_count();
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds node count {n}")));
    }
    if k == 0 || n == 0 {
        return Ok(SolveResult {
            k,
            chosen: NodeSet::empty(),
            nbd_size: 0,
            per_k: None,
        });
    }
    let mut gammas: Vec<(usize, NodeSet)> = Vec::with_capacity(n);
    for i in 1..=n {
        let r = partial_solver(g, i as f64 / n as f64)?;
        if let Some((prev, _)) = gammas.last() {
            if r.k < *prev {
                return Err(Error::contract(format!(
                    "partial solver non-monotone: gamma_{i} = {} < {prev}",
                    r.k
                )));
            }
        }
        gammas.push((r.k, r.chosen));
    }
    // largest coverage i whose domination number still fits in k
    let (value, witness) = gammas
        .iter()
        .enumerate()
        .rev()
        .find(|(_, (gamma, _))| *gamma <= k)
        .map(|(idx, (_, w))| (idx + 1, w.clone()))
        .ok_or_else(|| {
            Error::contract("even coverage target 1 needs more than k nodes".to_string())
        })?;
    Ok(SolveResult {
        k,
        chosen: pad_witness(&witness, k, n),
        nbd_size: value,
        per_k: None,
    })
}

/// Solves partial domination through an exact maximum dominating k-set
/// solver: grows `k` until the best k-set covers the target.
pub fn partial_via_kset<F>(mut kset_solver: F, g: &Graph, alpha: f64) -> Result<SolveResult>
where
    F: FnMut(&Graph, usize) -> Result<SolveResult>,
{
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::invalid(format!("alpha={alpha} outside (0, 1]")));
    }
    let n = g.node_count();
    let target = partial_target(n, alpha);
    for k in 0..=n {
        let r = kset_solver(g, k)?;
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
        "k-set solver never reached the coverage target".to_string(),
    ))
}

/// One literal of a 2-CNF clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// A 2-CNF formula: a conjunction of two-literal clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf2 {
    num_vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl Cnf2 {
    pub fn new(num_vars: usize, clauses: Vec<(Lit, Lit)>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::invalid("formula needs at least one variable"));
        }
        if clauses.is_empty() {
            return Err(Error::invalid("formula needs at least one clause"));
        }
        for (i, (a, b)) in clauses.iter().enumerate() {
            if a.var >= num_vars || b.var >= num_vars {
                return Err(Error::invalid(format!(
                    "clause {i} references a variable beyond {num_vars}"
                )));
            }
        }
        Ok(Cnf2 { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|(a, b)| a.eval(assignment) || b.eval(assignment))
            .count()
    }
}

/// Role of a node in the clause gadget graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcRole {
    /// Positive literal node of variable `i`.
    PosLiteral(usize),
    /// Negated literal node of variable `i`.
    NegLiteral(usize),
    /// Clause node `j`.
    Clause(usize),
    /// Guard node forcing a literal pick for variable `var`; `slot < 2m`.
    Guard { var: usize, slot: usize },
    /// The single apex node adjacent to the first variable's literals and all
    /// clause nodes.
    Apex,
}

/// The gadget graph built from a 2-CNF. Node order: literal pairs
/// `(x_0, !x_0, x_1, !x_1, ...)`, then clause nodes, then guards grouped by
/// variable, apex last.
#[derive(Debug, Clone)]
pub struct GcGraph {
    pub graph: Graph,
    pub roles: Vec<GcRole>,
    num_vars: usize,
    num_clauses: usize,
}

impl GcGraph {
    pub fn pos_node(&self, var: usize) -> usize {
        2 * var
    }

    pub fn neg_node(&self, var: usize) -> usize {
        2 * var + 1
    }

    pub fn lit_node(&self, lit: Lit) -> usize {
        if lit.positive {
            self.pos_node(lit.var)
        } else {
            self.neg_node(lit.var)
        }
    }

    pub fn clause_node(&self, j: usize) -> usize {
        2 * self.num_vars + j
    }

    pub fn guard_node(&self, var: usize, slot: usize) -> usize {
        2 * self.num_vars + self.num_clauses + var * 2 * self.num_clauses + slot
    }

    pub fn apex_node(&self) -> usize {
        self.graph.node_count() - 1
    }

    /// Offset subtracted from the best n-set coverage to read off the number
    /// of satisfiable clauses: literals, guards and apex are always covered.
    pub fn readout_offset(&self) -> usize {
        2 * self.num_vars + 2 * self.num_clauses * self.num_vars + 1
    }
}

/// Builds the gadget graph: one node per literal, clause and guard plus an
/// apex; each variable gets `2m` guards adjacent to exactly its two literals,
/// each clause node is adjacent to its literals and the apex, and the apex is
/// also adjacent to the first variable's literals. Parallel edges from
/// repeated literals collapse.
pub fn build_gc(cnf: &Cnf2) -> GcGraph {
    let n = cnf.num_vars();
    let m = cnf.num_clauses();
    let total = 2 * n + m + 2 * m * n + 1;

    let mut roles = Vec::with_capacity(total);
    for i in 0..n {
        roles.push(GcRole::PosLiteral(i));
        roles.push(GcRole::NegLiteral(i));
    }
    for j in 0..m {
        roles.push(GcRole::Clause(j));
    }
    for var in 0..n {
        for slot in 0..2 * m {
            roles.push(GcRole::Guard { var, slot });
        }
    }
    roles.push(GcRole::Apex);

    let gc = GcGraph {
        graph: Graph::empty(total),
        roles: Vec::new(),
        num_vars: n,
        num_clauses: m,
    };

    let mut edges = std::collections::BTreeSet::new();
    let mut add = |u: usize, v: usize| {
        edges.insert((u.min(v), u.max(v)));
    };
    let apex = total - 1;
    for i in 0..n {
        add(gc.pos_node(i), gc.neg_node(i));
        for slot in 0..2 * m {
            add(gc.pos_node(i), gc.guard_node(i, slot));
            add(gc.neg_node(i), gc.guard_node(i, slot));
        }
    }
    add(gc.pos_node(0), apex);
    add(gc.neg_node(0), apex);
    for (j, (a, b)) in cnf.clauses().iter().enumerate() {
        add(gc.clause_node(j), gc.lit_node(*a));
        add(gc.clause_node(j), gc.lit_node(*b));
        add(gc.clause_node(j), apex);
    }

    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    let graph = Graph::from_edges(total, &edge_list).expect("gadget edges are well-formed");
    GcGraph {
        graph,
        roles,
        num_vars: n,
        num_clauses: m,
    }
}

/// Decides satisfiability of a 2-CNF by checking whether the gadget graph's
/// domination number is `n` (satisfiable) or `n + 1` (not). The supplied
/// solver must answer maximum dominating k-set queries exactly.
pub fn gc_sat_decision<F>(cnf: &Cnf2, mut kset_solver: F) -> Result<bool>
where
    F: FnMut(&Graph, usize) -> Result<SolveResult>,
{
    let gc = build_gc(cnf);
    let total = gc.graph.node_count();
    let n = cnf.num_vars();
    if kset_solver(&gc.graph, n)?.nbd_size == total {
        return Ok(true);
    }
    if kset_solver(&gc.graph, n + 1)?.nbd_size == total {
        return Ok(false);
    }
    Err(Error::contract(
        "gadget domination number fell outside {n, n+1}".to_string(),
    ))
}

/// Maximum number of simultaneously satisfiable clauses, read off the best
/// dominating n-set of the gadget graph.
pub fn max2sat_via_kset<F>(cnf: &Cnf2, mut kset_solver: F) -> Result<usize>
where
    F: FnMut(&Graph, usize) -> Result<SolveResult>,
{
    let gc = build_gc(cnf);
    let r = kset_solver(&gc.graph, cnf.num_vars())?;
    let offset = gc.readout_offset();
    if r.nbd_size < offset {
        return Err(Error::contract(format!(
            "best n-set covers {} nodes, below the structural floor {offset}",
            r.nbd_size
        )));
    }
    Ok(r.nbd_size - offset)
}
