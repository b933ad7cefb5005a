//! Exact solvers for the maximum dominating k-set problem and its partial
//! domination counterpart on interval graphs and on geometric intersection
//! graphs of objects stabbed by a line, together with the reductions tying
//! the two problems to each other and to 2-SAT, all cross-checked against an
//! exhaustive oracle.

pub mod dimacs;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod instance;
pub mod interval;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{
    closed_neighborhood, domination_defect, is_dominating, oracle_max_dom_k, oracle_partial_dom,
    EnumBudget, Graph, NodeSet, SolveResult,
};
