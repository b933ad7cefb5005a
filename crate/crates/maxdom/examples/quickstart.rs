//! Generate a small instance of every kind, solve a couple of queries on
//! each, and show the reductions in action.
//!
//! Run with: cargo run -p maxdom --example quickstart

use maxdom::generate::{generate, GenKind, GenParams};
use maxdom::graph::{oracle_max_dom_k, EnumBudget};
use maxdom::instance::{run_query, to_cnf, Query, SolveOptions};
use maxdom::reductions::{gc_sat_decision, max2sat_via_kset};

fn main() -> maxdom::Result<()> {
    let kinds = [
        (GenKind::Graph, "graph"),
        (GenKind::UnitIntervals, "unit_intervals"),
        (GenKind::Intervals, "intervals"),
        (GenKind::UnitSquares, "unit_squares"),
        (GenKind::UnitDisks, "unit_disks"),
        (GenKind::RectsUnitHeight, "rects_unit_height"),
        (GenKind::Disks, "disks"),
    ];
    let params = GenParams {
        theta_deg: 20.0,
        ..Default::default()
    };
    for (kind, name) in kinds {
        let inst = generate(kind, 8, 42, &params)?;
        let (kset, solver) = run_query(&inst, &Query::K { k: 2 }, &SolveOptions::default())?;
        let (partial, _) = run_query(
            &inst,
            &Query::Alpha { alpha: 0.75 },
            &SolveOptions::default(),
        )?;
        println!(
            "{name:18} best 2-set covers {:2} of 8 ({solver}); gamma_0.75 = {}",
            kset.nbd_size, partial.k
        );
    }

    // a 2-CNF decided through the domination number of its gadget graph
    let inst = generate(GenKind::Cnf2, 3, 7, &GenParams { clauses: 4, ..Default::default() })?;
    let cnf = to_cnf(&inst).expect("cnf kind")?;
    let budget = EnumBudget::new(64);
    let solver = |g: &maxdom::Graph, k: usize| oracle_max_dom_k(g, k, budget);
    println!(
        "cnf2               satisfiable: {}, max satisfiable clauses: {} of {}",
        gc_sat_decision(&cnf, solver)?,
        max2sat_via_kset(&cnf, solver)?,
        cnf.num_clauses(),
    );
    Ok(())
}
