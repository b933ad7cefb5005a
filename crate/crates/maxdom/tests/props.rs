//! Property-based invariants over random graphs, layouts and instances.

mod common;

use common::brute_best_coverage;
use maxdom::generate::{generate, GenKind, GenParams};
use maxdom::geometry::{
    build_decomposition, intersection_graph, intersects, strip_params, sub_box_of, ShapeKind,
};
use maxdom::graph::{
    closed_neighborhood, domination_defect, is_dominating, oracle_max_dom_k, oracle_partial_dom,
    EnumBudget, Graph, NodeSet,
};
use maxdom::instance::{parse_instance, to_geometric, to_layout, emit_instance_pretty};
use maxdom::interval::{preprocess_proper, reduce_general};
use maxdom::reductions::{pad_for_partial, recover_dominating_set};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coverage_monotone_in_k(g in arb_graph(9)) {
        let budget = EnumBudget::default();
        let n = g.node_count();
        let mut prev = 0;
        for k in 0..=n {
            let r = oracle_max_dom_k(&g, k, budget).unwrap();
            prop_assert!(r.nbd_size >= k, "any k nodes cover at least themselves");
            prop_assert!(r.nbd_size >= prev);
            prop_assert!(r.nbd_size <= n);
            prev = r.nbd_size;
        }
    }

    #[test]
    fn partial_domination_monotone_in_alpha(g in arb_graph(8), a in 0.05f64..=1.0, b in 0.05f64..=1.0) {
        prop_assume!(g.node_count() > 0);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let budget = EnumBudget::default();
        let glo = oracle_partial_dom(&g, lo, budget).unwrap().k;
        let ghi = oracle_partial_dom(&g, hi, budget).unwrap().k;
        prop_assert!(glo <= ghi);
    }

    #[test]
    fn dominating_iff_full_closed_neighborhood(g in arb_graph(9), picks in proptest::collection::vec(any::<u8>(), 0..6)) {
        let n = g.node_count();
        let s: NodeSet = picks
            .into_iter()
            .filter(|_| n > 0)
            .map(|p| p as usize % n)
            .collect();
        let full = closed_neighborhood(&g, &s).unwrap().len() == n;
        prop_assert_eq!(is_dominating(&g, &s).unwrap(), full);
    }

    #[test]
    fn oracle_matches_independent_enumerator(g in arb_graph(7), k in 0usize..=7) {
        prop_assume!(k <= g.node_count());
        let r = oracle_max_dom_k(&g, k, EnumBudget::default()).unwrap();
        prop_assert_eq!(r.nbd_size, brute_best_coverage(&g, k));
    }

    #[test]
    fn defect_matches_independent_enumerator(g in arb_graph(7), r in 0usize..3) {
        prop_assume!(g.node_count() > 0);
        let budget = EnumBudget::default();
        let gamma = oracle_partial_dom(&g, 1.0, budget).unwrap().k;
        prop_assume!(r < gamma);
        let defect = domination_defect(&g, r, budget).unwrap();
        prop_assert_eq!(defect, g.node_count() - brute_best_coverage(&g, gamma - r));
    }

    #[test]
    fn padding_recovery_round_trip(g in arb_graph(7), alpha in 0.25f64..=1.0) {
        prop_assume!(g.node_count() > 0);
        let padded = pad_for_partial(&g, alpha, 1 << 16).unwrap();
        let witness = oracle_partial_dom(&padded, alpha, EnumBudget::new(40)).unwrap();
        let rec = recover_dominating_set(&g, &padded, &witness.chosen).unwrap();
        prop_assert!(is_dominating(&g, &rec).unwrap());
        prop_assert!(rec.len() <= witness.chosen.len());
    }

    #[test]
    fn window_counts_add_up_to_prefix_differences(seed in any::<u64>(), n in 1usize..12) {
        let inst = generate(GenKind::UnitIntervals, n, seed, &GenParams::default()).unwrap();
        let layout = to_layout(&inst).unwrap().unwrap();
        let tabs = preprocess_proper(&layout).unwrap();
        for j in 0..n {
            for i in j + 1..n {
                let direct: u64 = (j + 1..=i).map(|p| tabs.fresh_starts[p] as u64).sum();
                prop_assert_eq!(tabs.fresh_prefix[i] - tabs.fresh_prefix[j], direct);
            }
        }
    }

    #[test]
    fn deletion_safety(seed in any::<u64>(), n in 1usize..10) {
        // removing contained intervals never changes the optimum
        let inst = generate(GenKind::Intervals, n, seed, &GenParams::default()).unwrap();
        let layout = to_layout(&inst).unwrap().unwrap();
        let (kept, gt) = reduce_general(&layout);
        let g = layout.intersection_graph();
        let budget = EnumBudget::default();
        for k in 0..=kept.len() {
            let all = oracle_max_dom_k(&g, k, budget).unwrap().nbd_size;
            let mut best_kept = 0;
            let kept_ids: Vec<usize> = gt
                .kept_input_idx
                .iter()
                .map(|&p| layout.intervals()[p].orig)
                .collect();
            let mut pick = vec![0usize; k];
            enumerate_subsets(&kept_ids, k, 0, &mut pick, &mut |s| {
                let ns = NodeSet::new(s.to_vec());
                let c = closed_neighborhood(&g, &ns).unwrap().len();
                if c > best_kept {
                    best_kept = c;
                }
            });
            prop_assert_eq!(all, best_kept, "k={}", k);
        }
    }

    #[test]
    fn canonicalization_preserves_edges(seed in any::<u64>(), theta_idx in 0usize..8, kind_idx in 0usize..2) {
        let thetas = [0.0, 15.0, 50.0, 60.0, 90.0, 120.0, 135.0, -40.0];
        let (gen_kind, _) = [(GenKind::UnitSquares, ShapeKind::UnitSquare), (GenKind::UnitDisks, ShapeKind::UnitDisk)][kind_idx];
        let params = GenParams {
            theta_deg: thetas[theta_idx],
            intercept: 0.4,
            ..Default::default()
        };
        let inst = generate(gen_kind, 7, seed, &params).unwrap();
        let geo = to_geometric(&inst).unwrap().unwrap();
        let canon = geo.canonicalize().unwrap();
        prop_assert!(canon.line.is_canonical());
        prop_assert_eq!(
            intersection_graph(&geo).edges(),
            intersection_graph(&canon).edges()
        );
    }

    #[test]
    fn sub_boxes_only_hold_intersecting_centers(seed in any::<u64>(), kind_idx in 0usize..2) {
        let (gen_kind, shape, theta) = [
            (GenKind::RectsUnitHeight, ShapeKind::RectUnitHeight, 33.0),
            (GenKind::Disks, ShapeKind::Disk, 18.0),
        ][kind_idx % 2];
        let params = GenParams {
            theta_deg: theta,
            dmin: 1.0,
            dmax: 2.0,
            ..Default::default()
        };
        let inst = generate(gen_kind, 9, seed, &params).unwrap();
        let geo = to_geometric(&inst).unwrap().unwrap().canonicalize().unwrap();
        let (dmax, dmin) = geo.objects.iter().fold((0.0f64, f64::INFINITY), |acc, o| {
            (acc.0.max(o.extent), acc.1.min(o.extent))
        });
        let sp = strip_params(shape, geo.line.theta_rad(), dmax, dmin).unwrap();
        let d = build_decomposition(&geo, sp, 16).unwrap();
        for i in 0..geo.len() {
            for j in i + 1..geo.len() {
                if sub_box_of(&geo, &d, i) == sub_box_of(&geo, &d, j) {
                    prop_assert!(
                        intersects(shape, &geo.objects[i], &geo.objects[j]),
                        "sub-box packed non-intersecting objects {} and {}", i, j
                    );
                }
            }
        }
    }

    #[test]
    fn parse_emit_round_trip(seed in any::<u64>(), kind_idx in 0usize..8, n in 1usize..9) {
        let kind = [
            GenKind::Graph,
            GenKind::Intervals,
            GenKind::UnitIntervals,
            GenKind::UnitSquares,
            GenKind::UnitDisks,
            GenKind::RectsUnitHeight,
            GenKind::Disks,
            GenKind::Cnf2,
        ][kind_idx];
        let params = GenParams {
            theta_deg: 25.0,
            clauses: 3,
            ..Default::default()
        };
        let inst = generate(kind, n, seed, &params).unwrap();
        let text = emit_instance_pretty(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(inst, back);
    }
}

/// The staged coverage probe behind alpha queries lands on the same
/// domination number as the exhaustive search.
#[test]
fn alpha_probe_matches_oracle_partial() {
    use maxdom::instance::{run_query, to_graph, Query, SolveOptions};
    for seed in 0..20u64 {
        let n = 1 + (seed as usize % 11);
        for kind in [GenKind::UnitIntervals, GenKind::Intervals] {
            let inst = generate(kind, n, 0xA1FA + seed, &GenParams::default()).unwrap();
            let g = to_graph(&inst).unwrap();
            for alpha in [0.25, 0.5, 0.75, 1.0] {
                let (r, _) =
                    run_query(&inst, &Query::Alpha { alpha }, &SolveOptions::default()).unwrap();
                let expect = oracle_partial_dom(&g, alpha, EnumBudget::default()).unwrap();
                assert_eq!(r.k, expect.k, "kind={kind:?} seed={seed} alpha={alpha}");
                assert_eq!(r.chosen.len(), r.k);
            }
        }
    }
}

/// Every solve result must verify against its instance, and all engines
/// that accept an instance must report the same value.
#[test]
fn results_self_certify_and_engines_agree() {
    use maxdom::instance::{
        instance_digest, run_query, verify_result, Engine, Query, ResultFile, SolveOptions,
        SCHEMA_VERSION,
    };
    let cases: [(GenKind, &[Engine], f64); 5] = [
        (
            GenKind::Graph,
            &[Engine::Auto, Engine::Oracle],
            0.0,
        ),
        (
            GenKind::UnitIntervals,
            &[Engine::Auto, Engine::IntervalFast, Engine::IntervalRef, Engine::Oracle],
            0.0,
        ),
        (
            GenKind::Intervals,
            &[Engine::Auto, Engine::IntervalRef, Engine::Oracle],
            0.0,
        ),
        (
            GenKind::UnitSquares,
            &[Engine::Auto, Engine::Geometric, Engine::Oracle],
            20.0,
        ),
        (
            GenKind::Disks,
            &[Engine::Auto, Engine::Geometric, Engine::Oracle],
            35.0,
        ),
    ];
    for (kind, engines, theta) in cases {
        for seed in 0..6u64 {
            let n = 3 + (seed as usize % 6);
            let params = GenParams {
                theta_deg: theta,
                ..Default::default()
            };
            let inst = generate(kind, n, 0x5EED + seed, &params).unwrap();
            for query in [Query::K { k: n / 2 }, Query::Alpha { alpha: 0.7 }] {
                let mut values = Vec::new();
                let mut gammas = Vec::new();
                for &engine in engines {
                    let opts = SolveOptions {
                        engine,
                        ..Default::default()
                    };
                    let (r, solver) = run_query(&inst, &query, &opts).unwrap();
                    values.push(r.nbd_size);
                    if matches!(query, Query::Alpha { .. }) {
                        gammas.push(r.k);
                    }
                    let res = ResultFile {
                        schema_version: SCHEMA_VERSION,
                        instance_digest: instance_digest(&inst),
                        query,
                        gamma: match query {
                            Query::Alpha { .. } => Some(r.k),
                            Query::K { .. } => None,
                        },
                        nbd_size: r.nbd_size,
                        chosen: r.chosen.members().to_vec(),
                        per_k: r.per_k.clone(),
                        solver,
                        wall_ms: 0.0,
                    };
                    verify_result(&inst, &res).unwrap();
                }
                assert!(
                    values.windows(2).all(|w| w[0] == w[1]),
                    "kind={kind:?} seed={seed} query={query:?}: engines disagreed {values:?}"
                );
                assert!(
                    gammas.windows(2).all(|w| w[0] == w[1]),
                    "kind={kind:?} seed={seed}: gamma disagreed {gammas:?}"
                );
            }
        }
    }
}

fn enumerate_subsets(
    ids: &[usize],
    k: usize,
    start: usize,
    pick: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    let filled = pick.len() - k;
    if k == 0 {
        f(&pick[..filled]);
        return;
    }
    for i in start..=ids.len().saturating_sub(k) {
        pick[filled] = ids[i];
        enumerate_subsets(ids, k - 1, i + 1, pick, f);
    }
}
