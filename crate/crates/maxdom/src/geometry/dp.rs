//! Box-subset dynamic program over a strip decomposition.
//!
//! States track the chosen-count in far boxes plus the exact chosen subsets
//! of the two most recent boxes; because intersecting objects sit in the
//! same or adjacent boxes, a new box's coverage only overlaps the previous
//! two, which the transition subtracts exactly.

use super::strip::{build_decomposition, strip_params, StripDecomposition};
use super::{intersection_graph, GeometricInstance, ShapeKind, GEOM_EPS};
use crate::error::{Error, Result};
use crate::graph::{NodeSet, SolveResult};
use crate::interval::{normalize_layout, solve_general, solve_unit, IntervalEngine};
use std::collections::BTreeMap;

/// Knobs for the geometric solver.
#[derive(Debug, Clone, Copy)]
pub struct GeoOptions {
    /// Largest per-box member count the subset enumeration accepts.
    pub box_budget: usize,
    /// Run the box DP even where a projection onto the line would hand the
    /// instance to an interval solver.
    pub force_geometric: bool,
}

impl Default for GeoOptions {
    fn default() -> Self {
        GeoOptions {
            box_budget: 16,
            force_geometric: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct StateKey {
    /// Chosen count in boxes left of the two tracked ones, minus the
    /// two-back box.
    earlier: u16,
    /// Chosen count three boxes back.
    two_back: u16,
    /// Chosen subset of the box before the previous one.
    prev_mask: u32,
    /// Chosen subset of the most recent box.
    cur_mask: u32,
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    val: u32,
    back: Option<StateKey>,
}

const MAX_STATES_PER_LAYER: usize = 2_000_000;

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn key_total(key: &StateKey) -> usize {
    key.earlier as usize
        + key.two_back as usize
        + key.prev_mask.count_ones() as usize
        + key.cur_mask.count_ones() as usize
}

fn box_dp(inst: &GeometricInstance, decomp: &StripDecomposition, k: usize) -> Result<SolveResult> {
    let n = inst.len();
    let g = intersection_graph(inst);
    let words = n.div_ceil(64);
    let nbhd: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut w = vec![0u64; words];
            w[v / 64] |= 1 << (v % 64);
            for &u in g.neighbors(v) {
                w[u / 64] |= 1 << (u % 64);
            }
            w
        })
        .collect();

    let m = decomp.boxes.len();
    let cap_global = decomp.params.per_box_bound.min(k);
    // dominated-id sets and their sizes for every subset of every box
    let mut dom: Vec<Vec<Vec<u64>>> = Vec::with_capacity(m);
    let mut dom_count: Vec<Vec<u32>> = Vec::with_capacity(m);
    for members in &decomp.boxes {
        let sz = members.len();
        let mut table = vec![vec![0u64; words]; 1 << sz];
        let mut counts = vec![0u32; 1 << sz];
        for mask in 1usize..1 << sz {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let mut w = table[rest].clone();
            or_into(&mut w, &nbhd[members[low]]);
            counts[mask] = w.iter().map(|x| x.count_ones()).sum();
            table[mask] = w;
        }
        dom.push(table);
        dom_count.push(counts);
    }

    let mut layers: Vec<BTreeMap<StateKey, Entry>> = Vec::with_capacity(m + 1);
    let mut init = BTreeMap::new();
    init.insert(
        StateKey {
            earlier: 0,
            two_back: 0,
            prev_mask: 0,
            cur_mask: 0,
        },
        Entry { val: 0, back: None },
    );
    layers.push(init);

    let mut dom_ab = vec![0u64; words];
    for t in 0..m {
        let box_sz = decomp.boxes[t].len();
        let cap = cap_global.min(box_sz);
        let masks: Vec<u32> = (0..1u32 << box_sz)
            .filter(|mm| (mm.count_ones() as usize) <= cap)
            .collect();
        let mut next: BTreeMap<StateKey, Entry> = BTreeMap::new();
        for (key, entry) in &layers[t] {
            dom_ab.iter_mut().for_each(|w| *w = 0);
            if key.prev_mask != 0 {
                or_into(&mut dom_ab, &dom[t - 2][key.prev_mask as usize]);
            }
            if key.cur_mask != 0 {
                or_into(&mut dom_ab, &dom[t - 1][key.cur_mask as usize]);
            }
            let base_total = key_total(key);
            let new_key_base = StateKey {
                earlier: key.earlier + key.two_back,
                two_back: key.prev_mask.count_ones() as u16,
                prev_mask: key.cur_mask,
                cur_mask: 0,
            };
            for &cm in &masks {
                let new_total = base_total + cm.count_ones() as usize;
                if new_total > k {
                    continue;
                }
                let fresh = dom_count[t][cm as usize] - and_count(&dom_ab, &dom[t][cm as usize]);
                let val = entry.val + fresh;
                let nk = StateKey {
                    cur_mask: cm,
                    ..new_key_base
                };
                next.entry(nk)
                    .and_modify(|e| {
                        if val > e.val {
                            *e = Entry {
                                val,
                                back: Some(*key),
                            };
                        }
                    })
                    .or_insert(Entry {
                        val,
                        back: Some(*key),
                    });
            }
        }
        if next.len() > MAX_STATES_PER_LAYER {
            return Err(Error::budget(format!(
                "box DP layer {t} holds {} states",
                next.len()
            )));
        }
        layers.push(next);
    }

    // best value per total size, then running maxima for monotone per_k
    let mut per_k = vec![0usize; k + 1];
    let mut best: Option<(u32, StateKey)> = None;
    for (key, e) in &layers[m] {
        let total = key_total(key);
        if total <= k {
            if e.val as usize > per_k[total] {
                per_k[total] = e.val as usize;
            }
            if best.is_none_or(|(bv, _)| e.val > bv) {
                best = Some((e.val, *key));
            }
        }
    }
    for l in 1..=k {
        per_k[l] = per_k[l].max(per_k[l - 1]);
    }

    let (value, best_key) =
        best.ok_or_else(|| Error::contract("box DP produced no feasible state"))?;
    debug_assert_eq!(value as usize, per_k[k]);

    let mut chosen: Vec<usize> = Vec::new();
    let mut key = best_key;
    for t in (1..=m).rev() {
        let members = &decomp.boxes[t - 1];
        let mut mask = key.cur_mask;
        while mask != 0 {
            let low = mask.trailing_zeros() as usize;
            chosen.push(members[low]);
            mask &= mask - 1;
        }
        key = layers[t][&key].back.expect("non-initial states have parents");
    }
    // pad to exactly k with the smallest unused ids
    chosen.sort_unstable();
    let mut next_free = 0usize;
    while chosen.len() < k {
        while chosen.contains(&next_free) {
            next_free += 1;
        }
        chosen.push(next_free);
        next_free += 1;
    }
    let mut covered = vec![0u64; words];
    for &v in &chosen {
        or_into(&mut covered, &nbhd[v]);
    }
    let covered_count: u32 = covered.iter().map(|x| x.count_ones()).sum();
    if covered_count as usize != per_k[k] {
        return Err(Error::contract(format!(
            "witness covers {covered_count} objects but the table claims {}; \
             a per-box bound may be violated",
            per_k[k]
        )));
    }
    Ok(SolveResult {
        k,
        chosen: NodeSet::new(chosen),
        nbd_size: per_k[k],
        per_k: Some(per_k),
    })
}

/// Maximum dominating k-set for a geometric instance. Horizontal-line unit
/// squares and rectangles project onto the line and route to the interval
/// solvers unless `force_geometric` is set; everything else runs the strip
/// decomposition and box DP.
pub fn solve_geometric(
    inst: &GeometricInstance,
    k: usize,
    opts: &GeoOptions,
) -> Result<SolveResult> {
    let n = inst.len();
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds object count {n}")));
    }
    if n == 0 {
        return Ok(SolveResult {
            k,
            chosen: NodeSet::empty(),
            nbd_size: 0,
            per_k: Some(vec![0; k + 1]),
        });
    }
    let canon = inst.canonicalize()?;
    let theta = canon.line.theta_rad();
    if !opts.force_geometric && theta <= GEOM_EPS {
        match canon.kind {
            ShapeKind::UnitSquare => {
                let raw: Vec<(f64, f64)> = canon
                    .objects
                    .iter()
                    .map(|o| (o.cx - 0.5, o.cx + 0.5))
                    .collect();
                return solve_unit(&normalize_layout(&raw)?, k, IntervalEngine::RangeTree);
            }
            ShapeKind::RectUnitHeight => {
                let raw: Vec<(f64, f64)> = canon
                    .objects
                    .iter()
                    .map(|o| (o.cx - o.extent / 2.0, o.cx + o.extent / 2.0))
                    .collect();
                return solve_general(&normalize_layout(&raw)?, k);
            }
            _ => {}
        }
    }
    let (dmax, dmin) = canon.objects.iter().fold((0.0f64, f64::INFINITY), |acc, o| {
        (acc.0.max(o.extent), acc.1.min(o.extent))
    });
    let params = strip_params(canon.kind, theta, dmax, dmin)?;
    let decomp = build_decomposition(&canon, params, opts.box_budget)?;
    box_dp(&canon, &decomp, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{max_center_dist, strip_params, Obj, StabLine};
    use crate::graph::{oracle_max_dom_k, EnumBudget};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_instance(
        rng: &mut ChaCha8Rng,
        kind: ShapeKind,
        n: usize,
        theta_deg: f64,
    ) -> GeometricInstance {
        let line = StabLine::from_degrees(theta_deg, rng.gen_range(-2.0..2.0)).unwrap();
        let span = n as f64 * 1.2;
        let (dx, dy) = line.direction();
        let (nx, ny) = line.normal();
        let (px, py) = if (theta_deg - 90.0).abs() < 1e-9 {
            (line.intercept(), 0.0)
        } else {
            (0.0, line.intercept())
        };
        let objects: Vec<Obj> = (0..n)
            .map(|_| {
                let extent = match kind {
                    ShapeKind::UnitSquare | ShapeKind::UnitDisk => 1.0,
                    ShapeKind::RectUnitHeight => 1.0 + rng.gen_range(0.0..2.0),
                    ShapeKind::Disk => rng.gen_range(1.0..2.0),
                };
                let probe = Obj::with_extent(0.0, 0.0, extent);
                let band = max_center_dist(kind, &probe, &line) - 1e-3;
                let u = rng.gen_range(0.0..span.max(0.5));
                let w = rng.gen_range(-band..band);
                Obj::with_extent(px + u * dx + w * nx, py + u * dy + w * ny, extent)
            })
            .collect();
        GeometricInstance::new(kind, line, objects).unwrap()
    }

    #[test]
    fn single_square() {
        let inst = GeometricInstance::new(
            ShapeKind::UnitSquare,
            StabLine::from_degrees(0.0, 0.0).unwrap(),
            vec![Obj::point(0.0, 0.0)],
        )
        .unwrap();
        for force in [false, true] {
            let opts = GeoOptions {
                force_geometric: force,
                ..Default::default()
            };
            let r = solve_geometric(&inst, 1, &opts).unwrap();
            assert_eq!(r.nbd_size, 1);
            assert_eq!(r.chosen.members(), &[0]);
        }
    }

    #[test]
    fn one_clique_needs_one_pick() {
        let centers = [
            (0.0, 0.0),
            (0.3, 0.1),
            (-0.2, 0.2),
            (0.5, -0.3),
            (-0.5, 0.2),
        ];
        let inst = GeometricInstance::new(
            ShapeKind::UnitSquare,
            StabLine::from_degrees(0.0, 0.0).unwrap(),
            centers.iter().map(|&(x, y)| Obj::point(x, y)).collect(),
        )
        .unwrap();
        for force in [false, true] {
            let opts = GeoOptions {
                force_geometric: force,
                ..Default::default()
            };
            let r = solve_geometric(&inst, 1, &opts).unwrap();
            assert_eq!(r.nbd_size, 5);
        }
    }

    #[test]
    fn matches_oracle_per_kind() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let kinds = [
            (ShapeKind::UnitSquare, 0.0),
            (ShapeKind::UnitSquare, 30.0),
            (ShapeKind::UnitDisk, 15.0),
            (ShapeKind::RectUnitHeight, 45.0),
            (ShapeKind::RectUnitHeight, 20.0),
            (ShapeKind::Disk, 10.0),
        ];
        for (kind, theta) in kinds {
            for round in 0..10 {
                let n = 1 + (round % 8);
                let inst = random_instance(&mut rng, kind, n, theta);
                let g = intersection_graph(&inst);
                for k in 0..=n {
                    let expect = oracle_max_dom_k(&g, k, EnumBudget::default())
                        .unwrap()
                        .nbd_size;
                    let r = solve_geometric(&inst, k, &GeoOptions::default()).unwrap();
                    assert_eq!(
                        r.nbd_size, expect,
                        "kind={kind:?} theta={theta} n={n} k={k}"
                    );
                    assert_eq!(r.chosen.len(), k);
                }
            }
        }
    }

    #[test]
    fn projection_agrees_with_forced_box_dp() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for round in 0..12 {
            let n = 1 + (round % 7);
            let inst = random_instance(&mut rng, ShapeKind::UnitSquare, n, 0.0);
            for k in 0..=n {
                let fast = solve_geometric(&inst, k, &GeoOptions::default()).unwrap();
                let forced = solve_geometric(
                    &inst,
                    k,
                    &GeoOptions {
                        force_geometric: true,
                        ..Default::default()
                    },
                )
                .unwrap();
                assert_eq!(fast.nbd_size, forced.nbd_size, "n={n} k={k}");
                assert_eq!(fast.per_k, forced.per_k, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn dense_box_beyond_per_box_bound() {
        // 13 mutually close squares in one box: the per-box cap (11) kicks
        // in for large k and the witness gets padded without losing value
        let mut centers = Vec::new();
        for i in 0..13 {
            centers.push(Obj::point(i as f64 * 0.04, if i % 2 == 0 { 0.1 } else { -0.1 }));
        }
        let inst = GeometricInstance::new(
            ShapeKind::UnitSquare,
            StabLine::from_degrees(0.0, 0.0).unwrap(),
            centers,
        )
        .unwrap();
        let g = intersection_graph(&inst);
        let opts = GeoOptions {
            force_geometric: true,
            ..Default::default()
        };
        for k in [1, 11, 12, 13] {
            let expect = oracle_max_dom_k(&g, k, EnumBudget::default())
                .unwrap()
                .nbd_size;
            let r = solve_geometric(&inst, k, &opts).unwrap();
            assert_eq!(r.nbd_size, expect, "k={k}");
            assert_eq!(r.chosen.len(), k, "k={k}");
        }
    }

    #[test]
    fn restricting_to_per_box_bound_keeps_the_optimum() {
        // spreading picks never needs more than the per-box bound per box
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for round in 0..8 {
            let n = 12 + (round % 2);
            let inst = random_instance(&mut rng, ShapeKind::UnitSquare, n, 15.0);
            let g = intersection_graph(&inst);
            let canon = inst.canonicalize().unwrap();
            let params =
                strip_params(canon.kind, canon.line.theta_rad(), 1.0, 1.0).unwrap();
            let decomp = build_decomposition(&canon, params, 16).unwrap();
            let bound = params.per_box_bound;
            for k in [n / 2, n] {
                let unrestricted = oracle_max_dom_k(&g, k, EnumBudget::default())
                    .unwrap()
                    .nbd_size;
                // best over subsets of size <= k with <= bound picks per box
                let mut best = 0usize;
                for mask in 0u32..1 << n {
                    if mask.count_ones() as usize > k {
                        continue;
                    }
                    let mut per_box = vec![0usize; decomp.boxes.len()];
                    let mut ok = true;
                    for v in 0..n {
                        if mask >> v & 1 == 1 {
                            per_box[decomp.box_of[v]] += 1;
                            if per_box[decomp.box_of[v]] > bound {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let mut covered = vec![false; n];
                    for v in 0..n {
                        if mask >> v & 1 == 1 {
                            covered[v] = true;
                            for &u in g.neighbors(v) {
                                covered[u] = true;
                            }
                        }
                    }
                    best = best.max(covered.iter().filter(|&&c| c).count());
                }
                assert_eq!(best, unrestricted, "round={round} k={k}");
            }
        }
    }

    #[test]
    fn wide_diameter_ratio_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for round in 0..8 {
            let n = 2 + (round % 7);
            let line = StabLine::from_degrees(12.0, 0.3).unwrap();
            let objects: Vec<Obj> = (0..n)
                .map(|_| {
                    let d = rng.gen_range(0.5..2.0);
                    let band = d / 2.0 - 1e-3;
                    let u = rng.gen_range(0.0..n as f64);
                    let w = rng.gen_range(-band..band);
                    let (dx, dy) = line.direction();
                    let (nx, ny) = line.normal();
                    Obj::with_extent(u * dx + w * nx, 0.3 + u * dy + w * ny, d)
                })
                .collect();
            let inst = GeometricInstance::new(ShapeKind::Disk, line, objects).unwrap();
            let g = intersection_graph(&inst);
            for k in 0..=n {
                let expect = oracle_max_dom_k(&g, k, EnumBudget::default())
                    .unwrap()
                    .nbd_size;
                let r = solve_geometric(&inst, k, &GeoOptions::default()).unwrap();
                assert_eq!(r.nbd_size, expect, "round={round} n={n} k={k}");
            }
        }
    }

    #[test]
    fn horizontal_rectangles_route_to_intervals() {
        let inst = GeometricInstance::new(
            ShapeKind::RectUnitHeight,
            StabLine::from_degrees(0.0, 0.0).unwrap(),
            vec![
                Obj::with_extent(0.0, 0.1, 4.0),
                Obj::with_extent(1.0, -0.2, 1.0),
                Obj::with_extent(5.0, 0.0, 2.0),
            ],
        )
        .unwrap();
        // projection path solves it
        let r = solve_geometric(&inst, 1, &GeoOptions::default()).unwrap();
        let g = intersection_graph(&inst);
        let expect = oracle_max_dom_k(&g, 1, EnumBudget::default())
            .unwrap()
            .nbd_size;
        assert_eq!(r.nbd_size, expect);
        // the box DP has no strip for a horizontal line and rectangles
        let forced = GeoOptions {
            force_geometric: true,
            ..Default::default()
        };
        assert!(solve_geometric(&inst, 1, &forced).is_err());
    }

    #[test]
    fn rejects_oversized_k() {
        let inst = GeometricInstance::new(
            ShapeKind::UnitDisk,
            StabLine::from_degrees(0.0, 0.0).unwrap(),
            vec![Obj::point(0.0, 0.0)],
        )
        .unwrap();
        assert!(solve_geometric(&inst, 2, &GeoOptions::default()).is_err());
    }
}
