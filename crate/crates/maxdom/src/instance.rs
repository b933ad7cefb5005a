//! Instance and result file schemas, validation, digests, witness
//! verification, DOT export, and the query dispatcher shared by the CLI and
//! the browser demo.

use crate::error::{Error, Result};
use crate::geometry::{
    intersection_graph, solve_geometric, GeoOptions, GeometricInstance, Obj, ShapeKind, StabLine,
};
use crate::graph::{
    closed_neighborhood, oracle_max_dom_k, oracle_partial_dom, partial_target, EnumBudget, Graph,
    NodeSet, SolveResult,
};
use crate::interval::{
    normalize_layout, solve_auto, solve_general, solve_unit, unit_coverage_table, IntervalEngine,
    IntervalLayout,
};
use crate::reductions::{Cnf2, Lit};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

/// Stabbing line as serialized: angle in degrees, intercept of `y = tan(θ)x + c`
/// (x-intercept for a vertical line).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineSpec {
    pub theta_deg: f64,
    pub intercept: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointObject {
    pub cx: f64,
    pub cy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectObject {
    pub cx: f64,
    pub cy: f64,
    pub width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskObject {
    pub cx: f64,
    pub cy: f64,
    pub diameter: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstancePayload {
    Graph {
        n: usize,
        edges: Vec<[usize; 2]>,
    },
    Intervals {
        intervals: Vec<[f64; 2]>,
    },
    UnitIntervals {
        intervals: Vec<[f64; 2]>,
    },
    UnitSquares {
        line: LineSpec,
        objects: Vec<PointObject>,
    },
    UnitDisks {
        line: LineSpec,
        objects: Vec<PointObject>,
    },
    RectsUnitHeight {
        line: LineSpec,
        objects: Vec<RectObject>,
    },
    Disks {
        line: LineSpec,
        objects: Vec<DiskObject>,
    },
    Cnf2 {
        num_vars: usize,
        clauses: Vec<[i64; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub schema_version: u32,
    #[serde(flatten)]
    pub payload: InstancePayload,
}

impl InstanceFile {
    pub fn new(payload: InstancePayload) -> Self {
        InstanceFile {
            schema_version: SCHEMA_VERSION,
            payload,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match &self.payload {
            InstancePayload::Graph { .. } => "graph",
            InstancePayload::Intervals { .. } => "intervals",
            InstancePayload::UnitIntervals { .. } => "unit_intervals",
            InstancePayload::UnitSquares { .. } => "unit_squares",
            InstancePayload::UnitDisks { .. } => "unit_disks",
            InstancePayload::RectsUnitHeight { .. } => "rects_unit_height",
            InstancePayload::Disks { .. } => "disks",
            InstancePayload::Cnf2 { .. } => "cnf2",
        }
    }

    /// Number of combinatorial elements a query ranges over.
    pub fn size(&self) -> usize {
        match &self.payload {
            InstancePayload::Graph { n, .. } => *n,
            InstancePayload::Intervals { intervals }
            | InstancePayload::UnitIntervals { intervals } => intervals.len(),
            InstancePayload::UnitSquares { objects, .. }
            | InstancePayload::UnitDisks { objects, .. } => objects.len(),
            InstancePayload::RectsUnitHeight { objects, .. } => objects.len(),
            InstancePayload::Disks { objects, .. } => objects.len(),
            InstancePayload::Cnf2 { num_vars, .. } => *num_vars,
        }
    }
}

fn line_from_spec(spec: &LineSpec) -> Result<StabLine> {
    StabLine::from_degrees(spec.theta_deg, spec.intercept)
}

/// Parses and validates an instance file, reporting every schema violation
/// with its path.
pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let inst: InstanceFile = serde_json::from_str(text)
        .map_err(|e| Error::Schema(vec![format!("/: {e}")]))?;
    validate_instance(&inst)?;
    Ok(inst)
}

/// Structural validation beyond what the JSON shape enforces.
pub fn validate_instance(inst: &InstanceFile) -> Result<()> {
    let mut bad = Vec::new();
    if inst.schema_version != SCHEMA_VERSION {
        bad.push(format!(
            "/schema_version: expected {SCHEMA_VERSION}, got {}",
            inst.schema_version
        ));
    }
    match &inst.payload {
        InstancePayload::Graph { n, edges } => {
            let mut seen = std::collections::BTreeSet::new();
            for (i, e) in edges.iter().enumerate() {
                let (u, v) = (e[0], e[1]);
                if u >= *n || v >= *n {
                    bad.push(format!("/edges/{i}: endpoint out of range for n={n}"));
                } else if u == v {
                    bad.push(format!("/edges/{i}: self-loop at {u}"));
                } else if !seen.insert((u.min(v), u.max(v))) {
                    bad.push(format!("/edges/{i}: duplicate edge ({u},{v})"));
                }
            }
        }
        InstancePayload::Intervals { intervals } | InstancePayload::UnitIntervals { intervals } => {
            for (i, iv) in intervals.iter().enumerate() {
                if !(iv[0].is_finite() && iv[1].is_finite()) {
                    bad.push(format!("/intervals/{i}: non-finite endpoint"));
                } else if iv[0] >= iv[1] {
                    bad.push(format!("/intervals/{i}: start {} >= end {}", iv[0], iv[1]));
                }
            }
            if matches!(inst.payload, InstancePayload::UnitIntervals { .. }) {
                if let Some(first) = intervals.first() {
                    let len = first[1] - first[0];
                    for (i, iv) in intervals.iter().enumerate() {
                        if (iv[1] - iv[0] - len).abs() > 1e-9 {
                            bad.push(format!(
                                "/intervals/{i}: length {} differs from {len}",
                                iv[1] - iv[0]
                            ));
                        }
                    }
                }
            }
        }
        InstancePayload::UnitSquares { .. }
        | InstancePayload::UnitDisks { .. }
        | InstancePayload::RectsUnitHeight { .. }
        | InstancePayload::Disks { .. } => match to_geometric(inst) {
            Some(Ok(_)) => {}
            Some(Err(e)) => bad.push(format!("/objects: {e}")),
            None => unreachable!(),
        },
        InstancePayload::Cnf2 { num_vars, clauses } => {
            if *num_vars == 0 {
                bad.push("/num_vars: must be at least 1".to_string());
            }
            if clauses.is_empty() {
                bad.push("/clauses: must not be empty".to_string());
            }
            for (i, c) in clauses.iter().enumerate() {
                for lit in c {
                    if *lit == 0 || lit.unsigned_abs() as usize > *num_vars {
                        bad.push(format!("/clauses/{i}: literal {lit} out of range"));
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Schema(bad))
    }
}

/// Canonical serialization (compact JSON with fixed field order).
pub fn emit_instance(inst: &InstanceFile) -> String {
    serde_json::to_string(inst).expect("instances serialize")
}

pub fn emit_instance_pretty(inst: &InstanceFile) -> String {
    let mut s = serde_json::to_string_pretty(inst).expect("instances serialize");
    s.push('\n');
    s
}

/// Digest over the canonical serialization; ties results to instances.
pub fn instance_digest(inst: &InstanceFile) -> String {
    let mut h = Sha256::new();
    h.update(emit_instance(inst).as_bytes());
    format!("sha256:{:x}", h.finalize())
}

/// Interval layout of an interval-kind instance.
pub fn to_layout(inst: &InstanceFile) -> Option<Result<IntervalLayout>> {
    match &inst.payload {
        InstancePayload::Intervals { intervals } | InstancePayload::UnitIntervals { intervals } => {
            let raw: Vec<(f64, f64)> = intervals.iter().map(|iv| (iv[0], iv[1])).collect();
            Some(normalize_layout(&raw))
        }
        _ => None,
    }
}

/// Geometric instance of a geometric-kind instance file.
pub fn to_geometric(inst: &InstanceFile) -> Option<Result<GeometricInstance>> {
    let built = match &inst.payload {
        InstancePayload::UnitSquares { line, objects } => line_from_spec(line).and_then(|l| {
            GeometricInstance::new(
                ShapeKind::UnitSquare,
                l,
                objects.iter().map(|o| Obj::point(o.cx, o.cy)).collect(),
            )
        }),
        InstancePayload::UnitDisks { line, objects } => line_from_spec(line).and_then(|l| {
            GeometricInstance::new(
                ShapeKind::UnitDisk,
                l,
                objects.iter().map(|o| Obj::point(o.cx, o.cy)).collect(),
            )
        }),
        InstancePayload::RectsUnitHeight { line, objects } => {
            line_from_spec(line).and_then(|l| {
                GeometricInstance::new(
                    ShapeKind::RectUnitHeight,
                    l,
                    objects
                        .iter()
                        .map(|o| Obj::with_extent(o.cx, o.cy, o.width))
                        .collect(),
                )
            })
        }
        InstancePayload::Disks { line, objects } => line_from_spec(line).and_then(|l| {
            GeometricInstance::new(
                ShapeKind::Disk,
                l,
                objects
                    .iter()
                    .map(|o| Obj::with_extent(o.cx, o.cy, o.diameter))
                    .collect(),
            )
        }),
        _ => return None,
    };
    Some(built)
}

/// 2-CNF of a cnf2-kind instance file.
pub fn to_cnf(inst: &InstanceFile) -> Option<Result<Cnf2>> {
    match &inst.payload {
        InstancePayload::Cnf2 { num_vars, clauses } => {
            let lits: Vec<(Lit, Lit)> = clauses
                .iter()
                .map(|c| {
                    let mk = |l: i64| Lit {
                        var: (l.unsigned_abs() as usize).saturating_sub(1),
                        positive: l > 0,
                    };
                    (mk(c[0]), mk(c[1]))
                })
                .collect();
            Some(Cnf2::new(*num_vars, lits))
        }
        _ => None,
    }
}

/// The combinatorial graph a query runs on: the graph itself, or the
/// intersection graph of the layout/objects.
pub fn to_graph(inst: &InstanceFile) -> Result<Graph> {
    match &inst.payload {
        InstancePayload::Graph { n, edges } => {
            let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
            Graph::from_edges(*n, &pairs)
        }
        InstancePayload::Intervals { .. } | InstancePayload::UnitIntervals { .. } => {
            Ok(to_layout(inst).expect("interval kind")?.intersection_graph())
        }
        InstancePayload::UnitSquares { .. }
        | InstancePayload::UnitDisks { .. }
        | InstancePayload::RectsUnitHeight { .. }
        | InstancePayload::Disks { .. } => {
            Ok(intersection_graph(&to_geometric(inst).expect("geometric kind")?))
        }
        InstancePayload::Cnf2 { .. } => Err(Error::invalid(
            "cnf2 instances have no direct graph; build the gadget with reduce --mode gc",
        )),
    }
}

/// DOT rendering of the instance's (intersection) graph.
pub fn export_dot(inst: &InstanceFile) -> Result<String> {
    let g = to_graph(inst)?;
    let mut out = String::from("graph G {\n");
    for v in 0..g.node_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

/// What a solve asks for.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Query {
    K { k: usize },
    Alpha { alpha: f64 },
}

/// Self-certifying solve output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub schema_version: u32,
    pub instance_digest: String,
    pub query: Query,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    pub nbd_size: usize,
    pub chosen: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_k: Option<Vec<usize>>,
    pub solver: String,
    pub wall_ms: f64,
}

/// Engine selection for the query dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Auto,
    IntervalFast,
    IntervalRef,
    Geometric,
    Oracle,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "interval-fast" => Ok(Engine::IntervalFast),
            "interval-ref" => Ok(Engine::IntervalRef),
            "geometric" => Ok(Engine::Geometric),
            "oracle" => Ok(Engine::Oracle),
            other => Err(Error::invalid(format!("unknown engine '{other}'"))),
        }
    }
}

/// Budgets and engine choice for one query.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub engine: Engine,
    pub enum_budget: EnumBudget,
    pub box_budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            engine: Engine::Auto,
            enum_budget: EnumBudget::default(),
            box_budget: GeoOptions::default().box_budget,
        }
    }
}

fn solve_kset(inst: &InstanceFile, k: usize, opts: &SolveOptions) -> Result<(SolveResult, String)> {
    let engine = opts.engine;
    if engine == Engine::Oracle {
        let g = to_graph(inst)?;
        return Ok((oracle_max_dom_k(&g, k, opts.enum_budget)?, "oracle".into()));
    }
    match &inst.payload {
        InstancePayload::Graph { .. } => match engine {
            Engine::Auto => {
                let g = to_graph(inst)?;
                Ok((oracle_max_dom_k(&g, k, opts.enum_budget)?, "oracle".into()))
            }
            _ => Err(Error::invalid(
                "plain graphs solve via the oracle engine only",
            )),
        },
        InstancePayload::Intervals { .. } | InstancePayload::UnitIntervals { .. } => {
            let layout = to_layout(inst).expect("interval kind")?;
            match engine {
                Engine::Auto => {
                    let id = if layout.is_proper() {
                        "interval-fast"
                    } else {
                        "interval-general"
                    };
                    Ok((solve_auto(&layout, k)?, id.into()))
                }
                Engine::IntervalFast => Ok((
                    solve_unit(&layout, k, IntervalEngine::RangeTree)?,
                    "interval-fast".into(),
                )),
                Engine::IntervalRef => {
                    if layout.is_proper() {
                        Ok((
                            solve_unit(&layout, k, IntervalEngine::DirectScan)?,
                            "interval-ref".into(),
                        ))
                    } else {
                        Ok((solve_general(&layout, k)?, "interval-general".into()))
                    }
                }
                _ => Err(Error::invalid("interval instances need an interval engine")),
            }
        }
        InstancePayload::UnitSquares { .. }
        | InstancePayload::UnitDisks { .. }
        | InstancePayload::RectsUnitHeight { .. }
        | InstancePayload::Disks { .. } => {
            let geo = to_geometric(inst).expect("geometric kind")?;
            let geo_opts = GeoOptions {
                box_budget: opts.box_budget,
                force_geometric: engine == Engine::Geometric,
            };
            match engine {
                Engine::Auto | Engine::Geometric => {
                    Ok((solve_geometric(&geo, k, &geo_opts)?, "geometric".into()))
                }
                _ => Err(Error::invalid(
                    "geometric instances need the geometric or oracle engine",
                )),
            }
        }
        InstancePayload::Cnf2 { .. } => Err(Error::invalid(
            "cnf2 instances are inputs to reduce --mode gc, not solve",
        )),
    }
}

/// Runs a k-set or partial-domination query with the selected engine.
/// Returns the result and a solver id for the result file.
pub fn run_query(
    inst: &InstanceFile,
    query: &Query,
    opts: &SolveOptions,
) -> Result<(SolveResult, String)> {
    match *query {
        Query::K { k } => solve_kset(inst, k, opts),
        Query::Alpha { alpha } => {
            if !(alpha > 0.0 && alpha <= 1.0) {
                return Err(Error::invalid(format!("alpha={alpha} outside (0, 1]")));
            }
            if opts.engine == Engine::Oracle || matches!(inst.payload, InstancePayload::Graph { .. })
            {
                let g = to_graph(inst)?;
                return Ok((
                    oracle_partial_dom(&g, alpha, opts.enum_budget)?,
                    "oracle".into(),
                ));
            }
            let n = inst.size();
            let target = partial_target(n, alpha);
            if n == 0 || target == 0 {
                let (r, id) = solve_kset(inst, 0, opts)?;
                return Ok((r, id));
            }
            // probe with coverage values only where the layout allows it,
            // then build the witness once at the right size
            let value_probe: Option<IntervalLayout> = match (&inst.payload, opts.engine) {
                (
                    InstancePayload::Intervals { .. } | InstancePayload::UnitIntervals { .. },
                    Engine::Auto | Engine::IntervalFast,
                ) => {
                    let layout = to_layout(inst).expect("interval kind")?;
                    layout.is_proper().then_some(layout)
                }
                _ => None,
            };
            // grow k until the coverage table reaches the target, then read
            // the smallest sufficient size off the table and solve there for
            // a right-sized witness
            let mut k = 1usize;
            loop {
                let k_cap = k.min(n);
                let gamma = match &value_probe {
                    Some(layout) => {
                        let table = unit_coverage_table(layout, k_cap)?;
                        table.iter().position(|&v| v >= target)
                    }
                    None => {
                        let (r, id) = solve_kset(inst, k_cap, opts)?;
                        let per_k = r.per_k.as_ref().ok_or_else(|| {
                            Error::contract(format!("engine {id} returned no coverage table"))
                        })?;
                        per_k.iter().position(|&v| v >= target)
                    }
                };
                if let Some(gamma) = gamma {
                    let (exact, id) = solve_kset(inst, gamma, opts)?;
                    debug_assert!(exact.nbd_size >= target);
                    return Ok((exact, id));
                }
                if k_cap == n {
                    break;
                }
                k *= 2;
            }
            Err(Error::contract(format!(
                "no set reached the coverage target {target}"
            )))
        }
    }
}

/// Re-checks a result against its instance: digest, witness bounds, coverage
/// arithmetic and per-size table consistency.
pub fn verify_result(inst: &InstanceFile, res: &ResultFile) -> Result<()> {
    let fail = |msg: String| Err(Error::VerificationFailed(msg));
    if res.schema_version != SCHEMA_VERSION {
        return fail(format!("result schema_version {}", res.schema_version));
    }
    let expect_digest = instance_digest(inst);
    if res.instance_digest != expect_digest {
        return fail(format!(
            "digest mismatch: result has {}, instance is {expect_digest}",
            res.instance_digest
        ));
    }
    let g = to_graph(inst)?;
    let n = g.node_count();
    let mut sorted = res.chosen.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != res.chosen.len() {
        return fail("chosen set has duplicates".into());
    }
    if sorted.iter().any(|&v| v >= n) {
        return fail("chosen set has out-of-range ids".into());
    }
    let set = NodeSet::new(sorted);
    let covered = closed_neighborhood(&g, &set)?;
    if covered.len() != res.nbd_size {
        return fail(format!(
            "witness covers {} elements, result claims {}",
            covered.len(),
            res.nbd_size
        ));
    }
    match res.query {
        Query::K { k } => {
            if set.len() != k {
                return fail(format!("witness size {} differs from k={k}", set.len()));
            }
            if let Some(per_k) = &res.per_k {
                if per_k.len() != k + 1 {
                    return fail("per_k length mismatch".into());
                }
                if per_k.windows(2).any(|w| w[0] > w[1]) {
                    return fail("per_k not non-decreasing".into());
                }
                if per_k[k] != res.nbd_size {
                    return fail("per_k tail disagrees with nbd_size".into());
                }
            }
        }
        Query::Alpha { alpha } => {
            let gamma = res
                .gamma
                .ok_or_else(|| Error::VerificationFailed("alpha result lacks gamma".into()))?;
            if gamma != set.len() {
                return fail(format!("gamma {gamma} differs from witness size {}", set.len()));
            }
            if covered.len() < partial_target(n, alpha) {
                return fail(format!(
                    "coverage {} below target {}",
                    covered.len(),
                    partial_target(n, alpha)
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let inst =
            parse_instance(r#"{"schema_version":1,"kind":"graph","n":3,"edges":[[0,1],[1,2]]}"#)
                .unwrap();
        let g = to_graph(&inst).unwrap();
        assert_eq!(g.node_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));

        let inst = parse_instance(
            r#"{"schema_version":1,"kind":"unit_squares","line":{"theta_deg":0,"intercept":0},"objects":[{"cx":0,"cy":0}]}"#,
        )
        .unwrap();
        assert_eq!(inst.size(), 1);

        let err = parse_instance(
            r#"{"schema_version":1,"kind":"graph","n":2,"edges":[[0,0]]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("self-loop"), "{err}");
    }

    #[test]
    fn digest_is_stable_under_formatting() {
        let a = parse_instance(r#"{"schema_version":1,"kind":"graph","n":2,"edges":[[0,1]]}"#)
            .unwrap();
        let b = parse_instance(
            "{\n  \"schema_version\": 1,\n  \"kind\": \"graph\",\n  \"n\": 2,\n  \"edges\": [[0, 1]]\n}",
        )
        .unwrap();
        assert_eq!(instance_digest(&a), instance_digest(&b));
    }

    #[test]
    fn query_dispatch_and_verify() {
        let inst =
            parse_instance(r#"{"schema_version":1,"kind":"graph","n":3,"edges":[[0,1],[1,2]]}"#)
                .unwrap();
        let (r, id) = run_query(&inst, &Query::K { k: 1 }, &SolveOptions::default()).unwrap();
        assert_eq!(r.nbd_size, 3);
        assert_eq!(id, "oracle");

        let res = ResultFile {
            schema_version: SCHEMA_VERSION,
            instance_digest: instance_digest(&inst),
            query: Query::K { k: 1 },
            gamma: None,
            nbd_size: r.nbd_size,
            chosen: r.chosen.members().to_vec(),
            per_k: r.per_k.clone(),
            solver: id,
            wall_ms: 0.0,
        };
        verify_result(&inst, &res).unwrap();

        let mut tampered = res.clone();
        tampered.chosen = vec![0];
        assert!(matches!(
            verify_result(&inst, &tampered),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn alpha_queries_report_gamma_k() {
        let inst = parse_instance(
            r#"{"schema_version":1,"kind":"graph","n":4,"edges":[]}"#,
        )
        .unwrap();
        let (r, _) = run_query(
            &inst,
            &Query::Alpha { alpha: 0.5 },
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(r.k, 2);
    }

    #[test]
    fn interval_engines_route() {
        let inst = parse_instance(
            r#"{"schema_version":1,"kind":"intervals","intervals":[[0,10],[1,2],[3,4]]}"#,
        )
        .unwrap();
        let (r, id) = run_query(&inst, &Query::K { k: 1 }, &SolveOptions::default()).unwrap();
        assert_eq!(r.nbd_size, 3);
        assert_eq!(id, "interval-general");

        let opts = SolveOptions {
            engine: Engine::IntervalFast,
            ..Default::default()
        };
        assert!(run_query(&inst, &Query::K { k: 1 }, &opts).is_err());
    }

    #[test]
    fn dot_export_shape() {
        let inst =
            parse_instance(r#"{"schema_version":1,"kind":"graph","n":2,"edges":[[0,1]]}"#).unwrap();
        let dot = export_dot(&inst).unwrap();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
    }
}
