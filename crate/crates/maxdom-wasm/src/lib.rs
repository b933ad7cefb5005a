//! Browser bindings for the interactive demo page. Three operations are
//! exported: generate an instance, solve a k-set query, and solve a partial
//! domination query. Solvers return a render-ready scene: objects, the
//! stabbing line, strip boxes, the chosen witness and everything it
//! dominates.
//!
//! The heavy lifting stays in plain functions over JSON strings so the crate
//! tests run on any host; the `#[wasm_bindgen]` exports are thin wrappers.

use maxdom::error::{Error, Result};
use maxdom::generate::{generate, GenKind, GenParams};
use maxdom::geometry::{build_decomposition, strip_params, GeometricInstance, ShapeKind};
use maxdom::graph::SolveResult;
use maxdom::instance::{
    emit_instance_pretty, parse_instance, run_query, to_geometric, to_graph, to_layout,
    InstanceFile, Query, SolveOptions,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn scene_objects(geo: &GeometricInstance) -> Value {
    let shape = match geo.kind {
        ShapeKind::UnitSquare => "square",
        ShapeKind::UnitDisk | ShapeKind::Disk => "disk",
        ShapeKind::RectUnitHeight => "rect",
    };
    Value::Array(
        geo.objects
            .iter()
            .map(|o| {
                let (w, h) = match geo.kind {
                    ShapeKind::UnitSquare => (1.0, 1.0),
                    ShapeKind::UnitDisk | ShapeKind::Disk => (o.extent, o.extent),
                    ShapeKind::RectUnitHeight => (o.extent, 1.0),
                };
                json!({"shape": shape, "cx": o.cx, "cy": o.cy, "w": w, "h": h})
            })
            .collect(),
    )
}

fn strip_boxes(geo: &GeometricInstance) -> Value {
    let canon = match geo.canonicalize() {
        Ok(c) => c,
        Err(_) => return Value::Null,
    };
    let theta = canon.line.theta_rad();
    let (dmax, dmin) = canon.objects.iter().fold((0.0f64, f64::INFINITY), |acc, o| {
        (acc.0.max(o.extent), acc.1.min(o.extent))
    });
    let Ok(params) = strip_params(canon.kind, theta, dmax, dmin) else {
        return Value::Null;
    };
    let Ok(d) = build_decomposition(&canon, params, 16) else {
        return Value::Null;
    };
    let dir = (theta.cos(), theta.sin());
    let nrm = (-theta.sin(), theta.cos());
    let c = canon.line.intercept();
    let anchor = (0.0, c);
    let corner = |u: f64, w: f64| {
        json!([
            anchor.0 + u * dir.0 + w * nrm.0,
            anchor.1 + u * dir.1 + w * nrm.1
        ])
    };
    let half = params.width / 2.0;
    let boxes: Vec<Value> = (0..d.boxes.len())
        .map(|b| {
            let u0 = d.origin_u + b as f64 * params.box_len;
            let u1 = u0 + params.box_len;
            json!({
                "members": d.boxes[b],
                "corners": [corner(u0, -half), corner(u1, -half), corner(u1, half), corner(u0, half)],
            })
        })
        .collect();
    json!({
        "width": params.width,
        "box_len": params.box_len,
        "per_box_bound": params.per_box_bound,
        "boxes": boxes,
        "canonical_theta_deg": canon.line.theta_deg(),
        "objects": scene_objects(&canon),
    })
}

fn scene(inst: &InstanceFile, result: &SolveResult, query: &Query) -> Result<Value> {
    let g = to_graph(inst)?;
    let dominated =
        maxdom::graph::closed_neighborhood(&g, &result.chosen)?.members().to_vec();
    let mut scene = json!({
        "kind": inst.kind_name(),
        "n": inst.size(),
        "edges": g.edges(),
        "chosen": result.chosen.members(),
        "dominated": dominated,
        "nbd_size": result.nbd_size,
        "per_k": result.per_k,
        "query": serde_json::to_value(query)?,
    });
    if let Query::Alpha { .. } = query {
        scene["gamma"] = json!(result.k);
    }
    if let Some(layout) = to_layout(inst) {
        let layout = layout?;
        let mut rows: Vec<Value> = layout
            .intervals()
            .iter()
            .map(|iv| json!({"id": iv.orig, "lo": iv.lo, "hi": iv.hi}))
            .collect();
        rows.sort_by_key(|r| r["id"].as_u64());
        scene["intervals"] = Value::Array(rows);
    }
    if let Some(geo) = to_geometric(inst) {
        let geo = geo?;
        scene["objects"] = scene_objects(&geo);
        scene["line"] = json!({
            "theta_deg": geo.line.theta_deg(),
            "intercept": geo.line.intercept(),
        });
        scene["strip"] = strip_boxes(&geo);
    }
    Ok(scene)
}

/// Generate a deterministic instance; returns pretty-printed instance JSON.
pub fn generate_instance_impl(
    kind: &str,
    n: usize,
    seed: u64,
    theta_deg: f64,
) -> Result<String> {
    let kind: GenKind = kind.parse()?;
    let params = GenParams {
        theta_deg,
        intercept: 0.0,
        ..Default::default()
    };
    let inst = generate(kind, n, seed, &params)?;
    Ok(emit_instance_pretty(&inst))
}

fn run_and_render(instance_json: &str, query: Query) -> Result<String> {
    let inst = parse_instance(instance_json)?;
    let (result, solver) = run_query(&inst, &query, &SolveOptions::default())?;
    let mut s = scene(&inst, &result, &query)?;
    s["solver"] = json!(solver);
    Ok(s.to_string())
}

/// Solve a maximum dominating k-set query; returns a scene JSON.
pub fn solve_instance_impl(instance_json: &str, k: usize) -> Result<String> {
    run_and_render(instance_json, Query::K { k })
}

/// Solve a partial domination query; returns a scene JSON with `gamma`.
pub fn solve_partial_impl(instance_json: &str, alpha: f64) -> Result<String> {
    run_and_render(instance_json, Query::Alpha { alpha })
}

fn to_js(e: Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

#[wasm_bindgen]
pub fn generate_instance(
    kind: &str,
    n: usize,
    seed: u64,
    theta_deg: f64,
) -> std::result::Result<String, JsValue> {
    generate_instance_impl(kind, n, seed, theta_deg).map_err(to_js)
}

#[wasm_bindgen]
pub fn solve_instance(instance_json: &str, k: usize) -> std::result::Result<String, JsValue> {
    solve_instance_impl(instance_json, k).map_err(to_js)
}

#[wasm_bindgen]
pub fn solve_partial(
    instance_json: &str,
    alpha: f64,
) -> std::result::Result<String, JsValue> {
    solve_partial_impl(instance_json, alpha).map_err(to_js)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_then_solve_squares() {
        let inst = generate_instance_impl("unit_squares", 7, 11, 30.0).unwrap();
        let scene: serde_json::Value =
            serde_json::from_str(&solve_instance_impl(&inst, 2).unwrap()).unwrap();
        assert_eq!(scene["kind"], "unit_squares");
        assert_eq!(scene["chosen"].as_array().unwrap().len(), 2);
        assert!(!scene["strip"]["boxes"].as_array().unwrap().is_empty());
        assert!(scene["nbd_size"].as_u64().unwrap() >= 2);
    }

    #[test]
    fn partial_query_exposes_gamma() {
        let inst = generate_instance_impl("unit_intervals", 6, 3, 0.0).unwrap();
        let scene: serde_json::Value =
            serde_json::from_str(&solve_partial_impl(&inst, 0.5).unwrap()).unwrap();
        assert!(scene["gamma"].as_u64().unwrap() >= 1);
        assert!(scene["intervals"].as_array().unwrap().len() == 6);
    }

    #[test]
    fn graphs_render_edge_lists() {
        let inst = generate_instance_impl("graph", 6, 9, 0.0).unwrap();
        let scene: serde_json::Value =
            serde_json::from_str(&solve_instance_impl(&inst, 1).unwrap()).unwrap();
        assert!(scene["edges"].is_array());
        assert_eq!(scene["kind"], "graph");
    }

    #[test]
    fn bad_kind_is_an_error() {
        assert!(generate_instance_impl("heptagons", 3, 0, 0.0).is_err());
    }
}
