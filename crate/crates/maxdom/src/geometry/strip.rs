//! Strip and box decomposition: a band around the stabbing line holds every
//! object center; cutting it into equal boxes localizes intersections to
//! neighboring boxes, which is what the box DP relies on.

use super::{intersects, GeometricInstance, Obj, ShapeKind, GEOM_EPS};
use crate::error::{Error, Result};
use crate::graph::ceil_tol;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, SQRT_2};

/// Shape- and angle-dependent decomposition parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripParams {
    /// Strip width; the line splits it into two equal halves.
    pub width: f64,
    /// Box length along the line.
    pub box_len: f64,
    /// Upper bound on how many centers of one optimal solution a box must
    /// host; prunes the per-box subset enumeration.
    pub per_box_bound: usize,
    /// Side of the packing sub-boxes: two centers in one sub-box always
    /// intersect.
    pub sub_box_side: f64,
    /// Sub-box grid dimensions per box (across, along).
    pub sub_box_grid: (usize, usize),
}

/// Computes the strip geometry for a canonical line angle (radians, in
/// `[0, pi/4]`). `dmax`/`dmin` are the extreme diameters, used only for
/// arbitrary disks.
pub fn strip_params(
    kind: ShapeKind,
    theta_rad: f64,
    dmax: f64,
    dmin: f64,
) -> Result<StripParams> {
    if !((-GEOM_EPS)..=FRAC_PI_4 + GEOM_EPS).contains(&theta_rad) {
        return Err(Error::invalid(format!(
            "strip parameters need a canonical angle, got {theta_rad} rad"
        )));
    }
    match kind {
        ShapeKind::UnitSquare | ShapeKind::UnitDisk => {
            // widest point of a tilted unit square across the strip
            let width = theta_rad.sin() + theta_rad.cos();
            Ok(StripParams {
                width,
                box_len: width,
                per_box_bound: 11,
                sub_box_side: width / 2.0,
                sub_box_grid: (2, 2),
            })
        }
        ShapeKind::RectUnitHeight => {
            if theta_rad <= GEOM_EPS {
                return Err(Error::invalid(
                    "axis-parallel rectangles on a horizontal line form an interval \
                     graph; use the interval solver",
                ));
            }
            if (theta_rad - FRAC_PI_4).abs() <= GEOM_EPS {
                return Ok(StripParams {
                    width: SQRT_2,
                    box_len: 2.0 * SQRT_2,
                    per_box_bound: 23,
                    sub_box_side: FRAC_1_SQRT_2,
                    sub_box_grid: (2, 4),
                });
            }
            let (sin, cos) = (theta_rad.sin(), theta_rad.cos());
            let width = 2.0 * cos;
            let box_len = (1.0 + 2.0 * cos * cos) / sin;
            let across = ceil_tol(2.0 * SQRT_2 * cos);
            let along = ceil_tol(SQRT_2 * (1.0 + 2.0 * cos * cos) / sin);
            let p = across * along;
            Ok(StripParams {
                width,
                box_len,
                per_box_bound: 3 * p - 1,
                sub_box_side: FRAC_1_SQRT_2,
                sub_box_grid: (across, along),
            })
        }
        ShapeKind::Disk => {
            if dmin <= GEOM_EPS {
                return Err(Error::invalid("smallest diameter must be positive"));
            }
            if dmax < dmin {
                return Err(Error::invalid("largest diameter below smallest"));
            }
            let grid = ceil_tol(SQRT_2 * dmax / dmin).max(1);
            Ok(StripParams {
                width: dmax,
                box_len: dmax,
                per_box_bound: 3 * grid * grid - 1,
                sub_box_side: dmax / grid as f64,
                sub_box_grid: (grid, grid),
            })
        }
    }
}

/// Boxes laid along the strip from the leftmost center projection, with
/// per-box center membership. Empty boxes between occupied ones are retained
/// so box indices are geometric neighbors.
#[derive(Debug, Clone)]
pub struct StripDecomposition {
    pub params: StripParams,
    /// Along-line coordinate where box 0 starts.
    pub origin_u: f64,
    /// Object ids per box, in id order.
    pub boxes: Vec<Vec<usize>>,
    /// Box index per object.
    pub box_of: Vec<usize>,
    /// Center used for box membership: the object center, or for rectangles
    /// the center of an inscribed unit square pulled toward the line.
    pub centers: Vec<(f64, f64)>,
    /// Along-line coordinate per center.
    pub us: Vec<f64>,
}

const MAX_BOXES: usize = 1_000_000;

/// The box-membership center of an object. For rectangles this is the center
/// of the inscribed unit square closest to the line (a point of the
/// horizontal midline, clamped so the square fits); other shapes use their
/// own center.
fn strip_center(kind: ShapeKind, obj: &Obj, theta_rad: f64, intercept: f64) -> (f64, f64) {
    match kind {
        ShapeKind::RectUnitHeight => {
            let tan = theta_rad.tan();
            debug_assert!(tan > 0.0, "rectangles need a strictly positive angle");
            let line_x = (obj.cy - intercept) / tan;
            let half_slide = (obj.extent - 1.0) / 2.0;
            let sx = line_x.clamp(obj.cx - half_slide, obj.cx + half_slide);
            (sx, obj.cy)
        }
        _ => (obj.cx, obj.cy),
    }
}

/// Cuts the strip into boxes and assigns every center to exactly one box
/// (half-open boxes, closed on the low side: boundary centers go right).
/// Fails loudly if a box collects more centers than the enumeration budget
/// or if two intersecting objects land more than one box apart.
pub fn build_decomposition(
    inst: &GeometricInstance,
    params: StripParams,
    box_budget: usize,
) -> Result<StripDecomposition> {
    debug_assert!(inst.line.is_canonical());
    let n = inst.objects.len();
    let theta = inst.line.theta_rad();
    let centers: Vec<(f64, f64)> = inst
        .objects
        .iter()
        .map(|o| strip_center(inst.kind, o, theta, inst.line.intercept()))
        .collect();
    let us: Vec<f64> = centers.iter().map(|&(x, y)| inst.line.along(x, y)).collect();
    debug_assert!(centers
        .iter()
        .all(|&(x, y)| inst.line.signed_dist(x, y).abs() <= params.width / 2.0 + 1e-6));

    let origin_u = us.iter().copied().fold(f64::INFINITY, f64::min);
    let box_of: Vec<usize> = us
        .iter()
        .map(|&u| ((u - origin_u) / params.box_len + GEOM_EPS).floor() as usize)
        .collect();
    let num_boxes = box_of.iter().max().map_or(0, |&b| b + 1);
    if num_boxes > MAX_BOXES {
        return Err(Error::budget(format!(
            "strip spans {num_boxes} boxes, beyond the {MAX_BOXES} cap"
        )));
    }
    let mut boxes = vec![Vec::new(); num_boxes];
    for (id, &b) in box_of.iter().enumerate() {
        boxes[b].push(id);
    }
    if let Some((b, members)) = boxes
        .iter()
        .enumerate()
        .find(|(_, m)| m.len() > box_budget)
    {
        return Err(Error::budget(format!(
            "box {b} holds {} centers, beyond the per-box enumeration budget {box_budget}",
            members.len()
        )));
    }
    // intersecting objects must sit in the same or adjacent boxes
    for i in 0..n {
        for j in i + 1..n {
            if intersects(inst.kind, &inst.objects[i], &inst.objects[j])
                && box_of[i].abs_diff(box_of[j]) > 1
            {
                return Err(Error::contract(format!(
                    "objects {i} and {j} intersect but sit {} boxes apart",
                    box_of[i].abs_diff(box_of[j])
                )));
            }
        }
    }
    Ok(StripDecomposition {
        params,
        origin_u,
        boxes,
        box_of,
        centers,
        us,
    })
}

/// Packing cell of an object's center: `(box, across index, along index)`.
/// Two centers in the same cell always belong to intersecting objects.
pub fn sub_box_of(inst: &GeometricInstance, decomp: &StripDecomposition, id: usize) -> (usize, usize, usize) {
    let b = decomp.box_of[id];
    let (x, y) = decomp.centers[id];
    let across_coord = inst.line.signed_dist(x, y) + decomp.params.width / 2.0;
    let along_coord = decomp.us[id] - (decomp.origin_u + b as f64 * decomp.params.box_len);
    let s = decomp.params.sub_box_side;
    let gx = ((across_coord / s + GEOM_EPS).floor().max(0.0) as usize)
        .min(decomp.params.sub_box_grid.0 - 1);
    let gy = ((along_coord / s + GEOM_EPS).floor().max(0.0) as usize)
        .min(decomp.params.sub_box_grid.1 - 1);
    (b, gx, gy)
}
