//! Geometric instances: axis-parallel unit squares, unit disks, unit-height
//! rectangles and arbitrary disks, all stabbed by one straight line, plus the
//! strip/box machinery and the box-subset DP that solves maximum dominating
//! k-set on their intersection graphs.

mod dp;
mod strip;

pub use dp::{solve_geometric, GeoOptions};
pub use strip::{build_decomposition, strip_params, sub_box_of, StripDecomposition, StripParams};

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

pub(crate) const GEOM_EPS: f64 = 1e-9;

/// Object family of a geometric instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    /// Axis-parallel squares of side 1.
    UnitSquare,
    /// Disks of diameter 1.
    UnitDisk,
    /// Axis-parallel rectangles of height 1 and width at least 1.
    RectUnitHeight,
    /// Disks of arbitrary positive diameter.
    Disk,
}

/// The stabbing line `y = x tan(theta) + c`, with `theta` normalized to
/// `(-90, 90]` degrees. `theta = 90` encodes the vertical line `x = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabLine {
    theta_deg: f64,
    intercept: f64,
}

impl StabLine {
    pub fn from_degrees(theta_deg: f64, intercept: f64) -> Result<Self> {
        if !theta_deg.is_finite() || !intercept.is_finite() {
            return Err(Error::invalid("line parameters must be finite"));
        }
        let mut t = theta_deg % 180.0;
        if t > 90.0 {
            t -= 180.0;
        } else if t <= -90.0 {
            t += 180.0;
        }
        Ok(StabLine {
            theta_deg: t,
            intercept,
        })
    }

    pub fn theta_deg(&self) -> f64 {
        self.theta_deg
    }

    pub fn theta_rad(&self) -> f64 {
        self.theta_deg.to_radians()
    }

    pub fn intercept(&self) -> f64 {
        self.intercept
    }

    /// True once the angle is symmetry-reduced into `[0, 45]` degrees.
    pub fn is_canonical(&self) -> bool {
        (-GEOM_EPS..=45.0 + GEOM_EPS).contains(&self.theta_deg)
    }

    /// Unit direction along the line.
    pub(crate) fn direction(&self) -> (f64, f64) {
        let t = self.theta_rad();
        (t.cos(), t.sin())
    }

    /// Unit normal to the line.
    pub(crate) fn normal(&self) -> (f64, f64) {
        let t = self.theta_rad();
        (-t.sin(), t.cos())
    }

    fn point_on(&self) -> (f64, f64) {
        if (self.theta_deg - 90.0).abs() <= GEOM_EPS {
            (self.intercept, 0.0)
        } else {
            (0.0, self.intercept)
        }
    }

    /// Signed distance from a point to the line.
    pub fn signed_dist(&self, x: f64, y: f64) -> f64 {
        let (px, py) = self.point_on();
        let (nx, ny) = self.normal();
        (x - px) * nx + (y - py) * ny
    }

    /// Coordinate of a point's projection along the line.
    pub fn along(&self, x: f64, y: f64) -> f64 {
        let (dx, dy) = self.direction();
        x * dx + y * dy
    }
}

/// One geometric object. `extent` is the width for unit-height rectangles,
/// the diameter for disks, and fixed at 1 for unit squares and unit disks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Obj {
    pub cx: f64,
    pub cy: f64,
    pub extent: f64,
}

impl Obj {
    pub fn point(cx: f64, cy: f64) -> Self {
        Obj {
            cx,
            cy,
            extent: 1.0,
        }
    }

    pub fn with_extent(cx: f64, cy: f64, extent: f64) -> Self {
        Obj { cx, cy, extent }
    }
}

/// Half the support of an object in the direction of the line normal: the
/// largest center-to-line distance at which the object still touches the
/// line.
pub(crate) fn max_center_dist(kind: ShapeKind, obj: &Obj, line: &StabLine) -> f64 {
    let (nx, ny) = line.normal();
    match kind {
        ShapeKind::UnitSquare => (nx.abs() + ny.abs()) / 2.0,
        ShapeKind::RectUnitHeight => (obj.extent * nx.abs() + ny.abs()) / 2.0,
        ShapeKind::UnitDisk | ShapeKind::Disk => obj.extent / 2.0,
    }
}

/// A typed set of objects all intersected by one line.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricInstance {
    pub kind: ShapeKind,
    pub line: StabLine,
    pub objects: Vec<Obj>,
}

impl GeometricInstance {
    /// Validates extents, finiteness and that every object touches the line.
    pub fn new(kind: ShapeKind, line: StabLine, objects: Vec<Obj>) -> Result<Self> {
        for (i, o) in objects.iter().enumerate() {
            if !(o.cx.is_finite() && o.cy.is_finite() && o.extent.is_finite()) {
                return Err(Error::invalid(format!("object {i} has non-finite fields")));
            }
            match kind {
                ShapeKind::UnitSquare | ShapeKind::UnitDisk => {
                    if (o.extent - 1.0).abs() > GEOM_EPS {
                        return Err(Error::invalid(format!(
                            "object {i}: unit shapes have extent 1"
                        )));
                    }
                }
                ShapeKind::RectUnitHeight => {
                    if o.extent < 1.0 - GEOM_EPS {
                        return Err(Error::invalid(format!(
                            "object {i}: rectangle width {} below 1",
                            o.extent
                        )));
                    }
                }
                ShapeKind::Disk => {
                    if o.extent <= GEOM_EPS {
                        return Err(Error::invalid(format!(
                            "object {i}: diameter must be positive"
                        )));
                    }
                }
            }
        }
        let inst = GeometricInstance {
            kind,
            line,
            objects,
        };
        inst.check_stabbed()?;
        Ok(inst)
    }

    fn check_stabbed(&self) -> Result<()> {
        let offenders: Vec<usize> = self
            .objects
            .iter()
            .enumerate()
            .filter(|(_, o)| {
                self.line.signed_dist(o.cx, o.cy).abs()
                    > max_center_dist(self.kind, o, &self.line) + GEOM_EPS
            })
            .map(|(i, _)| i)
            .collect();
        if offenders.is_empty() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "objects not intersected by the line: {offenders:?}"
            )))
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Reduces the line angle into `[0, 45]` degrees by axis reflections and,
    /// for squares and disks, an axis swap; all transforms preserve the
    /// intersection graph. Unit-height rectangles are not swap-symmetric, so
    /// lines steeper than 45 degrees are rejected for them.
    pub fn canonicalize(&self) -> Result<GeometricInstance> {
        let mut theta = self.line.theta_deg();
        let mut intercept = self.line.intercept();
        let mut objects = self.objects.clone();

        if self.kind == ShapeKind::RectUnitHeight && theta.abs() > 45.0 + GEOM_EPS {
            return Err(Error::invalid(format!(
                "rectangle instances support line angles in [-45, 45] degrees, got {theta}"
            )));
        }
        if theta < -GEOM_EPS {
            // reflect across the x-axis
            theta = -theta;
            intercept = -intercept;
            for o in &mut objects {
                o.cy = -o.cy;
            }
        }
        if theta > 45.0 + GEOM_EPS {
            // swap axes
            for o in &mut objects {
                std::mem::swap(&mut o.cx, &mut o.cy);
            }
            if (theta - 90.0).abs() <= GEOM_EPS {
                theta = 0.0;
            } else {
                intercept = -intercept / theta.to_radians().tan();
                theta = 90.0 - theta;
            }
        }
        let theta = theta.clamp(0.0, 45.0);
        let inst = GeometricInstance {
            kind: self.kind,
            line: StabLine::from_degrees(theta, intercept)?,
            objects,
        };
        inst.check_stabbed()?;
        Ok(inst)
    }
}

/// Closed-shape intersection with absolute tolerance.
pub fn intersects(kind: ShapeKind, a: &Obj, b: &Obj) -> bool {
    let dx = (a.cx - b.cx).abs();
    let dy = (a.cy - b.cy).abs();
    match kind {
        ShapeKind::UnitSquare => dx <= 1.0 + GEOM_EPS && dy <= 1.0 + GEOM_EPS,
        ShapeKind::RectUnitHeight => {
            dx <= (a.extent + b.extent) / 2.0 + GEOM_EPS && dy <= 1.0 + GEOM_EPS
        }
        ShapeKind::UnitDisk | ShapeKind::Disk => {
            let r = (a.extent + b.extent) / 2.0 + GEOM_EPS;
            dx * dx + dy * dy <= r * r
        }
    }
}

/// Intersection graph over object indices.
pub fn intersection_graph(inst: &GeometricInstance) -> Graph {
    let n = inst.objects.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if intersects(inst.kind, &inst.objects[i], &inst.objects[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("object indices are in range")
}
