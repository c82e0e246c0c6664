//! Global maximization of the bound objectives over the region `E`.
//!
//! Three independent routes are provided:
//!
//! * [`global_max`]: damped Newton on the gradient system from a multi-start
//!   grid, plus 1D maximization along each boundary piece;
//! * [`certified_max`]: interval branch-and-bound returning a rigorous
//!   enclosure `[lo, hi]` of the maximum;
//! * [`grid_oracle`]: a dense brute-force scan, used as a sanity oracle.

mod branch_bound;
mod grid;
mod line_search;
mod newton;
mod objective;

use std::fmt;

use thiserror::Error;

pub use branch_bound::{certified_max, certified_max_with, CertifiedConfig, DEFAULT_BOX_CAP};
pub use grid::{grid_max, grid_oracle, grid_points, grid_values};
pub use line_search::{boundary_max, maximize_1d, SCAN_POINTS};
pub use newton::{interior_critical_points, NewtonConfig};
pub use objective::{BoundFunction, Edge, Region, RADICAND_GUARD};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OptimizeError {
    #[error("point ({x}, {y}) lies outside the region E")]
    OutsideRegion { x: f64, y: f64 },
    #[error("branch-and-bound exceeded {cap} boxes before reaching the requested width (best enclosure [{lo}, {hi}])")]
    BudgetExceeded { cap: usize, lo: f64, hi: f64 },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
}

/// Where on `E` an optimum was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Edge(Edge),
}

impl Location {
    pub fn name(self) -> &'static str {
        match self {
            Location::Interior => "interior",
            Location::Edge(e) => e.name(),
        }
    }

    /// Closest description of an arbitrary point of `E`.
    pub fn classify(x: f64, y: f64) -> Self {
        const TOL: f64 = 1e-9;
        if x >= 1.0 - TOL && y <= TOL {
            Location::Edge(Edge::X1)
        } else if y <= TOL {
            Location::Edge(Edge::Y0)
        } else if x <= TOL {
            Location::Edge(Edge::X0)
        } else if Region::radicand(x, y) <= TOL {
            Location::Edge(Edge::Curve)
        } else {
            Location::Interior
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Newton,
    Grid,
    Certified,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Newton => "newton",
            Method::Grid => "grid",
            Method::Certified => "certified",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub function: BoundFunction,
    pub value: f64,
    pub argmax: (f64, f64),
    pub location: Location,
    pub method: Method,
    /// Rigorous `[lo, hi]` around the global maximum, certified runs only.
    pub enclosure: Option<(f64, f64)>,
}

/// Orders candidates by value, breaking exact ties toward smaller `x`, then
/// smaller `y`.
fn better(a: &OptimizationResult, b: &OptimizationResult) -> bool {
    match a.value.total_cmp(&b.value) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            (a.argmax.0, a.argmax.1) < (b.argmax.0, b.argmax.1)
        }
    }
}

/// Largest of the interior critical values and the four boundary maxima.
pub fn global_max(function: BoundFunction, tol: f64) -> Result<OptimizationResult, OptimizeError> {
    if !(tol > 0.0) {
        return Err(OptimizeError::InvalidTolerance(tol));
    }
    let interior = interior_critical_points(function, tol.min(1e-10))?;
    let edges = Edge::ALL
        .into_iter()
        .map(|e| boundary_max(function, e, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let best = interior
        .into_iter()
        .chain(edges)
        .reduce(|best, c| if better(&c, &best) { c } else { best })
        .expect("four boundary candidates always exist");
    Ok(best)
}

/// Constants reported for the third Hankel determinant.
pub const H31_THEOREM_LABEL: &str = "1.83056";
/// The value announced in the overview of results; shown, never asserted.
pub const H31_INTRODUCTION_LABEL: &str = "2.321434";

/// `B1 + B2` split of the third Hankel determinant bound.
#[derive(Debug, Clone, PartialEq)]
pub struct H31Bound {
    /// Maximum of PHI1, bounding `B1`.
    pub b1: OptimizationResult,
    /// Maximum of PHI2; `B2 <= 4 * max(PHI2)^2`.
    pub phi2: OptimizationResult,
    pub b2: f64,
    pub total: f64,
}

pub fn theorem_h31_bound(tol: f64) -> Result<H31Bound, OptimizeError> {
    let b1 = global_max(BoundFunction::Phi1, tol)?;
    let phi2 = global_max(BoundFunction::Phi2, tol)?;
    Ok(h31_from_parts(b1, phi2))
}

/// Same split, with both maxima taken from certified enclosures. `b2` and
/// `total` are computed from the upper ends of the enclosures.
pub fn theorem_h31_certified(eps: f64, box_cap: usize) -> Result<H31Bound, OptimizeError> {
    let config = CertifiedConfig { eps, box_cap };
    let b1 = certified_max_with(BoundFunction::Phi1, &config)?;
    let phi2 = certified_max_with(BoundFunction::Phi2, &config)?;
    let hi = |r: &OptimizationResult| r.enclosure.map_or(r.value, |(_, hi)| hi);
    let b2 = 4.0 * hi(&phi2) * hi(&phi2);
    let total = hi(&b1) + b2;
    Ok(H31Bound { b1, phi2, b2, total })
}

fn h31_from_parts(b1: OptimizationResult, phi2: OptimizationResult) -> H31Bound {
    let b2 = 4.0 * phi2.value * phi2.value;
    let total = b1.value + b2;
    H31Bound { b1, phi2, b2, total }
}
