//! One-dimensional maximization along the boundary of `E`.

use super::{BoundFunction, Edge, Location, Method, OptimizationResult, OptimizeError};

/// Points in the coarse scan that seeds the bracket.
pub const SCAN_POINTS: usize = 2000;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes `g` on `[a, b]`: a uniform scan of `samples + 1` points picks
/// the best cell, and golden-section search refines inside its neighbours
/// until the bracket is shorter than `tol`. Returns `(t, g(t))`.
///
/// `g` may be multimodal at scales above the scan spacing; below it the
/// maximum is assumed unimodal.
pub fn maximize_1d<G>(g: G, a: f64, b: f64, samples: usize, tol: f64) -> (f64, f64)
where
    G: Fn(f64) -> f64,
{
    if a == b {
        return (a, g(a));
    }
    let samples = samples.max(2);
    let at = |k: usize| if k == samples { b } else { a + (b - a) * k as f64 / samples as f64 };
    let (mut best_k, mut best_v) = (0, g(a));
    for k in 1..=samples {
        let v = g(at(k));
        if v > best_v {
            best_k = k;
            best_v = v;
        }
    }
    let mut lo = at(best_k.saturating_sub(1));
    let mut hi = at((best_k + 1).min(samples));
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut gc = g(c);
    let mut gd = g(d);
    while hi - lo > tol {
        if gc >= gd {
            hi = d;
            d = c;
            gd = gc;
            c = hi - INV_PHI * (hi - lo);
            gc = g(c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + INV_PHI * (hi - lo);
            gd = g(d);
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
            break;
        }
    }
    let mut best = (at(best_k), best_v);
    for (t, v) in [(c, gc), (d, gd)] {
        if v > best.1 {
            best = (t, v);
        }
    }
    best
}

/// Maximum of `function` restricted to one boundary piece.
pub fn boundary_max(
    function: BoundFunction,
    edge: Edge,
    tol: f64,
) -> Result<OptimizationResult, OptimizeError> {
    if !(tol > 0.0) {
        return Err(OptimizeError::InvalidTolerance(tol));
    }
    let (a, b) = edge.domain();
    let restricted = |t: f64| function.evaluate_on_edge(edge, t).unwrap_or(f64::NEG_INFINITY);
    let (t, _) = maximize_1d(restricted, a, b, SCAN_POINTS, tol);
    let (x, y) = edge.point(t);
    Ok(OptimizationResult {
        function,
        value: function.evaluate_on_edge(edge, t)?,
        argmax: (x, y),
        location: Location::Edge(edge),
        method: Method::Newton,
        enclosure: None,
    })
}
