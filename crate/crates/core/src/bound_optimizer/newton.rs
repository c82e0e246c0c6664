use super::{BoundFunction, Location, Method, OptimizationResult, OptimizeError, Region};

/// Multi-start damped Newton settings for the interior gradient system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonConfig {
    /// Starts per axis; the grid is `starts × starts`.
    pub starts: usize,
    pub max_iterations: usize,
    /// Step halvings tried before a start is abandoned.
    pub max_halvings: usize,
    /// Roots closer than this are the same root.
    pub dedup_distance: f64,
    /// Roots closer than this to the boundary are not interior.
    pub boundary_margin: f64,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        Self {
            starts: 50,
            max_iterations: 100,
            max_halvings: 30,
            dedup_distance: 1e-6,
            boundary_margin: 1e-7,
        }
    }
}

/// All interior zeros of the gradient, sorted by `x` then `y`.
pub fn interior_critical_points(
    function: BoundFunction,
    tol: f64,
) -> Result<Vec<OptimizationResult>, OptimizeError> {
    interior_critical_points_with(function, tol, &NewtonConfig::default())
}

pub fn interior_critical_points_with(
    function: BoundFunction,
    tol: f64,
    config: &NewtonConfig,
) -> Result<Vec<OptimizationResult>, OptimizeError> {
    if !(tol > 0.0) {
        return Err(OptimizeError::InvalidTolerance(tol));
    }
    let n = config.starts as f64;
    let mut roots: Vec<(f64, f64)> = Vec::new();
    for i in 0..config.starts {
        let x0 = (i as f64 + 0.5) / n;
        for j in 0..config.starts {
            let y0 = (j as f64 + 0.5) / n * Region::y_max(x0);
            let Some(root) = newton(function, (x0, y0), tol, config) else {
                continue;
            };
            if !Region::is_interior(root.0, root.1, config.boundary_margin) {
                continue;
            }
            let seen = roots
                .iter()
                .any(|r| (r.0 - root.0).hypot(r.1 - root.1) < config.dedup_distance);
            if !seen {
                roots.push(root);
            }
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    roots
        .into_iter()
        .map(|(x, y)| {
            Ok(OptimizationResult {
                function,
                value: function.evaluate(x, y)?,
                argmax: (x, y),
                location: Location::Interior,
                method: Method::Newton,
                enclosure: None,
            })
        })
        .collect()
}

fn norm(g: [f64; 2]) -> f64 {
    g[0].hypot(g[1])
}

fn newton(
    function: BoundFunction,
    start: (f64, f64),
    tol: f64,
    config: &NewtonConfig,
) -> Option<(f64, f64)> {
    let inside = |p: (f64, f64)| Region::is_interior(p.0, p.1, 0.0);
    let mut p = start;
    let mut g = function.gradient(p.0, p.1).ok()?;
    for _ in 0..config.max_iterations {
        let gn = norm(g);
        if gn < tol {
            return Some(p);
        }
        let h = function.hessian(p.0, p.1).ok()?;
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dx = -(h[1][1] * g[0] - h[0][1] * g[1]) / det;
        let dy = -(-h[1][0] * g[0] + h[0][0] * g[1]) / det;

        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..=config.max_halvings {
            let q = (p.0 + step * dx, p.1 + step * dy);
            if inside(q) {
                if let Ok(gq) = function.gradient(q.0, q.1) {
                    if norm(gq) < gn {
                        accepted = Some((q, gq));
                        break;
                    }
                }
            }
            step *= 0.5;
        }
        let (q, gq) = accepted?;
        p = q;
        g = gq;
    }
    (norm(g) < tol).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_single_critical_point() {
        let pts = interior_critical_points(BoundFunction::F1, 1e-10).unwrap();
        assert_eq!(pts.len(), 1, "{pts:?}");
        let p = &pts[0];
        assert!((p.argmax.0 - 0.81267).abs() < 1e-4 && (p.argmax.1 - 0.243532).abs() < 1e-4);
        assert!((0.5566178..0.5566179).contains(&p.value));
    }

    #[test]
    fn f2_single_critical_point() {
        let pts = interior_critical_points(BoundFunction::F2, 1e-10).unwrap();
        assert_eq!(pts.len(), 1, "{pts:?}");
        let p = &pts[0];
        assert!((p.argmax.0 - 0.836343).abs() < 1e-4 && (p.argmax.1 - 0.2872063).abs() < 1e-4);
        assert!((1.751853..1.751854).contains(&p.value));
    }

    #[test]
    fn phi2_critical_point() {
        // The gradient system gives x = sqrt(3) y and 1 - x^2 - 3y^2 = 3/5,
        // so the point is (1/sqrt(5), 1/sqrt(15)) with value 4/(5 sqrt(3)).
        let pts = interior_critical_points(BoundFunction::Phi2, 1e-10).unwrap();
        assert_eq!(pts.len(), 1, "{pts:?}");
        let p = &pts[0];
        assert!((p.argmax.0 - 1.0 / 5f64.sqrt()).abs() < 1e-9);
        assert!((p.argmax.1 - 1.0 / 15f64.sqrt()).abs() < 1e-9);
        assert!((p.value - 4.0 / (5.0 * 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn f3_and_phi1_have_no_interior_critical_points() {
        assert!(interior_critical_points(BoundFunction::F3, 1e-10).unwrap().is_empty());
        assert!(interior_critical_points(BoundFunction::Phi1, 1e-10).unwrap().is_empty());
    }

    #[test]
    fn f4_critical_point_is_rational() {
        let pts = interior_critical_points(BoundFunction::F4, 1e-10).unwrap();
        assert_eq!(pts.len(), 1, "{pts:?}");
        let p = &pts[0];
        assert!((p.argmax.0 - (11.0f64 / 30.0).sqrt()).abs() < 1e-9);
        assert!((p.argmax.1 - (281.0f64 / 1800.0).sqrt()).abs() < 1e-9);
        assert!((p.value - 1079.0 / 900.0).abs() < 1e-9);
    }

    #[test]
    fn residual_below_tolerance() {
        for f in BoundFunction::ALL {
            for p in interior_critical_points(f, 1e-10).unwrap() {
                let g = f.gradient(p.argmax.0, p.argmax.1).unwrap();
                assert!(norm(g) < 1e-10, "{f}: {g:?}");
            }
        }
    }
}
