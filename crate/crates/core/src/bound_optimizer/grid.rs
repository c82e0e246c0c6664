use super::{BoundFunction, Location, Method, OptimizationResult, Region};

/// Grid adapted to `E`: `nx` abscissae `x_i = i/(nx-1)` and, on each, `ny`
/// ordinates spread evenly over `[0, y_max(x_i)]`, so the curve edge is
/// sampled exactly.
pub fn grid_points(nx: usize, ny: usize) -> impl Iterator<Item = (f64, f64)> {
    assert!(nx >= 2 && ny >= 2, "grid needs at least 2 points per axis");
    (0..nx).flat_map(move |i| {
        let x = i as f64 / (nx - 1) as f64;
        let top = Region::y_max(x);
        (0..ny).map(move |j| (x, top * j as f64 / (ny - 1) as f64))
    })
}

/// Maximum of `function` over [`grid_points`]. Every grid point lies in
/// `E`, so the result is a lower bound on the true maximum.
pub fn grid_oracle(function: BoundFunction, nx: usize, ny: usize) -> f64 {
    grid_values(function, nx, ny)
        .map(|(_, _, v)| v)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `(x, y, value)` over [`grid_points`]; the top point of each column is
/// evaluated on the curve edge exactly.
pub fn grid_values(function: BoundFunction, nx: usize, ny: usize) -> impl Iterator<Item = (f64, f64, f64)> {
    grid_points(nx, ny).enumerate().filter_map(move |(k, (x, y))| {
        let value = if k % ny == ny - 1 {
            function.evaluate_on_curve(x)
        } else {
            function.evaluate(x, y)
        };
        value.ok().map(|v| (x, y, v))
    })
}

/// Best grid point as an [`OptimizationResult`]; ties go to the first point
/// in x-major order.
pub fn grid_max(function: BoundFunction, nx: usize, ny: usize) -> OptimizationResult {
    let (x, y, value) = grid_values(function, nx, ny)
        .reduce(|best, c| if c.2 > best.2 { c } else { best })
        .expect("the grid is never empty");
    OptimizationResult {
        function,
        value,
        argmax: (x, y),
        location: Location::classify(x, y),
        method: Method::Grid,
        enclosure: None,
    }
}
