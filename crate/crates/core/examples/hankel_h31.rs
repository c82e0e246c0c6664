// The third Hankel determinant bound as B1 + B2, both reported labels, and
// the curve-edge maximum of F1 that exceeds 1/sqrt(5).

use std::error::Error;

use grunsky_bounds::bound_optimizer::{
    boundary_max, theorem_h31_bound, theorem_h31_certified, BoundFunction, Edge, DEFAULT_BOX_CAP,
    H31_INTRODUCTION_LABEL, H31_THEOREM_LABEL,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = theorem_h31_bound(1e-12)?;
    println!("B1 = max PHI1       = {:.10} ({})", h.b1.value, h.b1.location);
    println!("B2 = 4 (max PHI2)^2 = {:.10} (64/75 = {:.10})", h.b2, 64.0 / 75.0);
    println!("|H_3(1)| <= {:.10}", h.total);
    println!("labels: {H31_THEOREM_LABEL} (theorem), {H31_INTRODUCTION_LABEL} (introduction)");

    let certified = theorem_h31_certified(1e-9, DEFAULT_BOX_CAP)?;
    println!("certified total <= {:.10}", certified.total);
    assert!(certified.total >= h.total);

    let curve = boundary_max(BoundFunction::F1, Edge::Curve, 1e-12)?;
    println!(
        "F1 on the curve edge peaks at x = {:.6} with {:.6} > 1/sqrt(5) = {:.6}",
        curve.argmax.0,
        curve.value,
        1.0 / 5f64.sqrt()
    );
    assert!(curve.value > 1.0 / 5f64.sqrt());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
