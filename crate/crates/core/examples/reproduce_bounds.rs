// Global maxima of the four single-objective bounds by multistart Newton
// plus boundary line searches.

use std::error::Error;

use grunsky_bounds::bound_optimizer::{global_max, BoundFunction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let expected = [
        (BoundFunction::F1, "|gamma_3|", 0.5566178..0.5566179),
        (BoundFunction::F2, "|a_4| - |a_3|", 1.751853..1.751854),
        (BoundFunction::F3, "|a_2 a_3 - a_4|", 2.10064..2.10065),
        (BoundFunction::F4, "|H_2(2)|", 1.3614356..1.3614357),
    ];
    for (function, functional, window) in expected {
        let r = global_max(function, 1e-12)?;
        println!(
            "{functional:<16} <= {:.9}  ({function} at ({:.6}, {:.6}), {})",
            r.value, r.argmax.0, r.argmax.1, r.location
        );
        assert!(window.contains(&r.value));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
