// Rigorous enclosures of every objective's maximum by interval
// branch-and-bound, cross-checked against the floating-point optimizer.

use std::error::Error;

use grunsky_bounds::bound_optimizer::{certified_max, global_max, BoundFunction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for function in BoundFunction::ALL {
        let certified = certified_max(function, 1e-6)?;
        let (lo, hi) = certified.enclosure.expect("certified runs carry an enclosure");
        let float = global_max(function, 1e-12)?;
        println!("{function:<5} max in [{lo:.10}, {hi:.10}]  (newton {:.10})", float.value);
        assert!(lo <= float.value && float.value <= hi);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
