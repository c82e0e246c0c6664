// Slack in the truncated Grunsky quadratic form; the Koebe function makes
// it vanish.

use std::error::Error;

use grunsky_bounds::grunsky::{grunsky_form_slack, table_for, QuadraticFormWeights, TestFunction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let weights = [vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0], vec![1.0, -1.0], vec![2.0, 3.0]];
    for function in TestFunction::CATALOGUE {
        let table = table_for(&function, 10)?;
        for w in &weights {
            for qmax in 1..=3 {
                let slack = grunsky_form_slack(&table, &QuadraticFormWeights(w.clone()), qmax)?;
                println!("{function:<10} x = {w:?} qmax = {qmax}: slack {slack:.3e}");
                assert!(slack >= -1e-12);
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
