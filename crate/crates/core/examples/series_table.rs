// Taylor prefix, odd square-root transform and Grunsky table of the Koebe
// function.

use std::error::Error;

use grunsky_bounds::grunsky::{table_for, TestFunction};
use grunsky_bounds::power_series::sqrt_transform;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let koebe = TestFunction::Koebe;
    let f = koebe.series(10);
    let f2 = sqrt_transform(&f)?;
    println!("f  = {f}");
    println!("f2 = {f2}");

    let table = table_for(&koebe, 10)?;
    for (p, q, omega) in table.entries().filter(|(p, q, _)| p % 2 == 1 && q % 2 == 1) {
        println!("omega[{p},{q}] = {omega}");
    }
    assert_eq!(table.omega(1, 1)?.to_string(), "1");
    assert_eq!(table.omega(3, 3)?.to_string(), "1/3");
    assert!(table.is_symmetric());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
