// Exact checks of the coefficient identities and of every functional
// rewritten in terms of Grunsky coefficients, for the test catalogue.

use std::error::Error;

use grunsky_bounds::functionals::functional_reports;
use grunsky_bounds::grunsky::{table_for, verify_lebedev_identities, TestFunction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut checked = 0;
    for function in TestFunction::CATALOGUE {
        let f = function.series(10);
        let report = verify_lebedev_identities(&f)?;
        for r in &report.residuals {
            println!("{function:<10} {:<11} residual {}", r.name, r.value);
        }
        assert!(report.all_zero());
        checked += report.residuals.len();

        let table = table_for(&function, 10)?;
        for r in functional_reports(&f, &table)? {
            println!("{function:<10} {:<28} {} = {}", r.name, r.direct, r.via_omega);
            assert!(r.agrees());
        }
    }
    println!("{checked} identities checked, all exactly zero");
    assert_eq!(checked, 15);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
