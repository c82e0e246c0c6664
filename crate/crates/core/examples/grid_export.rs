// Plot-ready CSV of an objective on a grid clipped to E, written through
// the command-line entry point.

use std::error::Error;

use grunsky_bounds::cli;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = std::env::temp_dir().join(format!("grunsky-grid-{}.csv", std::process::id()));
    let args = ["grunsky", "grid", "--target", "f4", "--nx", "41", "--ny", "41", "--out"];
    let code = cli::run_with(
        args.iter().map(|a| a.to_string()).chain([path.display().to_string()]),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    assert_eq!(code, 0);
    let csv = std::fs::read_to_string(&path)?;
    std::fs::remove_file(&path)?;
    let rows = csv.lines().count() - 1;
    println!("wrote {rows} rows to {}", path.display());
    println!("{}", csv.lines().take(4).collect::<Vec<_>>().join("\n"));
    assert!(csv.starts_with("x,y,value\n"));
    assert!(csv.lines().any(|l| l == "1,0,1"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
