// Runs every closed form against the cohomology oracle on a reduced grid.
// `svreg verify` runs the full default grid.
//
//     cargo run --release -p svreg --example verify_grid

use svreg::verify::{run_verification, VerifyConfig};

pub fn run_example() -> svreg::Result<()> {
    let cfg = VerifyConfig {
        max_l: 2,
        max_d: 3,
        range: 5,
        samples: 1_000,
        pairs: 100,
        ..VerifyConfig::default()
    };
    let report = run_verification(&cfg);
    for c in &report.checks {
        println!(
            "{:<55} {:>9} instances  {} failures",
            c.name, c.instances, c.failures
        );
    }
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> svreg::Result<()> {
    run_example()
}
