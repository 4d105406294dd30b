// Cohomology of line bundles on P^1 x P^2 and the checks that tie it together.
//
//     cargo run -p svreg --example cohomology_tables

use svreg::{cohomology_x, euler_characteristic, serre_dual, EmbeddingData, MultiDegree};

pub fn run_example() -> svreg::Result<()> {
    let e = EmbeddingData::new(vec![1, 2], vec![1, 1])?;
    println!(
        "X = P^1 x P^2, n = {}, Segre target P^{}",
        e.n(),
        e.ambient_dim()
    );
    println!(
        "{:>10}  {:>6}  {:>10}  {:>6}",
        "a", "degree", "dimension", "chi"
    );
    for a1 in -3..=1 {
        for a2 in [-4, -1, 0, 2] {
            let a = MultiDegree::new(vec![a1, a2]);
            let h = cohomology_x(&e, &a)?;
            let chi = euler_characteristic(&e, &a)?;
            let degree = h.degree().map_or("-".to_string(), |d| d.to_string());
            println!(
                "{:>10}  {degree:>6}  {:>10}  {chi:>6}",
                a.to_string(),
                h.dimension()
            );

            // Serre duality swaps degree i with n - i.
            let dual = cohomology_x(&e, &serre_dual(&e, &a)?)?;
            assert_eq!(h.dimension(), dual.dimension());
            assert_eq!(h.signed_total(), chi);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> svreg::Result<()> {
    run_example()
}
