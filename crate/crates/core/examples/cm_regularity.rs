// Castelnuovo-Mumford regularity of Segre-Veronese pushforwards, the Segre
// closed form, and the ideal-sheaf bound.
//
//     cargo run -p svreg --example cm_regularity

use svreg::regularity::regularity_table;
use svreg::{
    cm_regularity, cm_regularity_with_witness, ideal_sheaf_lambda, segre_regularity_r2,
    EmbeddingData, MultiDegree,
};

pub fn run_example() -> svreg::Result<()> {
    let e = EmbeddingData::new(vec![2, 1, 3], vec![2, 1, 1])?;
    let m = MultiDegree::new(vec![1, -2, 0]);
    let (reg, witness) = cm_regularity_with_witness(&e, &m)?;
    println!("{e}, m = {m}: reg F(m) = {reg}, attained at J = {witness:?} (0-based)");
    for row in regularity_table(&e, &m)? {
        println!("  J = {:?}: {}", row.subset, row.value);
    }

    println!("\nSegre P^2 x P^3, d = (1,1):");
    let segre = EmbeddingData::new(vec![2, 3], vec![1, 1])?;
    for (k, l) in [(0, 0), (1, 0), (-1, 2), (4, 4)] {
        let closed = segre_regularity_r2(2, 3, k, l)?;
        let general = cm_regularity(&segre, &MultiDegree::new(vec![k, l]))?;
        assert_eq!(closed, general);
        println!("  reg F({k},{l}) = {closed}");
    }

    println!("\nIdeal sheaf bound:");
    for (l, d) in [
        (vec![1, 2], vec![1, 1]),
        (vec![2], vec![2]),
        (vec![3, 3], vec![2, 1]),
    ] {
        let e = EmbeddingData::new(l, d)?;
        let lambda = ideal_sheaf_lambda(&e)?;
        let reg0 = cm_regularity(&e, &MultiDegree::zero(e.rank()))?;
        println!("  {e}: lambda = {}, reg O_Y = {reg0}", lambda.lambda);
        assert!(lambda.lambda > reg0);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> svreg::Result<()> {
    run_example()
}
