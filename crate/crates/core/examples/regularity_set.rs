// The regularity set of O_X(m) on P^1 x P^2 under O(1,2), drawn from its
// corners and compared point by point with the cohomological definition.
//
//     cargo run -p svreg --example regularity_set

use svreg::{is_l_regular_oracle, regularity_corners, EmbeddingData, MultiDegree, RegularitySet};

pub fn run_example() -> svreg::Result<()> {
    let e = EmbeddingData::new(vec![1, 2], vec![1, 2])?;
    let m = MultiDegree::new(vec![0, 1]);

    for c in regularity_corners(&e, &m, false)? {
        let sigma: Vec<usize> = c.sigma.iter().map(|k| k + 1).collect();
        println!("sigma = {sigma:?}  corner = {}", c.corner);
    }

    let set = RegularitySet::new(&e, &m)?;
    println!("\np2 ^   (# = regular, . = not)");
    for p2 in (-2..=8).rev() {
        let row: String = (-2..=8)
            .map(|p1| {
                let p = MultiDegree::new(vec![p1, p2]);
                let inside = set.contains(&p);
                assert_eq!(inside, is_l_regular_oracle(&e, &m, &p).unwrap());
                if inside {
                    '#'
                } else {
                    '.'
                }
            })
            .collect();
        println!("{p2:>3} | {row}");
    }
    println!("      p1 from -2 to 8 ->");
    Ok(())
}

#[allow(dead_code)]
fn main() -> svreg::Result<()> {
    run_example()
}
