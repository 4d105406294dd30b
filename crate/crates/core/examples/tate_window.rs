// Term shapes of the Tate resolution of F(m) and the length of its
// non-trivial stretch, for balanced and unbalanced twists.
//
//     cargo run -p svreg --example tate_window

use svreg::{balanced_endpoints, tate_window, EmbeddingData, MultiDegree};

pub fn run_example() -> svreg::Result<()> {
    let e = EmbeddingData::new(vec![1, 1], vec![1, 1])?;
    let w = tate_window(&e, &MultiDegree::new(vec![0, 0]), 2)?;
    println!(
        "P^1 x P^1, m = (0,0): p- = {}, p+ = {}",
        w.p_minus, w.p_plus
    );
    for t in &w.terms {
        let cells: Vec<String> = t
            .entries
            .iter()
            .map(|x| format!("E^({})^{} [H^{}]", x.twist, x.rank, x.i))
            .collect();
        println!("  T^{:<3} = {}", t.p, cells.join(" + "));
    }

    let (r, l) = (3usize, 2i64);
    let e = EmbeddingData::new(vec![l; r], vec![1; r])?;
    println!("\n(P^2)^3 by O(1,1,1):");
    for m in [
        vec![5, 5, 5],
        vec![-3, -3, -3],
        vec![0, 0, 4],
        vec![0, 0, 9],
        vec![-2, 1, 7],
    ] {
        let w = tate_window(&e, &MultiDegree::new(m.clone()), 0)?;
        let mut sorted = m.clone();
        sorted.sort_unstable();
        assert_eq!(balanced_endpoints(r, l, &sorted)?, (w.p_plus, w.p_minus));
        println!("  m = {:?}: p+ - p- = {}", m, w.length());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> svreg::Result<()> {
    run_example()
}
