// Regularity of F(m) is subadditive under tensor product. Random twists on a
// three-factor embedding.
//
//     cargo run -p svreg --example subadditivity

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use svreg::{
    check_l_subadditivity, check_subadditivity, EmbeddingData, LSubadditivity, MultiDegree,
};

pub fn run_example() -> svreg::Result<()> {
    let e = EmbeddingData::new(vec![1, 2, 2], vec![3, 1, 2])?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut random = || MultiDegree::new((0..3).map(|_| rng.gen_range(-6..=6)).collect());

    let mut slack = Vec::new();
    for _ in 0..500 {
        let (m, m2) = (random(), random());
        let r = check_subadditivity(&e, &m, &m2)?;
        assert!(r.holds);
        slack.push(r.reg_m + r.reg_m2 - r.reg_sum);
    }
    let tight = slack.iter().filter(|&&s| s == 0).count();
    println!(
        "{e}: 500 pairs, all subadditive, {tight} with equality, max slack {}",
        slack.iter().max().unwrap()
    );

    let shift = MultiDegree::new(vec![8, 8, 8]);
    let (mut holds, mut skipped) = (0, 0);
    for _ in 0..500 {
        // Test points well inside the positive range so the hypothesis usually holds.
        let (p, p2) = (random().checked_add(&shift)?, random().checked_add(&shift)?);
        match check_l_subadditivity(&e, &random(), &p, &random(), &p2)? {
            LSubadditivity::Holds => holds += 1,
            LSubadditivity::HypothesisNotMet => skipped += 1,
            LSubadditivity::Fails => unreachable!("L-regularity is additive"),
        }
    }
    println!("L-regularity: {holds} verified, {skipped} pairs outside the hypothesis");
    Ok(())
}

#[allow(dead_code)]
fn main() -> svreg::Result<()> {
    run_example()
}
