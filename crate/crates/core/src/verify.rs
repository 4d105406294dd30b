//! Grid sweeps pitting every closed form against its brute-force counterpart.
//!
//! Small ranks are swept exhaustively; `r = 3` instances are drawn from a
//! seeded ChaCha stream so runs are reproducible. Work is spread over rayon
//! and merged in a way that does not depend on completion order.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{cohomology_x, euler_characteristic, serre_dual};
use crate::embedding::{EmbeddingData, MultiDegree};
use crate::error::Result;
use crate::regularity::{
    check_l_subadditivity, check_subadditivity, cm_regularity, ideal_sheaf_lambda,
    is_l_regular_formula, is_l_regular_oracle, segre_regularity_r2, LSubadditivity, RegularitySet,
};
use crate::tate::{balanced_endpoints, m_tilde, p_minus, p_plus, tate_window};

pub const DEFAULT_SEED: u64 = 0x5e67_e0a1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Factor dimensions range over `1..=max_l`.
    pub max_l: i64,
    /// Veronese degrees range over `1..=max_d`.
    pub max_d: i64,
    /// Twist and test-point entries range over `-range..=range`.
    pub range: i64,
    /// Random `r = 3` instances per sampled check.
    pub samples: usize,
    /// Random `(m, m')` pairs per embedding for subadditivity.
    pub pairs: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_l: 3,
            max_d: 3,
            range: 8,
            samples: 10_000,
            pairs: 1_000,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub l: Vec<i64>,
    pub d: Vec<i64>,
    pub m: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m2: Option<Vec<i64>>,
    pub detail: String,
}

impl Counterexample {
    fn new(e: &EmbeddingData, m: &MultiDegree, detail: impl Into<String>) -> Self {
        Counterexample {
            l: e.dims().to_vec(),
            d: e.degrees().to_vec(),
            m: m.0.clone(),
            p: None,
            m2: None,
            detail: detail.into(),
        }
    }

    fn with_p(mut self, p: &MultiDegree) -> Self {
        self.p = Some(p.0.clone());
        self
    }

    fn with_m2(mut self, m2: &MultiDegree) -> Self {
        self.m2 = Some(m2.0.clone());
        self
    }

    /// Smaller keys are simpler counterexamples.
    fn key(&self) -> impl Ord + '_ {
        let size: i64 = self
            .m
            .iter()
            .chain(self.p.iter().flatten())
            .chain(self.m2.iter().flatten())
            .map(|x| x.abs())
            .sum();
        let dims: i64 = self.l.iter().chain(&self.d).sum();
        (
            self.l.len(),
            dims,
            size,
            &self.l,
            &self.d,
            &self.m,
            &self.p,
            &self.m2,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckSummary>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::passed)
    }
}

#[derive(Debug, Default)]
struct Tally {
    instances: u64,
    failures: u64,
    simplest: Option<Counterexample>,
}

impl Tally {
    fn record(&mut self, outcome: Result<bool>, describe: impl FnOnce(String) -> Counterexample) {
        self.instances += 1;
        let detail = match outcome {
            Ok(true) => return,
            Ok(false) => "closed form and brute force disagree".to_string(),
            Err(err) => err.to_string(),
        };
        self.failures += 1;
        self.offer(describe(detail));
    }

    fn offer(&mut self, ce: Counterexample) {
        match &self.simplest {
            Some(cur) if cur.key() <= ce.key() => {}
            _ => self.simplest = Some(ce),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.failures += other.failures;
        if let Some(ce) = other.simplest {
            self.offer(ce);
        }
        self
    }

    fn finish(self, name: &str) -> CheckSummary {
        CheckSummary {
            name: name.to_string(),
            instances: self.instances,
            failures: self.failures,
            counterexample: self.simplest,
        }
    }
}

/// Every embedding with `r` factors, `l_k <= max_l`, `d_k <= max_d`.
pub fn embeddings(r: usize, max_l: i64, max_d: i64) -> Vec<EmbeddingData> {
    let ls = (0..r).map(|_| 1..=max_l).multi_cartesian_product();
    ls.cartesian_product(
        (0..r)
            .map(|_| 1..=max_d)
            .multi_cartesian_product()
            .collect_vec(),
    )
    .map(|(l, d)| EmbeddingData::new(l, d).expect("grid entries are positive"))
    .collect()
}

/// Every point of `[-range, range]^r`.
pub fn box_points(r: usize, range: i64) -> Vec<MultiDegree> {
    (0..r)
        .map(|_| -range..=range)
        .multi_cartesian_product()
        .map(MultiDegree)
        .collect()
}

fn random_point(rng: &mut ChaCha8Rng, r: usize, range: i64) -> MultiDegree {
    MultiDegree((0..r).map(|_| rng.gen_range(-range..=range)).collect())
}

fn random_embedding(rng: &mut ChaCha8Rng, r: usize, max_l: i64, max_d: i64) -> EmbeddingData {
    let l = (0..r).map(|_| rng.gen_range(1..=max_l)).collect();
    let d = (0..r).map(|_| rng.gen_range(1..=max_d)).collect();
    EmbeddingData::new(l, d).expect("sampled entries are positive")
}

/// Exhaustive `(E, m)` pairs for `r ∈ {1, 2}` followed by seeded `r = 3` samples.
fn twist_instances(cfg: &VerifyConfig, stream: u64) -> Vec<(EmbeddingData, MultiDegree)> {
    let mut out = Vec::new();
    for r in 1..=2 {
        let pts = box_points(r, cfg.range);
        for e in embeddings(r, cfg.max_l, cfg.max_d) {
            out.extend(pts.iter().map(|m| (e.clone(), m.clone())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ stream);
    for _ in 0..cfg.samples {
        let e = random_embedding(&mut rng, 3, cfg.max_l, cfg.max_d);
        let m = random_point(&mut rng, 3, cfg.range);
        out.push((e, m));
    }
    out
}

/// Like [`twist_instances`], with a test point `p` alongside each `m`.
/// Exhaustive over `p` for `r ∈ {1, 2}`.
fn test_point_instances(
    cfg: &VerifyConfig,
    stream: u64,
) -> Vec<(EmbeddingData, MultiDegree, Vec<MultiDegree>)> {
    let mut out = Vec::new();
    for r in 1..=2 {
        let pts = box_points(r, cfg.range);
        for e in embeddings(r, cfg.max_l, cfg.max_d) {
            out.extend(pts.iter().map(|m| (e.clone(), m.clone(), pts.clone())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ stream);
    for _ in 0..cfg.samples {
        let e = random_embedding(&mut rng, 3, cfg.max_l, cfg.max_d);
        let m = random_point(&mut rng, 3, cfg.range);
        let p = random_point(&mut rng, 3, cfg.range);
        out.push((e, m, vec![p]));
    }
    out
}

pub fn check_cohomology(cfg: &VerifyConfig) -> CheckSummary {
    let cases: Vec<(EmbeddingData, Vec<MultiDegree>)> = (1..=3)
        .flat_map(|r| {
            let pts = box_points(r, cfg.range);
            embeddings(r, cfg.max_l, 1)
                .into_iter()
                .map(move |e| (e, pts.clone()))
        })
        .collect();
    cases
        .par_iter()
        .map(|(e, pts)| {
            let mut t = Tally::default();
            for a in pts {
                let outcome = (|| {
                    let h = cohomology_x(e, a)?;
                    let table = h.table(e.n());
                    let concentrated = table.iter().filter(|v| **v != 0u32.into()).count() <= 1;
                    let dual = cohomology_x(e, &serre_dual(e, a)?)?;
                    let serre = (0..=e.n()).all(|i| h.h(i) == dual.h(e.n() - i));
                    let euler = h.signed_total() == euler_characteristic(e, a)?;
                    Ok(concentrated && serre && euler)
                })();
                t.record(outcome, |d| Counterexample::new(e, a, d));
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
        .finish("cohomology self-consistency")
}

pub fn check_oracle_equivalence(cfg: &VerifyConfig) -> CheckSummary {
    test_point_instances(cfg, 1)
        .par_iter()
        .map(|(e, m, ps)| {
            let mut t = Tally::default();
            for p in ps {
                let outcome =
                    (|| Ok(is_l_regular_formula(e, m, p)? == is_l_regular_oracle(e, m, p)?))();
                t.record(outcome, |d| Counterexample::new(e, m, d).with_p(p));
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
        .finish("L-regularity formula vs cohomology oracle")
}

pub fn check_corners(cfg: &VerifyConfig) -> CheckSummary {
    test_point_instances(cfg, 2)
        .par_iter()
        .map(|(e, m, ps)| {
            let mut t = Tally::default();
            match RegularitySet::new(e, m) {
                Ok(set) => {
                    for p in ps {
                        let outcome = is_l_regular_formula(e, m, p).map(|f| f == set.contains(p));
                        t.record(outcome, |d| Counterexample::new(e, m, d).with_p(p));
                    }
                }
                Err(err) => t.record(Err(err), |d| Counterexample::new(e, m, d)),
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
        .finish("regularity-set corners vs L-regularity formula")
}

/// Smallest `q` in `[-bound, bound]` with `F(m)` `q`-regular by the oracle,
/// confirming the set is upward closed along the scan.
fn scan_regularity(e: &EmbeddingData, m: &MultiDegree, bound: i64) -> Result<Option<i64>> {
    let mut first = None;
    for q in -bound..=bound {
        let qd = MultiDegree(e.degrees().iter().map(|d| q * d).collect());
        let regular = is_l_regular_oracle(e, m, &qd)?;
        match (first, regular) {
            (None, true) => first = Some(q),
            (Some(_), false) => return Ok(None),
            _ => {}
        }
    }
    // The bottom of the scan must be outside the set for the minimum to be real.
    Ok(first.filter(|&q| q > -bound))
}

pub fn check_cm_regularity(cfg: &VerifyConfig) -> CheckSummary {
    let bound = 2 * (3 * cfg.max_l + cfg.range) + 4;
    twist_instances(cfg, 3)
        .par_iter()
        .map(|(e, m)| {
            let mut t = Tally::default();
            let outcome = (|| Ok(scan_regularity(e, m, bound)? == Some(cm_regularity(e, m)?)))();
            t.record(outcome, |d| Counterexample::new(e, m, d));
            t
        })
        .reduce(Tally::default, Tally::merge)
        .finish("CM regularity closed form vs minimal regular twist")
}

pub fn check_segre(cfg: &VerifyConfig) -> CheckSummary {
    let mut t = Tally::default();
    let range = cfg.range.min(5);
    for (a, b) in (1..=cfg.max_l).cartesian_product(1..=cfg.max_l) {
        let e = EmbeddingData::new(vec![a, b], vec![1, 1]).expect("positive");
        for (k, l) in (-range..=range).cartesian_product(-range..=range) {
            let m = MultiDegree(vec![k, l]);
            let outcome = (|| Ok(segre_regularity_r2(a, b, k, l)? == cm_regularity(&e, &m)?))();
            t.record(outcome, |d| Counterexample::new(&e, &m, d));
        }
    }
    t.finish("Segre closed form for P^a x P^b")
}

pub fn check_lambda(cfg: &VerifyConfig) -> CheckSummary {
    let mut t = Tally::default();
    for r in 1..=3 {
        for e in embeddings(r, cfg.max_l, cfg.max_d) {
            let zero = MultiDegree::zero(r);
            let outcome =
                (|| Ok(ideal_sheaf_lambda(&e)?.lambda - 1 >= cm_regularity(&e, &zero)?))();
            t.record(outcome, |d| Counterexample::new(&e, &zero, d));
        }
    }
    t.finish("ideal sheaf bound lambda - 1 >= reg(O_Y)")
}

pub fn check_subadditivity_grid(cfg: &VerifyConfig) -> CheckSummary {
    let all: Vec<EmbeddingData> = (1..=3)
        .flat_map(|r| embeddings(r, cfg.max_l, cfg.max_d))
        .collect();
    all.par_iter()
        .enumerate()
        .map(|(idx, e)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 4).clone();
            rng.set_stream(idx as u64);
            let r = e.rank();
            let mut t = Tally::default();
            for _ in 0..cfg.pairs {
                let m = random_point(&mut rng, r, cfg.range);
                let m2 = random_point(&mut rng, r, cfg.range);
                let p = random_point(&mut rng, r, cfg.range);
                let p2 = random_point(&mut rng, r, cfg.range);
                let outcome = (|| {
                    let cm = check_subadditivity(e, &m, &m2)?.holds;
                    let l = check_l_subadditivity(e, &m, &p, &m2, &p2)? != LSubadditivity::Fails;
                    Ok(cm && l)
                })();
                t.record(outcome, |d| {
                    Counterexample::new(e, &m, d).with_m2(&m2).with_p(&p)
                });
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
        .finish("subadditivity of regularity")
}

pub fn check_tate(cfg: &VerifyConfig) -> CheckSummary {
    let mut tally = twist_instances(cfg, 5)
        .par_iter()
        .map(|(e, m)| {
            let mut t = Tally::default();
            let outcome = (|| {
                let dual = m_tilde(e, m)?;
                let duality = p_minus(e, m)? == -p_plus(e, &dual)? && m_tilde(e, &dual)? == *m;
                // tate_window itself rejects any column contradicting the endpoints.
                tate_window(e, m, 3)?;
                Ok(duality)
            })();
            t.record(outcome, |d| Counterexample::new(e, m, d));
            t
        })
        .reduce(Tally::default, Tally::merge);

    let range = cfg.range.min(6);
    for r in 1..=3usize {
        for l in 1..=cfg.max_l {
            let e = EmbeddingData::new(vec![l; r], vec![1; r]).expect("positive");
            for m in box_points(r, range) {
                let mut sorted = m.0.clone();
                sorted.sort_unstable();
                let outcome = (|| {
                    Ok(balanced_endpoints(r, l, &sorted)? == (p_plus(&e, &m)?, p_minus(&e, &m)?))
                })();
                tally.record(outcome, |d| Counterexample::new(&e, &m, d));
            }
        }
    }
    tally.finish("Tate endpoints")
}

pub fn run_verification(cfg: &VerifyConfig) -> VerifyReport {
    let checks = vec![
        check_cohomology(cfg),
        check_oracle_equivalence(cfg),
        check_corners(cfg),
        check_cm_regularity(cfg),
        check_segre(cfg),
        check_lambda(cfg),
        check_subadditivity_grid(cfg),
        check_tate(cfg),
    ];
    VerifyReport {
        config: cfg.clone(),
        checks,
    }
}
