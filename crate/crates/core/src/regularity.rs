//! Regularity of `O_X(m)` with respect to `B = O_X(d)`, the corner
//! decomposition of the regularity set, and the Castelnuovo-Mumford
//! regularity of the pushforward `F(m)` on `P^N`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cohomology::cohomology_x;
use crate::combinat::{floor_div, mask_to_indices, members, subset_sums};
use crate::embedding::{to_i64, EmbeddingData, MultiDegree};
use crate::error::{Error, Result};

/// The value attached to one nonempty subset `J` (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetValue {
    pub subset: Vec<usize>,
    pub value: i64,
}

fn check_pair(e: &EmbeddingData, m: &MultiDegree, p: &MultiDegree) -> Result<()> {
    e.check(m)?;
    e.check(p)
}

/// `max_{k∈J} (p_k + m_k + l_k - l_J d_k)`; `J` passes when this is `>= 0`.
fn l_margin(e: &EmbeddingData, m: &MultiDegree, p: &MultiDegree, mask: u64, l_j: i128) -> i128 {
    let (l, d) = (e.dims(), e.degrees());
    members(mask)
        .map(|k| p.0[k] as i128 + m.0[k] as i128 + l[k] as i128 - l_j * d[k] as i128)
        .max()
        .expect("nonempty subset")
}

/// `min_{k∈J} (l_J - floor((m_k + l_k) / d_k))`.
fn reg_value(e: &EmbeddingData, m: &MultiDegree, mask: u64, l_j: i128) -> i128 {
    let (l, d) = (e.dims(), e.degrees());
    members(mask)
        .map(|k| l_j - floor_div(m.0[k] as i128 + l[k] as i128, d[k] as i128))
        .min()
        .expect("nonempty subset")
}

/// The first nonempty `J` (in bitmask order) where every `k ∈ J` has
/// `p_k + m_k + l_k - l_J d_k < 0`, if any.
pub fn violated_subset(
    e: &EmbeddingData,
    m: &MultiDegree,
    p: &MultiDegree,
) -> Result<Option<Vec<usize>>> {
    check_pair(e, m, p)?;
    e.require_subsets()?;
    let sums = subset_sums(e.dims());
    Ok((1..sums.len() as u64)
        .find(|&mask| l_margin(e, m, p, mask, sums[mask as usize]) < 0)
        .map(mask_to_indices))
}

/// Whether `O_X(m)` is `O_X(p)`-regular for `B`, decided by the subset inequalities.
pub fn is_l_regular_formula(e: &EmbeddingData, m: &MultiDegree, p: &MultiDegree) -> Result<bool> {
    violated_subset(e, m, p).map(|v| v.is_none())
}

/// Per-subset margins `max_{k∈J} (p_k + m_k + l_k - l_J d_k)`.
pub fn l_regularity_table(
    e: &EmbeddingData,
    m: &MultiDegree,
    p: &MultiDegree,
) -> Result<Vec<SubsetValue>> {
    check_pair(e, m, p)?;
    e.require_subsets()?;
    let sums = subset_sums(e.dims());
    (1..sums.len() as u64)
        .map(|mask| {
            Ok(SubsetValue {
                subset: mask_to_indices(mask),
                value: to_i64(l_margin(e, m, p, mask, sums[mask as usize]), "margin")?,
            })
        })
        .collect()
}

/// The first `i` in `1..=n` with `H^i(X, O_X(m + p - i d)) != 0`, if any.
pub fn nonvanishing_degree(
    e: &EmbeddingData,
    m: &MultiDegree,
    p: &MultiDegree,
) -> Result<Option<i64>> {
    check_pair(e, m, p)?;
    let base = m.checked_add(p)?;
    for i in 1..=e.n() {
        let a = e.twist(&base, -i)?;
        if cohomology_x(e, &a)?.degree() == Some(i) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Whether `O_X(m)` is `O_X(p)`-regular for `B`, decided by computing
/// `H^i(X, O_X(m + p - i d))` for every `i = 1..n`.
pub fn is_l_regular_oracle(e: &EmbeddingData, m: &MultiDegree, p: &MultiDegree) -> Result<bool> {
    nonvanishing_degree(e, m, p).map(|i| i.is_none())
}

/// A permutation `σ` (0-based, `sigma[i] = σ(i+1) - 1`) and its corner `p_σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCorner {
    pub sigma: Vec<usize>,
    pub corner: MultiDegree,
}

impl RegularityCorner {
    /// `J(σ,k) = {σ(i) : i >= σ^{-1}(k)}`, the suffix of `σ` starting at `k`.
    pub fn chain_for(&self, k: usize) -> &[usize] {
        let pos = self
            .sigma
            .iter()
            .position(|&s| s == k)
            .expect("k is in the permutation");
        &self.sigma[pos..]
    }
}

fn corner_for(e: &EmbeddingData, m: &MultiDegree, sigma: Vec<usize>) -> Result<RegularityCorner> {
    let (l, d) = (e.dims(), e.degrees());
    let r = sigma.len();
    let mut corner = vec![0i64; r];
    // Walk the suffixes from the back so l_{J(σ,k)} accumulates.
    let mut l_j: i128 = 0;
    for &k in sigma.iter().rev() {
        l_j += l[k] as i128;
        corner[k] = to_i64(
            -(m.0[k] as i128) - l[k] as i128 + l_j * d[k] as i128,
            "corner",
        )?;
    }
    Ok(RegularityCorner {
        sigma,
        corner: MultiDegree(corner),
    })
}

/// One corner per permutation in lexicographic order, duplicates dropped
/// (first `σ` wins). With `antichain`, corners dominating another are dropped too.
pub fn regularity_corners(
    e: &EmbeddingData,
    m: &MultiDegree,
    antichain: bool,
) -> Result<Vec<RegularityCorner>> {
    e.check(m)?;
    e.require_perms()?;
    let mut out: Vec<RegularityCorner> = Vec::new();
    for sigma in (0..e.rank()).permutations(e.rank()) {
        let c = corner_for(e, m, sigma)?;
        if !out.iter().any(|o| o.corner == c.corner) {
            out.push(c);
        }
    }
    if antichain {
        let all = out.clone();
        out.retain(|c| {
            !all.iter()
                .any(|o| o.corner != c.corner && o.corner.dominated_by(&c.corner))
        });
    }
    Ok(out)
}

/// The regularity set of `O_X(m)` as a union of translated orthants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularitySet {
    corners: Vec<RegularityCorner>,
}

impl RegularitySet {
    pub fn new(e: &EmbeddingData, m: &MultiDegree) -> Result<Self> {
        Ok(RegularitySet {
            corners: regularity_corners(e, m, true)?,
        })
    }

    pub fn corners(&self) -> &[RegularityCorner] {
        &self.corners
    }

    pub fn contains(&self, p: &MultiDegree) -> bool {
        self.corners.iter().any(|c| c.corner.dominated_by(p))
    }
}

pub fn in_regularity_set(e: &EmbeddingData, m: &MultiDegree, p: &MultiDegree) -> Result<bool> {
    check_pair(e, m, p)?;
    Ok(RegularitySet::new(e, m)?.contains(p))
}

/// `reg(F(m))` together with the first subset `J` attaining the maximum.
pub fn cm_regularity_with_witness(e: &EmbeddingData, m: &MultiDegree) -> Result<(i64, Vec<usize>)> {
    e.check(m)?;
    e.require_subsets()?;
    let sums = subset_sums(e.dims());
    let mut best: Option<(i128, u64)> = None;
    for mask in 1..sums.len() as u64 {
        let v = reg_value(e, m, mask, sums[mask as usize]);
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, mask));
        }
    }
    let (v, mask) = best.expect("r >= 1");
    Ok((to_i64(v, "regularity")?, mask_to_indices(mask)))
}

/// Castelnuovo-Mumford regularity of `F(m) = ν_{d*} O_X(m)` on `P^N`:
/// `max_{J≠∅} min_{k∈J} (l_J - floor((m_k + l_k) / d_k))`.
pub fn cm_regularity(e: &EmbeddingData, m: &MultiDegree) -> Result<i64> {
    cm_regularity_with_witness(e, m).map(|(v, _)| v)
}

/// The inner minima of [`cm_regularity`], one row per subset.
pub fn regularity_table(e: &EmbeddingData, m: &MultiDegree) -> Result<Vec<SubsetValue>> {
    e.check(m)?;
    e.require_subsets()?;
    let sums = subset_sums(e.dims());
    (1..sums.len() as u64)
        .map(|mask| {
            Ok(SubsetValue {
                subset: mask_to_indices(mask),
                value: to_i64(reg_value(e, m, mask, sums[mask as usize]), "regularity")?,
            })
        })
        .collect()
}

/// Closed form for the Segre embedding of `P^a x P^b` (`d = (1,1)`):
/// `reg(F(k,l)) = max{-min{k,l}, min{b-k, a-l}}`.
pub fn segre_regularity_r2(a: i64, b: i64, k: i64, l: i64) -> Result<i64> {
    if a < 1 {
        return Err(Error::NonPositiveDimension(a));
    }
    if b < 1 {
        return Err(Error::NonPositiveDimension(b));
    }
    let (a, b, k, l) = (a as i128, b as i128, k as i128, l as i128);
    to_i64((-k.min(l)).max((b - k).min(a - l)), "regularity")
}

/// Both presentations of the regularity bound for the ideal sheaf of the image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaReport {
    /// `n + 1 - min_k floor(l_k / d_k)`.
    pub lambda: i64,
    /// The case split on `q_k = floor((l_k + 1) / d_k)` and `q_0 = min q_k`.
    pub lambda_case_split: i64,
    pub q0: i64,
}

pub fn ideal_sheaf_lambda(e: &EmbeddingData) -> Result<LambdaReport> {
    let n = e.n() as i128;
    let pairs = e.dims().iter().zip(e.degrees());

    let min_floor = pairs
        .clone()
        .map(|(&l, &d)| floor_div(l as i128, d as i128))
        .min()
        .expect("r >= 1");
    let lambda = n + 1 - min_floor;

    let q: Vec<(i128, bool)> = pairs
        .map(|(&l, &d)| {
            let (l, d) = (l as i128, d as i128);
            (floor_div(l + 1, d), (l + 1) % d == 0)
        })
        .collect();
    let q0 = q.iter().map(|&(qk, _)| qk).min().expect("r >= 1");
    let divisible_at_min = q.iter().any(|&(qk, div)| qk == q0 && div);
    let case_split = if divisible_at_min {
        n + 2 - q0
    } else {
        n + 1 - q0
    };

    if lambda != case_split {
        return Err(Error::Inconsistent(format!(
            "lambda presentations disagree for {e}: {lambda} vs {case_split}"
        )));
    }
    Ok(LambdaReport {
        lambda: to_i64(lambda, "lambda")?,
        lambda_case_split: to_i64(case_split, "lambda")?,
        q0: to_i64(q0, "q0")?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubadditivityReport {
    pub reg_m: i64,
    pub reg_m2: i64,
    pub reg_sum: i64,
    pub holds: bool,
}

/// Compares `reg F(m) + reg F(m2)` with `reg F(m + m2)`. `holds` is always
/// true for these sheaves; false means a bug.
pub fn check_subadditivity(
    e: &EmbeddingData,
    m: &MultiDegree,
    m2: &MultiDegree,
) -> Result<SubadditivityReport> {
    check_pair(e, m, m2)?;
    let reg_m = cm_regularity(e, m)?;
    let reg_m2 = cm_regularity(e, m2)?;
    let reg_sum = cm_regularity(e, &m.checked_add(m2)?)?;
    Ok(SubadditivityReport {
        reg_m,
        reg_m2,
        reg_sum,
        holds: reg_m as i128 + reg_m2 as i128 >= reg_sum as i128,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LSubadditivity {
    /// One of the input pairs is not regular, so there is nothing to check.
    HypothesisNotMet,
    Holds,
    Fails,
}

/// If `O_X(m)` is `O_X(p)`-regular and `O_X(m2)` is `O_X(p2)`-regular, checks
/// that `O_X(m + m2)` is `O_X(p + p2)`-regular.
pub fn check_l_subadditivity(
    e: &EmbeddingData,
    m: &MultiDegree,
    p: &MultiDegree,
    m2: &MultiDegree,
    p2: &MultiDegree,
) -> Result<LSubadditivity> {
    check_pair(e, m, p)?;
    check_pair(e, m2, p2)?;
    if !is_l_regular_formula(e, m, p)? || !is_l_regular_formula(e, m2, p2)? {
        return Ok(LSubadditivity::HypothesisNotMet);
    }
    let ok = is_l_regular_formula(e, &m.checked_add(m2)?, &p.checked_add(p2)?)?;
    Ok(if ok {
        LSubadditivity::Holds
    } else {
        LSubadditivity::Fails
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::Caps;

    fn emb(l: &[i64], d: &[i64]) -> EmbeddingData {
        EmbeddingData::new(l.to_vec(), d.to_vec()).unwrap()
    }

    fn md<const R: usize>(v: [i64; R]) -> MultiDegree {
        MultiDegree::from(v)
    }

    #[test]
    fn l_regularity_examples() {
        let e = emb(&[3], &[1]);
        assert!(is_l_regular_formula(&e, &md([0]), &md([0])).unwrap());
        assert!(is_l_regular_oracle(&e, &md([0]), &md([0])).unwrap());

        let e = emb(&[1, 1], &[1, 1]);
        assert!(!is_l_regular_formula(&e, &md([0, 0]), &md([0, 0])).unwrap());
        assert_eq!(
            violated_subset(&e, &md([0, 0]), &md([0, 0])).unwrap(),
            Some(vec![0, 1])
        );
        // H^2(O(-2,-2)) = 1
        assert_eq!(
            nonvanishing_degree(&e, &md([0, 0]), &md([0, 0])).unwrap(),
            Some(2)
        );
        assert!(is_l_regular_formula(&e, &md([0, 0]), &md([1, 1])).unwrap());
        assert!(is_l_regular_oracle(&e, &md([0, 0]), &md([1, 1])).unwrap());
    }

    #[test]
    fn oracle_on_veronese_surface() {
        let e = emb(&[2], &[2]);
        // i=2 gives O(1 - 4) = O(-3), and h^2(P^2, O(-3)) = 1.
        assert_eq!(
            nonvanishing_degree(&e, &md([1]), &md([0])).unwrap(),
            Some(2)
        );
        assert!(!is_l_regular_formula(&e, &md([1]), &md([0])).unwrap());
        // i=2 gives O(-5), h^2 = h^0(O(2)) = 6.
        assert!(!is_l_regular_oracle(&e, &md([0]), &md([-1])).unwrap());
        assert!(!is_l_regular_formula(&e, &md([0]), &md([-1])).unwrap());
        assert!(is_l_regular_oracle(&e, &md([1]), &md([1])).unwrap());
        assert!(is_l_regular_formula(&e, &md([1]), &md([1])).unwrap());
    }

    #[test]
    fn corner_examples() {
        let e = emb(&[1, 1], &[1, 1]);
        let c: Vec<_> = regularity_corners(&e, &md([0, 0]), false)
            .unwrap()
            .into_iter()
            .map(|c| c.corner)
            .collect();
        assert_eq!(c, vec![md([1, 0]), md([0, 1])]);

        let e1 = emb(&[2], &[3]);
        let c = regularity_corners(&e1, &md([1]), false).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].corner, md([3]));

        let c: Vec<_> = regularity_corners(&e, &md([5, 5]), false)
            .unwrap()
            .into_iter()
            .map(|c| c.corner)
            .collect();
        assert_eq!(c, vec![md([-4, -5]), md([-5, -4])]);
    }

    #[test]
    fn corner_chains_are_suffixes() {
        let e = emb(&[1, 2, 3], &[1, 1, 2]);
        for c in regularity_corners(&e, &md([0, 1, -1]), false).unwrap() {
            for (pos, &k) in c.sigma.iter().enumerate() {
                assert_eq!(c.chain_for(k), &c.sigma[pos..]);
            }
            assert!(is_l_regular_formula(&e, &md([0, 1, -1]), &c.corner).unwrap());
        }
    }

    #[test]
    fn corner_count_and_antichain() {
        // The suffix sums l_{J(σ,k)} recover σ, so no two permutations collide.
        let e = emb(&[1, 2, 1], &[1, 2, 3]);
        let m = md([0, -1, 2]);
        let all = regularity_corners(&e, &m, false).unwrap();
        assert_eq!(all.len(), 6);
        let anti = regularity_corners(&e, &m, true).unwrap();
        for c in &all {
            assert!(anti.iter().any(|a| a.corner.dominated_by(&c.corner)));
        }
        for a in &anti {
            assert!(all.contains(a));
        }
    }

    #[test]
    fn membership_examples() {
        let e = emb(&[1, 1], &[1, 1]);
        assert!(in_regularity_set(&e, &md([0, 0]), &md([1, 1])).unwrap());
        assert!(!in_regularity_set(&e, &md([0, 0]), &md([0, 0])).unwrap());
        assert!(in_regularity_set(&e, &md([0, 0]), &md([0, 1])).unwrap());
    }

    #[test]
    fn cm_regularity_examples() {
        let e = emb(&[1, 1], &[1, 1]);
        assert_eq!(cm_regularity(&e, &md([0, 0])).unwrap(), 1);
        assert_eq!(cm_regularity(&e, &md([2, 3])).unwrap(), -2);
        assert_eq!(cm_regularity(&emb(&[3], &[1]), &md([0])).unwrap(), 0);
        let (v, j) = cm_regularity_with_witness(&e, &md([0, 0])).unwrap();
        assert_eq!((v, j), (1, vec![0, 1]));
        let table = regularity_table(&e, &md([0, 0])).unwrap();
        assert_eq!(table.iter().map(|r| r.value).max(), Some(1));
    }

    #[test]
    fn floor_uses_negative_rounding() {
        // m = -4, l = 1, d = 2: floor(-3/2) = -2, so reg = 1 + 2 = 3.
        // Truncating division would give 2.
        assert_eq!(cm_regularity(&emb(&[1], &[2]), &md([-4])).unwrap(), 3);
    }

    #[test]
    fn segre_examples() {
        assert_eq!(segre_regularity_r2(1, 1, 0, 0).unwrap(), 1);
        assert_eq!(segre_regularity_r2(1, 1, 2, 3).unwrap(), -2);
        assert_eq!(segre_regularity_r2(2, 3, 0, 0).unwrap(), 2);
        assert_eq!(
            cm_regularity(&emb(&[2, 3], &[1, 1]), &md([0, 0])).unwrap(),
            2
        );
        assert!(segre_regularity_r2(0, 1, 0, 0).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            ideal_sheaf_lambda(&emb(&[1, 2], &[1, 1])).unwrap().lambda,
            3
        );
        assert_eq!(
            ideal_sheaf_lambda(&emb(&[1, 1], &[1, 1])).unwrap().lambda,
            2
        );
        let r = ideal_sheaf_lambda(&emb(&[2], &[2])).unwrap();
        assert_eq!(r.lambda, 2);
        assert_eq!(r.lambda_case_split, 2);
        // reg(O_Y) = 1 < lambda - 1 = 2 on P^1 x P^2.
        assert_eq!(
            cm_regularity(&emb(&[1, 2], &[1, 1]), &md([0, 0])).unwrap(),
            1
        );
    }

    #[test]
    fn subadditivity_examples() {
        let e = emb(&[1, 1], &[1, 1]);
        let r = check_subadditivity(&e, &md([0, 0]), &md([0, 0])).unwrap();
        assert_eq!((r.reg_m, r.reg_m2, r.reg_sum, r.holds), (1, 1, 1, true));
        let r = check_subadditivity(&e, &md([2, 3]), &md([2, 3])).unwrap();
        assert_eq!((r.reg_m, r.reg_m2), (-2, -2));
        assert_eq!(r.reg_sum, cm_regularity(&e, &md([4, 6])).unwrap());
        assert!(r.holds);
        let r = check_subadditivity(&emb(&[3], &[1]), &md([0]), &md([0])).unwrap();
        assert_eq!((r.reg_m, r.reg_m2, r.reg_sum, r.holds), (0, 0, 0, true));
    }

    #[test]
    fn l_subadditivity_examples() {
        let e = emb(&[1, 1], &[1, 1]);
        assert_eq!(
            check_l_subadditivity(&e, &md([0, 0]), &md([1, 1]), &md([0, 0]), &md([0, 1])).unwrap(),
            LSubadditivity::Holds
        );
        assert_eq!(
            check_l_subadditivity(&e, &md([0, 0]), &md([0, 0]), &md([0, 0]), &md([0, 1])).unwrap(),
            LSubadditivity::HypothesisNotMet
        );
        let e1 = emb(&[2], &[1]);
        assert_eq!(cm_regularity(&e1, &md([1])).unwrap(), -1);
        assert_eq!(
            check_l_subadditivity(&e1, &md([1]), &md([-1]), &md([0]), &md([0])).unwrap(),
            LSubadditivity::Holds
        );
    }

    #[test]
    fn caps_are_enforced() {
        let e = emb(&[1; 4], &[1; 4]).with_caps(Caps::new(3, 3).unwrap());
        let m = MultiDegree::zero(4);
        assert!(matches!(
            cm_regularity(&e, &m),
            Err(Error::CapExceeded { kind: "subset", .. })
        ));
        assert!(matches!(
            regularity_corners(&e, &m, false),
            Err(Error::CapExceeded {
                kind: "permutation",
                ..
            })
        ));
        // The oracle never enumerates subsets.
        assert!(is_l_regular_oracle(&e, &m, &MultiDegree::new(vec![4; 4])).is_ok());
    }

    #[test]
    fn length_mismatch_is_reported() {
        let e = emb(&[1, 1], &[1, 1]);
        assert!(matches!(
            is_l_regular_formula(&e, &md([0]), &md([0, 0])),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            check_subadditivity(&e, &md([0, 0]), &md([0, 0, 0])),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
