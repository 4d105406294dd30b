//! Shapes of the Tate resolution of `F(m)` over the exterior algebra.
//!
//! Column `p` is `⊕_i Ê(i-p) ⊗ H^i(F(m)(p-i))`. Only generator twists and
//! ranks are tracked; the differentials are not.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cohomology::cohomology_x;
use crate::combinat::{ceil_div, members, subset_sums};
use crate::embedding::{to_i64, EmbeddingData, MultiDegree};
use crate::error::{Error, Result};
use crate::regularity::cm_regularity;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateEntry {
    /// Cohomological degree.
    pub i: i64,
    /// Generator twist `i - p`.
    pub twist: i64,
    /// `h^i(F(m)(p - i))`, never zero.
    #[serde(with = "crate::decimal")]
    pub rank: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateTerm {
    pub p: i64,
    pub entries: Vec<TateEntry>,
}

impl TateTerm {
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|e| e.i)
    }

    /// All entries sit in degree `i` (vacuously true for an empty term).
    pub fn only_degree(&self, i: i64) -> bool {
        self.degrees().all(|d| d == i)
    }
}

pub fn tate_term(e: &EmbeddingData, m: &MultiDegree, p: i64) -> Result<TateTerm> {
    e.check(m)?;
    let mut entries = Vec::new();
    for i in 0..=e.n() {
        let shift = p.checked_sub(i).ok_or(Error::Overflow("column shift"))?;
        let profile = cohomology_x(e, &e.twist(m, shift)?)?;
        if profile.degree() == Some(i) {
            entries.push(TateEntry {
                i,
                twist: -shift,
                rank: profile.dimension(),
            });
        }
    }
    Ok(TateTerm { p, entries })
}

/// `-m + n d - l - 1`, the twist for which `F(m~)` is dual to `F(m)`.
pub fn m_tilde(e: &EmbeddingData, m: &MultiDegree) -> Result<MultiDegree> {
    e.check(m)?;
    let n = e.n() as i128;
    e.dims()
        .iter()
        .zip(e.degrees())
        .zip(m.entries())
        .map(|((&l, &d), &mk)| to_i64(-(mk as i128) + n * d as i128 - l as i128 - 1, "m~"))
        .collect::<Result<Vec<_>>>()
        .map(MultiDegree)
}

/// `p+ = reg F(m)`.
pub fn p_plus(e: &EmbeddingData, m: &MultiDegree) -> Result<i64> {
    cm_regularity(e, m)
}

/// `-max_{J≠∅} min_{k∈J} (ceil((m_k + 1) / d_k) - l_{J^c})`.
pub fn p_minus_direct(e: &EmbeddingData, m: &MultiDegree) -> Result<i64> {
    e.check(m)?;
    e.require_subsets()?;
    let (n, d) = (e.n() as i128, e.degrees());
    let sums = subset_sums(e.dims());
    let best = (1..sums.len() as u64)
        .map(|mask| {
            let l_complement = n - sums[mask as usize];
            members(mask)
                .map(|k| ceil_div(m.0[k] as i128 + 1, d[k] as i128) - l_complement)
                .min()
                .expect("nonempty subset")
        })
        .max()
        .expect("r >= 1");
    to_i64(-best, "p-")
}

/// `p- = -reg F(m~)`, cross-checked against [`p_minus_direct`].
pub fn p_minus(e: &EmbeddingData, m: &MultiDegree) -> Result<i64> {
    let via_dual = cm_regularity(e, &m_tilde(e, m)?)?
        .checked_neg()
        .ok_or(Error::Overflow("p-"))?;
    let direct = p_minus_direct(e, m)?;
    if via_dual != direct {
        return Err(Error::Inconsistent(format!(
            "p- for m={m} on {e}: -reg(F(m~)) = {via_dual} but ceiling form gives {direct}"
        )));
    }
    Ok(via_dual)
}

/// Columns of the Tate resolution around its non-trivial stretch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateWindow {
    pub p_minus: i64,
    pub p_plus: i64,
    /// Consecutive columns from `min(p-, p+) - pad` to `max(p-, p+) + pad`.
    pub terms: Vec<TateTerm>,
}

impl TateWindow {
    pub fn inverted(&self) -> bool {
        self.p_minus > self.p_plus
    }

    pub fn length(&self) -> i64 {
        self.p_plus - self.p_minus
    }
}

pub const DEFAULT_PAD: u32 = 2;

/// Computes the window and checks that the endpoints are exact:
/// columns `p >= p+` live only in degree 0, columns `p <= p-` only in degree
/// `n`, and both statements fail one step inside.
pub fn tate_window(e: &EmbeddingData, m: &MultiDegree, pad: u32) -> Result<TateWindow> {
    let p_plus = p_plus(e, m)?;
    let p_minus = p_minus(e, m)?;
    let n = e.n();
    let lo = p_minus.min(p_plus) - pad as i64;
    let hi = p_minus.max(p_plus) + pad as i64;

    let terms = (lo..=hi)
        .map(|p| tate_term(e, m, p))
        .collect::<Result<Vec<_>>>()?;

    let fail = |what: String| {
        Err(Error::Inconsistent(format!(
            "Tate window of m={m} on {e}: {what}"
        )))
    };
    for t in &terms {
        if t.only_degree(0) != (t.p >= p_plus) {
            return fail(format!("column {} disagrees with p+ = {p_plus}", t.p));
        }
        if t.only_degree(n) != (t.p <= p_minus) {
            return fail(format!("column {} disagrees with p- = {p_minus}", t.p));
        }
    }
    if tate_term(e, m, p_plus - 1)?.only_degree(0) {
        return fail(format!("p+ = {p_plus} is not minimal"));
    }
    if tate_term(e, m, p_minus + 1)?.only_degree(n) {
        return fail(format!("p- = {p_minus} is not maximal"));
    }

    Ok(TateWindow {
        p_minus,
        p_plus,
        terms,
    })
}

/// Endpoints when `d = (1,...,1)` and all `l_k = l`, for sorted `m`:
/// `p+ = max_i ((i-1) l - m_i)` and `p- = min_i ((i-1) l - m_i) - 1`.
pub fn balanced_endpoints(r: usize, l: i64, m_sorted: &[i64]) -> Result<(i64, i64)> {
    if r == 0 {
        return Err(Error::NoFactors);
    }
    if l < 1 {
        return Err(Error::NonPositiveDimension(l));
    }
    if m_sorted.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            found: m_sorted.len(),
        });
    }
    if m_sorted.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Unsorted(m_sorted.to_vec()));
    }
    let values = m_sorted
        .iter()
        .enumerate()
        .map(|(i, &mi)| i as i128 * l as i128 - mi as i128);
    let hi = values.clone().max().expect("r >= 1");
    let lo = values.min().expect("r >= 1") - 1;
    Ok((to_i64(hi, "p+")?, to_i64(lo, "p-")?))
}
