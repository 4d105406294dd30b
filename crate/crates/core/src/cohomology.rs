//! Cohomology of line bundles on `X = P^{l_1} x ... x P^{l_r}`.
//!
//! Each factor follows the Bott rules on projective space. Künneth then
//! multiplies the factor groups, so a line bundle on `X` has nonzero
//! cohomology in at most one degree.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{binom, binomial_polynomial};
use crate::embedding::{to_i64, EmbeddingData, MultiDegree};
use crate::error::{Error, Result};

/// The single degree where a line bundle has cohomology, with its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CohomologyProfile {
    Vanishes,
    /// `dimension` is always strictly positive.
    Concentrated {
        degree: i64,
        #[serde(with = "crate::decimal")]
        dimension: BigUint,
    },
}

impl CohomologyProfile {
    pub fn degree(&self) -> Option<i64> {
        match self {
            CohomologyProfile::Vanishes => None,
            CohomologyProfile::Concentrated { degree, .. } => Some(*degree),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyProfile::Vanishes)
    }

    /// `h^i` for any `i`.
    pub fn h(&self, i: i64) -> BigUint {
        match self {
            CohomologyProfile::Concentrated { degree, dimension } if *degree == i => {
                dimension.clone()
            }
            _ => BigUint::zero(),
        }
    }

    /// Dimension in the concentrated degree, zero when everything vanishes.
    pub fn dimension(&self) -> BigUint {
        match self {
            CohomologyProfile::Vanishes => BigUint::zero(),
            CohomologyProfile::Concentrated { dimension, .. } => dimension.clone(),
        }
    }

    /// Zero-filled table `[h^0, ..., h^n]`.
    pub fn table(&self, n: i64) -> Vec<BigUint> {
        (0..=n).map(|i| self.h(i)).collect()
    }

    /// `Σ (-1)^i h^i`.
    pub fn signed_total(&self) -> BigInt {
        match self {
            CohomologyProfile::Vanishes => BigInt::zero(),
            CohomologyProfile::Concentrated { degree, dimension } => {
                let v = BigInt::from(dimension.clone());
                if degree % 2 == 0 {
                    v
                } else {
                    -v
                }
            }
        }
    }
}

/// `H^*(P^l, O(j))` by the Bott rules.
pub fn factor_cohomology(l: i64, j: i64) -> Result<CohomologyProfile> {
    if l < 1 {
        return Err(Error::NonPositiveDimension(l));
    }
    let lu = l as u64;
    let profile = if j >= 0 {
        CohomologyProfile::Concentrated {
            degree: 0,
            dimension: binom(j as i128 + l as i128, lu),
        }
    } else if j <= -l - 1 {
        CohomologyProfile::Concentrated {
            degree: l,
            dimension: binom(-(j as i128) - 1, lu),
        }
    } else {
        CohomologyProfile::Vanishes
    };
    Ok(profile)
}

/// Degree in which `O_X(a)` can be nonzero, without computing dimensions.
///
/// `None` when some factor lands in its vanishing window.
pub fn cohomology_degree(e: &EmbeddingData, a: &MultiDegree) -> Result<Option<i64>> {
    e.check(a)?;
    let mut degree = 0i64;
    for (&l, &ak) in e.dims().iter().zip(a.entries()) {
        if ak <= -l - 1 {
            degree += l;
        } else if ak < 0 {
            return Ok(None);
        }
    }
    Ok(Some(degree))
}

/// `H^*(X, O_X(a))` by Künneth over the factors.
pub fn cohomology_x(e: &EmbeddingData, a: &MultiDegree) -> Result<CohomologyProfile> {
    e.check(a)?;
    let mut degree = 0i64;
    let mut dimension = BigUint::one();
    for (&l, &ak) in e.dims().iter().zip(a.entries()) {
        match factor_cohomology(l, ak)? {
            CohomologyProfile::Vanishes => return Ok(CohomologyProfile::Vanishes),
            CohomologyProfile::Concentrated {
                degree: dk,
                dimension: hk,
            } => {
                degree += dk;
                dimension *= hk;
            }
        }
    }
    Ok(CohomologyProfile::Concentrated { degree, dimension })
}

/// `χ(O_X(a)) = Π_k χ(P^{l_k}, O(a_k))`, evaluated from the Hilbert polynomial.
pub fn euler_characteristic(e: &EmbeddingData, a: &MultiDegree) -> Result<BigInt> {
    e.check(a)?;
    Ok(e.dims()
        .iter()
        .zip(a.entries())
        .fold(BigInt::one(), |acc, (&l, &ak)| {
            acc * binomial_polynomial(ak, l as u64)
        }))
}

/// `-a - l - 1`, the Serre-dual multidegree (`K_X = O_X(-l-1)`).
pub fn serre_dual(e: &EmbeddingData, a: &MultiDegree) -> Result<MultiDegree> {
    e.check(a)?;
    e.dims()
        .iter()
        .zip(a.entries())
        .map(|(&l, &ak)| to_i64(-(ak as i128) - l as i128 - 1, "Serre dual"))
        .collect::<Result<Vec<_>>>()
        .map(MultiDegree)
}
