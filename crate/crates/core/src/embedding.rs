//! The fixed data of a Segre-Veronese embedding and the multidegrees that
//! index line bundles on it.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinat::binom;
use crate::error::{Error, Result};

/// Enumeration limits for subset (`2^r - 1`) and permutation (`r!`) loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub subsets: usize,
    pub perms: usize,
}

impl Caps {
    /// Subsets are encoded as `u64` bitmasks, so this is a hard ceiling.
    pub const MAX_SUBSETS: usize = 63;

    pub fn new(subsets: usize, perms: usize) -> Result<Self> {
        if subsets == 0 || subsets > Self::MAX_SUBSETS {
            return Err(Error::InvalidCap(format!(
                "subsets must be in 1..={}, got {subsets}",
                Self::MAX_SUBSETS
            )));
        }
        if perms == 0 {
            return Err(Error::InvalidCap("perms must be positive".into()));
        }
        Ok(Caps { subsets, perms })
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subsets: 20,
            perms: 8,
        }
    }
}

/// `X = P^{l_1} x ... x P^{l_r}` embedded by `O_X(d_1, ..., d_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingData {
    l: Vec<i64>,
    d: Vec<i64>,
    n: i64,
    caps: Caps,
}

impl EmbeddingData {
    pub fn new(l: Vec<i64>, d: Vec<i64>) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::NoFactors);
        }
        if l.len() != d.len() {
            return Err(Error::ShapeMismatch {
                l: l.len(),
                d: d.len(),
            });
        }
        if let Some(&bad) = l.iter().find(|&&x| x < 1) {
            return Err(Error::NonPositiveDimension(bad));
        }
        if let Some(&bad) = d.iter().find(|&&x| x < 1) {
            return Err(Error::NonPositiveDegree(bad));
        }
        let n = l
            .iter()
            .try_fold(0i64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("n = sum of l"))?;
        Ok(EmbeddingData {
            l,
            d,
            n,
            caps: Caps::default(),
        })
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    /// Number of factors `r`.
    pub fn rank(&self) -> usize {
        self.l.len()
    }

    pub fn dims(&self) -> &[i64] {
        &self.l
    }

    pub fn degrees(&self) -> &[i64] {
        &self.d
    }

    /// `dim X = l_1 + ... + l_r`.
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// `N = Π C(l_k + d_k, d_k) - 1`, the dimension of the target projective space.
    pub fn ambient_dim(&self) -> BigUint {
        let count = self
            .l
            .iter()
            .zip(&self.d)
            .fold(BigUint::one(), |acc, (&l, &d)| {
                acc * binom(l as i128 + d as i128, d as u64)
            });
        count - BigUint::one()
    }

    /// Sum of `l_k` over the subset encoded by `mask`.
    pub fn l_of(&self, mask: u64) -> i64 {
        crate::combinat::members(mask).map(|k| self.l[k]).sum()
    }

    pub fn check(&self, a: &MultiDegree) -> Result<()> {
        if a.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: a.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_subsets(&self) -> Result<()> {
        if self.rank() > self.caps.subsets {
            return Err(Error::CapExceeded {
                kind: "subset",
                r: self.rank(),
                cap: self.caps.subsets,
            });
        }
        Ok(())
    }

    pub(crate) fn require_perms(&self) -> Result<()> {
        if self.rank() > self.caps.perms {
            return Err(Error::CapExceeded {
                kind: "permutation",
                r: self.rank(),
                cap: self.caps.perms,
            });
        }
        Ok(())
    }

    /// `a + p·d`, i.e. the multidegree of `F(a)(p) = O_X(a + p d)`.
    pub fn twist(&self, a: &MultiDegree, p: i64) -> Result<MultiDegree> {
        twist(a, p, self)
    }
}

impl fmt::Display for EmbeddingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "l={} d={}",
            MultiDegree(self.l.clone()),
            MultiDegree(self.d.clone())
        )
    }
}

/// An integer `r`-tuple: a twist `m`, a test point `p`, or a dual twist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiDegree(entries)
    }

    pub fn zero(r: usize) -> Self {
        MultiDegree(vec![0; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &MultiDegree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &MultiDegree) -> Result<MultiDegree> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("multidegree sum")))
            .collect::<Result<Vec<_>>>()
            .map(MultiDegree)
    }
}

impl From<Vec<i64>> for MultiDegree {
    fn from(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }
}

impl<const R: usize> From<[i64; R]> for MultiDegree {
    fn from(v: [i64; R]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn to_i64(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Componentwise `a_k + p·d_k`.
pub fn twist(a: &MultiDegree, p: i64, e: &EmbeddingData) -> Result<MultiDegree> {
    e.check(a)?;
    a.0.iter()
        .zip(e.degrees())
        .map(|(&ak, &dk)| to_i64(ak as i128 + p as i128 * dk as i128, "twist"))
        .collect::<Result<Vec<_>>>()
        .map(MultiDegree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn emb(l: &[i64], d: &[i64]) -> EmbeddingData {
        EmbeddingData::new(l.to_vec(), d.to_vec()).unwrap()
    }

    #[test]
    fn derived_dimensions() {
        let e = emb(&[1, 1], &[1, 1]);
        assert_eq!(e.n(), 2);
        assert_eq!(e.ambient_dim(), BigUint::from(3u32));

        // Veronese surface: P^2 by O(2) lands in P^5.
        assert_eq!(emb(&[2], &[2]).ambient_dim(), BigUint::from(5u32));
        // P^1 x P^2 by O(1,1): 2*3 - 1.
        assert_eq!(emb(&[1, 2], &[1, 1]).ambient_dim(), BigUint::from(5u32));
        assert_eq!(emb(&[1, 2], &[1, 1]).n(), 3);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(EmbeddingData::new(vec![], vec![]), Err(Error::NoFactors));
        assert_eq!(
            EmbeddingData::new(vec![1, 1], vec![1]),
            Err(Error::ShapeMismatch { l: 2, d: 1 })
        );
        assert_eq!(
            EmbeddingData::new(vec![0], vec![1]),
            Err(Error::NonPositiveDimension(0))
        );
        assert_eq!(
            EmbeddingData::new(vec![2], vec![-1]),
            Err(Error::NonPositiveDegree(-1))
        );
        assert_eq!(
            EmbeddingData::new(vec![i64::MAX, 1], vec![1, 1]),
            Err(Error::Overflow("n = sum of l"))
        );
    }

    #[test]
    fn twist_examples() {
        let e = emb(&[1, 1], &[1, 3]);
        assert_eq!(
            e.twist(&[0, 0].into(), 2).unwrap(),
            MultiDegree::from([2, 6])
        );
        let e = emb(&[1, 1], &[5, 7]);
        assert_eq!(
            e.twist(&[1, -1].into(), 0).unwrap(),
            MultiDegree::from([1, -1])
        );
        let e = emb(&[1, 1], &[2, 1]);
        assert_eq!(
            e.twist(&[0, 3].into(), -1).unwrap(),
            MultiDegree::from([-2, 2])
        );
        assert_eq!(
            e.twist(&[0].into(), 1),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            e.twist(&[i64::MAX, 0].into(), 1),
            Err(Error::Overflow("twist"))
        );
    }

    #[test]
    fn caps_validation() {
        assert!(Caps::new(0, 3).is_err());
        assert!(Caps::new(64, 3).is_err());
        assert!(Caps::new(5, 0).is_err());
        let e = emb(&[1, 1, 1], &[1, 1, 1]).with_caps(Caps::new(2, 2).unwrap());
        assert!(matches!(
            e.require_subsets(),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(e.require_perms(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn display_forms() {
        assert_eq!(MultiDegree::from([1, -2, 3]).to_string(), "(1,-2,3)");
        assert_eq!(emb(&[1, 2], &[3, 4]).to_string(), "l=(1,2) d=(3,4)");
    }
}
