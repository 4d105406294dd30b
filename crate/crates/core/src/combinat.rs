//! Exact integer helpers shared by the cohomology and regularity code.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Binomial coefficient `C(top, k)` as an exact natural number.
///
/// Follows the clamped convention used for cohomology dimensions: the result
/// is zero whenever `top < 0` or `top < k`.
pub fn binom(top: impl Into<i128>, k: u64) -> BigUint {
    let top = top.into();
    if top < 0 || top < k as i128 {
        return BigUint::zero();
    }
    let top = top as u128;
    let k = (k as u128).min(top - k as u128);

    // Running product stays an exact binomial: C(top-k+i, i) at step i.
    let mut small: u128 = 1;
    let mut i: u128 = 1;
    while i <= k {
        let factor = top - k + i;
        match small.checked_mul(factor) {
            Some(v) => small = v / i,
            None => break,
        }
        i += 1;
    }
    if i > k {
        return BigUint::from(small);
    }
    let mut acc = BigUint::from(small);
    while i <= k {
        acc *= BigUint::from(top - k + i);
        acc /= BigUint::from(i);
        i += 1;
    }
    acc
}

/// Exact value of the binomial polynomial `(a+1)(a+2)...(a+l) / l!`.
///
/// Unlike [`binom`] this keeps its sign for negative `a`, which is what the
/// Euler characteristic of `O(a)` on `P^l` needs.
pub fn binomial_polynomial(a: i64, l: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 1..=l {
        num *= BigInt::from(a as i128 + t as i128);
        den *= BigInt::from(t);
    }
    num / den
}

/// Floor division for a positive divisor.
pub fn floor_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    num.div_euclid(den)
}

/// Ceiling division for a positive divisor, written as `floor((x + y - 1) / y)`.
pub fn ceil_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    floor_div(num + den - 1, den)
}

/// Iterates the members of a subset encoded as a bitmask, lowest first.
pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(k)
        }
    })
}

/// `sums[mask] = Σ_{k ∈ mask} values[k]` for every subset of `values`.
pub fn subset_sums(values: &[i64]) -> Vec<i128> {
    let size = 1usize << values.len();
    let mut sums = vec![0i128; size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + values[low] as i128;
    }
    sums
}

pub fn mask_to_indices(mask: u64) -> Vec<usize> {
    members(mask).collect()
}
