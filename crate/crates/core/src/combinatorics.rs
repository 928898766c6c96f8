//! Exact binomial and multinomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(top, k)` with `C(-1, 0) = 1` and zero whenever `top < k`.
///
/// The only negative upper index the uniform identities hit is `top = -1` with
/// `k = 0`, so this is not the full generalized binomial.
pub fn binomial_i(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if top < k {
        return BigInt::zero();
    }
    binomial(top as u64, k as u64)
}

/// Number of chains `A_1 ⊂ ... ⊂ A_k` of subsets of an `n`-set with `|A_i| = sizes[i]`
/// (`sizes` strictly increasing, each at most `n`).
pub fn multinomial_chain(n: u64, sizes: &[u64]) -> BigInt {
    let mut acc = BigInt::one();
    let mut prev = 0u64;
    for &s in sizes {
        debug_assert!(s >= prev && s <= n);
        acc *= binomial(n - prev, s - prev);
        prev = s;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial_i(-1, 0), BigInt::one());
        assert_eq!(binomial_i(2, 3), BigInt::zero());
    }

    #[test]
    fn chain_counts() {
        // chains {a} ⊂ {a,b} in a 3-set: 3 * 2
        assert_eq!(multinomial_chain(3, &[1, 2]), BigInt::from(6));
        assert_eq!(multinomial_chain(4, &[2]), BigInt::from(6));
        assert_eq!(multinomial_chain(4, &[]), BigInt::one());
    }
}
