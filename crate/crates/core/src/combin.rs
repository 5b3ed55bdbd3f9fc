//! Exact binomial coefficients and factorials on big integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// C(n, k), exact. Returns 0 for k > n.
pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // (acc * (n - k + i)) is always divisible by i: acc is C(n-k+i-1, i-1).
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// n!, exact.
pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}
