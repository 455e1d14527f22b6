//! Exact binomial coefficients.
//!
//! Two conventions are in play and they disagree for negative tops, so they
//! get distinct names:
//!
//! * [`binom_nat`] is the counting binomial: `C(n, k)` for `n ≥ 0`, and `0`
//!   whenever `k < 0` or `k > n`.
//! * [`binom_gen`] is the polynomial binomial `a(a-1)…(a-k+1)/k!`, defined for
//!   every integer top. It satisfies `binom_gen(-x, k) = (-1)^k binom_gen(x+k-1, k)`.
//!
//! Every closed form elsewhere in the crate names the convention it uses.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer used for every count and transform value.
pub type ExactInt = BigInt;

/// Counting binomial `C(n, k)`; zero outside `0 ≤ k ≤ n`.
pub fn binom_nat(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = k as u64;
    falling_ratio(n, k.min(n - k))
}

/// Polynomial binomial `a(a-1)…(a-k+1)/k!` for any integer `a`.
pub fn binom_gen(a: i64, k: u64) -> ExactInt {
    if a >= 0 {
        // Vanishes once the falling product hits zero, i.e. when k > a.
        binom_nat(a as u64, k as i64)
    } else {
        let magnitude = binom_nat((-(a as i128) + k as i128 - 1) as u64, k as i64);
        if k.is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        }
    }
}

/// `Σ_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) C(n, j)`, evaluated term by term.
///
/// By Chu–Vandermonde this equals `binom_gen(n-d+k-1, k)`; the explicit fold
/// exists so the identity can be checked rather than assumed.
///
/// Panics if `k > d`.
pub fn vandermonde_fold(n: u64, d: u64, k: u64) -> ExactInt {
    assert!(k <= d, "vandermonde_fold requires k <= d (k = {k}, d = {d})");
    let mut sum = ExactInt::zero();
    for j in 0..=k {
        let term = binom_nat(d - j, (k - j) as i64) * binom_nat(n, j as i64);
        if (k - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `n(n-1)…(n-k+1)/k!` by the multiplicative rule, dividing by `i` right after
/// multiplying in the `i`-th factor so every intermediate is `C(n-k+i, i)`.
fn falling_ratio(n: u64, k: u64) -> ExactInt {
    let mut acc: u128 = 1;
    for i in 1..=k {
        let factor = (n - k + i) as u128;
        match acc.checked_mul(factor) {
            Some(p) => acc = p / i as u128,
            None => return falling_ratio_big(n, k),
        }
    }
    ExactInt::from(acc)
}

fn falling_ratio_big(n: u64, k: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Smallest `c ≥ 0` with `c^r ≥ value` (exact integer root ceiling).
pub fn root_ceil(value: &ExactInt, r: u32) -> ExactInt {
    assert!(r >= 1, "root index must be positive");
    if *value <= ExactInt::zero() {
        return ExactInt::zero();
    }
    // Doubling then bisection on the monotone predicate c^r >= value.
    let mut hi = ExactInt::one();
    while num_traits::pow(hi.clone(), r as usize) < *value {
        hi *= 2;
    }
    let mut lo: ExactInt = &hi / 2;
    while &hi - &lo > ExactInt::one() {
        let mid: ExactInt = (&lo + &hi) / 2;
        if num_traits::pow(mid.clone(), r as usize) >= *value {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if num_traits::pow(lo.clone(), r as usize) >= *value {
        lo
    } else {
        hi
    }
}
