//! The intersection `I = I_{n_1,…,n_r}` of `r` primes on disjoint blocks of
//! variables, `N = n_1 + ⋯ + n_r`.
//!
//! Inclusion–exclusion sums below run over *all* subsets `J ⊆ [r]` of blocks
//! (for the quotient, all nonempty ones). The full set contributes
//! `(-1)^r δ_{k0}` to `α_k` and `(-1)^{r+k} C(d,k)` to `β_k^d`; dropping it
//! breaks agreement with enumeration.

use num_traits::{One, Signed, Zero};

use super::{ceil_half, BoundReport};
use crate::combinatorics::{binom_gen, binom_nat, root_ceil, ExactInt};
use crate::error::{Error, Result};
use crate::ideal::{ModuleKind, MultipartiteSpec};

/// `Σ_{J ⊆ [r]} (-1)^{|J|} f(N - Σ_{i∈J} n_i)`, skipping `J = ∅` when
/// `skip_empty`.
fn signed_block_sum(spec: &MultipartiteSpec, skip_empty: bool, f: impl Fn(usize) -> ExactInt) -> ExactInt {
    let r = spec.len();
    let total = spec.total();
    let mut sum = ExactInt::zero();
    for subset in 0u32..(1 << r) {
        if skip_empty && subset == 0 {
            continue;
        }
        let removed: usize = (0..r).filter(|i| subset >> i & 1 == 1).map(|i| spec.blocks()[i]).sum();
        let term = f(total - removed);
        if subset.count_ones() % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `α_k(I)` as a sum over compositions `l_1 + ⋯ + l_r = k`, `l_i ≥ 1`, of
/// `C(n_1,l_1)⋯C(n_r,l_r)`, accumulated block by block.
pub fn multipartite_alpha_compositions(spec: &MultipartiteSpec, k: usize) -> ExactInt {
    // coefficients of Π_i Σ_{l≥1} C(n_i, l) t^l, truncated at degree k
    let mut poly = vec![ExactInt::zero(); k + 1];
    poly[0] = ExactInt::one();
    for &size in spec.blocks() {
        let mut next = vec![ExactInt::zero(); k + 1];
        for (deg, coeff) in poly.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for l in 1..=size.min(k - deg) {
                next[deg + l] += coeff * binom_nat(size as u64, l as i64);
            }
        }
        poly = next;
    }
    poly.swap_remove(k)
}

/// `α_k` by inclusion–exclusion over block subsets (counting binomials).
pub fn multipartite_alpha(spec: &MultipartiteSpec, k: usize, kind: ModuleKind) -> ExactInt {
    let term = |top: usize| binom_nat(top as u64, k as i64);
    match kind {
        ModuleKind::Ideal => signed_block_sum(spec, false, term),
        ModuleKind::Quotient => -signed_block_sum(spec, true, term),
    }
}

/// `β_k^d` by inclusion–exclusion with shifted tops
/// `N - Σ_{i∈J} n_i - d + k - 1` (polynomial binomials).
pub fn multipartite_beta(spec: &MultipartiteSpec, d: usize, k: usize, kind: ModuleKind) -> Result<ExactInt> {
    if k > d || d > spec.total() {
        return Err(Error::InvalidSpec(format!(
            "need 0 <= k <= d <= N, got k={k} d={d} N={}",
            spec.total()
        )));
    }
    let term = |top: usize| binom_gen(top as i64 - d as i64 + k as i64 - 1, k as u64);
    Ok(match kind {
        ModuleKind::Ideal => signed_block_sum(spec, false, term),
        ModuleKind::Quotient => -signed_block_sum(spec, true, term),
    })
}

/// `β_r^d(S/I) = C(N-d+r-1, r) - n_1⋯n_r` for `r ≤ d ≤ N`.
pub fn multipartite_beta_r_quotient(spec: &MultipartiteSpec, d: usize) -> Result<ExactInt> {
    let (r, total) = (spec.len(), spec.total());
    if d < r || d > total {
        return Err(Error::InvalidSpec(format!("need r <= d <= N, got r={r} d={d} N={total}")));
    }
    Ok(binom_nat((total - d + r - 1) as u64, r as i64) - spec.product())
}

/// `Σ ⌈n_i/2⌉`.
pub fn sum_half_ceil(spec: &MultipartiteSpec) -> usize {
    spec.blocks().iter().map(|&b| ceil_half(b)).sum()
}

/// `⌊(N + r)/2⌋`.
pub fn conjectured_ideal_qdepth(spec: &MultipartiteSpec) -> usize {
    (spec.total() + spec.len()) / 2
}

/// Whether the upper and lower ideal bounds coincide, which pins the Hilbert
/// depth of `I` (two blocks, or at most one even block).
pub fn ideal_qdepth_guaranteed(spec: &MultipartiteSpec) -> bool {
    spec.len() <= 2 || spec.even_blocks() <= 1
}

/// `Σ⌈n_i/2⌉ ≤ sdepth(I) ≤ qdepth(I) ≤ ⌊(N+r)/2⌋`, reported for `qdepth(I)`.
pub fn multipartite_ideal_bounds(spec: &MultipartiteSpec) -> BoundReport {
    let lower = sum_half_ceil(spec) as i64;
    let upper = conjectured_ideal_qdepth(spec) as i64;
    let mut report = BoundReport::new(
        "qdepth(I)",
        "intersection of disjoint primes: floor((N+r)/2) >= qdepth(I) >= sdepth(I) >= sum ceil(n_i/2)",
    )
    .lower(lower)
    .upper(upper)
    .conjectured(upper);
    if ideal_qdepth_guaranteed(spec) || lower == upper {
        report = report.exact(upper);
    }
    report
}

/// `N - min n_i ≥ qdepth(S/I) ≥ sdepth(S/I) ≥ Σ⌈n_i/2⌉ - min⌈n_i/2⌉`.
pub fn multipartite_quotient_bounds(spec: &MultipartiteSpec) -> BoundReport {
    let lower = (sum_half_ceil(spec) - ceil_half(spec.min_block())) as i64;
    let upper = (spec.total() - spec.min_block()) as i64;
    let mut report = BoundReport::new(
        "qdepth(S/I)",
        "intersection of disjoint primes: N - min n_i >= qdepth(S/I) >= sdepth(S/I) >= sum ceil(n_i/2) - min ceil(n_i/2)",
    )
    .lower(lower)
    .upper(upper)
    .note(format!("qdepth(S/I) >= depth(S/I) = r - 1 = {}", spec.len() - 1));
    if lower == upper {
        report = report.exact(lower);
    }
    report
}

/// Hilbert depth from the closed-form `β`: the largest `d` inside the known
/// window whose entries `β_k^d` are nonnegative for `r ≤ k ≤ d`. `None` if no
/// `d` in the window qualifies.
pub fn multipartite_qdepth_characterized(spec: &MultipartiteSpec, kind: ModuleKind) -> Option<usize> {
    let (lower, upper) = match kind {
        ModuleKind::Ideal => (sum_half_ceil(spec), conjectured_ideal_qdepth(spec)),
        ModuleKind::Quotient => (
            sum_half_ceil(spec) - ceil_half(spec.min_block()),
            spec.total() - spec.min_block(),
        ),
    };
    let r = spec.len();
    (lower..=upper).rev().find(|&d| {
        (r..=d).all(|k| {
            !multipartite_beta(spec, d, k, kind)
                .expect("k <= d <= N")
                .is_negative()
        })
    })
}

/// `min{d ≥ r : C(N-d+r-1, r) < n_1⋯n_r} - 1`, an upper bound on `qdepth(S/I)`.
pub fn quotient_upper_bound_binomial(spec: &MultipartiteSpec) -> usize {
    let (r, total) = (spec.len(), spec.total());
    let product = spec.product();
    let first = (r..=total)
        .find(|&d| binom_nat((total - d + r - 1) as u64, r as i64) < product)
        .expect("at d = N the binomial C(r-1, r) vanishes");
    first - 1
}

/// `⌈(r! n_1⋯n_r)^{1/r}⌉` by exact integer root.
pub fn root_of_scaled_product(spec: &MultipartiteSpec) -> usize {
    let r = spec.len();
    let factorial: ExactInt = (1..=r).fold(ExactInt::one(), |acc, i| acc * i);
    let value = factorial * spec.product();
    let root = root_ceil(&value, r as u32);
    root.try_into().expect("root is at most N")
}

/// `N - ⌈(r! n_1⋯n_r)^{1/r}⌉`: every `d` up to this value has
/// `β_r^d(S/I) ≥ 0`. It doubles as the estimate for `qdepth(S/I)`.
pub fn quotient_safe_range(spec: &MultipartiteSpec) -> i64 {
    spec.total() as i64 - root_of_scaled_product(spec) as i64
}

/// The uniform threshold `N (1 - (r!/r^r)^{1/r})` as a float, for display.
pub fn means_inequality_bound(spec: &MultipartiteSpec) -> f64 {
    let r = spec.len() as f64;
    let factorial: f64 = (1..=spec.len()).map(|i| i as f64).product();
    spec.total() as f64 * (1.0 - (factorial / r.powf(r)).powf(1.0 / r))
}

/// Largest integer `d ≤ N (1 - (r!/r^r)^{1/r})`, decided exactly via
/// `(r (N - d))^r ≥ N^r r!`.
pub fn means_inequality_limit(spec: &MultipartiteSpec) -> i64 {
    let (r, total) = (spec.len(), spec.total());
    let factorial: ExactInt = (1..=r).fold(ExactInt::one(), |acc, i| acc * i);
    let rhs = num_traits::pow(ExactInt::from(total), r) * factorial;
    (0..=total as i64)
        .rev()
        .find(|&d| num_traits::pow(ExactInt::from(r as i64 * (total as i64 - d)), r) >= rhs)
        .unwrap_or(-1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(blocks: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(blocks.to_vec()).unwrap()
    }

    fn big(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(multipartite_alpha(&spec(&[2, 2]), 2, ModuleKind::Ideal), big(4));
        assert_eq!(multipartite_alpha(&spec(&[2, 1, 1]), 4, ModuleKind::Ideal), big(1));
        assert_eq!(multipartite_alpha(&spec(&[1, 1, 1]), 2, ModuleKind::Quotient), big(3));
        assert_eq!(multipartite_alpha(&spec(&[2, 2]), 0, ModuleKind::Ideal), big(0));
        assert_eq!(multipartite_alpha(&spec(&[2, 2]), 0, ModuleKind::Quotient), big(1));
    }

    #[test]
    fn both_alpha_forms_and_special_values() {
        for r in 1..=4 {
            for s in MultipartiteSpec::grid(r, 4) {
                let product = s.product();
                let total = s.total();
                for k in 0..=total {
                    let ie = multipartite_alpha(&s, k, ModuleKind::Ideal);
                    assert_eq!(ie, multipartite_alpha_compositions(&s, k), "{s} k={k}");
                    let q = multipartite_alpha(&s, k, ModuleKind::Quotient);
                    assert_eq!(&ie + &q, binom_nat(total as u64, k as i64));
                    if k < r {
                        assert!(ie.is_zero());
                    }
                    if k == r {
                        assert_eq!(ie, product);
                    }
                    if k == r + 1 {
                        assert_eq!(ie, &product * (total - r) / 2);
                    }
                    if k > total - s.min_block() {
                        assert_eq!(ie, binom_nat(total as u64, k as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(multipartite_beta(&spec(&[1, 1, 1]), 3, 3, ModuleKind::Quotient).unwrap(), big(-1));
        assert_eq!(multipartite_beta(&spec(&[2, 2]), 3, 3, ModuleKind::Ideal).unwrap(), big(0));
        assert!(multipartite_beta(&spec(&[2, 2]), 1, 2, ModuleKind::Ideal).is_err());
        assert_eq!(multipartite_beta_r_quotient(&spec(&[1, 1, 1]), 3).unwrap(), big(-1));
        assert!(multipartite_beta_r_quotient(&spec(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn two_blocks_match_bipartite_forms() {
        use crate::closed_forms::{bipartite_beta, BipartiteParams};
        for p in BipartiteParams::grid(12) {
            let s = spec(&[p.n(), p.m()]);
            for d in 0..=p.total() {
                for k in 0..=d {
                    for kind in [ModuleKind::Ideal, ModuleKind::Quotient] {
                        assert_eq!(multipartite_beta(&s, d, k, kind).unwrap(), bipartite_beta(p, d, k, kind).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn r_entry_formula() {
        for r in 1..=4 {
            for s in MultipartiteSpec::grid(r, 4) {
                for d in r..=s.total() {
                    assert_eq!(
                        multipartite_beta(&s, d, r, ModuleKind::Quotient).unwrap(),
                        multipartite_beta_r_quotient(&s, d).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bound_examples() {
        let b = multipartite_ideal_bounds(&spec(&[2, 2, 2]));
        assert_eq!((b.lower, b.upper, b.exact, b.conjectured), (Some(3), Some(4), None, Some(4)));
        assert_eq!(multipartite_ideal_bounds(&spec(&[1, 1, 1])).exact, Some(3));
        assert_eq!(multipartite_ideal_bounds(&spec(&[3, 2])).exact, Some(3));

        let q = multipartite_quotient_bounds(&spec(&[2, 2]));
        assert_eq!((q.lower, q.upper), (Some(1), Some(2)));
        let q = multipartite_quotient_bounds(&spec(&[1, 1, 1]));
        assert_eq!((q.lower, q.upper, q.exact), (Some(2), Some(2), Some(2)));
        let q = multipartite_quotient_bounds(&spec(&[3, 2]));
        assert_eq!((q.lower, q.upper), (Some(2), Some(3)));
    }

    #[test]
    fn bounds_are_consistent() {
        for r in 1..=5 {
            for s in MultipartiteSpec::grid(r, 4) {
                assert!(multipartite_ideal_bounds(&s).is_consistent(), "{s}");
                assert!(multipartite_quotient_bounds(&s).is_consistent(), "{s}");
            }
        }
    }

    #[test]
    fn binomial_upper_bound_examples() {
        assert_eq!(quotient_upper_bound_binomial(&spec(&[2, 2])), 1);
        assert_eq!(quotient_upper_bound_binomial(&spec(&[1, 1, 1])), 2);
        assert_eq!(quotient_upper_bound_binomial(&spec(&[3, 3])), 2);
    }

    #[test]
    fn safe_range_examples() {
        assert_eq!(quotient_safe_range(&spec(&[2, 2])), 1);
        assert_eq!(quotient_safe_range(&spec(&[1, 1, 1])), 1);
        assert_eq!(quotient_safe_range(&spec(&[3, 3])), 1);
    }

    #[test]
    fn safe_range_keeps_r_entry_nonnegative() {
        for r in 1..=5 {
            for s in MultipartiteSpec::grid(r, 5) {
                let limit = quotient_safe_range(&s);
                for d in r as i64..=limit {
                    assert!(!multipartite_beta_r_quotient(&s, d as usize).unwrap().is_negative(), "{s} d={d}");
                }
            }
        }
    }

    #[test]
    fn means_inequality_threshold() {
        for r in 1..=5 {
            for s in MultipartiteSpec::grid(r, 5) {
                let limit = means_inequality_limit(&s);
                assert!(limit <= quotient_safe_range(&s), "{s}");
                assert!(limit as f64 <= means_inequality_bound(&s) + 1e-9);
                assert!((limit + 1) as f64 > means_inequality_bound(&s) - 1e-9);
            }
            for n in 1..=6usize {
                let s = spec(&vec![n; r]);
                let power = num_traits::pow(ExactInt::from(n), r);
                for d in r as i64..=means_inequality_limit(&s) {
                    let top = (s.total() as i64 - d + r as i64 - 1) as u64;
                    assert!(binom_nat(top, r as i64) >= power, "{s} d={d}");
                }
            }
        }
    }
}
