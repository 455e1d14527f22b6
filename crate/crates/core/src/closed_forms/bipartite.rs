//! The edge ideal of the complete bipartite graph,
//! `I = (x_1..x_n) ∩ (x_{n+1}..x_{n+m})` with `n ≥ m ≥ 1`.

use num_traits::{One, Zero};

use super::{ceil_half, BoundReport};
use crate::combinatorics::{binom_gen, binom_nat, ExactInt};
use crate::error::{Error, Result};
use crate::ideal::ModuleKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartiteParams {
    n: usize,
    m: usize,
}

impl BipartiteParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || n < m {
            return Err(Error::InvalidSpec(format!("bipartite parameters need n >= m >= 1, got ({n},{m})")));
        }
        Ok(BipartiteParams { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn total(&self) -> usize {
        self.n + self.m
    }

    /// All parameter pairs `1 ≤ m ≤ n` with `n + m ≤ max_total`, ordered by
    /// `(n, m)`.
    pub fn grid(max_total: usize) -> Vec<BipartiteParams> {
        let mut out = Vec::new();
        for n in 1..max_total {
            for m in 1..=n.min(max_total - n) {
                out.push(BipartiteParams { n, m });
            }
        }
        out
    }
}

fn delta0(k: usize) -> ExactInt {
    if k == 0 {
        ExactInt::one()
    } else {
        ExactInt::zero()
    }
}

/// `α_k` in closed form (counting binomials):
/// ideal `C(N,k) - C(n,k) - C(m,k) + δ_{k0}`, quotient `C(n,k) + C(m,k) - δ_{k0}`.
pub fn bipartite_alpha(p: BipartiteParams, k: usize, kind: ModuleKind) -> ExactInt {
    let (n, m, total) = (p.n as u64, p.m as u64, p.total() as u64);
    let k_i = k as i64;
    match kind {
        ModuleKind::Ideal => binom_nat(total, k_i) - binom_nat(n, k_i) - binom_nat(m, k_i) + delta0(k),
        ModuleKind::Quotient => binom_nat(n, k_i) + binom_nat(m, k_i) - delta0(k),
    }
}

/// `α_k(I)` as the convolution `Σ_{j=1}^{k-1} C(n,j) C(m,k-j)` (zero for `k ≤ 1`).
pub fn bipartite_alpha_convolution(p: BipartiteParams, k: usize) -> ExactInt {
    (1..k)
        .map(|j| binom_nat(p.n as u64, j as i64) * binom_nat(p.m as u64, (k - j) as i64))
        .sum()
}

/// `β_k^d` in closed form; tops `x - d + k - 1` may be negative, so these use
/// the polynomial binomial.
pub fn bipartite_beta(p: BipartiteParams, d: usize, k: usize, kind: ModuleKind) -> Result<ExactInt> {
    if k > d || d > p.total() {
        return Err(Error::InvalidSpec(format!("need 0 <= k <= d <= N, got k={k} d={d} N={}", p.total())));
    }
    let shifted = |x: usize| binom_gen(x as i64 - d as i64 + k as i64 - 1, k as u64);
    let signed_top = if k.is_multiple_of(2) {
        binom_nat(d as u64, k as i64)
    } else {
        -binom_nat(d as u64, k as i64)
    };
    Ok(match kind {
        ModuleKind::Quotient => shifted(p.n) + shifted(p.m) - signed_top,
        ModuleKind::Ideal => shifted(p.total()) - shifted(p.n) - shifted(p.m) + signed_top,
    })
}

/// `β_3^d(I) = n m (N - 2d + 2) / 2`.
pub fn bipartite_beta3_ideal(p: BipartiteParams, d: usize) -> ExactInt {
    let value = ExactInt::from(p.n * p.m) * (p.total() as i64 - 2 * d as i64 + 2);
    value / 2
}

/// `⌊n + m + 1/2 - √(2mn + 1/4)⌋`, decided with integers only.
///
/// With `s = √(8mn + 1)` the value is `⌊N + (1 - s)/2⌋`, and `c ≤ N + (1 - s)/2`
/// iff `(2(N - c) + 1)² ≥ 8mn + 1`. The answer is `N - u` for the least such
/// `u = N - c ≥ 0`.
pub fn bipartite_qdepth_quotient_upper(p: BipartiteParams) -> usize {
    let target = 8 * (p.n as u128) * (p.m as u128) + 1;
    let u = (0..=p.total() as u128)
        .find(|u| (2 * u + 1) * (2 * u + 1) >= target)
        .expect("(2N + 1)^2 >= 8nm + 1");
    p.total() - u as usize
}

/// Hilbert depth of `S/I` as the largest `d ≤ N` with
/// `binom_gen(d-n, 2l) + binom_gen(d-m, 2l) ≥ C(d, 2l)` for `1 ≤ l ≤ ⌊d/2⌋`.
/// Stated for `m ≥ 2`; smaller `m` is rejected.
pub fn bipartite_qdepth_quotient(p: BipartiteParams) -> Result<usize> {
    if p.m < 2 {
        return Err(Error::Hypothesis(format!("the even-row characterization needs m >= 2, got m = {}", p.m)));
    }
    let holds = |d: usize| {
        (1..=d / 2).all(|l| {
            let k = 2 * l as u64;
            binom_gen(d as i64 - p.n as i64, k) + binom_gen(d as i64 - p.m as i64, k)
                >= binom_nat(d as u64, k as i64)
        })
    };
    Ok((0..=p.total()).rev().find(|&d| holds(d)).expect("d = 0 holds vacuously"))
}

/// `⌊(n + m + 2) / 2⌋`.
pub fn bipartite_hdepth_ideal(p: BipartiteParams) -> usize {
    (p.total() + 2) / 2
}

/// Stanley-depth windows for `S/I` and `I` (in that order).
pub fn bipartite_sdepth_bounds(p: BipartiteParams) -> (BoundReport, BoundReport) {
    let m = p.m as i64;
    let half_n = ceil_half(p.n) as i64;
    let half_m = ceil_half(p.m) as i64;

    let mut quotient = BoundReport::new(
        "sdepth(S/I)",
        "bipartite edge ideal: min(m, ceil(n/2)) <= sdepth(S/I) <= m, equal to m when n >= 2m-1",
    )
    .lower(m.min(half_n))
    .upper(m)
    .note("depth(S/I) = 1");
    if p.n + 1 >= 2 * p.m {
        quotient = quotient.exact(m);
    }

    let mut ideal = BoundReport::new(
        "sdepth(I)",
        "bipartite edge ideal: ceil(n/2) + ceil(m/2) <= sdepth(I) <= m + ceil(n/2), equality at the lower end unless n, m are both even",
    )
    .lower(half_n + half_m)
    .upper(m + half_n);
    if p.n % 2 == 1 || p.m % 2 == 1 {
        ideal = ideal.exact(half_n + half_m);
    }
    (quotient, ideal)
}

/// Hilbert-depth facts for both modules of the bipartite ideal.
pub fn bipartite_qdepth_bounds(p: BipartiteParams) -> (BoundReport, BoundReport) {
    let upper = bipartite_qdepth_quotient_upper(p) as i64;
    let mut quotient = BoundReport::new(
        "qdepth(S/I)",
        "bipartite edge ideal: qdepth(S/I) <= floor(n + m + 1/2 - sqrt(2mn + 1/4)); < m iff n <= 2m-2; m <= qdepth(S/I) <= n-m+1 when n >= 2m-1",
    )
    .lower(1)
    .upper(upper);
    if p.n + 1 >= 2 * p.m {
        quotient.lower = Some(p.m as i64);
        quotient.upper = Some(upper.min((p.n + 1 - p.m) as i64));
    }
    if let Ok(q) = bipartite_qdepth_quotient(p) {
        quotient = quotient.exact(q as i64);
    }
    let ideal = BoundReport::new("qdepth(I)", "bipartite edge ideal: qdepth(I) = floor((n + m + 2) / 2)")
        .exact(bipartite_hdepth_ideal(p) as i64);
    (quotient, ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{QuotientPair, SquarefreeIdeal};

    fn p(n: usize, m: usize) -> BipartiteParams {
        BipartiteParams::new(n, m).unwrap()
    }

    fn big(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn params_validation() {
        assert!(BipartiteParams::new(1, 2).is_err());
        assert!(BipartiteParams::new(3, 0).is_err());
        let grid = BipartiteParams::grid(4);
        let pairs: Vec<(usize, usize)> = grid.iter().map(|q| (q.n(), q.m())).collect();
        assert_eq!(pairs, vec![(1, 1), (2, 1), (2, 2), (3, 1)]);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(bipartite_alpha(p(2, 2), 3, ModuleKind::Ideal), big(4));
        assert_eq!(bipartite_alpha(p(2, 2), 0, ModuleKind::Quotient), big(1));
        assert_eq!(bipartite_alpha(p(3, 2), 1, ModuleKind::Quotient), big(5));
        assert_eq!(bipartite_alpha(p(2, 2), 0, ModuleKind::Ideal), big(0));
    }

    #[test]
    fn convolution_matches_closed_form() {
        for q in BipartiteParams::grid(14) {
            for k in 0..=q.total() {
                assert_eq!(bipartite_alpha_convolution(q, k), bipartite_alpha(q, k, ModuleKind::Ideal));
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(bipartite_beta(p(2, 2), 1, 1, ModuleKind::Quotient).unwrap(), big(3));
        assert_eq!(bipartite_beta(p(2, 2), 3, 3, ModuleKind::Ideal).unwrap(), big(0));
        assert_eq!(bipartite_beta(p(2, 2), 4, 3, ModuleKind::Ideal).unwrap(), big(-4));
        assert!(bipartite_beta(p(2, 2), 1, 2, ModuleKind::Ideal).is_err());
        assert!(bipartite_beta(p(2, 2), 5, 2, ModuleKind::Ideal).is_err());
    }

    #[test]
    fn cubic_entry() {
        for q in BipartiteParams::grid(16) {
            for d in 3..=q.total() {
                assert_eq!(
                    bipartite_beta(q, d, 3, ModuleKind::Ideal).unwrap(),
                    bipartite_beta3_ideal(q, d),
                    "({},{}) d={d}",
                    q.n(),
                    q.m()
                );
            }
        }
    }

    #[test]
    fn even_row_at_t_plus_s_plus_one() {
        for s in 1..=5usize {
            for t in s..=5usize {
                let q = p(2 * t, 2 * s);
                let d = t + s + 1;
                let beta = |k| bipartite_beta(q, d, k, ModuleKind::Ideal).unwrap();
                assert_eq!(beta(0), big(0));
                assert_eq!(beta(1), big(0));
                assert_eq!(beta(2), big((4 * s * t) as i64));
                assert_eq!(beta(3), big(0));
                let quartic = (t * s * (2 * s * s + 2 * t * t - 1) / 3) as i64;
                if d >= 4 {
                    assert_eq!(beta(4), big(quartic));
                }
                if d >= 5 {
                    assert_eq!(beta(5), big(quartic));
                }
            }
        }
    }

    #[test]
    fn sqrt_floor_examples() {
        assert_eq!(bipartite_qdepth_quotient_upper(p(2, 2)), 1);
        assert_eq!(bipartite_qdepth_quotient_upper(p(3, 2)), 2);
        assert_eq!(bipartite_qdepth_quotient_upper(p(5, 1)), 3);
    }

    #[test]
    fn sqrt_floor_against_rational_bracketing() {
        // floor(x) = c  iff  c <= x < c + 1, with x = N + 1/2 - sqrt(2mn + 1/4);
        // checked via 2(N - c) + 1 >= sqrt(8mn + 1) > 2(N - c) - 1.
        for q in BipartiteParams::grid(40) {
            let c = bipartite_qdepth_quotient_upper(q) as i128;
            let target = 8 * (q.n() * q.m()) as i128 + 1;
            let hi = 2 * (q.total() as i128 - c) + 1;
            let lo = hi - 2;
            assert!(hi * hi >= target);
            assert!(lo < 0 || lo * lo < target);
        }
    }

    #[test]
    fn characterization_examples() {
        assert_eq!(bipartite_qdepth_quotient(p(2, 2)).unwrap(), 1);
        assert_eq!(bipartite_qdepth_quotient(p(3, 2)).unwrap(), 2);
        // enumeration gives beta_2^3 = -2 here, and the sqrt bound is 2 as well
        assert_eq!(bipartite_qdepth_quotient(p(4, 2)).unwrap(), 2);
        let pair = QuotientPair::quotient(SquarefreeIdeal::bipartite(4, 2).unwrap());
        assert_eq!(crate::hilbert::qdepth_of_pair(&pair, 24).unwrap(), 2);
        assert!(matches!(bipartite_qdepth_quotient(p(4, 1)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn hdepth_formula() {
        assert_eq!(bipartite_hdepth_ideal(p(1, 1)), 2);
        assert_eq!(bipartite_hdepth_ideal(p(2, 2)), 3);
        assert_eq!(bipartite_hdepth_ideal(p(3, 2)), 3);
    }

    #[test]
    fn sdepth_bound_examples() {
        let (quot, ideal) = bipartite_sdepth_bounds(p(3, 2));
        assert_eq!(quot.exact, Some(2));
        assert_eq!(ideal.exact, Some(3));
        let (_, ideal) = bipartite_sdepth_bounds(p(2, 2));
        assert_eq!((ideal.lower, ideal.upper, ideal.exact), (Some(2), Some(3), None));
        let (quot, _) = bipartite_sdepth_bounds(p(1, 1));
        assert_eq!(quot.exact, Some(1));
        for q in BipartiteParams::grid(20) {
            let (a, b) = bipartite_sdepth_bounds(q);
            assert!(a.is_consistent() && b.is_consistent());
            let (a, b) = bipartite_qdepth_bounds(q);
            assert!(a.is_consistent() && b.is_consistent(), "({},{})", q.n(), q.m());
        }
    }
}
