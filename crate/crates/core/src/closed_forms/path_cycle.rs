//! Bound formulas for powers of `m`-path ideals of paths and cycles, and the
//! auxiliary squarefree ideals `U_{m,t}` and `U'_{n,d}` behind them.

use super::BoundReport;
use crate::error::{Error, Result};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_path(n: usize, m: usize, t: usize) -> Result<()> {
    if m == 0 || n < m || t == 0 {
        return Err(Error::InvalidSpec(format!("need n >= m >= 1 and t >= 1, got n={n} m={m} t={t}")));
    }
    Ok(())
}

fn check_cycle(n: usize, m: usize) -> Result<()> {
    if m < 2 || n <= m {
        return Err(Error::InvalidSpec(format!("need n > m >= 2, got n={n} m={m}")));
    }
    Ok(())
}

/// `depth(S/I_{n,m}^t)`: `x - ⌊x/(m+1)⌋ - ⌈x/(m+1)⌉` with `x = n - t + 2`
/// while `t ≤ n + 1 - m`, and `m - 1` beyond.
pub fn depth_phi(n: usize, m: usize, t: usize) -> Result<usize> {
    check_path(n, m, t)?;
    if t > n + 1 - m {
        return Ok(m - 1);
    }
    let x = n - t + 2;
    Ok(x - x / (m + 1) - x.div_ceil(m + 1))
}

/// `min{n - ⌈t_0/2⌉, n - ⌊(n - t_0 + 1)/(m + 1)⌋ + 1}` with `t_0 = min{t, n - m}`.
pub fn path_power_sdepth_upper(n: usize, m: usize, t: usize) -> Result<usize> {
    check_path(n, m, t)?;
    let t0 = t.min(n - m);
    let first = n - t0.div_ceil(2);
    let second = n - (n - t0 + 1) / (m + 1) + 1;
    Ok(first.min(second))
}

/// `m + ⌊t/2⌋`, an upper bound on `qdepth(U_{m,t})`.
pub fn path_aux_upper(m: usize, t: usize) -> usize {
    m + t / 2
}

/// Largest `t_0 ≤ n - 1` with `m t_0 = a n + gcd(n, m)` for some integer
/// `a ≥ 1`, found by scanning down from `n - 1`.
pub fn cycle_t0(n: usize, m: usize) -> Result<Option<usize>> {
    check_cycle(n, m)?;
    let d = gcd(n, m);
    Ok((1..n).rev().find(|&t0| {
        let lhs = m * t0;
        lhs > d && (lhs - d).is_multiple_of(n)
    }))
}

/// `⌊(n + gcd(n, m))/2⌋`, the bound for `sdepth(J_{n,m}^t)`, `t ≥ t_0`, and
/// for `qdepth(U'_{n,gcd(n,m)})`.
pub fn cycle_power_sdepth_upper(n: usize, m: usize) -> Result<usize> {
    check_cycle(n, m)?;
    Ok((n + gcd(n, m)) / 2)
}

pub fn gcd_of(n: usize, m: usize) -> usize {
    gcd(n, m)
}

pub fn path_power_bound_report(n: usize, m: usize, t: usize) -> Result<BoundReport> {
    let upper = path_power_sdepth_upper(n, m, t)? as i64;
    let phi = depth_phi(n, m, t)? as i64;
    Ok(BoundReport::new(
        "sdepth(I_{n,m}^t)",
        "m-path ideal of a path: sdepth(I^t) <= min(n - ceil(t0/2), n - floor((n-t0+1)/(m+1)) + 1), t0 = min(t, n-m)",
    )
    .upper(upper)
    .note(format!("sdepth(S/I^t) >= depth(S/I^t) = phi(n,m,t) = {phi}")))
}

pub fn cycle_power_bound_report(n: usize, m: usize) -> Result<BoundReport> {
    let upper = cycle_power_sdepth_upper(n, m)? as i64;
    let t0 = cycle_t0(n, m)?;
    let mut report = BoundReport::new(
        "sdepth(J_{n,m}^t)",
        "m-path ideal of a cycle: sdepth(J^t) <= floor((n + gcd(n,m))/2) for t >= t0(n,m)",
    )
    .upper(upper)
    .note(format!(
        "t0(n,m) = {}",
        t0.map_or("none".to_string(), |v| v.to_string())
    ))
    .note(format!(
        "a weaker-by-one statement, floor((n+d)/2) - 1 for t >= n-1, also circulates; the value here is floor((n+d)/2) = {upper}"
    ));
    report.lower = None;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(depth_phi(4, 2, 1).unwrap(), 2);
        assert_eq!(depth_phi(4, 2, 4).unwrap(), 1);
        assert_eq!(depth_phi(5, 2, 4).unwrap(), 1);
        assert!(depth_phi(2, 3, 1).is_err());
        assert!(depth_phi(4, 2, 0).is_err());
    }

    #[test]
    fn path_power_examples() {
        assert_eq!(path_power_sdepth_upper(7, 2, 2).unwrap(), 6);
        assert_eq!(path_power_sdepth_upper(10, 3, 100).unwrap(), 6);
        // t0 = 1: n - ceil(1/2) = 4 beats n - floor(5/3) + 1 = 5
        assert_eq!(path_power_sdepth_upper(5, 2, 1).unwrap(), 4);
    }

    #[test]
    fn path_power_saturates_at_n_minus_m() {
        for n in 2..=12 {
            for m in 1..n {
                let saturated = path_power_sdepth_upper(n, m, n - m).unwrap();
                for t in n - m..n + 5 {
                    assert_eq!(path_power_sdepth_upper(n, m, t).unwrap(), saturated);
                }
            }
        }
    }

    #[test]
    fn aux_upper_examples() {
        assert_eq!(path_aux_upper(2, 2), 3);
        assert_eq!(path_aux_upper(1, 1), 1);
        assert_eq!(path_aux_upper(3, 1), 3);
    }

    #[test]
    fn t0_examples() {
        assert_eq!(cycle_t0(5, 2).unwrap(), Some(3));
        assert_eq!(cycle_t0(4, 2).unwrap(), Some(3));
        assert_eq!(cycle_t0(6, 4).unwrap(), Some(5));
        assert!(cycle_t0(4, 4).is_err());
        assert!(cycle_t0(4, 1).is_err());
    }

    #[test]
    fn t0_satisfies_its_equation() {
        for n in 3..=30 {
            for m in 2..n {
                let d = gcd(n, m);
                if let Some(t0) = cycle_t0(n, m).unwrap() {
                    assert!(t0 < n);
                    let alpha = (m * t0 - d) / n;
                    assert!(alpha >= 1);
                    assert_eq!(m * t0, alpha * n + d);
                    // nothing larger works
                    for t in t0 + 1..n {
                        assert!(m * t <= d || !(m * t - d).is_multiple_of(n));
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_bound_examples() {
        assert_eq!(cycle_power_sdepth_upper(5, 2).unwrap(), 3);
        assert_eq!(cycle_power_sdepth_upper(4, 2).unwrap(), 3);
        assert_eq!(cycle_power_sdepth_upper(6, 3).unwrap(), 4);
        let report = cycle_power_bound_report(6, 4).unwrap();
        assert_eq!(report.upper, Some(4));
        assert!(report.notes.iter().any(|n| n.contains("t0(n,m) = 5")));
        assert_eq!(path_power_bound_report(7, 2, 2).unwrap().upper, Some(6));
    }
}
