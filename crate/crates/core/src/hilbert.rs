//! The signed binomial transform of rank counts and the Hilbert-depth test.
//!
//! For a region with rank counts `α_0, …, α_n` and a scale `0 ≤ d ≤ n`,
//!
//! ```text
//! β_k^d = Σ_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) α_j,      0 ≤ k ≤ d,
//! α_k   = Σ_{j=0}^{k} C(d-j, k-j) β_j^d,
//! ```
//!
//! and the Hilbert depth is the largest `d` whose row `β_0^d, …, β_d^d` is
//! entry-wise nonnegative. `β^d` are the coordinates of `α_{≤d}` in the basis
//! of intervals whose top has rank exactly `d`.

use num_traits::{Signed, Zero};

use crate::combinatorics::{binom_nat, ExactInt};
use crate::error::{Error, Result};
use crate::ideal::{AlphaVector, QuotientPair};

/// `β_k^d` for `0 ≤ k ≤ d` by the alternating sum.
///
/// Panics if `d` exceeds the ground size of `alpha`.
pub fn beta_row(alpha: &AlphaVector, d: usize) -> Vec<ExactInt> {
    assert!(d <= alpha.ground_size(), "scale {d} exceeds ground size {}", alpha.ground_size());
    let a = alpha.counts();
    (0..=d)
        .map(|k| {
            let mut sum = ExactInt::zero();
            for (j, count) in a.iter().enumerate().take(k + 1) {
                let term = binom_nat((d - j) as u64, (k - j) as i64) * count;
                if (k - j) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            sum
        })
        .collect()
}

/// Same row as [`beta_row`], via `β_k^d = α_k - Σ_{j<k} C(d-j, k-j) β_j^d`.
pub fn beta_row_recurrence(alpha: &AlphaVector, d: usize) -> Vec<ExactInt> {
    assert!(d <= alpha.ground_size(), "scale {d} exceeds ground size {}", alpha.ground_size());
    let a = alpha.counts();
    let mut row: Vec<ExactInt> = Vec::with_capacity(d + 1);
    for (k, count) in a.iter().enumerate().take(d + 1) {
        let mut value = count.clone();
        for (j, beta) in row.iter().enumerate() {
            value -= binom_nat((d - j) as u64, (k - j) as i64) * beta;
        }
        row.push(value);
    }
    row
}

/// Inverse transform: `α_k = Σ_{j≤k} C(d-j, k-j) β_j^d` for `k ≤ d`, where
/// `d = row.len() - 1`.
pub fn alpha_from_beta(row: &[ExactInt]) -> Vec<ExactInt> {
    assert!(!row.is_empty(), "a beta row has at least one entry");
    let d = row.len() - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|j| binom_nat((d - j) as u64, (k - j) as i64) * &row[j])
                .sum()
        })
        .collect()
}

/// All rows `β^0, …, β^n` of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaTable {
    rows: Vec<Vec<ExactInt>>,
}

impl BetaTable {
    pub fn from_alpha(alpha: &AlphaVector) -> Self {
        BetaTable { rows: (0..=alpha.ground_size()).map(|d| beta_row(alpha, d)).collect() }
    }

    pub fn ground_size(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, d: usize) -> &[ExactInt] {
        &self.rows[d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInt]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

/// A single transform entry `β_k^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaEntry {
    pub d: usize,
    pub k: usize,
    pub value: ExactInt,
}

/// The Hilbert depth together with the first negative entry of the next
/// row, which certifies that the depth cannot be larger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HdepthCertificate {
    pub depth: usize,
    /// `None` when `depth` equals the ground size.
    pub failing: Option<BetaEntry>,
}

fn first_negative(row: &[ExactInt]) -> Option<usize> {
    row.iter().position(|b| b.is_negative())
}

/// Largest `d ≤ n` with `β_k^d ≥ 0` for all `k ≤ d`. Rows are scanned from
/// `d = n` downwards and the first nonnegative one wins.
pub fn hdepth(alpha: &AlphaVector) -> Result<usize> {
    if alpha.is_zero() {
        return Err(Error::ZeroModule);
    }
    let n = alpha.ground_size();
    Ok((0..=n)
        .rev()
        .find(|&d| first_negative(&beta_row(alpha, d)).is_none())
        .expect("row 0 is alpha_0 >= 0"))
}

pub fn hdepth_certificate(alpha: &AlphaVector) -> Result<HdepthCertificate> {
    let depth = hdepth(alpha)?;
    let failing = if depth < alpha.ground_size() {
        let d = depth + 1;
        let row = beta_row(alpha, d);
        first_negative(&row).map(|k| BetaEntry { d, k, value: row[k].clone() })
    } else {
        None
    };
    Ok(HdepthCertificate { depth, failing })
}

/// Hilbert depth of `J/I` from its enumerated rank counts.
pub fn qdepth_of_pair(pair: &QuotientPair, cap: usize) -> Result<usize> {
    hdepth(&pair.alpha_vector(cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{MultipartiteSpec, SquarefreeIdeal};
    use proptest::prelude::*;

    fn alpha(values: &[u64]) -> AlphaVector {
        AlphaVector::from_u64(values).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<ExactInt> {
        values.iter().map(|&v| ExactInt::from(v)).collect()
    }

    #[test]
    fn beta_row_examples() {
        let a = alpha(&[1, 3, 3, 0]);
        assert_eq!(beta_row(&a, 2), ints(&[1, 1, 1]));
        assert_eq!(beta_row(&a, 3), ints(&[1, 0, 0, -1]));
        assert_eq!(beta_row(&alpha(&[1, 0, 0]), 0), ints(&[1]));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(beta_row_recurrence(&alpha(&[1, 3, 3, 0]), 3), ints(&[1, 0, 0, -1]));
        assert_eq!(beta_row_recurrence(&alpha(&[0, 0, 1]), 2), ints(&[0, 0, 1]));
        assert_eq!(beta_row_recurrence(&alpha(&[0, 2, 1]), 2), ints(&[0, 2, -1]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(alpha_from_beta(&ints(&[1, 0, 0, -1])), ints(&[1, 3, 3, 0]));
        assert_eq!(alpha_from_beta(&ints(&[1])), ints(&[1]));
        assert_eq!(alpha_from_beta(&ints(&[0, 0, 1])), ints(&[0, 0, 1]));
    }

    #[test]
    fn hdepth_examples() {
        assert_eq!(hdepth(&alpha(&[0, 0, 4, 4, 1])).unwrap(), 3);
        assert_eq!(hdepth(&alpha(&[0, 0, 1])).unwrap(), 2);
        assert_eq!(hdepth(&alpha(&[1, 3, 3, 0])).unwrap(), 2);
        assert_eq!(hdepth(&alpha(&[0, 0, 0])).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn certificates() {
        let cert = hdepth_certificate(&alpha(&[0, 0, 4, 4, 1])).unwrap();
        assert_eq!(cert.depth, 3);
        assert_eq!(cert.failing, Some(BetaEntry { d: 4, k: 3, value: ExactInt::from(-4) }));
        let cert = hdepth_certificate(&alpha(&[1, 3, 3, 0])).unwrap();
        assert_eq!(cert.failing, Some(BetaEntry { d: 3, k: 3, value: ExactInt::from(-1) }));
        let cert = hdepth_certificate(&alpha(&[1, 3, 3, 1])).unwrap();
        assert_eq!(cert, HdepthCertificate { depth: 3, failing: None });
    }

    #[test]
    fn qdepth_examples() {
        let bip22 = SquarefreeIdeal::bipartite(2, 2).unwrap();
        assert_eq!(qdepth_of_pair(&QuotientPair::quotient(bip22), 24).unwrap(), 1);
        let bip32 = SquarefreeIdeal::bipartite(3, 2).unwrap();
        assert_eq!(qdepth_of_pair(&QuotientPair::ideal(bip32), 24).unwrap(), 3);
        let free = QuotientPair::quotient(SquarefreeIdeal::zero(3).unwrap());
        assert_eq!(qdepth_of_pair(&free, 24).unwrap(), 3);
        let principal = SquarefreeIdeal::multipartite(&MultipartiteSpec::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(qdepth_of_pair(&QuotientPair::quotient(principal), 24).unwrap(), 2);
        let zero = QuotientPair::ideal(SquarefreeIdeal::zero(3).unwrap());
        assert_eq!(qdepth_of_pair(&zero, 24).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn full_lattice_has_full_depth() {
        for n in 0..=12u64 {
            let counts: Vec<ExactInt> = (0..=n).map(|k| binom_nat(n, k as i64)).collect();
            let a = AlphaVector::new(counts).unwrap();
            assert_eq!(hdepth(&a).unwrap(), n as usize);
        }
    }

    #[test]
    fn table_rows() {
        let table = BetaTable::from_alpha(&alpha(&[1, 3, 3, 0]));
        assert_eq!(table.ground_size(), 3);
        assert_eq!(table.row(3), ints(&[1, 0, 0, -1]).as_slice());
        assert_eq!(table.rows().count(), 4);
    }

    fn random_alpha() -> impl Strategy<Value = AlphaVector> {
        (0usize..=12).prop_flat_map(|n| {
            let ranges: Vec<_> = (0..=n)
                .map(|k| 0u64..=binom_nat(n as u64, k as i64).try_into().unwrap())
                .collect();
            ranges.prop_map(|v| AlphaVector::from_u64(&v).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn transforms_agree_and_invert(a in random_alpha()) {
            for d in 0..=a.ground_size() {
                let row = beta_row(&a, d);
                prop_assert_eq!(&row, &beta_row_recurrence(&a, d));
                let back = alpha_from_beta(&row);
                prop_assert_eq!(back.as_slice(), &a.counts()[..=d]);
            }
        }

        #[test]
        fn hdepth_row_is_nonnegative_and_maximal(a in random_alpha()) {
            prop_assume!(!a.is_zero());
            let depth = hdepth(&a).unwrap();
            prop_assert!(beta_row(&a, depth).iter().all(|b| !b.is_negative()));
            for d in depth + 1..=a.ground_size() {
                prop_assert!(beta_row(&a, d).iter().any(|b| b.is_negative()));
            }
        }
    }
}
