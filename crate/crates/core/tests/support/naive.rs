//! Brute-force interval partitions, written without the library's solver.
//!
//! The region is rebuilt from generator masks, and the search branches on the
//! first uncovered set (mask order) over every interval `[C, D]` that contains
//! it, lies in the region, avoids covered sets, and has `|D| ≥ d`. Failed
//! covered-states are memoized on a `u128` bitmask, so ground sets up to 7.

#![allow(dead_code)]

use std::collections::HashSet;

pub struct NaiveRegion {
    pub ground: usize,
    pub inside: Vec<bool>,
}

impl NaiveRegion {
    pub fn new(ground: usize, upper_gens: &[u64], lower_gens: &[u64]) -> Self {
        assert!(ground <= 7, "naive oracle handles at most 7 variables");
        let divides = |gens: &[u64], c: u64| gens.iter().any(|&g| g & !c == 0);
        let inside = (0..1u64 << ground)
            .map(|c| divides(upper_gens, c) && !divides(lower_gens, c))
            .collect();
        NaiveRegion { ground, inside }
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.inside.len() as u64).filter(|&c| self.inside[c as usize]).collect()
    }

    fn interval_bits(base: u64, top: u64) -> Vec<u64> {
        let free = top & !base;
        let mut out = Vec::new();
        let mut s = 0u64;
        loop {
            out.push(base | s);
            if s == free {
                break;
            }
            s = s.wrapping_sub(free) & free;
        }
        out
    }

    /// Whether an interval partition with every top of size at least `d`
    /// exists.
    pub fn partition_exists(&self, d: usize) -> bool {
        let mut failed = HashSet::new();
        self.search(0u128, d, &mut failed)
    }

    fn search(&self, covered: u128, d: usize, failed: &mut HashSet<u128>) -> bool {
        let Some(x) = (0..self.inside.len()).find(|&c| self.inside[c] && covered >> c & 1 == 0) else {
            return true;
        };
        if failed.contains(&covered) {
            return false;
        }
        let x = x as u64;
        let full = (1u64 << self.ground) - 1;
        let mut base = x;
        loop {
            // base ranges over subsets of x, top over supersets of x
            let mut extra = 0u64;
            let above = full & !x;
            loop {
                let top = x | extra;
                if top.count_ones() as usize >= d {
                    let members = Self::interval_bits(base, top);
                    if members
                        .iter()
                        .all(|&m| self.inside[m as usize] && covered >> m & 1 == 0)
                    {
                        let next = members.iter().fold(covered, |acc, &m| acc | 1u128 << m);
                        if self.search(next, d, failed) {
                            return true;
                        }
                    }
                }
                if extra == above {
                    break;
                }
                extra = extra.wrapping_sub(above) & above;
            }
            if base == 0 {
                break;
            }
            base = (base - 1) & x;
        }
        failed.insert(covered);
        false
    }

    /// Largest `d` admitting a partition, or `None` for an empty region.
    pub fn sdepth(&self) -> Option<usize> {
        if self.elements().is_empty() {
            return None;
        }
        (0..=self.ground).rev().find(|&d| self.partition_exists(d))
    }
}
