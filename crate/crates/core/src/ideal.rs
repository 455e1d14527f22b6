//! Squarefree monomial ideals as antichains of variable subsets.
//!
//! A squarefree monomial `x_C` is stored as the bitmask of its support `C`;
//! divisibility of squarefree monomials is subset containment. Ground sets
//! hold at most 64 variables, and the lattice enumeration paths are further
//! limited by an explicit cap.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::combinatorics::{binom_nat, ExactInt};
use crate::error::{Error, Result};

pub const MAX_GROUND: usize = 64;

/// Whether a computation targets the ideal `I` itself or the quotient `S/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Ideal,
    Quotient,
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleKind::Ideal => f.write_str("I"),
            ModuleKind::Quotient => f.write_str("S/I"),
        }
    }
}

fn check_ground(ground: usize) -> Result<()> {
    if ground > MAX_GROUND {
        Err(Error::GroundTooLarge(ground))
    } else {
        Ok(())
    }
}

fn full_mask(ground: usize) -> u64 {
    if ground == 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    }
}

/// A subset of `{1, …, ground}`, i.e. the support of a squarefree monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet {
    ground: u8,
    bits: u64,
}

impl VarSet {
    /// Builds a set from 1-based variable indices.
    pub fn new(ground: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_ground(ground)?;
        let mut bits = 0u64;
        for index in members {
            if index == 0 || index > ground {
                return Err(Error::VariableOutOfRange { index, ground });
            }
            bits |= 1 << (index - 1);
        }
        Ok(VarSet { ground: ground as u8, bits })
    }

    pub fn from_bits(ground: usize, bits: u64) -> Result<Self> {
        check_ground(ground)?;
        if bits & !full_mask(ground) != 0 {
            let index = 64 - bits.leading_zeros() as usize;
            return Err(Error::VariableOutOfRange { index, ground });
        }
        Ok(VarSet { ground: ground as u8, bits })
    }

    pub fn empty(ground: usize) -> Result<Self> {
        Self::from_bits(ground, 0)
    }

    pub fn ground_size(&self) -> usize {
        self.ground as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// 1-based members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ground as usize)
            .filter(move |i| self.bits >> i & 1 == 1)
            .map(|i| i + 1)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// Formats a bitmask as a monomial, `x1*x3`, or `1` for the empty support.
pub fn monomial_string(bits: u64) -> String {
    if bits == 0 {
        return "1".to_string();
    }
    (0..64)
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| format!("x{}", i + 1))
        .collect::<Vec<_>>()
        .join("*")
}

/// A squarefree monomial ideal given by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal has the single empty
/// generator. Generators are kept sorted by degree and then by bitmask, so
/// two ideals are equal exactly when their generator lists are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    ground: usize,
    gens: Vec<u64>,
}

impl SquarefreeIdeal {
    pub fn zero(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(SquarefreeIdeal { ground, gens: Vec::new() })
    }

    pub fn unit(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(SquarefreeIdeal { ground, gens: vec![0] })
    }

    /// Keeps the inclusion-minimal sets of `gens`. Every set must live on
    /// `ground` variables.
    pub fn minimalize(ground: usize, gens: &[VarSet]) -> Result<Self> {
        check_ground(ground)?;
        for g in gens {
            if g.ground_size() != ground {
                return Err(Error::GroundMismatch { expected: ground, found: g.ground_size() });
            }
        }
        Ok(Self::from_masks(ground, gens.iter().map(|g| g.bits).collect()))
    }

    fn from_masks(ground: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_by_key(|&m| (m.count_ones(), m));
        masks.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
        for m in masks {
            if !kept.iter().any(|&k| k & !m == 0) {
                kept.push(m);
            }
        }
        SquarefreeIdeal { ground, gens: kept }
    }

    /// The prime ideal generated by the listed variables (1-based).
    pub fn prime(ground: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let gens = vars
            .into_iter()
            .map(|v| VarSet::new(ground, [v]))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ground, &gens)
    }

    /// The maximal ideal `(x_1, …, x_n)`.
    pub fn maximal(ground: usize) -> Result<Self> {
        Self::prime(ground, 1..=ground)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn generator_masks(&self) -> &[u64] {
        &self.gens
    }

    pub fn generators(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.gens.iter().map(move |&bits| VarSet { ground: self.ground as u8, bits })
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&0)
    }

    /// Membership of `x_u`: some generator divides it.
    pub fn contains(&self, u: &VarSet) -> bool {
        debug_assert_eq!(u.ground_size(), self.ground);
        self.contains_mask(u.bits)
    }

    pub fn contains_mask(&self, u: u64) -> bool {
        self.gens.iter().any(|&g| g & !u == 0)
    }

    /// Intersection; its generators are the minimal pairwise unions.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch { expected: self.ground, found: other.ground });
        }
        let mut unions = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                unions.push(a | b);
            }
        }
        Ok(Self::from_masks(self.ground, unions))
    }

    /// Intersection of the primes generated by each variable class.
    fn intersect_primes(ground: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::unit(ground)?;
        for class in classes {
            acc = acc.intersect(&Self::prime(ground, class.iter().copied())?)?;
        }
        Ok(acc)
    }

    /// `I_{n_1,…,n_r} = (x_1..x_{n_1}) ∩ (x_{n_1+1}..x_{n_1+n_2}) ∩ …`, built
    /// directly from block transversals.
    pub fn multipartite(spec: &MultipartiteSpec) -> Result<Self> {
        let ground = spec.total();
        let mut masks = vec![0u64];
        let mut offset = 0;
        for &size in spec.blocks() {
            let mut next = Vec::with_capacity(masks.len() * size);
            for &m in &masks {
                for i in 0..size {
                    next.push(m | 1 << (offset + i));
                }
            }
            masks = next;
            offset += size;
        }
        Ok(Self::from_masks(ground, masks))
    }

    /// Edge ideal of the complete bipartite graph `K_{n,m}`,
    /// `(x_1..x_n) ∩ (x_{n+1}..x_{n+m})`.
    pub fn bipartite(n: usize, m: usize) -> Result<Self> {
        Self::multipartite(&MultipartiteSpec::new(vec![n, m])?)
    }

    /// `U_{m,t}` on `t + m` variables, as the intersection of the primes
    /// `V_{m,j,k} = (x_j, x_{j+m}, …, x_{j+(k-1)m})` with `t + m = am + b`,
    /// `1 ≤ b ≤ m`: classes `j ≤ b` have `a + 1` variables, the rest `a`.
    pub fn path_aux(m: usize, t: usize) -> Result<Self> {
        if m == 0 || t == 0 {
            return Err(Error::InvalidSpec("path_aux needs m >= 1 and t >= 1".into()));
        }
        let ground = t + m;
        check_ground(ground)?;
        let a = (ground - 1) / m;
        let b = ground - a * m;
        debug_assert!((1..=m).contains(&b));
        let classes: Vec<Vec<usize>> = (1..=m)
            .map(|j| {
                let len = if j <= b { a + 1 } else { a };
                (0..len).map(|i| j + i * m).collect()
            })
            .collect();
        Self::intersect_primes(ground, &classes)
    }

    /// `U_{m,t}` from its generator description: products
    /// `x_{i_1}⋯x_{i_m}` with `i_j ≡ j (mod m)`, indices in any order.
    pub fn path_aux_residue(m: usize, t: usize) -> Result<Self> {
        if m == 0 || t == 0 {
            return Err(Error::InvalidSpec("path_aux needs m >= 1 and t >= 1".into()));
        }
        let ground = t + m;
        check_ground(ground)?;
        let mut masks = vec![0u64];
        for j in 1..=m {
            let class: Vec<usize> = (1..=ground).filter(|&i| i >= j && (i - j) % m == 0).collect();
            masks = masks
                .iter()
                .flat_map(|&mask| class.iter().map(move |&i| mask | 1 << (i - 1)))
                .collect();
        }
        Ok(Self::from_masks(ground, masks))
    }

    /// `U'_{n,d} = ∩_{j=1}^{d} (x_j, x_{d+j}, …, x_{(r-1)d+j})` with `r = n/d`.
    pub fn cycle_aux(n: usize, d: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec("cycle_aux needs n >= 2".into()));
        }
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotDivisor { n, divisor: d });
        }
        let r = n / d;
        let classes: Vec<Vec<usize>> = (1..=d).map(|j| (0..r).map(|i| j + i * d).collect()).collect();
        Self::intersect_primes(n, &classes)
    }

    /// Indicator of the ideal over all `2^n` subsets, indexed by bitmask.
    pub fn membership_table(&self, cap: usize) -> Result<Vec<bool>> {
        if self.ground > cap {
            return Err(Error::EnumerationCap { ground: self.ground, cap });
        }
        let size = 1usize << self.ground;
        let mut table = vec![false; size];
        for &g in &self.gens {
            table[g as usize] = true;
        }
        // superset closure, one coordinate at a time
        for bit in 0..self.ground {
            let step = 1usize << bit;
            for mask in 0..size {
                if mask & step == 0 && table[mask] {
                    table[mask | step] = true;
                }
            }
        }
        Ok(table)
    }

    /// Serializes to the text format: `n <ground>` then one generator per
    /// line as 1-based indices; the empty generator is written `-`.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.ground);
        for g in self.generators() {
            if g.is_empty() {
                out.push_str("-\n");
            } else {
                let line: Vec<String> = g.members().map(|i| i.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
        out
    }

    /// Parses the text format. Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut ground: Option<usize> = None;
        let mut gens = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            match ground {
                None => {
                    let mut parts = line.split_whitespace();
                    if parts.next() != Some("n") {
                        return Err(parse_err("expected header `n <ground_size>`".into()));
                    }
                    let value = parts
                        .next()
                        .ok_or_else(|| parse_err("missing ground size".into()))?;
                    let n: usize = value
                        .parse()
                        .map_err(|_| parse_err(format!("invalid ground size `{value}`")))?;
                    if parts.next().is_some() {
                        return Err(parse_err("trailing tokens after ground size".into()));
                    }
                    if n > MAX_GROUND {
                        return Err(parse_err(format!("ground size {n} exceeds {MAX_GROUND}")));
                    }
                    ground = Some(n);
                }
                Some(n) => {
                    if line == "-" {
                        gens.push(VarSet::empty(n)?);
                        continue;
                    }
                    let mut indices = Vec::new();
                    for token in line.split_whitespace() {
                        let i: usize = token
                            .parse()
                            .map_err(|_| parse_err(format!("invalid variable index `{token}`")))?;
                        indices.push(i);
                    }
                    let set = VarSet::new(n, indices).map_err(|e| parse_err(e.to_string()))?;
                    gens.push(set);
                }
            }
        }
        let ground = ground.ok_or(Error::Parse { line: 1, message: "missing header `n <ground_size>`".into() })?;
        Self::minimalize(ground, &gens)
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|&g| monomial_string(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Block sizes `(n_1, …, n_r)` of a multipartite intersection ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultipartiteSpec {
    blocks: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidSpec("at least one block is required".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidSpec("block sizes must be positive".into()));
        }
        let total: usize = blocks.iter().sum();
        check_ground(total)?;
        Ok(MultipartiteSpec { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of blocks `r`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total variable count `N`.
    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn min_block(&self) -> usize {
        *self.blocks.iter().min().expect("nonempty")
    }

    /// `n_1 n_2 ⋯ n_r`.
    pub fn product(&self) -> ExactInt {
        self.blocks.iter().fold(ExactInt::from(1), |acc, &b| acc * b)
    }

    /// Number of even block sizes.
    pub fn even_blocks(&self) -> usize {
        self.blocks.iter().filter(|&&b| b % 2 == 0).count()
    }

    /// All specs with exactly `r` blocks in `1..=max_block`, listed as
    /// non-increasing tuples in lexicographic order.
    pub fn grid(r: usize, max_block: usize) -> Vec<MultipartiteSpec> {
        fn rec(r: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == r {
                out.push(prefix.clone());
                return;
            }
            for b in 1..=cap {
                prefix.push(b);
                rec(r, b, prefix, out);
                prefix.pop();
            }
        }
        let mut raw = Vec::new();
        if r > 0 {
            rec(r, max_block, &mut Vec::new(), &mut raw);
        }
        let mut specs: Vec<MultipartiteSpec> = raw
            .into_iter()
            .filter_map(|b| MultipartiteSpec::new(b).ok())
            .collect();
        specs.sort();
        specs
    }
}

impl fmt::Display for MultipartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MultipartiteSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let blocks = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("invalid block size `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultipartiteSpec::new(blocks)
    }
}

/// Rank counts `α_0, …, α_n` of a region of the Boolean lattice on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    counts: Vec<ExactInt>,
}

impl AlphaVector {
    /// Validates `0 ≤ α_k ≤ C(n, k)` where `n = counts.len() - 1`.
    pub fn new(counts: Vec<ExactInt>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidSpec("alpha vector needs at least one entry".into()));
        }
        let n = counts.len() - 1;
        check_ground(n)?;
        for (k, c) in counts.iter().enumerate() {
            if *c < ExactInt::zero() || *c > binom_nat(n as u64, k as i64) {
                return Err(Error::InvalidSpec(format!("alpha_{k} = {c} is outside 0..=C({n},{k})")));
            }
        }
        Ok(AlphaVector { counts })
    }

    pub fn from_u64(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn ground_size(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[ExactInt] {
        &self.counts
    }

    pub fn get(&self, k: usize) -> &ExactInt {
        &self.counts[k]
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A pair `I ⊆ J` of squarefree ideals on one ground set, standing for `J/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPair {
    lower: SquarefreeIdeal,
    upper: SquarefreeIdeal,
}

impl QuotientPair {
    pub fn new(lower: SquarefreeIdeal, upper: SquarefreeIdeal) -> Result<Self> {
        if lower.ground != upper.ground {
            return Err(Error::GroundMismatch { expected: upper.ground, found: lower.ground });
        }
        if let Some(&g) = lower.gens.iter().find(|&&g| !upper.contains_mask(g)) {
            return Err(Error::NotContained(monomial_string(g)));
        }
        Ok(QuotientPair { lower, upper })
    }

    /// The ideal `I` as the module `I/0`.
    pub fn ideal(ideal: SquarefreeIdeal) -> Self {
        let zero = SquarefreeIdeal { ground: ideal.ground, gens: Vec::new() };
        QuotientPair { lower: zero, upper: ideal }
    }

    /// The quotient ring `S/I`.
    pub fn quotient(ideal: SquarefreeIdeal) -> Self {
        let unit = SquarefreeIdeal { ground: ideal.ground, gens: vec![0] };
        QuotientPair { lower: ideal, upper: unit }
    }

    pub fn of_kind(ideal: SquarefreeIdeal, kind: ModuleKind) -> Self {
        match kind {
            ModuleKind::Ideal => Self::ideal(ideal),
            ModuleKind::Quotient => Self::quotient(ideal),
        }
    }

    pub fn lower(&self) -> &SquarefreeIdeal {
        &self.lower
    }

    pub fn upper(&self) -> &SquarefreeIdeal {
        &self.upper
    }

    pub fn ground_size(&self) -> usize {
        self.upper.ground
    }

    /// Whether `C` (a bitmask) lies in `P_{J/I}`.
    pub fn in_region(&self, c: u64) -> bool {
        self.upper.contains_mask(c) && !self.lower.contains_mask(c)
    }

    /// Indicator of `P_{J/I}` over all `2^n` subsets.
    pub fn region_table(&self, cap: usize) -> Result<Vec<bool>> {
        let upper = self.upper.membership_table(cap)?;
        let lower = self.lower.membership_table(cap)?;
        Ok(upper.iter().zip(&lower).map(|(&u, &l)| u && !l).collect())
    }

    /// Elements of `P_{J/I}` in increasing bitmask order.
    pub fn region(&self, cap: usize) -> Result<Vec<u64>> {
        let table = self.region_table(cap)?;
        Ok(table
            .iter()
            .enumerate()
            .filter(|(_, &inside)| inside)
            .map(|(mask, _)| mask as u64)
            .collect())
    }

    /// `α_k(J/I)` for every `k`, by exhaustive lattice enumeration.
    pub fn alpha_vector(&self, cap: usize) -> Result<AlphaVector> {
        let table = self.region_table(cap)?;
        let n = self.ground_size();
        let mut counts = vec![0u64; n + 1];
        for (mask, &inside) in table.iter().enumerate() {
            if inside {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        Ok(AlphaVector { counts: counts.into_iter().map(ExactInt::from).collect() })
    }

    /// Exhaustive convexity check: `A ⊆ B ⊆ C` with `A, C ∈ P` forces `B ∈ P`.
    /// Exponential; meant for tests on small ground sets.
    pub fn is_convex(&self, cap: usize) -> Result<bool> {
        let table = self.region_table(cap)?;
        let size = table.len();
        for b in 0..size {
            if table[b] {
                continue;
            }
            // B outside P: it must not have both a subset and a superset in P
            let below = (0..size).any(|a| a & !b == 0 && table[a]);
            let above = (0..size).any(|c| b & !c == 0 && table[c]);
            if below && above {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for QuotientPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.upper, self.lower)
    }
}
