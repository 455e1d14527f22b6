//! Stanley depth of `J/I` through interval partitions of `P_{J/I}`.
//!
//! `sdepth(J/I)` is the largest `d` for which `P_{J/I}` splits into disjoint
//! intervals `[C, D]` with every `|D| ≥ d`. The search below decides one `d`
//! at a time.
//!
//! # Search
//!
//! Any interval `[C, D]` with `|D| ≥ d` splits into intervals whose tops
//! have size exactly `d`: pick `T ⊆ D ∖ C` with `|C ∪ T| = d`, then
//!
//! ```text
//! [C, D] = [C, C∪T]  ⊔  ⨆_{∅ ≠ S ⊆ D∖(C∪T)} [C∪S, C∪T∪S]
//! ```
//!
//! Elements of rank `> d` can always be singletons, so the question becomes
//! an exact cover: the columns are the elements of `P` with rank `≤ d`, the
//! rows are the intervals `[C, D] ⊆ P` with `|D| = d`. Rows are stored on
//! dancing links. The search branches on the column with the fewest live
//! rows; ties go to the lower rank, then the smaller bitmask.
//!
//! A branch is also cut when the `β^d` row of the uncovered rank counts
//! `α_0(U), …, α_d(U)` has a negative entry: each interval with top exactly
//! `d` contributes a unit vector to `β^d`, so a coverable `U` has a
//! nonnegative row. With memoization on, covered-column sets that already
//! failed are remembered and skipped.

use std::collections::HashSet;
use std::fmt;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::hilbert::hdepth;
use crate::ideal::{QuotientPair, VarSet};

/// The interval `[C, D] = {A : C ⊆ A ⊆ D}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub base: VarSet,
    pub top: VarSet,
}

impl Interval {
    pub fn new(base: VarSet, top: VarSet) -> Result<Self> {
        if base.ground_size() != top.ground_size() {
            return Err(Error::GroundMismatch { expected: top.ground_size(), found: base.ground_size() });
        }
        if !base.is_subset(&top) {
            return Err(Error::InvalidSpec(format!("interval base {base} is not contained in top {top}")));
        }
        Ok(Interval { base, top })
    }

    fn from_masks(ground: usize, base: u64, top: u64) -> Self {
        Interval {
            base: VarSet::from_bits(ground, base).expect("mask within ground"),
            top: VarSet::from_bits(ground, top).expect("mask within ground"),
        }
    }

    /// Number of sets in the interval, `2^{|D| - |C|}`.
    pub fn size(&self) -> u64 {
        1 << (self.top.len() - self.base.len())
    }

    pub fn contains(&self, set: &VarSet) -> bool {
        self.base.is_subset(set) && set.is_subset(&self.top)
    }

    /// Bitmasks of all members.
    pub fn masks(&self) -> impl Iterator<Item = u64> {
        let base = self.base.bits();
        subsets_of(self.top.bits() & !base).map(move |s| base | s)
    }
}

fn index_list(set: &VarSet) -> String {
    let items: Vec<String> = set.members().map(|i| i.to_string()).collect();
    format!("[{}]", items.join(","))
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", index_list(&self.base), index_list(&self.top))
    }
}

/// All submasks of `mask`, starting from the empty set.
fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == mask { None } else { Some((current.wrapping_sub(mask)) & mask) };
        Some(current)
    })
}

/// A list of intervals meant to partition a region; see [`verify_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    ground: usize,
    intervals: Vec<Interval>,
}

impl IntervalPartition {
    pub fn new(ground: usize, intervals: Vec<Interval>) -> Result<Self> {
        if let Some(bad) = intervals.iter().find(|iv| iv.top.ground_size() != ground) {
            return Err(Error::GroundMismatch { expected: ground, found: bad.top.ground_size() });
        }
        Ok(IntervalPartition { ground, intervals })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// `min |D_i|`, or `None` for the empty partition.
    pub fn min_top(&self) -> Option<usize> {
        self.intervals.iter().map(|iv| iv.top.len()).min()
    }

    /// Witness text: one `C -> D` line per interval, with 1-based sorted
    /// index lists such as `[1] -> [1,2]`.
    pub fn to_witness(&self) -> String {
        self.intervals.iter().map(|iv| format!("{iv}\n")).collect()
    }

    /// Reads the witness format back. Blank lines and `#` comments are
    /// skipped; errors carry the line number.
    pub fn parse_witness(ground: usize, text: &str) -> Result<Self> {
        let mut intervals = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: idx + 1, message };
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| err("expected `C -> D`".into()))?;
            let parse_set = |part: &str| -> Result<VarSet> {
                let inner = part
                    .trim()
                    .strip_prefix('[')
                    .and_then(|p| p.strip_suffix(']'))
                    .ok_or_else(|| err(format!("expected a bracketed index list, got `{}`", part.trim())))?;
                let mut members = Vec::new();
                for token in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    members.push(token.parse::<usize>().map_err(|_| err(format!("invalid index `{token}`")))?);
                }
                VarSet::new(ground, members).map_err(|e| err(e.to_string()))
            };
            let interval = Interval::new(parse_set(lhs)?, parse_set(rhs)?).map_err(|e| err(e.to_string()))?;
            intervals.push(interval);
        }
        Ok(IntervalPartition { ground, intervals })
    }
}

impl fmt::Display for IntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_witness())
    }
}

/// Whether `part` is a partition of `P_{J/I}` into valid intervals, pairwise
/// disjoint, covering the region exactly, with every top of size `≥ d`.
pub fn verify_partition(pair: &QuotientPair, part: &IntervalPartition, d: usize, cap: usize) -> Result<bool> {
    if part.ground != pair.ground_size() {
        return Ok(false);
    }
    let region = pair.region_table(cap)?;
    let mut seen = vec![false; region.len()];
    for iv in &part.intervals {
        if !iv.base.is_subset(&iv.top) || iv.top.len() < d {
            return Ok(false);
        }
        if !region[iv.base.bits() as usize] || !region[iv.top.bits() as usize] {
            return Ok(false);
        }
        for mask in iv.masks() {
            let slot = &mut seen[mask as usize];
            // convexity of P keeps every member inside; double cover fails
            if *slot || !region[mask as usize] {
                return Ok(false);
            }
            *slot = true;
        }
    }
    Ok(seen == region)
}

/// Resource settings of one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub solver_cap: usize,
    pub node_budget: u64,
    /// Remember covered-states already shown infeasible. Off by default.
    pub memoize: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig::from(&Limits::default())
    }
}

impl From<&Limits> for SolverConfig {
    fn from(limits: &Limits) -> Self {
        SolverConfig { solver_cap: limits.solver_cap, node_budget: limits.node_budget, memoize: false }
    }
}

impl SolverConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_memo(mut self, memoize: bool) -> Self {
        self.memoize = memoize;
        self
    }
}

/// Answer for one `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionSearch {
    Found(IntervalPartition),
    Infeasible,
    /// The node budget ran out first.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: PartitionSearch,
    pub nodes: u64,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&IntervalPartition> {
        match &self.result {
            PartitionSearch::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Exact cover of the region elements of rank `≤ d` by intervals `[C, D]`
/// with `|D| = d`, on dancing links. Node 0 is the root, nodes `1..=cols`
/// are column headers.
struct Dlx {
    ground: usize,
    d: usize,
    left: Vec<u32>,
    right: Vec<u32>,
    up: Vec<u32>,
    down: Vec<u32>,
    col: Vec<u32>,
    row: Vec<u32>,
    size: Vec<u32>,
    rows: Vec<(u64, u64)>,
    in_region: Vec<bool>,
    col_of: Vec<u32>,
    uncovered_by_rank: Vec<i64>,
    /// `C(d - j, k - j)` at `[j][k]`
    pascal: Vec<Vec<i64>>,
    covered: Vec<u64>,
    chosen: Vec<u32>,
    nodes: u64,
    budget: u64,
    failed: Option<HashSet<Vec<u64>>>,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl Dlx {
    fn build(ground: usize, d: usize, in_region: Vec<bool>, config: &SolverConfig) -> Self {
        let mut elements: Vec<u64> = (0..in_region.len() as u64)
            .filter(|&m| in_region[m as usize] && m.count_ones() as usize <= d)
            .collect();
        elements.sort_by_key(|&m| (m.count_ones(), m));
        let cols = elements.len();
        let mut col_of = vec![u32::MAX; in_region.len()];
        for (i, &m) in elements.iter().enumerate() {
            col_of[m as usize] = i as u32 + 1;
        }
        let headers = cols + 1;
        let mut dlx = Dlx {
            ground,
            d,
            left: (0..headers as u32).map(|i| if i == 0 { cols as u32 } else { i - 1 }).collect(),
            right: (0..headers as u32).map(|i| if i as usize == cols { 0 } else { i + 1 }).collect(),
            up: (0..headers as u32).collect(),
            down: (0..headers as u32).collect(),
            col: (0..headers as u32).collect(),
            row: vec![u32::MAX; headers],
            size: vec![0; headers],
            rows: Vec::new(),
            in_region,
            col_of,
            uncovered_by_rank: vec![0; d + 1],
            pascal: (0..=d)
                .map(|j| (0..=d).map(|k| if k < j { 0 } else { binom_small(d - j, k - j) }).collect())
                .collect(),
            covered: vec![0; cols.div_ceil(64)],
            chosen: Vec::new(),
            nodes: 0,
            budget: config.node_budget,
            failed: config.memoize.then(HashSet::new),
        };
        for &m in &elements {
            dlx.uncovered_by_rank[m.count_ones() as usize] += 1;
        }
        let tops: Vec<u64> = elements.iter().copied().filter(|m| m.count_ones() as usize == d).collect();
        for top in tops {
            for base in subsets_of(top) {
                if dlx.in_region[base as usize] {
                    dlx.add_row(base, top);
                }
            }
        }
        dlx
    }

    fn add_row(&mut self, base: u64, top: u64) {
        let id = self.rows.len() as u32;
        self.rows.push((base, top));
        let first = self.left.len() as u32;
        let members: Vec<u64> = subsets_of(top & !base).map(|s| base | s).collect();
        let count = members.len() as u32;
        for (k, m) in members.into_iter().enumerate() {
            let node = first + k as u32;
            let c = self.col_of[m as usize];
            let last = self.up[c as usize];
            self.left.push(if k == 0 { first + count - 1 } else { node - 1 });
            self.right.push(if k as u32 == count - 1 { first } else { node + 1 });
            self.up.push(last);
            self.down.push(c);
            self.down[last as usize] = node;
            self.up[c as usize] = node;
            self.col.push(c);
            self.row.push(id);
            self.size[c as usize] += 1;
        }
    }

    fn cover(&mut self, c: u32) {
        let (l, r) = (self.left[c as usize], self.right[c as usize]);
        self.right[l as usize] = r;
        self.left[r as usize] = l;
        let mut i = self.down[c as usize];
        while i != c {
            let mut j = self.right[i as usize];
            while j != i {
                let (u, d) = (self.up[j as usize], self.down[j as usize]);
                self.down[u as usize] = d;
                self.up[d as usize] = u;
                self.size[self.col[j as usize] as usize] -= 1;
                j = self.right[j as usize];
            }
            i = self.down[i as usize];
        }
    }

    fn uncover(&mut self, c: u32) {
        let mut i = self.up[c as usize];
        while i != c {
            let mut j = self.left[i as usize];
            while j != i {
                self.size[self.col[j as usize] as usize] += 1;
                let (u, d) = (self.up[j as usize], self.down[j as usize]);
                self.down[u as usize] = j;
                self.up[d as usize] = j;
                j = self.left[j as usize];
            }
            i = self.up[i as usize];
        }
        let (l, r) = (self.left[c as usize], self.right[c as usize]);
        self.right[l as usize] = c;
        self.left[r as usize] = c;
    }

    fn beta_row_ok(&self) -> bool {
        let d = self.d;
        for k in 0..=d {
            let mut sum = 0i64;
            for j in 0..=k {
                let term = self.pascal[j][k] * self.uncovered_by_rank[j];
                if (k - j) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            if sum < 0 {
                return false;
            }
        }
        true
    }

    fn take(&mut self, row: u32, value: bool) {
        let (base, top) = self.rows[row as usize];
        let delta = if value { -1 } else { 1 };
        for s in subsets_of(top & !base) {
            let m = base | s;
            self.uncovered_by_rank[m.count_ones() as usize] += delta;
            let c = self.col_of[m as usize] as usize - 1;
            self.covered[c / 64] ^= 1 << (c % 64);
        }
    }

    fn run(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        if self.right[0] == 0 {
            return Step::Done;
        }
        if !self.beta_row_ok() {
            return Step::Dead;
        }
        if let Some(failed) = &self.failed {
            if failed.contains(&self.covered) {
                return Step::Dead;
            }
        }
        // the element with the fewest intervals left; ties go to lower rank
        let mut c = self.right[0];
        let mut best = c;
        while c != 0 {
            if self.size[c as usize] < self.size[best as usize] {
                best = c;
                if self.size[c as usize] == 0 {
                    break;
                }
            }
            c = self.right[c as usize];
        }
        if self.size[best as usize] == 0 {
            return Step::Dead;
        }
        self.cover(best);
        let mut r = self.down[best as usize];
        while r != best {
            let mut j = self.right[r as usize];
            while j != r {
                self.cover(self.col[j as usize]);
                j = self.right[j as usize];
            }
            let id = self.row[r as usize];
            self.take(id, true);
            self.chosen.push(id);
            match self.run() {
                Step::Dead => {}
                other => return other,
            }
            self.chosen.pop();
            self.take(id, false);
            let mut j = self.left[r as usize];
            while j != r {
                self.uncover(self.col[j as usize]);
                j = self.left[j as usize];
            }
            r = self.down[r as usize];
        }
        self.uncover(best);
        if let Some(failed) = self.failed.as_mut() {
            failed.insert(self.covered.clone());
        }
        Step::Dead
    }

    fn witness(&self) -> IntervalPartition {
        let mut intervals: Vec<Interval> = self
            .chosen
            .iter()
            .map(|&id| {
                let (base, top) = self.rows[id as usize];
                Interval::from_masks(self.ground, base, top)
            })
            .collect();
        for (mask, &inside) in self.in_region.iter().enumerate() {
            if inside && mask.count_ones() as usize > self.d {
                intervals.push(Interval::from_masks(self.ground, mask as u64, mask as u64));
            }
        }
        IntervalPartition { ground: self.ground, intervals }
    }
}

fn check_cap(pair: &QuotientPair, config: &SolverConfig) -> Result<()> {
    let n = pair.ground_size();
    if n > config.solver_cap {
        return Err(Error::SolverCap { ground: n, cap: config.solver_cap });
    }
    Ok(())
}

/// Decides whether `P_{J/I}` has an interval partition with all tops of size
/// `≥ d`. A found witness has already passed [`verify_partition`].
pub fn exists_partition(pair: &QuotientPair, d: usize, config: &SolverConfig) -> Result<SearchOutcome> {
    check_cap(pair, config)?;
    let n = pair.ground_size();
    let in_region = pair.region_table(n)?;
    let mut search = Dlx::build(n, d, in_region, config);
    let result = match search.run() {
        Step::Done => {
            let witness = search.witness();
            assert!(
                verify_partition(pair, &witness, d, n)?,
                "solver produced an invalid partition for d = {d}"
            );
            PartitionSearch::Found(witness)
        }
        Step::Dead => PartitionSearch::Infeasible,
        Step::OutOfBudget => PartitionSearch::Undecided,
    };
    Ok(SearchOutcome { result, nodes: search.nodes })
}

fn binom_small(n: usize, k: usize) -> i64 {
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Stanley depth or the window it is known to lie in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdepthResult {
    /// A partition with `min_top ≥ lower` is in `witness`.
    pub lower: usize,
    /// No partition exists for any `d > upper`.
    pub upper: usize,
    pub witness: IntervalPartition,
    pub hdepth: usize,
    pub nodes: u64,
}

impl SdepthResult {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}

/// Runs [`exists_partition`] for `d = hdepth, hdepth - 1, …` until a
/// partition turns up. An exhausted budget at some `d` leaves `upper` at that
/// `d` and the descent continues only to improve `lower`.
pub fn sdepth_exact(pair: &QuotientPair, config: &SolverConfig) -> Result<SdepthResult> {
    check_cap(pair, config)?;
    let n = pair.ground_size();
    let alpha = pair.alpha_vector(n)?;
    let hd = hdepth(&alpha)?;
    let region = pair.region(n)?;
    // the all-singletons partition
    let floor = region.iter().map(|m| m.count_ones() as usize).min().expect("nonzero module");
    let singletons = IntervalPartition {
        ground: n,
        intervals: region.iter().map(|&m| Interval::from_masks(n, m, m)).collect(),
    };
    let mut upper = hd;
    let mut nodes = 0;
    let mut decided_above = true;
    for d in (floor + 1..=hd).rev() {
        let outcome = exists_partition(pair, d, config)?;
        nodes += outcome.nodes;
        match outcome.result {
            PartitionSearch::Found(witness) => {
                return Ok(SdepthResult { lower: d, upper, witness, hdepth: hd, nodes });
            }
            PartitionSearch::Infeasible => {
                if decided_above {
                    upper = d - 1;
                }
            }
            PartitionSearch::Undecided => decided_above = false,
        }
    }
    Ok(SdepthResult { lower: floor.min(upper), upper, witness: singletons, hdepth: hd, nodes })
}
