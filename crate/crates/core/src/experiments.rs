//! Named families, parameter-grid audits, the conjecture scan, and report
//! rendering shared by the `sqdepth` binary and the examples.
//!
//! Grid points are evaluated in parallel and merged back in parameter order,
//! so every report is byte-identical across runs (timing is opt-in).

use std::fmt;
use std::io::Write;
use std::time::Instant;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{
    bipartite_alpha, bipartite_beta, bipartite_beta3_ideal, bipartite_hdepth_ideal, bipartite_qdepth_bounds,
    bipartite_qdepth_quotient, bipartite_qdepth_quotient_upper, bipartite_sdepth_bounds, ceil_half,
    conjectured_ideal_qdepth, cycle_power_bound_report, ideal_qdepth_guaranteed, multipartite_alpha,
    multipartite_beta, multipartite_ideal_bounds, multipartite_quotient_bounds, path_aux_upper,
    path_power_bound_report, quotient_safe_range, quotient_upper_bound_binomial, sum_half_ceil,
    BipartiteParams, BoundReport,
};
use crate::combinatorics::ExactInt;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::hilbert::{beta_row, hdepth_certificate, HdepthCertificate};
use crate::ideal::{AlphaVector, ModuleKind, MultipartiteSpec, QuotientPair, SquarefreeIdeal};
use crate::stanley::{sdepth_exact, IntervalPartition, SdepthResult, SolverConfig};

/// Families reachable by name from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Bipartite(BipartiteParams),
    Multipartite(MultipartiteSpec),
    PathAux { m: usize, t: usize },
    CycleAux { n: usize, d: usize },
    Maximal(usize),
    Zero(usize),
    /// Powers of path ideals are not squarefree: bounds only.
    PathPower { n: usize, m: usize, t: usize },
    CyclePower { n: usize, m: usize },
}

pub const FAMILY_NAMES: &[&str] = &[
    "bipartite N M",
    "multipartite N1,N2,...",
    "path-aux M T",
    "cycle-aux N D",
    "maximal N",
    "zero N",
    "path-power N M T",
    "cycle-power N M",
];

fn parse_usize(token: &str) -> Result<usize> {
    token
        .trim()
        .parse()
        .map_err(|_| Error::InvalidSpec(format!("expected a nonnegative integer, got `{token}`")))
}

impl Family {
    /// Parses `NAME ARGS...`, e.g. `bipartite 2 2` or `multipartite 1,1,1`.
    pub fn parse(name: &str, args: &[String]) -> Result<Self> {
        let numbers = |count: usize| -> Result<Vec<usize>> {
            if args.len() != count {
                return Err(Error::InvalidSpec(format!(
                    "family `{name}` takes {count} argument(s), got {}",
                    args.len()
                )));
            }
            args.iter().map(|a| parse_usize(a)).collect()
        };
        match name {
            "bipartite" => {
                let v = numbers(2)?;
                Ok(Family::Bipartite(BipartiteParams::new(v[0], v[1])?))
            }
            "multipartite" => Ok(Family::Multipartite(args.join(",").parse()?)),
            "path-aux" => {
                let v = numbers(2)?;
                Ok(Family::PathAux { m: v[0], t: v[1] })
            }
            "cycle-aux" => {
                let v = numbers(2)?;
                Ok(Family::CycleAux { n: v[0], d: v[1] })
            }
            "maximal" => Ok(Family::Maximal(numbers(1)?[0])),
            "zero" => Ok(Family::Zero(numbers(1)?[0])),
            "path-power" => {
                let v = numbers(3)?;
                Ok(Family::PathPower { n: v[0], m: v[1], t: v[2] })
            }
            "cycle-power" => {
                let v = numbers(2)?;
                Ok(Family::CyclePower { n: v[0], m: v[1] })
            }
            other => Err(Error::InvalidSpec(format!(
                "unknown family `{other}`; known: {}",
                FAMILY_NAMES.join("; ")
            ))),
        }
    }

    /// The squarefree ideal, for the families that are squarefree.
    pub fn ideal(&self) -> Result<SquarefreeIdeal> {
        match self {
            Family::Bipartite(p) => SquarefreeIdeal::bipartite(p.n(), p.m()),
            Family::Multipartite(spec) => SquarefreeIdeal::multipartite(spec),
            Family::PathAux { m, t } => SquarefreeIdeal::path_aux(*m, *t),
            Family::CycleAux { n, d } => SquarefreeIdeal::cycle_aux(*n, *d),
            Family::Maximal(n) => SquarefreeIdeal::maximal(*n),
            Family::Zero(n) => SquarefreeIdeal::zero(*n),
            Family::PathPower { .. } | Family::CyclePower { .. } => Err(Error::InvalidSpec(format!(
                "{self} is not squarefree; only its bounds are available"
            ))),
        }
    }

    /// Closed-form `α_k`, where one is known.
    pub fn closed_alpha(&self, k: usize, kind: ModuleKind) -> Option<ExactInt> {
        match self {
            Family::Bipartite(p) => Some(bipartite_alpha(*p, k, kind)),
            Family::Multipartite(spec) => Some(multipartite_alpha(spec, k, kind)),
            _ => None,
        }
    }

    /// Closed-form `β_k^d`, where one is known.
    pub fn closed_beta(&self, d: usize, k: usize, kind: ModuleKind) -> Option<ExactInt> {
        match self {
            Family::Bipartite(p) => bipartite_beta(*p, d, k, kind).ok(),
            Family::Multipartite(spec) => multipartite_beta(spec, d, k, kind).ok(),
            _ => None,
        }
    }

    /// Every bound that applies to the family for the given module.
    pub fn bounds(&self, kind: ModuleKind) -> Result<Vec<BoundReport>> {
        Ok(match (self, kind) {
            (Family::Bipartite(p), ModuleKind::Ideal) => {
                vec![bipartite_sdepth_bounds(*p).1, bipartite_qdepth_bounds(*p).1]
            }
            (Family::Bipartite(p), ModuleKind::Quotient) => {
                vec![bipartite_sdepth_bounds(*p).0, bipartite_qdepth_bounds(*p).0]
            }
            (Family::Multipartite(spec), ModuleKind::Ideal) => {
                let lower = sum_half_ceil(spec) as i64;
                vec![
                    BoundReport::new(
                        "sdepth(I)",
                        "intersection of disjoint primes: sdepth(I) >= sum ceil(n_i/2)",
                    )
                    .lower(lower),
                    multipartite_ideal_bounds(spec),
                ]
            }
            (Family::Multipartite(spec), ModuleKind::Quotient) => {
                let q = multipartite_quotient_bounds(spec);
                vec![
                    BoundReport::new(
                        "sdepth(S/I)",
                        "intersection of disjoint primes: sdepth(S/I) >= sum ceil(n_i/2) - min ceil(n_i/2)",
                    )
                    .lower(q.lower.expect("lower bound is set"))
                    .note("refuted: fails for (3,1), where sdepth(S/I) = 1; never used as a solver fallback"),
                    BoundReport::new(
                        "sdepth(S/I)",
                        "intersection of disjoint primes: the complement of a largest block is maximal in P, so sdepth(S/I) <= N - max n_i",
                    )
                    .upper((spec.total() - spec.blocks().iter().copied().max().unwrap_or(0)) as i64),
                    q,
                    BoundReport::new(
                        "qdepth(S/I)",
                        "intersection of disjoint primes: qdepth(S/I) < min{d >= r : C(N-d+r-1, r) < n_1...n_r}",
                    )
                    .upper(quotient_upper_bound_binomial(spec) as i64),
                    BoundReport::new(
                        "beta_r^d(S/I) >= 0",
                        "intersection of disjoint primes: beta_r^d(S/I) >= 0 for d <= N - ceil((r! n_1...n_r)^(1/r))",
                    )
                    .upper(quotient_safe_range(spec))
                    .note(format!(
                        "estimate qdepth(S/I) ~ {} (heuristic, not a bound)",
                        quotient_safe_range(spec)
                    )),
                ]
            }
            (Family::PathAux { m, t }, ModuleKind::Ideal) => vec![BoundReport::new(
                "qdepth(U_{m,t})",
                "residue-class intersection U_{m,t}: sdepth <= qdepth <= m + floor(t/2)",
            )
            .upper(path_aux_upper(*m, *t) as i64)],
            (Family::CycleAux { n, d }, ModuleKind::Ideal) => vec![BoundReport::new(
                "qdepth(U'_{n,d})",
                "cyclic residue intersection U'_{n,d}: sdepth <= qdepth <= floor((n+d)/2)",
            )
            .upper(((n + d) / 2) as i64)],
            (Family::Maximal(n), ModuleKind::Ideal) => vec![BoundReport::new(
                "sdepth(m)",
                "maximal ideal: sdepth((x_1..x_n)) = ceil(n/2)",
            )
            .exact(ceil_half(*n) as i64)],
            (Family::PathPower { n, m, t }, _) => vec![path_power_bound_report(*n, *m, *t)?],
            (Family::CyclePower { n, m }, _) => vec![cycle_power_bound_report(*n, *m)?],
            _ => Vec::new(),
        })
    }

    fn sdepth_bounds(&self, kind: ModuleKind) -> Vec<BoundReport> {
        let mut bounds = self.bounds(kind).unwrap_or_default();
        bounds.retain(|b| b.quantity.starts_with("sdepth") && !b.notes.iter().any(|n| n.starts_with("refuted")));
        bounds
    }

    /// A lower bound on `sdepth`, used when the solver cannot run.
    pub fn sdepth_lower(&self, kind: ModuleKind) -> Option<usize> {
        self.sdepth_bounds(kind)
            .iter()
            .filter_map(|b| b.exact.or(b.lower))
            .max()
            .map(|v| v.max(0) as usize)
    }

    /// An upper bound on `sdepth` other than the Hilbert depth.
    pub fn sdepth_upper(&self, kind: ModuleKind) -> Option<usize> {
        self.sdepth_bounds(kind)
            .iter()
            .filter_map(|b| b.exact.or(b.upper))
            .min()
            .map(|v| v.max(0) as usize)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Bipartite(p) => write!(f, "bipartite({},{})", p.n(), p.m()),
            Family::Multipartite(spec) => write!(f, "multipartite{spec}"),
            Family::PathAux { m, t } => write!(f, "path-aux(m={m},t={t})"),
            Family::CycleAux { n, d } => write!(f, "cycle-aux(n={n},d={d})"),
            Family::Maximal(n) => write!(f, "maximal({n})"),
            Family::Zero(n) => write!(f, "zero({n})"),
            Family::PathPower { n, m, t } => write!(f, "path-power(n={n},m={m},t={t})"),
            Family::CyclePower { n, m } => write!(f, "cycle-power(n={n},m={m})"),
        }
    }
}

/// One line of the `alpha` table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaRow {
    pub k: usize,
    pub alpha: String,
    pub closed_form: Option<String>,
    pub agrees: Option<bool>,
}

pub fn alpha_rows(alpha: &AlphaVector, family: Option<&Family>, kind: ModuleKind) -> Vec<AlphaRow> {
    alpha
        .counts()
        .iter()
        .enumerate()
        .map(|(k, value)| {
            let closed = family.and_then(|f| f.closed_alpha(k, kind));
            AlphaRow {
                k,
                alpha: value.to_string(),
                agrees: closed.as_ref().map(|c| c == value),
                closed_form: closed.map(|c| c.to_string()),
            }
        })
        .collect()
}

/// Stanley depth when the solver can run, otherwise the window between a
/// known lower bound and the Hilbert depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdepthReport {
    pub lower: usize,
    pub upper: usize,
    pub hdepth: usize,
    pub witness: Option<IntervalPartition>,
    /// `false` when the ground set exceeded the solver cap.
    pub searched: bool,
    pub nodes: u64,
}

impl SdepthReport {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn window(&self) -> String {
        match self.exact() {
            Some(v) => v.to_string(),
            None => format!("[{}, {}]", self.lower, self.upper),
        }
    }
}

impl From<SdepthResult> for SdepthReport {
    fn from(r: SdepthResult) -> Self {
        SdepthReport {
            lower: r.lower,
            upper: r.upper,
            hdepth: r.hdepth,
            witness: Some(r.witness),
            searched: true,
            nodes: r.nodes,
        }
    }
}

pub fn sdepth_report(
    pair: &QuotientPair,
    family: Option<&Family>,
    kind: ModuleKind,
    limits: &Limits,
) -> Result<SdepthReport> {
    let config = SolverConfig::from(limits);
    if pair.ground_size() <= config.solver_cap {
        return Ok(sdepth_exact(pair, &config)?.into());
    }
    let cert = hdepth_certificate(&pair.alpha_vector(limits.enum_cap)?)?;
    let upper = family.and_then(|f| f.sdepth_upper(kind)).map_or(cert.depth, |u| u.min(cert.depth));
    let lower = family.and_then(|f| f.sdepth_lower(kind)).unwrap_or(0).min(upper);
    Ok(SdepthReport { lower, upper, hdepth: cert.depth, witness: None, searched: false, nodes: 0 })
}

/// Outcome label of one report row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// A stated claim was checked and holds.
    Ok,
    /// A stated claim fails: counts toward exit code 3.
    Violation,
    /// A computed fact about an open case.
    Finding,
    /// A conjectured value agrees with computation.
    Match,
    /// A conjectured or estimated value disagrees; not a violation.
    Deviation,
}

impl Status {
    fn holds(cond: bool) -> Self {
        if cond {
            Status::Ok
        } else {
            Status::Violation
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Finding => "finding",
            Status::Match => "match",
            Status::Deviation => "deviation",
        })
    }
}

/// One checked statement. Field order is the stable CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub spec: String,
    pub alpha: String,
    pub beta_fail: String,
    pub hdepth: Option<usize>,
    pub sdepth_lo: Option<usize>,
    pub sdepth_hi: Option<usize>,
    pub bound_name: String,
    pub bound_value: String,
    pub citation: String,
    pub status: Status,
}

pub const REPORT_COLUMNS: [&str; 10] = [
    "spec",
    "alpha",
    "beta_fail",
    "hdepth",
    "sdepth_lo",
    "sdepth_hi",
    "bound_name",
    "bound_value",
    "citation",
    "status",
];

/// Shared columns of every row about one module.
struct Point {
    spec: String,
    alpha: AlphaVector,
    cert: HdepthCertificate,
    sdepth: Option<SdepthResult>,
}

impl Point {
    fn new(label: String, pair: &QuotientPair, limits: &Limits, solve: bool) -> Result<Self> {
        let alpha = pair.alpha_vector(limits.enum_cap)?;
        let cert = hdepth_certificate(&alpha)?;
        let sdepth = if solve { Some(sdepth_exact(pair, &SolverConfig::from(limits))?) } else { None };
        Ok(Point { spec: label, alpha, cert, sdepth })
    }

    fn hdepth(&self) -> usize {
        self.cert.depth
    }

    fn row(&self, name: impl Into<String>, value: impl Into<String>, citation: &str, status: Status) -> ReportRow {
        ReportRow {
            spec: self.spec.clone(),
            alpha: self.alpha.to_string(),
            beta_fail: beta_fail_text(&self.cert),
            hdepth: Some(self.cert.depth),
            sdepth_lo: self.sdepth.as_ref().map(|s| s.lower),
            sdepth_hi: self.sdepth.as_ref().map(|s| s.upper),
            bound_name: name.into(),
            bound_value: value.into(),
            citation: citation.to_string(),
            status,
        }
    }

    /// `qdepth` against a bound report.
    fn check_qdepth(&self, report: &BoundReport) -> ReportRow {
        let status = Status::holds(report.admits(self.hdepth() as i64));
        self.row(report.quantity.clone(), report.window(), &report.citation, status)
    }

    /// The solved `sdepth` window against a bound report: a violation needs
    /// the whole window to fall outside.
    fn check_sdepth(&self, report: &BoundReport) -> Option<ReportRow> {
        let s = self.sdepth.as_ref()?;
        let (lo, hi) = (s.lower as i64, s.upper as i64);
        let mut ok = report.lower.is_none_or(|l| hi >= l) && report.upper.is_none_or(|u| lo <= u);
        if let Some(e) = report.exact {
            ok &= lo <= e && e <= hi;
        }
        Some(self.row(report.quantity.clone(), report.window(), &report.citation, Status::holds(ok)))
    }

    fn check_sdepth_below_hdepth(&self) -> Option<ReportRow> {
        let s = self.sdepth.as_ref()?;
        Some(self.row(
            "sdepth <= qdepth",
            format!("{} <= {}", s.lower, self.hdepth()),
            "Stanley depth never exceeds Hilbert depth",
            Status::holds(s.lower <= self.hdepth()),
        ))
    }

    /// Closed-form `α` and every `β_k^d` against enumeration.
    fn check_closed_forms(&self, family: &Family, kind: ModuleKind, citation: &str) -> Vec<ReportRow> {
        let counts = self.alpha.counts();
        let alpha_bad = (0..counts.len()).find(|&k| family.closed_alpha(k, kind).as_ref() != Some(&counts[k]));
        let n = self.alpha.ground_size();
        let mut beta_bad = None;
        'outer: for d in 0..=n {
            let row = beta_row(&self.alpha, d);
            for (k, value) in row.iter().enumerate() {
                if family.closed_beta(d, k, kind).as_ref() != Some(value) {
                    beta_bad = Some((d, k));
                    break 'outer;
                }
            }
        }
        vec![
            self.row(
                "alpha closed form",
                alpha_bad.map_or("agrees for all k".to_string(), |k| format!("differs at k={k}")),
                citation,
                Status::holds(alpha_bad.is_none()),
            ),
            self.row(
                "beta closed form",
                beta_bad.map_or("agrees for all k <= d <= N".to_string(), |(d, k)| format!("differs at d={d} k={k}")),
                citation,
                Status::holds(beta_bad.is_none()),
            ),
        ]
    }
}

fn beta_fail_text(cert: &HdepthCertificate) -> String {
    match &cert.failing {
        Some(e) => format!("beta_{}^{}={}", e.k, e.d, e.value),
        None => String::new(),
    }
}

/// Which parameter grid an audit walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditGrid {
    /// `1 ≤ m ≤ n`, `n + m ≤ max_total`; `sdepth` solved for `n + m ≤ sdepth_max`.
    Bipartite { max_total: usize, sdepth_max: usize },
    /// Non-increasing block tuples of length `r`, blocks `≤ max_block`, `N ≤ max_total`.
    Multipartite { r: usize, max_block: usize, max_total: usize, sdepth_max: usize },
    /// `U_{m,t}` for `t + m ≤ max_sum`.
    PathAux { max_sum: usize },
    /// `U'_{n,d}` for `d | n`, `d < n ≤ max_n`.
    CycleAux { max_n: usize },
}

impl AuditGrid {
    /// The grids of the acceptance audit.
    pub fn defaults() -> Vec<AuditGrid> {
        let mut grids = vec![AuditGrid::Bipartite { max_total: 14, sdepth_max: 8 }];
        for r in 1..=8 {
            let max_total = if r <= 4 { 14 } else { 8 };
            grids.push(AuditGrid::Multipartite { r, max_block: 14, max_total, sdepth_max: 8 });
        }
        grids.push(AuditGrid::PathAux { max_sum: 12 });
        grids.push(AuditGrid::CycleAux { max_n: 12 });
        grids
    }
}

const BIPARTITE_FORMS: &str = "bipartite edge ideal: closed forms for alpha_k and beta_k^d";
const MULTIPARTITE_FORMS: &str =
    "intersection of disjoint primes: inclusion-exclusion forms for alpha_k and beta_k^d";

fn audit_bipartite_point(p: BipartiteParams, solve: bool, limits: &Limits) -> Result<Vec<ReportRow>> {
    let family = Family::Bipartite(p);
    let ideal = family.ideal()?;
    let (n, m) = (p.n(), p.m());
    let mut rows = Vec::new();

    let point = Point::new(format!("{family} I"), &QuotientPair::ideal(ideal.clone()), limits, solve)?;
    rows.extend(point.check_closed_forms(&family, ModuleKind::Ideal, BIPARTITE_FORMS));
    let formula = bipartite_hdepth_ideal(p);
    rows.push(point.row(
        "qdepth(I) = floor((N+2)/2)",
        formula.to_string(),
        "bipartite edge ideal: qdepth(I) = floor((n+m+2)/2)",
        if point.hdepth() == formula { Status::Match } else { Status::Violation },
    ));
    let cubic_ok = (3..=p.total()).all(|d| beta_row(&point.alpha, d)[3] == bipartite_beta3_ideal(p, d));
    if p.total() >= 3 {
        rows.push(point.row(
            "beta_3^d(I) = nm(N-2d+2)/2",
            if cubic_ok { "holds for 3 <= d <= N" } else { "fails" },
            "bipartite edge ideal: cubic entry of the beta row",
            Status::holds(cubic_ok),
        ));
    }
    if n % 2 == 0 && m % 2 == 0 {
        let (t, s) = (n / 2, m / 2);
        let d = t + s + 1;
        let row = beta_row(&point.alpha, d);
        let expect_45 = ExactInt::from(t * s * (2 * s * s + 2 * t * t - 1) / 3);
        let mut ok = row[0] == 0.into() && row[1] == 0.into() && row[3] == 0.into();
        ok &= row[2] == ExactInt::from(4 * s * t);
        if d >= 5 {
            ok &= row[4] == expect_45 && row[5] == expect_45;
        }
        rows.push(point.row(
            "beta^{t+s+1}(I) profile",
            format!("0, 0, {}, 0, {expect_45}, {expect_45}", 4 * s * t),
            "bipartite edge ideal with n=2t, m=2s: row t+s+1 starts 0, 0, 4st, 0",
            Status::holds(ok),
        ));
    }
    let (_, iq) = bipartite_sdepth_bounds(p);
    rows.extend(point.check_sdepth(&iq));
    rows.extend(point.check_sdepth_below_hdepth());
    if n % 2 == 0 && m % 2 == 0 {
        if let Some(s) = &point.sdepth {
            let value = if s.lower == s.upper { s.lower.to_string() } else { format!("[{}, {}]", s.lower, s.upper) };
            rows.push(point.row(
                "sdepth(I) in {t+s, t+s+1}",
                value,
                "bipartite edge ideal with n=2t, m=2s: sdepth(I) is t+s or t+s+1, open which",
                Status::Finding,
            ));
        }
    }

    let point = Point::new(format!("{family} S/I"), &QuotientPair::quotient(ideal), limits, solve)?;
    rows.extend(point.check_closed_forms(&family, ModuleKind::Quotient, BIPARTITE_FORMS));
    let q = point.hdepth();
    let upper = bipartite_qdepth_quotient_upper(p);
    rows.push(point.row(
        "qdepth(S/I) <= floor(N + 1/2 - sqrt(2nm + 1/4))",
        upper.to_string(),
        "bipartite edge ideal: qdepth(S/I) <= floor(n + m + 1/2 - sqrt(2mn + 1/4))",
        Status::holds(q <= upper),
    ));
    if let Ok(ch) = bipartite_qdepth_quotient(p) {
        rows.push(point.row(
            "qdepth(S/I) by even-row test",
            ch.to_string(),
            "bipartite edge ideal, m >= 2: qdepth(S/I) = max d with C(d-n,2l) + C(d-m,2l) >= C(d,2l)",
            Status::holds(ch == q),
        ));
    }
    let small = n + 2 <= 2 * m;
    rows.push(point.row(
        "qdepth(S/I) < m iff n <= 2m-2",
        format!("n <= 2m-2: {small}"),
        "bipartite edge ideal: qdepth(S/I) < m exactly when n <= 2m-2",
        Status::holds((q < m) == small),
    ));
    if n + 1 >= 2 * m {
        rows.push(point.row(
            "m <= qdepth(S/I) <= n-m+1",
            format!("[{m}, {}]", n + 1 - m),
            "bipartite edge ideal, n >= 2m-1: m <= qdepth(S/I) <= n-m+1",
            Status::holds(m <= q && q <= n + 1 - m),
        ));
    }
    let (sq, _) = bipartite_sdepth_bounds(p);
    rows.extend(point.check_sdepth(&sq));
    rows.extend(point.check_sdepth_below_hdepth());
    Ok(rows)
}

fn audit_multipartite_point(spec: &MultipartiteSpec, solve: bool, limits: &Limits) -> Result<Vec<ReportRow>> {
    let family = Family::Multipartite(spec.clone());
    let ideal = family.ideal()?;
    let r = spec.len();
    let mut rows = Vec::new();

    let point = Point::new(format!("{family} I"), &QuotientPair::ideal(ideal.clone()), limits, solve)?;
    rows.extend(point.check_closed_forms(&family, ModuleKind::Ideal, MULTIPARTITE_FORMS));
    let window = multipartite_ideal_bounds(spec);
    let mut relaxed = window.clone();
    relaxed.exact = None;
    rows.push(point.check_qdepth(&relaxed));
    let conj = conjectured_ideal_qdepth(spec);
    let guaranteed = ideal_qdepth_guaranteed(spec);
    let status = match (point.hdepth() == conj, guaranteed) {
        (true, _) => Status::Match,
        (false, true) => Status::Violation,
        (false, false) => Status::Deviation,
    };
    rows.push(point.row(
        format!(
            "qdepth(I) = floor((N+r)/2) [{}]",
            if guaranteed { "guaranteed" } else { "out-of-guarantee" }
        ),
        conj.to_string(),
        "intersection of disjoint primes: qdepth(I) = floor((N+r)/2), proven for r <= 2 or at most one even block, conjectured otherwise",
        status,
    ));
    let sdepth_lower = BoundReport::new("sdepth(I)", "intersection of disjoint primes: sdepth(I) >= sum ceil(n_i/2)")
        .lower(sum_half_ceil(spec) as i64);
    rows.extend(point.check_sdepth(&sdepth_lower));
    rows.extend(point.check_sdepth_below_hdepth());

    let point = Point::new(format!("{family} S/I"), &QuotientPair::quotient(ideal), limits, solve)?;
    rows.extend(point.check_closed_forms(&family, ModuleKind::Quotient, MULTIPARTITE_FORMS));
    let window = multipartite_quotient_bounds(spec);
    rows.push(point.check_qdepth(&window));
    rows.push(point.row(
        "qdepth(S/I) >= r-1",
        (r - 1).to_string(),
        "intersection of disjoint primes: depth(S/I) = r-1 <= qdepth(S/I)",
        Status::holds(point.hdepth() + 1 >= r),
    ));
    let binomial = quotient_upper_bound_binomial(spec);
    rows.push(point.row(
        "qdepth(S/I) <= min{d >= r : C(N-d+r-1,r) < prod n_i} - 1",
        binomial.to_string(),
        "intersection of disjoint primes: qdepth(S/I) < min{d >= r : C(N-d+r-1, r) < n_1...n_r}",
        Status::holds(point.hdepth() <= binomial),
    ));
    let safe = quotient_safe_range(spec);
    let safe_ok = (r as i64..=safe).all(|d| !beta_row(&point.alpha, d as usize)[r].is_negative());
    rows.push(point.row(
        "beta_r^d(S/I) >= 0 for r <= d <= safe range",
        safe.to_string(),
        "intersection of disjoint primes: beta_r^d(S/I) >= 0 for d <= N - ceil((r! n_1...n_r)^(1/r))",
        Status::holds(safe_ok),
    ));
    let deviation = point.hdepth() as i64 - safe;
    rows.push(point.row(
        "qdepth(S/I) ~ N - ceil((r! prod n_i)^(1/r)) [estimate]",
        format!("{safe} (deviation {deviation:+})"),
        "intersection of disjoint primes: heuristic estimate of qdepth(S/I)",
        if deviation == 0 { Status::Match } else { Status::Deviation },
    ));
    let sdepth_lower = BoundReport::new(
        "sdepth(S/I)",
        "intersection of disjoint primes: sdepth(S/I) >= sum ceil(n_i/2) - min ceil(n_i/2)",
    )
    .lower(window.lower.expect("set"));
    rows.extend(point.check_sdepth(&sdepth_lower));
    let largest = spec.blocks().iter().copied().max().expect("r >= 1");
    let complement_top = BoundReport::new(
        "sdepth(S/I) <= N - max n_i",
        "intersection of disjoint primes: the complement of a largest block is maximal in P, so sdepth(S/I) <= N - max n_i",
    )
    .upper((spec.total() - largest) as i64);
    rows.extend(point.check_sdepth(&complement_top));
    rows.extend(point.check_sdepth_below_hdepth());
    Ok(rows)
}

fn audit_path_aux_point(m: usize, t: usize, limits: &Limits) -> Result<Vec<ReportRow>> {
    let family = Family::PathAux { m, t };
    let ideal = family.ideal()?;
    let point = Point::new(format!("{family} I"), &QuotientPair::ideal(ideal.clone()), limits, false)?;
    let same = ideal == SquarefreeIdeal::path_aux_residue(m, t)?;
    Ok(vec![
        point.row(
            "prime intersection = residue-class generators",
            if same { "equal" } else { "differ" },
            "U_{m,t}: intersection of residue-class primes equals the ideal of residue transversals",
            Status::holds(same),
        ),
        point.check_qdepth(&family.bounds(ModuleKind::Ideal)?[0]),
    ])
}

fn audit_cycle_aux_point(n: usize, d: usize, limits: &Limits) -> Result<Vec<ReportRow>> {
    let family = Family::CycleAux { n, d };
    let point = Point::new(format!("{family} I"), &QuotientPair::ideal(family.ideal()?), limits, false)?;
    Ok(vec![point.check_qdepth(&family.bounds(ModuleKind::Ideal)?[0])])
}

enum AuditPoint {
    Bipartite(BipartiteParams, bool),
    Multipartite(MultipartiteSpec, bool),
    PathAux(usize, usize),
    CycleAux(usize, usize),
}

fn grid_points(grid: &AuditGrid) -> Vec<AuditPoint> {
    match grid {
        AuditGrid::Bipartite { max_total, sdepth_max } => BipartiteParams::grid(*max_total)
            .into_iter()
            .map(|p| AuditPoint::Bipartite(p, p.total() <= *sdepth_max))
            .collect(),
        AuditGrid::Multipartite { r, max_block, max_total, sdepth_max } => MultipartiteSpec::grid(*r, *max_block)
            .into_iter()
            .filter(|s| s.total() <= *max_total)
            .map(|s| {
                let solve = s.total() <= *sdepth_max;
                AuditPoint::Multipartite(s, solve)
            })
            .collect(),
        AuditGrid::PathAux { max_sum } => (1..*max_sum)
            .flat_map(|m| (1..=max_sum - m).map(move |t| AuditPoint::PathAux(m, t)))
            .collect(),
        AuditGrid::CycleAux { max_n } => (2..=*max_n)
            .flat_map(|n| (1..n).filter(move |d| n % d == 0).map(move |d| AuditPoint::CycleAux(n, d)))
            .collect(),
    }
}

/// Evaluates every applicable claim on every grid point, in parameter order.
pub fn run_audit(grid: &AuditGrid, limits: &Limits) -> Result<Vec<ReportRow>> {
    let points = grid_points(grid);
    let per_point: Vec<Result<Vec<ReportRow>>> = points
        .par_iter()
        .map(|point| match point {
            AuditPoint::Bipartite(p, solve) => audit_bipartite_point(*p, *solve, limits),
            AuditPoint::Multipartite(s, solve) => audit_multipartite_point(s, *solve, limits),
            AuditPoint::PathAux(m, t) => audit_path_aux_point(*m, *t, limits),
            AuditPoint::CycleAux(n, d) => audit_cycle_aux_point(*n, *d, limits),
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_point {
        rows.extend(r?);
    }
    Ok(rows)
}

/// Row counts by status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub ok: usize,
    pub violations: usize,
    pub findings: usize,
    pub matches: usize,
    pub deviations: usize,
}

impl AuditSummary {
    pub fn of(rows: &[ReportRow]) -> Self {
        let mut s = AuditSummary::default();
        for row in rows {
            match row.status {
                Status::Ok => s.ok += 1,
                Status::Violation => s.violations += 1,
                Status::Finding => s.findings += 1,
                Status::Match => s.matches += 1,
                Status::Deviation => s.deviations += 1,
            }
        }
        s
    }
}

impl fmt::Display for AuditSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ok, {} violations, {} findings, {} matches, {} deviations",
            self.ok, self.violations, self.findings, self.matches, self.deviations
        )
    }
}

/// One point of the scan of `qdepth(I) = ⌊(N+r)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub spec: String,
    pub blocks: Vec<usize>,
    pub total: usize,
    pub qdepth_ideal: usize,
    pub conjectured: usize,
    pub status: Status,
    pub guarantee: &'static str,
    pub qdepth_quotient: usize,
    /// `N - ⌈(r! n_1⋯n_r)^{1/r}⌉`
    pub estimate: i64,
    pub deviation: i64,
    pub sdepth_lo: Option<usize>,
    pub sdepth_hi: Option<usize>,
    pub bounds: Vec<BoundReport>,
    /// Only filled when timing was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

impl ScanRecord {
    pub fn is_guaranteed(&self) -> bool {
        self.guarantee == "guaranteed"
    }

    /// Whether the bounds carried in the record admit the computed values.
    pub fn bounds_consistent(&self) -> bool {
        self.bounds.iter().all(|b| {
            let value = if b.quantity == "qdepth(I)" {
                self.qdepth_ideal
            } else if b.quantity == "qdepth(S/I)" {
                self.qdepth_quotient
            } else {
                return true;
            };
            let mut relaxed = b.clone();
            relaxed.exact = None;
            relaxed.admits(value as i64)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Also solve `sdepth(I)` when `N` is within the solver cap.
    pub with_sdepth: bool,
    pub timing: bool,
}

/// Scans all specs with `r` blocks of size `≤ max_block`.
pub fn scan_conjecture(r: usize, max_block: usize, options: ScanOptions, limits: &Limits) -> Result<Vec<ScanRecord>> {
    let specs = MultipartiteSpec::grid(r, max_block);
    if let Some(big) = specs.iter().find(|s| s.total() > limits.enum_cap) {
        return Err(Error::EnumerationCap { ground: big.total(), cap: limits.enum_cap });
    }
    specs.par_iter().map(|s| scan_point(s, options, limits)).collect()
}

pub fn scan_point(spec: &MultipartiteSpec, options: ScanOptions, limits: &Limits) -> Result<ScanRecord> {
    let start = Instant::now();
    let ideal = SquarefreeIdeal::multipartite(spec)?;
    let qi = hdepth_certificate(&QuotientPair::ideal(ideal.clone()).alpha_vector(limits.enum_cap)?)?.depth;
    let qq = hdepth_certificate(&QuotientPair::quotient(ideal.clone()).alpha_vector(limits.enum_cap)?)?.depth;
    let conj = conjectured_ideal_qdepth(spec);
    let guaranteed = ideal_qdepth_guaranteed(spec);
    let status = match (qi == conj, guaranteed) {
        (true, _) => Status::Match,
        (false, true) => Status::Violation,
        (false, false) => Status::Deviation,
    };
    let estimate = quotient_safe_range(spec);
    let sdepth = if options.with_sdepth && spec.total() <= limits.solver_cap {
        Some(sdepth_exact(&QuotientPair::ideal(ideal), &SolverConfig::from(limits))?)
    } else {
        None
    };
    let mut bounds = vec![multipartite_ideal_bounds(spec), multipartite_quotient_bounds(spec)];
    bounds.push(
        BoundReport::new(
            "qdepth(S/I)",
            "intersection of disjoint primes: qdepth(S/I) < min{d >= r : C(N-d+r-1, r) < n_1...n_r}",
        )
        .upper(quotient_upper_bound_binomial(spec) as i64),
    );
    let micros = options.timing.then(|| start.elapsed().as_micros().to_u64().unwrap_or(u64::MAX));
    Ok(ScanRecord {
        spec: spec.to_string(),
        blocks: spec.blocks().to_vec(),
        total: spec.total(),
        qdepth_ideal: qi,
        conjectured: conj,
        status,
        guarantee: if guaranteed { "guaranteed" } else { "out-of-guarantee" },
        qdepth_quotient: qq,
        estimate,
        deviation: qq as i64 - estimate,
        sdepth_lo: sdepth.as_ref().map(|s| s.lower),
        sdepth_hi: sdepth.as_ref().map(|s| s.upper),
        bounds,
        micros,
    })
}

/// Flattens scan records into report rows (conjecture and estimate lines).
pub fn scan_rows(records: &[ScanRecord]) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for rec in records {
        let base = |name: String, value: String, citation: &str, status: Status| ReportRow {
            spec: format!("multipartite{}", rec.spec),
            alpha: String::new(),
            beta_fail: String::new(),
            hdepth: Some(rec.qdepth_ideal),
            sdepth_lo: rec.sdepth_lo,
            sdepth_hi: rec.sdepth_hi,
            bound_name: name,
            bound_value: value,
            citation: citation.to_string(),
            status,
        };
        rows.push(base(
            format!("qdepth(I) = floor((N+r)/2) [{}]", rec.guarantee),
            rec.conjectured.to_string(),
            "intersection of disjoint primes: qdepth(I) = floor((N+r)/2), proven for r <= 2 or at most one even block, conjectured otherwise",
            rec.status,
        ));
        let mut est = base(
            "qdepth(S/I) ~ N - ceil((r! prod n_i)^(1/r)) [estimate]".to_string(),
            format!("{} (observed {}, deviation {:+})", rec.estimate, rec.qdepth_quotient, rec.deviation),
            "intersection of disjoint primes: heuristic estimate of qdepth(S/I)",
            if rec.deviation == 0 { Status::Match } else { Status::Deviation },
        );
        est.hdepth = Some(rec.qdepth_quotient);
        est.sdepth_lo = None;
        est.sdepth_hi = None;
        rows.push(est);
    }
    rows
}

/// Output flavour of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

fn opt(v: Option<usize>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

/// Left-aligned text table.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn write_rows(rows: &[ReportRow], format: OutputFormat, out: &mut dyn Write) -> Result<(), std::io::Error> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            if rows.is_empty() {
                writer.write_record(REPORT_COLUMNS)?;
            }
            for row in rows {
                writer.serialize(row)?;
            }
            writer.flush()
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.spec.clone(),
                        opt(r.hdepth),
                        match (r.sdepth_lo, r.sdepth_hi) {
                            (Some(a), Some(b)) if a == b => a.to_string(),
                            (Some(a), Some(b)) => format!("[{a}, {b}]"),
                            _ => String::new(),
                        },
                        r.bound_name.clone(),
                        r.bound_value.clone(),
                        r.status.to_string(),
                    ]
                })
                .collect();
            out.write_all(render_table(&["spec", "hdepth", "sdepth", "claim", "value", "status"], &cells).as_bytes())
        }
    }
}

pub fn write_scan(records: &[ScanRecord], format: OutputFormat, out: &mut dyn Write) -> Result<(), std::io::Error> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)
        }
        OutputFormat::Csv => write_rows(&scan_rows(records), format, out),
        OutputFormat::Table => {
            let timing = records.iter().any(|r| r.micros.is_some());
            let mut header = vec!["spec", "N", "qdepth(I)", "floor((N+r)/2)", "status", "guarantee", "qdepth(S/I)", "estimate", "dev", "sdepth(I)"];
            if timing {
                header.push("us");
            }
            let cells: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let mut row = vec![
                        r.spec.clone(),
                        r.total.to_string(),
                        r.qdepth_ideal.to_string(),
                        r.conjectured.to_string(),
                        r.status.to_string(),
                        r.guarantee.to_string(),
                        r.qdepth_quotient.to_string(),
                        r.estimate.to_string(),
                        format!("{:+}", r.deviation),
                        match (r.sdepth_lo, r.sdepth_hi) {
                            (Some(a), Some(b)) if a == b => a.to_string(),
                            (Some(a), Some(b)) => format!("[{a}, {b}]"),
                            _ => String::new(),
                        },
                    ];
                    if timing {
                        row.push(opt(r.micros.map(|m| m as usize)));
                    }
                    row
                })
                .collect();
            out.write_all(render_table(&header, &cells).as_bytes())
        }
    }
}
