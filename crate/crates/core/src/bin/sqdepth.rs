//! Command-line front end. Exit codes: 0 success, 1 usage or input error,
//! 2 undecided Stanley depth, 3 violated claim in `audit` or `scan`.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::Serialize;

use squarefree_depth::closed_forms::BoundReport;
use squarefree_depth::experiments::{
    alpha_rows, render_table, run_audit, scan_conjecture, sdepth_report, write_rows, write_scan, AuditGrid,
    AuditSummary, Family, OutputFormat, ScanOptions, Status,
};
use squarefree_depth::hilbert::{beta_row, hdepth_certificate};
use squarefree_depth::stanley::{sdepth_exact, SolverConfig};
use squarefree_depth::{Limits, ModuleKind, QuotientPair, SquarefreeIdeal};

const EXIT_USAGE: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "sqdepth", version, about = "Hilbert and Stanley depth of squarefree monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank counts of the region, with closed forms for known families.
    Alpha {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Rows of the beta transform.
    Beta {
        #[command(flatten)]
        input: Input,
        /// Only this row.
        #[arg(short, long)]
        d: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Hilbert depth.
    Hdepth {
        #[command(flatten)]
        input: Input,
        /// Also print the first negative entry one row above.
        #[arg(long)]
        show_beta: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Stanley depth by interval-partition search.
    Sdepth {
        #[command(flatten)]
        input: Input,
        /// Node budget per search (default from SDEPTH_NODE_BUDGET or 10^7).
        #[arg(long)]
        budget: Option<u64>,
        /// Remember infeasible states.
        #[arg(long)]
        memo: bool,
        /// Write the partition found to this file.
        #[arg(long, value_name = "PATH")]
        witness: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Every known bound for a family.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Print a family's generators in the ideal file format.
    Family {
        /// Family name followed by its parameters.
        #[arg(required = true, num_args = 1.., value_name = "NAME ARGS")]
        spec: Vec<String>,
    },
    /// Check the stated bounds over parameter grids.
    Audit {
        #[arg(long, value_enum, default_value = "all")]
        grid: GridKind,
        /// Largest N (bipartite n+m, multipartite total) or path-aux m+t, cycle-aux n.
        #[arg(long)]
        max_total: Option<usize>,
        /// Number of blocks for the multipartite grid (default: 1 to 8).
        #[arg(long)]
        r: Option<usize>,
        /// Largest block for the multipartite grid.
        #[arg(long)]
        max_block: Option<usize>,
        /// Solve sdepth for points with N up to this.
        #[arg(long)]
        sdepth_max: Option<usize>,
        /// Print only rows with this status.
        #[arg(long, value_enum)]
        only: Option<StatusFilter>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare qdepth(I) with floor((N+r)/2) over all block sizes.
    Scan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_block: usize,
        /// Also solve sdepth(I) when N is within the solver cap.
        #[arg(long)]
        with_sdepth: bool,
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Input {
    /// Family name followed by its parameters, e.g. `--family bipartite 2 2`.
    #[arg(long, num_args = 1.., value_name = "NAME ARGS", conflicts_with = "file", required_unless_present = "file")]
    family: Option<Vec<String>>,
    /// Ideal file: `n <ground>` then one generator per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "quotient")]
    ideal: bool,
    /// Use S/I instead of I.
    #[arg(long)]
    quotient: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

impl Output {
    fn format(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else if self.csv {
            OutputFormat::Csv
        } else {
            OutputFormat::Table
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GridKind {
    All,
    Bipartite,
    Multipartite,
    PathAux,
    CycleAux,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatusFilter {
    Ok,
    Violation,
    Finding,
    Match,
    Deviation,
}

impl StatusFilter {
    fn status(self) -> Status {
        match self {
            StatusFilter::Ok => Status::Ok,
            StatusFilter::Violation => Status::Violation,
            StatusFilter::Finding => Status::Finding,
            StatusFilter::Match => Status::Match,
            StatusFilter::Deviation => Status::Deviation,
        }
    }
}

type CliResult = Result<u8, String>;

struct Loaded {
    pair: QuotientPair,
    family: Option<Family>,
    kind: ModuleKind,
    label: String,
}

impl Input {
    fn kind(&self) -> ModuleKind {
        if self.quotient && !self.ideal {
            ModuleKind::Quotient
        } else {
            ModuleKind::Ideal
        }
    }

    fn family(&self) -> Result<Option<Family>, String> {
        match &self.family {
            Some(words) => {
                let (name, args) = words.split_first().ok_or("--family needs a name")?;
                Family::parse(name, args).map(Some).map_err(|e| e.to_string())
            }
            None => Ok(None),
        }
    }

    fn load(&self) -> Result<Loaded, String> {
        let kind = self.kind();
        let family = self.family()?;
        let (ideal, label) = match (&family, &self.file) {
            (Some(f), _) => (f.ideal().map_err(|e| e.to_string())?, f.to_string()),
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                let ideal = SquarefreeIdeal::parse_text(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                (ideal, path.display().to_string())
            }
            (None, None) => return Err("give --family or --file".into()),
        };
        let suffix = match kind {
            ModuleKind::Ideal => "I",
            ModuleKind::Quotient => "S/I",
        };
        Ok(Loaded { pair: QuotientPair::of_kind(ideal, kind), family, kind, label: format!("{label} {suffix}") })
    }
}

fn emit<T: Serialize>(format: OutputFormat, header: &[&str], rows: &[T], table: impl Fn(&T) -> Vec<String>) -> CliResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: &dyn std::fmt::Display| e.to_string();
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, rows).map_err(|e| io_err(&e))?;
            writeln!(out).map_err(|e| io_err(&e))?;
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            for row in rows {
                writer.serialize(row).map_err(|e| io_err(&e))?;
            }
            writer.flush().map_err(|e| io_err(&e))?;
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows.iter().map(table).collect();
            out.write_all(render_table(header, &cells).as_bytes()).map_err(|e| io_err(&e))?;
        }
    }
    Ok(0)
}

fn limits_with(budget: Option<u64>) -> Limits {
    let mut limits = Limits::from_env();
    if let Some(b) = budget {
        limits.node_budget = b;
    }
    limits
}

fn cmd_alpha(input: &Input, out: &Output) -> CliResult {
    let loaded = input.load()?;
    let limits = Limits::from_env();
    let alpha = loaded.pair.alpha_vector(limits.enum_cap).map_err(|e| e.to_string())?;
    if alpha.is_zero() {
        eprintln!("warning: {} is the zero module", loaded.label);
    }
    let rows = alpha_rows(&alpha, loaded.family.as_ref(), loaded.kind);
    let show = |v: &Option<String>| v.clone().unwrap_or_default();
    emit(out.format(), &["k", "alpha", "closed form", "agrees"], &rows, |r| {
        vec![r.k.to_string(), r.alpha.clone(), show(&r.closed_form), show(&r.agrees.map(|a| a.to_string()))]
    })
}

#[derive(Serialize)]
struct BetaLine {
    d: usize,
    beta: Vec<String>,
    first_negative: Option<usize>,
}

fn cmd_beta(input: &Input, d: Option<usize>, out: &Output) -> CliResult {
    let loaded = input.load()?;
    let limits = Limits::from_env();
    let alpha = loaded.pair.alpha_vector(limits.enum_cap).map_err(|e| e.to_string())?;
    let n = alpha.ground_size();
    let range = match d {
        Some(d) if d > n => return Err(format!("d = {d} exceeds the ground size {n}")),
        Some(d) => d..=d,
        None => 0..=n,
    };
    let rows: Vec<BetaLine> = range
        .map(|d| {
            let row = beta_row(&alpha, d);
            BetaLine {
                d,
                first_negative: row.iter().position(|b| b.is_negative()),
                beta: row.iter().map(|b| b.to_string()).collect(),
            }
        })
        .collect();
    if out.format() == OutputFormat::Csv {
        // one line per entry keeps the columns fixed
        let flat: Vec<(usize, usize, String)> =
            rows.iter().flat_map(|r| r.beta.iter().enumerate().map(move |(k, b)| (r.d, k, b.clone()))).collect();
        let mut writer = csv::Writer::from_writer(io::stdout().lock());
        writer.write_record(["d", "k", "beta"]).map_err(|e| e.to_string())?;
        for (d, k, b) in flat {
            writer.write_record([d.to_string(), k.to_string(), b]).map_err(|e| e.to_string())?;
        }
        writer.flush().map_err(|e| e.to_string())?;
        return Ok(0);
    }
    emit(out.format(), &["d", "beta_0..beta_d", "first negative k"], &rows, |r| {
        vec![r.d.to_string(), r.beta.join(" "), r.first_negative.map_or(String::new(), |k| k.to_string())]
    })
}

#[derive(Serialize)]
struct HdepthLine {
    module: String,
    hdepth: usize,
    failing_d: Option<usize>,
    failing_k: Option<usize>,
    failing_value: Option<String>,
}

fn cmd_hdepth(input: &Input, show_beta: bool, out: &Output) -> CliResult {
    let loaded = input.load()?;
    let limits = Limits::from_env();
    let alpha = loaded.pair.alpha_vector(limits.enum_cap).map_err(|e| e.to_string())?;
    let cert = hdepth_certificate(&alpha).map_err(|e| e.to_string())?;
    let line = HdepthLine {
        module: loaded.label,
        hdepth: cert.depth,
        failing_d: cert.failing.as_ref().map(|e| e.d),
        failing_k: cert.failing.as_ref().map(|e| e.k),
        failing_value: cert.failing.as_ref().map(|e| e.value.to_string()),
    };
    if out.format() != OutputFormat::Table {
        return emit(out.format(), &[], &[line], |_| Vec::new());
    }
    println!("{}", line.hdepth);
    if show_beta {
        match &cert.failing {
            Some(e) => println!("beta_{}^{} = {}", e.k, e.d, e.value),
            None => println!("hdepth equals the ground size; no row above"),
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SdepthLine {
    module: String,
    sdepth_lo: usize,
    sdepth_hi: usize,
    hdepth: usize,
    searched: bool,
    nodes: u64,
    intervals: Option<usize>,
}

fn cmd_sdepth(input: &Input, budget: Option<u64>, memo: bool, witness: Option<&PathBuf>, out: &Output) -> CliResult {
    let loaded = input.load()?;
    let limits = limits_with(budget);
    let report = if memo && loaded.pair.ground_size() <= limits.solver_cap {
        let config = SolverConfig::from(&limits).with_memo(true);
        sdepth_exact(&loaded.pair, &config).map_err(|e| e.to_string())?.into()
    } else {
        sdepth_report(&loaded.pair, loaded.family.as_ref(), loaded.kind, &limits).map_err(|e| e.to_string())?
    };
    if let (Some(path), Some(w)) = (witness, &report.witness) {
        let text = format!("# {} with every top of size >= {}\n{}", loaded.label, report.lower, w.to_witness());
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let line = SdepthLine {
        module: loaded.label,
        sdepth_lo: report.lower,
        sdepth_hi: report.upper,
        hdepth: report.hdepth,
        searched: report.searched,
        nodes: report.nodes,
        intervals: report.witness.as_ref().map(|w| w.len()),
    };
    if out.format() == OutputFormat::Table {
        match report.exact() {
            Some(v) => println!("{v}"),
            None => println!("undecided: [{}, {}]", report.lower, report.upper),
        }
        if !report.searched {
            eprintln!("note: ground set above the solver cap; window from known bounds and hdepth");
        }
    } else {
        emit(out.format(), &[], &[line], |_| Vec::new())?;
    }
    Ok(if report.exact().is_some() { 0 } else { EXIT_UNDECIDED })
}

fn cmd_bounds(input: &Input, out: &Output) -> CliResult {
    let family = input.family()?.ok_or("bounds needs --family")?;
    let bounds = family.bounds(input.kind()).map_err(|e| e.to_string())?;
    emit(out.format(), &["quantity", "window", "citation", "notes"], &bounds, |b: &BoundReport| {
        vec![b.quantity.clone(), b.window(), b.citation.clone(), b.notes.join("; ")]
    })
}

fn cmd_family(spec: &[String]) -> CliResult {
    let (name, args) = spec.split_first().ok_or("family needs a name")?;
    let family = Family::parse(name, args).map_err(|e| e.to_string())?;
    print!("{}", family.ideal().map_err(|e| e.to_string())?.to_text());
    Ok(0)
}

struct AuditArgs {
    grid: GridKind,
    max_total: Option<usize>,
    r: Option<usize>,
    max_block: Option<usize>,
    sdepth_max: Option<usize>,
}

fn audit_grids(a: &AuditArgs) -> Vec<AuditGrid> {
    let defaults = AuditGrid::defaults();
    let mut grids = Vec::new();
    for grid in defaults {
        let wanted = matches!(
            (a.grid, &grid),
            (GridKind::All, _)
                | (GridKind::Bipartite, AuditGrid::Bipartite { .. })
                | (GridKind::Multipartite, AuditGrid::Multipartite { .. })
                | (GridKind::PathAux, AuditGrid::PathAux { .. })
                | (GridKind::CycleAux, AuditGrid::CycleAux { .. })
        );
        if !wanted {
            continue;
        }
        grids.push(match grid {
            AuditGrid::Bipartite { max_total, sdepth_max } => AuditGrid::Bipartite {
                max_total: a.max_total.unwrap_or(max_total),
                sdepth_max: a.sdepth_max.unwrap_or(sdepth_max),
            },
            AuditGrid::Multipartite { r, max_block, max_total, sdepth_max } => {
                if a.r.is_some_and(|want| want != r) {
                    continue;
                }
                AuditGrid::Multipartite {
                    r,
                    max_block: a.max_block.unwrap_or(max_block),
                    max_total: a.max_total.unwrap_or(max_total),
                    sdepth_max: a.sdepth_max.unwrap_or(sdepth_max),
                }
            }
            AuditGrid::PathAux { max_sum } => AuditGrid::PathAux { max_sum: a.max_total.unwrap_or(max_sum) },
            AuditGrid::CycleAux { max_n } => AuditGrid::CycleAux { max_n: a.max_total.unwrap_or(max_n) },
        });
    }
    // an explicit r outside the default range still gets its grid
    if let Some(r) = a.r {
        let covered = grids.iter().any(|g| matches!(g, AuditGrid::Multipartite { r: have, .. } if *have == r));
        if !covered && matches!(a.grid, GridKind::All | GridKind::Multipartite) {
            grids.push(AuditGrid::Multipartite {
                r,
                max_block: a.max_block.unwrap_or(14),
                max_total: a.max_total.unwrap_or(14),
                sdepth_max: a.sdepth_max.unwrap_or(8),
            });
        }
    }
    grids
}

fn cmd_audit(a: &AuditArgs, only: Option<StatusFilter>, out: &Output) -> CliResult {
    let limits = Limits::from_env();
    let mut rows = Vec::new();
    for grid in audit_grids(a) {
        rows.extend(run_audit(&grid, &limits).map_err(|e| e.to_string())?);
    }
    let summary = AuditSummary::of(&rows);
    if let Some(filter) = only {
        rows.retain(|r| r.status == filter.status());
    }
    let format = out.format();
    write_rows(&rows, format, &mut io::stdout().lock()).map_err(|e| e.to_string())?;
    if format == OutputFormat::Table {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(if summary.violations > 0 { EXIT_VIOLATION } else { 0 })
}

fn cmd_scan(r: usize, max_block: usize, options: ScanOptions, out: &Output) -> CliResult {
    let limits = Limits::from_env();
    let records = scan_conjecture(r, max_block, options, &limits).map_err(|e| e.to_string())?;
    write_scan(&records, out.format(), &mut io::stdout().lock()).map_err(|e| e.to_string())?;
    let violated = records.iter().any(|rec| rec.status == Status::Violation);
    Ok(if violated { EXIT_VIOLATION } else { 0 })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Alpha { input, out } => cmd_alpha(&input, &out),
        Command::Beta { input, d, out } => cmd_beta(&input, d, &out),
        Command::Hdepth { input, show_beta, out } => cmd_hdepth(&input, show_beta, &out),
        Command::Sdepth { input, budget, memo, witness, out } => {
            cmd_sdepth(&input, budget, memo, witness.as_ref(), &out)
        }
        Command::Bounds { input, out } => cmd_bounds(&input, &out),
        Command::Family { spec } => cmd_family(&spec),
        Command::Audit { grid, max_total, r, max_block, sdepth_max, only, out } => {
            cmd_audit(&AuditArgs { grid, max_total, r, max_block, sdepth_max }, only, &out)
        }
        Command::Scan { r, max_block, with_sdepth, timing, out } => {
            cmd_scan(r, max_block, ScanOptions { with_sdepth, timing }, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
