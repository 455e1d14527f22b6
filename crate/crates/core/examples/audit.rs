//! Runs the claim audit on small grids and prints the rows that are not `ok`.

use squarefree_depth::experiments::{run_audit, write_rows, AuditGrid, AuditSummary, OutputFormat, Status};
use squarefree_depth::Limits;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::from_env();
    let grids = [
        AuditGrid::Bipartite { max_total: 8, sdepth_max: 8 },
        AuditGrid::Multipartite { r: 3, max_block: 3, max_total: 9, sdepth_max: 7 },
        AuditGrid::PathAux { max_sum: 8 },
        AuditGrid::CycleAux { max_n: 9 },
    ];
    for grid in grids {
        let rows = run_audit(&grid, &limits)?;
        let summary = AuditSummary::of(&rows);
        let notable: Vec<_> = rows.into_iter().filter(|r| r.status != Status::Ok && r.status != Status::Match).collect();
        println!("{grid:?}: {summary}");
        write_rows(&notable, OutputFormat::Table, &mut std::io::stdout().lock())?;
        println!();
    }
    Ok(())
}
