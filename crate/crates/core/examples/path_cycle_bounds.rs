//! Bounds for powers of path ideals of paths and cycles, and the auxiliary
//! squarefree ideals behind them.

use squarefree_depth::closed_forms::{
    cycle_power_bound_report, cycle_t0, depth_phi, path_aux_upper, path_power_sdepth_upper,
};
use squarefree_depth::hilbert::qdepth_of_pair;
use squarefree_depth::{QuotientPair, SquarefreeIdeal};

fn main() -> squarefree_depth::Result<()> {
    println!("path of length 7, m = 2:");
    for t in 1..=6 {
        println!("  t={t}: depth {} sdepth <= {}", depth_phi(7, 2, t)?, path_power_sdepth_upper(7, 2, t)?);
    }
    for (n, m) in [(5, 2), (6, 4), (9, 6)] {
        let report = cycle_power_bound_report(n, m)?;
        println!("cycle n={n} m={m}: t0 = {:?}, sdepth <= {}", cycle_t0(n, m)?, report.window());
    }
    println!("U_(m,t): qdepth against m + floor(t/2)");
    for (m, t) in [(2, 2), (2, 5), (3, 4), (4, 6)] {
        let q = qdepth_of_pair(&QuotientPair::ideal(SquarefreeIdeal::path_aux(m, t)?), 24)?;
        println!("  m={m} t={t}: {q} <= {}", path_aux_upper(m, t));
    }
    Ok(())
}
