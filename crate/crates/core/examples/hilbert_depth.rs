//! Beta rows, the Hilbert depth, and the failing entry that certifies it.

use squarefree_depth::hilbert::{alpha_from_beta, beta_row, hdepth_certificate, BetaTable};
use squarefree_depth::{QuotientPair, SquarefreeIdeal};

fn main() -> squarefree_depth::Result<()> {
    let pair = QuotientPair::ideal(SquarefreeIdeal::bipartite(2, 2)?);
    let alpha = pair.alpha_vector(24)?;
    println!("{pair}: alpha = {:?}", alpha.counts());

    let table = BetaTable::from_alpha(&alpha);
    for (d, row) in table.rows().enumerate() {
        let cells: Vec<String> = row.iter().map(|b| b.to_string()).collect();
        println!("  beta^{d}: {}", cells.join(" "));
    }

    let cert = hdepth_certificate(&alpha)?;
    println!("hdepth = {}", cert.depth);
    if let Some(e) = cert.failing {
        println!("row {} fails at k = {}: {}", e.d, e.k, e.value);
    }

    // the inverse transform recovers alpha_0..alpha_d
    let row = beta_row(&alpha, 3);
    println!("alpha from beta^3: {:?}", alpha_from_beta(&row));
    Ok(())
}
