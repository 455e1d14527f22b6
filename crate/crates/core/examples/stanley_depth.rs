//! Interval-partition search: exact sdepth with a checked witness.

use squarefree_depth::stanley::{exists_partition, sdepth_exact, verify_partition, PartitionSearch, SolverConfig};
use squarefree_depth::{MultipartiteSpec, QuotientPair, SquarefreeIdeal};

fn main() -> squarefree_depth::Result<()> {
    let config = SolverConfig::default();
    for n in 2..=7 {
        let pair = QuotientPair::ideal(SquarefreeIdeal::maximal(n)?);
        let result = sdepth_exact(&pair, &config)?;
        println!("maximal({n}): sdepth {} hdepth {} ({} nodes)", result.lower, result.hdepth, result.nodes);
    }

    let pair = QuotientPair::ideal(SquarefreeIdeal::bipartite(2, 2)?);
    let result = sdepth_exact(&pair, &config)?;
    println!("\n{pair}: sdepth {:?}", result.exact());
    print!("{}", result.witness);
    assert!(verify_partition(&pair, &result.witness, result.lower, 24)?);

    // S/I for blocks (3,1): the complement of the big block is maximal in P
    let spec: MultipartiteSpec = "3,1".parse()?;
    let pair = QuotientPair::quotient(SquarefreeIdeal::multipartite(&spec)?);
    for d in 0..=3 {
        let verdict = match exists_partition(&pair, d, &config)?.result {
            PartitionSearch::Found(_) => "partition found",
            PartitionSearch::Infeasible => "none exists",
            PartitionSearch::Undecided => "budget exhausted",
        };
        println!("{pair}, d = {d}: {verdict}");
    }
    Ok(())
}
