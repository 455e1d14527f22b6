//! Complete bipartite edge ideals: closed forms against enumeration.

use squarefree_depth::closed_forms::{
    bipartite_alpha, bipartite_hdepth_ideal, bipartite_qdepth_quotient, bipartite_qdepth_quotient_upper,
    bipartite_sdepth_bounds, BipartiteParams,
};
use squarefree_depth::hilbert::qdepth_of_pair;
use squarefree_depth::{ModuleKind, QuotientPair, SquarefreeIdeal};

fn main() -> squarefree_depth::Result<()> {
    println!("n m | qdepth(I) formula enum | qdepth(S/I) formula enum sqrt-bound");
    for p in BipartiteParams::grid(9) {
        let ideal = SquarefreeIdeal::bipartite(p.n(), p.m())?;
        let qi = qdepth_of_pair(&QuotientPair::ideal(ideal.clone()), 24)?;
        let qq = qdepth_of_pair(&QuotientPair::quotient(ideal), 24)?;
        let formula = bipartite_qdepth_quotient(p).map_or("-".to_string(), |v| v.to_string());
        println!(
            "{} {} | {:>2} {:>2} | {:>2} {:>2} {:>2}",
            p.n(),
            p.m(),
            bipartite_hdepth_ideal(p),
            qi,
            formula,
            qq,
            bipartite_qdepth_quotient_upper(p)
        );
    }
    let p = BipartiteParams::new(3, 2)?;
    let alpha: Vec<String> = (0..=5).map(|k| bipartite_alpha(p, k, ModuleKind::Ideal).to_string()).collect();
    println!("alpha(I_(3,2)) = [{}]", alpha.join(", "));
    let (quotient, ideal) = bipartite_sdepth_bounds(p);
    println!("sdepth windows: S/I {}, I {}", quotient.window(), ideal.window());
    Ok(())
}
