//! Intersections of primes on disjoint blocks: alpha, beta, qdepth windows.

use squarefree_depth::closed_forms::{
    conjectured_ideal_qdepth, ideal_qdepth_guaranteed, multipartite_alpha, multipartite_beta,
    multipartite_ideal_bounds, multipartite_quotient_bounds, quotient_safe_range, quotient_upper_bound_binomial,
};
use squarefree_depth::hilbert::qdepth_of_pair;
use squarefree_depth::{ModuleKind, MultipartiteSpec, QuotientPair, SquarefreeIdeal};

fn main() -> squarefree_depth::Result<()> {
    let spec: MultipartiteSpec = std::env::args().nth(1).unwrap_or_else(|| "3,2,2".into()).parse()?;
    let n = spec.total();
    let ideal = SquarefreeIdeal::multipartite(&spec)?;

    for kind in [ModuleKind::Ideal, ModuleKind::Quotient] {
        let alpha: Vec<String> = (0..=n).map(|k| multipartite_alpha(&spec, k, kind).to_string()).collect();
        let q = qdepth_of_pair(&QuotientPair::of_kind(ideal.clone(), kind), 24)?;
        let beta: Vec<String> =
            (0..=q + 1).filter_map(|k| multipartite_beta(&spec, q + 1, k, kind).ok()).map(|b| b.to_string()).collect();
        println!("{kind:?}: alpha [{}], qdepth {q}, beta^{} [{}]", alpha.join(" "), q + 1, beta.join(" "));
    }

    let ib = multipartite_ideal_bounds(&spec);
    println!(
        "qdepth(I) window {} (floor((N+r)/2) = {}, {})",
        ib.window(),
        conjectured_ideal_qdepth(&spec),
        if ideal_qdepth_guaranteed(&spec) { "proven here" } else { "open here" }
    );
    println!("qdepth(S/I) window {}", multipartite_quotient_bounds(&spec).window());
    println!("binomial upper bound {}", quotient_upper_bound_binomial(&spec));
    println!("beta_r^d >= 0 up to d = {}", quotient_safe_range(&spec));
    Ok(())
}
