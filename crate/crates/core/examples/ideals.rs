//! Building squarefree ideals, the text format, and the region P_{J/I}.

use squarefree_depth::ideal::monomial_string;
use squarefree_depth::{MultipartiteSpec, QuotientPair, SquarefreeIdeal};

fn main() -> squarefree_depth::Result<()> {
    let spec: MultipartiteSpec = "2,1,1".parse()?;
    let ideal = SquarefreeIdeal::multipartite(&spec)?;
    println!("intersection of primes on blocks {spec}:");
    print!("{}", ideal.to_text());

    let parsed = SquarefreeIdeal::parse_text("n 3\n1 2\n2 3\n")?;
    println!("parsed generators: {:?}", parsed.generator_masks().iter().map(|&m| monomial_string(m)).collect::<Vec<_>>());

    let quotient = QuotientPair::quotient(ideal.clone());
    let region: Vec<String> = quotient.region(24)?.into_iter().map(monomial_string).collect();
    println!("P for S/I: {}", region.join(" "));
    println!("alpha(I)   = {:?}", QuotientPair::ideal(ideal).alpha_vector(24)?.counts());
    println!("alpha(S/I) = {:?}", quotient.alpha_vector(24)?.counts());
    Ok(())
}
