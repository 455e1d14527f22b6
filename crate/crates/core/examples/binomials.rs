//! The two binomial conventions and the folded alternating sum.

use squarefree_depth::{binom_gen, binom_nat, vandermonde_fold};

fn main() {
    println!("C(6, 2) = {}", binom_nat(6, 2));
    println!("C(3, 5) = {} (counting binomial vanishes)", binom_nat(3, 5));
    println!("binom_gen(-3, 2) = {} (polynomial binomial)", binom_gen(-3, 2));

    // sum_j (-1)^{k-j} C(d-j, k-j) C(n, j) collapses to one generalized binomial
    for (n, d, k) in [(2, 3, 1), (5, 4, 2), (3, 6, 4)] {
        let fold = vandermonde_fold(n, d, k);
        let closed = binom_gen(n as i64 - d as i64 + k as i64 - 1, k);
        println!("n={n} d={d} k={k}: fold {fold}, closed {closed}");
    }
}
