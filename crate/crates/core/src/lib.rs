//! Exact Hilbert depth and Stanley depth for squarefree monomial ideals.
//!
//! A squarefree monomial ideal `I ⊆ K[x_1, …, x_n]` is identified with the
//! up-closed family of subsets `C ⊆ [n]` whose monomial `x_C` lies in `I`.
//! For squarefree ideals `I ⊆ J` the module `J/I` is described completely by
//! the convex region `P_{J/I} = {C : x_C ∈ J \ I}` of the Boolean lattice, and
//! both depth invariants become finite combinatorial questions about it:
//!
//! * **Hilbert depth** is read off the rank counts `α_k` of the region through
//!   the signed binomial transform `β_k^d` ([`hilbert`]).
//! * **Stanley depth** is the best minimum top size over partitions of the
//!   region into disjoint intervals `[C, D]` ([`stanley`]).
//!
//! The crate also carries closed forms and bounds for the intersection
//! ideals `(x_1..x_{n_1}) ∩ (x_{n_1+1}..) ∩ …` and the auxiliary ideals that
//! arise from powers of path and cycle ideals ([`closed_forms`]), and grid
//! drivers that cross-check all of them against enumeration
//! ([`experiments`]).
//!
//! ```
//! use squarefree_depth::{ideal::{QuotientPair, SquarefreeIdeal}, hilbert};
//!
//! let edge = SquarefreeIdeal::bipartite(2, 2).unwrap();
//! let alpha = QuotientPair::ideal(edge).alpha_vector(24).unwrap();
//! assert_eq!(alpha.to_string(), "[0, 0, 4, 4, 1]");
//! assert_eq!(hilbert::hdepth(&alpha).unwrap(), 3);
//! ```

pub mod closed_forms;
pub mod combinatorics;
pub mod config;
pub mod error;
pub mod experiments;
pub mod hilbert;
pub mod ideal;
pub mod stanley;

pub use combinatorics::{binom_gen, binom_nat, vandermonde_fold, ExactInt};
pub use config::Limits;
pub use error::{Error, Result};
pub use ideal::{AlphaVector, ModuleKind, MultipartiteSpec, QuotientPair, SquarefreeIdeal, VarSet};
