#[path = "support/naive.rs"]
mod naive;
#[path = "support/pairs.rs"]
mod pairs;

use naive::NaiveRegion;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use squarefree_depth::ideal::{MultipartiteSpec, QuotientPair, SquarefreeIdeal};
use squarefree_depth::stanley::{exists_partition, sdepth_exact, verify_partition, PartitionSearch, SolverConfig};

fn naive_of(pair: &QuotientPair) -> NaiveRegion {
    NaiveRegion::new(
        pair.ground_size(),
        pair.upper().generator_masks(),
        pair.lower().generator_masks(),
    )
}

fn assert_agrees(pair: &QuotientPair, config: &SolverConfig) {
    let oracle = naive_of(pair);
    assert_eq!(oracle.elements(), pair.region(24).unwrap(), "{pair}");
    let mut previous = true;
    for d in 0..=pair.ground_size() + 1 {
        let outcome = exists_partition(pair, d, config).unwrap();
        let found = match &outcome.result {
            PartitionSearch::Found(w) => {
                assert!(verify_partition(pair, w, d, 24).unwrap());
                true
            }
            PartitionSearch::Infeasible => false,
            PartitionSearch::Undecided => panic!("budget ran out on {pair} at d={d}"),
        };
        assert_eq!(found, oracle.partition_exists(d), "{pair} d={d}");
        // monotone in d
        assert!(previous || !found, "{pair} d={d}");
        previous = found;
    }
}

#[test]
fn random_pairs_up_to_five_variables() {
    let mut rng = StdRng::seed_from_u64(7);
    let config = SolverConfig::default();
    for _ in 0..400 {
        let ground = rng.gen_range(1..=5);
        let pair = pairs::random_pair(&mut rng, ground);
        assert_agrees(&pair, &config);
    }
}

#[test]
fn random_pairs_six_variables_with_memo() {
    let mut rng = StdRng::seed_from_u64(11);
    let config = SolverConfig::default().with_memo(true);
    for _ in 0..60 {
        let pair = pairs::random_pair(&mut rng, 6);
        assert_agrees(&pair, &config);
    }
}

#[test]
fn structured_pairs_match_naive_depth() {
    let config = SolverConfig::default();
    let mut ideals = Vec::new();
    for n in 1..=6 {
        ideals.push(SquarefreeIdeal::maximal(n).unwrap());
    }
    for r in 1..=3 {
        for spec in MultipartiteSpec::grid(r, 4) {
            // naive search on six-variable quotients can take a minute
            if spec.total() <= 5 {
                ideals.push(SquarefreeIdeal::multipartite(&spec).unwrap());
            }
        }
    }
    for ideal in ideals {
        for pair in [QuotientPair::ideal(ideal.clone()), QuotientPair::quotient(ideal)] {
            let result = sdepth_exact(&pair, &config).unwrap();
            assert_eq!(result.exact(), naive_of(&pair).sdepth(), "{pair}");
            assert!(result.lower <= result.hdepth);
        }
    }
}
