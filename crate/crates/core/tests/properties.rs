mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treepack::format::{parse_graph, write_graph};
use treepack::graph::Mode;
use treepack::ktree::pack_ktrees;
use treepack::lambda::pack_lambda;
use treepack::oracle::{oracle_lambda_k, oracle_tau, OracleLimits};
use treepack::packing::verify_packing;

#[test]
fn exhaustive_corpus_matches_known_counts() {
    // connected graphs with all degrees 2 or 3
    assert_eq!(common::all_subcubic(6).len(), 11);
    assert_eq!(common::all_subcubic(7).len(), 21);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subcubic_packings_meet_quarter_bound(seed in any::<u64>(), n in 6usize..40, p in 0.0f64..1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 2, 3, p);
        let r = pack_lambda(&g, 3).unwrap();
        prop_assert!(verify_packing(&g, &r.packing).is_ok());
        prop_assert!(r.certificate.satisfied, "{}", r.certificate);
        // replaying the trace leaves exactly the directly packed components
        let rest = r.trace.replay(&g).unwrap();
        prop_assert_eq!(rest.vertex_set(), r.trace.base_vertices());
    }

    #[test]
    fn five_leaf_graphs_meet_quarter_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::five_leaf_graph(&mut rng);
        let r = pack_lambda(&g, 3).unwrap();
        prop_assert!(verify_packing(&g, &r.packing).is_ok());
        prop_assert!(r.certificate.satisfied, "{}", r.certificate);
        if g.vertex_count() <= 16 {
            let best = oracle_lambda_k(&g, 2, &OracleLimits::default()).unwrap().0;
            prop_assert!(r.packing.size() <= best);
        }
    }

    #[test]
    fn ktree_packings_meet_bound(seed in any::<u64>(), n in 2usize..60, s in 3usize..6, k in 1usize..5, extra in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_sparse(&mut rng, n, s, extra);
        prop_assume!(g.vertex_count() != k);
        let (packing, cert) = pack_ktrees(&g, k, s).unwrap();
        prop_assert!(verify_packing(&g, &packing).is_ok());
        prop_assert!(cert.satisfied, "{}", cert);
        if n <= 12 {
            let best = oracle_tau(&g, k, &OracleLimits::default()).unwrap().0;
            prop_assert!(packing.size() <= best);
        }
    }

    #[test]
    fn graph_text_round_trips(seed in any::<u64>(), n in 3usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 2, 4, 0.5);
        let text = write_graph(&g, &[]);
        let back = parse_graph(&text, Mode::Simple).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }
}
