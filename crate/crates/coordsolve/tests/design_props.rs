mod common;

use common::{build, game_params};
use coordsolve::design::{
    candidate_horizons, horizon_bound, single_subsidy_bounds, strong_centrality, weak_centrality,
};
use coordsolve::sync::{Options, SyncSolver};
use coordsolve::PlayerSet;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ledger_respects_bound(p in game_params(1, 8)) {
        let g = build(p);
        let l = candidate_horizons(&g, Options::default()).unwrap();
        prop_assert!(l.optimal_count <= horizon_bound(g.n()));
        prop_assert!(l.candidates.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1.is_subset(w[1].1) && w[0].1 != w[1].1));
    }

    #[test]
    fn strong_centrality_implies_weak(p in game_params(1, 6)) {
        let g = build(p);
        let m = strong_centrality(&g);
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        let taus: Vec<Option<u32>> = (0..g.n()).map(|i| s.tau_opt(PlayerSet::singleton(i)).unwrap()).collect();
        for i in 0..g.n() {
            for j in 0..g.n() {
                if m[i][j] {
                    match (taus[i], taus[j]) {
                        (Some(a), Some(b)) => prop_assert!(a <= b),
                        (None, Some(_)) => prop_assert!(false, "{} central to {} yet never joins", i + 1, j + 1),
                        _ => {}
                    }
                }
            }
        }
        let classes = weak_centrality(&g, Options::default()).unwrap();
        let covered = classes.iter().fold(PlayerSet::EMPTY, |acc, c| acc.union(c.players));
        prop_assert_eq!(covered, g.players());
    }

    #[test]
    fn single_subsidies_save_at_most_one_stage(p in game_params(1, 6)) {
        let g = build(p);
        for b in single_subsidy_bounds(&g, Options::default()).unwrap() {
            prop_assert!(b.holds(), "{:?}", b);
        }
    }
}
