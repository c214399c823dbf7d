mod common;

use common::build;
use coordsolve::game::is_ne;
use coordsolve::graphical::{
    is_sufficient, reduce_to_weakest_link, tau_via_graphs, tau_weakest_link,
};
use coordsolve::random::{random_digraph, stream};
use coordsolve::sync::{Options, SyncSolver};
use coordsolve::{Context, Digraph, Error, PlayerSet, StageGame};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_preserves_every_horizon(seed in any::<u64>(), n in 2usize..=5) {
        let g = build((seed, n, true));
        let r = reduce_to_weakest_link(&g, Options::default()).unwrap();
        prop_assert!(is_sufficient(&g, &r.graph, g.players()));
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        for x in g.players().subsets() {
            prop_assert_eq!(s.tau(x).unwrap(), tau_weakest_link(&r.graph, x), "target {}", x);
        }
    }

    #[test]
    fn sufficient_graphs_bound_the_horizon(seed in any::<u64>(), n in 2usize..=5) {
        let g = build((seed, n, true));
        let r = reduce_to_weakest_link(&g, Options::default()).unwrap();
        let mut rng = stream(seed, 3);
        let mut edges = r.graph.edges();
        for i in 0..n {
            for j in 0..n {
                if i != j && rng.gen_bool(0.3) {
                    edges.push((i, j));
                }
            }
        }
        let bigger = Digraph::new(n, &edges).unwrap();
        prop_assert!(is_sufficient(&g, &bigger, g.players()));
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        for x in g.players().subsets() {
            let tau = s.tau(x).unwrap();
            prop_assert!(tau <= tau_weakest_link(&bigger, x));
            match tau_via_graphs(&g, x, Options::default()) {
                Ok(v) => prop_assert_eq!(v, tau),
                Err(Error::Resource { .. }) => {}
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }

    #[test]
    fn weakest_link_equilibria_are_closed_sets(seed in any::<u64>(), n in 1usize..=7, q in 0.05f64..0.9) {
        let d = random_digraph(&mut stream(seed, 0), n, q);
        let g = StageGame::weakest_link(d.clone()).unwrap();
        let ctx = Context::full(n);
        for x in PlayerSet::full(n).subsets() {
            let closed = (0..n).all(|i| x.contains(i) == d.in_neighbors(i).is_subset(x));
            prop_assert_eq!(is_ne(&g, ctx, x), closed, "profile {}", x);
        }
    }
}
