mod common;

use common::{build, game_params, sorted};
use coordsolve::game::ne_set;
use coordsolve::oracle::{enumerate_equilibria, Mode, OracleOptions, Schedule};
use coordsolve::random::{random_digraph, stream};
use coordsolve::sync::{Family, Options, SyncSolver};
use coordsolve::{Context, Digraph, PlayerSet, StageGame};
use proptest::prelude::*;
use rand::Rng;

/// Greatest equilibrium contained in `x`.
fn meet(ne: &[PlayerSet], x: PlayerSet) -> PlayerSet {
    ne.iter()
        .copied()
        .filter(|z| z.is_subset(x))
        .max_by_key(|z| z.len())
        .expect("the empty profile is below every equilibrium")
}

/// A digraph where every vertex has at least one in-neighbour.
fn fed_digraph(seed: u64, n: usize, q: f64) -> Digraph {
    let mut rng = stream(seed, 1);
    let g = random_digraph(&mut rng, n, q);
    let mut edges = g.edges();
    for i in 0..n {
        if g.in_neighbors(i).is_empty() {
            let j = (i + rng.gen_range(1..n)) % n;
            edges.push((j, i));
        }
    }
    Digraph::new(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn outcome_sets_shrink_with_horizon(p in game_params(1, 5)) {
        let g = build(p);
        let ne = ne_set(&g, Context::full(g.n())).unwrap();
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        let mut prev = s.outcomes(1).unwrap();
        prop_assert_eq!(sorted(prev.clone()), sorted(ne.clone()));
        for t in 2..=5 {
            let cur = s.outcomes(t).unwrap();
            prop_assert!(cur.iter().all(|x| prev.contains(x)));
            prev = cur;
        }
    }

    #[test]
    fn outcomes_are_closed_under_meet(p in game_params(1, 5), t in 1usize..=4) {
        let g = build(p);
        let ne = ne_set(&g, Context::full(g.n())).unwrap();
        let out = SyncSolver::new(&g, Options::default()).unwrap().outcomes(t).unwrap();
        for &x in &out {
            for &y in &out {
                prop_assert!(out.contains(&meet(&ne, x.intersection(y))));
            }
        }
    }

    #[test]
    fn least_outcome_is_phi(p in game_params(1, 6), t in 1usize..=5) {
        let g = build(p);
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        let phi = s.phi(t).unwrap();
        let out = s.outcomes(t).unwrap();
        prop_assert!(out.contains(&phi));
        prop_assert!(out.iter().all(|x| phi.is_subset(*x)));
    }

    #[test]
    fn lower_thresholds_raise_phi(seed in any::<u64>(), n in 2usize..=6, t in 1usize..=4) {
        let d = fed_digraph(seed, n, 0.5);
        let mut rng = stream(seed, 2);
        let k: Vec<usize> = (0..n).map(|i| rng.gen_range(1..=d.in_neighbors(i).len())).collect();
        let lower: Vec<usize> = k.iter().map(|&ki| rng.gen_range(1..=ki)).collect();
        let high = StageGame::threshold(d.clone(), k).unwrap();
        let low = StageGame::threshold(d, lower).unwrap();
        let a = coordsolve::sync::phi(&high, t).unwrap();
        let b = coordsolve::sync::phi(&low, t).unwrap();
        prop_assert!(a.is_subset(b), "{} not within {}", a, b);
    }

    #[test]
    fn sss_and_sse_families_agree(p in game_params(1, 6)) {
        let g = build(p);
        let sss = Options { family: Family::Sss, ..Options::default() };
        let mut a = SyncSolver::new(&g, Options::default()).unwrap();
        let mut b = SyncSolver::new(&g, sss).unwrap();
        let n = g.n();
        for x in (0..n).map(PlayerSet::singleton).chain([PlayerSet::full(n)]) {
            prop_assert_eq!(a.tau_opt(x).unwrap(), b.tau_opt(x).unwrap());
        }
    }

    #[test]
    fn tau_is_monotone_in_the_target(p in game_params(1, 5), a in any::<u32>(), b in any::<u32>()) {
        let g = build(p);
        let n = g.n();
        let x = PlayerSet::from_indices((0..n).filter(|i| a >> i & 1 == 1));
        let y = x.union(PlayerSet::from_indices((0..n).filter(|i| b >> i & 1 == 1)));
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        match (s.tau_opt(x).unwrap(), s.tau_opt(y).unwrap()) {
            (Some(tx), Some(ty)) => prop_assert!(tx <= ty),
            (None, Some(_)) => prop_assert!(false, "smaller target unreachable"),
            _ => {}
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn degenerate_games_match_enumeration(seed in any::<u64>(), n in 1usize..=3, t in 1usize..=3) {
        let g = build((seed, n, false));
        let fast = sorted(coordsolve::sync::outcomes(&g, t).unwrap());
        let slow = enumerate_equilibria(&g, &Schedule::Sync(t), Mode::Mspne, OracleOptions::default())
            .unwrap()
            .outcomes;
        prop_assert_eq!(fast, slow);
    }
}
