mod common;

use common::build;
use coordsolve::game::iesds;
use coordsolve::oracle::{enumerate_equilibria, support_strategy, Mode, OracleOptions, Schedule};
use coordsolve::sync::Options;
use coordsolve::{catalog, Context, Payoff, PlayerSet};
use proptest::prelude::*;

fn run(g: &coordsolve::StageGame, t: usize, mode: Mode, no_pledge: bool) -> Vec<PlayerSet> {
    let o = OracleOptions {
        no_pledge,
        ..OracleOptions::default()
    };
    enumerate_equilibria(g, &Schedule::Sync(t), mode, o)
        .unwrap()
        .outcomes
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn monotone_outcomes_are_subgame_perfect(seed in any::<u64>(), n in 1usize..=3, t in 1usize..=2, nd in any::<bool>()) {
        let g = build((seed, n, nd));
        let spne = run(&g, t, Mode::Spne, false);
        let mspne = run(&g, t, Mode::Mspne, false);
        prop_assert!(mspne.iter().all(|x| spne.contains(x)));
        let (lo, hi) = iesds(&g, Context::full(n)).unwrap();
        prop_assert!(spne.iter().all(|x| lo.is_subset(*x) && x.is_subset(hi)));
    }

    #[test]
    fn monotone_outcomes_shrink(seed in any::<u64>(), n in 1usize..=3, nd in any::<bool>()) {
        let g = build((seed, n, nd));
        let mut prev = run(&g, 1, Mode::Mspne, false);
        for t in 2..=3 {
            let cur = run(&g, t, Mode::Mspne, false);
            prop_assert!(cur.iter().all(|x| prev.contains(x)));
            prev = cur;
        }
    }

    #[test]
    fn late_pledges_suffice(seed in any::<u64>(), n in 1usize..=3, t in 1usize..=3, nd in any::<bool>()) {
        let g = build((seed, n, nd));
        prop_assert_eq!(run(&g, t, Mode::Mspne, false), run(&g, t, Mode::Mspne, true));
    }

    #[test]
    fn every_outcome_has_a_verified_profile(seed in any::<u64>(), n in 1usize..=4, t in 1usize..=3) {
        let g = build((seed, n, true));
        for x in coordsolve::sync::outcomes(&g, t).unwrap() {
            let s = support_strategy(&g, t, x, Options::default(), OracleOptions::default()).unwrap();
            prop_assert_eq!(s.outcome(), x);
        }
    }
}

#[test]
fn spillover_removes_the_triangle_outcome() {
    let o = OracleOptions::default();
    let set = |xs: &[usize]| PlayerSet::from_indices(xs.iter().map(|x| x - 1));
    let base = catalog::spillover_game(Payoff::from_integer(0));
    let r = enumerate_equilibria(&base, &Schedule::Sync(3), Mode::Spne, o).unwrap();
    assert_eq!(r.outcomes, vec![set(&[1, 2, 3]), PlayerSet::full(5)]);
    let perturbed = catalog::spillover_game(Payoff::new(1, 2));
    let r = enumerate_equilibria(&perturbed, &Schedule::Sync(3), Mode::Spne, o).unwrap();
    assert_eq!(r.outcomes, vec![PlayerSet::full(5)]);
}
