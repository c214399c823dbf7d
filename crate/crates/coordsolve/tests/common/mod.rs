//! Shared helpers for the property suites.
#![allow(dead_code)]

use coordsolve::random::{random_game, stream, GameSpec};
use coordsolve::{PlayerSet, StageGame};
use proptest::prelude::*;

/// Seed, player count and degeneracy for a random assumption-satisfying game.
pub fn game_params(lo: usize, hi: usize) -> impl Strategy<Value = (u64, usize, bool)> {
    (any::<u64>(), lo..=hi, any::<bool>())
}

pub fn build((seed, n, nondegenerate): (u64, usize, bool)) -> StageGame {
    let spec = GameSpec {
        nondegenerate,
        ..GameSpec::new(n)
    };
    random_game(&mut stream(seed, 0), spec)
}

pub fn set(xs: &[usize]) -> PlayerSet {
    PlayerSet::from_indices(xs.iter().map(|x| x - 1))
}

pub fn sorted(mut v: Vec<PlayerSet>) -> Vec<PlayerSet> {
    v.sort_by_key(|x| x.bits());
    v
}
