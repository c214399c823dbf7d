//! Analyses for a principal who picks the horizon or subsidises players:
//! which horizons can ever be worth paying for, who is central, and what a
//! subsidy buys.

use crate::error::{Error, Result};
use crate::game::{self, Context, StageGame};
use crate::set::PlayerSet;
use crate::sync::{check_horizon, Options, SyncSolver};

/// Horizons at which the least equilibrium outcome strictly grows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizonLedger {
    /// `(T, phi(T))` for every `T` with `phi(T)` strictly larger than
    /// `phi(T - 1)`, taking `phi(0)` to be empty.
    pub candidates: Vec<(usize, PlayerSet)>,
    /// `1 + floor(sqrt(2n + 9/4) - 3/2)`.
    pub bound: usize,
    /// Horizons optimal for some cost of stages: the candidates plus `T = 1`
    /// when it is not already one of them.
    pub optimal_count: usize,
}

/// `1 + floor(sqrt(2n + 9/4) - 3/2)`, computed exactly as `1 + k` for the
/// largest `k` with `k (k + 3) <= 2n`.
pub fn horizon_bound(n: usize) -> usize {
    let mut k = 0;
    while (k + 1) * (k + 4) <= 2 * n {
        k += 1;
    }
    1 + k
}

/// Every horizon worth paying for, with the ledger bound checked.
pub fn candidate_horizons(game: &StageGame, opts: Options) -> Result<HorizonLedger> {
    let n = game.n();
    let mut solver = SyncSolver::new(game, opts)?;
    let taus = solver.singleton_taus_in(Context::full(n))?;
    let mut values: Vec<u32> = taus.iter().flatten().copied().collect();
    values.sort_unstable();
    values.dedup();
    let candidates: Vec<(usize, PlayerSet)> = values
        .into_iter()
        .map(|t| {
            let set = (0..n)
                .filter(|&i| taus[i].is_some_and(|v| v <= t))
                .collect();
            (t as usize, set)
        })
        .collect();
    let bound = horizon_bound(n);
    let optimal_count = candidates.len() + usize::from(candidates.first().is_none_or(|c| c.0 != 1));
    if optimal_count > bound {
        return Err(Error::Internal(format!(
            "{optimal_count} optimal horizons exceed the bound {bound}"
        )));
    }
    Ok(HorizonLedger {
        candidates,
        bound,
        optimal_count,
    })
}

/// Players sharing a singleton horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityClass {
    /// `tau({i})` of the members; `None` when they never reliably join.
    pub tau: Option<u32>,
    pub players: PlayerSet,
}

/// Players grouped by `tau({i})`, most central (smallest horizon) first;
/// players who never reliably join come last.
pub fn weak_centrality(game: &StageGame, opts: Options) -> Result<Vec<CentralityClass>> {
    let mut solver = SyncSolver::new(game, opts)?;
    let taus = solver.singleton_taus_in(Context::full(game.n()))?;
    let mut keys: Vec<Option<u32>> = taus.clone();
    keys.sort_by_key(|v| (v.is_none(), *v));
    keys.dedup();
    Ok(keys
        .into_iter()
        .map(|tau| CentralityClass {
            tau,
            players: (0..game.n()).filter(|&i| taus[i] == tau).collect(),
        })
        .collect())
}

/// `m[i][j]` holds when `i` plays 1 in every Nash equilibrium where `j`
/// does.
pub fn strong_centrality(game: &StageGame) -> Vec<Vec<bool>> {
    let n = game.n();
    let ne = game::ne_set_unchecked(game, Context::full(n));
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ne.iter().all(|x| !x.contains(j) || x.contains(i)))
                .collect()
        })
        .collect()
}

/// Horizon bounds around subsidising one player: with `i` fixed at 1 the
/// rest needs `lower` stages, and the whole game needs `whole`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsidyBound {
    pub player: usize,
    pub lower: u32,
    pub whole: u32,
}

impl SubsidyBound {
    pub fn holds(&self) -> bool {
        self.lower <= self.whole && self.whole <= self.lower + 1
    }
}

/// For each player `i`, the horizon of everyone else once `i` is fixed at
/// 1 against the horizon of the whole game. Empty when the whole game has
/// no finite horizon.
pub fn single_subsidy_bounds(game: &StageGame, opts: Options) -> Result<Vec<SubsidyBound>> {
    let n = game.n();
    let mut solver = SyncSolver::new(game, opts)?;
    let Some(whole) = solver.tau_opt(PlayerSet::full(n))? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let rest = PlayerSet::full(n).without(i);
        let ctx = Context::new(rest, PlayerSet::singleton(i))?;
        let lower = solver.tau_in(ctx, rest)?.ok_or_else(|| {
            Error::Internal(format!(
                "subsidising player {} makes the others unreachable",
                i + 1
            ))
        })?;
        out.push(SubsidyBound {
            player: i,
            lower,
            whole,
        });
    }
    Ok(out)
}

/// Effect of fixing some players at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intervention {
    /// Unsubsidised players who play 1 in every equilibrium only thanks to
    /// the subsidy.
    pub gain: PlayerSet,
    pub baseline: PlayerSet,
    pub subsidised: PlayerSet,
    pub bounds: Vec<SubsidyBound>,
}

/// Marginal gain of subsidising `subsidized` at horizon `t`, with the
/// single-subsidy horizon bounds verified.
pub fn intervention(
    game: &StageGame,
    subsidized: PlayerSet,
    t: usize,
    opts: Options,
) -> Result<Intervention> {
    check_horizon(t)?;
    let n = game.n();
    if !subsidized.is_subset(PlayerSet::full(n)) {
        return Err(Error::Argument(format!(
            "subsidised set {subsidized} has unknown players"
        )));
    }
    let mut solver = SyncSolver::new(game, opts)?;
    let baseline = solver.phi(t)?;
    let ctx = Context::new(PlayerSet::full(n).difference(subsidized), subsidized)?;
    let with_subsidy = solver.phi_in(ctx, t)?;
    let bounds = single_subsidy_bounds(game, opts)?;
    if let Some(b) = bounds.iter().find(|b| !b.holds()) {
        return Err(Error::Internal(format!(
            "subsidising player {} gives horizon {} against {} for the whole game",
            b.player + 1,
            b.lower,
            b.whole
        )));
    }
    Ok(Intervention {
        gain: with_subsidy.difference(baseline),
        baseline,
        subsidised: with_subsidy,
        bounds,
    })
}
