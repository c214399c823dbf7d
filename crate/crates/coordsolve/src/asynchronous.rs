//! Asynchronous schedules: players are split into ordered cells, each cell
//! moves once after observing every earlier cell.
//!
//! Backward elimination of extensively dominated strategies yields the
//! least equilibrium path; the best schedule for a horizon `T` achieves
//! exactly `phi(T)` of the synchronous game and is read off a tree-depth
//! decomposition of the equivalent weakest-link graph.

use std::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::exec;
use crate::game::{Context, Payoff, StageGame};
use crate::graphical;
use crate::set::PlayerSet;
use crate::sync::{check_horizon, Options, SyncSolver};

/// Ordered move schedule: disjoint cells covering every player. Empty
/// cells may only appear as trailing padding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    cells: Vec<PlayerSet>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<PlayerSet>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Argument("a schedule needs at least one cell".into()));
        }
        let all = PlayerSet::full(n);
        let mut seen = PlayerSet::EMPTY;
        let mut padding = false;
        for (t, c) in cells.iter().enumerate() {
            if !c.is_subset(all) {
                return Err(Error::Argument(format!(
                    "cell {} contains players outside 1..={n}",
                    t + 1
                )));
            }
            if !c.is_disjoint(seen) {
                return Err(Error::Argument(format!(
                    "players {} appear in more than one cell",
                    c.intersection(seen)
                )));
            }
            if c.is_empty() {
                padding = true;
            } else if padding {
                return Err(Error::Argument(format!(
                    "cell {} follows an empty cell; empty cells are only allowed at the end",
                    t + 1
                )));
            }
            seen = seen.union(*c);
        }
        if seen != all {
            return Err(Error::Argument(format!(
                "players {} are not scheduled",
                all.difference(seen)
            )));
        }
        Ok(Partition { n, cells })
    }

    /// Everyone moves at once.
    pub fn single(n: usize) -> Self {
        Partition {
            n,
            cells: vec![PlayerSet::full(n)],
        }
    }

    /// One player per cell in index order.
    pub fn sequential(n: usize) -> Self {
        Partition {
            n,
            cells: (0..n).map(PlayerSet::singleton).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[PlayerSet] {
        &self.cells
    }

    /// Number of cells, padding included.
    pub fn horizon(&self) -> usize {
        self.cells.len()
    }

    /// Union of the cells before `t` (0-based).
    pub fn prior(&self, t: usize) -> PlayerSet {
        self.cells[..t]
            .iter()
            .fold(PlayerSet::EMPTY, |acc, c| acc.union(*c))
    }

    /// Cell index of each player.
    pub fn cell_of(&self, i: usize) -> Option<usize> {
        self.cells.iter().position(|c| c.contains(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.cells.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Least surviving cell responses for every history, plus the resulting
/// path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IesedsTable {
    pub partition: Partition,
    /// `stages[t][h]`: least surviving action set of cell `t` after the
    /// earlier cells played `h`, indexed by `h.compress(prior(t))`.
    pub stages: Vec<Vec<PlayerSet>>,
    /// Action-1 set on the least path.
    pub outcome: PlayerSet,
}

impl IesedsTable {
    /// Response of cell `t` to the earlier cells' actions `history`.
    pub fn response(&self, t: usize, history: PlayerSet) -> PlayerSet {
        let prior = self.partition.prior(t);
        self.stages[t][history.intersection(prior).compress(prior)]
    }

    /// Replays the least path from the table.
    pub fn replay(&self) -> PlayerSet {
        let mut h = PlayerSet::EMPTY;
        for t in 0..self.partition.horizon() {
            h = h.union(self.response(t, h));
        }
        h
    }
}

/// Iterated strict dominance in a binary-action game on `players` with an
/// arbitrary payoff function of the action-1 set; dominance is tested
/// against every surviving opponent profile. Returns the least and the
/// greatest surviving profiles.
pub(crate) fn iesds_generic<F>(players: PlayerSet, payoff: F) -> (PlayerSet, PlayerSet)
where
    F: Fn(usize, PlayerSet) -> Payoff,
{
    let mut can0 = players;
    let mut can1 = players;
    loop {
        let mut changed = false;
        for i in players.iter() {
            if !(can0.contains(i) && can1.contains(i)) {
                continue;
            }
            let fixed1 = can1.difference(can0);
            let free = can0.intersection(can1).without(i);
            let diff = |f: PlayerSet| {
                let base = fixed1.union(f);
                (payoff(i, base.with(i)), payoff(i, base))
            };
            if free.subsets().all(|f| {
                let (one, zero) = diff(f);
                one > zero
            }) {
                can0 = can0.without(i);
                changed = true;
            } else if free.subsets().all(|f| {
                let (one, zero) = diff(f);
                zero > one
            }) {
                can1 = can1.without(i);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (players.difference(can0), can1)
}

/// Backward elimination on the schedule `p`: for each stage and each
/// history, the cell plays the least profile surviving iterated strict
/// dominance of its continuation game.
pub fn ieseds(game: &StageGame, p: &Partition, opts: Options) -> Result<IesedsTable> {
    if p.n() != game.n() {
        return Err(Error::Argument(format!(
            "schedule covers {} players, game has {}",
            p.n(),
            game.n()
        )));
    }
    if opts.enforce_assumptions {
        game.require_assumptions()?;
    }
    let horizon = p.horizon();
    let mut cost: u128 = 0;
    for t in 0..horizon {
        cost += (1u128 << p.prior(t).len()) * p.cells()[t].len() as u128;
    }
    if cost > u128::from(opts.budget) {
        return Err(Error::resource(
            "extensive-form histories",
            cost,
            opts.budget,
        ));
    }

    // fin[h]: final action-1 set reached from history h before stage t.
    let mut fin: Vec<PlayerSet> = {
        let all = p.prior(horizon);
        (0..1usize << all.len())
            .map(|c| PlayerSet::expand(c, all))
            .collect()
    };
    let mut stages = vec![Vec::new(); horizon];
    for t in (0..horizon).rev() {
        let prior = p.prior(t);
        let next_prior = p.prior(t + 1);
        let cell = p.cells()[t];
        let next_fin = &fin;
        let rows = exec::map_range(1usize << prior.len(), |code| {
            let h = PlayerSet::expand(code, prior);
            let outcome = |y: PlayerSet| next_fin[h.union(y).compress(next_prior)];
            let (least, _) = iesds_generic(cell, |i, y| game.u(i, outcome(y)));
            (least, outcome(least))
        });
        let (resp, reach): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        stages[t] = resp;
        fin = reach;
    }
    Ok(IesedsTable {
        partition: p.clone(),
        stages,
        outcome: fin[0],
    })
}

/// Largest set of players who can be made to play 1 in every monotone
/// equilibrium by some schedule with `t` cells; equals `phi(t)`.
pub fn m_of_t(game: &StageGame, t: usize, opts: Options) -> Result<PlayerSet> {
    SyncSolver::new(game, opts)?.phi(t)
}

/// An optimal schedule for a horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    pub partition: Partition,
    pub achieved: PlayerSet,
    /// Weakest-link graph whose tree-depth decomposition produced the
    /// schedule; players outside `achieved` carry no in-edges.
    pub graph: Digraph,
}

/// Optimal `t`-cell schedule: the achieved set is `phi(t)`; its players
/// are placed by depth in an optimal elimination forest of the equivalent
/// weakest-link graph, and everyone else joins the last nonempty cell.
pub fn design(game: &StageGame, t: usize, opts: Options) -> Result<Design> {
    check_horizon(t)?;
    let n = game.n();
    let mut solver = SyncSolver::new(game, opts)?;
    let achieved = solver.phi(t)?;
    let root = solver.root(Context::full(n))?;
    let graph = graphical::policy_graph(&mut solver, root)?;
    let mut cells = graph
        .partition_from_treedepth_within(achieved, t)
        .map_err(|e| match e {
            Error::Infeasible(m) => {
                Error::Internal(format!("achieved set does not fit the horizon: {m}"))
            }
            other => other,
        })?;
    let used = cells.iter().filter(|c| !c.is_empty()).count().max(1);
    let outsiders = PlayerSet::full(n).difference(achieved);
    cells[used - 1] = cells[used - 1].union(outsiders);
    Ok(Design {
        partition: Partition::new(n, cells)?,
        achieved,
        graph,
    })
}

/// Whether `g` is `m`-sufficient for `game` and no two players of a cell
/// within `m` are strongly connected in the suffix subgraph on `m`.
pub fn check_sufficient_feasible(
    game: &StageGame,
    g: &Digraph,
    p: &Partition,
    m: PlayerSet,
) -> bool {
    p.n() == game.n()
        && g.n() == game.n()
        && graphical::is_sufficient(game, g, m)
        && g.check_feasible_partition(p, m)
}
