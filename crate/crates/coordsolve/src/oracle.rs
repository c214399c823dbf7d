//! Brute-force equilibrium search for small synchronous and asynchronous
//! games, used as ground truth for the closed-form solvers.
//!
//! Subgame-perfect outcomes are collected backwards per history: a profile
//! survives at a history when each mover's continuation beats the worst
//! equilibrium continuation after any single-action deviation. Monotone
//! equilibria couple histories, so for them the search carries whole
//! continuation outcome functions backwards and combines each with every
//! history-monotone selection of stage equilibria.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::asynchronous::Partition;
use crate::error::{Error, Result};
use crate::exec;
use crate::game::{Context, StageGame};
use crate::set::PlayerSet;
use crate::sync::{check_horizon, Options, SyncSolver};
use crate::DEFAULT_BUDGET;

/// Move structure of the dynamic game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Schedule {
    /// `T` simultaneous stages with irreversible switches to 1.
    Sync(usize),
    /// Each cell moves once, in order, observing earlier cells.
    Async(Partition),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// All pure subgame-perfect equilibria.
    Spne,
    /// Subgame-perfect equilibria whose strategies are monotone in history.
    Mspne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Cap on search steps.
    pub cap: u64,
    /// Synchronous schedules only: restrict to profiles where nobody makes
    /// a new pledge before the last stage.
    pub no_pledge: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            cap: DEFAULT_BUDGET,
            no_pledge: false,
        }
    }
}

/// Distinct equilibrium outcomes, sorted by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcomes {
    pub outcomes: Vec<PlayerSet>,
}

impl Outcomes {
    fn new(items: impl IntoIterator<Item = PlayerSet>) -> Self {
        let mut outcomes: Vec<PlayerSet> = items.into_iter().collect();
        outcomes.sort_by_key(|x| x.bits());
        outcomes.dedup();
        Outcomes { outcomes }
    }

    pub fn contains(&self, x: PlayerSet) -> bool {
        self.outcomes.contains(&x)
    }

    /// The outcome contained in every other, if any.
    pub fn least(&self) -> Option<PlayerSet> {
        self.outcomes
            .iter()
            .copied()
            .find(|x| self.outcomes.iter().all(|y| x.is_subset(*y)))
    }

    /// Inclusion-minimal outcomes.
    pub fn minimal(&self) -> Vec<PlayerSet> {
        self.outcomes
            .iter()
            .copied()
            .filter(|x| !self.outcomes.iter().any(|y| y != x && y.is_subset(*x)))
            .collect()
    }

    /// Players at 1 in every outcome.
    pub fn common(&self) -> PlayerSet {
        self.outcomes
            .iter()
            .fold(None, |acc: Option<PlayerSet>, x| {
                Some(acc.map_or(*x, |a| a.intersection(*x)))
            })
            .unwrap_or(PlayerSet::EMPTY)
    }
}

/// Histories of one decision stage.
struct Stage {
    /// Players at 1 before the stage.
    state: Vec<PlayerSet>,
    /// Players who choose at the stage.
    free: Vec<PlayerSet>,
    /// Histories lower by one step.
    covers: Vec<Vec<usize>>,
    /// Lower histories first.
    order: Vec<usize>,
}

/// Game tree in history-indexed form. Stage `T` holds terminal histories.
struct Tree {
    n: usize,
    horizon: usize,
    movers: Vec<PlayerSet>,
    stages: Vec<Stage>,
    /// Asynchronous earlier-cell unions, empty for synchronous games.
    priors: Vec<PlayerSet>,
}

impl Tree {
    fn build(n: usize, schedule: &Schedule, cap: u64) -> Result<Tree> {
        match schedule {
            Schedule::Sync(t) => {
                check_horizon(*t)?;
                let total: u128 = (0..=*t).map(|s| (s as u128 + 1).pow(n as u32)).sum();
                if total > u128::from(cap) {
                    return Err(Error::resource("histories", total, cap));
                }
                Ok(Tree::sync(n, *t))
            }
            Schedule::Async(p) => {
                if p.n() != n {
                    return Err(Error::Argument(format!(
                        "schedule covers {} players, game has {n}",
                        p.n()
                    )));
                }
                let total: u128 = (0..=p.horizon()).map(|t| 1u128 << p.prior(t).len()).sum();
                if total > u128::from(cap) {
                    return Err(Error::resource("histories", total, cap));
                }
                Ok(Tree::asynchronous(p))
            }
        }
    }

    /// Synchronous histories at stage `s` are entry-stage vectors with
    /// digits in `0..=s`, digit `s` meaning not yet switched.
    fn sync(n: usize, horizon: usize) -> Tree {
        let stages = (0..=horizon)
            .map(|s| {
                let base = s + 1;
                let count = base.pow(n as u32);
                let digits = |mut h: usize| {
                    let mut d = vec![0usize; n];
                    for x in d.iter_mut() {
                        *x = h % base;
                        h /= base;
                    }
                    d
                };
                let mut state = Vec::with_capacity(count);
                let mut covers = Vec::with_capacity(count);
                let mut weight = Vec::with_capacity(count);
                for h in 0..count {
                    let d = digits(h);
                    state.push((0..n).filter(|&i| d[i] < s).collect::<PlayerSet>());
                    covers.push(
                        (0..n)
                            .filter(|&i| d[i] < s)
                            .map(|i| h + base.pow(i as u32))
                            .collect(),
                    );
                    weight.push(d.iter().sum::<usize>());
                }
                let mut order: Vec<usize> = (0..count).collect();
                order.sort_by_key(|&h| std::cmp::Reverse(weight[h]));
                let all = PlayerSet::full(n);
                Stage {
                    free: state.iter().map(|x| all.difference(*x)).collect(),
                    state,
                    covers,
                    order,
                }
            })
            .collect();
        Tree {
            n,
            horizon,
            movers: vec![PlayerSet::full(n); horizon + 1],
            stages,
            priors: Vec::new(),
        }
    }

    fn asynchronous(p: &Partition) -> Tree {
        let horizon = p.horizon();
        let priors: Vec<PlayerSet> = (0..=horizon).map(|t| p.prior(t)).collect();
        let stages = (0..=horizon)
            .map(|t| {
                let prior = priors[t];
                let count = 1usize << prior.len();
                let state: Vec<PlayerSet> =
                    (0..count).map(|h| PlayerSet::expand(h, prior)).collect();
                let covers = (0..count)
                    .map(|h| {
                        let mut rest = h;
                        let mut out = Vec::new();
                        while rest != 0 {
                            let bit = rest & rest.wrapping_neg();
                            rest ^= bit;
                            out.push(h ^ bit);
                        }
                        out
                    })
                    .collect();
                let mut order: Vec<usize> = (0..count).collect();
                order.sort_by_key(|h| h.count_ones());
                let cell = p.cells().get(t).copied().unwrap_or(PlayerSet::EMPTY);
                Stage {
                    free: vec![cell; count],
                    state,
                    covers,
                    order,
                }
            })
            .collect();
        let mut movers: Vec<PlayerSet> = p.cells().to_vec();
        movers.push(PlayerSet::EMPTY);
        Tree {
            n: p.n(),
            horizon,
            movers,
            stages,
            priors,
        }
    }

    /// History reached from `h` at stage `s` when the players at 1 become
    /// `x`.
    fn next(&self, s: usize, h: usize, x: PlayerSet) -> usize {
        if self.priors.is_empty() {
            let base = s + 1;
            let mut rest = h;
            let mut out = 0;
            let mut scale = 1;
            for i in 0..self.n {
                let d = rest % base;
                rest /= base;
                let e = if d < s {
                    d
                } else if x.contains(i) {
                    s
                } else {
                    s + 1
                };
                out += e * scale;
                scale *= base + 1;
            }
            out
        } else {
            x.compress(self.priors[s + 1])
        }
    }

    /// Profiles reachable at stage `s` from `h`.
    fn actions(&self, s: usize, h: usize) -> impl Iterator<Item = PlayerSet> + '_ {
        let st = &self.stages[s];
        let base = st.state[h];
        st.free[h].subsets().map(move |y| base.union(y))
    }

    /// Whether `x` at `(s, h)` leaves no mover a profitable switch, given
    /// continuation outcomes `cont` at stage `s + 1`.
    fn stable(
        &self,
        game: &StageGame,
        s: usize,
        h: usize,
        x: PlayerSet,
        cont: &[PlayerSet],
    ) -> bool {
        let o = cont[self.next(s, h, x)];
        self.stages[s].free[h].iter().all(|i| {
            let d = cont[self.next(s, h, x.toggle(i))];
            game.u(i, o) >= game.u(i, d)
        })
    }

    fn terminal(&self) -> Vec<PlayerSet> {
        self.stages[self.horizon].state.clone()
    }
}

struct Meter<'a> {
    used: &'a AtomicU64,
    cap: u64,
}

impl Meter<'_> {
    fn charge(&self, units: u64) -> Result<()> {
        let total = self.used.fetch_add(units, Ordering::Relaxed) + units;
        if total > self.cap {
            return Err(Error::resource(
                "equilibrium search",
                u128::from(total),
                self.cap,
            ));
        }
        Ok(())
    }
}

/// Outcomes of every pure equilibrium of the requested kind.
pub fn enumerate_equilibria(
    game: &StageGame,
    schedule: &Schedule,
    mode: Mode,
    opts: OracleOptions,
) -> Result<Outcomes> {
    if opts.no_pledge && !matches!(schedule, Schedule::Sync(_)) {
        return Err(Error::Argument(
            "the no-pledge restriction applies to synchronous schedules only".into(),
        ));
    }
    let tree = Tree::build(game.n(), schedule, opts.cap)?;
    let used = AtomicU64::new(0);
    let meter = Meter {
        used: &used,
        cap: opts.cap,
    };
    match mode {
        Mode::Spne => spne(game, &tree, &meter, opts.no_pledge),
        Mode::Mspne => mspne(game, &tree, &meter, opts.no_pledge),
    }
}

fn pledges_allowed(tree: &Tree, s: usize, no_pledge: bool) -> bool {
    !no_pledge || s + 1 == tree.horizon
}

fn spne(game: &StageGame, tree: &Tree, meter: &Meter<'_>, no_pledge: bool) -> Result<Outcomes> {
    let mut sets: Vec<Vec<PlayerSet>> = tree.terminal().into_iter().map(|x| vec![x]).collect();
    for s in (0..tree.horizon).rev() {
        let st = &tree.stages[s];
        let work: u64 = st.free.iter().map(|f| f.subset_count()).sum();
        meter.charge(work.saturating_mul(game.n() as u64 + 1))?;
        let next = &sets;
        let open = pledges_allowed(tree, s, no_pledge);
        sets = exec::map_range(st.state.len(), |h| {
            let mut out = Vec::new();
            for x in tree.actions(s, h) {
                if !open && x != st.state[h] {
                    continue;
                }
                // Worst continuation for each mover after switching.
                let punish: Vec<_> = st.free[h]
                    .iter()
                    .map(|i| {
                        let d = &next[tree.next(s, h, x.toggle(i))];
                        (i, d.iter().map(|o| game.u(i, *o)).min())
                    })
                    .collect();
                for &o in &next[tree.next(s, h, x)] {
                    let ok = punish
                        .iter()
                        .all(|(i, worst)| worst.is_none_or(|w| game.u(*i, o) >= w));
                    if ok {
                        out.push(o);
                    }
                }
            }
            out.sort_by_key(|x| x.bits());
            out.dedup();
            out
        });
    }
    Ok(Outcomes::new(sets[0].iter().copied()))
}

fn mspne(game: &StageGame, tree: &Tree, meter: &Meter<'_>, no_pledge: bool) -> Result<Outcomes> {
    let mut funcs: Vec<Vec<PlayerSet>> = vec![tree.terminal()];
    for s in (0..tree.horizon).rev() {
        let open = pledges_allowed(tree, s, no_pledge);
        let found = exec::map_slice(&funcs, |f| selections(game, tree, s, f, open, meter));
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for r in found {
            for g in r? {
                if seen.insert(g.clone()) {
                    next.push(g);
                }
            }
        }
        next.sort();
        funcs = next;
    }
    Ok(Outcomes::new(funcs.iter().map(|f| f[0])))
}

/// Outcome functions at stage `s` obtained from continuation `cont` by
/// every history-monotone choice of stage equilibria.
fn selections(
    game: &StageGame,
    tree: &Tree,
    s: usize,
    cont: &[PlayerSet],
    open: bool,
    meter: &Meter<'_>,
) -> Result<Vec<Vec<PlayerSet>>> {
    let st = &tree.stages[s];
    let count = st.state.len();
    let work: u64 = st.free.iter().map(|f| f.subset_count()).sum();
    meter.charge(work)?;
    let options: Vec<Vec<PlayerSet>> = (0..count)
        .map(|h| {
            tree.actions(s, h)
                .filter(|&x| open || x == st.state[h])
                .filter(|&x| tree.stable(game, s, h, x, cont))
                .collect()
        })
        .collect();
    if options.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let movers = tree.movers[s];
    let mut chosen = vec![PlayerSet::EMPTY; count];
    let mut out = HashSet::new();
    let mut steps = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn walk(
        k: usize,
        st: &Stage,
        options: &[Vec<PlayerSet>],
        movers: PlayerSet,
        chosen: &mut Vec<PlayerSet>,
        emit: &mut dyn FnMut(&[PlayerSet]) -> Result<()>,
        steps: &mut u64,
        meter: &Meter<'_>,
    ) -> Result<()> {
        if k == st.order.len() {
            return emit(chosen);
        }
        *steps += 1;
        if (*steps).is_multiple_of(4096) {
            meter.charge(4096)?;
        }
        let h = st.order[k];
        for &x in &options[h] {
            if st.covers[h]
                .iter()
                .all(|&l| chosen[l].intersection(movers).is_subset(x))
            {
                chosen[h] = x;
                walk(k + 1, st, options, movers, chosen, emit, steps, meter)?;
            }
        }
        Ok(())
    }
    let mut emit = |choice: &[PlayerSet]| -> Result<()> {
        let g: Vec<PlayerSet> = (0..count)
            .map(|h| cont[tree.next(s, h, choice[h])])
            .collect();
        out.insert(g);
        Ok(())
    };
    walk(
        0,
        st,
        &options,
        movers,
        &mut chosen,
        &mut emit,
        &mut steps,
        meter,
    )?;
    let mut out: Vec<_> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A pure strategy profile of a small synchronous game: for each stage
/// and history, the set of players at 1 after the stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyProfile {
    pub horizon: usize,
    pub n: usize,
    /// `actions[s][h]`, histories indexed as entry-stage vectors.
    actions: Vec<Vec<PlayerSet>>,
}

impl StrategyProfile {
    /// Players at 1 after the next stage, given the profiles after each
    /// earlier stage.
    pub fn respond(&self, history: &[PlayerSet]) -> Result<PlayerSet> {
        let s = history.len();
        if s >= self.horizon {
            return Err(Error::Argument(format!(
                "history of length {s} leaves no stage in a {}-stage game",
                self.horizon
            )));
        }
        if history.windows(2).any(|w| !w[0].is_subset(w[1])) {
            return Err(Error::Argument("histories must be nondecreasing".into()));
        }
        let base = s + 1;
        let mut h = 0;
        for i in (0..self.n).rev() {
            let entry = history.iter().position(|x| x.contains(i)).unwrap_or(s);
            h = h * base + entry;
        }
        Ok(self.actions[s][h])
    }

    /// Outcome on the equilibrium path.
    pub fn outcome(&self) -> PlayerSet {
        let mut history = Vec::new();
        for _ in 0..self.horizon {
            let x = self.respond(&history).expect("path histories are valid");
            history.push(x);
        }
        history.last().copied().unwrap_or(PlayerSet::EMPTY)
    }
}

/// Outcome and deviation check of a synchronous profile: `Some(outcome)`
/// when it is a monotone subgame-perfect equilibrium.
fn verify(game: &StageGame, tree: &Tree, actions: &[Vec<PlayerSet>]) -> Option<PlayerSet> {
    let mut cont = tree.terminal();
    for s in (0..tree.horizon).rev() {
        let st = &tree.stages[s];
        for h in 0..st.state.len() {
            let x = actions[s][h];
            if !st.state[h].is_subset(x) || !tree.stable(game, s, h, x, &cont) {
                return None;
            }
            if st.covers[h].iter().any(|&l| !actions[s][l].is_subset(x)) {
                return None;
            }
        }
        cont = (0..st.state.len())
            .map(|h| cont[tree.next(s, h, actions[s][h])])
            .collect();
    }
    Some(cont[0])
}

/// The most conservative monotone equilibrium with outcome `x` in the
/// `t`-stage game: nobody pledges early, and at the last stage a player
/// outside `x` joins only if the pledges seen force it in every
/// equilibrium of what remains. The profile is verified by single
/// deviations at every history.
pub fn support_strategy(
    game: &StageGame,
    t: usize,
    x: PlayerSet,
    opts: Options,
    oracle: OracleOptions,
) -> Result<StrategyProfile> {
    check_horizon(t)?;
    let n = game.n();
    let all = PlayerSet::full(n);
    if !x.is_subset(all) {
        return Err(Error::Argument(format!("outcome {x} has unknown players")));
    }
    let mut solver = SyncSolver::new(game, opts)?;
    if !solver.outcomes(t)?.contains(&x) {
        return Err(Error::Precondition(format!(
            "{x} is not a monotone equilibrium outcome of the {t}-stage game"
        )));
    }
    let tree = Tree::build(n, &Schedule::Sync(t), oracle.cap)?;
    let mut actions: Vec<Vec<PlayerSet>> = Vec::with_capacity(t);
    for s in 0..t {
        let st = &tree.stages[s];
        let row = if x == all {
            vec![all; st.state.len()]
        } else if s + 1 < t {
            st.state.clone()
        } else {
            let mut row = Vec::with_capacity(st.state.len());
            for h in 0..st.state.len() {
                row.push(x.union(forced(&mut solver, &tree, s, h, x, t)?));
            }
            row
        };
        actions.push(row);
    }
    match verify(game, &tree, &actions) {
        Some(o) if o == x => Ok(StrategyProfile {
            horizon: t,
            n,
            actions,
        }),
        Some(o) => Err(Error::Internal(format!(
            "conservative profile for {x} ends at {o}"
        ))),
        None => Err(Error::Internal(format!(
            "conservative profile for {x} admits a profitable deviation"
        ))),
    }
}

/// Players forced to 1 after last-stage history `h`: pledges accumulate
/// stage by stage, each time adding everyone who plays 1 in every
/// equilibrium of the remaining stages.
fn forced(
    solver: &mut SyncSolver<'_>,
    tree: &Tree,
    s: usize,
    h: usize,
    x: PlayerSet,
    t: usize,
) -> Result<PlayerSet> {
    let n = tree.n;
    let base = s + 1;
    let mut digits = vec![0usize; n];
    let mut rest = h;
    for d in digits.iter_mut() {
        *d = rest % base;
        rest /= base;
    }
    let mut p = x;
    for k in 1..t {
        let pledged: PlayerSet = (0..n).filter(|&i| digits[i] < k).collect();
        let fixed = p.union(pledged);
        let ctx = Context::new(PlayerSet::full(n).difference(fixed), fixed)?;
        p = fixed.union(solver.phi_in(ctx, t - k)?);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::game::Payoff;

    fn set(xs: &[usize]) -> PlayerSet {
        PlayerSet::from_indices(xs.iter().map(|x| x - 1))
    }

    fn run(game: &StageGame, schedule: Schedule, mode: Mode) -> Outcomes {
        enumerate_equilibria(game, &schedule, mode, OracleOptions::default()).unwrap()
    }

    #[test]
    fn mixed_pledge_game_coordinates_with_two_stages() {
        let g = catalog::mixed_pledge_game();
        assert_eq!(
            run(&g, Schedule::Sync(2), Mode::Mspne).outcomes,
            vec![set(&[1, 2])]
        );
        let seq = Partition::sequential(2);
        assert_eq!(
            run(&g, Schedule::Async(seq), Mode::Mspne).outcomes,
            vec![set(&[1, 2])]
        );
    }

    #[test]
    fn free_riders_have_no_least_outcome() {
        let r = run(
            &catalog::free_rider_triple(),
            Schedule::Sync(2),
            Mode::Mspne,
        );
        assert_eq!(r.least(), None);
        assert_eq!(r.minimal(), vec![set(&[1, 3]), set(&[2, 3])]);
    }

    #[test]
    fn square_spne_and_mspne_differ() {
        let g = catalog::square_weakest_link();
        let spne = run(&g, Schedule::Sync(2), Mode::Spne);
        assert_eq!(spne.outcomes, vec![set(&[1, 2]), PlayerSet::full(4)]);
        let mspne = run(&g, Schedule::Sync(2), Mode::Mspne);
        assert_eq!(mspne.outcomes, vec![PlayerSet::full(4)]);
    }

    #[test]
    fn one_stage_gives_nash_equilibria() {
        let g = catalog::square_weakest_link();
        let r = run(&g, Schedule::Sync(1), Mode::Spne);
        assert_eq!(
            r.outcomes,
            vec![PlayerSet::EMPTY, set(&[1, 2]), PlayerSet::full(4)]
        );
        assert_eq!(run(&g, Schedule::Sync(1), Mode::Mspne), r);
    }

    #[test]
    fn spillover_removes_the_triangle() {
        let plain = run(
            &catalog::spillover_game(Payoff::from_integer(0)),
            Schedule::Sync(3),
            Mode::Spne,
        );
        assert_eq!(plain.outcomes, vec![set(&[1, 2, 3]), PlayerSet::full(5)]);
        let eps = run(
            &catalog::spillover_game(Payoff::new(1, 2)),
            Schedule::Sync(3),
            Mode::Spne,
        );
        assert_eq!(eps.outcomes, vec![PlayerSet::full(5)]);
    }

    #[test]
    fn two_stage_design_game_schedule_is_unique_in_every_mspne() {
        let g = catalog::two_stage_design_game();
        let p = Partition::new(7, vec![set(&[1, 4]), set(&[2, 3, 5, 6, 7])]).unwrap();
        let r = run(&g, Schedule::Async(p), Mode::Mspne);
        assert_eq!(r.outcomes, vec![PlayerSet::full(7)]);
    }

    #[test]
    fn small_cliques_agree_with_recursion() {
        let g = catalog::disjoint_cliques(&[2, 1]);
        for t in 1..=3 {
            let r = run(&g, Schedule::Sync(t), Mode::Mspne);
            assert_eq!(r.outcomes, crate::sync::outcomes(&g, t).unwrap());
        }
    }

    #[test]
    fn no_pledge_family_reaches_the_same_outcomes() {
        let g = catalog::square_weakest_link();
        let opts = OracleOptions {
            no_pledge: true,
            ..OracleOptions::default()
        };
        let restricted = enumerate_equilibria(&g, &Schedule::Sync(2), Mode::Mspne, opts).unwrap();
        assert_eq!(restricted, run(&g, Schedule::Sync(2), Mode::Mspne));
    }

    #[test]
    fn cap_is_enforced() {
        let g = catalog::square_weakest_link();
        let opts = OracleOptions {
            cap: 10,
            ..OracleOptions::default()
        };
        assert!(matches!(
            enumerate_equilibria(&g, &Schedule::Sync(3), Mode::Mspne, opts),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn conservative_profile_for_a_triangle() {
        let g = catalog::twin_triangles();
        let p = support_strategy(
            &g,
            2,
            set(&[1, 2, 3]),
            Options::default(),
            OracleOptions::default(),
        )
        .unwrap();
        assert_eq!(p.outcome(), set(&[1, 2, 3]));
        assert_eq!(p.respond(&[]).unwrap(), PlayerSet::EMPTY);
    }

    #[test]
    fn conservative_profile_for_everyone_and_no_one() {
        let g = catalog::square_weakest_link();
        for t in 1..=3 {
            let p = support_strategy(
                &g,
                t,
                PlayerSet::full(4),
                Options::default(),
                OracleOptions::default(),
            )
            .unwrap();
            assert_eq!(p.outcome(), PlayerSet::full(4));
        }
        let p = support_strategy(
            &g,
            1,
            PlayerSet::EMPTY,
            Options::default(),
            OracleOptions::default(),
        )
        .unwrap();
        assert_eq!(p.outcome(), PlayerSet::EMPTY);
        let g = catalog::twin_triangles();
        let p = support_strategy(
            &g,
            2,
            PlayerSet::EMPTY,
            Options::default(),
            OracleOptions::default(),
        )
        .unwrap();
        assert_eq!(p.outcome(), PlayerSet::EMPTY);
    }

    #[test]
    fn conservative_profile_needs_an_outcome() {
        let g = catalog::square_weakest_link();
        assert!(matches!(
            support_strategy(
                &g,
                2,
                set(&[1, 2]),
                Options::default(),
                OracleOptions::default()
            ),
            Err(Error::Precondition(_))
        ));
    }
}
