//! Synchronous commitment games: the horizon operator `tau`, the least
//! equilibrium operator `phi`, equilibrium outcome sets and policy trees.
//!
//! A context `(S, O)` is solved by the recursion
//!
//! - *dominate*: some `i` in `S` strictly prefers 1 when only `O` plays 1;
//!   fix `i` at 1 at no cost;
//! - `S` empty: one stage;
//! - otherwise the cheaper of *delete* (`i` pledges, one extra stage) and
//!   *divide* along a strictly sufficient `X`: solve `(X, O)` and
//!   `(S \ X, O + X)` side by side.
//!
//! The horizon needed for a target `X` is the minimum over strictly
//! sufficient supersets `Y` of the value of `(Y, O)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::game::{self, Context, StageGame};
use crate::set::PlayerSet;
use crate::{DEFAULT_BUDGET, DEFAULT_GRAPH_BUDGET};

/// Candidate family for the divide step and the outer minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Family {
    /// Strictly sufficient sets that are also Nash equilibria.
    #[default]
    Sse,
    /// All strictly sufficient sets.
    Sss,
}

/// Solver configuration shared by the synchronous, graphical,
/// asynchronous and design layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub family: Family,
    /// Cap on elementary coalition evaluations.
    pub budget: u64,
    /// Cap on the number of minimal sufficient graphs enumerated.
    pub graph_budget: u64,
    /// Refuse games that violate single-crossing, common interests or
    /// deviation-proofness. Disabling this runs the algorithms anyway;
    /// results then carry no equilibrium guarantee.
    pub enforce_assumptions: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            family: Family::Sse,
            budget: DEFAULT_BUDGET,
            graph_budget: DEFAULT_GRAPH_BUDGET,
            enforce_assumptions: true,
        }
    }
}

/// One step of an optimal policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Dominate(usize),
    Delete(usize),
    Divide(PlayerSet),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Dominate(i) => write!(f, "dominate {}", i + 1),
            Op::Delete(i) => write!(f, "delete {}", i + 1),
            Op::Divide(x) => write!(f, "divide {x}"),
        }
    }
}

/// Optimal policy tree. Leaves (`op == None`) are empty contexts worth one
/// stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolicyNode {
    pub context: Context,
    pub op: Option<Op>,
    pub children: Vec<PolicyNode>,
    pub value: u32,
}

impl PolicyNode {
    /// Re-derives every node from the game and checks the stored values.
    pub fn replay(&self, game: &StageGame) -> bool {
        let Context { active: s, ones: o } = self.context;
        let kids = &self.children;
        match self.op {
            None => s.is_empty() && kids.is_empty() && self.value == 1,
            Some(Op::Dominate(i)) => {
                s.contains(i)
                    && game.up(o).contains(i)
                    && kids.len() == 1
                    && kids[0].context
                        == Context {
                            active: s.without(i),
                            ones: o.with(i),
                        }
                    && kids[0].value == self.value
                    && kids[0].replay(game)
            }
            Some(Op::Delete(i)) => {
                s.contains(i)
                    && kids.len() == 1
                    && kids[0].context
                        == Context {
                            active: s.without(i),
                            ones: o.with(i),
                        }
                    && kids[0].value + 1 == self.value
                    && kids[0].replay(game)
            }
            Some(Op::Divide(x)) => {
                x.is_subset(s)
                    && !x.is_empty()
                    && x != s
                    && game::is_strictly_sufficient(game, self.context, x)
                    && kids.len() == 2
                    && kids[0].context == Context { active: x, ones: o }
                    && kids[1].context
                        == Context {
                            active: s.difference(x),
                            ones: o.union(x),
                        }
                    && kids[0].value.max(kids[1].value) == self.value
                    && kids.iter().all(|k| k.replay(game))
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }
}

/// Summary of a solved synchronous game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncSolution {
    /// `tau` of every singleton and of the whole player set; `None` marks
    /// targets no horizon achieves.
    pub tau_of: BTreeMap<PlayerSet, Option<u32>>,
    /// `phi(T)` for `T = 1..=n`.
    pub phi_of: BTreeMap<usize, PlayerSet>,
    /// Optimal policy for the whole game, when the recursion applies to it.
    pub policy: Option<PolicyNode>,
}

#[derive(Clone, Copy)]
struct Entry {
    value: u32,
    op: Option<Op>,
}

/// Memoised solver for one game. Not shareable across threads while in
/// use; independent instances are.
pub struct SyncSolver<'g> {
    game: &'g StageGame,
    opts: Options,
    memo: HashMap<(u32, u32), Entry>,
    families: HashMap<(u32, u32), Vec<PlayerSet>>,
    spent: u64,
}

impl<'g> SyncSolver<'g> {
    pub fn new(game: &'g StageGame, opts: Options) -> Result<Self> {
        if opts.enforce_assumptions {
            game.require_assumptions()?;
        }
        Ok(SyncSolver {
            game,
            opts,
            memo: HashMap::new(),
            families: HashMap::new(),
            spent: 0,
        })
    }

    pub fn game(&self) -> &'g StageGame {
        self.game
    }

    pub fn options(&self) -> Options {
        self.opts
    }

    fn charge(&mut self, units: u64) -> Result<()> {
        self.spent = self.spent.saturating_add(units);
        if self.spent > self.opts.budget {
            return Err(Error::resource(
                "synchronous recursion",
                u128::from(self.spent),
                self.opts.budget,
            ));
        }
        Ok(())
    }

    /// Candidate sets of `ctx` in lexicographic order of member lists.
    pub fn family(&mut self, ctx: Context) -> Result<Vec<PlayerSet>> {
        let key = (ctx.active.bits(), ctx.ones.bits());
        if let Some(f) = self.families.get(&key) {
            return Ok(f.clone());
        }
        self.charge(ctx.active.subset_count())?;
        let mut fam = game::sss_unchecked(self.game, ctx, self.opts.family == Family::Sse);
        fam.sort_by(|a, b| a.lex_cmp(*b));
        self.families.insert(key, fam.clone());
        Ok(fam)
    }

    /// Value of the recursion on `ctx`. The context must satisfy the
    /// recursion's invariant: `S` empty or strictly sufficient in `(S, O)`.
    pub fn solve(&mut self, ctx: Context) -> Result<u32> {
        Ok(self.entry(ctx)?.value)
    }

    fn entry(&mut self, ctx: Context) -> Result<Entry> {
        let key = (ctx.active.bits(), ctx.ones.bits());
        if let Some(e) = self.memo.get(&key) {
            return Ok(*e);
        }
        let s = ctx.active;
        let o = ctx.ones;
        let entry = if let Some(i) = self.game.up(o).intersection(s).first() {
            let v = self.solve(Context {
                active: s.without(i),
                ones: o.with(i),
            })?;
            Entry {
                value: v,
                op: Some(Op::Dominate(i)),
            }
        } else if s.is_empty() {
            Entry { value: 1, op: None }
        } else {
            let mut best = u32::MAX;
            let mut op = None;
            for x in self.family(ctx)? {
                if x == s {
                    continue;
                }
                let v1 = self.solve(Context { active: x, ones: o })?;
                if v1 >= best {
                    continue;
                }
                let v2 = self.solve(Context {
                    active: s.difference(x),
                    ones: o.union(x),
                })?;
                let v = v1.max(v2);
                if v < best {
                    best = v;
                    op = Some(Op::Divide(x));
                    if best <= 2 {
                        break;
                    }
                }
            }
            if best > 2 {
                for i in s.iter() {
                    let v = 1 + self.solve(Context {
                        active: s.without(i),
                        ones: o.with(i),
                    })?;
                    if v < best {
                        best = v;
                        op = Some(Op::Delete(i));
                        if best <= 2 {
                            break;
                        }
                    }
                }
            }
            Entry { value: best, op }
        };
        self.memo.insert(key, entry);
        Ok(entry)
    }

    /// Optimal policy tree for `ctx`.
    pub fn policy(&mut self, ctx: Context) -> Result<PolicyNode> {
        let e = self.entry(ctx)?;
        let Context { active: s, ones: o } = ctx;
        let children = match e.op {
            None => Vec::new(),
            Some(Op::Dominate(i)) | Some(Op::Delete(i)) => vec![self.policy(Context {
                active: s.without(i),
                ones: o.with(i),
            })?],
            Some(Op::Divide(x)) => vec![
                self.policy(Context { active: x, ones: o })?,
                self.policy(Context {
                    active: s.difference(x),
                    ones: o.union(x),
                })?,
            ],
        };
        Ok(PolicyNode {
            context: ctx,
            op: e.op,
            children,
            value: e.value,
        })
    }

    /// Horizon needed for every member of `x` to play 1 in all equilibria
    /// of the context game, or `None` when no horizon suffices.
    pub fn tau_in(&mut self, ctx: Context, x: PlayerSet) -> Result<Option<u32>> {
        ctx.check(self.game)?;
        if !x.is_subset(ctx.active) {
            return Err(Error::Argument(format!(
                "target {x} is not within the active players {}",
                ctx.active
            )));
        }
        if x.is_empty() {
            return Ok(Some(1));
        }
        let mut best: Option<u32> = None;
        for y in self.family(ctx)? {
            if !y.is_superset(x) {
                continue;
            }
            let v = self.solve(Context {
                active: y,
                ones: ctx.ones,
            })?;
            if best.is_none_or(|b| v < b) {
                best = Some(v);
                if v == 1 {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// `tau(X)` in the whole game; `None` when unattainable.
    pub fn tau_opt(&mut self, x: PlayerSet) -> Result<Option<u32>> {
        self.tau_in(Context::full(self.game.n()), x)
    }

    /// `tau(X)` in the whole game; an infeasibility error when some member
    /// of `X` never plays 1 in every equilibrium.
    pub fn tau(&mut self, x: PlayerSet) -> Result<u32> {
        self.tau_opt(x)?
            .ok_or_else(|| Error::Infeasible(format!("no horizon makes all of {x} play 1")))
    }

    /// `tau` of each active singleton of `ctx`, indexed by player.
    pub fn singleton_taus_in(&mut self, ctx: Context) -> Result<Vec<Option<u32>>> {
        ctx.check(self.game)?;
        let mut out = vec![None; self.game.n()];
        for y in self.family(ctx)? {
            let v = self.solve(Context {
                active: y,
                ones: ctx.ones,
            })?;
            for i in y.iter() {
                if out[i].is_none_or(|b| v < b) {
                    out[i] = Some(v);
                }
            }
        }
        Ok(out)
    }

    /// Players of the context game who play 1 in every monotone equilibrium
    /// of the `t`-stage game.
    pub fn phi_in(&mut self, ctx: Context, t: usize) -> Result<PlayerSet> {
        let taus = self.singleton_taus_in(ctx)?;
        Ok(taus
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_some_and(|v| (v as usize) <= t))
            .map(|(i, _)| i)
            .collect())
    }

    /// `phi(T)` of the whole game.
    pub fn phi(&mut self, t: usize) -> Result<PlayerSet> {
        check_horizon(t)?;
        self.phi_in(Context::full(self.game.n()), t)
    }

    /// Monotone equilibrium outcomes of the `t`-stage game: Nash equilibria
    /// `X` of the stage game such that nobody outside `X` is guaranteed to
    /// join within `t` stages once `X` is fixed at 1.
    pub fn outcomes(&mut self, t: usize) -> Result<Vec<PlayerSet>> {
        check_horizon(t)?;
        let n = self.game.n();
        let ne = game::ne_set_unchecked(self.game, Context::full(n));
        self.charge(1u64 << n)?;
        let mut out = Vec::new();
        for x in ne {
            let ctx = Context {
                active: PlayerSet::full(n).difference(x),
                ones: x,
            };
            let mut survives = true;
            for y in self.family(ctx)? {
                if (self.solve(Context { active: y, ones: x })? as usize) <= t {
                    survives = false;
                    break;
                }
            }
            if survives {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// The recursion's root for `ctx`: players with an iteratively
    /// dominated action 1 are fixed at 0, everyone else stays active.
    /// Fails when some remaining player is indifferent with every
    /// remaining player at 1.
    pub fn root(&self, ctx: Context) -> Result<Context> {
        ctx.check(self.game)?;
        let (_, greatest) = game::iesds_unchecked(self.game, ctx);
        let root = Context {
            active: greatest,
            ones: ctx.ones,
        };
        if !root.active.is_empty() && !game::is_strictly_sufficient(self.game, root, root.active) {
            let top = root.active.union(root.ones);
            let lazy = root.active.difference(self.game.up(top));
            return Err(Error::Precondition(format!(
                "players {lazy} do not strictly prefer 1 when all of {top} play 1"
            )));
        }
        Ok(root)
    }

    /// Summary: singleton and whole-set horizons, `phi` for every horizon
    /// up to `n`, and the policy tree of the reduced whole game.
    pub fn solution(&mut self) -> Result<SyncSolution> {
        let n = self.game.n();
        let full = Context::full(n);
        let taus = self.singleton_taus_in(full)?;
        let mut tau_of = BTreeMap::new();
        for (i, v) in taus.iter().enumerate() {
            tau_of.insert(PlayerSet::singleton(i), *v);
        }
        tau_of.insert(PlayerSet::full(n), self.tau_opt(PlayerSet::full(n))?);
        let mut phi_of = BTreeMap::new();
        for t in 1..=n {
            let set = taus
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_some_and(|v| (v as usize) <= t))
                .map(|(i, _)| i)
                .collect();
            phi_of.insert(t, set);
        }
        let policy = match self.root(full) {
            Ok(root) => Some(self.policy(root)?),
            Err(Error::Precondition(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(SyncSolution {
            tau_of,
            phi_of,
            policy,
        })
    }
}

pub(crate) fn check_horizon(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::Argument("horizon must be at least 1".into()));
    }
    Ok(())
}

/// Value and optimal policy of the recursion on `ctx`, after fixing the
/// players with an iteratively dominated action 1 at 0.
pub fn tau_rec(game: &StageGame, ctx: Context) -> Result<(u32, PolicyNode)> {
    let mut s = SyncSolver::new(game, Options::default())?;
    let root = s.root(ctx)?;
    let policy = s.policy(root)?;
    Ok((policy.value, policy))
}

/// `tau(X)` with default options.
pub fn tau(game: &StageGame, x: PlayerSet) -> Result<u32> {
    SyncSolver::new(game, Options::default())?.tau(x)
}

/// `phi(T)` with default options.
pub fn phi(game: &StageGame, t: usize) -> Result<PlayerSet> {
    SyncSolver::new(game, Options::default())?.phi(t)
}

/// Monotone equilibrium outcomes of the `t`-stage game with default options.
pub fn outcomes(game: &StageGame, t: usize) -> Result<Vec<PlayerSet>> {
    SyncSolver::new(game, Options::default())?.outcomes(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(xs: &[usize]) -> PlayerSet {
        PlayerSet::from_indices(xs.iter().map(|x| x - 1))
    }

    #[test]
    fn star_and_cycle_need_two_stages() {
        let (v, p) = tau_rec(&catalog::star(6), Context::full(7)).unwrap();
        assert_eq!(v, 2);
        assert!(p.replay(&catalog::star(6)));
        let (v, _) = tau_rec(&catalog::directed_cycle(8), Context::full(8)).unwrap();
        assert_eq!(v, 2);
    }

    #[test]
    fn empty_context_is_one_stage() {
        let g = catalog::square_weakest_link();
        let ctx = Context::new(PlayerSet::EMPTY, PlayerSet::EMPTY).unwrap();
        assert_eq!(tau_rec(&g, ctx).unwrap().0, 1);
    }

    #[test]
    fn clique_with_fan_targets() {
        let g = catalog::clique_with_fan();
        assert_eq!(tau(&g, set(&[5, 6, 7, 8, 9])).unwrap(), 4);
    }

    #[test]
    fn homogeneous_aggregative() {
        for k in 1..4 {
            let g = StageGame::aggregative(vec![k; 5]).unwrap();
            for i in 0..5 {
                assert_eq!(tau(&g, PlayerSet::singleton(i)).unwrap(), k as u32 + 1);
            }
        }
    }

    #[test]
    fn square_needs_two() {
        assert_eq!(
            tau(&catalog::square_weakest_link(), PlayerSet::full(4)).unwrap(),
            2
        );
    }

    #[test]
    fn twin_triangles_phi_and_outcomes() {
        let g = catalog::twin_triangles();
        assert_eq!(phi(&g, 2).unwrap(), PlayerSet::EMPTY);
        assert_eq!(phi(&g, 3).unwrap(), PlayerSet::full(8));
        assert_eq!(
            outcomes(&g, 2).unwrap(),
            vec![
                PlayerSet::EMPTY,
                set(&[1, 2, 3]),
                set(&[4, 5, 6]),
                PlayerSet::full(8)
            ]
        );
    }

    #[test]
    fn square_outcomes_at_two() {
        let g = catalog::square_weakest_link();
        assert_eq!(outcomes(&g, 2).unwrap(), vec![PlayerSet::full(4)]);
    }

    #[test]
    fn long_horizon_is_efficient() {
        let g = catalog::twin_triangles();
        assert_eq!(phi(&g, 8).unwrap(), PlayerSet::full(8));
        assert_eq!(outcomes(&g, 8).unwrap(), vec![PlayerSet::full(8)]);
    }

    #[test]
    fn dominant_players_are_free() {
        let g = StageGame::weakest_link(crate::Digraph::empty(3)).unwrap();
        assert_eq!(phi(&g, 1).unwrap(), PlayerSet::full(3));
        assert_eq!(tau(&g, PlayerSet::full(3)).unwrap(), 1);
    }

    #[test]
    fn sss_and_sse_agree() {
        let g = catalog::twin_triangles();
        let mut a = SyncSolver::new(&g, Options::default()).unwrap();
        let mut b = SyncSolver::new(
            &g,
            Options {
                family: Family::Sss,
                ..Options::default()
            },
        )
        .unwrap();
        for x in PlayerSet::full(8).subsets().step_by(7) {
            assert_eq!(a.tau_opt(x).unwrap(), b.tau_opt(x).unwrap());
        }
    }

    #[test]
    fn rejects_assumption_violations() {
        let g = catalog::mixed_pledge_game();
        assert!(matches!(
            SyncSolver::new(&g, Options::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let g = catalog::twin_triangles();
        let mut s = SyncSolver::new(
            &g,
            Options {
                budget: 10,
                ..Options::default()
            },
        )
        .unwrap();
        assert!(matches!(
            s.tau(PlayerSet::full(8)),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn solution_is_consistent() {
        let g = catalog::clique_with_fan();
        let mut s = SyncSolver::new(&g, Options::default()).unwrap();
        let sol = s.solution().unwrap();
        assert!(sol.policy.as_ref().unwrap().replay(&g));
        for (t, set) in &sol.phi_of {
            let expect: PlayerSet = (0..9)
                .filter(|&i| sol.tau_of[&PlayerSet::singleton(i)].is_some_and(|v| v as usize <= *t))
                .collect();
            assert_eq!(*set, expect);
        }
    }
}
