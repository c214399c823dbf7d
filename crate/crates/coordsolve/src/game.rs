//! Stage games: representation, exact payoffs, assumption checks, Nash
//! equilibria, iterated strict dominance and strictly sufficient sets.

use std::fmt;
use std::sync::OnceLock;

use num_rational::Rational64;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::exec;
use crate::set::PlayerSet;

/// Exact payoff value.
pub type Payoff = Rational64;

/// Largest player count accepted by [`StageGame`].
pub const MAX_GAME_PLAYERS: usize = 24;

/// Largest player count accepted for explicit payoff tables.
pub const MAX_TABLE_PLAYERS: usize = 16;

/// How payoffs are specified.
#[derive(Clone, Debug, PartialEq)]
pub enum GameKind {
    /// `payoffs[i][X.bits()]` is `u_i(X)`.
    Table(Vec<Vec<Payoff>>),
    /// `u_i(X) = [i in X] * (2 [E_i subset of X] - 1)`.
    WeakestLink(Digraph),
    /// `u_i(X) = [i in X] * (2 [|E_i & X| >= k_i] - 1)`.
    Threshold { graph: Digraph, k: Vec<usize> },
    /// `u_i(X) = [i in X] * (2 [|X \ i| >= c_i] - 1)`.
    Aggregative { c: Vec<usize> },
}

/// A binary-action normal-form game with exact payoffs.
///
/// Values are immutable; derived tables are computed lazily and cached.
pub struct StageGame {
    n: usize,
    kind: GameKind,
    incentives: OnceLock<Incentives>,
    report: OnceLock<AssumptionReport>,
}

impl Clone for StageGame {
    fn clone(&self) -> Self {
        StageGame::build(self.n, self.kind.clone())
    }
}

impl PartialEq for StageGame {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.kind == other.kind
    }
}

impl fmt::Debug for StageGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StageGame")
            .field("n", &self.n)
            .field("kind", &self.kind)
            .finish()
    }
}

fn check_player_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GAME_PLAYERS {
        return Err(Error::Argument(format!(
            "player count must be in 1..={MAX_GAME_PLAYERS}, got {n}"
        )));
    }
    Ok(())
}

impl StageGame {
    fn build(n: usize, kind: GameKind) -> Self {
        StageGame {
            n,
            kind,
            incentives: OnceLock::new(),
            report: OnceLock::new(),
        }
    }

    /// Explicit payoff table indexed by coalition bitmask.
    pub fn table(payoffs: Vec<Vec<Payoff>>) -> Result<Self> {
        let n = payoffs.len();
        check_player_count(n)?;
        if n > MAX_TABLE_PLAYERS {
            return Err(Error::Argument(format!(
                "payoff tables support at most {MAX_TABLE_PLAYERS} players"
            )));
        }
        let rows = 1usize << n;
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != rows {
                return Err(Error::Argument(format!(
                    "player {} has {} payoff entries, expected {rows}",
                    i + 1,
                    row.len()
                )));
            }
        }
        Ok(Self::build(n, GameKind::Table(payoffs)))
    }

    /// Tabulates `f(i, X)` for every player and coalition.
    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(usize, PlayerSet) -> Payoff,
    {
        check_player_count(n)?;
        if n > MAX_TABLE_PLAYERS {
            return Err(Error::Argument(format!(
                "payoff tables support at most {MAX_TABLE_PLAYERS} players"
            )));
        }
        let payoffs = (0..n)
            .map(|i| {
                PlayerSet::full(n)
                    .subsets()
                    .map(|x| f(i, x))
                    .collect::<Vec<_>>()
            })
            .collect();
        Self::table(payoffs)
    }

    /// Weakest-link game on `g`.
    pub fn weakest_link(g: Digraph) -> Result<Self> {
        check_player_count(g.n())?;
        Ok(Self::build(g.n(), GameKind::WeakestLink(g)))
    }

    /// Threshold game: `i` wants 1 iff at least `k[i]` in-neighbours play 1.
    pub fn threshold(graph: Digraph, k: Vec<usize>) -> Result<Self> {
        let n = graph.n();
        check_player_count(n)?;
        if k.len() != n {
            return Err(Error::Argument(format!(
                "threshold vector has length {}, expected {n}",
                k.len()
            )));
        }
        for (i, &ki) in k.iter().enumerate() {
            let deg = graph.in_neighbors(i).len();
            if ki < 1 || ki > deg {
                return Err(Error::Argument(format!(
                    "threshold k_{} = {ki} must lie in 1..={deg}",
                    i + 1
                )));
            }
        }
        Ok(Self::build(n, GameKind::Threshold { graph, k }))
    }

    /// Aggregative game: `i` wants 1 iff at least `c[i]` others play 1.
    pub fn aggregative(c: Vec<usize>) -> Result<Self> {
        let n = c.len();
        check_player_count(n)?;
        if n < 2 {
            return Err(Error::Argument(
                "aggregative games need at least two players".into(),
            ));
        }
        for (i, &ci) in c.iter().enumerate() {
            if ci < 1 || ci > n - 1 {
                return Err(Error::Argument(format!(
                    "threshold c_{} = {ci} must lie in 1..={}",
                    i + 1,
                    n - 1
                )));
            }
        }
        Ok(Self::build(n, GameKind::Aggregative { c }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &GameKind {
        &self.kind
    }

    /// Underlying graph of weakest-link and threshold games.
    pub fn graph(&self) -> Option<&Digraph> {
        match &self.kind {
            GameKind::WeakestLink(g) | GameKind::Threshold { graph: g, .. } => Some(g),
            _ => None,
        }
    }

    pub fn players(&self) -> PlayerSet {
        PlayerSet::full(self.n)
    }

    /// `u_i(X)`: the payoff of player `i` when exactly the members of `X`
    /// play 1.
    pub fn payoff(&self, i: usize, x: PlayerSet) -> Result<Payoff> {
        if i >= self.n {
            return Err(Error::Argument(format!(
                "player index {i} out of range for {} players",
                self.n
            )));
        }
        if !x.is_subset(self.players()) {
            return Err(Error::Argument(format!(
                "coalition {x} is not a subset of the {} players",
                self.n
            )));
        }
        Ok(self.u(i, x))
    }

    /// Unchecked payoff lookup.
    pub(crate) fn u(&self, i: usize, x: PlayerSet) -> Payoff {
        match &self.kind {
            GameKind::Table(p) => p[i][x.bits() as usize],
            GameKind::WeakestLink(g) => {
                let ok = g.in_neighbors(i).is_subset(x);
                Payoff::from_integer(sign(x.contains(i), ok))
            }
            GameKind::Threshold { graph, k } => {
                let ok = graph.in_neighbors(i).intersection(x).len() >= k[i];
                Payoff::from_integer(sign(x.contains(i), ok))
            }
            GameKind::Aggregative { c } => {
                let ok = x.without(i).len() >= c[i];
                Payoff::from_integer(sign(x.contains(i), ok))
            }
        }
    }

    /// Cached incentive table.
    pub fn incentives(&self) -> &Incentives {
        self.incentives.get_or_init(|| Incentives::compute(self))
    }

    /// Players who strictly prefer 1 at profile `y` (others' actions read
    /// from `y`, own membership ignored).
    pub fn up(&self, y: PlayerSet) -> PlayerSet {
        self.incentives().up(y)
    }

    /// Players who strictly prefer 0 at profile `y`.
    pub fn down(&self, y: PlayerSet) -> PlayerSet {
        self.incentives().down(y)
    }

    /// Cached assumption report; see [`check_assumptions`].
    pub fn report(&self) -> &AssumptionReport {
        self.report.get_or_init(|| check_assumptions(self))
    }

    /// Whether single-crossing, common interests and deviation-proofness
    /// hold. Structured kinds satisfy them by construction.
    pub fn satisfies_assumptions(&self) -> bool {
        match self.kind {
            GameKind::Table(_) => self.report().assumption1(),
            _ => true,
        }
    }

    pub(crate) fn require_assumptions(&self) -> Result<()> {
        if self.satisfies_assumptions() {
            Ok(())
        } else {
            let w = self
                .report()
                .witnesses
                .first()
                .map(|w| w.to_string())
                .unwrap_or_default();
            Err(Error::Precondition(format!(
                "stage game violates the standing assumptions: {w}"
            )))
        }
    }
}

fn sign(member: bool, ok: bool) -> i64 {
    match (member, ok) {
        (false, _) => 0,
        (true, true) => 1,
        (true, false) => -1,
    }
}

/// Per-profile incentive masks.
///
/// For a profile `Y`, `up(Y)` holds the players `i` with
/// `u_i(Y + i) > u_i(Y - i)` and `down(Y)` those with the reverse strict
/// inequality. Each entry depends only on the other players' actions.
#[derive(Clone, Debug)]
pub struct Incentives {
    up: Vec<u32>,
    down: Vec<u32>,
}

impl Incentives {
    fn compute(game: &StageGame) -> Self {
        let n = game.n;
        let pairs = exec::map_range(1usize << n, |bits| {
            let y = PlayerSet::from_bits(bits as u32);
            let mut up = 0u32;
            let mut down = 0u32;
            for i in 0..n {
                let hi = game.u(i, y.with(i));
                let lo = game.u(i, y.without(i));
                if hi > lo {
                    up |= 1 << i;
                } else if lo > hi {
                    down |= 1 << i;
                }
            }
            (up, down)
        });
        let (up, down) = pairs.into_iter().unzip();
        Incentives { up, down }
    }

    pub fn up(&self, y: PlayerSet) -> PlayerSet {
        PlayerSet::from_bits(self.up[y.bits() as usize])
    }

    pub fn down(&self, y: PlayerSet) -> PlayerSet {
        PlayerSet::from_bits(self.down[y.bits() as usize])
    }
}

/// An auxiliary game: players in `active` choose, players in `ones` are
/// fixed at 1, everyone else is fixed at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Context {
    pub active: PlayerSet,
    pub ones: PlayerSet,
}

impl Context {
    pub fn new(active: PlayerSet, ones: PlayerSet) -> Result<Self> {
        if !active.is_disjoint(ones) {
            return Err(Error::Argument(format!(
                "active set {active} and forced set {ones} overlap"
            )));
        }
        Ok(Context { active, ones })
    }

    /// The whole game: everyone active, nobody forced.
    pub fn full(n: usize) -> Self {
        Context {
            active: PlayerSet::full(n),
            ones: PlayerSet::EMPTY,
        }
    }

    /// Fixes `x` at 1 and keeps the rest active.
    #[must_use]
    pub fn force(self, x: PlayerSet) -> Self {
        Context {
            active: self.active.difference(x),
            ones: self.ones.union(x.intersection(self.active)),
        }
    }

    /// Keeps only `x` active; the other active players are fixed at 0.
    #[must_use]
    pub fn restrict(self, x: PlayerSet) -> Self {
        Context {
            active: self.active.intersection(x),
            ones: self.ones,
        }
    }

    /// Effective payoff of `i` at `x` (a subset of the active players).
    pub fn payoff(&self, game: &StageGame, i: usize, x: PlayerSet) -> Payoff {
        game.u(i, x.union(self.ones))
    }

    pub(crate) fn check(&self, game: &StageGame) -> Result<()> {
        let all = game.players();
        if !self.active.is_subset(all) || !self.ones.is_subset(all) {
            return Err(Error::Argument(format!(
                "context ({}, {}) refers to players outside 1..={}",
                self.active,
                self.ones,
                game.n()
            )));
        }
        if !self.active.is_disjoint(self.ones) {
            return Err(Error::Argument("context sets overlap".into()));
        }
        Ok(())
    }
}

/// The individual conditions verified by [`check_assumptions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    SingleCrossingWeak,
    SingleCrossingStrict,
    CommonInterestsMonotone,
    CommonInterestsTieBreak,
    DeviationProofWeak,
    DeviationProofStrict,
    NondegenerateTop,
    NondegenerateBottom,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::SingleCrossingWeak => "single-crossing (weak)",
            Condition::SingleCrossingStrict => "single-crossing (strict)",
            Condition::CommonInterestsMonotone => "common interests (monotone best value)",
            Condition::CommonInterestsTieBreak => "common interests: tie-break (interpreted)",
            Condition::DeviationProofWeak => "deviation-proof (weak)",
            Condition::DeviationProofStrict => "deviation-proof (strict)",
            Condition::NondegenerateTop => "nondegenerate (1 strictly best when all others play 1)",
            Condition::NondegenerateBottom => {
                "nondegenerate (0 strictly best when all others play 0)"
            }
        }
    }
}

/// A concrete violation: player `player`, opponents' profiles
/// `lower` and `upper` (neither contains `player`, `lower` is a subset of
/// `upper`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub player: usize,
    pub lower: PlayerSet,
    pub upper: PlayerSet,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails for player {} between {} and {}",
            self.condition.label(),
            self.player + 1,
            self.lower,
            self.upper
        )
    }
}

impl Violation {
    /// Re-evaluates the payoffs and confirms the violation.
    pub fn replays(&self, game: &StageGame) -> bool {
        let i = self.player;
        if i >= game.n() || self.lower.contains(i) || self.upper.contains(i) {
            return false;
        }
        let v1 = |a: PlayerSet| game.u(i, a.with(i));
        let v0 = |a: PlayerSet| game.u(i, a);
        let best = |a: PlayerSet| v1(a).max(v0(a));
        let (a, b) = (self.lower, self.upper);
        let ordered = a.is_subset(b) && a != b;
        match self.condition {
            Condition::SingleCrossingWeak => ordered && v1(a) >= v0(a) && v1(b) < v0(b),
            Condition::SingleCrossingStrict => ordered && v1(a) > v0(a) && v1(b) <= v0(b),
            Condition::CommonInterestsMonotone => ordered && best(b) < best(a),
            Condition::CommonInterestsTieBreak => {
                ordered && best(b) == v1(b) && best(a) == v0(a) && best(b) <= best(a)
            }
            Condition::DeviationProofWeak => ordered && v1(b) >= v0(a) && v1(b) < v0(b),
            Condition::DeviationProofStrict => ordered && v1(b) > v0(a) && v1(b) <= v0(b),
            Condition::NondegenerateTop => b == game.players().without(i) && v1(b) <= v0(b),
            Condition::NondegenerateBottom => a.is_empty() && v0(a) <= v1(a),
        }
    }
}

/// Outcome of [`check_assumptions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionReport {
    pub single_crossing: bool,
    pub common_interests: bool,
    pub deviation_proof: bool,
    pub nondegenerate: bool,
    pub witnesses: Vec<Violation>,
}

impl AssumptionReport {
    /// Single-crossing, common interests and deviation-proofness.
    pub fn assumption1(&self) -> bool {
        self.single_crossing && self.common_interests && self.deviation_proof
    }

    /// All four conditions.
    pub fn all(&self) -> bool {
        self.assumption1() && self.nondegenerate
    }
}

const WITNESS_CAP: usize = 4;

/// Exhaustively checks single-crossing, common interests (with the
/// tie-break clause read on the best-reply value), deviation-proofness and
/// nondegeneracy. Every false flag carries at least one witness.
pub fn check_assumptions(game: &StageGame) -> AssumptionReport {
    let n = game.n();
    let per_player = exec::map_range(n, |i| check_player(game, i));
    let mut witnesses: Vec<Violation> = per_player.into_iter().flatten().collect();
    witnesses.sort_by_key(|w| (w.condition, w.player, w.upper, w.lower));
    let mut kept: Vec<Violation> = Vec::new();
    for w in witnesses {
        if kept.iter().filter(|k| k.condition == w.condition).count() < WITNESS_CAP {
            kept.push(w);
        }
    }
    let failed = |cs: &[Condition]| kept.iter().any(|w| cs.contains(&w.condition));
    AssumptionReport {
        single_crossing: !failed(&[
            Condition::SingleCrossingWeak,
            Condition::SingleCrossingStrict,
        ]),
        common_interests: !failed(&[
            Condition::CommonInterestsMonotone,
            Condition::CommonInterestsTieBreak,
        ]),
        deviation_proof: !failed(&[
            Condition::DeviationProofWeak,
            Condition::DeviationProofStrict,
        ]),
        nondegenerate: !failed(&[Condition::NondegenerateTop, Condition::NondegenerateBottom]),
        witnesses: kept,
    }
}

fn check_player(game: &StageGame, i: usize) -> Vec<Violation> {
    let others = game.players().without(i);
    let size = 1usize << others.len();
    let v0: Vec<Payoff> = (0..size)
        .map(|c| game.u(i, PlayerSet::expand(c, others)))
        .collect();
    let v1: Vec<Payoff> = (0..size)
        .map(|c| game.u(i, PlayerSet::expand(c, others).with(i)))
        .collect();
    let best: Vec<Payoff> = (0..size).map(|c| v0[c].max(v1[c])).collect();
    let mut out = Vec::new();
    let mut counts = [0usize; 8];
    let push = |out: &mut Vec<Violation>,
                counts: &mut [usize; 8],
                condition: Condition,
                a: usize,
                b: usize| {
        let slot = condition as usize;
        if counts[slot] < WITNESS_CAP {
            counts[slot] += 1;
            out.push(Violation {
                condition,
                player: i,
                lower: PlayerSet::expand(a, others),
                upper: PlayerSet::expand(b, others),
            });
        }
    };

    // Covering pairs settle the monotone conditions by transitivity.
    for a in 0..size {
        for k in 0..others.len() {
            if a & (1 << k) != 0 {
                continue;
            }
            let b = a | (1 << k);
            if v1[a] >= v0[a] && v1[b] < v0[b] {
                push(&mut out, &mut counts, Condition::SingleCrossingWeak, a, b);
            }
            if v1[a] > v0[a] && v1[b] <= v0[b] {
                push(&mut out, &mut counts, Condition::SingleCrossingStrict, a, b);
            }
            if best[b] < best[a] {
                push(
                    &mut out,
                    &mut counts,
                    Condition::CommonInterestsMonotone,
                    a,
                    b,
                );
            }
        }
    }

    // The tie-break and deviation-proof clauses need every ordered pair.
    let full = size - 1;
    'outer: for b in 0..size {
        let mut a = b;
        loop {
            // Proper subsets of b, descending.
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
            if best[b] == v1[b] && best[a] == v0[a] && best[b] <= best[a] {
                push(
                    &mut out,
                    &mut counts,
                    Condition::CommonInterestsTieBreak,
                    a,
                    b,
                );
            }
            if v1[b] >= v0[a] && v1[b] < v0[b] {
                push(&mut out, &mut counts, Condition::DeviationProofWeak, a, b);
            }
            if v1[b] > v0[a] && v1[b] <= v0[b] {
                push(&mut out, &mut counts, Condition::DeviationProofStrict, a, b);
            }
            let saturated = [
                Condition::CommonInterestsTieBreak,
                Condition::DeviationProofWeak,
                Condition::DeviationProofStrict,
            ]
            .iter()
            .all(|c| counts[*c as usize] >= WITNESS_CAP);
            if saturated {
                break 'outer;
            }
        }
    }

    if v1[full] <= v0[full] {
        push(&mut out, &mut counts, Condition::NondegenerateTop, 0, full);
    }
    if v0[0] <= v1[0] {
        push(
            &mut out,
            &mut counts,
            Condition::NondegenerateBottom,
            0,
            full,
        );
    }
    out
}

/// Least pure Nash equilibrium of the contextual game, by best-response
/// iteration from the all-zero profile. Returns a subset of the active
/// players.
pub fn least_ne(game: &StageGame, ctx: Context) -> Result<PlayerSet> {
    ctx.check(game)?;
    game.require_assumptions()?;
    Ok(least_ne_unchecked(game, ctx))
}

pub(crate) fn least_ne_unchecked(game: &StageGame, ctx: Context) -> PlayerSet {
    let mut x = PlayerSet::EMPTY;
    for _ in 0..=ctx.active.len() {
        let next = game.up(x.union(ctx.ones)).intersection(ctx.active);
        if next == x {
            break;
        }
        x = next;
    }
    x
}

/// Whether `x` (a subset of the active players) is a Nash equilibrium of
/// the contextual game.
pub fn is_ne(game: &StageGame, ctx: Context, x: PlayerSet) -> bool {
    let y = x.union(ctx.ones);
    ctx.active.difference(x).is_disjoint(game.up(y)) && x.is_disjoint(game.down(y))
}

/// All pure Nash equilibria of the contextual game, in increasing bitmask
/// order.
pub fn ne_set(game: &StageGame, ctx: Context) -> Result<Vec<PlayerSet>> {
    ctx.check(game)?;
    game.require_assumptions()?;
    Ok(ne_set_unchecked(game, ctx))
}

pub(crate) fn ne_set_unchecked(game: &StageGame, ctx: Context) -> Vec<PlayerSet> {
    ctx.active
        .subsets()
        .filter(|&x| is_ne(game, ctx, x))
        .collect()
}

/// Whether every member of `x` strictly prefers 1 at `x`.
pub fn is_strictly_sufficient(game: &StageGame, ctx: Context, x: PlayerSet) -> bool {
    !x.is_empty() && x.is_subset(game.up(x.union(ctx.ones)))
}

/// Strictly sufficient sets of the contextual game (nonempty coalitions in
/// which every member strictly prefers 1); with `require_ne`, only those
/// that are also Nash equilibria.
pub fn sss(game: &StageGame, ctx: Context, require_ne: bool) -> Result<Vec<PlayerSet>> {
    ctx.check(game)?;
    Ok(sss_unchecked(game, ctx, require_ne))
}

pub(crate) fn sss_unchecked(game: &StageGame, ctx: Context, require_ne: bool) -> Vec<PlayerSet> {
    ctx.active
        .subsets()
        .filter(|&x| is_strictly_sufficient(game, ctx, x) && (!require_ne || is_ne(game, ctx, x)))
        .collect()
}

/// Iterated elimination of strictly dominated actions in the contextual
/// game. Dominance is tested against every surviving opponent profile.
/// Returns the per-player least and greatest surviving actions as subsets
/// of the active players.
pub fn iesds(game: &StageGame, ctx: Context) -> Result<(PlayerSet, PlayerSet)> {
    ctx.check(game)?;
    Ok(iesds_unchecked(game, ctx))
}

pub(crate) fn iesds_unchecked(game: &StageGame, ctx: Context) -> (PlayerSet, PlayerSet) {
    let s = ctx.active;
    // Players for whom action 0 (resp. 1) still survives.
    let mut can0 = s;
    let mut can1 = s;
    loop {
        let mut changed = false;
        for i in s.iter() {
            if !(can0.contains(i) && can1.contains(i)) {
                continue;
            }
            let fixed1 = can1.difference(can0).union(ctx.ones);
            let free = can0.intersection(can1).without(i);
            let one_dominates = free.subsets().all(|f| game.up(fixed1.union(f)).contains(i));
            if one_dominates {
                can0 = can0.without(i);
                changed = true;
                continue;
            }
            let zero_dominates = free
                .subsets()
                .all(|f| game.down(fixed1.union(f)).contains(i));
            if zero_dominates {
                can1 = can1.without(i);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (s.difference(can0), can1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(xs: &[usize]) -> PlayerSet {
        PlayerSet::from_indices(xs.iter().map(|x| x - 1))
    }

    #[test]
    fn table_payoffs_match_matrix() {
        let g = catalog::mixed_pledge_game();
        assert_eq!(g.payoff(0, set(&[1, 2])).unwrap(), Payoff::from_integer(2));
        assert_eq!(g.payoff(1, set(&[1, 2])).unwrap(), Payoff::from_integer(3));
        assert_eq!(
            g.payoff(0, PlayerSet::EMPTY).unwrap(),
            Payoff::from_integer(1)
        );
        assert!(g.payoff(2, PlayerSet::EMPTY).is_err());
    }

    #[test]
    fn star_center_payoff() {
        let g = catalog::star(6);
        assert_eq!(
            g.payoff(0, PlayerSet::full(7)).unwrap(),
            Payoff::from_integer(1)
        );
    }

    #[test]
    fn mixed_pledge_game_fails_deviation_proof() {
        let g = catalog::mixed_pledge_game();
        let r = check_assumptions(&g);
        assert!(!r.deviation_proof);
        assert!(r.single_crossing);
        for w in &r.witnesses {
            assert!(w.replays(&g), "{w}");
        }
    }

    #[test]
    fn tie_break_violation_detected() {
        let g = catalog::tie_break_violation();
        let r = check_assumptions(&g);
        assert!(!r.common_interests);
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.condition == Condition::CommonInterestsTieBreak));
        for w in &r.witnesses {
            assert!(w.replays(&g), "{w}");
        }
    }

    #[test]
    fn weakest_link_passes_all() {
        let g = catalog::square_weakest_link();
        assert!(check_assumptions(&g).all());
        let g = catalog::twin_triangles();
        assert!(check_assumptions(&g).all());
    }

    #[test]
    fn ne_of_square() {
        let g = catalog::square_weakest_link();
        let ne = ne_set(&g, Context::full(4)).unwrap();
        assert_eq!(ne, vec![PlayerSet::EMPTY, set(&[1, 2]), set(&[1, 2, 3, 4])]);
    }

    #[test]
    fn ne_of_twin_triangles() {
        let g = catalog::twin_triangles();
        let ne = ne_set(&g, Context::full(8)).unwrap();
        assert_eq!(
            ne,
            vec![
                PlayerSet::EMPTY,
                set(&[1, 2, 3]),
                set(&[4, 5, 6]),
                set(&[1, 2, 3, 4, 5, 6]),
                PlayerSet::full(8)
            ]
        );
        assert_eq!(least_ne(&g, Context::full(8)).unwrap(), PlayerSet::EMPTY);
    }

    #[test]
    fn least_ne_with_forced_player() {
        let g = catalog::square_weakest_link();
        let ctx = Context::full(4).force(set(&[1]));
        assert_eq!(least_ne(&g, ctx).unwrap(), set(&[2]));
        let brute: Vec<_> = ne_set(&g, ctx).unwrap();
        assert_eq!(brute[0], set(&[2]));
    }

    #[test]
    fn empty_context() {
        let g = catalog::square_weakest_link();
        let ctx = Context::new(PlayerSet::EMPTY, PlayerSet::EMPTY).unwrap();
        assert_eq!(least_ne(&g, ctx).unwrap(), PlayerSet::EMPTY);
        assert!(sss(&g, ctx, false).unwrap().is_empty());
    }

    #[test]
    fn iesds_examples() {
        let g = catalog::square_weakest_link();
        assert_eq!(
            iesds(&g, Context::full(4)).unwrap(),
            (PlayerSet::EMPTY, PlayerSet::full(4))
        );
        let g = StageGame::aggregative(vec![1, 1]).unwrap();
        assert_eq!(
            iesds(&g, Context::full(2)).unwrap(),
            (PlayerSet::EMPTY, PlayerSet::full(2))
        );
        let g = StageGame::from_fn(2, |i, x| {
            if x.contains(i) {
                Payoff::from_integer(1)
            } else {
                Payoff::from_integer(0)
            }
        })
        .unwrap();
        assert_eq!(
            iesds(&g, Context::full(2)).unwrap(),
            (PlayerSet::full(2), PlayerSet::full(2))
        );
    }

    #[test]
    fn sss_of_cycle_is_everyone() {
        let g = catalog::directed_cycle(8);
        assert_eq!(
            sss(&g, Context::full(8), false).unwrap(),
            vec![PlayerSet::full(8)]
        );
    }

    #[test]
    fn sse_of_twin_triangles() {
        let g = catalog::twin_triangles();
        assert_eq!(
            sss(&g, Context::full(8), true).unwrap(),
            vec![
                set(&[1, 2, 3]),
                set(&[4, 5, 6]),
                set(&[1, 2, 3, 4, 5, 6]),
                PlayerSet::full(8)
            ]
        );
    }

    #[test]
    fn single_player_is_degenerate() {
        let g = StageGame::from_fn(1, |_, x| {
            if x.is_empty() {
                Payoff::from_integer(1)
            } else {
                Payoff::from_integer(0)
            }
        })
        .unwrap();
        assert_eq!(
            ne_set(&g, Context::full(1)).unwrap(),
            vec![PlayerSet::EMPTY]
        );
        assert!(!check_assumptions(&g).nondegenerate);
    }
}
