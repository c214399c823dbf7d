//! Ordered games: players ranked so that low indices are cheap to start
//! and high indices contribute most. Such games admit a greedy horizon
//! recursion (always delete the highest index), and the aggregative case a
//! linear two-pointer scan.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::game::{self, Context, StageGame};
use crate::set::PlayerSet;
use crate::sync::Options;

/// Which ordering condition a witness breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderCondition {
    CostOrdered,
    StronglyCostOrdered,
    ContributionOrdered,
    ContributionNatural,
    /// The sequence form of the cost condition, searched over every
    /// joining order.
    CostOrderedSequence,
}

/// Players `i < j` (and `k` for the contribution conditions) with base
/// coalition `x` at which an ordering condition fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderWitness {
    pub condition: OrderCondition,
    pub i: usize,
    pub j: usize,
    pub k: Option<usize>,
    pub x: PlayerSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedFlags {
    /// Whenever `j` strictly prefers joining `X`, the cascade of strict
    /// joiners started by `j` over `X` reaches every `i < j`.
    pub cost_ordered: bool,
    /// Whenever `j` strictly prefers joining `X`, so does every `i < j`.
    pub strongly_cost_ordered: bool,
    /// Adding `j` to `X` incentivises `k` whenever adding any `i < j` does.
    pub contribution_ordered: bool,
    /// Adding `j` incentivises `k` whenever adding any other `i` does.
    pub contribution_natural: bool,
    /// Sequence form of the cost condition, when requested.
    pub cost_ordered_sequence: Option<bool>,
    /// First failure found per condition.
    pub witnesses: Vec<OrderWitness>,
}

impl OrderedFlags {
    /// Whether the greedy recursion applies.
    pub fn fast_path(&self) -> bool {
        (self.cost_ordered || self.strongly_cost_ordered)
            && (self.contribution_ordered || self.contribution_natural)
    }
}

/// Players of `pool` that join `base` one at a time, each strictly
/// preferring to join the coalition formed so far.
fn cascade(game: &StageGame, base: PlayerSet, pool: PlayerSet) -> PlayerSet {
    let mut c = base;
    loop {
        let add = game.up(c).intersection(pool).difference(c);
        if add.is_empty() {
            return c;
        }
        c = c.union(add);
    }
}

/// Every player appearing in some strict joining sequence from `start`
/// that only adds members of `pool`.
fn sequence_reach(game: &StageGame, start: PlayerSet, pool: PlayerSet) -> PlayerSet {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![start];
    let mut reached = start;
    seen.insert(start);
    while let Some(c) = stack.pop() {
        for p in game.up(c).intersection(pool).difference(c).iter() {
            let next = c.with(p);
            reached = reached.with(p);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    reached
}

/// Exhaustive check of the ordering conditions in player-index order.
/// `sequence` additionally searches every joining order for the cost
/// condition, which is exponential in the number of free players.
pub fn classify(game: &StageGame, sequence: bool, opts: Options) -> Result<OrderedFlags> {
    let n = game.n();
    let all = game.players();
    let cost = (1u128 << n) * (n as u128) * (n as u128).max(1);
    if cost > u128::from(opts.budget) {
        return Err(Error::resource("ordering checks", cost, opts.budget));
    }
    let mut flags = OrderedFlags {
        cost_ordered: true,
        strongly_cost_ordered: true,
        contribution_ordered: true,
        contribution_natural: true,
        cost_ordered_sequence: sequence.then_some(true),
        witnesses: Vec::new(),
    };
    let fail = |flags: &mut OrderedFlags, w: OrderWitness| {
        let slot = match w.condition {
            OrderCondition::CostOrdered => &mut flags.cost_ordered,
            OrderCondition::StronglyCostOrdered => &mut flags.strongly_cost_ordered,
            OrderCondition::ContributionOrdered => &mut flags.contribution_ordered,
            OrderCondition::ContributionNatural => &mut flags.contribution_natural,
            OrderCondition::CostOrderedSequence => {
                if flags.cost_ordered_sequence == Some(true) {
                    flags.cost_ordered_sequence = Some(false);
                    flags.witnesses.push(w);
                }
                return;
            }
        };
        if *slot {
            *slot = false;
            flags.witnesses.push(w);
        }
    };

    for x in all.subsets() {
        let free = all.difference(x);
        let up = game.up(x).intersection(free);
        for j in up.iter() {
            let below = free.intersection(PlayerSet::from_bits((1u32 << j) - 1));
            let w = |condition, i| OrderWitness {
                condition,
                i,
                j,
                k: None,
                x,
            };
            if let Some(i) = below.difference(up).first() {
                fail(&mut flags, w(OrderCondition::StronglyCostOrdered, i));
            }
            if flags.cost_ordered {
                let reach = cascade(game, x.with(j), free);
                if let Some(i) = below.difference(reach).first() {
                    fail(&mut flags, w(OrderCondition::CostOrdered, i));
                }
            }
            if flags.cost_ordered_sequence == Some(true) {
                let reach = sequence_reach(game, x.with(j), free);
                if let Some(i) = below.difference(reach).first() {
                    fail(&mut flags, w(OrderCondition::CostOrderedSequence, i));
                }
            }
        }
        // Contribution: who among the free players, added to `x`, tips `k`.
        for k in free.iter() {
            let others = free.without(k);
            let tips: PlayerSet = others
                .iter()
                .filter(|&i| game.up(x.with(i)).contains(k))
                .collect();
            if let Some(i) = tips.first() {
                if let Some(j) = others.difference(tips).iter().find(|&j| j > i) {
                    fail(
                        &mut flags,
                        OrderWitness {
                            condition: OrderCondition::ContributionOrdered,
                            i,
                            j,
                            k: Some(k),
                            x,
                        },
                    );
                }
                if let Some(j) = others.difference(tips).first() {
                    fail(
                        &mut flags,
                        OrderWitness {
                            condition: OrderCondition::ContributionNatural,
                            i,
                            j,
                            k: Some(k),
                            x,
                        },
                    );
                }
            }
        }
    }
    Ok(flags)
}

/// Greedy recursion for ordered games: fix the cheap prefix, otherwise
/// delete the highest-indexed remaining player.
fn solve_ordered(game: &StageGame, mut ctx: Context, strong: bool) -> Result<u32> {
    let mut stages = 1;
    loop {
        let s = ctx.active;
        let ready = game.up(ctx.ones).intersection(s);
        if strong {
            if let Some(first) = s.first().filter(|&f| ready.contains(f)) {
                ctx = ctx.force(PlayerSet::singleton(first));
                continue;
            }
        } else if let Some(k) = ready.last() {
            let prefix = s.intersection(PlayerSet::from_bits(((1u64 << (k + 1)) - 1) as u32));
            let joined = cascade(game, ctx.ones, s);
            if !prefix.is_subset(joined) {
                return Err(Error::Precondition(format!(
                    "players {} do not follow player {} into the game",
                    prefix.difference(joined),
                    k + 1
                )));
            }
            ctx = ctx.force(prefix);
            continue;
        }
        match s.last() {
            None => return Ok(stages),
            Some(top) => {
                stages += 1;
                ctx = ctx.force(PlayerSet::singleton(top));
            }
        }
    }
}

/// Horizon needed for `x` in an ordered game, by the greedy recursion over
/// strictly sufficient equilibrium supersets of `x`.
pub fn tau_ordered(game: &StageGame, x: PlayerSet, opts: Options) -> Result<u32> {
    if !x.is_subset(game.players()) {
        return Err(Error::Argument(format!("target {x} has unknown players")));
    }
    let flags = classify(game, false, opts)?;
    if !flags.fast_path() {
        return Err(Error::Precondition(
            "the game is not both cost-ordered and contribution-ordered".into(),
        ));
    }
    if x.is_empty() {
        return Ok(1);
    }
    let full = Context::full(game.n());
    let mut best = None;
    for y in game::sss_unchecked(game, full, true) {
        if y.is_superset(x) {
            let v = solve_ordered(
                game,
                Context::new(y, PlayerSet::EMPTY)?,
                flags.strongly_cost_ordered,
            )?;
            best = Some(best.map_or(v, |b: u32| b.min(v)));
        }
    }
    best.ok_or_else(|| Error::Infeasible(format!("no horizon makes all of {x} play 1")))
}

/// Two-pointer horizon of the aggregative game with nondecreasing
/// thresholds `c` (player `i` joins once `c_i` others have).
pub fn algorithm1(c: &[usize], n: usize) -> Result<u32> {
    if c.len() != n || n < 2 {
        return Err(Error::Argument(format!(
            "need one threshold per player and at least two players, got {} for {n}",
            c.len()
        )));
    }
    if c.iter().any(|&ci| ci < 1 || ci > n - 1) {
        return Err(Error::Argument(format!(
            "thresholds must lie in 1..={}",
            n - 1
        )));
    }
    if c.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Argument("thresholds must be nondecreasing".into()));
    }
    let (mut t, mut l, mut d, mut r) = (0u32, 1usize, 0usize, n);
    while l < r {
        if c[l - 1] <= d {
            l += 1;
            d += 1;
        } else {
            r -= 1;
            t += 1;
            d += 1;
        }
    }
    Ok(t + 1)
}

/// Parameters of the ordered example families. Graph parameters are
/// 0-based: player `i` hears every `j >= in_start[i]` other than itself
/// and is heard by every `j < out_end[i]` other than itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Aggregative {
        c: Vec<usize>,
    },
    /// Weakest-link game on a nested split graph whose in-neighbourhoods
    /// shrink and out-neighbourhoods grow with the index.
    AlignedNsg {
        in_start: Vec<usize>,
        out_end: Vec<usize>,
    },
    /// Threshold game on a nested split graph of the same shape with
    /// nondecreasing thresholds `k`.
    OpposedNsg {
        in_start: Vec<usize>,
        out_end: Vec<usize>,
        k: Vec<usize>,
    },
}

/// Digraph with suffix in-neighbourhoods, checked against the declared
/// prefix out-neighbourhoods and the nesting conditions.
fn nested_split_graph(in_start: &[usize], out_end: &[usize]) -> Result<Digraph> {
    let n = in_start.len();
    if n == 0 || out_end.len() != n {
        return Err(Error::Argument(format!(
            "need one in-start and one out-end per player, got {} and {}",
            in_start.len(),
            out_end.len()
        )));
    }
    if n > crate::game::MAX_GAME_PLAYERS {
        return Err(Error::Argument(format!(
            "at most {} players",
            crate::game::MAX_GAME_PLAYERS
        )));
    }
    let all = PlayerSet::full(n);
    let in_sets: Vec<PlayerSet> = (0..n)
        .map(|i| {
            all.difference(PlayerSet::full(in_start[i].min(n)))
                .without(i)
        })
        .collect();
    let g = Digraph::from_in_sets(&in_sets)?;
    for (i, &end) in out_end.iter().enumerate().take(n) {
        let want = PlayerSet::full(end.min(n)).without(i);
        if g.out_neighbors(i) != want {
            return Err(Error::Argument(format!(
                "player {} is heard by {}, but its out-end declares {}",
                i + 1,
                g.out_neighbors(i),
                want
            )));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.in_neighbors(j).is_subset(g.in_neighbors(i).with(i)) {
                return Err(Error::Argument(format!(
                    "in-neighbourhood of {} is not nested in that of {}",
                    j + 1,
                    i + 1
                )));
            }
            if !g.out_neighbors(i).is_subset(g.out_neighbors(j).with(j)) {
                return Err(Error::Argument(format!(
                    "out-neighbourhood of {} is not nested in that of {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(g)
}

/// Builds a game of one of the ordered families.
pub fn generate(kind: &Generator) -> Result<StageGame> {
    match kind {
        Generator::Aggregative { c } => {
            if c.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Argument("thresholds must be nondecreasing".into()));
            }
            StageGame::aggregative(c.clone())
        }
        Generator::AlignedNsg { in_start, out_end } => {
            let g = nested_split_graph(in_start, out_end)?;
            // Each player hears only later players, except that the last
            // two players may hear each other.
            for i in 0..g.n() {
                let below = g.in_neighbors(i).first().is_some_and(|f| f < i);
                let pair = i + 1 == g.n()
                    && i > 0
                    && g.in_neighbors(i).first() == Some(i - 1)
                    && g.in_neighbors(i - 1).first() == Some(i);
                if below && !pair {
                    return Err(Error::Argument(format!(
                        "player {} hears an earlier player and is not the last of a mutual top pair",
                        i + 1
                    )));
                }
            }
            StageGame::weakest_link(g)
        }
        Generator::OpposedNsg {
            in_start,
            out_end,
            k,
        } => {
            let g = nested_split_graph(in_start, out_end)?;
            if k.len() != g.n() {
                return Err(Error::Argument(format!(
                    "need {} thresholds, got {}",
                    g.n(),
                    k.len()
                )));
            }
            if k.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Argument("thresholds must be nondecreasing".into()));
            }
            StageGame::threshold(g, k.clone())
        }
    }
}
