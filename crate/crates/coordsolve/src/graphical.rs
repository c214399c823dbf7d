//! Weakest-link games and sufficient graphs.
//!
//! For a weakest-link game the horizon needed by a target `X` is the
//! tree-depth of the graph induced on everything that can reach `X`. Every
//! game satisfying the standing assumptions has a weakest-link game with
//! the same horizons, built from an optimal policy tree.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::exec;
use crate::game::{Context, StageGame};
use crate::set::PlayerSet;
use crate::sync::{Op, Options, PolicyNode, SyncSolver};

/// A digraph whose in-neighbourhoods strictly incentivise every player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficientGraph {
    pub graph: Digraph,
    /// Whether no in-edge can be dropped at any player.
    pub minimal: bool,
}

/// The weakest-link game on `g`.
pub fn weakest_link_game(g: Digraph) -> Result<StageGame> {
    StageGame::weakest_link(g)
}

/// Horizon needed for `x` in the weakest-link game on `g`: the tree-depth
/// of `g` restricted to `reach(x)`, and 1 for the empty target.
pub fn tau_weakest_link(g: &Digraph, x: PlayerSet) -> u32 {
    if x.is_empty() {
        return 1;
    }
    g.tree_depth_value(g.reach(x))
}

/// Whether every member `i` of `m` strictly prefers 1 when exactly its
/// in-neighbours within `m` play 1.
pub fn is_sufficient(game: &StageGame, g: &Digraph, m: PlayerSet) -> bool {
    g.n() == game.n()
        && m.iter()
            .all(|i| game.up(g.in_neighbors(i).intersection(m)).contains(i))
}

/// Whether `g` is sufficient on all players and no single in-edge can be
/// dropped.
pub fn is_minimal_sufficient(game: &StageGame, g: &Digraph) -> bool {
    let all = game.players();
    is_sufficient(game, g, all)
        && all.iter().all(|i| {
            let e = g.in_neighbors(i);
            e.iter().all(|j| !game.up(e.without(j)).contains(i))
        })
}

/// All inclusion-minimal `E` within `pool` (which must exclude `i`) with
/// `u_i(E + i) > u_i(E)`, in lexicographic order.
fn minimal_within(game: &StageGame, i: usize, pool: PlayerSet) -> Vec<PlayerSet> {
    let size = 1usize << pool.len();
    let sat: Vec<bool> = (0..size)
        .map(|c| game.up(PlayerSet::expand(c, pool)).contains(i))
        .collect();
    // below[c]: some proper subset of c is satisfying.
    let mut below = vec![false; size];
    let mut out = Vec::new();
    for c in 0..size {
        let mut rest = c;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sub = c ^ bit;
            if sat[sub] || below[sub] {
                below[c] = true;
                break;
            }
        }
        if sat[c] && !below[c] {
            out.push(PlayerSet::expand(c, pool));
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// All inclusion-minimal sets `E` of other players such that player `i`
/// strictly prefers 1 when exactly `E` plays 1, in lexicographic order.
pub fn minimal_satisfying_sets(game: &StageGame, i: usize) -> Result<Vec<PlayerSet>> {
    if i >= game.n() {
        return Err(Error::Argument(format!(
            "player index {i} out of range for {} players",
            game.n()
        )));
    }
    Ok(minimal_within(game, i, game.players().without(i)))
}

/// In-neighbourhoods read off an optimal policy: a divide points the first
/// part at the second, a dominate points the player at the rest, a delete
/// links the player both ways with the rest.
fn policy_edges(node: &PolicyNode, in_sets: &mut [PlayerSet]) {
    let s = node.context.active;
    match node.op {
        Some(Op::Dominate(i)) => {
            for j in s.without(i).iter() {
                in_sets[j] = in_sets[j].with(i);
            }
        }
        Some(Op::Delete(i)) => {
            for j in s.without(i).iter() {
                in_sets[j] = in_sets[j].with(i);
                in_sets[i] = in_sets[i].with(j);
            }
        }
        Some(Op::Divide(x)) => {
            for j in s.difference(x).iter() {
                in_sets[j] = in_sets[j].union(x);
            }
        }
        None => {}
    }
    for c in &node.children {
        policy_edges(c, in_sets);
    }
}

/// Builds a sufficient graph from the optimal policy rooted at `root`,
/// then prunes each in-neighbourhood to its lexicographically smallest
/// minimal satisfying subset. Players outside the root get no in-edges.
pub(crate) fn policy_graph(solver: &mut SyncSolver<'_>, root: Context) -> Result<Digraph> {
    let game = solver.game();
    let policy = solver.policy(root)?;
    let mut in_sets = vec![PlayerSet::EMPTY; game.n()];
    policy_edges(&policy, &mut in_sets);
    let members = root.active.union(root.ones);
    let mut pruned = vec![PlayerSet::EMPTY; game.n()];
    for i in members.iter() {
        let pool = in_sets[i];
        let choice = minimal_within(game, i, pool).into_iter().next();
        pruned[i] = choice.ok_or_else(|| {
            Error::Internal(format!(
                "policy in-neighbourhood {pool} does not incentivise player {}",
                i + 1
            ))
        })?;
    }
    Digraph::from_in_sets(&pruned)
}

/// A minimal sufficient graph whose weakest-link game has the same horizon
/// for every target as `game`.
pub fn reduce_to_weakest_link(game: &StageGame, opts: Options) -> Result<SufficientGraph> {
    let mut solver = SyncSolver::new(game, opts)?;
    let root = solver.root(Context::full(game.n()))?;
    if root.active != game.players() {
        return Err(Error::Precondition(format!(
            "players {} never play 1, so no sufficient graph exists",
            game.players().difference(root.active)
        )));
    }
    let graph = policy_graph(&mut solver, root)?;
    Ok(SufficientGraph {
        minimal: is_minimal_sufficient(game, &graph),
        graph,
    })
}

/// Horizon for `x` as the minimum, over all minimal sufficient graphs, of
/// the weakest-link horizon. The number of graphs is capped by
/// `opts.graph_budget`.
pub fn tau_via_graphs(game: &StageGame, x: PlayerSet, opts: Options) -> Result<u32> {
    if !x.is_subset(game.players()) {
        return Err(Error::Argument(format!("target {x} has unknown players")));
    }
    let choices: Vec<Vec<PlayerSet>> = exec::map_range(game.n(), |i| {
        minimal_within(game, i, game.players().without(i))
    });
    if let Some(i) = choices.iter().position(|c| c.is_empty()) {
        return Err(Error::Precondition(format!(
            "player {} has no satisfying set of partners",
            i + 1
        )));
    }
    let product = choices
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    if product > u128::from(opts.graph_budget) {
        return Err(Error::resource(
            "minimal sufficient graph product",
            product,
            opts.graph_budget,
        ));
    }
    let best = exec::min_range(product as u64, |mut code| {
        let mut in_sets = Vec::with_capacity(choices.len());
        for c in &choices {
            let k = c.len() as u64;
            in_sets.push(c[(code % k) as usize]);
            code /= k;
        }
        let g = Digraph::from_in_sets(&in_sets).expect("satisfying sets exclude the player");
        tau_weakest_link(&g, x)
    });
    best.ok_or_else(|| Error::Internal("empty graph product".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::game::ne_set;
    use crate::sync;

    fn set(xs: &[usize]) -> PlayerSet {
        PlayerSet::from_indices(xs.iter().map(|x| x - 1))
    }

    #[test]
    fn weakest_link_examples() {
        let g = catalog::clique_with_fan();
        let gr = g.graph().unwrap();
        assert_eq!(tau_weakest_link(gr, set(&[5, 6, 7, 8, 9])), 4);
        let star = catalog::star(6);
        assert_eq!(
            tau_weakest_link(star.graph().unwrap(), PlayerSet::full(7)),
            2
        );
        assert_eq!(tau_weakest_link(star.graph().unwrap(), PlayerSet::EMPTY), 1);
    }

    #[test]
    fn star_equilibria_include_extremes() {
        let g = catalog::star(6);
        let ne = ne_set(&g, Context::full(7)).unwrap();
        assert!(ne.contains(&PlayerSet::EMPTY));
        assert!(ne.contains(&PlayerSet::full(7)));
    }

    #[test]
    fn minimal_sets_of_weakest_link_are_in_neighbourhoods() {
        let g = catalog::square_weakest_link();
        for i in 0..4 {
            assert_eq!(
                minimal_satisfying_sets(&g, i).unwrap(),
                vec![g.graph().unwrap().in_neighbors(i)]
            );
        }
    }

    #[test]
    fn minimal_sets_of_aggregative_are_k_subsets() {
        let g = StageGame::aggregative(vec![2; 4]).unwrap();
        let m = minimal_satisfying_sets(&g, 0).unwrap();
        assert_eq!(m, vec![set(&[2, 3]), set(&[2, 4]), set(&[3, 4])]);
    }

    #[test]
    fn dominant_player_has_empty_minimal_set() {
        let g = StageGame::weakest_link(Digraph::empty(2)).unwrap();
        assert_eq!(
            minimal_satisfying_sets(&g, 0).unwrap(),
            vec![PlayerSet::EMPTY]
        );
    }

    #[test]
    fn reduction_preserves_horizons() {
        for game in [
            catalog::twin_triangles(),
            catalog::square_weakest_link(),
            StageGame::aggregative(vec![1, 1, 2]).unwrap(),
            StageGame::aggregative(vec![2, 2, 2, 3]).unwrap(),
        ] {
            let red = reduce_to_weakest_link(&game, Options::default()).unwrap();
            assert!(is_sufficient(&game, &red.graph, game.players()));
            assert!(red.minimal);
            for i in 0..game.n() {
                let x = PlayerSet::singleton(i);
                assert_eq!(
                    sync::tau(&game, x).unwrap(),
                    tau_weakest_link(&red.graph, x)
                );
            }
        }
    }

    #[test]
    fn twin_triangle_reduction_depths() {
        let red = reduce_to_weakest_link(&catalog::twin_triangles(), Options::default()).unwrap();
        let mut depths: Vec<u32> = red
            .graph
            .scc()
            .into_iter()
            .map(|c| red.graph.tree_depth_value(c))
            .collect();
        depths.sort();
        assert_eq!(depths, vec![2, 3, 3]);
        assert_eq!(red.graph.tree_depth().value, 3);
    }

    #[test]
    fn single_player_reduction() {
        let g = StageGame::weakest_link(Digraph::empty(1)).unwrap();
        let red = reduce_to_weakest_link(&g, Options::default()).unwrap();
        assert_eq!(red.graph.tree_depth().value, 1);
    }

    #[test]
    fn graph_product_matches_recursion() {
        let g = StageGame::aggregative(vec![1, 1, 2]).unwrap();
        assert_eq!(
            tau_via_graphs(&g, PlayerSet::full(3), Options::default()).unwrap(),
            2
        );
        let g = catalog::twin_triangles();
        assert_eq!(
            tau_via_graphs(&g, PlayerSet::full(8), Options::default()).unwrap(),
            3
        );
    }

    #[test]
    fn graph_product_respects_budget() {
        let g = StageGame::aggregative(vec![2; 7]).unwrap();
        let opts = Options {
            graph_budget: 10,
            ..Options::default()
        };
        assert!(matches!(
            tau_via_graphs(&g, PlayerSet::full(7), opts),
            Err(Error::Resource { .. })
        ));
    }
}
