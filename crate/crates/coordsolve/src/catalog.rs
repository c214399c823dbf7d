//! Reference instances used in examples, tests and the CLI fixtures.
//! Players are 0-based here; doc comments use the 1-based labels.

use crate::digraph::Digraph;
use crate::game::{Payoff, StageGame};
use crate::set::PlayerSet;

fn int(v: i64) -> Payoff {
    Payoff::from_integer(v)
}

fn a(x: PlayerSet, i: usize) -> i64 {
    i64::from(x.contains(i))
}

fn all_in(x: PlayerSet, players: &[usize]) -> i64 {
    i64::from(players.iter().all(|&p| x.contains(p)))
}

fn weakest_link(n: usize, edges: &[(usize, usize)]) -> StageGame {
    let g = Digraph::new(n, edges).expect("catalog graph is valid");
    StageGame::weakest_link(g).expect("catalog game is valid")
}

fn one_based(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect()
}

/// Two players; player 1 has the dominant action 0 but gains from a
/// credible pledge, player 2 copies player 1.
///
/// | 1 \ 2 | 0    | 1    |
/// |-------|------|------|
/// | 0     | 1, 1 | 3, 0 |
/// | 1     | 0, 2 | 2, 3 |
pub fn mixed_pledge_game() -> StageGame {
    StageGame::table(vec![
        vec![int(1), int(0), int(3), int(2)],
        vec![int(1), int(2), int(0), int(3)],
    ])
    .expect("valid table")
}

/// `u1 = 2 a3 - a1`, `u2 = 2 a3 - a2`, `u3 = a3 (2 max(a1, a2) - 1)`.
/// Players 1 and 2 free-ride on each other's pledge.
pub fn free_rider_triple() -> StageGame {
    StageGame::from_fn(3, |i, x| {
        int(match i {
            0 => 2 * a(x, 2) - a(x, 0),
            1 => 2 * a(x, 2) - a(x, 1),
            _ => a(x, 2) * (2 * a(x, 0).max(a(x, 1)) - 1),
        })
    })
    .expect("valid table")
}

/// Weakest-link game on `1->2, 1->4, 2->1, 2->3, 3->4, 4->3`.
pub fn square_weakest_link() -> StageGame {
    weakest_link(
        4,
        &one_based(&[(1, 2), (1, 4), (2, 1), (2, 3), (3, 4), (4, 3)]),
    )
}

/// Two bidirected triangles `{1,2,3}` and `{4,5,6}` both pointing at 7,
/// with 7 and 8 pointing at each other.
pub fn twin_triangles() -> StageGame {
    weakest_link(
        8,
        &one_based(&[
            (1, 2),
            (1, 3),
            (2, 1),
            (2, 3),
            (3, 1),
            (3, 2),
            (4, 5),
            (4, 6),
            (5, 4),
            (5, 6),
            (6, 4),
            (6, 5),
            (3, 7),
            (6, 7),
            (8, 7),
            (7, 8),
        ]),
    )
}

/// Weakest-link star: centre 1 linked both ways to `leaves` leaves.
pub fn star(leaves: usize) -> StageGame {
    let edges: Vec<_> = (1..=leaves).flat_map(|l| [(0, l), (l, 0)]).collect();
    weakest_link(leaves + 1, &edges)
}

/// Weakest-link game on the directed cycle `1 -> 2 -> ... -> n -> 1`.
pub fn directed_cycle(n: usize) -> StageGame {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    weakest_link(n, &edges)
}

/// Bidirected clique on `{1,2,3,4}`; player 1 additionally points at each
/// of `5..9`.
pub fn clique_with_fan() -> StageGame {
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                edges.push((i, j));
            }
        }
    }
    for j in 4..9 {
        edges.push((0, j));
    }
    weakest_link(9, &edges)
}

/// Disjoint bidirected cliques of the given sizes, numbered consecutively.
pub fn disjoint_cliques(sizes: &[usize]) -> StageGame {
    let mut edges = Vec::new();
    let mut start = 0;
    for &s in sizes {
        for i in start..start + s {
            for j in start..start + s {
                if i != j {
                    edges.push((i, j));
                }
            }
        }
        start += s;
    }
    weakest_link(start, &edges)
}

/// Eight players where 1 and 2 coordinate on top of two triangles
/// `{3,4,5}` and `{6,7,8}`; the best-reply value of 1 and 2 jumps when the
/// first triangle joins regardless of their own action, breaking the
/// tie-break clause of common interests.
///
/// `u1 = max(a1 (4 a2 - 3 + a3 a4 a5 + a6 a7 a8), 2 a3 a4 a5)`, `u2`
/// symmetric, the triangles are weakest-link.
pub fn tie_break_violation() -> StageGame {
    StageGame::from_fn(8, |i, x| {
        let t1 = all_in(x, &[2, 3, 4]);
        let t2 = all_in(x, &[5, 6, 7]);
        let pair =
            |me: usize, other: usize| (a(x, me) * (4 * a(x, other) - 3 + t1 + t2)).max(2 * t1);
        int(match i {
            0 => pair(0, 1),
            1 => pair(1, 0),
            2 => a(x, 2) * (2 * all_in(x, &[3, 4]) - 1),
            3 => a(x, 3) * (2 * all_in(x, &[2, 4]) - 1),
            4 => a(x, 4) * (2 * all_in(x, &[2, 3]) - 1),
            5 => a(x, 5) * (2 * all_in(x, &[6, 7]) - 1),
            6 => a(x, 6) * (2 * all_in(x, &[5, 7]) - 1),
            _ => a(x, 7) * (2 * all_in(x, &[5, 6]) - 1),
        })
    })
    .expect("valid table")
}

/// Seven players whose unique all-ones two-cell schedule is
/// `({1,4}, {2,3,5,6,7})`.
///
/// `u1 = a1 (2 a2 a3 - 1) + 2 a5`, `u2 = a2 (2 a1 - 1)`,
/// `u3 = a3 (2 a1 - 1)`, `u4 = a4 (2 a1 a5 a6 a7 - 1)`,
/// `u5 = a5 (2 max(a4, a6 a7) - 1)` and cyclically for 6 and 7.
pub fn two_stage_design_game() -> StageGame {
    StageGame::from_fn(7, |i, x| {
        int(match i {
            0 => a(x, 0) * (2 * all_in(x, &[1, 2]) - 1) + 2 * a(x, 4),
            1 => a(x, 1) * (2 * a(x, 0) - 1),
            2 => a(x, 2) * (2 * a(x, 0) - 1),
            3 => a(x, 3) * (2 * all_in(x, &[0, 4, 5, 6]) - 1),
            4 => a(x, 4) * (2 * a(x, 3).max(all_in(x, &[5, 6])) - 1),
            5 => a(x, 5) * (2 * a(x, 3).max(all_in(x, &[4, 6])) - 1),
            _ => a(x, 6) * (2 * a(x, 3).max(all_in(x, &[4, 5])) - 1),
        })
    })
    .expect("valid table")
}

/// Five players: a triangle `{1,2,3}` and a pair `{4,5}` fed by player 1.
///
/// `u_i = 2 min(a1, a2, a3) - a_i` for `i = 1, 2, 3`,
/// `u4 = 2 min(a1, a4, a5) - a4`, `u5 = 2 min(a4, a5) - a5`, plus a
/// spillover `eps * a4` on `u1`. With `eps = 0` the triangle alone is a
/// subgame-perfect outcome of the three-stage game; any `eps > 0` removes it.
pub fn spillover_game(eps: Payoff) -> StageGame {
    StageGame::from_fn(5, |i, x| {
        let tri = all_in(x, &[0, 1, 2]);
        match i {
            0 => int(2 * tri - a(x, 0)) + eps * int(a(x, 3)),
            1 | 2 => int(2 * tri - a(x, i)),
            3 => int(2 * all_in(x, &[0, 3, 4]) - a(x, 3)),
            _ => int(2 * all_in(x, &[3, 4]) - a(x, 4)),
        }
    })
    .expect("valid table")
}

/// Nested split graph on six players: 5 and 6 point at each other and at
/// every other player, 3 and 4 point at 1 and 2.
pub fn nested_split_example() -> StageGame {
    weakest_link(
        6,
        &one_based(&[
            (6, 1),
            (6, 2),
            (6, 3),
            (6, 4),
            (6, 5),
            (5, 1),
            (5, 2),
            (5, 3),
            (5, 4),
            (5, 6),
            (4, 1),
            (4, 2),
            (3, 1),
            (3, 2),
        ]),
    )
}

/// In-set starts of [`nested_split_example`], 0-based: player `i` listens to
/// every `j >= NESTED_SPLIT_IN[i]` other than itself.
pub const NESTED_SPLIT_IN: [usize; 6] = [2, 2, 4, 4, 5, 4];

/// Out-set ends of [`nested_split_example`], 0-based and exclusive: player
/// `i` points at every `j < NESTED_SPLIT_OUT[i]` other than itself.
pub const NESTED_SPLIT_OUT: [usize; 6] = [0, 0, 2, 2, 6, 6];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::check_assumptions;

    #[test]
    fn catalog_games_build() {
        assert_eq!(star(6).n(), 7);
        assert_eq!(directed_cycle(8).n(), 8);
        assert_eq!(clique_with_fan().n(), 9);
        assert_eq!(disjoint_cliques(&[2, 3]).n(), 5);
        assert_eq!(nested_split_example().graph().unwrap().edge_count(), 14);
    }

    #[test]
    fn design_game_breaks_deviation_proof_for_first_player() {
        let r = check_assumptions(&two_stage_design_game());
        assert!(r.single_crossing);
        assert!(r.nondegenerate);
        assert!(!r.deviation_proof);
        assert!(r.witnesses.iter().all(|w| w.player == 0));
    }

    #[test]
    fn spillover_games_satisfy_assumptions() {
        assert!(check_assumptions(&spillover_game(Payoff::from_integer(0))).assumption1());
        assert!(check_assumptions(&spillover_game(Payoff::new(1, 2))).assumption1());
    }

    #[test]
    fn free_rider_triple_breaks_deviation_proof() {
        let r = check_assumptions(&free_rider_triple());
        assert!(r.single_crossing);
        assert!(!r.deviation_proof);
    }
}
