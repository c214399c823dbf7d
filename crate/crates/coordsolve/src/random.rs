//! Seeded random instances for property tests, benchmarks and sweeps.
//!
//! Games have the form `u_i(X) = [i in X] g_i(X \ i) + h_i(X \ i)` with `g_i`
//! nondecreasing and never zero, and `h_i` a small nondecreasing spillover.
//! Monotone `g_i` gives single crossing and common interests; keeping every
//! spillover below the smallest `|g_i|` keeps pledges from paying off
//! without an incentive to follow through.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::exec;
use crate::game::{Payoff, StageGame};
use crate::ordered::Generator;
use crate::set::PlayerSet;

/// Shape of random games.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameSpec {
    pub n: usize,
    /// Add positive spillovers to both actions.
    pub spillovers: bool,
    /// Require every player to prefer 0 when nobody else plays 1 and 1
    /// when everybody else does. Ignored for a single player, who cannot
    /// satisfy both.
    pub nondegenerate: bool,
}

impl GameSpec {
    pub fn new(n: usize) -> Self {
        GameSpec {
            n,
            spillovers: true,
            nondegenerate: true,
        }
    }
}

/// One player's incentive: `-d + sum w_j [j in c] + sum b_k [E_k within c]`.
struct Incentive {
    d: i64,
    w: Vec<i64>,
    blocks: Vec<(PlayerSet, i64)>,
    spill: Vec<i64>,
}

impl Incentive {
    fn draw<R: Rng>(rng: &mut R, i: usize, spec: GameSpec) -> Incentive {
        let n = spec.n;
        let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        loop {
            let w: Vec<i64> = (0..n)
                .map(|j| if j == i { 0 } else { 2 * rng.gen_range(0..=2) })
                .collect();
            let blocks: Vec<(PlayerSet, i64)> = (0..2)
                .map(|_| {
                    let set: PlayerSet = others
                        .iter()
                        .copied()
                        .filter(|_| rng.gen_bool(0.5))
                        .collect();
                    let bonus = 2 * rng.gen_range(0..=3);
                    (set, if set.is_empty() { 0 } else { bonus })
                })
                .collect();
            let total: i64 = w.iter().sum::<i64>() + blocks.iter().map(|b| b.1).sum::<i64>();
            let (lo, hi) = if spec.nondegenerate && !others.is_empty() {
                (0, total / 2 - 1)
            } else {
                (-1, total / 2)
            };
            if hi < lo {
                continue;
            }
            let d = 2 * rng.gen_range(lo..=hi) + 1;
            let spill = (0..n)
                .map(|j| {
                    if spec.spillovers && j != i {
                        rng.gen_range(0..=2)
                    } else {
                        0
                    }
                })
                .collect();
            return Incentive {
                d,
                w,
                blocks,
                spill,
            };
        }
    }

    fn gain(&self, c: PlayerSet) -> i64 {
        -self.d
            + c.iter().map(|j| self.w[j]).sum::<i64>()
            + self
                .blocks
                .iter()
                .filter(|(e, _)| e.is_subset(c))
                .map(|b| b.1)
                .sum::<i64>()
    }

    fn spillover(&self, c: PlayerSet) -> i64 {
        c.iter().map(|j| self.spill[j]).sum()
    }
}

/// A random game satisfying single crossing, common interests and
/// deviation-proofness.
pub fn random_game<R: Rng>(rng: &mut R, spec: GameSpec) -> StageGame {
    let n = spec.n;
    let players: Vec<Incentive> = (0..n).map(|i| Incentive::draw(rng, i, spec)).collect();
    // Spillover units of 1 / (2n) sum to less than 1 <= |g|.
    let unit = 2 * n.max(1) as i64;
    StageGame::from_fn(n, |i, x| {
        let c = x.without(i);
        let p = &players[i];
        let g = if x.contains(i) { p.gain(c) } else { 0 };
        Payoff::new(g * unit + p.spillover(c), unit)
    })
    .expect("random games stay within the table limit")
}

/// A random digraph with each ordered pair an edge with probability `p`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Digraph::new(n, &edges).expect("random edges are valid")
}

/// Nondecreasing thresholds in `1..=n-1`.
pub fn random_thresholds<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut c: Vec<usize> = (0..n).map(|_| rng.gen_range(1..n.max(2))).collect();
    c.sort_unstable();
    c
}

/// Out-ends matching suffix in-neighbourhoods given by `in_start`.
fn out_ends(in_start: &[usize]) -> Vec<usize> {
    let n = in_start.len();
    (0..n)
        .map(|m| {
            (0..n)
                .filter(|&j| j != m && in_start[j] <= m)
                .max()
                .map_or(0, |j| j + 1)
        })
        .collect()
}

/// Parameters of a random weakest-link game on a nested split graph where
/// each player hears only later players, optionally with a mutual top
/// pair. Requires `n >= 2`.
pub fn random_aligned<R: Rng>(rng: &mut R, n: usize) -> Generator {
    let pair = n >= 3 && rng.gen_bool(0.5);
    let cap = if pair { n - 2 } else { n };
    let mut in_start = vec![0; n];
    let mut prev = 0;
    let free = if pair { n - 2 } else { n };
    for (j, slot) in in_start.iter_mut().enumerate().take(free) {
        let lo = prev.max(j + 1).min(cap);
        let v = rng.gen_range(lo..=cap);
        *slot = v;
        prev = v;
    }
    if pair {
        in_start[n - 2] = n - 1;
        in_start[n - 1] = n - 2;
    }
    let out_end = out_ends(&in_start);
    Generator::AlignedNsg { in_start, out_end }
}

/// Parameters of a random threshold game on a nested split graph with
/// nondecreasing in-starts and thresholds. Requires `n >= 2`.
pub fn random_opposed<R: Rng>(rng: &mut R, n: usize) -> Generator {
    loop {
        let mut in_start: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        in_start.sort_unstable();
        let size: Vec<usize> = (0..n)
            .map(|i| (in_start[i]..n).filter(|&j| j != i).count())
            .collect();
        let mut k = Vec::with_capacity(n);
        let mut prev = 1;
        let mut ok = true;
        for &s in &size {
            if s < prev {
                ok = false;
                break;
            }
            let v = rng.gen_range(prev..=s);
            k.push(v);
            prev = v;
        }
        if ok {
            let out_end = out_ends(&in_start);
            return Generator::OpposedNsg {
                in_start,
                out_end,
                k,
            };
        }
    }
}

/// A random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Independent generator for item `index` of the sweep seeded by `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `f` on `count` items, each with its own generator, in parallel
/// when available. Results are in index order and independent of the
/// thread count.
pub fn sweep<T, F>(seed: u64, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    exec::map_range(count, |k| f(k, &mut stream(seed, k as u64)))
}
