//! Directed graphs on the player set: strongly connected components,
//! reachability and exact directed tree-depth.

use std::collections::HashMap;
use std::fmt;

use crate::asynchronous::Partition;
use crate::error::{Error, Result};
use crate::set::{PlayerSet, MAX_PLAYERS};

/// A simple directed graph on vertices `0..n`. An edge `(i, j)` reads
/// `i -> j`; the in-neighbourhood `E_j` collects every such `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    in_adj: Vec<PlayerSet>,
    out_adj: Vec<PlayerSet>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Digraph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_PLAYERS {
            return Err(Error::Argument(format!(
                "at most {MAX_PLAYERS} vertices supported, got {n}"
            )));
        }
        let mut g = Digraph::empty(n);
        for &(i, j) in edges {
            g.insert(i, j)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_PLAYERS, "at most {MAX_PLAYERS} vertices supported");
        Digraph {
            n,
            in_adj: vec![PlayerSet::EMPTY; n],
            out_adj: vec![PlayerSet::EMPTY; n],
        }
    }

    /// Builds a graph from per-vertex in-neighbourhoods.
    pub fn from_in_sets(sets: &[PlayerSet]) -> Result<Self> {
        let n = sets.len();
        let mut g = Digraph::empty(n);
        for (j, s) in sets.iter().enumerate() {
            for i in s.iter() {
                g.insert(i, j)?;
            }
        }
        Ok(g)
    }

    fn insert(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::Argument(format!(
                "edge ({}, {}) out of range for {} vertices",
                i + 1,
                j + 1,
                self.n
            )));
        }
        if i == j {
            return Err(Error::Argument(format!("self-loop at vertex {}", i + 1)));
        }
        self.in_adj[j] = self.in_adj[j].with(i);
        self.out_adj[i] = self.out_adj[i].with(j);
        Ok(())
    }

    /// Copy of `self` with the edge `i -> j` added.
    pub fn with_edge(&self, i: usize, j: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert(i, j)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> PlayerSet {
        PlayerSet::full(self.n)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| self.out_adj[i].iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.in_adj.iter().map(|s| s.len()).sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.out_adj[i].contains(j)
    }

    /// `E_i`, the vertices with an edge into `i`.
    pub fn in_neighbors(&self, i: usize) -> PlayerSet {
        self.in_adj[i]
    }

    pub fn out_neighbors(&self, i: usize) -> PlayerSet {
        self.out_adj[i]
    }

    /// Strongly connected components of the whole graph.
    pub fn scc(&self) -> Vec<PlayerSet> {
        self.scc_within(self.vertices())
    }

    /// Strongly connected components of the subgraph induced on `mask`, in
    /// a topological order of the condensation (sources first).
    pub fn scc_within(&self, mask: PlayerSet) -> Vec<PlayerSet> {
        let mut t = Tarjan {
            g: self,
            mask,
            index: [u8::MAX; MAX_PLAYERS],
            low: [0; MAX_PLAYERS],
            on_stack: PlayerSet::EMPTY,
            stack: Vec::new(),
            next: 0,
            out: Vec::new(),
        };
        for v in mask.iter() {
            if t.index[v] == u8::MAX {
                t.visit(v);
            }
        }
        t.out.reverse();
        t.out
    }

    /// Whether `mask` is nonempty and strongly connected as an induced
    /// subgraph.
    pub fn is_strongly_connected_within(&self, mask: PlayerSet) -> bool {
        let Some(v) = mask.first() else {
            return false;
        };
        let fwd = self.closure_within(mask, v, &self.out_adj);
        let bwd = self.closure_within(mask, v, &self.in_adj);
        fwd == mask && bwd == mask
    }

    fn closure_within(&self, mask: PlayerSet, v: usize, adj: &[PlayerSet]) -> PlayerSet {
        let mut seen = PlayerSet::singleton(v);
        let mut frontier = seen;
        while let Some(u) = frontier.first() {
            frontier = frontier.without(u);
            let new = adj[u].intersection(mask).difference(seen);
            seen = seen.union(new);
            frontier = frontier.union(new);
        }
        seen
    }

    /// `R(X)`: every vertex with a (possibly empty) path into `X`.
    pub fn reach(&self, x: PlayerSet) -> PlayerSet {
        let mut seen = x.intersection(self.vertices());
        let mut frontier = seen;
        while let Some(u) = frontier.first() {
            frontier = frontier.without(u);
            let new = self.in_adj[u].difference(seen);
            seen = seen.union(new);
            frontier = frontier.union(new);
        }
        seen
    }

    /// Exact directed tree-depth of the whole graph with a certificate.
    pub fn tree_depth(&self) -> TreeDepth {
        self.tree_depth_within(self.vertices())
    }

    /// Exact directed tree-depth of the subgraph induced on `mask`.
    ///
    /// `td(empty) = 0`, `td(single vertex) = 1`; a strongly connected set
    /// costs one plus the best single-vertex removal; otherwise the maximum
    /// over components.
    pub fn tree_depth_within(&self, mask: PlayerSet) -> TreeDepth {
        let mut solver = TdSolver {
            g: self,
            memo: HashMap::new(),
        };
        let value = solver.td(mask);
        let roots = solver.certificate(mask);
        TreeDepth {
            value,
            cert: EliminationTree { roots },
        }
    }

    /// Tree-depth value only.
    pub fn tree_depth_value(&self, mask: PlayerSet) -> u32 {
        TdSolver {
            g: self,
            memo: HashMap::new(),
        }
        .td(mask)
    }

    /// A partition into `t` cells, no two players of a cell strongly
    /// connected in the subgraph of their cell and all later cells. Vertices
    /// at depth `d` of an optimal elimination forest go to cell `d`; unused
    /// trailing cells stay empty.
    pub fn partition_from_treedepth(&self, t: usize) -> Result<Partition> {
        self.partition_from_treedepth_within(self.vertices(), t)
            .and_then(|cells| Partition::new(self.n, cells))
    }

    /// As [`Digraph::partition_from_treedepth`] for the subgraph on `mask`;
    /// returns the raw cells, which cover `mask` only.
    pub fn partition_from_treedepth_within(
        &self,
        mask: PlayerSet,
        t: usize,
    ) -> Result<Vec<PlayerSet>> {
        let td = self.tree_depth_within(mask);
        if (td.value as usize) > t {
            return Err(Error::Infeasible(format!(
                "tree-depth {} exceeds the {t} available cells",
                td.value
            )));
        }
        let mut cells = vec![PlayerSet::EMPTY; t];
        fn place(node: &ElimNode, depth: usize, cells: &mut [PlayerSet]) {
            cells[depth] = cells[depth].with(node.vertex);
            for c in &node.children {
                place(c, depth + 1, cells);
            }
        }
        for r in &td.cert.roots {
            place(r, 0, &mut cells);
        }
        Ok(cells)
    }

    /// Whether, for every cell `t`, no two players of `cells[t]` lying in
    /// `m` are strongly connected in the subgraph induced on the later
    /// cells (including `t`) intersected with `m`.
    pub fn check_feasible_partition(&self, p: &Partition, m: PlayerSet) -> bool {
        let cells = p.cells();
        let mut suffix = PlayerSet::EMPTY;
        for cell in cells.iter().rev() {
            suffix = suffix.union(cell.intersection(m));
            let here = cell.intersection(m);
            if here.len() < 2 {
                continue;
            }
            for comp in self.scc_within(suffix) {
                if comp.intersection(here).len() > 1 {
                    return false;
                }
            }
        }
        true
    }
}

struct Tarjan<'a> {
    g: &'a Digraph,
    mask: PlayerSet,
    index: [u8; MAX_PLAYERS],
    low: [u8; MAX_PLAYERS],
    on_stack: PlayerSet,
    stack: Vec<usize>,
    next: u8,
    out: Vec<PlayerSet>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize) {
        self.index[v] = self.next;
        self.low[v] = self.next;
        self.next += 1;
        self.stack.push(v);
        self.on_stack = self.on_stack.with(v);
        for w in self.g.out_adj[v].intersection(self.mask).iter() {
            if self.index[w] == u8::MAX {
                self.visit(w);
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.on_stack.contains(w) {
                self.low[v] = self.low[v].min(self.index[w]);
            }
        }
        if self.low[v] == self.index[v] {
            let mut comp = PlayerSet::EMPTY;
            while let Some(w) = self.stack.pop() {
                self.on_stack = self.on_stack.without(w);
                comp = comp.with(w);
                if w == v {
                    break;
                }
            }
            self.out.push(comp);
        }
    }
}

struct TdSolver<'a> {
    g: &'a Digraph,
    memo: HashMap<u32, u32>,
}

impl TdSolver<'_> {
    fn td(&mut self, mask: PlayerSet) -> u32 {
        if mask.len() <= 1 {
            return mask.len() as u32;
        }
        if let Some(&v) = self.memo.get(&mask.bits()) {
            return v;
        }
        let comps = self.g.scc_within(mask);
        let value = if comps.len() > 1 {
            comps.into_iter().map(|c| self.td(c)).max().unwrap_or(0)
        } else {
            1 + self.best_removal(mask).1
        };
        self.memo.insert(mask.bits(), value);
        value
    }

    /// Lowest-index vertex minimising the tree-depth of the remainder of a
    /// strongly connected set, with that remainder's depth.
    fn best_removal(&mut self, scc: PlayerSet) -> (usize, u32) {
        let mut best: Option<(usize, u32)> = None;
        for v in scc.iter() {
            let d = self.td(scc.without(v));
            if best.is_none_or(|(_, b)| d < b) {
                best = Some((v, d));
                if d <= 1 {
                    break;
                }
            }
        }
        best.expect("strongly connected set with at least two vertices")
    }

    fn certificate(&mut self, mask: PlayerSet) -> Vec<ElimNode> {
        let mut roots = Vec::new();
        for comp in self.g.scc_within(mask) {
            if comp.len() == 1 {
                roots.push(ElimNode {
                    vertex: comp.first().unwrap(),
                    children: Vec::new(),
                });
            } else {
                let (v, _) = self.best_removal(comp);
                roots.push(ElimNode {
                    vertex: v,
                    children: self.certificate(comp.without(v)),
                });
            }
        }
        roots
    }
}

/// Exact tree-depth with its elimination forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDepth {
    pub value: u32,
    pub cert: EliminationTree,
}

/// One node per strongly connected block met during elimination: the
/// vertex removed from the block (or the block's only vertex) and the
/// forest of the remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElimNode {
    pub vertex: usize,
    pub children: Vec<ElimNode>,
}

impl ElimNode {
    /// All vertices in this subtree.
    pub fn vertices(&self) -> PlayerSet {
        self.children
            .iter()
            .fold(PlayerSet::singleton(self.vertex), |acc, c| {
                acc.union(c.vertices())
            })
    }

    pub fn depth(&self) -> u32 {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }
}

/// Elimination forest certifying a tree-depth value.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EliminationTree {
    pub roots: Vec<ElimNode>,
}

impl EliminationTree {
    pub fn depth(&self) -> u32 {
        self.roots.iter().map(|r| r.depth()).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> PlayerSet {
        self.roots
            .iter()
            .fold(PlayerSet::EMPTY, |acc, r| acc.union(r.vertices()))
    }

    /// Checks that the forest is a valid elimination of `g` restricted to
    /// `mask` and returns its depth: the root subtrees must be exactly the
    /// strongly connected components, singletons are leaves, and every
    /// larger block recurses on itself minus the removed vertex.
    pub fn replay(&self, g: &Digraph, mask: PlayerSet) -> Option<u32> {
        fn check(g: &Digraph, mask: PlayerSet, forest: &[ElimNode]) -> Option<u32> {
            let mut comps = g.scc_within(mask);
            let mut blocks: Vec<PlayerSet> = forest.iter().map(|r| r.vertices()).collect();
            comps.sort();
            blocks.sort();
            if comps != blocks {
                return None;
            }
            let mut depth = 0;
            for r in forest {
                let block = r.vertices();
                let d = if block.len() == 1 {
                    1
                } else {
                    1 + check(g, block.without(r.vertex), &r.children)?
                };
                depth = depth.max(d);
            }
            Some(depth)
        }
        check(g, mask, &self.roots)
    }
}
