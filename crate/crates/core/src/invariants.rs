//! Connectivity, cut-vertices, blocks, bipartiteness and vertex k-partiteness,
//! plus the class predicates built from them.

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::{bits, full_mask, Graph};

/// Selects one of the three extremal graph classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum ClassConstraint {
    /// Connected graphs with exactly `p` cut-vertices.
    CutVertices { p: usize },
    /// Connected graphs whose vertex k-partiteness is exactly `r`.
    KPartiteness { k: usize, r: usize },
    /// Connected bipartite graphs with vertex connectivity `kappa`.
    BipartiteConnectivity { kappa: usize },
}

impl ClassConstraint {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ClassConstraint::CutVertices { .. } => Ok(()),
            ClassConstraint::KPartiteness { k, .. } if k < 2 => {
                Err(Error::InvalidParameter(format!("k-partiteness needs k >= 2, got {k}")))
            }
            ClassConstraint::BipartiteConnectivity { kappa: 0 } => {
                Err(Error::InvalidParameter("bipartite connectivity class needs kappa >= 1".into()))
            }
            _ => Ok(()),
        }
    }
}

impl std::fmt::Display for ClassConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassConstraint::CutVertices { p } => write!(f, "cut-vertices(p={p})"),
            ClassConstraint::KPartiteness { k, r } => write!(f, "k-partiteness(k={k}, r={r})"),
            ClassConstraint::BipartiteConnectivity { kappa } => {
                write!(f, "bipartite-connectivity(kappa={kappa})")
            }
        }
    }
}

/// Vertices reachable from the lowest vertex of `within`, staying inside `within`.
fn component_of(g: &Graph, start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Whether the subgraph induced by `mask` is connected (empty counts as connected).
pub fn is_connected_within(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    component_of(g, mask.trailing_zeros() as usize, mask) == mask
}

pub fn is_connected(g: &Graph) -> bool {
    is_connected_within(g, g.vertex_mask())
}

fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Low-link DFS over a connected graph: articulation points and blocks.
struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    cut: u64,
    stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
}

impl<'a> LowLink<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.order();
        let mut ll = Self {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            cut: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        ll.dfs(0, usize::MAX);
        ll
    }

    fn dfs(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for u in bits(self.g.neighbors(v)) {
            if self.disc[u] == usize::MAX {
                children += 1;
                self.stack.push((v, u));
                self.dfs(u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    if parent != usize::MAX || children > 1 {
                        self.cut |= 1 << v;
                    }
                    let mut block = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= 1 << a | 1 << b;
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if u != parent && self.disc[u] < self.disc[v] {
                self.stack.push((v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
    }
}

/// Articulation points of a connected graph, as a vertex mask.
pub fn cut_vertices(g: &Graph) -> Result<u64> {
    require_connected(g)?;
    Ok(LowLink::run(g).cut)
}

pub fn cut_vertex_count(g: &Graph) -> Result<usize> {
    Ok(cut_vertices(g)?.count_ones() as usize)
}

/// Blocks (maximal 2-connected subgraphs and bridges) as vertex masks, sorted.
/// `K_1` is a single block.
pub fn block_decomposition(g: &Graph) -> Result<Vec<u64>> {
    require_connected(g)?;
    if g.order() == 1 {
        return Ok(vec![1]);
    }
    let mut blocks = LowLink::run(g).blocks;
    blocks.sort_unstable();
    Ok(blocks)
}

/// Vertex connectivity: the smallest separator, or `n - 1` when none exists.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    require_connected(g)?;
    let n = g.order();
    precondition(n >= 2, || "vertex connectivity needs n >= 2".into())?;
    let all = g.vertex_mask();
    for size in 0..n - 1 {
        if subsets_of_size(n, size).any(|s| !is_connected_within(g, all & !s)) {
            return Ok(size);
        }
    }
    Ok(n - 1)
}

/// All `size`-subsets of `0..n` as masks, in increasing numeric order.
pub fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = full_mask(n);
    let mut next = if size > n {
        None
    } else if size == 0 {
        Some(0)
    } else {
        Some(full_mask(size))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt & !limit == 0).then_some(nxt)
            }
        };
        Some(cur)
    })
}

/// Two-coloring restricted to `mask`; `None` when an odd cycle exists.
fn two_color_within(g: &Graph, mask: u64) -> Option<(u64, u64)> {
    let mut left = 0u64;
    let mut right = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut frontier = 1u64 << start;
        let mut side_is_left = true;
        left |= frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbors(v) & mask;
            }
            let (own, other) = if side_is_left { (left, right) } else { (right, left) };
            if next & own != 0 {
                return None;
            }
            next &= !other;
            if side_is_left {
                right |= next;
            } else {
                left |= next;
            }
            frontier = next;
            side_is_left = !side_is_left;
        }
        rest &= !(left | right);
    }
    Some((left, right))
}

/// Two-coloring of `g`; the side containing the lowest vertex of each component
/// comes first.
pub fn bipartition(g: &Graph) -> Option<(u64, u64)> {
    two_color_within(g, g.vertex_mask())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Exact k-colorability of the subgraph induced by `mask`.
pub fn is_k_colorable_within(g: &Graph, mask: u64, k: usize) -> bool {
    let count = mask.count_ones() as usize;
    if count <= k {
        return true;
    }
    if k == 0 {
        return mask == 0;
    }
    if k == 1 {
        return bits(mask).all(|v| g.neighbors(v) & mask == 0);
    }
    if k == 2 {
        return two_color_within(g, mask).is_some();
    }
    // highest degree first
    let mut order: Vec<usize> = bits(mask).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((g.neighbors(v) & mask).count_ones()));
    let mut classes = vec![0u64; k];
    color_backtrack(g, mask, &order, 0, &mut classes, 0)
}

fn color_backtrack(g: &Graph, mask: u64, order: &[usize], at: usize, classes: &mut [u64], used: usize) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    let nb = g.neighbors(v) & mask;
    // colors beyond the first unused one are symmetric
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & nb == 0 {
            classes[c] |= 1 << v;
            if color_backtrack(g, mask, order, at + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    false
}

/// Minimum number of vertex deletions leaving a k-colorable graph.
pub fn vertex_k_partiteness(g: &Graph, k: usize) -> Result<usize> {
    precondition(k >= 2, || format!("vertex k-partiteness needs k >= 2, got {k}"))?;
    let n = g.order();
    let all = g.vertex_mask();
    for r in 0..=n {
        if subsets_of_size(n, r).any(|s| is_k_colorable_within(g, all & !s, k)) {
            return Ok(r);
        }
    }
    unreachable!("deleting every vertex leaves a colorable graph")
}

/// Class membership. The graph must be connected.
pub fn satisfies(g: &Graph, c: &ClassConstraint) -> Result<bool> {
    c.validate()?;
    require_connected(g)?;
    Ok(match *c {
        ClassConstraint::CutVertices { p } => cut_vertex_count(g)? == p,
        ClassConstraint::KPartiteness { k, r } => vertex_k_partiteness(g, k)? == r,
        ClassConstraint::BipartiteConnectivity { kappa } => {
            g.order() >= 2 && is_bipartite(g) && vertex_connectivity(g)? == kappa
        }
    })
}

/// Every block induces a complete graph.
pub fn blocks_are_cliques(g: &Graph) -> Result<bool> {
    Ok(block_decomposition(g)?.into_iter().all(|b| {
        let size = b.count_ones();
        bits(b).all(|v| (g.neighbors(v) & b).count_ones() == size - 1)
    }))
}

/// Number of blocks containing each vertex.
pub fn block_membership(g: &Graph) -> Result<Vec<usize>> {
    let blocks = block_decomposition(g)?;
    Ok((0..g.order()).map(|v| blocks.iter().filter(|&&b| b >> v & 1 == 1).count()).collect())
}
