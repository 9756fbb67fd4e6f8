//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex's neighbourhood is stored as a `u64` bitmask, so most set
//! operations used by the invariants and the enumerator are single word ops.
//! Graphs are values: every construction operator returns a new graph.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Iterates over the set bits of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Self { adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                let vertex = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter(format!("adjacency is not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Self { adj })
    }

    /// Trusted constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(adj.clone()).is_ok());
        Self { adj }
    }

    /// Returns a copy of this graph with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Neighbour set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Adjacency rows, one bitmask per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| bits(row & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        self.adj.iter().enumerate().flat_map(move |(u, &row)| bits(!row & all & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Complement over unordered pairs.
    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let adj = self.adj.iter().enumerate().map(|(v, &row)| !row & all & !(1 << v)).collect();
        Self { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n1 = self.order();
        let n = n1 + other.order();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << n1));
        Ok(Self { adj })
    }

    /// Join `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n1 = self.order();
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(n1);
        let right = g.vertex_mask() & !left;
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row |= if v < n1 { right } else { left };
        }
        Ok(g)
    }

    /// Attaches a path with `length` new vertices (and edges) to `at`.
    /// The new vertices are appended in path order.
    pub fn attach_path(&self, at: usize, length: usize) -> Result<Self> {
        let n = self.order();
        if at >= n {
            return Err(Error::VertexOutOfRange { vertex: at, order: n });
        }
        if n + length > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n + length));
        }
        let mut g = self.clone();
        g.adj.resize(n + length, 0);
        let mut prev = at;
        for v in n..n + length {
            g.insert_edge(prev, v)?;
            prev = v;
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!("permutation has length {} for order {n}", perm.len())));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = bits(row).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Ok(Self { adj })
    }

    /// Subgraph induced by `mask`, with the surviving vertices renumbered in order.
    pub fn induced(&self, mask: u64) -> Result<Self> {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Self::empty(keep.len())?;
        for (i, &v) in keep.iter().enumerate() {
            g.adj[i] = bits(self.adj[v] & mask).fold(0, |acc, u| acc | 1 << index[u]);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    #[test]
    fn empty_graph_orders() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(Graph::empty(1).unwrap().order(), 1);
        assert_eq!(Graph::empty(0), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::empty(65), Err(Error::OrderOutOfRange(65)));
    }

    #[test]
    fn add_edge_is_idempotent_and_rejects_loops() {
        let k2 = Graph::empty(2).unwrap().add_edge(0, 1).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.add_edge(1, 0).unwrap(), k2);
        assert_eq!(k2.add_edge(0, 0), Err(Error::SelfLoop(0)));
        assert!(matches!(k2.add_edge(0, 2), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn join_edge_counts() {
        let k23 = Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.edge_count(), 6);
        let k5 = complete(2).join(&complete(3)).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let star = complete(1).join(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(star.degrees(), vec![4, 1, 1, 1, 1]);
        assert!(Graph::empty(40).unwrap().join(&Graph::empty(25).unwrap()).is_err());
    }

    #[test]
    fn join_degrees_shift_by_other_order() {
        let a = Graph::from_edges(3, [(0, 1)]).unwrap();
        let b = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let j = a.join(&b).unwrap();
        for v in 0..3 {
            assert_eq!(j.degree(v), a.degree(v) + 4);
        }
        for v in 0..4 {
            assert_eq!(j.degree(3 + v), b.degree(v) + 3);
        }
    }

    #[test]
    fn complement_round_trip() {
        assert_eq!(complete(4).complement().edge_count(), 0);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 10 - 3);
    }

    #[test]
    fn edges_are_ordered() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (2, 1)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 2), (1, 2), (1, 3)]);
        assert_eq!(g.non_edges().count(), 3);
    }

    #[test]
    fn attach_path_and_induced() {
        let g = complete(3).attach_path(0, 2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degrees(), vec![3, 2, 2, 2, 1]);
        let h = g.induced(0b11100).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn from_adjacency_validates() {
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert_eq!(Graph::from_adjacency(vec![0b01, 0]), Err(Error::SelfLoop(0)));
    }
}
