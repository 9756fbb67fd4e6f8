//! The atom-bond sum connectivity index.
//!
//! Each edge `uv` contributes `sqrt(1 - 2 / (d(u) + d(v)))`. The weight only
//! depends on the degree sum, so a shared table indexed by `d(u) + d(v)` backs
//! every evaluation and all routes produce bit-identical per-edge terms.
//!
//! Sums are accumulated over the sorted degree-pair multiset rather than in
//! edge order, which makes [`abs_index`] exactly invariant under relabeling.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Degree sums covered by the precomputed table (`2 * 63` is the largest a
/// graph on 64 vertices can produce).
const TABLE_SUMS: usize = 2 * 64;

/// Per-edge weights keyed by the degree sum.
pub struct EdgeWeightTable {
    by_sum: [f64; TABLE_SUMS + 1],
}

impl EdgeWeightTable {
    fn new() -> Self {
        let mut by_sum = [0.0; TABLE_SUMS + 1];
        for (s, w) in by_sum.iter_mut().enumerate().skip(2) {
            *w = weight_for_sum(s as u64);
        }
        Self { by_sum }
    }

    /// The process-wide table, built on first use.
    pub fn global() -> &'static Self {
        static TABLE: OnceLock<EdgeWeightTable> = OnceLock::new();
        TABLE.get_or_init(Self::new)
    }

    /// Weight of an edge whose endpoint degrees sum to `sum` (`sum >= 2`).
    #[inline]
    pub fn by_sum(&self, sum: u64) -> f64 {
        match self.by_sum.get(sum as usize) {
            Some(&w) if sum >= 2 => w,
            _ => weight_for_sum(sum),
        }
    }

    pub fn get(&self, a: u64, b: u64) -> Result<f64> {
        if a == 0 || b == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(self.by_sum(a + b))
    }
}

#[inline]
fn weight_for_sum(sum: u64) -> f64 {
    (1.0 - 2.0 / sum as f64).sqrt()
}

/// `sqrt(1 - 2/(a + b))` for an edge with endpoint degrees `a` and `b`.
pub fn edge_weight(a: u64, b: u64) -> Result<f64> {
    EdgeWeightTable::global().get(a, b)
}

/// ABS index of `g`. The edgeless graph has index 0.
pub fn abs_index(g: &Graph) -> f64 {
    let deg = g.degrees();
    let mut pairs: Vec<(u64, u64)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (deg[u] as u64, deg[v] as u64);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    sum_sorted_pairs(&pairs)
}

fn sum_sorted_pairs(pairs: &[(u64, u64)]) -> f64 {
    let table = EdgeWeightTable::global();
    let mut total = 0.0;
    let mut i = 0;
    while i < pairs.len() {
        let mut j = i;
        while j < pairs.len() && pairs[j] == pairs[i] {
            j += 1;
        }
        let (a, b) = pairs[i];
        total += (j - i) as f64 * table.by_sum(a + b);
        i = j;
    }
    total
}

/// Degree-pair multiset `(a, b) -> multiplicity` of a graph, sorted with `a <= b`.
pub fn degree_pair_multiset(g: &Graph) -> Vec<((u64, u64), u64)> {
    let deg = g.degrees();
    let mut counts: std::collections::BTreeMap<(u64, u64), u64> = Default::default();
    for (u, v) in g.edges() {
        let (a, b) = (deg[u] as u64, deg[v] as u64);
        *counts.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    counts.into_iter().collect()
}

/// `Σ mult · w(a, b)` over a degree-pair multiset; pairs with multiplicity 0
/// are ignored, so their degrees may be anything.
pub fn abs_from_degree_pairs(pairs: &[((u64, u64), u64)]) -> Result<f64> {
    let mut expanded: Vec<((u64, u64), u64)> = Vec::with_capacity(pairs.len());
    for &((a, b), mult) in pairs {
        if mult == 0 {
            continue;
        }
        if a == 0 || b == 0 {
            return Err(Error::ZeroDegree);
        }
        expanded.push(((a.min(b), a.max(b)), mult));
    }
    expanded.sort_unstable();
    let table = EdgeWeightTable::global();
    let mut total = 0.0;
    let mut i = 0;
    while i < expanded.len() {
        let key = expanded[i].0;
        let mut mult = 0;
        while i < expanded.len() && expanded[i].0 == key {
            mult += expanded[i].1;
            i += 1;
        }
        total += mult as f64 * table.by_sum(key.0 + key.1);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn edge_weight_examples() {
        assert_eq!(edge_weight(1, 1).unwrap(), 0.0);
        assert!(close(edge_weight(1, 2).unwrap(), (1.0f64 / 3.0).sqrt()));
        assert!(close(edge_weight(3, 3).unwrap(), (2.0f64 / 3.0).sqrt()));
        assert_eq!(edge_weight(0, 3), Err(Error::ZeroDegree));
        assert_eq!(edge_weight(2, 5).unwrap(), edge_weight(5, 2).unwrap());
        // beyond the table
        assert!(close(edge_weight(100, 100).unwrap(), (1.0f64 - 0.01).sqrt()));
    }

    #[test]
    fn weights_increase_with_degree_sum() {
        let t = EdgeWeightTable::global();
        for s in 2..200 {
            assert!(t.by_sum(s + 1) > t.by_sum(s));
        }
    }

    #[test]
    fn small_graph_values() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(abs_index(&k2), 0.0);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(close(abs_index(&p4), 2.0 * (1.0f64 / 3.0).sqrt() + 0.5f64.sqrt()));
        let k4 = Graph::empty(4).unwrap().complement();
        assert!(close(abs_index(&k4), 6.0 * (2.0f64 / 3.0).sqrt()));
        assert_eq!(abs_index(&Graph::empty(5).unwrap()), 0.0);
    }

    #[test]
    fn degree_pair_examples() {
        assert_eq!(abs_from_degree_pairs(&[]).unwrap(), 0.0);
        let c4 = abs_from_degree_pairs(&[((2, 2), 4)]).unwrap();
        assert!(close(c4, 4.0 * 0.5f64.sqrt()));
        let star = abs_from_degree_pairs(&[((1, 3), 3)]).unwrap();
        assert!(close(star, 3.0 * 0.5f64.sqrt()));
        assert_eq!(abs_from_degree_pairs(&[((0, 3), 1)]), Err(Error::ZeroDegree));
        assert_eq!(abs_from_degree_pairs(&[((0, 3), 0)]).unwrap(), 0.0);
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 2..=20usize {
            let kn = Graph::empty(n).unwrap().complement();
            let closed = (n * (n - 1) / 2) as f64 * ((n as f64 - 2.0) / (n as f64 - 1.0)).sqrt();
            assert!(close(abs_index(&kn), closed), "n = {n}");
        }
    }

    #[test]
    fn multiset_route_matches_direct_sum() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap();
        let pairs = degree_pair_multiset(&g);
        assert_eq!(abs_from_degree_pairs(&pairs).unwrap(), abs_index(&g));
    }
}
