//! Canonical labeling and isomorphism testing for small graphs.
//!
//! The search is the classic individualize-and-refine tree: the ordered
//! partition is refined to an equitable one, the first non-singleton cell is
//! branched on, and every discrete leaf yields a relabeled adjacency matrix.
//! The lexicographically largest matrix is the canonical form. Automorphisms
//! discovered when two leaves coincide prune the tree in two ways: whole
//! subtrees equivalent to an explored one are abandoned, and children lying in
//! an explored child's orbit (under automorphisms fixing the current path) are
//! skipped.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{bits, Graph};
use crate::io;

/// Upper-triangle adjacency bitstring under the canonical vertex order.
///
/// Bits are laid out in graph6 order (column by column: `(0,1)`, `(0,2)`,
/// `(1,2)`, `(0,3)`, ...) and packed most-significant-bit first, so the derived
/// ordering is the lexicographic order of the bitstring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let total = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; total.div_ceil(64)];
        let mut t = 0;
        for j in 1..n {
            for row in &rows[..j] {
                if row >> j & 1 == 1 {
                    words[t / 64] |= 1 << (63 - t % 64);
                }
                t += 1;
            }
        }
        Self { n, bits: words }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Bit `t` of the upper-triangle string.
    pub fn bit(&self, t: usize) -> bool {
        self.bits[t / 64] >> (63 - t % 64) & 1 == 1
    }

    /// The canonically labeled graph this form describes.
    pub fn to_graph(&self) -> Graph {
        let mut rows = vec![0u64; self.n];
        let mut t = 0;
        for j in 1..self.n {
            for row in rows.iter_mut().take(j) {
                if self.bit(t) {
                    *row |= 1 << j;
                }
                t += 1;
            }
        }
        for j in 0..self.n {
            for i in bits(rows[j]) {
                rows[i] |= 1 << j;
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    pub fn to_graph6(&self) -> String {
        io::to_graph6(&self.to_graph())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl CanonicalLabeling {
    /// Canonical position of every original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    search_from(g, vec![g.vertex_mask()])
}

/// Graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

/// Whether some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let all = g.vertex_mask();
    let cu = search_from(g, vec![1 << u, all & !(1 << u)]);
    let cv = search_from(g, vec![1 << v, all & !(1 << v)]);
    cu.form == cv.form
}

fn search_from(g: &Graph, mut cells: Vec<u64>) -> CanonicalLabeling {
    let adj = g.rows();
    refine(adj, &mut cells);
    let mut search = Search { adj, first: None, best: None, generators: Vec::new() };
    let mut path = Vec::with_capacity(g.order());
    search.node(cells, &mut path);
    let best = search.best.expect("search always reaches a leaf");
    CanonicalLabeling {
        order: best.perm.iter().map(|&v| v as usize).collect(),
        form: CanonicalForm::from_rows(&best.rows),
    }
}

/// Splits cells until every cell is equitable with respect to every other.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(adj.len());
    loop {
        let splitters = cells.clone();
        let mut split_any = false;
        for &splitter in &splitters {
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell & (cell - 1) == 0 {
                    c += 1;
                    continue;
                }
                scratch.clear();
                scratch.extend(bits(cell).map(|v| ((adj[v] & splitter).count_ones(), v)));
                let first = scratch[0].0;
                if scratch.iter().all(|&(k, _)| k == first) {
                    c += 1;
                    continue;
                }
                scratch.sort_unstable();
                let mut parts: Vec<u64> = Vec::new();
                let mut last = u32::MAX;
                for &(k, v) in &scratch {
                    if k != last {
                        parts.push(0);
                        last = k;
                    }
                    *parts.last_mut().unwrap() |= 1 << v;
                }
                let len = parts.len();
                cells.splice(c..=c, parts);
                c += len;
                split_any = true;
            }
        }
        if !split_any {
            break;
        }
    }
}

struct Leaf {
    path: Vec<u8>,
    perm: Vec<u8>,
    rows: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. `Some(d)` asks the caller to unwind
    /// to the node at depth `d`, whose remaining subtree is equivalent under a
    /// discovered automorphism to one already searched.
    fn node(&mut self, cells: Vec<u64>, path: &mut Vec<u8>) -> Option<usize> {
        let depth = path.len();
        let Some(target) = cells.iter().position(|c| c & (c - 1) != 0) else {
            return self.leaf(&cells, path);
        };
        let cell = cells[target];
        let mut explored = 0u64;
        for v in bits(cell) {
            if explored != 0 && self.orbit_of(v, path) & explored != 0 {
                continue;
            }
            explored |= 1 << v;
            let mut child = cells.clone();
            child[target] = cell & !(1 << v);
            child.insert(target, 1 << v);
            refine(self.adj, &mut child);
            path.push(v as u8);
            let jump = self.node(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Orbit of `v` under the known automorphisms that fix `path` pointwise.
    fn orbit_of(&self, v: usize, path: &[u8]) -> u64 {
        let relevant: Vec<&Vec<u8>> =
            self.generators.iter().filter(|g| path.iter().all(|&p| g[p as usize] == p)).collect();
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                for g in &relevant {
                    next |= 1 << g[u];
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        orbit
    }

    fn leaf(&mut self, cells: &[u64], path: &[u8]) -> Option<usize> {
        let n = self.adj.len();
        let perm: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut inv = [0u8; 64];
        for (i, &v) in perm.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        let rows: Vec<u64> =
            perm.iter().map(|&v| bits(self.adj[v as usize]).fold(0u64, |acc, u| acc | 1 << inv[u])).collect();
        debug_assert_eq!(rows.len(), n);
        let leaf = Leaf { path: path.to_vec(), perm, rows };

        let Some(first) = &self.first else {
            self.best = Some(Leaf { path: leaf.path.clone(), perm: leaf.perm.clone(), rows: leaf.rows.clone() });
            self.first = Some(leaf);
            return None;
        };
        if first.rows == leaf.rows {
            let jump = divergence(&first.path, &leaf.path);
            let gamma = automorphism(&first.perm, &leaf.perm);
            self.generators.push(gamma);
            return Some(jump);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let jump = divergence(&best.path, &leaf.path);
                let gamma = automorphism(&best.perm, &leaf.perm);
                self.generators.push(gamma);
                Some(jump)
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

fn divergence(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()))
}

/// The automorphism sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut gamma = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a as usize] = b;
    }
    gamma
}
