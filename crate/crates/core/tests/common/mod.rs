//! Test-side oracles: brute-force versions of the library's computations,
//! written against plain edge lists so they share no code with the crate.

#![allow(dead_code)]

use abs_extremal::Graph;

pub type Edges = Vec<(usize, usize)>;

pub fn edges_of(g: &Graph) -> Edges {
    g.edges().collect()
}

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// ABS summed edge by edge in input order.
pub fn naive_abs(n: usize, edges: &[(usize, usize)]) -> f64 {
    let d = degrees(n, edges);
    edges
        .iter()
        .map(|&(u, v)| {
            let s = (d[u] + d[v]) as f64;
            ((s - 2.0) / s).sqrt()
        })
        .sum()
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Connectivity of the subgraph induced on `alive` by depth-first search.
pub fn connected_on(a: &[Vec<bool>], alive: &[bool]) -> bool {
    let n = a.len();
    let Some(start) = (0..n).find(|&v| alive[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if alive[v] && a[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| !alive[v] || seen[v])
}

pub fn connected(a: &[Vec<bool>]) -> bool {
    connected_on(a, &vec![true; a.len()])
}

/// Colorability of the subgraph induced on `alive` with `k` colors, by backtracking.
pub fn colorable_on(a: &[Vec<bool>], alive: &[bool], k: usize) -> bool {
    fn go(a: &[Vec<bool>], order: &[usize], color: &mut Vec<usize>, i: usize, k: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..k {
            if order[..i].iter().all(|&u| !(a[u][v] && color[u] == c)) {
                color[v] = c;
                if go(a, order, color, i + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    let order: Vec<usize> = (0..a.len()).filter(|&v| alive[v]).collect();
    go(a, &order, &mut vec![usize::MAX; a.len()], 0, k)
}

/// Vertices whose removal disconnects the graph.
pub fn naive_cut_vertex_count(a: &[Vec<bool>]) -> usize {
    let n = a.len();
    (0..n)
        .filter(|&v| {
            let mut alive = vec![true; n];
            alive[v] = false;
            !connected_on(a, &alive)
        })
        .count()
}

fn subsets(n: usize, size: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == size)
        .map(move |m| (0..n).map(|v| m >> v & 1 == 1).collect())
}

/// Smallest vertex set whose removal disconnects the graph; `n - 1` for complete graphs.
pub fn naive_vertex_connectivity(a: &[Vec<bool>]) -> usize {
    let n = a.len();
    for size in 0..n.saturating_sub(1) {
        for removed in subsets(n, size) {
            let alive: Vec<bool> = removed.iter().map(|r| !r).collect();
            if !connected_on(a, &alive) {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

/// Fewest vertices whose removal leaves a `k`-colorable graph.
pub fn naive_k_partiteness(a: &[Vec<bool>], k: usize) -> usize {
    let n = a.len();
    for size in 0..=n {
        for removed in subsets(n, size) {
            let alive: Vec<bool> = removed.iter().map(|r| !r).collect();
            if colorable_on(a, &alive, k) {
                return size;
            }
        }
    }
    n
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![p.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn is_automorphism(a: &[Vec<bool>], p: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == a[p[u]][p[v]]))
}

pub fn automorphism_count(a: &[Vec<bool>], perms: &[Vec<usize>]) -> usize {
    perms.iter().filter(|p| is_automorphism(a, p)).count()
}

/// Isomorphism by trying every bijection, after a degree-sequence filter.
pub fn naive_isomorphic(a: &[Vec<bool>], b: &[Vec<bool>], perms: &[Vec<usize>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let deg = |x: &[Vec<bool>]| {
        let mut d: Vec<usize> = x.iter().map(|r| r.iter().filter(|&&e| e).count()).collect();
        d.sort_unstable();
        d
    };
    if deg(a) != deg(b) {
        return false;
    }
    perms.iter().any(|p| (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

/// Labeled graphs on `n` vertices that are connected (and bipartite, if asked),
/// counted by sweeping every edge subset.
pub fn labeled_count(n: usize, bipartite: bool) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut count = 0;
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let a = adjacency(n, &edges);
        if connected(&a) && (!bipartite || colorable_on(&a, &vec![true; n], 2)) {
            count += 1;
        }
    }
    count
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Every multiset of `k` positive parts summing to `n`, parts non-increasing.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for t in 1..=max.min(left) {
            cur.push(t);
            go(left - t, k - 1, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, n, &mut Vec::new(), &mut out);
    out
}
