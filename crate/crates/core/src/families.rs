//! Extremal graph families with constructors and closed-form ABS values.
//!
//! Every family fixes its vertex labeling so that built graphs are stable:
//!
//! * `K_n^p`: clique vertices `0..n-p` first, then pendants/path vertices.
//! * complete multipartite: parts laid out consecutively in the given order.
//! * `K_r ∨ K_{t_1..t_k}`: the `r` clique vertices first, then the parts.
//! * six-part graphs: groups `H_1..H_6` laid out consecutively.
//!
//! Closed forms are evaluated through [`abs_from_degree_pairs`] from the
//! degree-pair multiset that each construction produces, independently of
//! the built graph.

use serde::Serialize;

use crate::abs::abs_from_degree_pairs;
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;

pub fn build_path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn build_complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

pub fn build_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    precondition(a >= 1 && b >= 1, || format!("complete bipartite sides must be positive, got ({a}, {b})"))?;
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

fn check_knp(n: usize, p: usize) -> Result<()> {
    precondition(n >= 3, || format!("K_n^p needs n >= 3, got n = {n}"))?;
    precondition(p + 2 <= n, || format!("K_n^p needs 0 <= p <= n - 2, got n = {n}, p = {p}"))
}

/// `K_n^p`: the complete graph `K_{n-p}` with `p` pendants when `n >= 2p`;
/// otherwise `n-p-1` pendants plus a path of length `2p-n+1` on the last
/// clique vertex.
pub fn build_knp(n: usize, p: usize) -> Result<Graph> {
    check_knp(n, p)?;
    let q = n - p;
    let mut g = build_complete(q)?;
    if n >= 2 * p {
        for i in 0..p {
            g = g.attach_path(i, 1)?;
        }
    } else {
        for i in 0..q - 1 {
            g = g.attach_path(i, 1)?;
        }
        g = g.attach_path(q - 1, 2 * p + 1 - n)?;
    }
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

/// Closed-form ABS of `K_n^p` from its degree-pair multiset.
///
/// With `q = n - p` and `n >= 2p`: `p` pendant edges `(1, q)`, `C(p, 2)` edges
/// `(q, q)` between attached clique vertices, `p(q - p)` edges `(q, q-1)` and
/// `C(q-p, 2)` edges `(q-1, q-1)`.
///
/// With `n < 2p` every clique vertex has degree `q`: `C(q, 2)` edges `(q, q)`,
/// `q - 1` pendant edges `(1, q)`, and a path of length `L = 2p - n + 1 >= 2`
/// contributing `(q, 2)`, `L - 2` edges `(2, 2)` and one `(2, 1)`.
pub fn abs_knp_closed(n: usize, p: usize) -> Result<f64> {
    check_knp(n, p)?;
    let (n, p) = (n as u64, p as u64);
    let q = n - p;
    let c2 = |m: u64| m * m.saturating_sub(1) / 2;
    let pairs = if n >= 2 * p {
        vec![((1, q), p), ((q, q), c2(p)), ((q, q - 1), p * (q - p)), ((q - 1, q - 1), c2(q - p))]
    } else {
        let len = 2 * p + 1 - n;
        vec![((q, q), c2(q)), ((1, q), q - 1), ((q, 2), 1), ((2, 2), len - 2), ((2, 1), 1)]
    };
    abs_from_degree_pairs(&pairs)
}

/// Positive part sizes `t_1, ..., t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        precondition(!sizes.is_empty(), || "part list is empty".into())?;
        if sizes.iter().any(|&t| t == 0) {
            return Err(Error::InvalidParameter(format!("empty part in {sizes:?}")));
        }
        Ok(Self(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Total number of vertices `Σ t_i`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Sizes sorted ascending: the multiset this tuple represents.
    pub fn sorted(&self) -> Self {
        let mut s = self.0.clone();
        s.sort_unstable();
        Self(s)
    }

    /// The balanced split of `n` into `k` parts, smaller parts first.
    pub fn balanced(n: usize, k: usize) -> Result<Self> {
        precondition(k >= 1 && k <= n, || format!("cannot split {n} vertices into {k} positive parts"))?;
        let (t, s) = (n / k, n % k);
        let mut sizes = vec![t; k - s];
        sizes.extend(std::iter::repeat(t + 1).take(s));
        Self::new(sizes)
    }
}

impl std::fmt::Display for PartSizes {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

fn multipartite_from(parts: &PartSizes) -> Result<Graph> {
    let mut iter = parts.sizes().iter();
    let first = *iter.next().expect("PartSizes is non-empty");
    let mut g = Graph::empty(first)?;
    for &t in iter {
        g = g.join(&Graph::empty(t)?)?;
    }
    Ok(g)
}

pub fn build_complete_multipartite(parts: &PartSizes) -> Result<Graph> {
    precondition(parts.k() >= 2, || "complete multipartite graph needs k >= 2".into())?;
    multipartite_from(parts)
}

/// `Σ_{i<j} t_i t_j sqrt(1 - 2/(2n - t_i - t_j))`.
pub fn abs_multipartite_closed(parts: &PartSizes) -> Result<f64> {
    precondition(parts.k() >= 2, || "complete multipartite graph needs k >= 2".into())?;
    let n = parts.total() as u64;
    let t: Vec<u64> = parts.sizes().iter().map(|&x| x as u64).collect();
    let mut pairs = Vec::new();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            pairs.push(((n - t[i], n - t[j]), t[i] * t[j]));
        }
    }
    abs_from_degree_pairs(&pairs)
}

/// Turán graph `T(n, k)`.
pub fn build_turan(n: usize, k: usize) -> Result<Graph> {
    precondition(k >= 2 && k <= n, || format!("Turán graph needs 2 <= k <= n, got n = {n}, k = {k}"))?;
    build_complete_multipartite(&PartSizes::balanced(n, k)?)
}

fn check_join(r: usize, parts: &PartSizes) -> Result<()> {
    precondition(r >= 1, || "join with K_r needs r >= 1; use the plain multipartite family for r = 0".into())?;
    precondition(parts.k() >= 2, || "join with a multipartite graph needs k >= 2".into())
}

/// `K_r ∨ K_{t_1, ..., t_k}` with the clique on vertices `0..r`.
pub fn build_kr_join_multipartite(r: usize, parts: &PartSizes) -> Result<Graph> {
    check_join(r, parts)?;
    build_complete(r)?.join(&multipartite_from(parts)?)
}

/// `C(r,2) w(2n-2) + Σ r t_i w(2n-1-t_i) + Σ_{i<j} t_i t_j w(2n-t_i-t_j)`
/// with `w(s) = sqrt(1 - 2/s)` and `n = r + Σ t_i`.
pub fn abs_kr_join_closed(r: usize, parts: &PartSizes) -> Result<f64> {
    check_join(r, parts)?;
    let r = r as u64;
    let n = r + parts.total() as u64;
    let t: Vec<u64> = parts.sizes().iter().map(|&x| x as u64).collect();
    let mut pairs = vec![((n - 1, n - 1), r * (r - 1) / 2)];
    for &ti in &t {
        pairs.push(((n - 1, n - ti), r * ti));
    }
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            pairs.push(((n - t[i], n - t[j]), t[i] * t[j]));
        }
    }
    abs_from_degree_pairs(&pairs)
}

/// Which side conditions a six-part tuple must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SixPartShape {
    /// `n1, n3, n4, n6 >= 1`, `n1, n3 >= n5`, `n4, n6 >= n2`, `κ = n2 + n5 >= 1`.
    Mixed,
    /// `n1 = n5 = 0`, `n3, n4 >= 1`, `n2 = κ >= 1`, `n6 >= n2`.
    SideTwo,
    /// `n2 = n4 = 0`, `n1, n6 >= 1`, `n5 = κ >= 1`, `n3 >= n5`.
    SideFive,
    /// No side conditions; any non-negative tuple.
    Unchecked,
}

/// Group sizes `(n1, ..., n6)` of the six-part bipartite blow-up: `H_1` and `H_3`
/// see `H_5`, `H_1` also sees `H_4`, `H_3` also sees `H_6`, and `H_2` sees
/// `H_4`, `H_5` and `H_6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SixPart {
    pub n: [usize; 6],
    pub shape: SixPartShape,
}

impl SixPart {
    pub fn new(n: [usize; 6], shape: SixPartShape) -> Result<Self> {
        let [n1, n2, n3, n4, n5, n6] = n;
        let ok = match shape {
            SixPartShape::Mixed => {
                n1 >= 1 && n3 >= 1 && n4 >= 1 && n6 >= 1 && n1 >= n5 && n3 >= n5 && n4 >= n2 && n6 >= n2 && n2 + n5 >= 1
            }
            SixPartShape::SideTwo => n1 == 0 && n5 == 0 && n3 >= 1 && n4 >= 1 && n2 >= 1 && n6 >= n2,
            SixPartShape::SideFive => n2 == 0 && n4 == 0 && n1 >= 1 && n6 >= 1 && n5 >= 1 && n3 >= n5,
            SixPartShape::Unchecked => true,
        };
        if !ok {
            return Err(Error::InvalidParameter(format!("{n:?} violates the {shape:?} six-part shape")));
        }
        let total: usize = n.iter().sum();
        if total == 0 || total > crate::graph::MAX_ORDER {
            return Err(Error::OrderOutOfRange(total));
        }
        Ok(Self { n, shape })
    }

    pub fn unchecked(n: [usize; 6]) -> Result<Self> {
        Self::new(n, SixPartShape::Unchecked)
    }

    /// Tries the three constrained shapes in order.
    pub fn detect(n: [usize; 6]) -> Result<Self> {
        [SixPartShape::Mixed, SixPartShape::SideTwo, SixPartShape::SideFive]
            .into_iter()
            .find_map(|s| Self::new(n, s).ok())
            .ok_or_else(|| Error::InvalidParameter(format!("{n:?} matches no six-part shape")))
    }

    pub fn order(&self) -> usize {
        self.n.iter().sum()
    }

    /// First vertex of each group.
    fn offsets(&self) -> [usize; 7] {
        let mut off = [0; 7];
        for i in 0..6 {
            off[i + 1] = off[i] + self.n[i];
        }
        off
    }

    /// Vertex mask of group `H_{i+1}`.
    pub fn group_mask(&self, i: usize) -> u64 {
        let off = self.offsets();
        crate::graph::full_mask(off[i + 1]) & !crate::graph::full_mask(off[i])
    }
}

/// Group pairs `(i, j)` (0-based) joined completely.
const SIX_PART_LINKS: [(usize, usize); 7] = [(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)];

pub fn build_sixpart(s: &SixPart) -> Result<Graph> {
    let mut g = Graph::empty(s.order())?;
    for (a, b) in SIX_PART_LINKS {
        for u in crate::graph::bits(s.group_mask(a)) {
            for v in crate::graph::bits(s.group_mask(b)) {
                g.insert_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Closed-form ABS of the six-part graph; each linked group pair contributes
/// `n_i n_j` edges whose degree sum is fixed by the construction.
pub fn abs_sixpart_closed(s: &SixPart) -> Result<f64> {
    let m: Vec<u64> = s.n.iter().map(|&x| x as u64).collect();
    // degree of a vertex in each group
    let deg = [m[3] + m[4], m[3] + m[4] + m[5], m[4] + m[5], m[0] + m[1], m[0] + m[1] + m[2], m[1] + m[2]];
    let pairs: Vec<_> = SIX_PART_LINKS.iter().map(|&(a, b)| ((deg[a], deg[b]), m[a] * m[b])).collect();
    abs_from_degree_pairs(&pairs)
}

/// Parameters of `K̄_κ[x, y] = K̄[x, 0, 1, y, κ, 0]` on `n = x + y + 1 + κ` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KappaXY {
    pub x: usize,
    pub y: usize,
    pub kappa: usize,
}

impl KappaXY {
    pub fn new(x: usize, y: usize, kappa: usize) -> Result<Self> {
        precondition(x >= 1 && y >= 1 && kappa >= 1, || {
            format!("K̄_κ[x, y] needs x, y, κ >= 1, got x = {x}, y = {y}, κ = {kappa}")
        })?;
        Ok(Self { x, y, kappa })
    }

    pub fn order(&self) -> usize {
        self.x + self.y + 1 + self.kappa
    }

    pub fn six_part(&self) -> Result<SixPart> {
        SixPart::unchecked([self.x, 0, 1, self.y, self.kappa, 0])
    }
}

pub fn build_kappa_xy(x: usize, y: usize, kappa: usize) -> Result<Graph> {
    build_sixpart(&KappaXY::new(x, y, kappa)?.six_part()?)
}

/// `xy w(n-1) + xκ w(n) + κ w(n-y)` with `w(s) = sqrt(1 - 2/s)`.
pub fn abs_kappa_xy_closed(x: usize, y: usize, kappa: usize) -> Result<f64> {
    let p = KappaXY::new(x, y, kappa)?;
    let (x, y, k) = (p.x as u64, p.y as u64, p.kappa as u64);
    // H_1 vertices have degree y + κ, H_4 degree x, H_5 degree x + 1, H_3 degree κ
    abs_from_degree_pairs(&[((y + k, x), x * y), ((y + k, x + 1), x * k), ((k, x + 1), k)])
}
