//! Closed-form ABS values against brute-force sums on the built graphs, and
//! built graphs against independently written edge lists.

mod common;

use abs_extremal::families::*;
use abs_extremal::{is_isomorphic, Graph, PartSizes, SixPart};
use common::{edges_of, multisets, naive_abs};

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

fn direct(g: &Graph) -> f64 {
    naive_abs(g.order(), &edges_of(g))
}

#[test]
fn knp_closed_form_matches_direct_sum() {
    for n in 3..=12usize {
        for p in 0..=n - 2 {
            let g = build_knp(n, p).unwrap();
            assert_eq!(g.order(), n);
            assert!(rel_close(abs_knp_closed(n, p).unwrap(), direct(&g)), "n={n} p={p}");
        }
    }
}

#[test]
fn knp_matches_hand_built_graph() {
    // K_q with pendants spread one per clique vertex, the surplus as one path
    for n in 3..=10 {
        for p in 0..=n - 2 {
            let q = n - p;
            let mut edges: Vec<(usize, usize)> = (0..q).flat_map(|u| (u + 1..q).map(move |v| (u, v))).collect();
            let mut next = q;
            let pendants = p.min(q - 1);
            for i in 0..pendants {
                edges.push((i, next));
                next += 1;
            }
            if p > pendants {
                let mut prev = q - 1;
                while next < n {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            let h = Graph::from_edges(n, edges).unwrap();
            assert!(is_isomorphic(&build_knp(n, p).unwrap(), &h), "n={n} p={p}");
        }
    }
}

#[test]
fn multipartite_closed_form_matches_direct_sum() {
    for n in 2..=14 {
        for k in 2..=5.min(n) {
            for t in multisets(n, k) {
                let parts = PartSizes::new(t.clone()).unwrap();
                let g = build_complete_multipartite(&parts).unwrap();
                assert_eq!(g.edge_count(), (n * n - t.iter().map(|x| x * x).sum::<usize>()) / 2);
                assert!(rel_close(abs_multipartite_closed(&parts).unwrap(), direct(&g)), "{t:?}");
            }
        }
    }
}

#[test]
fn kr_join_closed_form_matches_direct_sum() {
    for n in 3..=12usize {
        for k in 2..=4 {
            for r in 1..=n.saturating_sub(k) {
                for t in multisets(n - r, k) {
                    let parts = PartSizes::new(t.clone()).unwrap();
                    let g = build_kr_join_multipartite(r, &parts).unwrap();
                    assert!(rel_close(abs_kr_join_closed(r, &parts).unwrap(), direct(&g)), "r={r} {t:?}");
                }
            }
        }
    }
}

#[test]
fn turan_examples() {
    let t = build_turan(7, 3).unwrap();
    let k223 = build_complete_multipartite(&PartSizes::new(vec![2, 2, 3]).unwrap()).unwrap();
    assert!(is_isomorphic(&t, &k223));
    assert_eq!(t.edge_count(), 16);
}

#[test]
fn sixpart_closed_form_matches_direct_sum() {
    let mut checked = 0;
    for total in 1..=14usize {
        let mut stack = vec![(Vec::<usize>::new(), total)];
        while let Some((prefix, left)) = stack.pop() {
            if prefix.len() == 5 {
                let mut m = [0; 6];
                m[..5].copy_from_slice(&prefix);
                m[5] = left;
                let s = SixPart::unchecked(m).unwrap();
                let g = build_sixpart(&s).unwrap();
                assert!(rel_close(abs_sixpart_closed(&s).unwrap(), direct(&g)), "{m:?}");
                checked += 1;
                continue;
            }
            for v in 0..=left {
                let mut p = prefix.clone();
                p.push(v);
                stack.push((p, left - v));
            }
        }
    }
    // compositions of 1..=14 into six nonnegative parts
    assert_eq!(checked, (1..=14u64).map(|t| binom(t + 5, 5)).sum::<u64>());
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn kappa_xy_closed_form_and_shape() {
    for n in 3..=14 {
        for kappa in 1..n {
            for x in 1..n {
                if x + kappa + 1 >= n {
                    continue;
                }
                let y = n - x - kappa - 1;
                let g = build_kappa_xy(x, y, kappa).unwrap();
                assert!(rel_close(abs_kappa_xy_closed(x, y, kappa).unwrap(), direct(&g)));
                // x + y + kappa + 1 vertices, xy + x*kappa + kappa edges
                assert_eq!(g.edge_count(), x * y + x * kappa + kappa);
            }
        }
    }
}

#[test]
fn kappa_xy_matches_hand_built_graph() {
    // side A = X ∪ {z}, side B = Y ∪ K; X sees all of B, z sees only K
    let (x, y, kappa) = (4, 2, 1);
    let n = x + y + kappa + 1;
    let mut edges = Vec::new();
    let b: Vec<usize> = (x + 1..n).collect();
    for i in 0..x {
        for &j in &b {
            edges.push((i, j));
        }
    }
    for j in x + 1 + y..n {
        edges.push((x, j));
    }
    let h = Graph::from_edges(n, edges).unwrap();
    assert!(is_isomorphic(&build_kappa_xy(x, y, kappa).unwrap(), &h));
}
