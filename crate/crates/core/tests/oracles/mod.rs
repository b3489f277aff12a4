//! Brute-force reference computations and random graph generators shared by
//! the integration tests. Nothing here calls the solvers under test.
#![allow(dead_code)]

use colorclass::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w)).collect()
}

/// Chromatic number by dynamic programming over vertex subsets (`n <= 16`).
pub fn chromatic_dp(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let adj = masks(g);
    let full = (1usize << n) - 1;
    let mut indep = vec![false; full + 1];
    indep[0] = true;
    for s in 1..=full {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        indep[s] = indep[rest] && (adj[v] as usize & rest) == 0;
    }
    let mut chi = vec![usize::MAX; full + 1];
    chi[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        // Independent sets containing the lowest vertex of s.
        let mut sub = rest;
        loop {
            let t = sub | low;
            if indep[t] && chi[s & !t] != usize::MAX {
                chi[s] = chi[s].min(chi[s & !t] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    chi[full]
}

/// Maximum matching size by memoized search over vertex subsets.
pub fn matching_number(g: &Graph) -> usize {
    fn go(s: u64, adj: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
        if s == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&s) {
            return r;
        }
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(s, best);
        best
    }
    let adj = masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    go(all, &adj, &mut HashMap::new())
}

/// Clique number by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &Graph) -> usize {
    fn bk(r: usize, mut p: u64, mut x: u64, adj: &[u64], best: &mut usize) {
        if p == 0 && x == 0 {
            *best = (*best).max(r);
            return;
        }
        if r + (p.count_ones() as usize) <= *best {
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(r + 1, p & adj[v], x & adj[v], adj, best);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    if g.n() == 0 {
        return 0;
    }
    let adj = masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    bk(0, all, 0, &adj, &mut best);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Plain backtracking 3-coloring in breadth-first order.
pub fn three_colorable(g: &Graph) -> bool {
    let n = g.n();
    let adj = masks(g);
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        seen |= 1 << s;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            i += 1;
            let mut nb = adj[v] & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                order.push(w);
            }
        }
    }
    fn go(i: usize, order: &[usize], adj: &[u64], class: &mut [u64; 3]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..3 {
            if class[c] & adj[v] == 0 {
                class[c] |= 1 << v;
                if go(i + 1, order, adj, class) {
                    return true;
                }
                class[c] &= !(1 << v);
            }
            // Symmetry: the first vertex only needs one color.
            if i == 0 {
                break;
            }
        }
        false
    }
    go(0, &order, &adj, &mut [0; 3])
}

/// Every proper 3-coloring, as color vectors (small graphs only).
pub fn all_three_colorings(g: &Graph) -> Vec<Vec<u8>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut col = vec![0u8; n];
    fn go(v: usize, g: &Graph, col: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if v == g.n() {
            out.push(col.clone());
            return;
        }
        for c in 0..3 {
            if g.neighbors(v).iter().filter(|&w| w < v).all(|w| col[w] != c) {
                col[v] = c;
                go(v + 1, g, col, out);
            }
        }
    }
    go(0, g, &mut col, &mut out);
    out
}

/// Whether `pattern` embeds in `host` as an induced subgraph, by trying every injective map.
pub fn embeds_brute(host: &Graph, pattern: &Graph) -> bool {
    fn go(i: usize, host: &Graph, pat: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if i == pat.n() {
            return true;
        }
        for h in 0..host.n() {
            if used[h] {
                continue;
            }
            if (0..i).all(|j| pat.has_edge(i, j) == host.has_edge(h, map[j])) {
                used[h] = true;
                map.push(h);
                if go(i + 1, host, pat, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    go(0, host, pattern, &mut Vec::new(), &mut vec![false; host.n()])
}

pub fn edges_of(n: usize, mut adj: impl FnMut(usize, usize) -> bool) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj(u, v) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &e).unwrap()
}

pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &e).unwrap()
}

/// Random triangle-free graph: candidate edges in random order, skipping any that close a triangle.
pub fn random_triangle_free(r: &mut ChaCha8Rng, n: usize, keep: f64, max_degree: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(r);
    let mut adj = vec![0u64; n];
    let mut e = Vec::new();
    for (u, v) in pairs {
        if !r.gen_bool(keep) || adj[u] & adj[v] != 0 {
            continue;
        }
        if adj[u].count_ones() as usize >= max_degree || adj[v].count_ones() as usize >= max_degree {
            continue;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        e.push((u, v));
    }
    Graph::from_edge_list(n, &e).unwrap()
}

/// Random graph without three pairwise non-adjacent vertices.
pub fn random_o3_free(r: &mut ChaCha8Rng, n: usize) -> Graph {
    let keep = r.gen_range(0.2..1.0);
    random_triangle_free(r, n, keep, n).complement()
}

/// Random connected triangle-free graph with maximum degree at most 4.
pub fn random_connected_triangle_free_deg4(r: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let mut adj = vec![0u64; n];
        let mut e = Vec::new();
        // Random spanning tree first, then extra edges.
        for v in 1..n {
            let cands: Vec<usize> = (0..v).filter(|&u| adj[u].count_ones() < 4).collect();
            let Some(&u) = cands.choose(r) else { break };
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            e.push((u, v));
        }
        if e.len() != n.saturating_sub(1) {
            continue;
        }
        let extra = r.gen_range(0..=2 * n);
        for _ in 0..extra {
            let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
            if u == v || adj[u] >> v & 1 == 1 || adj[u] & adj[v] != 0 {
                continue;
            }
            if adj[u].count_ones() >= 4 || adj[v].count_ones() >= 4 {
                continue;
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            e.push((u.min(v), u.max(v)));
        }
        return Graph::from_edge_list(n, &e).unwrap();
    }
}

/// Chordal graph as the intersection graph of random subtrees of a random tree.
pub fn random_chordal(r: &mut ChaCha8Rng, n: usize, tree_nodes: usize, max_subtree: usize) -> Graph {
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); tree_nodes];
    for v in 1..tree_nodes {
        let u = r.gen_range(0..v);
        tree[u].push(v);
        tree[v].push(u);
    }
    let subtrees: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            let size = r.gen_range(1..=max_subtree.min(tree_nodes));
            let mut inside = vec![false; tree_nodes];
            let start = r.gen_range(0..tree_nodes);
            inside[start] = true;
            let mut frontier: Vec<usize> = tree[start].clone();
            let mut count = 1;
            while count < size && !frontier.is_empty() {
                let i = r.gen_range(0..frontier.len());
                let t = frontier.swap_remove(i);
                if inside[t] {
                    continue;
                }
                inside[t] = true;
                count += 1;
                frontier.extend(tree[t].iter().copied().filter(|&w| !inside[w]));
            }
            inside
        })
        .collect();
    edges_of(n, |u, v| (0..tree_nodes).any(|t| subtrees[u][t] && subtrees[v][t]))
}

/// `g` with one extra vertex adjacent to `nbrs`.
pub fn with_vertex(g: &Graph, nbrs: &[usize]) -> Graph {
    let n = g.n();
    let mut e = g.edges();
    e.extend(nbrs.iter().map(|&v| (v, n)));
    Graph::from_edge_list(n + 1, &e).unwrap()
}

/// Grow a connected graph inside a hereditary class by adding vertices with
/// locally chosen neighborhoods and rejecting additions that leave the class.
pub fn grow_member(
    r: &mut ChaCha8Rng,
    seed: &Graph,
    target_n: usize,
    member: &dyn Fn(&Graph) -> bool,
) -> Option<Graph> {
    let mut g = seed.clone();
    let mut failures = 0;
    while g.n() < target_n {
        let n = g.n();
        let v = r.gen_range(0..n);
        let mut pool: Vec<usize> = g.neighbors(v).iter().chain([v]).collect();
        if r.gen_bool(0.5) {
            let w = pool[r.gen_range(0..pool.len())];
            pool.extend(g.neighbors(w).iter());
        }
        if r.gen_bool(0.15) {
            pool.push(r.gen_range(0..n));
        }
        pool.sort_unstable();
        pool.dedup();
        let keep = r.gen_range(0.3..1.0);
        let mut nbrs: Vec<usize> = pool.into_iter().filter(|_| r.gen_bool(keep)).collect();
        if nbrs.is_empty() {
            nbrs.push(v);
        }
        let h = with_vertex(&g, &nbrs);
        if member(&h) {
            g = h;
            failures = 0;
        } else {
            failures += 1;
            if failures > 400 {
                return None;
            }
        }
    }
    Some(g)
}

pub fn permutation(r: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    perm
}

/// Random relabeling.
pub fn shuffled(r: &mut ChaCha8Rng, g: &Graph) -> Graph {
    g.relabel(&permutation(r, g.n()))
}

/// The 12-vertex 4-regular triangle-free graph with chromatic number 4.
pub fn chvatal() -> Graph {
    let e = [
        (0, 1),
        (0, 4),
        (0, 6),
        (0, 9),
        (1, 2),
        (1, 5),
        (1, 7),
        (2, 3),
        (2, 6),
        (2, 8),
        (3, 4),
        (3, 7),
        (3, 9),
        (4, 5),
        (4, 8),
        (5, 10),
        (5, 11),
        (6, 10),
        (6, 11),
        (7, 8),
        (7, 11),
        (8, 10),
        (9, 10),
        (9, 11),
    ];
    Graph::from_edge_list(12, &e).unwrap()
}

/// Connected components of the graph are paths, or a triangle with a path
/// hanging from each of its vertices: exactly the line graphs of forests with
/// at most three leaves per component.
pub fn is_line_graph_of_small_leaf_forest(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let (h, _) = g.induced_subgraph(c);
        let n = h.n();
        let m = h.edge_count();
        if m + 1 == n {
            return h.max_degree() <= 2;
        }
        if m != n {
            return false;
        }
        // Unicyclic: the cycle must be a triangle and degree-3 vertices must lie on it.
        let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            alive[v] = false;
            for w in h.neighbors(v).iter().filter(|&w| alive[w]) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
        let cycle: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        cycle.len() == 3
            && (0..n).all(|v| if cycle.contains(&v) { h.degree(v) <= 3 } else { h.degree(v) <= 2 })
    })
}
