//! Solvers for `{K1,3, P5}`-free, `{K1,3, hammer}`-free and `{P5, C4}`-free graphs.

use super::{color_chordal, color_o3_free, is_chordal, solve_with_deletion_set, Coloring};
use crate::bitset::VertexSet;
use crate::embedding::{find_forbidden, find_induced_cycle, find_induced_embedding, find_induced_path};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::{claw, hammer};

/// Repeatedly delete degree-one vertices from components that still have at
/// least three vertices. Returns the peeled graph and how many vertices went.
///
/// The chromatic number is unchanged: such a component keeps an edge, so the
/// removed vertex can always be recolored.
pub fn peel_pendants(g: &Graph) -> (Graph, usize) {
    let p = peel(g);
    (p.graph, p.removed.len())
}

struct Peeled {
    graph: Graph,
    map: Vec<usize>,
    /// Removed vertices in removal order.
    removed: Vec<usize>,
}

fn peel(g: &Graph) -> Peeled {
    let n = g.n();
    let comps = g.components();
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = i;
        }
    }
    let mut size: Vec<usize> = comps.iter().map(VertexSet::len).collect();
    let mut alive = g.vertex_set();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    let mut stack: Vec<usize> = (0..n).rev().filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive.contains(v) || degree[v] != 1 || size[comp_of[v]] < 3 {
            continue;
        }
        alive.remove(v);
        removed.push(v);
        for w in g.neighbors(v).iter().filter(|&w| alive.contains(w)) {
            degree[w] -= 1;
            if degree[w] == 1 {
                stack.push(w);
            }
        }
        size[comp_of[v]] -= 1;
    }
    let (graph, map) = g.induced_subgraph(&alive);
    Peeled { graph, map, removed }
}

/// Recolor peeled vertices in reverse removal order, each avoiding its one
/// remaining neighbor.
fn unpeel(g: &Graph, p: &Peeled, inner: &Coloring) -> Coloring {
    let mut color = vec![usize::MAX; g.n()];
    inner.scatter(&p.map, 0, &mut color);
    for &v in p.removed.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|w| color[w]).filter(|&c| c != usize::MAX).collect();
        color[v] = (0..).find(|c| !taken.contains(c)).expect("a free color");
    }
    Coloring::from_colors(&color)
}

/// Solve each component independently and overlay the colorings.
fn per_component(g: &Graph, solve: impl Fn(&Graph) -> Result<Coloring>) -> Result<Coloring> {
    let mut color = vec![0; g.n()];
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp);
        solve(&sub)?.scatter(&map, 0, &mut color);
    }
    Ok(Coloring::from_colors(&color))
}

fn class_check(g: &Graph, patterns: &[Graph], names: &[&str]) -> Result<()> {
    match find_forbidden(g, patterns) {
        Some((i, e)) => Err(Error::contract(format!("input contains an induced {}", names[i]), e.map)),
        None => Ok(()),
    }
}

/// A structural step that must succeed on valid input failed: a bug, not bad input.
fn invariant(e: Error) -> Error {
    match e {
        Error::Contract { msg, witness } => Error::Internal(format!("{msg} (witness {witness:?})")),
        other => other,
    }
}

fn has_o3(g: &Graph) -> bool {
    find_induced_embedding(g, &Graph::empty(3)).is_some()
}

/// Optimal coloring of a `{K1,3, P5}`-free graph.
///
/// A non-chordal component has an induced `C4` or `C5`, and deleting it leaves
/// an O3-free graph.
pub fn solve_claw_p5_free(g: &Graph) -> Result<Coloring> {
    class_check(g, &[claw(), Graph::path(5)], &["K1,3", "P5"])?;
    per_component(g, claw_p5_component)
}

fn claw_p5_component(g: &Graph) -> Result<Coloring> {
    if is_chordal(g).0 {
        return color_chordal(g);
    }
    let cycle = find_induced_cycle(g, 4)
        .or_else(|| find_induced_cycle(g, 5))
        .ok_or_else(|| Error::Internal("non-chordal P5-free component without an induced C4 or C5".into()))?;
    solve_with_deletion_set(g, &cycle, 3, color_o3_free).map_err(invariant)
}

/// Optimal coloring of a `{K1,3, hammer}`-free graph.
pub fn solve_claw_hammer_free(g: &Graph) -> Result<Coloring> {
    class_check(g, &[claw(), hammer()], &["K1,3", "hammer"])?;
    per_component(g, claw_hammer_component)
}

fn claw_hammer_component(g: &Graph) -> Result<Coloring> {
    let n = g.n();
    if n <= 2 {
        return Ok(Coloring::from_colors(&(0..n).collect::<Vec<_>>()));
    }
    if (0..n).all(|v| g.degree(v) == 2) {
        return Ok(color_cycle(g));
    }
    if (0..n).any(|v| g.degree(v) == 1) {
        let p = peel(g);
        let inner = claw_hammer_component(&p.graph)?;
        return Ok(unpeel(g, &p, &inner));
    }
    if let Some(c6) = find_induced_cycle(g, 6) {
        let (rest, _) = g.delete_vertices(&c6);
        if find_induced_embedding(&rest, &Graph::empty(4)).is_some() {
            return Err(Error::Internal("remainder of an induced C6 contains O4".into()));
        }
        return solve_with_deletion_set(g, &c6, 4, color_chordal).map_err(invariant);
    }
    let Some(path) = find_induced_path(g, 5) else {
        return claw_p5_component(g);
    };
    let v = VertexSet::from_slice(n, &path);
    let (rest, _) = g.delete_vertices(&v);
    if has_o3(&rest) {
        return Err(Error::Internal(format!("remainder of the induced P5 {path:?} contains O3")));
    }
    solve_with_deletion_set(g, &v, 3, color_o3_free).map_err(invariant)
}

/// Connected 2-regular graph: two colors along the cycle, a third for the last
/// vertex when the length is odd.
fn color_cycle(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for i in 0..n {
        color[cur] = i % 2;
        let next = g.neighbors(cur).iter().find(|&w| w != prev && color[w] == usize::MAX);
        prev = cur;
        match next {
            Some(w) => cur = w,
            None => break,
        }
    }
    if n % 2 == 1 {
        color[prev] = 2;
    }
    Coloring::from_colors(&color)
}

/// Split of a `{P5, C4}`-free graph around an induced `C5`.
///
/// `v1` is the set of vertices complete to the cycle, `v2` those with exactly
/// three (consecutive) neighbors on it. `g2` is induced on `v1 ∪ v2 ∪ C` and is
/// O3-free. `g1` is induced on everything outside `v2 ∪ C`, so it contains
/// `v1`, which is a clique separating `g1 \ v1` from the rest of `g2`. Hence
/// `chi(G) = max(chi(g1), chi(g2))`.
#[derive(Clone, Debug)]
pub struct C5Decomposition {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub g1: Graph,
    pub g1_map: Vec<usize>,
    pub g2: Graph,
    pub g2_map: Vec<usize>,
}

pub fn decompose_c5(g: &Graph, cycle: &VertexSet) -> Result<C5Decomposition> {
    class_check(g, &[Graph::path(5), Graph::cycle(4)], &["P5", "C4"])?;
    decompose(g, cycle)
}

fn decompose(g: &Graph, cycle: &VertexSet) -> Result<C5Decomposition> {
    let n = g.n();
    let (c_graph, _) = g.induced_subgraph(cycle);
    if cycle.len() != 5 || !c_graph.is_connected() || (0..5).any(|v| c_graph.degree(v) != 2) {
        return Err(Error::contract("vertex set does not induce C5", cycle.to_vec()));
    }
    let mut v1 = VertexSet::new(n);
    let mut v2 = VertexSet::new(n);
    for v in cycle.complement().iter() {
        match g.neighbors(v).intersection_len(cycle) {
            0 => {}
            3 => v2.insert(v),
            5 => v1.insert(v),
            k => {
                return Err(Error::Internal(format!("vertex {v} has {k} neighbors on the C5")));
            }
        }
    }
    let core = v2.union(cycle);
    let g2_set = core.union(&v1);
    let g1_set = core.complement();
    if !g.is_clique(&v1) {
        return Err(Error::Internal("vertices complete to the C5 are not a clique".into()));
    }
    let outside = g1_set.difference(&v1);
    if let Some(v) = core.iter().find(|&v| !g.neighbors(v).is_disjoint(&outside)) {
        return Err(Error::Internal(format!("vertex {v} of the C5 side has a neighbor beyond V1")));
    }
    let (g2, g2_map) = g.induced_subgraph(&g2_set);
    if let Some(e) = find_induced_embedding(&g2, &Graph::empty(3)) {
        let mut w: Vec<usize> = e.map.iter().map(|&i| g2_map[i]).collect();
        w.sort_unstable();
        return Err(Error::contract("C5 side contains O3", w));
    }
    let (g1, g1_map) = g.induced_subgraph(&g1_set);
    Ok(C5Decomposition { v1, v2, g1, g1_map, g2, g2_map })
}

/// Optimal coloring of a `{P5, C4}`-free graph.
pub fn solve_p5_c4_free(g: &Graph) -> Result<Coloring> {
    class_check(g, &[Graph::path(5), Graph::cycle(4)], &["P5", "C4"])?;
    p5_c4(g)
}

fn p5_c4(g: &Graph) -> Result<Coloring> {
    per_component(g, |comp| {
        if is_chordal(comp).0 {
            return color_chordal(comp);
        }
        let cycle = find_induced_cycle(comp, 5)
            .ok_or_else(|| Error::Internal("non-chordal {P5, C4}-free component without an induced C5".into()))?;
        let d = decompose(comp, &cycle)?;
        let c2 = color_o3_free(&d.g2).map_err(invariant)?;
        if c2.k() < d.v1.len() + 3 {
            return Err(Error::Internal("C5 side needs fewer colors than V1 plus the cycle".into()));
        }
        let c1 = p5_c4(&d.g1)?;
        Ok(merge(comp.n(), &d, &c1, &c2))
    })
}

/// Combine colorings of the two sides: `g1`'s colors are renamed so `v1` agrees
/// with `g2`, and its other colors go to names unused on `v1`.
fn merge(n: usize, d: &C5Decomposition, c1: &Coloring, c2: &Coloring) -> Coloring {
    let mut color = vec![usize::MAX; n];
    c2.scatter(&d.g2_map, 0, &mut color);
    let mut rename = vec![usize::MAX; c1.k()];
    for (i, &v) in d.g1_map.iter().enumerate() {
        if d.v1.contains(v) {
            rename[c1.color(i)] = color[v];
        }
    }
    let reserved: Vec<usize> = rename.iter().copied().filter(|&c| c != usize::MAX).collect();
    let mut free = (0..).filter(|c| !reserved.contains(c));
    for r in rename.iter_mut().filter(|r| **r == usize::MAX) {
        *r = free.next().expect("unbounded");
    }
    for (i, &v) in d.g1_map.iter().enumerate() {
        color[v] = rename[c1.color(i)];
    }
    Coloring::from_colors(&color)
}
