//! Diamond implantation and the reduction to `{K1,4, bull}`-free graphs that
//! preserves 3-colorability.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where to implant: vertex `x` and a split of its neighborhood into `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplantSite {
    pub x: usize,
    pub a: VertexSet,
    pub b: VertexSet,
}

impl ImplantSite {
    /// Neighbors of `x` in ascending order, alternately into `a` and `b`.
    pub fn balanced(g: &Graph, x: usize) -> ImplantSite {
        let n = g.n();
        let (mut a, mut b) = (VertexSet::new(n), VertexSet::new(n));
        for (i, v) in g.neighbors(x).iter().enumerate() {
            if i % 2 == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        ImplantSite { x, a, b }
    }
}

/// Replace `x` by a diamond `y1..y4` (`y1`, `y4` the non-adjacent pair), with
/// `y1` joined to `a` and `y4` to `b`.
///
/// Vertices after `x` shift down by one; `y1..y4` become the last four vertices.
pub fn diamond_implant(g: &Graph, site: &ImplantSite) -> Result<Graph> {
    let n = g.n();
    let x = site.x;
    if x >= n {
        return Err(Error::contract("implant vertex out of range", vec![x]));
    }
    if g.degree(x) < 2 {
        return Err(Error::contract("implant vertex must have degree at least 2", vec![x]));
    }
    if site.a.is_empty() || site.b.is_empty() {
        return Err(Error::contract("both sides of the split must be nonempty", vec![x]));
    }
    if !site.a.is_disjoint(&site.b) || &site.a.union(&site.b) != g.neighbors(x) {
        return Err(Error::contract("split must partition the neighborhood", g.neighbors(x).to_vec()));
    }
    let shift = |v: usize| if v > x { v - 1 } else { v };
    let mut edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(u, v)| u != x && v != x).map(|(u, v)| (shift(u), shift(v))).collect();
    let y = [n - 1, n, n + 1, n + 2];
    edges.extend(site.a.iter().map(|v| (shift(v), y[0])));
    edges.extend(site.b.iter().map(|v| (shift(v), y[3])));
    edges.extend([(y[0], y[1]), (y[0], y[2]), (y[1], y[2]), (y[1], y[3]), (y[2], y[3])]);
    Graph::from_edge_list(n + 3, &edges)
}

/// Lowest-index vertex of degree at least 2 whose neighborhood has no edges.
pub fn find_triangle_free_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) >= 2 && g.is_independent(g.neighbors(v)))
}

/// Output of the reduction; each trace entry is in the numbering of the graph
/// at that step.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub trace: Vec<ImplantSite>,
}

pub const MAX_REDUCTION_DEGREE: usize = 4;

/// Implant a diamond at every eligible vertex, one at a time, with balanced splits.
pub fn reduce_to_k14_bull_free(g: &Graph) -> Result<Reduction> {
    let n = g.n();
    if n < 2 {
        return Err(Error::contract("input needs at least two vertices", vec![]));
    }
    if let Some(v) = (0..n).find(|&v| !g.reach(0).contains(v)) {
        return Err(Error::contract("input must be connected", vec![0, v]));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) > MAX_REDUCTION_DEGREE) {
        return Err(Error::contract("input has a vertex of degree above 4", vec![v]));
    }
    for (u, v) in g.edges() {
        if let Some(w) = g.neighbors(u).intersection(g.neighbors(v)).first() {
            let mut t = vec![u, v, w];
            t.sort_unstable();
            return Err(Error::contract("input contains a triangle", t));
        }
    }
    let mut cur = g.clone();
    let mut original = vec![true; n];
    let mut trace = Vec::new();
    while let Some(x) = find_triangle_free_vertex(&cur) {
        if !original[x] {
            return Err(Error::Internal(format!("gadget vertex {x} became an implant site")));
        }
        let site = ImplantSite::balanced(&cur, x);
        cur = diamond_implant(&cur, &site)?;
        original.remove(x);
        original.extend([false; 4]);
        trace.push(site);
    }
    Ok(Reduction { graph: cur, trace })
}
