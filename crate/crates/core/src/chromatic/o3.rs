use super::{max_matching, Coloring};
use crate::embedding::find_induced_embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Optimal coloring of a graph without three pairwise non-adjacent vertices.
///
/// Color classes have at most two vertices, so an optimal coloring is a maximum
/// matching of the complement plus singletons: `chi = n - nu(complement)`.
pub fn color_o3_free(g: &Graph) -> Result<Coloring> {
    if let Some(e) = find_induced_embedding(g, &Graph::empty(3)) {
        let mut w = e.map;
        w.sort_unstable();
        return Err(Error::contract("color_o3_free needs an O3-free graph", w));
    }
    let n = g.n();
    let m = max_matching(&g.complement());
    let mut color = vec![usize::MAX; n];
    for (i, &(u, v)) in m.edges.iter().enumerate() {
        color[u] = i;
        color[v] = i;
    }
    for (next, c) in (m.size()..).zip(color.iter_mut().filter(|c| **c == usize::MAX)) {
        *c = next;
    }
    Ok(Coloring::from_colors(&color))
}
