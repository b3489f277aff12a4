use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex order; when perfect, the later neighbors of every vertex form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(pub Vec<usize>);

impl EliminationOrder {
    /// First vertex whose later neighbors are not a clique, with two non-adjacent
    /// later neighbors.
    fn violation(&self, g: &Graph) -> Option<[usize; 3]> {
        let n = g.n();
        let mut pos = vec![0; n];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        for &v in &self.0 {
            let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
            let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
            if let Some(&w) = later.iter().find(|&&w| w != parent && !g.has_edge(parent, w)) {
                return Some([v, parent, w]);
            }
        }
        None
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.violation(g).is_none()
    }

    /// `1 + max later-neighbor count`, which equals the clique number for a perfect order.
    pub fn clique_bound(&self, g: &Graph) -> usize {
        let mut pos = vec![0; g.n()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        self.0
            .iter()
            .map(|&v| 1 + g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).count())
            .max()
            .unwrap_or(0)
    }
}

/// Maximum cardinality search visit order (ties to the lowest index).
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).expect("vertex left");
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            weight[w] += 1;
        }
    }
    order
}

fn peo_candidate(g: &Graph) -> EliminationOrder {
    let mut order = mcs_order(g);
    order.reverse();
    EliminationOrder(order)
}

/// Chordality via maximum cardinality search; the perfect elimination order is
/// returned when the graph is chordal.
pub fn is_chordal(g: &Graph) -> (bool, Option<EliminationOrder>) {
    let peo = peo_candidate(g);
    if peo.is_perfect(g) {
        (true, Some(peo))
    } else {
        (false, None)
    }
}

/// Optimal coloring of a chordal graph: greedy in reverse elimination order.
pub fn color_chordal(g: &Graph) -> Result<Coloring> {
    let peo = peo_candidate(g);
    if let Some(w) = peo.violation(g) {
        return Err(Error::contract("color_chordal needs a chordal graph", w.to_vec()));
    }
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    for &v in peo.0.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|w| color[w]).filter(|&c| c != usize::MAX).collect();
        color[v] = (0..).find(|c| !taken.contains(c)).expect("a free color");
    }
    Ok(Coloring::from_colors(&color))
}
