//! Label-invariant fingerprints of small graphs.
//!
//! Each connected component is encoded as the lexicographically largest
//! upper-triangle adjacency string over all vertex orders that respect a
//! color-refinement partition (vertices with a smaller refined color always
//! come first). The partition is an isomorphism invariant, so equal codes are
//! equivalent to isomorphic components. A graph's form is the sorted list of
//! its component codes.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 10;

/// Largest connected component the encoder can pack into a 64-bit code.
const MAX_COMPONENT_N: usize = 11;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices of the graph this form describes.
    pub fn vertex_count(&self) -> usize {
        self.0.chunks(9).map(|c| c[0] as usize).sum()
    }

    /// Rebuild a representative graph (its vertices in canonical order).
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(0);
        for chunk in self.0.chunks(9) {
            let n = chunk[0] as usize;
            let code = u64::from_le_bytes(chunk[1..9].try_into().expect("9-byte chunk"));
            g = g.disjoint_union(&decode_component(n, code));
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > MAX_CANONICAL_N {
        return Err(Error::size("canonical_form vertex count", g.n(), MAX_CANONICAL_N));
    }
    canonical_key(g)
}

/// Canonical form without the overall vertex bound; only components are bounded.
/// Used by the enumerators, whose forests can exceed ten vertices but never have
/// large components.
pub(crate) fn canonical_key(g: &Graph) -> Result<CanonicalForm> {
    let mut codes = Vec::new();
    for comp in g.components() {
        if comp.len() > MAX_COMPONENT_N {
            return Err(Error::size("canonical_form component size", comp.len(), MAX_COMPONENT_N));
        }
        let (sub, _) = g.induced_subgraph(&comp);
        codes.push((sub.n() as u8, component_code(&sub)));
    }
    codes.sort_unstable();
    let mut bytes = Vec::with_capacity(codes.len() * 9);
    for (n, code) in codes {
        bytes.push(n);
        bytes.extend_from_slice(&code.to_le_bytes());
    }
    Ok(CanonicalForm(bytes))
}

fn decode_component(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for i in 1..n {
        for j in 0..i {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((j, i));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("decoded edges are valid")
}

/// Refined vertex colors; `color[v]` depends only on the isomorphism type of `(g, v)`.
fn refine(adj: &[u64]) -> Vec<u32> {
    let n = adj.len();
    let mut color: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut classes = distinct(&color);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = bits(adj[v]).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        color = sigs.iter().map(|s| sorted.binary_search(s).expect("present") as u32).collect();
        let now = sorted.len();
        if now == classes {
            return color;
        }
        classes = now;
    }
}

fn distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

struct Search<'a> {
    adj: &'a [u64],
    cell_of_pos: Vec<u64>,
    order: Vec<usize>,
    best: Option<u64>,
    total: usize,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: u64, code: u64, len: usize) {
        let n = self.adj.len();
        if pos == n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let mut cands = self.cell_of_pos[pos] & !used;
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mut chunk = 0u64;
            for &u in &self.order[..pos] {
                chunk = chunk << 1 | (self.adj[v] >> u & 1);
            }
            let new_code = code << pos | chunk;
            let new_len = len + pos;
            if let Some(best) = self.best {
                if new_code < best >> (self.total - new_len) {
                    continue;
                }
            }
            self.order.push(v);
            self.run(pos + 1, used | 1 << v, new_code, new_len);
            self.order.pop();
        }
    }
}

fn component_code(g: &Graph) -> u64 {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w)).collect();
    let color = refine(&adj);
    let mut cell_of_pos = vec![0u64; n];
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| color[v]);
    for (pos, &v) in by_color.iter().enumerate() {
        let c = color[v];
        cell_of_pos[pos] = (0..n).filter(|&w| color[w] == c).fold(0u64, |m, w| m | 1 << w);
    }
    let mut s = Search { adj: &adj, cell_of_pos, order: Vec::with_capacity(n), best: None, total: n * n.saturating_sub(1) / 2 };
    s.run(0, 0, 0, 0);
    s.best.unwrap_or(0)
}
