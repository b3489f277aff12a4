use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest input accepted by [`chromatic_exact`].
pub const MAX_EXACT_N: usize = 16;

/// Chromatic number by trying `k = lower, lower+1, ...` with DSATUR backtracking.
pub fn chromatic_exact(g: &Graph) -> Result<Coloring> {
    if g.n() > MAX_EXACT_N {
        return Err(Error::size("chromatic_exact vertex count", g.n(), MAX_EXACT_N));
    }
    let lower = greedy_clique(g).max(usize::from(g.n() > 0));
    for k in lower..=g.n() {
        if let Some(c) = k_coloring(g, k) {
            return Ok(c);
        }
    }
    Ok(Coloring::from_colors(&[]))
}

pub(crate) fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for s in 0..g.n() {
        let mut clique = 1;
        let mut cand = g.neighbors(s).clone();
        while let Some(v) = cand.iter().max_by_key(|&v| g.neighbors(v).intersection_len(&cand)) {
            clique += 1;
            cand.intersect_with(g.neighbors(v));
        }
        best = best.max(clique);
    }
    best
}

/// A proper coloring with at most `k` colors, if one exists. Panics if `k > 64`.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    assert!(k <= 64);
    let n = g.n();
    let mut st = State { g, k, color: vec![usize::MAX; n], forbidden: vec![0u64; n] };
    if st.search(0, 0) {
        Some(Coloring::from_colors(&st.color))
    } else {
        None
    }
}

struct State<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// Bit c is set when a colored neighbor has color c.
    forbidden: Vec<u64>,
}

impl State<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.forbidden[v].count_ones(), self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn search(&mut self, colored: usize, used: usize) -> bool {
        if colored == self.g.n() {
            return true;
        }
        let v = self.pick().expect("an uncolored vertex remains");
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[v] >> c & 1 == 1 {
                continue;
            }
            self.color[v] = c;
            let saved: Vec<(usize, u64)> = self.g.neighbors(v).iter().map(|w| (w, self.forbidden[w])).collect();
            for &(w, _) in &saved {
                self.forbidden[w] |= 1 << c;
            }
            if self.search(colored + 1, used.max(c + 1)) {
                return true;
            }
            for (w, f) in saved {
                self.forbidden[w] = f;
            }
            self.color[v] = usize::MAX;
        }
        false
    }
}
