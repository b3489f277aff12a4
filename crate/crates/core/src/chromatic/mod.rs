//! Exact chromatic-number solvers.
//!
//! Every solver returns a [`Coloring`] whose `k()` is the chromatic number of
//! its input. The structural solvers cover `{K1,3, P5}`-free,
//! `{K1,3, hammer}`-free and `{P5, C4}`-free graphs; [`chromatic_exact`] is the
//! small-graph oracle they are checked against.

mod chordal;
mod deletion;
mod exact;
mod matching;
mod o3;
mod structural;

pub use chordal::{color_chordal, is_chordal, EliminationOrder};
pub use deletion::{solve_with_deletion_set, PartialColoring};
pub use exact::{chromatic_exact, k_coloring, MAX_EXACT_N};
pub use matching::{max_matching, Matching};
pub use o3::color_o3_free;
pub use structural::{
    decompose_c5, peel_pendants, solve_claw_hammer_free, solve_claw_p5_free, solve_p5_c4_free, C5Decomposition,
};

use crate::bitset::VertexSet;
use crate::embedding::{find_induced_path, is_free};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::{claw, hammer};

/// A proper vertex coloring with colors `0..k`, every color used at least once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Build from raw colors, relabeling them in order of first appearance.
    pub fn from_colors(raw: &[usize]) -> Coloring {
        let mut relabel = std::collections::HashMap::new();
        let colors: Vec<usize> = raw
            .iter()
            .map(|&c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Coloring { k: relabel.len(), colors }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut out = vec![VertexSet::new(n); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Lift a coloring of an induced subgraph back to the parent's vertex numbering.
    pub(crate) fn scatter(&self, map: &[usize], offset: usize, out: &mut [usize]) {
        for (i, &v) in map.iter().enumerate() {
            out[v] = self.colors[i] + offset;
        }
    }
}

fn check_proper(g: &Graph, c: Coloring) -> Result<Coloring> {
    if c.is_proper(g) {
        Ok(c)
    } else {
        Err(Error::Internal("solver produced an improper coloring".into()))
    }
}

/// Which solver produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Chordal,
    O3Free,
    ClawP5,
    ClawHammer,
    P5C4,
}

impl Method {
    pub const ALL: [Method; 6] =
        [Method::Brute, Method::Chordal, Method::O3Free, Method::ClawP5, Method::ClawHammer, Method::P5C4];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Chordal => "chordal",
            Method::O3Free => "o3",
            Method::ClawP5 => "clawp5",
            Method::ClawHammer => "clawhammer",
            Method::P5C4 => "p5c4",
        }
    }

    pub fn from_tag(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.tag() == s)
    }
}

/// Run one specific solver.
pub fn solve_with(g: &Graph, method: Method) -> Result<Coloring> {
    match method {
        Method::Brute => chromatic_exact(g),
        Method::Chordal => color_chordal(g),
        Method::O3Free => color_o3_free(g),
        Method::ClawP5 => solve_claw_p5_free(g),
        Method::ClawHammer => solve_claw_hammer_free(g),
        Method::P5C4 => solve_p5_c4_free(g),
    }
}

/// Pick the first applicable solver and run it.
///
/// Order: cographs (chordal or small), chordal, O3-free, `{K1,3, P5}`-free,
/// `{K1,3, hammer}`-free, `{P5, C4}`-free, then the exact oracle for small inputs.
pub fn chromatic_auto(g: &Graph) -> Result<(Coloring, Method)> {
    let chordal = is_chordal(g).0;
    let p4_free = find_induced_path(g, 4).is_none();
    if p4_free && !chordal && g.n() <= MAX_EXACT_N {
        return Ok((chromatic_exact(g)?, Method::Brute));
    }
    if chordal {
        return Ok((check_proper(g, color_chordal(g)?)?, Method::Chordal));
    }
    let (path5, c4) = (Graph::path(5), Graph::cycle(4));
    let method = if is_free(g, &[Graph::empty(3)]) {
        Method::O3Free
    } else if is_free(g, &[claw(), path5.clone()]) {
        Method::ClawP5
    } else if is_free(g, &[claw(), hammer()]) {
        Method::ClawHammer
    } else if is_free(g, &[path5, c4]) {
        Method::P5C4
    } else if g.n() <= MAX_EXACT_N {
        Method::Brute
    } else {
        return Err(Error::Unsupported(format!(
            "no structural solver applies and n = {} exceeds the exact bound {MAX_EXACT_N}",
            g.n()
        )));
    };
    Ok((check_proper(g, solve_with(g, method)?)?, method))
}
