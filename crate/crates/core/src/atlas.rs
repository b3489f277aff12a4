//! Small graphs up to isomorphism and the forest-derived classes `F`, `S`,
//! `T`, `T'` and `co(T)`.
//!
//! `F` is all forests and `S` the forests with at most three leaves per
//! component. `T` holds the line graphs of members of `S`, `T'` the line graphs
//! of forests of maximum degree three, and `co(T)` the complements of `T`.

use crate::canon::{canonical_key, MAX_CANONICAL_N};
use crate::canon::CanonicalForm;
use crate::embedding::find_induced_embedding_through;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

/// Bound on vertex counts for enumeration and lookup-based membership.
pub const MAX_ATLAS_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassId {
    F,
    S,
    T,
    TPrime,
    CoT,
}

impl ClassId {
    pub const ALL: [ClassId; 5] = [ClassId::F, ClassId::S, ClassId::T, ClassId::TPrime, ClassId::CoT];

    pub fn tag(self) -> &'static str {
        match self {
            ClassId::F => "F",
            ClassId::S => "S",
            ClassId::T => "T",
            ClassId::TPrime => "T'",
            ClassId::CoT => "co(T)",
        }
    }

    /// Accepts the display tag or a plain spelling (`TPRIME`, `COT`), case-insensitively.
    pub fn from_tag(s: &str) -> Option<ClassId> {
        let u = s.to_ascii_uppercase();
        match u.as_str() {
            "F" => Some(ClassId::F),
            "S" => Some(ClassId::S),
            "T" => Some(ClassId::T),
            "T'" | "TPRIME" | "T_PRIME" => Some(ClassId::TPrime),
            "CO(T)" | "COT" | "CO_T" => Some(ClassId::CoT),
            _ => None,
        }
    }
}

/// Graphs kept one per isomorphism class, ordered by canonical form.
#[derive(Clone, Debug, Default)]
pub struct GraphSet {
    members: BTreeMap<CanonicalForm, Graph>,
}

impl GraphSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is present; returns whether it was added.
    pub fn insert(&mut self, g: Graph) -> Result<bool> {
        let key = canonical_key(&g)?;
        if self.members.contains_key(&key) {
            return Ok(false);
        }
        self.members.insert(key, g);
        Ok(true)
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        Ok(self.members.contains_key(&canonical_key(g)?))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.members.keys()
    }

    /// Members with exactly `n` vertices.
    pub fn with_order(&self, n: usize) -> impl Iterator<Item = &Graph> {
        self.iter().filter(move |g| g.n() == n)
    }
}

impl FromIterator<Graph> for GraphSet {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        let mut s = GraphSet::new();
        for g in iter {
            s.insert(g).expect("graph small enough to fingerprint");
        }
        s
    }
}

/// All connected graphs on `1..=max_n` vertices.
pub fn enumerate_connected(max_n: usize) -> Result<GraphSet> {
    if max_n > MAX_ATLAS_N {
        return Err(Error::size("enumerate_connected max_n", max_n, MAX_ATLAS_N));
    }
    grow_connected(max_n, &[])
}

/// All connected graphs on `1..=max_n` vertices with none of `forbidden` as an
/// induced subgraph. Allows up to ten vertices.
///
/// Every connected graph has a vertex whose removal leaves it connected, so the
/// graphs of order `n` arise from those of order `n - 1` by adding one vertex;
/// only embeddings through the new vertex need checking.
pub fn enumerate_connected_free(max_n: usize, forbidden: &[Graph]) -> Result<GraphSet> {
    if max_n > MAX_CANONICAL_N {
        return Err(Error::size("enumerate_connected_free max_n", max_n, MAX_CANONICAL_N));
    }
    grow_connected(max_n, forbidden)
}

fn grow_connected(max_n: usize, forbidden: &[Graph]) -> Result<GraphSet> {
    let mut out = GraphSet::new();
    if max_n == 0 {
        return Ok(out);
    }
    let k1 = Graph::empty(1);
    let mut level = vec![k1];
    if forbidden.iter().any(|p| p.n() == 1) {
        return Ok(out);
    }
    out.insert(level[0].clone())?;
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << (n - 1)) {
                let h = add_vertex(g, mask);
                if !seen.insert(canonical_key(&h)?) {
                    continue;
                }
                if forbidden.iter().any(|p| find_induced_embedding_through(&h, p, n - 1).is_some()) {
                    continue;
                }
                next.push(h);
            }
        }
        for h in &next {
            out.insert(h.clone())?;
        }
        level = next;
    }
    Ok(out)
}

fn add_vertex(g: &Graph, mask: u32) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n)));
    Graph::from_edge_list(n + 1, &edges).expect("valid edges")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestConstraint {
    None,
    MaxDegree3,
    Max3LeavesPerComponent,
}

impl ForestConstraint {
    fn allows_tree(self, t: &Graph) -> bool {
        match self {
            ForestConstraint::None => true,
            ForestConstraint::MaxDegree3 => t.max_degree() <= 3,
            ForestConstraint::Max3LeavesPerComponent => leaves(t) <= 3,
        }
    }
}

fn leaves(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}

pub const MAX_FOREST_EDGES: usize = 7;

/// Trees by edge count, index `e` holding the trees with `e` edges.
fn trees(max_edges: usize) -> Result<Vec<Vec<Graph>>> {
    let mut out = vec![vec![Graph::empty(1)]];
    for e in 1..=max_edges {
        let mut set = GraphSet::new();
        for t in &out[e - 1] {
            for v in 0..t.n() {
                set.insert(add_vertex(t, 1 << v))?;
            }
        }
        out.push(set.iter().cloned().collect());
    }
    Ok(out)
}

/// All forests without isolated vertices having `1..=max_edges` edges whose
/// components satisfy `constraint`.
pub fn enumerate_forests(max_edges: usize, constraint: ForestConstraint) -> Result<GraphSet> {
    if max_edges > MAX_FOREST_EDGES {
        return Err(Error::size("enumerate_forests max_edges", max_edges, MAX_FOREST_EDGES));
    }
    let pool: Vec<Graph> =
        trees(max_edges)?.into_iter().skip(1).flatten().filter(|t| constraint.allows_tree(t)).collect();
    let mut out = GraphSet::new();
    // Multisets of trees as non-decreasing index sequences.
    fn combine(pool: &[Graph], from: usize, budget: usize, cur: &Graph, out: &mut GraphSet) -> Result<()> {
        for (i, t) in pool.iter().enumerate().skip(from) {
            let e = t.n() - 1;
            if e > budget {
                continue;
            }
            let f = cur.disjoint_union(t);
            combine(pool, i, budget - e, &f, out)?;
            out.insert(f)?;
        }
        Ok(())
    }
    combine(&pool, 0, max_edges, &Graph::empty(0), &mut out)?;
    Ok(out)
}

/// All members of `cls` with `1..=max_n` vertices.
pub fn class_members(cls: ClassId, max_n: usize) -> Result<GraphSet> {
    if max_n > MAX_ATLAS_N {
        return Err(Error::size("class_members max_n", max_n, MAX_ATLAS_N));
    }
    let mut out = GraphSet::new();
    match cls {
        ClassId::F | ClassId::S => {
            let c = if cls == ClassId::F { ForestConstraint::None } else { ForestConstraint::Max3LeavesPerComponent };
            let forests = enumerate_forests(max_n.saturating_sub(1), c)?;
            for n in 1..=max_n {
                out.insert(Graph::empty(n))?;
                for f in forests.iter().filter(|f| f.n() <= n) {
                    out.insert(f.disjoint_union(&Graph::empty(n - f.n())))?;
                }
            }
        }
        ClassId::T | ClassId::TPrime | ClassId::CoT => {
            let c = if cls == ClassId::TPrime {
                ForestConstraint::MaxDegree3
            } else {
                ForestConstraint::Max3LeavesPerComponent
            };
            for f in enumerate_forests(max_n, c)?.iter() {
                let l = f.line_graph();
                out.insert(if cls == ClassId::CoT { l.complement() } else { l })?;
            }
        }
    }
    Ok(out)
}

fn lookup(cls: ClassId) -> &'static GraphSet {
    static TABLES: [OnceLock<GraphSet>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let i = match cls {
        ClassId::T => 0,
        ClassId::TPrime => 1,
        _ => 2,
    };
    TABLES[i].get_or_init(|| class_members(cls, MAX_ATLAS_N).expect("within bound"))
}

/// Membership test. `F` and `S` are checked directly for any size; the line
/// graph classes are looked up and need `n <= 7`.
pub fn in_class(g: &Graph, cls: ClassId) -> Result<bool> {
    match cls {
        ClassId::F => Ok(g.is_forest()),
        ClassId::S => Ok(g.is_forest()
            && g.components().iter().all(|c| c.iter().filter(|&v| g.degree(v) == 1).count() <= 3)),
        _ if g.n() == 0 => Ok(true),
        _ if g.n() > MAX_ATLAS_N => Err(Error::size("in_class vertex count", g.n(), MAX_ATLAS_N)),
        _ => lookup(cls).contains(g),
    }
}
