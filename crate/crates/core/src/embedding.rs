//! Induced-subgraph tests and the parametric graph families used by the
//! complexity rules.

use crate::bitset::VertexSet;
use crate::chromatic::is_chordal;
use crate::graph::Graph;

/// Injective map from pattern vertices to host vertices; `map[p]` is the image of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, host_n: usize) -> VertexSet {
        VertexSet::from_slice(host_n, &self.map)
    }

    /// Check that edges and non-edges are both preserved.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.map;
        if m.len() != pattern.n() || m.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let distinct: std::collections::HashSet<_> = m.iter().collect();
        if distinct.len() != m.len() {
            return false;
        }
        (0..m.len()).all(|a| (a + 1..m.len()).all(|b| pattern.has_edge(a, b) == host.has_edge(m[a], m[b])))
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, step: usize, used: &VertexSet, pin: Option<(usize, usize)>) -> bool {
        if step == self.order.len() {
            return true;
        }
        let pv = self.order[step];
        let mut cand = used.complement();
        for &pw in &self.order[..step] {
            let hw = self.map[pw];
            if self.pattern.has_edge(pv, pw) {
                cand.intersect_with(self.host.neighbors(hw));
            } else {
                cand.difference_with(self.host.neighbors(hw));
            }
        }
        if let Some((p, h)) = pin {
            if p == pv {
                if !cand.contains(h) {
                    return false;
                }
                cand = VertexSet::from_slice(self.host.n(), &[h]);
            } else {
                cand.remove(h);
            }
        }
        let need = self.pattern.degree(pv);
        for hv in cand.iter() {
            if self.host.degree(hv) < need {
                continue;
            }
            self.map[pv] = hv;
            let mut next = used.clone();
            next.insert(hv);
            if self.extend(step + 1, &next, pin) {
                return true;
            }
        }
        false
    }
}

fn search(host: &Graph, pattern: &Graph, pin: Option<(usize, usize)>) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut m = Matcher { host, pattern, order, map: vec![usize::MAX; pattern.n()] };
    if m.extend(0, &VertexSet::new(host.n()), pin) {
        Some(Embedding { map: m.map })
    } else {
        None
    }
}

/// First induced embedding of `pattern` into `host`, searching pattern vertices by
/// decreasing degree and host candidates in ascending order.
pub fn find_induced_embedding(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    search(host, pattern, None)
}

/// An induced embedding whose image contains host vertex `v`.
pub fn find_induced_embedding_through(host: &Graph, pattern: &Graph, v: usize) -> Option<Embedding> {
    (0..pattern.n()).find_map(|p| search(host, pattern, Some((p, v))))
}

pub fn is_induced_subgraph(small: &Graph, big: &Graph) -> bool {
    find_induced_embedding(big, small).is_some()
}

pub fn is_free(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| find_induced_embedding(g, p).is_none())
}

/// First pattern (by index) that embeds, with its witness.
pub fn find_forbidden(g: &Graph, patterns: &[Graph]) -> Option<(usize, Embedding)> {
    patterns.iter().enumerate().find_map(|(i, p)| find_induced_embedding(g, p).map(|e| (i, e)))
}

/// Vertex set of an induced `C_k`, if any.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Option<VertexSet> {
    if k < 3 {
        return None;
    }
    find_induced_embedding(g, &Graph::cycle(k)).map(|e| e.image(g.n()))
}

/// An induced `P_k`, as its vertices in path order.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    find_induced_embedding(g, &Graph::path(k)).map(|e| e.map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyId {
    /// Induced `C_p` for some `p >= k`.
    CycleAtLeast(usize),
    /// `K_1,p` for some `p >= 5`.
    StarAtLeast5,
    /// One of the spanning subgraphs of `2K2`: `2K2`, `K2+2K1`, `O4`.
    Span2K2,
    /// `C3+K1` or `C4+K1`.
    CyclePlusK1,
    /// Complement of `C_q` for some `q >= 6`.
    CoCycleAtLeast6,
    PathP164,
}

/// Whether `g` contains an induced member of the family.
pub fn family_contains(g: &Graph, fam: FamilyId) -> bool {
    let embeds = |p: &Graph| find_induced_embedding(g, p).is_some();
    match fam {
        FamilyId::CycleAtLeast(k) if k <= 3 => !g.is_forest(),
        FamilyId::CycleAtLeast(4) => !is_chordal(g).0,
        FamilyId::CycleAtLeast(k) => (k..=g.n()).any(|p| find_induced_cycle(g, p).is_some()),
        FamilyId::StarAtLeast5 => embeds(&Graph::complete_bipartite(1, 5)),
        FamilyId::Span2K2 => span_2k2().iter().any(embeds),
        FamilyId::CyclePlusK1 => [3, 4].iter().any(|&p| embeds(&Graph::cycle(p).disjoint_union(&Graph::empty(1)))),
        FamilyId::CoCycleAtLeast6 => (6..=g.n()).any(|q| embeds(&Graph::cycle(q).complement())),
        FamilyId::PathP164 => g.n() >= 164 && find_induced_path(g, 164).is_some(),
    }
}

fn span_2k2() -> [Graph; 3] {
    let k2 = Graph::complete(2);
    [k2.disjoint_union(&k2), k2.disjoint_union(&Graph::empty(2)), Graph::empty(4)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubFamilyId {
    /// Induced subgraph of `pK2` for some `p`.
    InMatching,
    /// Induced subgraph of `P5 + pK1` for some `p`.
    InP5PlusIsolated,
    Complete,
    /// A forest on at most six vertices other than `K1,5`.
    SmallForestNotK15,
}

pub fn fits_in_family(g: &Graph, fam: SubFamilyId) -> bool {
    match fam {
        SubFamilyId::InMatching => g.components().iter().all(|c| c.len() <= 2),
        SubFamilyId::InP5PlusIsolated => {
            let host = Graph::path(5).disjoint_union(&Graph::empty(g.n()));
            is_induced_subgraph(g, &host)
        }
        SubFamilyId::Complete => g.is_complete(),
        SubFamilyId::SmallForestNotK15 => {
            g.is_forest() && g.n() <= 6 && !(g.n() == 6 && g.max_degree() == 5)
        }
    }
}
