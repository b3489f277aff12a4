//! Complexity of coloring `Free({H1, H2})` from a fixed list of sufficient
//! conditions for NP-completeness and for polynomial-time solvability.

use crate::atlas::{enumerate_connected, in_class, ClassId, MAX_ATLAS_N};
use crate::canon::{canonical_key, CanonicalForm};
use crate::embedding::{
    family_contains, find_induced_embedding, fits_in_family, is_induced_subgraph, FamilyId, SubFamilyId,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::named;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleKind {
    Npc,
    Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    N1,
    N2,
    N3,
    N4,
    N5,
    N6,
    N7,
    N8,
    N9,
    N10,
    N11,
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
    P11,
    P12,
    P13,
    P14,
    P15,
}

use RuleId::*;

impl RuleId {
    pub const ALL: [RuleId; 26] = [
        N1, N2, N3, N4, N5, N6, N7, N8, N9, N10, N11, P1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11, P12, P13, P14, P15,
    ];

    pub fn kind(self) -> RuleKind {
        if self < P1 {
            RuleKind::Npc
        } else {
            RuleKind::Poly
        }
    }

    pub fn name(self) -> String {
        format!("{self:?}")
    }

    /// The condition the rule tests, in the notation `H ⊆ X` for "H is an
    /// induced subgraph of X". "One ... other" conditions apply in either order.
    pub fn citation(self) -> &'static str {
        match self {
            N1 => "NP-complete: both graphs contain an induced cycle",
            N2 => "NP-complete: both graphs contain K1,3",
            N3 => "NP-complete: one contains K1,3, the other K4 or K4-e",
            N4 => "NP-complete: one contains K1,3, the other an induced C_p with p >= 4",
            N5 => "NP-complete: both contain an induced spanning subgraph of 2K2",
            N6 => "NP-complete: one contains C3, the other K1,p with p >= 5",
            N7 => "NP-complete: one contains C3, the other P164",
            N8 => "NP-complete: one contains C_p with p >= 5, the other a spanning subgraph of 2K2",
            N9 => "NP-complete: one contains C3+K1, C4+K1 or co(C_q) with q >= 6, the other a spanning subgraph of 2K2",
            N10 => "NP-complete: neither graph lies in one of the limit classes F, T', co(T)",
            N11 => "NP-complete: one contains K1,4, the other bull",
            P1 => "polynomial: each graph is ⊆ P4 or ⊆ P3+K1",
            P2 => "polynomial: one ⊆ K1,3, the other ⊆ C3+K1",
            P3 => "polynomial: one ⊆ paw, the other a forest on at most six vertices other than K1,5",
            P4 => "polynomial: one ⊆ paw, the other ⊆ pK2 or ⊆ P5+pK1",
            P5 => "polynomial: one complete, the other ⊆ qK2 or ⊆ P5+qK1",
            P6 => "polynomial: one ⊆ gem, the other ⊆ P4+K1 or ⊆ P5",
            P7 => "polynomial: one ⊆ co(P5), the other ⊆ P4+K1 or ⊆ 2K2",
            P8 => "polynomial: one graph ⊆ P4",
            P9 => "polynomial: one ⊆ P5, the other ⊆ K5",
            P10 => "polynomial: one ⊆ P5, the other ⊆ gem",
            P11 => "polynomial: one ⊆ P5, the other ⊆ C4",
            P12 => "polynomial: one ⊆ P5, the other ⊆ K1,3",
            P13 => "polynomial: one ⊆ K1,4, the other ⊆ paw",
            P14 => "polynomial: one ⊆ fork, the other ⊆ paw",
            P15 => "polynomial: one ⊆ K1,3, the other ⊆ hammer",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    NpComplete,
    Polynomial,
    Open,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::NpComplete => "NP_COMPLETE",
            Status::Polynomial => "POLYNOMIAL",
            Status::Open => "OPEN",
        }
    }
}

/// Evidence for a rule; `side` is 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    /// `H_side` contains `pattern`; `embedding` maps pattern vertices into `H_side`
    /// when the pattern is a single graph.
    Contains { side: usize, pattern: String, embedding: Option<Vec<usize>> },
    /// `H_side` is an induced subgraph of `host`.
    InducedIn { side: usize, host: String },
    NotInClass { side: usize, class: ClassId },
    InSubFamily { side: usize, family: SubFamilyId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub rule: Option<RuleId>,
    pub witness: Vec<Fact>,
}

#[derive(Clone, Copy)]
struct Side<'a> {
    idx: usize,
    g: &'a Graph,
}

type Found = Option<Vec<Fact>>;

fn graph(expr: &str) -> Graph {
    named(expr).expect("built-in pattern")
}

fn contains(s: Side, expr: &str) -> Option<Fact> {
    find_induced_embedding(s.g, &graph(expr)).map(|e| Fact::Contains {
        side: s.idx,
        pattern: expr.to_string(),
        embedding: Some(e.map),
    })
}

fn contains_family(s: Side, fam: FamilyId, label: &str) -> Option<Fact> {
    family_contains(s.g, fam).then(|| Fact::Contains { side: s.idx, pattern: label.to_string(), embedding: None })
}

fn span_2k2(s: Side) -> Option<Fact> {
    contains_family(s, FamilyId::Span2K2, "spanning subgraph of 2K2")
}

fn within(s: Side, host: &str) -> Option<Fact> {
    is_induced_subgraph(s.g, &graph(host)).then(|| Fact::InducedIn { side: s.idx, host: host.to_string() })
}

fn fits(s: Side, family: SubFamilyId) -> Option<Fact> {
    fits_in_family(s.g, family).then_some(Fact::InSubFamily { side: s.idx, family })
}

fn both(a: Option<Fact>, b: impl FnOnce() -> Option<Fact>) -> Found {
    let a = a?;
    Some(vec![a, b()?])
}

/// Test rule `id` with `a` in the first role and `b` in the second.
fn check(id: RuleId, a: Side, b: Side) -> Result<Found> {
    let cycle = |s: Side, k: usize| contains_family(s, FamilyId::CycleAtLeast(k), &format!("C_p with p >= {k}"));
    Ok(match id {
        N1 => both(cycle(a, 3), || cycle(b, 3)),
        N2 => both(contains(a, "K1,3"), || contains(b, "K1,3")),
        N3 => both(contains(a, "K1,3"), || contains(b, "K4").or_else(|| contains(b, "K4-e"))),
        N4 => both(contains(a, "K1,3"), || cycle(b, 4)),
        N5 => both(span_2k2(a), || span_2k2(b)),
        N6 => both(contains(a, "C3"), || contains_family(b, FamilyId::StarAtLeast5, "K1,p with p >= 5")),
        N7 => both(contains(a, "C3"), || contains_family(b, FamilyId::PathP164, "P164")),
        N8 => both(cycle(a, 5), || span_2k2(b)),
        N9 => both(
            contains_family(a, FamilyId::CyclePlusK1, "C3+K1 or C4+K1")
                .or_else(|| contains_family(a, FamilyId::CoCycleAtLeast6, "co(C_q) with q >= 6")),
            || span_2k2(b),
        ),
        N10 => {
            for class in [ClassId::F, ClassId::TPrime, ClassId::CoT] {
                if !in_class(a.g, class)? && !in_class(b.g, class)? {
                    return Ok(Some(vec![
                        Fact::NotInClass { side: a.idx, class },
                        Fact::NotInClass { side: b.idx, class },
                    ]));
                }
            }
            None
        }
        N11 => both(contains(a, "K1,4"), || contains(b, "bull")),
        P1 => {
            let small = |s: Side| within(s, "P4").or_else(|| within(s, "P3+K1"));
            both(small(a), || small(b))
        }
        P2 => both(within(a, "K1,3"), || within(b, "C3+K1")),
        P3 => both(within(a, "paw"), || fits(b, SubFamilyId::SmallForestNotK15)),
        P4 | P5 => {
            let first = if id == P4 { within(a, "paw") } else { fits(a, SubFamilyId::Complete) };
            both(first, || fits(b, SubFamilyId::InMatching).or_else(|| fits(b, SubFamilyId::InP5PlusIsolated)))
        }
        P6 => both(within(a, "gem"), || within(b, "P4+K1").or_else(|| within(b, "P5"))),
        P7 => both(within(a, "co(P5)"), || within(b, "P4+K1").or_else(|| within(b, "2*K2"))),
        P8 => within(a, "P4").map(|f| vec![f]),
        P9 => both(within(a, "P5"), || within(b, "K5")),
        P10 => both(within(a, "P5"), || within(b, "gem")),
        P11 => both(within(a, "P5"), || within(b, "C4")),
        P12 => both(within(a, "P5"), || within(b, "K1,3")),
        P13 => both(within(a, "K1,4"), || within(b, "paw")),
        P14 => both(within(a, "fork"), || within(b, "paw")),
        P15 => both(within(a, "K1,3"), || within(b, "hammer")),
    })
}

fn fire(id: RuleId, h1: &Graph, h2: &Graph) -> Result<Found> {
    let (s1, s2) = (Side { idx: 1, g: h1 }, Side { idx: 2, g: h2 });
    if let Some(f) = check(id, s1, s2)? {
        return Ok(Some(f));
    }
    check(id, s2, s1)
}

/// Classify `Free({h1, h2})`. Symmetric in its arguments.
///
/// NP-completeness rules are tried first, then polynomial ones, each in rule
/// order. A pair matching rules of both kinds is a [`Error::Consistency`] error.
pub fn classify_pair(h1: &Graph, h2: &Graph) -> Result<Verdict> {
    if h1.n() == 0 || h2.n() == 0 {
        return Err(Error::contract("forbidden graphs must be nonempty", vec![]));
    }
    let mut npc = None;
    for id in RuleId::ALL.into_iter().filter(|r| r.kind() == RuleKind::Npc) {
        if let Some(f) = fire(id, h1, h2)? {
            npc = Some((id, f));
            break;
        }
    }
    let mut poly = None;
    for id in RuleId::ALL.into_iter().filter(|r| r.kind() == RuleKind::Poly) {
        if let Some(f) = fire(id, h1, h2)? {
            poly = Some((id, f));
            break;
        }
    }
    match (npc, poly) {
        (Some((n, _)), Some((p, _))) => {
            Err(Error::Consistency(format!("pair matches both {} and {}", n.name(), p.name())))
        }
        (Some((id, witness)), None) => Ok(Verdict { status: Status::NpComplete, rule: Some(id), witness }),
        (None, Some((id, witness))) => Ok(Verdict { status: Status::Polynomial, rule: Some(id), witness }),
        (None, None) => Ok(Verdict { status: Status::Open, rule: None, witness: vec![] }),
    }
}

#[derive(Clone, Debug)]
pub struct AtlasEntry {
    pub h1: Graph,
    pub h2: Graph,
    pub forms: (CanonicalForm, CanonicalForm),
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AtlasSummary {
    pub pairs: usize,
    pub npc: usize,
    pub poly: usize,
    pub open: usize,
}

#[derive(Clone, Debug)]
pub struct AtlasTable {
    pub max_n: usize,
    pub entries: Vec<AtlasEntry>,
    pub summary: AtlasSummary,
    /// Set when `max_n` goes beyond five vertices.
    pub warning: Option<String>,
}

/// Classify every unordered pair (repetition allowed) of connected graphs on at
/// most `max_n` vertices, in canonical order.
pub fn atlas_table(max_n: usize) -> Result<AtlasTable> {
    if max_n > MAX_ATLAS_N {
        return Err(Error::size("atlas_table max_n", max_n, MAX_ATLAS_N));
    }
    let graphs: Vec<Graph> = enumerate_connected(max_n)?.iter().cloned().collect();
    let forms = graphs.iter().map(canonical_key).collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    let mut summary = AtlasSummary::default();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            let verdict = classify_pair(&graphs[i], &graphs[j])?;
            summary.pairs += 1;
            match verdict.status {
                Status::NpComplete => summary.npc += 1,
                Status::Polynomial => summary.poly += 1,
                Status::Open => summary.open += 1,
            }
            entries.push(AtlasEntry {
                h1: graphs[i].clone(),
                h2: graphs[j].clone(),
                forms: (forms[i].clone(), forms[j].clone()),
                verdict,
            });
        }
    }
    let warning = (max_n > 5).then(|| format!("no enumerated result covers pairs on {max_n} vertices"));
    Ok(AtlasTable { max_n, entries, summary, warning })
}
