//! Chromatic number for graphs that land in an easy class after deleting a
//! bounded vertex set.
//!
//! With `R = G \ V` independent-set-bounded (no `O_p`), an optimal coloring's
//! classes that meet `V` form a family of at most `|V|` disjoint independent
//! sets, each meeting `V` with at most `p - 1` vertices outside it. We enumerate
//! such families, color what is left with the inner solver, and keep the best
//! total. Two reductions keep the enumeration small without losing optimality:
//!
//! * saturation: a family to which some leftover vertex could still be added is
//!   skipped, since adding it never raises the chromatic number of the leftover;
//! * twins: vertices of `R` with equal neighborhoods are interchangeable, so a
//!   family only ever takes the lowest-numbered unused member of a twin class.

use super::{exact::greedy_clique, Coloring};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

/// Disjoint independent sets covering part of a graph; `classes[i]` gets color `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    pub classes: Vec<VertexSet>,
}

impl PartialColoring {
    pub fn colored(&self, n: usize) -> VertexSet {
        self.classes.iter().fold(VertexSet::new(n), |acc, c| acc.union(c))
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.n());
        self.classes.iter().all(|c| {
            let ok = !c.is_empty() && g.is_independent(c) && c.is_disjoint(&seen);
            seen.union_with(c);
            ok
        })
    }
}

/// Exact `chi(g)` when `g \ deletion` lies in a class handled exactly by `inner`
/// (including all its induced subgraphs) and contains no `p` pairwise
/// non-adjacent vertices.
pub fn solve_with_deletion_set<F>(g: &Graph, deletion: &VertexSet, p: usize, inner: F) -> Result<Coloring>
where
    F: Fn(&Graph) -> Result<Coloring>,
{
    let n = g.n();
    let rest = deletion.complement();
    let (base, base_map) = g.induced_subgraph(&rest);
    let base_coloring = inner(&base).map_err(|e| lift(e, &base_map))?;
    if deletion.is_empty() {
        return Ok(base_coloring);
    }

    let mut search = Search {
        g,
        rest: rest.clone(),
        room: p.saturating_sub(1),
        inner: &inner,
        twins: twin_classes(g, &rest),
        taken: Vec::new(),
        classes: Vec::new(),
        lower: base_coloring.k().max(greedy_clique(g)),
        best: None,
    };
    search.taken = vec![0; search.twins.len()];

    let mut partitions = Vec::new();
    independent_partitions(g, &deletion.to_vec(), &mut Vec::new(), &mut partitions, n);
    partitions.sort_by_key(Vec::len);
    for part in partitions {
        if search.best.as_ref().is_some_and(|b| part.len() >= b.value) || search.finished() {
            break;
        }
        search.classes = part.into_iter().map(|s| Class { outside: 0, members: s }).collect();
        search.extend(0, 0)?;
    }
    let best = search.best.ok_or_else(|| Error::Internal("no family of color classes was evaluated".into()))?;
    let mut color = vec![usize::MAX; n];
    for (i, class) in best.family.classes.iter().enumerate() {
        for v in class.iter() {
            color[v] = i;
        }
    }
    best.rest_coloring.scatter(&best.rest_map, best.family.classes.len(), &mut color);
    Ok(Coloring::from_colors(&color))
}

/// Rewrite a contract witness from subgraph indices to parent indices.
fn lift(e: Error, map: &[usize]) -> Error {
    match e {
        Error::Contract { msg, witness } => {
            Error::Contract { msg, witness: witness.into_iter().map(|v| map[v]).collect() }
        }
        other => other,
    }
}

fn independent_partitions(g: &Graph, vs: &[usize], cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>, n: usize) {
    let Some((&v, tail)) = vs.split_first() else {
        out.push(cur.clone());
        return;
    };
    for i in 0..cur.len() {
        if g.neighbors(v).is_disjoint(&cur[i]) {
            cur[i].insert(v);
            independent_partitions(g, tail, cur, out, n);
            cur[i].remove(v);
        }
    }
    cur.push(VertexSet::from_slice(n, &[v]));
    independent_partitions(g, tail, cur, out, n);
    cur.pop();
}

/// Classes of vertices in `rest` with identical closed or identical open neighborhoods.
fn twin_classes(g: &Graph, rest: &VertexSet) -> Vec<Vec<usize>> {
    let mut closed: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for v in rest.iter() {
        let mut key = g.neighbors(v).clone();
        key.insert(v);
        closed.entry(key).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut open: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for (_, group) in closed {
        if group.len() > 1 {
            out.push(group);
        } else {
            open.entry(g.neighbors(group[0]).clone()).or_default().push(group[0]);
        }
    }
    out.extend(open.into_values());
    for t in &mut out {
        t.sort_unstable();
    }
    out.sort();
    out
}

struct Class {
    members: VertexSet,
    outside: usize,
}

struct Best {
    value: usize,
    family: PartialColoring,
    rest_coloring: Coloring,
    rest_map: Vec<usize>,
}

struct Search<'a, F> {
    g: &'a Graph,
    rest: VertexSet,
    room: usize,
    inner: &'a F,
    twins: Vec<Vec<usize>>,
    taken: Vec<usize>,
    classes: Vec<Class>,
    lower: usize,
    best: Option<Best>,
}

impl<F> Search<'_, F>
where
    F: Fn(&Graph) -> Result<Coloring>,
{
    fn finished(&self) -> bool {
        self.best.as_ref().is_some_and(|b| b.value <= self.lower)
    }

    fn compatible(&self, i: usize, v: usize) -> bool {
        let c = &self.classes[i];
        c.outside < self.room && self.g.neighbors(v).is_disjoint(&c.members)
    }

    fn extend(&mut self, i: usize, from: usize) -> Result<()> {
        if self.finished() {
            return Ok(());
        }
        if i == self.classes.len() {
            return self.evaluate();
        }
        self.extend(i + 1, 0)?;
        for t in from..self.twins.len() {
            let Some(&v) = self.twins[t].get(self.taken[t]) else { continue };
            if !self.compatible(i, v) {
                continue;
            }
            self.classes[i].members.insert(v);
            self.classes[i].outside += 1;
            self.taken[t] += 1;
            self.extend(i, t)?;
            self.taken[t] -= 1;
            self.classes[i].outside -= 1;
            self.classes[i].members.remove(v);
        }
        Ok(())
    }

    fn evaluate(&mut self) -> Result<()> {
        let mut left = self.rest.clone();
        for c in &self.classes {
            left.difference_with(&c.members);
        }
        for i in 0..self.classes.len() {
            if left.iter().any(|v| self.compatible(i, v)) {
                return Ok(());
            }
        }
        let (sub, map) = self.g.induced_subgraph(&left);
        let rest_coloring = (self.inner)(&sub).map_err(|e| lift(e, &map))?;
        let value = self.classes.len() + rest_coloring.k();
        if self.best.as_ref().is_none_or(|b| value < b.value) {
            self.best = Some(Best {
                value,
                family: PartialColoring { classes: self.classes.iter().map(|c| c.members.clone()).collect() },
                rest_coloring,
                rest_map: map,
            });
        }
        Ok(())
    }
}
