//! JSON shapes of the command outputs. Schemas for each live in `schemas/`.

use colorclass::classifier::{AtlasTable, Fact, Verdict};
use colorclass::gadgets::Reduction;
use colorclass::named::catalog_name;
use colorclass::Graph;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct ChromaticReport {
    pub chi: usize,
    pub coloring: Vec<usize>,
    pub method: &'static str,
}

#[derive(Serialize)]
pub struct Witness {
    /// Position of the matched graph among the forbidden arguments.
    pub pattern: usize,
    pub graph: String,
    pub vertices: Vec<usize>,
}

#[derive(Serialize)]
pub struct CheckFreeReport {
    pub free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub status: &'static str,
    pub rule: Option<String>,
    pub citation: Option<&'static str>,
    pub witness: Vec<Value>,
}

impl ClassifyReport {
    pub fn new(v: &Verdict) -> Self {
        ClassifyReport {
            status: v.status.tag(),
            rule: v.rule.map(|r| r.name()),
            citation: v.rule.map(|r| r.citation()),
            witness: v.witness.iter().map(fact_json).collect(),
        }
    }
}

fn fact_json(f: &Fact) -> Value {
    match f {
        Fact::Contains { side, pattern, embedding } => {
            json!({"fact": "contains", "side": side, "pattern": pattern, "embedding": embedding})
        }
        Fact::InducedIn { side, host } => json!({"fact": "induced_in", "side": side, "host": host}),
        Fact::NotInClass { side, class } => json!({"fact": "not_in_class", "side": side, "class": class.tag()}),
        Fact::InSubFamily { side, family } => {
            json!({"fact": "in_sub_family", "side": side, "family": format!("{family:?}")})
        }
    }
}

#[derive(Serialize)]
pub struct GraphJson {
    pub name: Option<&'static str>,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn new(g: &Graph) -> Self {
        GraphJson { name: catalog_name(g), n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

#[derive(Serialize)]
pub struct AtlasRow {
    pub h1: GraphJson,
    pub h2: GraphJson,
    pub status: &'static str,
    pub rule: Option<String>,
}

#[derive(Serialize)]
pub struct Summary {
    pub pairs: usize,
    pub open: usize,
    pub npc: usize,
    pub poly: usize,
}

#[derive(Serialize)]
pub struct AtlasReport {
    pub max_n: usize,
    pub entries: Vec<AtlasRow>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

fn summary(t: &AtlasTable) -> Summary {
    let s = t.summary;
    Summary { pairs: s.pairs, open: s.open, npc: s.npc, poly: s.poly }
}

impl AtlasReport {
    pub fn new(t: &AtlasTable) -> Self {
        AtlasReport {
            max_n: t.max_n,
            entries: t
                .entries
                .iter()
                .map(|e| AtlasRow {
                    h1: GraphJson::new(&e.h1),
                    h2: GraphJson::new(&e.h2),
                    status: e.verdict.status.tag(),
                    rule: e.verdict.rule.map(|r| r.name()),
                })
                .collect(),
            summary: summary(t),
            warning: t.warning.clone(),
        }
    }
}

/// Catalog name when there is one, otherwise `n:u-v,u-v,...`.
fn label(g: &Graph) -> String {
    catalog_name(g).map(str::to_string).unwrap_or_else(|| {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", g.n(), edges.join(","))
    })
}

pub fn atlas_tsv(t: &AtlasTable) -> String {
    let mut out = String::from("h1\th2\tstatus\trule\n");
    for e in &t.entries {
        let rule = e.verdict.rule.map(|r| r.name()).unwrap_or_else(|| "-".into());
        out.push_str(&format!("{}\t{}\t{}\t{rule}\n", label(&e.h1), label(&e.h2), e.verdict.status.tag()));
    }
    let s = summary(t);
    out.push_str(&format!("# pairs={} open={} npc={} poly={}\n", s.pairs, s.open, s.npc, s.poly));
    out
}

#[derive(Serialize)]
pub struct Step {
    pub x: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Serialize)]
pub struct ImplantReport {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub trace: Vec<Step>,
}

impl ImplantReport {
    pub fn new(r: &Reduction) -> Self {
        let g = GraphJson::new(&r.graph);
        ImplantReport {
            n: g.n,
            edges: g.edges,
            trace: r.trace.iter().map(|s| Step { x: s.x, a: s.a.to_vec(), b: s.b.to_vec() }).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct RecognizeReport {
    pub n: usize,
    #[serde(rename = "F")]
    pub f: bool,
    #[serde(rename = "S")]
    pub s: bool,
    /// `null` above seven vertices, where the line-graph classes are not tabulated.
    #[serde(rename = "T")]
    pub t: Option<bool>,
    #[serde(rename = "T'")]
    pub t_prime: Option<bool>,
    #[serde(rename = "co(T)")]
    pub co_t: Option<bool>,
    pub chordal: bool,
    #[serde(rename = "O3-free")]
    pub o3_free: bool,
}

#[derive(Serialize)]
pub struct CatalogReport {
    pub class: &'static str,
    pub max_n: usize,
    pub members: Vec<GraphJson>,
}
