//! Argument types and command execution for the `colorclass` binary.

mod input;
mod report;

pub use input::parse_graph_arg;

use clap::{Parser, Subcommand, ValueEnum};
use colorclass::atlas::{class_members, in_class, ClassId, MAX_ATLAS_N};
use colorclass::chromatic::{chromatic_auto, is_chordal, solve_with, Method};
use colorclass::classifier::{atlas_table, classify_pair};
use colorclass::edgelist::write_edge_list;
use colorclass::embedding::{find_forbidden, is_free};
use colorclass::gadgets::reduce_to_k14_bull_free;
use colorclass::{Error, Graph};
use report::*;

#[derive(Parser, Debug)]
#[command(name = "colorclass", version, about = "Coloring and complexity lookup for graphs defined by two forbidden induced subgraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Graph arguments are expressions like `K1,3+co(C6)` or `@path` to an edge-list file.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic number with an optimal coloring.
    Chromatic {
        graph: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Whether the graph contains none of the others as an induced subgraph.
    CheckFree {
        graph: String,
        #[arg(required = true)]
        forbidden: Vec<String>,
    },
    /// Complexity of coloring graphs that contain neither H1 nor H2.
    Classify { h1: String, h2: String },
    /// Classify every pair of connected graphs up to a size.
    Atlas {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = AtlasFormat::Json)]
        format: AtlasFormat,
    },
    /// Reduce a connected triangle-free graph of maximum degree 4 to a `{K1,4, bull}`-free one.
    Implant {
        graph: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Membership in the limit classes and a few structural classes.
    Recognize { graph: String },
    /// List the members of a limit class (F, S, T, T', co(T)).
    Catalog {
        class: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::El)]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Chordal,
    O3,
    Clawp5,
    Clawhammer,
    P5c4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AtlasFormat {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    /// Plain edge list, extra information in `#` comment lines.
    El,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Construction { .. } | Error::Parse { .. } | Error::Contract { .. } => 2,
            Error::Size { .. } | Error::Unsupported(_) => 3,
            Error::Internal(_) | Error::Consistency(_) => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

/// Successful output: what goes to stdout, plus any warning for stderr.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub warning: Option<String>,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output { stdout, warning: None }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

pub fn run(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Chromatic { graph, method } => {
            let g = parse_graph_arg(graph)?;
            let (c, m) = match method.to_method() {
                None => chromatic_auto(&g)?,
                Some(m) => (solve_with(&g, m)?, m),
            };
            Ok(json(&ChromaticReport { chi: c.k(), coloring: c.colors().to_vec(), method: m.tag() }).into())
        }
        Command::CheckFree { graph, forbidden } => {
            let g = parse_graph_arg(graph)?;
            let pats = forbidden.iter().map(|s| parse_graph_arg(s)).collect::<Result<Vec<Graph>, _>>()?;
            if pats.iter().any(|p| p.n() == 0) {
                return Err(CliError::usage("forbidden graphs must have at least one vertex"));
            }
            let witness = find_forbidden(&g, &pats).map(|(i, e)| Witness {
                pattern: i,
                graph: forbidden[i].clone(),
                vertices: e.map,
            });
            Ok(json(&CheckFreeReport { free: witness.is_none(), witness }).into())
        }
        Command::Classify { h1, h2 } => {
            let (a, b) = (parse_graph_arg(h1)?, parse_graph_arg(h2)?);
            let v = classify_pair(&a, &b)?;
            Ok(json(&ClassifyReport::new(&v)).into())
        }
        Command::Atlas { max_n, format } => {
            let table = atlas_table(*max_n)?;
            let stdout = match format {
                AtlasFormat::Json => json(&AtlasReport::new(&table)),
                AtlasFormat::Tsv => atlas_tsv(&table),
            };
            Ok(Output { stdout, warning: table.warning.clone() })
        }
        Command::Implant { graph, format } => {
            let g = parse_graph_arg(graph)?;
            let red = reduce_to_k14_bull_free(&g)?;
            let stdout = match format {
                GraphFormat::Json => json(&ImplantReport::new(&red)),
                GraphFormat::El => {
                    let mut s = String::new();
                    for (i, site) in red.trace.iter().enumerate() {
                        s.push_str(&format!("# step {i}: x={} a={:?} b={:?}\n", site.x, site.a.to_vec(), site.b.to_vec()));
                    }
                    s + &write_edge_list(&red.graph)
                }
            };
            Ok(stdout.into())
        }
        Command::Recognize { graph } => {
            let g = parse_graph_arg(graph)?;
            let lookup = |cls| if g.n() <= MAX_ATLAS_N { in_class(&g, cls).map(Some) } else { Ok(None) };
            Ok(json(&RecognizeReport {
                n: g.n(),
                f: in_class(&g, ClassId::F)?,
                s: in_class(&g, ClassId::S)?,
                t: lookup(ClassId::T)?,
                t_prime: lookup(ClassId::TPrime)?,
                co_t: lookup(ClassId::CoT)?,
                chordal: is_chordal(&g).0,
                o3_free: is_free(&g, &[Graph::empty(3)]),
            })
            .into())
        }
        Command::Catalog { class, max_n, format } => {
            let cls = ClassId::from_tag(class)
                .ok_or_else(|| CliError::usage(format!("unknown class '{class}', expected one of F, S, T, T', co(T)")))?;
            let members = class_members(cls, *max_n)?;
            let stdout = match format {
                GraphFormat::Json => json(&CatalogReport {
                    class: cls.tag(),
                    max_n: *max_n,
                    members: members.iter().map(GraphJson::new).collect(),
                }),
                GraphFormat::El => members
                    .iter()
                    .enumerate()
                    .map(|(i, g)| format!("# {} member {i}\n{}", cls.tag(), write_edge_list(g)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok(stdout.into())
        }
    }
}

impl MethodArg {
    fn to_method(self) -> Option<Method> {
        match self {
            MethodArg::Auto => None,
            MethodArg::Brute => Some(Method::Brute),
            MethodArg::Chordal => Some(Method::Chordal),
            MethodArg::O3 => Some(Method::O3Free),
            MethodArg::Clawp5 => Some(Method::ClawP5),
            MethodArg::Clawhammer => Some(Method::ClawHammer),
            MethodArg::P5c4 => Some(Method::P5C4),
        }
    }
}
