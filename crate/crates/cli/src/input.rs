use crate::CliError;
use colorclass::edgelist::parse_edge_list;
use colorclass::named::named;
use colorclass::Graph;

/// A graph expression, or `@path` for an edge-list file.
pub fn parse_graph_arg(arg: &str) -> Result<Graph, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
            parse_edge_list(&text).map_err(|e| CliError::usage(format!("{path}: {e}")))
        }
        None => named(arg).map_err(|e| CliError::usage(format!("'{arg}': {e}"))),
    }
}
