//! JSON graph format: `{"n": 3, "labels": ["a", "b", "c"], "edges": [[0, 1, "5/2"], [1, 2, 1]]}`.
//! Weights are integers, decimals or `"p/q"` strings; `labels` is optional.

use fdense_core::{Graph, Weight};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::edgelist::{format_weight, parse_rational, ParseError};

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    edges: Vec<(usize, usize, Value)>,
}

fn weight_of(v: &Value, edge: usize) -> Result<Weight, ParseError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(x) => x.to_string(),
        other => {
            return Err(ParseError::Line {
                line: edge + 1,
                reason: format!("bad weight {other}"),
            })
        }
    };
    parse_rational(&text).map_err(|reason| ParseError::Line {
        line: edge + 1,
        reason,
    })
}

/// Parses the JSON format; error positions count edges from 1.
pub fn parse_json_graph(text: &str) -> Result<Graph, ParseError> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Line {
        line: e.line(),
        reason: e.to_string(),
    })?;
    let edges = raw
        .edges
        .iter()
        .enumerate()
        .map(|(i, (u, v, w))| Ok((*u, *v, weight_of(w, i)?)))
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(Graph::new(raw.n, edges, raw.labels)?)
}

pub fn write_json_graph(g: &Graph) -> String {
    let raw = JsonGraph {
        n: g.n(),
        labels: g.labels().map(|l| l.to_vec()),
        edges: g
            .edges()
            .map(|(u, v, w)| {
                let w = if w.is_integer() {
                    Value::from(*w.numer())
                } else {
                    Value::from(format_weight(w))
                };
                (u, v, w)
            })
            .collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// Parses JSON when the text starts with `{`, the edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json_graph(text)
    } else {
        crate::edgelist::parse_edge_list(text)
    }
}
