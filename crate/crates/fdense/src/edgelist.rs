//! Whitespace-separated edge lists: `u v` or `u v w` per line, `#` starts a
//! comment. Weights are positive decimals (`2.5`) or fractions (`1/3`) and
//! default to 1. A line holding a single label declares a vertex, which lets
//! isolated vertices and the id order survive a round trip.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use fdense_core::{Graph, Weight};
use num_traits::{One, Signed};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("{0}")]
    Graph(#[from] fdense_core::Error),
}

fn line_error(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        reason: reason.into(),
    }
}

/// Parses `p/q`, an integer or a plain decimal (optionally signed, optional
/// exponent) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Weight, String> {
    let bad = || format!("cannot parse '{text}' as a number");
    if let Some((p, q)) = text.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(format!("zero denominator in '{text}'"));
        }
        return Ok(Weight::new(p, q));
    }
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty()
        || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()))
    {
        return Err(bad());
    }
    let scale = frac.len() as i32 - exp;
    let all: String = format!("{int}{frac}");
    let mut num: i64 = if all.is_empty() {
        0
    } else {
        all.parse().map_err(|_| bad())?
    };
    let mut den: i64 = 1;
    let pow = |k: i32| 10i64.checked_pow(k.unsigned_abs()).ok_or_else(bad);
    if scale > 0 {
        den = pow(scale)?;
    } else if scale < 0 {
        num = num.checked_mul(pow(-scale)?).ok_or_else(bad)?;
    }
    if neg {
        num = -num;
    }
    Ok(Weight::new(num, den))
}

/// Parses an edge list; ids are assigned in order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::new();
    let mut intern = |name: &str, labels: &mut Vec<String>| -> usize {
        *ids.entry(name.to_string()).or_insert_with(|| {
            labels.push(name.to_string());
            labels.len() - 1
        })
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.len() {
            0 => continue,
            1 => {
                intern(tokens[0], &mut labels);
                continue;
            }
            2 | 3 => {}
            k => {
                return Err(line_error(
                    line,
                    format!("expected 'u v [w]', found {k} fields"),
                ))
            }
        }
        if tokens[0] == tokens[1] {
            return Err(line_error(line, format!("self-loop on '{}'", tokens[0])));
        }
        let w = match tokens.get(2) {
            Some(t) => parse_rational(t).map_err(|e| line_error(line, e))?,
            None => Weight::one(),
        };
        if !w.is_positive() {
            return Err(line_error(line, format!("weight {w} must be positive")));
        }
        let u = intern(tokens[0], &mut labels);
        let v = intern(tokens[1], &mut labels);
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_error(
                line,
                format!("duplicate edge {} {}", tokens[0], tokens[1]),
            ));
        }
        edges.push((u, v, w));
    }
    Ok(Graph::new(labels.len(), edges, Some(labels))?)
}

pub fn format_weight(w: Weight) -> String {
    if w.is_integer() {
        w.numer().to_string()
    } else {
        format!("{}/{}", w.numer(), w.denom())
    }
}

/// Writes `g` so that [`parse_edge_list`] rebuilds the same ids, labels and weights.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={} m={}", g.n(), g.m());
    let mut first_seen = Vec::with_capacity(g.n());
    let mut placed = vec![false; g.n()];
    for (u, v, _) in g.edges() {
        for x in [u, v] {
            if !placed[x] {
                placed[x] = true;
                first_seen.push(x);
            }
        }
    }
    if first_seen.len() != g.n() || first_seen.iter().enumerate().any(|(i, &v)| i != v) {
        for v in 0..g.n() {
            let _ = writeln!(out, "{}", g.label(v));
        }
    }
    let unit = g.is_unweighted() && g.edges().all(|(_, _, w)| w.is_one());
    for (u, v, w) in g.edges() {
        if unit {
            let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
        } else {
            let _ = writeln!(out, "{} {} {}", g.label(u), g.label(v), format_weight(w));
        }
    }
    out
}

/// Weight multiset of `g`, sorted.
pub fn weight_multiset(g: &Graph) -> Vec<Weight> {
    let mut w: Vec<Weight> = g.edges().map(|(_, _, w)| w).collect();
    w.sort();
    w
}
