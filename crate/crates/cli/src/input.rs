//! Parsing of command-line graph, set and permutation arguments.

use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use gm_core::graph6::parse_graph6;
use gm_core::{Graph, Permutation};
use serde_json::Value;

/// Reads a graph from a graph6 string, a file, or `-` for standard input.
/// File and stdin contents may be a graph6 line or a JSON object with a
/// `"graph6"` field (as printed by other subcommands).
pub fn read_graph(arg: &str) -> Result<Graph> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        return parse_graph6(arg.as_bytes()).map_err(|e| anyhow!("graph argument {arg:?}: {e}"));
    };
    graph_from_text(&text)
        .with_context(|| format!("graph from {}", if arg == "-" { "stdin" } else { arg }))
}

pub fn graph_from_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).context("parsing JSON input")?;
        let g6 = v
            .get("graph6")
            .and_then(Value::as_str)
            .ok_or_else(|| anyhow!("JSON input has no string field \"graph6\""))?;
        return Ok(parse_graph6(g6.as_bytes())?);
    }
    let line = trimmed
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("no graph in input"))?;
    Ok(parse_graph6(line.as_bytes())?)
}

/// Parses `0,1,2` or `[0, 1, 2]`; the empty string is the empty list.
pub fn parse_list(arg: &str) -> Result<Vec<usize>> {
    let inner = arg.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .with_context(|| format!("bad vertex {s:?} in {arg:?}"))
        })
        .collect()
}

pub fn parse_permutation(arg: &str) -> Result<Permutation> {
    let source = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    let trimmed = source.trim();
    // A whole JSON report with a "witness" field is accepted too.
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).context("parsing JSON witness")?;
        let w = v
            .get("witness")
            .cloned()
            .ok_or_else(|| anyhow!("JSON input has no \"witness\" field"))?;
        if w.is_null() {
            bail!("the witness field is null");
        }
        return Ok(serde_json::from_value(w)?);
    }
    Ok(Permutation::new(parse_list(trimmed)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("0,1, 2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_list("[3,4]").unwrap(), vec![3, 4]);
        assert!(parse_list("").unwrap().is_empty());
        assert!(parse_list("1,x").is_err());
    }

    #[test]
    fn graph_text_forms() {
        assert_eq!(graph_from_text("A_\n").unwrap().edge_count(), 1);
        assert_eq!(
            graph_from_text("{\"graph6\": \"A_\", \"order\": 2}")
                .unwrap()
                .order(),
            2
        );
        assert!(graph_from_text("{\"order\": 2}").is_err());
        assert!(graph_from_text("\n\n").is_err());
        assert_eq!(read_graph("B?").unwrap().order(), 3);
    }

    #[test]
    fn permutations() {
        assert_eq!(parse_permutation("[1,0,2]").unwrap().as_slice(), &[1, 0, 2]);
        assert_eq!(
            parse_permutation("{\"isomorphic\": true, \"witness\": [2, 0, 1]}")
                .unwrap()
                .as_slice(),
            &[2, 0, 1]
        );
        assert!(parse_permutation("0,0").is_err());
    }
}
