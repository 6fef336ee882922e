//! Where graphs come from: a graph6 file (or stdin), a named family, or the
//! built-in enumeration of connected graphs.

use std::io::Read;
use std::path::Path;

use copwin::enumerate::connected_classes;
use copwin::generators::{generate, GraphFamily};
use copwin::graph6::parse_graph6;
use copwin::{Error, Graph};

/// One input graph, or the reason it could not be read.
pub struct Item {
    /// 1-based line in the input file, or position in the generated list.
    pub index: usize,
    pub graph: Result<Graph, Error>,
}

/// Reads graph6 lines from `path` (`-` is stdin). Blank lines are skipped.
pub fn read_graph6_file(path: &Path) -> std::io::Result<Vec<Item>> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(parse_graph6_lines(&text))
}

pub fn parse_graph6_lines(text: &str) -> Vec<Item> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| Item {
            index: i + 1,
            graph: parse_graph6(line.trim_end()),
        })
        .collect()
}

/// All connected graphs of order `1..=nmax`, one per isomorphism class.
pub fn enumeration(nmax: usize) -> Result<Vec<Item>, Error> {
    let mut items = Vec::new();
    for n in 1..=nmax {
        for graph in connected_classes(n)? {
            items.push(Item {
                index: items.len() + 1,
                graph: Ok(graph),
            });
        }
    }
    Ok(items)
}

/// `name` or `name:param`; `connected:N` lists every connected graph of order N.
pub fn family_graphs(spec: &str) -> Result<Vec<Graph>, Error> {
    if let Some(n) = spec.strip_prefix("connected:") {
        let n = n.parse().map_err(|_| Error::UnsupportedParameter {
            family: "connected",
            reason: format!("bad order {n:?}"),
        })?;
        return connected_classes(n);
    }
    let family: GraphFamily = spec.parse()?;
    Ok(vec![generate(family)?])
}
