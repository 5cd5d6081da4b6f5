//! The line-based graph and family file formats, and JSON shapes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::setsystem::SetSystem;

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with `#` comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

/// Reads the `vertices` header, which must come first.
fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<(usize, Vec<String>)> {
    match lines.next() {
        Some((n, words)) if words[0] == "vertices" => {
            Ok((n, words[1..].iter().map(|w| w.to_string()).collect()))
        }
        Some((n, _)) => Err(parse_error(n, "expected `vertices ...` as the first line")),
        None => Err(parse_error(1, "missing `vertices ...` line")),
    }
}

fn vertex(g: &Graph, line: usize, name: &str) -> Result<usize> {
    g.index_of(name)
        .map_err(|_| parse_error(line, format!("unknown vertex `{name}`")))
}

/// Parses a graph file: `vertices a b ..`, then `edge a b` and `loop a`
/// lines. Repeating an edge or loop is an error.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (first, labels) = header(&mut lines)?;
    let mut g = Graph::new(labels).map_err(|e| parse_error(first, e.to_string()))?;
    for (n, words) in lines {
        match words[..] {
            ["edge", a, b] => {
                let (u, v) = (vertex(&g, n, a)?, vertex(&g, n, b)?);
                if u == v {
                    return Err(parse_error(
                        n,
                        "an edge needs two distinct vertices, use `loop`",
                    ));
                }
                if g.entry(u, v) {
                    return Err(parse_error(n, format!("edge {a} {b} given twice")));
                }
                g.set_entry(u, v, true);
            }
            ["loop", a] => {
                let u = vertex(&g, n, a)?;
                if g.has_loop(u) {
                    return Err(parse_error(n, format!("loop {a} given twice")));
                }
                g.set_entry(u, u, true);
            }
            _ => {
                return Err(parse_error(
                    n,
                    format!("expected `edge a b` or `loop a`, got `{}`", words.join(" ")),
                ))
            }
        }
    }
    Ok(g)
}

/// Canonical form: vertices as declared, edges by declared position, then
/// loops.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::from("vertices");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("edge {} {}\n", g.label(u), g.label(v)));
    }
    for u in g.loops().iter() {
        out.push_str(&format!("loop {}\n", g.label(u)));
    }
    out
}

/// Parses a family file: `vertices a b ..`, then one `set a b ..` line per
/// member. A bare `set` is the empty set.
pub fn parse_family(text: &str) -> Result<SetSystem> {
    let mut lines = content_lines(text);
    let (first, labels) = header(&mut lines)?;
    let ground = Graph::new(labels.clone()).map_err(|e| parse_error(first, e.to_string()))?;
    let mut family = Vec::new();
    for (n, words) in lines {
        if words[0] != "set" {
            return Err(parse_error(
                n,
                format!("expected `set ...`, got `{}`", words[0]),
            ));
        }
        let mut x = VertexSet::EMPTY;
        for w in &words[1..] {
            x = x.with(vertex(&ground, n, w)?);
        }
        family.push(x);
    }
    SetSystem::new(labels, family)
}

/// Parses `p,q` into a vertex set of `g`. The empty string is the empty set.
pub fn parse_set(g: &Graph, text: &str) -> Result<VertexSet> {
    let names: Vec<&str> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    g.set_of(&names)
}

/// `p,q,r`, or `{}` for the empty set.
pub fn set_text(names: &[String]) -> String {
    if names.is_empty() {
        "{}".to_string()
    } else {
        names.join(",")
    }
}

/// Members of a family in text form, separated by ` | `.
pub fn family_text(m: &SetSystem) -> String {
    m.named_sets()
        .iter()
        .map(|s| set_text(s))
        .collect::<Vec<_>>()
        .join(" | ")
}

#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub loops: Vec<String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .into_iter()
                .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                .collect(),
            loops: g.names_of(g.loops()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyJson {
    pub sets: Vec<Vec<String>>,
}

impl From<&SetSystem> for FamilyJson {
    fn from(m: &SetSystem) -> Self {
        FamilyJson {
            sets: m.named_sets(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: &str =
        "# example\nvertices p q r s\nedge p q\nedge p r\nedge p s\nedge q s\nedge r s\nloop q\n";

    #[test]
    fn round_trip() {
        let g = parse_graph(G).unwrap();
        assert_eq!(serialize_graph(&g), G.trim_start_matches("# example\n"));
        let shuffled = "vertices p q r s\nloop q # looped\n\nedge s r\nedge q s\nedge s p\nedge r p\nedge q p\n";
        assert_eq!(
            serialize_graph(&parse_graph(shuffled).unwrap()),
            serialize_graph(&g)
        );
    }

    #[test]
    fn rejects_bad_input() {
        for (text, line) in [
            ("edge p q\n", 1),
            ("vertices p\nedge p z\n", 2),
            ("vertices p q\nedge p q\nedge q p\n", 3),
            ("vertices p\nedge p p\n", 2),
            ("vertices p\nloop p\nloop p\n", 3),
            ("vertices p\nnode p\n", 2),
            ("vertices p p\n", 1),
            ("", 1),
        ] {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn families_and_sets() {
        let m = parse_family("vertices p q\nset\nset p\nset q p\n").unwrap();
        assert_eq!(family_text(&m), "{} | p | p,q");
        let g = parse_graph(G).unwrap();
        assert_eq!(parse_set(&g, "p, s").unwrap(), VertexSet(0b1001));
        assert_eq!(parse_set(&g, "").unwrap(), VertexSet::EMPTY);
        assert!(parse_set(&g, "p,z").is_err());
        assert!(parse_family("vertices p\nsets p\n").is_err());
    }

    #[test]
    fn json_shape() {
        let g = parse_graph(G).unwrap();
        let text = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(
            text,
            r#"{"vertices":["p","q","r","s"],"edges":[["p","q"],["p","r"],["p","s"],["q","s"],["r","s"]],"loops":["q"]}"#
        );
    }
}
