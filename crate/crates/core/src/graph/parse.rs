use std::sync::Arc;

use super::{CyclicPath, EdgePath, Graph, GraphMap, MarkedMap};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the line-oriented marked-map format:
///
/// ```text
/// # comment
/// vertices: v
/// edge a v v
/// edge b v v
/// map a = b a
/// map b = b b a
/// boundary = a ~b ~a b
/// ```
///
/// The `vertices:` line may be omitted, in which case vertices are created
/// as edges mention them. Vertex images are read off the edge images.
pub fn parse_marked_map(text: &str) -> Result<MarkedMap> {
    let mut graph = Graph::new(Vec::<String>::new());
    let mut declared_vertices = false;
    let mut maps: Vec<(usize, String, String)> = Vec::new();
    let mut boundary: Option<(usize, String)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if declared_vertices || graph.vertex_count() > 0 {
                return Err(parse_err(line_no, "vertices declared twice or after edges"));
            }
            for name in rest.split_whitespace() {
                if graph.vertex_index(name).is_some() {
                    return Err(parse_err(line_no, format!("duplicate vertex `{name}`")));
                }
                graph.add_vertex(name);
            }
            declared_vertices = true;
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "edge" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [label, vi, vt] = parts[..] else {
                    return Err(parse_err(line_no, "expected `edge <name> <init> <term>`"));
                };
                if !maps.is_empty() || boundary.is_some() {
                    return Err(parse_err(line_no, "edges must precede maps and the boundary"));
                }
                let mut vertex = |name: &str| -> Result<usize> {
                    match graph.vertex_index(name) {
                        Some(v) => Ok(v),
                        None if !declared_vertices => Ok(graph.add_vertex(name)),
                        None => Err(parse_err(line_no, format!("unknown vertex `{name}`"))),
                    }
                };
                let (i, t) = (vertex(vi)?, vertex(vt)?);
                graph
                    .add_edge(label, i, t)
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
            }
            "map" => {
                let (name, path) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line_no, "expected `map <name> = <path>`"))?;
                maps.push((line_no, name.trim().to_string(), path.trim().to_string()));
            }
            "boundary" | "boundary=" => {
                let path = line["boundary".len()..].trim_start();
                let path = path
                    .strip_prefix('=')
                    .ok_or_else(|| parse_err(line_no, "expected `boundary = <path>`"))?;
                if boundary.is_some() {
                    return Err(parse_err(line_no, "boundary given twice"));
                }
                boundary = Some((line_no, path.trim().to_string()));
            }
            other => return Err(parse_err(line_no, format!("unknown keyword `{other}`"))),
        }
    }

    let graph = Arc::new(graph);
    let mut images: Vec<Option<EdgePath>> = vec![None; graph.edge_count()];
    for (line_no, name, path) in maps {
        let e = graph
            .edge_index(&name)
            .ok_or_else(|| parse_err(line_no, format!("unknown edge `{name}`")))?;
        if images[e].is_some() {
            return Err(parse_err(line_no, format!("edge `{name}` mapped twice")));
        }
        let p = graph
            .parse_path(&path)
            .map_err(|err| parse_err(line_no, err.to_string()))?;
        images[e] = Some(p);
    }
    let edge_map: Vec<EdgePath> = images
        .into_iter()
        .enumerate()
        .map(|(e, p)| {
            p.ok_or_else(|| parse_err(0, format!("no image for edge `{}`", graph.edge(e).label)))
        })
        .collect::<Result<_>>()?;

    let (b_line, b_text) = boundary.ok_or_else(|| parse_err(0, "missing `boundary =` line"))?;
    let sigma = graph
        .parse_path(&b_text)
        .map_err(|err| parse_err(b_line, err.to_string()))?;
    let sigma = CyclicPath::from(sigma);
    sigma
        .check_composable(&graph)
        .map_err(|err| parse_err(b_line, format!("boundary is not a loop: {err}")))?;

    let vertex_map = infer_vertex_map(&graph, &edge_map);
    let map = GraphMap::from_parts(graph.clone(), graph, vertex_map, edge_map)?;
    MarkedMap::new(map, sigma)
}

/// Reads vertex images off the endpoints of edge images. Vertices that no
/// nonempty image constrains are fixed.
pub(crate) fn infer_vertex_map(g: &Graph, edge_map: &[EdgePath]) -> Vec<usize> {
    let mut vmap: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for (e, img) in edge_map.iter().enumerate() {
        let edge = g.edge(e);
        if let (Some(first), Some(last)) = (img.first(), img.last()) {
            vmap[edge.init].get_or_insert(g.initial(first));
            vmap[edge.term].get_or_insert(g.terminal(last));
        }
    }
    vmap.into_iter()
        .enumerate()
        .map(|(v, m)| m.unwrap_or(v))
        .collect()
}
