//! Graphs, edge paths and graph maps.
//!
//! A [`Graph`] stores each unoriented edge once with a chosen direction; the
//! two orientations are addressed as [`DirEdge`]s. Edge paths are written as
//! whitespace-separated labels where a `~` prefix reverses the edge, so the
//! word `a ~b` runs along `a` and then backwards along `b`.

mod map;
mod marked;
mod parse;
mod path;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use map::GraphMap;
pub use marked::{
    fold_candidate, FoldCandidate, MarkedMap, ValidationIssue, ValidationReport,
};
pub(crate) use marked::is_boundary_like;
pub use parse::parse_marked_map;
pub use path::{CyclicPath, EdgePath};

/// One orientation of an unoriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirEdge {
    pub edge: usize,
    pub reversed: bool,
}

impl DirEdge {
    pub const fn forward(edge: usize) -> Self {
        Self {
            edge,
            reversed: false,
        }
    }

    pub const fn backward(edge: usize) -> Self {
        Self {
            edge,
            reversed: true,
        }
    }

    /// The same edge traversed the other way.
    #[must_use]
    pub const fn rev(self) -> Self {
        Self {
            edge: self.edge,
            reversed: !self.reversed,
        }
    }

    /// Orient `self` so that it agrees with `other` when `self` is forward.
    pub(crate) const fn along(self, reversed: bool) -> Self {
        if reversed {
            self.rev()
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub init: usize,
    pub term: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    by_label: HashMap<String, usize>,
}

/// Characters that cannot appear in an edge or vertex label.
fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label.starts_with('~')
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '#' | '=' | ':'))
}

impl Graph {
    pub fn new<S: Into<String>>(vertex_names: impl IntoIterator<Item = S>) -> Self {
        Self {
            vertex_names: vertex_names.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    /// A rose: one vertex `v` with one loop per label.
    pub fn rose(labels: &[&str]) -> Result<Self> {
        let mut g = Self::new(["v"]);
        for l in labels {
            g.add_edge(*l, 0, 0)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        self.vertex_names.push(name.into());
        self.vertex_names.len() - 1
    }

    pub fn add_edge(&mut self, label: impl Into<String>, init: usize, term: usize) -> Result<usize> {
        let label = label.into();
        if !valid_label(&label) {
            return Err(Error::Invalid(format!("invalid edge label `{label}`")));
        }
        if self.by_label.contains_key(&label) {
            return Err(Error::Invalid(format!("duplicate edge label `{label}`")));
        }
        if init >= self.vertex_count() || term >= self.vertex_count() {
            return Err(Error::Invalid(format!(
                "edge `{label}` references a missing vertex"
            )));
        }
        self.by_label.insert(label.clone(), self.edges.len());
        self.edges.push(Edge { label, init, term });
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn has_label(&self, label: &str) -> bool {
        self.by_label.contains_key(label)
    }

    pub fn initial(&self, d: DirEdge) -> usize {
        let e = &self.edges[d.edge];
        if d.reversed {
            e.term
        } else {
            e.init
        }
    }

    pub fn terminal(&self, d: DirEdge) -> usize {
        self.initial(d.rev())
    }

    pub fn label(&self, d: DirEdge) -> String {
        let l = &self.edges[d.edge].label;
        if d.reversed {
            format!("~{l}")
        } else {
            l.clone()
        }
    }

    pub fn parse_dir(&self, token: &str) -> Result<DirEdge> {
        let (name, reversed) = match token.strip_prefix('~') {
            Some(rest) => (rest, true),
            None => (token, false),
        };
        self.edge_index(name)
            .map(|edge| DirEdge { edge, reversed })
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    /// Parses a whitespace-separated word; the result is checked for composability.
    pub fn parse_path(&self, text: &str) -> Result<EdgePath> {
        let steps = text
            .split_whitespace()
            .map(|t| self.parse_dir(t))
            .collect::<Result<Vec<_>>>()?;
        let path = EdgePath::from(steps);
        path.check_composable(self)?;
        Ok(path)
    }

    /// All directed edges, forward orientations first.
    pub fn directions(&self) -> impl Iterator<Item = DirEdge> + '_ {
        (0..self.edge_count())
            .map(DirEdge::forward)
            .chain((0..self.edge_count()).map(DirEdge::backward))
    }

    /// Directed edges emanating from `v`.
    pub fn directions_at(&self, v: usize) -> impl Iterator<Item = DirEdge> + '_ {
        self.directions().filter(move |d| self.initial(*d) == v)
    }

    /// Number of edge ends at `v`; a loop contributes two.
    pub fn valence(&self, v: usize) -> usize {
        self.directions_at(v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        self.bfs_tree(0).iter().all(|p| p.is_some())
    }

    /// Breadth-first spanning tree from `root`: for each vertex the directed
    /// edge used to reach it (pointing away from the root). The root maps to
    /// `Some(None)`; unreachable vertices map to `None`.
    pub(crate) fn bfs_tree(&self, root: usize) -> Vec<Option<Option<DirEdge>>> {
        let mut parent = vec![None; self.vertex_count()];
        parent[root] = Some(None);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for d in self.directions_at(v).collect::<Vec<_>>() {
                let w = self.terminal(d);
                if parent[w].is_none() {
                    parent[w] = Some(Some(d));
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    /// Genus of the once-punctured surface this graph is a spine of:
    /// `chi(G) = 1 - 2g`.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let twice = 1 - self.euler_characteristic();
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::NonIntegralGenus(twice));
        }
        Ok((twice / 2) as usize)
    }

    /// A label based on `base` that is not used in this graph.
    pub(crate) fn fresh_label(&self, base: &str) -> String {
        if !self.has_label(base) {
            return base.to_string();
        }
        (2..)
            .map(|n| format!("{base}_{n}"))
            .find(|l| !self.has_label(l))
            .expect("unbounded search")
    }

    pub(crate) fn fresh_vertex_name(&self, base: &str) -> String {
        if self.vertex_index(base).is_none() {
            return base.to_string();
        }
        (2..)
            .map(|n| format!("{base}_{n}"))
            .find(|l| self.vertex_index(l).is_none())
            .expect("unbounded search")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertex_names.join(" "))?;
        for e in &self.edges {
            writeln!(
                f,
                "edge {} {} {}",
                e.label, self.vertex_names[e.init], self.vertex_names[e.term]
            )?;
        }
        Ok(())
    }
}
