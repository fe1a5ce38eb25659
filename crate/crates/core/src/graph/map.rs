use std::sync::Arc;

use super::{CyclicPath, DirEdge, EdgePath, Graph};
use crate::error::{Error, Result};

/// A map of graphs sending vertices to vertices and each edge to an edge
/// path. Only the image of the forward orientation is stored; the reverse
/// orientation maps to the inverse path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMap {
    domain: Arc<Graph>,
    range: Arc<Graph>,
    vertex_map: Vec<usize>,
    edge_map: Vec<EdgePath>,
}

impl GraphMap {
    /// Builds a map and checks that every edge image is a composable path
    /// from the image of its initial vertex to the image of its terminal one.
    pub fn new(
        domain: Arc<Graph>,
        range: Arc<Graph>,
        vertex_map: Vec<usize>,
        edge_map: Vec<EdgePath>,
    ) -> Result<Self> {
        let m = Self::from_parts(domain, range, vertex_map, edge_map)?;
        if let Some(e) = m.endpoint_mismatches().first() {
            return Err(Error::Invalid(format!(
                "image of edge `{}` does not respect endpoints",
                m.domain.edge(*e).label
            )));
        }
        Ok(m)
    }

    /// Like [`GraphMap::new`] but only checks shapes and composability;
    /// endpoint agreement is left to [`GraphMap::endpoint_mismatches`].
    pub(crate) fn from_parts(
        domain: Arc<Graph>,
        range: Arc<Graph>,
        vertex_map: Vec<usize>,
        edge_map: Vec<EdgePath>,
    ) -> Result<Self> {
        if vertex_map.len() != domain.vertex_count() || edge_map.len() != domain.edge_count() {
            return Err(Error::Invalid("graph map does not cover its domain".into()));
        }
        if vertex_map.iter().any(|&v| v >= range.vertex_count()) {
            return Err(Error::Invalid("vertex image outside the range graph".into()));
        }
        for p in &edge_map {
            p.check_composable(&range)?;
        }
        Ok(Self {
            domain,
            range,
            vertex_map,
            edge_map,
        })
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let vertex_map = (0..g.vertex_count()).collect();
        let edge_map = (0..g.edge_count())
            .map(|e| EdgePath::from(vec![DirEdge::forward(e)]))
            .collect();
        Self {
            domain: g.clone(),
            range: g,
            vertex_map,
            edge_map,
        }
    }

    pub fn domain(&self) -> &Arc<Graph> {
        &self.domain
    }

    pub fn range(&self) -> &Arc<Graph> {
        &self.range
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn edge_image(&self, e: usize) -> &EdgePath {
        &self.edge_map[e]
    }

    pub fn image(&self, d: DirEdge) -> EdgePath {
        if d.reversed {
            self.edge_map[d.edge].inverse()
        } else {
            self.edge_map[d.edge].clone()
        }
    }

    /// Edges whose image does not run between the images of their endpoints.
    pub fn endpoint_mismatches(&self) -> Vec<usize> {
        (0..self.domain.edge_count())
            .filter(|&e| {
                let edge = self.domain.edge(e);
                let (vi, vt) = (self.vertex_map[edge.init], self.vertex_map[edge.term]);
                match (self.edge_map[e].first(), self.edge_map[e].last()) {
                    (Some(first), Some(last)) => {
                        self.range.initial(first) != vi || self.range.terminal(last) != vt
                    }
                    _ => vi != vt,
                }
            })
            .collect()
    }

    /// Concatenation of edge images, not tightened.
    pub fn apply(&self, path: &EdgePath) -> Result<EdgePath> {
        path.check_composable(&self.domain)?;
        Ok(self.apply_unchecked(path.steps()))
    }

    pub fn apply_cyclic(&self, path: &CyclicPath) -> Result<CyclicPath> {
        path.check_composable(&self.domain)?;
        Ok(self.apply_unchecked(path.steps()).into())
    }

    pub(crate) fn apply_unchecked(&self, steps: &[DirEdge]) -> EdgePath {
        let mut out = EdgePath::new();
        for &d in steps {
            if d.reversed {
                out.extend_from(&self.edge_map[d.edge].inverse());
            } else {
                out.extend_from(&self.edge_map[d.edge]);
            }
        }
        out
    }

    /// Sum of the lengths of the edge images.
    pub fn size(&self) -> usize {
        self.edge_map.iter().map(EdgePath::len).sum()
    }

    /// Every edge image is nonempty and reduced.
    pub fn is_tight_on_edges(&self) -> bool {
        self.edge_map.iter().all(|p| !p.is_empty() && p.is_tight())
    }

    /// `then ∘ self`, with tightened edge images.
    pub fn then(&self, then: &GraphMap) -> Result<GraphMap> {
        if *then.domain != *self.range {
            return Err(Error::Invalid("composed maps do not match".into()));
        }
        let vertex_map = self.vertex_map.iter().map(|&v| then.vertex_map[v]).collect();
        let edge_map = self
            .edge_map
            .iter()
            .map(|p| then.apply_unchecked(p.steps()).tightened())
            .collect();
        Ok(GraphMap {
            domain: self.domain.clone(),
            range: then.range.clone(),
            vertex_map,
            edge_map,
        })
    }

    /// True if every vertex and edge maps bijectively to a vertex or a
    /// single edge.
    pub fn is_graph_isomorphism(&self) -> bool {
        if self.domain.vertex_count() != self.range.vertex_count()
            || self.domain.edge_count() != self.range.edge_count()
        {
            return false;
        }
        let mut seen_v = vec![false; self.range.vertex_count()];
        for &v in &self.vertex_map {
            if std::mem::replace(&mut seen_v[v], true) {
                return false;
            }
        }
        let mut seen_e = vec![false; self.range.edge_count()];
        for p in &self.edge_map {
            if p.len() != 1 {
                return false;
            }
            let e = p.steps()[0].edge;
            if std::mem::replace(&mut seen_e[e], true) {
                return false;
            }
        }
        true
    }

    /// `name(label) = image` lines, one per edge.
    pub fn display_lines(&self, name: &str) -> Vec<String> {
        (0..self.domain.edge_count())
            .map(|e| {
                format!(
                    "{name}({}) = {}",
                    self.domain.edge(e).label,
                    self.edge_map[e].display(&self.range)
                )
            })
            .collect()
    }
}
