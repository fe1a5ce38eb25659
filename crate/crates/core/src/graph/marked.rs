use std::fmt;
use std::sync::Arc;

use super::{CyclicPath, DirEdge, EdgePath, Graph, GraphMap};
use crate::error::{Error, Result};

/// A self-map of a graph together with a loop around the puncture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedMap {
    map: GraphMap,
    boundary: CyclicPath,
}

/// A pair of directions at a common vertex whose images share a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldCandidate {
    pub d1: DirEdge,
    pub d2: DirEdge,
    /// Length of the maximal common prefix of the images of `d1` and `d2`.
    pub prefix_len: usize,
    /// Index in the boundary loop of the step `d1.rev()`; `d2` follows it.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    NotASpine(String),
    BoundaryNotComposable,
    BoundaryNotTight,
    NotBoundaryLike,
    EmptyImage(String),
    ImageNotTight(String),
    EndpointMismatch(String),
    OrientationReversing,
    BoundaryNotPreserved,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotASpine(msg) => write!(f, "graph is not a spine: {msg}"),
            Self::BoundaryNotComposable => f.write_str("σ is not a composable loop"),
            Self::BoundaryNotTight => f.write_str("σ is not cyclically tight"),
            Self::NotBoundaryLike => f.write_str(
                "σ not boundary-like: it must traverse every edge exactly once in each direction",
            ),
            Self::EmptyImage(e) => write!(f, "image of edge `{e}` is empty"),
            Self::ImageNotTight(e) => write!(f, "image of edge `{e}` is not tight"),
            Self::EndpointMismatch(e) => write!(f, "image of edge `{e}` does not respect endpoints"),
            Self::OrientationReversing => f.write_str("f(σ) is freely homotopic to σ⁻¹"),
            Self::BoundaryNotPreserved => f.write_str("f(σ) is not a rotation of σ"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            return Ok(());
        }
        if self.issues.contains(&ValidationIssue::OrientationReversing) {
            return Err(Error::OrientationReversing);
        }
        Err(Error::Invalid(self.to_string()))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        let msgs: Vec<String> = self.issues.iter().map(ToString::to_string).collect();
        f.write_str(&msgs.join("; "))
    }
}

/// True if `sigma` crosses every unoriented edge exactly once in each
/// direction.
pub(crate) fn is_boundary_like(g: &Graph, sigma: &CyclicPath) -> bool {
    let mut seen = vec![[false; 2]; g.edge_count()];
    for &d in sigma.steps() {
        if d.edge >= g.edge_count() {
            return false;
        }
        let slot = &mut seen[d.edge][d.reversed as usize];
        if *slot {
            return false;
        }
        *slot = true;
    }
    seen.iter().all(|s| s[0] && s[1])
}

/// First consecutive pair `e1 e2` of `sigma`, in spelling order, whose
/// images cancel when concatenated.
pub fn fold_candidate(map: &GraphMap, sigma: &CyclicPath) -> Option<FoldCandidate> {
    let n = sigma.len();
    for i in 0..n {
        let e1 = sigma.at(i);
        let e2 = sigma.at((i + 1) % n);
        let (img1, img2) = (map.image(e1), map.image(e2));
        let (Some(last), Some(first)) = (img1.last(), img2.first()) else {
            continue;
        };
        if last.rev() != first {
            continue;
        }
        let (d1, d2) = (e1.rev(), e2);
        let prefix_len = map.image(d1).common_prefix_len(&img2);
        return Some(FoldCandidate {
            d1,
            d2,
            prefix_len,
            position: i,
        });
    }
    None
}

impl MarkedMap {
    /// Pairs a self-map with a loop. Only structural agreement is checked
    /// here; see [`MarkedMap::validate`] for the standing assumptions.
    pub fn new(map: GraphMap, boundary: CyclicPath) -> Result<Self> {
        if map.domain() != map.range() {
            return Err(Error::Invalid("map is not a self-map".into()));
        }
        boundary.check_composable(map.domain())?;
        Ok(Self { map, boundary })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        self.map.domain()
    }

    pub fn map(&self) -> &GraphMap {
        &self.map
    }

    pub fn boundary(&self) -> &CyclicPath {
        &self.boundary
    }

    pub fn size(&self) -> usize {
        self.map.size()
    }

    pub fn genus(&self) -> Result<usize> {
        self.graph().genus()
    }

    pub fn validate(&self) -> ValidationReport {
        let g = self.graph();
        let mut issues = Vec::new();
        if let Err(e) = g.genus() {
            issues.push(ValidationIssue::NotASpine(e.to_string()));
        }
        let composable = self.boundary.check_composable(g).is_ok();
        if !composable {
            issues.push(ValidationIssue::BoundaryNotComposable);
        } else if !self.boundary.is_cyclically_tight() {
            issues.push(ValidationIssue::BoundaryNotTight);
        }
        if !is_boundary_like(g, &self.boundary) {
            issues.push(ValidationIssue::NotBoundaryLike);
        }
        for e in 0..g.edge_count() {
            let img = self.map.edge_image(e);
            let label = g.edge(e).label.clone();
            if img.is_empty() {
                issues.push(ValidationIssue::EmptyImage(label));
            } else if !img.is_tight() {
                issues.push(ValidationIssue::ImageNotTight(label));
            }
        }
        let mismatches = self.map.endpoint_mismatches();
        for &e in &mismatches {
            issues.push(ValidationIssue::EndpointMismatch(g.edge(e).label.clone()));
        }
        if composable && mismatches.is_empty() {
            let image = self
                .map
                .apply_unchecked(self.boundary.steps())
                .tightened();
            let image = CyclicPath::from(image).cyclically_tightened();
            let sigma = self.boundary.cyclically_tightened();
            if !image.is_rotation_of(&sigma) {
                if image.is_rotation_of(&sigma.inverse()) {
                    issues.push(ValidationIssue::OrientationReversing);
                } else {
                    issues.push(ValidationIssue::BoundaryNotPreserved);
                }
            }
        }
        ValidationReport { issues }
    }

    pub fn find_fold_candidate(&self) -> Option<FoldCandidate> {
        fold_candidate(&self.map, &self.boundary)
    }

    pub fn is_immersion(&self) -> bool {
        self.find_fold_candidate().is_none()
    }

    /// Tightness in the sense of the complexity bound: edge images are
    /// nonempty and reduced, and at every vertex two directions have images
    /// with different first steps.
    pub fn is_tight(&self) -> bool {
        if !self.map.is_tight_on_edges() {
            return false;
        }
        let g = self.graph();
        (0..g.vertex_count()).all(|v| {
            let mut firsts = g.directions_at(v).filter_map(|d| self.map.image(d).first());
            match firsts.next() {
                Some(f0) => firsts.any(|f| f != f0),
                None => false,
            }
        })
    }

    /// Removes the non-tightness at vertices all of whose directions start
    /// with the same image letter `x`, by homotoping the vertex image
    /// along `x`. The result is freely homotopic to `f`, so it represents
    /// the same mapping class.
    pub fn tighten(&self) -> Result<MarkedMap> {
        let mut map = self.map.clone();
        let g = self.graph().clone();
        // each pull strictly shortens the map
        loop {
            let stuck = (0..g.vertex_count()).find_map(|v| {
                let mut firsts = g.directions_at(v).map(|d| map.image(d).first());
                let x = firsts.next()??;
                firsts.all(|f| f == Some(x)).then_some((v, x))
            });
            let Some((v, x)) = stuck else { break };
            let range = map.range().clone();
            let mut images = Vec::with_capacity(g.edge_count());
            for (e, edge) in g.edges().iter().enumerate() {
                let mut img = map.edge_image(e).clone();
                if edge.init == v {
                    img = EdgePath::from(vec![x.rev()]).concat(&img);
                }
                if edge.term == v {
                    img = img.concat(&EdgePath::from(vec![x]));
                }
                let img = img.tightened();
                if img.is_empty() {
                    return Err(Error::NotHomotopyEquivalence(format!(
                        "tightening at vertex `{}` collapses edge `{}`",
                        g.vertex_name(v),
                        edge.label
                    )));
                }
                images.push(img);
            }
            let mut vertex_map = map.vertex_map().to_vec();
            vertex_map[v] = range.terminal(x);
            map = GraphMap::new(g.clone(), range, vertex_map, images)?;
        }
        MarkedMap::new(map, self.boundary.clone())
    }

    /// `other ∘ self`, keeping this loop.
    pub fn then(&self, other: &MarkedMap) -> Result<MarkedMap> {
        MarkedMap::new(self.map.then(&other.map)?, self.boundary.clone())
    }

    /// The `n`-th iterate, with tightened images. `n = 0` is the identity.
    pub fn power(&self, n: usize) -> Result<MarkedMap> {
        let mut acc = MarkedMap::new(GraphMap::identity(self.graph().clone()), self.boundary.clone())?;
        for _ in 0..n {
            acc = acc.then(self)?;
        }
        Ok(acc)
    }

    /// Renders the map in the input file grammar.
    pub fn to_text(&self) -> String {
        let g = self.graph();
        let mut out = g.to_string();
        for e in 0..g.edge_count() {
            out.push_str(&format!(
                "map {} = {}\n",
                g.edge(e).label,
                self.map.edge_image(e).display(g)
            ));
        }
        out.push_str(&format!("boundary = {}\n", self.boundary.display(g)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_marked_map;

    const FIG8: &str = "vertices: v\nedge a v v\nedge b v v\nmap a = b a\nmap b = b b a\nboundary = a ~b ~a b\n";

    #[test]
    fn figure_eight_is_valid() {
        let mm = parse_marked_map(FIG8).unwrap();
        assert!(mm.validate().is_ok(), "{}", mm.validate());
        assert_eq!(mm.size(), 5);
        assert_eq!(mm.genus().unwrap(), 1);
    }

    #[test]
    fn figure_eight_candidate() {
        let mm = parse_marked_map(FIG8).unwrap();
        let c = mm.find_fold_candidate().unwrap();
        let g = mm.graph();
        assert_eq!(g.label(c.d1), "~a");
        assert_eq!(g.label(c.d2), "~b");
        assert_eq!(c.prefix_len, 2);
        assert!(!mm.is_immersion());
    }

    #[test]
    fn identity_is_immersion() {
        let text = "vertices: v\nedge a v v\nedge b v v\nmap a = a\nmap b = b\nboundary = a ~b ~a b\n";
        let mm = parse_marked_map(text).unwrap();
        assert!(mm.validate().is_ok());
        assert!(mm.is_immersion());
        assert!(mm.is_tight());
    }

    #[test]
    fn missing_direction_is_not_boundary_like() {
        let text = "vertices: v\nedge a v v\nedge b v v\nmap a = b a\nmap b = b b a\nboundary = a ~b b ~b\n";
        let mm = parse_marked_map(text);
        // `b ~b` is not tight, the loop is still composable
        let report = mm.unwrap().validate();
        assert!(report.issues.contains(&ValidationIssue::NotBoundaryLike));
        assert!(report.to_string().contains("σ not boundary-like"));
    }

    #[test]
    fn orientation_reversing_is_rejected() {
        // a -> ~a, b -> b sends the commutator to a conjugate of its inverse
        let text = "vertices: v\nedge a v v\nedge b v v\nmap a = ~a\nmap b = b\nboundary = a ~b ~a b\n";
        let mm = parse_marked_map(text).unwrap();
        let report = mm.validate();
        assert!(report.issues.contains(&ValidationIssue::OrientationReversing));
        assert!(matches!(report.into_result(), Err(Error::OrientationReversing)));
    }

    #[test]
    fn power_of_figure_eight() {
        let mm = parse_marked_map(FIG8).unwrap();
        let sq = mm.power(2).unwrap();
        assert_eq!(sq.size(), 13);
        assert!(sq.validate().is_ok());
        assert_eq!(mm.power(0).unwrap().size(), 2);
    }

    #[test]
    fn text_round_trip() {
        let mm = parse_marked_map(FIG8).unwrap();
        let again = parse_marked_map(&mm.to_text()).unwrap();
        assert_eq!(mm, again);
    }
}
