use std::fmt::Write as _;

use super::{DirEdge, Graph};
use crate::error::{Error, Result};

/// A finite sequence of directed edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgePath {
    steps: Vec<DirEdge>,
}

impl From<Vec<DirEdge>> for EdgePath {
    fn from(steps: Vec<DirEdge>) -> Self {
        Self { steps }
    }
}

impl FromIterator<DirEdge> for EdgePath {
    fn from_iter<I: IntoIterator<Item = DirEdge>>(iter: I) -> Self {
        Self {
            steps: iter.into_iter().collect(),
        }
    }
}

pub(crate) fn format_steps(g: &Graph, steps: &[DirEdge]) -> String {
    let mut out = String::new();
    for (i, d) in steps.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{}", g.label(*d));
    }
    out
}

/// Free reduction with a stack.
fn reduce(steps: &[DirEdge]) -> Vec<DirEdge> {
    let mut out: Vec<DirEdge> = Vec::with_capacity(steps.len());
    for &d in steps {
        if out.last() == Some(&d.rev()) {
            out.pop();
        } else {
            out.push(d);
        }
    }
    out
}

impl EdgePath {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[DirEdge] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Option<DirEdge> {
        self.steps.first().copied()
    }

    pub fn last(&self) -> Option<DirEdge> {
        self.steps.last().copied()
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        self.steps.iter().rev().map(|d| d.rev()).collect()
    }

    #[must_use]
    pub fn concat(&self, other: &EdgePath) -> Self {
        self.steps.iter().chain(&other.steps).copied().collect()
    }

    pub(crate) fn extend_from(&mut self, other: &EdgePath) {
        self.steps.extend_from_slice(&other.steps);
    }

    pub fn check_composable(&self, g: &Graph) -> Result<()> {
        for (i, w) in self.steps.windows(2).enumerate() {
            if g.terminal(w[0]) != g.initial(w[1]) {
                return Err(Error::NotComposable(i));
            }
        }
        if let Some(bad) = self.steps.iter().position(|d| d.edge >= g.edge_count()) {
            return Err(Error::Invalid(format!(
                "path step {bad} is not an edge of the graph"
            )));
        }
        Ok(())
    }

    /// The reduced path freely equal to this one.
    pub fn tighten(&self, g: &Graph) -> Result<EdgePath> {
        self.check_composable(g)?;
        Ok(self.tightened())
    }

    /// Free reduction without the composability check.
    #[must_use]
    pub fn tightened(&self) -> EdgePath {
        reduce(&self.steps).into()
    }

    /// No substring `d ~d`.
    pub fn is_tight(&self) -> bool {
        self.steps.windows(2).all(|w| w[0] != w[1].rev())
    }

    /// Length of the longest common prefix.
    pub fn common_prefix_len(&self, other: &EdgePath) -> usize {
        self.steps
            .iter()
            .zip(&other.steps)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn display(&self, g: &Graph) -> String {
        format_steps(g, &self.steps)
    }
}

/// A cyclically ordered sequence of directed edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclicPath {
    steps: Vec<DirEdge>,
}

impl From<Vec<DirEdge>> for CyclicPath {
    fn from(steps: Vec<DirEdge>) -> Self {
        Self { steps }
    }
}

impl From<EdgePath> for CyclicPath {
    fn from(p: EdgePath) -> Self {
        Self { steps: p.steps }
    }
}

impl CyclicPath {
    pub fn steps(&self) -> &[DirEdge] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step `i` read cyclically.
    pub fn at(&self, i: usize) -> DirEdge {
        self.steps[i % self.steps.len()]
    }

    pub fn as_path(&self) -> EdgePath {
        EdgePath::from(self.steps.clone())
    }

    pub fn check_composable(&self, g: &Graph) -> Result<()> {
        self.as_path().check_composable(g)?;
        if let (Some(&first), Some(&last)) = (self.steps.first(), self.steps.last()) {
            if g.terminal(last) != g.initial(first) {
                return Err(Error::NotComposable(self.steps.len() - 1));
            }
        }
        Ok(())
    }

    /// Cyclic free reduction. Cancellation inside the word is removed in
    /// place; cancellation across the wrap-around trims both ends, so the
    /// surviving letters keep their relative order and starting point.
    #[must_use]
    pub fn cyclically_tightened(&self) -> CyclicPath {
        let mut w = reduce(&self.steps);
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == w[hi - 1].rev() {
            lo += 1;
            hi -= 1;
        }
        w.truncate(hi);
        w.drain(..lo);
        w.into()
    }

    pub fn is_cyclically_tight(&self) -> bool {
        let n = self.steps.len();
        if n == 0 {
            return true;
        }
        if n == 1 {
            return true;
        }
        (0..n).all(|i| self.steps[i] != self.steps[(i + 1) % n].rev())
    }

    /// The `r` with `other[i] == self[(i + r) % n]` for all `i`, if any.
    pub fn rotation_to(&self, other: &CyclicPath) -> Option<usize> {
        let n = self.steps.len();
        if n != other.steps.len() {
            return None;
        }
        if n == 0 {
            return Some(0);
        }
        (0..n).find(|&r| (0..n).all(|i| other.steps[i] == self.steps[(i + r) % n]))
    }

    pub fn is_rotation_of(&self, other: &CyclicPath) -> bool {
        self.rotation_to(other).is_some()
    }

    #[must_use]
    pub fn inverse(&self) -> CyclicPath {
        self.steps.iter().rev().map(|d| d.rev()).collect::<Vec<_>>().into()
    }

    pub fn display(&self, g: &Graph) -> String {
        format_steps(g, &self.steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rose4() -> Graph {
        Graph::rose(&["a", "b", "c", "d"]).unwrap()
    }

    #[test]
    fn full_cancellation() {
        let g = Graph::rose(&["a"]).unwrap();
        let p = g.parse_path("a ~a").unwrap();
        assert!(p.tighten(&g).unwrap().is_empty());
    }

    #[test]
    fn figure_eight_product_reduces() {
        let g = Graph::rose(&["a", "b"]).unwrap();
        let p = g.parse_path("b a ~a ~b ~b").unwrap();
        assert_eq!(p.tighten(&g).unwrap().display(&g), "~b");
    }

    #[test]
    fn non_composable_is_rejected() {
        let mut g = Graph::new(["v", "w"]);
        g.add_edge("x", 0, 1).unwrap();
        assert!(matches!(g.parse_path("x x"), Err(Error::NotComposable(0))));
    }

    #[test]
    fn cyclic_tightening_trims_wraparound() {
        let g = rose4();
        let c: CyclicPath = g.parse_path("a b c ~a").unwrap().into();
        assert_eq!(c.cyclically_tightened().display(&g), "b c");
        let c: CyclicPath = g.parse_path("a b ~b c").unwrap().into();
        assert_eq!(c.cyclically_tightened().display(&g), "a c");
    }

    #[test]
    fn rotation_detection() {
        let g = rose4();
        let s: CyclicPath = g.parse_path("a ~b ~a b").unwrap().into();
        let t: CyclicPath = g.parse_path("~a b a ~b").unwrap().into();
        assert_eq!(s.rotation_to(&t), Some(2));
        assert_eq!(s.rotation_to(&s.inverse()), None);
    }
}
