//! The end-to-end construction: fold, stack annuli, cone and glue.

use std::fmt;

use crate::error::{Error, Result};
use crate::folding::{decompose, fold_count_bound, FoldKind, FoldSequence};
use crate::graph::MarkedMap;
use crate::homology::{graph_mapping_torus_h1, AbelianGroup};
use crate::surface::{assemble_torus, SurfaceComplex};
use crate::triangulation::{LinkReport, Perm, SurfaceKind, Tetrahedron, Triangulation3};

/// Cones `K` to a point and glues the cones of paired triangles.
///
/// Tetrahedron `t` is the cone on triangle `t`: vertices `0..3` are the
/// triangle's corners and vertex `3` is the cone point. Face `i < 3` is the
/// cone on side `i` and is glued to the cone on the adjacent triangle; face
/// `3` is the triangle itself and is glued by the pairing.
pub fn cone_and_glue(k: &SurfaceComplex) -> Result<Triangulation3> {
    let inc = k.edge_incidences()?;
    let mut tets = Vec::with_capacity(k.triangles.len());
    // corners of a side at the initial and terminal end of its edge
    let ends = |t: usize, i: usize| -> (usize, usize) {
        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
        if k.triangles[t].sides[i].1 {
            (a, b)
        } else {
            (b, a)
        }
    };
    for (t, tri) in k.triangles.iter().enumerate() {
        let mut neighbors = [0; 4];
        let mut gluings = [Perm::IDENTITY; 4];
        for i in 0..3 {
            let e = tri.sides[i].0;
            let (t2, j) = if inc[e][0] == (t, i) { inc[e][1] } else { inc[e][0] };
            let (s, f) = ends(t, i);
            let (s2, f2) = ends(t2, j);
            let mut img = [0u8; 4];
            img[i] = j as u8;
            img[s] = s2 as u8;
            img[f] = f2 as u8;
            img[3] = 3;
            neighbors[i] = t2;
            gluings[i] = Perm::new(img)?;
        }
        let p = k.pairing[t];
        neighbors[3] = p.partner;
        gluings[3] = Perm::new([p.perm[0] as u8, p.perm[1] as u8, p.perm[2] as u8, 3])?;
        tets.push(Tetrahedron { neighbors, gluings });
    }
    Triangulation3::new(tets)
}

/// The complexity bound `16 (5g - 2) S(f)` and how the construction fared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub bound: u64,
    pub actual: usize,
    /// The bound is proved only for tight maps on graphs without vertices
    /// of valence below three, and says nothing when nothing is folded.
    pub applicable: bool,
    pub reason: Option<String>,
}

impl BoundReport {
    pub fn ok(&self) -> bool {
        self.actual as u64 <= self.bound
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} tetrahedra, bound {}", self.actual, self.bound)?;
        match &self.reason {
            Some(r) => write!(f, " (inapplicable: {r})"),
            None => write!(f, " ({})", if self.ok() { "ok" } else { "exceeded" }),
        }
    }
}

pub fn bound_report(mm: &MarkedMap, folds: usize, actual: usize) -> Result<BoundReport> {
    let g = mm.genus()? as u64;
    let bound = 16 * (5 * g).saturating_sub(2) * mm.size() as u64;
    let graph = mm.graph();
    let reason = if !mm.is_tight() {
        Some("f is not tight".to_string())
    } else if (0..graph.vertex_count()).any(|v| graph.valence(v) < 3) {
        Some("a vertex has valence below three".to_string())
    } else if folds == 0 {
        Some("no folds".to_string())
    } else {
        None
    };
    Ok(BoundReport {
        bound,
        actual,
        applicable: reason.is_none(),
        reason,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    pub genus: usize,
    pub size: usize,
    pub folds: usize,
    pub partial_folds: usize,
    pub full_folds: usize,
    /// Sizes of the maps `g_i` after each fold, starting with `S(f)`.
    pub fold_sizes: Vec<usize>,
    pub annulus_triangles: Vec<usize>,
    pub tetrahedra: usize,
    pub fold_count_bound: Option<usize>,
    pub tight: bool,
    pub bound: BoundReport,
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus: {}", self.genus)?;
        writeln!(f, "size: {}", self.size)?;
        writeln!(
            f,
            "folds: {} ({} partial, {} full)",
            self.folds, self.partial_folds, self.full_folds
        )?;
        if let Some(b) = self.fold_count_bound {
            writeln!(f, "fold count bound: {b}")?;
        }
        let sizes: Vec<String> = self.fold_sizes.iter().map(ToString::to_string).collect();
        writeln!(f, "sizes: {}", sizes.join(" "))?;
        let tri: Vec<String> = self.annulus_triangles.iter().map(ToString::to_string).collect();
        writeln!(f, "annulus triangles: {}", tri.join(" "))?;
        writeln!(f, "tight: {}", self.tight)?;
        writeln!(f, "tetrahedra: {}", self.bound)
    }
}

/// Everything the construction produces.
#[derive(Debug, Clone)]
pub struct MappingTorus {
    pub sequence: FoldSequence,
    pub complex: SurfaceComplex,
    pub triangulation: Triangulation3,
    pub links: LinkReport,
    pub diagnostics: Diagnostics,
}

impl MappingTorus {
    /// Index of the cusp vertex orbit.
    pub fn cusp(&self) -> usize {
        self.links
            .links
            .iter()
            .position(|l| l.ideal)
            .expect("checked during construction")
    }

    /// Compares first homology of the triangulation with that of the graph
    /// mapping torus.
    pub fn verify_homology(&self, mm: &MarkedMap) -> Result<AbelianGroup> {
        let from_tets = self.triangulation.homology_h1()?;
        let expected = graph_mapping_torus_h1(mm);
        if from_tets != expected {
            return Err(Error::Triangulation(format!(
                "H1 of the triangulation is {from_tets}, expected {expected}"
            )));
        }
        Ok(from_tets)
    }
}

/// Runs the whole construction and checks the vertex links: one torus
/// cusp, every other vertex finite.
pub fn build_mapping_torus(mm: &MarkedMap) -> Result<MappingTorus> {
    mm.validate().into_result().map_err(|e| e.in_stage("validate"))?;
    let sequence = decompose(mm).map_err(|e| e.in_stage("decompose"))?;
    let complex = assemble_torus(&sequence).map_err(|e| e.in_stage("surface"))?;
    let triangulation = cone_and_glue(&complex).map_err(|e| e.in_stage("cone"))?;
    let links = triangulation
        .vertex_links()
        .map_err(|e| e.in_stage("links"))?;
    let check = || -> Result<()> {
        let ideal: Vec<_> = links.links.iter().filter(|l| l.ideal).collect();
        match ideal[..] {
            [cusp] if cusp.surface == SurfaceKind::Torus => {}
            [cusp] => {
                return Err(Error::Triangulation(format!("cusp link is a {}", cusp.surface)));
            }
            _ => {
                return Err(Error::Triangulation(format!(
                    "{} ideal vertices instead of one",
                    ideal.len()
                )))
            }
        }
        triangulation.edge_orbits()?;
        if !triangulation.is_orientable() {
            return Err(Error::Triangulation("triangulation is not orientable".into()));
        }
        Ok(())
    };
    check().map_err(|e| e.in_stage("links"))?;

    let graph = mm.graph();
    let partial = sequence.partial_folds();
    let folds = sequence.len();
    let diagnostics = Diagnostics {
        genus: mm.genus()?,
        size: mm.size(),
        folds,
        partial_folds: partial,
        full_folds: folds - partial,
        fold_sizes: sequence.fold_sizes(),
        annulus_triangles: complex.annulus_triangle_counts(),
        tetrahedra: triangulation.len(),
        fold_count_bound: fold_count_bound(graph).ok(),
        tight: mm.is_tight(),
        bound: bound_report(mm, folds, triangulation.len())?,
    };
    debug_assert_eq!(
        sequence.steps.iter().filter(|(_, p)| p.kind == FoldKind::Full).count(),
        diagnostics.full_folds
    );
    Ok(MappingTorus {
        sequence,
        complex,
        triangulation,
        links,
        diagnostics,
    })
}

/// The bound of the complexity estimate together with the actual count.
pub fn tetrahedron_bound(mm: &MarkedMap) -> Result<BoundReport> {
    Ok(build_mapping_torus(mm)?.diagnostics.bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_marked_map;

    const FIG8: &str = "vertices: v\nedge a v v\nedge b v v\nmap a = b a\nmap b = b b a\nboundary = a ~b ~a b\n";
    const ID: &str = "vertices: v\nedge a v v\nedge b v v\nmap a = a\nmap b = b\nboundary = a ~b ~a b\n";

    #[test]
    fn figure_eight() {
        let mm = parse_marked_map(FIG8).unwrap();
        let m = build_mapping_torus(&mm).unwrap();
        assert_eq!(m.links.ideal_count(), 1);
        assert_eq!(m.triangulation.len(), m.complex.triangle_count());
        assert_eq!(m.diagnostics.bound.bound, 240);
        assert!(m.diagnostics.bound.applicable);
        assert!(m.diagnostics.bound.ok());
        assert_eq!(m.verify_homology(&mm).unwrap().to_string(), "Z");
    }

    #[test]
    fn identity_is_product() {
        let mm = parse_marked_map(ID).unwrap();
        let m = build_mapping_torus(&mm).unwrap();
        assert!(!m.diagnostics.bound.applicable);
        assert_eq!(m.verify_homology(&mm).unwrap().to_string(), "Z^3");
    }
}
