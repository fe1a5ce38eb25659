//! Triangulations of mapping tori of once-punctured surface homeomorphisms.
//!
//! The input is a graph map `f: G -> G` together with a loop `sigma` around
//! the puncture. The pipeline factors `f` into subdivisions and Stallings
//! folds, stacks one annulus per step into a triangulated torus `K` with an
//! orientation-reversing face pairing, and cones `K` off to a tetrahedral
//! triangulation whose cone point is the torus cusp.
//!
//! Module map:
//!
//! - [`graph`]: graphs, edge paths, graph maps, marked maps and their input format
//! - [`folding`]: subdivide-and-fold decomposition
//! - [`surface`]: the torus complex and its face pairing
//! - [`triangulation`]: glued tetrahedra, vertex links, edge orbits, homology
//! - [`mapping_torus`]: the end-to-end construction and complexity bound
//! - [`tg`]: the `T`/`G` gluing text format
//! - [`snappea`]: SnapPea triangulation file writer (and a reader for its output)
//! - [`group`]: presentations, Tietze simplification, abelianization
//! - [`smith`]: Smith normal form over the integers

pub mod error;
pub mod folding;
pub mod graph;
pub mod group;
pub mod homology;
pub mod mapping_torus;
pub mod smith;
pub mod snappea;
pub mod surface;
pub mod tg;
pub mod triangulation;

pub use error::{Error, Result};
pub use graph::{DirEdge, EdgePath, Graph, GraphMap, MarkedMap};
pub use homology::AbelianGroup;
pub use group::Presentation;
pub use folding::{decompose, FoldSequence};
pub use surface::SurfaceComplex;
pub use tg::{emit_tg, parse_tg, realize, TgDocument};
pub use triangulation::{LinkReport, Perm, Triangulation3};
pub use snappea::{write_snappea, SnapPeaFile};
pub use mapping_torus::{build_mapping_torus, MappingTorus};

mod union_find;
