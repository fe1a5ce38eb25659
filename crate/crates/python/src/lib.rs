//! Python bindings: marked maps, the mapping torus construction and
//! triangulations with their text formats.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use torusfold::graph::parse_marked_map;
use torusfold::group::pi1_presentation;
use torusfold::homology::graph_mapping_torus_h1;
use torusfold::snappea::parse_snappea;
use torusfold::tg::parse_and_realize;

create_exception!(pytorusfold, ParseError, PyValueError, "Input text could not be parsed.");
create_exception!(pytorusfold, ValidationError, PyValueError, "Input failed a check.");

fn to_py(e: torusfold::Error) -> PyErr {
    if e.is_parse_error() {
        ParseError::new_err(e.to_string())
    } else {
        ValidationError::new_err(e.to_string())
    }
}

/// A graph map with a boundary loop, read from the `edge`/`map`/`boundary`
/// text format.
#[pyclass(name = "MarkedMap", frozen)]
struct PyMarkedMap(torusfold::MarkedMap);

#[pymethods]
impl PyMarkedMap {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_marked_map(text).map(Self).map_err(to_py)
    }

    #[getter]
    fn genus(&self) -> PyResult<usize> {
        self.0.genus().map_err(to_py)
    }

    /// Total length of the edge images.
    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn is_tight(&self) -> bool {
        self.0.is_tight()
    }

    /// Validation problems, empty when the map is usable.
    fn issues(&self) -> Vec<String> {
        self.0.validate().issues.iter().map(ToString::to_string).collect()
    }

    /// A freely homotopic map that is tight at every vertex.
    fn tighten(&self) -> PyResult<Self> {
        self.0.tighten().map(Self).map_err(to_py)
    }

    fn power(&self, n: usize) -> PyResult<Self> {
        self.0.power(n).map(Self).map_err(to_py)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    /// The subdivide-and-fold trace.
    fn decompose(&self) -> PyResult<String> {
        self.0.validate().into_result().map_err(to_py)?;
        Ok(torusfold::decompose(&self.0).map_err(to_py)?.trace())
    }

    /// HNN presentation of the mapping torus group and its simplification.
    fn presentation(&self) -> (String, String) {
        let p = pi1_presentation(&self.0);
        (p.to_string(), p.tietze_simplify().to_string())
    }

    /// First homology of the mapping torus, computed from the graph map.
    fn h1(&self) -> String {
        graph_mapping_torus_h1(&self.0).to_string()
    }

    fn mapping_torus(&self) -> PyResult<PyMappingTorus> {
        torusfold::build_mapping_torus(&self.0).map(PyMappingTorus).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("MarkedMap(size={}, tight={})", self.0.size(), self.0.is_tight())
    }
}

/// Result of the construction: the fold sequence, the triangulation and
/// the statistics gathered along the way.
#[pyclass(name = "MappingTorus", frozen)]
struct PyMappingTorus(torusfold::MappingTorus);

#[pymethods]
impl PyMappingTorus {
    #[getter]
    fn triangulation(&self) -> PyTriangulation {
        PyTriangulation(self.0.triangulation.clone())
    }

    #[getter]
    fn folds(&self) -> usize {
        self.0.diagnostics.folds
    }

    #[getter]
    fn partial_folds(&self) -> usize {
        self.0.diagnostics.partial_folds
    }

    #[getter]
    fn tetrahedra(&self) -> usize {
        self.0.diagnostics.tetrahedra
    }

    /// `(bound, applicable, ok)` for the tetrahedron count estimate.
    #[getter]
    fn bound(&self) -> (u64, bool, bool) {
        let b = &self.0.diagnostics.bound;
        (b.bound, b.applicable, b.ok())
    }

    fn trace(&self) -> String {
        self.0.sequence.trace()
    }

    fn diagnostics(&self) -> String {
        self.0.diagnostics.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MappingTorus(tetrahedra={}, folds={})", self.0.diagnostics.tetrahedra, self.0.diagnostics.folds)
    }
}

/// Tetrahedra glued in pairs along faces.
#[pyclass(name = "Triangulation", frozen)]
struct PyTriangulation(torusfold::Triangulation3);

#[pymethods]
impl PyTriangulation {
    #[staticmethod]
    fn from_tg(text: &str) -> PyResult<Self> {
        parse_and_realize(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn from_snappea(text: &str) -> PyResult<Self> {
        let file = parse_snappea(text).map_err(to_py)?;
        file.to_triangulation().map(Self).map_err(to_py)
    }

    fn to_tg(&self) -> String {
        torusfold::emit_tg(&self.0)
    }

    #[pyo3(signature = (name = "torusfold"))]
    fn to_snappea(&self, name: &str) -> PyResult<String> {
        torusfold::write_snappea(&self.0, name).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    #[getter]
    fn is_orientable(&self) -> bool {
        self.0.is_orientable()
    }

    /// Link surface of each vertex orbit, such as `"torus"` or `"sphere"`.
    fn vertex_links(&self) -> PyResult<Vec<String>> {
        let links = self.0.vertex_links().map_err(to_py)?;
        Ok(links.links.iter().map(|l| l.surface.to_string()).collect())
    }

    fn edge_valences(&self) -> PyResult<Vec<usize>> {
        Ok(self.0.edge_orbits().map_err(to_py)?.iter().map(|o| o.valence()).collect())
    }

    fn h1(&self) -> PyResult<String> {
        self.0.homology_h1().map(|h| h.to_string()).map_err(to_py)
    }

    /// Simplified presentation of the fundamental group.
    fn fundamental_group(&self) -> PyResult<String> {
        Ok(self.0.fundamental_group().map_err(to_py)?.tietze_simplify().to_string())
    }

    fn is_isomorphic(&self, other: &PyTriangulation) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Triangulation({} tetrahedra)", self.0.len())
    }
}

#[pymodule]
fn pytorusfold(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMarkedMap>()?;
    m.add_class::<PyMappingTorus>()?;
    m.add_class::<PyTriangulation>()?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("ValidationError", m.py().get_type::<ValidationError>())?;
    Ok(())
}
