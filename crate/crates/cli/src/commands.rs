//! One function per subcommand. Each maps a loaded input to the text it
//! produces; nothing here touches the filesystem.

use std::fmt::Write as _;

use torusfold::folding::decompose;
use torusfold::group::pi1_presentation;
use torusfold::homology::graph_mapping_torus_h1;
use torusfold::mapping_torus::build_mapping_torus;
use torusfold::snappea::{cusp_assignment, CuspKind};
use torusfold::triangulation::SurfaceKind;
use torusfold::{emit_tg, write_snappea, Error, MarkedMap, Presentation, Triangulation3};

use crate::input::{Loaded, Source};
use crate::Failure;

type Outcome = Result<String, Failure>;

fn expect_map(source: &Source, loaded: Loaded) -> Result<MarkedMap, Failure> {
    match loaded {
        Loaded::Map(m) => Ok(m),
        Loaded::Triangulation(_) => Err(Failure::parse(source, "expected a marked map, found a triangulation")),
    }
}

fn triangulation_of(source: &Source, loaded: Loaded) -> Result<Triangulation3, Failure> {
    match loaded {
        Loaded::Triangulation(t) => Ok(t),
        Loaded::Map(mm) => build_mapping_torus(&mm)
            .map(|m| m.triangulation)
            .map_err(|e| Failure::from_error(source, e)),
    }
}

pub fn decompose_cmd(source: &Source, loaded: Loaded) -> Outcome {
    let mm = expect_map(source, loaded)?;
    let fail = |e| Failure::from_error(source, e);
    mm.validate().into_result().map_err(fail)?;
    Ok(decompose(&mm).map_err(fail)?.trace())
}

pub fn triangulate(source: &Source, loaded: Loaded) -> Outcome {
    let mm = expect_map(source, loaded)?;
    let m = build_mapping_torus(&mm).map_err(|e| Failure::from_error(source, e))?;
    Ok(emit_tg(&m.triangulation))
}

pub fn convert(source: &Source, loaded: Loaded, name: &str) -> Outcome {
    let t = triangulation_of(source, loaded)?;
    write_snappea(&t, name).map_err(|e| Failure::from_error(source, e))
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

/// Checks every vertex link, the edge orbits, connectivity and first
/// homology, and summarizes them in one line.
fn check_triangulation(t: &Triangulation3) -> Result<String, Error> {
    if t.is_empty() {
        return Err(Error::Triangulation("no tetrahedra".into()));
    }
    if !t.is_connected() {
        return Err(Error::Triangulation("not connected".into()));
    }
    t.edge_orbits()?;
    let links = t.vertex_links()?;
    for (i, l) in links.links.iter().enumerate() {
        if l.euler > 0 && l.surface != SurfaceKind::Sphere {
            return Err(Error::Triangulation(format!("vertex {i} has a {} link", l.surface)));
        }
    }
    let (_, cusps) = cusp_assignment(&links)?;
    let torus = cusps.iter().filter(|&&c| c == CuspKind::Torus).count();
    let klein = cusps.len() - torus;
    let mut parts = vec![plural(t.len(), "tetrahedron", "tetrahedra"), plural(torus, "torus cusp", "torus cusps")];
    if klein > 0 {
        parts.push(plural(klein, "Klein bottle cusp", "Klein bottle cusps"));
    }
    parts.push(plural(links.finite_count(), "finite vertex", "finite vertices"));
    parts.push(if t.is_orientable() { "orientable" } else { "non-orientable" }.to_string());
    parts.push(format!("H1 = {}", t.homology_h1()?));
    Ok(parts.join(", "))
}

pub fn verify(source: &Source, loaded: Loaded) -> Outcome {
    let fail = |e| Failure::from_error(source, e);
    let summary = match loaded {
        Loaded::Triangulation(t) => check_triangulation(&t).map_err(fail)?,
        Loaded::Map(mm) => {
            let m = build_mapping_torus(&mm).map_err(fail)?;
            m.sequence.check().map_err(fail)?;
            m.verify_homology(&mm).map_err(fail)?;
            let mut s = check_triangulation(&m.triangulation).map_err(fail)?;
            let b = &m.diagnostics.bound;
            if b.applicable && !b.ok() {
                return Err(Failure::validation(source, format!("tetrahedron bound exceeded: {b}")));
            }
            write!(s, ", {} folds", m.diagnostics.folds).expect("write to string");
            s
        }
    };
    Ok(format!("{source}: ok ({summary})\n"))
}

fn group_text(hnn: &Presentation, h1: String) -> String {
    let simplified = hnn.tietze_simplify();
    let mut out = String::new();
    writeln!(out, "presentation: {hnn}").expect("write to string");
    writeln!(out, "simplified: {simplified}").expect("write to string");
    writeln!(out, "H1: {h1}").expect("write to string");
    out
}

pub fn group(source: &Source, loaded: Loaded) -> Outcome {
    let fail = |e| Failure::from_error(source, e);
    match loaded {
        Loaded::Map(mm) => {
            mm.validate().into_result().map_err(fail)?;
            Ok(group_text(&pi1_presentation(&mm), graph_mapping_torus_h1(&mm).to_string()))
        }
        Loaded::Triangulation(t) => {
            let p = t.fundamental_group().map_err(fail)?;
            Ok(group_text(&p, t.homology_h1().map_err(fail)?.to_string()))
        }
    }
}

pub fn info(source: &Source, loaded: Loaded) -> Outcome {
    let fail = |e| Failure::from_error(source, e);
    let mut out = String::new();
    let t = match loaded {
        Loaded::Map(mm) => {
            let m = build_mapping_torus(&mm).map_err(fail)?;
            out.push_str(&m.diagnostics.to_string());
            m.triangulation
        }
        Loaded::Triangulation(t) => {
            writeln!(out, "tetrahedra: {}", t.len()).expect("write to string");
            t
        }
    };
    let orbits = t.edge_orbits().map_err(fail)?;
    let links = t.vertex_links().map_err(fail)?;
    writeln!(out, "edges: {}", orbits.len()).expect("write to string");
    let valences: Vec<String> = orbits.iter().map(|o| o.valence().to_string()).collect();
    writeln!(out, "edge valences: {}", valences.join(" ")).expect("write to string");
    writeln!(out, "vertices: {} ({} ideal)", links.links.len(), links.ideal_count()).expect("write to string");
    out.push_str(&links.to_string());
    writeln!(out, "orientable: {}", t.is_orientable()).expect("write to string");
    writeln!(out, "H1: {}", t.homology_h1().map_err(fail)?).expect("write to string");
    Ok(out)
}
