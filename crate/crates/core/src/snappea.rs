//! SnapPea triangulation files.
//!
//! Only geometry-free data is written: the solution type is
//! `not_attempted`, peripheral curves are zero and shapes are `0.0 0.0`,
//! all of which SnapPea recomputes on load. The reader accepts exactly
//! what the writer produces.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::triangulation::{LinkReport, Perm, SurfaceKind, Tetrahedron, Triangulation3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspKind {
    Torus,
    Klein,
}

impl fmt::Display for CuspKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CuspKind::Torus => "torus",
            CuspKind::Klein => "Klein",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnapTet {
    pub neighbors: [usize; 4],
    pub gluings: [Perm; 4],
    /// Cusp of each vertex, `-1` for finite vertices.
    pub cusps: [i64; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnapPeaFile {
    pub name: String,
    pub orientable: bool,
    /// Orientable cusps come first, as SnapPea expects.
    pub cusps: Vec<CuspKind>,
    pub tets: Vec<SnapTet>,
}

/// Cusp index of each vertex orbit: ideal orbits are numbered torus cusps
/// first, then Klein bottle cusps; finite orbits get `-1`.
pub fn cusp_assignment(links: &LinkReport) -> Result<(Vec<i64>, Vec<CuspKind>)> {
    let mut kinds = vec![None; links.links.len()];
    for (i, l) in links.links.iter().enumerate() {
        kinds[i] = match l.surface {
            SurfaceKind::Sphere => None,
            SurfaceKind::Torus => Some(CuspKind::Torus),
            SurfaceKind::KleinBottle => Some(CuspKind::Klein),
            other => {
                return Err(Error::SnapPea(format!(
                    "vertex {i} has a {other} link, which SnapPea cannot represent"
                )))
            }
        };
    }
    let mut index = vec![-1i64; kinds.len()];
    let mut cusps = Vec::new();
    for want in [CuspKind::Torus, CuspKind::Klein] {
        for (i, k) in kinds.iter().enumerate() {
            if *k == Some(want) {
                index[i] = cusps.len() as i64;
                cusps.push(want);
            }
        }
    }
    Ok((index, cusps))
}

impl SnapPeaFile {
    /// Orientable triangulations are relabelled so that every gluing is
    /// odd, which is what `oriented_manifold` promises.
    pub fn from_triangulation(t: &Triangulation3, name: &str) -> Result<Self> {
        if name.contains('\n') {
            return Err(Error::SnapPea("name must be a single line".into()));
        }
        let oriented = t.oriented();
        let t = oriented.as_ref().unwrap_or(t);
        let links = t.vertex_links()?;
        let (index, cusps) = cusp_assignment(&links)?;
        let tets = t
            .tets()
            .iter()
            .enumerate()
            .map(|(i, tet)| SnapTet {
                neighbors: tet.neighbors,
                gluings: tet.gluings,
                cusps: std::array::from_fn(|v| index[links.orbit[4 * i + v]]),
            })
            .collect();
        Ok(Self {
            name: name.to_string(),
            orientable: oriented.is_some(),
            cusps,
            tets,
        })
    }

    pub fn to_triangulation(&self) -> Result<Triangulation3> {
        Triangulation3::new(
            self.tets
                .iter()
                .map(|t| Tetrahedron {
                    neighbors: t.neighbors,
                    gluings: t.gluings,
                })
                .collect(),
        )
    }
}

const ZERO: &str = "0.000000000000";

impl fmt::Display for SnapPeaFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        out.push_str("% Triangulation\n");
        writeln!(out, "{}", self.name)?;
        out.push_str("not_attempted 0.0\n");
        out.push_str(if self.orientable { "oriented_manifold\n" } else { "nonorientable_manifold\n" });
        out.push_str("CS_unknown\n\n");
        let torus = self.cusps.iter().filter(|&&c| c == CuspKind::Torus).count();
        writeln!(out, "{} {}", torus, self.cusps.len() - torus)?;
        for c in &self.cusps {
            writeln!(out, "{c} {ZERO} {ZERO}")?;
        }
        writeln!(out, "\n{}", self.tets.len())?;
        let join = |v: Vec<String>| v.join(" ");
        for t in &self.tets {
            writeln!(out, "{}", join(t.neighbors.iter().map(ToString::to_string).collect()))?;
            writeln!(out, "{}", join(t.gluings.iter().map(ToString::to_string).collect()))?;
            writeln!(out, "{}", join(t.cusps.iter().map(ToString::to_string).collect()))?;
            for _ in 0..4 {
                writeln!(out, "{}", ["0"; 16].join(" "))?;
            }
            out.push_str("0.0 0.0\n\n");
        }
        f.write_str(&out)
    }
}

/// Serializes `t` as a SnapPea triangulation file.
pub fn write_snappea(t: &Triangulation3, name: &str) -> Result<String> {
    Ok(SnapPeaFile::from_triangulation(t, name)?.to_string())
}

fn bad(msg: impl Into<String>) -> Error {
    Error::SnapPea(msg.into())
}

/// Reads a file in the layout [`write_snappea`] produces.
pub fn parse_snappea(text: &str) -> Result<SnapPeaFile> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("% Triangulation") {
        return Err(bad("missing `% Triangulation` header"));
    }
    let name = lines.next().ok_or_else(|| bad("missing name"))?.to_string();
    // the rest is whitespace-separated
    let mut tok = lines.flat_map(str::split_whitespace);
    let mut next = |what: &str| tok.next().ok_or_else(|| bad(format!("unexpected end of file reading {what}")));
    let solution = next("solution type")?;
    if !solution.ends_with("solution") && solution != "not_attempted" {
        return Err(bad(format!("unknown solution type `{solution}`")));
    }
    next("volume")?;
    let orientable = match next("orientability")? {
        "oriented_manifold" => true,
        "nonorientable_manifold" => false,
        other => return Err(bad(format!("unknown orientability `{other}`"))),
    };
    let cs = next("Chern-Simons")?;
    if cs == "CS_known" {
        next("Chern-Simons value")?;
    }
    fn num<T: std::str::FromStr>(s: &str) -> Result<T> {
        s.parse().map_err(|_| bad(format!("expected a number, found `{s}`")))
    }
    let or_cusps: usize = num(next("cusp count")?)?;
    let nonor_cusps: usize = num(next("cusp count")?)?;
    let mut cusps = Vec::new();
    for _ in 0..or_cusps + nonor_cusps {
        cusps.push(match next("cusp type")? {
            "torus" => CuspKind::Torus,
            "Klein" => CuspKind::Klein,
            other => return Err(bad(format!("unknown cusp type `{other}`"))),
        });
        next("filling")?;
        next("filling")?;
    }
    let n: usize = num(next("tetrahedron count")?)?;
    let mut tets = Vec::with_capacity(n);
    for _ in 0..n {
        let mut neighbors = [0usize; 4];
        for x in &mut neighbors {
            *x = num(next("neighbor")?)?;
        }
        let mut gluings = [Perm::IDENTITY; 4];
        for p in &mut gluings {
            let code = next("gluing")?;
            let digits: Vec<u8> = code.bytes().map(|b| b.wrapping_sub(b'0')).collect();
            let digits: [u8; 4] = digits.try_into().map_err(|_| bad(format!("bad gluing `{code}`")))?;
            *p = Perm::new(digits).map_err(|_| bad(format!("bad gluing `{code}`")))?;
        }
        let mut cusp_of = [0i64; 4];
        for c in &mut cusp_of {
            *c = num(next("cusp index")?)?;
            if *c < -1 || *c >= cusps.len() as i64 {
                return Err(bad(format!("cusp index {c} out of range")));
            }
        }
        for _ in 0..64 {
            num::<i64>(next("peripheral curve")?)?;
        }
        num::<f64>(next("shape")?)?;
        num::<f64>(next("shape")?)?;
        tets.push(SnapTet {
            neighbors,
            gluings,
            cusps: cusp_of,
        });
    }
    Ok(SnapPeaFile {
        name,
        orientable,
        cusps,
        tets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tg::parse_and_realize;

    const FIG8: &str = "T a b c d\nT b c d e\nG b e d a c d\nG c b e a b d\nG c e d a c b\n";

    #[test]
    fn identity_code() {
        assert_eq!(Perm::IDENTITY.to_string(), "0123");
    }

    #[test]
    fn figure_eight_file() {
        let t = parse_and_realize(FIG8).unwrap();
        let text = write_snappea(&t, "fig8").unwrap();
        assert!(text.starts_with("% Triangulation\nfig8\nnot_attempted 0.0\noriented_manifold\nCS_unknown\n\n1 0\ntorus "));
        let file = parse_snappea(&text).unwrap();
        assert_eq!(file.tets.len(), 2);
        assert_eq!(file.cusps, vec![CuspKind::Torus]);
        assert!(file.tets.iter().all(|t| t.cusps == [0; 4]));
        assert!(file.tets.iter().all(|t| t.gluings.iter().all(|p| !p.is_even())));
        let back = file.to_triangulation().unwrap();
        assert!(back.is_isomorphic(&t));
        assert_eq!(write_snappea(&back, "fig8").unwrap(), text);
    }

    #[test]
    fn gluings_are_involutive() {
        let t = parse_and_realize(FIG8).unwrap();
        let file = SnapPeaFile::from_triangulation(&t, "x").unwrap();
        for (i, tet) in file.tets.iter().enumerate() {
            for f in 0..4 {
                let (o, p) = (tet.neighbors[f], tet.gluings[f]);
                let q = file.tets[o].gluings[p.apply(f)];
                assert_eq!(file.tets[o].neighbors[p.apply(f)], i);
                assert_eq!(q.compose(p), Perm::IDENTITY);
            }
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_snappea("hello").is_err());
        let t = parse_and_realize(FIG8).unwrap();
        let text = write_snappea(&t, "fig8").unwrap();
        assert!(parse_snappea(&text[..text.len() / 2]).is_err());
    }
}
