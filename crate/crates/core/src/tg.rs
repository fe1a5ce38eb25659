//! The `T`/`G` gluing format.
//!
//! ```text
//! // figure-eight knot complement
//! T a b c d
//! T b c d e
//! G b e d a c d
//! G c b e a b d
//! G c e d a c b
//! ```
//!
//! `T v1 v2 v3 v4` declares a tetrahedron with distinct corner labels.
//! Two tetrahedra with exactly three labels in common are glued along that
//! face, matching equal labels. `G v1 v2 v3 w1 w2 w3` glues the face
//! labelled `v1 v2 v3` to the face `w1 w2 w3` with `vi` matched to `wi`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::triangulation::{FaceGluing, Perm, Triangulation3};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetLine {
    pub labels: [String; 4],
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueLine {
    pub left: [String; 3],
    pub right: [String; 3],
    pub line: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TgDocument {
    pub tets: Vec<TetLine>,
    pub gluings: Vec<GlueLine>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Tg { line, msg: msg.into() }
}

fn distinct(labels: &[String]) -> bool {
    labels.iter().collect::<HashSet<_>>().len() == labels.len()
}

pub fn parse_tg(text: &str) -> Result<TgDocument> {
    let mut doc = TgDocument::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split("//").next().unwrap_or("");
        let mut tokens = body.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        let args: Vec<String> = tokens.map(str::to_string).collect();
        match tag {
            "T" => {
                let labels: [String; 4] = args
                    .try_into()
                    .map_err(|a: Vec<String>| err(line, format!("T expects 4 labels, found {}", a.len())))?;
                if !distinct(&labels) {
                    return Err(err(line, "duplicate label in T line"));
                }
                doc.tets.push(TetLine { labels, line });
            }
            "G" => {
                if args.len() != 6 {
                    return Err(err(line, format!("G expects 6 labels, found {}", args.len())));
                }
                let left: [String; 3] = args[..3].to_vec().try_into().expect("length checked");
                let right: [String; 3] = args[3..].to_vec().try_into().expect("length checked");
                if !distinct(&left) || !distinct(&right) {
                    return Err(err(line, "duplicate label in G face"));
                }
                doc.gluings.push(GlueLine { left, right, line });
            }
            other => return Err(err(line, format!("unknown line tag `{other}`"))),
        }
    }
    Ok(doc)
}

type Triple = [String; 3];

fn key(labels: &[String]) -> Triple {
    let mut k: Vec<String> = labels.to_vec();
    k.sort();
    k.try_into().expect("three labels")
}

/// Faces as `(tet, face)` keyed by their sorted label triple.
fn face_index(doc: &TgDocument) -> BTreeMap<Triple, Vec<(usize, usize)>> {
    let mut faces: BTreeMap<Triple, Vec<(usize, usize)>> = BTreeMap::new();
    for (t, tet) in doc.tets.iter().enumerate() {
        for f in 0..4 {
            let rest: Vec<String> = (0..4).filter(|&v| v != f).map(|v| tet.labels[v].clone()).collect();
            faces.entry(key(&rest)).or_default().push((t, f));
        }
    }
    faces
}

fn corner(doc: &TgDocument, t: usize, label: &str) -> usize {
    doc.tets[t].labels.iter().position(|l| l == label).expect("label on face")
}

fn gluing(doc: &TgDocument, (t, f): (usize, usize), (o, g): (usize, usize), matching: &[(&str, &str)]) -> Result<FaceGluing> {
    let mut img = [0u8; 4];
    img[f] = g as u8;
    for (a, b) in matching {
        img[corner(doc, t, a)] = corner(doc, o, b) as u8;
    }
    Ok(FaceGluing {
        tet: t,
        face: f,
        other: o,
        perm: Perm::new(img)?,
    })
}

/// Gluings implied by shared label triples, as `(tet, face, other, face)`.
pub fn implicit_gluings(doc: &TgDocument) -> Result<Vec<(usize, usize, usize, usize)>> {
    let mut out = Vec::new();
    for (triple, sides) in face_index(doc) {
        match sides[..] {
            [_] => {}
            [(t, f), (o, g)] => {
                if t == o {
                    return Err(err(doc.tets[t].line, "a tetrahedron repeats a face"));
                }
                let set = |i: usize| doc.tets[i].labels.iter().collect::<HashSet<_>>();
                if set(t) == set(o) {
                    return Err(err(doc.tets[o].line, "two tetrahedra share all four labels"));
                }
                out.push((t, f, o, g));
            }
            _ => {
                return Err(err(
                    doc.tets[sides[2].0].line,
                    format!("face {} is shared by {} tetrahedra", triple.join(" "), sides.len()),
                ))
            }
        }
    }
    Ok(out)
}

/// Builds the triangulation: implicit gluings first, then the `G` lines.
/// Every face must end up glued exactly once.
pub fn realize(doc: &TgDocument) -> Result<Triangulation3> {
    let faces = face_index(doc);
    let mut glued: Vec<[Option<usize>; 4]> = vec![[None; 4]; doc.tets.len()];
    let mut gluings = Vec::new();
    for (t, f, o, g) in implicit_gluings(doc)? {
        let shared: Vec<&str> = (0..4).filter(|&v| v != f).map(|v| doc.tets[t].labels[v].as_str()).collect();
        let matching: Vec<(&str, &str)> = shared.iter().map(|&l| (l, l)).collect();
        gluings.push(gluing(doc, (t, f), (o, g), &matching)?);
        glued[t][f] = Some(doc.tets[o].line);
        glued[o][g] = Some(doc.tets[t].line);
    }
    for gl in &doc.gluings {
        let resolve = |labels: &[String; 3]| -> Result<(usize, usize)> {
            match faces.get(&key(labels)).map(Vec::as_slice) {
                None => Err(err(gl.line, format!("no tetrahedron has face {}", labels.join(" ")))),
                Some([side]) => Ok(*side),
                Some(_) => Err(err(
                    gl.line,
                    format!("face {} is glued twice (it is already glued implicitly)", labels.join(" ")),
                )),
            }
        };
        let (a, b) = (resolve(&gl.left)?, resolve(&gl.right)?);
        if a == b {
            return Err(err(gl.line, "face glued to itself"));
        }
        for (t, f) in [a, b] {
            if let Some(prev) = glued[t][f].replace(gl.line) {
                return Err(err(gl.line, format!("face is glued twice (also on line {prev})")));
            }
        }
        let matching: Vec<(&str, &str)> = gl.left.iter().zip(&gl.right).map(|(l, r)| (l.as_str(), r.as_str())).collect();
        gluings.push(gluing(doc, a, b, &matching)?);
    }
    for (t, slots) in glued.iter().enumerate() {
        if let Some(f) = slots.iter().position(Option::is_none) {
            let labels: Vec<&str> = (0..4).filter(|&v| v != f).map(|v| doc.tets[t].labels[v].as_str()).collect();
            return Err(err(doc.tets[t].line, format!("face {} is not glued", labels.join(" "))));
        }
    }
    Triangulation3::from_gluings(doc.tets.len(), &gluings)
}

pub fn parse_and_realize(text: &str) -> Result<Triangulation3> {
    realize(&parse_tg(text)?)
}

/// Writes a document with a separate label for every corner, so that no
/// gluing is implicit: one `G` line per face pair.
pub fn emit_tg(t: &Triangulation3) -> String {
    let label = |tet: usize, v: usize| format!("{}{tet}", ['a', 'b', 'c', 'd'][v]);
    let mut out = format!("// {} tetrahedra\n", t.len());
    for i in 0..t.len() {
        let l: Vec<String> = (0..4).map(|v| label(i, v)).collect();
        writeln!(out, "T {}", l.join(" ")).expect("write to string");
    }
    for g in t.face_gluings() {
        let verts: Vec<usize> = (0..4).filter(|&v| v != g.face).collect();
        let left: Vec<String> = verts.iter().map(|&v| label(g.tet, v)).collect();
        let right: Vec<String> = verts.iter().map(|&v| label(g.other, g.perm.apply(v))).collect();
        writeln!(out, "G {} {}", left.join(" "), right.join(" ")).expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG8: &str = "T a b c d\nT b c d e\nG b e d a c d\nG c b e a b d\nG c e d a c b\n";

    #[test]
    fn parses_figure_eight() {
        let doc = parse_tg(FIG8).unwrap();
        assert_eq!(doc.tets.len(), 2);
        assert_eq!(doc.gluings.len(), 3);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("// comment\n\n{FIG8}  // trailing\n");
        let (a, b) = (parse_tg(&text).unwrap(), parse_tg(FIG8).unwrap());
        assert_eq!(a.tets.len(), 2);
        assert_eq!(a.tets[0].line, 3);
        assert_eq!(a.gluings[2].left, b.gluings[2].left);
    }

    #[test]
    fn rejects_malformed_lines() {
        let e = parse_tg("T a b c c").unwrap_err();
        assert!(e.to_string().contains("duplicate"), "{e}");
        let e = parse_tg("T a b c d\nG a b c d e").unwrap_err();
        assert!(e.to_string().starts_with("T/G line 2"), "{e}");
        assert!(parse_tg("X a b").is_err());
    }

    #[test]
    fn figure_eight_realizes() {
        let doc = parse_tg(FIG8).unwrap();
        assert_eq!(implicit_gluings(&doc).unwrap().len(), 1);
        let t = realize(&doc).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.face_gluings().len(), 4);
        let links = t.vertex_links().unwrap();
        assert_eq!(links.links.len(), 1);
        assert_eq!(links.ideal_count(), 1);
        assert_eq!(t.edge_orbits().unwrap().len(), 2);
        assert_eq!(t.homology_h1().unwrap().to_string(), "Z");
    }

    #[test]
    fn explicit_gluing_of_implicit_face_is_rejected() {
        let text = format!("{FIG8}G b c d b c d\n");
        let e = parse_and_realize(&text).unwrap_err();
        assert!(e.to_string().contains("glued twice"), "{e}");
    }

    #[test]
    fn missing_gluing_is_reported() {
        let e = parse_and_realize("T a b c d\n").unwrap_err();
        assert!(e.to_string().contains("not glued"), "{e}");
    }

    #[test]
    fn emit_round_trips() {
        let t = parse_and_realize(FIG8).unwrap();
        let text = emit_tg(&t);
        let back = parse_and_realize(&text).unwrap();
        assert!(t.is_isomorphic(&back));
        assert_eq!(emit_tg(&back), text);
    }
}
