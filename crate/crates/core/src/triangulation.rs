//! Glued tetrahedra: vertex orbits and links, edge orbits, orientability,
//! homology and an isomorphism-invariant canonical form.
//!
//! Gluings follow the SnapPea convention: `gluing[f]` maps the vertex
//! indices of a tetrahedron to those of its neighbor across face `f`, and
//! sends `f` to the neighbor's face. The manifold is oriented compatibly
//! across a face exactly when that permutation is odd.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Presentation, Word};
use crate::homology::AbelianGroup;
use crate::smith::SparseMatrix;
use crate::union_find::UnionFind;

/// A permutation of `{0, 1, 2, 3}`, stored as the images of `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [u8; 4]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || std::mem::replace(&mut seen[i as usize], true) {
                return Err(Error::Triangulation(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images))
    }

    pub fn apply(self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn inverse(self) -> Perm {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm) -> Perm {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[i] = self.0[other.0[i] as usize];
        }
        Perm(out)
    }

    pub fn is_even(self) -> bool {
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        inversions % 2 == 0
    }

    /// All 24 permutations in lexicographic order.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in (0..4u8).filter(|&b| b != a) {
                for c in (0..4u8).filter(|&c| c != a && c != b) {
                    out.push(Perm([a, b, c, 6 - a - b - c]));
                }
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tetrahedron {
    pub neighbors: [usize; 4],
    pub gluings: [Perm; 4],
}

/// One face identification: face `face` of `tet` is glued to face
/// `perm(face)` of `other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceGluing {
    pub tet: usize,
    pub face: usize,
    pub other: usize,
    pub perm: Perm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation3 {
    tets: Vec<Tetrahedron>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere,
    Torus,
    KleinBottle,
    ProjectivePlane,
    /// Closed orientable surface of the given genus, at least 2.
    Orientable(usize),
    /// Connected sum of the given number of projective planes, at least 3.
    NonOrientable(usize),
}

impl SurfaceKind {
    pub fn classify(euler: i64, orientable: bool) -> Option<SurfaceKind> {
        match (euler, orientable) {
            (2, true) => Some(SurfaceKind::Sphere),
            (0, true) => Some(SurfaceKind::Torus),
            (0, false) => Some(SurfaceKind::KleinBottle),
            (1, false) => Some(SurfaceKind::ProjectivePlane),
            (e, true) if e < 0 && e % 2 == 0 => Some(SurfaceKind::Orientable(((2 - e) / 2) as usize)),
            (e, false) if e < 0 => Some(SurfaceKind::NonOrientable((2 - e) as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Sphere => f.write_str("sphere"),
            SurfaceKind::Torus => f.write_str("torus"),
            SurfaceKind::KleinBottle => f.write_str("Klein bottle"),
            SurfaceKind::ProjectivePlane => f.write_str("projective plane"),
            SurfaceKind::Orientable(g) => write!(f, "orientable genus {g}"),
            SurfaceKind::NonOrientable(k) => write!(f, "non-orientable genus {k}"),
        }
    }
}

/// The link of one vertex orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    /// Number of tetrahedron corners in the orbit.
    pub corners: usize,
    pub euler: i64,
    pub orientable: bool,
    pub surface: SurfaceKind,
    /// Everything but a sphere link makes the vertex ideal.
    pub ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkReport {
    pub links: Vec<VertexLink>,
    /// Orbit index of each tetrahedron corner, as `orbit[4 * tet + v]`.
    pub orbit: Vec<usize>,
}

impl LinkReport {
    pub fn ideal_count(&self) -> usize {
        self.links.iter().filter(|l| l.ideal).count()
    }

    pub fn finite_count(&self) -> usize {
        self.links.len() - self.ideal_count()
    }
}

impl fmt::Display for LinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.links.iter().enumerate() {
            writeln!(
                f,
                "vertex {i}: {} ({}, chi = {}, {} corners)",
                l.surface,
                if l.ideal { "ideal" } else { "finite" },
                l.euler,
                l.corners
            )?;
        }
        Ok(())
    }
}

/// An edge class: the tetrahedron edges met walking once around it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrbit {
    /// `(tet, a, b)` in walking order; the edge runs from vertex `a` to `b`.
    pub members: Vec<(usize, usize, usize)>,
    /// Face crossed after each member, as `(tet, face)`.
    pub crossings: Vec<(usize, usize)>,
}

impl EdgeOrbit {
    pub fn valence(&self) -> usize {
        self.members.len()
    }
}

impl Triangulation3 {
    /// Checks that gluings are mutually inverse and no face is glued to
    /// itself.
    pub fn new(tets: Vec<Tetrahedron>) -> Result<Self> {
        let n = tets.len();
        for (t, tet) in tets.iter().enumerate() {
            for f in 0..4 {
                let (other, p) = (tet.neighbors[f], tet.gluings[f]);
                if other >= n {
                    return Err(Error::Triangulation(format!("tet {t} face {f}: no such neighbor {other}")));
                }
                let g = p.apply(f);
                if other == t && g == f {
                    return Err(Error::Triangulation(format!("tet {t} face {f} is glued to itself")));
                }
                let back = &tets[other];
                if back.neighbors[g] != t || back.gluings[g] != p.inverse() {
                    return Err(Error::Triangulation(format!(
                        "tet {t} face {f}: gluing is not matched by tet {other} face {g}"
                    )));
                }
            }
        }
        Ok(Self { tets })
    }

    /// Builds from one-sided gluings; each face must occur exactly once
    /// on either side.
    pub fn from_gluings(n: usize, gluings: &[FaceGluing]) -> Result<Self> {
        let mut slots: Vec<[Option<(usize, Perm)>; 4]> = vec![[None; 4]; n];
        for g in gluings {
            if g.tet >= n || g.other >= n || g.face > 3 {
                return Err(Error::Triangulation("gluing refers to a missing tetrahedron".into()));
            }
            let back_face = g.perm.apply(g.face);
            if g.tet == g.other && back_face == g.face {
                return Err(Error::Triangulation(format!("tet {} face {} is glued to itself", g.tet, g.face)));
            }
            for (t, f, o, p) in [(g.tet, g.face, g.other, g.perm), (g.other, back_face, g.tet, g.perm.inverse())] {
                if slots[t][f].replace((o, p)).is_some() {
                    return Err(Error::Triangulation(format!("tet {t} face {f} is glued twice")));
                }
            }
        }
        let tets = slots
            .into_iter()
            .enumerate()
            .map(|(t, s)| {
                let mut neighbors = [0; 4];
                let mut perms = [Perm::IDENTITY; 4];
                for f in 0..4 {
                    let (o, p) = s[f].ok_or_else(|| Error::Triangulation(format!("tet {t} face {f} is not glued")))?;
                    neighbors[f] = o;
                    perms[f] = p;
                }
                Ok(Tetrahedron {
                    neighbors,
                    gluings: perms,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tets)
    }

    pub fn len(&self) -> usize {
        self.tets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tets.is_empty()
    }

    pub fn tets(&self) -> &[Tetrahedron] {
        &self.tets
    }

    /// Each face pair once, from the side with the smaller `(tet, face)`.
    pub fn face_gluings(&self) -> Vec<FaceGluing> {
        let mut out = Vec::with_capacity(2 * self.len());
        for (t, tet) in self.tets.iter().enumerate() {
            for f in 0..4 {
                let (o, p) = (tet.neighbors[f], tet.gluings[f]);
                if (t, f) <= (o, p.apply(f)) {
                    out.push(FaceGluing {
                        tet: t,
                        face: f,
                        other: o,
                        perm: p,
                    });
                }
            }
        }
        out
    }

    /// Vertex orbit of each corner `4 * tet + v`, and the orbit count.
    pub fn vertex_orbits(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(4 * self.len());
        for (t, tet) in self.tets.iter().enumerate() {
            for f in 0..4 {
                let (o, p) = (tet.neighbors[f], tet.gluings[f]);
                for v in (0..4).filter(|&v| v != f) {
                    uf.union(4 * t + v, 4 * o + p.apply(v));
                }
            }
        }
        uf.classes()
    }

    /// Links of all vertex orbits.
    pub fn vertex_links(&self) -> Result<LinkReport> {
        let (orbit, count) = self.vertex_orbits();
        let n = self.len();
        // link vertices are corners (t, v, w): the end near v of edge vw
        let idx = |t: usize, v: usize, w: usize| 16 * t + 4 * v + w;
        let mut uf = UnionFind::new(16 * n);
        for (t, tet) in self.tets.iter().enumerate() {
            for f in 0..4 {
                let (o, p) = (tet.neighbors[f], tet.gluings[f]);
                for v in (0..4).filter(|&v| v != f) {
                    for w in (0..4).filter(|&w| w != f && w != v) {
                        uf.union(idx(t, v, w), idx(o, p.apply(v), p.apply(w)));
                    }
                }
            }
        }
        let mut link_vertices = vec![std::collections::HashSet::new(); count];
        let mut corners = vec![0usize; count];
        for t in 0..n {
            for v in 0..4 {
                let c = orbit[4 * t + v];
                corners[c] += 1;
                for w in (0..4).filter(|&w| w != v) {
                    link_vertices[c].insert(uf.find(idx(t, v, w)));
                }
            }
        }
        let orientable = self.link_orientability(&orbit, count);
        let links = (0..count)
            .map(|c| {
                let f = corners[c] as i64;
                let euler = link_vertices[c].len() as i64 - 3 * f / 2 + f;
                let surface = SurfaceKind::classify(euler, orientable[c]).ok_or_else(|| {
                    Error::Triangulation(format!(
                        "link of vertex {c} is not a closed surface (chi = {euler})"
                    ))
                })?;
                Ok(VertexLink {
                    corners: corners[c],
                    euler,
                    orientable: orientable[c],
                    surface,
                    ideal: surface != SurfaceKind::Sphere,
                })
            })
            .collect::<Result<_>>()?;
        Ok(LinkReport { links, orbit })
    }

    /// Two-colors link triangles so that shared link edges are traversed
    /// oppositely.
    fn link_orientability(&self, orbit: &[usize], count: usize) -> Vec<bool> {
        // sign of the cyclic order (x, y) inside the sorted triple of 0..4 minus v
        let cyc = |v: usize, x: usize, y: usize| -> i8 {
            let others: Vec<usize> = (0..4).filter(|&u| u != v).collect();
            let px = others.iter().position(|&u| u == x).expect("x is a link vertex");
            let py = others.iter().position(|&u| u == y).expect("y is a link vertex");
            if (px + 1) % 3 == py {
                1
            } else {
                -1
            }
        };
        let n = self.len();
        let mut sign = vec![0i8; 4 * n];
        let mut ok = vec![true; count];
        for start in 0..4 * n {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                let (t, v) = (c / 4, c % 4);
                for f in (0..4).filter(|&f| f != v) {
                    let (o, p) = (self.tets[t].neighbors[f], self.tets[t].gluings[f]);
                    let (w1, w2) = {
                        let mut it = (0..4).filter(|&w| w != v && w != f);
                        (it.next().expect("two"), it.next().expect("two"))
                    };
                    let v2 = p.apply(v);
                    let want = -sign[c] * cyc(v, w1, w2) * cyc(v2, p.apply(w1), p.apply(w2));
                    let d = 4 * o + v2;
                    if sign[d] == 0 {
                        sign[d] = want;
                        queue.push_back(d);
                    } else if sign[d] != want {
                        ok[orbit[c]] = false;
                    }
                }
            }
        }
        ok
    }

    /// Walks around every edge. Fails if an edge is glued to itself with
    /// its orientation reversed.
    pub fn edge_orbits(&self) -> Result<Vec<EdgeOrbit>> {
        let n = self.len();
        let mut seen = vec![[false; 16]; n];
        let mut orbits = Vec::new();
        for t0 in 0..n {
            for a0 in 0..4 {
                for b0 in a0 + 1..4 {
                    if seen[t0][4 * a0 + b0] {
                        continue;
                    }
                    let mut rest = (0..4).filter(|&x| x != a0 && x != b0);
                    let (c0, d0) = (rest.next().expect("c"), rest.next().expect("d"));
                    let start = (t0, a0, b0, c0, d0);
                    let mut state = start;
                    let mut members = Vec::new();
                    let mut crossings = Vec::new();
                    loop {
                        let (t, a, b, c, d) = state;
                        let key = 4 * a.min(b) + a.max(b);
                        if seen[t][key] {
                            return Err(Error::Triangulation(format!(
                                "edge {a}{b} of tet {t} is glued to itself with reversed orientation"
                            )));
                        }
                        seen[t][key] = true;
                        members.push((t, a, b));
                        crossings.push((t, d));
                        let (o, p) = (self.tets[t].neighbors[d], self.tets[t].gluings[d]);
                        state = (o, p.apply(a), p.apply(b), p.apply(d), p.apply(c));
                        if state == start {
                            break;
                        }
                        let (t2, a2, b2, _, _) = state;
                        if t2 == t0 && a2.min(b2) == a0 && a2.max(b2) == b0 {
                            return Err(Error::Triangulation(format!(
                                "edge {a0}{b0} of tet {t0} is glued to itself with reversed orientation"
                            )));
                        }
                    }
                    orbits.push(EdgeOrbit { members, crossings });
                }
            }
        }
        Ok(orbits)
    }

    /// Tetrahedron orientations making every gluing orientation-preserving,
    /// if they exist.
    pub fn orientation(&self) -> Option<Vec<i8>> {
        let n = self.len();
        let mut o = vec![0i8; n];
        for s in 0..n {
            if o[s] != 0 {
                continue;
            }
            o[s] = 1;
            let mut queue = VecDeque::from([s]);
            while let Some(t) = queue.pop_front() {
                for f in 0..4 {
                    let (u, p) = (self.tets[t].neighbors[f], self.tets[t].gluings[f]);
                    let want = if p.is_even() { -o[t] } else { o[t] };
                    if o[u] == 0 {
                        o[u] = want;
                        queue.push_back(u);
                    } else if o[u] != want {
                        return None;
                    }
                }
            }
        }
        Some(o)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }

    /// Renames the corners of each tetrahedron: new vertex `i` of tet `t`
    /// is old vertex `relabel[t].apply(i)`.
    #[must_use]
    pub fn relabel(&self, relabel: &[Perm]) -> Triangulation3 {
        assert_eq!(relabel.len(), self.len(), "one permutation per tetrahedron");
        let tets = self
            .tets
            .iter()
            .enumerate()
            .map(|(t, tet)| {
                let s = relabel[t];
                let mut out = *tet;
                for f in 0..4 {
                    let old = s.apply(f);
                    let o = tet.neighbors[old];
                    out.neighbors[f] = o;
                    out.gluings[f] = relabel[o].inverse().compose(tet.gluings[old]).compose(s);
                }
                out
            })
            .collect();
        Triangulation3 { tets }
    }

    /// A relabelled copy in which every gluing reverses the vertex order
    /// (is odd), the convention for oriented triangulations.
    pub fn oriented(&self) -> Option<Triangulation3> {
        let swap = Perm([1, 0, 2, 3]);
        let signs = self.orientation()?;
        let perms: Vec<Perm> = signs.iter().map(|&s| if s > 0 { Perm::IDENTITY } else { swap }).collect();
        Some(self.relabel(&perms))
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.len());
        for (t, tet) in self.tets.iter().enumerate() {
            for &o in &tet.neighbors {
                uf.union(t, o);
            }
        }
        self.is_empty() || uf.classes().1 == 1
    }

    /// Dual cell structure: dual edges are face pairs, oriented from the
    /// smaller `(tet, face)`; returns each face's dual edge and sign.
    fn dual_edges(&self) -> (Vec<FaceGluing>, Vec<[(usize, i64); 4]>) {
        let pairs = self.face_gluings();
        let mut of_face = vec![[(0usize, 0i64); 4]; self.len()];
        for (i, g) in pairs.iter().enumerate() {
            of_face[g.tet][g.face] = (i, 1);
            of_face[g.other][g.perm.apply(g.face)] = (i, -1);
        }
        (pairs, of_face)
    }

    /// First homology of the manifold with the ideal vertices removed,
    /// from the dual cell structure (tets, faces, edges).
    pub fn homology_h1(&self) -> Result<AbelianGroup> {
        let orbits = self.edge_orbits()?;
        let (pairs, of_face) = self.dual_edges();
        let mut d1 = SparseMatrix::new(self.len(), pairs.len());
        for (i, g) in pairs.iter().enumerate() {
            d1.add(g.other, i, 1);
            d1.add(g.tet, i, -1);
        }
        let mut d2 = SparseMatrix::new(pairs.len(), orbits.len());
        for (j, orb) in orbits.iter().enumerate() {
            for &(t, f) in &orb.crossings {
                let (i, s) = of_face[t][f];
                d2.add(i, j, s);
            }
        }
        Ok(AbelianGroup::homology_sparse(&d1, &d2))
    }

    /// Presentation of the fundamental group of the manifold minus its
    /// vertices: dual edges outside a spanning tree generate, edge orbits
    /// relate.
    pub fn fundamental_group(&self) -> Result<Presentation> {
        let orbits = self.edge_orbits()?;
        let (pairs, of_face) = self.dual_edges();
        let mut uf = UnionFind::new(self.len());
        let mut gen_of = vec![None; pairs.len()];
        let mut names = Vec::new();
        for (i, g) in pairs.iter().enumerate() {
            if !uf.union(g.tet, g.other) {
                gen_of[i] = Some(names.len());
                names.push(format!("x{}", names.len()));
            }
        }
        let relators: Vec<Word> = orbits
            .iter()
            .map(|orb| {
                orb.crossings
                    .iter()
                    .filter_map(|&(t, f)| {
                        let (i, s) = of_face[t][f];
                        gen_of[i].map(|g| (g as i32 + 1) * s as i32)
                    })
                    .collect()
            })
            .collect();
        Presentation::new(names, relators)
    }

    /// An encoding that two triangulations share exactly when they are
    /// combinatorially isomorphic.
    pub fn canonical_form(&self) -> Vec<u32> {
        let n = self.len();
        let mut best: Option<Vec<u32>> = None;
        for t0 in 0..n {
            for start in Perm::all() {
                if let Some(code) = self.relabeled_code(t0, start, best.as_deref()) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// BFS relabeling from `t0`, where `sigma` sends new vertex numbers to
    /// old ones. Returns `None` as soon as the code exceeds `bound`.
    fn relabeled_code(&self, t0: usize, sigma: Perm, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        let n = self.len();
        let mut label = vec![usize::MAX; n];
        let mut numbering = vec![Perm::IDENTITY; n];
        let mut order = Vec::with_capacity(n);
        label[t0] = 0;
        numbering[t0] = sigma;
        order.push(t0);
        let mut code = Vec::with_capacity(8 * n);
        let mut less = false;
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            let s = numbering[t];
            for f_new in 0..4 {
                let f = s.apply(f_new);
                let (o, p) = (self.tets[t].neighbors[f], self.tets[t].gluings[f]);
                if label[o] == usize::MAX {
                    label[o] = order.len();
                    numbering[o] = p.compose(s);
                    order.push(o);
                }
                let rel = numbering[o].inverse().compose(p).compose(s);
                let perm_code = rel.0.iter().fold(0u32, |acc, &x| acc * 4 + x as u32);
                for x in [label[o] as u32, perm_code] {
                    if !less {
                        if let Some(b) = bound {
                            match x.cmp(&b[code.len()]) {
                                std::cmp::Ordering::Greater => return None,
                                std::cmp::Ordering::Less => less = true,
                                std::cmp::Ordering::Equal => {}
                            }
                        }
                    }
                    code.push(x);
                }
            }
            i += 1;
        }
        if order.len() < n {
            // disconnected: append the rest in index order so the code is total
            return if bound.is_some() && !less { None } else { Some(code) };
        }
        if bound.is_some() && !less {
            return None;
        }
        Some(code)
    }

    pub fn is_isomorphic(&self, other: &Triangulation3) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two tetrahedra glued along all four faces by the identity: the
    /// double of a tetrahedron, a 3-sphere.
    fn sphere() -> Triangulation3 {
        let g: Vec<FaceGluing> = (0..4)
            .map(|f| FaceGluing {
                tet: 0,
                face: f,
                other: 1,
                perm: Perm::IDENTITY,
            })
            .collect();
        Triangulation3::from_gluings(2, &g).unwrap()
    }

    #[test]
    fn perm_basics() {
        let p = Perm::new([1, 2, 0, 3]).unwrap();
        assert_eq!(p.compose(p.inverse()), Perm::IDENTITY);
        assert!(p.is_even());
        assert!(!Perm::new([1, 0, 2, 3]).unwrap().is_even());
        assert_eq!(Perm::all().len(), 24);
        assert_eq!(p.to_string(), "1203");
        assert!(Perm::new([0, 0, 1, 2]).is_err());
    }

    #[test]
    fn doubled_tetrahedron_is_a_sphere() {
        let t = sphere();
        let links = t.vertex_links().unwrap();
        assert_eq!(links.links.len(), 4);
        assert!(links.links.iter().all(|l| l.surface == SurfaceKind::Sphere));
        // identity gluings are even, so the double is orientable with
        // opposite tetrahedron orientations
        assert!(t.is_orientable());
        assert_eq!(t.edge_orbits().unwrap().len(), 6);
        assert!(t.homology_h1().unwrap().is_trivial());
    }

    #[test]
    fn unglued_face_is_rejected() {
        let g = [FaceGluing {
            tet: 0,
            face: 0,
            other: 1,
            perm: Perm::IDENTITY,
        }];
        assert!(Triangulation3::from_gluings(2, &g).is_err());
    }

    #[test]
    fn canonical_form_ignores_numbering() {
        let t = sphere();
        let mut tets = t.tets().to_vec();
        tets.swap(0, 1);
        for tet in &mut tets {
            for n in &mut tet.neighbors {
                *n = 1 - *n;
            }
        }
        let u = Triangulation3::new(tets).unwrap();
        assert!(t.is_isomorphic(&u));
    }

    #[test]
    fn surface_classification() {
        assert_eq!(SurfaceKind::classify(0, false), Some(SurfaceKind::KleinBottle));
        assert_eq!(SurfaceKind::classify(-2, true), Some(SurfaceKind::Orientable(2)));
        assert_eq!(SurfaceKind::classify(3, true), None);
    }
}
