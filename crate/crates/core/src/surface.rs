//! The torus `K` and its face pairing `e`.
//!
//! Every loop `sigma_i` spells a circle; consecutive circles bound an
//! annulus, and a final annulus runs from the last circle back to the first
//! through the terminal homeomorphism. Each annulus is triangulated as a
//! staircase: starting from a rung joining a lower and an upper corner, an
//! `L` step adds the triangle on the next lower interval (apex on the upper
//! circle) and a `U` step the triangle on the next upper interval (apex on
//! the lower circle). Every interval carries exactly one triangle, and the
//! pairing matches the triangles over the two occurrences of a label on the
//! same side of the same annulus.
//!
//! Corners of a triangle are listed counterclockwise for the orientation in
//! which circles run left to right and annuli bottom to top. Side `i` is the
//! side opposite corner `i`, running from corner `i + 1` to corner `i + 2`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::folding::{FoldSequence, FoldStep, SubdivisionStep};
use crate::graph::{CyclicPath, Graph, GraphMap};
use crate::homology::AbelianGroup;
use crate::smith::SparseMatrix;
use crate::union_find::{SignedUnionFind, UnionFind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    L,
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnnulusKind {
    Subdivision(usize),
    Fold(usize),
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    Rectangle,
    Pentagon,
    Fold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    Lower,
    Upper,
}

/// A loop spelled along a circle of `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleSpelling {
    pub labels: Vec<String>,
    /// `partner[i]` is the interval carrying the reverse of label `i`.
    pub partner: Vec<usize>,
}

impl CircleSpelling {
    pub fn new(g: &Graph, sigma: &CyclicPath) -> Result<Self> {
        let mut at = HashMap::new();
        for (i, &d) in sigma.steps().iter().enumerate() {
            if at.insert(d, i).is_some() {
                return Err(Error::Surface(format!(
                    "label {} occurs twice in one direction",
                    g.label(d)
                )));
            }
        }
        let partner = sigma
            .steps()
            .iter()
            .map(|d| {
                at.get(&d.rev())
                    .copied()
                    .ok_or_else(|| Error::Surface(format!("label {} has no partner", g.label(*d))))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            labels: sigma.steps().iter().map(|&d| g.label(d)).collect(),
            partner,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// The combinatorics of one annulus before it is placed in `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusPlan {
    pub kind: AnnulusKind,
    pub lower: usize,
    pub upper: usize,
    /// Starting rung as (lower corner, upper corner).
    pub start: (usize, usize),
    /// Steps with the cell each triangle belongs to.
    pub steps: Vec<(Step, CellKind)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Circle { circle: usize, interval: usize },
    Rung { annulus: usize, lower: usize, upper: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KEdge {
    pub init: usize,
    pub term: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    pub corners: [usize; 3],
    /// `(edge, forward)` for each side; `forward` if the edge runs from
    /// corner `i + 1` to corner `i + 2`.
    pub sides: [(usize, bool); 3],
    pub annulus: usize,
    pub base: Base,
    /// Index of the base interval on its circle.
    pub interval: usize,
    pub cell: CellKind,
}

/// Pairing partner of a triangle with the corner correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pairing {
    pub partner: usize,
    /// Corner `i` of the triangle goes to corner `perm[i]` of the partner.
    pub perm: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComplex {
    pub circles: Vec<CircleSpelling>,
    circle_offset: Vec<usize>,
    pub annuli: Vec<AnnulusPlan>,
    pub vertex_count: usize,
    pub edges: Vec<KEdge>,
    pub triangles: Vec<Triangle>,
    pub pairing: Vec<Pairing>,
}

fn rectangle(forward: bool) -> [Step; 2] {
    if forward {
        [Step::U, Step::L]
    } else {
        [Step::L, Step::U]
    }
}

/// The annulus between `sigma_2i` and its subdivision `sigma_2i+1`.
/// Rectangles and pentagons are fanned from the lower corner at the initial
/// vertex of the edge, so the two occurrences of a label are mirror images.
pub fn build_subdivision_annulus(
    index: usize,
    step: &SubdivisionStep,
    lower: &CircleSpelling,
    upper: &CircleSpelling,
    sigma_lower: &CyclicPath,
) -> Result<AnnulusPlan> {
    let mut steps = Vec::new();
    let mut width = 0;
    for &d in sigma_lower.steps() {
        let forward = !d.reversed;
        if step.subdivision_of(d.edge).is_some() {
            width += 2;
            let seq = if forward {
                [Step::U, Step::U, Step::L]
            } else {
                [Step::L, Step::U, Step::U]
            };
            steps.extend(seq.map(|s| (s, CellKind::Pentagon)));
        } else {
            width += 1;
            steps.extend(rectangle(forward).map(|s| (s, CellKind::Rectangle)));
        }
    }
    if width != upper.len() || sigma_lower.len() != lower.len() {
        return Err(Error::Surface(format!(
            "subdivision annulus {index}: upper circle does not match the subdivided loop"
        )));
    }
    Ok(AnnulusPlan {
        kind: AnnulusKind::Subdivision(index),
        lower: 2 * index,
        upper: 2 * index + 1,
        start: (0, 0),
        steps,
    })
}

/// The annulus between `sigma_2i+1` and `sigma_2i+2`. With `a = ~u1` and
/// `b = ~u2` the lower loop turns the corner `a ~b`, whose two intervals
/// collapse to one upper point `U0`; the intervals `~a` and `b` become the
/// two occurrences of the surviving edge above.
pub fn build_fold_annulus(
    index: usize,
    step: &FoldStep,
    lower: &CircleSpelling,
    upper: &CircleSpelling,
    sigma_lower: &CyclicPath,
) -> Result<AnnulusPlan> {
    let n = sigma_lower.len();
    if n != lower.len() || upper.len() + 2 != n {
        return Err(Error::Surface(format!(
            "fold annulus {index}: circles do not differ by one cancelling pair"
        )));
    }
    let k = step.corner;
    let (u1, u2) = step.identified;
    if sigma_lower.at(k) != u1.rev() || sigma_lower.at((k + 1) % n) != u2 {
        return Err(Error::Surface(format!(
            "fold annulus {index}: no subpath a ~b at the recorded corner"
        )));
    }
    let pos = |d| sigma_lower.steps().iter().position(|&x| x == d);
    let (ja, jb) = match (pos(u1), pos(u2.rev())) {
        (Some(ja), Some(jb)) => (ja, jb),
        _ => {
            return Err(Error::Surface(format!(
                "fold annulus {index}: folded edges do not both occur twice"
            )))
        }
    };
    // the upper interval of lower interval j is its rank among the survivors
    let rank = |j: usize| -> usize {
        let skipped = [k, (k + 1) % n].iter().filter(|&&x| x < j).count();
        j - skipped
    };
    let first = (k + 2) % n;
    let mut steps = Vec::with_capacity(2 * n - 2);
    for off in 0..n - 2 {
        let j = (first + off) % n;
        let seq = if j == ja {
            [Step::U, Step::L]
        } else if j == jb {
            [Step::L, Step::U]
        } else {
            rectangle(!sigma_lower.at(j).reversed)
        };
        let cell = if j == ja || j == jb {
            CellKind::Fold
        } else {
            CellKind::Rectangle
        };
        steps.extend(seq.map(|s| (s, cell)));
    }
    steps.push((Step::L, CellKind::Fold));
    steps.push((Step::L, CellKind::Fold));
    Ok(AnnulusPlan {
        kind: AnnulusKind::Fold(index),
        lower: 2 * index + 1,
        upper: 2 * index + 2,
        start: (first, rank(first)),
        steps,
    })
}

/// The product annulus from `sigma_2n` to `sigma_0` across the terminal
/// homeomorphism.
pub fn build_homeomorphism_annulus(
    terminal: &GraphMap,
    sigma_last: &CyclicPath,
    sigma_first: &CyclicPath,
    last_circle: usize,
) -> Result<AnnulusPlan> {
    if !terminal.is_graph_isomorphism() {
        return Err(Error::Surface("terminal map is not a homeomorphism".into()));
    }
    let image = CyclicPath::from(terminal.apply_unchecked(sigma_last.steps()));
    let r = sigma_first.rotation_to(&image).ok_or_else(|| {
        Error::Surface("terminal map does not carry the last loop onto the first".into())
    })?;
    let steps = sigma_last
        .steps()
        .iter()
        .flat_map(|d| rectangle(!d.reversed).map(|s| (s, CellKind::Rectangle)))
        .collect();
    Ok(AnnulusPlan {
        kind: AnnulusKind::Final,
        lower: last_circle,
        upper: 0,
        start: (0, r),
        steps,
    })
}

/// Builds `K` and `e` from a fold sequence and checks them.
pub fn assemble_torus(seq: &FoldSequence) -> Result<SurfaceComplex> {
    let circles = seq
        .stages
        .iter()
        .map(|st| CircleSpelling::new(&st.graph, &st.sigma))
        .collect::<Result<Vec<_>>>()?;
    let mut plans = Vec::with_capacity(2 * seq.steps.len() + 1);
    for (i, (s, p)) in seq.steps.iter().enumerate() {
        let (c0, c1, c2) = (&circles[2 * i], &circles[2 * i + 1], &circles[2 * i + 2]);
        plans.push(build_subdivision_annulus(i, s, c0, c1, &seq.stages[2 * i].sigma)?);
        plans.push(build_fold_annulus(i, p, c1, c2, &seq.stages[2 * i + 1].sigma)?);
    }
    let last = seq.stages.len() - 1;
    plans.push(build_homeomorphism_annulus(
        &seq.terminal,
        &seq.stages[last].sigma,
        &seq.stages[0].sigma,
        last,
    )?);
    let k = SurfaceComplex::from_plans(circles, plans)?;
    k.check()?;
    Ok(k)
}

impl SurfaceComplex {
    /// Realizes annulus plans over the given circles and pairs triangles.
    pub fn from_plans(circles: Vec<CircleSpelling>, annuli: Vec<AnnulusPlan>) -> Result<Self> {
        let mut circle_offset = Vec::with_capacity(circles.len());
        let mut vertex_count = 0;
        for c in &circles {
            circle_offset.push(vertex_count);
            vertex_count += c.len();
        }
        let mut k = SurfaceComplex {
            circles,
            circle_offset,
            annuli: Vec::new(),
            vertex_count,
            edges: Vec::new(),
            triangles: Vec::new(),
            pairing: Vec::new(),
        };
        let mut edge_ids: HashMap<EdgeKind, usize> = HashMap::new();
        for c in 0..k.circles.len() {
            for i in 0..k.circles[c].len() {
                let kind = EdgeKind::Circle { circle: c, interval: i };
                edge_ids.insert(kind, k.edges.len());
                k.edges.push(KEdge {
                    init: k.vertex(c, i),
                    term: k.vertex(c, i + 1),
                    kind,
                });
            }
        }
        for (a, plan) in annuli.iter().enumerate() {
            k.realize(a, plan, &mut edge_ids)?;
        }
        k.annuli = annuli;
        k.pair_triangles()?;
        Ok(k)
    }

    fn vertex(&self, circle: usize, corner: usize) -> usize {
        self.circle_offset[circle] + corner % self.circles[circle].len()
    }

    fn realize(&mut self, a: usize, plan: &AnnulusPlan, ids: &mut HashMap<EdgeKind, usize>) -> Result<()> {
        let (lo, up) = (plan.lower, plan.upper);
        let (nl, nu) = (self.circles[lo].len(), self.circles[up].len());
        let l_steps = plan.steps.iter().filter(|s| s.0 == Step::L).count();
        if l_steps != nl || plan.steps.len() - l_steps != nu {
            return Err(Error::Surface(format!(
                "annulus {a}: staircase does not wind once around both circles"
            )));
        }
        let (mut l, mut u) = plan.start;
        let rung = |k: &mut Self, ids: &mut HashMap<EdgeKind, usize>, l: usize, u: usize| -> usize {
            let kind = EdgeKind::Rung {
                annulus: a,
                lower: l % nl,
                upper: u % nu,
            };
            *ids.entry(kind).or_insert_with(|| {
                k.edges.push(KEdge {
                    init: k.vertex(lo, l),
                    term: k.vertex(up, u),
                    kind,
                });
                k.edges.len() - 1
            })
        };
        for &(step, cell) in &plan.steps {
            let tri = match step {
                Step::L => {
                    let base = ids[&EdgeKind::Circle { circle: lo, interval: l % nl }];
                    let right = rung(self, ids, l + 1, u);
                    let left = rung(self, ids, l, u);
                    Triangle {
                        corners: [self.vertex(lo, l), self.vertex(lo, l + 1), self.vertex(up, u)],
                        sides: [(right, true), (left, false), (base, true)],
                        annulus: a,
                        base: Base::Lower,
                        interval: l % nl,
                        cell,
                    }
                }
                Step::U => {
                    let base = ids[&EdgeKind::Circle { circle: up, interval: u % nu }];
                    let left = rung(self, ids, l, u);
                    let right = rung(self, ids, l, u + 1);
                    Triangle {
                        corners: [self.vertex(lo, l), self.vertex(up, u + 1), self.vertex(up, u)],
                        sides: [(base, false), (left, false), (right, true)],
                        annulus: a,
                        base: Base::Upper,
                        interval: u % nu,
                        cell,
                    }
                }
            };
            match step {
                Step::L => l += 1,
                Step::U => u += 1,
            }
            self.triangles.push(tri);
        }
        Ok(())
    }

    fn pair_triangles(&mut self) -> Result<()> {
        let mut by_base: HashMap<(usize, bool, usize), usize> = HashMap::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            let key = (tri.annulus, tri.base == Base::Lower, tri.interval);
            if by_base.insert(key, t).is_some() {
                return Err(Error::Surface(format!("two triangles on one interval (triangle {t})")));
            }
        }
        let mut pairing = Vec::with_capacity(self.triangles.len());
        for (t, tri) in self.triangles.iter().enumerate() {
            let plan = &self.annuli[tri.annulus];
            let (circle, perm) = match tri.base {
                Base::Lower => (plan.lower, [1, 0, 2]),
                Base::Upper => (plan.upper, [0, 2, 1]),
            };
            let partner_interval = self.circles[circle].partner[tri.interval];
            let key = (tri.annulus, tri.base == Base::Lower, partner_interval);
            let partner = *by_base.get(&key).ok_or_else(|| {
                Error::Surface(format!("triangle {t} has no partner over the reverse label"))
            })?;
            pairing.push(Pairing { partner, perm });
        }
        self.pairing = pairing;
        Ok(())
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Triangle counts per annulus, in stacking order.
    pub fn annulus_triangle_counts(&self) -> Vec<usize> {
        self.annuli.iter().map(|a| a.steps.len()).collect()
    }

    /// For every edge, the two (triangle, side) incidences.
    pub fn edge_incidences(&self) -> Result<Vec<[(usize, usize); 2]>> {
        let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.edges.len()];
        for (t, tri) in self.triangles.iter().enumerate() {
            for (i, &(e, _)) in tri.sides.iter().enumerate() {
                inc[e].push((t, i));
            }
        }
        inc.into_iter()
            .enumerate()
            .map(|(e, v)| match v[..] {
                [x, y] => Ok([x, y]),
                _ => Err(Error::Surface(format!(
                    "edge {e} ({:?}) lies in {} triangles",
                    self.edges[e].kind,
                    v.len()
                ))),
            })
            .collect()
    }

    /// Checks that `K` is a torus and `e` an orientation-reversing
    /// fixed-point-free involution.
    pub fn check(&self) -> Result<()> {
        for (t, tri) in self.triangles.iter().enumerate() {
            for i in 0..3 {
                let (e, fwd) = tri.sides[i];
                let (a, b) = (tri.corners[(i + 1) % 3], tri.corners[(i + 2) % 3]);
                let edge = self.edges[e];
                let ok = if fwd {
                    (edge.init, edge.term) == (a, b)
                } else {
                    (edge.init, edge.term) == (b, a)
                };
                if !ok {
                    return Err(Error::Surface(format!("triangle {t} side {i} has wrong endpoints")));
                }
            }
        }
        for (e, [(t1, s1), (t2, s2)]) in self.edge_incidences()?.into_iter().enumerate() {
            if self.triangles[t1].sides[s1].1 == self.triangles[t2].sides[s2].1 {
                return Err(Error::Surface(format!(
                    "edge {e} is traversed the same way by triangles {t1} and {t2}: K is not oriented"
                )));
            }
        }
        if self.euler_characteristic() != 0 {
            return Err(Error::Surface(format!(
                "Euler characteristic is {}, not 0",
                self.euler_characteristic()
            )));
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.init, e.term);
        }
        if uf.classes().1 != 1 {
            return Err(Error::Surface("K is disconnected".into()));
        }
        for (t, p) in self.pairing.iter().enumerate() {
            if p.partner == t {
                return Err(Error::Surface(format!("triangle {t} is paired with itself")));
            }
            let back = self.pairing[p.partner];
            if back.partner != t || (0..3).any(|i| back.perm[p.perm[i]] != i) {
                return Err(Error::Surface(format!("pairing is not an involution at triangle {t}")));
            }
            if perm3_is_even(p.perm) {
                return Err(Error::Surface(format!(
                    "pairing preserves orientation at triangle {t}"
                )));
            }
            let (tri, other) = (&self.triangles[t], &self.triangles[p.partner]);
            for i in 0..3 {
                let j = p.perm[i];
                let (e, fwd) = tri.sides[i];
                let (e2, fwd2) = other.sides[j];
                // side i runs corner i+1 -> i+2, its image runs perm(i+1) -> perm(i+2)
                let same_dir = p.perm[(i + 1) % 3] == (j + 1) % 3;
                if e == e2 && (fwd == fwd2) != same_dir {
                    return Err(Error::Surface(format!(
                        "pairing folds edge {e} onto its own reverse (triangles {t}, {})",
                        p.partner
                    )));
                }
            }
        }
        Ok(())
    }

    /// First homology of the quotient 2-complex `K/e`.
    pub fn quotient_h1(&self) -> Result<AbelianGroup> {
        let mut vuf = UnionFind::new(self.vertex_count);
        let mut euf = SignedUnionFind::new(self.edges.len());
        for (t, p) in self.pairing.iter().enumerate() {
            let (tri, other) = (&self.triangles[t], &self.triangles[p.partner]);
            for i in 0..3 {
                vuf.union(tri.corners[i], other.corners[p.perm[i]]);
                let j = p.perm[i];
                let (e, fwd) = tri.sides[i];
                let (e2, fwd2) = other.sides[j];
                let same_dir = p.perm[(i + 1) % 3] == (j + 1) % 3;
                let sign = if (fwd == fwd2) == same_dir { 1 } else { -1 };
                if !euf.union(e, e2, sign) {
                    return Err(Error::Surface(format!("edge {e} is identified with its reverse")));
                }
            }
        }
        let (vclass, nv) = vuf.classes();
        let mut eclass = vec![usize::MAX; self.edges.len()];
        let mut esign = vec![1i64; self.edges.len()];
        let mut roots: HashMap<usize, usize> = HashMap::new();
        for e in 0..self.edges.len() {
            let (r, s) = euf.find(e);
            let next = roots.len();
            eclass[e] = *roots.entry(r).or_insert(next);
            esign[e] = s as i64;
        }
        let ne = roots.len();
        let mut d1 = SparseMatrix::new(nv, ne);
        let mut done = vec![false; ne];
        for (e, edge) in self.edges.iter().enumerate() {
            let c = eclass[e];
            if std::mem::replace(&mut done[c], true) {
                continue;
            }
            d1.add(vclass[edge.term], c, esign[e]);
            d1.add(vclass[edge.init], c, -esign[e]);
        }
        let faces: Vec<usize> = (0..self.triangles.len())
            .filter(|&t| t < self.pairing[t].partner)
            .collect();
        let mut d2 = SparseMatrix::new(ne, faces.len());
        for (f, &t) in faces.iter().enumerate() {
            for &(e, fwd) in &self.triangles[t].sides {
                d2.add(eclass[e], f, esign[e] * if fwd { 1 } else { -1 });
            }
        }
        Ok(AbelianGroup::homology_sparse(&d1, &d2))
    }

    /// Plain-text listing of vertices, edges, triangles and the pairing.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# K: {} vertices, {} edges, {} triangles",
            self.vertex_count,
            self.edges.len(),
            self.triangles.len()
        );
        for (c, circle) in self.circles.iter().enumerate() {
            let _ = writeln!(out, "circle {c} {}", circle.labels.join(" "));
        }
        for (a, plan) in self.annuli.iter().enumerate() {
            let steps: String = plan
                .steps
                .iter()
                .map(|(s, _)| match s {
                    Step::L => 'L',
                    Step::U => 'U',
                })
                .collect();
            let _ = writeln!(
                out,
                "annulus {a} {:?} {}->{} start {} {} {steps}",
                plan.kind, plan.lower, plan.upper, plan.start.0, plan.start.1
            );
        }
        for (t, tri) in self.triangles.iter().enumerate() {
            let p = self.pairing[t];
            let _ = writeln!(
                out,
                "triangle {t} {} {} {} annulus {} {:?} {} {:?} pair {} {}{}{}",
                tri.corners[0],
                tri.corners[1],
                tri.corners[2],
                tri.annulus,
                tri.base,
                tri.interval,
                tri.cell,
                p.partner,
                p.perm[0],
                p.perm[1],
                p.perm[2]
            );
        }
        out
    }
}

pub(crate) fn perm3_is_even(p: [usize; 3]) -> bool {
    let inversions = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folding::decompose;
    use crate::graph::parse_marked_map;
    use crate::homology::graph_mapping_torus_h1;

    const FIG8: &str = "vertices: v\nedge a v v\nedge b v v\nmap a = b a\nmap b = b b a\nboundary = a ~b ~a b\n";
    const ID: &str = "vertices: v\nedge a v v\nedge b v v\nmap a = a\nmap b = b\nboundary = a ~b ~a b\n";

    #[test]
    fn identity_is_a_single_product_annulus() {
        let mm = parse_marked_map(ID).unwrap();
        let k = assemble_torus(&decompose(&mm).unwrap()).unwrap();
        assert_eq!(k.annuli.len(), 1);
        assert_eq!(k.triangle_count(), 8);
        assert_eq!(k.quotient_h1().unwrap(), graph_mapping_torus_h1(&mm));
    }

    #[test]
    fn figure_eight_torus() {
        let mm = parse_marked_map(FIG8).unwrap();
        let seq = decompose(&mm).unwrap();
        let k = assemble_torus(&seq).unwrap();
        assert_eq!(k.euler_characteristic(), 0);
        assert_eq!(k.annuli.len(), 2 * seq.len() + 1);
        assert_eq!(k.annulus_triangle_counts().iter().sum::<usize>(), k.triangle_count());
        assert_eq!(k.quotient_h1().unwrap(), graph_mapping_torus_h1(&mm));
    }

    #[test]
    fn parity() {
        assert!(perm3_is_even([0, 1, 2]));
        assert!(perm3_is_even([1, 2, 0]));
        assert!(!perm3_is_even([1, 0, 2]));
        assert!(!perm3_is_even([0, 2, 1]));
    }
}
