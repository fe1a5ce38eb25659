//! Factorization of a marked map into subdivisions and folds.
//!
//! Each round looks for cancellation between the images of consecutive
//! steps of the loop, subdivides the two edges so that their images share a
//! whole edge, and identifies those edges. The loop is carried along: it is
//! substituted through each subdivision and tightened after each fold.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{fold_candidate, CyclicPath, DirEdge, EdgePath, FoldCandidate, Graph, GraphMap, MarkedMap};

/// A graph `G_i`, the induced map `g: G_i -> G_0` and the loop `sigma_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub graph: Arc<Graph>,
    pub map: GraphMap,
    pub sigma: CyclicPath,
}

/// One edge cut in two by a subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subdivided {
    /// The edge of the coarser graph.
    pub old: usize,
    /// The two halves in the finer graph, in the edge's direction.
    pub first: usize,
    pub second: usize,
    /// The new valence-two vertex between them.
    pub mid: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionStep {
    pub s: GraphMap,
    pub subdivided: Vec<Subdivided>,
    /// The fold candidate in the coarser graph.
    pub candidate: FoldCandidate,
    /// The two directions of the finer graph that the next fold identifies.
    pub u1: DirEdge,
    pub u2: DirEdge,
}

impl SubdivisionStep {
    /// The subdivision record for an edge of the coarser graph, if any.
    pub fn subdivision_of(&self, old: usize) -> Option<&Subdivided> {
        self.subdivided.iter().find(|s| s.old == old)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldKind {
    /// Both participating edges were subdivided.
    Partial,
    /// At least one participating edge was folded whole.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldStep {
    pub p: GraphMap,
    /// `u1` is collapsed onto `u2`; both are directions of the finer graph.
    pub identified: (DirEdge, DirEdge),
    pub kind: FoldKind,
    /// Index `j` of the loop before the fold with `sigma[j] = ~u1` and
    /// `sigma[j + 1] = u2` (cyclically). These two steps cancel.
    pub corner: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldSequence {
    /// `G_0, ..., G_2n` with their maps to `G_0` and loops.
    pub stages: Vec<Stage>,
    /// `(s_i, p_i)` for `i < n`.
    pub steps: Vec<(SubdivisionStep, FoldStep)>,
    /// The final graph homeomorphism `G_2n -> G_0`.
    pub terminal: GraphMap,
}

fn fresh(used: &mut HashSet<String>, base: String) -> String {
    let name = if used.contains(&base) {
        (2..)
            .map(|n| format!("{base}_{n}"))
            .find(|l| !used.contains(l))
            .expect("unbounded search")
    } else {
        base
    };
    used.insert(name.clone());
    name
}

/// Subdivides the edges of a fold candidate whose images are longer than
/// the common prefix.
pub fn subdivide(stage: &Stage, cand: FoldCandidate) -> Result<(SubdivisionStep, Stage)> {
    let g = &stage.graph;
    let k = cand.prefix_len;
    let (d1, d2) = (cand.d1, cand.d2);
    if d1.edge == d2.edge {
        return Err(Error::Unsupported(
            "fold candidate uses both directions of one edge".into(),
        ));
    }
    if k == 0 {
        return Err(Error::Fold("fold candidate with empty common prefix".into()));
    }
    for d in [d1, d2] {
        if stage.map.edge_image(d.edge).len() < k {
            return Err(Error::Fold("common prefix longer than an image".into()));
        }
    }
    let split: Vec<DirEdge> = [d1, d2]
        .into_iter()
        .filter(|d| stage.map.edge_image(d.edge).len() > k)
        .collect();

    let mut used: HashSet<String> = g.edges().iter().map(|e| e.label.clone()).collect();
    let mut finer = Graph::new(g.vertex_names().to_vec());
    let mut images: Vec<EdgePath> = Vec::new();
    let mut s_images: Vec<EdgePath> = Vec::with_capacity(g.edge_count());
    let mut subdivided = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let img = stage.map.edge_image(e);
        match split.iter().find(|d| d.edge == e) {
            Some(d) => {
                let cut = if d.reversed { img.len() - k } else { k };
                let mid_name = finer.fresh_vertex_name(&format!("{}_m", edge.label));
                let mid = finer.add_vertex(mid_name);
                let l1 = fresh(&mut used, format!("{}_1", edge.label));
                let l2 = fresh(&mut used, format!("{}_2", edge.label));
                let first = finer.add_edge(l1, edge.init, mid)?;
                let second = finer.add_edge(l2, mid, edge.term)?;
                images.push(img.steps()[..cut].iter().copied().collect());
                images.push(img.steps()[cut..].iter().copied().collect());
                s_images.push(vec![DirEdge::forward(first), DirEdge::forward(second)].into());
                subdivided.push(Subdivided {
                    old: e,
                    first,
                    second,
                    mid,
                });
            }
            None => {
                let ne = finer.add_edge(edge.label.clone(), edge.init, edge.term)?;
                images.push(stage.map.edge_image(e).clone());
                s_images.push(vec![DirEdge::forward(ne)].into());
            }
        }
    }
    let finer = Arc::new(finer);
    let direction_after = |d: DirEdge| -> DirEdge {
        match subdivided.iter().find(|s| s.old == d.edge) {
            Some(s) if d.reversed => DirEdge::backward(s.second),
            Some(s) => DirEdge::forward(s.first),
            None => s_images[d.edge].steps()[0].along(d.reversed),
        }
    };
    let (u1, u2) = (direction_after(d1), direction_after(d2));
    let mut vertex_map = stage.map.vertex_map().to_vec();
    for s in &subdivided {
        let last = images[s.first].last().expect("nonempty half");
        vertex_map.push(stage.map.range().terminal(last));
    }
    let s = GraphMap::new(
        g.clone(),
        finer.clone(),
        (0..g.vertex_count()).collect(),
        s_images,
    )?;
    let map = GraphMap::new(finer.clone(), stage.map.range().clone(), vertex_map, images)?;
    let sigma: CyclicPath = s.apply_unchecked(stage.sigma.steps()).into();
    let step = SubdivisionStep {
        s,
        subdivided,
        candidate: cand,
        u1,
        u2,
    };
    Ok((
        step,
        Stage {
            graph: finer,
            map,
            sigma,
        },
    ))
}

/// Identifies `u1` with `u2` in a freshly subdivided stage.
pub fn fold(stage: &Stage, sub: &SubdivisionStep) -> Result<(FoldStep, Stage)> {
    let g = &stage.graph;
    let (u1, u2) = (sub.u1, sub.u2);
    if stage.map.image(u1) != stage.map.image(u2) {
        return Err(Error::Fold("identified edges have different images".into()));
    }
    if g.initial(u1) != g.initial(u2) {
        return Err(Error::Fold("identified edges do not share an initial vertex".into()));
    }
    let w = g.initial(u1);
    if g.valence(w) == 2 {
        // the fold would leave a leaf that the loop no longer crosses
        return Err(Error::Unsupported(format!(
            "fold at the valence-two vertex `{}` creates a leaf; the input map is not tight and must be tightened first",
            g.vertex_name(w)
        )));
    }
    let (gone_v, kept_v) = (g.terminal(u1), g.terminal(u2));
    if gone_v == kept_v {
        return Err(Error::NotHomotopyEquivalence(
            "fold would identify two edges with the same endpoints".into(),
        ));
    }
    let gone_e = u1.edge;
    let kind = if sub.subdivided.len() == 2 {
        FoldKind::Partial
    } else {
        FoldKind::Full
    };

    let vertex_index = |v: usize| -> usize {
        let v = if v == gone_v { kept_v } else { v };
        if v > gone_v {
            v - 1
        } else {
            v
        }
    };
    let edge_index = |e: usize| -> usize {
        if e > gone_e {
            e - 1
        } else {
            e
        }
    };
    let mut coarser = Graph::new(
        g.vertex_names()
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != gone_v)
            .map(|(_, n)| n.clone()),
    );
    let mut images = Vec::new();
    let mut p_images = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if e == gone_e {
            let target = DirEdge {
                edge: edge_index(u2.edge),
                reversed: u2.reversed,
            };
            p_images.push(vec![target.along(u1.reversed)].into());
            continue;
        }
        coarser.add_edge(edge.label.clone(), vertex_index(edge.init), vertex_index(edge.term))?;
        images.push(stage.map.edge_image(e).clone());
        p_images.push(vec![DirEdge::forward(edge_index(e))].into());
    }
    let coarser = Arc::new(coarser);
    let mut vertex_map = vec![0; coarser.vertex_count()];
    for v in 0..g.vertex_count() {
        vertex_map[vertex_index(v)] = stage.map.vertex_image(v);
    }
    let p = GraphMap::new(
        g.clone(),
        coarser.clone(),
        (0..g.vertex_count()).map(vertex_index).collect(),
        p_images,
    )?;
    let map = GraphMap::new(coarser.clone(), stage.map.range().clone(), vertex_map, images)?;

    let n = stage.sigma.len();
    let corner = (0..n)
        .find(|&j| stage.sigma.at(j) == u1.rev() && stage.sigma.at((j + 1) % n) == u2)
        .ok_or_else(|| Error::Fold("loop has no corner between the folded edges".into()))?;
    let pushed = p.apply_unchecked(stage.sigma.steps());
    let sigma: CyclicPath = pushed
        .steps()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != corner && j != (corner + 1) % n)
        .map(|(_, &d)| d)
        .collect::<Vec<_>>()
        .into();
    if !sigma.is_cyclically_tight() {
        return Err(Error::Fold("fold cancels more than one pair in the loop".into()));
    }
    let step = FoldStep {
        p,
        identified: (u1, u2),
        kind,
        corner,
    };
    Ok((
        step,
        Stage {
            graph: coarser,
            map,
            sigma,
        },
    ))
}

/// Folds until no consecutive pair of the loop cancels, then checks that
/// the remaining map is a graph homeomorphism.
pub fn decompose(mm: &MarkedMap) -> Result<FoldSequence> {
    mm.validate().into_result()?;
    let mut stages = vec![Stage {
        graph: mm.graph().clone(),
        map: mm.map().clone(),
        sigma: mm.boundary().clone(),
    }];
    let mut steps = Vec::new();
    // every fold shortens the total image length
    for _ in 0..=mm.size() {
        let stage = stages.last().expect("at least one stage");
        let Some(cand) = fold_candidate(&stage.map, &stage.sigma) else {
            let terminal = stage.map.clone();
            if !terminal.is_graph_isomorphism() {
                return Err(Error::NotHomotopyEquivalence(
                    "the map cannot be folded further but is not a graph homeomorphism".into(),
                ));
            }
            return Ok(FoldSequence {
                stages,
                steps,
                terminal,
            });
        };
        let (sub, mid) = subdivide(stage, cand)?;
        let (fold_step, next) = fold(&mid, &sub)?;
        stages.push(mid);
        stages.push(next);
        steps.push((sub, fold_step));
    }
    Err(Error::Fold("folding did not terminate".into()))
}

/// Bound on the number of folds a tight map admits: `sum (val(v) - 2)`.
pub fn fold_count_bound(g: &Graph) -> Result<usize> {
    (0..g.vertex_count())
        .map(|v| {
            let val = g.valence(v);
            if val < 3 {
                Err(Error::LowValence {
                    vertex: g.vertex_name(v).to_string(),
                    valence: val,
                })
            } else {
                Ok(val - 2)
            }
        })
        .sum()
}

impl FoldSequence {
    /// Number of folds.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn partial_folds(&self) -> usize {
        self.steps
            .iter()
            .filter(|(_, f)| f.kind == FoldKind::Partial)
            .count()
    }

    /// Map sizes of the stages `G_0, G_2, ..., G_2n`.
    pub fn fold_sizes(&self) -> Vec<usize> {
        self.stages.iter().step_by(2).map(|s| s.map.size()).collect()
    }

    /// Composes every step with the terminal map.
    pub fn composite(&self) -> Result<GraphMap> {
        let mut acc = GraphMap::identity(self.stages[0].graph.clone());
        for (s, p) in &self.steps {
            acc = acc.then(&s.s)?.then(&p.p)?;
        }
        acc.then(&self.terminal)
    }

    /// Checks the structural invariants of the factorization.
    pub fn check(&self) -> Result<()> {
        let f = &self.stages[0].map;
        let comp = self.composite()?;
        for e in 0..f.domain().edge_count() {
            if comp.edge_image(e) != &f.edge_image(e).tightened() {
                return Err(Error::Fold(format!("factorization differs from f on edge {e}")));
            }
        }
        for (i, (s, p)) in self.steps.iter().enumerate() {
            let (before, mid, after) = (&self.stages[2 * i], &self.stages[2 * i + 1], &self.stages[2 * i + 2]);
            if after.map.size() >= before.map.size() {
                return Err(Error::Fold(format!("fold {i} does not reduce size")));
            }
            if CyclicPath::from(s.s.apply_unchecked(before.sigma.steps())) != mid.sigma {
                return Err(Error::Fold(format!("loop {} is not s(loop {})", 2 * i + 1, 2 * i)));
            }
            let pushed = CyclicPath::from(p.p.apply_unchecked(mid.sigma.steps())).cyclically_tightened();
            if !pushed.is_rotation_of(&after.sigma) {
                return Err(Error::Fold(format!("loop {} is not p(loop {})", 2 * i + 2, 2 * i + 1)));
            }
        }
        for (i, st) in self.stages.iter().enumerate() {
            if !crate::graph::is_boundary_like(&st.graph, &st.sigma) {
                return Err(Error::Fold(format!("loop {i} is not boundary-like")));
            }
        }
        if !self.terminal.is_graph_isomorphism() {
            return Err(Error::Fold("terminal map is not a homeomorphism".into()));
        }
        Ok(())
    }

    /// Human-readable trace: the maps and loops at every stage, in the
    /// notation `s0(a) = a_1 a_2`, `p0(a_2) = b_2`, `g1(b_1) = ...`.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        let st0 = &self.stages[0];
        let g0 = st0.map.range();
        for line in st0.map.display_lines("f") {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "sigma0 = {}", st0.sigma.display(&st0.graph));
        for (i, (s, p)) in self.steps.iter().enumerate() {
            let (before, mid, after) = (&self.stages[2 * i], &self.stages[2 * i + 1], &self.stages[2 * i + 2]);
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "# step {i}: fold {} and {} along {} edges ({})",
                before.graph.label(s.candidate.d1),
                before.graph.label(s.candidate.d2),
                s.candidate.prefix_len,
                match p.kind {
                    FoldKind::Partial => "partial",
                    FoldKind::Full => "full",
                }
            );
            for sd in &s.subdivided {
                let _ = writeln!(
                    out,
                    "s{i}({}) = {}",
                    before.graph.edge(sd.old).label,
                    s.s.edge_image(sd.old).display(&mid.graph)
                );
            }
            let _ = writeln!(out, "sigma{} = {}", 2 * i + 1, mid.sigma.display(&mid.graph));
            let gone = p.identified.0.edge;
            let _ = writeln!(
                out,
                "p{i}({}) = {}",
                mid.graph.edge(gone).label,
                p.p.edge_image(gone).display(&after.graph)
            );
            for e in 0..after.graph.edge_count() {
                let _ = writeln!(
                    out,
                    "g{}({}) = {}",
                    i + 1,
                    after.graph.edge(e).label,
                    after.map.edge_image(e).display(g0)
                );
            }
            let _ = writeln!(out, "sigma{} = {}", 2 * i + 2, after.sigma.display(&after.graph));
        }
        let last = self.stages.last().expect("stages");
        let _ = writeln!(out);
        let _ = writeln!(out, "# terminal homeomorphism");
        for e in 0..last.graph.edge_count() {
            let _ = writeln!(
                out,
                "h({}) = {}",
                last.graph.edge(e).label,
                self.terminal.edge_image(e).display(g0)
            );
        }
        out
    }
}
