//! Finite presentations: the HNN presentation of a mapping torus, Tietze
//! simplification and abelianization.
//!
//! A word is a sequence of nonzero `i32` letters: `k > 0` is generator
//! `k - 1` and `-k` its inverse.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::MarkedMap;
use crate::homology::AbelianGroup;

pub type Word = Vec<i32>;

fn gen_of(l: i32) -> usize {
    (l.unsigned_abs() - 1) as usize
}

fn letter(g: usize, inverse: bool) -> i32 {
    let l = g as i32 + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn invert(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn cyclic_reduce(w: &[i32]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

fn rotations(w: &[i32]) -> impl Iterator<Item = Word> + '_ {
    (0..w.len().max(1)).map(move |r| {
        let mut v = w[r.min(w.len())..].to_vec();
        v.extend_from_slice(&w[..r.min(w.len())]);
        v
    })
}

/// True if the cyclic reductions of `w1` and `w2` agree up to rotation and
/// inversion after applying `renaming` to `w1`. `renaming[g]` is the signed
/// letter that generator `g` of `w1` becomes; an empty slice means none.
pub fn words_cyclically_equal(w1: &[i32], w2: &[i32], renaming: &[i32]) -> bool {
    let renamed: Word = if renaming.is_empty() {
        w1.to_vec()
    } else {
        w1.iter()
            .map(|&l| {
                let img = renaming[gen_of(l)];
                if l > 0 {
                    img
                } else {
                    -img
                }
            })
            .collect()
    };
    let a = cyclic_reduce(&renamed);
    let b = cyclic_reduce(w2);
    if a.len() != b.len() {
        return false;
    }
    let inv = invert(&b);
    let found = rotations(&a).any(|r| r == b || r == inv);
    found
}

/// Canonical key of a cyclic word up to rotation, inversion and signed
/// renaming of generators: generators are renumbered by first appearance,
/// each first appearance positive, and the least result is kept.
pub fn canonical_key(w: &[i32]) -> Word {
    let w = cyclic_reduce(w);
    let inv = invert(&w);
    let mut best: Option<Word> = None;
    for base in [&w, &inv] {
        for rot in rotations(base) {
            let mut names: Vec<(usize, i32)> = Vec::new();
            let key: Word = rot
                .iter()
                .map(|&l| {
                    let g = gen_of(l);
                    let sign = l.signum();
                    let (idx, s) = match names.iter().position(|&(h, _)| h == g) {
                        Some(i) => (i, names[i].1),
                        None => {
                            names.push((g, sign));
                            (names.len() - 1, sign)
                        }
                    };
                    letter(idx, sign != s)
                })
                .collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.unwrap_or_default()
}

/// True if the two cyclic words agree up to rotation, inversion and some
/// signed renaming of generators.
pub fn words_equivalent_up_to_renaming(w1: &[i32], w2: &[i32]) -> bool {
    canonical_key(w1) == canonical_key(w2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation; relators are freely and cyclically reduced and
    /// empty ones dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generators.len();
        if relators.iter().flatten().any(|&l| l == 0 || gen_of(l) >= n) {
            return Err(Error::Invalid("relator uses an unknown generator".into()));
        }
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(Error::Invalid(format!("duplicate generator `{g}`")));
            }
        }
        let mut p = Self {
            generators,
            relators,
        };
        p.normalize();
        Ok(p)
    }

    /// Parses relators written as whitespace-separated generator names,
    /// `~x` for the inverse.
    pub fn from_text(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let words = relators
            .iter()
            .map(|r| parse_word(&gens, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, words)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(&self.generators, text)
    }

    pub fn format_word(&self, w: &[i32]) -> String {
        w.iter()
            .map(|&l| {
                let name = &self.generators[gen_of(l)];
                if l > 0 {
                    name.clone()
                } else {
                    format!("~{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn normalize(&mut self) {
        let mut kept: Vec<Word> = Vec::new();
        let mut keys = HashSet::new();
        for r in &self.relators {
            let r = cyclic_reduce(r);
            if r.is_empty() {
                continue;
            }
            // drop exact duplicates up to rotation and inversion
            let inv = invert(&r);
            let key = rotations(&r).chain(rotations(&inv)).min().unwrap_or_default();
            if keys.insert(key) {
                kept.push(r);
            }
        }
        self.relators = kept;
    }

    /// Exponent-sum matrix abelianized to invariant factors.
    pub fn abelianization(&self) -> AbelianGroup {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; n];
                for &l in r {
                    row[gen_of(l)] += l.signum() as i64;
                }
                row
            })
            .collect();
        AbelianGroup::from_relations(n, &rows)
    }

    /// Replaces generator `g` by the word `value` everywhere. `value` may
    /// use `g` itself, as in a Nielsen move.
    pub fn substitute(&self, g: usize, value: &[i32]) -> Presentation {
        let inv = invert(value);
        let relators = self
            .relators
            .iter()
            .map(|r| substitute_word(r, g, value, &inv))
            .collect();
        let mut p = Presentation {
            generators: self.generators.clone(),
            relators,
        };
        p.normalize();
        p
    }

    /// Renames a generator.
    pub fn rename(&mut self, g: usize, name: impl Into<String>) -> Result<()> {
        let name = name.into();
        if self.generators.iter().enumerate().any(|(h, n)| h != g && *n == name) {
            return Err(Error::Invalid(format!("duplicate generator `{name}`")));
        }
        self.generators[g] = name;
        Ok(())
    }

    /// Removes generator `g`, which must not occur in any relator.
    fn drop_generator(&mut self, g: usize) {
        self.generators.remove(g);
        for r in &mut self.relators {
            for l in r.iter_mut() {
                let h = gen_of(*l);
                debug_assert_ne!(h, g);
                if h > g {
                    *l -= l.signum();
                }
            }
        }
    }

    /// Greedy Tietze simplification. A generator occurring exactly once in
    /// some relator is solved for and substituted away, provided the total
    /// relator length does not grow. Shorter relators are tried first and
    /// generators within a relator in name order.
    pub fn tietze_simplify(&self) -> Presentation {
        const MAX_MOVES: usize = 10_000;
        let mut p = self.clone();
        p.normalize();
        for _ in 0..MAX_MOVES {
            match p.best_elimination() {
                Some((ri, g)) => p = p.eliminate(ri, g),
                None => break,
            }
        }
        p
    }

    fn best_elimination(&self) -> Option<(usize, usize)> {
        let total = self.total_length();
        let mut order: Vec<usize> = (0..self.relators.len()).collect();
        order.sort_by_key(|&i| (self.relators[i].len(), i));
        for ri in order {
            let r = &self.relators[ri];
            let mut once: Vec<usize> = (0..self.generators.len())
                .filter(|&g| r.iter().filter(|&&l| gen_of(l) == g).count() == 1)
                .collect();
            once.sort_by(|&x, &y| self.generators[x].cmp(&self.generators[y]));
            for g in once {
                if self.eliminate(ri, g).total_length() <= total {
                    return Some((ri, g));
                }
            }
        }
        None
    }

    fn eliminate(&self, ri: usize, g: usize) -> Presentation {
        let r = &self.relators[ri];
        let pos = r.iter().position(|&l| gen_of(l) == g).expect("generator occurs");
        let mut rot = r[pos..].to_vec();
        rot.extend_from_slice(&r[..pos]);
        let rest = &rot[1..];
        // g^e · rest = 1, so g = rest^{-e}
        let value = if rot[0] > 0 { invert(rest) } else { rest.to_vec() };
        let value_inv = invert(&value);
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ri)
            .map(|(_, w)| substitute_word(w, g, &value, &value_inv))
            .collect();
        let mut p = Presentation {
            generators: self.generators.clone(),
            relators,
        };
        p.drop_generator(g);
        p.normalize();
        p
    }

    /// Applies Nielsen moves `y -> x^e y x^d` while they strictly shorten
    /// the relators, eliminating generators again after each move.
    pub fn nielsen_reduce(&self) -> Presentation {
        let mut p = self.tietze_simplify();
        loop {
            let total = p.total_length();
            let next = nielsen_moves(p.generators.len())
                .map(|(y, v)| p.substitute(y, &v))
                .find(|q| q.total_length() < total);
            match next {
                Some(q) => p = q.tietze_simplify(),
                None => return p,
            }
        }
    }

    /// For a one-relator presentation, the least [`canonical_key`] reachable
    /// from the relator by Nielsen moves that do not lengthen it, searching
    /// at most `cap` words. Words with equal results present isomorphic
    /// groups.
    pub fn one_relator_canonical(&self, cap: usize) -> Option<Word> {
        let p = self.nielsen_reduce();
        if p.relators.len() != 1 {
            return None;
        }
        let n = p.generators.len();
        let start = canonical_key(&p.relators[0]);
        let mut best_len = start.len();
        let mut best = start.clone();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for (y, v) in nielsen_moves(n) {
                let next = canonical_key(&substitute_word(&w, y, &v, &invert(&v)));
                if next.len() > best_len || seen.len() >= cap {
                    continue;
                }
                if next.len() < best_len {
                    best_len = next.len();
                    best = next.clone();
                    seen.clear();
                    queue.clear();
                } else if next < best {
                    best = next.clone();
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Some(best)
    }
}

/// Candidate Nielsen moves as (generator, replacement word).
fn nielsen_moves(n: usize) -> impl Iterator<Item = (usize, Word)> {
    (0..n).flat_map(move |y| {
        (0..n).filter(move |&x| x != y).flat_map(move |x| {
            let (yl, xl) = (letter(y, false), letter(x, false));
            [
                vec![xl, yl],
                vec![-xl, yl],
                vec![yl, xl],
                vec![yl, -xl],
                vec![xl, yl, -xl],
                vec![-xl, yl, xl],
            ]
            .into_iter()
            .map(move |v| (y, v))
        })
    })
}

fn substitute_word(w: &[i32], g: usize, value: &[i32], value_inv: &[i32]) -> Word {
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if gen_of(l) == g {
            out.extend_from_slice(if l > 0 { value } else { value_inv });
        } else {
            out.push(l);
        }
    }
    cyclic_reduce(&out)
}

fn parse_word(gens: &[String], text: &str) -> Result<Word> {
    text.split_whitespace()
        .map(|tok| {
            let (name, inv) = match tok.strip_prefix('~') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            gens.iter()
                .position(|g| g == name)
                .map(|g| letter(g, inv))
                .ok_or_else(|| Error::Invalid(format!("unknown generator `{name}`")))
        })
        .collect()
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// The HNN presentation of the mapping torus group. A breadth-first spanning
/// tree from vertex 0 is collapsed; generators are the remaining edges and a
/// stable letter `t`, with one relator `~t x t = f(x)` per generator `x`.
pub fn pi1_presentation(mm: &MarkedMap) -> Presentation {
    let g = mm.graph();
    let f = mm.map();
    let tree = g.bfs_tree(0);
    let mut in_tree = vec![false; g.edge_count()];
    for d in tree.iter().flatten().flatten() {
        in_tree[d.edge] = true;
    }
    let non_tree: Vec<usize> = (0..g.edge_count()).filter(|&e| !in_tree[e]).collect();
    let mut gen_index = vec![usize::MAX; g.edge_count()];
    for (i, &e) in non_tree.iter().enumerate() {
        gen_index[e] = i;
    }
    // path from the root to each vertex, as directed edges
    let mut gamma: Vec<Vec<crate::graph::DirEdge>> = vec![Vec::new(); g.vertex_count()];
    let mut order: Vec<usize> = (0..g.vertex_count()).filter(|&v| tree[v].is_some()).collect();
    order.sort_by_key(|&v| depth(&tree, g, v));
    for v in order {
        if let Some(Some(d)) = tree[v] {
            let mut p = gamma[g.initial(d)].clone();
            p.push(d);
            gamma[v] = p;
        }
    }
    let collapse = |steps: &[crate::graph::DirEdge]| -> Word {
        steps
            .iter()
            .filter(|d| !in_tree[d.edge])
            .map(|d| letter(gen_index[d.edge], d.reversed))
            .collect()
    };
    let mut names: Vec<String> = non_tree.iter().map(|&e| g.edge(e).label.clone()).collect();
    let t_name = g.fresh_label("t");
    names.push(t_name);
    let t = letter(non_tree.len(), false);
    let relators = non_tree
        .iter()
        .map(|&e| {
            let edge = g.edge(e);
            let mut loop_steps = gamma[edge.init].clone();
            loop_steps.push(crate::graph::DirEdge::forward(e));
            loop_steps.extend(gamma[edge.term].iter().rev().map(|d| d.rev()));
            let image = f.apply_unchecked(&loop_steps);
            let mut r = vec![-t, letter(gen_index[e], false), t];
            r.extend(invert(&collapse(image.steps())));
            r
        })
        .collect();
    Presentation::new(names, relators).expect("generators are well formed")
}

fn depth(tree: &[Option<Option<crate::graph::DirEdge>>], g: &crate::graph::Graph, v: usize) -> usize {
    let mut d = 0;
    let mut cur = v;
    while let Some(Some(e)) = tree[cur] {
        cur = g.initial(e);
        d += 1;
    }
    d
}
