//! Finitely generated abelian groups and first homology.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::graph::MarkedMap;
use crate::smith::{smith_form, SparseMatrix};

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of the relation matrix: `rows` relations in `gens` generators.
    pub fn from_relations(gens: usize, relations: &[Vec<i64>]) -> Self {
        let s = smith_form(relations.len(), gens, relations);
        Self {
            free_rank: gens - s.rank(),
            torsion: s.torsion(),
        }
    }

    /// Homology at the middle of `C_hi --d_in--> C_mid --d_out--> C_lo`.
    /// Matrices are given row by row: `d_out` is `n_lo × n_mid` and `d_in`
    /// is `n_mid × n_hi`.
    pub fn homology(n_mid: usize, n_hi: usize, d_out: &[Vec<i64>], d_in: &[Vec<i64>]) -> Self {
        let out_rank = smith_form(d_out.len(), n_mid, d_out).rank();
        let s_in = smith_form(n_mid, n_hi, d_in);
        Self {
            free_rank: n_mid - out_rank - s_in.rank(),
            torsion: s_in.torsion(),
        }
    }

    /// As [`AbelianGroup::homology`] for sparse boundary matrices.
    pub fn homology_sparse(d_out: &SparseMatrix, d_in: &SparseMatrix) -> Self {
        assert_eq!(d_out.cols, d_in.rows, "boundary maps do not compose");
        let out_rank = d_out.smith_form().rank();
        let s_in = d_in.smith_form();
        Self {
            free_rank: d_in.rows - out_rank - s_in.rank(),
            torsion: s_in.torsion(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            debug_assert!(!d.is_one());
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// First homology of the mapping torus of the graph map, from its cell
/// structure: cells `v`, `e`, vertical arcs `t_v` and squares `e × I`.
///
/// `∂t_v = f(v) - v` and `∂(e × I) = e + t_term - f#(e) - t_init`.
pub fn graph_mapping_torus_h1(mm: &MarkedMap) -> AbelianGroup {
    let g = mm.graph();
    let f = mm.map();
    let (nv, ne) = (g.vertex_count(), g.edge_count());
    // C1 basis: edges then vertical arcs
    let n1 = ne + nv;
    let mut d1 = vec![vec![0i64; n1]; nv];
    for e in 0..ne {
        let edge = g.edge(e);
        d1[edge.term][e] += 1;
        d1[edge.init][e] -= 1;
    }
    for v in 0..nv {
        d1[f.vertex_image(v)][ne + v] += 1;
        d1[v][ne + v] -= 1;
    }
    let mut d2 = vec![vec![0i64; ne]; n1];
    for e in 0..ne {
        let edge = g.edge(e);
        d2[e][e] += 1;
        d2[ne + edge.term][e] += 1;
        d2[ne + edge.init][e] -= 1;
        for d in f.edge_image(e).steps() {
            d2[d.edge][e] -= if d.reversed { -1 } else { 1 };
        }
    }
    AbelianGroup::homology(n1, ne, &d1, &d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_marked_map;

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::free(0).to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        let g = AbelianGroup {
            free_rank: 2,
            torsion: vec![BigInt::from(3)],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/3");
    }

    #[test]
    fn relations() {
        // <x, y | 2x, 3y> = Z/6
        let g = AbelianGroup::from_relations(2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(g.to_string(), "Z/6");
    }

    #[test]
    fn circle_homology() {
        // one vertex, one loop
        let g = AbelianGroup::homology(1, 0, &[vec![0]], &[vec![]]);
        assert_eq!(g, AbelianGroup::free(1));
    }

    #[test]
    fn figure_eight_mapping_torus() {
        let mm = parse_marked_map(
            "vertices: v\nedge a v v\nedge b v v\nmap a = b a\nmap b = b b a\nboundary = a ~b ~a b\n",
        )
        .unwrap();
        // coker [[1,1],[1,2]] - I is trivial
        assert_eq!(graph_mapping_torus_h1(&mm).to_string(), "Z");
    }

    #[test]
    fn identity_mapping_torus() {
        let mm = parse_marked_map(
            "vertices: v\nedge a v v\nedge b v v\nmap a = a\nmap b = b\nboundary = a ~b ~a b\n",
        )
        .unwrap();
        assert_eq!(graph_mapping_torus_h1(&mm).to_string(), "Z^3");
    }
}
