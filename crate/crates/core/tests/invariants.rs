mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use torusfold::graph::{DirEdge, EdgePath};
use torusfold::group::{cyclic_reduce, free_reduce, invert, Presentation, Word};
use torusfold::smith::{smith_form, SparseMatrix};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn path(letters: &[(usize, bool)]) -> EdgePath {
    letters
        .iter()
        .map(|&(edge, reversed)| DirEdge { edge, reversed })
        .collect::<Vec<_>>()
        .into()
}

/// Determinant by Bareiss elimination, over the integers.
fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::from(1)
    } else {
        a[n - 1][n - 1].clone() * sign
    }
}

fn word_strategy(gens: i32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=gens).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]), 0..max_len)
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn tightening_is_idempotent(letters in prop::collection::vec((0usize..3, any::<bool>()), 0..20)) {
        let p = path(&letters).tightened();
        prop_assert!(p.is_tight());
        prop_assert_eq!(p.tightened(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn free_and_cyclic_reduction(w in word_strategy(3, 16)) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(free_reduce(&[w.clone(), invert(&w)].concat()).is_empty());
        let c = cyclic_reduce(&w);
        prop_assert!(c.len() <= r.len());
        prop_assert!(c.len() < 2 || c[0] != -c[c.len() - 1]);
    }

    #[test]
    fn smith_factors_divide_and_match_determinant(
        entries in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 3)
    ) {
        let s = smith_form(3, 3, &entries);
        for w in s.factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        let product: BigInt = if s.rank() == 3 { s.factors.iter().product() } else { BigInt::zero() };
        prop_assert_eq!(product, det(&entries).abs());
    }

    #[test]
    fn sparse_and_dense_smith_agree(
        rows in 0usize..7,
        cols in 1usize..7,
        seed in prop::collection::vec(-3i64..4, 49)
    ) {
        let entries: Vec<Vec<i64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 7 + c]).collect()).collect();
        let dense = smith_form(rows, cols, &entries);
        let sparse = SparseMatrix::from_dense(&entries, cols).smith_form();
        prop_assert_eq!(dense.factors, sparse.factors);
    }

    #[test]
    fn tietze_preserves_abelianization(rels in prop::collection::vec(word_strategy(3, 10), 0..4)) {
        let p = Presentation::new(vec!["x".into(), "y".into(), "z".into()], rels).unwrap();
        let ab = p.abelianization();
        prop_assert_eq!(p.tietze_simplify().abelianization(), ab.clone());
        prop_assert_eq!(p.nielsen_reduce().abelianization(), ab);
        prop_assert!(p.tietze_simplify().total_length() <= p.total_length());
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn composition_is_associative(a in prop::collection::vec(0u8..4, 0..4), b in prop::collection::vec(0u8..4, 0..4), c in prop::collection::vec(0u8..4, 0..4)) {
        let (f, g, h) = (common::torus_word(&a), common::torus_word(&b), common::torus_word(&c));
        let left = f.then(&g).unwrap().then(&h).unwrap();
        let right = f.then(&g.then(&h).unwrap()).unwrap();
        prop_assert_eq!(left.map(), right.map());
        let joined: Vec<u8> = [a, b, c].concat();
        let direct = common::torus_word(&joined);
        prop_assert_eq!(left.map(), direct.map());
    }

    #[test]
    fn tighten_is_idempotent(word in prop::collection::vec(0u8..4, 0..8)) {
        let t = common::torus_word(&word).tighten().unwrap();
        prop_assert!(t.is_tight());
        let again = t.tighten().unwrap();
        prop_assert_eq!(again.map(), t.map());
        prop_assert_eq!(
            torusfold::homology::graph_mapping_torus_h1(&t),
            torusfold::homology::graph_mapping_torus_h1(&common::torus_word(&word))
        );
    }
}
