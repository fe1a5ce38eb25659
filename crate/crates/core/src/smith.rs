//! Invariant factors of integer matrices.
//!
//! Elimination runs on `i64` with checked arithmetic and restarts on
//! [`BigInt`] if any intermediate value overflows.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rank and invariant factors `d_1 | d_2 | ... | d_r` (all positive) of an
/// integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

trait Scalar: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// Compares absolute values.
    fn abs_lt(&self, other: &Self) -> bool;
    /// Quotient of Euclidean division, toward zero.
    fn quot(&self, d: &Self) -> Self;
    /// `self - q * b`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add(&self, b: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    fn into_big(self) -> BigInt;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quot(&self, d: &Self) -> Self {
        // i64::MIN never occurs: it is treated as overflow below
        self / d
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?).filter(|&v| v != i64::MIN)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b).filter(|&v| v != i64::MIN)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Diagonalizes in place; returns the nonzero diagonal, or `None` on
/// overflow.
fn eliminate<T: Scalar>(mut m: Vec<Vec<T>>, cols: usize) -> Option<Vec<BigInt>> {
    let rows = m.len();
    let mut diag: Vec<T> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: a unit if one exists, else the smallest nonzero entry
        let mut best: Option<(usize, usize)> = None;
        'search: for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                if x.is_unit() {
                    best = Some((i, j));
                    break 'search;
                }
                match best {
                    Some((bi, bj)) if !x.abs_lt(&m[bi][bj]) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            // clear column t below the pivot
            let support: Vec<usize> = (t..cols).filter(|&j| !m[t][j].is_zero()).collect();
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].quot(&m[t][t]);
                for &j in &support {
                    let v = m[i][j].sub_mul(&q, &m[t][j])?;
                    m[i][j] = v;
                }
                if !m[i][t].is_zero() {
                    // remainder is smaller than the pivot: promote it
                    m.swap(t, i);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            // clear row t to the right of the pivot
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].quot(&m[t][t]);
                for i in t..rows {
                    if m[i][t].is_zero() {
                        continue;
                    }
                    let v = m[i][j].sub_mul(&q, &m[i][t])?;
                    m[i][j] = v;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide every remaining entry
            let p = m[t][t].clone();
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !m[i][j].is_zero() && !divides(&p, &m[i][j]))
            });
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = m[t][j].add(&m[i][j])?;
                        m[t][j] = v;
                    }
                }
                None => break,
            }
        }
        let p = m[t][t].clone();
        diag.push(if p.is_negative() { p.neg()? } else { p });
        t += 1;
    }
    Some(diag.into_iter().map(Scalar::into_big).collect())
}

fn divides<T: Scalar>(p: &T, x: &T) -> bool {
    let q = x.quot(p);
    x.sub_mul(&q, p).is_some_and(|r| r.is_zero())
}

/// Smith normal form of a dense integer matrix given row by row.
pub fn smith_form(rows: usize, cols: usize, entries: &[Vec<i64>]) -> SmithForm {
    assert_eq!(entries.len(), rows, "row count mismatch");
    assert!(entries.iter().all(|r| r.len() == cols), "column count mismatch");
    let fast = entries.iter().all(|r| r.iter().all(|&x| x != i64::MIN));
    let factors = fast
        .then(|| eliminate(entries.to_vec(), cols))
        .flatten()
        .unwrap_or_else(|| {
            let big = entries
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            eliminate::<BigInt>(big, cols).expect("big integers do not overflow")
        });
    let mut factors = factors;
    normalize_chain(&mut factors);
    SmithForm {
        rows,
        cols,
        factors,
    }
}

/// Sorts into a divisibility chain. Elimination already yields one, this
/// only guards the invariant.
fn normalize_chain(f: &mut [BigInt]) {
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let g = f[i].gcd(&f[j]);
            let l = f[i].lcm(&f[j]);
            f[i] = g;
            f[j] = l;
        }
    }
}

/// A sparse integer matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows],
        }
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        let e = self.entries[r].entry(c).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries[r].remove(&c);
        }
    }

    pub fn from_dense(entries: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::new(entries.len(), cols);
        for (r, row) in entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.add(r, c, v);
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| {
                let mut d = vec![0; self.cols];
                for (&c, &v) in row {
                    d[c] = v;
                }
                d
            })
            .collect()
    }

    pub fn smith_form(&self) -> SmithForm {
        smith_form_sparse(self)
    }
}

/// Pivots on unit entries while any remain, keeping fill-in low by
/// preferring short rows and columns, then finishes the leftover block
/// densely. Returns `None` on overflow.
fn eliminate_units(m: &SparseMatrix) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut rows: Vec<BTreeMap<usize, i64>> = m.entries.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut alive = vec![true; m.rows];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..m.rows).map(|r| Reverse((rows[r].len(), r))).collect();
    let mut units = 0;
    while let Some(Reverse((len, p))) = heap.pop() {
        if !alive[p] || rows[p].len() != len {
            continue;
        }
        if len == 0 {
            alive[p] = false;
            continue;
        }
        let pivot = rows[p]
            .iter()
            .filter(|(_, &v)| v == 1 || v == -1)
            .min_by_key(|(&c, _)| col_rows[c].len())
            .map(|(&c, &v)| (c, v));
        let Some((c, u)) = pivot else { continue };
        let prow: Vec<(usize, i64)> = rows[p].iter().map(|(&k, &v)| (k, v)).collect();
        let others: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != p).collect();
        for r in others {
            let q = rows[r][&c].checked_mul(u)?;
            for &(k, v) in &prow {
                let cur = rows[r].get(&k).copied().unwrap_or(0);
                let next = cur.checked_sub(q.checked_mul(v)?)?;
                if next == 0 {
                    rows[r].remove(&k);
                    col_rows[k].remove(&r);
                } else {
                    if cur == 0 {
                        col_rows[k].insert(r);
                    }
                    rows[r].insert(k, next);
                }
            }
            heap.push(Reverse((rows[r].len(), r)));
        }
        for &(k, _) in &prow {
            col_rows[k].remove(&p);
        }
        rows[p].clear();
        alive[p] = false;
        units += 1;
    }
    let rest_rows: Vec<usize> = (0..m.rows).filter(|&r| !rows[r].is_empty()).collect();
    let mut rest_cols: Vec<usize> = rest_rows.iter().flat_map(|&r| rows[r].keys().copied()).collect();
    rest_cols.sort_unstable();
    rest_cols.dedup();
    let dense = rest_rows
        .iter()
        .map(|&r| {
            rest_cols
                .iter()
                .map(|c| rows[r].get(c).copied().unwrap_or(0))
                .collect()
        })
        .collect();
    Some((units, dense))
}

/// Smith normal form of a sparse matrix.
pub fn smith_form_sparse(m: &SparseMatrix) -> SmithForm {
    let Some((units, rest)) = eliminate_units(m) else {
        return smith_form(m.rows, m.cols, &m.to_dense());
    };
    let cols = rest.first().map_or(0, Vec::len);
    let tail = smith_form(rest.len(), cols, &rest);
    let mut factors = vec![BigInt::one(); units];
    factors.extend(tail.factors);
    normalize_chain(&mut factors);
    SmithForm {
        rows: m.rows,
        cols: m.cols,
        factors,
    }
}

/// Small helper for tests and diagnostics.
pub fn factors_as_i64(s: &SmithForm) -> Option<Vec<i64>> {
    s.factors.iter().map(ToPrimitive::to_i64).collect()
}
