//! Disjoint-set forest with path halving and union by size.

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Dense class ids `0..k` in order of first appearance, plus `k`.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = next;
                next += 1;
            }
            out[x] = id[r];
        }
        (out, next)
    }
}

/// Union-find that also tracks a relative sign between members, used to
/// identify oriented cells where an identification may flip orientation.
#[derive(Debug, Clone)]
pub(crate) struct SignedUnionFind {
    parent: Vec<usize>,
    // sign of x relative to parent[x]
    sign: Vec<i8>,
}

impl SignedUnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    /// Root of `x` and the sign of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, i8) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // compress, accumulating signs from the top of the path down
        let mut acc = 1i8;
        for &node in path.iter().rev() {
            acc *= self.sign[node];
            self.sign[node] = acc;
            self.parent[node] = root;
        }
        (root, if x == root { 1 } else { self.sign[x] })
    }

    /// Record `x = s * y`. Returns `false` if this contradicts earlier
    /// identifications (a cell glued to its own reverse).
    pub fn union(&mut self, x: usize, y: usize, s: i8) -> bool {
        let (rx, sx) = self.find(x);
        let (ry, sy) = self.find(y);
        if rx == ry {
            return sx == s * sy;
        }
        // x = sx*rx, y = sy*ry, x = s*y  =>  rx = sx*s*sy*ry
        self.parent[rx] = ry;
        self.sign[rx] = sx * s * sy;
        true
    }
}
