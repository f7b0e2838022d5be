//! Small shared machinery: union-find and the congruence-quotient engine used
//! by every colimit computation on leveled set families.

/// Plain union-find over `0..n`.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns true when the two elements were in distinct classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        // keep the smaller root so class representatives are canonical
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Canonical relabeling: returns (class index per element, class count),
    /// classes numbered by order of their smallest member.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            label[x] = label[r];
        }
        (label, count)
    }
}

/// A unary operation between two cells of a leveled family of finite sets.
#[derive(Debug, Clone)]
pub struct CellOp {
    pub from: usize,
    pub to: usize,
    pub table: Vec<usize>,
}

/// A family of finite sets (`sizes[c]` elements in cell `c`) together with
/// unary operations; quotients are taken by the congruence generated from
/// seed relations, propagating merges through every operation.
#[derive(Debug, Clone)]
pub struct LeveledSets {
    pub sizes: Vec<usize>,
    pub ops: Vec<CellOp>,
}

/// Result of a congruence quotient: per-cell relabelings onto `0..class_count`.
#[derive(Debug, Clone)]
pub struct QuotientLabels {
    pub labels: Vec<Vec<usize>>,
    pub counts: Vec<usize>,
}

impl LeveledSets {
    /// Smallest congruence containing `relations` (pairs within a cell).
    pub fn congruence(&self, relations: &[(usize, usize, usize)]) -> QuotientLabels {
        let mut ufs: Vec<UnionFind> = self.sizes.iter().map(|&s| UnionFind::new(s)).collect();
        let mut ops_from: Vec<Vec<usize>> = vec![Vec::new(); self.sizes.len()];
        for (i, op) in self.ops.iter().enumerate() {
            ops_from[op.from].push(i);
        }
        let mut work: Vec<(usize, usize, usize)> = relations.to_vec();
        while let Some((cell, a, b)) = work.pop() {
            if ufs[cell].union(a, b) {
                for &oi in &ops_from[cell] {
                    let op = &self.ops[oi];
                    work.push((op.to, op.table[a], op.table[b]));
                }
            }
        }
        let mut labels = Vec::with_capacity(self.sizes.len());
        let mut counts = Vec::with_capacity(self.sizes.len());
        for uf in ufs.iter_mut() {
            let (l, c) = uf.labels();
            labels.push(l);
            counts.push(c);
        }
        QuotientLabels { labels, counts }
    }
}

/// Monotone maps `[k] -> [n]`, the combinatorial backbone of the standard
/// simplices. Entries are nondecreasing values in `0..=n`.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k + 1];
    loop {
        out.push(cur.clone());
        // next nondecreasing word over 0..=n
        let mut pos = k + 1;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < n {
                cur[pos] += 1;
                for q in pos + 1..=k {
                    cur[q] = cur[pos];
                }
                break;
            }
        }
    }
}

/// Removes the i-th entry (face of a monotone map).
pub fn drop_entry(word: &[usize], i: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() - 1);
    for (j, &v) in word.iter().enumerate() {
        if j != i {
            out.push(v);
        }
    }
    out
}

/// Duplicates the i-th entry (degeneracy of a monotone map).
pub fn dup_entry(word: &[usize], i: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() + 1);
    for (j, &v) in word.iter().enumerate() {
        out.push(v);
        if j == i {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_labels_are_canonical() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 3);
        let (labels, count) = uf.labels();
        assert_eq!(count, 3);
        assert_eq!(labels[0], 0);
        assert_eq!(labels[1], 1);
        assert_eq!(labels[2], 2);
        assert_eq!(labels[3], 1);
        assert_eq!(labels[4], 1);
    }

    #[test]
    fn congruence_propagates_through_ops() {
        // two cells, one op c0 -> c1 sending i to i
        let fam = LeveledSets {
            sizes: vec![3, 3],
            ops: vec![CellOp {
                from: 0,
                to: 1,
                table: vec![0, 1, 2],
            }],
        };
        let q = fam.congruence(&[(0, 0, 2)]);
        assert_eq!(q.counts[0], 2);
        assert_eq!(q.counts[1], 2);
        assert_eq!(q.labels[1][0], q.labels[1][2]);
        assert_ne!(q.labels[1][0], q.labels[1][1]);
    }

    #[test]
    fn monotone_map_counts() {
        assert_eq!(monotone_maps(1, 1).len(), 3);
        assert_eq!(monotone_maps(1, 2).len(), 6);
        assert_eq!(monotone_maps(2, 2).len(), 10);
    }
}
