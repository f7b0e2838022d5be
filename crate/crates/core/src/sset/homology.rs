//! Integral simplicial homology via Smith normal form over arbitrary
//! precision integers, on the normalized chain complex of nondegenerate
//! simplices. The unnormalized complex is kept alongside as a cross-check.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::sset::{EzData, TruncSSet};
use crate::util::UnionFind;

/// Diagonal of the Smith normal form of an integer matrix: nonnegative
/// entries with each dividing the next.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // locate a nonzero pivot of minimal absolute value
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in left..cols {
                if !m[r][c].is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pr, pc)) => m[r][c].abs() < m[pr][pc].abs(),
                    };
                    if better {
                        pivot = Some((r, c));
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(top, pr);
        for row in m.iter_mut() {
            row.swap(left, pc);
        }
        if m[top][left].is_negative() {
            for c in left..cols {
                m[top][c] = -m[top][c].clone();
            }
        }
        // clear column and row by repeated reduction
        loop {
            let mut clean = true;
            for r in top + 1..rows {
                if !m[r][left].is_zero() {
                    let q = &m[r][left] / &m[top][left];
                    if !q.is_zero() {
                        for c in left..cols {
                            let sub = &q * &m[top][c];
                            m[r][c] -= sub;
                        }
                    }
                    if !m[r][left].is_zero() {
                        m.swap(top, r);
                        if m[top][left].is_negative() {
                            for c in left..cols {
                                m[top][c] = -m[top][c].clone();
                            }
                        }
                        clean = false;
                    }
                }
            }
            for c in left + 1..cols {
                if !m[top][c].is_zero() {
                    let q = &m[top][c] / &m[top][left];
                    if !q.is_zero() {
                        for r in top..rows {
                            let sub = &q * &m[r][left];
                            m[r][c] -= sub;
                        }
                    }
                    if !m[top][c].is_zero() {
                        for row in m.iter_mut().skip(top) {
                            row.swap(left, c);
                        }
                        if m[top][left].is_negative() {
                            for cc in left..cols {
                                m[top][cc] = -m[top][cc].clone();
                            }
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // enforce divisibility of the remaining block by the pivot
        let mut disturbed = false;
        'scan: for r in top + 1..rows {
            for c in left + 1..cols {
                if !(&m[r][c] % &m[top][left]).is_zero() {
                    for cc in left..cols {
                        let add = m[r][cc].clone();
                        m[top][cc] += add;
                    }
                    disturbed = true;
                    break 'scan;
                }
            }
        }
        if disturbed {
            continue;
        }
        diag.push(m[top][left].clone());
        top += 1;
        left += 1;
    }
    diag
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDegree {
    pub degree: usize,
    pub betti: usize,
    /// torsion coefficients > 1, in divisibility order
    pub torsion: Vec<u64>,
    /// degrees at or above the truncation cannot see incoming boundaries
    pub reliable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub trunc: usize,
    pub degrees: Vec<HomologyDegree>,
}

impl HomologyResult {
    pub fn degree(&self, k: usize) -> Option<&HomologyDegree> {
        self.degrees.iter().find(|d| d.degree == k)
    }

    /// Degreewise agreement of the group descriptions on degrees reliable in
    /// both results.
    pub fn agrees_with(&self, other: &HomologyResult) -> bool {
        for d in &self.degrees {
            if !d.reliable {
                continue;
            }
            match other.degree(d.degree) {
                Some(o) if o.reliable => {
                    if o.betti != d.betti || o.torsion != d.torsion {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }
}

/// Boundary matrix of the normalized complex from level n to n-1: columns are
/// nondegenerate n-simplices, rows nondegenerate (n-1)-simplices, entries the
/// signed face incidences with degenerate faces dropped.
pub fn normalized_boundary(x: &TruncSSet, ez: &EzData, n: usize) -> Vec<Vec<BigInt>> {
    let rows: Vec<usize> = (0..x.levels[n - 1]).filter(|&i| ez.nondeg[n - 1][i]).collect();
    let cols: Vec<usize> = (0..x.levels[n]).filter(|&i| ez.nondeg[n][i]).collect();
    let row_of: std::collections::HashMap<usize, usize> =
        rows.iter().enumerate().map(|(r, &i)| (i, r)).collect();
    let mut m = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (c, &xc) in cols.iter().enumerate() {
        for i in 0..=n {
            let f = x.face(n, i, xc);
            if ez.nondeg[n - 1][f] {
                let r = row_of[&f];
                if i % 2 == 0 {
                    m[r][c] += BigInt::one();
                } else {
                    m[r][c] -= BigInt::one();
                }
            }
        }
    }
    m
}

fn homology_from_ranks(
    dims: &[usize],
    boundaries: &[Vec<Vec<BigInt>>],
    trunc: usize,
    up_to: usize,
) -> HomologyResult {
    // boundaries[n] : level n+1 -> level n (so incoming for degree n)
    let snfs: Vec<Vec<BigInt>> = boundaries
        .iter()
        .map(|m| smith_diagonal(m.clone()))
        .collect();
    let rank = |k: usize| -> usize {
        if k == 0 || k > snfs.len() {
            0
        } else {
            snfs[k - 1].iter().filter(|d| !d.is_zero()).count()
        }
    };
    let mut degrees = Vec::new();
    for k in 0..=up_to.min(trunc) {
        let out_rank = rank(k); // rank of boundary out of level k
        let in_rank = if k + 1 <= trunc { rank(k + 1) } else { 0 };
        let betti = dims[k] - out_rank - in_rank;
        let torsion: Vec<u64> = if k + 1 <= trunc {
            snfs[k]
                .iter()
                .filter(|d| !d.is_zero() && **d != BigInt::one())
                .map(|d| {
                    let (_, digits) = d.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                })
                .collect()
        } else {
            Vec::new()
        };
        degrees.push(HomologyDegree {
            degree: k,
            betti,
            torsion,
            reliable: k < trunc,
        });
    }
    HomologyResult { trunc, degrees }
}

/// Homology of the normalized chain complex, degrees 0..=up_to. Degrees at or
/// above the truncation level are flagged unreliable.
pub fn homology(x: &TruncSSet, up_to: usize) -> HomologyResult {
    let ez = EzData::new(x);
    let dims: Vec<usize> = (0..=x.trunc).map(|n| ez.nondeg_count(n)).collect();
    let boundaries: Vec<Vec<Vec<BigInt>>> = (1..=x.trunc)
        .map(|n| normalized_boundary(x, &ez, n))
        .collect();
    homology_from_ranks(&dims, &boundaries, x.trunc, up_to)
}

/// Homology of the full (unnormalized) chain complex. By the Eilenberg-Zilber
/// lemma this agrees with the normalized computation in reliable degrees; it
/// is kept as an independent oracle.
pub fn homology_unnormalized(x: &TruncSSet, up_to: usize) -> HomologyResult {
    let dims: Vec<usize> = x.levels.clone();
    let boundaries: Vec<Vec<Vec<BigInt>>> = (1..=x.trunc)
        .map(|n| {
            let mut m = vec![vec![BigInt::zero(); x.levels[n]]; x.levels[n - 1]];
            for c in 0..x.levels[n] {
                for i in 0..=n {
                    let r = x.face(n, i, c);
                    if i % 2 == 0 {
                        m[r][c] += BigInt::one();
                    } else {
                        m[r][c] -= BigInt::one();
                    }
                }
            }
            m
        })
        .collect();
    homology_from_ranks(&dims, &boundaries, x.trunc, up_to)
}

/// Components of the 1-truncation: vertices modulo edges. `exact` is false
/// when the object is 0-truncated and there are no edges to quotient by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi0 {
    pub class_of: Vec<usize>,
    pub count: usize,
    pub exact: bool,
}

pub fn pi0(x: &TruncSSet) -> Pi0 {
    let mut uf = UnionFind::new(x.levels[0]);
    let exact = x.trunc >= 1;
    if exact {
        for e in 0..x.levels[1] {
            uf.union(x.face(1, 0, e), x.face(1, 1, e));
        }
    }
    let (class_of, count) = uf.labels();
    Pi0 {
        class_of,
        count,
        exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FiniteCategory;
    use crate::fingroup::FiniteGroup;
    use crate::sset::build::{boundary, nerve, standard_simplex};

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn snf_of_known_matrix() {
        let m = vec![
            vec![int(-6), int(111), int(-36), int(6)],
            vec![int(5), int(-672), int(210), int(74)],
            vec![int(0), int(-255), int(81), int(24)],
            vec![int(-7), int(255), int(-81), int(-10)],
        ];
        let d = smith_diagonal(m);
        assert_eq!(d, vec![int(1), int(3), int(21)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = vec![vec![int(2), int(4)], vec![int(4), int(2)]];
        let d = smith_diagonal(m);
        assert_eq!(d.len(), 2);
        assert!((&d[1] % &d[0]).is_zero());
    }

    #[test]
    fn simplex_is_acyclic() {
        let h = homology(&standard_simplex(3, 3), 2);
        assert_eq!(h.degree(0).unwrap().betti, 1);
        for k in 1..=2 {
            let d = h.degree(k).unwrap();
            assert_eq!(d.betti, 0);
            assert!(d.torsion.is_empty());
            assert!(d.reliable);
        }
    }

    #[test]
    fn boundary_spheres() {
        for n in 2..=4usize {
            let b = boundary(n, n);
            let h = homology(&b, n - 1);
            assert_eq!(h.degree(0).unwrap().betti, 1);
            for k in 1..n - 1 {
                assert_eq!(h.degree(k).unwrap().betti, 0);
                assert!(h.degree(k).unwrap().torsion.is_empty());
            }
            let top = h.degree(n - 1).unwrap();
            assert_eq!(top.betti, 1);
            assert!(top.torsion.is_empty());
            assert!(top.reliable);
        }
    }

    #[test]
    fn classifying_space_of_z3_has_torsion() {
        let c = FiniteCategory::from_group(&FiniteGroup::cyclic(3));
        let n = nerve(&c, 4);
        let h = homology(&n, 3);
        assert_eq!(h.degree(0).unwrap().betti, 1);
        let d1 = h.degree(1).unwrap();
        assert_eq!(d1.betti, 0);
        assert_eq!(d1.torsion, vec![3]);
        let d2 = h.degree(2).unwrap();
        assert_eq!(d2.betti, 0);
        assert!(d2.torsion.is_empty());
    }

    #[test]
    fn unnormalized_oracle_agrees() {
        let objs = vec![
            standard_simplex(2, 3),
            boundary(2, 3),
            nerve(&FiniteCategory::from_group(&FiniteGroup::cyclic(2)), 3),
        ];
        for x in objs {
            let a = homology(&x, x.trunc - 1);
            let b = homology_unnormalized(&x, x.trunc - 1);
            assert!(a.agrees_with(&b), "normalized vs full complex disagree");
        }
    }

    #[test]
    fn pi0_counts() {
        assert_eq!(pi0(&standard_simplex(2, 2)).count, 1);
        assert_eq!(pi0(&boundary(1, 1)).count, 2);
        let x0 = crate::sset::build::disc(4, 0);
        let p = pi0(&x0);
        assert_eq!(p.count, 4);
        assert!(!p.exact);
    }
}
