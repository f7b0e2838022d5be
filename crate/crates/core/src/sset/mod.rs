//! Finite N-truncated simplicial sets with total face/degeneracy tables.
//!
//! All simplices up to the truncation level are stored explicitly, so
//! levelwise (co)limits are plain set operations and the normalized chain
//! complex is derived on demand through Eilenberg-Zilber decompositions.

pub mod build;
pub mod hom;
pub mod homology;
pub mod limits;
pub mod quasicat;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use build::{boundary, disc, empty, horn, nerve, nerve_e, point, standard_simplex};

/// An N-truncated simplicial set. `faces[n][i][x]` is d_i on level n (n >= 1),
/// `degens[n][i][x]` is s_i from level n into level n+1 (n < trunc).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncSSet {
    pub trunc: usize,
    pub levels: Vec<usize>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degens: Vec<Vec<Vec<usize>>>,
}

impl TruncSSet {
    pub fn size(&self, n: usize) -> usize {
        self.levels[n]
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }

    pub fn total_cells(&self) -> usize {
        self.levels.iter().sum()
    }

    /// An empty scaffold with given level sizes and all-zero tables; the
    /// caller fills tables before validation.
    pub fn scaffold(trunc: usize, levels: Vec<usize>) -> Self {
        assert_eq!(levels.len(), trunc + 1);
        let faces = (0..=trunc)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    vec![vec![0usize; levels[n]]; n + 1]
                }
            })
            .collect();
        let degens = (0..=trunc)
            .map(|n| {
                if n == trunc {
                    Vec::new()
                } else {
                    vec![vec![0usize; levels[n]]; n + 1]
                }
            })
            .collect();
        TruncSSet {
            trunc,
            levels,
            faces,
            degens,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n_levels = self.trunc + 1;
        if self.levels.len() != n_levels || self.faces.len() != n_levels || self.degens.len() != n_levels
        {
            return Err(Error::invalid("table lengths do not match truncation"));
        }
        for n in 0..=self.trunc {
            let expected_faces = if n == 0 { 0 } else { n + 1 };
            if self.faces[n].len() != expected_faces {
                return Err(Error::invalid(format!("face family count at level {n}")));
            }
            for (i, t) in self.faces[n].iter().enumerate() {
                if t.len() != self.levels[n] {
                    return Err(Error::invalid(format!("face table length d_{i} at level {n}")));
                }
                if t.iter().any(|&y| y >= self.levels[n - 1]) {
                    return Err(Error::invalid(format!("face d_{i} out of range at level {n}")));
                }
            }
            let expected_degens = if n == self.trunc { 0 } else { n + 1 };
            if self.degens[n].len() != expected_degens {
                return Err(Error::invalid(format!("degeneracy family count at level {n}")));
            }
            for (i, t) in self.degens[n].iter().enumerate() {
                if t.len() != self.levels[n] {
                    return Err(Error::invalid(format!("degeneracy table length s_{i} at level {n}")));
                }
                if t.iter().any(|&y| y >= self.levels[n + 1]) {
                    return Err(Error::invalid(format!("degeneracy s_{i} out of range at level {n}")));
                }
                let mut seen = vec![false; self.levels[n + 1]];
                for &y in t {
                    if seen[y] {
                        return Err(Error::invalid(format!("degeneracy s_{i} not injective at level {n}")));
                    }
                    seen[y] = true;
                }
            }
        }
        // d_i d_j = d_{j-1} d_i for i < j
        for n in 2..=self.trunc {
            for x in 0..self.levels[n] {
                for j in 1..=n {
                    for i in 0..j {
                        let a = self.face(n - 1, i, self.face(n, j, x));
                        let b = self.face(n - 1, j - 1, self.face(n, i, x));
                        if a != b {
                            return Err(Error::invalid(format!(
                                "face identity d_{i} d_{j} at level {n}"
                            )));
                        }
                    }
                }
            }
        }
        // face/degeneracy relations
        for n in 0..self.trunc {
            for x in 0..self.levels[n] {
                for j in 0..=n {
                    let sx = self.degen(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, i, sx);
                        let rhs = if i < j {
                            self.degen(n - 1, j - 1, self.face(n, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degen(n - 1, j, self.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            return Err(Error::invalid(format!(
                                "mixed identity d_{i} s_{j} at level {n}"
                            )));
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i <= j
        for n in 0..self.trunc {
            if n + 2 > self.trunc {
                break;
            }
            for x in 0..self.levels[n] {
                for j in 0..=n {
                    for i in 0..=j {
                        let a = self.degen(n + 1, i, self.degen(n, j, x));
                        let b = self.degen(n + 1, j + 1, self.degen(n, i, x));
                        if a != b {
                            return Err(Error::invalid(format!(
                                "degeneracy identity s_{i} s_{j} at level {n}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True when all degeneracies are bijective, i.e. the object is a
    /// discrete simplicial set.
    pub fn is_discrete(&self) -> bool {
        (0..self.trunc).all(|n| self.levels[n] == self.levels[n + 1])
    }

    /// Applies a monotone map `word: [m] -> [n]` as a simplicial operator
    /// level n -> level m (faces for skipped values, degeneracies for
    /// repeats). Both levels must be within the truncation.
    pub fn apply_operator(&self, word: &[usize], n: usize, x: usize) -> usize {
        debug_assert!(word.windows(2).all(|w| w[0] <= w[1]));
        if let Some(p) = word.windows(2).position(|w| w[0] == w[1]) {
            // word = word' o sigma^p, so X(word) = s_p o X(word')
            let mut shorter = word.to_vec();
            shorter.remove(p);
            let y = self.apply_operator(&shorter, n, x);
            self.degen(shorter.len() - 1, p, y)
        } else {
            // injective: drop missing values from the top down
            let mut cur = x;
            let mut cur_level = n;
            for v in (0..=n).rev() {
                if !word.contains(&v) {
                    cur = self.face(cur_level, v, cur);
                    cur_level -= 1;
                }
            }
            cur
        }
    }
}

/// A map of truncated simplicial sets; stores both endpoints for validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetMap {
    pub src: TruncSSet,
    pub dst: TruncSSet,
    pub comps: Vec<Vec<usize>>,
}

impl SSetMap {
    pub fn identity(x: &TruncSSet) -> Self {
        let comps = x.levels.iter().map(|&s| (0..s).collect()).collect();
        SSetMap {
            src: x.clone(),
            dst: x.clone(),
            comps,
        }
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.comps[n][x]
    }

    pub fn validate(&self) -> Result<()> {
        if self.src.trunc != self.dst.trunc {
            return Err(Error::TruncMismatch(self.src.trunc, self.dst.trunc));
        }
        if self.comps.len() != self.src.trunc + 1 {
            return Err(Error::invalid("component count"));
        }
        for n in 0..=self.src.trunc {
            if self.comps[n].len() != self.src.levels[n] {
                return Err(Error::invalid(format!("component length at level {n}")));
            }
            if self.comps[n].iter().any(|&y| y >= self.dst.levels[n]) {
                return Err(Error::invalid(format!("component out of range at level {n}")));
            }
        }
        for n in 1..=self.src.trunc {
            for x in 0..self.src.levels[n] {
                for i in 0..=n {
                    if self.comps[n - 1][self.src.face(n, i, x)]
                        != self.dst.face(n, i, self.comps[n][x])
                    {
                        return Err(Error::invalid(format!("map does not commute with d_{i} at level {n}")));
                    }
                }
            }
        }
        for n in 0..self.src.trunc {
            for x in 0..self.src.levels[n] {
                for i in 0..=n {
                    if self.comps[n + 1][self.src.degen(n, i, x)]
                        != self.dst.degen(n, i, self.comps[n][x])
                    {
                        return Err(Error::invalid(format!("map does not commute with s_{i} at level {n}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn compose(&self, inner: &SSetMap) -> Result<SSetMap> {
        if inner.dst != self.src {
            return Err(Error::invalid("composition endpoint mismatch"));
        }
        let comps = inner
            .comps
            .iter()
            .enumerate()
            .map(|(n, t)| t.iter().map(|&x| self.comps[n][x]).collect())
            .collect();
        Ok(SSetMap {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            comps,
        })
    }

    pub fn is_levelwise_bijective(&self) -> bool {
        for n in 0..=self.src.trunc {
            if self.src.levels[n] != self.dst.levels[n] {
                return false;
            }
            let mut seen = vec![false; self.dst.levels[n]];
            for &y in &self.comps[n] {
                if seen[y] {
                    return false;
                }
                seen[y] = true;
            }
        }
        true
    }

    pub fn is_levelwise_injective(&self) -> bool {
        for n in 0..=self.src.trunc {
            let mut seen = vec![false; self.dst.levels[n]];
            for &y in &self.comps[n] {
                if seen[y] {
                    return false;
                }
                seen[y] = true;
            }
        }
        true
    }
}

/// Eilenberg-Zilber data: for every simplex, its nondegenerate core and the
/// degeneracy word mapping the core onto it (outermost operator first).
#[derive(Debug, Clone)]
pub struct EzData {
    /// nondeg[n][x]
    pub nondeg: Vec<Vec<bool>>,
    /// core[n][x] = (core level, core index)
    pub core: Vec<Vec<(usize, usize)>>,
    /// word[n][x] = degeneracy indices; apply right-to-left to the core
    pub word: Vec<Vec<Vec<usize>>>,
}

impl EzData {
    pub fn new(x: &TruncSSet) -> Self {
        let mut nondeg: Vec<Vec<bool>> = x.levels.iter().map(|&s| vec![true; s]).collect();
        // preimage under each degeneracy
        let mut pre: Vec<Vec<Option<(usize, usize)>>> =
            x.levels.iter().map(|&s| vec![None; s]).collect();
        for n in 0..x.trunc {
            for i in (0..=n).rev() {
                for z in 0..x.levels[n] {
                    let y = x.degen(n, i, z);
                    nondeg[n + 1][y] = false;
                    // prefer the smallest degeneracy index
                    pre[n + 1][y] = Some((i, z));
                }
            }
        }
        let mut core: Vec<Vec<(usize, usize)>> = x
            .levels
            .iter()
            .enumerate()
            .map(|(n, &s)| (0..s).map(|i| (n, i)).collect())
            .collect();
        let mut word: Vec<Vec<Vec<usize>>> =
            x.levels.iter().map(|&s| vec![Vec::new(); s]).collect();
        for n in 1..=x.trunc {
            for y in 0..x.levels[n] {
                if let Some((i, z)) = pre[n][y] {
                    let mut w = vec![i];
                    w.extend(word[n - 1][z].iter().copied());
                    word[n][y] = w;
                    core[n][y] = core[n - 1][z];
                }
            }
        }
        EzData { nondeg, core, word }
    }

    /// All nondegenerate simplices as (level, index), level-major order.
    pub fn generators(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (n, flags) in self.nondeg.iter().enumerate() {
            for (x, &nd) in flags.iter().enumerate() {
                if nd {
                    out.push((n, x));
                }
            }
        }
        out
    }

    pub fn nondeg_count(&self, n: usize) -> usize {
        self.nondeg[n].iter().filter(|&&b| b).count()
    }
}

/// Extracts the subobject on the given kept simplices; fails when the subset
/// is not closed under faces and degeneracies. Returns the subobject and its
/// inclusion.
pub fn subcomplex(x: &TruncSSet, keep: &[Vec<bool>]) -> Result<(TruncSSet, SSetMap)> {
    if keep.len() != x.trunc + 1 {
        return Err(Error::invalid("keep flags length"));
    }
    let mut new_index: Vec<Vec<Option<usize>>> = Vec::with_capacity(x.trunc + 1);
    let mut old_index: Vec<Vec<usize>> = Vec::with_capacity(x.trunc + 1);
    for n in 0..=x.trunc {
        if keep[n].len() != x.levels[n] {
            return Err(Error::invalid("keep flags level length"));
        }
        let mut ni = vec![None; x.levels[n]];
        let mut oi = Vec::new();
        for xx in 0..x.levels[n] {
            if keep[n][xx] {
                ni[xx] = Some(oi.len());
                oi.push(xx);
            }
        }
        new_index.push(ni);
        old_index.push(oi);
    }
    let levels: Vec<usize> = old_index.iter().map(|v| v.len()).collect();
    let mut sub = TruncSSet::scaffold(x.trunc, levels);
    for n in 1..=x.trunc {
        for (nx, &ox) in old_index[n].iter().enumerate() {
            for i in 0..=n {
                let fy = x.face(n, i, ox);
                let target = new_index[n - 1][fy]
                    .ok_or_else(|| Error::invalid("subset not closed under faces"))?;
                sub.faces[n][i][nx] = target;
            }
        }
    }
    for n in 0..x.trunc {
        for (nx, &ox) in old_index[n].iter().enumerate() {
            for i in 0..=n {
                let sy = x.degen(n, i, ox);
                let target = new_index[n + 1][sy]
                    .ok_or_else(|| Error::invalid("subset not closed under degeneracies"))?;
                sub.degens[n][i][nx] = target;
            }
        }
    }
    let comps: Vec<Vec<usize>> = old_index.clone();
    let incl = SSetMap {
        src: sub.clone(),
        dst: x.clone(),
        comps,
    };
    Ok((sub, incl))
}

/// The k-skeleton: simplices whose nondegenerate core sits at level <= k.
pub fn skeleton(x: &TruncSSet, k: usize) -> (TruncSSet, SSetMap) {
    let ez = EzData::new(x);
    let keep: Vec<Vec<bool>> = (0..=x.trunc)
        .map(|n| (0..x.levels[n]).map(|i| ez.core[n][i].0 <= k).collect())
        .collect();
    subcomplex(x, &keep).expect("skeleton is closed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplices_validate() {
        for n in 0..=3 {
            for trunc in 0..=4 {
                let x = standard_simplex(n, trunc);
                x.validate().unwrap();
            }
        }
        assert_eq!(standard_simplex(1, 2).levels, vec![2, 3, 4]);
        assert_eq!(standard_simplex(2, 2).size(1), 6);
    }

    #[test]
    fn delta0_is_terminal_shape() {
        let x = standard_simplex(0, 3);
        assert_eq!(x.levels, vec![1, 1, 1, 1]);
    }

    #[test]
    fn ez_cores_of_delta1() {
        let x = standard_simplex(1, 3);
        let ez = EzData::new(&x);
        assert_eq!(ez.nondeg_count(0), 2);
        assert_eq!(ez.nondeg_count(1), 1);
        assert_eq!(ez.nondeg_count(2), 0);
        assert_eq!(ez.nondeg_count(3), 0);
    }

    #[test]
    fn boundary_and_horn_shapes() {
        let b1 = boundary(1, 2);
        b1.validate().unwrap();
        assert_eq!(b1.levels, vec![2, 2, 2]);
        let b2 = boundary(2, 3);
        b2.validate().unwrap();
        let ez = EzData::new(&b2);
        assert_eq!(ez.nondeg_count(0), 3);
        assert_eq!(ez.nondeg_count(1), 3);
        assert_eq!(ez.nondeg_count(2), 0);
        let h = horn(2, 1, 3);
        h.validate().unwrap();
        let ez = EzData::new(&h);
        assert_eq!(ez.nondeg_count(0), 3);
        assert_eq!(ez.nondeg_count(1), 2);
    }

    #[test]
    fn skeleton_of_simplex() {
        let x = standard_simplex(2, 3);
        let (sk0, incl) = skeleton(&x, 0);
        sk0.validate().unwrap();
        incl.validate().unwrap();
        assert_eq!(sk0.size(0), 3);
        assert!(sk0.is_discrete());
    }

    #[test]
    fn subcomplex_rejects_unclosed() {
        let x = standard_simplex(1, 1);
        // keep the edge but drop a vertex
        let keep = vec![vec![true, false], vec![false, true, false]];
        assert!(subcomplex(&x, &keep).is_err());
    }
}
