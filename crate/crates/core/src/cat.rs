//! Finite categories: explicit object/morphism lists with a composition
//! table. These feed the nerve, and come back out of component and homotopy
//! category constructions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroup::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCategory {
    pub objects: usize,
    pub mor_src: Vec<usize>,
    pub mor_dst: Vec<usize>,
    /// comp[g][f] = Some(g o f) exactly when src(g) = dst(f).
    pub comp: Vec<Vec<Option<usize>>>,
    /// identity morphism per object
    pub ids: Vec<usize>,
}

impl FiniteCategory {
    pub fn morphisms(&self) -> usize {
        self.mor_src.len()
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g][f]
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms())
            .filter(|&m| self.mor_src[m] == x && self.mor_dst[m] == y)
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.morphisms();
        if self.ids.len() != self.objects {
            return Err(Error::invalid("identity list length"));
        }
        for x in 0..self.objects {
            let i = self.ids[x];
            if i >= n || self.mor_src[i] != x || self.mor_dst[i] != x {
                return Err(Error::invalid("identity endpoints"));
            }
        }
        if self.comp.len() != n || self.comp.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("composition table shape"));
        }
        for g in 0..n {
            for f in 0..n {
                match self.comp[g][f] {
                    Some(gf) => {
                        if self.mor_src[g] != self.mor_dst[f] {
                            return Err(Error::invalid("composite of non-composable pair"));
                        }
                        if self.mor_src[gf] != self.mor_src[f] || self.mor_dst[gf] != self.mor_dst[g] {
                            return Err(Error::invalid("composite endpoints"));
                        }
                    }
                    None => {
                        if self.mor_src[g] == self.mor_dst[f] {
                            return Err(Error::invalid("missing composite"));
                        }
                    }
                }
            }
        }
        for f in 0..n {
            let lid = self.ids[self.mor_dst[f]];
            let rid = self.ids[self.mor_src[f]];
            if self.comp[lid][f] != Some(f) || self.comp[f][rid] != Some(f) {
                return Err(Error::invalid("identity law"));
            }
        }
        for h in 0..n {
            for g in 0..n {
                if let Some(hg) = self.comp[h][g] {
                    for f in 0..n {
                        if let Some(gf) = self.comp[g][f] {
                            if self.comp[hg][f] != self.comp[h][gf] {
                                return Err(Error::invalid("associativity"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds the composition table from a closure that names composites.
    pub fn from_parts(
        objects: usize,
        mor_src: Vec<usize>,
        mor_dst: Vec<usize>,
        ids: Vec<usize>,
        composer: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = mor_src.len();
        let mut comp = vec![vec![None; n]; n];
        for g in 0..n {
            for f in 0..n {
                if mor_src[g] == mor_dst[f] {
                    comp[g][f] = Some(composer(g, f));
                }
            }
        }
        let cat = FiniteCategory {
            objects,
            mor_src,
            mor_dst,
            comp,
            ids,
        };
        cat.validate()?;
        Ok(cat)
    }

    /// The poset category of a reflexive transitive relation `leq[x][y]`.
    pub fn poset(leq: &[Vec<bool>]) -> Result<Self> {
        let objects = leq.len();
        let mut mor_src = Vec::new();
        let mut mor_dst = Vec::new();
        let mut index = vec![vec![None; objects]; objects];
        for x in 0..objects {
            for y in 0..objects {
                if leq[x][y] {
                    index[x][y] = Some(mor_src.len());
                    mor_src.push(x);
                    mor_dst.push(y);
                }
            }
        }
        let ids = (0..objects)
            .map(|x| index[x][x].ok_or_else(|| Error::invalid("relation not reflexive")))
            .collect::<Result<Vec<_>>>()?;
        let src = mor_src.clone();
        let dst = mor_dst.clone();
        FiniteCategory::from_parts(objects, mor_src, mor_dst, ids, |g, f| {
            index[src[f]][dst[g]].expect("relation must be transitive")
        })
    }

    /// The linear order [n] = (0 -> 1 -> ... -> n).
    pub fn linear(n: usize) -> Self {
        let leq: Vec<Vec<bool>> = (0..=n).map(|x| (0..=n).map(|y| x <= y).collect()).collect();
        FiniteCategory::poset(&leq).expect("linear order is a poset")
    }

    /// The indiscrete category: exactly one morphism between any ordered pair.
    pub fn indiscrete(objects: usize) -> Self {
        let mut mor_src = Vec::new();
        let mut mor_dst = Vec::new();
        let mut index = vec![vec![0usize; objects]; objects];
        for x in 0..objects {
            for y in 0..objects {
                index[x][y] = mor_src.len();
                mor_src.push(x);
                mor_dst.push(y);
            }
        }
        let ids = (0..objects).map(|x| index[x][x]).collect();
        let src = mor_src.clone();
        let dst = mor_dst.clone();
        FiniteCategory::from_parts(objects, mor_src, mor_dst, ids, |g, f| index[src[f]][dst[g]])
            .expect("indiscrete category is a category")
    }

    /// Discrete category on a set of objects.
    pub fn discrete(objects: usize) -> Self {
        let mor_src: Vec<usize> = (0..objects).collect();
        let mor_dst = mor_src.clone();
        let ids = mor_src.clone();
        FiniteCategory::from_parts(objects, mor_src, mor_dst, ids, |g, _f| g)
            .expect("discrete category is a category")
    }

    /// One-object category of a finite group.
    pub fn from_group(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mor_src = vec![0usize; n];
        let mor_dst = vec![0usize; n];
        let ids = vec![group.id];
        FiniteCategory::from_parts(1, mor_src, mor_dst, ids, |g, f| group.mul(g, f))
            .expect("group is a category")
    }

    /// Disjoint union of two categories.
    pub fn coproduct(&self, other: &Self) -> Self {
        let objects = self.objects + other.objects;
        let off_m = self.morphisms();
        let mut mor_src = self.mor_src.clone();
        let mut mor_dst = self.mor_dst.clone();
        mor_src.extend(other.mor_src.iter().map(|&x| x + self.objects));
        mor_dst.extend(other.mor_dst.iter().map(|&x| x + self.objects));
        let mut ids = self.ids.clone();
        ids.extend(other.ids.iter().map(|&i| i + off_m));
        let n = mor_src.len();
        let mut comp = vec![vec![None; n]; n];
        for g in 0..n {
            for f in 0..n {
                if mor_src[g] == mor_dst[f] {
                    let c = if g < off_m {
                        self.comp[g][f].expect("composable in left part")
                    } else {
                        other.comp[g - off_m][f - off_m].expect("composable in right part") + off_m
                    };
                    comp[g][f] = Some(c);
                }
            }
        }
        FiniteCategory {
            objects,
            mor_src,
            mor_dst,
            comp,
            ids,
        }
    }

    /// Free category on a finite acyclic graph (objects, edges). Finite
    /// because the graph has no directed cycles.
    pub fn free_on_dag(objects: usize, edges: &[(usize, usize)]) -> Result<Self> {
        // enumerate all paths (sequences of edges); identity = empty path
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
        struct Path {
            src: usize,
            dst: usize,
            edges: Vec<usize>,
        }
        let mut paths: Vec<Path> = (0..objects)
            .map(|x| Path {
                src: x,
                dst: x,
                edges: vec![],
            })
            .collect();
        let mut frontier = paths.clone();
        let mut guard = 0usize;
        while !frontier.is_empty() {
            guard += 1;
            if guard > 10_000 {
                return Err(Error::invalid("graph has a directed cycle"));
            }
            let mut next = Vec::new();
            for p in &frontier {
                for (ei, &(a, b)) in edges.iter().enumerate() {
                    if a == p.dst {
                        let mut e2 = p.edges.clone();
                        e2.push(ei);
                        if e2.len() > objects + edges.len() {
                            return Err(Error::invalid("graph has a directed cycle"));
                        }
                        next.push(Path {
                            src: p.src,
                            dst: b,
                            edges: e2,
                        });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        paths.sort();
        let mor_src: Vec<usize> = paths.iter().map(|p| p.src).collect();
        let mor_dst: Vec<usize> = paths.iter().map(|p| p.dst).collect();
        let ids: Vec<usize> = (0..objects)
            .map(|x| {
                paths
                    .binary_search(&Path {
                        src: x,
                        dst: x,
                        edges: vec![],
                    })
                    .unwrap()
            })
            .collect();
        let lookup = paths.clone();
        FiniteCategory::from_parts(objects, mor_src, mor_dst, ids, move |g, f| {
            let mut e = lookup[f].edges.clone();
            e.extend(lookup[g].edges.iter().copied());
            let target = Path {
                src: lookup[f].src,
                dst: lookup[g].dst,
                edges: e,
            };
            lookup.binary_search(&target).expect("path closure")
        })
    }

    /// Exact equivalence check between finite categories: essential
    /// surjectivity plus full faithfulness of the given object/morphism maps.
    pub fn is_iso_pair(&self, f: usize, g: usize) -> bool {
        self.comp[g][f] == Some(self.ids[self.mor_src[f]])
            && self.comp[f][g] == Some(self.ids[self.mor_src[g]])
    }

    pub fn isomorphic_objects(&self, x: usize, y: usize) -> bool {
        self.hom(x, y)
            .into_iter()
            .any(|f| self.hom(y, x).into_iter().any(|g| self.is_iso_pair(f, g)))
    }
}

/// A functor between finite categories, stored as object and morphism tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub ob: Vec<usize>,
    pub mor: Vec<usize>,
}

impl CatFunctor {
    pub fn validate(&self, src: &FiniteCategory, dst: &FiniteCategory) -> Result<()> {
        if self.ob.len() != src.objects || self.mor.len() != src.morphisms() {
            return Err(Error::invalid("functor table lengths"));
        }
        for m in 0..src.morphisms() {
            if dst.mor_src[self.mor[m]] != self.ob[src.mor_src[m]]
                || dst.mor_dst[self.mor[m]] != self.ob[src.mor_dst[m]]
            {
                return Err(Error::invalid("functor endpoint compatibility"));
            }
        }
        for x in 0..src.objects {
            if self.mor[src.ids[x]] != dst.ids[self.ob[x]] {
                return Err(Error::invalid("functor does not preserve identities"));
            }
        }
        for g in 0..src.morphisms() {
            for f in 0..src.morphisms() {
                if let Some(gf) = src.comp[g][f] {
                    if dst.comp[self.mor[g]][self.mor[f]] != Some(self.mor[gf]) {
                        return Err(Error::invalid("functor does not preserve composition"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Equivalence-of-categories evidence: fully faithful + essentially surjective.
    pub fn is_equivalence(&self, src: &FiniteCategory, dst: &FiniteCategory) -> (bool, bool) {
        let fully_faithful = (0..src.objects).all(|x| {
            (0..src.objects).all(|y| {
                let hs = src.hom(x, y);
                let images: Vec<usize> = hs.iter().map(|&m| self.mor[m]).collect();
                let mut uniq = images.clone();
                uniq.sort_unstable();
                uniq.dedup();
                uniq.len() == hs.len() && uniq.len() == dst.hom(self.ob[x], self.ob[y]).len()
            })
        });
        let ess_surjective = (0..dst.objects)
            .all(|d| (0..src.objects).any(|x| dst.isomorphic_objects(self.ob[x], d)));
        (fully_faithful, ess_surjective)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_indiscrete_validate() {
        FiniteCategory::linear(0).validate().unwrap();
        FiniteCategory::linear(3).validate().unwrap();
        FiniteCategory::indiscrete(2).validate().unwrap();
        FiniteCategory::discrete(4).validate().unwrap();
        FiniteCategory::from_group(&FiniteGroup::cyclic(3))
            .validate()
            .unwrap();
    }

    #[test]
    fn free_category_on_a_string() {
        // x -> y -> z: 3 identities + 2 edges + 1 composite
        let c = FiniteCategory::free_on_dag(3, &[(0, 1), (1, 2)]).unwrap();
        c.validate().unwrap();
        assert_eq!(c.morphisms(), 6);
        assert_eq!(c.hom(0, 2).len(), 1);
    }

    #[test]
    fn coproduct_of_categories() {
        let c = FiniteCategory::linear(1).coproduct(&FiniteCategory::discrete(1));
        c.validate().unwrap();
        assert_eq!(c.objects, 3);
        assert_eq!(c.morphisms(), 4);
    }

    #[test]
    fn indiscrete_objects_isomorphic() {
        let c = FiniteCategory::indiscrete(2);
        assert!(c.isomorphic_objects(0, 1));
        let p = FiniteCategory::linear(1);
        assert!(!p.isomorphic_objects(0, 1));
    }
}
