//! Exhaustive enumeration of simplicial maps by backtracking over
//! nondegenerate simplices, and isomorphism search on top of it.

use crate::error::{Error, Result};
use crate::sset::{EzData, SSetMap, TruncSSet};

struct Search<'a> {
    x: &'a TruncSSet,
    y: &'a TruncSSet,
    ez: EzData,
    gens: Vec<(usize, usize)>,
    assigned: Vec<Vec<Option<usize>>>,
    budget: u64,
    spent: u64,
    iso_mode: bool,
    used: Vec<Vec<bool>>,
    y_nondeg: Vec<Vec<bool>>,
    found: Vec<SSetMap>,
    stop_at_first: bool,
}

impl<'a> Search<'a> {
    fn new(x: &'a TruncSSet, y: &'a TruncSSet, budget: u64, iso_mode: bool) -> Self {
        let ez = EzData::new(x);
        let gens = ez.generators();
        let ez_y = EzData::new(y);
        Search {
            x,
            y,
            ez,
            gens,
            assigned: x.levels.iter().map(|&s| vec![None; s]).collect(),
            budget,
            spent: 0,
            iso_mode,
            used: y.levels.iter().map(|&s| vec![false; s]).collect(),
            y_nondeg: ez_y.nondeg,
            found: Vec::new(),
            stop_at_first: iso_mode,
        }
    }

    /// Image of an arbitrary simplex of X, via its core and degeneracy word.
    fn image_of(&self, n: usize, x: usize) -> usize {
        let (cl, cz) = self.ez.core[n][x];
        let base = self.assigned[cl][cz].expect("core assigned before use");
        let word = &self.ez.word[n][x];
        let mut cur = base;
        let mut lvl = cl;
        for &i in word.iter().rev() {
            cur = self.y.degen(lvl, i, cur);
            lvl += 1;
        }
        cur
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        if self.stop_at_first && !self.found.is_empty() {
            return Ok(());
        }
        if depth == self.gens.len() {
            let comps: Vec<Vec<usize>> = (0..=self.x.trunc)
                .map(|n| (0..self.x.levels[n]).map(|x| self.image_of(n, x)).collect())
                .collect();
            let map = SSetMap {
                src: self.x.clone(),
                dst: self.y.clone(),
                comps,
            };
            debug_assert!(map.validate().is_ok());
            if !self.iso_mode || map.is_levelwise_bijective() {
                self.found.push(map);
            }
            return Ok(());
        }
        let (n, gx) = self.gens[depth];
        for cand in 0..self.y.levels[n] {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BudgetExceeded {
                    spent: self.spent,
                    budget: self.budget,
                });
            }
            if self.iso_mode && (!self.y_nondeg[n][cand] || self.used[n][cand]) {
                continue;
            }
            let mut ok = true;
            for i in 0..=n {
                if n == 0 {
                    break;
                }
                let fx = self.x.face(n, i, gx);
                if self.y.face(n, i, cand) != self.image_of(n - 1, fx) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.assigned[n][gx] = Some(cand);
            if self.iso_mode {
                self.used[n][cand] = true;
            }
            self.run(depth + 1)?;
            self.assigned[n][gx] = None;
            if self.iso_mode {
                self.used[n][cand] = false;
            }
        }
        Ok(())
    }
}

/// All simplicial maps X -> Y, exhaustively. The budget bounds the number of
/// candidate checks during the search.
pub fn hom_set(x: &TruncSSet, y: &TruncSSet, budget: u64) -> Result<Vec<SSetMap>> {
    let mut s = Search::new(x, y, budget, false);
    s.run(0)?;
    Ok(s.found)
}

/// Number of simplicial maps X -> Y.
pub fn hom_count(x: &TruncSSet, y: &TruncSSet, budget: u64) -> Result<usize> {
    Ok(hom_set(x, y, budget)?.len())
}

/// A structure-preserving levelwise bijection, when one exists. Absence is
/// definitive at the stored truncation.
pub fn is_isomorphic(x: &TruncSSet, y: &TruncSSet, budget: u64) -> Result<Option<SSetMap>> {
    if x.levels != y.levels {
        return Ok(None);
    }
    let ez_x = EzData::new(x);
    let ez_y = EzData::new(y);
    for n in 0..=x.trunc {
        if ez_x.nondeg_count(n) != ez_y.nondeg_count(n) {
            return Ok(None);
        }
    }
    let mut s = Search::new(x, y, budget, true);
    s.run(0)?;
    Ok(s.found.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{boundary, disc, nerve, point, standard_simplex};
    use crate::cat::FiniteCategory;

    const B: u64 = 10_000_000;

    #[test]
    fn yoneda_for_small_objects() {
        let objs = vec![
            standard_simplex(2, 3),
            boundary(2, 3),
            nerve(&FiniteCategory::indiscrete(2), 3),
        ];
        for x in &objs {
            for n in 0..=3usize {
                let dn = standard_simplex(n, 3);
                assert_eq!(hom_count(&dn, x, B).unwrap(), x.size(n));
            }
        }
    }

    #[test]
    fn hom_from_point_is_vertices() {
        let x = boundary(2, 2);
        assert_eq!(hom_count(&point(2), &x, B).unwrap(), 3);
    }

    #[test]
    fn hom_into_nerve_of_arrow() {
        // |hom(Delta[1], nerve[1])| = |nerve[1]_1| = 3
        let n1 = nerve(&FiniteCategory::linear(1), 2);
        let d1 = standard_simplex(1, 2);
        assert_eq!(hom_count(&d1, &n1, B).unwrap(), 3);
    }

    #[test]
    fn empty_source_has_one_map() {
        let e = crate::sset::build::empty(2);
        let x = standard_simplex(1, 2);
        assert_eq!(hom_count(&e, &x, B).unwrap(), 1);
        assert_eq!(hom_count(&x, &e, B).unwrap(), 0);
    }

    #[test]
    fn iso_finds_identity_and_rejects_different() {
        let x = standard_simplex(1, 2);
        assert!(is_isomorphic(&x, &x, B).unwrap().is_some());
        let b = boundary(1, 2);
        assert!(is_isomorphic(&x, &b, B).unwrap().is_none());
        let d2 = disc(2, 2);
        let iso = is_isomorphic(&b, &d2, B).unwrap();
        assert!(iso.is_some());
        iso.unwrap().validate().unwrap();
    }

    #[test]
    fn budget_is_enforced() {
        let x = standard_simplex(2, 2);
        match hom_set(&x, &x, 3) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {:?}", other.map(|v| v.len())),
        }
    }
}
