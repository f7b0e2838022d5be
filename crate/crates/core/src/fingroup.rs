//! Finite groups given by explicit multiplication tables, their subgroup
//! lattices, coset G-sets, fixed points, and the orbit category.
//!
//! Everything here is exhaustive and exact; intended group orders are <= ~24.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group: elements `0..n`, total multiplication table, identity,
/// inverse table. Element names are kept only for display and serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub elements: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub id: usize,
    #[serde(default, skip_serializing)]
    pub inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Builds a group from a raw table, deriving inverses, and validates it.
    pub fn from_table(elements: Vec<String>, mul: Vec<Vec<usize>>, id: usize) -> Result<Self> {
        let n = elements.len();
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("multiplication table shape"));
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a][b] >= n {
                    return Err(Error::invalid("multiplication table entry out of range"));
                }
                if mul[a][b] == id && mul[b][a] == id {
                    inv[a] = b;
                }
            }
        }
        let g = FiniteGroup {
            elements,
            mul,
            id,
            inv,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if self.id >= n {
            return Err(Error::invalid("identity out of range"));
        }
        for a in 0..n {
            if self.mul[self.id][a] != a || self.mul[a][self.id] != a {
                return Err(Error::invalid("identity law fails"));
            }
            let ia = self.inv[a];
            if ia >= n || self.mul[ia][a] != self.id || self.mul[a][ia] != self.id {
                return Err(Error::invalid("inverse law fails"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::invalid("associativity fails"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Cyclic group Z/n with elements named 0..n-1.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let elements = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let mut g = FiniteGroup {
            elements,
            mul,
            id: 0,
            inv: vec![],
        };
        g.inv = (0..n).map(|a| (n - a) % n).collect();
        g
    }

    /// Symmetric group on `n` letters (n <= 4 at desk scale), elements are
    /// permutations in lexicographic order of their one-line notation.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.binary_search(p).unwrap();
        let m = perms.len();
        let mut mul = vec![vec![0usize; m]; m];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (a*b)(x) = pa(pb(x))
                let comp: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
                mul[a][b] = index(&comp);
            }
        }
        let elements = perms
            .iter()
            .map(|p| {
                p.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        let id = index(&(0..n).collect());
        let mut inv = vec![0usize; m];
        for (a, pa) in perms.iter().enumerate() {
            let mut q = vec![0usize; n];
            for x in 0..n {
                q[pa[x]] = x;
            }
            inv[a] = index(&q);
        }
        FiniteGroup {
            elements,
            mul,
            id,
            inv,
        }
    }

    /// Closure of a subset under multiplication and inverses.
    pub fn closure(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = seed.clone();
        set.insert(self.id);
        loop {
            let mut grew = false;
            let cur: Vec<usize> = set.iter().copied().collect();
            for &a in &cur {
                if set.insert(self.inv(a)) {
                    grew = true;
                }
                for &b in &cur {
                    if set.insert(self.mul(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Every subgroup, exactly once, sorted by order then member list.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let trivial: BTreeSet<usize> = [self.id].into_iter().collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(trivial.iter().copied().collect());
        let mut work: Vec<BTreeSet<usize>> = vec![trivial];
        while let Some(h) = work.pop() {
            for g in 0..self.order() {
                if h.contains(&g) {
                    continue;
                }
                let mut seed = h.clone();
                seed.insert(g);
                let closed = self.closure(&seed);
                let key: Vec<usize> = closed.iter().copied().collect();
                if found.insert(key) {
                    work.push(closed);
                }
            }
        }
        let mut subs: Vec<Subgroup> = found
            .into_iter()
            .map(|members| Subgroup { members })
            .collect();
        subs.sort_by(|a, b| {
            a.members
                .len()
                .cmp(&b.members.len())
                .then(a.members.cmp(&b.members))
        });
        subs
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        let set: BTreeSet<usize> = h.members.iter().copied().collect();
        if set.len() != h.members.len() || !set.contains(&self.id) {
            return false;
        }
        if h.members.iter().any(|&a| a >= self.order()) {
            return false;
        }
        for &a in &h.members {
            if !set.contains(&self.inv(a)) {
                return false;
            }
            for &b in &h.members {
                if !set.contains(&self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![self.id],
        }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = h
            .members
            .iter()
            .map(|&x| self.mul(self.mul(g, x), self.inv(g)))
            .collect();
        members.sort_unstable();
        Subgroup { members }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// A subgroup, stored as its sorted member list. The parent group is passed
/// explicitly wherever it is needed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    pub members: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

/// A finite left G-set with a total action table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSet {
    pub labels: Vec<String>,
    /// act[g][x] = g . x
    pub act: Vec<Vec<usize>>,
}

impl GSet {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g][x]
    }

    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let n = self.size();
        if self.act.len() != group.order() || self.act.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("action table shape"));
        }
        for x in 0..n {
            if self.act(group.id, x) != x {
                return Err(Error::invalid("identity does not act trivially"));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                for x in 0..n {
                    if self.act(g, self.act(h, x)) != self.act(group.mul(g, h), x) {
                        return Err(Error::invalid("action is not associative"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Points fixed by every element of `k`.
    pub fn fixed_points(&self, k: &Subgroup) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| k.members.iter().all(|&g| self.act(g, x) == x))
            .collect()
    }

    pub fn is_transitive(&self, group: &FiniteGroup) -> bool {
        if self.size() == 0 {
            return false;
        }
        let mut seen = vec![false; self.size()];
        seen[0] = true;
        for g in 0..group.order() {
            seen[self.act(g, 0)] = true;
        }
        seen.iter().all(|&b| b)
    }
}

/// The coset G-set G/H, with a chosen minimal representative per coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    pub gset: GSet,
    /// Minimal group element representing each coset.
    pub reps: Vec<usize>,
    /// coset_of[g] = index of the coset gH.
    pub coset_of: Vec<usize>,
}

/// Left cosets gH with the action g' . (gH) = (g'g)H.
pub fn coset_gset(group: &FiniteGroup, h: &Subgroup) -> Result<CosetSpace> {
    if !group.is_subgroup(h) {
        return Err(Error::InvalidSubgroup(format!("{:?}", h.members)));
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        for &x in &h.members {
            coset_of[group.mul(g, x)] = idx;
        }
        reps.push(g);
    }
    let act = (0..n)
        .map(|g| reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect())
        .collect();
    let labels = reps
        .iter()
        .map(|&r| format!("{}H", group.elements[r]))
        .collect();
    Ok(CosetSpace {
        gset: GSet { labels, act },
        reps,
        coset_of,
    })
}

/// The orbit category: one object G/H per subgroup H, hom-sets all
/// G-equivariant maps stored extensionally as point tables.
#[derive(Debug, Clone)]
pub struct OrbitCategory {
    pub group: FiniteGroup,
    pub objects: Vec<Subgroup>,
    pub cosets: Vec<CosetSpace>,
    /// homs[h][k] = equivariant maps G/H -> G/K as point tables, sorted.
    pub homs: Vec<Vec<Vec<Vec<usize>>>>,
}

impl OrbitCategory {
    /// Index of a hom table inside homs[h][k].
    pub fn hom_index(&self, h: usize, k: usize, table: &[usize]) -> Option<usize> {
        self.homs[h][k]
            .binary_search_by(|probe| probe.as_slice().cmp(table))
            .ok()
    }

    /// Compose f: G/H -> G/K with g: G/K -> G/L, returning the index in homs[h][l].
    pub fn compose(&self, h: usize, k: usize, l: usize, f: usize, g: usize) -> usize {
        let ft = &self.homs[h][k][f];
        let gt = &self.homs[k][l][g];
        let comp: Vec<usize> = ft.iter().map(|&p| gt[p]).collect();
        self.hom_index(h, l, &comp)
            .expect("composite of equivariant maps is equivariant")
    }

    pub fn identity(&self, h: usize) -> usize {
        let n = self.cosets[h].gset.size();
        let table: Vec<usize> = (0..n).collect();
        self.hom_index(h, h, &table).expect("identity map present")
    }

    pub fn object_index(&self, h: &Subgroup) -> Option<usize> {
        self.objects.iter().position(|s| s == h)
    }

    pub fn validate(&self) -> Result<()> {
        for (h, hs) in self.homs.iter().enumerate() {
            for (k, maps) in hs.iter().enumerate() {
                for table in maps {
                    if !is_equivariant(&self.group, &self.cosets[h].gset, &self.cosets[k].gset, table)
                    {
                        return Err(Error::invalid("stored orbit map is not equivariant"));
                    }
                }
            }
            let _ = self.identity(h);
        }
        // associativity on all composable triples
        for h in 0..self.objects.len() {
            for k in 0..self.objects.len() {
                for l in 0..self.objects.len() {
                    for m in 0..self.objects.len() {
                        for f in 0..self.homs[h][k].len() {
                            for g in 0..self.homs[k][l].len() {
                                for e in 0..self.homs[l][m].len() {
                                    let gf = self.compose(h, k, l, f, g);
                                    let left = self.compose(h, l, m, gf, e);
                                    let eg = self.compose(k, l, m, g, e);
                                    let right = self.compose(h, k, m, f, eg);
                                    if left != right {
                                        return Err(Error::invalid("orbit composition not associative"));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn is_equivariant(group: &FiniteGroup, src: &GSet, dst: &GSet, table: &[usize]) -> bool {
    if table.len() != src.size() || table.iter().any(|&y| y >= dst.size()) {
        return false;
    }
    for g in 0..group.order() {
        for x in 0..src.size() {
            if table[src.act(g, x)] != dst.act(g, table[x]) {
                return false;
            }
        }
    }
    true
}

/// Builds the orbit category. Candidate maps G/H -> G/K are produced by
/// exhausting the possible images of the basepoint coset eH (transitivity
/// pins the rest) and each expansion is then verified equivariant.
pub fn orbit_category(group: &FiniteGroup) -> OrbitCategory {
    let objects = group.subgroups();
    let cosets: Vec<CosetSpace> = objects
        .iter()
        .map(|h| coset_gset(group, h).expect("enumerated subgroups are subgroups"))
        .collect();
    let mut homs = Vec::with_capacity(objects.len());
    for ch in &cosets {
        let mut row = Vec::with_capacity(objects.len());
        for ck in &cosets {
            let mut maps: Vec<Vec<usize>> = Vec::new();
            for target in 0..ck.gset.size() {
                // eH must land on an H-fixed coset of G/K; expand by translation
                let g0 = ck.reps[target];
                let table: Vec<usize> = ch
                    .reps
                    .iter()
                    .map(|&r| ck.coset_of[group.mul(r, g0)])
                    .collect();
                if is_equivariant(group, &ch.gset, &ck.gset, &table) && !maps.contains(&table) {
                    maps.push(table);
                }
            }
            maps.sort();
            row.push(maps);
        }
        homs.push(row);
    }
    OrbitCategory {
        group: group.clone(),
        objects,
        cosets,
        homs,
    }
}

/// A family of subgroups, as in the F-model structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupFamily {
    pub members: Vec<Subgroup>,
}

impl SubgroupFamily {
    pub fn all(group: &FiniteGroup) -> Self {
        SubgroupFamily {
            members: group.subgroups(),
        }
    }

    pub fn contains_trivial(&self, group: &FiniteGroup) -> bool {
        self.members.iter().any(|h| h.members == [group.id])
    }

    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        for h in &self.members {
            if !group.is_subgroup(h) {
                return Err(Error::InvalidSubgroup(format!("{:?}", h.members)));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3)
    }

    #[test]
    fn group_tables_validate() {
        FiniteGroup::cyclic(1).validate().unwrap();
        FiniteGroup::cyclic(2).validate().unwrap();
        FiniteGroup::cyclic(4).validate().unwrap();
        s3().validate().unwrap();
        FiniteGroup::symmetric(4).validate().unwrap();
    }

    #[test]
    fn subgroups_of_small_groups() {
        assert_eq!(FiniteGroup::cyclic(1).subgroups().len(), 1);
        assert_eq!(FiniteGroup::cyclic(2).subgroups().len(), 2);
        // S_3: trivial, three of order 2, one of order 3, S_3 itself
        let subs = s3().subgroups();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn subgroups_by_brute_force_closure_test() {
        // oracle: check every subset of Z/4 and compare
        let g = FiniteGroup::cyclic(4);
        let mut oracle = Vec::new();
        for mask in 0u32..16 {
            let members: Vec<usize> = (0..4).filter(|&i| mask & (1 << i) != 0).collect();
            let sub = Subgroup { members };
            if g.is_subgroup(&sub) {
                oracle.push(sub);
            }
        }
        oracle.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then(a.members.cmp(&b.members)));
        assert_eq!(g.subgroups(), oracle);
    }

    #[test]
    fn subgroups_closed_under_conjugation() {
        let g = s3();
        let subs = g.subgroups();
        for h in &subs {
            for a in 0..g.order() {
                let c = g.conjugate_subgroup(h, a);
                assert!(subs.contains(&c));
            }
        }
    }

    #[test]
    fn coset_spaces() {
        let g = s3();
        // H = G: one point
        let full = coset_gset(&g, &g.full_subgroup()).unwrap();
        assert_eq!(full.gset.size(), 1);
        // H = {e}: regular, free
        let reg = coset_gset(&g, &g.trivial_subgroup()).unwrap();
        assert_eq!(reg.gset.size(), 6);
        assert!(reg.gset.is_transitive(&g));
        // H of order 2: three cosets, transitive
        let h = g
            .subgroups()
            .into_iter()
            .find(|s| s.order() == 2)
            .unwrap();
        let cs = coset_gset(&g, &h).unwrap();
        assert_eq!(cs.gset.size(), 3);
        assert!(cs.gset.is_transitive(&g));
        cs.gset.validate(&g).unwrap();
    }

    #[test]
    fn coset_gset_rejects_non_subgroup() {
        let g = s3();
        let bad = Subgroup {
            members: vec![g.id, 1],
        };
        if g.is_subgroup(&bad) {
            // pick genuinely bad subset instead
            let bad2 = Subgroup { members: vec![1] };
            assert!(coset_gset(&g, &bad2).is_err());
        } else {
            assert!(coset_gset(&g, &bad).is_err());
        }
    }

    #[test]
    fn fixed_points_of_cosets() {
        let g = s3();
        let subs = g.subgroups();
        let full = coset_gset(&g, &g.full_subgroup()).unwrap();
        for k in &subs {
            assert_eq!(full.gset.fixed_points(k).len(), 1);
        }
        let reg = coset_gset(&g, &g.trivial_subgroup()).unwrap();
        for k in &subs {
            let expect = if k.order() == 1 { 6 } else { 0 };
            assert_eq!(reg.gset.fixed_points(k).len(), expect);
        }
        // normal subgroup of order 3: both cosets fixed by it
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap();
        let cs = coset_gset(&g, a3).unwrap();
        assert_eq!(cs.gset.fixed_points(a3).len(), 2);
    }

    #[test]
    fn orbit_category_of_z2() {
        let g = FiniteGroup::cyclic(2);
        let oc = orbit_category(&g);
        oc.validate().unwrap();
        assert_eq!(oc.objects.len(), 2);
        // objects sorted: [{e}, Z/2]
        assert_eq!(oc.homs[0][0].len(), 2);
        assert_eq!(oc.homs[0][1].len(), 1);
        assert_eq!(oc.homs[1][0].len(), 0);
        assert_eq!(oc.homs[1][1].len(), 1);
    }

    fn next_tuple(table: &mut [usize], base: usize) -> bool {
        for pos in (0..table.len()).rev() {
            if table[pos] + 1 < base {
                table[pos] += 1;
                for q in pos + 1..table.len() {
                    table[q] = 0;
                }
                return true;
            }
        }
        false
    }

    #[test]
    fn orbit_homs_count_fixed_points_and_match_brute_force() {
        let g = s3();
        let oc = orbit_category(&g);
        oc.validate().unwrap();
        for (h, ch) in oc.cosets.iter().enumerate() {
            for (k, ck) in oc.cosets.iter().enumerate() {
                let fixed = ck.gset.fixed_points(&oc.objects[h]).len();
                assert_eq!(oc.homs[h][k].len(), fixed);
                // brute force over large spaces is skipped; 6^6 is the worst case here
                let src = ch.gset.size();
                let dst = ck.gset.size();
                if dst.pow(src as u32) > 50_000 {
                    continue;
                }
                let mut count = 0usize;
                let mut table = vec![0usize; src];
                loop {
                    if is_equivariant(&g, &ch.gset, &ck.gset, &table) {
                        count += 1;
                        assert!(oc.hom_index(h, k, &table).is_some());
                    }
                    if !next_tuple(&mut table, dst) {
                        break;
                    }
                }
                assert_eq!(count, oc.homs[h][k].len());
            }
        }
    }

    #[test]
    fn regular_orbit_self_maps_count_group_order() {
        let g = s3();
        let oc = orbit_category(&g);
        assert_eq!(oc.homs[0][0].len(), 6);
        // G/G: maps only to itself
        let top = oc.objects.len() - 1;
        for k in 0..oc.objects.len() {
            let expect = if k == top { 1 } else { 0 };
            assert_eq!(oc.homs[top][k].len(), expect);
        }
    }
}
