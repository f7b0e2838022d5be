//! Standard truncated simplicial sets: simplices, boundaries, horns, discrete
//! sets, and nerves of finite categories.

use std::collections::HashMap;

use crate::cat::FiniteCategory;
use crate::sset::{subcomplex, SSetMap, TruncSSet};
use crate::util::{drop_entry, dup_entry, monotone_maps};

/// The standard n-simplex truncated at `trunc`: level k is the set of
/// monotone maps [k] -> [n] in lexicographic order.
pub fn standard_simplex(n: usize, trunc: usize) -> TruncSSet {
    let words: Vec<Vec<Vec<usize>>> = (0..=trunc).map(|k| monotone_maps(k, n)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = words
        .iter()
        .map(|lv| {
            lv.iter()
                .enumerate()
                .map(|(i, w)| (w.clone(), i))
                .collect()
        })
        .collect();
    let levels: Vec<usize> = words.iter().map(|lv| lv.len()).collect();
    let mut x = TruncSSet::scaffold(trunc, levels);
    for k in 1..=trunc {
        for (xi, w) in words[k].iter().enumerate() {
            for i in 0..=k {
                x.faces[k][i][xi] = index[k - 1][&drop_entry(w, i)];
            }
        }
    }
    for k in 0..trunc {
        for (xi, w) in words[k].iter().enumerate() {
            for i in 0..=k {
                x.degens[k][i][xi] = index[k + 1][&dup_entry(w, i)];
            }
        }
    }
    x
}

/// Vertex words of the standard simplex, exposed for lookups.
pub fn simplex_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    monotone_maps(k, n)
}

/// The boundary of the n-simplex: monotone maps that are not surjective.
pub fn boundary(n: usize, trunc: usize) -> TruncSSet {
    let ambient = standard_simplex(n, trunc);
    let keep: Vec<Vec<bool>> = (0..=trunc)
        .map(|k| {
            monotone_maps(k, n)
                .into_iter()
                .map(|w| !is_surjective(&w, n))
                .collect()
        })
        .collect();
    subcomplex(&ambient, &keep).expect("boundary is closed").0
}

/// The horn V[n, k]: the boundary with the k-th face removed. A simplex
/// belongs to it unless its image contains all vertices except possibly k.
pub fn horn(n: usize, k: usize, trunc: usize) -> TruncSSet {
    assert!(n >= 1 && k <= n, "horn parameters out of range");
    let ambient = standard_simplex(n, trunc);
    let keep: Vec<Vec<bool>> = (0..=trunc)
        .map(|lvl| {
            monotone_maps(lvl, n)
                .into_iter()
                .map(|w| !(0..=n).filter(|&v| v != k).all(|v| w.contains(&v)))
                .collect()
        })
        .collect();
    subcomplex(&ambient, &keep).expect("horn is closed").0
}

/// The inclusion of the horn into its simplex, as a map of truncated objects.
pub fn horn_inclusion(n: usize, k: usize, trunc: usize) -> SSetMap {
    let ambient = standard_simplex(n, trunc);
    let keep: Vec<Vec<bool>> = (0..=trunc)
        .map(|lvl| {
            monotone_maps(lvl, n)
                .into_iter()
                .map(|w| !(0..=n).filter(|&v| v != k).all(|v| w.contains(&v)))
                .collect()
        })
        .collect();
    subcomplex(&ambient, &keep).expect("horn is closed").1
}

/// The inclusion of the boundary into the simplex.
pub fn boundary_inclusion(n: usize, trunc: usize) -> SSetMap {
    let ambient = standard_simplex(n, trunc);
    let keep: Vec<Vec<bool>> = (0..=trunc)
        .map(|k| {
            monotone_maps(k, n)
                .into_iter()
                .map(|w| !is_surjective(&w, n))
                .collect()
        })
        .collect();
    subcomplex(&ambient, &keep).expect("boundary is closed").1
}

fn is_surjective(word: &[usize], n: usize) -> bool {
    (0..=n).all(|v| word.contains(&v))
}

/// Discrete simplicial set on `m` points.
pub fn disc(m: usize, trunc: usize) -> TruncSSet {
    let mut x = TruncSSet::scaffold(trunc, vec![m; trunc + 1]);
    for n in 1..=trunc {
        for i in 0..=n {
            x.faces[n][i] = (0..m).collect();
        }
    }
    for n in 0..trunc {
        for i in 0..=n {
            x.degens[n][i] = (0..m).collect();
        }
    }
    x
}

pub fn point(trunc: usize) -> TruncSSet {
    disc(1, trunc)
}

pub fn empty(trunc: usize) -> TruncSSet {
    disc(0, trunc)
}

/// The nerve of a finite category, truncated: level n is the set of
/// composable n-strings of morphisms.
pub fn nerve(c: &FiniteCategory, trunc: usize) -> TruncSSet {
    // level n simplices: object at position 0 plus n composable morphisms
    let mut strings: Vec<Vec<Vec<usize>>> = Vec::with_capacity(trunc + 1);
    strings.push((0..c.objects).map(|x| vec![x]).collect());
    for n in 1..=trunc {
        let mut lvl = Vec::new();
        if n == 1 {
            for m in 0..c.morphisms() {
                lvl.push(vec![c.mor_src[m], m]);
            }
        } else {
            for s in &strings[n - 1] {
                let last = s[s.len() - 1];
                for m in 0..c.morphisms() {
                    if c.mor_src[m] == c.mor_dst[last] {
                        let mut t = s.clone();
                        t.push(m);
                        lvl.push(t);
                    }
                }
            }
        }
        lvl.sort();
        strings.push(lvl);
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = strings
        .iter()
        .map(|lv| {
            lv.iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect()
        })
        .collect();
    let levels: Vec<usize> = strings.iter().map(|lv| lv.len()).collect();
    let mut x = TruncSSet::scaffold(trunc, levels);
    for n in 1..=trunc {
        for (xi, s) in strings[n].iter().enumerate() {
            // s = [x0, f1, ..., fn]
            for i in 0..=n {
                let t = nerve_face(c, s, n, i);
                x.faces[n][i][xi] = index[n - 1][&t];
            }
        }
    }
    for n in 0..trunc {
        for (xi, s) in strings[n].iter().enumerate() {
            for i in 0..=n {
                let t = nerve_degen(c, s, n, i);
                x.degens[n][i][xi] = index[n + 1][&t];
            }
        }
    }
    x
}

fn string_object(c: &FiniteCategory, s: &[usize], pos: usize) -> usize {
    if pos == 0 {
        s[0]
    } else {
        c.mor_dst[s[pos]]
    }
}

fn nerve_face(c: &FiniteCategory, s: &[usize], n: usize, i: usize) -> Vec<usize> {
    if n == 1 {
        return vec![string_object(c, s, 1 - i)];
    }
    let mut t = Vec::with_capacity(n);
    if i == 0 {
        t.push(string_object(c, s, 1));
        t.extend_from_slice(&s[2..]);
    } else if i == n {
        t.push(s[0]);
        t.extend_from_slice(&s[1..n]);
    } else {
        t.push(s[0]);
        t.extend_from_slice(&s[1..i]);
        let comp = c
            .compose(s[i + 1], s[i])
            .expect("adjacent morphisms in a string compose");
        t.push(comp);
        t.extend_from_slice(&s[i + 2..]);
    }
    t
}

fn nerve_degen(c: &FiniteCategory, s: &[usize], n: usize, i: usize) -> Vec<usize> {
    let mut t = Vec::with_capacity(n + 2);
    t.push(s[0]);
    t.extend_from_slice(&s[1..=i]);
    t.push(c.ids[string_object(c, s, i)]);
    t.extend_from_slice(&s[i + 1..]);
    t
}

/// E: the nerve of the groupoid with two objects and a single isomorphism
/// between them (the indiscrete category on two objects).
pub fn nerve_e(trunc: usize) -> TruncSSet {
    nerve(&FiniteCategory::indiscrete(2), trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::FiniteGroup;
    use crate::sset::EzData;

    #[test]
    fn nerve_of_linear_is_simplex() {
        for n in 0..=2 {
            let nv = nerve(&FiniteCategory::linear(n), 3);
            let dl = standard_simplex(n, 3);
            assert_eq!(nv.levels, dl.levels);
            nv.validate().unwrap();
        }
    }

    #[test]
    fn nerve_e_counts() {
        let e = nerve_e(4);
        e.validate().unwrap();
        let sizes: Vec<usize> = (0..=4).map(|n| e.size(n)).collect();
        assert_eq!(sizes, vec![2, 4, 8, 16, 32]);
    }

    #[test]
    fn nerve_of_z2_counts() {
        let c = FiniteCategory::from_group(&FiniteGroup::cyclic(2));
        let n = nerve(&c, 4);
        n.validate().unwrap();
        let sizes: Vec<usize> = (0..=4).map(|k| n.size(k)).collect();
        assert_eq!(sizes, vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn nerve_nondegenerate_counts_for_group() {
        // nondegenerate n-strings avoid identities: (|G|-1)^n
        let c = FiniteCategory::from_group(&FiniteGroup::cyclic(3));
        let n = nerve(&c, 3);
        let ez = EzData::new(&n);
        assert_eq!(ez.nondeg_count(0), 1);
        assert_eq!(ez.nondeg_count(1), 2);
        assert_eq!(ez.nondeg_count(2), 4);
        assert_eq!(ez.nondeg_count(3), 8);
    }

    #[test]
    fn boundary_of_delta1_is_two_points() {
        let b = boundary(1, 3);
        assert!(b.is_discrete());
        assert_eq!(b.size(0), 2);
    }

    #[test]
    fn horn_inclusion_validates() {
        for (n, k) in [(1, 0), (2, 0), (2, 1), (2, 2), (3, 1)] {
            let incl = horn_inclusion(n, k, 3);
            incl.validate().unwrap();
            assert!(incl.is_levelwise_injective());
        }
    }

    #[test]
    fn disc_is_discrete() {
        let d = disc(3, 2);
        d.validate().unwrap();
        assert!(d.is_discrete());
        assert!(empty(2).validate().is_ok());
    }
}
