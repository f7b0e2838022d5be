//! Levelwise limits and colimits of truncated simplicial sets. Colimit
//! quotients run through the shared congruence engine so induced structure
//! maps are always well defined.

use crate::error::{Error, Result};
use crate::sset::{SSetMap, TruncSSet};
use crate::util::{CellOp, LeveledSets, QuotientLabels};

fn check_trunc(a: &TruncSSet, b: &TruncSSet) -> Result<()> {
    if a.trunc != b.trunc {
        return Err(Error::TruncMismatch(a.trunc, b.trunc));
    }
    Ok(())
}

/// Cartesian product, with the two projections.
pub fn product(x: &TruncSSet, y: &TruncSSet) -> Result<(TruncSSet, SSetMap, SSetMap)> {
    check_trunc(x, y)?;
    let trunc = x.trunc;
    let levels: Vec<usize> = (0..=trunc).map(|n| x.levels[n] * y.levels[n]).collect();
    let mut p = TruncSSet::scaffold(trunc, levels);
    let pair = |n: usize, a: usize, b: usize| a * y.levels[n] + b;
    for n in 1..=trunc {
        for a in 0..x.levels[n] {
            for b in 0..y.levels[n] {
                for i in 0..=n {
                    p.faces[n][i][pair(n, a, b)] =
                        pair(n - 1, x.face(n, i, a), y.face(n, i, b));
                }
            }
        }
    }
    for n in 0..trunc {
        for a in 0..x.levels[n] {
            for b in 0..y.levels[n] {
                for i in 0..=n {
                    p.degens[n][i][pair(n, a, b)] =
                        pair(n + 1, x.degen(n, i, a), y.degen(n, i, b));
                }
            }
        }
    }
    let proj1 = SSetMap {
        src: p.clone(),
        dst: x.clone(),
        comps: (0..=trunc)
            .map(|n| {
                (0..p.levels[n])
                    .map(|c| c / y.levels[n].max(1))
                    .collect()
            })
            .collect(),
    };
    let proj2 = SSetMap {
        src: p.clone(),
        dst: y.clone(),
        comps: (0..=trunc)
            .map(|n| {
                (0..p.levels[n])
                    .map(|c| c % y.levels[n].max(1))
                    .collect()
            })
            .collect(),
    };
    Ok((p, proj1, proj2))
}

/// Pairing of maps into a product built by `product`.
pub fn pair_into_product(
    prod: &TruncSSet,
    y_sizes: &[usize],
    f: &SSetMap,
    g: &SSetMap,
) -> SSetMap {
    let comps = (0..=f.src.trunc)
        .map(|n| {
            (0..f.src.levels[n])
                .map(|a| f.apply(n, a) * y_sizes[n] + g.apply(n, a))
                .collect()
        })
        .collect();
    SSetMap {
        src: f.src.clone(),
        dst: prod.clone(),
        comps,
    }
}

/// Disjoint union of a list of objects sharing a truncation, plus injections.
pub fn coproduct(parts: &[&TruncSSet], trunc: usize) -> Result<(TruncSSet, Vec<SSetMap>)> {
    for p in parts {
        if p.trunc != trunc {
            return Err(Error::TruncMismatch(p.trunc, trunc));
        }
    }
    let levels: Vec<usize> = (0..=trunc)
        .map(|n| parts.iter().map(|p| p.levels[n]).sum())
        .collect();
    let mut c = TruncSSet::scaffold(trunc, levels);
    let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
    {
        let mut running = vec![0usize; trunc + 1];
        for p in parts {
            offsets.push(running.clone());
            for n in 0..=trunc {
                running[n] += p.levels[n];
            }
        }
    }
    for (pi, p) in parts.iter().enumerate() {
        for n in 1..=trunc {
            for x in 0..p.levels[n] {
                for i in 0..=n {
                    c.faces[n][i][offsets[pi][n] + x] = offsets[pi][n - 1] + p.face(n, i, x);
                }
            }
        }
        for n in 0..trunc {
            for x in 0..p.levels[n] {
                for i in 0..=n {
                    c.degens[n][i][offsets[pi][n] + x] = offsets[pi][n + 1] + p.degen(n, i, x);
                }
            }
        }
    }
    let injections = parts
        .iter()
        .enumerate()
        .map(|(pi, p)| SSetMap {
            src: (*p).clone(),
            dst: c.clone(),
            comps: (0..=trunc)
                .map(|n| (0..p.levels[n]).map(|x| offsets[pi][n] + x).collect())
                .collect(),
        })
        .collect();
    Ok((c, injections))
}

fn as_leveled(x: &TruncSSet) -> LeveledSets {
    let mut ops = Vec::new();
    for n in 1..=x.trunc {
        for i in 0..=n {
            ops.push(CellOp {
                from: n,
                to: n - 1,
                table: x.faces[n][i].clone(),
            });
        }
    }
    for n in 0..x.trunc {
        for i in 0..=n {
            ops.push(CellOp {
                from: n,
                to: n + 1,
                table: x.degens[n][i].clone(),
            });
        }
    }
    LeveledSets {
        sizes: x.levels.clone(),
        ops,
    }
}

/// Quotient of `x` by the congruence generated by `relations` (level, a, b).
/// Returns the quotient and the projection.
pub fn quotient(x: &TruncSSet, relations: &[(usize, usize, usize)]) -> (TruncSSet, SSetMap) {
    let fam = as_leveled(x);
    let QuotientLabels { labels, counts } = fam.congruence(relations);
    let mut q = TruncSSet::scaffold(x.trunc, counts.clone());
    // representative per class
    let mut reps: Vec<Vec<usize>> = counts.iter().map(|&c| vec![usize::MAX; c]).collect();
    for n in 0..=x.trunc {
        for e in (0..x.levels[n]).rev() {
            reps[n][labels[n][e]] = e;
        }
    }
    for n in 1..=x.trunc {
        for c in 0..counts[n] {
            for i in 0..=n {
                q.faces[n][i][c] = labels[n - 1][x.face(n, i, reps[n][c])];
            }
        }
    }
    for n in 0..x.trunc {
        for c in 0..counts[n] {
            for i in 0..=n {
                q.degens[n][i][c] = labels[n + 1][x.degen(n, i, reps[n][c])];
            }
        }
    }
    let proj = SSetMap {
        src: x.clone(),
        dst: q.clone(),
        comps: labels,
    };
    (q, proj)
}

/// A computed pushout square.
#[derive(Debug, Clone)]
pub struct Pushout {
    pub object: TruncSSet,
    pub from_left: SSetMap,
    pub from_right: SSetMap,
}

/// Pushout of X <-f- A -g-> Y.
pub fn pushout(f: &SSetMap, g: &SSetMap) -> Result<Pushout> {
    if f.src != g.src {
        return Err(Error::invalid("pushout legs must share their source"));
    }
    let (cop, injs) = coproduct(&[&f.dst, &g.dst], f.dst.trunc)?;
    let mut relations = Vec::new();
    for n in 0..=f.src.trunc {
        for a in 0..f.src.levels[n] {
            relations.push((
                n,
                injs[0].apply(n, f.apply(n, a)),
                injs[1].apply(n, g.apply(n, a)),
            ));
        }
    }
    let (q, proj) = quotient(&cop, &relations);
    let from_left = proj.compose(&injs[0])?;
    let from_right = proj.compose(&injs[1])?;
    Ok(Pushout {
        object: q,
        from_left,
        from_right,
    })
}

impl Pushout {
    /// The induced map out of the pushout for a commuting cocone; errors when
    /// the cocone does not actually commute.
    pub fn induce(&self, left: &SSetMap, right: &SSetMap) -> Result<SSetMap> {
        let trunc = self.object.trunc;
        let mut comps: Vec<Vec<usize>> = (0..=trunc)
            .map(|n| vec![usize::MAX; self.object.levels[n]])
            .collect();
        for n in 0..=trunc {
            for x in 0..self.from_left.src.levels[n] {
                let c = self.from_left.apply(n, x);
                let v = left.apply(n, x);
                if comps[n][c] != usize::MAX && comps[n][c] != v {
                    return Err(Error::invalid("cocone does not respect the pushout relations"));
                }
                comps[n][c] = v;
            }
            for y in 0..self.from_right.src.levels[n] {
                let c = self.from_right.apply(n, y);
                let v = right.apply(n, y);
                if comps[n][c] != usize::MAX && comps[n][c] != v {
                    return Err(Error::invalid("cocone does not respect the pushout relations"));
                }
                comps[n][c] = v;
            }
            if comps[n].iter().any(|&v| v == usize::MAX) {
                return Err(Error::invalid("pushout class not covered by either leg"));
            }
        }
        Ok(SSetMap {
            src: self.object.clone(),
            dst: left.dst.clone(),
            comps,
        })
    }
}

/// Coequalizer of a parallel pair f, g: A -> X.
pub fn coequalizer(f: &SSetMap, g: &SSetMap) -> Result<(TruncSSet, SSetMap)> {
    if f.src != g.src || f.dst != g.dst {
        return Err(Error::invalid("coequalizer needs a parallel pair"));
    }
    let mut relations = Vec::new();
    for n in 0..=f.src.trunc {
        for a in 0..f.src.levels[n] {
            relations.push((n, f.apply(n, a), g.apply(n, a)));
        }
    }
    Ok(quotient(&f.dst, &relations))
}

/// Equalizer of a parallel pair f, g: X -> Y, as a subobject of X.
pub fn equalizer(f: &SSetMap, g: &SSetMap) -> Result<(TruncSSet, SSetMap)> {
    if f.src != g.src || f.dst != g.dst {
        return Err(Error::invalid("equalizer needs a parallel pair"));
    }
    let keep: Vec<Vec<bool>> = (0..=f.src.trunc)
        .map(|n| {
            (0..f.src.levels[n])
                .map(|x| f.apply(n, x) == g.apply(n, x))
                .collect()
        })
        .collect();
    crate::sset::subcomplex(&f.src, &keep)
}

/// Pullback of X -f-> Z <-g- Y, as a subobject of the product.
pub fn pullback(f: &SSetMap, g: &SSetMap) -> Result<(TruncSSet, SSetMap, SSetMap)> {
    if f.dst != g.dst {
        return Err(Error::invalid("pullback legs must share their target"));
    }
    let (prod, p1, p2) = product(&f.src, &g.src)?;
    let keep: Vec<Vec<bool>> = (0..=prod.trunc)
        .map(|n| {
            (0..prod.levels[n])
                .map(|c| f.apply(n, p1.apply(n, c)) == g.apply(n, p2.apply(n, c)))
                .collect()
        })
        .collect();
    let (pb, incl) = crate::sset::subcomplex(&prod, &keep)?;
    let to_x = p1.compose(&incl)?;
    let to_y = p2.compose(&incl)?;
    Ok((pb, to_x, to_y))
}

/// Factors f through a levelwise-injective map m with im(f) inside im(m).
pub fn factor_through(f: &SSetMap, m: &SSetMap) -> Result<SSetMap> {
    if f.dst != m.dst {
        return Err(Error::invalid("factorization targets differ"));
    }
    let mut comps = Vec::with_capacity(f.src.trunc + 1);
    for n in 0..=f.src.trunc {
        let mut back = vec![usize::MAX; m.dst.levels[n]];
        for (b, &y) in m.comps[n].iter().enumerate() {
            back[y] = b;
        }
        let mut level = Vec::with_capacity(f.src.levels[n]);
        for x in 0..f.src.levels[n] {
            let y = f.apply(n, x);
            if back[y] == usize::MAX {
                return Err(Error::invalid("image does not factor"));
            }
            level.push(back[y]);
        }
        comps.push(level);
    }
    Ok(SSetMap {
        src: f.src.clone(),
        dst: m.src.clone(),
        comps,
    })
}

/// Colimit of a finite chain X_0 -> X_1 -> ... -> X_k, computed as the
/// quotient of the coproduct by x ~ f_i(x). Returns the colimit with the
/// cocone maps from every stage.
pub fn chain_colimit(maps: &[SSetMap]) -> Result<(TruncSSet, Vec<SSetMap>)> {
    assert!(!maps.is_empty());
    for w in maps.windows(2) {
        if w[0].dst != w[1].src {
            return Err(Error::invalid("chain maps do not compose"));
        }
    }
    let trunc = maps[0].src.trunc;
    let mut stages: Vec<&TruncSSet> = vec![&maps[0].src];
    for m in maps {
        stages.push(&m.dst);
    }
    let (cop, injs) = coproduct(&stages, trunc)?;
    let mut relations = Vec::new();
    for (i, m) in maps.iter().enumerate() {
        for n in 0..=trunc {
            for x in 0..m.src.levels[n] {
                relations.push((n, injs[i].apply(n, x), injs[i + 1].apply(n, m.apply(n, x))));
            }
        }
    }
    let (q, proj) = quotient(&cop, &relations);
    let cocone = injs
        .iter()
        .map(|inj| proj.compose(inj))
        .collect::<Result<Vec<_>>>()?;
    Ok((q, cocone))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{boundary, disc, point, standard_simplex};
    use crate::sset::build::boundary_inclusion;

    #[test]
    fn square_has_nine_edges() {
        let d1 = standard_simplex(1, 2);
        let (p, p1, p2) = product(&d1, &d1).unwrap();
        p.validate().unwrap();
        p1.validate().unwrap();
        p2.validate().unwrap();
        assert_eq!(p.size(1), 9);
    }

    #[test]
    fn coproduct_of_points() {
        let pt = point(2);
        let (c, injs) = coproduct(&[&pt, &pt], 2).unwrap();
        c.validate().unwrap();
        assert_eq!(c.size(0), 2);
        for i in injs {
            i.validate().unwrap();
        }
    }

    #[test]
    fn circle_pushout_shape() {
        // S^1: collapse the boundary of the interval to a point
        let trunc = 3;
        let incl = boundary_inclusion(1, trunc);
        let b = boundary(1, trunc);
        let pt = point(trunc);
        let collapse = SSetMap {
            src: b.clone(),
            dst: pt.clone(),
            comps: (0..=trunc).map(|n| vec![0; b.levels[n]]).collect(),
        };
        collapse.validate().unwrap();
        let po = pushout(&incl, &collapse).unwrap();
        po.object.validate().unwrap();
        po.from_left.validate().unwrap();
        po.from_right.validate().unwrap();
        assert_eq!(po.object.size(0), 1);
        assert_eq!(po.object.size(1), 2); // the loop and the degenerate edge
    }

    #[test]
    fn pushout_induce_rejects_bad_cocone() {
        let trunc = 1;
        let pt = point(trunc);
        let two = disc(2, trunc);
        let e = crate::sset::build::empty(trunc);
        let to_pt = SSetMap {
            src: e.clone(),
            dst: pt.clone(),
            comps: vec![vec![], vec![]],
        };
        let to_two = SSetMap {
            src: e,
            dst: two.clone(),
            comps: vec![vec![], vec![]],
        };
        let po = pushout(&to_pt, &to_two).unwrap();
        assert_eq!(po.object.size(0), 3);
        // valid cocone: everything to a point
        let c1 = SSetMap {
            src: pt.clone(),
            dst: pt.clone(),
            comps: vec![vec![0], vec![0]],
        };
        let c2 = SSetMap {
            src: two,
            dst: pt,
            comps: vec![vec![0, 0], vec![0, 0]],
        };
        let ind = po.induce(&c1, &c2).unwrap();
        ind.validate().unwrap();
    }

    #[test]
    fn pullback_of_diagonal() {
        let d1 = standard_simplex(1, 2);
        let id = SSetMap::identity(&d1);
        let (pb, a, b) = pullback(&id, &id).unwrap();
        pb.validate().unwrap();
        assert_eq!(pb.levels, d1.levels);
        a.validate().unwrap();
        b.validate().unwrap();
    }

    #[test]
    fn chain_colimit_of_skeleta() {
        let x = standard_simplex(2, 2);
        let (_, incl0) = crate::sset::skeleton(&x, 0);
        let (_, incl1) = crate::sset::skeleton(&x, 1);
        let f = factor_through(&incl0, &incl1).unwrap();
        f.validate().unwrap();
        let (colim, cocone) = chain_colimit(&[f, incl1]).unwrap();
        colim.validate().unwrap();
        assert_eq!(colim.levels, x.levels);
        for c in cocone {
            c.validate().unwrap();
        }
    }
}
