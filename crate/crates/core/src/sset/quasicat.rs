//! Inner-horn lifting tests: enumerate every map from an inner horn and look
//! for an extension along the horn inclusion.

use serde::Serialize;

use crate::error::Result;
use crate::sset::build::{horn_inclusion, simplex_words};
use crate::sset::hom::hom_set;
use crate::sset::TruncSSet;

/// An unfillable horn: the offending (n, k) and the images of the horn's
/// top-dimensional free faces (face index -> simplex of X at level n-1).
#[derive(Debug, Clone, Serialize)]
pub struct HornFailure {
    pub n: usize,
    pub k: usize,
    pub free_faces: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiReport {
    pub max_dim: usize,
    /// (n, k, number of horn maps tested)
    pub checked: Vec<(usize, usize, usize)>,
    pub failures: Vec<HornFailure>,
}

impl QuasiReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests every inner horn V[n,k] -> X for 2 <= n <= max_dim against
/// extension along V[n,k] -> Delta[n]. A map of the horn is determined by its
/// free faces, so an extension exists exactly when some x in X_n has matching
/// faces away from k.
pub fn is_quasicategory(x: &TruncSSet, max_dim: usize, budget: u64) -> Result<QuasiReport> {
    assert!(max_dim <= x.trunc, "max_dim above stored truncation");
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for n in 2..=max_dim {
        for k in 1..n {
            let incl = horn_inclusion(n, k, x.trunc);
            let horn_obj = &incl.src;
            let maps = hom_set(horn_obj, x, budget)?;
            // locate the free faces of the horn inside the ambient simplex
            let words = simplex_words(n, n - 1);
            let mut face_cell = Vec::new();
            for i in 0..=n {
                if i == k {
                    continue;
                }
                // the i-th face is the monotone injection missing value i
                let w: Vec<usize> = (0..=n).filter(|&v| v != i).collect();
                let ambient_idx = words.binary_search(&w).expect("face word present");
                let horn_idx = incl.comps[n - 1]
                    .iter()
                    .position(|&y| y == ambient_idx)
                    .expect("free face lies in the horn");
                face_cell.push((i, horn_idx));
            }
            for m in &maps {
                let wanted: Vec<(usize, usize)> = face_cell
                    .iter()
                    .map(|&(i, cell)| (i, m.apply(n - 1, cell)))
                    .collect();
                let filler = (0..x.levels[n])
                    .any(|cand| wanted.iter().all(|&(i, img)| x.face(n, i, cand) == img));
                if !filler {
                    failures.push(HornFailure {
                        n,
                        k,
                        free_faces: wanted,
                    });
                }
            }
            checked.push((n, k, maps.len()));
        }
    }
    Ok(QuasiReport {
        max_dim,
        checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FiniteCategory;
    use crate::fingroup::FiniteGroup;
    use crate::sset::build::{horn, nerve, standard_simplex};

    const B: u64 = 50_000_000;

    #[test]
    fn nerves_pass_inner_horns() {
        let cats = vec![
            FiniteCategory::linear(2),
            FiniteCategory::indiscrete(2),
            FiniteCategory::from_group(&FiniteGroup::cyclic(2)),
        ];
        for c in cats {
            let x = nerve(&c, 4);
            let r = is_quasicategory(&x, 4, B).unwrap();
            assert!(r.passes(), "nerve failed: {:?}", r.failures);
        }
    }

    #[test]
    fn simplex_passes() {
        let x = standard_simplex(3, 3);
        assert!(is_quasicategory(&x, 3, B).unwrap().passes());
    }

    #[test]
    fn horn_itself_fails() {
        let x = horn(2, 1, 3);
        let r = is_quasicategory(&x, 2, B).unwrap();
        assert!(!r.passes());
        assert!(r.failures.iter().any(|f| f.n == 2 && f.k == 1));
    }

    #[test]
    fn boundary_fails() {
        let x = crate::sset::build::boundary(2, 3);
        let r = is_quasicategory(&x, 2, B).unwrap();
        assert!(!r.passes());
    }
}
