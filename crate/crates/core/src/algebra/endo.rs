//! Endomorphism enumeration.
//!
//! The decision variables are the images of a minimum generating set. After
//! each assignment the partial map is pushed through every operation until
//! it is defined on the subalgebra generated so far; a clash prunes the
//! branch. Once all generators are placed the map is total and the
//! propagation has already checked every operation tuple.

use super::lattice::minimum_generating_set;
use super::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::limits::Limits;

const UNSET: usize = usize::MAX;

/// A self-map of an algebra commuting with every operation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endomorphism {
    pub images: Vec<usize>,
}

impl Endomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }
}

/// True when `images` commutes with every operation of `alg`.
pub fn commutes(alg: &FiniteAlgebra, images: &[usize]) -> bool {
    let n = alg.size();
    alg.operations().iter().all(|op| {
        let k = op.arity;
        let mut args = vec![0usize; k];
        let mut mapped = vec![0usize; k];
        (0..op.table.len()).all(|t| {
            let mut r = t;
            for a in args.iter_mut().rev() {
                *a = r % n;
                r /= n;
            }
            for (m, &a) in mapped.iter_mut().zip(&args) {
                *m = images[a];
            }
            images[op.table[t]] == op.apply(n, &mapped)
        })
    })
}

/// All endomorphisms, in lexicographic order of their image arrays.
///
/// Falls back to exhaustive search over all `n^n` maps when no minimum
/// generating set is found within the limits and `n ≤ 6`.
pub fn enumerate_endomorphisms(alg: &FiniteAlgebra, limits: &Limits) -> Result<Vec<Endomorphism>> {
    let gens = match minimum_generating_set(alg, limits) {
        Ok(g) => g,
        Err(Error::Resource { .. }) if alg.size() <= 6 => return Ok(exhaustive_endomorphisms(alg)),
        Err(e) => return Err(e),
    };
    let n = alg.size();
    let mut img = vec![UNSET; n];
    let mut order = Vec::with_capacity(n);
    if !propagate(alg, &mut img, &mut order, Vec::new()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut nodes = 0usize;
    search(alg, &gens, &img, &order, &mut nodes, limits, &mut out)?;
    out.sort();
    Ok(out)
}

fn search(
    alg: &FiniteAlgebra,
    gens: &[usize],
    img: &[usize],
    order: &[usize],
    nodes: &mut usize,
    limits: &Limits,
    out: &mut Vec<Endomorphism>,
) -> Result<()> {
    let Some((&g, rest)) = gens.split_first() else {
        debug_assert!(img.iter().all(|&y| y != UNSET));
        out.push(Endomorphism {
            images: img.to_vec(),
        });
        return Ok(());
    };
    if img[g] != UNSET {
        return search(alg, rest, img, order, nodes, limits, out);
    }
    for y in 0..alg.size() {
        *nodes += 1;
        if *nodes > limits.endomorphism_nodes {
            return Err(Error::resource(
                format!("endomorphism search in {}", alg.name()),
                limits.endomorphism_nodes,
            ));
        }
        let mut img2 = img.to_vec();
        let mut order2 = order.to_vec();
        if propagate(alg, &mut img2, &mut order2, vec![(g, y)]) {
            search(alg, rest, &img2, &order2, nodes, limits, out)?;
        }
    }
    Ok(())
}

// Extends the partial homomorphism `img` (defined exactly on `order`) by the
// new pairs and closes it under all operations. Returns false on a clash.
pub(crate) fn propagate(
    alg: &FiniteAlgebra,
    img: &mut [usize],
    order: &mut Vec<usize>,
    new: Vec<(usize, usize)>,
) -> bool {
    let n = alg.size();
    let start = order.len();
    let set = |img: &mut [usize], order: &mut Vec<usize>, x: usize, y: usize| -> bool {
        if img[x] == UNSET {
            img[x] = y;
            order.push(x);
            true
        } else {
            img[x] == y
        }
    };
    if start == 0 {
        for op in alg.operations() {
            if let Some(c) = op.constant() {
                if !set(img, order, c, c) {
                    return false;
                }
            }
        }
    }
    for (x, y) in new {
        if !set(img, order, x, y) {
            return false;
        }
    }
    let mut i = if start == 0 { 0 } else { start };
    let mut args = Vec::new();
    let mut mapped = Vec::new();
    while i < order.len() {
        let x = order[i];
        for op in alg.operations() {
            match op.arity {
                0 => {}
                1 => {
                    if !set(img, order, op.table[x], op.table[img[x]]) {
                        return false;
                    }
                }
                2 => {
                    for j in 0..=i {
                        let z = order[j];
                        let (fx, fz) = (img[x], img[z]);
                        if !set(img, order, op.table[x * n + z], op.table[fx * n + fz])
                            || !set(img, order, op.table[z * n + x], op.table[fz * n + fx])
                        {
                            return false;
                        }
                    }
                }
                k => {
                    let width = i + 1;
                    let mut idx = vec![0usize; k];
                    loop {
                        if idx.contains(&i) {
                            args.clear();
                            args.extend(idx.iter().map(|&t| order[t]));
                            mapped.clear();
                            mapped.extend(args.iter().map(|&a| img[a]));
                            let (z, w) = (op.apply(n, &args), op.apply(n, &mapped));
                            if !set(img, order, z, w) {
                                return false;
                            }
                        }
                        let mut p = k;
                        while p > 0 {
                            p -= 1;
                            idx[p] += 1;
                            if idx[p] < width {
                                break;
                            }
                            idx[p] = 0;
                        }
                        if idx.iter().all(|&t| t == 0) {
                            break;
                        }
                    }
                }
            }
        }
        i += 1;
    }
    true
}

/// All endomorphisms by filtering every self-map. Exponential; meant for
/// tiny algebras and as a cross-check.
pub fn exhaustive_endomorphisms(alg: &FiniteAlgebra) -> Vec<Endomorphism> {
    let n = alg.size();
    let mut images = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        if commutes(alg, &images) {
            out.push(Endomorphism {
                images: images.clone(),
            });
        }
        let mut p = n;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            images[p] += 1;
            if images[p] < n {
                break;
            }
            images[p] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BuilderSpec;

    fn build(s: &str) -> FiniteAlgebra {
        s.parse::<BuilderSpec>().unwrap().build().unwrap()
    }

    fn labelled(a: &FiniteAlgebra, ends: &[Endomorphism]) -> Vec<Vec<String>> {
        ends.iter()
            .map(|f| f.images.iter().map(|&y| a.label(y).to_string()).collect())
            .collect()
    }

    #[test]
    fn volkov_has_four_endomorphisms() {
        let a = build("volkov");
        let ends = enumerate_endomorphisms(&a, &Limits::default()).unwrap();
        let mut got = labelled(&a, &ends);
        got.sort();
        let mut want = vec![
            vec!["a", "b", "e"],
            vec!["e", "b", "e"],
            vec!["a", "e", "e"],
            vec!["e", "e", "e"],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn small_cases() {
        let l = Limits::default();
        let c2 = build("cyclic:2");
        let ends = enumerate_endomorphisms(&c2, &l).unwrap();
        assert_eq!(ends.iter().map(|f| f.images.clone()).collect::<Vec<_>>(), vec![vec![0, 0], vec![0, 1]]);
        let c1 = build("cyclic:1");
        let ends = enumerate_endomorphisms(&c1, &l).unwrap();
        assert_eq!(ends.len(), 1);
        assert!(ends[0].is_identity());
        // |End(C6)| = 6, |End(C2^3)| = 2^9
        assert_eq!(enumerate_endomorphisms(&build("cyclic:6"), &l).unwrap().len(), 6);
        assert_eq!(enumerate_endomorphisms(&build("elemab:2:3"), &l).unwrap().len(), 512);
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        let l = Limits::default();
        for s in ["cyclic:4", "product:cyclic:2,cyclic:2", "monosg:2:2", "monosg:3:1", "volkov", "quasiunary:cyclic:4", "symmetric:3"] {
            let a = build(s);
            assert_eq!(enumerate_endomorphisms(&a, &l).unwrap(), exhaustive_endomorphisms(&a), "{s}");
        }
    }

    #[test]
    fn closed_under_composition() {
        let a = build("dihedral:8");
        let ends = enumerate_endomorphisms(&a, &Limits::default()).unwrap();
        for f in &ends {
            assert!(commutes(&a, &f.images));
            for g in &ends {
                assert!(ends.binary_search(&f.compose(g)).is_ok());
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Limits {
            endomorphism_nodes: 10,
            ..Limits::default()
        };
        let err = enumerate_endomorphisms(&build("elemab:2:3"), &tight).unwrap_err();
        assert!(matches!(err, Error::Resource { cap: 10, .. }));
    }
}
