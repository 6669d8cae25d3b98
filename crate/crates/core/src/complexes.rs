//! Independence and strong-independence complexes.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{elem_set, for_each_independent, lattice_with_ranks, FiniteAlgebra, SubalgebraSet};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    /// Sets `S` with `s ∉ <S ∖ {s}>` for every `s ∈ S`.
    Independence,
    /// Sets `S` such that no subalgebra containing `S` has rank below `|S|`.
    StrongIndependence,
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "independence" => Ok(ComplexKind::Independence),
            "strong" | "strong_independence" => Ok(ComplexKind::StrongIndependence),
            _ => Err(Error::input(format!("unknown complex kind {s:?} (expected independence or strong)"))),
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Independence => "independence",
            ComplexKind::StrongIndependence => "strong",
        })
    }
}

/// A downward-closed family over `A ∖ E(A)`, stored by its facets.
/// Vertices and facet members are element indices of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<usize>,
    labels: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Keeps only the maximal sets among `simplices`; every ground element
    /// must appear in one of them.
    pub fn from_simplices(ground: Vec<usize>, labels: Vec<String>, simplices: &[Vec<usize>]) -> Result<Self> {
        if ground.len() != labels.len() {
            return Err(Error::input("complex: ground and labels differ in length"));
        }
        let mut sets: Vec<Vec<usize>> = simplices
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for s in sets {
            if !facets.iter().any(|f| is_subset(&s, f)) {
                facets.push(s);
            }
        }
        facets.sort();
        for &v in &ground {
            if !facets.iter().any(|f| f.binary_search(&v).is_ok()) {
                return Err(Error::input(format!("complex: vertex {v} lies in no simplex")));
            }
        }
        Ok(SimplicialComplex { ground, labels, facets })
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        self.facets.iter().any(|f| is_subset(&s, f))
    }

    /// Every simplex, ordered by size then lexicographically.
    pub fn simplices(&self) -> Vec<Vec<usize>> {
        let mut all = HashSet::new();
        for f in &self.facets {
            for mask in 0u32..1 << f.len() {
                all.insert(
                    f.iter()
                        .enumerate()
                        .filter(|&(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect::<Vec<_>>(),
                );
            }
        }
        let mut out: Vec<_> = all.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            ground: &'a [String],
            facets: Vec<Vec<usize>>,
        }
        let pos = |v: usize| self.ground.binary_search(&v).expect("facet vertex is in the ground set");
        let doc = Doc {
            ground: &self.labels,
            facets: self.facets.iter().map(|f| f.iter().map(|&v| pos(v)).collect()).collect(),
        };
        serde_json::to_string(&doc).expect("complex serializes")
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

pub fn build_complex(alg: &FiniteAlgebra, kind: ComplexKind, limits: &Limits) -> Result<SimplicialComplex> {
    let e = alg.minimal_subalgebra();
    let ground: Vec<usize> = (0..alg.size()).filter(|&x| !e.contains(x)).collect();
    let labels = ground.iter().map(|&x| alg.label(x).to_string()).collect();
    let lattice = match kind {
        ComplexKind::Independence => Vec::new(),
        ComplexKind::StrongIndependence => lattice_with_ranks(alg, limits)?,
    };
    let mut simplices = Vec::new();
    for_each_independent(alg, limits.max_simplex, limits, &mut |set, _| {
        if kind == ComplexKind::Independence || set.len() <= 1 || is_strongly_independent(alg, &lattice, set) {
            simplices.push(set.to_vec());
        }
        Ok(())
    })?;
    SimplicialComplex::from_simplices(ground, labels, &simplices)
}

/// No member of `lattice` containing `set` has rank below `|set|`. The
/// lattice must carry ranks, as returned by [`lattice_with_ranks`].
pub fn is_strongly_independent(alg: &FiniteAlgebra, lattice: &[SubalgebraSet], set: &[usize]) -> bool {
    let s = elem_set(alg.size(), set.iter().copied());
    lattice
        .iter()
        .filter(|b| s.is_subset(&b.members))
        .all(|b| b.rank.expect("ranks computed") >= set.len())
}

/// Graph on the ground set joining pairs that form a simplex.
pub fn one_skeleton(c: &SimplicialComplex) -> SimpleGraph {
    let mut g = SimpleGraph::new(c.labels.clone()).expect("ground labels are distinct");
    for f in &c.facets {
        for (i, &u) in f.iter().enumerate() {
            for &v in &f[i + 1..] {
                let pu = c.ground.binary_search(&u).expect("in ground");
                let pv = c.ground.binary_search(&v).expect("in ground");
                g.add_edge(pu, pv);
            }
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatroidVerdict {
    pub holds: bool,
    /// Simplices `I`, `J` with `|J| = |I| + 1` such that no element of `J ∖ I`
    /// extends `I`.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Independent-set exchange axiom. Checking `|J| = |I| + 1` suffices for a
/// downward-closed family.
pub fn is_matroid(c: &SimplicialComplex) -> MatroidVerdict {
    let all = c.simplices();
    let set: HashSet<&Vec<usize>> = all.iter().collect();
    for i in &all {
        for j in all.iter().filter(|j| j.len() == i.len() + 1) {
            let extends = j.iter().filter(|x| i.binary_search(x).is_err()).any(|&x| {
                let mut k = i.clone();
                let at = k.binary_search(&x).unwrap_err();
                k.insert(at, x);
                set.contains(&k)
            });
            if !extends {
                return MatroidVerdict {
                    holds: false,
                    witness: Some((i.clone(), j.clone())),
                };
            }
        }
    }
    MatroidVerdict {
        holds: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BuilderSpec;

    fn build(s: &str) -> FiniteAlgebra {
        s.parse::<BuilderSpec>().unwrap().build().unwrap()
    }

    fn complex(s: &str, kind: ComplexKind) -> SimplicialComplex {
        build_complex(&build(s), kind, &Limits::default()).unwrap()
    }

    #[test]
    fn klein_four_facets() {
        let c = complex("product:cyclic:2,cyclic:2", ComplexKind::Independence);
        assert_eq!(c.ground(), &[1, 2, 3]);
        assert_eq!(c.facets(), &[vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(is_matroid(&c).holds);
        assert_eq!(complex("product:cyclic:2,cyclic:2", ComplexKind::StrongIndependence), c);
    }

    #[test]
    fn c6_is_not_a_matroid() {
        let c = complex("cyclic:6", ComplexKind::Independence);
        assert_eq!(c.facets(), &[vec![1], vec![2, 3], vec![3, 4], vec![5]]);
        let v = is_matroid(&c);
        assert!(!v.holds);
        assert_eq!(v.witness, Some((vec![1], vec![2, 3])));
    }

    #[test]
    fn quasigroup_complex_is_a_matroid() {
        let c = complex("quasiunary:cyclic:3", ComplexKind::Independence);
        assert!(is_matroid(&c).holds);
        assert_eq!(c.facets(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(one_skeleton(&c).edge_count(), 0);
    }

    #[test]
    fn strong_is_contained_in_independence() {
        for s in ["cyclic:12", "dihedral:8", "symmetric:3", "monosg:4:1", "volkov"] {
            let a = build(s);
            let ind = build_complex(&a, ComplexKind::Independence, &Limits::default()).unwrap();
            let strong = build_complex(&a, ComplexKind::StrongIndependence, &Limits::default()).unwrap();
            assert!(strong.simplices().iter().all(|s| ind.contains(s)), "{s}");
        }
    }

    #[test]
    fn export_indexes_into_ground() {
        let c = complex("cyclic:6", ComplexKind::Independence);
        let v: serde_json::Value = serde_json::from_str(&c.to_json_string()).unwrap();
        assert_eq!(v["ground"], serde_json::json!(["1", "2", "3", "4", "5"]));
        assert_eq!(v["facets"], serde_json::json!([[0], [1, 2], [2, 3], [4]]));
    }
}
