//! Structural properties of algebras: monotonicity, MO, EPPO and the
//! independence-algebra test.

use super::endo::{commutes, propagate};
use super::lattice::{lattice_with_ranks, minimum_generating_set, subalgebra_lattice};
use super::{ElemSet, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// `B1 ≤ B2` implies `r(B1) ≤ r(B2)`.
    Monotonic,
    /// Every nontrivial subalgebra of a monogenic subalgebra is monogenic.
    OneMonotonic,
    /// The monogenic subalgebras of any monogenic subalgebra form a chain.
    Mo,
    /// Every element of the group has prime power order. Groups only.
    Eppo,
    /// Exchange property plus unique extension of basis maps.
    IndependenceAlgebra,
}

impl std::str::FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monotonic" => Ok(Property::Monotonic),
            "one_monotonic" => Ok(Property::OneMonotonic),
            "mo" | "MO" => Ok(Property::Mo),
            "eppo" | "EPPO" => Ok(Property::Eppo),
            "independence_algebra" => Ok(Property::IndependenceAlgebra),
            _ => Err(Error::input(format!("unknown property {s:?}"))),
        }
    }
}

/// Why a property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyWitness {
    RankDrop {
        smaller: ElemSet,
        smaller_rank: usize,
        larger: ElemSet,
        larger_rank: usize,
    },
    NonMonogenicInside {
        generator: usize,
        sub: ElemSet,
        rank: usize,
    },
    IncomparableMonogenic {
        generator: usize,
        x: usize,
        y: usize,
    },
    ElementOrder {
        element: usize,
        order: usize,
    },
    /// `y ∈ <S ∪ {x}> ∖ <S>` but `x ∉ <S ∪ {y}>`.
    Exchange {
        closed: ElemSet,
        x: usize,
        y: usize,
    },
    /// A map from the basis with no extension to an endomorphism.
    BasisMap {
        basis: Vec<usize>,
        images: Vec<usize>,
        extensions: usize,
    },
}

impl PropertyWitness {
    /// Human-readable form using element labels.
    pub fn describe(&self, alg: &FiniteAlgebra) -> String {
        let set = |s: &ElemSet| format!("{{{}}}", alg.labels_of(s).join(","));
        let l = |x: usize| alg.label(x).to_string();
        match self {
            PropertyWitness::RankDrop {
                smaller,
                smaller_rank,
                larger,
                larger_rank,
            } => format!(
                "{} (rank {smaller_rank}) <= {} (rank {larger_rank})",
                set(smaller),
                set(larger)
            ),
            PropertyWitness::NonMonogenicInside {
                generator,
                sub,
                rank,
            } => format!("{} has rank {rank} inside <{}>", set(sub), l(*generator)),
            PropertyWitness::IncomparableMonogenic { generator, x, y } => format!(
                "<{}>={} and <{}>={} incomparable inside <{}>",
                l(*x),
                set(alg.generated_by(*x)),
                l(*y),
                set(alg.generated_by(*y)),
                l(*generator)
            ),
            PropertyWitness::ElementOrder { element, order } => {
                format!("{} has order {order}", l(*element))
            }
            PropertyWitness::Exchange { closed, x, y } => format!(
                "S={}, x={}, y={}: y in <S,x> but x not in <S,y>",
                set(closed),
                l(*x),
                l(*y)
            ),
            PropertyWitness::BasisMap {
                basis,
                images,
                extensions,
            } => {
                let pairs: Vec<String> = basis
                    .iter()
                    .zip(images)
                    .map(|(&b, &y)| format!("{}->{}", l(b), l(y)))
                    .collect();
                format!("basis map {} has {extensions} extensions", pairs.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub witness: Option<PropertyWitness>,
}

impl PropertyVerdict {
    fn yes() -> Self {
        PropertyVerdict {
            holds: true,
            witness: None,
        }
    }

    fn no(w: PropertyWitness) -> Self {
        PropertyVerdict {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Where the group structure lives in an algebra that passes the group check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSignature {
    pub mul: usize,
    pub inv: usize,
    pub identity: usize,
}

/// Group check: exactly one binary, one unary and one nullary operation,
/// with the binary one associative, the constant a two-sided identity and
/// the unary one giving inverses.
pub fn group_signature(alg: &FiniteAlgebra) -> Option<GroupSignature> {
    let ops = alg.operations();
    if ops.len() != 3 {
        return None;
    }
    let find = |k: usize| ops.iter().position(|o| o.arity == k);
    let (mul, inv, one) = (find(2)?, find(1)?, find(0)?);
    let n = alg.size();
    let m = &ops[mul].table;
    let e = ops[one].table[0];
    let assoc = (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| m[m[x * n + y] * n + z] == m[x * n + m[y * n + z]]))
    });
    let ident = (0..n).all(|x| m[e * n + x] == x && m[x * n + e] == x);
    let inverse = (0..n).all(|x| {
        let i = ops[inv].table[x];
        m[x * n + i] == e && m[i * n + x] == e
    });
    (assoc && ident && inverse).then_some(GroupSignature {
        mul,
        inv,
        identity: e,
    })
}

fn is_prime_power(n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n has a divisor");
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

pub fn check_property(alg: &FiniteAlgebra, prop: Property, limits: &Limits) -> Result<PropertyVerdict> {
    match prop {
        Property::Monotonic => monotonic(alg, limits),
        Property::OneMonotonic => one_monotonic(alg, limits),
        Property::Mo => Ok(mo(alg)),
        Property::Eppo => {
            if group_signature(alg).is_none() {
                return Err(Error::input(format!("EPPO needs a group; {} is not one", alg.name())));
            }
            Ok(match (0..alg.size())
                .map(|x| (x, alg.generated_by(x).count_ones(..)))
                .find(|&(_, o)| !is_prime_power(o))
            {
                Some((element, order)) => {
                    PropertyVerdict::no(PropertyWitness::ElementOrder { element, order })
                }
                None => PropertyVerdict::yes(),
            })
        }
        Property::IndependenceAlgebra => independence_algebra(alg, limits),
    }
}

fn monotonic(alg: &FiniteAlgebra, limits: &Limits) -> Result<PropertyVerdict> {
    let lat = lattice_with_ranks(alg, limits)?;
    for a in &lat {
        for b in &lat {
            if a.members.is_subset(&b.members) && a.rank > b.rank {
                return Ok(PropertyVerdict::no(PropertyWitness::RankDrop {
                    smaller: a.members.clone(),
                    smaller_rank: a.rank.unwrap_or(0),
                    larger: b.members.clone(),
                    larger_rank: b.rank.unwrap_or(0),
                }));
            }
        }
    }
    Ok(PropertyVerdict::yes())
}

fn one_monotonic(alg: &FiniteAlgebra, limits: &Limits) -> Result<PropertyVerdict> {
    let lat = lattice_with_ranks(alg, limits)?;
    let e = alg.minimal_subalgebra();
    for z in 0..alg.size() {
        if e.contains(z) {
            continue;
        }
        let gz = alg.generated_by(z);
        for b in &lat {
            let trivial = b.members == *e || b.is_empty();
            if !trivial && b.members.is_subset(gz) && b.rank != Some(1) {
                return Ok(PropertyVerdict::no(PropertyWitness::NonMonogenicInside {
                    generator: z,
                    sub: b.members.clone(),
                    rank: b.rank.unwrap_or(0),
                }));
            }
        }
    }
    Ok(PropertyVerdict::yes())
}

fn mo(alg: &FiniteAlgebra) -> PropertyVerdict {
    let e = alg.minimal_subalgebra();
    let mono = alg.monogenic();
    for z in 0..alg.size() {
        if e.contains(z) {
            continue;
        }
        let inside: Vec<usize> = mono[z].difference(e).collect();
        for (i, &x) in inside.iter().enumerate() {
            for &y in &inside[i + 1..] {
                if !mono[x].is_subset(&mono[y]) && !mono[y].is_subset(&mono[x]) {
                    return PropertyVerdict::no(PropertyWitness::IncomparableMonogenic {
                        generator: z,
                        x,
                        y,
                    });
                }
            }
        }
    }
    PropertyVerdict::yes()
}

fn independence_algebra(alg: &FiniteAlgebra, limits: &Limits) -> Result<PropertyVerdict> {
    // <S ∪ {x}> = <<S> ∪ {x}>, so it suffices to let S range over subalgebras
    let lat = subalgebra_lattice(alg, limits)?;
    for b in &lat {
        let s = &b.members;
        for x in 0..alg.size() {
            if s.contains(x) {
                continue;
            }
            let with_x = alg.close_extending(s, [x]);
            for y in with_x.difference(s) {
                if !alg.close_extending(s, [y]).contains(x) {
                    return Ok(PropertyVerdict::no(PropertyWitness::Exchange {
                        closed: s.clone(),
                        x,
                        y,
                    }));
                }
            }
        }
    }
    let basis = minimum_generating_set(alg, limits)?;
    let n = alg.size();
    let total = u32::try_from(basis.len())
        .ok()
        .and_then(|r| n.checked_pow(r))
        .filter(|&t| t <= limits.endomorphism_nodes)
        .ok_or_else(|| Error::resource("basis maps", limits.endomorphism_nodes))?;
    let mut images = vec![0usize; basis.len()];
    for t in 0..total {
        let mut r = t;
        for im in images.iter_mut().rev() {
            *im = r % n;
            r /= n;
        }
        let extensions = count_extensions(alg, &basis, &images);
        if extensions != 1 {
            return Ok(PropertyVerdict::no(PropertyWitness::BasisMap {
                basis: basis.clone(),
                images: images.clone(),
                extensions,
            }));
        }
    }
    Ok(PropertyVerdict::yes())
}

/// Number of endomorphisms extending `basis[i] ↦ images[i]`. The basis
/// generates, so this is 0 or 1.
fn count_extensions(alg: &FiniteAlgebra, basis: &[usize], images: &[usize]) -> usize {
    let mut map = vec![usize::MAX; alg.size()];
    let mut order = Vec::new();
    let pairs = basis.iter().copied().zip(images.iter().copied()).collect();
    if !propagate(alg, &mut map, &mut order, pairs) || map.contains(&usize::MAX) {
        return 0;
    }
    usize::from(commutes(alg, &map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builders, members, BuilderSpec};

    fn build(s: &str) -> FiniteAlgebra {
        s.parse::<BuilderSpec>().unwrap().build().unwrap()
    }

    fn holds(s: &str, p: Property) -> bool {
        check_property(&build(s), p, &Limits::default()).unwrap().holds
    }

    #[test]
    fn one_monotonic_fails_on_x4_x5() {
        let a = build("monosg:4:1");
        let v = check_property(&a, Property::OneMonotonic, &Limits::default()).unwrap();
        assert!(!v.holds);
        match v.witness.unwrap() {
            PropertyWitness::NonMonogenicInside { generator, sub, rank } => {
                assert_eq!(a.label(generator), "x^1");
                assert_eq!(a.labels_of(&sub), ["x^2", "x^3", "x^4"]);
                assert_eq!(rank, 2);
            }
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(holds("cyclic:12", Property::OneMonotonic));
        assert!(holds("symmetric:4", Property::OneMonotonic));
    }

    #[test]
    fn mo_on_c6() {
        let a = build("cyclic:6");
        let v = check_property(&a, Property::Mo, &Limits::default()).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness.unwrap(),
            PropertyWitness::IncomparableMonogenic {
                generator: 1,
                x: 2,
                y: 3
            }
        );
        assert_eq!(members(a.generated_by(2)), vec![0, 2, 4]);
        assert_eq!(members(a.generated_by(3)), vec![0, 3]);
        assert!(holds("cyclic:8", Property::Mo));
        assert!(holds("symmetric:3", Property::Mo));
    }

    #[test]
    fn eppo() {
        assert!(holds("symmetric:3", Property::Eppo));
        assert!(holds("q8", Property::Eppo));
        assert!(!holds("cyclic:6", Property::Eppo));
        let v = check_property(&build("cyclic:6"), Property::Eppo, &Limits::default()).unwrap();
        assert_eq!(v.witness, Some(PropertyWitness::ElementOrder { element: 1, order: 6 }));
        let err = check_property(&build("volkov"), Property::Eppo, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn monotonic() {
        assert!(holds("elemab:2:3", Property::Monotonic));
        assert!(!holds("monosg:4:1", Property::Monotonic));
        // every proper subgroup of S4 has rank at most 2 = r(S4)
        assert!(holds("symmetric:4", Property::Monotonic));
    }

    #[test]
    fn independence_algebras() {
        assert!(holds("product:cyclic:2,cyclic:2", Property::IndependenceAlgebra));
        assert!(holds("elemab:3:2", Property::IndependenceAlgebra));
        assert!(holds("quasiunary:cyclic:4", Property::IndependenceAlgebra));
        assert!(!holds("cyclic:4", Property::IndependenceAlgebra));
        assert!(!holds("cyclic:6", Property::IndependenceAlgebra));

        let square: Vec<Vec<usize>> =
            (0..5).map(|x| (0..5).map(|y| (2 * x + 3 * y) % 5).collect()).collect();
        let q = builders::quasigroup_unary("Q1(affine5)", &square, None).unwrap();
        let v = check_property(&q, Property::IndependenceAlgebra, &Limits::default()).unwrap();
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(PropertyWitness::BasisMap { extensions: 0, .. })));
    }

    #[test]
    fn group_check() {
        assert!(group_signature(&build("dihedral:12")).is_some());
        assert!(group_signature(&build("volkov")).is_none());
        assert!(group_signature(&build("quasiunary:cyclic:3")).is_none());
    }
}
