//! Graphs and digraphs defined on the elements of an algebra.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{
    enumerate_endomorphisms, for_each_independent, generating_sets, subalgebra_lattice, Endomorphism,
    FiniteAlgebra, GeneratingMode,
};
use crate::error::{Error, Result};
use crate::graph::{complement_graph, edge_difference, Digraph, SimpleGraph};
use crate::limits::Limits;

/// The two readings of "x and y lie in a common cyclic subalgebra".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnhancedVariant {
    /// `<x, y>` is itself monogenic.
    Strict,
    /// `x, y ∈ <z>` for some `z`.
    #[default]
    Loose,
}

impl FromStr for EnhancedVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(EnhancedVariant::Strict),
            "loose" => Ok(EnhancedVariant::Loose),
            _ => Err(Error::input(format!("unknown enhanced variant {s:?} (expected strict or loose)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Power,
    Enhanced(EnhancedVariant),
    IntersectionPower,
    Generating,
    Independence,
    Rank,
    Endomorphism,
    /// Loose enhanced power graph minus the power graph.
    Difference,
}

impl GraphKind {
    pub const ALL: [&'static str; 8] = [
        "power",
        "enhanced",
        "intersection_power",
        "generating",
        "independence",
        "rank",
        "endomorphism",
        "difference",
    ];

    /// Applies an enhanced variant; rejected for any other kind.
    pub fn with_variant(self, v: EnhancedVariant) -> Result<Self> {
        match self {
            GraphKind::Enhanced(_) => Ok(GraphKind::Enhanced(v)),
            other => Err(Error::input(format!("--variant only applies to the enhanced graph, not {other}"))),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "power" => GraphKind::Power,
            "enhanced" => GraphKind::Enhanced(EnhancedVariant::Loose),
            "intersection_power" | "intersection" => GraphKind::IntersectionPower,
            "generating" => GraphKind::Generating,
            "independence" => GraphKind::Independence,
            "rank" => GraphKind::Rank,
            "endomorphism" => GraphKind::Endomorphism,
            "difference" => GraphKind::Difference,
            _ => {
                return Err(Error::input(format!(
                    "unknown graph kind {s:?} (expected one of {})",
                    GraphKind::ALL.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Power => f.write_str("power"),
            GraphKind::Enhanced(EnhancedVariant::Loose) => f.write_str("enhanced"),
            GraphKind::Enhanced(EnhancedVariant::Strict) => f.write_str("enhanced_strict"),
            GraphKind::IntersectionPower => f.write_str("intersection_power"),
            GraphKind::Generating => f.write_str("generating"),
            GraphKind::Independence => f.write_str("independence"),
            GraphKind::Rank => f.write_str("rank"),
            GraphKind::Endomorphism => f.write_str("endomorphism"),
            GraphKind::Difference => f.write_str("difference"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigraphKind {
    Power,
    Endomorphism,
}

impl FromStr for DigraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(DigraphKind::Power),
            "endomorphism" => Ok(DigraphKind::Endomorphism),
            _ => Err(Error::input(format!("unknown digraph kind {s:?} (expected power or endomorphism)"))),
        }
    }
}

fn empty_graph(alg: &FiniteAlgebra) -> Result<SimpleGraph> {
    SimpleGraph::new(alg.element_names().to_vec())
}

pub fn build_graph(alg: &FiniteAlgebra, kind: GraphKind, limits: &Limits) -> Result<SimpleGraph> {
    let n = alg.size();
    let mono = alg.monogenic();
    let mut g = empty_graph(alg)?;
    match kind {
        GraphKind::Power => {
            for (x, m) in mono.iter().enumerate() {
                for y in m.ones() {
                    g.add_edge(x, y);
                }
            }
        }
        GraphKind::Enhanced(EnhancedVariant::Loose) => {
            for m in distinct_monogenic(alg) {
                let m: Vec<usize> = m.ones().collect();
                for (i, &x) in m.iter().enumerate() {
                    for &y in &m[i + 1..] {
                        g.add_edge(x, y);
                    }
                }
            }
        }
        GraphKind::Enhanced(EnhancedVariant::Strict) => {
            let cyclic: HashSet<_> = distinct_monogenic(alg).into_iter().collect();
            for x in 0..n {
                for y in x + 1..n {
                    if cyclic.contains(&alg.close([x, y])) {
                        g.add_edge(x, y);
                    }
                }
            }
        }
        GraphKind::IntersectionPower => {
            let e = alg.minimal_subalgebra();
            let e_size = e.count_ones(..);
            for x in 0..n {
                for y in x + 1..n {
                    let joined = e.contains(x)
                        || e.contains(y)
                        || mono[x].intersection_count(&mono[y]) > e_size;
                    if joined {
                        g.add_edge(x, y);
                    }
                }
            }
        }
        GraphKind::Generating => {
            let full = alg.full_set();
            for x in 0..n {
                for y in x + 1..n {
                    if alg.close([x, y]) == full {
                        g.add_edge(x, y);
                    }
                }
            }
        }
        GraphKind::Independence => {
            let full = alg.full_set();
            for_each_independent(alg, limits.max_simplex, limits, &mut |set, closed| {
                if *closed == full {
                    for (i, &x) in set.iter().enumerate() {
                        for &y in &set[i + 1..] {
                            g.add_edge(x, y);
                        }
                    }
                }
                Ok(())
            })?;
        }
        GraphKind::Rank => {
            for s in generating_sets(alg, GeneratingMode::Minimum, limits)? {
                let s: Vec<usize> = s.ones().collect();
                for (i, &x) in s.iter().enumerate() {
                    for &y in &s[i + 1..] {
                        g.add_edge(x, y);
                    }
                }
            }
        }
        GraphKind::Endomorphism => {
            return Ok(build_digraph(alg, DigraphKind::Endomorphism, limits)?.underlying());
        }
        GraphKind::Difference => {
            let enhanced = build_graph(alg, GraphKind::Enhanced(EnhancedVariant::Loose), limits)?;
            let power = build_graph(alg, GraphKind::Power, limits)?;
            return edge_difference(&enhanced, &power);
        }
    }
    Ok(g)
}

fn distinct_monogenic(alg: &FiniteAlgebra) -> Vec<crate::ElemSet> {
    let mut seen = HashSet::new();
    alg.monogenic()
        .iter()
        .filter(|m| seen.insert(*m))
        .cloned()
        .collect()
}

pub fn build_digraph(alg: &FiniteAlgebra, kind: DigraphKind, limits: &Limits) -> Result<Digraph> {
    match kind {
        DigraphKind::Power => power_digraph(alg),
        DigraphKind::Endomorphism => {
            let ends = enumerate_endomorphisms(alg, limits)?;
            endomorphism_digraph(alg, &ends)
        }
    }
}

fn power_digraph(alg: &FiniteAlgebra) -> Result<Digraph> {
    let mut d = Digraph::new(alg.element_names().to_vec())?;
    for (x, m) in alg.monogenic().iter().enumerate() {
        for y in m.ones() {
            d.add_arc(x, y);
        }
    }
    Ok(d)
}

pub(crate) fn endomorphism_digraph(alg: &FiniteAlgebra, ends: &[Endomorphism]) -> Result<Digraph> {
    let mut d = Digraph::new(alg.element_names().to_vec())?;
    for f in ends {
        for (x, &y) in f.images.iter().enumerate() {
            d.add_arc(x, y);
        }
    }
    Ok(d)
}

/// Elements `a` of the algebra that are zero-divisors of the poset obtained
/// by ordering elements by reverse inclusion of their monogenic subalgebras
/// and adjoining a bottom element.
pub fn zero_divisors(alg: &FiniteAlgebra) -> Vec<usize> {
    let g = zero_divisor_graph(alg);
    (0..alg.size()).filter(|&a| g.degree(a) > 0).collect()
}

/// Graph on all elements joining `a, b` when their only common lower bound
/// in the poset is the adjoined bottom. Non-zero-divisors are isolated.
pub fn zero_divisor_graph(alg: &FiniteAlgebra) -> SimpleGraph {
    let n = alg.size();
    let mono = alg.monogenic();
    // Poset on 0..n plus the bottom n: c ≤ a iff <c> ⊇ <a>, bottom below all.
    let bottom = n;
    let le = |c: usize, a: usize| c == bottom || (a != bottom && mono[a].is_subset(&mono[c]));
    let mut g = SimpleGraph::new(alg.element_names().to_vec()).expect("algebra labels are distinct");
    for a in 0..n {
        for b in a + 1..n {
            let only_bottom = (0..=n).filter(|&c| le(c, a) && le(c, b)).all(|c| c == bottom);
            if only_bottom {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// One endomorphism's relation to power maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerMapStatus {
    pub images: Vec<String>,
    /// `f(x) ∈ <x>` for every `x`.
    pub elementwise: bool,
    /// Some `k ≥ 1` with `f(x) = x^k` for all `x`; `None` when the algebra has
    /// no unique binary operation to take powers in.
    pub global_exponent: Option<Option<usize>>,
}

impl PowerMapStatus {
    pub fn is_global_power_map(&self) -> bool {
        matches!(self.global_exponent, Some(Some(_)))
    }
}

/// An arc present in exactly one of the two digraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcDifference {
    pub from: String,
    pub to: String,
    pub in_power: bool,
    pub in_endomorphism: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigraphEqualityReport {
    pub graphs_equal: bool,
    pub digraphs_equal: bool,
    pub fully_invariant_all: bool,
    pub first_difference: Option<ArcDifference>,
    /// A subalgebra moved outside itself by some endomorphism.
    pub non_invariant: Option<Vec<String>>,
    pub power_maps: Vec<PowerMapStatus>,
}

pub fn digraph_equality_report(alg: &FiniteAlgebra, limits: &Limits) -> Result<DigraphEqualityReport> {
    let ends = enumerate_endomorphisms(alg, limits)?;
    let power = power_digraph(alg)?;
    let endo = endomorphism_digraph(alg, &ends)?;
    let first_difference = (0..alg.size())
        .flat_map(|x| (0..alg.size()).map(move |y| (x, y)))
        .find(|&(x, y)| power.has_arc(x, y) != endo.has_arc(x, y))
        .map(|(x, y)| ArcDifference {
            from: alg.label(x).to_string(),
            to: alg.label(y).to_string(),
            in_power: power.has_arc(x, y),
            in_endomorphism: endo.has_arc(x, y),
        });

    let mut non_invariant = None;
    'outer: for b in subalgebra_lattice(alg, limits)? {
        for f in &ends {
            if b.members.ones().any(|x| !b.members.contains(f.images[x])) {
                non_invariant = Some(alg.labels_of(&b.members));
                break 'outer;
            }
        }
    }

    let exponents = power_sequence(alg);
    let mono = alg.monogenic();
    let power_maps = ends
        .iter()
        .map(|f| PowerMapStatus {
            images: f.images.iter().map(|&y| alg.label(y).to_string()).collect(),
            elementwise: f.images.iter().enumerate().all(|(x, &y)| mono[x].contains(y)),
            global_exponent: exponents
                .as_ref()
                .map(|seq| seq.iter().position(|p| *p == f.images).map(|i| i + 1)),
        })
        .collect();

    Ok(DigraphEqualityReport {
        graphs_equal: power.underlying() == endo.underlying(),
        digraphs_equal: first_difference.is_none(),
        fully_invariant_all: non_invariant.is_none(),
        first_difference,
        non_invariant,
        power_maps,
    })
}

// The maps x ↦ x^k for k = 1, 2, ... up to the point where the sequence of
// maps starts repeating: past the largest index it is periodic with period
// the lcm of the element periods.
fn power_sequence(alg: &FiniteAlgebra) -> Option<Vec<Vec<usize>>> {
    const MAX_EXPONENT: usize = 1 << 16;
    let op = &alg.operations()[alg.sole_binary()?];
    let n = alg.size();
    let mut max_index = 1;
    let mut lcm = 1usize;
    for x in 0..n {
        let mut seen = vec![0usize; n];
        let mut cur = x;
        let mut k = 1;
        while seen[cur] == 0 {
            seen[cur] = k;
            cur = op.table[cur * n + x];
            k += 1;
        }
        let (index, period) = (seen[cur], k - seen[cur]);
        max_index = max_index.max(index);
        lcm = lcm / gcd(lcm, period) * period;
        if lcm > MAX_EXPONENT {
            lcm = MAX_EXPONENT;
        }
    }
    let bound = (max_index + lcm).min(MAX_EXPONENT);
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(bound);
    for _ in 0..bound {
        out.push(cur.clone());
        for (x, c) in cur.iter_mut().enumerate() {
            *c = op.table[*c * n + x];
        }
    }
    Some(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Zero-divisor graph compared with the complement of the loose enhanced
/// power graph: equal on the zero-divisors, and every other element isolated
/// in both.
pub fn zero_divisor_matches_enhanced(alg: &FiniteAlgebra, limits: &Limits) -> Result<bool> {
    let zd = zero_divisor_graph(alg);
    let co = complement_graph(&build_graph(alg, GraphKind::Enhanced(EnhancedVariant::Loose), limits)?);
    Ok(zd == co)
}
