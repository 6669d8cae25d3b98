//! Verification suites run over catalogs of small algebras.
//!
//! Each suite turns a structural statement into per-algebra claims. A claim
//! either holds or fails with a witness naming the offending elements.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    check_property, enumerate_endomorphisms, group_signature, is_independent, lattice_with_ranks, rank_of,
    subalgebra_lattice, FiniteAlgebra, Property, PropertyVerdict,
};
use crate::algebra_graphs::{
    build_digraph, build_graph, endomorphism_digraph, zero_divisor_graph, DigraphKind, EnhancedVariant, GraphKind,
};
use crate::catalog::{a5, group_catalog, independence_family, semigroup_catalog, MAX_SEMIGROUP_ORDER};
use crate::classes::{classify, clique_number, chromatic_number, matching_number, spread, ClassWitness, GraphClass, InvariantValue};
use crate::complexes::{build_complex, is_matroid, is_strongly_independent, one_skeleton, ComplexKind};
use crate::error::{Error, Result};
use crate::graph::{complement_graph, induced_subgraph, SimpleGraph};
use crate::limits::Limits;

/// Default largest group order when none is given.
pub const DEFAULT_GROUP_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Spanning,
    P4Lemma,
    EqualityCographChordal,
    CographImpliesChordal,
    MoEquivalence,
    PerfectPower,
    WeaklyPerfectEnhanced,
    MatchingEquality,
    DigraphEquality,
    ZeroDivisor,
    Skeleton,
    Sunflower,
    /// Generating graph of A5 without its identity; needs `include_a5`.
    Spread,
    All,
}

impl Suite {
    /// Every suite except `All`, in run order.
    pub const EACH: [Suite; 13] = [
        Suite::Spanning,
        Suite::P4Lemma,
        Suite::EqualityCographChordal,
        Suite::CographImpliesChordal,
        Suite::MoEquivalence,
        Suite::PerfectPower,
        Suite::WeaklyPerfectEnhanced,
        Suite::MatchingEquality,
        Suite::DigraphEquality,
        Suite::ZeroDivisor,
        Suite::Skeleton,
        Suite::Sunflower,
        Suite::Spread,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Spanning => "spanning",
            Suite::P4Lemma => "p4_lemma",
            Suite::EqualityCographChordal => "equality_cograph_chordal",
            Suite::CographImpliesChordal => "cograph_implies_chordal",
            Suite::MoEquivalence => "mo_equivalence",
            Suite::PerfectPower => "perfect_power",
            Suite::WeaklyPerfectEnhanced => "weakly_perfect_enhanced",
            Suite::MatchingEquality => "matching_equality",
            Suite::DigraphEquality => "digraph_equality",
            Suite::ZeroDivisor => "zero_divisor",
            Suite::Skeleton => "skeleton",
            Suite::Sunflower => "sunflower",
            Suite::Spread => "spread",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::input(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Groups,
    Semigroups,
    Independence,
    All,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "groups" => Ok(Family::Groups),
            "semigroups" => Ok(Family::Semigroups),
            "independence" => Ok(Family::Independence),
            "all" => Ok(Family::All),
            _ => Err(Error::input(format!(
                "unknown family {s:?} (expected groups, semigroups, independence or all)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Groups => "groups",
            Family::Semigroups => "semigroups",
            Family::Independence => "independence",
            Family::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSpec {
    pub suite: Suite,
    pub family: Family,
    /// Largest group order (default 24); semigroups stop at order 3. The
    /// independence family is fixed and ignores it.
    pub max_order: Option<usize>,
    pub include_a5: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub algebra: String,
    pub suite: Suite,
    pub claim: String,
    pub passed: bool,
    /// Always present on failures. On passes it may carry evidence, such as
    /// the arc separating two digraphs that are claimed to differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub family: Family,
    pub algebras: usize,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.passed)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A catalog algebra, with the expected independence-algebra verdict for
/// members of the independence family.
#[derive(Debug, Clone)]
pub struct Member {
    pub algebra: FiniteAlgebra,
    pub expected_independence: Option<bool>,
}

/// Algebras of `family`, one per name.
pub fn population(family: Family, max_order: Option<usize>) -> Result<Vec<Member>> {
    let plain = |v: Vec<FiniteAlgebra>| {
        v.into_iter().map(|algebra| Member {
            algebra,
            expected_independence: None,
        })
    };
    let independence = || -> Result<Vec<Member>> {
        Ok(independence_family()?
            .into_iter()
            .map(|c| Member {
                algebra: c.algebra,
                expected_independence: Some(c.expected),
            })
            .collect())
    };
    let mut by_name: BTreeMap<String, Member> = BTreeMap::new();
    let mut add = |m: Member| {
        by_name
            .entry(m.algebra.name().to_string())
            .and_modify(|old| old.expected_independence = old.expected_independence.or(m.expected_independence))
            .or_insert(m);
    };
    match family {
        Family::Groups => plain(group_catalog(max_order.unwrap_or(DEFAULT_GROUP_ORDER))?).for_each(&mut add),
        Family::Semigroups => plain(semigroup_catalog(max_order.unwrap_or(MAX_SEMIGROUP_ORDER))?).for_each(&mut add),
        Family::Independence => independence()?.into_iter().for_each(&mut add),
        Family::All => {
            let groups = max_order.unwrap_or(DEFAULT_GROUP_ORDER);
            plain(group_catalog(groups)?).for_each(&mut add);
            plain(semigroup_catalog(groups.min(MAX_SEMIGROUP_ORDER))?).for_each(&mut add);
            independence()?.into_iter().for_each(&mut add);
        }
    }
    Ok(by_name.into_values().collect())
}

/// Runs `spec` over its population; members are checked in parallel and the
/// report lists instances sorted by algebra name.
pub fn run_suite(spec: &SuiteSpec, limits: &Limits) -> Result<VerificationReport> {
    if spec.suite == Suite::Spread && !spec.include_a5 {
        return Err(Error::input("the spread suite runs on A5 only; pass include_a5"));
    }
    let suites: Vec<Suite> = match spec.suite {
        Suite::All => Suite::EACH.into_iter().filter(|&s| s != Suite::Spread).collect(),
        Suite::Spread => Vec::new(),
        s => vec![s],
    };
    let members = if suites.is_empty() {
        Vec::new()
    } else {
        population(spec.family, spec.max_order)?
    };
    let algebras = members.len();
    let per_member: Vec<Vec<Instance>> = members
        .par_iter()
        .map(|m| verify_algebra(&m.algebra, &suites, m.expected_independence, limits))
        .collect::<Result<_>>()?;
    let mut instances: Vec<Instance> = per_member.into_iter().flatten().collect();
    let mut algebras = algebras;
    if spec.include_a5 && matches!(spec.suite, Suite::Spread | Suite::All) {
        instances.push(spread_instance(limits)?);
        algebras += 1;
    }
    instances.sort_by(|a, b| a.algebra.cmp(&b.algebra));
    let passed = instances.iter().filter(|i| i.passed).count();
    Ok(VerificationReport {
        suite: spec.suite,
        family: spec.family,
        algebras,
        summary: Summary {
            total: instances.len(),
            passed,
            failed: instances.len() - passed,
        },
        instances,
    })
}

/// Runs `suites` on one algebra. `Spread` and `All` entries are ignored;
/// `expected_independence` adds the independence-algebra verdict claim.
pub fn verify_algebra(
    alg: &FiniteAlgebra,
    suites: &[Suite],
    expected_independence: Option<bool>,
    limits: &Limits,
) -> Result<Vec<Instance>> {
    let member = Member {
        algebra: alg.clone(),
        expected_independence,
    };
    let mut ctx = Ctx::new(&member, limits)?;
    for &s in suites {
        ctx.run(s)?;
    }
    Ok(ctx.out)
}

fn spread_instance(limits: &Limits) -> Result<Instance> {
    let alg = a5()?;
    let g = build_graph(&alg, GraphKind::Generating, limits)?;
    let identity = group_signature(&alg).expect("A5 is a group").identity;
    let rest: Vec<usize> = (0..alg.size()).filter(|&x| x != identity).collect();
    let h = induced_subgraph(&g, &rest)?;
    let s = spread(&h, limits)?;
    let value = match s {
        InvariantValue::Exact(v) | InvariantValue::AtLeast(v) => v,
        InvariantValue::Infinite => usize::MAX,
    };
    let passed = value >= 2;
    Ok(Instance {
        algebra: alg.name().to_string(),
        suite: Suite::Spread,
        claim: format!("generating graph without the identity has spread at least 2 (spread {s})"),
        passed,
        witness: (!passed).then(|| format!("spread {s}")),
    })
}

struct Ctx<'a> {
    alg: &'a FiniteAlgebra,
    expected_independence: Option<bool>,
    limits: &'a Limits,
    is_group: bool,
    power: SimpleGraph,
    enhanced: SimpleGraph,
    intersection: SimpleGraph,
    suite: Suite,
    out: Vec<Instance>,
}

impl<'a> Ctx<'a> {
    fn new(m: &'a Member, limits: &'a Limits) -> Result<Self> {
        let alg = &m.algebra;
        Ok(Ctx {
            alg,
            expected_independence: m.expected_independence,
            limits,
            is_group: group_signature(alg).is_some(),
            power: build_graph(alg, GraphKind::Power, limits)?,
            enhanced: build_graph(alg, GraphKind::Enhanced(EnhancedVariant::Loose), limits)?,
            intersection: build_graph(alg, GraphKind::IntersectionPower, limits)?,
            suite: Suite::All,
            out: Vec::new(),
        })
    }

    fn record(&mut self, claim: impl Into<String>, passed: bool, witness: Option<String>) {
        debug_assert!(passed || witness.is_some(), "failures carry a witness");
        self.out.push(Instance {
            algebra: self.alg.name().to_string(),
            suite: self.suite,
            claim: claim.into(),
            passed,
            witness,
        });
    }

    /// Passes when `failure` is `None`.
    fn check(&mut self, claim: impl Into<String>, failure: Option<String>) {
        self.record(claim, failure.is_none(), failure);
    }

    fn pair(&self, (u, v): (usize, usize)) -> String {
        format!("{{{},{}}}", self.alg.label(u), self.alg.label(v))
    }

    fn labels(&self, xs: &[usize]) -> String {
        let l: Vec<&str> = xs.iter().map(|&x| self.alg.label(x)).collect();
        format!("({})", l.join(","))
    }

    fn missing_edge(&self, sub: &SimpleGraph, sup: &SimpleGraph) -> Option<String> {
        sub.edges()
            .into_iter()
            .find(|&(u, v)| !sup.has_edge(u, v))
            .map(|e| format!("edge {} missing", self.pair(e)))
    }

    fn graph_difference(&self, a: &SimpleGraph, b: &SimpleGraph) -> Option<String> {
        let n = a.order();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| a.has_edge(u, v) != b.has_edge(u, v))
            .map(|(u, v)| format!("pair {} is an edge of only one graph", self.pair((u, v))))
    }

    fn class_failure(&self, w: &ClassWitness) -> Option<String> {
        (!w.verdict).then(|| match (&w.configuration, &w.witness) {
            (Some(c), Some(v)) => format!("{} on {}", c, self.labels(v)),
            _ => format!("not {}", w.class),
        })
    }

    fn property_failure(&self, v: &PropertyVerdict) -> Option<String> {
        v.witness.as_ref().map(|w| w.describe(self.alg))
    }

    fn run(&mut self, suite: Suite) -> Result<()> {
        self.suite = suite;
        match suite {
            Suite::Spanning => self.spanning(),
            Suite::P4Lemma => {
                self.p4_lemma();
                Ok(())
            }
            Suite::EqualityCographChordal => self.equality_cograph_chordal(),
            Suite::CographImpliesChordal => self.cograph_implies_chordal(),
            Suite::MoEquivalence => self.mo_equivalence(),
            Suite::PerfectPower => self.perfect_power(),
            Suite::WeaklyPerfectEnhanced => self.weakly_perfect_enhanced(),
            Suite::MatchingEquality => self.matching_equality(),
            Suite::DigraphEquality => self.digraph_equality(),
            Suite::ZeroDivisor => {
                self.zero_divisor();
                Ok(())
            }
            Suite::Skeleton => self.skeleton(),
            Suite::Sunflower => self.sunflower(),
            Suite::Spread | Suite::All => Ok(()),
        }
    }

    fn spanning(&mut self) -> Result<()> {
        let independence = build_graph(self.alg, GraphKind::Independence, self.limits)?;
        let rank = build_graph(self.alg, GraphKind::Rank, self.limits)?;
        let co_power = complement_graph(&self.power);
        let co_enhanced = complement_graph(&self.enhanced);
        let checks = [
            ("power is a spanning subgraph of enhanced", &self.power, &self.enhanced),
            ("power is a spanning subgraph of intersection_power", &self.power, &self.intersection),
            ("independence is a spanning subgraph of complement(power)", &independence, &co_power),
            ("rank is a spanning subgraph of complement(enhanced)", &rank, &co_enhanced),
        ];
        let results: Vec<_> = checks.iter().map(|(c, sub, sup)| (*c, self.missing_edge(sub, sup))).collect();
        for (claim, failure) in results {
            self.check(claim, failure);
        }
        Ok(())
    }

    fn p4_lemma(&mut self) {
        let (p, e, i) = (&self.power, &self.enhanced, &self.intersection);
        let mut paths = 0usize;
        let mut failure = None;
        for (b, c) in p.edges() {
            for (b, c) in [(b, c), (c, b)] {
                let mut left = p.neighbors(b).clone();
                left.difference_with(p.neighbors(c));
                left.set(c, false);
                let mut right = p.neighbors(c).clone();
                right.difference_with(p.neighbors(b));
                right.set(b, false);
                for a in left.ones() {
                    for d in right.ones().filter(|&d| !p.has_edge(a, d)) {
                        paths += 1;
                        let ok = (e.has_edge(a, c) && i.has_edge(b, d)) || (e.has_edge(b, d) && i.has_edge(a, c));
                        if !ok && failure.is_none() {
                            failure = Some(format!("induced path {}", self.labels(&[a, b, c, d])));
                        }
                    }
                }
            }
        }
        self.check(
            format!(
                "each induced P4 (a,b,c,d) of power has one of {{a,c}}, {{b,d}} in enhanced and the other in intersection_power ({paths} ordered paths)"
            ),
            failure,
        );
    }

    fn equality_cograph_chordal(&mut self) -> Result<()> {
        let eq_enhanced = self.power == self.enhanced;
        let eq_intersection = self.power == self.intersection;
        if !eq_enhanced && !eq_intersection {
            self.check("power differs from enhanced and intersection_power (premise fails)", None);
            return Ok(());
        }
        let which = match (eq_enhanced, eq_intersection) {
            (true, true) => "enhanced = intersection_power",
            (true, false) => "enhanced",
            _ => "intersection_power",
        };
        let cograph = classify(&self.power, GraphClass::Cograph, self.limits)?;
        let chordal = classify(&self.power, GraphClass::Chordal, self.limits)?;
        let failure = self.class_failure(&cograph).or_else(|| self.class_failure(&chordal));
        self.check(format!("power = {which}, so power is a cograph and chordal"), failure);
        Ok(())
    }

    fn cograph_implies_chordal(&mut self) -> Result<()> {
        for (name, g) in [("enhanced", self.enhanced.clone()), ("intersection_power", self.intersection.clone())] {
            if !classify(&g, GraphClass::Cograph, self.limits)?.verdict {
                self.check(format!("{name} is not a cograph (premise fails)"), None);
                continue;
            }
            let chordal = classify(&g, GraphClass::Chordal, self.limits)?;
            let failure = self.class_failure(&chordal);
            self.check(format!("{name} is a cograph, so it is chordal"), failure);
        }
        Ok(())
    }

    fn mo_equivalence(&mut self) -> Result<()> {
        let equal = self.power == self.enhanced;
        let difference = self.graph_difference(&self.power, &self.enhanced);
        let mut props = vec![("MO", Property::Mo)];
        if self.is_group {
            props.push(("EPPO", Property::Eppo));
        }
        for (name, prop) in props {
            let v = check_property(self.alg, prop, self.limits)?;
            let claim = format!("power = enhanced ({equal}) iff {name} ({})", v.holds);
            if equal == v.holds {
                self.record(claim, true, difference.clone());
            } else {
                let w = self.property_failure(&v).or_else(|| difference.clone());
                self.check(claim, w.or_else(|| Some("verdicts disagree".into())));
            }
        }
        Ok(())
    }

    fn perfect_power(&mut self) -> Result<()> {
        let w = classify(&self.power, GraphClass::Perfect, self.limits)?;
        let failure = self.class_failure(&w);
        self.check("power is perfect", failure);

        let mono = self.alg.monogenic();
        let n = self.alg.size();
        let failure = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let comparable = mono[x].is_subset(&mono[y]) || mono[y].is_subset(&mono[x]);
                comparable != self.power.has_edge(x, y)
            })
            .map(|e| format!("pair {}", self.pair(e)));
        self.check("power is the comparability graph of <x> ⊆ <y>", failure);
        Ok(())
    }

    fn weakly_perfect_enhanced(&mut self) -> Result<()> {
        if !self.is_group {
            return Ok(());
        }
        let omega = clique_number(&self.enhanced, self.limits)?;
        let chi = chromatic_number(&self.enhanced, self.limits)?;
        self.check(
            format!("enhanced has clique number = chromatic number ({omega}, {chi})"),
            (omega != chi).then(|| format!("clique number {omega}, chromatic number {chi}")),
        );
        Ok(())
    }

    fn matching_equality(&mut self) -> Result<()> {
        if !self.is_group {
            return Ok(());
        }
        let p = matching_number(&self.power, self.limits)?;
        let e = matching_number(&self.enhanced, self.limits)?;
        self.check(
            format!("power and enhanced have equal matching numbers ({p}, {e})"),
            (p != e).then(|| format!("power {p}, enhanced {e}")),
        );
        Ok(())
    }

    fn digraph_equality(&mut self) -> Result<()> {
        let alg = self.alg;
        let n = alg.size();
        let ends = enumerate_endomorphisms(alg, self.limits)?;
        let pd = build_digraph(alg, DigraphKind::Power, self.limits)?;
        let ed = endomorphism_digraph(alg, &ends)?;
        let arc = |x: usize, y: usize| format!("{}->{}", alg.label(x), alg.label(y));
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
        let arc_difference = pairs.iter().find(|&&(x, y)| pd.has_arc(x, y) != ed.has_arc(x, y)).map(|&(x, y)| {
            let side = if pd.has_arc(x, y) { "power" } else { "endomorphism" };
            format!("arc {} only in the {side} digraph", arc(x, y))
        });
        let graphs_equal = pd.underlying() == ed.underlying();
        let digraphs_equal = arc_difference.is_none();

        let claim = format!("power graph = endomorphism graph ({graphs_equal}) iff the digraphs are equal ({digraphs_equal})");
        if graphs_equal == digraphs_equal {
            self.record(claim, true, arc_difference.clone());
        } else {
            self.check(claim, arc_difference.clone());
        }

        let failure = pairs.iter().filter(|&&(x, y)| x < y).find_map(|&(x, y)| {
            let joined = |d: &crate::graph::Digraph| d.has_arc(x, y) || d.has_arc(y, x);
            let same = (pd.has_arc(x, y), pd.has_arc(y, x)) == (ed.has_arc(x, y), ed.has_arc(y, x));
            (joined(&pd) && joined(&ed) && !same).then(|| format!("pair {}", self.pair((x, y))))
        });
        self.check("pairs joined in both graphs carry the same arcs in both digraphs", failure);

        let stray = pairs.iter().find(|&&(x, y)| ed.has_arc(x, y) && !pd.has_arc(x, y)).copied();
        let mut non_invariant = None;
        'outer: for b in subalgebra_lattice(alg, self.limits)? {
            for f in &ends {
                if let Some(x) = b.members.ones().find(|&x| !b.members.contains(f.images[x])) {
                    non_invariant = Some(format!(
                        "subalgebra {{{}}} sends {} outside itself",
                        alg.labels_of(&b.members).join(","),
                        arc(x, f.images[x])
                    ));
                    break 'outer;
                }
            }
        }
        let contained = stray.is_none();
        let invariant = non_invariant.is_none();
        let claim = format!(
            "endomorphism digraph inside power digraph ({contained}) iff every subalgebra is fully invariant ({invariant})"
        );
        let evidence = stray.map(|(x, y)| format!("arc {} not in the power digraph", arc(x, y))).or(non_invariant);
        if contained == invariant {
            self.record(claim, true, evidence);
        } else {
            self.check(claim, evidence.or_else(|| Some("verdicts disagree".into())));
        }

        if self.is_group {
            let full = alg.full_set();
            let cyclic = alg.monogenic().contains(&full);
            let claim = format!("power digraph = endomorphism digraph ({digraphs_equal}) iff cyclic ({cyclic})");
            if digraphs_equal == cyclic {
                self.record(claim, true, arc_difference);
            } else {
                let w = arc_difference.unwrap_or_else(|| "digraphs equal on a non-cyclic group".into());
                self.check(claim, Some(w));
            }
        }
        Ok(())
    }

    fn zero_divisor(&mut self) {
        let zd = zero_divisor_graph(self.alg);
        let co = complement_graph(&self.enhanced);
        let divisors = (0..zd.order()).filter(|&v| zd.degree(v) > 0).count();
        let failure = self.graph_difference(&zd, &co);
        self.check(
            format!("zero-divisor graph = complement(enhanced), non-zero-divisors isolated ({divisors} zero-divisors)"),
            failure,
        );
    }

    fn skeleton(&mut self) -> Result<()> {
        let alg = self.alg;
        let ind = build_complex(alg, ComplexKind::Independence, self.limits)?;
        let strong = build_complex(alg, ComplexKind::StrongIndependence, self.limits)?;
        let ground = ind.ground().to_vec();
        for (claim, complex, graph) in [
            ("independence 1-skeleton = complement(power) on A minus E(A)", &ind, self.power.clone()),
            ("strong 1-skeleton = complement(enhanced) on A minus E(A)", &strong, self.enhanced.clone()),
        ] {
            let want = induced_subgraph(&complement_graph(&graph), &ground)?;
            let got = one_skeleton(complex);
            let failure = (0..ground.len())
                .flat_map(|i| (i + 1..ground.len()).map(move |j| (i, j)))
                .find(|&(i, j)| want.has_edge(i, j) != got.has_edge(i, j))
                .map(|(i, j)| format!("pair {}", self.pair((ground[i], ground[j]))));
            self.check(claim, failure);
        }

        let strong_simplices = strong.simplices();
        let failure = strong_simplices
            .iter()
            .find(|s| !ind.contains(s))
            .map(|s| format!("strongly independent {} is not independent", self.labels(s)));
        self.check("strong independence complex inside independence complex", failure);

        let failure = ind
            .simplices()
            .into_iter()
            .find(|s| !is_independent(alg, s))
            .map(|s| format!("face {} is dependent", self.labels(&s)));
        self.check("every face of the independence complex is independent", failure);

        let lattice = lattice_with_ranks(alg, self.limits)?;
        let failure = strong_simplices
            .iter()
            .find(|s| !is_strongly_independent(alg, &lattice, s))
            .map(|s| format!("face {} is not strongly independent", self.labels(s)));
        self.check("every face of the strong independence complex is strongly independent", failure);
        Ok(())
    }

    fn sunflower(&mut self) -> Result<()> {
        let alg = self.alg;
        let verdict = check_property(alg, Property::IndependenceAlgebra, self.limits)?;
        if let Some(expected) = self.expected_independence {
            let claim = format!("independence-algebra check returns {expected}");
            let described = self.property_failure(&verdict);
            if verdict.holds == expected {
                self.record(claim, true, described);
            } else {
                self.check(claim, described.or_else(|| Some("check passed unexpectedly".into())));
            }
        }
        if !verdict.holds {
            if self.expected_independence.is_none() {
                self.check("not an independence algebra (premise fails)", None);
            }
            return Ok(());
        }

        let failure = self
            .graph_difference(&self.power, &self.enhanced)
            .or_else(|| self.graph_difference(&self.power, &self.intersection));
        self.check("power = enhanced = intersection_power", failure);

        let e = alg.minimal_subalgebra();
        let mut petals: Vec<_> = alg.monogenic().to_vec();
        petals.sort_by_key(|m| m.ones().collect::<Vec<_>>());
        petals.dedup();
        let mut failure = None;
        'petals: for (i, p) in petals.iter().enumerate() {
            for q in &petals[i + 1..] {
                let mut meet = p.clone();
                meet.intersect_with(q);
                if meet != *e {
                    failure = Some(format!(
                        "<x> = {{{}}} and {{{}}} meet outside E(A)",
                        alg.labels_of(p).join(","),
                        alg.labels_of(q).join(",")
                    ));
                    break 'petals;
                }
            }
        }
        let mut union = SimpleGraph::new(alg.element_names().to_vec())?;
        for p in &petals {
            let v: Vec<usize> = p.ones().collect();
            for (i, &x) in v.iter().enumerate() {
                for &y in &v[i + 1..] {
                    union.add_edge(x, y);
                }
            }
        }
        let failure = failure.or_else(|| self.graph_difference(&self.power, &union));
        self.check("power is a union of cliques on the sets <x>, pairwise meeting in E(A)", failure);

        let ind = build_complex(alg, ComplexKind::Independence, self.limits)?;
        let strong = build_complex(alg, ComplexKind::StrongIndependence, self.limits)?;
        let failure = (ind != strong).then(|| {
            let only = ind.simplices().into_iter().find(|s| !strong.contains(s)).unwrap_or_default();
            format!("simplex {} is independent but not strongly independent", self.labels(&only))
        });
        self.check("independence complex = strong independence complex", failure);
        let m = is_matroid(&ind);
        let failure = m
            .witness
            .map(|(i, j)| format!("I = {}, J = {} violate exchange", self.labels(&i), self.labels(&j)));
        self.check("independence complex is a matroid", failure);

        let independence = build_graph(alg, GraphKind::Independence, self.limits)?;
        let rank = build_graph(alg, GraphKind::Rank, self.limits)?;
        let co_power = complement_graph(&self.power);
        let failure = self
            .graph_difference(&independence, &rank)
            .or_else(|| self.graph_difference(&independence, &co_power));
        self.check("independence = rank = complement(power)", failure);

        let r = rank_of(alg, &alg.full_set(), self.limits)?;
        let generating = build_graph(alg, GraphKind::Generating, self.limits)?;
        let mut want = SimpleGraph::new(alg.element_names().to_vec())?;
        // Rank 0 means E(A) = A, where every pair generates.
        if r == 0 {
            want = SimpleGraph::complete(alg.size())?.relabeled(alg.element_names().to_vec())?;
        } else if r == 2 {
            want = independence.clone();
        } else if r == 1 {
            let n = alg.size();
            for x in 0..n {
                for y in x + 1..n {
                    if !(e.contains(x) && e.contains(y)) {
                        want.add_edge(x, y);
                    }
                }
            }
        }
        let failure = self.graph_difference(&generating, &want);
        self.check(format!("generating graph matches rank {r}"), failure);

        let ends = enumerate_endomorphisms(alg, self.limits)?;
        let ed = endomorphism_digraph(alg, &ends)?;
        let n = alg.size();
        let failure = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && ed.has_arc(x, y) == e.contains(x))
            .map(|(x, y)| format!("arc {}->{} wrongly {}", alg.label(x), alg.label(y), if e.contains(x) { "present" } else { "absent" }));
        self.check("endomorphism arcs are exactly those leaving A minus E(A)", failure);
        Ok(())
    }
}
