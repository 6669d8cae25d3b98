//! Acceptance criteria 1 to 14. Each criterion prints one PASS or FAIL line
//! with its elapsed time against a pinned bound; the process exits non-zero
//! if any criterion fails.

#[path = "../../core/tests/support/oracle.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use algraph::algebra::{check_property, enumerate_endomorphisms, group_signature, Property};
use algraph::algebra_graphs::digraph_equality_report;
use algraph::arith::{clique_ratio_table, euler_phi, max_ratio};
use algraph::catalog::{group_catalog, independence_family, semigroup_catalog};
use algraph::classes::{chromatic_number, clique_number, diameter, matching_number, spread};
use algraph::verify::{run_suite, Family, Suite, SuiteSpec, VerificationReport};
use algraph::{
    build_digraph, build_graph, classify, DigraphKind, EnhancedVariant, FiniteAlgebra, GraphClass, GraphKind,
    InvariantValue, Limits, SimpleGraph,
};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

/// Largest admissible f(n)/phi(n), as the fraction 2649/1000.
const RATIO_BOUND: (u64, u64) = (2649, 1000);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: algraph::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn limits() -> Limits {
    Limits::default()
}

fn find<'a>(v: &'a [FiniteAlgebra], name: &str) -> Result<&'a FiniteAlgebra, String> {
    v.iter().find(|a| a.name() == name).ok_or_else(|| format!("{name} missing from catalog"))
}

fn suite(suite: Suite, family: Family, max_order: Option<usize>) -> Result<VerificationReport, String> {
    let spec = SuiteSpec {
        suite,
        family,
        max_order,
        include_a5: suite == Suite::Spread,
    };
    ok(run_suite(&spec, &limits()))
}

/// Runs `suites` over group_catalog(24) and semigroup_catalog(3).
fn both_catalogs(suites: &[Suite]) -> Result<(usize, usize), String> {
    let mut claims = 0;
    let mut algebras = 0;
    for family in [Family::Groups, Family::Semigroups] {
        for &s in suites {
            let r = suite(s, family, None)?;
            if let Some(f) = r.failures().next() {
                return Err(format!("{} [{}] {}: {:?}", f.algebra, f.suite, f.claim, f.witness));
            }
            ensure(r.summary.total > 0, || format!("{s} over {family} checked nothing"))?;
            claims += r.summary.total;
            algebras = algebras.max(r.algebras);
        }
    }
    Ok((claims, algebras))
}

fn c1_c6_golden() -> Outcome {
    let a = ok(algraph::algebra::builders::cyclic(6))?;
    let l = limits();
    let mut want = ok(SimpleGraph::complete(6))?;
    want.remove_edge(2, 3);
    want.remove_edge(3, 4);
    let power = ok(build_graph(&a, GraphKind::Power, &l))?;
    ensure(power.edges() == want.edges(), || format!("power edges {:?}", power.edges()))?;
    let enhanced = ok(build_graph(&a, GraphKind::Enhanced(EnhancedVariant::Loose), &l))?;
    ensure(enhanced.is_complete(), || "enhanced is not K6".into())?;
    let diff = ok(build_graph(&a, GraphKind::Difference, &l))?;
    ensure(diff.edges() == vec![(2, 3), (3, 4)], || format!("difference edges {:?}", diff.edges()))?;
    Ok("power = K6 - {2,3},{3,4}; enhanced = K6; difference = {2,3},{3,4}".into())
}

fn c2_strict_loose() -> Outcome {
    let a = ok(algraph::algebra::builders::monogenic_semigroup(4, 1))?;
    let (x2, x3) = (a.index_of("x^2").unwrap(), a.index_of("x^3").unwrap());
    let loose = ok(build_graph(&a, GraphKind::Enhanced(EnhancedVariant::Loose), &limits()))?;
    let strict = ok(build_graph(&a, GraphKind::Enhanced(EnhancedVariant::Strict), &limits()))?;
    ensure(loose.has_edge(x2, x3), || "loose lacks {x^2,x^3}".into())?;
    ensure(!strict.has_edge(x2, x3), || "strict has {x^2,x^3}".into())?;
    Ok("{x^2,x^3} in loose only".into())
}

fn c3_volkov() -> Outcome {
    let a = algraph::algebra::builders::volkov_semigroup();
    let l = limits();
    let img = |v: &[usize]| v.iter().map(|&y| a.label(y).to_string()).collect::<Vec<_>>();
    let got: BTreeSet<Vec<String>> = ok(enumerate_endomorphisms(&a, &l))?.iter().map(|f| img(&f.images)).collect();
    let pos = |s: &str| a.index_of(s).unwrap();
    let table = [["a", "b", "e"], ["e", "b", "e"], ["a", "e", "e"], ["e", "e", "e"]];
    let want: BTreeSet<Vec<String>> = table
        .iter()
        .map(|row| {
            let mut v = vec![String::new(); 3];
            for (src, dst) in ["a", "b", "e"].iter().zip(row) {
                v[pos(src)] = dst.to_string();
            }
            v
        })
        .collect();
    ensure(got == want, || format!("endomorphisms {got:?}"))?;
    let p = ok(build_digraph(&a, DigraphKind::Power, &l))?;
    let e = ok(build_digraph(&a, DigraphKind::Endomorphism, &l))?;
    ensure(p == e, || "power and endomorphism digraphs differ".into())?;
    let report = ok(digraph_equality_report(&a, &l))?;
    let mut phi3 = vec![String::new(); 3];
    for (src, dst) in ["a", "b", "e"].iter().zip(["a", "e", "e"]) {
        phi3[pos(src)] = dst.to_string();
    }
    let status = report
        .power_maps
        .iter()
        .find(|s| s.images == phi3)
        .ok_or("phi3 not reported")?;
    ensure(status.elementwise && !status.is_global_power_map(), || format!("phi3 status {status:?}"))?;
    let others_global = report.power_maps.iter().filter(|s| s.images != phi3).all(|s| s.is_global_power_map());
    ensure(others_global, || "some other endomorphism is not a power map".into())?;
    Ok("4 endomorphisms; digraphs equal; phi3 element-wise but not global".into())
}

fn c4_spanning() -> Outcome {
    let (claims, _) = both_catalogs(&[Suite::Spanning])?;
    Ok(format!("{claims} spanning claims, 0 failures"))
}

fn c5_mo() -> Outcome {
    let (claims, _) = both_catalogs(&[Suite::MoEquivalence])?;
    let groups = ok(group_catalog(24))?;
    let l = limits();
    for (name, equal) in [
        ("C4", true),
        ("C2^2", true),
        ("S3", true),
        ("Q8", true),
        ("D8", true),
        ("C6", false),
        ("C12", false),
        ("C15", false),
    ] {
        let g = find(&groups, name)?;
        let p = ok(build_graph(g, GraphKind::Power, &l))?;
        let e = ok(build_graph(g, GraphKind::Enhanced(EnhancedVariant::Loose), &l))?;
        ensure((p == e) == equal, || format!("{name}: power = enhanced is {}", p == e))?;
        let eppo = ok(check_property(g, Property::Eppo, &l))?.holds;
        ensure(eppo == equal, || format!("{name}: EPPO is {eppo}"))?;
    }
    Ok(format!("{claims} claims; C4 C2^2 S3 Q8 D8 equal, C6 C12 C15 unequal"))
}

fn c6_perfect() -> Outcome {
    let l = limits();
    let mut all = ok(group_catalog(24))?;
    all.extend(ok(semigroup_catalog(3))?);
    ensure(all.iter().any(|a| a.name() == "S4" && a.size() == 24), || "S4 missing".into())?;
    for a in &all {
        let g = ok(build_graph(a, GraphKind::Power, &l))?;
        let w = ok(classify(&g, GraphClass::Perfect, &l))?;
        ensure(w.verdict, || format!("{} power graph not perfect: {:?}", a.name(), w.witness))?;
    }
    Ok(format!("{} power graphs perfect", all.len()))
}

fn c7_cograph_chordal() -> Outcome {
    let (claims, _) = both_catalogs(&[Suite::P4Lemma, Suite::EqualityCographChordal, Suite::CographImpliesChordal])?;
    let r = suite(Suite::EqualityCographChordal, Family::Groups, None)?;
    let live = r.instances.iter().filter(|i| !i.claim.contains("premise fails")).count();
    ensure(live > 0, || "no group has power equal to enhanced or intersection".into())?;
    Ok(format!("{claims} claims, {live} groups with a live equality premise"))
}

fn c8_digraphs() -> Outcome {
    let r = suite(Suite::DigraphEquality, Family::Groups, Some(16))?;
    if let Some(f) = r.failures().next() {
        return Err(format!("{} {}: {:?}", f.algebra, f.claim, f.witness));
    }
    let l = limits();
    let groups = ok(group_catalog(16))?;
    let mut cyclic = 0;
    for g in &groups {
        let rep = ok(digraph_equality_report(g, &l))?;
        let is_cyclic = g.monogenic().iter().any(|m| *m == g.full_set());
        ensure(rep.digraphs_equal == is_cyclic, || format!("{}: digraphs equal = {}", g.name(), rep.digraphs_equal))?;
        cyclic += usize::from(is_cyclic);
    }
    for name in ["C2^2", "Q8"] {
        let rep = ok(digraph_equality_report(find(&groups, name)?, &l))?;
        ensure(!rep.digraphs_equal && rep.first_difference.is_some(), || format!("{name} lacks a witness"))?;
    }
    Ok(format!("{} groups, equality exactly on the {cyclic} cyclic ones", groups.len()))
}

fn c9_zero_divisor() -> Outcome {
    let (claims, _) = both_catalogs(&[Suite::ZeroDivisor])?;
    Ok(format!("{claims} identifications"))
}

fn c10_skeletons() -> Outcome {
    let (claims, _) = both_catalogs(&[Suite::Skeleton])?;
    Ok(format!("{claims} skeleton and containment claims"))
}

fn c11_independence() -> Outcome {
    let r = suite(Suite::Sunflower, Family::Independence, None)?;
    if let Some(f) = r.failures().next() {
        return Err(format!("{} {}: {:?}", f.algebra, f.claim, f.witness));
    }
    let family = ok(independence_family())?;
    let names: Vec<&str> = family.iter().map(|c| c.algebra.name()).collect();
    for want in ["C2^2", "C2^3", "C2^4", "C3^3", "Q1(C1)", "Q1(C4)", "Q1(C2^2)"] {
        ensure(names.contains(&want), || format!("{want} missing"))?;
    }
    for case in &family {
        let mine: Vec<&str> = r
            .instances
            .iter()
            .filter(|i| i.algebra == case.algebra.name())
            .map(|i| i.claim.as_str())
            .collect();
        ensure(mine.contains(&format!("independence-algebra check returns {}", case.expected).as_str()), || {
            format!("{} has no verdict claim", case.algebra.name())
        })?;
        if case.expected {
            for c in [
                "power = enhanced = intersection_power",
                "independence complex = strong independence complex",
                "independence complex is a matroid",
            ] {
                ensure(mine.contains(&c), || format!("{}: {c} not checked", case.algebra.name()))?;
            }
        }
    }
    let rejected = family.iter().find(|c| !c.expected).ok_or("no negative case")?;
    let v = ok(check_property(&rejected.algebra, Property::IndependenceAlgebra, &limits()))?;
    ensure(!v.holds, || format!("{} passes the check", rejected.algebra.name()))?;
    Ok(format!("{} algebras, {} claims; {} rejected", family.len(), r.summary.total, rejected.algebra.name()))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn c12_arith() -> Outcome {
    let rows = ok(clique_ratio_table(200, &limits()))?;
    ensure(rows.len() == 200, || format!("{} rows", rows.len()))?;
    for r in &rows {
        let phi = (1..=r.n).filter(|&k| gcd(k, r.n) == 1).count() as u64;
        ensure(ok(euler_phi(r.n))? == phi && r.phi == phi, || format!("phi({}) = {}", r.n, r.phi))?;
        ensure(phi <= r.f, || format!("f({}) = {} < phi", r.n, r.f))?;
        ensure(r.f * RATIO_BOUND.1 <= RATIO_BOUND.0 * phi, || format!("f({})/phi = {}", r.n, r.ratio))?;
    }
    ensure(rows[5].f == 5, || format!("f(6) = {}", rows[5].f))?;
    for p in (2..=50u64).filter(|&p| (2..p).all(|d| p % d != 0)) {
        ensure(rows[p as usize - 1].f == p, || format!("f({p}) = {}", rows[p as usize - 1].f))?;
    }
    for q in [4u64, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128] {
        ensure(rows[q as usize - 1].f == q, || format!("f({q}) = {}", rows[q as usize - 1].f))?;
    }
    let best = max_ratio(&rows).ok_or("empty table")?;
    Ok(format!("phi <= f <= 2.649 phi for n <= 200; max f/phi = {} = {:.4} at n = {}", best.ratio, best.ratio_f64(), best.n))
}

fn c13_spread() -> Outcome {
    let r = suite(Suite::Spread, Family::Groups, None)?;
    let i = r.instances.first().ok_or("no A5 instance")?;
    ensure(r.summary.total == 1 && i.passed && i.algebra == "A5", || format!("{i:?}"))?;
    Ok(i.claim.clone())
}

fn c14_oracles() -> Outcome {
    let l = limits();
    let mut algebras = ok(group_catalog(24))?;
    algebras.extend(ok(semigroup_catalog(3))?);
    algebras.extend(ok(independence_family())?.into_iter().map(|c| c.algebra));
    let mut kinds: Vec<GraphKind> = GraphKind::ALL.iter().map(|k| k.parse().unwrap()).collect();
    kinds.push(GraphKind::Enhanced(EnhancedVariant::Strict));
    let mut graphs = 0;
    for a in algebras.iter().filter(|a| a.size() <= 10) {
        for &kind in &kinds {
            let g = ok(build_graph(a, kind, &l))?;
            let at = || format!("{} {kind}", a.name());
            for class in GraphClass::ALL {
                let w = ok(classify(&g, class, &l))?;
                ensure(w.verdict == oracle::in_class(&g, class), || format!("{}: {class}", at()))?;
                ensure(w.verdict || w.witness_is_valid(&g), || format!("{}: bad {class} witness", at()))?;
            }
            ensure(ok(clique_number(&g, &l))? == oracle::clique_number(&g), || format!("{}: clique", at()))?;
            ensure(ok(chromatic_number(&g, &l))? == oracle::chromatic_number(&g), || format!("{}: chromatic", at()))?;
            ensure(ok(matching_number(&g, &l))? == oracle::matching_number(&g), || format!("{}: matching", at()))?;
            let want = match oracle::spread(&g, l.spread_cap) {
                (s, true) => InvariantValue::AtLeast(s),
                (s, false) => InvariantValue::Exact(s),
            };
            ensure(ok(spread(&g, &l))? == want, || format!("{}: spread", at()))?;
            let want = oracle::diameter(&g).map_or(InvariantValue::Infinite, InvariantValue::Exact);
            ensure(diameter(&g) == want, || format!("{}: diameter", at()))?;
            graphs += 1;
        }
    }
    ensure(graphs > 0, || "no graphs checked".into())?;
    let groups = algebras.iter().filter(|a| a.size() <= 10 && group_signature(a).is_some()).count();
    Ok(format!("{graphs} graphs ({groups} groups among the sources), 0 mismatches"))
}

fn main() {
    let criteria: [Criterion; 14] = [
        (1, "C6 golden graphs", 1, c1_c6_golden),
        (2, "strict/loose split on monosg(4,1)", 1, c2_strict_loose),
        (3, "Volkov semigroup endomorphisms", 1, c3_volkov),
        (4, "spanning relations on both catalogs", 60, c4_spanning),
        (5, "power = enhanced iff MO (and EPPO)", 60, c5_mo),
        (6, "power graphs perfect", 120, c6_perfect),
        (7, "P4 lemma, equality and cograph implications", 120, c7_cograph_chordal),
        (8, "digraph equality iff cyclic", 120, c8_digraphs),
        (9, "zero-divisor identification", 60, c9_zero_divisor),
        (10, "complex 1-skeletons", 60, c10_skeletons),
        (11, "independence algebras", 120, c11_independence),
        (12, "f(n) against phi(n)", 300, c12_arith),
        (13, "spread of A5 generating graph", 300, c13_spread),
        (14, "oracle equivalence on small graphs", 120, c14_oracles),
    ];
    let mut failed = 0;
    for (id, name, bound, f) in criteria {
        let bound = Duration::from_secs(bound);
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        let outcome = match outcome {
            Ok(d) if t > bound => Err(format!("too slow ({d})")),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        println!("criterion {id:>2} {tag} {name} [{:.2}s / {}s]: {detail}", t.as_secs_f64(), bound.as_secs());
        failed += usize::from(outcome.is_err());
    }
    println!("acceptance: {} passed, {failed} failed", 14 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
