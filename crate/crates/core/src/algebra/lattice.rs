//! Rank, generating sets and the subalgebra lattice.

use std::collections::HashSet;

use super::{ElemSet, FiniteAlgebra, SubalgebraSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Which generating sets [`generating_sets`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingMode {
    /// Inclusion-minimal generating sets.
    Minimal,
    /// Generating sets of minimum cardinality.
    Minimum,
}

/// Sort key used for every list of sets the crate returns: by size, then
/// lexicographically by sorted members.
pub(crate) fn set_key(s: &ElemSet) -> (usize, Vec<usize>) {
    (s.count_ones(..), s.ones().collect())
}

/// Smallest `k` such that some `k`-subset of `b` generates `b`.
///
/// Only one representative of each maximal monogenic subalgebra of `b` is
/// tried: replacing a generator by an element whose monogenic subalgebra
/// contains it never enlarges a generating set.
pub fn rank_of(alg: &FiniteAlgebra, b: &ElemSet, limits: &Limits) -> Result<usize> {
    generating_subset(alg, b, limits).map(|s| s.len())
}

/// The lexicographically first minimum generating set of the whole algebra,
/// drawn from representatives of maximal monogenic subalgebras.
pub fn minimum_generating_set(alg: &FiniteAlgebra, limits: &Limits) -> Result<Vec<usize>> {
    generating_subset(alg, &alg.full_set(), limits)
}

fn generating_subset(alg: &FiniteAlgebra, b: &ElemSet, limits: &Limits) -> Result<Vec<usize>> {
    let e = alg.minimal_subalgebra();
    if !alg.is_closed(b) {
        return Err(Error::input("rank_of: set is not a subalgebra"));
    }
    if b == e {
        return Ok(Vec::new());
    }
    let mono = alg.monogenic();
    let mut reps: Vec<usize> = Vec::new();
    for x in b.difference(e) {
        let mx = &mono[x];
        let dominated = b.difference(e).any(|y| {
            let my = &mono[y];
            (mx.is_subset(my) && mx != my) || (mx == my && y < x)
        });
        if !dominated {
            reps.push(x);
        }
    }
    let max_k = reps.len().min(limits.max_generating_set);
    for k in 1..=max_k {
        let mut found = None;
        if search_subsets(alg, &reps, k, e, &mut |chosen, closed| {
            if closed == b {
                found = Some(chosen.to_vec());
                true
            } else {
                false
            }
        }) {
            return Ok(found.expect("set on hit"));
        }
    }
    Err(Error::resource(
        format!("generating-set search in {} (subset size)", alg.name()),
        limits.max_generating_set,
    ))
}

// DFS over k-subsets of `pool`, closing incrementally; stops at the first
// subset whose closure satisfies `hit`.
fn search_subsets(
    alg: &FiniteAlgebra,
    pool: &[usize],
    k: usize,
    base: &ElemSet,
    hit: &mut dyn FnMut(&[usize], &ElemSet) -> bool,
) -> bool {
    fn rec(
        alg: &FiniteAlgebra,
        pool: &[usize],
        start: usize,
        left: usize,
        closed: &ElemSet,
        chosen: &mut Vec<usize>,
        hit: &mut dyn FnMut(&[usize], &ElemSet) -> bool,
    ) -> bool {
        if left == 0 {
            return hit(chosen, closed);
        }
        for i in start..=pool.len().saturating_sub(left) {
            let next = alg.close_extending(closed, [pool[i]]);
            chosen.push(pool[i]);
            let done = rec(alg, pool, i + 1, left - 1, &next, chosen, hit);
            chosen.pop();
            if done {
                return true;
            }
        }
        false
    }
    if k > pool.len() {
        return false;
    }
    rec(alg, pool, 0, k, base, &mut Vec::new(), hit)
}

/// Every subalgebra of `alg`, each exactly once, ordered by size then
/// members. Ranks are not filled in; see [`lattice_with_ranks`].
///
/// When `alg` has no constants the empty set is included.
pub fn subalgebra_lattice(alg: &FiniteAlgebra, limits: &Limits) -> Result<Vec<SubalgebraSet>> {
    let e = alg.minimal_subalgebra().clone();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue = vec![e.clone()];
    seen.insert(e);
    for m in alg.monogenic() {
        if seen.insert(m.clone()) {
            queue.push(m.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() {
        if seen.len() > limits.max_lattice {
            return Err(Error::resource(
                format!("subalgebra lattice of {}", alg.name()),
                limits.max_lattice,
            ));
        }
        let cur = queue[i].clone();
        for x in 0..alg.size() {
            if cur.contains(x) {
                continue;
            }
            let j = alg.close_extending(&cur, [x]);
            if seen.insert(j.clone()) {
                queue.push(j);
            }
        }
        i += 1;
    }
    if seen.len() > limits.max_lattice {
        return Err(Error::resource(
            format!("subalgebra lattice of {}", alg.name()),
            limits.max_lattice,
        ));
    }
    queue.sort_by_key(set_key);
    Ok(queue.into_iter().map(SubalgebraSet::new).collect())
}

/// The subalgebra lattice with every rank computed.
pub fn lattice_with_ranks(alg: &FiniteAlgebra, limits: &Limits) -> Result<Vec<SubalgebraSet>> {
    subalgebra_lattice(alg, limits)?
        .into_iter()
        .map(|s| {
            let r = rank_of(alg, &s.members, limits)?;
            Ok(SubalgebraSet::with_rank(s.members, r))
        })
        .collect()
}

/// Generating sets of the whole algebra, ordered by size then members.
pub fn generating_sets(
    alg: &FiniteAlgebra,
    mode: GeneratingMode,
    limits: &Limits,
) -> Result<Vec<ElemSet>> {
    let full = alg.full_set();
    let e = alg.minimal_subalgebra();
    let ground: Vec<usize> = full.difference(e).collect();
    let mut out = Vec::new();
    match mode {
        GeneratingMode::Minimum => {
            let r = rank_of(alg, &full, limits)?;
            if r == 0 {
                return Ok(vec![alg.empty_set()]);
            }
            let mut chosen = Vec::new();
            collect_generating(alg, &ground, 0, r, e, &full, &mut chosen, &mut out, limits)?;
        }
        GeneratingMode::Minimal => {
            for_each_independent(alg, limits.max_simplex, limits, &mut |set, closed| {
                if *closed == full {
                    out.push(super::elem_set(alg.size(), set.iter().copied()));
                }
                Ok(())
            })?;
        }
    }
    out.sort_by_key(set_key);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn collect_generating(
    alg: &FiniteAlgebra,
    ground: &[usize],
    start: usize,
    left: usize,
    closed: &ElemSet,
    full: &ElemSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<ElemSet>,
    limits: &Limits,
) -> Result<()> {
    if left == 0 {
        if closed == full {
            if out.len() >= limits.max_enumerated {
                return Err(Error::resource("generating sets", limits.max_enumerated));
            }
            out.push(super::elem_set(alg.size(), chosen.iter().copied()));
        }
        return Ok(());
    }
    for i in start..=ground.len().saturating_sub(left) {
        let x = ground[i];
        if closed.contains(x) {
            // redundant generator: the set would not be of minimum size
            continue;
        }
        let next = alg.close_extending(closed, [x]);
        chosen.push(x);
        collect_generating(alg, ground, i + 1, left - 1, &next, full, chosen, out, limits)?;
        chosen.pop();
    }
    Ok(())
}

/// True when no `s ∈ set` lies in the subalgebra generated by the others.
pub fn is_independent(alg: &FiniteAlgebra, set: &[usize]) -> bool {
    (0..set.len()).all(|i| {
        let rest = set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x);
        !alg.close(rest).contains(set[i])
    })
}

/// Visits every independent subset of `A ∖ E(A)` (including the empty set)
/// in lexicographic order, passing the set and its closure.
///
/// Independence is hereditary, so the search never extends a dependent set.
/// Fails if an independent set larger than `max_size` exists.
pub fn for_each_independent(
    alg: &FiniteAlgebra,
    max_size: usize,
    limits: &Limits,
    visit: &mut dyn FnMut(&[usize], &ElemSet) -> Result<()>,
) -> Result<()> {
    struct Node {
        set: Vec<usize>,
        closed: ElemSet,
        // closure of set minus set[i], per position
        minus: Vec<ElemSet>,
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        alg: &FiniteAlgebra,
        ground: &[usize],
        node: &Node,
        start: usize,
        max_size: usize,
        count: &mut usize,
        limits: &Limits,
        visit: &mut dyn FnMut(&[usize], &ElemSet) -> Result<()>,
    ) -> Result<()> {
        *count += 1;
        if *count > limits.max_enumerated {
            return Err(Error::resource("independent sets", limits.max_enumerated));
        }
        visit(&node.set, &node.closed)?;
        for (gi, &t) in ground.iter().enumerate().skip(start) {
            if node.closed.contains(t) {
                continue;
            }
            let mut minus = Vec::with_capacity(node.set.len() + 1);
            let mut ok = true;
            for (i, &s) in node.set.iter().enumerate() {
                let m = alg.close_extending(&node.minus[i], [t]);
                if m.contains(s) {
                    ok = false;
                    break;
                }
                minus.push(m);
            }
            if !ok {
                continue;
            }
            if node.set.len() == max_size {
                return Err(Error::resource(
                    format!("independent set size in {}", alg.name()),
                    max_size,
                ));
            }
            minus.push(node.closed.clone());
            let mut set = node.set.clone();
            set.push(t);
            let child = Node {
                closed: alg.close_extending(&node.closed, [t]),
                set,
                minus,
            };
            rec(alg, ground, &child, gi + 1, max_size, count, limits, visit)?;
        }
        Ok(())
    }

    let e = alg.minimal_subalgebra();
    let ground: Vec<usize> = alg.full_set().difference(e).collect();
    let root = Node {
        set: Vec::new(),
        closed: e.clone(),
        minus: Vec::new(),
    };
    let mut count = 0;
    rec(alg, &ground, &root, 0, max_size, &mut count, limits, visit)
}
