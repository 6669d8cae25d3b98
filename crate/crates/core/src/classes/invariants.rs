//! Exact graph invariants.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Clique,
    Chromatic,
    Matching,
    Spread,
    Diameter,
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "clique" => Invariant::Clique,
            "chromatic" => Invariant::Chromatic,
            "matching" => Invariant::Matching,
            "spread" => Invariant::Spread,
            "diameter" => Invariant::Diameter,
            _ => {
                return Err(Error::input(format!(
                    "unknown invariant {s:?} (expected clique, chromatic, matching, spread or diameter)"
                )))
            }
        })
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Clique => "clique",
            Invariant::Chromatic => "chromatic",
            Invariant::Matching => "matching",
            Invariant::Spread => "spread",
            Invariant::Diameter => "diameter",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantValue {
    Exact(usize),
    /// The search stopped at its cap with the property still holding.
    AtLeast(usize),
    /// Diameter of a disconnected graph.
    Infinite,
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Exact(v) => write!(f, "{v}"),
            InvariantValue::AtLeast(v) => write!(f, ">={v}"),
            InvariantValue::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for InvariantValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            InvariantValue::Exact(v) => s.serialize_u64(*v as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

pub fn graph_invariant(g: &SimpleGraph, which: Invariant, limits: &Limits) -> Result<InvariantValue> {
    Ok(match which {
        Invariant::Clique => InvariantValue::Exact(clique_number(g, limits)?),
        Invariant::Chromatic => InvariantValue::Exact(chromatic_number(g, limits)?),
        Invariant::Matching => InvariantValue::Exact(matching_number(g, limits)?),
        Invariant::Spread => spread(g, limits)?,
        Invariant::Diameter => diameter(g),
    })
}

fn cap(g: &SimpleGraph, what: &str, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::resource(format!("{what} vertex count"), cap));
    }
    Ok(())
}

pub fn clique_number(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    Ok(maximum_clique(g, limits)?.len())
}

/// A maximum clique, found by branch and bound with a greedy colouring
/// bound. Vertices are processed in non-increasing degree order.
pub fn maximum_clique(g: &SimpleGraph, limits: &Limits) -> Result<Vec<usize>> {
    cap(g, "clique search", limits.max_clique)?;
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<FixedBitSet> = perm
        .iter()
        .map(|&v| {
            let mut a = FixedBitSet::with_capacity(n);
            a.extend(g.neighbors(v).ones().map(|w| pos[w]));
            a
        })
        .collect();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    let mut best = Vec::new();
    let mut cur = Vec::new();
    expand_clique(&adj, cand, &mut cur, &mut best);
    let mut out: Vec<usize> = best.into_iter().map(|i| perm[i]).collect();
    out.sort_unstable();
    Ok(out)
}

fn expand_clique(adj: &[FixedBitSet], mut cand: FixedBitSet, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, colors) = colour_sort(adj, &cand);
    for i in (0..order.len()).rev() {
        if cur.len() + colors[i] <= best.len() {
            return;
        }
        let v = order[i];
        cur.push(v);
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if next.is_clear() {
            if cur.len() > best.len() {
                best.clone_from(cur);
            }
        } else {
            expand_clique(adj, next, cur, best);
        }
        cur.pop();
        cand.set(v, false);
    }
}

// Greedy sequential colouring of `cand`; returns vertices in colour order
// with their colour numbers (1-based, non-decreasing).
fn colour_sort(adj: &[FixedBitSet], cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut colors = Vec::with_capacity(order.capacity());
    let mut left = cand.clone();
    let mut k = 0;
    while !left.is_clear() {
        k += 1;
        let mut q = left.clone();
        while let Some(v) = q.minimum() {
            left.set(v, false);
            q.set(v, false);
            q.difference_with(&adj[v]);
            order.push(v);
            colors.push(k);
        }
    }
    (order, colors)
}

/// Chromatic number: tries `k = ω, ω+1, …` with an exact DSATUR
/// backtracking search, the clique pre-coloured.
pub fn chromatic_number(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    let clique = maximum_clique(g, limits)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let mut k = clique.len();
    loop {
        let mut colour = vec![usize::MAX; n];
        for (c, &v) in clique.iter().enumerate() {
            colour[v] = c;
        }
        if colour_search(g, k, &mut colour, clique.len()) {
            return Ok(k);
        }
        k += 1;
    }
}

fn colour_search(g: &SimpleGraph, k: usize, colour: &mut [usize], used: usize) -> bool {
    let n = g.order();
    // uncoloured vertex with the most distinct neighbour colours
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut seen = FixedBitSet::with_capacity(k);
        let mut deg = 0;
        for w in g.neighbors(v).ones() {
            if colour[w] != usize::MAX {
                seen.insert(colour[w]);
            } else {
                deg += 1;
            }
        }
        let key = (seen.count_ones(..), deg);
        if pick.is_none() || key > pick_key {
            pick = Some((v, seen));
            pick_key = key;
        }
    }
    let Some((v, seen)) = pick else {
        return true;
    };
    if pick_key.0 == k {
        return false;
    }
    // colours beyond the first unused one are interchangeable
    for c in 0..k.min(used + 1) {
        if seen.contains(c) {
            continue;
        }
        colour[v] = c;
        if colour_search(g, k, colour, used.max(c + 1)) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

/// Size of a maximum matching, by Edmonds' blossom algorithm.
pub fn matching_number(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    cap(g, "matching", limits.max_matching)?;
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).ones().collect()).collect();
    let mate = Blossom::new(&adj).solve();
    Ok(mate.iter().filter(|m| m.is_some()).count() / 2)
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn solve(mut self) -> Vec<Option<usize>> {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(mut v) = self.find_path(root) {
                    while v != NONE {
                        let pv = self.parent[v];
                        let next = self.mate[pv];
                        self.mate[v] = pv;
                        self.mate[pv] = v;
                        v = next;
                    }
                }
            }
        }
        self.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    // Returns an unmatched vertex reached by an augmenting path from `root`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                q.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    q.push_back(m);
                }
            }
        }
        None
    }
}

/// Largest `s` such that every `s` vertices have a common neighbour, checked
/// for `s = 1, 2, …` up to the configured cap.
pub fn spread(g: &SimpleGraph, limits: &Limits) -> Result<InvariantValue> {
    cap(g, "spread", limits.max_spread)?;
    let n = g.order();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    for s in 1..=limits.spread_cap {
        if s > n || !every_subset_has_common_neighbour(g, s, 0, &all) {
            return Ok(InvariantValue::Exact(s - 1));
        }
    }
    Ok(InvariantValue::AtLeast(limits.spread_cap))
}

fn every_subset_has_common_neighbour(g: &SimpleGraph, left: usize, start: usize, common: &FixedBitSet) -> bool {
    if left == 0 {
        return !common.is_clear();
    }
    (start..=g.order() - left).all(|v| {
        let mut next = common.clone();
        next.intersect_with(g.neighbors(v));
        !next.is_clear() && every_subset_has_common_neighbour(g, left - 1, v + 1, &next)
    })
}

/// Largest distance between two vertices; infinite when disconnected.
pub fn diameter(g: &SimpleGraph) -> InvariantValue {
    let n = g.order();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for w in g.neighbors(u).ones() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        match dist.iter().max() {
            Some(&usize::MAX) => return InvariantValue::Infinite,
            Some(&d) => best = best.max(d),
            None => {}
        }
    }
    InvariantValue::Exact(best)
}

/// Clique number equals chromatic number.
pub fn is_weakly_perfect(g: &SimpleGraph, limits: &Limits) -> Result<bool> {
    Ok(clique_number(g, limits)? == chromatic_number(g, limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::tests::{cycle, graph};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn small_values() {
        let mut g = SimpleGraph::complete(6).unwrap();
        assert_eq!(chromatic_number(&g, &l()).unwrap(), 6);
        g.remove_edge(2, 3);
        g.remove_edge(3, 4);
        assert_eq!(clique_number(&g, &l()).unwrap(), 5);
        assert_eq!(matching_number(&g, &l()).unwrap(), 3);
        assert_eq!(clique_number(&cycle(5), &l()).unwrap(), 2);
        assert_eq!(chromatic_number(&cycle(5), &l()).unwrap(), 3);
        assert!(!is_weakly_perfect(&cycle(5), &l()).unwrap());
        assert_eq!(matching_number(&cycle(5), &l()).unwrap(), 2);
        assert_eq!(chromatic_number(&graph(0, &[]), &l()).unwrap(), 0);
    }

    #[test]
    fn matching_needs_blossoms() {
        // two triangles joined by a path: 0-1-2 triangle, 2-3, 3-4, 4-5-6 triangle
        let g = graph(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
        assert_eq!(matching_number(&g, &l()).unwrap(), 3);
        // Petersen graph has a perfect matching
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(matching_number(&graph(10, &e), &l()).unwrap(), 5);
    }

    #[test]
    fn spread_and_diameter() {
        let k4 = SimpleGraph::complete(4).unwrap();
        // any 3 vertices of K4 share the fourth; the 4 together share nothing
        assert_eq!(spread(&k4, &l()).unwrap(), InvariantValue::Exact(3));
        assert_eq!(spread(&cycle(5), &l()).unwrap(), InvariantValue::Exact(1));
        assert_eq!(spread(&graph(3, &[(0, 1)]), &l()).unwrap(), InvariantValue::Exact(0));
        let k7 = SimpleGraph::complete(7).unwrap();
        assert_eq!(spread(&k7, &l()).unwrap(), InvariantValue::AtLeast(4));
        assert_eq!(diameter(&cycle(6)), InvariantValue::Exact(3));
        assert_eq!(diameter(&graph(2, &[])), InvariantValue::Infinite);
        assert_eq!(InvariantValue::AtLeast(4).to_string(), ">=4");
    }

    #[test]
    fn caps() {
        let l = Limits {
            max_clique: 3,
            ..Limits::default()
        };
        assert!(matches!(clique_number(&cycle(5), &l), Err(Error::Resource { .. })));
    }
}
