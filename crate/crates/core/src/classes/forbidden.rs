//! Direct searches for small forbidden induced subgraphs and holes.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::SimpleGraph;

/// An induced path `[a, b, c, d]`.
pub fn find_p4(g: &SimpleGraph) -> Option<Vec<usize>> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let mut left = g.neighbors(b).clone();
            left.difference_with(g.neighbors(c));
            left.set(c, false);
            let mut right = g.neighbors(c).clone();
            right.difference_with(g.neighbors(b));
            right.set(b, false);
            for a in left.ones() {
                if let Some(d) = right.ones().find(|&d| !g.has_edge(a, d)) {
                    return Some(vec![a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Two edges `[a, b]`, `[c, d]` with no edges between them.
pub fn find_two_k2(g: &SimpleGraph) -> Option<Vec<usize>> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let mut far = g.neighbors(a).clone();
        far.union_with(g.neighbors(b));
        far.insert(a);
        far.insert(b);
        for &(c, d) in &edges[i + 1..] {
            if !far.contains(c) && !far.contains(d) {
                return Some(vec![a, b, c, d]);
            }
        }
    }
    None
}

/// An induced cycle of exactly `len` vertices, for `len` 4 or 5.
pub(crate) fn find_hole_of_length(g: &SimpleGraph, len: usize) -> Option<Vec<usize>> {
    let n = g.order();
    match len {
        4 => {
            for a in 0..n {
                for c in a + 1..n {
                    if g.has_edge(a, c) {
                        continue;
                    }
                    let mut common = g.neighbors(a).clone();
                    common.intersect_with(g.neighbors(c));
                    let common: Vec<usize> = common.ones().collect();
                    for (i, &b) in common.iter().enumerate() {
                        if let Some(&d) = common[i + 1..].iter().find(|&&d| !g.has_edge(b, d)) {
                            return Some(vec![a, b, c, d]);
                        }
                    }
                }
            }
            None
        }
        5 => {
            // a - b - c induced, then d ~ c only, then e ~ d and a only
            for b in 0..n {
                let nb: Vec<usize> = g.neighbors(b).ones().collect();
                for &a in &nb {
                    for &c in &nb {
                        if a == c || g.has_edge(a, c) {
                            continue;
                        }
                        for d in g.neighbors(c).ones() {
                            if d == b || g.has_edge(d, a) || g.has_edge(d, b) {
                                continue;
                            }
                            let mut e = g.neighbors(d).clone();
                            e.intersect_with(g.neighbors(a));
                            if let Some(e) = e.ones().find(|&e| e != b && !g.has_edge(e, b) && !g.has_edge(e, c)) {
                                return Some(vec![a, b, c, d, e]);
                            }
                        }
                    }
                }
            }
            None
        }
        _ => panic!("find_hole_of_length supports lengths 4 and 5"),
    }
}

/// Some chordless cycle of length at least 4, in cycle order.
///
/// Any such cycle through `v` leaves `v` through two non-adjacent
/// neighbours `x`, `y` and returns along a path avoiding the rest of the
/// closed neighbourhood of `v`; a shortest such path is induced.
pub fn find_chordless_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.order();
    for v in 0..n {
        let nv: Vec<usize> = g.neighbors(v).ones().collect();
        for (i, &x) in nv.iter().enumerate() {
            for &y in &nv[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = g.neighbors(v).clone();
                blocked.insert(v);
                blocked.set(x, false);
                blocked.set(y, false);
                if let Some(path) = shortest_path_avoiding(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_avoiding(g: &SimpleGraph, from: usize, to: usize, blocked: &FixedBitSet) -> Option<Vec<usize>> {
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut q = VecDeque::from([from]);
    while let Some(u) = q.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut w = to;
            while w != from {
                w = prev[w];
                path.push(w);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).ones() {
            if prev[w] == usize::MAX && !blocked.contains(w) {
                prev[w] = u;
                q.push_back(w);
            }
        }
    }
    None
}

/// An induced cycle of odd length at least 5, in cycle order.
///
/// Exhaustive: grows induced paths from each start vertex `s` through
/// vertices larger than `s`, closing when the path returns to `s`.
pub fn find_odd_hole(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.order();
    for s in 0..n {
        let mut allowed = FixedBitSet::with_capacity(n);
        allowed.insert_range(s + 1..);
        for p1 in g.neighbors(s).ones().filter(|&p| p > s) {
            let mut path = vec![s, p1];
            let inner = FixedBitSet::with_capacity(n);
            if extend_hole(g, &allowed, &mut path, &inner) {
                return Some(path);
            }
        }
    }
    None
}

// `inner` is the union of the neighbourhoods of path[1..len-1].
fn extend_hole(g: &SimpleGraph, allowed: &FixedBitSet, path: &mut Vec<usize>, inner: &FixedBitSet) -> bool {
    let s = path[0];
    let last = *path.last().expect("path is non-empty");
    let mut cand = g.neighbors(last).clone();
    cand.intersect_with(allowed);
    cand.difference_with(inner);
    for &p in path.iter() {
        cand.set(p, false);
    }
    for v in cand.ones() {
        if g.has_edge(v, s) {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 && path[1] < v {
                path.push(v);
                return true;
            }
            continue;
        }
        let mut next_inner = inner.clone();
        next_inner.union_with(g.neighbors(last));
        path.push(v);
        if extend_hole(g, allowed, path, &next_inner) {
            return true;
        }
        path.pop();
    }
    false
}
