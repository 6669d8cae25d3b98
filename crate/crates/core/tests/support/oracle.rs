//! Naive reference implementations used to cross-check the exact kernels.
//! Every function here is exponential and only meant for graphs with at most
//! a dozen vertices.

#![allow(dead_code, clippy::needless_range_loop)]

use algraph::{GraphClass, SimpleGraph};

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn induced_degrees(g: &SimpleGraph, s: &[usize]) -> Vec<usize> {
    s.iter()
        .map(|&u| s.iter().filter(|&&v| v != u && g.has_edge(u, v)).count())
        .collect()
}

fn induced_connected(g: &SimpleGraph, s: &[usize], complement: bool) -> bool {
    let mut seen = vec![false; s.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..s.len() {
            if !seen[j] && i != j && g.has_edge(s[i], s[j]) != complement {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// `s` induces a chordless cycle (in `g`, or in its complement).
fn is_cycle(g: &SimpleGraph, s: &[usize], complement: bool) -> bool {
    let k = s.len();
    let deg = induced_degrees(g, s);
    deg.iter().all(|&d| if complement { k - 1 - d == 2 } else { d == 2 }) && induced_connected(g, s, complement)
}

fn is_p4(g: &SimpleGraph, s: &[usize]) -> bool {
    let mut deg = induced_degrees(g, s);
    deg.sort_unstable();
    deg == [1, 1, 2, 2] && induced_connected(g, s, false)
}

fn is_2k2(g: &SimpleGraph, s: &[usize]) -> bool {
    induced_degrees(g, s) == [1, 1, 1, 1] && !induced_connected(g, s, false)
}

/// Membership decided by scanning every induced subgraph for the forbidden
/// list of the class.
pub fn in_class(g: &SimpleGraph, class: GraphClass) -> bool {
    let n = g.order();
    for k in 4..=n {
        for s in subsets_of_size(n, k) {
            let bad = match class {
                GraphClass::Perfect => k >= 5 && k % 2 == 1 && (is_cycle(g, &s, false) || is_cycle(g, &s, true)),
                GraphClass::Chordal => is_cycle(g, &s, false),
                GraphClass::Cograph => k == 4 && is_p4(g, &s),
                GraphClass::Split => (k == 4 && (is_cycle(g, &s, false) || is_2k2(g, &s))) || (k == 5 && is_cycle(g, &s, false)),
                GraphClass::Threshold => k == 4 && (is_cycle(g, &s, false) || is_2k2(g, &s) || is_p4(g, &s)),
            };
            if bad {
                return false;
            }
        }
    }
    true
}

pub fn clique_number(g: &SimpleGraph) -> usize {
    let n = g.order();
    (0..1u32 << n)
        .filter(|&m| {
            (0..n).all(|u| (u + 1..n).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn colourable(g: &SimpleGraph, k: usize, colour: &mut Vec<usize>) -> bool {
    let v = colour.len();
    if v == g.order() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !g.has_edge(u, v) || colour[u] != c) {
            colour.push(c);
            if colourable(g, k, colour) {
                return true;
            }
            colour.pop();
        }
    }
    false
}

pub fn chromatic_number(g: &SimpleGraph) -> usize {
    (0..=g.order()).find(|&k| colourable(g, k, &mut Vec::new())).unwrap()
}

pub fn matching_number(g: &SimpleGraph) -> usize {
    fn rec(g: &SimpleGraph, used: &mut Vec<bool>) -> usize {
        let Some(u) = (0..g.order()).find(|&u| !used[u]) else {
            return 0;
        };
        used[u] = true;
        let mut best = rec(g, used);
        for v in 0..g.order() {
            if !used[v] && g.has_edge(u, v) {
                used[v] = true;
                best = best.max(1 + rec(g, used));
                used[v] = false;
            }
        }
        used[u] = false;
        best
    }
    rec(g, &mut vec![false; g.order()])
}

/// Largest `s ≤ cap` such that every `s`-set has a common neighbour, and
/// whether the cap was reached with the property still holding.
pub fn spread(g: &SimpleGraph, cap: usize) -> (usize, bool) {
    let n = g.order();
    let holds = |s: usize| {
        s <= n
            && subsets_of_size(n, s)
                .iter()
                .all(|set| (0..n).any(|w| set.iter().all(|&v| g.has_edge(v, w))))
    };
    for s in 1..=cap {
        if !holds(s) {
            return (s - 1, false);
        }
    }
    (cap, true)
}

/// `None` when disconnected.
pub fn diameter(g: &SimpleGraph) -> Option<usize> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    (m < inf).then_some(m)
}
