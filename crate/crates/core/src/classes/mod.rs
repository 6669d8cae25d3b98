//! Recognition of hereditary graph classes, with forbidden induced subgraph
//! witnesses.

mod forbidden;
mod invariants;

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complement_graph, induced_subgraph, SimpleGraph};
use crate::limits::Limits;

pub use forbidden::{find_chordless_cycle, find_odd_hole, find_p4, find_two_k2};
pub use invariants::{
    chromatic_number, clique_number, diameter, graph_invariant, is_weakly_perfect, matching_number,
    maximum_clique, spread, Invariant, InvariantValue,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Perfect,
    Chordal,
    Cograph,
    Split,
    Threshold,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Perfect,
        GraphClass::Chordal,
        GraphClass::Cograph,
        GraphClass::Split,
        GraphClass::Threshold,
    ];
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "perfect" => GraphClass::Perfect,
            "chordal" => GraphClass::Chordal,
            "cograph" => GraphClass::Cograph,
            "split" => GraphClass::Split,
            "threshold" => GraphClass::Threshold,
            _ => {
                return Err(Error::input(format!(
                    "unknown graph class {s:?} (expected perfect, chordal, cograph, split or threshold)"
                )))
            }
        })
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Perfect => "perfect",
            GraphClass::Chordal => "chordal",
            GraphClass::Cograph => "cograph",
            GraphClass::Split => "split",
            GraphClass::Threshold => "threshold",
        })
    }
}

/// A forbidden induced subgraph. Witness vertices are listed in the order
/// that exhibits the shape: around the cycle for holes, along the path for
/// `P4`, and as `[a, b, c, d]` with edges `ab`, `cd` for `2K2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "shape", content = "length")]
pub enum Configuration {
    /// Chordless cycle of the given length.
    Hole(usize),
    /// Complement of a chordless cycle; vertices in the order of that cycle.
    Antihole(usize),
    Path4,
    TwoK2,
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Configuration::Hole(k) => write!(f, "induced C{k}"),
            Configuration::Antihole(k) => write!(f, "induced complement of C{k}"),
            Configuration::Path4 => f.write_str("induced P4"),
            Configuration::TwoK2 => f.write_str("induced 2K2"),
        }
    }
}

/// `wt(u) + wt(v) ≥ threshold` exactly for the edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdCertificate {
    pub weights: Vec<i64>,
    pub threshold: i64,
}

impl ThresholdCertificate {
    pub fn certifies(&self, g: &SimpleGraph) -> bool {
        let n = g.order();
        self.weights.len() == n
            && (0..n).all(|u| {
                (u + 1..n).all(|v| g.has_edge(u, v) == (self.weights[u] + self.weights[v] >= self.threshold))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassWitness {
    pub class: GraphClass,
    pub verdict: bool,
    pub configuration: Option<Configuration>,
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ThresholdCertificate>,
}

impl ClassWitness {
    fn yes(class: GraphClass) -> Self {
        ClassWitness {
            class,
            verdict: true,
            configuration: None,
            witness: None,
            certificate: None,
        }
    }

    fn no(class: GraphClass, configuration: Configuration, witness: Vec<usize>) -> Self {
        ClassWitness {
            class,
            verdict: false,
            configuration: Some(configuration),
            witness: Some(witness),
            certificate: None,
        }
    }

    /// Re-checks a negative verdict against the graph.
    pub fn witness_is_valid(&self, g: &SimpleGraph) -> bool {
        match (&self.configuration, &self.witness) {
            (Some(c), Some(w)) => induces(g, *c, w) && forbidden_for(self.class, *c),
            (None, None) => self.verdict,
            _ => false,
        }
    }
}

fn forbidden_for(class: GraphClass, c: Configuration) -> bool {
    match class {
        GraphClass::Perfect => matches!(c, Configuration::Hole(k) | Configuration::Antihole(k) if k >= 5 && k % 2 == 1),
        GraphClass::Chordal => matches!(c, Configuration::Hole(k) if k >= 4),
        GraphClass::Cograph => c == Configuration::Path4,
        GraphClass::Split => matches!(c, Configuration::Hole(4) | Configuration::Hole(5) | Configuration::TwoK2),
        GraphClass::Threshold => matches!(c, Configuration::Hole(4) | Configuration::Path4 | Configuration::TwoK2),
    }
}

/// True when `vertices`, in the given order, induce exactly `c`.
pub fn induces(g: &SimpleGraph, c: Configuration, vertices: &[usize]) -> bool {
    let k = vertices.len();
    let mut distinct = FixedBitSet::with_capacity(g.order());
    for &v in vertices {
        if v >= g.order() || distinct.put(v) {
            return false;
        }
    }
    let want = |i: usize, j: usize| -> bool {
        let cyc = |len: usize| (i + 1) % len == j || (j + 1) % len == i;
        match c {
            Configuration::Hole(len) => cyc(len),
            Configuration::Antihole(len) => !cyc(len),
            Configuration::Path4 => i.abs_diff(j) == 1,
            Configuration::TwoK2 => (i.min(j), i.max(j)) == (0, 1) || (i.min(j), i.max(j)) == (2, 3),
        }
    };
    let expected_len = match c {
        Configuration::Hole(len) | Configuration::Antihole(len) => len,
        Configuration::Path4 | Configuration::TwoK2 => 4,
    };
    k == expected_len && (0..k).all(|i| (i + 1..k).all(|j| g.has_edge(vertices[i], vertices[j]) == want(i, j)))
}

pub fn classify(g: &SimpleGraph, class: GraphClass, limits: &Limits) -> Result<ClassWitness> {
    let cap = match class {
        GraphClass::Perfect => limits.max_perfect,
        _ => limits.max_classify,
    };
    if g.order() > cap {
        return Err(Error::resource(format!("{class} recognition vertex count"), cap));
    }
    Ok(match class {
        GraphClass::Perfect => perfect(g),
        GraphClass::Chordal => chordal(g),
        GraphClass::Cograph => cograph(g),
        GraphClass::Split => split(g),
        GraphClass::Threshold => threshold(g),
    })
}

fn perfect(g: &SimpleGraph) -> ClassWitness {
    // Odd holes and antiholes never contain twins, so twins can be dropped
    // first; the witness is still an induced subgraph of `g`.
    let keep = twin_free_vertices(g);
    let h = induced_subgraph(g, &keep).expect("indices are in range");
    if let Some(c) = find_odd_hole(&h) {
        let len = c.len();
        return ClassWitness::no(GraphClass::Perfect, Configuration::Hole(len), c.iter().map(|&i| keep[i]).collect());
    }
    if let Some(c) = find_odd_hole(&complement_graph(&h)) {
        let len = c.len();
        return ClassWitness::no(
            GraphClass::Perfect,
            Configuration::Antihole(len),
            c.iter().map(|&i| keep[i]).collect(),
        );
    }
    ClassWitness::yes(GraphClass::Perfect)
}

// Repeatedly removes one vertex of each pair of true or false twins.
fn twin_free_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    loop {
        let mut removed = false;
        let verts: Vec<usize> = alive.ones().collect();
        'scan: for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                let mut nu = g.neighbors(u).clone();
                let mut nv = g.neighbors(v).clone();
                nu.intersect_with(&alive);
                nv.intersect_with(&alive);
                nu.set(v, false);
                nv.set(u, false);
                if nu == nv {
                    alive.set(v, false);
                    removed = true;
                    break 'scan;
                }
            }
        }
        if !removed {
            return alive.ones().collect();
        }
    }
}

/// Lexicographic breadth-first search; returns vertices in visit order.
pub fn lex_bfs(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| label[a].cmp(&label[b]).then(b.cmp(&a)))
            .expect("unvisited vertex exists");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).ones() {
            if !visited[w] {
                label[w].push(n - step);
            }
        }
    }
    order
}

/// True when the reverse of a lexicographic BFS order is a perfect
/// elimination ordering.
pub fn has_perfect_elimination_order(g: &SimpleGraph) -> bool {
    let order = lex_bfs(g);
    let mut pos = vec![0usize; g.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let earlier: Vec<usize> = g.neighbors(v).ones().filter(|&w| pos[w] < pos[v]).collect();
        match earlier.iter().max_by_key(|&&w| pos[w]) {
            None => true,
            Some(&p) => earlier.iter().all(|&w| w == p || g.has_edge(w, p)),
        }
    })
}

fn chordal(g: &SimpleGraph) -> ClassWitness {
    if has_perfect_elimination_order(g) {
        return ClassWitness::yes(GraphClass::Chordal);
    }
    let c = find_chordless_cycle(g).expect("a graph without a perfect elimination order has a hole");
    ClassWitness::no(GraphClass::Chordal, Configuration::Hole(c.len()), c)
}

/// Cotree of a cograph: leaves are vertices, internal nodes are disjoint
/// unions or joins of their children.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

/// Builds the cotree by splitting into components of the graph or of its
/// complement; `None` when some induced subgraph is connected with a
/// connected complement.
pub fn cotree(g: &SimpleGraph) -> Option<Cotree> {
    let all: Vec<usize> = (0..g.order()).collect();
    if all.is_empty() {
        return Some(Cotree::Union(Vec::new()));
    }
    cotree_on(g, &all)
}

fn cotree_on(g: &SimpleGraph, verts: &[usize]) -> Option<Cotree> {
    if verts.len() == 1 {
        return Some(Cotree::Leaf(verts[0]));
    }
    let parts = components(g, verts, false);
    if parts.len() > 1 {
        return parts.iter().map(|p| cotree_on(g, p)).collect::<Option<_>>().map(Cotree::Union);
    }
    let parts = components(g, verts, true);
    if parts.len() > 1 {
        return parts.iter().map(|p| cotree_on(g, p)).collect::<Option<_>>().map(Cotree::Join);
    }
    None
}

// Components of g[verts], or of its complement.
fn components(g: &SimpleGraph, verts: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut left = FixedBitSet::with_capacity(g.order());
    left.extend(verts.iter().copied());
    let mut out = Vec::new();
    while let Some(s) = left.minimum() {
        left.set(s, false);
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            let mut next = left.clone();
            if complement {
                next.difference_with(g.neighbors(v));
            } else {
                next.intersect_with(g.neighbors(v));
            }
            for w in next.ones() {
                left.set(w, false);
                comp.push(w);
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn cograph(g: &SimpleGraph) -> ClassWitness {
    if cotree(g).is_some() {
        return ClassWitness::yes(GraphClass::Cograph);
    }
    let p = find_p4(g).expect("a non-cograph has an induced P4");
    ClassWitness::no(GraphClass::Cograph, Configuration::Path4, p)
}

/// Degree-sequence test: with degrees `d1 ≥ … ≥ dn` and `m` the largest `i`
/// with `di ≥ i - 1`, the graph is split iff
/// `d1 + … + dm = m(m-1) + d(m+1) + … + dn`.
pub fn is_split_by_degrees(g: &SimpleGraph) -> bool {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

fn split(g: &SimpleGraph) -> ClassWitness {
    if is_split_by_degrees(g) {
        return ClassWitness::yes(GraphClass::Split);
    }
    if let Some(w) = find_two_k2(g) {
        return ClassWitness::no(GraphClass::Split, Configuration::TwoK2, w);
    }
    if let Some(w) = forbidden::find_hole_of_length(g, 4) {
        return ClassWitness::no(GraphClass::Split, Configuration::Hole(4), w);
    }
    let w = forbidden::find_hole_of_length(g, 5).expect("a non-split graph has 2K2, C4 or C5");
    ClassWitness::no(GraphClass::Split, Configuration::Hole(5), w)
}

fn threshold(g: &SimpleGraph) -> ClassWitness {
    let n = g.order();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut weights = vec![0i64; n];
    for step in 0..n {
        let live = n - step;
        let pick = alive.ones().find_map(|v| {
            let d = g.neighbors(v).intersection_count(&alive);
            if d == 0 {
                Some((v, false))
            } else if d == live - 1 {
                Some((v, true))
            } else {
                None
            }
        });
        let Some((v, dominating)) = pick else {
            let w = find_two_k2(g)
                .map(|w| (Configuration::TwoK2, w))
                .or_else(|| forbidden::find_hole_of_length(g, 4).map(|w| (Configuration::Hole(4), w)))
                .or_else(|| find_p4(g).map(|w| (Configuration::Path4, w)))
                .expect("a non-threshold graph has 2K2, C4 or P4");
            return ClassWitness::no(GraphClass::Threshold, w.0, w.1);
        };
        // Later vertices get strictly smaller magnitudes, so the sign of
        // wt(u) + wt(v) is decided by whichever was removed first.
        let mag = live as i64;
        weights[v] = if dominating { mag } else { -mag };
        alive.set(v, false);
    }
    let mut w = ClassWitness::yes(GraphClass::Threshold);
    w.certificate = Some(ThresholdCertificate { weights, threshold: 1 });
    w
}
