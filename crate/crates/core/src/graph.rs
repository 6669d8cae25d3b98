//! Dense undirected and directed graphs over labelled vertices.

use std::collections::HashSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the number of vertices of any graph.
pub const MAX_VERTICES: usize = 512;

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_VERTICES {
        return Err(Error::resource("graph vertex count", MAX_VERTICES));
    }
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::input(format!("duplicate vertex label {l:?}")));
        }
    }
    Ok(())
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Simple undirected graph stored as one adjacency bitset per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
}

impl SimpleGraph {
    /// Edgeless graph on the given labels.
    pub fn new(labels: Vec<String>) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        Ok(SimpleGraph {
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(labels)?;
        let n = g.order();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph on vertices labelled "0".."n-1".
    pub fn with_order(n: usize) -> Result<Self> {
        SimpleGraph::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(complement_graph(&SimpleGraph::with_order(n)?))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Adds `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.adj.iter().enumerate() {
            out.extend(a.ones().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Same adjacency under new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::input("relabel: wrong number of labels"));
        }
        check_labels(&labels)?;
        Ok(SimpleGraph {
            labels,
            adj: self.adj.clone(),
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort();
        let mut s = format!("graph {} {{\n", quote(name));
        for v in order {
            let _ = writeln!(s, "  {};", quote(&self.labels[v]));
        }
        for (a, b) in edges {
            let _ = writeln!(s, "  {} -- {};", quote(a), quote(b));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_string(&self) -> String {
        let doc = EdgeListDoc {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&doc).expect("edge list serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc: EdgeListDoc =
            serde_json::from_str(text).map_err(|e| Error::input(format!("edge list: {e}")))?;
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(doc.vertices, &edges)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeListDoc {
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcListDoc {
    vertices: Vec<String>,
    arcs: Vec<[usize; 2]>,
}

pub fn complement_graph(g: &SimpleGraph) -> SimpleGraph {
    let n = g.order();
    let adj = (0..n)
        .map(|v| {
            let mut a = g.adj[v].clone();
            a.toggle_range(..);
            a.set(v, false);
            a
        })
        .collect();
    SimpleGraph {
        labels: g.labels.clone(),
        adj,
    }
}

/// Subgraph induced on `vertices`, kept in the given order.
pub fn induced_subgraph(g: &SimpleGraph, vertices: &[usize]) -> Result<SimpleGraph> {
    let n = g.order();
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        return Err(Error::input(format!("vertex {v} out of range for {n} vertices")));
    }
    let labels = vertices.iter().map(|&v| g.labels[v].clone()).collect();
    let mut h = SimpleGraph::new(labels)?;
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
    }
    Ok(h)
}

fn same_vertices(a: &SimpleGraph, b: &SimpleGraph) -> Result<()> {
    if a.labels != b.labels {
        return Err(Error::input("graphs have different vertex labels"));
    }
    Ok(())
}

/// True when every edge of `h` is an edge of `g`.
pub fn is_spanning_subgraph(h: &SimpleGraph, g: &SimpleGraph) -> Result<bool> {
    same_vertices(h, g)?;
    Ok(h.adj.iter().zip(&g.adj).all(|(a, b)| a.is_subset(b)))
}

/// Edges of `g1` that are not edges of `g2`.
pub fn edge_difference(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<SimpleGraph> {
    same_vertices(g1, g2)?;
    let adj = g1
        .adj
        .iter()
        .zip(&g2.adj)
        .map(|(a, b)| {
            let mut d = a.clone();
            d.difference_with(b);
            d
        })
        .collect();
    Ok(SimpleGraph {
        labels: g1.labels.clone(),
        adj,
    })
}

/// Directed graph without loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    out: Vec<FixedBitSet>,
}

impl Digraph {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        Ok(Digraph {
            labels,
            out: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    pub fn from_arcs(labels: Vec<String>, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(labels)?;
        let n = d.order();
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::input(format!("arc ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Adds `u -> v`; loops are ignored.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        if u != v {
            self.out[u].insert(v);
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &FixedBitSet {
        &self.out[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|a| a.count_ones(..)).sum()
    }

    /// Arcs as `(tail, head)` pairs in index order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, a) in self.out.iter().enumerate() {
            out.extend(a.ones().map(|v| (u, v)));
        }
        out
    }

    /// Underlying undirected graph.
    pub fn underlying(&self) -> SimpleGraph {
        let mut g = SimpleGraph {
            labels: self.labels.clone(),
            adj: self.out.clone(),
        };
        for (u, v) in self.arcs() {
            g.adj[v].insert(u);
        }
        g
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut arcs: Vec<(&str, &str)> = self
            .arcs()
            .into_iter()
            .map(|(u, v)| (self.label(u), self.label(v)))
            .collect();
        arcs.sort();
        let mut s = format!("digraph {} {{\n", quote(name));
        for v in order {
            let _ = writeln!(s, "  {};", quote(&self.labels[v]));
        }
        for (a, b) in arcs {
            let _ = writeln!(s, "  {} -> {};", quote(a), quote(b));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_string(&self) -> String {
        let doc = ArcListDoc {
            vertices: self.labels.clone(),
            arcs: self.arcs().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&doc).expect("arc list serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc: ArcListDoc =
            serde_json::from_str(text).map_err(|e| Error::input(format!("arc list: {e}")))?;
        let arcs: Vec<(usize, usize)> = doc.arcs.iter().map(|e| (e[0], e[1])).collect();
        Digraph::from_arcs(doc.vertices, &arcs)
    }
}
