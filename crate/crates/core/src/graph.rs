//! NCCC- and CCC-graphs on conjugacy classes, plus complete multipartite shapes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ConjugacyPartition, FiniteGroup};

/// Simple undirected graph with a dense adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: Vec<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        complement(&Graph::empty(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The complete multipartite graph with the given part profile. Vertices
    /// are numbered part by part, parts in the order of `shape`.
    pub fn complete_multipartite(shape: &MultipartiteShape) -> Self {
        let mut part_of = Vec::new();
        let mut part = 0;
        for p in &shape.parts {
            for _ in 0..p.count {
                part_of.extend(std::iter::repeat_n(part, p.size));
                part += 1;
            }
        }
        let n = part_of.len();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                (u + 1..self.n)
                    .filter(move |&v| self.has_edge(u, v))
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Connected components, each sorted, in order of their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(u) = stack.pop() {
                members.push(u);
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Adjacency-list JSON: `{"n_vertices", "labels", "adjacency": [[...], ...]}`.
    pub fn to_adjacency_json(&self) -> serde_json::Value {
        let adjacency: Vec<Vec<usize>> = (0..self.n).map(|u| self.neighbors(u).collect()).collect();
        serde_json::json!({
            "n_vertices": self.n,
            "labels": self.labels,
            "adjacency": adjacency,
        })
    }

    /// Edge list, one `u v` per line, 0-based, `u < v`.
    pub fn to_edge_list(&self) -> String {
        self.edges()
            .into_iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect()
    }
}

/// Edge iff no (or, with `existential`, some) pair of class elements commutes.
fn class_graph(
    group: &FiniteGroup,
    partition: &ConjugacyPartition,
    existential: bool,
) -> Result<Graph> {
    let vertices: Vec<usize> = partition.non_central().collect();
    if vertices.is_empty() {
        return Err(Error::AbelianGroup);
    }
    let n = vertices.len();
    let mut g = Graph::empty(n);
    for (a, &va) in vertices.iter().enumerate() {
        let ca = &partition.classes[va];
        for (b, &vb) in vertices.iter().enumerate().skip(a + 1) {
            let cb = &partition.classes[vb];
            let some_commute = ca.iter().any(|&x| cb.iter().any(|&y| group.commutes(x, y)));
            if some_commute == existential {
                g.add_edge(a, b);
            }
        }
    }
    let labels = vertices
        .iter()
        .map(|&c| group.label(partition.representative(c)).to_string())
        .collect();
    Ok(g.with_labels(labels))
}

/// The non-commuting conjugacy class graph: vertices are the non-central
/// classes, joined when every pair of their elements fails to commute.
pub fn build_nccc(group: &FiniteGroup, partition: &ConjugacyPartition) -> Result<Graph> {
    class_graph(group, partition, false)
}

/// The commuting conjugacy class graph: joined when some pair commutes.
pub fn build_ccc(group: &FiniteGroup, partition: &ConjugacyPartition) -> Result<Graph> {
    class_graph(group, partition, true)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n;
    let mut adj = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            adj[u * n + v] = u != v && !g.has_edge(u, v);
        }
    }
    Graph {
        n,
        adj,
        labels: g.labels.clone(),
    }
}

/// `count` parts of `size` vertices each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Part {
    pub count: usize,
    pub size: usize,
}

/// Profile of a complete multipartite graph `K_{a1·p1, a2·p2, ...}`, kept
/// canonical: sizes strictly increasing, equal sizes merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultipartiteShape {
    pub parts: Vec<Part>,
}

impl MultipartiteShape {
    /// Canonicalizes `(count, size)` pairs. Zero counts or sizes are dropped.
    pub fn new(parts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut parts: Vec<Part> = parts
            .into_iter()
            .filter(|&(c, s)| c > 0 && s > 0)
            .map(|(count, size)| Part { count, size })
            .collect();
        parts.sort_by_key(|p| p.size);
        let mut merged: Vec<Part> = Vec::with_capacity(parts.len());
        for p in parts {
            match merged.last_mut() {
                Some(last) if last.size == p.size => last.count += p.count,
                _ => merged.push(p),
            }
        }
        MultipartiteShape { parts: merged }
    }

    pub fn n_vertices(&self) -> usize {
        self.parts.iter().map(|p| p.count * p.size).sum()
    }

    pub fn n_parts(&self) -> usize {
        self.parts.iter().map(|p| p.count).sum()
    }

    /// Edge count from the profile: `2e = n^2 - sum a_i p_i^2`.
    pub fn n_edges(&self) -> usize {
        let n = self.n_vertices();
        let within: usize = self.parts.iter().map(|p| p.count * p.size * p.size).sum();
        (n * n - within) / 2
    }

    pub fn as_pairs(&self) -> Vec<(usize, usize)> {
        self.parts.iter().map(|p| (p.count, p.size)).collect()
    }
}

impl fmt::Display for MultipartiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{}·{}", p.count, p.size))
            .collect();
        write!(f, "K_{{{}}}", parts.join(", "))
    }
}

/// Returns the multipartite profile of `g` when its complement is a disjoint
/// union of cliques, otherwise `None`.
pub fn detect_multipartite(g: &Graph) -> Option<MultipartiteShape> {
    let co = complement(g);
    let mut sizes = Vec::new();
    for comp in co.components() {
        let k = comp.len();
        let is_clique = comp
            .iter()
            .all(|&u| comp.iter().all(|&v| u == v || co.has_edge(u, v)));
        if !is_clique {
            return None;
        }
        sizes.push((1, k));
    }
    Some(MultipartiteShape::new(sizes))
}
