//! Materialized graphs and their text export formats.
//!
//! A tree plus a root type determines one graph: leaves become vertices,
//! numbered left to right as they appear in the serialized text, and two
//! vertices are adjacent exactly when their lowest common ancestor is a
//! join. Root types alternate down the tree, so a single bit at the root
//! fixes every node's type.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::cotree::{Cotree, NodeId};

/// The type of a tree's root node, and with it the graph the tree denotes.
///
/// The two graphs a tree yields are edge-complements of each other; the
/// join-rooted one is connected, the union-rooted one is not (except on a
/// single vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootType {
    /// The root merges its children's graphs without edges.
    Union,
    /// The root connects every pair of vertices from distinct children.
    Join,
}

impl RootType {
    /// The digit used in output lines: 0 for union, 1 for join.
    pub fn bit(self) -> u8 {
        match self {
            RootType::Union => 0,
            RootType::Join => 1,
        }
    }
}

/// An undirected simple graph over vertices `0..n`, stored as a sorted edge
/// set with each pair held as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> SimpleGraph {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Inserts the edge `{u, v}`; duplicates are ignored.
    ///
    /// # Panics
    ///
    /// Panics on self-loops and on endpoints outside `0..n`.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        assert_ne!(u, v, "self-loops are not allowed");
        assert!(
            (u as usize) < self.n && (v as usize) < self.n,
            "edge endpoint out of range"
        );
        self.edges.insert((u.min(v), u.max(v)));
    }

    /// True when `{u, v}` is an edge.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// The edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// True when every vertex is reachable from vertex 0 (vacuously true on
    /// zero or one vertices).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adjacency[u as usize].push(v as usize);
            adjacency[v as usize].push(u as usize);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Builds the graph a tree stands for under the given root type.
    ///
    /// Vertices are the leaves in serialization order. Each join node
    /// contributes the complete bipartite edges between every pair of its
    /// children's leaf sets, which touches each edge exactly once.
    pub fn from_cotree(tree: &Cotree, root: RootType) -> SimpleGraph {
        let mut graph = SimpleGraph::new(tree.leaves());
        let mut next = 0u32;
        collect_leaves(tree, tree.root(), root == RootType::Join, &mut next, &mut graph);
        graph
    }

    /// The multi-line edge list: an `n m` header, then one `u v` line per
    /// edge with `u < v`, in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// An undirected DOT block naming every vertex, so isolated vertices
    /// survive the round trip through layout tools.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn collect_leaves(
    tree: &Cotree,
    v: NodeId,
    join: bool,
    next: &mut u32,
    graph: &mut SimpleGraph,
) -> Vec<u32> {
    if tree.is_leaf(v) {
        let idx = *next;
        *next += 1;
        return vec![idx];
    }
    let blocks: Vec<Vec<u32>> = tree
        .children(v)
        .iter()
        .map(|&c| collect_leaves(tree, c, !join, next, graph))
        .collect();
    if join {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                for &u in &blocks[i] {
                    for &w in &blocks[j] {
                        graph.add_edge(u, w);
                    }
                }
            }
        }
    }
    blocks.concat()
}

/// True when `b` is the edge-complement of `a` on the same vertex set.
pub fn complement_check(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return false;
    }
    let all_pairs = n * n.saturating_sub(1) / 2;
    a.edge_count() + b.edge_count() == all_pairs && a.edges().all(|(u, v)| !b.has_edge(u, v))
}
