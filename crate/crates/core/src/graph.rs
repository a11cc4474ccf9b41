//! Simple undirected graphs on dense vertex ids and local complementation.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{Vertex, VertexSet};
use crate::word::Word;

pub type Edge = (Vertex, Vertex);

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency is kept as one bitset row per vertex; rows are symmetric and
/// never contain their own vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// The star on `n` vertices with center 0.
    pub fn star(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (0, v))).expect("valid star")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, edges).expect("valid petersen")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.set(u, v, false);
        Ok(())
    }

    fn set(&mut self, u: Vertex, v: Vertex, present: bool) {
        if present {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        } else {
            self.rows[u].remove(v);
            self.rows[v].remove(u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Open neighborhood. Panics on an out-of-range vertex.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.rows[v].is_empty()).collect()
    }

    /// The local complement at `a`: adjacency between every pair of distinct
    /// neighbors of `a` is toggled, everything else is kept.
    pub fn local_complement(&self, a: Vertex) -> Result<Graph> {
        self.check_vertex(a)?;
        let mut g = self.clone();
        g.local_complement_in_place(a);
        Ok(g)
    }

    pub(crate) fn local_complement_in_place(&mut self, a: Vertex) {
        let hood = self.rows[a].clone();
        for x in hood.iter() {
            let row = &mut self.rows[x];
            row.symmetric_difference_with(&hood);
            // x is in its own toggle mask; undo the self-loop.
            row.toggle(x);
        }
    }

    /// Applies the local complements of `word` left to right.
    pub fn apply_word(&self, word: &Word) -> Result<Graph> {
        word.check(self.n())?;
        let mut g = self.clone();
        for &a in word.letters() {
            g.local_complement_in_place(a);
        }
        Ok(g)
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing id
    /// order. The second component maps new ids back to ids of `self`.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.rows[v].iter() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    h.set(i, j, true);
                }
            }
        }
        (h, map)
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reachable_within(&self, start: Vertex, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n());
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.rows[v].iter() {
                if within.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Whether `g[s]` is connected. The empty set counts as connected.
    pub fn is_connected_on(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reachable_within(v, s).len() == s.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(&self.vertices())
    }

    /// Connected components of `g[s]`, ordered by smallest member.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.clone();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.reachable_within(v, &remaining);
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
