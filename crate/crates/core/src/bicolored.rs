use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet};
use crate::word::Word;

/// A bicoloration: every vertex carries `+1` or `-1`.
///
/// Stored as the set of `-1` vertices, so flips are bitset xors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    minus: VertexSet,
}

impl Coloring {
    pub fn all_plus(n: usize) -> Self {
        Coloring {
            minus: VertexSet::empty(n),
        }
    }

    pub fn all_minus(n: usize) -> Self {
        Coloring {
            minus: VertexSet::full(n),
        }
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let mut minus = VertexSet::empty(signs.len());
        for (v, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => minus.insert(v),
                other => return Err(Error::InvalidColor(other.into())),
            }
        }
        Ok(Coloring { minus })
    }

    /// The coloring that is `-1` exactly on `minus`.
    pub fn from_minus_set(minus: VertexSet) -> Self {
        Coloring { minus }
    }

    pub fn n(&self) -> usize {
        self.minus.universe()
    }

    pub fn sign(&self, v: Vertex) -> i8 {
        if self.minus.contains(v) {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.n()).map(|v| self.sign(v)).collect()
    }

    pub fn minus_set(&self) -> &VertexSet {
        &self.minus
    }

    /// Negates the colors on `s`.
    pub fn flipped(&self, s: &VertexSet) -> Coloring {
        let mut minus = self.minus.clone();
        minus.symmetric_difference_with(s);
        Coloring { minus }
    }

    pub fn negated(&self) -> Coloring {
        Coloring {
            minus: self.minus.complement(),
        }
    }

    /// Vertices where the two colorings differ.
    pub fn disagreement(&self, other: &Coloring) -> VertexSet {
        self.minus.symmetric_difference(&other.minus)
    }

    pub(crate) fn flip_in_place(&mut self, s: &VertexSet) {
        self.minus.symmetric_difference_with(s);
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.n())
            .map(|v| if self.minus.contains(v) { '-' } else { '+' })
            .collect();
        write!(f, "Coloring({s})")
    }
}

/// A graph together with a bicoloration of its vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BicoloredGraph {
    graph: Graph,
    coloring: Coloring,
}

impl BicoloredGraph {
    pub fn new(graph: Graph, coloring: Coloring) -> Result<Self> {
        if graph.n() != coloring.n() {
            return Err(Error::SizeMismatch {
                expected: graph.n(),
                found: coloring.n(),
            });
        }
        Ok(BicoloredGraph { graph, coloring })
    }

    pub fn all_plus(graph: Graph) -> Self {
        let coloring = Coloring::all_plus(graph.n());
        BicoloredGraph { graph, coloring }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn into_parts(self) -> (Graph, Coloring) {
        (self.graph, self.coloring)
    }

    /// Local inversion at `a`: local complement plus negating every neighbor
    /// of `a`. The color of `a` itself never changes.
    pub fn local_inversion(&self, a: Vertex) -> Result<BicoloredGraph> {
        self.graph.check_vertex(a)?;
        let mut b = self.clone();
        b.invert_in_place(a);
        Ok(b)
    }

    fn invert_in_place(&mut self, a: Vertex) {
        let hood = self.graph.neighbors(a).clone();
        self.coloring.flip_in_place(&hood);
        self.graph.local_complement_in_place(a);
    }

    pub fn apply_word(&self, word: &Word) -> Result<BicoloredGraph> {
        word.check(self.n())?;
        let mut b = self.clone();
        for &a in word.letters() {
            b.invert_in_place(a);
        }
        Ok(b)
    }

    /// `B^S`: same graph, colors negated exactly on `s`.
    pub fn flip(&self, s: &VertexSet) -> Result<BicoloredGraph> {
        if s.universe() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: s.universe(),
            });
        }
        Ok(BicoloredGraph {
            graph: self.graph.clone(),
            coloring: self.coloring.flipped(s),
        })
    }
}
