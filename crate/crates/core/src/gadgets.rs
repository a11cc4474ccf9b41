//! Constant-length words that flip one or two vertices while restoring the
//! graph, and the searches that find roles for them.

use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet};
use crate::word::Word;

/// `ababab`: flips `a` and `b` when `ab` is an edge.
pub fn gadget_edge(a: Vertex, b: Vertex) -> Word {
    Word::from([a, b, a, b, a, b])
}

/// `abacbac`: flips `a` alone when `abc` is a triangle.
pub fn gadget_triangle(a: Vertex, b: Vertex, c: Vertex) -> Word {
    Word::from([a, b, a, c, b, a, c])
}

/// `cabababc`: flips the ends `a`, `b` of an induced path `a - c - b`.
pub fn gadget_p3_ends(a: Vertex, b: Vertex, c: Vertex) -> Word {
    Word::from([c, a, b, a, b, a, b, c])
}

/// `cabacba`: flips the end `a` of an induced path `a - c - b`.
pub fn gadget_p3_end(a: Vertex, b: Vertex, c: Vertex) -> Word {
    Word::from([c, a, b, a, c, b, a])
}

/// Smallest `(b, c)` with `b < c` such that `a, b, c` is a triangle inside `within`.
pub fn find_triangle(g: &Graph, a: Vertex, within: &VertexSet) -> Option<(Vertex, Vertex)> {
    let hood = g.neighbors(a).intersection(within);
    for b in hood.iter() {
        for c in hood.iter().filter(|&c| c > b) {
            if g.has_edge(b, c) {
                return Some((b, c));
            }
        }
    }
    None
}

/// Smallest `(b, c)` such that `a - c - b` is an induced path inside `within`.
pub fn find_p3_end(g: &Graph, a: Vertex, within: &VertexSet) -> Option<(Vertex, Vertex)> {
    for b in within.iter() {
        if b == a || g.has_edge(a, b) {
            continue;
        }
        let common = g.neighbors(a).intersection(g.neighbors(b));
        if let Some(c) = common.iter().find(|&c| within.contains(c)) {
            return Some((b, c));
        }
    }
    None
}
