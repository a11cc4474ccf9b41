//! Certified word synthesis: color reversal of whole graphs and induced
//! subgraphs, single-vertex flips, bicoloration transforms, and the explicit
//! `3n` words for stars and complete graphs.
//!
//! Every word produced here flips exactly its target set for *every*
//! coloring and leaves the graph unchanged; the length bound is checked when
//! the certificate is built.

use std::fmt;

use serde::Serialize;

use crate::bicolored::{BicoloredGraph, Coloring};
use crate::error::{Error, Result};
use crate::gadgets::{
    find_p3_end, find_triangle, gadget_edge, gadget_p3_end, gadget_p3_ends, gadget_triangle,
};
use crate::graph::Graph;
use crate::partition::{p3_partition, perfect_forest, RootedTree};
use crate::vertex_set::{Vertex, VertexSet};
use crate::word::Word;

/// Which end of a word must carry the designated vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    End,
    Start,
}

/// How a single vertex was flipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingleFlipRoute {
    Triangle,
    P3End,
    /// The vertex has a degree-one neighbor; inverting there flips it alone.
    PendantNeighbor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TransformStrategy {
    #[serde(rename = "fix-V1")]
    FixDisagreement,
    #[serde(rename = "flip-V0-then-all")]
    FlipAgreementThenAll,
}

impl fmt::Display for TransformStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformStrategy::FixDisagreement => "fix-V1",
            TransformStrategy::FlipAgreementThenAll => "flip-V0-then-all",
        })
    }
}

/// Provenance of a certified word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    BaseCase,
    SingleFlip(SingleFlipRoute),
    OddTree,
    EvenSubgraph,
    OddSubgraph,
    ColorReversal,
    /// One strategy per component whose colors had to change.
    Transform(Vec<TransformStrategy>),
    Star,
    Complete,
}

/// A word together with the set it flips and the bound it is proven to meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedWord {
    pub word: Word,
    pub target_flip: VertexSet,
    pub bound: usize,
    pub construction: Construction,
    /// Length after free reduction.
    pub reduced_len: usize,
}

impl CertifiedWord {
    fn new(
        word: Word,
        target_flip: VertexSet,
        bound: usize,
        construction: Construction,
    ) -> Result<Self> {
        if word.len() > bound {
            return Err(Error::BoundExceeded {
                length: word.len(),
                bound,
                context: format!("{construction:?}"),
            });
        }
        let reduced_len = word.reduce().len();
        Ok(CertifiedWord {
            word,
            target_flip,
            bound,
            construction,
            reduced_len,
        })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn reduced(&self) -> Word {
        self.word.reduce()
    }

    /// Replays the word on `b` and checks the result is `b` with exactly the
    /// target set flipped.
    pub fn holds_on(&self, b: &BicoloredGraph) -> Result<bool> {
        Ok(b.apply_word(&self.word)? == b.flip(&self.target_flip)?)
    }
}

/// Color reversal bound for a connected graph: `4n-4` (even) or `4n-3` (odd).
pub fn reversal_bound(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        _ if n.is_multiple_of(2) => 4 * n - 4,
        _ => 4 * n - 3,
    }
}

/// `4n-4`/`4n-3` for one component, `4n-3t` for `t >= 2` components.
pub fn reversal_bound_with_components(n: usize, components: usize) -> usize {
    if components <= 1 {
        reversal_bound(n)
    } else {
        4 * n - 3 * components
    }
}

/// `floor((11n - 3t) / 2)` for a graph with `t` components.
pub fn transform_bound(n: usize, components: usize) -> usize {
    (11 * n).saturating_sub(3 * components) / 2
}

fn check_subset(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: s.universe(),
        });
    }
    Ok(())
}

fn single(n: usize, v: Vertex) -> VertexSet {
    let mut s = VertexSet::empty(n);
    s.insert(v);
    s
}

/// Words for the three smallest connected graphs: `ab` on K2,
/// `abababcac` on K3 and `ababacacb` on P3 with `b` the middle vertex.
pub fn base_case_word(g: &Graph) -> Result<CertifiedWord> {
    let word = match (g.n(), g.edge_count()) {
        (2, 1) => Word::from([0, 1]),
        (3, 3) => {
            let (a, b, c) = (0, 1, 2);
            Word::from([a, b, a, b, a, b, c, a, c])
        }
        (3, 2) => {
            let b = (0..3)
                .find(|&v| g.degree(v) == 2)
                .expect("P3 has a middle vertex");
            let mut ends = (0..3).filter(|&v| v != b);
            let (a, c) = (ends.next().unwrap(), ends.next().unwrap());
            Word::from([a, b, a, b, a, c, a, c, b])
        }
        _ => {
            return Err(Error::Precondition(format!(
                "base case needs K2, K3 or P3, got {g:?}"
            )))
        }
    };
    let bound = if g.n() == 2 { 2 } else { 9 };
    CertifiedWord::new(word, g.vertices(), bound, Construction::BaseCase)
}

/// Seven-letter (or shorter) word flipping only `a`. Needs `a` non-isolated.
fn single_flip_word(g: &Graph, a: Vertex) -> Result<(Word, SingleFlipRoute)> {
    let all = g.vertices();
    if let Some((b, c)) = find_triangle(g, a, &all) {
        return Ok((gadget_triangle(a, b, c), SingleFlipRoute::Triangle));
    }
    if let Some((b, c)) = find_p3_end(g, a, &all) {
        return Ok((gadget_p3_end(a, b, c), SingleFlipRoute::P3End));
    }
    // No triangle and no induced P3 ending at a: every neighbor of a sees only a.
    match g.neighbors(a).iter().find(|&x| g.degree(x) == 1) {
        Some(x) => Ok((Word::from([x]), SingleFlipRoute::PendantNeighbor)),
        None => Err(Error::Unsatisfiable(format!(
            "vertex {a} is isolated; its color cannot change"
        ))),
    }
}

/// A word flipping exactly `a` in a connected graph on at least 3 vertices.
pub fn flip_single(g: &Graph, a: Vertex) -> Result<CertifiedWord> {
    g.check_vertex(a)?;
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::Precondition(
            "single flips need a connected graph on at least 3 vertices".into(),
        ));
    }
    let (word, route) = single_flip_word(g, a)?;
    CertifiedWord::new(word, single(g.n(), a), 7, Construction::SingleFlip(route))
}

fn check_induced_tree(g: &Graph, t: &RootedTree) -> Result<()> {
    if t.vertices().universe() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: t.vertices().universe(),
        });
    }
    if t.edges().iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::Precondition("tree edge missing from graph".into()));
    }
    let (h, _) = g.induced(t.vertices());
    if h.edge_count() != t.edges().len() {
        return Err(Error::Precondition(
            "tree is not an induced subgraph".into(),
        ));
    }
    if t.size() < 4 || !t.is_odd_tree() {
        return Err(Error::Precondition(
            "need an odd tree on at least 4 vertices".into(),
        ));
    }
    Ok(())
}

/// Odd-tree reversal word ending with the root of `tree`; `4|T| - 4` letters.
fn odd_tree_word(tree: &RootedTree) -> Result<Word> {
    let partition = p3_partition(tree)?;
    let (r, v) = partition.k2;
    // The merged finishing block needs a P3 centered at r, or at v when r is a leaf.
    let hub = if tree.degree(r) > 1 { r } else { v };
    let skip = partition
        .p3s
        .iter()
        .position(|p| p.center == hub)
        .expect("a non-leaf K2 endpoint centers some P3");

    let mut word = Word::empty();
    for (i, p) in partition.p3s.iter().enumerate() {
        if i != skip {
            word.extend_from(&gadget_p3_ends(p.end_a, p.end_b, p.center));
        }
    }
    let (x, y) = (partition.p3s[skip].end_a, partition.p3s[skip].end_b);
    let tail = if hub == r {
        // (vrvrvr)(rxyxyxyr) with the inner rr cancelled
        [v, r, v, r, v, x, y, x, y, x, y, r]
    } else {
        // (vxyxyxyv)(vrvrvr) with the inner vv cancelled
        [v, x, y, x, y, x, y, r, v, r, v, r]
    };
    word.extend_from(&Word::from(tail));
    Ok(word)
}

/// Reverses the colors of an induced odd tree using exactly `4|T| - 4`
/// letters, with `r` as the last (or first) letter.
pub fn reverse_odd_tree(
    g: &Graph,
    tree: &RootedTree,
    r: Vertex,
    anchor: Anchor,
) -> Result<CertifiedWord> {
    check_induced_tree(g, tree)?;
    let word = odd_tree_word(&tree.rerooted(r)?)?;
    let word = match anchor {
        Anchor::End => word,
        Anchor::Start => word.reversed(),
    };
    let bound = 4 * tree.size() - 4;
    CertifiedWord::new(word, tree.vertices().clone(), bound, Construction::OddTree)
}

fn check_connected_subset(g: &Graph, s: &VertexSet, min: usize, odd: bool) -> Result<()> {
    check_subset(g, s)?;
    if s.len() < min || (s.len() % 2 == 1) != odd {
        return Err(Error::Precondition(format!(
            "need an {} vertex set of size >= {min}, got {}",
            if odd { "odd" } else { "even" },
            s.len()
        )));
    }
    if !g.is_connected_on(s) {
        return Err(Error::Precondition(
            "induced subgraph is not connected".into(),
        ));
    }
    Ok(())
}

/// Even-subgraph reversal ending with `v`: one word per perfect-forest tree,
/// `v`'s tree last.
fn even_subgraph_word(g: &Graph, s: &VertexSet, v: Vertex) -> Result<Word> {
    let (h, map) = g.induced(s);
    let forest = perfect_forest(&h)?.relabel(g.n(), &map);
    let last = forest.tree_of(v).expect("forest spans s");
    let order = (0..forest.trees.len())
        .filter(|&i| i != last)
        .chain(std::iter::once(last));

    let mut word = Word::empty();
    for i in order {
        let tree = &forest.trees[i];
        let anchor = if i == last {
            v
        } else {
            tree.vertices.first().expect("trees are non-empty")
        };
        if tree.size() == 2 {
            let other = tree.vertices.iter().find(|&u| u != anchor).unwrap();
            word.extend_from(&gadget_edge(other, anchor));
        } else {
            word.extend_from(&odd_tree_word(&tree.rooted_at(anchor)?)?);
        }
    }
    Ok(word)
}

/// Reverses the colors of a connected induced subgraph of even order
/// `n' >= 4` in at most `4n' - 4` letters, anchored at `v`.
pub fn reverse_even_subgraph(
    g: &Graph,
    s: &VertexSet,
    v: Vertex,
    anchor: Anchor,
) -> Result<CertifiedWord> {
    check_connected_subset(g, s, 4, false)?;
    if !s.contains(v) {
        return Err(Error::Precondition(format!(
            "anchor {v} not in the subgraph"
        )));
    }
    let word = even_subgraph_word(g, s, v)?;
    let word = match anchor {
        Anchor::End => word,
        Anchor::Start => word.reversed(),
    };
    CertifiedWord::new(word, s.clone(), 4 * s.len() - 4, Construction::EvenSubgraph)
}

fn odd_subgraph_word(g: &Graph, s: &VertexSet) -> Result<Word> {
    let a = s
        .iter()
        .find(|&a| {
            let mut rest = s.clone();
            rest.remove(a);
            g.is_connected_on(&rest)
        })
        .expect("every connected graph has a non-cut vertex");
    let mut rest = s.clone();
    rest.remove(a);

    if let Some((b, c)) = find_triangle(g, a, s) {
        // abacbac, then the even part starting at c; the shared c cancels.
        let first = gadget_triangle(a, b, c);
        let second = even_subgraph_word(g, &rest, c)?.reversed();
        debug_assert_eq!((first.last(), second.first()), (Some(c), Some(c)));
        Ok(first.letters()[..first.len() - 1]
            .iter()
            .chain(&second.letters()[1..])
            .copied()
            .collect())
    } else {
        let (b, c) = find_p3_end(g, a, s).expect("a has a neighbor with another neighbor");
        // the even part ending at c, then cabacba; the shared c cancels.
        let first = even_subgraph_word(g, &rest, c)?;
        let second = gadget_p3_end(a, b, c);
        debug_assert_eq!((first.last(), second.first()), (Some(c), Some(c)));
        Ok(first.letters()[..first.len() - 1]
            .iter()
            .chain(&second.letters()[1..])
            .copied()
            .collect())
    }
}

/// Reverses the colors of a connected induced subgraph of odd order
/// `n' >= 5` in at most `4n' - 3` letters.
pub fn reverse_odd_subgraph(g: &Graph, s: &VertexSet) -> Result<CertifiedWord> {
    check_connected_subset(g, s, 5, true)?;
    let word = odd_subgraph_word(g, s)?;
    CertifiedWord::new(word, s.clone(), 4 * s.len() - 3, Construction::OddSubgraph)
}

/// Reversal word for a whole connected component of `g`.
fn component_reversal_word(g: &Graph, comp: &VertexSet) -> Result<Word> {
    match comp.len() {
        0 => Ok(Word::empty()),
        1 => Err(Error::Unsatisfiable(format!(
            "vertex {} is isolated; its color cannot change",
            comp.first().unwrap()
        ))),
        2 | 3 => {
            let (h, map) = g.induced(comp);
            let base = base_case_word(&h)?;
            Ok(base.word.letters().iter().map(|&v| map[v]).collect())
        }
        k if k % 2 == 0 => even_subgraph_word(g, comp, comp.first().unwrap()),
        _ => odd_subgraph_word(g, comp),
    }
}

/// Reversal word for a connected induced subgraph that may have edges to
/// the rest of `g`, so the standalone K2/K3/P3 words are not usable.
fn embedded_reversal_word(g: &Graph, s: &VertexSet) -> Result<Word> {
    let members = s.to_vec();
    match members.len() {
        1 => single_flip_word(g, members[0]).map(|(w, _)| w),
        2 => Ok(gadget_edge(members[0], members[1])),
        3 => {
            let (x, y, z) = (members[0], members[1], members[2]);
            if g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z) {
                Ok(gadget_edge(x, y).concat(&gadget_triangle(z, x, y)))
            } else {
                let center = *members
                    .iter()
                    .find(|&&v| members.iter().all(|&u| u == v || g.has_edge(u, v)))
                    .expect("connected 3-vertex set has a center");
                let mut ends = members.iter().copied().filter(|&v| v != center);
                let (p, q) = (ends.next().unwrap(), ends.next().unwrap());
                Ok(gadget_edge(p, center).concat(&gadget_p3_end(q, p, center)))
            }
        }
        k if k % 2 == 0 => even_subgraph_word(g, s, members[0]),
        _ => odd_subgraph_word(g, s),
    }
}

/// Reverses every color of `g`. Each component gets the base word (2 or 3
/// vertices), the even-subgraph word, or the odd-subgraph word.
///
/// Fails with [`Error::Unsatisfiable`] if `g` has an isolated vertex.
pub fn color_reversal_word(g: &Graph) -> Result<CertifiedWord> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::Unsatisfiable(format!(
            "vertex {v} is isolated; its color cannot change"
        )));
    }
    let components = g.components();
    let mut word = Word::empty();
    for comp in &components {
        word.extend_from(&component_reversal_word(g, comp)?);
    }
    let bound = reversal_bound_with_components(g.n(), components.len());
    CertifiedWord::new(word, g.vertices(), bound, Construction::ColorReversal)
}

/// Flips `s` (any vertex set without isolated vertices of `g`) component by
/// component of `g[s]`.
fn flip_set_word(g: &Graph, s: &VertexSet) -> Result<Word> {
    let mut word = Word::empty();
    for part in g.components_within(s) {
        word.extend_from(&embedded_reversal_word(g, &part)?);
    }
    Ok(word)
}

/// A word turning `(g, from)` into `(g, to)`.
///
/// Per component, either flips the disagreement set directly, or flips the
/// agreement set and then reverses the whole component, whichever realized
/// word is shorter.
pub fn transform_word(g: &Graph, from: &Coloring, to: &Coloring) -> Result<CertifiedWord> {
    for c in [from, to] {
        if c.n() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                found: c.n(),
            });
        }
    }
    let target = from.disagreement(to);
    let components = g.components();
    let mut word = Word::empty();
    let mut strategies = Vec::new();
    for comp in &components {
        let disagree = comp.intersection(&target);
        if disagree.is_empty() {
            continue;
        }
        if comp.len() == 1 {
            return Err(Error::Unsatisfiable(format!(
                "vertex {} is isolated; its color cannot change",
                comp.first().unwrap()
            )));
        }
        let mut agree = comp.clone();
        agree.difference_with(&disagree);
        let reverse_all = component_reversal_word(g, comp)?;
        if agree.is_empty() {
            word.extend_from(&reverse_all);
            strategies.push(TransformStrategy::FlipAgreementThenAll);
            continue;
        }
        let direct = flip_set_word(g, &disagree)?;
        let indirect = flip_set_word(g, &agree)?.concat(&reverse_all);
        if direct.len() <= indirect.len() {
            word.extend_from(&direct);
            strategies.push(TransformStrategy::FixDisagreement);
        } else {
            word.extend_from(&indirect);
            strategies.push(TransformStrategy::FlipAgreementThenAll);
        }
    }
    let bound = transform_bound(g.n(), components.len());
    CertifiedWord::new(word, target, bound, Construction::Transform(strategies))
}

/// `(c1 c0 c1 c0 c1)(c2 c0 c2)...(c_{n-1} c0 c_{n-1})(c0)`, length `3n`,
/// reversing the star with center 0 and leaves `1..n`.
pub fn star_word(n: usize) -> Result<CertifiedWord> {
    if n < 2 {
        return Err(Error::Precondition(format!("star needs n >= 2, got {n}")));
    }
    let word = star_letters(n);
    CertifiedWord::new(word, VertexSet::full(n), 3 * n, Construction::Star)
}

fn star_letters(n: usize) -> Word {
    let mut word = Word::from([1, 0, 1, 0, 1]);
    for leaf in 2..n {
        word.extend_from(&Word::from([leaf, 0, leaf]));
    }
    word.push(0);
    word
}

/// `(c0)` followed by the star word with its final `c0` dropped (the
/// trailing `c0 c0` cancels); length `3n`, reversing `K_n`.
pub fn complete_word(n: usize) -> Result<CertifiedWord> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    let star = star_letters(n);
    let word: Word = std::iter::once(0)
        .chain(star.letters()[..star.len() - 1].iter().copied())
        .collect();
    CertifiedWord::new(word, VertexSet::full(n), 3 * n, Construction::Complete)
}
