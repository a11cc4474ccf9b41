//! Structural decompositions used by the synthesizer: the P3/K2 edge
//! partition of a rooted odd tree, and perfect forests of even-order
//! connected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::vertex_set::{Vertex, VertexSet};

/// A tree embedded in the vertex universe `0..universe`, with a chosen root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    vertices: VertexSet,
    edges: Vec<Edge>,
    adjacency: Graph,
    root: Vertex,
}

impl RootedTree {
    /// Validates that `edges` form a tree containing `root`. An empty edge
    /// list gives the single-vertex tree `{root}`.
    pub fn new(universe: usize, edges: Vec<Edge>, root: Vertex) -> Result<Self> {
        let adjacency = Graph::from_edges(universe, edges.iter().copied())?;
        adjacency.check_vertex(root)?;
        let mut vertices = VertexSet::empty(universe);
        vertices.insert(root);
        for &(u, v) in &edges {
            vertices.insert(u);
            vertices.insert(v);
        }
        if adjacency.edge_count() != edges.len() {
            return Err(Error::Precondition("duplicate tree edge".into()));
        }
        if edges.len() + 1 != vertices.len() || !adjacency.is_connected_on(&vertices) {
            return Err(Error::Precondition(format!(
                "edges {edges:?} do not form a tree"
            )));
        }
        let edges = adjacency.edges().collect();
        Ok(RootedTree {
            vertices,
            edges,
            adjacency,
            root,
        })
    }

    pub fn rerooted(&self, root: Vertex) -> Result<Self> {
        if !self.vertices.contains(root) {
            return Err(Error::Precondition(format!("{root} is not a tree vertex")));
        }
        Ok(RootedTree {
            root,
            ..self.clone()
        })
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency.degree(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        self.adjacency.neighbors(v)
    }

    pub fn is_odd_tree(&self) -> bool {
        self.vertices.iter().all(|v| self.degree(v) % 2 == 1)
    }

    /// Parent (None for the root) and depth of every tree vertex.
    pub fn parents_and_depths(&self) -> (Vec<Option<Vertex>>, Vec<usize>) {
        let universe = self.vertices.universe();
        let mut parent = vec![None; universe];
        let mut depth = vec![0; universe];
        let mut seen = VertexSet::empty(universe);
        seen.insert(self.root);
        let mut queue = VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            for w in self.adjacency.neighbors(v).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        (parent, depth)
    }
}

/// A path `end_a - center - end_b` of the edge partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P3 {
    pub end_a: Vertex,
    pub center: Vertex,
    pub end_b: Vertex,
}

/// Edges of an odd tree split into copies of P3 plus a single K2 whose first
/// endpoint is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub p3s: Vec<P3>,
    pub k2: Edge,
}

/// Splits the edges of a rooted odd tree into `(n-2)/2` P3s and one K2.
///
/// Each P3 has both ends as children of its center, the root is an end of
/// the K2, and every vertex is an end of exactly one part. Works by
/// repeatedly detaching two leaf children from a deepest vertex that has a
/// leaf child (ties broken by smallest id, then the two smallest leaves).
pub fn p3_partition(tree: &RootedTree) -> Result<EdgePartition> {
    let n = tree.size();
    if n < 2 || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "odd tree must have an even number (>= 2) of vertices, got {n}"
        )));
    }
    if !tree.is_odd_tree() {
        return Err(Error::Precondition(
            "tree has a vertex of even degree".into(),
        ));
    }

    let universe = tree.vertices().universe();
    let (parent, depth) = tree.parents_and_depths();
    let mut children = vec![VertexSet::empty(universe); universe];
    for v in tree.vertices().iter() {
        if let Some(p) = parent[v] {
            children[p].insert(v);
        }
    }

    let mut alive = tree.vertices().clone();
    let mut p3s = Vec::with_capacity((n - 2) / 2);
    while alive.len() > 2 {
        let leaf_children = |v: Vertex| -> Vec<Vertex> {
            children[v]
                .iter()
                .filter(|&c| children[c].is_empty())
                .collect()
        };
        let center = alive
            .iter()
            .filter(|&v| !leaf_children(v).is_empty())
            .max_by(|&a, &b| depth[a].cmp(&depth[b]).then(b.cmp(&a)))
            .expect("a finite tree with more than one edge has a leaf");
        let leaves = leaf_children(center);
        if leaves.len() < 2 {
            return Err(Error::Precondition(format!(
                "vertex {center} has a single leaf child; not an odd tree"
            )));
        }
        let (end_a, end_b) = (leaves[0], leaves[1]);
        children[center].remove(end_a);
        children[center].remove(end_b);
        alive.remove(end_a);
        alive.remove(end_b);
        p3s.push(P3 {
            end_a,
            center,
            end_b,
        });
    }

    let root = tree.root();
    let other = alive
        .iter()
        .find(|&v| v != root)
        .expect("two vertices remain");
    Ok(EdgePartition {
        p3s,
        k2: (root, other),
    })
}

fn require_even_connected(g: &Graph) -> Result<()> {
    if g.n() % 2 == 1 {
        return Err(Error::Precondition(format!(
            "graph must have even order, got {}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    Ok(())
}

/// A spanning subgraph in which every vertex has odd degree.
///
/// Roots a BFS tree at vertex 0 and walks it bottom-up, keeping a vertex's
/// parent edge exactly when its current degree is even. Even order forces
/// the root to end up odd as well.
pub fn odd_degree_spanning_subgraph(g: &Graph) -> Result<Vec<Edge>> {
    require_even_connected(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut parent = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::empty(n);
    seen.insert(0);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }

    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            if degree[v].is_multiple_of(2) {
                degree[v] += 1;
                degree[p] += 1;
                edges.push(if v < p { (v, p) } else { (p, v) });
            }
        }
    }
    debug_assert!(degree.iter().all(|d| d % 2 == 1));
    edges.sort_unstable();
    Ok(edges)
}

/// One tree of a perfect forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestTree {
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
}

impl ForestTree {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn rooted_at(&self, root: Vertex) -> Result<RootedTree> {
        RootedTree::new(self.vertices.universe(), self.edges.clone(), root)
    }
}

/// Spanning forest whose trees are induced odd trees, ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectForest {
    pub trees: Vec<ForestTree>,
}

impl PerfectForest {
    pub fn tree_of(&self, v: Vertex) -> Option<usize> {
        self.trees.iter().position(|t| t.vertices.contains(v))
    }

    /// Maps every vertex id through `map` (e.g. back from an induced subgraph).
    pub fn relabel(&self, universe: usize, map: &[Vertex]) -> PerfectForest {
        let trees = self
            .trees
            .iter()
            .map(|t| {
                let mut vertices = VertexSet::empty(universe);
                for v in t.vertices.iter() {
                    vertices.insert(map[v]);
                }
                let mut edges: Vec<Edge> = t
                    .edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (map[u], map[v]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                edges.sort_unstable();
                ForestTree { vertices, edges }
            })
            .collect();
        PerfectForest { trees }
    }
}

/// Shortest path from `from` to `to` inside the edge set `f`, as its edges.
fn path_edges(f: &Graph, from: Vertex, to: Vertex) -> Option<Vec<Edge>> {
    let n = f.n();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in f.neighbors(v).iter() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent[to] == usize::MAX {
        return None;
    }
    let mut out = Vec::new();
    let mut v = to;
    while v != from {
        let p = parent[v];
        out.push((p.min(v), p.max(v)));
        v = p;
    }
    Some(out)
}

/// First cycle of `f` found by scanning edges lexicographically.
fn find_cycle(f: &Graph) -> Option<Vec<Edge>> {
    let mut probe = f.clone();
    for (u, v) in f.edges() {
        probe.remove_edge(u, v).expect("valid edge");
        let path = path_edges(&probe, u, v);
        probe.add_edge(u, v).expect("valid edge");
        if let Some(mut cycle) = path {
            cycle.push((u, v));
            return Some(cycle);
        }
    }
    None
}

fn toggle_edges(f: &mut Graph, edges: &[Edge]) {
    for &(u, v) in edges {
        if f.has_edge(u, v) {
            f.remove_edge(u, v).expect("valid edge");
        } else {
            f.add_edge(u, v).expect("valid edge");
        }
    }
}

fn degree_parities(f: &Graph) -> Vec<bool> {
    (0..f.n()).map(|v| f.degree(v) % 2 == 1).collect()
}

/// A perfect forest of a connected even-order graph.
///
/// Starts from an odd-degree spanning subgraph `F`, deletes cycles of `F`,
/// then repeatedly swaps a chord of some `F`-tree for the tree path between
/// its endpoints. Both moves preserve every degree parity and shrink `F`, so
/// the process stops at a forest of induced odd trees.
pub fn perfect_forest(g: &Graph) -> Result<PerfectForest> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!(
            "perfect forest needs at least 2 vertices, got {}",
            g.n()
        )));
    }
    let odd = odd_degree_spanning_subgraph(g)?;
    let mut f = Graph::from_edges(g.n(), odd)?;
    let parities = degree_parities(&f);
    let budget = g.edge_count();
    let mut iterations = 0usize;

    while let Some(cycle) = find_cycle(&f) {
        toggle_edges(&mut f, &cycle);
        iterations += 1;
        debug_assert_eq!(degree_parities(&f), parities);
        assert!(iterations <= budget, "cycle removal did not terminate");
    }

    'chords: loop {
        for tree in f.components() {
            let chord = g
                .edges()
                .find(|&(u, v)| tree.contains(u) && tree.contains(v) && !f.has_edge(u, v));
            if let Some((u, v)) = chord {
                let mut cycle = path_edges(&f, u, v).expect("chord endpoints share a tree");
                cycle.push((u, v));
                toggle_edges(&mut f, &cycle);
                iterations += 1;
                debug_assert_eq!(degree_parities(&f), parities);
                assert!(iterations <= budget, "chord elimination did not terminate");
                continue 'chords;
            }
        }
        break;
    }

    let trees = f
        .components()
        .into_iter()
        .map(|vertices| {
            let edges = f.edges().filter(|&(u, _)| vertices.contains(u)).collect();
            ForestTree { vertices, edges }
        })
        .collect();
    Ok(PerfectForest { trees })
}

#[cfg(test)]
mod tests {
    use super::*;

    // odd tree labelling: r=0, x=1, y=2, v=3, u=4, w=5.
    fn six_vertex_tree() -> RootedTree {
        RootedTree::new(6, vec![(0, 3), (0, 1), (0, 2), (3, 4), (3, 5)], 0).unwrap()
    }

    #[test]
    fn six_vertex_partition() {
        let p = p3_partition(&six_vertex_tree()).unwrap();
        assert_eq!(
            p.p3s,
            vec![
                P3 {
                    end_a: 4,
                    center: 3,
                    end_b: 5
                },
                P3 {
                    end_a: 1,
                    center: 0,
                    end_b: 2
                },
            ]
        );
        assert_eq!(p.k2, (0, 3));
    }

    #[test]
    fn single_edge_partition() {
        let t = RootedTree::new(2, vec![(1, 0)], 1).unwrap();
        let p = p3_partition(&t).unwrap();
        assert!(p.p3s.is_empty());
        assert_eq!(p.k2, (1, 0));
    }

    #[test]
    fn partition_rejects_non_odd_trees() {
        let path = RootedTree::new(4, vec![(0, 1), (1, 2), (2, 3)], 0).unwrap();
        assert!(matches!(p3_partition(&path), Err(Error::Precondition(_))));
        let single = RootedTree::new(3, vec![], 2).unwrap();
        assert!(p3_partition(&single).is_err());
    }

    #[test]
    fn rooted_tree_validation() {
        assert!(RootedTree::new(3, vec![(0, 1), (1, 2), (0, 2)], 0).is_err());
        assert!(RootedTree::new(4, vec![(0, 1), (2, 3)], 0).is_err());
        assert!(RootedTree::new(3, vec![(0, 1)], 2).is_err());
        assert!(six_vertex_tree().rerooted(9).is_err());
    }

    #[test]
    fn odd_subgraph_small_cases() {
        assert_eq!(
            odd_degree_spanning_subgraph(&Graph::complete(2)).unwrap(),
            vec![(0, 1)]
        );
        assert_eq!(
            odd_degree_spanning_subgraph(&Graph::path(4)).unwrap(),
            vec![(0, 1), (2, 3)]
        );
        assert!(odd_degree_spanning_subgraph(&Graph::path(3)).is_err());
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(odd_degree_spanning_subgraph(&split).is_err());
    }

    #[test]
    fn perfect_forest_small_cases() {
        let k2 = perfect_forest(&Graph::complete(2)).unwrap();
        assert_eq!(k2.trees.len(), 1);
        assert_eq!(k2.trees[0].edges, vec![(0, 1)]);

        let p4 = perfect_forest(&Graph::path(4)).unwrap();
        let edges: Vec<_> = p4.trees.iter().flat_map(|t| t.edges.clone()).collect();
        assert_eq!(edges, vec![(0, 1), (2, 3)]);

        let k4 = perfect_forest(&Graph::complete(4)).unwrap();
        assert_eq!(k4.trees.len(), 2);
        assert!(k4.trees.iter().all(|t| t.edges.len() == 1));
    }

    #[test]
    fn relabel_maps_back() {
        let forest = perfect_forest(&Graph::complete(2)).unwrap();
        let mapped = forest.relabel(8, &[3, 7]);
        assert_eq!(mapped.trees[0].edges, vec![(3, 7)]);
        assert_eq!(mapped.tree_of(7), Some(0));
        assert_eq!(mapped.tree_of(0), None);
    }
}
