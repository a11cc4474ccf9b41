use std::collections::{BTreeMap, BTreeSet};

use colorflip::{Edge, EdgePartition, Graph, PerfectForest, RootedTree};

fn norm((u, v): Edge) -> Edge {
    (u.min(v), u.max(v))
}

/// Checks partition conditions 1-3 and the P3 count from scratch.
pub fn check_partition(t: &RootedTree, p: &EdgePartition) -> Result<(), String> {
    let n = t.size();
    if p.p3s.len() != (n - 2) / 2 {
        return Err(format!("{} P3s for {n} vertices", p.p3s.len()));
    }
    // parent map by DFS from the root
    let mut parent = BTreeMap::new();
    let mut stack = vec![t.root()];
    let mut seen = BTreeSet::from([t.root()]);
    while let Some(v) = stack.pop() {
        for &(a, b) in t.edges() {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if seen.insert(w) {
                parent.insert(w, v);
                stack.push(w);
            }
        }
    }

    let mut covered: Vec<Edge> = Vec::new();
    let mut end_count: BTreeMap<usize, usize> = BTreeMap::new();
    for q in &p.p3s {
        if parent.get(&q.end_a) != Some(&q.center) || parent.get(&q.end_b) != Some(&q.center) {
            return Err(format!("{q:?}: ends are not children of the center"));
        }
        covered.push(norm((q.end_a, q.center)));
        covered.push(norm((q.center, q.end_b)));
        *end_count.entry(q.end_a).or_default() += 1;
        *end_count.entry(q.end_b).or_default() += 1;
    }
    if p.k2.0 != t.root() {
        return Err("root is not the first K2 endpoint".into());
    }
    covered.push(norm(p.k2));
    *end_count.entry(p.k2.0).or_default() += 1;
    *end_count.entry(p.k2.1).or_default() += 1;

    let mut sorted = covered.clone();
    sorted.sort();
    let mut tree_edges: Vec<Edge> = t.edges().iter().copied().map(norm).collect();
    tree_edges.sort();
    if sorted != tree_edges {
        return Err("parts do not partition the tree edges".into());
    }
    for v in t.vertices().iter() {
        if end_count.get(&v) != Some(&1) {
            return Err(format!(
                "vertex {v} is an end of {:?} parts",
                end_count.get(&v)
            ));
        }
    }
    Ok(())
}

/// Checks spanning, acyclic+connected, induced and odd-degree from scratch.
pub fn check_perfect_forest(g: &Graph, f: &PerfectForest) -> Result<(), String> {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, t) in f.trees.iter().enumerate() {
        for v in t.vertices.iter() {
            if owner[v] != usize::MAX {
                return Err(format!("vertex {v} in two trees"));
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err("forest does not span".into());
    }
    for t in &f.trees {
        if t.edges.len() + 1 != t.size() {
            return Err(format!("{:?} is not a tree (edge count)", t.vertices));
        }
        let h = Graph::from_edges(g.n(), t.edges.iter().copied()).map_err(|e| e.to_string())?;
        if !h.is_connected_on(&t.vertices) {
            return Err("tree is disconnected".into());
        }
        if t.edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
            return Err("tree edge missing from graph".into());
        }
        let members = t.vertices.to_vec();
        for (i, &u) in members.iter().enumerate() {
            if h.degree(u) % 2 == 0 {
                return Err(format!("vertex {u} has even tree degree"));
            }
            for &v in &members[i + 1..] {
                if g.has_edge(u, v) != h.has_edge(u, v) {
                    return Err(format!("chord {u}-{v}: tree not induced"));
                }
            }
        }
    }
    Ok(())
}
