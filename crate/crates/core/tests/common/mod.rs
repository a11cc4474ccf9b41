#![allow(dead_code)]

pub mod checks;

use colorflip::{Coloring, Edge, Graph, RootedTree, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random spanning tree plus extra edges with probability `p`, relabelled.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(labels[i], labels[j]).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_coloring(rng: &mut impl Rng, n: usize) -> Coloring {
    let signs: Vec<i8> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    Coloring::from_signs(&signs).unwrap()
}

/// Random odd tree on `size` (even) vertices inside the universe `0..universe`:
/// grow from an edge by hanging two new leaves on a random vertex.
pub fn random_odd_tree(rng: &mut impl Rng, size: usize, universe: usize) -> RootedTree {
    assert!(size >= 2 && size.is_multiple_of(2) && size <= universe);
    let mut ids: Vec<Vertex> = (0..universe).collect();
    ids.shuffle(rng);
    let mut used = vec![ids[0], ids[1]];
    let mut edges: Vec<Edge> = vec![(ids[0], ids[1])];
    while used.len() < size {
        let hub = used[rng.gen_range(0..used.len())];
        for _ in 0..2 {
            let leaf = ids[used.len()];
            edges.push((hub, leaf));
            used.push(leaf);
        }
    }
    let root = used[rng.gen_range(0..used.len())];
    RootedTree::new(universe, edges, root).unwrap()
}
