use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

const BITS: usize = 64;

/// A subset of the vertex ids `0..universe`, stored as a packed bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    /// Builds a set from vertex ids, rejecting ids outside the universe.
    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    n: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.blocks[v / BITS] >> (v % BITS) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.blocks[v / BITS] |= 1 << (v % BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        if v < self.universe {
            self.blocks[v / BITS] &= !(1 << (v % BITS));
        }
    }

    #[inline]
    pub fn toggle(&mut self, v: Vertex) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.blocks[v / BITS] ^= 1 << (v % BITS);
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            index: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn symmetric_difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.symmetric_difference_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self::full(self.universe);
        out.difference_with(self);
        out
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    blocks: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * BITS + bit);
            }
            self.index += 1;
            if self.index >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.index];
        }
    }
}
