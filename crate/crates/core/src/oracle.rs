//! Exhaustive ground truth for small graphs: shortest words by breadth-first
//! search over packed bicolored-graph states, exact color reversal numbers,
//! and a survey over all connected graphs up to a given order.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::bicolored::{BicoloredGraph, Coloring};
use crate::error::{Error, Result};
use crate::format::emit_graph6;
use crate::graph::Graph;
use crate::synth::color_reversal_word;
use crate::vertex_set::VertexSet;
use crate::word::Word;

/// Largest order a [`StateKey`] can hold: `n(n-1)/2 + n <= 128`.
pub const MAX_STATE_N: usize = 15;
/// Default limit on the order searched exhaustively.
pub const DEFAULT_CAP: usize = 7;
/// Largest order the built-in isomorphism-class enumerator accepts.
pub const MAX_ENUMERATE_N: usize = 6;
pub const REPORT_VERSION: u32 = 1;

/// Packed state: upper-triangle adjacency bits (pairs `(i, j)`, `i < j`, in
/// row-major order from bit 0) followed by `n` color bits (set = `-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateKey(pub u128);

/// Working form of a state during the search; rows are neighbor bitmasks.
#[derive(Clone, Copy)]
struct Packed {
    rows: [u16; MAX_STATE_N],
    minus: u16,
}

impl Packed {
    fn from_key(key: StateKey, n: usize) -> Packed {
        let mut rows = [0u16; MAX_STATE_N];
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if key.0 >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        let minus = (key.0 >> bit) as u16 & mask(n);
        Packed { rows, minus }
    }

    fn key(&self, n: usize) -> StateKey {
        let mut out = 0u128;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.rows[i] >> j & 1 == 1 {
                    out |= 1 << bit;
                }
                bit += 1;
            }
        }
        out |= u128::from(self.minus) << bit;
        StateKey(out)
    }

    fn invert(&mut self, a: usize) {
        let hood = self.rows[a];
        self.minus ^= hood;
        let mut rest = hood;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.rows[x] ^= hood & !(1 << x);
        }
    }
}

fn mask(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

impl StateKey {
    pub fn encode(b: &BicoloredGraph) -> Result<StateKey> {
        let n = b.n();
        if n > MAX_STATE_N {
            return Err(Error::ResourceLimit {
                n,
                cap: MAX_STATE_N,
            });
        }
        let mut packed = Packed {
            rows: [0; MAX_STATE_N],
            minus: 0,
        };
        for v in 0..n {
            for w in b.graph().neighbors(v).iter() {
                packed.rows[v] |= 1 << w;
            }
            if b.coloring().sign(v) < 0 {
                packed.minus |= 1 << v;
            }
        }
        Ok(packed.key(n))
    }

    pub fn decode(self, n: usize) -> Result<BicoloredGraph> {
        if n > MAX_STATE_N {
            return Err(Error::ResourceLimit {
                n,
                cap: MAX_STATE_N,
            });
        }
        let packed = Packed::from_key(self, n);
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if packed.rows[i] >> j & 1 == 1 {
                    g.add_edge(i, j)?;
                }
            }
        }
        let minus = VertexSet::from_vertices(n, (0..n).filter(|&v| packed.minus >> v & 1 == 1))?;
        BicoloredGraph::new(g, Coloring::from_minus_set(minus))
    }
}

/// Exact color reversal number of one graph, next to the synthesized word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrReport {
    pub version: u32,
    /// graph6 encoding of the graph as searched.
    pub graph: String,
    pub n: usize,
    /// `None` when reversal is impossible (isolated vertices).
    pub exact_cr: Option<usize>,
    pub witness: Option<Word>,
    pub synthesized_length: Option<usize>,
    pub bound: Option<usize>,
}

impl CrReport {
    /// `exact_cr <= synthesized_length <= bound` wherever defined.
    pub fn sandwich_holds(&self) -> bool {
        let le = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        le(self.exact_cr, self.synthesized_length) && le(self.synthesized_length, self.bound)
    }
}

/// Breadth-first search over bicolored graphs of bounded order.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap > MAX_STATE_N {
            return Err(Error::ResourceLimit {
                n: cap,
                cap: MAX_STATE_N,
            });
        }
        Ok(Oracle { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// A shortest word taking `source` to `target`, or `None` if `target` is
    /// not reachable.
    pub fn min_flip_word(
        &self,
        source: &BicoloredGraph,
        target: &BicoloredGraph,
    ) -> Result<Option<Word>> {
        let n = source.n();
        if target.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: target.n(),
            });
        }
        if n > self.cap {
            return Err(Error::ResourceLimit { n, cap: self.cap });
        }
        let start = StateKey::encode(source)?;
        let goal = StateKey::encode(target)?;
        if start == goal {
            return Ok(Some(Word::empty()));
        }

        // state -> (predecessor, letter)
        let mut parent: HashMap<StateKey, (StateKey, u8)> = HashMap::new();
        parent.insert(start, (start, u8::MAX));
        let mut queue = VecDeque::from([start]);
        while let Some(key) = queue.pop_front() {
            let state = Packed::from_key(key, n);
            for a in 0..n {
                let mut next = state;
                next.invert(a);
                let next_key = next.key(n);
                if let Entry::Vacant(slot) = parent.entry(next_key) {
                    slot.insert((key, a as u8));
                    if next_key == goal {
                        return Ok(Some(trace_back(&parent, start, goal)));
                    }
                    queue.push_back(next_key);
                }
            }
        }
        Ok(None)
    }

    /// The color reversal number of `g`, found by searching from all `+1` to
    /// all `-1`; coloring independence makes this the value for every start.
    pub fn exact_cr(&self, g: &Graph) -> Result<CrReport> {
        let n = g.n();
        let source = BicoloredGraph::all_plus(g.clone());
        let target = BicoloredGraph::new(g.clone(), Coloring::all_minus(n))?;
        let witness = self.min_flip_word(&source, &target)?;
        let (synthesized_length, bound) = match color_reversal_word(g) {
            Ok(cw) => (Some(cw.len()), Some(cw.bound)),
            // isolated vertices: no reversal word and no bound apply
            Err(Error::Unsatisfiable(_)) => (None, None),
            Err(e) => return Err(e),
        };
        Ok(CrReport {
            version: REPORT_VERSION,
            graph: emit_graph6(g).unwrap_or_default(),
            n,
            exact_cr: witness.as_ref().map(Word::len),
            witness,
            synthesized_length,
            bound,
        })
    }
}

fn trace_back(parent: &HashMap<StateKey, (StateKey, u8)>, start: StateKey, goal: StateKey) -> Word {
    let mut letters = Vec::new();
    let mut key = goal;
    while key != start {
        let (prev, letter) = parent[&key];
        letters.push(letter as usize);
        key = prev;
    }
    letters.reverse();
    Word::new(letters)
}

/// All permutations of `0..n` (Heap's algorithm).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    let mut c = vec![0; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Adjacency bits in graph6 order (`x01, x02, x12, x03, ...`), first pair most significant.
fn graph6_order_key(rows: &[u16], n: usize, perm: &[usize]) -> u64 {
    let mut key = 0u64;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | u64::from(rows[perm[i]] >> perm[j] & 1);
        }
    }
    key
}

/// Connected graphs on `n` vertices, one per isomorphism class, in
/// canonical form: the relabelling whose graph6 bit string is largest.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::ResourceLimit {
            n,
            cap: MAX_ENUMERATE_N,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut classes: BTreeMap<u64, Graph> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p);
        let g = Graph::from_edges(n, edges)?;
        if !g.is_connected() {
            continue;
        }
        let mut rows = [0u16; MAX_STATE_N];
        for (i, j) in g.edges() {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        let (best, perm) = perms
            .iter()
            .map(|p| (graph6_order_key(&rows, n, p), p))
            .max_by_key(|&(k, _)| k)
            .expect("at least one permutation");
        classes.entry(best).or_insert_with(|| {
            // new vertex k is old vertex perm[k]
            let mut inverse = vec![0; n];
            for (new, &old) in perm.iter().enumerate() {
                inverse[old] = new;
            }
            Graph::from_edges(n, g.edges().map(|(u, v)| (inverse[u], inverse[v])))
                .expect("relabelled graph")
        });
    }
    Ok(classes.into_values().collect())
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SurveySummary {
    pub version: u32,
    pub graphs: usize,
    pub max_cr: Option<usize>,
    /// Largest `cr(G) / 3n` seen.
    pub max_ratio_to_3n: f64,
    /// Graphs whose exact value exceeds `3n`.
    pub above_3n: Vec<String>,
    /// Graphs where `exact <= synthesized <= bound` fails.
    pub sandwich_violations: Vec<String>,
    pub unreachable: usize,
}

impl SurveySummary {
    pub fn from_reports(reports: &[CrReport]) -> Self {
        let mut summary = SurveySummary {
            version: REPORT_VERSION,
            graphs: reports.len(),
            ..Default::default()
        };
        for r in reports {
            match r.exact_cr {
                Some(cr) => {
                    summary.max_cr = summary.max_cr.max(Some(cr));
                    if r.n > 0 {
                        let ratio = cr as f64 / (3 * r.n) as f64;
                        summary.max_ratio_to_3n = summary.max_ratio_to_3n.max(ratio);
                    }
                    if cr > 3 * r.n {
                        summary.above_3n.push(r.graph.clone());
                    }
                }
                None => summary.unreachable += 1,
            }
            if !r.sandwich_holds() {
                summary.sandwich_violations.push(r.graph.clone());
            }
        }
        summary
    }
}

/// Runs [`Oracle::exact_cr`] on every graph, `jobs` at a time. Output order
/// follows input order regardless of `jobs`.
pub fn survey_graphs(oracle: &Oracle, graphs: &[Graph], jobs: usize) -> Result<Vec<CrReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| graphs.par_iter().map(|g| oracle.exact_cr(g)).collect())
}

/// Exact values for every connected graph of order `2..=n_max`.
pub fn survey(oracle: &Oracle, n_max: usize, jobs: usize) -> Result<Vec<CrReport>> {
    if n_max > oracle.cap() {
        return Err(Error::ResourceLimit {
            n: n_max,
            cap: oracle.cap(),
        });
    }
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.extend(enumerate_connected(n)?);
    }
    survey_graphs(oracle, &graphs, jobs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_key_roundtrip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 4), (2, 3)]).unwrap();
        let c = Coloring::from_signs(&[1, -1, -1, 1, -1]).unwrap();
        let b = BicoloredGraph::new(g, c).unwrap();
        let key = StateKey::encode(&b).unwrap();
        assert_eq!(key.decode(5).unwrap(), b);
    }

    #[test]
    fn packed_inversion_matches_graph_core() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (1, 2)]).unwrap();
        let b = BicoloredGraph::all_plus(g);
        let mut packed = Packed::from_key(StateKey::encode(&b).unwrap(), 6);
        packed.invert(0);
        packed.invert(3);
        let expected = b.apply_word(&Word::from([0, 3])).unwrap();
        assert_eq!(packed.key(6), StateKey::encode(&expected).unwrap());
        assert!(StateKey::encode(&BicoloredGraph::all_plus(Graph::path(16))).is_err());
    }

    #[test]
    fn bfs_trivial_and_unreachable() {
        let oracle = Oracle::default();
        let b = BicoloredGraph::all_plus(Graph::complete(2));
        assert_eq!(oracle.min_flip_word(&b, &b).unwrap(), Some(Word::empty()));

        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let source = BicoloredGraph::all_plus(g.clone());
        let target = source
            .flip(&VertexSet::from_vertices(3, [2]).unwrap())
            .unwrap();
        assert_eq!(oracle.min_flip_word(&source, &target).unwrap(), None);
    }

    #[test]
    fn cap_is_enforced() {
        let oracle = Oracle::with_cap(4).unwrap();
        let b = BicoloredGraph::all_plus(Graph::path(5));
        assert_eq!(
            oracle.min_flip_word(&b, &b),
            Err(Error::ResourceLimit { n: 5, cap: 4 })
        );
        assert!(Oracle::with_cap(16).is_err());
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        let mut all = permutations(3);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn connected_class_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
