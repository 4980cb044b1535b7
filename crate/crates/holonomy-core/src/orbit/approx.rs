use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use super::GroupElement;

/// Word found by [`approximate_element`]. Letters index `gens` followed by
/// their inverses, so letter `k >= gens.len()` means the inverse of
/// generator `k - gens.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxResult<G> {
    pub word: Vec<usize>,
    pub element: G,
    pub dist: f64,
    pub expansions: usize,
}

struct Entry {
    dist: f64,
    tie: usize,
    node: usize,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Entry) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Entry) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // Max-heap; closer first, then earlier insertion.
    fn cmp(&self, other: &Entry) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then(other.tie.cmp(&self.tie))
    }
}

/// Coarse visited net: states are identified when they round to the same
/// lattice cell, collapsing the free-group tree into a bounded graph.
struct CellVisited {
    dim: usize,
    inv_cell: f64,
    seen: HashSet<u64>,
}

impl CellVisited {
    fn new(dim: usize, cell: f64) -> CellVisited {
        CellVisited {
            dim,
            inv_cell: 1.0 / cell,
            seen: HashSet::new(),
        }
    }

    fn try_insert(&mut self, coords: &[f64]) -> bool {
        let mut h = 0xcbf29ce484222325u64;
        for &c in &coords[..self.dim] {
            let q = (c * self.inv_cell).round() as i64;
            for byte in q.to_le_bytes() {
                h = (h ^ byte as u64).wrapping_mul(0x100000001b3);
            }
        }
        self.seen.insert(h)
    }
}

const MACRO_DEPTH: usize = 3;
const MACRO_CAP: usize = 400;

/// Distinct products of one to `MACRO_DEPTH` letters over gens and
/// inverses, each paired with its letter expansion. A wide step set keeps
/// the best-first frontier ball-shaped instead of wandering down long
/// single-letter chains.
fn macro_alphabet<G: GroupElement>(gens: &[G]) -> Vec<(G, Vec<usize>)> {
    let mut base: Vec<G> = gens.to_vec();
    base.extend(gens.iter().map(|g| g.inverse()));

    let identity = G::identity();
    let mut out: Vec<(G, Vec<usize>)> = Vec::new();
    let mut frontier: Vec<(G, Vec<usize>)> = vec![(identity.clone(), Vec::new())];
    for _ in 0..MACRO_DEPTH {
        let mut next_frontier: Vec<(G, Vec<usize>)> = Vec::new();
        for (f, word) in &frontier {
            for (i, b) in base.iter().enumerate() {
                let mut x = f.compose(b);
                x.renormalize();
                if x.dist(&identity) < 1e-9
                    || out.iter().chain(&next_frontier).any(|(y, _)| y.dist(&x) < 1e-9)
                {
                    continue;
                }
                let mut w = word.clone();
                w.push(i);
                next_frontier.push((x, w));
            }
        }
        for item in next_frontier.iter().cloned() {
            if out.len() >= MACRO_CAP {
                break;
            }
            out.push(item);
        }
        if out.len() >= MACRO_CAP {
            break;
        }
        frontier = next_frontier;
    }
    out
}

/// Evaluates a letter sequence over the alphabet `gens` then inverses.
pub fn eval_word<G: GroupElement>(gens: &[G], word: &[usize]) -> G {
    let mut alphabet: Vec<G> = gens.to_vec();
    alphabet.extend(gens.iter().map(|g| g.inverse()));
    let mut acc = G::identity();
    for &letter in word {
        acc = acc.compose(&alphabet[letter]);
        acc.renormalize();
    }
    acc
}

/// Greedy best-first search for a word in the generators whose product
/// lands within `eps` of `target`; `None` when `budget` node expansions
/// (or the whole reachable set at the visited-net resolution) run out
/// first.
pub fn approximate_element<G: GroupElement>(
    gens: &[G],
    target: &G,
    eps: f64,
    budget: usize,
) -> Option<ApproxResult<G>> {
    assert!(eps > 0.0);
    let alphabet = macro_alphabet(gens);

    // parent = usize::MAX marks the root.
    let mut nodes: Vec<(G, usize, usize)> = vec![(G::identity(), usize::MAX, 0)];
    let mut visited = CellVisited::new(G::DIM, eps * G::COORD_PER_DIST / 2.0);
    let mut coords = [0.0; 16];
    nodes[0].0.write_coords(&mut coords[..G::DIM]);
    visited.try_insert(&coords[..G::DIM]);

    let mut heap = BinaryHeap::new();
    heap.push(Entry {
        dist: nodes[0].0.dist(target),
        tie: 0,
        node: 0,
    });
    let mut tie = 0;
    let mut expansions = 0;

    while let Some(entry) = heap.pop() {
        if entry.dist <= eps {
            let mut word = Vec::new();
            let mut at = entry.node;
            while at != 0 {
                let (parent, letter) = (nodes[at].1, nodes[at].2);
                word.extend(alphabet[letter].1.iter().rev());
                at = parent;
            }
            word.reverse();
            return Some(ApproxResult {
                word,
                element: nodes[entry.node].0.clone(),
                dist: entry.dist,
                expansions,
            });
        }
        if expansions >= budget {
            return None;
        }
        expansions += 1;
        for (letter, (g, _)) in alphabet.iter().enumerate() {
            let mut next = nodes[entry.node].0.compose(g);
            next.renormalize();
            next.write_coords(&mut coords[..G::DIM]);
            if visited.try_insert(&coords[..G::DIM]) {
                let id = nodes.len();
                nodes.push((next, entry.node, letter));
                tie += 1;
                heap.push(Entry {
                    dist: nodes[id].0.dist(target),
                    tie,
                    node: id,
                });
            }
        }
    }
    None
}
