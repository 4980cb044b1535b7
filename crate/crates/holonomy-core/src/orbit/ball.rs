use super::dedup::DedupIndex;
use super::GroupElement;

/// Ball of words in the generators, enumerated breadth first.
#[derive(Debug, Clone)]
pub struct GroupBall<G> {
    /// Distinct elements in first-visit order; `elements[0]` is the identity.
    pub elements: Vec<G>,
    /// Word length at which each element first appeared.
    pub depths: Vec<u32>,
    /// Generators followed by their inverses, the expansion alphabet.
    pub gens_closure: Vec<G>,
    /// Whether a full frontier expansion produced nothing new.
    pub saturated: bool,
    /// Depth reached (last completed level).
    pub depth: u32,
    /// Cumulative element count after each completed level, starting at
    /// level 0 with the identity alone.
    pub growth: Vec<usize>,
}

impl<G> GroupBall<G> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Indices of the elements first seen at word length `d`.
    pub fn level(&self, d: u32) -> std::ops::Range<usize> {
        let lo = if d == 0 { 0 } else { self.growth[d as usize - 1] };
        lo..self.growth[d as usize]
    }
}

/// Expands words in `gens` and their inverses up to `max_depth`, stopping
/// early on saturation or on reaching `max_size` distinct elements.
///
/// Two elements closer than `tol` are identified. A truncated ball
/// (`max_size` hit mid-level) reports `saturated = false` and drops the
/// partial level from `growth`.
pub fn group_ball<G: GroupElement>(
    gens: &[G],
    tol: f64,
    max_size: usize,
    max_depth: u32,
) -> GroupBall<G> {
    let mut gens_closure: Vec<G> = gens.to_vec();
    gens_closure.extend(gens.iter().map(|g| g.inverse()));

    let mut index = DedupIndex::new(G::DIM, tol);
    let mut elements: Vec<G> = Vec::new();
    let mut depths: Vec<u32> = Vec::new();
    let mut coords = [0.0; 16];

    let e = G::identity();
    e.write_coords(&mut coords[..G::DIM]);
    index.try_insert(&coords[..G::DIM]);
    elements.push(e);
    depths.push(0);

    let mut growth = vec![1usize];
    let mut saturated = false;
    let mut depth = 0;
    let mut frontier_lo = 0;

    'levels: while depth < max_depth {
        let frontier_hi = elements.len();
        if frontier_lo == frontier_hi {
            saturated = true;
            break;
        }
        let mut grew = false;
        for i in frontier_lo..frontier_hi {
            for g in &gens_closure {
                let mut next = elements[i].compose(g);
                next.renormalize();
                next.write_coords(&mut coords[..G::DIM]);
                let (_, inserted) = index.try_insert(&coords[..G::DIM]);
                if inserted {
                    elements.push(next);
                    depths.push(depth + 1);
                    grew = true;
                    if elements.len() >= max_size {
                        break 'levels;
                    }
                }
            }
        }
        depth += 1;
        growth.push(elements.len());
        frontier_lo = frontier_hi;
        if !grew {
            saturated = true;
            break;
        }
    }

    GroupBall {
        elements,
        depths,
        gens_closure,
        saturated,
        depth,
        growth,
    }
}
