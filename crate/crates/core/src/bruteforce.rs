//! Ground-truth counting by exhaustive backtracking over vertex maps.
//!
//! Source vertices are assigned in index order and a partial map is rejected
//! as soon as it violates any edge between already-decided vertices.
//! Surjectivity is only checked on complete assignments; this oracle is
//! correctness-first and makes no attempt to be clever.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph, HomClass};
use crate::Count;

/// Classification of the maps `G -> K_m` by how many edges of `G` land on
/// the exceptional pair `{0, 1}`, dense over `0..=|E(G)|` including
/// structural zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalHistogram {
    counts: Vec<Count>,
}

impl ExceptionalHistogram {
    /// Count of maps landing exactly `k` edges on the exceptional pair;
    /// zero beyond the stored range.
    pub fn get(&self, k: usize) -> Count {
        self.counts.get(k).cloned().unwrap_or_else(Count::zero)
    }

    /// Dense slice indexed by `k`, length `|E(G)| + 1`.
    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    /// Sum over all slots; equals the total number of maps `G -> K_m`.
    pub fn total(&self) -> Count {
        self.counts.iter().fold(Count::zero(), |a, c| a + c)
    }

    /// The `k = 0` slot: maps avoiding the exceptional pair entirely, i.e.
    /// the homomorphism count into the quasi-complete target.
    pub fn zero_slot(&self) -> Count {
        self.get(0)
    }
}

struct Search<'a> {
    target_adj: Vec<Vec<bool>>,
    /// Earlier neighbors of each source vertex, in assignment order.
    earlier: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    class: HomClass,
    target: &'a Graph,
    found: Count,
}

/// Number of adjacency-preserving maps `g -> h`, filtered by `class`.
///
/// Bijective counting is permitted for any sizes and simply yields zero when
/// the vertex counts differ.
pub fn count_by_class(g: &Graph, h: &Graph, class: HomClass) -> Count {
    let injective = matches!(class, HomClass::Injective | HomClass::Bijective);
    if injective && g.vertex_count() > h.vertex_count() {
        return Count::zero();
    }
    let mut search = Search {
        target_adj: h.adjacency(),
        earlier: earlier_neighbors(g),
        image: vec![usize::MAX; g.vertex_count()],
        used: vec![false; h.vertex_count()],
        class,
        target: h,
        found: Count::zero(),
    };
    search.assign(0, g);
    search.found
}

fn earlier_neighbors(g: &Graph) -> Vec<Vec<usize>> {
    let mut earlier = vec![Vec::new(); g.vertex_count()];
    for (u, v) in g.edges() {
        // u < v by normalization
        earlier[v].push(u);
    }
    earlier
}

impl Search<'_> {
    fn assign(&mut self, vertex: usize, g: &Graph) {
        if vertex == g.vertex_count() {
            if self.accept_leaf() {
                self.found += Count::one();
            }
            return;
        }
        let injective = matches!(self.class, HomClass::Injective | HomClass::Bijective);
        for candidate in 0..self.target.vertex_count() {
            if injective && self.used[candidate] {
                continue;
            }
            if self.earlier[vertex]
                .iter()
                .any(|&w| !self.target_adj[self.image[w]][candidate])
            {
                continue;
            }
            self.image[vertex] = candidate;
            if injective {
                self.used[candidate] = true;
            }
            self.assign(vertex + 1, g);
            if injective {
                self.used[candidate] = false;
            }
        }
        self.image[vertex] = usize::MAX;
    }

    fn accept_leaf(&self) -> bool {
        match self.class {
            HomClass::All | HomClass::Injective => true,
            HomClass::Surjective | HomClass::Bijective => {
                let mut hit = vec![false; self.target.vertex_count()];
                for &t in &self.image {
                    hit[t] = true;
                }
                hit.iter().all(|&b| b)
            }
        }
    }
}

/// Enumerates every map `g -> K_m` and classifies it by the number of edges
/// of `g` sent onto the exceptional pair `{0, 1}`.
pub fn exceptional_histogram(g: &Graph, m: usize) -> Result<ExceptionalHistogram> {
    if m < 3 {
        return Err(Error::TargetSize { m });
    }
    let target = complete_graph(m).expect("m >= 3");
    let target_adj = target.adjacency();
    let earlier = earlier_neighbors(g);
    let mut counts = vec![Count::zero(); g.edge_count() + 1];
    let mut image = vec![usize::MAX; g.vertex_count()];
    histogram_assign(0, g, &target_adj, m, &earlier, &mut image, 0, &mut counts);
    Ok(ExceptionalHistogram { counts })
}

#[allow(clippy::too_many_arguments)]
fn histogram_assign(
    vertex: usize,
    g: &Graph,
    target_adj: &[Vec<bool>],
    m: usize,
    earlier: &[Vec<usize>],
    image: &mut Vec<usize>,
    exceptional_edges: usize,
    counts: &mut [Count],
) {
    if vertex == g.vertex_count() {
        counts[exceptional_edges] += Count::one();
        return;
    }
    'candidates: for candidate in 0..m {
        let mut gained = 0usize;
        for &w in &earlier[vertex] {
            let other = image[w];
            if !target_adj[other][candidate] {
                continue 'candidates;
            }
            if (other == 0 && candidate == 1) || (other == 1 && candidate == 0) {
                gained += 1;
            }
        }
        image[vertex] = candidate;
        histogram_assign(
            vertex + 1,
            g,
            target_adj,
            m,
            earlier,
            image,
            exceptional_edges + gained,
            counts,
        );
    }
    image[vertex] = usize::MAX;
}
