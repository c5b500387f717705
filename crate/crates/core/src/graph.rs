//! Simple undirected graphs and the canonical source/target families.
//!
//! The missing (or exceptional) edge of a quasi-complete graph is always the
//! pair `{0, 1}`, so oracle histograms and closed forms are comparable
//! bit-for-bit across the crate.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..vertex_count`.
///
/// Instances are immutable once built and may be freely shared between
/// threads; every counting routine takes them by shared reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops and
    /// out-of-range endpoints. Duplicate edges collapse into one.
    pub fn new(
        vertex_count: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for (u, v) in edge_list {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(low, high)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(move |&u| self.has_edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Dense adjacency matrix, row-major.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = alloc::vec![alloc::vec![false; self.vertex_count]; self.vertex_count];
        for (u, v) in self.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    /// Restriction to `vertices`, relabeled `0..vertices.len()` in list
    /// order, keeping exactly the edges with both endpoints listed.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in vertices {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex { vertex: v });
            }
        }
        let mut edges = BTreeSet::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.insert((i.min(j), i.max(j)));
                }
            }
        }
        Ok(Self {
            vertex_count: vertices.len(),
            edges,
        })
    }
}

/// The six source/target families.
///
/// Variants are declared in the lexicographic order of their display names so
/// the derived `Ord` matches the row order of emitted tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    BrokenWheel,
    Complete,
    Cycle,
    Path,
    QuasiComplete,
    Wheel,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::BrokenWheel,
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::QuasiComplete,
        Family::Wheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BrokenWheel => "broken-wheel",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::QuasiComplete => "quasi-complete",
            Family::Wheel => "wheel",
        }
    }

    /// Smallest admissible size parameter.
    pub fn min_size(self) -> usize {
        match self {
            Family::Complete | Family::QuasiComplete => 3,
            Family::Path => 2,
            Family::Cycle => 4,
            Family::BrokenWheel | Family::Wheel => 3,
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its size parameter `n`: the vertex count for
/// complete graphs, quasi-complete graphs, paths and cycles, the spoke count
/// for broken wheels and wheels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> FamilySpec {
        FamilySpec { family, n }
    }

    /// Checks the family's admissible range for `n`.
    pub fn validate(&self) -> Result<()> {
        if self.family == Family::Cycle && self.n == 3 {
            return Err(Error::CycleIsTriangle);
        }
        let min = self.family.min_size();
        if self.n < min {
            return Err(Error::FamilySize {
                family: self.family,
                min,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Number of vertices of the built graph.
    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::Complete | Family::QuasiComplete | Family::Path | Family::Cycle => self.n,
            Family::BrokenWheel | Family::Wheel => self.n + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

/// Builds the canonical labeled graph of a family.
///
/// Conventions: complete graphs live on vertices `0..n`; the quasi-complete
/// graph is the complete graph minus the edge `{0, 1}`; paths run
/// `0-1-...-(n-1)`; cycles close the path with `{n-1, 0}`; broken wheels and
/// wheels put the hub at vertex `0` with rim vertices `1..=n`.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let vertex_count = spec.vertex_count();
    match spec.family {
        Family::Complete => {
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
        }
        Family::QuasiComplete => {
            for u in 0..n {
                for v in (u + 1)..n {
                    if (u, v) != (0, 1) {
                        edges.push((u, v));
                    }
                }
            }
        }
        Family::Path => {
            for i in 0..n - 1 {
                edges.push((i, i + 1));
            }
        }
        Family::Cycle => {
            for i in 0..n - 1 {
                edges.push((i, i + 1));
            }
            edges.push((n - 1, 0));
        }
        Family::BrokenWheel | Family::Wheel => {
            for i in 1..=n {
                edges.push((0, i));
            }
            for i in 1..n {
                edges.push((i, i + 1));
            }
            if spec.family == Family::Wheel {
                edges.push((n, 1));
            }
        }
    }
    Graph::new(vertex_count, edges)
}

/// Complete graph on `m >= 3` vertices.
pub fn complete_graph(m: usize) -> Result<Graph> {
    make_family(&FamilySpec::new(Family::Complete, m))
}

/// Complete graph on `m >= 3` vertices minus the edge `{0, 1}`.
pub fn quasi_complete_graph(m: usize) -> Result<Graph> {
    make_family(&FamilySpec::new(Family::QuasiComplete, m))
}

/// The four homomorphism classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomClass {
    All,
    Injective,
    Surjective,
    Bijective,
}

impl HomClass {
    pub const ALL: [HomClass; 4] = [
        HomClass::All,
        HomClass::Injective,
        HomClass::Surjective,
        HomClass::Bijective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HomClass::All => "all",
            HomClass::Injective => "inj",
            HomClass::Surjective => "sur",
            HomClass::Bijective => "bij",
        }
    }
}

impl fmt::Display for HomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
