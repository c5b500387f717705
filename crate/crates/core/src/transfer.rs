//! Second, independent oracle: exact dynamic-programming counts.
//!
//! Path counts come from iterated vector-matrix products against the target's
//! adjacency matrix; cycle counts from the trace of a matrix power (repeated
//! squaring); wheel and broken-wheel counts from conditioning on the hub
//! image and counting inside the induced neighborhood. Everything is exact
//! big-integer arithmetic, so results are reproducible bit-for-bit.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::Count;

/// Shape of the rim walked around the hub.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RimKind {
    Path,
    Cycle,
}

/// Number of homomorphisms from the path on `n >= 2` vertices into `h`:
/// the sum of all entries of the (n-1)-th adjacency power, computed by
/// vector iteration in O(n |V|^2) big-integer operations.
pub fn linear_hom_count(h: &Graph, n: usize) -> Count {
    assert!(n >= 2, "paths need at least 2 vertices");
    let adj = h.adjacency();
    let size = h.vertex_count();
    let mut walks = vec![Count::one(); size];
    for _ in 0..n - 1 {
        let mut next = vec![Count::zero(); size];
        for (v, slot) in next.iter_mut().enumerate() {
            for (u, count) in walks.iter().enumerate() {
                if adj[v][u] {
                    *slot += count;
                }
            }
        }
        walks = next;
    }
    walks.into_iter().fold(Count::zero(), |a, c| a + c)
}

/// Number of homomorphisms from the cycle on `n >= 3` vertices into `h`:
/// the trace of the n-th adjacency power.
pub fn cyclic_hom_count(h: &Graph, n: usize) -> Count {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let size = h.vertex_count();
    let adj: Vec<Vec<Count>> = h
        .adjacency()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|b| if b { Count::one() } else { Count::zero() })
                .collect()
        })
        .collect();
    let power = matrix_power(&adj, n);
    (0..size).fold(Count::zero(), |acc, i| acc + &power[i][i])
}

fn matrix_power(base: &[Vec<Count>], mut exp: usize) -> Vec<Vec<Count>> {
    let size = base.len();
    let mut result: Vec<Vec<Count>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { Count::one() } else { Count::zero() })
                .collect()
        })
        .collect();
    let mut square = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            result = matrix_multiply(&result, &square);
        }
        exp >>= 1;
        if exp > 0 {
            square = matrix_multiply(&square, &square);
        }
    }
    result
}

fn matrix_multiply(a: &[Vec<Count>], b: &[Vec<Count>]) -> Vec<Vec<Count>> {
    let size = a.len();
    let mut out = vec![vec![Count::zero(); size]; size];
    for i in 0..size {
        for k in 0..size {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..size {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Number of homomorphisms from the broken wheel (`rim = Path`) or wheel
/// (`rim = Cycle`) on `n >= 3` spokes into `h`, conditioning on the hub
/// image: for each target vertex, the rim must land inside its neighborhood
/// (taken in ascending vertex order).
pub fn hub_conditioned_count(h: &Graph, n: usize, rim: RimKind) -> Count {
    assert!(n >= 3, "wheels need at least 3 spokes");
    let mut total = Count::zero();
    for hub in 0..h.vertex_count() {
        let neighborhood: Vec<usize> = h.neighbors(hub).collect();
        let sub = h
            .induced_subgraph(&neighborhood)
            .expect("neighbors are distinct and in range");
        total += match rim {
            RimKind::Path => linear_hom_count(&sub, n),
            RimKind::Cycle => cyclic_hom_count(&sub, n),
        };
    }
    total
}
