//! Integer polynomials in the target-size variable `m`, the layered 0/1
//! digraphs whose top-to-bottom paths generate them, and exact fitting of
//! integer-valued polynomial sequences.
//!
//! The gap polynomials come in two series distinguished only by the weight of
//! the final vertex of a gap: interior gaps sit between two clusters, boundary
//! gaps reach an end of the source path. Both series are built twice: once by
//! summing over all maximal paths of the level graph (the definitional route)
//! and once by a two-term linear recurrence (the production route). The test
//! suites assert the two constructions equal coefficientwise.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer-coefficient polynomial in one variable, coefficients stored in
/// ascending degree order with no trailing zeros (the zero polynomial is the
/// empty sequence).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c0 + c1 * m`; handy for the linear factors m-1, m-2, m-3.
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c0), BigInt::from(c1)])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in ascending degree order, trailing zeros stripped.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Ascending coefficient list, `[0]` for the zero polynomial.
    pub fn coefficient_list(&self) -> Vec<BigInt> {
        if self.coeffs.is_empty() {
            vec![BigInt::zero()]
        } else {
            self.coeffs.clone()
        }
    }

    /// Human-readable form `c0 + c1*m + c2*m^2 + ...` with exact integers.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coefficient_list().iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            match i {
                0 => write!(out, "{c}").unwrap(),
                1 => write!(out, "{c}*m").unwrap(),
                _ => write!(out, "{c}*m^{i}").unwrap(),
            }
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

/// Node label in a level graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Zero,
    One,
}

/// Layered digraph with `i` levels whose maximal top-to-bottom paths generate
/// the summands of the gap polynomials.
///
/// Level 0 and the bottom level hold a single `Zero` node. Through the
/// third-to-last level every `Zero` branches to a `Zero` and a `One` on the
/// next level while every `One` continues to a single `Zero`; every node on
/// the second-to-last level feeds the bottom node. Children appear in
/// generation order, so their indices follow from the number of `Zero` nodes
/// earlier on the same level (kept as a prefix count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelGraph {
    levels: Vec<Vec<Label>>,
    zeros_before: Vec<Vec<u32>>,
}

impl LevelGraph {
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<Label>] {
        &self.levels
    }

    /// Indices of the nodes on level `level + 1` fed by `(level, node)`.
    pub fn child_indices(&self, level: usize, node: usize) -> Vec<usize> {
        let last = self.levels.len() - 1;
        if level >= last {
            return Vec::new();
        }
        if level == last - 1 {
            return vec![0];
        }
        let start = node + self.zeros_before[level][node] as usize;
        match self.levels[level][node] {
            Label::Zero => vec![start, start + 1],
            Label::One => vec![start],
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.levels.len())
            .map(|level| {
                (0..self.levels[level].len())
                    .map(|node| self.child_indices(level, node).len())
                    .sum::<usize>()
            })
            .sum()
    }

    /// Number of maximal top-to-bottom directed paths.
    pub fn maximal_path_count(&self) -> u64 {
        // Paths into each node, propagated level by level.
        let mut into = vec![1u64];
        for level in 0..self.levels.len().saturating_sub(1) {
            let mut next = vec![0u64; self.levels[level + 1].len()];
            for (node, count) in into.iter().enumerate() {
                for child in self.child_indices(level, node) {
                    next[child] += count;
                }
            }
            into = next;
        }
        into.iter().sum()
    }
}

/// Builds the level graph with `i >= 1` levels.
pub fn level_graph(i: usize) -> crate::Result<LevelGraph> {
    if i < 1 {
        return Err(crate::Error::LevelIndex);
    }
    let mut levels: Vec<Vec<Label>> = vec![vec![Label::Zero]];
    // Branching levels: each of the first i-2 levels generates the next.
    for _ in 1..i.saturating_sub(1) {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for &label in prev {
            match label {
                Label::Zero => {
                    next.push(Label::Zero);
                    next.push(Label::One);
                }
                Label::One => next.push(Label::Zero),
            }
        }
        levels.push(next);
    }
    if i >= 2 {
        levels.push(vec![Label::Zero]);
    }

    let zeros_before = levels
        .iter()
        .map(|level| {
            let mut zeros = 0u32;
            level
                .iter()
                .map(|&label| {
                    let before = zeros;
                    if label == Label::Zero {
                        zeros += 1;
                    }
                    before
                })
                .collect()
        })
        .collect();
    Ok(LevelGraph {
        levels,
        zeros_before,
    })
}

/// Selects the weight of the final vertex of a gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GapKind {
    /// Gap enclosed by clusters on both sides (the `p` series): the last
    /// vertex still avoids both exceptional endpoints.
    Interior,
    /// Gap reaching an end of the source path (the `q` series): the last
    /// vertex has no cluster after it.
    Boundary,
}

impl GapKind {
    pub fn series_name(self) -> &'static str {
        match self {
            GapKind::Interior => "p",
            GapKind::Boundary => "q",
        }
    }

    pub fn parse(name: &str) -> Option<GapKind> {
        match name {
            "p" => Some(GapKind::Interior),
            "q" => Some(GapKind::Boundary),
            _ => None,
        }
    }
}

fn m_minus(k: i64) -> IntPolynomial {
    IntPolynomial::linear(-k, 1)
}

/// Definitional gap polynomial: sum over all maximal top-to-bottom paths of
/// the level graph of the product of node weights.
///
/// Weights: the top `Zero` is `m-2`; every `One` is `2`; a `Zero` after a
/// `One` is `m-2`; a `Zero` after a `Zero` is `m-3` on intermediate levels
/// and, on the bottom level, `m-3` for the interior series or `m-1` for the
/// boundary series. `gap_polynomial(_, 0)` is the constant `1`.
///
/// Every maximal path is visited individually; its factor multiset is read
/// off the labels (a path with `b` ones carries the top `m-2`, one `2` and
/// one `m-2` per `One`, and `m-3` factors for the remaining descents), and
/// identical products are accumulated together before expansion.
pub fn gap_polynomial(kind: GapKind, i: usize) -> IntPolynomial {
    if i == 0 {
        return IntPolynomial::one();
    }
    if i == 1 {
        // Single node serving as both top and bottom: the top weight.
        return m_minus(2);
    }
    let graph = level_graph(i).expect("i >= 1");
    // paths_by_shape[b] = paths with b ones, split by the label feeding the
    // bottom node (a One forces an m-2 bottom factor in both series).
    let mut paths_by_shape: Vec<[u64; 2]> = vec![[0, 0]; i / 2 + 2];
    walk_paths(&graph, 0, 0, 0, &mut paths_by_shape);

    let bottom_from_zero = match kind {
        GapKind::Interior => m_minus(3),
        GapKind::Boundary => m_minus(1),
    };
    let mut total = IntPolynomial::zero();
    for (ones, &[ending_zero, ending_one]) in paths_by_shape.iter().enumerate() {
        let common = |extra_m3: usize| {
            let mut product = power(&m_minus(2), 1 + ones);
            product = &product * &power(&IntPolynomial::constant(BigInt::from(2)), ones);
            &product * &power(&m_minus(3), extra_m3)
        };
        if ending_zero > 0 {
            // Descents after the top: ones `2`s, ones `m-2`s, the rest `m-3`
            // except the final one which takes the series' bottom weight.
            let term = &common(i - 2 * ones - 2) * &bottom_from_zero;
            total = &total + &term.scaled(&BigInt::from(ending_zero));
        }
        if ending_one > 0 {
            let term = common(i - 2 * ones - 1);
            total = &total + &term.scaled(&BigInt::from(ending_one));
        }
    }
    total
}

fn power(base: &IntPolynomial, exp: usize) -> IntPolynomial {
    let mut out = IntPolynomial::one();
    for _ in 0..exp {
        out = &out * base;
    }
    out
}

/// Depth-first enumeration of the tree above the bottom node, tallying each
/// maximal path by its number of ones and the label of its last node before
/// the bottom.
fn walk_paths(graph: &LevelGraph, level: usize, node: usize, ones: usize, tally: &mut [[u64; 2]]) {
    let label = graph.levels()[level][node];
    let ones = ones + usize::from(label == Label::One);
    if level + 2 == graph.level_count() {
        tally[ones][usize::from(label == Label::One)] += 1;
        return;
    }
    for child in graph.child_indices(level, node) {
        walk_paths(graph, level + 1, child, ones, tally);
    }
}

/// Same value as [`gap_polynomial`], computed by the two-term recurrence
/// `x_i = (m-3) x_{i-1} + 2(m-2) x_{i-2}` from the series' first two entries.
pub fn gap_polynomial_rec(kind: GapKind, i: usize) -> IntPolynomial {
    let x0 = IntPolynomial::one();
    if i == 0 {
        return x0;
    }
    let x1 = m_minus(2);
    if i == 1 {
        return x1;
    }
    let second_factor = match kind {
        GapKind::Interior => m_minus(3),
        GapKind::Boundary => m_minus(1),
    };
    let mut prev = x1.clone();
    let mut cur = &x1 * &second_factor;
    let step_a = m_minus(3);
    let step_b = m_minus(2).scaled(&BigInt::from(2));
    for _ in 3..=i {
        let next = &(&step_a * &cur) + &(&step_b * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Next term of an integer sequence sampled at consecutive arguments,
/// assuming it is generated by a polynomial of degree at most `max_degree`.
///
/// Returns `None` when the samples are too few to certify the degree bound or
/// when some forward difference of order above `max_degree` is nonzero.
pub fn extrapolate_integer_sequence(values: &[BigInt], max_degree: usize) -> Option<BigInt> {
    if values.len() < max_degree + 2 {
        return None;
    }
    let mut rows: Vec<Vec<BigInt>> = vec![values.to_vec()];
    while rows.last().unwrap().len() > 1 {
        let prev = rows.last().unwrap();
        let next: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    for row in rows.iter().skip(max_degree + 1) {
        if row.iter().any(|d| !d.is_zero()) {
            return None;
        }
    }
    let next = rows
        .iter()
        .take(max_degree + 1)
        .map(|row| row.last().unwrap().clone())
        .fold(BigInt::zero(), |acc, d| acc + d);
    Some(next)
}

/// Interpolates samples at consecutive integer arguments starting at
/// `start` into a polynomial, requiring all coefficients to be integers.
///
/// Returns `None` when the interpolating polynomial has a non-integer
/// coefficient.
pub fn fit_integer_polynomial(start: i64, values: &[BigInt]) -> Option<IntPolynomial> {
    if values.is_empty() {
        return Some(IntPolynomial::zero());
    }
    // Newton forward form: sum_j diff_j * binom(x - start, j).
    let mut diffs: Vec<BigInt> = Vec::with_capacity(values.len());
    let mut row = values.to_vec();
    diffs.push(row[0].clone());
    while row.len() > 1 {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        diffs.push(row[0].clone());
    }

    let x_shift = [
        BigRational::from_integer(BigInt::from(-start)),
        BigRational::from_integer(BigInt::one()),
    ];
    let mut acc = vec![BigRational::zero(); values.len()];
    let mut basis = vec![BigRational::one()]; // binom(x - start, 0)
    for (j, d) in diffs.iter().enumerate() {
        if j > 0 {
            // basis *= (x - start - (j - 1)) / j
            let offset = vec![
                &x_shift[0] - BigRational::from_integer(BigInt::from(j as i64 - 1)),
                x_shift[1].clone(),
            ];
            basis = rat_mul(&basis, &offset);
            let inv_j = BigRational::new(BigInt::one(), BigInt::from(j as i64));
            for c in &mut basis {
                *c *= &inv_j;
            }
        }
        let scale = BigRational::from_integer(d.clone());
        for (slot, c) in acc.iter_mut().zip(basis.iter()) {
            *slot += c * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(IntPolynomial::from_coeffs(coeffs))
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Formats an exact rational as a decimal integer when possible, `a/b`
/// otherwise.
pub fn rational_display(value: &BigRational) -> String {
    let mut out = String::new();
    if value.is_integer() {
        write!(out, "{}", value.to_integer()).unwrap();
    } else {
        write!(out, "{}/{}", value.numer(), value.denom()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn polynomial_basics() {
        let p = poly(&[-2, 1]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(&BigInt::from(5)), BigInt::from(3));
        assert_eq!(p.render(), "-2 + 1*m");
        assert!(p.is_monic());

        let z = IntPolynomial::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.coefficient_list(), alloc::vec![BigInt::zero()]);

        // Trailing zeros are stripped.
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = poly(&[-2, 1]); // m - 2
        let b = poly(&[-3, 1]); // m - 3
        assert_eq!(&a * &b, poly(&[6, -5, 1]));
        assert_eq!(&a + &b, poly(&[-5, 2]));
        assert_eq!(&a - &b, poly(&[1]));
    }

    #[test]
    fn level_graph_smallest() {
        let g1 = level_graph(1).unwrap();
        assert_eq!(g1.level_count(), 1);
        assert_eq!(g1.edge_count(), 0);
        assert_eq!(g1.maximal_path_count(), 1);

        let g2 = level_graph(2).unwrap();
        assert_eq!(g2.levels(), &[alloc::vec![Label::Zero], alloc::vec![Label::Zero]]);
        assert_eq!(g2.edge_count(), 1);

        let g3 = level_graph(3).unwrap();
        assert_eq!(
            g3.levels(),
            &[
                alloc::vec![Label::Zero],
                alloc::vec![Label::Zero, Label::One],
                alloc::vec![Label::Zero]
            ]
        );
        assert_eq!(g3.edge_count(), 4);
        assert_eq!(g3.maximal_path_count(), 2);

        assert!(level_graph(0).is_err());
    }

    #[test]
    fn level_graph_structure_invariants() {
        for i in 1..=10 {
            let g = level_graph(i).unwrap();
            assert_eq!(g.level_count(), i);
            assert_eq!(g.levels()[0], alloc::vec![Label::Zero]);
            assert_eq!(g.levels()[i - 1], alloc::vec![Label::Zero]);
            // No One feeds a One; Ones have a single child.
            for level in 0..i.saturating_sub(1) {
                for (node, &label) in g.levels()[level].iter().enumerate() {
                    let children = g.child_indices(level, node);
                    if label == Label::One {
                        assert_eq!(children.len(), 1);
                    }
                    for c in children {
                        if label == Label::One && level + 2 < i {
                            assert_eq!(g.levels()[level + 1][c], Label::Zero);
                        }
                    }
                }
            }
            // Every node below the top has exactly one incoming edge.
            for level in 1..i.saturating_sub(1) {
                let mut indegree = alloc::vec![0usize; g.levels()[level].len()];
                for (node, _) in g.levels()[level - 1].iter().enumerate() {
                    for c in g.child_indices(level - 1, node) {
                        indegree[c] += 1;
                    }
                }
                assert!(indegree.iter().all(|&d| d == 1));
            }
        }
    }

    #[test]
    fn path_count_matches_string_enumeration() {
        // Independent count: binary strings of length i, first = last = 0,
        // no "11" substring.
        for i in 1..=14usize {
            let mut brute = 0u64;
            for bits in 0..(1u32 << i) {
                let get = |j: usize| bits >> j & 1;
                if get(0) != 0 || get(i - 1) != 0 {
                    continue;
                }
                if (0..i - 1).any(|j| get(j) == 1 && get(j + 1) == 1) {
                    continue;
                }
                brute += 1;
            }
            assert_eq!(level_graph(i).unwrap().maximal_path_count(), brute);
        }
    }

    #[test]
    fn gap_polynomial_small_values() {
        assert_eq!(gap_polynomial(GapKind::Interior, 0), IntPolynomial::one());
        assert_eq!(gap_polynomial(GapKind::Boundary, 0), IntPolynomial::one());
        assert_eq!(gap_polynomial(GapKind::Interior, 1), poly(&[-2, 1]));
        assert_eq!(gap_polynomial(GapKind::Boundary, 1), poly(&[-2, 1]));
        // (m-2)(m-3) and (m-2)(m-1)
        assert_eq!(gap_polynomial(GapKind::Interior, 2), poly(&[6, -5, 1]));
        assert_eq!(gap_polynomial(GapKind::Boundary, 2), poly(&[2, -3, 1]));
        // (m-2)(m-3)^2 + 2(m-2)^2 = m^3 - 6m^2 + 13m - 10
        assert_eq!(
            gap_polynomial(GapKind::Interior, 3),
            poly(&[-10, 13, -6, 1])
        );
    }

    #[test]
    fn recurrence_matches_definition() {
        for kind in [GapKind::Interior, GapKind::Boundary] {
            for i in 0..=16 {
                assert_eq!(
                    gap_polynomial(kind, i),
                    gap_polynomial_rec(kind, i),
                    "kind {:?} index {i}",
                    kind
                );
            }
        }
    }

    #[test]
    fn series_are_monic_of_full_degree() {
        for kind in [GapKind::Interior, GapKind::Boundary] {
            for i in 1..=12 {
                let p = gap_polynomial_rec(kind, i);
                assert_eq!(p.degree(), Some(i));
                assert!(p.is_monic());
            }
        }
    }

    #[test]
    fn eval_examples() {
        let p2 = gap_polynomial_rec(GapKind::Interior, 2);
        assert_eq!(p2.eval(&BigInt::from(3)), BigInt::zero());
        let q2 = gap_polynomial_rec(GapKind::Boundary, 2);
        assert_eq!(q2.eval(&BigInt::from(3)), BigInt::from(2));
        let p1 = gap_polynomial_rec(GapKind::Interior, 1);
        assert_eq!(p1.eval(&BigInt::from(5)), BigInt::from(3));
    }

    #[test]
    fn extrapolation_of_squares() {
        let squares: Vec<BigInt> = (0..6).map(|x| BigInt::from(x * x)).collect();
        assert_eq!(
            extrapolate_integer_sequence(&squares, 2),
            Some(BigInt::from(36))
        );
        // Degree bound too tight.
        assert_eq!(extrapolate_integer_sequence(&squares, 1), None);
        // Too few samples to certify.
        assert_eq!(extrapolate_integer_sequence(&squares[..3], 2), None);
    }

    #[test]
    fn fit_recovers_polynomials() {
        let p = poly(&[-10, 13, -6, 1]);
        let samples: Vec<BigInt> = (3..=9).map(|x| p.eval(&BigInt::from(x))).collect();
        assert_eq!(fit_integer_polynomial(3, &samples), Some(p));
        // Half-integer coefficients are rejected: x(x-1)/2 sampled twice.
        let tri: Vec<BigInt> = (0..4).map(|x: i64| BigInt::from(x * (x - 1) / 2)).collect();
        assert_eq!(fit_integer_polynomial(0, &tri), None);
    }
}
