//! Closed-form homomorphism counts into quasi-complete targets.
//!
//! The path, cycle, broken-wheel and wheel counts subtract, from the count
//! into the full complete graph, the "bad" maps that send at least one source
//! edge onto the exceptional pair. Bad maps are grouped by the number `k` of
//! edges landing on the pair and enumerated through their lower-vertex sets:
//! each set decomposes into clusters (maximal runs of consecutive lower
//! vertices, extended by one vertex, two colorings each) and gaps (untouched
//! stretches weighed by the gap polynomials; interior gaps between two
//! clusters, boundary gaps at an end of a path).
//!
//! Alongside the normative evaluators, the `as_printed_*` functions evaluate
//! the reference display forms of the same sums literally, so a
//! reconciliation report can document where the two disagree; the normative
//! side is the one the enumeration oracles confirm.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec, HomClass};
use crate::Count;

// ---------------------------------------------------------------------------
// Lower-vertex sets, clusters and gaps
// ---------------------------------------------------------------------------

/// Ambient line of edge slots a lower-vertex set lives on: the `n - 1` edges
/// of a path or the `n` edges of a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Linear { positions: usize },
    Cyclic { positions: usize },
}

impl Geometry {
    fn positions(self) -> usize {
        match self {
            Geometry::Linear { positions } | Geometry::Cyclic { positions } => positions,
        }
    }
}

/// Strictly increasing lower vertices of the source edges mapped onto the
/// exceptional pair. Constructible only when the configuration is
/// realizable: no two indices at distance exactly 2 (also across the wrap in
/// the cyclic case), and a full cyclic set only on an even ambient length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerVertexSet {
    indices: Vec<usize>,
    geometry: Geometry,
}

impl LowerVertexSet {
    pub fn new(indices: Vec<usize>, geometry: Geometry) -> Option<Self> {
        let positions = geometry.positions();
        if indices.is_empty() || indices.len() > positions {
            return None;
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        if *indices.last().unwrap() >= positions {
            return None;
        }
        let valid = match geometry {
            Geometry::Linear { .. } => linear_valid(&indices),
            Geometry::Cyclic { positions } => cyclic_valid(&indices, positions),
        };
        valid.then_some(Self { indices, geometry })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn decompose(&self) -> Decomposition {
        match self.geometry {
            Geometry::Linear { positions } => decompose_linear(&self.indices, positions),
            Geometry::Cyclic { positions } => decompose_cyclic(&self.indices, positions),
        }
    }
}

/// Cluster/gap structure of a lower-vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub cluster_count: usize,
    /// Lengths of gaps enclosed between two clusters.
    pub interior_gaps: Vec<usize>,
    /// Lengths of gaps touching an end of the path (always empty on cycles).
    pub boundary_gaps: Vec<usize>,
}

fn linear_valid(set: &[usize]) -> bool {
    set.windows(2).all(|w| w[1] - w[0] != 2)
}

fn cyclic_valid(set: &[usize], positions: usize) -> bool {
    if !linear_valid(set) {
        return false;
    }
    if set.len() == positions {
        // One cluster through every vertex; it alternates only on even length.
        return positions.is_multiple_of(2);
    }
    set[0] + positions - set[set.len() - 1] != 2
}

fn decompose_linear(set: &[usize], positions: usize) -> Decomposition {
    let mut cluster_count = 1;
    let mut interior_gaps = Vec::new();
    for w in set.windows(2) {
        let diff = w[1] - w[0];
        if diff > 1 {
            cluster_count += 1;
            interior_gaps.push(diff - 2);
        }
    }
    let mut boundary_gaps = Vec::new();
    if set[0] > 0 {
        boundary_gaps.push(set[0]);
    }
    let last = set[set.len() - 1];
    if last < positions - 1 {
        boundary_gaps.push(positions - 1 - last);
    }
    Decomposition {
        cluster_count,
        interior_gaps,
        boundary_gaps,
    }
}

fn decompose_cyclic(set: &[usize], positions: usize) -> Decomposition {
    if set.len() == positions {
        return Decomposition {
            cluster_count: 1,
            interior_gaps: Vec::new(),
            boundary_gaps: Vec::new(),
        };
    }
    let mut cluster_count = 0;
    let mut interior_gaps = Vec::new();
    let mut record = |diff: usize| {
        if diff > 1 {
            cluster_count += 1;
            interior_gaps.push(diff - 2);
        }
    };
    for w in set.windows(2) {
        record(w[1] - w[0]);
    }
    record(set[0] + positions - set[set.len() - 1]);
    Decomposition {
        cluster_count,
        interior_gaps,
        boundary_gaps: Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// Gap polynomial values at a concrete target size
// ---------------------------------------------------------------------------

struct GapValues {
    interior: Vec<BigInt>,
    boundary: Vec<BigInt>,
}

impl GapValues {
    /// Gap weights for lengths `0..=max_len` at target size `m`, by the
    /// production recurrence `x_i = (m-3) x_{i-1} + 2(m-2) x_{i-2}`.
    fn new(max_len: usize, m: usize) -> Self {
        let m = BigInt::from(m);
        let step_a = &m - 3;
        let step_b = (&m - 2) * BigInt::from(2);
        let series = |second: BigInt| {
            let mut vals = Vec::with_capacity(max_len + 1);
            vals.push(BigInt::one());
            if max_len >= 1 {
                vals.push(&m - 2);
            }
            if max_len >= 2 {
                vals.push((&m - 2) * second);
            }
            for i in 3..=max_len {
                let next = &step_a * &vals[i - 1] + &step_b * &vals[i - 2];
                vals.push(next);
            }
            vals
        };
        GapValues {
            interior: series(&m - 3),
            boundary: series(&m - 1),
        }
    }
}

fn weight(dec: &Decomposition, gaps: &GapValues) -> BigInt {
    let mut w = BigInt::one() << dec.cluster_count;
    for &len in &dec.interior_gaps {
        w *= &gaps.interior[len];
    }
    for &len in &dec.boundary_gaps {
        w *= &gaps.boundary[len];
    }
    w
}

// ---------------------------------------------------------------------------
// Subset enumeration
// ---------------------------------------------------------------------------

/// Strictly increasing `k`-subsets of `0..positions` with no two elements at
/// distance exactly 2.
fn for_each_linear_valid(positions: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    let mut current = Vec::with_capacity(k);
    linear_valid_rec(positions, k, &mut current, f);
}

fn linear_valid_rec(
    positions: usize,
    k: usize,
    current: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if current.len() == k {
        f(current);
        return;
    }
    let start = current.last().map_or(0, |&l| l + 1);
    let remaining = k - current.len();
    for idx in start..positions {
        if positions - idx < remaining {
            break;
        }
        if let Some(&last) = current.last() {
            if idx - last == 2 {
                continue;
            }
        }
        current.push(idx);
        linear_valid_rec(positions, k, current, f);
        current.pop();
    }
}

/// As above, additionally honoring the wrap-around distance rule and the
/// even-length condition for the full set.
fn for_each_cyclic_valid(positions: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    for_each_linear_valid(positions, k, &mut |set| {
        if cyclic_valid(set, positions) {
            f(set);
        }
    });
}

/// Strictly increasing `k`-subsets of `0..positions` with no two consecutive
/// elements (optionally also across the wrap).
fn for_each_independent(positions: usize, k: usize, cyclic: bool, f: &mut dyn FnMut(&[usize])) {
    let mut current = Vec::with_capacity(k);
    independent_rec(positions, k, cyclic, &mut current, f);
}

fn independent_rec(
    positions: usize,
    k: usize,
    cyclic: bool,
    current: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if current.len() == k {
        let wrap_ok = !cyclic
            || current.len() < 2
            || current[0] + positions - current[current.len() - 1] >= 2;
        if wrap_ok {
            f(current);
        }
        return;
    }
    let start = current.last().map_or(0, |&l| l + 2);
    let remaining = k - current.len();
    for idx in start..positions {
        if positions - idx < remaining {
            break;
        }
        current.push(idx);
        independent_rec(positions, k, cyclic, current, f);
        current.pop();
    }
}

// ---------------------------------------------------------------------------
// Normative bad terms
// ---------------------------------------------------------------------------

fn path_term_value(n: usize, m: usize, k: usize) -> BigInt {
    let positions = n - 1;
    if k > positions {
        return BigInt::zero();
    }
    let gaps = GapValues::new(positions, m);
    let mut total = BigInt::zero();
    for_each_linear_valid(positions, k, &mut |set| {
        total += weight(&decompose_linear(set, positions), &gaps);
    });
    total
}

fn cycle_term_value(n: usize, m: usize, k: usize) -> BigInt {
    let positions = n;
    if k > positions {
        return BigInt::zero();
    }
    let gaps = GapValues::new(positions, m);
    let mut total = BigInt::zero();
    for_each_cyclic_valid(positions, k, &mut |set| {
        total += weight(&decompose_cyclic(set, positions), &gaps);
    });
    total
}

/// Bad maps from a triangle rim into the complete graph on `m` vertices:
/// triangle maps are injective, so only `k = 1` is realizable, with both
/// exceptional vertices in the image and a free third vertex.
fn triangle_term_value(m: usize, k: usize) -> BigInt {
    if k == 1 {
        BigInt::from(6) * (BigInt::from(m) - 2)
    } else {
        BigInt::zero()
    }
}

/// Hub-free wheel term: the rim is a cycle for `n >= 4` and a triangle for
/// `n = 3`.
fn wheel_rim_term_value(n: usize, m: usize, k: usize) -> BigInt {
    if n >= 4 {
        cycle_term_value(n, m, k)
    } else {
        triangle_term_value(m, k)
    }
}

/// Sum over spoke-only configurations: independent rim sets with every
/// untouched run of `len` rim vertices weighing `(m-2)(m-3)^(len-1)`.
fn spoke_term_value(n: usize, m: usize, k: usize, cyclic: bool) -> BigInt {
    let m = BigInt::from(m);
    let free_first: BigInt = &m - 2;
    let free_next: BigInt = &m - 3;
    let mut total = BigInt::zero();
    for_each_independent(n, k, cyclic, &mut |set| {
        let mut product = BigInt::one();
        let mut run = |len: usize| {
            if len > 0 {
                product *= &free_first * free_next.pow(len as u32 - 1);
            }
        };
        if cyclic {
            for w in set.windows(2) {
                run(w[1] - w[0] - 1);
            }
            run(set[0] + n - set[set.len() - 1] - 1);
        } else {
            run(set[0]);
            for w in set.windows(2) {
                run(w[1] - w[0] - 1);
            }
            run(n - 1 - set[set.len() - 1]);
        }
        total += product;
    });
    BigInt::from(2) * total
}

fn broken_wheel_term_value(n: usize, m: usize, k: usize) -> BigInt {
    let hub_free = if k < n {
        (BigInt::from(m) - 2) * path_term_value(n, m - 1, k)
    } else {
        BigInt::zero()
    };
    hub_free + spoke_term_value(n, m, k, false)
}

fn wheel_term_value(n: usize, m: usize, k: usize) -> BigInt {
    let hub_free = if k <= n {
        (BigInt::from(m) - 2) * wheel_rim_term_value(n, m - 1, k)
    } else {
        BigInt::zero()
    };
    hub_free + spoke_term_value(n, m, k, true)
}

fn check_target(m: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::TargetSize { m });
    }
    Ok(())
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::ZeroK);
    }
    Ok(())
}

fn to_count(value: BigInt) -> Count {
    value
        .to_biguint()
        .expect("exact enumeration never goes negative")
}

/// Maps from the path on `n >= 2` vertices to the complete graph on `m`
/// vertices sending exactly `k >= 1` source edges onto the exceptional pair.
/// Returns zero beyond the supported `k` range so summation loops stay
/// uniform.
pub fn bad_term_path(n: usize, m: usize, k: usize) -> Result<Count> {
    FamilySpec::new(Family::Path, n).validate()?;
    check_target(m)?;
    check_k(k)?;
    Ok(to_count(path_term_value(n, m, k)))
}

/// Total homomorphisms from the path on `n >= 2` vertices into the
/// quasi-complete graph on `m >= 3` vertices.
pub fn hom_path(n: usize, m: usize) -> Result<Count> {
    FamilySpec::new(Family::Path, n).validate()?;
    check_target(m)?;
    let mb = BigInt::from(m);
    let m1: BigInt = &mb - 1;
    let base = &mb * m1.pow(n as u32 - 1);
    let bad: BigInt = (1..n).map(|k| path_term_value(n, m, k)).sum();
    Ok(to_count(base - bad))
}

/// As [`bad_term_path`] for the cycle on `n >= 4` vertices, under the cyclic
/// cluster/gap semantics (`k = n` only on even cycles, `k = n - 1` never).
pub fn bad_term_cycle(n: usize, m: usize, k: usize) -> Result<Count> {
    FamilySpec::new(Family::Cycle, n).validate()?;
    check_target(m)?;
    check_k(k)?;
    Ok(to_count(cycle_term_value(n, m, k)))
}

/// Total homomorphisms from the cycle on `n >= 4` vertices into the
/// quasi-complete graph on `m >= 3` vertices.
pub fn hom_cycle(n: usize, m: usize) -> Result<Count> {
    FamilySpec::new(Family::Cycle, n).validate()?;
    check_target(m)?;
    let mb = BigInt::from(m);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let m1: BigInt = &mb - 1;
    let base = &m1 * (m1.pow(n as u32 - 1) + sign);
    let bad: BigInt = (1..=n).map(|k| cycle_term_value(n, m, k)).sum();
    Ok(to_count(base - bad))
}

/// Bad maps from the broken wheel on `n >= 3` spokes, split into the
/// hub-free part (hub avoids the pair, rim behaves like a path into a target
/// one vertex smaller) and the spoke part (hub pinned to the pair, used
/// edges are spokes over an independent rim set).
pub fn bad_term_broken_wheel(n: usize, m: usize, k: usize) -> Result<Count> {
    FamilySpec::new(Family::BrokenWheel, n).validate()?;
    check_target(m)?;
    check_k(k)?;
    Ok(to_count(broken_wheel_term_value(n, m, k)))
}

/// Total homomorphisms from the broken wheel on `n >= 3` spokes into the
/// quasi-complete graph on `m >= 3` vertices.
pub fn hom_broken_wheel(n: usize, m: usize) -> Result<Count> {
    FamilySpec::new(Family::BrokenWheel, n).validate()?;
    check_target(m)?;
    let mb = BigInt::from(m);
    let m2: BigInt = &mb - 2;
    let base = &mb * (&mb - 1) * m2.pow(n as u32 - 1);
    let bad: BigInt = (1..n).map(|k| broken_wheel_term_value(n, m, k)).sum();
    Ok(to_count(base - bad))
}

/// As [`bad_term_broken_wheel`] for the wheel on `n >= 3` spokes; the
/// hub-free part follows the cyclic terms (a triangle rim for `n = 3`) and
/// the spoke part runs over cyclically independent rim sets.
pub fn bad_term_wheel(n: usize, m: usize, k: usize) -> Result<Count> {
    FamilySpec::new(Family::Wheel, n).validate()?;
    check_target(m)?;
    check_k(k)?;
    Ok(to_count(wheel_term_value(n, m, k)))
}

/// Total homomorphisms from the wheel on `n >= 3` spokes into the
/// quasi-complete graph on `m >= 3` vertices.
pub fn hom_wheel(n: usize, m: usize) -> Result<Count> {
    FamilySpec::new(Family::Wheel, n).validate()?;
    check_target(m)?;
    let mb = BigInt::from(m);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let m2: BigInt = &mb - 2;
    let base = &mb * &m2 * (m2.pow(n as u32 - 1) + sign);
    let bad: BigInt = (1..=n).map(|k| wheel_term_value(n, m, k)).sum();
    Ok(to_count(base - bad))
}

// ---------------------------------------------------------------------------
// Complete and quasi-complete sources
// ---------------------------------------------------------------------------

fn factorial(x: usize) -> BigInt {
    (1..=x).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Falling factorial `a (a-1) ... (a-b+1)` with `b` factors.
fn falling(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    (0..b).fold(BigInt::one(), |acc, j| acc * BigInt::from(a - j))
}

fn binomial(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    falling(a, b) / factorial(b)
}

/// Homomorphisms from the complete graph on `n >= 3` vertices into the
/// quasi-complete graph on `m >= 3` vertices. Such maps are forced
/// injective, so the injective count coincides with the total and the
/// surjective and bijective counts vanish.
pub fn hom_complete(n: usize, m: usize, class: HomClass) -> Result<Count> {
    FamilySpec::new(Family::Complete, n).validate()?;
    check_target(m)?;
    let value = match class {
        HomClass::Surjective | HomClass::Bijective => BigInt::zero(),
        HomClass::All | HomClass::Injective => {
            if n >= m {
                BigInt::zero()
            } else {
                // Image holds exactly one exceptional vertex, or neither.
                BigInt::from(2) * factorial(n) * binomial(m - 2, n - 1)
                    + binomial(m - 2, n) * factorial(n)
            }
        }
    };
    Ok(to_count(value))
}

/// Homomorphisms from the quasi-complete graph on `n >= 3` vertices into the
/// quasi-complete graph on `m >= 3` vertices, by class.
pub fn hom_quasi_complete(n: usize, m: usize, class: HomClass) -> Result<Count> {
    FamilySpec::new(Family::QuasiComplete, n).validate()?;
    check_target(m)?;
    let value = if n > m {
        BigInt::zero()
    } else if n == m {
        match class {
            HomClass::All => {
                BigInt::from(2) * factorial(n - 1) + BigInt::from(2) * factorial(n - 2)
            }
            _ => BigInt::from(2) * factorial(n - 2),
        }
    } else {
        match class {
            HomClass::All => quasi_complete_terms(n, m, 1 + (m - n))
                .into_iter()
                .sum::<BigInt>(),
            HomClass::Injective => {
                let [t1, t2, t3, t4, _] = quasi_complete_terms(n, m, m - n);
                t1 + t2 + t3 + t4
            }
            HomClass::Surjective | HomClass::Bijective => BigInt::zero(),
        }
    };
    Ok(to_count(value))
}

/// The five summands of the `m > n` quasi-complete count, with the factor of
/// the second term (the choices for the top vertex once a clique vertex sits
/// on an exceptional endpoint) supplied by the caller: `1 + (m - n)` for the
/// corrected total count, `m - n` for the injective count and for the
/// as-printed form.
fn quasi_complete_terms(n: usize, m: usize, second_factor: usize) -> [BigInt; 5] {
    let both = BigInt::from(2) * binomial(m - 2, n - 2) * factorial(n - 2);
    let one_on_clique = BigInt::from(2)
        * BigInt::from(n - 1)
        * binomial(m - 2, n - 2)
        * factorial(n - 2)
        * BigInt::from(second_factor);
    let top_on_pair = BigInt::from(2) * binomial(m - 2, n - 1) * factorial(n - 1);
    let avoid_injective = binomial(m - 2, n) * factorial(n);
    let avoid_folded = binomial(m - 2, n - 1) * factorial(n - 1);
    [
        both,
        one_on_clique,
        top_on_pair,
        avoid_injective,
        avoid_folded,
    ]
}

// ---------------------------------------------------------------------------
// As-printed evaluators
// ---------------------------------------------------------------------------

/// Families whose bad-term sums exist in a reference display form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrintedFamily {
    Path,
    Cycle,
}

/// Literal term-by-term evaluation of the displayed four-summand bad-term
/// expressions, exactly as printed (including the leading 1/2 factor of the
/// first path summand and the displayed polynomial indices). Half-integer
/// intermediates are kept exact.
pub fn as_printed_term(family: PrintedFamily, n: usize, m: usize, k: usize) -> Result<BigRational> {
    match family {
        PrintedFamily::Path => as_printed_path_term(n, m, k),
        PrintedFamily::Cycle => as_printed_cycle_term(n, m, k),
    }
}

fn rational(value: BigInt) -> BigRational {
    BigRational::from_integer(value)
}

/// Product over interior gaps of `2 p_len(m)` exactly as displayed inside
/// every printed summand.
fn printed_inner(set: &[usize], gaps: &GapValues) -> BigInt {
    let mut product = BigInt::one();
    for w in set.windows(2) {
        let diff = w[1] - w[0];
        if diff > 2 {
            product *= BigInt::from(2) * &gaps.interior[diff - 2];
        }
    }
    product
}

fn as_printed_path_term(n: usize, m: usize, k: usize) -> Result<BigRational> {
    FamilySpec::new(Family::Path, n).validate()?;
    check_target(m)?;
    check_k(k)?;
    let positions = n - 1;
    if k > positions {
        return Ok(BigRational::zero());
    }
    if k == positions {
        return Ok(rational(BigInt::from(2)));
    }
    let gaps = GapValues::new(positions, m);
    let end = positions - 1;
    let mut anchored_both = BigInt::zero();
    let mut anchored_left = BigInt::zero();
    let mut anchored_right = BigInt::zero();
    let mut anchored_none = BigInt::zero();
    for_each_linear_valid(positions, k, &mut |set| {
        let inner = printed_inner(set, &gaps);
        let first = set[0];
        let last = set[set.len() - 1];
        match (first == 0, last == end) {
            (true, true) => anchored_both += inner,
            (true, false) => anchored_left += inner * &gaps.boundary[end - last],
            (false, true) => anchored_right += &gaps.boundary[first] * inner,
            (false, false) => {
                anchored_none += &gaps.boundary[first] * inner * &gaps.boundary[end - last]
            }
        }
    });
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(half * rational(anchored_both)
        + rational(anchored_left)
        + rational(anchored_right)
        + rational(BigInt::from(2) * anchored_none))
}

fn as_printed_cycle_term(n: usize, m: usize, k: usize) -> Result<BigRational> {
    FamilySpec::new(Family::Cycle, n).validate()?;
    check_target(m)?;
    check_k(k)?;
    if k > n {
        return Ok(BigRational::zero());
    }
    if k == n {
        let v = if n.is_multiple_of(2) { 2 } else { 0 };
        return Ok(rational(BigInt::from(v)));
    }
    if k == n - 1 {
        return Ok(BigRational::zero());
    }
    let gaps = GapValues::new(n, m);
    let mut total = BigInt::zero();
    for_each_linear_valid(n, k, &mut |set| {
        let inner = printed_inner(set, &gaps);
        let first = set[0];
        let last = set[set.len() - 1];
        if first == 0 && last == n - 1 {
            total += inner;
        } else if first == 0 && last < n - 2 {
            // Printed bound stops short of last == n - 2; those sets are
            // exactly the ones the wrap-around distance rule rejects.
            total += inner * BigInt::from(2) * &gaps.interior[n - last - 2];
        } else if first > 1 && last == n - 1 {
            // Displayed leading index: the gap ahead of the first cluster is
            // weighed p_{i_1} even though it only spans i_1 - 1 vertices.
            total += BigInt::from(2) * &gaps.interior[first] * inner;
        } else if first > 0 && last < n - 1 {
            total += BigInt::from(2) * &gaps.interior[first + n - last - 2] * inner;
        }
    });
    Ok(rational(total))
}

/// The five summands of the quasi-complete count in the displayed
/// binomial-coefficient form, second factor `m - n` as printed.
/// Defined for `m > n` only.
pub fn as_printed_quasi_complete_terms(n: usize, m: usize) -> Result<[Count; 5]> {
    FamilySpec::new(Family::QuasiComplete, n).validate()?;
    check_target(m)?;
    assert!(m > n, "the displayed sum covers m > n only");
    Ok(quasi_complete_terms(n, m, m - n).map(to_count))
}

/// The same five summands in the displayed factorial-quotient form; `None`
/// at `m = n + 1` where one denominator degenerates.
pub fn as_printed_quasi_complete_factorial_terms(n: usize, m: usize) -> Result<Option<[Count; 5]>> {
    FamilySpec::new(Family::QuasiComplete, n).validate()?;
    check_target(m)?;
    assert!(m > n, "the displayed sum covers m > n only");
    if m == n + 1 {
        return Ok(None);
    }
    let two = BigInt::from(2);
    let t1 = &two * falling(m - 2, n - 2);
    let t2 = &two * BigInt::from(n - 1) * falling(m - 2, n - 1);
    let t3 = &two * falling(m - 2, n - 1);
    let t4 = falling(m - 2, n);
    let t5 = falling(m - 2, n - 1);
    Ok(Some([t1, t2, t3, t4, t5].map(to_count)))
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

/// One row of a profile table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow {
    pub family: Family,
    pub n: usize,
    pub class: HomClass,
    pub count: Count,
}

/// Closed-form counts into a fixed quasi-complete target for a batch of
/// source specs, sorted by family name, size and class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileTable {
    pub m: usize,
    pub rows: Vec<ProfileRow>,
}

/// Closed-form count for any family; classes other than `all` are only
/// defined for complete and quasi-complete sources.
pub fn hom_by_family(spec: &FamilySpec, m: usize, class: HomClass) -> Result<Count> {
    spec.validate()?;
    check_target(m)?;
    match spec.family {
        Family::Complete => hom_complete(spec.n, m, class),
        Family::QuasiComplete => hom_quasi_complete(spec.n, m, class),
        family => {
            if class != HomClass::All {
                return Err(Error::ClassNotCovered { family, class });
            }
            match family {
                Family::Path => hom_path(spec.n, m),
                Family::Cycle => hom_cycle(spec.n, m),
                Family::BrokenWheel => hom_broken_wheel(spec.n, m),
                Family::Wheel => hom_wheel(spec.n, m),
                _ => unreachable!(),
            }
        }
    }
}

/// Normative bad term for the families that have one.
pub fn bad_term_by_family(family: Family, n: usize, m: usize, k: usize) -> Result<Count> {
    match family {
        Family::Path => bad_term_path(n, m, k),
        Family::Cycle => bad_term_cycle(n, m, k),
        Family::BrokenWheel => bad_term_broken_wheel(n, m, k),
        Family::Wheel => bad_term_wheel(n, m, k),
        _ => Err(Error::ClassNotCovered {
            family,
            class: HomClass::All,
        }),
    }
}

/// Assembles the profile table for `specs` into the quasi-complete target on
/// `m` vertices. Complete and quasi-complete sources contribute all four
/// class rows, the other families contribute the total count only.
pub fn partial_profile(m: usize, specs: &[FamilySpec]) -> Result<ProfileTable> {
    check_target(m)?;
    let mut rows = Vec::new();
    for spec in specs {
        spec.validate()?;
        let classes: &[HomClass] = match spec.family {
            Family::Complete | Family::QuasiComplete => &HomClass::ALL,
            _ => &[HomClass::All],
        };
        for &class in classes {
            rows.push(ProfileRow {
                family: spec.family,
                n: spec.n,
                class,
                count: hom_by_family(spec, m, class)?,
            });
        }
    }
    rows.sort_by_key(|row| (row.family, row.n, row.class));
    Ok(ProfileTable { m, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn count(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn lower_vertex_set_validity() {
        let lin = |idx: &[usize], positions| {
            LowerVertexSet::new(idx.to_vec(), Geometry::Linear { positions })
        };
        assert!(lin(&[0, 1, 3], 5).is_none()); // distance 2 between 1 and 3
        assert!(lin(&[0, 3], 5).is_some());
        assert!(lin(&[0, 1], 5).is_some());
        assert!(lin(&[5], 5).is_none()); // out of range
        assert!(lin(&[1, 0], 5).is_none()); // not increasing

        let cyc =
            |idx: &[usize], positions| LowerVertexSet::new(idx.to_vec(), Geometry::Cyclic { positions });
        assert!(cyc(&[0, 2], 4).is_none()); // distance 2
        assert!(cyc(&[0, 3], 5).is_none()); // wrap distance 2
        assert!(cyc(&[0, 1, 2, 3], 4).is_some()); // full even set
        assert!(cyc(&[0, 1, 2, 3, 4], 5).is_none()); // full odd set
        assert!(cyc(&[0, 1, 2, 3], 5).is_none()); // leaves out one vertex
    }

    #[test]
    fn decomposition_examples() {
        // Lower vertices 0; 3,4; 8 on an 11-vertex path (10 edge slots):
        // clusters {0,1}, {3,4,5}, {8,9}; gaps {2}, {6,7}, {10}.
        let set = LowerVertexSet::new(vec![0, 3, 4, 8], Geometry::Linear { positions: 10 }).unwrap();
        let dec = set.decompose();
        assert_eq!(dec.cluster_count, 3);
        assert_eq!(dec.interior_gaps, vec![1, 2]);
        assert_eq!(dec.boundary_gaps, vec![1]);

        let full = LowerVertexSet::new(vec![0, 1, 2, 3], Geometry::Cyclic { positions: 4 }).unwrap();
        let dec = full.decompose();
        assert_eq!(dec.cluster_count, 1);
        assert!(dec.interior_gaps.is_empty());

        let single = LowerVertexSet::new(vec![1], Geometry::Cyclic { positions: 4 }).unwrap();
        let dec = single.decompose();
        assert_eq!(dec.cluster_count, 1);
        assert_eq!(dec.interior_gaps, vec![2]);
    }

    #[test]
    fn path_terms_match_frozen_histogram_slices() {
        // Values fixed by exhaustive enumeration of the maps into the
        // complete target.
        assert_eq!(bad_term_path(4, 3, 3).unwrap(), count(2));
        for m in 3..=8 {
            assert_eq!(bad_term_path(4, m, 3).unwrap(), count(2));
        }
        assert_eq!(bad_term_path(3, 3, 1).unwrap(), count(4));
        assert_eq!(bad_term_path(4, 3, 1).unwrap(), count(10));
        assert_eq!(bad_term_path(4, 3, 2).unwrap(), count(4));
        // Beyond the supported range the term is zero.
        assert_eq!(bad_term_path(4, 3, 9).unwrap(), count(0));
        assert_eq!(bad_term_path(4, 3, 0).unwrap_err(), Error::ZeroK);
    }

    #[test]
    fn cycle_terms_special_cases() {
        for m in 3..=8 {
            assert_eq!(bad_term_cycle(4, m, 4).unwrap(), count(2));
            assert_eq!(bad_term_cycle(5, m, 5).unwrap(), count(0));
            assert_eq!(bad_term_cycle(5, m, 4).unwrap(), count(0));
            assert_eq!(bad_term_cycle(6, m, 5).unwrap(), count(0));
        }
        assert_eq!(bad_term_cycle(4, 4, 1).unwrap(), count(16));
        assert_eq!(bad_term_cycle(4, 3, 2).unwrap(), count(8));
    }

    #[test]
    fn hom_path_examples() {
        assert_eq!(hom_path(3, 3).unwrap(), count(6));
        assert_eq!(hom_path(2, 4).unwrap(), count(10));
    }

    #[test]
    fn hom_cycle_examples() {
        assert_eq!(hom_cycle(4, 3).unwrap(), count(8));
        assert_eq!(hom_cycle(5, 3).unwrap(), count(0));
        assert_eq!(hom_cycle(4, 4).unwrap(), count(50));
    }

    #[test]
    fn broken_wheel_terms() {
        assert_eq!(bad_term_broken_wheel(3, 4, 1).unwrap(), count(24));
        assert_eq!(bad_term_broken_wheel(3, 4, 2).unwrap(), count(8));
        assert_eq!(bad_term_broken_wheel(3, 4, 3).unwrap(), count(0));
        assert_eq!(hom_broken_wheel(3, 4).unwrap(), count(16));
        assert_eq!(hom_broken_wheel(5, 3).unwrap(), count(0));
    }

    #[test]
    fn wheel_terms() {
        assert_eq!(bad_term_wheel(4, 4, 1).unwrap(), count(16));
        assert_eq!(bad_term_wheel(4, 4, 2).unwrap(), count(32));
        assert_eq!(bad_term_wheel(4, 4, 4).unwrap(), count(4));
        assert_eq!(hom_wheel(4, 4).unwrap(), count(20));
        for n in 3..=8 {
            assert_eq!(hom_wheel(n, 3).unwrap(), count(0), "n={n}");
        }
    }

    #[test]
    fn three_spoke_wheel_is_the_complete_graph_on_four() {
        for m in 3..=8 {
            assert_eq!(
                hom_wheel(3, m).unwrap(),
                hom_complete(4, m, HomClass::All).unwrap(),
                "m={m}"
            );
        }
    }

    #[test]
    fn complete_source_examples() {
        assert_eq!(hom_complete(5, 4, HomClass::All).unwrap(), count(0));
        assert_eq!(hom_complete(3, 4, HomClass::All).unwrap(), count(12));
        assert_eq!(hom_complete(3, 5, HomClass::All).unwrap(), count(42));
        assert_eq!(hom_complete(3, 4, HomClass::Surjective).unwrap(), count(0));
        assert_eq!(
            hom_complete(3, 4, HomClass::Injective).unwrap(),
            hom_complete(3, 4, HomClass::All).unwrap()
        );
        // n = m - 1 agrees with the dedicated 2 (m-1)! form.
        assert_eq!(hom_complete(4, 5, HomClass::All).unwrap(), count(48));
    }

    #[test]
    fn quasi_complete_source_examples() {
        assert_eq!(hom_quasi_complete(3, 3, HomClass::All).unwrap(), count(6));
        assert_eq!(
            hom_quasi_complete(4, 4, HomClass::Bijective).unwrap(),
            count(4)
        );
        assert_eq!(hom_quasi_complete(3, 4, HomClass::All).unwrap(), count(26));
        assert_eq!(
            hom_quasi_complete(3, 4, HomClass::Injective).unwrap(),
            count(16)
        );
        assert_eq!(hom_quasi_complete(5, 4, HomClass::All).unwrap(), count(0));
        assert_eq!(
            hom_quasi_complete(3, 5, HomClass::Surjective).unwrap(),
            count(0)
        );
    }

    #[test]
    fn printed_terms_examples() {
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(
            as_printed_term(PrintedFamily::Path, 4, 3, 3).unwrap(),
            two
        );
        assert_eq!(
            as_printed_term(PrintedFamily::Path, 4, 3, 1).unwrap(),
            BigRational::from_integer(BigInt::from(6))
        );
        assert_eq!(
            as_printed_term(PrintedFamily::Cycle, 4, 4, 1).unwrap(),
            BigRational::from_integer(BigInt::from(32))
        );
    }

    #[test]
    fn printed_quasi_complete_forms_agree_with_each_other() {
        for n in 3..=8 {
            for m in (n + 2)..=12 {
                let binomial_form = as_printed_quasi_complete_terms(n, m).unwrap();
                let factorial_form = as_printed_quasi_complete_factorial_terms(n, m)
                    .unwrap()
                    .expect("defined for m >= n + 2");
                assert_eq!(binomial_form, factorial_form, "n={n} m={m}");
            }
            assert_eq!(
                as_printed_quasi_complete_factorial_terms(n, n + 1).unwrap(),
                None
            );
        }
    }

    #[test]
    fn profile_rows_are_sorted_and_complete() {
        let specs = vec![
            FamilySpec::new(Family::Path, 3),
            FamilySpec::new(Family::Complete, 3),
        ];
        let table = partial_profile(4, &specs).unwrap();
        assert_eq!(table.rows.len(), 5);
        assert_eq!(table.rows[0].family, Family::Complete);
        assert_eq!(table.rows[0].class, HomClass::All);
        assert_eq!(table.rows[0].count, count(12));
        assert_eq!(table.rows[1].class, HomClass::Injective);
        assert_eq!(table.rows[3].class, HomClass::Bijective);
        assert_eq!(table.rows[4].family, Family::Path);
    }

    #[test]
    fn profile_path_rows_fixed_by_the_oracle() {
        let specs: Vec<FamilySpec> = (2..=4).map(|n| FamilySpec::new(Family::Path, n)).collect();
        let table = partial_profile(3, &specs).unwrap();
        let counts: Vec<Count> = table.rows.iter().map(|r| r.count.clone()).collect();
        assert_eq!(counts, vec![count(4), count(6), count(8)]);
    }

    #[test]
    fn profile_rejects_invalid_specs() {
        let err = partial_profile(3, &[FamilySpec::new(Family::Cycle, 3)]).unwrap_err();
        assert_eq!(err, Error::CycleIsTriangle);
        let err = partial_profile(2, &[]).unwrap_err();
        assert_eq!(err, Error::TargetSize { m: 2 });
    }

    #[test]
    fn class_dispatch_guards_uncovered_classes() {
        let spec = FamilySpec::new(Family::Cycle, 5);
        let err = hom_by_family(&spec, 4, HomClass::Injective).unwrap_err();
        assert_eq!(
            err,
            Error::ClassNotCovered {
                family: Family::Cycle,
                class: HomClass::Injective
            }
        );
        assert!(hom_by_family(&spec, 4, HomClass::All).is_ok());
    }
}
