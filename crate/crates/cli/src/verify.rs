//! The full equivalence sweep behind `quasihom verify` and the acceptance
//! suite: closed forms against both oracles, per-term histogram slices,
//! polynomial identities and the printed-form reconciliation report.
//!
//! Every check is exact; a property fails on the first mismatching tuple.
//! Printed-versus-normative deltas are collected into the errata table and
//! are documentation, not failures: the build is judged against the oracles.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use quasihom_core::bruteforce::{count_by_class, exceptional_histogram, ExceptionalHistogram};
use quasihom_core::closed_form::{
    as_printed_quasi_complete_factorial_terms, as_printed_quasi_complete_terms, as_printed_term,
    bad_term_broken_wheel, bad_term_by_family, bad_term_cycle, bad_term_path, bad_term_wheel,
    hom_by_family, hom_quasi_complete, Geometry, LowerVertexSet, PrintedFamily,
};
use quasihom_core::graph::{complete_graph, make_family, quasi_complete_graph};
use quasihom_core::poly::{
    extrapolate_integer_sequence, fit_integer_polynomial, gap_polynomial, gap_polynomial_rec,
    rational_display, GapKind,
};
use quasihom_core::transfer::{
    cyclic_hom_count, hub_conditioned_count, linear_hom_count, RimKind,
};
use quasihom_core::{BigInt, BigRational, Count, Family, FamilySpec, HomClass};

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Size bound for complete, quasi-complete, broken-wheel and wheel
    /// sources; paths and cycles run one step further so every family
    /// reaches the same source vertex count.
    pub n_max: usize,
    pub m_max: usize,
    pub transfer_n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 7,
            m_max: 6,
            transfer_n_max: 18,
        }
    }
}

impl VerifyConfig {
    fn grid(&self, family: Family) -> std::ops::RangeInclusive<usize> {
        let top = match family {
            Family::Path | Family::Cycle => self.n_max + 1,
            _ => self.n_max,
        };
        family.min_size()..=top
    }
}

#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checks: usize,
    pub failure: Option<String>,
    pub elapsed: std::time::Duration,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// One reconciliation row: a printed value next to the normative value and
/// the enumeration oracle. `k = 0` marks whole-count rows (quasi-complete
/// sources, which have no per-k decomposition).
#[derive(Debug, Clone)]
pub struct ErrataRow {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub printed: BigRational,
    pub normative: Count,
    pub oracle: Count,
}

impl ErrataRow {
    pub fn is_delta(&self) -> bool {
        self.printed != BigRational::from_integer(BigInt::from(self.normative.clone()))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub properties: Vec<PropertyResult>,
    pub errata: Vec<ErrataRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn first_failure(&self) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| !p.passed())
    }

    pub fn delta_count(&self) -> usize {
        self.errata.iter().filter(|r| r.is_delta()).count()
    }
}

pub fn errata_csv(rows: &[ErrataRow]) -> String {
    let mut out = String::from("family,n,m,k,printed_value,normative_value,oracle_value\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.family.name(),
            r.n,
            r.m,
            r.k,
            rational_display(&r.printed),
            r.normative,
            r.oracle
        )
        .unwrap();
    }
    out
}

/// Histograms reused across properties, keyed by family, size and target.
struct HistogramCache {
    cache: BTreeMap<(Family, usize, usize), ExceptionalHistogram>,
}

impl HistogramCache {
    fn new() -> Self {
        HistogramCache {
            cache: BTreeMap::new(),
        }
    }

    fn get(&mut self, family: Family, n: usize, m: usize) -> &ExceptionalHistogram {
        self.cache.entry((family, n, m)).or_insert_with(|| {
            let g = make_family(&FamilySpec::new(family, n)).expect("grid spec is valid");
            exceptional_histogram(&g, m).expect("m >= 3")
        })
    }
}

struct Check {
    name: &'static str,
    checks: usize,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            checks: 0,
            failure: None,
        }
    }

    fn assert_eq<T: PartialEq + std::fmt::Display>(&mut self, expected: T, got: T, tuple: &str) {
        self.checks += 1;
        if self.failure.is_none() && expected != got {
            self.failure = Some(format!("{tuple}: expected {expected}, got {got}"));
        }
    }

    fn assert(&mut self, ok: bool, tuple: &str) {
        self.checks += 1;
        if self.failure.is_none() && !ok {
            self.failure = Some(tuple.to_string());
        }
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            name: self.name,
            checks: self.checks,
            failure: self.failure,
            elapsed: std::time::Duration::ZERO,
        }
    }
}

fn timed(f: impl FnOnce() -> PropertyResult) -> PropertyResult {
    let start = std::time::Instant::now();
    let mut result = f();
    result.elapsed = start.elapsed();
    result
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let mut histograms = HistogramCache::new();
    let bruteforce = timed(|| closed_vs_bruteforce(config));
    let per_k = timed(|| per_k_terms(config, &mut histograms));
    let identities = timed(|| histogram_identities(config, &mut histograms));
    let transfer = timed(|| transfer_equivalence(config));
    let start = std::time::Instant::now();
    let (mut reconciliation, errata) = printed_reconciliation(config, &mut histograms);
    reconciliation.elapsed = start.elapsed();
    let properties = vec![
        bruteforce,
        per_k,
        identities,
        transfer,
        timed(corollaries),
        timed(golden_polynomials),
        timed(special_constants),
        timed(|| structural_zeros(config)),
        timed(polynomial_fit),
        reconciliation,
        timed(printed_form_consistency),
    ];
    VerifyReport { properties, errata }
}

fn closed_vs_bruteforce(config: &VerifyConfig) -> PropertyResult {
    let mut check = Check::new("closed-vs-bruteforce");
    for family in Family::ALL {
        for n in config.grid(family) {
            let spec = FamilySpec::new(family, n);
            let g = make_family(&spec).expect("grid spec is valid");
            for m in 3..=config.m_max {
                let target = quasi_complete_graph(m).expect("m >= 3");
                let classes: &[HomClass] = match family {
                    Family::Complete | Family::QuasiComplete => &HomClass::ALL,
                    _ => &[HomClass::All],
                };
                for &class in classes {
                    let closed = hom_by_family(&spec, m, class).expect("in range");
                    let oracle = count_by_class(&g, &target, class);
                    check.assert_eq(oracle, closed, &format!("({family}, n={n}, m={m}, {class})"));
                }
            }
        }
    }
    check.finish()
}

fn per_k_terms(config: &VerifyConfig, histograms: &mut HistogramCache) -> PropertyResult {
    let mut check = Check::new("per-k-terms");
    for family in [
        Family::Path,
        Family::Cycle,
        Family::BrokenWheel,
        Family::Wheel,
    ] {
        for n in config.grid(family) {
            let edge_count = make_family(&FamilySpec::new(family, n))
                .expect("grid spec is valid")
                .edge_count();
            for m in 3..=config.m_max {
                let hist = histograms.get(family, n, m).clone();
                for k in 1..=edge_count {
                    let term = bad_term_by_family(family, n, m, k).expect("in range");
                    check.assert_eq(
                        hist.get(k),
                        term,
                        &format!("({family}, n={n}, m={m}, k={k})"),
                    );
                }
            }
        }
    }
    check.finish()
}

fn histogram_identities(config: &VerifyConfig, histograms: &mut HistogramCache) -> PropertyResult {
    let mut check = Check::new("histogram-identities");
    for family in Family::ALL {
        for n in config.grid(family) {
            let g = make_family(&FamilySpec::new(family, n)).expect("grid spec is valid");
            for m in 3..=config.m_max {
                let hist = histograms.get(family, n, m).clone();
                let into_complete =
                    count_by_class(&g, &complete_graph(m).expect("m >= 3"), HomClass::All);
                let into_quasi =
                    count_by_class(&g, &quasi_complete_graph(m).expect("m >= 3"), HomClass::All);
                check.assert_eq(
                    into_complete,
                    hist.total(),
                    &format!("total ({family}, n={n}, m={m})"),
                );
                check.assert_eq(
                    into_quasi.clone(),
                    hist.zero_slot(),
                    &format!("zero slot ({family}, n={n}, m={m})"),
                );
                // Decomposition identity: the bad terms account exactly for
                // the difference between the two targets.
                if !matches!(family, Family::Complete | Family::QuasiComplete) {
                    let bad_sum = (1..=g.edge_count()).fold(Count::from(0u32), |acc, k| {
                        acc + bad_term_by_family(family, n, m, k).expect("in range")
                    });
                    check.assert_eq(
                        hist.total() - into_quasi,
                        bad_sum,
                        &format!("decomposition ({family}, n={n}, m={m})"),
                    );
                }
            }
        }
    }
    check.finish()
}

fn transfer_equivalence(config: &VerifyConfig) -> PropertyResult {
    let mut check = Check::new("transfer-equivalence");
    let top = config.transfer_n_max;
    for m in 3..=12usize {
        let target = quasi_complete_graph(m).expect("m >= 3");
        for n in 2..=top {
            let spec = FamilySpec::new(Family::Path, n);
            check.assert_eq(
                linear_hom_count(&target, n),
                hom_by_family(&spec, m, HomClass::All).expect("in range"),
                &format!("(path, n={n}, m={m})"),
            );
        }
        for n in 4..=top {
            let spec = FamilySpec::new(Family::Cycle, n);
            check.assert_eq(
                cyclic_hom_count(&target, n),
                hom_by_family(&spec, m, HomClass::All).expect("in range"),
                &format!("(cycle, n={n}, m={m})"),
            );
        }
        for n in 3..=top {
            let bw = FamilySpec::new(Family::BrokenWheel, n);
            check.assert_eq(
                hub_conditioned_count(&target, n, RimKind::Path),
                hom_by_family(&bw, m, HomClass::All).expect("in range"),
                &format!("(broken-wheel, n={n}, m={m})"),
            );
            let w = FamilySpec::new(Family::Wheel, n);
            check.assert_eq(
                hub_conditioned_count(&target, n, RimKind::Cycle),
                hom_by_family(&w, m, HomClass::All).expect("in range"),
                &format!("(wheel, n={n}, m={m})"),
            );
        }
    }
    check.finish()
}

fn corollaries() -> PropertyResult {
    let mut check = Check::new("corollaries");
    let zero = Count::from(0u32);
    for half in 2..=8usize {
        let n = 2 * half + 1;
        let spec = FamilySpec::new(Family::Cycle, n);
        check.assert_eq(
            zero.clone(),
            hom_by_family(&spec, 3, HomClass::All).expect("in range"),
            &format!("(cycle, n={n}, m=3)"),
        );
    }
    for half in 1..=8usize {
        let n = 2 * half + 1;
        let spec = FamilySpec::new(Family::BrokenWheel, n);
        check.assert_eq(
            zero.clone(),
            hom_by_family(&spec, 3, HomClass::All).expect("in range"),
            &format!("(broken-wheel, n={n}, m=3)"),
        );
    }
    for n in 3..=8usize {
        let spec = FamilySpec::new(Family::Wheel, n);
        check.assert_eq(
            zero.clone(),
            hom_by_family(&spec, 3, HomClass::All).expect("in range"),
            &format!("(wheel, n={n}, m=3)"),
        );
    }
    check.finish()
}

fn golden_polynomials() -> PropertyResult {
    let mut check = Check::new("golden-polynomials");
    let golden_interior: [&[i64]; 5] = [
        &[-2, 1],
        &[6, -5, 1],
        &[-10, 13, -6, 1],
        &[6, -17, 17, -7, 1],
        &[22, -15, -18, 22, -8, 1],
    ];
    let golden_boundary: [&[i64]; 5] = [
        &[-2, 1],
        &[2, -3, 1],
        &[2, 3, -4, 1],
        &[-14, 9, 5, -5, 1],
        &[34, -49, 16, 8, -6, 1],
    ];
    for (kind, golden) in [
        (GapKind::Interior, golden_interior),
        (GapKind::Boundary, golden_boundary),
    ] {
        for (idx, coeffs) in golden.iter().enumerate() {
            let i = idx + 1;
            let expected: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
            check.assert(
                gap_polynomial(kind, i).coeffs() == expected.as_slice(),
                &format!("expansion ({} series, i={i})", kind.series_name()),
            );
        }
        for i in 0..=30 {
            check.assert(
                gap_polynomial(kind, i) == gap_polynomial_rec(kind, i),
                &format!(
                    "definition vs recurrence ({} series, i={i})",
                    kind.series_name()
                ),
            );
        }
    }
    check.finish()
}

fn special_constants() -> PropertyResult {
    let mut check = Check::new("special-constants");
    let two = Count::from(2u32);
    let zero = Count::from(0u32);
    for m in 3..=8usize {
        for n in 2..=10usize {
            check.assert_eq(
                two.clone(),
                bad_term_path(n, m, n - 1).expect("in range"),
                &format!("path full-cluster term (n={n}, m={m})"),
            );
        }
        for n in 4..=10usize {
            let full = if n % 2 == 0 { two.clone() } else { zero.clone() };
            check.assert_eq(
                full,
                bad_term_cycle(n, m, n).expect("in range"),
                &format!("cycle full term (n={n}, m={m})"),
            );
            check.assert_eq(
                zero.clone(),
                bad_term_cycle(n, m, n - 1).expect("in range"),
                &format!("cycle near-full term (n={n}, m={m})"),
            );
        }
    }
    check.finish()
}

fn structural_zeros(config: &VerifyConfig) -> PropertyResult {
    let mut check = Check::new("structural-zeros");
    // Spoke parts vanish past the largest independent rim set: beyond the
    // bound the whole term reduces to its hub-free component.
    for n in 3..=config.n_max {
        for m in 4..=config.m_max {
            let bw_bound = n.div_ceil(2);
            for k in (bw_bound + 1)..=n.saturating_sub(1) {
                let whole = bad_term_broken_wheel(n, m, k).expect("in range");
                let hub_free = Count::from(m as u32 - 2)
                    * bad_term_path(n, m - 1, k).expect("m - 1 >= 3");
                check.assert_eq(
                    hub_free,
                    whole,
                    &format!("broken-wheel spoke bound (n={n}, m={m}, k={k})"),
                );
            }
            if n >= 4 {
                let w_bound = n / 2;
                for k in (w_bound + 1)..=n {
                    let whole = bad_term_wheel(n, m, k).expect("in range");
                    let hub_free = Count::from(m as u32 - 2)
                        * bad_term_cycle(n, m - 1, k).expect("m - 1 >= 3");
                    check.assert_eq(
                        hub_free,
                        whole,
                        &format!("wheel spoke bound (n={n}, m={m}, k={k})"),
                    );
                }
            }
        }
    }
    check.finish()
}

fn polynomial_fit() -> PropertyResult {
    let mut check = Check::new("polynomial-fit");
    for family in Family::ALL {
        for n in family.min_size()..=20 {
            let spec = FamilySpec::new(family, n);
            let vertices = spec.vertex_count();
            if vertices > 8 {
                break;
            }
            let sample = |m: usize| {
                BigInt::from(hom_by_family(&spec, m, HomClass::All).expect("in range"))
            };
            let values: Vec<BigInt> = (3..=vertices + 4).map(sample).collect();
            let predicted = extrapolate_integer_sequence(&values, vertices);
            check.assert(
                predicted.as_ref() == Some(&sample(vertices + 5)),
                &format!("prediction ({family}, n={n})"),
            );
            match fit_integer_polynomial(3, &values) {
                Some(poly) => check.assert(
                    poly.degree().unwrap_or(0) <= vertices,
                    &format!("fit degree ({family}, n={n})"),
                ),
                None => check.assert(false, &format!("integer-coefficient fit ({family}, n={n})")),
            }
        }
    }
    check.finish()
}

fn printed_reconciliation(
    config: &VerifyConfig,
    histograms: &mut HistogramCache,
) -> (PropertyResult, Vec<ErrataRow>) {
    let mut check = Check::new("printed-reconciliation");
    let mut errata = Vec::new();
    for (family, printed_family) in [
        (Family::Path, PrintedFamily::Path),
        (Family::Cycle, PrintedFamily::Cycle),
    ] {
        for n in config.grid(family) {
            let k_top = match family {
                Family::Path => n - 1,
                _ => n,
            };
            for m in 3..=config.m_max {
                let hist = histograms.get(family, n, m).clone();
                for k in 1..=k_top {
                    let printed = as_printed_term(printed_family, n, m, k).expect("in range");
                    let normative = bad_term_by_family(family, n, m, k).expect("in range");
                    let oracle = hist.get(k);
                    check.assert_eq(
                        oracle.clone(),
                        normative.clone(),
                        &format!("normative vs oracle ({family}, n={n}, m={m}, k={k})"),
                    );
                    errata.push(ErrataRow {
                        family,
                        n,
                        m,
                        k,
                        printed,
                        normative,
                        oracle,
                    });
                }
            }
        }
    }
    for n in 3..=config.n_max {
        let g = make_family(&FamilySpec::new(Family::QuasiComplete, n)).expect("n >= 3");
        for m in (n + 1)..=config.m_max {
            let printed = as_printed_quasi_complete_terms(n, m)
                .expect("m > n")
                .into_iter()
                .fold(BigRational::from_integer(BigInt::from(0)), |acc, t| {
                    acc + BigRational::from_integer(BigInt::from(t))
                });
            let normative = hom_quasi_complete(n, m, HomClass::All).expect("in range");
            let oracle = count_by_class(
                &g,
                &quasi_complete_graph(m).expect("m >= 3"),
                HomClass::All,
            );
            check.assert_eq(
                oracle.clone(),
                normative.clone(),
                &format!("normative vs oracle (quasi-complete, n={n}, m={m})"),
            );
            errata.push(ErrataRow {
                family: Family::QuasiComplete,
                n,
                m,
                k: 0,
                printed,
                normative,
                oracle,
            });
        }
    }
    // The displayed cycle sum bounds one summand by last < n - 2 where the
    // semantics reach last = n - 2; verify no realizable set is lost: every
    // candidate with first = 0, last = n - 2 violates the wrap rule.
    for n in 4..=config.n_max + 1 {
        for k in 2..=n.saturating_sub(2) {
            let mut all_rejected = true;
            for_each_subset(n, k, &mut |set| {
                if set[0] == 0
                    && set[k - 1] == n - 2
                    && set.windows(2).all(|w| w[1] - w[0] != 2)
                    && LowerVertexSet::new(set.to_vec(), Geometry::Cyclic { positions: n })
                        .is_some()
                {
                    all_rejected = false;
                }
            });
            check.assert(all_rejected, &format!("printed cycle bound (n={n}, k={k})"));
        }
    }
    (check.finish(), errata)
}

fn printed_form_consistency() -> PropertyResult {
    let mut check = Check::new("printed-form-consistency");
    for n in 3..=11usize {
        for m in (n + 1)..=12usize {
            let binomial_form = as_printed_quasi_complete_terms(n, m).expect("m > n");
            match as_printed_quasi_complete_factorial_terms(n, m).expect("m > n") {
                Some(factorial_form) => {
                    for (idx, (b, f)) in binomial_form.iter().zip(&factorial_form).enumerate() {
                        check.assert_eq(
                            f.clone(),
                            b.clone(),
                            &format!("term {} (n={n}, m={m})", idx + 1),
                        );
                    }
                }
                None => check.assert(
                    m == n + 1,
                    &format!("factorial form undefined only at m = n + 1 (n={n}, m={m})"),
                ),
            }
        }
    }
    check.finish()
}

fn for_each_subset(positions: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn recurse(positions: usize, k: usize, current: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if current.len() == k {
            f(current);
            return;
        }
        let start = current.last().map_or(0, |&l| l + 1);
        for idx in start..positions {
            current.push(idx);
            recurse(positions, k, current, f);
            current.pop();
        }
    }
    recurse(positions, k, &mut Vec::new(), f);
}
