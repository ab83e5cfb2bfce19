//! End-to-end conjecture checks: route selection, report assembly, the
//! symmetric-group survey table, and batch runs over a corpus.
//!
//! For a group `G` and prime `p` the routes are tried in order:
//!
//! 1. `trivial`: `p` does not divide `|G|`, so the Sylow `p`-subgroup is
//!    trivial, its normalizer is `G` itself, and the identity map is the
//!    required bijection.
//! 2. `symfast`: `G = S_n` with `p <= n < p^2`. Hook lengths give the group
//!    side and the wreath-product formula gives the normalizer side; nothing
//!    is enumerated.
//! 3. `generic`: `|G|` fits under the element cap, so the group is
//!    enumerated and both degree lists come from the generic engine.
//! 4. Otherwise the check is out of scale at this cap.
//!
//! Every bijection and every violator is re-verified against the
//! divisibility graph before its report is returned.

use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith;
use crate::chardeg::{self, DegreeMultiset};
use crate::matching::{self, MatchingResult};
use crate::perm::{self, ElementTable, Family, GroupSource, GroupSpec};
use crate::structure;
use crate::symfast;
use crate::{Error, Result};

mod corpus;

pub use corpus::{parse_corpus, CorpusEntry};

/// Default element cap: groups that cannot be enumerated within this many
/// elements are reported as out of scale rather than attempted.
pub const DEFAULT_CAP: usize = 500_000;

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Trivial,
    Generic,
    Symfast,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Trivial => "trivial",
            Route::Generic => "generic",
            Route::Symfast => "symfast",
        }
    }
}

/// Outcome of one `(group, prime)` check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Bijection,
    NoBijection,
    CountMismatch,
    OutOfScale,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Bijection => "bijection",
            Verdict::NoBijection => "no_bijection",
            Verdict::CountMismatch => "count_mismatch",
            Verdict::OutOfScale => "out_of_scale",
        }
    }
}

/// Wall-clock milliseconds per phase. Kept out of the serialized report so
/// that repeated runs emit byte-identical JSON.
#[derive(Clone, Copy, Debug, Default)]
pub struct Timings {
    pub enumerate_ms: u128,
    pub sylow_ms: u128,
    pub normalizer_ms: u128,
    pub degrees_ms: u128,
    pub matching_ms: u128,
    pub total_ms: u128,
}

fn serialize_order<S: Serializer>(order: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    // `skip_serializing_if` has already filtered out `None`.
    s.serialize_str(&order.as_ref().expect("skipped when absent").to_string())
}

/// Result of [`check_group`]. Serializes with a fixed key order and decimal
/// strings for all unbounded integers.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub group_id: String,
    /// Absent only when the group is generator-given and too large to
    /// enumerate under the cap.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_order")]
    pub group_order: Option<BigUint>,
    pub prime: u64,
    /// Absent when the verdict is `out_of_scale`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_degrees: Option<DegreeMultiset>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_degrees: Option<DegreeMultiset>,
    pub verdict: Verdict,
    /// Pairs `[χ(1), f(χ)(1)]` in A-order, present iff the verdict is
    /// `bijection` and the degree lists were computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bijection: Option<Vec<[String; 2]>>,
    /// Sub-multiset `S` of the A-degrees with `|N(S)| = |S| - 1`, present
    /// iff the verdict is `no_bijection`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violator: Option<DegreeMultiset>,
    #[serde(skip)]
    pub timings: Timings,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group {}  ", self.group_id)?;
        match &self.group_order {
            Some(o) => write!(f, "order {o}  ")?,
            None => write!(f, "order unknown at this cap  ")?,
        }
        write!(f, "prime {}", self.prime)?;
        if let Some(route) = &self.route {
            write!(f, "  route {}", route.as_str())?;
        }
        writeln!(f)?;
        if let Some(a) = &self.a_degrees {
            writeln!(f, "A ({} degrees): {a}", a.len())?;
        }
        if let Some(b) = &self.b_degrees {
            writeln!(f, "B ({} degrees): {b}", b.len())?;
        }
        writeln!(f, "verdict: {}", self.verdict.as_str())?;
        if let Some(pairs) = &self.bijection {
            write!(f, "bijection:")?;
            for (i, [x, y]) in pairs.iter().enumerate() {
                if i == 24 {
                    write!(f, " ... ({} more)", pairs.len() - i)?;
                    break;
                }
                write!(f, " {x}->{y}")?;
            }
            writeln!(f)?;
        }
        if let Some(v) = &self.violator {
            writeln!(f, "violator: {v}")?;
        }
        let t = &self.timings;
        write!(
            f,
            "time: {}ms (enumerate {}, sylow {}, normalizer {}, degrees {}, match {})",
            t.total_ms, t.enumerate_ms, t.sylow_ms, t.normalizer_ms, t.degrees_ms, t.matching_ms
        )
    }
}

/// Degree lists from the route that applies, before any matching. Distinct
/// from [`check_group`] in one way: for `S_n` within the partition bound the
/// group side comes from hook lengths even when the check itself would be
/// out of scale, so the A-list of huge symmetric groups is still available.
#[derive(Clone, Debug)]
pub struct DegreeLists {
    pub group_id: String,
    pub group_order: Option<BigUint>,
    pub prime: u64,
    pub route: Option<Route>,
    pub a: Option<DegreeMultiset>,
    pub b: Option<DegreeMultiset>,
}

impl fmt::Display for DegreeLists {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group {}  ", self.group_id)?;
        match &self.group_order {
            Some(o) => write!(f, "order {o}  ")?,
            None => write!(f, "order unknown at this cap  ")?,
        }
        write!(f, "prime {}", self.prime)?;
        if let Some(route) = &self.route {
            write!(f, "  route {}", route.as_str())?;
        }
        writeln!(f)?;
        match &self.a {
            Some(a) => writeln!(f, "A ({} degrees): {a}", a.len())?,
            None => writeln!(f, "A: unavailable at this cap")?,
        }
        match &self.b {
            Some(b) => write!(f, "B ({} degrees): {b}", b.len()),
            None => write!(f, "B: unavailable at this cap"),
        }
    }
}

/// Degree lists gathered by the route that applied, before matching.
enum Routed {
    /// `p` does not divide the order; both sides share one list when it
    /// was computable at this scale.
    Trivial { both: Option<DegreeMultiset> },
    Symfast { a: DegreeMultiset, b: DegreeMultiset },
    Generic { a: DegreeMultiset, b: DegreeMultiset },
    OutOfScale,
}

fn ms(t0: Instant) -> u128 {
    t0.elapsed().as_millis()
}

/// Route selection and degree computation shared by [`check_group`] and
/// [`degree_lists`].
fn route_degrees(
    spec: &GroupSpec,
    p: u64,
    cap: usize,
    t: &mut Timings,
) -> Result<(Option<BigUint>, Routed)> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let family = match &spec.source {
        GroupSource::Family(f) => Some(f.clone()),
        GroupSource::Generators(_) => None,
    };

    // The order comes for free for families; raw generators must be closed.
    let mut table: Option<ElementTable> = None;
    let order: Option<BigUint> = match &family {
        Some(f) => Some(f.order()?),
        None => {
            let t0 = Instant::now();
            match perm::generate_elements(spec, cap) {
                Ok(tab) => {
                    t.enumerate_ms += ms(t0);
                    let o = tab.order();
                    table = Some(tab);
                    Some(o)
                }
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e),
            }
        }
    };

    if let Some(o) = &order {
        if !(o % p).is_zero() {
            let both = trivial_lists(spec, &family, table, o, cap, t)?;
            return Ok((order, Routed::Trivial { both }));
        }
    }

    if let Some(Family::Symmetric(n)) = family {
        // `n <= bound` keeps `p*p` small; `p <= n` was settled above since
        // `p` divides `n!`.
        if n <= symfast::DEFAULT_PARTITION_BOUND && p <= n as u64 && (n as u64) < p * p {
            let t0 = Instant::now();
            let a = symfast::symmetric_pprime_degrees(n, p, symfast::DEFAULT_PARTITION_BOUND)?;
            let b = symfast::normalizer_pprime_degrees(n, p)?;
            t.degrees_ms += ms(t0);
            return Ok((order, Routed::Symfast { a, b }));
        }
    }

    let within_cap = match &order {
        Some(o) => *o <= BigUint::from(cap),
        None => false,
    };
    if !within_cap {
        return Ok((order, Routed::OutOfScale));
    }
    let tab = match table {
        Some(tab) => tab,
        None => {
            let t0 = Instant::now();
            let tab = perm::generate_elements(spec, cap)?;
            t.enumerate_ms += ms(t0);
            tab
        }
    };

    let t0 = Instant::now();
    let a = chardeg::character_degrees(&tab)?.pprime_filter(p);
    t.degrees_ms += ms(t0);

    let t0 = Instant::now();
    let sylow = structure::sylow_subgroup(&tab, p)?;
    t.sylow_ms += ms(t0);

    let t0 = Instant::now();
    let normalizer = structure::normalizer(&tab, &sylow);
    let ntab = normalizer.to_table(&tab);
    t.normalizer_ms += ms(t0);

    let t0 = Instant::now();
    let b = chardeg::character_degrees(&ntab)?.pprime_filter(p);
    t.degrees_ms += ms(t0);

    Ok((order, Routed::Generic { a, b }))
}

/// Full degree list for the trivial route, where `A = B = Irr(G)` degrees.
/// `None` when the group is too large to enumerate and has no hook-length
/// shortcut; the verdict does not depend on it.
fn trivial_lists(
    spec: &GroupSpec,
    family: &Option<Family>,
    table: Option<ElementTable>,
    order: &BigUint,
    cap: usize,
    t: &mut Timings,
) -> Result<Option<DegreeMultiset>> {
    if let Some(Family::Symmetric(n)) = family {
        if *n <= symfast::DEFAULT_PARTITION_BOUND {
            let t0 = Instant::now();
            let degrees = symfast::hook_degrees(*n)?;
            t.degrees_ms += ms(t0);
            return Ok(Some(degrees));
        }
        return Ok(None);
    }
    if *order > BigUint::from(cap) {
        return Ok(None);
    }
    let tab = match table {
        Some(tab) => tab,
        None => {
            let t0 = Instant::now();
            let tab = perm::generate_elements(spec, cap)?;
            t.enumerate_ms += ms(t0);
            tab
        }
    };
    let t0 = Instant::now();
    let degrees = chardeg::character_degrees(&tab)?;
    t.degrees_ms += ms(t0);
    Ok(Some(degrees))
}

/// Match the two lists and record verdict and evidence on the report.
/// Panics if the matcher ever produces a result its own verifier rejects.
fn finish_match(report: &mut CheckReport, a: DegreeMultiset, b: DegreeMultiset, t: &mut Timings) {
    let t0 = Instant::now();
    let graph = matching::build_graph(&a, &b);
    let result = matching::kuhn_match(&graph);
    assert!(
        matching::verify_result(&graph, &result),
        "matching result failed verification"
    );
    match result {
        MatchingResult::Bijection { assignment } => {
            report.verdict = Verdict::Bijection;
            report.bijection = Some(
                assignment
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| [a.as_slice()[i].to_string(), b.as_slice()[j].to_string()])
                    .collect(),
            );
        }
        MatchingResult::Violator { indices } => {
            report.verdict = Verdict::NoBijection;
            let degrees = indices.iter().map(|&i| a.as_slice()[i].clone()).collect();
            report.violator =
                Some(DegreeMultiset::new(degrees).expect("character degrees are nonzero"));
        }
        MatchingResult::CountMismatch { .. } => {
            report.verdict = Verdict::CountMismatch;
        }
    }
    t.matching_ms += ms(t0);
    report.a_degrees = Some(a);
    report.b_degrees = Some(b);
}

/// Decide whether the `p'`-degrees of `G` admit a divisibility bijection
/// onto the `p'`-degrees of its Sylow `p`-normalizer.
///
/// `cap` bounds enumeration: a group that cannot be listed within `cap`
/// elements (and has no closed-form route) gets verdict `out_of_scale`
/// rather than an error.
pub fn check_group(spec: &GroupSpec, p: u64, cap: usize) -> Result<CheckReport> {
    let t0 = Instant::now();
    let mut timings = Timings::default();
    let (order, routed) = route_degrees(spec, p, cap, &mut timings)?;
    let mut report = CheckReport {
        group_id: spec.id.clone(),
        group_order: order,
        prime: p,
        route: None,
        a_degrees: None,
        b_degrees: None,
        verdict: Verdict::OutOfScale,
        bijection: None,
        violator: None,
        timings: Timings::default(),
    };
    match routed {
        Routed::Trivial { both } => {
            report.route = Some(Route::Trivial);
            match both {
                Some(degrees) => finish_match(&mut report, degrees.clone(), degrees, &mut timings),
                // N = G, so the identity map on Irr(G) settles the verdict
                // even when the list itself is beyond reach.
                None => report.verdict = Verdict::Bijection,
            }
        }
        Routed::Symfast { a, b } => {
            report.route = Some(Route::Symfast);
            finish_match(&mut report, a, b, &mut timings);
        }
        Routed::Generic { a, b } => {
            report.route = Some(Route::Generic);
            finish_match(&mut report, a, b, &mut timings);
        }
        Routed::OutOfScale => {}
    }
    timings.total_ms = ms(t0);
    report.timings = timings;
    Ok(report)
}

/// The degree lists [`check_group`] would match, without matching them.
pub fn degree_lists(spec: &GroupSpec, p: u64, cap: usize) -> Result<DegreeLists> {
    let mut timings = Timings::default();
    let (order, routed) = route_degrees(spec, p, cap, &mut timings)?;
    let (route, a, b) = match routed {
        Routed::Trivial { both } => (Some(Route::Trivial), both.clone(), both),
        Routed::Symfast { a, b } => (Some(Route::Symfast), Some(a), Some(b)),
        Routed::Generic { a, b } => (Some(Route::Generic), Some(a), Some(b)),
        Routed::OutOfScale => {
            // Hook lengths reach the group side of any S_n in bound even
            // when the normalizer side does not have a fast shape.
            let a = match &spec.source {
                GroupSource::Family(Family::Symmetric(n))
                    if *n <= symfast::DEFAULT_PARTITION_BOUND =>
                {
                    Some(symfast::symmetric_pprime_degrees(
                        *n,
                        p,
                        symfast::DEFAULT_PARTITION_BOUND,
                    )?)
                }
                _ => None,
            };
            (None, a, None)
        }
    };
    Ok(DegreeLists {
        group_id: spec.id.clone(),
        group_order: order,
        prime: p,
        route,
        a,
        b,
    })
}

/// One cell of [`SymmetricTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
}

/// Verdict matrix for symmetric groups: rows are primes, columns are `S_q`
/// for the same primes `q` up to `max_n`.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricTable {
    pub primes: Vec<u64>,
    pub columns: Vec<u32>,
    pub cells: Vec<Vec<TableCell>>,
}

impl fmt::Display for SymmetricTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |cell: &TableCell| -> &'static str {
            match (cell.verdict, cell.route) {
                (Verdict::Bijection, Some(Route::Trivial)) => "yes*",
                (Verdict::Bijection, _) => "yes",
                (Verdict::NoBijection, _) => "NO",
                (Verdict::CountMismatch, _) => "MISMATCH",
                (Verdict::OutOfScale, _) => "-",
            }
        };
        let head_width = 1 + self
            .primes
            .iter()
            .map(|p| format!("p={p}").len())
            .max()
            .unwrap_or(1);
        let mut widths = Vec::new();
        for (j, n) in self.columns.iter().enumerate() {
            let mut w = format!("S{n}").len();
            for row in &self.cells {
                w = w.max(label(&row[j]).len());
            }
            widths.push(w + 2);
        }
        write!(f, "{:head_width$}", "")?;
        for (j, n) in self.columns.iter().enumerate() {
            write!(f, "{:>width$}", format!("S{n}"), width = widths[j])?;
        }
        writeln!(f)?;
        for (i, p) in self.primes.iter().enumerate() {
            write!(f, "{:head_width$}", format!("p={p}"))?;
            for j in 0..self.columns.len() {
                write!(f, "{:>width$}", label(&self.cells[i][j]), width = widths[j])?;
            }
            writeln!(f)?;
        }
        write!(f, "yes* = trivial (p does not divide n!), - = out of scale")
    }
}

/// Check `S_q` against every prime in `primes`, for the `q` in `primes`
/// up to `max_n`. Primes are deduplicated and sorted.
pub fn symmetric_table(primes: &[u64], max_n: u32, cap: usize) -> Result<SymmetricTable> {
    let mut ps = primes.to_vec();
    ps.sort_unstable();
    ps.dedup();
    if ps.is_empty() {
        return Err(Error::BadSpec("empty prime list".into()));
    }
    for &p in &ps {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let columns: Vec<u32> = ps
        .iter()
        .filter(|&&q| q <= max_n as u64)
        .map(|&q| q as u32)
        .collect();
    let mut cells = Vec::with_capacity(ps.len());
    for &p in &ps {
        let mut row = Vec::with_capacity(columns.len());
        for &n in &columns {
            let spec = GroupSpec::family(&format!("s{n}"), Family::Symmetric(n));
            let report = check_group(&spec, p, cap)?;
            row.push(TableCell {
                verdict: report.verdict,
                route: report.route,
            });
        }
        cells.push(row);
    }
    Ok(SymmetricTable {
        primes: ps,
        columns,
        cells,
    })
}

/// Which primes a batch run checks per group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    /// Every prime dividing the group order. Orders whose factors cannot
    /// be recovered by trial division up to 10^4 reject the entry.
    AllDividing,
    List(Vec<u64>),
}

/// Result of one corpus entry: its reports, or what went wrong with it.
#[derive(Clone, Debug)]
pub struct EntryOutcome {
    /// 1-based line in the corpus text.
    pub line: usize,
    /// Absent when the line did not even parse.
    pub id: Option<String>,
    pub solvable: Option<bool>,
    pub reports: Vec<CheckReport>,
    pub error: Option<String>,
}

/// Verdict counts over a whole batch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub entries: usize,
    pub failed_entries: usize,
    pub checks: usize,
    pub bijection: usize,
    pub no_bijection: usize,
    pub count_mismatch: usize,
    pub out_of_scale: usize,
    /// `no_bijection` on a solvable-flagged group, or any count mismatch.
    pub counterexamples: usize,
}

#[derive(Clone, Debug)]
pub struct BatchReport {
    pub outcomes: Vec<EntryOutcome>,
    pub summary: BatchSummary,
}

impl BatchReport {
    pub fn counterexample_found(&self) -> bool {
        self.summary.counterexamples > 0
    }

    pub fn had_errors(&self) -> bool {
        self.summary.failed_entries > 0
    }
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} entries ({} failed), {} checks: {} bijection, {} no_bijection, \
             {} count_mismatch, {} out_of_scale, {} counterexample candidates",
            self.entries,
            self.failed_entries,
            self.checks,
            self.bijection,
            self.no_bijection,
            self.count_mismatch,
            self.out_of_scale,
            self.counterexamples
        )
    }
}

/// Run every entry of a corpus against the selected primes. Entries are
/// checked concurrently (`jobs` threads, library default when `None`) but
/// outcomes keep corpus order. Per-entry failures never abort the batch.
pub fn batch(
    corpus_text: &str,
    selection: &PrimeSelection,
    cap: usize,
    jobs: Option<usize>,
) -> Result<BatchReport> {
    if let PrimeSelection::List(ps) = selection {
        for &p in ps {
            if !arith::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
    }
    let parsed = parse_corpus(corpus_text);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::BadSpec(format!("thread pool: {e}")))?;
    let outcomes: Vec<EntryOutcome> = pool.install(|| {
        use rayon::prelude::*;
        parsed
            .par_iter()
            .map(|(line, entry)| process_entry(*line, entry, selection, cap))
            .collect()
    });
    let mut summary = BatchSummary {
        entries: outcomes.len(),
        ..BatchSummary::default()
    };
    for outcome in &outcomes {
        if outcome.error.is_some() {
            summary.failed_entries += 1;
        }
        for report in &outcome.reports {
            summary.checks += 1;
            match report.verdict {
                Verdict::Bijection => summary.bijection += 1,
                Verdict::NoBijection => {
                    summary.no_bijection += 1;
                    if outcome.solvable == Some(true) {
                        summary.counterexamples += 1;
                    }
                }
                Verdict::CountMismatch => {
                    summary.count_mismatch += 1;
                    summary.counterexamples += 1;
                }
                Verdict::OutOfScale => summary.out_of_scale += 1,
            }
        }
    }
    Ok(BatchReport { outcomes, summary })
}

fn process_entry(
    line: usize,
    parsed: &Result<CorpusEntry>,
    selection: &PrimeSelection,
    cap: usize,
) -> EntryOutcome {
    let entry = match parsed {
        Ok(entry) => entry,
        Err(e) => {
            return EntryOutcome {
                line,
                id: None,
                solvable: None,
                reports: Vec::new(),
                error: Some(e.to_string()),
            }
        }
    };
    let mut outcome = EntryOutcome {
        line,
        id: Some(entry.id.clone()),
        solvable: entry.solvable,
        reports: Vec::new(),
        error: None,
    };
    let spec = match entry.to_spec() {
        Ok(spec) => spec,
        Err(e) => {
            outcome.error = Some(e.to_string());
            return outcome;
        }
    };
    let order = match perm::group_order(&spec, cap) {
        Ok(o) => Some(o),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => {
            outcome.error = Some(e.to_string());
            return outcome;
        }
    };
    // A declared order is checked whenever the real one is computable.
    if let Some(o) = &order {
        if let Err(e) = entry.verify_order(o) {
            outcome.error = Some(e.to_string());
            return outcome;
        }
    }
    let primes: Vec<u64> = match selection {
        PrimeSelection::List(ps) => ps.clone(),
        PrimeSelection::AllDividing => {
            let Some(o) = &order else {
                outcome.error =
                    Some("order unknown at this cap; give an explicit prime list".into());
                return outcome;
            };
            match dividing_primes(o) {
                Some(ps) => ps,
                None => {
                    outcome.error = Some(
                        "order has a prime factor above 10000; give an explicit prime list".into(),
                    );
                    return outcome;
                }
            }
        }
    };
    for &p in &primes {
        match check_group(&spec, p, cap) {
            Ok(report) => outcome.reports.push(report),
            Err(e) => {
                outcome.error = Some(format!("prime {p}: {e}"));
                return outcome;
            }
        }
    }
    outcome
}

/// Distinct primes dividing `order`, by trial division up to 10^4.
/// `None` when a larger factor remains.
fn dividing_primes(order: &BigUint) -> Option<Vec<u64>> {
    if let Some(n) = order.to_u64() {
        return Some(arith::prime_divisors(n));
    }
    let mut rest = order.clone();
    let mut out = Vec::new();
    for p in 2u64..=10_000 {
        if !arith::is_prime(p) {
            continue;
        }
        if (&rest % p).is_zero() {
            out.push(p);
            while (&rest % p).is_zero() {
                rest /= p;
            }
        }
    }
    if rest == BigUint::from(1u32) {
        Some(out)
    } else {
        None
    }
}
