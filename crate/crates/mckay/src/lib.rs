//! Does a finite group `G` admit a bijection `f` from its irreducible
//! characters of degree coprime to `p` onto those of the Sylow normalizer
//! `N_G(P)`, with `f(χ)(1)` dividing `χ(1)`?
//!
//! This crate decides that question for concrete groups. It contains a small
//! generic-group engine (permutation groups from generators, conjugacy
//! classes, Sylow subgroups, normalizers, exact character degrees over a
//! finite prime field), a combinatorial fast path for symmetric groups
//! (hook lengths and wreath-product degree formulas for the Sylow
//! normalizer), and a divisibility matcher built on unweighted bipartite
//! maximum matching that returns either an explicit bijection or a Hall
//! violator certifying that none exists.
//!
//! The [`checker`] module ties the pieces together behind one entry point,
//! [`checker::check_group`], and backs the `mckay` command-line tool.
//!
//! ```
//! use mckay::perm::{Family, GroupSpec};
//! use mckay::checker::{check_group, Verdict};
//!
//! let spec = GroupSpec::family("s5", Family::Symmetric(5));
//! let report = check_group(&spec, 5, 500_000).unwrap();
//! assert_eq!(report.verdict, Verdict::Bijection);
//! ```

pub mod chardeg;
pub mod checker;
pub mod matching;
pub mod perm;
pub mod structure;
pub mod symfast;

mod arith;

use thiserror::Error;

/// Errors produced by the group engine and the degree formulas.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cycle parse error: {0}")]
    CycleParse(String),
    #[error("point {point} repeated in cycle expression")]
    RepeatedPoint { point: u32 },
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: u32, degree: u32 },
    #[error("enumeration cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("partition bound {bound} exceeded by n = {n}")]
    PartitionBound { n: u32, bound: u32 },
    #[error("no fast normalizer shape for n = {n}, p = {p}: requires p <= n < p^2")]
    NoFastShape { n: u32, p: u64 },
    #[error("no admissible field prime below {bound}")]
    NoFieldPrime { bound: u64 },
    #[error("field prime {q} is not admissible for this group")]
    BadFieldPrime { q: u64 },
    #[error("degree recovery failed: {0}")]
    DegreeRecovery(String),
    #[error("degree multiset violates sum-of-squares identity")]
    SumSquares,
    #[error("zero entry in degree list")]
    ZeroDegree,
    #[error("brute force guard: list size {n} exceeds {max}")]
    BruteForceGuard { n: usize, max: usize },
    #[error("corpus entry {id:?}: {msg}")]
    Corpus { id: String, msg: String },
    #[error("declared order {declared} does not match computed order {computed}")]
    OrderMismatch { declared: String, computed: String },
    #[error("group spec error: {0}")]
    BadSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
