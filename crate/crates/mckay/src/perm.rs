//! Permutations on finite point sets and closure-based group generation.
//!
//! Everything downstream (conjugacy classes, Sylow subgroups, character
//! degrees) works on an explicitly enumerated [`ElementTable`], so this
//! module deliberately stops at plain closure enumeration: no stabilizer
//! chains, no membership testing without the full table.
//!
//! Conventions, fixed once for the whole crate:
//! * products act left-to-right: `a.compose(&b)` applies `a` first, then `b`;
//! * conjugation is `g^x = x^-1 g x`;
//! * points are 1-based in all text I/O and 0-based internally.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::{Error, Result};

mod ff;

/// Points are stored as `u16`, so no permutation may move more than this
/// many of them.
pub const MAX_DEGREE: usize = 1 << 16;

/// A permutation of the points `{1..n}`, stored as the image vector of the
/// 0-based points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if (img as usize) >= n || seen[img as usize] {
                return Err(Error::CycleParse(format!(
                    "image vector {:?} is not a bijection",
                    images
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` then `other`, left-to-right.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose: degree mismatch ({} vs {})",
            self.degree(),
            other.degree()
        );
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    /// `x^-1 * self * x`.
    pub fn conjugate_by(&self, x: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            x.degree(),
            "conjugate: degree mismatch ({} vs {})",
            self.degree(),
            x.degree()
        );
        let mut images = vec![0u16; self.degree()];
        // (x^-1 g x)(i) = x(g(x^-1(i))); filling via j = x^-1(i) avoids
        // materializing the inverse.
        for j in 0..self.degree() {
            images[x.images[j] as usize] = x.images[self.images[j] as usize];
        }
        Perm { images }
    }

    /// Multiplicative order, read off the cycle type.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            ord = arith::lcm(ord, len);
        }
        ord
    }

    /// Canonical disjoint-cycle string: cycles sorted by least moved point,
    /// each starting at its least point; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.apply(p);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Parses a product of disjoint cycles like `(1,2,3)(4,5)`; `()` is the
/// identity. Points are 1-based and must lie in `1..=degree`; points not
/// mentioned are fixed.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    if degree > MAX_DEGREE {
        return Err(Error::BadSpec(format!(
            "degree {degree} is above the {MAX_DEGREE}-point limit"
        )));
    }
    let mut images: Vec<u16> = (0..degree).map(|i| i as u16).collect();
    let mut used = vec![false; degree];
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::CycleParse("empty cycle expression".into()));
    }
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let Some(inner_start) = rest.strip_prefix('(') else {
            return Err(Error::CycleParse(format!("expected '(' at {rest:?}")));
        };
        let Some(close) = inner_start.find(')') else {
            return Err(Error::CycleParse("unbalanced parenthesis".into()));
        };
        let body = &inner_start[..close];
        rest = &inner_start[close + 1..];
        if body.is_empty() {
            continue; // "()" contributes nothing
        }
        let mut cycle = Vec::new();
        for tok in body.split(',') {
            let point: u32 = tok
                .parse()
                .map_err(|_| Error::CycleParse(format!("bad point {tok:?}")))?;
            if point == 0 || point as usize > degree {
                return Err(Error::PointOutOfRange {
                    point,
                    degree: degree as u32,
                });
            }
            let idx = (point - 1) as usize;
            if used[idx] {
                return Err(Error::RepeatedPoint { point });
            }
            used[idx] = true;
            cycle.push(idx);
        }
        if cycle.len() == 1 {
            continue; // a fixed point spelled out explicitly
        }
        for w in 0..cycle.len() {
            images[cycle[w]] = cycle[(w + 1) % cycle.len()] as u16;
        }
    }
    Ok(Perm { images })
}

/// Built-in group families that expand to a fixed generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Symmetric(u32),
    Alternating(u32),
    Cyclic(u32),
    /// Dihedral group given by its order `2m`, acting on the `m` vertices
    /// of the polygon.
    Dihedral(u32),
    Gl { n: u32, q: u32 },
    Sl { n: u32, q: u32 },
}

impl Family {
    /// Exact group order by closed formula, without enumeration.
    pub fn order(&self) -> Result<BigUint> {
        match *self {
            Family::Symmetric(n) => Ok(factorial(n)),
            Family::Alternating(n) => {
                if n < 2 {
                    Ok(BigUint::one())
                } else {
                    Ok(factorial(n) / 2u32)
                }
            }
            Family::Cyclic(n) => {
                if n == 0 {
                    Err(Error::BadFamily("cyclic(0)".into()))
                } else {
                    Ok(BigUint::from(n))
                }
            }
            Family::Dihedral(order) => {
                if order < 2 || order % 2 != 0 {
                    Err(Error::BadFamily(format!(
                        "dihedral order must be even and >= 2, got {order}"
                    )))
                } else {
                    Ok(BigUint::from(order))
                }
            }
            Family::Gl { n, q } | Family::Sl { n, q } => {
                if n == 0 {
                    return Err(Error::BadFamily("gl/sl with n = 0".into()));
                }
                ff::check_prime_power(q)?;
                // |GL(n,q)| = prod_{i<n} (q^n - q^i)
                let qn = BigUint::from(q).pow(n);
                let mut order = BigUint::one();
                let mut qi = BigUint::one();
                for _ in 0..n {
                    order *= &qn - &qi;
                    qi *= q;
                }
                if matches!(self, Family::Sl { .. }) {
                    order /= q - 1;
                }
                Ok(order)
            }
        }
    }

    /// The fixed generator list this family expands to.
    pub fn generators(&self) -> Result<Vec<Perm>> {
        let points = match *self {
            Family::Symmetric(n) | Family::Alternating(n) | Family::Cyclic(n) => n as usize,
            Family::Dihedral(order) => (order / 2) as usize,
            // The field modules guard their own point counts.
            Family::Gl { .. } | Family::Sl { .. } => 0,
        };
        if points > MAX_DEGREE {
            return Err(Error::BadFamily(format!(
                "{self} acts on {points} points, above the {MAX_DEGREE}-point limit"
            )));
        }
        match *self {
            Family::Symmetric(n) => {
                if n == 0 {
                    return Err(Error::BadFamily("symmetric(0)".into()));
                }
                if n == 1 {
                    return Ok(vec![Perm::identity(1)]);
                }
                let transposition = parse_cycles("(1,2)", n as usize)?;
                if n == 2 {
                    return Ok(vec![transposition]);
                }
                Ok(vec![transposition, full_cycle(1, n as usize, n as usize)])
            }
            Family::Alternating(n) => {
                if n == 0 {
                    return Err(Error::BadFamily("alternating(0)".into()));
                }
                if n < 3 {
                    return Ok(vec![Perm::identity(n as usize)]);
                }
                let three = parse_cycles("(1,2,3)", n as usize)?;
                if n == 3 {
                    return Ok(vec![three]);
                }
                let long = if n % 2 == 1 {
                    full_cycle(1, n as usize, n as usize)
                } else {
                    full_cycle(2, n as usize, n as usize)
                };
                Ok(vec![three, long])
            }
            Family::Cyclic(n) => {
                if n == 0 {
                    return Err(Error::BadFamily("cyclic(0)".into()));
                }
                if n == 1 {
                    return Ok(vec![Perm::identity(1)]);
                }
                Ok(vec![full_cycle(1, n as usize, n as usize)])
            }
            Family::Dihedral(order) => {
                if order < 2 || order % 2 != 0 {
                    return Err(Error::BadFamily(format!(
                        "dihedral order must be even and >= 2, got {order}"
                    )));
                }
                let m = (order / 2) as usize;
                match m {
                    1 => Ok(vec![parse_cycles("(1,2)", 2)?]),
                    // Order 4 is the Klein group; it needs 4 points to act
                    // faithfully.
                    2 => Ok(vec![parse_cycles("(1,2)", 4)?, parse_cycles("(3,4)", 4)?]),
                    _ => {
                        let rotation = full_cycle(1, m, m);
                        // Reflection fixing vertex 1: i <-> m + 2 - i.
                        let mut images: Vec<u16> = (0..m).map(|i| i as u16).collect();
                        for i in 1..m {
                            images[i] = (m - i) as u16;
                        }
                        Ok(vec![rotation, Perm { images }])
                    }
                }
            }
            Family::Gl { n, q } => ff::general_linear_generators(n, q, false),
            Family::Sl { n, q } => ff::general_linear_generators(n, q, true),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Symmetric(n) => write!(f, "symmetric:{n}"),
            Family::Alternating(n) => write!(f, "alternating:{n}"),
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Dihedral(order) => write!(f, "dihedral:{order}"),
            Family::Gl { n, q } => write!(f, "gl:{n},{q}"),
            Family::Sl { n, q } => write!(f, "sl:{n},{q}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `symmetric:7`, `alternating:5`, `cyclic:12`, `dihedral:8`,
    /// `gl:2,3`, `sl:2,3`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::BadFamily(format!("missing ':' in family {s:?}")))?;
        let one = |a: &str| -> Result<u32> {
            a.trim()
                .parse()
                .map_err(|_| Error::BadFamily(format!("bad argument {a:?}")))
        };
        match name {
            "symmetric" => Ok(Family::Symmetric(one(args)?)),
            "alternating" => Ok(Family::Alternating(one(args)?)),
            "cyclic" => Ok(Family::Cyclic(one(args)?)),
            "dihedral" => Ok(Family::Dihedral(one(args)?)),
            "gl" | "sl" => {
                let (a, b) = args
                    .split_once(',')
                    .ok_or_else(|| Error::BadFamily(format!("{name} needs n,q")))?;
                let (n, q) = (one(a)?, one(b)?);
                if name == "gl" {
                    Ok(Family::Gl { n, q })
                } else {
                    Ok(Family::Sl { n, q })
                }
            }
            _ => Err(Error::BadFamily(format!("unknown family {name:?}"))),
        }
    }
}

/// A group given either by explicit generators or by a named family,
/// together with a free-form label.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub id: String,
    pub source: GroupSource,
}

#[derive(Clone, Debug)]
pub enum GroupSource {
    Generators(Vec<Perm>),
    Family(Family),
}

impl GroupSpec {
    pub fn family(id: &str, family: Family) -> GroupSpec {
        GroupSpec {
            id: id.to_string(),
            source: GroupSource::Family(family),
        }
    }

    /// All generators must share one degree.
    pub fn from_generators(id: &str, generators: Vec<Perm>) -> Result<GroupSpec> {
        let Some(first) = generators.first() else {
            return Err(Error::BadSpec("empty generator list".into()));
        };
        if generators.iter().any(|g| g.degree() != first.degree()) {
            return Err(Error::BadSpec("generators of unequal degree".into()));
        }
        Ok(GroupSpec {
            id: id.to_string(),
            source: GroupSource::Generators(generators),
        })
    }

    pub fn generators(&self) -> Result<Vec<Perm>> {
        match &self.source {
            GroupSource::Generators(gens) => Ok(gens.clone()),
            GroupSource::Family(family) => family.generators(),
        }
    }
}

/// Fully enumerated group: every element, with a lookup index and
/// precomputed inverses. Element 0 is always the identity and the order
/// is the breadth-first closure order from the identity, so everything
/// derived from a table is deterministic.
pub struct ElementTable {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<u32>,
}

impl ElementTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.elements.len())
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    /// Index of `elements[a] * elements[b]` (left-to-right).
    pub fn compose_idx(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p]
    }
}

/// Enumerates the group generated by `spec`, refusing once more than `cap`
/// elements appear. Breadth-first from the identity, generators applied in
/// list order on the right.
pub fn generate_elements(spec: &GroupSpec, cap: usize) -> Result<ElementTable> {
    let generators = spec.generators()?;
    table_from_generators(&generators, cap)
}

pub fn table_from_generators(generators: &[Perm], cap: usize) -> Result<ElementTable> {
    let degree = generators.first().map(|g| g.degree()).unwrap_or(1);
    let identity = Perm::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut head = 0usize;
    while head < elements.len() {
        for g in generators {
            let w = elements[head].compose(g);
            if !index.contains_key(&w) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(w.clone(), elements.len());
                elements.push(w);
            }
        }
        head += 1;
    }
    let inverses = elements
        .iter()
        .map(|e| index[&e.inverse()] as u32)
        .collect();
    Ok(ElementTable {
        elements,
        index,
        inverses,
    })
}

/// Wraps an already-closed element set, kept in the given order. The first
/// element must be the identity; inverses are looked up and missing ones
/// panic, which catches non-closed input.
pub fn table_from_closed_elements(elements: Vec<Perm>) -> ElementTable {
    assert!(
        elements.first().map(Perm::is_identity).unwrap_or(false),
        "closed element set must start with the identity"
    );
    let index: HashMap<Perm, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    assert_eq!(index.len(), elements.len(), "duplicate elements");
    let inverses = elements
        .iter()
        .map(|e| index[&e.inverse()] as u32)
        .collect();
    ElementTable {
        elements,
        index,
        inverses,
    }
}

/// Exact group order: closed formula for families, enumeration otherwise.
pub fn group_order(spec: &GroupSpec, cap: usize) -> Result<BigUint> {
    match &spec.source {
        GroupSource::Family(family) => family.order(),
        GroupSource::Generators(_) => Ok(generate_elements(spec, cap)?.order()),
    }
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// The cycle `(from, from+1, ..., to)` on 1-based points, inside degree `n`.
fn full_cycle(from: usize, to: usize, n: usize) -> Perm {
    let mut images: Vec<u16> = (0..n).map(|i| i as u16).collect();
    for i in from..to {
        images[i - 1] = i as u16;
    }
    images[to - 1] = (from - 1) as u16;
    Perm { images }
}
