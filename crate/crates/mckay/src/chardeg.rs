//! Complex irreducible character degrees of a fully enumerated group,
//! computed without ever writing down a character: the class-algebra
//! matrices are simultaneously diagonalized over a prime field `F_q`, and
//! each common eigenvector yields one degree through the orthogonality
//! relation.
//!
//! The field prime `q` must satisfy `q = 1 (mod exp(G))`, so that `F_q`
//! contains the needed roots of unity, and `q > 2 sqrt(|G|)`, so that a
//! degree is recoverable from its square mod `q`. Any such `q` gives the
//! same degrees; [`character_degrees`] picks the smallest, and
//! [`character_degrees_with_prime`] lets a caller cross-check with another.

mod modp;

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::perm::ElementTable;
use crate::structure::ConjugacyClasses;
use crate::{Error, Result};
use modp::Fq;

/// A multiset of character degrees, kept sorted ascending. Degrees are
/// arbitrary-precision: the fast symmetric-group path produces values far
/// beyond `u64`.
///
/// Serializes as a list of decimal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMultiset {
    degrees: Vec<BigUint>,
}

impl DegreeMultiset {
    /// Sorts the given degrees; zero entries are rejected.
    pub fn new(mut degrees: Vec<BigUint>) -> Result<DegreeMultiset> {
        if degrees.iter().any(Zero::is_zero) {
            return Err(Error::ZeroDegree);
        }
        degrees.sort_unstable();
        Ok(DegreeMultiset { degrees })
    }

    pub fn from_u64s(degrees: Vec<u64>) -> Result<DegreeMultiset> {
        DegreeMultiset::new(degrees.into_iter().map(BigUint::from).collect())
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigUint> {
        self.degrees.iter()
    }

    pub fn sum_of_squares(&self) -> BigUint {
        self.degrees.iter().map(|d| d * d).sum()
    }

    /// The sub-multiset of degrees not divisible by `p`.
    pub fn pprime_filter(&self, p: u64) -> DegreeMultiset {
        let p = BigUint::from(p);
        DegreeMultiset {
            degrees: self
                .degrees
                .iter()
                .filter(|d| !(*d % &p).is_zero())
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for DegreeMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.degrees.len()))?;
        for d in &self.degrees {
            seq.serialize_element(&d.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for DegreeMultiset {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<DegreeMultiset, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = DegreeMultiset;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of decimal degree strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<DegreeMultiset, A::Error> {
                let mut degrees = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let d = s
                        .parse::<BigUint>()
                        .map_err(|_| de::Error::custom(format!("bad degree {s:?}")))?;
                    degrees.push(d);
                }
                DegreeMultiset::new(degrees).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// Exponent of the group: least common multiple of element orders, read
/// off one representative per class.
fn exponent(table: &ElementTable, classes: &ConjugacyClasses) -> u64 {
    (0..classes.count()).fold(1, |acc, i| {
        arith::lcm(acc, table.element(classes.representative(i)).order())
    })
}

/// Smallest admissible field prime for a group of the given order and
/// exponent: `q = 1 (mod exponent)` and `q^2 > 4 * order`. Such a `q`
/// never divides the group order, because an order-`q` element would force
/// `q <= exponent < q`.
pub fn field_prime(order: u64, exponent: u64) -> Result<u64> {
    const LIMIT: u64 = 1 << 40;
    let mut q = exponent + 1;
    while q <= LIMIT {
        if (q as u128) * (q as u128) > 4 * order as u128 && arith::is_prime(q) {
            return Ok(q);
        }
        q += exponent;
    }
    Err(Error::NoFieldPrime { bound: LIMIT })
}

fn validate_field_prime(q: u64, order: u64, exponent: u64) -> Result<()> {
    let admissible = arith::is_prime(q)
        && (q - 1) % exponent == 0
        && (q as u128) * (q as u128) > 4 * order as u128;
    if admissible {
        Ok(())
    } else {
        Err(Error::BadFieldPrime { q })
    }
}

/// Character degrees of the group, sorted ascending.
///
/// Abelian groups short-circuit: as many classes as elements forces every
/// degree to 1. Everything else runs the class-algebra diagonalization
/// with the smallest admissible field prime.
pub fn character_degrees(table: &ElementTable) -> Result<DegreeMultiset> {
    let classes = ConjugacyClasses::compute(table);
    if classes.count() == table.len() {
        return DegreeMultiset::from_u64s(vec![1; table.len()]);
    }
    let q = field_prime(table.len() as u64, exponent(table, &classes))?;
    dixon(table, &classes, q)
}

/// Character degrees computed over a caller-chosen admissible prime. The
/// result never depends on the choice, which makes this the natural
/// cross-check hook; inadmissible primes are rejected.
pub fn character_degrees_with_prime(table: &ElementTable, q: u64) -> Result<DegreeMultiset> {
    let classes = ConjugacyClasses::compute(table);
    validate_field_prime(q, table.len() as u64, exponent(table, &classes))?;
    dixon(table, &classes, q)
}

/// A subspace of `F_q^k` as a reduced-row-echelon basis; `pivots` are the
/// pivot columns, strictly increasing. Coordinates of any member vector in
/// this basis can be read off at the pivot positions.
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn full(k: usize) -> Subspace {
        let rows = (0..k)
            .map(|i| {
                let mut r = vec![0u64; k];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            rows,
            pivots: (0..k).collect(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// The transposed class matrix `T_i`, acting on row vectors: entry `[l][j]`
/// counts the `x` in class `i` with `x^-1 g_l` in class `j`, for the fixed
/// representative `g_l` of class `l`.
fn class_matrix_transpose(
    table: &ElementTable,
    classes: &ConjugacyClasses,
    i: usize,
    f: Fq,
) -> Vec<Vec<u64>> {
    let k = classes.count();
    let mut t = vec![vec![0u64; k]; k];
    for l in 0..k {
        let g_l = classes.representative(l);
        let row = &mut t[l];
        for &x in classes.class(i) {
            let y = table.compose_idx(table.inverse_of(x as usize), g_l);
            let j = classes.class_of(y);
            row[j] = f.add(row[j], 1);
        }
    }
    t
}

/// Splits the common eigenspaces of the class matrices down to lines, then
/// recovers one degree per line. Matrices are taken in class index order
/// and built only while some subspace still has dimension above one.
fn dixon(table: &ElementTable, classes: &ConjugacyClasses, q: u64) -> Result<DegreeMultiset> {
    let k = classes.count();
    let f = Fq { q };
    let mut lines: Vec<Vec<u64>> = Vec::new();
    let mut active: Vec<Subspace> = Vec::new();
    if k == 1 {
        lines.push(vec![1]);
    } else {
        active.push(Subspace::full(k));
    }
    for i in 1..k {
        if active.is_empty() {
            break;
        }
        let t_i = class_matrix_transpose(table, classes, i, f);
        let mut still_active = Vec::new();
        for basis in active.drain(..) {
            split_subspace(basis, &t_i, f, &mut lines, &mut still_active)?;
        }
        active = still_active;
    }
    if !active.is_empty() {
        return Err(Error::DegreeRecovery(
            "class matrices left a common eigenspace of dimension above one".into(),
        ));
    }
    let mut degrees = Vec::with_capacity(k);
    for line in lines {
        degrees.push(degree_from_eigenvector(table, classes, &line, f)?);
    }
    let squares: u64 = degrees.iter().map(|&d| d * d).sum();
    if squares != table.len() as u64 {
        return Err(Error::SumSquares);
    }
    degrees.sort_unstable();
    DegreeMultiset::from_u64s(degrees)
}

/// Refines one invariant subspace along the eigenspaces of `t_i`,
/// depositing one-dimensional pieces into `lines` and the rest into
/// `active`.
fn split_subspace(
    basis: Subspace,
    t_i: &[Vec<u64>],
    f: Fq,
    lines: &mut Vec<Vec<u64>>,
    active: &mut Vec<Subspace>,
) -> Result<()> {
    let m = basis.dim();
    let k = basis.rows[0].len();
    // Restriction of t_i to the subspace: row s holds the coordinates of
    // (basis row s) * t_i, read off at the pivot columns.
    let mut restriction = vec![vec![0u64; m]; m];
    for (s, row) in basis.rows.iter().enumerate() {
        let mut image = vec![0u64; k];
        for (l, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 0..k {
                image[j] = f.add(image[j], f.mul(c, t_i[l][j]));
            }
        }
        for (t, &p) in basis.pivots.iter().enumerate() {
            restriction[s][t] = image[p];
        }
        #[cfg(debug_assertions)]
        {
            // The subspace is a sum of common eigenspaces, so it must be
            // invariant under every class matrix.
            let mut recombined = vec![0u64; k];
            for (t, brow) in basis.rows.iter().enumerate() {
                for j in 0..k {
                    recombined[j] = f.add(recombined[j], f.mul(restriction[s][t], brow[j]));
                }
            }
            debug_assert_eq!(recombined, image, "subspace not invariant");
        }
    }
    let cp = modp::charpoly(&restriction, f);
    let roots = modp::distinct_roots(&cp, f);
    if roots.len() <= 1 {
        // t_i does not separate anything here; pass the subspace along.
        if m == 1 {
            lines.push(basis.rows.into_iter().next().unwrap());
        } else {
            active.push(basis);
        }
        return Ok(());
    }
    let mut carved = 0;
    for lambda in roots {
        // Left eigenvectors of the restriction: right nullspace of its
        // transpose shifted by lambda.
        let mut shifted = vec![vec![0u64; m]; m];
        for r in 0..m {
            for c in 0..m {
                shifted[r][c] = restriction[c][r];
            }
            shifted[r][r] = f.sub(shifted[r][r], lambda);
        }
        let coeff_vectors = modp::nullspace(&shifted, f);
        if coeff_vectors.is_empty() {
            return Err(Error::DegreeRecovery(format!(
                "eigenvalue {lambda} has empty eigenspace"
            )));
        }
        let mut rows: Vec<Vec<u64>> = coeff_vectors
            .iter()
            .map(|x| {
                let mut v = vec![0u64; k];
                for (s, &c) in x.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for j in 0..k {
                        v[j] = f.add(v[j], f.mul(c, basis.rows[s][j]));
                    }
                }
                v
            })
            .collect();
        carved += rows.len();
        if rows.len() == 1 {
            lines.push(rows.pop().unwrap());
        } else {
            let pivots = modp::rref(&mut rows, f);
            active.push(Subspace { rows, pivots });
        }
    }
    if carved != m {
        return Err(Error::DegreeRecovery(
            "eigenspace dimensions do not add up".into(),
        ));
    }
    Ok(())
}

/// One degree from a one-dimensional common eigenspace: normalize the
/// eigenvector at the identity class, apply the orthogonality relation
/// `d^2 * sum_l w_l w_{lbar} / h_l = |G|`, and take the square root
/// below `q/2`.
fn degree_from_eigenvector(
    table: &ElementTable,
    classes: &ConjugacyClasses,
    line: &[u64],
    f: Fq,
) -> Result<u64> {
    if line[0] == 0 {
        return Err(Error::DegreeRecovery(
            "eigenvector vanishes at the identity class".into(),
        ));
    }
    let scale = f.inv(line[0]);
    let w: Vec<u64> = line.iter().map(|&v| f.mul(v, scale)).collect();
    let mut s = 0u64;
    for l in 0..classes.count() {
        let lbar = classes.inverse_class(table, l);
        let h_inv = f.inv(classes.size(l) as u64 % f.q);
        s = f.add(s, f.mul(f.mul(w[l], w[lbar]), h_inv));
    }
    if s == 0 {
        return Err(Error::DegreeRecovery("orthogonality sum vanished".into()));
    }
    let d_squared = f.mul(table.len() as u64 % f.q, f.inv(s));
    let root = arith::sqrt_mod(d_squared, f.q).ok_or_else(|| {
        Error::DegreeRecovery(format!("degree square {d_squared} has no root mod {}", f.q))
    })?;
    Ok(root.min(f.q - root))
}
