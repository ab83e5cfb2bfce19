//! Character degrees of large symmetric groups and of their Sylow
//! normalizers, computed combinatorially instead of by enumeration.
//!
//! Degrees of `S_n` come from the hook length formula over the partitions
//! of `n`. For a prime `p` with `p <= n < p^2`, the Sylow `p`-subgroup of
//! `S_n` is a direct product of `a = floor(n/p)` `p`-cycles, and its
//! normalizer is `(AGL(1,p) wr S_a) x S_b` with `b = n mod p`; its degrees
//! come from the wreath-product degree formula applied to the `p(p-1)`
//! affine maps, times the hook degrees of the `S_b` factor.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith;
use crate::chardeg::DegreeMultiset;
use crate::perm::factorial;
use crate::{Error, Result};

/// Refuse partition enumeration past this size unless overridden: the
/// partition count near 60 approaches a million and keeps growing
/// exponentially.
pub const DEFAULT_PARTITION_BOUND: u32 = 60;

/// All partitions of `n` in reverse-lexicographic order, `[n]` first and
/// the all-ones partition last. Parts are listed non-increasing.
pub fn partitions(n: u32) -> Result<Vec<Vec<u32>>> {
    partitions_with_bound(n, DEFAULT_PARTITION_BOUND)
}

pub fn partitions_with_bound(n: u32, bound: u32) -> Result<Vec<Vec<u32>>> {
    if n > bound {
        return Err(Error::PartitionBound { n, bound });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// Number of standard Young tableaux of the partition's shape, by the hook
/// length formula: `n! / prod of hook lengths`. This is the degree of the
/// irreducible character of `S_n` labeled by the partition.
pub fn hook_degree(partition: &[u32]) -> BigUint {
    let n: u32 = partition.iter().sum();
    // Conjugate partition: column lengths.
    let cols = partition.first().copied().unwrap_or(0) as usize;
    let mut conjugate = vec![0u32; cols];
    for &part in partition {
        for c in &mut conjugate[..part as usize] {
            *c += 1;
        }
    }
    let mut hooks = BigUint::one();
    for (i, &part) in partition.iter().enumerate() {
        for j in 0..part as usize {
            let hook = (part - j as u32 - 1) + (conjugate[j] - i as u32 - 1) + 1;
            hooks *= hook;
        }
    }
    factorial(n) / hooks
}

/// All character degrees of `S_n`, one per partition, sorted ascending.
pub fn hook_degrees(n: u32) -> Result<DegreeMultiset> {
    hook_degrees_with_bound(n, DEFAULT_PARTITION_BOUND)
}

pub fn hook_degrees_with_bound(n: u32, bound: u32) -> Result<DegreeMultiset> {
    let parts = partitions_with_bound(n, bound)?;
    let ds = DegreeMultiset::new(parts.iter().map(|p| hook_degree(p)).collect())?;
    if ds.sum_of_squares() != factorial(n) {
        return Err(Error::SumSquares);
    }
    Ok(ds)
}

/// Degrees of `S_n` that are not divisible by `p`, sorted ascending.
pub fn symmetric_pprime_degrees(n: u32, p: u64, bound: u32) -> Result<DegreeMultiset> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(hook_degrees_with_bound(n, bound)?.pprime_filter(p))
}

/// Degrees of the affine group AGL(1,p), the maps `x -> ax + b` over the
/// field of `p` elements: `p - 1` linear characters and one of degree
/// `p - 1`.
pub fn agl1_degrees(p: u64) -> Result<DegreeMultiset> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut degrees = vec![1u64; (p - 1) as usize];
    degrees.push(p - 1);
    DegreeMultiset::from_u64s(degrees)
}

/// Degrees of the wreath product `H wr S_k`, given the degrees of `H`.
///
/// Irreducibles are labeled by one partition per irreducible of `H` with
/// total size `k`; the label's degree is
/// `k! * prod_i d_i^(|s_i|) f(lambda_i) / |s_i|!` with `f` the hook degree.
pub fn wreath_degrees(base: &DegreeMultiset, k: u32) -> Result<DegreeMultiset> {
    // Partitions of every size up to k, reused across slots.
    let parts_by_size: Vec<Vec<Vec<u32>>> = (0..=k)
        .map(|s| partitions_with_bound(s, k))
        .collect::<Result<_>>()?;
    let hooks_by_size: Vec<Vec<BigUint>> = parts_by_size
        .iter()
        .map(|ps| ps.iter().map(|p| hook_degree(p)).collect())
        .collect();
    let mut out = Vec::new();
    let kfact = factorial(k);
    // Depth-first over the slots; numerator and denominator of the degree
    // are carried separately and divide exactly at the leaves.
    struct Frame<'a> {
        slots: &'a [BigUint],
        hooks: &'a [Vec<BigUint>],
        out: &'a mut Vec<BigUint>,
    }
    fn recurse(fr: &mut Frame<'_>, slot: usize, remaining: u32, num: BigUint, den: BigUint) {
        if slot == fr.slots.len() {
            if remaining == 0 {
                let (q, r) = num.div_rem(&den);
                debug_assert!(r.is_zero(), "wreath degree must be integral");
                fr.out.push(q);
            }
            return;
        }
        // The last slot must absorb whatever size is left.
        let sizes = if slot + 1 == fr.slots.len() {
            remaining..=remaining
        } else {
            0..=remaining
        };
        for s in sizes {
            let d_pow = fr.slots[slot].pow(s);
            let den_s = &den * factorial(s);
            for hook in &fr.hooks[s as usize] {
                recurse(
                    fr,
                    slot + 1,
                    remaining - s,
                    &num * &d_pow * hook,
                    den_s.clone(),
                );
            }
        }
    }
    drop(parts_by_size);
    let mut frame = Frame {
        slots: base.as_slice(),
        hooks: &hooks_by_size,
        out: &mut out,
    };
    if frame.slots.is_empty() {
        return Err(Error::BadSpec("wreath base has no degrees".into()));
    }
    recurse(&mut frame, 0, k, kfact, BigUint::one());
    DegreeMultiset::new(out)
}

/// Degrees of a direct product: all pairwise products.
pub fn product_degrees(a: &DegreeMultiset, b: &DegreeMultiset) -> Result<DegreeMultiset> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x * y);
        }
    }
    DegreeMultiset::new(out)
}

/// Shape of the Sylow `p`-normalizer in `S_n`, valid for `p <= n < p^2`:
/// `(AGL(1,p) wr S_blocks) x S_fixed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerShape {
    pub p: u64,
    /// Number of `p`-cycles in the Sylow subgroup: `floor(n/p)`.
    pub blocks: u32,
    /// Points outside every `p`-cycle: `n mod p`.
    pub fixed: u32,
}

impl NormalizerShape {
    pub fn order(&self) -> BigUint {
        let agl = BigUint::from(self.p) * (self.p - 1);
        agl.pow(self.blocks) * factorial(self.blocks) * factorial(self.fixed)
    }

    /// All character degrees of the normalizer.
    pub fn degrees(&self) -> Result<DegreeMultiset> {
        let wreath = wreath_degrees(&agl1_degrees(self.p)?, self.blocks)?;
        product_degrees(&wreath, &hook_degrees(self.fixed)?)
    }
}

impl fmt::Display for NormalizerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks > 1 {
            write!(f, "(AGL(1,{}) wr S_{})", self.p, self.blocks)?;
        } else {
            write!(f, "AGL(1,{})", self.p)?;
        }
        if self.fixed > 0 {
            write!(f, " x S_{}", self.fixed)?;
        }
        Ok(())
    }
}

/// The normalizer shape for `S_n` at `p`, requiring `p <= n < p^2`; the
/// block structure of the Sylow subgroup is a plain product of `p`-cycles
/// exactly in that range.
pub fn normalizer_shape(n: u32, p: u64) -> Result<NormalizerShape> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (n as u64) < p || (n as u64) >= p * p {
        return Err(Error::NoFastShape { n, p });
    }
    Ok(NormalizerShape {
        p,
        blocks: n / p as u32,
        fixed: n % p as u32,
    })
}

/// Degrees of the Sylow `p`-normalizer of `S_n` that are not divisible by
/// `p`, sorted ascending.
pub fn normalizer_pprime_degrees(n: u32, p: u64) -> Result<DegreeMultiset> {
    Ok(normalizer_shape(n, p)?.degrees()?.pprime_filter(p))
}
