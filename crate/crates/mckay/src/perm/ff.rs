//! Just enough finite-field arithmetic to realize GL(n,q) and SL(n,q) as
//! permutation groups on the nonzero vectors of GF(q)^n.
//!
//! Fields stay tiny (q <= 512), so elements are dense integer codes and
//! multiplication is schoolbook polynomial arithmetic reduced by the first
//! irreducible polynomial in code order. Nothing here is performance
//! sensitive: generator construction happens once per group.

use crate::{Error, Result};

use super::Perm;

/// Upper bound on field size; keeps vector counts inside `u16` point range.
const MAX_Q: u32 = 512;

/// GF(p^k) with elements coded as integers in `0..q`: code
/// `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` stands for the polynomial
/// `c_0 + c_1 x + ...` in the canonical root.
struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients `m_0..m_{k-1}` of the monic modulus `x^k + m_{k-1} x^{k-1} + ... + m_0`.
    modulus: Vec<u32>,
}

impl Field {
    fn new(q: u32) -> Result<Field> {
        let (p, k) = check_prime_power(q)?;
        let modulus = if k == 1 {
            vec![]
        } else {
            smallest_irreducible(p, k)
        };
        Ok(Field { p, k, q, modulus })
    }

    fn digits(&self, code: u32) -> Vec<u32> {
        let mut c = code;
        (0..self.k)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    fn code(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.code(&sum)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return a * b % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; (2 * self.k - 1) as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce: x^k = -(m_{k-1} x^{k-1} + ... + m_0).
        for i in (self.k as usize..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let t = i - self.k as usize + j;
                prod[t] = (prod[t] + (self.p - m % self.p) % self.p * c) % self.p;
            }
        }
        self.code(&prod[..self.k as usize])
    }

    /// Multiplicative order of a nonzero element.
    fn mult_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Smallest code generating the multiplicative group.
    fn primitive_element(&self) -> u32 {
        (2..self.q)
            .chain(std::iter::once(1))
            .find(|&a| self.mult_order(a) == self.q - 1)
            .expect("multiplicative group of a finite field is cyclic")
    }
}

/// Validates `q` as a prime power within the supported range, returning `(p, k)`.
pub(super) fn check_prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 || q > MAX_Q {
        return Err(Error::BadFamily(format!(
            "field size {q} outside supported range 2..={MAX_Q}"
        )));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        p = q; // q itself is prime
    }
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::BadFamily(format!("field size {q} is not a prime power")));
    }
    Ok((p, k))
}

/// First irreducible monic polynomial of degree `k` over GF(p), scanning
/// constant-first codes upward. Trial division by all monic factors of
/// degree at most k/2 suffices at this scale.
fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let total = (p as u64).pow(k) as u32;
    'candidates: for code in 0..total {
        let mut cand: Vec<u32> = Vec::with_capacity(k as usize);
        let mut c = code;
        for _ in 0..k {
            cand.push(c % p);
            c /= p;
        }
        if cand[0] == 0 {
            continue; // divisible by x
        }
        for d in 1..=k / 2 {
            let divisors = (p as u64).pow(d) as u32;
            for dcode in 0..divisors {
                let mut div: Vec<u32> = Vec::with_capacity(d as usize);
                let mut c = dcode;
                for _ in 0..d {
                    div.push(c % p);
                    c /= p;
                }
                if poly_divides(p, &div, &cand, k) {
                    continue 'candidates;
                }
            }
        }
        return cand;
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Whether the monic polynomial with low coefficients `div` (degree
/// `div.len()`) divides the monic polynomial with low coefficients `cand`
/// (degree `k`) over GF(p).
fn poly_divides(p: u32, div: &[u32], cand: &[u32], k: u32) -> bool {
    let d = div.len();
    let mut rem: Vec<u32> = cand.to_vec();
    rem.push(1); // monic leading coefficient
    for i in (d..=k as usize).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for (j, &m) in div.iter().enumerate() {
            rem[i - d + j] = (rem[i - d + j] + (p - m % p) % p * c) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// Square matrix over the field, row-major codes.
struct Matrix {
    n: usize,
    entries: Vec<u32>,
}

impl Matrix {
    fn identity(n: usize) -> Matrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    /// Elementary transvection: identity plus `c` in row `i`, column `j`.
    fn transvection(n: usize, i: usize, j: usize, c: u32) -> Matrix {
        let mut m = Matrix::identity(n);
        m.entries[i * n + j] = c;
        m
    }

    fn diagonal_first(n: usize, c: u32) -> Matrix {
        let mut m = Matrix::identity(n);
        m.entries[0] = c;
        m
    }

    /// Permutation induced on nonzero row vectors by `v -> v * self`.
    /// Vectors are ranked lexicographically with the first coordinate most
    /// significant; rank 0 (the zero vector) is dropped.
    fn vector_permutation(&self, field: &Field) -> Perm {
        let n = self.n;
        let q = field.q as u64;
        let count = q.pow(n as u32) - 1;
        let mut images = vec![0u16; count as usize];
        let mut v = vec![0u32; n];
        for rank in 1..=count {
            // Next vector in lex order.
            let mut i = n;
            loop {
                i -= 1;
                v[i] += 1;
                if v[i] < field.q {
                    break;
                }
                v[i] = 0;
            }
            let mut image_rank = 0u64;
            for j in 0..n {
                let mut e = 0;
                for (i, &vi) in v.iter().enumerate() {
                    e = field.add(e, field.mul(vi, self.entries[i * n + j]));
                }
                image_rank = image_rank * q + e as u64;
            }
            images[(rank - 1) as usize] = (image_rank - 1) as u16;
        }
        Perm::from_images(images).expect("invertible matrix acts bijectively")
    }
}

/// Generators for GL(n,q) or SL(n,q) acting on the q^n - 1 nonzero vectors.
///
/// SL is generated by the transvections `E_ij(x^t)` for `i != j` and
/// `t < k`, since those span each root subgroup additively; GL adds the
/// diagonal `diag(g, 1, .., 1)` for a primitive `g` to cover every
/// determinant.
pub(super) fn general_linear_generators(n: u32, q: u32, special: bool) -> Result<Vec<Perm>> {
    if n == 0 {
        return Err(Error::BadFamily("gl/sl with n = 0".into()));
    }
    let field = Field::new(q)?;
    let points = (q as u64).checked_pow(n).map(|t| t - 1);
    match points {
        Some(c) if c <= u16::MAX as u64 + 1 => {}
        _ => {
            return Err(Error::BadFamily(format!(
                "gl/sl({n},{q}) acts on too many vectors for a permutation table"
            )))
        }
    }
    let n = n as usize;
    let mut gens = Vec::new();
    // Powers of the canonical root form a GF(p)-basis of GF(q).
    let mut basis = vec![1u32];
    for _ in 1..field.k {
        basis.push(field.mul(*basis.last().unwrap(), field.p));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for &c in &basis {
                gens.push(Matrix::transvection(n, i, j, c).vector_permutation(&field));
            }
        }
    }
    if !special && q > 2 {
        gens.push(Matrix::diagonal_first(n, field.primitive_element()).vector_permutation(&field));
    }
    if gens.is_empty() {
        // n = 1: SL is trivial, GL(1,2) likewise, but the action space is
        // still the q - 1 nonzero field elements.
        gens.push(Perm::identity((q - 1) as usize));
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(check_prime_power(2).unwrap(), (2, 1));
        assert_eq!(check_prime_power(9).unwrap(), (3, 2));
        assert_eq!(check_prime_power(512).unwrap(), (2, 9));
        assert!(check_prime_power(6).is_err());
        assert!(check_prime_power(1).is_err());
        assert!(check_prime_power(1024).is_err());
    }

    #[test]
    fn gf4_tables() {
        // GF(4) = GF(2)[x]/(x^2 + x + 1); codes 0,1,2,3 = 0,1,x,x+1.
        let f = Field::new(4).unwrap();
        assert_eq!(f.modulus, vec![1, 1]);
        assert_eq!(f.mul(2, 2), 3); // x^2 = x + 1
        assert_eq!(f.mul(2, 3), 1); // x(x+1) = x^2 + x = 1
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.primitive_element(), 2);
    }

    #[test]
    fn gf9_field_axioms() {
        let f = Field::new(9).unwrap();
        // Every nonzero element has an inverse and the group is cyclic of order 8.
        for a in 1..9 {
            assert!((1..9).any(|b| f.mul(a, b) == 1), "no inverse for {a}");
        }
        assert_eq!(f.mult_order(f.primitive_element()), 8);
        // Distributivity spot check across all triples.
        for a in 0..9 {
            for b in 0..9 {
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn prime_field_is_plain_modular() {
        let f = Field::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.add(6, 4), 3);
        assert_eq!(f.primitive_element(), 3);
    }

    #[test]
    fn gl1_acts_by_multiplication() {
        let gens = general_linear_generators(1, 5, false).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].degree(), 4);
        // Multiplication by the primitive element 2 on codes 1..4, 0-based:
        // 1 -> 2 -> 4 -> 3 -> 1 becomes points 0 -> 1 -> 3 -> 2 -> 0.
        assert_eq!(gens[0].cycle_string(), "(1,2,4,3)");
        let sl = general_linear_generators(1, 5, true).unwrap();
        assert!(sl[0].is_identity());
    }

    #[test]
    fn gl23_transvection_action() {
        // In GL(2,3), E_01(1) sends (1,0) -> (1,1): rank 3 -> rank 4.
        let gens = general_linear_generators(2, 3, true).unwrap();
        let e01 = &gens[0];
        assert_eq!(e01.apply(2), 3);
        // (0,1) is fixed by E_01(1).
        assert_eq!(e01.apply(0), 0);
    }

    #[test]
    fn degree_guard() {
        assert!(general_linear_generators(3, 64, false).is_err());
        assert!(general_linear_generators(2, 256, false).is_ok());
    }
}
