//! Dense linear algebra over a prime field, sized for class-algebra
//! matrices: a few hundred rows at most, entries in `u64`.
//!
//! Everything is deterministic. Pivots are chosen first-nonzero in scan
//! order, polynomial splitting tries shifts `c = 0, 1, 2, ...` in order,
//! and root lists come back sorted.

/// The prime field `F_q`. Products go through `u128`, so any prime below
/// `2^63` is safe.
#[derive(Clone, Copy)]
pub struct Fq {
    pub q: u64,
}

impl Fq {
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.q as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; `a` must be nonzero mod `q`.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.q != 0);
        self.pow(a, self.q - 2)
    }
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each surviving row, in row order (strictly
/// increasing).
pub fn rref(rows: &mut Vec<Vec<u64>>, f: Fq) -> Vec<usize> {
    let width = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(src) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, src);
        let inv = f.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..width {
                    let t = f.mul(factor, rows[rank][c]);
                    rows[r][c] = f.sub(rows[r][c], t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Basis of the right nullspace `{x : Mx = 0}`, one vector per free column,
/// in ascending free-column order.
pub fn nullspace(matrix: &[Vec<u64>], f: Fq) -> Vec<Vec<u64>> {
    let width = matrix.first().map(Vec::len).unwrap_or(0);
    let mut rows = matrix.to_vec();
    let pivots = rref(&mut rows, f);
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for col in 0..width {
        if next_pivot < pivots.len() && pivots[next_pivot] == col {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![0u64; width];
        v[col] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(rows[r][col]);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial, monic, coefficients from constant to leading.
/// Similarity-reduces to upper Hessenberg form, then applies the
/// division-free leading-minor recurrence.
pub fn charpoly(matrix: &[Vec<u64>], f: Fq) -> Vec<u64> {
    let n = matrix.len();
    let mut h = matrix.to_vec();
    for col in 0..n.saturating_sub(2) {
        let Some(pivot) = (col + 1..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if pivot != col + 1 {
            h.swap(pivot, col + 1);
            for row in h.iter_mut() {
                row.swap(pivot, col + 1);
            }
        }
        let inv = f.inv(h[col + 1][col]);
        for r in col + 2..n {
            let factor = f.mul(h[r][col], inv);
            if factor == 0 {
                continue;
            }
            for c in 0..n {
                let t = f.mul(factor, h[col + 1][c]);
                h[r][c] = f.sub(h[r][c], t);
            }
            // Compensating column operation keeps the transform a
            // similarity.
            for row in h.iter_mut() {
                let t = f.mul(factor, row[r]);
                row[col + 1] = f.add(row[col + 1], t);
            }
        }
    }
    // p_r = (x - h[r-1][r-1]) p_{r-1}
    //       - sum_j h[j][r-1] (prod of subdiagonals between) p_j.
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for r in 1..=n {
        let mut next = poly_shift_mul(&p[r - 1], h[r - 1][r - 1], f);
        let mut subdiag = 1u64;
        for j in (0..r - 1).rev() {
            subdiag = f.mul(subdiag, h[j + 1][j]);
            let coeff = f.mul(h[j][r - 1], subdiag);
            if coeff == 0 {
                continue;
            }
            for (c, &pc) in p[j].iter().enumerate() {
                let t = f.mul(coeff, pc);
                next[c] = f.sub(next[c], t);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// `(x - a) * poly`.
fn poly_shift_mul(poly: &[u64], a: u64, f: Fq) -> Vec<u64> {
    let mut out = vec![0u64; poly.len() + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i + 1] = f.add(out[i + 1], c);
        out[i] = f.sub(out[i], f.mul(a, c));
    }
    out
}

fn poly_trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_deg(p: &[u64]) -> usize {
    p.len() - 1
}

fn poly_is_zero(p: &[u64]) -> bool {
    p.iter().all(|&c| c == 0)
}

/// Remainder of `a` modulo `b`; `b` must be nonzero.
fn poly_rem(a: &[u64], b: &[u64], f: Fq) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = poly_deg(&b);
    let lead_inv = f.inv(*b.last().unwrap());
    while !poly_is_zero(&r) && poly_deg(&r) >= db {
        let shift = poly_deg(&r) - db;
        let factor = f.mul(*r.last().unwrap(), lead_inv);
        for i in 0..=db {
            let t = f.mul(factor, b[i]);
            r[shift + i] = f.sub(r[shift + i], t);
        }
        poly_trim(&mut r);
        if poly_deg(&r) == 0 && r[0] == 0 {
            break;
        }
    }
    r
}

/// Exact quotient `a / b` when `b` divides `a`.
fn poly_div_exact(a: &[u64], b: &[u64], f: Fq) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = poly_deg(&b);
    let lead_inv = f.inv(*b.last().unwrap());
    let mut quot = vec![0u64; poly_deg(&r).saturating_sub(db) + 1];
    while !poly_is_zero(&r) && poly_deg(&r) >= db {
        let shift = poly_deg(&r) - db;
        let factor = f.mul(*r.last().unwrap(), lead_inv);
        quot[shift] = factor;
        for i in 0..=db {
            let t = f.mul(factor, b[i]);
            r[shift + i] = f.sub(r[shift + i], t);
        }
        poly_trim(&mut r);
        if r.len() == 1 && r[0] == 0 {
            break;
        }
    }
    quot
}

/// Monic gcd.
fn poly_gcd(a: &[u64], b: &[u64], f: Fq) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !poly_is_zero(&b) {
        let r = poly_rem(&a, &b, f);
        a = b;
        b = r;
    }
    let lead_inv = f.inv(*a.last().unwrap());
    for c in a.iter_mut() {
        *c = f.mul(*c, lead_inv);
    }
    a
}

/// Product `a * b` reduced modulo `m`.
fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], f: Fq) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = f.add(prod[i + j], f.mul(x, y));
        }
    }
    poly_rem(&prod, m, f)
}

/// `(x + c)^e mod m`.
fn poly_powmod_linear(c: u64, mut e: u64, m: &[u64], f: Fq) -> Vec<u64> {
    let mut base = poly_rem(&[c, 1], m, f);
    let mut acc = poly_rem(&[1], m, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, m, f);
        }
        base = poly_mulmod(&base, &base, m, f);
        e >>= 1;
    }
    acc
}

/// The distinct roots of `poly` in `F_q`, sorted ascending. `q` must be odd.
///
/// First strips `poly` to its squarefree product of linear factors via
/// `gcd(poly, x^q - x)`, then splits with quadratic-residue filters
/// `gcd(g, (x + c)^((q-1)/2) - 1)` for `c = 0, 1, 2, ...`.
pub fn distinct_roots(poly: &[u64], f: Fq) -> Vec<u64> {
    let mut p = poly.to_vec();
    poly_trim(&mut p);
    if poly_deg(&p) == 0 {
        return Vec::new();
    }
    // x^q - x mod p, assembled from x^q mod p.
    let mut xq = poly_powmod_linear(0, f.q, &p, f);
    if xq.len() < 2 {
        xq.resize(2, 0);
    }
    xq[1] = f.sub(xq[1], 1);
    let mut g = if poly_is_zero(&xq) {
        p.clone()
    } else {
        poly_gcd(&p, &xq, f)
    };
    poly_trim(&mut g);
    let mut roots = Vec::new();
    let mut work = Vec::new();
    if poly_deg(&g) >= 1 {
        work.push(g);
    }
    while let Some(h) = work.pop() {
        if poly_deg(&h) == 1 {
            // Monic x + h0: root is -h0.
            roots.push(f.neg(h[0]));
            continue;
        }
        let mut c = 0u64;
        loop {
            let mut s = poly_powmod_linear(c, (f.q - 1) / 2, &h, f);
            if s.is_empty() {
                s.push(0);
            }
            s[0] = f.sub(s[0], 1);
            let d = if poly_is_zero(&s) {
                h.clone()
            } else {
                poly_gcd(&h, &s, f)
            };
            if poly_deg(&d) >= 1 && poly_deg(&d) < poly_deg(&h) {
                let rest = poly_div_exact(&h, &d, f);
                work.push(d);
                work.push(rest);
                break;
            }
            c += 1;
            assert!(c < f.q, "splitting must terminate before exhausting shifts");
        }
    }
    roots.sort_unstable();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    const F7: Fq = Fq { q: 7 };
    const F97: Fq = Fq { q: 97 };

    #[test]
    fn field_ops() {
        assert_eq!(F7.add(5, 4), 2);
        assert_eq!(F7.sub(2, 5), 4);
        assert_eq!(F7.mul(3, 5), 1);
        assert_eq!(F7.inv(3), 5);
        assert_eq!(F7.pow(3, 6), 1);
        assert_eq!(F7.neg(0), 0);
    }

    #[test]
    fn rref_and_rank() {
        let mut rows = vec![vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1]];
        let pivots = rref(&mut rows, F7);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![vec![1, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn nullspace_solves() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let basis = nullspace(&m, F7);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for row in &m {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| F7.add(acc, F7.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
        // Full-rank matrix has trivial nullspace.
        assert!(nullspace(&[vec![1, 0], vec![0, 1]], F7).is_empty());
    }

    #[test]
    fn charpoly_small_matrices() {
        // [[1,2],[3,4]] over F_97: x^2 - 5x - 2.
        let p = charpoly(&[vec![1, 2], vec![3, 4]], F97);
        assert_eq!(p, vec![95, 92, 1]);
        // Diagonal matrix: product of (x - d).
        let p = charpoly(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 2]], F97);
        // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12.
        assert_eq!(p, vec![97 - 12, 16, 97 - 7, 1]);
        // Empty matrix: charpoly 1.
        assert_eq!(charpoly(&[], F97), vec![1]);
    }

    #[test]
    fn charpoly_matches_trace_and_det() {
        // Random-ish 4x4 with known trace and determinant mod 97.
        let m = vec![
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ];
        let p = charpoly(&m, F97);
        assert_eq!(p.len(), 5);
        assert_eq!(p[4], 1);
        // Coefficient of x^3 is minus the trace.
        assert_eq!(p[3], F97.neg(3 + 9 + 5 + 3));
        // Constant term is (-1)^4 det = det; det of this matrix is 98 = 1 mod 97.
        assert_eq!(p[0], 1);
    }

    #[test]
    fn roots_of_split_polynomials() {
        // (x-1)(x-2)(x-5) over F_7.
        let poly = {
            let mut p = vec![1u64];
            for r in [1u64, 2, 5] {
                p = poly_shift_mul(&p, r, F7);
            }
            p
        };
        assert_eq!(distinct_roots(&poly, F7), vec![1, 2, 5]);
        // Repeated roots are reported once.
        let sq = poly_shift_mul(&poly_shift_mul(&[1], 3, F7), 3, F7);
        assert_eq!(distinct_roots(&sq, F7), vec![3]);
        // x^2 + 1 has no roots over F_7.
        assert_eq!(distinct_roots(&[1, 0, 1], F7), Vec::<u64>::new());
        // Constant polynomial.
        assert_eq!(distinct_roots(&[4], F7), Vec::<u64>::new());
    }

    #[test]
    fn roots_large_field() {
        let f = Fq { q: 2521 };
        let mut p = vec![1u64];
        for r in [0u64, 17, 2520, 1260, 633] {
            p = poly_shift_mul(&p, r, f);
        }
        assert_eq!(distinct_roots(&p, f), vec![0, 17, 633, 1260, 2520]);
    }

    #[test]
    fn gcd_and_division() {
        // gcd((x-1)(x-2), (x-2)(x-3)) = x - 2 over F_7.
        let a = poly_shift_mul(&poly_shift_mul(&[1], 1, F7), 2, F7);
        let b = poly_shift_mul(&poly_shift_mul(&[1], 3, F7), 2, F7);
        assert_eq!(poly_gcd(&a, &b, F7), vec![5, 1]);
        let q = poly_div_exact(&a, &[5, 1], F7);
        assert_eq!(q, vec![6, 1]); // x - 1
    }
}
