//! Arithmetic over the prime field GF(p) and canonical subspace
//! representatives (reduced row-echelon bases).

use crate::error::{Error, Result};

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(q: u32) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q))
    }
}

fn inv_mod(a: u32, q: u32) -> u32 {
    // q is a small prime; Fermat is plenty.
    let mut result = 1u64;
    let mut base = a as u64 % q as u64;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    result as u32
}

/// A subspace of GF(q)^n stored as its reduced row-echelon basis.
///
/// The RREF matrix is the canonical representative: two subspaces are equal
/// iff their matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    pub q: u32,
    pub ambient: usize,
    /// RREF rows, each of length `ambient`, entries in 0..q.
    pub rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(q: u32, ambient: usize) -> Self {
        Subspace {
            q,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a vector modulo the row space; returns the residue.
    fn reduce_vector(&self, v: &[u8]) -> Vec<u8> {
        let q = self.q;
        let mut v: Vec<u8> = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|&c| c != 0).expect("nonzero row");
            let c = v[pivot] as u32;
            if c != 0 {
                // RREF pivots are 1, so subtract c * row.
                for (vi, ri) in v.iter_mut().zip(row) {
                    let t = (*vi as u32 + (q - c) * (*ri as u32)) % q;
                    *vi = t as u8;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        self.reduce_vector(v).iter().all(|&c| c == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains_vector(r))
    }

    /// Canonical subspace spanned by arbitrary vectors.
    pub fn span(q: u32, ambient: usize, vectors: &[Vec<u8>]) -> Self {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for v in vectors {
            rows.push(v.clone());
        }
        let rows = rref(q, ambient, rows);
        Subspace { q, ambient, rows }
    }

    /// All vectors of the subspace (q^dim of them), in a deterministic order.
    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let q = self.q;
        let k = self.dim();
        let mut out = Vec::with_capacity((q as usize).pow(k as u32));
        let mut coeffs = vec![0u8; k];
        loop {
            let mut v = vec![0u8; self.ambient];
            for (c, row) in coeffs.iter().zip(&self.rows) {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = ((*vi as u32 + *c as u32 * *ri as u32) % q) as u8;
                }
            }
            out.push(v);
            // odometer
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                coeffs[i] += 1;
                if (coeffs[i] as u32) < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
}

/// Row-reduce to RREF, dropping zero rows.
pub fn rref(q: u32, ambient: usize, mut rows: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    let mut pivot_row = 0;
    for col in 0..ambient {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = inv_mod(rows[pivot_row][col] as u32, q);
        for c in rows[pivot_row].clone().iter().enumerate() {
            rows[pivot_row][c.0] = ((*c.1 as u32 * inv) % q) as u8;
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && rows[r2][col] != 0 {
                let factor = rows[r2][col] as u32;
                for c in 0..ambient {
                    let t =
                        (rows[r2][c] as u32 + (q - factor % q) * rows[pivot_row][c] as u32) % q;
                    rows[r2][c] = t as u8;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows.retain(|r| r.iter().any(|&c| c != 0));
    rows
}

/// Enumerate every k-dimensional subspace of GF(q)^n by RREF pattern:
/// choose pivot columns, then fill the free entries.
pub fn subspaces_of_dim(q: u32, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Subspace::zero(q, n));
        return out;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free positions: row i, column c where c > pivots[i], c not a pivot,
        // and c is not a pivot column of a later row (those entries are 0 in RREF).
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push((i, c));
                }
            }
        }
        let mut values = vec![0u8; free.len()];
        loop {
            let mut rows = vec![vec![0u8; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&values) {
                rows[r][c] = v;
            }
            out.push(Subspace {
                q,
                ambient: n,
                rows,
            });
            // odometer over free values
            let mut i = 0;
            loop {
                if i == values.len() {
                    // done with this pivot pattern
                    break;
                }
                values[i] += 1;
                if (values[i] as u32) < q {
                    break;
                }
                values[i] = 0;
                i += 1;
            }
            if values.iter().all(|&v| v == 0) {
                break;
            }
        }
        // next pivot combination (lexicographic)
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < n - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The standard symplectic form on GF(q)^{2n}:
/// <u, v> = sum_i (u_i v_{n+i} - u_{n+i} v_i).
pub fn symplectic_form(q: u32, n: usize, u: &[u8], v: &[u8]) -> u32 {
    let mut acc: u64 = 0;
    let qq = q as u64;
    for i in 0..n {
        acc += u[i] as u64 * v[n + i] as u64 % qq;
        acc += (qq - (u[n + i] as u64 * v[i] as u64) % qq) % qq;
    }
    (acc % qq) as u32
}

pub fn is_totally_isotropic(q: u32, n: usize, s: &Subspace) -> bool {
    for (i, u) in s.rows.iter().enumerate() {
        for v in &s.rows[i..] {
            if symplectic_form(q, n, u, v) != 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // [4 k]_2 = 1, 15, 35, 15, 1
        let expected = [1usize, 15, 35, 15, 1];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(subspaces_of_dim(2, 4, k).len(), e, "k={k}");
        }
        // [3 k]_3 = 1, 13, 13, 1
        let expected3 = [1usize, 13, 13, 1];
        for (k, &e) in expected3.iter().enumerate() {
            assert_eq!(subspaces_of_dim(3, 3, k).len(), e, "k={k}");
        }
    }

    #[test]
    fn rref_is_canonical() {
        // span{(1,1,0), (0,1,1)} == span{(1,0,2), (0,1,1)} over GF(3)
        let a = Subspace::span(3, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(3, 3, &[vec![1, 0, 2], vec![0, 1, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn containment() {
        let w = Subspace::span(2, 3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let u = Subspace::span(2, 3, &[vec![1, 1, 1]]);
        assert!(w.contains(&u));
        assert!(!u.contains(&w));
    }

    #[test]
    fn all_lines_of_f2_squared_are_isotropic() {
        let lines = subspaces_of_dim(2, 2, 1);
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| is_totally_isotropic(2, 1, l)));
    }
}
