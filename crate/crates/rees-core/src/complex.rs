//! Order complexes: the simplicial complex of chains of a poset, grouped
//! by dimension, with signed boundary matrices.

use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;
use crate::poset::{iter_bits, Poset};

pub struct OrderComplex {
    /// faces[d] = all chains of d+1 elements, each ascending by element
    /// index, in lexicographic order.
    pub faces: Vec<Vec<Vec<u32>>>,
}

/// Total number of nonempty chains, via dynamic programming over the
/// order relation (independent of the DFS enumeration).
pub fn chain_count(p: &Poset) -> u64 {
    let n = p.size();
    let mut c = vec![0u64; n];
    for x in (0..n).rev() {
        let mut total = 1u64;
        for y in iter_bits(p.leq_table().up_row(x)) {
            if y != x {
                total = total.saturating_add(c[y]);
            }
        }
        c[x] = total;
    }
    c.iter().fold(0u64, |acc, &v| acc.saturating_add(v))
}

pub fn order_complex(p: &Poset, max_simplices: u64) -> Result<OrderComplex> {
    let total = chain_count(p);
    if total > max_simplices {
        return Err(Error::GuardExceeded {
            kind: "simplices",
            needed: total,
            guard: max_simplices,
        });
    }
    let dim_bound = p.length() as usize + 1;
    let mut faces: Vec<Vec<Vec<u32>>> = vec![Vec::new(); if p.is_empty() { 0 } else { dim_bound }];
    let mut chain: Vec<u32> = Vec::new();
    for x in 0..p.size() {
        chain.push(x as u32);
        extend(p, &mut chain, &mut faces);
        chain.pop();
    }
    while faces.last().is_some_and(|f| f.is_empty()) {
        faces.pop();
    }
    Ok(OrderComplex { faces })
}

fn extend(p: &Poset, chain: &mut Vec<u32>, faces: &mut Vec<Vec<Vec<u32>>>) {
    faces[chain.len() - 1].push(chain.clone());
    let last = *chain.last().unwrap() as usize;
    for y in iter_bits(p.leq_table().up_row(last)) {
        if y != last {
            chain.push(y as u32);
            extend(p, chain, faces);
            chain.pop();
        }
    }
}

impl OrderComplex {
    /// Dimension of the complex; -1 when it has no faces (the complex of
    /// the empty poset, consisting of the empty simplex alone).
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn f_vector(&self) -> Vec<u64> {
        self.faces.iter().map(|f| f.len() as u64).collect()
    }

    pub fn total_faces(&self) -> u64 {
        self.f_vector().iter().sum()
    }

    /// Signed boundary matrix from d-faces to (d-1)-faces, d >= 1.
    pub fn boundary_matrix(&self, d: usize) -> SparseMatrix {
        assert!(d >= 1 && d < self.faces.len());
        let lower = &self.faces[d - 1];
        let upper = &self.faces[d];
        let mut m = SparseMatrix::new(lower.len(), upper.len());
        let mut face_buf = Vec::with_capacity(d);
        for (col, simplex) in upper.iter().enumerate() {
            // Omitting a later vertex yields a lexicographically smaller
            // face, so descending omit order pushes rows in ascending
            // order as the rank engine requires.
            for omit in (0..=d).rev() {
                face_buf.clear();
                face_buf.extend(
                    simplex
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != omit)
                        .map(|(_, &v)| v),
                );
                let row = lower
                    .binary_search(&face_buf)
                    .expect("boundary face exists in complex");
                let sign = if omit % 2 == 0 { 1 } else { -1 };
                m.push_entry(row, col, sign);
            }
        }
        m
    }
}
