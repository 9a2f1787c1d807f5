//! Builders for the concrete poset families: Boolean lattices, chains,
//! complete t-ary trees, subspace lattices over GF(q), cross-polytope face
//! posets, and posets of totally isotropic subspaces.

use crate::error::{Error, Result};
use crate::gf::{check_prime, is_totally_isotropic, subspaces_of_dim, Subspace};
use crate::label::Label;
use crate::poset::Poset;

/// Boolean lattice B_n: subsets of [n] ordered by inclusion.
pub fn boolean_lattice(n: usize) -> Poset {
    assert!(n <= 25, "boolean lattice limited to n <= 25");
    let labels: Vec<Label> = (0u32..1 << n).map(Label::Set).collect();
    let mut covers = Vec::new();
    for mask in 0u32..1 << n {
        for i in 0..n {
            if mask & (1 << i) == 0 {
                covers.push((mask, mask | (1 << i)));
            }
        }
    }
    let index = |m: u32| m; // label order after canonical sort is not the mask
    let covers: Vec<(Label, Label)> = covers
        .into_iter()
        .map(|(a, b)| (Label::Set(index(a)), Label::Set(index(b))))
        .collect();
    Poset::build(labels, &covers).expect("boolean lattice is a poset")
}

/// Chain C_n: the n-element chain 0 < 1 < ... < n-1.
pub fn chain(n: usize) -> Poset {
    let labels: Vec<Label> = (0..n as i64).map(Label::Int).collect();
    let covers: Vec<(Label, Label)> = (1..n as i64)
        .map(|i| (Label::Int(i - 1), Label::Int(i)))
        .collect();
    Poset::build(labels, &covers).expect("chain is a poset")
}

/// Complete t-ary tree of height n, root at the bottom: t^j nodes of rank j.
pub fn tary_tree(t: usize, n: usize) -> Poset {
    assert!(t >= 1, "tree arity must be at least 1");
    let mut labels = vec![Label::Node(Vec::new())];
    let mut covers = Vec::new();
    let mut frontier = vec![Vec::<u8>::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for path in &frontier {
            for c in 0..t as u8 {
                let mut child = path.clone();
                child.push(c);
                labels.push(Label::Node(child.clone()));
                covers.push((Label::Node(path.clone()), Label::Node(child.clone())));
                next.push(child);
            }
        }
        frontier = next;
    }
    Poset::build(labels, &covers).expect("tree is a poset")
}

/// Subspace lattice B_n(q): all subspaces of GF(q)^n ordered by inclusion.
pub fn subspace_lattice(n: usize, q: u32) -> Result<Poset> {
    check_prime(q)?;
    let mut by_dim: Vec<Vec<Subspace>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        by_dim.push(subspaces_of_dim(q, n, k));
    }
    build_inclusion_poset(by_dim)
}

/// Inclusion order on subspaces grouped by dimension; covers are
/// containments with dimension difference one.
fn build_inclusion_poset(by_dim: Vec<Vec<Subspace>>) -> Result<Poset> {
    let mut labels = Vec::new();
    for level in &by_dim {
        for s in level {
            labels.push(Label::Subspace(s.clone()));
        }
    }
    let mut covers = Vec::new();
    for k in 1..by_dim.len() {
        for upper in &by_dim[k] {
            for lower in &by_dim[k - 1] {
                if upper.contains(lower) {
                    covers.push((
                        Label::Subspace(lower.clone()),
                        Label::Subspace(upper.clone()),
                    ));
                }
            }
        }
    }
    Poset::build(labels, &covers)
}

/// PCP_n: proper (simplicial) faces of the n-dimensional cross-polytope,
/// together with the empty face as minimum. A face is a set of vertices
/// from {1..n, -1..-n} containing no antipodal pair; rank = cardinality.
pub fn crosspolytope_faces(n: usize) -> Poset {
    assert!((1..=25).contains(&n));
    let mut labels = Vec::new();
    let mut covers = Vec::new();
    // Enumerate admissible (plus, minus) mask pairs: supports are disjoint.
    let full = (1u32 << n) - 1;
    let mut support_faces: Vec<(u32, u32)> = Vec::new();
    for support in 0..=full {
        // choose signs for each supported coordinate
        let bits: Vec<u32> = (0..n as u32).filter(|i| support & (1 << i) != 0).collect();
        for signs in 0..(1u32 << bits.len()) {
            let mut plus = 0u32;
            let mut minus = 0u32;
            for (pos, &b) in bits.iter().enumerate() {
                if signs & (1 << pos) != 0 {
                    minus |= 1 << b;
                } else {
                    plus |= 1 << b;
                }
            }
            support_faces.push((plus, minus));
        }
    }
    for &(plus, minus) in &support_faces {
        labels.push(Label::SignedSet { plus, minus });
        // covers: remove one vertex
        let card = (plus | minus).count_ones();
        if card > 0 {
            for i in 0..n as u32 {
                if plus & (1 << i) != 0 {
                    covers.push((
                        Label::SignedSet {
                            plus: plus & !(1 << i),
                            minus,
                        },
                        Label::SignedSet { plus, minus },
                    ));
                }
                if minus & (1 << i) != 0 {
                    covers.push((
                        Label::SignedSet {
                            plus,
                            minus: minus & !(1 << i),
                        },
                        Label::SignedSet { plus, minus },
                    ));
                }
            }
        }
    }
    Poset::build(labels, &covers).expect("cross-polytope face poset is a poset")
}

/// PCP_n(q): totally isotropic subspaces of GF(q)^{2n} under the standard
/// symplectic form, ordered by inclusion. Maximal elements have dimension n.
pub fn isotropic_subspace_poset(n: usize, q: u32) -> Result<Poset> {
    check_prime(q)?;
    let mut by_dim: Vec<Vec<Subspace>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let level: Vec<Subspace> = subspaces_of_dim(q, 2 * n, k)
            .into_iter()
            .filter(|s| is_totally_isotropic(q, n, s))
            .collect();
        by_dim.push(level);
    }
    build_inclusion_poset(by_dim)
}

/// W_k(P): the number of elements of rank k, for k = 0..=length.
pub fn whitney_numbers(p: &Poset) -> Result<Vec<u64>> {
    let ranks = p.ranks().ok_or(Error::UnrankedPoset)?;
    let mut w = vec![0u64; p.length() as usize + 1];
    for &r in ranks {
        w[r as usize] += 1;
    }
    Ok(w)
}
