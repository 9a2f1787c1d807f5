//! Exact poset topology: reduced rational homology of order complexes,
//! Möbius functions, the Euler relation connecting them, computational
//! Cohen-Macaulay verification, and Lefschetz traces of automorphisms.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};

use crate::complex::order_complex;
use crate::error::{Error, Result};
use crate::matrix::rank;
use crate::poset::{iter_bits, Poset};

/// Default guard on the total number of simplices per complex; override
/// per call or via the REES_LAB_GUARD_SIMPLICES environment variable in
/// the CLI.
pub const DEFAULT_SIMPLEX_GUARD: u64 = 60_000;

/// Reduced Betti numbers over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Betti {
    /// dim of reduced homology in degree -1: 1 for the empty complex.
    pub minus_one: u64,
    /// dims[i] = dim of reduced homology in degree i.
    pub dims: Vec<u64>,
}

impl Betti {
    pub fn top(&self) -> u64 {
        *self.dims.last().unwrap_or(&self.minus_one)
    }

    /// Homology degree of the top of the complex (-1 for the empty poset).
    pub fn top_degree(&self) -> isize {
        self.dims.len() as isize - 1
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = -(self.minus_one as i64);
        for (i, &b) in self.dims.iter().enumerate() {
            let term = b as i64;
            chi += if i % 2 == 0 { term } else { -term };
        }
        chi
    }

    /// Nonzero only in the top dimension of the complex.
    pub fn concentrated_in_top(&self) -> bool {
        if self.dims.is_empty() {
            return true;
        }
        self.minus_one == 0 && self.dims[..self.dims.len() - 1].iter().all(|&b| b == 0)
    }
}

/// Reduced Betti numbers of the order complex of P, from exact ranks of
/// the boundary matrices of the augmented chain complex.
pub fn betti(p: &Poset, max_simplices: u64) -> Result<Betti> {
    let complex = order_complex(p, max_simplices)?;
    if complex.faces.is_empty() {
        return Ok(Betti {
            minus_one: 1,
            dims: Vec::new(),
        });
    }
    let f = complex.f_vector();
    let top = complex.faces.len() - 1;
    // ranks[d] = rank of the boundary map out of dimension d;
    // the augmentation C_0 -> C_{-1} has rank 1 for a nonempty complex.
    let mut ranks = vec![0u64; top + 2];
    ranks[0] = 1;
    for d in 1..=top {
        ranks[d] = rank(&complex.boundary_matrix(d))? as u64;
    }
    let minus_one = 1 - ranks[0];
    let dims = (0..=top)
        .map(|d| f[d] - ranks[d] - ranks[d + 1])
        .collect();
    Ok(Betti { minus_one, dims })
}

/// Memoized Möbius function of a poset.
pub struct MobiusTable<'a> {
    poset: &'a Poset,
    memo: RefCell<HashMap<(u32, u32), i64>>,
}

impl<'a> MobiusTable<'a> {
    pub fn new(poset: &'a Poset) -> Self {
        MobiusTable {
            poset,
            memo: RefCell::new(HashMap::new()),
        }
    }

    /// mu(x, y) for x <= y, by the defining recursion
    /// mu(x, x) = 1 and sum_{x <= z <= y} mu(x, z) = 0.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.poset.leq(x, y) {
            return Err(Error::NotComparable(
                self.poset.label(x).to_string(),
                self.poset.label(y).to_string(),
            ));
        }
        if let Some(&v) = self.memo.borrow().get(&(x as u32, y as u32)) {
            return Ok(v);
        }
        // Element indices form a linear extension, so ascending z within
        // [x, y] has all needed values computed before use.
        let t = self.poset.leq_table();
        let up = t.up_row(x);
        let down = t.down_row(y);
        let interval: Vec<usize> = up
            .iter()
            .zip(down)
            .enumerate()
            .flat_map(|(w, (&a, &b))| {
                let mut bits = a & b;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(w * 64 + i)
                    }
                })
            })
            .collect();
        let mut memo = self.memo.borrow_mut();
        for &z in &interval {
            if memo.contains_key(&(x as u32, z as u32)) {
                continue;
            }
            let value = if z == x {
                1
            } else {
                let mut acc = 0i64;
                for &w in &interval {
                    if w == z {
                        break;
                    }
                    if self.poset.leq(w, z) {
                        acc += memo[&(x as u32, w as u32)];
                    }
                }
                -acc
            };
            memo.insert((x as u32, z as u32), value);
        }
        Ok(memo[&(x as u32, y as u32)])
    }
}

pub fn mobius(p: &Poset, x: usize, y: usize) -> Result<i64> {
    MobiusTable::new(p).mobius(x, y)
}

/// mu(P) = mu_P(min, max) of a bounded poset.
pub fn mobius_invariant(p: &Poset) -> Result<i64> {
    if !p.is_bounded() {
        return Err(Error::UnboundedPoset);
    }
    mobius(p, p.unique_min().unwrap(), p.unique_max().unwrap())
}

/// mu(P-hat), defined for every poset (the empty poset gives -1).
pub fn mobius_invariant_hat(p: &Poset) -> i64 {
    mobius_invariant(&p.adjoin_bottom_and_top()).expect("hat poset is bounded")
}

/// The Euler relation: mu(P-hat) equals the reduced Euler characteristic
/// of the order complex of P. Both sides are computed by independent
/// engines (Möbius recursion vs boundary-matrix ranks).
pub fn euler_poincare_check(p: &Poset, max_simplices: u64) -> Result<bool> {
    let b = betti(p, max_simplices)?;
    Ok(mobius_invariant_hat(p) == b.reduced_euler_characteristic())
}

/// Every open interval of P-hat, and P itself, has homology concentrated
/// in the top dimension of its order complex.
pub fn is_cohen_macaulay(p: &Poset, max_simplices: u64) -> Result<bool> {
    let hat = p.adjoin_bottom_and_top();
    let n = hat.size();
    for x in 0..n {
        for y in 0..n {
            if x != y && hat.leq(x, y) {
                let interval: Vec<usize> = (0..n)
                    .filter(|&z| z != x && z != y && hat.leq(x, z) && hat.leq(z, y))
                    .collect();
                let sub = hat.induced_convex(&interval);
                if !betti(&sub, max_simplices)?.concentrated_in_top() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Validate that `mapping` is an order-preserving bijection of P
/// (equivalently, that it maps covers onto covers).
pub fn check_automorphism(p: &Poset, mapping: &[usize]) -> Result<()> {
    if mapping.len() != p.size() {
        return Err(Error::NotAutomorphism(format!(
            "length {} != {}",
            mapping.len(),
            p.size()
        )));
    }
    let mut seen = vec![false; p.size()];
    for &v in mapping {
        if v >= p.size() || seen[v] {
            return Err(Error::NotAutomorphism("not a bijection".into()));
        }
        seen[v] = true;
    }
    let covers: HashSet<(u32, u32)> = p.covers().iter().copied().collect();
    for &(a, b) in p.covers() {
        if !covers.contains(&(mapping[a as usize] as u32, mapping[b as usize] as u32)) {
            return Err(Error::NotAutomorphism(format!(
                "cover ({}, {}) not preserved",
                p.label(a as usize),
                p.label(b as usize)
            )));
        }
    }
    Ok(())
}

/// The Lefschetz number sum_j (-1)^j trace(g, reduced H_j(P)) of an
/// order-preserving automorphism, computed as the reduced Euler
/// characteristic (Möbius invariant of the hat) of the fixed subposet:
/// chains fixed setwise by an order-preserving map are fixed pointwise.
pub fn lefschetz_trace(p: &Poset, mapping: &[usize]) -> Result<i64> {
    check_automorphism(p, mapping)?;
    let fixed: Vec<usize> = (0..p.size()).filter(|&i| mapping[i] == i).collect();
    let sub = p.induced(&fixed);
    Ok(mobius_invariant_hat(&sub))
}

/// Convenience: iterate z in the closed interval [x, y] by index.
pub fn interval_indices(p: &Poset, x: usize, y: usize) -> Vec<usize> {
    let t = p.leq_table();
    let up = t.up_row(x).to_vec();
    let down = t.down_row(y);
    let combined: Vec<u64> = up.iter().zip(down).map(|(&a, &b)| a & b).collect();
    iter_bits(&combined).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_lattice, chain};
    use crate::poset::Poset;
    use crate::label::Label;

    const GUARD: u64 = 1 << 22;

    #[test]
    fn antichain_homology() {
        for k in 1..=4usize {
            let labels: Vec<Label> = (0..k as i64).map(Label::Int).collect();
            let p = Poset::build(labels, &[]).unwrap();
            let b = betti(&p, GUARD).unwrap();
            assert_eq!(b.dims, vec![k as u64 - 1]);
            assert_eq!(b.minus_one, 0);
        }
    }

    #[test]
    fn empty_poset_has_homology_in_degree_minus_one() {
        let p = Poset::build(vec![], &[]).unwrap();
        let b = betti(&p, GUARD).unwrap();
        assert_eq!(b.minus_one, 1);
        assert!(b.dims.is_empty());
        assert_eq!(b.reduced_euler_characteristic(), -1);
        assert_eq!(mobius_invariant_hat(&p), -1);
    }

    #[test]
    fn hexagon_circle_homology() {
        // proper part of B_3 minus bottom... the open interval between
        // bottom and top of B_3 is a hexagon: H_1 = 1
        let b3 = boolean_lattice(3);
        let proper: Vec<usize> = (1..7).collect();
        let p = b3.induced_convex(&proper);
        let b = betti(&p, GUARD).unwrap();
        assert_eq!(b.dims, vec![0, 1]);
    }

    #[test]
    fn mobius_of_boolean_lattices() {
        for n in 0..=6usize {
            let b = boolean_lattice(n);
            let mu = mobius_invariant(&b).unwrap();
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(mu, expected, "mu(B_{n})");
        }
    }

    #[test]
    fn mobius_of_long_chain_intervals_vanishes() {
        let c = chain(5);
        let table = MobiusTable::new(&c);
        assert_eq!(table.mobius(0, 0).unwrap(), 1);
        assert_eq!(table.mobius(0, 1).unwrap(), -1);
        assert_eq!(table.mobius(0, 2).unwrap(), 0);
        assert_eq!(table.mobius(1, 4).unwrap(), 0);
    }

    #[test]
    fn mobius_recursion_identity_holds_on_memoized_entries() {
        let b4 = boolean_lattice(4);
        let table = MobiusTable::new(&b4);
        let top = b4.unique_max().unwrap();
        table.mobius(0, top).unwrap();
        for x in 0..b4.size() {
            for y in 0..b4.size() {
                if b4.lt(x, y) {
                    let total: i64 = interval_indices(&b4, x, y)
                        .into_iter()
                        .map(|z| table.mobius(x, z).unwrap())
                        .sum();
                    assert_eq!(total, 0);
                }
            }
        }
    }

    #[test]
    fn euler_relation_on_boolean_lattice_proper_parts() {
        for n in 2..=4usize {
            let b = boolean_lattice(n);
            let proper: Vec<usize> = (1..b.size() - 1).collect();
            let p = b.induced_convex(&proper);
            assert!(euler_poincare_check(&p, GUARD).unwrap());
        }
    }

    #[test]
    fn mu_equals_mu_of_dual() {
        for n in 1..=4usize {
            let b = boolean_lattice(n);
            assert_eq!(
                mobius_invariant(&b).unwrap(),
                mobius_invariant(&b.dual()).unwrap()
            );
        }
    }

    #[test]
    fn boolean_lattice_is_cohen_macaulay_and_disjoint_chains_are_not() {
        let b3 = boolean_lattice(3);
        let proper: Vec<usize> = (1..7).collect();
        assert!(is_cohen_macaulay(&b3.induced_convex(&proper), GUARD).unwrap());

        // two chains of different lengths glued to shared bounds
        let labels: Vec<Label> = (0..5).map(Label::Int).collect();
        let covers = vec![
            (Label::Int(0), Label::Int(4)),
            (Label::Int(0), Label::Int(1)),
            (Label::Int(1), Label::Int(2)),
            (Label::Int(2), Label::Int(3)),
        ];
        let p = Poset::build(labels, &covers).unwrap();
        assert!(!is_cohen_macaulay(&p, GUARD).unwrap());
    }

    #[test]
    fn lefschetz_at_identity_is_euler_characteristic() {
        let b3 = boolean_lattice(3);
        let proper: Vec<usize> = (1..7).collect();
        let p = b3.induced_convex(&proper);
        let id: Vec<usize> = (0..p.size()).collect();
        let trace = lefschetz_trace(&p, &id).unwrap();
        let b = betti(&p, GUARD).unwrap();
        assert_eq!(trace, b.reduced_euler_characteristic());
    }

    #[test]
    fn lefschetz_rejects_non_automorphism() {
        let c = chain(3);
        assert!(lefschetz_trace(&c, &[2, 1, 0]).is_err());
    }
}

#[cfg(test)]
mod rees_homology_tests {
    use super::*;
    use crate::catalog::{boolean_lattice, chain};
    use crate::rees::rees_product;

    #[test]
    fn betti_vector_of_small_rees_product() {
        // two derangements of S_3, concentrated in the top dimension
        let truncated = boolean_lattice(3).remove_bottom().unwrap();
        let rees = rees_product(&truncated, &chain(3)).unwrap();
        let b = betti(&rees, 1 << 20).unwrap();
        assert_eq!(b.dims, vec![0, 0, 2]);
        assert!(b.concentrated_in_top());
        // the Möbius route gives the signed dimension
        assert_eq!(mobius_invariant_hat(&rees), 2);
    }
}
