//! Symmetric-group actions on catalog posets and the homology characters
//! they induce. Representations are handled exclusively through
//! characters: the trace of g on the top homology of a Cohen-Macaulay
//! poset is (-1)^top times the Möbius invariant of the hat of the
//! g-fixed subposet, so every character value is one exact Möbius
//! computation on a fixed subposet.

use std::collections::BTreeMap;

use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::homology::{betti, check_automorphism, mobius_invariant_hat};
use crate::label::Label;
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::poset::Poset;

/// The natural S_n action on a poset whose element labels are built from
/// subsets of [n] (possibly inside Rees-product pairs, where the action
/// is on the first coordinate only).
pub struct SymmetricAction<'a> {
    pub poset: &'a Poset,
    pub n: usize,
}

fn relabel(g: &Permutation, label: &Label) -> Result<Label> {
    Ok(match label {
        Label::Set(mask) => {
            let mut new_mask = 0u32;
            for i in 1..=g.n() as u32 {
                if mask & (1 << (i - 1)) != 0 {
                    new_mask |= 1 << (g.at(i as usize) - 1);
                }
            }
            if mask & !((1u32 << g.n()) - 1) != 0 {
                return Err(Error::NotAutomorphism(format!(
                    "set label {label} exceeds the permutation degree"
                )));
            }
            Label::Set(new_mask)
        }
        Label::Pair(a, b) => Label::pair(relabel(g, a)?, (**b).clone()),
        Label::Int(_) | Label::Node(_) | Label::Bottom | Label::Top => label.clone(),
        Label::SignedSet { .. } | Label::Subspace(_) | Label::Text(_) => {
            return Err(Error::NotAutomorphism(format!(
                "no symmetric-group action defined on label {label}"
            )))
        }
    })
}

impl<'a> SymmetricAction<'a> {
    pub fn new(poset: &'a Poset, n: usize) -> Self {
        SymmetricAction { poset, n }
    }

    /// The automorphism of the poset induced by g (an error if g does
    /// not act by order-preserving bijections).
    pub fn automorphism(&self, g: &Permutation) -> Result<Vec<usize>> {
        let mut mapping = Vec::with_capacity(self.poset.size());
        for i in 0..self.poset.size() {
            let image = relabel(g, self.poset.label(i))?;
            let j = self.poset.index_of(&image).ok_or_else(|| {
                Error::NotAutomorphism(format!(
                    "image {image} of {} is not an element",
                    self.poset.label(i)
                ))
            })?;
            mapping.push(j);
        }
        check_automorphism(self.poset, &mapping)?;
        Ok(mapping)
    }

    /// The subposet of elements fixed by g.
    pub fn fixed_subposet(&self, g: &Permutation) -> Result<Poset> {
        let mapping = self.automorphism(g)?;
        let fixed: Vec<usize> = (0..self.poset.size()).filter(|&i| mapping[i] == i).collect();
        Ok(self.poset.induced(&fixed))
    }
}

/// Whether to verify that homology is concentrated in top dimension
/// before reading traces as top-homology character values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmPolicy {
    /// Verify via Betti numbers when the complex fits under the guard.
    Check(u64),
    /// Trust the caller.
    Assume,
}

/// The character of the top-homology representation: for each cycle type
/// lambda, the trace of a representative is (-1)^top mu(hat(P^g)).
pub fn homology_character(
    action: &SymmetricAction<'_>,
    policy: CmPolicy,
) -> Result<ClassFunction> {
    if let CmPolicy::Check(guard) = policy {
        match betti(action.poset, guard) {
            Ok(b) => {
                if !b.concentrated_in_top() {
                    return Err(Error::NotCohenMacaulay);
                }
            }
            Err(Error::GuardExceeded { .. }) => {
                eprintln!(
                    "warning: poset too large to verify top-concentration; assuming it"
                );
            }
            Err(e) => return Err(e),
        }
    }
    // dimension of the order complex: poset length, or -1 when empty
    let sign = if action.poset.is_empty() {
        -1
    } else if action.poset.length().is_multiple_of(2) {
        1
    } else {
        -1
    };
    let mut values = BTreeMap::new();
    for lambda in partitions_of(action.n as u32) {
        let g = Permutation::from_cycle_type(&lambda, action.n);
        let fixed = action.fixed_subposet(&g)?;
        values.insert(lambda, sign * mobius_invariant_hat(&fixed));
    }
    Ok(ClassFunction::new(action.n as u32, values))
}

/// Lefschetz character of the action: trace at each cycle type is the
/// reduced Euler characteristic of the fixed subposet (no concentration
/// assumption).
pub fn lefschetz_character(action: &SymmetricAction<'_>) -> Result<ClassFunction> {
    let mut values = BTreeMap::new();
    for lambda in partitions_of(action.n as u32) {
        let g = Permutation::from_cycle_type(&lambda, action.n);
        let fixed = action.fixed_subposet(&g)?;
        values.insert(lambda, mobius_invariant_hat(&fixed));
    }
    Ok(ClassFunction::new(action.n as u32, values))
}

/// Evaluate the character value on an arbitrary group element (sanity
/// route: the value must agree with the cycle-type representative).
pub fn trace_at(
    action: &SymmetricAction<'_>,
    g: &Permutation,
    top_sign: bool,
) -> Result<i64> {
    let fixed = action.fixed_subposet(g)?;
    let value = mobius_invariant_hat(&fixed);
    if top_sign {
        let negate = action.poset.is_empty() || action.poset.length() % 2 == 1;
        Ok(if negate { -value } else { value })
    } else {
        Ok(value)
    }
}

/// Cycle-type partition of a permutation, exposed for suite reporting.
pub fn cycle_type_of(g: &Permutation) -> Partition {
    g.cycle_type()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::boolean_lattice;
    use crate::perm::stats;
    use crate::rees::ideal_ij;

    #[test]
    fn b3_action_permutes_subsets() {
        let b3 = boolean_lattice(3);
        let action = SymmetricAction::new(&b3, 3);
        let g = Permutation::new(vec![2, 3, 1]).unwrap();
        let mapping = action.automorphism(&g).unwrap();
        let idx = b3.index_of(&Label::set_from_iter([1, 2])).unwrap();
        let image = b3.index_of(&Label::set_from_iter([2, 3])).unwrap();
        assert_eq!(mapping[idx], image);
    }

    #[test]
    fn character_constant_on_conjugacy_classes() {
        // two representatives of the same class give the same trace
        for n in 3..=4usize {
            let ideal = ideal_ij(&boolean_lattice(n), 1).unwrap();
            let action = SymmetricAction::new(&ideal, n);
            for lambda in partitions_of(n as u32) {
                let g1 = Permutation::from_cycle_type(&lambda, n);
                // conjugate representative: reverse the blocks
                let g2 = conjugate_by_reversal(&g1);
                assert_eq!(g2.cycle_type(), lambda);
                assert_eq!(
                    trace_at(&action, &g1, true).unwrap(),
                    trace_at(&action, &g2, true).unwrap(),
                    "n={n} lambda={lambda}"
                );
            }
        }
    }

    fn conjugate_by_reversal(g: &Permutation) -> Permutation {
        let n = g.n();
        // w g w^{-1} where w is the order-reversing permutation
        let w = |i: usize| n + 1 - i;
        let mut word = vec![0u8; n];
        for i in 1..=n {
            word[w(i) - 1] = w(g.at(i)) as u8;
        }
        Permutation::new(word).unwrap()
    }

    #[test]
    fn identity_trace_is_top_betti() {
        use crate::homology::betti;
        let n = 4;
        for j in 0..n {
            let ideal = ideal_ij(&boolean_lattice(n), j).unwrap();
            let action = SymmetricAction::new(&ideal, n);
            let chi = homology_character(&action, CmPolicy::Check(1 << 20)).unwrap();
            let b = betti(&ideal, 1 << 20).unwrap();
            assert_eq!(chi.dimension(), b.top() as i64, "j={j}");
        }
    }

    #[test]
    fn derangement_count_from_character_dimension() {
        // dimension of the top homology character of B_n^- * C_n is d_n
        use crate::catalog::chain;
        use crate::rees::rees_product;
        for n in 2..=4usize {
            let truncated = boolean_lattice(n).remove_bottom().unwrap();
            let rees = rees_product(&truncated, &chain(n)).unwrap();
            let action = SymmetricAction::new(&rees, n);
            let chi = homology_character(&action, CmPolicy::Check(1 << 20)).unwrap();
            let d_n = crate::perm::derangement_count(n) as i64;
            assert_eq!(chi.dimension(), d_n, "n={n}");
        }
    }

    #[test]
    fn three_cycle_on_ideal_has_empty_fixed_subposet() {
        // the 3-cycle fixes no singleton and no pair, so its Lefschetz
        // trace on I_1(B_3) is mu of the hat of the empty poset
        let ideal = ideal_ij(&boolean_lattice(3), 1).unwrap();
        let action = SymmetricAction::new(&ideal, 3);
        let g = Permutation::new(vec![2, 3, 1]).unwrap();
        let fixed = action.fixed_subposet(&g).unwrap();
        assert!(fixed.is_empty());
        let mapping = action.automorphism(&g).unwrap();
        assert_eq!(
            crate::homology::lefschetz_trace(&ideal, &mapping).unwrap(),
            -1
        );
    }

    #[test]
    fn fixed_subposet_of_transposition() {
        let b3 = boolean_lattice(3);
        let action = SymmetricAction::new(&b3, 3);
        let g = Permutation::new(vec![2, 1, 3]).unwrap();
        let fixed = action.fixed_subposet(&g).unwrap();
        // fixed subsets: {}, {3}, {1,2}, {1,2,3}
        assert_eq!(fixed.size(), 4);
        assert_eq!(stats(&g).fix, 1);
    }
}
