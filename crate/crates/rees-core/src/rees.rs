//! Rees products and the derived posets built from them: the open ideals
//! I_j(P) below the maximal elements of P-minus * C_n, and the closed
//! ideals R_i(P) in P * C_{n+1} together with the reversal map psi_i.

use crate::catalog::chain;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::poset::Poset;

/// Rees product P * Q of ranked posets: pairs (p, q) with r_P(p) >= r_Q(q);
/// (p2, q2) covers (p1, q1) iff p2 covers p1 and either q2 = q1 or q2
/// covers q1. The result is ranked with rank(p, q) = r_P(p).
pub fn rees_product(p: &Poset, q: &Poset) -> Result<Poset> {
    let (Some(pr), Some(qr)) = (p.ranks(), q.ranks()) else {
        return Err(Error::UnrankedPoset);
    };
    let mut labels = Vec::new();
    let mut pair_index = std::collections::HashMap::new();
    for i in 0..p.size() {
        for j in 0..q.size() {
            if pr[i] >= qr[j] {
                pair_index.insert((i as u32, j as u32), labels.len() as u32);
                labels.push(Label::pair(p.label(i).clone(), q.label(j).clone()));
            }
        }
    }
    let mut covers = Vec::new();
    for (&(i, j), &a) in &pair_index {
        for &i2 in p.upper_covers(i as usize) {
            // (i2, j) is always a valid pair: r(i2) > r(i) >= r(j)
            let b = pair_index[&(i2, j)];
            covers.push((a, b));
            for &j2 in q.upper_covers(j as usize) {
                // r(i2) = r(i) + 1 >= r(j) + 1 = r(j2)
                let b = pair_index[&(i2, j2)];
                covers.push((a, b));
            }
        }
    }
    Poset::assemble(labels, covers)
}

/// The order relation of the Rees product computed directly from its
/// definition: p1 <= p2, q1 <= q2, and the rank jump in P dominates the
/// rank jump in Q. Used to cross-check the cover construction.
pub fn rees_product_via_order(p: &Poset, q: &Poset) -> Result<Poset> {
    let (Some(pr), Some(qr)) = (p.ranks(), q.ranks()) else {
        return Err(Error::UnrankedPoset);
    };
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    for i in 0..p.size() {
        for j in 0..q.size() {
            if pr[i] >= qr[j] {
                pairs.push((i, j));
                labels.push(Label::pair(p.label(i).clone(), q.label(j).clone()));
            }
        }
    }
    let leq = |a: usize, b: usize| {
        let (i1, j1) = pairs[a];
        let (i2, j2) = pairs[b];
        p.leq(i1, i2)
            && q.leq(j1, j2)
            && (pr[i2] - pr[i1]) >= (qr[j2] - qr[j1])
    };
    Poset::from_order(labels, leq)
}

/// The maximal elements of P-minus * C_n for bounded ranked P of length n
/// are the pairs (max(P), j) for j = 0..n-1; I_j(P) is the open principal
/// lower order ideal generated by (max(P), j).
pub fn ideal_ij(p: &Poset, j: usize) -> Result<Poset> {
    if !p.is_bounded() {
        return Err(Error::UnboundedPoset);
    }
    if !p.is_ranked() {
        return Err(Error::UnrankedPoset);
    }
    let n = p.length() as usize;
    if j >= n {
        return Err(Error::IndexOutOfRange(j, n));
    }
    let top_label = p.label(p.unique_max().unwrap()).clone();
    let truncated = p.remove_bottom()?;
    let rees = rees_product(&truncated, &chain(n))?;
    let apex = rees
        .index_of(&Label::pair(top_label, Label::Int(j as i64)))
        .expect("(max, j) is an element of the Rees product");
    Ok(rees.open_lower_ideal(apex))
}

/// R(P) = P * C_{n+1} for bounded ranked P of length n, and R_i(P) the
/// closed lower ideal generated by (max(P), i).
pub fn r_i_poset(p: &Poset, i: usize) -> Result<Poset> {
    if !p.is_bounded() {
        return Err(Error::UnboundedPoset);
    }
    if !p.is_ranked() {
        return Err(Error::UnrankedPoset);
    }
    let n = p.length() as usize;
    if i > n {
        return Err(Error::IndexOutOfRange(i, n + 1));
    }
    let top_label = p.label(p.unique_max().unwrap()).clone();
    let rees = rees_product(p, &chain(n + 1))?;
    let apex = rees
        .index_of(&Label::pair(top_label, Label::Int(i as i64)))
        .expect("(max, i) is an element of R(P)");
    Ok(rees.closed_lower_ideal(apex))
}

/// The map psi_i from R_i(P) to R_i(P*), sending (a, x_j) to (a, x_{i-j}).
/// Returns the two posets and the index map; the map is an
/// antiisomorphism.
pub struct PsiMap {
    pub domain: Poset,
    pub codomain: Poset,
    /// mapping[d] = index in codomain of the image of domain element d
    pub mapping: Vec<usize>,
}

pub fn psi_map(p: &Poset, i: usize) -> Result<PsiMap> {
    let domain = r_i_poset(p, i)?;
    let codomain = r_i_poset(&p.dual(), i)?;
    let mut mapping = Vec::with_capacity(domain.size());
    for d in 0..domain.size() {
        let Label::Pair(a, x) = domain.label(d) else {
            unreachable!("R_i(P) elements are pairs");
        };
        let Label::Int(j) = **x else {
            unreachable!("chain components are integers");
        };
        let image = Label::pair((**a).clone(), Label::Int(i as i64 - j));
        let c = codomain
            .index_of(&image)
            .expect("psi_i is well-defined into R_i(P*)");
        mapping.push(c);
    }
    Ok(PsiMap {
        domain,
        codomain,
        mapping,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_lattice, chain, tary_tree, whitney_numbers};
    use crate::poset::{is_order_antiisomorphism, poset_isomorphic};

    #[test]
    fn figure_one_shape() {
        // (B_3 minus empty set) * C_3: 3 + 6 + 3 = 12 elements
        let b3 = boolean_lattice(3).remove_bottom().unwrap();
        let r = rees_product(&b3, &chain(3)).unwrap();
        assert_eq!(r.size(), 12);
        assert_eq!(whitney_numbers(&r).unwrap(), vec![3, 6, 3]);
        assert_eq!(r.length(), 2);
    }

    #[test]
    fn rees_covers_match_order_route() {
        let cases: Vec<(Poset, Poset)> = vec![
            (boolean_lattice(3).remove_bottom().unwrap(), chain(3)),
            (boolean_lattice(2), tary_tree(2, 2)),
            (chain(3), chain(3)),
        ];
        for (p, q) in cases {
            let direct = rees_product(&p, &q).unwrap();
            let via_order = rees_product_via_order(&p, &q).unwrap();
            assert_eq!(direct.labels(), via_order.labels());
            assert_eq!(direct.covers(), via_order.covers());
        }
    }

    #[test]
    fn small_rees_products_by_hand() {
        // C_2 * C_1 is a 2-chain
        let r = rees_product(&chain(2), &chain(1)).unwrap();
        assert_eq!(r.size(), 2);
        assert!(poset_isomorphic(&r, &chain(2)));
        // C_2 * C_2: bottom (0,0) under the incomparable (1,0), (1,1)
        let r = rees_product(&chain(2), &chain(2)).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.covers().len(), 2);
        assert_eq!(r.maximal_elements().len(), 2);
    }

    #[test]
    fn b1_rees_tree_truncated_is_antichain() {
        for t in 1..=3 {
            let b1 = boolean_lattice(1);
            let r = rees_product(&b1, &tary_tree(t, 1)).unwrap();
            let r = r.remove_bottom().unwrap();
            assert_eq!(r.size(), t + 1);
            assert!(r.covers().is_empty());
        }
    }

    #[test]
    fn ideal_sizes_match_direct_enumeration() {
        // Count pairs (S, i) with S a proper nonempty subset, using the
        // full order conditions: i <= min(j, |S|-1) and i >= j - n + |S|.
        for n in 2..=5usize {
            let b = boolean_lattice(n);
            for j in 0..n {
                let ideal = ideal_ij(&b, j).unwrap();
                let mut expected = 0u64;
                for k in 1..n {
                    let choose = (1..=n as u64).product::<u64>()
                        / ((1..=k as u64).product::<u64>()
                            * (1..=(n - k) as u64).product::<u64>());
                    let lo = (j as i64 - n as i64 + k as i64).max(0);
                    let hi = (j as i64).min(k as i64 - 1);
                    if hi >= lo {
                        expected += choose * (hi - lo + 1) as u64;
                    }
                }
                assert_eq!(ideal.size() as u64, expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn ideal_i0_of_b3() {
        let ideal = ideal_ij(&boolean_lattice(3), 0).unwrap();
        assert_eq!(ideal.size(), 6);
        assert_eq!(ideal.length(), 1);
    }

    #[test]
    fn psi_is_antiisomorphism_and_involution() {
        let b3 = boolean_lattice(3);
        for i in 0..=3 {
            let psi = psi_map(&b3, i).unwrap();
            assert!(is_order_antiisomorphism(
                &psi.domain,
                &psi.codomain,
                &psi.mapping
            ));
            // psi_i on the dual followed by psi_i is the identity
            let psi_star = psi_map(&b3.dual(), i).unwrap();
            assert_eq!(psi.domain.labels(), psi_star.codomain.labels());
            for d in 0..psi.domain.size() {
                let image = psi.mapping[d];
                assert_eq!(psi_star.mapping[image], d);
            }
        }
    }

    #[test]
    fn r_i_plus_isomorphic_to_ideal_plus() {
        // The map (a, x_j) -> (a, j-1) identifies R_i(P)+ restricted to
        // positive chain positions with I_{i-1}(P)+.
        let b3 = boolean_lattice(3);
        for i in 1..=3usize {
            let r = r_i_poset(&b3, i).unwrap();
            let keep: Vec<usize> = (0..r.size())
                .filter(|&x| match r.label(x) {
                    Label::Pair(_, b) => !matches!(**b, Label::Int(0)),
                    _ => unreachable!(),
                })
                .collect();
            let r_plus = r.induced(&keep);
            let ideal_plus = ideal_ij(&b3, i - 1).unwrap().adjoin_top();
            // build the explicit mapping
            let mut mapping = Vec::new();
            for x in 0..r_plus.size() {
                let Label::Pair(a, b) = r_plus.label(x) else {
                    unreachable!()
                };
                let Label::Int(j) = **b else { unreachable!() };
                let target = Label::pair((**a).clone(), Label::Int(j - 1));
                let idx = match ideal_plus.index_of(&target) {
                    Some(idx) => idx,
                    // the apex (max, i-1) itself maps to the adjoined top
                    None => ideal_plus.index_of(&Label::Top).unwrap(),
                };
                mapping.push(idx);
            }
            assert!(crate::poset::is_order_isomorphism(
                &r_plus,
                &ideal_plus,
                &mapping
            ));
        }
    }
}
